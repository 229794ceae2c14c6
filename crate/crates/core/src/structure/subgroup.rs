use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::fields::Field;

#[derive(Debug, Clone)]
pub struct SubgroupHandle<K: Field> {
    pub label: String,
    pub generators: Vec<AlgebraElement<K>>,
    /// The full element set, when enumerated.
    pub elements: Option<BTreeSet<AlgebraElement<K>>>,
    pub predicted_order: Option<BigUint>,
}

impl<K: Field> SubgroupHandle<K> {
    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(BTreeSet::len)
    }

    /// `None` unless both the enumeration and a prediction are present.
    pub fn prediction_holds(&self) -> Option<bool> {
        match (&self.elements, &self.predicted_order) {
            (Some(e), Some(p)) => Some(BigUint::from(e.len()) == *p),
            _ => None,
        }
    }

    /// Contains 1 and is closed under products and inverses.
    pub fn is_closed(&self) -> Option<bool> {
        let elems = self.elements.as_ref()?;
        let Some(first) = elems.iter().next() else {
            return Some(false);
        };
        if !elems.contains(&first.algebra().one()) {
            return Some(false);
        }
        for x in elems {
            match x.invert_unit() {
                Ok(inv) if elems.contains(&inv) => {}
                _ => return Some(false),
            }
            if elems.iter().any(|y| !elems.contains(&(x * y))) {
                return Some(false);
            }
        }
        Some(true)
    }

    pub fn with_prediction(mut self, order: BigUint) -> Self {
        self.predicted_order = Some(order);
        self
    }
}

/// Breadth-first product closure of `generators`.
///
/// Fails with `BoundExceeded` carrying the number of elements found so far
/// once more than `bound` elements appear.
pub fn closure<K: Field>(
    label: &str,
    generators: &[AlgebraElement<K>],
    bound: u128,
) -> Result<SubgroupHandle<K>> {
    let Some(first) = generators.first() else {
        return Err(Error::Precondition("closure needs at least one generator".into()));
    };
    let alg = first.algebra();
    for g in generators {
        if g.algebra() != alg {
            return Err(Error::ContextMismatch);
        }
        if !g.is_unit() {
            return Err(Error::NotAUnit);
        }
    }
    let one = alg.one();
    let mut seen = BTreeSet::from([one.clone()]);
    let mut queue = VecDeque::from([one]);
    // in a finite group right multiplication by generators reaches every element
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = &x * g;
            if seen.insert(y.clone()) {
                if seen.len() as u128 > bound {
                    return Err(Error::BoundExceeded {
                        bound,
                        partial: seen.len() as u128,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(SubgroupHandle {
        label: label.to_string(),
        generators: generators.to_vec(),
        elements: Some(seen),
        predicted_order: None,
    })
}
