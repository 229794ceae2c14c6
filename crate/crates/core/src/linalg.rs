//! Exact dense linear algebra over any [`Field`].

use crate::error::{Error, Result};
use crate::fields::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon<K: Field> {
    pub matrix: Matrix<K>,
    pub pivots: Vec<usize>,
}

impl<K: Field> Echelon<K> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(field: &K, cols: usize, rows: &[Vec<K::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &K, rows: usize, columns: &[Vec<K::Elem>]) -> Result<Self> {
        Ok(Self::from_rows(field, rows, columns)?.transpose())
    }

    /// Convenience constructor from integers, reduced into the field.
    pub fn from_ints(field: &K, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<K::Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        Self::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> K::Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[K::Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok(self
            .rows()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan elimination restricted to the first `limit` columns.
    fn eliminate(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if f.is_zero(factor) {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Echelon<K> {
        let mut m = self.clone();
        let pivots = m.eliminate(m.cols);
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Square and of full rank; forward elimination only, consuming the matrix.
    pub fn into_is_invertible(mut self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let f = self.field.clone();
        let n = self.rows;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !f.is_zero(self.get(i, c))) else {
                return false;
            };
            self.swap_rows(c, pr);
            let inv = f.inv(self.get(c, c)).expect("pivot is nonzero");
            for i in c + 1..n {
                let factor = f.mul(self.get(i, c), inv);
                if f.is_zero(factor) {
                    continue;
                }
                for j in c + 1..n {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(c, j)));
                    self.set(i, j, v);
                }
            }
        }
        true
    }

    /// Null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace<K> {
        let ech = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let vectors: Vec<Vec<K::Elem>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = f.neg(ech.matrix.get(r, fc));
                }
                v
            })
            .collect();
        Subspace::span(f, self.cols, &vectors).expect("kernel vectors have ambient length")
    }

    /// One solution of `M v = rhs` (free variables zero), or `None` when inconsistent.
    pub fn solve(&self, rhs: &[K::Elem]) -> Result<Option<Vec<K::Elem>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let f = &self.field;
        let mut aug = Self::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, rhs[i]);
        }
        let pivots = aug.eliminate(self.cols);
        let rank = pivots.len();
        if (rank..self.rows).any(|i| !f.is_zero(aug.get(i, self.cols))) {
            return Ok(None);
        }
        let mut v = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = aug.get(r, self.cols);
        }
        Ok(Some(v))
    }
}

/// A subspace of `K^ambient`, stored as a basis in reduced row-echelon form.
///
/// The scalar field is the type parameter: `Subspace<PrimeField>` is an
/// `F_p`-subspace, `Subspace<GaloisField>` an `F`-subspace.
#[derive(Debug, Clone)]
pub struct Subspace<K: Field> {
    ambient: usize,
    basis: Matrix<K>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: &K, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &K, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: &K, ambient: usize, vectors: &[Vec<K::Elem>]) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix<K>) -> Self {
        let ech = m.rref();
        let rank = ech.rank();
        let basis = Matrix {
            field: m.field.clone(),
            rows: rank,
            cols: m.cols,
            data: ech.matrix.data[..rank * m.cols].to_vec(),
        };
        Self {
            ambient: m.cols,
            basis,
            pivots: ech.pivots,
        }
    }

    pub fn field(&self) -> &K {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<K> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<K::Elem>> {
        self.basis.rows().map(|r| r.to_vec()).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::ContextMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[K::Elem]) -> Result<Option<Vec<K::Elem>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let f = self.field();
        // in RREF the coordinate on row r is the entry of v at pivot r
        let coords: Vec<K::Elem> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut rebuilt = vec![f.zero(); self.ambient];
        for (r, &c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (j, &b) in self.basis.row(r).iter().enumerate() {
                rebuilt[j] = f.add(rebuilt[j], f.mul(c, b));
            }
        }
        Ok((rebuilt == v).then_some(coords))
    }

    pub fn contains(&self, v: &[K::Elem]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        for r in self.basis.rows() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact equality; RREF bases are canonical.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.pivots == other.pivots && self.basis.data == other.basis.data)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field().clone();
        let (k, m) = (self.dim(), other.dim());
        if k == 0 || m == 0 {
            return Ok(Self::zero(&f, self.ambient));
        }
        // columns s_1..s_k, -t_1..-t_m; kernel vectors (x, y) give sum x_i s_i
        let mut cols: Vec<Vec<K::Elem>> = self.basis_vectors();
        cols.extend(
            other
                .basis
                .rows()
                .map(|r| r.iter().map(|&x| f.neg(x)).collect::<Vec<_>>()),
        );
        let ker = Matrix::from_columns(&f, self.ambient, &cols)?.kernel();
        let vectors: Vec<Vec<K::Elem>> = ker
            .basis
            .rows()
            .map(|coef| {
                let mut v = vec![f.zero(); self.ambient];
                for (i, &c) in coef[..k].iter().enumerate() {
                    for (j, &b) in self.basis.row(i).iter().enumerate() {
                        v[j] = f.add(v[j], f.mul(c, b));
                    }
                }
                v
            })
            .collect();
        Self::span(&f, self.ambient, &vectors)
    }
}
