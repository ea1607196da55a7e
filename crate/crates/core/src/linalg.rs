//! Exact dense linear algebra over the rationals.
//!
//! The workhorse is [`Echelon`], an incrementally built reduced row echelon
//! form kept fraction-free: every stored row is an integer vector equal to
//! `den` times the corresponding row of the rational RREF, where `den` is the
//! (signed) determinant of the pivot minor of the inserted vectors. All stored
//! integers are therefore minors of the input, and updates need only
//! multiplication and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{primitive_integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            entries
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Leading `k × k` principal submatrix.
    pub fn leading_principal(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.entries[i * k + j] = self.get(i, j).clone();
            }
        }
        m
    }
}

/// Fraction-free incremental RREF. See the module docs for the invariant.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    den: BigInt,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            den: BigInt::one(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `den·v − Σ v[p]·row_p`: zero exactly when `v` lies in the row space.
    fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = if self.den.is_one() {
            v.to_vec()
        } else {
            v.iter().map(|x| x * &self.den).collect()
        };
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = &v[p];
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= c * r;
                }
            }
        }
        out
    }

    /// Inserts an integer vector; returns whether it enlarged the row space.
    pub fn insert_integer(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        if self.is_full() || v.iter().all(Zero::is_zero) {
            return false;
        }
        let w = self.reduce(v);
        let Some(q) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let new_den = w[q].clone();
        for row in &mut self.rows {
            let c = row[q].clone();
            for (r, wj) in row.iter_mut().zip(&w) {
                let mut t = &*r * &new_den;
                if !c.is_zero() && !wj.is_zero() {
                    t -= &c * wj;
                }
                *r = t.div_floor(&self.den);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(pos, q);
        self.rows.insert(pos, w);
        self.den = new_den;
        true
    }

    pub fn insert(&mut self, v: &[Rational]) -> bool {
        self.insert_integer(&primitive_integer(v))
    }

    pub fn contains_integer(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Rational RREF with zero rows removed.
    pub fn to_matrix(&self) -> Matrix {
        let entries = self
            .rows
            .iter()
            .flat_map(|row| {
                row.iter()
                    .map(|x| Rational::new(x.clone(), self.den.clone()))
            })
            .collect();
        Matrix {
            rows: self.rows.len(),
            cols: self.cols,
            entries,
        }
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient_dim: self.cols,
            basis: self.to_matrix(),
        }
    }
}

/// Null space of the span of `rows` in `Q^cols`.
///
/// Rows are eliminated with the column order reversed. In that form the
/// kernel vector attached to a free column has its leftmost nonzero entry,
/// a one, at that column (in the original order) and zeros at every other
/// free column, so these vectors are already the canonical RREF basis.
pub fn kernel_of_rows<V: AsRef<[Rational]>>(
    cols: usize,
    rows: impl IntoIterator<Item = V>,
) -> Subspace {
    let mut e = Echelon::new(cols);
    for r in rows {
        let mut v = primitive_integer(r.as_ref());
        v.reverse();
        e.insert_integer(&v);
        if e.is_full() {
            break;
        }
    }
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).rev().filter(|&f| !is_pivot[f]).collect();
    let mut entries = vec![Rational::zero(); free.len() * cols];
    for (i, &f) in free.iter().enumerate() {
        let out = &mut entries[i * cols..(i + 1) * cols];
        out[cols - 1 - f] = Rational::one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if !row[f].is_zero() {
                out[cols - 1 - p] = -Rational::new(row[f].clone(), e.den.clone());
            }
        }
    }
    Subspace {
        ambient_dim: cols,
        basis: Matrix {
            rows: free.len(),
            cols,
            entries,
        },
    }
}

/// A linear subspace of `Q^ambient_dim`, stored as its canonical RREF basis so
/// that equality of subspaces is equality of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        contains(self, v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for b in self.basis_vectors() {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn rref(m: &Matrix) -> Matrix {
    let mut e = Echelon::new(m.cols());
    for r in m.row_iter() {
        e.insert(r);
    }
    let mut out = e.to_matrix();
    // Pad with zero rows so the result has the input's shape.
    out.entries.resize(m.rows() * m.cols(), Rational::zero());
    out.rows = m.rows();
    out
}

pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new(m.cols());
    for r in m.row_iter() {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

pub fn nullspace(m: &Matrix) -> Subspace {
    kernel_of_rows(m.cols(), m.row_iter())
}

pub fn span<V: AsRef<[Rational]>>(vectors: &[V], ambient_dim: usize) -> Result<Subspace> {
    let mut e = Echelon::new(ambient_dim);
    for v in vectors {
        let v = v.as_ref();
        if v.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        e.insert(v);
    }
    Ok(e.into_subspace())
}

pub fn contains(s: &Subspace, v: &[Rational]) -> Result<bool> {
    if v.len() != s.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim,
            found: v.len(),
        });
    }
    // Basis is in RREF: subtract the combination dictated by the pivot entries.
    let mut r = v.to_vec();
    for b in s.basis_vectors() {
        let p = b
            .iter()
            .position(|x| !x.is_zero())
            .expect("RREF rows are nonzero");
        let c = v[p].clone();
        if c.is_zero() {
            continue;
        }
        for (ri, bi) in r.iter_mut().zip(b) {
            if !bi.is_zero() {
                *ri -= &c * bi;
            }
        }
    }
    Ok(r.iter().all(Zero::is_zero))
}

/// Determinant by rational Gaussian elimination. Panics on non-square input.
pub fn determinant(m: &Matrix) -> Rational {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = m.row_iter().map(|r| r.to_vec()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Inverse by Gauss–Jordan elimination, `None` when singular. Panics on
/// non-square input.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows(), m.cols(), "inverse of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = m
        .row_iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &piv;
        }
        let pivot_row = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    let entries = a
        .into_iter()
        .flat_map(|row| row.into_iter().skip(n))
        .collect();
    Some(Matrix {
        rows: n,
        cols: n,
        entries,
    })
}

const MODULUS: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_mod(x: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let r = x.mod_floor(&m);
    r.to_u64().expect("residue fits in u64")
}

/// Rank of an integer matrix modulo the prime `2^61 − 1`.
///
/// A nonzero minor mod p is a nonzero integer minor, so this is a certified
/// lower bound on the rank over the rationals.
pub fn rank_mod_prime<V: AsRef<[BigInt]>>(rows: &[V], cols: usize) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for v in rows {
        if basis.len() == cols {
            break;
        }
        let mut w: Vec<u64> = v.as_ref().iter().map(reduce_mod).collect();
        for (row, &p) in basis.iter().zip(&pivots) {
            let c = w[p];
            if c == 0 {
                continue;
            }
            for (wj, rj) in w.iter_mut().zip(row) {
                if *rj != 0 {
                    *wj = (*wj + MODULUS - mulmod(c, *rj)) % MODULUS;
                }
            }
        }
        let Some(q) = w.iter().position(|&x| x != 0) else {
            continue;
        };
        let inv = powmod(w[q], MODULUS - 2);
        for x in w.iter_mut() {
            *x = mulmod(*x, inv);
        }
        for row in basis.iter_mut() {
            let c = row[q];
            if c == 0 {
                continue;
            }
            for (rj, wj) in row.iter_mut().zip(&w) {
                if *wj != 0 {
                    *rj = (*rj + MODULUS - mulmod(c, *wj)) % MODULUS;
                }
            }
        }
        basis.push(w);
        pivots.push(q);
    }
    basis.len()
}

/// True when every leading principal minor is positive.
pub fn is_positive_definite(m: &Matrix) -> bool {
    if !m.is_symmetric() {
        return false;
    }
    (1..=m.rows()).all(|k| determinant(&m.leading_principal(k)).is_positive())
}
