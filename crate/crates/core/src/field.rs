//! Prime field arithmetic and dense linear algebra over `F_p`.
//!
//! Field elements are plain `u32` residues in `[0, p)`; every operation goes
//! through a [`PrimeField`] value that carries the modulus. Matrices are dense
//! and row-major. Pivoting is deterministic (first nonzero entry in row
//! order), so every routine here is reproducible bit for bit.

use serde::Serialize;

use crate::error::{Error, Result};

/// The modulus used when a session does not ask for another one.
pub const DEFAULT_MODULUS: u32 = 32003;

/// A residue in `[0, p)`. The modulus lives in the [`PrimeField`].
pub type Coeff = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Moduli are limited to primes below 2^16 so that a product of two
    /// residues plus a residue never overflows a `u64` accumulator.
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Coeff) -> Coeff {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        ((a as u64 * b as u64) % self.p as u64) as Coeff
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Coeff) -> Coeff {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        t.rem_euclid(self.p as i64) as Coeff
    }

    pub fn div(&self, a: Coeff, b: Coeff) -> Coeff {
        self.mul(a, self.inv(b))
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        v.rem_euclid(self.p as i64) as Coeff
    }

    /// Balanced representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: Coeff) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_MODULUS }
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

/// Output of row reduction: the reduced row echelon form and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<Coeff>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Coeff {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Coeff] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Coeff> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Coeff>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.p as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (x, &b) in acc.iter_mut().zip(other.row(k)) {
                    *x = (*x + a * b as u64) % p;
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.set(i, j, x as Coeff);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Result<Vec<Coeff>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let p = self.field.p as u64;
        Ok((0..self.rows)
            .map(|i| {
                let mut s = 0u64;
                for (&a, &b) in self.row(i).iter().zip(v) {
                    s = (s + a as u64 * b as u64) % p;
                }
                s as Coeff
            })
            .collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(m)
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form. Pivot search scans columns left to right
    /// and takes the first row (in row order) with a nonzero entry.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let p = f.p as u64;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    m.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            let (head, tail) = m.data.split_at_mut(r * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let eliminate = |row: &mut [Coeff]| {
                let factor = row[c];
                if factor == 0 {
                    return;
                }
                let neg = p - factor as u64;
                for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = ((*x as u64 + neg * y as u64) % p) as Coeff;
                }
            };
            head.chunks_mut(cols).for_each(eliminate);
            rest.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Rank through column operations: a column echelon form is built by
    /// sweeping rows top to bottom. Independent of [`Matrix::rref`].
    pub fn rank_by_columns(&self) -> usize {
        let f = self.field;
        let mut cols: Vec<Vec<Coeff>> = self.columns();
        let mut rank = 0;
        for i in 0..self.rows {
            let Some(piv) = (rank..cols.len()).find(|&j| cols[j][i] != 0) else {
                continue;
            };
            cols.swap(rank, piv);
            let inv = f.inv(cols[rank][i]);
            let pivot: Vec<Coeff> = cols[rank].iter().map(|&v| f.mul(v, inv)).collect();
            for (j, col) in cols.iter_mut().enumerate() {
                if j == rank || col[i] == 0 {
                    continue;
                }
                let factor = col[i];
                for (x, &y) in col.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
            cols[rank] = pivot;
            rank += 1;
        }
        rank
    }

    /// Basis of `{v : M v = 0}`, returned as the columns of a `cols x k`
    /// matrix with `k = cols - rank`. Each basis vector has a single 1 in a
    /// free column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Matrix {
        let Echelon { reduced, pivots } = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, t, f.neg(reduced.get(r, fc)));
            }
        }
        k
    }

    /// The pivot columns of `self`, which form a basis of its column space.
    pub fn column_space_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        let cols: Vec<Vec<Coeff>> = pivots.iter().map(|&j| self.column(j)).collect();
        Matrix::from_columns(self.field, self.rows, &cols)
    }

    pub fn column_space_membership(&self, v: &[Coeff]) -> Result<bool> {
        Ok(self.solve(v)?.is_some())
    }

    /// Some `x` with `M x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[Coeff]) -> Result<Option<Vec<Coeff>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]))?;
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = reduced.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

/// Incrementally maintained echelon basis of a subspace of `F_p^n`.
///
/// Each stored vector is normalized at its pivot and reduced against every
/// earlier vector, so sequential reduction in insertion order decides
/// membership.
#[derive(Clone, Debug)]
pub struct EchelonSpace {
    field: PrimeField,
    len: usize,
    basis: Vec<(usize, Vec<Coeff>)>,
}

impl EchelonSpace {
    pub fn new(field: PrimeField, len: usize) -> Self {
        Self { field, len, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    fn reduce_in_place(&self, v: &mut [Coeff]) {
        let p = self.field.p as u64;
        for (piv, b) in &self.basis {
            let c = v[*piv];
            if c == 0 {
                continue;
            }
            let neg = p - c as u64;
            for (x, &y) in v.iter_mut().zip(b).skip(*piv) {
                if y != 0 {
                    *x = ((*x as u64 + neg * y as u64) % p) as Coeff;
                }
            }
        }
    }

    pub fn reduce(&self, v: &[Coeff]) -> Vec<Coeff> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns `true` when it was independent of the current span.
    pub fn insert(&mut self, v: &[Coeff]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[piv]);
        for x in w.iter_mut().skip(piv) {
            *x = self.field.mul(*x, inv);
        }
        self.basis.push((piv, w));
        true
    }

    /// Pivot position of each stored vector, in insertion order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|(p, _)| *p)
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &Vec<Coeff>> {
        self.basis.iter().map(|(_, v)| v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn field_inverse_and_signed() {
        let f = f();
        for a in [1u32, 2, 3, 16001, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.to_signed(32002), -1);
        assert_eq!(f.from_i64(-1), 32002);
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn rank_examples() {
        let f = f();
        assert_eq!(Matrix::identity(f, 2).rank(), 2);
        assert_eq!(Matrix::zeros(f, 3, 4).rank(), 0);
        let m = Matrix::from_rows(f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_by_columns(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = f();
        assert_eq!(Matrix::identity(f, 2).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(f, 2, 2).kernel_basis().cols(), 2);
        let k = Matrix::from_rows(f, &[vec![1, 1]]).unwrap().kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![32002, 1]);
    }

    #[test]
    fn membership_examples() {
        let f = f();
        assert!(Matrix::identity(f, 3).column_space_membership(&[5, 0, 7]).unwrap());
        assert!(!Matrix::zeros(f, 2, 2).column_space_membership(&[1, 0]).unwrap());
        let m = Matrix::from_rows(f, &[vec![1], vec![2]]).unwrap();
        assert!(m.column_space_membership(&[2, 4]).unwrap());
        assert!(!m.column_space_membership(&[2, 5]).unwrap());
        assert!(m.column_space_membership(&[2]).is_err());
    }

    fn small_field() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u32..7, r * c).prop_map(move |data| Matrix {
                field: small_field(),
                rows: r,
                cols: c,
                data,
            })
        })
    }

    proptest! {
        #[test]
        fn rank_routes_agree(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.rank_by_columns());
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.cols() + m.rank(), m.cols());
            prop_assert!(m.mul(&k).unwrap().is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn solve_reproduces_rhs(m in arb_matrix(), seed in proptest::collection::vec(0u32..7, 7)) {
            let x: Vec<Coeff> = seed[..m.cols()].to_vec();
            let b = m.mul_vec(&x).unwrap();
            let sol = m.solve(&b).unwrap().expect("b is in the column space");
            prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
        }

        #[test]
        fn echelon_space_dim_is_rank(m in arb_matrix()) {
            let mut s = EchelonSpace::new(m.field(), m.rows());
            for c in m.columns() {
                s.insert(&c);
            }
            prop_assert_eq!(s.dim(), m.rank());
            for c in m.columns() {
                prop_assert!(s.contains(&c));
            }
        }
    }
}
