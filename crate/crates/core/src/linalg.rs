//! Dense matrices over the coefficient field.
//!
//! Rank over a prime field uses ordinary Gaussian elimination on residues.
//! Over the rationals each row is scaled to integers and reduced with
//! fraction-free (Bareiss) elimination, so no fractions appear mid-run.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, nrows: usize, ncols: usize) -> Self {
        Matrix { field: field.clone(), nrows, ncols, data: vec![field.zero(); nrows * ncols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::Structural("ragged matrix rows".into()));
        }
        Ok(Matrix { field: field.clone(), nrows, ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(field: &FieldSpec, rows: &[Vec<i64>]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, rows).expect("rectangular input")
    }

    pub fn random<R: Rng + ?Sized>(field: &FieldSpec, nrows: usize, ncols: usize, rng: &mut R) -> Self {
        let data = (0..nrows * ncols).map(|_| field.random(rng)).collect();
        Matrix { field: field.clone(), nrows, ncols, data }
    }

    /// Random square matrix, redrawn until invertible.
    pub fn random_invertible<R: Rng + ?Sized>(field: &FieldSpec, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.nrows || self.field != other.field {
            return Err(AlgebraError::Structural("incompatible matrix product".into()));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.ncols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        if self.nrows == 0 || self.ncols == 0 {
            return 0;
        }
        match &self.field {
            FieldSpec::PrimeField { p } => {
                let mut rows: Vec<Vec<u64>> = (0..self.nrows)
                    .map(|i| self.row(i).iter().map(|s| match s { Scalar::Mod(v) => *v, _ => unreachable!() }).collect())
                    .collect();
                rank_mod_p(&mut rows, *p)
            }
            FieldSpec::Rationals => {
                let mut rows: Vec<Vec<BigInt>> = (0..self.nrows).map(|i| integral_row(self.row(i))).collect();
                rank_bareiss(&mut rows)
            }
        }
    }

    /// Gauss-Jordan inverse; `None` for singular or non-square matrices.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let f = &self.field;
        let mut a = self.clone();
        let mut inv = Self::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(a.get(r, col)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = f.inv(a.get(col, col)).ok()?;
            a.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for r in 0..n {
                if r == col || f.is_zero(a.get(r, col)) {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(i * self.ncols + c, j * self.ncols + c);
        }
    }

    fn scale_row(&mut self, i: usize, s: &Scalar) {
        for c in 0..self.ncols {
            let v = self.field.mul(self.get(i, c), s);
            self.set(i, c, v);
        }
    }

    /// row_target -= factor * row_source
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.ncols {
            let v = self.field.sub(self.get(target, c), &self.field.mul(factor, self.get(source, c)));
            self.set(target, c, v);
        }
    }
}

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Rank of a sparse matrix given by rows, by incremental row echelon form.
/// Rows are inserted sparsest first to limit fill-in.
pub fn sparse_rank(field: &FieldSpec, mut rows: Vec<SparseRow>) -> usize {
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(Vec::len);
    match field {
        FieldSpec::PrimeField { p } => sparse_rank_mod_p(to_residues(rows), *p).len(),
        FieldSpec::Rationals => sparse_rank_integral(to_integral(rows)).len(),
    }
}

/// Row echelon form of the span of `rows`: one row per pivot column, sorted
/// by pivot. Over `F_p` rows are monic; over `Q` they are primitive integer
/// vectors. The pivot columns are the leading columns of the row space.
pub fn sparse_echelon(field: &FieldSpec, rows: Vec<SparseRow>) -> Vec<SparseRow> {
    let rows: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    match field {
        FieldSpec::PrimeField { p } => {
            let mut out: Vec<_> = sparse_rank_mod_p(to_residues(rows), *p).into_iter().collect();
            out.sort_by_key(|(c, _)| *c);
            out.into_iter().map(|(_, r)| r.into_iter().map(|(c, v)| (c, Scalar::Mod(v))).collect()).collect()
        }
        FieldSpec::Rationals => {
            let mut out: Vec<_> = sparse_rank_integral(to_integral(rows)).into_iter().collect();
            out.sort_by_key(|(c, _)| *c);
            out.into_iter()
                .map(|(_, r)| r.into_iter().map(|(c, v)| (c, Scalar::Rat(BigRational::from_integer(v)))).collect())
                .collect()
        }
    }
}

fn to_residues(rows: Vec<SparseRow>) -> Vec<Vec<(usize, u64)>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|(c, s)| match s { Scalar::Mod(v) => (c, v), _ => unreachable!() }).collect())
        .collect()
}

fn to_integral(rows: Vec<SparseRow>) -> Vec<Vec<(usize, BigInt)>> {
    rows.into_iter()
        .map(|r| {
            let vals: Vec<Scalar> = r.iter().map(|(_, s)| s.clone()).collect();
            r.iter().map(|(c, _)| *c).zip(integral_row(&vals)).collect()
        })
        .collect()
}

fn sparse_rank_mod_p(rows: Vec<Vec<(usize, u64)>>, p: u64) -> HashMap<usize, Vec<(usize, u64)>> {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for mut row in rows {
        while let Some(&(lead, v)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => row = axpy_mod_p(&row, p - v, piv, p),
                None => {
                    let inv = pow_mod(v, p - 2, p);
                    for e in row.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots
}

/// a + s * b over F_p
fn axpy_mod_p(a: &[(usize, u64)], s: u64, b: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, s * b[j].1 % p));
            j += 1;
        } else {
            let v = (a[i].1 + s * b[j].1) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn sparse_rank_integral(rows: Vec<Vec<(usize, BigInt)>>) -> HashMap<usize, Vec<(usize, BigInt)>> {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for mut row in rows {
        make_primitive(&mut row);
        while let Some((lead, _)) = row.first() {
            match pivots.get(lead) {
                Some(piv) => {
                    let (pv, rv) = (&piv[0].1, &row[0].1);
                    let g = pv.gcd(rv);
                    let (a, b) = (pv / &g, rv / &g);
                    row = combine_integral(&row, &a, piv, &b);
                    make_primitive(&mut row);
                }
                None => {
                    pivots.insert(*lead, row);
                    break;
                }
            }
        }
    }
    pivots
}

/// a * x - b * y
fn combine_integral(x: &[(usize, BigInt)], a: &BigInt, y: &[(usize, BigInt)], b: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for e in row.iter_mut() {
            e.1 = &e.1 / &g;
        }
    }
}

fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                row[c] = (row[c] + (p - factor) * prow[c]) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Multiplies a row of rationals by the lcm of its denominators.
fn integral_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, s| match s {
        Scalar::Rat(r) => acc.lcm(r.denom()),
        _ => unreachable!(),
    });
    row.iter()
        .map(|s| match s {
            Scalar::Rat(r) => r.numer() * (&lcm / r.denom()),
            _ => unreachable!(),
        })
        .collect()
}

/// Fraction-free elimination; every division is exact.
fn rank_bareiss(rows: &mut [Vec<BigInt>]) -> usize {
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..ncols {
                let v = (&row[c] * &pv - &factor * &prow[c]) / &prev;
                row[c] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank by plain fraction arithmetic, used as an oracle for Bareiss.
    fn rank_with_fractions(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        let ncols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            for r in rank + 1..a.len() {
                let f = &a[r][col] / &a[rank][col];
                for c in col..ncols {
                    let v = &a[r][c] - &f * &a[rank][c];
                    a[r][c] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(&q, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let fp = FieldSpec::default();
        let m = Matrix::from_i64(&fp, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::zeros(&fp, 0, 4).rank(), 0);
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(&q, &[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&q, 3));
        let s = Matrix::from_i64(&q, &[vec![1, 1], vec![2, 2]]);
        assert!(s.inverse().is_none());
    }

    proptest! {
        #[test]
        fn bareiss_matches_fraction_oracle(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..6)) {
            let q = FieldSpec::rationals();
            prop_assert_eq!(Matrix::from_i64(&q, &rows).rank(), rank_with_fractions(&rows));
        }

        #[test]
        fn sparse_rank_matches_dense(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 6), 1..8)) {
            for field in [FieldSpec::rationals(), FieldSpec::default()] {
                let dense = Matrix::from_i64(&field, &rows);
                let sparse: Vec<SparseRow> = rows
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, field.from_i64(v))).collect())
                    .collect();
                prop_assert_eq!(sparse_rank(&field, sparse.clone()), dense.rank());
                let echelon = sparse_echelon(&field, sparse);
                prop_assert_eq!(echelon.len(), dense.rank());
                prop_assert!(echelon.windows(2).all(|w| w[0][0].0 < w[1][0].0));
            }
        }

        #[test]
        fn small_integer_rank_agrees_mod_p(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..5)) {
            // Entries are tiny, so no minor can vanish mod 32003 unless it vanishes over Q.
            let q = FieldSpec::rationals();
            let fp = FieldSpec::default();
            prop_assert_eq!(Matrix::from_i64(&q, &rows).rank(), Matrix::from_i64(&fp, &rows).rank());
        }
    }
}
