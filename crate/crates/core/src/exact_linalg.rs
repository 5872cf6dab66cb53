//! Exact integer linear algebra: rank, Smith normal form, and the
//! GCD-of-maximal-minors computation underlying every multiplicity.
//!
//! Everything here works on unbounded integers; no floating point is used
//! anywhere in this crate.

use std::fmt;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default upper bound on how many maximal-rank minors [`minor_gcd_oracle`]
/// will enumerate before refusing.
pub const DEFAULT_MINOR_CAP: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("cap-exceeded: {minors} maximal-rank minors exceed cap {cap}")]
    MinorCapExceeded { minors: u128, cap: u64 },
}

/// Dense matrix of unbounded integers, row-major. The empty matrix
/// (zero rows or zero columns) is legal and has rank 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n_rows: usize, n_cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(
            entries.len(),
            n_rows * n_cols,
            "entry count {} does not match {}x{}",
            entries.len(),
            n_rows,
            n_cols
        );
        IntMatrix {
            n_rows,
            n_cols,
            entries,
        }
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        IntMatrix {
            n_rows,
            n_cols,
            entries: vec![BigInt::zero(); n_rows * n_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Builds a matrix from columns, each of length `n_rows`.
    pub fn from_columns(n_rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let n_cols = columns.len();
        let mut m = Self::zeros(n_rows, n_cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n_rows, "column {} has wrong length", j);
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    /// Test-friendly constructor from i64 rows.
    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix::new(n_rows, n_cols, entries)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n_cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.n_cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n_rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Horizontal concatenation `[self | other]`. Row counts must agree.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n_rows, other.n_rows, "row counts differ");
        let mut m = IntMatrix::zeros(self.n_rows, self.n_cols + other.n_cols);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.n_cols {
                *m.at_mut(i, self.n_cols + j) = other.at(i, j).clone();
            }
        }
        m
    }

    /// Submatrix restricted to the given column indices, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n_rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.n_rows {
                *m.at_mut(i, jj) = self.at(i, j).clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n_cols {
            self.entries.swap(a * self.n_cols + j, b * self.n_cols + j);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows {
            let row = (0..self.n_cols)
                .map(|j| self.at(i, j).to_string())
                .join(" ");
            writeln!(f, "[{}]", row)?;
        }
        Ok(())
    }
}

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
///
/// The product d_1 * ... * d_k equals the GCD of all k x k minors of the
/// input matrix, for every k up to the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigUint>,
    pub rank: usize,
}

/// Rank over the rationals via fraction-free (Bareiss) elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.n_rows;
    let cols = a.n_cols;
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.at(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in (r + 1)..rows {
            for j in (col + 1)..cols {
                let num = a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j);
                // Exact by the Bareiss identity: num is prev times a minor.
                *a.at_mut(i, j) = num / &prev;
            }
            *a.at_mut(i, col) = BigInt::zero();
        }
        prev = a.at(r, col).clone();
        r += 1;
    }
    r
}

/// Determinant of a square matrix via Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.n_rows, m.n_cols, "determinant needs a square matrix");
    let n = m.n_rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a.at(i, k).is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                *a.at_mut(i, j) = num / &prev;
            }
            *a.at_mut(i, k) = BigInt::zero();
        }
        prev = a.at(k, k).clone();
    }
    let d = a.at(n - 1, n - 1).clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Smith normal form restricted to the invariant factors.
///
/// Diagonalizes a working copy with integer row/column operations, then
/// repairs the divisibility chain with gcd/lcm exchanges. Both steps
/// preserve the GCDs of k x k minors, which is what the factors encode.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let rows = a.n_rows;
    let cols = a.n_cols;
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // Move any nonzero entry of the active submatrix to the pivot slot.
        let Some((pi, pj)) = find_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut swapped = false;
            // Reduce the pivot column with euclidean row steps.
            for i in (t + 1)..rows {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = a.at(i, t) / a.at(t, t);
                if !q.is_zero() {
                    row_sub(&mut a, i, t, &q);
                }
                if !a.at(i, t).is_zero() {
                    a.swap_rows(i, t);
                    swapped = true;
                }
            }
            // Same for the pivot row with column steps.
            for j in (t + 1)..cols {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = a.at(t, j) / a.at(t, t);
                if !q.is_zero() {
                    col_sub(&mut a, j, t, &q);
                }
                if !a.at(t, j).is_zero() {
                    swap_cols(&mut a, j, t);
                    swapped = true;
                }
            }
            if swapped {
                continue;
            }
            let col_clear = ((t + 1)..rows).all(|i| a.at(i, t).is_zero());
            let row_clear = ((t + 1)..cols).all(|j| a.at(t, j).is_zero());
            if col_clear && row_clear {
                break;
            }
        }
        diag.push(a.at(t, t).abs());
        t += 1;
    }
    // Repair the divisibility chain: gcd/lcm exchanges keep all products
    // of k smallest factors equal to the k x k minor GCDs.
    let len = diag.len();
    for i in 0..len {
        for j in (i + 1)..len {
            let g = diag[i].gcd(&diag[j]);
            let l = (&diag[i] * &diag[j]) / &g;
            diag[i] = g;
            diag[j] = l;
        }
    }
    let factors: Vec<BigUint> = diag
        .into_iter()
        .map(|d| d.to_biguint().expect("invariant factors are positive"))
        .collect();
    SnfResult {
        rank: factors.len(),
        invariant_factors: factors,
    }
}

/// Cardinality of the torsion subgroup of the cokernel `Z^n / col-span(M)`:
/// the product of all invariant factors, 1 for a zero-rank matrix.
pub fn torsion_order(m: &IntMatrix) -> BigUint {
    smith_normal_form(m).invariant_factors.iter().product()
}

/// Independent oracle for [`torsion_order`]: enumerates every minor of
/// order `rank(m)` directly and returns the GCD of their absolute values
/// (1 for a zero-rank matrix). Refuses when the number of minors exceeds
/// `cap`.
pub fn minor_gcd_oracle_capped(m: &IntMatrix, cap: u64) -> Result<BigUint, LinalgError> {
    let r = rank(m);
    if r == 0 {
        return Ok(BigUint::one());
    }
    let minors = binomial(m.n_rows as u128, r as u128) * binomial(m.n_cols as u128, r as u128);
    if minors > cap as u128 {
        return Err(LinalgError::MinorCapExceeded { minors, cap });
    }
    let mut g = BigUint::zero();
    for row_set in (0..m.n_rows).combinations(r) {
        for col_set in (0..m.n_cols).combinations(r) {
            let mut sub = IntMatrix::zeros(r, r);
            for (ii, &i) in row_set.iter().enumerate() {
                for (jj, &j) in col_set.iter().enumerate() {
                    *sub.at_mut(ii, jj) = m.at(i, j).clone();
                }
            }
            let d = determinant(&sub).abs().to_biguint().unwrap();
            g = g.gcd(&d);
        }
    }
    debug_assert!(!g.is_zero(), "a rank-r matrix has a nonzero r x r minor");
    Ok(g)
}

/// [`minor_gcd_oracle_capped`] with the default cap.
pub fn minor_gcd_oracle(m: &IntMatrix) -> Result<BigUint, LinalgError> {
    minor_gcd_oracle_capped(m, DEFAULT_MINOR_CAP)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn find_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    for i in t..a.n_rows {
        for j in t..a.n_cols {
            if !a.at(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn swap_cols(a: &mut IntMatrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..a.n_rows {
        a.entries.swap(i * a.n_cols + x, i * a.n_cols + y);
    }
}

/// row[i] -= q * row[t]
fn row_sub(a: &mut IntMatrix, i: usize, t: usize, q: &BigInt) {
    for j in 0..a.n_cols {
        let delta = q * a.at(t, j);
        *a.at_mut(i, j) -= delta;
    }
}

/// col[j] -= q * col[t]
fn col_sub(a: &mut IntMatrix, j: usize, t: usize, q: &BigInt) {
    for i in 0..a.n_rows {
        let delta = q * a.at(i, t);
        *a.at_mut(i, j) -= delta;
    }
}
