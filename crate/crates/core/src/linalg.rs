//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers or rationals:
//! Smith normal form with its unimodular transformations, cokernels of
//! integer matrices as finitely generated abelian groups, and signatures of
//! rational symmetric bilinear forms by congruence diagonalization.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        for col in columns {
            if col.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal<I: IntoIterator<Item = BigInt>>(diag: I) -> Self {
        let diag: Vec<BigInt> = diag.into_iter().collect();
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * &m[n - 1][n - 1])
    }

    /// Basis of the rational kernel, each vector scaled to a primitive integer vector.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let q: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| self.row(r).iter().cloned().map(BigRational::from_integer).collect())
            .collect();
        rational_kernel(q, self.cols)
            .into_iter()
            .map(|v| primitive_integer_vector(&v))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.cols - self.kernel_basis().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.entries[src * self.cols + c] * k;
            self.entries[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.entries[r * self.cols + src] * k;
            self.entries[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let e = &mut self.entries[r * self.cols + c];
            *e = -std::mem::take(e);
        }
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`smith_normal_form`]: `d = u * a * v` with `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Diagonal of `d`, length `min(rows, cols)`; nonnegative, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

fn smallest_nonzero(d: &IntegerMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in from..d.rows() {
        for c in from..d.cols() {
            let e = d.get(r, c);
            if e.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if d.get(br, bc).abs() <= e.abs() => {}
                _ => best = Some((r, c)),
            }
            if e.abs().is_one() {
                return best;
            }
        }
    }
    best
}

/// Smith normal form by elementary row and column operations.
///
/// The pivot is always the entry of least absolute value in the trailing
/// block, so every remainder step strictly shrinks it and the loop ends.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pr, pc)) = smallest_nonzero(&d, t) else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let pivot = d.get(t, t).clone();
            let mut dirty = false;
            for r in t + 1..m {
                let q = -(d.get(r, t) / &pivot);
                d.add_row_multiple(r, t, &q);
                u.add_row_multiple(r, t, &q);
                dirty |= !d.get(r, t).is_zero();
            }
            for c in t + 1..n {
                let q = -(d.get(t, c) / &pivot);
                d.add_col_multiple(c, t, &q);
                v.add_col_multiple(c, t, &q);
                dirty |= !d.get(t, c).is_zero();
            }
            if dirty {
                continue;
            }

            // Row and column are clear; the pivot must also divide the rest.
            let offender = (t + 1..m).find(|&r| {
                (t + 1..n).any(|c| !d.get(r, c).is_multiple_of(&pivot))
            });
            match offender {
                Some(r) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, r, &one);
                    u.add_row_multiple(t, r, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

/// Finitely generated abelian group `Z^rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}` in
/// invariant-factor form: every `d_i >= 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Direct sum of cyclic groups `Z_{orders[i]}` plus `Z^free_rank`.
    ///
    /// Orders are arbitrary: `0` means `Z`, `±1` means trivial, and the
    /// rest are regrouped into invariant factors.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(free_rank: usize, orders: I) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().map(|o| o.abs()).collect();
        if orders.is_empty() {
            return Self::free(free_rank);
        }
        let n = orders.len();
        let snf = smith_normal_form(&IntegerMatrix::diagonal(orders));
        let group = Self::from_smith(n, &snf);
        Self {
            free_rank: group.free_rank + free_rank,
            torsion: group.torsion,
        }
    }

    fn from_smith(rows: usize, snf: &SmithForm) -> Self {
        let factors = snf.invariant_factors();
        let rank = factors.iter().filter(|d| !d.is_zero()).count();
        Self {
            free_rank: rows - rank,
            torsion: factors.into_iter().filter(|d| d > &BigInt::one()).collect(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Order of the torsion subgroup (1 when torsion-free).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic_orders(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Cokernel `Z^rows / (column span of a)`.
pub fn cokernel(a: &IntegerMatrix) -> AbelianGroup {
    AbelianGroup::from_smith(a.rows(), &smith_normal_form(a))
}

/// Symmetric bilinear form with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSymmetricForm {
    dimension: usize,
    entries: Vec<BigRational>,
}

impl RationalSymmetricForm {
    /// Row-major `dimension x dimension` entries; rejects asymmetric input.
    pub fn new(dimension: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != dimension * dimension {
            return Err(Error::LengthMismatch {
                expected: dimension * dimension,
                found: entries.len(),
            });
        }
        for r in 0..dimension {
            for c in r + 1..dimension {
                if entries[r * dimension + c] != entries[c * dimension + r] {
                    return Err(Error::Asymmetric { row: r, col: c });
                }
            }
        }
        Ok(Self { dimension, entries })
    }

    /// `(B + Bᵀ) / 2` for an arbitrary square bilinear form `B`.
    pub fn symmetrize(dimension: usize, entries: &[BigRational]) -> Result<Self> {
        if entries.len() != dimension * dimension {
            return Err(Error::LengthMismatch {
                expected: dimension * dimension,
                found: entries.len(),
            });
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let sym = (0..dimension * dimension)
            .map(|i| {
                let (r, c) = (i / dimension, i % dimension);
                (&entries[r * dimension + c] + &entries[c * dimension + r]) / &two
            })
            .collect();
        Ok(Self {
            dimension,
            entries: sym,
        })
    }

    pub fn from_integer_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let dimension = rows.len();
        let mut entries = Vec::with_capacity(dimension * dimension);
        for row in rows {
            let row = row.as_ref();
            if row.len() != dimension {
                return Err(Error::LengthMismatch {
                    expected: dimension,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))));
        }
        Self::new(dimension, entries)
    }

    pub fn zero(dimension: usize) -> Self {
        Self {
            dimension,
            entries: vec![BigRational::zero(); dimension * dimension],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.dimension + c]
    }

    /// `Pᵀ Q P` for a row-major `dimension x dimension` matrix `P`.
    pub fn congruent(&self, p: &[BigRational]) -> Self {
        let n = self.dimension;
        assert_eq!(p.len(), n * n);
        let qp: Vec<BigRational> = (0..n * n)
            .map(|i| {
                let (r, c) = (i / n, i % n);
                (0..n).map(|k| self.get(r, k) * &p[k * n + c]).sum()
            })
            .collect();
        let entries = (0..n * n)
            .map(|i| {
                let (r, c) = (i / n, i % n);
                (0..n).map(|k| &p[k * n + r] * &qp[k * n + c]).sum()
            })
            .collect();
        Self {
            dimension: n,
            entries,
        }
    }
}

/// Signature (#positive − #negative) by symmetric Gaussian elimination.
///
/// When every remaining diagonal entry is zero but some off-diagonal `q_ij`
/// is not, adding basis vector `j` to `i` makes the new diagonal entry
/// `2 q_ij` nonzero.
pub fn form_signature(form: &RationalSymmetricForm) -> i64 {
    let n = form.dimension;
    let mut q: Vec<Vec<BigRational>> = (0..n)
        .map(|r| (0..n).map(|c| form.get(r, c).clone()).collect())
        .collect();
    let mut signature = 0i64;
    let mut active: Vec<usize> = (0..n).collect();

    while !active.is_empty() {
        let pivot = match active.iter().copied().find(|&i| !q[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let pair = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !q[i][j].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                // e_i <- e_i + e_j
                for k in 0..n {
                    let v = q[j][k].clone();
                    q[i][k] += v;
                }
                for k in 0..n {
                    let v = q[k][j].clone();
                    q[k][i] += v;
                }
                i
            }
        };
        let p = q[pivot][pivot].clone();
        if p.is_positive() {
            signature += 1;
        } else {
            signature -= 1;
        }
        active.retain(|&i| i != pivot);
        for &i in &active {
            if q[i][pivot].is_zero() {
                continue;
            }
            let f = &q[i][pivot] / &p;
            for &j in &active {
                let v = &f * &q[pivot][j];
                q[i][j] -= v;
            }
        }
    }
    signature
}

/// Rational kernel basis of an `m x n` rational matrix given as rows.
pub(crate) fn rational_kernel(mut m: Vec<Vec<BigRational>>, n: usize) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..n {
                    let v = &f * &m[r][k];
                    m[i][k] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); n];
            v[fc] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][fc].clone();
            }
            v
        })
        .collect()
}

fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}
