//! Exact integer and rational linear algebra: Hermite and Smith normal
//! forms, saturated lattices, rational kernels, and abelian invariants.
//!
//! All scalars are arbitrary precision (`num-bigint` / `num-rational`);
//! nothing in this module is allowed to overflow. Matrices are dense and
//! row-major, which is fine at the desk scale this crate targets
//! (dimensions well below 32).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision integer scalar.
pub type Int = BigInt;
/// Arbitrary-precision rational scalar, always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for small rational constants. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(Int::from(numer), Int::from(denom))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot parse rational from {input:?}")]
    BadRational { input: String },
}

/// Parse a rational from the `"p/q"` (or plain `"p"`) wire form.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::BadRational { input: s.to_owned() };
    let mut parts = s.splitn(2, '/');
    let numer: Int = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from(numer)),
        Some(d) => {
            let denom: Int = d.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Render a rational in the `"p/q"` wire form (`"p"` when integral).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Build from `i64` rows; convenient for literals in fixtures and tests.
    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| Int::from(v)).collect(),
        }
    }

    /// Build from big-integer rows. Panics if the rows are ragged.
    pub fn from_int_rows(cols: usize, rows: Vec<Vec<Int>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Int {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Int] {
        assert!(r < self.rows, "row out of bounds");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(Int::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.at(r, k) * other.at(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free Bareiss elimination. Panics on
    /// non-square input; use [`is_unimodular`] for the checked predicate.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.at(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, Int::zero());
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// row_a <- x*row_a + y*row_b, row_b <- z*row_a + w*row_b (old values).
    fn combine_rows(&mut self, a: usize, b: usize, x: &Int, y: &Int, z: &Int, w: &Int) {
        for c in 0..self.cols {
            let va = self.at(a, c).clone();
            let vb = self.at(b, c).clone();
            self.set(a, c, x * &va + y * &vb);
            self.set(b, c, z * &va + w * &vb);
        }
    }

    /// row_r <- row_r - q*row_s.
    fn row_sub_mul(&mut self, r: usize, s: usize, q: &Int) {
        for c in 0..self.cols {
            let v = self.at(r, c) - q * self.at(s, c);
            self.set(r, c, v);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// col_a <- x*col_a + y*col_b, col_b <- z*col_a + w*col_b (old values).
    fn combine_cols(&mut self, a: usize, b: usize, x: &Int, y: &Int, z: &Int, w: &Int) {
        for r in 0..self.rows {
            let va = self.at(r, a).clone();
            let vb = self.at(r, b).clone();
            self.set(r, a, x * &va + y * &vb);
            self.set(r, b, z * &va + w * &vb);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(Int::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row Hermite normal form with its unimodular transform.
///
/// Returns `(h, u)` with `u * a = h`, `det(u) = ±1`, and `h` canonical:
/// pivot entries positive, entries above each pivot reduced into
/// `[0, pivot)`, pivot columns strictly increasing, zero rows at the
/// bottom. Canonicity makes `h` (with zero rows dropped) a unique
/// representative of the row lattice of `a`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let (m, n) = (a.rows(), a.cols());
    let mut pr = 0;
    for pc in 0..n {
        if pr == m {
            break;
        }
        let Some(pivot_row) = (pr..m).find(|&r| !h.at(r, pc).is_zero()) else {
            continue;
        };
        h.swap_rows(pr, pivot_row);
        u.swap_rows(pr, pivot_row);
        for r in pr + 1..m {
            if h.at(r, pc).is_zero() {
                continue;
            }
            let a0 = h.at(pr, pc).clone();
            let b0 = h.at(r, pc).clone();
            let eg = a0.extended_gcd(&b0);
            // det [[x, y], [-b/g, a/g]] = (x*a + y*b)/g = 1, so the
            // combined row operation is unimodular.
            let qa = &a0 / &eg.gcd;
            let qb = &b0 / &eg.gcd;
            h.combine_rows(pr, r, &eg.x, &eg.y, &-&qb, &qa);
            u.combine_rows(pr, r, &eg.x, &eg.y, &-&qb, &qa);
        }
        if h.at(pr, pc).is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let pivot = h.at(pr, pc).clone();
        for r in 0..pr {
            let q = h.at(r, pc).div_floor(&pivot);
            if !q.is_zero() {
                h.row_sub_mul(r, pr, &q);
                u.row_sub_mul(r, pr, &q);
            }
        }
        pr += 1;
    }
    (h, u)
}

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix: the nonzero
/// diagonal of its Smith normal form, each factor positive. There exist
/// unimodular `p`, `q` with `p * a * q = diag(d, 0, ..)`.
pub fn snf(a: &IntMatrix) -> Vec<Int> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut t = 0;
    while t < rows.min(cols) {
        // Move a nonzero entry of the trailing submatrix to (t, t).
        let mut found = None;
        'search: for r in t..rows {
            for c in t..cols {
                if !m.at(r, c).is_zero() {
                    found = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((r, c)) = found else { break };
        m.swap_rows(t, r);
        m.swap_cols(t, c);

        loop {
            // Clear column t below the pivot.
            for r in t + 1..rows {
                if m.at(r, t).is_zero() {
                    continue;
                }
                let a0 = m.at(t, t).clone();
                let b0 = m.at(r, t).clone();
                let eg = a0.extended_gcd(&b0);
                let qa = &a0 / &eg.gcd;
                let qb = &b0 / &eg.gcd;
                m.combine_rows(t, r, &eg.x, &eg.y, &-&qb, &qa);
            }
            // Clear row t right of the pivot; this may refill the column.
            let mut row_dirty = false;
            for c in t + 1..cols {
                if m.at(t, c).is_zero() {
                    continue;
                }
                let a0 = m.at(t, t).clone();
                let b0 = m.at(t, c).clone();
                let eg = a0.extended_gcd(&b0);
                let qa = &a0 / &eg.gcd;
                let qb = &b0 / &eg.gcd;
                m.combine_cols(t, c, &eg.x, &eg.y, &-&qb, &qa);
                row_dirty = true;
            }
            if row_dirty && (t + 1..rows).any(|r| !m.at(r, t).is_zero()) {
                continue;
            }
            // Pivot divides everything in its row and column now; enforce
            // divisibility against the rest of the submatrix.
            let pivot = m.at(t, t).clone();
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !(m.at(r, c) % &pivot).is_zero());
            match offender {
                Some((r, _)) => {
                    // Fold the offending row into the pivot row; the next
                    // pass strictly shrinks |pivot|.
                    for c in t..cols {
                        let v = m.at(r, c) + m.at(t, c);
                        m.set(t, c, v);
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    (0..t)
        .map(|i| m.at(i, i).abs())
        .collect()
}

/// `true` iff `a` is square with determinant ±1.
pub fn is_unimodular(a: &IntMatrix) -> Result<bool, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(a.det().abs().is_one())
}

/// An integer lattice in Z^n, stored as the canonical row Hermite normal
/// form of a generating set with zero rows removed. Canonicity makes
/// structural equality coincide with lattice equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// Lattice generated by the rows of `gens` (cols = ambient dimension).
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let (h, _) = hnf(gens);
        let rows: Vec<Vec<Int>> =
            (0..h.rows()).filter(|&r| !h.is_zero_row(r)).map(|r| h.row(r).to_vec()).collect();
        Lattice { ambient_dim: gens.cols(), basis: IntMatrix::from_int_rows(gens.cols(), rows) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: IntMatrix::zero(0, ambient_dim) }
    }

    /// The full lattice Z^n.
    pub fn standard(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: IntMatrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim && self.basis == IntMatrix::identity(self.ambient_dim)
    }

    /// Smallest lattice containing both summands.
    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Lattice::from_generators(&IntMatrix::from_int_rows(self.ambient_dim, rows))
    }

    /// Membership test by back-substitution along the HNF pivots.
    pub fn contains(&self, v: &[Int]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut rem = v.to_vec();
        for r in 0..self.basis.rows() {
            let pc = (0..self.ambient_dim)
                .find(|&c| !self.basis.at(r, c).is_zero())
                .expect("basis rows are nonzero");
            if rem[pc].is_zero() {
                continue;
            }
            let (q, s) = rem[pc].div_rem(self.basis.at(r, pc));
            if !s.is_zero() {
                return false;
            }
            for c in 0..self.ambient_dim {
                rem[c] -= &q * self.basis.at(r, c);
            }
        }
        rem.iter().all(Int::is_zero)
    }

    /// Smallest saturated lattice containing this one: the integer points
    /// of the Q-span. Computed as a double integer kernel (kernels are
    /// saturated by construction). Idempotent.
    pub fn saturate(&self) -> Lattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let complement = integer_kernel(&self.basis);
        integer_kernel(complement.basis())
    }

    pub fn is_saturated(&self) -> bool {
        *self == self.saturate()
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice(dim {}, basis {:?})", self.ambient_dim, self.basis)
    }
}

/// Basis of the integer kernel `{x in Z^n : m * x = 0}` as a lattice in
/// Z^n (n = `m.cols()`). Integer kernels are always saturated.
pub fn integer_kernel(m: &IntMatrix) -> Lattice {
    // x * m^T = 0 for row vectors x; rows of u aligned with the zero rows
    // of h = u * m^T span exactly the kernel.
    let (h, u) = hnf(&m.transpose());
    let rows: Vec<Vec<Int>> =
        (0..h.rows()).filter(|&r| h.is_zero_row(r)).map(|r| u.row(r).to_vec()).collect();
    Lattice::from_generators(&IntMatrix::from_int_rows(m.cols(), rows))
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    /// Build from `(numer, denom)`-free `i64` rows. Panics if ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RatMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| Rational::from(Int::from(v))).collect(),
        }
    }

    pub fn from_rational_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RatMatrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        assert!(r < self.rows, "row out of bounds");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in r..self.cols {
                if *self.at(r, c) != -self.at(c, r).clone() {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Row-reduce a copy to echelon form; returns (rref, pivot columns).
    fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(pivot_row) = (pr..m.rows).find(|&r| !m.at(r, pc).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                m.entries.swap(pr * m.cols + c, pivot_row * m.cols + c);
            }
            let inv = m.at(pr, pc).clone();
            for c in 0..m.cols {
                let v = m.at(pr, c) / &inv;
                m.set(pr, c, v);
            }
            for r in 0..m.rows {
                if r == pr || m.at(r, pc).is_zero() {
                    continue;
                }
                let f = m.at(r, pc).clone();
                for c in 0..m.cols {
                    let v = m.at(r, c) - &f * m.at(pr, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(pivot_row) = (k..n).find(|&r| !m.at(r, k).is_zero()) else {
                return Rational::zero();
            };
            if pivot_row != k {
                for c in 0..n {
                    m.entries.swap(k * n + c, pivot_row * n + c);
                }
                det = -det;
            }
            let pivot = m.at(k, k).clone();
            det *= &pivot;
            for r in k + 1..n {
                if m.at(r, k).is_zero() {
                    continue;
                }
                let f = m.at(r, k) / &pivot;
                for c in k..n {
                    let v = m.at(r, c) - &f * m.at(k, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}

/// Basis of the right kernel `{x : a * x = 0}` over the rationals.
/// The basis has `cols - rank` vectors (one per free column).
pub fn kernel_basis(a: &RatMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = a.rref();
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); a.cols()];
            v[fc] = Rational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(pr, fc).clone();
            }
            v
        })
        .collect()
}

/// Invariants of a finitely generated abelian group: free rank plus the
/// torsion chain `d_1 | d_2 | ...` with every `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianInvariants { free_rank: rank, torsion: Vec::new() }
    }

    pub fn torsion_order(&self) -> Int {
        self.torsion.iter().product()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Abelian invariants of `Z^generators / (row space of relations)` via the
/// Smith normal form. `relations` must have `generators` columns.
pub fn abelian_invariants(generators: usize, relations: &IntMatrix) -> AbelianInvariants {
    assert_eq!(relations.cols(), generators, "relation arity mismatch");
    let d = snf(relations);
    AbelianInvariants {
        free_rank: generators - d.len(),
        torsion: d.into_iter().filter(|v| !v.is_one()).collect(),
    }
}
