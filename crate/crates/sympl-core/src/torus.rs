//! Exact points of the standard torus (R/Z)^k, the exponential from the
//! rational Lie algebra, element orders, and subtori.
//!
//! Torus coordinates are restricted to rationals throughout: every worked
//! example is rational, and rationality keeps orders finite and orbit
//! problems decidable. A subtorus is identified with the saturated lattice
//! spanning its Lie algebra, which is a unique representative.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{integer_kernel, Int, IntMatrix, Lattice, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("torus dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient torus mismatch: expected dimension {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
}

/// The standard torus T = (R/Z)^k with integral lattice Z^k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Torus {
    dim: usize,
}

impl Torus {
    pub fn new(dim: usize) -> Result<Self, TorusError> {
        if dim == 0 {
            return Err(TorusError::ZeroDimension);
        }
        Ok(Torus { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> TorusElement {
        TorusElement::identity(self.dim)
    }

    /// Exponential map from the rational Lie algebra: coordinatewise
    /// reduction mod 1, so `exp(v + m) = exp(v)` for integer `m`.
    pub fn exp(&self, v: &[Rational]) -> Result<TorusElement, TorusError> {
        if v.len() != self.dim {
            return Err(TorusError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(TorusElement::exp(v))
    }
}

/// A rational point of (R/Z)^k, with every coordinate normalized into
/// [0, 1). Normalization makes equality and hashing structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusElement {
    coords: Vec<Rational>,
}

fn fract_mod_one(v: &Rational) -> Rational {
    v - Rational::from(v.floor().to_integer())
}

impl TorusElement {
    pub fn identity(dim: usize) -> Self {
        TorusElement { coords: vec![Rational::zero(); dim] }
    }

    /// Reduce a rational vector coordinatewise mod 1.
    pub fn exp(v: &[Rational]) -> Self {
        TorusElement { coords: v.iter().map(fract_mod_one).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.dim(), other.dim(), "torus dimension mismatch");
        TorusElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| fract_mod_one(&(a + b)))
                .collect(),
        }
    }

    pub fn neg(&self) -> TorusElement {
        TorusElement { coords: self.coords.iter().map(|a| fract_mod_one(&-a)).collect() }
    }

    pub fn sub(&self, other: &TorusElement) -> TorusElement {
        self.add(&other.neg())
    }

    /// Integer scaling n*t in the torus group.
    pub fn scale(&self, n: &Int) -> TorusElement {
        let f = Rational::from(n.clone());
        TorusElement { coords: self.coords.iter().map(|a| fract_mod_one(&(a * &f))).collect() }
    }

    pub fn scale_i64(&self, n: i64) -> TorusElement {
        self.scale(&Int::from(n))
    }

    /// Smallest n >= 1 with n*t = identity: the lcm of the reduced
    /// coordinate denominators.
    pub fn order(&self) -> Int {
        self.coords.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()))
    }
}

/// A subtorus of (R/Z)^k, represented by the saturated lattice of its Lie
/// algebra inside Z^k. Equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subtorus {
    ambient_dim: usize,
    lattice: Lattice,
}

impl Subtorus {
    /// Subtorus spanned by the given lattice; the lattice is saturated so
    /// the representative is unique.
    pub fn from_lattice(lattice: Lattice) -> Self {
        Subtorus { ambient_dim: lattice.ambient_dim(), lattice: lattice.saturate() }
    }

    /// Subtorus spanned by integer direction rows.
    pub fn from_generators(gens: &IntMatrix) -> Self {
        Subtorus::from_lattice(Lattice::from_generators(gens))
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        Subtorus { ambient_dim, lattice: Lattice::zero(ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subtorus { ambient_dim, lattice: Lattice::standard(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Whether a rational torus point lies on this subtorus, i.e. whether
    /// its coordinate vector lies in (Q-span of the lattice) + Z^k.
    ///
    /// The span is cut out by the integer orthogonal-complement lattice K:
    /// a vector u lies in span + Z^k iff K u is an integer combination of
    /// the columns of K.
    pub fn contains(&self, t: &TorusElement) -> bool {
        assert_eq!(t.dim(), self.ambient_dim, "torus dimension mismatch");
        if self.is_full() {
            return true;
        }
        let complement = integer_kernel(self.lattice.basis());
        let k = complement.basis();
        // Image of t under u -> K u, with exact rationals.
        let image: Vec<Rational> = (0..k.rows())
            .map(|r| {
                k.row(r)
                    .iter()
                    .zip(t.coords())
                    .map(|(a, b)| Rational::from(a.clone()) * b)
                    .sum()
            })
            .collect();
        if image.iter().any(|v| !v.denom().is_one()) {
            return false;
        }
        let image: Vec<Int> = image.iter().map(|v| v.numer().clone()).collect();
        let column_lattice = Lattice::from_generators(&k.transpose());
        column_lattice.contains(&image)
    }
}

/// Smallest subtorus containing every part: the saturation of the sum of
/// their lattices. The empty list yields the trivial subtorus.
pub fn generated_subtorus(ambient_dim: usize, parts: &[Subtorus]) -> Result<Subtorus, TorusError> {
    let mut sum = Lattice::zero(ambient_dim);
    for p in parts {
        if p.ambient_dim() != ambient_dim {
            return Err(TorusError::AmbientMismatch {
                expected: ambient_dim,
                got: p.ambient_dim(),
            });
        }
        sum = sum.sum(p.lattice());
    }
    Ok(Subtorus::from_lattice(sum))
}

/// The finite subgroup of (R/Z)^k generated by rational points, in a
/// canonical scaled-integer form: the lattice `denom * (subgroup + Z^k)`
/// where `denom` is the lcm of the element orders.
///
/// For abelian groups the lcm of generator orders equals the exponent of
/// the generated subgroup, so `denom` does not depend on the generating
/// set and structural equality decides subgroup equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledLattice {
    pub denom: Int,
    pub lattice: Lattice,
}

/// Lattice in (1/N)Z^k generated by the given elements together with Z^k;
/// see [`ScaledLattice`] for the canonical form.
pub fn element_subgroup_lattice(
    dim: usize,
    elems: &[TorusElement],
) -> Result<ScaledLattice, TorusError> {
    let mut denom = Int::one();
    for e in elems {
        if e.dim() != dim {
            return Err(TorusError::DimensionMismatch { expected: dim, got: e.dim() });
        }
        denom = denom.lcm(&e.order());
    }
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(elems.len() + dim);
    for e in elems {
        rows.push(
            e.coords()
                .iter()
                .map(|c| {
                    let scaled = c * Rational::from(denom.clone());
                    debug_assert!(scaled.denom().is_one());
                    scaled.numer().clone()
                })
                .collect(),
        );
    }
    for i in 0..dim {
        let mut row = vec![Int::zero(); dim];
        row[i] = denom.clone();
        rows.push(row);
    }
    Ok(ScaledLattice {
        denom,
        lattice: Lattice::from_generators(&IntMatrix::from_int_rows(dim, rows)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn elem(coords: &[(i64, i64)]) -> TorusElement {
        TorusElement::exp(&coords.iter().map(|&(p, q)| rat(p, q)).collect::<Vec<_>>())
    }

    fn random_element(rng: &mut ChaCha8Rng, dim: usize, max_denom: i64) -> TorusElement {
        let coords: Vec<Rational> = (0..dim)
            .map(|_| {
                let q = rng.gen_range(1..=max_denom);
                let p = rng.gen_range(-2 * q..=2 * q);
                rat(p, q)
            })
            .collect();
        TorusElement::exp(&coords)
    }

    #[test]
    fn exp_reduces_mod_one() {
        let t = Torus::new(2).unwrap();
        assert_eq!(t.exp(&[rat(1, 1), rat(0, 1)]).unwrap(), t.identity());
        assert_eq!(t.exp(&[rat(-1, 2), rat(0, 1)]).unwrap(), elem(&[(1, 2), (0, 1)]));
        assert_eq!(t.exp(&[rat(1, 3), rat(5, 4)]).unwrap(), elem(&[(1, 3), (1, 4)]));
        assert!(matches!(
            t.exp(&[rat(1, 2)]),
            Err(TorusError::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn exp_kills_exactly_the_integral_lattice() {
        let t = Torus::new(3).unwrap();
        for v in [[1, 0, 0], [0, -2, 5], [7, 7, 7]] {
            let v: Vec<Rational> = v.iter().map(|&n| rat(n, 1)).collect();
            assert!(t.exp(&v).unwrap().is_identity());
        }
        assert!(!t.exp(&[rat(1, 2), rat(0, 1), rat(0, 1)]).unwrap().is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(elem(&[(0, 1), (0, 1)]).order(), int(1));
        assert_eq!(elem(&[(1, 2), (0, 1)]).order(), int(2));
        // Brute-force oracle: smallest n with n*t = 0.
        let t = elem(&[(1, 3), (1, 6)]);
        let mut brute = 1;
        while !t.scale_i64(brute).is_identity() {
            brute += 1;
        }
        assert_eq!(brute, 6);
        assert_eq!(t.order(), int(6));
    }

    #[test]
    fn order_properties_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t = random_element(&mut rng, 2, 9);
            let n = t.order();
            assert!(t.scale(&n).is_identity());
            if n > Int::one() {
                assert!(!t.scale(&(&n - 1)).is_identity());
            }
        }
    }

    #[test]
    fn exp_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let t = Torus::new(3).unwrap();
        for _ in 0..100 {
            let u: Vec<Rational> =
                (0..3).map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))).collect();
            let v: Vec<Rational> =
                (0..3).map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))).collect();
            let sum: Vec<Rational> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
            assert_eq!(
                t.exp(&sum).unwrap(),
                t.exp(&u).unwrap().add(&t.exp(&v).unwrap())
            );
        }
    }

    #[test]
    fn generated_subtorus_examples() {
        let e1 = Subtorus::from_generators(&IntMatrix::from_rows(&[vec![1, 0]]));
        let e2 = Subtorus::from_generators(&IntMatrix::from_rows(&[vec![0, 1]]));
        let full = generated_subtorus(2, &[e1.clone(), e2]).unwrap();
        assert!(full.is_full());

        let none = generated_subtorus(2, &[]).unwrap();
        assert_eq!(none, Subtorus::trivial(2));

        let stretched = Subtorus::from_generators(&IntMatrix::from_rows(&[vec![2, 0]]));
        assert_eq!(stretched, e1, "generators saturate");
        let gen = generated_subtorus(2, &[stretched]).unwrap();
        assert_eq!(gen, e1);
    }

    #[test]
    fn generated_subtorus_is_idempotent_and_order_independent() {
        let a = Subtorus::from_generators(&IntMatrix::from_rows(&[vec![2, 4, 0]]));
        let b = Subtorus::from_generators(&IntMatrix::from_rows(&[vec![0, 0, 3]]));
        let ab = generated_subtorus(3, &[a.clone(), b.clone()]).unwrap();
        let ba = generated_subtorus(3, &[b.clone(), a.clone()]).unwrap();
        assert_eq!(ab, ba);
        let again = generated_subtorus(3, &[ab.clone()]).unwrap();
        assert_eq!(again, ab);
        assert!(matches!(
            generated_subtorus(2, &[a]),
            Err(TorusError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn subtorus_membership() {
        let diag = Subtorus::from_generators(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert!(diag.contains(&elem(&[(1, 3), (1, 3)])));
        assert!(!diag.contains(&elem(&[(1, 3), (0, 1)])));
        // Z^2-translates of span points still lie on the subtorus.
        assert!(diag.contains(&elem(&[(1, 3), (4, 3)])));

        assert!(Subtorus::full(2).contains(&elem(&[(1, 7), (3, 5)])));
        assert!(Subtorus::trivial(2).contains(&elem(&[(0, 1), (0, 1)])));
        assert!(!Subtorus::trivial(2).contains(&elem(&[(1, 2), (0, 1)])));
    }

    #[test]
    fn element_subgroup_lattice_examples() {
        // The identity alone generates nothing beyond Z^2.
        let zero = element_subgroup_lattice(2, &[elem(&[(0, 1), (0, 1)])]).unwrap();
        assert_eq!(zero.denom, int(1));
        assert_eq!(zero.lattice, Lattice::standard(2));

        // [1/2, 0]: N = 2, HNF of {(1,0),(2,0),(0,2)}.
        let half = element_subgroup_lattice(2, &[elem(&[(1, 2), (0, 1)])]).unwrap();
        assert_eq!(half.denom, int(2));
        assert_eq!(
            half.lattice,
            Lattice::from_generators(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]]))
        );

        // [1/2,0] and [0,1/2] together: (1/2)Z^2.
        let both = element_subgroup_lattice(
            2,
            &[elem(&[(1, 2), (0, 1)]), elem(&[(0, 1), (1, 2)])],
        )
        .unwrap();
        assert_eq!(both.denom, int(2));
        assert_eq!(both.lattice, Lattice::standard(2));
    }

    #[test]
    fn element_subgroup_lattice_is_generating_set_independent() {
        // {[1/2,0],[0,1/2]} and {[1/2,1/2],[0,1/2]} generate the same
        // subgroup and must produce identical canonical forms.
        let a = element_subgroup_lattice(
            2,
            &[elem(&[(1, 2), (0, 1)]), elem(&[(0, 1), (1, 2)])],
        )
        .unwrap();
        let b = element_subgroup_lattice(
            2,
            &[elem(&[(1, 2), (1, 2)]), elem(&[(0, 1), (1, 2)])],
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
