//! Rational convex polytopes in ambient dimension <= 3 and the Delzant
//! predicate (simple, edge-rational, smooth).
//!
//! Polytope equality for classification purposes is equality up to
//! translation only: momentum maps are defined up to an additive constant,
//! while the torus identification is fixed, so no unimodular quotient is
//! taken. See [`equal_up_to_translation`].
//!
//! Input is a plain vertex list and edges are found by exhaustive
//! facet checks, which is entirely adequate at this scale; there is no
//! general hull engine here.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{Int, IntMatrix, Lattice, RatMatrix, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("ambient dimension {0} exceeds the supported maximum of 3")]
    AmbientTooLarge(usize),
    #[error("empty vertex list")]
    Empty,
    #[error("point has dimension {got}, expected {expected}")]
    PointDimension { expected: usize, got: usize },
    #[error("projection to the affine hull failed")]
    ProjectionFailure,
}

/// A rational convex polytope stored by its extreme points, sorted
/// lexicographically. Build one with [`normalize`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
}

impl Polytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// The single-point polytope at the origin of the given ambient
    /// dimension (the momentum polytope of a trivial Hamiltonian torus).
    pub fn origin(ambient_dim: usize) -> Polytope {
        Polytope { ambient_dim, vertices: vec![vec![Rational::zero(); ambient_dim]] }
    }

    /// Dimension of the affine hull of the vertex set.
    pub fn affine_dim(&self) -> usize {
        if self.vertices.len() <= 1 {
            return 0;
        }
        let origin = &self.vertices[0];
        let rows: Vec<Vec<Rational>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(origin).map(|(a, b)| a - b).collect())
            .collect();
        RatMatrix::from_rational_rows(self.ambient_dim, rows).rank()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn translate(&self, shift: &[Rational]) -> Polytope {
        assert_eq!(shift.len(), self.ambient_dim, "shift dimension mismatch");
        // Translation preserves lexicographic order, so no re-sort needed.
        Polytope {
            ambient_dim: self.ambient_dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    /// Image under an integer linear map (rows of `m` are the images of
    /// the coordinate directions applied on the left: v -> m v).
    pub fn transform(&self, m: &IntMatrix) -> Result<Polytope, PolytopeError> {
        assert_eq!(m.cols(), self.ambient_dim, "matrix shape mismatch");
        let verts: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .map(|v| {
                (0..m.rows())
                    .map(|r| {
                        m.row(r)
                            .iter()
                            .zip(v)
                            .map(|(a, b)| Rational::from(a.clone()) * b)
                            .sum()
                    })
                    .collect()
            })
            .collect();
        normalize(m.rows(), &verts)
    }
}

/// Extreme points of incident edges at one vertex, as primitive integer
/// directions in the lattice of the polytope's affine hull.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexEdgeData {
    pub vertex: Vec<Rational>,
    pub edge_dirs: Vec<Vec<Int>>,
}

/// Outcome of the Delzant predicate, with a certificate on failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DelzantVerdict {
    Delzant,
    NotDelzant { vertex: Vec<Rational>, failure: DelzantFailure },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DelzantFailure {
    /// Wrong number of edges at the vertex (polytope is not simple).
    NotSimple { edges: usize, needed: usize },
    /// Edge directions do not form a lattice basis; `det` is the witness.
    NotSmooth { det: Int },
}

impl DelzantVerdict {
    pub fn is_delzant(&self) -> bool {
        matches!(self, DelzantVerdict::Delzant)
    }
}

/// Build a polytope from a raw rational point list: deduplicate, drop
/// non-extreme points, sort lexicographically.
pub fn normalize(ambient_dim: usize, raw_points: &[Vec<Rational>]) -> Result<Polytope, PolytopeError> {
    if ambient_dim > 3 {
        return Err(PolytopeError::AmbientTooLarge(ambient_dim));
    }
    if raw_points.is_empty() {
        return Err(PolytopeError::Empty);
    }
    for p in raw_points {
        if p.len() != ambient_dim {
            return Err(PolytopeError::PointDimension { expected: ambient_dim, got: p.len() });
        }
    }
    let mut points: Vec<Vec<Rational>> = raw_points.to_vec();
    points.sort();
    points.dedup();

    let affine_dim = {
        let origin = &points[0];
        let rows: Vec<Vec<Rational>> = points[1..]
            .iter()
            .map(|v| v.iter().zip(origin).map(|(a, b)| a - b).collect())
            .collect();
        RatMatrix::from_rational_rows(ambient_dim, rows).rank()
    };

    let extreme: Vec<Vec<Rational>> = points
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<&Vec<Rational>> =
                points.iter().enumerate().filter(|(j, _)| j != i).map(|(_, q)| q).collect();
            !in_convex_hull(p, &others, affine_dim)
        })
        .map(|(_, p)| p.clone())
        .collect();

    Ok(Polytope { ambient_dim, vertices: extreme })
}

/// Exact convex-hull membership by Caratheodory: `p` lies in the hull iff
/// it is a convex combination of at most `affine_dim + 1` affinely
/// independent points.
fn in_convex_hull(p: &[Rational], candidates: &[&Vec<Rational>], affine_dim: usize) -> bool {
    let n = p.len();
    let max_size = (affine_dim + 1).min(candidates.len());
    for size in 1..=max_size {
        for subset in combinations(candidates.len(), size) {
            // Solve sum(lambda_i q_i) = p, sum(lambda_i) = 1 exactly.
            let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
            for c in 0..n {
                let mut row: Vec<Rational> =
                    subset.iter().map(|&i| candidates[i][c].clone()).collect();
                row.push(p[c].clone());
                rows.push(row);
            }
            let mut ones = vec![Rational::one(); size];
            ones.push(Rational::one());
            rows.push(ones);
            if let Some(lambda) = solve_unique(RatMatrix::from_rational_rows(size + 1, rows)) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Solve an augmented system `[A | b]` (last column is the rhs). Returns
/// the solution when it exists and is unique, i.e. when A has full column
/// rank and the system is consistent.
fn solve_unique(aug: RatMatrix) -> Option<Vec<Rational>> {
    let unknowns = aug.cols() - 1;
    let (r, pivots) = rref_of(&aug);
    if pivots.contains(&unknowns) {
        return None; // inconsistent: pivot in the rhs column
    }
    if pivots.len() < unknowns {
        return None; // underdetermined
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (pr, &pc) in pivots.iter().enumerate() {
        x[pc] = r.at(pr, unknowns).clone();
    }
    Some(x)
}

fn rref_of(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    // Thin wrapper so polytope code reads naturally.
    let mut work = m.clone();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for pc in 0..work.cols() {
        if pr == work.rows() {
            break;
        }
        let Some(pivot_row) = (pr..work.rows()).find(|&r| !work.at(r, pc).is_zero()) else {
            continue;
        };
        for c in 0..work.cols() {
            let tmp = work.at(pr, c).clone();
            work.set(pr, c, work.at(pivot_row, c).clone());
            work.set(pivot_row, c, tmp);
        }
        let inv = work.at(pr, pc).clone();
        for c in 0..work.cols() {
            let v = work.at(pr, c) / &inv;
            work.set(pr, c, v);
        }
        for r in 0..work.rows() {
            if r == pr || work.at(r, pc).is_zero() {
                continue;
            }
            let f = work.at(r, pc).clone();
            for c in 0..work.cols() {
                let v = work.at(r, c) - &f * work.at(pr, c);
                work.set(r, c, v);
            }
        }
        pivots.push(pc);
        pr += 1;
    }
    (work, pivots)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // Advance the combination.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        if idx[i] == i + n - k {
            return out;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The polytope in coordinates of its own affine hull: vertices expressed
/// in a basis of the saturated direction lattice, so that the hull's
/// induced lattice becomes the standard one.
struct HullCoords {
    dim: usize,
    verts: Vec<Vec<Rational>>,
}

fn hull_coords(p: &Polytope) -> Result<HullCoords, PolytopeError> {
    let d = p.affine_dim();
    if d == p.ambient_dim {
        return Ok(HullCoords { dim: d, verts: p.vertices.clone() });
    }
    if d == 0 {
        return Ok(HullCoords { dim: 0, verts: vec![Vec::new(); p.vertices.len()] });
    }
    let origin = &p.vertices[0];
    // Direction lattice: clear denominators of all edge vectors from the
    // base vertex, saturate to get the induced lattice of the hull.
    let mut denom = Int::one();
    let dirs: Vec<Vec<Rational>> = p.vertices[1..]
        .iter()
        .map(|v| v.iter().zip(origin).map(|(a, b)| a - b).collect())
        .collect();
    for row in &dirs {
        for c in row {
            denom = denom.lcm(c.denom());
        }
    }
    let int_rows: Vec<Vec<Int>> = dirs
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| (c * Rational::from(denom.clone())).numer().clone())
                .collect()
        })
        .collect();
    let lattice =
        Lattice::from_generators(&IntMatrix::from_int_rows(p.ambient_dim, int_rows)).saturate();
    let basis = lattice.basis();
    // Express each vertex as origin + x . basis; the solve is exact and
    // must succeed because the basis spans the direction space.
    let verts: Vec<Vec<Rational>> = p
        .vertices
        .iter()
        .map(|v| {
            let target: Vec<Rational> = v.iter().zip(origin).map(|(a, b)| a - b).collect();
            let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(p.ambient_dim);
            for c in 0..p.ambient_dim {
                let mut row: Vec<Rational> = (0..basis.rows())
                    .map(|r| Rational::from(basis.at(r, c).clone()))
                    .collect();
                row.push(target[c].clone());
                rows.push(row);
            }
            solve_unique(RatMatrix::from_rational_rows(basis.rows() + 1, rows))
                .ok_or(PolytopeError::ProjectionFailure)
        })
        .collect::<Result<_, _>>()?;
    Ok(HullCoords { dim: d, verts })
}

/// Edges of a full-dimensional polytope given by vertex coordinates, as
/// index pairs into the vertex list.
fn edges_full_dim(dim: usize, verts: &[Vec<Rational>]) -> Vec<(usize, usize)> {
    match dim {
        0 => Vec::new(),
        1 => {
            let lo = (0..verts.len()).min_by(|&a, &b| verts[a].cmp(&verts[b])).unwrap();
            let hi = (0..verts.len()).max_by(|&a, &b| verts[a].cmp(&verts[b])).unwrap();
            if lo == hi {
                Vec::new()
            } else {
                vec![(lo.min(hi), lo.max(hi))]
            }
        }
        2 => facets(dim, verts).into_iter().map(|f| (f[0], f[1])).collect(),
        3 => {
            let fs = facets(dim, verts);
            let mut out = BTreeSet::new();
            for i in 0..fs.len() {
                for j in i + 1..fs.len() {
                    let a: BTreeSet<usize> = fs[i].iter().copied().collect();
                    let common: Vec<usize> =
                        fs[j].iter().filter(|v| a.contains(v)).copied().collect();
                    if let [v, w] = common[..] {
                        out.insert((v.min(w), v.max(w)));
                    }
                }
            }
            out.into_iter().collect()
        }
        _ => unreachable!("ambient dimension is capped at 3"),
    }
}

/// Facets of a full-dimensional polytope (dim 2 or 3) as sorted vertex
/// index lists, found by exhaustive hyperplane checks.
fn facets(dim: usize, verts: &[Vec<Rational>]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<(Vec<Int>, Rational)> = HashSet::new();
    let mut out = Vec::new();
    let tuples: Vec<Vec<usize>> = combinations(verts.len(), dim);
    for t in tuples {
        let Some(normal) = hyperplane_normal(dim, verts, &t) else { continue };
        let offset: Rational = normal
            .iter()
            .zip(&verts[t[0]])
            .map(|(n, v)| Rational::from(n.clone()) * v)
            .sum();
        let mut lower = false;
        let mut upper = false;
        let mut on_plane = Vec::new();
        for (i, v) in verts.iter().enumerate() {
            let val: Rational =
                normal.iter().zip(v).map(|(n, x)| Rational::from(n.clone()) * x).sum();
            match val.cmp(&offset) {
                std::cmp::Ordering::Less => lower = true,
                std::cmp::Ordering::Greater => upper = true,
                std::cmp::Ordering::Equal => on_plane.push(i),
            }
        }
        if lower && upper {
            continue; // not supporting
        }
        // Orient the normal outward: all vertices satisfy n . x <= c.
        let (normal, offset) = if upper {
            (normal.iter().map(|n| -n.clone()).collect::<Vec<Int>>(), -offset)
        } else {
            (normal, offset)
        };
        if seen.insert((normal, offset)) {
            on_plane.sort_unstable();
            out.push(on_plane);
        }
    }
    out
}

/// Primitive integer normal of the hyperplane through the given affinely
/// independent vertices (dim-1 directions in dimension `dim`), or `None`
/// when the chosen vertices are affinely dependent.
fn hyperplane_normal(dim: usize, verts: &[Vec<Rational>], idx: &[usize]) -> Option<Vec<Int>> {
    let base = &verts[idx[0]];
    let dirs: Vec<Vec<Rational>> = idx[1..]
        .iter()
        .map(|&i| verts[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let normal: Vec<Rational> = match dim {
        2 => {
            let d = &dirs[0];
            vec![-d[1].clone(), d[0].clone()]
        }
        3 => {
            let (a, b) = (&dirs[0], &dirs[1]);
            vec![
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ]
        }
        _ => unreachable!("facets are only enumerated in dimensions 2 and 3"),
    };
    if normal.iter().all(Rational::is_zero) {
        return None;
    }
    Some(primitive_integer(&normal))
}

/// Scale a nonzero rational vector to the primitive integer vector with
/// the same direction.
fn primitive_integer(v: &[Rational]) -> Vec<Int> {
    let denom = v.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Int> =
        v.iter().map(|c| (c * Rational::from(denom.clone())).numer().clone()).collect();
    let g = ints.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
    debug_assert!(!g.is_zero(), "primitive direction of the zero vector");
    ints.iter().map(|c| c / &g).collect()
}

/// Per-vertex primitive edge directions of the incident edges, computed
/// in the lattice coordinates of the polytope's affine hull (identity for
/// full-dimensional polytopes).
pub fn vertex_edge_data(p: &Polytope) -> Result<Vec<VertexEdgeData>, PolytopeError> {
    let hull = hull_coords(p)?;
    let edges = edges_full_dim(hull.dim, &hull.verts);
    let mut out = Vec::with_capacity(p.vertices.len());
    for (i, vertex) in p.vertices.iter().enumerate() {
        let mut dirs: Vec<Vec<Int>> = edges
            .iter()
            .filter_map(|&(a, b)| {
                let other = if a == i {
                    b
                } else if b == i {
                    a
                } else {
                    return None;
                };
                let dir: Vec<Rational> = hull.verts[other]
                    .iter()
                    .zip(&hull.verts[i])
                    .map(|(x, y)| x - y)
                    .collect();
                Some(primitive_integer(&dir))
            })
            .collect();
        dirs.sort();
        out.push(VertexEdgeData { vertex: vertex.clone(), edge_dirs: dirs });
    }
    Ok(out)
}

/// The Delzant predicate: at every vertex exactly `d` edges meet (simple),
/// all edge directions are rational (automatic here, since vertices are
/// rational, but realized by the primitive-direction construction), and
/// the primitive directions form a lattice basis, i.e. a matrix of
/// determinant +-1 (smooth). A zero-dimensional polytope is vacuously
/// Delzant. The certificate names the first failing vertex.
pub fn is_delzant(p: &Polytope) -> Result<DelzantVerdict, PolytopeError> {
    let d = p.affine_dim();
    if d == 0 {
        return Ok(DelzantVerdict::Delzant);
    }
    for data in vertex_edge_data(p)? {
        if data.edge_dirs.len() != d {
            return Ok(DelzantVerdict::NotDelzant {
                vertex: data.vertex,
                failure: DelzantFailure::NotSimple { edges: data.edge_dirs.len(), needed: d },
            });
        }
        let m = IntMatrix::from_int_rows(d, data.edge_dirs.clone());
        let det = m.det();
        if !det.abs().is_one() {
            return Ok(DelzantVerdict::NotDelzant {
                vertex: data.vertex,
                failure: DelzantFailure::NotSmooth { det },
            });
        }
    }
    Ok(DelzantVerdict::Delzant)
}

/// Whether `q = p + v` for some rational vector `v`: compare after
/// translating the lexicographically minimal vertex of each to the origin.
/// Polytopes in different ambient dimensions are never equal.
pub fn equal_up_to_translation(p: &Polytope, q: &Polytope) -> bool {
    if p.ambient_dim != q.ambient_dim || p.vertices.len() != q.vertices.len() {
        return false;
    }
    let pv = &p.vertices[0];
    let qv = &q.vertices[0];
    p.vertices.iter().zip(&q.vertices).all(|(a, b)| {
        a.iter()
            .zip(pv)
            .zip(b.iter().zip(qv))
            .all(|((ai, p0), (bi, q0))| ai - p0 == bi - q0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<Rational>> {
        raw.iter().map(|row| row.iter().map(|&v| rat(v, 1)).collect()).collect()
    }

    fn poly(ambient: usize, raw: &[&[i64]]) -> Polytope {
        normalize(ambient, &pts(raw)).unwrap()
    }

    #[test]
    fn normalize_drops_interior_points() {
        let p = normalize(1, &[vec![rat(0, 1)], vec![rat(1, 1)], vec![rat(1, 2)]]).unwrap();
        assert_eq!(p.vertices(), &[vec![rat(0, 1)], vec![rat(1, 1)]]);

        let square = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let with_center = normalize(
            2,
            &[
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(1, 1), rat(1, 1)],
                vec![rat(1, 2), rat(1, 2)],
            ],
        )
        .unwrap();
        assert_eq!(square, with_center);

        let point = poly(2, &[&[3, 4]]);
        assert_eq!(point.vertices().len(), 1);
        assert!(point.is_point());
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = poly(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[2, 0]]);
        let again = normalize(2, &p.vertices().to_vec()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert!(matches!(normalize(4, &pts(&[&[0, 0, 0, 0]])), Err(PolytopeError::AmbientTooLarge(4))));
        assert!(matches!(normalize(2, &[]), Err(PolytopeError::Empty)));
        assert!(matches!(
            normalize(2, &pts(&[&[0]])),
            Err(PolytopeError::PointDimension { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn interval_edge_directions() {
        let p = poly(1, &[&[-1], &[1]]);
        let data = vertex_edge_data(&p).unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data[0].vertex, vec![rat(-1, 1)]);
        assert_eq!(data[0].edge_dirs, vec![vec![int(1)]]);
        assert_eq!(data[1].vertex, vec![rat(1, 1)]);
        assert_eq!(data[1].edge_dirs, vec![vec![int(-1)]]);
    }

    #[test]
    fn simplex_edge_directions() {
        let p = poly(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let data = vertex_edge_data(&p).unwrap();
        let origin = data.iter().find(|d| d.vertex == pts(&[&[0, 0]])[0]).unwrap();
        assert_eq!(origin.edge_dirs, vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    }

    #[test]
    fn non_smooth_triangle_edge_directions() {
        let p = poly(2, &[&[0, 0], &[2, 1], &[1, 2]]);
        let data = vertex_edge_data(&p).unwrap();
        let origin = data.iter().find(|d| d.vertex == pts(&[&[0, 0]])[0]).unwrap();
        // gcd(2,1) = gcd(1,2) = 1, so the directions are already primitive.
        assert_eq!(origin.edge_dirs, vec![vec![int(1), int(2)], vec![int(2), int(1)]]);
    }

    #[test]
    fn delzant_simplex_and_point() {
        assert!(is_delzant(&poly(2, &[&[0, 0], &[1, 0], &[0, 1]])).unwrap().is_delzant());
        assert!(is_delzant(&poly(2, &[&[0, 0]])).unwrap().is_delzant());
        assert!(is_delzant(&poly(1, &[&[-1], &[1]])).unwrap().is_delzant());
        // Zero-dimensional ambient: the Delzant polytope of a trivial
        // Hamiltonian torus.
        assert!(is_delzant(&Polytope::origin(0)).unwrap().is_delzant());
    }

    #[test]
    fn delzant_failure_certificate() {
        let p = poly(2, &[&[0, 0], &[2, 1], &[1, 2]]);
        match is_delzant(&p).unwrap() {
            DelzantVerdict::NotDelzant { vertex, failure } => {
                assert_eq!(vertex, pts(&[&[0, 0]])[0]);
                assert_eq!(failure, DelzantFailure::NotSmooth { det: int(-3) });
            }
            DelzantVerdict::Delzant => panic!("det-3 triangle must fail the smooth test"),
        }
    }

    #[test]
    fn delzant_square_and_cube() {
        assert!(is_delzant(&poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap().is_delzant());
        let cube: Vec<Vec<Rational>> = (0..8)
            .map(|i| vec![rat(i & 1, 1), rat((i >> 1) & 1, 1), rat((i >> 2) & 1, 1)])
            .collect();
        assert!(is_delzant(&normalize(3, &cube).unwrap()).unwrap().is_delzant());
        // Standard 3-simplex, the CP^3 momentum polytope.
        let p3 = poly(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(is_delzant(&p3).unwrap().is_delzant());
    }

    #[test]
    fn degenerate_polytope_uses_hull_lattice() {
        // The segment from (0,0) to (2,2) is primitive-direction (1,1) in
        // the ambient lattice; in its own hull lattice it has length 2, so
        // both endpoints see direction +-1 and the polytope is Delzant.
        let p = poly(2, &[&[0, 0], &[2, 2]]);
        let data = vertex_edge_data(&p).unwrap();
        assert_eq!(data[0].edge_dirs, vec![vec![int(1)]]);
        assert_eq!(data[1].edge_dirs, vec![vec![int(-1)]]);
        assert!(is_delzant(&p).unwrap().is_delzant());
    }

    #[test]
    fn translation_equality() {
        let a = poly(1, &[&[-1], &[1]]);
        let b = poly(1, &[&[0], &[2]]);
        assert!(equal_up_to_translation(&a, &b));

        let simplex = poly(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let double = poly(2, &[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(!equal_up_to_translation(&simplex, &double));
        assert!(equal_up_to_translation(&simplex, &simplex));

        let shifted = simplex.translate(&[rat(-7, 3), rat(1, 2)]);
        assert!(equal_up_to_translation(&simplex, &shifted));
    }

    #[test]
    fn delzant_invariant_under_unimodular_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let delzant = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let not_delzant = poly(2, &[&[0, 0], &[2, 1], &[1, 2]]);
        for _ in 0..20 {
            let u = random_unimodular2(&mut rng);
            let shift = vec![rat(rng.gen_range(-6..=6), 1), rat(rng.gen_range(-6..=6), 1)];
            for (p, expected) in [(&delzant, true), (&not_delzant, false)] {
                let q = p.transform(&u).unwrap().translate(&shift);
                assert_eq!(is_delzant(&q).unwrap().is_delzant(), expected);
            }
        }
    }

    fn random_unimodular2(rng: &mut ChaCha8Rng) -> IntMatrix {
        let mut m = IntMatrix::identity(2);
        for _ in 0..6 {
            let q = int(rng.gen_range(-3..=3i64));
            let mut next = IntMatrix::identity(2);
            if rng.gen_bool(0.5) {
                next.set(0, 1, q);
            } else {
                next.set(1, 0, q);
            }
            if rng.gen_bool(0.3) {
                let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
                next = next.mul(&swap);
            }
            m = m.mul(&next);
        }
        m
    }

    #[test]
    fn vertex_count_of_octahedron_edges() {
        let oct = poly(
            3,
            &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]],
        );
        assert_eq!(oct.vertices().len(), 6);
        let data = vertex_edge_data(&oct).unwrap();
        // Every octahedron vertex has 4 incident edges (so it is not
        // simple, and in particular not Delzant).
        assert!(data.iter().all(|d| d.edge_dirs.len() == 4));
        assert!(!is_delzant(&oct).unwrap().is_delzant());
    }
}
