//! Convex lattice polytopes: vertex canonicalization, exact facet
//! enumeration, face lattices and flags, normalized volume, and hull
//! coordinates on the affine span. Everything is integer or rational
//! arithmetic; no operation rounds.

mod chart;
mod face;
mod json;
mod measure;
mod wrap;

pub use face::{FaceLattice, Flag};
pub use json::{lattice_map_json, polytope_from_json, polytope_to_json};
pub(crate) use json::int_value;
pub use wrap::Facet;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::AffineMap;
use chart::Chart;
use wrap::{dot, int_rank};

/// A convex lattice polytope, stored as its extreme points in ambient
/// coordinates (lex-sorted, so equal polytopes compare equal) together with
/// a chart onto the lattice of its affine span. Facets live in those hull
/// coordinates; for a full-dimensional polytope the chart is the identity
/// and hull coordinates are ambient coordinates.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Vec<BigInt>>,
    hull_vertices: Vec<Vec<BigInt>>,
    chart: Chart,
    facets: Vec<Facet>,
    faces: OnceLock<FaceLattice>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl std::hash::Hash for Polytope {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient_dim.hash(state);
        self.vertices.hash(state);
    }
}

impl Polytope {
    /// Convex hull of the given lattice points. Duplicates and non-extreme
    /// points are dropped; the order does not matter. Fails on an empty
    /// point list or a point of the wrong length.
    pub fn from_vertices(ambient_dim: usize, vertices: Vec<Vec<BigInt>>) -> Result<Polytope> {
        if vertices.is_empty() {
            return Err(Error::Argument("a polytope needs at least one vertex".into()));
        }
        for v in &vertices {
            if v.len() != ambient_dim {
                return Err(Error::Dimension(format!(
                    "vertex has {} coordinates in ambient dimension {}",
                    v.len(),
                    ambient_dim
                )));
            }
        }
        let points: Vec<Vec<BigInt>> =
            vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Ok(Self::assemble(ambient_dim, points))
    }

    /// `points` must be deduplicated and lex-sorted. Wraps them, keeps the
    /// extreme ones, and re-wraps once if anything was dropped.
    fn assemble(ambient_dim: usize, points: Vec<Vec<BigInt>>) -> Polytope {
        let chart = Chart::new(&points);
        let r = chart.dim();
        let hull: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| chart.to_hull(p).expect("chart spans its defining points"))
            .collect();
        if r == 0 {
            return Polytope {
                ambient_dim,
                vertices: points,
                hull_vertices: hull,
                chart,
                facets: Vec::new(),
                faces: OnceLock::new(),
            };
        }
        let facets = wrap::wrap(&hull, r);
        // a point is extreme exactly when the normals of the facets through
        // it span the whole hull space
        let extreme: Vec<usize> = (0..points.len())
            .filter(|&i| {
                let normals: Vec<Vec<BigInt>> = facets
                    .iter()
                    .filter(|f| f.vertices.binary_search(&i).is_ok())
                    .map(|f| f.normal.clone())
                    .collect();
                int_rank(&normals, r) == r
            })
            .collect();
        if extreme.len() == points.len() {
            Polytope {
                ambient_dim,
                vertices: points,
                hull_vertices: hull,
                chart,
                facets,
                faces: OnceLock::new(),
            }
        } else {
            let subset = extreme.into_iter().map(|i| points[i].clone()).collect();
            Self::assemble(ambient_dim, subset)
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine span.
    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Extreme points in ambient coordinates, lex-sorted.
    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    /// Facets in hull coordinates: inward primitive normals, offsets, and
    /// vertex indices into `vertices()`. Empty for a point.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// The i-th facet as a polytope in the same ambient space.
    pub fn facet_polytope(&self, i: usize) -> Polytope {
        let verts =
            self.facets[i].vertices.iter().map(|&j| self.vertices[j].clone()).collect();
        Polytope::from_vertices(self.ambient_dim, verts).expect("facet vertices are valid")
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.faces
            .get_or_init(|| FaceLattice::build(&self.hull_vertices, self.dim(), &self.facets))
    }

    /// Proper face counts by dimension, (f_0, ..., f_{k-1}).
    pub fn f_vector(&self) -> Vec<usize> {
        self.face_lattice().f_vector()
    }

    /// All maximal face chains; a point has exactly one (empty) flag.
    pub fn flags(&self) -> Vec<Flag> {
        self.face_lattice().flags()
    }

    /// Normalized volume with respect to the lattice of the affine span:
    /// dim()! times the Euclidean volume there. A point has volume 1, a
    /// primitive segment 1, an elementary triangle 1.
    pub fn lattice_volume(&self) -> BigInt {
        measure::normalized_volume_with(&self.hull_vertices, self.dim(), &self.facets)
    }

    /// The dilate t*P. t must be at least 1.
    pub fn multiple(&self, t: u64) -> Result<Polytope> {
        if t == 0 {
            return Err(Error::Argument("dilation factor must be at least 1".into()));
        }
        let t = BigInt::from(t);
        let verts = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * &t).collect())
            .collect();
        Polytope::from_vertices(self.ambient_dim, verts)
    }

    /// Whether P is not a lattice translate of t*Q for any lattice polytope
    /// Q and t >= 2; equivalently the vertex differences have gcd 1. A point
    /// is elementary.
    pub fn is_elementary(&self) -> bool {
        if self.vertices.len() == 1 {
            return true;
        }
        let v0 = &self.vertices[0];
        let mut g = BigInt::zero();
        for v in &self.vertices[1..] {
            for (a, b) in v.iter().zip(v0) {
                g = g.gcd(&(a - b));
            }
        }
        g.is_one()
    }

    /// The polytope rewritten in the lattice of its affine span, together
    /// with the embedding back. The embedding is a lattice-affine map of the
    /// ambient space; it sends a hull point padded with trailing zeros to
    /// the original ambient point. Full-dimensional polytopes come back
    /// unchanged with the identity.
    pub fn hull_coords(&self) -> (Polytope, AffineMap) {
        if self.is_full_dimensional() {
            return (self.clone(), AffineMap::identity(self.ambient_dim));
        }
        let q = Polytope::from_vertices(self.dim(), self.hull_vertices.clone())
            .expect("hull coordinates of the vertices are valid");
        (q, self.chart.embed().clone())
    }

    /// Lattice points strictly inside a full-dimensional polytope, in lex
    /// order. Lower-dimensional polytopes are rejected; pass through
    /// `hull_coords` first to count relative-interior points.
    pub fn interior_lattice_points(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_full_dimensional() {
            return Err(Error::Dimension(
                "interior points are defined for full-dimensional polytopes".into(),
            ));
        }
        let n = self.ambient_dim;
        if n == 0 {
            return Ok(Vec::new());
        }
        let lo: Vec<BigInt> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j].clone()).min().expect("nonempty"))
            .collect();
        let hi: Vec<BigInt> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j].clone()).max().expect("nonempty"))
            .collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'scan: loop {
            if self.facets.iter().all(|f| dot(&f.normal, &cur) > f.offset) {
                out.push(cur.clone());
            }
            let mut j = n;
            loop {
                if j == 0 {
                    break 'scan;
                }
                j -= 1;
                if cur[j] < hi[j] {
                    cur[j] += 1u32;
                    continue 'scan;
                }
                cur[j] = lo[j].clone();
            }
        }
        Ok(out)
    }
}

/// Lattice distance from a point to the hyperplane of a facet: the height
/// in multiples of the primitive normal. `facet` must have codimension 1 in
/// its ambient space and the point must lie off its hyperplane.
pub fn lattice_distance(point: &[BigInt], facet: &Polytope) -> Result<BigInt> {
    let n = facet.ambient_dim();
    if point.len() != n {
        return Err(Error::Dimension(format!(
            "point has {} coordinates in ambient dimension {}",
            point.len(),
            n
        )));
    }
    if n == 0 || facet.dim() + 1 != n {
        return Err(Error::Dimension(
            "lattice distance needs a facet of codimension 1".into(),
        ));
    }
    let v0 = &facet.vertices[0];
    let diffs: Vec<Vec<BigInt>> = facet.vertices[1..]
        .iter()
        .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
        .collect();
    let normals = wrap::nullspace(&diffs, n);
    debug_assert_eq!(normals.len(), 1);
    let psi = &normals[0];
    let value = dot(psi, point) - dot(psi, v0);
    if value.is_zero() {
        return Err(Error::Degenerate("point lies on the facet hyperplane".into()));
    }
    Ok(value.abs())
}
