//! Lattice-affine symmetries, regularity, and congruence. One primitive
//! drives everything: a flag of an n-dimensional polytope pins down n + 1
//! affinely independent anchor points (the vertex centroids of its faces
//! plus the vertex centroid of the whole body), so there is exactly one
//! affine map carrying a given flag to a given flag. The map is a lattice
//! symmetry or congruence precisely when it is lattice-affine and carries
//! the vertex set onto the vertex set, and both conditions are decidable
//! exactly.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{solve_affine_map, AffineMap, IntMatrix};
use crate::polytope::{Flag, Polytope};

/// Exhaustive composition-closure checking is quadratic in the group order,
/// so it is skipped above this bound. The largest group this library ever
/// constructs has order 1152, safely below the cutoff.
const CLOSURE_CHECK_LIMIT: usize = 1200;

/// The group of lattice-affine transformations preserving a polytope,
/// presented in the polytope's own ambient coordinates. `elements` holds
/// one map per flag reachable from `base_flag`; since an affine map fixing
/// a flag fixes its n + 1 anchor points and hence is the identity, the
/// action on flags is free and the group order never exceeds the flag
/// count, with equality exactly for the lattice-regular polytopes.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    elements: Vec<AffineMap>,
    base_flag: Flag,
    flag_orbit: Vec<usize>,
}

impl SymmetryGroup {
    /// The symmetries, in the canonical order of the flags they send the
    /// base flag to. The first element is the identity.
    pub fn elements(&self) -> &[AffineMap] {
        &self.elements
    }

    /// Number of lattice symmetries.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The flag each symmetry was solved against.
    pub fn base_flag(&self) -> &Flag {
        &self.base_flag
    }

    /// Indices (into the canonical flag list) of the flags in the orbit of
    /// the base flag, in increasing order.
    pub fn flag_orbit(&self) -> &[usize] {
        &self.flag_orbit
    }
}

/// Everything here is preserved by lattice-affine maps, so two polytopes
/// with different signatures cannot be lattice-congruent. Cheap to compare,
/// and in practice it separates almost all non-congruent pairs before any
/// flag search starts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub dim: usize,
    pub vertex_count: usize,
    pub lattice_volume: BigInt,
    pub f_vector: Vec<usize>,
    /// Lattice lengths of the edges, sorted; empty below dimension 2.
    pub edge_lengths: Vec<BigInt>,
    /// Lattice points in the relative interior.
    pub interior_points: usize,
}

/// Vertex centroid of the vertices selected by `idx`.
fn centroid(vertices: &[Vec<BigInt>], idx: &[usize]) -> Vec<BigRational> {
    let n = vertices[0].len();
    let count = BigInt::from(idx.len());
    (0..n)
        .map(|j| {
            let mut sum = BigInt::zero();
            for &i in idx {
                sum += &vertices[i][j];
            }
            BigRational::new(sum, count.clone())
        })
        .collect()
}

/// The anchor chain of a flag: vertex centroids of its faces in increasing
/// dimension, then the vertex centroid of the polytope itself. For a flag
/// of an n-dimensional polytope these are n + 1 affinely independent
/// points, because each one lies outside the affine span of the previous.
fn chain_points(p: &Polytope, f: &Flag) -> Vec<Vec<BigRational>> {
    let mut chain: Vec<Vec<BigRational>> =
        f.faces.iter().map(|face| centroid(p.vertices(), face)).collect();
    let all: Vec<usize> = (0..p.vertices().len()).collect();
    chain.push(centroid(p.vertices(), &all));
    chain
}

/// The unique affine map sending flag `f` of `p` to flag `g` of `q`,
/// returned iff it is lattice-affine and carries the vertex set of `p` onto
/// the vertex set of `q`. Both polytopes must be full-dimensional of the
/// same dimension; reduce through `hull_coords` first otherwise.
pub fn flag_map(p: &Polytope, f: &Flag, q: &Polytope, g: &Flag) -> Result<Option<AffineMap>> {
    let n = p.ambient_dim();
    if !p.is_full_dimensional() || !q.is_full_dimensional() || q.ambient_dim() != n {
        return Err(Error::Dimension(format!(
            "flag maps need full-dimensional polytopes of equal dimension, got {}/{} and {}/{}",
            p.dim(),
            n,
            q.dim(),
            q.ambient_dim()
        )));
    }
    if n == 0 {
        // both polytopes are the one point of the zero lattice
        return Ok(Some(AffineMap::identity(0)));
    }
    let map = solve_affine_map(&chain_points(p, f), &chain_points(q, g))?;
    let parts = match map.to_lattice_parts() {
        Some(parts) => parts,
        None => return Ok(None),
    };
    let mut image: Vec<Vec<BigInt>> =
        p.vertices().iter().map(|v| AffineMap::apply_lattice(&parts.0, &parts.1, v)).collect();
    image.sort();
    if image == q.vertices() {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// The image of each vertex of `h` under a symmetry, as an index
/// permutation of the canonical vertex order.
fn vertex_perm(h: &Polytope, m: &AffineMap) -> Vec<usize> {
    let (lin, tr) = m.to_lattice_parts().expect("symmetries are lattice-affine");
    h.vertices()
        .iter()
        .map(|v| {
            let img = AffineMap::apply_lattice(&lin, &tr, v);
            h.vertices().binary_search(&img).expect("symmetries permute the vertex set")
        })
        .collect()
}

/// All lattice symmetries of `p`, found by solving the base flag against
/// every flag. Lower-dimensional polytopes are reduced to the lattice of
/// their affine span for the search, and the maps are lifted back to
/// ambient coordinates — acting as the identity across the span — before
/// returning. Group structure — identity, distinct action on the vertices,
/// inverses, and (up to order 1200) closure under composition — is
/// asserted on the way.
pub fn symmetry_group(p: &Polytope) -> SymmetryGroup {
    let (h, _) = p.hull_coords();
    let flags = h.flags();
    let base = flags[0].clone();
    let mut elements = Vec::new();
    let mut flag_orbit = Vec::new();
    for (i, g) in flags.iter().enumerate() {
        if let Some(m) =
            flag_map(&h, &base, &h, g).expect("hull-coordinate polytopes are full-dimensional")
        {
            elements.push(m);
            flag_orbit.push(i);
        }
    }

    assert_eq!(elements[0], AffineMap::identity(h.ambient_dim()), "base flag solves to the identity");
    let perms: Vec<Vec<usize>> = elements.iter().map(|m| vertex_perm(&h, m)).collect();
    let index: HashSet<&Vec<usize>> = perms.iter().collect();
    assert_eq!(index.len(), perms.len(), "symmetries act distinctly on the vertices");
    for perm in &perms {
        let mut inv = vec![0; perm.len()];
        for (i, &pi) in perm.iter().enumerate() {
            inv[pi] = i;
        }
        assert!(index.contains(&inv), "symmetry group is closed under inverses");
    }
    if perms.len() <= CLOSURE_CHECK_LIMIT {
        for a in &perms {
            for b in &perms {
                let ab: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                assert!(index.contains(&ab), "symmetry group is closed under composition");
            }
        }
    }

    // Hand back maps acting on the polytope's own coordinates, not on the
    // hull chart it was solved in.
    if !p.is_full_dimensional() {
        let embed = &p.hull_coords().1;
        elements = elements
            .iter()
            .map(|m| lift_witness(m, embed, embed, p.ambient_dim()))
            .collect();
    }

    SymmetryGroup { elements, base_flag: base, flag_orbit }
}

/// Whether some lattice symmetry carries any flag to any other, i.e. the
/// symmetry group acts transitively on flags. On failure the witness is a
/// flag pair (in hull coordinates) admitting no lattice-affine map.
pub fn is_lattice_regular(p: &Polytope) -> (bool, Option<(Flag, Flag)>) {
    let (h, _) = p.hull_coords();
    let flags = h.flags();
    let base = flags[0].clone();
    for g in &flags {
        let found = flag_map(&h, &base, &h, g)
            .expect("hull-coordinate polytopes are full-dimensional")
            .is_some();
        if !found {
            return (false, Some((base, g.clone())));
        }
    }
    (true, None)
}

/// The congruence-invariant record of `p`. Equal signatures are necessary
/// (not sufficient) for lattice-congruence.
pub fn invariant_signature(p: &Polytope) -> Signature {
    let mut edge_lengths: Vec<BigInt> = if p.dim() >= 2 {
        p.face_lattice()
            .level(1)
            .iter()
            .map(|e| {
                let a = &p.vertices()[e[0]];
                let b = &p.vertices()[e[1]];
                let mut g = BigInt::zero();
                for (x, y) in a.iter().zip(b) {
                    g = g.gcd(&(x - y));
                }
                g
            })
            .collect()
    } else {
        Vec::new()
    };
    edge_lengths.sort();
    let (h, _) = p.hull_coords();
    Signature {
        dim: p.dim(),
        vertex_count: p.vertices().len(),
        lattice_volume: p.lattice_volume(),
        f_vector: p.f_vector(),
        edge_lengths,
        interior_points: h
            .interior_lattice_points()
            .expect("hull-coordinate polytopes are full-dimensional")
            .len(),
    }
}

/// A lattice-affine map of the ambient space taking `p` onto `q`, if one
/// exists. Signatures are compared first; only on a match does the flag
/// search run, solving a base flag of `p` against the flags of `q` in
/// canonical order and returning the first witness. Polytopes in ambient
/// spaces of different dimension are never congruent here, even if their
/// hulls are.
pub fn are_congruent(p: &Polytope, q: &Polytope) -> Option<AffineMap> {
    let n = p.ambient_dim();
    if q.ambient_dim() != n {
        return None;
    }
    if invariant_signature(p) != invariant_signature(q) {
        return None;
    }
    let (hp, ep) = p.hull_coords();
    let (hq, eq) = q.hull_coords();
    if hp.dim() == 0 {
        let shift: Vec<BigInt> =
            q.vertices()[0].iter().zip(&p.vertices()[0]).map(|(b, a)| b - a).collect();
        return Some(AffineMap::translation_by(&shift));
    }
    let base = hp.flags()[0].clone();
    for g in &hq.flags() {
        let w = flag_map(&hp, &base, &hq, g)
            .expect("hull-coordinate polytopes are full-dimensional");
        if let Some(w) = w {
            return Some(lift_witness(&w, &ep, &eq, n));
        }
    }
    None
}

/// Extend a witness between hull-coordinate polytopes to a lattice-affine
/// map of the common ambient space: act as the witness on the leading hull
/// coordinates, as the identity on the rest, and conjugate by the two
/// embeddings.
fn lift_witness(w: &AffineMap, embed_p: &AffineMap, embed_q: &AffineMap, n: usize) -> AffineMap {
    let (wl, wt) = w.to_lattice_parts().expect("congruence witnesses are lattice-affine");
    let r = w.dim();
    let mut lin = IntMatrix::identity(n);
    for i in 0..r {
        for j in 0..r {
            *lin.at_mut(i, j) = wl.at(i, j).clone();
        }
    }
    let mut tr = wt;
    tr.resize(n, BigInt::zero());
    let pad = AffineMap::new(
        lin.to_rational(),
        tr.into_iter().map(BigRational::from_integer).collect(),
    )
    .expect("padded witness stays invertible");
    embed_q
        .compose(&pad)
        .and_then(|m| m.compose(&embed_p.inverse()))
        .expect("embeddings share the ambient dimension")
}
