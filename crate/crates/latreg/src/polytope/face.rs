use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::chart::Chart;
use super::wrap::{wrap, Facet};

/// All proper nonempty faces of a polytope, grouped by dimension, as sorted
/// vertex-index sets. Built once by sub-wrapping each face one dimension
/// down; a face reached through several parents is recorded once.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    /// faces[d] lists the d-dimensional faces in sorted order, d = 0..k-1.
    faces: Vec<Vec<Vec<usize>>>,
    /// children[d][i] indexes the (d-1)-faces contained in faces[d][i].
    children: Vec<Vec<Vec<usize>>>,
}

/// A maximal chain of proper faces, one per dimension 0..k-1, each given by
/// its sorted vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Flag {
    pub faces: Vec<Vec<usize>>,
}

impl FaceLattice {
    /// `hull_vertices` are the polytope's vertices in its hull coordinates
    /// (so the set is full-dimensional in dimension `dim`), `facets` the
    /// output of wrapping them.
    pub(crate) fn build(hull_vertices: &[Vec<BigInt>], dim: usize, facets: &[Facet]) -> Self {
        if dim == 0 {
            return FaceLattice { faces: Vec::new(), children: Vec::new() };
        }
        let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim];
        for f in facets {
            levels[dim - 1].insert(f.vertices.clone());
        }
        for d in (1..dim).rev() {
            let parents: Vec<Vec<usize>> = levels[d].iter().cloned().collect();
            for face in parents {
                for sub in sub_faces(hull_vertices, &face, d) {
                    levels[d - 1].insert(sub);
                }
            }
        }
        let faces: Vec<Vec<Vec<usize>>> =
            levels.into_iter().map(|s| s.into_iter().collect()).collect();
        debug_assert_eq!(
            faces[0],
            (0..hull_vertices.len()).map(|i| vec![i]).collect::<Vec<_>>(),
            "every vertex terminates a chain of faces"
        );
        let mut children: Vec<Vec<Vec<usize>>> = Vec::with_capacity(dim);
        children.push(faces[0].iter().map(|_| Vec::new()).collect());
        for d in 1..dim {
            children.push(
                faces[d]
                    .iter()
                    .map(|big| {
                        faces[d - 1]
                            .iter()
                            .enumerate()
                            .filter(|(_, small)| is_subset(small, big))
                            .map(|(j, _)| j)
                            .collect()
                    })
                    .collect(),
            );
        }
        FaceLattice { faces, children }
    }

    pub fn dim(&self) -> usize {
        self.faces.len()
    }

    /// The d-dimensional faces as sorted vertex-index sets.
    pub fn level(&self, d: usize) -> &[Vec<usize>] {
        &self.faces[d]
    }

    /// Number of proper faces in each dimension 0..k-1.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|level| level.len()).collect()
    }

    /// Every maximal chain, in a fixed order (depth first over the sorted
    /// levels, facets outermost). A point's lattice is trivial: one flag
    /// with no faces.
    pub fn flags(&self) -> Vec<Flag> {
        let k = self.faces.len();
        if k == 0 {
            return vec![Flag { faces: Vec::new() }];
        }
        let mut out = Vec::new();
        let mut chain = Vec::with_capacity(k);
        for i in 0..self.faces[k - 1].len() {
            self.descend(k - 1, i, &mut chain, &mut out);
        }
        out
    }

    fn descend(&self, d: usize, i: usize, chain: &mut Vec<usize>, out: &mut Vec<Flag>) {
        chain.push(i);
        if d == 0 {
            let faces = chain
                .iter()
                .rev()
                .enumerate()
                .map(|(level, &idx)| self.faces[level][idx].clone())
                .collect();
            out.push(Flag { faces });
        } else {
            for &j in &self.children[d][i] {
                self.descend(d - 1, j, chain, out);
            }
        }
        chain.pop();
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// The (d-1)-faces of a d-dimensional face, as sorted global index sets:
/// wrap the face's points in their own hull coordinates.
fn sub_faces(hull_vertices: &[Vec<BigInt>], face: &[usize], d: usize) -> Vec<Vec<usize>> {
    let pts: Vec<Vec<BigInt>> = face.iter().map(|&i| hull_vertices[i].clone()).collect();
    let chart = Chart::new(&pts);
    debug_assert_eq!(chart.dim(), d);
    let local: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| chart.to_hull(p).expect("face points lie in their own hull"))
        .collect();
    wrap(&local, d)
        .into_iter()
        .map(|sf| {
            let mut v: Vec<usize> = sf.vertices.into_iter().map(|j| face[j]).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn lattice_of(points: &[Vec<BigInt>], k: usize) -> FaceLattice {
        FaceLattice::build(points, k, &wrap(points, k))
    }

    #[test]
    fn point_has_one_empty_flag() {
        let l = FaceLattice::build(&pts(&[&[7, -2]]), 0, &[]);
        assert_eq!(l.f_vector(), Vec::<usize>::new());
        assert_eq!(l.flags(), vec![Flag { faces: Vec::new() }]);
    }

    #[test]
    fn segment_lattice() {
        let l = lattice_of(&pts(&[&[0], &[3]]), 1);
        assert_eq!(l.f_vector(), vec![2]);
        assert_eq!(l.flags().len(), 2);
    }

    #[test]
    fn square_lattice() {
        let l = lattice_of(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), 2);
        assert_eq!(l.f_vector(), vec![4, 4]);
        let flags = l.flags();
        assert_eq!(flags.len(), 8);
        for flag in &flags {
            assert_eq!(flag.faces.len(), 2);
            assert_eq!(flag.faces[0].len(), 1);
            assert_eq!(flag.faces[1].len(), 2);
            assert!(is_subset(&flag.faces[0], &flag.faces[1]));
        }
    }

    #[test]
    fn cube_lattice() {
        let mut cube = Vec::new();
        for i in 0..8i64 {
            cube.push(vec![
                BigInt::from(i & 1),
                BigInt::from((i >> 1) & 1),
                BigInt::from((i >> 2) & 1),
            ]);
        }
        let l = lattice_of(&cube, 3);
        assert_eq!(l.f_vector(), vec![8, 12, 6]);
        assert_eq!(l.flags().len(), 48);
    }

    #[test]
    fn octahedron_lattice() {
        let p = pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        let l = lattice_of(&p, 3);
        assert_eq!(l.f_vector(), vec![6, 12, 8]);
        assert_eq!(l.flags().len(), 48);
    }

    #[test]
    fn flags_are_distinct() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        let l = lattice_of(&p, 2);
        let flags = l.flags();
        assert_eq!(flags.len(), 6);
        let set: std::collections::HashSet<_> = flags.iter().cloned().collect();
        assert_eq!(set.len(), 6);
    }
}
