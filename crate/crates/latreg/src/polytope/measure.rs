use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::chart::Chart;
use super::wrap::{dot, wrap};

/// Normalized volume of the convex hull of a full-dimensional point set in
/// dimension `k` (k! times the Euclidean volume; 1 for a point). Computed by
/// the pyramid decomposition over any apex in the hull: each facet at
/// lattice distance m from the apex contributes m times its own normalized
/// volume one dimension down.
pub(crate) fn normalized_volume(points: &[Vec<BigInt>], k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    normalized_volume_with(points, k, &wrap(points, k))
}

/// Same, with the top-level facets already known.
pub(crate) fn normalized_volume_with(
    points: &[Vec<BigInt>],
    k: usize,
    facets: &[super::wrap::Facet],
) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let apex = &points[0];
    let mut total = BigInt::zero();
    for facet in facets {
        let dist = dot(&facet.normal, apex) - &facet.offset;
        if dist.is_zero() {
            continue;
        }
        let pts: Vec<Vec<BigInt>> = facet.vertices.iter().map(|&i| points[i].clone()).collect();
        let chart = Chart::new(&pts);
        debug_assert_eq!(chart.dim(), k - 1);
        let local: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|p| chart.to_hull(p).expect("facet points lie in their own hull"))
            .collect();
        total += dist * normalized_volume(&local, k - 1);
    }
    total
}


#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn point_volume_is_one() {
        assert_eq!(normalized_volume(&pts(&[&[]]), 0), BigInt::from(1));
    }

    #[test]
    fn segment_volume_is_its_length() {
        assert_eq!(normalized_volume(&pts(&[&[2], &[7]]), 1), BigInt::from(5));
    }

    #[test]
    fn unit_triangle_volume() {
        assert_eq!(normalized_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1]]), 2), BigInt::from(1));
    }

    #[test]
    fn unit_square_volume() {
        let sq = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(normalized_volume(&sq, 2), BigInt::from(2));
    }

    #[test]
    fn unit_cube_volume() {
        let mut cube = Vec::new();
        for i in 0..8i64 {
            cube.push(vec![
                BigInt::from(i & 1),
                BigInt::from((i >> 1) & 1),
                BigInt::from((i >> 2) & 1),
            ]);
        }
        assert_eq!(normalized_volume(&cube, 3), BigInt::from(6));
    }

    #[test]
    fn octahedron_volume() {
        let p = pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        assert_eq!(normalized_volume(&p, 3), BigInt::from(8));
    }

    #[test]
    fn volume_is_translation_invariant() {
        let a = pts(&[&[0, 0], &[3, 1], &[1, 2]]);
        let b = pts(&[&[10, -4], &[13, -3], &[11, -2]]);
        assert_eq!(normalized_volume(&a, 2), normalized_volume(&b, 2));
        assert_eq!(normalized_volume(&a, 2), BigInt::from(5));
    }
}
