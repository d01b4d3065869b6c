//! Permutations of the 24 rays that carry the set of bases onto itself.

use crate::geometry::{peres, BasisId, RayId};
use crate::sets::RaySet;

/// Whether `perm` (image of ray `i + 1` at index `i`) maps every basis to a
/// basis.
pub fn is_automorphism(perm: &[RayId; 24]) -> bool {
    let system = peres();
    let mut images = RaySet::EMPTY;
    for r in perm {
        images.insert(*r);
    }
    if images != RaySet::FULL {
        return false;
    }
    BasisId::all().all(|b| {
        let image: RaySet = system.rays_of(b).iter().map(|r| perm[r.index()]).collect();
        system.find_basis(image).is_some()
    })
}

/// Calls `visit` on every automorphism, found by extending partial maps ray
/// by ray while preserving orthogonality with the rays already placed.
pub fn for_each_automorphism(mut visit: impl FnMut(&[RayId; 24])) {
    let system = peres();
    let adjacency: Vec<u32> = RayId::all()
        .map(|r| system.orthogonal_to(r).bits())
        .collect();
    let degree: Vec<u32> = adjacency.iter().map(|a| a.count_ones()).collect();
    let mut perm = [0usize; 24];

    fn extend(
        depth: usize,
        used: u32,
        perm: &mut [usize; 24],
        adjacency: &[u32],
        degree: &[u32],
        visit: &mut dyn FnMut(&[RayId; 24]),
    ) {
        if depth == 24 {
            let mapped = perm.map(|i| RayId::new(i as u8 + 1).expect("index in range"));
            if is_automorphism(&mapped) {
                visit(&mapped);
            }
            return;
        }
        for image in 0..24 {
            if used >> image & 1 == 1 || degree[image] != degree[depth] {
                continue;
            }
            let consistent = (0..depth)
                .all(|j| (adjacency[depth] >> j & 1) == (adjacency[image] >> perm[j] & 1));
            if consistent {
                perm[depth] = image;
                extend(depth + 1, used | 1 << image, perm, adjacency, degree, visit);
            }
        }
    }

    extend(0, 0, &mut perm, &adjacency, &degree, &mut visit);
}

/// Order of the combinatorial symmetry group of the rays and bases.
pub fn automorphism_order() -> u64 {
    let mut count = 0;
    for_each_automorphism(|_| count += 1);
    count
}
