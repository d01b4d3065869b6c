//! Exhaustive scan of all 2^24 basis subsets in Gray-code order.
//!
//! Consecutive Gray codes differ in one basis, so the ray-parity vector of
//! the current subset is kept as a running XOR of per-basis incidence
//! masks. Ray multiplicities never exceed 4, so a zero accumulator means
//! every multiplicity is even.

use rayon::prelude::*;

use crate::geometry::{peres, BasisId};
use crate::sets::BasisSet;

use super::{is_parity_proof, ParityProof};

const SUBSETS: u32 = 1 << 24;

fn gray(i: u32) -> u32 {
    i ^ (i >> 1)
}

fn incidence() -> [u32; 24] {
    let system = peres();
    let mut rows = [0; 24];
    for b in BasisId::all() {
        rows[b.index()] = system.rays_of(b).bits();
    }
    rows
}

/// Basis masks with even ray parity and an odd number of bases among the
/// Gray codes of `start..end`.
pub fn gray_scan(start: u32, end: u32) -> Vec<u32> {
    let rows = incidence();
    let mut found = Vec::new();
    if start >= end {
        return found;
    }
    let mut subset = gray(start);
    let mut parity = 0u32;
    let mut bits = subset;
    while bits != 0 {
        parity ^= rows[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    let mut i = start;
    loop {
        if parity == 0 && subset.count_ones() & 1 == 1 {
            found.push(subset);
        }
        i += 1;
        if i == end {
            break;
        }
        let flip = i.trailing_zeros() as usize;
        subset ^= 1 << flip;
        parity ^= rows[flip];
    }
    found
}

fn collect(masks: impl IntoIterator<Item = u32>) -> Vec<ParityProof> {
    let mut proofs: Vec<ParityProof> = masks
        .into_iter()
        .map(|m| is_parity_proof(BasisSet::from_bits(m)).expect("scan hit is a parity proof"))
        .collect();
    proofs.sort();
    proofs
}

/// Single-threaded scan of every basis subset.
pub fn enumerate_bruteforce() -> Vec<ParityProof> {
    collect(gray_scan(0, SUBSETS))
}

/// The same scan split into `chunks` contiguous Gray-code ranges.
pub fn enumerate_bruteforce_parallel(chunks: u32) -> Vec<ParityProof> {
    let chunks = chunks.clamp(1, SUBSETS);
    let step = SUBSETS.div_ceil(chunks);
    let hits: Vec<Vec<u32>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * step;
            let end = (start + step).min(SUBSETS);
            gray_scan(start, end)
        })
        .collect();
    collect(hits.into_iter().flatten())
}
