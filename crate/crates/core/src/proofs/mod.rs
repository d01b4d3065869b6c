//! Parity proofs: odd sets of bases in which every ray occurs an even
//! number of times.

mod classify;
mod construct;
mod kernel;
mod scan;
mod symmetry;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use classify::{
    classify_proof, critical_catalog, reduce_to_critical, Classification, Criticality,
};
pub use construct::{
    construct_by_line_swap, construct_from_square, construct_from_trident, construct_from_triple,
    enumerate_constructed,
};
pub use kernel::{enumerate_kernel, kernel_gf2, IncidenceKernel};
pub use scan::{enumerate_bruteforce, enumerate_bruteforce_parallel, gray_scan};
pub use symmetry::{automorphism_order, for_each_automorphism, is_automorphism};

use crate::geometry::{peres, RayId};
use crate::sets::{BasisSet, RaySet};

/// The (rays, bases) size class of a parity proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R18B9,
    R20B11,
    R22B13,
    R24B15,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::R18B9,
        Family::R20B11,
        Family::R22B13,
        Family::R24B15,
    ];

    pub fn from_counts(rays: usize, bases: usize) -> Option<Family> {
        match (rays, bases) {
            (18, 9) => Some(Family::R18B9),
            (20, 11) => Some(Family::R20B11),
            (22, 13) => Some(Family::R22B13),
            (24, 15) => Some(Family::R24B15),
            _ => None,
        }
    }

    pub fn rays(self) -> usize {
        match self {
            Family::R18B9 => 18,
            Family::R20B11 => 20,
            Family::R22B13 => 22,
            Family::R24B15 => 24,
        }
    }

    pub fn bases(self) -> usize {
        match self {
            Family::R18B9 => 9,
            Family::R20B11 => 11,
            Family::R22B13 => 13,
            Family::R24B15 => 15,
        }
    }

    /// Family of the basis-complement within all 24 bases.
    pub fn complement(self) -> Family {
        match self {
            Family::R18B9 => Family::R24B15,
            Family::R20B11 => Family::R22B13,
            Family::R22B13 => Family::R20B11,
            Family::R24B15 => Family::R18B9,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.rays(), self.bases())
    }
}

/// Family refined by criticality: 20-11 proofs split into the ray-critical
/// A type and the B type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProofKind {
    R18B9,
    R20B11A,
    R20B11B,
    R22B13,
    R24B15,
}

impl ProofKind {
    pub const ALL: [ProofKind; 5] = [
        ProofKind::R18B9,
        ProofKind::R20B11A,
        ProofKind::R20B11B,
        ProofKind::R22B13,
        ProofKind::R24B15,
    ];

    pub fn family(self) -> Family {
        match self {
            ProofKind::R18B9 => Family::R18B9,
            ProofKind::R20B11A | ProofKind::R20B11B => Family::R20B11,
            ProofKind::R22B13 => Family::R22B13,
            ProofKind::R24B15 => Family::R24B15,
        }
    }
}

impl fmt::Display for ProofKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofKind::R20B11A => f.write_str("20-11A"),
            ProofKind::R20B11B => f.write_str("20-11B"),
            other => write!(f, "{}", other.family()),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| format!("unknown proof family {s:?}"))
    }
}

impl FromStr for ProofKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProofKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| format!("unknown proof kind {s:?}"))
    }
}

/// Occurrence count of every ray over a set of bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplicities([u8; 24]);

impl Multiplicities {
    pub fn get(&self, ray: RayId) -> u8 {
        self.0[ray.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    /// Rays occurring exactly `count` times.
    pub fn with_count(&self, count: u8) -> RaySet {
        RayId::all().filter(|&r| self.get(r) == count).collect()
    }

    /// Rays occurring an odd number of times.
    pub fn odd(&self) -> RaySet {
        RayId::all().filter(|&r| self.get(r) % 2 == 1).collect()
    }

    pub fn as_array(&self) -> &[u8; 24] {
        &self.0
    }
}

pub fn multiplicities(bases: BasisSet) -> Multiplicities {
    let system = peres();
    let mut counts = [0u8; 24];
    for b in bases.iter() {
        for r in system.rays_of(b).iter() {
            counts[r.index()] += 1;
        }
    }
    Multiplicities(counts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityProof {
    bases: BasisSet,
    rays: RaySet,
    family: Family,
}

impl ParityProof {
    pub fn bases(&self) -> BasisSet {
        self.bases
    }

    /// The rays occurring in the proof's bases.
    pub fn rays(&self) -> RaySet {
        self.rays
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn multiplicities(&self) -> Multiplicities {
        multiplicities(self.bases)
    }

    /// Ray tuples of the proof's bases, in basis-id order.
    pub fn basis_tuples(&self) -> Vec<[u8; 4]> {
        let system = peres();
        self.bases
            .iter()
            .map(|b| system.basis(b).ray_ids())
            .collect()
    }
}

impl Ord for ParityProof {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family
            .cmp(&other.family)
            .then_with(|| self.bases.cmp_lex(other.bases))
    }
}

impl PartialOrd for ParityProof {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Some` exactly when the set has an odd number of bases and every ray
/// occurs an even number of times.
pub fn is_parity_proof(bases: BasisSet) -> Option<ParityProof> {
    if bases.len().is_multiple_of(2) {
        return None;
    }
    let m = multiplicities(bases);
    if !m.odd().is_empty() {
        return None;
    }
    let rays = peres().support(bases);
    let family = Family::from_counts(rays.len(), bases.len())
        .expect("every parity proof in the Peres system has a tabulated size");
    Some(ParityProof {
        bases,
        rays,
        family,
    })
}

/// The proof formed by the bases left out of `proof`.
pub fn complement(proof: &ParityProof) -> ParityProof {
    is_parity_proof(proof.bases.complement())
        .expect("the complement of a parity proof is a parity proof")
}

/// Proof counts per family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofCensus {
    pub counts: BTreeMap<Family, usize>,
    pub total: usize,
}

impl ProofCensus {
    /// Tabulated counts: 16, 240, 240 and 16 proofs, 512 in all.
    pub const EXPECTED: [(Family, usize); 4] = [
        (Family::R18B9, 16),
        (Family::R20B11, 240),
        (Family::R22B13, 240),
        (Family::R24B15, 16),
    ];

    pub fn of(proofs: &[ParityProof]) -> Self {
        let mut counts: BTreeMap<Family, usize> = Family::ALL.iter().map(|&f| (f, 0)).collect();
        for p in proofs {
            *counts.entry(p.family).or_default() += 1;
        }
        Self {
            counts,
            total: proofs.len(),
        }
    }

    pub fn matches_expected(&self) -> bool {
        self.total == 512
            && Self::EXPECTED
                .iter()
                .all(|(f, n)| self.counts.get(f) == Some(n))
    }
}
