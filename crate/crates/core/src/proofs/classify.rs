use std::sync::OnceLock;

use crate::coloring::{is_basis_critical, is_ray_critical};
use crate::error::{Error, Result};

use super::{enumerate_kernel, Family, ParityProof, ProofKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Criticality {
    pub basis_critical: bool,
    pub ray_critical: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub kind: ProofKind,
    pub flags: Criticality,
}

/// Runs both criticality tests. A 20-11 proof is of the A type exactly
/// when its rays are ray-critical.
pub fn classify_proof(proof: &ParityProof) -> Result<Classification> {
    let flags = Criticality {
        basis_critical: is_basis_critical(proof.bases())?,
        ray_critical: is_ray_critical(proof.rays())?,
    };
    let kind = match proof.family() {
        Family::R18B9 => ProofKind::R18B9,
        Family::R20B11 if flags.ray_critical => ProofKind::R20B11A,
        Family::R20B11 => ProofKind::R20B11B,
        Family::R22B13 => ProofKind::R22B13,
        Family::R24B15 => ProofKind::R24B15,
    };
    Ok(Classification { kind, flags })
}

/// The ray-critical proofs: all 18-9 proofs, then the 20-11A proofs, each
/// group in canonical order.
pub fn critical_catalog() -> &'static [ParityProof] {
    static CATALOG: OnceLock<Vec<ParityProof>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let proofs = enumerate_kernel().expect("kernel enumeration succeeds");
        let mut catalog: Vec<ParityProof> = proofs
            .iter()
            .filter(|p| p.family() == Family::R18B9)
            .copied()
            .collect();
        catalog.extend(proofs.iter().filter(|p| {
            p.family() == Family::R20B11 && is_ray_critical(p.rays()).unwrap_or(false)
        }));
        catalog
    })
}

/// First 18-9 or 20-11A proof, in catalog order, whose rays all belong to
/// `proof`.
pub fn reduce_to_critical(proof: &ParityProof) -> Result<ParityProof> {
    if is_ray_critical(proof.rays())? {
        return Err(Error::AlreadyRayCritical);
    }
    critical_catalog()
        .iter()
        .find(|c| c.rays().is_subset(proof.rays()))
        .copied()
        .ok_or(Error::NoReduction)
}
