//! Parity proofs from the GF(2) nullspace of the basis-ray incidence
//! matrix.
//!
//! A basis subset gives every ray even multiplicity exactly when its
//! indicator vector lies in the left nullspace of the incidence matrix
//! over GF(2). Parity proofs are the odd-weight elements of that space.

use crate::error::{Error, Result};
use crate::geometry::{peres, BasisId, RayId};
use crate::sets::{BasisSet, RaySet};

use super::{is_parity_proof, ParityProof};

#[derive(Debug, Clone)]
pub struct IncidenceKernel {
    /// Row per basis: the rays it contains.
    pub matrix: [RaySet; 24],
    /// Basis of the space of even-multiplicity basis subsets.
    pub kernel_basis: Vec<BasisSet>,
}

impl IncidenceKernel {
    pub fn dimension(&self) -> usize {
        self.kernel_basis.len()
    }

    /// XOR of the incidence rows selected by `subset`.
    pub fn fold(&self, subset: BasisSet) -> RaySet {
        subset.iter().fold(RaySet::EMPTY, |acc, b| {
            RaySet::from_bits(acc.bits() ^ self.matrix[b.index()].bits())
        })
    }

    /// Every element of the kernel, via Gray code over the basis vectors.
    pub fn elements(&self) -> Vec<BasisSet> {
        let dim = self.kernel_basis.len();
        let mut out = Vec::with_capacity(1 << dim);
        let mut current = 0u32;
        out.push(BasisSet::EMPTY);
        for i in 1u32..(1 << dim) {
            current ^= self.kernel_basis[i.trailing_zeros() as usize].bits();
            out.push(BasisSet::from_bits(current));
        }
        out
    }
}

/// Reduced row echelon form of `rows` over 24 columns; returns the pivot
/// column of each nonzero row, rows reordered in place.
fn rref(rows: &mut Vec<u32>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..24 {
        let bit = 1u32 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

pub fn kernel_gf2() -> Result<IncidenceKernel> {
    let system = peres();
    let mut matrix = [RaySet::EMPTY; 24];
    for b in BasisId::all() {
        matrix[b.index()] = system.rays_of(b);
    }

    // One equation per ray over the 24 basis unknowns.
    let mut equations: Vec<u32> = RayId::all()
        .map(|r| system.bases_containing(r).bits())
        .collect();
    let pivots = rref(&mut equations);

    let mut kernel_basis = Vec::new();
    for free in (0..24).filter(|c| !pivots.contains(c)) {
        let mut v = 1u32 << free;
        for (row, &pivot) in equations.iter().zip(&pivots) {
            if row >> free & 1 == 1 {
                v |= 1 << pivot;
            }
        }
        kernel_basis.push(BasisSet::from_bits(v));
    }

    let kernel = IncidenceKernel {
        matrix,
        kernel_basis,
    };
    if let Some(bad) = kernel
        .kernel_basis
        .iter()
        .find(|v| !kernel.fold(**v).is_empty())
    {
        return Err(Error::Consistency(format!(
            "kernel vector {bad} does not fold to zero"
        )));
    }
    if kernel.dimension() != 10 {
        return Err(Error::Consistency(format!(
            "kernel dimension is {}, expected 10",
            kernel.dimension()
        )));
    }
    Ok(kernel)
}

/// The odd-weight kernel elements as proofs, in canonical order.
pub fn enumerate_kernel() -> Result<Vec<ParityProof>> {
    let kernel = kernel_gf2()?;
    let mut proofs: Vec<ParityProof> = kernel
        .elements()
        .into_iter()
        .filter(|s| s.len() % 2 == 1)
        .map(|s| {
            is_parity_proof(s)
                .ok_or_else(|| Error::Consistency(format!("kernel element {s} is not a proof")))
        })
        .collect::<Result<_>>()?;
    if proofs.len() != 512 {
        return Err(Error::Consistency(format!(
            "{} odd-weight kernel elements, expected 512",
            proofs.len()
        )));
    }
    proofs.sort();
    Ok(proofs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bases_lie_in_the_kernel() {
        let k = kernel_gf2().unwrap();
        assert_eq!(k.dimension(), 10);
        assert!(k.fold(BasisSet::FULL).is_empty());
        assert!(k.elements().contains(&BasisSet::FULL));
    }

    #[test]
    fn elements_are_distinct() {
        let k = kernel_gf2().unwrap();
        let mut e = k.elements();
        e.sort();
        e.dedup();
        assert_eq!(e.len(), 1024);
    }

    #[test]
    fn rref_of_small_system() {
        let mut rows = vec![0b011, 0b110, 0b101];
        let pivots = rref(&mut rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![0b101, 0b110]);
    }
}
