//! Generators that build proofs directly from the geometry.

use crate::error::{Error, Result};
use crate::geometry::{peres, BasisClass, BasisId, Cell, RayId, Square, Trident};
use crate::sets::{BasisSet, RaySet};

use super::{complement, is_parity_proof, multiplicities, Family, ParityProof};

fn expect_family(bases: BasisSet, family: Family, what: &str) -> Result<ParityProof> {
    match is_parity_proof(bases) {
        Some(p) if p.family() == family => Ok(p),
        Some(p) => Err(Error::Consistency(format!(
            "{what} gave a {} proof, expected {family}",
            p.family()
        ))),
        None => Err(Error::Consistency(format!(
            "{what} gave no parity proof: {bases}"
        ))),
    }
}

/// Takes one ray from each inner basis of `cell` and keeps the 9 outer
/// bases avoiding them. On a line these already form an 18-9 proof;
/// otherwise the two inner bases of the dual cell that avoid the Trident
/// apex are added, giving a 20-11 proof.
pub fn construct_from_triple(triple: [RayId; 3], cell: Cell) -> Result<ParityProof> {
    let system = peres();
    let groups = system.inner_bases(cell);
    let one_per_group = triple
        .iter()
        .zip(groups)
        .all(|(&r, g)| system.rays_of(g).contains(r));
    if !one_per_group {
        return Err(Error::NotOnePerGroup {
            cell: cell.letter(),
            rays: triple.map(RayId::get),
        });
    }

    let picked: RaySet = triple.iter().copied().collect();
    let outers = system
        .outer_bases()
        .intersection(system.bases_avoiding(picked));
    if outers.len() != 9 {
        return Err(Error::Consistency(format!(
            "{} outer bases avoid {picked}",
            outers.len()
        )));
    }
    if system.is_line(picked) {
        return expect_family(outers, Family::R18B9, "line triple");
    }

    let apex = system
        .tridents()
        .iter()
        .find(|t| t.triangle == triple)
        .map(|t| t.apex)
        .ok_or_else(|| Error::Consistency(format!("no trident on triangle {picked}")))?;
    let inner: BasisSet = system
        .inner_bases(cell.dual())
        .into_iter()
        .filter(|&b| !system.rays_of(b).contains(apex))
        .collect();
    expect_family(outers.union(inner), Family::R20B11, "triangle triple")
}

/// Bases avoiding all four rays of a Trident.
pub fn construct_from_trident(trident: &Trident) -> Result<ParityProof> {
    let bases = peres().bases_avoiding(trident.ray_set());
    expect_family(bases, Family::R20B11, "trident")
}

/// Keeps the 12 bases avoiding the Square and drops the one whose rays all
/// occur twice among the other 11.
pub fn construct_from_square(square: &Square) -> Result<ParityProof> {
    let kept = peres().bases_avoiding(square.rays);
    if kept.len() != 12 {
        return Err(Error::Consistency(format!(
            "{} bases avoid square {}",
            kept.len(),
            square.rays
        )));
    }
    let system = peres();
    let droppable: Vec<BasisId> = kept
        .iter()
        .filter(|&b| {
            let m = multiplicities(kept.without(b));
            system.rays_of(b).iter().all(|r| m.get(r) == 2)
        })
        .collect();
    let [drop] = droppable[..] else {
        return Err(Error::Consistency(format!(
            "square {} has {} droppable bases",
            square.rays,
            droppable.len()
        )));
    };
    expect_family(kept.without(drop), Family::R20B11, "square")
}

/// Replaces an outer basis of an 18-9 proof by the other three bases on
/// its basis-line.
pub fn construct_by_line_swap(proof: &ParityProof, outer: BasisId) -> Result<ParityProof> {
    if proof.family() != Family::R18B9 {
        return Err(Error::WrongFamily(proof.family().to_string()));
    }
    if !proof.bases().contains(outer) {
        return Err(Error::BasisNotInProof(outer));
    }
    let system = peres();
    if system.basis(outer).class != BasisClass::Outer {
        return Err(Error::NotOuter(outer));
    }
    let line = system.basis_line_of(outer).ok_or(Error::NotOuter(outer))?;
    let mut bases = proof.bases().without(outer);
    for b in line.members() {
        if b != outer {
            bases.insert(b);
        }
    }
    expect_family(bases, Family::R20B11, "line swap")
}

/// Every proof reachable by construction: the 128 triples of both cells,
/// the 144 Squares, and the complements of all of those. Sorted, without
/// repeats.
pub fn enumerate_constructed() -> Result<Vec<ParityProof>> {
    let system = peres();
    let mut found = Vec::new();
    for cell in [Cell::A, Cell::B] {
        let groups = system.inner_bases(cell).map(|b| system.basis(b).rays);
        for &a in &groups[0] {
            for &b in &groups[1] {
                for &c in &groups[2] {
                    found.push(construct_from_triple([a, b, c], cell)?);
                }
            }
        }
    }
    for square in system.squares() {
        found.push(construct_from_square(square)?);
    }
    let complements: Vec<ParityProof> = found.iter().map(complement).collect();
    found.extend(complements);
    found.sort();
    found.dedup();
    Ok(found)
}
