//! Exact 0/1 colorability of ray and basis sets.
//!
//! Basis mode asks for exactly one ray valued 1 in every chosen basis. Ray
//! mode forbids two orthogonal rays both valued 1 and requires a 1 in every
//! complete orthogonal 4-set lying inside the ray set.
//!
//! The solver branches on the lowest unassigned ray id, trying 0 before 1,
//! and propagates forced values after every decision. Propagation only
//! prunes dead branches, so the first witness found is the
//! lexicographically smallest value vector in ray-id order.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{orthogonal_quadruples, peres, RayId};
use crate::sets::{BasisSet, RaySet};

/// 0/1 values on a set of rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<RayId, bool>,
}

impl Assignment {
    fn from_masks(domain: RaySet, ones: RaySet) -> Self {
        Self {
            values: domain.iter().map(|r| (r, ones.contains(r))).collect(),
        }
    }

    pub fn domain(&self) -> RaySet {
        self.values.keys().copied().collect()
    }

    pub fn get(&self, ray: RayId) -> Option<bool> {
        self.values.get(&ray).copied()
    }

    pub fn ones(&self) -> RaySet {
        self.values
            .iter()
            .filter(|(_, &v)| v)
            .map(|(&r, _)| r)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (RayId, bool)> + '_ {
        self.values.iter().map(|(&r, &v)| (r, v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringProblem {
    Bases(BasisSet),
    Rays(RaySet),
}

/// Every mutually orthogonal 4-subset of the 24 rays, found by brute force.
pub fn complete_orthogonal_sets() -> &'static [RaySet] {
    static SETS: OnceLock<Vec<RaySet>> = OnceLock::new();
    SETS.get_or_init(|| {
        orthogonal_quadruples(peres().rays())
            .into_iter()
            .map(|q| q.iter().copied().collect())
            .collect()
    })
}

struct Solver {
    domain: u32,
    /// Rays that must be 0 when the indexed ray is 1.
    conflicts: [u32; 24],
    /// Groups that need at least one ray valued 1.
    cover: Vec<u32>,
}

impl Solver {
    fn for_problem(problem: ColoringProblem) -> Self {
        let system = peres();
        let mut conflicts = [0u32; 24];
        match problem {
            ColoringProblem::Bases(bases) => {
                let cover: Vec<u32> = bases.iter().map(|b| system.rays_of(b).bits()).collect();
                for &group in &cover {
                    for r in RaySet::from_bits(group).iter() {
                        conflicts[r.index()] |= group & !(1 << r.index());
                    }
                }
                Self {
                    domain: system.support(bases).bits(),
                    conflicts,
                    cover,
                }
            }
            ColoringProblem::Rays(rays) => {
                for r in rays.iter() {
                    conflicts[r.index()] = system.orthogonal_to(r).intersection(rays).bits();
                }
                let cover = complete_orthogonal_sets()
                    .iter()
                    .filter(|s| s.is_subset(rays))
                    .map(|s| s.bits())
                    .collect();
                Self {
                    domain: rays.bits(),
                    conflicts,
                    cover,
                }
            }
        }
    }

    fn propagate(&self, mut ones: u32, mut zeros: u32) -> Option<(u32, u32)> {
        loop {
            let mut forced = 0;
            let mut bits = ones;
            while bits != 0 {
                forced |= self.conflicts[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            if forced & ones != 0 {
                return None;
            }
            let mut changed = forced & !zeros != 0;
            zeros |= forced;
            for &group in &self.cover {
                if group & ones != 0 {
                    continue;
                }
                let free = group & !zeros;
                if free == 0 {
                    return None;
                }
                if free.count_ones() == 1 {
                    ones |= free;
                    changed = true;
                }
            }
            if !changed {
                return Some((ones, zeros));
            }
        }
    }

    fn search(&self, ones: u32, zeros: u32) -> Option<u32> {
        let (ones, zeros) = self.propagate(ones, zeros)?;
        let open = self.domain & !(ones | zeros);
        if open == 0 {
            return Some(ones);
        }
        let bit = open & open.wrapping_neg();
        self.search(ones, zeros | bit)
            .or_else(|| self.search(ones | bit, zeros))
    }

    fn solve(&self) -> Option<u32> {
        self.search(0, 0)
    }
}

impl ColoringProblem {
    /// Domain of any witness: the rays of the chosen bases, or the rays.
    pub fn domain(&self) -> RaySet {
        match *self {
            ColoringProblem::Bases(bases) => peres().support(bases),
            ColoringProblem::Rays(rays) => rays,
        }
    }

    /// Lexicographically first witness, or `None` when uncolorable. Empty
    /// instances are trivially colorable.
    pub fn solve(&self) -> Option<Assignment> {
        Solver::for_problem(*self)
            .solve()
            .map(|ones| Assignment::from_masks(self.domain(), RaySet::from_bits(ones)))
    }

    /// Re-checks an assignment from the dot products and basis lists,
    /// independently of the solver's bookkeeping.
    pub fn is_satisfied_by(&self, assignment: &Assignment) -> bool {
        let system = peres();
        if assignment.domain() != self.domain() {
            return false;
        }
        let ones = assignment.ones();
        match *self {
            ColoringProblem::Bases(bases) => bases
                .iter()
                .all(|b| system.rays_of(b).intersection(ones).len() == 1),
            ColoringProblem::Rays(rays) => {
                let members: Vec<RayId> = rays.iter().collect();
                let dot = |a: RayId, b: RayId| system.ray(a).dot(system.ray(b));
                for (i, &a) in members.iter().enumerate() {
                    for &b in &members[i + 1..] {
                        if ones.contains(a) && ones.contains(b) && dot(a, b) == 0 {
                            return false;
                        }
                    }
                }
                complete_orthogonal_sets()
                    .iter()
                    .filter(|s| s.is_subset(rays))
                    .all(|s| !s.is_disjoint(ones))
            }
        }
    }
}

pub fn basis_colorable(bases: BasisSet) -> Result<Option<Assignment>> {
    if bases.is_empty() {
        return Err(Error::Empty("basis"));
    }
    Ok(ColoringProblem::Bases(bases).solve())
}

pub fn ray_colorable(rays: RaySet) -> Result<Option<Assignment>> {
    if rays.is_empty() {
        return Err(Error::Empty("ray"));
    }
    Ok(ColoringProblem::Rays(rays).solve())
}

fn colorable(problem: ColoringProblem) -> bool {
    Solver::for_problem(problem).solve().is_some()
}

/// Uncolorable, with every single-basis deletion colorable.
pub fn is_basis_critical(bases: BasisSet) -> Result<bool> {
    if bases.is_empty() {
        return Err(Error::Empty("basis"));
    }
    if colorable(ColoringProblem::Bases(bases)) {
        return Err(Error::AlreadyColorable);
    }
    let members: Vec<_> = bases.iter().collect();
    Ok(members
        .par_iter()
        .all(|&b| colorable(ColoringProblem::Bases(bases.without(b)))))
}

/// Uncolorable, with every single-ray deletion colorable.
pub fn is_ray_critical(rays: RaySet) -> Result<bool> {
    if rays.is_empty() {
        return Err(Error::Empty("ray"));
    }
    if colorable(ColoringProblem::Rays(rays)) {
        return Err(Error::AlreadyColorable);
    }
    let members: Vec<_> = rays.iter().collect();
    Ok(members
        .par_iter()
        .all(|&r| colorable(ColoringProblem::Rays(rays.without(r)))))
}
