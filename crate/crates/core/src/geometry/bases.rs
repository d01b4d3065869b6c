use std::fmt;

use crate::error::{Error, Result};
use crate::sets::RaySet;

use super::rays::Ray;
use super::{Cell, RayId};

/// Canonical basis number: bases sorted by their ascending ray tuples and
/// numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisId(u8);

impl BasisId {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=24).contains(&id) {
            Ok(Self(id))
        } else {
            Err(Error::UnknownBasis(id as u32))
        }
    }

    pub(crate) const fn from_index(index: usize) -> Self {
        Self(index as u8 + 1)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> impl Iterator<Item = BasisId> {
        (1..=24).map(BasisId)
    }
}

impl fmt::Debug for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.0)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisClass {
    /// All four rays come from one 24-cell.
    Inner(Cell),
    /// Two rays from each cell.
    Outer,
}

impl BasisClass {
    pub fn is_inner(self) -> bool {
        matches!(self, BasisClass::Inner(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Basis {
    pub id: BasisId,
    pub rays: [RayId; 4],
    pub class: BasisClass,
}

impl Basis {
    pub fn ray_set(&self) -> RaySet {
        self.rays.iter().copied().collect()
    }

    pub fn ray_ids(&self) -> [u8; 4] {
        self.rays.map(RayId::get)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.ray_ids();
        write!(f, "{a},{b},{c},{d}")
    }
}

/// All mutually orthogonal 4-subsets of the rays, found by testing every
/// one of the C(24,4) = 10626 candidates, in canonical order.
pub fn orthogonal_quadruples(rays: &[Ray]) -> Vec<[RayId; 4]> {
    let n = rays.len();
    let orthogonal = |i: usize, j: usize| rays[i].dot(&rays[j]) == 0;
    let mut found = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !orthogonal(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !orthogonal(a, c) || !orthogonal(b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if orthogonal(a, d) && orthogonal(b, d) && orthogonal(c, d) {
                        found.push([rays[a].id, rays[b].id, rays[c].id, rays[d].id]);
                    }
                }
            }
        }
    }
    found
}

pub fn enumerate_bases(rays: &[Ray]) -> Vec<Basis> {
    orthogonal_quadruples(rays)
        .into_iter()
        .enumerate()
        .map(|(i, quad)| {
            let cells = quad.map(RayId::cell);
            let in_a = cells.iter().filter(|&&c| c == Cell::A).count();
            let class = match in_a {
                4 => BasisClass::Inner(Cell::A),
                0 => BasisClass::Inner(Cell::B),
                _ => BasisClass::Outer,
            };
            Basis {
                id: BasisId::from_index(i),
                rays: quad,
                class,
            }
        })
        .collect()
}

/// An inner basis of each cell together with the two outer bases that mix
/// their rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisLine {
    pub inner_a: BasisId,
    pub inner_b: BasisId,
    pub outer: [BasisId; 2],
}

impl BasisLine {
    pub fn members(&self) -> [BasisId; 4] {
        [self.inner_a, self.inner_b, self.outer[0], self.outer[1]]
    }

    pub fn contains(&self, basis: BasisId) -> bool {
        self.members().contains(&basis)
    }
}
