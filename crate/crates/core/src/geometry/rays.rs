use std::fmt;

use crate::error::{Error, Result};

use super::Cell;

/// One of the 24 Peres rays, numbered 1 to 24.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayId(u8);

impl RayId {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=24).contains(&id) {
            Ok(Self(id))
        } else {
            Err(Error::UnknownRay(id as u32))
        }
    }

    pub(crate) const fn from_index(index: usize) -> Self {
        Self(index as u8 + 1)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based position, `get() - 1`.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn cell(self) -> Cell {
        if self.0 <= 12 {
            Cell::A
        } else {
            Cell::B
        }
    }

    pub fn all() -> impl Iterator<Item = RayId> {
        (1..=24).map(RayId)
    }
}

impl fmt::Debug for RayId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

impl fmt::Display for RayId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Vector = [i32; 4];

/// Components exactly as tabulated, unnormalised: squared norm 4 in cell A
/// and 2 in cell B.
pub const RAY_COMPONENTS: [Vector; 24] = [
    [2, 0, 0, 0],
    [0, 2, 0, 0],
    [0, 0, 2, 0],
    [0, 0, 0, 2],
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, -1, -1, -1],
    [1, -1, 1, 1],
    [1, 1, -1, 1],
    [1, 1, 1, -1],
    [1, 1, 0, 0],
    [1, -1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, -1],
    [0, 1, 0, 1],
    [0, 1, 0, -1],
    [1, 0, 1, 0],
    [1, 0, -1, 0],
    [1, 0, 0, -1],
    [1, 0, 0, 1],
    [0, 1, -1, 0],
    [0, 1, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ray {
    pub id: RayId,
    pub components: Vector,
}

impl Ray {
    pub fn dot(&self, other: &Ray) -> i32 {
        dot(&self.components, &other.components)
    }

    pub fn norm_squared(&self) -> i32 {
        self.dot(self)
    }
}

/// Squared norm shared by the tabulated rays of a cell.
pub fn cell_norm_squared(cell: Cell) -> i32 {
    match cell {
        Cell::A => 4,
        Cell::B => 2,
    }
}

pub fn dot(a: &Vector, b: &Vector) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Builds the ray table, checking every entry has the squared norm of its
/// cell and that no two entries are the same projective point.
pub fn build_ray_table() -> Result<Vec<Ray>> {
    let rays: Vec<Ray> = RAY_COMPONENTS
        .iter()
        .enumerate()
        .map(|(i, &components)| Ray {
            id: RayId::from_index(i),
            components,
        })
        .collect();
    for ray in &rays {
        if ray.norm_squared() != cell_norm_squared(ray.id.cell()) {
            return Err(Error::Consistency(format!(
                "ray {} has squared norm {}",
                ray.id,
                ray.norm_squared()
            )));
        }
    }
    for (i, a) in rays.iter().enumerate() {
        for b in &rays[i + 1..] {
            if projective_canonical(a.components) == projective_canonical(b.components) {
                return Err(Error::Consistency(format!(
                    "rays {} and {} coincide",
                    a.id, b.id
                )));
            }
        }
    }
    Ok(rays)
}

fn gcd(a: i32, b: i32) -> i32 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divides by the gcd of the components and makes the first nonzero
/// component positive. The zero vector maps to itself.
pub fn projective_canonical(v: Vector) -> Vector {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 {
        return v;
    }
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    v.map(|x| x / g * sign)
}

/// Looks up the ray a vector points along, if any.
pub fn ray_along(v: Vector) -> Option<RayId> {
    let target = projective_canonical(v);
    RAY_COMPONENTS
        .iter()
        .position(|&c| projective_canonical(c) == target)
        .map(RayId::from_index)
}
