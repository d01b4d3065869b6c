use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sets::RaySet;

use super::rays::{Ray, Vector};
use super::{Cell, PeresSystem, RayId};

/// Three rays of one cell whose components span only a plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    cell: Cell,
    rays: [RayId; 3],
}

impl Line {
    pub fn cell(&self) -> Cell {
        self.cell
    }

    pub fn rays(&self) -> [RayId; 3] {
        self.rays
    }

    pub fn ray_ids(&self) -> [u8; 3] {
        self.rays.map(RayId::get)
    }

    pub fn ray_set(&self) -> RaySet {
        self.rays.iter().copied().collect()
    }
}

/// A line of cell A and the line of cell B orthogonal to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hexagon {
    pub line_a: Line,
    pub line_b: Line,
}

impl Hexagon {
    pub fn ray_set(&self) -> RaySet {
        self.line_a.ray_set().union(self.line_b.ray_set())
    }
}

/// A Triangle (one ray per inner basis of a cell, not on a line) plus the
/// single ray of the dual cell orthogonal to all three.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trident {
    pub triangle: [RayId; 3],
    pub apex: RayId,
}

impl Trident {
    pub fn cell(&self) -> Cell {
        self.triangle[0].cell()
    }

    pub fn ray_set(&self) -> RaySet {
        let mut s: RaySet = self.triangle.iter().copied().collect();
        s.insert(self.apex);
        s
    }
}

/// A Hexagon with one ray of each cell removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Square {
    pub rays: RaySet,
    pub hexagon: Hexagon,
    pub dropped: [RayId; 2],
}

/// Clifford displacement scaled by sqrt(2) so it stays integral.
pub fn clifford_image(v: Vector) -> Vector {
    let [x1, x2, x3, x4] = v;
    [x1 - x2, x1 + x2, x3 - x4, x3 + x4]
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Integer rank of three 4-vectors, via 3x3 and 2x2 minors.
pub(crate) fn rank3(vs: [Vector; 3]) -> usize {
    let m = vs.map(|v| v.map(i64::from));
    let col_triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    if col_triples
        .iter()
        .any(|cols| det3([0, 1, 2].map(|r| cols.map(|c| m[r][c]))) != 0)
    {
        return 3;
    }
    for r1 in 0..3 {
        for r2 in r1 + 1..3 {
            for c1 in 0..4 {
                for c2 in c1 + 1..4 {
                    if m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1] != 0 {
                        return 2;
                    }
                }
            }
        }
    }
    if m.iter().flatten().any(|&x| x != 0) {
        1
    } else {
        0
    }
}

pub(crate) fn enumerate_lines(rays: &[Ray], cell: Cell) -> Vec<Line> {
    let members: Vec<&Ray> = rays.iter().filter(|r| r.id.cell() == cell).collect();
    let mut lines = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            for k in j + 1..members.len() {
                let trio = [members[i], members[j], members[k]];
                if rank3(trio.map(|r| r.components)) == 2 {
                    lines.push(Line {
                        cell,
                        rays: trio.map(|r| r.id),
                    });
                }
            }
        }
    }
    lines
}

fn mutually_orthogonal(system: &PeresSystem, a: RaySet, b: RaySet) -> bool {
    a.iter().all(|r| b.is_subset(system.orthogonal_to(r)))
}

pub(crate) fn pair_lines(system: &PeresSystem) -> Result<Vec<(Line, Line)>> {
    let mut pairs = Vec::with_capacity(16);
    let mut used = BTreeSet::new();
    for line in system.lines(Cell::A) {
        let partners: Vec<Line> = system
            .lines(Cell::B)
            .iter()
            .copied()
            .filter(|l| mutually_orthogonal(system, line.ray_set(), l.ray_set()))
            .collect();
        let [partner] = partners[..] else {
            return Err(Error::Consistency(format!(
                "line {:?} has {} orthogonal partners",
                line.ray_ids(),
                partners.len()
            )));
        };
        if !used.insert(partner) {
            return Err(Error::Consistency("line pairing is not a bijection".into()));
        }
        pairs.push((*line, partner));
    }
    Ok(pairs)
}

pub(crate) fn hexagons(pairs: &[(Line, Line)]) -> Vec<Hexagon> {
    pairs
        .iter()
        .map(|&(line_a, line_b)| Hexagon { line_a, line_b })
        .collect()
}

pub(crate) fn enumerate_tridents(system: &PeresSystem) -> Result<Vec<Trident>> {
    let mut tridents = Vec::with_capacity(96);
    for cell in [Cell::A, Cell::B] {
        let groups = system.inner_bases(cell).map(|b| system.basis(b).rays);
        for &r1 in &groups[0] {
            for &r2 in &groups[1] {
                for &r3 in &groups[2] {
                    let triangle = [r1, r2, r3];
                    let set: RaySet = triangle.iter().copied().collect();
                    if system.is_line(set) {
                        continue;
                    }
                    let apexes: Vec<RayId> = cell
                        .dual()
                        .rays()
                        .iter()
                        .filter(|&r| set.is_subset(system.orthogonal_to(r)))
                        .collect();
                    let [apex] = apexes[..] else {
                        return Err(Error::Consistency(format!(
                            "triangle {:?} has {} orthogonal apexes",
                            triangle.map(RayId::get),
                            apexes.len()
                        )));
                    };
                    tridents.push(Trident { triangle, apex });
                }
            }
        }
    }
    Ok(tridents)
}

pub(crate) fn enumerate_squares(hexagons: &[Hexagon]) -> Result<Vec<Square>> {
    let mut squares = Vec::with_capacity(144);
    let mut seen = BTreeSet::new();
    for hexagon in hexagons {
        for drop_a in hexagon.line_a.rays() {
            for drop_b in hexagon.line_b.rays() {
                let rays = hexagon.ray_set().without(drop_a).without(drop_b);
                if !seen.insert(rays) {
                    return Err(Error::Consistency(format!(
                        "square {rays} arises from two hexagons"
                    )));
                }
                squares.push(Square {
                    rays,
                    hexagon: *hexagon,
                    dropped: [drop_a, drop_b],
                });
            }
        }
    }
    Ok(squares)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{peres, RAY_COMPONENTS};

    fn set(ids: &[u8]) -> RaySet {
        RaySet::from_ids(ids).unwrap()
    }

    fn comps(ids: [u8; 3]) -> [Vector; 3] {
        ids.map(|i| RAY_COMPONENTS[i as usize - 1])
    }

    #[test]
    fn rank_of_line_and_triangle() {
        assert_eq!(rank3(comps([1, 5, 9])), 2);
        assert_eq!(rank3(comps([1, 5, 10])), 3);
        assert_eq!(rank3([[1, 0, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0]]), 1);
    }

    #[test]
    fn lines_through_ray_one() {
        let p = peres();
        let through: Vec<[u8; 3]> = p
            .lines(Cell::A)
            .iter()
            .filter(|l| l.ray_set().contains(RayId::new(1).unwrap()))
            .map(Line::ray_ids)
            .collect();
        assert_eq!(through, vec![[1, 5, 9], [1, 6, 10], [1, 7, 11], [1, 8, 12]]);
        assert!(p.is_line(set(&[1, 5, 9])));
        assert!(!p.is_line(set(&[1, 5, 10])));
    }

    #[test]
    fn orthogonal_line_examples() {
        let p = peres();
        let find = |ids: [u8; 3]| {
            *p.lines(Cell::A)
                .iter()
                .find(|l| l.ray_ids() == ids)
                .unwrap()
        };
        assert_eq!(p.orthogonal_line(&find([1, 5, 9])).ray_ids(), [16, 18, 23]);
        assert_eq!(p.orthogonal_line(&find([4, 8, 9])).ray_ids(), [13, 19, 23]);
        for cell in [Cell::A, Cell::B] {
            for l in p.lines(cell) {
                assert_eq!(p.orthogonal_line(&p.orthogonal_line(l)), *l);
            }
        }
    }

    #[test]
    fn hexagon_from_first_line() {
        let p = peres();
        let h = p.hexagons()[0];
        assert_eq!(h.ray_set(), set(&[1, 5, 9, 16, 18, 23]));
        for a in h.line_a.rays() {
            for b in h.line_b.rays() {
                assert_eq!(p.ray(a).dot(p.ray(b)), 0);
            }
        }
    }

    #[test]
    fn trident_of_triangle_1_5_10() {
        let t = peres()
            .tridents()
            .iter()
            .find(|t| t.triangle.map(RayId::get) == [1, 5, 10])
            .unwrap();
        assert_eq!(t.apex.get(), 16);
    }

    #[test]
    fn square_from_first_hexagon() {
        let p = peres();
        let s = p
            .squares()
            .iter()
            .find(|s| s.dropped.map(RayId::get) == [1, 16])
            .unwrap();
        assert_eq!(s.rays, set(&[5, 9, 18, 23]));
        assert!(p
            .squares()
            .iter()
            .all(|s| s.rays.intersection(Cell::A.rays()).len() == 2));
    }
}
