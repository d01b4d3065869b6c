//! Rays, bases and the polytope structures of the two dual 24-cells.

mod bases;
mod eigen;
mod rays;
mod structures;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

pub use bases::{enumerate_bases, orthogonal_quadruples, Basis, BasisClass, BasisId, BasisLine};
pub use eigen::{table_triads, verify_eigenstates, EigenReport, EigenSignature, Triad};
pub use rays::{
    build_ray_table, cell_norm_squared, dot, projective_canonical, ray_along, Ray, RayId, Vector,
    RAY_COMPONENTS,
};
pub use structures::{clifford_image, Hexagon, Line, Square, Trident};

use crate::error::{Error, Result};
use crate::sets::{BasisSet, RaySet};

/// One of the two dual 24-cells: rays 1-12 (A) and 13-24 (B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    A,
    B,
}

impl Cell {
    pub fn dual(self) -> Cell {
        match self {
            Cell::A => Cell::B,
            Cell::B => Cell::A,
        }
    }

    pub fn rays(self) -> RaySet {
        match self {
            Cell::A => RaySet::from_bits(0x000fff),
            Cell::B => RaySet::from_bits(0xfff000),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Cell::A => 'A',
            Cell::B => 'B',
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The full Peres configuration, built once and immutable afterwards.
#[derive(Debug, Clone)]
pub struct PeresSystem {
    rays: Vec<Ray>,
    bases: Vec<Basis>,
    basis_rays: [RaySet; 24],
    ray_bases: [BasisSet; 24],
    orthogonal: [RaySet; 24],
    basis_lines: Vec<BasisLine>,
    lines: [Vec<Line>; 2],
    line_pairs: Vec<(Line, Line)>,
    hexagons: Vec<Hexagon>,
    tridents: Vec<Trident>,
    squares: Vec<Square>,
}

/// Shared instance, constructed on first use.
pub fn peres() -> &'static PeresSystem {
    static SYSTEM: OnceLock<PeresSystem> = OnceLock::new();
    SYSTEM.get_or_init(|| PeresSystem::build().expect("Peres configuration is self-consistent"))
}

impl PeresSystem {
    pub fn build() -> Result<Self> {
        let rays = build_ray_table()?;
        let bases = enumerate_bases(&rays);
        if bases.len() != 24 {
            return Err(Error::Consistency(format!("found {} bases", bases.len())));
        }

        let mut basis_rays = [RaySet::EMPTY; 24];
        let mut ray_bases = [BasisSet::EMPTY; 24];
        for basis in &bases {
            basis_rays[basis.id.index()] = basis.ray_set();
            for &r in &basis.rays {
                ray_bases[r.index()].insert(basis.id);
            }
        }

        let mut orthogonal = [RaySet::EMPTY; 24];
        for a in &rays {
            for b in &rays {
                if a.id != b.id && a.dot(b) == 0 {
                    orthogonal[a.id.index()].insert(b.id);
                }
            }
        }

        let mut system = PeresSystem {
            rays,
            bases,
            basis_rays,
            ray_bases,
            orthogonal,
            basis_lines: Vec::new(),
            lines: [Vec::new(), Vec::new()],
            line_pairs: Vec::new(),
            hexagons: Vec::new(),
            tridents: Vec::new(),
            squares: Vec::new(),
        };
        system.basis_lines = system.derive_basis_lines()?;
        system.lines = [
            structures::enumerate_lines(&system.rays, Cell::A),
            structures::enumerate_lines(&system.rays, Cell::B),
        ];
        system.line_pairs = structures::pair_lines(&system)?;
        system.hexagons = structures::hexagons(&system.line_pairs);
        system.tridents = structures::enumerate_tridents(&system)?;
        system.squares = structures::enumerate_squares(&system.hexagons)?;
        Ok(system)
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, id: RayId) -> &Ray {
        &self.rays[id.index()]
    }

    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    pub fn basis(&self, id: BasisId) -> &Basis {
        &self.bases[id.index()]
    }

    pub fn rays_of(&self, basis: BasisId) -> RaySet {
        self.basis_rays[basis.index()]
    }

    /// Rays occurring in at least one of the given bases.
    pub fn support(&self, bases: BasisSet) -> RaySet {
        bases
            .iter()
            .fold(RaySet::EMPTY, |acc, b| acc.union(self.rays_of(b)))
    }

    pub fn bases_containing(&self, ray: RayId) -> BasisSet {
        self.ray_bases[ray.index()]
    }

    /// Bases sharing no ray with `rays`.
    pub fn bases_avoiding(&self, rays: RaySet) -> BasisSet {
        BasisId::all()
            .filter(|&b| self.rays_of(b).is_disjoint(rays))
            .collect()
    }

    /// Bases all of whose rays lie in `rays`.
    pub fn bases_within(&self, rays: RaySet) -> BasisSet {
        BasisId::all()
            .filter(|&b| self.rays_of(b).is_subset(rays))
            .collect()
    }

    pub fn orthogonal_to(&self, ray: RayId) -> RaySet {
        self.orthogonal[ray.index()]
    }

    pub fn find_basis(&self, rays: RaySet) -> Option<BasisId> {
        BasisId::all().find(|&b| self.rays_of(b) == rays)
    }

    /// Accepts a ray 4-tuple in any order.
    pub fn basis_from_rays(&self, ids: &[u8]) -> Result<BasisId> {
        let set = RaySet::from_ids(ids)?;
        if ids.len() != 4 || set.len() != 4 {
            return Err(Error::NotABasis(ids.to_vec()));
        }
        self.find_basis(set)
            .ok_or_else(|| Error::NotABasis(set.ids()))
    }

    /// For each ray sharing a basis with `ray`, the number of bases they
    /// share.
    pub fn companions(&self, ray: RayId) -> BTreeMap<RayId, usize> {
        let mut counts = BTreeMap::new();
        for b in self.bases_containing(ray).iter() {
            for other in self.rays_of(b).without(ray).iter() {
                *counts.entry(other).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn inner_bases(&self, cell: Cell) -> [BasisId; 3] {
        let ids: Vec<BasisId> = self
            .bases
            .iter()
            .filter(|b| b.class == BasisClass::Inner(cell))
            .map(|b| b.id)
            .collect();
        [ids[0], ids[1], ids[2]]
    }

    pub fn outer_bases(&self) -> BasisSet {
        self.bases
            .iter()
            .filter(|b| b.class == BasisClass::Outer)
            .map(|b| b.id)
            .collect()
    }

    pub fn basis_lines(&self) -> &[BasisLine] {
        &self.basis_lines
    }

    /// The basis-line through an outer basis.
    pub fn basis_line_of(&self, outer: BasisId) -> Option<&BasisLine> {
        self.basis_lines.iter().find(|l| l.outer.contains(&outer))
    }

    fn derive_basis_lines(&self) -> Result<Vec<BasisLine>> {
        let mut lines = Vec::with_capacity(9);
        let outers = self.outer_bases();
        for inner_a in self.inner_bases(Cell::A) {
            for inner_b in self.inner_bases(Cell::B) {
                let span = self.rays_of(inner_a).union(self.rays_of(inner_b));
                let mixes: Vec<BasisId> = outers
                    .iter()
                    .filter(|&o| self.rays_of(o).is_subset(span))
                    .collect();
                let [o1, o2] = mixes[..] else {
                    return Err(Error::Consistency(format!(
                        "inner bases {inner_a} and {inner_b} have {} hybrids",
                        mixes.len()
                    )));
                };
                if !self.rays_of(o1).is_disjoint(self.rays_of(o2)) {
                    return Err(Error::Consistency(format!("hybrids {o1} and {o2} overlap")));
                }
                lines.push(BasisLine {
                    inner_a,
                    inner_b,
                    outer: [o1, o2],
                });
            }
        }
        Ok(lines)
    }

    pub fn lines(&self, cell: Cell) -> &[Line] {
        match cell {
            Cell::A => &self.lines[0],
            Cell::B => &self.lines[1],
        }
    }

    /// The line of the dual cell whose rays are all orthogonal to `line`'s.
    pub fn orthogonal_line(&self, line: &Line) -> Line {
        self.line_pairs
            .iter()
            .find_map(|(a, b)| {
                if a == line {
                    Some(*b)
                } else if b == line {
                    Some(*a)
                } else {
                    None
                }
            })
            .expect("every line is paired")
    }

    /// Line pairs ordered by their cell-A line.
    pub fn line_pairs(&self) -> &[(Line, Line)] {
        &self.line_pairs
    }

    pub fn is_line(&self, rays: RaySet) -> bool {
        self.lines[0]
            .iter()
            .chain(&self.lines[1])
            .any(|l| l.ray_set() == rays)
    }

    pub fn hexagons(&self) -> &[Hexagon] {
        &self.hexagons
    }

    pub fn tridents(&self) -> &[Trident] {
        &self.tridents
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    /// Image of a cell-A ray under the Clifford displacement, which is the
    /// ray numbered 12 higher.
    pub fn clifford(&self, ray: RayId) -> Result<RayId> {
        if ray.cell() != Cell::A {
            return Err(Error::NotInCellA(ray));
        }
        let image = clifford_image(self.ray(ray).components);
        ray_along(image).ok_or_else(|| {
            Error::Consistency(format!("Clifford image of ray {ray} is not a Peres ray"))
        })
    }

    /// The permutation of all 24 rays induced by the Clifford displacement.
    pub fn clifford_permutation(&self) -> Result<[RayId; 24]> {
        let mut perm = [RayId::from_index(0); 24];
        for ray in &self.rays {
            perm[ray.id.index()] = ray_along(clifford_image(ray.components)).ok_or_else(|| {
                Error::Consistency(format!(
                    "Clifford image of ray {} is not a Peres ray",
                    ray.id
                ))
            })?;
        }
        Ok(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(id: u8) -> RayId {
        RayId::new(id).unwrap()
    }

    #[test]
    fn bases_through_ray_one() {
        let p = peres();
        let tuples: Vec<[u8; 4]> = p
            .bases_containing(r(1))
            .iter()
            .map(|b| p.basis(b).ray_ids())
            .collect();
        assert_eq!(
            tuples,
            vec![[1, 2, 3, 4], [1, 2, 15, 16], [1, 3, 17, 18], [1, 4, 23, 24]]
        );
        let through_13 = p.bases_containing(r(13));
        assert!(through_13
            .iter()
            .any(|b| p.basis(b).ray_ids() == [13, 14, 15, 16]));
    }

    #[test]
    fn companions_of_ray_one() {
        let got: Vec<(u8, usize)> = peres()
            .companions(r(1))
            .into_iter()
            .map(|(k, v)| (k.get(), v))
            .collect();
        assert_eq!(
            got,
            vec![
                (2, 2),
                (3, 2),
                (4, 2),
                (15, 1),
                (16, 1),
                (17, 1),
                (18, 1),
                (23, 1),
                (24, 1)
            ]
        );
    }

    #[test]
    fn companions_are_the_orthogonal_rays() {
        let p = peres();
        for ray in RayId::all() {
            let comp = p.companions(ray);
            let keys: RaySet = comp.keys().copied().collect();
            assert_eq!(keys, p.orthogonal_to(ray));
            assert_eq!(comp.values().filter(|&&c| c == 2).count(), 3);
            assert_eq!(comp.values().filter(|&&c| c == 1).count(), 6);
        }
    }

    #[test]
    fn hybrid_line_through_first_inner_bases() {
        let p = peres();
        let a = p.basis_from_rays(&[1, 2, 3, 4]).unwrap();
        let b = p.basis_from_rays(&[13, 14, 15, 16]).unwrap();
        let line = p
            .basis_lines()
            .iter()
            .find(|l| l.inner_a == a && l.inner_b == b)
            .unwrap();
        let outers: Vec<[u8; 4]> = line.outer.iter().map(|&o| p.basis(o).ray_ids()).collect();
        assert_eq!(outers, vec![[1, 2, 15, 16], [3, 4, 13, 14]]);
    }

    #[test]
    fn basis_lines_cover_outers_once() {
        let p = peres();
        assert_eq!(p.basis_lines().len(), 9);
        for o in p.outer_bases().iter() {
            let n = p.basis_lines().iter().filter(|l| l.contains(o)).count();
            assert_eq!(n, 1, "outer basis {o}");
        }
        for cell in [Cell::A, Cell::B] {
            for inner in p.inner_bases(cell) {
                let n = p.basis_lines().iter().filter(|l| l.contains(inner)).count();
                assert_eq!(n, 3);
            }
        }
        for l in p.basis_lines() {
            let [o1, o2] = l.outer;
            let span = p.rays_of(l.inner_a).union(p.rays_of(l.inner_b));
            assert_eq!(p.rays_of(o1).union(p.rays_of(o2)), span);
            for o in l.outer {
                assert_eq!(p.rays_of(o).intersection(p.rays_of(l.inner_a)).len(), 2);
                assert_eq!(p.rays_of(o).intersection(p.rays_of(l.inner_b)).len(), 2);
            }
        }
    }

    #[test]
    fn basis_lookup_errors() {
        let p = peres();
        assert!(matches!(
            p.basis_from_rays(&[1, 2, 3, 5]),
            Err(Error::NotABasis(_))
        ));
        assert!(matches!(
            p.basis_from_rays(&[1, 2, 3]),
            Err(Error::NotABasis(_))
        ));
        assert_eq!(p.basis_from_rays(&[16, 15, 2, 1]).unwrap().get(), 2);
    }

    #[test]
    fn clifford_examples() {
        let p = peres();
        assert_eq!(p.clifford(r(1)).unwrap(), r(13));
        assert_eq!(p.clifford(r(5)).unwrap(), r(17));
        assert_eq!(p.clifford(r(9)).unwrap(), r(21));
        assert_eq!(clifford_image([1, 1, 1, 1]), [0, 2, 0, 2]);
        assert_eq!(clifford_image([1, -1, -1, -1]), [2, 0, 0, -2]);
        assert_eq!(p.clifford(r(13)), Err(Error::NotInCellA(r(13))));
    }
}
