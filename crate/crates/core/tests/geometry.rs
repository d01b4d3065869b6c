use std::collections::BTreeSet;

use peres_core::geometry::{
    cell_norm_squared, clifford_image, dot, verify_eigenstates, BasisClass, Line, RAY_COMPONENTS,
};
use peres_core::{peres, BasisId, Cell, RayId, RaySet};

/// Orthogonal line pairs as tabulated, cell A line first.
const LINE_PAIRS: [([u8; 3], [u8; 3]); 16] = [
    ([1, 5, 9], [16, 18, 23]),
    ([1, 6, 10], [16, 17, 24]),
    ([1, 7, 11], [15, 18, 24]),
    ([1, 8, 12], [15, 17, 23]),
    ([2, 5, 10], [16, 20, 21]),
    ([2, 6, 9], [16, 19, 22]),
    ([2, 7, 12], [15, 20, 22]),
    ([2, 8, 11], [15, 19, 21]),
    ([3, 5, 11], [14, 18, 21]),
    ([3, 6, 12], [14, 17, 22]),
    ([3, 7, 9], [13, 18, 22]),
    ([3, 8, 10], [13, 17, 21]),
    ([4, 5, 12], [14, 20, 23]),
    ([4, 6, 11], [14, 19, 24]),
    ([4, 7, 10], [13, 20, 24]),
    ([4, 8, 9], [13, 19, 23]),
];

fn r(id: u8) -> RayId {
    RayId::new(id).unwrap()
}

#[test]
fn ray_table_matches_tabulated_rows() {
    let rows: [&str; 24] = [
        "2000", "0200", "0020", "0002", "1111", "11bb", "1b1b", "1bb1", "1bbb", "1b11", "11b1",
        "111b", "1100", "1b00", "0011", "001b", "0101", "010b", "1010", "10b0", "100b", "1001",
        "01b0", "0110",
    ];
    for (i, row) in rows.iter().enumerate() {
        let parsed: Vec<i32> = row
            .chars()
            .map(|c| match c {
                'b' => -1,
                d => d.to_digit(10).unwrap() as i32,
            })
            .collect();
        assert_eq!(RAY_COMPONENTS[i].to_vec(), parsed, "ray {}", i + 1);
        let ray = peres().ray(r(i as u8 + 1));
        assert_eq!(ray.norm_squared(), cell_norm_squared(ray.id.cell()));
    }
}

#[test]
fn brute_force_basis_count() {
    // Independent count straight from the component table.
    let mut count = 0;
    let mut tuples = Vec::new();
    for a in 0..24 {
        for b in a + 1..24 {
            for c in b + 1..24 {
                for d in c + 1..24 {
                    let q = [a, b, c, d];
                    let ok = (0..4).all(|i| {
                        (i + 1..4).all(|j| dot(&RAY_COMPONENTS[q[i]], &RAY_COMPONENTS[q[j]]) == 0)
                    });
                    if ok {
                        count += 1;
                        tuples.push(q.map(|x| x as u8 + 1));
                    }
                }
            }
        }
    }
    assert_eq!(count, 24);
    let system = peres();
    let got: Vec<[u8; 4]> = system.bases().iter().map(|b| b.ray_ids()).collect();
    assert_eq!(got, tuples);
    let inner = system.bases().iter().filter(|b| b.class.is_inner()).count();
    assert_eq!(inner, 6);
    assert_eq!(system.outer_bases().len(), 18);
    assert_eq!(
        system.basis(BasisId::new(1).unwrap()).class,
        BasisClass::Inner(Cell::A)
    );
    let outer_example = system.basis_from_rays(&[1, 2, 15, 16]).unwrap();
    assert_eq!(system.basis(outer_example).class, BasisClass::Outer);
    for b in system.bases() {
        let in_a = b.rays.iter().filter(|r| r.cell() == Cell::A).count();
        match b.class {
            BasisClass::Inner(Cell::A) => assert_eq!(in_a, 4),
            BasisClass::Inner(Cell::B) => assert_eq!(in_a, 0),
            BasisClass::Outer => assert_eq!(in_a, 2),
        }
    }
}

#[test]
fn every_ray_in_four_bases_with_nine_neighbours() {
    let system = peres();
    for ray in RayId::all() {
        assert_eq!(system.bases_containing(ray).len(), 4);
        assert_eq!(system.orthogonal_to(ray).len(), 9);
    }
}

#[test]
fn reye_configuration() {
    let system = peres();
    for cell in [Cell::A, Cell::B] {
        let lines = system.lines(cell);
        assert_eq!(lines.len(), 16);
        for ray in cell.rays().iter() {
            let n = lines.iter().filter(|l| l.ray_set().contains(ray)).count();
            assert_eq!(n, 4, "ray {ray}");
        }
        // each line takes one ray from each inner basis
        let groups = system.inner_bases(cell).map(|b| system.rays_of(b));
        for l in lines {
            for g in groups {
                assert_eq!(l.ray_set().intersection(g).len(), 1);
            }
        }
    }
}

#[test]
fn line_pairing_reproduces_table() {
    let system = peres();
    let got: Vec<([u8; 3], [u8; 3])> = system
        .line_pairs()
        .iter()
        .map(|(a, b)| (a.ray_ids(), b.ray_ids()))
        .collect();
    let mut expected = LINE_PAIRS.to_vec();
    expected.sort();
    assert_eq!(got, expected);
    let partners: BTreeSet<Line> = system.line_pairs().iter().map(|p| p.1).collect();
    assert_eq!(partners.len(), 16);
}

#[test]
fn structure_census() {
    let system = peres();
    assert_eq!(system.hexagons().len(), 16);
    assert_eq!(system.tridents().len(), 96);
    for cell in [Cell::A, Cell::B] {
        assert_eq!(
            system
                .tridents()
                .iter()
                .filter(|t| t.cell() == cell)
                .count(),
            48
        );
    }
    assert_eq!(system.squares().len(), 144);
    let distinct: BTreeSet<RaySet> = system.squares().iter().map(|s| s.rays).collect();
    assert_eq!(distinct.len(), 144);

    for h in system.hexagons() {
        for a in h.line_a.rays() {
            for b in h.line_b.rays() {
                assert_eq!(system.ray(a).dot(system.ray(b)), 0);
            }
        }
    }
    for t in system.tridents() {
        assert!(!system.is_line(t.triangle.iter().copied().collect()));
        let orthogonal_all: Vec<RayId> = t
            .cell()
            .dual()
            .rays()
            .iter()
            .filter(|&x| {
                t.triangle
                    .iter()
                    .all(|&y| system.ray(x).dot(system.ray(y)) == 0)
            })
            .collect();
        assert_eq!(orthogonal_all, vec![t.apex]);
    }
    for s in system.squares() {
        assert_eq!(s.rays.intersection(Cell::A.rays()).len(), 2);
        assert!(s.rays.is_subset(s.hexagon.ray_set()));
        assert_eq!(s.hexagon.ray_set().difference(s.rays).len(), 2);
    }
}

#[test]
fn clifford_maps_cell_a_onto_b() {
    let system = peres();
    for i in 1..=12 {
        assert_eq!(system.clifford(r(i)).unwrap(), r(i + 12));
    }
    // orthogonality survives the integer (sqrt 2 scaled) map
    for a in RayId::all() {
        for b in RayId::all() {
            let (va, vb) = (system.ray(a).components, system.ray(b).components);
            if dot(&va, &vb) == 0 {
                assert_eq!(dot(&clifford_image(va), &clifford_image(vb)), 0);
            }
            assert_eq!(
                dot(&clifford_image(va), &clifford_image(vb)),
                2 * dot(&va, &vb)
            );
        }
    }
}

#[test]
fn all_eigen_equations_hold() {
    let report = verify_eigenstates(peres()).unwrap();
    assert_eq!(report.equations, 72);
    assert_eq!(report.signatures.len(), 24);
    let sig5 = report.signatures.iter().find(|s| s.ray == r(5)).unwrap();
    assert_eq!(sig5.observables[0], "XI");
    assert_eq!(sig5.eigenvalues[0], 1);
    let sig1 = report.signatures.iter().find(|s| s.ray == r(1)).unwrap();
    assert_eq!(sig1.observables[0], "ZI");
    assert_eq!(sig1.eigenvalues, [1, 1, 1]);
}
