use std::process::{Command, Output};

use peres_core::proofs::{enumerate_kernel, Family};
use peres_core::{peres, BasisSet};

fn peres_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn peres_with(head: &[&str], tail: Vec<String>) -> Output {
    let mut args: Vec<String> = head.iter().map(|s| s.to_string()).collect();
    args.extend(tail);
    Command::new(env!("CARGO_BIN_EXE_peres"))
        .args(&args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

/// Space-separated ray tuples, the way a user types a set of bases.
fn tuples(bases: BasisSet) -> Vec<String> {
    let system = peres();
    bases
        .iter()
        .map(|b| {
            let r = system.basis(b).ray_ids();
            format!("{},{},{},{}", r[0], r[1], r[2], r[3])
        })
        .collect()
}

fn hexagon_159_proof() -> BasisSet {
    let system = peres();
    let h = system
        .hexagons()
        .iter()
        .find(|h| h.line_a.ray_ids() == [1, 5, 9])
        .unwrap();
    system.bases_avoiding(h.ray_set())
}

#[test]
fn listings() {
    let out = peres_bin(&["bases"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(
        text.lines()
            .filter(|l| l.ends_with("inner A") || l.ends_with("inner B"))
            .count(),
        6
    );
    assert!(text.ends_with("24 bases: 6 inner, 18 outer\n"));

    let out = peres_bin(&["rays", "--json"]);
    let rays: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rays = rays.as_array().unwrap();
    assert_eq!(rays.len(), 24);
    assert!(rays.iter().all(|r| r["components"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c.is_i64())));
    assert_eq!(rays[12]["components"], serde_json::json!([1, 1, 0, 0]));

    for (kind, n) in [
        ("lines", 32),
        ("hexagons", 16),
        ("tridents", 96),
        ("squares", 144),
    ] {
        let out = peres_bin(&["structures", "--kind", kind, "--json"]);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), n, "{kind}");
    }
    let out = peres_bin(&["structures", "--kind", "hexagons"]);
    assert!(stdout(&out).ends_with("16 hexagons\n"));

    let csv = stdout(&peres_bin(&["bases", "--csv"]));
    assert_eq!(csv.lines().count(), 25);
    assert!(csv.contains("2,\"1,2,15,16\",outer,\n"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&peres_bin(&["structures", "--kind", "circles"])), 1);
    assert_eq!(code(&peres_bin(&["verify", "1,2,3"])), 1);
    assert_eq!(code(&peres_bin(&["verify", "1,2,3,5"])), 1);
    assert_eq!(code(&peres_bin(&["color", "--rays", "25"])), 1);
    assert_eq!(code(&peres_bin(&["color"])), 1);
    assert_eq!(code(&peres_bin(&["proofs", "--kind", "19-9"])), 1);
    assert_eq!(code(&peres_bin(&["frobnicate"])), 1);
    assert_eq!(code(&peres_bin(&["--help"])), 0);
}

#[test]
fn proofs_by_kind() {
    let out = peres_bin(&["proofs", "--kind", "18-9", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["proofs"].as_array().unwrap().len(), 16);
    assert_eq!(v["census"]["total"], 512);
    for (kind, n) in [
        ("20-11", 240),
        ("20-11A", 96),
        ("20-11B", 144),
        ("22-13", 240),
        ("24-15", 16),
    ] {
        let out = peres_bin(&["proofs", "--kind", kind, "--csv"]);
        assert_eq!(stdout(&out).lines().count(), n + 1, "{kind}");
    }
    let text = stdout(&peres_bin(&["proofs"]));
    assert!(text.contains("listed 512 of 512 proofs"));
    assert!(text.ends_with("census ok\n"));
}

#[test]
fn every_method_cross_checks() {
    for method in ["kernel", "brute", "construct"] {
        let out = peres_bin(&["proofs", "--method", method, "--verify-cross"]);
        assert_eq!(code(&out), 0, "{method}");
        assert!(stdout(&out).contains(": identical\n"));
    }
}

#[test]
fn verify_reports() {
    let proof = hexagon_159_proof();
    let out = peres_with(&["verify"], tuples(proof));
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("valid 18-9 parity proof"));
    assert!(stdout(&out).contains("rays: 18 with multiplicity 2\n"));

    // ids work as well as tuples
    let ids = proof.ids().iter().map(u8::to_string).collect();
    assert_eq!(stdout(&peres_with(&["verify"], ids)), stdout(&out));

    for dropped in proof.iter() {
        let out = peres_with(&["verify", "--json"], tuples(proof.without(dropped)));
        assert_eq!(code(&out), 2);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["parityProof"], false);
        let odd: Vec<u8> = v["oddRays"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_u64().unwrap() as u8)
            .collect();
        assert_eq!(odd, peres().rays_of(dropped).ids());
    }
    let first = proof.iter().next().unwrap();
    let text = stdout(&peres_with(&["verify"], tuples(proof.without(first))));
    assert!(
        text.contains("not a parity proof\n  even number of bases (8)\n  odd-multiplicity rays: ")
    );
}

#[test]
fn classify_reports() {
    let proofs = enumerate_kernel().unwrap();
    let p = proofs
        .iter()
        .find(|p| p.family() == Family::R22B13)
        .unwrap();
    let out = peres_with(&["classify"], vec![tuples(p.bases()).join(";")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("kind: 22-13\nbasis-critical, not ray-critical\nreduces to "));

    let out = peres_bin(&["classify", "--json", &tuples(hexagon_159_proof()).join(" ")]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "18-9");
    assert_eq!(v["rayCritical"], true);
    assert!(v["reduction"].is_null());

    assert_eq!(code(&peres_bin(&["classify", "1"])), 2);
}

#[test]
fn color_reports() {
    let out = peres_bin(&["color", "--rays", "all"]);
    assert_eq!(stdout(&out), "domain: 24 rays\nUNSAT\n");
    let out = peres_bin(&["color", "--bases", "all"]);
    assert!(stdout(&out).ends_with("UNSAT\n"));
    let out = peres_bin(&["color", "--bases", "1"]);
    assert_eq!(
        stdout(&out),
        "domain: 4 rays\nwitness: 1=0 2=0 3=0 4=1\nrays valued 1: {4}\n"
    );

    let system = peres();
    let h = system.hexagons()[3];
    let outside = h.ray_set().complement();
    let list = outside
        .ids()
        .iter()
        .map(u8::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let out = peres_bin(&["color", "--rays", &list]);
    assert_eq!(stdout(&out), "domain: 18 rays\nUNSAT\n");
}

#[test]
fn mermin_reports() {
    let out = peres_bin(&["mermin"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("satisfying assignments: 0 of 512\n"));
    assert!(text.contains("odd lines: column 3\n"));
    assert!(!text.contains("trace"));

    let text = stdout(&peres_bin(&["mermin", "--trace"]));
    let last = text.lines().last().unwrap();
    assert!(last.contains("re-derives (1,1) = a + 1"), "{last}");
}

#[test]
fn symmetry_report() {
    let out = peres_bin(&["symmetry", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["automorphisms"], 1152);
    assert_eq!(v["agrees"], true);
}
