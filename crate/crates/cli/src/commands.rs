//! One function per subcommand. Each returns the full text it would print,
//! so output can be compared byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use peres_core::coloring::{basis_colorable, is_ray_critical, ray_colorable, Assignment};
use peres_core::geometry::Line;
use peres_core::mermin::{
    algebraic_contradiction, build_pm_square, exhaustive_unsat, transitivity_trace, GridLine,
    Position, DEFAULT_SEED,
};
use peres_core::proofs::{
    automorphism_order, classify_proof, enumerate_bruteforce_parallel, enumerate_constructed,
    enumerate_kernel, is_parity_proof, multiplicities, reduce_to_critical, Family, ParityProof,
    ProofCensus, ProofKind,
};
use peres_core::{peres, BasisSet, RaySet};
use serde_json::{json, Value};

use crate::args::{Format, KindFilter, Method, StructureKind};
use crate::error::CliResult;
use crate::input::{parse_basis_list, parse_ray_list};
use crate::puzzle::{basis_records, ray_records, PuzzleDocument};

/// Order of the symmetry group of the rays and bases as tabulated.
pub const EXPECTED_AUTOMORPHISMS: u64 = 1152;

/// What a command prints, and whether it should exit with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }

    fn with_status(text: String, ok: bool) -> Self {
        Report { text, ok }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of ASCII fields")
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn ray_list(rays: RaySet) -> String {
    joined(rays.ids(), ",")
}

fn basis_tuple_list(bases: BasisSet) -> String {
    let system = peres();
    joined(
        bases.iter().map(|b| joined(system.basis(b).ray_ids(), ",")),
        " ",
    )
}

pub fn rays(format: Format) -> CliResult<Report> {
    let records = ray_records();
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&records).expect("records serialize")),
        Format::Csv => csv_text(
            &["id", "cell", "x1", "x2", "x3", "x4"],
            records.iter().map(|r| {
                let mut row = vec![r.id.to_string(), r.cell.clone()];
                row.extend(r.components.iter().map(i32::to_string));
                row
            }),
        ),
        Format::Text => {
            let mut out = String::from("ray  cell  components\n");
            for r in &records {
                let comps = joined(r.components.iter().map(|c| format!("{c:>2}")), " ");
                writeln!(out, "{:>3}  {:<4}  {comps}", r.id, r.cell).unwrap();
            }
            writeln!(out, "{} rays", records.len()).unwrap();
            out
        }
    };
    Ok(Report::ok(text))
}

pub fn bases(format: Format) -> CliResult<Report> {
    let records = basis_records();
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&records).expect("records serialize")),
        Format::Csv => csv_text(
            &["id", "rays", "class", "cell"],
            records.iter().map(|b| {
                vec![
                    b.id.to_string(),
                    joined(b.rays, ","),
                    b.class.clone(),
                    b.cell.clone().unwrap_or_default(),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::from("basis  rays         class\n");
            for b in &records {
                let class = match &b.cell {
                    Some(cell) => format!("{} {cell}", b.class),
                    None => b.class.clone(),
                };
                writeln!(out, "{:>5}  {:<11}  {class}", b.id, joined(b.rays, ",")).unwrap();
            }
            let inner = records.iter().filter(|b| b.class == "inner").count();
            writeln!(
                out,
                "{} bases: {inner} inner, {} outer",
                records.len(),
                records.len() - inner
            )
            .unwrap();
            out
        }
    };
    Ok(Report::ok(text))
}

fn line_ids(line: &Line) -> Vec<u8> {
    line.ray_ids().to_vec()
}

pub fn structures(kind: StructureKind, format: Format) -> CliResult<Report> {
    let system = peres();
    let (header, rows, records, noun): (&[&str], Vec<Vec<String>>, Vec<Value>, &str) = match kind {
        StructureKind::Lines => {
            let mut rows = Vec::new();
            let mut records = Vec::new();
            for cell in [peres_core::Cell::A, peres_core::Cell::B] {
                for line in system.lines(cell) {
                    let other = system.orthogonal_line(line);
                    rows.push(vec![
                        cell.to_string(),
                        ray_list(line.ray_set()),
                        ray_list(other.ray_set()),
                    ]);
                    records.push(json!({
                        "cell": cell.to_string(),
                        "rays": line_ids(line),
                        "orthogonalLine": line_ids(&other),
                    }));
                }
            }
            (&["cell", "rays", "orthogonal_line"], rows, records, "lines")
        }
        StructureKind::Hexagons => {
            let rows = system
                .hexagons()
                .iter()
                .map(|h| vec![ray_list(h.line_a.ray_set()), ray_list(h.line_b.ray_set())])
                .collect();
            let records = system
                .hexagons()
                .iter()
                .map(|h| json!({ "lineA": line_ids(&h.line_a), "lineB": line_ids(&h.line_b) }))
                .collect();
            (&["line_a", "line_b"], rows, records, "hexagons")
        }
        StructureKind::Tridents => {
            let rows = system
                .tridents()
                .iter()
                .map(|t| {
                    vec![
                        t.cell().to_string(),
                        joined(t.triangle.iter().map(|r| r.get()), ","),
                        t.apex.to_string(),
                    ]
                })
                .collect();
            let records = system
                .tridents()
                .iter()
                .map(|t| {
                    json!({
                        "cell": t.cell().to_string(),
                        "triangle": t.triangle.map(|r| r.get()),
                        "apex": t.apex.get(),
                    })
                })
                .collect();
            (&["cell", "triangle", "apex"], rows, records, "tridents")
        }
        StructureKind::Squares => {
            let rows = system
                .squares()
                .iter()
                .map(|s| {
                    vec![
                        ray_list(s.rays),
                        format!(
                            "{}|{}",
                            ray_list(s.hexagon.line_a.ray_set()),
                            ray_list(s.hexagon.line_b.ray_set())
                        ),
                        joined(s.dropped.iter().map(|r| r.get()), ","),
                    ]
                })
                .collect();
            let records = system
                .squares()
                .iter()
                .map(|s| {
                    json!({
                        "rays": s.rays.ids(),
                        "hexagon": {
                            "lineA": line_ids(&s.hexagon.line_a),
                            "lineB": line_ids(&s.hexagon.line_b),
                        },
                        "dropped": s.dropped.map(|r| r.get()),
                    })
                })
                .collect();
            (&["rays", "hexagon", "dropped"], rows, records, "squares")
        }
    };
    let text = match format {
        Format::Json => pretty(&Value::Array(records)),
        Format::Csv => csv_text(header, rows),
        Format::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (w, field) in widths.iter_mut().zip(row) {
                    *w = (*w).max(field.len());
                }
            }
            let mut out = String::new();
            let mut line = |fields: Vec<&str>| {
                let cols: Vec<String> = fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f:<w$}"))
                    .collect();
                writeln!(out, "{}", cols.join("  ").trim_end()).unwrap();
            };
            line(header.to_vec());
            for row in &rows {
                line(row.iter().map(String::as_str).collect());
            }
            writeln!(out, "{} {noun}", rows.len()).unwrap();
            out
        }
    };
    Ok(Report::ok(text))
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Brute => "brute",
        Method::Kernel => "kernel",
        Method::Construct => "construct",
    }
}

fn run_method(method: Method) -> CliResult<Vec<ParityProof>> {
    Ok(match method {
        Method::Brute => enumerate_bruteforce_parallel(64),
        Method::Kernel => enumerate_kernel()?,
        Method::Construct => enumerate_constructed()?,
    })
}

/// The second opinion used by `--verify-cross`.
fn cross_method(method: Method) -> Method {
    match method {
        Method::Kernel => Method::Brute,
        Method::Brute | Method::Construct => Method::Kernel,
    }
}

fn kind_of(proof: &ParityProof) -> CliResult<ProofKind> {
    Ok(match proof.family() {
        Family::R18B9 => ProofKind::R18B9,
        Family::R20B11 if is_ray_critical(proof.rays())? => ProofKind::R20B11A,
        Family::R20B11 => ProofKind::R20B11B,
        Family::R22B13 => ProofKind::R22B13,
        Family::R24B15 => ProofKind::R24B15,
    })
}

fn matches_filter(kind: ProofKind, filter: Option<KindFilter>) -> bool {
    match filter {
        None => true,
        Some(KindFilter::R18B9) => kind == ProofKind::R18B9,
        Some(KindFilter::R20B11) => kind.family() == Family::R20B11,
        Some(KindFilter::R20B11A) => kind == ProofKind::R20B11A,
        Some(KindFilter::R20B11B) => kind == ProofKind::R20B11B,
        Some(KindFilter::R22B13) => kind == ProofKind::R22B13,
        Some(KindFilter::R24B15) => kind == ProofKind::R24B15,
    }
}

fn census_line(counts: impl IntoIterator<Item = (Family, usize)>, total: usize) -> String {
    let parts = joined(counts.into_iter().map(|(f, n)| format!("{f} {n}")), ", ");
    format!("{parts}; total {total}")
}

pub fn proofs(
    filter: Option<KindFilter>,
    method: Method,
    verify_cross: bool,
    format: Format,
) -> CliResult<Report> {
    let found = run_method(method)?;
    let census = ProofCensus::of(&found);
    let mut problems = Vec::new();
    for (family, expected) in ProofCensus::EXPECTED {
        let got = census.counts.get(&family).copied().unwrap_or(0);
        if got != expected {
            problems.push(format!("{family}: found {got}, expected {expected}"));
        }
    }
    if census.total != 512 {
        problems.push(format!("total: found {}, expected 512", census.total));
    }

    let mut cross = None;
    if verify_cross {
        let other = cross_method(method);
        let theirs: BTreeSet<ParityProof> = run_method(other)?.into_iter().collect();
        let ours: BTreeSet<ParityProof> = found.iter().copied().collect();
        let only_ours: Vec<ParityProof> = ours.difference(&theirs).copied().collect();
        let only_theirs: Vec<ParityProof> = theirs.difference(&ours).copied().collect();
        for p in &only_ours {
            problems.push(format!(
                "only {}: {}",
                method_name(method),
                basis_tuple_list(p.bases())
            ));
        }
        for p in &only_theirs {
            problems.push(format!(
                "only {}: {}",
                method_name(other),
                basis_tuple_list(p.bases())
            ));
        }
        cross = Some((other, only_ours.is_empty() && only_theirs.is_empty()));
    }

    let mut listed = Vec::new();
    let (mut a, mut b) = (0, 0);
    for p in &found {
        let kind = kind_of(p)?;
        match kind {
            ProofKind::R20B11A => a += 1,
            ProofKind::R20B11B => b += 1,
            _ => {}
        }
        if matches_filter(kind, filter) {
            listed.push((kind, *p));
        }
    }
    let ok = problems.is_empty();

    let text = match format {
        Format::Json => {
            let proofs: Vec<Value> = listed
                .iter()
                .map(|(kind, p)| {
                    json!({
                        "kind": kind.to_string(),
                        "bases": p.bases().ids(),
                        "rays": p.basis_tuples(),
                    })
                })
                .collect();
            let counts: serde_json::Map<String, Value> = census
                .counts
                .iter()
                .map(|(f, n)| (f.to_string(), json!(n)))
                .collect();
            let mut doc = json!({
                "method": method_name(method),
                "proofs": proofs,
                "census": { "counts": counts, "total": census.total, "20-11A": a, "20-11B": b },
                "censusMatches": census.matches_expected(),
                "problems": problems,
            });
            if let Some((other, agree)) = cross {
                doc["crossCheck"] = json!({ "against": method_name(other), "agrees": agree });
            }
            pretty(&doc)
        }
        Format::Csv => csv_text(
            &["kind", "bases", "rays"],
            listed.iter().map(|(kind, p)| {
                vec![
                    kind.to_string(),
                    joined(p.bases().ids(), ","),
                    basis_tuple_list(p.bases()),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for (kind, p) in &listed {
                writeln!(
                    out,
                    "{:<7} {}",
                    kind.to_string(),
                    basis_tuple_list(p.bases())
                )
                .unwrap();
            }
            writeln!(
                out,
                "listed {} of {} proofs (method {})",
                listed.len(),
                found.len(),
                method_name(method)
            )
            .unwrap();
            writeln!(
                out,
                "census:   {} (20-11: {a} A, {b} B)",
                census_line(census.counts.iter().map(|(f, n)| (*f, *n)), census.total)
            )
            .unwrap();
            writeln!(out, "expected: {}", census_line(ProofCensus::EXPECTED, 512)).unwrap();
            if let Some((other, agree)) = cross {
                let verdict = if agree { "identical" } else { "DIFFERENT" };
                writeln!(out, "cross-check against {}: {verdict}", method_name(other)).unwrap();
            }
            for p in &problems {
                writeln!(out, "mismatch: {p}").unwrap();
            }
            writeln!(out, "{}", if ok { "census ok" } else { "census FAILED" }).unwrap();
            out
        }
    };
    Ok(Report::with_status(text, ok))
}

pub fn verify(refs: &[String], json_out: bool) -> CliResult<Report> {
    let bases = parse_basis_list(refs)?;
    let m = multiplicities(bases);
    let support = peres().support(bases);
    let proof = is_parity_proof(bases);
    let odd = m.odd();

    let mut reasons = Vec::new();
    if bases.len().is_multiple_of(2) {
        reasons.push(format!("even number of bases ({})", bases.len()));
    }
    if !odd.is_empty() {
        reasons.push(format!("odd-multiplicity rays: {}", ray_list(odd)));
    }
    let by_count: Vec<(u8, usize)> = (1..=4)
        .map(|k| (k, m.with_count(k).len()))
        .filter(|&(_, n)| n > 0)
        .collect();

    let text = if json_out {
        let table: Vec<Value> = support
            .iter()
            .map(|r| json!({ "ray": r.get(), "multiplicity": m.get(r) }))
            .collect();
        pretty(&json!({
            "bases": bases.ids(),
            "basisCount": bases.len(),
            "rayCount": support.len(),
            "parityProof": proof.is_some(),
            "family": proof.map(|p| p.family().to_string()),
            "oddRays": odd.ids(),
            "multiplicities": table,
        }))
    } else {
        let mut out = String::new();
        writeln!(out, "bases: {}  rays: {}", bases.len(), support.len()).unwrap();
        match proof {
            Some(p) => writeln!(out, "valid {} parity proof", p.family()).unwrap(),
            None => {
                writeln!(out, "not a parity proof").unwrap();
                for r in &reasons {
                    writeln!(out, "  {r}").unwrap();
                }
            }
        }
        let counts = joined(
            by_count
                .iter()
                .map(|(k, n)| format!("{n} with multiplicity {k}")),
            ", ",
        );
        writeln!(out, "rays: {counts}").unwrap();
        writeln!(out, "ray  multiplicity").unwrap();
        for r in support.iter() {
            writeln!(out, "{:>3}  {}", r.get(), m.get(r)).unwrap();
        }
        out
    };
    Ok(Report::with_status(text, proof.is_some()))
}

pub fn classify(refs: &[String], json_out: bool) -> CliResult<Report> {
    let bases = parse_basis_list(refs)?;
    let Some(proof) = is_parity_proof(bases) else {
        let text = if json_out {
            pretty(&json!({ "bases": bases.ids(), "parityProof": false }))
        } else {
            "not a parity proof\n".to_string()
        };
        return Ok(Report::with_status(text, false));
    };
    let c = classify_proof(&proof)?;
    let reduction = if c.flags.ray_critical {
        None
    } else {
        Some(reduce_to_critical(&proof)?)
    };
    let text = if json_out {
        pretty(&json!({
            "bases": bases.ids(),
            "parityProof": true,
            "kind": c.kind.to_string(),
            "basisCritical": c.flags.basis_critical,
            "rayCritical": c.flags.ray_critical,
            "reduction": reduction.map(|q| json!({
                "kind": kind_of(&q).map(|k| k.to_string()).unwrap_or_default(),
                "bases": q.bases().ids(),
                "rays": q.basis_tuples(),
            })),
        }))
    } else {
        let yes_no = |flag: bool, what: &str| {
            if flag {
                what.to_string()
            } else {
                format!("not {what}")
            }
        };
        let mut out = String::new();
        writeln!(out, "kind: {}", c.kind).unwrap();
        writeln!(
            out,
            "{}, {}",
            yes_no(c.flags.basis_critical, "basis-critical"),
            yes_no(c.flags.ray_critical, "ray-critical")
        )
        .unwrap();
        if let Some(q) = reduction {
            writeln!(
                out,
                "reduces to {} on {} of its rays: {}",
                kind_of(&q)?,
                q.ray_count(),
                basis_tuple_list(q.bases())
            )
            .unwrap();
        }
        out
    };
    Ok(Report::ok(text))
}

pub fn color(bases: &[String], rays: &[String], json_out: bool) -> CliResult<Report> {
    let (domain, witness): (RaySet, Option<Assignment>) = if !bases.is_empty() {
        let set = parse_basis_list(bases)?;
        (peres().support(set), basis_colorable(set)?)
    } else {
        let set = parse_ray_list(rays)?;
        (set, ray_colorable(set)?)
    };
    let text = if json_out {
        pretty(&json!({
            "domain": domain.ids(),
            "satisfiable": witness.is_some(),
            "witness": witness.as_ref().map(|w| {
                w.iter()
                    .map(|(r, v)| json!({ "ray": r.get(), "value": u8::from(v) }))
                    .collect::<Vec<_>>()
            }),
        }))
    } else {
        let mut out = format!("domain: {} rays\n", domain.len());
        match &witness {
            None => out.push_str("UNSAT\n"),
            Some(w) => {
                let values = joined(w.iter().map(|(r, v)| format!("{r}={}", u8::from(v))), " ");
                writeln!(out, "witness: {values}").unwrap();
                writeln!(out, "rays valued 1: {}", w.ones()).unwrap();
            }
        }
        out
    };
    Ok(Report::ok(text))
}

fn sign_text(sign: i8) -> &'static str {
    if sign < 0 {
        "-I"
    } else {
        "+I"
    }
}

pub fn mermin(trace: bool, json_out: bool) -> CliResult<Report> {
    let sq = build_pm_square()?;
    let satisfying = exhaustive_unsat(&sq);
    let alg = algebraic_contradiction(&sq);
    let odd_lines = sq.odd_lines();
    let steps = if trace {
        Some(transitivity_trace(&sq, DEFAULT_SEED)?)
    } else {
        None
    };
    let ok = satisfying == 0 && alg.is_contradiction() && odd_lines.len() == 1;

    let text = if json_out {
        let grid: Vec<Vec<String>> = sq
            .grid
            .iter()
            .map(|row| row.iter().map(|o| o.to_string()).collect())
            .collect();
        let mut doc = json!({
            "grid": grid,
            "rowProducts": sq.row_signs,
            "columnProducts": sq.col_signs,
            "oddLines": odd_lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "satisfyingAssignments": satisfying,
            "assignments": 512,
            "summedConstraints": { "lhs": if alg.lhs_cells == 0 { 0 } else { 1 }, "rhs": u8::from(alg.rhs) },
        });
        if let Some(t) = &steps {
            doc["trace"] = json!({
                "seeds": t.seeds.iter().map(|(p, e)| json!({ "cell": p.to_string(), "value": e.to_string() })).collect::<Vec<_>>(),
                "steps": t.steps.iter().map(|s| json!({ "cell": s.cell.to_string(), "value": s.expr.to_string(), "via": s.line.to_string() })).collect::<Vec<_>>(),
                "closingLine": t.closing_line.to_string(),
                "rederived": { "cell": t.contradiction_cell.to_string(), "value": t.final_expr.to_string() },
            });
        }
        pretty(&doc)
    } else {
        let mut out = String::from("Peres-Mermin square\n");
        writeln!(out, "         col 1  col 2  col 3  product").unwrap();
        for r in 0..3 {
            let cells = joined(
                (0..3).map(|c| format!("{:<5}", sq.cell(Position::new(r, c)).to_string())),
                "  ",
            );
            writeln!(
                out,
                "row {}    {cells}  {}",
                r + 1,
                sign_text(sq.sign(GridLine::Row(r)))
            )
            .unwrap();
        }
        let col_products = joined(
            (0..3).map(|c| format!("{:<5}", sign_text(sq.sign(GridLine::Col(c))))),
            "  ",
        );
        writeln!(out, "product  {}", col_products.trim_end()).unwrap();
        writeln!(out, "odd lines: {}", joined(odd_lines.iter(), ", ")).unwrap();
        writeln!(
            out,
            "sum of all six constraints: {} = {}",
            if alg.lhs_cells == 0 { 0 } else { 1 },
            u8::from(alg.rhs)
        )
        .unwrap();
        writeln!(out, "satisfying assignments: {satisfying} of 512").unwrap();
        if let Some(t) = &steps {
            writeln!(out, "trace, holding back {}:", t.closing_line).unwrap();
            for (p, e) in &t.seeds {
                writeln!(out, "  {p} = {e}  (seed)").unwrap();
            }
            for s in &t.steps {
                writeln!(out, "  {} = {}  ({})", s.cell, s.expr, s.line).unwrap();
            }
            writeln!(
                out,
                "{} re-derives {} = {}, contradicting {} = {}",
                t.closing_line, t.contradiction_cell, t.final_expr, t.seeds[0].0, t.seeds[0].1
            )
            .unwrap();
        }
        out
    };
    Ok(Report::with_status(text, ok))
}

pub fn symmetry(json_out: bool) -> CliResult<Report> {
    let order = automorphism_order();
    let agrees = order == EXPECTED_AUTOMORPHISMS;
    let text = if json_out {
        pretty(
            &json!({ "automorphisms": order, "expected": EXPECTED_AUTOMORPHISMS, "agrees": agrees }),
        )
    } else {
        format!(
            "automorphisms preserving the bases: {order}\nexpected: {EXPECTED_AUTOMORPHISMS}\n{}\n",
            if agrees { "agrees" } else { "DISAGREES" }
        )
    };
    Ok(Report::with_status(text, agrees))
}

pub fn export(path: &Path, include_proofs: bool) -> CliResult<Report> {
    let doc = PuzzleDocument::build(include_proofs)?;
    doc.write(path)?;
    let proofs = doc.known_proofs.as_ref().map_or(0, Vec::len);
    Ok(Report::ok(format!(
        "wrote {}: {} rays, {} bases, {} basis-lines, {proofs} known proofs\nchecksum {}\n",
        path.display(),
        doc.rays.len(),
        doc.bases.len(),
        doc.basis_lines.len(),
        doc.checksum
    )))
}

pub fn validate(path: &Path) -> CliResult<Report> {
    let doc = PuzzleDocument::read(path)?;
    doc.validate()?;
    Ok(Report::ok(format!("valid, checksum {}\n", doc.checksum)))
}
