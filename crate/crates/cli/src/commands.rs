use anyhow::{Context, Result};
use frustration_core::certify::{
    check_trace, degree_sequence_bound, deletion_sets_from_trace, matching_switching,
    reduce_cubic_girth4, three_eighths_bound, verify_certificate, vertex_to_edge_set,
    VerificationReport,
};
use frustration_core::{
    frustration_index_exact, frustration_index_oracle, frustration_number_exact,
    frustration_number_oracle, is_balanced, Balance, Budget, DeletionCertificate,
    FrustrationResult, Girth, Sign, SignedGraph,
};
use serde::Serialize;
use serde_json::json;

use crate::report::{aligned, list, yes_no, Report};

#[derive(Debug, Clone, Copy)]
pub enum Solver {
    Index,
    Number,
    OracleIndex,
    OracleNumber,
}

fn run_solver(g: &SignedGraph, b: &Budget, solver: Solver) -> Result<FrustrationResult> {
    let r = match solver {
        Solver::Index => frustration_index_exact(g, b),
        Solver::Number => frustration_number_exact(g, b),
        Solver::OracleIndex => frustration_index_oracle(g, b),
        Solver::OracleNumber => frustration_number_oracle(g, b),
    };
    Ok(r?)
}

fn describe(cert: &DeletionCertificate) -> String {
    let kind = match cert {
        DeletionCertificate::Edges(_) => "edges",
        DeletionCertificate::Vertices(_) => "vertices",
    };
    format!("{kind} {}", list(cert.indices()))
}

pub fn solve(g: &SignedGraph, b: &Budget, solver: Solver) -> Result<Report> {
    let r = run_solver(g, b, solver)?;
    let v = verify_certificate(g, &r.certificate, Some(r.value))?;
    let mut rows = vec![
        ("method", r.method.to_string()),
        ("certificate", describe(&r.certificate)),
    ];
    if let Some(s) = &r.switching {
        rows.push(("switching", list(s.members())));
    }
    rows.push(("verified", yes_no(v.valid)));
    Ok(Report {
        text: format!("{}\n{}", r.value, aligned(&rows)),
        structured: json!({ "value": r.value, "result": r, "verification": v }),
        verified: v.valid,
    })
}

pub fn balance(g: &SignedGraph) -> Result<Report> {
    let verdict = is_balanced(g);
    let (rows, verified) = match &verdict {
        Balance::Balanced(cert) => (
            vec![
                ("balanced", yes_no(true)),
                ("switching", list(cert.negative_vertices().members())),
            ],
            cert.verify(g),
        ),
        Balance::Unbalanced { witness } => (
            vec![
                ("balanced", yes_no(false)),
                ("negative circle", list(witness)),
            ],
            g.is_circle(witness) && g.cycle_sign(witness)? == Sign::Negative,
        ),
    };
    Ok(Report {
        text: aligned(&rows),
        structured: json!({ "balanced": verdict.is_balanced(), "certificate": verdict, "verified": verified }),
        verified,
    })
}

pub fn vertex_to_edge(g: &SignedGraph, vertices: &[usize]) -> Result<Report> {
    let cert = vertex_to_edge_set(g, vertices)?;
    let edges = cert.all_edges();
    let v = verify_certificate(g, &DeletionCertificate::Edges(edges.clone()), None)?;
    let verified = v.valid && edges.len() <= vertices.len();
    let mut rows = vec![
        ("vertex set", list(&cert.vertex_set)),
        ("negative loops", list(&cert.forced_loop_edges)),
    ];
    for (s, n) in cert.switching_history.iter().zip(&cert.negative_counts) {
        rows.push(("switch", format!("{} -> {n} negative", list(s.members()))));
    }
    rows.push(("edge set", list(&edges)));
    rows.push(("size", format!("{} <= {}", edges.len(), vertices.len())));
    rows.push(("verified", yes_no(verified)));
    Ok(Report {
        text: aligned(&rows),
        structured: json!({ "certificate": cert, "edge_set": edges, "verification": v, "verified": verified }),
        verified,
    })
}

pub fn bound(g: &SignedGraph, k: usize) -> Result<Report> {
    let value = degree_sequence_bound(g, k)?;
    Ok(Report {
        text: format!("{value}\n"),
        structured: json!({ "k": k, "bound": value }),
        verified: true,
    })
}

pub fn matching(g: &SignedGraph) -> Result<Report> {
    let m = matching_switching(g)?;
    let negatives = m.negative_edges();
    let deletion = m.deletion_vertices();
    let v = verify_certificate(g, &DeletionCertificate::Vertices(deletion.clone()), None)?;
    let half = 2 * deletion.len() <= g.vertex_count();
    let verified = v.valid && half;
    let mut rows = Vec::new();
    for (s, n) in m.history.iter().zip(&m.negative_counts) {
        rows.push(("switch", format!("{} -> {n} negative", list(s.members()))));
    }
    rows.push(("negative matching", list(&negatives)));
    rows.push(("deletion vertices", list(&deletion)));
    rows.push((
        "size",
        format!("{} <= {}/2", deletion.len(), g.vertex_count()),
    ));
    rows.push(("verified", yes_no(verified)));
    Ok(Report {
        text: aligned(&rows),
        structured: json!({
            "switching": m,
            "negative_edges": negatives,
            "deletion_vertices": deletion,
            "verification": v,
            "verified": verified,
        }),
        verified,
    })
}

pub fn reduce(g: &SignedGraph) -> Result<Report> {
    let trace = reduce_cubic_girth4(g)?;
    check_trace(g, &trace).context("reduction trace failed its replay check")?;
    let sets = deletion_sets_from_trace(&trace);
    let limit = three_eighths_bound(g.vertex_count());
    let ve = verify_certificate(g, &DeletionCertificate::Edges(sets.edges.clone()), None)?;
    let vv = verify_certificate(
        g,
        &DeletionCertificate::Vertices(sets.vertices.clone()),
        None,
    )?;
    let verified =
        ve.valid && vv.valid && sets.edges.len() <= limit && sets.vertices.len() <= limit;

    let mut rows = vec![(
        "initial negatives",
        trace.initial_negative_count.to_string(),
    )];
    for s in &trace.steps {
        rows.push((
            "step",
            format!(
                "{} {} -> {} negative",
                s.op,
                list(s.switched.members()),
                s.negative_count_after
            ),
        ));
    }
    rows.push(("x", list(&trace.x)));
    rows.push(("edge set", list(&sets.edges)));
    rows.push(("vertex set", list(&sets.vertices)));
    rows.push(("bound", format!("{} <= {limit}", sets.edges.len())));
    rows.push(("verified", yes_no(verified)));
    Ok(Report {
        text: aligned(&rows),
        structured: json!({
            "trace": trace,
            "deletion_sets": sets,
            "bound": limit,
            "verification": { "edges": ve, "vertices": vv },
            "verified": verified,
        }),
        verified,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    verdict: Verdict,
    detail: String,
}

fn check(name: &'static str, ok: bool, detail: String) -> Check {
    Check {
        name,
        verdict: Verdict::of(ok),
        detail,
    }
}

fn skip(name: &'static str, why: String) -> Check {
    Check {
        name,
        verdict: Verdict::NotApplicable,
        detail: why,
    }
}

fn certificate_check(name: &'static str, r: &FrustrationResult, v: &VerificationReport) -> Check {
    check(name, v.valid, describe(&r.certificate))
}

/// Runs every applicable check on freshly computed certificates.
pub fn certify(g: &SignedGraph, b: &Budget) -> Result<Report> {
    let n = g.vertex_count();
    let li = frustration_index_exact(g, b)?;
    let ln = frustration_number_exact(g, b)?;
    let vi = verify_certificate(g, &li.certificate, Some(li.value))?;
    let vn = verify_certificate(g, &ln.certificate, Some(ln.value))?;
    let (l, l0) = (li.value, ln.value);

    let mut checks = vec![
        certificate_check("index certificate", &li, &vi),
        certificate_check("number certificate", &ln, &vn),
        check("l0 <= l", l0 <= l, format!("{l0} <= {l}")),
    ];

    let degree_bound = degree_sequence_bound(g, l0)?;
    checks.push(check(
        "degree bound",
        l <= degree_bound,
        format!("{l} <= {degree_bound}"),
    ));

    if g.is_subcubic() {
        checks.push(check("l0 = l (subcubic)", l0 == l, format!("{l0} = {l}")));
        let x = ln.certificate.indices();
        let conversion = vertex_to_edge_set(g, x)?;
        let edges = conversion.all_edges();
        let v = verify_certificate(g, &DeletionCertificate::Edges(edges.clone()), None)?;
        checks.push(check(
            "vertex-to-edge conversion",
            v.valid && edges.len() <= x.len(),
            format!("edges {} from vertices {}", list(&edges), list(x)),
        ));
    } else {
        let why = format!("max degree {}", g.max_degree());
        checks.push(skip("l0 = l (subcubic)", why.clone()));
        checks.push(skip("vertex-to-edge conversion", why));
    }

    if g.is_subcubic() && !g.has_loops() {
        let m = matching_switching(g)?;
        let d = m.deletion_vertices();
        let v = verify_certificate(g, &DeletionCertificate::Vertices(d.clone()), None)?;
        checks.push(check(
            "l0 <= n/2 (matching)",
            v.valid && 2 * d.len() <= n && l0 <= d.len(),
            format!("{l0} <= {} <= {n}/2", d.len()),
        ));
    } else {
        let why = if g.has_loops() {
            "has loops".to_string()
        } else {
            format!("max degree {}", g.max_degree())
        };
        checks.push(skip("l0 <= n/2 (matching)", why));
    }

    let girth = g.girth();
    if g.is_cubic() && girth.at_least(4) {
        let trace = reduce_cubic_girth4(g)?;
        let replay = check_trace(g, &trace);
        let sets = deletion_sets_from_trace(&trace);
        let limit = three_eighths_bound(n);
        let v = verify_certificate(g, &DeletionCertificate::Edges(sets.edges.clone()), None)?;
        checks.push(check(
            "l <= 3n/8 (cubic, girth >= 4)",
            replay.is_ok() && v.valid && l <= sets.edges.len() && sets.edges.len() <= limit,
            format!("{l} <= {} <= {limit}", sets.edges.len()),
        ));
    } else {
        let why = if !g.is_cubic() {
            "not cubic".to_string()
        } else {
            format!("girth {girth}")
        };
        checks.push(skip("l <= 3n/8 (cubic, girth >= 4)", why));
    }

    let verified = checks.iter().all(|c| c.verdict != Verdict::Fail);
    let header = aligned(&[
        ("vertices", n.to_string()),
        ("edges", g.edge_count().to_string()),
        ("girth", girth.to_string()),
        ("l", l.to_string()),
        ("l0", l0.to_string()),
    ]);
    let name_w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let verdict_w = checks
        .iter()
        .map(|c| c.verdict.label().len())
        .max()
        .unwrap_or(0);
    let mut text = header;
    text.push('\n');
    for c in &checks {
        text.push_str(&format!(
            "{:<name_w$}  {:<verdict_w$}  {}\n",
            c.name,
            c.verdict.label(),
            c.detail
        ));
    }
    text.push_str(&format!(
        "\nverdict  {}\n",
        if verified { "verified" } else { "FAILED" }
    ));

    let girth_json = match girth {
        Girth::Finite(k) => json!(k),
        Girth::Infinite => json!(null),
    };
    Ok(Report {
        text,
        structured: json!({
            "vertices": n,
            "edges": g.edge_count(),
            "girth": girth_json,
            "index": li,
            "number": ln,
            "checks": checks,
            "verified": verified,
        }),
        verified,
    })
}
