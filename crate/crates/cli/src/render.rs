//! Human-readable output.

use std::fmt::Write;

use lefschetz_core::betti::BettiTable;
use lefschetz_core::props::{Certainty, CertificateSummary, Decision, PropertyReport};

use crate::document::{CommandResult, ReportDocument, Status, SuiteReport, VerifyResult};

fn decision(d: &Decision) -> String {
    match d.certainty {
        Certainty::Exact => d.value.to_string(),
        Certainty::Probabilistic => format!("{} (probabilistic)", d.value),
    }
}

fn list<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn monomials(gens: &[Vec<u32>], vars: Option<&[String]>) -> String {
    let names: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => (1..=gens.first().map_or(0, Vec::len)).map(|i| format!("x{i}")).collect(),
    };
    let words: Vec<String> = gens
        .iter()
        .map(|e| {
            let factors: Vec<String> = e
                .iter()
                .zip(&names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            if factors.is_empty() {
                "1".into()
            } else {
                factors.join("*")
            }
        })
        .collect();
    words.join(", ")
}

/// Rows indexed by `j - i`, columns by `i`, in the usual layout.
pub fn betti_diagram(table: &BettiTable) -> String {
    let Some(max_i) = table.entries.keys().map(|&(i, _)| i).max() else {
        return "(zero)\n".into();
    };
    let shifts: Vec<i64> = table.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
    let (lo, hi) = (*shifts.iter().min().unwrap(), *shifts.iter().max().unwrap());
    let width = table.entries.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(max_i.to_string().len());
    let mut out = String::new();
    write!(out, "{:>4}:", "").unwrap();
    for i in 0..=max_i {
        write!(out, " {i:>width$}").unwrap();
    }
    out.push('\n');
    for s in lo..=hi {
        write!(out, "{s:>4}:").unwrap();
        for i in 0..=max_i {
            let j = s + i as i64;
            let b = if j >= 0 { table.at(i, j as u32) } else { 0 };
            let cell = if b == 0 { "-".to_string() } else { b.to_string() };
            write!(out, " {cell:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn certificate(out: &mut String, c: &CertificateSummary) {
    writeln!(out, "witness: {}", c.witness).unwrap();
    writeln!(out, "socle lift degrees: {}", list(&c.socle_lift_degrees)).unwrap();
    writeln!(out, "residual degrees: {}", list(&c.residual_degrees)).unwrap();
}

fn analyze(out: &mut String, r: &PropertyReport, vars: Option<&[String]>) {
    writeln!(out, "hilbert: {}", list(&r.hilbert.values)).unwrap();
    let socle: Vec<String> = r.socle.dims.iter().map(|(j, v)| format!("{j}:{v}")).collect();
    writeln!(out, "socle: {}", socle.join(" ")).unwrap();
    writeln!(out, "d: {}", r.d).unwrap();
    writeln!(out, "delta: {}", r.delta).unwrap();
    writeln!(out, "m-full: {}", decision(&r.m_full)).unwrap();
    if let Some(c) = &r.certificate {
        certificate(out, c);
    }
    writeln!(out, "completely m-full: {}", decision(&r.completely_m_full)).unwrap();
    if let Some(s) = r.stable {
        writeln!(out, "stable: {s}").unwrap();
    }
    if let Some(c) = r.componentwise_linear {
        writeln!(out, "componentwise linear: {c}").unwrap();
    }
    writeln!(out, "wlp: {}", decision(&r.wlp)).unwrap();
    if let Some(t) = &r.betti_ideal {
        writeln!(out, "betti numbers of the ideal:").unwrap();
        out.push_str(&betti_diagram(t));
    }
    if let Some(g) = &r.gin_generators {
        writeln!(out, "gin: {}", monomials(g, vars)).unwrap();
    }
}

fn verify(out: &mut String, v: &VerifyResult) {
    for inst in &v.instances {
        writeln!(out, "instance {} (seed {}): {}", inst.index, inst.seed, inst.ideal.generators.join(", ")).unwrap();
        for o in &inst.outcomes {
            let status = match o.status {
                Status::Passed => "passed",
                Status::Failed => "FAILED",
                Status::Skipped => "skipped",
                Status::GenericityFailure => "GENERICITY FAILURE",
            };
            write!(out, "  {:<20} {status}", o.suite.name()).unwrap();
            if let Some(reason) = &o.reason {
                write!(out, ": {reason}").unwrap();
            }
            out.push('\n');
            if let Some(r) = &o.report {
                let checks = match r {
                    SuiteReport::BettiSplitting(r) => &r.checks,
                    SuiteReport::WlpBetti(r) => &r.checks,
                    SuiteReport::WlpMfullReduction(r) => {
                        writeln!(
                            out,
                            "    reduction m-full: {}, wlp: {}, last betti condition: {}, all betti conditions: {}",
                            r.hypothesis,
                            decision(&r.wlp),
                            r.betti_last,
                            r.betti_all
                        )
                        .unwrap();
                        &r.checks
                    }
                    SuiteReport::CmfullCwl(r) => &r.checks,
                    SuiteReport::Invariants(r) => &r.checks,
                };
                for c in checks.iter().filter(|c| !c.holds || o.status == Status::Failed) {
                    writeln!(out, "    {}: {}", c.name, c.holds).unwrap();
                }
            }
        }
    }
    let s = &v.summary;
    writeln!(
        out,
        "summary: {} passed, {} failed, {} skipped, {} genericity failures",
        s.passed, s.failed, s.skipped, s.genericity_failures
    )
    .unwrap();
}

pub fn render(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let vars = doc.input.as_ref().map(|i| i.vars.as_slice());
    match &doc.result {
        CommandResult::Analyze(r) => analyze(&mut out, r, vars),
        CommandResult::Betti(t) => out.push_str(&betti_diagram(t)),
        CommandResult::Hilbert(h) => writeln!(out, "hilbert: {}", list(&h.values)).unwrap(),
        CommandResult::Gin { generators, stable } => {
            writeln!(out, "gin: {}", monomials(generators, vars)).unwrap();
            writeln!(out, "stable: {stable}").unwrap();
        }
        CommandResult::Stable { generators, stable } => {
            writeln!(out, "minimal generators: {}", monomials(generators, vars)).unwrap();
            writeln!(out, "stable: {stable}").unwrap();
        }
        CommandResult::MFull { decision: d, certificate: c } => {
            writeln!(out, "m-full: {}", decision(d)).unwrap();
            if let Some(c) = c {
                certificate(&mut out, c);
            }
        }
        CommandResult::CompletelyMFull { decision: d } => writeln!(out, "completely m-full: {}", decision(d)).unwrap(),
        CommandResult::Wlp { decision: d, witness } => {
            writeln!(out, "wlp: {}", decision(d)).unwrap();
            if let Some(w) = witness {
                writeln!(out, "lefschetz element: {w}").unwrap();
            }
        }
        CommandResult::ComponentwiseLinear { value } => writeln!(out, "componentwise linear: {value}").unwrap(),
        CommandResult::Verify(v) => verify(&mut out, v),
        CommandResult::Gen { text, .. } => out.push_str(text),
    }
    if let Some(ms) = doc.provenance.elapsed_ms {
        writeln!(out, "elapsed: {ms} ms").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn diagram_layout() {
        let entries = BTreeMap::from([((0, 2), 3), ((1, 3), 2)]);
        let table = BettiTable { tag: lefschetz_core::ModuleTag::Ideal, nvars: 2, entries };
        assert_eq!(betti_diagram(&table), "    : 0 1\n   2: 3 2\n");
    }

    #[test]
    fn monomial_names() {
        let vars = vec!["x".to_string(), "y".to_string()];
        assert_eq!(monomials(&[vec![2, 0], vec![1, 1]], Some(&vars)), "x^2, x*y");
        assert_eq!(monomials(&[vec![0, 3]], None), "x2^3");
    }
}
