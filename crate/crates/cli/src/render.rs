//! Plain-text rendering of reports.

use std::fmt::Write;

use abelcodes::GroupElement;

use crate::report::{Payload, Report};

fn list(xs: &[GroupElement]) -> String {
    if xs.is_empty() {
        return "<>".to_string();
    }
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("<{}>", inner.join(", "))
}

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    match &report.result {
        Payload::Eta(e) => {
            let _ = writeln!(w, "group   {}  (order {}, tau {})", e.group, e.order, e.tau);
            let _ = writeln!(w, "eta     {}", e.value);
            if let Some(steps) = &e.derivation {
                for s in steps {
                    let _ = writeln!(w, "  {s}");
                }
            }
            if let Some(b) = e.brute_force {
                let _ = writeln!(w, "brute   {b}");
            }
            if let Some(a) = e.agreement {
                let _ = writeln!(w, "agree   {a}");
            }
        }
        Payload::Inventory(inv) => {
            let _ = writeln!(w, "group {}: {} cocyclic subgroups in {} types (tau {})", inv.group, inv.cocyclic_subgroups, inv.eta, inv.tau);
            let width = inv.rows.iter().map(|r| r.iso_type.len()).max().unwrap_or(4).max(4);
            let _ = writeln!(w, "{:<width$}  {:>6}  representative", "type", "count");
            for r in &inv.rows {
                let _ = writeln!(w, "{:<width$}  {:>6}  {}", r.iso_type, r.count, list(&r.representative));
            }
        }
        Payload::Witness(wt) => {
            let _ = writeln!(w, "group {}", wt.group);
            let _ = writeln!(w, "H = {}  K = {}  (type {}, quotient {})", list(&wt.h), list(&wt.k), wt.iso_type, wt.quotient_type);
            let _ = writeln!(w, "phi: basis -> {}", list(&wt.phi));
            for c in &wt.components {
                let _ = writeln!(w, "  p={} x={} y={} m={} theta[{}]: {} -> {}", c.prime, c.x, c.y, c.m, c.case, list(&c.theta_domain), list(&c.theta_images));
                if let Some(f) = &c.fallback {
                    let _ = writeln!(w, "    fallback: {f}");
                }
            }
            let _ = writeln!(w, "verified {}", wt.verified);
        }
        Payload::Codes(c) => {
            let _ = writeln!(w, "GF({})[{}], splitting degree {}", c.q, c.group, c.extension_degree);
            let _ = writeln!(w, "{:>4}  {:<12}  {:>4}  {:<12}  {:>3}  weights", "#", "class", "size", "kernel", "dim");
            for (i, r) in c.codes.iter().enumerate() {
                let weights = r.weights.as_ref().map_or(String::new(), |m| {
                    m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
                });
                let _ = writeln!(w, "{:>4}  {:<12}  {:>4}  {:<12}  {:>3}  {}", i, r.representative.to_string(), r.class_size, r.kernel_type, r.dimension, weights);
            }
            if let Some(o) = &c.orbits {
                let _ = writeln!(w, "orbits {}  eta {}  agree {}", o.count, o.eta, o.agreement);
                for orbit in &o.orbits {
                    let _ = writeln!(w, "  {orbit:?}");
                }
            }
        }
        Payload::Suite(s) => {
            for c in &s.criteria {
                let verdict = if c.passed { "pass" } else { "FAIL" };
                let _ = writeln!(w, "criterion {}  {:<28} {verdict}  ({} checks)", c.id, c.name, c.checks);
                for f in &c.failures {
                    let _ = writeln!(w, "    {f}");
                }
            }
            let _ = writeln!(w, "seed {}: {}", s.seed, if s.passed { "all criteria pass" } else { "failures" });
        }
        Payload::Error(e) => {
            let _ = writeln!(w, "error: {}", e.message);
        }
    }
    if let Some(ms) = report.timing_ms {
        let _ = writeln!(w, "time {ms:.1} ms");
    }
    out
}
