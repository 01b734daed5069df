//! Text renderings. Each carries the same verdict data as the JSON form.

use std::fmt::Write;

use paracon::gallery::BuiltinInfo;
use paracon::io::Report;
use paracon::miner::MineResult;
use paracon::partial::MaximalPairReport;
use paracon::principles::battery::BatteryReport;
use paracon::principles::qn::{KiteLaw, QuasiNegations};

pub fn report(r: &Report) -> String {
    let mut out = format!("logic: {}\ninput digest: {}\n", r.logic, r.input_digest);
    for c in &r.checks {
        let _ = writeln!(out, "{}: {}", c.principle, c.verdict);
    }
    out
}

pub fn quasi_negations(q: &QuasiNegations) -> String {
    format!("QN({}) = {{{}}} [{}]\n", q.alpha, q.members.join(", "), q.scope)
}

pub fn kite(laws: &[KiteLaw]) -> String {
    let mut out = String::new();
    for l in laws {
        let verdict = if l.holds() { "holds".to_string() } else { format!("{} violations", l.violations) };
        let _ = write!(out, "{} [{}]: {verdict} of {} checked", l.law, l.reading, l.checked);
        if let Some(e) = &l.example {
            let _ = write!(out, "; first: {e}");
        }
        out.push('\n');
    }
    out
}

pub fn mined(r: &MineResult) -> String {
    match r {
        MineResult::Found(s) => {
            let sets: Vec<String> = s.trivial_sets.iter().map(|t| format!("{{{}}}", t.join(", "))).collect();
            let mut out = format!("found on {} elements ({})\ntrivial sets: {}\n", s.carrier, s.scope, sets.join(" "));
            for (op, map) in &s.structure.unary_ops {
                let _ = writeln!(out, "{op}: {map:?}");
            }
            out
        }
        MineResult::None { max_carrier } => format!("none on carriers up to {max_carrier}\n"),
        MineResult::Unknown { exhaustive_up_to, samples } => {
            format!("none found; exhaustive up to {exhaustive_up_to}, {samples} samples per larger carrier\n")
        }
    }
}

pub fn pairs(r: &MaximalPairReport) -> String {
    let mut out = format!("{} maximal pairs, {} covering the carrier\n", r.maximal, r.covering);
    for (g, d) in &r.pairs {
        let _ = writeln!(out, "({{{}}}, {{{}}})", g.join(", "), d.join(", "));
    }
    out
}

pub fn gallery(list: &[BuiltinInfo]) -> String {
    list.iter().map(|b| format!("{:<16} {:<8} {}\n", b.name, format!("{:?}", b.kind).to_lowercase(), b.summary)).collect()
}

pub fn battery(r: &BatteryReport) -> String {
    let mut out = format!("{} structures on {} elements ({})\n", r.structures, r.carrier, r.scope);
    for l in &r.laws {
        let status = if l.violations == 0 { "ok" } else { "VIOLATED" };
        let _ = writeln!(out, "  {status:<8} {} (applicable {}, violations {})", l.law, l.applicable, l.violations);
    }
    out
}
