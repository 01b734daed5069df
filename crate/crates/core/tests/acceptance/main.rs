//! Acceptance run: one PASS/FAIL line per criterion, details indented below it.
//!
//! Criteria listed in `KNOWN_RED` are still run and still print FAIL; they do not fail
//! the process. Any other failure does.

use std::process::ExitCode;
use std::time::Instant;

use paracon::companions::{entails_companion, CompanionMode, CompanionOptions};
use paracon::formula::Formula;
use paracon::gallery::{load_builtin, BuiltinId};
use paracon::matrix::Matrix;
use paracon::miner::{find_separation, MineResult, SeparationQuery};
use paracon::par::Exec;
use paracon::principles::battery;
use paracon::principles::lfi;
use paracon::principles::qn::kite;
use paracon::principles::universe::{semantic_pool, Backend, Universe};
use paracon::principles::{check, Budget, Logic, PrincipleId, ScopeKind, Status, Verdict};
use paracon::structure::FiniteStructure;

/// Criterion 7 asks for zero violations of law (4) read literally; CPC violates it. See
/// the README.
const KNOWN_RED: &[usize] = &[7];

type Outcome = Result<Vec<String>, Vec<String>>;
/// Principle, status, and the witness as displayed when it is pinned.
type Expectation = (&'static str, Status, Option<&'static str>);
type Criterion = (&'static str, fn() -> Outcome);

struct Log {
    lines: Vec<String>,
    ok: bool,
}

impl Log {
    fn new() -> Self {
        Log { lines: Vec::new(), ok: true }
    }

    fn expect(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.lines.push(if ok { line } else { format!("MISMATCH {line}") });
        self.ok &= ok;
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn done(self) -> Outcome {
        if self.ok {
            Ok(self.lines)
        } else {
            Err(self.lines)
        }
    }
}

fn builtin(name: &str) -> Logic {
    load_builtin(&name.parse::<BuiltinId>().unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn matrix(name: &str) -> Matrix {
    match builtin(name) {
        Logic::Matrix(m) => m,
        _ => panic!("{name} is not a matrix"),
    }
}

fn verdict(logic: &Logic, principle: &str) -> Verdict {
    let p: PrincipleId = principle.parse().unwrap();
    check(logic, &p, &Budget::default()).unwrap_or_else(|e| panic!("{principle}: {e}"))
}

fn witness(v: &Verdict) -> String {
    v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
}

fn battery_laws() -> Outcome {
    let mut log = Log::new();
    let report = |r: battery::BatteryReport, log: &mut Log| {
        let violated: Vec<String> = r.laws.iter().filter(|l| l.violations > 0).map(|l| l.law.to_string()).collect();
        log.expect(
            r.passed(),
            format!("{} structures on {} elements ({}): {} laws, violated: {violated:?}", r.structures, r.carrier, r.scope, r.laws.len()),
        );
    };
    let start = Instant::now();
    let r = battery::exhaustive(3, Exec::Parallel);
    log.expect(r.structures == 1 << 24, format!("exhaustive table count {}", r.structures));
    report(r, &mut log);
    report(battery::ecq_sampled(3, 1_000_000, 0, Exec::Parallel), &mut log);
    for n in 4..=6 {
        report(battery::sampled(n, 20_000, 0, Exec::Parallel), &mut log);
    }
    log.note(format!("{:.1}s", start.elapsed().as_secs_f64()));
    log.done()
}

fn gallery() -> Outcome {
    let mut log = Log::new();
    let cases: &[(&str, &[Expectation])] = &[
        ("ex-3-5", &[("secq", Status::Proven, None), ("specq", Status::Refuted, Some("Γ = {1, 4}")), ("gecq", Status::Refuted, Some("α = 3"))]),
        ("ex-3-9", &[("pfecq", Status::Proven, None), ("specq", Status::Refuted, None), ("gecq", Status::Refuted, None)]),
        ("ex-3-10", &[("gecq", Status::Proven, None), ("pfecq", Status::Refuted, Some("Γ = {0, 1, 2}")), ("specq", Status::Refuted, None)]),
        ("ex-3-13", &[("ecq:f", Status::Proven, None), ("specq", Status::Refuted, None), ("pfecq", Status::Refuted, None)]),
        ("ex-3-17", &[("pfecq", Status::Proven, None), ("secq", Status::Proven, None), ("fin_triv:3", Status::Refuted, None)]),
        ("ex-4-6", &[("parecq", Status::Proven, None), ("gecq", Status::Refuted, None)]),
    ];
    for (name, expected) in cases {
        let logic = builtin(name);
        for &(p, status, shown) in *expected {
            let v = verdict(&logic, p);
            let ok = v.status == status && shown.map_or(true, |s| witness(&v) == s);
            log.expect(ok, format!("{name} {p}: {v}"));
        }
    }
    log.done()
}

/// Every premise set of at most two pool classes and every pool class as conclusion.
/// Entailment in all four logics depends only on the columns and the variables, so the
/// classes of the joint pool stand for the whole syntactic pool.
fn companion_oracle() -> Outcome {
    let mut log = Log::new();
    let (cpc, pwk, b3) = (matrix("cpc"), matrix("pwk"), matrix("b3"));
    let pool = semantic_pool(&[&cpc, &pwk, &b3], &[0, 1], 3, 100_000).unwrap();
    let fs: Vec<Formula> = pool.into_iter().map(|e| e.formula).collect();
    let opts = CompanionOptions::default();
    let mut premise_sets: Vec<Vec<Formula>> = vec![Vec::new()];
    for (i, a) in fs.iter().enumerate() {
        premise_sets.push(vec![a.clone()]);
        for b in &fs[i + 1..] {
            premise_sets.push(vec![a.clone(), b.clone()]);
        }
    }
    let (mut checked, mut left_bad, mut right_bad) = (0usize, Vec::new(), Vec::new());
    for g in &premise_sets {
        for a in &fs {
            checked += 1;
            if pwk.entails(g, a).unwrap() != entails_companion(&cpc, CompanionMode::Left, g, a, &opts).unwrap() {
                left_bad.push((g.clone(), a.clone()));
            }
            if b3.entails(g, a).unwrap() != entails_companion(&cpc, CompanionMode::Right, g, a, &opts).unwrap() {
                right_bad.push((g.clone(), a.clone()));
            }
        }
    }
    let show = |bad: &[(Vec<Formula>, Formula)]| {
        bad.first().map_or(String::new(), |(g, a)| {
            let g: Vec<String> = g.iter().map(|f| f.display(cpc.signature()).to_string()).collect();
            format!("; first: {{{}}} ⊢ {}", g.join(", "), a.display(cpc.signature()))
        })
    };
    log.note(format!("{} pool classes, {} premise sets, {checked} entailments per pair of logics", fs.len(), premise_sets.len()));
    log.expect(left_bad.is_empty(), format!("PWK vs CPC left companion: {} mismatches{}", left_bad.len(), show(&left_bad)));
    log.expect(right_bad.is_empty(), format!("B3 vs CPC right companion: {} mismatches{}", right_bad.len(), show(&right_bad)));
    log.done()
}

fn named_logics() -> Outcome {
    let mut log = Log::new();
    let bounded_proven = |v: &Verdict| v.is(Status::Proven) && v.scope.kind == ScopeKind::Bounded;

    let pwk = builtin("pwk");
    let v = verdict(&pwk, "ecq:¬");
    log.expect(v.is(Status::Refuted), format!("pwk ecq: {v}"));
    for p in ["gecq", "secq", "specq", "pfecq"] {
        let v = verdict(&pwk, p);
        log.expect(bounded_proven(&v) && witness(&v).contains('⊥'), format!("pwk {p}: {v}"));
    }

    let p1 = matrix("p1");
    let logic = Logic::Matrix(p1.clone());
    let v = verdict(&logic, "ecq:¬");
    log.expect(v.is(Status::Refuted) && witness(&v).starts_with("{p, ¬p}"), format!("p1 ecq: {v}"));
    let neg = p1.signature().require("¬").unwrap();
    let (mut compound, mut bad) = (0, Vec::new());
    for e in semantic_pool(&[&p1], &[0, 1], 3, 100_000).unwrap() {
        let pair = [e.formula.clone(), Formula::unary(neg, e.formula.clone())];
        let trivial = p1.trivializes(&pair).unwrap();
        if matches!(e.formula, Formula::Var(_)) {
            if trivial {
                bad.push(e.formula);
            }
        } else {
            compound += 1;
            if !trivial {
                bad.push(e.formula);
            }
        }
    }
    log.expect(bad.is_empty(), format!("p1 {{α, ¬α}} explodes for all {compound} non-variable pool classes and for no variable"));
    let bottom = p1.signature().parse("¬(p → p)").unwrap();
    log.expect(p1.trivializes(&[bottom]).unwrap(), "p1 trivializes {¬(p → p)}");
    for p in ["gecq", "secq", "specq", "pfecq"] {
        let v = verdict(&logic, p);
        log.expect(bounded_proven(&v), format!("p1 {p}: {v}"));
    }

    let Logic::Companion(pl) = builtin("cpc^pl:¬,∧,∨,→") else { panic!() };
    let p = Formula::Var(0);
    let pool = semantic_pool(&[pl.base()], &[0, 1], 3, 100_000).unwrap();
    let trivial_pairs = pool.iter().filter(|e| pl.trivializes(&[p.clone(), e.formula.clone()]).unwrap()).count();
    log.expect(trivial_pairs == 0, format!("cpc^pl over ¬ ∧ ∨ →: {trivial_pairs} of {} pool β make {{p, β}} trivial", pool.len()));
    let v = verdict(&builtin("cpc^pr"), "nf_para");
    log.expect(v.is(Status::Proven), format!("cpc^pr nf_para: {v}"));

    for name in ["lp", "pac"] {
        let v = verdict(&builtin(name), "fin_triv:3");
        log.expect(v.is(Status::Refuted), format!("{name} fin_triv:3: {v}"));
    }
    log.done()
}

fn reverify(sep: &paracon::miner::Separation, query: &SeparationQuery) -> Result<(), String> {
    let s = FiniteStructure::try_from(&sep.structure).map_err(|e| e.to_string())?;
    let logic = Logic::Finite(s);
    for r in &query.require {
        let v = check(&logic, &r.principle, &Budget::default()).map_err(|e| e.to_string())?;
        if v.status != r.status || v.scope.kind != ScopeKind::Exact {
            return Err(format!("{} re-checks as {v}", r.principle.name()));
        }
    }
    Ok(())
}

fn miner() -> Outcome {
    let mut log = Log::new();
    let query = |req: &str, max: usize| SeparationQuery::new(SeparationQuery::parse_requirements(req).unwrap(), max);
    for req in ["secq=proven,gecq=refuted", "pfecq=proven,specq=refuted", "ecq:neg=proven,pfecq=refuted", "parecq=proven,gecq=refuted"] {
        let q = query(req, 4);
        match find_separation(&q, Exec::Parallel).unwrap() {
            MineResult::Found(sep) => {
                let sets: Vec<String> = sep.trivial_sets.iter().map(|t| format!("{{{}}}", t.join(","))).collect();
                let verified = reverify(&sep, &q);
                let minimal = sep.carrier == 1 || matches!(find_separation(&query(req, sep.carrier - 1), Exec::Parallel).unwrap(), MineResult::None { .. });
                log.expect(
                    verified.is_ok() && minimal,
                    format!(
                        "{req}: n = {}, trivial sets {}, re-verified exactly: {}, none smaller: {minimal}",
                        sep.carrier,
                        sets.join(" "),
                        verified.map_or_else(|e| e, |_| "yes".into())
                    ),
                );
            }
            other => log.expect(false, format!("{req}: {other:?}")),
        }
    }
    let r = find_separation(&query("secq=proven,gecq=refuted", 3), Exec::Parallel).unwrap();
    log.note(format!("secq=proven,gecq=refuted on carriers up to 3: {}", serde_json::to_string(&r).unwrap()));
    log.expect(matches!(r, MineResult::None { max_carrier: 3 }), "no sECQ ∧ ¬gECQ structure on 3 elements (exhaustive)");
    let mut q = query("ecq:neg=proven,pfecq=refuted", 3);
    q.min_carrier = 3;
    let r = find_separation(&q, Exec::Parallel).unwrap();
    log.expect(matches!(&r, MineResult::Found(s) if s.carrier == 3), "ecq ∧ ¬pfecq also separated on exactly 3 elements");
    log.done()
}

fn lfi_suite() -> Outcome {
    let mut log = Log::new();
    let p1 = matrix("p1");
    let sig = p1.signature();
    let neg = sig.require("¬").unwrap();
    let Some(circle) = lfi::find_consistency_set(&p1, neg, 3).unwrap() else {
        log.expect(false, "no consistency set found for p1 up to depth 3");
        return log.done();
    };
    log.note(format!("○(p) = {{{}}}", circle.display(sig)));
    let u = Universe::build(Backend { matrix: &p1, mode: None }, vec![0, 1], 3, 100_000).unwrap();
    for c in lfi::verify(&u, neg, std::slice::from_ref(&circle)).unwrap() {
        log.expect(c.status == Status::Proven, format!("clause {}: {} ({})", c.clause, c.status, c.detail));
    }
    let logic = Logic::Matrix(p1.clone());
    for p in ["pfecq", "secq"] {
        let v = verdict(&logic, p);
        log.expect(v.is(Status::Proven), format!("p1 {p}: {v}"));
    }
    let p = Formula::Var(0);
    let set = [circle, p.clone(), Formula::unary(neg, p)];
    match lfi::conjunctive_collapse(&p1, &set).unwrap() {
        Some(f) => log.expect(true, format!("single trivializer {}", f.display(sig))),
        None => log.expect(false, "○(p) ∪ {p, ¬p} does not collapse to one trivializing formula"),
    }
    log.done()
}

fn kite_laws() -> Outcome {
    let mut log = Log::new();
    let laws = kite(&matrix("cpc"), &Budget::default()).unwrap();
    for l in &laws {
        let mut line = format!("{} [{}]: {} violations of {}", l.law, l.reading, l.violations, l.checked);
        if let Some(e) = &l.example {
            line += &format!("; first: {e}");
        }
        log.expect(l.holds(), line);
    }
    log.done()
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("theorem battery", battery_laws),
        ("counterexample gallery", gallery),
        ("companion cross-validation", companion_oracle),
        ("named logics", named_logics),
        ("miner separations", miner),
        ("LFI suite", lfi_suite),
        ("quasi-negation kite on CPC", kite_laws),
    ];
    let mut unexpected = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let (ok, lines) = match run() {
            Ok(l) => (true, l),
            Err(l) => (false, l),
        };
        let known = KNOWN_RED.contains(&n);
        let tag = match (ok, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("{tag} criterion {n}: {title} [{:.1}s]", start.elapsed().as_secs_f64());
        for l in lines {
            println!("    {l}");
        }
        if !ok && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
