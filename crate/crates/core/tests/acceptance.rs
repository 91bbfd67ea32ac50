//! One PASS/FAIL line per acceptance criterion.
//!
//! Exits 0 after reporting so the workspace test run stays usable; set
//! `QTET_ACCEPTANCE_STRICT=1` to exit 1 when any criterion fails.

use std::time::{Duration, Instant};

use qtet_core::criterion::{decide, DecideOptions, Decision};
use qtet_core::generate::{derive_qmixed, generate_qgeometric};
use qtet_core::operators::{build_suite, relation_report, serre_alpha, OperatorSuite};
use qtet_core::scalar::{q_binomial, FieldSpec, Scalar};
use qtet_core::split::{compute_split, SplitData};
use qtet_core::tdp::{TdProfile, TriPair};
use qtet_core::words::{all_words, enumerate_irreducible, graded_split, rho_verify};

struct Instance {
    d: usize,
    c_label: &'static str,
    pair: TriPair,
    decision: Decision,
}

struct Harness {
    results: Vec<(usize, bool)>,
}

impl Harness {
    fn record(&mut self, id: usize, title: &str, pass: bool, elapsed: Duration, detail: String) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {id:>2}: {title} [{:.2}s] {detail}", elapsed.as_secs_f64());
        self.results.push((id, pass));
    }
}

fn c_values(field: &FieldSpec) -> [(&'static str, Scalar); 3] {
    [("1", Scalar::from_int(1)), ("2", Scalar::from_int(2)), ("q^2", field.q_pow(2))]
}

fn split_and_suite(pair: &TriPair) -> (SplitData, OperatorSuite) {
    let profile = TdProfile::derive(pair, None).expect("profile");
    let mut split = compute_split(pair, &profile).expect("split");
    let suite = build_suite(pair, &profile, &mut split).expect("suite");
    (split, suite)
}

fn q_pascal(h: &mut Harness) {
    let start = Instant::now();
    let f = FieldSpec::Symbolic;
    let q = f.q();
    let mut bad = Vec::new();
    for n in 2..=12u32 {
        for m in 1..n {
            let (ni, mi) = (i64::from(n), i64::from(m));
            let a = q_binomial(n - 1, mi, &f).unwrap();
            let b = q_binomial(n - 1, mi - 1, &f).unwrap();
            let c = q_binomial(n, mi, &f).unwrap();
            if &a + q.powi(ni) * &b != q.powi(mi) * &c || &a + q.powi(-ni) * &b != q.powi(-mi) * &c {
                bad.push(format!("[{n} {m}]"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(1);
    h.record(1, "q-Pascal identities, n <= 12", pass, elapsed, format!("failures={bad:?}"));
}

fn word_combinatorics(h: &mut Harness) {
    let start = Instant::now();
    let short_ok = (0..4).all(|n| enumerate_irreducible(n).len() == 1 << n);
    let four: Vec<String> = all_words(4).filter(|w| !w.signature().is_unimodal()).map(|w| w.to_string()).collect();
    let four_ok = four == ["xyx^2", "yxy^2"];
    let mut disagreements = 0usize;
    for n in 0..=12 {
        for w in all_words(n) {
            let sig = w.signature();
            if sig.has_valley() == sig.is_unimodal() {
                disagreements += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = short_ok && four_ok && disagreements == 0 && elapsed < Duration::from_secs(10);
    h.record(
        2,
        "word combinatorics, n <= 12",
        pass,
        elapsed,
        format!("reducible_at_4={four:?} disagreements={disagreements}"),
    );
}

fn graded(h: &mut Harness) {
    let start = Instant::now();
    let f = FieldSpec::Symbolic;
    let mut dims = Vec::new();
    let mut ok = true;
    for n in 0..=8 {
        let s = graded_split(n, &f);
        let (o, l) = (s.omega_dim(), s.lambda_dim());
        ok &= o + l == 1 << n && o == enumerate_irreducible(n).len();
        ok &= n > 3 || l == 0;
        ok &= n != 4 || (o, l) == (14, 2);
        dims.push(format!("{n}:{o}+{l}"));
    }
    let elapsed = start.elapsed();
    let pass = ok && elapsed < Duration::from_secs(60);
    h.record(3, "graded split, n <= 8", pass, elapsed, format!("dims=[{}]", dims.join(" ")));
}

fn rewriting(h: &mut Harness, instances: &[Instance]) {
    let f = FieldSpec::Symbolic;
    let Some(inst) = instances.iter().find(|i| i.d == 2) else {
        h.record(4, "rewriting soundness on d = 2", false, Duration::ZERO, "no d = 2 instance".into());
        return;
    };
    let (split, suite) = split_and_suite(&inst.pair);
    let start = Instant::now();
    let literal = rho_verify(&split, &suite, &serre_alpha(&f), &f);
    let elapsed = start.elapsed();
    h.record(
        4,
        "rewriting soundness on d = 2 with alpha = q^-4(q-q^-1)^3[3]!",
        literal.pass,
        elapsed,
        format!(
            "c={} corpus={} failing_relations={:?} corpus_failures={}",
            inst.c_label,
            literal.corpus_size,
            literal.relations.failures(),
            literal.corpus_failures.len()
        ),
    );
    let start = Instant::now();
    let scaled = rho_verify(&split, &suite, &(&inst.decision.c * serre_alpha(&f)), &f);
    println!(
        "info criterion  4: same corpus with alpha = c*q^-4(q-q^-1)^3[3]! -> {} [{:.2}s] corpus_failures={}",
        if scaled.pass { "holds" } else { "fails" },
        start.elapsed().as_secs_f64(),
        scaled.corpus_failures.len()
    );
}

fn round_trips(h: &mut Harness) -> Vec<Instance> {
    let f = FieldSpec::Symbolic;
    let start = Instant::now();
    let mut instances = Vec::new();
    let mut unmet = Vec::new();
    for d in 0..=3 {
        let geo = generate_qgeometric(d, &f).expect("q-geometric generation is gated");
        for (c_label, c) in c_values(&f) {
            let line = match derive_qmixed(&geo, &c) {
                Err(e) => {
                    unmet.push(format!("(d={d},c={c_label})"));
                    format!("not constructible: {e}")
                }
                Ok(pair) => match decide(&pair, &DecideOptions::default()) {
                    Err(e) => {
                        unmet.push(format!("(d={d},c={c_label})"));
                        format!("decide failed: {e}")
                    }
                    Ok(decision) => {
                        let ids = [
                            "x01_is_a",
                            "x30_is_b",
                            "x23_is_atilde",
                            "x31_is_k",
                            "x13_is_kinv",
                            "x30_plus_c_x23_is_astar",
                        ];
                        let checks = decision.action_checks.as_ref();
                        let identified = ids.iter().all(|n| checks.and_then(|c| c.get(n)) == Some(true));
                        let ok = decision.exists && identified;
                        if !ok {
                            unmet.push(format!("(d={d},c={c_label})"));
                        }
                        let line = format!("exists={} identified={identified}", decision.exists);
                        instances.push(Instance {
                            d,
                            c_label,
                            pair,
                            decision,
                        });
                        line
                    }
                },
            };
            println!("     criterion  5: d={d} c={c_label}: {line}");
        }
    }
    let elapsed = start.elapsed();
    let pass = unmet.is_empty() && elapsed < Duration::from_secs(600);
    h.record(
        5,
        "round trip over d in 0..=3, c in {1, 2, q^2}",
        pass,
        elapsed,
        format!("met={}/12 unmet={unmet:?}", 12 - unmet.len()),
    );
    instances
}

fn label(i: &Instance) -> String {
    format!("(d={},c={})", i.d, i.c_label)
}

fn boxtimes_relations(h: &mut Harness, instances: &[Instance]) {
    let mut bad = Vec::new();
    let mut actions = 0;
    for inst in instances {
        let Some(checks) = &inst.decision.action_checks else {
            bad.push(format!("{} no action", label(inst)));
            continue;
        };
        actions += 1;
        let relations: Vec<bool> = checks
            .0
            .iter()
            .filter(|(n, _)| n.starts_with("weyl") || n.starts_with("serre") || n.ends_with("=1"))
            .map(|(_, v)| *v)
            .collect();
        if relations.len() != 20 || !relations.iter().all(|v| *v) || checks.get("eigenvalues_are_type_one") != Some(true) {
            bad.push(format!("{} {:?}", label(inst), checks.failures()));
        }
    }
    let pass = !instances.is_empty() && bad.is_empty();
    h.record(6, "20 relations and type 1 on every action", pass, Duration::ZERO, format!("actions={actions} failures={bad:?}"));
}

fn decision_check(h: &mut Harness, id: usize, title: &str, instances: &[Instance], names: &[&str]) {
    let bad: Vec<String> = instances
        .iter()
        .filter_map(|inst| {
            let missing: Vec<&str> = names.iter().copied().filter(|n| inst.decision.checks.get(n) != Some(true)).collect();
            (!missing.is_empty()).then(|| format!("{} {missing:?}", label(inst)))
        })
        .collect();
    let pass = !instances.is_empty() && bad.is_empty();
    h.record(id, title, pass, Duration::ZERO, format!("instances={} failures={bad:?}", instances.len()));
}

fn relation_suite(h: &mut Harness, instances: &[Instance]) {
    let mut bad: Vec<String> = instances
        .iter()
        .filter(|i| !i.decision.relations.all_pass())
        .map(|i| format!("{} {:?}", label(i), i.decision.relations.failures()))
        .collect();
    let checks = instances.first().map_or(0, |i| i.decision.relations.names().len());
    let control = instances.iter().find(|i| i.d == 2).map(|inst| {
        let (split, suite) = split_and_suite(&inst.pair);
        let mut astar = inst.pair.astar().clone();
        let entry = astar.get(2, 0) + Scalar::one();
        astar.set(2, 0, entry);
        let broken = TriPair::new(inst.pair.a().clone(), astar, inst.pair.field().clone()).unwrap();
        relation_report(&broken, &split, &suite).failures().len()
    });
    if control.unwrap_or(0) == 0 {
        bad.push("negative control passed every check".into());
    }
    let pass = !instances.is_empty() && bad.is_empty();
    h.record(
        8,
        "relation suite and negative control",
        pass,
        Duration::ZERO,
        format!("checks_per_instance={checks} control_failures={control:?} failures={bad:?}"),
    );
}

fn closure_equivalence(h: &mut Harness, instances: &[Instance]) {
    let mut bad: Vec<String> = instances
        .iter()
        .filter(|i| {
            let n = i.pair.n();
            (i.decision.closure_dim == n * n) != !i.decision.criterion.p_at_lambda_star.is_zero()
        })
        .map(label)
        .collect();
    let f = FieldSpec::Symbolic;
    let injected = instances.iter().find(|i| i.d == 1).map(|inst| {
        let qd = f.q_minus_qinv();
        let opts = DecideOptions {
            c_hint: None,
            zeta_override: Some(vec![Scalar::one(), -(&qd * &qd)]),
        };
        let d = decide(&inst.pair, &opts).expect("decide with injected zeta");
        (d.criterion.p_at_lambda_star.is_zero(), d.exists)
    });
    if injected != Some((true, false)) {
        bad.push(format!("injected zeta gave (P=0, exists) = {injected:?}"));
    }
    let pass = !instances.is_empty() && bad.is_empty();
    h.record(
        9,
        "P(lambda*) != 0 iff closure is n^2; injected zeta",
        pass,
        Duration::ZERO,
        format!("instances={} failures={bad:?}", instances.len()),
    );
}

fn main() {
    let mut h = Harness { results: Vec::new() };
    q_pascal(&mut h);
    word_combinatorics(&mut h);
    graded(&mut h);
    let instances = round_trips(&mut h);
    rewriting(&mut h, &instances);
    boxtimes_relations(&mut h, &instances);
    decision_check(&mut h, 7, "projector chain and zeta sum agree", &instances, &["pv_formula"]);
    relation_suite(&mut h, &instances);
    closure_equivalence(&mut h, &instances);
    decision_check(
        &mut h,
        10,
        "structural invariants",
        &instances,
        &[
            "u0_is_one_dimensional",
            "u0_equals_w0",
            "zeta0_is_one",
            "p_constant_term_is_one",
            "bijection",
            "ei_series_on_w",
        ],
    );

    h.results.sort_by_key(|(id, _)| *id);
    let passed = h.results.iter().filter(|(_, p)| *p).count();
    let failed: Vec<usize> = h.results.iter().filter(|(_, p)| !*p).map(|(id, _)| *id).collect();
    println!("acceptance: {passed}/{} criteria pass; failing: {failed:?}", h.results.len());
    let strict = std::env::var("QTET_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    if strict && !failed.is_empty() {
        std::process::exit(1);
    }
}
