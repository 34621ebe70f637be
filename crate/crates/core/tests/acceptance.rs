//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails. Every comparison is exact; there are no
//! floating-point tolerances anywhere.

use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wakeford::group::{catalog, make_group, Group};
use wakeford::setops::{lambda, translate, Side};
use wakeford::theorems::{
    check_khc_form, check_prog_example_1, check_prog_example_2, replay, sweep, Retain, StatementId, SweepMode,
    SweepReport, SweepSpec, Verdict,
};
use wakeford::wakeford::{build_graph, mu, mu_naive};
use wakeford::GroupSet;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    note: String,
}

fn outcome(pass: bool, note: impl Into<String>) -> Outcome {
    Outcome { pass, note: note.into() }
}

fn random_subset(g: &Group, k: usize, rng: &mut ChaCha8Rng) -> GroupSet {
    let mut v: Vec<usize> = (0..g.order()).collect();
    for i in 0..k {
        let j = rng.gen_range(i..v.len());
        v.swap(i, j);
    }
    g.set(v[..k].iter().copied()).unwrap()
}

/// A random group from `pool`, then `B` and `A` of one random size in `1..=max`.
fn random_pair(pool: &[Group], max: usize, rng: &mut ChaCha8Rng) -> (usize, GroupSet, GroupSet) {
    let gi = rng.gen_range(0..pool.len());
    let g = &pool[gi];
    let k = rng.gen_range(1..=max.min(g.order()));
    let b = random_subset(g, k, rng);
    let a = random_subset(g, k, rng);
    (gi, b, a)
}

fn groups(specs: &[String]) -> Vec<Group> {
    specs.iter().map(|s| make_group(s).unwrap()).collect()
}

fn cyclics(lo: usize, hi: usize) -> Vec<String> {
    (lo..=hi).map(|n| format!("cyclic:{n}")).collect()
}

fn run(spec: SweepSpec) -> SweepReport {
    sweep(&spec.retain(Retain::Failures)).unwrap()
}

fn summarize(r: &SweepReport) -> String {
    let s = r.summary;
    format!("{} instances, {} pass, {} fail, {} skipped", s.total, s.pass, s.fail, s.skipped)
}

fn first_failure(r: &SweepReport) -> String {
    r.records
        .iter()
        .find(|x| x.verdict == Verdict::Fail && !x.is_exploratory())
        .map(|x| format!("; first failure {}", serde_json::to_string(&x.instance).unwrap()))
        .unwrap_or_default()
}

fn mu_matches_naive() -> Outcome {
    let pool = groups(&catalog(12));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..500 {
        let (gi, b, a) = random_pair(&pool, 7, &mut rng);
        let g = &pool[gi];
        let (fast, slow) = (mu(g, &b, &a).unwrap(), mu_naive(g, &b, &a).unwrap());
        if fast != slow {
            return outcome(false, format!("instance {i}: {} B={b} A={a}: {fast} vs {slow}", g.spec()));
        }
    }
    outcome(true, "500 instances")
}

fn translation_invariance() -> Outcome {
    let pool = groups(&catalog(12));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for i in 0..500 {
        let (gi, b, a) = random_pair(&pool, 8, &mut rng);
        let g = &pool[gi];
        let base = mu(g, &b, &a).unwrap();
        for _ in 0..5 {
            let x = rng.gen_range(0..g.order());
            let shifted = translate(g, &a, x, Side::Right).unwrap();
            if mu(g, &b, &shifted).unwrap() != base {
                return outcome(false, format!("instance {i}: {} B={b} A={a} x={x}", g.spec()));
            }
        }
    }
    outcome(true, "500 instances x 5 translates")
}

fn degree_identity() -> Outcome {
    let pool = groups(&catalog(12));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for i in 0..500 {
        let (gi, b, a) = random_pair(&pool, 12, &mut rng);
        let g = &pool[gi];
        let graph = build_graph(g, &b, &a).unwrap();
        for (row, x) in graph.rows.iter().zip(b.iter()) {
            if row.len() != lambda(g, &a, x, Side::Left).unwrap() {
                return outcome(false, format!("instance {i}: {} B={b} A={a} x={x}", g.spec()));
            }
        }
    }
    outcome(true, "500 instances")
}

fn complement_form() -> Outcome {
    let pool = groups(&catalog(12));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut subsets = 0;
    for i in 0..200 {
        let (gi, b, a) = random_pair(&pool, 6, &mut rng);
        let g = &pool[gi];
        match check_khc_form(g, &b, &a) {
            Ok((Verdict::Pass, d)) => subsets += d.subsets_checked,
            other => return outcome(false, format!("instance {i}: {} B={b} A={a}: {other:?}", g.spec())),
        }
    }
    outcome(true, format!("200 instances, {subsets} subsets X"))
}

fn chowla_always_pairs() -> Outcome {
    let cyc = run(SweepSpec::new(StatementId::K1, cyclics(3, 10), 3, SweepMode::Exhaustive));
    let non_abelian: Vec<String> = ["dihedral:3", "dihedral:4", "quaternion", "symmetric:3"].map(String::from).into();
    let sampled = run(SweepSpec::new(
        StatementId::K1,
        non_abelian,
        3,
        SweepMode::Sample { count: 2000, seed: SEED },
    ));
    let ok = cyc.summary.fail == 0 && sampled.summary.fail == 0 && cyc.summary.skipped == 0 && sampled.summary.skipped == 0;
    outcome(
        ok,
        format!("cyclic: {}; non-abelian: {}{}{}", summarize(&cyc), summarize(&sampled), first_failure(&cyc), first_failure(&sampled)),
    )
}

fn subgroup_construction_unmatchable() -> Outcome {
    let r = run(SweepSpec::new(StatementId::Losonczy, catalog(24), 24, SweepMode::Exhaustive));
    let ok = r.summary.fail == 0 && r.summary.skipped == 0 && r.summary.total > 0;
    outcome(ok, format!("{} groups, {}{}", r.groups.len(), summarize(&r), first_failure(&r)))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn progression_examples() -> Outcome {
    let mut first = (0, 0, None::<String>);
    let mut second = (0, 0, None::<String>);
    let mut second_small_j = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    for n in 4..=30 {
        let g = make_group(&format!("cyclic:{n}")).unwrap();
        for r in (1..n).filter(|&r| gcd(r, n) == 1) {
            for j in 0..=n - 3 {
                first.0 += 1;
                match check_prog_example_1(&g, r, j) {
                    Ok((Verdict::Pass, _)) => {}
                    other => {
                        first.1 += 1;
                        first.2.get_or_insert(format!("n={n} r={r} j={j}: {:?}", other.map(|(v, d)| (v, d.mu))));
                    }
                }
            }
            for j in (0..).take_while(|&j| 2 * j + 6 <= n) {
                let excluded: Vec<usize> = [0, j + 1]
                    .into_iter()
                    .chain(2..=j + 2)
                    .map(|e| g.pow(r, e as i64))
                    .collect();
                let valid: Vec<usize> = (0..n).filter(|a| !excluded.contains(a)).collect();
                for _ in 0..20 {
                    let a = valid[rng.gen_range(0..valid.len())];
                    second.0 += 1;
                    match check_prog_example_2(&g, r, j, a, true) {
                        Ok((Verdict::Pass, _)) => {}
                        other => {
                            second.1 += 1;
                            second_small_j += usize::from(j <= 1);
                            second.2.get_or_insert(format!(
                                "n={n} r={r} j={j} a={a}: {}",
                                match other {
                                    Ok((_, d)) => format!("mu={}", d.mu),
                                    Err(skip) => format!("skipped ({skip:?})"),
                                }
                            ));
                        }
                    }
                }
            }
        }
    }
    let note = format!(
        "(rP, P): {} of {} fail{}; (Q, P): {} of {} fail, {} of them with j <= 1{}",
        first.1,
        first.0,
        first.2.map(|s| format!(" [{s}]")).unwrap_or_default(),
        second.1,
        second.0,
        second_small_j,
        second.2.map(|s| format!(" [{s}]")).unwrap_or_default(),
    );
    outcome(first.1 == 0 && second.1 == 0, note)
}

fn olson_inequalities() -> Outcome {
    let specs = catalog(24);
    let mode = SweepMode::Sample { count: 1000, seed: SEED };
    let xy = run(SweepSpec::new(StatementId::OlsonXy, specs.clone(), 24, mode));
    let clique = run(SweepSpec::new(StatementId::OlsonClique, specs, 24, mode));
    let right_fail = |r: &SweepReport| r.records.iter().filter(|x| x.details["holds_right"] == false).count();
    let (fx, fc) = (right_fail(&xy), right_fail(&clique));
    outcome(
        fx == 0 && fc == 0,
        format!(
            "{} groups; x+y: {} right-side failures of {}; clique: {} right-side failures of {} ({} skipped)",
            xy.groups.len(),
            fx,
            xy.summary.total,
            fc,
            clique.summary.total,
            clique.summary.skipped
        ),
    )
}

fn chowla_isoperimetry() -> Outcome {
    let c = run(SweepSpec::new(StatementId::Cchowla, catalog(16), 4, SweepMode::Exhaustive));
    let v = run(SweepSpec::new(StatementId::Vchowla, catalog(16), 4, SweepMode::Exhaustive));
    let ok = c.summary.fail == 0 && v.summary.fail == 0 && c.summary.skipped == 0 && v.summary.skipped == 0;
    // with S~ = <S> no fragment exists and the empty-minimum convention applies
    let whole = c.records.iter().filter(|x| x.details["q"] == x.details["size"].as_u64().unwrap() + 1).count();
    outcome(
        ok,
        format!(
            "kappa1: {} ({} of the failures have S~ = <S>); vosper-or-progression: {}{}{}",
            summarize(&c),
            whole,
            summarize(&v),
            first_failure(&c),
            first_failure(&v)
        ),
    )
}

fn cofinite_inverse() -> Outcome {
    let r = sweep(&SweepSpec::new(StatementId::Cf, cyclics(5, 12), 4, SweepMode::Exhaustive).retain(Retain::Failures)).unwrap();
    let empty_exterior = r.records.iter().filter(|x| x.details["exterior_empty"] == true).count();
    let coset_only_large_boundary = r
        .records
        .iter()
        .filter(|x| {
            let d = &x.details;
            let s = x.instance.sets["S"].len() as u64;
            d["exterior_empty"] == false
                && d["boundary_bound"] == true
                && d["single_coset"] == false
                && d["equality_cover"] != false
                && d["equality_size"] != false
                && d["boundary_size"].as_u64().unwrap() + 1 > s
        })
        .count();
    let replays_ok = r.records.iter().take(50).all(|x| replay(x).unwrap() == *x);
    outcome(
        r.summary.fail == 0,
        format!(
            "{}; of the {} failures, {} have an empty exterior and {} fail only the single-coset clause with |boundary| > |S|-1; replay ok: {}{}",
            summarize(&r),
            r.summary.fail,
            empty_exterior,
            coset_only_large_boundary,
            replays_ok,
            first_failure(&r)
        ),
    )
}

fn trichotomy_and_mu_bound() -> Outcome {
    let mut mcp = SweepReport {
        spec: SweepSpec::new(StatementId::Mcp, vec![], 4, SweepMode::Exhaustive),
        generator: None,
        summary: Default::default(),
        groups: vec![],
        records: vec![],
    };
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 5..=13 {
        let r = run(SweepSpec::new(
            StatementId::Mcp,
            vec![format!("cyclic:{n}")],
            4,
            SweepMode::Sample { count: 500, seed: SEED + n as u64 },
        ));
        ok &= r.summary.fail == 0 && r.summary.skipped == 0;
        mcp.summary.total += r.summary.total;
        mcp.summary.pass += r.summary.pass;
        mcp.summary.fail += r.summary.fail;
        mcp.summary.skipped += r.summary.skipped;
        mcp.records.extend(r.records);
    }
    notes.push(format!("trichotomy: {}{}", summarize(&mcp), first_failure(&mcp)));
    let mubb = run(SweepSpec::new(StatementId::Mubb, cyclics(5, 13), 4, SweepMode::Exhaustive));
    ok &= mubb.summary.fail == 0 && mubb.summary.skipped == 0;
    notes.push(format!("mu(B,B) bound: {}{}", summarize(&mubb), first_failure(&mubb)));

    let exploratory: Vec<String> = ["dihedral:5", "dihedral:6", "quaternion", "symmetric:3"].map(String::from).into();
    let e1 = run(SweepSpec::new(StatementId::Mcp, exploratory.clone(), 4, SweepMode::Sample { count: 500, seed: SEED }));
    let e2 = run(SweepSpec::new(StatementId::Mubb, exploratory, 4, SweepMode::Exhaustive));
    notes.push(format!(
        "non-abelian (exploratory, not binding): trichotomy {} fail of {}, bound {} fail of {}",
        e1.summary.fail, e1.summary.total, e2.summary.fail, e2.summary.total
    ));
    ok &= e1.summary.binding_failures() == 0 && e2.summary.binding_failures() == 0;
    outcome(ok, notes.join("; "))
}

fn averaging_bound() -> Outcome {
    let r = run(SweepSpec::new(StatementId::Eho, cyclics(5, 16), 4, SweepMode::Exhaustive));
    outcome(r.summary.fail == 0 && r.summary.skipped == 0, format!("{}{}", summarize(&r), first_failure(&r)))
}

fn binary(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_wakeford")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 4] = [
        &["verify", "OLSON_XY", "--group", "cyclic:12", "--sample", "1000", "--seed", "1", "--max-set-size", "12"],
        &["verify", "K1", "--group", "dihedral:4", "--group", "quaternion", "--sample", "2000", "--seed", "7"],
        &["verify", "LOSONCZY", "--max-order", "12", "--failures-only"],
        &["mu", "--group", "cyclic:10", "--b", "1..4", "--a", "0..3"],
    ];
    let mut bytes = 0;
    for args in commands {
        let (s1, o1) = binary(args);
        let (s2, o2) = binary(args);
        if s1 != 0 || s1 != s2 || o1 != o2 || o1.is_empty() {
            return outcome(false, format!("{args:?}: status {s1}/{s2}, identical output: {}", o1 == o2));
        }
        bytes += o1.len();
    }
    let spec = SweepSpec::new(StatementId::Eho, cyclics(7, 9), 3, SweepMode::Sample { count: 300, seed: 3 });
    let a = serde_json::to_string(&sweep(&spec).unwrap()).unwrap();
    let b = serde_json::to_string(&sweep(&spec).unwrap()).unwrap();
    outcome(a == b, format!("4 CLI commands run twice ({bytes} bytes each pass), library sweep repeated"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("exact count agrees with brute force", mu_matches_naive),
        ("count is invariant under right translation of A", translation_invariance),
        ("row degrees equal left lambda", degree_identity),
        ("Hall complement form", complement_form),
        ("Chowla sets always pair", chowla_always_pairs),
        ("subgroup construction has no pairing", subgroup_construction_unmatchable),
        ("progression families have a unique pairing", progression_examples),
        ("Olson inequalities", olson_inequalities),
        ("Chowla sets: kappa1 and Vosper-or-progression", chowla_isoperimetry),
        ("cofinite inverse theorem", cofinite_inverse),
        ("trichotomy and mu(B,B) bound (abelian)", trichotomy_and_mu_bound),
        ("lambda averaging bound (abelian)", averaging_bound),
        ("deterministic reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {tag} {name} ({:.1}s): {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.note
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
