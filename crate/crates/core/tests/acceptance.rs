//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::{Command, Stdio};
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use common::{current, random_int_weight, random_weight, SMALL_TYPES};
use uproll::algebra::{cocycle_check, gauge_normalize, AlgebraSpec, CocycleTable};
use uproll::cartan::{CartanDatum, Series};
use uproll::extensions::{triplet_report, BqSpec, ExtWeight};
use uproll::localmod::{
    check_ribbon, is_local, monodromy_exponent, muger_center, simple_census, twist_exponent, RibbonVerdict,
};
use uproll::oracle::{brute_bq_transparent, brute_census_order, brute_cocycle, brute_commutativity, BruteCount, CoefficientBox};
use uproll::rational::{int, ExponentModL};
use uproll::Weight;

const SEED: u64 = 0x5eed_2026;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

const TRIPLET_CASES: [(Series, usize, i64, i128); 5] = [
    (Series::A, 1, 2, 4),
    (Series::A, 1, 3, 6),
    (Series::A, 1, 4, 8),
    (Series::A, 2, 2, 12),
    (Series::A, 3, 2, 32),
];

fn criterion_1() -> Outcome {
    let mut worst = Duration::ZERO;
    let mut notes = Vec::new();
    let mut pass = true;
    for (s, n, r, expected) in TRIPLET_CASES {
        let t0 = Instant::now();
        let rep = triplet_report(s, n, r);
        let dt = t0.elapsed();
        worst = worst.max(dt);
        match rep {
            Ok(t) => {
                let ok = t.order == Some(expected) && t.expected_order == expected && t.matches && dt < Duration::from_secs(1);
                pass &= ok;
                notes.push(format!("{s}{n} r={r}: {:?}", t.order));
            }
            Err(e) => {
                pass = false;
                notes.push(format!("{s}{n} r={r}: {e}"));
            }
        }
    }
    outcome(pass, format!("{} (slowest {:.0?})", notes.join(", "), worst))
}

fn criterion_2() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (s, n, r, _) in TRIPLET_CASES {
        let datum = CartanDatum::new(s, n, 2 * r).unwrap();
        let gens = datum.simple_roots().iter().map(|a| a.scale(r as i128)).collect();
        let spec = AlgebraSpec::new(datum, gens, None).unwrap();
        let ribbon = check_ribbon(&spec).unwrap().verdict == RibbonVerdict::Ribbon;
        let m = muger_center(&spec).unwrap();
        let only_unit = m.transparent_reps == vec![Weight::zero(n)];
        pass &= ribbon && only_unit && m.trivial;
        notes.push(format!("{s}{n} r={r}: hypothesis_ok={}", m.hypothesis_ok));
    }
    outcome(pass, notes.join(", "))
}

/// The ≥ 50 randomized specs shared by criteria 3, 4 and 8.
fn random_specs() -> Vec<AlgebraSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    while out.len() < 60 {
        let (s, n) = SMALL_TYPES[rng.gen_range(0..SMALL_TYPES.len())];
        let ell = rng.gen_range(3..=12);
        let Ok(d) = CartanDatum::new(s, n, ell) else { continue };
        let m = rng.gen_range(1..=3);
        let gens: Vec<Weight> = (0..m)
            .map(|_| {
                let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                current(&d, &c)
            })
            .collect();
        out.push(AlgebraSpec::new(d, gens, None).unwrap());
    }
    out
}

fn criterion_3(specs: &[AlgebraSpec]) -> Outcome {
    let agree = specs
        .iter()
        .filter(|s| s.check_commutative().commutative == brute_commutativity(s, 3))
        .count();
    let commutative = specs.iter().filter(|s| s.check_commutative().commutative).count();
    outcome(
        agree == specs.len() && specs.len() >= 50,
        format!("{agree}/{} agree ({commutative} commutative)", specs.len()),
    )
}

fn criterion_4(specs: &[AlgebraSpec]) -> Outcome {
    let commutative: Vec<_> = specs.iter().filter(|s| s.check_commutative().commutative).collect();
    let ok = commutative.iter().filter(|s| brute_cocycle(s, 2).holds()).count();
    outcome(
        ok == commutative.len() && !commutative.is_empty(),
        format!("{ok}/{} normal-form tables pass", commutative.len()),
    )
}

fn criterion_5() -> Outcome {
    let d = CartanDatum::new(Series::A, 2, 6).unwrap();
    let gens = vec![d.simple_root(0).scale(3), d.simple_root(1).scale(3)];
    let spec = AlgebraSpec::new(d, gens, None).unwrap();
    let normal = CocycleTable::normal_form(&spec, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut ok = 0;
    let mut compared = 0;
    for _ in 0..20 {
        let psi: BTreeMap<Vec<i64>, ExponentModL> = CoefficientBox::new(4, 2)
            .iter()
            .map(|c| {
                let v = if c == [0, 0] { 0 } else { rng.gen_range(0..6) };
                (c, ExponentModL::new(int(v), 6))
            })
            .collect();
        let perturbed = normal.perturbed_by(&psi).unwrap();
        let Ok(g) = gauge_normalize(&perturbed, &spec) else { continue };
        compared += g.normalized.len();
        if !g.normalized.is_empty() && g.normalized.entries().all(|((a, c), e)| normal.get(a, c) == Some(e)) {
            ok += 1;
        }
    }
    outcome(ok == 20, format!("{ok}/20 recovered ({compared} entries compared)"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut ok = 0;
    let mut total = 0;
    let mut notes = Vec::new();
    for (s, n) in [(Series::A, 1), (Series::A, 2), (Series::G, 2)] {
        for ell in [4, 6, 7] {
            let d = CartanDatum::lattice_only(s, n, ell).unwrap();
            if !d.quantum_group_defined {
                notes.push(format!("{s}{n} ell={ell} lattice-only"));
            }
            for _ in 0..200 {
                let x = random_weight(&mut rng, n, 12, 6);
                let y = random_weight(&mut rng, n, 12, 6);
                let lhs = &(twist_exponent(&d, &(&x + &y)) - twist_exponent(&d, &x)) - &twist_exponent(&d, &y);
                total += 1;
                if lhs == monodromy_exponent(&d, &x, &y) {
                    ok += 1;
                }
            }
        }
    }
    let mut detail = format!("{ok}/{total} pairs");
    if !notes.is_empty() {
        detail.push_str(&format!(" ({})", notes.join(", ")));
    }
    outcome(ok == total, detail)
}

fn criterion_7() -> Outcome {
    let a1 = |ell| CartanDatum::new(Series::A, 1, ell).unwrap();
    let good = AlgebraSpec::new(a1(4), vec![Weight::from_ints(&[4])], Some(Weight::from_ints(&[2]))).unwrap();
    let bad = AlgebraSpec::new(a1(6), vec![Weight::from_ints(&[6])], Some(Weight::from_ints(&[3]))).unwrap();
    let good_v = good.check_supercommutative().unwrap().supercommutative;
    let bad_v = bad.check_supercommutative().unwrap().supercommutative;

    // Sign law on μ + L: e(λ₁,λ₂) ≡ e(λ₂,λ₁) + ⟨λ₁,λ₂⟩ + ℓ/2 for odd pairs.
    let bx = CoefficientBox::new(2, 1);
    let half = ExponentModL::minus_one(4);
    let mut checked = 0;
    let mut holds = true;
    for a in bx.iter() {
        for c in bx.iter() {
            if !(good.is_odd(&a) && good.is_odd(&c)) {
                continue;
            }
            let (x, y) = (good.weight_of(&a), good.weight_of(&c));
            let lhs = good.structure_constant_exponent(&x, &y).unwrap();
            let rhs = good.structure_constant_exponent(&y, &x).unwrap()
                + good.datum.exponent(good.datum.pairing(&x, &y).unwrap())
                + half.clone();
            holds &= lhs == rhs;
            checked += 1;
        }
    }
    let table_ok = cocycle_check(&CocycleTable::normal_form(&good, 2), &good.datum)
        .map(|v| v.valid && v.commutative)
        .unwrap_or(false);
    outcome(
        good_v && !bad_v && holds && table_ok && checked > 0,
        format!("true case {good_v}, false case {bad_v}, sign law on {checked} odd pairs {holds}"),
    )
}

fn criterion_8(specs: &[AlgebraSpec]) -> Outcome {
    let mut candidates: Vec<AlgebraSpec> = specs.iter().filter(|s| s.is_valid()).cloned().collect();
    for (s, n, r, _) in TRIPLET_CASES {
        let d = CartanDatum::new(s, n, 2 * r).unwrap();
        let gens = d.simple_roots().iter().map(|a| a.scale(r as i128)).collect();
        candidates.push(AlgebraSpec::new(d, gens, None).unwrap());
    }
    let a1 = CartanDatum::new(Series::A, 1, 4).unwrap();
    candidates.push(AlgebraSpec::new(a1, vec![Weight::from_ints(&[4])], Some(Weight::from_ints(&[2]))).unwrap());

    let mut tested = 0;
    let mut failures = Vec::new();
    for spec in &candidates {
        let Ok(c) = simple_census(spec) else {
            failures.push("census error".to_string());
            continue;
        };
        let Some(reps) = c.reps.clone() else { continue };
        tested += 1;
        let lat = spec.extended_lattice();
        let local = reps.iter().all(|r| is_local(spec, r).unwrap_or(false));
        let distinct = reps
            .iter()
            .enumerate()
            .all(|(i, x)| reps[..i].iter().all(|y| !lat.contains(&(x - y))));
        let brute = brute_census_order(spec, 4_000_000);
        let brute_ok = matches!(brute, Ok(BruteCount::Exact(n)) if Some(n) == c.order);
        if !(local && distinct && brute_ok) {
            failures.push(format!("{:?} order {:?} brute {brute:?}", lat.generators(), c.order));
        }
    }
    outcome(
        failures.is_empty() && tested > 0,
        if failures.is_empty() {
            format!("{tested} finite censuses consistent")
        } else {
            format!("{} of {tested} fail: {}", failures.len(), failures.join("; "))
        },
    )
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;

    let commutative = [(Series::A, 1, 2), (Series::A, 1, 3), (Series::A, 2, 2), (Series::A, 2, 3)]
        .iter()
        .all(|&(s, n, r)| BqSpec::standard(s, n, r).unwrap().check_commutative());
    pass &= commutative;
    parts.push(format!("commutative {commutative}"));

    let spec = BqSpec::standard(Series::A, 1, 2).unwrap();
    let ew = |q: i128, f: i128| ExtWeight::new(Weight::from_ints(&[q]), Weight::from_ints(&[f]));
    let examples = spec.is_local(&ew(1, 1))
        && !spec.is_local(&ew(1, 0))
        && spec.equivalent(&ew(1, 1), &ew(3, 3)).unwrap();
    pass &= examples;
    parts.push(format!("examples {examples}"));

    // Exhaustive local box: qg = c/2, fock_tilde = qg − kα, c, k ∈ [-4, 4] × [-2, 2].
    let unit = ExtWeight::zero(1);
    let mut agree = 0;
    let mut total = 0;
    let mut transparent = 0;
    for c in -4..=4 {
        for k in -2..=2 {
            let qg = Weight::new(vec![uproll::rational::frac(c, 2)]);
            let ft = &qg - &Weight::from_ints(&[2 * k]);
            let w = ExtWeight::new(qg, ft);
            let t = spec.transparent(&w, 8).unwrap();
            let orbit = spec.equivalent(&w, &unit).unwrap();
            let brute = brute_bq_transparent(&spec, &w, 2, 4);
            total += 1;
            transparent += t as usize;
            if t == orbit && t == brute {
                agree += 1;
            }
        }
    }
    pass &= agree == total;
    parts.push(format!("transparency {agree}/{total} ({transparent} in unit orbit)"));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let specs = [BqSpec::standard(Series::A, 1, 2).unwrap(), BqSpec::standard(Series::A, 2, 3).unwrap()];
    let mut ok = 0;
    for i in 0..100 {
        let s = &specs[i % 2];
        let d = &s.datum;
        let mut local = || {
            let x = random_weight(&mut rng, d.rank, 8, 3);
            let b = random_int_weight(&mut rng, d.rank, 3);
            let coeffs: Vec<i64> = b.coords().iter().map(|c| c.to_integer() as i64).collect();
            ExtWeight::new(x.clone(), &x - &Weight::combination(&coeffs, &d.simple_roots(), d.rank))
        };
        let (x, y) = (local(), local());
        let lhs = &(s.twist(&x.add(&y)) - s.twist(&x)) - &s.twist(&y);
        if s.is_local(&x) && s.is_local(&y) && lhs == s.monodromy(&x, &y) {
            ok += 1;
        }
    }
    pass &= ok == 100;
    parts.push(format!("balancing {ok}/100"));
    outcome(pass, parts.join(", "))
}

fn uproll(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uproll"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn criterion_10() -> Outcome {
    let mut parts = Vec::new();

    let (code, out) = uproll(&["triplet", "--series", "A", "--rank", "2", "--r", "2"], "");
    let v: Value = serde_json::from_str(&out).unwrap_or(Value::Null);
    let triplet = code == 0 && v["order"] == 12 && v["match"] == true && v["report"]["census"]["reps"].is_array();
    parts.push(format!("triplet {triplet}"));

    let (code, out) = uproll(&["check-algebra"], r#"{"series":"A","rank":1,"ell":4,"lattice":[["2"]]}"#);
    let v: Value = serde_json::from_str(&out).unwrap_or(Value::Null);
    let check = code == 0 && v["commutative"] == false && v["witness"]["value"] == "2";
    parts.push(format!("check-algebra {check}"));

    let (code, _) = uproll(&["census"], r#"{"series":"A","rank":1,"ell":4,"lattice":[["1"]]}"#);
    let outside = code == 4;
    parts.push(format!("census outside 𝓛 exit {code}"));

    let input = r#"{"series":"A","rank":2,"ell":4,"lattice":[["4","-2"],["-2","4"]]}"#;
    let (code, tsv) = uproll(&["census", "--format", "tsv"], input);
    let (_, json) = uproll(&["census"], input);
    let v: Value = serde_json::from_str(&json).unwrap_or(Value::Null);
    let lines = tsv.lines().count();
    let tsv_ok = code == 0 && v["order"] == 12 && lines == 12 && tsv.lines().all(|l| l.split('\t').count() == 2);
    parts.push(format!("tsv lines {lines}"));

    outcome(triplet && check && outside && tsv_ok, parts.join(", "))
}

fn main() {
    let specs = random_specs();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("triplet census orders", Box::new(criterion_1)),
        ("triplet ribbon and trivial Muger center", Box::new(criterion_2)),
        ("commutativity classification vs brute force", Box::new(|| criterion_3(&specs))),
        ("normal-form cocycle validity", Box::new(|| criterion_4(&specs))),
        ("gauge round trip", Box::new(criterion_5)),
        ("balancing identity", Box::new(criterion_6)),
        ("supercommutativity", Box::new(criterion_7)),
        ("locality census consistency", Box::new(|| criterion_8(&specs))),
        ("B-algebra suite", Box::new(criterion_9)),
        ("CLI contract", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("[{status}] {:>2}. {name}: {} [{:.2?}]", i + 1, o.detail, t0.elapsed());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
