//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

#[path = "../../core/tests/oracles/mod.rs"]
mod oracles;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;
use tangle_core::random::{rng_for, sample_qubit, sample_state};
use tangle_core::{
    ckw_residual, covariance_check_3, covariance_check_4, decomposition_residual, density, enumerate_fonts,
    font_negativity_2q, four_tangle, global_negativity, kway_negativity, lu_invariance_sweep, three_fonts,
    three_tangle, three_tangle_forms, Complex64, Qubit, State,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed < budget, || format!("took {elapsed:.2?}, budget {budget:.0?}"))
}

fn random(n: usize, seed: u64, stream: u64) -> State {
    sample_state(&mut rng_for(seed, stream), n).expect("valid n")
}

fn random_x(seed: u64, stream: u64) -> Complex64 {
    let (a, b) = sample_qubit::<f64, _>(&mut rng_for(seed, stream));
    // Spread |x| over roughly [0, 3].
    a / b.norm().max(0.3) * 0.9
}

fn golden_tangles() -> Outcome {
    let t0 = Instant::now();
    let cases: [(&str, State, usize, f64); 5] = [
        ("GHZ3", State::ghz(3).unwrap(), 3, 1.0),
        ("W3", State::w(3).unwrap(), 3, 0.0),
        ("GHZ4", State::ghz(4).unwrap(), 4, 1.0),
        ("W4", State::w(4).unwrap(), 4, 0.0),
        ("cluster4", State::cluster4(), 4, 0.0),
    ];
    let mut parts = Vec::new();
    for (name, s, n, want) in cases {
        let (got, oracle) = if n == 3 {
            (three_tangle(&s).map_err(|e| e.to_string())?, oracles::cayley_tau3(&s))
        } else {
            (four_tangle(&s).map_err(|e| e.to_string())?, oracles::h4_tau(&s))
        };
        ensure((oracle - want).abs() <= 1e-10, || format!("{name}: oracle {oracle} != {want}"))?;
        ensure((got - want).abs() <= 1e-10, || format!("{name}: {got} != {want}"))?;
        parts.push(format!("{name}={got:.3e}"));
    }
    within_budget(t0.elapsed(), Duration::from_secs(1))?;
    Ok(parts.join(" "))
}

fn decomposition_identity() -> Outcome {
    let t0 = Instant::now();
    let mut worst = 0.0f64;
    for n in 3..=5 {
        for t in 0..100 {
            let rho = density(&random(n, 200 + n as u64, t));
            for p in Qubit::all(n) {
                let r = decomposition_residual(&rho, p).map_err(|e| e.to_string())?;
                ensure(r <= 1e-12, || format!("n={n} trial {t} p={p}: residual {r:e}"))?;
                worst = worst.max(r);
            }
        }
    }
    within_budget(t0.elapsed(), Duration::from_secs(30))?;
    Ok(format!("max residual {worst:.3e}"))
}

fn lu_invariance() -> Outcome {
    let t0 = Instant::now();
    let mut worst = 0.0f64;
    for n in [3, 4] {
        for s in 0..20 {
            let state = random(n, 300 + n as u64, s);
            let dev = lu_invariance_sweep(&state, 500, 1000 + s).map_err(|e| e.to_string())?;
            ensure(dev <= 1e-9, || format!("n={n} state {s}: deviation {dev:e}"))?;
            worst = worst.max(dev);
        }
    }
    within_budget(t0.elapsed(), Duration::from_secs(60))?;
    Ok(format!("max deviation {worst:.3e} over 2x20x500 trials"))
}

fn covariance_relations() -> Outcome {
    let mut worst3 = 0.0f64;
    for t in 0..100 {
        let reports = covariance_check_3(&random(3, 400, t), random_x(401, t)).map_err(|e| e.to_string())?;
        for r in reports.iter().filter(|r| r.relation.starts_with("UB")) {
            ensure(r.residual <= 1e-9, || format!("trial {t} {}: {:e}", r.relation, r.residual))?;
            worst3 = worst3.max(r.residual);
        }
    }
    // relation -> (prefactor label -> count)
    let mut findings: BTreeMap<String, BTreeMap<&'static str, usize>> = BTreeMap::new();
    let mut worst4 = 0.0f64;
    for q in Qubit::all(4) {
        for t in 0..100 {
            let stream = 100 * q.position() as u64 + t;
            let reports =
                covariance_check_4(&random(4, 402, stream), q, random_x(403, stream)).map_err(|e| e.to_string())?;
            for r in &reports {
                ensure(r.residual <= 1e-9, || format!("qubit {q} trial {t} {}: {:e}", r.relation, r.residual))?;
                worst4 = worst4.max(r.residual);
                *findings.entry(r.relation.clone()).or_default().entry(r.prefactor.label()).or_default() += 1;
            }
        }
    }
    println!("    prefactor findings (three-qubit UB1-UB4: 1/(1+|x|^2), max residual {worst3:.3e}):");
    for (relation, counts) in &findings {
        let summary: Vec<String> = counts.iter().map(|(label, k)| format!("{label} x{k}")).collect();
        println!("      {relation:<16} {}", summary.join(", "));
    }
    Ok(format!("three-qubit max {worst3:.3e}, four-qubit max {worst4:.3e}"))
}

fn product_identity() -> Outcome {
    let (mut worst_p, mut worst_f) = (0.0f64, 0.0f64);
    for t in 0..200 {
        let s = random(3, 500, t);
        let p = three_fonts(&s).map_err(|e| e.to_string())?.product_identity_residual();
        let forms = three_tangle_forms(&s).map_err(|e| e.to_string())?;
        let gap = (forms.primary - forms.alternate).abs();
        ensure(p <= 1e-10, || format!("trial {t}: product identity residual {p:e}"))?;
        ensure(gap <= 1e-10, || format!("trial {t}: primary vs alternate {gap:e}"))?;
        worst_p = worst_p.max(p);
        worst_f = worst_f.max(gap);
    }
    Ok(format!("identity {worst_p:.3e}, forms {worst_f:.3e}"))
}

fn oracle_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for t in 0..200 {
        let r = ckw_residual(&random(3, 600, t)).map_err(|e| e.to_string())?;
        ensure(r <= 1e-8, || format!("trial {t}: ckw residual {r:e}"))?;
        worst = worst.max(r);
    }
    Ok(format!("max residual {worst:.3e}"))
}

fn negativity_cross_checks() -> Outcome {
    let mut worst = 0.0f64;
    for t in 0..100 {
        let s = random(2, 700, t);
        let font = font_negativity_2q(&s).map_err(|e| e.to_string())?;
        let eig = global_negativity(&s, Qubit::A).map_err(|e| e.to_string())?;
        ensure((font - eig).abs() <= 1e-10, || format!("trial {t}: 2|det| {font} vs eigensolve {eig}"))?;
        worst = worst.max((font - eig).abs());
    }
    let ghz = State::ghz(3).unwrap();
    let w = State::w(3).unwrap();
    let e = |r: tangle_core::Result<f64>| r.map_err(|e| e.to_string());
    let checks = [
        ("GHZ3 N_G^A", e(global_negativity(&ghz, Qubit::A))?, 1.0),
        ("GHZ3 N_3^A", e(kway_negativity(&ghz, Qubit::A, 3))?, 1.0),
        ("GHZ3 N_2^A", e(kway_negativity(&ghz, Qubit::A, 2))?, 0.0),
        ("W3 N_3^A", e(kway_negativity(&w, Qubit::A, 3))?, 0.0),
    ];
    for (name, got, want) in checks {
        ensure((got - want).abs() <= 1e-10, || format!("{name} = {got}, expected {want}"))?;
    }
    Ok(format!("two-qubit max gap {worst:.3e}; GHZ3/W3 values within 1e-10"))
}

fn separability() -> Outcome {
    let mut worst = 0.0f64;
    for t in 0..50u64 {
        let n = 2 + (t % 4) as usize;
        let p = 1 + (t as usize / 4) % n;
        let mut rng = rng_for(800, t);
        let rest: State = sample_state(&mut rng, n - 1).map_err(|e| e.to_string())?;
        let s = oracles::insert_qubit(&rest, sample_qubit(&mut rng), p);
        let q = Qubit::new(p);
        let neg = global_negativity(&s, q).map_err(|e| e.to_string())?;
        ensure(neg <= 1e-10, || format!("trial {t} n={n} p={p}: negativity {neg:e}"))?;
        let fonts = enumerate_fonts(&s, q).map_err(|e| e.to_string())?;
        ensure(fonts.iter().all(|f| f.non_negative), || format!("trial {t} n={n} p={p}: nonzero font"))?;
        worst = worst.max(neg);
    }
    Ok(format!("max negativity {worst:.3e}"))
}

fn tangle(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangle")).args(args).current_dir(dir).output().expect("binary runs")
}

fn expect_code(out: &Output, code: i32, what: &str) -> Result<(), String> {
    ensure(out.status.code() == Some(code), || {
        format!(
            "{what}: exit {:?}, expected {code}; stderr: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn report(out: &Output, what: &str) -> Result<Value, String> {
    let text = std::str::from_utf8(&out.stdout).map_err(|e| format!("{what}: {e}"))?;
    ensure(text.ends_with('\n') && text.lines().count() == 1, || format!("{what}: not one line: {text:?}"))?;
    serde_json::from_str(text).map_err(|e| format!("{what}: {e}"))
}

fn field(v: &Value, path: &[&str]) -> Result<f64, String> {
    path.iter().try_fold(v, |v, k| v.get(k)).and_then(Value::as_f64).ok_or_else(|| format!("missing {path:?} in {v}"))
}

fn cli_contract() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir = tmp.path();

    // gen
    let out = tangle(&["gen", "ghz", "3", "-o", "ghz3.json"], dir);
    expect_code(&out, 0, "gen ghz 3")?;
    let file: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("ghz3.json")).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let entries = file["amplitudes"].as_array().ok_or("no amplitudes")?;
    ensure(entries.len() == 2, || format!("gen ghz 3: {} entries", entries.len()))?;
    for e in entries {
        let re = e["re"].as_f64().unwrap_or(f64::NAN);
        ensure((re - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-15 && e["im"] == 0.0, || format!("entry {e}"))?;
    }
    let a = tangle(&["gen", "random", "4", "--seed", "7", "-o", "r1.json"], dir);
    let b = tangle(&["gen", "random", "4", "--seed", "7", "-o", "r2.json"], dir);
    expect_code(&a, 0, "gen random 4")?;
    expect_code(&b, 0, "gen random 4")?;
    let (f1, f2) = (std::fs::read(dir.join("r1.json")), std::fs::read(dir.join("r2.json")));
    ensure(matches!((&f1, &f2), (Ok(x), Ok(y)) if x == y), || "seeded gen not byte-identical".into())?;
    expect_code(&tangle(&["gen", "w", "1"], dir), 2, "gen w 1")?;

    // measure
    expect_code(&tangle(&["gen", "w", "4", "-o", "w4.json"], dir), 0, "gen w 4")?;
    expect_code(&tangle(&["gen", "ghz", "2", "-o", "bell.json"], dir), 0, "gen ghz 2")?;
    let out = tangle(&["measure", "ghz3.json", "--tangle3"], dir);
    expect_code(&out, 0, "measure --tangle3")?;
    let v = report(&out, "measure --tangle3")?;
    ensure(v.as_object().map(|m| m.len()) == Some(1), || format!("extra keys: {v}"))?;
    let t3 = field(&v, &["tangle3"])?;
    ensure((t3 - 1.0).abs() <= 1e-10, || format!("tangle3 {t3}"))?;
    let out = tangle(&["measure", "w4.json", "--tangle4"], dir);
    expect_code(&out, 0, "measure --tangle4")?;
    let t4 = field(&report(&out, "measure --tangle4")?, &["tangle4"])?;
    ensure(t4.abs() <= 1e-10, || format!("tangle4 {t4}"))?;
    expect_code(&tangle(&["measure", "bell.json", "--tangle3"], dir), 2, "measure bell --tangle3")?;

    // check
    let out = tangle(&["check", "r1.json", "--decomposition"], dir);
    expect_code(&out, 0, "check --decomposition")?;
    let v = report(&out, "check --decomposition")?;
    for q in ["A", "B", "C", "D"] {
        let r = field(&v, &["decomposition", q])?;
        ensure(r <= 1e-12, || format!("decomposition {q}: {r:e}"))?;
    }
    let out = tangle(&["check", "ghz3.json", "--lu-sweep", "500,42"], dir);
    expect_code(&out, 0, "check --lu-sweep")?;
    let dev = field(&report(&out, "check --lu-sweep")?, &["lu_sweep", "max_deviation"])?;
    ensure(dev <= 1e-9, || format!("lu sweep deviation {dev:e}"))?;
    expect_code(&tangle(&["check", "bell.json", "--product-identity"], dir), 2, "check bell --product-identity")?;

    // determinism of reports
    for args in [
        &["measure", "r1.json", "--all"][..],
        &["check", "ghz3.json", "--lu-sweep", "500,42"][..],
        &["check", "r1.json", "--covariance", "C,0.3,-0.7"][..],
    ] {
        let (x, y) = (tangle(args, dir), tangle(args, dir));
        ensure(x.stdout == y.stdout && !x.stdout.is_empty(), || format!("{args:?} not byte-identical"))?;
    }
    Ok("gen/measure/check examples and repeat runs".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden tangles", golden_tangles),
        ("decomposition identity", decomposition_identity),
        ("local-unitary invariance", lu_invariance),
        ("covariance relations", covariance_relations),
        ("product identity and alternate form", product_identity),
        ("tangle vs negativity/concurrence oracle", oracle_equivalence),
        ("negativity cross-checks", negativity_cross_checks),
        ("separability direction", separability),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let elapsed = t0.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
