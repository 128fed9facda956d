//! Subcommand implementations. Each returns a report or a classified failure;
//! `main` maps failures to exit codes.

use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};
use tangle_core::{
    covariance_check_3, covariance_check_4, decomposition_residual, density, enumerate_fonts, four_invariant,
    four_tangle, global_negativity, kway_negativity, lu_invariance_sweep, random_product_state, random_state,
    three_fonts, three_tangle, three_tangle_forms, CovarianceReport, Qubit, State, StateFile, DEFAULT_MAX_QUBITS,
};

use crate::args::{CheckArgs, GenArgs, Kind, MeasureArgs};
use crate::report::{num, MeasureReport};

/// Residuals at or above this fail `check`.
pub const CHECK_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    CheckFailed = 1,
    Usage = 2,
    Io = 3,
    InvalidState = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: ExitCode::Usage, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Self { code: ExitCode::Io, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self { code: ExitCode::InvalidState, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

type CmdResult<T> = Result<T, Failure>;

/// Lifts a library error that can only come from argument/state mismatch.
fn usage_err(e: tangle_core::Error) -> Failure {
    Failure::usage(e.to_string())
}

pub fn gen(args: &GenArgs) -> CmdResult<String> {
    let n = match (args.kind, args.n) {
        (Kind::Cluster4, None | Some(4)) => 4,
        (Kind::Cluster4, Some(n)) => return Err(Failure::usage(format!("cluster4 has 4 qubits, got {n}"))),
        (_, None) => return Err(Failure::usage("qubit count required")),
        (_, Some(n)) => n,
    };
    let state = match args.kind {
        Kind::Ghz => State::ghz(n),
        Kind::W => State::w(n),
        Kind::Cluster4 => Ok(State::cluster4()),
        Kind::Product => random_product_state(n, args.seed),
        Kind::Random if n == 0 || n > DEFAULT_MAX_QUBITS => {
            Err(tangle_core::Error::QubitCount { n, min: 1, max: DEFAULT_MAX_QUBITS })
        }
        Kind::Random => random_state(n, args.seed),
    }
    .map_err(usage_err)?;
    let text = StateFile::from_state(&state).to_json();
    match &args.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

/// Reads and validates a state file, warning on stderr if it had to be renormalized.
pub fn load_state(path: &Path) -> CmdResult<State> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    let file = StateFile::from_json(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    let state: State = file.to_state().map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    if state.was_renormalized() {
        eprintln!(
            "warning: {}: amplitudes renormalized (norm correction {:e})",
            path.display(),
            state.norm_correction()
        );
    }
    Ok(state)
}

fn require_n(state: &State, n: usize, what: &str) -> CmdResult<()> {
    if state.n_qubits() != n {
        return Err(Failure::usage(format!("{what} needs {n} qubits, state has {}", state.n_qubits())));
    }
    Ok(())
}

fn check_qubit(state: &State, q: Qubit) -> CmdResult<()> {
    q.check(state.n_qubits()).map_err(usage_err)
}

fn invariant_json(z: tangle_core::Complex64) -> Value {
    json!({"re": num(z.re), "im": num(z.im), "abs": num(z.norm())})
}

fn fonts_json(state: &State, p: Qubit) -> CmdResult<Value> {
    let fonts = enumerate_fonts(state, p).map_err(usage_err)?;
    Ok(Value::Array(
        fonts
            .iter()
            .map(|f| {
                json!({
                    "i": f.location.i.to_string(),
                    "j": f.location.j.to_string(),
                    "k": f.location.k.0,
                    "det_re": num(f.det.re),
                    "det_im": num(f.det.im),
                    "lambda_minus": num(f.lambda_minus),
                    "non_negative": f.non_negative,
                })
            })
            .collect(),
    ))
}

pub fn measure(args: &MeasureArgs) -> CmdResult<MeasureReport> {
    let any = args.tangle3
        || args.tangle4
        || args.four_invariant
        || args.negativity.is_some()
        || args.kway.is_some()
        || args.fonts.is_some()
        || args.all;
    if !any {
        return Err(Failure::usage("no measure requested"));
    }
    let state = load_state(&args.state)?;
    let n = state.n_qubits();
    if args.tangle3 {
        require_n(&state, 3, "--tangle3")?;
    }
    if args.tangle4 {
        require_n(&state, 4, "--tangle4")?;
    }
    if args.four_invariant {
        require_n(&state, 4, "--four-invariant")?;
    }
    for q in [args.negativity, args.fonts, args.kway.map(|(q, _)| q)].into_iter().flatten() {
        check_qubit(&state, q)?;
    }
    if let Some((_, k)) = args.kway {
        if !(2..=n).contains(&k) {
            return Err(Failure::usage(format!("K = {k} outside [2, {n}]")));
        }
    }

    let internal = |e: tangle_core::Error| Failure::invalid(e.to_string());
    let mut report = MeasureReport::default();
    if args.tangle3 || (args.all && n == 3) {
        report.insert("tangle3", num(three_tangle(&state).map_err(internal)?));
    }
    if args.tangle4 || (args.all && n == 4) {
        report.insert("tangle4", num(four_tangle(&state).map_err(internal)?));
    }
    if args.four_invariant || (args.all && n == 4) {
        report.insert("four_invariant", invariant_json(four_invariant(&state).map_err(internal)?));
    }

    let negativity_qubits: Vec<Qubit> =
        if args.all { Qubit::all(n).collect() } else { args.negativity.into_iter().collect() };
    if !negativity_qubits.is_empty() {
        let mut map = Map::new();
        for q in negativity_qubits {
            map.insert(q.label(), num(global_negativity(&state, q).map_err(internal)?));
        }
        report.insert("negativity", Value::Object(map));
    }

    let kway_pairs: Vec<(Qubit, usize)> = if args.all {
        Qubit::all(n).flat_map(|q| (2..=n).map(move |k| (q, k))).collect()
    } else {
        args.kway.into_iter().collect()
    };
    if !kway_pairs.is_empty() {
        let mut map = Map::new();
        for (q, k) in kway_pairs {
            map.insert(format!("{},{k}", q.label()), num(kway_negativity(&state, q, k).map_err(internal)?));
        }
        report.insert("kway_negativity", Value::Object(map));
    }

    if let Some(p) = args.fonts {
        let mut map = Map::new();
        map.insert(p.label(), fonts_json(&state, p)?);
        report.insert("fonts", Value::Object(map));
    }
    Ok(report)
}

fn covariance_json(reports: &[CovarianceReport<f64>]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                let candidates: Map<String, Value> =
                    r.candidates.iter().map(|(p, res)| (p.label().to_string(), num(*res))).collect();
                json!({
                    "relation": r.relation,
                    "residual": num(r.residual),
                    "prefactor": r.prefactor.label(),
                    "prefactor_value": num(r.prefactor_used),
                    "candidates": candidates,
                })
            })
            .collect(),
    )
}

/// Report plus the largest residual it contains.
pub fn check(args: &CheckArgs) -> CmdResult<(MeasureReport, f64)> {
    if !(args.decomposition || args.product_identity || args.covariance.is_some() || args.lu_sweep.is_some()) {
        return Err(Failure::usage("no check requested"));
    }
    let state = load_state(&args.state)?;
    let n = state.n_qubits();
    if args.product_identity {
        require_n(&state, 3, "--product-identity")?;
    }
    if let Some((q, _)) = args.covariance {
        match n {
            3 if q == Qubit::B => {}
            3 => return Err(Failure::usage("three-qubit covariance relations are for qubit B")),
            4 => check_qubit(&state, q)?,
            _ => return Err(Failure::usage(format!("--covariance needs 3 or 4 qubits, state has {n}"))),
        }
    }
    if args.lu_sweep.is_some() && !(3..=4).contains(&n) {
        return Err(Failure::usage(format!("--lu-sweep needs 3 or 4 qubits, state has {n}")));
    }
    if args.decomposition && n < 2 {
        return Err(Failure::usage("--decomposition needs at least 2 qubits"));
    }

    let internal = |e: tangle_core::Error| Failure::invalid(e.to_string());
    let mut report = MeasureReport::default();
    let mut worst = 0.0f64;

    if args.decomposition {
        let rho = density(&state);
        let mut map = Map::new();
        for p in Qubit::all(n) {
            let r = decomposition_residual(&rho, p).map_err(internal)?;
            worst = worst.max(r);
            map.insert(p.label(), num(r));
        }
        report.insert("decomposition", Value::Object(map));
    }

    if args.product_identity {
        let f = three_fonts(&state).map_err(internal)?;
        let forms = three_tangle_forms(&state).map_err(internal)?;
        let residual = f.product_identity_residual();
        let gap = (forms.primary - forms.alternate).abs();
        worst = worst.max(residual).max(gap);
        report.insert("product_identity", json!({"residual": num(residual), "alternate_form_gap": num(gap)}));
    }

    if let Some((q, x)) = args.covariance {
        let reports =
            if n == 3 { covariance_check_3(&state, x) } else { covariance_check_4(&state, q, x) }.map_err(internal)?;
        worst = reports.iter().fold(worst, |w, r| w.max(r.residual));
        report.insert(
            "covariance",
            json!({
                "qubit": q.label(),
                "param": [num(x.re), num(x.im)],
                "relations": covariance_json(&reports),
            }),
        );
    }

    if let Some((trials, seed)) = args.lu_sweep {
        let dev = lu_invariance_sweep(&state, trials, seed).map_err(internal)?;
        worst = worst.max(dev);
        report.insert("lu_sweep", json!({"trials": trials, "seed": seed, "max_deviation": num(dev)}));
    }
    Ok((report, worst))
}
