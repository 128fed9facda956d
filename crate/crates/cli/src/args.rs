//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tangle_core::{Complex64, Qubit};

#[derive(Debug, Parser)]
#[command(name = "tangle", version, about = "Negativities, three-tangle and four-tangle of N-qubit pure states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a state file for a canonical or random state.
    Gen(GenArgs),
    /// Compute entanglement measures of a state file.
    Measure(MeasureArgs),
    /// Run identity and invariance checks on a state file.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ghz,
    W,
    Cluster4,
    /// Product of Haar-random single-qubit states.
    Product,
    /// Haar-random pure state.
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: Kind,
    /// Number of qubits (fixed at 4 for cluster4).
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; standard output when omitted.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    pub state: PathBuf,
    /// Three-tangle (3 qubits).
    #[arg(long)]
    pub tangle3: bool,
    /// Four-tangle (4 qubits).
    #[arg(long)]
    pub tangle4: bool,
    /// Signed four-qubit invariant and its modulus (4 qubits).
    #[arg(long)]
    pub four_invariant: bool,
    /// Global negativity with respect to qubit P.
    #[arg(long, value_name = "P", value_parser = parse_qubit)]
    pub negativity: Option<Qubit>,
    /// K-way negativity with respect to qubit P.
    #[arg(long, value_name = "P,K", value_parser = parse_kway)]
    pub kway: Option<(Qubit, usize)>,
    /// Negativity fonts of the global transpose on qubit P.
    #[arg(long, value_name = "P", value_parser = parse_qubit)]
    pub fonts: Option<Qubit>,
    /// Every measure valid for the state's qubit count (fonts excluded).
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub state: PathBuf,
    /// Global transpose equals the sum of K-way transposes minus (N-2) rho, every qubit.
    #[arg(long)]
    pub decomposition: bool,
    /// T001 T000 = PC0 PC1 - PB1 PB0 and agreement of the two three-tangle forms (3 qubits).
    #[arg(long)]
    pub product_identity: bool,
    /// Covariance relations under {1,-x*;x,1}/sqrt(1+|x|^2) on qubit Q, x = RE + i IM.
    #[arg(long, value_name = "Q,RE[,IM]", value_parser = parse_covariance)]
    pub covariance: Option<(Qubit, Complex64)>,
    /// Tangle deviation over TRIALS random local-unitary products (3 or 4 qubits).
    #[arg(long, value_name = "TRIALS,SEED", value_parser = parse_sweep)]
    pub lu_sweep: Option<(usize, u64)>,
}

fn parse_qubit(s: &str) -> Result<Qubit, String> {
    s.parse::<Qubit>().map_err(|e| e.to_string())
}

fn parse_kway(s: &str) -> Result<(Qubit, usize), String> {
    let (p, k) = s.split_once(',').ok_or("expected P,K")?;
    Ok((parse_qubit(p)?, k.trim().parse().map_err(|_| format!("invalid K {k:?}"))?))
}

fn parse_covariance(s: &str) -> Result<(Qubit, Complex64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let float = |t: &str| -> Result<f64, String> {
        let v: f64 = t.trim().parse().map_err(|_| format!("invalid number {t:?}"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("non-finite parameter {t:?}"))
        }
    };
    match parts.as_slice() {
        [q, re] => Ok((parse_qubit(q)?, Complex64::new(float(re)?, 0.0))),
        [q, re, im] => Ok((parse_qubit(q)?, Complex64::new(float(re)?, float(im)?))),
        _ => Err("expected Q,RE or Q,RE,IM".into()),
    }
}

fn parse_sweep(s: &str) -> Result<(usize, u64), String> {
    let (t, seed) = s.split_once(',').ok_or("expected TRIALS,SEED")?;
    Ok((
        t.trim().parse().map_err(|_| format!("invalid trial count {t:?}"))?,
        seed.trim().parse().map_err(|_| format!("invalid seed {seed:?}"))?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_parsers() {
        assert_eq!(parse_kway("A,3").unwrap(), (Qubit::A, 3));
        assert!(parse_kway("A").is_err());
        assert_eq!(parse_covariance("C,1").unwrap(), (Qubit::C, Complex64::new(1.0, 0.0)));
        assert_eq!(parse_covariance("2,0.5,-1").unwrap(), (Qubit::B, Complex64::new(0.5, -1.0)));
        assert!(parse_covariance("C,nan").is_err());
        assert!(parse_covariance("C").is_err());
        assert_eq!(parse_sweep("500,42").unwrap(), (500, 42));
        assert!(parse_sweep("500").is_err());
    }

    #[test]
    fn grammar_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
