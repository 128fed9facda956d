//! JSON state files:
//!
//! ```json
//! {"n_qubits": 2, "amplitudes": [{"index": "00", "re": 0.7071, "im": 0.0}, ...]}
//! ```
//!
//! Omitted indices are zero. Reading normalizes the amplitudes; callers can
//! inspect [`PureState::was_renormalized`] to warn about the correction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, C};
use crate::state::{PureState, DEFAULT_MAX_QUBITS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub n_qubits: usize,
    pub amplitudes: Vec<AmplitudeEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplitudeEntry {
    pub index: String,
    pub re: f64,
    pub im: f64,
}

impl StateFile {
    /// Nonzero amplitudes of `state`, in index order.
    pub fn from_state<T: Real>(state: &PureState<T>) -> Self {
        let n = state.n_qubits();
        let amplitudes = state
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() > T::zero())
            .map(|(i, a)| AmplitudeEntry {
                index: format!("{i:0n$b}"),
                re: a.re.to_f64_lossy(),
                im: a.im.to_f64_lossy(),
            })
            .collect();
        Self { n_qubits: n, amplitudes }
    }

    pub fn to_state<T: Real>(&self) -> Result<PureState<T>> {
        self.to_state_with_limit(DEFAULT_MAX_QUBITS)
    }

    pub fn to_state_with_limit<T: Real>(&self, max_qubits: usize) -> Result<PureState<T>> {
        let entries: Vec<(&str, C<T>)> = self
            .amplitudes
            .iter()
            .map(|e| {
                if !e.re.is_finite() || !e.im.is_finite() {
                    return Err(Error::NonFinite);
                }
                let re = T::from_f64(e.re).ok_or(Error::NonFinite)?;
                let im = T::from_f64(e.im).ok_or(Error::NonFinite)?;
                Ok((e.index.as_str(), C::new(re, im)))
            })
            .collect::<Result<_>>()?;
        PureState::from_entries_with_limit(self.n_qubits, &entries, max_qubits)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::StateFile(e.to_string()))
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("state file serializes");
        s.push('\n');
        s
    }
}
