//! Independent reference computations, written without the library's
//! determinant or transpose code.
#![allow(dead_code)]

use num_complex::Complex64;
use tangle_core::State;

type C64 = Complex64;

/// `4 |Det|` of the 2x2x2 Cayley hyperdeterminant, expanded term by term.
pub fn cayley_tau3(s: &State) -> f64 {
    let a = |b: &str| s.amplitude(b).unwrap();
    let d1 = a("000").powi(2) * a("111").powi(2)
        + a("001").powi(2) * a("110").powi(2)
        + a("010").powi(2) * a("101").powi(2)
        + a("100").powi(2) * a("011").powi(2);
    let d2 = a("000") * a("111") * a("011") * a("100")
        + a("000") * a("111") * a("101") * a("010")
        + a("000") * a("111") * a("110") * a("001")
        + a("011") * a("100") * a("101") * a("010")
        + a("011") * a("100") * a("110") * a("001")
        + a("101") * a("010") * a("110") * a("001");
    let d3 = a("000") * a("110") * a("101") * a("011") + a("111") * a("001") * a("010") * a("100");
    4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm()
}

/// Degree-2 four-qubit invariant `H = 1/2 sum_i (-1)^{|i|} a_i a_{~i}`.
pub fn h4(s: &State) -> C64 {
    let a = s.amplitudes();
    let sum: C64 = (0..16usize)
        .map(|i| {
            let sign = if i.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            a[i] * a[15 - i] * sign
        })
        .sum();
    sum * 0.5
}

pub fn h4_tau(s: &State) -> f64 {
    4.0 * h4(s).norm_sqr()
}

/// Single-qubit reduced density matrix of qubit `p` (1-based), summed directly from amplitudes.
pub fn reduced_qubit(s: &State, p: usize) -> [[C64; 2]; 2] {
    let n = s.n_qubits();
    let mask = 1usize << (n - p);
    let a = s.amplitudes();
    let mut r = [[C64::new(0.0, 0.0); 2]; 2];
    for i in (0..a.len()).filter(|i| i & mask == 0) {
        let (x0, x1) = (a[i], a[i | mask]);
        r[0][0] += x0 * x0.conj();
        r[0][1] += x0 * x1.conj();
        r[1][0] += x1 * x0.conj();
        r[1][1] += x1 * x1.conj();
    }
    r
}

/// Negativity of qubit `p` versus the rest for a pure state: `2 sqrt(det rho_p)`
/// (twice the product of the two Schmidt coefficients).
pub fn schmidt_negativity(s: &State, p: usize) -> f64 {
    let r = reduced_qubit(s, p);
    let det = (r[0][0] * r[1][1] - r[0][1] * r[1][0]).re.max(0.0);
    2.0 * det.sqrt()
}

/// Places single-qubit state `q` at position `p` (1-based) inside `rest`.
pub fn insert_qubit(rest: &State, q: (C64, C64), p: usize) -> State {
    let m = rest.n_qubits();
    let n = m + 1;
    let low_bits = n - p;
    let amps: Vec<C64> = (0..1usize << n)
        .map(|i| {
            let bit = (i >> low_bits) & 1;
            let high = i >> (low_bits + 1);
            let low = i & ((1 << low_bits) - 1);
            let j = (high << low_bits) | low;
            rest.amp(j) * if bit == 0 { q.0 } else { q.1 }
        })
        .collect();
    State::normalize(n, amps).unwrap()
}
