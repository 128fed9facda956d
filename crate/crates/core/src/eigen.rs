//! Dense Hermitian eigensolvers.
//!
//! Two independent routes:
//! - [`tridiagonal_eigenvalues`]: Householder reduction to a real symmetric
//!   tridiagonal matrix followed by implicit QL with Wilkinson shifts.
//!   Values only; used for spectra of large partial transposes.
//! - [`jacobi_eigen`]: cyclic complex Jacobi rotations. Values and vectors;
//!   slower, used where eigenvectors are needed and as a cross-check.

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{czero, Real, C};

const MAX_JACOBI_SWEEPS: usize = 100;
const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues (ascending) and column eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T: Real> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
}

impl<T: Real> EigenDecomposition<T> {
    /// `||M V - V diag(values)||_F`.
    pub fn residual(&self, m: &CMatrix<T>) -> T {
        let n = m.dim();
        let mv = m.matmul(&self.vectors).expect("same dimension");
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                acc += (mv[(i, j)] - self.vectors[(i, j)] * self.values[j]).norm_sqr();
            }
        }
        acc.sqrt()
    }
}

pub(crate) fn check_hermitian<T: Real>(m: &CMatrix<T>) -> Result<()> {
    let scale = T::one().max(m.frobenius_norm());
    let defect = m.hermiticity_defect();
    if !(defect <= T::validation_tol() * scale) {
        return Err(Error::NotHermitian(defect.to_f64_lossy()));
    }
    Ok(())
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
pub fn jacobi_eigen<T: Real>(m: &CMatrix<T>) -> Result<EigenDecomposition<T>> {
    check_hermitian(m)?;
    let n = m.dim();
    let mut a = m.clone();
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    for i in 0..n {
        a[(i, i)] = C::new(a[(i, i)].re, T::zero());
        for j in i + 1..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * T::lit(0.5);
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm();
    let tiny = T::epsilon() * T::epsilon() * scale * scale;

    let mut converged = n < 2;
    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let off: T = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| a[(i, j)].norm_sqr()).sum();
        if off <= tiny {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_JACOBI_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.partial_cmp(&a[(y, y)].re).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, k)];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// Annihilates `a[p][q]` with `J = [[c, s e^{iφ}], [-s e^{-iφ}, c]]`, `A <- J† A J`, `V <- V J`.
fn rotate<T: Real>(a: &mut CMatrix<T>, v: &mut CMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == T::zero() {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (r + r);
    let t = {
        let t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let cs = T::one() / (T::one() + t * t).sqrt();
    let sn = t * cs;
    let jpq = phase * sn;
    let jqp = -phase.conj() * sn;
    let n = a.dim();

    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * cs + akq * jqp;
        a[(k, q)] = akp * jpq + akq * cs;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * cs + aqk * jqp.conj();
        a[(q, k)] = apk * jpq.conj() + aqk * cs;
    }
    a[(p, q)] = czero();
    a[(q, p)] = czero();
    a[(p, p)] = C::new(a[(p, p)].re, T::zero());
    a[(q, q)] = C::new(a[(q, q)].re, T::zero());
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * cs + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * cs;
    }
}

/// Eigenvalues of a Hermitian matrix, ascending, via Householder
/// tridiagonalization and implicit QL.
pub fn tridiagonal_eigenvalues<T: Real>(m: &CMatrix<T>) -> Result<Vec<T>> {
    check_hermitian(m)?;
    let (mut d, mut e) = householder_tridiagonal(m);
    ql_implicit(&mut d, &mut e)?;
    d.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    Ok(d)
}

/// Reduces Hermitian `m` to tridiagonal form. Returns the real diagonal and
/// the moduli of the sub-diagonal (`e[0]` unused); the phases of the complex
/// sub-diagonal drop out under a diagonal unitary similarity.
fn householder_tridiagonal<T: Real>(m: &CMatrix<T>) -> (Vec<T>, Vec<T>) {
    let n = m.dim();
    let mut a = m.clone();
    let mut e = vec![T::zero(); n];
    let mut v = vec![czero::<T>(); n];
    let mut w = vec![czero::<T>(); n];

    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        // Work on the column scaled by its largest modulus; H is scale-invariant.
        let big = (lo..n).fold(T::zero(), |acc, i| acc.max(a[(i, k)].norm()));
        if big == T::zero() {
            e[lo] = T::zero();
            continue;
        }
        for i in lo..n {
            v[i] = a[(i, k)] / big;
        }
        let xnorm_scaled = (lo..n).map(|i| v[i].norm_sqr()).sum::<T>().sqrt();
        let xnorm = xnorm_scaled * big;
        let x0 = v[lo];
        let phase = if x0.norm() == T::zero() { C::new(T::one(), T::zero()) } else { x0 / x0.norm() };
        let alpha = -phase * xnorm;
        // v = x - alpha e1, H = I - tau v v†
        v[lo] += phase * xnorm_scaled;
        let vnorm2: T = (lo..n).map(|i| v[i].norm_sqr()).sum();
        let tau = T::lit(2.0) / vnorm2;
        // p = tau * A v on the trailing block
        let data = a.as_slice();
        for i in lo..n {
            let row = &data[i * n + lo..i * n + n];
            let acc = row.iter().zip(&v[lo..n]).fold(czero::<T>(), |s, (&aij, &vj)| s + aij * vj);
            w[i] = acc * tau;
        }
        // K = tau/2 * v† p ; w = p - K v
        let vp = (lo..n).fold(czero::<T>(), |s, i| s + v[i].conj() * w[i]);
        let kk = vp * (tau * T::lit(0.5));
        for i in lo..n {
            w[i] -= v[i] * kk;
        }
        // A <- A - v w† - w v†
        let data = a.as_mut_slice();
        for i in lo..n {
            let (vi, wi) = (v[i], w[i]);
            let row = &mut data[i * n + lo..i * n + n];
            for (j, aij) in (lo..n).zip(row.iter_mut()) {
                *aij -= vi * w[j].conj() + wi * v[j].conj();
            }
        }
        for i in lo + 1..n {
            a[(i, k)] = czero();
            a[(k, i)] = czero();
        }
        a[(lo, k)] = alpha;
        a[(k, lo)] = alpha.conj();
        e[lo] = xnorm;
    }
    if n >= 2 {
        e[n - 1] = a[(n - 1, n - 2)].norm();
    }
    let d = (0..n).map(|i| a[(i, i)].re).collect();
    (d, e)
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix with
/// diagonal `d` and sub-diagonal `e[1..]`. Overwrites `d` with the eigenvalues.
fn ql_implicit<T: Real>(d: &mut [T], e: &mut [T]) -> Result<()> {
    let n = d.len();
    if n < 2 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    let two = T::lit(2.0);
    // Off-diagonals below this are negligible regardless of their neighbours.
    let scale = d.iter().zip(e.iter()).fold(T::zero(), |acc, (x, y)| acc.max(x.abs() + y.abs()));
    let floor = T::epsilon() * scale;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence(MAX_QL_ITERATIONS));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::rng_for;
    use rand::Rng;
    use rand_distr::StandardNormal;

    fn random_hermitian(n: usize, seed: u64) -> CMatrix<f64> {
        let mut rng = rng_for(seed, 0);
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = C::new(rng.sample(StandardNormal), 0.0);
            for j in i + 1..n {
                let z = C::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal));
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        m
    }

    #[test]
    fn diagonal_and_pauli_x() {
        let m = CMatrix::<f64>::from_real_diagonal(&[3.0, 1.0, 2.0]);
        assert_eq!(tridiagonal_eigenvalues(&m).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(jacobi_eigen(&m).unwrap().values, vec![1.0, 2.0, 3.0]);
        let one = C::new(1.0f64, 0.0);
        let x = CMatrix::from_rows(&[vec![C::new(0.0, 0.0), one], vec![one, C::new(0.0, 0.0)]]).unwrap();
        for vals in [tridiagonal_eigenvalues(&x).unwrap(), jacobi_eigen(&x).unwrap().values] {
            assert!((vals[0] + 1.0).abs() < 1e-15 && (vals[1] - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn pauli_y_complex_entries() {
        let i = C::new(0.0f64, 1.0);
        let y = CMatrix::from_rows(&[vec![C::new(0.0, 0.0), -i], vec![i, C::new(0.0, 0.0)]]).unwrap();
        let dec = jacobi_eigen(&y).unwrap();
        assert!((dec.values[0] + 1.0).abs() < 1e-15);
        assert!(dec.residual(&y) < 1e-14);
    }

    #[test]
    fn routes_agree_and_backward_error_small() {
        for (n, seed) in [(1, 1), (2, 2), (5, 3), (16, 4), (33, 5), (64, 6)] {
            let m = random_hermitian(n, seed);
            let dec = jacobi_eigen(&m).unwrap();
            let tri = tridiagonal_eigenvalues(&m).unwrap();
            let norm = m.frobenius_norm();
            assert!(dec.residual(&m) <= 1e-9 * norm, "n={n}");
            for (a, b) in dec.values.iter().zip(&tri) {
                assert!((a - b).abs() <= 1e-10 * norm, "n={n}: {a} vs {b}");
            }
            let tr: f64 = tri.iter().sum();
            assert!((tr - m.trace().re).abs() <= 1e-10 * norm);
        }
    }

    #[test]
    fn degenerate_spectrum() {
        // rank-one projector: eigenvalues {0,..,0,1}
        let n = 8;
        let v: Vec<C<f64>> = (0..n).map(|k| C::new((k as f64).cos(), (k as f64).sin()) / (n as f64).sqrt()).collect();
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        let tri = tridiagonal_eigenvalues(&m).unwrap();
        assert!((tri[n - 1] - 1.0).abs() < 1e-12);
        assert!(tri[..n - 1].iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m =
            CMatrix::from_rows(&[vec![C::new(0.0, 0.0), C::new(1.0, 0.0)], vec![C::new(0.0, 0.0), C::new(0.0, 0.0)]])
                .unwrap();
        assert!(matches!(tridiagonal_eigenvalues(&m), Err(Error::NotHermitian(_))));
        assert!(matches!(jacobi_eigen(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn f32_route() {
        let m = CMatrix::<f32>::from_real_diagonal(&[2.0, -1.0]);
        assert_eq!(tridiagonal_eigenvalues(&m).unwrap(), vec![-1.0, 2.0]);
    }

    #[test]
    fn f32_tiny_columns() {
        let mut m = CMatrix::<f32>::from_real_diagonal(&[0.5, -0.5, 0.25, 0.0]);
        for (i, j, v) in [(0, 2, 1e-22f32), (0, 3, 3e-23), (1, 3, 2e-21)] {
            m[(i, j)] = C::new(v, 0.0);
            m[(j, i)] = C::new(v, 0.0);
        }
        let vals = tridiagonal_eigenvalues(&m).unwrap();
        for (got, want) in vals.iter().zip([-0.5f32, 0.0, 0.25, 0.5]) {
            assert!((got - want).abs() < 1e-6, "{vals:?}");
        }
    }
}
