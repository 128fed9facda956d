//! Seeded sampling of Haar-random states and single-qubit unitaries.
//!
//! Every sampler is driven by a ChaCha8 stream, so a `(seed, stream)` pair
//! reproduces the same draw on every platform and thread schedule.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::basis::Qubit;
use crate::error::Result;
use crate::scalar::{c, Real, C};
use crate::state::{LocalUnitary, Mat2, PureState};

/// Generator for trial `stream` of a run seeded with `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> C<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(T::lit(re), T::lit(im))
}

/// Haar-uniform point on the unit sphere of `C^(2^n)`.
pub fn sample_state<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<PureState<T>> {
    let amps = (0..1usize << n).map(|_| gaussian(rng)).collect();
    PureState::normalize(n, amps)
}

/// Haar-distributed element of U(2).
pub fn sample_unitary<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Mat2<T> {
    // A normalized Gaussian 4-vector is uniform on S^3, which parametrizes SU(2);
    // an independent uniform global phase lifts it to U(2).
    let (mut a, mut b) = (gaussian::<T, R>(rng), gaussian::<T, R>(rng));
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    a /= norm;
    b /= norm;
    let phi: f64 = rng.random::<f64>() * std::f64::consts::TAU;
    let phase = C::from_polar(T::one(), T::lit(phi));
    [[a * phase, -b.conj() * phase], [b * phase, a.conj() * phase]]
}

/// Haar-uniform single-qubit state `(a0, a1)`.
pub fn sample_qubit<T: Real, R: Rng + ?Sized>(rng: &mut R) -> (C<T>, C<T>) {
    let u = sample_unitary::<T, R>(rng);
    (u[0][0], u[1][0])
}

pub fn random_state<T: Real>(n: usize, seed: u64) -> Result<PureState<T>> {
    sample_state(&mut rng_for(seed, 0), n)
}

pub fn random_local_unitary<T: Real>(target: Qubit, seed: u64) -> LocalUnitary<T> {
    LocalUnitary { target, matrix: sample_unitary(&mut rng_for(seed, 0)) }
}

/// Tensor product of `n` independent Haar-random single-qubit states.
pub fn random_product_state<T: Real>(n: usize, seed: u64) -> Result<PureState<T>> {
    let mut rng = rng_for(seed, 0);
    let factors: Vec<_> = (0..n).map(|_| sample_qubit::<T, _>(&mut rng)).collect();
    PureState::product(&factors)
}
