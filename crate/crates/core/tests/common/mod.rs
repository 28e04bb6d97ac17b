#![allow(dead_code)]

use rand::Rng;
use uproll::cartan::{CartanDatum, Series};
use uproll::rational::{frac, Rational};
use uproll::Weight;

/// Small types used by the randomized suites.
pub const SMALL_TYPES: [(Series, usize); 4] =
    [(Series::A, 1), (Series::A, 2), (Series::B, 2), (Series::C, 2)];

/// `Σ kᵢ (ℓ/2) ωᵢ`: an element of 𝓛 from integer coefficients.
pub fn current(datum: &CartanDatum, coeffs: &[i64]) -> Weight {
    Weight::new(coeffs.iter().map(|&k| frac(k as i128 * datum.ell as i128, 2)).collect())
}

pub fn random_rational<R: Rng>(rng: &mut R, num: i128, max_den: i128) -> Rational {
    frac(rng.gen_range(-num..=num), rng.gen_range(1..=max_den))
}

pub fn random_weight<R: Rng>(rng: &mut R, dim: usize, num: i128, max_den: i128) -> Weight {
    Weight::new((0..dim).map(|_| random_rational(rng, num, max_den)).collect())
}

pub fn random_int_weight<R: Rng>(rng: &mut R, dim: usize, bound: i128) -> Weight {
    Weight::new((0..dim).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound))).collect())
}
