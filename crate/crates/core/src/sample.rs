//! Seeded random generators for property tests and the verification
//! harness. Small numerators and denominators keep exact arithmetic fast
//! while still exercising every sign pattern.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cevian::DegeneracyFlags;
use crate::geometry::{BaryPoint, ProjMap};
use crate::rational::{rat_int, Int, Rational};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in [-20, 20] and denominator in [1, 20].
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-20i64..=20);
    let den = rng.gen_range(1i64..=20);
    Rational::new(Int::from(num), Int::from(den))
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// Any point: a nonzero triple of small rationals, canonicalized.
pub fn random_point(rng: &mut ChaCha8Rng) -> BaryPoint {
    loop {
        let coords = [
            random_rational(rng),
            random_rational(rng),
            random_rational(rng),
        ];
        if let Ok(p) = BaryPoint::new(coords) {
            return p;
        }
    }
}

/// An ordinary point (coordinate sum nonzero).
pub fn random_ordinary_point(rng: &mut ChaCha8Rng) -> BaryPoint {
    loop {
        let p = random_point(rng);
        if p.is_ordinary() {
            return p;
        }
    }
}

/// A driving point with every degeneracy flag clear: off the sidelines of
/// both triangles, ordinary, off the Steiner circumellipse, off the
/// medians, and with S ordinary.
pub fn random_nondegenerate_point(rng: &mut ChaCha8Rng) -> BaryPoint {
    loop {
        let p = random_point(rng);
        if !DegeneracyFlags::classify(&p).any() {
            return p;
        }
    }
}

/// An elliptic parameter: a small rational outside {0, -1, -9}.
pub fn random_elliptic_parameter(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let a = random_rational(rng);
        if !num_traits::Zero::is_zero(&a) && a != rat_int(-1) && a != rat_int(-9) {
            return a;
        }
    }
}

/// An invertible projective map with small rational entries.
pub fn random_invertible_map(rng: &mut ChaCha8Rng) -> ProjMap {
    loop {
        let entry = |rng: &mut ChaCha8Rng| random_nonzero_rational(rng);
        let m = ProjMap::new([
            [entry(rng), random_rational(rng), random_rational(rng)],
            [random_rational(rng), entry(rng), random_rational(rng)],
            [random_rational(rng), random_rational(rng), entry(rng)],
        ]);
        if let Ok(m) = m {
            if !m.is_degenerate() {
                return m;
            }
        }
    }
}
