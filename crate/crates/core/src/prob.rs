//! Exact probabilities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact rational probability.
pub type Prob = BigRational;

pub fn ratio(num: usize, den: usize) -> Prob {
    Prob::new(BigInt::from(num), BigInt::from(den))
}

pub fn one() -> Prob {
    Prob::one()
}

pub fn zero() -> Prob {
    Prob::zero()
}

/// Lossy conversion for display and floating-point diagnostics.
pub fn to_f64(p: &Prob) -> f64 {
    use num_traits::ToPrimitive;
    p.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn choose(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
