//! Exact roots of unity, `exp(2πi·num/den)`, stored as reduced fractions mod 1.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Div, Mul};

use nalgebra::Complex;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u64; 2]", into = "[u64; 2]")]
pub struct Phase {
    num: u64,
    den: u64,
}

/// Largest denominator accepted from serialized input.
pub const MAX_SERIAL_DEN: u64 = 1 << 24;

impl Phase {
    pub const ONE: Phase = Phase { num: 0, den: 1 };

    /// `exp(2πi·num/den)`; any integer numerator is reduced mod `den`.
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidSpec("phase denominator must be positive".into()));
        }
        let num = (num as i128).rem_euclid(den as i128) as u64;
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: u64, den: u64) -> Self {
        let g = num.gcd(&den);
        Phase {
            num: num / g,
            den: den / g,
        }
    }

    /// The primitive `n`-th root `exp(2πi/n)` raised to `k`.
    pub fn root_of_unity(k: i64, n: u64) -> Self {
        Self::new(k, n).expect("n > 0")
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn inverse(self) -> Self {
        Self::reduced((self.den - self.num) % self.den, self.den)
    }

    pub fn conj(self) -> Self {
        self.inverse()
    }

    pub fn pow(self, k: i64) -> Self {
        let den = self.den as i128;
        let num = (self.num as i128 * k as i128).rem_euclid(den);
        Self::reduced(num as u64, self.den)
    }

    /// Numerator when written over the denominator `m`, if `den | m`.
    pub fn scaled_num(self, m: u64) -> Option<u64> {
        (m % self.den == 0).then(|| self.num * (m / self.den))
    }

    pub fn to_complex(self) -> Complex<f64> {
        let t = TAU * self.num as f64 / self.den as f64;
        Complex::new(t.cos(), t.sin())
    }

    /// Snaps a unit complex number to the rational phase with the
    /// smallest denominator `<= max_den` lying within `tol` of it.
    pub fn snap(z: Complex<f64>, max_den: u64, tol: f64) -> Option<Self> {
        if (z.norm() - 1.0).abs() > tol {
            return None;
        }
        let t = (z.arg() / TAU).rem_euclid(1.0);
        // continued-fraction convergents of t
        let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
        let mut x = t;
        for _ in 0..64 {
            let a = x.floor();
            if a > u32::MAX as f64 {
                break;
            }
            let a = a as u64;
            let (p2, q2) = (a * p1 + p0, a * q1 + q0);
            if q2 > max_den {
                break;
            }
            let candidate = Self::new(p2 as i64, q2).ok()?;
            if (candidate.to_complex() - z).norm() < tol {
                return Some(candidate);
            }
            (p0, q0, p1, q1) = (p1, q1, p2, q2);
            let frac = x - a as f64;
            if frac < 1e-15 {
                break;
            }
            x = 1.0 / frac;
        }
        // t close to 1 rounds to the phase 0/1
        let one = Phase::ONE;
        ((one.to_complex() - z).norm() < tol).then_some(one)
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ONE
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        let den = self.den.lcm(&rhs.den);
        let num = (self.num as u128 * (den / self.den) as u128 + rhs.num as u128 * (den / rhs.den) as u128) % den as u128;
        Phase::reduced(num as u64, den)
    }
}

impl Div for Phase {
    type Output = Phase;

    fn div(self, rhs: Phase) -> Phase {
        self * rhs.inverse()
    }
}

impl std::iter::Product for Phase {
    fn product<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ONE, Mul::mul)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2πi·{}/{})", self.num, self.den)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl TryFrom<[u64; 2]> for Phase {
    type Error = Error;

    fn try_from([num, den]: [u64; 2]) -> Result<Self> {
        if den == 0 || den > MAX_SERIAL_DEN {
            return Err(Error::InvalidSpec(format!("phase denominator {den} outside 1..={MAX_SERIAL_DEN}")));
        }
        Ok(Phase::reduced(num % den, den))
    }
}

impl From<Phase> for [u64; 2] {
    fn from(p: Phase) -> [u64; 2] {
        [p.num, p.den]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let p = Phase::new(6, 8).unwrap();
        assert_eq!((p.num(), p.den()), (3, 4));
        assert_eq!(Phase::new(-1, 4).unwrap(), Phase::new(3, 4).unwrap());
        assert_eq!(Phase::new(4, 4).unwrap(), Phase::ONE);
        assert!(Phase::new(1, 0).is_err());
    }

    #[test]
    fn snap_recovers_roots_of_unity() {
        for den in 1..=40u64 {
            for num in 0..den {
                let p = Phase::new(num as i64, den).unwrap();
                assert_eq!(Phase::snap(p.to_complex(), 160, 1e-9), Some(p));
            }
        }
        assert_eq!(Phase::snap(Complex::new(0.5, 0.0), 10, 1e-9), None);
        // 1/41 is outside the denominator bound
        let p = Phase::new(1, 41).unwrap();
        assert_eq!(Phase::snap(p.to_complex(), 40, 1e-9), None);
    }

    #[test]
    fn snap_near_one_from_below() {
        let z = Complex::new((1e-13f64).cos(), -(1e-13f64).sin());
        assert_eq!(Phase::snap(z, 8, 1e-9), Some(Phase::ONE));
    }

    proptest! {
        #[test]
        fn group_laws(a in 0i64..60, b in 1u64..30, c in 0i64..60, d in 1u64..30) {
            let p = Phase::new(a, b).unwrap();
            let q = Phase::new(c, d).unwrap();
            prop_assert_eq!(p * q, q * p);
            prop_assert!((p * p.inverse()).is_one());
            let z = p.to_complex() * q.to_complex();
            prop_assert!(((p * q).to_complex() - z).norm() < 1e-12);
            prop_assert!((p.to_complex().norm() - 1.0).abs() < 1e-12);
        }
    }
}
