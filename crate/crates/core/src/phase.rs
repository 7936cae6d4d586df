// starzx - contraction of ZX diagrams with star edges
// Copyright (C) 2026 The starzx authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Rational multiples of π, reduced into [0, 2).

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(Rational64);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse phase {0:?}")]
pub struct PhaseParseError(pub String);

impl Phase {
    /// `num/den · π`.
    pub fn new(num: i64, den: i64) -> Self {
        Phase::from_rational(Rational64::new(num, den))
    }

    pub fn from_rational(r: Rational64) -> Self {
        let two = Rational64::from_integer(2);
        let q = (r / two).floor();
        Phase(r - q * two)
    }

    pub fn zero() -> Self {
        Phase(Rational64::zero())
    }

    pub fn pi() -> Self {
        Phase::new(1, 1)
    }

    pub fn rational(&self) -> Rational64 {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// 0 or π.
    pub fn is_pauli(&self) -> bool {
        self.denom() == 1
    }

    /// ±π/2.
    pub fn is_proper_clifford(&self) -> bool {
        self.denom() == 2
    }

    pub fn is_clifford(&self) -> bool {
        self.denom() <= 2
    }

    /// Odd multiple of π/4.
    pub fn is_t(&self) -> bool {
        self.denom() == 4
    }

    /// k with phase = kπ/4, if on the π/4 grid.
    pub fn eighths(&self) -> Option<u8> {
        let d = self.denom();
        if 4 % d == 0 {
            Some((self.numer() * (4 / d)) as u8)
        } else {
            None
        }
    }

    pub fn on_grid(&self) -> bool {
        self.eighths().is_some()
    }

    pub fn to_radians(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0) * std::f64::consts::PI
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, o: Phase) -> Phase {
        Phase::from_rational(self.0 + o.0)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, o: Phase) {
        *self = *self + o;
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_rational(-self.0)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, o: Phase) -> Phase {
        self + (-o)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Serialized as the `n/d` string, in units of π.
impl serde::Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Phase {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for Phase {
    type Err = PhaseParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PhaseParseError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| err())?;
                let d: i64 = d.trim().parse().map_err(|_| err())?;
                if d == 0 {
                    return Err(err());
                }
                Ok(Phase::new(n, d))
            }
            None => Ok(Phase::new(t.parse().map_err(|_| err())?, 1)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_mod_two() {
        assert_eq!(Phase::new(9, 4), Phase::new(1, 4));
        assert_eq!(Phase::new(-1, 2), Phase::new(3, 2));
        assert_eq!(Phase::new(4, 2), Phase::zero());
        assert_eq!(Phase::new(1, 4) + Phase::new(7, 4), Phase::zero());
    }

    #[test]
    fn classes() {
        assert!(Phase::pi().is_pauli());
        assert!(Phase::new(3, 2).is_proper_clifford());
        assert!(Phase::new(5, 4).is_t());
        assert_eq!(Phase::new(3, 4).eighths(), Some(3));
        assert_eq!(Phase::new(1, 3).eighths(), None);
    }

    #[test]
    fn parse_roundtrip() {
        for p in [Phase::new(3, 4), Phase::zero(), Phase::new(5, 7)] {
            assert_eq!(p.to_string().parse::<Phase>().unwrap(), p);
        }
        assert!("1/0".parse::<Phase>().is_err());
    }
}
