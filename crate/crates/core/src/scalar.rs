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

//! Exact scalars in Z[ω, 1/√2] with ω = e^{iπ/4}.
//!
//! A value is `2^{pow2/2} · (a + bω + cω² + dω³)`. Values are kept in a
//! canonical form where the integer part is not divisible by √2, so equal
//! values have equal representations. Coefficients live in `i64` and
//! spill into `BigInt` when a product or sum leaves that range.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use thiserror::Error;

use crate::phase::Phase;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("exponent of the √2 factor overflowed")]
    ExponentOverflow,
    #[error("phase {0} is not a multiple of π/4")]
    OffGrid(Phase),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Coeffs {
    Small([i64; 4]),
    Big(Box<[BigInt; 4]>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarExact {
    coeffs: Coeffs,
    pow2: i32,
}

fn big(c: &[i64; 4]) -> [BigInt; 4] {
    [c[0].into(), c[1].into(), c[2].into(), c[3].into()]
}

fn fits(c: &[BigInt; 4]) -> Option<[i64; 4]> {
    Some([c[0].to_i64()?, c[1].to_i64()?, c[2].to_i64()?, c[3].to_i64()?])
}

fn from_i128(c: [i128; 4]) -> Coeffs {
    let lim = i64::MAX as i128;
    if c.iter().all(|x| x.abs() <= lim) {
        Coeffs::Small([c[0] as i64, c[1] as i64, c[2] as i64, c[3] as i64])
    } else {
        Coeffs::Big(Box::new([c[0].into(), c[1].into(), c[2].into(), c[3].into()]))
    }
}

impl Coeffs {
    fn as_big(&self) -> [BigInt; 4] {
        match self {
            Coeffs::Small(c) => big(c),
            Coeffs::Big(b) => (**b).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Coeffs::Small(c) => c.iter().all(|&x| x == 0),
            Coeffs::Big(b) => b.iter().all(|x| x.is_zero()),
        }
    }

    fn demote(self) -> Coeffs {
        match self {
            Coeffs::Big(b) => match fits(&b) {
                Some(s) => Coeffs::Small(s),
                None => Coeffs::Big(b),
            },
            s => s,
        }
    }

    // multiply by √2 = ω − ω³
    fn times_sqrt2(&self) -> Coeffs {
        match self {
            Coeffs::Small(c) => {
                let [a, b, cc, d] = c.map(|x| x as i128);
                from_i128([b - d, a + cc, b + d, cc - a])
            }
            Coeffs::Big(bx) => {
                let [a, b, cc, d] = &**bx;
                Coeffs::Big(Box::new([b - d, a + cc, b + d, cc - a])).demote()
            }
        }
    }

    // divide by √2 if the result stays integral
    fn div_sqrt2(&self) -> Option<Coeffs> {
        match self {
            Coeffs::Small(c) => {
                let [a, b, cc, d] = c.map(|x| x as i128);
                if (a - cc) % 2 != 0 || (b - d) % 2 != 0 {
                    return None;
                }
                Some(from_i128([(b - d) / 2, (a + cc) / 2, (b + d) / 2, (cc - a) / 2]))
            }
            Coeffs::Big(bx) => {
                let [a, b, cc, d] = &**bx;
                let two = BigInt::from(2);
                if !(a - cc).is_even() || !(b - d).is_even() {
                    return None;
                }
                let r = [
                    (b - d).div_floor(&two),
                    (a + cc).div_floor(&two),
                    (b + d).div_floor(&two),
                    (cc - a).div_floor(&two),
                ];
                Some(Coeffs::Big(Box::new(r)).demote())
            }
        }
    }
}

impl ScalarExact {
    pub fn zero() -> Self {
        ScalarExact { coeffs: Coeffs::Small([0; 4]), pow2: 0 }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::new([n, 0, 0, 0], 0)
    }

    /// `2^{pow2/2} · (a + bω + cω² + dω³)`.
    pub fn new(coeffs: [i64; 4], pow2: i32) -> Self {
        ScalarExact { coeffs: Coeffs::Small(coeffs), pow2 }.normalized()
    }

    pub fn from_big(coeffs: [BigInt; 4], pow2: i32) -> Self {
        ScalarExact { coeffs: Coeffs::Big(Box::new(coeffs)).demote(), pow2 }.normalized()
    }

    /// √2^k.
    pub fn sqrt2_pow(k: i32) -> Self {
        Self::new([1, 0, 0, 0], k)
    }

    /// ω^k.
    pub fn omega_pow(k: i64) -> Self {
        let k = k.rem_euclid(8);
        let mut c = [0i64; 4];
        if k < 4 {
            c[k as usize] = 1;
        } else {
            c[(k - 4) as usize] = -1;
        }
        Self::new(c, 0)
    }

    /// e^{iα} for α on the π/4 grid.
    pub fn from_phase(p: Phase) -> Result<Self, ScalarError> {
        p.eighths().map(|k| Self::omega_pow(k as i64)).ok_or(ScalarError::OffGrid(p))
    }

    /// 1 + e^{iα} for α on the π/4 grid.
    pub fn one_plus_phase(p: Phase) -> Result<Self, ScalarError> {
        Ok(Self::one() + Self::from_phase(p)?)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn pow2(&self) -> i32 {
        self.pow2
    }

    pub fn is_big(&self) -> bool {
        matches!(self.coeffs, Coeffs::Big(_))
    }

    /// Coefficients (a, b, c, d) when they fit in `i64`.
    pub fn coeffs_i64(&self) -> Option<[i64; 4]> {
        match &self.coeffs {
            Coeffs::Small(c) => Some(*c),
            Coeffs::Big(_) => None,
        }
    }

    pub fn coeffs_big(&self) -> [BigInt; 4] {
        self.coeffs.as_big()
    }

    fn normalized(mut self) -> Self {
        if self.coeffs.is_zero() {
            return Self { coeffs: Coeffs::Small([0; 4]), pow2: 0 };
        }
        while let Some(c) = self.coeffs.div_sqrt2() {
            self.coeffs = c;
            self.pow2 += 1;
        }
        self
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ScalarError> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        let pow2 = self.pow2.checked_add(o.pow2).ok_or(ScalarError::ExponentOverflow)?;
        let coeffs = match (&self.coeffs, &o.coeffs) {
            (Coeffs::Small(x), Coeffs::Small(y)) => {
                let x = x.map(|v| v as i128);
                let y = y.map(|v| v as i128);
                let mut r = [0i128; 4];
                let mut ok = true;
                'outer: for i in 0..4 {
                    for j in 0..4 {
                        let p = match x[i].checked_mul(y[j]) {
                            Some(p) => p,
                            None => {
                                ok = false;
                                break 'outer;
                            }
                        };
                        let k = i + j;
                        let slot = if k < 4 { &mut r[k] } else { &mut r[k - 4] };
                        let next = if k < 4 { slot.checked_add(p) } else { slot.checked_sub(p) };
                        match next {
                            Some(v) => *slot = v,
                            None => {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
                if ok {
                    from_i128(r)
                } else {
                    Coeffs::Big(Box::new(mul_big(&big(&self.small()), &big(&o.small())))).demote()
                }
            }
            _ => Coeffs::Big(Box::new(mul_big(&self.coeffs.as_big(), &o.coeffs.as_big()))).demote(),
        };
        Ok(ScalarExact { coeffs, pow2 }.normalized())
    }

    fn small(&self) -> [i64; 4] {
        match &self.coeffs {
            Coeffs::Small(c) => *c,
            Coeffs::Big(_) => unreachable!(),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        // bring both to the smaller exponent
        let (lo, hi) = if self.pow2 <= o.pow2 { (self, o) } else { (o, self) };
        let diff = hi.pow2.checked_sub(lo.pow2).ok_or(ScalarError::ExponentOverflow)?;
        let mut hc = hi.coeffs.clone();
        for _ in 0..diff {
            hc = hc.times_sqrt2();
        }
        let coeffs = match (&lo.coeffs, &hc) {
            (Coeffs::Small(x), Coeffs::Small(y)) => {
                from_i128([0, 1, 2, 3].map(|i| x[i] as i128 + y[i] as i128))
            }
            (a, b) => {
                let (a, b) = (a.as_big(), b.as_big());
                Coeffs::Big(Box::new([0, 1, 2, 3].map(|i| &a[i] + &b[i]))).demote()
            }
        };
        Ok(ScalarExact { coeffs, pow2: lo.pow2 }.normalized())
    }

    pub fn conj(&self) -> Self {
        // ω ↦ ω⁻¹ = −ω³, ω² ↦ −ω², ω³ ↦ −ω
        match &self.coeffs {
            Coeffs::Small([a, b, c, d]) => Self::new([*a, -*d, -*c, -*b], self.pow2),
            Coeffs::Big(bx) => {
                let [a, b, c, d] = &**bx;
                Self::from_big([a.clone(), -d, -c, -b], self.pow2)
            }
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let [a, b, c, d] = match &self.coeffs {
            Coeffs::Small(c) => c.map(|x| x as f64),
            Coeffs::Big(bx) => [0, 1, 2, 3].map(|i| bx[i].to_f64().unwrap_or(f64::NAN)),
        };
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let re = a + h * (b - d);
        let im = c + h * (b + d);
        Complex64::new(re, im) * 2f64.powf(self.pow2 as f64 / 2.0)
    }

    /// True when the imaginary part is identically zero.
    pub fn is_real(&self) -> bool {
        // imaginary part is c + (b + d)/√2, which vanishes iff c = 0 and b = −d
        match &self.coeffs {
            Coeffs::Small([_, b, c, d]) => *c == 0 && *b == -*d,
            Coeffs::Big(bx) => bx[2].is_zero() && bx[1] == -bx[3].clone(),
        }
    }
}

fn mul_big(x: &[BigInt; 4], y: &[BigInt; 4]) -> [BigInt; 4] {
    let mut r: [BigInt; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            let p = &x[i] * &y[j];
            let k = i + j;
            if k < 4 {
                r[k] += p;
            } else {
                r[k - 4] -= p;
            }
        }
    }
    r
}

impl Default for ScalarExact {
    fn default() -> Self {
        Self::zero()
    }
}

impl Mul for ScalarExact {
    type Output = ScalarExact;
    fn mul(self, o: Self) -> Self {
        self.try_mul(&o).expect("scalar exponent overflow")
    }
}

impl Mul<&ScalarExact> for &ScalarExact {
    type Output = ScalarExact;
    fn mul(self, o: &ScalarExact) -> ScalarExact {
        self.try_mul(o).expect("scalar exponent overflow")
    }
}

impl MulAssign<&ScalarExact> for ScalarExact {
    fn mul_assign(&mut self, o: &ScalarExact) {
        *self = self.try_mul(o).expect("scalar exponent overflow");
    }
}

impl MulAssign for ScalarExact {
    fn mul_assign(&mut self, o: ScalarExact) {
        *self *= &o;
    }
}

impl Add for ScalarExact {
    type Output = ScalarExact;
    fn add(self, o: Self) -> Self {
        self.try_add(&o).expect("scalar exponent overflow")
    }
}

impl Add<&ScalarExact> for &ScalarExact {
    type Output = ScalarExact;
    fn add(self, o: &ScalarExact) -> ScalarExact {
        self.try_add(o).expect("scalar exponent overflow")
    }
}

impl AddAssign<&ScalarExact> for ScalarExact {
    fn add_assign(&mut self, o: &ScalarExact) {
        *self = self.try_add(o).expect("scalar exponent overflow");
    }
}

impl AddAssign for ScalarExact {
    fn add_assign(&mut self, o: ScalarExact) {
        *self += &o;
    }
}

impl Neg for ScalarExact {
    type Output = ScalarExact;
    fn neg(self) -> Self {
        match self.coeffs {
            Coeffs::Small(c) => ScalarExact { coeffs: from_i128(c.map(|x| -(x as i128))), pow2: self.pow2 },
            Coeffs::Big(b) => {
                let [a, b2, c, d] = *b;
                ScalarExact { coeffs: Coeffs::Big(Box::new([-a, -b2, -c, -d])).demote(), pow2: self.pow2 }
            }
        }
    }
}

impl Sub for ScalarExact {
    type Output = ScalarExact;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Sub<&ScalarExact> for &ScalarExact {
    type Output = ScalarExact;
    fn sub(self, o: &ScalarExact) -> ScalarExact {
        self + &(-o.clone())
    }
}

impl std::iter::Sum for ScalarExact {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Display for ScalarExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coeffs.as_big();
        write!(f, "({} + {}·ω + {}·ω² + {}·ω³)·√2^{}", a, b, c, d, self.pow2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> ScalarExact {
        ScalarExact::new([0, 1, 0, 0], 0)
    }

    #[test]
    fn omega_fourth_power_is_minus_one() {
        let w4 = w() * w() * w() * w();
        assert_eq!(w4, ScalarExact::from_int(-1));
        assert_eq!(w() * ScalarExact::omega_pow(3), ScalarExact::from_int(-1));
    }

    #[test]
    fn sqrt2_folds() {
        let s = ScalarExact::sqrt2_pow(1);
        assert_eq!(&s * &s, ScalarExact::from_int(2));
        // ω − ω³ is √2
        assert_eq!(ScalarExact::new([0, 1, 0, -1], 0), s);
        let h = ScalarExact::sqrt2_pow(-1);
        assert_eq!(&h + &h, s);
    }

    #[test]
    fn half_of_one_plus_three_i() {
        let x = ScalarExact::new([1, 0, 3, 0], -2);
        assert_eq!(&x * &ScalarExact::from_int(2), ScalarExact::new([1, 0, 3, 0], 0));
        let y = ScalarExact::new([1, 0, -3, 0], -2);
        assert_eq!(&x + &y, ScalarExact::one());
        assert_eq!(&x + &ScalarExact::zero(), x);
    }

    #[test]
    fn canonical_zero() {
        let x = ScalarExact::new([3, 1, 0, 0], 5);
        let z = &x + &(-x.clone());
        assert!(z.is_zero());
        assert_eq!(z, ScalarExact::zero());
    }

    #[test]
    fn overflow_spills_to_bigint() {
        let x = ScalarExact::new([i64::MAX / 3, 7, 0, 1], 0);
        let y = &x * &x;
        assert!(y.is_big());
        let back = &y * &ScalarExact::one();
        assert_eq!(back, y);
        let r = y.to_complex();
        let e = x.to_complex() * x.to_complex();
        assert!(((r - e).norm() / e.norm()) < 1e-12);
        // shrinking again returns to the small representation
        let z = &y + &(-y.clone());
        assert!(!z.is_big());
    }

    #[test]
    fn conj_matches_complex() {
        let x = ScalarExact::new([1, -2, 3, 5], -3);
        let c = x.conj().to_complex();
        assert!((c - x.to_complex().conj()).norm() < 1e-12);
        assert!((&x * &x.conj()).is_real());
    }

    #[test]
    fn phases_on_grid() {
        for k in 0..8 {
            let p = Phase::new(k, 4);
            let s = ScalarExact::from_phase(p).unwrap();
            let z = Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / 4.0);
            assert!((s.to_complex() - z).norm() < 1e-12);
        }
        assert!(ScalarExact::from_phase(Phase::new(1, 3)).is_err());
    }
}
