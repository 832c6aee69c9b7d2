//! Exact arithmetic in the ring **Z**[ζ8][1/√2], where ζ8 = exp(iπ/4).
//!
//! Every scalar that appears in the error-group representations and in the
//! braid matrices (±1, ±i, e^{±iπ/4}, 1/√2 and their sums and products) lives
//! in this ring, so equality checks are structural and never need a
//! tolerance.
//!
//! An element is stored as `num / (√2)^e` with `num` in **Z**[ζ8] written in
//! the integral basis {1, ζ8, ζ8², ζ8³}. Canonical form divides `num` by
//! √2 = ζ8 − ζ8³ while that stays integral and `e > 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

const OVERFLOW: &str = "cyclotomic coefficient overflow";

fn ck_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect(OVERFLOW)
}

fn ck_sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect(OVERFLOW)
}

fn ck_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect(OVERFLOW)
}

fn ck_neg(a: i64) -> i64 {
    a.checked_neg().expect(OVERFLOW)
}

/// Element of **Z**[ζ8]: `c[0] + c[1]·ζ8 + c[2]·ζ8² + c[3]·ζ8³`.
///
/// The reduction ζ8⁴ = −1 is always applied, so four coefficients describe
/// every element uniquely.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt(pub [i64; 4]);

impl CycInt {
    pub const ZERO: CycInt = CycInt([0, 0, 0, 0]);
    pub const ONE: CycInt = CycInt([1, 0, 0, 0]);
    /// √2 = ζ8 − ζ8³.
    pub const SQRT2: CycInt = CycInt([0, 1, 0, -1]);

    pub fn from_int(n: i64) -> Self {
        CycInt([n, 0, 0, 0])
    }

    /// ζ8^p for any integer exponent.
    pub fn zeta(p: i64) -> Self {
        let p = p.rem_euclid(8) as usize;
        let mut c = [0; 4];
        if p < 4 {
            c[p] = 1;
        } else {
            c[p - 4] = -1;
        }
        CycInt(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// The integer value if this element is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let [c0, c1, c2, c3] = self.0;
        (c1 == 0 && c2 == 0 && c3 == 0).then_some(c0)
    }

    /// Galois automorphism ζ8 ↦ ζ8^j for odd `j`.
    pub fn galois(&self, j: i64) -> Self {
        debug_assert!(j.rem_euclid(2) == 1, "galois exponent must be odd");
        let mut out = [0i64; 4];
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let target = (i as i64 * j).rem_euclid(8) as usize;
            if target < 4 {
                out[target] = ck_add(out[target], c);
            } else {
                out[target - 4] = ck_sub(out[target - 4], c);
            }
        }
        CycInt(out)
    }

    /// Complex conjugation, ζ8 ↦ ζ8⁻¹ = −ζ8³.
    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = self.0;
        CycInt([c0, ck_neg(c3), ck_neg(c2), ck_neg(c1)])
    }

    /// Product of the three non-identity Galois conjugates, so that
    /// `x * x.adjugate()` is the (rational, non-negative) field norm.
    pub fn adjugate(&self) -> Self {
        self.galois(3) * self.galois(5) * self.galois(7)
    }

    pub fn norm(&self) -> i64 {
        (*self * self.adjugate())
            .as_integer()
            .expect("field norm of a cyclotomic integer is rational")
    }

    pub fn times_sqrt2(&self) -> Self {
        let [c0, c1, c2, c3] = self.0;
        CycInt([
            ck_sub(c1, c3),
            ck_add(c0, c2),
            ck_add(c1, c3),
            ck_sub(c2, c0),
        ])
    }

    /// `self / √2` when the quotient is integral.
    pub fn div_sqrt2(&self) -> Option<Self> {
        let doubled = self.times_sqrt2();
        doubled
            .0
            .iter()
            .all(|c| c % 2 == 0)
            .then(|| CycInt(doubled.0.map(|c| c / 2)))
    }

    fn scale(&self, k: i64) -> Self {
        CycInt(self.0.map(|c| ck_mul(c, k)))
    }

    fn div_exact(&self, k: i64) -> Option<Self> {
        self.0
            .iter()
            .all(|c| c % k == 0)
            .then(|| CycInt(self.0.map(|c| c / k)))
    }

    fn times_sqrt2_pow(&self, d: u32) -> Self {
        let mut out = self.scale(1i64.checked_shl(d / 2).filter(|v| *v > 0).expect(OVERFLOW));
        if d % 2 == 1 {
            out = out.times_sqrt2();
        }
        out
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(self, rhs: CycInt) -> CycInt {
        let mut c = [0; 4];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = ck_add(self.0[i], rhs.0[i]);
        }
        CycInt(c)
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        self + (-rhs)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt(self.0.map(ck_neg))
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        let mut r = [0i64; 4];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let p = ck_mul(a, b);
                if i + j < 4 {
                    r[i + j] = ck_add(r[i + j], p);
                } else {
                    r[i + j - 4] = ck_sub(r[i + j - 4], p);
                }
            }
        }
        CycInt(r)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}·")?;
                    }
                    if i == 1 {
                        f.write_str("ζ8")?;
                    } else {
                        write!(f, "ζ8^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact scalar `num / (√2)^e`, always in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    num: CycInt,
    e: u32,
}

impl Default for CycScalar {
    fn default() -> Self {
        CycScalar::zero()
    }
}

impl CycScalar {
    pub fn new(num: CycInt, e: u32) -> Self {
        let mut s = CycScalar { num, e };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.e = 0;
            return;
        }
        while self.e > 0 {
            match self.num.div_sqrt2() {
                Some(q) => {
                    self.num = q;
                    self.e -= 1;
                }
                None => break,
            }
        }
    }

    pub fn num(&self) -> CycInt {
        self.num
    }

    /// Exponent of the √2 denominator.
    pub fn sqrt2_exponent(&self) -> u32 {
        self.e
    }

    pub fn zero() -> Self {
        CycScalar { num: CycInt::ZERO, e: 0 }
    }

    pub fn one() -> Self {
        CycScalar { num: CycInt::ONE, e: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        CycScalar { num: CycInt::from_int(n), e: 0 }
    }

    pub fn zeta(p: i64) -> Self {
        CycScalar { num: CycInt::zeta(p), e: 0 }
    }

    /// The imaginary unit, ζ8².
    pub fn i() -> Self {
        Self::zeta(2)
    }

    pub fn sqrt2() -> Self {
        CycScalar { num: CycInt::SQRT2, e: 0 }
    }

    pub fn inv_sqrt2() -> Self {
        CycScalar { num: CycInt::ONE, e: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn conj(&self) -> Self {
        CycScalar { num: self.num.conj(), e: self.e }
    }

    /// `|z|²` as an element of the ring.
    pub fn abs2(&self) -> Self {
        *self * self.conj()
    }

    pub fn is_unit_modulus(&self) -> bool {
        self.abs2().is_one()
    }

    /// The exponent `p ∈ 0..8` with `self = ζ8^p`, if there is one.
    pub fn zeta_exponent(&self) -> Option<u8> {
        if self.e != 0 {
            return None;
        }
        (0..8u8).find(|&p| self.num == CycInt::zeta(p as i64))
    }

    /// Exact quotient `self / d`, or `None` when `d` is zero or the quotient
    /// leaves the ring.
    pub fn checked_div(&self, d: &CycScalar) -> Option<CycScalar> {
        if d.is_zero() {
            return None;
        }
        let mut norm = d.num.norm();
        debug_assert!(norm > 0);
        let mut twos = 0u32;
        while norm % 2 == 0 {
            norm /= 2;
            twos += 1;
        }
        let r = (self.num * d.num.adjugate()).div_exact(norm)?;
        // self / d = r * √2^(d.e - self.e - 2·twos)
        let denom = self.e as i64 + 2 * twos as i64 - d.e as i64;
        if denom >= 0 {
            Some(CycScalar::new(r, denom as u32))
        } else {
            Some(CycScalar::new(r.times_sqrt2_pow((-denom) as u32), 0))
        }
    }

    /// Numeric value as `(re, im)`; display helper only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let [c0, c1, c2, c3] = self.num.0.map(|c| c as f64);
        let re = c0 + h * c1 - h * c3;
        let im = h * c1 + c2 + h * c3;
        let scale = std::f64::consts::SQRT_2.powi(self.e as i32);
        (re / scale, im / scale)
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: CycScalar) -> CycScalar {
        let e = self.e.max(rhs.e);
        let a = self.num.times_sqrt2_pow(e - self.e);
        let b = rhs.num.times_sqrt2_pow(e - rhs.e);
        CycScalar::new(a + b, e)
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: CycScalar) -> CycScalar {
        self + (-rhs)
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { num: -self.num, e: self.e }
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        CycScalar::new(self.num * rhs.num, self.e.checked_add(rhs.e).expect(OVERFLOW))
    }
}

impl std::iter::Sum for CycScalar {
    fn sum<I: Iterator<Item = CycScalar>>(iter: I) -> Self {
        iter.fold(CycScalar::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 0 {
            return write!(f, "{}", self.num);
        }
        let terms = self.num.0.iter().filter(|c| **c != 0).count();
        if terms == 1 {
            write!(f, "{} / sqrt2^{}", self.num, self.e)
        } else {
            write!(f, "({}) / sqrt2^{}", self.num, self.e)
        }
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
