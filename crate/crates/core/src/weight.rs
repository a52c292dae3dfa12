//! Exact rational edge weights.
//!
//! Most weights seen in practice are small integers, so [`Weight`] keeps an
//! inline `i64` fraction and only promotes to an arbitrary-precision
//! [`BigRational`] when a result no longer fits. Both representations are
//! canonical (reduced, positive denominator) and a value is stored inline
//! whenever it fits, so derived equality and hashing are exact.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Clone)]
enum Repr {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

/// An exact rational number.
#[derive(Clone)]
pub struct Weight(Repr);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid weight literal `{0}`")]
pub struct ParseWeightError(pub String);

impl Weight {
    pub fn zero() -> Self {
        Weight(Repr::Small { num: 0, den: 1 })
    }

    pub fn from_int(v: i64) -> Self {
        Weight(Repr::Small { num: v, den: 1 })
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduces and fixes the sign.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Weight(Repr::Small { num, den }),
            _ => Weight(Repr::Big(Box::new(r))),
        }
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Weight(Repr::Small { num, den }),
            _ => Weight(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(num), BigInt::from(den))))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::zero()
    }
}

impl From<i64> for Weight {
    fn from(v: i64) -> Self {
        Weight::from_int(v)
    }
}

impl From<i32> for Weight {
    fn from(v: i32) -> Self {
        Weight::from_int(v as i64)
    }
}

impl From<BigRational> for Weight {
    fn from(r: BigRational) -> Self {
        Weight::from_big(r)
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Weight {}

impl Hash for Weight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => a.cmp(c),
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_add(*c) {
                Some(s) => Weight::from_int(s),
                None => Weight::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Weight::from_i128(a + c, b)
                } else {
                    Weight::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Weight::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Add<&Weight> for Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        &self + rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        *self = &*self + rhs;
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Weight(Repr::Small { num: n, den: *den }),
                None => Weight::from_i128(-(*num as i128), *den as i128),
            },
            Repr::Big(r) => Weight::from_big(-(**r).clone()),
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |acc, w| acc + w)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |acc, w| acc + &w)
    }
}

/// Canonical rendering: an integer when the denominator is 1, else `p/q`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Accepts integers (`-2`), decimals (`0.5`, `-.25`, `3.`) and fractions (`-3/2`).
impl FromStr for Weight {
    type Err = ParseWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseWeightError(s.to_string());
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p = parse_int(p).ok_or_else(err)?;
            let q = q.strip_prefix('+').unwrap_or(q);
            let q = parse_int(q).ok_or_else(err)?;
            if q.is_zero() || q.is_negative() {
                return Err(err());
            }
            return Ok(Weight::from_big(BigRational::new(p, q)));
        }
        if let Some((int_part, frac)) = t.split_once('.') {
            let (negative, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            if int_digits.is_empty() && frac.is_empty() {
                return Err(err());
            }
            let all_digits = |x: &str| x.bytes().all(|b| b.is_ascii_digit());
            if !all_digits(int_digits) || !all_digits(frac) {
                return Err(err());
            }
            let mut numer: BigInt = format!("0{int_digits}{frac}").parse().map_err(|_| err())?;
            if negative {
                numer = -numer;
            }
            let denom = num_traits::pow(BigInt::from(10u8), frac.len());
            return Ok(Weight::from_big(BigRational::new(numer, denom)));
        }
        let v = parse_int(t).ok_or_else(err)?;
        Ok(Weight::from_big(BigRational::new(v, BigInt::one())))
    }
}
