//! Exact elements of the quadratic field ℚ(√2).
//!
//! Every coefficient in the crate is a [`Scalar`] `a + b·√2` with `a` and `b`
//! arbitrary-precision rationals, so the factors `1/√2` carried by the
//! orthonormal basis never force an approximation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// `rat + sqrt2 · √2`, both parts rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    rat: BigRational,
    sqrt2: BigRational,
}

impl Scalar {
    pub fn new(rat: BigRational, sqrt2: BigRational) -> Self {
        Scalar { rat, sqrt2 }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(k)), BigRational::zero())
    }

    /// `p/q`. Panics when `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero())
    }

    /// √2 itself.
    pub fn sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::new(1.into(), 2.into()))
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.sqrt2
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt2.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.sqrt2.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt2.is_zero()
    }

    /// Field norm `a² − 2b²`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(2.into()) * &self.sqrt2 * &self.sqrt2
    }

    /// Galois conjugate `a − b√2`.
    pub fn galois_conjugate(&self) -> Scalar {
        Scalar::new(self.rat.clone(), -self.sqrt2.clone())
    }

    pub fn inv(&self) -> Option<Scalar> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        Some(Scalar::new(&self.rat / &norm, -(&self.sqrt2 / &norm)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        let inv = rhs.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Sign of the real number `a + b√2`: -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.sqrt2);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: |a| vs √2|b|
        let a2 = &self.rat * &self.rat;
        let b2 = BigRational::from_integer(2.into()) * &self.sqrt2 * &self.sqrt2;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiply by a machine integer; the blade tables store integer structure constants.
    pub fn mul_int(&self, k: i64) -> Scalar {
        match k {
            0 => Scalar::zero(),
            1 => self.clone(),
            -1 => -self,
            _ => {
                let k = BigRational::from_integer(BigInt::from(k));
                Scalar::new(&self.rat * &k, &self.sqrt2 * &k)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(-1)^k`.
    pub fn sign(k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        }
    }

    /// Parses the `rat` / `rat_r2` string pair used by the JSON forms.
    pub fn from_parts_str(rat: &str, sqrt2: &str) -> Result<Scalar, AlgebraError> {
        Ok(Scalar::new(parse_rational(rat)?, parse_rational(sqrt2)?))
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::BadScalar(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// `p/q`, or just `p` for integers.
pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: `p/q`, `r/s r2`, or `p/q+r/s r2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt2.is_zero() {
            return write!(f, "{}", fmt_rational(&self.rat));
        }
        let r2 = if self.sqrt2.is_one() {
            "r2".to_string()
        } else if (-self.sqrt2.clone()).is_one() {
            "-r2".to_string()
        } else {
            format!("{} r2", fmt_rational(&self.sqrt2))
        };
        if self.rat.is_zero() {
            write!(f, "{r2}")
        } else if r2.starts_with('-') {
            write!(f, "{}{}", fmt_rational(&self.rat), r2)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.rat), r2)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    /// Accepts plain rationals; the `r2` forms go through the expression parser.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Scalar::from_rational(parse_rational(s)?))
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::from_int(k)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rat.clone(), -self.sqrt2.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rat, -self.sqrt2)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rat + &rhs.rat, &self.sqrt2 + &rhs.sqrt2)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rat - &rhs.rat, &self.sqrt2 - &rhs.sqrt2)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.sqrt2.is_zero() && rhs.sqrt2.is_zero() {
            return Scalar::new(&self.rat * &rhs.rat, BigRational::zero());
        }
        let two = BigRational::from_integer(2.into());
        Scalar::new(
            &self.rat * &rhs.rat + two * &self.sqrt2 * &rhs.sqrt2,
            &self.rat * &rhs.sqrt2 + &self.sqrt2 * &rhs.rat,
        )
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero in Q(sqrt2)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.rat += &rhs.rat;
        if !rhs.sqrt2.is_zero() {
            self.sqrt2 += &rhs.sqrt2;
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.rat -= &rhs.rat;
        if !rhs.sqrt2.is_zero() {
            self.sqrt2 -= &rhs.sqrt2;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
