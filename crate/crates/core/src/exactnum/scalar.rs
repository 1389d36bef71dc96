use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Reduced arbitrary-precision rational. `Ratio` keeps `gcd(num, den) = 1`,
/// `den > 0`, and zero as `0/1`.
pub type Rational = BigRational;

/// An element of the Gaussian rationals ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar { re: Rational::zero(), im: Rational::zero() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: Rational::from_integer(BigInt::from(n)), im: Rational::zero() }
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar { re: Rational::new(num.into(), den.into()), im: Rational::zero() }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² = re² + im², always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar { re: self.re.recip(), im: Rational::zero() });
        }
        let n = self.norm_sqr();
        Some(Scalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    /// Square root inside ℚ(i), when one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.im.is_zero() {
            if let Some(r) = rational_sqrt(&self.re.abs()) {
                return Some(if self.re.is_negative() {
                    Scalar { re: Rational::zero(), im: r }
                } else {
                    Scalar { re: r, im: Rational::zero() }
                });
            }
            return None;
        }
        // (x + iy)² = re + i·im  ⇒  x² = (re + |z|)/2, y = im / 2x.
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let two = Rational::from_integer(2.into());
        let x = rational_sqrt(&((&self.re + &modulus) / &two))?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&two * &x);
        Some(Scalar { re: x, im: y })
    }

    /// Reference value when both parts are integers (used for norms in
    /// root searches).
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar { re: r, im: Rational::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar { re: &self.re * &rhs.re, im: Rational::zero() };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the integer types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
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
        if rhs.is_zero() {
            return;
        }
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text: `re`, `im i`, or `re±im i`, with unit imaginary parts
/// still written out (`1/2+1i`) so the grammar stays unambiguous.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", fmt_rational(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) {
        return Err(format!("bad integer `{num}`"));
    }
    let mut n: BigInt = num.parse().map_err(|_| format!("bad integer `{num}`"))?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| format!("bad denominator `{d}`"))?,
        Some(d) => return Err(format!("bad denominator `{d}`")),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    /// `scalar := rat | rat sign rat "i" | rat "i"`, `rat := ["-"] int ["/" posint]`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let s = text.trim();
        let bad = |msg: String| Error::ScalarSyntax { text: text.to_string(), msg };
        if s.is_empty() {
            return Err(bad("empty scalar".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::from(parse_rational(s).map_err(bad)?));
        };
        // The sign separating the two parts is the last '+'/'-' that is not
        // the leading sign of the whole string.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            None => Ok(Scalar { re: Rational::zero(), im: parse_rational(body).map_err(bad)? }),
            Some(k) => {
                let re = parse_rational(&body[..k]).map_err(bad)?;
                let im_text = &body[k + 1..];
                if im_text.starts_with('-') || im_text.starts_with('+') {
                    return Err(bad("doubled sign".into()));
                }
                let mut im = parse_rational(im_text).map_err(bad)?;
                if body.as_bytes()[k] == b'-' {
                    im = -im;
                }
                Ok(Scalar { re, im })
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn parses_grammar_examples() {
        assert_eq!(s("1"), Scalar::one());
        assert_eq!(s("-3/2"), Scalar::from_frac(-3, 2));
        let z = s("1/2+1/3i");
        assert_eq!(z.re, Rational::new(1.into(), 2.into()));
        assert_eq!(z.im, Rational::new(1.into(), 3.into()));
        assert_eq!(s("2i"), Scalar::gaussian(0, 2));
        assert_eq!(s("-1-1i"), Scalar::gaussian(-1, -1));
        assert_eq!(s("-1/2i"), Scalar::new(Rational::zero(), Rational::new((-1).into(), 2.into())));
    }

    #[test]
    fn parsing_reduces_to_canonical_form() {
        assert_eq!(s("4/6").to_string(), "2/3");
        assert_eq!(s("0/5+2/4i").to_string(), "1/2i");
        assert_eq!(s("-0").to_string(), "0");
        assert_eq!(s("3-6/4i").to_string(), "3-3/2i");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "i", "1/0", "a", "1+", "1+-2i", "1/-2", "--1", "1.5", "2ii"] {
            assert!(bad.parse::<Scalar>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn inverse_and_sqrt() {
        let z = Scalar::gaussian(3, 4);
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
        assert_eq!(Scalar::gaussian(-3, 4).sqrt().map(|w| &w * &w), Some(Scalar::gaussian(-3, 4)));
        assert_eq!(Scalar::from_int(-4).sqrt(), Some(Scalar::gaussian(0, 2)));
        assert_eq!(Scalar::from_int(2).sqrt(), None);
        assert_eq!(Scalar::gaussian(0, 2).sqrt(), Some(Scalar::gaussian(1, 1)));
        assert!(Scalar::zero().inv().is_none());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (arb_rational(), arb_rational()).prop_map(|(re, im)| Scalar::new(re, im))
    }

    proptest! {
        #[test]
        fn add_then_sub_is_exact(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn display_parse_roundtrip(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn sqrt_of_square(a in arb_scalar()) {
            let sq = &a * &a;
            let r = sq.sqrt().expect("square must have a root");
            prop_assert_eq!(&r * &r, sq);
        }
    }
}
