//! Exact complex numbers with rational real and imaginary parts.
//!
//! Ordering is lexicographic (real part first, then imaginary part). This is
//! the total, additive order used to define dominant parameters.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An element of `Q(i)`.
///
/// The derived ordering compares `re` first and `im` second, which is exactly
/// the lexicographic order on complex numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den + (inum/iden) i`. Panics on a zero denominator.
    pub fn from_ratios(num: i64, den: i64, inum: i64, iden: i64) -> Self {
        Self::new(
            BigRational::new(num.into(), den.into()),
            BigRational::new(inum.into(), iden.into()),
        )
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `self * k` for an integer `k`.
    pub fn scale(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        Self::new(&self.re * &k, &self.im * &k)
    }

    /// Nonnegative in the lexicographic order.
    pub fn is_nonnegative(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && !self.im.is_negative())
    }

    /// Strictly negative in the lexicographic order.
    pub fn is_negative(&self) -> bool {
        !self.is_nonnegative()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self::new(&self.re / &norm, -(&self.im / &norm)))
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        &self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// `a/b`, `c/di`, or `a/b+c/di`; unit imaginary coefficients print as `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let imag = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{imag}")
        } else if imag.starts_with('-') {
            write!(f, "{}{}", fmt_rational(&self.re), imag)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.re), imag)
        }
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("malformed Gaussian rational {whole:?}"));
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) if d.bytes().all(|b| b.is_ascii_digit()) && !d.is_empty() => {
            d.parse().map_err(|_| bad())?
        }
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {whole:?}")));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `a/b`, `a/b+c/d i`, `c/d i` and integer shorthands, with
    /// optional signs and whitespace.
    fn from_str(input: &str) -> Result<Self, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::from_real(parse_rational(&s, input)?));
        };
        // split before the last sign that is not in leading position
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part, input)?
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t, input)?,
        };
        Ok(Self::new(re, im))
    }
}

/// Exact dot product of an integer vector with a parameter vector.
pub fn dot(coords: &[i64], tau: &[GaussianRational]) -> GaussianRational {
    assert_eq!(coords.len(), tau.len(), "dot product length mismatch");
    let mut re = BigRational::zero();
    let mut im = BigRational::zero();
    for (&c, t) in coords.iter().zip(tau) {
        if c == 0 {
            continue;
        }
        let k = BigRational::from_integer(BigInt::from(c));
        re += &t.re * &k;
        im += &t.im * &k;
    }
    GaussianRational::new(re, im)
}

/// Parses a comma-separated list of Gaussian rationals.
pub fn parse_csv(s: &str) -> Result<Vec<GaussianRational>, Error> {
    s.split(',').map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_all_documented_forms() {
        assert_eq!(g("1/2"), GaussianRational::from_ratios(1, 2, 0, 1));
        assert_eq!(g("1/2+1/3 i"), GaussianRational::from_ratios(1, 2, 1, 3));
        assert_eq!(g("1/2+1/3i"), GaussianRational::from_ratios(1, 2, 1, 3));
        assert_eq!(g("-1/2-1/3 i"), GaussianRational::from_ratios(-1, 2, -1, 3));
        assert_eq!(g("2/3 i"), GaussianRational::from_ratios(0, 1, 2, 3));
        assert_eq!(g("-2/3i"), GaussianRational::from_ratios(0, 1, -2, 3));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("3-i"), GaussianRational::from_ratios(3, 1, -1, 1));
        assert_eq!(g("+4"), GaussianRational::from_int(4));
        assert_eq!(g(" 2 / 4 "), GaussianRational::from_ratios(1, 2, 0, 1));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "abc", "1/0", "1//2", "1/2/3", "1+", "i i", "1.5", "--1", "1/-2", "2j"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-3", "1/2", "1/2+1/3i", "1/2-1/3i", "i", "-i", "5/7i", "-2+i"] {
            assert_eq!(g(s).to_string(), s);
            assert_eq!(g(&g(s).to_string()), g(s));
        }
    }

    #[test]
    fn lex_order() {
        assert!(g("1") > g("1/2+100i"));
        assert!(g("1/2+1i") > g("1/2"));
        assert!(g("-i").is_negative());
        assert!(g("0").is_nonnegative());
        assert!(g("i").is_nonnegative());
        assert!(g("-1+5i").is_negative());
    }

    #[test]
    fn field_arithmetic() {
        let z = g("1/2+1/3i");
        let w = g("-2+i");
        assert_eq!(&z * &w, g("-4/3-1/6i"));
        assert_eq!((z.clone() / w.clone()) * w, z);
        assert_eq!(&z * &z.conj(), g("13/36"));
        assert!(GaussianRational::zero().inv().is_none());
    }
}
