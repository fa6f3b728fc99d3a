//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! The working field of the whole crate is either `Q` (the rationals) or
//! `Qi` (the Gaussian rationals, rationals adjoined a square root of -1).
//! Everything downstream is generic over [`Scalar`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always stored reduced with positive denominator.
pub type Rational = BigRational;

/// Exact field scalar, generic over the working field.
///
/// Implemented by [`Rational`] (the field `Q`) and [`GaussianRational`]
/// (the field `Qi`). All operations are exact; there is no floating point
/// anywhere in the crate.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    const FIELD_NAME: &'static str;

    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    /// The nontrivial field automorphism over `Q` (identity on `Q` itself).
    fn conj(&self) -> Self;

    /// Exact multiplicative inverse.
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::one() / self.clone())
    }

    /// Checked division.
    fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() / other.clone())
    }

    /// Rational part, if the scalar lies in `Q`.
    fn as_rational(&self) -> Option<Rational>;

    /// Embed a rational.
    fn from_rational(r: Rational) -> Self;

    /// Exact square root within the field, when one exists.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Deterministic ordering key, used for stable block and root ordering
    /// in reports. Sorting keys in descending order ranks scalars by
    /// ascending complex argument (1 before i before -1 before -i), with
    /// zero last and norm as the final tie-break.
    fn order_key(&self) -> (i8, Rational, Rational);

    /// Parse the canonical scalar grammar:
    /// `RAT := INT | INT "/" POSINT`,
    /// `SCALAR := RAT | RAT SIGN RAT "i" | RAT "i" | SIGN RAT "i"`.
    fn parse(s: &str) -> Result<Self>;

    /// Canonical text form, inverse of [`Scalar::parse`].
    fn render(&self) -> String;
}

fn parse_rat(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::ScalarParse(s.to_string(), msg.to_string());
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| bad("invalid integer numerator"))?;
    let den: BigInt = match den_s {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad("denominator must be a positive integer"));
            }
            d.parse().map_err(|_| bad("invalid denominator"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn render_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Split "a+bi" style text into (real part, imaginary part) source strings.
/// Returns (Some(re), Some(im_with_sign)) per the grammar.
fn split_scalar_text(s: &str) -> Result<(Option<&str>, Option<String>)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::ScalarParse(s.to_string(), "empty".into()));
    }
    // locate a sign separating the real and imaginary parts: not at
    // position 0 (that sign belongs to the leading RAT)
    let bytes = s.as_bytes();
    let mut sep = None;
    for (idx, &b) in bytes.iter().enumerate().skip(1) {
        if b == b'+' || b == b'-' {
            sep = Some(idx);
            break;
        }
    }
    match sep {
        Some(idx) => {
            let (re, rest) = (&s[..idx], &s[idx..]);
            let im = rest
                .strip_suffix('i')
                .ok_or_else(|| Error::ScalarParse(s.into(), "expected trailing 'i'".into()))?;
            Ok((Some(re), Some(im.to_string())))
        }
        None => {
            if let Some(im) = s.strip_suffix('i') {
                Ok((None, Some(im.to_string())))
            } else {
                Ok((Some(s), None))
            }
        }
    }
}

impl Scalar for Rational {
    const FIELD_NAME: &'static str = "Q";

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn sqrt_exact(&self) -> Option<Self> {
        sqrt_rational(self)
    }

    fn order_key(&self) -> (i8, Rational, Rational) {
        argument_key(self, &Rational::zero())
    }

    fn parse(s: &str) -> Result<Self> {
        let (re, im) = split_scalar_text(s)?;
        if im.is_some() {
            return Err(Error::ScalarParse(
                s.to_string(),
                "imaginary part not allowed over Q".into(),
            ));
        }
        parse_rat(re.unwrap())
    }

    fn render(&self) -> String {
        render_rat(self)
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn sqrt_rational(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// An element a + bi of the Gaussian rationals, components stored reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: <Rational as Scalar>::from_ratio(re_num, re_den),
            im: <Rational as Scalar>::from_ratio(im_num, im_den),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// Field norm a^2 + b^2 (a rational).
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        if n.is_zero() {
            panic!("division by zero GaussianRational");
        }
        let conj = rhs.conj();
        let prod = self * conj;
        GaussianRational {
            re: prod.re / n.clone(),
            im: prod.im / n,
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Scalar for GaussianRational {
    const FIELD_NAME: &'static str = "Qi";

    fn from_int(n: i64) -> Self {
        GaussianRational {
            re: <Rational as Scalar>::from_int(n),
            im: BigRational::zero(),
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: <Rational as Scalar>::from_ratio(num, den),
            im: BigRational::zero(),
        }
    }

    fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.im.is_zero() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    fn from_rational(r: Rational) -> Self {
        GaussianRational {
            re: r,
            im: BigRational::zero(),
        }
    }

    /// Square root in Q(i): solve (x + yi)^2 = a + bi exactly.
    fn sqrt_exact(&self) -> Option<Self> {
        let a = &self.re;
        let b = &self.im;
        if b.is_zero() {
            if let Some(r) = sqrt_rational(a) {
                return Some(GaussianRational::from_rational(r));
            }
            // sqrt of a negative rational square lands on the imaginary axis
            return sqrt_rational(&-a.clone()).map(|r| GaussianRational {
                re: BigRational::zero(),
                im: r,
            });
        }
        // x^2 - y^2 = a, 2xy = b. Then x^2 = (a + n)/2 with n = sqrt(a^2 + b^2).
        let n = sqrt_rational(&self.norm())?;
        let two = <Rational as Scalar>::from_int(2);
        let x2 = (a + &n) / &two;
        let x = sqrt_rational(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = b / &(&two * &x);
        let cand = GaussianRational { re: x, im: y };
        if cand.clone() * cand.clone() == *self {
            Some(cand)
        } else {
            None
        }
    }

    fn order_key(&self) -> (i8, Rational, Rational) {
        argument_key(&self.re, &self.im)
    }

    fn parse(s: &str) -> Result<Self> {
        let (re, im) = split_scalar_text(s)?;
        let re_r = match re {
            Some(r) => parse_rat(r)?,
            None => BigRational::zero(),
        };
        let im_r = match im {
            Some(t) => {
                let t = t.strip_prefix('+').unwrap_or(&t);
                parse_rat(t)?
            }
            None => BigRational::zero(),
        };
        Ok(GaussianRational { re: re_r, im: im_r })
    }

    fn render(&self) -> String {
        if self.im.is_zero() {
            return render_rat(&self.re);
        }
        if self.re.is_zero() {
            return format!("{}i", render_rat(&self.im));
        }
        if self.im.is_negative() {
            format!("{}-{}i", render_rat(&self.re), render_rat(&-self.im.clone()))
        } else {
            format!("{}+{}i", render_rat(&self.re), render_rat(&self.im))
        }
    }
}

/// Exact integer square root of a nonnegative integer given as usize.
/// Ordering key for a complex number re + im*i such that sorting keys in
/// descending order ranks values by ascending argument: positive reals
/// first, then the open first quadrant, the positive imaginary axis, and so
/// on counterclockwise, with zero strictly last. Within one sector the
/// argument grows with im/re, so -im/re is the second component; the norm
/// breaks remaining ties (larger first).
fn argument_key(re: &Rational, im: &Rational) -> (i8, Rational, Rational) {
    use std::cmp::Ordering;
    let sector: i8 = match (re.cmp(&Rational::zero()), im.cmp(&Rational::zero())) {
        (Ordering::Greater, Ordering::Equal) => 0,
        (Ordering::Greater, Ordering::Greater) => -1,
        (Ordering::Equal, Ordering::Greater) => -2,
        (Ordering::Less, Ordering::Greater) => -3,
        (Ordering::Less, Ordering::Equal) => -4,
        (Ordering::Less, Ordering::Less) => -5,
        (Ordering::Equal, Ordering::Less) => -6,
        (Ordering::Greater, Ordering::Less) => -7,
        (Ordering::Equal, Ordering::Equal) => -9,
    };
    let slope = if re.is_zero() || im.is_zero() {
        Rational::zero()
    } else {
        -(im / re)
    };
    let norm = re * re + im * im;
    (sector, slope, norm)
}

pub fn isqrt_exact(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    for cand in r.saturating_sub(2)..=r + 2 {
        if cand * cand == n {
            return Some(cand);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        // (1/2) + (1/2) = 1
        assert_eq!(gr("1/2") + gr("1/2"), GaussianRational::one());
        // i * i = -1
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            GaussianRational::from_int(-1)
        );
        // (1 + i) / (1 - i) = i, verified by back-multiplication
        let q = gr("1+1i") / gr("1-1i");
        assert_eq!(q, GaussianRational::i());
        assert_eq!(q * gr("1-1i"), gr("1+1i"));
    }

    #[test]
    fn conjugation() {
        assert_eq!(gr("1+2i").conj(), gr("1-2i"));
        assert_eq!(gr("3").conj(), gr("3"));
        let a = gr("1+1i");
        let b = gr("2-1i");
        assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        assert_eq!(gr("1+2i").conj().conj(), gr("1+2i"));
    }

    #[test]
    fn parse_render_grammar() {
        for s in ["1/2", "-3", "1/2+1/2i", "-1i", "0", "2/3-4/5i", "1i"] {
            let v = gr(s);
            assert_eq!(v.render(), s, "canonical form round-trip");
        }
        assert!(GaussianRational::parse("1.5").is_err());
        assert!(GaussianRational::parse("1/-2").is_err());
        assert!(GaussianRational::parse("").is_err());
        assert!(Rational::parse("1+1i").is_err());
        assert_eq!(Rational::parse("-7/3").unwrap(), Scalar::from_ratio(-7, 3));
    }

    #[test]
    fn gaussian_sqrt() {
        // sqrt(-1) = i
        assert_eq!(gr("-1").sqrt_exact(), Some(GaussianRational::i()));
        // sqrt(2i) = 1 + i
        assert_eq!(gr("2i").sqrt_exact(), Some(gr("1+1i")));
        // sqrt(2) does not exist in Q(i)
        assert_eq!(gr("2").sqrt_exact(), None);
        // sqrt(-4) = 2i
        assert_eq!(gr("-4").sqrt_exact(), Some(gr("2i")));
        // sqrt(-9/4) over Q fails, over Q(i) gives 3/2 i
        assert_eq!(Scalar::sqrt_exact(&<Rational as Scalar>::from_int(2)), None);
        assert_eq!(gr("-9/4").sqrt_exact(), Some(gr("3/2i")));
    }
}
