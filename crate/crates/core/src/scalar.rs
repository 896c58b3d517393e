//! Exact scalars: rational combinations of square roots of square-free
//! integers, and their Gaussian extension by a formal `i`.
//!
//! Every irrational number in the pipeline comes from normalizing a Weyl
//! basis or a metric frame, so `Q(sqrt 2, sqrt 3, ...)` suffices and
//! equality stays structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Splits `x = s^2 * f` with `f` square-free.
fn square_free_split(mut x: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= x {
        let mut e = 0;
        while x % p == 0 {
            x /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * x)
}

/// `sum q_m * sqrt(m)` over square-free `m >= 1`, kept sorted by radicand
/// with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    terms: Vec<(u64, Rational)>,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(q, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `q * sqrt(radicand)`; the radicand is reduced to square-free form.
    pub fn term(q: Rational, radicand: u64) -> Self {
        assert!(radicand >= 1, "radicand must be positive");
        if q.is_zero() {
            return Self::zero();
        }
        let (s, f) = square_free_split(radicand);
        Self {
            terms: vec![(f, q * int(s as i64))],
        }
    }

    /// Exact square root of a positive rational, as `s/den * sqrt(f)`.
    pub fn sqrt_rational(q: &Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NonPositiveSqrt(q.to_string()));
        }
        let prod = q.numer() * q.denom();
        let x = prod
            .to_u64()
            .ok_or_else(|| Error::RadicandOverflow(prod.to_string()))?;
        let (s, f) = square_free_split(x);
        Ok(Self {
            terms: vec![(f, Rational::new(BigInt::from(s), q.denom().clone()))],
        })
    }

    fn from_unsorted(mut terms: Vec<(u64, Rational)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(u64, Rational)> = Vec::with_capacity(terms.len());
        for (m, q) in terms {
            match out.last_mut() {
                Some((lm, lq)) if *lm == m => *lq += q,
                _ => out.push((m, q)),
            }
        }
        out.retain(|(_, q)| !q.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    /// The rational value, if there is no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// `(q, m)` when the value is the single term `q * sqrt(m)`.
    pub fn single_term(&self) -> Option<(&Rational, u64)> {
        match self.terms.as_slice() {
            [(m, q)] => Some((q, *m)),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    /// Inverse of a single-term scalar: `1/(q sqrt m) = sqrt(m) / (q m)`.
    pub fn inv(&self) -> Result<Self> {
        match self.terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(m, q)] => Ok(Self {
                terms: vec![(*m, (q * int(*m as i64)).recip())],
            }),
            _ => Err(Error::NonMonomialDivisor(self.to_string())),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Approximate decimal value; display only.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(m, q)| q.to_f64().unwrap_or(f64::NAN) * (*m as f64).sqrt())
            .sum()
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

fn add_terms(a: &[(u64, Rational)], b: &[(u64, Rational)], negate_b: bool) -> ExactScalar {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let flip = |q: &Rational| if negate_b { -q } else { q.clone() };
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, flip(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let q = &a[i].1 + flip(&b[j].1);
                if !q.is_zero() {
                    out.push((a[i].0, q));
                }
                i += 1;
                j += 1;
            }
        }
    }
    ExactScalar { terms: out }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        add_terms(&self.terms, &rhs.terms, false)
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        add_terms(&self.terms, &rhs.terms, true)
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.is_zero() || rhs.is_zero() {
            return ExactScalar::zero();
        }
        // sqrt(a) sqrt(b) = g sqrt(a/g * b/g), square-free when a, b are.
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                let g = a.gcd(b);
                let rad = (a / g)
                    .checked_mul(b / g)
                    .expect("radicand product overflows u64");
                let mut c = p * q;
                if g != 1 {
                    c *= int(g as i64);
                }
                out.push((rad, c));
            }
        }
        if out.len() == 1 {
            return ExactScalar { terms: out };
        }
        ExactScalar::from_unsorted(out)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(mut self) -> ExactScalar {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(ExactScalar, Add add, Sub sub, Mul mul);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            if k == 0 {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else if q.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (*m, mag.is_one()) {
                (1, _) => write!(f, "{mag}")?,
                (m, true) => write!(f, "sqrt({m})")?,
                (m, false) => write!(f, "{mag}*sqrt({m})")?,
            }
        }
        Ok(())
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) format: terms `q`, `sqrt(m)`
    /// or `q*sqrt(m)` joined by `+` / `-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, c) in compact.chars().enumerate() {
            if (c == '+' || c == '-') && i > 0 {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = c == '-';
            } else if c == '-' {
                neg = true;
            } else if c != '+' {
                cur.push(c);
            }
        }
        pieces.push((neg, cur));
        let mut acc = ExactScalar::zero();
        for (neg, body) in pieces {
            let (coef, radicand) = match body.find("sqrt(") {
                Some(pos) => {
                    let rad = body[pos + 5..].strip_suffix(')').ok_or_else(bad)?;
                    let rad: u64 = rad.parse().map_err(|_| bad())?;
                    let coef = match &body[..pos] {
                        "" => Rational::one(),
                        c => parse_rational(c.strip_suffix('*').ok_or_else(bad)?)?,
                    };
                    (coef, rad)
                }
                None => (parse_rational(&body)?, 1),
            };
            if radicand == 0 {
                return Err(bad());
            }
            let t = ExactScalar::term(coef, radicand);
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }
}

/// `re + i*im` with exact real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cx {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl Cx {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(ExactScalar::one())
    }

    pub fn i() -> Self {
        Self::imag(ExactScalar::one())
    }

    pub fn real(re: ExactScalar) -> Self {
        Self {
            re,
            im: ExactScalar::zero(),
        }
    }

    pub fn imag(im: ExactScalar) -> Self {
        Self {
            re: ExactScalar::zero(),
            im,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(ExactScalar::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::real(ExactScalar::from_rational(q))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Multiply by `i`.
    pub fn times_i(&self) -> Self {
        Self {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        Self {
            re: self.re.scale(q),
            im: self.im.scale(q),
        }
    }

    /// Inverse of a purely real or purely imaginary single-term value.
    pub fn inv(&self) -> Result<Self> {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => Err(Error::DivisionByZero),
            (false, true) => Ok(Self::real(self.re.inv()?)),
            // 1/(i b) = -i/b
            (true, false) => Ok(Self::imag(-self.im.inv()?)),
            _ => Err(Error::NonMonomialDivisor(self.to_string())),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl From<ExactScalar> for Cx {
    fn from(s: ExactScalar) -> Self {
        Cx::real(s)
    }
}

impl Add<&Cx> for &Cx {
    type Output = Cx;
    fn add(self, rhs: &Cx) -> Cx {
        Cx {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&Cx> for &Cx {
    type Output = Cx;
    fn sub(self, rhs: &Cx) -> Cx {
        Cx {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&Cx> for &Cx {
    type Output = Cx;
    fn mul(self, rhs: &Cx) -> Cx {
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        Cx {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx {
            re: -self.re,
            im: -self.im,
        }
    }
}

forward_owned!(Cx, Add add, Sub sub, Mul mul);

impl AddAssign<&Cx> for Cx {
    fn add_assign(&mut self, rhs: &Cx) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Cx> for Cx {
    fn sub_assign(&mut self, rhs: &Cx) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl fmt::Display for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |s: &ExactScalar| {
            if s.terms().len() > 1 {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        let imag = if self.im == ExactScalar::one() {
            "i".to_string()
        } else if self.im == -ExactScalar::one() {
            "-i".to_string()
        } else {
            format!("{}*i", wrap(&self.im))
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => f.write_str(&imag),
            (false, false) => write!(f, "{} + {}", self.re, imag),
        }
    }
}
