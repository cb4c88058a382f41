//! Exact scalars: arbitrary-precision rationals and polynomials in the
//! loop parameter `d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("the loop parameter must be nonzero")]
    ZeroDelta,
    #[error("cannot parse `{0}` as a polynomial in d")]
    Parse(String),
    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
}

/// Small-integer shorthand for rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `P`, `P/Q` or `-P/Q`.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let t = text.trim();
    Rational::from_str(t).map_err(|_| ScalarError::ParseRational(text.to_string()))
}

/// A polynomial in the parameter `d` with rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeltaPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl DeltaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `d` itself.
    pub fn delta() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * d^degree`.
    pub fn monomial(c: Rational, degree: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// `sign * d^degree`, the shape of every structure constant of a diagram algebra.
    pub fn signed_power(negative: bool, degree: u32) -> Self {
        Self::monomial(if negative { -Rational::one() } else { Rational::one() }, degree)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// If the polynomial is `c * d^k`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&Rational, u32)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(d, c)| (c, *d))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(d, x)| (*d, x * c)).collect(),
        }
    }

    /// Multiplies by `d^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, x)| (d + k, x.clone())).collect(),
        }
    }

    fn add_term(&mut self, degree: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    /// Horner evaluation at a nonzero rational.
    pub fn evaluate(&self, delta: &Rational) -> Result<Rational, ScalarError> {
        if delta.is_zero() {
            return Err(ScalarError::ZeroDelta);
        }
        let Some(top) = self.degree() else {
            return Ok(Rational::zero());
        };
        let mut acc = Rational::zero();
        for d in (0..=top).rev() {
            acc = acc * delta + self.coeff(d);
        }
        Ok(acc)
    }
}

impl From<Rational> for DeltaPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a DeltaPoly> for &'a DeltaPoly {
    type Output = DeltaPoly;
    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for DeltaPoly {
    type Output = DeltaPoly;
    fn add(mut self, rhs: DeltaPoly) -> DeltaPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&DeltaPoly> for DeltaPoly {
    fn add_assign(&mut self, rhs: &DeltaPoly) {
        for (d, c) in &rhs.coeffs {
            self.add_term(*d, c);
        }
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        DeltaPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Neg for DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        -&self
    }
}

impl<'a> Sub<&'a DeltaPoly> for &'a DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, &-c);
        }
        out
    }
}

impl Sub for DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: DeltaPoly) -> DeltaPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a DeltaPoly> for &'a DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        let mut out = DeltaPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: DeltaPoly) -> DeltaPoly {
        &self * &rhs
    }
}

pub fn poly_add(p: &DeltaPoly, q: &DeltaPoly) -> DeltaPoly {
    p + q
}

pub fn poly_mul(p: &DeltaPoly, q: &DeltaPoly) -> DeltaPoly {
    p * q
}

pub fn poly_neg(p: &DeltaPoly) -> DeltaPoly {
    -p
}

pub fn poly_scale(p: &DeltaPoly, c: &Rational) -> DeltaPoly {
    p.scale(c)
}

pub fn evaluate(p: &DeltaPoly, delta: &Rational) -> Result<Rational, ScalarError> {
    p.evaluate(delta)
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &Rational, degree: u32) -> fmt::Result {
    let var = match degree {
        0 => String::new(),
        1 => "d".to_string(),
        k => format!("d^{k}"),
    };
    if degree == 0 {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{var}")
    } else {
        write!(f, "{c}*{var}")
    }
}

/// Prints highest degree first, e.g. `3/2*d^2 - 1`.
impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_term(f, &c.abs(), *d)?;
        }
        Ok(())
    }
}

impl FromStr for DeltaPoly {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // Split into signed terms; a sign never follows `^` because exponents are unsigned.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                negative = ch == '-';
            } else if ch == '+' || ch == '-' {
                return Err(err());
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(err());
        }
        terms.push((negative, current));

        let mut out = DeltaPoly::zero();
        for (negative, term) in terms {
            let (coeff_text, var_text) = match term.find('d') {
                Some(pos) => {
                    let (c, v) = term.split_at(pos);
                    let c = c.strip_suffix('*').unwrap_or(c);
                    if c.ends_with('*') {
                        return Err(err());
                    }
                    (c.to_string(), Some(v.to_string()))
                }
                None => (term.clone(), None),
            };
            let coeff = if coeff_text.is_empty() {
                if var_text.is_none() {
                    return Err(err());
                }
                Rational::one()
            } else {
                parse_rational(&coeff_text).map_err(|_| err())?
            };
            let degree = match var_text.as_deref() {
                None => 0,
                Some("d") => 1,
                Some(v) => v
                    .strip_prefix("d^")
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(err)?,
            };
            let coeff = if negative { -coeff } else { coeff };
            out.add_term(degree, &coeff);
        }
        Ok(out)
    }
}
