//! Exact coefficient rings: arbitrary-precision rationals, integers and
//! integers modulo `m` (not necessarily prime).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::text::Cursor;

/// Which ring a scalar lives in. Equality of descriptors decides whether two
/// scalars may be combined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Rationals,
    Integers,
    /// Integers modulo `m`, `m >= 2`. Use [`Ring::modular`] to construct.
    Modular(BigInt),
}

impl Ring {
    pub fn modular(modulus: impl Into<BigInt>) -> Result<Ring> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        Ok(Ring::Modular(modulus))
    }

    pub fn zero(&self) -> Scalar {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_bigint(BigInt::one())
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.from_bigint(BigInt::from(n))
    }

    /// Image of an integer under the structure map `Z -> R`.
    pub fn from_bigint(&self, n: BigInt) -> Scalar {
        match self {
            Ring::Rationals => Scalar::Rational(Rational(BigRational::from_integer(n))),
            Ring::Integers => Scalar::Integer(n),
            Ring::Modular(m) => Scalar::Modular(ModularScalar {
                value: n.mod_floor(m),
                modulus: m.clone(),
            }),
        }
    }

    /// `num / den` computed inside the ring; fails when `den` is not a unit.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let inv = self.int(den).invert()?;
        self.int(num).checked_mul(&inv)
    }

    /// Accepts `Q`, `Z`, `Z/mZ`, `rationals`, `integers` and `mod m`.
    pub fn parse(text: &str) -> Result<Ring> {
        let t = text.trim();
        match t {
            "Q" | "rationals" | "QQ" => return Ok(Ring::Rationals),
            "Z" | "integers" | "ZZ" => return Ok(Ring::Integers),
            _ => {}
        }
        let modulus = if let Some(rest) = t.strip_prefix("Z/") {
            rest.strip_suffix('Z').unwrap_or(rest)
        } else if let Some(rest) = t.strip_prefix("mod") {
            rest
        } else {
            return Err(Error::syntax(0, format!("unknown ring `{t}`")));
        };
        let m: BigInt = modulus
            .trim()
            .parse()
            .map_err(|_| Error::syntax(0, format!("bad modulus in `{t}`")))?;
        Ring::modular(m)
    }

    /// Parses a standalone scalar: `p/q`, `n`, or `n mod m`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let mut cur = Cursor::new(text, 0);
        let s = self.parse_scalar_at(&mut cur, true)?;
        cur.finish()?;
        Ok(s)
    }

    /// Parses an optionally signed coefficient at the cursor. `allow_mod`
    /// admits a trailing `mod m`, which must name this ring's modulus.
    pub(crate) fn parse_scalar_at(&self, cur: &mut Cursor<'_>, allow_mod: bool) -> Result<Scalar> {
        let negative = cur.eat('-');
        let s = self.parse_unsigned_coefficient(cur)?;
        let s = if negative { s.neg() } else { s };
        if allow_mod && cur.eat_keyword("mod") {
            let at = cur.position();
            let m = cur.unsigned()?;
            match self {
                Ring::Modular(modulus) if *modulus == m => {}
                _ => {
                    return Err(Error::syntax(at, format!("modulus {m} does not match ring {self}")));
                }
            }
        }
        Ok(s)
    }

    pub(crate) fn parse_unsigned_coefficient(&self, cur: &mut Cursor<'_>) -> Result<Scalar> {
        let num = cur.unsigned()?;
        if cur.eat('/') {
            let at = cur.position();
            let den = cur.unsigned()?;
            match self {
                Ring::Rationals => Ok(Scalar::Rational(Rational::new(num, den).map_err(|_| {
                    Error::syntax(at, "zero denominator")
                })?)),
                _ => Err(Error::syntax(at, format!("fractions are not elements of {self}"))),
            }
        } else {
            Ok(self.from_bigint(num))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rationals => write!(f, "Q"),
            Ring::Integers => write!(f, "Z"),
            Ring::Modular(m) => write!(f, "Z/{m}Z"),
        }
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Reduced fraction with positive denominator; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Re-normalizes; a no-op on values built through [`Rational::new`].
    pub fn normalize(&self) -> Rational {
        Rational(BigRational::new(self.numerator().clone(), self.denominator().clone()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator().is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModularScalar {
    value: BigInt,
    modulus: BigInt,
}

impl ModularScalar {
    pub fn new(value: impl Into<BigInt>, modulus: impl Into<BigInt>) -> Result<ModularScalar> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        Ok(ModularScalar {
            value: value.into().mod_floor(&modulus),
            modulus,
        })
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Mul,
}

/// An exact element of one of the coefficient rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Integer(BigInt),
    Modular(ModularScalar),
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Rational(_) => Ring::Rationals,
            Scalar::Integer(_) => Ring::Integers,
            Scalar::Modular(m) => Ring::Modular(m.modulus.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.0.is_zero(),
            Scalar::Integer(n) => n.is_zero(),
            Scalar::Modular(m) => m.value.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.0.is_one(),
            Scalar::Integer(n) => n.is_one(),
            Scalar::Modular(m) => m.value.is_one(),
        }
    }

    pub fn combine(op: ScalarOp, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        match op {
            ScalarOp::Add => a.checked_add(b),
            ScalarOp::Mul => a.checked_mul(b),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Rational(&a.0 + &b.0)),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                Scalar::Modular(ModularScalar {
                    value: (&a.value + &b.value).mod_floor(&a.modulus),
                    modulus: a.modulus.clone(),
                })
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Rational(&a.0 * &b.0)),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                Scalar::Modular(ModularScalar {
                    value: (&a.value * &b.value).mod_floor(&a.modulus),
                    modulus: a.modulus.clone(),
                })
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(Rational(-&a.0)),
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Modular(a) => Scalar::Modular(ModularScalar {
                value: (-&a.value).mod_floor(&a.modulus),
                modulus: a.modulus.clone(),
            }),
        }
    }

    /// Multiplicative inverse. Zero gives [`Error::DivisionByZero`]; a
    /// nonzero non-unit gives [`Error::NotInvertible`] naming the element.
    pub fn invert(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let not_invertible = || Error::NotInvertible {
            element: self.to_string(),
            ring: self.ring(),
        };
        match self {
            Scalar::Rational(a) => Ok(Scalar::Rational(Rational(a.0.recip()))),
            Scalar::Integer(a) => {
                if a.abs().is_one() {
                    Ok(Scalar::Integer(a.clone()))
                } else {
                    Err(not_invertible())
                }
            }
            Scalar::Modular(a) => {
                let egcd = a.value.extended_gcd(&a.modulus);
                if !egcd.gcd.is_one() {
                    return Err(not_invertible());
                }
                Ok(Scalar::Modular(ModularScalar {
                    value: egcd.x.mod_floor(&a.modulus),
                    modulus: a.modulus.clone(),
                }))
            }
        }
    }

    /// Sign and magnitude text as used inside sums (`3/2`, `x`, ...). Modular
    /// values are never negative.
    pub(crate) fn sign_and_magnitude(&self) -> (bool, String) {
        match self {
            Scalar::Rational(a) if a.0.is_negative() => (true, Rational(-&a.0).to_string()),
            Scalar::Rational(a) => (false, a.to_string()),
            Scalar::Integer(a) => (a.is_negative(), a.abs().to_string()),
            Scalar::Modular(a) => (false, a.value.to_string()),
        }
    }

    /// The scalar without its ring suffix, e.g. `3` for `3 mod 5`.
    pub fn plain(&self) -> String {
        let (neg, mag) = self.sign_and_magnitude();
        if neg {
            format!("-{mag}")
        } else {
            mag
        }
    }

    /// Whether the magnitude is 1, so a coefficient can be left implicit.
    pub(crate) fn is_unit_magnitude(&self) -> bool {
        self.is_one() || self.neg().is_one()
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::RingMismatch {
            left: self.ring(),
            right: other.ring(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Modular(a) => write!(f, "{} mod {}", a.value, a.modulus),
            _ => write!(f, "{}", self.plain()),
        }
    }
}

/// `c*monomial` with the coefficient left implicit when it is ±1.
pub(crate) fn coefficient_term(c: &Scalar, monomial: Option<&str>) -> (bool, String) {
    let (negative, magnitude) = c.sign_and_magnitude();
    match monomial {
        None => (negative, magnitude),
        Some(m) if c.is_unit_magnitude() && !matches!(c, Scalar::Modular(_)) => (negative, m.to_string()),
        Some(m) if c.is_one() => (false, m.to_string()),
        Some(m) => (negative, format!("{magnitude}*{m}")),
    }
}

/// `rational_normalize`: builds the canonical fraction `num/den`.
pub fn rational_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(num, den)
}
