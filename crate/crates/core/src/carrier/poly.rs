use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{coefficient_term, Ring, Scalar};
use crate::text::{join_signed, Cursor};

/// Sparse univariate polynomial in `x`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    coeffs: BTreeMap<u32, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        let one = ring.one();
        Self::monomial(one, 0).expect("ring matches itself")
    }

    pub fn monomial(coeff: Scalar, degree: u32) -> Result<Self> {
        let ring = coeff.ring();
        Self::from_terms(ring, [(degree, coeff)])
    }

    /// `x^n` with unit coefficient.
    pub fn x_pow(ring: &Ring, degree: u32) -> Self {
        Self::monomial(ring.one(), degree).expect("ring matches itself")
    }

    /// Collects terms, adding coefficients of repeated degrees.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (u32, Scalar)>) -> Result<Self> {
        let mut p = Polynomial::zero(ring);
        for (deg, c) in terms {
            p.add_term(deg, &c)?;
        }
        Ok(p)
    }

    /// Shorthand for integer coefficients, `(degree, value)`.
    pub fn from_ints(ring: &Ring, terms: &[(u32, i64)]) -> Self {
        Self::from_terms(ring.clone(), terms.iter().map(|&(d, c)| (d, ring.int(c))))
            .expect("ring matches itself")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> Scalar {
        self.coeffs.get(&degree).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Scalar)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        Ok(())
    }

    fn add_term(&mut self, degree: u32, c: &Scalar) -> Result<()> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: c.ring(),
            });
        }
        let sum = match self.coeffs.get(&degree) {
            Some(old) => old.checked_add(c)?,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&degree);
        } else {
            self.coeffs.insert(degree, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Polynomial> {
        Polynomial::from_terms(
            self.ring.clone(),
            self.terms()
                .map(|(d, a)| Ok((d, a.checked_mul(c)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Exact convolution of the sparse coefficient maps.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(self.ring.clone());
        for (da, a) in self.terms() {
            for (db, b) in other.terms() {
                out.add_term(da + db, &a.checked_mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// Applies `f` to every monomial `c*x^n` and sums the images.
    pub fn map_terms(&self, mut f: impl FnMut(u32, &Scalar) -> Result<Option<(u32, Scalar)>>) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.ring.clone());
        for (d, c) in self.terms() {
            if let Some((nd, nc)) = f(d, c)? {
                out.add_term(nd, &nc)?;
            }
        }
        Ok(out)
    }

    /// Evaluation at `x = 0`, as a constant polynomial.
    pub fn constant_part(&self) -> Polynomial {
        Polynomial::from_terms(self.ring.clone(), [(0, self.coeff(0))]).expect("same ring")
    }

    pub(crate) fn format(&self) -> String {
        join_signed(
            self.coeffs
                .iter()
                .rev()
                .map(|(d, c)| {
                    let mono = match d {
                        0 => None,
                        1 => Some("x".to_string()),
                        _ => Some(format!("x^{d}")),
                    };
                    coefficient_term(c, mono.as_deref())
                })
                .collect(),
        )
    }

    /// Grammar: signed terms `c`, `c*x^n`, `x^n`, `x`; degrees are
    /// non-negative integers.
    pub(crate) fn parse(ring: &Ring, text: &str, base: usize) -> Result<Polynomial> {
        let mut cur = Cursor::new(text, base);
        let mut out = Polynomial::zero(ring.clone());
        let mut first = true;
        loop {
            if cur.at_end() {
                if first {
                    return Err(cur.error("empty polynomial"));
                }
                break;
            }
            let negative = if first {
                cur.eat('-')
            } else if cur.eat('+') {
                false
            } else if cur.eat('-') {
                true
            } else {
                return Err(cur.error("expected `+` or `-`"));
            };
            first = false;
            let (coeff, degree) = if cur.peek_digit() {
                let c = ring.parse_unsigned_coefficient(&mut cur)?;
                if cur.eat('*') {
                    (c, parse_x_power(&mut cur)?)
                } else {
                    (c, 0)
                }
            } else {
                (ring.one(), parse_x_power(&mut cur)?)
            };
            let coeff = if negative { coeff.neg() } else { coeff };
            out.add_term(degree, &coeff)?;
        }
        Ok(out)
    }
}

fn parse_x_power(cur: &mut Cursor<'_>) -> Result<u32> {
    cur.skip_ws();
    if cur.peek() != Some('x') {
        return Err(cur.error("expected `x`"));
    }
    cur.expect('x')?;
    if cur.eat('^') {
        if !cur.peek_digit() {
            return Err(cur.error("expected a non-negative degree"));
        }
        let at = cur.position();
        let n = cur.unsigned()?;
        u32::try_from(n).map_err(|_| Error::syntax(at, "degree too large"))
    } else {
        Ok(1)
    }
}
