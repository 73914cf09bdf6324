use crate::error::{Error, Result};
use crate::scalar::{coefficient_term, Ring, Scalar};
use crate::text::{join_signed, Cursor};

/// A commutative algebra presented on a finite monomial basis by a table of
/// structure constants. A missing table entry means the product escapes the
/// basis; multiplying into it raises [`Error::BasisOverflow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    ring: Ring,
    basis: Vec<String>,
    unit: usize,
    table: Vec<Vec<Option<Vec<(usize, Scalar)>>>>,
}

/// Dense coordinate vector of an element of a [`FiniteAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraVector {
    coeffs: Vec<Scalar>,
}

impl AlgebraVector {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

impl FiniteAlgebra {
    /// Builds an algebra from a structure-constant table indexed
    /// `table[i][j]` = expansion of `e_i * e_j`.
    pub fn new(
        name: impl Into<String>,
        ring: Ring,
        basis: Vec<String>,
        unit: usize,
        table: Vec<Vec<Option<Vec<(usize, Scalar)>>>>,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 || unit >= n || table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSpec(format!(
                "structure table must be {n}x{n} with unit index below {n}"
            )));
        }
        for row in &table {
            for entry in row.iter().flatten() {
                for (k, c) in entry {
                    if *k >= n {
                        return Err(Error::LetterOutOfRange { letter: *k, basis: n });
                    }
                    if c.ring() != ring {
                        return Err(Error::RingMismatch {
                            left: ring.clone(),
                            right: c.ring(),
                        });
                    }
                }
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            ring,
            basis,
            unit,
            table,
        })
    }

    /// `k[var]/(var^d)` on the basis `1, var, ..., var^(d-1)`.
    pub fn truncated_polynomial(ring: Ring, var: &str, d: usize) -> Self {
        Self::monomial_table(ring, var, d, true)
    }

    /// The same basis as [`truncated_polynomial`](Self::truncated_polynomial)
    /// but without the relation `var^d = 0`: products of total degree `>= d`
    /// are left undefined and overflow.
    pub fn truncated_monomials(ring: Ring, var: &str, d: usize) -> Self {
        Self::monomial_table(ring, var, d, false)
    }

    fn monomial_table(ring: Ring, var: &str, d: usize, quotient: bool) -> Self {
        assert!(d >= 1, "need at least the unit");
        let basis = (0..d)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            })
            .collect();
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i + j < d {
                            Some(vec![(i + j, ring.one())])
                        } else if quotient {
                            Some(Vec::new())
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        let name = if quotient {
            format!("{ring}[{var}]/({var}^{d})")
        } else {
            format!("{ring}<{var}^<{d}>")
        };
        FiniteAlgebra {
            name,
            ring,
            basis,
            unit: 0,
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Structure constants of `e_i * e_j`.
    pub fn letter_product(&self, i: usize, j: usize) -> Result<&[(usize, Scalar)]> {
        let n = self.dim();
        for letter in [i, j] {
            if letter >= n {
                return Err(Error::LetterOutOfRange { letter, basis: n });
            }
        }
        self.table[i][j].as_deref().ok_or_else(|| Error::BasisOverflow {
            left: i,
            right: j,
            algebra: self.name.clone(),
        })
    }

    pub fn zero(&self) -> AlgebraVector {
        AlgebraVector {
            coeffs: vec![self.ring.zero(); self.dim()],
        }
    }

    pub fn basis_vector(&self, i: usize) -> AlgebraVector {
        let mut v = self.zero();
        v.coeffs[i] = self.ring.one();
        v
    }

    pub fn one(&self) -> AlgebraVector {
        self.basis_vector(self.unit)
    }

    pub fn from_coeffs(&self, coeffs: Vec<Scalar>) -> Result<AlgebraVector> {
        let v = AlgebraVector { coeffs };
        self.check(&v)?;
        Ok(v)
    }

    pub(crate) fn check(&self, v: &AlgebraVector) -> Result<()> {
        if v.coeffs.len() != self.dim() {
            return Err(Error::mismatch(&self.name, format!("vector of length {}", v.coeffs.len())));
        }
        if let Some(c) = v.coeffs.iter().find(|c| c.ring() != self.ring) {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: c.ring(),
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &AlgebraVector, y: &AlgebraVector) -> Result<AlgebraVector> {
        self.check(x)?;
        self.check(y)?;
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(AlgebraVector { coeffs })
    }

    pub fn scale(&self, c: &Scalar, x: &AlgebraVector) -> Result<AlgebraVector> {
        self.check(x)?;
        let coeffs = x.coeffs.iter().map(|a| c.checked_mul(a)).collect::<Result<_>>()?;
        Ok(AlgebraVector { coeffs })
    }

    pub fn mul(&self, x: &AlgebraVector, y: &AlgebraVector) -> Result<AlgebraVector> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (i, a) in x.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.checked_mul(b)?;
                for (k, c) in self.letter_product(i, j)? {
                    out.coeffs[*k] = out.coeffs[*k].checked_add(&ab.checked_mul(c)?)?;
                }
            }
        }
        Ok(out)
    }

    /// The scalar `c` with `x = c*1`, if `x` is a multiple of the unit.
    pub fn as_unit_multiple(&self, x: &AlgebraVector) -> Option<Scalar> {
        let only_unit = x
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i == self.unit || c.is_zero());
        only_unit.then(|| x.coeffs[self.unit].clone())
    }

    pub(crate) fn format(&self, x: &AlgebraVector) -> String {
        join_signed(
            x.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let name = &self.basis[i];
                    coefficient_term(c, (name != "1").then_some(name.as_str()))
                })
                .collect(),
        )
    }

    /// Signed terms `c`, `c*name`, `name`; a bare coefficient multiplies the
    /// basis element named `1` (or the unit).
    pub(crate) fn parse(&self, text: &str, base: usize) -> Result<AlgebraVector> {
        let mut cur = Cursor::new(text, base);
        let mut out = self.zero();
        let mut first = true;
        let unit_slot = self.basis.iter().position(|b| b == "1").unwrap_or(self.unit);
        loop {
            if cur.at_end() {
                if first {
                    return Err(cur.error("empty algebra element"));
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
            let (coeff, slot) = if cur.peek_digit() {
                let c = self.ring.parse_unsigned_coefficient(&mut cur)?;
                if cur.eat('*') {
                    (c, self.parse_basis_name(&mut cur)?)
                } else {
                    (c, unit_slot)
                }
            } else {
                (self.ring.one(), self.parse_basis_name(&mut cur)?)
            };
            let coeff = if negative { coeff.neg() } else { coeff };
            out.coeffs[slot] = out.coeffs[slot].checked_add(&coeff)?;
        }
        Ok(out)
    }

    fn parse_basis_name(&self, cur: &mut Cursor<'_>) -> Result<usize> {
        let at = cur.position();
        let name = cur
            .identifier()
            .ok_or_else(|| Error::syntax(at, "expected a basis element"))?;
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::syntax(at, format!("`{name}` is not a basis element of {}", self.name)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_multiply() {
        let a = FiniteAlgebra::truncated_polynomial(Ring::Rationals, "y", 2);
        let r = a.ring().clone();
        let x = a.from_coeffs(vec![r.int(1), r.int(2)]).unwrap(); // 1 + 2y
        let y = a.from_coeffs(vec![r.int(3), r.int(-1)]).unwrap(); // 3 - y
        // (1 + 2y)(3 - y) = 3 + 5y - 2y^2 = 3 + 5y
        assert_eq!(a.mul(&x, &y).unwrap(), a.from_coeffs(vec![r.int(3), r.int(5)]).unwrap());
        assert_eq!(a.mul(&x, &a.one()).unwrap(), x);
        assert_eq!(a.format(&x), "2*y + 1");
        assert_eq!(a.parse("2*y + 1", 0).unwrap(), x);
        assert_eq!(a.parse("y", 0).unwrap(), a.basis_vector(1));
        assert!(a.parse("z", 0).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let a = FiniteAlgebra::truncated_monomials(Ring::Rationals, "y", 3);
        let y = a.basis_vector(1);
        let y2 = a.basis_vector(2);
        assert_eq!(a.mul(&y, &y).unwrap(), y2);
        assert!(matches!(a.mul(&y, &y2), Err(Error::BasisOverflow { left: 1, right: 2, .. })));
    }

    #[test]
    fn unit_multiples() {
        let a = FiniteAlgebra::truncated_polynomial(Ring::Rationals, "y", 4);
        let r = Ring::Rationals;
        assert_eq!(a.as_unit_multiple(&a.scale(&r.int(3), &a.one()).unwrap()), Some(r.int(3)));
        assert_eq!(a.as_unit_multiple(&a.basis_vector(2)), None);
    }
}
