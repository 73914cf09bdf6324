//! Exact dense linear algebra over the coefficient rings: inversion of the
//! small per-degree matrices of a graded operator, and rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn format_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(Scalar::plain).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn lift(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rational(r) => BigRational::new(r.numerator().clone(), r.denominator().clone()),
        Scalar::Integer(n) => BigRational::from_integer(n.clone()),
        Scalar::Modular(m) => BigRational::from_integer(m.value().clone()),
    }
}

/// Gauss-Jordan over `Q`: the inverse and determinant, or `None` if singular.
fn invert_over_q(m: &[Vec<BigRational>]) -> Option<(Vec<Vec<BigRational>>, BigRational)> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let (x, y) = (&a[col][j] * &factor, &inv[col][j] * &factor);
                a[r][j] -= x;
                inv[r][j] -= y;
            }
        }
    }
    Some((inv, det))
}

/// The inverse of a square matrix over `ring`, or `None` when it has none
/// there. Integer and modular matrices are solved over `Q` and brought back
/// through `det`: over `Z` the inverse must be integral, over `Z/m` the
/// determinant must be a unit and `M^-1 = adj(M) / det`.
pub fn invert_matrix(ring: &Ring, m: &Matrix) -> Result<Option<Matrix>> {
    let lifted: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(lift).collect()).collect();
    let Some((inv, det)) = invert_over_q(&lifted) else {
        return Ok(None);
    };
    let out = match ring {
        Ring::Rationals => inv
            .iter()
            .map(|r| r.iter().map(|q| ring.ratio_big(q.numer().clone(), q.denom().clone())).collect())
            .collect::<Result<_>>()?,
        Ring::Integers => {
            if inv.iter().flatten().any(|q| !q.is_integer()) {
                return Ok(None);
            }
            inv.iter()
                .map(|r| r.iter().map(|q| ring.from_bigint(q.to_integer())).collect())
                .collect()
        }
        Ring::Modular(modulus) => {
            // det is an integer because the entries are.
            let d = det.to_integer();
            if !d.gcd(modulus).is_one() {
                return Ok(None);
            }
            let d_inv = ring.from_bigint(d.clone()).invert()?;
            inv.iter()
                .map(|r| {
                    r.iter()
                        .map(|q| {
                            let adj: BigInt = (q * BigRational::from_integer(d.clone())).to_integer();
                            ring.from_bigint(adj).checked_mul(&d_inv)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(Some(out))
}

/// Rank of a list of row vectors. Over `Z` this is the rank over `Q`; over
/// `Z/m` pivots must be units.
pub fn rank(ring: &Ring, rows: &Matrix) -> Result<usize> {
    let mut a: Matrix = rows.to_vec();
    let width = a.first().map_or(0, Vec::len);
    if let Ring::Integers = ring {
        let q = Ring::Rationals;
        a = a
            .iter()
            .map(|r| r.iter().map(|s| q.ratio_big(lift(s).numer().clone(), BigInt::one())).collect())
            .collect::<Result<_>>()?;
    }
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..a.len()).find(|&r| a[r][col].invert().is_ok()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].invert()?;
        for r in 0..a.len() {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].checked_mul(&inv)?;
            for j in 0..width {
                let t = f.checked_mul(&a[rank][j])?;
                a[r][j] = a[r][j].checked_sub(&t)?;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// `m · v`.
pub fn apply(m: &Matrix, v: &[Scalar], ring: &Ring) -> Result<Vec<Scalar>> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .try_fold(ring.zero(), |acc, (a, b)| acc.checked_add(&a.checked_mul(b)?))
        })
        .collect()
}

impl Ring {
    pub(crate) fn ratio_big(&self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let n = self.from_bigint(num);
        if den.is_one() {
            return Ok(n);
        }
        n.checked_mul(&self.from_bigint(den).invert()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ring: &Ring, rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| ring.int(x)).collect()).collect()
    }

    /// `[[a, b], [c, d]]^-1 = [[d, -b], [-c, a]] / (ad - bc)`.
    fn adjugate_inverse(_ring: &Ring, a: &Matrix) -> Option<Matrix> {
        let (p, q, r, s) = (&a[0][0], &a[0][1], &a[1][0], &a[1][1]);
        let det = p.checked_mul(s).unwrap().checked_sub(&q.checked_mul(r).unwrap()).unwrap();
        let inv = det.invert().ok()?;
        let e = |x: &Scalar| x.checked_mul(&inv).unwrap();
        Some(vec![vec![e(s), e(&q.neg())], vec![e(&r.neg()), e(p)]])
    }

    #[test]
    fn two_by_two_matches_adjugate() {
        let q = Ring::Rationals;
        for rows in [[[2, 1], [1, 1]], [[0, 3], [5, 7]], [[4, -2], [3, 1]], [[1, 2], [2, 4]]] {
            let a = m(&q, &[&rows[0], &rows[1]]);
            assert_eq!(invert_matrix(&q, &a).unwrap(), adjugate_inverse(&q, &a), "{rows:?}");
        }
        let z5 = Ring::modular(5).unwrap();
        let a = m(&z5, &[&[2, 1], &[3, 4]]);
        assert_eq!(invert_matrix(&z5, &a).unwrap(), adjugate_inverse(&z5, &a));
    }

    #[test]
    fn integer_inverses_must_be_integral() {
        let z = Ring::Integers;
        // No unit pivot in the first column, yet det = 1.
        let a = m(&z, &[&[2, 1], &[3, 2]]);
        assert_eq!(invert_matrix(&z, &a).unwrap(), Some(m(&z, &[&[2, -1], &[-3, 2]])));
        assert_eq!(invert_matrix(&z, &m(&z, &[&[2]])).unwrap(), None);
    }

    #[test]
    fn modular_singularity() {
        let z3 = Ring::modular(3).unwrap();
        assert_eq!(invert_matrix(&z3, &m(&z3, &[&[3]])).unwrap(), None);
        let z4 = Ring::modular(4).unwrap();
        assert_eq!(invert_matrix(&z4, &m(&z4, &[&[2, 1], &[1, 1]])).unwrap(), Some(m(&z4, &[&[1, 3], &[3, 2]])));
    }

    #[test]
    fn ranks() {
        let q = Ring::Rationals;
        assert_eq!(rank(&q, &m(&q, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap(), 2);
        assert_eq!(rank(&q, &m(&q, &[&[1, 2], &[2, 4]])).unwrap(), 1);
        assert_eq!(rank(&Ring::Integers, &m(&Ring::Integers, &[&[2, 0], &[0, 3]])).unwrap(), 2);
    }
}
