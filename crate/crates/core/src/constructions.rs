//! Building FTC-pairs: from an integration alone (through `k⋊M`), from a
//! derivation with a dual map `D°` and a projector `E` (through
//! `K = D°∘D + E`), and the free Rota-Baxter algebra on a finite algebra.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Deserialize;

use crate::calculus::{self, as_hurwitz, as_poly, as_tensor, FtcPair};
use crate::carrier::{hurwitz, tensor, Carrier, Element, FiniteAlgebra, Polynomial};
use crate::equivalence::functor_g_unchecked;
use crate::error::{Error, Result};
use crate::laws::{Clause, Law, LawReport};
use crate::linalg::{self, Matrix};
use crate::operator::{LinearOperator, ModuleAction, Space};
use crate::sample::Sampler;
use crate::scalar::{Ring, Scalar};
use crate::zinbiel::zinbiel_from_integration;

pub const DEFAULT_DEGREE_BOUND: usize = 12;

/// `(k⋊M ⇄ M)`, built as `G(k, M, ◁_P)`. Fails with
/// [`Error::InvalidIntegration`] unless `P` is Rota-Baxter on the samples.
pub fn ftc_from_integration(p: &LinearOperator, action: &ModuleAction, sampler: &Sampler) -> Result<FtcPair> {
    let z = zinbiel_from_integration(p, action, sampler)?;
    let mut pair = functor_g_unchecked(&z);
    pair.name = format!("k⋊{}", p.domain().name());
    Ok(pair)
}

/// `RB(A)`: reduced words over `A`'s basis with the augmented mixable
/// shuffle, and `P(w) = 1 ⊗ w`. The action is `RB(A)`'s own product.
pub fn free_rota_baxter(alg: Arc<FiniteAlgebra>) -> (Carrier, LinearOperator, ModuleAction) {
    let carrier = Carrier::free_rota_baxter(alg.clone());
    let space = Space::whole(carrier.clone());
    let unit = alg.unit_index();
    let p = LinearOperator::new("P", space.clone(), space, move |w| {
        Ok(Element::Tensor(tensor::prepend_letter(unit, as_tensor(w)?)?))
    });
    let action = ModuleAction::multiplication(&carrier);
    (carrier, p, action)
}

/// Data for the derivation construction. `d: A -> M`, `d_circ: M -> A`,
/// `e: A -> A`; `action` is `A` acting on `M`.
#[derive(Clone, Debug)]
pub struct DerivationConstructionInput {
    pub d: LinearOperator,
    pub d_circ: LinearOperator,
    pub e: LinearOperator,
    pub action: ModuleAction,
    /// A closed form for `K⁻¹`; when absent it is solved degree by degree.
    pub k_inverse: Option<LinearOperator>,
    pub degree_bound: usize,
}

impl DerivationConstructionInput {
    pub fn new(d: LinearOperator, d_circ: LinearOperator, e: LinearOperator, action: ModuleAction) -> Self {
        DerivationConstructionInput {
            d,
            d_circ,
            e,
            action,
            k_inverse: None,
            degree_bound: DEFAULT_DEGREE_BOUND,
        }
    }

    pub fn with_k_inverse(mut self, k_inverse: LinearOperator) -> Self {
        self.k_inverse = Some(k_inverse);
        self
    }

    pub fn with_degree_bound(mut self, bound: usize) -> Self {
        self.degree_bound = bound;
        self
    }
}

/// `E(E a) = E a`, `E(1) = 1`, `E(ab) = E(a)E(b)`.
fn projector_law(e: &LinearOperator) -> Law {
    let e = e.clone();
    let a = e.domain().clone();
    let car = a.carrier().clone();
    Law::new("e-idempotent-morphism", vec![("a", a.clone()), ("b", a)], move |v| {
        let (x, y) = (&v[0], &v[1]);
        let ex = e.apply(x)?;
        let one = car.one()?;
        Ok(vec![
            Clause::new("E(E(a)) = E(a)", &car, e.apply(&ex)?, ex.clone()),
            Clause::new("E(1) = 1", &car, e.apply(&one)?, one),
            Clause::new("E(ab) = E(a)E(b)", &car, e.apply(&car.mul(x, y)?)?, car.mul(&ex, &e.apply(y)?)?),
        ])
    })
}

/// `first` then `second` is zero on the samples.
fn vanishing_law(name: &str, first: &LinearOperator, second: &LinearOperator) -> Law {
    let comp = first.then(second);
    let target = second.codomain().carrier().clone();
    let label = format!("{}({}(x)) = 0", second.name(), first.name());
    Law::new(name, vec![("x", first.domain().clone())], move |v| {
        Ok(vec![Clause::new(label.clone(), &target, comp.apply(&v[0])?, target.zero())])
    })
}

/// `D°(a·m) = a·D°(m)`.
fn a_linearity_law(d_circ: &LinearOperator, action: &ModuleAction, algebra: &Space) -> Law {
    let (dc, action) = (d_circ.clone(), action.clone());
    let car = algebra.carrier().clone();
    Law::new("dcirc-a-linear", vec![("a", algebra.clone()), ("m", d_circ.domain().clone())], move |v| {
        let (a, m) = (&v[0], &v[1]);
        Ok(vec![Clause::new("D°(a·m) = a·D°(m)", &car, dc.apply(&action.apply(a, m)?)?, car.mul(a, &dc.apply(m)?)?)])
    })
}

fn require_all(reports: Vec<LawReport>) -> Result<()> {
    if reports.iter().any(|r| !r.holds()) {
        Err(Error::InvalidConstructionInput(reports))
    } else {
        Ok(())
    }
}

/// `(A ⇄ ker E)` with derivation `L = D°∘D` and integration `K⁻¹`, where
/// `K = L + E`.
pub fn ftc_from_derivation(input: &DerivationConstructionInput, sampler: &Sampler) -> Result<FtcPair> {
    let algebra = input.d.domain().clone();
    require_all(vec![
        calculus::check_leibniz(&input.d, &input.action, sampler)?,
        a_linearity_law(&input.d_circ, &input.action, &algebra).check(sampler)?,
        projector_law(&input.e).check(sampler)?,
        vanishing_law("e-after-dcirc", &input.d_circ, &input.e).check(sampler)?,
        vanishing_law("d-after-e", &input.e, &input.d).check(sampler)?,
    ])?;
    let l = input.d.then(&input.d_circ).renamed("L");
    build_pair("derivation-construction", &l, input, sampler)
}

/// The case `M = A`, `D° = id`, so `L = D` and `K = D + E`.
pub fn ftc_from_diff_algebra(
    d: &LinearOperator,
    e: &LinearOperator,
    degree_bound: usize,
    sampler: &Sampler,
) -> Result<FtcPair> {
    let algebra = d.domain().clone();
    let action = ModuleAction::multiplication(algebra.carrier());
    require_all(vec![
        calculus::check_leibniz(d, &action, sampler)?,
        projector_law(e).check(sampler)?,
        vanishing_law("e-after-d", d, e).check(sampler)?,
        vanishing_law("d-after-e", e, d).check(sampler)?,
    ])?;
    let input = DerivationConstructionInput {
        d: d.clone(),
        d_circ: LinearOperator::identity(algebra),
        e: e.clone(),
        action,
        k_inverse: None,
        degree_bound,
    };
    build_pair("diff-algebra-construction", &d.clone().renamed("L"), &input, sampler)
}

fn build_pair(name: &str, l: &LinearOperator, input: &DerivationConstructionInput, sampler: &Sampler) -> Result<FtcPair> {
    let algebra = input.d.domain().clone();
    let k_inv = match &input.k_inverse {
        Some(k) => {
            let k_op = l.plus(&input.e);
            let law = inverse_law(&k_op, k);
            let report = law.check(sampler)?;
            if let Some(w) = report.witness {
                return Err(Error::InverseValidation {
                    witness: w.input("a").unwrap_or_default().to_string(),
                });
            }
            k.clone()
        }
        None => invert_k_graded(l, &input.e, input.degree_bound)?,
    };
    let module = Space::kere_annihilated(algebra.carrier().clone(), input.e.clone());
    let d = l.between(algebra.clone(), module.clone()).renamed("L̃");
    let p = k_inv.between(module.clone(), algebra.clone()).renamed("P");
    Ok(FtcPair::new(
        name,
        algebra.clone(),
        module,
        ModuleAction::multiplication(algebra.carrier()),
        d,
        p,
    ))
}

fn inverse_law(k: &LinearOperator, k_inv: &LinearOperator) -> Law {
    let (k, ki) = (k.clone(), k_inv.clone());
    let a = k.domain().clone();
    let car = a.carrier().clone();
    Law::new("k-inverse", vec![("a", a)], move |v| {
        let x = &v[0];
        Ok(vec![
            Clause::new("K⁻¹(K(a)) = a", &car, ki.apply(&k.apply(x)?)?, x.clone()),
            Clause::new("K(K⁻¹(a)) = a", &car, k.apply(&ki.apply(x)?)?, x.clone()),
        ])
    })
}

/// `(L + E)⁻¹`, solved as an exact linear system on each graded piece of
/// degree `0..=bound`. Evaluating on an element of higher degree fails with
/// [`Error::DegreeBoundExceeded`].
pub fn invert_k_graded(l: &LinearOperator, e: &LinearOperator, bound: usize) -> Result<LinearOperator> {
    let space = l.domain().clone();
    let carrier = space.carrier().clone();
    let ring = carrier.ring();
    let k = l.plus(e).renamed("K");
    let pieces: Vec<Matrix> = (0..=bound)
        .into_par_iter()
        .map(|n| invert_piece(&carrier, &ring, &k, n))
        .collect::<Result<_>>()?;
    let pieces = Arc::new(pieces);
    let (car, r) = (carrier.clone(), ring.clone());
    let k_inv = LinearOperator::new("K⁻¹", space.clone(), space, move |x| {
        let Some(top) = car.top_degree(x)? else {
            return Ok(car.zero());
        };
        if top > bound {
            return Err(Error::DegreeBoundExceeded { degree: top, bound });
        }
        let mut acc = car.zero();
        for (n, inv) in pieces.iter().enumerate().take(top + 1) {
            let coords = car.graded_coordinates(x, n)?;
            if coords.iter().all(Scalar::is_zero) {
                continue;
            }
            acc = car.add(&acc, &car.from_graded(n, &linalg::apply(inv, &coords, &r)?)?)?;
        }
        Ok(acc)
    });
    for n in 0..=bound {
        for b in carrier.graded_basis(n)? {
            if k.apply(&k_inv.apply(&b)?)? != b || k_inv.apply(&k.apply(&b)?)? != b {
                return Err(Error::InverseValidation {
                    witness: carrier.format(&b),
                });
            }
        }
    }
    Ok(k_inv)
}

/// The inverse of `K` restricted to degree `n`, as a matrix acting on
/// graded coordinates.
fn invert_piece(carrier: &Carrier, ring: &Ring, k: &LinearOperator, n: usize) -> Result<Matrix> {
    let basis = carrier.graded_basis(n)?;
    let dim = basis.len();
    // Column j holds the coordinates of K(b_j).
    let mut m = vec![vec![ring.zero(); dim]; dim];
    for (j, b) in basis.iter().enumerate() {
        let image = k.apply(b)?;
        if carrier.top_degree(&image)?.is_some_and(|t| t > n) {
            return Err(Error::NotGraded(format!("K(degree {n}) leaves degree {n}")));
        }
        for (i, c) in carrier.graded_coordinates(&image, n)?.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    linalg::invert_matrix(ring, &m)?.ok_or_else(|| Error::SingularComponent {
        degree: n,
        matrix: linalg::format_matrix(&m),
    })
}

/// The polynomial input: `D = d/dx`, `D°(p) = p·x`, `E(p) = p(0)`.
pub fn polynomial_derivation_input(ring: &Ring) -> DerivationConstructionInput {
    let carrier = Carrier::Polynomial(ring.clone());
    let space = Space::whole(carrier.clone());
    let x = Element::Poly(Polynomial::x_pow(ring, 1));
    let c = carrier.clone();
    let d_circ = LinearOperator::new("D°", space.clone(), space.clone(), move |p| c.mul(p, &x));
    DerivationConstructionInput::new(
        calculus::poly_derivation(ring),
        d_circ,
        evaluation_at_zero(ring),
        ModuleAction::multiplication(&carrier),
    )
}

/// `E(p) = p(0)`.
pub fn evaluation_at_zero(ring: &Ring) -> LinearOperator {
    let space = Space::whole(Carrier::Polynomial(ring.clone()));
    LinearOperator::new("E", space.clone(), space, |p| Ok(Element::Poly(as_poly(p)?.constant_part())))
}

/// The Euler derivation `x^n ↦ n x^n`.
pub fn euler_derivation(ring: &Ring) -> LinearOperator {
    let space = Space::whole(Carrier::Polynomial(ring.clone()));
    let r = ring.clone();
    LinearOperator::new("D", space.clone(), space, move |p| {
        Ok(Element::Poly(as_poly(p)?.map_terms(|n, c| {
            Ok((n > 0).then(|| c.checked_mul(&r.int(n as i64))).transpose()?.map(|c| (n, c)))
        })?))
    })
}

/// `(a_n) ↦ (n a_n)` on `H(B)`.
pub fn hurwitz_diagonal_derivation(carrier: &Carrier) -> LinearOperator {
    let space = Space::whole(carrier.clone());
    let base = calculus::hurwitz_base(carrier);
    LinearOperator::new("D", space.clone(), space, move |f| {
        Ok(Element::Hurwitz(hurwitz::index_weighted(&base, as_hurwitz(f)?)?))
    })
}

/// `(a_0, a_1, ...) ↦ (a_0)` on `H(B)`.
pub fn hurwitz_head(carrier: &Carrier) -> LinearOperator {
    let space = Space::whole(carrier.clone());
    LinearOperator::new("E", space.clone(), space, |f| Ok(Element::Hurwitz(hurwitz::head(as_hurwitz(f)?))))
}

/// JSON description of a constructed instance.
#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct InstanceSpec {
    pub construction: ConstructionKind,
    pub carrier: String,
    #[serde(default = "default_ring")]
    pub ring: String,
    #[serde(default = "default_bound")]
    pub degree_bound: usize,
    /// Basis names of a finite algebra; the first is the unit.
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    /// `structureConstants[i][j]` is the product of basis elements `i` and
    /// `j` as element text, or `null` when it leaves the basis.
    #[serde(default)]
    pub structure_constants: Option<Vec<Vec<Option<String>>>>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    FromIntegration,
    FromDerivation,
    DiffAlgebra,
}

fn default_ring() -> String {
    "Q".into()
}

fn default_bound() -> usize {
    DEFAULT_DEGREE_BOUND
}

impl InstanceSpec {
    pub fn parse(json: &str) -> Result<InstanceSpec> {
        serde_json::from_str(json).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    fn finite_algebra(&self, ring: &Ring) -> Result<FiniteAlgebra> {
        let (Some(basis), Some(table)) = (&self.basis, &self.structure_constants) else {
            return Ok(FiniteAlgebra::truncated_polynomial(ring.clone(), "y", 4));
        };
        let probe = FiniteAlgebra::new("A", ring.clone(), basis.clone(), 0, vec![vec![None; basis.len()]; basis.len()])?;
        let mut rows = Vec::with_capacity(table.len());
        for row in table {
            let mut out = Vec::with_capacity(row.len());
            for cell in row {
                out.push(match cell {
                    None => None,
                    Some(text) => {
                        let v = probe.parse(text, 0)?;
                        Some(
                            v.coeffs()
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(i, c)| (i, c.clone()))
                                .collect(),
                        )
                    }
                });
            }
            rows.push(out);
        }
        FiniteAlgebra::new(format!("A<{}>", basis.join(",")), ring.clone(), basis.clone(), 0, rows)
    }

    /// Builds the described pair; `sampler` validates the inputs.
    pub fn build(&self, sampler: &Sampler) -> Result<FtcPair> {
        let ring = Ring::parse(&self.ring)?;
        let bad = || Error::InvalidSpec(format!("no {:?} construction on carrier `{}`", self.construction, self.carrier));
        match (self.construction, self.carrier.as_str()) {
            (ConstructionKind::FromIntegration, "poly") => {
                let pair = calculus::polynomial_pair(&ring);
                ftc_from_integration(&pair.integration, &pair.action, sampler)
            }
            (ConstructionKind::FromIntegration, "hurwitz") => {
                let pair = calculus::hurwitz_pair(Carrier::Scalars(ring));
                ftc_from_integration(&pair.integration, &pair.action, sampler)
            }
            (ConstructionKind::FromIntegration, "rb") => {
                let (_, p, action) = free_rota_baxter(Arc::new(self.finite_algebra(&ring)?));
                ftc_from_integration(&p, &action, sampler)
            }
            (ConstructionKind::FromDerivation, "poly") => {
                let input = polynomial_derivation_input(&ring).with_degree_bound(self.degree_bound);
                ftc_from_derivation(&input, sampler)
            }
            (ConstructionKind::DiffAlgebra, "poly") => {
                ftc_from_diff_algebra(&euler_derivation(&ring), &evaluation_at_zero(&ring), self.degree_bound, sampler)
            }
            (ConstructionKind::DiffAlgebra, "hurwitz") => {
                let carrier = Carrier::hurwitz(Carrier::Scalars(ring));
                let (d, e) = (hurwitz_diagonal_derivation(&carrier), hurwitz_head(&carrier));
                ftc_from_diff_algebra(&d, &e, self.degree_bound, sampler)
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Sampler {
        Sampler::new(0, 30)
    }

    #[test]
    fn polynomial_closed_forms() {
        let q = Ring::Rationals;
        let input = polynomial_derivation_input(&q);
        let l = input.d.then(&input.d_circ);
        let k_inv = invert_k_graded(&l, &input.e, 12).unwrap();
        let car = Carrier::Polynomial(q.clone());
        for n in 1..=12u32 {
            let xn = Element::Poly(Polynomial::x_pow(&q, n));
            let expect = Element::Poly(Polynomial::monomial(q.ratio(1, n as i64).unwrap(), n).unwrap());
            assert_eq!(k_inv.apply(&xn).unwrap(), expect, "n = {n}");
        }
        assert_eq!(k_inv.apply(&car.one().unwrap()).unwrap(), car.one().unwrap());
        let x13 = Element::Poly(Polynomial::x_pow(&q, 13));
        assert!(matches!(k_inv.apply(&x13), Err(Error::DegreeBoundExceeded { degree: 13, bound: 12 })));
    }

    #[test]
    fn modular_obstruction() {
        let z3 = Ring::modular(3).unwrap();
        let err = ftc_from_derivation(&polynomial_derivation_input(&z3), &small()).unwrap_err();
        assert!(matches!(err, Error::SingularComponent { degree: 3, .. }), "{err}");
    }

    #[test]
    fn trivial_inverse() {
        let q = Ring::Rationals;
        let space = Space::whole(Carrier::Polynomial(q.clone()));
        let zero = LinearOperator::zero(space.clone(), space.clone());
        let id = LinearOperator::identity(space);
        let k_inv = invert_k_graded(&zero, &id, 5).unwrap();
        let p = Carrier::Polynomial(q).parse("3*x^5 - x + 2").unwrap();
        assert_eq!(k_inv.apply(&p).unwrap(), p);
    }

    #[test]
    fn specs_parse() {
        let spec = InstanceSpec::parse(r#"{"construction": "from-derivation", "carrier": "poly", "ring": "Q", "degreeBound": 13}"#).unwrap();
        assert_eq!(spec.degree_bound, 13);
        assert!(InstanceSpec::parse(r#"{"construction": "sideways", "carrier": "poly"}"#).is_err());
    }
}
