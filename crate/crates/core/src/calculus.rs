//! Derivations, integrations, the constant projector `E = id - P∘D`, and the
//! equational laws relating them.

use crate::carrier::{hurwitz, tensor, Carrier, Element, TensorSum};
use crate::error::{Error, Result};
use crate::laws::{Clause, Law, LawReport, Witness};
use crate::operator::{LinearOperator, ModuleAction, Space};
use crate::sample::Sampler;
use crate::scalar::Ring;

/// A derivation `D: A -> M` and an integration `P: M -> A` over an
/// `A`-module `M`. Nothing is assumed on construction; the laws are checked
/// separately.
#[derive(Clone, Debug)]
pub struct FtcPair {
    pub name: String,
    pub algebra: Space,
    pub module: Space,
    pub action: ModuleAction,
    pub derivation: LinearOperator,
    pub integration: LinearOperator,
}

impl FtcPair {
    pub fn new(
        name: impl Into<String>,
        algebra: Space,
        module: Space,
        action: ModuleAction,
        derivation: LinearOperator,
        integration: LinearOperator,
    ) -> Self {
        FtcPair {
            name: name.into(),
            algebra,
            module,
            action,
            derivation,
            integration,
        }
    }

    pub fn algebra_carrier(&self) -> &Carrier {
        self.algebra.carrier()
    }

    pub fn module_carrier(&self) -> &Carrier {
        self.module.carrier()
    }

    pub fn d(&self, a: &Element) -> Result<Element> {
        self.derivation.apply(a)
    }

    pub fn p(&self, m: &Element) -> Result<Element> {
        self.integration.apply(m)
    }

    pub fn act(&self, a: &Element, m: &Element) -> Result<Element> {
        self.action.apply(a, m)
    }

    /// `E(a) = a - P(D(a))`.
    pub fn e(&self, a: &Element) -> Result<Element> {
        self.algebra_carrier().sub(a, &self.p(&self.d(a)?)?)
    }

    pub fn constant_projector(&self) -> LinearOperator {
        constant_projector(self)
    }

    /// The same pair with other operators, used to plant mutations.
    pub fn with_operators(&self, name: impl Into<String>, d: LinearOperator, p: LinearOperator) -> FtcPair {
        FtcPair {
            name: name.into(),
            derivation: d,
            integration: p,
            ..self.clone()
        }
    }
}

/// `E = id - P∘D`, with no law assumed.
pub fn constant_projector(pair: &FtcPair) -> LinearOperator {
    pair.integration
        .clone()
        .then_after(&pair.derivation)
        .complement("E")
}

impl LinearOperator {
    /// `self ∘ first`.
    fn then_after(self, first: &LinearOperator) -> LinearOperator {
        first.then(&self)
    }
}

/// `D(x^n) = n x^(n-1)` on `R[x]`.
pub fn poly_derivation(ring: &Ring) -> LinearOperator {
    let space = Space::whole(Carrier::Polynomial(ring.clone()));
    let r = ring.clone();
    LinearOperator::new("D", space.clone(), space, move |x| {
        let p = as_poly(x)?;
        Ok(Element::Poly(p.map_terms(|n, c| {
            if n == 0 {
                return Ok(None);
            }
            Ok(Some((n - 1, c.checked_mul(&r.int(n as i64))?)))
        })?))
    })
}

/// `P(x^n) = x^(n+1)/(n+1)`; over rings where `n + 1` is not a unit this
/// fails when evaluated on `x^n`.
pub fn poly_integration(ring: &Ring) -> LinearOperator {
    let space = Space::whole(Carrier::Polynomial(ring.clone()));
    let r = ring.clone();
    LinearOperator::new("P", space.clone(), space, move |x| {
        let p = as_poly(x)?;
        Ok(Element::Poly(p.map_terms(|n, c| {
            let inv = r.int(n as i64 + 1).invert()?;
            Ok(Some((n + 1, c.checked_mul(&inv)?)))
        })?))
    })
}

pub(crate) fn as_poly(x: &Element) -> Result<&crate::carrier::Polynomial> {
    x.as_poly().ok_or_else(|| Error::mismatch("polynomial", format!("{x:?}")))
}

pub(crate) fn as_tensor(x: &Element) -> Result<&TensorSum> {
    x.as_tensor().ok_or_else(|| Error::mismatch("tensor sum", format!("{x:?}")))
}

pub(crate) fn as_hurwitz(x: &Element) -> Result<&crate::carrier::HurwitzSeries> {
    x.as_hurwitz().ok_or_else(|| Error::mismatch("Hurwitz series", format!("{x:?}")))
}

/// `D(a0, a1, a2, ...) = (a1, a2, ...)` on `carrier = H(B)`.
pub fn hurwitz_shift_left(carrier: &Carrier) -> LinearOperator {
    let space = Space::whole(carrier.clone());
    LinearOperator::new("D", space.clone(), space, |x| {
        Ok(Element::Hurwitz(hurwitz::shift_left(as_hurwitz(x)?)))
    })
}

/// `P(a0, a1, ...) = (0, a0, a1, ...)` on `carrier = H(B)`.
pub fn hurwitz_shift_right(carrier: &Carrier) -> LinearOperator {
    let space = Space::whole(carrier.clone());
    let base = hurwitz_base(carrier);
    LinearOperator::new("P", space.clone(), space, move |x| {
        Ok(Element::Hurwitz(hurwitz::shift_right(&base, as_hurwitz(x)?)))
    })
}

pub(crate) fn hurwitz_base(carrier: &Carrier) -> Carrier {
    match carrier {
        Carrier::Hurwitz(b) => (**b).clone(),
        other => panic!("{other} is not a Hurwitz carrier"),
    }
}

/// `R[x] ⇄ R[x]` with differentiation and integration.
pub fn polynomial_pair(ring: &Ring) -> FtcPair {
    let carrier = Carrier::Polynomial(ring.clone());
    FtcPair::new(
        "poly-ftc",
        Space::whole(carrier.clone()),
        Space::whole(carrier.clone()),
        ModuleAction::multiplication(&carrier),
        poly_derivation(ring),
        poly_integration(ring),
    )
}

/// `H(B) ⇄ H(B)` with the left and right shifts.
pub fn hurwitz_pair(base: Carrier) -> FtcPair {
    let carrier = Carrier::hurwitz(base);
    FtcPair::new(
        format!("hurwitz-ftc({carrier})"),
        Space::whole(carrier.clone()),
        Space::whole(carrier.clone()),
        ModuleAction::multiplication(&carrier),
        hurwitz_shift_left(&carrier),
        hurwitz_shift_right(&carrier),
    )
}

/// `Sh(V) ⇄ Sh+(V)`: `D` drops the unit term, `P` is the inclusion, and
/// `Sh(V)` acts on `Sh+(V)` by `a·m = m ◁ a`.
pub fn shuffle_pair(ring: &Ring, basis: usize) -> FtcPair {
    let full = Space::whole(Carrier::shuffle(ring.clone(), basis));
    let reduced = Space::whole(Carrier::reduced_shuffle(ring.clone(), basis));
    let action = ModuleAction::new("◁-action", |a, m| {
        Ok(Element::Tensor(tensor::shuffle_action(as_tensor(a)?, as_tensor(m)?)?))
    });
    let d = LinearOperator::new("D", full.clone(), reduced.clone(), |a| {
        Ok(Element::Tensor(as_tensor(a)?.reduced_part()))
    });
    let p = LinearOperator::new("P", reduced.clone(), full.clone(), |m| {
        let t = as_tensor(m)?;
        if !t.is_reduced() {
            return Err(Error::UnitInReduced(t.format()));
        }
        Ok(m.clone())
    });
    FtcPair::new("shuffle-ftc", full, reduced, action, d, p)
}

pub fn leibniz_law(d: &LinearOperator, action: &ModuleAction) -> Law {
    let algebra = d.domain().clone();
    let a_car = algebra.carrier().clone();
    let m_car = d.codomain().carrier().clone();
    let (d, action) = (d.clone(), action.clone());
    Law::new("leibniz", vec![("a", algebra.clone()), ("b", algebra)], move |v| {
        let (a, b) = (&v[0], &v[1]);
        let lhs = d.apply(&a_car.mul(a, b)?)?;
        let rhs = m_car.add(&action.apply(a, &d.apply(b)?)?, &action.apply(b, &d.apply(a)?)?)?;
        Ok(vec![Clause::new("D(ab) = aD(b) + bD(a)", &m_car, lhs, rhs)])
    })
}

pub fn rota_baxter_law(p: &LinearOperator, action: &ModuleAction) -> Law {
    let module = p.domain().clone();
    let a_car = p.codomain().carrier().clone();
    let (p, action) = (p.clone(), action.clone());
    Law::new("rota-baxter", vec![("m", module.clone()), ("n", module)], move |v| {
        let (m, n) = (&v[0], &v[1]);
        let (pm, pn) = (p.apply(m)?, p.apply(n)?);
        let lhs = a_car.mul(&pm, &pn)?;
        let rhs = a_car.add(&p.apply(&action.apply(&pm, n)?)?, &p.apply(&action.apply(&pn, m)?)?)?;
        Ok(vec![Clause::new("P(m)P(n) = P(P(m)n) + P(P(n)m)", &a_car, lhs, rhs)])
    })
}

pub fn ftc1_law(pair: &FtcPair) -> Law {
    let pair = pair.clone();
    Law::new("ftc1", vec![("m", pair.module.clone())], move |v| {
        let lhs = pair.d(&pair.p(&v[0])?)?;
        Ok(vec![Clause::new("D(P(m)) = m", pair.module_carrier(), lhs, v[0].clone())])
    })
}

/// FTC2 through its projector criterion: `E` is idempotent, unital and
/// multiplicative, and `D∘E = 0`.
pub fn ftc2_law(pair: &FtcPair) -> Law {
    let pair = pair.clone();
    let algebra = pair.algebra.clone();
    Law::new("ftc2", vec![("a", algebra.clone()), ("b", algebra)], move |v| {
        let (a, b) = (&v[0], &v[1]);
        let car = pair.algebra_carrier();
        let ea = pair.e(a)?;
        let one = car.one()?;
        Ok(vec![
            Clause::new("E(E(a)) = E(a)", car, pair.e(&ea)?, ea.clone()),
            Clause::new("E(1) = 1", car, pair.e(&one)?, one),
            Clause::new("E(ab) = E(a)E(b)", car, pair.e(&car.mul(a, b)?)?, car.mul(&ea, &pair.e(b)?)?),
            Clause::new("D(E(a)) = 0", pair.module_carrier(), pair.d(&ea)?, pair.module_carrier().zero()),
        ])
    })
}

/// The hybrid Rota-Baxter rule together with `D∘P∘D = D`.
pub fn hybrid_law(pair: &FtcPair) -> Law {
    let pair = pair.clone();
    let algebra = pair.algebra.clone();
    Law::new("hybrid-rota-baxter", vec![("a", algebra.clone()), ("b", algebra)], move |v| {
        let (a, b) = (&v[0], &v[1]);
        let car = pair.algebra_carrier();
        let (da, db) = (pair.d(a)?, pair.d(b)?);
        let (pda, pdb) = (pair.p(&da)?, pair.p(&db)?);
        let lhs = car.add(&car.mul(&pda, &pdb)?, &pair.p(&pair.d(&car.mul(a, b)?)?)?)?;
        let rhs = car.add(&car.mul(a, &pdb)?, &car.mul(b, &pda)?)?;
        Ok(vec![
            Clause::new("P(D(a))P(D(b)) + P(D(ab)) = aP(D(b)) + bP(D(a))", car, lhs, rhs),
            Clause::new("D(P(D(a))) = D(a)", pair.module_carrier(), pair.d(&pda)?, da),
        ])
    })
}

/// The module axioms: `1·m = m` and `(ab)·m = a·(b·m)`.
pub fn action_law(pair: &FtcPair) -> Law {
    let pair = pair.clone();
    let algebra = pair.algebra.clone();
    Law::new(
        "module-action",
        vec![("a", algebra.clone()), ("b", algebra), ("m", pair.module.clone())],
        move |v| {
            let (a, b, m) = (&v[0], &v[1], &v[2]);
            let car = pair.algebra_carrier();
            let mc = pair.module_carrier();
            Ok(vec![
                Clause::new("1·m = m", mc, pair.act(&car.one()?, m)?, m.clone()),
                Clause::new("(ab)·m = a·(b·m)", mc, pair.act(&car.mul(a, b)?, m)?, pair.act(a, &pair.act(b, m)?)?),
            ])
        },
    )
}

/// `E(a) = e(a)·1`, where `e(a)` is the unit coefficient of `E(a)`.
pub fn augmented_law(pair: &FtcPair) -> Law {
    let pair = pair.clone();
    Law::new("augmented", vec![("a", pair.algebra.clone())], move |v| {
        let car = pair.algebra_carrier();
        let ea = pair.e(&v[0])?;
        let c = car.unit_coefficient(&ea)?;
        let rhs = car.scale(&c, &car.one()?)?;
        Ok(vec![Clause::new("E(a) = e(a)·1", car, ea, rhs)])
    })
}

/// `P(c·m) = c·P(m)` for constants `c`.
pub fn kerd_linearity_law(pair: &FtcPair) -> Law {
    let pair = pair.clone();
    let constants = Space::kerd_fixedpoints(pair.algebra_carrier().clone(), pair.constant_projector());
    Law::new("p-kerd-linear", vec![("c", constants), ("m", pair.module.clone())], move |v| {
        let (c, m) = (&v[0], &v[1]);
        let car = pair.algebra_carrier();
        Ok(vec![Clause::new("P(c·m) = c·P(m)", car, pair.p(&pair.act(c, m)?)?, car.mul(c, &pair.p(m)?)?)])
    })
}

pub fn check_leibniz(d: &LinearOperator, action: &ModuleAction, sampler: &Sampler) -> Result<LawReport> {
    leibniz_law(d, action).check(sampler)
}

pub fn check_rota_baxter(p: &LinearOperator, action: &ModuleAction, sampler: &Sampler) -> Result<LawReport> {
    rota_baxter_law(p, action).check(sampler)
}

pub fn check_ftc1(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    ftc1_law(pair).check(sampler)
}

pub fn check_ftc2(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    ftc2_law(pair).check(sampler)
}

pub fn check_hybrid_rb(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    hybrid_law(pair).check(sampler)
}

pub fn check_action(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    action_law(pair).check(sampler)
}

pub fn check_augmented(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    augmented_law(pair).check(sampler)
}

pub fn check_kerd_linearity(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    kerd_linearity_law(pair).check(sampler)
}

/// Runs the projector criterion and the hybrid criterion and compares
/// verdicts. Disagreement would be a bug in this library and is reported as
/// a violation carrying the witness of whichever criterion failed.
pub fn check_ftc2_equivalence(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    let ii = check_ftc2(pair, sampler)?;
    let iii = check_hybrid_rb(pair, sampler)?;
    let samples = ii.samples.max(iii.samples);
    if ii.holds() == iii.holds() {
        return Ok(LawReport::holding("ftc2-equivalence", samples, sampler.seed));
    }
    let failing = if ii.holds() { &iii } else { &ii };
    let mut witness: Witness = failing.witness.clone().expect("violations carry witnesses");
    witness.clause = format!("verdicts disagree: ftc2 {}, hybrid {} ({})", ii.status, iii.status, witness.clause);
    Ok(LawReport::violated("ftc2-equivalence", witness, samples, sampler.seed))
}

/// Leibniz, Rota-Baxter, FTC1, FTC2 and the hybrid rule, in that order.
pub fn check_all(pair: &FtcPair, sampler: &Sampler) -> Result<Vec<LawReport>> {
    Ok(vec![
        check_leibniz(&pair.derivation, &pair.action, sampler)?,
        check_rota_baxter(&pair.integration, &pair.action, sampler)?,
        check_ftc1(pair, sampler)?,
        check_ftc2(pair, sampler)?,
        check_hybrid_rb(pair, sampler)?,
    ])
}

/// The augmentation `e: A -> k` read off `E(a)`; meaningful when
/// [`check_augmented`] holds.
pub fn augmentation(pair: &FtcPair) -> LinearOperator {
    let scalars = Space::whole(Carrier::Scalars(pair.algebra_carrier().ring()));
    let pair2 = pair.clone();
    LinearOperator::new("e", pair.algebra.clone(), scalars, move |a| {
        Ok(Element::Scalar(pair2.algebra_carrier().unit_coefficient(&pair2.e(a)?)?))
    })
}

/// A map of pairs (or of Zinbiel algebras): `f` on algebras, `g` on modules.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub name: String,
    pub f: LinearOperator,
    pub g: LinearOperator,
}

/// Morphisms of Zinbiel algebras have the same shape.
pub type ZinMorphismSpec = Morphism;

impl Morphism {
    pub fn new(name: impl Into<String>, f: LinearOperator, g: LinearOperator) -> Self {
        Morphism {
            name: name.into(),
            f,
            g,
        }
    }

    pub fn identity(algebra: &Space, module: &Space) -> Self {
        Morphism::new(
            "id",
            LinearOperator::identity(algebra.clone()),
            LinearOperator::identity(module.clone()),
        )
    }

    pub fn identity_of(pair: &FtcPair) -> Self {
        Morphism::identity(&pair.algebra, &pair.module)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Morphism {
        Morphism::new(
            format!("{}∘{}", next.name, self.name),
            self.f.then(&next.f),
            self.g.then(&next.g),
        )
    }
}

/// `f` unital and multiplicative, `g(a·m) = f(a)·g(m)`, `g∘D = B∘f` and
/// `f∘P = Q∘g`.
pub fn ftc_morphism_law(m: &Morphism, src: &FtcPair, dst: &FtcPair) -> Law {
    let (m, src, dst) = (m.clone(), src.clone(), dst.clone());
    let slots = vec![("a", src.algebra.clone()), ("b", src.algebra.clone()), ("x", src.module.clone())];
    Law::new("ftc-morphism", slots, move |v| {
        let (a, b, x) = (&v[0], &v[1], &v[2]);
        let (sa, ta, tm) = (src.algebra_carrier(), dst.algebra_carrier(), dst.module_carrier());
        let (f, g) = (&m.f, &m.g);
        let fa = f.apply(a)?;
        Ok(vec![
            Clause::new("f(1) = 1", ta, f.apply(&sa.one()?)?, ta.one()?),
            Clause::new("f(ab) = f(a)f(b)", ta, f.apply(&sa.mul(a, b)?)?, ta.mul(&fa, &f.apply(b)?)?),
            Clause::new("g(a·x) = f(a)·g(x)", tm, g.apply(&src.act(a, x)?)?, dst.act(&fa, &g.apply(x)?)?),
            Clause::new("g(D(a)) = B(f(a))", tm, g.apply(&src.d(a)?)?, dst.d(&fa)?),
            Clause::new("f(P(x)) = Q(g(x))", ta, f.apply(&src.p(x)?)?, dst.p(&g.apply(x)?)?),
        ])
    })
}

pub fn check_ftc_morphism(m: &Morphism, src: &FtcPair, dst: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    ftc_morphism_law(m, src, dst).check(sampler)
}
