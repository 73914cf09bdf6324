//! Zinbiel algebras over a base algebra: the identity
//! `(x◁y)◁z = x◁(y◁z) + x◁(z◁y)`, the symmetrized product, `◁_P` built from
//! an integration, and the shuffle Zinbiel algebra on `Sh+(V)`.

use crate::calculus::{as_tensor, Morphism};
use crate::carrier::{tensor, Carrier, Element};
use crate::error::{Error, Result};
use crate::laws::{Clause, Law, LawReport};
use crate::operator::{BinOp, LinearOperator, ModuleAction, Space};
use crate::sample::Sampler;

/// `(A, Z, ◁)` with `A` acting on `Z`. The base is a [`Space`], so `ker(D)`
/// appears through its membership predicate.
#[derive(Clone, Debug)]
pub struct ZinbielInstance {
    pub name: String,
    pub base: Space,
    pub carrier: Space,
    pub action: ModuleAction,
    pub zin: BinOp,
}

impl ZinbielInstance {
    pub fn new(name: impl Into<String>, base: Space, carrier: Space, action: ModuleAction, zin: BinOp) -> Self {
        ZinbielInstance {
            name: name.into(),
            base,
            carrier,
            action,
            zin,
        }
    }

    pub fn base_carrier(&self) -> &Carrier {
        self.base.carrier()
    }

    pub fn module_carrier(&self) -> &Carrier {
        self.carrier.carrier()
    }

    pub fn zin(&self, x: &Element, y: &Element) -> Result<Element> {
        self.zin.apply(x, y)
    }

    pub fn act(&self, a: &Element, x: &Element) -> Result<Element> {
        self.action.apply(a, x)
    }

    pub fn with_zin(&self, name: impl Into<String>, zin: BinOp) -> ZinbielInstance {
        ZinbielInstance {
            name: name.into(),
            zin,
            ..self.clone()
        }
    }
}

/// `x ∗ y = x◁y + y◁x`.
pub fn symmetrized_product(z: &ZinbielInstance, x: &Element, y: &Element) -> Result<Element> {
    z.carrier.require(x)?;
    z.carrier.require(y)?;
    z.module_carrier().add(&z.zin(x, y)?, &z.zin(y, x)?)
}

/// `m ◁_P n = P(n)·m`, over the scalars of `P`'s domain. Fails with
/// [`Error::InvalidIntegration`] unless `P` passes the Rota-Baxter check.
pub fn zinbiel_from_integration(p: &LinearOperator, action: &ModuleAction, sampler: &Sampler) -> Result<ZinbielInstance> {
    let report = crate::calculus::check_rota_baxter(p, action, sampler)?;
    if !report.holds() {
        return Err(Error::InvalidIntegration(Box::new(report)));
    }
    Ok(zinbiel_from_integration_unchecked(p, action))
}

pub(crate) fn zinbiel_from_integration_unchecked(p: &LinearOperator, action: &ModuleAction) -> ZinbielInstance {
    let module = p.domain().clone();
    let base = Space::whole(Carrier::Scalars(module.carrier().ring()));
    ZinbielInstance::new(
        format!("◁_{}", p.name()),
        base,
        module.clone(),
        ModuleAction::scalar_action(module.carrier()),
        integration_zin(p, action),
    )
}

pub(crate) fn integration_zin(p: &LinearOperator, action: &ModuleAction) -> BinOp {
    let (p, action) = (p.clone(), action.clone());
    BinOp::new(format!("◁_{}", p.name()), move |m, n| action.apply(&p.apply(n)?, m))
}

/// `Sh+(V)` with `v ◁ w = v0 ⊗ (v_tail ⧢ w)`, over the scalars.
pub fn shuffle_zinbiel(ring: &crate::scalar::Ring, basis: usize) -> ZinbielInstance {
    let carrier = Carrier::reduced_shuffle(ring.clone(), basis);
    ZinbielInstance::new(
        "shuffle-zinbiel",
        Space::whole(Carrier::Scalars(ring.clone())),
        Space::whole(carrier.clone()),
        ModuleAction::scalar_action(&carrier),
        BinOp::new("◁", |v, w| Ok(Element::Tensor(tensor::zinbiel(as_tensor(v)?, as_tensor(w)?)?))),
    )
}

pub fn zinbiel_identity_law(z: &ZinbielInstance) -> Law {
    let z = z.clone();
    let c = z.carrier.clone();
    Law::new("zinbiel-identity", vec![("x", c.clone()), ("y", c.clone()), ("z", c)], move |v| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let mc = z.module_carrier();
        let lhs = z.zin(&z.zin(x, y)?, w)?;
        let rhs = mc.add(&z.zin(x, &z.zin(y, w)?)?, &z.zin(x, &z.zin(w, y)?)?)?;
        Ok(vec![Clause::new("(x◁y)◁z = x◁(y◁z) + x◁(z◁y)", mc, lhs, rhs)])
    })
}

/// `c(x◁y) = (cx)◁y = x◁(cy)` for base elements `c`.
pub fn bilinearity_law(z: &ZinbielInstance) -> Law {
    let z = z.clone();
    let c = z.carrier.clone();
    Law::new("bilinearity", vec![("c", z.base.clone()), ("x", c.clone()), ("y", c)], move |v| {
        let (a, x, y) = (&v[0], &v[1], &v[2]);
        let mc = z.module_carrier();
        let scaled = z.act(a, &z.zin(x, y)?)?;
        Ok(vec![
            Clause::new("c(x◁y) = (cx)◁y", mc, scaled.clone(), z.zin(&z.act(a, x)?, y)?),
            Clause::new("c(x◁y) = x◁(cy)", mc, scaled, z.zin(x, &z.act(a, y)?)?),
        ])
    })
}

pub fn symmetrized_law(z: &ZinbielInstance) -> Law {
    let z = z.clone();
    let c = z.carrier.clone();
    Law::new("symmetrized-product", vec![("x", c.clone()), ("y", c.clone()), ("z", c)], move |v| {
        let (x, y, w) = (&v[0], &v[1], &v[2]);
        let mc = z.module_carrier();
        let star = |a: &Element, b: &Element| symmetrized_product(&z, a, b);
        Ok(vec![
            Clause::new("x∗y = y∗x", mc, star(x, y)?, star(y, x)?),
            Clause::new("(x∗y)∗z = x∗(y∗z)", mc, star(&star(x, y)?, w)?, star(x, &star(y, w)?)?),
        ])
    })
}

/// `f` unital and multiplicative on the bases, `g(x◁y) = g(x)◁g(y)` and
/// `g(a·x) = f(a)·g(x)`.
pub fn zin_morphism_law(m: &Morphism, src: &ZinbielInstance, dst: &ZinbielInstance) -> Law {
    let (m, src, dst) = (m.clone(), src.clone(), dst.clone());
    let slots = vec![
        ("a", src.base.clone()),
        ("b", src.base.clone()),
        ("x", src.carrier.clone()),
        ("y", src.carrier.clone()),
    ];
    Law::new("zin-morphism", slots, move |v| {
        let (a, b, x, y) = (&v[0], &v[1], &v[2], &v[3]);
        let (sb, tb, tm) = (src.base_carrier(), dst.base_carrier(), dst.module_carrier());
        let (f, g) = (&m.f, &m.g);
        let (fa, gx) = (f.apply(a)?, g.apply(x)?);
        Ok(vec![
            Clause::new("f(1) = 1", tb, f.apply(&sb.one()?)?, tb.one()?),
            Clause::new("f(ab) = f(a)f(b)", tb, f.apply(&sb.mul(a, b)?)?, tb.mul(&fa, &f.apply(b)?)?),
            Clause::new("g(x◁y) = g(x)◁g(y)", tm, g.apply(&src.zin(x, y)?)?, dst.zin(&gx, &g.apply(y)?)?),
            Clause::new("g(a·x) = f(a)·g(x)", tm, g.apply(&src.act(a, x)?)?, dst.act(&fa, &gx)?),
        ])
    })
}

pub fn check_zinbiel_identity(z: &ZinbielInstance, sampler: &Sampler) -> Result<LawReport> {
    zinbiel_identity_law(z).check(sampler)
}

pub fn check_bilinearity(z: &ZinbielInstance, sampler: &Sampler) -> Result<LawReport> {
    bilinearity_law(z).check(sampler)
}

pub fn check_symmetrized(z: &ZinbielInstance, sampler: &Sampler) -> Result<LawReport> {
    symmetrized_law(z).check(sampler)
}

pub fn check_zin_morphism(
    m: &Morphism,
    src: &ZinbielInstance,
    dst: &ZinbielInstance,
    sampler: &Sampler,
) -> Result<LawReport> {
    zin_morphism_law(m, src, dst).check(sampler)
}

/// Zinbiel identity, bilinearity and the symmetrized-product laws.
pub fn check_zinbiel(z: &ZinbielInstance, sampler: &Sampler) -> Result<Vec<LawReport>> {
    Ok(vec![
        check_zinbiel_identity(z, sampler)?,
        check_bilinearity(z, sampler)?,
        check_symmetrized(z, sampler)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{hurwitz_pair, polynomial_pair};
    use crate::scalar::Ring;

    #[test]
    fn shuffle_examples() {
        let z = shuffle_zinbiel(&Ring::Rationals, 3);
        let c = z.module_carrier().clone();
        let p = |s: &str| c.parse(s).unwrap();
        assert_eq!(c.format(&z.zin(&p("[0]"), &p("[1]")).unwrap()), "[0,1]");
        assert_eq!(c.format(&z.zin(&p("[0,1]"), &p("[2]")).unwrap()), "[0,1,2] + [0,2,1]");
        assert_eq!(c.format(&symmetrized_product(&z, &p("[0]"), &p("[1]")).unwrap()), "[0,1] + [1,0]");
        assert!(symmetrized_product(&z, &p("[0]"), &c.zero()).unwrap().is_zero());
    }

    #[test]
    fn unit_operands_are_rejected() {
        let z = shuffle_zinbiel(&Ring::Rationals, 2);
        let full = Carrier::shuffle(Ring::Rationals, 2);
        let one = full.one().unwrap();
        assert!(matches!(z.zin(&one, &one), Err(Error::UnitInReduced(_))));
    }

    #[test]
    fn integration_examples() {
        let pair = polynomial_pair(&Ring::Rationals);
        let z = zinbiel_from_integration(&pair.integration, &pair.action, &Sampler::new(0, 20)).unwrap();
        let c = z.module_carrier().clone();
        let got = z.zin(&c.parse("x^2").unwrap(), &c.parse("x^3").unwrap()).unwrap();
        assert_eq!(c.format(&got), "1/4*x^6");
        let got = symmetrized_product(&z, &c.parse("x").unwrap(), &c.parse("x").unwrap()).unwrap();
        assert_eq!(c.format(&got), "x^3");

        let h = hurwitz_pair(Carrier::Scalars(Ring::Integers));
        let z = zinbiel_from_integration(&h.integration, &h.action, &Sampler::new(0, 20)).unwrap();
        let c = z.module_carrier().clone();
        let one = c.parse("(1)").unwrap();
        assert_eq!(c.format(&z.zin(&one, &one).unwrap()), "(0, 1)");
    }

    #[test]
    fn non_integrations_are_refused() {
        let pair = polynomial_pair(&Ring::Rationals);
        let c = pair.algebra_carrier().clone();
        // P'(x^n) = x^(n+1): P'(1)^2 = x^2 but P'(P'(1)) * 2 = 2x^2.
        let shifted = LinearOperator::new("P'", pair.module.clone(), pair.algebra.clone(), move |m| {
            c.mul(m, &c.parse("x")?)
        });
        let err = zinbiel_from_integration(&shifted, &pair.action, &Sampler::new(0, 5)).unwrap_err();
        assert!(matches!(err, Error::InvalidIntegration(_)));
    }
}
