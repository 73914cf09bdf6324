//! Named evaluable maps between carriers, and the subspaces they cut out.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::carrier::{Carrier, Element};
use crate::error::{Error, Result};
use crate::sample::SampleConfig;
use crate::scalar::Scalar;

type MapFn = Arc<dyn Fn(&Element) -> Result<Element> + Send + Sync>;
type BinFn = Arc<dyn Fn(&Element, &Element) -> Result<Element> + Send + Sync>;

/// A subspace of a carrier described by a decidable predicate.
#[derive(Clone, Debug)]
pub enum Constraint {
    Whole,
    /// `{a : E(a) = a}`; this is how `ker(D)` is represented.
    KerDFixedPoints(Box<LinearOperator>),
    /// `{x : E(x) = 0}`, the module of the derivation construction.
    KerEAnnihilated(Box<LinearOperator>),
}

/// A carrier together with a membership predicate. Samples are projected
/// into the subspace (`E(a)` or `a - E(a)`) so they satisfy the predicate.
#[derive(Clone, Debug)]
pub struct Space {
    carrier: Carrier,
    constraint: Constraint,
}

impl Space {
    pub fn whole(carrier: Carrier) -> Space {
        Space {
            carrier,
            constraint: Constraint::Whole,
        }
    }

    pub fn kerd_fixedpoints(carrier: Carrier, e: LinearOperator) -> Space {
        Space {
            carrier,
            constraint: Constraint::KerDFixedPoints(Box::new(e)),
        }
    }

    pub fn kere_annihilated(carrier: Carrier, e: LinearOperator) -> Space {
        Space {
            carrier,
            constraint: Constraint::KerEAnnihilated(Box::new(e)),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn constraint(&self) -> &Constraint {
        &self.constraint
    }

    pub fn name(&self) -> String {
        match &self.constraint {
            Constraint::Whole => self.carrier.to_string(),
            Constraint::KerDFixedPoints(e) => format!("Fix({}) in {}", e.name(), self.carrier),
            Constraint::KerEAnnihilated(e) => format!("ker({}) in {}", e.name(), self.carrier),
        }
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        if self.carrier.validate(x).is_err() {
            return Ok(false);
        }
        Ok(match &self.constraint {
            Constraint::Whole => true,
            Constraint::KerDFixedPoints(e) => e.apply(x)? == *x,
            Constraint::KerEAnnihilated(e) => e.apply(x)?.is_zero(),
        })
    }

    /// Errors with [`Error::OutsideSubspace`] unless `x` belongs here.
    pub fn require(&self, x: &Element) -> Result<()> {
        self.carrier.validate(x)?;
        if self.contains(x)? {
            Ok(())
        } else {
            Err(Error::OutsideSubspace {
                element: self.carrier.format(x),
                space: self.name(),
            })
        }
    }

    pub fn project(&self, x: &Element) -> Result<Element> {
        match &self.constraint {
            Constraint::Whole => Ok(x.clone()),
            Constraint::KerDFixedPoints(e) => e.apply(x),
            Constraint::KerEAnnihilated(e) => self.carrier.sub(x, &e.apply(x)?),
        }
    }

    pub fn basis_sample(&self, cfg: &SampleConfig) -> Result<Vec<Element>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for b in self.carrier.basis_sample(cfg)? {
            let p = self.project(&b)?;
            if !p.is_zero() && seen.insert(p.clone()) {
                out.push(p);
            }
        }
        if out.is_empty() {
            out.push(self.carrier.zero());
        }
        Ok(out)
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Result<Element> {
        self.project(&self.carrier.sample(rng, cfg)?)
    }

    pub fn format(&self, x: &Element) -> String {
        self.carrier.format(x)
    }
}

/// A named k-linear map. Linearity is a contract checked by sampling, not
/// enforced by construction.
#[derive(Clone)]
pub struct LinearOperator {
    name: String,
    domain: Space,
    codomain: Space,
    map: MapFn,
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.domain.name(), self.codomain.name())
    }
}

impl LinearOperator {
    pub fn new(
        name: impl Into<String>,
        domain: Space,
        codomain: Space,
        map: impl Fn(&Element) -> Result<Element> + Send + Sync + 'static,
    ) -> Self {
        LinearOperator {
            name: name.into(),
            domain,
            codomain,
            map: Arc::new(map),
        }
    }

    pub fn identity(space: Space) -> Self {
        LinearOperator::new("id", space.clone(), space, |x| Ok(x.clone()))
    }

    pub fn zero(domain: Space, codomain: Space) -> Self {
        let target = codomain.carrier().clone();
        LinearOperator::new("0", domain, codomain, move |_| Ok(target.zero()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        (self.map)(x)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The same map viewed between other spaces (restriction or corestriction).
    pub fn between(&self, domain: Space, codomain: Space) -> Self {
        LinearOperator {
            name: self.name.clone(),
            domain,
            codomain,
            map: self.map.clone(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LinearOperator) -> LinearOperator {
        let (f, g) = (self.map.clone(), next.map.clone());
        LinearOperator {
            name: format!("{}∘{}", next.name, self.name),
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            map: Arc::new(move |x| g(&f(x)?)),
        }
    }

    /// `self + other`, pointwise in the codomain.
    pub fn plus(&self, other: &LinearOperator) -> LinearOperator {
        let (f, g) = (self.map.clone(), other.map.clone());
        let target = self.codomain.carrier().clone();
        LinearOperator {
            name: format!("{} + {}", self.name, other.name),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            map: Arc::new(move |x| target.add(&f(x)?, &g(x)?)),
        }
    }

    /// `c · self`.
    pub fn scaled(&self, c: Scalar) -> LinearOperator {
        let f = self.map.clone();
        let target = self.codomain.carrier().clone();
        LinearOperator {
            name: format!("{}*{}", c.plain(), self.name),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            map: Arc::new(move |x| target.scale(&c, &f(x)?)),
        }
    }

    /// `id - self`, for endomorphisms.
    pub fn complement(&self, name: impl Into<String>) -> LinearOperator {
        let f = self.map.clone();
        let target = self.codomain.carrier().clone();
        LinearOperator {
            name: name.into(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            map: Arc::new(move |x| target.sub(x, &f(x)?)),
        }
    }
}

/// A named bilinear operation: module actions `(a, m) -> a·m` and Zinbiel
/// operators `(x, y) -> x ◁ y`.
#[derive(Clone)]
pub struct BinOp {
    name: String,
    f: BinFn,
}

impl fmt::Debug for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl BinOp {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(&Element, &Element) -> Result<Element> + Send + Sync + 'static,
    ) -> Self {
        BinOp {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    /// Multiplication of `carrier`, used as the regular action.
    pub fn multiplication(carrier: &Carrier) -> Self {
        let c = carrier.clone();
        BinOp::new("mul", move |a, b| c.mul(a, b))
    }

    /// Action of the scalars (as [`Carrier::Scalars`] elements) on `carrier`.
    pub fn scalar_action(carrier: &Carrier) -> Self {
        let c = carrier.clone();
        BinOp::new("scale", move |s, x| match s {
            Element::Scalar(s) => c.scale(s, x),
            other => Err(Error::mismatch("scalar", format!("{other:?}"))),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, x: &Element, y: &Element) -> Result<Element> {
        (self.f)(x, y)
    }
}

/// The action of an algebra on a module, `(a, m) -> a·m`.
pub type ModuleAction = BinOp;
