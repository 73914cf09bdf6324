//! Concrete algebras and modules: polynomials, finite-basis algebras,
//! Hurwitz series, tensor sums and semidirect pairs.

pub mod finite;
pub mod hurwitz;
pub mod poly;
pub mod tensor;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::operator::{BinOp, Space};
use crate::sample::SampleConfig;
use crate::scalar::{Ring, Scalar};
use crate::text::{split_top_level, strip_delimiters, Cursor};

pub use finite::{AlgebraVector, FiniteAlgebra};
pub use hurwitz::HurwitzSeries;
pub use poly::Polynomial;
pub use tensor::{TensorSum, Word};

/// A value in one of the carriers. Elements do not know their carrier; the
/// [`Carrier`] descriptor interprets them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Scalar(Scalar),
    Poly(Polynomial),
    Vector(AlgebraVector),
    Hurwitz(HurwitzSeries),
    Tensor(TensorSum),
    Pair(Box<(Element, Element)>),
}

impl Element {
    pub fn pair(a: Element, z: Element) -> Element {
        Element::Pair(Box::new((a, z)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Scalar(s) => s.is_zero(),
            Element::Poly(p) => p.is_zero(),
            Element::Vector(v) => v.is_zero(),
            Element::Hurwitz(h) => h.is_zero(),
            Element::Tensor(t) => t.is_zero(),
            Element::Pair(p) => p.0.is_zero() && p.1.is_zero(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Element::Scalar(_) => "scalar",
            Element::Poly(_) => "polynomial",
            Element::Vector(_) => "algebra vector",
            Element::Hurwitz(_) => "Hurwitz series",
            Element::Tensor(_) => "tensor sum",
            Element::Pair(_) => "semidirect pair",
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            Element::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_tensor(&self) -> Option<&TensorSum> {
        match self {
            Element::Tensor(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_hurwitz(&self) -> Option<&HurwitzSeries> {
        match self {
            Element::Hurwitz(h) => Some(h),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        match self {
            Element::Scalar(s) => Some(s),
            _ => None,
        }
    }
}

impl From<Polynomial> for Element {
    fn from(p: Polynomial) -> Self {
        Element::Poly(p)
    }
}

impl From<TensorSum> for Element {
    fn from(t: TensorSum) -> Self {
        Element::Tensor(t)
    }
}

impl From<HurwitzSeries> for Element {
    fn from(h: HurwitzSeries) -> Self {
        Element::Hurwitz(h)
    }
}

impl From<Scalar> for Element {
    fn from(s: Scalar) -> Self {
        Element::Scalar(s)
    }
}

impl From<AlgebraVector> for Element {
    fn from(v: AlgebraVector) -> Self {
        Element::Vector(v)
    }
}

/// How words are multiplied in a tensor carrier.
#[derive(Clone, Debug)]
pub enum TensorProduct {
    Shuffle,
    /// Augmented mixable shuffle over the letters of a finite-basis algebra;
    /// this is the free Rota-Baxter algebra on that algebra.
    Mixable(Arc<FiniteAlgebra>),
}

#[derive(Clone, Debug)]
pub struct TensorCarrier {
    pub ring: Ring,
    pub basis: usize,
    /// Reduced carriers have no unit term (`Sh+`, `RB`).
    pub reduced: bool,
    pub product: TensorProduct,
}

/// `A ⋊ Z`: pairs `(a, z)` multiplied by `(ab, az + bx + x ∗ y)`.
pub struct SemidirectCarrier {
    pub name: String,
    pub algebra: Space,
    pub module: Space,
    /// `a · z` for `a` in the algebra.
    pub action: BinOp,
    /// The Zinbiel operator `◁` on the module.
    pub zin: BinOp,
}

impl fmt::Debug for SemidirectCarrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Descriptor that decides validity, zero, one, arithmetic and text of
/// elements.
#[derive(Clone, Debug)]
pub enum Carrier {
    Scalars(Ring),
    Polynomial(Ring),
    Algebra(Arc<FiniteAlgebra>),
    Hurwitz(Arc<Carrier>),
    Tensor(TensorCarrier),
    Semidirect(Arc<SemidirectCarrier>),
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Scalars(r) => write!(f, "{r}"),
            Carrier::Polynomial(r) => write!(f, "{r}[x]"),
            Carrier::Algebra(a) => f.write_str(a.name()),
            Carrier::Hurwitz(b) => write!(f, "H({b})"),
            Carrier::Tensor(t) => match &t.product {
                TensorProduct::Shuffle if t.reduced => write!(f, "Sh+(V{})", t.basis),
                TensorProduct::Shuffle => write!(f, "Sh(V{})", t.basis),
                TensorProduct::Mixable(a) => write!(f, "RB({})", a.name()),
            },
            Carrier::Semidirect(s) => f.write_str(&s.name),
        }
    }
}

fn mismatch(carrier: &Carrier, x: &Element) -> Error {
    Error::mismatch(carrier, x.kind())
}

impl Carrier {
    pub fn shuffle(ring: Ring, basis: usize) -> Carrier {
        Carrier::Tensor(TensorCarrier {
            ring,
            basis,
            reduced: false,
            product: TensorProduct::Shuffle,
        })
    }

    pub fn reduced_shuffle(ring: Ring, basis: usize) -> Carrier {
        Carrier::Tensor(TensorCarrier {
            ring,
            basis,
            reduced: true,
            product: TensorProduct::Shuffle,
        })
    }

    pub fn free_rota_baxter(alg: Arc<FiniteAlgebra>) -> Carrier {
        Carrier::Tensor(TensorCarrier {
            ring: alg.ring().clone(),
            basis: alg.dim(),
            reduced: true,
            product: TensorProduct::Mixable(alg),
        })
    }

    pub fn hurwitz(base: Carrier) -> Carrier {
        Carrier::Hurwitz(Arc::new(base))
    }

    pub fn ring(&self) -> Ring {
        match self {
            Carrier::Scalars(r) | Carrier::Polynomial(r) => r.clone(),
            Carrier::Algebra(a) => a.ring().clone(),
            Carrier::Hurwitz(b) => b.ring(),
            Carrier::Tensor(t) => t.ring.clone(),
            Carrier::Semidirect(s) => s.algebra.carrier().ring(),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            Carrier::Scalars(r) => Element::Scalar(r.zero()),
            Carrier::Polynomial(r) => Element::Poly(Polynomial::zero(r.clone())),
            Carrier::Algebra(a) => Element::Vector(a.zero()),
            Carrier::Hurwitz(_) => Element::Hurwitz(HurwitzSeries::default()),
            Carrier::Tensor(t) => Element::Tensor(TensorSum::zero(t.ring.clone(), t.basis)),
            Carrier::Semidirect(s) => Element::pair(s.algebra.carrier().zero(), s.module.carrier().zero()),
        }
    }

    pub fn one(&self) -> Result<Element> {
        Ok(match self {
            Carrier::Scalars(r) => Element::Scalar(r.one()),
            Carrier::Polynomial(r) => Element::Poly(Polynomial::one(r.clone())),
            Carrier::Algebra(a) => Element::Vector(a.one()),
            Carrier::Hurwitz(b) => Element::Hurwitz(hurwitz::from_entries(vec![b.one()?])),
            Carrier::Tensor(t) => match &t.product {
                TensorProduct::Shuffle if t.reduced => return Err(Error::NotUnital(self.to_string())),
                TensorProduct::Shuffle => Element::Tensor(TensorSum::unit_multiple(t.ring.clone(), t.basis, t.ring.one())?),
                TensorProduct::Mixable(a) => Element::Tensor(TensorSum::word(t.ring.clone(), t.basis, &[a.unit_index()])?),
            },
            Carrier::Semidirect(s) => Element::pair(s.algebra.carrier().one()?, s.module.carrier().zero()),
        })
    }

    /// Checks that `x` is a well-formed element of this carrier.
    pub fn validate(&self, x: &Element) -> Result<()> {
        let ring_ok = |r: &Ring| {
            if *r == self.ring() {
                Ok(())
            } else {
                Err(Error::RingMismatch {
                    left: self.ring(),
                    right: r.clone(),
                })
            }
        };
        match (self, x) {
            (Carrier::Scalars(_), Element::Scalar(s)) => ring_ok(&s.ring()),
            (Carrier::Polynomial(_), Element::Poly(p)) => ring_ok(p.ring()),
            (Carrier::Algebra(a), Element::Vector(v)) => a.check(v),
            (Carrier::Hurwitz(b), Element::Hurwitz(h)) => h.entries().iter().try_for_each(|e| b.validate(e)),
            (Carrier::Tensor(t), Element::Tensor(s)) => {
                ring_ok(s.ring())?;
                if s.basis() != t.basis {
                    return Err(mismatch(self, x));
                }
                if t.reduced && !s.is_reduced() {
                    return Err(Error::UnitInReduced(self.format(x)));
                }
                Ok(())
            }
            (Carrier::Semidirect(s), Element::Pair(p)) => {
                s.algebra.carrier().validate(&p.0)?;
                s.module.carrier().validate(&p.1)
            }
            _ => Err(mismatch(self, x)),
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(match (self, x, y) {
            (Carrier::Scalars(_), Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a.checked_add(b)?),
            (Carrier::Polynomial(_), Element::Poly(a), Element::Poly(b)) => Element::Poly(a.add(b)?),
            (Carrier::Algebra(alg), Element::Vector(a), Element::Vector(b)) => Element::Vector(alg.add(a, b)?),
            (Carrier::Hurwitz(base), Element::Hurwitz(f), Element::Hurwitz(g)) => {
                Element::Hurwitz(hurwitz::add(base, f, g)?)
            }
            (Carrier::Tensor(_), Element::Tensor(a), Element::Tensor(b)) => Element::Tensor(a.add(b)?),
            (Carrier::Semidirect(s), Element::Pair(p), Element::Pair(q)) => Element::pair(
                s.algebra.carrier().add(&p.0, &q.0)?,
                s.module.carrier().add(&p.1, &q.1)?,
            ),
            _ => {
                let bad = if self.validate(x).is_err() { x } else { y };
                return Err(mismatch(self, bad));
            }
        })
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.scale(&self.ring().int(-1), x)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.add(x, &self.neg(y)?)
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        items.into_iter().try_fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Result<Element> {
        Ok(match (self, x) {
            (Carrier::Scalars(_), Element::Scalar(a)) => Element::Scalar(c.checked_mul(a)?),
            (Carrier::Polynomial(_), Element::Poly(p)) => Element::Poly(p.scale(c)?),
            (Carrier::Algebra(alg), Element::Vector(v)) => Element::Vector(alg.scale(c, v)?),
            (Carrier::Hurwitz(base), Element::Hurwitz(f)) => {
                Element::Hurwitz(hurwitz::map(f, |e| base.scale(c, e))?)
            }
            (Carrier::Tensor(_), Element::Tensor(t)) => Element::Tensor(t.scale(c)?),
            (Carrier::Semidirect(s), Element::Pair(p)) => Element::pair(
                s.algebra.carrier().scale(c, &p.0)?,
                s.module.carrier().scale(c, &p.1)?,
            ),
            _ => return Err(mismatch(self, x)),
        })
    }

    /// The carrier's multiplication. Reduced shuffle carriers multiply by
    /// shuffling (they are non-unital algebras).
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(match (self, x, y) {
            (Carrier::Scalars(_), Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a.checked_mul(b)?),
            (Carrier::Polynomial(_), Element::Poly(a), Element::Poly(b)) => Element::Poly(a.mul(b)?),
            (Carrier::Algebra(alg), Element::Vector(a), Element::Vector(b)) => Element::Vector(alg.mul(a, b)?),
            (Carrier::Hurwitz(base), Element::Hurwitz(f), Element::Hurwitz(g)) => {
                Element::Hurwitz(hurwitz::mul(base, f, g)?)
            }
            (Carrier::Tensor(t), Element::Tensor(a), Element::Tensor(b)) => match &t.product {
                TensorProduct::Shuffle => Element::Tensor(tensor::shuffle(a, b)?),
                TensorProduct::Mixable(alg) => Element::Tensor(tensor::mixable_shuffle(alg, a, b)?),
            },
            (Carrier::Semidirect(s), Element::Pair(p), Element::Pair(q)) => {
                let (a, x) = (&p.0, &p.1);
                let (b, y) = (&q.0, &q.1);
                let z = s.module.carrier();
                let parts = [
                    s.action.apply(a, y)?,
                    s.action.apply(b, x)?,
                    s.zin.apply(x, y)?,
                    s.zin.apply(y, x)?,
                ];
                Element::pair(s.algebra.carrier().mul(a, b)?, z.sum(&parts)?)
            }
            _ => {
                let bad = if self.validate(x).is_err() { x } else { y };
                return Err(mismatch(self, bad));
            }
        })
    }

    /// The component along the unit: `c` when `x = c·1 + (terms off the unit)`.
    pub fn unit_coefficient(&self, x: &Element) -> Result<Scalar> {
        Ok(match (self, x) {
            (Carrier::Scalars(_), Element::Scalar(s)) => s.clone(),
            (Carrier::Polynomial(_), Element::Poly(p)) => p.coeff(0),
            (Carrier::Algebra(a), Element::Vector(v)) => v.coeffs()[a.unit_index()].clone(),
            (Carrier::Hurwitz(base), Element::Hurwitz(f)) => match f.entries().first() {
                Some(e) => base.unit_coefficient(e)?,
                None => self.ring().zero(),
            },
            (Carrier::Tensor(t), Element::Tensor(s)) => match &t.product {
                TensorProduct::Shuffle => s.unit_coefficient().clone(),
                TensorProduct::Mixable(a) => s.coefficient(&[a.unit_index()]),
            },
            (Carrier::Semidirect(s), Element::Pair(p)) => s.algebra.carrier().unit_coefficient(&p.0)?,
            _ => return Err(mismatch(self, x)),
        })
    }

    /// Sparse coordinates in the carrier's monomial basis, keyed by a path.
    pub fn coordinates(&self, x: &Element) -> Result<Vec<(Vec<usize>, Scalar)>> {
        Ok(match (self, x) {
            (Carrier::Scalars(_), Element::Scalar(s)) => vec![(vec![], s.clone())],
            (Carrier::Polynomial(_), Element::Poly(p)) => p.terms().map(|(d, c)| (vec![d as usize], c.clone())).collect(),
            (Carrier::Algebra(_), Element::Vector(v)) => {
                v.coeffs().iter().enumerate().map(|(i, c)| (vec![i], c.clone())).collect()
            }
            (Carrier::Hurwitz(base), Element::Hurwitz(f)) => {
                let mut out = Vec::new();
                for (n, e) in f.entries().iter().enumerate() {
                    for (mut key, c) in base.coordinates(e)? {
                        key.insert(0, n);
                        out.push((key, c));
                    }
                }
                out
            }
            (Carrier::Tensor(_), Element::Tensor(t)) => {
                let mut out: Vec<_> = t.terms().map(|(w, c)| (w.letters().to_vec(), c.clone())).collect();
                out.push((vec![], t.unit_coefficient().clone()));
                out
            }
            (Carrier::Semidirect(s), Element::Pair(p)) => {
                let mut out = Vec::new();
                for (tag, (carrier, e)) in [(s.algebra.carrier(), &p.0), (s.module.carrier(), &p.1)].into_iter().enumerate() {
                    for (mut key, c) in carrier.coordinates(e)? {
                        key.insert(0, tag);
                        out.push((key, c));
                    }
                }
                out
            }
            _ => return Err(mismatch(self, x)),
        })
    }

    pub fn format(&self, x: &Element) -> String {
        match (self, x) {
            (Carrier::Scalars(_), Element::Scalar(s)) => s.plain(),
            (Carrier::Polynomial(_), Element::Poly(p)) => p.format(),
            (Carrier::Algebra(a), Element::Vector(v)) => a.format(v),
            (Carrier::Hurwitz(base), Element::Hurwitz(f)) => {
                let parts: Vec<String> = f.entries().iter().map(|e| base.format(e)).collect();
                format!("({})", parts.join(", "))
            }
            (Carrier::Tensor(_), Element::Tensor(t)) => t.format(),
            (Carrier::Semidirect(s), Element::Pair(p)) => {
                format!("({} | {})", s.algebra.carrier().format(&p.0), s.module.carrier().format(&p.1))
            }
            // Not reachable for validated elements; still print something useful.
            (_, other) => format!("<{} outside {self}>", other.kind()),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Element> {
        self.parse_at(text, 0)
    }

    pub(crate) fn parse_at(&self, text: &str, base: usize) -> Result<Element> {
        match self {
            Carrier::Scalars(r) => {
                let mut cur = Cursor::new(text, base);
                let s = r.parse_scalar_at(&mut cur, true)?;
                cur.finish()?;
                Ok(Element::Scalar(s))
            }
            Carrier::Polynomial(r) => Ok(Element::Poly(Polynomial::parse(r, text, base)?)),
            Carrier::Algebra(a) => Ok(Element::Vector(a.parse(text, base)?)),
            Carrier::Hurwitz(b) => {
                let (off, inner) = strip_delimiters(text, base, '(', ')')?;
                if inner.trim().is_empty() {
                    return Ok(Element::Hurwitz(HurwitzSeries::default()));
                }
                let entries = split_top_level(inner, ',')
                    .into_iter()
                    .map(|(o, piece)| b.parse_at(piece, off + o))
                    .collect::<Result<_>>()?;
                Ok(Element::Hurwitz(hurwitz::from_entries(entries)))
            }
            Carrier::Tensor(t) => {
                let allow_unit = !t.reduced;
                Ok(Element::Tensor(TensorSum::parse(&t.ring, t.basis, allow_unit, text, base)?))
            }
            Carrier::Semidirect(s) => {
                let (off, inner) = strip_delimiters(text, base, '(', ')')?;
                let parts = split_top_level(inner, '|');
                if parts.len() != 2 {
                    return Err(Error::syntax(off, "expected `(a | z)`"));
                }
                let a = s.algebra.carrier().parse_at(parts[0].1, off + parts[0].0)?;
                let z = s.module.carrier().parse_at(parts[1].1, off + parts[1].0)?;
                Ok(Element::pair(a, z))
            }
        }
    }

    /// Small spanning set used for the exhaustive part of law checks.
    pub fn basis_sample(&self, cfg: &SampleConfig) -> Result<Vec<Element>> {
        Ok(match self {
            Carrier::Scalars(r) => vec![Element::Scalar(r.one())],
            Carrier::Polynomial(r) => (0..=cfg.basis_degree)
                .map(|d| Element::Poly(Polynomial::x_pow(r, d as u32)))
                .collect(),
            Carrier::Algebra(a) => (0..a.dim()).map(|i| Element::Vector(a.basis_vector(i))).collect(),
            Carrier::Hurwitz(b) => {
                let base = b.basis_sample(cfg)?;
                let mut out = Vec::new();
                for n in 0..cfg.hurwitz_basis_len {
                    for e in &base {
                        let mut entries = vec![b.zero(); n];
                        entries.push(e.clone());
                        out.push(Element::Hurwitz(hurwitz::from_entries(entries)));
                    }
                }
                out
            }
            Carrier::Tensor(t) => {
                let mut out = Vec::new();
                if !t.reduced {
                    out.push(self.one()?);
                }
                for w in tensor::all_words(t.basis, cfg.word_basis_len) {
                    out.push(Element::Tensor(TensorSum::word(t.ring.clone(), t.basis, &w)?));
                }
                out
            }
            Carrier::Semidirect(s) => {
                let mut out = Vec::new();
                for a in s.algebra.basis_sample(cfg)? {
                    out.push(Element::pair(a, s.module.carrier().zero()));
                }
                for z in s.module.basis_sample(cfg)? {
                    out.push(Element::pair(s.algebra.carrier().zero(), z));
                }
                out
            }
        })
    }

    /// A random element drawn under the bounds of `cfg`.
    pub fn sample(&self, rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Result<Element> {
        Ok(match self {
            Carrier::Scalars(r) => Element::Scalar(random_scalar(r, rng, cfg, false)),
            Carrier::Polynomial(r) => {
                let n = rng.gen_range(1..=cfg.poly_terms);
                let terms: Vec<_> = (0..n)
                    .map(|_| (rng.gen_range(0..=cfg.poly_degree) as u32, random_scalar(r, rng, cfg, true)))
                    .collect();
                Element::Poly(Polynomial::from_terms(r.clone(), terms)?)
            }
            Carrier::Algebra(a) => {
                let coeffs = (0..a.dim())
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            random_scalar(a.ring(), rng, cfg, true)
                        } else {
                            a.ring().zero()
                        }
                    })
                    .collect();
                Element::Vector(a.from_coeffs(coeffs)?)
            }
            Carrier::Hurwitz(b) => {
                let len = rng.gen_range(0..=cfg.hurwitz_len);
                let entries = (0..len).map(|_| b.sample(rng, cfg)).collect::<Result<_>>()?;
                Element::Hurwitz(hurwitz::from_entries(entries))
            }
            Carrier::Tensor(t) => {
                let n = rng.gen_range(1..=cfg.tensor_terms);
                let mut terms = Vec::with_capacity(n + 1);
                for _ in 0..n {
                    let len = rng.gen_range(1..=cfg.word_len);
                    let letters = (0..len).map(|_| rng.gen_range(0..t.basis)).collect();
                    terms.push((letters, random_scalar(&t.ring, rng, cfg, true)));
                }
                if !t.reduced && rng.gen_bool(0.5) {
                    terms.push((Vec::new(), random_scalar(&t.ring, rng, cfg, true)));
                }
                Element::Tensor(TensorSum::from_words(t.ring.clone(), t.basis, terms)?)
            }
            Carrier::Semidirect(s) => Element::pair(s.algebra.sample(rng, cfg)?, s.module.sample(rng, cfg)?),
        })
    }

    /// Basis of the degree-`n` piece of a graded carrier.
    pub fn graded_basis(&self, n: usize) -> Result<Vec<Element>> {
        match self {
            Carrier::Polynomial(r) => Ok(vec![Element::Poly(Polynomial::x_pow(r, n as u32))]),
            Carrier::Hurwitz(b) => {
                let base = b.graded_basis(0)?;
                Ok(base
                    .into_iter()
                    .map(|e| {
                        let mut entries = vec![b.zero(); n];
                        entries.push(e);
                        Element::Hurwitz(hurwitz::from_entries(entries))
                    })
                    .collect())
            }
            // A finite algebra or the scalars count as concentrated in degree 0.
            Carrier::Scalars(r) if n == 0 => Ok(vec![Element::Scalar(r.one())]),
            Carrier::Algebra(a) if n == 0 => Ok((0..a.dim()).map(|i| Element::Vector(a.basis_vector(i))).collect()),
            Carrier::Scalars(_) | Carrier::Algebra(_) => Ok(Vec::new()),
            _ => Err(Error::NotGraded(self.to_string())),
        }
    }

    /// Coordinates of the degree-`n` component of `x` in [`graded_basis`](Self::graded_basis).
    pub fn graded_coordinates(&self, x: &Element, n: usize) -> Result<Vec<Scalar>> {
        match (self, x) {
            (Carrier::Polynomial(_), Element::Poly(p)) => Ok(vec![p.coeff(n as u32)]),
            (Carrier::Hurwitz(b), Element::Hurwitz(f)) => match f.entries().get(n) {
                Some(e) => b.graded_coordinates(e, 0),
                None => Ok(vec![self.ring().zero(); b.graded_basis(0)?.len()]),
            },
            (Carrier::Scalars(_), Element::Scalar(s)) => Ok(if n == 0 { vec![s.clone()] } else { Vec::new() }),
            (Carrier::Algebra(_), Element::Vector(v)) => Ok(if n == 0 { v.coeffs().to_vec() } else { Vec::new() }),
            (Carrier::Tensor(_) | Carrier::Semidirect(_), _) => Err(Error::NotGraded(self.to_string())),
            _ => Err(mismatch(self, x)),
        }
    }

    /// Highest degree with a nonzero component.
    pub fn top_degree(&self, x: &Element) -> Result<Option<usize>> {
        match (self, x) {
            (Carrier::Polynomial(_), Element::Poly(p)) => Ok(p.degree().map(|d| d as usize)),
            (Carrier::Hurwitz(_), Element::Hurwitz(f)) => Ok(f.len().checked_sub(1)),
            (Carrier::Scalars(_) | Carrier::Algebra(_), e) => Ok((!e.is_zero()).then_some(0)),
            (Carrier::Tensor(_) | Carrier::Semidirect(_), _) => Err(Error::NotGraded(self.to_string())),
            _ => Err(mismatch(self, x)),
        }
    }

    /// `sum_i coords[i] * graded_basis(n)[i]`.
    pub fn from_graded(&self, n: usize, coords: &[Scalar]) -> Result<Element> {
        let basis = self.graded_basis(n)?;
        let mut acc = self.zero();
        for (c, b) in coords.iter().zip(&basis) {
            acc = self.add(&acc, &self.scale(c, b)?)?;
        }
        Ok(acc)
    }
}

/// A random scalar with numerator in `[-b, b]` and (over `Q`) denominator up
/// to `cfg.max_denominator`.
pub(crate) fn random_scalar(ring: &Ring, rng: &mut ChaCha8Rng, cfg: &SampleConfig, nonzero: bool) -> Scalar {
    loop {
        let num = rng.gen_range(-cfg.coefficient_bound..=cfg.coefficient_bound);
        let s = match ring {
            Ring::Rationals => {
                let den = rng.gen_range(1..=cfg.max_denominator);
                ring.ratio(num, den).expect("nonzero denominator")
            }
            _ => ring.from_bigint(BigInt::from(num)),
        };
        if !(nonzero && s.is_zero()) {
            return s;
        }
    }
}
