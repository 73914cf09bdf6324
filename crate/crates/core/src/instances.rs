//! Built-in named instances: FTC-pairs, Zinbiel algebras, and planted
//! mutations, each with the verdicts its laws are expected to reach.

use std::sync::Arc;

use crate::calculus::{self, as_tensor, FtcPair};
use crate::carrier::{tensor, Carrier, Element, FiniteAlgebra};
use crate::constructions::{self, InstanceSpec};
use crate::equivalence::{functor_f_unchecked, functor_g_unchecked};
use crate::error::{Error, Result};
use crate::operator::{BinOp, LinearOperator, Space};
use crate::sample::Sampler;
use crate::scalar::Ring;
use crate::zinbiel::{self, zinbiel_from_integration_unchecked, ZinbielInstance};

/// The five laws reported by [`calculus::check_all`], in order.
pub const FTC_LAWS: [&str; 5] = ["leibniz", "rota-baxter", "ftc1", "ftc2", "hybrid-rota-baxter"];

/// The laws reported by [`zinbiel::check_zinbiel`], in order.
pub const ZIN_LAWS: [&str; 3] = ["zinbiel-identity", "bilinearity", "symmetrized-product"];

const ALL: [bool; 5] = [true; 5];

/// A named FTC-pair and the expected verdict of each law in [`FTC_LAWS`].
#[derive(Clone, Copy, Debug)]
pub struct FtcEntry {
    pub name: &'static str,
    pub expected: [bool; 5],
    /// Whether `E` lands in `k·1`.
    pub augmented: bool,
}

impl FtcEntry {
    pub fn is_ftc_pair(&self) -> bool {
        self.expected == ALL
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ZinEntry {
    pub name: &'static str,
    pub expected: [bool; 3],
}

impl ZinEntry {
    pub fn is_zinbiel(&self) -> bool {
        self.expected.iter().all(|&b| b)
    }
}

const fn ftc(name: &'static str, expected: [bool; 5], augmented: bool) -> FtcEntry {
    FtcEntry {
        name,
        expected,
        augmented,
    }
}

const T: bool = true;
const F: bool = false;

pub const FTC_CORPUS: &[FtcEntry] = &[
    ftc("poly-ftc", ALL, true),
    ftc("hurwitz-ftc", ALL, true),
    ftc("hurwitz-ftc-mod2", ALL, true),
    ftc("hurwitz-ftc-mod4", ALL, true),
    ftc("hurwitz-dual-numbers", ALL, false),
    ftc("shuffle-ftc", ALL, true),
    ftc("shuffle-semidirect", ALL, true),
    ftc("rb-free", ALL, true),
    ftc("poly-from-integration", ALL, true),
    ftc("poly-derivation-construction", ALL, true),
    ftc("poly-diff-algebra", ALL, true),
    ftc("hurwitz-diagonal", ALL, true),
    ftc("zero-integration", [T, T, F, F, F], false),
    ftc("zero-both", [T, T, F, T, T], false),
];

pub const MUTANT_CORPUS: &[FtcEntry] = &[
    ftc("poly-mut-p-shift", [T, F, F, F, F], false),
    ftc("poly-mut-p-double", [T, T, F, F, F], false),
    ftc("poly-mut-d-shift", [F, T, F, F, F], false),
    ftc("poly-mut-d-double", [T, T, F, F, F], false),
    ftc("hurwitz-mut-p-double", [T, T, F, F, F], false),
    ftc("hurwitz-mut-d-double", [T, T, F, F, F], false),
    ftc("shuffle-mut-d-neg", [T, T, F, F, F], false),
    ftc("shuffle-mut-p-neg", [T, T, F, F, F], false),
];

pub const ZIN_CORPUS: &[ZinEntry] = &[
    ZinEntry { name: "shuffle-zinbiel", expected: [T, T, T] },
    ZinEntry { name: "poly-zinbiel", expected: [T, T, T] },
    ZinEntry { name: "hurwitz-zinbiel", expected: [T, T, T] },
    ZinEntry { name: "rb-zinbiel", expected: [T, T, T] },
    ZinEntry { name: "f-poly-ftc", expected: [T, T, T] },
    ZinEntry { name: "f-hurwitz-dual-numbers", expected: [T, T, T] },
    ZinEntry { name: "f-shuffle-ftc", expected: [T, T, T] },
    ZinEntry { name: "shuffle-zinbiel-concat", expected: [F, T, F] },
];

/// `Q[y]/(y^4)`, the default algebra under the free Rota-Baxter algebra.
pub fn default_rb_algebra() -> Arc<FiniteAlgebra> {
    Arc::new(FiniteAlgebra::truncated_polynomial(Ring::Rationals, "y", 4))
}

pub fn dual_numbers() -> Arc<FiniteAlgebra> {
    Arc::new(FiniteAlgebra::truncated_polynomial(Ring::Rationals, "y", 2))
}

pub fn ftc_entry(name: &str) -> Option<&'static FtcEntry> {
    FTC_CORPUS.iter().chain(MUTANT_CORPUS).find(|e| e.name == name)
}

pub fn zin_entry(name: &str) -> Option<&'static ZinEntry> {
    ZIN_CORPUS.iter().find(|e| e.name == name)
}

fn q() -> Ring {
    Ring::Rationals
}

/// The same map multiplied by `c`.
fn scaled(op: &LinearOperator, c: i64, name: &str) -> LinearOperator {
    op.scaled(op.codomain().carrier().ring().int(c)).renamed(name)
}

/// Builds a named FTC-pair. Constructions validate their inputs with
/// `sampler`.
pub fn ftc_instance(name: &str, degree_bound: usize, sampler: &Sampler) -> Result<FtcPair> {
    let poly = || calculus::polynomial_pair(&q());
    let hurwitz_z = || calculus::hurwitz_pair(Carrier::Scalars(Ring::Integers));
    let shuffle = || calculus::shuffle_pair(&q(), 3);
    let mut pair = match name {
        "poly-ftc" => poly(),
        "hurwitz-ftc" => hurwitz_z(),
        "hurwitz-ftc-mod2" => calculus::hurwitz_pair(Carrier::Scalars(Ring::modular(2)?)),
        "hurwitz-ftc-mod4" => calculus::hurwitz_pair(Carrier::Scalars(Ring::modular(4)?)),
        "hurwitz-dual-numbers" => calculus::hurwitz_pair(Carrier::Algebra(dual_numbers())),
        "shuffle-ftc" => shuffle(),
        "shuffle-semidirect" => functor_g_unchecked(&zinbiel::shuffle_zinbiel(&q(), 3)),
        "rb-free" => {
            let (_, p, action) = constructions::free_rota_baxter(default_rb_algebra());
            constructions::ftc_from_integration(&p, &action, sampler)?
        }
        "poly-from-integration" => {
            let p = poly();
            constructions::ftc_from_integration(&p.integration, &p.action, sampler)?
        }
        "poly-derivation-construction" => {
            let input = constructions::polynomial_derivation_input(&q()).with_degree_bound(degree_bound);
            constructions::ftc_from_derivation(&input, sampler)?
        }
        "poly-diff-algebra" => constructions::ftc_from_diff_algebra(
            &constructions::euler_derivation(&q()),
            &constructions::evaluation_at_zero(&q()),
            degree_bound,
            sampler,
        )?,
        "hurwitz-diagonal" => {
            let carrier = Carrier::hurwitz(Carrier::Scalars(q()));
            constructions::ftc_from_diff_algebra(
                &constructions::hurwitz_diagonal_derivation(&carrier),
                &constructions::hurwitz_head(&carrier),
                degree_bound,
                sampler,
            )?
        }
        "zero-integration" => {
            let p = poly();
            let zero = LinearOperator::zero(p.module.clone(), p.algebra.clone()).renamed("0");
            p.with_operators(name, p.derivation.clone(), zero)
        }
        "zero-both" => {
            let p = poly();
            let d = LinearOperator::zero(p.algebra.clone(), p.module.clone()).renamed("0");
            let i = LinearOperator::zero(p.module.clone(), p.algebra.clone()).renamed("0");
            p.with_operators(name, d, i)
        }
        "poly-mut-p-shift" => {
            // P'(x^n) = x^(n+1)
            let p = poly();
            let car = p.algebra_carrier().clone();
            let x = car.parse("x")?;
            let shift = LinearOperator::new("P'", p.module.clone(), p.algebra.clone(), move |m| car.mul(m, &x));
            p.with_operators(name, p.derivation.clone(), shift)
        }
        "poly-mut-p-double" => {
            let p = poly();
            p.with_operators(name, p.derivation.clone(), scaled(&p.integration, 2, "2P"))
        }
        "poly-mut-d-shift" => {
            // D'(x^n) = x^(n-1), D'(1) = 0
            let p = poly();
            let d = LinearOperator::new("D'", p.algebra.clone(), p.module.clone(), |a| {
                Ok(Element::Poly(calculus::as_poly(a)?.map_terms(|n, c| Ok((n > 0).then(|| (n - 1, c.clone()))))?))
            });
            p.with_operators(name, d, p.integration.clone())
        }
        "poly-mut-d-double" => {
            let p = poly();
            p.with_operators(name, scaled(&p.derivation, 2, "2D"), p.integration.clone())
        }
        "hurwitz-mut-p-double" => {
            let p = hurwitz_z();
            p.with_operators(name, p.derivation.clone(), scaled(&p.integration, 2, "2P"))
        }
        "hurwitz-mut-d-double" => {
            let p = hurwitz_z();
            p.with_operators(name, scaled(&p.derivation, 2, "2D"), p.integration.clone())
        }
        "shuffle-mut-d-neg" => {
            let p = shuffle();
            p.with_operators(name, scaled(&p.derivation, -1, "-D"), p.integration.clone())
        }
        "shuffle-mut-p-neg" => {
            let p = shuffle();
            p.with_operators(name, p.derivation.clone(), scaled(&p.integration, -1, "-P"))
        }
        _ => return Err(Error::UnknownInstance(name.to_string())),
    };
    pair.name = name.to_string();
    Ok(pair)
}

/// Builds a named Zinbiel instance.
pub fn zin_instance(name: &str, degree_bound: usize, sampler: &Sampler) -> Result<ZinbielInstance> {
    let from = |pair: FtcPair| zinbiel_from_integration_unchecked(&pair.integration, &pair.action);
    let mut z = match name {
        "shuffle-zinbiel" => zinbiel::shuffle_zinbiel(&q(), 3),
        "poly-zinbiel" => from(calculus::polynomial_pair(&q())),
        "hurwitz-zinbiel" => from(calculus::hurwitz_pair(Carrier::Scalars(Ring::Integers))),
        "rb-zinbiel" => {
            let (_, p, action) = constructions::free_rota_baxter(default_rb_algebra());
            zinbiel_from_integration_unchecked(&p, &action)
        }
        "shuffle-zinbiel-concat" => zinbiel::shuffle_zinbiel(&q(), 3).with_zin(
            name,
            BinOp::new("concat", |v, w| Ok(Element::Tensor(tensor::concatenation(as_tensor(v)?, as_tensor(w)?)?))),
        ),
        _ => match name.strip_prefix("f-") {
            Some(pair) if ftc_entry(pair).is_some() => functor_f_unchecked(&ftc_instance(pair, degree_bound, sampler)?),
            _ => return Err(Error::UnknownInstance(name.to_string())),
        },
    };
    z.name = name.to_string();
    Ok(z)
}

/// What `--instance` can name.
#[derive(Clone, Debug)]
pub enum Instance {
    Ftc(FtcPair),
    Zinbiel(ZinbielInstance),
}

/// Resolves a built-in name, an inline JSON spec, or a path to a JSON spec.
pub fn resolve(text: &str, degree_bound: usize, sampler: &Sampler) -> Result<Instance> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return Ok(Instance::Ftc(InstanceSpec::parse(trimmed)?.build(sampler)?));
    }
    if text.ends_with(".json") {
        let json = std::fs::read_to_string(text).map_err(|e| Error::InvalidSpec(format!("{text}: {e}")))?;
        return Ok(Instance::Ftc(InstanceSpec::parse(&json)?.build(sampler)?));
    }
    if ftc_entry(text).is_some() {
        return Ok(Instance::Ftc(ftc_instance(text, degree_bound, sampler)?));
    }
    Ok(Instance::Zinbiel(zin_instance(text, degree_bound, sampler)?))
}

/// Every built-in name.
pub fn names() -> Vec<&'static str> {
    FTC_CORPUS
        .iter()
        .chain(MUTANT_CORPUS)
        .map(|e| e.name)
        .chain(ZIN_CORPUS.iter().map(|e| e.name))
        .collect()
}

/// The kernel space of a built-in pair, used by examples and tests.
pub fn constants(pair: &FtcPair) -> Space {
    Space::kerd_fixedpoints(pair.algebra_carrier().clone(), pair.constant_projector())
}
