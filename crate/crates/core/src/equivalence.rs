//! The two functors between FTC-pairs and Zinbiel algebras, the natural
//! isomorphisms `η: id -> G∘F` and `ε: F∘G -> id`, and their checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::calculus::{self, as_tensor, FtcPair, Morphism};
use crate::carrier::{Carrier, Element, SemidirectCarrier, TensorSum};
use crate::error::{Error, Result};
use crate::laws::{Clause, Law, LawReport};
use crate::linalg;
use crate::operator::{BinOp, LinearOperator, ModuleAction, Space};
use crate::sample::Sampler;
use crate::zinbiel::{self, integration_zin, ZinbielInstance};

fn pair_parts(x: &Element) -> Result<(&Element, &Element)> {
    x.as_pair().ok_or_else(|| Error::mismatch("semidirect pair", format!("{x:?}")))
}

/// `F(A ⇄ M) = (ker D, M, ◁_P)`, after checking the five FTC laws and the
/// module axioms.
pub fn functor_f(pair: &FtcPair, sampler: &Sampler) -> Result<ZinbielInstance> {
    let mut reports = calculus::check_all(pair, sampler)?;
    reports.push(calculus::check_action(pair, sampler)?);
    if reports.iter().any(|r| !r.holds()) {
        return Err(Error::InvalidFtcPair(reports));
    }
    Ok(functor_f_unchecked(pair))
}

pub fn functor_f_unchecked(pair: &FtcPair) -> ZinbielInstance {
    let base = Space::kerd_fixedpoints(pair.algebra_carrier().clone(), pair.constant_projector());
    ZinbielInstance::new(
        format!("F({})", pair.name),
        base,
        pair.module.clone(),
        pair.action.clone(),
        integration_zin(&pair.integration, &pair.action),
    )
}

/// `G(A, Z) = (A⋊Z ⇄ Z)` with `π_Z` and `ι_Z`, after checking the Zinbiel
/// identity and bilinearity.
pub fn functor_g(zin: &ZinbielInstance, sampler: &Sampler) -> Result<FtcPair> {
    let reports = vec![
        zinbiel::check_zinbiel_identity(zin, sampler)?,
        zinbiel::check_bilinearity(zin, sampler)?,
    ];
    if reports.iter().any(|r| !r.holds()) {
        return Err(Error::InvalidZinbiel(reports));
    }
    Ok(functor_g_unchecked(zin))
}

pub fn semidirect_carrier(zin: &ZinbielInstance) -> Carrier {
    Carrier::Semidirect(Arc::new(SemidirectCarrier {
        name: format!("{}⋊{}", zin.base.name(), zin.carrier.name()),
        algebra: zin.base.clone(),
        module: zin.carrier.clone(),
        action: zin.action.clone(),
        zin: zin.zin.clone(),
    }))
}

/// `(a, x)·y = a·y + y◁x`.
pub fn semidirect_action(zin: &ZinbielInstance) -> ModuleAction {
    let z = zin.clone();
    BinOp::new("⋊-action", move |ax, y| {
        let (a, x) = pair_parts(ax)?;
        z.module_carrier().add(&z.act(a, y)?, &z.zin(y, x)?)
    })
}

pub fn functor_g_unchecked(zin: &ZinbielInstance) -> FtcPair {
    let algebra = Space::whole(semidirect_carrier(zin));
    let base = zin.base_carrier().clone();
    let d = LinearOperator::new("π", algebra.clone(), zin.carrier.clone(), |ax| Ok(pair_parts(ax)?.1.clone()));
    let p = LinearOperator::new("ι", zin.carrier.clone(), algebra.clone(), move |x| {
        Ok(Element::pair(base.zero(), x.clone()))
    });
    FtcPair::new(
        format!("G({})", zin.name),
        algebra,
        zin.carrier.clone(),
        semidirect_action(zin),
        d,
        p,
    )
}

/// Fails with [`Error::RestrictionEscapes`] if `f` sends a constant of `src`
/// to a non-constant of `dst` on the sampled constants.
fn check_restriction(f: &LinearOperator, src: &FtcPair, dst: &FtcPair, sampler: &Sampler) -> Result<()> {
    let src_base = Space::kerd_fixedpoints(src.algebra_carrier().clone(), src.constant_projector());
    let (f2, e2) = (f.clone(), dst.constant_projector());
    let target = dst.algebra_carrier().clone();
    let law = Law::new("restriction", vec![("c", src_base)], move |v| {
        let fc = f2.apply(&v[0])?;
        Ok(vec![Clause::new("E'(f(c)) = f(c)", &target, e2.apply(&fc)?, fc)])
    });
    let report = law.check(sampler)?;
    match report.witness {
        None => Ok(()),
        Some(w) => Err(Error::RestrictionEscapes {
            map: f.name().to_string(),
            witness: w.input("c").unwrap_or_default().to_string(),
        }),
    }
}

/// `F(f, g) = (f restricted to ker D, g)`.
pub fn functor_f_map(m: &Morphism, src: &FtcPair, dst: &FtcPair, sampler: &Sampler) -> Result<Morphism> {
    let report = calculus::check_ftc_morphism(m, src, dst, sampler)?;
    if !report.holds() {
        return Err(Error::InvalidMorphism(Box::new(report)));
    }
    check_restriction(&m.f, src, dst, sampler)?;
    let (fs, fd) = (functor_f_unchecked(src), functor_f_unchecked(dst));
    Ok(Morphism::new(
        format!("F({})", m.name),
        m.f.between(fs.base.clone(), fd.base.clone()),
        m.g.clone(),
    ))
}

/// `G(f, g) = (f⋊g, g)` with `(f⋊g)(a, x) = (f(a), g(x))`.
pub fn functor_g_map(m: &Morphism, src: &ZinbielInstance, dst: &ZinbielInstance, sampler: &Sampler) -> Result<Morphism> {
    let report = zinbiel::check_zin_morphism(m, src, dst, sampler)?;
    if !report.holds() {
        return Err(Error::InvalidMorphism(Box::new(report)));
    }
    Ok(functor_g_map_unchecked(m, src, dst))
}

pub fn functor_g_map_unchecked(m: &Morphism, src: &ZinbielInstance, dst: &ZinbielInstance) -> Morphism {
    let (gs, gd) = (functor_g_unchecked(src), functor_g_unchecked(dst));
    let (f, g) = (m.f.clone(), m.g.clone());
    let fg = LinearOperator::new(format!("{}⋊{}", f.name(), g.name()), gs.algebra.clone(), gd.algebra.clone(), move |ax| {
        let (a, x) = pair_parts(ax)?;
        Ok(Element::pair(f.apply(a)?, g.apply(x)?))
    });
    Morphism::new(format!("G({})", m.name), fg, m.g.clone())
}

/// `η1(a) = (E(a), D(a))`, `η2 = id`, from `pair` to `gf = G(F(pair))`.
pub fn eta(pair: &FtcPair, gf: &FtcPair) -> Morphism {
    let p = pair.clone();
    let f = LinearOperator::new("η1", pair.algebra.clone(), gf.algebra.clone(), move |a| {
        Ok(Element::pair(p.e(a)?, p.d(a)?))
    });
    let g = LinearOperator::identity(pair.module.clone()).between(pair.module.clone(), gf.module.clone());
    Morphism::new("η", f, g.renamed("η2"))
}

/// `η1⁻¹(c, m) = c + P(m)`, `η2⁻¹ = id`.
pub fn eta_inv(pair: &FtcPair, gf: &FtcPair) -> Morphism {
    let p = pair.clone();
    let f = LinearOperator::new("η1⁻¹", gf.algebra.clone(), pair.algebra.clone(), move |cm| {
        let (c, m) = pair_parts(cm)?;
        p.algebra_carrier().add(c, &p.p(m)?)
    });
    let g = LinearOperator::identity(gf.module.clone()).between(gf.module.clone(), pair.module.clone());
    Morphism::new("η⁻¹", f, g.renamed("η2⁻¹"))
}

/// `ε1(a, 0) = a`, `ε2 = id`, from `fg = F(G(zin))` to `zin`.
pub fn epsilon(zin: &ZinbielInstance, fg: &ZinbielInstance) -> Morphism {
    let f = LinearOperator::new("ε1", fg.base.clone(), zin.base.clone(), |a0| Ok(pair_parts(a0)?.0.clone()));
    let g = LinearOperator::identity(fg.carrier.clone()).between(fg.carrier.clone(), zin.carrier.clone());
    Morphism::new("ε", f, g.renamed("ε2"))
}

/// `ε1⁻¹(a) = (a, 0)`, `ε2⁻¹ = id`.
pub fn epsilon_inv(zin: &ZinbielInstance, fg: &ZinbielInstance) -> Morphism {
    let zero = zin.module_carrier().zero();
    let f = LinearOperator::new("ε1⁻¹", zin.base.clone(), fg.base.clone(), move |a| {
        Ok(Element::pair(a.clone(), zero.clone()))
    });
    let g = LinearOperator::identity(zin.carrier.clone()).between(zin.carrier.clone(), fg.carrier.clone());
    Morphism::new("ε⁻¹", f, g.renamed("ε2⁻¹"))
}

/// `η⁻¹∘η = id` on `A` and `M`, and `η∘η⁻¹ = id` on `A⋊M` and `M`.
pub fn roundtrip_ftc_law(pair: &FtcPair) -> Law {
    let gf = functor_g_unchecked(&functor_f_unchecked(pair));
    let (e, ei) = (eta(pair, &gf), eta_inv(pair, &gf));
    let (a_car, m_car, g_car) = (
        pair.algebra_carrier().clone(),
        pair.module_carrier().clone(),
        gf.algebra_carrier().clone(),
    );
    let slots = vec![("a", pair.algebra.clone()), ("m", pair.module.clone()), ("cm", gf.algebra.clone())];
    Law::new("roundtrip-ftc", slots, move |v| {
        let (a, m, cm) = (&v[0], &v[1], &v[2]);
        Ok(vec![
            Clause::new("η1⁻¹(η1(a)) = a", &a_car, ei.f.apply(&e.f.apply(a)?)?, a.clone()),
            Clause::new("η1(η1⁻¹(c, m)) = (c, m)", &g_car, e.f.apply(&ei.f.apply(cm)?)?, cm.clone()),
            Clause::new("η2⁻¹(η2(m)) = m", &m_car, ei.g.apply(&e.g.apply(m)?)?, m.clone()),
        ])
    })
}

/// `ε⁻¹∘ε = id` on `F(G(Z))` and `ε∘ε⁻¹ = id` on `Z`.
pub fn roundtrip_zin_law(zin: &ZinbielInstance) -> Law {
    let fg = functor_f_unchecked(&functor_g_unchecked(zin));
    let (e, ei) = (epsilon(zin, &fg), epsilon_inv(zin, &fg));
    let (b_car, m_car, fb_car) = (
        zin.base_carrier().clone(),
        zin.module_carrier().clone(),
        fg.base_carrier().clone(),
    );
    let slots = vec![("a", zin.base.clone()), ("x", zin.carrier.clone()), ("a0", fg.base.clone())];
    Law::new("roundtrip-zin", slots, move |v| {
        let (a, x, a0) = (&v[0], &v[1], &v[2]);
        Ok(vec![
            Clause::new("ε1(ε1⁻¹(a)) = a", &b_car, e.f.apply(&ei.f.apply(a)?)?, a.clone()),
            Clause::new("ε1⁻¹(ε1(a, 0)) = (a, 0)", &fb_car, ei.f.apply(&e.f.apply(a0)?)?, a0.clone()),
            Clause::new("ε2(ε2⁻¹(x)) = x", &m_car, e.g.apply(&ei.g.apply(x)?)?, x.clone()),
        ])
    })
}

pub fn check_roundtrip_ftc(pair: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    roundtrip_ftc_law(pair).check(sampler)
}

pub fn check_roundtrip_zin(zin: &ZinbielInstance, sampler: &Sampler) -> Result<LawReport> {
    roundtrip_zin_law(zin).check(sampler)
}

/// `G(F(f, g))∘η_src = η_dst∘(f, g)`, pointwise on `A` and `M`.
pub fn eta_naturality_law(m: &Morphism, src: &FtcPair, dst: &FtcPair) -> Law {
    let (gf_src, gf_dst) = (
        functor_g_unchecked(&functor_f_unchecked(src)),
        functor_g_unchecked(&functor_f_unchecked(dst)),
    );
    let (eta_s, eta_d) = (eta(src, &gf_src), eta(dst, &gf_dst));
    let lifted = functor_g_map_unchecked(
        &Morphism::new(m.name.clone(), m.f.clone(), m.g.clone()),
        &functor_f_unchecked(src),
        &functor_f_unchecked(dst),
    );
    let m = m.clone();
    let (t_alg, t_mod) = (gf_dst.algebra_carrier().clone(), dst.module_carrier().clone());
    Law::new("eta-naturality", vec![("a", src.algebra.clone()), ("m", src.module.clone())], move |v| {
        let (a, x) = (&v[0], &v[1]);
        Ok(vec![
            Clause::new(
                "G(F(f))(η1(a)) = η1'(f(a))",
                &t_alg,
                lifted.f.apply(&eta_s.f.apply(a)?)?,
                eta_d.f.apply(&m.f.apply(a)?)?,
            ),
            Clause::new(
                "g(η2(m)) = η2'(g(m))",
                &t_mod,
                lifted.g.apply(&eta_s.g.apply(x)?)?,
                eta_d.g.apply(&m.g.apply(x)?)?,
            ),
        ])
    })
}

/// `ε_dst∘F(G(f, g)) = (f, g)∘ε_src`, pointwise on `F(G(src))`.
pub fn epsilon_naturality_law(m: &Morphism, src: &ZinbielInstance, dst: &ZinbielInstance) -> Law {
    let (fg_src, fg_dst) = (
        functor_f_unchecked(&functor_g_unchecked(src)),
        functor_f_unchecked(&functor_g_unchecked(dst)),
    );
    let (eps_s, eps_d) = (epsilon(src, &fg_src), epsilon(dst, &fg_dst));
    let lifted = functor_g_map_unchecked(m, src, dst);
    let m = m.clone();
    let (t_base, t_mod) = (dst.base_carrier().clone(), dst.module_carrier().clone());
    Law::new("epsilon-naturality", vec![("a0", fg_src.base.clone()), ("x", src.carrier.clone())], move |v| {
        let (a0, x) = (&v[0], &v[1]);
        Ok(vec![
            Clause::new(
                "ε1'((f⋊g)(a, 0)) = f(ε1(a, 0))",
                &t_base,
                eps_d.f.apply(&lifted.f.apply(a0)?)?,
                m.f.apply(&eps_s.f.apply(a0)?)?,
            ),
            Clause::new(
                "ε2'(g(x)) = g(ε2(x))",
                &t_mod,
                eps_d.g.apply(&lifted.g.apply(x)?)?,
                m.g.apply(&eps_s.g.apply(x)?)?,
            ),
        ])
    })
}

pub fn check_naturality(m: &Morphism, src: &FtcPair, dst: &FtcPair, sampler: &Sampler) -> Result<LawReport> {
    eta_naturality_law(m, src, dst).check(sampler)
}

pub fn check_naturality_zin(
    m: &Morphism,
    src: &ZinbielInstance,
    dst: &ZinbielInstance,
    sampler: &Sampler,
) -> Result<LawReport> {
    epsilon_naturality_law(m, src, dst).check(sampler)
}

/// `k⋊Sh+(V) -> Sh(V)`, `(c, t) ↦ c·1 + t`, with `g = id` on `Sh+(V)`.
/// `g_pair` is `G(k, Sh+(V))` and `shuffle` the shuffle pair.
pub fn shuffle_iso(g_pair: &FtcPair, shuffle: &FtcPair) -> Morphism {
    let f = LinearOperator::new("(c,t)↦c+t", g_pair.algebra.clone(), shuffle.algebra.clone(), |ct| {
        let (c, t) = pair_parts(ct)?;
        let c = c.as_scalar().ok_or_else(|| Error::mismatch("scalar", format!("{c:?}")))?;
        let t = as_tensor(t)?;
        let unit = TensorSum::unit_multiple(t.ring().clone(), t.basis(), c.clone())?;
        Ok(Element::Tensor(unit.add(t)?))
    });
    let g = LinearOperator::identity(g_pair.module.clone()).between(g_pair.module.clone(), shuffle.module.clone());
    Morphism::new("shuffle-iso", f, g)
}

/// `Sh(V) -> k⋊Sh+(V)`, `s ↦ (unit coefficient, reduced part)`.
pub fn shuffle_iso_inv(g_pair: &FtcPair, shuffle: &FtcPair) -> Morphism {
    let f = LinearOperator::new("s↦(c,t)", shuffle.algebra.clone(), g_pair.algebra.clone(), |s| {
        let s = as_tensor(s)?;
        Ok(Element::pair(Element::Scalar(s.unit_coefficient().clone()), Element::Tensor(s.reduced_part())))
    });
    let g = LinearOperator::identity(shuffle.module.clone()).between(shuffle.module.clone(), g_pair.module.clone());
    Morphism::new("shuffle-iso⁻¹", f, g)
}

#[derive(Clone, Debug, Serialize)]
pub struct AugmentedCorrespondence {
    /// Whether the verdicts agree: augmented exactly when the constants have
    /// rank 1.
    pub report: LawReport,
    pub augmented: LawReport,
    /// Rank of `E` on the carrier's basis sample, i.e. the dimension of the
    /// sampled constants.
    pub kernel_rank: usize,
}

/// Checks that a pair is augmented exactly when its constants are `k·1`:
/// the augmented check and the rank of `E` on a spanning sample must agree.
pub fn check_augmented_correspondence(pair: &FtcPair, sampler: &Sampler) -> Result<AugmentedCorrespondence> {
    let augmented = calculus::check_augmented(pair, sampler)?;
    let car = pair.algebra_carrier();
    let mut keys = BTreeMap::new();
    let mut images = Vec::new();
    for b in car.basis_sample(&sampler.config)? {
        let coords = car.coordinates(&pair.e(&b)?)?;
        for (k, _) in &coords {
            let next = keys.len();
            keys.entry(k.clone()).or_insert(next);
        }
        images.push(coords);
    }
    let ring = car.ring();
    let rows: linalg::Matrix = images
        .into_iter()
        .map(|coords| {
            let mut row = vec![ring.zero(); keys.len()];
            for (k, c) in coords {
                row[keys[&k]] = c;
            }
            row
        })
        .collect();
    let kernel_rank = linalg::rank(&ring, &rows)?;
    let agrees = augmented.holds() == (kernel_rank == 1);
    let report = if agrees {
        LawReport::holding("augmented-correspondence", augmented.samples, sampler.seed)
    } else {
        let mut w = augmented.witness.clone().unwrap_or_else(|| crate::laws::Witness {
            inputs: Vec::new(),
            clause: String::new(),
            lhs: String::new(),
            rhs: String::new(),
            values: Vec::new(),
        });
        w.clause = format!("augmented = {} but constants have rank {kernel_rank}", augmented.holds());
        LawReport::violated("augmented-correspondence", w, augmented.samples, sampler.seed)
    };
    Ok(AugmentedCorrespondence {
        report,
        augmented,
        kernel_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{hurwitz_pair, polynomial_pair, shuffle_pair};
    use crate::carrier::FiniteAlgebra;
    use crate::scalar::Ring;
    use crate::zinbiel::shuffle_zinbiel;

    fn small() -> Sampler {
        Sampler::new(0, 40)
    }

    #[test]
    fn eta_on_polynomials() {
        let pair = polynomial_pair(&Ring::Rationals);
        let gf = functor_g(&functor_f(&pair, &small()).unwrap(), &small()).unwrap();
        let (e, ei) = (eta(&pair, &gf), eta_inv(&pair, &gf));
        let a = pair.algebra_carrier().parse("x^2 + 3").unwrap();
        let image = e.f.apply(&a).unwrap();
        assert_eq!(gf.algebra_carrier().format(&image), "(3 | 2*x)");
        assert_eq!(ei.f.apply(&image).unwrap(), a);
        let one = pair.algebra_carrier().one().unwrap();
        assert_eq!(gf.algebra_carrier().format(&e.f.apply(&one).unwrap()), "(1 | 0)");
        assert!(calculus::check_ftc_morphism(&e, &pair, &gf, &small()).unwrap().holds());
        assert!(calculus::check_ftc_morphism(&ei, &gf, &pair, &small()).unwrap().holds());
    }

    #[test]
    fn g_projections() {
        let z = shuffle_zinbiel(&Ring::Rationals, 2);
        let g = functor_g(&z, &small()).unwrap();
        let x = g.module_carrier().parse("[0,1]").unwrap();
        assert_eq!(g.d(&g.p(&x).unwrap()).unwrap(), x);
        let ax = g.algebra_carrier().parse("(2 | [1])").unwrap();
        assert_eq!(g.algebra_carrier().format(&g.e(&ax).unwrap()), "(2 | 0)");
    }

    #[test]
    fn shuffle_iso_examples() {
        let (ring, basis) = (Ring::Rationals, 3);
        let g = functor_g(&shuffle_zinbiel(&ring, basis), &small()).unwrap();
        let sh = shuffle_pair(&ring, basis);
        let iso = shuffle_iso(&g, &sh);
        let gc = g.algebra_carrier();
        let f = |s: &str| sh.algebra_carrier().format(&iso.f.apply(&gc.parse(s).unwrap()).unwrap());
        assert_eq!(f("(1 | 0)"), "1");
        assert_eq!(f("(0 | [0])"), "[0]");
        let prod = gc.mul(&gc.parse("(0 | [0])").unwrap(), &gc.parse("(0 | [1])").unwrap()).unwrap();
        assert_eq!(sh.algebra_carrier().format(&iso.f.apply(&prod).unwrap()), "[0,1] + [1,0]");
        assert!(calculus::check_ftc_morphism(&iso, &g, &sh, &small()).unwrap().holds());
        let inv = shuffle_iso_inv(&g, &sh);
        assert!(calculus::check_ftc_morphism(&inv, &sh, &g, &small()).unwrap().holds());
    }

    #[test]
    fn correspondence() {
        let poly = check_augmented_correspondence(&polynomial_pair(&Ring::Rationals), &small()).unwrap();
        assert!(poly.augmented.holds() && poly.kernel_rank == 1 && poly.report.holds());
        let dual = Arc::new(FiniteAlgebra::truncated_polynomial(Ring::Rationals, "y", 2));
        let h = check_augmented_correspondence(&hurwitz_pair(Carrier::Algebra(dual)), &small()).unwrap();
        assert!(!h.augmented.holds() && h.kernel_rank == 2 && h.report.holds());
        assert_eq!(h.augmented.witness.as_ref().unwrap().lhs, "(y)");
    }
}
