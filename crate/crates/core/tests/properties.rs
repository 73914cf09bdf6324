//! Randomized invariants. Elements are drawn from the library's own sampler,
//! keyed by a proptest-chosen seed, so failures shrink to a seed.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use ftc_core::calculus::{self, hurwitz_pair, polynomial_pair, shuffle_pair, FtcPair};
use ftc_core::carrier::tensor::{shuffle_product_oracle, TensorSum};
use ftc_core::carrier::Element;
use ftc_core::constructions::{self, ftc_from_integration, invert_k_graded, polynomial_derivation_input};
use ftc_core::equivalence::{self, functor_f_unchecked, functor_g_unchecked};
use ftc_core::instances::{self, FTC_CORPUS, MUTANT_CORPUS};
use ftc_core::operator::BinOp;
use ftc_core::scalar::Rational;
use ftc_core::zinbiel::{self, shuffle_zinbiel, zinbiel_from_integration};
use ftc_core::{Carrier, Ring, Sampler, Scalar};

fn draw(c: &Carrier, seed: u64, index: u64) -> Element {
    let s = Sampler::new(seed, 0);
    c.sample(&mut s.rng(index), &s.config).unwrap()
}

fn rings() -> Vec<Ring> {
    vec![Ring::Rationals, Ring::Integers, Ring::modular(6).unwrap(), Ring::modular(7).unwrap()]
}

fn scalar(ring: &Ring, n: i64, d: i64) -> Scalar {
    match ring {
        Ring::Rationals => ring.ratio(n, d).unwrap(),
        _ => ring.int(n),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_ring_axioms(r in 0usize..4, a in (-50i64..50, 1i64..20), b in (-50i64..50, 1i64..20), c in (-50i64..50, 1i64..20)) {
        let ring = &rings()[r];
        let (a, b, c) = (scalar(ring, a.0, a.1), scalar(ring, b.0, b.1), scalar(ring, c.0, c.1));
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        prop_assert_eq!(
            a.checked_add(&b).unwrap().checked_add(&c).unwrap(),
            a.checked_add(&b.checked_add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.checked_mul(&b).unwrap().checked_mul(&c).unwrap(),
            a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
            a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap()
        );
        if let Ok(inv) = a.invert() {
            prop_assert!(a.checked_mul(&inv).unwrap().is_one());
        }
    }

    #[test]
    fn rationals_are_canonical(n in -10_000i64..10_000, d in -500i64..500) {
        prop_assume!(d != 0);
        let r = Rational::new(n, d).unwrap();
        prop_assert!(r.denominator().is_positive());
        prop_assert!(r.numerator().gcd(r.denominator()).is_one());
        if n == 0 {
            prop_assert!(r.numerator().is_zero() && r.denominator().is_one());
        }
        prop_assert_eq!(r.normalize().normalize(), r.normalize());
        let s = Scalar::Rational(r);
        prop_assert_eq!(Ring::Rationals.parse_scalar(&s.to_string()).unwrap(), s);
    }
}

fn carriers() -> Vec<Carrier> {
    vec![
        Carrier::Polynomial(Ring::Rationals),
        Carrier::Polynomial(Ring::modular(5).unwrap()),
        Carrier::hurwitz(Carrier::Scalars(Ring::Integers)),
        Carrier::hurwitz(Carrier::Algebra(instances::dual_numbers())),
        Carrier::shuffle(Ring::Rationals, 3),
        Carrier::reduced_shuffle(Ring::Rationals, 3),
        Carrier::free_rota_baxter(instances::default_rb_algebra()),
        equivalence::semidirect_carrier(&shuffle_zinbiel(&Ring::Rationals, 3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn printing_is_canonical(seed in any::<u64>()) {
        for c in carriers() {
            let x = draw(&c, seed, 0);
            let text = c.format(&x);
            let back = c.parse(&text).unwrap();
            prop_assert_eq!(&back, &x, "{} in {}", text, c);
            prop_assert_eq!(c.format(&back), text);
        }
    }

    #[test]
    fn shuffle_is_commutative_and_associative(seed in any::<u64>()) {
        let c = Carrier::shuffle(Ring::Rationals, 3);
        let (x, y, z) = (draw(&c, seed, 0), draw(&c, seed, 1), draw(&c, seed, 2));
        prop_assert_eq!(c.mul(&x, &y).unwrap(), c.mul(&y, &x).unwrap());
        prop_assert_eq!(
            c.mul(&c.mul(&x, &y).unwrap(), &z).unwrap(),
            c.mul(&x, &c.mul(&y, &z).unwrap()).unwrap()
        );
    }

    #[test]
    fn shuffle_matches_enumeration(u in prop::collection::vec(0usize..3, 0..4), v in prop::collection::vec(0usize..3, 0..4)) {
        let q = Ring::Rationals;
        let c = Carrier::shuffle(q.clone(), 3);
        let w = |l: &[usize]| Element::Tensor(TensorSum::word(q.clone(), 3, l).unwrap());
        prop_assert_eq!(
            c.mul(&w(&u), &w(&v)).unwrap(),
            Element::Tensor(shuffle_product_oracle(&q, 3, &u, &v).unwrap())
        );
    }

    #[test]
    fn hurwitz_is_a_commutative_ring(seed in any::<u64>()) {
        for ring in [Ring::Integers, Ring::modular(4).unwrap()] {
            let c = Carrier::hurwitz(Carrier::Scalars(ring));
            let (x, y, z) = (draw(&c, seed, 0), draw(&c, seed, 1), draw(&c, seed, 2));
            prop_assert_eq!(c.mul(&x, &y).unwrap(), c.mul(&y, &x).unwrap());
            prop_assert_eq!(
                c.mul(&c.mul(&x, &y).unwrap(), &z).unwrap(),
                c.mul(&x, &c.mul(&y, &z).unwrap()).unwrap()
            );
            prop_assert_eq!(c.mul(&c.one().unwrap(), &x).unwrap(), x);
        }
    }

    #[test]
    fn semidirect_is_a_commutative_unital_ring(seed in any::<u64>()) {
        let c = equivalence::semidirect_carrier(&shuffle_zinbiel(&Ring::Rationals, 3));
        let (x, y, z) = (draw(&c, seed, 0), draw(&c, seed, 1), draw(&c, seed, 2));
        prop_assert_eq!(c.mul(&x, &y).unwrap(), c.mul(&y, &x).unwrap());
        prop_assert_eq!(
            c.mul(&c.mul(&x, &y).unwrap(), &z).unwrap(),
            c.mul(&x, &c.mul(&y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(c.mul(&c.one().unwrap(), &x).unwrap(), x);
    }

    #[test]
    fn structure_maps_are_linear(seed in any::<u64>(), k in -4i64..5) {
        for pair in [polynomial_pair(&Ring::Rationals), hurwitz_pair(Carrier::Scalars(Ring::Integers)), shuffle_pair(&Ring::Rationals, 3)] {
            let (a, m) = (pair.algebra_carrier().clone(), pair.module_carrier().clone());
            let ring = a.ring();
            let (x, y) = (draw(&a, seed, 0), draw(&a, seed, 1));
            let (u, v) = (draw(&m, seed, 2), draw(&m, seed, 3));
            let c = ring.int(k);
            prop_assert_eq!(pair.d(&a.add(&x, &a.scale(&c, &y).unwrap()).unwrap()).unwrap(),
                m.add(&pair.d(&x).unwrap(), &m.scale(&c, &pair.d(&y).unwrap()).unwrap()).unwrap());
            prop_assert_eq!(pair.p(&m.add(&u, &m.scale(&c, &v).unwrap()).unwrap()).unwrap(),
                a.add(&pair.p(&u).unwrap(), &a.scale(&c, &pair.p(&v).unwrap()).unwrap()).unwrap());
        }
    }

    #[test]
    fn eta_preserves_products(seed in any::<u64>()) {
        for pair in [polynomial_pair(&Ring::Rationals), shuffle_pair(&Ring::Rationals, 3)] {
            let gf = functor_g_unchecked(&functor_f_unchecked(&pair));
            let eta = equivalence::eta(&pair, &gf);
            let (a, t) = (pair.algebra_carrier(), gf.algebra_carrier());
            let (x, y) = (draw(a, seed, 0), draw(a, seed, 1));
            prop_assert_eq!(
                eta.f.apply(&a.mul(&x, &y).unwrap()).unwrap(),
                t.mul(&eta.f.apply(&x).unwrap(), &eta.f.apply(&y).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn k_inverse_fixes_constants(seed in any::<u64>()) {
        let q = Ring::Rationals;
        let input = polynomial_derivation_input(&q);
        let l = input.d.then(&input.d_circ);
        let k = l.plus(&input.e);
        let k_inv = invert_k_graded(&l, &input.e, constructions::DEFAULT_DEGREE_BOUND).unwrap();
        let x = draw(&Carrier::Polynomial(q), seed, 0);
        let ex = input.e.apply(&x).unwrap();
        prop_assert_eq!(k.apply(&ex).unwrap(), ex.clone());
        prop_assert_eq!(k_inv.apply(&ex).unwrap(), ex.clone());
        prop_assert_eq!(k_inv.apply(&k.apply(&x).unwrap()).unwrap(), x);
    }
}

fn corpus() -> Vec<FtcPair> {
    let s = Sampler::new(0, 100);
    FTC_CORPUS
        .iter()
        .chain(MUTANT_CORPUS)
        .map(|e| instances::ftc_instance(e.name, 12, &s).unwrap())
        .collect()
}

#[test]
fn violations_carry_reproducible_witnesses() {
    let s = Sampler::new(0, 100);
    for pair in corpus() {
        let laws = [
            calculus::leibniz_law(&pair.derivation, &pair.action),
            calculus::rota_baxter_law(&pair.integration, &pair.action),
            calculus::ftc1_law(&pair),
            calculus::ftc2_law(&pair),
            calculus::hybrid_law(&pair),
        ];
        for law in laws {
            let r = law.check(&s).unwrap();
            assert_eq!(r.holds(), r.witness.is_none(), "{} {}", pair.name, r.law);
            if let Some(w) = &r.witness {
                assert!(law.reproduces(w).unwrap(), "{} {}: {}", pair.name, r.law, r.summary());
            }
        }
    }
}

#[test]
fn ftc1_and_hybrid_imply_rota_baxter() {
    let s = Sampler::new(1, 200);
    let mut implied = 0;
    for pair in corpus() {
        let r = calculus::check_all(&pair, &s).unwrap();
        if r[2].holds() && r[4].holds() {
            assert!(r[1].holds(), "{}", pair.name);
            implied += 1;
        }
    }
    assert!(implied >= 10);
}

#[test]
fn integrations_give_zinbiel_algebras() {
    let s = Sampler::new(2, 200);
    let mut built = 0;
    for pair in corpus() {
        if !calculus::check_rota_baxter(&pair.integration, &pair.action, &s).unwrap().holds() {
            assert!(zinbiel_from_integration(&pair.integration, &pair.action, &s).is_err(), "{}", pair.name);
            continue;
        }
        let z = zinbiel_from_integration(&pair.integration, &pair.action, &s).unwrap();
        assert!(zinbiel::check_zinbiel_identity(&z, &s).unwrap().holds(), "{}", pair.name);
        assert!(zinbiel::check_symmetrized(&z, &s).unwrap().holds(), "{}", pair.name);
        built += 1;
    }
    assert!(built >= 15);
}

#[test]
fn construction_from_integration_keeps_the_product() {
    let s = Sampler::new(3, 200);
    let sources = [
        polynomial_pair(&Ring::Rationals),
        hurwitz_pair(Carrier::Scalars(Ring::Integers)),
        {
            let (_, p, action) = constructions::free_rota_baxter(instances::default_rb_algebra());
            FtcPair::new("rb", p.codomain().clone(), p.domain().clone(), action, p.clone(), p)
        },
    ];
    for src in sources {
        let built = ftc_from_integration(&src.integration, &src.action, &s).unwrap();
        let (zin_src, zin_built) = (
            zinbiel_from_integration(&src.integration, &src.action, &s).unwrap(),
            functor_f_unchecked(&built),
        );
        let m = src.module_carrier();
        for i in 0..50 {
            let (x, y) = (draw(m, i, 0), draw(m, i, 1));
            assert_eq!(zin_src.zin(&x, &y).unwrap(), zin_built.zin(&x, &y).unwrap(), "{}", src.name);
        }
    }
}

#[test]
fn module_action_differs_from_multiplication() {
    // (a, x)·y = a·y + y◁x, whereas (a, x)(0, y) also picks up x◁y.
    let z = shuffle_zinbiel(&Ring::Rationals, 3);
    let c = equivalence::semidirect_carrier(&z);
    let act: BinOp = equivalence::semidirect_action(&z);
    let ax = c.parse("(1 | [0])").unwrap();
    let y = z.module_carrier().parse("[1]").unwrap();
    let acted = act.apply(&ax, &y).unwrap();
    let product = c.mul(&ax, &Element::pair(Element::Scalar(Ring::Rationals.zero()), y.clone())).unwrap();
    let (_, part) = product.as_pair().unwrap();
    let m = z.module_carrier();
    assert_eq!(m.format(&acted), "[1] + [1,0]");
    assert_eq!(m.format(part), "[1] + [0,1] + [1,0]");
    assert_ne!(&acted, part);
}
