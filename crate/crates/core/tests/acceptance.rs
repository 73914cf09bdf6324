//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are printed in order and always shown.

use std::process::ExitCode;
use std::time::Instant;

use ftc_core::calculus::{self, ftc1_law, ftc2_law, shuffle_pair, Morphism};
use ftc_core::carrier::poly::Polynomial;
use ftc_core::carrier::tensor::{self, all_words, prepend_letter, shuffle_product_oracle, TensorSum};
use ftc_core::carrier::{Carrier, Element};
use ftc_core::cli;
use ftc_core::constructions::{self, free_rota_baxter, ftc_from_derivation, ftc_from_integration, polynomial_derivation_input};
use ftc_core::equivalence::{self, functor_f, functor_f_map, functor_f_unchecked, functor_g};
use ftc_core::instances::{self, FTC_CORPUS, MUTANT_CORPUS, ZIN_CORPUS};
use ftc_core::laws::LawReport;
use ftc_core::zinbiel::{self, shuffle_zinbiel, symmetrized_product, zinbiel_identity_law};
use ftc_core::{Error, Ring, SampleConfig, Sampler};

type Outcome = Result<String, String>;

const SAMPLES: usize = 500;

fn q() -> Ring {
    Ring::Rationals
}

fn holds(report: LawReport, what: &str) -> Result<(), String> {
    if report.holds() {
        Ok(())
    } else {
        Err(format!("{what}: {}", report.summary()))
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn words(basis: usize, max_len: usize) -> Vec<Vec<usize>> {
    all_words(basis, max_len).into_iter().filter(|w| !w.is_empty()).collect()
}

fn word(w: &[usize]) -> Element {
    Element::Tensor(TensorSum::word(q(), 3, w).unwrap())
}

/// `v ◁ w` from the (m, n)-shuffle enumeration: `v0` prepended to every
/// shuffle of `v_tail` with `w`.
fn zin_oracle(v: &[usize], w: &[usize]) -> Element {
    let sh = shuffle_product_oracle(&q(), 3, &v[1..], w).unwrap();
    Element::Tensor(prepend_letter(v[0], &sh).unwrap())
}

fn xpow(n: u32) -> Element {
    Element::Poly(Polynomial::x_pow(&q(), n))
}

fn monomial(num: i64, den: i64, n: u32) -> Element {
    Element::Poly(Polynomial::monomial(q().ratio(num, den).unwrap(), n).unwrap())
}

fn c1_reference_instances() -> Outcome {
    let names = ["poly-ftc", "hurwitz-ftc", "hurwitz-ftc-mod2", "shuffle-ftc"];
    let mut checks = 0;
    for seed in 0..10 {
        let sampler = Sampler::new(seed, SAMPLES);
        for name in names {
            let pair = instances::ftc_instance(name, constructions::DEFAULT_DEGREE_BOUND, &sampler).map_err(lib)?;
            for report in calculus::check_all(&pair, &sampler).map_err(lib)? {
                checks += 1;
                holds(report, &format!("{name} seed {seed}"))?;
            }
        }
    }
    Ok(format!("{checks} law checks hold (4 instances × 5 laws × seeds 0..9, {SAMPLES} samples)"))
}

fn c2_separating() -> Outcome {
    let sampler = Sampler::new(0, SAMPLES);
    let mut notes = Vec::new();
    for name in ["zero-both", "zero-integration"] {
        let pair = instances::ftc_instance(name, 12, &sampler).map_err(lib)?;
        let ftc1 = calculus::check_ftc1(&pair, &sampler).map_err(lib)?;
        let w = ftc1.witness.as_ref().ok_or(format!("{name}: FTC1 not violated"))?;
        if w.input("m") != Some("1") {
            return Err(format!("{name}: FTC1 witness {:?}, expected m = 1", w.input("m")));
        }
        if !ftc1_law(&pair).reproduces(w).map_err(lib)? {
            return Err(format!("{name}: FTC1 witness does not re-evaluate to an inequality"));
        }
        let ftc2 = calculus::check_ftc2(&pair, &sampler).map_err(lib)?;
        match (name, ftc2.holds()) {
            ("zero-both", true) => {}
            ("zero-integration", false) => {
                if !ftc2_law(&pair).reproduces(ftc2.witness.as_ref().unwrap()).map_err(lib)? {
                    return Err("zero-integration: FTC2 witness does not reproduce".into());
                }
            }
            (_, h) => return Err(format!("{name}: FTC2 holds = {h}")),
        }
        notes.push(format!("{name}: ftc1 violated at m = 1, ftc2 {}", ftc2.status));
    }
    let mut out = Vec::new();
    let code = cli::run(["ftc", "suite"], &mut out, &mut Vec::new());
    let text = String::from_utf8(out).map_err(|e| e.to_string())?;
    let line = text
        .lines()
        .find(|l| l.contains(" zero-both ftc1: violated"))
        .ok_or("suite output has no zero-both ftc1 line")?;
    if code != 0 || !line.contains("at m = 1") || !line.contains("0 != 1") {
        return Err(format!("suite exit {code}, line `{line}`"));
    }
    notes.push("suite prints the witness".into());
    Ok(notes.join("; "))
}

fn c3_ftc2_equivalence() -> Outcome {
    let sampler = Sampler::new(0, SAMPLES);
    let mut n = 0;
    for e in FTC_CORPUS.iter().chain(MUTANT_CORPUS) {
        let pair = instances::ftc_instance(e.name, 12, &sampler).map_err(lib)?;
        holds(calculus::check_ftc2_equivalence(&pair, &sampler).map_err(lib)?, e.name)?;
        n += 1;
    }
    if n < 20 {
        return Err(format!("only {n} instances"));
    }
    Ok(format!("ftc2 and hybrid verdicts agree on {n} instances"))
}

fn c4_zinbiel() -> Outcome {
    let z = shuffle_zinbiel(&q(), 3);
    let ws = words(3, 4);
    let mut cases = Vec::new();
    for a in &ws {
        for b in &ws {
            for c in &ws {
                if a.len() + b.len() + c.len() <= 6 {
                    cases.push(vec![word(a), word(b), word(c)]);
                }
            }
        }
    }
    let n = cases.len();
    holds(zinbiel_identity_law(&z).check_cases(&cases, 0).map_err(lib)?, "zinbiel identity")?;
    for v in &ws {
        for w in &ws {
            if v.len() + w.len() <= 6 && z.zin(&word(v), &word(w)).map_err(lib)? != zin_oracle(v, w) {
                return Err(format!("{v:?} ◁ {w:?} disagrees with the shuffle enumeration"));
            }
        }
    }
    let poly = instances::zin_instance("poly-zinbiel", 12, &Sampler::default()).map_err(lib)?;
    for m in 0..=6u32 {
        for k in 0..=6u32 {
            let got = poly.zin(&xpow(m), &xpow(k)).map_err(lib)?;
            if got != monomial(1, k as i64 + 1, m + k + 1) {
                return Err(format!("x^{m} ◁ x^{k} = {}", poly.module_carrier().format(&got)));
            }
        }
    }
    Ok(format!("identity on {n} word triples; ◁ matches the enumeration; x^m ◁ x^n for m, n ≤ 6"))
}

fn c5_symmetrized() -> Outcome {
    let z = shuffle_zinbiel(&q(), 3);
    let ws = words(3, 4);
    let mut n = 0;
    for v in &ws {
        for w in &ws {
            if v.len() + w.len() > 5 {
                continue;
            }
            let star = symmetrized_product(&z, &word(v), &word(w)).map_err(lib)?;
            if star != Element::Tensor(shuffle_product_oracle(&q(), 3, v, w).unwrap()) {
                return Err(format!("{v:?} ∗ {w:?} differs from the shuffle"));
            }
            n += 1;
        }
    }
    let poly = instances::zin_instance("poly-zinbiel", 12, &Sampler::default()).map_err(lib)?;
    let x3 = symmetrized_product(&poly, &xpow(1), &xpow(1)).map_err(lib)?;
    if x3 != xpow(3) {
        return Err(format!("x ∗ x = {}", poly.module_carrier().format(&x3)));
    }
    for m in 0..=6u32 {
        for k in 0..=6u32 {
            let (m64, k64) = (m as i64, k as i64);
            let expect = monomial(m64 + k64 + 2, (m64 + 1) * (k64 + 1), m + k + 1);
            if symmetrized_product(&poly, &xpow(m), &xpow(k)).map_err(lib)? != expect {
                return Err(format!("x^{m} ∗ x^{k}"));
            }
        }
    }
    Ok(format!("∗ = ⧢ on {n} word pairs; x ∗ x = x^3 and the (m+n+2)/((m+1)(n+1)) table for m, n ≤ 6"))
}

fn c6_equivalence() -> Outcome {
    let base = Sampler::new(0, SAMPLES);
    let poly_s = base.clone().with_config(SampleConfig {
        basis_degree: 8,
        ..SampleConfig::default()
    });
    let hurwitz_s = base.clone().with_config(SampleConfig {
        hurwitz_len: 5,
        hurwitz_basis_len: 5,
        ..SampleConfig::default()
    });
    let shuffle_s = base.clone().with_config(SampleConfig {
        word_basis_len: 3,
        ..SampleConfig::default()
    });
    let mut count = 0;
    for (name, s) in [("poly-ftc", &poly_s), ("hurwitz-dual-numbers", &hurwitz_s), ("shuffle-ftc", &shuffle_s)] {
        let pair = instances::ftc_instance(name, 12, s).map_err(lib)?;
        holds(equivalence::check_roundtrip_ftc(&pair, s).map_err(lib)?, name)?;
        count += 1;
    }
    for e in ZIN_CORPUS.iter().filter(|e| e.is_zinbiel()) {
        let z = instances::zin_instance(e.name, 12, &base).map_err(lib)?;
        holds(equivalence::check_roundtrip_zin(&z, &base).map_err(lib)?, e.name)?;
        let fg = functor_f(&functor_g(&z, &base).map_err(lib)?, &base).map_err(lib)?;
        for r in zinbiel::check_zinbiel(&fg, &base).map_err(lib)? {
            holds(r, &format!("F(G({}))", e.name))?;
        }
        count += 1;
    }
    for e in FTC_CORPUS.iter().filter(|e| e.is_ftc_pair()) {
        let pair = instances::ftc_instance(e.name, 12, &base).map_err(lib)?;
        let gf = functor_g(&functor_f(&pair, &base).map_err(lib)?, &base).map_err(lib)?;
        for r in calculus::check_all(&gf, &base).map_err(lib)? {
            holds(r, &format!("G(F({}))", e.name))?;
        }
        holds(
            equivalence::check_naturality(&Morphism::identity_of(&pair), &pair, &pair, &base).map_err(lib)?,
            &format!("η-naturality along id of {}", e.name),
        )?;
        count += 1;
    }
    // Non-identity morphisms: the isomorphism G(k, Sh+) ≅ Sh and its inverse,
    // and their images under F.
    let g = instances::ftc_instance("shuffle-semidirect", 12, &base).map_err(lib)?;
    let sh = shuffle_pair(&q(), 3);
    let (iso, inv) = (equivalence::shuffle_iso(&g, &sh), equivalence::shuffle_iso_inv(&g, &sh));
    holds(equivalence::check_naturality(&iso, &g, &sh, &base).map_err(lib)?, "η-naturality along shuffle-iso")?;
    holds(equivalence::check_naturality(&inv, &sh, &g, &base).map_err(lib)?, "η-naturality along its inverse")?;
    let f_iso = functor_f_map(&iso, &g, &sh, &base).map_err(lib)?;
    let (fz, fs) = (functor_f_unchecked(&g), functor_f_unchecked(&sh));
    holds(
        equivalence::check_naturality_zin(&f_iso, &fz, &fs, &base).map_err(lib)?,
        "ε-naturality along F(shuffle-iso)",
    )?;
    for e in ZIN_CORPUS.iter().filter(|e| e.is_zinbiel()) {
        let z = instances::zin_instance(e.name, 12, &base).map_err(lib)?;
        let id = Morphism::identity(&z.base, &z.carrier);
        holds(equivalence::check_naturality_zin(&id, &z, &z, &base).map_err(lib)?, e.name)?;
    }
    Ok(format!("{count} instances round-trip and land in the right category; naturality squares commute"))
}

fn c7_augmented() -> Outcome {
    let sampler = Sampler::new(0, SAMPLES);
    let mut notes = Vec::new();
    for (name, expect) in [("poly-ftc", true), ("shuffle-ftc", true), ("hurwitz-dual-numbers", false)] {
        let pair = instances::ftc_instance(name, 12, &sampler).map_err(lib)?;
        let c = equivalence::check_augmented_correspondence(&pair, &sampler).map_err(lib)?;
        holds(c.report.clone(), name)?;
        if c.augmented.holds() != expect {
            return Err(format!("{name}: augmented = {}", c.augmented.holds()));
        }
        if !expect {
            let w = c.augmented.witness.as_ref().unwrap();
            if c.kernel_rank != 2 {
                return Err(format!("{name}: constants have rank {}", c.kernel_rank));
            }
            // E(a) must be a constant that is not a multiple of 1.
            let car = pair.algebra_carrier();
            let a = car.parse(w.input("a").ok_or("witness without `a`")?).map_err(lib)?;
            let ea = pair.e(&a).map_err(lib)?;
            let scalar = car.scale(&car.unit_coefficient(&ea).map_err(lib)?, &car.one().map_err(lib)?).map_err(lib)?;
            if pair.d(&ea).map_err(lib)? != pair.module_carrier().zero() || ea == scalar {
                return Err(format!("{name}: E({}) = {} is not a constant outside k·1", w.input("a").unwrap(), car.format(&ea)));
            }
            notes.push(format!("{name} not augmented, constant {} ∉ k·1", car.format(&ea)));
        } else {
            notes.push(format!("{name} augmented"));
        }
    }
    Ok(notes.join("; "))
}

fn c8_constructions() -> Outcome {
    let sampler = Sampler::new(0, SAMPLES).with_config(SampleConfig {
        word_basis_len: 3,
        ..SampleConfig::default()
    });
    // Free Rota-Baxter algebra on Q[y]/(y^4): letters are y^0..y^3.
    let (_, p, action) = free_rota_baxter(instances::default_rb_algebra());
    let pair = ftc_from_integration(&p, &action, &sampler).map_err(lib)?;
    let z = functor_f_unchecked(&pair);
    let sh = shuffle_zinbiel(&q(), 4);
    let mut n = 0;
    for v in words(4, 3) {
        for w in words(4, 3) {
            let (mv, mw) = (Element::Tensor(TensorSum::word(q(), 4, &v).unwrap()), Element::Tensor(TensorSum::word(q(), 4, &w).unwrap()));
            let got = z.zin(&mv, &mw).map_err(lib)?;
            let want = sh.zin(&mv, &mw).map_err(lib)?;
            if got != want {
                return Err(format!("{v:?} ◁ {w:?}: {} vs shuffle {}", z.module_carrier().format(&got), sh.module_carrier().format(&want)));
            }
            n += 1;
        }
    }
    let input = polynomial_derivation_input(&q()).with_degree_bound(13);
    let pair = ftc_from_derivation(&input, &sampler).map_err(lib)?;
    let k_inv = constructions::invert_k_graded(&input.d.then(&input.d_circ), &input.e, 13).map_err(lib)?;
    for k in 1..=12u32 {
        if k_inv.apply(&xpow(k)).map_err(lib)? != monomial(1, k as i64, k) {
            return Err(format!("K⁻¹(x^{k})"));
        }
        if pair.p(&xpow(k + 1)).map_err(lib)? != monomial(1, k as i64 + 1, k + 1) {
            return Err(format!("P(x^{})", k + 1));
        }
    }
    if k_inv.apply(&xpow(0)).map_err(lib)? != xpow(0) {
        return Err("K⁻¹(1) != 1".into());
    }
    for r in calculus::check_all(&pair, &sampler).map_err(lib)? {
        holds(r, "derivation construction")?;
    }
    holds(calculus::check_augmented(&pair, &sampler).map_err(lib)?, "derivation construction augmented")?;
    let z3 = Ring::modular(3).map_err(lib)?;
    match ftc_from_derivation(&polynomial_derivation_input(&z3), &sampler) {
        Err(Error::SingularComponent { degree: 3, .. }) => {}
        Err(e) => return Err(format!("over Z/3: {e}")),
        Ok(_) => return Err("over Z/3 the construction succeeded".into()),
    }
    Ok(format!("◁ matches the shuffle Zinbiel on {n} word pairs; K⁻¹ and P closed forms for n ≤ 12; Z/3 singular at degree 3"))
}

fn c9_oracle() -> Outcome {
    let car = Carrier::shuffle(q(), 3);
    let ws = all_words(3, 6);
    let mut n = 0;
    for u in &ws {
        for v in &ws {
            if u.len() + v.len() > 6 {
                continue;
            }
            let (eu, ev) = (Element::Tensor(TensorSum::word(q(), 3, u).unwrap()), Element::Tensor(TensorSum::word(q(), 3, v).unwrap()));
            let recursive = tensor::shuffle(eu.as_tensor().unwrap(), ev.as_tensor().unwrap()).map_err(lib)?;
            if recursive != shuffle_product_oracle(&q(), 3, u, v).map_err(lib)? || car.mul(&eu, &ev).map_err(lib)? != Element::Tensor(recursive) {
                return Err(format!("{u:?} ⧢ {v:?}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} word pairs agree"))
}

fn c10_determinism() -> Outcome {
    let run = |args: &[&str]| {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(args.iter().copied(), &mut out, &mut err);
        (code, out)
    };
    let (c1, a) = run(&["ftc", "suite", "--seed", "0", "--format", "json"]);
    let (c2, b) = run(&["ftc", "suite", "--seed", "0", "--format", "json"]);
    if c1 != 0 || c2 != 0 || a != b {
        return Err(format!("suite exits {c1}/{c2}, identical = {}", a == b));
    }
    let matrix: &[(&[&str], i32)] = &[
        (&["ftc", "check-laws", "--instance", "poly-ftc"], 0),
        (&["ftc", "check-laws", "--instance", "shuffle-zinbiel"], 0),
        (&["ftc", "check-laws", "--instance", "zero-integration"], 1),
        (&["ftc", "check-laws", "--instance", "poly-mut-p-shift"], 1),
        (&["ftc", "check-laws", "--instance", "shuffle-zinbiel-concat"], 1),
        (&["ftc", "roundtrip", "--instance", "hurwitz-ftc"], 0),
        (&["ftc", "convert", "ftc-to-zin", "--instance", "zero-integration"], 1),
        (&["ftc", "check-laws", "--instance", "no-such-instance"], 2),
        (&["ftc", "frobnicate"], 2),
        (&["ftc", "shuffle", "[0,"], 2),
        (&["ftc", "check-laws", "--instance", r#"{"construction":"from-derivation","carrier":"poly","ring":"Z/3"}"#], 3),
        (&["ftc", "shuffle", "[0,1]", "[2]"], 0),
    ];
    for (args, want) in matrix {
        let (code, _) = run(args);
        if code != *want {
            return Err(format!("`{}` exited {code}, expected {want}", args[1..].join(" ")));
        }
    }
    Ok(format!("{} bytes of identical JSON; {} exit-code cases", a.len(), matrix.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("reference FTC-pairs satisfy all five laws", c1_reference_instances),
        ("separating examples", c2_separating),
        ("ftc2 / hybrid verdict agreement", c3_ftc2_equivalence),
        ("Zinbiel identity and polynomial ◁", c4_zinbiel),
        ("symmetrized products", c5_symmetrized),
        ("equivalence round trips and naturality", c6_equivalence),
        ("augmented correspondence", c7_augmented),
        ("constructions from integrations and derivations", c8_constructions),
        ("shuffle product vs enumeration oracle", c9_oracle),
        ("determinism and exit codes", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} — {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} — {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
