use std::cmp::Ordering;
use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;

use super::finite::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{coefficient_term, Ring, Scalar};
use crate::text::{join_signed, split_top_level, strip_delimiters, Cursor};

/// A nonempty tensor word `v0 ⊗ v1 ⊗ ... ⊗ vn` of basis indices. Words are
/// ordered by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        assert!(!letters.is_empty(), "words are nonempty");
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn head(&self) -> usize {
        self.0[0]
    }

    pub fn tail(&self) -> &[usize] {
        &self.0[1..]
    }

    fn prepend(letter: usize, rest: &[usize]) -> Word {
        let mut v = Vec::with_capacity(rest.len() + 1);
        v.push(letter);
        v.extend_from_slice(rest);
        Word(v)
    }

    pub(crate) fn format(&self) -> String {
        format!("[{}]", self.0.iter().join(","))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A formal sum of words plus a coefficient on the empty word (the unit).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSum {
    ring: Ring,
    basis: usize,
    unit: Scalar,
    terms: BTreeMap<Word, Scalar>,
}

impl TensorSum {
    pub fn zero(ring: Ring, basis: usize) -> Self {
        TensorSum {
            unit: ring.zero(),
            ring,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// `c * 1`.
    pub fn unit_multiple(ring: Ring, basis: usize, c: Scalar) -> Result<Self> {
        let mut t = TensorSum::zero(ring, basis);
        t.add_unit(&c)?;
        Ok(t)
    }

    /// A single word with coefficient one.
    pub fn word(ring: Ring, basis: usize, letters: &[usize]) -> Result<Self> {
        let one = ring.one();
        Self::from_words(ring, basis, [(letters.to_vec(), one)])
    }

    pub fn from_words(
        ring: Ring,
        basis: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let mut t = TensorSum::zero(ring, basis);
        for (letters, c) in terms {
            if letters.is_empty() {
                t.add_unit(&c)?;
            } else {
                t.add_term(Word(letters), &c)?;
            }
        }
        Ok(t)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> usize {
        self.basis
    }

    pub fn unit_coefficient(&self) -> &Scalar {
        &self.unit
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, letters: &[usize]) -> Scalar {
        if letters.is_empty() {
            return self.unit.clone();
        }
        self.terms
            .get(&Word(letters.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.terms.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.unit.is_zero()
    }

    /// The same sum with the unit coefficient dropped.
    pub fn reduced_part(&self) -> TensorSum {
        TensorSum {
            unit: self.ring.zero(),
            ..self.clone()
        }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    fn add_unit(&mut self, c: &Scalar) -> Result<()> {
        self.unit = self.unit.checked_add(c)?;
        Ok(())
    }

    fn add_term(&mut self, w: Word, c: &Scalar) -> Result<()> {
        if let Some(&letter) = w.0.iter().find(|&&l| l >= self.basis) {
            return Err(Error::LetterOutOfRange {
                letter,
                basis: self.basis,
            });
        }
        let sum = match self.terms.get(&w) {
            Some(old) => old.checked_add(c)?,
            None => {
                if c.ring() != self.ring {
                    return Err(Error::RingMismatch {
                        left: self.ring.clone(),
                        right: c.ring(),
                    });
                }
                c.clone()
            }
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
        Ok(())
    }

    fn check_same(&self, other: &TensorSum) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        if self.basis != other.basis {
            return Err(Error::mismatch(
                format!("tensor words over a basis of size {}", self.basis),
                format!("basis of size {}", other.basis),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorSum) -> Result<TensorSum> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_unit(&other.unit)?;
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> TensorSum {
        TensorSum {
            ring: self.ring.clone(),
            basis: self.basis,
            unit: self.unit.neg(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<TensorSum> {
        let mut out = TensorSum::zero(self.ring.clone(), self.basis);
        out.add_unit(&self.unit.checked_mul(c)?)?;
        for (w, a) in self.terms() {
            out.add_term(w.clone(), &a.checked_mul(c)?)?;
        }
        Ok(out)
    }

    fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::UnitInReduced(self.format()))
        }
    }

    pub(crate) fn format(&self) -> String {
        let mut terms: Vec<(bool, String)> = self
            .terms
            .iter()
            .map(|(w, c)| coefficient_term(c, Some(&w.format())))
            .collect();
        if !self.unit.is_zero() {
            terms.push(coefficient_term(&self.unit, Some("1")));
        }
        join_signed(terms)
    }

    /// Grammar: signed terms `c*[i,j]`, `[i,j]`, `c*1`, `c` (the last two
    /// only when `allow_unit`).
    pub(crate) fn parse(ring: &Ring, basis: usize, allow_unit: bool, text: &str, base: usize) -> Result<TensorSum> {
        let mut cur = Cursor::new(text, base);
        let mut out = TensorSum::zero(ring.clone(), basis);
        let mut first = true;
        loop {
            if cur.at_end() {
                if first {
                    return Err(cur.error("empty tensor sum"));
                }
                break;
            }
            let negative = if first {
                cur.eat('-')
            } else if cur.eat('+') {
                false
            } else if cur.eat('-') {
                true
            } else {
                return Err(cur.error("expected `+` or `-`"));
            };
            first = false;
            let at = cur.position();
            let (coeff, word) = if cur.peek_digit() {
                let c = ring.parse_unsigned_coefficient(&mut cur)?;
                if cur.eat('*') {
                    cur.skip_ws();
                    if cur.peek() == Some('[') {
                        (c, Some(parse_word(&mut cur)?))
                    } else if cur.eat('1') {
                        (c, None)
                    } else {
                        return Err(cur.error("expected a word or `1`"));
                    }
                } else {
                    (c, None)
                }
            } else {
                (ring.one(), Some(parse_word(&mut cur)?))
            };
            let coeff = if negative { coeff.neg() } else { coeff };
            match word {
                Some(w) => {
                    if let Some(&letter) = w.iter().find(|&&l| l >= basis) {
                        return Err(Error::syntax(at, format!("letter {letter} outside basis of size {basis}")));
                    }
                    out.add_term(Word(w), &coeff)?
                }
                None if allow_unit => out.add_unit(&coeff)?,
                None => {
                    if !coeff.is_zero() {
                        return Err(Error::syntax(at, "reduced tensor sums have no unit term"));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn parse_word(cur: &mut Cursor<'_>) -> Result<Vec<usize>> {
    cur.expect('[')?;
    let mut letters = vec![cur.small_unsigned()?];
    while cur.eat(',') {
        letters.push(cur.small_unsigned()?);
    }
    cur.expect(']')?;
    Ok(letters)
}

/// Parses a single bracketed word such as `[0,1]`.
pub fn parse_word_text(text: &str) -> Result<Vec<usize>> {
    let (base, inner) = strip_delimiters(text, 0, '[', ']')?;
    split_top_level(inner, ',')
        .into_iter()
        .map(|(off, piece)| {
            let mut cur = Cursor::new(piece, base + off);
            let n = cur.small_unsigned()?;
            cur.finish()?;
            Ok(n)
        })
        .collect()
}

/// Shuffle of two letter sequences by the head recursion, as multiplicities.
pub fn shuffle_words(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out = BTreeMap::new();
    shuffle_into(a, b, &mut Vec::with_capacity(a.len() + b.len()), &mut out);
    out
}

fn shuffle_into(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, BigInt>) {
    if a.is_empty() || b.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(a);
        w.extend_from_slice(b);
        *out.entry(w).or_insert_with(|| BigInt::from(0)) += 1;
        return;
    }
    prefix.push(a[0]);
    shuffle_into(&a[1..], b, prefix, out);
    prefix.pop();
    prefix.push(b[0]);
    shuffle_into(a, &b[1..], prefix, out);
    prefix.pop();
}

/// Independent oracle: sums the words obtained from every choice of the
/// positions the letters of `u` occupy among `len(u) + len(v)` slots.
pub fn shuffle_product_oracle(ring: &Ring, basis: usize, u: &[usize], v: &[usize]) -> Result<TensorSum> {
    let n = u.len() + v.len();
    let mut out = TensorSum::zero(ring.clone(), basis);
    let one = ring.one();
    for positions in (0..n).combinations(u.len()) {
        let mut word = Vec::with_capacity(n);
        let (mut i, mut j) = (0, 0);
        for slot in 0..n {
            if positions.contains(&slot) {
                word.push(u[i]);
                i += 1;
            } else {
                word.push(v[j]);
                j += 1;
            }
        }
        if word.is_empty() {
            out.add_unit(&one)?;
        } else {
            out.add_term(Word(word), &one)?;
        }
    }
    Ok(out)
}

fn add_multiplicities(
    out: &mut TensorSum,
    prefix: Option<usize>,
    shuffles: BTreeMap<Vec<usize>, BigInt>,
    coeff: &Scalar,
) -> Result<()> {
    for (w, count) in shuffles {
        let c = coeff.checked_mul(&out.ring.from_bigint(count))?;
        let letters = match prefix {
            Some(p) => Word::prepend(p, &w).0,
            None => w,
        };
        if letters.is_empty() {
            out.add_unit(&c)?;
        } else {
            out.add_term(Word(letters), &c)?;
        }
    }
    Ok(())
}

/// The shuffle product, extended bilinearly with `1 ⧢ v = v`.
pub fn shuffle(u: &TensorSum, v: &TensorSum) -> Result<TensorSum> {
    u.check_same(v)?;
    let mut out = TensorSum::zero(u.ring.clone(), u.basis);
    out.add_unit(&u.unit.checked_mul(&v.unit)?)?;
    if !u.unit.is_zero() {
        let part = v.reduced_part().scale(&u.unit)?;
        out = out.add(&part)?;
    }
    if !v.unit.is_zero() {
        let part = u.reduced_part().scale(&v.unit)?;
        out = out.add(&part)?;
    }
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            add_multiplicities(&mut out, None, shuffle_words(&a.0, &b.0), &ca.checked_mul(cb)?)?;
        }
    }
    Ok(out)
}

/// The Zinbiel operator of the reduced shuffle algebra,
/// `v ◁ w = v0 ⊗ (v_tail ⧢ w)`. Both operands must be reduced.
pub fn zinbiel(v: &TensorSum, w: &TensorSum) -> Result<TensorSum> {
    v.check_same(w)?;
    v.require_reduced()?;
    w.require_reduced()?;
    let mut out = TensorSum::zero(v.ring.clone(), v.basis);
    for (a, ca) in v.terms() {
        for (b, cb) in w.terms() {
            add_multiplicities(&mut out, Some(a.head()), shuffle_words(a.tail(), &b.0), &ca.checked_mul(cb)?)?;
        }
    }
    Ok(out)
}

/// Action of the full shuffle algebra on the reduced one: `a · m = m ◁ a`,
/// where the unit of `a` acts as the identity.
pub fn shuffle_action(a: &TensorSum, m: &TensorSum) -> Result<TensorSum> {
    a.check_same(m)?;
    m.require_reduced()?;
    let scaled = m.scale(&a.unit)?;
    scaled.add(&zinbiel(m, &a.reduced_part())?)
}

/// The augmented mixable shuffle `a ⧢' b = a0b0 ⊗ (a_tail ⧢ b_tail)`, with the
/// first letters multiplied in `alg`. Operands must be reduced.
pub fn mixable_shuffle(alg: &FiniteAlgebra, s: &TensorSum, t: &TensorSum) -> Result<TensorSum> {
    s.check_same(t)?;
    s.require_reduced()?;
    t.require_reduced()?;
    if s.basis != alg.dim() {
        return Err(Error::mismatch(
            format!("words over the basis of {}", alg.name()),
            format!("basis of size {}", s.basis),
        ));
    }
    let mut out = TensorSum::zero(s.ring.clone(), s.basis);
    for (a, ca) in s.terms() {
        for (b, cb) in t.terms() {
            let c = ca.checked_mul(cb)?;
            let tails = shuffle_words(a.tail(), b.tail());
            for (letter, k) in alg.letter_product(a.head(), b.head())? {
                add_multiplicities(&mut out, Some(*letter), tails.clone(), &c.checked_mul(k)?)?;
            }
        }
    }
    Ok(out)
}

/// `w -> [letter] ++ w` on every word; the unit coefficient must vanish.
pub fn prepend_letter(letter: usize, t: &TensorSum) -> Result<TensorSum> {
    t.require_reduced()?;
    let mut out = TensorSum::zero(t.ring.clone(), t.basis);
    for (w, c) in t.terms() {
        out.add_term(Word::prepend(letter, &w.0), c)?;
    }
    Ok(out)
}

/// Concatenation `v0 ⊗ v_tail ⊗ w`: keeps only one summand of the shuffle.
/// Used to plant Zinbiel violations.
pub fn concatenation(v: &TensorSum, w: &TensorSum) -> Result<TensorSum> {
    v.check_same(w)?;
    let mut out = TensorSum::zero(v.ring.clone(), v.basis);
    for (a, ca) in v.terms() {
        for (b, cb) in w.terms() {
            let mut letters = a.0.clone();
            letters.extend_from_slice(&b.0);
            out.add_term(Word(letters), &ca.checked_mul(cb)?)?;
        }
    }
    Ok(out)
}

/// Every word of length `1..=max_len` over `basis` letters, in canonical order.
pub fn all_words(basis: usize, max_len: usize) -> Vec<Vec<usize>> {
    (1..=max_len)
        .flat_map(|len| (0..len).map(|_| 0..basis).multi_cartesian_product())
        .collect()
}

/// Every word of exactly length `len`.
pub fn words_of_len(basis: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len).map(|_| 0..basis).multi_cartesian_product().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[usize]) -> TensorSum {
        TensorSum::word(Ring::Rationals, 4, letters).unwrap()
    }

    #[test]
    fn canonical_order_and_text() {
        let t = TensorSum::from_words(
            Ring::Rationals,
            3,
            [
                (vec![2, 0, 1], Ring::Rationals.int(1)),
                (vec![0, 1, 2], Ring::Rationals.int(1)),
                (vec![1], Ring::Rationals.int(-2)),
                (vec![], Ring::Rationals.int(3)),
            ],
        )
        .unwrap();
        assert_eq!(t.format(), "-2*[1] + [0,1,2] + [2,0,1] + 3*1");
        let back = TensorSum::parse(&Ring::Rationals, 3, true, &t.format(), 0).unwrap();
        assert_eq!(back, t);
        assert!(TensorSum::parse(&Ring::Rationals, 3, false, "[0] + 1", 0).is_err());
        assert!(TensorSum::parse(&Ring::Rationals, 3, true, "[3]", 0).is_err());
    }

    #[test]
    fn shuffle_examples() {
        let s = shuffle(&w(&[0, 1]), &w(&[2])).unwrap();
        assert_eq!(s.format(), "[0,1,2] + [0,2,1] + [2,0,1]");
        let s = shuffle(&w(&[0]), &w(&[0])).unwrap();
        assert_eq!(s.format(), "2*[0,0]");
        let one = TensorSum::unit_multiple(Ring::Rationals, 4, Ring::Rationals.one()).unwrap();
        assert_eq!(shuffle(&one, &w(&[3, 1])).unwrap(), w(&[3, 1]));
    }

    #[test]
    fn zinbiel_examples() {
        assert_eq!(zinbiel(&w(&[0]), &w(&[1])).unwrap(), w(&[0, 1]));
        let z = zinbiel(&w(&[0, 1]), &w(&[2])).unwrap();
        assert_eq!(z.format(), "[0,1,2] + [0,2,1]");
        let one = TensorSum::unit_multiple(Ring::Rationals, 4, Ring::Rationals.one()).unwrap();
        assert!(matches!(zinbiel(&one, &w(&[0])), Err(Error::UnitInReduced(_))));
        assert_eq!(shuffle_action(&one, &w(&[2])).unwrap(), w(&[2]));
    }

    #[test]
    fn mixable_examples() {
        let alg = FiniteAlgebra::truncated_polynomial(Ring::Rationals, "y", 4);
        // y ⧢' y = y^2
        assert_eq!(mixable_shuffle(&alg, &w(&[1]), &w(&[1])).unwrap(), w(&[2]));
        // (y ⊗ 1) ⧢' y = y^2 ⊗ 1
        assert_eq!(mixable_shuffle(&alg, &w(&[1, 0]), &w(&[1])).unwrap(), w(&[2, 0]));
        // (y ⊗ y) ⧢' (y^2 ⊗ 1) = y^3 ⊗ (y ⊗ 1 + 1 ⊗ y)
        let m = mixable_shuffle(&alg, &w(&[1, 1]), &w(&[2, 0])).unwrap();
        assert_eq!(m, w(&[3, 1, 0]).add(&w(&[3, 0, 1])).unwrap());
        // y^2 * y^2 = y^4 = 0 in the quotient
        assert!(mixable_shuffle(&alg, &w(&[2]), &w(&[2])).unwrap().is_zero());
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(3, 2).len(), 12);
        assert_eq!(words_of_len(2, 3).len(), 8);
        assert_eq!(parse_word_text("[0, 2,1]").unwrap(), vec![0, 2, 1]);
    }
}
