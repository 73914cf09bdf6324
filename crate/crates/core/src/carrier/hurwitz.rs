use num_bigint::BigInt;

use super::{Carrier, Element};
use crate::error::Result;

/// A Hurwitz series with finite support: `entries[n] = f(n)`, trailing zeros
/// trimmed, so the empty sequence is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HurwitzSeries {
    entries: Vec<Element>,
}

impl HurwitzSeries {
    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn trimmed(mut entries: Vec<Element>) -> Self {
        while entries.last().is_some_and(Element::is_zero) {
            entries.pop();
        }
        HurwitzSeries { entries }
    }
}

/// Row `n` of Pascal's triangle.
pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

pub(crate) fn add(base: &Carrier, f: &HurwitzSeries, g: &HurwitzSeries) -> Result<HurwitzSeries> {
    let n = f.len().max(g.len());
    let zero = base.zero();
    let entries = (0..n)
        .map(|i| base.add(f.entries.get(i).unwrap_or(&zero), g.entries.get(i).unwrap_or(&zero)))
        .collect::<Result<_>>()?;
    Ok(HurwitzSeries::trimmed(entries))
}

pub(crate) fn map(f: &HurwitzSeries, op: impl Fn(&Element) -> Result<Element>) -> Result<HurwitzSeries> {
    Ok(HurwitzSeries::trimmed(f.entries.iter().map(op).collect::<Result<_>>()?))
}

/// `(fg)(n) = sum_k C(n,k) f(k) g(n-k)`.
pub(crate) fn mul(base: &Carrier, f: &HurwitzSeries, g: &HurwitzSeries) -> Result<HurwitzSeries> {
    if f.is_zero() || g.is_zero() {
        return Ok(HurwitzSeries::default());
    }
    let ring = base.ring();
    let len = f.len() + g.len() - 1;
    let mut entries = Vec::with_capacity(len);
    for n in 0..len {
        let row = binomial_row(n);
        let mut acc = base.zero();
        for k in n.saturating_sub(g.len() - 1)..=n.min(f.len() - 1) {
            let term = base.mul(&f.entries[k], &g.entries[n - k])?;
            let term = base.scale(&ring.from_bigint(row[k].clone()), &term)?;
            acc = base.add(&acc, &term)?;
        }
        entries.push(acc);
    }
    Ok(HurwitzSeries::trimmed(entries))
}

/// `(a0, a1, a2, ...) -> (a1, a2, ...)`.
pub(crate) fn shift_left(f: &HurwitzSeries) -> HurwitzSeries {
    HurwitzSeries {
        entries: f.entries.iter().skip(1).cloned().collect(),
    }
}

/// `(a0, a1, ...) -> (0, a0, a1, ...)`.
pub(crate) fn shift_right(base: &Carrier, f: &HurwitzSeries) -> HurwitzSeries {
    if f.is_zero() {
        return f.clone();
    }
    let mut entries = Vec::with_capacity(f.len() + 1);
    entries.push(base.zero());
    entries.extend(f.entries.iter().cloned());
    HurwitzSeries { entries }
}

/// Keeps only index 0.
pub(crate) fn head(f: &HurwitzSeries) -> HurwitzSeries {
    HurwitzSeries::trimmed(f.entries.iter().take(1).cloned().collect())
}

/// `(a0, a1, ...) -> (0*a0, 1*a1, 2*a2, ...)`, the diagonal derivation.
pub(crate) fn index_weighted(base: &Carrier, f: &HurwitzSeries) -> Result<HurwitzSeries> {
    let ring = base.ring();
    let entries = f
        .entries
        .iter()
        .enumerate()
        .map(|(n, a)| base.scale(&ring.from_bigint(BigInt::from(n)), a))
        .collect::<Result<_>>()?;
    Ok(HurwitzSeries::trimmed(entries))
}

pub(crate) fn from_entries(entries: Vec<Element>) -> HurwitzSeries {
    HurwitzSeries::trimmed(entries)
}
