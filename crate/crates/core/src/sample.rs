//! Deterministic case generation for law checks: exhaustive small bases
//! followed by seeded random samples. Every random case is drawn from its own
//! ChaCha stream `(seed, index)`, so reports do not depend on thread count.

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::carrier::Element;
use crate::error::Result;
use crate::operator::Space;

/// Size bounds for sampled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    /// Polynomial basis `1, x, ..., x^basis_degree` for the exhaustive part.
    pub basis_degree: usize,
    pub poly_degree: usize,
    pub poly_terms: usize,
    /// Longest random Hurwitz support.
    pub hurwitz_len: usize,
    /// Hurwitz basis `e_0, ..., e_{n-1}` for the exhaustive part.
    pub hurwitz_basis_len: usize,
    pub word_len: usize,
    /// Words up to this length form the exhaustive tensor basis.
    pub word_basis_len: usize,
    pub tensor_terms: usize,
    pub coefficient_bound: i64,
    pub max_denominator: i64,
    /// Upper bound on the size of the exhaustive cartesian product.
    pub max_exhaustive: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            basis_degree: 6,
            poly_degree: 6,
            poly_terms: 4,
            hurwitz_len: 5,
            hurwitz_basis_len: 4,
            word_len: 3,
            word_basis_len: 2,
            tensor_terms: 3,
            coefficient_bound: 5,
            max_denominator: 3,
            max_exhaustive: 2000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampler {
    pub seed: u64,
    pub samples: usize,
    pub config: SampleConfig,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(0, 500)
    }
}

impl Sampler {
    pub fn new(seed: u64, samples: usize) -> Self {
        Sampler {
            seed,
            samples,
            config: SampleConfig::default(),
        }
    }

    pub fn with_config(mut self, config: SampleConfig) -> Self {
        self.config = config;
        self
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Sampler { seed, ..self.clone() }
    }

    /// The generator for random case `index`.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    /// Exhaustive tuples over the spaces' small bases, then `samples` random
    /// tuples.
    pub fn cases(&self, spaces: &[&Space]) -> Result<Vec<Vec<Element>>> {
        let mut out = self.exhaustive_cases(spaces)?;
        for i in 0..self.samples {
            let mut rng = self.rng(i as u64);
            out.push(spaces.iter().map(|s| s.sample(&mut rng, &self.config)).collect::<Result<_>>()?);
        }
        Ok(out)
    }

    pub fn exhaustive_cases(&self, spaces: &[&Space]) -> Result<Vec<Vec<Element>>> {
        if spaces.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        let per_slot = per_slot_cap(self.config.max_exhaustive, spaces.len());
        let bases = spaces
            .iter()
            .map(|s| Ok(s.basis_sample(&self.config)?.into_iter().take(per_slot).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        Ok(bases.into_iter().multi_cartesian_product().collect())
    }
}

/// Largest `k >= 2` with `k^arity <= budget`.
fn per_slot_cap(budget: usize, arity: usize) -> usize {
    let mut k = 2usize;
    while (k + 1).checked_pow(arity as u32).is_some_and(|p| p <= budget) {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        assert_eq!(per_slot_cap(2000, 1), 2000);
        assert_eq!(per_slot_cap(2000, 2), 44);
        assert_eq!(per_slot_cap(2000, 3), 12);
        assert_eq!(per_slot_cap(2000, 4), 6);
    }
}
