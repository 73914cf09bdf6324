//! The law-checking engine. A [`Law`] evaluates a list of equations
//! ("clauses") on a tuple of inputs; checking it runs the sampler's cases in
//! parallel and reports the first failing case in case order.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::carrier::{Carrier, Element};
use crate::error::Result;
use crate::operator::Space;
use crate::sample::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    HoldsOnSamples,
    Violated,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::HoldsOnSamples => "holds-on-samples",
            Status::Violated => "violated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

/// A failing input tuple with both sides of the first failing clause.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub inputs: Vec<NamedValue>,
    pub clause: String,
    pub lhs: String,
    pub rhs: String,
    /// The inputs themselves, so the witness can be re-evaluated.
    #[serde(skip)]
    pub values: Vec<Element>,
}

impl Witness {
    pub fn input(&self, name: &str) -> Option<&str> {
        self.inputs.iter().find(|v| v.name == name).map(|v| v.value.as_str())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub samples: usize,
    pub seed: u64,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.status == Status::HoldsOnSamples
    }

    pub fn summary(&self) -> String {
        match &self.witness {
            None => format!("{}: {} ({} cases, seed {})", self.law, self.status, self.samples, self.seed),
            Some(w) => {
                let inputs = w
                    .inputs
                    .iter()
                    .map(|v| format!("{} = {}", v.name, v.value))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!(
                    "{}: {} at {} [{}]: {} != {}",
                    self.law, self.status, inputs, w.clause, w.lhs, w.rhs
                )
            }
        }
    }

    pub(crate) fn holding(law: impl Into<String>, samples: usize, seed: u64) -> Self {
        LawReport {
            law: law.into(),
            status: Status::HoldsOnSamples,
            witness: None,
            samples,
            seed,
        }
    }

    pub(crate) fn violated(law: impl Into<String>, witness: Witness, samples: usize, seed: u64) -> Self {
        LawReport {
            law: law.into(),
            status: Status::Violated,
            witness: Some(witness),
            samples,
            seed,
        }
    }
}

/// One equation `lhs = rhs` in `carrier`, already evaluated.
#[derive(Clone, Debug)]
pub struct Clause {
    pub name: String,
    pub carrier: Carrier,
    pub lhs: Element,
    pub rhs: Element,
}

impl Clause {
    pub fn new(name: impl Into<String>, carrier: &Carrier, lhs: Element, rhs: Element) -> Self {
        Clause {
            name: name.into(),
            carrier: carrier.clone(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

type EvalFn = Arc<dyn Fn(&[Element]) -> Result<Vec<Clause>> + Send + Sync>;

/// A universally quantified family of equations over named input slots.
#[derive(Clone)]
pub struct Law {
    name: String,
    slots: Vec<(String, Space)>,
    eval: EvalFn,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.slots.iter().map(|(n, _)| n.as_str()).collect();
        write!(f, "{}({})", self.name, names.join(", "))
    }
}

impl Law {
    pub fn new(
        name: impl Into<String>,
        slots: Vec<(&str, Space)>,
        eval: impl Fn(&[Element]) -> Result<Vec<Clause>> + Send + Sync + 'static,
    ) -> Self {
        Law {
            name: name.into(),
            slots: slots.into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn slots(&self) -> &[(String, Space)] {
        &self.slots
    }

    pub fn evaluate(&self, inputs: &[Element]) -> Result<Vec<Clause>> {
        (self.eval)(inputs)
    }

    pub fn first_failure(&self, inputs: &[Element]) -> Result<Option<Clause>> {
        Ok(self.evaluate(inputs)?.into_iter().find(|c| !c.holds()))
    }

    /// Runs the sampler's exhaustive and random cases.
    pub fn check(&self, sampler: &Sampler) -> Result<LawReport> {
        let spaces: Vec<&Space> = self.slots.iter().map(|(_, s)| s).collect();
        let cases = sampler.cases(&spaces)?;
        self.check_cases(&cases, sampler.seed)
    }

    /// Checks an explicit list of cases. The reported witness is the first
    /// failing case in list order, whatever the thread count.
    pub fn check_cases(&self, cases: &[Vec<Element>], seed: u64) -> Result<LawReport> {
        let found = cases.par_iter().enumerate().find_map_first(|(i, case)| match self.first_failure(case) {
            Ok(None) => None,
            Ok(Some(clause)) => Some(Ok((i, clause))),
            Err(e) => Some(Err(e)),
        });
        match found {
            None => Ok(LawReport::holding(&self.name, cases.len(), seed)),
            Some(Err(e)) => Err(e),
            Some(Ok((i, clause))) => {
                let witness = self.witness(&cases[i], &clause);
                Ok(LawReport::violated(&self.name, witness, i + 1, seed))
            }
        }
    }

    fn witness(&self, values: &[Element], clause: &Clause) -> Witness {
        Witness {
            inputs: self
                .slots
                .iter()
                .zip(values)
                .map(|((name, space), v)| NamedValue {
                    name: name.clone(),
                    value: space.format(v),
                })
                .collect(),
            clause: clause.name.clone(),
            lhs: clause.carrier.format(&clause.lhs),
            rhs: clause.carrier.format(&clause.rhs),
            values: values.to_vec(),
        }
    }

    /// Re-evaluates a witness: true when the same clause still fails with
    /// the same two sides.
    pub fn reproduces(&self, witness: &Witness) -> Result<bool> {
        let clauses = self.evaluate(&witness.values)?;
        Ok(clauses.iter().any(|c| {
            c.name == witness.clause
                && !c.holds()
                && c.carrier.format(&c.lhs) == witness.lhs
                && c.carrier.format(&c.rhs) == witness.rhs
        }))
    }
}
