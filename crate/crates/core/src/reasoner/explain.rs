use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use super::saturation::saturate;
use super::{ReasonerError, TaxonomyIndex};
use crate::owl::Iri;

/// A derived statement that can be explained.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Fact {
    Subsumption(Iri, Iri),
    Unsatisfiable(Iri),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Subsumption(sub, sup) => write!(f, "{} ⊑ {}", sub.local_name(), sup.local_name()),
            Fact::Unsatisfiable(c) => write!(f, "{} ⊑ ⊥", c.local_name()),
        }
    }
}

/// Asserted axioms (model positions, ascending) that re-derive `fact` on
/// their own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explanation {
    pub fact: Fact,
    pub axioms: Vec<usize>,
}

/// Hitting-set nodes explored while looking for a smaller justification.
const SEARCH_BUDGET: usize = 64;

impl TaxonomyIndex {
    /// Finds a minimal set of asserted axioms entailing `fact`, preferring the
    /// fewest axioms and then the earliest source positions.
    pub fn explain(&self, fact: &Fact) -> Result<Explanation, ReasonerError> {
        let check = match fact {
            Fact::Subsumption(sub, sup) => {
                let (sub, sup) = (self.id(sub)?, self.id(sup)?);
                if sub == sup {
                    return Ok(Explanation { fact: fact.clone(), axioms: Vec::new() });
                }
                Goal::Subsumption(sub, sup)
            }
            Fact::Unsatisfiable(c) => Goal::Unsat(self.id(c)?),
        };
        let all = self.premises.contributing_axioms();
        let width = all.last().map_or(0, |m| m + 1);
        let holds = |set: &[usize]| {
            let mut enabled = vec![false; width];
            set.iter().for_each(|&a| enabled[a] = true);
            let closure = saturate(&self.premises, &|ax| enabled[ax]);
            match check {
                Goal::Subsumption(sub, sup) => closure.ancestors[sub].contains(sup),
                Goal::Unsat(c) => closure.unsat.contains(c),
            }
        };
        if !holds(&all) {
            return Err(ReasonerError::NotDerivable(fact.to_string()));
        }
        let minimize = |mut kept: Vec<usize>| {
            for ax in kept.clone().into_iter().rev() {
                let without: Vec<usize> = kept.iter().copied().filter(|&a| a != ax).collect();
                if holds(&without) {
                    kept = without;
                }
            }
            kept
        };

        let mut found: Vec<Vec<usize>> = vec![minimize(all.clone())];
        let mut queue: VecDeque<BTreeSet<usize>> = found[0].iter().map(|&a| BTreeSet::from([a])).collect();
        let mut seen = HashSet::new();
        let mut nodes = 0;
        while let Some(removed) = queue.pop_front() {
            if nodes >= SEARCH_BUDGET || found.iter().any(|j| j.len() == 1) {
                break;
            }
            if !seen.insert(removed.clone()) {
                continue;
            }
            nodes += 1;
            let justification = match found.iter().find(|j| j.iter().all(|a| !removed.contains(a))) {
                Some(j) => j.clone(),
                None => {
                    let remaining: Vec<usize> = all.iter().copied().filter(|a| !removed.contains(a)).collect();
                    if !holds(&remaining) {
                        continue;
                    }
                    let j = minimize(remaining);
                    found.push(j.clone());
                    j
                }
            };
            for a in justification {
                let mut next = removed.clone();
                next.insert(a);
                queue.push_back(next);
            }
        }
        let best = found
            .into_iter()
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .expect("at least one justification");
        Ok(Explanation { fact: fact.clone(), axioms: best })
    }
}

#[derive(Clone, Copy)]
enum Goal {
    Subsumption(usize, usize),
    Unsat(usize),
}
