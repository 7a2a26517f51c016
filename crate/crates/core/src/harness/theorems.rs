//! Hypothesis/conclusion checks for the group and semigroup theorems.
//!
//! Both theorems are conditionals. A report always records the hypotheses
//! and the computed outcome; only `applicable && !conclusion_holds` counts as
//! a falsification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagsim::{conjugate, diag_sim_nonneg, simultaneous_diag_sim, DiagonalWitness};
use crate::error::{Error, Result};
use crate::linalg::{common_order, Matrix};
use crate::semigroup::{algebra_dimension, generate_closure, group_info_from_closure, Caps};
use crate::structure::{classify_decomposability, DecompositionKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremKind {
    /// Irreducible groups with nonnegative diagonals.
    Group,
    /// Irreducible semigroups with per-member similarity and
    /// indecomposable-or-1-decomposable members of rank at least two.
    Semigroup,
    /// The `2×2` case, where the decomposability hypothesis is dropped.
    Semigroup2x2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremKind,
    pub hypotheses: BTreeMap<String, HypothesisCheck>,
    pub applicable: bool,
    pub conclusion_holds: bool,
    pub witness: Option<DiagonalWitness>,
    pub monomial_check: Option<bool>,
    /// The closure was generated completely (no cap was hit).
    pub exhaustive: bool,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn falsified(&self) -> bool {
        self.applicable && !self.conclusion_holds
    }

    pub fn hypothesis(&self, name: &str) -> Option<bool> {
        self.hypotheses.get(name).map(|h| h.holds)
    }
}

fn check(holds: bool, detail: impl Into<String>) -> HypothesisCheck {
    HypothesisCheck {
        holds,
        detail: detail.into(),
    }
}

fn require_order(gens: &[Matrix]) -> Result<usize> {
    let n = common_order(gens)?;
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    Ok(n)
}

fn irreducibility_check(gens: &[Matrix], n: usize) -> Result<HypothesisCheck> {
    let dim = algebra_dimension(gens)?;
    Ok(check(
        dim == n * n,
        format!("generated algebra has dimension {dim} of {}", n * n),
    ))
}

/// Simultaneous similarity over `members`, then exact verification of every
/// conjugate. Returns `(witness, all nonnegative, all monomial)`.
fn conclude(members: &[Matrix]) -> Result<(Option<DiagonalWitness>, bool, bool)> {
    let Some(w) = simultaneous_diag_sim(members)? else {
        return Ok((None, false, false));
    };
    let mut nonneg = true;
    let mut monomial = true;
    for m in members {
        let c = conjugate(&w, m)?;
        nonneg &= c.is_nonnegative();
        monomial &= c.is_monomial();
    }
    Ok((Some(w), nonneg, monomial))
}

pub fn verify_group_theorem(gens: &[Matrix], caps: Caps) -> Result<TheoremReport> {
    let n = require_order(gens)?;
    let closure = generate_closure(gens, caps)?;
    let info = group_info_from_closure(gens, &closure)?;
    let mut hypotheses = BTreeMap::new();
    let mut notes = Vec::new();

    let group_detail = if !info.all_invertible {
        "a generator is singular".to_string()
    } else if info.closed_under_inverse_within_cap {
        format!(
            "every generator inverse reached among {} closure elements",
            closure.len()
        )
    } else {
        format!(
            "some generator inverse not reached within the caps ({} elements, truncated = {})",
            closure.len(),
            closure.truncated
        )
    };
    hypotheses.insert(
        "group".to_string(),
        check(
            info.all_invertible && info.closed_under_inverse_within_cap,
            group_detail,
        ),
    );
    hypotheses.insert("irreducible".to_string(), irreducibility_check(gens, n)?);

    let members = closure.matrices();
    let bad_diag = members
        .iter()
        .position(|m| !m.classify_entries().has_nonneg_diagonal);
    let diag_detail = match bad_diag {
        Some(k) => format!(
            "element with word {:?} has a diagonal entry outside [0, ∞)",
            closure.elements[k].word
        ),
        None if closure.truncated => format!(
            "holds on all {} explored elements; closure truncated",
            members.len()
        ),
        None => format!("holds on all {} elements", members.len()),
    };
    hypotheses.insert(
        "nonnegative_diagonals".to_string(),
        check(bad_diag.is_none(), diag_detail),
    );

    if closure.truncated {
        notes.push(
            "closure truncated: the conclusion is checked on the explored elements, which include \
             the generators, so a witness extends to the whole group"
                .to_string(),
        );
    }

    let applicable = hypotheses.values().all(|h| h.holds);
    let (witness, nonneg, monomial) = conclude(&members)?;
    let conclusion_holds = witness.is_some() && nonneg && monomial;
    Ok(TheoremReport {
        theorem: TheoremKind::Group,
        hypotheses,
        applicable,
        conclusion_holds,
        monomial_check: witness.as_ref().map(|_| monomial),
        witness,
        exhaustive: !closure.truncated,
        notes,
    })
}

pub fn verify_semigroup_theorem(gens: &[Matrix], caps: Caps) -> Result<TheoremReport> {
    let n = require_order(gens)?;
    let closure = generate_closure(gens, caps)?;
    let members = closure.matrices();
    let mut hypotheses = BTreeMap::new();
    let mut notes = Vec::new();

    hypotheses.insert(
        "closure_complete".to_string(),
        check(
            !closure.truncated,
            format!(
                "{} elements, truncated = {}",
                closure.len(),
                closure.truncated
            ),
        ),
    );
    hypotheses.insert("irreducible".to_string(), irreducibility_check(gens, n)?);

    let mut infeasible = None;
    for (k, m) in members.iter().enumerate() {
        if diag_sim_nonneg(m)?.is_none() {
            infeasible = Some(k);
            break;
        }
    }
    hypotheses.insert(
        "members_individually_similar".to_string(),
        match infeasible {
            Some(k) => check(
                false,
                format!(
                    "element with word {:?} is not diagonally similar to a nonnegative matrix",
                    closure.elements[k].word
                ),
            ),
            None => check(true, format!("all {} elements", members.len())),
        },
    );

    let theorem = if n == 2 {
        notes.push("n = 2: decomposability hypothesis not required".to_string());
        TheoremKind::Semigroup2x2
    } else {
        let mut offender = None;
        for (k, m) in members.iter().enumerate() {
            if m.rank() < 2 {
                continue;
            }
            let r = classify_decomposability(m)?;
            if r.kind == DecompositionKind::MultiDecomposable {
                offender = Some((k, r.scc_count));
                break;
            }
        }
        hypotheses.insert(
            "rank2_members_indecomposable_or_1_decomposable".to_string(),
            match offender {
                Some((k, c)) => check(
                    false,
                    format!(
                        "element with word {:?} has {c} strongly connected components",
                        closure.elements[k].word
                    ),
                ),
                None => check(
                    true,
                    "every member of rank at least 2 has at most 2 components",
                ),
            },
        );
        TheoremKind::Semigroup
    };

    let applicable = hypotheses.values().all(|h| h.holds);
    let (witness, nonneg, _) = conclude(&members)?;
    Ok(TheoremReport {
        theorem,
        hypotheses,
        applicable,
        conclusion_holds: witness.is_some() && nonneg,
        witness,
        monomial_check: None,
        exhaustive: !closure.truncated,
        notes,
    })
}
