//! Premise check for the compatible-order theorem: `I^2, ..., I^7` have
//! linear quotients with compatible orders built from an admissible edge
//! order and an order of `I^2`.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linquot::{verify_linear_quotients, GeneratorOrdering, SearchOutcome, Witness};
use crate::orderings::{
    admissible_order, compatible_step, guided_square_order, is_admissible, EdgeOrdering,
};

/// Powers that must verify for the theorem to apply.
pub const PREMISE_Q: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    pub q: usize,
    pub count: usize,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Square {
    Given,
    Found { nodes: u64 },
    NoOrder { nodes: u64 },
    BudgetExhausted { budget: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm64Report {
    pub edge_order: String,
    pub square: Square,
    /// Verified levels, starting at `q = 2`.
    pub levels: Vec<Level>,
    /// First power whose compatible order fails (2 if `I^2` has no order).
    pub first_failure: Option<usize>,
    /// First power skipped because its generator count exceeds the cap.
    pub capped_at: Option<usize>,
    pub premises_hold: bool,
    /// What was actually verified.
    pub computed: String,
    /// What follows from the theorem, if its premises were verified.
    pub implied_by: Option<String>,
}

impl Thm64Report {
    pub fn highest_verified(&self) -> Option<usize> {
        self.levels
            .iter()
            .take_while(|l| l.pass)
            .last()
            .map(|l| l.q)
    }
}

/// Builds `M^(2) .. M^(q_max)` (at least through 7 when the cap allows)
/// and verifies each one. `i2` defaults to an order of `I^2` found by
/// guided search from the admissible edge order.
pub fn check_theorem64_premises(
    g: &Graph,
    i2: Option<&GeneratorOrdering>,
    budget: u64,
    cap: u128,
    q_max: usize,
) -> Result<Thm64Report> {
    let eo: EdgeOrdering = admissible_order(g);
    debug_assert!(is_admissible(g, &eo)?);
    let mut report = Thm64Report {
        edge_order: eo.render(g),
        square: Square::Given,
        levels: Vec::new(),
        first_failure: None,
        capped_at: None,
        premises_hold: false,
        computed: String::new(),
        implied_by: None,
    };
    let q_max = q_max.max(2);

    let square = match i2 {
        Some(o) => o.clone(),
        None => match guided_square_order(g, &eo, budget, cap) {
            Err(Error::CapExceeded { .. }) => {
                report.capped_at = Some(2);
                report.computed = "I^2 exceeds the generator cap".into();
                return Ok(report);
            }
            Err(e) => return Err(e),
            Ok(found) => match found.outcome {
                SearchOutcome::Found(o) => {
                    report.square = Square::Found { nodes: found.nodes };
                    o
                }
                SearchOutcome::NoOrder => {
                    report.square = Square::NoOrder { nodes: found.nodes };
                    report.first_failure = Some(2);
                    report.computed = "I^2 has no linear-quotients order".into();
                    return Ok(report);
                }
                SearchOutcome::Unknown => {
                    report.square = Square::BudgetExhausted { budget };
                    report.computed = "search for an order of I^2 exhausted its budget".into();
                    return Ok(report);
                }
            },
        },
    };
    if square.base().q() != 2 {
        return Err(Error::WrongPower {
            expected: 2,
            found: square.base().q(),
        });
    }

    let mut current = square;
    for q in 2..=q_max {
        if q > 2 {
            match compatible_step(g, &eo, &current) {
                Ok(next) => current = next,
                Err(Error::CapExceeded { .. }) => {
                    report.capped_at = Some(q);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let start = Instant::now();
        let lq = verify_linear_quotients(&current);
        report.levels.push(Level {
            q,
            count: current.len(),
            pass: lq.pass,
            witness: lq.witness,
            elapsed_ms: start.elapsed().as_millis(),
        });
        if !lq.pass {
            report.first_failure = Some(q);
            break;
        }
    }

    let top = report.highest_verified();
    report.premises_hold = top.is_some_and(|q| q >= PREMISE_Q);
    report.computed = match (top, report.first_failure, report.capped_at) {
        (_, Some(f), _) if f == 2 => "the given order of I^2 fails".into(),
        (Some(t), Some(f), _) => {
            format!("compatible orders verified for q = 2..{t}; q = {f} fails")
        }
        (Some(t), None, Some(c)) => {
            format!("compatible orders verified for q = 2..{t}; q = {c} exceeds the cap")
        }
        (Some(t), None, None) => format!("compatible orders verified for q = 2..{t}"),
        (None, _, _) => "nothing verified".into(),
    };
    if report.premises_hold {
        report.implied_by = Some(format!(
            "premises hold through q = {PREMISE_Q}: every power I^q, q >= 2, has linear quotients \
             with the compatible orders (not computed beyond q = {})",
            top.unwrap()
        ));
    }
    Ok(report)
}
