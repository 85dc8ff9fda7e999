//! Complements and algebraic completion.
//!
//! A complement of a family is an operator that sits above the meet and
//! covers every obstruction; it is minimal when it moves exactly the
//! obstructions. The canonical minimal complement is the join of the meet
//! with the residual operator that annihilates every generator fixed by the
//! whole family. Adjoining it yields a confluent family with the same meet.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::Result;
use crate::lattice::{is_confluent, join, meet, meet_pair, obstructions, red_set, OperatorFamily};
use crate::operator::ReductionOperator;
use crate::vector::Vector;

/// Outcome of completing a family: the original family, its meet, the
/// obstructions, the canonical complement, and the enlarged family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionReport {
    pub family: OperatorFamily,
    pub meet: ReductionOperator,
    pub obstructions: BTreeSet<usize>,
    pub complement: ReductionOperator,
    pub completed_family: OperatorFamily,
}

/// The operator annihilating every generator fixed by the whole family and
/// fixing all others; its non-reduced set is exactly the family's reduced set.
pub fn residual(family: &OperatorFamily) -> ReductionOperator {
    let dim = family.dim();
    let images: BTreeMap<usize, Vector> = red_set(family)
        .into_iter()
        .map(|g| (g, Vector::zero(dim)))
        .collect();
    ReductionOperator::from_images(dim, images).expect("zero images are always valid")
}

/// The canonical minimal complement: the join of the meet with the residual.
/// It moves exactly the obstructions, sending each one to its meet-image.
pub fn canonical_complement(family: &OperatorFamily) -> Result<ReductionOperator> {
    join(&meet(family), &residual(family))
}

/// Complement test: the candidate must sit above the meet (their meet is the
/// meet itself) and its non-reduced set must cover the obstructions.
pub fn is_complement(family: &OperatorFamily, candidate: &ReductionOperator) -> Result<bool> {
    let lower = meet(family);
    if meet_pair(&lower, candidate)? != lower {
        return Ok(false);
    }
    let nred = candidate.nred();
    Ok(obstructions(family).iter().all(|g| nred.contains(g)))
}

/// Minimal complement test: a complement whose non-reduced set equals the
/// obstructions exactly.
pub fn is_minimal_complement(
    family: &OperatorFamily,
    candidate: &ReductionOperator,
) -> Result<bool> {
    Ok(is_complement(family, candidate)? && candidate.nred() == obstructions(family))
}

/// Adjoins the canonical complement. The enlarged family is confluent and has
/// the same meet as the original.
pub fn complete(family: &OperatorFamily) -> Result<CompletionReport> {
    let lower = meet(family);
    let obs = obstructions(family);
    let complement = canonical_complement(family)?;
    let completed_family = family.with_member(complement.clone())?;
    debug_assert!(is_confluent(&completed_family));
    debug_assert_eq!(meet(&completed_family), lower);
    Ok(CompletionReport {
        family: family.clone(),
        meet: lower,
        obstructions: obs,
        complement,
        completed_family,
    })
}
