//! Exact minimum of a closed union: the optimization payoff once the
//! closure has been computed. The minimum of a closed semi-algebraic subset
//! of the line is always attained, unbounded below, or the set is empty —
//! it is read off the leftmost item of the oracle decomposition.

use crate::roots::{compare, AlgebraicNumber, ExtendedBound};
use crate::sem::{decompose_closed, decompose_strict, Item};
use crate::semialg::{ClosedSetUnion, SemialgError, SetUnion};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub enum MinResult {
    Empty,
    UnboundedBelow,
    Attained(AlgebraicNumber),
}

impl PartialEq for MinResult {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (MinResult::Empty, MinResult::Empty) => true,
            (MinResult::UnboundedBelow, MinResult::UnboundedBelow) => true,
            (MinResult::Attained(a), MinResult::Attained(b)) => compare(a, b) == Ordering::Equal,
            _ => false,
        }
    }
}

/// Least element of a closed union. The value of `Attained` is always a
/// member of the set.
pub fn minimum(q: &ClosedSetUnion) -> Result<MinResult, SemialgError> {
    let d = decompose_closed(q)?;
    let Some(first) = d.items().first() else {
        return Ok(MinResult::Empty);
    };
    match first {
        Item::Point(v) => Ok(MinResult::Attained(v.clone())),
        Item::Interval { lo, lo_closed, .. } => match lo {
            ExtendedBound::NegInf => Ok(MinResult::UnboundedBelow),
            ExtendedBound::Finite(v) if *lo_closed => Ok(MinResult::Attained(v.clone())),
            _ => Err(SemialgError::Invariant(
                "closed union decomposed to an open left endpoint".to_string(),
            )),
        },
    }
}

/// Whether the point set of a strict union is bounded (no unbounded
/// interval in its decomposition). The empty set counts as bounded.
pub fn is_bounded(u: &SetUnion) -> Result<bool, SemialgError> {
    Ok(!decompose_strict(u)?.has_unbounded_item())
}

/// [`is_bounded`] for closed unions.
pub fn is_bounded_closed(q: &ClosedSetUnion) -> Result<bool, SemialgError> {
    Ok(!decompose_closed(q)?.has_unbounded_item())
}
