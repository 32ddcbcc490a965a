//! Independent semantics oracle: converts set descriptions into canonical
//! interval decompositions by root isolation and exact cell sampling.
//!
//! This module is the referee for the symbolic pipeline in `semialg`. It
//! never reuses the pipeline's rewriting; membership of every cell and
//! every candidate point is decided directly from the defining polynomials.

use crate::poly::{rat, Rat, UPoly};
use crate::roots::{
    compare, isolate_roots, refine, separate_roots, sign_at, AlgebraicNumber, ExtendedBound,
};
use crate::semialg::{cell_samples, ClosedSetUnion, SemialgError, SetUnion};
use num_traits::Zero;
use std::cmp::Ordering;

/// One maximal piece of a decomposition: an isolated point or an interval
/// with open/closed finite endpoints.
#[derive(Debug, Clone)]
pub enum Item {
    Point(AlgebraicNumber),
    Interval {
        lo: ExtendedBound,
        hi: ExtendedBound,
        lo_closed: bool,
        hi_closed: bool,
    },
}

impl Item {
    fn lower_key(&self) -> (ExtendedBound, bool) {
        match self {
            Item::Point(v) => (ExtendedBound::Finite(v.clone()), true),
            Item::Interval { lo, lo_closed, .. } => (lo.clone(), *lo_closed),
        }
    }

    pub fn left_endpoint(&self) -> ExtendedBound {
        self.lower_key().0
    }
}

impl PartialEq for Item {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Item::Point(a), Item::Point(b)) => compare(a, b) == Ordering::Equal,
            (
                Item::Interval {
                    lo: a_lo,
                    hi: a_hi,
                    lo_closed: a_lc,
                    hi_closed: a_hc,
                },
                Item::Interval {
                    lo: b_lo,
                    hi: b_hi,
                    lo_closed: b_lc,
                    hi_closed: b_hc,
                },
            ) => {
                a_lc == b_lc
                    && a_hc == b_hc
                    && a_lo.cmp_bound(b_lo) == Ordering::Equal
                    && a_hi.cmp_bound(b_hi) == Ordering::Equal
            }
            _ => false,
        }
    }
}

/// Canonical decomposition: items pairwise disjoint, sorted by left
/// endpoint, with no mergeable adjacency.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IntervalDecomposition {
    items: Vec<Item>,
}

impl IntervalDecomposition {
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Exact membership of a rational point.
    pub fn contains_rat(&self, x: &Rat) -> bool {
        self.contains(&AlgebraicNumber::from_rat(x.clone()))
    }

    /// Exact membership of an algebraic point.
    pub fn contains(&self, x: &AlgebraicNumber) -> bool {
        self.items.iter().any(|item| match item {
            Item::Point(v) => compare(v, x) == Ordering::Equal,
            Item::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                let above = match lo {
                    ExtendedBound::NegInf => true,
                    ExtendedBound::PosInf => false,
                    ExtendedBound::Finite(v) => match compare(v, x) {
                        Ordering::Less => true,
                        Ordering::Equal => *lo_closed,
                        Ordering::Greater => false,
                    },
                };
                let below = match hi {
                    ExtendedBound::PosInf => true,
                    ExtendedBound::NegInf => false,
                    ExtendedBound::Finite(v) => match compare(v, x) {
                        Ordering::Greater => true,
                        Ordering::Equal => *hi_closed,
                        Ordering::Less => false,
                    },
                };
                above && below
            }
        })
    }

    pub fn has_unbounded_item(&self) -> bool {
        self.items.iter().any(|item| {
            matches!(
                item,
                Item::Interval {
                    lo: ExtendedBound::NegInf,
                    ..
                } | Item::Interval {
                    hi: ExtendedBound::PosInf,
                    ..
                }
            )
        })
    }

    /// One line per item; exact endpoints plus decimal hints for irrational
    /// ones. The empty decomposition renders as `empty`.
    pub fn render(&self, digits: u32) -> String {
        if self.items.is_empty() {
            return "empty\n".to_string();
        }
        let mut out = String::new();
        for item in &self.items {
            match item {
                Item::Point(v) => {
                    out.push_str(&format!("point {}\n", render_value(v, digits)));
                }
                Item::Interval {
                    lo,
                    hi,
                    lo_closed,
                    hi_closed,
                } => {
                    let open = if *lo_closed { '[' } else { '(' };
                    let close = if *hi_closed { ']' } else { ')' };
                    out.push_str(&format!(
                        "interval {}{}, {}{}\n",
                        open,
                        render_bound(lo, digits),
                        render_bound(hi, digits),
                        close
                    ));
                }
            }
        }
        out
    }
}

fn render_value(v: &AlgebraicNumber, digits: u32) -> String {
    match v.as_rational() {
        Some(r) => format!("{r}"),
        None => format!(
            "~{} (root of {} in [{}, {}])",
            v.decimal_str(digits),
            v.defining(),
            v.lo(),
            v.hi()
        ),
    }
}

fn render_bound(b: &ExtendedBound, digits: u32) -> String {
    match b {
        ExtendedBound::NegInf => "-inf".to_string(),
        ExtendedBound::PosInf => "+inf".to_string(),
        ExtendedBound::Finite(v) => render_value(v, digits),
    }
}

// -------------------------------------------------------------------------
// decomposition
// -------------------------------------------------------------------------

/// Uniform internal piece: a point is a doubly-closed degenerate interval.
#[derive(Debug, Clone)]
struct RawItem {
    lo: ExtendedBound,
    hi: ExtendedBound,
    lo_closed: bool,
    hi_closed: bool,
}

/// Exact point set of a strict union.
pub fn decompose_strict(u: &SetUnion) -> Result<IntervalDecomposition, SemialgError> {
    let parts: Vec<(&[UPoly], &[UPoly])> = u
        .parts
        .iter()
        .map(|p| (p.ineqs.as_slice(), p.eqs.as_slice()))
        .collect();
    decompose_parts(&parts, false)
}

/// Exact point set of a closed union.
pub fn decompose_closed(u: &ClosedSetUnion) -> Result<IntervalDecomposition, SemialgError> {
    let parts: Vec<(&[UPoly], &[UPoly])> = u
        .parts
        .iter()
        .map(|p| (p.ineqs.as_slice(), p.eqs.as_slice()))
        .collect();
    decompose_parts(&parts, true)
}

fn decompose_parts(
    parts: &[(&[UPoly], &[UPoly])],
    closed: bool,
) -> Result<IntervalDecomposition, SemialgError> {
    let mut raw = Vec::new();
    for (ineqs, eqs) in parts {
        decompose_part(ineqs, eqs, closed, &mut raw)?;
    }
    Ok(canonicalize(raw))
}

/// Sign test a strict or non-strict inequality.
fn ineq_holds(sign: i8, closed: bool) -> bool {
    if closed {
        sign >= 0
    } else {
        sign > 0
    }
}

fn decompose_part(
    ineqs: &[UPoly],
    eqs: &[UPoly],
    closed: bool,
    out: &mut Vec<RawItem>,
) -> Result<(), SemialgError> {
    // Constant constraints first.
    let mut live_ineqs: Vec<&UPoly> = Vec::with_capacity(ineqs.len());
    for p in ineqs {
        match p.constant_value() {
            Some(c) => {
                let sign = if c.is_zero() {
                    0
                } else if c > rat(0) {
                    1
                } else {
                    -1
                };
                if !ineq_holds(sign, closed) {
                    return Ok(()); // contradictory part
                }
            }
            None => live_ineqs.push(p),
        }
    }
    let mut live_eqs: Vec<&UPoly> = Vec::with_capacity(eqs.len());
    for q in eqs {
        match q.constant_value() {
            Some(c) => {
                if !c.is_zero() {
                    return Ok(()); // nonzero constant equality
                }
            }
            None => live_eqs.push(q),
        }
    }

    if !live_eqs.is_empty() {
        // Finite variety: the common roots of all equality polynomials.
        let g = crate::poly::gcd_many(
            &live_eqs.iter().map(|q| (*q).clone()).collect::<Vec<_>>(),
        )?;
        if g.is_constant() {
            return Ok(());
        }
        for v in isolate_roots(&g)? {
            if live_ineqs
                .iter()
                .all(|p| ineq_holds(sign_at(p, &v), closed))
            {
                out.push(RawItem {
                    lo: ExtendedBound::Finite(v.clone()),
                    hi: ExtendedBound::Finite(v),
                    lo_closed: true,
                    hi_closed: true,
                });
            }
        }
        return Ok(());
    }

    if live_ineqs.is_empty() {
        out.push(RawItem {
            lo: ExtendedBound::NegInf,
            hi: ExtendedBound::PosInf,
            lo_closed: false,
            hi_closed: false,
        });
        return Ok(());
    }

    // Cells of the product of all inequality polynomials: every inequality
    // has constant sign on each open cell, so one rational sample decides it.
    let product = live_ineqs
        .iter()
        .fold(UPoly::one(), |acc, p| acc.mul(p));
    let mut cell_roots = isolate_roots(&product)?;
    separate_roots(&mut cell_roots);
    // Anchor each root to a constraint polynomial that vanishes at it; the
    // product was only scaffolding and makes for noisy defining polynomials.
    for v in cell_roots.iter_mut() {
        if let Some(better) = live_ineqs.iter().find_map(|p| v.rebind_to_factor(p)) {
            *v = better;
        }
    }
    let samples = cell_samples(&cell_roots);

    let bound_at = |k: usize| -> ExtendedBound {
        if k == 0 {
            ExtendedBound::NegInf
        } else if k > cell_roots.len() {
            ExtendedBound::PosInf
        } else {
            ExtendedBound::Finite(cell_roots[k - 1].clone())
        }
    };

    for (k, s) in samples.iter().enumerate() {
        if live_ineqs.iter().all(|p| p.sign_at_rat(s) > 0) {
            out.push(RawItem {
                lo: bound_at(k),
                hi: bound_at(k + 1),
                lo_closed: false,
                hi_closed: false,
            });
        }
    }
    if closed {
        for v in &cell_roots {
            if live_ineqs.iter().all(|p| ineq_holds(sign_at(p, v), true)) {
                out.push(RawItem {
                    lo: ExtendedBound::Finite(v.clone()),
                    hi: ExtendedBound::Finite(v.clone()),
                    lo_closed: true,
                    hi_closed: true,
                });
            }
        }
    }
    Ok(())
}

/// Sweep-merge into the canonical maximal form.
fn canonicalize(mut raw: Vec<RawItem>) -> IntervalDecomposition {
    raw.sort_by(|a, b| {
        a.lo
            .cmp_bound(&b.lo)
            // closed left endpoints first among equal values
            .then_with(|| b.lo_closed.cmp(&a.lo_closed))
    });
    let mut merged: Vec<RawItem> = Vec::with_capacity(raw.len());
    for item in raw {
        let Some(cur) = merged.last_mut() else {
            merged.push(item);
            continue;
        };
        let touches = match item.lo.cmp_bound(&cur.hi) {
            Ordering::Less => true,
            Ordering::Equal => cur.hi_closed || item.lo_closed,
            Ordering::Greater => false,
        };
        if !touches {
            merged.push(item);
            continue;
        }
        match item.hi.cmp_bound(&cur.hi) {
            Ordering::Greater => {
                cur.hi = item.hi;
                cur.hi_closed = item.hi_closed;
            }
            Ordering::Equal => {
                cur.hi_closed |= item.hi_closed;
            }
            Ordering::Less => {}
        }
    }
    let items = merged
        .into_iter()
        .map(|r| {
            if r.lo.cmp_bound(&r.hi) == Ordering::Equal {
                match r.lo {
                    ExtendedBound::Finite(v) => Item::Point(v),
                    _ => unreachable!("degenerate infinite item"),
                }
            } else {
                Item::Interval {
                    lo: r.lo,
                    hi: r.hi,
                    lo_closed: r.lo_closed,
                    hi_closed: r.hi_closed,
                }
            }
        })
        .collect();
    IntervalDecomposition { items }
}

/// Ground-truth closure: every finite interval endpoint becomes closed,
/// followed by re-canonicalization.
pub fn closure_oracle(d: &IntervalDecomposition) -> IntervalDecomposition {
    let raw = d
        .items
        .iter()
        .map(|item| match item {
            Item::Point(v) => RawItem {
                lo: ExtendedBound::Finite(v.clone()),
                hi: ExtendedBound::Finite(v.clone()),
                lo_closed: true,
                hi_closed: true,
            },
            Item::Interval { lo, hi, .. } => RawItem {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_closed: lo.is_finite(),
                hi_closed: hi.is_finite(),
            },
        })
        .collect();
    canonicalize(raw)
}

/// Direct evaluation of a strict union at a rational point.
pub fn is_member(x: &Rat, u: &SetUnion) -> bool {
    u.parts.iter().any(|part| {
        part.ineqs.iter().all(|p| p.sign_at_rat(x) > 0)
            && part.eqs.iter().all(|q| q.sign_at_rat(x) == 0)
    })
}

/// Direct evaluation of a closed union at a rational point.
pub fn is_member_closed(x: &Rat, u: &ClosedSetUnion) -> bool {
    u.parts.iter().any(|part| {
        part.ineqs.iter().all(|p| p.sign_at_rat(x) >= 0)
            && part.eqs.iter().all(|q| q.sign_at_rat(x) == 0)
    })
}

/// Exact set equality of two strict unions, by comparing canonical
/// decompositions item for item.
pub fn sets_equal(a: &SetUnion, b: &SetUnion) -> Result<bool, SemialgError> {
    Ok(decompose_strict(a)? == decompose_strict(b)?)
}

/// Tightens every algebraic endpoint to width `10^-digits` so that the
/// rendered decomposition is reproducible.
pub fn refine_for_render(d: &mut IntervalDecomposition, digits: u32) {
    let width = Rat::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits));
    for item in &mut d.items {
        match item {
            Item::Point(v) => *v = refine(v, &width),
            Item::Interval { lo, hi, .. } => {
                if let ExtendedBound::Finite(v) = lo {
                    *v = refine(v, &width);
                }
                if let ExtendedBound::Finite(v) = hi {
                    *v = refine(v, &width);
                }
            }
        }
    }
}
