//! Elementary semi-algebraic subsets of the real line and the symbolic
//! closure pipeline.
//!
//! A strict elementary set is a conjunction `p_1 > 0, ..., p_m > 0,
//! q_1 = ... = q_l = 0`. [`normalize`] rewrites a set into a union of
//! certified pieces whose inequality polynomials are square-free, pairwise
//! coprime, and root-free on the variety of the equalities; on such pieces
//! turning `>` into `>=` is exactly the topological closure, which is what
//! [`closure_union`] computes.
//!
//! Replacing an inequality polynomial by its odd part preserves the strict
//! sign everywhere except at multiple real roots of the original polynomial:
//! at an even-multiplicity root the original vanishes while the odd part can
//! stay positive. Points like that would leak into the rewritten set, so
//! [`normalize`] splits them back out with an extra sign constraint (see
//! `exclusion_splits`). Example: `(t-5)^2 (t-1) > 0` is `(1,5) u (5,inf)`,
//! while its odd part alone would describe `(1,inf)`.

use crate::poly::{self, gcd, gcd_many, odd_part, rat, squarefree_part, PolyError, UPoly};
use crate::roots::{isolate_roots, separate_roots, sign_at, AlgebraicNumber, RootError};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone)]
pub enum SemialgError {
    Poly(PolyError),
    Root(RootError),
    /// A certified invariant failed to verify; always a bug, never an input
    /// property.
    Invariant(String),
}

impl fmt::Display for SemialgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemialgError::Poly(e) => write!(f, "{e}"),
            SemialgError::Root(e) => write!(f, "{e}"),
            SemialgError::Invariant(msg) => write!(f, "invariant violation: {msg}"),
        }
    }
}

impl std::error::Error for SemialgError {}

impl From<PolyError> for SemialgError {
    fn from(e: PolyError) -> Self {
        SemialgError::Poly(e)
    }
}

impl From<RootError> for SemialgError {
    fn from(e: RootError) -> Self {
        SemialgError::Root(e)
    }
}

/// Conjunction of strict inequalities `p > 0` and equalities `q = 0`.
/// Both lists empty means the whole line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySet {
    pub ineqs: Vec<UPoly>,
    pub eqs: Vec<UPoly>,
}

impl ElementarySet {
    pub fn new(ineqs: Vec<UPoly>, eqs: Vec<UPoly>) -> Self {
        ElementarySet { ineqs, eqs }
    }

    pub fn full_line() -> Self {
        ElementarySet {
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }
}

/// A strict elementary set that passed [`certify`]: square-free pairwise
/// coprime inequalities with no root on the variety of the (square-free)
/// equalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedElementarySet(ElementarySet);

impl NormalizedElementarySet {
    pub fn as_set(&self) -> &ElementarySet {
        &self.0
    }

    pub fn ineqs(&self) -> &[UPoly] {
        &self.0.ineqs
    }

    pub fn eqs(&self) -> &[UPoly] {
        &self.0.eqs
    }
}

/// Conjunction of non-strict inequalities `p >= 0` and equalities `q = 0`,
/// with the same structural invariants as [`NormalizedElementarySet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedElementarySet {
    pub ineqs: Vec<UPoly>,
    pub eqs: Vec<UPoly>,
}

/// Finite union of strict elementary sets; the empty union is the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SetUnion {
    pub parts: Vec<ElementarySet>,
}

impl SetUnion {
    pub fn new(parts: Vec<ElementarySet>) -> Self {
        SetUnion { parts }
    }

    pub fn empty() -> Self {
        SetUnion { parts: Vec::new() }
    }
}

/// Finite union of closed elementary sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClosedSetUnion {
    pub parts: Vec<ClosedElementarySet>,
}

// -------------------------------------------------------------------------
// degenerate constraints and canonical ordering
// -------------------------------------------------------------------------

/// Strips constant constraints: a true constant inequality or a `0 = 0`
/// equality is dropped, and a contradictory constant makes the whole set
/// empty (`None`).
fn simplify_degenerate(set: &ElementarySet) -> Option<ElementarySet> {
    let mut ineqs = Vec::with_capacity(set.ineqs.len());
    for p in &set.ineqs {
        match p.constant_value() {
            Some(c) => {
                if c <= rat(0) {
                    return None;
                }
            }
            None => ineqs.push(p.clone()),
        }
    }
    let mut eqs = Vec::with_capacity(set.eqs.len());
    for q in &set.eqs {
        match q.constant_value() {
            Some(c) => {
                if !c.is_zero() {
                    return None;
                }
            }
            None => eqs.push(q.clone()),
        }
    }
    Some(ElementarySet { ineqs, eqs })
}

fn canonicalize_lists(ineqs: &mut Vec<UPoly>, eqs: &mut Vec<UPoly>) {
    ineqs.sort_by(|a, b| a.cmp_canonical(b));
    ineqs.dedup();
    eqs.sort_by(|a, b| a.cmp_canonical(b));
    eqs.dedup();
}

fn cmp_poly_lists(a: &[UPoly], b: &[UPoly]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp_canonical(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn cmp_parts(a: &ElementarySet, b: &ElementarySet) -> Ordering {
    cmp_poly_lists(&a.ineqs, &b.ineqs).then_with(|| cmp_poly_lists(&a.eqs, &b.eqs))
}

// -------------------------------------------------------------------------
// pipeline steps
// -------------------------------------------------------------------------

/// Replaces every inequality polynomial by its odd part (the product of its
/// linear factors of odd multiplicity, keeping the leading coefficient).
/// Inequalities that collapse to a true constant are dropped; contradictory
/// constants are kept for downstream emptiness detection.
///
/// Away from multiple roots of the original polynomials this preserves the
/// set; see the module notes for the masking caveat handled by `normalize`.
pub fn tilde_ineqs(set: &ElementarySet) -> Result<ElementarySet, SemialgError> {
    let mut ineqs = Vec::with_capacity(set.ineqs.len());
    for p in &set.ineqs {
        let op = odd_part(p)?;
        match op.constant_value() {
            Some(c) if c > rat(0) => {} // trivially true, drop
            _ => ineqs.push(op),
        }
    }
    Ok(ElementarySet {
        ineqs,
        eqs: set.eqs.clone(),
    })
}

/// Rewrites the equalities to square-free monic polynomials, then for each
/// inequality `p` divides every equality by `gcd(p, q_1, ..., q_l)`. The
/// described set is unchanged and afterwards no inequality polynomial has a
/// root on the variety of the equalities.
pub fn clean_equalities(set: &ElementarySet) -> Result<ElementarySet, SemialgError> {
    let mut eqs = Vec::with_capacity(set.eqs.len());
    for q in &set.eqs {
        if q.is_zero() {
            continue; // 0 = 0
        }
        if q.is_constant() {
            eqs.push(q.clone()); // contradiction, recognized downstream
        } else {
            eqs.push(squarefree_part(q)?.monic());
        }
    }
    for p in &set.ineqs {
        if p.is_constant() || eqs.is_empty() {
            continue;
        }
        let mut with_p = vec![p.clone()];
        with_p.extend(eqs.iter().cloned());
        let w = gcd_many(&with_p)?;
        if w.is_constant() {
            continue;
        }
        for q in eqs.iter_mut() {
            if !q.is_constant() {
                *q = q.exact_div(&w, "clean_equalities: q / gcd(p, qs)")?;
            }
        }
    }
    Ok(ElementarySet {
        ineqs: set.ineqs.clone(),
        eqs,
    })
}

/// One record per split: total inequality degree before and after. The
/// measure decreases strictly, which is the termination argument.
pub type SplitTrace = Vec<(usize, usize)>;

fn total_ineq_degree(set: &ElementarySet) -> usize {
    set.ineqs.iter().filter_map(|p| p.degree()).sum()
}

/// Splits a set on common factors of inequality pairs until all pairs are
/// coprime. Each split on `u0 = gcd(p_i, p_j)` replaces the set by the
/// `u0 > 0` branch (with `p_i/u0`, `p_j/u0`) and the mirrored `-u0 > 0`
/// branch; the union of points is unchanged.
pub fn split_common_roots(set: &ElementarySet) -> Result<SetUnion, SemialgError> {
    Ok(split_common_roots_traced(set)?.0)
}

pub fn split_common_roots_traced(
    set: &ElementarySet,
) -> Result<(SetUnion, SplitTrace), SemialgError> {
    let mut trace = SplitTrace::new();
    let mut work = match simplify_degenerate(set) {
        Some(s) => vec![s],
        None => Vec::new(),
    };
    let mut done = Vec::new();
    while let Some(mut part) = work.pop() {
        // Exact duplicates would make gcd(p, p) = p loop forever.
        let mut seen = Vec::new();
        for p in &part.ineqs {
            if !seen.contains(p) {
                seen.push(p.clone());
            }
        }
        part.ineqs = seen;

        let pair = first_noncoprime_pair(&part.ineqs)?;
        let Some((i, j, u0)) = pair else {
            done.push(part);
            continue;
        };
        let before = total_ineq_degree(&part);
        let ui = part.ineqs[i].exact_div(&u0, "split: p_i / u0")?;
        let uj = part.ineqs[j].exact_div(&u0, "split: p_j / u0")?;
        let rest: Vec<UPoly> = part
            .ineqs
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i && *k != j)
            .map(|(_, p)| p.clone())
            .collect();
        let mut plus = vec![u0.clone(), ui.clone(), uj.clone()];
        plus.extend(rest.iter().cloned());
        let mut minus = vec![u0.neg(), ui.neg(), uj.neg()];
        minus.extend(rest.iter().cloned());
        let branches = [
            ElementarySet::new(plus, part.eqs.clone()),
            ElementarySet::new(minus, part.eqs.clone()),
        ];
        for b in branches {
            if let Some(s) = simplify_degenerate(&b) {
                trace.push((before, total_ineq_degree(&s)));
                work.push(s);
            } else {
                trace.push((before, 0));
            }
        }
    }
    Ok((SetUnion::new(done), trace))
}

/// Lowest-index pair of inequality polynomials with a nonconstant gcd.
fn first_noncoprime_pair(
    ineqs: &[UPoly],
) -> Result<Option<(usize, usize, UPoly)>, SemialgError> {
    for i in 0..ineqs.len() {
        for j in (i + 1)..ineqs.len() {
            if ineqs[i].is_constant() || ineqs[j].is_constant() {
                continue;
            }
            let g = gcd(&ineqs[i], &ineqs[j])?;
            if !g.is_constant() {
                return Ok(Some((i, j, g)));
            }
        }
    }
    Ok(None)
}

// -------------------------------------------------------------------------
// emptiness and certification
// -------------------------------------------------------------------------

/// Exact emptiness test for a strict elementary set.
pub fn is_empty_set(set: &ElementarySet) -> Result<bool, SemialgError> {
    let Some(set) = simplify_degenerate(set) else {
        return Ok(true);
    };
    if !set.eqs.is_empty() {
        let g = gcd_many(&set.eqs)?;
        if g.is_constant() {
            return Ok(true); // no common root
        }
        let points = isolate_roots(&g)?;
        for v in &points {
            if set.ineqs.iter().all(|p| sign_at(p, v) > 0) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    if set.ineqs.is_empty() {
        return Ok(false); // the whole line
    }
    // No equalities: the set is a union of open cells between the roots of
    // the product of all inequality polynomials. Sample one rational per
    // cell; each inequality has constant sign on a cell.
    let product = set
        .ineqs
        .iter()
        .fold(UPoly::one(), |acc, p| acc.mul(p));
    let mut cell_roots = isolate_roots(&product)?;
    separate_roots(&mut cell_roots);
    for s in cell_samples(&cell_roots) {
        if set.ineqs.iter().all(|p| p.sign_at_rat(&s) > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One rational sample inside each open cell delimited by the given
/// strictly-separated roots (including both unbounded cells).
pub(crate) fn cell_samples(roots: &[AlgebraicNumber]) -> Vec<poly::Rat> {
    if roots.is_empty() {
        return vec![rat(0)];
    }
    let mut samples = Vec::with_capacity(roots.len() + 1);
    samples.push(roots[0].lo() - rat(1));
    for w in roots.windows(2) {
        samples.push((w[0].hi() + w[1].lo()) / rat(2));
    }
    samples.push(roots.last().unwrap().hi() + rat(1));
    samples
}

/// Verifies the normalized-set invariants and wraps the set on success:
/// square-free inequalities, pairwise-coprime inequalities, square-free
/// equalities, and no inequality root on the variety of the equalities.
pub fn certify(set: &ElementarySet) -> Result<NormalizedElementarySet, SemialgError> {
    for p in &set.ineqs {
        if p.is_constant() {
            return Err(SemialgError::Invariant(format!(
                "constant inequality survived normalization: {p}"
            )));
        }
        let g = gcd(p, &p.derivative())?;
        if !g.is_constant() {
            return Err(SemialgError::Invariant(format!(
                "inequality polynomial is not square-free: {p}"
            )));
        }
    }
    for i in 0..set.ineqs.len() {
        for j in (i + 1)..set.ineqs.len() {
            let g = gcd(&set.ineqs[i], &set.ineqs[j])?;
            if !g.is_constant() {
                return Err(SemialgError::Invariant(format!(
                    "inequality polynomials share a factor: {} and {}",
                    set.ineqs[i], set.ineqs[j]
                )));
            }
        }
    }
    for q in &set.eqs {
        if q.is_constant() {
            return Err(SemialgError::Invariant(format!(
                "constant equality survived normalization: {q}"
            )));
        }
        let g = gcd(q, &q.derivative())?;
        if !g.is_constant() {
            return Err(SemialgError::Invariant(format!(
                "equality polynomial is not square-free: {q}"
            )));
        }
    }
    if !set.eqs.is_empty() {
        let g = gcd_many(&set.eqs)?;
        if !g.is_constant() {
            for v in isolate_roots(&g)? {
                for p in &set.ineqs {
                    if sign_at(p, &v) == 0 {
                        return Err(SemialgError::Invariant(format!(
                            "inequality {p} vanishes on the equality variety"
                        )));
                    }
                }
            }
        }
    }
    Ok(NormalizedElementarySet(set.clone()))
}

// -------------------------------------------------------------------------
// normalize and closure
// -------------------------------------------------------------------------

/// Full normalization of one elementary set: odd-part rewriting, masked
/// multiple-root exclusion, equality cleanup, common-root splitting,
/// pruning of empty pieces, certification, canonical ordering. The union of
/// the returned pieces has exactly the input's points.
pub fn normalize(set: &ElementarySet) -> Result<Vec<NormalizedElementarySet>, SemialgError> {
    let Some(set) = simplify_degenerate(set) else {
        return Ok(Vec::new());
    };
    let tilded = tilde_ineqs(&set)?;
    let Some(tilded) = simplify_degenerate(&tilded) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for candidate in exclusion_splits(&set, &tilded)? {
        let cleaned = clean_equalities(&candidate)?;
        let Some(cleaned) = simplify_degenerate(&cleaned) else {
            continue;
        };
        for piece in split_common_roots(&cleaned)?.parts {
            let Some(mut piece) = simplify_degenerate(&piece) else {
                continue;
            };
            if is_empty_set(&piece)? {
                continue;
            }
            canonicalize_lists(&mut piece.ineqs, &mut piece.eqs);
            out.push(certify(&piece)?);
        }
    }
    out.sort_by(|a, b| cmp_parts(a.as_set(), b.as_set()));
    out.dedup();
    Ok(out)
}

/// Repairs the odd-part rewriting at masked points. A multiple real root
/// `v` of an original inequality is masked when every rewritten inequality
/// is strictly positive at `v` (and, with equalities present, `v` lies on
/// the variety): `v` does not belong to the input set but would belong to
/// the rewritten one. Splitting on the sign of the product `d` of the
/// affected multiple-root polynomials removes exactly those points:
/// `{.. } = {.., d > 0} u {.., -d > 0}`.
fn exclusion_splits(
    original: &ElementarySet,
    tilded: &ElementarySet,
) -> Result<Vec<ElementarySet>, SemialgError> {
    let mut masked_factors: Vec<UPoly> = Vec::new();
    for p in &original.ineqs {
        if p.is_constant() {
            continue;
        }
        let g = gcd(p, &p.derivative())?;
        if g.is_constant() {
            continue; // p is square-free, no multiple roots
        }
        let r = squarefree_part(&g)?.monic();
        let mut masked = false;
        for v in isolate_roots(&r)? {
            let inside_ineqs = tilded.ineqs.iter().all(|q| sign_at(q, &v) > 0);
            let on_variety = tilded.eqs.iter().all(|q| sign_at(q, &v) == 0);
            if inside_ineqs && (tilded.eqs.is_empty() || on_variety) {
                masked = true;
                break;
            }
        }
        if masked && !masked_factors.contains(&r) {
            masked_factors.push(r);
        }
    }
    if masked_factors.is_empty() {
        return Ok(vec![tilded.clone()]);
    }
    let product = masked_factors
        .iter()
        .fold(UPoly::one(), |acc, r| acc.mul(r));
    let d = squarefree_part(&product)?.monic();
    let mut plus = tilded.clone();
    plus.ineqs.push(d.clone());
    let mut minus = tilded.clone();
    minus.ineqs.push(d.neg());
    Ok(vec![plus, minus])
}

/// Normalizes every part of a union and returns the flattened, canonically
/// ordered list of certified pieces.
pub fn normalize_union(u: &SetUnion) -> Result<Vec<NormalizedElementarySet>, SemialgError> {
    let mut out = Vec::new();
    for part in &u.parts {
        out.extend(normalize(part)?);
    }
    out.sort_by(|a, b| cmp_parts(a.as_set(), b.as_set()));
    out.dedup();
    Ok(out)
}

/// Turns the strict inequalities of a certified set into non-strict ones.
/// On certified sets this yields exactly the topological closure.
pub fn close_elementary(n: &NormalizedElementarySet) -> ClosedElementarySet {
    ClosedElementarySet {
        ineqs: n.ineqs().to_vec(),
        eqs: n.eqs().to_vec(),
    }
}

/// Symbolic closure of a strict union: normalize every part and relax each
/// certified piece. The result describes exactly the closure of the input's
/// point set.
pub fn closure_union(u: &SetUnion) -> Result<ClosedSetUnion, SemialgError> {
    let parts = normalize_union(u)?
        .iter()
        .map(close_elementary)
        .collect();
    Ok(ClosedSetUnion { parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn p(coeffs: &[i64]) -> UPoly {
        UPoly::from_ints(coeffs)
    }

    // t^2 (t - 1)
    fn even_mul_poly() -> UPoly {
        p(&[0, 0, -1, 1])
    }

    #[test]
    fn tilde_even_mul() {
        let b = ElementarySet::new(vec![even_mul_poly()], vec![]);
        let t = tilde_ineqs(&b).unwrap();
        assert_eq!(t.ineqs, vec![p(&[-1, 1])]);

        let already_odd = ElementarySet::new(vec![p(&[-2, 1])], vec![]);
        assert_eq!(tilde_ineqs(&already_odd).unwrap(), already_odd);

        // (t-1)^2 (t+3)^4 has constant odd part: dropped, equality kept
        let b = ElementarySet::new(
            vec![p(&[1, -2, 1]).mul(&p(&[3, 1]).pow(4))],
            vec![UPoly::var()],
        );
        let t = tilde_ineqs(&b).unwrap();
        assert!(t.ineqs.is_empty());
        assert_eq!(t.eqs, vec![UPoly::var()]);
    }

    #[test]
    fn clean_equalities_examples() {
        // {t > 0; t(t-1) = 0} -> {t > 0; t - 1 = 0}
        let b = ElementarySet::new(vec![UPoly::var()], vec![p(&[0, -1, 1])]);
        let c = clean_equalities(&b).unwrap();
        assert_eq!(c.eqs, vec![p(&[-1, 1])]);

        // coprime: unchanged
        let b = ElementarySet::new(vec![p(&[1, 1])], vec![p(&[-2, 1])]);
        assert_eq!(clean_equalities(&b).unwrap(), b);

        // {t > 0; t = 0}: equality collapses to the constant 1 (empty set)
        let b = ElementarySet::new(vec![UPoly::var()], vec![UPoly::var()]);
        let c = clean_equalities(&b).unwrap();
        assert_eq!(c.eqs, vec![UPoly::one()]);
        assert!(is_empty_set(&c).unwrap());
    }

    #[test]
    fn split_cl_intersection() {
        // p1 = -t(t-1), p2 = -t(t+1): u0 = t, both branches empty as sets
        let p1 = UPoly::var().mul(&p(&[-1, 1])).neg();
        let p2 = UPoly::var().mul(&p(&[1, 1])).neg();
        let b = ElementarySet::new(vec![p1, p2], vec![]);
        let (u, trace) = split_common_roots_traced(&b).unwrap();
        assert_eq!(u.parts.len(), 2);
        for (before, after) in &trace {
            assert!(after < before);
        }
        for part in &u.parts {
            assert!(is_empty_set(part).unwrap());
        }

        // already coprime: unchanged
        let b = ElementarySet::new(vec![UPoly::var(), p(&[1, 1])], vec![]);
        let u = split_common_roots(&b).unwrap();
        assert_eq!(u.parts, vec![b]);
    }

    #[test]
    fn split_preserves_two_sided_set() {
        // {t(t-1) > 0, t(t+1) > 0} = (-inf,-1) u (1,inf), split on u0 = t
        let b = ElementarySet::new(
            vec![UPoly::var().mul(&p(&[-1, 1])), UPoly::var().mul(&p(&[1, 1]))],
            vec![],
        );
        let u = split_common_roots(&b).unwrap();
        assert_eq!(u.parts.len(), 2);
        let member = |x: i64| {
            let v = AlgebraicNumber::from_rat(rat(x));
            u.parts
                .iter()
                .any(|part| part.ineqs.iter().all(|q| sign_at(q, &v) > 0))
        };
        assert!(member(-2) && member(2));
        assert!(!member(-1) && !member(0) && !member(1));
    }

    #[test]
    fn normalize_even_mul() {
        let b = ElementarySet::new(vec![even_mul_poly()], vec![]);
        let parts = normalize(&b).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].ineqs(), &[p(&[-1, 1])]);
        assert!(parts[0].eqs().is_empty());
    }

    #[test]
    fn normalize_full_line_and_empty() {
        assert_eq!(normalize(&ElementarySet::full_line()).unwrap().len(), 1);
        // 0 > 0 is empty
        let b = ElementarySet::new(vec![UPoly::zero()], vec![]);
        assert!(normalize(&b).unwrap().is_empty());
        // -3 > 0 is empty
        let b = ElementarySet::new(vec![UPoly::constant(rat(-3))], vec![]);
        assert!(normalize(&b).unwrap().is_empty());
    }

    #[test]
    fn normalize_cl_intersection_is_empty() {
        let p1 = UPoly::var().mul(&p(&[-1, 1])).neg();
        let p2 = UPoly::var().mul(&p(&[1, 1])).neg();
        let b = ElementarySet::new(vec![p1, p2], vec![]);
        assert!(normalize(&b).unwrap().is_empty());
    }

    #[test]
    fn normalize_excludes_masked_even_root() {
        // (t-5)^2 (t-1) > 0 is (1,5) u (5,inf): the masked point 5 must not
        // appear in the normalized set.
        let q = p(&[25, -10, 1]).mul(&p(&[-1, 1]));
        let b = ElementarySet::new(vec![q], vec![]);
        let parts = normalize(&b).unwrap();
        assert_eq!(parts.len(), 2);
        let five = AlgebraicNumber::from_rat(rat(5));
        for part in &parts {
            let member = part.ineqs().iter().all(|p| sign_at(p, &five) > 0);
            assert!(!member, "masked point 5 leaked into {part:?}");
        }
        // and 3, 7 are still members of one part each
        for x in [rat(3), rat(7), ratio(3, 2)] {
            let v = AlgebraicNumber::from_rat(x);
            assert!(parts
                .iter()
                .any(|part| part.ineqs().iter().all(|p| sign_at(p, &v) > 0)));
        }
    }

    #[test]
    fn normalize_masked_root_under_equality() {
        // {(t-5)^2 (t-1) > 0, t - 5 = 0} is empty: 5 zeroes the inequality.
        let q = p(&[25, -10, 1]).mul(&p(&[-1, 1]));
        let b = ElementarySet::new(vec![q], vec![p(&[-5, 1])]);
        assert!(normalize(&b).unwrap().is_empty());
    }

    #[test]
    fn normalize_is_idempotent() {
        let q = p(&[25, -10, 1]).mul(&p(&[-1, 1]));
        let b = ElementarySet::new(vec![q, UPoly::var().mul(&p(&[-3, 1]))], vec![]);
        let once = normalize(&b).unwrap();
        let again = normalize_union(&SetUnion::new(
            once.iter().map(|n| n.as_set().clone()).collect(),
        ))
        .unwrap();
        assert_eq!(once, again);
    }

    #[test]
    fn certify_rejects_bad_sets() {
        // not square-free
        let b = ElementarySet::new(vec![p(&[1, -2, 1])], vec![]);
        assert!(matches!(certify(&b), Err(SemialgError::Invariant(_))));
        // common factor
        let b = ElementarySet::new(
            vec![UPoly::var().mul(&p(&[-1, 1])), UPoly::var().mul(&p(&[1, 1]))],
            vec![],
        );
        assert!(matches!(certify(&b), Err(SemialgError::Invariant(_))));
        // inequality root on the variety
        let b = ElementarySet::new(vec![UPoly::var()], vec![UPoly::var()]);
        assert!(matches!(certify(&b), Err(SemialgError::Invariant(_))));
        // fine: coprime square-free, root-free on variety
        let b = ElementarySet::new(vec![p(&[1, 1])], vec![p(&[-2, 1])]);
        assert!(certify(&b).is_ok());
    }

    #[test]
    fn all_even_inequalities_leave_punctured_line() {
        // {(t-1)^2 (t+1)^2 > 0, (t-2)^2 (t+2)^2 > 0} is R minus {+-1, +-2};
        // both odd parts are the constant 1, so the punctured points are
        // recovered entirely by the exclusion split.
        let p1 = p(&[-1, 0, 1]).pow(2);
        let p2 = p(&[-4, 0, 1]).pow(2);
        let b = ElementarySet::new(vec![p1, p2], vec![]);
        let parts = normalize(&b).unwrap();
        assert_eq!(parts.len(), 2);
        for x in [rat(-1), rat(1), rat(-2), rat(2)] {
            let v = AlgebraicNumber::from_rat(x);
            for part in &parts {
                assert!(!part.ineqs().iter().all(|q| sign_at(q, &v) > 0));
            }
        }
        for x in [rat(0), rat(3), ratio(-3, 2)] {
            let v = AlgebraicNumber::from_rat(x.clone());
            assert!(
                parts
                    .iter()
                    .any(|part| part.ineqs().iter().all(|q| sign_at(q, &v) > 0)),
                "lost the point {x}"
            );
        }
    }

    #[test]
    fn masked_root_on_variety_is_filtered() {
        // {(t-1)^2 (t+1)^2 > 0, (t-1)(t+3) = 0}: only -3 survives; the
        // variety point 1 zeroes the inequality even though the odd part
        // (a positive constant) would accept it.
        let b = ElementarySet::new(
            vec![p(&[-1, 0, 1]).pow(2)],
            vec![p(&[-1, 1]).mul(&p(&[3, 1]))],
        );
        let parts = normalize(&b).unwrap();
        assert_eq!(parts.len(), 1);
        let keep = AlgebraicNumber::from_rat(rat(-3));
        let drop = AlgebraicNumber::from_rat(rat(1));
        let member = |v: &AlgebraicNumber| {
            parts.iter().any(|part| {
                part.ineqs().iter().all(|q| sign_at(q, v) > 0)
                    && part.eqs().iter().all(|q| sign_at(q, v) == 0)
            })
        };
        assert!(member(&keep));
        assert!(!member(&drop));
    }

    #[test]
    fn closing_a_point_keeps_it() {
        // {t > 0, t - 2 = 0} is the point {2} before and after closure
        let b = ElementarySet::new(vec![UPoly::var()], vec![p(&[-2, 1])]);
        let parts = normalize(&b).unwrap();
        assert_eq!(parts.len(), 1);
        let closed = close_elementary(&parts[0]);
        assert_eq!(closed.ineqs, parts[0].ineqs());
        assert_eq!(closed.eqs, parts[0].eqs());
        let two = AlgebraicNumber::from_rat(rat(2));
        assert!(closed.ineqs.iter().all(|q| sign_at(q, &two) >= 0));
        assert!(closed.eqs.iter().all(|q| sign_at(q, &two) == 0));
    }

    #[test]
    fn closure_union_examples() {
        // {t^2 (t-1) > 0} closes to {t - 1 >= 0}
        let u = SetUnion::new(vec![ElementarySet::new(vec![even_mul_poly()], vec![])]);
        let c = closure_union(&u).unwrap();
        assert_eq!(c.parts.len(), 1);
        assert_eq!(c.parts[0].ineqs, vec![p(&[-1, 1])]);

        // {t > 0} closes to {t >= 0}
        let u = SetUnion::new(vec![ElementarySet::new(vec![UPoly::var()], vec![])]);
        let c = closure_union(&u).unwrap();
        assert_eq!(c.parts[0].ineqs, vec![UPoly::var()]);

        assert!(closure_union(&SetUnion::empty()).unwrap().parts.is_empty());
    }
}
