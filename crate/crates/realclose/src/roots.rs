//! Exact real-root counting and isolation via Sturm sequences, and the
//! algebraic numbers built on top of them.
//!
//! An [`AlgebraicNumber`] is a square-free defining polynomial together with
//! an isolating rational interval. Comparison and polynomial sign evaluation
//! are exact: equality is decided through gcds of defining polynomials,
//! never by "the intervals look close enough".

use crate::poly::{gcd, rat, squarefree_part, PolyError, Rat, UPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    ZeroInput(&'static str),
    /// A finite counting bound coincides with a root of the polynomial.
    BoundIsRoot,
    Poly(PolyError),
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::ZeroInput(op) => write!(f, "{op}: zero polynomial input"),
            RootError::BoundIsRoot => write!(f, "counting bound is a root of the polynomial"),
            RootError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RootError {}

impl From<PolyError> for RootError {
    fn from(e: PolyError) -> Self {
        RootError::Poly(e)
    }
}

/// A real algebraic number: the unique root of `defining` (monic,
/// square-free) inside `[lo, hi]`. Rational values collapse to `lo == hi`;
/// otherwise neither endpoint is a root and the defining polynomial changes
/// sign across the interval.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    defining: UPoly,
    lo: Rat,
    hi: Rat,
}

impl AlgebraicNumber {
    pub fn from_rat(r: Rat) -> Self {
        AlgebraicNumber {
            defining: UPoly::linear_root(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn defining(&self) -> &UPoly {
        &self.defining
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// The exact rational value, when the interval has collapsed to a point.
    pub fn as_rational(&self) -> Option<&Rat> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// One bisection step. Keeps the same root; collapses to a rational
    /// point when one is found. Each step first probes the simplest
    /// rational in the interval, so a rational root is always recovered
    /// exactly after boundedly many steps.
    fn refine_step(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let probe = simplest_in_closed(&self.lo, &self.hi);
        if self.defining.sign_at_rat(&probe) == 0 {
            self.lo = probe.clone();
            self.hi = probe;
            return;
        }
        let mid = (&self.lo + &self.hi) / rat(2);
        let s_mid = self.defining.sign_at_rat(&mid);
        if s_mid == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if self.defining.sign_at_rat(&self.lo) == s_mid {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Re-expresses the same number as a root of `p`, which must vanish at
    /// it. Used to anchor roots found via a product polynomial back to the
    /// individual factor they come from. Returns `None` when `p` does not
    /// isolate this root over the current interval.
    pub fn rebind_to_factor(&self, p: &UPoly) -> Option<AlgebraicNumber> {
        if self.as_rational().is_some() || sign_at(p, self) != 0 {
            return None;
        }
        let sf = squarefree_part(p).ok()?.monic();
        if sf.sign_at_rat(&self.lo) == 0 || sf.sign_at_rat(&self.hi) == 0 {
            return None;
        }
        let chain = SturmChain::new(&sf).ok()?;
        if chain.count_between_rats(&self.lo, &self.hi) != 1 {
            return None;
        }
        Some(AlgebraicNumber {
            defining: sf,
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        })
    }

    /// Decimal rendering rounded half-up to `digits` places. The interval
    /// is refined until both ends round to the same decimal, so the result
    /// is the correctly rounded value, not an approximation of it.
    pub fn decimal_str(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let round = |x: &Rat| -> BigInt {
            let scaled = x * Rat::from_integer(scale.clone())
                + Rat::new(BigInt::one(), BigInt::from(2));
            scaled.floor().to_integer()
        };
        let target = Rat::new(BigInt::one(), &scale * BigInt::from(100));
        let mut a = refine(self, &target);
        while a.as_rational().is_none() && round(&a.lo) != round(&a.hi) {
            a.refine_step();
        }
        let units = round(&a.lo);
        let neg = units.is_negative();
        let mag = units.abs();
        let (int_part, frac_part) = (&mag / &scale, &mag % &scale);
        let mut s = String::new();
        if neg && !(int_part.is_zero() && frac_part.is_zero()) {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if digits > 0 {
            let frac = frac_part.to_string();
            s.push('.');
            for _ in 0..(digits as usize - frac.len()) {
                s.push('0');
            }
            s.push_str(&frac);
        }
        s
    }
}

/// Interval endpoint extended with the two infinities.
#[derive(Debug, Clone)]
pub enum ExtendedBound {
    NegInf,
    Finite(AlgebraicNumber),
    PosInf,
}

impl ExtendedBound {
    pub fn finite_rat(r: Rat) -> Self {
        ExtendedBound::Finite(AlgebraicNumber::from_rat(r))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedBound::Finite(_))
    }

    pub fn cmp_bound(&self, other: &ExtendedBound) -> Ordering {
        use ExtendedBound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => compare(a, b),
        }
    }
}

/// The rational with the smallest denominator (then numerator) in the
/// closed interval `[lo, hi]`, by continued-fraction descent. Used to snap
/// isolating intervals onto rational roots.
fn simplest_in_closed(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if lo == hi {
        return lo.clone();
    }
    let lo_ceil = lo.ceil();
    if lo_ceil <= *hi {
        // an integer fits; pick the one closest to zero
        let zero = rat(0);
        if *lo <= zero && zero <= *hi {
            return zero;
        }
        return if *lo > zero { lo_ceil } else { hi.floor() };
    }
    let n = lo.floor();
    let inv_hi = rat(1) / (hi - &n);
    let inv_lo = rat(1) / (lo - &n);
    n + rat(1) / simplest_in_closed(&inv_hi, &inv_lo)
}

/// Canonical Sturm chain: `p`, `p'`, then negated remainders down to a
/// constant.
pub fn sturm_sequence(p: &UPoly) -> Result<Vec<UPoly>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroInput("sturm_sequence"));
    }
    let mut chain = vec![p.clone()];
    if p.is_constant() {
        return Ok(chain);
    }
    chain.push(p.derivative());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]).map_err(RootError::from)?;
        if r.is_zero() {
            return Ok(chain);
        }
        chain.push(r.neg());
    }
}

/// Sturm chain of the square-free part, cached for repeated sign-variation
/// queries.
struct SturmChain {
    chain: Vec<UPoly>,
}

impl SturmChain {
    fn new(p: &UPoly) -> Result<Self, RootError> {
        let sf = squarefree_part(p)?;
        Ok(SturmChain {
            chain: sturm_sequence(&sf)?,
        })
    }

    fn variations_at_rat(&self, x: &Rat) -> usize {
        count_variations(self.chain.iter().map(|s| s.sign_at_rat(x)))
    }

    /// Sign variations at +inf or -inf from leading coefficients.
    fn variations_at_inf(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|s| {
            let lc_sign = if s.lc().is_some_and(|c| c.is_positive()) {
                1i8
            } else {
                -1i8
            };
            if positive || s.degree().unwrap_or(0) % 2 == 0 {
                lc_sign
            } else {
                -lc_sign
            }
        }))
    }

    fn variations_at(&self, b: &ExtendedBound) -> usize {
        match b {
            ExtendedBound::NegInf => self.variations_at_inf(false),
            ExtendedBound::PosInf => self.variations_at_inf(true),
            ExtendedBound::Finite(a) => match a.as_rational() {
                Some(r) => self.variations_at_rat(r),
                // Exact signs of every chain member at an algebraic point.
                None => count_variations(self.chain.iter().map(|s| sign_at(s, a))),
            },
        }
    }

    /// Number of distinct real roots of the underlying polynomial in
    /// `(lo, hi)`, assuming neither bound is a root.
    fn count_between_rats(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at_rat(lo).saturating_sub(self.variations_at_rat(hi))
    }
}

fn count_variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs {
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
/// Finite bounds that are roots of `p` are rejected.
pub fn count_roots(p: &UPoly, lo: &ExtendedBound, hi: &ExtendedBound) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroInput("count_roots"));
    }
    if p.is_constant() {
        return Ok(0);
    }
    for b in [lo, hi] {
        if let ExtendedBound::Finite(a) = b {
            if sign_at(p, a) == 0 {
                return Err(RootError::BoundIsRoot);
            }
        }
    }
    let chain = SturmChain::new(p)?;
    Ok(chain.variations_at(lo).saturating_sub(chain.variations_at(hi)))
}

/// Cauchy bound: every real root of `p` has absolute value strictly below
/// `1 + max |c_i| / |lc|`.
pub fn cauchy_bound(p: &UPoly) -> Rat {
    let lc = p.lc().expect("cauchy_bound: nonzero polynomial").abs();
    let mut m = rat(0);
    for c in p.coeffs() {
        let v = c.abs() / &lc;
        if v > m {
            m = v;
        }
    }
    m + rat(1)
}

/// All distinct real roots of `p`, in increasing order, with pairwise
/// disjoint isolating intervals. Every returned root has the monic
/// square-free part of `p` as its defining polynomial.
pub fn isolate_roots(p: &UPoly) -> Result<Vec<AlgebraicNumber>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroInput("isolate_roots"));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let sf = squarefree_part(p)?.monic();
    if sf.degree() == Some(1) {
        // exact rational root -c0 / c1 (monic: just -c0)
        let root = -sf.coeff(0);
        return Ok(vec![AlgebraicNumber::from_rat(root)]);
    }
    let chain = sturm_sequence(&sf)?;
    let chain = SturmChain { chain };
    let bound = cauchy_bound(&sf);
    let (lo, hi) = (-bound.clone(), bound);
    let mut out = Vec::new();
    isolate_in(&sf, &chain, lo, hi, &mut out);
    Ok(out)
}

/// Bisection worklist; `lo` and `hi` are never roots of `sf`.
fn isolate_in(sf: &UPoly, chain: &SturmChain, lo: Rat, hi: Rat, out: &mut Vec<AlgebraicNumber>) {
    let n = chain.count_between_rats(&lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        // Snap onto a rational root when the interval's simplest rational
        // happens to be one; irrational roots keep the interval.
        let probe = simplest_in_closed(&lo, &hi);
        let (lo, hi) = if sf.sign_at_rat(&probe) == 0 {
            (probe.clone(), probe)
        } else {
            (lo, hi)
        };
        out.push(AlgebraicNumber {
            defining: sf.clone(),
            lo,
            hi,
        });
        return;
    }
    let mid = (&lo + &hi) / rat(2);
    if sf.sign_at_rat(&mid) != 0 {
        isolate_in(sf, chain, lo, mid.clone(), out);
        isolate_in(sf, chain, mid, hi, out);
        return;
    }
    // The midpoint is a rational root: record it as a point and nudge the
    // recursion bounds off the root by powers of two.
    let mut eps = (&hi - &lo) / rat(4);
    loop {
        let (l, r) = (&mid - &eps, &mid + &eps);
        if sf.sign_at_rat(&l) != 0
            && sf.sign_at_rat(&r) != 0
            && chain.count_between_rats(&l, &r) == 1
        {
            isolate_in(sf, chain, lo, l, out);
            out.push(AlgebraicNumber {
                defining: sf.clone(),
                lo: mid.clone(),
                hi: mid.clone(),
            });
            isolate_in(sf, chain, r, hi, out);
            return;
        }
        eps /= rat(2);
    }
}

/// Returns the same root with its isolating interval shrunk to at most
/// `width`. Point intervals and already-small intervals come back as-is.
pub fn refine(a: &AlgebraicNumber, width: &Rat) -> AlgebraicNumber {
    let mut out = a.clone();
    while out.lo != out.hi && out.width() > *width {
        out.refine_step();
    }
    out
}

/// Exact order of an algebraic number against a rational.
pub fn cmp_rat(a: &AlgebraicNumber, r: &Rat) -> Ordering {
    if let Some(v) = a.as_rational() {
        return v.cmp(r);
    }
    if *r <= a.lo {
        // lo is not a root, so the root lies strictly above lo >= r.
        return Ordering::Greater;
    }
    if *r >= a.hi {
        return Ordering::Less;
    }
    let s_r = a.defining.sign_at_rat(r);
    if s_r == 0 {
        return Ordering::Equal; // the unique root in [lo, hi]
    }
    // One sign comparison locates the root relative to r.
    if a.defining.sign_at_rat(&a.lo) == s_r {
        Ordering::Greater // no sign change in [lo, r]: root is above r
    } else {
        Ordering::Less
    }
}

/// Exact total order on algebraic numbers. Equality is decided via the gcd
/// of the defining polynomials; distinct roots are separated by refinement.
pub fn compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    if let Some(r) = b.as_rational() {
        return cmp_rat(a, r);
    }
    if let Some(r) = a.as_rational() {
        return cmp_rat(b, r).reverse();
    }
    if a.hi < b.lo {
        return Ordering::Less;
    }
    if b.hi < a.lo {
        return Ordering::Greater;
    }
    // Overlapping intervals: decide equality once, exactly. Any root of
    // g = gcd inside the overlap is a root of both defining polynomials in
    // both isolating intervals, hence equals both numbers.
    let g = gcd(&a.defining, &b.defining).expect("defining polynomials are nonzero");
    if !g.is_constant() {
        let lo = a.lo.clone().max(b.lo.clone());
        let hi = a.hi.clone().min(b.hi.clone());
        if lo <= hi {
            // Overlap endpoints are endpoints of a or b, so never roots of g.
            let chain = SturmChain::new(&g).expect("gcd is nonzero");
            let n = if lo == hi {
                0
            } else {
                chain.count_between_rats(&lo, &hi)
            };
            if n > 0 {
                return Ordering::Equal;
            }
        }
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    loop {
        x.refine_step();
        y.refine_step();
        if let Some(r) = x.as_rational() {
            return cmp_rat(&y, r).reverse();
        }
        if let Some(r) = y.as_rational() {
            return cmp_rat(&x, r);
        }
        if x.hi < y.lo {
            return Ordering::Less;
        }
        if y.hi < x.lo {
            return Ordering::Greater;
        }
    }
}

/// Exact sign of `p` at an algebraic point: 0 exactly when the point is a
/// root of `p`, otherwise the stable sign found by refinement.
pub fn sign_at(p: &UPoly, a: &AlgebraicNumber) -> i8 {
    if p.is_zero() {
        return 0;
    }
    if let Some(r) = a.as_rational() {
        return p.sign_at_rat(r);
    }
    if p.is_constant() {
        return p.sign_at_rat(&rat(0));
    }
    // Root test: p(a) = 0 iff gcd(p, defining) has a root in the isolating
    // interval (the interval holds exactly one root of the defining
    // polynomial, and the interval endpoints are not roots of it).
    let g = gcd(p, &a.defining).expect("nonzero polynomials");
    if !g.is_constant() {
        let chain = SturmChain::new(&g).expect("gcd is nonzero");
        if chain.count_between_rats(&a.lo, &a.hi) > 0 {
            return 0;
        }
    }
    // Not a root: shrink the interval until p has no root inside it, then
    // any interior point gives the sign. Interval endpoints that happen to
    // hit roots of p are stepped past.
    let chain = SturmChain::new(p).expect("p is nonzero and nonconstant");
    let mut x = a.clone();
    loop {
        let (mut l, mut h) = (x.lo.clone(), x.hi.clone());
        let mut step = x.width() / rat(4);
        while p.sign_at_rat(&l) == 0 || p.sign_at_rat(&h) == 0 {
            // Nudged points keep the defining sign of the original
            // endpoints, so the root stays bracketed.
            let (nl, nh) = (&l + &step, &h - &step);
            if x.defining.sign_at_rat(&nl) == x.defining.sign_at_rat(&x.lo) {
                l = nl;
            }
            if x.defining.sign_at_rat(&nh) == x.defining.sign_at_rat(&x.hi) {
                h = nh;
            }
            step /= rat(2);
        }
        if chain.count_between_rats(&l, &h) == 0 {
            return p.sign_at_rat(&l);
        }
        x.refine_step();
        if let Some(r) = x.as_rational() {
            return p.sign_at_rat(r);
        }
    }
}

/// Refines a sorted list of pairwise-distinct roots until their isolating
/// intervals are strictly separated: `roots[i].hi < roots[i+1].lo`.
pub fn separate_roots(roots: &mut [AlgebraicNumber]) {
    for i in 1..roots.len() {
        loop {
            let (left, right) = roots.split_at_mut(i);
            let a = left.last_mut().unwrap();
            let b = &mut right[0];
            if a.hi < b.lo {
                break;
            }
            a.refine_step();
            b.refine_step();
        }
    }
}
