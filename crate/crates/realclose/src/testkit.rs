//! Test support: seeded random factored polynomials with ground-truth
//! factorizations, random set corpora, and a floating-point sampler for
//! images of multivariate semi-algebraic sets.
//!
//! The sampler is advisory only. It stands in for the upstream quantifier
//! elimination that produces univariate descriptions: fixtures pair a
//! multivariate instance (`<name>.mv`) with a hand-written univariate
//! description (`<name>.set`), and tests check one-sided containment of the
//! sampled values in the description's closure.

use crate::poly::{rat, Rat, UPoly};
use crate::sem::is_member_closed;
use crate::semialg::{ClosedSetUnion, ElementarySet, SetUnion};
use num_bigint::BigInt;
use std::fmt;

/// Small deterministic PRNG (splitmix64). Reproducible across platforms and
/// independent of any external crate's stream changes.
#[derive(Debug, Clone)]
pub struct TestRng {
    state: u64,
}

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng {
            state: seed.wrapping_add(0x9e37_79b9_7f4a_7c15),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// Uniform in `[0, 1)`.
    pub fn f64_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

// -------------------------------------------------------------------------
// factored polynomials with ground truth
// -------------------------------------------------------------------------

/// Known factorization `lc * prod (t - r_i)^(m_i)` over distinct rational
/// roots, kept alongside the expanded polynomial as the oracle for the
/// factor-extraction operators.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub lc: Rat,
    pub roots: Vec<(Rat, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly {
        let mut p = UPoly::constant(self.lc.clone());
        for (r, m) in &self.roots {
            p = p.mul(&UPoly::linear_root(r).pow(*m));
        }
        p
    }

    pub fn degree(&self) -> u32 {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    fn selected_product(&self, keep: impl Fn(u32) -> bool) -> UPoly {
        let mut p = UPoly::constant(self.lc.clone());
        for (r, m) in &self.roots {
            if keep(*m) {
                p = p.mul(&UPoly::linear_root(r));
            }
        }
        p
    }

    /// `lc * prod over odd multiplicities (t - r_i)`.
    pub fn odd_part_truth(&self) -> UPoly {
        self.selected_product(|m| m % 2 == 1)
    }

    /// `lc * prod over multiplicity one (t - r_i)`.
    pub fn once_part_truth(&self) -> UPoly {
        self.selected_product(|m| m == 1)
    }

    /// `lc * prod over all distinct roots (t - r_i)`.
    pub fn squarefree_truth(&self) -> UPoly {
        self.selected_product(|_| true)
    }
}

/// Deterministic factored polynomial: up to `max_roots` distinct rational
/// roots from a small pool, multiplicities in `1..=max_mult`, random nonzero
/// rational leading coefficient. Returns the expanded polynomial and the
/// ground truth.
pub fn gen_factored_poly(seed: u64, max_roots: u32, max_mult: u32) -> (UPoly, Factorization) {
    let mut rng = TestRng::new(seed);
    gen_factored_poly_with(&mut rng, max_roots, max_mult)
}

pub fn gen_factored_poly_with(
    rng: &mut TestRng,
    max_roots: u32,
    max_mult: u32,
) -> (UPoly, Factorization) {
    let n_roots = rng.below(max_roots as u64 + 1) as u32;
    let mut roots: Vec<(Rat, u32)> = Vec::with_capacity(n_roots as usize);
    while (roots.len() as u32) < n_roots {
        let r = random_pool_rat(rng);
        if roots.iter().any(|(existing, _)| *existing == r) {
            continue;
        }
        let m = 1 + rng.below(max_mult as u64) as u32;
        roots.push((r, m));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let lc = loop {
        let c = rat(rng.range_i64(-3, 3));
        if !c.eq(&rat(0)) {
            break if rng.chance(1, 4) { c / rat(2) } else { c };
        }
    };
    let f = Factorization { lc, roots };
    (f.expand(), f)
}

/// Rational from a deliberately small pool so that gcd paths (shared roots
/// across polynomials) actually trigger in random corpora.
fn random_pool_rat(rng: &mut TestRng) -> Rat {
    let numer = rng.range_i64(-6, 6);
    let denom = *[1i64, 1, 1, 2, 2, 3]
        .get(rng.below(6) as usize)
        .unwrap();
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

// -------------------------------------------------------------------------
// random set corpus
// -------------------------------------------------------------------------

/// Random strict elementary set: up to `max_ineqs` factored inequality
/// polynomials with total degree at most `max_deg` each, and at most
/// `max_eqs` equality polynomials.
pub fn gen_elementary_set(
    rng: &mut TestRng,
    max_ineqs: u32,
    max_eqs: u32,
    max_deg: u32,
) -> ElementarySet {
    let n_ineqs = rng.below(max_ineqs as u64 + 1) as usize;
    let mut ineqs = Vec::with_capacity(n_ineqs);
    for _ in 0..n_ineqs {
        if rng.chance(1, 20) {
            // occasional constant for edge coverage
            ineqs.push(UPoly::constant(rat(rng.range_i64(-2, 3))));
            continue;
        }
        ineqs.push(gen_bounded_degree_poly(rng, max_deg));
    }
    let n_eqs = rng.below(max_eqs as u64 + 1) as usize;
    let mut eqs = Vec::with_capacity(n_eqs);
    for _ in 0..n_eqs {
        eqs.push(gen_bounded_degree_poly(rng, max_deg.min(4)));
    }
    ElementarySet::new(ineqs, eqs)
}

/// Factored polynomial with total degree in `1..=max_deg`.
fn gen_bounded_degree_poly(rng: &mut TestRng, max_deg: u32) -> UPoly {
    loop {
        let mut budget = 1 + rng.below(max_deg as u64) as u32;
        let mut roots: Vec<(Rat, u32)> = Vec::new();
        while budget > 0 && rng.chance(5, 6) {
            let r = random_pool_rat(rng);
            if roots.iter().any(|(e, _)| *e == r) {
                continue;
            }
            let m = 1 + rng.below(budget.min(3) as u64) as u32;
            roots.push((r, m));
            budget -= m;
        }
        if roots.is_empty() {
            continue;
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let lc = rat(if rng.chance(1, 2) { 1 } else { -1 } * rng.range_i64(1, 2));
        return Factorization { lc, roots }.expand();
    }
}

/// Random strict union with up to `max_parts` parts.
pub fn gen_union(
    rng: &mut TestRng,
    max_parts: u32,
    max_ineqs: u32,
    max_eqs: u32,
    max_deg: u32,
) -> SetUnion {
    let n = 1 + rng.below(max_parts as u64) as usize;
    SetUnion::new(
        (0..n)
            .map(|_| gen_elementary_set(rng, max_ineqs, max_eqs, max_deg))
            .collect(),
    )
}

// -------------------------------------------------------------------------
// multivariate sampling oracle
// -------------------------------------------------------------------------

/// Multivariate polynomial as an exponent-vector to coefficient list.
#[derive(Debug, Clone, PartialEq)]
pub struct MvPoly {
    pub nvars: usize,
    pub terms: Vec<(Vec<u32>, f64)>,
}

impl MvPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(exps, c)| {
                c * exps
                    .iter()
                    .zip(x)
                    .map(|(&e, &xi)| xi.powi(e as i32))
                    .product::<f64>()
            })
            .sum()
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> MvPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(exps, _)| exps[i] > 0)
            .map(|(exps, c)| {
                let mut e = exps.clone();
                let k = e[i] as f64;
                e[i] -= 1;
                (e, c * k)
            })
            .collect();
        MvPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvRel {
    /// `q(x) = 0`, relaxed to `|q(x)| <= 1e-6` with projection retries.
    Eq,
    /// `p(x) > 0`.
    Gt,
}

#[derive(Debug, Clone)]
pub struct MvConstraint {
    pub poly: MvPoly,
    pub rel: MvRel,
}

/// A multivariate optimization instance: objective `f`, constraints
/// defining `S`, and a sampling box.
#[derive(Debug, Clone)]
pub struct MvInstance {
    pub nvars: usize,
    pub objective: MvPoly,
    pub constraints: Vec<MvConstraint>,
    pub box_lo: f64,
    pub box_hi: f64,
}

pub const EQ_TOLERANCE: f64 = 1e-6;

/// Draws `count` values `f(x)` at box points satisfying the constraints.
/// Equalities are enforced up to [`EQ_TOLERANCE`] by Newton steps along the
/// coordinate with the largest partial derivative. Deterministic per seed.
pub fn sample_image(inst: &MvInstance, count: usize, seed: u64) -> Vec<f64> {
    let mut rng = TestRng::new(seed);
    let mut out = Vec::with_capacity(count);
    let span = inst.box_hi - inst.box_lo;
    let max_attempts = count.saturating_mul(2000);
    let partials: Vec<Vec<MvPoly>> = inst
        .constraints
        .iter()
        .map(|c| (0..inst.nvars).map(|i| c.poly.partial(i)).collect())
        .collect();
    'attempt: for _ in 0..max_attempts {
        if out.len() >= count {
            break;
        }
        let mut x: Vec<f64> = (0..inst.nvars)
            .map(|_| inst.box_lo + span * rng.f64_unit())
            .collect();
        // project onto each equality in turn
        for (ci, c) in inst.constraints.iter().enumerate() {
            if c.rel != MvRel::Eq {
                continue;
            }
            let mut ok = false;
            for _ in 0..60 {
                let v = c.poly.eval(&x);
                if v.abs() <= EQ_TOLERANCE {
                    ok = true;
                    break;
                }
                let mut best = 0usize;
                let mut best_mag = 0.0f64;
                for (i, dq) in partials[ci].iter().enumerate() {
                    let d = dq.eval(&x).abs();
                    if d > best_mag {
                        best_mag = d;
                        best = i;
                    }
                }
                if best_mag < 1e-12 {
                    break;
                }
                x[best] -= v / partials[ci][best].eval(&x);
                if !x[best].is_finite() {
                    break;
                }
            }
            if !ok {
                continue 'attempt;
            }
        }
        if x.iter().any(|xi| *xi < inst.box_lo || *xi > inst.box_hi) {
            continue 'attempt;
        }
        for c in &inst.constraints {
            let v = c.poly.eval(&x);
            let holds = match c.rel {
                MvRel::Eq => v.abs() <= EQ_TOLERANCE,
                MvRel::Gt => v > 0.0,
            };
            if !holds {
                continue 'attempt;
            }
        }
        out.push(inst.objective.eval(&x));
    }
    out
}

/// Nearest rational with the given denominator; turns sampled floats into
/// exact membership queries.
pub fn rational_near(x: f64, denom: u64) -> Rat {
    let scaled = (x * denom as f64).round();
    Rat::new(
        BigInt::from(scaled as i64),
        BigInt::from(denom),
    )
}

/// Membership in a closed union with additive slack on both sides, for
/// checking floating-point samples against exact sets.
pub fn member_with_slack(x: &Rat, u: &ClosedSetUnion, slack: &Rat) -> bool {
    is_member_closed(x, u)
        || is_member_closed(&(x + slack), u)
        || is_member_closed(&(x - slack), u)
}

// -------------------------------------------------------------------------
// .mv fixture format
// -------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvFormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for MvFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for MvFormatError {}

/// Parses the ad-hoc multivariate instance format:
///
/// ```text
/// vars 2
/// box -2000 2000
/// objective
/// term 1 1 0
/// constraint eq
/// term 1 1 2
/// term -1 0 0
/// ```
///
/// `term c e1 ... en` adds the monomial `c * x1^e1 ... xn^en` to the section
/// opened by the preceding `objective` or `constraint eq|gt` line.
pub fn parse_mv(src: &str) -> Result<MvInstance, MvFormatError> {
    let fail = |line: usize, message: String| MvFormatError { line, message };
    let mut nvars: Option<usize> = None;
    let mut bounds: Option<(f64, f64)> = None;
    let mut objective: Option<MvPoly> = None;
    let mut constraints: Vec<MvConstraint> = Vec::new();
    // which term list the `term` lines currently extend
    enum Section {
        None,
        Objective,
        Constraint,
    }
    let mut section = Section::None;

    for (idx, raw) in src.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "vars" => {
                let n: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| fail(lineno, "expected `vars <count>`".into()))?;
                nvars = Some(n);
            }
            "box" => {
                let lo: f64 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| fail(lineno, "expected `box <lo> <hi>`".into()))?;
                let hi: f64 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| fail(lineno, "expected `box <lo> <hi>`".into()))?;
                bounds = Some((lo, hi));
            }
            "objective" => {
                let n = nvars.ok_or_else(|| fail(lineno, "`objective` before `vars`".into()))?;
                objective = Some(MvPoly {
                    nvars: n,
                    terms: Vec::new(),
                });
                section = Section::Objective;
            }
            "constraint" => {
                let n = nvars.ok_or_else(|| fail(lineno, "`constraint` before `vars`".into()))?;
                let rel = match words.next() {
                    Some("eq") => MvRel::Eq,
                    Some("gt") => MvRel::Gt,
                    _ => return Err(fail(lineno, "expected `constraint eq|gt`".into())),
                };
                constraints.push(MvConstraint {
                    poly: MvPoly {
                        nvars: n,
                        terms: Vec::new(),
                    },
                    rel,
                });
                section = Section::Constraint;
            }
            "term" => {
                let n = nvars.ok_or_else(|| fail(lineno, "`term` before `vars`".into()))?;
                let coeff: f64 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| fail(lineno, "expected `term <coeff> <exps...>`".into()))?;
                let exps: Vec<u32> = words
                    .map(|w| w.parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| fail(lineno, "bad exponent".into()))?;
                if exps.len() != n {
                    return Err(fail(lineno, format!("expected {n} exponents")));
                }
                let target = match section {
                    Section::Objective => &mut objective.as_mut().unwrap().terms,
                    Section::Constraint => &mut constraints.last_mut().unwrap().poly.terms,
                    Section::None => {
                        return Err(fail(lineno, "`term` outside a section".into()))
                    }
                };
                target.push((exps, coeff));
            }
            other => return Err(fail(lineno, format!("unknown directive `{other}`"))),
        }
    }
    let nvars = nvars.ok_or_else(|| fail(1, "missing `vars` line".into()))?;
    let (box_lo, box_hi) = bounds.ok_or_else(|| fail(1, "missing `box` line".into()))?;
    let objective = objective.ok_or_else(|| fail(1, "missing `objective` section".into()))?;
    Ok(MvInstance {
        nvars,
        objective,
        constraints,
        box_lo,
        box_hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{odd_part, once_part, squarefree_part};

    #[test]
    fn generator_is_deterministic() {
        let (p1, f1) = gen_factored_poly(42, 6, 6);
        let (p2, f2) = gen_factored_poly(42, 6, 6);
        assert_eq!(p1, p2);
        assert_eq!(f1.roots, f2.roots);
        let (p3, _) = gen_factored_poly(43, 6, 6);
        assert!(p1 != p3 || p1.is_constant());
    }

    #[test]
    fn factorization_truths_match_operators() {
        // (t-1)^2 (t+2) constructed directly
        let f = Factorization {
            lc: rat(1),
            roots: vec![(rat(-2), 1), (rat(1), 2)],
        };
        let p = f.expand();
        assert_eq!(odd_part(&p).unwrap(), f.odd_part_truth());
        assert_eq!(once_part(&p).unwrap(), f.once_part_truth());
        assert_eq!(squarefree_part(&p).unwrap(), f.squarefree_truth());

        // zero roots: a constant
        let (c, f) = gen_factored_poly(7, 0, 6);
        assert!(c.is_constant());
        assert_eq!(f.roots.len(), 0);

        // roots {0: 3} -> t^3
        let f = Factorization {
            lc: rat(1),
            roots: vec![(rat(0), 3)],
        };
        assert_eq!(f.expand(), UPoly::var().pow(3));
    }

    #[test]
    fn sampler_respects_simple_constraints() {
        // f = x1^2 on a box: all samples nonnegative
        let inst = MvInstance {
            nvars: 1,
            objective: MvPoly {
                nvars: 1,
                terms: vec![(vec![2], 1.0)],
            },
            constraints: vec![],
            box_lo: -5.0,
            box_hi: 5.0,
        };
        let vals = sample_image(&inst, 100, 1);
        assert_eq!(vals.len(), 100);
        assert!(vals.iter().all(|v| *v >= 0.0));

        // f = x1 subject to x1 - 2 > 0: min sample >= 2
        let inst = MvInstance {
            nvars: 1,
            objective: MvPoly {
                nvars: 1,
                terms: vec![(vec![1], 1.0)],
            },
            constraints: vec![MvConstraint {
                poly: MvPoly {
                    nvars: 1,
                    terms: vec![(vec![1], 1.0), (vec![0], -2.0)],
                },
                rel: MvRel::Gt,
            }],
            box_lo: -5.0,
            box_hi: 5.0,
        };
        let vals = sample_image(&inst, 50, 2);
        assert!(!vals.is_empty());
        assert!(vals.iter().all(|v| *v > 2.0));
    }

    #[test]
    fn sampler_projects_onto_equalities() {
        // S = { x1 * x2^2 = 1 }: f = x1 is positive on S, approaching 0
        let src = "vars 2\nbox -2000 2000\nobjective\nterm 1 1 0\nconstraint eq\nterm 1 1 2\nterm -1 0 0\n";
        let inst = parse_mv(src).unwrap();
        let vals = sample_image(&inst, 200, 3);
        assert!(vals.len() >= 100);
        assert!(vals.iter().all(|v| *v > 0.0));
        let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(min < 1e-3, "low end should approach 0, got {min}");
    }

    #[test]
    fn mv_parse_errors() {
        assert!(parse_mv("term 1 0\n").is_err());
        assert!(parse_mv("vars 2\nbox 0 1\nobjective\nterm 1 0\n").is_err());
        assert!(parse_mv("vars 1\nwhat 3\n").is_err());
    }

    #[test]
    fn random_union_shapes() {
        let mut rng = TestRng::new(9);
        for _ in 0..50 {
            let u = gen_union(&mut rng, 3, 4, 1, 6);
            assert!(!u.parts.is_empty() && u.parts.len() <= 3);
            for part in &u.parts {
                assert!(part.ineqs.len() <= 4);
                assert!(part.eqs.len() <= 1);
                for p in part.ineqs.iter().chain(&part.eqs) {
                    assert!(p.degree().unwrap_or(0) <= 6);
                }
            }
        }
    }
}
