//! Dense univariate polynomials with exact rational coefficients.
//!
//! Everything downstream (root isolation, set normalization, closure) is
//! built on the operators here: Euclidean gcd, the square-free part
//! `p / gcd(p, p')`, the product of factors occurring once, and the product
//! of factors occurring an odd number of times. All divisions that are
//! mathematically exact are checked for a vanishing remainder; a nonzero
//! remainder is reported as an invariant violation rather than silently
//! truncated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact rational scalar. `BigRational` keeps values reduced with a positive
/// denominator, which is exactly the invariant we need.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Polynomial division by the zero polynomial.
    DivisionByZero,
    /// gcd of two zero polynomials (or an all-zero list).
    AllZero,
    /// An operation that requires a nonzero polynomial was given zero.
    ZeroInput(&'static str),
    /// A division the theory guarantees exact left a remainder. This is a
    /// bug in the caller, never a property of the input.
    InexactDivision(&'static str),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
            PolyError::AllZero => write!(f, "gcd of all-zero polynomials"),
            PolyError::ZeroInput(op) => write!(f, "{op}: zero polynomial input"),
            PolyError::InexactDivision(ctx) => {
                write!(f, "internal invariant violation: inexact division in {ctx}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Dense univariate polynomial over the rationals. `coeffs[i]` is the
/// coefficient of `t^i`; the last entry is nonzero, and the zero polynomial
/// is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros into canonical form.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// The variable `t`.
    pub fn var() -> Self {
        UPoly::new(vec![rat(0), rat(1)])
    }

    /// `t - r`, the linear factor with root `r`.
    pub fn linear_root(r: &Rat) -> Self {
        UPoly::new(vec![-r.clone(), rat(1)])
    }

    /// Convenience for tests and fixtures: integer coefficients, low to high.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn lc(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// The constant value if this is a constant (or zero) polynomial.
    pub fn constant_value(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(rat(0)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `self(x)`: -1, 0 or +1.
    pub fn sign_at_rat(&self, x: &Rat) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, k: &Rat) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UPoly::new(out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> UPoly {
        let mut base = self.clone();
        let mut acc = UPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder with `self = q * div + r`, `deg r < deg div`.
    pub fn divrem(&self, div: &UPoly) -> Result<(UPoly, UPoly), PolyError> {
        if div.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = div.coeffs.len() - 1;
        let lc = div.lc().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat(0); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / lc;
            if !factor.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let v = c * &factor;
                    rem[k + i] -= v;
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Division known to be exact; a nonzero remainder reports `ctx` as the
    /// offending computation.
    pub fn exact_div(&self, div: &UPoly, ctx: &'static str) -> Result<UPoly, PolyError> {
        let (q, r) = self.divrem(div)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision(ctx));
        }
        Ok(q)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * rat(i as i64));
        }
        UPoly::new(out)
    }

    /// Scales a nonzero polynomial to leading coefficient 1.
    pub fn monic(&self) -> UPoly {
        match self.lc() {
            None => UPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&(rat(1) / l)),
        }
    }

    /// Total ordering used for canonical output: degree first, then
    /// coefficients from the leading one down.
    pub fn cmp_canonical(&self, other: &UPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Primitive integer form: the content-free integer coefficient vector,
    /// with sign chosen so the leading coefficient is positive. The rational
    /// scalar relating it to `self` is dropped; callers only use this where
    /// results are defined up to a positive constant.
    fn primitive_int(&self) -> Vec<BigInt> {
        assert!(!self.is_zero());
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        ints.iter().map(|c| c / &content).collect()
    }
}

impl fmt::Display for UPoly {
    /// Canonical rendering, parseable by the expression grammar:
    /// `t^3 - 2*t + 1/2`, `-t`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}

// -------------------------------------------------------------------------
// gcd machinery
// -------------------------------------------------------------------------

const COPRIME_PROBE_PRIME: u64 = 2_147_483_647; // 2^31 - 1

fn int_poly_mod_p(p: &[BigInt], m: u64) -> Vec<u64> {
    let modulus = BigInt::from(m);
    let mut out: Vec<u64> = p
        .iter()
        .map(|c| {
            let mut r = c % &modulus;
            if r.is_negative() {
                r += &modulus;
            }
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// gcd degree check in GF(p)[t]. Returns true when the images are coprime,
/// which certifies coprimality over Q; false is inconclusive.
fn coprime_mod_p(a: &[BigInt], b: &[BigInt], m: u64) -> bool {
    let mut f = int_poly_mod_p(a, m);
    let mut g = int_poly_mod_p(b, m);
    // A vanishing leading coefficient mod m breaks the degree argument.
    if f.len() != a.len() || g.len() != b.len() || f.is_empty() || g.is_empty() {
        return false;
    }
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % m as u128) as u64;
    let powmod = |mut x: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, x);
            }
            x = mulmod(x, x);
            e >>= 1;
        }
        acc
    };
    while !g.is_empty() {
        if g.len() == 1 {
            return true; // nonzero constant gcd
        }
        // f mod g by synthetic division
        let inv_lc = powmod(*g.last().unwrap(), m - 2);
        while f.len() >= g.len() {
            let k = f.len() - g.len();
            let factor = mulmod(*f.last().unwrap(), inv_lc);
            for (i, &gc) in g.iter().enumerate() {
                let sub = mulmod(factor, gc);
                f[k + i] = (f[k + i] + m - sub) % m;
            }
            while f.last() == Some(&0) {
                f.pop();
            }
        }
        std::mem::swap(&mut f, &mut g);
    }
    false // gcd is the (nonconstant) other entry
}

fn int_content(p: &[BigInt]) -> BigInt {
    let mut c = BigInt::zero();
    for x in p {
        c = c.gcd(x);
    }
    c
}

/// Pseudo-remainder of integer polynomials: `lc(b)^(da-db+1) * a mod b`,
/// reduced to its primitive part. Keeps the remainder sequence from blowing
/// up the way plain rational Euclid does at higher degrees.
fn primitive_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lcb = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let lead = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lcb;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= bc * &lead;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    if rem.is_empty() {
        return rem;
    }
    let mut content = int_content(&rem);
    if rem.last().unwrap().is_negative() {
        content = -content;
    }
    rem.iter().map(|c| c / &content).collect()
}

/// Monic greatest common divisor by the polynomial Euclidean algorithm,
/// run on primitive integer remainders. `gcd(a, 0) = monic(a)`.
pub fn gcd(a: &UPoly, b: &UPoly) -> Result<UPoly, PolyError> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(PolyError::AllZero),
        (true, false) => return Ok(b.monic()),
        (false, true) => return Ok(a.monic()),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return Ok(UPoly::one());
    }
    let mut f = a.primitive_int();
    let mut g = b.primitive_int();
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    // Cheap coprimality certificate first: random inputs are almost always
    // coprime and skip the remainder sequence entirely.
    if coprime_mod_p(&f, &g, COPRIME_PROBE_PRIME) {
        return Ok(UPoly::one());
    }
    loop {
        if g.len() == 1 {
            return Ok(UPoly::one());
        }
        let r = primitive_pseudo_rem(&f, &g);
        if r.is_empty() {
            let rats: Vec<Rat> = g.iter().map(|c| Rat::from_integer(c.clone())).collect();
            return Ok(UPoly::new(rats).monic());
        }
        f = g;
        g = r;
    }
}

/// Fold of `gcd` over a list; zero entries are skipped, an all-zero list is
/// an error.
pub fn gcd_many(polys: &[UPoly]) -> Result<UPoly, PolyError> {
    let mut acc: Option<UPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => gcd(&g, p)?,
        });
        if acc.as_ref().unwrap().is_constant() {
            return Ok(UPoly::one());
        }
    }
    acc.ok_or(PolyError::AllZero)
}

/// Square-free part `p / gcd(p, p')`: same complex roots as `p`, all simple,
/// and the same leading coefficient as `p`.
pub fn squarefree_part(p: &UPoly) -> Result<UPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroInput("squarefree_part"));
    }
    if p.coeffs.len() <= 2 {
        return Ok(p.clone());
    }
    let g = gcd(p, &p.derivative())?;
    // g is monic, so the quotient keeps lc(p) on its own.
    p.exact_div(&g, "squarefree_part: p / gcd(p, p')")
}

/// Product of the linear factors of `p` occurring exactly once, as
/// `p * gcd(q, q') / q^2` with `q = gcd(p, p')`. Leading coefficient is
/// `lc(p)`.
pub fn once_part(p: &UPoly) -> Result<UPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroInput("once_part"));
    }
    let q = gcd_with_derivative(p)?;
    if q.is_constant() {
        return Ok(p.clone());
    }
    let w = gcd_with_derivative(&q)?;
    p.mul(&w).exact_div(&q.mul(&q), "once_part: p * gcd(q, q') / q^2")
}

fn gcd_with_derivative(p: &UPoly) -> Result<UPoly, PolyError> {
    if p.is_constant() {
        Ok(UPoly::one())
    } else {
        gcd(p, &p.derivative())
    }
}

/// Product of the linear factors of `p` occurring an odd number of times,
/// scaled to share the leading coefficient of `p`. Zero maps to zero and a
/// nonzero constant to itself.
///
/// The loop maintains `u` as the product of factors of multiplicity
/// 1, 3, ..., 2i+1 and `h` as the residue still carrying higher
/// multiplicities:
/// `q = gcd(h, h')`, `w = gcd(q, q')`, `u <- u * h * w / q^2`, `h <- w`
/// until `w` is constant.
pub fn odd_part(p: &UPoly) -> Result<UPoly, PolyError> {
    if p.is_zero() {
        return Ok(UPoly::zero());
    }
    if p.is_constant() {
        return Ok(p.clone());
    }
    let mut u = UPoly::one();
    let mut h = p.clone();
    loop {
        let q = gcd_with_derivative(&h)?;
        let w = gcd_with_derivative(&q)?;
        u = u
            .mul(&h)
            .mul(&w)
            .exact_div(&q.mul(&q), "odd_part: u * h * w / q^2")?;
        if w.is_constant() {
            break;
        }
        h = w;
    }
    let scale = p.lc().unwrap() / u.lc().unwrap();
    Ok(u.scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> UPoly {
        UPoly::var()
    }

    #[test]
    fn add_cancellation() {
        let a = UPoly::from_ints(&[1, 1]); // t + 1
        let b = UPoly::from_ints(&[-1, 1]); // t - 1
        assert_eq!(a.add(&b), UPoly::from_ints(&[0, 2]));
        assert_eq!(a.add(&UPoly::zero()), a);
        let sq = t().mul(&t());
        assert!(sq.add(&sq.neg()).is_zero());
        assert_eq!(sq.add(&sq.neg()).coeffs().len(), 0);
    }

    #[test]
    fn mul_basics() {
        assert_eq!(t().mul(&t()), UPoly::from_ints(&[0, 0, 1]));
        let p = UPoly::from_ints(&[-1, 1]).mul(&UPoly::from_ints(&[1, 1]));
        assert_eq!(p, UPoly::from_ints(&[-1, 0, 1]));
        assert!(p.mul(&UPoly::zero()).is_zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(UPoly::zero().degree(), None);
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = UPoly::from_ints(&[-1, 0, 1])
            .divrem(&UPoly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(q, UPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());

        let (q, r) = UPoly::from_ints(&[1, 0, 1]).divrem(&t()).unwrap();
        assert_eq!(q, t());
        assert_eq!(r, UPoly::one());

        // dividend constructed as t^3 * (t - 1) + 5
        let dividend = t().pow(3).mul(&UPoly::from_ints(&[-1, 1])).add(&UPoly::from_ints(&[5]));
        let (q, r) = dividend.divrem(&t().pow(3)).unwrap();
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert_eq!(r, UPoly::from_ints(&[5]));

        assert_eq!(
            UPoly::one().divrem(&UPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(t().pow(3).derivative(), UPoly::from_ints(&[0, 0, 3]));
        assert!(UPoly::from_ints(&[7]).derivative().is_zero());
        // t^2 (t - 1) = t^3 - t^2
        let p = UPoly::from_ints(&[0, 0, -1, 1]);
        assert_eq!(p.derivative(), UPoly::from_ints(&[0, -2, 3]));
    }

    #[test]
    fn gcd_examples() {
        // (t-1)(t+1) and (t-1)^2 share exactly t - 1
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, -2, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), UPoly::from_ints(&[-1, 1]));

        assert_eq!(gcd(&a, &UPoly::one()).unwrap(), UPoly::one());
        assert_eq!(
            gcd(&t().pow(3), &UPoly::from_ints(&[0, 0, 3])).unwrap(),
            t().pow(2)
        );
        assert_eq!(gcd(&UPoly::zero(), &a).unwrap(), a.monic());
        assert_eq!(gcd(&UPoly::zero(), &UPoly::zero()), Err(PolyError::AllZero));
    }

    #[test]
    fn gcd_many_examples() {
        let f = UPoly::from_ints(&[-1, 1]);
        let list = vec![
            f.clone(),
            f.mul(&UPoly::from_ints(&[2, 1])),
            f.mul(&t()),
        ];
        assert_eq!(gcd_many(&list).unwrap(), f);
        assert_eq!(gcd_many(&[f.scale(&rat(3))]).unwrap(), f);
        assert_eq!(
            gcd_many(&[t(), UPoly::from_ints(&[1, 1])]).unwrap(),
            UPoly::one()
        );
        assert_eq!(gcd_many(&[]), Err(PolyError::AllZero));
    }

    #[test]
    fn squarefree_part_examples() {
        // (t-1)^2 (t+2) -> (t-1)(t+2) = t^2 + t - 2
        let p = UPoly::from_ints(&[1, -2, 1]).mul(&UPoly::from_ints(&[2, 1]));
        assert_eq!(squarefree_part(&p).unwrap(), UPoly::from_ints(&[-2, 1, 1]));
        let lin = UPoly::from_ints(&[-5, 1]);
        assert_eq!(squarefree_part(&lin).unwrap(), lin);
        assert_eq!(squarefree_part(&t().pow(4)).unwrap(), t());
        assert!(squarefree_part(&UPoly::zero()).is_err());
    }

    #[test]
    fn once_part_examples() {
        let p = UPoly::from_ints(&[1, -2, 1]).mul(&UPoly::from_ints(&[2, 1]));
        assert_eq!(once_part(&p).unwrap(), UPoly::from_ints(&[2, 1]));
        let sq_free = UPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(once_part(&sq_free).unwrap(), sq_free);
        // (t-1)^2 (t+1)^2: no simple factors, collapses to lc = 1
        let p = UPoly::from_ints(&[-1, 0, 1]).pow(2);
        assert_eq!(once_part(&p).unwrap(), UPoly::one());
    }

    #[test]
    fn odd_part_examples() {
        // t^2 (t-1) -> t - 1
        let p = UPoly::from_ints(&[0, 0, -1, 1]);
        assert_eq!(odd_part(&p).unwrap(), UPoly::from_ints(&[-1, 1]));
        assert_eq!(odd_part(&t().pow(3)).unwrap(), t());
        // (t-1)^2 (t+3)^4 -> constant lc = 1
        let p = UPoly::from_ints(&[1, -2, 1]).mul(&UPoly::from_ints(&[3, 1]).pow(4));
        assert_eq!(odd_part(&p).unwrap(), UPoly::one());
        assert!(odd_part(&UPoly::zero()).unwrap().is_zero());
        // leading coefficient is preserved
        let p = UPoly::from_ints(&[0, 0, -1, 1]).scale(&ratio(-3, 2));
        assert_eq!(
            odd_part(&p).unwrap(),
            UPoly::from_ints(&[-1, 1]).scale(&ratio(-3, 2))
        );
    }

    #[test]
    fn odd_part_masks_even_root_sign() {
        // (t-5)^2 (t-1): the odd part t - 1 is positive at the even root 5
        // even though the polynomial vanishes there. Downstream set code has
        // to account for exactly this.
        let p = UPoly::from_ints(&[25, -10, 1]).mul(&UPoly::from_ints(&[-1, 1]));
        let op = odd_part(&p).unwrap();
        assert_eq!(op, UPoly::from_ints(&[-1, 1]));
        assert_eq!(p.sign_at_rat(&rat(5)), 0);
        assert_eq!(op.sign_at_rat(&rat(5)), 1);
    }

    #[test]
    fn display_round_trip_forms() {
        assert_eq!(UPoly::zero().to_string(), "0");
        assert_eq!(UPoly::from_ints(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(t().neg().to_string(), "-t");
        assert_eq!(
            UPoly::new(vec![ratio(1, 2), rat(0), rat(-3)]).to_string(),
            "-3*t^2 + 1/2"
        );
    }
}
