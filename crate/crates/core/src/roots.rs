//! Exact real-root isolation for univariate rational polynomials:
//! Sturm sequences, sign-variation counting, and bisection refinement.
//!
//! Coefficients are stored in ascending degree order; the vector is empty
//! for the zero polynomial and its last entry is nonzero otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("interval is not certified to isolate a single root")]
    NotCertified,
    #[error("requested width must be positive")]
    NonpositiveWidth,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Monic associate (unit normalization for gcd computations).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..dd {
                let t = &rem[k + i] - &factor * &div.coeffs[i];
                rem[k + i] = t;
            }
            rem.pop();
            quot[k] = factor;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The square-free part `self / gcd(self, self')`, monic.
    pub fn square_free_part(&self) -> Result<Self, RootError> {
        if self.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        Ok(q.monic())
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: Self) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: Self) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: Self) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &out[i + j] + &(a * b);
                out[i + j] = t;
            }
        }
        RatPolynomial::from_coeffs(out)
    }
}

/// A rational interval certified (by Sturm counts) to contain exactly one
/// real root of the polynomial it was produced for. Endpoints are never
/// roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
}

impl IsolatingInterval {
    /// An interval candidate with `lo < hi`. Certification against a given
    /// polynomial is checked by `refine`, not here.
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, RootError> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(RootError::NotCertified)
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn approx(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Canonical Sturm sequence: p, p', then negated Euclidean remainders.
pub fn sturm_sequence(p: &RatPolynomial) -> Result<Vec<RatPolynomial>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if !d.is_zero() {
        chain.push(d);
    }
    while chain.last().unwrap().degree().is_some_and(|d| d > 0) {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    Ok(chain)
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut var = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            var += 1;
        }
        prev = s;
    }
    var
}

/// Sign variations of the chain evaluated at a point.
pub fn variations_at(chain: &[RatPolynomial], x: &Rational) -> usize {
    count_variations(chain.iter().map(|p| sign_of(&p.eval(x))))
}

fn variations_at_infinity(chain: &[RatPolynomial], positive: bool) -> usize {
    count_variations(chain.iter().map(|p| match p.degree() {
        None => 0,
        Some(d) => {
            let lead = sign_of(p.leading_coeff().unwrap());
            if positive || d % 2 == 0 {
                lead
            } else {
                -lead
            }
        }
    }))
}

/// Number of distinct real roots in `(lo, hi]` by the Sturm variation
/// difference.
pub fn count_roots_between(
    chain: &[RatPolynomial],
    lo: &Rational,
    hi: &Rational,
) -> usize {
    variations_at(chain, lo).saturating_sub(variations_at(chain, hi))
}

/// Number of distinct real roots on the whole line.
pub fn count_real_roots(p: &RatPolynomial) -> Result<usize, RootError> {
    let chain = sturm_sequence(p)?;
    Ok(variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true))
}

/// Cauchy root bound: every real root has absolute value strictly below
/// `1 + max |c_i / c_n|`.
pub fn cauchy_bound(p: &RatPolynomial) -> Result<Rational, RootError> {
    let n = p.degree().ok_or(RootError::ZeroPolynomial)?;
    let lead = p.leading_coeff().unwrap();
    let mut best = Rational::zero();
    for i in 0..n {
        let q = (p.coeff(i) / lead).abs();
        if q > best {
            best = q;
        }
    }
    Ok(best + Rational::one())
}

/// Picks a subdivision point near the midpoint of `(lo, hi)` where `q`
/// does not vanish. Roots are finite in number, so nudging the midpoint by
/// ever-smaller fractions of the interval terminates quickly.
fn non_root_split(q: &RatPolynomial, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if !q.eval(&mid).is_zero() {
        return mid;
    }
    let mut step = (hi - lo) / Rational::from_integer(4.into());
    loop {
        let candidate = &mid + &step;
        if !q.eval(&candidate).is_zero() {
            return candidate;
        }
        step /= &two;
    }
}

/// Isolates all real roots of `p` in disjoint intervals, one root each.
/// Works on the square-free part internally, so multiple roots are
/// reported once. Intervals are sorted left to right.
pub fn isolate_roots(p: &RatPolynomial) -> Result<Vec<IsolatingInterval>, RootError> {
    let q = p.square_free_part()?;
    if q.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_sequence(&q)?;
    let bound = cauchy_bound(&q)?;
    let lo = -&bound;
    let hi = bound;
    debug_assert!(!q.eval(&lo).is_zero() && !q.eval(&hi).is_zero());
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), variations_at(&chain, &lo), hi.clone(), variations_at(&chain, &hi))];
    while let Some((lo, v_lo, hi, v_hi)) = stack.pop() {
        match v_lo - v_hi {
            0 => {}
            1 => out.push(IsolatingInterval { lo, hi }),
            _ => {
                let mid = non_root_split(&q, &lo, &hi);
                let v_mid = variations_at(&chain, &mid);
                // push right first so the stack pops left to right
                stack.push((mid.clone(), v_mid, hi, v_hi));
                stack.push((lo, v_lo, mid, v_mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Shrinks a certified interval by bisection until its width is at most
/// `width`, never losing the root. Returns the input unchanged when it is
/// already narrow enough.
pub fn refine(
    p: &RatPolynomial,
    interval: &IsolatingInterval,
    width: &Rational,
) -> Result<IsolatingInterval, RootError> {
    if !width.is_positive() {
        return Err(RootError::NonpositiveWidth);
    }
    let q = p.square_free_part()?;
    let chain = sturm_sequence(&q)?;
    if q.eval(&interval.lo).is_zero()
        || q.eval(&interval.hi).is_zero()
        || count_roots_between(&chain, &interval.lo, &interval.hi) != 1
    {
        return Err(RootError::NotCertified);
    }
    let mut lo = interval.lo.clone();
    let mut hi = interval.hi.clone();
    if &hi - &lo <= *width {
        return Ok(interval.clone());
    }
    let two = Rational::from_integer(2.into());
    let s_lo = sign_of(&q.eval(&lo));
    debug_assert_ne!(s_lo, sign_of(&q.eval(&hi)), "simple root must change sign");
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let v = q.eval(&mid);
        if v.is_zero() {
            // landed exactly on the (rational) root: clamp a tiny window
            // around it; endpoints cannot be roots since the root is unique
            // in the certified interval
            let half = width / &two;
            let new_lo = (&mid - &half).max(lo);
            let new_hi = (&mid + &half).min(hi);
            return Ok(IsolatingInterval {
                lo: new_lo,
                hi: new_hi,
            });
        }
        if sign_of(&v) == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(IsolatingInterval { lo, hi })
}

/// Convenience: isolate and refine every real root to at most `width`.
pub fn isolate_roots_to_width(
    p: &RatPolynomial,
    width: &Rational,
) -> Result<Vec<IsolatingInterval>, RootError> {
    let intervals = isolate_roots(p)?;
    intervals
        .iter()
        .map(|iv| refine(p, iv, width))
        .collect()
}
