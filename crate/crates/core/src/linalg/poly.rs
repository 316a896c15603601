//! Integer polynomials, exact root counting on closed intervals.

use std::fmt;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending order of degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From `i64` coefficients in ascending order.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    /// `x^2 - sum x + product`, the monic quadratic with the given root sum
    /// and product.
    pub fn quadratic(sum: impl Into<BigInt>, product: impl Into<BigInt>) -> Self {
        Self::new(vec![product.into(), -sum.into(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact quotient when `divisor` divides `self` over the integers.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = div_rem(&to_rat(self), &to_rat(divisor));
        if !r.is_empty() {
            return None;
        }
        from_rat(&q)
    }

    /// Integer roots with their multiplicities, ascending, plus the cofactor
    /// left after removing them. Only meaningful for monic polynomials,
    /// where every rational root is an integer dividing the constant term.
    pub fn split_integer_roots(&self) -> (Vec<(BigInt, usize)>, IntPolynomial) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if self.is_zero() {
            return (roots, rest);
        }
        // Roots at zero first.
        let zeros = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            rest = IntPolynomial::new(rest.coeffs[zeros..].to_vec());
            roots.push((BigInt::zero(), zeros));
        }
        let c0 = rest.coeff(0).abs();
        if rest.degree() > 0 && !c0.is_zero() {
            let mut candidates = Vec::new();
            let mut d = BigInt::one();
            while &d * &d <= c0 {
                if (&c0 % &d).is_zero() {
                    candidates.push(d.clone());
                    candidates.push(&c0 / &d);
                }
                d += 1;
            }
            candidates.sort();
            candidates.dedup();
            let mut signed: Vec<BigInt> = candidates.iter().map(|c| -c).chain(candidates.iter().cloned()).collect();
            signed.sort();
            for r in signed {
                let lin = IntPolynomial::linear(r.clone());
                let mut mult = 0;
                while rest.degree() > 0 {
                    match rest.div_exact(&lin) {
                        Some(q) => {
                            rest = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    roots.push((r, mult));
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }

    /// Number of real roots in the closed interval `[a, b]`, counted with
    /// multiplicity.
    pub fn count_roots_in(&self, a: &BigRational, b: &BigRational) -> Result<usize> {
        count_roots_in(self, a, b)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

// --- rational helpers -------------------------------------------------------

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn to_rat(p: &IntPolynomial) -> RatPoly {
    p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn from_rat(p: &RatPoly) -> Option<IntPolynomial> {
    p.iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(IntPolynomial::new)
}

pub(crate) fn rat_to_int_poly(p: &[BigRational]) -> Option<IntPolynomial> {
    from_rat(&trim(p.to_vec()))
}

fn div_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().expect("nonempty") / &lead;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &f * bk;
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: RatPoly) -> RatPoly {
    let p = trim(p);
    match p.last() {
        None => p,
        Some(lead) => {
            let lead = lead.clone();
            p.into_iter().map(|c| c / &lead).collect()
        }
    }
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn derivative(p: &RatPoly) -> RatPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

fn eval(p: &RatPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(seq: &[RatPoly], x: &BigRational) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for p in seq {
        let v = eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

/// Distinct roots of a square-free polynomial in `[a, b]`.
fn distinct_roots_in(p: &RatPoly, a: &BigRational, b: &BigRational) -> usize {
    if p.len() <= 1 {
        return 0;
    }
    let seq = sturm_sequence(p);
    // V(a) - V(b) counts roots in (a, b]; a root at `a` is added separately.
    let open_closed = sign_changes(&seq, a) - sign_changes(&seq, b);
    open_closed + usize::from(eval(p, a).is_zero())
}

/// Roots of `p` in `[a, b]` with multiplicity. With `g_0 = p` and
/// `g_{j+1} = gcd(g_j, g_j')`, the roots of `g_j / g_{j+1}` are exactly the
/// roots of `p` of multiplicity greater than `j`, each once.
pub fn count_roots_in(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return invalid("the zero polynomial has no finite root count");
    }
    if a > b {
        return invalid(format!("empty interval [{a}, {b}]"));
    }
    let mut g = monic(to_rat(p));
    let mut total = 0;
    while g.len() > 1 {
        let next = gcd(&g, &derivative(&g));
        let (squarefree, _) = div_rem(&g, &next);
        total += distinct_roots_in(&squarefree, a, b);
        g = next;
    }
    Ok(total)
}

/// Number of distinct real roots of `p`, for diagnostics.
pub fn distinct_real_roots(p: &IntPolynomial) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    let g = monic(to_rat(p));
    let sf = div_rem(&g, &gcd(&g, &derivative(&g))).0;
    let seq = sturm_sequence(&sf);
    // Cauchy bound on root magnitude.
    let lead = sf.last().expect("nonempty").abs();
    let bound = sf
        .iter()
        .take(sf.len() - 1)
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();
    sign_changes(&seq, &-bound.clone()) - sign_changes(&seq, &bound)
}
