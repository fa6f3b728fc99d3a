//! Dense univariate polynomials over an exact scalar field, plus the
//! root-extraction routine used by the Wedderburn splitting.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational, Scalar};

/// Coefficients stored lowest degree first; the leading coefficient of a
/// nonzero polynomial is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<T: Scalar> {
    pub coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn x() -> Self {
        Polynomial::new(vec![T::zero(), T::one()])
    }

    /// x - r
    pub fn linear(r: &T) -> Self {
        Polynomial::new(vec![-r.clone(), T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &T {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            let b = other.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            out.push(a + b);
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-T::one())))
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(divisor.coeffs.len() - 1)];
        let dlead = divisor.leading().clone();
        while !rem.is_zero() && rem.coeffs.len() >= divisor.coeffs.len() {
            let shift = rem.coeffs.len() - divisor.coeffs.len();
            let factor = rem.leading().clone() / dlead.clone();
            quot[shift] = factor.clone();
            let mut sub = vec![T::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c.clone() * factor.clone()));
            rem = rem.sub(&Polynomial::new(sub));
        }
        (Polynomial::new(quot), rem)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_int(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        assert!(!self.is_zero());
        let inv = T::one() / self.leading().clone();
        self.scale(&inv)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Squarefree part p / gcd(p, p').
    pub fn squarefree_part(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Extended Euclid: returns (g, u, v) with u self + v other = g, g monic.
    pub fn egcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Polynomial::constant(T::one());
        let mut u1 = Polynomial::zero();
        let mut v0 = Polynomial::zero();
        let mut v1 = Polynomial::constant(T::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let lead_inv = T::one() / r0.leading().clone();
        (
            r0.scale(&lead_inv),
            u0.scale(&lead_inv),
            v0.scale(&lead_inv),
        )
    }

    /// (x - r)^m
    pub fn linear_power(r: &T, m: usize) -> Self {
        let lin = Polynomial::linear(r);
        let mut out = Polynomial::constant(T::one());
        for _ in 0..m {
            out = out.mul(&lin);
        }
        out
    }
}

/// Chinese-remainder idempotent polynomials for p = prod (x - r_i)^{m_i}:
/// u_i = 1 mod (x - r_i)^{m_i} and 0 mod the other factors, so evaluating
/// u_i at an algebra element with minimal polynomial p yields the complete
/// orthogonal idempotent family of the generated commutative subalgebra.
pub fn crt_idempotents<T: Scalar>(roots: &[(T, usize)]) -> Vec<Polynomial<T>> {
    let mut p = Polynomial::constant(T::one());
    for (r, m) in roots {
        p = p.mul(&Polynomial::linear_power(r, *m));
    }
    let mut out = Vec::with_capacity(roots.len());
    for (r, m) in roots {
        let factor = Polynomial::linear_power(r, *m);
        let (cofactor, rem) = p.div_rem(&factor);
        debug_assert!(rem.is_zero());
        let (g, u, _) = cofactor.egcd(&factor);
        debug_assert_eq!(g.coeffs.len(), 1, "factors are coprime");
        // u * cofactor = 1 mod (x - r)^m, = 0 mod the others
        let (_, idem) = u.mul(&cofactor).div_rem(&p);
        out.push(idem);
    }
    out
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c.render())?,
                1 => write!(f, "({})*x", c.render())?,
                _ => write!(f, "({})*x^{}", c.render(), k)?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Field over which every polynomial can be tested for a complete splitting
/// into linear factors.
pub trait RootField: Scalar {
    /// All roots with multiplicity iff `p` splits into linear factors over
    /// the field; otherwise `NonSplitOverField`. Roots are returned in a
    /// deterministic order.
    fn split_into_linear_factors(p: &Polynomial<Self>) -> Result<Vec<(Self, usize)>>;
}

fn non_split<T: Scalar>(p: &Polynomial<T>, definitive: bool) -> Error {
    Error::NonSplitOverField {
        poly: p.to_string(),
        definitive,
    }
}

/// All divisors of |n| by trial division. Desk-scale coefficients only.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            large.push(&n / &d);
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small.dedup();
    small
}

/// All rational roots of a nonzero rational polynomial (rational root
/// theorem after clearing denominators), without multiplicity.
pub fn rational_roots(p: &Polynomial<Rational>) -> Vec<Rational> {
    assert!(!p.is_zero());
    // clear denominators
    let mut lcm = BigInt::one();
    for c in &p.coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| {
            let v = c * Rational::from_integer(lcm.clone());
            debug_assert!(v.denom().is_one());
            v.numer().clone()
        })
        .collect();
    let mut roots = Vec::new();
    // strip powers of x
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        return roots;
    }
    let a0 = &ints[0];
    let alead = ints.last().unwrap();
    let mut cands = Vec::new();
    for num in divisors(a0) {
        for den in divisors(alead) {
            let c = Rational::new(num.clone(), den.clone());
            cands.push(c.clone());
            cands.push(-c);
        }
    }
    cands.sort();
    cands.dedup();
    for c in cands {
        if p.eval(&c).is_zero() {
            roots.push(c);
        }
    }
    roots.sort();
    roots
}

/// Roots of a monic quadratic over `T` via the quadratic formula, or `None`
/// when the discriminant has no square root in the field.
fn quadratic_roots<T: Scalar>(p: &Polynomial<T>) -> Option<Vec<T>> {
    debug_assert_eq!(p.degree(), 2);
    let a = p.coeffs[2].clone();
    let b = p.coeffs[1].clone();
    let c = p.coeffs[0].clone();
    let four = T::from_int(4);
    let two = T::from_int(2);
    let disc = b.clone() * b.clone() - four * a.clone() * c;
    let s = disc.sqrt_exact()?;
    let denom = two * a;
    let r1 = (-b.clone() + s.clone()) / denom.clone();
    let r2 = (-b - s) / denom;
    Some(vec![r1, r2])
}

/// Distinct roots of a squarefree monic polynomial over Q.
fn q_roots_squarefree(s: &Polynomial<Rational>) -> Result<Vec<Rational>> {
    let mut roots = rational_roots(s);
    let mut rem = s.clone();
    for r in &roots {
        let (q, rest) = rem.div_rem(&Polynomial::linear(r));
        debug_assert!(rest.is_zero());
        rem = q;
    }
    if rem.degree() == 0 {
        roots.sort();
        return Ok(roots);
    }
    // Over Q every root is a rational root; a nontrivial residual factor
    // proves non-splitness.
    Err(non_split(s, true))
}

impl RootField for Rational {
    fn split_into_linear_factors(p: &Polynomial<Self>) -> Result<Vec<(Self, usize)>> {
        split_with_roots(p, q_roots_squarefree)
    }
}

fn order_gaussian(roots: &mut [GaussianRational]) {
    roots.sort_by(|a, b| (a.re.clone(), a.im.clone()).cmp(&(b.re.clone(), b.im.clone())));
}

/// Distinct roots in Q(i) of a squarefree monic polynomial over Q(i).
fn qi_roots_squarefree(s: &Polynomial<GaussianRational>) -> Result<Vec<GaussianRational>> {
    match s.degree() {
        0 => return Ok(vec![]),
        1 => return Ok(vec![-s.coeffs[0].clone()]),
        2 => {
            return quadratic_roots(s)
                .map(|mut r| {
                    order_gaussian(&mut r);
                    r
                })
                .ok_or_else(|| non_split(s, true))
        }
        _ => {}
    }
    if s.coeffs.iter().all(|c| c.is_rational()) {
        // rational roots first, then a residual of degree <= 2 can still be
        // split by the quadratic formula over Q(i)
        let srat = s.map_coeffs(|c| c.re.clone());
        let rats = rational_roots(&srat);
        let mut roots: Vec<GaussianRational> =
            rats.iter().cloned().map(GaussianRational::from_rational).collect();
        let mut rem = s.clone();
        for r in &roots {
            let (q, rest) = rem.div_rem(&Polynomial::linear(r));
            debug_assert!(rest.is_zero());
            rem = q;
        }
        match if rem.is_zero() { 0 } else { rem.degree() } {
            0 => {}
            1 => roots.push(-rem.coeffs[0].clone()),
            2 => match quadratic_roots(&rem) {
                Some(r2) => roots.extend(r2),
                None => return Err(non_split(s, true)),
            },
            d => {
                // the proper Gaussian roots of a rational polynomial come in
                // conjugate pairs, so an odd-degree residual cannot split;
                // for even degree >= 4 the search is inconclusive
                return Err(non_split(s, d % 2 == 1));
            }
        }
        order_gaussian(&mut roots);
        return Ok(roots);
    }
    // split off the conjugation-stable part, which has rational coefficients
    let sbar = s.map_coeffs(|c| c.conj());
    let g = s.gcd(&sbar);
    if !g.is_zero() && g.degree() >= 1 && g.degree() < s.degree() {
        let (h, rest) = s.div_rem(&g);
        debug_assert!(rest.is_zero());
        let mut roots = qi_roots_squarefree(&g)?;
        roots.extend(qi_roots_squarefree(&h.monic())?);
        order_gaussian(&mut roots);
        return Ok(roots);
    }
    Err(non_split(s, false))
}

impl RootField for GaussianRational {
    fn split_into_linear_factors(p: &Polynomial<Self>) -> Result<Vec<(Self, usize)>> {
        split_with_roots(p, qi_roots_squarefree)
    }
}

fn split_with_roots<T: Scalar>(
    p: &Polynomial<T>,
    roots_of_squarefree: impl Fn(&Polynomial<T>) -> Result<Vec<T>>,
) -> Result<Vec<(T, usize)>> {
    if p.is_zero() || p.degree() < 1 {
        return Err(Error::Input(
            "split_into_linear_factors requires a polynomial of degree >= 1".into(),
        ));
    }
    let sf = p.squarefree_part();
    let roots = roots_of_squarefree(&sf)?;
    let mut out = Vec::new();
    let mut rem = p.monic();
    for r in roots {
        let mut mult = 0usize;
        loop {
            let (q, rest) = rem.div_rem(&Polynomial::linear(&r));
            if rest.is_zero() {
                rem = q;
                mult += 1;
            } else {
                break;
            }
        }
        debug_assert!(mult >= 1);
        out.push((r, mult));
    }
    let total: usize = out.iter().map(|(_, m)| m).sum();
    if total != p.degree() {
        return Err(non_split(p, false));
    }
    Ok(out)
}
