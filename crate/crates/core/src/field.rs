//! Exact arithmetic in `F_p` and its extensions `F_{p^a} = F_p[y]/(m(y))`.
//!
//! The modulus `m` is the lexicographically smallest monic irreducible
//! polynomial of degree `a` over `F_p`, comparing coefficient vectors
//! low-degree-first. Construction is therefore deterministic: two contexts
//! built from the same `(p, a)` are interchangeable, and elements only
//! remember `(p, a)` to detect cross-field mixups.

use std::fmt;
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};
use thiserror::Error;

use crate::poly::Polynomial;

/// Default bound on the field size `q = p^a`.
pub const DEFAULT_CAP: u64 = 1 << 20;

type Digits = SmallVec<[u64; 4]>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {q} exceeds cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("element does not belong to this field")]
    ContextMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Deterministic trial-division primality test. Adequate for the field
/// sizes this crate caps at.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The field `F_{p^a}` with its reduction modulus.
#[derive(Clone)]
pub struct FieldContext {
    p: u64,
    a: u32,
    q: u64,
    /// Monic modulus over `F_p`, little-endian, length `a + 1`. For `a = 1`
    /// this is `y` itself and arithmetic degenerates to integers mod `p`.
    modulus: Arc<[u64]>,
}

/// An element of a [`FieldContext`], stored as `a` base-`p` digits
/// (little-endian in `y`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    p: u64,
    coeffs: Digits,
}

impl FieldContext {
    /// Builds `F_{p^a}` with the default size cap.
    pub fn new(p: u64, a: u32) -> Result<Self, FieldError> {
        Self::with_cap(p, a, DEFAULT_CAP)
    }

    /// Builds `F_{p^a}` allowing sizes up to `cap`. Square roots and element
    /// enumeration scan the whole field, so large caps trade time for reach.
    pub fn with_cap(p: u64, a: u32, cap: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if a == 0 {
            return Err(FieldError::BadDegree);
        }
        let mut q: u64 = 1;
        for _ in 0..a {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= cap)
                .ok_or(FieldError::CapExceeded { q: u64::MAX, cap })?;
        }
        if q > cap {
            return Err(FieldError::CapExceeded { q, cap });
        }
        let modulus = if a == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, a)
        };
        Ok(FieldContext {
            p,
            a,
            q,
            modulus: modulus.into(),
        })
    }

    fn prime_field(p: u64) -> Self {
        FieldContext {
            p,
            a: 1,
            q: p,
            modulus: vec![0, 1].into(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.a
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Coefficients of the reduction modulus, little-endian, length `a + 1`.
    pub fn modulus_digits(&self) -> &[u64] {
        &self.modulus
    }

    pub fn same_field(&self, other: &FieldContext) -> bool {
        self.p == other.p && self.a == other.a
    }

    fn check(&self, x: &FieldElement) -> Result<(), FieldError> {
        if x.p != self.p || x.coeffs.len() != self.a as usize {
            return Err(FieldError::ContextMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            p: self.p,
            coeffs: smallvec![0; self.a as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Embeds an integer into the prime subfield, reducing mod `p`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let p = self.p as i64;
        let mut r = v % p;
        if r < 0 {
            r += p;
        }
        let mut coeffs: Digits = smallvec![0; self.a as usize];
        coeffs[0] = r as u64;
        FieldElement { p: self.p, coeffs }
    }

    /// Builds an element from up to `a` digits (little-endian in `y`),
    /// reducing each mod `p`. Negative digits are normalized, so `-1`
    /// denotes `p - 1`.
    pub fn element(&self, digits: &[i64]) -> Result<FieldElement, FieldError> {
        if digits.len() > self.a as usize {
            return Err(FieldError::ContextMismatch);
        }
        let p = self.p as i64;
        let mut coeffs: Digits = smallvec![0; self.a as usize];
        for (slot, &d) in coeffs.iter_mut().zip(digits) {
            let mut r = d % p;
            if r < 0 {
                r += p;
            }
            *slot = r as u64;
        }
        Ok(FieldElement { p: self.p, coeffs })
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_raw(x, y))
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.sub_raw(x, y))
    }

    pub fn neg(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        Ok(self.neg_raw(x))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_raw(x, y))
    }

    /// `x^e` by repeated squaring, with the convention `x^0 = 1` for every
    /// `x` including zero.
    pub fn pow(&self, x: &FieldElement, e: u64) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        Ok(self.pow_raw(x, e))
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        if x.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow_raw(x, self.q - 2))
    }

    /// Returns a square root of `x` when one exists, preferring the root
    /// whose digit vector is lexicographically smaller. Exhaustive scan of
    /// the field.
    pub fn sqrt(&self, x: &FieldElement) -> Result<Option<FieldElement>, FieldError> {
        self.check(x)?;
        let mut best: Option<FieldElement> = None;
        for cand in self.elements() {
            if self.mul_raw(&cand, &cand) == *x {
                match &best {
                    Some(b) if b.coeffs <= cand.coeffs => {}
                    _ => best = Some(cand),
                }
            }
        }
        Ok(best)
    }

    /// All `q` elements in a fixed order: digit odometer with the constant
    /// coefficient cycling fastest, so zero comes first.
    pub fn elements(&self) -> Elements {
        Elements {
            p: self.p,
            a: self.a as usize,
            q: self.q,
            next: 0,
        }
    }

    /// Smallest element (in enumeration order) of multiplicative order
    /// `q - 1`.
    pub fn multiplicative_generator(&self) -> FieldElement {
        let order = self.q - 1;
        let primes = distinct_prime_factors(order);
        for cand in self.elements() {
            if cand.is_zero() {
                continue;
            }
            let generates = primes
                .iter()
                .all(|&r| !self.pow_raw(&cand, order / r).is_one());
            if generates {
                return cand;
            }
        }
        unreachable!("every finite field has a multiplicative generator")
    }

    pub(crate) fn add_raw(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&u, &v)| (u + v) % self.p)
            .collect();
        FieldElement { p: self.p, coeffs }
    }

    pub(crate) fn sub_raw(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&u, &v)| (u + self.p - v) % self.p)
            .collect();
        FieldElement { p: self.p, coeffs }
    }

    pub(crate) fn neg_raw(&self, x: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .map(|&u| if u == 0 { 0 } else { self.p - u })
            .collect();
        FieldElement { p: self.p, coeffs }
    }

    pub(crate) fn mul_raw(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let a = self.a as usize;
        if a == 1 {
            return FieldElement {
                p: self.p,
                coeffs: smallvec![(x.coeffs[0] * y.coeffs[0]) % self.p],
            };
        }
        // Schoolbook convolution, then reduce by the monic modulus.
        let mut buf: SmallVec<[u64; 8]> = smallvec![0; 2 * a - 1];
        for (i, &xi) in x.coeffs.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coeffs.iter().enumerate() {
                buf[i + j] = (buf[i + j] + xi * yj) % self.p;
            }
        }
        for k in (a..2 * a - 1).rev() {
            let c = buf[k];
            if c == 0 {
                continue;
            }
            buf[k] = 0;
            for (idx, &m) in self.modulus.iter().take(a).enumerate() {
                if m != 0 {
                    let t = (c * m) % self.p;
                    let slot = &mut buf[k - a + idx];
                    *slot = (*slot + self.p - t) % self.p;
                }
            }
        }
        buf.truncate(a);
        FieldElement {
            p: self.p,
            coeffs: buf.into_iter().collect(),
        }
    }

    pub(crate) fn pow_raw(&self, x: &FieldElement, mut e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_raw(&result, &base);
            }
            base = self.mul_raw(&base, &base);
            e >>= 1;
        }
        result
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for FieldContext {}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} (q={})", self.p, self.a, self.q)
    }
}

impl FieldElement {
    /// Base-`p` digits, little-endian in `y`.
    pub fn digits(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Canonical text form: comma-separated digits, e.g. `2,1` for
    /// `2 + y` in `F_9`.
    pub fn to_text(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

/// Iterator over all field elements in canonical order.
pub struct Elements {
    p: u64,
    a: usize,
    q: u64,
    next: u64,
}

impl Iterator for Elements {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        if self.next >= self.q {
            return None;
        }
        let mut t = self.next;
        self.next += 1;
        let mut coeffs: Digits = smallvec![0; self.a];
        for slot in coeffs.iter_mut() {
            *slot = t % self.p;
            t /= self.p;
        }
        Some(FieldElement { p: self.p, coeffs })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.q - self.next) as usize;
        (rem, Some(rem))
    }
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Finds the lexicographically smallest monic irreducible polynomial of
/// degree `a >= 2` over `F_p`, comparing coefficient vectors low-degree
/// first. Candidates with zero constant term are divisible by `y` and are
/// skipped wholesale.
fn smallest_irreducible(p: u64, a: u32) -> Vec<u64> {
    let prime = FieldContext::prime_field(p);
    let a = a as usize;
    let mut digits = vec![0u64; a];
    digits[0] = 1;
    loop {
        let mut coeffs: Vec<i64> = digits.iter().map(|&d| d as i64).collect();
        coeffs.push(1);
        let candidate = Polynomial::from_ints(&prime, &coeffs);
        if candidate
            .is_irreducible()
            .expect("candidate has positive degree")
        {
            let mut out = digits.clone();
            out.push(1);
            return out;
        }
        // Odometer in lex order: the highest-degree digit cycles fastest.
        let mut pos = a - 1;
        loop {
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            if pos == 0 {
                unreachable!("no irreducible polynomial of degree {a} over F_{p}");
            }
            pos -= 1;
        }
        if digits[0] == 0 {
            digits[0] = 1;
        }
    }
}
