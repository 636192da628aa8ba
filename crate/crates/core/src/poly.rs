//! Dense univariate polynomial arithmetic over a [`FieldContext`].
//!
//! Polynomials are kept in normal form: coefficients little-endian with no
//! trailing zeros, the zero polynomial being the empty vector. `degree`
//! returns `None` for zero rather than any sentinel integer.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldContext, FieldElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different fields")]
    ContextMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("irreducibility is undefined for constant polynomials")]
    DegreeZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: FieldContext,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn zero(ctx: &FieldContext) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldContext) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            coeffs: vec![ctx.one()],
        }
    }

    pub fn x(ctx: &FieldContext) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            coeffs: vec![ctx.zero(), ctx.one()],
        }
    }

    /// `coeff * x^degree`.
    pub fn monomial(
        ctx: &FieldContext,
        degree: usize,
        coeff: FieldElement,
    ) -> Result<Self, PolyError> {
        let coeff = validate(ctx, coeff)?;
        if coeff.is_zero() {
            return Ok(Self::zero(ctx));
        }
        let mut coeffs = vec![ctx.zero(); degree + 1];
        coeffs[degree] = coeff;
        Ok(Polynomial {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    /// `x^n + c`, the building block of every generator in this crate.
    pub fn binomial(ctx: &FieldContext, n: usize, c: FieldElement) -> Result<Self, PolyError> {
        let c = validate(ctx, c)?;
        let mut coeffs = vec![ctx.zero(); n + 1];
        coeffs[0] = c;
        coeffs[n] = ctx.one();
        Ok(Polynomial {
            ctx: ctx.clone(),
            coeffs,
        }
        .normalized())
    }

    pub fn from_elements(ctx: &FieldContext, coeffs: Vec<FieldElement>) -> Result<Self, PolyError> {
        let coeffs = coeffs
            .into_iter()
            .map(|c| validate(ctx, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial {
            ctx: ctx.clone(),
            coeffs,
        }
        .normalized())
    }

    /// Convenience constructor from integer coefficients, reduced mod `p`.
    pub fn from_ints(ctx: &FieldContext, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ctx.from_int(c)).collect();
        Polynomial {
            ctx: ctx.clone(),
            coeffs,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients; zero for the zero polynomial.
    pub fn weight(&self) -> u64 {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() as u64
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ctx.same_field(&other.ctx) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.ctx.add_raw(&self.coeff(k), &other.coeff(k)));
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            coeffs,
        }
        .normalized())
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.ctx.sub_raw(&self.coeff(k), &other.coeff(k)));
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            coeffs,
        }
        .normalized())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ctx.neg_raw(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, xi) in self.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in other.coeffs.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let t = self.ctx.mul_raw(xi, yj);
                coeffs[i + j] = self.ctx.add_raw(&coeffs[i + j], &t);
            }
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            coeffs,
        }
        .normalized())
    }

    pub fn mul_scalar(&self, c: &FieldElement) -> Result<Polynomial, PolyError> {
        let c = validate(&self.ctx, c.clone())?;
        if c.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|x| self.ctx.mul_raw(x, &c))
                .collect(),
        })
    }

    /// Euclidean division: returns `(q, r)` with `self = g*q + r` and
    /// `r = 0` or `deg r < deg g`.
    pub fn divrem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.check_ctx(g)?;
        if g.is_zero() {
            return Err(PolyError::DivisionByZeroPoly);
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() < g.coeffs.len() {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let ctx = &self.ctx;
        let lead_inv = ctx
            .inv(g.leading().expect("nonzero divisor"))
            .expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ctx.zero(); rem.len().saturating_sub(dg)];
        let mut top = rem.len();
        while top > dg {
            let k = top - 1;
            if !rem[k].is_zero() {
                let c = ctx.mul_raw(&rem[k], &lead_inv);
                let shift = k - dg;
                for (idx, gc) in g.coeffs.iter().enumerate() {
                    if !gc.is_zero() {
                        let t = ctx.mul_raw(&c, gc);
                        rem[shift + idx] = ctx.sub_raw(&rem[shift + idx], &t);
                    }
                }
                quot[shift] = c;
            }
            top -= 1;
        }
        rem.truncate(dg);
        let q = Polynomial {
            ctx: ctx.clone(),
            coeffs: quot,
        }
        .normalized();
        let r = Polynomial {
            ctx: ctx.clone(),
            coeffs: rem,
        }
        .normalized();
        Ok((q, r))
    }

    pub fn rem(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        Ok(self.divrem(g)?.1)
    }

    /// Plain power by repeated squaring. Intended for the moderate degrees
    /// that code generators reach.
    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same context");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same context");
            }
        }
        result
    }

    /// `self^e mod m` by repeated squaring.
    pub fn powmod(&self, mut e: u64, m: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(m)?;
        if m.is_zero() {
            return Err(PolyError::DivisionByZeroPoly);
        }
        let mut result = Self::one(&self.ctx).rem(m)?;
        let mut base = self.rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?.rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(result)
    }

    /// Monic rescaling; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = self.ctx.inv(l).expect("leading coefficient is nonzero");
                self.mul_scalar(&inv).expect("same context")
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Irreducibility over the context field by the distinct-degree
    /// criterion: `x^{q^d} = x (mod f)` for `d = deg f`, and
    /// `gcd(x^{q^{d/t}} - x, f) = 1` for every prime `t | d`.
    pub fn is_irreducible(&self) -> Result<bool, PolyError> {
        let d = match self.degree() {
            None | Some(0) => return Err(PolyError::DegreeZero),
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.ctx.q();
        let x = Self::x(&self.ctx);
        // frob[k] = x^{q^k} mod f, built by iterating the q-power map.
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.rem(&f)?);
        for _ in 0..d {
            let next = frob.last().unwrap().powmod(q, &f)?;
            frob.push(next);
        }
        if frob[d] != frob[0] {
            return Ok(false);
        }
        let mut t = 2;
        let mut rest = d;
        while rest > 1 {
            if rest % t == 0 {
                let h = frob[d / t].sub(&frob[0])?;
                if h.is_zero() {
                    return Ok(false);
                }
                let g = h.gcd(&f)?;
                if g.degree() != Some(0) {
                    return Ok(false);
                }
                while rest % t == 0 {
                    rest /= t;
                }
            }
            t += 1;
            if t * t > rest && rest > 1 {
                // rest itself is the last prime factor.
                let h = frob[d / rest].sub(&frob[0])?;
                if h.is_zero() {
                    return Ok(false);
                }
                let g = h.gcd(&f)?;
                if g.degree() != Some(0) {
                    return Ok(false);
                }
                break;
            }
        }
        Ok(true)
    }

    /// Coefficient texts in the canonical element form, little-endian;
    /// used by the JSON interfaces.
    pub fn coeff_texts(&self) -> Vec<String> {
        self.coeffs.iter().map(FieldElement::to_text).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ext = self.ctx.extension_degree() > 1;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if ext {
                format!("({})", c.to_text())
            } else {
                c.to_text()
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 if c.is_one() && !ext => write!(f, "x")?,
                1 => write!(f, "{coeff}*x")?,
                _ if c.is_one() && !ext => write!(f, "x^{k}")?,
                _ => write!(f, "{coeff}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn validate(ctx: &FieldContext, c: FieldElement) -> Result<FieldElement, PolyError> {
    // Route the membership check through a context operation.
    ctx.add(&c, &ctx.zero())
        .map_err(|_| PolyError::ContextMismatch)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64, a: u32) -> FieldContext {
        FieldContext::new(p, a).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let f2 = f(2, 1);
        let xp1 = Polynomial::from_ints(&f2, &[1, 1]);
        assert_eq!(
            xp1.mul(&xp1).unwrap(),
            Polynomial::from_ints(&f2, &[1, 0, 1])
        );

        let f3 = f(3, 1);
        let xm1 = Polynomial::from_ints(&f3, &[-1, 1]);
        let xp1 = Polynomial::from_ints(&f3, &[1, 1]);
        assert_eq!(
            xm1.mul(&xp1).unwrap(),
            Polynomial::from_ints(&f3, &[2, 0, 1])
        );

        let x3m1 = Polynomial::from_ints(&f3, &[-1, 0, 0, 1]);
        let sq = xp1.mul(&xp1).unwrap();
        assert_eq!(
            x3m1.mul(&sq).unwrap(),
            Polynomial::from_ints(&f3, &[2, 1, 2, 1, 2, 1])
        );
    }

    #[test]
    fn divrem_examples() {
        let f3 = f(3, 1);
        let g = Polynomial::from_ints(&f3, &[1, 2, 0, 1]);
        let (q, r) = g.divrem(&g).unwrap();
        assert_eq!(q, Polynomial::one(&f3));
        assert!(r.is_zero());

        let x3m1 = Polynomial::from_ints(&f3, &[-1, 0, 0, 1]);
        let xm1 = Polynomial::from_ints(&f3, &[-1, 1]);
        assert!(x3m1.rem(&xm1).unwrap().is_zero());

        let f7 = f(7, 1);
        let x5 = Polynomial::monomial(&f7, 5, f7.one()).unwrap();
        let x2p1 = Polynomial::from_ints(&f7, &[1, 0, 1]);
        assert_eq!(x5.rem(&x2p1).unwrap(), Polynomial::x(&f7));
    }

    #[test]
    fn powmod_examples() {
        let f3 = f(3, 1);
        let m = Polynomial::from_ints(&f3, &[-1, 0, 0, 1]);
        assert_eq!(
            Polynomial::from_ints(&f3, &[1, 1]).powmod(0, &m).unwrap(),
            Polynomial::one(&f3)
        );
        assert_eq!(
            Polynomial::from_ints(&f3, &[1, 1]).powmod(3, &m).unwrap(),
            Polynomial::from_ints(&f3, &[2])
        );
    }

    #[test]
    fn frobenius_orbit_mod_irreducible_quadratic() {
        // F_3[x]/(x^2+1) = F_9: x -> x^3 moves x to its conjugate,
        // x -> x^9 returns it.
        let f3 = f(3, 1);
        let m = Polynomial::from_ints(&f3, &[1, 0, 1]);
        let x = Polynomial::x(&f3);
        let x3 = x.powmod(3, &m).unwrap();
        assert_ne!(x3, x);
        let x9 = x.powmod(9, &m).unwrap();
        assert_eq!(x9, x);
    }

    #[test]
    fn weight_examples() {
        let f2 = f(2, 1);
        assert_eq!(Polynomial::zero(&f2).weight(), 0);
        let cube = Polynomial::from_ints(&f2, &[1, 1]).pow(3);
        assert_eq!(cube.weight(), 4);

        let f3 = f(3, 1);
        let g = Polynomial::binomial(&f3, 1, f3.from_int(2)).unwrap().pow(9);
        assert_eq!(g.weight(), 2);
    }

    #[test]
    fn irreducibility_examples() {
        let f7 = f(7, 1);
        assert!(Polynomial::from_ints(&f7, &[1, 0, 1])
            .is_irreducible()
            .unwrap());
        let f5 = f(5, 1);
        assert!(!Polynomial::from_ints(&f5, &[1, 0, 1])
            .is_irreducible()
            .unwrap());

        let f16 = f(2, 4);
        let w = f16.multiplicative_generator();
        let w2 = f16.mul(&w, &w).unwrap();
        let cubic = Polynomial::binomial(&f16, 3, w2).unwrap();
        assert!(cubic.is_irreducible().unwrap());

        assert_eq!(
            Polynomial::one(&f7).is_irreducible(),
            Err(PolyError::DegreeZero)
        );
    }

    #[test]
    fn gcd_examples() {
        let f3 = f(3, 1);
        let g = Polynomial::from_ints(&f3, &[2, 0, 2]);
        assert_eq!(
            g.gcd(&Polynomial::zero(&f3)).unwrap(),
            Polynomial::from_ints(&f3, &[1, 0, 1])
        );
        let a = Polynomial::from_ints(&f3, &[-1, 0, 1]);
        let b = Polynomial::from_ints(&f3, &[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), Polynomial::from_ints(&f3, &[2, 1]));

        // x^2+1 splits in F_9, so it divides x^9 - x.
        let x2p1 = Polynomial::from_ints(&f3, &[1, 0, 1]);
        let mut x9mx = vec![0i64; 10];
        x9mx[9] = 1;
        x9mx[1] = -1;
        let x9mx = Polynomial::from_ints(&f3, &x9mx);
        assert_eq!(x2p1.gcd(&x9mx).unwrap(), x2p1);

        assert_eq!(
            Polynomial::zero(&f3).gcd(&Polynomial::zero(&f3)),
            Err(PolyError::BothZero)
        );
    }

    #[test]
    fn irreducibility_matches_trial_division_exhaustively() {
        for p in [2u64, 3] {
            let ctx = f(p, 1);
            // Every polynomial of degree 1..=4 over F_p.
            for deg in 1usize..=4 {
                let total = p.pow(deg as u32 + 1);
                for t in 0..total {
                    let mut coeffs = vec![0i64; deg + 1];
                    let mut v = t;
                    for slot in coeffs.iter_mut() {
                        *slot = (v % p) as i64;
                        v /= p;
                    }
                    if coeffs[deg] == 0 {
                        continue;
                    }
                    let poly = Polynomial::from_ints(&ctx, &coeffs);
                    let mut has_factor = false;
                    'outer: for d in 1..=deg / 2 {
                        for u in 0..p.pow(d as u32) {
                            let mut gd = vec![0i64; d + 1];
                            gd[d] = 1;
                            let mut w = u;
                            for slot in gd.iter_mut().take(d) {
                                *slot = (w % p) as i64;
                                w /= p;
                            }
                            let g = Polynomial::from_ints(&ctx, &gd);
                            if poly.rem(&g).unwrap().is_zero() {
                                has_factor = true;
                                break 'outer;
                            }
                        }
                    }
                    assert_eq!(
                        poly.is_irreducible().unwrap(),
                        !has_factor,
                        "disagreement on {poly} over F_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_prime_power_identity() {
        // (x^n + c)^{p^s} = x^{n p^s} + c^{p^s} for all small parameters.
        for p in [2u64, 3, 5] {
            let ctx = f(p, 1);
            for n in 1usize..=4 {
                for s in 1u32..=3 {
                    let ps = p.pow(s);
                    for c in ctx.elements().filter(|c| !c.is_zero()) {
                        let lhs = Polynomial::binomial(&ctx, n, c.clone()).unwrap().pow(ps);
                        let cps = ctx.pow(&c, ps).unwrap();
                        let rhs = Polynomial::binomial(&ctx, n * ps as usize, cps).unwrap();
                        assert_eq!(lhs, rhs, "p={p} n={n} s={s}");
                    }
                }
            }
        }
    }

    fn arb_poly(p: u64, max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(0..p as i64, 0..=max_deg + 1)
    }

    proptest! {
        #[test]
        fn divrem_round_trip(
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
            fc in arb_poly(7, 12),
            gc in arb_poly(7, 6),
        ) {
            let ctx = f(p, 1);
            let fp = Polynomial::from_ints(&ctx, &fc);
            let gp = Polynomial::from_ints(&ctx, &gc);
            prop_assume!(!gp.is_zero());
            let (q, r) = fp.divrem(&gp).unwrap();
            let back = gp.mul(&q).unwrap().add(&r).unwrap();
            prop_assert_eq!(back, fp);
            if !r.is_zero() {
                prop_assert!(r.degree().unwrap() < gp.degree().unwrap());
            }
        }

        #[test]
        fn freshmans_dream(
            p in prop::sample::select(vec![2u64, 3, 5]),
            fc in arb_poly(5, 8),
            gc in arb_poly(5, 8),
        ) {
            let ctx = f(p, 1);
            let fp = Polynomial::from_ints(&ctx, &fc);
            let gp = Polynomial::from_ints(&ctx, &gc);
            let lhs = fp.add(&gp).unwrap().pow(p);
            let rhs = fp.pow(p).add(&gp.pow(p)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
