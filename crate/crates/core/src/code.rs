//! Construction of the two code families and the basic codeword
//! operations: encoding, membership, and the λ-shift.
//!
//! Single-factor codes live in `F_q[x]/(x^{n p^s} - λ)` with
//! `λ = -γ^{p^s}` and generator `(x^n + γ)^i`; two-factor codes live in
//! `F_q[x]/(x^{2n p^s} - λ)` with `λ = (ξ^2)^{p^s}` and generator
//! `(x^n - ξ)^i (x^n + ξ)^j`. Both constructors validate irreducibility of
//! the factors and that the generator divides the ring modulus.

use thiserror::Error;

use crate::field::{FieldContext, FieldElement, FieldError};
use crate::padic::prime_power;
use crate::poly::{PolyError, Polynomial};

/// Hard bound on code length; dense length-`N` polynomials beyond this are
/// not desk-scale.
pub const MAX_LENGTH: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("{0} is not irreducible over the alphabet")]
    ReducibleFactor(String),
    #[error("two-factor codes require odd characteristic")]
    EvenCharacteristic,
    #[error("exponent {got} outside [0, {top}]")]
    OutOfRange { got: u64, top: u64 },
    #[error("code length {0} exceeds the supported maximum")]
    LengthTooLarge(u64),
    #[error("message degree must stay below the code dimension")]
    MessageTooLong,
    #[error("word length does not match the code length")]
    LengthMismatch,
    #[error("negacyclic family over this alphabet takes {expected} exponent(s)")]
    WrongArity { expected: &'static str },
    #[error("{0} has no square root in the alphabet")]
    NotASquare(String),
    #[error("constant must be nonzero")]
    ZeroConstant,
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Parameters of a length `n*p^s` code `⟨(x^n + γ)^i⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleFactorSpec {
    pub ctx: FieldContext,
    pub n: u64,
    pub s: u32,
    pub gamma: FieldElement,
    pub exponent: u64,
}

/// Parameters of a length `2n*p^s` code `⟨(x^n - ξ)^i (x^n + ξ)^j⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactorSpec {
    pub ctx: FieldContext,
    pub n: u64,
    pub s: u32,
    pub xi: FieldElement,
    pub i: u64,
    pub j: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSpec {
    Single(SingleFactorSpec),
    Two(TwoFactorSpec),
}

impl CodeSpec {
    pub fn ctx(&self) -> &FieldContext {
        match self {
            CodeSpec::Single(s) => &s.ctx,
            CodeSpec::Two(t) => &t.ctx,
        }
    }
}

/// A validated code: expanded generator, ring modulus `x^N - λ`, and the
/// derived size data.
#[derive(Debug, Clone)]
pub struct CodeInstance {
    spec: CodeSpec,
    generator: Polynomial,
    modulus: Polynomial,
    lambda: FieldElement,
    length: u64,
    dimension: u64,
}

impl CodeInstance {
    /// Builds `⟨(x^n + gamma)^i⟩` of length `n*p^s`, checking that
    /// `x^n + gamma` is irreducible over the alphabet.
    pub fn single(
        ctx: &FieldContext,
        n: u64,
        s: u32,
        gamma: FieldElement,
        i: u64,
    ) -> Result<CodeInstance, CodeError> {
        if gamma.is_zero() {
            return Err(CodeError::ZeroConstant);
        }
        check_shape(n, s)?;
        let ps = prime_power(ctx.p(), s).map_err(|_| CodeError::LengthTooLarge(u64::MAX))?;
        if i > ps {
            return Err(CodeError::OutOfRange { got: i, top: ps });
        }
        let length = n
            .checked_mul(ps)
            .filter(|&l| l > 0 && l <= MAX_LENGTH)
            .ok_or(CodeError::LengthTooLarge(u64::MAX))?;
        let factor = Polynomial::binomial(ctx, n as usize, gamma.clone())?;
        if !factor.is_irreducible()? {
            return Err(CodeError::ReducibleFactor(factor.to_string()));
        }
        let lambda = ctx.neg(&ctx.pow(&gamma, ps)?)?;
        let generator = factor.pow(i);
        let spec = CodeSpec::Single(SingleFactorSpec {
            ctx: ctx.clone(),
            n,
            s,
            gamma,
            exponent: i,
        });
        Self::finish(spec, generator, lambda, length, length - n * i)
    }

    /// Builds `⟨(x^n - xi)^i (x^n + xi)^j⟩` of length `2n*p^s`, checking
    /// that both factors are irreducible. Odd characteristic only.
    pub fn two_factor(
        ctx: &FieldContext,
        n: u64,
        s: u32,
        xi: FieldElement,
        i: u64,
        j: u64,
    ) -> Result<CodeInstance, CodeError> {
        if ctx.p() == 2 {
            return Err(CodeError::EvenCharacteristic);
        }
        if xi.is_zero() {
            return Err(CodeError::ZeroConstant);
        }
        check_shape(n, s)?;
        let ps = prime_power(ctx.p(), s).map_err(|_| CodeError::LengthTooLarge(u64::MAX))?;
        for &e in [i, j].iter() {
            if e > ps {
                return Err(CodeError::OutOfRange { got: e, top: ps });
            }
        }
        let length = (2 * n)
            .checked_mul(ps)
            .filter(|&l| l > 0 && l <= MAX_LENGTH)
            .ok_or(CodeError::LengthTooLarge(u64::MAX))?;
        let minus = Polynomial::binomial(ctx, n as usize, ctx.neg(&xi)?)?;
        let plus = Polynomial::binomial(ctx, n as usize, xi.clone())?;
        for f in [&minus, &plus] {
            if !f.is_irreducible()? {
                return Err(CodeError::ReducibleFactor(f.to_string()));
            }
        }
        let psi = ctx.mul(&xi, &xi)?;
        let lambda = ctx.pow(&psi, ps)?;
        let generator = minus.pow(i).mul(&plus.pow(j))?;
        let spec = CodeSpec::Two(TwoFactorSpec {
            ctx: ctx.clone(),
            n,
            s,
            xi,
            i,
            j,
        });
        Self::finish(spec, generator, lambda, length, length - n * (i + j))
    }

    /// Builds a negacyclic code of length `2*p^s` (odd `p`), routing on the
    /// irreducibility of `x^2 + 1`: the irreducible branch takes a single
    /// exponent with `n = 2`, `γ = 1`; the reducible branch takes two
    /// exponents with `n = 1`, `ξ = √(-1)`.
    pub fn negacyclic(
        ctx: &FieldContext,
        s: u32,
        i: u64,
        j: Option<u64>,
    ) -> Result<CodeInstance, CodeError> {
        if ctx.p() == 2 {
            return Err(CodeError::EvenCharacteristic);
        }
        if x2_plus_1_irreducible(ctx.p(), ctx.extension_degree()) {
            if j.is_some() {
                return Err(CodeError::WrongArity { expected: "one" });
            }
            Self::single(ctx, 2, s, ctx.one(), i)
        } else {
            let j = j.ok_or(CodeError::WrongArity { expected: "two" })?;
            let minus_one = ctx.neg(&ctx.one())?;
            let xi = ctx
                .sqrt(&minus_one)?
                .ok_or_else(|| CodeError::NotASquare(minus_one.to_text()))?;
            Self::two_factor(ctx, 1, s, xi, i, j)
        }
    }

    fn finish(
        spec: CodeSpec,
        generator: Polynomial,
        lambda: FieldElement,
        length: u64,
        dimension: u64,
    ) -> Result<CodeInstance, CodeError> {
        let ctx = spec.ctx().clone();
        let mut modulus_coeffs = vec![ctx.zero(); length as usize + 1];
        modulus_coeffs[0] = ctx.neg(&lambda)?;
        modulus_coeffs[length as usize] = ctx.one();
        let modulus = Polynomial::from_elements(&ctx, modulus_coeffs)?;
        let rem = modulus.rem(&generator)?;
        debug_assert!(rem.is_zero(), "generator must divide x^N - lambda");
        if !rem.is_zero() {
            return Err(CodeError::ReducibleFactor(generator.to_string()));
        }
        debug_assert_eq!(dimension, length - generator.degree().unwrap_or(0) as u64);
        Ok(CodeInstance {
            spec,
            generator,
            modulus,
            lambda,
            length,
            dimension,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn context(&self) -> &FieldContext {
        self.spec.ctx()
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    /// The ring modulus `x^N - λ`.
    pub fn ring_modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    /// Multiplies the message by the generator (the degree bound makes the
    /// final reduction a no-op, but it is applied regardless).
    pub fn encode(&self, message: &Polynomial) -> Result<Polynomial, CodeError> {
        if let Some(d) = message.degree() {
            if (d as u64) >= self.dimension {
                return Err(CodeError::MessageTooLong);
            }
        }
        Ok(message.mul(&self.generator)?.rem(&self.modulus)?)
    }

    /// True iff the generator divides `c`. Words must already be reduced
    /// below the code length.
    pub fn is_codeword(&self, c: &Polynomial) -> Result<bool, CodeError> {
        if c.degree().is_some_and(|d| d as u64 >= self.length) {
            return Err(CodeError::LengthMismatch);
        }
        if self.generator.is_zero() {
            unreachable!("generators are nonzero by construction");
        }
        Ok(c.rem(&self.generator)?.is_zero())
    }

    /// The constacyclic shift `(λ c_{N-1}, c_0, ..., c_{N-2})`.
    pub fn lambda_shift(&self, word: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if word.len() as u64 != self.length {
            return Err(CodeError::LengthMismatch);
        }
        let ctx = self.context();
        let mut out = Vec::with_capacity(word.len());
        out.push(ctx.mul(&self.lambda, &word[word.len() - 1])?);
        out.extend_from_slice(&word[..word.len() - 1]);
        Ok(out)
    }

    /// A codeword polynomial, zero-padded to the code length.
    pub fn word_of(&self, c: &Polynomial) -> Result<Vec<FieldElement>, CodeError> {
        if c.degree().is_some_and(|d| d as u64 >= self.length) {
            return Err(CodeError::LengthMismatch);
        }
        Ok((0..self.length as usize).map(|k| c.coeff(k)).collect())
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        let (family, constant, i, j) = match &self.spec {
            CodeSpec::Single(s) => ("single", s.gamma.to_text(), s.exponent, None),
            CodeSpec::Two(t) => ("two", t.xi.to_text(), t.i, Some(t.j)),
        };
        let (n, s) = match &self.spec {
            CodeSpec::Single(sp) => (sp.n, sp.s),
            CodeSpec::Two(sp) => (sp.n, sp.s),
        };
        CodeDescriptor {
            family,
            p: self.context().p(),
            a: self.context().extension_degree(),
            n,
            s,
            constant,
            i,
            j,
            lambda: self.lambda.to_text(),
            length: self.length,
            dimension: self.dimension,
            generator: self.generator.coeff_texts(),
        }
    }
}

/// Flat, serialization-friendly view of a code instance. `constant` holds
/// γ for the single family and ξ for the two-factor family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDescriptor {
    pub family: &'static str,
    pub p: u64,
    pub a: u32,
    pub n: u64,
    pub s: u32,
    pub constant: String,
    pub i: u64,
    pub j: Option<u64>,
    pub lambda: String,
    pub length: u64,
    pub dimension: u64,
    pub generator: Vec<String>,
}

fn check_shape(n: u64, s: u32) -> Result<(), CodeError> {
    if n == 0 {
        return Err(CodeError::NotPositive("n"));
    }
    if s == 0 {
        return Err(CodeError::NotPositive("s"));
    }
    Ok(())
}

/// Irreducibility of `x^2 + 1` over `F_{p^a}` for odd `p`: holds exactly
/// when `p ≡ 3 (mod 4)` and `a` is odd.
pub fn x2_plus_1_irreducible(p: u64, a: u32) -> bool {
    p % 4 == 3 && a % 2 == 1
}

/// Splits `x^{2n} - psi` as `(x^n - xi)(x^n + xi)` with `xi = √psi`,
/// when the square root exists. Irreducibility of the halves is the
/// caller's concern.
pub fn split_even_binomial(
    ctx: &FieldContext,
    n: u64,
    psi: &FieldElement,
) -> Result<(FieldElement, Polynomial, Polynomial), CodeError> {
    if psi.is_zero() {
        return Err(CodeError::ZeroConstant);
    }
    let xi = ctx
        .sqrt(psi)?
        .ok_or_else(|| CodeError::NotASquare(psi.to_text()))?;
    let minus = Polynomial::binomial(ctx, n as usize, ctx.neg(&xi)?)?;
    let plus = Polynomial::binomial(ctx, n as usize, xi.clone())?;
    Ok((xi, minus, plus))
}
