//! Closed-form minimum Hamming distances for both code families, plus
//! explicit minimum-weight certificate codewords.
//!
//! The single-factor form reads the partition class of the exponent
//! directly; the two-factor form dispatches over eleven ranges of the
//! exponent pair `(i, j)`, normalized to `i >= j` first (the table is
//! symmetric under swapping the factors). The values depend only on
//! `(p, s)` and the exponents, never on `n`, the alphabet size, or the
//! constants.

use thiserror::Error;

use crate::code::{CodeInstance, CodeSpec};
use crate::field::is_prime;
use crate::padic::{classify_exponent, prime_power, PadicError, PartitionClass};
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("two-factor distances require odd characteristic")]
    EvenCharacteristic,
    #[error("exponent {got} outside [0, {top}]")]
    OutOfRange { got: u64, top: u64 },
    #[error("this negacyclic family takes {expected} exponent(s)")]
    WrongArity { expected: &'static str },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// Which clause or table row produced a distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    FullSpace,
    ZeroCode,
    Low2,
    Beta,
    TauK,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::FullSpace => "FullSpace",
            CaseLabel::ZeroCode => "ZeroCode",
            CaseLabel::Low2 => "Low2",
            CaseLabel::Beta => "Beta",
            CaseLabel::TauK => "TauK",
            CaseLabel::T1 => "T1",
            CaseLabel::T2 => "T2",
            CaseLabel::T3 => "T3",
            CaseLabel::T4 => "T4",
            CaseLabel::T5 => "T5",
            CaseLabel::T6 => "T6",
            CaseLabel::T7 => "T7",
            CaseLabel::T8 => "T8",
            CaseLabel::T9 => "T9",
            CaseLabel::T10 => "T10",
            CaseLabel::T11 => "T11",
        }
    }
}

/// A computed minimum distance. `value` is absent exactly for the zero
/// code; `swapped` records that a two-factor pair was normalized to
/// `i >= j` before dispatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub value: Option<u64>,
    pub case: CaseLabel,
    pub swapped: bool,
}

/// How to assemble a minimum-weight codeword witnessing the distance.
/// `Symmetric(e)` is `((x^n - ξ)(x^n + ξ))^e`; `Split { eu, ev }` puts
/// `eu` on the larger-exponent factor and `ev` on the other (for the
/// single family only `Split { eu, ev: 0 }`-shaped plans arise, meaning
/// `(x^n + γ)^eu`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WitnessPlan {
    Constant,
    Symmetric(u64),
    Split { eu: u64, ev: u64 },
}

fn validate(p: u64, s: u32) -> Result<u64, DistanceError> {
    if !is_prime(p) {
        return Err(DistanceError::NotPrime(p));
    }
    if s == 0 {
        return Err(DistanceError::OutOfRange { got: 0, top: 0 });
    }
    Ok(prime_power(p, s)?)
}

/// Minimum distance of `⟨(x^n + γ)^i⟩` of length `n*p^s`: 1 for the whole
/// space, absent for the zero code, otherwise 2 / β+2 / (τ+1)p^k by the
/// partition class of `i`. Independent of `n`, the alphabet, and `γ`.
pub fn distance_single(p: u64, s: u32, i: u64) -> Result<DistanceResult, DistanceError> {
    let ps = validate(p, s)?;
    if i > ps {
        return Err(DistanceError::OutOfRange { got: i, top: ps });
    }
    let (value, case) = single_value(p, s, i)?;
    Ok(DistanceResult {
        value,
        case,
        swapped: false,
    })
}

fn single_value(p: u64, s: u32, i: u64) -> Result<(Option<u64>, CaseLabel), DistanceError> {
    let ps = prime_power(p, s)?;
    if i == 0 {
        return Ok((Some(1), CaseLabel::FullSpace));
    }
    if i == ps {
        return Ok((None, CaseLabel::ZeroCode));
    }
    Ok(match classify_exponent(i, p, s)? {
        PartitionClass::Low => (Some(2), CaseLabel::Low2),
        PartitionClass::Beta { beta } => (Some(beta + 2), CaseLabel::Beta),
        PartitionClass::TauK { k, tau } => (Some((tau + 1) * prime_power(p, k)?), CaseLabel::TauK),
    })
}

/// Minimum distance of `⟨(x^n - ξ)^i (x^n + ξ)^j⟩` of length `2n*p^s`
/// over odd characteristic. Pairs with `i < j` are swapped first; the
/// result is symmetric. Independent of `n`, the alphabet, and `ξ`.
pub fn distance_two_factor(
    p: u64,
    s: u32,
    i: u64,
    j: u64,
) -> Result<DistanceResult, DistanceError> {
    let ps = validate(p, s)?;
    if p == 2 {
        return Err(DistanceError::EvenCharacteristic);
    }
    for &e in [i, j].iter() {
        if e > ps {
            return Err(DistanceError::OutOfRange { got: e, top: ps });
        }
    }
    let swapped = i < j;
    let (u, v) = if swapped { (j, i) } else { (i, j) };
    let (value, case, _) = two_factor_case(p, s, u, v)?;
    Ok(DistanceResult {
        value,
        case,
        swapped,
    })
}

/// Shared dispatch for the two-factor table, on a pair already normalized
/// to `u >= v`. Returns the distance, the row label, and the witness plan
/// for the certificate.
fn two_factor_case(
    p: u64,
    s: u32,
    u: u64,
    v: u64,
) -> Result<(Option<u64>, CaseLabel, WitnessPlan), DistanceError> {
    debug_assert!(u >= v);
    let ps = prime_power(p, s)?;
    let ps1 = ps / p;
    if u == 0 {
        return Ok((Some(1), CaseLabel::FullSpace, WitnessPlan::Constant));
    }
    if v == ps {
        return Ok((None, CaseLabel::ZeroCode, WitnessPlan::Constant));
    }
    if v == 0 {
        return Ok((Some(2), CaseLabel::T1, WitnessPlan::Split { eu: ps, ev: 0 }));
    }
    if u <= ps1 {
        return Ok((Some(2), CaseLabel::T2, WitnessPlan::Symmetric(ps1)));
    }
    if v <= ps1 && u <= 2 * ps1 {
        return Ok((Some(3), CaseLabel::T3, WitnessPlan::Symmetric(2 * ps1)));
    }
    if v <= ps1 {
        return Ok((
            Some(4),
            CaseLabel::T4,
            WitnessPlan::Split { eu: ps, ev: ps1 },
        ));
    }
    // Now p^{s-1} < v <= u, so both classify as Beta or TauK (or u = p^s).
    let top_of = |class: PartitionClass| -> Result<u64, DistanceError> {
        Ok(match class {
            PartitionClass::Low => unreachable!("exponent above p^{{s-1}}"),
            PartitionClass::Beta { beta } => (beta + 1) * ps1,
            PartitionClass::TauK { k, tau } => {
                ps - prime_power(p, s - k)? + tau * prime_power(p, s - k - 1)?
            }
        })
    };
    let class_v = classify_exponent(v, p, s)?;
    if u == ps {
        let (value, case) = match class_v {
            PartitionClass::Beta { beta } => (2 * (beta + 2), CaseLabel::T10),
            PartitionClass::TauK { k, tau } => (2 * (tau + 1) * prime_power(p, k)?, CaseLabel::T11),
            PartitionClass::Low => unreachable!("v > p^{{s-1}}"),
        };
        return Ok((
            Some(value),
            case,
            WitnessPlan::Split {
                eu: ps,
                ev: top_of(class_v)?,
            },
        ));
    }
    let class_u = classify_exponent(u, p, s)?;
    Ok(match (class_u, class_v) {
        (PartitionClass::Beta { beta }, PartitionClass::Beta { beta: beta_v }) => {
            let direct = beta + 2;
            let doubled = 2 * (beta_v + 2);
            let plan = if direct <= doubled {
                WitnessPlan::Symmetric(top_of(class_u)?)
            } else {
                WitnessPlan::Split {
                    eu: ps,
                    ev: top_of(class_v)?,
                }
            };
            (Some(direct.min(doubled)), CaseLabel::T5, plan)
        }
        (PartitionClass::TauK { .. }, PartitionClass::Beta { beta }) => (
            Some(2 * (beta + 2)),
            CaseLabel::T6,
            WitnessPlan::Split {
                eu: ps,
                ev: top_of(class_v)?,
            },
        ),
        (PartitionClass::TauK { k, tau }, PartitionClass::TauK { k: kv, tau: tau_v }) => {
            if k == kv && tau == tau_v {
                (
                    Some((tau + 1) * prime_power(p, k)?),
                    CaseLabel::T7,
                    WitnessPlan::Symmetric(top_of(class_u)?),
                )
            } else if k == kv {
                // Same k, smaller tau on the v side.
                let direct = (tau + 1) * prime_power(p, k)?;
                let doubled = 2 * (tau_v + 1) * prime_power(p, k)?;
                let plan = if direct <= doubled {
                    WitnessPlan::Symmetric(top_of(class_u)?)
                } else {
                    WitnessPlan::Split {
                        eu: ps,
                        ev: top_of(class_v)?,
                    }
                };
                (Some(direct.min(doubled)), CaseLabel::T8, plan)
            } else {
                // u >= v forces kv < k; the result reads only the v side.
                debug_assert!(kv < k);
                (
                    Some(2 * (tau_v + 1) * prime_power(p, kv)?),
                    CaseLabel::T9,
                    WitnessPlan::Split {
                        eu: ps,
                        ev: top_of(class_v)?,
                    },
                )
            }
        }
        (PartitionClass::Low, _) | (_, PartitionClass::Low) => {
            unreachable!("both exponents above p^{{s-1}}")
        }
        (PartitionClass::Beta { .. }, PartitionClass::TauK { .. }) => {
            unreachable!("u >= v puts the TauK side on u")
        }
    })
}

/// Minimum distance of the length `2p^s` negacyclic codes over `F_{p^a}`:
/// when `x^2 + 1` is irreducible (`p ≡ 3 mod 4`, odd `a`) the family has a
/// single exponent and follows the single-factor form with `n = 2`;
/// otherwise it is a two-factor family and `j` is required.
pub fn negacyclic_distance(
    p: u64,
    a: u32,
    s: u32,
    i: u64,
    j: Option<u64>,
) -> Result<DistanceResult, DistanceError> {
    if p == 2 {
        return Err(DistanceError::EvenCharacteristic);
    }
    if crate::code::x2_plus_1_irreducible(p, a) {
        if j.is_some() {
            return Err(DistanceError::WrongArity { expected: "one" });
        }
        distance_single(p, s, i)
    } else {
        let j = j.ok_or(DistanceError::WrongArity { expected: "two" })?;
        distance_two_factor(p, s, i, j)
    }
}

/// The distance the formulas assign to a built code instance.
pub fn distance_of(code: &CodeInstance) -> Result<DistanceResult, DistanceError> {
    match code.spec() {
        CodeSpec::Single(sp) => distance_single(sp.ctx.p(), sp.s, sp.exponent),
        CodeSpec::Two(sp) => distance_two_factor(sp.ctx.p(), sp.s, sp.i, sp.j),
    }
}

/// Produces an explicit codeword of the instance whose weight equals the
/// formula value: the standard explicit witnesses, e.g.
/// `(x^n + γ)^{(β+1)p^{s-1}}` for a Beta-class exponent, or
/// `(x^n - ξ)^{p^s} (x^n + ξ)^{(β+1)p^{s-1}}` for the doubled table rows.
/// Fails only for the zero code.
pub fn certificate_for(code: &CodeInstance) -> Result<Polynomial, DistanceError> {
    match code.spec() {
        CodeSpec::Single(sp) => {
            let p = sp.ctx.p();
            let ps = prime_power(p, sp.s)?;
            let ps1 = ps / p;
            if sp.exponent == ps {
                return Err(DistanceError::ZeroCode);
            }
            if sp.exponent == 0 {
                return Ok(Polynomial::one(&sp.ctx));
            }
            let e = match classify_exponent(sp.exponent, p, sp.s)? {
                PartitionClass::Low => ps1,
                PartitionClass::Beta { beta } => (beta + 1) * ps1,
                PartitionClass::TauK { k, tau } => {
                    ps - prime_power(p, sp.s - k)? + tau * prime_power(p, sp.s - k - 1)?
                }
            };
            let factor = Polynomial::binomial(&sp.ctx, sp.n as usize, sp.gamma.clone())?;
            Ok(factor.pow(e))
        }
        CodeSpec::Two(sp) => {
            let p = sp.ctx.p();
            let (u_is_minus, u, v) = if sp.i >= sp.j {
                (true, sp.i, sp.j)
            } else {
                (false, sp.j, sp.i)
            };
            let (_, _, plan) = two_factor_case(p, sp.s, u, v)?;
            let minus = Polynomial::binomial(&sp.ctx, sp.n as usize, sp.ctx.neg(&sp.xi)?)?;
            let plus = Polynomial::binomial(&sp.ctx, sp.n as usize, sp.xi.clone())?;
            let (fu, fv) = if u_is_minus {
                (&minus, &plus)
            } else {
                (&plus, &minus)
            };
            match plan {
                WitnessPlan::Constant => {
                    if v == prime_power(p, sp.s)? {
                        Err(DistanceError::ZeroCode)
                    } else {
                        Ok(Polynomial::one(&sp.ctx))
                    }
                }
                WitnessPlan::Symmetric(e) => Ok(fu.mul(fv)?.pow(e)),
                WitnessPlan::Split { eu, ev } => Ok(fu.pow(eu).mul(&fv.pow(ev))?),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn d1(p: u64, s: u32, i: u64) -> Option<u64> {
        distance_single(p, s, i).unwrap().value
    }

    fn d2(p: u64, s: u32, i: u64, j: u64) -> Option<u64> {
        distance_two_factor(p, s, i, j).unwrap().value
    }

    #[test]
    fn single_factor_examples() {
        let r = distance_single(3, 2, 4).unwrap();
        assert_eq!(r.value, Some(3));
        assert_eq!(r.case, CaseLabel::Beta);

        let r = distance_single(3, 2, 8).unwrap();
        assert_eq!(r.value, Some(9));
        assert_eq!(r.case, CaseLabel::TauK);

        assert_eq!(d1(2, 3, 7), Some(8));
        assert_eq!(d1(5, 1, 0), Some(1));
        assert_eq!(distance_single(3, 2, 0).unwrap().case, CaseLabel::FullSpace);
        assert_eq!(d1(3, 2, 9), None);
        assert!(matches!(
            distance_single(3, 2, 10),
            Err(DistanceError::OutOfRange { .. })
        ));
        assert!(matches!(
            distance_single(4, 1, 0),
            Err(DistanceError::NotPrime(4))
        ));
    }

    #[test]
    fn single_factor_full_sweeps() {
        let sweep = |p: u64, s: u32| (0..=p.pow(s)).map(|i| d1(p, s, i)).collect::<Vec<_>>();
        assert_eq!(sweep(3, 1), vec![Some(1), Some(2), Some(3), None],);
        assert_eq!(
            sweep(2, 3),
            vec![
                Some(1),
                Some(2),
                Some(2),
                Some(2),
                Some(2),
                Some(4),
                Some(4),
                Some(8),
                None
            ],
        );
    }

    #[test]
    fn two_factor_examples() {
        let r = distance_two_factor(3, 1, 2, 1).unwrap();
        assert_eq!(
            (r.value, r.case, r.swapped),
            (Some(3), CaseLabel::T3, false)
        );

        let r = distance_two_factor(3, 1, 3, 2).unwrap();
        assert_eq!((r.value, r.case), (Some(6), CaseLabel::T10));

        let r = distance_two_factor(3, 1, 2, 2).unwrap();
        assert_eq!((r.value, r.case), (Some(3), CaseLabel::T5));

        assert_eq!(d2(3, 1, 0, 0), Some(1));
        assert_eq!(d2(3, 1, 3, 3), None);

        let r = distance_two_factor(3, 1, 1, 2).unwrap();
        assert_eq!((r.value, r.swapped), (Some(3), true));

        assert!(matches!(
            distance_two_factor(2, 1, 1, 1),
            Err(DistanceError::EvenCharacteristic)
        ));
    }

    #[test]
    fn two_factor_deeper_rows() {
        // p=3, s=2: TauK(1, tau) ranges are {7, 8} with tau = 1, 2.
        assert_eq!(d2(3, 2, 7, 7), Some(6)); // T7, (1+1)*3
        assert_eq!(d2(3, 2, 8, 8), Some(9)); // T7, (2+1)*3
        assert_eq!(d2(3, 2, 8, 7), Some(9)); // T8, min(2*2*3, 3*3)
        assert_eq!(d2(3, 2, 8, 4), Some(6)); // T6, 2*(1+2)
        assert_eq!(d2(3, 2, 9, 4), Some(6)); // T10
        assert_eq!(d2(3, 2, 9, 8), Some(18)); // T11
        assert_eq!(d2(3, 2, 9, 1), Some(4)); // T4 absorbs i = p^s, small j
        assert_eq!(d2(3, 2, 9, 0), Some(2)); // T1

        // Distinct k needs s >= 3: p=3, s=3, TauK(2, tau) = {25, 26},
        // TauK(1, tau) = {19..21, 22..24}.
        let r = distance_two_factor(3, 3, 25, 19).unwrap();
        assert_eq!((r.value, r.case), (Some(12), CaseLabel::T9)); // 2*(1+1)*3
        let r = distance_two_factor(3, 3, 26, 22).unwrap();
        assert_eq!((r.value, r.case), (Some(18), CaseLabel::T9)); // 2*(2+1)*3
    }

    #[test]
    fn swap_symmetry_exhaustive() {
        for (p, s) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2)] {
            let ps = p.pow(s);
            for i in 0..=ps {
                for j in 0..=ps {
                    assert_eq!(d2(p, s, i, j), d2(p, s, j, i), "p={p} s={s} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn monotone_in_exponents() {
        let inf = u64::MAX;
        for (p, s) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2)] {
            let ps = p.pow(s);
            for i in 0..=ps {
                for i2 in i..=ps {
                    let a = d1(p, s, i).unwrap_or(inf);
                    let b = d1(p, s, i2).unwrap_or(inf);
                    assert!(a <= b, "single p={p} s={s} {i}->{i2}");
                    for j in 0..=ps {
                        for j2 in j..=ps {
                            let a = d2(p, s, i, j).unwrap_or(inf);
                            let b = d2(p, s, i2, j2).unwrap_or(inf);
                            assert!(a <= b, "two p={p} s={s} ({i},{j})->({i2},{j2})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn negacyclic_examples() {
        let r = negacyclic_distance(7, 1, 1, 5, None).unwrap();
        assert_eq!(r.value, Some(6));
        assert!(matches!(
            negacyclic_distance(7, 1, 1, 5, Some(1)),
            Err(DistanceError::WrongArity { .. })
        ));
        // a even makes x^2 + 1 reducible: two exponents required.
        assert!(matches!(
            negacyclic_distance(7, 2, 1, 5, None),
            Err(DistanceError::WrongArity { .. })
        ));
        let r = negacyclic_distance(5, 1, 1, 2, Some(1)).unwrap();
        assert_eq!(r.value, Some(3));
        assert!(matches!(
            negacyclic_distance(2, 1, 1, 1, None),
            Err(DistanceError::EvenCharacteristic)
        ));
    }

    #[test]
    fn certificate_examples() {
        let f3 = FieldContext::new(3, 1).unwrap();
        // Low class: x^{n p^{s-1}} + gamma^{p^{s-1}}, weight 2.
        let code = CodeInstance::single(&f3, 1, 2, f3.from_int(2), 2).unwrap();
        let cert = certificate_for(&code).unwrap();
        assert_eq!(cert.weight(), 2);
        assert_eq!(cert, Polynomial::from_ints(&f3, &[2, 0, 0, 1]));
        assert!(code.is_codeword(&cert).unwrap());

        // Row 3 witness expands to three terms.
        let code = CodeInstance::two_factor(&f3, 1, 1, f3.one(), 2, 1).unwrap();
        let cert = certificate_for(&code).unwrap();
        assert_eq!(cert.weight(), 3);
        assert!(code.is_codeword(&cert).unwrap());

        // Row 4 witness has weight 4.
        let code = CodeInstance::two_factor(&f3, 1, 1, f3.one(), 3, 1).unwrap();
        let cert = certificate_for(&code).unwrap();
        assert_eq!(cert.weight(), 4);
        assert!(code.is_codeword(&cert).unwrap());

        // Zero code has no certificate.
        let code = CodeInstance::single(&f3, 1, 1, f3.from_int(2), 3).unwrap();
        assert!(matches!(
            certificate_for(&code),
            Err(DistanceError::ZeroCode)
        ));
    }

    #[test]
    fn certificates_match_formula_on_small_grids() {
        let f3 = FieldContext::new(3, 1).unwrap();
        for s in 1..=2u32 {
            let ps = 3u64.pow(s);
            for i in 0..ps {
                let code = CodeInstance::single(&f3, 1, s, f3.from_int(2), i).unwrap();
                let cert = certificate_for(&code).unwrap();
                assert!(code.is_codeword(&cert).unwrap());
                assert_eq!(Some(cert.weight()), d1(3, s, i), "single i={i} s={s}");
            }
            for i in 0..=ps {
                for j in 0..=ps {
                    if (i, j) == (ps, ps) {
                        continue;
                    }
                    let code = CodeInstance::two_factor(&f3, 1, s, f3.one(), i, j).unwrap();
                    let cert = certificate_for(&code).unwrap();
                    assert!(code.is_codeword(&cert).unwrap());
                    assert_eq!(Some(cert.weight()), d2(3, s, i, j), "two ({i},{j}) s={s}");
                }
            }
        }
    }
}
