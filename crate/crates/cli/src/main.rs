//! Command-line front end: distance evaluation, table generation,
//! classification, construction, factoring, and oracle verification
//! sweeps. JSON is the machine interface (one object per line for
//! `verify`); text mode renders the same data for humans. Output is
//! byte-identical across runs with the same flags and seed.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use constacyclic::code::{split_even_binomial, x2_plus_1_irreducible};
use constacyclic::distance::distance_of;
use constacyclic::oracle::{
    sweep_lemma_bound, sweep_product_weight, sweep_weight_retaining, OracleReport,
};
use constacyclic::{
    certificate_for, classify_exponent, distance_single, distance_two_factor, negacyclic_distance,
    verify_point, weight_of_power, CodeInstance, DistanceResult, FieldContext, FieldElement,
    PartitionClass, DEFAULT_SEARCH_CAP,
};

#[derive(Parser)]
#[command(
    name = "constacyclic",
    version,
    about = "Repeated-root constacyclic codes: closed-form minimum distances and brute-force verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Json)]
    output: OutputMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Single,
    Two,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum Hamming distance of one code. With --j the two-factor
    /// family is used; --negacyclic routes on the x^2+1 criterion.
    Distance {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: Option<u64>,
        #[arg(long)]
        negacyclic: bool,
        /// Extension degree of the alphabet (used by --negacyclic and
        /// --certificate).
        #[arg(long, default_value_t = 1)]
        a: u32,
        /// Attach a minimum-weight certificate codeword; builds the code
        /// with --n and --gamma/--xi.
        #[arg(long)]
        certificate: bool,
        #[arg(long, default_value_t = 1)]
        n: u64,
        /// Constant of the single-factor binomial, as comma-separated
        /// base-p digits; negatives are normalized.
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        gamma: String,
        /// Square root of psi for the two-factor family.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        xi: String,
    },
    /// Distances of every exponent (single) or exponent pair (two).
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Build every code in a family grid, run the closed form against the
    /// exhaustive oracle, and stream one JSON report per point. Exits 1
    /// on any disagreement.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long)]
        negacyclic: bool,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        xi: String,
        /// Largest message space a full scan may enumerate.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u64,
        /// Force certificate-based partial verification above this
        /// dimension.
        #[arg(long)]
        max_dim: Option<u64>,
        /// Seed for the randomized property sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the randomized property sweeps with this many samples
        /// each (0 = skip).
        #[arg(long, default_value_t = 0)]
        properties: u64,
    },
    /// Locate an exponent in the three-family partition of [1, p^s - 1].
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        i: u64,
    },
    /// Hamming weight of (x^n + c)^N from the base-p digits of N.
    Weight {
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        exponent: u64,
    },
    /// Split x^{2n} - psi as (x^n - xi)(x^n + xi) over F_{p^a}.
    Factor {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
    },
    /// Construct one code and print its descriptor.
    Build {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long)]
        negacyclic: bool,
    },
}

#[derive(Serialize)]
struct DistanceOut<'a> {
    family: &'a str,
    p: u64,
    s: u32,
    i: u64,
    j: Option<u64>,
    distance: Option<u64>,
    case: &'a str,
    swapped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<String>>,
}

#[derive(Serialize)]
struct SingleTableOut<'a> {
    family: &'a str,
    p: u64,
    s: u32,
    distances: Vec<Option<u64>>,
}

#[derive(Serialize)]
struct TwoTableOut<'a> {
    family: &'a str,
    p: u64,
    s: u32,
    matrix: Vec<Vec<Option<u64>>>,
}

#[derive(Serialize)]
struct VerifyLine<'a> {
    family: &'a str,
    p: u64,
    a: u32,
    n: u64,
    s: u32,
    i: u64,
    j: Option<u64>,
    lambda: &'a str,
    length: u64,
    dimension: u64,
    formula: Option<u64>,
    oracle: Option<u64>,
    case: &'a str,
    swapped: bool,
    verification: &'a str,
    certificate_weight: Option<u64>,
    lower_bound: Option<u64>,
    enumerated: u64,
    agree: bool,
}

#[derive(Serialize)]
struct PropertyLine<'a> {
    check: &'a str,
    samples: u64,
    violations: u64,
    seed: u64,
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    i: u64,
    p: u64,
    s: u32,
    class: &'a str,
    beta: Option<u64>,
    tau: Option<u64>,
    k: Option<u32>,
}

#[derive(Serialize)]
struct WeightOut {
    p: u64,
    #[serde(rename = "N")]
    exponent: u64,
    weight: u64,
}

#[derive(Serialize)]
struct FactorOut {
    p: u64,
    a: u32,
    n: u64,
    psi: String,
    xi: String,
    minus: Vec<String>,
    plus: Vec<String>,
    minus_irreducible: bool,
    plus_irreducible: bool,
}

#[derive(Serialize)]
struct BuildOut {
    family: &'static str,
    p: u64,
    a: u32,
    n: u64,
    s: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    xi: Option<String>,
    i: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u64>,
    lambda: String,
    length: u64,
    dimension: u64,
    generator: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_element(ctx: &FieldContext, text: &str) -> Result<FieldElement, String> {
    let digits: Vec<i64> = text
        .split(',')
        .map(|d| {
            d.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad digit {d:?}"))
        })
        .collect::<Result<_, _>>()?;
    ctx.element(&digits).map_err(|e| e.to_string())
}

fn emit<T: Serialize>(mode: OutputMode, value: &T, text: impl FnOnce() -> String) {
    match mode {
        OutputMode::Json => {
            println!("{}", serde_json::to_string(value).expect("serializable"))
        }
        OutputMode::Text => println!("{}", text()),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let mode = cli.output;
    match cli.command {
        Command::Distance {
            p,
            s,
            i,
            j,
            negacyclic,
            a,
            certificate,
            n,
            gamma,
            xi,
        } => cmd_distance(mode, p, s, i, j, negacyclic, a, certificate, n, &gamma, &xi),
        Command::Table { p, s, family } => cmd_table(mode, p, s, family),
        Command::Verify {
            p,
            s,
            family,
            negacyclic,
            a,
            n,
            gamma,
            xi,
            cap,
            max_dim,
            seed,
            properties,
        } => cmd_verify(
            mode, p, s, family, negacyclic, a, n, &gamma, &xi, cap, max_dim, seed, properties,
        ),
        Command::Classify { p, s, i } => cmd_classify(mode, p, s, i),
        Command::Weight { p, exponent } => cmd_weight(mode, p, exponent),
        Command::Factor { p, a, n, psi } => cmd_factor(mode, p, a, n, &psi),
        Command::Build {
            p,
            a,
            n,
            s,
            i,
            j,
            gamma,
            xi,
            negacyclic,
        } => cmd_build(mode, p, a, n, s, i, j, gamma, xi, negacyclic),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_distance(
    mode: OutputMode,
    p: u64,
    s: u32,
    i: u64,
    j: Option<u64>,
    negacyclic: bool,
    a: u32,
    certificate: bool,
    n: u64,
    gamma: &str,
    xi: &str,
) -> Result<bool, String> {
    let result: DistanceResult = if negacyclic {
        negacyclic_distance(p, a, s, i, j).map_err(|e| e.to_string())?
    } else if let Some(j) = j {
        distance_two_factor(p, s, i, j).map_err(|e| e.to_string())?
    } else {
        distance_single(p, s, i).map_err(|e| e.to_string())?
    };
    let family = if negacyclic {
        if x2_plus_1_irreducible(p, a) {
            "single"
        } else {
            "two"
        }
    } else if j.is_some() {
        "two"
    } else {
        "single"
    };
    let cert = if certificate && result.value.is_some() {
        let ctx = FieldContext::new(p, a).map_err(|e| e.to_string())?;
        let code = if negacyclic {
            CodeInstance::negacyclic(&ctx, s, i, j)
        } else if let Some(j) = j {
            CodeInstance::two_factor(&ctx, n, s, parse_element(&ctx, xi)?, i, j)
        } else {
            CodeInstance::single(&ctx, n, s, parse_element(&ctx, gamma)?, i)
        }
        .map_err(|e| e.to_string())?;
        Some(
            certificate_for(&code)
                .map_err(|e| e.to_string())?
                .coeff_texts(),
        )
    } else {
        None
    };
    let out = DistanceOut {
        family,
        p,
        s,
        i,
        j,
        distance: result.value,
        case: result.case.as_str(),
        swapped: result.swapped,
        certificate: cert,
    };
    emit(mode, &out, || match out.distance {
        Some(d) => format!(
            "distance = {d}  [case {}{}]",
            out.case,
            if out.swapped { ", swapped" } else { "" }
        ),
        None => "distance = none  [zero code]".into(),
    });
    Ok(true)
}

fn cmd_table(mode: OutputMode, p: u64, s: u32, family: Family) -> Result<bool, String> {
    let ps = constacyclic::padic::prime_power(p, s).map_err(|e| e.to_string())?;
    match family {
        Family::Single => {
            let distances = (0..=ps)
                .map(|i| distance_single(p, s, i).map(|r| r.value))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let out = SingleTableOut {
                family: "single",
                p,
                s,
                distances,
            };
            emit(mode, &out, || {
                let cells: Vec<String> = out
                    .distances
                    .iter()
                    .map(|d| d.map_or("-".into(), |v| v.to_string()))
                    .collect();
                format!("i:  0..{ps}\nd:  {}", cells.join(" "))
            });
        }
        Family::Two => {
            let mut matrix = Vec::with_capacity(ps as usize + 1);
            for i in 0..=ps {
                let row = (0..=ps)
                    .map(|j| distance_two_factor(p, s, i, j).map(|r| r.value))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                matrix.push(row);
            }
            let out = TwoTableOut {
                family: "two",
                p,
                s,
                matrix,
            };
            emit(mode, &out, || {
                out.matrix
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|d| d.map_or("  -".into(), |v| format!("{v:3}")))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
    }
    Ok(true)
}

fn report_line(report: &OracleReport, mode: OutputMode) {
    let d = &report.descriptor;
    let line = VerifyLine {
        family: d.family,
        p: d.p,
        a: d.a,
        n: d.n,
        s: d.s,
        i: d.i,
        j: d.j,
        lambda: &d.lambda,
        length: d.length,
        dimension: d.dimension,
        formula: report.formula.value,
        oracle: report.oracle_distance,
        case: report.formula.case.as_str(),
        swapped: report.formula.swapped,
        verification: report.verification.as_str(),
        certificate_weight: report.certificate_weight,
        lower_bound: report.lower_bound,
        enumerated: report.enumerated,
        agree: report.agree,
    };
    emit(mode, &line, || {
        format!(
            "i={} j={} formula={} oracle={} [{}] agree={}",
            line.i,
            line.j.map_or("-".into(), |j| j.to_string()),
            line.formula.map_or("-".into(), |v| v.to_string()),
            line.oracle.map_or("-".into(), |v| v.to_string()),
            line.verification,
            line.agree
        )
    });
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    mode: OutputMode,
    p: u64,
    s: u32,
    family: Option<Family>,
    negacyclic: bool,
    a: u32,
    n: u64,
    gamma: &str,
    xi: &str,
    cap: u64,
    max_dim: Option<u64>,
    seed: u64,
    properties: u64,
) -> Result<bool, String> {
    let ctx = FieldContext::new(p, a).map_err(|e| e.to_string())?;
    let ps = constacyclic::padic::prime_power(p, s).map_err(|e| e.to_string())?;
    let mut all_agree = true;
    let mut check = |code: CodeInstance| -> Result<(), String> {
        let report = verify_point(&code, cap, max_dim).map_err(|e| e.to_string())?;
        all_agree &= report.agree;
        report_line(&report, mode);
        Ok(())
    };
    match (family, negacyclic) {
        (Some(_), true) => return Err("choose either --family or --negacyclic".into()),
        (Some(Family::Single), false) => {
            let gamma = parse_element(&ctx, gamma)?;
            for i in 0..=ps {
                check(
                    CodeInstance::single(&ctx, n, s, gamma.clone(), i)
                        .map_err(|e| e.to_string())?,
                )?;
            }
        }
        (Some(Family::Two), false) => {
            let xi = parse_element(&ctx, xi)?;
            for i in 0..=ps {
                for j in 0..=ps {
                    check(
                        CodeInstance::two_factor(&ctx, n, s, xi.clone(), i, j)
                            .map_err(|e| e.to_string())?,
                    )?;
                }
            }
        }
        (None, true) => {
            if x2_plus_1_irreducible(p, a) {
                for i in 0..=ps {
                    check(CodeInstance::negacyclic(&ctx, s, i, None).map_err(|e| e.to_string())?)?;
                }
            } else {
                for i in 0..=ps {
                    for j in 0..=ps {
                        check(
                            CodeInstance::negacyclic(&ctx, s, i, Some(j))
                                .map_err(|e| e.to_string())?,
                        )?;
                    }
                }
            }
        }
        (None, false) => return Err("one of --family or --negacyclic is required".into()),
    }
    if properties > 0 {
        for (name, outcome) in [
            (
                "weight_retaining",
                sweep_weight_retaining(properties, seed).map_err(|e| e.to_string())?,
            ),
            (
                "product_weight",
                sweep_product_weight(properties, seed).map_err(|e| e.to_string())?,
            ),
            (
                "two_factor_bound",
                sweep_lemma_bound(properties, seed).map_err(|e| e.to_string())?,
            ),
        ] {
            all_agree &= outcome.violations == 0;
            let line = PropertyLine {
                check: name,
                samples: outcome.samples,
                violations: outcome.violations,
                seed,
            };
            emit(mode, &line, || {
                format!(
                    "property {name}: {} samples, {} violations",
                    outcome.samples, outcome.violations
                )
            });
        }
    }
    Ok(all_agree)
}

fn cmd_classify(mode: OutputMode, p: u64, s: u32, i: u64) -> Result<bool, String> {
    let class = classify_exponent(i, p, s).map_err(|e| e.to_string())?;
    let out = match class {
        PartitionClass::Low => ClassifyOut {
            i,
            p,
            s,
            class: "Low",
            beta: None,
            tau: None,
            k: None,
        },
        PartitionClass::Beta { beta } => ClassifyOut {
            i,
            p,
            s,
            class: "Beta",
            beta: Some(beta),
            tau: None,
            k: None,
        },
        PartitionClass::TauK { k, tau } => ClassifyOut {
            i,
            p,
            s,
            class: "TauK",
            beta: None,
            tau: Some(tau),
            k: Some(k),
        },
    };
    emit(mode, &out, || match class {
        PartitionClass::Low => format!("i={i} is in the low range (distance clause 2)"),
        PartitionClass::Beta { beta } => format!("i={i} is in Beta({beta})"),
        PartitionClass::TauK { k, tau } => format!("i={i} is in TauK(k={k}, tau={tau})"),
    });
    Ok(true)
}

fn cmd_weight(mode: OutputMode, p: u64, exponent: u64) -> Result<bool, String> {
    if !constacyclic::is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    let out = WeightOut {
        p,
        exponent,
        weight: weight_of_power(exponent, p),
    };
    emit(mode, &out, || {
        format!(
            "w_H((x^n + c)^{exponent}) = {} over characteristic {p}",
            out.weight
        )
    });
    Ok(true)
}

fn cmd_factor(mode: OutputMode, p: u64, a: u32, n: u64, psi: &str) -> Result<bool, String> {
    let ctx = FieldContext::new(p, a).map_err(|e| e.to_string())?;
    let psi = parse_element(&ctx, psi)?;
    let (xi, minus, plus) = split_even_binomial(&ctx, n, &psi).map_err(|e| e.to_string())?;
    let out = FactorOut {
        p,
        a,
        n,
        psi: psi.to_text(),
        xi: xi.to_text(),
        minus: minus.coeff_texts(),
        plus: plus.coeff_texts(),
        minus_irreducible: minus.is_irreducible().map_err(|e| e.to_string())?,
        plus_irreducible: plus.is_irreducible().map_err(|e| e.to_string())?,
    };
    emit(mode, &out, || {
        format!(
            "x^{} - ({}) = ({minus})({plus})  [irreducible: {}, {}]",
            2 * n,
            out.psi,
            out.minus_irreducible,
            out.plus_irreducible
        )
    });
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn cmd_build(
    mode: OutputMode,
    p: u64,
    a: u32,
    n: u64,
    s: u32,
    i: u64,
    j: Option<u64>,
    gamma: Option<String>,
    xi: Option<String>,
    negacyclic: bool,
) -> Result<bool, String> {
    let ctx = FieldContext::new(p, a).map_err(|e| e.to_string())?;
    let code = if negacyclic {
        CodeInstance::negacyclic(&ctx, s, i, j).map_err(|e| e.to_string())?
    } else if let Some(xi) = xi {
        let j = j.ok_or("--xi requires --j")?;
        let xi = parse_element(&ctx, &xi)?;
        CodeInstance::two_factor(&ctx, n, s, xi, i, j).map_err(|e| e.to_string())?
    } else {
        let gamma = gamma.as_deref().unwrap_or("-1");
        let gamma = parse_element(&ctx, gamma)?;
        CodeInstance::single(&ctx, n, s, gamma, i).map_err(|e| e.to_string())?
    };
    let d = code.descriptor();
    let out = BuildOut {
        family: d.family,
        p: d.p,
        a: d.a,
        n: d.n,
        s: d.s,
        gamma: (d.family == "single").then(|| d.constant.clone()),
        xi: (d.family == "two").then(|| d.constant.clone()),
        i: d.i,
        j: d.j,
        lambda: d.lambda.clone(),
        length: d.length,
        dimension: d.dimension,
        generator: d.generator.clone(),
    };
    emit(mode, &out, || {
        let formula = distance_of(&code)
            .map(|r| r.value.map_or("none".into(), |v| v.to_string()))
            .unwrap_or_else(|e| e.to_string());
        format!(
            "[{}] length {} dimension {} over F_{}^{}\n\
             lambda = {}\ngenerator = {}\nformula distance = {formula}",
            d.family,
            d.length,
            d.dimension,
            d.p,
            d.a,
            d.lambda,
            code.generator()
        )
    });
    Ok(true)
}
