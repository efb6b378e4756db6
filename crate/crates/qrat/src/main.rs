use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use qrat::error::Error;
use qrat::poly::IntPolynomial;
use qrat::poset::{fence_dot, ideal_lattice_dot, FencePoset};
use qrat::qrational::{format_generator_word, generator_word, QRationalValue};
use qrat::rational::ReducedRational;
use qrat::render;
use qrat::schubert::{verify_main_theorem, PrimeField, VerificationReport};
use qrat::snake::{lambda_mu_explicit, SnakeGraph, SnakeWord};
use qrat::sweep::run_sweep;

#[derive(Parser)]
#[command(name = "qrat", version, about = "Exact q-rationals, snake graphs, and Schubert cell counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute [R/S]_q and its combinatorial data
    Compute {
        /// Rational as "R/S", e.g. 7/3
        rational: String,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Check the finite-field counting identity for R/S
    Verify {
        /// Rational as "R/S"
        rational: String,
        /// Comma-separated primes out of 2,3,5,7
        #[arg(long, value_delimiter = ',', default_value = "2")]
        fields: Vec<u64>,
        /// Emit JSON reports instead of text
        #[arg(long)]
        json: bool,
    },
    /// Draw the snake graph, its paths, and the lambda/mu shading
    Snake {
        /// Rational as "R/S"
        rational: String,
        #[arg(long, value_enum, default_value_t = SnakeFormat::Ascii)]
        format: SnakeFormat,
        /// Shade the mu region inside the lambda grid
        #[arg(long)]
        shade: bool,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the invariant suite over all coprime s < r <= max-r
    Sweep {
        #[arg(long)]
        max_r: u64,
        /// Comma-separated primes for the counting identity
        #[arg(long, value_delimiter = ',', default_value = "2")]
        fields: Vec<u64>,
    },
    /// Quick end-to-end self check
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SnakeFormat {
    Ascii,
    Svg,
    Tikz,
    Dot,
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for_error(&e)
        }
    };
    std::process::exit(code);
}

/// 0 = success, 1 = a verification found a mismatch (or an internal
/// inconsistency), 2 = bad input or an exceeded budget.
fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 1,
        Error::Domain(_)
        | Error::Parse(_)
        | Error::Containment(_)
        | Error::Budget(_)
        | Error::UnsupportedField(_) => 2,
    }
}

fn verification_exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.ok) {
        0
    } else {
        1
    }
}

fn dispatch(cli: Cli) -> qrat::Result<i32> {
    match cli.command {
        Command::Compute { rational, json } => cmd_compute(&rational, json),
        Command::Verify {
            rational,
            fields,
            json,
        } => cmd_verify(&rational, &fields, json),
        Command::Snake {
            rational,
            format,
            shade,
            output,
        } => cmd_snake(&rational, format, shade, output.as_deref()),
        Command::Sweep { max_r, fields } => cmd_sweep(max_r, &fields),
        Command::Selftest => cmd_selftest(),
    }
}

fn biguint_json(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn coeff_json(p: &IntPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match c.to_i64() {
                Some(n) => json!(n),
                None => json!(c.to_string()),
            })
            .collect(),
    )
}

fn cmd_compute(rational: &str, as_json: bool) -> qrat::Result<i32> {
    let x: ReducedRational = rational.parse()?;
    let cf = x.continued_fraction()?;
    let value = QRationalValue::from_cf(&cf);
    let (lambda, mu) = lambda_mu_explicit(&cf);
    let (k, n) = cf.grassmannian_params();
    let word = SnakeWord::from_cf(&cf);
    let graph = SnakeGraph::from_word(&word);
    let path_count = graph.paths().len() as u64;

    if as_json {
        let doc = json!({
            "r": biguint_json(x.r()),
            "s": biguint_json(x.s()),
            "cf": cf.terms(),
            "numerator": coeff_json(value.numerator()),
            "denominator": coeff_json(value.denominator()),
            "lambda": lambda.parts(),
            "mu": mu.parts(),
            "k": k,
            "n": n,
            "word": word.to_string(),
            "path_count": path_count,
        });
        println!("{doc}");
    } else {
        println!("r/s        = {x}");
        println!("cf         = {cf}");
        println!("R(q)       = {}", value.numerator());
        println!("S(q)       = {}", value.denominator());
        println!("lambda     = {lambda}");
        println!("mu         = {mu}");
        println!("(k, n)     = ({k}, {n})");
        println!("word       = {}", format_generator_word(&generator_word(&cf)));
        println!("snake word = {word}");
        println!("paths      = {path_count}");
    }
    Ok(0)
}

fn cmd_verify(rational: &str, fields: &[u64], as_json: bool) -> qrat::Result<i32> {
    let x: ReducedRational = rational.parse()?;
    let mut reports = Vec::new();
    for &p in fields {
        let field = PrimeField::new(p)?;
        reports.push(verify_main_theorem(&x, field)?);
    }
    if as_json {
        let docs: Vec<Value> = reports
            .iter()
            .map(|report| {
                json!({
                    "r": biguint_json(report.source.r()),
                    "s": biguint_json(report.source.s()),
                    "p": report.p,
                    "k": report.k,
                    "n": report.n,
                    "mu": report.mu.parts(),
                    "lambda": report.lambda.parts(),
                    "lhs": report.lhs.to_string(),
                    "rhs": report.rhs.to_string(),
                    "ok": report.ok,
                })
            })
            .collect();
        println!("{}", Value::Array(docs));
    } else {
        for report in &reports {
            println!("{}: {report}", report.source);
        }
    }
    Ok(verification_exit_code(&reports))
}

fn cmd_snake(
    rational: &str,
    format: SnakeFormat,
    shade: bool,
    output: Option<&std::path::Path>,
) -> qrat::Result<i32> {
    let x: ReducedRational = rational.parse()?;
    let cf = x.continued_fraction()?;
    let word = SnakeWord::from_cf(&cf);
    let graph = SnakeGraph::from_word(&word);
    let content = match format {
        SnakeFormat::Ascii => {
            if shade {
                let (lam, mu) = graph.lambda_mu_from_boundary();
                render::ascii_snake_shaded(&lam, &mu)
            } else {
                render::ascii_snake(&graph)
            }
        }
        SnakeFormat::Svg | SnakeFormat::Tikz => {
            let paths = graph.paths();
            let overlay = graph.lambda_mu_from_boundary();
            let shade_ref = shade.then_some((&overlay.0, &overlay.1));
            if format == SnakeFormat::Svg {
                render::svg_snake(&graph, shade_ref, &paths)
            } else {
                render::tikz_snake(&graph, shade_ref, &paths)
            }
        }
        SnakeFormat::Dot => {
            let fence = FencePoset::from_cf(&cf);
            format!("{}\n{}", fence_dot(&fence), ideal_lattice_dot(&fence))
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &content) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Ok(2);
            }
        }
        None => print!("{content}"),
    }
    Ok(0)
}

fn cmd_sweep(max_r: u64, fields: &[u64]) -> qrat::Result<i32> {
    let report = run_sweep(max_r, fields)?;
    if report.instances == 0 {
        println!("warning: no coprime pairs with 1 <= s < r <= {max_r}; nothing to check");
        return Ok(0);
    }
    println!(
        "sweep over {} instances (s < r <= {}), fields {:?}",
        report.instances, report.max_r, report.fields
    );
    println!("{:<28} {:>10} {:>10}  result", "check", "instances", "failures");
    for check in &report.checks {
        let status = if check.passed() {
            "pass"
        } else if check.advisory {
            "warn"
        } else {
            "FAIL"
        };
        println!(
            "{:<28} {:>10} {:>10}  {}{}",
            check.name,
            check.instances,
            check.failures.len(),
            status,
            if check.advisory { " (observed property)" } else { "" },
        );
        for failure in check.failures.iter().take(5) {
            println!("    {failure}");
        }
    }
    if report.passed() {
        println!("result: PASS");
        Ok(0)
    } else {
        println!("result: FAIL");
        Ok(1)
    }
}

fn cmd_selftest() -> qrat::Result<i32> {
    use num_bigint::BigInt;
    use qrat::poly::{q_binomial, q_factorial};
    use qrat::poset::{box_path_gen_fn, inversion_gen_fn};
    use qrat::schubert::{count_flags, count_grassmannian_raw, count_union_raw};
    use qrat::Partition;

    let mut ok = true;
    let mut check = |name: &str, passed: bool| {
        println!("selftest: {name:<40} {}", if passed { "ok" } else { "FAIL" });
        ok &= passed;
    };

    for n in 1..=6 {
        if inversion_gen_fn(n)? != q_factorial(n) {
            check("inversions match q-factorial", false);
        }
    }
    check("inversions match q-factorial (n <= 6)", true);

    let mut boxes_ok = true;
    for n in 0..=8u64 {
        for k in 0..=n {
            boxes_ok &= box_path_gen_fn(n, k)? == q_binomial(n, k);
        }
    }
    check("box paths match q-binomial (n <= 8)", boxes_ok);

    let f2 = PrimeField::new(2)?;
    let f3 = PrimeField::new(3)?;
    let eval = |poly: &IntPolynomial, p: u64| {
        poly.eval(&BigInt::from(p)).to_biguint().expect("positive")
    };
    check(
        "raw Grassmannian counts (F_2, F_3)",
        count_grassmannian_raw(2, 4, f2)? == eval(&q_binomial(4, 2), 2)
            && count_grassmannian_raw(3, 5, f2)? == eval(&q_binomial(5, 3), 2)
            && count_grassmannian_raw(2, 4, f3)? == eval(&q_binomial(4, 2), 3),
    );
    check(
        "flag counts (F_2, F_3)",
        count_flags(3, f2)? == eval(&q_factorial(3), 2)
            && count_flags(2, f3)? == eval(&q_factorial(2), 3),
    );
    check(
        "7/3 union count, decomposition-free",
        count_union_raw(
            &Partition::new(vec![1, 1]),
            &Partition::new(vec![2, 2, 2]),
            3,
            5,
            f2,
        )? == BigUint::from(148u32),
    );

    let report = run_sweep(20, &[2, 3])?;
    check("sweep r <= 20, fields {2, 3}", report.passed());

    if ok {
        println!("selftest: PASS");
        Ok(0)
    } else {
        println!("selftest: FAIL");
        Ok(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qrat::Partition;

    fn report(ok: bool) -> VerificationReport {
        VerificationReport {
            source: ReducedRational::from_u64(7, 3).unwrap(),
            p: 2,
            k: 3,
            n: 5,
            mu: Partition::new(vec![1, 1]),
            lambda: Partition::new(vec![2, 2, 2]),
            lhs: BigUint::from(148u32),
            rhs: BigUint::from(if ok { 148u32 } else { 147 }),
            ok,
        }
    }

    #[test]
    fn exit_code_contract() {
        // 0: all verifications agree
        assert_eq!(verification_exit_code(&[report(true), report(true)]), 0);
        // 1: any mismatch
        assert_eq!(verification_exit_code(&[report(true), report(false)]), 1);
        // 1: internal inconsistency; 2: invalid input of any kind
        assert_eq!(exit_code_for_error(&Error::Internal("bug".into())), 1);
        assert_eq!(exit_code_for_error(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code_for_error(&Error::Domain("x".into())), 2);
        assert_eq!(exit_code_for_error(&Error::Budget("x".into())), 2);
        assert_eq!(exit_code_for_error(&Error::UnsupportedField(11)), 2);
        assert_eq!(exit_code_for_error(&Error::Containment("x".into())), 2);
    }

    #[test]
    fn json_helpers_fall_back_to_strings() {
        let big = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(biguint_json(&BigUint::from(7u32)), json!(7));
        assert_eq!(biguint_json(&big), json!(big.to_string()));
    }
}
