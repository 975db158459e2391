//! Command-line surface. [`run`] parses argv, dispatches a verb and returns
//! the exit code together with everything written to stdout and stderr.

use std::fmt::Write as _;

use cayley_core::cross::{cross, cross_identities_check, PureVector};
use cayley_core::laws::{property_matrix, run_check, CheckMode, LawId};
use cayley_core::scalar::parse_rational;
use cayley_core::tables::{
    find_zero_divisors, gen_table, render_table, verify_counterexamples, TableFormat,
};
use cayley_core::{Element, Error, ProductVariant};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::expr::{eval_expr, infer_level, parse, ExprError, Value};

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "CAYLEY_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cayley",
    version,
    about = "Exact Cayley-Dickson algebras and their laws"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Same as `--format json`.
    #[arg(long)]
    json: bool,
    /// Print units by name (i, j, k, l, ...) instead of e<k>.
    #[arg(long)]
    pretty: bool,
}

impl Output {
    fn is_json(&self, default: Format) -> bool {
        self.json || self.format.unwrap_or(default) == Format::Json
    }
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Evaluate an expression such as "l*(I*J)" or "norm(e3 + e10)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Algebra level (dimension 2^level); inferred from the symbols if absent.
        #[arg(long)]
        level: Option<usize>,
        /// Pair product used by "*": cm, qm or om.
        #[arg(long, default_value = "om", value_parser = parse_variant)]
        variant: ProductVariant,
        #[command(flatten)]
        out: Output,
    },
    /// Multiplicative inverse of an expression's value.
    Inverse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        level: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Multiplication table of the basis units.
    Table {
        #[arg(long)]
        level: usize,
        /// Label units i, j, k, ... (levels up to 4).
        #[arg(long)]
        names: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check one law at one level. Reports JSON unless --format text.
    Check {
        #[arg(long, value_parser = parse_law)]
        law: LawId,
        #[arg(long)]
        level: usize,
        /// random or exhaustive-basis.
        #[arg(long, default_value = "random", value_parser = parse_mode)]
        mode: CheckMode,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Include elapsed_ms in the report.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Composition / associativity / commutativity / trivial conjugation per level.
    Matrix {
        #[arg(long, default_value_t = 4)]
        max_level: usize,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Search products of one- and two-term elements that vanish.
    FindZeroDivisors {
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 2)]
        max_terms: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Recompute the rejected-product and sedenion counterexamples.
    VerifyCounterexamples {
        #[command(flatten)]
        out: Output,
    },
    /// Cross product of two comma-separated vectors, or --check the identities.
    Cross {
        #[arg(long)]
        dim: usize,
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
        /// Sample the cross-product identities instead.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
}

fn parse_variant(s: &str) -> Result<ProductVariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_law(s: &str) -> Result<LawId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<CheckMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    stdout: String,
    stderr: String,
    env_seed: Option<String>,
}

impl Ctx {
    fn seed(&self, flag: Option<u64>) -> Result<u64, ExprError> {
        match (flag, &self.env_seed) {
            (Some(s), _) => Ok(s),
            (None, Some(v)) => v.trim().parse().map_err(|_| {
                Error::Usage(format!("{SEED_ENV}={v:?} is not an unsigned integer")).into()
            }),
            (None, None) => Ok(0),
        }
    }

    fn emit_json(&mut self, v: &Json) {
        self.stdout
            .push_str(&serde_json::to_string_pretty(v).expect("json value"));
        self.stdout.push('\n');
    }

    fn note(&mut self, msg: impl AsRef<str>) {
        self.stderr.push_str(msg.as_ref());
        self.stderr.push('\n');
    }
}

/// Runs the CLI on `args` (including the program name). `env_seed` is the
/// value of [`SEED_ENV`], if set.
pub fn run<I, T>(args: I, env_seed: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut ctx = Ctx {
        stdout: String::new(),
        stderr: String::new(),
        env_seed,
    };
    let code = match dispatch(cli.verb, &mut ctx) {
        Ok(code) => code,
        Err(ExprError::Core(e @ Error::CounterexampleMismatch { .. })) => {
            ctx.stdout.clear();
            ctx.note(format!("error: {e}"));
            EXIT_VIOLATION
        }
        Err(e) => {
            ctx.stdout.clear();
            ctx.note(format!("error: {e}"));
            EXIT_ERROR
        }
    };
    Outcome {
        code,
        stdout: ctx.stdout,
        stderr: ctx.stderr,
    }
}

fn dispatch(verb: Verb, ctx: &mut Ctx) -> Result<i32, ExprError> {
    match verb {
        Verb::Eval {
            expr,
            level,
            variant,
            out,
        } => eval_verb(ctx, &expr, level, variant, &out),
        Verb::Inverse { expr, level, out } => inverse_verb(ctx, &expr, level, &out),
        Verb::Table { level, names, out } => {
            let format = if out.is_json(Format::Text) {
                TableFormat::Json
            } else {
                TableFormat::Text
            };
            let text = render_table(&gen_table(level)?, format, names)?;
            ctx.stdout.push_str(&text);
            if format == TableFormat::Json {
                ctx.stdout.push('\n');
            }
            Ok(EXIT_OK)
        }
        Verb::Check {
            law,
            level,
            mode,
            samples,
            seed,
            timings,
            out,
        } => {
            let seed = ctx.seed(seed)?;
            let mut report = run_check(law, level, mode, samples, seed)?;
            if !timings {
                report = report.without_timing();
            }
            if out.is_json(Format::Json) {
                ctx.emit_json(&serde_json::to_value(&report).expect("report serializes"));
            } else {
                let verdict = if report.holds { "holds" } else { "fails" };
                let _ = writeln!(
                    ctx.stdout,
                    "{} at level {}: {verdict} ({}, {} cases, seed {})",
                    report.law, report.level, report.mode, report.samples, report.seed
                );
                if let Some(w) = &report.witness {
                    let _ = writeln!(ctx.stdout, "witness: {}", join_elements(w, out.pretty));
                }
                if let Some(d) = report.elapsed {
                    let _ = writeln!(ctx.stdout, "elapsed: {} ms", d.as_millis());
                }
            }
            Ok(if report.holds {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Verb::Matrix {
            max_level,
            samples,
            seed,
            out,
        } => {
            let seed = ctx.seed(seed)?;
            matrix_verb(ctx, max_level, samples, seed, &out)
        }
        Verb::FindZeroDivisors {
            level,
            max_terms,
            out,
        } => {
            let certs = find_zero_divisors(level, max_terms)?;
            if out.is_json(Format::Text) {
                let list: Vec<Json> = certs
                    .iter()
                    .map(|c| {
                        json!({
                            "x": c.x.to_text(out.pretty),
                            "y": c.y.to_text(out.pretty),
                            "level": c.level,
                        })
                    })
                    .collect();
                ctx.emit_json(&json!({
                    "level": level,
                    "max_terms": max_terms,
                    "count": certs.len(),
                    "certificates": list,
                }));
            } else {
                for c in &certs {
                    let _ = writeln!(
                        ctx.stdout,
                        "({}) * ({}) = 0",
                        c.x.to_text(out.pretty),
                        c.y.to_text(out.pretty)
                    );
                }
                let _ = writeln!(
                    ctx.stdout,
                    "{} zero-divisor pairs at level {level}",
                    certs.len()
                );
            }
            Ok(EXIT_OK)
        }
        Verb::VerifyCounterexamples { out } => {
            let report = verify_counterexamples()?;
            if out.is_json(Format::Text) {
                ctx.emit_json(&json!({
                    "all_passed": report.all_passed(),
                    "checks": report.checks,
                }));
            } else {
                for c in &report.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        ctx.stdout,
                        "{status} {}: {} [{}]",
                        c.name, c.description, c.computed
                    );
                }
            }
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Verb::Cross {
            dim,
            a,
            b,
            check,
            samples,
            seed,
            out,
        } => {
            let seed = ctx.seed(seed)?;
            cross_verb(ctx, dim, a, b, check, samples, seed, &out)
        }
    }
}

fn join_elements(ops: &[Element], pretty: bool) -> String {
    ops.iter()
        .map(|e| e.to_text(pretty))
        .collect::<Vec<_>>()
        .join(" ; ")
}

/// Parses at the given level, or infers the smallest one and reports it.
fn parse_at(
    ctx: &mut Ctx,
    src: &str,
    level: Option<usize>,
) -> Result<(crate::expr::Expr, usize, bool), ExprError> {
    let (parsed, level, inferred) = match level {
        Some(l) => (parse(src, Some(l))?, l, false),
        None => {
            let l = infer_level(&parse(src, None)?.expr);
            ctx.note(format!("note: level {l} inferred from the symbols used"));
            (parse(src, Some(l))?, l, true)
        }
    };
    if parsed.product_chain && level >= 3 {
        ctx.note(
            "warning: unparenthesized '*' chain evaluated left to right; \
             products do not associate at level >= 3",
        );
    }
    Ok((parsed.expr, level, inferred))
}

fn eval_verb(
    ctx: &mut Ctx,
    src: &str,
    level: Option<usize>,
    variant: ProductVariant,
    out: &Output,
) -> Result<i32, ExprError> {
    let (expr, level, inferred) = parse_at(ctx, src, level)?;
    let value = eval_expr(&expr, level, variant)?;
    if out.is_json(Format::Text) {
        let kind = match value {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
        };
        ctx.emit_json(&json!({
            "expr": expr.to_string(),
            "level": level,
            "level_inferred": inferred,
            "variant": variant,
            "kind": kind,
            "value": value.to_text(out.pretty),
        }));
    } else {
        ctx.stdout.push_str(&value.to_text(out.pretty));
        ctx.stdout.push('\n');
    }
    Ok(EXIT_OK)
}

fn inverse_verb(
    ctx: &mut Ctx,
    src: &str,
    level: Option<usize>,
    out: &Output,
) -> Result<i32, ExprError> {
    let (expr, level, inferred) = parse_at(ctx, src, level)?;
    let x = eval_expr(&expr, level, ProductVariant::Om)?.into_element(level);
    let inv = x.inverse()?;
    if out.is_json(Format::Text) {
        ctx.emit_json(&json!({
            "expr": expr.to_string(),
            "level": level,
            "level_inferred": inferred,
            "value": x.to_text(out.pretty),
            "inverse": inv.to_text(out.pretty),
        }));
    } else {
        ctx.stdout.push_str(&inv.to_text(out.pretty));
        ctx.stdout.push('\n');
    }
    Ok(EXIT_OK)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn matrix_verb(
    ctx: &mut Ctx,
    max_level: usize,
    samples: u64,
    seed: u64,
    out: &Output,
) -> Result<i32, ExprError> {
    let m = property_matrix(max_level, samples, seed)?;
    let ok = m.implications_hold() && m.witnesses_reverify();
    if out.is_json(Format::Text) {
        let implications: Vec<Json> = m
            .implications
            .iter()
            .map(|i| {
                json!({
                    "item": i.item,
                    "lower_level": i.lower_level,
                    "premise": i.premise,
                    "conclusion": i.conclusion,
                    "holds": i.holds(),
                })
            })
            .collect();
        ctx.emit_json(&json!({
            "max_level": max_level,
            "samples": samples,
            "seed": seed,
            "rows": m,
            "implications": implications,
            "implications_hold": m.implications_hold(),
        }));
    } else {
        let s = &mut ctx.stdout;
        let _ = writeln!(
            s,
            "level  composition  associative  commutative  trivial-conj"
        );
        for row in &m.rows {
            let [c, a, k, t] = row.flags().map(yes_no);
            let _ = writeln!(s, "{:>5}  {c:<11}  {a:<11}  {k:<11}  {t}", row.level);
        }
        let _ = writeln!(s, "implications (level n+1 => level n):");
        for i in &m.implications {
            let _ = writeln!(
                s,
                "  {} at n={}: premise {}, conclusion {}: {}",
                i.item,
                i.lower_level,
                yes_no(i.premise),
                yes_no(i.conclusion),
                if i.holds() { "ok" } else { "VIOLATED" }
            );
        }
        let _ = writeln!(s, "witnesses:");
        for row in &m.rows {
            for (name, cell) in [
                ("composition", &row.composition),
                ("associative", &row.associative),
                ("commutative", &row.commutative),
                ("trivial-conj", &row.trivial_conj),
            ] {
                if let Some(w) = &cell.witness {
                    let _ = writeln!(
                        s,
                        "  level {} {name}: {}",
                        row.level,
                        join_elements(w, out.pretty)
                    );
                }
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn parse_vector(src: &str, dim: usize) -> Result<PureVector, ExprError> {
    let comps = src
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    if comps.len() != dim {
        return Err(Error::Dimension(format!(
            "vector {src:?} has {} components, expected {dim}",
            comps.len()
        ))
        .into());
    }
    Ok(PureVector::new(comps)?)
}

#[allow(clippy::too_many_arguments)]
fn cross_verb(
    ctx: &mut Ctx,
    dim: usize,
    a: Option<String>,
    b: Option<String>,
    check: bool,
    samples: u64,
    seed: u64,
    out: &Output,
) -> Result<i32, ExprError> {
    if dim != 3 && dim != 7 {
        return Err(Error::Usage(format!("--dim must be 3 or 7, not {dim}")).into());
    }
    if check {
        if a.is_some() {
            return Err(Error::Usage("--check takes no vectors".into()).into());
        }
        let report = cross_identities_check(dim, samples, seed)?;
        let ok = report.identities_hold() && (dim == 7 || report.jacobi.holds);
        if out.is_json(Format::Text) {
            ctx.emit_json(&serde_json::to_value(&report).expect("report serializes"));
        } else {
            let s = &mut ctx.stdout;
            let _ = writeln!(
                s,
                "cross product identities, dim {dim}, {samples} samples, seed {seed}"
            );
            for (name, holds) in [
                ("orthogonality", report.orthogonality),
                ("anticommutativity", report.anticommutativity),
                ("bilinearity", report.bilinearity),
                ("lagrange", report.lagrange),
                ("decomposition", report.decomposition),
                ("jacobi", report.jacobi.holds),
            ] {
                let _ = writeln!(s, "  {name:<18} {}", if holds { "holds" } else { "fails" });
            }
            if let Some([x, y, z]) = &report.jacobi.witness {
                let _ = writeln!(s, "  jacobi witness: ({x}) ({y}) ({z})");
            }
        }
        return Ok(if ok { EXIT_OK } else { EXIT_VIOLATION });
    }
    let (Some(a), Some(b)) = (a, b) else {
        return Err(Error::Usage("cross needs two vectors, or --check".into()).into());
    };
    let a = parse_vector(&a, dim)?;
    let b = parse_vector(&b, dim)?;
    let c = cross(&a, &b)?;
    let d = a.dot(&b)?;
    if out.is_json(Format::Text) {
        ctx.emit_json(&json!({
            "dim": dim,
            "a": a,
            "b": b,
            "cross": c,
            "dot": d.to_string(),
        }));
    } else {
        let _ = writeln!(ctx.stdout, "{c}");
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cayley(args: &[&str]) -> Outcome {
        run(std::iter::once("cayley").chain(args.iter().copied()), None)
    }

    #[test]
    fn eval_text_and_json() {
        let o = cayley(&["eval", "--level", "2", "i*j"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "e3\n"));
        let o = cayley(&["eval", "--level", "3", "--pretty", "(l*I)*J"]);
        assert_eq!(o.stdout, "-K\n");
        let o = cayley(&["eval", "--level", "4", "--json", "norm((e3+e10)*(e6-e15))"]);
        let v: Json = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["value"], "0");
        assert_eq!(v["kind"], "scalar");
        assert_eq!(v["expr"], "norm((e3 + e10)*(e6 - e15))");
    }

    #[test]
    fn eval_reports_inferred_level() {
        let o = cayley(&["eval", "e3 + e10"]);
        assert_eq!(o.code, 0);
        assert!(o.stderr.contains("level 4 inferred"));
        let o = cayley(&["eval", "--json", "i*j"]);
        let v: Json = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(
            (v["level"].as_u64(), v["level_inferred"].as_bool()),
            (Some(2), Some(true))
        );
    }

    #[test]
    fn chain_warning_only_from_octonions_up() {
        assert!(cayley(&["eval", "--level", "3", "i*j*l"])
            .stderr
            .contains("warning"));
        assert!(!cayley(&["eval", "--level", "3", "(i*j)*l"])
            .stderr
            .contains("warning"));
        assert!(!cayley(&["eval", "--level", "2", "i*j*k"])
            .stderr
            .contains("warning"));
    }

    #[test]
    fn leading_minus_is_an_expression() {
        let o = cayley(&["eval", "--level", "1", "-i"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "-e1\n"));
    }

    #[test]
    fn errors_exit_two() {
        for args in [
            &["eval", "--level", "2", "i*"][..],
            &["eval", "--level", "2", "e9"],
            &["eval", "--level", "2", "inv(0*i)"],
            &["inverse", "--level", "2", "0"],
            &["table", "--level", "5", "--names"],
            &["table", "--level", "7"],
            &[
                "check",
                "--law",
                "composition",
                "--level",
                "2",
                "--samples",
                "0",
            ],
            &["check", "--law", "moufang", "--level", "2"],
            &["check", "--level", "2"],
            &["find-zero-divisors", "--level", "4", "--max-terms", "3"],
            &["cross", "--dim", "4", "1,0,0,0", "0,1,0,0"],
            &["cross", "--dim", "3", "1,0", "0,1,0"],
            &["cross", "--dim", "3"],
            &["matrix", "--max-level", "0"],
            &["frobnicate"],
            &["table", "--level", "2", "--bogus"],
        ] {
            let o = cayley(args);
            assert_eq!(o.code, 2, "{args:?}");
            assert!(o.stdout.is_empty(), "{args:?}");
            assert!(!o.stderr.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn division_by_zero_message() {
        let o = cayley(&["eval", "--level", "2", "inv(i - i)"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("division by zero"));
    }

    #[test]
    fn check_exit_codes() {
        let holds = cayley(&[
            "check",
            "--law",
            "commutative",
            "--level",
            "1",
            "--samples",
            "50",
        ]);
        assert_eq!(holds.code, 0);
        let fails = cayley(&[
            "check",
            "--law",
            "commutative",
            "--level",
            "2",
            "--mode",
            "exhaustive",
        ]);
        assert_eq!(fails.code, 1);
        let v: Json = serde_json::from_str(&fails.stdout).unwrap();
        assert_eq!(v["holds"], false);
        assert_eq!(v["elapsed_ms"], Json::Null);
        let timed = cayley(&[
            "check",
            "--law",
            "commutative",
            "--level",
            "1",
            "--timings",
            "--samples",
            "5",
        ]);
        let v: Json = serde_json::from_str(&timed.stdout).unwrap();
        assert!(v["elapsed_ms"].is_u64());
    }

    #[test]
    fn seed_from_environment() {
        let args = [
            "cayley",
            "check",
            "--law",
            "composition",
            "--level",
            "4",
            "--samples",
            "300",
        ];
        let env = run(args, Some("7".into()));
        let flag = run(args.iter().copied().chain(["--seed", "7"]), None);
        assert_eq!(env, flag);
        let bad = run(args, Some("seven".into()));
        assert_eq!(bad.code, 2);
    }

    #[test]
    fn table_text_and_json() {
        let o = cayley(&["table", "--level", "2", "--names"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains(" i | -1  k -j"));
        let o = cayley(&["table", "--level", "1", "--json"]);
        let v: Json = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["entries"][1][1], json!({"sign": "-", "index": 0}));
    }

    #[test]
    fn inverse_verb_values() {
        let o = cayley(&["inverse", "--level", "4", "e3 + e10"]);
        assert_eq!(o.stdout, "-1/2*e3 - 1/2*e10\n");
        let o = cayley(&["inverse", "--level", "0", "1"]);
        assert_eq!(o.stdout, "e0\n");
    }

    #[test]
    fn cross_verb_values() {
        let o = cayley(&["cross", "--dim", "3", "1,0,0", "0,1,0"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "0,0,1\n"));
        let o = cayley(&["cross", "--dim", "3", "--json", "1/2,-1,0", "0,0,2"]);
        let v: Json = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["cross"], "-2,-1,0");
        assert_eq!(v["dot"], "0");
        let o = cayley(&["cross", "--dim", "7", "--check", "--samples", "40"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("jacobi             fails"));
    }

    #[test]
    fn zero_divisors_and_counterexamples() {
        let o = cayley(&["find-zero-divisors", "--level", "3", "--json"]);
        let v: Json = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["count"], 0);
        let o = cayley(&["verify-counterexamples"]);
        assert_eq!(o.code, 0);
        assert_eq!(
            o.stdout.lines().filter(|l| l.starts_with("PASS")).count(),
            6
        );
    }

    #[test]
    fn help_goes_to_stdout() {
        let o = cayley(&["--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("find-zero-divisors"));
    }
}
