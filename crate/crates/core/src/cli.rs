//! The `weylkit` command line.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::dual::dual_presentation;
use crate::expr::{parse, FreeExpression, Format, Render, Tagged};
use crate::localization::{dehomogenize, homogenize, mu, theta, LocalizedElement};
use crate::pbw::{basis_of_degree, centralizer_in_degree, normal_form, AlgebraElement};
use crate::shriek::{degree_dimensions, reduce_expression, ShriekElement, MAX_N};
use crate::verify::{self, GoldenNakayama, SuiteConfig};
use crate::{AlgebraError, AlgebraKind, Generator};

/// Largest `n` accepted for the PBW algebras.
pub const MAX_PBW_N: usize = 64;

const GRAMMAR: &str = "\
Expression grammar:
  expr     := term (('+'|'-') term)*
  term     := factor ('*' factor)* | '-' term
  factor   := atom ('^' NAT)?
  atom     := VAR | RATIONAL | '(' expr ')'
  VAR      := x<i> | d<i> | z      (case-insensitive, 1 <= i <= n)
  RATIONAL := NAT ('/' NAT)?

Multiplication needs an explicit '*'. In B, d_i*x_i - x_i*d_i = z^2 and z is
central; in A the same commutator is 1; C is commutative. B! and C! are the
quadratic duals (z is not allowed in A or C!).

Suites: pbw-laws, center, dual-orthogonality, shriek-dims, frobenius,
nakayama, decomposition, localization, roundtrip.
Golden files are read from $WEYLKIT_GOLDEN_DIR when set.";

#[derive(Parser, Debug)]
#[command(name = "weylkit", version, about = "Exact arithmetic in Weyl algebras and their Koszul duals", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Number of variable pairs.
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,

    /// Algebra: A, B, C, B! or C!.
    #[arg(long, global = true, default_value = "B")]
    algebra: String,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,

    /// Sample count for randomized checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_BUDGET)]
    budget: usize,

    /// Rewrite golden files instead of comparing against them.
    #[arg(long, global = true)]
    bless: bool,

    /// Include elapsed milliseconds in suite reports.
    #[arg(long, global = true)]
    timing: bool,

    /// Highest degree for `dims` on PBW algebras and for `center`.
    #[arg(long, global = true)]
    degree: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Show the parsed free-algebra expression without simplifying.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal form of each expression.
    Nf {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Product of the expressions, left to right.
    Mul {
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Commutator ab - ba.
    Comm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Dimensions of the graded components.
    Dims,
    /// Centralizer of the generators of B in each degree.
    Center,
    /// Relations of the quadratic dual of B or C.
    Dual,
    /// The Nakayama automorphism of B!.
    Nakayama,
    /// Homogenize an element of A (ignores --algebra).
    Homogenize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Set z = 1 in an element of B (ignores --algebra).
    Dehomogenize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// theta(b / z^k) for b homogeneous of degree k in B (ignores --algebra).
    Theta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        k: u32,
    },
    /// mu(a ⊗ z^t) for a in A (ignores --algebra).
    Mu {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_negative_numbers = true)]
        t: i64,
    },
    /// Run a verification suite.
    Verify { suite: String },
}

/// A command failure: the message and the exit code.
struct Failed(String, i32);

impl From<AlgebraError> for Failed {
    fn from(e: AlgebraError) -> Self {
        Failed(format!("error: {e}"), 1)
    }
}

fn usage(msg: impl std::fmt::Display) -> Failed {
    Failed(format!("error: {msg}\n\n{GRAMMAR}"), 2)
}

/// Runs the CLI on `args` (including the program name), writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn cli_main<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}\n{GRAMMAR}\n");
                    2
                }
            };
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(Failed(msg, code)) => {
            let _ = writeln!(err, "{msg}");
            code
        }
    }
}

enum Value {
    Pbw(AlgebraElement),
    Shriek(ShriekElement, AlgebraKind),
}

impl Value {
    fn render(&self, format: Format) -> String {
        match self {
            Value::Pbw(e) => e.render(format),
            Value::Shriek(e, kind) => Tagged { element: e, kind: *kind }.render(format),
        }
    }

    fn multiply(&self, other: &Value) -> Result<Value, Failed> {
        Ok(match (self, other) {
            (Value::Pbw(a), Value::Pbw(b)) => Value::Pbw(a.multiply(b)?),
            (Value::Shriek(a, k), Value::Shriek(b, _)) => Value::Shriek(a.multiply(b)?, *k),
            _ => unreachable!("values of one command share a kind"),
        })
    }

    fn sub(&self, other: &Value) -> Result<Value, Failed> {
        Ok(match (self, other) {
            (Value::Pbw(a), Value::Pbw(b)) => Value::Pbw(a.sub(b)?),
            (Value::Shriek(a, k), Value::Shriek(b, _)) => Value::Shriek(a.sub(b)?, *k),
            _ => unreachable!("values of one command share a kind"),
        })
    }
}

impl Cli {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }

    fn kind(&self) -> Result<AlgebraKind, Failed> {
        let kind: AlgebraKind = self.algebra.parse().map_err(usage)?;
        let max = if kind.is_shriek() { MAX_N } else { MAX_PBW_N };
        if self.n == 0 || self.n > max {
            return Err(usage(format!("--n must be in 1..={max} for {kind}")));
        }
        Ok(kind)
    }

    /// For verbs whose input algebra is fixed: only `--n` is checked.
    fn fixed(&self, kind: AlgebraKind) -> Result<AlgebraKind, Failed> {
        let max = if kind.is_shriek() { MAX_N } else { MAX_PBW_N };
        if self.n == 0 || self.n > max {
            return Err(usage(format!("--n must be in 1..={max} for {kind}")));
        }
        Ok(kind)
    }

    fn require(&self, allowed: &[AlgebraKind], verb: &'static str) -> Result<AlgebraKind, Failed> {
        let kind = self.kind()?;
        if !allowed.contains(&kind) {
            return Err(AlgebraError::UnsupportedKind { kind, op: verb }.into());
        }
        Ok(kind)
    }

    fn parse_free(&self, text: &str, kind: AlgebraKind) -> Result<FreeExpression, Failed> {
        parse(text, self.n, kind).map_err(|e| usage(format!("{text:?}: {e}")))
    }

    fn value(&self, text: &str, kind: AlgebraKind) -> Result<Value, Failed> {
        let expr = self.parse_free(text, kind)?;
        Ok(match kind {
            AlgebraKind::BShriek | AlgebraKind::CShriek => {
                if kind == AlgebraKind::CShriek && expr.terms.iter().any(|t| t.word.contains(&Generator::Z)) {
                    return Err(AlgebraError::IllegalGenerator { kind }.into());
                }
                Value::Shriek(reduce_expression(&expr, self.n)?, kind)
            }
            _ => Value::Pbw(normal_form(&expr, kind, self.n)?),
        })
    }

    fn element(&self, text: &str, kind: AlgebraKind) -> Result<AlgebraElement, Failed> {
        Ok(normal_form(&self.parse_free(text, kind)?, kind, self.n)?)
    }
}

fn fraction_text(e: &LocalizedElement) -> String {
    let num = e.numerator().render(Format::Text);
    match e.z_power() {
        0 => num,
        k => format!("({num})/z^{k}"),
    }
}

fn fraction(e: &LocalizedElement, format: Format) -> String {
    match format {
        Format::Text => fraction_text(e),
        Format::Json => serde_json::to_string(&e.to_json()).expect("plain data serializes"),
    }
}

fn run(cli: &Cli) -> Result<(String, i32), Failed> {
    let format = cli.format();
    let n = cli.n;
    let ok = |s: String| Ok((s, 0));
    match &cli.verb {
        Verb::Parse { expr } => {
            let kind = cli.kind()?;
            let parsed = cli.parse_free(expr, kind)?;
            match format {
                Format::Text => ok(parsed.to_string()),
                Format::Json => {
                    let terms: Vec<_> = parsed
                        .terms
                        .iter()
                        .map(|t| {
                            json!({
                                "coeff": format!("{}/{}", t.coeff.numer(), t.coeff.denom()),
                                "word": t.word.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    ok(json!({"algebra": kind.label(), "n": n, "terms": terms}).to_string())
                }
            }
        }
        Verb::Nf { exprs } => {
            let kind = cli.kind()?;
            let lines = exprs
                .iter()
                .map(|e| Ok(cli.value(e, kind)?.render(format)))
                .collect::<Result<Vec<_>, Failed>>()?;
            ok(lines.join("\n"))
        }
        Verb::Mul { exprs } => {
            let kind = cli.kind()?;
            let mut acc = cli.value(&exprs[0], kind)?;
            for e in &exprs[1..] {
                acc = acc.multiply(&cli.value(e, kind)?)?;
            }
            ok(acc.render(format))
        }
        Verb::Comm { a, b } => {
            let kind = cli.kind()?;
            let (a, b) = (cli.value(a, kind)?, cli.value(b, kind)?);
            ok(a.multiply(&b)?.sub(&b.multiply(&a)?)?.render(format))
        }
        Verb::Dims => {
            let kind = cli.kind()?;
            let dims: Vec<usize> = match kind {
                AlgebraKind::BShriek => degree_dimensions(n),
                AlgebraKind::CShriek => {
                    let mut dims = vec![0; 2 * n + 1];
                    for (j, d) in dims.iter_mut().enumerate() {
                        // z-free words of degree j
                        *d = crate::shriek::shriek_basis(n)
                            .into_iter()
                            .filter(|w| !w.z && w.degree() == j)
                            .count();
                    }
                    dims
                }
                _ => (0..=cli.degree.unwrap_or(8))
                    .map(|d| basis_of_degree(kind, n, d).len())
                    .collect(),
            };
            match format {
                Format::Text => ok(dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")),
                Format::Json => ok(json!(dims).to_string()),
            }
        }
        Verb::Center => {
            cli.fixed(AlgebraKind::B)?;
            let top = cli.degree.unwrap_or(5);
            let mut lines = Vec::new();
            let mut degrees = Vec::new();
            for d in 0..=top {
                let basis = centralizer_in_degree(n, d);
                match format {
                    Format::Text => {
                        let shown: Vec<String> = basis.iter().map(|b| b.render(Format::Text)).collect();
                        lines.push(format!("degree {d}: {}", shown.join(", ")));
                    }
                    Format::Json => degrees.push(json!({
                        "degree": d,
                        "basis": basis.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
                    })),
                }
            }
            match format {
                Format::Text => ok(lines.join("\n")),
                Format::Json => ok(json!(degrees).to_string()),
            }
        }
        Verb::Dual => {
            let kind = cli.require(&[AlgebraKind::B, AlgebraKind::C], "dual")?;
            let p = dual_presentation(kind, n)?;
            match format {
                Format::Text => ok(p.relations().iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")),
                Format::Json => {
                    let relations: Vec<_> = p
                        .relations()
                        .iter()
                        .map(|r| {
                            r.entries()
                                .map(|(&(a, b), c)| {
                                    json!({
                                        "coeff": format!("{}/{}", c.numer(), c.denom()),
                                        "left": a.to_string(),
                                        "right": b.to_string(),
                                    })
                                })
                                .collect::<Vec<_>>()
                        })
                        .collect();
                    ok(json!({"algebra": p.kind().label(), "n": n, "relations": relations}).to_string())
                }
            }
        }
        Verb::Nakayama => {
            cli.fixed(AlgebraKind::BShriek)?;
            let g = GoldenNakayama::compute(n)?;
            match format {
                Format::Text => {
                    let m = crate::shriek::nakayama(n)?;
                    let mut lines: Vec<String> = m
                        .images()
                        .iter()
                        .map(|(g, e)| format!("sigma({g}) = {}", e.render(Format::Text)))
                        .collect();
                    lines.push(format!("k = {}", g.k.as_deref().unwrap_or("none")));
                    ok(lines.join("\n"))
                }
                Format::Json => ok(serde_json::to_string(&g).expect("plain data serializes")),
            }
        }
        Verb::Homogenize { expr } => {
            cli.fixed(AlgebraKind::A)?;
            let (b, k) = homogenize(&cli.element(expr, AlgebraKind::A)?)?;
            match format {
                Format::Text => ok(format!("{} (k = {k})", b.render(Format::Text))),
                Format::Json => ok(json!({"element": b.to_json(), "k": k}).to_string()),
            }
        }
        Verb::Dehomogenize { expr } => {
            cli.fixed(AlgebraKind::B)?;
            ok(dehomogenize(&cli.element(expr, AlgebraKind::B)?)?.render(format))
        }
        Verb::Theta { expr, k } => {
            cli.fixed(AlgebraKind::B)?;
            let e = LocalizedElement::make(cli.element(expr, AlgebraKind::B)?, *k)?;
            ok(theta(&e)?.render(format))
        }
        Verb::Mu { expr, t } => {
            cli.fixed(AlgebraKind::A)?;
            ok(fraction(&mu(&cli.element(expr, AlgebraKind::A)?, *t)?, format))
        }
        Verb::Verify { suite } => {
            let config = SuiteConfig {
                seed: cli.seed,
                budget: cli.budget,
                bless: cli.bless,
                ..SuiteConfig::new(suite, n)
            };
            let mut report = verify::run(&config).map_err(|e| match e {
                AlgebraError::UnknownSuite(_) | AlgebraError::UnsupportedN { .. } => usage(e),
                e => e.into(),
            })?;
            if !cli.timing {
                report = report.without_timing();
            }
            let code = if report.passed() { 0 } else { 1 };
            let text = match format {
                Format::Text => report.to_text().trim_end().to_string(),
                Format::Json => serde_json::to_string(&report).expect("plain data serializes"),
            };
            Ok((text, code))
        }
    }
}
