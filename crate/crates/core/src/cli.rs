//! Command-line front end. The `superjordan` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 on success, 1 on domain errors (diagnostic on stderr),
//! 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::balgebra::{Element, Monomial};
use crate::error::{Error, Result};
use crate::expr::{self, parse_element};
use crate::field::FieldSpec;
use crate::hopf::{self, braiding, coproduct, counit, nichols_reduce, primitive_space, project_l};
use crate::jordan::{decompose_super, eta, eta_inv, nabla, JordanElement};
use crate::maps::{apply_aut, compose_aut, exp_derivation, SuperAut};
use crate::poly::Poly;
use crate::serial::{
    to_json, AutomorphismRecord, BasisRecord, DecompositionRecord, ElementRecord, LElementRecord, MonomialRecord,
    ScalarRecord, TensorRecord, VerdictRecord,
};
use crate::structure::{
    brute_annihilator, center_basis, classify_zero_divisor, default_bound, is_regular_homogeneous, notprime_probe,
    semiprime_probe, semiprime_witness, supercenter_basis, superprime_probe, superprime_witness, ProbeReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    FieldSpec::from_label(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "superjordan", version, about = "Exact arithmetic in the super Jordan plane")]
pub struct CliConfig {
    /// Coefficient field: `q` or `fp:<odd prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: FieldSpec,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Degree bound for solvers and searches.
    #[arg(long, global = true, default_value_t = 8)]
    pub bound: u32,
    /// Restrict solvers to a single degree.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct AutArgs {
    /// Scalar `mu`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub mu: String,
    /// Polynomial `s(z)`, e.g. "3*z + 2".
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub s: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an expression in normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Multiply expressions left to right; put `--` before a leading negative expression.
    Mul {
        #[arg(required = true, num_args = 1..)]
        exprs: Vec<String>,
    },
    /// `uv - vu`
    Commutator {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Split as `p + q*xy + r*x + s*y` with components in J.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply eta (or its inverse) to an element of J.
    Eta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Apply nabla to an element of J.
    Nabla {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Basis of the center by degree.
    Center,
    /// Basis of the supercenter by degree.
    Supercenter,
    /// Zero-divisor verdict for a parity-homogeneous element.
    Zerodiv {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also run the brute-force annihilator search up to `--bound`.
        #[arg(long)]
        check: bool,
    },
    /// Whether a parity-homogeneous element is regular.
    Regular {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Witness monomial `m` with `f m g != 0`, or a randomized probe.
    Superprime {
        #[arg(allow_hyphen_values = true, requires = "g")]
        f: Option<String>,
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
        /// Search `f h f != 0` over even `h` instead.
        #[arg(long)]
        semiprime: bool,
        /// Check `xy h (z - xy) = 0` for all even `h` up to `--bound`.
        #[arg(long)]
        notprime: bool,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Degree bound for the random inputs of a probe.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
    },
    /// Apply `sigma(s, mu)`.
    ApplyAut {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        aut: AutArgs,
    },
    /// Compose `sigma(s, mu) ∘ sigma(s2, mu2)`.
    ComposeAut {
        #[command(flatten)]
        aut: AutArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu2: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s2: String,
    },
    /// Apply `exp(s c)`; rational field only.
    ExpDer {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        s: String,
    },
    /// `c(u (x) v)` for graded `u`.
    Braiding {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// The braided coproduct.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The counit.
    Counit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Basis of the primitive elements by degree.
    Primitives,
    /// Reduce modulo `<y^(2p), z^p>`; prime field only.
    Nichols {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Project to `L = k[eta_L]`.
    ProjectL {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Whether `sigma(s, mu)` commutes with the coproduct up to `--bound`.
    HopfAut {
        #[command(flatten)]
        aut: AutArgs,
    },
}

/// Parse `argv` (including the program name), execute, and write results.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match execute(&config) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

struct Ctx<'a> {
    config: &'a CliConfig,
}

impl Ctx<'_> {
    fn spec(&self) -> FieldSpec {
        self.config.field
    }

    fn element(&self, text: &str) -> Result<Element> {
        Ok(parse_element(text, self.spec())?)
    }

    fn jordan(&self, text: &str) -> Result<JordanElement> {
        JordanElement::new(self.element(text)?)
    }

    fn poly(&self, text: &str) -> Result<Poly> {
        self.element(text)?.to_poly_z()
    }

    fn aut(&self, mu: &str, s: &str) -> Result<SuperAut> {
        SuperAut::new(self.spec().parse_scalar(mu)?, self.poly(s)?)
    }

    fn json(&self) -> bool {
        self.config.format == Format::Json
    }

    fn emit_element(&self, u: &Element) -> String {
        if self.json() {
            to_json(&ElementRecord::from_element(u))
        } else {
            expr::print(u)
        }
    }

    fn emit_bool(&self, b: bool) -> String {
        #[derive(Serialize)]
        struct R {
            result: bool,
        }
        if self.json() {
            to_json(&R { result: b })
        } else {
            b.to_string()
        }
    }

    fn emit_monomial(&self, m: &Monomial) -> String {
        if self.json() {
            to_json(&MonomialRecord::from_monomial(m))
        } else {
            m.to_string()
        }
    }

    fn degrees(&self, start: u32) -> Vec<u32> {
        match self.config.degree {
            Some(d) => vec![d],
            None => (start..=self.config.bound).collect(),
        }
    }

    /// One basis per degree: a single degree prints one element per line,
    /// several degrees print `n: a, b` lines.
    fn emit_bases(&self, start: u32, solve: impl Fn(u32) -> Vec<Element>) -> String {
        let spec = self.spec();
        let degrees = self.degrees(start);
        let bases: Vec<(u32, Vec<Element>)> = degrees.iter().map(|&n| (n, solve(n))).collect();
        if self.json() {
            let records: Vec<BasisRecord> = bases
                .iter()
                .map(|(n, b)| BasisRecord {
                    field: spec.label(),
                    degree: *n,
                    basis: b.iter().map(ElementRecord::from_element).collect(),
                })
                .collect();
            return if self.config.degree.is_some() {
                to_json(&records[0])
            } else {
                to_json(&records)
            };
        }
        let show = |b: &[Element]| -> Vec<String> { b.iter().map(expr::print).collect() };
        if self.config.degree.is_some() {
            let lines = show(&bases[0].1);
            if lines.is_empty() {
                "(none)".to_string()
            } else {
                lines.join("\n")
            }
        } else {
            bases
                .iter()
                .map(|(n, b)| {
                    let items = show(b);
                    format!(
                        "{n}: {}",
                        if items.is_empty() {
                            "(none)".to_string()
                        } else {
                            items.join(", ")
                        }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    }

    fn emit_probe(&self, name: &str, report: &ProbeReport) -> Result<String> {
        #[derive(Serialize)]
        struct R {
            samples: usize,
            failures: Vec<(ElementRecord, ElementRecord)>,
        }
        if !report.passed() {
            let (f, g) = &report.failures[0];
            return Err(Error::ProbeFailed(format!(
                "{name}: {} of {} samples without a witness, first ({f}, {g})",
                report.failures.len(),
                report.samples
            )));
        }
        Ok(if self.json() {
            to_json(&R {
                samples: report.samples,
                failures: Vec::new(),
            })
        } else {
            format!("{name} probe: {} samples, all witnessed", report.samples)
        })
    }
}

fn execute(config: &CliConfig) -> Result<String> {
    let ctx = Ctx { config };
    let spec = ctx.spec();
    match &config.command {
        Command::Normalize { expr } => Ok(ctx.emit_element(&ctx.element(expr)?)),
        Command::Mul { exprs } => {
            let mut acc = Element::one(spec);
            for e in exprs {
                acc = &acc * &ctx.element(e)?;
            }
            Ok(ctx.emit_element(&acc))
        }
        Command::Commutator { u, v } => Ok(ctx.emit_element(&ctx.element(u)?.commutator(&ctx.element(v)?))),
        Command::Decompose { expr } => {
            let d = decompose_super(&ctx.element(expr)?);
            Ok(if ctx.json() {
                to_json(&DecompositionRecord::from_decomposition(&d))
            } else {
                format!("p = {}\nq = {}\nr = {}\ns = {}", d.p, d.q, d.r, d.s)
            })
        }
        Command::Eta { expr, inverse } => {
            let f = ctx.jordan(expr)?;
            let image = if *inverse { eta_inv(&f) } else { eta(&f) };
            Ok(ctx.emit_element(image.as_element()))
        }
        Command::Nabla { expr } => Ok(ctx.emit_element(nabla(&ctx.jordan(expr)?).as_element())),
        Command::Center => Ok(ctx.emit_bases(0, |n| center_basis(n, spec))),
        Command::Supercenter => Ok(ctx.emit_bases(0, |n| supercenter_basis(n, spec))),
        Command::Zerodiv { expr, check } => {
            let f = ctx.element(expr)?;
            let verdict = classify_zero_divisor(&f)?;
            let brute = check.then(|| brute_annihilator(&f, config.bound.max(default_bound(&f))));
            if ctx.json() {
                return Ok(to_json(&VerdictRecord::from_verdict(&verdict)));
            }
            let mut text = match &verdict.witness {
                Some(w) => format!("zero divisor ({}), witness: {}", verdict.reason, expr::print(w)),
                None => "regular".to_string(),
            };
            if let Some(b) = brute {
                let shown = b.as_ref().map_or("none".to_string(), expr::print);
                text.push_str(&format!("\nbrute-force annihilator: {shown}"));
            }
            Ok(text)
        }
        Command::Regular { expr } => Ok(ctx.emit_bool(is_regular_homogeneous(&ctx.element(expr)?)?)),
        Command::Superprime {
            f,
            g,
            semiprime,
            notprime,
            samples,
            max_degree,
        } => {
            if *notprime {
                return Ok(ctx.emit_bool(notprime_probe(config.bound, spec)));
            }
            if *semiprime {
                return match f {
                    Some(f) => Ok(ctx.emit_monomial(&semiprime_witness(&ctx.element(f)?, config.bound)?)),
                    None => ctx.emit_probe(
                        "semiprime",
                        &semiprime_probe(spec, *samples, *max_degree, config.bound, config.seed),
                    ),
                };
            }
            match (f, g) {
                (Some(f), Some(g)) => {
                    Ok(ctx.emit_monomial(&superprime_witness(&ctx.element(f)?, &ctx.element(g)?, config.bound)?))
                }
                (None, None) => ctx.emit_probe(
                    "superprime",
                    &superprime_probe(spec, *samples, *max_degree, config.bound, config.seed),
                ),
                _ => Err(Error::ProbeFailed("superprime needs both F and G, or neither".into())),
            }
        }
        Command::ApplyAut { expr, aut } => {
            let sigma = ctx.aut(&aut.mu, &aut.s)?;
            Ok(ctx.emit_element(&apply_aut(&sigma, &ctx.element(expr)?)))
        }
        Command::ComposeAut { aut, mu2, s2 } => {
            let sigma = compose_aut(&ctx.aut(&aut.mu, &aut.s)?, &ctx.aut(mu2, s2)?)?;
            Ok(if ctx.json() {
                to_json(&AutomorphismRecord::from_aut(&sigma))
            } else {
                sigma.to_string()
            })
        }
        Command::ExpDer { expr, s } => {
            if !spec.is_rational() {
                return Err(Error::RequiresCharZero);
            }
            Ok(ctx.emit_element(&exp_derivation(&ctx.poly(s)?, &ctx.element(expr)?)?))
        }
        Command::Braiding { u, v } => {
            let t = braiding(&ctx.element(u)?, &ctx.element(v)?)?;
            Ok(if ctx.json() {
                to_json(&TensorRecord::from_tensor(&t))
            } else {
                t.to_string()
            })
        }
        Command::Coproduct { expr } => {
            let t = coproduct(&ctx.element(expr)?);
            Ok(if ctx.json() {
                to_json(&TensorRecord::from_tensor(&t))
            } else {
                t.to_string()
            })
        }
        Command::Counit { expr } => {
            let c = counit(&ctx.element(expr)?);
            Ok(if ctx.json() {
                to_json(&ScalarRecord {
                    field: spec.label(),
                    value: c.to_string(),
                })
            } else {
                c.to_string()
            })
        }
        Command::Primitives => Ok(ctx.emit_bases(1, |n| primitive_space(n, spec))),
        Command::Nichols { expr } => Ok(ctx.emit_element(&nichols_reduce(&ctx.element(expr)?)?)),
        Command::ProjectL { expr } => {
            let l = project_l(&ctx.element(expr)?);
            Ok(if ctx.json() {
                to_json(&LElementRecord::from_l(&l))
            } else {
                l.to_string()
            })
        }
        Command::HopfAut { aut } => {
            let sigma = ctx.aut(&aut.mu, &aut.s)?;
            Ok(ctx.emit_bool(hopf::is_hopf_automorphism(&sigma, config.bound)))
        }
    }
}
