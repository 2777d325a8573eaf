//! Verb definitions and dispatch.

use std::fmt::Display;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use holopow::algebra::text::render_polynomial;
use holopow::algebra::{parse_rational_function, parse_scalar, GaussianRational, Rational};
use holopow::numeric::{cube_density, parse_grid, CubeDensityConfig};
use holopow::power::{build_q, degree_bound, power_operator_with, PowerOptions, SecondOrderSeed};
use holopow::stats::{beta_density_ode, cube_density_ode, irwin_hall_density, BetaParams, DensityODE};
use holopow::verify::verify_paper;
use holopow::weyl::{indicial, operator_from_text, operator_to_text, operator_to_value, DiffOperator, Point};

#[derive(Parser, Debug)]
#[command(name = "holopow", version, about = "Differential equations for powers of holonomic functions and densities of sums")]
pub struct Cli {
    /// Machine-readable output; errors go to stderr as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Operator annihilating f^n for f'' = a1 f' + a0 f.
    PowerOde {
        #[arg(long, allow_hyphen_values = true)]
        a0: String,
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        #[arg(long)]
        n: usize,
        /// Also print the matrix Q(x).
        #[arg(long)]
        show_q: bool,
    },
    /// Image of an operator under x -> i Dx, Dx -> i x.
    Fourier {
        /// Operator text, e.g. "(x^2)*Dx^2 + (1)".
        #[arg(long, allow_hyphen_values = true)]
        op: String,
    },
    /// Indicial polynomial and exponents at a point.
    Exponents {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// A scalar or "inf".
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        at: String,
    },
    /// Upper bound on the coefficient degrees of the power operator.
    DegreeBound {
        #[arg(long, allow_hyphen_values = true)]
        a0: String,
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        #[arg(long)]
        n: usize,
    },
    /// Density equation of a sum of n Beta(a, b) variables.
    BetaOde {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: usize,
    },
    /// Density of a sum of n uniforms, piece by piece.
    IrwinHall {
        #[arg(long)]
        n: usize,
    },
    /// Density equation of a sum of n cubed standard normals.
    CubeOde {
        #[arg(long)]
        n: usize,
    },
    /// Numeric density of a sum of n cubed standard normals on a grid (CSV,
    /// or JSON with --json).
    CubeDensity {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        x0: f64,
        /// a:b:step
        #[arg(long, default_value = "0.5:4:0.1", allow_hyphen_values = true)]
        grid: String,
        /// Cut point of the inversion integral.
        #[arg(long = "T")]
        t: Option<f64>,
        /// Number of integrations by parts at the cut.
        #[arg(long)]
        m: Option<usize>,
        /// Add a Monte Carlo estimate from this many samples.
        #[arg(long)]
        mc_check: Option<usize>,
    },
    /// Compare the engine against the printed fixtures.
    VerifyPaper {
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
}

fn fail<E: Display>(kind: &'static str) -> impl Fn(E) -> Failure {
    move |e| Failure {
        kind,
        message: e.to_string(),
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure {
        kind: "io",
        message: e.to_string(),
    }
}

fn seed(a0: &str, a1: &str) -> Result<SecondOrderSeed, Failure> {
    let p = |s: &str| parse_rational_function(s).map_err(fail("parse"));
    Ok(SecondOrderSeed::new(p(a0)?, p(a1)?))
}

fn real_rational(name: &str, s: &str) -> Result<Rational, Failure> {
    let v: GaussianRational = parse_scalar(s).map_err(fail("parse"))?;
    if !v.is_real() {
        return Err(Failure {
            kind: "domain",
            message: format!("{name} must be real, got {v}"),
        });
    }
    Ok(v.re)
}

fn write_operator(out: &mut dyn Write, json: bool, op: &DiffOperator) -> Result<(), Failure> {
    if json {
        let v = operator_to_value(op).map_err(fail("weyl"))?;
        writeln!(out, "{v}").map_err(io)
    } else {
        writeln!(out, "{}", operator_to_text(op)).map_err(io)
    }
}

fn write_density_ode(out: &mut dyn Write, json: bool, ode: &DensityODE) -> Result<(), Failure> {
    let op = DiffOperator::from_weyl(&ode.operator).map_err(fail("weyl"))?;
    if !json {
        writeln!(out, "order {}", ode.order()).map_err(io)?;
    }
    write_operator(out, json, &op)
}

fn complex_value(z: num_complex::Complex64) -> Value {
    json!([z.re, z.im])
}

/// Executes one verb; the returned code is the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let json = cli.json;
    let power = PowerOptions::from_env().map_err(fail("power"))?;
    match cli.verb {
        Verb::PowerOde { a0, a1, n, show_q } => {
            let s = seed(&a0, &a1)?;
            let p = power_operator_with(&s, n, &power).map_err(fail("power"))?;
            if show_q && !json {
                write!(out, "{}", build_q(&s, n)).map_err(io)?;
            }
            write_operator(out, json, &p.operator)?;
        }
        Verb::Fourier { op } => {
            let op = operator_from_text(&op).map_err(fail("parse"))?;
            let w = op.to_weyl().fourier().canonical();
            write_operator(out, json, &DiffOperator::from_weyl(&w).map_err(fail("weyl"))?)?;
        }
        Verb::Exponents { op, at } => {
            let op = operator_from_text(&op).map_err(fail("parse"))?;
            let point = if at.trim() == "inf" {
                Point::Infinity
            } else {
                Point::Finite(parse_scalar(&at).map_err(fail("parse"))?)
            };
            let res = indicial(&op, point).map_err(fail("weyl"))?;
            let poly = res.poly.as_ref().map(|p| render_polynomial(p, "l"));
            let exact: Option<Vec<String>> = res.exponents_exact.as_ref().map(|v| v.iter().map(|e| e.to_string()).collect());
            if json {
                let v = json!({
                    "point": res.point.to_string(),
                    "regular": res.regular,
                    "poly": poly,
                    "exponents_exact": exact,
                    "exponents_numeric": res.exponents_numeric.iter().map(|z| complex_value(*z)).collect::<Vec<_>>(),
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "point {}", res.point).map_err(io)?;
                writeln!(out, "regular {}", res.regular).map_err(io)?;
                if let Some(p) = poly {
                    writeln!(out, "indicial {p}").map_err(io)?;
                }
                match exact {
                    Some(v) => writeln!(out, "exponents {}", v.join(", ")).map_err(io)?,
                    None => {
                        let v: Vec<String> = res.exponents_numeric.iter().map(|z| format!("{z:.12}")).collect();
                        writeln!(out, "exponents {}", v.join(", ")).map_err(io)?;
                    }
                }
            }
        }
        Verb::DegreeBound { a0, a1, n } => {
            let b = degree_bound(&seed(&a0, &a1)?, n).map_err(fail("power"))?;
            if json {
                writeln!(out, "{}", json!({ "n": n, "bound": b })).map_err(io)?;
            } else {
                writeln!(out, "{b}").map_err(io)?;
            }
        }
        Verb::BetaOde { a, b, n } => {
            let params = BetaParams::new(real_rational("a", &a)?, real_rational("b", &b)?, n).map_err(fail("stats"))?;
            let ode = beta_density_ode(&params, &power).map_err(fail("stats"))?;
            write_density_ode(out, json, &ode)?;
        }
        Verb::IrwinHall { n } => {
            let d = irwin_hall_density(n).map_err(fail("stats"))?;
            if json {
                writeln!(out, "{}", d.to_json()).map_err(io)?;
            } else {
                let c: Vec<String> = d.c.iter().map(|c| c.to_string()).collect();
                writeln!(out, "c = {}", c.join(", ")).map_err(io)?;
                for (k, p) in d.pieces().iter().enumerate() {
                    writeln!(out, "[{k}, {}]: {}", k + 1, render_polynomial(p, "x")).map_err(io)?;
                }
            }
        }
        Verb::CubeOde { n } => {
            let ode = cube_density_ode(n, &power).map_err(fail("stats"))?;
            write_density_ode(out, json, &ode)?;
        }
        Verb::CubeDensity { n, x0, grid, t, m, mc_check } => {
            let grid = parse_grid(&grid).map_err(fail("numeric"))?;
            let mut cfg = CubeDensityConfig::new(n, x0);
            cfg.t = t;
            cfg.m = m;
            cfg.mc_samples = mc_check;
            let (table, _) = cube_density(&cfg, &grid, &power).map_err(fail("numeric"))?;
            if json {
                writeln!(out, "{}", table.to_json()).map_err(io)?;
            } else {
                write!(out, "{}", table.to_csv()).map_err(io)?;
            }
        }
        Verb::VerifyPaper { only } => {
            let recs = verify_paper(only.as_deref(), &power).map_err(fail("stats"))?;
            for r in &recs {
                if json {
                    writeln!(out, "{}", serde_json::to_string(r).expect("record serializes")).map_err(io)?;
                } else {
                    let status = if r.passed { "pass" } else { "FAIL" };
                    write!(out, "{:<20} {status} {:>10.1} ms", r.name, r.elapsed_ms).map_err(io)?;
                    if !r.passed {
                        write!(out, "  {}", r.detail).map_err(io)?;
                    }
                    writeln!(out).map_err(io)?;
                }
            }
            if recs.iter().any(|r| !r.passed) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
