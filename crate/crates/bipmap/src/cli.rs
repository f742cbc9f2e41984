//! Argument parsing and command dispatch.

use std::collections::BTreeMap;

use bipmap_core::closed::ClosedFormF;
use bipmap_core::coords::CoordData;
use bipmap_core::fit::{enumerate_basis, fit, rooted_target, unrooted_target, Bounds, FitOptions, Target as FitTarget};
use bipmap_core::kernel::{kernel_build, taylor_closed, KPoly, Pole};
use bipmap_core::toprec::toprec_family;
use bipmap_core::tutte::compute_f;
use bipmap_core::unroot::unroot_l;
use bipmap_core::Error;
use clap::{Parser, Subcommand, ValueEnum};

use crate::dto::{CensusTable, KernelDump, KernelTerm, Rat, SeriesDump, Sign, TaylorRow};
use crate::format::{self, Closed, Format};
use crate::par;
use crate::suites::{run_suites, Ctx, SUITES};

#[derive(Parser, Debug)]
#[command(name = "bipmap", version, about = "Generating functions of bipartite maps: census, series, closed forms, kernel data and verification")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    /// Worker threads for the census.
    #[arg(long, global = true, env = par::WORKERS_ENV)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "F")]
    F,
    #[value(name = "L")]
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoordChart {
    /// (t; x; p)
    Tx,
    /// (z; u; p)
    Zu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Toprec,
    Fit,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exhaustive census of transitive permutation pairs on n points.
    Census {
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Allow n = 8 (about 1.6 billion pairs).
        #[arg(long)]
        allow_large: bool,
    },
    /// Coefficients of F_g or L_g from the Tutte recursion.
    Series {
        #[arg(long)]
        g: u32,
        #[arg(long, value_enum, default_value = "F")]
        target: Target,
        #[arg(long = "N", default_value_t = 12)]
        trunc: u32,
        #[arg(long, value_enum, default_value = "tx")]
        chart: CoordChart,
    },
    /// Closed form of F_g or L_g.
    ClosedForm {
        #[arg(long)]
        g: u32,
        #[arg(long, value_enum, default_value = "F")]
        target: Target,
        #[arg(long, value_enum, default_value = "toprec")]
        method: Method,
    },
    /// Kernel of the Tutte equation with p_k = 0 for k > K.
    Kernel {
        #[arg(long = "K", default_value_t = 4)]
        k: u32,
    },
    /// Run verification suites.
    Verify {
        /// `all` or one of census, genus0, kernel, greek, toprec, unroot, fit.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest census size checked against the engine.
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
}

/// Exit status 2 for bad arguments, 1 for anything else that went wrong.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Structural(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Structural(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CensusRange(_) | Error::Invalid(_) | Error::UnknownGreek(_) => Failure::Usage(e.to_string()),
            _ => Failure::Structural(e.to_string()),
        }
    }
}

/// Output text and whether every check passed.
pub fn execute(cli: &Cli) -> Result<(String, bool), Failure> {
    let workers = cli.workers.filter(|&w| w > 0).unwrap_or_else(par::workers);
    let f = cli.format;
    match &cli.command {
        Command::Census { n, allow_large } => {
            let data = par::census(*n, *allow_large, workers)?;
            Ok((format::census(&CensusTable::from_data(&data)?, f), true))
        }
        Command::Series { g, target, trunc, chart } => {
            if *trunc == 0 {
                return Err(Failure::Usage("--N must be positive".into()));
            }
            let fam = compute_f(*g, *trunc);
            let s = match target {
                Target::F => fam.genus(*g).clone(),
                Target::L => fam.unroot(*g)?,
            };
            let (s, name) = match chart {
                CoordChart::Tx => (s, "tx"),
                CoordChart::Zu => (CoordData::new(*trunc)?.to_zu(&s)?, "zu"),
            };
            let t = if *target == Target::F { "F" } else { "L" };
            Ok((format::series(&SeriesDump::new(*g, t, name, &s), f), true))
        }
        Command::ClosedForm { g, target, method } => {
            if *g == 0 {
                return Err(Failure::Usage("closed forms are for g >= 1".into()));
            }
            let c = closed_form(*g, *target, *method)?;
            Ok((format::closed(&c, f), true))
        }
        Command::Kernel { k } => {
            if !(1..=12).contains(k) {
                return Err(Failure::Usage("--K must lie in 1..=12".into()));
            }
            Ok((format::kernel(&kernel_dump(*k)?, f), true))
        }
        Command::Verify { suite, n } => {
            if !(1..=8).contains(n) {
                return Err(Failure::Usage("--n must lie in 1..=8".into()));
            }
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                let names: Vec<&str> = suite.split(',').map(str::trim).collect();
                if let Some(bad) = names.iter().find(|s| !SUITES.contains(s)) {
                    return Err(Failure::Usage(format!("unknown suite `{bad}`; expected all or one of {}", SUITES.join(", "))));
                }
                names
            };
            let mut ctx = Ctx::new(*n, cli.seed, workers);
            let report = run_suites(&names, &mut ctx).map_err(Failure::Usage)?;
            let ok = report.ok();
            Ok((format::report(&report, f), ok))
        }
    }
}

pub fn closed_form(g: u32, target: Target, method: Method) -> Result<Closed, Failure> {
    match (target, method) {
        (Target::F, Method::Toprec) => Ok(Closed::F(ClosedFormF::from_gpoly(g, &toprec_family(g)?[g as usize - 1])?)),
        (Target::L, Method::Toprec) => Ok(Closed::L(unroot_l(g, &toprec_family(g)?[g as usize - 1])?)),
        (Target::F, Method::Fit) => {
            // the full-support fit needs order 12 at genus 1 and 28 at genus 2
            let (n, odd) = match g {
                1 => (12, false),
                2 => (28, true),
                _ => return Err(Failure::Usage("fits are provided for g = 1, 2".into())),
            };
            let basis = enumerate_basis(g, FitTarget::F, Bounds::Homogeneous)?;
            let r = fit(&rooted_target(g, n, None)?, &basis, &FitOptions { odd, fit_order: Some(n), ..FitOptions::default() })?;
            Ok(Closed::F(r.closed_f(g)?))
        }
        (Target::L, Method::Fit) => {
            if g > 2 {
                return Err(Failure::Usage("fits are provided for g = 1, 2".into()));
            }
            let basis = enumerate_basis(g, FitTarget::L, Bounds::Homogeneous)?;
            let r = fit(&unrooted_target(g, 22, None)?, &basis, &FitOptions::default())?;
            Ok(Closed::L(r.closed_l(g)?))
        }
    }
}

fn kernel_terms(p: &KPoly) -> Vec<KernelTerm> {
    p.0.iter().map(|((u, z, mu), q)| KernelTerm { u: *u, z: *z, mu: mu.parts().to_vec(), coeff: Rat(q.clone()) }).collect()
}

pub fn kernel_dump(k: u32) -> Result<KernelDump, Failure> {
    let kd = kernel_build(k)?;
    let mut taylor = Vec::new();
    for (pole, sign) in [(Pole::Plus, Sign::Plus), (Pole::Minus, Sign::Minus)] {
        for a in 0..=4 {
            let (c, l) = taylor_closed(pole, a);
            let greek: BTreeMap<String, Rat> = l.into_iter().map(|(g, q)| (g.to_string(), Rat(q))).collect();
            taylor.push(TaylorRow { pole: sign, a, constant: Rat(c), greek });
        }
    }
    Ok(KernelDump {
        k,
        n_degree: kd.n_degree(),
        antisymmetric: kd.is_antisymmetric(),
        palindromic: kd.n_is_palindromic(),
        two_f0_theta: kernel_terms(&kd.g),
        n: kernel_terms(&kd.n),
        taylor,
    })
}

