//! Rendering of command outputs in the four formats.

use bipmap_core::closed::{ClosedFormF, ClosedFormL};
use bipmap_core::rational::fmt_q;
use clap::ValueEnum;
use serde::Serialize;

use crate::dto::{CensusTable, ClosedForm, KernelDump, Report, SeriesDump, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
    Csv,
}

pub fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn mu_str(mu: &[u32]) -> String {
    format!("[{}]", mu.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
}

pub fn census(t: &CensusTable, f: Format) -> String {
    match f {
        Format::Json => json(t),
        Format::Text => {
            let mut s = String::new();
            for r in &t.labelled {
                s += &format!("g={}, mu={}, count={}\n", r.g, mu_str(&r.mu), r.count);
            }
            for r in &t.rooted {
                s += &format!("rooted g={}, k={}, mu={}, count={}\n", r.g, r.k, mu_str(&r.mu), r.count);
            }
            for r in &t.marked {
                s += &format!("marked g={}, mu={}, vertex={}, face={}, edge={}\n", r.g, mu_str(&r.mu), r.vertex, r.face, r.edge);
            }
            s
        }
        Format::Csv => csv_table(&["g", "mu", "count"], t.labelled.iter().map(|r| vec![r.g.to_string(), mu_str(&r.mu), r.count.to_string()])),
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{rlr}\n$g$ & $\\mu$ & $\\ell_g(\\mu)$ \\\\\n\\hline\n");
            for r in &t.labelled {
                s += &format!("{} & $({})$ & {} \\\\\n", r.g, r.mu.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","), r.count);
            }
            s + "\\end{tabular}\n"
        }
    }
}

fn series_mono(order: &str, cat: &str, e: u32, c: u32, mu: &[u32], latex: bool) -> String {
    let mut parts = Vec::new();
    let pw = |v: &str, k: u32| if k == 1 { v.to_string() } else if latex { format!("{v}^{{{k}}}") } else { format!("{v}^{k}") };
    if e > 0 {
        parts.push(pw(order, e));
    }
    if c > 0 {
        parts.push(pw(cat, c));
    }
    let mut i = 0;
    while i < mu.len() {
        let j = mu[i..].iter().take_while(|&&p| p == mu[i]).count();
        parts.push(pw(&if latex { format!("p_{{{}}}", mu[i]) } else { format!("p{}", mu[i]) }, j as u32));
        i += j;
    }
    parts.join(if latex { " " } else { "*" })
}

pub fn series(d: &SeriesDump, f: Format) -> String {
    let (order, cat) = if d.chart == "zu" { ("z", "u") } else { ("t", "x") };
    match f {
        Format::Json => json(d),
        Format::Csv => csv_table(
            &["order", "cat", "mu", "coeff"],
            d.terms.iter().map(|t| vec![t.order.to_string(), t.cat.to_string(), mu_str(&t.mu), fmt_q(&t.coeff.0)]),
        ),
        Format::Text => {
            let mut s = String::new();
            for t in &d.terms {
                let m = series_mono(order, cat, t.order, t.cat, &t.mu, false);
                s += &format!("{}  {}\n", fmt_q(&t.coeff.0), if m.is_empty() { "1".into() } else { m });
            }
            s
        }
        Format::Latex => {
            let mut s = String::new();
            for t in &d.terms {
                let q = &t.coeff.0;
                let neg = q.numer() < &0.into();
                let a = if neg { -q.clone() } else { q.clone() };
                s += if s.is_empty() { if neg { "-" } else { "" } } else if neg { " - " } else { " + " };
                let coeff = if a.denom() == &1.into() { a.numer().to_string() } else { format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()) };
                let m = series_mono(order, cat, t.order, t.cat, &t.mu, true);
                s += &match (m.is_empty(), coeff == "1") {
                    (true, _) => coeff,
                    (false, true) => m,
                    (false, false) => format!("{coeff} {m}"),
                };
            }
            if s.is_empty() {
                s += "0";
            }
            s + &format!(" + O({order}^{{{}}})\n", d.trunc + 1)
        }
    }
}

pub enum Closed {
    F(ClosedFormF),
    L(ClosedFormL),
}

pub fn closed(c: &Closed, f: Format) -> String {
    let dto = match c {
        Closed::F(x) => ClosedForm::from_f(x),
        Closed::L(x) => ClosedForm::from_l(x),
    };
    match f {
        Format::Json => json(&dto),
        Format::Text => match c {
            Closed::F(x) => x.to_text() + "\n",
            Closed::L(x) => x.to_text() + "\n",
        },
        Format::Latex => match c {
            Closed::F(x) => x.to_latex() + "\n",
            Closed::L(x) => x.to_latex() + "\n",
        },
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            for (name, q) in [("log_eta", &dto.log_eta), ("log_zeta", &dto.log_zeta)] {
                if let Some(q) = q {
                    rows.push(vec![name.into(), String::new(), String::new(), String::new(), String::new(), String::new(), String::new(), fmt_q(&q.0)]);
                }
            }
            for t in &dto.terms {
                rows.push(vec![
                    "term".into(),
                    mu_str(&t.alpha),
                    mu_str(&t.beta),
                    t.a.to_string(),
                    t.b.to_string(),
                    t.c.map(|c| c.to_string()).unwrap_or_default(),
                    t.sign.map(|s| if s == crate::dto::Sign::Plus { "+" } else { "-" }.to_string()).unwrap_or_default(),
                    if t.coeff_den == "1" { t.coeff_num.clone() } else { format!("{}/{}", t.coeff_num, t.coeff_den) },
                ]);
            }
            csv_table(&["kind", "alpha", "beta", "a", "b", "c", "sign", "coeff"], rows)
        }
    }
}

pub fn kernel(d: &KernelDump, f: Format) -> String {
    match f {
        Format::Json => json(d),
        Format::Csv => csv_table(
            &["poly", "u", "z", "mu", "coeff"],
            [("2F0+theta", &d.two_f0_theta), ("N", &d.n)]
                .into_iter()
                .flat_map(|(name, ts)| ts.iter().map(move |t| vec![name.to_string(), t.u.to_string(), t.z.to_string(), mu_str(&t.mu), fmt_q(&t.coeff.0)])),
        ),
        Format::Text => {
            let mut s = format!(
                "K = {}\ndeg_u N = {}\nantisymmetric: {}\npalindromic N: {}\n",
                d.k, d.n_degree, d.antisymmetric, d.palindromic
            );
            for r in &d.taylor {
                let greek: Vec<String> = r.greek.iter().map(|(g, q)| format!("{} {}", fmt_q(&q.0), g)).collect();
                let pole = if r.pole == crate::dto::Sign::Plus { "1-uz" } else { "1+uz" };
                s += &format!("[({pole})^{}] 2F0+theta = {} + {}\n", r.a, fmt_q(&r.constant.0), if greek.is_empty() { "0".into() } else { greek.join(" + ") });
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("N(u) = ");
            let mut first = true;
            for t in &d.n {
                let m = series_mono("z", "u", t.z as u32, t.u as u32, &t.mu, true);
                s += &format!("{}\\left({}\\right){}", if first { "" } else { " + " }, fmt_q(&t.coeff.0), if m.is_empty() { String::new() } else { format!(" {m}") });
                first = false;
            }
            s + "\n"
        }
    }
}

pub fn report(r: &Report, f: Format) -> String {
    let tag = |s: Status| match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Deviation => "deviation",
    };
    match f {
        Format::Json => json(r),
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                s += &format!("[{}] {}/{} (criterion {}, {} ms): {}\n", tag(c.status), c.suite, c.name, c.criterion, c.millis, c.detail);
            }
            let failed = r.checks.iter().filter(|c| c.status == Status::Fail).count();
            s + &format!("{} checks, {} failed\n", r.checks.len(), failed)
        }
        Format::Csv => csv_table(
            &["suite", "name", "criterion", "status", "millis", "detail"],
            r.checks.iter().map(|c| vec![c.suite.clone(), c.name.clone(), c.criterion.to_string(), tag(c.status).into(), c.millis.to_string(), c.detail.clone()]),
        ),
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{llrl}\nsuite & check & criterion & status \\\\\n\\hline\n");
            for c in &r.checks {
                s += &format!("{} & \\texttt{{{}}} & {} & {} \\\\\n", c.suite, c.name, c.criterion, tag(c.status));
            }
            s + "\\end{tabular}\n"
        }
    }
}
