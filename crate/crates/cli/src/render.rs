use std::fmt::Write;

use higgs_core::PoincareSeries;
use serde::Serialize;

use crate::report::{BettiReport, StabilizeReport, StrataReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn coeff_or_blank(s: Option<&PoincareSeries>, i: usize) -> String {
    s.and_then(|s| s.coeff(i).ok())
        .map(|c| c.to_string())
        .unwrap_or_default()
}

fn known_len(s: &PoincareSeries) -> usize {
    match s.exact_through() {
        Some(n) => n + 1,
        None => s.coeffs().len(),
    }
}

pub fn betti(r: &BettiReport, format: Format) -> String {
    if format == Format::Json {
        return json(r);
    }
    let columns: Vec<(&str, &PoincareSeries)> = [("ring", r.ring.as_ref()), ("morse", r.morse.as_ref())]
        .into_iter()
        .filter_map(|(name, s)| s.map(|s| (name, s)))
        .collect();
    let len = columns.iter().map(|(_, s)| known_len(s)).max().unwrap_or(0);
    let mut out = String::new();
    match format {
        Format::Csv => {
            let names: Vec<_> = match columns.as_slice() {
                [_] => vec!["coefficient"],
                cols => cols.iter().map(|c| c.0).collect(),
            };
            writeln!(out, "degree,{}", names.join(",")).unwrap();
            for i in 0..len {
                let cells: Vec<_> = columns.iter().map(|(_, s)| coeff_or_blank(Some(s), i)).collect();
                writeln!(out, "{i},{}", cells.join(",")).unwrap();
            }
        }
        Format::Table => {
            writeln!(out, "g = {}, n = {}, d = {}", r.g, r.n, r.d).unwrap();
            for (name, s) in &columns {
                writeln!(out, "{name:<6} P_t = {s}").unwrap();
            }
            write!(out, "\n{:>6}", "degree").unwrap();
            for (name, _) in &columns {
                write!(out, " {name:>12}").unwrap();
            }
            out.push('\n');
            for i in 0..len {
                write!(out, "{i:>6}").unwrap();
                for (_, s) in &columns {
                    write!(out, " {:>12}", coeff_or_blank(Some(s), i)).unwrap();
                }
                out.push('\n');
            }
            if let Some(m) = r.matches {
                writeln!(out, "{}", if m { "MATCH" } else { "MISMATCH" }).unwrap();
            }
        }
        Format::Json => unreachable!(),
    }
    out
}

fn fmt_pairs(v: &[(impl std::fmt::Display, impl std::fmt::Display)]) -> String {
    let inner: Vec<_> = v.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("[{}]", inner.join(","))
}

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn strata(r: &StrataReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => return json(r),
        Format::Csv => {
            writeln!(out, "type,polygon,chi_bound,exact_codim,bundle_codim").unwrap();
            for row in &r.rows {
                let field = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "\"{}\",\"{}\",{},{},{}",
                    fmt_pairs(&row.hn_type),
                    fmt_pairs(&row.polygon),
                    field(row.chi_bound),
                    field(row.exact_codim),
                    field(row.bundle_codim)
                )
                .unwrap();
            }
        }
        Format::Table => {
            writeln!(out, "g = {}, n = {}, r = {}, d = {}", r.g, r.n, r.r, r.d).unwrap();
            writeln!(
                out,
                "{:<16} {:<24} {:>9} {:>11} {:>12}",
                "type", "polygon", "chi_bound", "exact_codim", "bundle_codim"
            )
            .unwrap();
            for row in &r.rows {
                writeln!(
                    out,
                    "{:<16} {:<24} {:>9} {:>11} {:>12}",
                    fmt_pairs(&row.hn_type),
                    fmt_pairs(&row.polygon),
                    opt(row.chi_bound),
                    opt(row.exact_codim),
                    opt(row.bundle_codim)
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn stabilize(r: &StabilizeReport, format: Format) -> String {
    let mut out = String::new();
    let degrees = r.through_degree as usize + 1;
    match format {
        Format::Json => return json(r),
        Format::Csv => {
            let header: Vec<_> = (0..degrees).map(|i| format!("b{i}")).collect();
            writeln!(out, "n,{}", header.join(",")).unwrap();
            for (n, row) in r.rows.iter().enumerate() {
                writeln!(out, "{n},{}", row.join(",")).unwrap();
            }
            writeln!(out, "BG,{}", r.classifying.join(",")).unwrap();
        }
        Format::Table => {
            writeln!(out, "g = {}, d = {}, degrees 0..={}", r.g, r.d, r.through_degree).unwrap();
            write!(out, "{:>6}", "n").unwrap();
            for i in 0..degrees {
                write!(out, " {:>8}", format!("b{i}")).unwrap();
            }
            out.push('\n');
            let line = |out: &mut String, label: &str, row: &[String]| {
                write!(out, "{label:>6}").unwrap();
                for c in row {
                    write!(out, " {c:>8}").unwrap();
                }
                out.push('\n');
            };
            for (n, row) in r.rows.iter().enumerate() {
                line(&mut out, &n.to_string(), row);
            }
            line(&mut out, "BG", &r.classifying);
            let flags: Vec<String> = r
                .stabilized_from
                .iter()
                .map(|s| s.map(|n| format!("n>={n}")).unwrap_or_else(|| "-".into()))
                .collect();
            line(&mut out, "stable", &flags);
            writeln!(out, "{}", if r.monotone { "MONOTONE" } else { "NOT MONOTONE" }).unwrap();
        }
    }
    out
}
