//! Command implementations behind the `stackenum` binary. Every command
//! renders to a `String` so output is deterministic and testable in-process.

pub mod verify;

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use stackenum::diagram::count_stacks;
use stackenum::dlupath::count_paths;
use stackenum::gfsolver::stack_gf;
use stackenum::{Result, StackParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Solve the generating-function system.
    Gf,
    /// Backtrack over arc sets.
    BruteStack,
    /// Enumerate DLU paths.
    BrutePath,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Gf => "gf",
            Method::BruteStack => "brute-stack",
            Method::BrutePath => "brute-path",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
}

/// Searches larger than this get a warning before brute-force runs.
const LARGE_SEARCH: u64 = 5_000_000;

/// Rough size of the brute-force search for `s_{m,d}(n)`, if it is large.
pub fn brute_force_warning(m: usize, d: usize, n: usize, method: Method) -> Option<String> {
    let estimate = match method {
        Method::Gf => return None,
        // backtracking visits one node per stack
        Method::BruteStack => stack_gf(m, d, n).ok()?.coeff(n).to_biguint()?,
        Method::BrutePath => BigUint::from((d + 1) * (d + 2) / 2).pow(n as u32),
    };
    (estimate > BigUint::from(LARGE_SEARCH)).then(|| {
        format!(
            "warning: {} search for n = {n} explores on the order of {estimate} candidates",
            method.tag()
        )
    })
}

/// `s_{m,d}(n)` by the chosen method.
pub fn count(m: usize, d: usize, n: usize, method: Method) -> Result<BigUint> {
    let params = StackParams::new(m, d)?;
    Ok(match method {
        Method::Gf => stack_gf(m, d, n)?
            .coeff(n)
            .to_biguint()
            .expect("counts are nonnegative"),
        Method::BruteStack => count_stacks(n, params),
        Method::BrutePath => count_paths(n, d, 0, 0, m)?,
    })
}

/// `s_{m,d}(0..=order)` by the chosen method.
pub fn coefficients(m: usize, d: usize, order: usize, method: Method) -> Result<Vec<BigUint>> {
    match method {
        Method::Gf => {
            StackParams::new(m, d)?;
            Ok(stack_gf(m, d, order)?
                .coeffs()
                .iter()
                .map(|c| c.to_biguint().expect("counts are nonnegative"))
                .collect())
        }
        _ => (0..=order).map(|n| count(m, d, n, method)).collect(),
    }
}

/// Serialized form of one stack series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub m: usize,
    pub d: usize,
    pub order: usize,
    pub method: &'static str,
    pub coefficients: Vec<String>,
}

pub fn series_record(m: usize, d: usize, order: usize, method: Method) -> Result<OutputRecord> {
    let coefficients = coefficients(m, d, order, method)?
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(OutputRecord {
        m,
        d,
        order,
        method: method.tag(),
        coefficients,
    })
}

pub fn render_series(record: &OutputRecord, format: SeriesFormat) -> String {
    match format {
        SeriesFormat::Json => {
            let mut out = serde_json::to_string(record).expect("record is plain data");
            out.push('\n');
            out
        }
        SeriesFormat::Csv => {
            let header: Vec<String> = (0..record.coefficients.len())
                .map(|k| format!("c{k}"))
                .collect();
            format!("{}\n{}\n", header.join(","), record.coefficients.join(","))
        }
    }
}

/// Rows `m = 1..=m_max`, columns `n = 1..=n_max`. Rows are computed in
/// parallel and returned in order.
pub fn table(d: usize, m_max: usize, n_max: usize, method: Method) -> Result<Vec<Vec<BigUint>>> {
    (1..=m_max)
        .into_par_iter()
        .map(|m| coefficients(m, d, n_max, method).map(|mut row| row.split_off(1)))
        .collect()
}

pub fn render_table(d: usize, rows: &[Vec<BigUint>], format: TableFormat) -> String {
    let n_max = rows.first().map_or(0, Vec::len);
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let header: Vec<String> = (1..=n_max).map(|n| n.to_string()).collect();
            writeln!(out, "m,{}", header.join(",")).unwrap();
            for (idx, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{},{}", idx + 1, cells.join(",")).unwrap();
            }
        }
        TableFormat::Markdown => {
            let header: Vec<String> = (1..=n_max).map(|n| n.to_string()).collect();
            writeln!(out, "| n | {} |", header.join(" | ")).unwrap();
            writeln!(out, "|---|{}", "---|".repeat(n_max)).unwrap();
            for (idx, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "| s_{{{},{d}}} | {} |", idx + 1, cells.join(" | ")).unwrap();
            }
        }
    }
    out
}

/// Long-format `m,d,n,count` rows for `n = 1..=n_max`.
pub fn curves(ms: &[usize], ds: &[usize], n_max: usize) -> Result<String> {
    let cells: Vec<(usize, usize)> = ms
        .iter()
        .flat_map(|&m| ds.iter().map(move |&d| (m, d)))
        .collect();
    let series = cells
        .par_iter()
        .map(|&(m, d)| coefficients(m, d, n_max, Method::Gf))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("m,d,n,count\n");
    for (&(m, d), counts) in cells.iter().zip(&series) {
        for (n, c) in counts.iter().enumerate().skip(1) {
            writeln!(out, "{m},{d},{n},{c}").unwrap();
        }
    }
    Ok(out)
}
