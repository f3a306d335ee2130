//! Invariant suites run by `stackenum verify`.

use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};

use stackenum::algebraic::{
    linear_stack_equation, motzkin_oracle, simple_closed_form_residual, simple_stack_equation,
    three_contact_m1_equation,
};
use stackenum::bijection::{eta, eta_inv};
use stackenum::diagram::{count_stacks, enumerate_stacks};
use stackenum::dlupath::{count_paths, enumerate_paths};
use stackenum::gfsolver::{needed_keys, solve, stack_gf};
use stackenum::{Diagram, DluPath, Result, StackParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bijection,
    Gf,
    Algebraic,
    Symmetry,
    All,
}

/// Optional overrides of a suite's default grid.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub d: Option<usize>,
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
}

impl Limits {
    fn grid(&self, default_n: fn(usize) -> usize) -> Vec<(usize, usize)> {
        let ds: Vec<usize> = match self.d {
            Some(d) => vec![d],
            None => vec![1, 2, 3],
        };
        ds.into_iter()
            .map(|d| (d, self.n_max.unwrap_or_else(|| default_n(d))))
            .collect()
    }

    fn m_max(&self) -> usize {
        self.m_max.unwrap_or(3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: String, passed: bool, detail: String) {
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }

    pub fn render(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| format!("{c}\n")).collect();
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }
}

pub fn run(suite: Suite, limits: Limits) -> Result<Report> {
    let mut report = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Bijection {
        bijection(&limits, &mut report)?;
    }
    if all || suite == Suite::Gf {
        gf(&limits, &mut report)?;
    }
    if all || suite == Suite::Algebraic {
        algebraic(&mut report)?;
    }
    if all || suite == Suite::Symmetry {
        symmetry(&limits, &mut report)?;
    }
    Ok(report)
}

/// Outcome of checking all `(m, d)`-stacks on `[n]` against the path side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BijectionTally {
    pub stacks: usize,
    pub mismatches: usize,
}

/// Round trip, forward predicates and image-equals-path-set for one cell.
pub fn check_bijection_cell(n: usize, m: usize, d: usize) -> Result<BijectionTally> {
    let params = StackParams::new(m, d)?;
    let mut tally = BijectionTally::default();
    let mut image = BTreeSet::new();
    let mut failure: Option<stackenum::Error> = None;
    enumerate_stacks(
        n,
        params,
        Some(&mut |s: &Diagram| {
            tally.stacks += 1;
            let path = match eta(s, d) {
                Ok(p) => p,
                Err(e) => {
                    failure.get_or_insert(e);
                    return;
                }
            };
            let forward_ok = path.is_nonnegative(0)
                && path.end_height(0) == 0
                && path.has_lambda() == Ok(false)
                && path.is_m_regular_path(m);
            let back_ok = eta_inv(&path).as_ref() == Ok(s);
            if !(forward_ok && back_ok) {
                tally.mismatches += 1;
            }
            image.insert(path);
        }),
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let mut brute = BTreeSet::new();
    enumerate_paths(
        n,
        d,
        0,
        0,
        m,
        Some(&mut |p: &DluPath| {
            brute.insert(p.clone());
        }),
    )?;
    tally.mismatches += image.symmetric_difference(&brute).count();
    Ok(tally)
}

fn default_bijection_n(d: usize) -> usize {
    match d {
        1 => 10,
        2 => 7,
        3 => 5,
        _ => 4,
    }
}

fn bijection(limits: &Limits, report: &mut Report) -> Result<()> {
    for (d, n_max) in limits.grid(default_bijection_n) {
        for m in 1..=limits.m_max() {
            let mut total = BijectionTally::default();
            for n in 0..=n_max {
                let t = check_bijection_cell(n, m, d)?;
                total.stacks += t.stacks;
                total.mismatches += t.mismatches;
            }
            report.push(
                format!("bijection d={d} m={m} n<={n_max}"),
                total.mismatches == 0,
                format!("{} stacks, {} mismatches", total.stacks, total.mismatches),
            );
        }
    }
    Ok(())
}

fn default_gf_n(d: usize) -> usize {
    match d {
        1 => 10,
        2 => 8,
        3 => 6,
        _ => 4,
    }
}

fn gf(limits: &Limits, report: &mut Report) -> Result<()> {
    for (d, n_max) in limits.grid(default_gf_n) {
        for m in 1..=limits.m_max() {
            let params = StackParams::new(m, d)?;
            let series = stack_gf(m, d, n_max)?;
            let mut bad = Vec::new();
            for n in 0..=n_max {
                let gf_count = series.coeff(n).clone();
                let by_stacks = BigInt::from(count_stacks(n, params));
                let by_paths = BigInt::from(count_paths(n, d, 0, 0, m)?);
                if gf_count != by_stacks || gf_count != by_paths {
                    bad.push(format!(
                        "n={n}: gf {gf_count}, stacks {by_stacks}, paths {by_paths}"
                    ));
                }
            }
            report.push(
                format!("gf stack counts d={d} m={m} n<={n_max}"),
                bad.is_empty(),
                if bad.is_empty() {
                    "gf = brute-stack = brute-path".into()
                } else {
                    bad.join("; ")
                },
            );

            let mismatches = component_mismatches(m, d, n_max)?;
            report.push(
                format!("gf components d={d} m={m} n<={n_max}"),
                mismatches.is_empty(),
                if mismatches.is_empty() {
                    format!("{} series match brute-path counts", needed_keys(d).len())
                } else {
                    mismatches.join("; ")
                },
            );
        }
    }
    Ok(())
}

/// Compares every solved `G<s,t>` coefficient with the brute-force path count.
pub fn component_mismatches(m: usize, d: usize, n_max: usize) -> Result<Vec<String>> {
    let table = solve(m, d, n_max)?;
    let mut bad = Vec::new();
    for (key, series) in table.iter() {
        for n in 0..=n_max {
            let brute = BigInt::from(count_paths(n, d, key.s, key.t, m)?);
            if *series.coeff(n) != brute {
                bad.push(format!(
                    "G<{},{}> n={n}: gf {} vs brute {brute}",
                    key.s,
                    key.t,
                    series.coeff(n)
                ));
            }
        }
    }
    Ok(bad)
}

fn zero_residual(report: &mut Report, name: String, residual: Result<stackenum::Series>) {
    match residual {
        Ok(r) => {
            let nonzero = r
                .coeffs()
                .iter()
                .filter(|c| c.sign() != num_bigint::Sign::NoSign)
                .count();
            report.push(
                name,
                nonzero == 0,
                format!("{nonzero} nonzero coefficients through order {}", r.order()),
            );
        }
        Err(e) => report.push(name, false, e.to_string()),
    }
}

fn algebraic(report: &mut Report) -> Result<()> {
    let quadratic = simple_stack_equation();
    for m in 1..=6 {
        let s = stack_gf(m, 1, 40)?;
        zero_residual(
            report,
            format!("d=1 quadratic m={m}"),
            quadratic.residual(m, &s, 40),
        );
        zero_residual(
            report,
            format!("d=1 closed-form quadratic m={m}"),
            simple_closed_form_residual(m, &s, 40),
        );
    }
    let quintic = linear_stack_equation();
    for m in 1..=6 {
        let s = stack_gf(m, 2, 30)?;
        zero_residual(
            report,
            format!("d=2 quintic m={m}"),
            quintic.residual(m, &s, 30),
        );
    }
    let s = stack_gf(1, 3, 30)?;
    zero_residual(
        report,
        "d=3 m=1 degree-17".into(),
        three_contact_m1_equation().residual(1, &s, 30),
    );

    let motzkin = motzkin_oracle(14);
    let solved = stack_gf(1, 1, 14)?;
    report.push(
        "Motzkin recurrence vs s_{1,1}".into(),
        motzkin == solved,
        format!("{} terms compared", motzkin.order() + 1),
    );
    Ok(())
}

fn default_symmetry_n(_: usize) -> usize {
    5
}

/// Pairs `(s, t)` with `s > t` whose counts differ from `(t, s)`.
pub fn symmetry_mismatches(m: usize, d: usize, n_max: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for s in 0..=d {
        for t in 0..s {
            for n in 0..=n_max {
                let forward: BigUint = count_paths(n, d, s, t, m)?;
                let backward = count_paths(n, d, t, s, m)?;
                if forward != backward {
                    bad.push(format!("n={n} <{s},{t}>: {forward} vs {backward}"));
                }
            }
        }
    }
    Ok(bad)
}

fn symmetry(limits: &Limits, report: &mut Report) -> Result<()> {
    for (d, n_max) in limits.grid(default_symmetry_n) {
        for m in 1..=limits.m_max() {
            let bad = symmetry_mismatches(m, d, n_max)?;
            report.push(
                format!("symmetry d={d} m={m} n<={n_max}"),
                bad.is_empty(),
                if bad.is_empty() {
                    "g<s,t> = g<t,s>".into()
                } else {
                    bad.join("; ")
                },
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let limits = Limits {
            d: Some(2),
            n_max: Some(4),
            m_max: Some(2),
        };
        for suite in [Suite::Bijection, Suite::Gf, Suite::Symmetry] {
            let report = run(suite, limits).unwrap();
            assert!(report.passed(), "{}", report.render());
            assert_eq!(report.checks.len(), if suite == Suite::Gf { 4 } else { 2 });
        }
    }

    #[test]
    fn report_rendering() {
        let mut r = Report::default();
        r.push("a".into(), true, "fine".into());
        r.push("b".into(), false, "broken".into());
        assert!(!r.passed());
        assert_eq!(
            r.render(),
            "PASS a: fine\nFAIL b: broken\n2 checks, 1 failed\n"
        );
    }
}
