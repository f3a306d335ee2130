//! Closed algebraic equations `sum_k c_k(x) S(x)^k = 0` satisfied by the stack
//! series, checked as exact identities between truncated series.
//!
//! The coefficient polynomials are stored as term lists whose exponents are
//! affine in `m`, exactly as printed; nothing here is re-derived.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::Series;

/// One term `coeff * x^(m_mult * m + offset)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTerm {
    pub coeff: BigInt,
    pub m_mult: i64,
    pub offset: i64,
}

/// A polynomial in `x` whose exponents depend affinely on `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamPoly {
    terms: Vec<ParamTerm>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    /// Builds a polynomial from `(coeff, m_mult, offset)` triples.
    pub fn from_terms(terms: &[(i64, i64, i64)]) -> Self {
        ParamPoly {
            terms: terms
                .iter()
                .map(|&(c, e, f)| ParamTerm {
                    coeff: BigInt::from(c),
                    m_mult: e,
                    offset: f,
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[ParamTerm] {
        &self.terms
    }

    /// Substitutes `m` and returns the polynomial as a series of order `order`.
    /// Terms with equal exponents are summed; terms above `order` vanish.
    pub fn instantiate(&self, m: usize, order: usize) -> Result<Series> {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for term in &self.terms {
            let exponent = term.m_mult * m as i64 + term.offset;
            if exponent < 0 {
                return Err(Error::FamilyRange { exponent, m });
            }
            if let Some(slot) = coeffs.get_mut(exponent as usize) {
                *slot += &term.coeff;
            }
        }
        Ok(Series::from_coeffs(coeffs, order))
    }
}

fn render_exponent(e: i64, f: i64) -> String {
    match (e, f) {
        (0, f) => f.to_string(),
        (1, 0) => "m".to_string(),
        (e, 0) => format!("{e}m"),
        (1, f) if f > 0 => format!("m+{f}"),
        (1, f) => format!("m{f}"),
        (e, f) if f > 0 => format!("{e}m+{f}"),
        (e, f) => format!("{e}m{f}"),
    }
}

/// Renders in the printed order, e.g. `-11x^{m+7} + 4x^{8} - x^{7} + 1`.
impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let magnitude = t.coeff.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = t.m_mult == 0 && t.offset == 0;
            if constant {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "x^{{{}}}", render_exponent(t.m_mult, t.offset))?;
        }
        Ok(())
    }
}

/// `sum_{k=0}^{K} c_k(x) S(x)^k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicEquation {
    pub name: &'static str,
    pub d: usize,
    /// Set when the coefficients were printed for a single value of `m` only.
    pub only_m: Option<usize>,
    pub coeffs: Vec<ParamPoly>,
}

impl AlgebraicEquation {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `sum_k c_k(m) S^k` through `x^order`, by Horner's rule.
    pub fn residual(&self, m: usize, s: &Series, order: usize) -> Result<Series> {
        if let Some(fixed) = self.only_m {
            if fixed != m {
                return Err(Error::Precondition(format!(
                    "{} is only available for m = {fixed}",
                    self.name
                )));
            }
        }
        if s.order() < order {
            return Err(Error::Precondition(format!(
                "series known through order {} but residual requested through {order}",
                s.order()
            )));
        }
        let s = s.truncate(order);
        let mut acc = Series::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &acc * &s + c.instantiate(m, order)?;
        }
        Ok(acc)
    }
}

/// d = 1: `(x^3 - x^2) S^2 + (-x^{m+1} + 2x^2 - 2x + 1) S + x - 1 = 0`.
pub fn simple_stack_equation() -> AlgebraicEquation {
    AlgebraicEquation {
        name: "d=1 quadratic",
        d: 1,
        only_m: None,
        coeffs: vec![
            ParamPoly::from_terms(&[(1, 0, 1), (-1, 0, 0)]),
            ParamPoly::from_terms(&[(-1, 1, 1), (2, 0, 2), (-2, 0, 1), (1, 0, 0)]),
            ParamPoly::from_terms(&[(1, 0, 3), (-1, 0, 2)]),
        ],
    }
}

/// d = 2 quintic in `S_{m,2}(x)`.
pub fn linear_stack_equation() -> AlgebraicEquation {
    let c0 = ParamPoly::from_terms(&[
        (1, 3, 1),
        (-1, 3, 0),
        (-3, 2, 1),
        (3, 2, 0),
        (3, 1, 1),
        (-3, 1, 0),
        (-1, 0, 1),
        (1, 0, 0),
    ]);
    let c1 = ParamPoly::from_terms(&[
        (1, 4, 1),
        (-2, 3, 2),
        (-3, 2, 3),
        (-3, 3, 1),
        (12, 2, 2),
        (1, 3, 0),
        (6, 1, 3),
        (-18, 1, 2),
        (-3, 2, 0),
        (-3, 0, 3),
        (5, 1, 1),
        (8, 0, 2),
        (3, 1, 0),
        (-3, 0, 1),
        (-1, 0, 0),
    ]);
    let c2 = ParamPoly::from_terms(&[
        (-5, 3, 3),
        (6, 2, 4),
        (5, 3, 2),
        (3, 1, 5),
        (8, 2, 3),
        (-21, 1, 4),
        (-19, 2, 2),
        (-3, 0, 5),
        (8, 1, 3),
        (5, 2, 1),
        (15, 0, 4),
        (20, 1, 2),
        (-11, 0, 3),
        (-10, 1, 1),
        (-6, 0, 2),
        (5, 0, 1),
    ]);
    let c3 = ParamPoly::from_terms(&[
        (11, 2, 5),
        (-8, 1, 6),
        (-22, 2, 4),
        (-6, 1, 5),
        (11, 2, 3),
        (8, 0, 6),
        (44, 1, 4),
        (-5, 0, 5),
        (-38, 1, 3),
        (-22, 0, 4),
        (8, 1, 2),
        (27, 0, 3),
        (-8, 0, 2),
    ]);
    let c4 = ParamPoly::from_terms(&[
        (-11, 1, 7),
        (4, 0, 8),
        (33, 1, 6),
        (-1, 0, 7),
        (-33, 1, 5),
        (-25, 0, 6),
        (11, 1, 4),
        (41, 0, 5),
        (-23, 0, 4),
        (4, 0, 3),
    ]);
    // 4x^5 (x - 1)^4, expanded
    let c5 = ParamPoly::from_terms(&[(4, 0, 9), (-16, 0, 8), (24, 0, 7), (-16, 0, 6), (4, 0, 5)]);
    AlgebraicEquation {
        name: "d=2 quintic",
        d: 2,
        only_m: None,
        coeffs: vec![c0, c1, c2, c3, c4, c5],
    }
}

/// d = 3, m = 1: the degree-17 equation in `S_{1,3}(x)`.
pub fn three_contact_m1_equation() -> AlgebraicEquation {
    let rows: [&[(i64, i64)]; 18] = [
        &[(1, 0)],
        &[(1, 1)],
        &[(52, 2), (1, 1), (-1, 0)],
        &[(60, 3), (-5, 2)],
        &[(787, 4), (-115, 3), (-45, 2)],
        &[(871, 5), (-376, 4), (-3, 3)],
        &[(5731, 6), (-511, 5), (-1314, 4), (162, 3)],
        &[(8188, 7), (-7823, 6), (315, 5)],
        &[(21690, 8), (-4575, 7), (-5483, 6), (-702, 5), (729, 4)],
        &[(35452, 9), (-37272, 8), (-10146, 7), (7938, 6)],
        &[(53179, 10), (-50388, 9), (11385, 8), (3888, 7)],
        &[(63508, 11), (-84400, 10), (11576, 9), (6912, 8)],
        &[(65208, 12), (-79736, 11), (39360, 10)],
        &[(53304, 13), (-69312, 12), (18432, 11)],
        &[(34304, 14), (-38912, 13), (16384, 12)],
        &[(10240, 15), (-16384, 14)],
        &[],
        &[],
    ];
    let coeffs = rows
        .iter()
        .map(|row| {
            let terms: Vec<(i64, i64, i64)> = row.iter().map(|&(c, f)| (c, 0, f)).collect();
            ParamPoly::from_terms(&terms)
        })
        .collect();
    AlgebraicEquation {
        name: "d=3 m=1 degree-17",
        d: 3,
        only_m: Some(1),
        coeffs,
    }
}

/// Residual of `x^2 S^2 - (sum_{l=0}^{m} x^l - 2x) S + 1`, the quadratic
/// behind the radical closed form of `S_{m,1}`.
pub fn simple_closed_form_residual(m: usize, s: &Series, order: usize) -> Result<Series> {
    if s.order() < order {
        return Err(Error::Precondition(format!(
            "series known through order {} but residual requested through {order}",
            s.order()
        )));
    }
    let s = s.truncate(order);
    let geometric = Series::from_coeffs((0..=order).map(|l| i32::from(l <= m)), order);
    let linear = geometric - Series::monomial(2, 1, order);
    Ok(Series::monomial(1, 2, order) * &s * &s - linear * &s + Series::one(order))
}

/// Motzkin numbers from `M_0 = 1`, `M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}`.
pub fn motzkin_oracle(order: usize) -> Series {
    let mut m: Vec<BigInt> = vec![BigInt::one()];
    for n in 0..order {
        let conv = (0..n).fold(BigInt::zero(), |acc, k| acc + &m[k] * &m[n - 1 - k]);
        let next = &m[n] + conv;
        m.push(next);
    }
    Series::from_coeffs(m, order)
}
