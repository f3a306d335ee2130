//! The generating-function system for `m`-regular Λ-avoiding DLU paths,
//! solved by fixed-point iteration over truncated series.
//!
//! All series are in `y = x^d`: one power of `y` per piece. With that
//! convention the stack series `S_{m,d}(y)` is `G<0,0>` itself.
//!
//! The system, for every needed key `(s, t)` other than `(0, 0)`:
//!
//! ```text
//! G<0,0> = 1 + y * sum_{i=0..d} G<i,0>
//! G<s,t> = A<s,t> + y * sum_{a=1..d} A<max(s,a), min(s,a)> * sum_{c=0..d-a} G<c,t>
//! A<s,t> = [s = t] (-1)^t C + sum_{i=0..t-1} (-1)^(t-i+1) G<s-t+i, i>
//! C      = 1 + y + ... + y^(m-2)
//! ```
//!
//! `G<c,t>` with `c < t` is read as `G<t,c>`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::series::Series;

/// Boundary heights `(s, t)` of a family of paths, stored with `t <= s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfKey {
    pub s: usize,
    pub t: usize,
}

impl GfKey {
    /// Canonical key for `(s, t)`, swapping the pair when `t > s`.
    pub fn canonical(s: usize, t: usize) -> Self {
        if t > s {
            GfKey { s: t, t: s }
        } else {
            GfKey { s, t }
        }
    }
}

/// `{(s, 0) : 0 <= s <= d} ∪ {(s, t) : 1 <= t <= s <= d - 1}`, ordered by `(t, s)`.
pub fn needed_keys(d: usize) -> Vec<GfKey> {
    let mut keys: Vec<GfKey> = (0..=d).map(|s| GfKey { s, t: 0 }).collect();
    for t in 1..d {
        keys.extend((t..d).map(|s| GfKey { s, t }));
    }
    keys
}

/// Solved (or partially iterated) series `G<s,t>` for one `(m, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfTable {
    m: usize,
    d: usize,
    order: usize,
    entries: BTreeMap<GfKey, Series>,
}

impl GfTable {
    /// The starting point `G<s,t> = [s = t]`. This is not the fixed point's
    /// constant term on the diagonal beyond `(1, 1)`; see [`empty_path_count`].
    pub fn initial(m: usize, d: usize, order: usize) -> Self {
        let entries = needed_keys(d)
            .into_iter()
            .map(|k| {
                let init = if k.s == k.t {
                    Series::one(order)
                } else {
                    Series::zero(order)
                };
                (k, init)
            })
            .collect();
        GfTable {
            m,
            d,
            order,
            entries,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `G<s,t>`, resolving `t > s` by symmetry.
    pub fn get(&self, s: usize, t: usize) -> Result<&Series> {
        self.entries.get(&GfKey::canonical(s, t)).ok_or_else(|| {
            Error::Precondition(format!(
                "G<{s},{t}> is not part of the system for d = {}",
                self.d
            ))
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GfKey, &Series)> {
        self.entries.iter()
    }

    fn get_unchecked(&self, s: usize, t: usize) -> &Series {
        self.get(s, t)
            .expect("key set is closed under the system's references")
    }

    fn agrees_with(&self, other: &GfTable) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|((_, a), (_, b))| a.eq_upto(b, self.order).unwrap_or(false))
    }
}

/// Constant term of `G<s,t>`: the empty path counts only when its boundary
/// extension `L^{d-s}U^s D^t L^{d-t}` is Λ-free and `m`-regular.
pub fn empty_path_count(m: usize, s: usize, t: usize) -> u8 {
    u8::from(s == t && (s == 0 || (s == 1 && m == 1)))
}

/// `C = sum_{k=0}^{m-2} y^k`, the series of level-only fillers too short to
/// sit under an arc.
pub fn make_c(m: usize, order: usize) -> Series {
    let terms = m.saturating_sub(1);
    Series::from_coeffs((0..=order).map(|k| i32::from(k < terms)), order)
}

/// Prime-path series `A<s,t>` expressed through the `G` table.
pub fn a_expand(g: &GfTable, s: usize, t: usize, c: &Series) -> Result<Series> {
    if t > s || s > g.d {
        return Err(Error::Precondition(format!(
            "A<{s},{t}> needs t <= s <= d = {}",
            g.d
        )));
    }
    let mut acc = if s == t {
        if t.is_multiple_of(2) {
            c.clone()
        } else {
            -c
        }
    } else {
        Series::zero(g.order)
    };
    for i in 0..t {
        let term = g.get(s - t + i, i)?;
        // sign (-1)^(t-i+1)
        acc = if (t - i) % 2 == 1 {
            acc + term
        } else {
            acc - term
        };
    }
    Ok(acc)
}

/// One Jacobi sweep: every equation evaluated against the old table.
pub fn step_system(g: &GfTable) -> Result<GfTable> {
    let (d, order) = (g.d, g.order);
    let c = make_c(g.m, order);

    // A<u,v> for 1 <= v <= u <= d
    let mut prime = BTreeMap::new();
    for u in 1..=d {
        for v in 1..=u {
            prime.insert((u, v), a_expand(g, u, v, &c)?);
        }
    }
    // prefix[t][k] = sum_{c=0..k} G<c,t>
    let prefix: Vec<Vec<Series>> = (0..d)
        .map(|t| {
            let mut run = Series::zero(order);
            (0..d)
                .map(|k| {
                    run = &run + g.get_unchecked(k, t);
                    run.clone()
                })
                .collect()
        })
        .collect();

    let mut entries = BTreeMap::new();
    for key in needed_keys(d) {
        let GfKey { s, t } = key;
        let next = if s == 0 {
            let sum = (0..=d).fold(Series::zero(order), |acc, i| acc + g.get_unchecked(i, 0));
            Series::one(order) + sum.shift(1)
        } else {
            let mut tail = Series::zero(order);
            for a in 1..=d {
                let head = &prime[&(s.max(a), s.min(a))];
                tail = tail + head * &prefix[t][d - a];
            }
            a_expand(g, s, t, &c)? + tail.shift(1)
        };
        entries.insert(key, next);
    }
    Ok(GfTable {
        m: g.m,
        d,
        order,
        entries,
    })
}

/// Iteration cap for [`solve`].
pub fn iteration_cap(d: usize, order: usize) -> usize {
    d * (order + 1) + 3
}

/// Iterates [`step_system`] from the initial table until two consecutive
/// tables agree through `order`.
pub fn solve(m: usize, d: usize, order: usize) -> Result<GfTable> {
    solve_counting(m, d, order).map(|(table, _)| table)
}

/// As [`solve`], also returning the number of sweeps performed.
pub fn solve_counting(m: usize, d: usize, order: usize) -> Result<(GfTable, usize)> {
    if m == 0 || d == 0 {
        return Err(Error::Precondition(format!(
            "need m, d >= 1 (got m = {m}, d = {d})"
        )));
    }
    let cap = iteration_cap(d, order);
    let mut current = GfTable::initial(m, d, order);
    for sweep in 1..=cap {
        let next = step_system(&current)?;
        if next.agrees_with(&current) {
            return Ok((next, sweep));
        }
        current = next;
    }
    Err(Error::NotStabilized { iterations: cap })
}

/// `S_{m,d}` through `y^order`; coefficient `n` counts stacks on `[n]`.
pub fn stack_gf(m: usize, d: usize, order: usize) -> Result<Series> {
    let table = solve(m, d, order)?;
    Ok(table.get_unchecked(0, 0).clone())
}
