//! Stacks: noncrossing diagrams on `1..=n` with bounded vertex degree and
//! minimum arc span, plus an exhaustive enumerator used as ground truth.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Minimum arc span `m` and maximum vertex degree `d`, both at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StackParams {
    m: usize,
    d: usize,
}

impl StackParams {
    pub fn new(m: usize, d: usize) -> Result<Self> {
        if m == 0 || d == 0 {
            return Err(Error::Precondition(format!(
                "stack parameters must satisfy m >= 1 and d >= 1 (got m = {m}, d = {d})"
            )));
        }
        Ok(StackParams { m, d })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

/// A diagram on vertices `1..=n` with a sorted, duplicate-free arc list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<_> = arcs.into_iter().collect();
        for &(i, j) in &arcs {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::Precondition(format!(
                    "arc ({i}, {j}) is not of the form 1 <= i < j <= {n}"
                )));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MultipleArc(w[0].0, w[0].1));
        }
        Ok(Diagram { n, arcs })
    }

    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::Precondition(format!(
                "vertex {v} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Number of arcs `(u, v)` with `u < v`.
    pub fn ldeg(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.arcs.iter().filter(|&&(_, j)| j == v).count())
    }

    /// Number of arcs `(v, w)` with `w > v`.
    pub fn rdeg(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.arcs.iter().filter(|&&(i, _)| i == v).count())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.ldeg(v)? + self.rdeg(v)?)
    }

    /// `(ldeg, rdeg)` for every vertex, indexed from 0 for vertex 1.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut prof = vec![(0, 0); self.n];
        for &(i, j) in &self.arcs {
            prof[i - 1].1 += 1;
            prof[j - 1].0 += 1;
        }
        prof
    }

    pub fn is_noncrossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(x, &a)| self.arcs[x + 1..].iter().all(|&b| !crosses(a, b)))
    }

    pub fn is_valid_stack(&self, p: StackParams) -> bool {
        self.is_noncrossing()
            && self.arcs.iter().all(|&(i, j)| j - i >= p.m)
            && self.degree_profile().iter().all(|&(l, r)| l + r <= p.d)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{{", self.n)?;
        for (k, (i, j)) in self.arcs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

fn crosses((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Counts the `(m, d)`-stacks on `[n]` by backtracking over arc sets in
/// lexicographic arc order. Every valid diagram is handed to `visitor`
/// exactly once.
pub fn enumerate_stacks(
    n: usize,
    p: StackParams,
    visitor: Option<&mut dyn FnMut(&Diagram)>,
) -> BigUint {
    let candidates: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + p.m..=n).map(move |j| (i, j)))
        .collect();
    let mut search = StackSearch {
        n,
        d: p.d,
        candidates,
        chosen: Vec::new(),
        degree: vec![0; n + 1],
        count: 0,
        visitor,
    };
    search.descend(0);
    BigUint::from(search.count)
}

/// Shorthand for [`enumerate_stacks`] without a visitor.
pub fn count_stacks(n: usize, p: StackParams) -> BigUint {
    enumerate_stacks(n, p, None)
}

struct StackSearch<'v> {
    n: usize,
    d: usize,
    candidates: Vec<(usize, usize)>,
    chosen: Vec<(usize, usize)>,
    degree: Vec<usize>,
    count: u128,
    visitor: Option<&'v mut dyn FnMut(&Diagram)>,
}

impl StackSearch<'_> {
    // every node of the search tree is a valid stack; `next` is the
    // lowest candidate index still allowed, so no arc set is produced twice
    fn descend(&mut self, next: usize) {
        self.count += 1;
        if let Some(visit) = self.visitor.as_mut() {
            let diagram = Diagram {
                n: self.n,
                arcs: self.chosen.clone(),
            };
            visit(&diagram);
        }
        for idx in next..self.candidates.len() {
            let arc @ (i, j) = self.candidates[idx];
            if self.degree[i] >= self.d || self.degree[j] >= self.d {
                continue;
            }
            if self.chosen.iter().any(|&c| crosses(c, arc)) {
                continue;
            }
            self.degree[i] += 1;
            self.degree[j] += 1;
            self.chosen.push(arc);
            self.descend(idx + 1);
            self.chosen.pop();
            self.degree[i] -= 1;
            self.degree[j] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn params(m: usize, d: usize) -> StackParams {
        StackParams::new(m, d).unwrap()
    }

    fn sample_stack() -> Diagram {
        Diagram::new(8, [(1, 3), (1, 8), (3, 5), (3, 8), (5, 8), (6, 8)]).unwrap()
    }

    #[test]
    fn rejects_bad_params_and_arcs() {
        assert!(StackParams::new(0, 1).is_err());
        assert!(StackParams::new(1, 0).is_err());
        assert!(Diagram::new(3, [(2, 2)]).is_err());
        assert!(Diagram::new(3, [(1, 4)]).is_err());
        assert_eq!(
            Diagram::new(3, [(1, 3), (1, 3)]),
            Err(Error::MultipleArc(1, 3))
        );
    }

    #[test]
    fn noncrossing() {
        assert!(!Diagram::new(4, [(1, 3), (2, 4)]).unwrap().is_noncrossing());
        assert!(Diagram::new(8, [(1, 8), (3, 8), (5, 8)])
            .unwrap()
            .is_noncrossing());
        assert!(Diagram::empty(5).is_noncrossing());
        assert!(sample_stack().is_noncrossing());
        // shared endpoints and nesting
        assert!(Diagram::new(5, [(1, 3), (3, 5), (1, 5)])
            .unwrap()
            .is_noncrossing());
    }

    #[test]
    fn degrees() {
        let s = sample_stack();
        assert_eq!(
            (s.ldeg(8).unwrap(), s.rdeg(8).unwrap(), s.degree(8).unwrap()),
            (4, 0, 4)
        );
        let iso = Diagram::new(4, [(1, 2)]).unwrap();
        assert_eq!(
            (
                iso.ldeg(4).unwrap(),
                iso.rdeg(4).unwrap(),
                iso.degree(4).unwrap()
            ),
            (0, 0, 0)
        );
        let s = Diagram::new(5, [(1, 3), (3, 5)]).unwrap();
        assert_eq!(
            (s.ldeg(3).unwrap(), s.rdeg(3).unwrap(), s.degree(3).unwrap()),
            (1, 1, 2)
        );
        assert!(s.degree(0).is_err());
        assert!(s.ldeg(6).is_err());
    }

    #[test]
    fn validity() {
        assert!(Diagram::empty(0).is_valid_stack(params(3, 1)));
        assert!(Diagram::empty(7).is_valid_stack(params(9, 2)));
        let one = Diagram::new(3, [(1, 3)]).unwrap();
        assert!(one.is_valid_stack(params(2, 1)));
        assert!(!one.is_valid_stack(params(3, 1)));
        assert!(sample_stack().is_valid_stack(params(2, 4)));
        assert!(!sample_stack().is_valid_stack(params(2, 3)));
        assert!(!Diagram::new(4, [(1, 3), (2, 4)])
            .unwrap()
            .is_valid_stack(params(1, 2)));
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(count_stacks(5, params(1, 1)), BigUint::from(21u32));
        assert_eq!(count_stacks(4, params(1, 3)), BigUint::from(48u32));
        for m in 1..5 {
            for d in 1..4 {
                assert_eq!(count_stacks(m, params(m, d)), BigUint::from(1u32));
                assert_eq!(count_stacks(m + 1, params(m, d)), BigUint::from(2u32));
            }
        }
        assert_eq!(count_stacks(0, params(1, 1)), BigUint::from(1u32));
    }

    #[test]
    fn visitor_sees_each_valid_stack_once() {
        let p = params(2, 2);
        let mut seen = BTreeSet::new();
        let mut visits = 0usize;
        let count = enumerate_stacks(
            7,
            p,
            Some(&mut |dg: &Diagram| {
                assert!(dg.is_valid_stack(p), "{dg}");
                seen.insert(dg.clone());
                visits += 1;
            }),
        );
        assert_eq!(BigUint::from(visits), count);
        assert_eq!(seen.len(), visits);
        assert_eq!(count, BigUint::from(221u32));
    }

    #[test]
    fn enumeration_matches_filtering_all_arc_subsets() {
        // independent oracle: filter every subset of admissible arcs
        for (n, m, d) in [(5, 1, 2), (6, 2, 3), (5, 1, 3), (6, 1, 1)] {
            let p = params(m, d);
            let all: Vec<_> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            let mut brute = 0u32;
            for mask in 0u32..(1 << all.len()) {
                let arcs = (0..all.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| all[b]);
                if Diagram::new(n, arcs).unwrap().is_valid_stack(p) {
                    brute += 1;
                }
            }
            assert_eq!(
                count_stacks(n, p),
                BigUint::from(brute),
                "n={n} m={m} d={d}"
            );
        }
    }

    #[test]
    fn monotone_in_n_and_params() {
        for m in 1..=3 {
            for d in 1..=3 {
                for n in 0..7 {
                    let c = count_stacks(n, params(m, d));
                    assert!(c <= count_stacks(n + 1, params(m, d)));
                    assert!(count_stacks(n, params(m + 1, d)) <= c);
                    assert!(c <= count_stacks(n, params(m, d + 1)));
                }
            }
        }
    }
}
