//! DLU paths: lattice paths built from pieces `D^a L^b U^c` of fixed length `d`.
//!
//! Paths between heights `s` and `t` are judged through their boundary
//! extension `L^{d-s} U^s · P · D^t L^{d-t}`, a closed path from the axis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Down,
    Level,
    Up,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::Down => -1,
            Step::Level => 0,
            Step::Up => 1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Step::Down => 'D',
            Step::Level => 'L',
            Step::Up => 'U',
        }
    }
}

/// One piece `D^down L^level U^up`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub down: usize,
    pub level: usize,
    pub up: usize,
}

impl Piece {
    pub const fn new(down: usize, level: usize, up: usize) -> Self {
        Piece { down, level, up }
    }

    pub fn len(&self) -> usize {
        self.down + self.level + self.up
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The reflected piece `D^up L^level U^down`.
    pub fn mirrored(&self) -> Self {
        Piece::new(self.up, self.level, self.down)
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> {
        std::iter::repeat_n(Step::Down, self.down)
            .chain(std::iter::repeat_n(Step::Level, self.level))
            .chain(std::iter::repeat_n(Step::Up, self.up))
    }

    /// All pieces of length `d`, ordered by `(down, level)`.
    pub fn all(d: usize) -> Vec<Piece> {
        (0..=d)
            .flat_map(|down| {
                (0..=d - down).map(move |level| Piece::new(down, level, d - down - level))
            })
            .collect()
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DluPath {
    d: usize,
    pieces: Vec<Piece>,
}

impl DluPath {
    pub fn new(d: usize, pieces: Vec<Piece>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Precondition(
                "piece length d must be at least 1".into(),
            ));
        }
        if let Some(p) = pieces.iter().find(|p| p.len() != d) {
            return Err(Error::Precondition(format!(
                "piece {p:?} has length {} != {d}",
                p.len()
            )));
        }
        Ok(DluPath { d, pieces })
    }

    /// Parses a step string such as `"LLUU LLLL DLUU"`; whitespace and `·`
    /// are ignored, the remaining steps are cut into pieces of length `d`.
    pub fn parse(d: usize, text: &str) -> Result<Self> {
        let steps: Vec<char> = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '·')
            .collect();
        if d == 0 || !steps.len().is_multiple_of(d) {
            return Err(Error::Precondition(format!(
                "{} steps do not split into pieces of length {d}",
                steps.len()
            )));
        }
        let pieces = steps
            .chunks(d)
            .map(|chunk| {
                let word: String = chunk.iter().collect();
                let down = chunk.iter().take_while(|&&c| c == 'D').count();
                let level = chunk[down..].iter().take_while(|&&c| c == 'L').count();
                let up = chunk[down + level..]
                    .iter()
                    .take_while(|&&c| c == 'U')
                    .count();
                if down + level + up != d {
                    return Err(Error::Precondition(format!(
                        "`{word}` is not of the form D*L*U*"
                    )));
                }
                Ok(Piece::new(down, level, up))
            })
            .collect::<Result<Vec<_>>>()?;
        DluPath::new(d, pieces)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn steps(&self) -> Vec<Step> {
        self.pieces.iter().flat_map(Piece::steps).collect()
    }

    /// Heights after each step, starting from `start`.
    pub fn height_profile(&self, start: i64) -> Vec<i64> {
        self.steps()
            .into_iter()
            .scan(start, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect()
    }

    pub fn is_nonnegative(&self, start: i64) -> bool {
        start >= 0 && self.height_profile(start).iter().all(|&h| h >= 0)
    }

    pub fn end_height(&self, start: i64) -> i64 {
        start
            + self
                .pieces
                .iter()
                .map(|p| p.up as i64 - p.down as i64)
                .sum::<i64>()
    }

    /// Closes an `(s, t)`-path into `L^{d-s}U^s · self · D^t L^{d-t}`.
    pub fn extend_boundary(&self, s: usize, t: usize) -> Result<DluPath> {
        let d = self.d;
        if s > d || t > d {
            return Err(Error::Precondition(format!(
                "boundary heights s = {s}, t = {t} must not exceed d = {d}"
            )));
        }
        let mut pieces = Vec::with_capacity(self.pieces.len() + 2);
        pieces.push(Piece::new(0, d - s, s));
        pieces.extend_from_slice(&self.pieces);
        pieces.push(Piece::new(t, d - t, 0));
        Ok(DluPath { d, pieces })
    }

    /// Last-in-first-out pairing of up-steps with down-steps, as a map from
    /// up-step index to down-step index.
    pub fn match_steps(&self) -> Result<BTreeMap<usize, usize>> {
        Ok(matching(&self.steps())?
            .into_iter()
            .enumerate()
            .filter_map(|(i, partner)| partner.filter(|&j| j > i).map(|j| (i, j)))
            .collect())
    }

    /// Λ-detection via the step matching: an adjacent `UU` in one piece whose
    /// inner `U` is matched to the first `D` of an adjacent `DD` in one piece,
    /// and whose outer `U` is matched to the second.
    pub fn has_lambda(&self) -> Result<bool> {
        let steps = self.steps();
        let partner = matching(&steps)?;
        let d = self.d;
        for p in 0..steps.len().saturating_sub(1) {
            if steps[p] != Step::Up || steps[p + 1] != Step::Up || p / d != (p + 1) / d {
                continue;
            }
            let (Some(inner), Some(outer)) = (partner[p + 1], partner[p]) else {
                continue;
            };
            if outer == inner + 1 && inner / d == outer / d {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Literal Λ-detection: try every `UU` inside a piece against every later
    /// `DD` inside a piece and check that the stretch between them starts and
    /// ends at the same height `h` without dipping below it. Quadratic; kept
    /// as a cross-check for [`DluPath::has_lambda`].
    pub fn has_lambda_oracle(&self) -> bool {
        let steps = self.steps();
        let heights = self.height_profile(0);
        let d = self.d;
        let same_piece = |i: usize| i / d == (i + 1) / d;
        let n = steps.len();
        for p in 0..n.saturating_sub(1) {
            if !(steps[p] == Step::Up && steps[p + 1] == Step::Up && same_piece(p)) {
                continue;
            }
            let h = heights[p + 1];
            for q in p + 2..n - 1 {
                if !(steps[q] == Step::Down && steps[q + 1] == Step::Down && same_piece(q)) {
                    continue;
                }
                // stretch is steps p+2 .. q-1; height before step q is heights[q-1]
                let inner = &heights[p + 2..q];
                if heights[q - 1] == h && inner.iter().all(|&x| x >= h) {
                    return true;
                }
            }
        }
        false
    }

    /// m-regularity on the step string: no consecutive factor `U L^b D` with
    /// `b` in `{0, d, ..., (m-2)d}`.
    pub fn is_m_regular_path(&self, m: usize) -> bool {
        if m <= 1 {
            return true;
        }
        let steps = self.steps();
        let max_levels = (m - 2) * self.d;
        let mut i = 0;
        while i < steps.len() {
            if steps[i] == Step::Up {
                let run = steps[i + 1..]
                    .iter()
                    .take_while(|&&s| s == Step::Level)
                    .count();
                let after = i + 1 + run;
                if after < steps.len()
                    && steps[after] == Step::Down
                    && run % self.d == 0
                    && run <= max_levels
                {
                    return false;
                }
                i = after;
            } else {
                i += 1;
            }
        }
        true
    }

    /// Mirror reflection: reverse the pieces and swap down/up inside each.
    pub fn mirror(&self) -> DluPath {
        DluPath {
            d: self.d,
            pieces: self.pieces.iter().rev().map(Piece::mirrored).collect(),
        }
    }
}

impl fmt::Display for DluPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.pieces.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

// partner[i] is the index matched with step i (None for level steps)
fn matching(steps: &[Step]) -> Result<Vec<Option<usize>>> {
    let mut partner = vec![None; steps.len()];
    let mut open = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => open.push(i),
            Step::Down => {
                let u = open.pop().ok_or(Error::UnmatchedSteps { position: i })?;
                partner[u] = Some(i);
                partner[i] = Some(u);
            }
            Step::Level => {}
        }
    }
    if let Some(&u) = open.first() {
        return Err(Error::UnmatchedSteps { position: u });
    }
    Ok(partner)
}

/// Counts `m`-regular Λ-avoiding paths of `n` pieces from height `s` to
/// height `t` by exhaustive search; each accepted path goes to `visitor`.
pub fn enumerate_paths(
    n: usize,
    d: usize,
    s: usize,
    t: usize,
    m: usize,
    mut visitor: Option<&mut dyn FnMut(&DluPath)>,
) -> Result<BigUint> {
    if d == 0 || s > d || t > d {
        return Err(Error::Precondition(format!(
            "need d >= 1 and s, t <= d (got d = {d}, s = {s}, t = {t})"
        )));
    }
    let choices = Piece::all(d);
    let mut current = Vec::with_capacity(n);
    let mut count = 0u128;
    let mut accept = |pieces: &[Piece]| {
        let path = DluPath {
            d,
            pieces: pieces.to_vec(),
        };
        let closed = path.extend_boundary(s, t).expect("s, t checked");
        let avoids = !closed
            .has_lambda()
            .expect("closed nonnegative by construction");
        if avoids && closed.is_m_regular_path(m) {
            count += 1;
            if let Some(v) = visitor.as_mut() {
                v(&path);
            }
        }
    };
    walk(
        &choices,
        n,
        d as i64,
        s as i64,
        t as i64,
        &mut current,
        &mut accept,
    );
    Ok(BigUint::from(count))
}

pub fn count_paths(n: usize, d: usize, s: usize, t: usize, m: usize) -> Result<BigUint> {
    enumerate_paths(n, d, s, t, m, None)
}

fn walk(
    choices: &[Piece],
    remaining: usize,
    d: i64,
    height: i64,
    target: i64,
    current: &mut Vec<Piece>,
    accept: &mut dyn FnMut(&[Piece]),
) {
    if remaining == 0 {
        if height == target {
            accept(current);
        }
        return;
    }
    for &p in choices {
        // the down-steps come first, so the lowest point of a piece is after them
        let low = height - p.down as i64;
        let next = low + p.up as i64;
        if low < 0 || (next - target).abs() > d * (remaining as i64 - 1) {
            continue;
        }
        current.push(p);
        walk(choices, remaining - 1, d, next, target, current, accept);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(d: usize, s: &str) -> DluPath {
        DluPath::parse(d, s).unwrap()
    }

    const SAMPLE_PATH: &str = "LLUU LLLL DLUU LLLL DLLU LLLU LLLL DDDD";

    #[test]
    fn piece_catalogue() {
        assert_eq!(Piece::all(1).len(), 3);
        assert_eq!(Piece::all(2).len(), 6);
        assert_eq!(Piece::all(3).len(), 10);
        assert!(Piece::all(4).iter().all(|p| p.len() == 4));
    }

    #[test]
    fn parse_and_display() {
        let p = path(4, SAMPLE_PATH);
        assert_eq!(p.pieces().len(), 8);
        assert_eq!(p.to_string(), SAMPLE_PATH);
        assert!(DluPath::parse(2, "UD").is_err());
        assert!(DluPath::parse(2, "UUD").is_err());
        assert!(DluPath::new(2, vec![Piece::new(1, 0, 0)]).is_err());
    }

    #[test]
    fn height_profiles() {
        assert_eq!(path(1, "UD").height_profile(0), vec![1, 0]);
        let profile = path(4, SAMPLE_PATH).height_profile(0);
        assert_eq!(profile.last(), Some(&0));
        assert_eq!(profile.iter().max(), Some(&4));
        let empty = DluPath::new(3, vec![]).unwrap();
        assert!(empty.height_profile(5).is_empty());
    }

    #[test]
    fn nonnegativity() {
        assert!(path(1, "D").is_nonnegative(1));
        assert!(!path(1, "D").is_nonnegative(0));
        assert!(path(2, "UU DD").is_nonnegative(0));
        assert!(!path(1, "L").is_nonnegative(-1));
    }

    #[test]
    fn boundary_extension() {
        let p = path(2, "DU");
        assert_eq!(p.extend_boundary(0, 0).unwrap(), path(2, "LL DU LL"));
        assert_eq!(
            path(1, "D").extend_boundary(1, 0).unwrap(),
            path(1, "U D L")
        );
        let empty = DluPath::new(2, vec![]).unwrap();
        assert_eq!(empty.extend_boundary(2, 2).unwrap(), path(2, "UU DD"));
        assert!(p.extend_boundary(3, 0).is_err());
        assert!(p.extend_boundary(0, 3).is_err());
    }

    #[test]
    fn step_matching() {
        let m = path(1, "UD").match_steps().unwrap();
        assert_eq!(m, BTreeMap::from([(0, 1)]));
        let m = path(1, "UUDD").match_steps().unwrap();
        assert_eq!(m, BTreeMap::from([(1, 2), (0, 3)]));
        let m = path(1, "ULUDLD").match_steps().unwrap();
        assert_eq!(m, BTreeMap::from([(0, 5), (2, 3)]));
        assert!(matches!(
            path(1, "DU").match_steps(),
            Err(Error::UnmatchedSteps { .. })
        ));
        assert!(matches!(
            path(1, "UUD").match_steps(),
            Err(Error::UnmatchedSteps { .. })
        ));
    }

    // five pieces of length 3, no Λ
    fn avoiding_sample() -> DluPath {
        path(3, "LUU LLU DLL DLU DDL")
    }

    // contains Λ
    fn lambda_sample() -> DluPath {
        path(3, "UUU DUU DDL DDL")
    }

    #[test]
    fn lambda_examples() {
        let minimal = path(2, "UU DD");
        assert!(minimal.has_lambda().unwrap());
        assert!(minimal.has_lambda_oracle());
        let p = avoiding_sample();
        assert!(p.is_nonnegative(0) && p.end_height(0) == 0);
        assert!(!p.has_lambda().unwrap());
        assert!(!p.has_lambda_oracle());
        let p = lambda_sample();
        assert!(p.is_nonnegative(0) && p.end_height(0) == 0);
        assert!(p.has_lambda().unwrap());
        assert!(p.has_lambda_oracle());
        // d = 1 can never contain Λ: every UU straddles two pieces
        let p = path(1, "UUUDDD");
        assert!(!p.has_lambda().unwrap());
        assert!(!p.has_lambda_oracle());
        // the stretch between UU and DD dips below h
        let p = path(2, "UU DU DD");
        assert!(!p.has_lambda().unwrap());
        assert!(!p.has_lambda_oracle());
        // nested arc under a doubled one
        let p = path(3, "LUU LLU DLL DDL");
        assert!(p.has_lambda().unwrap());
        assert!(p.has_lambda_oracle());
    }

    #[test]
    fn m_regularity() {
        assert!(!path(1, "UD").is_m_regular_path(2));
        assert!(path(1, "UD").is_m_regular_path(1));
        assert!(!path(2, "LU LL DL").is_m_regular_path(3));
        assert!(path(2, "LU LL DL").is_m_regular_path(2));
        assert!(path(2, "LU LL LL DL").is_m_regular_path(3));
        assert!(!path(2, "LU LL LL DL").is_m_regular_path(4));
        // the sample stack's shortest arcs have span 2
        assert!(path(4, SAMPLE_PATH).is_m_regular_path(2));
        assert!(!path(4, SAMPLE_PATH).is_m_regular_path(3));
    }

    #[test]
    fn mirror_examples() {
        let p = path(2, "UU DD LL");
        assert_eq!(p.mirror(), path(2, "LL UU DD"));
        assert_eq!(p.mirror().mirror(), p);
        let q = path(1, "U L D");
        assert_eq!(q.mirror(), q);
        let sample = path(4, SAMPLE_PATH);
        assert_eq!(sample.mirror().mirror(), sample);
    }

    #[test]
    fn enumerate_examples() {
        let motzkin: Vec<_> = (0..4)
            .map(|n| count_paths(n, 1, 0, 0, 1).unwrap())
            .collect();
        assert_eq!(motzkin, [1u32, 1, 2, 4].map(BigUint::from));
        assert_eq!(count_paths(2, 1, 1, 0, 1).unwrap(), BigUint::from(2u32));
        // the empty path survives only where its boundary extension is
        // m-regular and Λ-free: L^d L^d always, U·D only for m = 1
        for d in 1..=3 {
            for m in 1..=3 {
                for s in 0..=d {
                    for t in 0..=d {
                        let expected = u32::from(s == t && (s == 0 || (s == 1 && m == 1)));
                        assert_eq!(count_paths(0, d, s, t, m).unwrap(), BigUint::from(expected));
                    }
                }
            }
        }
        assert!(count_paths(1, 2, 3, 0, 1).is_err());
    }

    #[test]
    fn enumerate_visits_expected_paths() {
        let mut seen = Vec::new();
        enumerate_paths(
            2,
            1,
            1,
            0,
            1,
            Some(&mut |p: &DluPath| seen.push(p.to_string())),
        )
        .unwrap();
        seen.sort();
        assert_eq!(seen, ["D L", "L D"]);
    }

    // every closed nonnegative path with n pieces, by filtering all piece words
    fn all_closed(n: usize, d: usize) -> Vec<DluPath> {
        let choices = Piece::all(d);
        let mut out = Vec::new();
        let total = choices.len().pow(n as u32);
        for mut code in 0..total {
            let mut pieces = Vec::with_capacity(n);
            for _ in 0..n {
                pieces.push(choices[code % choices.len()]);
                code /= choices.len();
            }
            let p = DluPath::new(d, pieces).unwrap();
            if p.is_nonnegative(0) && p.end_height(0) == 0 {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn mirror_preserves_predicates() {
        for d in 1..=3 {
            for n in 0..=4 {
                for p in all_closed(n, d) {
                    let q = p.mirror();
                    assert_eq!(q.has_lambda().unwrap(), p.has_lambda().unwrap(), "{p}");
                    for m in 1..=4 {
                        assert_eq!(q.is_m_regular_path(m), p.is_m_regular_path(m), "{p} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_checkers_agree_small() {
        for d in 1..=3 {
            for n in 0..=3 {
                for p in all_closed(n, d) {
                    assert_eq!(p.has_lambda().unwrap(), p.has_lambda_oracle(), "{p}");
                }
            }
        }
    }

    #[test]
    fn count_symmetry_small() {
        for d in 1..=2 {
            for m in 1..=2 {
                for n in 0..=4 {
                    for s in 0..=d {
                        for t in 0..s {
                            assert_eq!(
                                count_paths(n, d, s, t, m).unwrap(),
                                count_paths(n, d, t, s, m).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
