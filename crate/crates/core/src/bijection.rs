//! The correspondence between stacks and closed DLU paths: vertex `v` with
//! left degree `a` and right degree `c` becomes the piece `D^a L^{d-a-c} U^c`.

use std::collections::BTreeMap;

use crate::diagram::Diagram;
use crate::dlupath::{DluPath, Piece};
use crate::error::{Error, Result};

/// Maps a diagram to its DLU path with piece length `d`.
pub fn eta(diagram: &Diagram, d: usize) -> Result<DluPath> {
    let pieces = diagram
        .degree_profile()
        .into_iter()
        .enumerate()
        .map(|(idx, (left, right))| {
            if left + right > d {
                return Err(Error::DegreeExceedsD {
                    vertex: idx + 1,
                    degree: left + right,
                    d,
                });
            }
            Ok(Piece::new(left, d - left - right, right))
        })
        .collect::<Result<Vec<_>>>()?;
    DluPath::new(d, pieces)
}

/// Rebuilds the diagram of a closed nonnegative path.
///
/// Up-step vertices are consumed from the right: the largest remaining one is
/// joined to the smallest remaining down-step vertex to its right. A path
/// containing Λ produces a repeated arc, reported as [`Error::MultipleArc`].
pub fn eta_inv(path: &DluPath) -> Result<Diagram> {
    let n = path.pieces().len();
    // multiset of down-step vertices: vertex -> remaining multiplicity
    let mut downs: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ups: Vec<usize> = Vec::new();
    for (idx, p) in path.pieces().iter().enumerate() {
        let v = idx + 1;
        if p.down > 0 {
            downs.insert(v, p.down);
        }
        ups.extend(std::iter::repeat_n(v, p.up));
    }

    let mut arcs = Vec::with_capacity(ups.len());
    // ups is ascending, so popping yields the largest remaining vertex;
    // copies of the same vertex are processed consecutively
    while let Some(i) = ups.pop() {
        let j = match downs.range(i + 1..).next() {
            Some((&j, _)) => j,
            None => return Err(Error::NonMatchable { vertex: i }),
        };
        let left = downs.get_mut(&j).expect("key just found");
        *left -= 1;
        if *left == 0 {
            downs.remove(&j);
        }
        arcs.push((i, j));
    }
    if let Some((&v, _)) = downs.iter().next() {
        return Err(Error::UnmatchedSteps { position: v });
    }
    Diagram::new(n, arcs)
}
