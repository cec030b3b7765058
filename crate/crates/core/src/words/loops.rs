use serde::{Deserialize, Serialize};

use super::BirWord;
use crate::error::{Error, Result};
use crate::pair::PairClass;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopProfile {
    pub loops: Vec<usize>,
    pub conjugator_length: usize,
    /// At most one loop, of length at most 1.
    pub algebraic_shaped: bool,
    /// The reduced closed path after conjugation is stripped.
    pub path: Vec<PairClass>,
}

/// Projects a closed word to the fibration graph and decomposes the
/// resulting path into loops at its (conjugated) base vertex.
///
/// Only reversions move along edges; automorphisms and fibered letters are
/// erased. Backtracking `u → v → u` along a proper edge is cancelled, while
/// self-loops are kept.
pub fn pi1_loop_profile(w: &BirWord) -> Result<LoopProfile> {
    if !w.end().is_isomorphic(&w.base) {
        return Err(Error::NotClosed);
    }
    let mut stack: Vec<PairClass> = vec![w.base.clone()];
    for l in w.letters.iter().filter(|l| l.kind.is_reversion()) {
        let v = l.target.clone();
        let n = stack.len();
        if n >= 2 && !v.is_isomorphic(&stack[n - 1]) && v.is_isomorphic(&stack[n - 2]) {
            stack.pop();
        } else {
            stack.push(v);
        }
    }
    let mut conjugator_length = 0;
    while stack.len() >= 3 {
        let n = stack.len();
        if stack[0].is_isomorphic(&stack[1]) || !stack[1].is_isomorphic(&stack[n - 2]) {
            break;
        }
        stack.pop();
        stack.remove(0);
        conjugator_length += 1;
    }
    let mut loops = Vec::new();
    let mut last = 0;
    for (i, v) in stack.iter().enumerate().skip(1) {
        if v.is_isomorphic(&stack[0]) {
            loops.push(i - last);
            last = i;
        }
    }
    let algebraic_shaped = loops.len() <= 1 && loops.iter().all(|&l| l <= 1);
    Ok(LoopProfile { loops, conjugator_length, algebraic_shaped, path: stack })
}
