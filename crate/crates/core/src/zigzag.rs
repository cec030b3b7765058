//! Self-intersection sequences of zigzags and the elementary moves of a reversion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Self-intersections of a chain, listed from the 0-curve end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZigzagType {
    pub seq: Vec<i64>,
}

impl ZigzagType {
    pub fn new(seq: Vec<i64>) -> Self {
        ZigzagType { seq }
    }

    /// `(0, -1, -a_1, ..., -a_r)`
    pub fn standard(tail: &[i64]) -> Self {
        let mut seq = vec![0, -1];
        seq.extend(tail.iter().map(|a| -a));
        ZigzagType { seq }
    }

    pub fn reversed(&self) -> Self {
        ZigzagType { seq: self.seq.iter().rev().copied().collect() }
    }
}

pub fn validate_standard_type(z: &ZigzagType) -> bool {
    z.seq.len() >= 2 && z.seq[0] == 0 && z.seq[1] == -1 && z.seq[2..].iter().all(|&x| x <= -2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveStep {
    pub label: String,
    pub resulting: ZigzagType,
}

/// Intermediate types of a reversion.
///
/// Each `resulting` keeps the positions of the input chain, so index 0 is the
/// slot that held the 0-curve. `final_type` is the last step read from the
/// other end, which is again standard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveTrace {
    pub input: ZigzagType,
    pub steps: Vec<MoveStep>,
    pub final_type: ZigzagType,
}

impl MoveTrace {
    /// Steps read right to left, the way the boundary is usually drawn.
    pub fn displayed(&self) -> Vec<ZigzagType> {
        self.steps.iter().map(|s| s.resulting.reversed()).collect()
    }
}

/// Replays θ_0, φ_1, θ_1, ..., φ_r, θ_r on `(0, -1, -a_1, ..., -a_r)`.
///
/// θ_k leaves `(-a_1..-a_k, -1, 0, -a_{k+1}+1, -a_{k+2}, ...)`; φ_k leaves
/// `(-a_1..-a_{k-1}, -a_k+1, 0, -1, -a_{k+1}, ...)`. The pair `(0, -1)` walks
/// down the chain, lowering each curve it crosses back to its old weight.
pub fn reversion_trace(z: &ZigzagType) -> Result<MoveTrace> {
    if !validate_standard_type(z) {
        return Err(Error::NonStandardType(z.seq.clone()));
    }
    let a: Vec<i64> = z.seq[2..].iter().map(|x| -x).collect();
    let r = a.len();
    let mut steps = Vec::new();
    if r == 0 {
        return Ok(MoveTrace { input: z.clone(), steps, final_type: z.clone() });
    }
    let theta = |k: usize| {
        let mut s: Vec<i64> = a[..k].iter().map(|x| -x).collect();
        s.push(-1);
        s.push(0);
        if k < r {
            s.push(-a[k] + 1);
            s.extend(a[k + 1..].iter().map(|x| -x));
        }
        ZigzagType::new(s)
    };
    let phi = |k: usize| {
        let mut s: Vec<i64> = a[..k - 1].iter().map(|x| -x).collect();
        s.push(-a[k - 1] + 1);
        s.push(0);
        s.push(-1);
        s.extend(a[k..].iter().map(|x| -x));
        ZigzagType::new(s)
    };
    steps.push(MoveStep { label: "θ0".into(), resulting: theta(0) });
    for k in 1..=r {
        steps.push(MoveStep { label: format!("φ{k}"), resulting: phi(k) });
        steps.push(MoveStep { label: format!("θ{k}"), resulting: theta(k) });
    }
    let final_type = steps.last().map(|s| s.resulting.reversed()).unwrap();
    Ok(MoveTrace { input: z.clone(), steps, final_type })
}
