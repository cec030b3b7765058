use serde::{Deserialize, Serialize};

use super::Poly;
use crate::error::{Error, Result};

/// Pairs `(multiplicity, count)`: `count` distinct roots over the algebraic
/// closure have that multiplicity. Sorted by multiplicity, highest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub entries: Vec<(u32, usize)>,
}

impl MultiplicityProfile {
    /// Σ multiplicity·count, which equals the degree of the source polynomial.
    pub fn weighted_total(&self) -> usize {
        self.entries.iter().map(|&(m, c)| m as usize * c).sum()
    }

    pub fn distinct_roots(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.entries.iter().all(|&(m, _)| m == 1)
    }
}

/// Yun's algorithm: monic squarefree `f_i` with `p = lc · Π f_i^i`.
///
/// Only factors of positive degree are returned, as `(i, f_i)` with `i`
/// ascending.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(u32, Poly)>> {
    if p.is_zero() {
        return Err(Error::UndefinedProfile);
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = Poly::gcd(&f, &df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree() > 0 {
        let a = Poly::gcd(&b, &d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        d = &nc - &nb.derivative();
        if a.degree() > 0 {
            out.push((i, a));
        }
        b = nb;
        i += 1;
    }
    Ok(out)
}

pub fn multiplicity_profile(p: &Poly) -> Result<MultiplicityProfile> {
    let mut entries: Vec<(u32, usize)> = squarefree_decomposition(p)?
        .into_iter()
        .map(|(m, f)| (m, f.degree()))
        .collect();
    entries.sort_by_key(|e| std::cmp::Reverse(e.0));
    Ok(MultiplicityProfile { entries })
}

/// Index of the lowest nonzero coefficient, i.e. the multiplicity of 0 as a root.
pub fn vanishing_order(p: &Poly) -> Result<usize> {
    p.support().first().copied().ok_or(Error::ZeroPolynomial)
}
