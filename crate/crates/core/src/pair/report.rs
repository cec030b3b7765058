use serde::{Deserialize, Serialize};

use super::{dual_graph, Case, DualGraph, NodeWeight};
use crate::error::Result;
use crate::poly::{multiplicity_profile, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SingularityKind {
    /// Rational double point resolved by a chain of `order - 1` (-2)-curves.
    CyclicQuotient { order: u32 },
    /// The chain ℬ_0 ▷ E_3 ▷ 𝒜_0 with the given block lengths.
    Chain { b0_block: usize, a0_block: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Singularity {
    pub component: String,
    pub count: usize,
    #[serde(flatten)]
    pub kind: SingularityKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberMultiplicity {
    pub component: String,
    pub count: usize,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub case: Case,
    pub smooth: bool,
    pub singularities: Vec<Singularity>,
    pub fiber_multiplicities: Vec<FiberMultiplicity>,
}

fn block_len(g: &DualGraph, name: &str) -> usize {
    match g.node(name).map(|n| &n.weight) {
        Some(NodeWeight::Block(t)) => *t,
        _ => 0,
    }
}

pub fn surface_report(p: &Poly, q: &Poly) -> Result<SurfaceReport> {
    let g = dual_graph(p, q)?;
    let case = g.case;
    let r0 = g.node("A_0").and_then(|n| n.multiplicity).map_or(0, |m| m - 1);
    let s0 = g.node("B_0").and_then(|n| n.multiplicity).unwrap_or(0);

    let mut singularities = Vec::new();
    let mut fibers = Vec::new();
    for n in &g.nodes {
        let Some(m) = n.multiplicity else { continue };
        let idx = &n.name[2..];
        let (is_a, is_b) = (n.name.starts_with('A'), n.name.starts_with('B'));
        let fiber = match (case, is_a, is_b, idx) {
            (Case::III, true, _, "0") => None,
            (Case::III, _, true, "0") => Some((s0 + 1) * (r0 + 1) - 1),
            (Case::II, true, _, "0") => Some(r0),
            (_, true, _, _) => Some(m),
            (Case::I, _, true, _) => Some(m),
            (_, _, true, _) => Some((r0 + 1) * m),
            _ => None,
        };
        if let Some(mult) = fiber {
            fibers.push(FiberMultiplicity { component: n.name.clone(), count: n.count, multiplicity: mult });
        }
        // Blocks of (-2)-curves contract to cyclic quotient points.
        let order = match (case, idx) {
            (Case::II, "0") if is_a => r0,
            (Case::III, "0") => 0,
            _ => m,
        };
        if order >= 2 {
            let block = if is_a { format!("𝒜_{idx}") } else { format!("ℬ_{idx}") };
            singularities.push(Singularity {
                component: block,
                count: n.count,
                kind: SingularityKind::CyclicQuotient { order },
            });
        }
    }
    if case == Case::III {
        singularities.push(Singularity {
            component: "ℬ_0 ▷ E_3 ▷ 𝒜_0".into(),
            count: 1,
            kind: SingularityKind::Chain {
                b0_block: block_len(&g, "ℬ_0"),
                a0_block: block_len(&g, "𝒜_0"),
            },
        });
    }
    let squarefree = |x: &Poly| multiplicity_profile(x).map(|m| m.is_squarefree());
    let smooth = case != Case::III && squarefree(p)? && squarefree(q)?;
    Ok(SurfaceReport { case, smooth, singularities, fiber_multiplicities: fibers })
}
