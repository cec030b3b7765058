//! Finite windows of the graph whose vertices are classes of pairs and whose
//! arrows are classes of reversions.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::pairs_isomorphic;
use crate::pair::{Case, PairClass};
use crate::rational::{fmt_rational, serde_rat, Rational};
use crate::words::apply_reversion;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    #[serde(with = "serde_rat")]
    pub center: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationGraph {
    pub vertices: Vec<PairClass>,
    pub arrows: Vec<Arrow>,
    /// Vertices at the depth limit, not expanded.
    pub frontier: Vec<usize>,
}

impl FibrationGraph {
    pub fn empty() -> Self {
        FibrationGraph { vertices: Vec::new(), arrows: Vec::new(), frontier: Vec::new() }
    }

    fn find(&self, c: &PairClass) -> Option<usize> {
        self.vertices.par_iter().position_first(|v| pairs_isomorphic(v, c).is_some())
    }

    /// Each arrow and its inverse counted once; self-loops count once.
    pub fn undirected_edges(&self) -> BTreeSet<(usize, usize)> {
        self.arrows.iter().map(|a| (a.src.min(a.dst), a.src.max(a.dst))).collect()
    }

    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (a, b) in self.undirected_edges() {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            parent[ra] = rb;
        }
        (0..n).filter(|&i| root(&mut parent, i) == i).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let g: FibrationGraph = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let n = g.vertices.len();
        if g.arrows.iter().any(|a| a.src >= n || a.dst >= n) || g.frontier.iter().any(|&i| i >= n) {
            return Err(Error::Parse("graph index out of range".into()));
        }
        Ok(g)
    }

    pub fn to_dot(&self) -> String {
        let frontier: BTreeSet<usize> = self.frontier.iter().copied().collect();
        let mut s = String::from("digraph fibrations {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let coeffs = |p: &crate::poly::Poly| p.to_strings().join(",");
            let _ = write!(
                s,
                "  v{i} [label=\"{}\\nP=[{}]\\nQ=[{}]\"",
                v.case(),
                coeffs(&v.p),
                coeffs(&v.q)
            );
            if frontier.contains(&i) {
                s.push_str(", style=dashed");
            }
            s.push_str("];\n");
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.src, a.dst, fmt_rational(&a.center));
        }
        s.push_str("}\n");
        s
    }

    pub fn export(&self, format: &str) -> Result<String> {
        match format {
            "dot" => Ok(self.to_dot()),
            "json" => Ok(self.to_json()),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

/// Breadth-first exploration from `seed`, reverting every expanded vertex
/// at each center in turn. Vertices are kept up to isomorphism, in discovery
/// order; each source gets at most one arrow per target class.
pub fn build_graph(seed: &PairClass, centers: &[Rational], depth: usize) -> FibrationGraph {
    let mut g = FibrationGraph::empty();
    g.vertices.push(seed.clone());
    let mut level = vec![0usize];
    for _ in 0..depth {
        let targets: Vec<Vec<PairClass>> = level
            .par_iter()
            .map(|&v| centers.iter().map(|l| apply_reversion(&g.vertices[v], l)).collect())
            .collect();
        let mut next = Vec::new();
        for (&v, ts) in level.iter().zip(targets) {
            let mut seen = HashSet::new();
            for (l, t) in centers.iter().zip(ts) {
                let j = match g.find(&t) {
                    Some(j) => j,
                    None => {
                        g.vertices.push(t);
                        next.push(g.vertices.len() - 1);
                        g.vertices.len() - 1
                    }
                };
                if seen.insert(j) {
                    g.arrows.push(Arrow { src: v, dst: j, center: l.clone() });
                }
            }
        }
        level = next;
    }
    g.frontier = level;
    g
}

/// `E - V + C` over undirected edges.
pub fn cycle_rank(g: &FibrationGraph) -> usize {
    g.undirected_edges().len() + g.components() - g.vertices.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TypeIIIShape {
    SelfLoop,
    TwoVertexEdge,
}

/// A case III class is its own reversion target exactly when `[P, Q] ≅ [Q, P]`.
pub fn classify_type_iii(seed: &PairClass) -> Result<TypeIIIShape> {
    if seed.case() != Case::III {
        return Err(Error::Precondition(format!("{seed} is not of case III")));
    }
    Ok(if pairs_isomorphic(seed, &seed.swapped()).is_some() {
        TypeIIIShape::SelfLoop
    } else {
        TypeIIIShape::TwoVertexEdge
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn pc(p: &[i64], q: &[i64]) -> PairClass {
        PairClass::from_ints(p, q).unwrap()
    }

    #[test]
    fn carpet_square() {
        let seed = pc(&[-2, 0, 1], &[-3, 0, 1]);
        let g = build_graph(&seed, &[int(0), int(1)], 2);
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.undirected_edges().len(), 4);
        assert_eq!(cycle_rank(&g), 1);
        assert_eq!(g.frontier, vec![3]);
    }

    #[test]
    fn type_iii_windows() {
        let g = build_graph(&pc(&[0, 1], &[0, 1]), &[int(0), int(3)], 5);
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.arrows.len(), 1);
        assert_eq!(cycle_rank(&g), 1);
        let g = build_graph(&pc(&[0, 1], &[0, -1, 1]), &[int(0), int(1)], 5);
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.undirected_edges().len(), 1);
        assert_eq!(cycle_rank(&g), 0);
    }

    #[test]
    fn shapes() {
        assert_eq!(classify_type_iii(&pc(&[0, -1, 1], &[0, -1, 1])).unwrap(), TypeIIIShape::SelfLoop);
        assert_eq!(classify_type_iii(&pc(&[0, 1, -2, 1], &[0, -1, 1])).unwrap(), TypeIIIShape::TwoVertexEdge);
        assert_eq!(classify_type_iii(&pc(&[0, 0, 1], &[0, 0, 3])).unwrap(), TypeIIIShape::SelfLoop);
        assert!(classify_type_iii(&pc(&[-1, 1], &[0, 1])).is_err());
    }

    #[test]
    fn exports() {
        let e = FibrationGraph::empty();
        assert_eq!(e.export("dot").unwrap(), "digraph fibrations {\n}\n");
        assert!(matches!(e.export("svg"), Err(Error::UnknownFormat(_))));
        let g = build_graph(&pc(&[0, 1], &[0, 1]), &[int(0)], 1);
        let dot = g.to_dot();
        assert!(dot.contains("v0 -> v0"));
        let back = FibrationGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back.to_json(), g.to_json());
    }
}
