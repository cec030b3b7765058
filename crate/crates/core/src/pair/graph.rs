use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use super::{classify_case, Case};
use crate::error::Result;
use crate::poly::{squarefree_decomposition, vanishing_order, Poly};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeWeight {
    SelfIntersection(i64),
    /// A chain of this many (-2)-curves.
    Block(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualNode {
    pub id: usize,
    pub name: String,
    pub weight: NodeWeight,
    /// Root multiplicity for A/B nodes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u32>,
    /// Number of conjugate components the node stands for.
    pub count: usize,
}

impl DualNode {
    pub fn label(&self) -> String {
        match self.weight {
            NodeWeight::SelfIntersection(w) => format!("{}:{}", self.name, w),
            NodeWeight::Block(t) => format!("{}[{}]", self.name, t),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SectionCase {
    Ia,
    Ib,
    II,
    III,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub case: Case,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<SectionCase>,
    pub nodes: Vec<DualNode>,
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    fn add(&mut self, name: String, weight: NodeWeight, multiplicity: Option<u32>, count: usize) -> usize {
        let id = self.nodes.len();
        self.nodes.push(DualNode { id, name, weight, multiplicity, count });
        id
    }

    fn curve(&mut self, name: impl Into<String>, w: i64) -> usize {
        self.add(name.into(), NodeWeight::SelfIntersection(w), None, 1)
    }

    fn link(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Adds a block of length `len` hanging off `at`; returns the chain's last node.
    fn block(&mut self, name: String, len: u32, count: usize, at: usize) -> usize {
        if len == 0 {
            return at;
        }
        let id = self.add(name, NodeWeight::Block(len as usize), None, count);
        self.link(at, id);
        id
    }

    pub fn node(&self, name: &str) -> Option<&DualNode> {
        self.nodes.iter().find(|n| n.name == name)
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        v.sort_unstable();
        v
    }

    pub fn adjacent(&self, a: &str, b: &str) -> bool {
        match (self.node(a), self.node(b)) {
            (Some(x), Some(y)) => self.neighbors(x.id).contains(&y.id),
            _ => false,
        }
    }

    /// Weights of F, C, E_1, E_2.
    pub fn boundary_weights(&self) -> Vec<i64> {
        ["F", "C", "E_1", "E_2"]
            .iter()
            .filter_map(|n| match self.node(n)?.weight {
                NodeWeight::SelfIntersection(w) => Some(w),
                NodeWeight::Block(_) => None,
            })
            .collect()
    }

    fn root_total(&self, prefix: char) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.name.starts_with(prefix))
            .filter_map(|n| n.multiplicity.map(|m| m as usize * n.count))
            .sum()
    }

    /// Σ r_i over the roots of wP, counting E_2 as A_0 in case I.
    pub fn sum_r(&self) -> usize {
        self.root_total('A') + usize::from(self.case == Case::I)
    }

    /// Σ s_j over the roots of Q.
    pub fn sum_s(&self) -> usize {
        self.root_total('B')
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dual {\n");
        for n in &self.nodes {
            let _ = writeln!(s, "  n{} [label=\"{}\"];", n.id, n.label());
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -- n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// `p / w^k` for `k` at most the vanishing order.
fn strip_zero_root(p: &Poly, k: usize) -> Poly {
    Poly::new(p.coeffs()[k..].to_vec())
}

/// (multiplicity, factor) groups of the roots of `p`, ascending multiplicity.
fn groups(p: &Poly) -> Vec<(u32, Poly)> {
    squarefree_decomposition(p).expect("nonzero")
}

fn build(p: &Poly, q: &Poly, lambda: Option<&Rational>) -> Result<DualGraph> {
    let case = classify_case(p, q)?;
    let mut g = DualGraph { case, section: None, nodes: Vec::new(), edges: Vec::new() };
    let a = p.degree() as i64 + 1;
    let b = q.degree() as i64 + 1;
    let f = g.curve("F", 0);
    let c = g.curve("C", -1);
    let e1 = g.curve("E_1", -a);
    let e2 = g.curve("E_2", -b);
    g.link(f, c);
    g.link(c, e1);
    g.link(e1, e2);

    let r0 = vanishing_order(p)?;
    let s0 = vanishing_order(q)?;

    // Nonzero roots of P hang off E_1.
    let mut a_ends = Vec::new();
    for (i, (m, fac)) in groups(&strip_zero_root(p, r0)).into_iter().enumerate() {
        let k = fac.degree();
        let ai = g.add(format!("A_{}", i + 1), NodeWeight::SelfIntersection(-1), Some(m), k);
        g.link(e1, ai);
        let end = g.block(format!("𝒜_{}", i + 1), m - 1, k, ai);
        a_ends.push((end, k));
    }

    // End of the chain where D_0 meets the A_0 side in cases II/III.
    let mut a0_end = None;
    let q_rest = match case {
        Case::I => q.clone(),
        Case::II => {
            let a0 = g.add("A_0".into(), NodeWeight::SelfIntersection(-2), Some(r0 as u32 + 1), 1);
            g.link(e2, a0);
            a0_end = Some(g.block("𝒜_0".into(), r0 as u32 - 1, 1, a0));
            q.clone()
        }
        Case::III => {
            let b0 = g.add("B_0".into(), NodeWeight::SelfIntersection(-1), Some(s0 as u32), 1);
            g.link(e2, b0);
            let b_end = g.block("ℬ_0".into(), s0 as u32 - 1, 1, b0);
            let a0 = g.add("A_0".into(), NodeWeight::SelfIntersection(-3), Some(r0 as u32 + 1), 1);
            g.link(b_end, a0);
            a0_end = Some(g.block("𝒜_0".into(), r0 as u32 - 1, 1, a0));
            strip_zero_root(q, s0)
        }
    };

    // Roots of Q (nonzero ones in case III) hang off E_2. In case Ib the
    // root λ is split out of its orbit and placed last.
    let mut b_groups: Vec<(u32, usize)> = Vec::new();
    let mut split = None;
    for (m, fac) in groups(&q_rest) {
        match lambda {
            Some(l) if case == Case::I && split.is_none() && fac.eval(l).is_zero() => {
                let rest = fac.div_rem(&Poly::linear_root(l)).0;
                if rest.degree() > 0 {
                    b_groups.push((m, rest.degree()));
                }
                split = Some(m);
            }
            _ => b_groups.push((m, fac.degree())),
        }
    }
    let split_index = split.map(|m| {
        b_groups.push((m, 1));
        b_groups.len() - 1
    });
    let mut b_ends = Vec::new();
    for (j, &(m, k)) in b_groups.iter().enumerate() {
        let bj = g.add(format!("B_{}", j + 1), NodeWeight::SelfIntersection(-1), Some(m), k);
        g.link(e2, bj);
        b_ends.push(g.block(format!("ℬ_{}", j + 1), m - 1, k, bj));
    }

    if let Some(l) = lambda {
        let section = match case {
            Case::I if q.eval(l).is_zero() => SectionCase::Ib,
            Case::I => SectionCase::Ia,
            Case::II => SectionCase::II,
            Case::III => SectionCase::III,
        };
        g.section = Some(section);
        let (w0, to) = match section {
            SectionCase::Ia => (0, e2),
            SectionCase::Ib => (-1, b_ends[split_index.expect("λ is a root of Q")]),
            _ => (0, a0_end.expect("A_0 exists")),
        };
        let d0 = g.curve("D_0", w0);
        g.link(f, d0);
        g.link(to, d0);
        for (i, &(end, k)) in a_ends.iter().enumerate() {
            let di = g.add(format!("D_{}", i + 1), NodeWeight::SelfIntersection(0), None, k);
            g.link(f, di);
            g.link(end, di);
        }
    }
    Ok(g)
}

pub fn dual_graph(p: &Poly, q: &Poly) -> Result<DualGraph> {
    build(p, q, None)
}

/// The dual graph plus the sections D_0, ..., D_l through the center `lambda`.
pub fn section_augmented_graph(p: &Poly, q: &Poly, lambda: &Rational) -> Result<DualGraph> {
    build(p, q, Some(lambda))
}
