//! Polynomial pairs `(P, Q)` and the construction data attached to them.

mod equations;
mod graph;
mod report;

pub use equations::{emit_equations, EquationTriple, Term};
pub use graph::{dual_graph, section_augmented_graph, DualGraph, DualNode, NodeWeight, SectionCase};
pub use report::{surface_report, FiberMultiplicity, Singularity, SingularityKind, SurfaceReport};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    I,
    II,
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        })
    }
}

pub fn classify_case(p: &Poly, q: &Poly) -> Result<Case> {
    check_degrees(p, q)?;
    let p0 = p.coeff(0).is_zero();
    let q0 = q.coeff(0).is_zero();
    Ok(match (p0, q0) {
        (false, _) => Case::I,
        (true, false) => Case::II,
        (true, true) => Case::III,
    })
}

fn check_degrees(p: &Poly, q: &Poly) -> Result<()> {
    if p.is_zero() || p.degree() < 1 {
        return Err(Error::DegreeTooSmall("P"));
    }
    if q.is_zero() || q.degree() < 1 {
        return Err(Error::DegreeTooSmall("Q"));
    }
    Ok(())
}

/// A representative `(P, Q)` of an isomorphism class `[P, Q]`.
///
/// Equality is class equality: `==` runs the isomorphism solver. Compare
/// `p`/`q` directly for representative equality.
#[derive(Clone, Debug)]
pub struct PairClass {
    pub p: Poly,
    pub q: Poly,
    case: Case,
}

impl PairClass {
    pub fn new(p: Poly, q: Poly) -> Result<Self> {
        let case = classify_case(&p, &q)?;
        Ok(PairClass { p, q, case })
    }

    pub fn from_ints(p: &[i64], q: &[i64]) -> Result<Self> {
        PairClass::new(Poly::from_ints(p), Poly::from_ints(q))
    }

    pub fn case(&self) -> Case {
        self.case
    }

    /// `a = deg P + 1`
    pub fn a(&self) -> usize {
        self.p.degree() + 1
    }

    /// `b = deg Q + 1`
    pub fn b(&self) -> usize {
        self.q.degree() + 1
    }

    /// `[Q, P]`
    pub fn swapped(&self) -> PairClass {
        PairClass::new(self.q.clone(), self.p.clone()).expect("degrees already checked")
    }

    /// `[P(w + s), Q(w + t)]`
    pub fn shifted(&self, s: &Rational, t: &Rational) -> PairClass {
        PairClass::new(self.p.shift(s), self.q.shift(t)).expect("shifts keep degrees")
    }

    /// Same representative up to nonzero constant factors.
    pub fn same_rep(&self, other: &PairClass) -> bool {
        self.p.constant_ratio(&other.p).is_some() && self.q.constant_ratio(&other.q).is_some()
    }

    pub fn is_isomorphic(&self, other: &PairClass) -> bool {
        crate::moduli::pairs_isomorphic(self, other).is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pair serializes")
    }
}

impl PartialEq for PairClass {
    fn eq(&self, other: &Self) -> bool {
        self.is_isomorphic(other)
    }
}

impl Eq for PairClass {}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.p, self.q)
    }
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    #[serde(rename = "P")]
    p: Poly,
    #[serde(rename = "Q")]
    q: Poly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    case: Option<Case>,
}

impl Serialize for PairClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairRepr { p: self.p.clone(), q: self.q.clone(), case: Some(self.case) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PairClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PairRepr::deserialize(d)?;
        let c = PairClass::new(r.p, r.q).map_err(D::Error::custom)?;
        if let Some(tag) = r.case {
            if tag != c.case {
                return Err(D::Error::custom(format!(
                    "case tag {tag} does not match computed case {}",
                    c.case
                )));
            }
        }
        Ok(c)
    }
}
