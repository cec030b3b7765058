//! Isomorphism of pairs, automorphisms of pairs, and equivalence of reversions.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::pair::PairClass;
use crate::poly::{
    affine_equivalences, scale_equivalences, stabilizer, vanishing_order, SolutionSet,
    SubstitutionWitness,
};
use crate::rational::{pow, Rational};
use crate::triangular::Triangular;

/// `(α, β, γ, δ, t)` with `P' = αP(βw)` and `Q' = γQ(δw + t)`.
pub type IsoWitness = SubstitutionWitness;

/// Smallest witness for `[P, Q] ≅ [P', Q']`, or `None`.
///
/// The shift `t` is allowed only when both `P(0)` and `P'(0)` are nonzero;
/// mixed vanishing at 0 is never isomorphic.
pub fn pairs_isomorphic(c1: &PairClass, c2: &PairClass) -> Option<IsoWitness> {
    let z1 = c1.p.coeff(0).is_zero();
    let z2 = c2.p.coeff(0).is_zero();
    if z1 != z2 {
        return None;
    }
    let s = scale_equivalences(&c1.p, &c2.p).best()?;
    let a = affine_equivalences(&c1.q, &c2.q, !z1).best()?;
    Some(SubstitutionWitness::combine(&s, &a))
}

/// Re-substitutes a witness; used to double-check solver output.
pub fn witness_holds(c1: &PairClass, c2: &PairClass, w: &IsoWitness) -> bool {
    w.apply_scale(&c1.p) == c2.p && w.apply_affine(&c1.q) == c2.q
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcConstraint {
    /// Self-equivalences of Q that the (b, c) part must realize.
    pub q_stabilizer: SolutionSet,
    pub relation: String,
}

/// Automorphisms `(x, y) ↦ (a·x + y·R(y), c·y)` of the pair, as constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutPairDescription {
    pub a_constraint: SolutionSet,
    pub b_free: bool,
    pub bc_constraint: BcConstraint,
    pub r0: usize,
}

impl AutPairDescription {
    /// Concrete affine automorphisms for the sampled parameters.
    ///
    /// `params` drives every free choice: `a` and the Q-stabilizer element
    /// when those are one-parameter families, and `b` when it is free.
    pub fn sample(&self, params: &[Rational]) -> Vec<Triangular> {
        let a_vals: Vec<Rational> =
            self.a_constraint.sample(params).into_iter().map(|w| w.beta).collect();
        let q_vals = self.bc_constraint.q_stabilizer.sample(params);
        let mut b_vals = vec![Rational::zero()];
        if self.b_free {
            b_vals.extend(params.iter().filter(|x| !x.is_zero()).cloned());
        }
        let mut out = Vec::new();
        for a in &a_vals {
            for qw in &q_vals {
                if self.r0 == 0 {
                    let c = a * qw.delta_or_one();
                    let b = a * qw.t_or_zero();
                    out.push(Triangular::affine(a.clone(), b, c));
                } else {
                    let c = pow(a, self.r0 as i64 + 1) * &qw.beta;
                    for b in &b_vals {
                        out.push(Triangular::affine(a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
        out
    }
}

pub fn aut_pair_group(c: &PairClass) -> AutPairDescription {
    let r0 = vanishing_order(&c.p).expect("nonzero P");
    let a_constraint = stabilizer(&c.p, false);
    let bc_constraint = if r0 == 0 {
        BcConstraint {
            q_stabilizer: stabilizer(&c.q, true),
            relation: "Q((c·w + b)/a) ∝ Q(w): c = a·δ, b = a·t for (γ, δ, t) fixing Q".into(),
        }
    } else {
        BcConstraint {
            q_stabilizer: stabilizer(&c.q, false),
            relation: format!(
                "Q(c·w / a^{}) ∝ Q(w): c = a^{}·β for (α, β) fixing Q; b free",
                r0 + 1,
                r0 + 1
            ),
        }
    };
    AutPairDescription { a_constraint, b_free: r0 >= 1, bc_constraint, r0 }
}

/// Reversions at `λ1` and `λ2` give isomorphic targets.
pub fn reversions_equivalent_by_targets(c: &PairClass, l1: &Rational, l2: &Rational) -> bool {
    if c.p.coeff(0).is_zero() {
        return true;
    }
    let t1 = PairClass::new(c.q.shift(l1), c.p.clone()).expect("degrees");
    let t2 = PairClass::new(c.q.shift(l2), c.p.clone()).expect("degrees");
    pairs_isomorphic(&t1, &t2).is_some()
}

/// Some automorphism of the pair moves `λ1` to `λ2`.
///
/// With `a = 1` the automorphisms of a pair with `P(0) ≠ 0` are the maps
/// `(x, y) ↦ (x + b·y, c·y)` where `m(w) = c·w + b` fixes Q up to a constant;
/// such a map sends `λ1` to `λ2` exactly when `m(λ2) = λ1`.
pub fn reversions_equivalent_by_transport(c: &PairClass, l1: &Rational, l2: &Rational) -> bool {
    if c.p.coeff(0).is_zero() {
        return true;
    }
    match stabilizer(&c.q, true) {
        SolutionSet::Empty => false,
        SolutionSet::Finite { witnesses } => witnesses
            .iter()
            .any(|m| m.delta_or_one() * l2 + m.t_or_zero() == *l1),
        SolutionSet::OneParameterMonomial { family } => {
            // Q = k(w - s)^n: the maps w ↦ δ(w - s) + s, for every δ ≠ 0.
            let s = &family.src_shift;
            (l1 == s) == (l2 == s)
        }
    }
}

pub fn reversions_equivalent(c: &PairClass, l1: &Rational, l2: &Rational) -> bool {
    let r = reversions_equivalent_by_targets(c, l1, l2);
    debug_assert_eq!(r, reversions_equivalent_by_transport(c, l1, l2));
    r
}

/// `(1, 1, 1, 1, 0)`
pub fn identity_witness() -> IsoWitness {
    SubstitutionWitness::affine(Rational::one(), Rational::one(), Rational::zero())
}
