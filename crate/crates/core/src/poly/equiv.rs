use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use super::Poly;
use crate::rational::{int, magnitude_cmp, pow, rational_roots, serde_rat, Rational};

/// Parameters of a substitution `p2(w) = α p(βw)` and/or `q2(w) = γ q(δw + t)`.
///
/// Scale solutions fill `alpha`/`beta` and leave the rest absent. Affine
/// solutions fill `gamma`/`delta`/`t` and keep `alpha = beta = 1`, so one
/// value can also describe a whole pair isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionWitness {
    #[serde(with = "serde_rat")]
    pub alpha: Rational,
    #[serde(with = "serde_rat")]
    pub beta: Rational,
    #[serde(with = "serde_rat::opt", default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Rational>,
    #[serde(with = "serde_rat::opt", default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Rational>,
    #[serde(with = "serde_rat::opt", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Rational>,
}

impl SubstitutionWitness {
    pub fn scale(alpha: Rational, beta: Rational) -> Self {
        SubstitutionWitness { alpha, beta, gamma: None, delta: None, t: None }
    }

    pub fn affine(gamma: Rational, delta: Rational, t: Rational) -> Self {
        SubstitutionWitness {
            alpha: Rational::one(),
            beta: Rational::one(),
            gamma: Some(gamma),
            delta: Some(delta),
            t: Some(t),
        }
    }

    /// Scale part taken from `s`, affine part from `a`.
    pub fn combine(s: &SubstitutionWitness, a: &SubstitutionWitness) -> Self {
        SubstitutionWitness {
            alpha: s.alpha.clone(),
            beta: s.beta.clone(),
            gamma: Some(a.gamma_or_one()),
            delta: Some(a.delta_or_one()),
            t: Some(a.t_or_zero()),
        }
    }

    pub fn gamma_or_one(&self) -> Rational {
        self.gamma.clone().unwrap_or_else(Rational::one)
    }

    pub fn delta_or_one(&self) -> Rational {
        self.delta.clone().unwrap_or_else(Rational::one)
    }

    pub fn t_or_zero(&self) -> Rational {
        self.t.clone().unwrap_or_else(Rational::zero)
    }

    pub fn is_affine(&self) -> bool {
        self.gamma.is_some()
    }

    /// `α p(βw)`
    pub fn apply_scale(&self, p: &Poly) -> Poly {
        p.dilate(&self.beta).scale(&self.alpha)
    }

    /// `γ q(δw + t)`
    pub fn apply_affine(&self, q: &Poly) -> Poly {
        q.compose_linear(&self.delta_or_one(), &self.t_or_zero())
            .scale(&self.gamma_or_one())
    }

    /// Applies `self` first, then `next`.
    pub fn then(&self, next: &SubstitutionWitness) -> Self {
        let alpha = &self.alpha * &next.alpha;
        let beta = &self.beta * &next.beta;
        if !self.is_affine() && !next.is_affine() {
            return SubstitutionWitness::scale(alpha, beta);
        }
        let (d1, t1) = (self.delta_or_one(), self.t_or_zero());
        let (d2, t2) = (next.delta_or_one(), next.t_or_zero());
        SubstitutionWitness {
            alpha,
            beta,
            gamma: Some(self.gamma_or_one() * next.gamma_or_one()),
            delta: Some(&d1 * &d2),
            t: Some(&d1 * &t2 + t1),
        }
    }

    pub fn inverse(&self) -> Self {
        let alpha = self.alpha.recip();
        let beta = self.beta.recip();
        if !self.is_affine() {
            return SubstitutionWitness::scale(alpha, beta);
        }
        let d = self.delta_or_one();
        SubstitutionWitness {
            alpha,
            beta,
            gamma: Some(self.gamma_or_one().recip()),
            delta: Some(d.recip()),
            t: Some(-self.t_or_zero() / d),
        }
    }

    /// Ordering (|β|, β, |α|, α, |δ|, δ, |γ|, γ, |t|, t), positive sign first on ties.
    pub fn canonical_cmp(&self, o: &SubstitutionWitness) -> Ordering {
        magnitude_cmp(&self.beta, &o.beta)
            .then_with(|| magnitude_cmp(&self.alpha, &o.alpha))
            .then_with(|| magnitude_cmp(&self.delta_or_one(), &o.delta_or_one()))
            .then_with(|| magnitude_cmp(&self.gamma_or_one(), &o.gamma_or_one()))
            .then_with(|| magnitude_cmp(&self.t_or_zero(), &o.t_or_zero()))
    }
}

/// One-parameter family for monomial-type inputs.
///
/// Source is `c (w - s)^n`, target `c2 (w - s2)^n`; for every nonzero parameter
/// `x` the witness is `(ratio / x^n, x)` with shift `t = s - x·s2`. Pure scale
/// families have `s = s2 = 0` and `affine = false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialFamily {
    pub degree: usize,
    #[serde(with = "serde_rat")]
    pub ratio: Rational,
    #[serde(with = "serde_rat")]
    pub src_shift: Rational,
    #[serde(with = "serde_rat")]
    pub dst_shift: Rational,
    pub affine: bool,
}

impl MonomialFamily {
    pub fn witness_at(&self, x: &Rational) -> SubstitutionWitness {
        assert!(!x.is_zero(), "family parameter must be nonzero");
        let lead = &self.ratio / pow(x, self.degree as i64);
        if self.affine {
            let t = &self.src_shift - x * &self.dst_shift;
            SubstitutionWitness::affine(lead, x.clone(), t)
        } else {
            SubstitutionWitness::scale(lead, x.clone())
        }
    }

    /// The member at parameter 1, used as the family's canonical representative.
    pub fn representative(&self) -> SubstitutionWitness {
        self.witness_at(&Rational::one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SolutionSet {
    Empty,
    Finite { witnesses: Vec<SubstitutionWitness> },
    OneParameterMonomial { family: MonomialFamily },
}

impl SolutionSet {
    fn finite(mut ws: Vec<SubstitutionWitness>) -> Self {
        if ws.is_empty() {
            return SolutionSet::Empty;
        }
        ws.sort_by(|a, b| a.canonical_cmp(b));
        ws.dedup();
        SolutionSet::Finite { witnesses: ws }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }

    pub fn is_family(&self) -> bool {
        matches!(self, SolutionSet::OneParameterMonomial { .. })
    }

    /// Smallest witness in the canonical order; a family yields its representative.
    pub fn best(&self) -> Option<SubstitutionWitness> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Finite { witnesses } => witnesses.first().cloned(),
            SolutionSet::OneParameterMonomial { family } => Some(family.representative()),
        }
    }

    /// Finite members, or family members sampled at the given parameters.
    pub fn sample(&self, params: &[Rational]) -> Vec<SubstitutionWitness> {
        match self {
            SolutionSet::Empty => Vec::new(),
            SolutionSet::Finite { witnesses } => witnesses.clone(),
            SolutionSet::OneParameterMonomial { family } => params
                .iter()
                .filter(|x| !x.is_zero())
                .map(|x| family.witness_at(x))
                .collect(),
        }
    }

    pub fn len_hint(&self) -> Option<usize> {
        match self {
            SolutionSet::Empty => Some(0),
            SolutionSet::Finite { witnesses } => Some(witnesses.len()),
            SolutionSet::OneParameterMonomial { .. } => None,
        }
    }
}

/// All `(α, β)` with `p2(w) = α p(βw)`.
pub fn scale_equivalences(p: &Poly, p2: &Poly) -> SolutionSet {
    if p.is_zero() || p2.is_zero() || p.degree() != p2.degree() {
        return SolutionSet::Empty;
    }
    let sup = p.support();
    if sup != p2.support() {
        return SolutionSet::Empty;
    }
    if sup.len() == 1 {
        let n = sup[0];
        return SolutionSet::OneParameterMonomial {
            family: MonomialFamily {
                degree: n,
                ratio: p2.coeff(n) / p.coeff(n),
                src_shift: Rational::zero(),
                dst_shift: Rational::zero(),
                affine: false,
            },
        };
    }
    let (i, j) = (sup[0], sup[1]);
    let rho = (p2.coeff(j) / p2.coeff(i)) / (p.coeff(j) / p.coeff(i));
    let ws = rational_roots(&rho, (j - i) as u32)
        .into_iter()
        .filter_map(|beta| {
            let alpha = p2.coeff(i) / (p.coeff(i) * pow(&beta, i as i64));
            let w = SubstitutionWitness::scale(alpha, beta);
            (w.apply_scale(p) == *p2).then_some(w)
        })
        .collect();
    SolutionSet::finite(ws)
}

/// Shift that kills the subleading coefficient: returns `(q(w + s), s)`.
///
/// Constants are returned unchanged with `s = 0`.
pub fn depress(q: &Poly) -> (Poly, Rational) {
    let n = q.degree();
    if q.is_zero() || n == 0 {
        return (q.clone(), Rational::zero());
    }
    let s = -q.coeff(n - 1) / (q.leading() * int(n as i64));
    (q.shift(&s), s)
}

/// All `(γ, δ, t)` with `q2(w) = γ q(δw + t)`; `t = 0` is forced unless
/// `allow_shift`.
pub fn affine_equivalences(q: &Poly, q2: &Poly, allow_shift: bool) -> SolutionSet {
    if q.is_zero() || q2.is_zero() || q.degree() != q2.degree() {
        return SolutionSet::Empty;
    }
    let (dq, s) = depress(q);
    let (dq2, s2) = depress(q2);
    match scale_equivalences(&dq, &dq2) {
        SolutionSet::Empty => SolutionSet::Empty,
        SolutionSet::Finite { witnesses } => {
            let ws = witnesses
                .into_iter()
                .map(|w| {
                    let t = &s - &w.beta * &s2;
                    SubstitutionWitness::affine(w.alpha, w.beta, t)
                })
                .filter(|w| allow_shift || w.t_or_zero().is_zero())
                .filter(|w| w.apply_affine(q) == *q2)
                .collect();
            SolutionSet::finite(ws)
        }
        SolutionSet::OneParameterMonomial { family } => {
            let fam = MonomialFamily {
                degree: family.degree,
                ratio: family.ratio,
                src_shift: s.clone(),
                dst_shift: s2.clone(),
                affine: true,
            };
            if allow_shift || (s.is_zero() && s2.is_zero()) {
                SolutionSet::OneParameterMonomial { family: fam }
            } else if !s.is_zero() && !s2.is_zero() {
                // t = s - δ s2 = 0 pins δ.
                let w = fam.witness_at(&(&s / &s2));
                SolutionSet::finite(vec![w])
            } else {
                SolutionSet::Empty
            }
        }
    }
}

/// Self-equivalences of `p`: scale pairs `(α, β)` without shift, affine
/// triples `(γ, δ, t)` with shift.
pub fn stabilizer(p: &Poly, allow_shift: bool) -> SolutionSet {
    if allow_shift {
        affine_equivalences(p, p, true)
    } else {
        scale_equivalences(p, p)
    }
}
