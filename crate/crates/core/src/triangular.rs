//! Triangular maps `(x, y) ↦ (a·x + y·R(y), c·y)` and their action on pair
//! representatives and reversion centers.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::pair::PairClass;
use crate::poly::{vanishing_order, Poly, SubstitutionWitness};
use crate::rational::{pow, serde_rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangular {
    #[serde(with = "serde_rat")]
    pub a: Rational,
    #[serde(rename = "R")]
    pub r: Poly,
    #[serde(with = "serde_rat")]
    pub c: Rational,
}

impl Triangular {
    pub fn new(a: Rational, r: Poly, c: Rational) -> Self {
        assert!(!a.is_zero() && !c.is_zero(), "a and c must be nonzero");
        Triangular { a, r, c }
    }

    /// `(x, y) ↦ (a·x + b·y, c·y)`
    pub fn affine(a: Rational, b: Rational, c: Rational) -> Self {
        Triangular::new(a, Poly::constant(b), c)
    }

    pub fn identity() -> Self {
        Triangular::affine(Rational::one(), Rational::zero(), Rational::one())
    }

    /// `R(0)`
    pub fn b(&self) -> Rational {
        self.r.coeff(0)
    }

    /// Affine maps have constant `R`; anything else is a fibered modification.
    pub fn is_affine(&self) -> bool {
        self.r.is_zero() || self.r.degree() == 0
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.c.is_one() && self.r.is_zero()
    }

    /// Applies `self` first, then `next`.
    pub fn then(&self, next: &Triangular) -> Triangular {
        let r = &self.r.scale(&next.a) + &next.r.dilate(&self.c).scale(&self.c);
        Triangular::new(&self.a * &next.a, r, &self.c * &next.c)
    }

    pub fn inverse(&self) -> Triangular {
        // x = (x' - y R(y)) / a with y = y'/c
        let ci = self.c.recip();
        let ai = self.a.recip();
        let r = self.r.dilate(&ci).scale(&(-(&ai * &ci)));
        Triangular::new(ai, r, ci)
    }

    /// Where a center `λ` on the source lands on the target: `(aλ - b)/c`.
    pub fn move_center(&self, lambda: &Rational) -> Rational {
        (&self.a * lambda - self.b()) / &self.c
    }

    /// Target representative: `P(w/a)` and either `Q((c·w + b)/a)` when
    /// `P(0) ≠ 0`, or `Q(c·w / a^(r0+1))` when 0 is a root of order `r0`.
    pub fn transform(&self, p: &Poly, q: &Poly) -> (Poly, Poly) {
        let ai = self.a.recip();
        let p2 = p.dilate(&ai);
        let r0 = vanishing_order(p).expect("nonzero P");
        let q2 = if r0 == 0 {
            q.compose_linear(&(&self.c * &ai), &(self.b() * &ai))
        } else {
            q.dilate(&(&self.c / pow(&self.a, r0 as i64 + 1)))
        };
        (p2, q2)
    }

    pub fn apply(&self, src: &PairClass) -> PairClass {
        let (p, q) = self.transform(&src.p, &src.q);
        PairClass::new(p, q).expect("transform keeps degrees")
    }

    /// True when the map sends the representative to itself up to constants.
    pub fn fixes(&self, src: &PairClass) -> bool {
        self.apply(src).same_rep(src)
    }

    /// The affine map realizing an isomorphism witness out of `src`.
    pub fn from_witness(src: &PairClass, w: &SubstitutionWitness) -> Triangular {
        let beta = &w.beta;
        let delta = w.delta_or_one();
        let t = w.t_or_zero();
        let r0 = vanishing_order(&src.p).expect("nonzero P");
        if r0 == 0 {
            Triangular::affine(beta.recip(), t / beta, delta / beta)
        } else {
            Triangular::affine(beta.recip(), Rational::zero(), delta / pow(beta, r0 as i64 + 1))
        }
    }
}
