//! Letters and words in the groupoid of pairs: automorphisms, fibered
//! modifications and reversions.

mod certify;
mod loops;
mod reduce;

pub use certify::{certify_free_family, zeta_word, CheckRecord, FreeFamilyCertificate, Syllable};
pub use loops::{pi1_loop_profile, LoopProfile};
pub use reduce::{reduce_word, reduce_word_with, word_length, Strategy};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::pairs_isomorphic;
use crate::pair::PairClass;
use crate::poly::Poly;
use crate::rational::{serde_rat, Rational};
use crate::triangular::Triangular;

/// Target of the reversion with center `λ`.
///
/// `[Q(w + λ), P]` when `P(0) ≠ 0`; otherwise every center gives `[Q, P]`.
pub fn apply_reversion(c: &PairClass, lambda: &Rational) -> PairClass {
    if c.p.coeff(0).is_zero() {
        c.swapped()
    } else {
        PairClass::new(c.q.shift(lambda), c.p.clone()).expect("degrees")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LetterKind {
    /// `(x, y) ↦ (a·x + b·y, c·y)`
    Aut {
        #[serde(with = "serde_rat")]
        a: Rational,
        #[serde(with = "serde_rat")]
        b: Rational,
        #[serde(with = "serde_rat")]
        c: Rational,
    },
    /// `(x, y) ↦ (a·x + y·R(y), c·y)` with `deg R ≥ 1`
    Fib {
        #[serde(with = "serde_rat")]
        a: Rational,
        #[serde(with = "serde_rat")]
        c: Rational,
        #[serde(rename = "R")]
        r: Poly,
    },
    /// Reversion at `center`; `None` marks a merged reversion whose center
    /// is not determined.
    Rev {
        #[serde(with = "serde_rat::opt")]
        center: Option<Rational>,
    },
    /// Inverse of the reversion at `center` taken from the class it came from.
    RevInv {
        #[serde(with = "serde_rat")]
        center: Rational,
    },
}

impl LetterKind {
    pub fn rev(center: Rational) -> Self {
        LetterKind::Rev { center: Some(center) }
    }

    pub fn from_triangular(t: &Triangular) -> Self {
        if t.is_affine() {
            LetterKind::Aut { a: t.a.clone(), b: t.b(), c: t.c.clone() }
        } else {
            LetterKind::Fib { a: t.a.clone(), c: t.c.clone(), r: t.r.clone() }
        }
    }

    pub fn triangular(&self) -> Option<Triangular> {
        match self {
            LetterKind::Aut { a, b, c } => Some(Triangular::affine(a.clone(), b.clone(), c.clone())),
            LetterKind::Fib { a, c, r } => Some(Triangular::new(a.clone(), r.clone(), c.clone())),
            _ => None,
        }
    }

    pub fn is_reversion(&self) -> bool {
        matches!(self, LetterKind::Rev { .. } | LetterKind::RevInv { .. })
    }

    /// Contribution to word length: automorphisms count 0.
    pub fn length(&self) -> usize {
        usize::from(!matches!(self, LetterKind::Aut { .. }))
    }

    /// Target at a given source, when it is determined by the letter alone.
    pub fn target_at(&self, src: &PairClass) -> Option<PairClass> {
        match self {
            LetterKind::Aut { .. } | LetterKind::Fib { .. } => {
                Some(self.triangular().unwrap().apply(src))
            }
            LetterKind::Rev { center: Some(l) } => Some(apply_reversion(src, l)),
            LetterKind::Rev { center: None } => None,
            LetterKind::RevInv { center } => {
                let back = Triangular::affine(Rational::one(), -center, Rational::one());
                Some(back.apply(&src.swapped()))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Letter {
    pub kind: LetterKind,
    pub source: PairClass,
    pub target: PairClass,
}

impl Letter {
    pub fn new(kind: LetterKind, source: PairClass) -> Result<Letter> {
        let target = kind.target_at(&source).ok_or_else(|| {
            Error::Precondition("a reversion without a center needs an explicit target".into())
        })?;
        Ok(Letter { kind, source, target })
    }

    pub fn inverse(&self) -> Letter {
        let kind = match &self.kind {
            LetterKind::Aut { .. } | LetterKind::Fib { .. } => {
                LetterKind::from_triangular(&self.kind.triangular().unwrap().inverse())
            }
            LetterKind::Rev { center: Some(l) } => LetterKind::RevInv { center: l.clone() },
            LetterKind::Rev { center: None } => LetterKind::Rev { center: None },
            LetterKind::RevInv { center } => LetterKind::rev(center.clone()),
        };
        Letter { kind, source: self.target.clone(), target: self.source.clone() }
    }

    /// Same letter data and representatives (up to constants).
    pub fn same_as(&self, o: &Letter) -> bool {
        self.kind == o.kind && self.source.same_rep(&o.source) && self.target.same_rep(&o.target)
    }
}

/// A composable chain of letters starting at `base`.
#[derive(Clone, Debug)]
pub struct BirWord {
    pub base: PairClass,
    pub letters: Vec<Letter>,
}

impl BirWord {
    pub fn empty(base: PairClass) -> Self {
        BirWord { base, letters: Vec::new() }
    }

    /// Chains letter kinds from `base`, each starting where the previous ended.
    pub fn from_kinds(base: PairClass, kinds: &[LetterKind]) -> Result<Self> {
        let mut w = BirWord::empty(base);
        for k in kinds {
            w.push(k.clone())?;
        }
        Ok(w)
    }

    /// Checks `letters[i].target ≅ letters[i+1].source` and makes the chain
    /// exact by inserting the connecting isomorphism where representatives
    /// differ.
    pub fn from_letters(base: PairClass, letters: Vec<Letter>) -> Result<Self> {
        let mut out = BirWord::empty(base);
        for (i, l) in letters.into_iter().enumerate() {
            let here = out.end().clone();
            if !here.same_rep(&l.source) {
                let w = pairs_isomorphic(&here, &l.source).ok_or_else(|| Error::NotComposable {
                    index: i,
                    reason: format!("{} is not isomorphic to {}", here, l.source),
                })?;
                out.push(LetterKind::from_triangular(&Triangular::from_witness(&here, &w)))?;
            }
            out.letters.push(l);
        }
        Ok(out)
    }

    pub fn push(&mut self, kind: LetterKind) -> Result<()> {
        let l = Letter::new(kind, self.end().clone())?;
        self.letters.push(l);
        Ok(())
    }

    pub fn end(&self) -> &PairClass {
        self.letters.last().map_or(&self.base, |l| &l.target)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BirWord {
        BirWord {
            base: self.end().clone(),
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// `self` followed by `next`, joined by an isomorphism if needed.
    pub fn then(&self, next: &BirWord) -> Result<BirWord> {
        let mut letters = self.letters.clone();
        let here = self.end().clone();
        if !here.same_rep(&next.base) {
            let w = pairs_isomorphic(&here, &next.base).ok_or_else(|| Error::NotComposable {
                index: self.letters.len(),
                reason: format!("{} is not isomorphic to {}", here, next.base),
            })?;
            letters.push(Letter::new(
                LetterKind::from_triangular(&Triangular::from_witness(&here, &w)),
                here,
            )?);
        }
        letters.extend(next.letters.iter().cloned());
        Ok(BirWord { base: self.base.clone(), letters })
    }

    pub fn same_as(&self, o: &BirWord) -> bool {
        self.base.same_rep(&o.base)
            && self.letters.len() == o.letters.len()
            && self.letters.iter().zip(&o.letters).all(|(a, b)| a.same_as(b))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("word serializes")
    }

    pub fn from_json(s: &str) -> Result<BirWord> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Composes two automorphism/fibered letters into one.
pub fn compose_fibered(l1: &Letter, l2: &Letter) -> Result<Letter> {
    let (Some(t1), Some(t2)) = (l1.kind.triangular(), l2.kind.triangular()) else {
        return Err(Error::KindMismatch("both letters must be aut or fib".into()));
    };
    let mid = if l1.target.same_rep(&l2.source) {
        Triangular::identity()
    } else {
        let w = pairs_isomorphic(&l1.target, &l2.source).ok_or_else(|| Error::NotComposable {
            index: 1,
            reason: format!("{} is not isomorphic to {}", l1.target, l2.source),
        })?;
        Triangular::from_witness(&l1.target, &w)
    };
    let t = t1.then(&mid).then(&t2);
    Ok(Letter {
        kind: LetterKind::from_triangular(&t),
        source: l1.source.clone(),
        target: l2.target.clone(),
    })
}

#[derive(Serialize, Deserialize)]
struct LetterRepr {
    #[serde(flatten)]
    kind: LetterKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<PairClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target: Option<PairClass>,
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    base: PairClass,
    letters: Vec<LetterRepr>,
}

impl Serialize for BirWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Sources are implied by chaining; targets are written only where the
        // letter cannot recompute them.
        let letters = self
            .letters
            .iter()
            .map(|l| LetterRepr {
                kind: l.kind.clone(),
                source: None,
                target: l.kind.target_at(&l.source).is_none().then(|| l.target.clone()),
            })
            .collect();
        WordRepr { base: self.base.clone(), letters }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BirWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = WordRepr::deserialize(d)?;
        let mut letters = Vec::new();
        let mut here = r.base.clone();
        for (i, l) in r.letters.into_iter().enumerate() {
            let source = l.source.unwrap_or_else(|| here.clone());
            let target = match (l.kind.target_at(&source), l.target) {
                (Some(t), _) => t,
                (None, Some(t)) => t,
                (None, None) => {
                    return Err(D::Error::custom(format!(
                        "letter {i}: a reversion without a center needs a target"
                    )))
                }
            };
            here = target.clone();
            letters.push(Letter { kind: l.kind, source, target });
        }
        BirWord::from_letters(r.base, letters).map_err(D::Error::custom)
    }
}
