//! Word reduction.
//!
//! Words are first rewritten over three kinds of items: triangular maps, the
//! reversion at center 0 (`Swap`, which exchanges P and Q), and merged
//! reversions with unknown center. A reversion at `λ` is the triangular map
//! `(x + λy, y)` followed by `Swap`; its inverse is `Swap` followed by
//! `(x - λy, y)`. The rules are:
//!
//! * adjacent triangular maps merge, identities vanish;
//! * `Swap T Swap` with `T` affine and `T(0) = 0` on centers collapses to a
//!   diagonal map (two reversions sharing their base point);
//! * `Swap T Swap` with `T` affine moving the base point merges into one
//!   reversion when the middle pair has `deg P = deg Q = 1`. This rule is
//!   only tried when nothing else applies.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BirWord, Letter, LetterKind};
use crate::error::Result;
use crate::pair::PairClass;
use crate::poly::vanishing_order;
use crate::rational::{pow, Rational};
use crate::triangular::Triangular;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Picks uniformly among applicable rewrites with a seeded generator.
    Seeded(u64),
}

#[derive(Clone, Debug)]
enum Item {
    Tri(Triangular),
    Swap,
    Unresolved,
}

#[derive(Clone, Debug)]
struct Node {
    item: Item,
    src: PairClass,
    dst: PairClass,
}

#[derive(Clone, Copy, Debug)]
enum Redex {
    Drop(usize),
    Merge(usize),
    Cancel(usize),
    Diag(usize),
    MergeRev(usize),
}

fn normalize(w: &BirWord) -> Vec<Node> {
    let mut out = Vec::new();
    for l in &w.letters {
        match &l.kind {
            LetterKind::Aut { .. } | LetterKind::Fib { .. } => out.push(Node {
                item: Item::Tri(l.kind.triangular().unwrap()),
                src: l.source.clone(),
                dst: l.target.clone(),
            }),
            LetterKind::Rev { center: Some(lam) } => {
                let t = Triangular::affine(Rational::from_integer(1.into()), lam.clone(), Rational::from_integer(1.into()));
                let mid = t.apply(&l.source);
                out.push(Node { item: Item::Tri(t), src: l.source.clone(), dst: mid.clone() });
                out.push(Node { item: Item::Swap, src: mid, dst: l.target.clone() });
            }
            LetterKind::Rev { center: None } => out.push(Node {
                item: Item::Unresolved,
                src: l.source.clone(),
                dst: l.target.clone(),
            }),
            LetterKind::RevInv { center } => {
                let mid = l.source.swapped();
                let t = Triangular::affine(Rational::from_integer(1.into()), -center, Rational::from_integer(1.into()));
                out.push(Node { item: Item::Swap, src: l.source.clone(), dst: mid.clone() });
                out.push(Node { item: Item::Tri(t), src: mid, dst: l.target.clone() });
            }
        }
    }
    out
}

fn redexes(nodes: &[Node]) -> (Vec<Redex>, Vec<Redex>) {
    let mut primary = Vec::new();
    let mut secondary = Vec::new();
    for i in 0..nodes.len() {
        match &nodes[i].item {
            Item::Tri(t) => {
                if t.is_identity() {
                    primary.push(Redex::Drop(i));
                }
                if matches!(nodes.get(i + 1).map(|n| &n.item), Some(Item::Tri(_))) {
                    primary.push(Redex::Merge(i));
                }
            }
            Item::Swap => match (nodes.get(i + 1).map(|n| &n.item), nodes.get(i + 2).map(|n| &n.item)) {
                (Some(Item::Swap), _) => primary.push(Redex::Cancel(i)),
                (Some(Item::Tri(t)), Some(Item::Swap)) if t.is_affine() => {
                    if t.b().is_zero() {
                        primary.push(Redex::Diag(i));
                    } else {
                        let mid = &nodes[i + 1].src;
                        if mid.p.degree() == 1 && mid.q.degree() == 1 {
                            secondary.push(Redex::MergeRev(i));
                        }
                    }
                }
                _ => {}
            },
            Item::Unresolved => {}
        }
    }
    (primary, secondary)
}

/// `Swap ∘ diag(a, c) ∘ Swap` as a diagonal map out of `[Q, P]`, where the
/// middle pair is `(P, Q)`.
fn conjugate_diag(t: &Triangular, mid: &PairClass) -> Triangular {
    let r0 = vanishing_order(&mid.p).expect("nonzero");
    let s0 = vanishing_order(&mid.q).expect("nonzero");
    let kappa = if r0 == 0 { &t.a / &t.c } else { pow(&t.a, r0 as i64 + 1) / &t.c };
    let rho = if s0 == 0 { &kappa / &t.a } else { pow(&kappa, s0 as i64 + 1) / &t.a };
    Triangular::affine(kappa, Rational::zero(), rho)
}

fn apply(nodes: &mut Vec<Node>, r: Redex) {
    match r {
        Redex::Drop(i) => {
            nodes.remove(i);
        }
        Redex::Merge(i) => {
            let (Item::Tri(t1), Item::Tri(t2)) = (&nodes[i].item, &nodes[i + 1].item) else {
                unreachable!()
            };
            let t = t1.then(t2);
            let dst = nodes[i + 1].dst.clone();
            nodes[i] = Node { item: Item::Tri(t), src: nodes[i].src.clone(), dst };
            nodes.remove(i + 1);
        }
        Redex::Cancel(i) => {
            nodes.drain(i..i + 2);
        }
        Redex::Diag(i) => {
            let Item::Tri(t) = &nodes[i + 1].item else { unreachable!() };
            let d = conjugate_diag(t, &nodes[i + 1].src);
            let src = nodes[i].src.clone();
            let dst = nodes[i + 2].dst.clone();
            debug_assert!(d.apply(&src).same_rep(&dst));
            nodes.splice(i..i + 3, [Node { item: Item::Tri(d), src, dst }]);
        }
        Redex::MergeRev(i) => {
            let src = nodes[i].src.clone();
            let dst = nodes[i + 2].dst.clone();
            nodes.splice(i..i + 3, [Node { item: Item::Unresolved, src, dst }]);
        }
    }
}

fn pick(cands: &[Redex], strategy: Strategy, rng: &mut Option<ChaCha8Rng>) -> Redex {
    match strategy {
        Strategy::Leftmost => cands[0],
        Strategy::Rightmost => *cands.last().unwrap(),
        Strategy::Seeded(_) => {
            let r = rng.as_mut().expect("seeded");
            cands[r.gen_range(0..cands.len())]
        }
    }
}

fn denormalize(base: &PairClass, nodes: Vec<Node>) -> BirWord {
    let mut letters: Vec<Letter> = Vec::new();
    let mut pending: Option<Node> = None;
    let emit_tri = |letters: &mut Vec<Letter>, n: Node| {
        let Item::Tri(t) = &n.item else { unreachable!() };
        letters.push(Letter { kind: LetterKind::from_triangular(t), source: n.src, target: n.dst });
    };
    for n in nodes {
        match n.item {
            Item::Tri(_) => {
                if let Some(p) = pending.take() {
                    emit_tri(&mut letters, p);
                }
                pending = Some(n);
            }
            Item::Swap => {
                let mut src = n.src.clone();
                let mut center = Rational::zero();
                if let Some(p) = pending.take() {
                    let Item::Tri(t) = &p.item else { unreachable!() };
                    if t.is_affine() && !t.b().is_zero() {
                        center = t.b() / &t.c;
                        let head = Triangular::affine(t.a.clone(), Rational::zero(), t.c.clone());
                        src = p.src.clone();
                        if !head.is_identity() {
                            let mid = head.apply(&p.src);
                            letters.push(Letter {
                                kind: LetterKind::from_triangular(&head),
                                source: p.src.clone(),
                                target: mid.clone(),
                            });
                            src = mid;
                        }
                    } else {
                        emit_tri(&mut letters, p);
                    }
                }
                letters.push(Letter { kind: LetterKind::rev(center), source: src, target: n.dst });
            }
            Item::Unresolved => {
                if let Some(p) = pending.take() {
                    emit_tri(&mut letters, p);
                }
                letters.push(Letter { kind: LetterKind::Rev { center: None }, source: n.src, target: n.dst });
            }
        }
    }
    if let Some(p) = pending.take() {
        emit_tri(&mut letters, p);
    }
    BirWord { base: base.clone(), letters }
}

pub fn reduce_word_with(w: &BirWord, strategy: Strategy) -> Result<BirWord> {
    // Re-chain to validate composability and make representatives exact.
    let w = BirWord::from_letters(w.base.clone(), w.letters.clone())?;
    let mut nodes = normalize(&w);
    let mut rng = match strategy {
        Strategy::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    loop {
        let (primary, secondary) = redexes(&nodes);
        let cands = if primary.is_empty() { secondary } else { primary };
        if cands.is_empty() {
            break;
        }
        let r = pick(&cands, strategy, &mut rng);
        apply(&mut nodes, r);
    }
    Ok(denormalize(&w.base, nodes))
}

pub fn reduce_word(w: &BirWord) -> Result<BirWord> {
    reduce_word_with(w, Strategy::Leftmost)
}

/// Fibered letters and reversions count 1, automorphisms 0.
pub fn word_length(w: &BirWord) -> usize {
    w.letters.iter().map(|l| l.kind.length()).sum()
}

impl BirWord {
    /// Reduction does not shorten the word.
    pub fn is_reduced(&self) -> bool {
        reduce_word(self).is_ok_and(|r| word_length(&r) == word_length(self))
    }

    pub fn reduced_length(&self) -> Result<usize> {
        reduce_word(self).map(|w| word_length(&w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rational::int;

    fn base() -> PairClass {
        PairClass::from_ints(&[-2, 0, 1], &[-3, 0, 1]).unwrap()
    }

    fn rev(l: i64) -> LetterKind {
        LetterKind::rev(int(l))
    }

    #[test]
    fn reversion_and_inverse_cancel() {
        for l in [0, 1, 5] {
            let w = BirWord::from_kinds(base(), &[rev(l), LetterKind::RevInv { center: int(l) }]).unwrap();
            let r = reduce_word(&w).unwrap();
            assert!(r.is_empty(), "center {l}: {r:?}");
        }
        let w = BirWord::from_kinds(base(), &[rev(0), rev(0)]).unwrap();
        assert!(reduce_word(&w).unwrap().is_empty());
    }

    #[test]
    fn inverse_center_is_zero_on_the_target() {
        // rev(λ) then rev(0) comes back up to a translation.
        let w = BirWord::from_kinds(base(), &[rev(3), rev(0)]).unwrap();
        let r = reduce_word(&w).unwrap();
        assert_eq!(word_length(&r), 0);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn fibered_pair_cancels() {
        let f = |r: &[i64]| LetterKind::Fib { a: int(1), c: int(1), r: Poly::from_ints(r) };
        let w = BirWord::from_kinds(base(), &[f(&[0, 1]), f(&[0, -1])]).unwrap();
        assert!(reduce_word(&w).unwrap().is_empty());
    }

    #[test]
    fn distinct_base_points_stay() {
        let w = BirWord::from_kinds(base(), &[rev(0), rev(1)]).unwrap();
        let r = reduce_word(&w).unwrap();
        assert_eq!(word_length(&r), 2);
        assert!(r.is_reduced());
        let again = reduce_word(&r).unwrap();
        assert!(again.same_as(&r));
    }

    #[test]
    fn linear_pairs_merge_reversions() {
        let b = PairClass::from_ints(&[-1, 1], &[-2, 1]).unwrap();
        let w = BirWord::from_kinds(b, &[rev(0), rev(1)]).unwrap();
        let r = reduce_word(&w).unwrap();
        assert_eq!(word_length(&r), 1);
        assert!(matches!(r.letters.last().unwrap().kind, LetterKind::Rev { center: None }));
    }

    #[test]
    fn diagonal_between_reversions() {
        // rev(0), then the automorphism (-x, y) of [w^2 - 2, w^2 - 3]'s swap, then rev(0) back.
        let w = BirWord::from_kinds(
            base(),
            &[rev(0), LetterKind::Aut { a: int(-1), b: int(0), c: int(1) }, rev(0)],
        )
        .unwrap();
        let r = reduce_word(&w).unwrap();
        assert_eq!(word_length(&r), 0);
        assert!(r.end().same_rep(&w.end().clone()));
    }
}
