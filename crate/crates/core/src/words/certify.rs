//! The ζ words around carpet squares and free-family certificates.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{reduce_word, word_length, BirWord, LetterKind};
use crate::error::{Error, Result};
use crate::moduli::pairs_isomorphic;
use crate::pair::{Case, PairClass};
use crate::rational::{fmt_rational, serde_rat, serde_rat::vec as serde_rat_vec, Rational};

fn check_type_i(base: &PairClass) -> Result<()> {
    if base.case() != Case::I {
        return Err(Error::Precondition(format!("base {base} must be of case I, got {}", base.case())));
    }
    Ok(())
}

fn iso_text(l: &PairClass, r: &PairClass) -> String {
    match pairs_isomorphic(l, r) {
        Some(w) => format!("{l} ≅ {r} via {}", serde_json::to_string(&w).expect("witness")),
        None => format!("{l} ≇ {r}"),
    }
}

/// The closed word `[P, Q] → [Q, P] → [P(w+a), Q] → [Q(w+a), P] → [P, Q]`.
///
/// On representatives the centers are `0, a, a, -a`; the last reversion
/// lands on `(P, Q(w+a))` and a translation `(x - a·y, y)` closes the loop
/// exactly.
pub fn zeta_word(base: &PairClass, a: &Rational) -> Result<BirWord> {
    check_type_i(base)?;
    if a.is_zero() {
        return Err(Error::Precondition("ζ needs a nonzero center".into()));
    }
    let (p, q) = (&base.p, &base.q);
    let cls = |p2, q2| PairClass::new(p2, q2).expect("degrees");
    let expected = [
        cls(q.clone(), p.clone()),
        cls(p.shift(a), q.clone()),
        cls(q.shift(a), p.clone()),
        base.clone(),
    ];
    let square = [base.clone(), expected[0].clone(), expected[1].clone(), expected[2].clone()];
    for i in 0..4 {
        for j in i + 1..4 {
            if let Some(w) = pairs_isomorphic(&square[i], &square[j]) {
                return Err(Error::Precondition(format!(
                    "square classes coincide: {} ≅ {} via {}",
                    square[i],
                    square[j],
                    serde_json::to_string(&w).expect("witness")
                )));
            }
        }
    }
    let one = Rational::one();
    let kinds = [
        LetterKind::rev(Rational::zero()),
        LetterKind::rev(a.clone()),
        LetterKind::rev(a.clone()),
        LetterKind::rev(-a),
        LetterKind::Aut { a: one.clone(), b: -a, c: one },
    ];
    let w = BirWord::from_kinds(base.clone(), &kinds)?;
    let reached = [&w.letters[0].target, &w.letters[1].target, &w.letters[2].target, w.end()];
    for (got, want) in reached.into_iter().zip(&expected) {
        if !got.is_isomorphic(want) {
            return Err(Error::Precondition(format!(
                "reversion target {got} is not isomorphic to {want}"
            )));
        }
    }
    Ok(w)
}

/// `ζ_a` or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syllable {
    #[serde(with = "serde_rat")]
    pub a: Rational,
    pub inverse: bool,
}

impl Syllable {
    fn sign(&self) -> char {
        if self.inverse {
            '-'
        } else {
            '+'
        }
    }
}

/// Product of syllables in composition order: the last syllable acts first.
fn syllable_word(base: &PairClass, zetas: &BTreeMap<String, BirWord>, syl: &[Syllable]) -> Result<BirWord> {
    let mut w = BirWord::empty(base.clone());
    for s in syl.iter().rev() {
        let z = &zetas[&fmt_rational(&s.a)];
        w = if s.inverse { w.then(&z.inverse())? } else { w.then(z)? };
    }
    Ok(w)
}

/// Expected reduced length: 4 per syllable, minus 2 wherever `ζ_a` is
/// directly followed (in composition order) by some `ζ_b^-1`, since the
/// outer reversions at 0 cancel there.
pub fn expected_length(syl: &[Syllable]) -> usize {
    let cancels = syl.windows(2).filter(|p| !p[0].inverse && p[1].inverse).count();
    4 * syl.len() - 2 * cancels
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub condition: String,
    #[serde(with = "serde_rat")]
    pub a: Rational,
    #[serde(with = "serde_rat")]
    pub b: Rational,
    pub left: PairClass,
    pub right: PairClass,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeFamilyCertificate {
    pub base: PairClass,
    #[serde(with = "serde_rat_vec")]
    pub family: Vec<Rational>,
    pub checks: Vec<CheckRecord>,
    pub max_syllables: usize,
    pub words_checked: usize,
    pub min_length: usize,
    pub formula_mismatches: usize,
    /// Sign pattern such as `+-+` to the reduced lengths seen for it.
    pub pattern_lengths: BTreeMap<String, BTreeSet<usize>>,
}

fn freely_reduced_words(alphabet: &[Syllable], max_len: usize) -> Vec<Vec<Syllable>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Syllable>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in alphabet {
                if let Some(last) = w.last() {
                    if last.a == s.a && last.inverse != s.inverse {
                        continue;
                    }
                }
                let mut v = w.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Certifies that the `ζ_a`, `a ∈ A ∖ {0}`, behave as free generators: the
/// junction conditions hold for every pair and all freely reduced products of
/// at most `max_syllables` syllables reduce to nonempty words.
pub fn certify_free_family(
    base: &PairClass,
    family: &[Rational],
    max_syllables: usize,
) -> Result<FreeFamilyCertificate> {
    check_type_i(base)?;
    if !family.iter().any(Zero::is_zero) {
        return Err(Error::Precondition("the family must contain 0".into()));
    }
    let distinct: BTreeSet<&Rational> = family.iter().collect();
    if distinct.len() != family.len() {
        return Err(Error::CertificateFailed("duplicate entries in the family".into()));
    }
    let nonzero: Vec<Rational> = family.iter().filter(|a| !a.is_zero()).cloned().collect();

    let mut zetas = BTreeMap::new();
    for a in &nonzero {
        let z = zeta_word(base, a).map_err(|e| {
            Error::CertificateFailed(format!("ζ_{} is not defined: {e}", fmt_rational(a)))
        })?;
        zetas.insert(fmt_rational(a), z);
    }

    let (p, q) = (&base.p, &base.q);
    let cls = |p2, q2| PairClass::new(p2, q2).expect("degrees");
    let pairs: Vec<(Rational, Rational)> = nonzero
        .iter()
        .flat_map(|a| nonzero.iter().filter(move |b| *b != a).map(move |b| (a.clone(), b.clone())))
        .collect();
    let checks: Vec<CheckRecord> = pairs
        .par_iter()
        .flat_map_iter(|(a, b)| {
            let conds = [
                ("tau-sigma'_b", cls(q.shift(b), p.clone()), cls(q.clone(), p.clone())),
                ("sigma_a-sigma_b^-1", cls(p.shift(a), q.clone()), cls(p.shift(b), q.clone())),
                ("sigma'_a^-1-sigma'_b", cls(q.shift(a), p.clone()), cls(q.shift(b), p.clone())),
            ];
            conds.into_iter().map(|(name, left, right)| CheckRecord {
                condition: name.into(),
                a: a.clone(),
                b: b.clone(),
                isomorphic: left.is_isomorphic(&right),
                left,
                right,
            })
        })
        .collect();
    if let Some(bad) = checks.iter().find(|c| c.isomorphic) {
        return Err(Error::CertificateFailed(format!(
            "{} fails for a = {}, b = {}: {}",
            bad.condition,
            fmt_rational(&bad.a),
            fmt_rational(&bad.b),
            iso_text(&bad.left, &bad.right)
        )));
    }

    let alphabet: Vec<Syllable> = nonzero
        .iter()
        .flat_map(|a| [false, true].map(|inverse| Syllable { a: a.clone(), inverse }))
        .collect();
    let words = freely_reduced_words(&alphabet, max_syllables);
    let results: Vec<(String, usize, usize)> = words
        .par_iter()
        .map(|syl| {
            let w = syllable_word(base, &zetas, syl)?;
            let len = word_length(&reduce_word(&w)?);
            let pattern: String = syl.iter().map(Syllable::sign).collect();
            Ok((pattern, len, expected_length(syl)))
        })
        .collect::<Result<_>>()?;

    let mut pattern_lengths: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
    let mut formula_mismatches = 0;
    for (i, (pat, len, want)) in results.iter().enumerate() {
        if *len == 0 {
            let syl: Vec<String> = words[i]
                .iter()
                .map(|s| format!("ζ_{}{}", fmt_rational(&s.a), if s.inverse { "^-1" } else { "" }))
                .collect();
            return Err(Error::CertificateFailed(format!("{} reduces to the empty word", syl.join(" "))));
        }
        if len != want {
            formula_mismatches += 1;
        }
        pattern_lengths.entry(pat.clone()).or_default().insert(*len);
    }
    Ok(FreeFamilyCertificate {
        base: base.clone(),
        family: family.to_vec(),
        checks,
        max_syllables,
        words_checked: results.len(),
        min_length: results.iter().map(|r| r.1).min().unwrap_or(0),
        formula_mismatches,
        pattern_lengths,
    })
}
