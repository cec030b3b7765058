//! Structure reports for automorphism groups of the surfaces.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::moduli::{aut_pair_group, pairs_isomorphic, AutPairDescription};
use crate::pair::{Case, PairClass};
use crate::poly::{multiplicity_profile, Poly};
use crate::rational::{fmt_rational, int, Rational};
use crate::triangular::Triangular;
use crate::words::{certify_free_family, FreeFamilyCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub p_two_distinct_roots: bool,
    pub q_two_distinct_roots: bool,
    pub p0_nonzero: bool,
    pub pass: bool,
}

pub fn theorem1_check(p: &Poly, q: &Poly) -> Theorem1Report {
    let two = |f: &Poly| multiplicity_profile(f).map(|m| m.distinct_roots() >= 2).unwrap_or(false);
    let p_two_distinct_roots = two(p);
    let q_two_distinct_roots = two(q);
    let p0_nonzero = !p.coeff(0).is_zero();
    Theorem1Report {
        p_two_distinct_roots,
        q_two_distinct_roots,
        p0_nonzero,
        pass: p_two_distinct_roots && q_two_distinct_roots && p0_nonzero,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AutShape {
    /// `A ⋆_Diag J_y`, when `[P, Q] ≅ [Q, P]`.
    AmalgamAJy,
    /// `J_y ⋆_Diag J_v`
    AmalgamJyJv,
    TypeIHuge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub case: Case,
    pub shape: AutShape,
    /// Human-readable product, e.g. `ℤ/2 ⋆ G_a^∞`.
    pub product: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diag_trivial: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diag_description: Option<AutPairDescription>,
    /// Sampled diagonal automorphisms `(a·x, c·y)`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diag_samples: Vec<Triangular>,
    pub jy_description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jv_description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem1: Option<Theorem1Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FreeFamilyCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate_error: Option<String>,
    /// `t` such that the certificate was obtained for `[P(w), Q(w + t)]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift_repair: Option<String>,
}

impl AutReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("case: {}", self.case),
            format!("Aut(S) ≅ {}", self.product),
            format!("J_y: {}", self.jy_description),
        ];
        if let Some(jv) = &self.jv_description {
            lines.push(format!("J_v: {jv}"));
        }
        if let Some(t) = self.diag_trivial {
            lines.push(format!("Diag(S) trivial: {t}"));
        }
        if let Some(t) = &self.theorem1 {
            lines.push(format!(
                "hypotheses: P has 2 roots {}, Q has 2 roots {}, P(0) != 0 {}",
                t.p_two_distinct_roots, t.q_two_distinct_roots, t.p0_nonzero
            ));
        }
        if let Some(c) = &self.certificate {
            let fam: Vec<String> = c.family.iter().map(fmt_rational).collect();
            lines.push(format!(
                "free family {{{}}}: {} checks, {} words, min length {}",
                fam.join(","),
                c.checks.len(),
                c.words_checked,
                c.min_length
            ));
        }
        if let Some(t) = &self.shift_repair {
            lines.push(format!("shift repair: Q(w + {t})"));
        }
        if let Some(e) = &self.certificate_error {
            lines.push(format!("certificate: {e}"));
        }
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug)]
pub struct AutOptions {
    pub family: Vec<Rational>,
    pub max_syllables: usize,
    pub max_shift: i64,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions { family: (0..=10).map(int).collect(), max_syllables: 2, max_shift: 20 }
    }
}

fn lift_family(c: &PairClass, var: &str) -> String {
    let e = if c.p.coeff(0).is_zero() { 2 } else { 1 };
    let power = if e == 1 { var.to_string() } else { format!("{var}^{e}") };
    format!("lifts of ({x}, {var}) ↦ ({x} + {power}·R({var}), {var}), R ∈ k[{var}]", x = if var == "y" { "x" } else { "u" })
}

/// Diagonal automorphisms: `b = 0` in the pair's automorphism description.
fn diag_part(c: &PairClass) -> (AutPairDescription, Vec<Triangular>, bool) {
    let mut d = aut_pair_group(c);
    d.b_free = false;
    let params = [int(1), int(-1), int(2), Rational::new(1.into(), 2.into())];
    let mut samples: Vec<Triangular> = Vec::new();
    for t in d.sample(&params) {
        let t = Triangular::affine(t.a, Rational::zero(), t.c);
        if !samples.contains(&t) {
            samples.push(t);
        }
    }
    let trivial = !d.a_constraint.is_family()
        && !d.bc_constraint.q_stabilizer.is_family()
        && samples.iter().all(|t| t.a.is_one() && t.c.is_one());
    (d, samples, trivial)
}

pub fn aut_structure(c: &PairClass, opts: &AutOptions) -> Result<AutReport> {
    let case = c.case();
    if case == Case::III {
        let symmetric = pairs_isomorphic(c, &c.swapped()).is_some();
        let (d, samples, trivial) = diag_part(c);
        let (shape, product, jv) = match (symmetric, trivial) {
            (true, true) => (AutShape::AmalgamAJy, "ℤ/2 ⋆ G_a^∞".to_string(), None),
            (true, false) => (AutShape::AmalgamAJy, "A ⋆_Diag J_y".to_string(), None),
            (false, true) => {
                (AutShape::AmalgamJyJv, "G_a^∞ ⋆ G_a^∞".to_string(), Some(lift_family(&c.swapped(), "v")))
            }
            (false, false) => {
                (AutShape::AmalgamJyJv, "J_y ⋆_Diag J_v".to_string(), Some(lift_family(&c.swapped(), "v")))
            }
        };
        return Ok(AutReport {
            case,
            shape,
            product,
            diag_trivial: Some(trivial),
            diag_description: Some(d),
            diag_samples: samples,
            jy_description: lift_family(c, "y"),
            jv_description: jv,
            theorem1: None,
            certificate: None,
            certificate_error: None,
            shift_repair: None,
        });
    }

    let th = theorem1_check(&c.p, &c.q);
    let mut report = AutReport {
        case,
        shape: AutShape::TypeIHuge,
        product: "contains a free group on the ζ_a".into(),
        diag_trivial: None,
        diag_description: None,
        diag_samples: Vec::new(),
        jy_description: lift_family(c, "y"),
        jv_description: None,
        theorem1: Some(th.clone()),
        certificate: None,
        certificate_error: None,
        shift_repair: None,
    };
    if !th.pass {
        report.certificate_error = Some("hypotheses not met; no certificate attempted".into());
        return Ok(report);
    }
    match certify_free_family(c, &opts.family, opts.max_syllables) {
        Ok(cert) => report.certificate = Some(cert),
        Err(first) => {
            let repaired = (1..=opts.max_shift).find_map(|t| {
                let t = int(t);
                let shifted = PairClass::new(c.p.clone(), c.q.shift(&t)).ok()?;
                certify_free_family(&shifted, &opts.family, opts.max_syllables).ok().map(|cert| (t, cert))
            });
            match repaired {
                Some((t, cert)) => {
                    report.shift_repair = Some(fmt_rational(&t));
                    report.certificate = Some(cert);
                }
                None => {
                    report.certificate_error = Some(format!(
                        "{first}; no shift t in 1..={} repairs it",
                        opts.max_shift
                    ))
                }
            }
        }
    }
    Ok(report)
}
