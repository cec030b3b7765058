use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::poly::{vanishing_order, Poly};
use crate::rational::{serde_rat, Rational};

const VARS: [&str; 4] = ["x", "y", "u", "v"];

/// `coeff · x^e0 y^e1 u^e2 v^e3`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "serde_rat")]
    pub coeff: Rational,
    pub exponents: [u32; 4],
}

fn deglex(a: &[u32; 4], b: &[u32; 4]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

fn monomial_text(e: &[u32; 4]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(VARS)
        .filter(|(k, _)| **k > 0)
        .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    parts.join("*")
}

fn terms_text(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let neg = t.coeff.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mag = t.coeff.abs();
        let mono = monomial_text(&t.exponents);
        if mono.is_empty() {
            s.push_str(&mag.to_string());
        } else if mag.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{mag}*{mono}"));
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equation {
    pub lhs: String,
    pub rhs: Vec<Term>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationTriple {
    pub equations: Vec<Equation>,
    pub displayed: Vec<String>,
}

impl EquationTriple {
    pub fn lines(&self) -> Vec<String> {
        self.equations.iter().map(|e| e.text.clone()).collect()
    }

    /// Factored lines in the usual printed style, e.g. `yu = x²(x−1)`.
    pub fn display_lines(&self) -> Vec<String> {
        self.displayed.clone()
    }

    pub fn to_text(&self) -> String {
        let mut s = self.lines().join("\n");
        s.push('\n');
        s
    }
}

/// Product of univariate factors, one per variable slot, fully expanded.
fn expand(factors: &[(usize, &Poly)]) -> Vec<Term> {
    let mut acc: Vec<Term> = vec![Term { coeff: Rational::one(), exponents: [0; 4] }];
    for &(slot, f) in factors {
        let mut next = Vec::new();
        for t in &acc {
            for (i, c) in f.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = t.exponents;
                e[slot] += i as u32;
                next.push(Term { coeff: &t.coeff * c, exponents: e });
            }
        }
        acc = next;
    }
    acc.sort_by(|a, b| deglex(&a.exponents, &b.exponents));
    let mut out: Vec<Term> = Vec::new();
    for t in acc {
        match out.last_mut() {
            Some(last) if last.exponents == t.exponents => last.coeff += t.coeff,
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

fn equation(lhs: &str, rhs: Vec<Term>) -> Equation {
    let text = format!("{lhs} = {}", terms_text(&rhs));
    Equation { lhs: lhs.into(), rhs, text }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if n == 1 {
        return String::new();
    }
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Nonzero rational roots by the rational root test, ascending.
fn nonzero_rational_roots(f: &Poly) -> Vec<Rational> {
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let (Some(a0), Some(an)) = (ints.first(), ints.last()) else { return Vec::new() };
    if a0.is_zero() {
        return Vec::new();
    }
    let (Some(num), Some(den)) = (divisors(a0), divisors(an)) else { return Vec::new() };
    let mut roots: Vec<Rational> = Vec::new();
    for p in &num {
        for q in &den {
            for r in [Rational::new(p.clone(), q.clone()), -Rational::new(p.clone(), q.clone())] {
                if f.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// `c·v^k·Π(v − r)^m·(rest)` with rational roots split off.
fn factored(f: &Poly, var: &str) -> String {
    let k = vanishing_order(f).expect("nonzero");
    let mut rest = f.div_rem(&Poly::monomial(Rational::one(), k)).0;
    let mut s = String::new();
    let lead = rest.leading();
    rest = rest.monic();
    if !lead.is_one() {
        if (-&lead).is_one() {
            s.push('−');
        } else {
            s.push_str(&lead.to_string().replace('-', "−"));
        }
    }
    if k > 0 {
        s.push_str(var);
        s.push_str(&superscript(k));
    }
    for r in nonzero_rational_roots(&rest) {
        let lin = Poly::linear_root(&r);
        let mut m = 0;
        loop {
            let (qt, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = qt;
            m += 1;
        }
        let sign = if r.is_negative() { '+' } else { '−' };
        s.push_str(&format!("({var}{sign}{}){}", r.abs(), superscript(m)));
    }
    if rest.degree() > 0 {
        s.push_str(&format!("({})", rest.to_string_in(var)));
    } else if s.is_empty() || s == "−" {
        s.push('1');
    }
    s
}

/// `yu = xP(x)`, `vx = uQ(u)`, `yv = P(x)Q(u)`, expanded, monomials in
/// degree-lex order with x > y > u > v.
pub fn emit_equations(p: &Poly, q: &Poly) -> EquationTriple {
    let w = Poly::var();
    let wp = &w * p;
    let wq = &w * q;
    let lead = p.leading() * q.leading();
    let pq = if lead.is_one() {
        format!("{}{}", factored(&p.monic(), "x"), factored(&q.monic(), "u"))
    } else {
        format!("{}{}{}", factored(&Poly::constant(lead), "x"), factored(&p.monic(), "x"), factored(&q.monic(), "u"))
    };
    EquationTriple {
        equations: vec![
            equation("yu", expand(&[(0, &wp)])),
            equation("vx", expand(&[(2, &wq)])),
            equation("yv", expand(&[(0, p), (2, q)])),
        ],
        displayed: vec![
            format!("yu = {}", factored(&wp, "x")),
            format!("vx = {}", factored(&wq, "u")),
            format!("yv = {pq}"),
        ],
    }
}
