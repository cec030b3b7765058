//! Brute-force oracles shared by the integration tests. They only use `eval`
//! and leading coefficients, never the library's solvers or substitutions.
#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{One, Zero};

use zz_core::pair::Term;
use zz_core::rational::{pow, rat};
use zz_core::{PairClass, Poly, Rational};

/// Nonzero `n/d` in lowest terms with `|n| ≤ h`, `1 ≤ d ≤ h`.
pub fn bounded_rationals(h: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for d in 1..=h {
        for n in -h..=h {
            if n != 0 && n.gcd(&d) == 1 {
                out.push(rat(n, d));
            }
        }
    }
    out
}

fn points(n: usize) -> impl Iterator<Item = Rational> {
    (0..=n as i64).map(|i| rat(i, 1))
}

/// `f(x) = g(x)` at `deg + 1` points, checked lazily.
fn agree(f: impl Fn(&Rational) -> Rational, g: impl Fn(&Rational) -> Rational, deg: usize) -> bool {
    points(deg).all(|x| f(&x) == g(&x))
}

/// `(α, β)` with `p2(w) = α p(βw)` and `β` of height at most `h`.
pub fn scale_brute(p: &Poly, p2: &Poly, h: i64) -> Option<(Rational, Rational)> {
    let n = p.degree();
    if n != p2.degree() {
        return None;
    }
    bounded_rationals(h).into_iter().find_map(|b| {
        let a = p2.leading() / (p.leading() * pow(&b, n as i64));
        // Coefficientwise: p2_i = α β^i p_i.
        let mut bi = Rational::one();
        for i in 0..=n {
            if &a * &bi * p.coeff(i) != p2.coeff(i) {
                return None;
            }
            bi *= &b;
        }
        Some((a, b))
    })
}

/// `(γ, δ, t)` with `q2(w) = γ q(δw + t)` and `δ` of height at most `h`.
/// For a given `δ` the shift is forced by the subleading coefficient.
pub fn affine_brute(q: &Poly, q2: &Poly, allow_shift: bool, h: i64) -> Option<(Rational, Rational, Rational)> {
    let m = q.degree();
    if m != q2.degree() {
        return None;
    }
    bounded_rationals(h).into_iter().find_map(|d| {
        let dm = pow(&d, m as i64);
        let g = q2.leading() / (q.leading() * &dm);
        let t = if allow_shift {
            let dm1 = pow(&d, m as i64 - 1);
            (q2.coeff(m - 1) / &g - q.coeff(m - 1) * &dm1) / (q.leading() * rat(m as i64, 1) * dm1)
        } else {
            Rational::zero()
        };
        agree(|x| &g * q.eval(&(&d * x + &t)), |x| q2.eval(x), m).then_some((g, d, t))
    })
}

/// Isomorphism of pairs by brute force: shifts only when `P(0) ≠ 0` on both sides.
pub fn pairs_iso_brute(c1: &PairClass, c2: &PairClass, h: i64) -> bool {
    let z1 = c1.p.coeff(0).is_zero();
    if z1 != c2.p.coeff(0).is_zero() {
        return false;
    }
    scale_brute(&c1.p, &c2.p, h).is_some() && affine_brute(&c1.q, &c2.q, !z1, h).is_some()
}

/// Value of an expanded polynomial in `(x, y, u, v)`.
pub fn eval_terms(terms: &[Term], at: &[Rational; 4]) -> Rational {
    terms
        .iter()
        .map(|t| {
            let mut v = t.coeff.clone();
            for (k, e) in t.exponents.iter().enumerate() {
                v *= pow(&at[k], *e as i64);
            }
            v
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// Checks `yu = xP(x)`, `vx = uQ(u)`, `yv = P(x)Q(u)` at a few points.
pub fn equations_hold(p: &Poly, q: &Poly, rhs: [&[Term]; 3]) -> bool {
    let samples = [rat(2, 1), rat(-1, 3), rat(5, 7), Rational::one()];
    samples.iter().all(|x| {
        samples.iter().all(|u| {
            let at = [x.clone(), Rational::zero(), u.clone(), Rational::zero()];
            eval_terms(rhs[0], &at) == x * p.eval(x)
                && eval_terms(rhs[1], &at) == u * q.eval(u)
                && eval_terms(rhs[2], &at) == p.eval(x) * q.eval(u)
        })
    })
}
