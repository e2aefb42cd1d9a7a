//! The unprojection identities: Cramer's rule for `s₁, s₂, s₃` on a chart
//! `D_ijk ≠ 0`, the vanishing of the remaining equations modulo `G`, and the
//! agreement of lifts from different column triples.
//!
//! `1/D_ijk` is represented by the symbol `iota`; after substitution every
//! expression is cleared by the stated power of `D_ijk` and "modulo `G`"
//! means exact divisibility by `G`.

use super::{show, CheckResult};
use crate::catalog::actions::iota;
use crate::catalog::pi::Triple;
use crate::catalog::vars::S_VARS;
use crate::catalog::PiSystem;
use crate::poly::{PolyMatrix, Polynomial, Substitution};
use std::time::Instant;

/// `(H_i, H_j, H_k)·adj(M_ijk)`: the numerators of the Cramer solution.
pub fn cramer_numerators(pi: &PiSystem, t: Triple) -> [Polynomial; 3] {
    let cols = [t.0 - 1, t.1 - 1, t.2 - 1];
    let row = PolyMatrix::from_rows(vec![cols.iter().map(|&c| pi.h[c].clone()).collect()]).expect("shape");
    let adj = pi.m.select_cols(&cols).adjugate().expect("square");
    let sigma = row.mul(&adj).expect("shape");
    [sigma.get(0, 0).clone(), sigma.get(0, 1).clone(), sigma.get(0, 2).clone()]
}

/// `s_j ↦ iota·σ_j` for the Cramer numerators `σ` of triple `t`.
pub fn cramer_substitution(pi: &PiSystem, t: Triple) -> Substitution {
    let sigma = cramer_numerators(pi, t);
    let io = Polynomial::var_idx(pi.g.table(), iota());
    let mut s = Substitution::identity(pi.g.table());
    for (v, p) in S_VARS.iter().zip(sigma.iter()) {
        s.set(v, &io * p).expect("universe");
    }
    s
}

/// `D^m · p(s = σ/D)` as a polynomial.
fn cleared(sub: &Substitution, d: &Polynomial, p: &Polynomial, m: u32) -> Polynomial {
    sub.apply(p).expect("universe").clear_variable(iota(), d, m)
}

/// Checks (a)–(d) on the chart `D₁₂₃ ≠ 0`.
pub fn check_unprojection(pi: &PiSystem) -> CheckResult {
    let id = "pi.unprojection";
    let start = Instant::now();
    match unprojection_witness(pi) {
        None => CheckResult::pass(id, start, 0),
        Some(w) => CheckResult::fail(id, w, start),
    }
}

/// The first failing part of the unprojection check, if any.
pub fn unprojection_witness(pi: &PiSystem) -> Option<String> {
    let base = (1, 2, 3);
    let d = pi.minor(base.0, base.1, base.2).clone();
    let sub = cramer_substitution(pi, base);
    // (a) D·Fprime₁..₃ vanish identically.
    for i in 0..3 {
        let r = cleared(&sub, &d, &pi.fprime[i], 1);
        if !r.is_zero() {
            return Some(format!("(a) D123·Fprime{} = {}", i + 1, show(&r)));
        }
    }
    // (b) D·Fprime₄..₆ are divisible by G.
    for i in 3..6 {
        let r = cleared(&sub, &d, &pi.fprime[i], 1);
        if let Err(e) = r.exact_divide(&pi.g) {
            return Some(format!("(b) D123·Fprime{} is not divisible by G ({e})", i + 1));
        }
    }
    // (c) D²·F₇..₉ are divisible by G.
    for i in 6..9 {
        let r = cleared(&sub, &d, &pi.f[i], 2);
        if let Err(e) = r.exact_divide(&pi.g) {
            return Some(format!("(c) D123²·F{} is not divisible by G ({e})", i + 1));
        }
    }
    // (d) D_pqr·σ(123) ≡ D123·σ(pqr) mod G.
    let s0 = cramer_numerators(pi, base);
    for other in [(2, 4, 6), (1, 3, 5)] {
        let d2 = pi.minor(other.0, other.1, other.2);
        let s1 = cramer_numerators(pi, other);
        for j in 0..3 {
            let r = &(d2 * &s0[j]) - &(&d * &s1[j]);
            if let Err(e) = r.exact_divide(&pi.g) {
                return Some(format!(
                    "(d) triples (1,2,3) and {other:?} disagree modulo G in {} ({e})",
                    S_VARS[j]
                ));
            }
        }
    }
    None
}
