//! Exact polynomial identities: the decomposition of `G`, the kernel of the
//! normalization map, the syzygy composition, the block presentation of
//! `F₁..F₆` and the contraction identities of H¹³.

use super::{show, CheckResult};
use crate::catalog::pi::{g_combination, minor, G_COEFFS};
use crate::catalog::vars::poly;
use crate::catalog::{HSystem, PiSystem};
use crate::poly::Polynomial;
use std::time::Instant;

/// `G` equals the stated combination of the chosen generators, rebuilt from
/// the column determinants of `M`.
pub fn check_g_decomposition(pi: &PiSystem) -> CheckResult {
    let id = "pi.g_decomposition";
    let start = Instant::now();
    let d = |i, j, k| minor(&pi.m, (i, j, k));
    let gens = [
        d(1, 2, 3),
        d(1, 2, 4),
        d(1, 2, 5),
        d(1, 2, 6),
        d(1, 3, 5),
        &d(1, 3, 6) + &d(1, 4, 5).scale(&2.into()),
        &d(2, 4, 5) + &d(1, 4, 6).scale(&2.into()),
        d(2, 4, 6),
    ];
    for (i, (a, b)) in gens.iter().zip(pi.chosen_generators.iter()).enumerate() {
        if a != b {
            return CheckResult::fail(id, format!("chosen generator {} differs by {}", i + 1, show(&(a - b))), start);
        }
    }
    let residual = &pi.g - &g_combination(&gens, G_COEFFS);
    if !residual.is_zero() {
        return CheckResult::fail(id, format!("G − Σ L·D = {}", show(&residual)), start);
    }
    CheckResult::pass(id, start, 0)
}

/// All twenty minors and `G` vanish under the normalization map `h`.
pub fn check_normalization_kernel(pi: &PiSystem) -> CheckResult {
    let id = "pi.normalization_kernel";
    let start = Instant::now();
    for ((i, j, k), d) in &pi.minors {
        let img = pi.h_sub.apply(d).expect("universe");
        if !img.is_zero() {
            return CheckResult::fail(id, format!("h(D{i}{j}{k}) = {}", show(&img)), start);
        }
    }
    let img = pi.h_sub.apply(&pi.g).expect("universe");
    if !img.is_zero() {
        return CheckResult::fail(id, format!("h(G) = {}", show(&img)), start);
    }
    CheckResult::pass(id, start, 0)
}

/// The row vector `(1, w, w²)·h(M)` is identically zero.
pub fn check_syzygy(pi: &PiSystem) -> CheckResult {
    let id = "pi.syzygy";
    let start = Instant::now();
    let hm = pi.m.substitute(&pi.h_sub).expect("universe");
    let ws = [poly("1"), poly("w"), poly("w^2")];
    for c in 0..hm.cols() {
        let entry = (0..3).fold(Polynomial::zero(pi.g.table()), |acc, r| &acc + &(&ws[r] * hm.get(r, c)));
        if !entry.is_zero() {
            return CheckResult::fail(id, format!("column {}: {}", c + 1, show(&entry)), start);
        }
    }
    CheckResult::pass(id, start, 0)
}

/// `(u −p₁ −p₂; v −p₃ −p₄)·S − (v₁ v₂ v₃) = (F₁ F₃ F₅; F₂ F₄ F₆)`.
pub fn check_block_presentation(pi: &PiSystem) -> CheckResult {
    let id = "pi.block_presentation";
    let start = Instant::now();
    let b = &pi.blocks;
    let lhs = b.left.mul(&b.s_sym).and_then(|m| m.sub(&b.v_mat)).expect("shapes");
    for r in 0..2 {
        for c in 0..3 {
            let f = &pi.f[2 * c + r];
            let residual = lhs.get(r, c) - f;
            if !residual.is_zero() {
                return CheckResult::fail(
                    id,
                    format!("entry ({},{}) differs from F{}: {}", r + 1, c + 1, 2 * c + r + 1, show(&residual)),
                    start,
                );
            }
        }
    }
    CheckResult::pass(id, start, 0)
}

/// The two matrix-times-vector expressions of each contraction agree.
pub fn check_contractions(h: &HSystem) -> CheckResult {
    let id = "h13.contractions";
    let start = Instant::now();
    let names = ["c12", "c23", "c31"];
    for ((x, y), name) in h.contraction_pairs.iter().zip(names) {
        for r in 0..x.rows() {
            let residual = x.get(r, 0) - y.get(r, 0);
            if !residual.is_zero() {
                return CheckResult::fail(id, format!("{name} entry {}: {}", r + 1, show(&residual)), start);
            }
        }
    }
    CheckResult::pass(id, start, 0)
}
