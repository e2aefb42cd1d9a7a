//! Seeded point checks: lifts and projection, the Pfaffian chart, the
//! singular locus and the isomorphism onto H¹³. Every check asserts exact
//! rational zeros; a single nonzero value fails with the offending point.

use super::{point_text, CheckResult};
use crate::catalog::pi::{triples, Triple};
use crate::catalog::vars::{idx, G_VARS, L_VARS, PI_VARS, S_VARS};
use crate::catalog::{HSystem, IsomData, PiSystem};
use crate::poly::{PolyMatrix, RationalPoint};
use crate::rat::Rat;
use crate::sampler::{lift_to_pi, SampleConfig, SampleError, Sampler};
use std::time::Instant;

/// The Jacobian of `F₁..F₉` with respect to the nineteen Π¹⁵ coordinates.
pub fn pi_jacobian(pi: &PiSystem) -> PolyMatrix {
    let vars: Vec<usize> = PI_VARS.iter().map(|v| idx(v)).collect();
    PolyMatrix::jacobian(&pi.f, &vars).expect("universe")
}

/// The first `Fᵢ` not vanishing at `pt`, with its value.
fn nonvanishing_f(pi: &PiSystem, pt: &RationalPoint) -> Option<(usize, Rat)> {
    pi.f.iter().enumerate().find_map(|(i, f)| {
        let v = pt.evaluate(f).expect("coordinates set");
        (!v.is_zero()).then_some((i + 1, v))
    })
}

fn sample_err(e: SampleError) -> String {
    format!("sampling failed: {e}")
}

/// Lifts of `{G = 0}` samples satisfy `F₁..F₉`, forgetting `s` returns the
/// sample, two admissible triples give the same lift, and the trivial point
/// has no lift from any triple.
pub fn check_projection_roundtrip(pi: &PiSystem, seed: u64, samples: usize) -> CheckResult {
    let id = "pi.projection_roundtrip";
    let start = Instant::now();
    let mut sampler = Sampler::new(SampleConfig::with_seed(seed));
    let all = triples();
    for n in 0..samples {
        let pt = match sampler.sample_on_g(pi) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(id, sample_err(e), start),
        };
        let lifts: Vec<(Triple, RationalPoint)> =
            all.iter().filter_map(|&t| lift_to_pi(pi, &pt, t).ok().map(|q| (t, q))).take(2).collect();
        if lifts.len() < 2 {
            // Fewer than two admissible triples: redraw does not count.
            continue;
        }
        let ((t0, q0), (t1, q1)) = (&lifts[0], &lifts[1]);
        if let Some((i, v)) = nonvanishing_f(pi, q0) {
            return CheckResult::fail(id, format!("sample {n}: F{i} = {v} at lift {t0:?} {}", point_text(q0)), start);
        }
        for s in S_VARS {
            if q0.val(s) != q1.val(s) {
                return CheckResult::fail(
                    id,
                    format!("sample {n}: lifts {t0:?} and {t1:?} differ in {s} at {}", point_text(&pt)),
                    start,
                );
            }
        }
        if q0.restrict(&G_VARS) != pt.restrict(&G_VARS) {
            return CheckResult::fail(id, format!("sample {n}: forgetting s does not return {}", point_text(&pt)), start);
        }
    }
    let mut trivial = RationalPoint::new(pi.g.table());
    for v in G_VARS {
        trivial.set(v, Rat::ZERO);
    }
    for v in L_VARS.iter().chain(["t1", "t2"].iter()) {
        let x = sampler.draw();
        trivial.set(v, x);
    }
    for t in all {
        if !matches!(lift_to_pi(pi, &trivial, t), Err(SampleError::NoLift(_))) {
            return CheckResult::fail(id, format!("trivial point lifts with {t:?}: {}", point_text(&trivial)), start);
        }
    }
    CheckResult::pass(id, start, samples)
}

/// Pfaffian of a 4×4 skew matrix given by its upper triangle.
fn pf4(a: &[[Rat; 5]; 5], k: [usize; 4]) -> Rat {
    let e = |i: usize, j: usize| &a[k[i]][k[j]];
    &(&(e(0, 1) * e(2, 3)) - &(e(0, 2) * e(1, 3))) + &(e(0, 3) * e(1, 2))
}

/// The skew 5×5 matrix `(m_ij)` at `pt` (requires `p₂p₄ ≠ 0`).
fn skew_at(pi: &PiSystem, pt: &RationalPoint) -> crate::poly::Result<[[Rat; 5]; 5]> {
    let mut a: [[Rat; 5]; 5] = Default::default();
    for ((i, j), f) in &pi.m_coords {
        let v = f.evaluate(pt)?;
        a[j - 1][i - 1] = -&v;
        a[i - 1][j - 1] = v;
    }
    Ok(a)
}

/// The five 4×4 Pfaffians of `(m_ij)` vanish at lifted points with `p₂p₄ ≠ 0`.
pub fn check_pfaffian_chart(pi: &PiSystem, seed: u64, samples: usize) -> CheckResult {
    let id = "pi.pfaffian_chart";
    let start = Instant::now();
    let mut sampler = Sampler::new(SampleConfig::with_seed(seed));
    let mut used = 0;
    let mut rejected = 0;
    while used < samples {
        let q = match sampler.sample_on_pi(pi, (1, 2, 3)) {
            Ok(q) => q,
            Err(e) => return CheckResult::fail(id, sample_err(e), start),
        };
        if q.val("p2").is_zero() || q.val("p4").is_zero() {
            rejected += 1;
            if rejected > 100 * samples.max(1) {
                return CheckResult::skipped(id, format!("only {used} admissible samples"));
            }
            continue;
        }
        used += 1;
        let a = match skew_at(pi, &q) {
            Ok(a) => a,
            Err(e) => return CheckResult::fail(id, format!("{e} at {}", point_text(&q)), start),
        };
        for drop in 0..5 {
            let keep: Vec<usize> = (0..5).filter(|&i| i != drop).collect();
            let v = pf4(&a, [keep[0], keep[1], keep[2], keep[3]]);
            if !v.is_zero() {
                return CheckResult::fail(
                    id,
                    format!("Pfaffian without row {} is {v} at {}", drop + 1, point_text(&q)),
                    start,
                );
            }
        }
    }
    CheckResult::pass(id, start, used)
}

/// Singular-locus checks (a)–(d).
pub fn check_singular_locus(pi: &PiSystem, seed: u64, samples: usize) -> CheckResult {
    let id = "pi.singular_locus";
    let start = Instant::now();
    let jac = pi_jacobian(pi);
    let mut sampler = Sampler::new(SampleConfig::with_seed(seed));
    for n in 0..samples {
        // (a), (b): S-samples.
        let q = match sampler.sample_on_s(pi) {
            Ok(q) => q,
            Err(e) => return CheckResult::fail(id, sample_err(e), start),
        };
        if let Some((i, v)) = nonvanishing_f(pi, &q) {
            return CheckResult::fail(id, format!("S-sample {n}: F{i} = {v} at {}", point_text(&q)), start);
        }
        let r = jac.rank_at(&q).expect("coordinates set");
        if r > 3 {
            return CheckResult::fail(id, format!("S-sample {n}: Jacobian rank {r} at {}", point_text(&q)), start);
        }
        for ((i, j), f) in &pi.m_coords {
            let v = f.evaluate(&q).expect("p2·p4 ≠ 0");
            if !v.is_zero() {
                return CheckResult::fail(id, format!("S-sample {n}: m{i}{j} = {v} at {}", point_text(&q)), start);
            }
        }
        // (c): generic lifted points.
        let q = match sampler.sample_on_pi(pi, (1, 2, 3)) {
            Ok(q) => q,
            Err(e) => return CheckResult::fail(id, sample_err(e), start),
        };
        let r = jac.rank_at(&q).expect("coordinates set");
        if r != 4 {
            return CheckResult::fail(id, format!("lifted sample {n}: Jacobian rank {r} at {}", point_text(&q)), start);
        }
        // (d): the plane 𝔸¹⁰ with p = u = v = s = 0.
        let mut z = RationalPoint::new(pi.g.table());
        for v in PI_VARS {
            z.set(v, Rat::ZERO);
        }
        for v in L_VARS.iter().chain(["t1", "t2"].iter()) {
            let x = sampler.draw();
            z.set(v, x);
        }
        if let Some((i, v)) = nonvanishing_f(pi, &z) {
            return CheckResult::fail(id, format!("𝔸¹⁰ point {n}: F{i} = {v} at {}", point_text(&z)), start);
        }
    }
    CheckResult::pass(id, start, 3 * samples)
}

/// Images of admissible Π-points satisfy `G₁..G₆`; every forward
/// denominator is nonzero on admissible draws.
pub fn check_isomorphism(pi: &PiSystem, h: &HSystem, iso: &IsomData, seed: u64, samples: usize) -> CheckResult {
    let id = "h13.isomorphism";
    let start = Instant::now();
    let eqs = h.equations();
    let mut sampler = Sampler::new(SampleConfig::with_seed(seed));
    for n in 0..samples {
        let (src, img) = match sampler.sample_h13_with_source(pi, iso) {
            Ok(x) => x,
            Err(e) => return CheckResult::fail(id, sample_err(e), start),
        };
        for (name, f) in &iso.fwd {
            if src.evaluate(&f.den).expect("A, B set").is_zero() {
                return CheckResult::fail(id, format!("denominator of {name} vanishes at {}", point_text(&src)), start);
            }
        }
        for (k, e) in eqs.iter().enumerate() {
            let v = img.evaluate(e).expect("coordinates set");
            if !v.is_zero() {
                return CheckResult::fail(
                    id,
                    format!("sample {n}: equation {} = {v} at the image of {}", k + 1, point_text(&src)),
                    start,
                );
            }
        }
    }
    CheckResult::pass(id, start, samples)
}
