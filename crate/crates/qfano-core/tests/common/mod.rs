//! One-term perturbations of the catalog, one or more per check.

#![allow(dead_code)]

use qfano_core::catalog::pi::g_combination;
use qfano_core::catalog::{catalog, poly, Catalog, Section};
use qfano_core::verifier::run_check;
use qfano_core::{CheckStatus, Polynomial};

pub type Mutation = (&'static str, &'static str, fn(&mut Catalog));

fn bump(p: &mut Polynomial, term: &str) {
    *p = &*p + &poly(term);
}

fn section(cat: &mut Catalog, n: u32) -> &mut Section {
    &mut cat.classes.iter_mut().find(|c| c.number == n).expect("class").section
}

/// `(check id, what is perturbed, perturbation)`.
pub fn mutations() -> Vec<Mutation> {
    vec![
        ("pi.g_decomposition", "G + L123·p1", |c| bump(&mut c.pi.g, "L123*p1")),
        ("pi.g_decomposition", "G with coefficient 3 on L136·D′136 and L245·D′245", |c| {
            c.pi.g = g_combination(&c.pi.chosen_generators, [1, 1, 1, 1, 1, 3, 3, 1])
        }),
        ("pi.unprojection", "G with coefficient 3 on L136·D′136 and L245·D′245", |c| {
            c.pi.g = g_combination(&c.pi.chosen_generators, [1, 1, 1, 1, 1, 3, 3, 1])
        }),
        ("pi.normalization_kernel", "D123 + p1·u", |c| {
            bump(c.pi.minors.get_mut(&(1, 2, 3)).expect("D123"), "p1*u")
        }),
        ("pi.normalization_kernel", "G + p2·v", |c| {
            let keep = c.pi.minors.clone();
            bump(&mut c.pi.g, "p2*v");
            c.pi.minors = keep;
        }),
        ("pi.syzygy", "M₁₁ + p1", |c| {
            let e = c.pi.m.get(0, 0) + &poly("p1");
            c.pi.m.set(0, 0, e)
        }),
        ("pi.block_presentation", "F1 + s1·p1", |c| bump(&mut c.pi.f[0], "s1*p1")),
        ("pi.unprojection", "F8 + s1^2", |c| bump(&mut c.pi.f[7], "s1^2")),
        ("pi.unprojection", "F′1 + s1·p2", |c| bump(&mut c.pi.fprime[0], "s1*p2")),
        ("pi.gl2_covariance", "F9 + p1", |c| bump(&mut c.pi.f[8], "p1")),
        ("pi.projection_roundtrip", "F9 + s3^2", |c| bump(&mut c.pi.f[8], "s3^2")),
        ("pi.pfaffian_chart", "m₁₂ numerator + p1·p2", |c| {
            let m = c.pi.m_coords.values_mut().next().expect("m coordinates");
            bump(&mut m.num, "p1*p2")
        }),
        ("pi.singular_locus", "F1 + u", |c| bump(&mut c.pi.f[0], "u")),
        ("h13.contractions", "c12 left entry 1 + p111", |c| {
            let m = &mut c.h.contraction_pairs[0].0;
            let e = m.get(0, 0) + &poly("p111");
            m.set(0, 0, e)
        }),
        ("h13.actions", "G4 + u1", |c| bump(&mut c.h.g_scalar[0], "u1")),
        ("h13.hyperdet", "hyperdet + p111·p222", |c| bump(&mut c.h.hyperdet, "p111*p222")),
        ("h13.fibers", "first generator of the fiber over 𝗉1 + u1", |c| {
            bump(&mut c.h.fiber_data[1].1[0], "u1")
        }),
        ("h13.isomorphism", "G5 + x11·u2", |c| bump(&mut c.h.g_scalar[1], "x11*u2")),
        ("sections.308", "printed v-chart polynomial + p1", |c| {
            let chart = section(c, 308).chart.as_mut().expect("chart");
            bump(&mut chart.printed, "p1")
        }),
        ("sections.308", "S1 relation + p4·u", |c| {
            let s = section(c, 308).loci[0].symbolic.as_mut().expect("symbolic");
            bump(s.relation.as_mut().expect("relation"), "p4*u")
        }),
        ("sections.308", "S2 relation + s2^2", |c| {
            let s = section(c, 308).loci[1].symbolic.as_mut().expect("symbolic");
            bump(s.relation.as_mut().expect("relation"), "s2^2")
        }),
        ("sections.501", "𝔸(s1) restriction v ↦ v + s1", |c| {
            let s = section(c, 501).loci[0].symbolic.as_mut().expect("symbolic");
            let img = s.restriction.get("v").cloned().unwrap_or_else(|| poly("v"));
            s.restriction.set("v", &img + &poly("s1")).expect("universe")
        }),
        ("sections.512", "F3 + s1^2", |c| bump(&mut c.pi.f[2], "s1^2")),
        ("sections.550", "S2 relation + u^3", |c| {
            let s = section(c, 550).loci[2].symbolic.as_mut().expect("symbolic");
            bump(s.relation.as_mut().expect("relation"), "u^3")
        }),
        ("sections.577", "F1 + s2^2", |c| bump(&mut c.pi.f[0], "s2^2")),
        ("sections.872", "F2 + s1^2", |c| bump(&mut c.pi.f[1], "s1^2")),
        ("sections.878", "F4 + s1^2", |c| bump(&mut c.pi.f[3], "s1^2")),
        ("sections.1766", "section map p2 ↦ v", |c| {
            section(c, 1766).t_sub.set("p2", poly("v")).expect("universe")
        }),
        ("graded.homogeneity.308", "F1 + 1", |c| bump(&mut c.pi.f[0], "1")),
        ("graded.homogeneity.generic-a", "F5 + p1", |c| bump(&mut c.pi.f[4], "p1")),
        ("graded.adjunction.878", "first cut degree + 1", |c| {
            c.classes.iter_mut().find(|k| k.number == 878).expect("class").cuts[0] += 1
        }),
        ("graded.numerator.1766", "last cut degree + 1", |c| {
            let k = c.classes.iter_mut().find(|k| k.number == 1766).expect("class");
            *k.cuts.last_mut().expect("cuts") += 1
        }),
    ]
}

/// Runs every mutation; returns the faults that went undetected (a check
/// that fails on the clean catalog counts as undetected) and the number of
/// mutations tried.
pub fn undetected(seed: u64, samples: usize) -> (Vec<String>, usize) {
    let base = catalog();
    let all = mutations();
    let mut missed = Vec::new();
    for (id, what, mutate) in &all {
        let clean = run_check(id, base, seed, samples).expect("registered");
        if clean.status != CheckStatus::Pass {
            missed.push(format!("{id} fails on the unperturbed catalog: {:?}", clean.witness));
            continue;
        }
        let mut cat = base.clone();
        mutate(&mut cat);
        let r = run_check(id, &cat, seed, samples).expect("registered");
        let witness = r.witness.unwrap_or_default();
        if r.status != CheckStatus::Fail || witness.is_empty() || witness.trim() == "0" {
            missed.push(format!("{id} [{what}]: {:?} {witness}", r.status));
        }
    }
    (missed, all.len())
}
