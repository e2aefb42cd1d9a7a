//! Threefold sections `T_𝔸`: printed chart reductions, symbolic special
//! loci, Jacobian smoothness probes and emptiness certificates.

use super::{point_text, show, CheckResult};
use crate::catalog::sections::{ChartReduction, EmptyLocus, Locus, Section};
use crate::catalog::vars::indices;
use crate::catalog::PiSystem;
use crate::linalg::{EchelonBasis, MonomialIndex};
use crate::poly::{Monomial, PolyMatrix, Polynomial, RationalPoint, Substitution};
use crate::rat::Rat;
use crate::sampler::{SampleConfig, Sampler};
use std::time::Instant;

/// Codimension of a threefold affine cone in 𝔸⁷.
const SECTION_CODIM: usize = 4;

/// Largest multiplier degree tried by the emptiness certificate.
const MAX_CERTIFICATE_DEGREE: u32 = 6;

/// Solves the recorded equations for the recorded variables on the chart and
/// returns the remaining nonzero equations.
pub fn reduce_chart(pi: &PiSystem, chart: &ChartReduction) -> Result<Vec<Polynomial>, String> {
    let eqs: Vec<Polynomial> = pi.f.iter().map(|f| chart.sub.apply(f).expect("universe")).collect();
    let vars = indices(&chart.solve_vars);
    let n = vars.len();
    let table = pi.g.table();
    let zero_vars = vars.iter().fold(Substitution::identity(table), |s, &v| {
        let mut s = s;
        s.set_idx(v, Polynomial::zero(table)).expect("universe");
        s
    });
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for &e in &chart.solve_eqs {
        let mut row = Vec::with_capacity(n);
        for &v in &vars {
            let c = eqs[e].derivative(v);
            if vars.iter().any(|&w| c.degree_in(w) > 0) {
                return Err(format!("F{} is not linear in the solved variables", e + 1));
            }
            row.push(c);
        }
        rows.push(row);
        rhs.push(-&zero_vars.apply(&eqs[e]).expect("universe"));
    }
    let a = PolyMatrix::from_rows(rows).expect("shape");
    let det = a.determinant().expect("square");
    let unit = match det.as_constant() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(format!("pivot determinant {} is not a unit on the chart", show(&det))),
    };
    // x = A⁻¹·rhs = adj(A)·rhs / det.
    let b = PolyMatrix::from_rows(rhs.into_iter().map(|p| vec![p]).collect()).expect("shape");
    let x = a.adjugate().and_then(|adj| adj.mul(&b)).expect("shape");
    let inv = unit.recip();
    let mut solve = Substitution::identity(table);
    for (k, &v) in vars.iter().enumerate() {
        solve.set_idx(v, x.get(k, 0).scale(&inv)).expect("universe");
    }
    let mut rest = Vec::new();
    for (i, e) in eqs.iter().enumerate() {
        let r = solve.apply(e).expect("universe");
        if chart.solve_eqs.contains(&i) {
            if !r.is_zero() {
                return Err(format!("solved F{} does not vanish: {}", i + 1, show(&r)));
            }
        } else if !r.is_zero() {
            rest.push(r);
        }
    }
    Ok(rest)
}

/// The chart reduction leaves exactly the printed equation, up to a
/// nonzero constant factor.
fn chart_witness(pi: &PiSystem, chart: &ChartReduction) -> Option<String> {
    let rest = match reduce_chart(pi, chart) {
        Ok(r) => r,
        Err(e) => return Some(format!("{}: {e}", chart.name)),
    };
    if rest.is_empty() {
        return Some(format!("{}: all equations vanish after elimination", chart.name));
    }
    // Every remaining equation is a multiple of the printed one, and one of
    // them is the printed equation itself up to a unit.
    let mut exact = false;
    for r in &rest {
        match r.exact_divide(&chart.printed) {
            Ok(q) => exact |= q.as_constant().is_some_and(|c| !c.is_zero()),
            Err(_) => {
                return Some(format!("{}: reduced equation {} is not a multiple of the printed one", chart.name, show(r)))
            }
        }
    }
    (!exact).then(|| format!("{}: no reduced equation equals the printed one up to a unit", chart.name))
}

/// Each printed symbolic locus satisfies the substituted equations.
fn loci_witness(eqs: &[Polynomial], section: &Section) -> Option<String> {
    for locus in &section.loci {
        let Some(sym) = &locus.symbolic else { continue };
        for (i, e) in eqs.iter().enumerate() {
            let r = sym.restriction.apply(e).expect("universe");
            let ok = match &sym.relation {
                None => r.is_zero(),
                Some(rel) => r.exact_divide(rel).is_ok(),
            };
            if !ok {
                return Some(format!("locus {}: F{} restricts to {}", locus.name, i + 1, show(&r)));
            }
        }
    }
    None
}

/// The Jacobian with respect to the seven section coordinates has rank 4 at
/// every probe point, and every probe lies on the section.
fn probe_witness(eqs: &[Polynomial], section: &Section, sampler: &mut Sampler, draws: usize) -> Option<String> {
    let vars = indices(&section.coords);
    let jac = PolyMatrix::jacobian(eqs, &vars).expect("universe");
    for locus in &section.loci {
        for n in 0..draws {
            let pt = match generic_probe(locus, sampler) {
                Some(pt) => pt,
                None => return Some(format!("locus {} probe {n}: no generic parameter draw", locus.name)),
            };
            for (i, e) in eqs.iter().enumerate() {
                match pt.evaluate(e) {
                    Ok(v) if v.is_zero() => {}
                    Ok(v) => {
                        return Some(format!("locus {} probe {n}: F{} = {v} at {}", locus.name, i + 1, point_text(&pt)))
                    }
                    Err(err) => return Some(format!("locus {} probe {n}: {err}", locus.name)),
                }
            }
            let r = jac.rank_at(&pt).expect("probe assigns all coordinates");
            if r != SECTION_CODIM {
                return Some(format!("locus {} probe {n}: Jacobian rank {r} at {}", locus.name, point_text(&pt)));
            }
        }
    }
    None
}

/// Attempts per probe before giving up on a generic parameter draw.
const PROBE_ATTEMPTS: usize = 100;

/// A probe point on the locus away from the zeros of its genericity
/// conditions.
fn generic_probe(locus: &Locus, sampler: &mut Sampler) -> Option<RationalPoint> {
    for _ in 0..PROBE_ATTEMPTS {
        let mut draw = || sampler.draw_nonzero();
        let pt = (locus.probe)(&mut draw);
        if locus.genericity.iter().all(|g| pt.evaluate(g).is_ok_and(|v| !v.is_zero())) {
            return Some(pt);
        }
    }
    None
}

/// Emptiness certificate: with generic parameters, a pure power of every
/// remaining coordinate lies in the span of monomial multiples of the
/// restricted equations (a truncated Macaulay matrix), so the locus is the
/// origin of the affine cone. Returns the multiplier degree and exponents.
pub fn emptiness_certificate(
    eqs: &[Polynomial],
    section: &Section,
    empty: &EmptyLocus,
    params: &RationalPoint,
) -> Result<(u32, Vec<(&'static str, u32)>), String> {
    let table = eqs[0].table();
    let mut restrict = params.clone();
    for z in &empty.zero {
        restrict.set(z, Rat::ZERO);
    }
    let spec: Vec<Polynomial> =
        eqs.iter().map(|e| restrict.specialize(e).expect("universe")).filter(|p| !p.is_zero()).collect();
    let rest: Vec<&'static str> = section.coords.iter().copied().filter(|c| !empty.zero.contains(c)).collect();
    let rest_idx = indices(&rest);
    for p in &spec {
        if let Some(v) = p.variables().into_iter().find(|v| !rest_idx.contains(v)) {
            return Err(format!("restricted equation still involves {}", table.name(v)));
        }
    }
    for d in 2..=MAX_CERTIFICATE_DEGREE {
        let mut index = MonomialIndex::new();
        let mut basis = EchelonBasis::new();
        for p in &spec {
            let dp = p.total_degree().unwrap_or(0);
            if dp > d {
                continue;
            }
            for m in monomials(&rest_idx, d - dp) {
                let v = index.vector(&p.mul_term(&m, &Rat::ONE));
                basis.insert(&v);
            }
        }
        let mut found = Vec::new();
        for (&name, &v) in rest.iter().zip(&rest_idx) {
            let power = (1..=d).find(|&e| {
                let x = Polynomial::monomial(table, Monomial::var_pow(v, e), Rat::ONE);
                basis.contains(&index.vector(&x))
            });
            match power {
                Some(e) => found.push((name, e)),
                None => break,
            }
        }
        if found.len() == rest.len() {
            return Ok((d, found));
        }
    }
    Err(format!("no certificate up to multiplier degree {MAX_CERTIFICATE_DEGREE}"))
}

/// All monomials of total degree ≤ `d` in `vars`.
fn monomials(vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for &v in vars {
        let mut next = Vec::new();
        for m in &out {
            for e in 0..=d.saturating_sub(m.degree()) {
                next.push(m.mul(&Monomial::var_pow(v, e)));
            }
        }
        out = next;
    }
    out
}

/// The full section check of one class: chart reduction, symbolic loci,
/// smoothness probes (`draws` per locus) and emptiness certificates
/// (`draws` parameter draws).
pub fn check_section(pi: &PiSystem, section: &Section, seed: u64, draws: usize) -> CheckResult {
    let id = format!("sections.{}", section.class);
    let start = Instant::now();
    let eqs = section.equations(&pi.f);
    if let Some(chart) = &section.chart {
        if let Some(w) = chart_witness(pi, chart) {
            return CheckResult::fail(id, w, start);
        }
    }
    if let Some(w) = loci_witness(&eqs, section) {
        return CheckResult::fail(id, w, start);
    }
    let mut sampler = Sampler::new(SampleConfig::with_seed(seed));
    if let Some(w) = probe_witness(&eqs, section, &mut sampler, draws) {
        return CheckResult::fail(id, w, start);
    }
    let mut used = draws * section.loci.len();
    if let Some(empty) = &section.empty {
        for n in 0..draws {
            let mut params = RationalPoint::new(pi.g.table());
            for p in &section.params {
                params.set(p, sampler.draw_nonzero());
            }
            if let Err(e) = emptiness_certificate(&eqs, section, empty, &params) {
                return CheckResult::fail(id, format!("{} draw {n}: {e} at {}", empty.description, point_text(&params)), start);
            }
        }
        used += draws;
    }
    CheckResult::pass(id, start, used)
}
