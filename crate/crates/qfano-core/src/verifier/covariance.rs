//! Symbolic group covariance: GL₂ on Π¹⁵, (GL₂)³ ⋊ S₃ on H¹³, and the
//! semi-invariance of the hyperdeterminant.

use super::{show, CheckResult};
use crate::catalog::actions::{det_g, gl2_action, h_perm, iota, ActionTarget, GL2Action, S3};
use crate::catalog::{HSystem, PiSystem};
use crate::linalg::first_outside_span;
use std::time::Instant;

/// Every rule of `act`: `det^m · (source ∘ act)|_{iota = 1/det} = det^m · expected`.
pub fn rule_witness(act: &GL2Action) -> Option<String> {
    let dt = det_g();
    for rule in &act.rules {
        let img = act.sub.apply(&rule.source).expect("universe");
        let lhs = img.clear_variable(iota(), &dt, rule.power);
        let rhs = &dt.pow(rule.power) * &rule.expected;
        let residual = &lhs - &rhs;
        if !residual.is_zero() {
            return Some(format!("{:?}, {}: residual {}", act.target, rule.name, show(&residual)));
        }
    }
    None
}

/// All nine Π¹⁵ equations transform as stated under symbolic `g`.
pub fn check_gl2_covariance(pi: &PiSystem, h: &HSystem) -> CheckResult {
    let id = "pi.gl2_covariance";
    let start = Instant::now();
    match rule_witness(&gl2_action(ActionTarget::Pi, pi, h)) {
        None => CheckResult::pass(id, start, 0),
        Some(w) => CheckResult::fail(id, w, start),
    }
}

/// The factor rules for `G₁..G₆` and the S₃-stability of the equation span.
pub fn check_h13_actions(pi: &PiSystem, h: &HSystem) -> CheckResult {
    let id = "h13.actions";
    let start = Instant::now();
    for f in 1..=3 {
        let mut act = gl2_action(ActionTarget::HFactor(f), pi, h);
        act.rules.retain(|r| r.name != "hyperdet");
        if let Some(w) = rule_witness(&act) {
            return CheckResult::fail(id, w, start);
        }
    }
    let eqs = h.equations();
    for sigma in S3 {
        let sub = h_perm(sigma);
        let img: Vec<_> = eqs.iter().map(|e| sub.apply(e).expect("universe")).collect();
        if let Some(p) = first_outside_span(&eqs, &img) {
            return CheckResult::fail(id, format!("permutation {sigma:?}: image {} leaves the equation span", show(p)), start);
        }
        if let Some(p) = first_outside_span(&img, &eqs) {
            return CheckResult::fail(id, format!("permutation {sigma:?}: {} is not in the image span", show(p)), start);
        }
    }
    CheckResult::pass(id, start, 0)
}

/// `ℋ ∘ g_f = det(g)²·ℋ` for each factor and `ℋ ∘ σ = ℋ` for all σ ∈ S₃.
pub fn check_hyperdet(pi: &PiSystem, h: &HSystem) -> CheckResult {
    let id = "h13.hyperdet";
    let start = Instant::now();
    for f in 1..=3 {
        let mut act = gl2_action(ActionTarget::HFactor(f), pi, h);
        act.rules.retain(|r| r.name == "hyperdet");
        if let Some(w) = rule_witness(&act) {
            return CheckResult::fail(id, w, start);
        }
    }
    for sigma in S3 {
        let residual = &h_perm(sigma).apply(&h.hyperdet).expect("universe") - &h.hyperdet;
        if !residual.is_zero() {
            return CheckResult::fail(id, format!("permutation {sigma:?}: residual {}", show(&residual)), start);
        }
    }
    CheckResult::pass(id, start, 0)
}
