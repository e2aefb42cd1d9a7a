//! Fibers of H¹³ over the representative tensors: the specialized equations
//! span the same linear space as the expected fiber generators.

use super::{show, CheckResult};
use crate::catalog::HSystem;
use crate::linalg::first_outside_span;
use crate::poly::Polynomial;
use std::time::Instant;

/// Span equality at the origin and `𝗉₁..𝗉₄`.
pub fn check_fibers(h: &HSystem) -> CheckResult {
    let id = "h13.fibers";
    let start = Instant::now();
    for ((name, pt), (fname, expected)) in h.orbit_points.iter().zip(&h.fiber_data) {
        debug_assert_eq!(name, fname);
        let spec: Vec<Polynomial> = h
            .equations()
            .iter()
            .map(|e| pt.specialize(e).expect("universe"))
            .filter(|p| !p.is_zero())
            .collect();
        if let Some(p) = first_outside_span(&spec, expected) {
            return CheckResult::fail(id, format!("over {name}: expected generator {} is not implied", show(p)), start);
        }
        if let Some(p) = first_outside_span(expected, &spec) {
            return CheckResult::fail(id, format!("over {name}: specialized equation {} is unexpected", show(p)), start);
        }
    }
    CheckResult::pass(id, start, 0)
}
