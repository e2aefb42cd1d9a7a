//! Harness integrity: every check fails, with a nonzero witness, on a copy
//! of the catalog in which one defining object has been perturbed by a
//! single term.

mod common;

use common::{mutations, undetected};
use qfano_core::verifier::{registry, CheckKind};

/// Every class-independent check and every section check has its own
/// mutation; the graded families (identical code per class) have one each.
#[test]
fn mutations_cover_the_registry() {
    let covered: Vec<&str> = mutations().iter().map(|m| m.0).collect();
    for spec in registry() {
        let must = spec.kind == CheckKind::Symbolic || spec.class.is_none() || spec.id.starts_with("sections.");
        if must && !spec.id.starts_with("graded.") {
            assert!(covered.contains(&spec.id.as_str()), "no mutation for {}", spec.id);
        }
    }
    for family in ["graded.homogeneity.", "graded.adjunction.", "graded.numerator."] {
        assert!(covered.iter().any(|id| id.starts_with(family)), "no mutation for {family}*");
    }
}

#[test]
fn every_mutation_is_detected() {
    let (missed, tried) = undetected(42, 20);
    assert!(tried >= 30);
    assert!(missed.is_empty(), "undetected faults:\n{}", missed.join("\n"));
}
