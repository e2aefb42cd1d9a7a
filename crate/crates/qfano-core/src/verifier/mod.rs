//! The named check suite. Every check is a pure function of the catalog (and,
//! for randomized checks, a seed) returning a [`CheckResult`] with a concrete
//! witness on failure.

pub mod covariance;
pub mod fibers;
pub mod identities;
pub mod random;
pub mod sections;
pub mod unprojection;

use crate::catalog::{Catalog, CLASS_NUMBERS};
use crate::graded::{adjunction_check, certify_homogeneity, numerator_check, WeightBase};
use crate::poly::{Polynomial, RationalPoint};
use sha2::{Digest, Sha256};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn is_pass(self) -> bool {
        self == CheckStatus::Pass
    }
}

/// The result of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    /// A concrete counterexample (nonzero polynomial, point, index) on failure.
    pub witness: Option<String>,
    pub elapsed: Duration,
    pub samples_used: usize,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>, start: Instant, samples_used: usize) -> CheckResult {
        CheckResult { id: id.into(), status: CheckStatus::Pass, witness: None, elapsed: start.elapsed(), samples_used }
    }

    pub fn fail(id: impl Into<String>, witness: String, start: Instant) -> CheckResult {
        CheckResult {
            id: id.into(),
            status: CheckStatus::Fail,
            witness: Some(witness),
            elapsed: start.elapsed(),
            samples_used: 0,
        }
    }

    pub fn skipped(id: impl Into<String>, reason: String) -> CheckResult {
        CheckResult {
            id: id.into(),
            status: CheckStatus::Skipped,
            witness: Some(reason),
            elapsed: Duration::ZERO,
            samples_used: 0,
        }
    }

    /// `Ok(samples)` passes, `Err(witness)` fails.
    pub fn from_outcome(id: impl Into<String>, start: Instant, outcome: Result<usize, String>) -> CheckResult {
        match outcome {
            Ok(n) => CheckResult::pass(id, start, n),
            Err(w) => CheckResult::fail(id, w, start),
        }
    }
}

/// Longest witness text kept verbatim.
const WITNESS_LIMIT: usize = 2000;

/// Canonical text of a residual polynomial, truncated for very large ones.
pub fn show(p: &Polynomial) -> String {
    let text = p.to_string();
    if text.len() <= WITNESS_LIMIT {
        return text;
    }
    let mut cut = WITNESS_LIMIT;
    while !text.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{} … ({} terms)", &text[..cut], p.len())
}

/// `name=value` pairs of the assigned coordinates, in universe order.
pub fn point_text(pt: &RationalPoint) -> String {
    pt.entries().map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(", ")
}

/// Parameter draws per locus (and emptiness certificates) in section checks.
pub const SECTION_DRAWS: usize = 20;

/// Generic weight bases used alongside the eight class bases.
pub const GENERIC_BASES: [(&str, WeightBase); 2] = [
    ("generic-a", WeightBase { w_p3: 101, w_u: 103, w_v: 107, w_g: 1009 }),
    ("generic-b", WeightBase { w_p3: 11, w_u: 13, w_v: 17, w_g: 97 }),
];

/// How a check establishes its claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Exact polynomial identities, no sampling.
    Symbolic,
    /// Exact evaluation at seeded rational points.
    Randomized,
    /// Integer bookkeeping on weights and series.
    Numeric,
}

/// A registered check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    pub kind: CheckKind,
    /// Heading under which the text report lists the check.
    pub group: &'static str,
    pub title: String,
    /// The class a per-class check belongs to.
    pub class: Option<u32>,
}

fn spec(id: &str, kind: CheckKind, group: &'static str, title: &str) -> CheckSpec {
    CheckSpec { id: id.to_string(), kind, group, title: title.to_string(), class: None }
}

/// Report headings, in display order.
pub const GROUPS: [&str; 5] = [
    "Key variety Π¹⁵: identities",
    "Key variety Π¹⁵: points and charts",
    "Key variety H¹³",
    "Threefold sections",
    "Weights and Hilbert series",
];

/// All checks, sorted by id.
pub fn registry() -> Vec<CheckSpec> {
    use CheckKind::*;
    let [pid, ppt, h13, sec, grd] = GROUPS;
    let mut out = vec![
        spec("pi.g_decomposition", Symbolic, pid, "G is the stated combination of the chosen minors"),
        spec("pi.normalization_kernel", Symbolic, pid, "all 20 minors and G vanish under the normalization map"),
        spec("pi.syzygy", Symbolic, pid, "(1, w, w²)·h(M) = 0"),
        spec("pi.block_presentation", Symbolic, pid, "block presentation of F1..F6"),
        spec("pi.unprojection", Symbolic, pid, "Cramer lifts and the remaining equations modulo G"),
        spec("pi.gl2_covariance", Symbolic, pid, "GL2 covariance of F1..F9"),
        spec("pi.projection_roundtrip", Randomized, ppt, "lifts satisfy F, agree across triples, and project back"),
        spec("pi.pfaffian_chart", Randomized, ppt, "five 4×4 Pfaffians vanish on the chart p2·p4 ≠ 0"),
        spec("pi.singular_locus", Randomized, ppt, "singular-locus samples, rank drops and generic rank 4"),
        spec("h13.contractions", Symbolic, h13, "two-way contraction identities"),
        spec("h13.actions", Symbolic, h13, "(GL2)³ ⋊ S3 action on G1..G6"),
        spec("h13.hyperdet", Symbolic, h13, "hyperdeterminant semi-invariance"),
        spec("h13.fibers", Symbolic, h13, "fibers over the origin and the four orbit representatives"),
        spec("h13.isomorphism", Randomized, h13, "images of admissible Π points lie on H13"),
    ];
    for n in CLASS_NUMBERS {
        let mut s = spec(&format!("sections.{n}"), Randomized, sec, &format!("threefold section of No.{n}"));
        s.class = Some(n);
        out.push(s);
        for (what, title) in [
            ("homogeneity", "F1..F9 are quasi-homogeneous of the stated degrees"),
            ("adjunction", "K_X = O(−1) and the canonical degree of the key variety"),
            ("numerator", "Hilbert numerator of X: exact, palindromic, codimension 4"),
        ] {
            let mut s = spec(&format!("graded.{what}.{n}"), Numeric, grd, &format!("No.{n}: {title}"));
            s.class = Some(n);
            out.push(s);
        }
    }
    for (name, _) in GENERIC_BASES {
        out.push(spec(&format!("graded.homogeneity.{name}"), Numeric, grd, "F1..F9 are quasi-homogeneous for a generic base"));
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Per-check seed: the first eight bytes of SHA-256(master seed ‖ id).
pub fn derive_seed(master: u64, id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(id.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
}

/// Runs the check `id` against `cat`; `None` for an unknown id.
pub fn run_check(id: &str, cat: &Catalog, master_seed: u64, samples: usize) -> Option<CheckResult> {
    let (pi, h) = (&cat.pi, &cat.h);
    let seed = derive_seed(master_seed, id);
    let result = match id {
        "pi.g_decomposition" => identities::check_g_decomposition(pi),
        "pi.normalization_kernel" => identities::check_normalization_kernel(pi),
        "pi.syzygy" => identities::check_syzygy(pi),
        "pi.block_presentation" => identities::check_block_presentation(pi),
        "pi.unprojection" => unprojection::check_unprojection(pi),
        "pi.gl2_covariance" => covariance::check_gl2_covariance(pi, h),
        "pi.projection_roundtrip" => random::check_projection_roundtrip(pi, seed, samples),
        "pi.pfaffian_chart" => random::check_pfaffian_chart(pi, seed, samples),
        "pi.singular_locus" => random::check_singular_locus(pi, seed, samples),
        "h13.contractions" => identities::check_contractions(h),
        "h13.actions" => covariance::check_h13_actions(pi, h),
        "h13.hyperdet" => covariance::check_hyperdet(pi, h),
        "h13.fibers" => fibers::check_fibers(h),
        "h13.isomorphism" => random::check_isomorphism(pi, h, &cat.iso, seed, samples),
        _ => return run_class_check(id, cat, seed),
    };
    Some(result)
}

fn run_class_check(id: &str, cat: &Catalog, seed: u64) -> Option<CheckResult> {
    let (family, rest) = id.rsplit_once('.')?;
    if family == "graded.homogeneity" {
        if let Some((_, base)) = GENERIC_BASES.iter().find(|(n, _)| *n == rest) {
            return Some(certify_homogeneity(id, *base, &cat.pi.f));
        }
    }
    let class = cat.class(rest.parse().ok()?).ok()?;
    Some(match family {
        "sections" => sections::check_section(&cat.pi, &class.section, seed, SECTION_DRAWS),
        "graded.homogeneity" => certify_homogeneity(id, class.base(), &cat.pi.f),
        "graded.adjunction" => adjunction_check(class),
        "graded.numerator" => numerator_check(class),
        _ => return None,
    })
}
