//! The fixed variable universe shared by every catalog object.

use crate::poly::{parse, Polynomial, VarTable};
use std::sync::{Arc, OnceLock};

/// Coordinates of Π¹⁵ in their canonical order.
pub const PI_VARS: [&str; 19] = [
    "p1", "p2", "p3", "p4", "u", "v", "t1", "t2", "L123", "L124", "L125", "L126", "L135", "L136", "L245", "L246",
    "s1", "s2", "s3",
];

/// The 16 coordinates of the ambient space of the hypersurface {G = 0}.
pub const G_VARS: [&str; 16] = [
    "p1", "p2", "p3", "p4", "u", "v", "t1", "t2", "L123", "L124", "L125", "L126", "L135", "L136", "L245", "L246",
];

/// The eight `L` coordinates.
pub const L_VARS: [&str; 8] = ["L123", "L124", "L125", "L126", "L135", "L136", "L245", "L246"];

/// The unprojection variables.
pub const S_VARS: [&str; 3] = ["s1", "s2", "s3"];

/// Coordinates of H¹³: the eight tensor entries, the three vectors and the
/// three scalars.
pub const H_VARS: [&str; 17] = [
    "p111", "p112", "p121", "p122", "p211", "p212", "p221", "p222", "x11", "x21", "x12", "x22", "x13", "x23", "u1",
    "u2", "u3",
];

/// Auxiliary symbols: the parameter `w` of the normalization map, the base
/// coordinates `A`, `B`, generic 2×2 matrix entries, the clearing symbol
/// `iota` standing for `1/(ad − bc)`, and the series indeterminate `t`.
pub const AUX_VARS: [&str; 9] = ["w", "A", "B", "a", "b", "c", "d", "iota", "t"];

/// Free parameters and replacement coordinates of the threefold sections.
pub const SECTION_VARS: [&str; 34] = [
    "a0", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c2", "c3", "c4", "a123", "b123", "c123", "a124", "b124",
    "c124", "a125", "b125", "c125", "a126", "a135", "b135", "c135", "a136", "q11", "q12", "q13", "q21", "q22", "q23",
    "T2", "l126",
];

/// The shared universe: Π¹⁵ coordinates first, then H¹³, auxiliaries and
/// section parameters.
pub fn universe() -> &'static Arc<VarTable> {
    static U: OnceLock<Arc<VarTable>> = OnceLock::new();
    U.get_or_init(|| {
        let names: Vec<&str> = PI_VARS
            .iter()
            .chain(H_VARS.iter())
            .chain(AUX_VARS.iter())
            .chain(SECTION_VARS.iter())
            .copied()
            .collect();
        VarTable::new(&names)
    })
}

/// Parses `src` over the universe; panics on malformed catalog text.
pub fn poly(src: &str) -> Polynomial {
    parse(universe(), src).unwrap_or_else(|e| panic!("catalog polynomial `{src}`: {e}"))
}

/// Index of `name` in the universe.
pub fn idx(name: &str) -> usize {
    universe().idx(name)
}

/// Indices of several names.
pub fn indices(names: &[&str]) -> Vec<usize> {
    names.iter().map(|n| idx(n)).collect()
}
