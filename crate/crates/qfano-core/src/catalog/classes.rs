//! The eight prime ℚ-Fano threefold classes: weight tables, ambient
//! weighted projective spaces, cut degrees, baskets and threefold sections.

use super::sections::{section, Section};
use super::vars::universe;
use crate::graded::WeightBase;
use crate::poly::WeightVector;
use std::fmt;
use thiserror::Error;

/// The class numbers, in the order of the two weight tables.
pub const CLASS_NUMBERS: [u32; 8] = [308, 501, 512, 550, 872, 577, 878, 1766];

/// Errors of catalog lookups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown class No.{0}; known classes: 308, 501, 512, 550, 872, 577, 878, 1766")]
    UnknownClass(u32),
    #[error("unknown catalog object `{0}`")]
    UnknownObject(String),
}

/// `count × 1/r(a₁, a₂, a₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasketPoint {
    pub count: u32,
    pub r: u32,
    pub weights: [u32; 3],
}

impl fmt::Display for BasketPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        if self.count > 1 {
            write!(f, "{}×", self.count)?;
        }
        write!(f, "1/{}({a},{b},{c})", self.r)
    }
}

/// One class record.
#[derive(Clone, Debug)]
pub struct FanoClass {
    pub number: u32,
    pub d: i64,
    /// Whether the weights come from the first (`d ∈ {7,7,6,5,4}`) or the
    /// second (`d ∈ {4,3,2}`) weight table.
    pub first_table: bool,
    /// Weights of the Π¹⁵ coordinates; `L₂₄₆` has weight 0 (pinned to 1).
    pub weight_table: WeightVector,
    /// Weights of the ambient ℙ_X.
    pub ambient_px: [i64; 8],
    /// Degrees of the cuts `X ⊂ Π`.
    pub cuts: Vec<i64>,
    /// Whether the key variety is the cone Π¹⁴_ℙ rather than Π¹³_ℙ.
    pub cone: bool,
    pub basket: Vec<BasketPoint>,
    /// The threefold section `T_𝔸` with its charts and loci.
    pub section: Section,
}

impl FanoClass {
    /// `(w(p₃), w(u), w(v), w(G))` with `w(G) = 3w(v)`.
    pub fn base(&self) -> WeightBase {
        let w = |n: &str| self.weight_table.w(n);
        WeightBase { w_p3: w("p3"), w_u: w("u"), w_v: w("v"), w_g: 3 * w("v") }
    }

    /// Dimension of the key variety (13, or 14 for the cone).
    pub fn key_dim(&self) -> usize {
        if self.cone {
            14
        } else {
            13
        }
    }

    /// The basket in its printed form.
    pub fn basket_text(&self) -> String {
        self.basket.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")
    }
}

/// Raw Table-1 data: number, d, first table, ℙ_X weights, cuts, cone, basket.
type Row = (u32, i64, bool, [i64; 8], &'static [i64], bool, &'static [(u32, u32, [u32; 3])]);

const TABLE: [Row; 8] = [
    (
        308,
        7,
        true,
        [1, 5, 6, 6, 7, 8, 9, 10],
        &[2, 2, 3, 3, 4, 4, 4, 5, 6, 6, 8],
        true,
        &[(1, 2, [1, 1, 1]), (1, 3, [1, 1, 2]), (1, 5, [1, 2, 3]), (2, 6, [1, 1, 5])],
    ),
    (
        501,
        7,
        true,
        [1, 3, 6, 7, 8, 8, 9, 10],
        &[2, 2, 3, 4, 4, 4, 5, 5, 6, 6, 6],
        true,
        &[(1, 2, [1, 1, 1]), (4, 3, [1, 1, 2]), (1, 8, [1, 1, 7])],
    ),
    (
        512,
        6,
        true,
        [1, 3, 5, 6, 7, 7, 8, 9],
        &[2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6],
        true,
        &[(3, 3, [1, 1, 2]), (1, 5, [1, 2, 3]), (1, 7, [1, 1, 6])],
    ),
    (
        550,
        5,
        true,
        [1, 3, 4, 5, 6, 6, 7, 8],
        &[2, 2, 2, 3, 3, 4, 4, 4, 5, 6, 6],
        true,
        &[(1, 2, [1, 1, 1]), (3, 3, [1, 1, 2]), (1, 4, [1, 1, 3]), (1, 6, [1, 1, 5])],
    ),
    (
        872,
        4,
        true,
        [1, 3, 3, 4, 5, 5, 6, 7],
        &[2, 2, 2, 3, 3, 4, 4, 5, 6, 6],
        false,
        &[(5, 3, [1, 1, 2]), (1, 5, [1, 1, 4])],
    ),
    (
        577,
        4,
        false,
        [1, 3, 4, 5, 5, 6, 6, 7],
        &[2, 2, 2, 3, 3, 3, 3, 4, 4, 5],
        false,
        &[(1, 2, [1, 1, 1]), (3, 3, [1, 1, 2]), (2, 5, [1, 1, 4])],
    ),
    (
        878,
        3,
        false,
        [1, 3, 3, 4, 4, 5, 5, 6],
        &[2, 2, 2, 2, 3, 3, 3, 3, 4, 4],
        false,
        &[(4, 3, [1, 1, 2]), (2, 4, [1, 1, 3])],
    ),
    (
        1766,
        2,
        false,
        [1, 2, 3, 3, 3, 4, 4, 5],
        &[1, 2, 2, 2, 2, 3, 3, 3, 3, 4],
        false,
        &[(2, 2, [1, 1, 1]), (5, 3, [1, 1, 2])],
    ),
];

/// The printed weight tables: entries `d + offset` or constants.
pub fn weight_table(first: bool, d: i64) -> WeightVector {
    let rows: [(&str, i64); 19] = if first {
        [
            ("u", d - 1),
            ("v", d + 1),
            ("p1", d - 2),
            ("p3", d),
            ("p2", d - 3),
            ("p4", d - 1),
            ("L123", 6),
            ("L125", 5),
            ("L124", 4),
            ("L126", 3),
            ("L135", 6),
            ("L136", 4),
            ("L245", 2),
            ("L246", 0),
            ("s1", d + 1),
            ("s2", d + 2),
            ("s3", d + 3),
            ("t1", 2),
            ("t2", 3),
        ]
    } else {
        [
            ("u", d + 1),
            ("v", d + 2),
            ("p1", d),
            ("p3", d + 1),
            ("p2", d - 1),
            ("p4", d),
            ("L123", 4),
            ("L125", 3),
            ("L124", 3),
            ("L126", 2),
            ("L135", 3),
            ("L136", 2),
            ("L245", 1),
            ("L246", 0),
            ("s1", d + 1),
            ("s2", d + 2),
            ("s3", d + 3),
            ("t1", 2),
            ("t2", 3),
        ]
    };
    let mut w = WeightVector::new(universe());
    for (n, x) in rows {
        w.set(n, x);
    }
    w
}

/// The record of class `No.n`.
pub fn fano_class(n: u32) -> Result<FanoClass, CatalogError> {
    let &(number, d, first, px, cuts, cone, basket) =
        TABLE.iter().find(|r| r.0 == n).ok_or(CatalogError::UnknownClass(n))?;
    Ok(FanoClass {
        number,
        d,
        first_table: first,
        weight_table: weight_table(first, d),
        ambient_px: px,
        cuts: cuts.to_vec(),
        cone,
        basket: basket.iter().map(|&(count, r, weights)| BasketPoint { count, r, weights }).collect(),
        section: section(number).expect("every class has a section"),
    })
}

/// All eight class records.
pub fn all_classes() -> Vec<FanoClass> {
    CLASS_NUMBERS.iter().map(|&n| fano_class(n).expect("known class")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_rows() {
        let c = fano_class(308).unwrap();
        assert_eq!(c.weight_table.get("u"), Some(6));
        assert_eq!(c.weight_table.get("v"), Some(8));
        assert_eq!(c.weight_table.get("s3"), Some(10));
        assert_eq!(c.ambient_px, [1, 5, 6, 6, 7, 8, 9, 10]);
        assert!(c.cone);
        assert_eq!(c.basket_text(), "1/2(1,1,1), 1/3(1,1,2), 1/5(1,2,3), 2×1/6(1,1,5)");
        let c = fano_class(1766).unwrap();
        assert_eq!((c.weight_table.get("u"), c.weight_table.get("v")), (Some(3), Some(4)));
        assert_eq!(c.cuts, vec![1, 2, 2, 2, 2, 3, 3, 3, 3, 4]);
        assert!(!c.cone);
        assert_eq!(fano_class(999).unwrap_err(), CatalogError::UnknownClass(999));
        for c in all_classes() {
            assert_eq!(c.cuts.len(), c.key_dim() - 3);
        }
    }
}
