//! The isomorphism between the part of Π¹⁵ over the admissible base
//! `{(A−B)(2A+B)(A+2B) ≠ 0}` and `U_AB × H¹³`.
//!
//! The base covering sets `t₁ = −A²−AB−B²`, `t₂ = −AB(A+B)`; the forward
//! map sends Π-coordinates to H¹³-coordinates, each component stored as a
//! fraction whose denominator is one of `(A−B)(2A+B)`, `(A−B)(A+2B)`,
//! `(2A+B)(A+2B)` or 1.

use super::fraction::Fraction;
use super::vars::{poly, universe, H_VARS};
use crate::poly::{Polynomial, RationalPoint, Result, Substitution};
use crate::rat::Rat;

/// Base covering and forward substitution.
#[derive(Clone, Debug)]
pub struct IsomData {
    /// `t₁ ↦ −A²−AB−B²`, `t₂ ↦ −AB(A+B)`.
    pub base_sub: Substitution,
    /// `(H¹³ coordinate, image)` in the order of [`H_VARS`].
    pub fwd: Vec<(&'static str, Fraction)>,
}

/// `(A−B)(2A+B)(A+2B)`, the product of all forward denominators.
pub const ADMISSIBLE_TEXT: &str = "(A-B)*(2*A+B)*(A+2*B)";

const A1: &str = "(A-B)*(2*A+B)";
const A2: &str = "(A-B)*(A+2*B)";
const A3: &str = "(2*A+B)*(A+2*B)";

/// `(coordinate, polynomial part, fractional numerator, denominator)`: the
/// image is `poly + num/den`.
const FWD_TEXT: [(&str, &str, &str, &str); 17] = [
    ("p111", "-3*L246", "0", "1"),
    ("p112", "3*L245", "3*(L124+(A+B)*L126)", A3),
    ("p121", "3*L245", "3*(-L124+B*L126)", A2),
    ("p122", "-3*L136", "3*(L123-A*L125)", A1),
    ("p211", "3*L245", "3*(L124-A*L126)", A1),
    ("p212", "-3*L136", "3*(-L123+B*L125)", A2),
    ("p221", "-3*L136", "3*(L123+(A+B)*L125)", A3),
    ("p222", "3*L135", "0", "1"),
    ("x11", "-A*p1-A^2*p2+u", "0", "1"),
    ("x21", "-A*p3-A^2*p4+v", "0", "1"),
    ("x12", "B*p1+B^2*p2-u", "0", "1"),
    ("x22", "B*p3+B^2*p4-v", "0", "1"),
    ("x13", "-(A+B)*p1+(A+B)^2*p2-u", "0", "1"),
    ("x23", "-(A+B)*p3+(A+B)^2*p4-v", "0", "1"),
    (
        "u1",
        "3*((A*B+B^2)*s1-A*s2-s3)",
        "3*((2*A*L123-(A*B+B^2)*L125)*p1-((2*A^2+A*B+B^2)*L123-2*(A^2*B+A*B^2)*L125)*p2\
         +(2*A*L124-(A*B+B^2)*L126)*p3-((2*A^2+A*B+B^2)*L124-2*(A^2*B+A*B^2)*L126)*p4\
         +(L123-A*L125)*u+(L124-A*L126)*v)",
        A1,
    ),
    (
        "u2",
        "3*((A^2+A*B)*s1-B*s2-s3)",
        "3*((-2*B*L123+(A^2+A*B)*L125)*p1+((A^2+A*B+2*B^2)*L123-2*(A^2*B+A*B^2)*L125)*p2\
         +(-2*B*L124+(A^2+A*B)*L126)*p3+((A^2+A*B+2*B^2)*L124-2*(A^2*B+A*B^2)*L126)*p4\
         +(-L123+B*L125)*u+(-L124+B*L126)*v)",
        A2,
    ),
    // The overall sign of u₃ makes 𝖦₃, G₅, G₆ vanish on images.
    (
        "u3",
        "-3*(A*B*s1-(A+B)*s2+s3)",
        "-3*((2*(A+B)*L123-A*B*L125)*p1+((2*A^2+3*A*B+2*B^2)*L123-2*(A^2*B+A*B^2)*L125)*p2\
         +(2*(A+B)*L124-A*B*L126)*p3+((2*A^2+3*A*B+2*B^2)*L124-2*(A^2*B+A*B^2)*L126)*p4\
         +(-L123-(A+B)*L125)*u+(-L124-(A+B)*L126)*v)",
        A3,
    ),
];

/// Builds the isomorphism data.
pub fn isom_data() -> IsomData {
    let base_sub = Substitution::identity(universe())
        .with("t1", poly("-A^2-A*B-B^2"))
        .with("t2", poly("-A*B*(A+B)"));
    let fwd = FWD_TEXT
        .iter()
        .map(|&(name, p, n, d)| {
            let den = poly(d);
            let num = &(&poly(p) * &den) + &poly(n);
            (name, Fraction::new(num, den))
        })
        .collect();
    debug_assert!(FWD_TEXT.iter().zip(H_VARS).all(|(r, h)| r.0 == h));
    IsomData { base_sub, fwd }
}

impl IsomData {
    /// Image of a Π-point (including `A`, `B`) as an H¹³ point.
    pub fn apply(&self, pt: &RationalPoint) -> Result<RationalPoint> {
        let mut out = RationalPoint::new(universe());
        for (name, f) in &self.fwd {
            out.set(name, f.evaluate(pt)?);
        }
        Ok(out)
    }

    /// The image fraction of `name`.
    pub fn image(&self, name: &str) -> Option<&Fraction> {
        self.fwd.iter().find(|(n, _)| *n == name).map(|(_, f)| f)
    }
}

/// `(A−B)(2A+B)(A+2B)` at the given base point.
pub fn admissibility(a: &Rat, b: &Rat) -> Rat {
    let two = Rat::from_i64(2);
    &(&(a - b) * &(&(&two * a) + b)) * &(a + &(&two * b))
}

/// The polynomial `(A−B)(2A+B)(A+2B)`.
pub fn admissible_poly() -> Polynomial {
    poly(ADMISSIBLE_TEXT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_components() {
        let iso = isom_data();
        assert_eq!(iso.image("p111").unwrap().num, poly("-3*L246"));
        assert_eq!(iso.image("p222").unwrap().num, poly("3*L135"));
        assert_eq!(iso.base_sub.image(super::super::vars::idx("t2")), poly("-A^2*B - A*B^2"));
        let prod = admissible_poly();
        for (_, f) in &iso.fwd {
            assert!(prod.exact_divide(&f.den).is_ok());
        }
        assert_eq!(admissibility(&Rat::ONE, &Rat::ZERO), Rat::from_i64(2));
        assert!(admissibility(&Rat::ONE, &Rat::ONE).is_zero());
    }
}
