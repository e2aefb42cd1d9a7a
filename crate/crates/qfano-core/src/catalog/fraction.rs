//! Quotients of polynomials, used for chart coordinates and for maps that
//! are only defined away from a denominator locus.

use crate::poly::{PolyError, Polynomial, RationalPoint, Result};
use crate::rat::Rat;
use std::fmt;

/// A formal quotient `num / den`.
#[derive(Clone, PartialEq, Eq)]
pub struct Fraction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl Fraction {
    pub fn new(num: Polynomial, den: Polynomial) -> Fraction {
        assert!(!den.is_zero(), "zero denominator");
        Fraction { num, den }
    }

    pub fn poly(p: Polynomial) -> Fraction {
        let one = Polynomial::one(p.table());
        Fraction { num: p, den: one }
    }

    /// Value at `pt`; errors with [`PolyError::DivisionByZero`] on the
    /// denominator locus.
    pub fn evaluate(&self, pt: &RationalPoint) -> Result<Rat> {
        let d = pt.evaluate(&self.den)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(&pt.evaluate(&self.num)? / &d)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
