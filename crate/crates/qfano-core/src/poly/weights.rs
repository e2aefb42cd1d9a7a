//! Integer weights on variables and quasi-homogeneous degrees.

use super::{PolyError, Polynomial, Result, VarTable};
use std::sync::Arc;

/// An integer weight for some of the variables of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    table: Arc<VarTable>,
    weights: Vec<Option<i64>>,
}

impl WeightVector {
    pub fn new(table: &Arc<VarTable>) -> WeightVector {
        WeightVector { table: table.clone(), weights: vec![None; table.len()] }
    }

    pub fn set(&mut self, name: &str, w: i64) {
        let i = self.table.idx(name);
        self.weights[i] = Some(w);
    }

    pub fn with(mut self, name: &str, w: i64) -> WeightVector {
        self.set(name, w);
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.table.index_of(name).and_then(|i| self.weights[i])
    }

    /// Weight of `name`, panicking when unset.
    pub fn w(&self, name: &str) -> i64 {
        self.get(name).unwrap_or_else(|| panic!("no weight for `{name}`"))
    }

    /// `(name, weight)` pairs of weighted variables in table order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, i64)> {
        self.weights
            .iter()
            .enumerate()
            .filter_map(|(i, w)| w.map(|w| (self.table.name(i), w)))
    }

    fn monomial_weight(&self, m: &super::Monomial) -> Result<i64> {
        let mut s = 0;
        for (v, e) in m.pairs() {
            let w = self.weights[v].ok_or_else(|| PolyError::MissingWeight(self.table.name(v).to_string()))?;
            s += w * e as i64;
        }
        Ok(s)
    }

    /// The common weighted degree of all terms of `p`.
    pub fn weighted_degree(&self, p: &Polynomial) -> Result<i64> {
        if !Arc::ptr_eq(&self.table, p.table()) {
            return Err(PolyError::UniverseMismatch);
        }
        let mut it = p.terms().iter();
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?;
        let d = self.monomial_weight(&first.0)?;
        for (m, _) in it {
            if self.monomial_weight(m)? != d {
                return Err(PolyError::NotHomogeneous);
            }
        }
        Ok(d)
    }
}

/// Free-function form of [`WeightVector::weighted_degree`].
pub fn weighted_degree(p: &Polynomial, w: &WeightVector) -> Result<i64> {
    w.weighted_degree(p)
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn degrees() {
        let t = VarTable::new(&["x", "y", "z"]);
        let w = WeightVector::new(&t).with("x", 1).with("y", 1).with("z", 2);
        assert_eq!(w.weighted_degree(&parse(&t, "x*y + z").unwrap()), Ok(2));
        assert_eq!(w.weighted_degree(&parse(&t, "x + y^2").unwrap()), Err(PolyError::NotHomogeneous));
        assert_eq!(w.weighted_degree(&Polynomial::zero(&t)), Err(PolyError::ZeroPolynomial));
        let partial = WeightVector::new(&t).with("x", 1);
        assert_eq!(partial.weighted_degree(&parse(&t, "y").unwrap()), Err(PolyError::MissingWeight("y".into())));
    }
}
