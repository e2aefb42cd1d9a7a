//! Substitution homomorphisms and point evaluation.

use super::{Monomial, PolyError, Polynomial, Result, VarTable};
use crate::rat::Rat;
use rustc_hash::FxHashMap;
use std::sync::Arc;

/// A ring homomorphism fixing every unassigned variable.
#[derive(Clone, Debug)]
pub struct Substitution {
    table: Arc<VarTable>,
    images: Vec<Option<Polynomial>>,
}

impl Substitution {
    pub fn identity(table: &Arc<VarTable>) -> Substitution {
        Substitution { table: table.clone(), images: vec![None; table.len()] }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// Assigns `image` to the variable with index `idx`.
    pub fn set_idx(&mut self, idx: usize, image: Polynomial) -> Result<()> {
        if !Arc::ptr_eq(&self.table, image.table()) {
            return Err(PolyError::UniverseMismatch);
        }
        self.images[idx] = Some(image);
        Ok(())
    }

    pub fn set(&mut self, name: &str, image: Polynomial) -> Result<()> {
        let i = self
            .table
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        self.set_idx(i, image)
    }

    /// Builder form of [`Substitution::set`]; panics on error.
    pub fn with(mut self, name: &str, image: Polynomial) -> Substitution {
        self.set(name, image).expect("invalid substitution entry");
        self
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.table.index_of(name).and_then(|i| self.images[i].as_ref())
    }

    pub fn get_idx(&self, idx: usize) -> Option<&Polynomial> {
        self.images[idx].as_ref()
    }

    /// Iterates over `(variable index, image)` for assigned variables.
    pub fn assigned(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.images.iter().enumerate().filter_map(|(i, p)| p.as_ref().map(|p| (i, p)))
    }

    /// Image of the variable `idx` (the variable itself when unassigned).
    pub fn image(&self, idx: usize) -> Polynomial {
        match &self.images[idx] {
            Some(p) => p.clone(),
            None => Polynomial::var_idx(&self.table, idx),
        }
    }

    /// The composite `p ↦ other(self(p))`.
    pub fn then(&self, other: &Substitution) -> Result<Substitution> {
        let mut out = other.clone();
        for i in 0..self.images.len() {
            if let Some(p) = &self.images[i] {
                out.images[i] = Some(other.apply(p)?);
            }
        }
        Ok(out)
    }

    /// Applies the homomorphism to `p`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if !Arc::ptr_eq(&self.table, p.table()) {
            return Err(PolyError::UniverseMismatch);
        }
        let mut powers: FxHashMap<(usize, u32), Polynomial> = FxHashMap::default();
        let mut parts: FxHashMap<Monomial, Vec<(Monomial, Rat)>> = FxHashMap::default();
        // Group terms by their assigned part so that each distinct product of
        // images is expanded once.
        for (m, c) in p.terms() {
            let mut fixed = Monomial::one();
            let mut moved = Monomial::one();
            for (v, e) in m.pairs() {
                if self.images[v].is_some() {
                    moved = moved.mul(&Monomial::var_pow(v, e));
                } else {
                    fixed = fixed.mul(&Monomial::var_pow(v, e));
                }
            }
            parts.entry(moved).or_default().push((fixed, c.clone()));
        }
        let mut pieces = Vec::with_capacity(parts.len());
        for (moved, rest) in parts {
            let mut img = Polynomial::one(&self.table);
            for (v, e) in moved.pairs() {
                let pw = powers
                    .entry((v, e))
                    .or_insert_with(|| self.images[v].as_ref().unwrap().pow(e))
                    .clone();
                img = &img * &pw;
            }
            let cofactor = Polynomial::from_terms(&self.table, rest);
            pieces.push(&img * &cofactor);
        }
        Ok(super::sum_tree(&self.table, pieces))
    }
}

/// An assignment of exact rational values to some of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    table: Arc<VarTable>,
    values: Vec<Option<Rat>>,
}

impl RationalPoint {
    pub fn new(table: &Arc<VarTable>) -> RationalPoint {
        RationalPoint { table: table.clone(), values: vec![None; table.len()] }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn set(&mut self, name: &str, value: Rat) {
        let i = self.table.idx(name);
        self.values[i] = Some(value);
    }

    pub fn with(mut self, name: &str, value: impl Into<Rat>) -> RationalPoint {
        self.set(name, value.into());
        self
    }

    pub fn set_idx(&mut self, idx: usize, value: Rat) {
        self.values[idx] = Some(value);
    }

    pub fn unset(&mut self, name: &str) {
        let i = self.table.idx(name);
        self.values[i] = None;
    }

    pub fn get(&self, name: &str) -> Option<&Rat> {
        self.table.index_of(name).and_then(|i| self.values[i].as_ref())
    }

    pub fn get_idx(&self, idx: usize) -> Option<&Rat> {
        self.values[idx].as_ref()
    }

    /// Value of `name`, panicking when missing.
    pub fn val(&self, name: &str) -> Rat {
        self.get(name).cloned().unwrap_or_else(|| panic!("no value for `{name}`"))
    }

    /// `(name, value)` pairs of assigned variables in table order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &Rat)> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_ref().map(|v| (self.table.name(i), v)))
    }

    /// Restriction to the named variables.
    pub fn restrict(&self, names: &[&str]) -> RationalPoint {
        let mut out = RationalPoint::new(&self.table);
        for n in names {
            if let Some(v) = self.get(n) {
                out.set(n, v.clone());
            }
        }
        out
    }

    /// Evaluates `p` exactly at this point.
    pub fn evaluate(&self, p: &Polynomial) -> Result<Rat> {
        if !Arc::ptr_eq(&self.table, p.table()) {
            return Err(PolyError::UniverseMismatch);
        }
        let mut cache: FxHashMap<(usize, u32), Rat> = FxHashMap::default();
        let mut acc = Rat::ZERO;
        for (m, c) in p.terms() {
            let mut t = c.clone();
            for (v, e) in m.pairs() {
                let x = self.values[v]
                    .as_ref()
                    .ok_or_else(|| PolyError::MissingValue(self.table.name(v).to_string()))?;
                let pw = cache.entry((v, e)).or_insert_with(|| x.pow(e));
                t = &t * pw;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Partial evaluation: substitutes the assigned values and keeps the
    /// other variables symbolic.
    pub fn specialize(&self, p: &Polynomial) -> Result<Polynomial> {
        if !Arc::ptr_eq(&self.table, p.table()) {
            return Err(PolyError::UniverseMismatch);
        }
        let terms = p.terms().iter().map(|(m, c)| {
            let mut coef = c.clone();
            let mut rest = Monomial::one();
            for (v, e) in m.pairs() {
                match &self.values[v] {
                    Some(x) => coef = &coef * &x.pow(e),
                    None => rest = rest.mul(&Monomial::var_pow(v, e)),
                }
            }
            (rest, coef)
        });
        Ok(Polynomial::from_terms(&self.table, terms.collect::<Vec<_>>()))
    }
}

/// Free-function form of [`Substitution::apply`].
pub fn substitute(p: &Polynomial, sigma: &Substitution) -> Result<Polynomial> {
    sigma.apply(p)
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn substitution_is_a_homomorphism() {
        let t = VarTable::new(&["x", "y", "w"]);
        let s = Substitution::identity(&t)
            .with("x", parse(&t, "w + w^2").unwrap())
            .with("y", parse(&t, "w^3 - 1").unwrap());
        let p = parse(&t, "x*y + x^2").unwrap();
        let q = parse(&t, "y - 2*x").unwrap();
        assert_eq!(s.apply(&(&p * &q)).unwrap(), &s.apply(&p).unwrap() * &s.apply(&q).unwrap());
        assert_eq!(s.apply(&(&p + &q)).unwrap(), &s.apply(&p).unwrap() + &s.apply(&q).unwrap());
        assert_eq!(Substitution::identity(&t).apply(&p).unwrap(), p);
    }

    #[test]
    fn evaluation() {
        let t = VarTable::new(&["x", "y"]);
        let p = parse(&t, "x^2*y - 1/3*y").unwrap();
        let pt = RationalPoint::new(&t).with("x", 2).with("y", 3);
        assert_eq!(pt.evaluate(&p).unwrap(), Rat::from_i64(11));
        let partial = RationalPoint::new(&t).with("x", 2);
        assert_eq!(partial.evaluate(&p), Err(PolyError::MissingValue("y".into())));
        assert_eq!(partial.specialize(&p).unwrap(), parse(&t, "11/3*y").unwrap());
    }
}
