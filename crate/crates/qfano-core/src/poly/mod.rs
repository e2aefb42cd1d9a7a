//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial lives over a [`VarTable`], a fixed ordered list of named
//! variables. Terms are kept sorted in graded-lex descending order (total
//! degree first, then lexicographic with earlier variables larger), which is
//! also the order used for printing, hashing and division.

mod matrix;
mod parse;
mod subst;
mod weights;

pub use matrix::PolyMatrix;
pub use subst::{substitute, RationalPoint, Substitution};
pub use weights::{weighted_degree, WeightVector};

use crate::rat::Rat;
use rustc_hash::{FxHashMap, FxHasher};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::BuildHasherDefault;
use std::sync::Arc;

/// Errors raised by polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials belong to different variable universes")]
    UniverseMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not exactly divisible")]
    NotDivisible,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("no value for variable `{0}`")]
    MissingValue(String),
    #[error("no weight for variable `{0}`")]
    MissingWeight(String),
    #[error("polynomial is not quasi-homogeneous")]
    NotHomogeneous,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// An ordered, immutable list of variable names.
#[derive(Debug)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, u16>,
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarTable {}

impl VarTable {
    /// Builds a table; panics on duplicate names or more than `u16::MAX` names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Arc<VarTable> {
        assert!(names.len() < u16::MAX as usize, "too many variables");
        let mut index = HashMap::with_capacity(names.len());
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            let prev = index.insert(n.clone(), i as u16);
            assert!(prev.is_none(), "duplicate variable name `{n}`");
        }
        Arc::new(VarTable { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).map(|&i| i as usize)
    }

    /// Index of `name`, panicking when it is not in the table.
    pub fn idx(&self, name: &str) -> usize {
        self.index_of(name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"))
    }
}

/// Returns the variable `name` of `table` as a polynomial.
pub fn var(table: &Arc<VarTable>, name: &str) -> Result<Polynomial> {
    let i = table
        .index_of(name)
        .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
    Ok(Polynomial::var_idx(table, i))
}

/// Parses a polynomial expression over `table`.
///
/// Accepted syntax: integer and rational literals, variable names, `+`, `-`,
/// `*`, `^` (or `**`) with a non-negative integer exponent, parentheses, and
/// `/` by a nonzero constant.
pub fn parse(table: &Arc<VarTable>, src: &str) -> Result<Polynomial> {
    parse::Parser::new(table, src).parse()
}

/// A power product, stored sparsely as `(variable index, exponent)` pairs in
/// increasing variable order with the total degree cached.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[(u16, u16); 6]>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(idx: usize) -> Monomial {
        Monomial::var_pow(idx, 1)
    }

    pub fn var_pow(idx: usize, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        let mut exps = SmallVec::new();
        exps.push((idx as u16, e as u16));
        Monomial { deg: e, exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// The `(variable, exponent)` pairs in increasing variable order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e as u32))
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v as usize == idx)
            .map_or(0, |&(_, e)| e as u32)
    }

    /// Dense exponent vector of length `n`.
    pub fn dense(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for (v, e) in self.pairs() {
            out[v] = e;
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.exps.is_empty() {
            return other.clone();
        }
        if other.exps.is_empty() {
            return self.clone();
        }
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1).expect("exponent overflow");
                    exps.push((a[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial { deg: self.deg + other.deg, exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.deg > self.deg {
            return None;
        }
        let mut exps = SmallVec::with_capacity(self.exps.len());
        let mut j = 0;
        let b = &other.exps;
        for &(v, e) in &self.exps {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                if b[j].1 > e {
                    return None;
                }
                if b[j].1 < e {
                    exps.push((v, e - b[j].1));
                }
                j += 1;
            } else {
                exps.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial { deg: self.deg - other.deg, exps })
    }

    /// Removes variable `idx`, returning its exponent and the remaining monomial.
    pub fn split_var(&self, idx: usize) -> (u32, Monomial) {
        let mut rest = self.clone();
        if let Some(pos) = rest.exps.iter().position(|&(v, _)| v as usize == idx) {
            let (_, e) = rest.exps.remove(pos);
            rest.deg -= e as u32;
            (e as u32, rest)
        } else {
            (0, rest)
        }
    }

    fn fmt_with(&self, table: &VarTable, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(table.name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    /// Graded-lex: higher total degree first; ties broken lexicographically
    /// with earlier variables ranking higher.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a.0 != b.0 {
                // The monomial carrying the earlier variable is larger.
                return b.0.cmp(&a.0);
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.exps.iter()).finish()
    }
}

type FxMap<K, V> = FxHashMap<K, V>;

/// A sparse polynomial with exact rational coefficients.
///
/// Terms are sorted by graded-lex descending monomial order and no stored
/// coefficient is zero; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    table: Arc<VarTable>,
    terms: Vec<(Monomial, Rat)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(table: &Arc<VarTable>) -> Polynomial {
        Polynomial { table: table.clone(), terms: Vec::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Polynomial {
        Polynomial::constant(table, Rat::ONE)
    }

    pub fn constant(table: &Arc<VarTable>, c: Rat) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(), c)] };
        Polynomial { table: table.clone(), terms }
    }

    pub fn from_i64(table: &Arc<VarTable>, c: i64) -> Polynomial {
        Polynomial::constant(table, Rat::from_i64(c))
    }

    pub fn var_idx(table: &Arc<VarTable>, idx: usize) -> Polynomial {
        assert!(idx < table.len(), "variable index out of range");
        Polynomial { table: table.clone(), terms: vec![(Monomial::var(idx), Rat::ONE)] }
    }

    pub fn monomial(table: &Arc<VarTable>, m: Monomial, c: Rat) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { table: table.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(table: &Arc<VarTable>, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Polynomial {
        let mut acc: FxMap<Monomial, Rat> = FxMap::default();
        for (m, c) in terms {
            accumulate(&mut acc, m, c);
        }
        Polynomial::from_map(table, acc)
    }

    fn from_map(table: &Arc<VarTable>, acc: FxMap<Monomial, Rat>) -> Polynomial {
        let mut terms: Vec<(Monomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { table: table.clone(), terms }
    }

    fn from_sorted(table: &Arc<VarTable>, terms: Vec<(Monomial, Rat)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { table: table.clone(), terms }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn same_universe(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(PolyError::UniverseMismatch)
        }
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of the monomial `m`.
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map_or(Rat::ZERO, |i| self.terms[i].1.clone())
    }

    /// Indices of all variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.table.len()];
        for (m, _) in &self.terms {
            for (v, _) in m.pairs() {
                seen[v] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(idx)).max().unwrap_or(0)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Polynomial::from_sorted(&self.table, out)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.table);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            return big.mul_term(&small.terms[0].0, &small.terms[0].1);
        }
        const PAR_THRESHOLD: usize = 1 << 16;
        if small.len() * big.len() >= PAR_THRESHOLD && small.len() >= 8 {
            return mul_parallel(small, big);
        }
        let mut acc: FxMap<Monomial, Rat> =
            FxMap::with_capacity_and_hasher(small.len() * big.len() / 2 + 1, BuildHasherDefault::<FxHasher>::default());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                accumulate(&mut acc, m1.mul(m2), c1 * c2);
            }
        }
        Polynomial::from_map(&self.table, acc)
    }

    /// Multiplies by a single term `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        // Multiplying by a monomial preserves graded-lex order.
        let terms = self.terms.iter().map(|(k, d)| (k.mul(m), d * c)).collect();
        Polynomial::from_sorted(&self.table, terms)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted(&self.table, terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / q`.
    ///
    /// Uses leading-term reduction in graded-lex order. Because `q·r` has
    /// leading term `LT(q)·LT(r)`, the first leading term of the running
    /// remainder that `LT(q)` does not divide proves non-divisibility.
    pub fn exact_divide(&self, q: &Polynomial) -> Result<Polynomial> {
        self.check(q)?;
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero(&self.table));
        }
        let (lm, lc) = q.terms[0].clone();
        if q.len() == 1 {
            let inv = lc.recip();
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let m = m.div(&lm).ok_or(PolyError::NotDivisible)?;
                terms.push((m, c * &inv));
            }
            return Ok(Polynomial::from_sorted(&self.table, terms));
        }
        let inv = lc.recip();
        let tail = &q.terms[1..];
        let mut rem: BTreeMap<Monomial, Rat> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lm).ok_or(PolyError::NotDivisible)?;
            let qc = &c * &inv;
            for (tm, tc) in tail {
                let key = tm.mul(&qm);
                let delta = &qc * tc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get_mut();
                        *v -= &delta;
                        if v.is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Ok(Polynomial::from_sorted(&self.table, quot))
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(idx);
            if e == 0 {
                return None;
            }
            let (_, rest) = m.split_var(idx);
            Some((rest.mul(&Monomial::var_pow(idx, e - 1)), c * &Rat::from_i64(e as i64)))
        });
        Polynomial::from_terms(&self.table, terms)
    }

    /// Splits along powers of variable `idx`: returns `c_k` with
    /// `self = Σ c_k · x^k`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(idx) as usize;
        let mut parts: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(idx);
            parts[e as usize].push((rest, c.clone()));
        }
        parts.into_iter().map(|t| Polynomial::from_terms(&self.table, t)).collect()
    }

    /// Replaces `x^k` by `r^(m-k)` for every power of `x = idx`, i.e. returns
    /// `r^m · self(x = 1/r)`. Requires `degree_in(idx) ≤ m`.
    pub fn clear_variable(&self, idx: usize, r: &Polynomial, m: u32) -> Polynomial {
        let parts = self.coefficients_in(idx);
        assert!(parts.len() as u32 <= m + 1, "clearing power too small");
        let mut acc = Polynomial::zero(&self.table);
        let mut rp = Polynomial::one(&self.table);
        for k in (0..=m).rev() {
            if let Some(c) = parts.get(k as usize) {
                if !c.is_zero() {
                    acc = &acc + &(c * &rp);
                }
            }
            if k > 0 {
                rp = &rp * r;
            }
        }
        acc
    }

    /// Sum of the terms whose monomials satisfy `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| keep(m)).cloned().collect();
        Polynomial::from_sorted(&self.table, terms)
    }

    /// Multiplies every coefficient by the lcm of denominators and divides by
    /// the content, normalizing the leading coefficient to be positive.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let mut l = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(&c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut f = Rat::from_bigint(l) / Rat::from_bigint(g);
        if self.terms[0].1.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    /// Canonical text form over the variable names of the table.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn accumulate(acc: &mut FxMap<Monomial, Rat>, m: Monomial, c: Rat) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn mul_parallel(small: &Polynomial, big: &Polynomial) -> Polynomial {
    use rayon::prelude::*;
    let chunk = (small.len() / rayon::current_num_threads().max(1)).max(4);
    let partials: Vec<Polynomial> = small
        .terms
        .par_chunks(chunk)
        .map(|ch| {
            let mut acc: FxMap<Monomial, Rat> = FxMap::default();
            for (m1, c1) in ch {
                for (m2, c2) in &big.terms {
                    accumulate(&mut acc, m1.mul(m2), c1 * c2);
                }
            }
            Polynomial::from_map(&small.table, acc)
        })
        .collect();
    sum_tree(&small.table, partials)
}

/// Sums many polynomials by pairwise merging.
pub fn sum_tree(table: &Arc<VarTable>, mut parts: Vec<Polynomial>) -> Polynomial {
    if parts.is_empty() {
        return Polynomial::zero(table);
    }
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut it = parts.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        parts = next;
    }
    parts.pop().unwrap()
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<'a> std::ops::$tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live over different universes.
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                self.$imp(rhs).expect("polynomial universe mismatch")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> std::ops::$tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms in graded-lex descending order, written as
    /// `coef*var^e*...` and joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.fmt_with(&self.table, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<VarTable> {
        VarTable::new(&["x", "y", "z"])
    }

    #[test]
    fn graded_lex_order() {
        let t = table();
        let p = parse(&t, "z + y^2 + x*z + x + 1 + y*z").unwrap();
        assert_eq!(p.to_string(), "x*z + y^2 + y*z + x + z + 1");
    }

    #[test]
    fn additive_inverse_and_difference_of_squares() {
        let t = table();
        let x = var(&t, "x").unwrap();
        let y = var(&t, "y").unwrap();
        assert!((&x + &(-&x)).is_zero());
        assert_eq!(&(&x + &y) * &(&x - &y), parse(&t, "x^2 - y^2").unwrap());
    }

    #[test]
    fn exact_division() {
        let t = table();
        let p = parse(&t, "x^2 - y^2").unwrap();
        let q = parse(&t, "x - y").unwrap();
        assert_eq!(p.exact_divide(&q).unwrap(), parse(&t, "x + y").unwrap());
        assert_eq!(q.exact_divide(&q).unwrap(), Polynomial::one(&t));
        assert_eq!(parse(&t, "x^2 + y").unwrap().exact_divide(&q), Err(PolyError::NotDivisible));
        assert_eq!(p.exact_divide(&Polynomial::zero(&t)), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let a = var(&table(), "x").unwrap();
        let b = var(&table(), "x").unwrap();
        assert_eq!(a.try_add(&b), Err(PolyError::UniverseMismatch));
    }

    #[test]
    fn derivative_and_clearing() {
        let t = table();
        let p = parse(&t, "x^3*y + 2*x - 5").unwrap();
        assert_eq!(p.derivative(0), parse(&t, "3*x^2*y + 2").unwrap());
        // x^2*y + x*z + 1 with x -> 1/z, cleared by z^2: y + z^2 + z^2
        let q = parse(&t, "x^2*y + x*z + 1").unwrap();
        let z = var(&t, "z").unwrap();
        assert_eq!(q.clear_variable(0, &z, 2), parse(&t, "y + 2*z^2").unwrap());
    }

    #[test]
    fn display_round_trips() {
        let t = table();
        for s in ["0", "-1/2*x^2*y + 3*z - 7", "x - y"] {
            let p = parse(&t, s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse(&t, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn primitive_part() {
        let t = table();
        let p = parse(&t, "-2/3*x + 4/9*y").unwrap();
        assert_eq!(p.primitive(), parse(&t, "3*x - 2*y").unwrap());
    }
}
