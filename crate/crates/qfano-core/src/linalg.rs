//! Exact linear algebra over ℚ: dense ranks, sparse echelon bases, and
//! linear spans of polynomial sets.

use crate::poly::{Monomial, Polynomial};
use crate::rat::Rat;
use rustc_hash::FxHashMap;
use std::collections::BTreeMap;

/// A dense matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> RatMatrix {
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RatMatrix::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (n, m) = (self.rows, self.cols);
        if n == 0 || m == 0 {
            return 0;
        }
        let mut a: Vec<Vec<Rat>> = (0..n).map(|r| self.data[r * m..(r + 1) * m].to_vec()).collect();
        let mut prev = Rat::ONE;
        let mut rank = 0;
        for col in 0..m {
            if rank == n {
                break;
            }
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..n {
                for j in col + 1..m {
                    let num = &(&a[i][j] * &a[rank][col]) - &(&a[i][col] * &a[rank][j]);
                    a[i][j] = &num / &prev;
                }
                a[i][col] = Rat::ZERO;
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }
}

/// A sparse row-echelon basis built incrementally.
///
/// Each stored row is a sorted list of `(column, value)` pairs whose first
/// entry is its pivot, normalized to 1.
#[derive(Default, Debug, Clone)]
pub struct EchelonBasis {
    pivots: BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis, returning the (sorted, sparse) remainder.
    pub fn reduce(&self, v: &[(usize, Rat)]) -> Vec<(usize, Rat)> {
        let mut cur: BTreeMap<usize, Rat> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut out = Vec::new();
        while let Some((col, val)) = cur.pop_first() {
            match self.pivots.get(&col) {
                Some(row) => {
                    for (c, x) in &row[1..] {
                        let e = cur.entry(*c).or_insert(Rat::ZERO);
                        *e -= &(&val * x);
                        if e.is_zero() {
                            cur.remove(c);
                        }
                    }
                }
                None => out.push((col, val)),
            }
        }
        out
    }

    /// Adds `v`; returns `true` when it was independent of the basis.
    pub fn insert(&mut self, v: &[(usize, Rat)]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.recip();
        let row: Vec<(usize, Rat)> = r.iter().map(|(c, x)| (*c, x * &inv)).collect();
        self.pivots.insert(row[0].0, row);
        true
    }

    pub fn contains(&self, v: &[(usize, Rat)]) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Assigns column indices to monomials so that polynomials become sparse
/// coefficient vectors.
#[derive(Default, Debug, Clone)]
pub struct MonomialIndex {
    index: FxHashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vector(&mut self, p: &Polynomial) -> Vec<(usize, Rat)> {
        let mut v: Vec<(usize, Rat)> = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let n = self.index.len();
                (*self.index.entry(m.clone()).or_insert(n), c.clone())
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }
}

/// Dimension of the ℚ-span of `ps`.
pub fn span_rank(ps: &[Polynomial]) -> usize {
    let mut idx = MonomialIndex::new();
    let mut basis = EchelonBasis::new();
    for p in ps {
        let v = idx.vector(p);
        basis.insert(&v);
    }
    basis.rank()
}

/// Whether every element of `qs` is a ℚ-linear combination of `ps`.
/// Returns the first element that is not, if any.
pub fn first_outside_span<'a>(ps: &[Polynomial], qs: &'a [Polynomial]) -> Option<&'a Polynomial> {
    let mut idx = MonomialIndex::new();
    let mut basis = EchelonBasis::new();
    for p in ps {
        let v = idx.vector(p);
        basis.insert(&v);
    }
    qs.iter().find(|q| {
        let v = idx.vector(q);
        !basis.contains(&v)
    })
}

/// Whether two polynomial lists span the same ℚ-linear space.
pub fn same_span(ps: &[Polynomial], qs: &[Polynomial]) -> bool {
    first_outside_span(ps, qs).is_none() && first_outside_span(qs, ps).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, VarTable};

    fn r(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn dense_rank() {
        let m = RatMatrix::from_rows(vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]]);
        assert_eq!(m.rank(), 2);
        let id = RatMatrix::from_rows(vec![vec![r(1), r(0)], vec![r(0), r(1)]]);
        assert_eq!(id.rank(), 2);
        assert_eq!(RatMatrix::from_vec(2, 2, vec![Rat::ZERO; 4]).rank(), 0);
    }

    #[test]
    fn spans() {
        let t = VarTable::new(&["x", "y"]);
        let p = |s: &str| parse(&t, s).unwrap();
        let a = vec![p("x + y"), p("x - y")];
        let b = vec![p("x"), p("y"), p("3*x + 2*y")];
        assert!(same_span(&a, &b));
        assert_eq!(span_rank(&b), 2);
        let c = vec![p("x"), p("x*y")];
        assert!(!same_span(&a, &c));
        assert_eq!(first_outside_span(&a, &c), Some(&c[1]));
    }
}
