//! Matrices of polynomials: determinants, Pfaffians, Jacobians and ranks.

use super::{PolyError, Polynomial, RationalPoint, Result, Substitution, VarTable};
use crate::linalg::RatMatrix;
use crate::rat::Rat;
use std::fmt;
use std::sync::Arc;

/// A dense row-major matrix of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<PolyMatrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(PolyError::Shape(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        let t = entries[0].table().clone();
        if entries.iter().any(|e| !Arc::ptr_eq(e.table(), &t)) {
            return Err(PolyError::UniverseMismatch);
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Shape("ragged rows".into()));
        }
        PolyMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(table: &Arc<VarTable>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(table); rows * cols] }
    }

    pub fn identity(table: &Arc<VarTable>, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(table, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(table));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.entries[0].table()
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> Vec<Polynomial> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// The submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut e = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                e.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { rows: rows.len(), cols: cols.len(), entries: e }
    }

    pub fn select_cols(&self, cols: &[usize]) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut e = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                e.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { rows: self.cols, cols: self.rows, entries: e }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn substitute(&self, s: &Substitution) -> Result<PolyMatrix> {
        self.try_map(|p| s.apply(p))
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|e| e * p)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, entries })
    }

    fn same_shape(&self, other: &PolyMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(PolyError::Shape(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(PolyError::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let t = self.table().clone();
        let mut e = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(&t);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k).try_mul(other.get(k, c))?);
                }
                e.push(acc);
            }
        }
        Ok(PolyMatrix { rows: self.rows, cols: other.cols, entries: e })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Determinant: cofactor expansion up to 3×3, fraction-free Bareiss
    /// elimination with exact division above.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(PolyError::Shape(format!("determinant of a {}×{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let g = |r: usize, c: usize| self.get(r, c);
        match n {
            1 => Ok(g(0, 0).clone()),
            2 => Ok(&(g(0, 0) * g(1, 1)) - &(g(0, 1) * g(1, 0))),
            3 => {
                let m0 = &(g(1, 1) * g(2, 2)) - &(g(1, 2) * g(2, 1));
                let m1 = &(g(1, 0) * g(2, 2)) - &(g(1, 2) * g(2, 0));
                let m2 = &(g(1, 0) * g(2, 1)) - &(g(1, 1) * g(2, 0));
                Ok(&(&(g(0, 0) * &m0) - &(g(0, 1) * &m1)) + &(g(0, 2) * &m2))
            }
            _ => self.bareiss(),
        }
    }

    fn bareiss(&self) -> Result<Polynomial> {
        let n = self.rows;
        let t = self.table().clone();
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|r| self.row(r)).collect();
        let mut sign = false;
        let mut prev = Polynomial::one(&t);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Ok(Polynomial::zero(&t)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_divide(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// Adjugate (transpose of the cofactor matrix), so that
    /// `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(PolyError::Shape("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        let t = self.table().clone();
        if n == 1 {
            return Ok(PolyMatrix::identity(&t, 1));
        }
        let mut out = PolyMatrix::zeros(&t, n, n);
        for r in 0..n {
            for c in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&i| i != r).collect();
                let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
                let minor = self.submatrix(&rows, &cols).determinant()?;
                let cof = if (r + c) % 2 == 0 { minor } else { -minor };
                out.set(c, r, cof);
            }
        }
        Ok(out)
    }

    /// Whether `self` is skew-symmetric with a zero diagonal.
    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| (self.get(i, j) + self.get(j, i)).is_zero())
            })
    }

    /// Pfaffian, with `Pf([[0, a], [−a, 0]]) = a`, by expansion along the
    /// first row.
    pub fn pfaffian(&self) -> Result<Polynomial> {
        if self.rows != self.cols || self.rows % 2 == 1 {
            return Err(PolyError::Shape(format!("Pfaffian of a {}×{} matrix", self.rows, self.cols)));
        }
        if !self.is_skew() {
            return Err(PolyError::Shape("Pfaffian of a non-skew-symmetric matrix".into()));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> Polynomial {
        let t = self.table();
        if idx.is_empty() {
            return Polynomial::one(t);
        }
        let mut acc = Polynomial::zero(t);
        let first = idx[0];
        for (k, &j) in idx.iter().enumerate().skip(1) {
            let a = self.get(first, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != first && x != j).collect();
            let term = a * &self.pf_rec(&rest);
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Jacobian matrix `∂ps[i]/∂vars[j]`.
    pub fn jacobian(ps: &[Polynomial], vars: &[usize]) -> Result<PolyMatrix> {
        let mut e = Vec::with_capacity(ps.len() * vars.len());
        for p in ps {
            for &v in vars {
                e.push(p.derivative(v));
            }
        }
        PolyMatrix::new(ps.len(), vars.len(), e)
    }

    /// Evaluates every entry at `pt`.
    pub fn evaluate(&self, pt: &RationalPoint) -> Result<RatMatrix> {
        let vals = self.entries.iter().map(|p| pt.evaluate(p)).collect::<Result<Vec<Rat>>>()?;
        Ok(RatMatrix::from_vec(self.rows, self.cols, vals))
    }

    /// Exact rank over ℚ of the matrix evaluated at `pt`.
    pub fn rank_at(&self, pt: &RationalPoint) -> Result<usize> {
        Ok(self.evaluate(pt)?.rank())
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn m(t: &Arc<VarTable>, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse(t, s).unwrap()).collect()).collect())
            .unwrap()
    }

    #[test]
    fn determinant_small_and_bareiss_agree() {
        let t = VarTable::new(&["x", "y", "z"]);
        let a = m(&t, &[&["x", "1", "0", "y"], &["0", "x", "z", "1"], &["y", "0", "x", "2"], &["1", "z", "0", "x"]]);
        let d = a.determinant().unwrap();
        // Laplace expansion along the first row with 3×3 cofactors.
        let mut acc = Polynomial::zero(&t);
        for c in 0..4 {
            let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
            let minor = a.submatrix(&[1, 2, 3], &cols).determinant().unwrap();
            let term = a.get(0, c) * &minor;
            acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        assert_eq!(d, acc);
        assert_eq!(PolyMatrix::identity(&t, 3).determinant().unwrap(), Polynomial::one(&t));
        assert!(matches!(PolyMatrix::zeros(&t, 2, 3).determinant(), Err(PolyError::Shape(_))));
    }

    #[test]
    fn pfaffian_conventions() {
        let t = VarTable::new(&["a", "b"]);
        let blk = m(&t, &[&["0", "a", "0", "0"], &["-a", "0", "0", "0"], &["0", "0", "0", "b"], &["0", "0", "-b", "0"]]);
        assert_eq!(blk.pfaffian().unwrap(), parse(&t, "a*b").unwrap());
        assert!(PolyMatrix::zeros(&t, 4, 4).pfaffian().unwrap().is_zero());
        assert!(matches!(PolyMatrix::zeros(&t, 3, 3).pfaffian(), Err(PolyError::Shape(_))));
        assert!(matches!(PolyMatrix::identity(&t, 2).pfaffian(), Err(PolyError::Shape(_))));
    }

    #[test]
    fn adjugate_identity() {
        let t = VarTable::new(&["x", "y"]);
        let a = m(&t, &[&["x", "y", "1"], &["2", "x", "y"], &["y", "0", "x"]]);
        let d = a.determinant().unwrap();
        let prod = a.mul(&a.adjugate().unwrap()).unwrap();
        assert_eq!(prod, PolyMatrix::identity(&t, 3).scale(&d));
    }

    #[test]
    fn jacobian_and_rank() {
        let t = VarTable::new(&["x", "y"]);
        let j = PolyMatrix::jacobian(&[parse(&t, "x^2").unwrap(), parse(&t, "x*y").unwrap()], &[0, 1]).unwrap();
        assert_eq!(j.get(0, 0), &parse(&t, "2*x").unwrap());
        let origin = RationalPoint::new(&t).with("x", 0).with("y", 0);
        let generic = RationalPoint::new(&t).with("x", 1).with("y", 2);
        assert_eq!(j.rank_at(&origin).unwrap(), 0);
        assert_eq!(j.rank_at(&generic).unwrap(), 2);
    }
}
