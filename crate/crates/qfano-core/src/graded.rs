//! Weight derivation, homogeneity certification, resolution-degree
//! bookkeeping, Hilbert series and the per-class numerical checks.

use crate::catalog::{universe, FanoClass};
use crate::poly::{Polynomial, WeightVector};
use crate::verifier::CheckResult;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;
use thiserror::Error;

/// Errors of the graded computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("expansion order must be non-negative, got {0}")]
    NegativeOrder(i64),
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("division is not exact; remainder {0}")]
    NotExact(String),
}

/// The four base weights `(w(p₃), w(u), w(v), w(G))` determining all others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightBase {
    pub w_p3: i64,
    pub w_u: i64,
    pub w_v: i64,
    pub w_g: i64,
}

/// All 19 coordinate weights, including `w(L₂₄₆) = w(G) − 3w(v)`.
pub fn derive_weights(base: WeightBase) -> WeightVector {
    let WeightBase { w_p3: p3, w_u: u, w_v: v, w_g: g } = base;
    let rows = [
        ("p3", p3),
        ("u", u),
        ("v", v),
        ("p1", p3 + u - v),
        ("p2", 2 * p3 + u - 2 * v),
        ("p4", 2 * p3 - v),
        ("s1", g + 2 * p3 - u - 3 * v),
        ("s2", g + p3 - u - 2 * v),
        ("s3", g - u - v),
        ("t1", 2 * v - 2 * p3),
        ("t2", 3 * v - 3 * p3),
        ("L123", g - 2 * p3 - 2 * u + v),
        ("L124", g - 2 * p3 - u),
        ("L125", g - p3 - 2 * u),
        ("L126", g - p3 - u - v),
        ("L135", g - 3 * u),
        ("L136", g - 2 * u - v),
        ("L245", g - u - 2 * v),
        ("L246", g - 3 * v),
    ];
    let mut w = WeightVector::new(universe());
    for (n, x) in rows {
        w.set(n, x);
    }
    w
}

/// Equation degrees, the Gorenstein degree `δ`, `k` and the 16 middle
/// syzygy degrees of the free resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeData {
    pub d: [i64; 9],
    pub delta: i64,
    pub k: i64,
    pub p2_degrees: Vec<i64>,
}

impl DegreeData {
    /// `Σdᵢ = 3δ`.
    pub fn sum_is_three_delta(&self) -> bool {
        self.d.iter().sum::<i64>() == 3 * self.delta
    }

    /// The middle degrees are closed under `e ↦ δ − e` (as a multiset).
    pub fn middle_symmetric(&self) -> bool {
        let mut a = self.p2_degrees.clone();
        let mut b: Vec<i64> = a.iter().map(|e| self.delta - e).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// The whole degree multiset `{0, dᵢ, middle, δ−dᵢ, δ}` is `δ`-symmetric.
    pub fn resolution_symmetric(&self) -> bool {
        let mut all = vec![0, self.delta];
        all.extend(self.d);
        all.extend(self.d.iter().map(|x| self.delta - x));
        all.extend(&self.p2_degrees);
        let mut rev: Vec<i64> = all.iter().map(|e| self.delta - e).collect();
        all.sort_unstable();
        rev.sort_unstable();
        all == rev
    }
}

/// Degrees of `F₁..F₉`, `δ`, `k` and the middle degrees.
pub fn degree_data(base: WeightBase) -> DegreeData {
    let WeightBase { w_p3: p3, w_u: u, w_v: v, w_g: g } = base;
    let d = [
        g - (3 * v - 2 * p3),
        g - (u + 2 * v - 2 * p3),
        g - (2 * v - p3),
        g - (u + v - p3),
        g - v,
        g - u,
        2 * (g - u - 2 * v + p3),
        2 * g - (2 * u + 3 * v - p3),
        2 * (g - u - v),
    ];
    let delta = 4 * g - (3 * u + 6 * v - 3 * p3);
    let k = 7 * g - 5 * p3 - 9 * u - 4 * v;
    let (wp1, wp2, wp4) = (p3 + u - v, 2 * p3 + u - 2 * v, 2 * p3 - v);
    let (d6, d8) = (d[5], d[7]);
    let mut p2_degrees = vec![d6 + wp2, d6 + wp1, d8 + wp2, d8 + wp4, d8 + wp1, d8 + wp1, d8 + p3, d8 + p3];
    let dual: Vec<i64> = p2_degrees.iter().map(|e| delta - e).collect();
    p2_degrees.extend(dual);
    DegreeData { d, delta, k, p2_degrees }
}

/// Checks that every `Fᵢ` is quasi-homogeneous of degree `dᵢ` under
/// [`derive_weights`].
pub fn certify_homogeneity(id: &str, base: WeightBase, f: &[Polynomial; 9]) -> CheckResult {
    let start = Instant::now();
    let w = derive_weights(base);
    let dd = degree_data(base);
    for (i, p) in f.iter().enumerate() {
        match w.weighted_degree(p) {
            Ok(x) if x == dd.d[i] => {}
            Ok(x) => return CheckResult::fail(id, format!("F{} has degree {x}, expected {}", i + 1, dd.d[i]), start),
            Err(e) => return CheckResult::fail(id, format!("F{}: {e}", i + 1), start),
        }
    }
    if !dd.sum_is_three_delta() {
        return CheckResult::fail(id, format!("sum of degrees {:?} is not 3·{}", dd.d, dd.delta), start);
    }
    if !dd.middle_symmetric() || !dd.resolution_symmetric() {
        return CheckResult::fail(id, format!("degree multiset {:?} is not δ-symmetric", dd.p2_degrees), start);
    }
    CheckResult::pass(id, start, 0)
}

/// A univariate polynomial in `t` with integer coefficients, lowest degree
/// first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> IntPoly {
        IntPoly::from_i64(&[1])
    }

    /// `±t^e`.
    pub fn monomial(c: i64, e: usize) -> IntPoly {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::from(c);
        IntPoly::from_coeffs(v)
    }

    /// `1 − t^w`.
    pub fn one_minus(w: usize) -> IntPoly {
        &IntPoly::one() - &IntPoly::monomial(1, w)
    }

    /// `Π (1 − t^w)`.
    pub fn product_one_minus(ws: &[i64]) -> IntPoly {
        ws.iter().fold(IntPoly::one(), |acc, &w| &acc * &IntPoly::one_minus(w as usize))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// Exact division by `q` whose lowest coefficient is `±1`; errors with
    /// the remainder when not exact.
    pub fn div_exact(&self, q: &IntPoly) -> Result<IntPoly, GradedError> {
        let qd = q.degree().expect("nonzero divisor");
        let lead = &q.coeffs[qd];
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= qd {
            return if self.is_zero() { Ok(IntPoly::default()) } else { Err(GradedError::NotExact(self.to_string())) };
        }
        let mut quot = vec![BigInt::zero(); n - qd];
        for i in (0..n - qd).rev() {
            let c = &r[i + qd];
            if c.is_zero() {
                continue;
            }
            if !(c % lead).is_zero() {
                return Err(GradedError::NotExact(IntPoly::from_coeffs(r).to_string()));
            }
            let f = c / lead;
            for (j, qc) in q.coeffs.iter().enumerate() {
                r[i + j] -= &f * qc;
            }
            quot[i] = f;
        }
        let rem = IntPoly::from_coeffs(r);
        if rem.is_zero() {
            Ok(IntPoly::from_coeffs(quot))
        } else {
            Err(GradedError::NotExact(rem.to_string()))
        }
    }

    /// `t^deg · p(1/t)`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::from_coeffs(c)
    }

    /// Whether `p(t) = ε·t^e·p(1/t)` for some sign `ε`; returns `ε`.
    pub fn palindromic_sign(&self, e: usize) -> Option<i8> {
        if self.degree() != Some(e) || self.coeffs[0].is_zero() {
            return None;
        }
        let rev = self.reversed();
        if rev == *self {
            Some(1)
        } else if rev == -self {
            Some(-1)
        } else {
            None
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> Vec<(usize, BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e, c.clone())).collect()
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / Π(1 − t^w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denominator_weights: Vec<i64>,
}

impl HilbertSeries {
    /// Coefficients of `t⁰..t^order`.
    pub fn expansion(&self, order: i64) -> Result<Vec<BigInt>, GradedError> {
        if order < 0 {
            return Err(GradedError::NegativeOrder(order));
        }
        let n = order as usize + 1;
        let mut c: Vec<BigInt> = (0..n).map(|i| self.numerator.coeff(i)).collect();
        for &w in &self.denominator_weights {
            let w = w as usize;
            for i in w..n {
                let prev = c[i - w].clone();
                c[i] += prev;
            }
        }
        Ok(c)
    }
}

/// Builds a series after validating the weights.
pub fn hilbert_series(num: IntPoly, weights: &[i64]) -> Result<HilbertSeries, GradedError> {
    if let Some(&w) = weights.iter().find(|&&w| w <= 0) {
        return Err(GradedError::NonPositiveWeight(w));
    }
    Ok(HilbertSeries { numerator: num, denominator_weights: weights.to_vec() })
}

/// Weights of the 18 coordinates of Π¹³_ℙ (all but `L₂₄₆`).
pub fn pi13_weights(w: &WeightVector) -> Vec<i64> {
    w.entries().filter(|(n, _)| *n != "L246").map(|(_, x)| x).collect()
}

/// `N_Π(t) = 1 − Σt^{dᵢ} + Σt^{middle} − Σt^{δ−dᵢ} + t^δ`.
pub fn pi_numerator(dd: &DegreeData) -> IntPoly {
    let mut n = &IntPoly::one() + &IntPoly::monomial(1, dd.delta as usize);
    for &d in &dd.d {
        n = &n - &IntPoly::monomial(1, d as usize);
        n = &n - &IntPoly::monomial(1, (dd.delta - d) as usize);
    }
    for &e in &dd.p2_degrees {
        n = &n + &IntPoly::monomial(1, e as usize);
    }
    n
}

/// The Hilbert series of the key variety of a class (`Π¹³_ℙ`, or its cone).
pub fn key_series(class: &FanoClass) -> HilbertSeries {
    let dd = degree_data(class.base());
    let mut ws = pi13_weights(&class.weight_table);
    if class.cone {
        ws.push(1);
    }
    HilbertSeries { numerator: pi_numerator(&dd), denominator_weights: ws }
}

/// The Hilbert numerator of `X` over its ambient `ℙ_X`.
pub fn class_numerator(class: &FanoClass) -> Result<IntPoly, GradedError> {
    let key = key_series(class);
    let num = &(&key.numerator * &IntPoly::product_one_minus(&class.cuts))
        * &IntPoly::product_one_minus(&class.ambient_px);
    num.div_exact(&IntPoly::product_one_minus(&key.denominator_weights))
}

/// The Hilbert series of `X` over its ambient `ℙ_X`.
pub fn class_series(class: &FanoClass) -> Result<HilbertSeries, GradedError> {
    Ok(HilbertSeries { numerator: class_numerator(class)?, denominator_weights: class.ambient_px.to_vec() })
}

/// The two canonical-class computations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjunction {
    pub delta: i64,
    pub k: i64,
    /// `Σ` of the key-variety weights (with the cone coordinate).
    pub key_weight_sum: i64,
    pub cut_sum: i64,
    /// `δ − Σw(key) + Σcuts`; must be −1.
    pub x_degree: i64,
    /// `δ − Σw(Π¹³)`; must be −k.
    pub pi13_degree: i64,
    /// For cone classes, `δ − Σw(Π¹⁴)` is `−(k+1)` rather than the stated
    /// `−k`; reported, not corrected.
    pub cone_k_discrepancy: bool,
}

/// The adjunction numerics of a class.
pub fn adjunction(class: &FanoClass) -> Adjunction {
    let dd = degree_data(class.base());
    let s13: i64 = pi13_weights(&class.weight_table).iter().sum();
    let key = s13 + i64::from(class.cone);
    let cut_sum: i64 = class.cuts.iter().sum();
    Adjunction {
        delta: dd.delta,
        k: dd.k,
        key_weight_sum: key,
        cut_sum,
        x_degree: dd.delta - key + cut_sum,
        pi13_degree: dd.delta - s13,
        cone_k_discrepancy: class.cone && dd.delta - key != -dd.k,
    }
}

/// `δ − Σw(key) + Σcuts = −1` and `δ − Σw(Π¹³) = −k`.
pub fn adjunction_check(class: &FanoClass) -> CheckResult {
    let start = Instant::now();
    let id = format!("graded.adjunction.{}", class.number);
    let a = adjunction(class);
    if a.x_degree != -1 {
        return CheckResult::fail(&id, format!("K_X degree {} ≠ −1", a.x_degree), start);
    }
    if a.pi13_degree != -a.k {
        return CheckResult::fail(&id, format!("δ − Σw(Π¹³) = {} ≠ −k = {}", a.pi13_degree, -a.k), start);
    }
    CheckResult::pass(&id, start, 0)
}

/// Genus `h⁰(−K_X) − 2`, read off the series (reported only).
pub fn genus(series: &HilbertSeries) -> BigInt {
    let e = series.expansion(1).expect("order 1");
    &e[1] - BigInt::from(2)
}

/// The numerator checks of a class: exact division, constant term 1,
/// palindromy of degree `Σ(ℙ_X) − 1`, non-negative expansion and
/// codimension 4.
pub fn numerator_check(class: &FanoClass) -> CheckResult {
    let start = Instant::now();
    let id = format!("graded.numerator.{}", class.number);
    let num = match class_numerator(class) {
        Ok(n) => n,
        Err(e) => return CheckResult::fail(&id, e.to_string(), start),
    };
    if !num.coeff(0).is_one() {
        return CheckResult::fail(&id, format!("constant term of {num} is not 1"), start);
    }
    let e = (class.ambient_px.iter().sum::<i64>() - 1) as usize;
    if num.palindromic_sign(e).is_none() {
        return CheckResult::fail(&id, format!("{num} is not palindromic of degree {e}"), start);
    }
    let series = HilbertSeries { numerator: num, denominator_weights: class.ambient_px.to_vec() };
    let order = 2 * class.ambient_px.iter().max().copied().unwrap_or(0);
    let exp = series.expansion(order).expect("non-negative order");
    if let Some((i, c)) = exp.iter().enumerate().find(|(_, c)| c.is_negative()) {
        return CheckResult::fail(&id, format!("coefficient of t^{i} is {c}"), start);
    }
    let codim = class.ambient_px.len() as i64 - 1 - 3;
    if codim != 4 {
        return CheckResult::fail(&id, format!("{} ambient generators give codimension {codim}", class.ambient_px.len()), start);
    }
    CheckResult::pass(&id, start, 0)
}

/// Per-class summary for reports and the `hilbert` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub number: u32,
    pub d: i64,
    pub delta: i64,
    pub k: i64,
    pub degrees: Vec<i64>,
    pub middle_degrees: Vec<i64>,
    pub ambient_px: Vec<i64>,
    pub cuts: Vec<i64>,
    pub cone: bool,
    pub basket: String,
    pub numerator: String,
    pub expansion: Vec<String>,
    pub genus: String,
    pub adjunction: Adjunction,
}

/// Builds the summary with the series expanded to `order`.
pub fn class_summary(class: &FanoClass, order: i64) -> Result<ClassSummary, GradedError> {
    let dd = degree_data(class.base());
    let series = class_series(class)?;
    Ok(ClassSummary {
        number: class.number,
        d: class.d,
        delta: dd.delta,
        k: dd.k,
        degrees: dd.d.to_vec(),
        middle_degrees: dd.p2_degrees.clone(),
        ambient_px: class.ambient_px.to_vec(),
        cuts: class.cuts.clone(),
        cone: class.cone,
        basket: class.basket_text(),
        numerator: series.numerator.to_string(),
        expansion: series.expansion(order)?.iter().map(|c| c.to_string()).collect(),
        genus: genus(&series).to_string(),
        adjunction: adjunction(class),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{all_classes, fano_class};

    const B308: WeightBase = WeightBase { w_p3: 7, w_u: 6, w_v: 8, w_g: 24 };

    #[test]
    fn weights_and_degrees_308() {
        let w = derive_weights(B308);
        assert_eq!((w.w("p1"), w.w("p2"), w.w("s1"), w.w("t1")), (5, 4, 8, 2));
        assert_eq!((w.w("L245"), w.w("L246")), (2, 0));
        let dd = degree_data(B308);
        assert_eq!(dd.d, [14, 16, 15, 17, 16, 18, 18, 19, 20]);
        assert_eq!((dd.delta, dd.k), (51, 47));
        assert!(dd.sum_is_three_delta() && dd.middle_symmetric() && dd.resolution_symmetric());
        let w = derive_weights(WeightBase { w_p3: 3, w_u: 3, w_v: 4, w_g: 12 });
        assert_eq!((w.w("s1"), w.w("L135"), w.w("L245")), (3, 3, 1));
        let dd = degree_data(WeightBase { w_p3: 3, w_u: 3, w_v: 4, w_g: 12 });
        assert_eq!((dd.delta, dd.k), (24, 26));
    }

    #[test]
    fn class_tables_match_formulas() {
        for c in all_classes() {
            let w = derive_weights(c.base());
            for (n, x) in c.weight_table.entries() {
                assert_eq!(w.w(n), x, "No.{} {n}", c.number);
            }
        }
    }

    #[test]
    fn small_series() {
        let s = hilbert_series(IntPoly::one(), &[1, 1]).unwrap();
        let e: Vec<i64> = s.expansion(3).unwrap().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(e, vec![1, 2, 3, 4]);
        let s = hilbert_series(IntPoly::one_minus(2), &[1, 1, 1]).unwrap();
        let e: Vec<i64> = s.expansion(2).unwrap().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(e, vec![1, 3, 5]);
        assert_eq!(s.expansion(-1), Err(GradedError::NegativeOrder(-1)));
        assert!(hilbert_series(IntPoly::one(), &[0]).is_err());
    }

    #[test]
    fn adjunction_values() {
        let a = adjunction(&fano_class(308).unwrap());
        assert_eq!((a.delta, a.key_weight_sum, a.cut_sum, a.x_degree), (51, 99, 47, -1));
        assert_eq!(a.pi13_degree, -47);
        assert!(a.cone_k_discrepancy);
        let a = adjunction(&fano_class(1766).unwrap());
        assert_eq!((a.delta, a.key_weight_sum, a.cut_sum, a.x_degree, a.k), (24, 50, 25, -1, 26));
        for c in all_classes() {
            assert!(adjunction_check(&c).status.is_pass());
            assert!(numerator_check(&c).status.is_pass(), "{}", c.number);
        }
    }

    #[test]
    fn intpoly_display_and_division() {
        let p = IntPoly::from_i64(&[1, -2, 0, 3]);
        assert_eq!(p.to_string(), "1 - 2*t + 3*t^3");
        let q = IntPoly::one_minus(2);
        assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
        assert!(p.div_exact(&q).is_err());
    }
}
