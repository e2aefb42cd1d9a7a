//! The key variety Π¹⁵: the matrix `M`, its minors, the hypersurface `G`,
//! the nine equations `F₁..F₉`, the normalization map, the singular-locus
//! parameterization, the Pfaffian chart and the block presentation.

use super::fraction::Fraction;
use super::vars::{idx, poly, universe, S_VARS};
use crate::poly::{PolyMatrix, Polynomial, Substitution};
use std::collections::BTreeMap;

/// A column triple `(i, j, k)` with `1 ≤ i < j < k ≤ 6`.
pub type Triple = (usize, usize, usize);

/// All 20 column triples in lexicographic order.
pub fn triples() -> Vec<Triple> {
    let mut out = Vec::with_capacity(20);
    for i in 1..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// The 3×6 matrix `M` as rows of polynomial text.
pub const M_ROWS: [[&str; 6]; 3] = [
    ["u", "v", "-t2*p2", "-t2*p4", "-t2*p1 + t1*u", "-t2*p3 + t1*v"],
    ["-p1", "-p3", "u + t1*p2", "v + t1*p4", "-t2*p2", "-t2*p4"],
    ["-p2", "-p4", "-p1", "-p3", "u", "v"],
];

/// The nine defining equations of Π¹⁵.
pub const F_TEXT: [&str; 9] = [
    "(u*s1-p1*s2-p2*s3)-L126*(-p2*p3+p1*p4)-L136*(p1^2+t1*p2^2+p2*u)-L245*(2*p1*p3+2*t1*p2*p4+p4*u+p2*v)-L246*(p3^2+t1*p4^2+p4*v)",
    "(v*s1-p3*s2-p4*s3)+L125*(-p2*p3+p1*p4)+L135*(p1^2+t1*p2^2+p2*u)+L136*(2*p1*p3+2*t1*p2*p4+p4*u+p2*v)+L245*(p3^2+t1*p4^2+p4*v)",
    "(-t2*p2*s1+(u+t1*p2)*s2-p1*s3)-L124*(-p2*p3+p1*p4)-L136*(t2*p2^2+p1*u)-L245*(2*t2*p2*p4+p3*u+p1*v)-L246*(t2*p4^2+p3*v)",
    "(-t2*p4*s1+(v+t1*p4)*s2-p3*s3)+L123*(-p2*p3+p1*p4)+L135*(t2*p2^2+p1*u)+L136*(2*t2*p2*p4+p3*u+p1*v)+L245*(t2*p4^2+p3*v)",
    "(-t2*p1*s1+(t1*p1-t2*p2)*s2+(u+t1*p2)*s3)+L123*(p1^2+t1*p2^2+p2*u)+L124*(p1*p3+t1*p2*p4+p2*v)-L125*(t2*p2^2+p1*u)-L126*(t2*p2*p4+p1*v)-L136*(t1*p2*u-t2*p1*p2+u^2)-L245*(t1*(p4*u+p2*v)-t2*(p2*p3+p1*p4)+2*u*v)-L246*(t1*p4*v-t2*p3*p4+v^2)",
    "(-t2*p3*s1+(t1*p3-t2*p4)*s2+(v+t1*p4)*s3)+L123*(t1*p2*p4+p1*p3+p4*u)+L124*(p3^2+t1*p4^2+p4*v)-L125*(t2*p2*p4+p3*u)-L126*(t2*p4^2+p3*v)+L135*(t1*p2*u-t2*p1*p2+u^2)+L136*(t1*(p4*u+p2*v)-t2*(p2*p3+p1*p4)+2*u*v)+L245*(t1*p4*v-t2*p3*p4+v^2)",
    "(-s2^2+s1*s3)+((L123*p2+L124*p4)*s1-(L125*p2+L126*p4)*s2)+L123*(L136*p2^2+2*L245*p2*p4+L246*p4^2)-L124*(L135*p2^2+2*L136*p2*p4+L245*p4^2)-L125*(L136*p1*p2+L245*(p2*p3+p1*p4)+L246*p3*p4)+L126*(L135*p1*p2+L136*(p2*p3+p1*p4)+L245*p3*p4)+(L135*L245-L136^2)*(-p1^2+2*u*p2+t1*p2^2)+(L135*L246-L136*L245)*(-p1*p3+u*p4+v*p2+t1*p2*p4)+(L136*L246-L245^2)*(-p3^2+2*v*p4+t1*p4^2)",
    "(s2*s3+t1*s1*s2-t2*s1^2)+s1*(L123*p1+L124*p3)-s2*(L125*p1+L126*p3)+L123*(L136*p1*p2+L245*(p1*p4+p3*p2)+L246*p3*p4)-L124*(L135*p1*p2+L136*(p1*p4+p3*p2)+L245*p3*p4)-L125*(L136*p1^2+2*L245*p1*p3+L246*p3^2)+L126*(L135*p1^2+2*L136*p1*p3+L245*p3^2)+(-L136^2+L135*L245)*(2*u*p1+2*t1*p1*p2-t2*p2^2)+(L135*L246-L136*L245)*((v*p1+u*p3)+t1*(p1*p4+p3*p2)-t2*p2*p4)+(L246*L136-L245^2)*(2*v*p3+2*t1*p3*p4-t2*p4^2)",
    "(t1*s2^2+s3^2-s1*s2*t2)+s1*(L123*u+L124*v)-s2*(L125*u+L126*v)+(L124*L125-L123*L126)*(-p2*p3+p1*p4)-L123*(L246*(p3^2+t1*p4^2)+L136*(p1^2+t1*p2^2)+2*L245*(p1*p3+t1*p2*p4))+L124*(L135*(p1^2+t1*p2^2)+2*L136*(p1*p3+t1*p2*p4)+L245*(p3^2+t1*p4^2))+L125*t2*(L246*p4^2+L136*p2^2+2*L245*p2*p4)-L126*t2*(L135*p2^2+2*L136*p2*p4+L245*p4^2)+(-L136^2+L135*L245)*(u^2+2*t2*p1*p2)+(L135*L246-L136*L245)*(u*v+t2*(p2*p3+p1*p4))+(L246*L136-L245^2)*(v^2+2*t2*p3*p4)",
];

/// The boundary polynomial `b`.
pub const B_TEXT: &str = "p3^2 + t1*p4^2 + p4*v";

/// Entries `m_ij` (`1 ≤ i < j ≤ 5`) of the skew-symmetric 5×5 matrix of the
/// Pfaffian chart on `{p₂p₄ ≠ 0}`, as `(i, j, numerator, denominator)`.
///
/// `m₁₃` carries `L₁₃₅·p₂³·u` and `m₂₃` ends in `+L₂₄₅(−p₂p₃+p₁p₄)p₄`; these are the
/// weight-homogeneous forms for which all five Pfaffians vanish on Π.
pub const M_CHART: [(usize, usize, &str, &str); 10] = [
    (1, 2, "9*(L123*p2*p4^2+L126*p3*p4^2+p3*p4*s2+L135*p2*p4*u+L136*(p2*p3^2+p1*p3*p4+p2*p4*v)+2*L245*p3^2*p4)", "p2*p4^3"),
    (1, 3, "-3*(L135*(p1^2+t1*p2^2)*p2^2-L125*(p2*p3-p1*p4)*p2^2-L126*p2^2*p3*p4+L246*(p2*p3+p1*p4)*p3*p4+L124*p2^2*p4^2+p2*(-p2*p3+p1*p4)*s2+L135*p2^3*u+p2^2*s1*v+L136*(2*p1*p3+2*t1*p2*p4+2*p4*u+p2*v)*p2^2+L245*(p2*p3^2+2*p1*p3*p4+t1*p2*p4^2+2*p2*p4*v)*p2)", "p2^2*p4^2"),
    (1, 4, "3*(p2*p4*s2+L136*p2^2*p3+2*L245*p2*p3*p4+L246*p3*p4^2)", "p2^2*p4"),
    (1, 5, "-3*(p3*u+p2*p4*t2)", "p4"),
    (2, 3, "3*(-(p2*p3+p1*p4)*s1-p2*p4*s2-L125*p2^2*p4-L126*p2*p4^2+L136*(-p2*p3+p1*p4)*p2+L245*(-p2*p3+p1*p4)*p4)", "p2*p4^2"),
    (2, 4, "3*(-L135*p2^2+p4*s1-2*L136*p2*p4-L245*p4^2)", "p2*p4"),
    (2, 5, "-3*p2*(p3^2+t1*p4^2+p4*v)", "p4^2"),
    (3, 4, "p2*s1+L136*p2^2+2*L245*p2*p4+L246*p4^2", "p2"),
    (3, 5, "-(p1^2+t1*p2^2+p2*u)", "1"),
    (4, 5, "-p2*p3+p1*p4", "1"),
];

/// The free coordinates of the singular-locus parameterization.
pub const S_FREE: [&str; 8] = ["p2", "p3", "p4", "t1", "L126", "L136", "L245", "L246"];

/// The dependent coordinates of the singular locus `S ∩ {p₂p₄ ≠ 0}` as
/// `(variable, numerator, denominator)` in the free coordinates.
pub const S_PARAM: [(&str, &str, &str); 11] = [
    ("p1", "p2*p3", "p4"),
    ("v", "-(p3^2+t1*p4^2)", "p4"),
    ("u", "-p2*(p3^2+t1*p4^2)", "p4^2"),
    ("t2", "p3*(p3^2+t1*p4^2)", "p4^3"),
    ("s1", "-(L136*p2^2+2*L245*p2*p4+L246*p4^2)", "p2"),
    ("s2", "-p3*(L136*p2^2+2*L245*p2*p4+L246*p4^2)", "p2*p4"),
    ("s3", "(2*p3^2+t1*p4^2)*(L136*p2^2+2*L245*p2*p4+L246*p4^2)", "p2*p4^2"),
    ("L123", "-(L126*p2*p3*p4^2+L136*(3*p3^2+2*t1*p4^2)*p2^2+3*L245*(p3^2+t1*p4^2)*p2*p4+L246*t1*p4^4)", "p2^2*p4^2"),
    ("L124", "L126*p2*p3*p4-L245*(3*p3^2+t1*p4^2)*p2-L246*(3*p3^2+t1*p4^2)*p4", "p2*p4^2"),
    ("L125", "-L126*p2*p4^2+3*L136*p2^2*p3+6*L245*p2*p3*p4+3*L246*p3*p4^2", "p2^2*p4"),
    ("L135", "-p4*(3*L136*p2^2+3*L245*p2*p4+L246*p4^2)", "p2^3"),
];

/// The pieces of the block presentation of `F₁..F₆`.
#[derive(Clone, Debug)]
pub struct Blocks {
    /// Column vectors `U`, `I`, `A` (3×1 each).
    pub u_vec: PolyMatrix,
    pub i_vec: PolyMatrix,
    pub a_vec: PolyMatrix,
    /// The 2×3 matrix 𝖫 of `L`-coordinates.
    pub l_mat: PolyMatrix,
    /// The 2×3 matrix `(v₁ v₂ v₃)`.
    pub v_mat: PolyMatrix,
    /// The 2×3 block `(u −p₁ −p₂; v −p₃ −p₄)`.
    pub left: PolyMatrix,
    /// The symmetric 3×3 matrix in `s₁, s₂, s₃`.
    pub s_sym: PolyMatrix,
}

/// All Π¹⁵ data.
#[derive(Clone, Debug)]
pub struct PiSystem {
    pub m: PolyMatrix,
    pub minors: BTreeMap<Triple, Polynomial>,
    /// `D₁₂₃, D₁₂₄, D₁₂₅, D₁₂₆, D₁₃₅, D′₁₃₆, D′₂₄₅, D₂₄₆`.
    pub chosen_generators: [Polynomial; 8],
    pub g: Polynomial,
    pub f: [Polynomial; 9],
    pub fprime: [Polynomial; 6],
    /// `Hᵢ := (s·M)ᵢ − Fprimeᵢ`, free of `s`.
    pub h: [Polynomial; 6],
    pub b: Polynomial,
    pub h_sub: Substitution,
    pub m_coords: BTreeMap<(usize, usize), Fraction>,
    /// Dependent coordinates on `S ∩ {p₂p₄ ≠ 0}` in terms of [`S_FREE`].
    pub s_param: Vec<(&'static str, Fraction)>,
    pub blocks: Blocks,
}

/// Coefficients of the chosen generators in `G`; the last two are the
/// coefficients of `L₁₃₆·D′₁₃₆` and `L₂₄₅·D′₂₄₅`.
pub const G_COEFFS: [i64; 8] = [1, 1, 1, 1, 1, 1, 1, 1];

/// `Σ cᵢ·Lᵢ·(chosen generator)ᵢ` for the given coefficient vector.
pub fn g_combination(gens: &[Polynomial; 8], coeffs: [i64; 8]) -> Polynomial {
    let ls = ["L123", "L124", "L125", "L126", "L135", "L136", "L245", "L246"];
    let mut acc = Polynomial::zero(universe());
    for ((l, d), c) in ls.iter().zip(gens).zip(coeffs) {
        acc = &acc + &(&poly(l) * d).scale(&c.into());
    }
    acc
}

/// Builds the matrix `M` from [`M_ROWS`].
pub fn build_m() -> PolyMatrix {
    PolyMatrix::from_rows(M_ROWS.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect())
        .expect("M is 3×6")
}

/// The minor on columns `(i, j, k)` (1-based) of a 3×6 matrix.
pub fn minor(m: &PolyMatrix, t: Triple) -> Polynomial {
    m.select_cols(&[t.0 - 1, t.1 - 1, t.2 - 1]).determinant().expect("square")
}

/// Builds all Π¹⁵ data and runs the constructor self-checks.
pub fn build_pi() -> PiSystem {
    let m = build_m();
    let minors: BTreeMap<Triple, Polynomial> = triples().into_iter().map(|t| (t, minor(&m, t))).collect();
    let d = |i, j, k| minors[&(i, j, k)].clone();
    let two = 2.into();
    let chosen_generators = [
        d(1, 2, 3),
        d(1, 2, 4),
        d(1, 2, 5),
        d(1, 2, 6),
        d(1, 3, 5),
        &d(1, 3, 6) + &d(1, 4, 5).scale(&two),
        &d(2, 4, 5) + &d(1, 4, 6).scale(&two),
        d(2, 4, 6),
    ];
    let g = g_combination(&chosen_generators, G_COEFFS);
    let f: [Polynomial; 9] = std::array::from_fn(|i| poly(F_TEXT[i]));
    let t1 = poly("t1");
    let fprime = [
        f[0].clone(),
        f[1].clone(),
        f[2].clone(),
        f[3].clone(),
        &f[4] + &(&t1 * &f[0]),
        &f[5] + &(&t1 * &f[1]),
    ];
    let s_row = PolyMatrix::from_rows(vec![S_VARS.iter().map(|s| poly(s)).collect()]).unwrap();
    let sm = s_row.mul(&m).unwrap();
    let h: [Polynomial; 6] = std::array::from_fn(|i| sm.get(0, i) - &fprime[i]);
    let h_sub = Substitution::identity(universe())
        .with("u", poly("w*p1 + w^2*p2"))
        .with("v", poly("w*p3 + w^2*p4"))
        .with("t2", poly("w^3 + t1*w"));
    let m_coords = M_CHART
        .iter()
        .map(|&(i, j, n, dd)| ((i, j), Fraction::new(poly(n), poly(dd))))
        .collect();
    let s_param = S_PARAM.iter().map(|&(v, n, dd)| (v, Fraction::new(poly(n), poly(dd)))).collect();
    let pi = PiSystem {
        blocks: build_blocks(),
        m,
        minors,
        chosen_generators,
        g,
        f,
        fprime,
        h,
        b: poly(B_TEXT),
        h_sub,
        m_coords,
        s_param,
    };
    pi.self_check().expect("Π¹⁵ catalog self-check");
    pi
}

/// Builds the block presentation pieces.
pub fn build_blocks() -> Blocks {
    let col = |xs: [&str; 3]| PolyMatrix::from_rows(xs.iter().map(|s| vec![poly(s)]).collect()).unwrap();
    let u_vec = col(["p1^2+t1*p2^2+p2*u", "2*(p1*p3+t1*p2*p4)+(p4*u+p2*v)", "p3^2+t1*p4^2+p4*v"]);
    let i_vec = col(["t2*p2^2+p1*u", "2*t2*p2*p4+(p3*u+p1*v)", "t2*p4^2+p3*v"]);
    let a_vec = col([
        "t1*p2*u-t2*p1*p2+u^2",
        "t1*(p4*u+p2*v)-t2*(p2*p3+p1*p4)+2*u*v",
        "t1*p4*v-t2*p3*p4+v^2",
    ]);
    let l_mat = PolyMatrix::from_rows(vec![
        vec![poly("L136"), poly("L245"), poly("L246")],
        vec![poly("-L135"), poly("-L136"), poly("-L245")],
    ])
    .unwrap();
    let mm = poly("-p2*p3+p1*p4");
    let a = col2("L126", "-L125");
    let b = col2("L124", "-L123");
    let half = crate::rat::Rat::new(1, 2);
    let u = |i: usize| u_vec.get(i, 0).clone();
    let iv = |i: usize| i_vec.get(i, 0).clone();
    let mu = PolyMatrix::from_rows(vec![vec![u(1).scale(&half), -u(0)], vec![u(2), -u(1).scale(&half)]]).unwrap();
    let mi = PolyMatrix::from_rows(vec![vec![iv(1).scale(&half), -iv(0)], vec![iv(2), -iv(1).scale(&half)]]).unwrap();
    let v1 = a.scale(&mm).add(&l_mat.mul(&u_vec).unwrap()).unwrap();
    let v2 = b.scale(&mm).add(&l_mat.mul(&i_vec).unwrap()).unwrap();
    let v3 = mi
        .mul(&a)
        .unwrap()
        .sub(&mu.mul(&b).unwrap())
        .unwrap()
        .add(&l_mat.mul(&a_vec).unwrap())
        .unwrap()
        .add(&a.scale(&poly("-p3*u+p1*v").scale(&half)))
        .unwrap()
        .add(&b.scale(&poly("p4*u-p2*v").scale(&half)))
        .unwrap();
    let v_mat = PolyMatrix::from_rows(vec![
        vec![v1.get(0, 0).clone(), v2.get(0, 0).clone(), v3.get(0, 0).clone()],
        vec![v1.get(1, 0).clone(), v2.get(1, 0).clone(), v3.get(1, 0).clone()],
    ])
    .unwrap();
    let left = PolyMatrix::from_rows(vec![
        vec![poly("u"), poly("-p1"), poly("-p2")],
        vec![poly("v"), poly("-p3"), poly("-p4")],
    ])
    .unwrap();
    let s_sym = PolyMatrix::from_rows(vec![
        vec![poly("s1"), poly("s2"), poly("s3")],
        vec![poly("s2"), poly("s3"), poly("t2*s1-t1*s2")],
        vec![poly("s3"), poly("t2*s1-t1*s2"), poly("t2*s2-t1*s3")],
    ])
    .unwrap();
    Blocks { u_vec, i_vec, a_vec, l_mat, v_mat, left, s_sym }
}

fn col2(a: &str, b: &str) -> PolyMatrix {
    PolyMatrix::from_rows(vec![vec![poly(a)], vec![poly(b)]]).unwrap()
}

impl PiSystem {
    /// Re-runnable constructor invariants: minors are the column
    /// determinants, `G` is the stated combination, and `Fprimeᵢ` is linear
    /// in `s` with `∂Fprimeᵢ/∂s_j = M[j][i]`.
    pub fn self_check(&self) -> Result<(), String> {
        for (t, d) in &self.minors {
            if *d != minor(&self.m, *t) {
                return Err(format!("minor {t:?} is not the column determinant"));
            }
        }
        if self.g != g_combination(&self.chosen_generators, G_COEFFS) {
            return Err("G differs from the generator combination".into());
        }
        for i in 0..6 {
            for (j, s) in S_VARS.iter().enumerate() {
                if self.fprime[i].derivative(idx(s)) != *self.m.get(j, i) {
                    return Err(format!("∂Fprime{}/∂{s} ≠ M[{j}][{i}]", i + 1));
                }
            }
            if S_VARS.iter().any(|s| self.h[i].degree_in(idx(s)) > 0) {
                return Err(format!("H{} depends on s", i + 1));
            }
        }
        Ok(())
    }

    pub fn minor(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.minors[&(i, j, k)]
    }

    /// The 5×5 skew matrix `(m_ij)` with entries as fractions.
    pub fn m_entry(&self, i: usize, j: usize) -> Option<&Fraction> {
        self.m_coords.get(&(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_examples() {
        let pi = build_pi();
        assert_eq!(pi.m.get(0, 2), &poly("-t2*p2"));
        assert_eq!(pi.minors.len(), 20);
        assert_eq!(pi.chosen_generators.len(), 8);
        assert_eq!(pi.chosen_generators[5], &pi.minors[&(1, 3, 6)] + &pi.minors[&(1, 4, 5)].scale(&2.into()));
        assert_eq!(pi.m_coords[&(4, 5)].num, poly("-p2*p3+p1*p4"));
        assert_eq!(pi.f[0].derivative(idx("s1")), poly("u"));
    }
}
