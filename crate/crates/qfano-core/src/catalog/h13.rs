//! The key variety H¹³: equations `G₁..G₆`, the 2×2 determinant tables,
//! contraction identities, the Cayley hyperdeterminant, representative
//! orbit points and the expected fiber generators.

use super::vars::{poly, universe};
use crate::poly::{PolyMatrix, Polynomial, RationalPoint};
use crate::rat::Rat;
use std::collections::BTreeMap;

/// Name of the tensor coordinate `p_ijk` (indices in {1, 2}).
pub fn p_name(i: usize, j: usize, k: usize) -> String {
    format!("p{i}{j}{k}")
}

fn p(i: usize, j: usize, k: usize) -> Polynomial {
    poly(&p_name(i, j, k))
}

/// Names of the vector `x_f = (x_{1f}, x_{2f})` for `f ∈ {1, 2, 3}`.
pub fn x_names(f: usize) -> [String; 2] {
    [format!("x1{f}"), format!("x2{f}")]
}

fn xvec(f: usize) -> PolyMatrix {
    let [a, b] = x_names(f);
    PolyMatrix::from_rows(vec![vec![poly(&a)], vec![poly(&b)]]).unwrap()
}

/// One of the twelve 2×2 determinants, keyed by `(a, j, k)`: the table
/// index `a ∈ {1, 2, 3}` and the two remaining tensor indices.
pub type DKey = (usize, usize, usize);

/// Representative points of the orbits: name and the tensor entries equal
/// to 1 (all others 0).
pub const ORBIT_POINTS: [(&str, &[(usize, usize, usize)]); 5] = [
    ("origin", &[]),
    ("p1", &[(1, 1, 1)]),
    ("p2", &[(1, 1, 1), (2, 2, 1)]),
    ("p3", &[(1, 1, 1), (1, 2, 2), (2, 1, 2)]),
    ("p4", &[(1, 1, 1), (2, 2, 2)]),
];

/// All H¹³ data.
#[derive(Clone, Debug)]
pub struct HSystem {
    /// Vector equations `𝖦₁, 𝖦₂, 𝖦₃` (2×1 each).
    pub g_vec: [PolyMatrix; 3],
    /// Scalar equations `G₄, G₅, G₆`.
    pub g_scalar: [Polynomial; 3],
    pub dtables: BTreeMap<DKey, Polynomial>,
    pub hyperdet: Polynomial,
    /// For `c₁₂, c₂₃, c₃₁`: the two matrix-times-vector expressions.
    pub contraction_pairs: [(PolyMatrix, PolyMatrix); 3],
    /// Representative points (tensor coordinates only).
    pub orbit_points: Vec<(&'static str, RationalPoint)>,
    /// Expected generators of the fiber over each representative point.
    pub fiber_data: Vec<(&'static str, Vec<Polynomial>)>,
}

impl HSystem {
    /// The nine scalar equations in the order `𝖦₁, 𝖦₂, 𝖦₃, G₄, G₅, G₆`.
    pub fn equations(&self) -> Vec<Polynomial> {
        let mut out = Vec::with_capacity(9);
        for g in &self.g_vec {
            out.extend(g.entries().iter().cloned());
        }
        out.extend(self.g_scalar.iter().cloned());
        out
    }

    pub fn d(&self, a: usize, j: usize, k: usize) -> &Polynomial {
        &self.dtables[&(a, j, k)]
    }
}

fn det2(a: Polynomial, b: Polynomial, c: Polynomial, d: Polynomial) -> Polynomial {
    &(&a * &d) - &(&b * &c)
}

/// The twelve determinants `D^{(a)}_{jk}`.
pub fn build_dtables() -> BTreeMap<DKey, Polynomial> {
    let mut t = BTreeMap::new();
    let x = |n: &str| poly(n);
    for j in 1..=2 {
        for k in 1..=2 {
            t.insert((1, j, k), det2(p(1, j, k), x("x11"), p(2, j, k), x("x21")));
            t.insert((2, j, k), det2(p(j, 1, k), x("x12"), p(j, 2, k), x("x22")));
            t.insert((3, j, k), det2(p(j, k, 1), x("x13"), p(j, k, 2), x("x23")));
        }
    }
    t
}

fn m_a(t: &BTreeMap<DKey, Polynomial>, a: usize) -> PolyMatrix {
    let d = |j, k| t[&(a, j, k)].clone();
    PolyMatrix::from_rows(vec![vec![-d(2, 1), d(1, 1)], vec![-d(2, 2), d(1, 2)]]).unwrap()
}

fn m_b(t: &BTreeMap<DKey, Polynomial>, a: usize) -> PolyMatrix {
    let d = |j, k| t[&(a, j, k)].clone();
    PolyMatrix::from_rows(vec![vec![-d(1, 2), d(1, 1)], vec![-d(2, 2), d(2, 1)]]).unwrap()
}

/// The Cayley hyperdeterminant of `(p_ijk)`.
pub const HYPERDET_TEXT: &str = "p111^2*p222^2 + p112^2*p221^2 + p121^2*p212^2 + p122^2*p211^2 \
    - 2*p111*p122*p211*p222 - 2*p111*p121*p212*p222 - 2*p111*p112*p221*p222 \
    - 2*p121*p122*p211*p212 - 2*p112*p122*p211*p221 - 2*p112*p121*p212*p221 \
    + 4*p111*p122*p212*p221 + 4*p112*p121*p211*p222";

/// Builds all H¹³ data.
pub fn build_h() -> HSystem {
    let t = build_dtables();
    let (x1, x2, x3) = (xvec(1), xvec(2), xvec(3));
    let g_vec = [
        x1.scale(&poly("u1")).sub(&m_b(&t, 3).mul(&x2).unwrap()).unwrap(),
        x2.scale(&poly("u2")).sub(&m_b(&t, 1).mul(&x3).unwrap()).unwrap(),
        x3.scale(&poly("u3")).sub(&m_a(&t, 2).mul(&x1).unwrap()).unwrap(),
    ];
    let quad = |a: usize| &(&t[&(a, 1, 2)] * &t[&(a, 2, 1)]) - &(&t[&(a, 1, 1)] * &t[&(a, 2, 2)]);
    let g_scalar = [
        &poly("u1*u2") - &quad(3),
        &poly("u2*u3") - &quad(1),
        &poly("u3*u1") - &quad(2),
    ];
    let contraction_pairs = [
        (m_a(&t, 1).mul(&x2).unwrap(), m_a(&t, 2).mul(&x1).unwrap()),
        (m_b(&t, 2).mul(&x3).unwrap(), m_b(&t, 3).mul(&x2).unwrap()),
        (m_a(&t, 3).mul(&x1).unwrap(), m_b(&t, 1).mul(&x3).unwrap()),
    ];
    let orbit_points = ORBIT_POINTS.iter().map(|&(n, ones)| (n, orbit_point(ones))).collect();
    HSystem {
        g_vec,
        g_scalar,
        dtables: t,
        hyperdet: poly(HYPERDET_TEXT),
        contraction_pairs,
        orbit_points,
        fiber_data: fiber_data(),
    }
}

/// The tensor point with the listed entries 1 and all other entries 0.
pub fn orbit_point(ones: &[(usize, usize, usize)]) -> RationalPoint {
    let mut pt = RationalPoint::new(universe());
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                let v = if ones.contains(&(i, j, k)) { Rat::ONE } else { Rat::ZERO };
                pt.set(&p_name(i, j, k), v);
            }
        }
    }
    pt
}

fn minors2(m: &PolyMatrix) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for r in [(0, 1), (0, 2), (1, 2)] {
        for c in [(0, 1), (0, 2), (1, 2)] {
            let d = m.submatrix(&[r.0, r.1], &[c.0, c.1]).determinant().unwrap();
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

fn mat3(rows: [[&str; 3]; 3]) -> PolyMatrix {
    PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect()).unwrap()
}

/// The matrix whose 2×2 minors cut out the fiber over `𝗉₄` (rank ≤ 1).
pub fn fiber_e_matrix() -> PolyMatrix {
    mat3([["u1", "x13", "x22"], ["x23", "u2", "x11"], ["x12", "x21", "u3"]])
}

/// The symmetric matrix and kernel vector presenting the fiber over `𝗉₃`.
pub fn fiber_d_data() -> (PolyMatrix, PolyMatrix) {
    let s = mat3([["u1", "x13", "x22"], ["x13", "u2", "-x21"], ["x22", "-x21", "-u3"]]);
    let sigma = PolyMatrix::from_rows(vec![vec![poly("-x11")], vec![poly("x12")], vec![poly("x23")]]).unwrap();
    (s, sigma)
}

/// Expected fiber generators over the origin and `𝗉₁..𝗉₄`.
pub fn fiber_data() -> Vec<(&'static str, Vec<Polynomial>)> {
    let list = |xs: &[&str]| xs.iter().map(|s| poly(s)).collect::<Vec<_>>();
    let origin = list(&["u1*u2", "u2*u3", "u3*u1", "u1*x11", "u1*x21", "u2*x12", "u2*x22", "u3*x13", "u3*x23"]);
    let f1 = list(&[
        "u1*x11-x22*x23",
        "u1*x21",
        "u2*x12-x21*x23",
        "u2*x22",
        "u3*x13-x21*x22",
        "u3*x23",
        "u1*u2",
        "u2*u3",
        "u1*u3",
    ]);
    let f2 = list(&[
        "u1*x11-x22*x23",
        "u1*x21+x12*x23",
        "u2*x12-x21*x23",
        "u2*x22+x11*x23",
        "u3*x13-x11*x12-x21*x22",
        "u3*x23",
        "u1*u2+x23^2",
        "u2*u3",
        "u1*u3",
    ]);
    let (s, sigma) = fiber_d_data();
    let mut f3 = minors2(&s);
    f3.extend(s.mul(&sigma).unwrap().entries().iter().cloned());
    let f4 = minors2(&fiber_e_matrix());
    vec![("origin", origin), ("p1", f1), ("p2", f2), ("p3", f3), ("p4", f4)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    #[test]
    fn printed_examples() {
        let h = build_h();
        assert_eq!(h.d(1, 1, 1), &poly("p111*x21 - p211*x11"));
        let m = Monomial::from_pairs(&["p111", "p122", "p212", "p221"].map(|n| (super::super::vars::idx(n), 1)));
        assert_eq!(h.hyperdet.coeff(&m), Rat::from_i64(4));
        let g4 = h.orbit_points[4].1.specialize(&h.g_scalar[0]).unwrap();
        assert_eq!(g4, poly("u1*u2 - x13*x23"));
        assert_eq!(h.fiber_data[3].1.len(), 9);
        assert_eq!(h.fiber_data[4].1.len(), 9);
    }
}
