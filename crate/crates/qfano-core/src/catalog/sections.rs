//! Threefold sections `T_𝔸 ⊂ Π¹⁴_𝔸` of the eight classes.
//!
//! Each section pins `L₂₄₆ = 1`, sets the cut coordinates to zero or to
//! generic combinations of the remaining seven coordinates, and adjoins the
//! free parameters (`a₁₂₅`, `b₁₂₃`, …) as extra variables. A section also
//! records its special loci: a symbolic description where one is printed,
//! and a probe that produces a rational point on the locus (with generically
//! drawn parameters) for Jacobian smoothness checks.

use super::vars::{poly, universe};
use crate::poly::{Polynomial, RationalPoint, Substitution};
use crate::rat::Rat;

/// A source of generic parameter values (nonzero small integers).
pub type Draw<'a> = dyn FnMut() -> Rat + 'a;

/// A chart on which some equations are solved linearly for some variables,
/// leaving a single printed equation.
#[derive(Clone, Debug)]
pub struct ChartReduction {
    pub name: &'static str,
    /// The section (possibly with a cut removed) plus the chart condition.
    pub sub: Substitution,
    /// 0-based indices into `F₁..F₉` of the equations solved.
    pub solve_eqs: Vec<usize>,
    pub solve_vars: Vec<&'static str>,
    /// The printed reduced equation.
    pub printed: Polynomial,
}

/// A locus described by specializing coordinates and, optionally, one
/// defining relation: all substituted equations must vanish after the
/// restriction, or be divisible by the relation.
#[derive(Clone, Debug)]
pub struct SymbolicLocus {
    pub restriction: Substitution,
    pub relation: Option<Polynomial>,
}

/// A special locus of the section.
#[derive(Clone, Debug)]
pub struct Locus {
    pub name: &'static str,
    pub description: &'static str,
    pub symbolic: Option<SymbolicLocus>,
    /// Produces a point on the locus: all parameters and all seven
    /// coordinates are assigned.
    pub probe: fn(&mut Draw<'_>) -> RationalPoint,
    /// Genericity conditions in the parameters and coordinates: the
    /// Jacobian has full rank on the locus away from their zeros, so probe
    /// points where one of them vanishes are redrawn.
    pub genericity: Vec<Polynomial>,
}

/// A locus asserted to be empty (only the origin of the affine cone).
#[derive(Clone, Debug)]
pub struct EmptyLocus {
    pub zero: Vec<&'static str>,
    pub description: &'static str,
}

/// The section of one class.
#[derive(Clone, Debug)]
pub struct Section {
    pub class: u32,
    pub params: Vec<&'static str>,
    /// The assignment defining `T_𝔸` (including `L₂₄₆ = 1`).
    pub t_sub: Substitution,
    /// The seven coordinates of the ambient affine space of `T_𝔸`.
    pub coords: [&'static str; 7],
    pub loci: Vec<Locus>,
    pub chart: Option<ChartReduction>,
    pub empty: Option<EmptyLocus>,
}

impl Section {
    /// `F₁..F₉` restricted to the section.
    pub fn equations(&self, f: &[Polynomial]) -> Vec<Polynomial> {
        f.iter().map(|p| self.t_sub.apply(p).expect("universe")).collect()
    }
}

/// The printed reduced equation of No.308 on the `v`-chart.
pub const P308_V_CHART: &str = "-1+a123*p1^2*p4-a125*p1^2*u+b123*p1^2*u-a123*p1*p3*p4*u+a125*p1*p3*u^2\
    -b123*p1*p3*u^2-a123*p4^2*u^2-a135*p4*u^3-b123*p4*u^3-b135*u^4";

fn sub(pairs: &[(&str, &str)]) -> Substitution {
    let mut s = Substitution::identity(universe());
    for (v, img) in pairs {
        s.set(v, poly(img)).expect("section variable");
    }
    s
}

fn t_sub(pairs: &[(&str, &str)]) -> Substitution {
    sub(pairs).with("L246", poly("1"))
}

fn zeros(names: &[&'static str]) -> Vec<(&'static str, &'static str)> {
    names.iter().map(|n| (*n, "0")).collect()
}

fn draw_params(pt: &mut RationalPoint, names: &[&str], draw: &mut Draw<'_>) {
    for n in names {
        pt.set(n, draw());
    }
}

fn point(params: &[&str], draw: &mut Draw<'_>, coords: &[(&str, Rat)]) -> RationalPoint {
    let mut pt = RationalPoint::new(universe());
    draw_params(&mut pt, params, draw);
    for (n, v) in coords {
        pt.set(n, v.clone());
    }
    pt
}

/// The locus `𝔸(s₁)`: every coordinate except `s₁` vanishes.
fn s1_line(
    coords: [&'static str; 7],
    probe: fn(&mut Draw<'_>) -> RationalPoint,
    genericity: Vec<Polynomial>,
) -> Locus {
    let others: Vec<&'static str> = coords.iter().copied().filter(|c| *c != "s1").collect();
    Locus {
        name: "s1-line",
        description: "the coordinate line 𝔸(s1)",
        symbolic: Some(SymbolicLocus { restriction: sub(&zeros(&others)), relation: None }),
        probe,
        genericity,
    }
}

fn s1_line_point(params: &[&str], coords: [&str; 7], draw: &mut Draw<'_>) -> RationalPoint {
    let mut pt = point(params, draw, &[]);
    for c in coords {
        pt.set(c, Rat::ZERO);
    }
    let s = draw();
    pt.set("s1", s);
    pt
}

const P308: [&str; 6] = ["a125", "a123", "b123", "a135", "b135", "a1"];
const C308: [&str; 7] = ["p1", "p4", "u", "p3", "v", "s2", "s3"];
const T308_6: [(&str, &str); 10] = [
    ("t1", "0"),
    ("L245", "0"),
    ("t2", "0"),
    ("L126", "0"),
    ("p2", "0"),
    ("L124", "0"),
    ("L136", "0"),
    ("L125", "a125*p1"),
    ("L123", "a123*p4+b123*u"),
    ("L135", "a135*p4+b135*u"),
];

fn section_308() -> Section {
    let mut pairs = T308_6.to_vec();
    pairs.push(("s1", "a1*v"));
    let chart = ChartReduction {
        name: "v-chart",
        sub: t_sub(&T308_6).with("v", poly("1")),
        solve_eqs: vec![1, 3, 5],
        solve_vars: vec!["s1", "s2", "s3"],
        printed: poly(P308_V_CHART),
    };
    let s1 = Locus {
        name: "S1",
        description: "{a123 p4^2 + a135 p4 u + b123 p4 u + b135 u^2 = 0} in A(p4, u)",
        symbolic: Some(SymbolicLocus {
            restriction: sub(&zeros(&["p1", "v", "p3", "s3", "s2"])),
            relation: Some(poly("a123*p4^2+a135*p4*u+b123*p4*u+b135*u^2")),
        }),
        probe: |draw| {
            let mut pt = point(&["a125", "a123", "b123", "a135", "a1"], draw, &[]);
            let (p4, u) = (draw(), draw());
            let a123 = pt.val("a123");
            let k = &pt.val("a135") + &pt.val("b123");
            let b135 = -&(&(&(&a123 * &p4) * &p4) + &(&(&k * &p4) * &u)) / &(&u * &u);
            pt.set("b135", b135);
            for c in ["p1", "v", "p3", "s3", "s2"] {
                pt.set(c, Rat::ZERO);
            }
            pt.set("p4", p4);
            pt.set("u", u);
            pt
        },
        genericity: vec![poly("(a1*u-p4)*(2*a123*p4+(a135+b123)*u)")],
    };
    let s2 = Locus {
        name: "S2",
        description: "{a123 p4^3 - s2^2 = 0} in A(p4, s2)",
        symbolic: Some(SymbolicLocus {
            restriction: sub(&zeros(&["p1", "v", "p3", "s3", "u"])),
            relation: Some(poly("a123*p4^3-s2^2")),
        }),
        probe: |draw| {
            let mut pt = point(&["a125", "b123", "a135", "b135", "a1"], draw, &[]);
            let (p4, s2) = (draw(), draw());
            pt.set("a123", &(&s2 * &s2) / &p4.pow(3));
            for c in ["p1", "v", "p3", "s3", "u"] {
                pt.set(c, Rat::ZERO);
            }
            pt.set("p4", p4);
            pt.set("s2", s2);
            pt
        },
        genericity: vec![poly("s2")],
    };
    Section {
        class: 308,
        params: P308.to_vec(),
        t_sub: t_sub(&pairs),
        coords: C308,
        loci: vec![s1, s2],
        chart: Some(chart),
        empty: None,
    }
}

const P501: [&str; 7] = ["a", "b4", "c4", "b123", "c123", "b135", "c135"];
const C501: [&str; 7] = ["L126", "u", "p3", "v", "s1", "s2", "s3"];

fn section_501() -> Section {
    Section {
        class: 501,
        params: P501.to_vec(),
        t_sub: t_sub(&[
            ("t1", "0"),
            ("L245", "0"),
            ("t2", "a*L126"),
            ("p2", "0"),
            ("L124", "0"),
            ("L136", "0"),
            ("p1", "0"),
            ("L125", "0"),
            ("p4", "b4*u+c4*L126^2"),
            ("L123", "b123*u+c123*L126^2"),
            ("L135", "b135*u+c135*L126^2"),
        ]),
        coords: C501,
        loci: vec![s1_line(C501, |d| s1_line_point(&P501, C501, d), vec![poly("a")])],
        chart: None,
        empty: None,
    }
}

const P512: [&str; 8] = ["a2", "a", "a4", "a125", "a123", "b123", "a135", "b135"];

fn section_512() -> Section {
    Section {
        class: 512,
        params: P512.to_vec(),
        t_sub: t_sub(&[
            ("t1", "0"),
            ("L245", "0"),
            ("p2", "a2*L126"),
            ("t2", "a*L126"),
            ("p1", "0"),
            ("L124", "0"),
            ("L136", "0"),
            ("p4", "a4*u"),
            ("L125", "a125*u"),
            ("L123", "a123*p3+b123*L126^2"),
            ("L135", "a135*p3+b135*L126^2"),
        ]),
        coords: C501,
        loci: vec![s1_line(C501, |d| s1_line_point(&P512, C501, d), vec![poly("a")])],
        chart: None,
        empty: None,
    }
}

const P550: [&str; 12] = ["a1", "a", "a4", "a124", "a136", "a125", "a123", "b123", "c123", "a135", "b135", "c135"];

/// `a123·a4 + a124·a4 + a4²·b123 + a4·b135`, shared by the No.550 loci.
const K550: &str = "a123*a4+a124*a4+a4^2*b123+a4*b135";

fn section_550() -> Section {
    let s1 = Locus {
        name: "S1",
        description: "{L126 = p3 = s1 = s2 = v = 0, s3 = a136 u^2}",
        symbolic: Some(SymbolicLocus {
            restriction: sub(&[
                ("L126", "0"),
                ("p3", "0"),
                ("s1", "0"),
                ("s2", "0"),
                ("v", "0"),
                ("s3", "a136*u^2"),
            ]),
            relation: None,
        }),
        probe: |draw| {
            let mut pt = point(&P550, draw, &[]);
            let u = draw();
            for c in ["L126", "p3", "s1", "s2", "v"] {
                pt.set(c, Rat::ZERO);
            }
            pt.set("s3", &pt.val("a136") * &(&u * &u));
            pt.set("u", u);
            pt
        },
        genericity: vec![poly(&format!("a135+3*a136+{K550}"))],
    };
    let s2 = Locus {
        name: "S2",
        description: "{L126 = p3 = s2 = 0, s1 = a4 v, s3 = -(a135 + 2 a136 + K) u^2, (a135 + 3 a136 + K) u^3 + v^2 = 0}",
        symbolic: Some(SymbolicLocus {
            restriction: sub(&[
                ("L126", "0"),
                ("p3", "0"),
                ("s2", "0"),
                ("s1", "a4*v"),
                ("s3", &format!("-(a135+2*a136+{K550})*u^2")),
            ]),
            relation: Some(poly(&format!("(a135+3*a136+{K550})*u^3+v^2"))),
        }),
        probe: |draw| {
            let mut pt = point(&P550, draw, &[]);
            let (u, v) = (draw(), draw());
            // Adjust a135 so that (a135 + 3 a136 + K) u³ + v² = 0.
            let k = pt.evaluate(&poly(&format!("3*a136+{K550}"))).expect("parameters");
            let a135 = &(&-&(&v * &v) / &u.pow(3)) - &k;
            pt.set("a135", a135);
            for c in ["L126", "p3", "s2"] {
                pt.set(c, Rat::ZERO);
            }
            pt.set("u", u.clone());
            pt.set("v", v.clone());
            pt.set("s1", &pt.val("a4") * &v);
            let c = pt.evaluate(&poly(&format!("-(a135+2*a136+{K550})"))).expect("parameters");
            pt.set("s3", &c * &(&u * &u));
            pt
        },
        genericity: vec![poly("v")],
    };
    Section {
        class: 550,
        params: P550.to_vec(),
        t_sub: t_sub(&[
            ("p2", "0"),
            ("t1", "0"),
            ("L245", "0"),
            ("p1", "a1*L126"),
            ("t2", "a*L126"),
            ("p4", "a4*u"),
            ("L124", "a124*u"),
            ("L136", "a136*u"),
            ("L125", "a125*p3"),
            ("L123", "a123*v+b123*s1+c123*L126^2"),
            ("L135", "a135*v+b135*s1+c135*L126^2"),
        ]),
        coords: C501,
        loci: vec![s1_line(C501, |d| s1_line_point(&P550, C501, d), vec![poly("a1*b123-a")]), s1, s2],
        chart: None,
        empty: None,
    }
}

const P872: [&str; 16] = [
    "a", "b", "c", "d", "a124", "a136", "a125", "b125", "a123", "a135", "q11", "q12", "q13", "q21", "q22", "q23",
];
const C872: [&str; 7] = ["T2", "l126", "p3", "v", "s1", "s2", "s3"];

fn section_872() -> Section {
    Section {
        class: 872,
        params: P872.to_vec(),
        t_sub: t_sub(&[
            ("t2", "a*T2+b*l126"),
            ("L126", "c*T2+d*l126"),
            ("p2", "0"),
            ("p1", "0"),
            ("t1", "0"),
            ("L245", "0"),
            ("p4", "T2"),
            ("u", "l126"),
            ("L124", "a124*p3"),
            ("L136", "a136*p3"),
            ("L125", "a125*v+b125*s1"),
            ("L123", "a123*s2+q11*T2^2+q12*T2*l126+q13*l126^2"),
            ("L135", "a135*s2+q21*T2^2+q22*T2*l126+q23*l126^2"),
        ]),
        coords: C872,
        loci: vec![s1_line(C872, |d| s1_line_point(&P872, C872, d), vec![poly("a")])],
        chart: None,
        empty: None,
    }
}

const P577: [&str; 8] = ["a2", "a", "a124", "a125", "a1", "a4", "a3", "b3"];

fn section_577() -> Section {
    let locus = Locus {
        name: "L123=u=0",
        description: "points of T ∩ {L123 = u = 0} on the branch s1 = s3 = 0",
        symbolic: None,
        probe: |draw| {
            let mut pt = point(&["a2", "a125", "a1", "a4", "a3", "b3"], draw, &[]);
            let (s2, v) = (draw(), draw());
            let a2 = pt.val("a2");
            let a2sq = &a2 * &a2;
            pt.set("a", &-&(&s2 * &v) / &a2sq);
            let a124 = &(&(&-&(&pt.val("a125") * &a2) * &s2) + &(&a2 * &v)) - &(&s2 * &s2);
            pt.set("a124", &a124 / &a2sq);
            for c in ["L123", "u", "s1", "s3"] {
                pt.set(c, Rat::ZERO);
            }
            pt.set("L135", Rat::ONE);
            pt.set("s2", s2);
            pt.set("v", v);
            pt
        },
        // The rank also drops where a125·a2·a3 − a2 + a3·s2 and
        // a125·a2·b3 + b3·s2 − v vanish together; over ℚ the sum of their
        // squares vanishes exactly there.
        genericity: vec![
            poly("a125*a2*s2+a2*v+2*s2^2"),
            poly("(a125*a2*a3-a2+a3*s2)^2+(a125*a2*b3+b3*s2-v)^2"),
        ],
    };
    Section {
        class: 577,
        params: P577.to_vec(),
        t_sub: t_sub(&[
            ("L245", "0"),
            ("t1", "0"),
            ("L126", "0"),
            ("L136", "0"),
            ("p2", "a2*L135"),
            ("t2", "a*L135"),
            ("L124", "a124*L135"),
            ("L125", "a125*L135"),
            ("p1", "a1*L123"),
            ("p4", "a4*L123"),
            ("p3", "a3*u+b3*s1"),
        ]),
        coords: ["L135", "L123", "u", "s1", "v", "s2", "s3"],
        loci: vec![locus],
        chart: None,
        empty: None,
    }
}

const P878: [&str; 12] = ["a1", "b1", "a4", "b4", "a", "b", "a124", "b124", "a3", "b3", "c", "d"];

fn section_878() -> Section {
    let locus = Locus {
        name: "L125=L135=0",
        description: "points of T ∩ {L125 = L135 = 0} with L123 = λ s1",
        symbolic: None,
        probe: |draw| {
            let mut pt = point(&["a1", "b1", "a4", "b4", "a", "b", "a124", "b124", "a3", "b3", "d"], draw, &[]);
            let lam = draw();
            let base = &pt.val("a3") + &(&pt.val("b3") * &lam);
            pt.set("c", &(&base * &base) - &(&pt.val("d") * &lam));
            for c in ["L125", "L135", "v", "s2", "s3"] {
                pt.set(c, Rat::ZERO);
            }
            pt.set("s1", Rat::ONE);
            pt.set("L123", lam);
            pt
        },
        // At s1 = 1, where L123 = λ.
        genericity: vec![poly("2*a3*b3+2*b3^2*L123-d")],
    };
    Section {
        class: 878,
        params: P878.to_vec(),
        t_sub: t_sub(&[
            ("L245", "0"),
            ("p2", "0"),
            ("t1", "0"),
            ("L126", "0"),
            ("L136", "0"),
            ("p1", "a1*L125+b1*L135"),
            ("p4", "a4*L125+b4*L135"),
            ("t2", "a*L125+b*L135"),
            ("L124", "a124*L125+b124*L135"),
            ("p3", "a3*s1+b3*L123"),
            ("u", "c*s1+d*L123"),
        ]),
        coords: ["L125", "L135", "s1", "L123", "v", "s2", "s3"],
        loci: vec![locus],
        chart: None,
        empty: None,
    }
}

const P1766: [&str; 19] = [
    "a1", "a4", "a0", "a126", "a3", "b3", "c3", "a", "b", "c", "a124", "b124", "c124", "a125", "b125", "c125", "a2",
    "b2", "c2",
];

fn section_1766() -> Section {
    Section {
        class: 1766,
        params: P1766.to_vec(),
        t_sub: t_sub(&[
            ("p2", "0"),
            ("L245", "0"),
            ("p1", "a1*L136"),
            ("p4", "a4*L136"),
            ("t1", "a0*L136"),
            ("L126", "a126*L136"),
            ("p3", "a3*u+b3*s1+c3*L135"),
            ("t2", "a*u+b*s1+c*L135"),
            ("L124", "a124*u+b124*s1+c124*L135"),
            ("L125", "a125*u+b125*s1+c125*L135"),
            ("s2", "a2*v+b2*L123+c2*L136^2"),
        ]),
        coords: ["L136", "u", "s1", "L135", "v", "L123", "s3"],
        loci: Vec::new(),
        chart: None,
        empty: Some(EmptyLocus { zero: vec!["L136", "u", "s1"], description: "T ∩ {L136 = u = s1 = 0}" }),
    }
}

/// The section of class `No.n`, if it is one of the eight classes.
pub fn section(n: u32) -> Option<Section> {
    Some(match n {
        308 => section_308(),
        501 => section_501(),
        512 => section_512(),
        550 => section_550(),
        872 => section_872(),
        577 => section_577(),
        878 => section_878(),
        1766 => section_1766(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_pi;

    #[test]
    fn loci_probes_lie_on_the_section() {
        let pi = build_pi();
        let mut state = 3i64;
        let mut draw = || {
            state = (state * 7 + 3) % 17;
            Rat::from_i64(if state == 8 { 1 } else { state - 8 })
        };
        for n in [308, 501, 512, 550, 872, 577, 878] {
            let s = section(n).unwrap();
            let eqs = s.equations(&pi.f);
            for l in &s.loci {
                let pt = (l.probe)(&mut draw);
                for e in &eqs {
                    assert!(pt.evaluate(e).unwrap().is_zero(), "No.{n} {}", l.name);
                }
            }
        }
    }
}
