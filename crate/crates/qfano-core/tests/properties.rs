//! Algebraic laws of the polynomial engine on random inputs.

use proptest::prelude::*;
use qfano_core::poly::{weighted_degree, VarTable};
use qfano_core::{Monomial, PolyMatrix, Polynomial, Rat, RationalPoint, Substitution, WeightVector};
use std::sync::{Arc, OnceLock};

const NAMES: [&str; 3] = ["x", "y", "z"];

fn table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| VarTable::new(&NAMES))
}

fn rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn poly_with(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), rat()), 0..=max_terms).prop_map(|terms| {
        Polynomial::from_terms(
            table(),
            terms.into_iter().map(|(es, c)| {
                let pairs: Vec<(usize, u32)> = es.into_iter().enumerate().filter(|(_, e)| *e > 0).collect();
                (Monomial::from_pairs(&pairs), c)
            }),
        )
    })
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    poly_with(4, 3)
}

/// A homogeneous polynomial of `degree` for the weights (1, 2, 3).
fn weighted_homogeneous(degree: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rat(), 1..=4).prop_map(move |cs| {
        let monos: Vec<Monomial> = (0..=degree)
            .flat_map(|b| (0..=degree).map(move |c| (b, c)))
            .filter(|&(b, c)| 2 * b + 3 * c <= degree)
            .map(|(b, c)| {
                let pairs: Vec<(usize, u32)> =
                    [(0, degree - 2 * b - 3 * c), (1, b), (2, c)].into_iter().filter(|p| p.1 > 0).collect();
                Monomial::from_pairs(&pairs)
            })
            .collect();
        Polynomial::from_terms(table(), cs.into_iter().enumerate().map(|(i, c)| (monos[i % monos.len()].clone(), c)))
    })
}

fn point() -> impl Strategy<Value = RationalPoint> {
    prop::collection::vec(rat(), 3).prop_map(|vs| {
        let mut p = RationalPoint::new(table());
        for (n, v) in NAMES.iter().zip(vs) {
            p.set(n, v);
        }
        p
    })
}

fn square(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly_with(2, 1), n * n).prop_map(move |es| PolyMatrix::new(n, n, es).unwrap())
}

fn skew(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly_with(2, 1), n * (n - 1) / 2).prop_map(move |upper| {
        let mut m = PolyMatrix::zeros(table(), n, n);
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let p = it.next().unwrap();
                m.set(j, i, p.neg());
                m.set(i, j, p);
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(table()), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        let lhs = a.mul(&b).unwrap().determinant().unwrap();
        prop_assert_eq!(lhs, &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn pfaffian_squares_to_determinant(m in skew(4)) {
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.determinant().unwrap());
    }

    #[test]
    fn weighted_degree_is_additive(a in weighted_homogeneous(5), b in weighted_homogeneous(7)) {
        let w = WeightVector::new(table()).with("x", 1).with("y", 2).with("z", 3);
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(weighted_degree(&a, &w).unwrap(), 5);
        prop_assert_eq!(weighted_degree(&(&a * &b), &w).unwrap(), 12);
    }

    #[test]
    fn evaluation_commutes_with_substitution(p in small_poly(), q in small_poly(), r in small_poly(), pt in point()) {
        let sigma = Substitution::identity(table()).with("x", q.clone()).with("y", r.clone());
        let mut moved = pt.clone();
        moved.set("x", pt.evaluate(&q).unwrap());
        moved.set("y", pt.evaluate(&r).unwrap());
        prop_assert_eq!(pt.evaluate(&sigma.apply(&p).unwrap()).unwrap(), moved.evaluate(&p).unwrap());
    }

    #[test]
    fn text_round_trips(p in small_poly()) {
        prop_assert_eq!(qfano_core::poly::parse(table(), &p.to_text()).unwrap(), p);
    }
}

#[test]
fn pfaffian_of_a_generic_symbolic_4x4() {
    let t = VarTable::new(&["a", "b", "c", "d", "e", "f"]);
    let v = |n: &str| qfano_core::poly::var(&t, n).unwrap();
    let z = Polynomial::zero(&t);
    let rows = vec![
        vec![z.clone(), v("a"), v("b"), v("c")],
        vec![v("a").neg(), z.clone(), v("d"), v("e")],
        vec![v("b").neg(), v("d").neg(), z.clone(), v("f")],
        vec![v("c").neg(), v("e").neg(), v("f").neg(), z],
    ];
    let m = PolyMatrix::from_rows(rows).unwrap();
    let pf = m.pfaffian().unwrap();
    assert_eq!(pf, qfano_core::poly::parse(&t, "a*f - b*e + c*d").unwrap());
    assert_eq!(&pf * &pf, m.determinant().unwrap());
}
