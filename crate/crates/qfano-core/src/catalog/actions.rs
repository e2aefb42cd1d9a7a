//! Group actions: GL₂ on Π¹⁵ and (GL₂)³ ⋊ S₃ on H¹³.
//!
//! All actions use a symbolic matrix `g = [[a, b], [c, d]]`. The Π¹⁵ action
//! involves `1/det g`; it is encoded with the symbol `iota` standing for
//! `1/(ad − bc)`, and each covariance rule records the power of `ad − bc`
//! needed to clear it.

use super::h13::{p_name, x_names, HSystem};
use super::pi::PiSystem;
use super::vars::{idx, poly, universe};
use crate::poly::{PolyMatrix, Polynomial, Substitution};

/// Which action is described.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionTarget {
    /// GL₂ acting on Π¹⁵.
    Pi,
    /// The `f`-th GL₂ factor acting on H¹³ (`f ∈ {1, 2, 3}`).
    HFactor(usize),
    /// The permutation `k ↦ σ[k]` of the three tensor factors (0-based).
    HPerm([usize; 3]),
}

/// One stated transformation rule: after clearing `iota` with power `power`,
/// `source ∘ action` must equal `det^power · expected`.
#[derive(Clone, Debug)]
pub struct CovarianceRule {
    pub name: String,
    pub source: Polynomial,
    pub expected: Polynomial,
    pub power: u32,
}

/// A group action as a substitution plus its stated transformation rules.
#[derive(Clone, Debug)]
pub struct GL2Action {
    pub target: ActionTarget,
    pub sub: Substitution,
    pub rules: Vec<CovarianceRule>,
}

/// `ad − bc`.
pub fn det_g() -> Polynomial {
    poly("a*d - b*c")
}

/// Builds the action for `target` together with its rules.
pub fn gl2_action(target: ActionTarget, pi: &PiSystem, h: &HSystem) -> GL2Action {
    match target {
        ActionTarget::Pi => pi_action(pi),
        ActionTarget::HFactor(f) => h_factor_action(f, h),
        ActionTarget::HPerm(sigma) => GL2Action { target, sub: h_perm(sigma), rules: Vec::new() },
    }
}

/// The substitution of the GL₂ action on Π¹⁵.
pub fn pi_substitution() -> Substitution {
    let mut s = Substitution::identity(universe());
    // Rows of the 3×2 block (p1 p3; p2 p4; u v) are multiplied by g.
    for (x, y) in [("p1", "p3"), ("p2", "p4"), ("u", "v")] {
        s.set(x, poly(&format!("a*{x} + c*{y}"))).unwrap();
        s.set(y, poly(&format!("b*{x} + d*{y}"))).unwrap();
    }
    for v in ["s1", "s2", "s3"] {
        s.set(v, &det_g() * &poly(v)).unwrap();
    }
    // (L123 L125; L124 L126) is multiplied on the left by adj(g).
    s.set("L123", poly("d*L123 - b*L124")).unwrap();
    s.set("L125", poly("d*L125 - b*L126")).unwrap();
    s.set("L124", poly("-c*L123 + a*L124")).unwrap();
    s.set("L126", poly("-c*L125 + a*L126")).unwrap();
    // 𝖫 ↦ gᵀ·𝖫·ĝ with ĝ = iota·K.
    let l = PolyMatrix::from_rows(vec![
        vec![poly("L136"), poly("L245"), poly("L246")],
        vec![poly("-L135"), poly("-L136"), poly("-L245")],
    ])
    .unwrap();
    let gt = PolyMatrix::from_rows(vec![vec![poly("a"), poly("c")], vec![poly("b"), poly("d")]]).unwrap();
    let k = PolyMatrix::from_rows(vec![
        vec![poly("d^2"), poly("-c*d"), poly("c^2")],
        vec![poly("-2*b*d"), poly("b*c + a*d"), poly("-2*a*c")],
        vec![poly("b^2"), poly("-a*b"), poly("a^2")],
    ])
    .unwrap();
    let img = gt.mul(&l).unwrap().mul(&k).unwrap().scale(&poly("iota"));
    s.set("L136", img.get(0, 0).clone()).unwrap();
    s.set("L245", img.get(0, 1).clone()).unwrap();
    s.set("L246", img.get(0, 2).clone()).unwrap();
    s.set("L135", -img.get(1, 0)).unwrap();
    s
}

fn pi_action(pi: &PiSystem) -> GL2Action {
    let dt = det_g();
    let (a, b, c, d) = (poly("a"), poly("b"), poly("c"), poly("d"));
    let mut rules = Vec::new();
    // (F1 F3 F5; F2 F4 F6) ↦ det·gᵀ·(F1 F3 F5; F2 F4 F6).
    for col in 0..3 {
        let top = &pi.f[2 * col];
        let bot = &pi.f[2 * col + 1];
        let e_top = &dt * &(&(&a * top) + &(&c * bot));
        let e_bot = &dt * &(&(&b * top) + &(&d * bot));
        rules.push(CovarianceRule { name: format!("F{}", 2 * col + 1), source: top.clone(), expected: e_top, power: 1 });
        rules.push(CovarianceRule { name: format!("F{}", 2 * col + 2), source: bot.clone(), expected: e_bot, power: 1 });
    }
    rules.sort_by_key(|r| r.name[1..].parse::<usize>().unwrap());
    let dt2 = dt.pow(2);
    for i in 6..9 {
        rules.push(CovarianceRule {
            name: format!("F{}", i + 1),
            source: pi.f[i].clone(),
            expected: &dt2 * &pi.f[i],
            power: 2,
        });
    }
    GL2Action { target: ActionTarget::Pi, sub: pi_substitution(), rules }
}

/// The substitution of the `f`-th GL₂ factor on H¹³ (`f ∈ {1, 2, 3}`).
pub fn h_factor_substitution(f: usize) -> Substitution {
    assert!((1..=3).contains(&f), "factor index must be 1, 2 or 3");
    let dt = det_g();
    let mut s = Substitution::identity(universe());
    let [x1, x2] = x_names(f);
    s.set(&x1, poly(&format!("a*{x1} + b*{x2}"))).unwrap();
    s.set(&x2, poly(&format!("c*{x1} + d*{x2}"))).unwrap();
    for k in 1..=3 {
        if k != f {
            let u = format!("u{k}");
            s.set(&u, &dt * &poly(&u)).unwrap();
        }
    }
    for i in 1..=2 {
        for j in 1..=2 {
            let mut lo = vec![i, j];
            let mut hi = vec![i, j];
            lo.insert(f - 1, 1);
            hi.insert(f - 1, 2);
            let n1 = p_name(lo[0], lo[1], lo[2]);
            let n2 = p_name(hi[0], hi[1], hi[2]);
            s.set(&n1, poly(&format!("a*{n1} + b*{n2}"))).unwrap();
            s.set(&n2, poly(&format!("c*{n1} + d*{n2}"))).unwrap();
        }
    }
    s
}

fn h_factor_action(f: usize, h: &HSystem) -> GL2Action {
    let dt = det_g();
    let sub = h_factor_substitution(f);
    let g = PolyMatrix::from_rows(vec![vec![poly("a"), poly("b")], vec![poly("c"), poly("d")]]).unwrap();
    let mut rules = Vec::new();
    for k in 0..3 {
        let exp = if k + 1 == f { g.mul(&h.g_vec[k]).unwrap() } else { h.g_vec[k].scale(&dt) };
        for r in 0..2 {
            rules.push(CovarianceRule {
                name: format!("G{}[{}]", k + 1, r + 1),
                source: h.g_vec[k].get(r, 0).clone(),
                expected: exp.get(r, 0).clone(),
                power: 0,
            });
        }
    }
    // G4 pairs factors (1,2), G5 pairs (2,3), G6 pairs (3,1).
    let pairs = [(1, 2), (2, 3), (3, 1)];
    for (k, &(x, y)) in pairs.iter().enumerate() {
        let pw = if f == x || f == y { 1 } else { 2 };
        rules.push(CovarianceRule {
            name: format!("G{}", k + 4),
            source: h.g_scalar[k].clone(),
            expected: &dt.pow(pw) * &h.g_scalar[k],
            power: 0,
        });
    }
    rules.push(CovarianceRule {
        name: "hyperdet".into(),
        source: h.hyperdet.clone(),
        expected: &dt.pow(2) * &h.hyperdet,
        power: 0,
    });
    GL2Action { target: ActionTarget::HFactor(f), sub, rules }
}

/// The substitution permuting the three tensor factors by `σ` (0-based):
/// `u_k ↦ u_σ(k)`, `x_k ↦ x_σ(k)` and `p_key ↦ p_key'` with
/// `key'[σ(k)] = key[k]`.
pub fn h_perm(sigma: [usize; 3]) -> Substitution {
    let mut s = Substitution::identity(universe());
    for k in 0..3 {
        s.set(&format!("u{}", k + 1), poly(&format!("u{}", sigma[k] + 1))).unwrap();
        let [a, b] = x_names(k + 1);
        let [c, d] = x_names(sigma[k] + 1);
        s.set(&a, poly(&c)).unwrap();
        s.set(&b, poly(&d)).unwrap();
    }
    for i in 1..=2 {
        for j in 1..=2 {
            for l in 1..=2 {
                let key = [i, j, l];
                let mut nk = [0; 3];
                for k in 0..3 {
                    nk[sigma[k]] = key[k];
                }
                s.set(&p_name(i, j, l), poly(&p_name(nk[0], nk[1], nk[2]))).unwrap();
            }
        }
    }
    s
}

/// All six permutations of three factors.
pub const S3: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

/// Index of the clearing symbol `iota`.
pub fn iota() -> usize {
    idx("iota")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_h, build_pi};
    use crate::poly::Substitution;

    #[test]
    fn identity_specialization() {
        let pi = build_pi();
        let h = build_h();
        let act = gl2_action(ActionTarget::Pi, &pi, &h);
        let id = Substitution::identity(universe())
            .with("a", poly("1"))
            .with("b", poly("0"))
            .with("c", poly("0"))
            .with("d", poly("1"))
            .with("iota", poly("1"));
        for v in ["u", "s1", "L136", "L123"] {
            let img = act.sub.image(idx(v));
            assert_eq!(id.apply(&img).unwrap(), poly(v));
        }
        assert_eq!(act.sub.image(idx("u")), poly("a*u + c*v"));
        assert_eq!(act.sub.image(idx("s1")), poly("(a*d - b*c)*s1"));
        let h1 = h_factor_substitution(1);
        assert_eq!(h1.image(idx("u2")), poly("(a*d - b*c)*u2"));
    }
}
