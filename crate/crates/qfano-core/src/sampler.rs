//! Seeded generation of exact rational points on `{G = 0}`, on Π¹⁵ (by the
//! unprojection lift), on the singular locus `S` and on H¹³ (through the
//! isomorphism).
//!
//! All draws come from a ChaCha8 stream seeded by [`SampleConfig::seed`], in
//! a fixed coordinate order, so identical configurations produce identical
//! points.

use crate::catalog::pi::{PiSystem, Triple, S_FREE};
use crate::catalog::vars::{G_VARS, S_VARS};
use crate::catalog::{universe, IsomData};
use crate::catalog::isom::admissibility;
use crate::poly::RationalPoint;
use crate::rat::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Sampling parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    /// Coordinates are drawn uniformly from the integers in `[−N, N]`.
    pub coord_bound: i64,
    pub max_retries: u32,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 0, coord_bound: 7, max_retries: 1000 }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        SampleConfig { seed, ..Self::default() }
    }
}

/// Sampling and lifting errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SampleError {
    #[error("sampling on {target} failed after {rejections} rejected draws")]
    Exhausted { target: &'static str, rejections: u32 },
    #[error("no lift: D{}{}{} vanishes at the point", .0.0, .0.1, .0.2)]
    NoLift(Triple),
    #[error("point is not on {{G = 0}}: G = {0}")]
    NotOnG(String),
    #[error("missing coordinate: {0}")]
    Missing(String),
}

/// A deterministic stream of sample points.
pub struct Sampler {
    cfg: SampleConfig,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(cfg: SampleConfig) -> Sampler {
        Sampler { cfg, rng: ChaCha8Rng::seed_from_u64(cfg.seed) }
    }

    pub fn config(&self) -> SampleConfig {
        self.cfg
    }

    /// An integer in `[−N, N]`.
    pub fn draw(&mut self) -> Rat {
        let n = self.cfg.coord_bound.max(0);
        Rat::from_i64(self.rng.gen_range(-n..=n))
    }

    /// A nonzero integer in `[−N, N]` (`N ≥ 1`).
    pub fn draw_nonzero(&mut self) -> Rat {
        let n = self.cfg.coord_bound.max(1);
        loop {
            let x = self.rng.gen_range(-n..=n);
            if x != 0 {
                return Rat::from_i64(x);
            }
        }
    }

    /// A point on `{G = 0}`: all coordinates but `L₂₄₆` are drawn, then
    /// `L₂₄₆ = −(rest)/D₂₄₆`. Draws with `D₂₄₆ = 0` are accepted only when
    /// they already lie on `{G = 0}`, and are rejected otherwise.
    pub fn sample_on_g(&mut self, pi: &PiSystem) -> Result<RationalPoint, SampleError> {
        self.sample_on_g_fixed(pi, &RationalPoint::new(universe()))
    }

    /// As [`Sampler::sample_on_g`], keeping the coordinates set in `fixed`.
    pub fn sample_on_g_fixed(&mut self, pi: &PiSystem, fixed: &RationalPoint) -> Result<RationalPoint, SampleError> {
        let d246 = pi.minor(2, 4, 6);
        for _ in 0..self.cfg.max_retries {
            let mut pt = fixed.clone();
            for v in G_VARS.iter().filter(|v| **v != "L246") {
                if fixed.get(v).is_none() {
                    let x = self.draw();
                    pt.set(v, x);
                }
            }
            let d = pt.evaluate(d246).expect("all G coordinates drawn");
            pt.set("L246", Rat::ZERO);
            let rest = pt.evaluate(&pi.g).expect("all G coordinates drawn");
            if d.is_zero() {
                if rest.is_zero() {
                    return Ok(pt);
                }
                continue;
            }
            pt.set("L246", &-&rest / &d);
            return Ok(pt);
        }
        Err(SampleError::Exhausted { target: "{G = 0}", rejections: self.cfg.max_retries })
    }

    /// A lifted Π¹⁵ point: a `{G = 0}` sample lifted with `triple`,
    /// redrawing while the lift does not exist.
    pub fn sample_on_pi(&mut self, pi: &PiSystem, triple: Triple) -> Result<RationalPoint, SampleError> {
        for _ in 0..self.cfg.max_retries {
            let pt = self.sample_on_g(pi)?;
            match lift_to_pi(pi, &pt, triple) {
                Ok(q) => return Ok(q),
                Err(SampleError::NoLift(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(SampleError::Exhausted { target: "Π¹⁵", rejections: self.cfg.max_retries })
    }

    /// A point of `S ∩ {p₂p₄ ≠ 0}` from the free coordinates.
    pub fn sample_on_s(&mut self, pi: &PiSystem) -> Result<RationalPoint, SampleError> {
        for _ in 0..self.cfg.max_retries {
            let mut pt = RationalPoint::new(universe());
            for v in S_FREE {
                let x = self.draw();
                pt.set(v, x);
            }
            if pt.val("p2").is_zero() || pt.val("p4").is_zero() {
                continue;
            }
            return Ok(s_point(pi, pt));
        }
        Err(SampleError::Exhausted { target: "S", rejections: self.cfg.max_retries })
    }

    /// Draws an admissible base point `(A, B)` with `(A−B)(2A+B)(A+2B) ≠ 0`.
    pub fn sample_base(&mut self) -> Result<(Rat, Rat), SampleError> {
        for _ in 0..self.cfg.max_retries {
            let (a, b) = (self.draw(), self.draw());
            if !admissibility(&a, &b).is_zero() {
                return Ok((a, b));
            }
        }
        Err(SampleError::Exhausted { target: "U_AB", rejections: self.cfg.max_retries })
    }

    /// A Π¹⁵ point over an admissible base point (with `A`, `B` recorded)
    /// and its image in H¹³.
    pub fn sample_h13_with_source(
        &mut self,
        pi: &PiSystem,
        iso: &IsomData,
    ) -> Result<(RationalPoint, RationalPoint), SampleError> {
        for _ in 0..self.cfg.max_retries {
            let (a, b) = self.sample_base()?;
            let q = self.sample_over_base(pi, &a, &b)?;
            match lift_to_pi(pi, &q, (1, 2, 3)) {
                Ok(mut lifted) => {
                    lifted.set("A", a);
                    lifted.set("B", b);
                    let img = iso.apply(&lifted).map_err(|e| SampleError::Missing(e.to_string()))?;
                    return Ok((lifted, img));
                }
                Err(SampleError::NoLift(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(SampleError::Exhausted { target: "H¹³", rejections: self.cfg.max_retries })
    }

    /// A point of H¹³ (17 coordinates).
    pub fn sample_h13(&mut self, pi: &PiSystem, iso: &IsomData) -> Result<RationalPoint, SampleError> {
        self.sample_h13_with_source(pi, iso).map(|(_, h)| h)
    }

    /// A `{G = 0}` point with `t₁ = −A²−AB−B²`, `t₂ = −AB(A+B)`.
    pub fn sample_over_base(&mut self, pi: &PiSystem, a: &Rat, b: &Rat) -> Result<RationalPoint, SampleError> {
        let mut fixed = RationalPoint::new(universe());
        fixed.set("t1", base_t1(a, b));
        fixed.set("t2", base_t2(a, b));
        self.sample_on_g_fixed(pi, &fixed)
    }
}

/// `t₁ = −A²−AB−B²`.
pub fn base_t1(a: &Rat, b: &Rat) -> Rat {
    -&(&(&(a * a) + &(a * b)) + &(b * b))
}

/// `t₂ = −AB(A+B)`.
pub fn base_t2(a: &Rat, b: &Rat) -> Rat {
    -&(&(a * b) * &(a + b))
}

/// Completes the free coordinates of `S` (with `p₂p₄ ≠ 0`) by the
/// parameterization.
pub fn s_point(pi: &PiSystem, mut pt: RationalPoint) -> RationalPoint {
    let free = pt.clone();
    for (v, f) in &pi.s_param {
        let x = f.evaluate(&free).expect("p2·p4 ≠ 0 and free coordinates set");
        pt.set(v, x);
    }
    pt
}

fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    let c = |a: usize, b: usize, c: usize, d: usize| &(&m[a][c] * &m[b][d]) - &(&m[a][d] * &m[b][c]);
    &(&(&m[0][0] * &c(1, 2, 1, 2)) - &(&m[0][1] * &c(1, 2, 0, 2))) + &(&m[0][2] * &c(1, 2, 0, 1))
}

/// Appends `s₁, s₂, s₃` solving `s·M_ijk = (H_i, H_j, H_k)` by Cramer's rule.
pub fn lift_to_pi(pi: &PiSystem, pt: &RationalPoint, triple: Triple) -> Result<RationalPoint, SampleError> {
    let g = pt.evaluate(&pi.g).map_err(|e| SampleError::Missing(e.to_string()))?;
    if !g.is_zero() {
        return Err(SampleError::NotOnG(g.to_string()));
    }
    let cols = [triple.0 - 1, triple.1 - 1, triple.2 - 1];
    let ev = |p: &crate::poly::Polynomial| pt.evaluate(p).map_err(|e| SampleError::Missing(e.to_string()));
    let mut m: [[Rat; 3]; 3] = Default::default();
    for r in 0..3 {
        for (c, &col) in cols.iter().enumerate() {
            m[r][c] = ev(pi.m.get(r, col))?;
        }
    }
    let h: Vec<Rat> = cols.iter().map(|&c| ev(&pi.h[c])).collect::<Result<_, _>>()?;
    let d = det3(&m);
    if d.is_zero() {
        return Err(SampleError::NoLift(triple));
    }
    // s·m = h, i.e. mᵀ·sᵀ = hᵀ: replace row j of m by h.
    let mut out = pt.clone();
    for (j, s) in S_VARS.iter().enumerate() {
        let mut mj = m.clone();
        mj[j] = [h[0].clone(), h[1].clone(), h[2].clone()];
        out.set(s, &det3(&mj) / &d);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_pi, isom_data};

    #[test]
    fn g_samples_are_on_g_and_deterministic() {
        let pi = build_pi();
        let mut a = Sampler::new(SampleConfig { seed: 5, coord_bound: 5, max_retries: 100 });
        let mut b = Sampler::new(SampleConfig { seed: 5, coord_bound: 5, max_retries: 100 });
        for _ in 0..5 {
            let p = a.sample_on_g(&pi).unwrap();
            assert!(p.evaluate(&pi.g).unwrap().is_zero());
            assert_eq!(p, b.sample_on_g(&pi).unwrap());
        }
    }

    #[test]
    fn degenerate_bound_falls_back_to_trivial_point() {
        let pi = build_pi();
        let mut s = Sampler::new(SampleConfig { seed: 1, coord_bound: 0, max_retries: 3 });
        let p = s.sample_on_g(&pi).unwrap();
        assert!(p.entries().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn worked_lift_example() {
        let pi = build_pi();
        let mut pt = RationalPoint::new(universe());
        for v in G_VARS {
            pt.set(v, Rat::ZERO);
        }
        pt.set("u", Rat::ONE);
        pt.set("L136", Rat::ONE);
        let q = lift_to_pi(&pi, &pt, (1, 3, 5)).unwrap();
        assert_eq!((q.val("s1"), q.val("s2"), q.val("s3")), (Rat::ZERO, Rat::ZERO, Rat::ONE));
        for f in &pi.f {
            assert!(q.evaluate(f).unwrap().is_zero());
        }
        assert_eq!(lift_to_pi(&pi, &pt, (1, 2, 3)), Err(SampleError::NoLift((1, 2, 3))));
    }

    #[test]
    fn worked_s_point() {
        let pi = build_pi();
        let mut pt = RationalPoint::new(universe());
        for (v, x) in [("p2", 1), ("p4", 1), ("p3", 0), ("t1", -1), ("L126", 0), ("L136", 0), ("L245", 0), ("L246", 1)] {
            pt.set(v, Rat::from_i64(x));
        }
        let q = s_point(&pi, pt);
        let want = [
            ("p1", 0),
            ("u", 1),
            ("v", 1),
            ("t2", 0),
            ("s1", -1),
            ("s2", 0),
            ("s3", -1),
            ("L123", 1),
            ("L124", 1),
            ("L125", 0),
            ("L135", -1),
        ];
        for (v, x) in want {
            assert_eq!(q.val(v), Rat::from_i64(x), "{v}");
        }
        for f in &pi.f {
            assert!(q.evaluate(f).unwrap().is_zero());
        }
    }

    #[test]
    fn base_map_and_h13_samples() {
        let (a, b) = (Rat::ONE, Rat::ZERO);
        assert_eq!((base_t1(&a, &b), base_t2(&a, &b)), (Rat::from_i64(-1), Rat::ZERO));
        let pi = build_pi();
        let h = crate::catalog::build_h();
        let iso = isom_data();
        let mut s = Sampler::new(SampleConfig::with_seed(9));
        for _ in 0..3 {
            let p = s.sample_h13(&pi, &iso).unwrap();
            for e in h.equations() {
                assert!(p.evaluate(&e).unwrap().is_zero());
            }
        }
    }
}
