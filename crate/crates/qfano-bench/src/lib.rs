//! Benchmark fixtures for the qfano engine; the benchmarks themselves live
//! in `benches/`.

use qfano_core::catalog::catalog;
use qfano_core::Polynomial;

/// `D₁₂₃` and `F₉`, a representative pair of medium-size polynomials.
pub fn product_operands() -> (Polynomial, Polynomial) {
    let pi = &catalog().pi;
    (pi.minor(1, 2, 3).clone(), pi.f[8].clone())
}

