//! Closed-form bounds behind the F± fallback and the strip argument.

/// `4·asin(1/√3) + 8·asin(1/√5)`: the largest angular measure three forbidden
/// arc pairs can cover in the strip argument.
pub fn forbidden_measure_bound() -> f64 {
    4.0 * (1.0 / 3f64.sqrt()).asin() + 8.0 * (1.0 / 5f64.sqrt()).asin()
}

/// `h̃(r, δ)`: lower bound for `min |z|` over `F(z1, z2)` when `|z1| = r` and
/// the equal-imaginary rotation puts `z1` at height `δ`.
pub fn h_tilde(r: f64, delta: f64) -> f64 {
    let d2 = delta * delta;
    let a = (r * r - d2).sqrt();
    let b = (10.0 - r * r - d2).sqrt();
    0.5 * (a + b - (10.0 + 2.0 * d2 - 2.0 * a * b).sqrt())
}

/// `φ(r) = h̃(r, 1)`.
pub fn phi(r: f64) -> f64 {
    let p = ((r * r - 1.0) * (9.0 - r * r)).sqrt();
    0.5 * ((r * r - 1.0).sqrt() + (9.0 - r * r).sqrt() - (12.0 - 2.0 * p).sqrt())
}

/// Upper bound for `Re z` over the rotated `F-`.
pub fn psi(r: f64) -> f64 {
    let r2 = r * r;
    (5.0 * r2 - 3.0 - (r2 - 1.0) * (9.0 - r2).sqrt()) / (2.0 * r2 * 3f64.sqrt())
}

/// `√2(√(√2 + √6 - 1) - 1)`.
pub fn chord_radical() -> f64 {
    let s2 = 2f64.sqrt();
    s2 * ((s2 + 6f64.sqrt() - 1.0).sqrt() - 1.0)
}

/// `2√(1 - (√3 - √2 + √2·√(√6 + √2 - 1)) / (√2(√2 + 1)))`.
pub fn arc_radical() -> f64 {
    let s2 = 2f64.sqrt();
    let inner = 3f64.sqrt() - s2 + s2 * (6f64.sqrt() + s2 - 1.0).sqrt();
    2.0 * (1.0 - inner / (s2 * (s2 + 1.0))).sqrt()
}
