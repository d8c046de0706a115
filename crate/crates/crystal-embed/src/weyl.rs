//! Weyl dimension formula.

use num_rational::Ratio;

use crate::crystal::{CartanType, HalfWeight};

/// Dimension of the irreducible module with highest weight `λ` (doubled
/// coordinates), computed exactly as a product over positive roots.
pub fn weyl_dim(ty: CartanType, lambda: &HalfWeight) -> u128 {
    let n = lambda.n();
    // All quantities doubled so that `ρ` is integral.
    let rho: Vec<i64> = (0..n)
        .map(|k| {
            let r = (n - k) as i64;
            match ty {
                CartanType::C => 2 * r,
                CartanType::B => 2 * r - 1,
            }
        })
        .collect();
    let lr: Vec<i64> = (0..n).map(|k| lambda.0[k] as i64 + rho[k]).collect();
    let mut prod = Ratio::from_integer(1i128);
    let mut mul = |num: i64, den: i64| {
        prod *= Ratio::new(num as i128, den as i128);
    };
    for i in 0..n {
        for j in (i + 1)..n {
            mul(lr[i] - lr[j], rho[i] - rho[j]);
            mul(lr[i] + lr[j], rho[i] + rho[j]);
        }
        mul(lr[i], rho[i]);
    }
    assert!(prod.is_integer() && prod >= Ratio::from_integer(0));
    prod.to_integer() as u128
}
