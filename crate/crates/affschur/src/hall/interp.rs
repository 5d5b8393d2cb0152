//! Exact polynomial interpolation through integer sample points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Coefficients (constant term first) of the unique polynomial of degree
/// `< xs.len()` through the points `(xs[k], ys[k])`.
pub fn interpolate(xs: &[i64], ys: &[i64]) -> Vec<BigRational> {
    assert_eq!(xs.len(), ys.len());
    let m = xs.len();
    // Newton divided differences
    let mut dd: Vec<BigRational> = ys.iter().map(|&y| BigRational::from_integer(y.into())).collect();
    for level in 1..m {
        for k in (level..m).rev() {
            let num = &dd[k] - &dd[k - 1];
            let den = BigRational::from_integer((xs[k] - xs[k - level]).into());
            dd[k] = num / den;
        }
    }
    // expand Σ dd[k] ∏_{t<k} (x - xs[t]) by Horner
    let mut coeffs = vec![BigRational::zero(); m.max(1)];
    for k in (0..m).rev() {
        // coeffs = coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![BigRational::zero(); m.max(1)];
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e + 1 < next.len() {
                next[e + 1] += c;
            }
            next[e] -= c * BigRational::from_integer(xs[k].into());
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

/// Integer coefficients, if all are integral.
pub fn integral(coeffs: &[BigRational]) -> Option<Vec<BigInt>> {
    coeffs.iter().map(|c| if c.is_integer() { Some(c.to_integer()) } else { None }).collect()
}

pub fn eval(coeffs: &[BigInt], x: i64) -> BigInt {
    let mut acc = BigInt::zero();
    let x = BigInt::from(x);
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}
