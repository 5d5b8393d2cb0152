//! The commutator relation between semisimple generators, evaluated in
//! `𝒮_△(n, r)`, and the polynomials `P_{λ,μ}`, `P'_{λ,μ}`.

use crate::hall::{d_prime, hall_poly};
use crate::laurent::{gauss_q, qfactorial_sq, LaurentPoly};
use crate::quiver_rep::{aut_poly, dims_below, euler_form, pget, total_dim, upper_with_dim, vsub, PeriodicMatrix};
use crate::Error;

use super::{blm, product, SchurElement};

fn nu_range(lambda: &[i32]) -> Vec<Vec<i32>> {
    dims_below(lambda)
}

/// `Π_i (v^2 - 1)^{ν_i} [[ν_i]]! [[top_i over ν_i]]` with tops supplied.
fn factor(nu: &[i32], lambda: &[i32], top: impl Fn(usize) -> i32) -> LaurentPoly {
    let qm1 = LaurentPoly::from_terms([(2, 1), (0, -1)]);
    let mut acc = LaurentPoly::one();
    for (i, &x) in nu.iter().enumerate() {
        let x = x as u32;
        acc = acc * qm1.pow(x) * qfactorial_sq(x) * gauss_q(lambda[i] as i64, x) * gauss_q(top(i) as i64, x);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `P_{λ,μ}(v^2) = Σ_{0<=ν<=λ} v^{2 Σ_i ((ν_i^2-ν_i)/2 + (λ_i-ν_i)(μ_i-ν_{i-1}))}
/// Π_i (v^2-1)^{ν_i} [[ν_i]]! [[λ_i over ν_i]] [[μ_{i+1} over ν_i]]`.
pub fn poly_p(lambda: &[i32], mu: &[i32]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for nu in nu_range(lambda) {
        let e: i32 = (1..=lambda.len() as i32)
            .map(|i| {
                let (l, m, x) = (pget(lambda, i), pget(mu, i), pget(&nu, i));
                x * x - x + 2 * (l - x) * (m - pget(&nu, i - 1))
            })
            .sum();
        out += factor(&nu, lambda, |i| pget(mu, i as i32 + 2)).shift(e);
    }
    out
}

/// `P'_{λ,μ}(v^2)`: the same sum with `(λ_i-ν_i)(μ_{i+1}-ν_{i+1})` in the
/// exponent and `[[μ_i over ν_i]]`.
pub fn poly_p_prime(lambda: &[i32], mu: &[i32]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for nu in nu_range(lambda) {
        let e: i32 = (1..=lambda.len() as i32)
            .map(|i| {
                let (l, x) = (pget(lambda, i), pget(&nu, i));
                x * x - x + 2 * (l - x) * (pget(mu, i + 1) - pget(&nu, i + 1))
            })
            .sum();
        out += factor(&nu, lambda, |i| mu[i]).shift(e);
    }
    out
}

fn ex(a: &[i32], b: &[i32]) -> i32 {
    euler_form(a, b) as i32
}

/// `ξ_r(K̃_α) = 0(α - τα, r)`.
fn k_tilde(alpha: &[i32], r: i32) -> SchurElement {
    let n = alpha.len();
    let j: Vec<i32> = (1..=n as i32).map(|i| pget(alpha, i) - pget(alpha, i - 1)).collect();
    blm(&PeriodicMatrix::zero(n), &j, r)
}

fn xi_plus(a: &PeriodicMatrix, r: i32) -> Result<SchurElement, Error> {
    Ok(blm(a, &vec![0; a.n()], r).scale(&LaurentPoly::v(-d_prime(a)?)))
}

fn xi_minus(a: &PeriodicMatrix, r: i32) -> Result<SchurElement, Error> {
    Ok(blm(&a.transpose(), &vec![0; a.n()], r).scale(&LaurentPoly::v(-d_prime(a)?)))
}

/// `𝔞_A 𝔞_B φ_{A,B}^{A_1,B_1}` and its tilde version, which are polynomials.
fn phi_pair(
    a: &PeriodicMatrix,
    b: &PeriodicMatrix,
    a1: &PeriodicMatrix,
    b1: &PeriodicMatrix,
    rest: &[i32],
) -> Result<(LaurentPoly, LaurentPoly), Error> {
    let mut s = LaurentPoly::zero();
    let mut st = LaurentPoly::zero();
    for a2 in upper_with_dim(rest) {
        let w = aut_poly(&a2)?.shift(2 * total_dim(&a2)?);
        s += &w * &(hall_poly(a, a1, &a2)? * hall_poly(b, b1, &a2)?);
        st += &w * &(hall_poly(a, &a2, a1)? * hall_poly(b, &a2, b1)?);
    }
    let pre = aut_poly(a1)? * aut_poly(b1)?;
    Ok((&pre * &s, &pre * &st))
}

/// Both sides of the commutator relation for `u_A^+` and `u_B^-`, with
/// `A = A_λ`, `B = A_μ`, mapped to `𝒮_△(n, r)` and multiplied by `𝔞_A 𝔞_B`.
pub fn commutator_sides(lambda: &[i32], mu: &[i32], r: i32) -> Result<(SchurElement, SchurElement), Error> {
    let n = lambda.len();
    if mu.len() != n {
        return Err(Error::DimMismatch(format!("{:?} vs {:?}", lambda, mu)));
    }
    let a = PeriodicMatrix::semisimple(lambda);
    let b = PeriodicMatrix::semisimple(mu);
    let (da, db) = (lambda.to_vec(), mu.to_vec());
    let mut x = SchurElement::zero();
    let mut y = SchurElement::zero();
    for alpha in dims_below(&da) {
        let rest = vsub(&da, &alpha);
        let beta = vsub(&db, &rest);
        if beta.iter().any(|&t| t < 0) {
            continue;
        }
        for a1 in upper_with_dim(&alpha) {
            for b1 in upper_with_dim(&beta) {
                let (phi, phi_t) = phi_pair(&a, &b, &a1, &b1, &rest)?;
                if phi.is_zero() && phi_t.is_zero() {
                    continue;
                }
                let up = xi_plus(&a1, r)?;
                let dn = xi_minus(&b1, r)?;
                let db_db1 = vsub(&db, &beta);
                if !phi.is_zero() {
                    let e = ex(&db, &db) + ex(&beta, &vsub(&vec_sum(&da, &db), &beta));
                    let k = k_tilde(&db_db1, r);
                    let term = product(&[&k, &dn, &up])?;
                    x.add_scaled(&term, &phi.shift(e));
                }
                if !phi_t.is_zero() {
                    let e = ex(&db, &da) + ex(&db_db1, &alpha) + ex(&db, &beta);
                    let k = k_tilde(&vsub(&beta, &db), r);
                    let term = product(&[&k, &up, &dn])?;
                    y.add_scaled(&term, &phi_t.shift(e));
                }
            }
        }
    }
    Ok((x, y))
}

fn vec_sum(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn commutator_check(lambda: &[i32], mu: &[i32], r: i32) -> Result<bool, Error> {
    let (x, y) = commutator_sides(lambda, mu, r)?;
    Ok(x == y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_trivial_cases() {
        assert_eq!(poly_p(&[2, 1], &[0, 0]), LaurentPoly::one());
        assert_eq!(poly_p(&[0, 0], &[1, 2]), LaurentPoly::one());
        assert_eq!(poly_p_prime(&[0, 0, 0], &[1, 2, 0]), LaurentPoly::one());
    }

    #[test]
    fn p_equals_p_prime_small() {
        for l in dims_below(&[2, 2]) {
            for m in dims_below(&[2, 2]) {
                assert_eq!(poly_p(&l, &m), poly_p_prime(&l, &m), "{:?} {:?}", l, m);
            }
        }
    }

    #[test]
    fn commutator_n2() {
        for (l, m) in [([1, 0], [1, 0]), ([0, 1], [1, 0]), ([1, 1], [1, 1]), ([0, 0], [1, 0])] {
            for r in 2..=3 {
                let (x, y) = commutator_sides(&l, &m, r).unwrap();
                assert_eq!(x, y, "{:?} {:?} r={}", l, m, r);
            }
        }
    }
}
