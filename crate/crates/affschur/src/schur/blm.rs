//! BLM spanning elements `A(j, r)` and their closed-form products with
//! generators.

use crate::laurent::LaurentPoly;
use crate::quiver_rep::{dot, PeriodicMatrix};
use crate::Error;

use super::{compositions, SchurElement};

/// `A(j, r) = Σ_{λ ∈ Λ_△(n, r - σ(A))} v^{λ·j} [A + diag(λ)]`, zero when
/// `σ(A) > r` or an off-diagonal entry is negative.
pub fn blm(a: &PeriodicMatrix, j: &[i32], r: i32) -> SchurElement {
    let n = a.n();
    let off = a.offdiag();
    if !off.is_nonneg() || off.sigma() > r {
        return SchurElement::zero();
    }
    compositions(n, r - off.sigma())
        .into_iter()
        .map(|l| (off.plus_diag(&l), LaurentPoly::v(dot(&l, j) as i32)))
        .collect()
}

fn vec_add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn unit_pair(n: usize, h: i32, a: i32, b: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[(h - 1).rem_euclid(n as i32) as usize] += a;
    v[h.rem_euclid(n as i32) as usize] += b;
    v
}

/// `overline{[[m+1 over 1]]} = 1 + v^{-2} + ... + v^{-2m}`.
fn bar_bracket1(m: i32) -> LaurentPoly {
    LaurentPoly::from_terms((0..=m).map(|k| (-2 * k, 1)))
}

/// Columns `j` with `a_{i,j} ≠ 0`.
fn row_support(a: &PeriodicMatrix, i: i32) -> Vec<i32> {
    let w = a.bandwidth();
    ((i - w)..=(i + w)).filter(|&j| a.get(i, j) != 0).collect()
}

fn row_sum(a: &PeriodicMatrix, i: i32, keep: impl Fn(i32) -> bool) -> i32 {
    row_support(a, i).into_iter().filter(|&j| keep(j)).map(|j| a.get(i, j)).sum()
}

/// `(X(j1, r) - X(j2, r)) / (1 - v^{-2})`, divided coefficientwise.
fn divided_difference(x: &PeriodicMatrix, j1: &[i32], j2: &[i32], r: i32) -> Result<SchurElement, Error> {
    let diff = blm(x, j1, r).sub(&blm(x, j2, r));
    let den = LaurentPoly::from_terms([(0, 1), (-2, -1)]);
    let mut out = SchurElement::zero();
    for (c, p) in diff.iter() {
        out.add_term(c.clone(), p.exact_div(&den)?);
    }
    Ok(out)
}

fn elem(n: usize, i: i32, j: i32) -> PeriodicMatrix {
    PeriodicMatrix::elem(n, i, j)
}

/// `E_{h,h+1}(0, r) A(j, r)` (`sign = +1`) or `E_{h+1,h}(0, r) A(j, r)`
/// (`sign = -1`) by the closed multiplication formulas.
pub fn blm_mul_simple(h: i32, sign: i32, a: &PeriodicMatrix, j: &[i32], r: i32) -> Result<SchurElement, Error> {
    let n = a.n();
    if !(1..=n as i32).contains(&h) {
        return Err(Error::PreconditionViolated(format!("h = {} outside 1..={}", h, n)));
    }
    if !a.is_zero_diag() {
        return Err(Error::WrongShape(format!("{} must have zero diagonal", a)));
    }
    let alpha = unit_pair(n, h, 1, -1);
    let beta = unit_pair(n, h, -1, -1);
    let j_alpha = vec_add(j, &alpha);
    let j_beta = vec_add(j, &beta);
    let jh = j[(h - 1) as usize];
    let jh1 = j[h.rem_euclid(n as i32) as usize];
    let mut out = SchurElement::zero();
    if sign > 0 {
        let f = |i: i32| row_sum(a, h, |c| c >= i) - row_sum(a, h + 1, |c| c > i);
        for i in row_support(a, h + 1) {
            if i == h || i == h + 1 {
                continue;
            }
            let m = a.plus(&elem(n, h, i)).minus(&elem(n, h + 1, i));
            let coeff = bar_bracket1(a.get(h, i)).shift(f(i));
            let jj = if i < h { &j_alpha } else { j };
            out.add_scaled(&blm(&m, jj, r), &coeff);
        }
        let m = a.minus(&elem(n, h + 1, h));
        let dd = divided_difference(&m, &j_alpha, &j_beta, r)?;
        out.add_scaled(&dd, &LaurentPoly::v(f(h) - jh - 1));
        let m = a.plus(&elem(n, h, h + 1));
        let coeff = bar_bracket1(a.get(h, h + 1)).shift(f(h + 1) + jh1);
        out.add_scaled(&blm(&m, j, r), &coeff);
    } else {
        // f'(i) = Σ_{j<=i} a_{h+1,j} - Σ_{j<i} a_{h,j}
        let fp = |i: i32| row_sum(a, h + 1, |c| c <= i) - row_sum(a, h, |c| c < i);
        let j_malpha: Vec<i32> = j.iter().zip(&alpha).map(|(x, y)| x - y).collect();
        for i in row_support(a, h) {
            if i == h || i == h + 1 {
                continue;
            }
            let m = a.minus(&elem(n, h, i)).plus(&elem(n, h + 1, i));
            let coeff = bar_bracket1(a.get(h + 1, i)).shift(fp(i));
            let jj = if i < h { j } else { &j_malpha };
            out.add_scaled(&blm(&m, jj, r), &coeff);
        }
        let m = a.minus(&elem(n, h, h + 1));
        let dd = divided_difference(&m, &j_malpha, &j_beta, r)?;
        out.add_scaled(&dd, &LaurentPoly::v(fp(h + 1) - jh1 - 1));
        let m = a.plus(&elem(n, h + 1, h));
        let coeff = bar_bracket1(a.get(h + 1, h)).shift(fp(h) + jh);
        out.add_scaled(&blm(&m, j, r), &coeff);
    }
    Ok(out)
}

/// `0(j, r) A(j', r) = v^{j·ro(A)} A(j + j', r)`.
pub fn blm_mul_zero(j: &[i32], a: &PeriodicMatrix, jp: &[i32], r: i32) -> SchurElement {
    blm(a, &vec_add(j, jp), r).scale(&LaurentPoly::v(dot(j, &a.offdiag().ro()) as i32))
}

/// `A(j', r) 0(j, r) = v^{j·co(A)} A(j + j', r)`.
pub fn blm_mul_zero_right(a: &PeriodicMatrix, jp: &[i32], j: &[i32], r: i32) -> SchurElement {
    blm(a, &vec_add(j, jp), r).scale(&LaurentPoly::v(dot(j, &a.offdiag().co()) as i32))
}

#[cfg(test)]
mod tests {
    use super::super::mul_oracle;
    use super::*;

    fn check_all(n: usize, r: i32, bandwidth: i32, jmax: i32) {
        let js: Vec<Vec<i32>> = (0..(2 * jmax + 1).pow(n as u32))
            .map(|mut k| {
                (0..n)
                    .map(|_| {
                        let x = k % (2 * jmax + 1);
                        k /= 2 * jmax + 1;
                        x - jmax
                    })
                    .collect()
            })
            .collect();
        let zero = vec![0; n];
        for a in super::super::theta_pm(n, r, bandwidth) {
            for j in &js {
                let x = blm(&a, j, r);
                for h in 1..=n as i32 {
                    let e = blm(&elem(n, h, h + 1), &zero, r);
                    let f = blm(&elem(n, h + 1, h), &zero, r);
                    assert_eq!(blm_mul_simple(h, 1, &a, j, r).unwrap(), mul_oracle(&e, &x).unwrap(), "E h={} A={} j={:?}", h, a, j);
                    assert_eq!(blm_mul_simple(h, -1, &a, j, r).unwrap(), mul_oracle(&f, &x).unwrap(), "F h={} A={} j={:?}", h, a, j);
                }
                let k = blm(&PeriodicMatrix::zero(n), j, r);
                assert_eq!(blm_mul_zero(j, &a, j, r), mul_oracle(&k, &x).unwrap());
                assert_eq!(blm_mul_zero_right(&a, j, j, r), mul_oracle(&x, &k).unwrap());
            }
        }
    }

    #[test]
    fn formulas_match_oracle_small() {
        check_all(2, 2, 2, 1);
    }

    #[test]
    fn e12_times_zero() {
        let (n, r) = (2, 2);
        let e = blm(&elem(n, 1, 2), &[0, 0], r);
        let z = blm(&PeriodicMatrix::zero(n), &[0, 0], r);
        assert_eq!(mul_oracle(&e, &z).unwrap(), e);
    }
}
