//! The affine quantum Schur algebra `𝒮_△(n, r)`.
//!
//! Elements are stored in the normalized basis `[A] = v^{-d_A} e_A`.
//! Products of basis elements come from the Hecke algebra: `e_A` acts on
//! `x_μ 𝓗` as `x_μ h ↦ (Σ_{w ∈ 𝔖_λ d 𝔖_μ} T_w) h`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::affine_weyl::{
    coset_intersection, double_coset_elements, is_in_d, jmath, jmath_inv, min_coset_rep, young_subgroup, AffinePerm,
};
use crate::hecke::{self, HeckeElement};
use crate::laurent::{Coeff, LaurentPoly};
use crate::lincomb::LinComb;
use crate::quiver_rep::{pget, preceq, sigma_ij, PeriodicMatrix};
use crate::Error;

mod blm;
mod generators;
mod poly;
mod presentation;

pub use blm::{blm, blm_mul_simple, blm_mul_zero, blm_mul_zero_right};
pub use generators::{tau_r, xi_gen, zeta, Generator, Sign};
pub use poly::{commutator_check, commutator_sides, poly_p, poly_p_prime};
pub use presentation::{delta_prime, presentation_suite, rho, rho_suite, Report, Status};

pub type SchurElement = LinComb<PeriodicMatrix, LaurentPoly>;

type Product = Arc<Vec<(PeriodicMatrix, LaurentPoly)>>;

fn product_cache() -> &'static Mutex<HashMap<(PeriodicMatrix, PeriodicMatrix), Product>> {
    static CACHE: OnceLock<Mutex<HashMap<(PeriodicMatrix, PeriodicMatrix), Product>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All `λ ∈ N^n` with `Σ λ_i = r`.
pub fn compositions(n: usize, r: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    if r < 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (0..=r).rev() {
        for mut rest in compositions(n - 1, r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `d_A = Σ_{1 <= i <= n; i >= k, j < l} a_{i,j} a_{k,l}`.
pub fn d_a(a: &PeriodicMatrix) -> i64 {
    let n = a.n() as i32;
    let mut total = 0i64;
    for &(i, j, x) in a.entries() {
        for &(k, l, y) in a.entries() {
            // shifts b with k + bn <= i and l + bn > j
            let hi = (i - k).div_euclid(n);
            let lo = (j - l).div_euclid(n) + 1;
            if hi >= lo {
                total += (hi - lo + 1) as i64 * x as i64 * y as i64;
            }
        }
    }
    total
}

pub fn bracket(a: &PeriodicMatrix) -> SchurElement {
    SchurElement::basis(a.clone())
}

/// `e_A = v^{d_A} [A]`.
pub fn e_basis(a: &PeriodicMatrix) -> SchurElement {
    SchurElement::term(a.clone(), LaurentPoly::v(d_a(a) as i32))
}

fn factorial(m: i32) -> u64 {
    (1..=m as u64).product()
}

fn young_order(lambda: &[i32]) -> u64 {
    lambda.iter().map(|&x| factorial(x)).product()
}

/// The two Hecke factors of `e_A e_B`: the full double coset of `A` and the
/// distinguished representatives `d_B w` realizing `e_B` on `x_μ`.
type Factors = (Vec<i32>, Vec<AffinePerm>, Vec<AffinePerm>, Vec<i32>);

fn factors(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<Option<Factors>, Error> {
    if a.n() != b.n() {
        return Err(Error::DimMismatch(format!("n = {} vs {}", a.n(), b.n())));
    }
    if a.co() != b.ro() || a.sigma() != b.sigma() {
        return Ok(None);
    }
    let (lambda, d, mu) = jmath_inv(a)?;
    let (_, d2, nu) = jmath_inv(b)?;
    let left = double_coset_elements(&lambda, &d, &mu);
    let nu2 = coset_intersection(&mu, &d2, &nu);
    let right = young_subgroup(&nu).into_iter().filter(|w| is_in_d(w, &nu2)).map(|w| d2.compose(&w)).collect();
    Ok(Some((lambda, left, right, nu)))
}

/// Groups a product `Σ c_w T_w` into `(λ, ν)` double cosets and reads off
/// the coefficient of each `e_C`, checking it is constant on the coset.
fn by_double_coset<C: Clone + PartialEq>(
    a: &PeriodicMatrix,
    b: &PeriodicMatrix,
    lambda: &[i32],
    nu: &[i32],
    prod: impl Iterator<Item = (AffinePerm, C)>,
) -> Result<Vec<(PeriodicMatrix, C)>, Error> {
    let mut cosets: HashMap<AffinePerm, Vec<(AffinePerm, C)>> = HashMap::new();
    for (w, c) in prod {
        cosets.entry(min_coset_rep(lambda, &w, nu)).or_default().push((w, c));
    }
    let mut out = Vec::with_capacity(cosets.len());
    for (dc, members) in cosets {
        let size = young_order(lambda) * young_order(nu) / young_order(&coset_intersection(lambda, &dc, nu));
        let lead = members.iter().find(|m| m.0 == dc).map(|m| m.1.clone());
        let consistent = members.len() as u64 == size
            && lead.as_ref().map_or(false, |l| members.iter().all(|m| &m.1 == l));
        if !consistent {
            return Err(Error::InconsistentCoset(format!("{} * {}", a, b)));
        }
        out.push((jmath(lambda, &dc, nu)?, lead.unwrap()));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Structure constants `p_{A,B,C}` of `e_A e_B = Σ_C p_{A,B,C} e_C`.
pub fn structure_constants(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<Vec<(PeriodicMatrix, LaurentPoly)>, Error> {
    let Some((lambda, left, right, nu)) = factors(a, b)? else {
        return Ok(Vec::new());
    };
    let left: HeckeElement = left.into_iter().map(|w| (w, LaurentPoly::one())).collect();
    let right: HeckeElement = right.into_iter().map(|w| (w, LaurentPoly::one())).collect();
    let prod = hecke::mul(&left, &right);
    by_double_coset(a, b, &lambda, &nu, prod.iter().map(|(w, c)| (*w, c.clone())))
}

/// `p_{A,B,C}(1)`, computed in the group algebra of the affine symmetric
/// group, where `T_w T_y = T_{wy}`.
pub fn structure_constants_v1(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<Vec<(PeriodicMatrix, i64)>, Error> {
    let Some((lambda, left, right, nu)) = factors(a, b)? else {
        return Ok(Vec::new());
    };
    let mut prod: HashMap<AffinePerm, i64> = HashMap::new();
    for x in &left {
        for y in &right {
            *prod.entry(x.compose(y)).or_default() += 1;
        }
    }
    by_double_coset(a, b, &lambda, &nu, prod.into_iter())
}

/// `[A][B]` expanded in the `[C]` basis, memoized.
pub fn mul_basis(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<Product, Error> {
    let key = (a.clone(), b.clone());
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let shift = -(d_a(a) + d_a(b));
    let res: Vec<(PeriodicMatrix, LaurentPoly)> = structure_constants(a, b)?
        .into_iter()
        .map(|(c, p)| {
            let k = (shift + d_a(&c)) as i32;
            (c, p.shift(k))
        })
        .collect();
    let res = Arc::new(res);
    product_cache().lock().unwrap().insert(key, res.clone());
    Ok(res)
}

fn product_cache_v1() -> &'static Mutex<HashMap<(PeriodicMatrix, PeriodicMatrix), Arc<Vec<(PeriodicMatrix, i64)>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(PeriodicMatrix, PeriodicMatrix), Arc<Vec<(PeriodicMatrix, i64)>>>>> =
        OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `[A]_1 [B]_1` in the classical Schur algebra, memoized. Since
/// `[A] = v^{-d_A} e_A`, the normalization disappears at `v = 1`.
pub fn mul_basis_v1(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<Arc<Vec<(PeriodicMatrix, i64)>>, Error> {
    let key = (a.clone(), b.clone());
    if let Some(hit) = product_cache_v1().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let res = Arc::new(structure_constants_v1(a, b)?);
    product_cache_v1().lock().unwrap().insert(key, res.clone());
    Ok(res)
}

/// The product through the Hecke algebra, for any coefficient ring.
pub fn mul_oracle<C: Coeff>(
    x: &LinComb<PeriodicMatrix, C>,
    y: &LinComb<PeriodicMatrix, C>,
) -> Result<LinComb<PeriodicMatrix, C>, Error> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            if a.co() != b.ro() {
                continue;
            }
            let cab = ca.cmul(cb);
            for (c, p) in mul_basis(a, b)?.iter() {
                out.add_term(c.clone(), C::from_laurent(p).cmul(&cab));
            }
        }
    }
    Ok(out)
}

/// Left-to-right product of several elements.
pub fn product<C: Coeff>(xs: &[&LinComb<PeriodicMatrix, C>]) -> Result<LinComb<PeriodicMatrix, C>, Error> {
    let mut it = xs.iter();
    let mut acc = match it.next() {
        Some(x) => (*x).clone(),
        None => return Err(Error::PreconditionViolated("empty product".into())),
    };
    for x in it {
        acc = mul_oracle(&acc, x)?;
    }
    Ok(acc)
}

/// `1_λ = [diag(λ)]`.
pub fn idempotent(lambda: &[i32]) -> SchurElement {
    bracket(&PeriodicMatrix::diag(lambda))
}

/// The identity `Σ_λ 1_λ` of `𝒮_△(n, r)`.
pub fn identity(n: usize, r: i32) -> SchurElement {
    compositions(n, r).into_iter().map(|l| (PeriodicMatrix::diag(&l), LaurentPoly::one())).collect()
}

/// `𝔨_i^e = 0(e·e_i, r) = Σ_λ v^{e λ_i} 1_λ`.
pub fn kk_pow(n: usize, r: i32, i: i32, e: i32) -> SchurElement {
    let mut j = vec![0; n];
    j[(i - 1).rem_euclid(n as i32) as usize] = e;
    blm(&PeriodicMatrix::zero(n), &j, r)
}

pub fn kk(n: usize, r: i32, i: i32) -> SchurElement {
    kk_pow(n, r, i, 1)
}

/// `[𝔨_i; 0 over t] = Σ_λ [λ_i over t] 1_λ`.
pub fn bracket_k_binom(n: usize, r: i32, i: i32, t: u32) -> SchurElement {
    compositions(n, r)
        .into_iter()
        .map(|l| {
            let c = crate::laurent::gauss_sym(pget(&l, i) as i64, t);
            (PeriodicMatrix::diag(&l), c)
        })
        .collect()
}

/// `𝔢_i = E_{i,i+1}(0, r)`.
pub fn e_gen(n: usize, r: i32, i: i32) -> SchurElement {
    blm(&PeriodicMatrix::elem(n, i, i + 1), &vec![0; n], r)
}

/// `𝔣_i = E_{i+1,i}(0, r)`.
pub fn f_gen(n: usize, r: i32, i: i32) -> SchurElement {
    blm(&PeriodicMatrix::elem(n, i + 1, i), &vec![0; n], r)
}

/// Hook sums `σ_i(A) = a_{i,i} + Σ_{j<i} (a_{i,j} + a_{j,i})`.
pub fn hook_sum(a: &PeriodicMatrix) -> Vec<i32> {
    let n = a.n() as i32;
    let w = a.bandwidth();
    (1..=n)
        .map(|i| a.get(i, i) + ((i - w)..i).map(|j| a.get(i, j) + a.get(j, i)).sum::<i32>())
        .collect()
}

/// `𝔭_A = A^+(0, r) 1_{σ(A)} A^-(0, r)`.
pub fn triangular_p(a: &PeriodicMatrix) -> Result<SchurElement, Error> {
    let n = a.n();
    let r = a.sigma();
    let zero = vec![0; n];
    let plus = blm(&a.upper(), &zero, r);
    let minus = blm(&a.lower(), &zero, r);
    product(&[&plus, &idempotent(&hook_sum(a)), &minus])
}

/// Checks `𝔭_A ∈ [A] + Σ_{B ⊏ A} Z[v, v^{-1}][B]` for every `A ∈ Θ_△(n, r)`
/// of the given bandwidth; returns the offending matrices.
pub fn triangular_check(n: usize, r: i32, bandwidth: i32) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    for a in theta_nr(n, r, bandwidth) {
        let p = triangular_p(&a)?;
        let lead_ok = p.coeff_ref(&a) == Some(&LaurentPoly::one());
        let rest_ok = p.iter().all(|(b, _)| *b == a || order_lt(b, &a));
        if !lead_ok || !rest_ok {
            bad.push(a.to_string());
        }
    }
    Ok(bad)
}

/// `B ⪯ A`: `σ_{i,j}(B) <= σ_{i,j}(A)` for all `i ≠ j`.
pub fn order_leq(b: &PeriodicMatrix, a: &PeriodicMatrix) -> bool {
    preceq(b, a)
}

/// `B ⊏ A`: `B ⪯ A` with some `σ_{i,j}` strictly smaller.
pub fn order_lt(b: &PeriodicMatrix, a: &PeriodicMatrix) -> bool {
    if !preceq(b, a) {
        return false;
    }
    let n = a.n() as i32;
    let w = a.bandwidth().max(b.bandwidth()) + 1;
    (1..=n).any(|i| ((i - w)..=(i + w)).any(|j| j != i && sigma_ij(b, i, j) < sigma_ij(a, i, j)))
}

/// Every `A ∈ Θ_△(n, r)` whose nonzero entries satisfy `|j - i| <= bandwidth`.
pub fn theta_nr(n: usize, r: i32, bandwidth: i32) -> Vec<PeriodicMatrix> {
    let mut positions = Vec::new();
    for i in 1..=n as i32 {
        for j in (i - bandwidth)..=(i + bandwidth) {
            positions.push((i, j));
        }
    }
    let mut out = Vec::new();
    fill(&positions, 0, r, &mut Vec::new(), n, &mut out);
    out
}

fn fill(pos: &[(i32, i32)], k: usize, left: i32, cur: &mut Vec<(i32, i32, i32)>, n: usize, out: &mut Vec<PeriodicMatrix>) {
    if k == pos.len() {
        if left == 0 {
            out.push(PeriodicMatrix::from_entries(n, cur.iter().copied()));
        }
        return;
    }
    for x in 0..=left {
        if x > 0 {
            cur.push((pos[k].0, pos[k].1, x));
        }
        fill(pos, k + 1, left - x, cur, n, out);
        if x > 0 {
            cur.pop();
        }
    }
}

/// Every `A ∈ Θ^±_△(n)` with `σ(A) <= max_sigma` and bandwidth bounded.
pub fn theta_pm(n: usize, max_sigma: i32, bandwidth: i32) -> Vec<PeriodicMatrix> {
    let mut positions = Vec::new();
    for i in 1..=n as i32 {
        for j in (i - bandwidth)..=(i + bandwidth) {
            if j != i {
                positions.push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..=max_sigma {
        fill(&positions, 0, s, &mut Vec::new(), n, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(n: usize, s: &str) -> PeriodicMatrix {
        PeriodicMatrix::parse(n, s).unwrap()
    }

    #[test]
    fn d_a_values() {
        assert_eq!(d_a(&PeriodicMatrix::diag(&[2, 1])), 0);
        // E_{1,2} + E_{2,2}, n = 2: the pairs are (i,j) = (2,2), (k,l) = (1,2)
        // shifted by one period and (1,2) with itself shifted
        let a = pm(2, "{(1,2):1,(2,2):1}");
        let mut brute = 0;
        for &(i, j, x) in a.entries() {
            for k in -10..=i {
                for l in (j + 1)..=(j + 20) {
                    brute += x as i64 * a.get(k, l) as i64;
                }
            }
        }
        assert_eq!(d_a(&a), brute);
    }

    #[test]
    fn idempotents_act() {
        let (n, r) = (2, 2);
        let a = pm(2, "{(1,2):1,(2,2):1}");
        let x = bracket(&a);
        assert_eq!(mul_oracle(&idempotent(&a.ro()), &x).unwrap(), x);
        assert_eq!(mul_oracle(&x, &idempotent(&a.co())).unwrap(), x);
        assert!(mul_oracle(&idempotent(&[0, 2]), &x).unwrap().is_zero());
        let l = idempotent(&[1, 1]);
        assert_eq!(mul_oracle(&l, &l).unwrap(), l);
        assert_eq!(mul_oracle(&identity(n, r), &x).unwrap(), x);
    }

    #[test]
    fn kk_on_idempotent() {
        let l = idempotent(&[2, 1]);
        let k = kk(2, 3, 1);
        assert_eq!(mul_oracle(&k, &l).unwrap(), l.scale(&LaurentPoly::v(2)));
    }

    #[test]
    fn oracle_associative() {
        let n = 2;
        let r = 2;
        let mats = theta_nr(n, r, 2);
        let some: Vec<_> = mats.iter().step_by(3).take(8).cloned().collect();
        for a in &some {
            for b in &some {
                for c in &some {
                    let (x, y, z) = (bracket(a), bracket(b), bracket(c));
                    let l = mul_oracle(&mul_oracle(&x, &y).unwrap(), &z).unwrap();
                    let rr = mul_oracle(&x, &mul_oracle(&y, &z).unwrap()).unwrap();
                    assert_eq!(l, rr, "{} {} {}", a, b, c);
                }
            }
        }
    }

    #[test]
    fn hook_sums() {
        let a = pm(2, "{(1,2):1,(2,1):2,(2,2):1}");
        // σ_1 = a_11 + a_10 + a_01 = 0 + 0 + a_{2,3}? a_{0,1} = a_{2,3} = 0, a_{1,0} = a_{3,2} = 0
        assert_eq!(hook_sum(&a), vec![0, 1 + 2 + 1]);
        assert_eq!(hook_sum(&a).iter().sum::<i32>(), a.sigma());
    }

    #[test]
    fn triangular_small() {
        assert!(triangular_check(2, 2, 2).unwrap().is_empty());
        let a = pm(2, "{(1,2):1,(2,2):1}");
        let p = triangular_p(&a).unwrap();
        assert_eq!(p.coeff_ref(&a), Some(&LaurentPoly::one()));
        let d = PeriodicMatrix::diag(&[1, 1]);
        assert_eq!(triangular_p(&d).unwrap(), bracket(&d));
    }

    #[test]
    fn d_splits_over_triangular_parts() {
        for a in theta_pm(2, 3, 2).into_iter().chain(theta_pm(3, 2, 2)) {
            let n = a.n() as i32;
            for lambda in compositions(a.n(), 2) {
                let mu: Vec<i32> = (1..=n).map(|i| lambda[(i - 1) as usize] + (i - 4 * n..i).map(|k| a.get(i, k)).sum::<i32>()).collect();
                let nu: Vec<i32> = (1..=n).map(|i| lambda[(i - 1) as usize] + (i - 4 * n..i).map(|k| a.get(k, i)).sum::<i32>()).collect();
                let whole = d_a(&a.plus_diag(&lambda));
                let parts = d_a(&a.upper().plus_diag(&mu)) + d_a(&a.lower().plus_diag(&nu));
                assert_eq!(whole, parts, "{} {:?}", a, lambda);
            }
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(2, 0), vec![vec![0, 0]]);
    }
}
