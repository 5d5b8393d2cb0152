//! The specialization `v = 1`: classical affine Schur algebras over `Q`,
//! the elements `A[j, r]`, their multiplication formulas and the loop
//! algebra realization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::hall::hall_poly_multi;
use crate::laurent::Coeff;
use crate::lincomb::LinComb;
use crate::quiver_rep::{dim_vector, upper_with_dim, upper_with_total, vsub, PeriodicMatrix};
use crate::schur::{compositions, mul_basis_v1, SchurElement};
use crate::Error;

pub type ClassicalSchurElement = LinComb<PeriodicMatrix, BigRational>;

/// A formal, `r`-independent combination `Σ f^{B,j} B[j]`.
pub type BlmExpansion = LinComb<(PeriodicMatrix, Vec<i32>), BigRational>;

fn q(c: i64) -> BigRational {
    BigRational::from_integer(c.into())
}

fn binom(n: i32, k: i32) -> BigRational {
    if k < 0 || k > n {
        return BigRational::zero();
    }
    q(num_integer::binomial(n as i64, k as i64))
}

fn idx(n: usize, i: i32) -> usize {
    (i - 1).rem_euclid(n as i32) as usize
}

fn shifted(j: &[i32], i: i32, by: i32) -> Vec<i32> {
    let mut out = j.to_vec();
    out[idx(j.len(), i)] += by;
    out
}

/// `μ^j = ∏ μ_i^{j_i}` with `0^0 = 1`.
pub fn monomial(mu: &[i32], j: &[i32]) -> BigInt {
    mu.iter().zip(j).map(|(&m, &e)| num_traits::pow(BigInt::from(m), e as usize)).product()
}

pub fn specialize(x: &SchurElement) -> ClassicalSchurElement {
    x.map_coeffs(BigRational::from_laurent)
}

/// The oracle product at `v = 1`, formed in the group algebra.
pub fn mul1(x: &ClassicalSchurElement, y: &ClassicalSchurElement) -> Result<ClassicalSchurElement, Error> {
    let mut out = ClassicalSchurElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            if a.co() != b.ro() {
                continue;
            }
            let cab = ca * cb;
            for (c, p) in mul_basis_v1(a, b)?.iter() {
                out.add_term(c.clone(), &cab * q(*p));
            }
        }
    }
    Ok(out)
}

/// `A[j, r] = Σ_{λ ∈ Λ_△(n, r - σ(A))} λ^j [A + diag(λ)]_1`. Only the
/// off-diagonal part of `A` is used; zero when `σ(A) > r` or some entry is
/// negative.
pub fn abr(a: &PeriodicMatrix, j: &[i32], r: i32) -> ClassicalSchurElement {
    let off = a.offdiag();
    assert!(j.iter().all(|&x| x >= 0), "A[j, r] needs j in N^n");
    if !off.is_nonneg() || off.sigma() > r {
        return ClassicalSchurElement::zero();
    }
    compositions(a.n(), r - off.sigma())
        .into_iter()
        .map(|l| {
            let c = BigRational::from_integer(monomial(&l, j));
            (off.plus_diag(&l), c)
        })
        .collect()
}

/// Evaluates a formal combination at level `r`.
pub fn eval_expansion(x: &BlmExpansion, r: i32) -> ClassicalSchurElement {
    let mut out = ClassicalSchurElement::zero();
    for ((b, j), c) in x.iter() {
        out.add_scaled(&abr(b, j, r), c);
    }
    out
}

fn push(out: &mut BlmExpansion, a: PeriodicMatrix, j: Vec<i32>, c: BigRational) {
    if a.is_nonneg() && !c.is_zero() {
        out.add_term((a, j), c);
    }
}

fn check_h(n: usize, h: i32) -> Result<(), Error> {
    if (1..=n as i32).contains(&h) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!("index {} outside 1..={}", h, n)))
    }
}

fn row_cols(a: &PeriodicMatrix, i: i32) -> Vec<i32> {
    let w = a.bandwidth();
    ((i - w)..=(i + w)).filter(|&s| a.get(i, s) != 0).collect()
}

/// Right-hand side of `0[e_t] A[j] = A[j + e_t] + (Σ_s a_{t,s}) A[j]`.
pub fn mf1_terms(t: i32, a: &PeriodicMatrix, j: &[i32]) -> Result<BlmExpansion, Error> {
    check_h(a.n(), t)?;
    let a = a.offdiag();
    let row: i32 = row_cols(&a, t).iter().map(|&s| a.get(t, s)).sum();
    let mut out = BlmExpansion::zero();
    push(&mut out, a.clone(), shifted(j, t, 1), q(1));
    push(&mut out, a, j.to_vec(), q(row as i64));
    Ok(out)
}

/// Right-hand side for `E_{h,h+ε}[0] A[j]`, `ε = ±1`.
pub fn mf2_terms(h: i32, eps: i32, a: &PeriodicMatrix, j: &[i32]) -> Result<BlmExpansion, Error> {
    let n = a.n();
    check_h(n, h)?;
    if eps != 1 && eps != -1 {
        return Err(Error::PreconditionViolated(format!("ε = {}", eps)));
    }
    let a = a.offdiag();
    let he = h + eps;
    let mut out = BlmExpansion::zero();
    for i in row_cols(&a, he) {
        if i == h || i == he {
            continue;
        }
        let m = a.plus(&PeriodicMatrix::elem(n, h, i)).minus(&PeriodicMatrix::elem(n, he, i));
        push(&mut out, m, j.to_vec(), q(a.get(h, i) as i64 + 1));
    }
    let jh = j[idx(n, h)];
    let lowered = a.minus(&PeriodicMatrix::elem(n, he, h));
    for i in 0..=jh {
        let sign = if i % 2 == 0 { q(1) } else { q(-1) };
        push(&mut out, lowered.clone(), shifted(j, h, 1 - i), sign * binom(jh, i));
    }
    let jhe = j[idx(n, he)];
    let raised = a.plus(&PeriodicMatrix::elem(n, h, he));
    let c = q(a.get(h, he) as i64 + 1);
    for i in 0..=jhe {
        push(&mut out, raised.clone(), shifted(j, he, -i), &c * binom(jhe, i));
    }
    Ok(out)
}

/// Right-hand side for `E_{h,h+mn}[0] A[j]`, `m ≠ 0`. The first sum carries
/// `[j, r]`, as the derivation from [`sbe2`] forces.
pub fn mf3_terms(h: i32, m: i32, a: &PeriodicMatrix, j: &[i32]) -> Result<BlmExpansion, Error> {
    let n = a.n();
    check_h(n, h)?;
    if m == 0 {
        return Err(Error::PreconditionViolated("m = 0".into()));
    }
    let a = a.offdiag();
    let mn = m * n as i32;
    let mut out = BlmExpansion::zero();
    for s in row_cols(&a, h) {
        if s == h || s == h - mn {
            continue;
        }
        let b = a.plus(&PeriodicMatrix::elem(n, h, s + mn)).minus(&PeriodicMatrix::elem(n, h, s));
        push(&mut out, b, j.to_vec(), q(a.get(h, s + mn) as i64 + 1));
    }
    let jh = j[idx(n, h)];
    let raised = a.plus(&PeriodicMatrix::elem(n, h, h + mn));
    let c = q(a.get(h, h + mn) as i64 + 1);
    for t in 0..=jh {
        push(&mut out, raised.clone(), shifted(j, h, -t), &c * binom(jh, t));
    }
    let lowered = a.minus(&PeriodicMatrix::elem(n, h, h - mn));
    for t in 0..=jh {
        let sign = if t % 2 == 0 { q(1) } else { q(-1) };
        push(&mut out, lowered.clone(), shifted(j, h, 1 - t), sign * binom(jh, t));
    }
    Ok(out)
}

pub fn mf1(t: i32, a: &PeriodicMatrix, j: &[i32], r: i32) -> Result<ClassicalSchurElement, Error> {
    Ok(eval_expansion(&mf1_terms(t, a, j)?, r))
}

pub fn mf2(h: i32, eps: i32, a: &PeriodicMatrix, j: &[i32], r: i32) -> Result<ClassicalSchurElement, Error> {
    Ok(eval_expansion(&mf2_terms(h, eps, a, j)?, r))
}

pub fn mf3(h: i32, m: i32, a: &PeriodicMatrix, j: &[i32], r: i32) -> Result<ClassicalSchurElement, Error> {
    Ok(eval_expansion(&mf3_terms(h, m, a, j)?, r))
}

/// `[E_{h,h+ε} + diag(λ - e_{h+ε})]_1 [B]_1` with `λ = ro(B)`.
pub fn sbe1(h: i32, eps: i32, b: &PeriodicMatrix) -> Result<ClassicalSchurElement, Error> {
    let n = b.n();
    let he = h + eps;
    let lam = b.ro();
    if lam[idx(n, he)] < 1 {
        return Err(Error::PreconditionViolated(format!("ro(B)_{} = 0", he)));
    }
    let w = b.bandwidth().max(1);
    let mut out = ClassicalSchurElement::zero();
    for i in (he - w)..=(he + w) {
        if b.get(he, i) >= 1 {
            let m = b.plus(&PeriodicMatrix::elem(n, h, i)).minus(&PeriodicMatrix::elem(n, he, i));
            out.add_term(m, q(b.get(h, i) as i64 + 1));
        }
    }
    Ok(out)
}

/// `[E_{h,h+mn} + diag(λ - e_h)]_1 [B]_1` with `λ = ro(B)`.
pub fn sbe2(h: i32, m: i32, b: &PeriodicMatrix) -> Result<ClassicalSchurElement, Error> {
    let n = b.n();
    let lam = b.ro();
    if lam[idx(n, h)] < 1 {
        return Err(Error::PreconditionViolated(format!("ro(B)_{} = 0", h)));
    }
    let mn = m * n as i32;
    let w = b.bandwidth();
    let mut out = ClassicalSchurElement::zero();
    for s in (h - w)..=(h + w) {
        if b.get(h, s) >= 1 {
            let c = b.plus(&PeriodicMatrix::elem(n, h, s + mn)).minus(&PeriodicMatrix::elem(n, h, s));
            out.add_term(c, q(b.get(h, s + mn) as i64 + 1));
        }
    }
    Ok(out)
}

/// Loop algebra elements with a computed image in `𝒮_△(n, r)_Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaGen {
    /// `E^△_{i,j}`; diagonal when `i = j`.
    E(i32, i32),
    /// `binom(E_{i,i}, t)`.
    Binom(i32, u32),
}

fn diag_sum(n: usize, r: i32, f: impl Fn(&[i32]) -> BigRational) -> ClassicalSchurElement {
    compositions(n, r).into_iter().map(|l| {
        let c = f(&l);
        (PeriodicMatrix::diag(&l), c)
    }).collect()
}

pub fn eta_gen(g: EtaGen, n: usize, r: i32) -> ClassicalSchurElement {
    match g {
        EtaGen::E(i, j) if i == j => diag_sum(n, r, |l| q(l[idx(n, i)] as i64)),
        EtaGen::E(i, j) => abr(&PeriodicMatrix::elem(n, i, j), &vec![0; n], r),
        EtaGen::Binom(i, t) => diag_sum(n, r, |l| binom(l[idx(n, i)], t as i32)),
    }
}

fn commutator1(x: &ClassicalSchurElement, y: &ClassicalSchurElement) -> Result<ClassicalSchurElement, Error> {
    Ok(mul1(x, y)?.sub(&mul1(y, x)?))
}

/// Checks `[E_{i,j}, E_{k,l}] = δ_{j̄,k̄} E_{i,l+j-k} - δ_{l̄,ī} E_{k,j+l-i}`
/// under `η_r` for `1 <= i, k <= n` and `|j - i|, |l - k| <= reach`.
/// Returns the failing quadruples.
pub fn loop_bracket_check(n: usize, r: i32, reach: i32) -> Result<Vec<String>, Error> {
    let nn = n as i32;
    let mut gens = Vec::new();
    for i in 1..=nn {
        for j in (i - reach)..=(i + reach) {
            gens.push(((i, j), eta_gen(EtaGen::E(i, j), n, r)));
        }
    }
    let mut bad = Vec::new();
    for (a, ((i, j), x)) in gens.iter().enumerate() {
        for ((k, l), y) in gens.iter().skip(a + 1) {
            let lhs = commutator1(x, y)?;
            let mut rhs = ClassicalSchurElement::zero();
            if (j - k).rem_euclid(nn) == 0 {
                rhs.add_assign(&eta_gen(EtaGen::E(*i, l + j - k), n, r));
            }
            if (l - i).rem_euclid(nn) == 0 {
                rhs = rhs.sub(&eta_gen(EtaGen::E(*k, j + l - i), n, r));
            }
            if lhs != rhs {
                bad.push(format!("[E({},{}), E({},{})] at n={} r={}", i, j, k, l, n, r));
            }
        }
    }
    Ok(bad)
}

/// Generators `g` of the realization check: `0[e_t]` or `E^△_{i,j}[0]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalGen {
    Zero(i32),
    E(i32, i32),
}

impl ClassicalGen {
    pub fn at(self, n: usize, r: i32) -> ClassicalSchurElement {
        match self {
            ClassicalGen::Zero(t) => abr(&PeriodicMatrix::zero(n), &shifted(&vec![0; n], t, 1), r),
            ClassicalGen::E(i, j) => abr(&PeriodicMatrix::elem(n, i, j), &vec![0; n], r),
        }
    }
}

/// Closed-form structure constants of `g · A[j]`.
pub fn expand(g: ClassicalGen, a: &PeriodicMatrix, j: &[i32]) -> Result<BlmExpansion, Error> {
    let n = a.n() as i32;
    match g {
        ClassicalGen::Zero(t) => mf1_terms(t, a, j),
        ClassicalGen::E(i, k) => {
            let h = (i - 1).rem_euclid(n) + 1;
            let d = k - i;
            if d == 1 || d == -1 {
                mf2_terms(h, d, a, j)
            } else if d != 0 && d % n == 0 {
                mf3_terms(h, d / n, a, j)
            } else {
                Err(Error::PreconditionViolated(format!("no closed form for E({},{})", i, k)))
            }
        }
    }
}

/// Exact Gaussian elimination; returns a solution of `m x = b` with free
/// variables set to zero, or `None` when inconsistent.
fn solve(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let prow = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if rows[rank..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][cols].clone();
    }
    Some(x)
}

fn exponents(n: usize, max: i32) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = (0..=max).flat_map(|d| compositions(n, d)).collect();
    // prefer exponents with a zero last entry as pivots
    out.sort_by_key(|e| (e[n - 1], e.iter().sum::<i32>()));
    out
}

/// Fits `Σ_B Σ_{|j'| <= degree} f^{B,j'} B[j', r]` to the given family of
/// elements simultaneously for all `r`. Errors name the first `(B, r)` at
/// which no `r`-independent constants exist.
pub fn fit_constants(family: &[(i32, ClassicalSchurElement)], degree: i32) -> Result<BlmExpansion, (PeriodicMatrix, i32)> {
    use std::collections::BTreeMap;
    let Some((_, first)) = family.first() else {
        return Ok(BlmExpansion::zero());
    };
    let Some(n) = first.keys().next().map(|b| b.n()).or_else(|| family.iter().find_map(|(_, x)| x.keys().next().map(|b| b.n())))
    else {
        return Ok(BlmExpansion::zero());
    };
    let mut supports: BTreeMap<PeriodicMatrix, ()> = BTreeMap::new();
    for (_, x) in family {
        for b in x.keys() {
            supports.insert(b.offdiag(), ());
        }
    }
    let js = exponents(n, degree);
    let mut out = BlmExpansion::zero();
    for off in supports.keys() {
        let mut rows = Vec::new();
        for (r, x) in family {
            if off.sigma() > *r {
                continue;
            }
            for mu in compositions(n, r - off.sigma()) {
                let mut row: Vec<BigRational> = js.iter().map(|j| BigRational::from_integer(monomial(&mu, j))).collect();
                row.push(x.get(&off.plus_diag(&mu)));
                rows.push(row);
            }
            if solve(rows.clone(), js.len()).is_none() {
                return Err((off.clone(), *r));
            }
        }
        let sol = solve(rows, js.len()).expect("checked above");
        for (j, c) in js.iter().zip(sol) {
            if !c.is_zero() {
                out.add_term((off.clone(), j.clone()), c);
            }
        }
    }
    Ok(out)
}

/// Computes `η_r(g) A[j, r]` through `mul1` for every `r` in `r_list` and
/// checks that the products come from one family of constants: a joint fit
/// must exist, and the closed-form constants must reproduce every product.
/// Returns the offending `(B, j', r)` descriptions.
pub fn realization_check(g: ClassicalGen, a: &PeriodicMatrix, j: &[i32], r_list: &[i32]) -> Result<Vec<String>, Error> {
    let n = a.n();
    let floor = a.offdiag().sigma() + j.iter().sum::<i32>() + 1;
    if r_list.len() < 3 || r_list.iter().any(|&r| r < floor) {
        return Err(Error::PreconditionViolated(format!("need at least 3 levels r >= {}", floor)));
    }
    let mut family = Vec::new();
    for &r in r_list {
        family.push((r, mul1(&g.at(n, r), &abr(a, j, r))?));
    }
    let mut bad = Vec::new();
    if let Err((b, r)) = fit_constants(&family, j.iter().sum::<i32>() + 1) {
        bad.push(format!("{:?}·{}{:?}: no r-independent constants for {} at r={}", g, a, j, b, r));
    }
    let closed = expand(g, a, j)?;
    for (r, prod) in &family {
        let diff = eval_expansion(&closed, *r).sub(prod);
        for (m, _) in diff.iter() {
            let off = m.offdiag();
            let jp: Vec<String> =
                closed.keys().filter(|(b, _)| *b == off).map(|(_, jp)| format!("{:?}", jp)).collect();
            bad.push(format!("{:?}·{}{:?}: [{}] at r={} (j' in {{{}}})", g, a, j, m, r, jp.join(", ")));
        }
    }
    Ok(bad)
}

/// The constants `f^{B,j'}` of `g · A[j]` as CSV rows `B,j',f`.
pub fn constants_csv(g: ClassicalGen, a: &PeriodicMatrix, j: &[i32]) -> Result<String, Error> {
    let mut s = String::from("B,j,f\n");
    for ((b, jp), c) in expand(g, a, j)?.iter() {
        let jt: Vec<String> = jp.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("\"{}\",\"{}\",{}\n", b.to_text(), jt.join(" "), c));
    }
    Ok(s)
}

/// Checks that `{A[j, r] : j_n = 0, σ(A) + σ(j) <= r}` is linearly
/// independent, one block per off-diagonal part.
pub fn basis_independence_check(n: usize, r: i32, bandwidth: i32) -> bool {
    crate::schur::theta_pm(n, r, bandwidth).iter().all(|a| {
        let k = r - a.sigma();
        let mus = compositions(n, k);
        let js: Vec<Vec<i32>> = (0..=k).flat_map(|d| compositions(n, d)).filter(|j| j[n - 1] == 0).collect();
        // rows = j, columns = μ; full row rank iff the A[j, r] are independent
        let rows: Vec<Vec<BigRational>> = js
            .iter()
            .map(|j| {
                let mut row: Vec<BigRational> = mus.iter().map(|mu| BigRational::from_integer(monomial(mu, j))).collect();
                row.push(BigRational::zero());
                row
            })
            .collect();
        rank(rows, mus.len()) == js.len()
    })
}

fn rank(mut rows: Vec<Vec<BigRational>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let prow = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &prow[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn factorial(k: i32) -> BigInt {
    (1..=k as i64).map(BigInt::from).product()
}

/// `∏_{i<j} b_{i,j}! / (a^{(1)}_{i,j}! ... a^{(t)}_{i,j}!)`.
fn multinomial_weight(b: &PeriodicMatrix, parts: &[PeriodicMatrix]) -> BigRational {
    let mut num = BigInt::one();
    for &(_, _, x) in b.entries() {
        num *= factorial(x);
    }
    let mut den = BigInt::one();
    for p in parts {
        for &(_, _, x) in p.entries() {
            den *= factorial(x);
        }
    }
    BigRational::new(num, den)
}

fn splits(d: &[i32], parts: usize) -> Vec<Vec<PeriodicMatrix>> {
    if parts == 1 {
        return upper_with_dim(d).into_iter().map(|a| vec![a]).collect();
    }
    let mut out = Vec::new();
    for sub in crate::quiver_rep::dims_below(d) {
        let rest = vsub(d, &sub);
        for a in upper_with_dim(&sub) {
            if a.is_zero() {
                continue;
            }
            for mut tail in splits(&rest, parts - 1) {
                if tail.iter().any(|x| x.is_zero()) {
                    continue;
                }
                tail.insert(0, a.clone());
                out.push(tail);
            }
        }
    }
    out
}

/// The values of Hall polynomials at `v = 1` for `t ∈ {2, 3}` factors and
/// total dimension at most `max_dim`: zero when `σ(B) >= Σ σ(A_k)` and
/// `B ≠ Σ A_k`, the multinomial weight when `B = Σ A_k`.
pub fn hall_at_one_check(n: usize, max_dim: i32) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    for total in 1..=max_dim {
        for b in upper_with_total(n, total) {
            let d = dim_vector(&b)?;
            for t in 2..=3usize {
                for parts in splits(&d, t) {
                    let sum = parts.iter().fold(PeriodicMatrix::zero(n), |acc, p| acc.plus(p));
                    let sig: i32 = parts.iter().map(|p| p.sigma()).sum();
                    let at1 = BigRational::from_integer(hall_poly_multi(&b, &parts)?.specialize_v1());
                    if b == sum {
                        let w = multinomial_weight(&b, &parts);
                        if at1 != w {
                            bad.push(format!("φ^{}_{:?}(1) = {} != {}", b, parts, at1, w));
                        }
                    } else if b.sigma() >= sig && !at1.is_zero() {
                        bad.push(format!("φ^{}_{:?}(1) = {} != 0", b, parts, at1));
                    }
                }
            }
        }
    }
    Ok(bad)
}

/// Totals for the exhaustive sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Compares `mf1`/`mf2`/`mf3` with `mul1` for all `A ∈ Θ^±` of bandwidth at
/// most `bandwidth` with `σ(A) <= r`, all `j` with entries at most `max_j`,
/// and shifts `|m| <= max_m`. Products are formed once per basis element and
/// reused across `j`.
pub fn mf_sweep(n: usize, r: i32, bandwidth: i32, max_j: i32, max_m: i32) -> Result<SweepStats, Error> {
    let nn = n as i32;
    let mut gens = Vec::new();
    for h in 1..=nn {
        gens.push(ClassicalGen::Zero(h));
        gens.push(ClassicalGen::E(h, h + 1));
        gens.push(ClassicalGen::E(h, h - 1));
        for m in (-max_m..=max_m).filter(|&m| m != 0) {
            gens.push(ClassicalGen::E(h, h + m * nn));
        }
    }
    let js: Vec<Vec<i32>> = cartesian(n, max_j);
    let mut stats = SweepStats::default();
    for g in gens {
        let gr = g.at(n, r);
        for a in crate::schur::theta_pm(n, r, bandwidth) {
            let mus = compositions(n, r - a.sigma());
            let prods: Vec<ClassicalSchurElement> = mus
                .iter()
                .map(|mu| mul1(&gr, &ClassicalSchurElement::basis(a.plus_diag(mu))))
                .collect::<Result<_, _>>()?;
            for j in &js {
                let mut lhs = ClassicalSchurElement::zero();
                for (mu, p) in mus.iter().zip(&prods) {
                    lhs.add_scaled(p, &BigRational::from_integer(monomial(mu, j)));
                }
                let rhs = eval_expansion(&expand(g, &a, j)?, r);
                stats.checked += 1;
                if lhs != rhs {
                    stats.failures.push(format!("{:?}·{}{:?} at n={} r={}", g, a, j, n, r));
                }
            }
        }
    }
    Ok(stats)
}

fn cartesian(n: usize, max: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i32>| (0..=max).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Compares `sbe1`/`sbe2` with `mul1` on every `B ∈ Θ_△(n, r)` of bandwidth
/// at most `bandwidth` for which the product is defined.
pub fn sbe_sweep(n: usize, r: i32, bandwidth: i32, max_m: i32) -> Result<SweepStats, Error> {
    let nn = n as i32;
    let mut stats = SweepStats::default();
    for b in crate::schur::theta_nr(n, r, bandwidth) {
        let lam = b.ro();
        for h in 1..=nn {
            for eps in [1, -1] {
                let he = h + eps;
                if lam[idx(n, he)] < 1 {
                    continue;
                }
                let g = PeriodicMatrix::elem(n, h, he).plus_diag(&shifted(&lam, he, -1));
                let lhs = mul1(&ClassicalSchurElement::basis(g), &ClassicalSchurElement::basis(b.clone()))?;
                stats.checked += 1;
                if lhs != sbe1(h, eps, &b)? {
                    stats.failures.push(format!("sbe1({},{}) on {}", h, eps, b));
                }
            }
            if lam[idx(n, h)] < 1 {
                continue;
            }
            for m in (-max_m..=max_m).filter(|&m| m != 0) {
                let g = PeriodicMatrix::elem(n, h, h + m * nn).plus_diag(&shifted(&lam, h, -1));
                let lhs = mul1(&ClassicalSchurElement::basis(g), &ClassicalSchurElement::basis(b.clone()))?;
                stats.checked += 1;
                if lhs != sbe2(h, m, &b)? {
                    stats.failures.push(format!("sbe2({},{}) on {}", h, m, b));
                }
            }
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{blm, bracket, e_basis, mul_oracle};

    fn pm(n: usize, s: &str) -> PeriodicMatrix {
        PeriodicMatrix::parse(n, s).unwrap()
    }

    #[test]
    fn abr_edges() {
        let a = pm(2, "{(1,2):1,(2,4):1}");
        // σ(A) = r: only j = 0 survives
        assert_eq!(abr(&a, &[0, 0], 2), ClassicalSchurElement::basis(a.clone()));
        assert!(abr(&a, &[1, 0], 2).is_zero());
        assert!(abr(&a, &[0, 0], 1).is_zero());
        for r in 2..=4 {
            assert_eq!(abr(&a, &[0, 0], r), specialize(&blm(&a, &[0, 0], r)));
        }
        // 0[e_1, 2] = Σ λ_1 [diag λ]
        let z = abr(&PeriodicMatrix::zero(2), &[1, 0], 2);
        assert_eq!(z.get(&PeriodicMatrix::diag(&[2, 0])), q(2));
        assert!(z.coeff_ref(&PeriodicMatrix::diag(&[0, 2])).is_none());
    }

    #[test]
    fn specialize_is_multiplicative() {
        let xs = [pm(2, "{(1,2):1,(2,2):1}"), pm(2, "{(1,1):1,(2,1):1}"), pm(2, "{(1,3):1,(2,2):1}")];
        for x in &xs {
            for y in &xs {
                let lhs = specialize(&mul_oracle(&e_basis(x), &bracket(y)).unwrap());
                let rhs = mul1(&specialize(&e_basis(x)), &specialize(&bracket(y))).unwrap();
                assert_eq!(lhs, rhs, "{} {}", x, y);
            }
        }
    }

    #[test]
    fn group_algebra_route_matches_specialized_oracle() {
        for (n, r) in [(2, 2), (2, 3), (3, 2)] {
            let basis = crate::schur::theta_nr(n, r, 2);
            for a in &basis {
                for b in basis.iter().filter(|b| b.ro() == a.co()) {
                    let quantum = specialize(&mul_oracle(&bracket(a), &bracket(b)).unwrap());
                    let classical =
                        mul1(&ClassicalSchurElement::basis(a.clone()), &ClassicalSchurElement::basis(b.clone())).unwrap();
                    assert_eq!(quantum, classical, "{} {}", a, b);
                }
            }
        }
    }

    #[test]
    fn sbe_matches_oracle_small() {
        for (n, r) in [(2, 2), (2, 3), (3, 2)] {
            let s = sbe_sweep(n, r, 2 * n as i32, 1).unwrap();
            assert!(s.failures.is_empty(), "{:?}", s.failures);
            assert!(s.checked > 0);
        }
    }

    #[test]
    fn mf_matches_oracle_small() {
        let s = mf_sweep(2, 2, 2, 2, 1).unwrap();
        assert!(s.failures.is_empty(), "{:?}", &s.failures[..s.failures.len().min(5)]);
    }

    #[test]
    fn printed_mf3_first_sum_fails() {
        // with [0, r] in place of [j, r] in the first sum the formula breaks
        let a = pm(2, "{(1,2):1}");
        let j = [1, 0];
        let r = 3;
        let good = mf3(1, 1, &a, &j, r).unwrap();
        let mut printed = good.clone();
        let moved = a.plus(&PeriodicMatrix::elem(2, 1, 4)).minus(&PeriodicMatrix::elem(2, 1, 2));
        printed = printed.sub(&abr(&moved, &j, r)).add(&abr(&moved, &[0, 0], r));
        let oracle = mul1(&ClassicalGen::E(1, 3).at(2, r), &abr(&a, &j, r)).unwrap();
        assert_eq!(good, oracle);
        assert_ne!(printed, oracle);
    }

    #[test]
    fn eta_images() {
        let x = eta_gen(EtaGen::Binom(1, 0), 2, 3);
        assert_eq!(x, specialize(&crate::schur::identity(2, 3)));
        let e11 = eta_gen(EtaGen::E(1, 1), 2, 2);
        assert_eq!(e11.get(&PeriodicMatrix::diag(&[1, 1])), q(1));
        assert_eq!(e11.get(&PeriodicMatrix::diag(&[2, 0])), q(2));
        let b2 = eta_gen(EtaGen::Binom(1, 2), 2, 3);
        assert_eq!(b2.get(&PeriodicMatrix::diag(&[3, 0])), q(3));
        assert!(loop_bracket_check(2, 2, 2).unwrap().is_empty());
    }

    #[test]
    fn realization_small() {
        let a = pm(2, "{(1,2):1}");
        for g in [ClassicalGen::Zero(1), ClassicalGen::E(1, 2), ClassicalGen::E(2, 1), ClassicalGen::E(1, 3), ClassicalGen::E(2, 0)] {
            let bad = realization_check(g, &a, &[1, 0], &[3, 4, 5]).unwrap();
            assert!(bad.is_empty(), "{:?}", bad);
        }
        assert!(realization_check(ClassicalGen::Zero(1), &a, &[1, 0], &[2, 3, 4]).is_err());
    }

    #[test]
    fn fit_detects_r_dependence() {
        // constants that drift with r cannot be fitted
        let a = PeriodicMatrix::zero(2);
        let family: Vec<(i32, ClassicalSchurElement)> =
            (1..=3).map(|r| (r, abr(&a, &[0, 0], r).scale(&q(r as i64 * r as i64 * r as i64)))).collect();
        assert!(fit_constants(&family, 0).is_err());
        let family: Vec<(i32, ClassicalSchurElement)> = (1..=3).map(|r| (r, abr(&a, &[1, 0], r))).collect();
        let fit = fit_constants(&family, 1).unwrap();
        assert_eq!(fit, BlmExpansion::term((a, vec![1, 0]), q(1)));
    }

    #[test]
    fn classical_basis_independent() {
        for n in 2..=3 {
            for r in 1..=3 {
                assert!(basis_independence_check(n, r, 2));
            }
        }
    }

    #[test]
    fn hall_values_at_one() {
        let bad = hall_at_one_check(2, 3).unwrap();
        assert!(bad.is_empty(), "{:?}", bad);
    }
}
