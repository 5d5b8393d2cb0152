//! The generic Ringel–Hall algebra of the cyclic quiver.
//!
//! Hall polynomials are obtained by counting submodules of explicit modules
//! over small prime fields and interpolating in `q = v^2`. Everything above
//! that (products, monomials, central elements, Hopf structure) is built on
//! the memoised polynomial tables.

pub mod central;
pub mod fq;
pub mod hopf;
pub mod interp;

use std::collections::HashMap;
use std::sync::atomic::{AtomicI32, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::laurent::{Coeff, LaurentPoly};
use crate::lincomb::LinComb;
use crate::quiver_rep::{
    dim_vector, end_dim, euler_form, is_aperiodic, preceq, total_dim, upper_with_dim, vadd, vsub, DimVector,
    PeriodicMatrix,
};
use crate::Error;

use fq::FqModule;

/// Elements of the Hall algebra in the basis `u_A`.
pub type HallElement = LinComb<PeriodicMatrix, LaurentPoly>;

const DEFAULT_CAP: i32 = 5;
const MAX_CAP: i32 = 6;
const DEFAULT_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

static CAP: AtomicI32 = AtomicI32::new(0);
static PRIMES: RwLock<Option<Vec<u32>>> = RwLock::new(None);

/// Largest module dimension `𝔡` for which counting is attempted. Set by
/// [`set_desk_cap`], else `AFFSCHUR_CAP`, else 5; never above 6.
pub fn desk_cap() -> i32 {
    let c = CAP.load(Ordering::Relaxed);
    let c = if c > 0 {
        c
    } else {
        std::env::var("AFFSCHUR_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
    };
    c.clamp(1, MAX_CAP)
}

pub fn set_desk_cap(c: i32) {
    CAP.store(c.clamp(1, MAX_CAP), Ordering::Relaxed);
}

/// Overrides the primes used as interpolation nodes (in order).
pub fn set_sample_primes(primes: Option<Vec<u32>>) {
    *PRIMES.write().unwrap() = primes;
    tables().lock().unwrap().clear();
}

pub fn sample_primes() -> Vec<u32> {
    PRIMES.read().unwrap().clone().unwrap_or_else(|| DEFAULT_PRIMES.to_vec())
}

fn check_cap(c: &PeriodicMatrix) -> Result<(), Error> {
    let d = total_dim(c)?;
    if d > desk_cap() {
        return Err(Error::BoundExceeded(format!("dim M({}) = {} exceeds cap {}", c, d, desk_cap())));
    }
    Ok(())
}

type Counts = Arc<HashMap<(PeriodicMatrix, PeriodicMatrix), u64>>;
type Table = Arc<HashMap<(PeriodicMatrix, PeriodicMatrix), LaurentPoly>>;

fn counts() -> &'static Mutex<HashMap<(PeriodicMatrix, DimVector, u32), Counts>> {
    static M: OnceLock<Mutex<HashMap<(PeriodicMatrix, DimVector, u32), Counts>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn tables() -> &'static Mutex<HashMap<(PeriodicMatrix, DimVector), Table>> {
    static M: OnceLock<Mutex<HashMap<(PeriodicMatrix, DimVector), Table>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// Submodule types of `M(C)` over `F_p` with dimension vector `sub`, keyed by
/// `(N, M(C)/N)`.
fn submodule_counts(c: &PeriodicMatrix, sub: &[i32], p: u32) -> Result<Counts, Error> {
    let key = (c.clone(), sub.to_vec(), p);
    if let Some(t) = counts().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let m = FqModule::new(c, p)?;
    let t = Arc::new(m.classify_submodules(sub));
    counts().lock().unwrap().insert(key, t.clone());
    Ok(t)
}

/// Number of filtrations `M(C) = M_0 ⊇ M_1 ⊇ ... ⊇ M_m = 0` over `F_p`
/// with `M_{k-1}/M_k ≅ M(parts[k-1])`.
pub fn count_filtrations(c: &PeriodicMatrix, parts: &[PeriodicMatrix], p: u32) -> Result<u64, Error> {
    check_cap(c)?;
    let dc = dim_vector(c)?;
    let mut total = vec![0; c.n()];
    for a in parts {
        total = vadd(&total, &dim_vector(a)?);
    }
    if total != dc {
        return Err(Error::DimMismatch(format!("parts do not add up to dim of {}", c)));
    }
    match parts {
        [] => Ok(u64::from(c.is_zero())),
        [a] => Ok(u64::from(a == c)),
        [a, rest @ ..] => {
            let sub = vsub(&dc, &dim_vector(a)?);
            let mut out = 0;
            for ((nsub, quo), k) in submodule_counts(c, &sub, p)?.iter() {
                if quo == a {
                    out += k * count_filtrations(nsub, rest, p)?;
                }
            }
            Ok(out)
        }
    }
}

/// Upper bound on the `q`-degree of any `φ^C_{A,B}` with `𝐝(B) = b`: the
/// number of graded subspaces is `∏ [[c_i over b_i]]`.
fn degree_bound(c: &[i32], b: &[i32]) -> usize {
    c.iter().zip(b).map(|(&ci, &bi)| (bi * (ci - bi)) as usize).sum()
}

/// All Hall polynomials `φ^C_{A,B}` with `𝐝(B) = sub`, keyed by `(A, B)`.
pub fn hall_table(c: &PeriodicMatrix, sub: &[i32]) -> Result<Table, Error> {
    let key = (c.clone(), sub.to_vec());
    if let Some(t) = tables().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    check_cap(c)?;
    let dc = dim_vector(c)?;
    if sub.iter().zip(&dc).any(|(&b, &d)| b < 0 || b > d) {
        let t: Table = Arc::new(HashMap::new());
        tables().lock().unwrap().insert(key, t.clone());
        return Ok(t);
    }
    let deg = degree_bound(&dc, sub);
    let primes = sample_primes();
    let needed = deg + 3;
    if primes.len() < needed {
        return Err(Error::BoundExceeded(format!("{} sample primes needed, {} given", needed, primes.len())));
    }
    let primes = &primes[..needed];
    let samples: Vec<Counts> = primes.iter().map(|&p| submodule_counts(c, sub, p)).collect::<Result<_, _>>()?;
    let mut keys: Vec<&(PeriodicMatrix, PeriodicMatrix)> = samples.iter().flat_map(|s| s.keys()).collect();
    keys.sort();
    keys.dedup();
    let xs: Vec<i64> = primes.iter().map(|&p| p as i64).collect();
    let mut out = HashMap::new();
    for k in keys {
        let ys: Vec<i64> = samples.iter().map(|s| s.get(k).copied().unwrap_or(0) as i64).collect();
        let fit = interp::integral(&interp::interpolate(&xs[..deg + 1], &ys[..deg + 1])).ok_or_else(|| {
            Error::InterpolationUnstable(format!("non-integral fit for φ^{}_{{{},{}}}", c, k.1, k.0))
        })?;
        for t in deg + 1..needed {
            if interp::eval(&fit, xs[t]) != BigInt::from(ys[t]) {
                return Err(Error::InterpolationUnstable(format!(
                    "φ^{}_{{{},{}}} disagrees at q = {}",
                    c, k.1, k.0, xs[t]
                )));
            }
        }
        let poly = LaurentPoly::from_terms(fit.into_iter().enumerate().map(|(e, c)| (e as i32, c))).subs_power(2);
        out.insert((k.1.clone(), k.0.clone()), poly);
    }
    let t: Table = Arc::new(out);
    tables().lock().unwrap().insert(key, t.clone());
    Ok(t)
}

/// `φ^C_{A,B}` as a polynomial in `v^2`: submodules `N ≅ M(B)` of `M(C)` with
/// quotient `≅ M(A)`.
pub fn hall_poly(c: &PeriodicMatrix, a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<LaurentPoly, Error> {
    let (da, db, dc) = (dim_vector(a)?, dim_vector(b)?, dim_vector(c)?);
    if vadd(&da, &db) != dc {
        return Err(Error::DimMismatch(format!("dim {} + dim {} != dim {}", a, b, c)));
    }
    if b.is_zero() {
        return Ok(if a == c { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    if a.is_zero() {
        return Ok(if b == c { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    let t = hall_table(c, &db)?;
    Ok(t.get(&(a.clone(), b.clone())).cloned().unwrap_or_default())
}

fn multi_cache() -> &'static Mutex<HashMap<(PeriodicMatrix, Vec<PeriodicMatrix>), LaurentPoly>> {
    static M: OnceLock<Mutex<HashMap<(PeriodicMatrix, Vec<PeriodicMatrix>), LaurentPoly>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `φ^C_{A_1,...,A_m} = Σ_D φ^C_{A_1,D} φ^D_{A_2,...,A_m}`.
pub fn hall_poly_multi(c: &PeriodicMatrix, parts: &[PeriodicMatrix]) -> Result<LaurentPoly, Error> {
    match parts {
        [] => return Ok(if c.is_zero() { LaurentPoly::one() } else { LaurentPoly::zero() }),
        [a] => return Ok(if a == c { LaurentPoly::one() } else { LaurentPoly::zero() }),
        [a, b] => return hall_poly(c, a, b),
        _ => {}
    }
    let key = (c.clone(), parts.to_vec());
    if let Some(x) = multi_cache().lock().unwrap().get(&key) {
        return Ok(x.clone());
    }
    let dc = dim_vector(c)?;
    let da = dim_vector(&parts[0])?;
    let rest_dim = vsub(&dc, &da);
    let mut out = LaurentPoly::zero();
    if rest_dim.iter().all(|&x| x >= 0) {
        for d in upper_with_dim(&rest_dim) {
            let first = hall_poly(c, &parts[0], &d)?;
            if first.is_zero() {
                continue;
            }
            out += first * hall_poly_multi(&d, &parts[1..])?;
        }
    }
    multi_cache().lock().unwrap().insert(key, out.clone());
    Ok(out)
}

fn product_cache() -> &'static Mutex<HashMap<(PeriodicMatrix, PeriodicMatrix), Arc<Vec<(PeriodicMatrix, LaurentPoly)>>>> {
    static M: OnceLock<Mutex<HashMap<(PeriodicMatrix, PeriodicMatrix), Arc<Vec<(PeriodicMatrix, LaurentPoly)>>>>> =
        OnceLock::new();
    M.get_or_init(Default::default)
}

/// `u_A u_B = v^{⟨𝐝A,𝐝B⟩} Σ_C φ^C_{A,B} u_C`, as a list of `(C, coefficient)`.
pub fn mul_basis(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<Arc<Vec<(PeriodicMatrix, LaurentPoly)>>, Error> {
    let key = (a.clone(), b.clone());
    if let Some(x) = product_cache().lock().unwrap().get(&key) {
        return Ok(x.clone());
    }
    let (da, db) = (dim_vector(a)?, dim_vector(b)?);
    let twist = euler_form(&da, &db) as i32;
    let mut out = Vec::new();
    if a.is_zero() || b.is_zero() {
        out.push((a.plus(b), LaurentPoly::one()));
    } else {
        for c in upper_with_dim(&vadd(&da, &db)) {
            let phi = hall_poly(&c, a, b)?;
            if !phi.is_zero() {
                out.push((c, phi.shift(twist)));
            }
        }
    }
    let out = Arc::new(out);
    product_cache().lock().unwrap().insert(key, out.clone());
    Ok(out)
}

pub fn u(a: &PeriodicMatrix) -> HallElement {
    HallElement::basis(a.clone())
}

pub fn one(n: usize) -> HallElement {
    u(&PeriodicMatrix::zero(n))
}

/// The simple generator `u_i = u_{S_i}`.
pub fn u_simple(n: usize, i: i32) -> HallElement {
    u(&PeriodicMatrix::elem(n, i, i + 1))
}

/// `d'_A = dim End(M(A)) - dim M(A)`.
pub fn d_prime(a: &PeriodicMatrix) -> Result<i32, Error> {
    Ok(end_dim(a)? - total_dim(a)?)
}

/// `ũ_A = v^{d'_A} u_A`.
pub fn u_tilde(a: &PeriodicMatrix) -> Result<HallElement, Error> {
    Ok(HallElement::term(a.clone(), LaurentPoly::v(d_prime(a)?)))
}

/// Bilinear extension of the Hall product, over any coefficient ring.
pub fn hall_mul<C: Coeff>(
    x: &LinComb<PeriodicMatrix, C>,
    y: &LinComb<PeriodicMatrix, C>,
) -> Result<LinComb<PeriodicMatrix, C>, Error> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let s = ca.cmul(cb);
            for (c, k) in mul_basis(a, b)?.iter() {
                out.add_term(c.clone(), C::from_laurent(k).cmul(&s));
            }
        }
    }
    Ok(out)
}

/// Product of a list of elements, left to right.
pub fn hall_product<C: Coeff>(n: usize, xs: &[LinComb<PeriodicMatrix, C>]) -> Result<LinComb<PeriodicMatrix, C>, Error> {
    let mut acc = LinComb::basis(PeriodicMatrix::zero(n));
    for x in xs {
        acc = hall_mul(&acc, x)?;
    }
    Ok(acc)
}

/// `[x, y] = xy - yx`.
pub fn commutator<C: Coeff>(
    x: &LinComb<PeriodicMatrix, C>,
    y: &LinComb<PeriodicMatrix, C>,
) -> Result<LinComb<PeriodicMatrix, C>, Error> {
    Ok(hall_mul(x, y)?.sub(&hall_mul(y, x)?))
}

/// Divided power `u_i^{(m)} = v^{m(m-1)} u_{[mS_i]}`.
pub fn divided_power(n: usize, i: i32, m: i32) -> HallElement {
    if m == 0 {
        return one(n);
    }
    HallElement::term(PeriodicMatrix::elem(n, i, i + 1).scaled(m), LaurentPoly::v(m * (m - 1)))
}

/// The generic extension `A * B`: the unique maximal `C` (for `⪯`) with
/// `φ^C_{A,B} ≠ 0`.
pub fn generic_ext(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<PeriodicMatrix, Error> {
    let terms = mul_basis(a, b)?;
    let cands: Vec<&PeriodicMatrix> = terms.iter().map(|(c, _)| c).collect();
    let maxima: Vec<&PeriodicMatrix> =
        cands.iter().copied().filter(|c| !cands.iter().any(|d| d != c && preceq(c, d))).collect();
    match maxima.as_slice() {
        [m] if cands.iter().all(|c| preceq(c, m)) => Ok((*m).clone()),
        _ => Err(Error::InternalInconsistency(format!("generic extension of {} by {} is not unique", a, b))),
    }
}

/// Loewy length `ℓ_A = max{j - i : a_{i,j} ≠ 0}`.
pub fn loewy_length(a: &PeriodicMatrix) -> i32 {
    a.entries().iter().map(|&(i, j, _)| j - i).max().unwrap_or(0)
}

/// The word `i_1^{t_1} ... i_m^{t_m}` attached to an aperiodic matrix.
pub fn monomial_word(a: &PeriodicMatrix) -> Result<Vec<(i32, i32)>, Error> {
    if !a.entries().iter().all(|&(i, j, c)| j > i && c > 0) {
        return Err(Error::WrongShape(format!("{} is not in Θ^+", a)));
    }
    if !is_aperiodic(a) {
        return Err(Error::NotAperiodic);
    }
    let n = a.n() as i32;
    let mut cur = a.clone();
    let mut word = Vec::new();
    while !cur.is_zero() {
        let l = loewy_length(&cur);
        let i1 = (1..=n)
            .find(|&i| cur.get(i, i + l) != 0 && cur.get(i + 1, i + 1 + l) == 0)
            .ok_or(Error::NotAperiodic)?;
        let p = (1..l).rev().find(|&p| cur.get(i1 + 1, i1 + 1 + p) != 0).unwrap_or(0);
        let mut next = cur.clone();
        let mut t = 0;
        for j in (i1 + 1 + p)..=(i1 + l) {
            let x = cur.get(i1, j);
            if x == 0 {
                continue;
            }
            t += x;
            next.add_entry(i1, j, -x);
            if j > i1 + 1 {
                next.add_entry(i1 + 1, j, x);
            }
        }
        word.push(((i1 - 1).rem_euclid(n) + 1, t));
        cur = next;
    }
    Ok(word)
}

/// `u^{(A)} = u_{i_1}^{(t_1)} ... u_{i_m}^{(t_m)}`.
pub fn monomial_element(a: &PeriodicMatrix) -> Result<HallElement, Error> {
    let word = monomial_word(a)?;
    let factors: Vec<HallElement> = word.iter().map(|&(i, t)| divided_power(a.n(), i, t)).collect();
    hall_product(a.n(), &factors)
}

/// Evaluates a polynomial in `v^2` at `q`, for table output and checks.
pub fn eval_at_q(p: &LaurentPoly, q: i64) -> Option<i64> {
    let mut acc = BigInt::from(0);
    for (e, c) in p.terms() {
        if e % 2 != 0 || *e < 0 {
            return None;
        }
        acc += c * BigInt::from(q).pow((*e / 2) as u32);
    }
    acc.to_i64()
}

/// Renders a polynomial in `v^2` as a polynomial in `q`.
pub fn q_string(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    if p.terms().iter().any(|(e, _)| e % 2 != 0) {
        return p.to_string();
    }
    let mut s = String::new();
    for (k, (e, c)) in p.terms().iter().enumerate() {
        let e = e / 2;
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -c.clone() } else { c.clone() };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let one = mag == BigInt::from(1);
        match e {
            0 => s.push_str(&mag.to_string()),
            _ => {
                if !one {
                    s.push_str(&format!("{}*", mag));
                }
                if e == 1 {
                    s.push('q');
                } else {
                    s.push_str(&format!("q^{}", e));
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::gauss_q;

    fn e(n: usize, i: i32, j: i32) -> PeriodicMatrix {
        PeriodicMatrix::elem(n, i, j)
    }

    #[test]
    fn filtration_counts() {
        let n = 2;
        assert_eq!(count_filtrations(&e(n, 1, 3), &[e(n, 1, 2), e(n, 2, 3)], 2).unwrap(), 1);
        let ss = e(n, 1, 2).plus(&e(n, 2, 3));
        for p in [2, 3, 5] {
            assert_eq!(count_filtrations(&ss, &[e(n, 1, 2), e(n, 2, 3)], p).unwrap(), 1);
            let two = e(n, 1, 2).scaled(2);
            assert_eq!(count_filtrations(&two, &[e(n, 1, 2), e(n, 1, 2)], p).unwrap(), p as u64 + 1);
        }
    }

    #[test]
    fn small_hall_polynomials() {
        let n = 2;
        let s1 = e(n, 1, 2);
        let two = s1.scaled(2);
        assert_eq!(hall_poly(&two, &s1, &s1).unwrap(), gauss_q(2, 1));
        assert_eq!(hall_poly(&e(n, 1, 3), &e(n, 1, 3), &PeriodicMatrix::zero(n)).unwrap(), LaurentPoly::one());
        assert_eq!(hall_poly(&e(n, 1, 3), &e(n, 1, 2), &e(n, 2, 3)).unwrap(), LaurentPoly::one());
        assert!(hall_poly(&e(n, 1, 3), &e(n, 2, 3), &e(n, 1, 2)).unwrap().is_zero());
    }

    #[test]
    fn product_of_simples() {
        let n = 2;
        let p = hall_mul(&u_simple(n, 1), &u_simple(n, 2)).unwrap();
        let ss = e(n, 1, 2).plus(&e(n, 2, 3));
        let expect: HallElement =
            [(ss, LaurentPoly::v(-1)), (e(n, 1, 3), LaurentPoly::v(-1))].into_iter().collect();
        assert_eq!(p, expect);
        assert_eq!(hall_mul(&one(n), &p).unwrap(), p);
    }

    #[test]
    fn generic_extensions() {
        let n = 2;
        assert_eq!(generic_ext(&e(n, 1, 2), &e(n, 2, 3)).unwrap(), e(n, 1, 3));
        let a = e(n, 1, 3);
        assert_eq!(generic_ext(&a, &PeriodicMatrix::zero(n)).unwrap(), a);
        let n = 3;
        let (s1, s2, s3) = (e(n, 1, 2), e(n, 2, 3), e(n, 3, 4));
        let left = generic_ext(&generic_ext(&s1, &s2).unwrap(), &s3).unwrap();
        let right = generic_ext(&s1, &generic_ext(&s2, &s3).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn monomial_word_of_finite_example() {
        // a type A_4 matrix placed inside △(5), where no wrapping occurs
        let rows = [[1, 2, 3, 4], [0, 5, 0, 0], [0, 0, 6, 0], [0, 0, 0, 7]];
        let mut a = PeriodicMatrix::zero(5);
        for i in 0..4 {
            for j in i..4 {
                a.add_entry(i as i32 + 1, j as i32 + 2, rows[i][j]);
            }
        }
        let w = monomial_word(&a).unwrap();
        assert_eq!(w, vec![(1, 9), (2, 7), (3, 4), (4, 11), (3, 9), (2, 7), (1, 1)]);
    }

    #[test]
    fn monomial_word_errors_and_trivial() {
        let n = 2;
        let a = e(n, 1, 2).scaled(3);
        assert_eq!(monomial_word(&a).unwrap(), vec![(1, 3)]);
        let periodic = e(n, 1, 2).plus(&e(n, 2, 3));
        assert_eq!(monomial_word(&periodic), Err(Error::NotAperiodic));
    }

    #[test]
    fn q_rendering() {
        assert_eq!(q_string(&gauss_q(2, 1)), "1 + q");
        assert_eq!(q_string(&LaurentPoly::one()), "1");
        assert_eq!(eval_at_q(&gauss_q(3, 1), 2), Some(7));
    }
}
