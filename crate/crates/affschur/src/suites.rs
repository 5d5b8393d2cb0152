//! Named verification suites, shared by the command line and the
//! acceptance run. Each returns a [`Report`] listing every failing instance.

use num_bigint::BigInt;

use crate::classical::{self, ClassicalGen};
use crate::hall::central::{central_c, central_pi};
use crate::hall::{self, eval_at_q, hall_mul, hall_poly, hall_product, u, u_simple, HallElement};
use crate::laurent::{gauss_q, gauss_sym, LaurentPoly, RationalLaurent};
use crate::quiver_rep::{dim_vector, upper_with_dim, upper_with_total, vadd, vsub, PeriodicMatrix};
use crate::schur::{
    blm, blm_mul_simple, blm_mul_zero, commutator_check, mul_oracle, poly_p, poly_p_prime, presentation_suite, rho_suite,
    theta_pm, triangular_check, Report, SchurElement,
};
use crate::tensor_space::{bimodule_check, d_index, inversion_count};
use crate::Error;

pub const SUITES: [&str; 13] = [
    "gauss",
    "hall-assoc",
    "hopf",
    "pairing",
    "oracle-vs-blm",
    "pbw",
    "commutator",
    "polyidentity",
    "presentation",
    "rho-nr",
    "tensor-bimodule",
    "classical-mf",
    "classical-realization",
];

/// Parameters of a suite run. `None` picks the suite's own default.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub n: usize,
    pub r: i32,
    pub bandwidth: Option<i32>,
    pub max: Option<i32>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 2, r: 2, bandwidth: None, max: None, samples: 200, seed: 7 }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report, Error> {
    if cfg.n < 2 || cfg.r < 1 {
        return Err(Error::PreconditionViolated(format!("need n >= 2 and r >= 1, got n = {}, r = {}", cfg.n, cfg.r)));
    }
    match name {
        "gauss" => gauss(cfg.max.unwrap_or(6)),
        "hall-assoc" => hall_assoc(cfg.n, cfg.max.unwrap_or(4)),
        "hopf" => {
            let mut rep = Report::default();
            rep.record("coassociativity and counit", hall::hopf::check_coalgebra(cfg.n, cfg.max.unwrap_or(3))?);
            rep.record("antipode", hall::hopf::check_antipode(cfg.n, cfg.max.unwrap_or(3).min(2))?);
            Ok(rep)
        }
        "pairing" => {
            let mut rep = Report::default();
            rep.record("HP1-HP4", hall::hopf::check_pairing(cfg.n, cfg.max.unwrap_or(2))?);
            Ok(rep)
        }
        "oracle-vs-blm" => oracle_vs_blm(cfg.n, cfg.r, cfg.bandwidth.unwrap_or(cfg.n as i32), cfg.max.unwrap_or(2)),
        "pbw" => {
            let mut rep = Report::default();
            let bw = cfg.bandwidth.unwrap_or(2);
            rep.record(&format!("triangular decomposition n={} r={} bandwidth<={}", cfg.n, cfg.r, bw), triangular_check(cfg.n, cfg.r, bw)?);
            Ok(rep)
        }
        "commutator" => commutator(cfg.n, cfg.r, cfg.max.unwrap_or(1)),
        "polyidentity" => polyidentity(cfg.n, cfg.max.unwrap_or(2)),
        "presentation" => presentation_suite(cfg.n, cfg.r),
        "rho-nr" => {
            if cfg.n as i32 != cfg.r {
                return Err(Error::PreconditionViolated("rho-nr needs n = r".into()));
            }
            rho_suite(cfg.r)
        }
        "tensor-bimodule" => {
            let mut rep = Report::default();
            let bad = bimodule_check(cfg.n, cfg.r as usize, cfg.samples, cfg.seed);
            rep.record(&format!("bimodule n={} r={} ({} vectors)", cfg.n, cfg.r, cfg.samples), bad);
            Ok(rep)
        }
        "classical-mf" => classical_mf(cfg.n, cfg.r, cfg.bandwidth.unwrap_or(2 * cfg.n as i32), cfg.max.unwrap_or(1)),
        "classical-realization" => classical_realization(cfg.n, cfg.max.unwrap_or(2)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Gaussian binomials: both Pascal rules, the value at `v = 1`, and the
/// number of subspaces of `F_p^N` for small `N`.
pub fn gauss(max: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let mut pascal = Vec::new();
    let mut at_one = Vec::new();
    for big_n in -max..=max + 2 {
        for t in 1..=(max.max(1) as u32) {
            let g = gauss_sym(big_n as i64, t);
            let a = gauss_sym(big_n as i64 - 1, t);
            let b = gauss_sym(big_n as i64 - 1, t - 1);
            let k = t as i32;
            let left = a.shift(k) + b.shift(-(big_n - k));
            let right = a.shift(-k) + b.shift(big_n - k);
            if g != left || g != right {
                pascal.push(format!("[{} over {}]", big_n, t));
            }
            // generalized binomial N(N-1)...(N-t+1)/t!
            let mut num = BigInt::from(1);
            let mut den = BigInt::from(1);
            for s in 0..k {
                num *= BigInt::from(big_n - s);
                den *= BigInt::from(s + 1);
            }
            if g.specialize_v1() != num / den {
                at_one.push(format!("[{} over {}](1)", big_n, t));
            }
        }
    }
    rep.record("q-Pascal rules", pascal);
    rep.record("value at v = 1", at_one);
    let mut counts = Vec::new();
    for p in [2u32, 3] {
        for m in 0..=4usize {
            for k in 0..=m {
                let expect = hall::fq::subspaces(m, k, p).len() as i64;
                if eval_at_q(&gauss_q(m as i64, k as u32), p as i64) != Some(expect) {
                    counts.push(format!("[[{} over {}]] at q = {}", m, k, p));
                }
            }
        }
    }
    rep.record("subspace counts over F_2, F_3", counts);
    Ok(rep)
}

/// Nonzero triples `(A, B, C)` with `𝐝(A) + 𝐝(B) + 𝐝(C) = d`.
fn triples(d: &[i32]) -> Vec<(PeriodicMatrix, PeriodicMatrix, PeriodicMatrix)> {
    let mut out = Vec::new();
    for da in crate::quiver_rep::dims_below(d) {
        let rest = vsub(d, &da);
        for db in crate::quiver_rep::dims_below(&rest) {
            let dc = vsub(&rest, &db);
            if [&da, &db, &dc].iter().any(|x| x.iter().all(|&y| y == 0)) {
                continue;
            }
            for a in upper_with_dim(&da) {
                for b in upper_with_dim(&db) {
                    for c in upper_with_dim(&dc) {
                        out.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
    }
    out
}

fn stable<T>(x: Result<T, Error>, unstable: &mut Vec<String>) -> Result<Option<T>, Error> {
    match x {
        Ok(v) => Ok(Some(v)),
        Err(Error::InterpolationUnstable(m)) => {
            unstable.push(m);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Associativity of Hall polynomials for `𝔡(E) <= max_dim`, stability of
/// every interpolation it needs, and products of two semisimple modules.
pub fn hall_assoc(n: usize, max_dim: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let mut unstable = Vec::new();
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for total in 3..=max_dim {
        for e in upper_with_total(n, total) {
            let de = dim_vector(&e)?;
            for (a, b, c) in triples(&de) {
                let dab = vadd(&dim_vector(&a)?, &dim_vector(&b)?);
                let dbc = vadd(&dim_vector(&b)?, &dim_vector(&c)?);
                let mut lhs = LaurentPoly::zero();
                for d in upper_with_dim(&dab) {
                    let (Some(x), Some(y)) =
                        (stable(hall_poly(&d, &a, &b), &mut unstable)?, stable(hall_poly(&e, &d, &c), &mut unstable)?)
                    else {
                        continue;
                    };
                    lhs += x * y;
                }
                let mut rhs = LaurentPoly::zero();
                for d in upper_with_dim(&dbc) {
                    let (Some(x), Some(y)) =
                        (stable(hall_poly(&e, &a, &d), &mut unstable)?, stable(hall_poly(&d, &b, &c), &mut unstable)?)
                    else {
                        continue;
                    };
                    rhs += x * y;
                }
                checked += 1;
                if lhs != rhs {
                    bad.push(format!("E={} A={} B={} C={}", e, a, b, c));
                }
            }
        }
    }
    rep.record(&format!("associativity n={} 𝔡(E)<={} ({} instances)", n, max_dim, checked), bad);
    rep.record("interpolation stability", unstable);
    rep.record("products of two semisimple modules", semisimple_products(n, max_dim)?);
    Ok(rep)
}

fn boxes(n: usize, max: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i32>| (0..=max).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

/// `u_α u_β = v^{Σ α_i(β_i - β_{i+1})} Σ_{λ <= γ} ∏_i [[α_i+β_i-λ_i-λ_{i-1} over β_i-λ_{i-1}]] u_{C_λ}`.
fn semisimple_products(n: usize, max_dim: i32) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    let at = |v: &[i32], i: i32| v[(i - 1).rem_euclid(n as i32) as usize];
    for alpha in boxes(n, 2) {
        for beta in boxes(n, 2) {
            let size: i32 = alpha.iter().chain(&beta).sum();
            if size > max_dim || alpha.iter().all(|&x| x == 0) || beta.iter().all(|&x| x == 0) {
                continue;
            }
            let lhs = hall_mul(&u(&PeriodicMatrix::semisimple(&alpha)), &u(&PeriodicMatrix::semisimple(&beta)))?;
            let gamma: Vec<i32> = (1..=n as i32).map(|i| at(&alpha, i).min(at(&beta, i + 1))).collect();
            let twist: i32 = (1..=n as i32).map(|i| at(&alpha, i) * (at(&beta, i) - at(&beta, i + 1))).sum();
            let mut rhs = HallElement::zero();
            for lam in boxes(n, *gamma.iter().max().unwrap_or(&0)) {
                if lam.iter().zip(&gamma).any(|(l, g)| l > g) {
                    continue;
                }
                let mut c = PeriodicMatrix::zero(n);
                let mut coeff = LaurentPoly::v(twist);
                for i in 1..=n as i32 {
                    let top = at(&alpha, i) + at(&beta, i) - at(&lam, i) - at(&lam, i - 1);
                    c.add_entry(i, i + 1, top);
                    c.add_entry(i, i + 2, at(&lam, i));
                    coeff = coeff * gauss_q(top as i64, (at(&beta, i) - at(&lam, i - 1)) as u32);
                }
                rhs.add_term(c, coeff);
            }
            if lhs != rhs {
                bad.push(format!("α={:?} β={:?}", alpha, beta));
            }
        }
    }
    Ok(bad)
}

/// `E_{h,h±1}(0, r) A(j, r)` and `0(±e_i, r) A(j, r)` by closed formulas
/// against the Hecke oracle, for `A ∈ Θ^±` of bandwidth at most `bandwidth`
/// and `|j_i| <= max_j`.
pub fn oracle_vs_blm(n: usize, r: i32, bandwidth: i32, max_j: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let nn = n as i32;
    let zero = vec![0; n];
    let mut gens: Vec<(String, SchurElement, Box<dyn Fn(&PeriodicMatrix, &[i32]) -> Result<SchurElement, Error>>)> = Vec::new();
    for h in 1..=nn {
        for sign in [1, -1] {
            let g = if sign > 0 { PeriodicMatrix::elem(n, h, h + 1) } else { PeriodicMatrix::elem(n, h + 1, h) };
            gens.push((
                format!("{}(0,r)", g),
                blm(&g, &zero, r),
                Box::new(move |a: &PeriodicMatrix, j: &[i32]| blm_mul_simple(h, sign, a, j, r)),
            ));
        }
        for e in [1, -1] {
            let mut k = zero.clone();
            k[(h - 1) as usize] = e;
            let k2 = k.clone();
            gens.push((
                format!("0({:?},r)", k),
                blm(&PeriodicMatrix::zero(n), &k, r),
                Box::new(move |a: &PeriodicMatrix, j: &[i32]| Ok(blm_mul_zero(&k2, a, j, r))),
            ));
        }
    }
    let js: Vec<Vec<i32>> = boxes(n, 2 * max_j).into_iter().map(|v| v.iter().map(|x| x - max_j).collect()).collect();
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for a in theta_pm(n, r, bandwidth) {
        let mus = crate::schur::compositions(n, r - a.sigma());
        for (name, g, closed) in &gens {
            // g·[A + diag μ] once per μ, then recombined for every j
            let prods: Vec<SchurElement> =
                mus.iter().map(|mu| mul_oracle(g, &SchurElement::basis(a.plus_diag(mu)))).collect::<Result<_, _>>()?;
            for j in &js {
                let mut lhs = SchurElement::zero();
                for (mu, p) in mus.iter().zip(&prods) {
                    let w = crate::quiver_rep::dot(mu, j) as i32;
                    lhs.add_scaled(p, &LaurentPoly::v(w));
                }
                checked += 1;
                if lhs != closed(&a, j)? {
                    bad.push(format!("{} · {}({:?},{})", name, a, j, r));
                }
            }
        }
    }
    rep.record(&format!("n={} r={} bandwidth<={} |j|<={} ({} products)", n, r, bandwidth, max_j, checked), bad);
    Ok(rep)
}

pub fn commutator(n: usize, r: i32, max: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let mut bad = Vec::new();
    let cands = boxes(n, max);
    for lam in &cands {
        for mu in &cands {
            if !commutator_check(lam, mu, r)? {
                bad.push(format!("λ={:?} μ={:?}", lam, mu));
            }
        }
    }
    rep.record(&format!("semisimple commutators n={} r={} components<={}", n, r, max), bad);
    Ok(rep)
}

pub fn polyidentity(n: usize, max: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let mut bad = Vec::new();
    let cands = boxes(n, max);
    for lam in &cands {
        for mu in &cands {
            if poly_p(lam, mu) != poly_p_prime(lam, mu) {
                bad.push(format!("λ={:?} μ={:?}", lam, mu));
            }
        }
    }
    rep.record(&format!("P = P' for n={} components<={}", n, max), bad);
    Ok(rep)
}

/// Multiplication formulas and single-basis-element products against the
/// `v = 1` oracle, the loop algebra bracket, and the classical basis.
pub fn classical_mf(n: usize, r: i32, bandwidth: i32, max_j: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let s = classical::mf_sweep(n, r, bandwidth, max_j, 2)?;
    rep.record(&format!("mf1/mf2/mf3 n={} r={} bandwidth<={} ({} cases)", n, r, bandwidth, s.checked), s.failures);
    let s = classical::sbe_sweep(n, r, bandwidth, 2)?;
    rep.record(&format!("sbe1/sbe2 n={} r={} bandwidth<={} ({} cases)", n, r, bandwidth, s.checked), s.failures);
    if n <= 3 && r <= 3 {
        let reach = 2 * n as i32;
        rep.record(&format!("loop bracket n={} r={} |j-i|<={}", n, r, reach), classical::loop_bracket_check(n, r, reach)?);
        rep.check(format!("classical basis independent n={} r={}", n, r), classical::basis_independence_check(n, r, 2));
    }
    Ok(rep)
}

/// `realization_check` for every generator with a closed form and every
/// `A ∈ Θ^±` of bandwidth at most `n` with `σ(A) + σ(j) <= max_sigma`,
/// `j ∈ {0,1}^n`, on the levels `σ + 1, σ + 2, σ + 3`.
pub fn classical_realization(n: usize, max_sigma: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let nn = n as i32;
    let mut gens = Vec::new();
    for h in 1..=nn {
        gens.extend([
            ClassicalGen::Zero(h),
            ClassicalGen::E(h, h + 1),
            ClassicalGen::E(h, h - 1),
            ClassicalGen::E(h, h + nn),
            ClassicalGen::E(h, h - nn),
        ]);
    }
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for a in theta_pm(n, max_sigma, nn) {
        for j in boxes(n, 1) {
            let s = a.sigma() + j.iter().sum::<i32>();
            if s > max_sigma {
                continue;
            }
            let levels = [s + 1, s + 2, s + 3];
            for &g in &gens {
                checked += 1;
                bad.extend(classical::realization_check(g, &a, &j, &levels)?);
            }
        }
    }
    rep.record(&format!("r-independent constants n={} σ<={} ({} cases)", n, max_sigma, checked), bad);
    Ok(rep)
}

/// The closed forms of `z_1` for `n = 2, 3`; `π_m` from `c_m` by the
/// recursion has leading coefficients `v^{m(1-n)}[m]/m`; `c_1` commutes
/// with every `u_A` in total degree at most `max_degree`.
pub fn central(n: usize, max_degree: i32) -> Result<Report, Error> {
    let mut rep = Report::default();
    let us: Vec<HallElement> = (1..=n as i32).map(|i| u_simple(n, i)).collect();
    let prod = |w: &[usize]| hall_product(n, &w.iter().map(|&i| us[i - 1].clone()).collect::<Vec<_>>());
    let delta = u(&PeriodicMatrix::semisimple(&vec![1; n]));
    let z1 = crate::hall::central::central_z_integral(n, 1)?;
    let v_plus = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    match n {
        2 => {
            let expect = prod(&[1, 2])?.add(&prod(&[2, 1])?).sub(&delta.scale(&v_plus));
            rep.check("z_1 closed form, n = 2", z1 == expect);
        }
        3 => {
            let plus = prod(&[1, 2, 3])?.add(&prod(&[2, 3, 1])?).add(&prod(&[3, 1, 2])?);
            let minus = prod(&[1, 3, 2])?.add(&prod(&[2, 1, 3])?).add(&prod(&[3, 2, 1])?);
            let expect = plus.sub(&minus.scale(&v_plus)).add(&delta.scale(&LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)])));
            rep.check("z_1 closed form, n = 3", z1 == expect);
        }
        _ => rep.skip("z_1 closed form", "only n = 2, 3 are written out"),
    }
    for m in 1..=(max_degree / n as i32) {
        let pi = central_pi(n, m)?;
        let lead = RationalLaurent::new(
            LaurentPoly::v(m * (1 - n as i32)) * crate::laurent::qint(m),
            LaurentPoly::constant(m),
        )?;
        let ok = (1..=n as i32).all(|l| pi.get(&PeriodicMatrix::elem(n, l, l + m * n as i32)) == lead);
        rep.check(format!("π_{} leading coefficients from c_1..c_{}", m, m), ok);
    }
    let c1 = central_c(n, 1)?;
    let mut bad = Vec::new();
    for total in 1..=(max_degree - n as i32) {
        for a in upper_with_total(n, total) {
            let x = u(&a);
            if hall_mul(&c1, &x)? != hall_mul(&x, &c1)? {
                bad.push(format!("[c_1, u_{}]", a));
            }
        }
    }
    rep.record(&format!("c_1 central up to degree {}", max_degree), bad);
    Ok(rep)
}

/// `d_i = |Inv(i)|` on random `i`.
pub fn d_index_check(samples: usize, seed: u64) -> Report {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(1..=4usize);
        let r = rng.gen_range(1..=5usize);
        let i: Vec<i32> = (0..r).map(|_| rng.gen_range(-6..=9)).collect();
        if d_index(&i, n) != inversion_count(&i, n) as i64 {
            bad.push(format!("i={:?} n={}", i, n));
        }
    }
    let mut rep = Report::default();
    rep.record(&format!("d_i = |Inv(i)| on {} random i", samples), bad);
    rep
}

/// The monomial word of the worked `gl_n`-type example.
pub fn monomial_example() -> Result<Report, Error> {
    let rows = [[1, 2, 3, 4], [0, 5, 0, 0], [0, 0, 6, 0], [0, 0, 0, 7]];
    let mut a = PeriodicMatrix::zero(5);
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate().skip(i) {
            a.add_entry(i as i32 + 1, j as i32 + 2, x);
        }
    }
    let w = hall::monomial_word(&a)?;
    let mut rep = Report::default();
    rep.check("monomial word 1^9 2^7 3^4 4^11 3^9 2^7 1^1", w == vec![(1, 9), (2, 7), (3, 4), (4, 11), (3, 9), (2, 7), (1, 1)]);
    Ok(rep)
}
