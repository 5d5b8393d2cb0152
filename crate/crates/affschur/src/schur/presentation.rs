//! Relation checks for the generators `𝔢_i, 𝔣_i, 𝔨_i` and, when `n = r`,
//! for `ρ^{±1}`.

use std::fmt;

use crate::hall::desk_cap;
use crate::laurent::{gauss_sym, Coeff, LaurentPoly, RationalLaurent};
use crate::lincomb::LinComb;
use crate::quiver_rep::PeriodicMatrix;
use crate::Error;

use super::{blm, compositions, e_gen, f_gen, identity, kk_pow, mul_oracle, product, xi_gen, Generator, SchurElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub items: Vec<(String, Status)>,
}

impl Report {
    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push((name.into(), if ok { Status::Pass } else { Status::Fail }));
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.items.push((name.into(), Status::Skipped(why.into())));
    }

    /// One `PASS` item named `name`, or one `FAIL` item per failure.
    pub fn record(&mut self, name: &str, failures: Vec<String>) {
        if failures.is_empty() {
            self.check(name, true);
        }
        for f in failures {
            self.check(format!("{}: {}", name, f), false);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|(_, s)| *s != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|(_, s)| *s == Status::Fail).map(|(n, _)| n.as_str()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, status) in &self.items {
            match status {
                Status::Pass => writeln!(f, "PASS {}", name)?,
                Status::Fail => writeln!(f, "FAIL {}", name)?,
                Status::Skipped(why) => writeln!(f, "SKIP {} ({})", name, why)?,
            }
        }
        Ok(())
    }
}

/// Generators of `𝒮_△(n, r)` with cyclic indices.
struct Gens {
    n: usize,
    r: i32,
    e: Vec<SchurElement>,
    f: Vec<SchurElement>,
    k: Vec<SchurElement>,
    kinv: Vec<SchurElement>,
}

impl Gens {
    fn new(n: usize, r: i32) -> Self {
        let idx = |i: usize| i as i32 + 1;
        Gens {
            n,
            r,
            e: (0..n).map(|i| e_gen(n, r, idx(i))).collect(),
            f: (0..n).map(|i| f_gen(n, r, idx(i))).collect(),
            k: (0..n).map(|i| kk_pow(n, r, idx(i), 1)).collect(),
            kinv: (0..n).map(|i| kk_pow(n, r, idx(i), -1)).collect(),
        }
    }

    fn at(&self, v: &[SchurElement], i: i32) -> SchurElement {
        v[(i - 1).rem_euclid(self.n as i32) as usize].clone()
    }

    fn e(&self, i: i32) -> SchurElement {
        self.at(&self.e, i)
    }

    fn f(&self, i: i32) -> SchurElement {
        self.at(&self.f, i)
    }

    fn k(&self, i: i32) -> SchurElement {
        self.at(&self.k, i)
    }

    fn kinv(&self, i: i32) -> SchurElement {
        self.at(&self.kinv, i)
    }

    fn one(&self) -> SchurElement {
        identity(self.n, self.r)
    }

    fn scalar(&self, p: LaurentPoly) -> SchurElement {
        self.one().scale(&p)
    }
}

fn mul(x: &SchurElement, y: &SchurElement) -> Result<SchurElement, Error> {
    mul_oracle(x, y)
}

fn prod(xs: &[SchurElement]) -> Result<SchurElement, Error> {
    let refs: Vec<&SchurElement> = xs.iter().collect();
    product(&refs)
}

fn power(one: &SchurElement, x: &SchurElement, m: u32) -> Result<SchurElement, Error> {
    let mut acc = one.clone();
    for _ in 0..m {
        acc = mul(&acc, x)?;
    }
    Ok(acc)
}

fn v(k: i32) -> LaurentPoly {
    LaurentPoly::v(k)
}

/// `Σ_λ [λ_i - λ_{i+1}] 1_λ = (K̃_i - K̃_i^{-1})/(v - v^{-1})`.
fn k_tilde_quotient(n: usize, r: i32, i: i32) -> SchurElement {
    compositions(n, r)
        .into_iter()
        .map(|l| {
            let a = l[(i - 1).rem_euclid(n as i32) as usize] - l[i.rem_euclid(n as i32) as usize];
            (PeriodicMatrix::diag(&l), crate::laurent::qint(a))
        })
        .collect()
}

fn cartan(n: usize, i: i32, j: i32) -> i32 {
    let n = n as i32;
    if (i - j).rem_euclid(n) == 0 {
        2
    } else if n == 2 {
        -2
    } else if (i - j).rem_euclid(n) == 1 || (j - i).rem_euclid(n) == 1 {
        -1
    } else {
        0
    }
}

fn serre(g: &Gens, x: &[SchurElement], i: i32, j: i32) -> Result<SchurElement, Error> {
    let m = (1 - cartan(g.n, i, j)) as u32;
    let xi = g.at(x, i);
    let xj = g.at(x, j);
    let one = g.one();
    let mut acc = SchurElement::zero();
    for a in 0..=m {
        let term = prod(&[power(&one, &xi, a)?, xj.clone(), power(&one, &xi, m - a)?])?;
        let c = gauss_sym(m as i64, a);
        acc.add_scaled(&term, &if a % 2 == 0 { c } else { -c });
    }
    Ok(acc)
}

/// QS1 to QS6 for the images of `E_i, F_i, K_i`.
pub fn presentation_suite(n: usize, r: i32) -> Result<Report, Error> {
    let g = Gens::new(n, r);
    let mut rep = Report::default();
    let nn = n as i32;
    let delta = |a: i32, b: i32| if (a - b).rem_euclid(nn) == 0 { 1 } else { 0 };

    let mut ok = true;
    for i in 1..=nn {
        for j in 1..=nn {
            ok &= mul(&g.k(i), &g.k(j))? == mul(&g.k(j), &g.k(i))?;
        }
    }
    rep.check("QS1 k_i k_j = k_j k_i", ok);

    let mut ok = true;
    for i in 1..=nn {
        for j in 1..=nn {
            let c = delta(i, j) - delta(i, j + 1);
            ok &= mul(&g.k(i), &g.e(j))? == mul(&g.e(j), &g.k(i))?.scale(&v(c));
            ok &= mul(&g.k(i), &g.f(j))? == mul(&g.f(j), &g.k(i))?.scale(&v(-c));
        }
    }
    rep.check("QS2 k_i e_j = v^(δ_ij - δ_i,j+1) e_j k_i and the f analogue", ok);

    let mut ok = true;
    for i in 1..=nn {
        for j in 1..=nn {
            let lhs = mul(&g.e(i), &g.f(j))?.sub(&mul(&g.f(j), &g.e(i))?);
            let rhs = if delta(i, j) == 1 { k_tilde_quotient(n, r, i) } else { SchurElement::zero() };
            ok &= lhs == rhs;
        }
    }
    rep.check("QS3 e_i f_j - f_j e_i = δ_ij (K_i - K_i^-1)/(v - v^-1)", ok);

    let mut ok_e = true;
    let mut ok_f = true;
    for i in 1..=nn {
        for j in 1..=nn {
            if i != j {
                ok_e &= serre(&g, &g.e, i, j)?.is_zero();
                ok_f &= serre(&g, &g.f, i, j)?.is_zero();
            }
        }
    }
    rep.check("QS4 Serre relations for e", ok_e);
    rep.check("QS5 Serre relations for f", ok_f);

    let mut ok = true;
    for i in 1..=nn {
        let mut acc = g.one();
        for t in 0..=r {
            acc = mul(&acc, &g.k(i).sub(&g.scalar(v(t))))?;
        }
        ok &= acc.is_zero();
    }
    let kprod = prod(&(1..=nn).map(|i| g.k(i)).collect::<Vec<_>>())?;
    ok &= kprod == g.scalar(v(r));
    rep.check("QS6 [k_i; r+1]! = 0 and k_1...k_n = v^r", ok);
    Ok(rep)
}

/// `ρ = Σ_{σ(a) = r} 𝔢_a` (`sign = +1`) or `ρ^{-1} = Σ 𝔣_a` (`sign = -1`).
pub fn rho(n: usize, r: i32, sign: i32) -> SchurElement {
    let zero = vec![0; n];
    let mut out = SchurElement::zero();
    for a in compositions(n, r) {
        let m = PeriodicMatrix::semisimple(&a);
        let m = if sign > 0 { m } else { m.transpose() };
        out.add_assign(&blm(&m, &zero, r));
    }
    out
}

/// `𝔢_i^{(a)} = (a E_{i,i+1})(0, r)`, and the `𝔣` analogue.
fn divided(n: usize, r: i32, i: i32, a: i32, sign: i32) -> SchurElement {
    let m = PeriodicMatrix::from_entries(n, [(i, i + 1, a)]);
    let m = if sign > 0 { m } else { m.transpose() };
    blm(&m, &vec![0; n], r)
}

/// `𝔢'_δ` (`sign = +1`) or `𝔣'_δ`: the sum over `a ≠ δ` with `σ(a) = r` of
/// `𝔢_a`, each written as a divided-power monomial in the cyclic order
/// starting after the first zero `a_i = 0`.
pub fn delta_prime(n: usize, r: i32, sign: i32) -> Result<SchurElement, Error> {
    let nn = n as i32;
    let one = identity(n, r);
    let mut out = SchurElement::zero();
    for i in 1..=nn {
        for a in compositions(n, r) {
            if a.iter().position(|&x| x == 0) != Some((i - 1) as usize) {
                continue;
            }
            let order: Vec<i32> = if sign > 0 {
                (1..nn).map(|k| (i - k - 1).rem_euclid(nn) + 1).collect()
            } else {
                (1..nn).map(|k| (i + k - 1).rem_euclid(nn) + 1).collect()
            };
            let mut acc = one.clone();
            for &t in &order {
                acc = mul(&acc, &divided(n, r, t, a[(t - 1) as usize], sign))?;
            }
            out.add_assign(&acc);
        }
    }
    Ok(out)
}

fn lift(x: &SchurElement) -> LinComb<PeriodicMatrix, RationalLaurent> {
    x.map_coeffs(|c| RationalLaurent::from_laurent(c.clone()))
}

/// `σ_r` from the power sums `𝔭_1, ..., 𝔭_r` by Newton's identities.
fn elementary_top(n: usize, r: i32) -> Result<LinComb<PeriodicMatrix, RationalLaurent>, Error> {
    let p: Vec<_> = (1..=r).map(|s| xi_gen(Generator::ZPlus(s), n, r).map(|x| lift(&x))).collect::<Result<_, _>>()?;
    let mut e = vec![lift(&identity(n, r))];
    for k in 1..=r as usize {
        let mut acc = LinComb::zero();
        for i in 1..=k {
            let t = mul_oracle(&e[k - i], &p[i - 1])?;
            let s = RationalLaurent::from_int(if i % 2 == 1 { 1 } else { -1 });
            acc.add_scaled(&t, &s);
        }
        let inv = RationalLaurent::from_int(k as i64).recip()?;
        e.push(acc.scale(&inv));
    }
    Ok(e.pop().unwrap())
}

/// QS0' to QS6', `ρ^r = σ_r` and, for `r = 2`, the explicit relations
/// between `ρ`, `σ_1`, `τ_1` and the generators.
pub fn rho_suite(r: i32) -> Result<Report, Error> {
    let n = r as usize;
    let nn = r;
    let g = Gens::new(n, r);
    let one = g.one();
    let rho_p = rho(n, r, 1);
    let rho_m = rho(n, r, -1);
    let mut rep = Report::default();

    let mut ok = mul(&rho_p, &rho_m)? == one && mul(&rho_m, &rho_p)? == one;
    for i in 1..=nn {
        let conj = |x: &SchurElement| prod(&[rho_p.clone(), x.clone(), rho_m.clone()]);
        ok &= conj(&g.e(i))? == g.e(i - 1);
        ok &= conj(&g.f(i))? == g.f(i - 1);
        ok &= conj(&g.k(i))? == g.k(i - 1);
    }
    rep.check("QS0' ρρ^-1 = 1 and ρ x_i ρ^-1 = x_(i-1)", ok);

    let ep = delta_prime(n, r, 1)?;
    let fp = delta_prime(n, r, -1)?;
    let e_delta = blm(&PeriodicMatrix::semisimple(&vec![1; n]), &vec![0; n], r);
    let f_delta = blm(&PeriodicMatrix::semisimple(&vec![1; n]).transpose(), &vec![0; n], r);
    rep.check("ρ = e'_δ + e_δ and ρ^-1 = f'_δ + f_δ", rho_p == ep.add(&e_delta) && rho_m == fp.add(&f_delta));

    let vv = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    let one_minus = LaurentPoly::from_terms([(0, 1), (-2, -1)]);
    let e_word = |i: i32| (1..nn).map(|k| g.e(i - k)).collect::<Vec<_>>();
    let f_word = |i: i32| (1..nn).map(|k| g.f(i + k)).collect::<Vec<_>>();
    let mut ok = [true; 6];
    for i in 1..=nn {
        let kv = g.k(i).sub(&g.scalar(v(1)));
        ok[0] &= mul(&kv, &rho_p)? == mul(&kv, &ep)?;
        ok[3] &= mul(&kv, &rho_m)? == mul(&kv, &fp)?;

        let lhs = mul(&g.e(i), &rho_p)?.sub(&mul(&g.e(i), &ep)?).scale(&vv);
        let mut w = vec![g.e(i), g.e(i)];
        w.extend(e_word(i));
        ok[1] &= lhs == prod(&w)?;

        let lhs = mul(&g.f(i), &rho_p)?.sub(&mul(&g.f(i), &ep)?).scale(&one_minus);
        let mut w = e_word(i);
        w.push(g.kinv(i));
        w.push(g.k(i + 1).sub(&g.kinv(i + 1)));
        ok[2] &= lhs == prod(&w)?;

        let lhs = mul(&g.f(i), &rho_m)?.sub(&mul(&g.f(i), &fp)?).scale(&vv);
        let mut w = vec![g.f(i), g.f(i)];
        w.extend(f_word(i));
        ok[4] &= lhs == prod(&w)?;

        let lhs = mul(&g.e(i), &rho_m)?.sub(&mul(&g.e(i), &fp)?).scale(&one_minus);
        let mut w = f_word(i);
        w.push(g.kinv(i + 1));
        w.push(g.k(i).sub(&g.kinv(i)));
        ok[5] &= lhs == prod(&w)?;
    }
    for (k, name) in [
        "QS1' (k_i - v)ρ = (k_i - v)e'_δ",
        "QS2' e_i ρ = e_i e'_δ + e_i^2 e_(i-1)...e_(i+1)/(v + v^-1)",
        "QS3' f_i ρ = f_i e'_δ + e_(i-1)...e_(i+1) k_i^-1 (k_(i+1) - k_(i+1)^-1)/(1 - v^-2)",
        "QS4' (k_i - v)ρ^-1 = (k_i - v)f'_δ",
        "QS5' f_i ρ^-1 = f_i f'_δ + f_i^2 f_(i+1)...f_(i-1)/(v + v^-1)",
        "QS6' e_i ρ^-1 = e_i f'_δ + f_(i+1)...f_(i-1) k_(i+1)^-1 (k_i - k_i^-1)/(1 - v^-2)",
    ]
    .iter()
    .enumerate()
    {
        rep.check(*name, ok[k]);
    }

    if r * n as i32 > desk_cap() {
        rep.skip("ρ^r = σ_r", format!("needs central elements of degree {}, cap is {}", r * n as i32, desk_cap()));
    } else {
        let lhs = lift(&power(&one, &rho_p, r as u32)?);
        rep.check("ρ^r = σ_r", lhs == elementary_top(n, r)?);
    }

    if r == 2 {
        let sigma1 = xi_gen(Generator::ZPlus(1), n, r)?;
        let tau1 = xi_gen(Generator::ZMinus(1), n, r)?;
        let (e1, e2, f1, f2) = (g.e(1), g.e(2), g.f(1), g.f(2));
        let quad = |a: &SchurElement, b: &SchurElement| -> Result<SchurElement, Error> {
            Ok(prod(&[a.clone(), a.clone()])?
                .add(&prod(&[a.clone(), b.clone()])?)
                .add(&prod(&[b.clone(), a.clone()])?)
                .add(&prod(&[b.clone(), b.clone()])?))
        };
        rep.check("(v + v^-1)ρ = e_1^2 + e_1e_2 + e_2e_1 + e_2^2 - σ_1", rho_p.scale(&vv) == quad(&e1, &e2)?.sub(&sigma1));
        rep.check("(v + v^-1)ρ^-1 = f_1^2 + f_1f_2 + f_2f_1 + f_2^2 - τ_1", rho_m.scale(&vv) == quad(&f1, &f2)?.sub(&tau1));
        let p3 = |a: &SchurElement, b: &SchurElement, c: &SchurElement| prod(&[a.clone(), b.clone(), c.clone()]);
        rep.check(
            "σ_1 e_1 = e_1e_2e_1, σ_1 e_2 = e_2e_1e_2",
            mul(&sigma1, &e1)? == p3(&e1, &e2, &e1)? && mul(&sigma1, &e2)? == p3(&e2, &e1, &e2)?,
        );
        rep.check(
            "τ_1 f_1 = f_1f_2f_1, τ_1 f_2 = f_2f_1f_2",
            mul(&tau1, &f1)? == p3(&f1, &f2, &f1)? && mul(&tau1, &f2)? == p3(&f2, &f1, &f2)?,
        );
        rep.check(
            "σ_1 f_1 = e_1e_2f_1 + f_1e_2e_1, σ_1 f_2 = e_2e_1f_2 + f_2e_1e_2",
            mul(&sigma1, &f1)? == p3(&e1, &e2, &f1)?.add(&p3(&f1, &e2, &e1)?)
                && mul(&sigma1, &f2)? == p3(&e2, &e1, &f2)?.add(&p3(&f2, &e1, &e2)?),
        );
        rep.check(
            "τ_1 e_1 = f_1f_2e_1 + e_1f_2f_1, τ_1 e_2 = f_2f_1e_2 + e_2f_1f_2",
            mul(&tau1, &e1)? == p3(&f1, &f2, &e1)?.add(&p3(&e1, &f2, &f1)?)
                && mul(&tau1, &e2)? == p3(&f2, &f1, &e2)?.add(&p3(&e2, &f1, &f2)?),
        );
        let mut ok_s = true;
        let mut ok_t = true;
        let ee = mul(&e1, &e2)?.add(&mul(&e2, &e1)?);
        let ff = mul(&f1, &f2)?.add(&mul(&f2, &f1)?);
        for i in 1..=2 {
            let kv = g.k(i).sub(&g.scalar(v(1)));
            ok_s &= mul(&sigma1, &kv)? == mul(&ee, &kv)?;
            ok_t &= mul(&tau1, &kv)? == mul(&ff, &kv)?;
        }
        rep.check("σ_1(k_i - v) = (e_1e_2 + e_2e_1)(k_i - v)", ok_s);
        rep.check("τ_1(k_i - v) = (f_1f_2 + f_2f_1)(k_i - v)", ok_t);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qfactorial;

    #[test]
    fn qs_small() {
        let rep = presentation_suite(2, 2).unwrap();
        assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn divided_powers_match() {
        let (n, r) = (2, 3);
        let one = identity(n, r);
        for a in 1..=3 {
            let e = divided(n, r, 1, a, 1);
            let p = power(&one, &e_gen(n, r, 1), a as u32).unwrap();
            assert_eq!(p, e.scale(&qfactorial(a as u32)));
        }
    }

    #[test]
    fn rho_two() {
        let rep = rho_suite(2).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
}
