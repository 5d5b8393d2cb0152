//! The extended affine symmetric group `𝔖_{△,r}` in window notation,
//! compositions and their Young subgroups, and the bijection `ȷ_△` between
//! double cosets and periodic matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quiver_rep::PeriodicMatrix;
use crate::Error;

/// Largest `r` supported by the fixed-size window.
pub const MAX_R: usize = 10;

/// A permutation `w` of `Z` with `w(i + r) = w(i) + r`, stored through its
/// window `(w(1), ..., w(r))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    r: u8,
    w: [i32; MAX_R],
}

impl AffinePerm {
    pub fn identity(r: usize) -> Self {
        assert!((1..=MAX_R).contains(&r), "r = {} out of range", r);
        let mut w = [0; MAX_R];
        for (k, x) in w.iter_mut().take(r).enumerate() {
            *x = k as i32 + 1;
        }
        AffinePerm { r: r as u8, w }
    }

    pub fn from_window(window: &[i32]) -> Result<Self, Error> {
        let r = window.len();
        if r == 0 || r > MAX_R {
            return Err(Error::WrongShape(format!("window of length {}", r)));
        }
        let mut seen = vec![false; r];
        for &x in window {
            let res = (x - 1).rem_euclid(r as i32) as usize;
            if seen[res] {
                return Err(Error::WrongShape(format!("{:?} is not a window of an affine permutation", window)));
            }
            seen[res] = true;
        }
        let mut w = [0; MAX_R];
        w[..r].copy_from_slice(window);
        Ok(AffinePerm { r: r as u8, w })
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    pub fn window(&self) -> &[i32] {
        &self.w[..self.r()]
    }

    /// `w(i)` for any integer `i`.
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        let r = self.r as i32;
        let q = (i - 1).div_euclid(r);
        let i0 = (i - 1).rem_euclid(r) as usize;
        self.w[i0] + q * r
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &AffinePerm) -> AffinePerm {
        assert_eq!(self.r, other.r);
        let mut w = [0; MAX_R];
        for k in 0..self.r() {
            w[k] = self.apply(other.w[k]);
        }
        AffinePerm { r: self.r, w }
    }

    pub fn inverse(&self) -> AffinePerm {
        let r = self.r as i32;
        let mut w = [0; MAX_R];
        for i in 1..=r {
            let j = self.w[(i - 1) as usize];
            let q = (j - 1).div_euclid(r);
            let j0 = (j - 1).rem_euclid(r) as usize;
            w[j0] = i - q * r;
        }
        AffinePerm { r: self.r, w }
    }

    /// The simple reflection `s_i`, with `s_{i+r} = s_i`.
    pub fn s(r: usize, i: i32) -> AffinePerm {
        let mut out = Self::identity(r);
        let ri = r as i32;
        let i0 = (i - 1).rem_euclid(ri) + 1;
        if i0 < ri {
            out.w[(i0 - 1) as usize] = i0 + 1;
            out.w[i0 as usize] = i0;
        } else {
            out.w[ri as usize - 1] = ri + 1;
            out.w[0] = 0;
        }
        out
    }

    /// `ρ(j) = j + 1`.
    pub fn rho(r: usize) -> AffinePerm {
        Self::rho_pow(r, 1)
    }

    pub fn rho_pow(r: usize, k: i32) -> AffinePerm {
        let mut out = Self::identity(r);
        for x in out.w.iter_mut().take(r) {
            *x += k;
        }
        out
    }

    /// `ε_k`: `k ↦ k + r`, other window entries fixed.
    pub fn epsilon(r: usize, k: usize) -> AffinePerm {
        let mut out = Self::identity(r);
        out.w[k - 1] += r as i32;
        out
    }

    /// The exponent `a` with `w ∈ ρ^a W`.
    pub fn rho_exponent(&self) -> i32 {
        let r = self.r as i32;
        let s: i32 = self.window().iter().sum::<i32>() - r * (r + 1) / 2;
        s / r
    }

    /// `ℓ(w) = Σ_{i<j} |⌊(w(j) - w(i))/r⌋|`.
    pub fn length(&self) -> u32 {
        let r = self.r as i32;
        let win = self.window();
        let mut total = 0;
        for i in 0..win.len() {
            for j in i + 1..win.len() {
                total += (win[j] - win[i]).div_euclid(r).unsigned_abs();
            }
        }
        total
    }

    /// Right descent: `ℓ(w s_k) < ℓ(w)` iff `w(k) > w(k+1)`.
    #[inline]
    pub fn has_right_descent(&self, k: i32) -> bool {
        self.apply(k) > self.apply(k + 1)
    }

    pub fn has_left_descent(&self, k: i32) -> bool {
        self.inverse().has_right_descent(k)
    }

    /// `w s_k`: swaps the window positions `k` and `k + 1`.
    pub fn mul_s(&self, k: i32) -> AffinePerm {
        let r = self.r as i32;
        let k0 = (k - 1).rem_euclid(r) + 1;
        let mut out = *self;
        if k0 < r {
            out.w.swap((k0 - 1) as usize, k0 as usize);
        } else {
            let a = self.w[0] + r;
            let b = self.w[(r - 1) as usize] - r;
            out.w[(r - 1) as usize] = a;
            out.w[0] = b;
        }
        out
    }

    /// `w = ρ^a s_{k_m} ⋯ s_{k_1}` by stripping right descents; returns
    /// `(a, [k_m, ..., k_1])`.
    pub fn reduced_word(&self) -> (i32, Vec<i32>) {
        let r = self.r as i32;
        let mut w = *self;
        let mut stripped = Vec::new();
        'outer: loop {
            for k in 1..=r {
                if w.has_right_descent(k) {
                    w = w.mul_s(k);
                    stripped.push(k);
                    continue 'outer;
                }
            }
            break;
        }
        stripped.reverse();
        (w.rho_exponent(), stripped)
    }

    /// Inversions `(s, t)` with `1 <= s <= r`, `s < t`, `w(s) > w(t)`.
    pub fn inversions(&self) -> Vec<(i32, i32)> {
        let r = self.r as i32;
        let span = self.window().iter().map(|&x| x.abs()).max().unwrap_or(0) + 2 * r;
        let mut out = Vec::new();
        for s in 1..=r {
            for t in s + 1..=s + span + r {
                if self.apply(s) > self.apply(t) {
                    out.push((s, t));
                }
            }
        }
        out
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.window().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for AffinePerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let w: Result<Vec<i32>, _> = t.split(',').map(|x| x.trim().parse::<i32>()).collect();
        AffinePerm::from_window(&w.map_err(|e| Error::Parse(format!("{}: {}", s, e)))?)
    }
}

impl Serialize for AffinePerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.window().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffinePerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Vec::<i32>::deserialize(d)?;
        AffinePerm::from_window(&w).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// compositions

/// `λ_{0,i} = λ_1 + ... + λ_i`.
fn partial_sums(lambda: &[i32]) -> Vec<i32> {
    let mut out = vec![0];
    for &x in lambda {
        out.push(out.last().unwrap() + x);
    }
    out
}

/// The index `k ∈ Z` with `p ∈ R^λ_k`. Zero parts are skipped.
pub fn block_of(lambda: &[i32], p: i32) -> i32 {
    let n = lambda.len() as i32;
    let r: i32 = lambda.iter().sum();
    let q = (p - 1).div_euclid(r);
    let p0 = (p - 1).rem_euclid(r) + 1;
    let ps = partial_sums(lambda);
    let i = (1..=n).find(|&i| ps[(i - 1) as usize] < p0 && p0 <= ps[i as usize]).unwrap();
    i + q * n
}

/// `R^λ_k` as a range of integers.
pub fn block_range(lambda: &[i32], k: i32) -> std::ops::RangeInclusive<i32> {
    let n = lambda.len() as i32;
    let r: i32 = lambda.iter().sum();
    let q = (k - 1).div_euclid(n);
    let i = (k - 1).rem_euclid(n) as usize;
    let ps = partial_sums(lambda);
    (q * r + ps[i] + 1)..=(q * r + ps[i + 1])
}

/// Generators `s_k` (`1 <= k < r`) of the Young subgroup `𝔖_λ`.
pub fn young_generators(lambda: &[i32]) -> Vec<i32> {
    let r: i32 = lambda.iter().sum();
    (1..r).filter(|&k| block_of(lambda, k) == block_of(lambda, k + 1)).collect()
}

/// All elements of `𝔖_λ` (a finite group).
pub fn young_subgroup(lambda: &[i32]) -> Vec<AffinePerm> {
    let r: i32 = lambda.iter().sum();
    let mut out = vec![AffinePerm::identity(r as usize)];
    for range in (1..=lambda.len() as i32).map(|k| block_range(lambda, k)) {
        let items: Vec<i32> = range.collect();
        if items.len() < 2 {
            continue;
        }
        let perms = permutations(&items);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for w in &out {
            for p in &perms {
                let mut x = *w;
                for (src, &dst) in items.iter().zip(p) {
                    x.w[(*src - 1) as usize] = dst;
                }
                next.push(x);
            }
        }
        out = next;
    }
    out
}

fn permutations(items: &[i32]) -> Vec<Vec<i32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `w` is increasing on each block of `λ`.
fn increasing_on_blocks(w: &AffinePerm, lambda: &[i32]) -> bool {
    (1..=lambda.len() as i32).all(|k| {
        let range: Vec<i32> = block_range(lambda, k).collect();
        range.windows(2).all(|p| w.apply(p[0]) < w.apply(p[1]))
    })
}

/// `d ∈ 𝒟_λ`, i.e. `ℓ(wd) = ℓ(w) + ℓ(d)` for `w ∈ 𝔖_λ`.
pub fn is_in_d(d: &AffinePerm, lambda: &[i32]) -> bool {
    increasing_on_blocks(&d.inverse(), lambda)
}

/// `d ∈ 𝒟_{λ,μ} = 𝒟_λ ∩ 𝒟_μ^{-1}`.
pub fn is_min_rep(d: &AffinePerm, lambda: &[i32], mu: &[i32]) -> bool {
    is_in_d(d, lambda) && increasing_on_blocks(d, mu)
}

/// The shortest element of `𝔖_λ w 𝔖_μ`, reached by removing descents.
pub fn min_coset_rep(lambda: &[i32], w: &AffinePerm, mu: &[i32]) -> AffinePerm {
    let gl = young_generators(lambda);
    let gm = young_generators(mu);
    let mut w = *w;
    loop {
        if let Some(&k) = gm.iter().find(|&&k| w.has_right_descent(k)) {
            w = w.mul_s(k);
            continue;
        }
        let wi = w.inverse();
        if let Some(&k) = gl.iter().find(|&&k| wi.has_right_descent(k)) {
            w = wi.mul_s(k).inverse();
            continue;
        }
        return w;
    }
}

fn check_composition(lambda: &[i32], r: usize) -> Result<(), Error> {
    if lambda.iter().any(|&x| x < 0) || lambda.iter().sum::<i32>() != r as i32 {
        return Err(Error::WrongShape(format!("{:?} is not a composition of {}", lambda, r)));
    }
    Ok(())
}

/// `ȷ_△(λ, d, μ) = (|R^λ_k ∩ d R^μ_l|)`.
pub fn jmath(lambda: &[i32], d: &AffinePerm, mu: &[i32]) -> Result<PeriodicMatrix, Error> {
    check_composition(lambda, d.r())?;
    check_composition(mu, d.r())?;
    if lambda.len() != mu.len() {
        return Err(Error::DimMismatch(format!("{:?} vs {:?}", lambda, mu)));
    }
    if !is_min_rep(d, lambda, mu) {
        return Err(Error::NotMinimalRep);
    }
    Ok(jmath_unchecked(lambda, d, mu))
}

/// Same as [`jmath`] for any representative of the double coset.
pub fn jmath_unchecked(lambda: &[i32], d: &AffinePerm, mu: &[i32]) -> PeriodicMatrix {
    let n = lambda.len();
    let mut a = PeriodicMatrix::zero(n);
    for t in 1..=d.r() as i32 {
        let l = block_of(mu, t);
        let k = block_of(lambda, d.apply(t));
        a.add_entry(k, l, 1);
    }
    a
}

/// Inverse of [`jmath`]: `(ro(A), d, co(A))`. Positions of `R^μ_l` are
/// matched, in increasing order, with positions of the rows `k` in
/// increasing `k`; each `R^λ_k` is filled by columns in increasing order.
pub fn jmath_inv(a: &PeriodicMatrix) -> Result<(Vec<i32>, AffinePerm, Vec<i32>), Error> {
    if !a.is_nonneg() {
        return Err(Error::WrongShape(format!("{} has negative entries", a)));
    }
    let n = a.n() as i32;
    let lambda = a.ro();
    let mu = a.co();
    let r: i32 = lambda.iter().sum();
    if r == 0 || r as usize > MAX_R {
        return Err(Error::WrongShape(format!("σ(A) = {} out of range", r)));
    }
    let mut w = [0i32; MAX_R];
    // rows: stored entries have rows in [1, n] and come sorted by column
    let mut row_slots: std::collections::HashMap<(i32, i32), i32> = Default::default();
    let mut cur_row = i32::MIN;
    let mut next_pos = 0;
    for &(i, j, x) in a.entries() {
        if i != cur_row {
            cur_row = i;
            next_pos = *block_range(&lambda, i).start();
        }
        row_slots.insert((i, j), next_pos);
        next_pos += x;
    }
    // columns: the same cells shifted so the column lies in [1, n]
    let mut cells: Vec<(i32, i32, i32, i32)> = a
        .entries()
        .iter()
        .map(|&(i, j, x)| {
            let b = (j - 1).div_euclid(n);
            (j - b * n, i - b * n, x, row_slots[&(i, j)] - b * r)
        })
        .collect();
    cells.sort();
    let mut cur_col = i32::MIN;
    for &(l, _, x, first) in &cells {
        if l != cur_col {
            cur_col = l;
            next_pos = *block_range(&mu, l).start();
        }
        for m in 0..x {
            w[(next_pos + m - 1) as usize] = first + m;
        }
        next_pos += x;
    }
    let d = AffinePerm::from_window(&w[..r as usize])?;
    Ok((lambda, d, mu))
}

/// Nonzero entries of the columns of `ȷ_△(λ, d, μ)`, in row order: the
/// composition `ν` with `𝔖_ν = d^{-1} 𝔖_λ d ∩ 𝔖_μ`.
pub fn coset_intersection(lambda: &[i32], d: &AffinePerm, mu: &[i32]) -> Vec<i32> {
    let a = jmath_unchecked(lambda, d, mu);
    column_composition(&a)
}

pub fn column_composition(a: &PeriodicMatrix) -> Vec<i32> {
    row_composition(&a.transpose())
}

/// Nonzero entries of the rows of `A`, in column order: `ν` with
/// `𝔖_ν = 𝔖_λ ∩ d 𝔖_μ d^{-1}`.
pub fn row_composition(a: &PeriodicMatrix) -> Vec<i32> {
    let mut out = Vec::new();
    for i in 1..=a.n() as i32 {
        let mut row: Vec<(i32, i32)> =
            a.entries().iter().filter(|e| e.0 == i).map(|&(_, j, x)| (j, x)).collect();
        row.sort();
        out.extend(row.into_iter().map(|x| x.1));
    }
    out
}

/// `𝔖_λ d 𝔖_μ = {w_1 d w_2 : w_1 ∈ 𝔖_λ, w_2 ∈ 𝒟_ν ∩ 𝔖_μ}`.
pub fn double_coset_elements(lambda: &[i32], d: &AffinePerm, mu: &[i32]) -> Vec<AffinePerm> {
    let nu = coset_intersection(lambda, d, mu);
    let right: Vec<AffinePerm> = young_subgroup(mu).into_iter().filter(|w| is_in_d(w, &nu)).collect();
    let mut out = Vec::new();
    for w1 in young_subgroup(lambda) {
        let w1d = w1.compose(d);
        for w2 in &right {
            out.push(w1d.compose(w2));
        }
    }
    out
}

/// `w = w_1 d w_2` with `w_1 ∈ 𝔖_λ`, `d ∈ 𝒟_{λ,μ}`, `w_2 ∈ 𝒟_ν ∩ 𝔖_μ`.
pub fn decompose(w: &AffinePerm, lambda: &[i32], mu: &[i32]) -> Result<(AffinePerm, AffinePerm, AffinePerm), Error> {
    let d = min_coset_rep(lambda, w, mu);
    let nu = coset_intersection(lambda, &d, mu);
    let dinv = d.inverse();
    for w1 in young_subgroup(lambda) {
        let w2 = dinv.compose(&w1.inverse()).compose(w);
        let in_mu = young_subgroup_contains(mu, &w2);
        if in_mu && is_in_d(&w2, &nu) {
            return Ok((w1, d, w2));
        }
    }
    Err(Error::NotInCoset)
}

/// `w ∈ 𝔖_λ`: `w` maps each block of `λ` (inside `[1, r]`) to itself.
pub fn young_subgroup_contains(lambda: &[i32], w: &AffinePerm) -> bool {
    (1..=w.r() as i32).all(|p| {
        let q = w.apply(p);
        (1..=w.r() as i32).contains(&q) && block_of(lambda, p) == block_of(lambda, q)
    })
}

/// `ℓ(w_{0,λ}) = Σ λ_i(λ_i - 1)/2`.
pub fn longest_length(lambda: &[i32]) -> u32 {
    lambda.iter().map(|&x| (x * (x - 1) / 2) as u32).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[i32]) -> AffinePerm {
        AffinePerm::from_window(w).unwrap()
    }

    #[test]
    fn basic_elements() {
        let r = 3;
        assert_eq!(AffinePerm::rho(r).window(), &[2, 3, 4]);
        let id = AffinePerm::identity(r);
        assert_eq!(AffinePerm::rho(r).compose(&AffinePerm::rho(r).inverse()), id);
        for i in 1..=r as i32 {
            let s = AffinePerm::s(r, i);
            assert_eq!(s.compose(&s), id);
            assert_eq!(s.length(), 1);
            // ρ s_i ρ^{-1} = s_{i+1}
            let rho = AffinePerm::rho(r);
            assert_eq!(rho.compose(&s).compose(&rho.inverse()), AffinePerm::s(r, i + 1));
        }
        assert_eq!(AffinePerm::s(3, 3).window(), &[0, 2, 4]);
        assert_eq!(AffinePerm::epsilon(3, 1).window(), &[4, 2, 3]);
        assert_eq!(AffinePerm::epsilon(3, 1).length(), 2);
        assert_eq!(AffinePerm::rho_pow(3, -2).length(), 0);
        assert!(AffinePerm::from_window(&[1, 3]).is_err());
    }

    #[test]
    fn length_equals_inversions() {
        for w in [p(&[4, 2, 3]), p(&[3, -1, 4]), p(&[0, 5, 1]), p(&[2, 1, 7, -4])] {
            assert_eq!(w.length() as usize, w.inversions().len(), "{}", w);
        }
    }

    #[test]
    fn epsilon_factorisation() {
        // ε_k = ρ s_{r+k-2} ⋯ s_{k+1} s_k
        let r = 4;
        for k in 1..=r {
            let mut w = AffinePerm::rho(r);
            for i in (k as i32..=(r + k - 2) as i32).rev() {
                w = w.compose(&AffinePerm::s(r, i));
            }
            assert_eq!(w, AffinePerm::epsilon(r, k));
        }
    }

    #[test]
    fn reduced_words_rebuild() {
        for w in [p(&[4, 2, 3]), p(&[3, -1, 4]), p(&[0, 5, 1]), p(&[2, 1, 7, -4]), p(&[5, 6, 7])] {
            let (a, word) = w.reduced_word();
            assert_eq!(word.len() as u32, w.length());
            let mut x = AffinePerm::rho_pow(w.r(), a);
            for &k in &word {
                x = x.mul_s(k);
            }
            assert_eq!(x, w);
        }
    }

    #[test]
    fn coset_reps() {
        let id = AffinePerm::identity(2);
        assert_eq!(min_coset_rep(&[2, 0], &AffinePerm::s(2, 1), &[2, 0]), id);
        let w = p(&[3, -1, 4]);
        assert_eq!(min_coset_rep(&[1, 1, 1], &w, &[1, 1, 1]), w);
        let d = min_coset_rep(&[2, 1], &w, &[1, 2]);
        assert!(is_min_rep(&d, &[2, 1], &[1, 2]));
    }

    #[test]
    fn jmath_examples() {
        let lam = [2, 1, 0];
        let id = AffinePerm::identity(3);
        assert_eq!(jmath(&lam, &id, &lam).unwrap(), PeriodicMatrix::diag(&lam));
        // n = r: A_w has a_{k,l} = δ_{k, w(l)}
        let w = p(&[3, -1, 4]);
        let a = jmath(&[1, 1, 1], &w, &[1, 1, 1]).unwrap();
        let expect = PeriodicMatrix::from_entries(3, (1..=3).map(|l| (w.apply(l), l, 1)));
        assert_eq!(a, expect);
        assert_eq!(jmath(&[1, 1, 1], &w.inverse(), &[1, 1, 1]).unwrap(), a.transpose());
    }

    #[test]
    fn jmath_round_trip() {
        let lam = [2, 1];
        let mu = [1, 2];
        for w in young_subgroup(&[3]).iter().flat_map(|x| {
            (-1..=1).map(move |k| x.compose(&AffinePerm::epsilon(3, 1).compose(&AffinePerm::rho_pow(3, k))))
        }) {
            let d = min_coset_rep(&lam, &w, &mu);
            let a = jmath(&lam, &d, &mu).unwrap();
            assert_eq!(jmath_unchecked(&lam, &w, &mu), a);
            let (l2, d2, m2) = jmath_inv(&a).unwrap();
            assert_eq!((l2.as_slice(), d2, m2.as_slice()), (&lam[..], d, &mu[..]));
            assert_eq!(jmath(&mu, &d.inverse(), &lam).unwrap(), a.transpose());
        }
    }

    #[test]
    fn double_cosets() {
        let lam = [2, 1];
        let id = AffinePerm::identity(3);
        let els = double_coset_elements(&lam, &id, &lam);
        assert_eq!(els.len(), young_subgroup(&lam).len());
        let d = p(&[2, 4, 0]);
        let d = min_coset_rep(&lam, &d, &[1, 2]);
        for w in double_coset_elements(&lam, &d, &[1, 2]) {
            let (w1, d2, w2) = decompose(&w, &lam, &[1, 2]).unwrap();
            assert_eq!(d2, d);
            assert_eq!(w.length(), w1.length() + d.length() + w2.length());
        }
        assert_eq!(longest_length(&[3, 2]), 4);
        let w0 = young_subgroup(&[3, 2]).into_iter().map(|w| w.length()).max().unwrap();
        assert_eq!(w0, 4);
    }

    #[test]
    fn intersection_examples() {
        let id = AffinePerm::identity(3);
        assert_eq!(coset_intersection(&[2, 1], &id, &[2, 1]), vec![2, 1]);
        // ro = co = (1,1), off-diagonal
        let a = PeriodicMatrix::from_entries(2, [(1, 2, 1), (2, 3, 1)]);
        let (l, d, m) = jmath_inv(&a).unwrap();
        assert_eq!(coset_intersection(&l, &d, &m), vec![1, 1]);
    }
}
