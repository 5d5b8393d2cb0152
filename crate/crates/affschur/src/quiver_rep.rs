//! Periodic matrices and nilpotent representations of the cyclic quiver
//! with vertices `Z/nZ` and arrows `i -> i+1`.
//!
//! A strictly upper triangular periodic matrix `A` encodes the module
//! `⊕ a_{i,j} S_i[j-i]`, where `S_i[l]` is the uniserial module of length `l`
//! with top `S_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::LaurentPoly;
use crate::Error;

/// Periodic dimension vectors, weights and compositions are stored as their
/// `n` entries `λ_1, ..., λ_n`.
pub type DimVector = Vec<i32>;

/// `λ_i` for arbitrary `i ∈ Z`, using periodicity.
pub fn pget(v: &[i32], i: i32) -> i32 {
    v[(i - 1).rem_euclid(v.len() as i32) as usize]
}

/// The `i`-th unit vector `e_i` of `Z^n`, `i` read modulo `n`.
pub fn unit(n: usize, i: i32) -> DimVector {
    let mut v = vec![0; n];
    v[(i - 1).rem_euclid(n as i32) as usize] = 1;
    v
}

pub fn vadd(a: &[i32], b: &[i32]) -> DimVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[i32], b: &[i32]) -> DimVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum()
}

/// `(τλ)_i = λ_{i-1}`.
pub fn vtau(a: &[i32]) -> DimVector {
    let n = a.len() as i32;
    (1..=n).map(|i| pget(a, i - 1)).collect()
}

/// Reduces a row index into `[1, n]`, returning the reduced row and the
/// multiple of `n` that was removed.
fn norm_row(n: usize, i: i32) -> (i32, i32) {
    let n = n as i32;
    let i0 = (i - 1).rem_euclid(n) + 1;
    (i0, (i - i0) / n)
}

/// An `n`-periodic `Z × Z` integer matrix with finitely many nonzero entries
/// per row, stored through its rows `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicMatrix {
    n: usize,
    entries: Vec<(i32, i32, i32)>,
}

impl PeriodicMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        PeriodicMatrix { n, entries: Vec::new() }
    }

    /// Builds a matrix from `(i, j, a)` triples with arbitrary `i`; triples
    /// landing on the same periodic position are summed.
    pub fn from_entries<I: IntoIterator<Item = (i32, i32, i32)>>(n: usize, it: I) -> Self {
        let mut m = Self::zero(n);
        for (i, j, a) in it {
            m.add_entry(i, j, a);
        }
        m
    }

    /// The elementary periodic matrix `E^△_{i,j}`.
    pub fn elem(n: usize, i: i32, j: i32) -> Self {
        Self::from_entries(n, [(i, j, 1)])
    }

    pub fn diag(lambda: &[i32]) -> Self {
        Self::from_entries(lambda.len(), lambda.iter().enumerate().map(|(k, &a)| (k as i32 + 1, k as i32 + 1, a)))
    }

    /// The semisimple module `⊕ λ_i S_i` as a matrix.
    pub fn semisimple(lambda: &[i32]) -> Self {
        Self::from_entries(lambda.len(), lambda.iter().enumerate().map(|(k, &a)| (k as i32 + 1, k as i32 + 2, a)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero entries `(i, j, a)` with `1 <= i <= n`, sorted.
    pub fn entries(&self) -> &[(i32, i32, i32)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: i32, j: i32) -> i32 {
        let (i0, b) = norm_row(self.n, i);
        let j0 = j - b * self.n as i32;
        match self.entries.binary_search_by(|e| (e.0, e.1).cmp(&(i0, j0))) {
            Ok(k) => self.entries[k].2,
            Err(_) => 0,
        }
    }

    pub fn add_entry(&mut self, i: i32, j: i32, a: i32) {
        if a == 0 {
            return;
        }
        let (i0, b) = norm_row(self.n, i);
        let j0 = j - b * self.n as i32;
        match self.entries.binary_search_by(|e| (e.0, e.1).cmp(&(i0, j0))) {
            Ok(k) => {
                self.entries[k].2 += a;
                if self.entries[k].2 == 0 {
                    self.entries.remove(k);
                }
            }
            Err(k) => self.entries.insert(k, (i0, j0, a)),
        }
    }

    pub fn with_entry(&self, i: i32, j: i32, a: i32) -> Self {
        let mut m = self.clone();
        m.add_entry(i, j, a);
        m
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut m = self.clone();
        for &(i, j, a) in &other.entries {
            m.add_entry(i, j, a);
        }
        m
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut m = self.clone();
        for &(i, j, a) in &other.entries {
            m.add_entry(i, j, -a);
        }
        m
    }

    pub fn scaled(&self, c: i32) -> Self {
        Self::from_entries(self.n, self.entries.iter().map(|&(i, j, a)| (i, j, a * c)))
    }

    pub fn plus_diag(&self, lambda: &[i32]) -> Self {
        self.plus(&Self::diag(lambda))
    }

    /// Row sums `ro(A)`.
    pub fn ro(&self) -> DimVector {
        let mut v = vec![0; self.n];
        for &(i, _, a) in &self.entries {
            v[(i - 1) as usize] += a;
        }
        v
    }

    /// Column sums `co(A)`.
    pub fn co(&self) -> DimVector {
        let mut v = vec![0; self.n];
        for &(_, j, a) in &self.entries {
            v[(j - 1).rem_euclid(self.n as i32) as usize] += a;
        }
        v
    }

    /// `σ(A) = Σ_{1<=i<=n, j} a_{i,j}`.
    pub fn sigma(&self) -> i32 {
        self.entries.iter().map(|e| e.2).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.n, self.entries.iter().map(|&(i, j, a)| (j, i, a)))
    }

    /// Diagonal `(a_{1,1}, ..., a_{n,n})`.
    pub fn diagonal(&self) -> DimVector {
        (1..=self.n as i32).map(|i| self.get(i, i)).collect()
    }

    pub fn upper(&self) -> Self {
        PeriodicMatrix { n: self.n, entries: self.entries.iter().copied().filter(|e| e.1 > e.0).collect() }
    }

    pub fn lower(&self) -> Self {
        PeriodicMatrix { n: self.n, entries: self.entries.iter().copied().filter(|e| e.1 < e.0).collect() }
    }

    pub fn offdiag(&self) -> Self {
        PeriodicMatrix { n: self.n, entries: self.entries.iter().copied().filter(|e| e.1 != e.0).collect() }
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries.iter().all(|e| e.2 >= 0)
    }

    /// Member of `Θ^+`: nonnegative and strictly upper triangular.
    pub fn is_upper(&self) -> bool {
        self.entries.iter().all(|e| e.2 >= 0 && e.1 > e.0)
    }

    /// Member of `Θ^-`.
    pub fn is_lower(&self) -> bool {
        self.entries.iter().all(|e| e.2 >= 0 && e.1 < e.0)
    }

    /// Member of `Θ^±` (nonnegative, zero diagonal).
    pub fn is_zero_diag(&self) -> bool {
        self.entries.iter().all(|e| e.2 >= 0 && e.1 != e.0)
    }

    /// `max |j - i|` over nonzero entries.
    pub fn bandwidth(&self) -> i32 {
        self.entries.iter().map(|e| (e.1 - e.0).abs()).max().unwrap_or(0)
    }

    /// Canonical text form `{(i,j):a,...}`.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self.entries.iter().map(|(i, j, a)| format!("({},{}):{}", i, j, a)).collect();
        format!("{{{}}}", body.join(","))
    }

    /// Parses `{(i,j):a,...}`; the empty matrix is `{}`.
    pub fn parse(n: usize, s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("matrix must be braced: `{}`", s)))?;
        let mut m = Self::zero(n);
        if inner.is_empty() {
            return Ok(m);
        }
        let mut rest = inner;
        while !rest.is_empty() {
            let close = rest.find(')').ok_or_else(|| Error::Parse(format!("bad matrix `{}`", s)))?;
            let pos = rest[..close]
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("bad matrix `{}`", s)))?;
            let ij: Vec<&str> = pos.split(',').collect();
            if ij.len() != 2 {
                return Err(Error::Parse(format!("bad index `({})`", pos)));
            }
            let i: i32 = ij[0].parse().map_err(|_| Error::Parse(format!("bad index `{}`", ij[0])))?;
            let j: i32 = ij[1].parse().map_err(|_| Error::Parse(format!("bad index `{}`", ij[1])))?;
            let after = rest[close + 1..]
                .strip_prefix(':')
                .ok_or_else(|| Error::Parse(format!("missing `:` in `{}`", s)))?;
            let end = after.find(',').unwrap_or(after.len());
            let a: i32 = after[..end].parse().map_err(|_| Error::Parse(format!("bad entry `{}`", &after[..end])))?;
            m.add_entry(i, j, a);
            rest = if end < after.len() { &after[end + 1..] } else { "" };
        }
        Ok(m)
    }
}

impl fmt::Debug for PeriodicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for PeriodicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<(i32, i32, i32)>,
}

impl Serialize for PeriodicMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson { n: self.n, entries: self.entries.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodicMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        if m.n == 0 {
            return Err(serde::de::Error::custom("n must be positive"));
        }
        Ok(PeriodicMatrix::from_entries(m.n, m.entries))
    }
}

// ---------------------------------------------------------------------------
// multisegments

/// A multisegment `Σ [i; l)`, kept as a sorted list with repetition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Multisegment {
    pub n: usize,
    pub segments: Vec<(i32, i32)>,
}

impl Multisegment {
    pub fn from_matrix(a: &PeriodicMatrix) -> Result<Self, Error> {
        require_upper(a)?;
        let mut segments = Vec::new();
        for &(i, j, c) in a.entries() {
            for _ in 0..c {
                segments.push((i, j - i));
            }
        }
        Ok(Multisegment { n: a.n(), segments })
    }

    pub fn to_matrix(&self) -> PeriodicMatrix {
        PeriodicMatrix::from_entries(self.n, self.segments.iter().map(|&(i, l)| (i, i + l, 1)))
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.segments.iter().map(|(i, l)| format!("[{};{})", i, l)).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for Multisegment {
    type Err = Error;
    /// Parses `n:[i;l)+[i';l')`; the prefix `n:` is mandatory.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (n, body) = s.split_once(':').ok_or_else(|| Error::Parse("expected `n:` prefix".into()))?;
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad n `{}`", n)))?;
        let mut segments = Vec::new();
        if body != "0" && !body.is_empty() {
            for part in body.split('+') {
                let inner = part
                    .strip_prefix('[')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad segment `{}`", part)))?;
                let (i, l) = inner.split_once(';').ok_or_else(|| Error::Parse(format!("bad segment `{}`", part)))?;
                let i: i32 = i.parse().map_err(|_| Error::Parse(format!("bad segment `{}`", part)))?;
                let l: i32 = l.parse().map_err(|_| Error::Parse(format!("bad segment `{}`", part)))?;
                if l < 1 {
                    return Err(Error::Parse(format!("segment length must be positive: `{}`", part)));
                }
                segments.push(((i - 1).rem_euclid(n as i32) + 1, l));
            }
        }
        segments.sort();
        Ok(Multisegment { n, segments })
    }
}

// ---------------------------------------------------------------------------
// representation-theoretic invariants

fn require_upper(a: &PeriodicMatrix) -> Result<(), Error> {
    if a.is_upper() {
        Ok(())
    } else {
        Err(Error::WrongShape(format!("{} is not in Θ^+", a)))
    }
}

/// `𝐝(A) = Σ a_{i,j}(e_i + ... + e_{j-1})`.
pub fn dim_vector(a: &PeriodicMatrix) -> Result<DimVector, Error> {
    require_upper(a)?;
    let n = a.n();
    let mut d = vec![0; n];
    for &(i, j, c) in a.entries() {
        for k in i..j {
            d[(k - 1).rem_euclid(n as i32) as usize] += c;
        }
    }
    Ok(d)
}

/// `𝔡(A) = Σ a_{i,j}(j - i)`, the dimension of `M(A)`.
pub fn total_dim(a: &PeriodicMatrix) -> Result<i32, Error> {
    require_upper(a)?;
    Ok(a.entries().iter().map(|&(i, j, c)| c * (j - i)).sum())
}

/// `⟨a, b⟩ = Σ a_i b_i - Σ a_i b_{i+1}`.
pub fn euler_form(a: &[i32], b: &[i32]) -> i64 {
    let n = a.len() as i32;
    (1..=n).map(|i| pget(a, i) as i64 * (pget(b, i) - pget(b, i + 1)) as i64).sum()
}

/// `(a, b) = ⟨a, b⟩ + ⟨b, a⟩`.
pub fn sym_euler(a: &[i32], b: &[i32]) -> i64 {
    euler_form(a, b) + euler_form(b, a)
}

/// `dim Hom(S_i[l], S_j[m])`: a map is fixed by the image of the top of
/// `S_i[l]`, which sits at a depth `k` of `S_j[m]` over vertex `i` and must be
/// killed by paths of length `l`.
pub fn hom_indec(n: usize, i: i32, l: i32, j: i32, m: i32) -> i32 {
    let n = n as i32;
    let lo = (m - l).max(0);
    (lo..m).filter(|k| (j + k - i).rem_euclid(n) == 0).count() as i32
}

pub fn hom_dim(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<i32, Error> {
    require_upper(a)?;
    require_upper(b)?;
    let n = a.n();
    let mut total = 0;
    for &(i, j, x) in a.entries() {
        for &(k, l, y) in b.entries() {
            total += x * y * hom_indec(n, i, j - i, k, l - k);
        }
    }
    Ok(total)
}

pub fn end_dim(a: &PeriodicMatrix) -> Result<i32, Error> {
    hom_dim(a, a)
}

/// `dim Ext^1(M(A), M(B)) = dim Hom - ⟨𝐝(A), 𝐝(B)⟩`.
pub fn ext_dim(a: &PeriodicMatrix, b: &PeriodicMatrix) -> Result<i32, Error> {
    let h = hom_dim(a, b)? as i64;
    let e = h - euler_form(&dim_vector(a)?, &dim_vector(b)?);
    if e < 0 {
        return Err(Error::InternalInconsistency(format!("negative Ext between {} and {}", a, b)));
    }
    Ok(e as i32)
}

/// `𝔞_A`, the polynomial counting automorphisms of `M(A)` at `v^2 = q`.
pub fn aut_poly(a: &PeriodicMatrix) -> Result<LaurentPoly, Error> {
    let m = end_dim(a)? - a.entries().iter().map(|e| e.2 * e.2).sum::<i32>();
    let mut out = LaurentPoly::v(2 * m);
    for &(_, _, c) in a.entries() {
        for k in 0..c {
            out = out * LaurentPoly::from_terms([(2 * c, 1), (2 * k, -1)]);
        }
    }
    Ok(out)
}

/// Dimension vector of the socle: `S_i[l]` has socle `S_{i+l-1}`.
pub fn socle(a: &PeriodicMatrix) -> Result<DimVector, Error> {
    require_upper(a)?;
    let n = a.n();
    let mut d = vec![0; n];
    for &(_, j, c) in a.entries() {
        d[(j - 2).rem_euclid(n as i32) as usize] += c;
    }
    Ok(d)
}

pub fn is_socle_squarefree(a: &PeriodicMatrix) -> Result<bool, Error> {
    Ok(socle(a)?.iter().all(|&x| x <= 1))
}

/// The Auslander–Reiten translate: `b_{i,j} = a_{i-1,j-1}`.
pub fn ar_translate(a: &PeriodicMatrix) -> PeriodicMatrix {
    PeriodicMatrix::from_entries(a.n(), a.entries().iter().map(|&(i, j, c)| (i + 1, j + 1, c)))
}

fn floor_div(a: i32, b: i32) -> i32 {
    a.div_euclid(b)
}

fn ceil_div(a: i32, b: i32) -> i32 {
    -((-a).div_euclid(b))
}

/// `σ_{i,j}(A)`: for `i < j` the sum of `a_{s,t}` over `s <= i, t >= j`, and
/// for `i > j` over `s >= i, t <= j`.
pub fn sigma_ij(a: &PeriodicMatrix, i: i32, j: i32) -> i64 {
    assert!(i != j);
    let n = a.n() as i32;
    let mut total = 0i64;
    for &(s, t, c) in a.entries() {
        let count = if i < j {
            floor_div(i - s, n) - ceil_div(j - t, n) + 1
        } else {
            floor_div(j - t, n) - ceil_div(i - s, n) + 1
        };
        if count > 0 {
            total += count as i64 * c as i64;
        }
    }
    total
}

/// `B ⪯ A` iff `σ_{i,j}(B) <= σ_{i,j}(A)` for all `i != j`.
pub fn preceq(b: &PeriodicMatrix, a: &PeriodicMatrix) -> bool {
    let n = a.n() as i32;
    let w = a.bandwidth().max(b.bandwidth()) + 1;
    for i in 1..=n {
        for j in (i - w)..=(i + w) {
            if j != i && sigma_ij(b, i, j) > sigma_ij(a, i, j) {
                return false;
            }
        }
    }
    true
}

/// Degeneration test through Hom-dimensions against indecomposables.
pub fn deg_leq(b: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<bool, Error> {
    if dim_vector(a)? != dim_vector(b)? {
        return Err(Error::DimMismatch(format!("{} vs {}", b, a)));
    }
    let n = a.n();
    let top = total_dim(a)?.max(1);
    for i in 1..=n as i32 {
        for l in 1..=top {
            let x = PeriodicMatrix::elem(n, i, i + l);
            if hom_dim(&x, b)? < hom_dim(&x, a)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `A` is aperiodic if for each `l >= 1` some `a_{i,i+l}` vanishes.
pub fn is_aperiodic(a: &PeriodicMatrix) -> bool {
    let n = a.n() as i32;
    let w = a.bandwidth();
    (1..=w).all(|l| (1..=n).any(|i| a.get(i, i + l) == 0))
}

/// All `A ∈ Θ^+` with `𝐝(A) = d`.
pub fn upper_with_dim(d: &[i32]) -> Vec<PeriodicMatrix> {
    let n = d.len();
    let total: i32 = d.iter().sum();
    let mut segs = Vec::new();
    for i in 1..=n as i32 {
        for l in 1..=total {
            segs.push((i, l));
        }
    }
    let mut out = Vec::new();
    let mut rem = d.to_vec();
    let mut chosen = Vec::new();
    fn rec(
        n: usize,
        k: usize,
        segs: &[(i32, i32)],
        rem: &mut Vec<i32>,
        chosen: &mut Vec<(i32, i32, i32)>,
        out: &mut Vec<PeriodicMatrix>,
    ) {
        if rem.iter().all(|&x| x == 0) {
            out.push(PeriodicMatrix::from_entries(n, chosen.iter().copied()));
            return;
        }
        if k == segs.len() {
            return;
        }
        let (i, l) = segs[k];
        let mut mult = 0;
        loop {
            // try the current multiplicity, then add one more copy
            rec(n, k + 1, segs, rem, chosen, out);
            let ok = (0..l).all(|t| rem[(i + t - 1).rem_euclid(n as i32) as usize] > 0);
            let mut fits = ok;
            if fits {
                for t in 0..l {
                    rem[(i + t - 1).rem_euclid(n as i32) as usize] -= 1;
                }
                if rem.iter().any(|&x| x < 0) {
                    fits = false;
                }
            }
            if !fits {
                if ok {
                    for t in 0..l {
                        rem[(i + t - 1).rem_euclid(n as i32) as usize] += 1;
                    }
                }
                break;
            }
            mult += 1;
            chosen.push((i, i + l, 1));
        }
        for _ in 0..mult {
            chosen.pop();
            for t in 0..l {
                rem[(i + t - 1).rem_euclid(n as i32) as usize] += 1;
            }
        }
    }
    rec(n, 0, &segs, &mut rem, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All dimension vectors `0 <= e <= d`.
pub fn dims_below(d: &[i32]) -> Vec<DimVector> {
    let mut out = vec![vec![]];
    for &x in d {
        let mut next = Vec::new();
        for v in &out {
            for k in 0..=x {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// All `A ∈ Θ^+` with `𝔡(A) = total`.
pub fn upper_with_total(n: usize, total: i32) -> Vec<PeriodicMatrix> {
    let mut out = Vec::new();
    for d in dims_below(&vec![total; n]) {
        if d.iter().sum::<i32>() == total {
            out.extend(upper_with_dim(&d));
        }
    }
    out.sort();
    out
}

/// The explicit module `M(A)`: a basis made of segment positions and the
/// arrow action as a partial map on basis indices.
#[derive(Clone, Debug)]
pub struct ModuleShape {
    pub n: usize,
    /// vertex (0-based) of every basis vector
    pub vertex: Vec<usize>,
    /// image of every basis vector under the outgoing arrow
    pub arrow: Vec<Option<usize>>,
    /// basis indices living over each vertex, in increasing order
    pub at_vertex: Vec<Vec<usize>>,
}

impl ModuleShape {
    pub fn new(a: &PeriodicMatrix) -> Result<Self, Error> {
        require_upper(a)?;
        let n = a.n();
        let mut vertex = Vec::new();
        let mut arrow = Vec::new();
        for &(i, j, c) in a.entries() {
            let l = (j - i) as usize;
            for _ in 0..c {
                let start = vertex.len();
                for k in 0..l {
                    vertex.push((i - 1 + k as i32).rem_euclid(n as i32) as usize);
                    arrow.push(if k + 1 < l { Some(start + k + 1) } else { None });
                }
            }
        }
        let mut at_vertex = vec![Vec::new(); n];
        for (b, &x) in vertex.iter().enumerate() {
            at_vertex[x].push(b);
        }
        Ok(ModuleShape { n, vertex, arrow, at_vertex })
    }

    pub fn dim(&self) -> usize {
        self.vertex.len()
    }

    /// Image of a basis vector under a path of length `l`.
    pub fn path(&self, mut b: usize, l: usize) -> Option<usize> {
        for _ in 0..l {
            b = self.arrow[b]?;
        }
        Some(b)
    }
}

/// Recovers the matrix of a module from its rank invariants:
/// `rank[i][l]` is the rank of the path map of length `l` starting at vertex
/// `i` (0-based), with `rank[i][0] = dim V_i`.
pub fn from_ranks(n: usize, rank: &[Vec<i32>]) -> PeriodicMatrix {
    let maxl = rank[0].len();
    let r = |i: i32, l: usize| -> i32 {
        if l >= maxl {
            0
        } else {
            rank[i.rem_euclid(n as i32) as usize][l]
        }
    };
    let mut m = PeriodicMatrix::zero(n);
    for i in 0..n as i32 {
        for len in 1..=maxl {
            let here = r(i, len - 1) - r(i, len);
            let from_prev = r(i - 1, len) - r(i - 1, len + 1);
            let c = here - from_prev;
            if c != 0 {
                m.add_entry(i + 1, i + 1 + len as i32, c);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn e(n: usize, i: i32, j: i32) -> PeriodicMatrix {
        PeriodicMatrix::elem(n, i, j)
    }

    /// Rank of a rational matrix by Gaussian elimination.
    fn rank_q(mut rows: Vec<Vec<BigRational>>) -> usize {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
            rows.swap(rank, p);
            let piv = rows[rank][c].clone();
            for r in 0..rows.len() {
                if r != rank && !rows[r][c].is_zero() {
                    let f = &rows[r][c] / &piv;
                    for k in 0..ncols {
                        let t = &rows[rank][k] * &f;
                        rows[r][k] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Dimension of the space of intertwiners `M(A) -> M(B)`, solving
    /// `f_{i+1} α_i = β_i f_i` over Q.
    fn intertwiner_dim(a: &PeriodicMatrix, b: &PeriodicMatrix) -> usize {
        let sa = ModuleShape::new(a).unwrap();
        let sb = ModuleShape::new(b).unwrap();
        let n = a.n();
        // unknowns: f_v[p][q] for p in at_vertex_B(v), q in at_vertex_A(v)
        let mut offset = vec![0usize; n];
        let mut nvars = 0;
        for v in 0..n {
            offset[v] = nvars;
            nvars += sa.at_vertex[v].len() * sb.at_vertex[v].len();
        }
        let var = |v: usize, p: usize, q: usize| offset[v] + p * sa.at_vertex[v].len() + q;
        let pos = |s: &ModuleShape, x: usize| s.at_vertex[s.vertex[x]].iter().position(|&y| y == x).unwrap();
        let mut eqs = Vec::new();
        for v in 0..n {
            let w = (v + 1) % n;
            for (qi, &qa) in sa.at_vertex[v].iter().enumerate() {
                for (pi, &pb) in sb.at_vertex[w].iter().enumerate() {
                    // coefficient of basis pb in f_w(α(qa)) - β(f_v(qa))
                    let mut row = vec![BigRational::zero(); nvars];
                    if let Some(img) = sa.arrow[qa] {
                        row[var(w, pi, pos(&sa, img))] += BigRational::one();
                    }
                    for (ri, &rb) in sb.at_vertex[v].iter().enumerate() {
                        if sb.arrow[rb] == Some(pb) {
                            row[var(v, ri, qi)] -= BigRational::one();
                        }
                    }
                    eqs.push(row);
                }
            }
        }
        nvars - if eqs.is_empty() { 0 } else { rank_q(eqs) }
    }

    #[test]
    fn hom_rule_matches_intertwiner_solver() {
        for n in 2..=3usize {
            for i in 1..=n as i32 {
                for j in 1..=n as i32 {
                    for l in 1..=3 * n as i32 {
                        for m in 1..=3 * n as i32 {
                            let a = e(n, i, i + l);
                            let b = e(n, j, j + m);
                            assert_eq!(
                                hom_dim(&a, &b).unwrap() as usize,
                                intertwiner_dim(&a, &b),
                                "n={} S_{}[{}] -> S_{}[{}]",
                                n,
                                i,
                                l,
                                j,
                                m
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dims() {
        assert_eq!(dim_vector(&e(2, 1, 2)).unwrap(), vec![1, 0]);
        assert_eq!(total_dim(&e(2, 1, 2)).unwrap(), 1);
        assert_eq!(dim_vector(&e(2, 1, 3)).unwrap(), vec![1, 1]);
        assert_eq!(total_dim(&e(2, 1, 3)).unwrap(), 2);
        assert_eq!(dim_vector(&PeriodicMatrix::zero(3)).unwrap(), vec![0, 0, 0]);
        assert!(dim_vector(&e(2, 2, 1)).is_err());
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_form(&[1, 0], &[0, 1]), -1);
        for n in 2..6 {
            let d = vec![1; n];
            assert_eq!(euler_form(&d, &d), 0);
        }
        assert_eq!(sym_euler(&[1, 0, 0], &[1, 0, 0]), 2);
    }

    #[test]
    fn end_dims_of_indecomposables() {
        for n in 2..=4usize {
            for l in 1..=4 * n as i32 {
                let (q, r) = (l / n as i32, l % n as i32);
                let want = if r == 0 { q } else { q + 1 };
                assert_eq!(end_dim(&e(n, 1, 1 + l)).unwrap(), want);
            }
        }
        assert_eq!(hom_dim(&e(2, 1, 2), &e(2, 2, 3)).unwrap(), 0);
        assert_eq!(hom_dim(&e(2, 1, 3), &e(2, 1, 2)).unwrap(), 1);
    }

    #[test]
    fn euler_form_is_hom_minus_ext() {
        for n in 2..=3 {
            let all: Vec<_> = (0..=3).flat_map(|t| upper_with_total(n, t)).collect();
            for a in &all {
                for b in &all {
                    let h = hom_dim(a, b).unwrap() as i64;
                    let x = ext_dim(a, b).unwrap() as i64;
                    assert_eq!(h - x, euler_form(&dim_vector(a).unwrap(), &dim_vector(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn end_dim_uniserial_gluing() {
        for n in 2..=3usize {
            let nn = n as i32;
            for l in 1..=nn {
                for t in (l + 2)..=(l + 3 * nn) {
                    for s in (l + 1)..t {
                        let (lt, ls, st) = (e(n, l, t), e(n, l, s), e(n, s, t));
                        let rhs = end_dim(&ls).unwrap() as i64
                            + end_dim(&st).unwrap() as i64
                            + euler_form(&dim_vector(&ls).unwrap(), &dim_vector(&st).unwrap());
                        assert_eq!(end_dim(&lt).unwrap() as i64, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn aut_poly_values() {
        assert_eq!(aut_poly(&e(2, 1, 2)).unwrap(), "v^2 - 1".parse().unwrap());
        let two = e(2, 1, 2).scaled(2);
        let want: LaurentPoly = "v^4 - 1".parse::<LaurentPoly>().unwrap() * "v^4 - v^2".parse::<LaurentPoly>().unwrap();
        assert_eq!(aut_poly(&two).unwrap(), want);
        assert!(aut_poly(&PeriodicMatrix::zero(2)).unwrap().is_one());
    }

    #[test]
    fn socle_values() {
        assert_eq!(socle(&e(2, 1, 3)).unwrap(), vec![0, 1]);
        let delta = PeriodicMatrix::semisimple(&[1, 1, 1]);
        assert_eq!(socle(&delta).unwrap(), vec![1, 1, 1]);
        assert!(!is_socle_squarefree(&e(2, 1, 2).scaled(2)).unwrap());
    }

    #[test]
    fn socle_matches_kernel_of_arrows() {
        for n in 2..=3 {
            for t in 1..=4 {
                for a in upper_with_total(n, t) {
                    let s = ModuleShape::new(&a).unwrap();
                    let mut kernel = vec![0; n];
                    for b in 0..s.dim() {
                        if s.arrow[b].is_none() {
                            kernel[s.vertex[b]] += 1;
                        }
                    }
                    assert_eq!(socle(&a).unwrap(), kernel);
                }
            }
        }
    }

    #[test]
    fn translate() {
        assert_eq!(ar_translate(&e(2, 1, 2)), e(2, 2, 3));
        let a = e(3, 1, 3).plus(&e(3, 2, 6));
        let mut b = a.clone();
        for _ in 0..3 {
            b = ar_translate(&b);
        }
        assert_eq!(a, b);
        let lam = [2, 0, 1];
        assert_eq!(ar_translate(&PeriodicMatrix::semisimple(&lam)), PeriodicMatrix::semisimple(&vtau(&lam)));
    }

    #[test]
    fn orders() {
        let delta = PeriodicMatrix::semisimple(&[1, 1]);
        let a = e(2, 1, 3);
        assert!(preceq(&a, &a));
        assert!(preceq(&delta, &a));
        assert!(!preceq(&a, &delta));
        assert!(deg_leq(&delta, &a).unwrap());
        assert!(!deg_leq(&a, &delta).unwrap());
        assert!(!is_aperiodic(&delta));
        assert!(is_aperiodic(&e(2, 1, 2)));
    }

    #[test]
    fn degeneration_order_equals_sigma_order() {
        for n in 2..=3 {
            for t in 1..=4 {
                let mut by_dim: std::collections::BTreeMap<DimVector, Vec<PeriodicMatrix>> = Default::default();
                for a in upper_with_total(n, t) {
                    by_dim.entry(dim_vector(&a).unwrap()).or_default().push(a);
                }
                for group in by_dim.values() {
                    for a in group {
                        for b in group {
                            assert_eq!(deg_leq(b, a).unwrap(), preceq(b, a), "{} vs {}", b, a);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // n = 2, d = (1,1): S1+S2, S1[2], S2[2]
        assert_eq!(upper_with_dim(&[1, 1]).len(), 3);
        assert_eq!(upper_with_dim(&[0, 0]), vec![PeriodicMatrix::zero(2)]);
        for a in upper_with_dim(&[2, 1, 1]) {
            assert_eq!(dim_vector(&a).unwrap(), vec![2, 1, 1]);
        }
    }

    #[test]
    fn ranks_recover_matrix() {
        for n in 2..=3 {
            for t in 0..=4 {
                for a in upper_with_total(n, t) {
                    let s = ModuleShape::new(&a).unwrap();
                    let maxl = t as usize + 1;
                    let rank: Vec<Vec<i32>> = (0..n)
                        .map(|v| {
                            (0..maxl)
                                .map(|l| s.at_vertex[v].iter().filter(|&&b| s.path(b, l).is_some()).count() as i32)
                                .collect()
                        })
                        .collect();
                    assert_eq!(from_ranks(n, &rank), a);
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let a = e(3, 1, 3).plus(&e(3, 2, 3).scaled(2));
        assert_eq!(PeriodicMatrix::parse(3, &a.to_text()).unwrap(), a);
        let ms = Multisegment::from_matrix(&a).unwrap();
        assert_eq!(ms.to_string(), "[1;2)+[2;1)+[2;1)");
        let back: Multisegment = format!("3:{}", ms).parse().unwrap();
        assert_eq!(back.to_matrix(), a);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<PeriodicMatrix>(&j).unwrap(), a);
        assert_eq!(PeriodicMatrix::parse(2, "{(3,5):1}").unwrap(), e(2, 1, 3));
    }
}
