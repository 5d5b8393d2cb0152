//! Explicit nilpotent representations over a prime field and filtration
//! counting by brute-force enumeration of graded subspaces.

use std::collections::HashMap;

use crate::quiver_rep::{from_ranks, dim_vector, DimVector, ModuleShape, PeriodicMatrix};
use crate::Error;

/// Row reduction mod `p`; returns the rank and leaves `rows` in reduced
/// echelon form (first `rank` rows).
pub fn rref(rows: &mut Vec<Vec<u32>>, p: u32) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c] as u64;
                for k in 0..ncols {
                    let t = (rows[rank][k] as u64 * f) % p as u64;
                    rows[r][k] = ((rows[r][k] as u64 + p as u64 - t) % p as u64) as u32;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank_mod(rows: &[Vec<u32>], p: u32) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, p)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// All `k`-dimensional subspaces of `F_p^m`, each given by its reduced
/// echelon basis.
pub fn subspaces(m: usize, k: usize, p: u32) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions: (row, col) with col > pivot[row], col not a pivot
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in (pc + 1)..m {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut basis = vec![vec![0u32; m]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                basis[r][pc] = 1;
            }
            for (idx, &(r, c)) in free.iter().enumerate() {
                basis[r][c] = digits[idx];
            }
            out.push(basis);
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        // next combination of pivot columns
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < m - k + i {
                pivots[i] += 1;
                for t in (i + 1)..k {
                    pivots[t] = pivots[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// An explicit representation of `M(C)` over `F_p`. Because the standard
/// basis of `M(C)` is made of segment positions, arrows and their powers act
/// by moving basis vectors, which is what the rank computations use.
#[derive(Clone, Debug)]
pub struct FqModule {
    pub p: u32,
    pub shape: ModuleShape,
    pub dims: DimVector,
    /// `local[b]` = position of basis vector `b` inside its vertex space
    local: Vec<usize>,
}

impl FqModule {
    pub fn new(c: &PeriodicMatrix, p: u32) -> Result<Self, Error> {
        let shape = ModuleShape::new(c)?;
        let dims = dim_vector(c)?;
        let mut local = vec![0; shape.dim()];
        for v in 0..shape.n {
            for (k, &b) in shape.at_vertex[v].iter().enumerate() {
                local[b] = k;
            }
        }
        Ok(FqModule { p, shape, dims, local })
    }

    /// Applies a path of length `l` to a vector over vertex `v`.
    fn path_image(&self, v: usize, x: &[u32], l: usize) -> Vec<u32> {
        let n = self.shape.n;
        let w = (v + l) % n;
        let mut out = vec![0u32; self.dims[w] as usize];
        for (k, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let b = self.shape.at_vertex[v][k];
            if let Some(t) = self.shape.path(b, l) {
                out[self.local[t]] = c;
            }
        }
        out
    }

    fn in_span(&self, rref_rows: &[Vec<u32>], x: &[u32]) -> bool {
        let p = self.p as u64;
        let mut y: Vec<u64> = x.iter().map(|&c| c as u64).collect();
        for row in rref_rows {
            let pc = row.iter().position(|&c| c != 0).unwrap();
            let f = y[pc];
            if f != 0 {
                for k in 0..y.len() {
                    y[k] = (y[k] + p * p - f * row[k] as u64) % p;
                }
            }
        }
        y.iter().all(|&c| c == 0)
    }

    /// Isomorphism types `(N, M/N)` of all submodules `N` with dimension
    /// vector `sub`, with multiplicities.
    pub fn classify_submodules(&self, sub: &[i32]) -> HashMap<(PeriodicMatrix, PeriodicMatrix), u64> {
        let n = self.shape.n;
        let p = self.p;
        let maxl = self.shape.dim() + 1;
        let per_vertex: Vec<Vec<Vec<Vec<u32>>>> =
            (0..n).map(|v| subspaces(self.dims[v] as usize, sub[v] as usize, p)).collect();
        let mut out: HashMap<(PeriodicMatrix, PeriodicMatrix), u64> = HashMap::new();
        let mut choice = vec![0usize; n];
        if per_vertex.iter().any(|x| x.is_empty()) {
            return out;
        }
        loop {
            let parts: Vec<&Vec<Vec<u32>>> = (0..n).map(|v| &per_vertex[v][choice[v]]).collect();
            let stable = (0..n).all(|v| {
                let w = (v + 1) % n;
                parts[v].iter().all(|x| self.in_span(parts[w], &self.path_image(v, x, 1)))
            });
            if stable {
                let mut rs = vec![vec![0i32; maxl]; n];
                let mut rq = vec![vec![0i32; maxl]; n];
                for v in 0..n {
                    for l in 0..maxl {
                        let w = (v + l) % n;
                        let imgs: Vec<Vec<u32>> = parts[v].iter().map(|x| self.path_image(v, x, l)).collect();
                        rs[v][l] = if imgs.is_empty() || self.dims[w] == 0 { 0 } else { rank_mod(&imgs, p) as i32 };
                        let mut rows: Vec<Vec<u32>> = parts[w].clone();
                        for k in 0..self.dims[v] as usize {
                            let mut e = vec![0u32; self.dims[v] as usize];
                            e[k] = 1;
                            rows.push(self.path_image(v, &e, l));
                        }
                        let total = if rows.is_empty() || self.dims[w] == 0 { 0 } else { rank_mod(&rows, p) as i32 };
                        rq[v][l] = total - parts[w].len() as i32;
                    }
                }
                let key = (from_ranks(n, &rs), from_ranks(n, &rq));
                *out.entry(key).or_insert(0) += 1;
            }
            let mut pos = 0;
            while pos < n {
                choice[pos] += 1;
                if choice[pos] < per_vertex[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr_count(m: u64, k: u64, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow((m - i) as u32) - 1;
            den *= q.pow((i + 1) as u32) - 1;
        }
        num / den
    }

    #[test]
    fn subspace_counts_match_grassmannian() {
        for p in [2u32, 3, 5] {
            for m in 0..=4 {
                for k in 0..=m {
                    assert_eq!(subspaces(m, k, p).len() as u64, gr_count(m as u64, k as u64, p as u64));
                }
            }
        }
    }

    #[test]
    fn rank_basics() {
        let rows = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 1]];
        assert_eq!(rank_mod(&rows, 5), 2);
        assert_eq!(rank_mod(&rows, 2), 2);
    }

    #[test]
    fn classify_simple_cases() {
        let n = 2;
        let c = PeriodicMatrix::elem(n, 1, 3);
        let m = FqModule::new(&c, 2).unwrap();
        let res = m.classify_submodules(&[0, 1]);
        assert_eq!(res.len(), 1);
        let ((sub, quo), k) = res.into_iter().next().unwrap();
        assert_eq!(sub, PeriodicMatrix::elem(n, 2, 3));
        assert_eq!(quo, PeriodicMatrix::elem(n, 1, 2));
        assert_eq!(k, 1);
        // S_1[2] has no submodule isomorphic to S_1
        assert!(m.classify_submodules(&[1, 0]).is_empty());
    }
}
