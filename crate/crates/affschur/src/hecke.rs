//! The extended affine Hecke algebra in the basis `T_w`.

use crate::affine_weyl::{young_subgroup, AffinePerm};
use crate::laurent::LaurentPoly;
use crate::lincomb::LinComb;

pub type HeckeElement = LinComb<AffinePerm, LaurentPoly>;

/// Group-algebra elements at `v = 1`.
pub type GroupElement = LinComb<AffinePerm, num_rational::BigRational>;

pub fn t(w: AffinePerm) -> HeckeElement {
    HeckeElement::basis(w)
}

pub fn one(r: usize) -> HeckeElement {
    t(AffinePerm::identity(r))
}

/// `v^2 - 1`.
fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(2, 1), (0, -1)])
}

/// Right multiplication by `T_{s_k}`.
pub fn mul_gen_right(x: &HeckeElement, k: i32) -> HeckeElement {
    let mut out = HeckeElement::zero();
    let qm1 = q_minus_one();
    for (w, c) in x.iter() {
        let ws = w.mul_s(k);
        if w.has_right_descent(k) {
            out.add_term(*w, c * &qm1);
            out.add_term(ws, c.shift(2));
        } else {
            out.add_term(ws, c.clone());
        }
    }
    out
}

/// Right multiplication by `T_ρ^a = T_{ρ^a}`.
pub fn mul_rho_right(x: &HeckeElement, a: i32) -> HeckeElement {
    if a == 0 {
        return x.clone();
    }
    x.iter().map(|(w, c)| (w.compose(&AffinePerm::rho_pow(w.r(), a)), c.clone())).collect()
}

/// `x · T_w`, through `w = ρ^a s_{k_m} ⋯ s_{k_1}`.
pub fn mul_basis_right(x: &HeckeElement, w: &AffinePerm) -> HeckeElement {
    let (a, word) = w.reduced_word();
    let mut acc = mul_rho_right(x, a);
    for k in word {
        acc = mul_gen_right(&acc, k);
    }
    acc
}

pub fn mul(x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (w, c) in y.iter() {
        out.add_scaled(&mul_basis_right(x, w), c);
    }
    out
}

/// `x_λ = Σ_{w ∈ 𝔖_λ} T_w`.
pub fn x_lambda(lambda: &[i32]) -> HeckeElement {
    young_subgroup(lambda).into_iter().map(|w| (w, LaurentPoly::one())).collect()
}

/// `Σ_{w ∈ 𝔖_λ} v^{2ℓ(w)}`.
pub fn poincare(lambda: &[i32]) -> LaurentPoly {
    young_subgroup(lambda).into_iter().map(|w| LaurentPoly::v(2 * w.length() as i32)).fold(LaurentPoly::zero(), |a, b| a + b)
}

/// The image in the group algebra under `v ↦ 1`.
pub fn specialize_v1(x: &HeckeElement) -> GroupElement {
    x.iter()
        .map(|(w, c)| (*w, num_rational::BigRational::from_integer(c.specialize_v1())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(r: usize, i: i32) -> HeckeElement {
        t(AffinePerm::s(r, i))
    }

    #[test]
    fn quadratic_and_braid() {
        let r = 3;
        for k in 1..=3 {
            let sq = mul(&s(r, k), &s(r, k));
            let expect = s(r, k).scale(&q_minus_one()).add(&one(r).scale(&LaurentPoly::v(2)));
            assert_eq!(sq, expect);
            assert_eq!(mul(&one(r), &s(r, k)), s(r, k));
        }
        let lhs = mul(&mul(&s(r, 1), &s(r, 2)), &s(r, 1));
        let rhs = mul(&mul(&s(r, 2), &s(r, 1)), &s(r, 2));
        assert_eq!(lhs, rhs);
        let lhs = mul(&mul(&s(r, 3), &s(r, 1)), &s(r, 3));
        let rhs = mul(&mul(&s(r, 1), &s(r, 3)), &s(r, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_relations() {
        let r = 3;
        let rho = t(AffinePerm::rho(r));
        let rho_inv = t(AffinePerm::rho(r).inverse());
        assert_eq!(mul(&rho, &rho_inv), one(r));
        for k in 1..=3 {
            let lhs = mul(&mul(&rho, &s(r, k)), &rho_inv);
            assert_eq!(lhs, s(r, k + 1));
        }
    }

    #[test]
    fn x_lambda_idempotent() {
        for lam in [vec![2, 1], vec![3], vec![2, 2], vec![1, 1, 1]] {
            let x = x_lambda(&lam);
            assert_eq!(mul(&x, &x), x.scale(&poincare(&lam)));
        }
        assert_eq!(x_lambda(&[1, 1]), one(2));
        assert_eq!(x_lambda(&[2]), one(2).add(&s(2, 1)));
    }

    #[test]
    fn specialization() {
        let w = AffinePerm::epsilon(2, 1);
        let g = specialize_v1(&t(w).scale(&LaurentPoly::v(3)));
        assert_eq!(g.get(&w), num_rational::BigRational::from_integer(1.into()));
    }
}
