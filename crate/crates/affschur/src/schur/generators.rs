//! Images of Hall algebra elements and of the generators of the double Hall
//! algebra.

use crate::hall::central::central_z;
use crate::hall::d_prime;
use crate::laurent::{Coeff, LaurentPoly, RationalLaurent};
use crate::lincomb::LinComb;
use crate::quiver_rep::PeriodicMatrix;
use crate::Error;

use super::{blm, e_gen, f_gen, kk_pow, SchurElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E(i32),
    F(i32),
    /// `K_i^e`.
    K(i32, i32),
    /// `z_s^+`.
    ZPlus(i32),
    /// `z_s^-`.
    ZMinus(i32),
}

/// `ζ_r^+ : ũ_A ↦ A(0, r)` and `ζ_r^- : ũ_A ↦ ^tA(0, r)`, applied to an
/// element written in the basis `u_A = v^{-d'_A} ũ_A`.
pub fn zeta<C: Coeff>(sign: Sign, x: &LinComb<PeriodicMatrix, C>, r: i32) -> Result<LinComb<PeriodicMatrix, C>, Error> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        let m = match sign {
            Sign::Plus => a.clone(),
            Sign::Minus => a.transpose(),
        };
        let img = blm(&m, &vec![0; a.n()], r);
        let f = C::from_laurent(&LaurentPoly::v(-d_prime(a)?)).cmul(c);
        for (b, p) in img.iter() {
            out.add_term(b.clone(), C::from_laurent(p).cmul(&f));
        }
    }
    Ok(out)
}

fn integral(x: &LinComb<PeriodicMatrix, RationalLaurent>) -> Result<SchurElement, Error> {
    let mut out = SchurElement::zero();
    for (a, c) in x.iter() {
        out.add_term(a.clone(), c.to_laurent()?);
    }
    Ok(out)
}

/// `ξ_r` on the generators: `𝔢_i`, `𝔣_i`, `𝔨_i^e`, `𝔭_s = ζ^+(z_s)` and
/// `𝔮_s = ζ^-(z_s)`.
pub fn xi_gen(g: Generator, n: usize, r: i32) -> Result<SchurElement, Error> {
    Ok(match g {
        Generator::E(i) => e_gen(n, r, i),
        Generator::F(i) => f_gen(n, r, i),
        Generator::K(i, e) => kk_pow(n, r, i, e),
        Generator::ZPlus(s) => integral(&zeta(Sign::Plus, &central_z(n, s)?, r)?)?,
        Generator::ZMinus(s) => integral(&zeta(Sign::Minus, &central_z(n, s)?, r)?)?,
    })
}

/// `τ_r : [A] ↦ [^tA]`.
pub fn tau_r(x: &SchurElement) -> SchurElement {
    x.iter().map(|(a, c)| (a.transpose(), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::super::{bracket, mul_oracle, theta_nr};
    use super::*;
    use crate::hall::{hall_mul, u, u_tilde};
    use crate::quiver_rep::upper_with_total;

    #[test]
    fn zeta_simple_is_e() {
        let (n, r) = (2, 2);
        let x = u_tilde(&PeriodicMatrix::elem(n, 1, 2)).unwrap();
        assert_eq!(zeta(Sign::Plus, &x, r).unwrap(), e_gen(n, r, 1));
        assert_eq!(zeta(Sign::Minus, &x, r).unwrap(), f_gen(n, r, 1));
        let big = u(&PeriodicMatrix::semisimple(&[2, 2]));
        assert!(zeta(Sign::Plus, &big, r).unwrap().is_zero());
    }

    #[test]
    fn zeta_is_multiplicative() {
        for (n, r) in [(2, 2), (2, 3), (3, 2)] {
            let mut basis = Vec::new();
            for t in 1..=2 {
                basis.extend(upper_with_total(n, t));
            }
            for a in &basis {
                for b in &basis {
                    let ab = hall_mul(&u(a), &u(b)).unwrap();
                    let lhs = zeta(Sign::Plus, &ab, r).unwrap();
                    let rhs = mul_oracle(&zeta(Sign::Plus, &u(a), r).unwrap(), &zeta(Sign::Plus, &u(b), r).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "+ {} {}", a, b);
                    // ζ^- is defined on the opposite algebra
                    let lhs = zeta(Sign::Minus, &ab, r).unwrap();
                    let rhs = mul_oracle(&zeta(Sign::Minus, &u(b), r).unwrap(), &zeta(Sign::Minus, &u(a), r).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "- {} {}", a, b);
                }
            }
        }
    }

    #[test]
    fn tau_is_anti_involution() {
        let (n, r) = (2, 2);
        let mats = theta_nr(n, r, 2);
        for a in mats.iter().step_by(2) {
            for b in mats.iter().step_by(3) {
                let (x, y) = (bracket(a), bracket(b));
                let lhs = tau_r(&mul_oracle(&x, &y).unwrap());
                let rhs = mul_oracle(&tau_r(&y), &tau_r(&x)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn semisimple_delta_vanishes_when_n_exceeds_r() {
        for s in 1..=2 {
            let x = u(&PeriodicMatrix::semisimple(&[s; 3]));
            assert!(zeta(Sign::Plus, &x, 2).unwrap().is_zero());
            assert!(zeta(Sign::Minus, &x, 2).unwrap().is_zero());
        }
        // the central images are power sums of invertible operators
        assert!(!xi_gen(Generator::ZPlus(1), 3, 2).unwrap().is_zero());
    }
}
