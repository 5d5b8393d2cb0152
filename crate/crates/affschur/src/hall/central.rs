//! Central elements `c_m`, `π_m` and `z_m` of the Hall algebra.

use crate::laurent::{qint, LaurentPoly, RationalLaurent};
use crate::lincomb::LinComb;
use crate::quiver_rep::{aut_poly, end_dim, is_socle_squarefree, total_dim, upper_with_dim, PeriodicMatrix};
use crate::Error;

use super::{desk_cap, hall_mul, HallElement};

pub type RatHallElement = LinComb<PeriodicMatrix, RationalLaurent>;

fn require_room(n: usize, m: i32) -> Result<(), Error> {
    if m < 1 {
        return Err(Error::PreconditionViolated("central elements are indexed by m >= 1".into()));
    }
    if m * n as i32 > desk_cap() {
        return Err(Error::BoundExceeded(format!("c_{} needs modules of dimension {}", m, m * n as i32)));
    }
    Ok(())
}

/// `c_m = (-1)^m v^{-2nm} Σ (-1)^{dim End M(A)} 𝔞_A u_A` over `𝐝(A) = mδ`
/// with square-free socle.
pub fn central_c(n: usize, m: i32) -> Result<HallElement, Error> {
    require_room(n, m)?;
    let mut out = HallElement::zero();
    for a in upper_with_dim(&vec![m; n]) {
        if !is_socle_squarefree(&a)? {
            continue;
        }
        let sign = if (end_dim(&a)? + m) % 2 == 0 { 1 } else { -1 };
        let coeff = aut_poly(&a)?.shift(-2 * n as i32 * m);
        out.add_term(a, if sign > 0 { coeff } else { -coeff });
    }
    Ok(out)
}

fn lift(x: &HallElement) -> RatHallElement {
    x.map_coeffs(|c| RationalLaurent::from_laurent(c.clone()))
}

/// `v - v^{-1}`.
fn vdiff() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}

/// The recursively defined primitive central elements `π_m`.
pub fn central_pi(n: usize, m: i32) -> Result<RatHallElement, Error> {
    require_room(n, m)?;
    let nn = n as i32;
    let lead = RationalLaurent::new(LaurentPoly::v(nn * m), vdiff())?;
    let mut out = lift(&central_c(n, m)?).scale(&lead);
    for s in 1..m {
        let pis = central_pi(n, s)?;
        let cms = lift(&central_c(n, m - s)?);
        let prod = hall_mul(&pis, &cms)?;
        let f = RationalLaurent::new(LaurentPoly::monomial((m - s) * nn, -s), LaurentPoly::constant(m))?;
        out.add_scaled(&prod, &f);
    }
    Ok(out)
}

/// `z_m = (m/[m]) π_m`.
pub fn central_z(n: usize, m: i32) -> Result<RatHallElement, Error> {
    let f = RationalLaurent::new(LaurentPoly::constant(m), qint(m))?;
    Ok(central_pi(n, m)?.scale(&f))
}

/// `z_m` with coefficients brought back to `Z[v, v^-1]`, which succeeds
/// whenever the fractions cancel.
pub fn central_z_integral(n: usize, m: i32) -> Result<HallElement, Error> {
    let z = central_z(n, m)?;
    let mut out = HallElement::zero();
    for (a, c) in z.iter() {
        out.add_term(a.clone(), c.to_laurent()?);
    }
    Ok(out)
}

/// Coefficient of `u_{E_{l,l+mn}}` expected in `z_m`: `v^{d'}` with
/// `d' = dim End - dim = m - mn`.
pub fn expected_indecomposable_coeff(n: usize, m: i32) -> Result<LaurentPoly, Error> {
    let a = PeriodicMatrix::elem(n, 1, 1 + m * n as i32);
    Ok(LaurentPoly::v(end_dim(&a)? - total_dim(&a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::{hall_product, u, u_simple};

    fn e(n: usize, i: i32, j: i32) -> PeriodicMatrix {
        PeriodicMatrix::elem(n, i, j)
    }

    #[test]
    fn c1_for_n2_by_hand() {
        let n = 2;
        let q1 = LaurentPoly::from_terms([(2, 1), (0, -1)]);
        let ss = PeriodicMatrix::semisimple(&[1, 1]);
        let expect: HallElement = [
            (ss, -(q1.clone() * q1.clone()).shift(-4)),
            (e(n, 1, 3), q1.shift(-4)),
            (e(n, 2, 4), q1.shift(-4)),
        ]
        .into_iter()
        .collect();
        assert_eq!(central_c(n, 1).unwrap(), expect);
    }

    #[test]
    fn z1_for_n2_closed_form() {
        let n = 2;
        let (u1, u2) = (u_simple(n, 1), u_simple(n, 2));
        let delta = u(&PeriodicMatrix::semisimple(&[1, 1]));
        let lhs = hall_product(n, &[u1.clone(), u2.clone()]).unwrap().add(&hall_product(n, &[u2, u1]).unwrap());
        let expect = lhs.sub(&delta.scale(&LaurentPoly::from_terms([(1, 1), (-1, 1)])));
        assert_eq!(central_z_integral(n, 1).unwrap(), expect);
    }
}
