use affschur_web::{gaussian_binomial, hall_polynomial, multiply};

#[test]
fn hall_polynomials() {
    assert_eq!(hall_polynomial(2, "S1[2]", "S1", "S2").unwrap(), "1");
    assert_eq!(hall_polynomial(2, "S1[2]", "S2", "S1").unwrap(), "0");
    assert!(hall_polynomial(2, "diag(1,1)", "S1", "S2").is_err());
}

#[test]
fn products() {
    assert_eq!(multiply(2, 2, "E12(0,r)", "0(0,r)").unwrap(), "E12(0,r)");
    assert_eq!(multiply(2, 2, "s1", "s1").unwrap(), multiply(2, 2, "(v^2 - 1)*s1 + v^2", "1").unwrap());
    assert!(multiply(1, 2, "1", "1").is_err());
    assert!(multiply(2, 2, "[diag(1,1)", "1").is_err());
}

#[test]
fn gaussian_binomials() {
    // [[4 over 2]] = 1 + q + 2q^2 + q^3 + q^4 counts planes in F_q^4
    let out = gaussian_binomial(4, 2);
    let q = out.lines().nth(1).unwrap();
    assert_eq!(q, "1 + q + 2*q^2 + q^3 + q^4");
}
