//! Browser bindings. Every function takes and returns text so the page can
//! stay a plain HTML form; errors come back as the `Err` string.

use wasm_bindgen::prelude::*;

use affschur::expr::{self, Context};
use affschur::hall;
use affschur::laurent::{gauss_q, gauss_sym};

fn ctx(n: usize, r: i32) -> Result<Context, String> {
    if n < 2 || r < 1 {
        return Err(format!("need n >= 2 and r >= 1, got n = {}, r = {}", n, r));
    }
    Ok(Context { n, r })
}

/// `φ^C_{A,B}` as a polynomial in `q`. Modules use the matrix grammar, e.g.
/// `S1[2]` or `{(1,3):1}`.
#[wasm_bindgen]
pub fn hall_polynomial(n: usize, c: &str, a: &str, b: &str) -> Result<String, String> {
    ctx(n, 1)?;
    let m = |s: &str| expr::parse_matrix(n, s).map_err(|e| e.to_string());
    let (c, a, b) = (m(c)?, m(a)?, m(b)?);
    for x in [&c, &a, &b] {
        if !x.is_upper() || !x.is_nonneg() {
            return Err(format!("{} is not a module", expr::matrix_text(x)));
        }
    }
    hall::hall_poly(&c, &a, &b).map(|p| hall::q_string(&p)).map_err(|e| e.to_string())
}

/// Product of two element expressions: Schur, classical, Hecke or Hall.
#[wasm_bindgen]
pub fn multiply(n: usize, r: i32, x: &str, y: &str) -> Result<String, String> {
    let ctx = ctx(n, r)?;
    let x = expr::parse_expr(x, &ctx).map_err(|e| e.to_string())?;
    let y = expr::parse_expr(y, &ctx).map_err(|e| e.to_string())?;
    expr::multiply(x, y, &ctx).map(|v| expr::render(&v, &ctx)).map_err(|e| e.to_string())
}

/// Gaussian binomial, symmetric form and the polynomial in `v^2`,
/// separated by a newline.
#[wasm_bindgen]
pub fn gaussian_binomial(m: i32, t: u32) -> String {
    format!("{}\n{}", gauss_sym(m as i64, t), hall::q_string(&gauss_q(m as i64, t)))
}
