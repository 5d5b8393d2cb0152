//! A small text grammar for elements, used by the command line and the web
//! demo.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := factor ("*" factor)*
//! factor  := coeff | atom
//! coeff   := "(" laurent ")" | "(" p "/" q ")" | laurent
//! atom    := "[" M "]" | "br[" M "]" | "e[" M "]"      Schur basis [A], e_A
//!          | M "(" j "," r ")"                         A(j, r)
//!          | M "[" j "," r "]"                         A[j, r] at v = 1
//!          | "c[" M "]"                                basis [A]_1 at v = 1
//!          | "gen:" ("E"i | "F"i | "K"i["^-1"] | "z"s("+"|"-"))
//!          | "s"k | "rho"["^"a] | "Tw[" w_1,...,w_r "]" affine Hecke algebra
//!          | "u[" M "]"                                Hall basis u_A
//! M       := summand ("+" summand)*
//! summand := [c] ("{(i,j):a,...}" | "diag(a_1,...)" | "E"ij | "E{i,j}"
//!                 | "S"i["["l"]"] | "0")
//! j       := "0" | "(" j_1,...,j_n ")"          r := "r" | integer
//! ```
//!
//! `S_i[l]` is the indecomposable of length `l` with top `S_i`, that is
//! `E_{i,i+l}`. Factors in one term are multiplied in the algebra; a term
//! without atoms is a multiple of the identity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::affine_weyl::AffinePerm;
use crate::classical::{abr, mul1, specialize, ClassicalSchurElement};
use crate::hall::{hall_mul, HallElement};
use crate::hecke::{self, HeckeElement};
use crate::laurent::{Coeff, LaurentPoly};
use crate::quiver_rep::PeriodicMatrix;
use crate::schur::{blm, compositions, e_basis, identity, mul_oracle, xi_gen, Generator, SchurElement};
use crate::Error;

#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub n: usize,
    pub r: i32,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Laurent(LaurentPoly),
    Rational(BigRational),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Schur(SchurElement),
    Classical(ClassicalSchurElement),
    Hecke(HeckeElement),
    Hall(HallElement),
}

impl Value {
    pub fn algebra(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Schur(_) => "schur",
            Value::Classical(_) => "classical",
            Value::Hecke(_) => "hecke",
            Value::Hall(_) => "hall",
        }
    }
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits at top-level occurrences of the separators, keeping the
/// separator with the following piece. A `-` right after `^` or at the
/// start is part of the piece.
fn split_top(s: &str, seps: &[char]) -> Result<Vec<String>, Error> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(perr(format!("unbalanced brackets in `{}`", s)));
        }
        let is_sep = depth == 0 && seps.contains(&ch) && !cur.is_empty() && prev != Some('^') && prev != Some('*');
        if is_sep {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if depth != 0 {
        return Err(perr(format!("unbalanced brackets in `{}`", s)));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn parse_int(s: &str) -> Result<i32, Error> {
    s.trim().parse().map_err(|_| perr(format!("expected an integer, got `{}`", s)))
}

fn parse_ints(s: &str) -> Result<Vec<i32>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_int).collect()
}

fn strip_group(s: &str, open: char, close: char) -> Option<&str> {
    s.strip_prefix(open).and_then(|x| x.strip_suffix(close))
}

/// Parses the matrix grammar `M`.
pub fn parse_matrix(n: usize, s: &str) -> Result<PeriodicMatrix, Error> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = PeriodicMatrix::zero(n);
    for piece in split_top(&s, &['+'])? {
        let piece = piece.trim_start_matches('+');
        let digits = piece.chars().take_while(|c| c.is_ascii_digit()).count();
        let (mult, body) = if digits > 0 && digits < piece.len() {
            (parse_int(&piece[..digits])?, &piece[digits..])
        } else {
            (1, piece)
        };
        out = out.plus(&matrix_atom(n, body)?.scaled(mult));
    }
    Ok(out)
}

fn matrix_atom(n: usize, s: &str) -> Result<PeriodicMatrix, Error> {
    if s == "0" {
        return Ok(PeriodicMatrix::zero(n));
    }
    if s.starts_with('{') {
        return PeriodicMatrix::parse(n, s);
    }
    if let Some(inner) = s.strip_prefix("diag").and_then(|x| strip_group(x, '(', ')')) {
        let l = parse_ints(inner)?;
        if l.len() != n {
            return Err(Error::DimMismatch(format!("diag({}) has {} entries, n = {}", inner, l.len(), n)));
        }
        return Ok(PeriodicMatrix::diag(&l));
    }
    if let Some(rest) = s.strip_prefix('E') {
        if let Some(inner) = strip_group(rest, '{', '}') {
            let ij = parse_ints(inner)?;
            if ij.len() != 2 {
                return Err(perr(format!("E{{i,j}} needs two indices: `{}`", s)));
            }
            return Ok(PeriodicMatrix::elem(n, ij[0], ij[1]));
        }
        let ds: Vec<i32> = rest.chars().map(|c| c.to_digit(10).map(|d| d as i32)).collect::<Option<_>>().unwrap_or_default();
        if ds.len() == 2 && rest.len() == 2 {
            return Ok(PeriodicMatrix::elem(n, ds[0], ds[1]));
        }
        return Err(perr(format!("use E{{i,j}} for `{}`", s)));
    }
    if let Some(rest) = s.strip_prefix('S') {
        let (i, l) = match rest.find('[') {
            Some(k) => {
                let l = strip_group(&rest[k..], '[', ']').ok_or_else(|| perr(format!("bad module `{}`", s)))?;
                (parse_int(&rest[..k])?, parse_int(l)?)
            }
            None => (parse_int(rest)?, 1),
        };
        if l < 1 {
            return Err(perr(format!("module length must be positive: `{}`", s)));
        }
        return Ok(PeriodicMatrix::elem(n, i, i + l));
    }
    Err(perr(format!("unknown matrix `{}`", s)))
}

fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let inner = strip_group(s, '(', ')').unwrap_or(s);
    if let Some((p, q)) = inner.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| perr(format!("bad fraction `{}`", s)))?;
        let q: BigInt = q.trim().parse().map_err(|_| perr(format!("bad fraction `{}`", s)))?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Scalar::Rational(BigRational::new(p, q)));
    }
    Ok(Scalar::Laurent(inner.parse()?))
}

fn looks_scalar(s: &str) -> bool {
    if strip_group(s, '(', ')').is_some() {
        // a whole parenthesized factor is a coefficient
        return true;
    }
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || "v^-+".contains(c))
}

fn parse_j(ctx: &Context, s: &str) -> Result<Vec<i32>, Error> {
    if s.trim() == "0" {
        return Ok(vec![0; ctx.n]);
    }
    let inner = strip_group(s.trim(), '(', ')').ok_or_else(|| perr(format!("bad j `{}`", s)))?;
    let j = parse_ints(inner)?;
    if j.len() != ctx.n {
        return Err(Error::DimMismatch(format!("j = {} has {} entries, n = {}", s, j.len(), ctx.n)));
    }
    Ok(j)
}

fn parse_r(ctx: &Context, s: &str) -> Result<i32, Error> {
    if s.trim() == "r" {
        Ok(ctx.r)
    } else {
        parse_int(s)
    }
}

/// Splits `prefix GROUP` where `GROUP` is the final bracketed group.
fn final_group(s: &str) -> Option<(&str, char, &str)> {
    let close = s.chars().last()?;
    let open = match close {
        ')' => '(',
        ']' => '[',
        _ => return None,
    };
    let mut depth = 0;
    for (k, ch) in s.char_indices().rev() {
        if ch == close {
            depth += 1;
        } else if ch == open {
            depth -= 1;
            if depth == 0 {
                return Some((&s[..k], open, &s[k + 1..s.len() - 1]));
            }
        }
    }
    None
}

fn parse_atom(ctx: &Context, s: &str) -> Result<Value, Error> {
    let n = ctx.n;
    if let Some(g) = s.strip_prefix("gen:") {
        return parse_gen(ctx, g);
    }
    if s == "rho" || s.starts_with("rho^") {
        let a = match s.strip_prefix("rho^") {
            Some(e) => parse_int(e)?,
            None => 1,
        };
        return Ok(Value::Hecke(hecke::t(AffinePerm::rho_pow(ctx.r as usize, a))));
    }
    if let Some(k) = s.strip_prefix('s') {
        if !k.is_empty() && k.chars().all(|c| c.is_ascii_digit()) {
            let k = parse_int(k)?;
            return Ok(Value::Hecke(hecke::t(AffinePerm::s(ctx.r as usize, k))));
        }
    }
    let (prefix, open, inner) = final_group(s).ok_or_else(|| perr(format!("cannot read `{}`", s)))?;
    match (prefix, open) {
        ("" | "br", '[') => Ok(Value::Schur(SchurElement::basis(parse_matrix(n, inner)?))),
        ("e", '[') => Ok(Value::Schur(e_basis(&parse_matrix(n, inner)?))),
        ("c", '[') => Ok(Value::Classical(ClassicalSchurElement::basis(parse_matrix(n, inner)?))),
        ("u", '[') => {
            let a = parse_matrix(n, inner)?;
            if !a.is_upper() || !a.is_nonneg() {
                return Err(Error::WrongShape(format!("u[{}] needs a matrix in Θ^+", a)));
            }
            Ok(Value::Hall(HallElement::basis(a)))
        }
        ("Tw", '[') => {
            let w = parse_ints(inner)?;
            if w.len() != ctx.r as usize {
                return Err(Error::DimMismatch(format!("window of length {} with r = {}", w.len(), ctx.r)));
            }
            Ok(Value::Hecke(hecke::t(AffinePerm::from_window(&w)?)))
        }
        (m, _) => {
            let a = parse_matrix(n, m)?;
            let parts = split_top(inner, &[','])?;
            if parts.len() != 2 {
                return Err(perr(format!("expected (j, r) in `{}`", s)));
            }
            let j = parse_j(ctx, &parts[0])?;
            let r = parse_r(ctx, parts[1].trim_start_matches(','))?;
            if open == '(' {
                Ok(Value::Schur(blm(&a, &j, r)))
            } else {
                if j.iter().any(|&x| x < 0) {
                    return Err(perr("A[j, r] needs j with nonnegative entries"));
                }
                Ok(Value::Classical(abr(&a, &j, r)))
            }
        }
    }
}

fn parse_gen(ctx: &Context, g: &str) -> Result<Value, Error> {
    let (head, rest) = g.split_at(1.min(g.len()));
    let gen = match head {
        "E" => Generator::E(parse_int(rest)?),
        "F" => Generator::F(parse_int(rest)?),
        "K" => match rest.split_once('^') {
            Some((i, e)) => Generator::K(parse_int(i)?, parse_int(e)?),
            None => Generator::K(parse_int(rest)?, 1),
        },
        "z" => {
            if let Some(s) = rest.strip_suffix('+') {
                Generator::ZPlus(parse_int(s)?)
            } else if let Some(s) = rest.strip_suffix('-') {
                Generator::ZMinus(parse_int(s)?)
            } else {
                return Err(perr(format!("gen:z needs a sign: `{}`", g)));
            }
        }
        _ => return Err(perr(format!("unknown generator `{}`", g))),
    };
    Ok(Value::Schur(xi_gen(gen, ctx.n, ctx.r)?))
}

fn scalar_to_rational(s: &Scalar) -> BigRational {
    match s {
        Scalar::Laurent(p) => <BigRational as Coeff>::from_laurent(p),
        Scalar::Rational(q) => q.clone(),
    }
}

fn scalar_mul(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Laurent(x), Scalar::Laurent(y)) => Scalar::Laurent(x * y),
        _ => Scalar::Rational(scalar_to_rational(a) * scalar_to_rational(b)),
    }
}

fn scale(v: &Value, s: &Scalar) -> Result<Value, Error> {
    let need_laurent = |s: &Scalar| match s {
        Scalar::Laurent(p) => Ok(p.clone()),
        Scalar::Rational(q) if q.is_integer() => Ok(LaurentPoly::constant(q.to_integer())),
        Scalar::Rational(q) => Err(perr(format!("fractional coefficient {} outside the classical algebra", q))),
    };
    Ok(match v {
        Value::Scalar(t) => Value::Scalar(scalar_mul(t, s)),
        // fractions only make sense at v = 1
        Value::Schur(x) => match s {
            Scalar::Rational(q) if !q.is_integer() => Value::Classical(specialize(x).scale(q)),
            _ => Value::Schur(x.scale(&need_laurent(s)?)),
        },
        Value::Hecke(x) => Value::Hecke(x.scale(&need_laurent(s)?)),
        Value::Hall(x) => Value::Hall(x.scale(&need_laurent(s)?)),
        Value::Classical(x) => Value::Classical(x.scale(&scalar_to_rational(s))),
    })
}

/// The identity of the algebra `like` lives in.
fn unit_like(like: &Value, ctx: &Context) -> Value {
    match like {
        Value::Scalar(_) => Value::Scalar(Scalar::Laurent(LaurentPoly::one())),
        Value::Schur(_) => Value::Schur(identity(ctx.n, ctx.r)),
        Value::Classical(_) => Value::Classical(specialize(&identity(ctx.n, ctx.r))),
        Value::Hecke(_) => Value::Hecke(hecke::one(ctx.r as usize)),
        Value::Hall(_) => Value::Hall(crate::hall::one(ctx.n)),
    }
}

/// Brings two values into a common algebra: scalars become multiples of
/// the identity, Schur elements specialize next to classical ones.
fn unify(a: Value, b: Value, ctx: &Context) -> Result<(Value, Value), Error> {
    match (a, b) {
        (Value::Scalar(s), other) if !matches!(other, Value::Scalar(_)) => {
            let u = unit_like(&other, ctx);
            Ok((scale(&u, &s)?, other))
        }
        (other, Value::Scalar(s)) if !matches!(other, Value::Scalar(_)) => {
            let u = unit_like(&other, ctx);
            Ok((other, scale(&u, &s)?))
        }
        (Value::Schur(x), Value::Classical(y)) => Ok((Value::Classical(specialize(&x)), Value::Classical(y))),
        (Value::Classical(x), Value::Schur(y)) => Ok((Value::Classical(x), Value::Classical(specialize(&y)))),
        (a, b) => {
            if std::mem::discriminant(&a) != std::mem::discriminant(&b) {
                return Err(Error::DimMismatch(format!("cannot combine {} and {} elements", a.algebra(), b.algebra())));
            }
            Ok((a, b))
        }
    }
}

fn check_r(v: &Value, ctx: &Context) -> Result<(), Error> {
    let bad = match v {
        Value::Schur(x) => x.keys().any(|a| a.sigma() != ctx.r),
        Value::Classical(x) => x.keys().any(|a| a.sigma() != ctx.r),
        _ => false,
    };
    if bad {
        Err(Error::DimMismatch(format!("element outside 𝒮_△({}, {})", ctx.n, ctx.r)))
    } else {
        Ok(())
    }
}

pub fn add(a: Value, b: Value, ctx: &Context) -> Result<Value, Error> {
    Ok(match unify(a, b, ctx)? {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(match (x, y) {
            (Scalar::Laurent(p), Scalar::Laurent(q)) => Scalar::Laurent(p + q),
            (x, y) => Scalar::Rational(scalar_to_rational(&x) + scalar_to_rational(&y)),
        }),
        (Value::Schur(x), Value::Schur(y)) => Value::Schur(x.add(&y)),
        (Value::Classical(x), Value::Classical(y)) => Value::Classical(x.add(&y)),
        (Value::Hecke(x), Value::Hecke(y)) => Value::Hecke(x.add(&y)),
        (Value::Hall(x), Value::Hall(y)) => Value::Hall(x.add(&y)),
        _ => unreachable!("unify returns matching kinds"),
    })
}

/// The product in the algebra both factors live in.
pub fn multiply(a: Value, b: Value, ctx: &Context) -> Result<Value, Error> {
    if let Value::Scalar(s) = &a {
        return scale(&b, s);
    }
    if let Value::Scalar(s) = &b {
        return scale(&a, s);
    }
    Ok(match unify(a, b, ctx)? {
        (Value::Schur(x), Value::Schur(y)) => Value::Schur(mul_oracle(&x, &y)?),
        (Value::Classical(x), Value::Classical(y)) => Value::Classical(mul1(&x, &y)?),
        (Value::Hecke(x), Value::Hecke(y)) => Value::Hecke(hecke::mul(&x, &y)),
        (Value::Hall(x), Value::Hall(y)) => Value::Hall(hall_mul(&x, &y)?),
        _ => unreachable!("unify returns matching kinds"),
    })
}

pub fn parse_expr(s: &str, ctx: &Context) -> Result<Value, Error> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut total: Option<Value> = None;
    for term in split_top(&s, &['+', '-'])? {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b.to_string()),
            None => (false, term.trim_start_matches('+').to_string()),
        };
        if body.is_empty() {
            return Err(perr(format!("dangling sign in `{}`", s)));
        }
        let mut acc: Option<Value> = None;
        for factor in split_top(&body, &['*'])? {
            let factor = factor.trim_start_matches('*');
            let v = if looks_scalar(factor) { Value::Scalar(parse_scalar(factor)?) } else { parse_atom(ctx, factor)? };
            check_r(&v, ctx)?;
            acc = Some(match acc {
                None => v,
                Some(prev) => multiply(prev, v, ctx)?,
            });
        }
        let mut v = acc.ok_or_else(|| perr("empty term"))?;
        if neg {
            v = scale(&v, &Scalar::Laurent(LaurentPoly::constant(-1)))?;
        }
        total = Some(match total {
            None => v,
            Some(t) => add(t, v, ctx)?,
        });
    }
    total.ok_or_else(|| perr("empty expression"))
}

// ---------------------------------------------------------------------------
// rendering

/// Matrix text accepted by [`parse_matrix`], with `diag(...)` and `E_ij`
/// shorthands where they apply.
pub fn matrix_text(a: &PeriodicMatrix) -> String {
    let n = a.n();
    if a.is_zero() {
        return "0".into();
    }
    if a.offdiag().is_zero() {
        let d: Vec<String> = a.diagonal().iter().map(|x| x.to_string()).collect();
        return format!("diag({})", d.join(","));
    }
    if let [(i, j, 1)] = a.entries() {
        if (1..=9).contains(j) && n <= 9 {
            return format!("E{}{}", i, j);
        }
        return format!("E{{{},{}}}", i, j);
    }
    a.to_text()
}

fn coeff_prefix(c: &str) -> String {
    match c {
        "1" => String::new(),
        "-1" => "-".into(),
        _ => format!("({})*", c),
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            s.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            s.push_str(" - ");
            s.push_str(rest);
        } else {
            s.push_str(" + ");
            s.push_str(&t);
        }
    }
    s
}

/// Recognizes a single `A(j, r)`: the support is exactly `A + diag(Λ)` and
/// the coefficients are `v^{λ·j}`.
pub fn as_blm(x: &SchurElement, r: i32) -> Option<(PeriodicMatrix, Vec<i32>)> {
    let (first, _) = x.iter().next()?;
    let n = first.n();
    let off = first.offdiag();
    let k = r - off.sigma();
    let lams = compositions(n, k);
    if x.len() != lams.len() || !lams.iter().all(|l| x.coeff_ref(&off.plus_diag(l)).is_some()) {
        return None;
    }
    let exp = |l: &[i32]| -> Option<i32> {
        let (e, c) = x.coeff_ref(&off.plus_diag(l))?.as_monomial()?;
        if c.is_one() {
            Some(e)
        } else {
            None
        }
    };
    let j: Vec<i32> = if k == 0 {
        if exp(&vec![0; n])? != 0 {
            return None;
        }
        vec![0; n]
    } else {
        (0..n)
            .map(|i| {
                let mut l = vec![0; n];
                l[i] = k;
                let e = exp(&l)?;
                if e % k == 0 {
                    Some(e / k)
                } else {
                    None
                }
            })
            .collect::<Option<_>>()?
    };
    if blm(&off, &j, r) == *x {
        Some((off, j))
    } else {
        None
    }
}

fn blm_text(a: &PeriodicMatrix, j: &[i32]) -> String {
    let jt = if j.iter().all(|&x| x == 0) {
        "0".to_string()
    } else {
        let v: Vec<String> = j.iter().map(|x| x.to_string()).collect();
        format!("({})", v.join(","))
    };
    format!("{}({},r)", matrix_text(a), jt)
}

fn rational_text(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// the identity is `rho^0`, so a multiple of it still reads back as a Hecke element
fn hecke_key(w: &AffinePerm) -> String {
    if w.length() == 0 {
        return match w.rho_exponent() {
            1 => "rho".into(),
            a => format!("rho^{}", a),
        };
    }
    let (a, word) = w.reduced_word();
    if a == 0 && word.len() == 1 {
        return format!("s{}", word[0]);
    }
    let win: Vec<String> = w.window().iter().map(|x| x.to_string()).collect();
    format!("Tw[{}]", win.join(","))
}

/// `(basis, coefficient)` pairs; the basis text is an atom of the grammar
/// and an empty basis marks a bare scalar.
pub fn terms(v: &Value) -> Vec<(String, String)> {
    match v {
        Value::Scalar(Scalar::Laurent(p)) => vec![(String::new(), p.to_string())],
        Value::Scalar(Scalar::Rational(q)) => vec![(String::new(), rational_text(q))],
        Value::Schur(x) => x.iter().map(|(a, c)| (format!("[{}]", matrix_text(a)), c.to_string())).collect(),
        Value::Classical(x) => x.iter().map(|(a, c)| (format!("c[{}]", matrix_text(a)), rational_text(c))).collect(),
        Value::Hecke(x) => x.iter().map(|(w, c)| (hecke_key(w), c.to_string())).collect(),
        Value::Hall(x) => x.iter().map(|(a, c)| (format!("u[{}]", matrix_text(a)), c.to_string())).collect(),
    }
}

/// Text that [`parse_expr`] reads back to the same value.
pub fn render(v: &Value, ctx: &Context) -> String {
    if let Value::Schur(x) = v {
        if let Some((a, j)) = as_blm(x, ctx.r) {
            return blm_text(&a, &j);
        }
    }
    let parts = terms(v)
        .into_iter()
        .filter(|(_, c)| c != "0")
        .map(|(b, c)| if b.is_empty() { format!("({})", c) } else { format!("{}{}", coeff_prefix(&c), b) })
        .collect();
    join_terms(parts)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Laurent(p) => write!(f, "{}", p),
            Scalar::Rational(q) => write!(f, "{}", rational_text(q)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, r: i32) -> Context {
        Context { n, r }
    }

    fn mult(c: &Context, a: &str, b: &str) -> String {
        let x = parse_expr(a, c).unwrap();
        let y = parse_expr(b, c).unwrap();
        render(&multiply(x, y, c).unwrap(), c)
    }

    #[test]
    fn matrices() {
        assert_eq!(parse_matrix(2, "S1[2]").unwrap(), PeriodicMatrix::elem(2, 1, 3));
        assert_eq!(parse_matrix(2, "S1+2S2").unwrap(), PeriodicMatrix::semisimple(&[1, 2]));
        assert_eq!(parse_matrix(3, "E{1,-2}").unwrap(), PeriodicMatrix::elem(3, 1, -2));
        assert_eq!(parse_matrix(2, "diag(1,1)").unwrap(), PeriodicMatrix::diag(&[1, 1]));
        assert!(parse_matrix(2, "diag(1)").is_err());
        assert!(parse_matrix(2, "Q").is_err());
    }

    #[test]
    fn products() {
        let c = ctx(2, 2);
        assert_eq!(mult(&c, "[diag(1,1)]", "[diag(1,1)]"), "[diag(1,1)]");
        assert_eq!(mult(&c, "E12(0,r)", "0(0,r)"), "E12(0,r)");
        assert_eq!(mult(&c, "s1", "s1"), "(1*v^2)*rho^0 + (-1 + 1*v^2)*s1");
        assert_eq!(mult(&c, "[diag(2,0)]", "[diag(1,1)]"), "0");
    }

    #[test]
    fn round_trips() {
        let c = ctx(2, 2);
        for s in ["gen:E1*gen:F1", "gen:K1^-1 + 2*[diag(2,0)]", "(v + v^-1)*E21(0,r)", "s0*rho*s1", "u[S1]*u[S2]", "E12[(1,0),r] + (1/2)*[diag(1,1)]"] {
            let v = parse_expr(s, &c).unwrap();
            let back = parse_expr(&render(&v, &c), &c).unwrap();
            assert_eq!(back, v, "{} -> {}", s, render(&v, &c));
        }
    }

    #[test]
    fn errors() {
        let c = ctx(2, 2);
        assert!(matches!(parse_expr("[diag(1,1)", &c), Err(Error::Parse(_))));
        assert!(matches!(parse_expr("[diag(3,0)]", &c), Err(Error::DimMismatch(_))));
        assert!(matches!(parse_expr("s1 * [diag(1,1)]", &c), Err(Error::DimMismatch(_))));
        assert!(parse_expr("gen:Q1", &c).is_err());
    }
}
