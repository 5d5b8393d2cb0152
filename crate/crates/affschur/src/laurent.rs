//! Laurent polynomials in `v` over arbitrary-precision integers, a small
//! fraction field on top of them, and quantum-integer combinatorics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// An element of `Z[v, v^-1]`.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * v^k`.
    pub fn monomial(k: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: vec![(k, c)] }
    }

    /// `v^k`.
    pub fn v(k: i32) -> Self {
        Self::monomial(k, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut t: Vec<(i32, BigInt)> = terms.into_iter().map(|(k, c)| (k, c.into())).collect();
        t.sort_by_key(|x| x.0);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(t.len());
        for (k, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|x| !x.1.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        match self.terms.binary_search_by_key(&k, |x| x.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|x| x.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|x| x.0)
    }

    /// Returns `(k, c)` if the polynomial is the single term `c v^k`.
    pub fn as_monomial(&self) -> Option<(i32, &BigInt)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn shift_in_place(&mut self, k: i32) {
        for t in &mut self.terms {
            t.0 += k;
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    /// Substitutes `v -> v^m`.
    pub fn subs_power(&self, m: i32) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect();
        if m < 0 {
            terms.reverse();
        }
        if m == 0 {
            let s: BigInt = self.terms.iter().map(|x| x.1.clone()).sum();
            return Self::constant(s);
        }
        LaurentPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at a nonzero rational.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, Error> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|k| k < 0) {
                return Err(Error::DivisionByZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), (-*e) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Value at `v = 1`.
    pub fn specialize_v1(&self) -> BigInt {
        self.terms.iter().map(|x| x.1.clone()).sum()
    }

    /// The unique `h` with `q * h = self`, if it exists in `Z[v, v^-1]`.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((k, c)) = q.as_monomial() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, x) in &self.terms {
                let (d, r) = x.div_rem(c);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.push((e - k, d));
            }
            return Ok(LaurentPoly { terms: out });
        }
        // long division from the top degree downwards
        let qlo = q.min_exp().unwrap();
        let qhi = q.max_exp().unwrap();
        let plo = self.min_exp().unwrap();
        let phi = self.max_exp().unwrap();
        if phi - plo < qhi - qlo {
            return Err(Error::NotDivisible);
        }
        let len = (phi - plo + 1) as usize;
        let mut rem: Vec<BigInt> = vec![BigInt::zero(); len];
        for (e, c) in &self.terms {
            rem[(e - plo) as usize] = c.clone();
        }
        let qd: Vec<(usize, &BigInt)> =
            q.terms.iter().map(|(e, c)| ((e - qlo) as usize, c)).collect();
        let qdeg = (qhi - qlo) as usize;
        let lead = q.terms.last().unwrap().1.clone();
        let mut quot: Vec<(i32, BigInt)> = Vec::new();
        let mut top = len - 1;
        loop {
            if top < qdeg {
                break;
            }
            if !rem[top].is_zero() {
                let (d, r) = rem[top].div_rem(&lead);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                let base = top - qdeg;
                for (off, c) in &qd {
                    rem[base + off] -= &d * *c;
                }
                quot.push((base as i32 + plo - qlo, d));
            }
            if top == 0 {
                break;
            }
            top -= 1;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        quot.reverse();
        Ok(LaurentPoly { terms: quot })
    }

    fn add_terms(a: &[(i32, BigInt)], b: &[(i32, BigInt)], negate_b: bool) -> Vec<(i32, BigInt)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// `self += c * v^k * other`, the workhorse of the algebra engines.
    pub fn add_scaled(&mut self, other: &LaurentPoly, k: i32, c: &BigInt) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let scaled: Vec<(i32, BigInt)> =
            other.terms.iter().map(|(e, x)| (e + k, if c.is_one() { x.clone() } else { x * c })).collect();
        self.terms = Self::add_terms(&self.terms, &scaled, false);
    }

    /// JSON-friendly pairs `(exponent, decimal coefficient)`.
    pub fn to_pairs(&self) -> Vec<(i32, String)> {
        self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mag = if idx == 0 {
                c.clone()
            } else if c.is_negative() {
                write!(f, " - ")?;
                -c
            } else {
                write!(f, " + ")?;
                c.clone()
            };
            if *e == 0 {
                write!(f, "{}", mag)?;
            } else {
                write!(f, "{}*v^{}", mag, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical text form and light variations of it:
    /// `-1*v^-2 + 2 + 1*v^2`, `v + v^-1`, `3v^2 - 1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, &b) in bytes.iter().enumerate() {
            let ch = b as char;
            let prev = if i == 0 { None } else { Some(bytes[i - 1] as char) };
            if (ch == '+' || ch == '-') && i > 0 && prev != Some('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        let mut terms = Vec::new();
        for p in pieces {
            let (neg, body) = match p.as_bytes().first() {
                Some(b'+') => (false, &p[1..]),
                Some(b'-') => (true, &p[1..]),
                _ => (false, &p[..]),
            };
            let bad = || Error::Parse(format!("bad term `{}`", p));
            let (coef, exp) = if let Some(pos) = body.find('v') {
                let cpart = body[..pos].trim_end_matches('*');
                let c = if cpart.is_empty() { BigInt::one() } else { cpart.parse::<BigInt>().map_err(|_| bad())? };
                let rest = &body[pos + 1..];
                let e = if rest.is_empty() {
                    1
                } else if let Some(x) = rest.strip_prefix('^') {
                    x.trim_start_matches('{').trim_end_matches('}').parse::<i32>().map_err(|_| bad())?
                } else {
                    return Err(bad());
                };
                (c, e)
            } else {
                (body.parse::<BigInt>().map_err(|_| bad())?, 0)
            };
            terms.push((exp, if neg { -coef } else { coef }));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i32, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            terms.push((e, c.parse::<BigInt>().map_err(D::Error::custom)?));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| LaurentPoly { terms: LaurentPoly::add_terms(&a.terms, &b.terms, false) });
forward_binop!(Sub, sub, |a, b| LaurentPoly { terms: LaurentPoly::add_terms(&a.terms, &b.terms, true) });
forward_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if let Some((k, c)) = b.as_monomial() {
        return if c.is_one() { a.shift(k) } else { a.scale(c).shift(k) };
    }
    if let Some((k, c)) = a.as_monomial() {
        return if c.is_one() { b.shift(k) } else { b.scale(c).shift(k) };
    }
    let lo = a.terms[0].0 + b.terms[0].0;
    let hi = a.terms.last().unwrap().0 + b.terms.last().unwrap().0;
    let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            dense[(ea + eb - lo) as usize] += ca * cb;
        }
    }
    let terms = dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i32 + lo, c))
        .collect();
    LaurentPoly { terms }
});

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        self.terms = LaurentPoly::add_terms(&self.terms, &rhs.terms, false);
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = LaurentPoly::add_terms(&self.terms, &rhs.terms, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

// ---------------------------------------------------------------------------
// quantum integers and Gaussian binomials

/// `v^m - v^-m`.
fn vdiff(m: i32) -> LaurentPoly {
    LaurentPoly::from_terms([(m, 1), (-m, -1)])
}

/// The balanced quantum integer `[m] = (v^m - v^-m)/(v - v^-1)`.
pub fn qint(m: i32) -> LaurentPoly {
    if m == 0 {
        return LaurentPoly::zero();
    }
    let sign = if m < 0 { -1 } else { 1 };
    let m = m.abs();
    LaurentPoly::from_terms((0..m).map(|i| (m - 1 - 2 * i, sign)))
}

/// `[m]! = [1][2]...[m]`.
pub fn qfactorial(m: u32) -> LaurentPoly {
    (1..=m as i32).fold(LaurentPoly::one(), |acc, i| acc * qint(i))
}

/// The symmetric Gaussian binomial `[N over t]`, defined for every integer `N`
/// by the product formula.
pub fn gauss_sym(n: i64, t: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=t as i64 {
        let top = (n - i + 1) as i32;
        if top == 0 {
            return LaurentPoly::zero();
        }
        num = num * vdiff(top);
        den = den * vdiff(i as i32);
    }
    num.exact_div(&den).expect("Gaussian binomial is integral")
}

/// `[[N over t]] = v^{t(N-t)} [N over t]`, a polynomial in `v^2`.
pub fn gauss_q(n: i64, t: u32) -> LaurentPoly {
    let t64 = t as i64;
    gauss_sym(n, t).shift((t64 * (n - t64)) as i32)
}

/// `[[m]] = 1 + v^2 + ... + v^{2(m-1)}`.
pub fn qint_sq(m: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..m as i32).map(|i| (2 * i, 1)))
}

/// `[[m]]! = [[1]][[2]]...[[m]]`.
pub fn qfactorial_sq(m: u32) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, i| acc * qint_sq(i))
}

/// The multinomial `[[b over b_1, ..., b_k]]` in `v^2`.
pub fn multinomial_sq(parts: &[u32]) -> LaurentPoly {
    let total: u32 = parts.iter().sum();
    let den = parts.iter().fold(LaurentPoly::one(), |acc, &p| acc * qfactorial_sq(p));
    qfactorial_sq(total).exact_div(&den).expect("multinomial is integral")
}

// ---------------------------------------------------------------------------
// fractions

/// A fraction of Laurent polynomials, used for intermediate values that are
/// only known to be integral after cancellation.
#[derive(Clone)]
pub struct RationalLaurent {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalLaurent {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RationalLaurent { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalLaurent { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Cheap normalization: exact division when possible, otherwise remove a
    /// common monomial and fix the sign of the denominator.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        if let Ok(q) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = LaurentPoly::one();
            return;
        }
        let k = self.den.min_exp().unwrap();
        self.num.shift_in_place(-k);
        self.den.shift_in_place(-k);
        let mut g = BigInt::zero();
        for (_, c) in self.num.terms.iter().chain(self.den.terms.iter()) {
            g = g.gcd(c);
        }
        if self.den.terms.last().unwrap().1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            self.num = self.num.exact_div(&LaurentPoly::constant(g.clone())).unwrap();
            self.den = self.den.exact_div(&LaurentPoly::constant(g)).unwrap();
        }
    }

    /// The Laurent polynomial this fraction equals, if any.
    pub fn to_laurent(&self) -> Result<LaurentPoly, Error> {
        self.num.exact_div(&self.den)
    }

    pub fn specialize_v1(&self) -> Result<BigRational, Error> {
        let d = self.den.specialize_v1();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(self.num.specialize_v1(), d))
    }
}

impl PartialEq for RationalLaurent {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Debug for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add<&RationalLaurent> for &RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, o: &RationalLaurent) -> RationalLaurent {
        if self.den == o.den {
            let mut r = RationalLaurent { num: &self.num + &o.num, den: self.den.clone() };
            r.reduce();
            return r;
        }
        if let Ok(m) = o.den.exact_div(&self.den) {
            let mut r = RationalLaurent { num: &self.num * &m + &o.num, den: o.den.clone() };
            r.reduce();
            return r;
        }
        if let Ok(m) = self.den.exact_div(&o.den) {
            let mut r = RationalLaurent { num: &self.num + &o.num * &m, den: self.den.clone() };
            r.reduce();
            return r;
        }
        let mut r = RationalLaurent { num: &self.num * &o.den + &o.num * &self.den, den: &self.den * &o.den };
        r.reduce();
        r
    }
}

impl Mul<&RationalLaurent> for &RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, o: &RationalLaurent) -> RationalLaurent {
        let mut r = RationalLaurent { num: &self.num * &o.num, den: &self.den * &o.den };
        r.reduce();
        r
    }
}

impl Neg for &RationalLaurent {
    type Output = RationalLaurent;
    fn neg(self) -> RationalLaurent {
        RationalLaurent { num: -&self.num, den: self.den.clone() }
    }
}

// ---------------------------------------------------------------------------
// coefficient rings

/// The operations the generic linear-combination containers need from a
/// coefficient ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn czero() -> Self;
    fn cone() -> Self;
    fn cis_zero(&self) -> bool;
    fn cadd(&self, o: &Self) -> Self;
    fn cmul(&self, o: &Self) -> Self;
    fn cneg(&self) -> Self;
    fn from_laurent(p: &LaurentPoly) -> Self;
    fn from_int(c: i64) -> Self;
    fn csub(&self, o: &Self) -> Self {
        self.cadd(&o.cneg())
    }
    fn cadd_assign(&mut self, o: &Self) {
        *self = self.cadd(o);
    }
}

impl Coeff for LaurentPoly {
    fn czero() -> Self {
        LaurentPoly::zero()
    }
    fn cone() -> Self {
        LaurentPoly::one()
    }
    fn cis_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        p.clone()
    }
    fn from_int(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
    fn cadd_assign(&mut self, o: &Self) {
        *self += o;
    }
}

impl Coeff for RationalLaurent {
    fn czero() -> Self {
        RationalLaurent::zero()
    }
    fn cone() -> Self {
        RationalLaurent::one()
    }
    fn cis_zero(&self) -> bool {
        RationalLaurent::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        RationalLaurent::from_laurent(p.clone())
    }
    fn from_int(c: i64) -> Self {
        RationalLaurent::from_laurent(LaurentPoly::constant(c))
    }
}

impl Coeff for BigRational {
    fn czero() -> Self {
        Zero::zero()
    }
    fn cone() -> Self {
        One::one()
    }
    fn cis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }
    /// Specialization at `v = 1`.
    fn from_laurent(p: &LaurentPoly) -> Self {
        BigRational::from_integer(p.specialize_v1())
    }
    fn from_int(c: i64) -> Self {
        BigRational::from_integer(c.into())
    }
}

/// Small helper: an `i64` view of a coefficient when it fits.
pub fn to_i64(c: &BigInt) -> Option<i64> {
    c.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_and_cancel() {
        assert_eq!(p("v + 1") + p("-1"), p("v"));
        assert_eq!(p("v - v^-1") + p("v^-1 - v"), LaurentPoly::zero());
        assert_eq!(p("3v^2 - 1") + LaurentPoly::zero(), p("3v^2 - 1"));
    }

    #[test]
    fn products() {
        assert_eq!(p("v - v^-1") * p("v + v^-1"), p("v^2 - v^-2"));
        assert_eq!(qint(2) * qint(2), p("v^2 + 2 + v^-2"));
    }

    #[test]
    fn division() {
        assert_eq!(p("v^2 - v^-2").exact_div(&p("v - v^-1")).unwrap(), p("v + v^-1"));
        assert!(p("v^2 + 1").exact_div(&p("v + 1")).is_err());
        assert!(p("v").exact_div(&p("2")).is_err());
        assert_eq!(p("2v^3 + 4v").exact_div(&p("2v^-1")).unwrap(), p("v^4 + 2v^2"));
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gauss_sym(2, 1), p("v + v^-1"));
        assert_eq!(gauss_sym(7, 0), LaurentPoly::one());
        assert_eq!(gauss_sym(4, 2), p("v^4 + v^2 + 2 + v^-2 + v^-4"));
        assert_eq!(gauss_q(2, 1), p("1 + v^2"));
        assert_eq!(gauss_q(5, 5), LaurentPoly::one());
        assert_eq!(gauss_q(3, 1), p("1 + v^2 + v^4"));
        assert_eq!(gauss_sym(4, 2) - qint(2) * qint(2), p("v^4 + v^-4"));
    }

    #[test]
    fn gaussian_negative_top() {
        // [-1 over 1] = (v^-1 - v)/(v - v^-1) = -1
        assert_eq!(gauss_sym(-1, 1), p("-1"));
        // [-2 over 2] = [3 over 2] with sign (+1)
        assert_eq!(gauss_sym(-2, 2), gauss_sym(3, 2));
    }

    #[test]
    fn evaluation() {
        let one = BigRational::one();
        for n in 0..8i64 {
            for t in 0..=n as u32 {
                let b = num_integer::binomial(n, t as i64);
                assert_eq!(gauss_sym(n, t).eval(&one).unwrap(), BigRational::from_integer(b.into()));
            }
        }
        assert!(p("v - v^-1").eval(&one).unwrap().is_zero());
        let two = BigRational::from_integer(2.into());
        assert_eq!(gauss_q(2, 1).eval(&two).unwrap(), BigRational::from_integer(5.into()));
        assert!(p("v^-1").eval(&BigRational::zero()).is_err());
    }

    #[test]
    fn text_round_trip() {
        let x = p("-1*v^-2 + 2 + 1*v^2");
        assert_eq!(x.to_string(), "-1*v^-2 + 2 + 1*v^2");
        assert_eq!(p(&x.to_string()), x);
        assert_eq!(p("v^2 - 3v + 7").to_string(), "7 - 3*v^1 + 1*v^2");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"[[-2,"-1"],[0,"2"],[2,"1"]]"#);
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn bar_and_subs() {
        assert_eq!(p("v^3 + 2v^-1").bar(), p("v^-3 + 2v"));
        assert_eq!(p("1 + v").subs_power(2), p("1 + v^2"));
    }

    #[test]
    fn fractions() {
        let a = RationalLaurent::new(p("1"), p("v - v^-1")).unwrap();
        let b = RationalLaurent::new(p("v - v^-1"), p("1")).unwrap();
        assert!((&a * &b).to_laurent().unwrap().is_one());
        let half = RationalLaurent::new(p("1"), p("2")).unwrap();
        assert_eq!((&half + &half).to_laurent().unwrap(), LaurentPoly::one());
        assert!(a.to_laurent().is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial_sq(&[1, 1]), gauss_q(2, 1));
        assert_eq!(multinomial_sq(&[2, 1, 1]), gauss_q(4, 2) * gauss_q(2, 1));
    }
}
