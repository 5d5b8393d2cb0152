use proptest::prelude::*;

use affschur::affine_weyl::AffinePerm;
use affschur::classical::{mul1, specialize};
use affschur::expr::{parse_expr, render, Context, Value};
use affschur::hecke::{self, HeckeElement};
use affschur::laurent::LaurentPoly;
use affschur::schur::{identity, mul_oracle, theta_nr, SchurElement};
use affschur::tensor_space::{d_index, inversion_count};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..4).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (k, c)| &acc + &LaurentPoly::monomial(k, c))
    })
}

fn perm(r: usize) -> impl Strategy<Value = AffinePerm> {
    (prop::collection::vec(0..r as i32, 0..6), -2i32..=2).prop_map(move |(word, a)| {
        word.into_iter().fold(AffinePerm::rho_pow(r, a), |w, k| w.mul_s(k))
    })
}

fn hecke_elt(r: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((perm(r), laurent()), 1..3).prop_map(move |ts| {
        ts.into_iter().fold(HeckeElement::zero(), |acc, (w, c)| acc.add(&hecke::t(w).scale(&c)))
    })
}

fn schur_elt(n: usize, r: i32) -> impl Strategy<Value = SchurElement> {
    let basis = theta_nr(n, r, n as i32);
    prop::collection::vec((prop::sample::select(basis), laurent()), 1..3).prop_map(|ts| {
        ts.into_iter().fold(SchurElement::zero(), |acc, (a, c)| acc.add(&SchurElement::term(a, c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn reduced_words_rebuild(w in perm(3)) {
        let (a, word) = w.reduced_word();
        prop_assert_eq!(word.len() as u32, w.length());
        prop_assert_eq!(w.inversions().len() as u32, w.length());
        let rebuilt = word.iter().fold(AffinePerm::rho_pow(3, a), |x, &k| x.mul_s(k));
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn perm_group_laws(x in perm(3), y in perm(3), z in perm(3)) {
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        prop_assert_eq!(x.compose(&x.inverse()), AffinePerm::identity(3));
    }

    #[test]
    fn hecke_associative(x in hecke_elt(2), y in hecke_elt(2), z in hecke_elt(2)) {
        prop_assert_eq!(hecke::mul(&hecke::mul(&x, &y), &z), hecke::mul(&x, &hecke::mul(&y, &z)));
    }

    #[test]
    fn hecke_unit(x in hecke_elt(3)) {
        prop_assert_eq!(hecke::mul(&hecke::one(3), &x), x.clone());
        prop_assert_eq!(hecke::mul(&x, &hecke::one(3)), x);
    }

    #[test]
    fn d_index_is_inversion_count(i in prop::collection::vec(-4i32..=6, 1..4), n in 2usize..4) {
        prop_assert_eq!(d_index(&i, n), inversion_count(&i, n) as i64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn schur_associative(x in schur_elt(2, 2), y in schur_elt(2, 2), z in schur_elt(2, 2)) {
        let l = mul_oracle(&mul_oracle(&x, &y).unwrap(), &z).unwrap();
        let r = mul_oracle(&x, &mul_oracle(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn schur_unit(x in schur_elt(3, 2)) {
        let one = identity(3, 2);
        prop_assert_eq!(mul_oracle(&one, &x).unwrap(), x.clone());
        prop_assert_eq!(mul_oracle(&x, &one).unwrap(), x);
    }

    #[test]
    fn specialization_multiplicative(x in schur_elt(2, 3), y in schur_elt(2, 3)) {
        let lhs = specialize(&mul_oracle(&x, &y).unwrap());
        let rhs = mul1(&specialize(&x), &specialize(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rendered_elements_parse_back(x in schur_elt(2, 2), h in hecke_elt(2)) {
        let ctx = Context { n: 2, r: 2 };
        // zero reads back as the scalar 0
        for v in [Value::Schur(x), Value::Hecke(h)].into_iter().filter(|v| render(v, &ctx) != "0") {
            let text = render(&v, &ctx);
            prop_assert_eq!(parse_expr(&text, &ctx).unwrap(), v, "{}", text);
        }
    }
}
