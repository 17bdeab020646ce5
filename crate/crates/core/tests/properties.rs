use proptest::prelude::*;

use hopf_forge::doubling::{double_direct, DoublingInput};
use hopf_forge::exactlin::{Scalar, SparseVec};
use hopf_forge::groups::{
    cayley_length, cayley_lengths, conjugation_automorphism, coxeter_length, sn_group, w0_automorphism,
    Permutation,
};
use hopf_forge::hopf::{is_cocommutative, t_map, verify_hopf_axioms, verify_hopf_morphism, MorphismMode};
use hopf_forge::json;
use hopf_forge::algebra::AlgebraMap;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v.into_iter().map(|k| k + 1).collect()).unwrap())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6).prop_map(|(a, b, c, d)| {
        Scalar::new(hopf_forge::exactlin::Rational::new(a, b), hopf_forge::exactlin::Rational::new(c, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_is_inversion_count(n in 2usize..=5, seed in any::<prop::sample::Index>()) {
        let (g, gens) = sn_group(n).unwrap();
        let x = seed.index(g.order());
        let p = g.permutation(x).unwrap();
        prop_assert_eq!(cayley_length(&g, &gens, x).unwrap(), p.inversions());
        prop_assert_eq!(coxeter_length(p), p.inversions());
    }

    #[test]
    fn length_is_a_word_metric(n in 2usize..=5, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (g, gens) = sn_group(n).unwrap();
        let l = cayley_lengths(&g, &gens).unwrap();
        let (x, y) = (a.index(g.order()), b.index(g.order()));
        prop_assert_eq!(l[x], l[g.inv(x)]);
        prop_assert!(l[g.mul(x, y)] <= l[x] + l[y]);
        prop_assert!(l[x] <= n * (n - 1) / 2);
    }

    #[test]
    fn permutation_inverse_and_product(p in permutation(5), q in permutation(5)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        let pq = p.compose(&q);
        for k in 1..=5 {
            prop_assert_eq!(pq.apply(k), p.apply(q.apply(k)));
        }
    }

    #[test]
    fn w0_conjugation_is_an_involutive_automorphism(n in 2usize..=5) {
        let (g, _) = sn_group(n).unwrap();
        let th = w0_automorphism(&g);
        prop_assert!(th.verify_involutive(&g).is_ok());
    }

    #[test]
    fn scalar_text_round_trip(x in scalar()) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn scalar_field_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if let Some(inv) = x.inv() {
            prop_assert!((&x * &inv).is_one());
        }
    }

    #[test]
    fn doubling_by_involution_conjugation_is_hopf(n in 2usize..=4, pick in any::<prop::sample::Index>()) {
        let (g, _) = sn_group(n).unwrap();
        let involutions: Vec<usize> = g.elements().filter(|&x| g.mul(x, x) == g.identity()).collect();
        let t = involutions[pick.index(involutions.len())];
        let k = double_direct(&DoublingInput::new(g.clone(), conjugation_automorphism(&g, t)).unwrap());
        let rep = verify_hopf_axioms(&k);
        prop_assert!(rep.all_pass(), "{}", rep.to_text());
        let text = json::emit(&k);
        prop_assert_eq!(json::emit(&json::parse(&text).unwrap()), text);
    }

    #[test]
    fn sparse_tensor_is_bilinear(a in proptest::collection::vec(-3i64..=3, 3), b in proptest::collection::vec(-3i64..=3, 2), c in scalar()) {
        let x = SparseVec::from_ints(&a);
        let y = SparseVec::from_ints(&b);
        prop_assert_eq!(x.scale(&c).tensor(&y), x.tensor(&y.scale(&c)));
        prop_assert_eq!(x.add(&x).tensor(&y), x.tensor(&y).add(&x.tensor(&y)));
    }
}

#[test]
fn doublings_past_s2_are_not_cocommutative() {
    for n in 3..=4 {
        let (g, _) = sn_group(n).unwrap();
        let k = double_direct(&DoublingInput::new(g.clone(), w0_automorphism(&g)).unwrap());
        assert!(is_cocommutative(&k).is_err(), "n={n}");
    }
}

#[test]
fn hopf_isomorphisms_intertwine_t() {
    // relabelling the first copy by conjugation with g and the second by
    // conjugation with the same g is a Hopf automorphism of the θ = id doubling
    let (g, _) = sn_group(3).unwrap();
    let k = double_direct(&DoublingInput::new(g.clone(), hopf_forge::groups::GroupAutomorphism::identity(&g)).unwrap());
    let t = t_map(&k);
    let n = g.order();
    for w in g.elements() {
        let c = conjugation_automorphism(&g, w);
        let m = hopf_forge::exactlin::SparseMatrix::from_columns(
            2 * n,
            (0..2 * n).map(|i| SparseVec::basis(2 * n, (i / n) * n + c.apply(i % n))).collect(),
        );
        let f = AlgebraMap::new(m.clone(), &k.alg, &k.alg).unwrap();
        let rep = verify_hopf_morphism(&f, &k, &k, MorphismMode::HopfIso);
        assert!(rep.all_pass(), "{}", rep.to_text());
        assert_eq!(m.compose(&t), t.compose(&m));
    }
}
