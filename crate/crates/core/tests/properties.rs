use num_bigint::BigInt;
use proptest::prelude::*;

use socle_lab::groth::BasisKind;
use socle_lab::lr::multi_lr;
use socle_lab::partition::partitions_of;
use socle_lab::zuckerman::group_order;
use socle_lab::{
    branching_power_row, ds_eval, dot_action, gamma, is_supersymmetric, jh_injective, kac_supercharacter, lr_coeff,
    socle_layers_injective, super_schur, wedge_projector, BarLabel, GrothVec, IntPoly, Partition, Perm, PermPair,
    RatVec, Rational, SemisimpleDecomp, Weight,
};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn perm(len: usize) -> impl Strategy<Value = Perm> {
    Just((0..len).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::new(v).unwrap())
}

fn perm_pair(m: usize, n: usize) -> impl Strategy<Value = PermPair> {
    (perm(m), perm(n)).prop_map(|(e, o)| PermPair::new(e, o))
}

fn label(m: usize, n: usize) -> impl Strategy<Value = BarLabel> {
    (prop::collection::vec(-4i64..=4, m), prop::collection::vec(-4i64..=4, n)).prop_map(|(a, b)| BarLabel::new(a, b))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn verma(m: usize, n: usize) -> impl Strategy<Value = RatVec> {
    prop::collection::vec((label(m, n), rational()), 1..5)
        .prop_map(move |terms| GrothVec::from_terms(m, n, BasisKind::Verma, terms).unwrap())
}

fn kac(m: usize, n: usize) -> impl Strategy<Value = RatVec> {
    prop::collection::vec((label(m, n), rational()), 1..5).prop_map(move |terms| {
        let mut v = GrothVec::zero(m, n, BasisKind::Kac);
        for (l, c) in terms {
            if let Some((dom, sign)) = l.wedge_canonical() {
                v.add_term(dom, c * Rational::from_integer(BigInt::from(sign)));
            }
        }
        v
    })
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=3, 0usize..=3)
}

fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_is_symmetric_in_the_factors(lam in partition(8), mu in partition(4), nu in partition(4)) {
        prop_assert_eq!(lr_coeff(&lam, &mu, &nu), lr_coeff(&lam, &nu, &mu));
    }

    #[test]
    fn lr_is_invariant_under_conjugation(lam in partition(8), mu in partition(5), nu in partition(5)) {
        prop_assert_eq!(
            lr_coeff(&lam, &mu, &nu),
            lr_coeff(&lam.conjugate(), &mu.conjugate(), &nu.conjugate())
        );
    }

    #[test]
    fn lr_sums_to_dimension_count(mu in partition(3), nu in partition(3)) {
        // Σ_λ N^λ_{μν} dim λ = C(|λ|, |μ|) dim μ dim ν
        let n = mu.size() + nu.size();
        let lhs: num_bigint::BigUint = partitions_of(n).iter().map(|l| lr_coeff(l, &mu, &nu) * l.sym_group_dim()).sum();
        let binom: num_bigint::BigUint = (1..=n).map(num_bigint::BigUint::from).product::<num_bigint::BigUint>()
            / ((1..=mu.size()).map(num_bigint::BigUint::from).product::<num_bigint::BigUint>()
               * (1..=nu.size()).map(num_bigint::BigUint::from).product::<num_bigint::BigUint>());
        prop_assert_eq!(lhs, binom * mu.sym_group_dim() * nu.sym_group_dim());
    }

    #[test]
    fn multi_lr_ignores_fold_order(lam in partition(6), g1 in partition(2), g2 in partition(2), rest in partition(4)) {
        prop_assert_eq!(
            multi_lr(&lam, &[g1.clone(), g2.clone()], &rest),
            multi_lr(&lam, &[g2, g1], &rest)
        );
    }

    #[test]
    fn partitions_round_trip_through_text(lam in partition(10)) {
        let back: Partition = lam.to_string().parse().unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn layers_jh_and_matrix_power_agree(lam in partition(3), mu in partition(3), r in 1usize..=3) {
        let mut summed = SemisimpleDecomp::new();
        for layer in socle_layers_injective(&lam, &mu, r).unwrap() {
            summed.merge(&layer);
        }
        let jh = jh_injective(&lam, &mu, r).unwrap();
        prop_assert_eq!(&summed, &jh);
        prop_assert_eq!(jh, branching_power_row(&lam, &mu, r));
    }

    #[test]
    fn bar_round_trips(even in prop::collection::vec(-9i64..=9, 0..4), odd in prop::collection::vec(-9i64..=9, 0..4)) {
        let w = Weight::new(even, odd);
        prop_assert_eq!(w.bar().unbar(), w);
    }

    #[test]
    fn sym_act_commutes_with_chevalley(
        (v, s) in shape().prop_flat_map(|(m, n)| (verma(m, n), perm_pair(m, n))),
        i in -5i64..=5,
    ) {
        prop_assert_eq!(v.apply_e(i).sym_act(&s).unwrap(), v.sym_act(&s).unwrap().apply_e(i));
        prop_assert_eq!(v.apply_f(i).sym_act(&s).unwrap(), v.sym_act(&s).unwrap().apply_f(i));
    }

    #[test]
    fn iota_is_equivariant_and_injective(k in shape().prop_flat_map(|(m, n)| kac(m, n)), i in -5i64..=5) {
        let iota = k.iota_kac().unwrap();
        prop_assert_eq!(k.is_zero(), iota.is_zero());
        prop_assert_eq!(k.apply_e(i).iota_kac().unwrap(), iota.apply_e(i));
        prop_assert_eq!(k.apply_f(i).iota_kac().unwrap(), iota.apply_f(i));
        // the dominant label of each Kac term carries the same coefficient
        for (l, c) in k.terms() {
            prop_assert_eq!(&iota.coeff(l), c);
        }
    }

    #[test]
    fn contraction_is_a_module_map(
        (v, i, j) in (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| (verma(m, n), 1..=m, 1..=n)),
        k in -5i64..=5,
    ) {
        prop_assert_eq!(v.apply_e(k).contraction(i, j).unwrap(), v.contraction(i, j).unwrap().apply_e(k));
        prop_assert_eq!(v.apply_f(k).contraction(i, j).unwrap(), v.contraction(i, j).unwrap().apply_f(k));
    }

    #[test]
    fn atypicality_is_bounded_and_dot_invariant(
        (l, s) in shape().prop_flat_map(|(m, n)| (label(m, n), perm_pair(m, n))),
    ) {
        let w = l.unbar();
        let a = w.atypicality();
        prop_assert!(a <= w.m().min(w.n()));
        prop_assert_eq!(dot_action(&s, &w).atypicality(), a);
    }

    #[test]
    fn gamma_identities(
        (v, s) in shape().prop_flat_map(|(m, n)| (verma(m, n), perm_pair(m, n))),
    ) {
        let g = gamma(&v).unwrap();
        let order = Rational::from_integer(BigInt::from(group_order(v.m(), v.n())));
        prop_assert_eq!(gamma(&g).unwrap(), g.scale(&order));
        prop_assert_eq!(gamma(&v.sym_act(&s).unwrap()).unwrap(), g.scale(&q(s.sign())));
        let p = wedge_projector(&v).unwrap();
        prop_assert_eq!(wedge_projector(&p).unwrap(), p);
    }

    #[test]
    fn gamma_on_a_label_is_plus_minus_iota(l in shape().prop_flat_map(|(m, n)| label(m, n))) {
        let g = gamma(&GrothVec::<Rational>::verma(l.clone())).unwrap();
        match l.wedge_canonical() {
            None => prop_assert!(g.is_zero()),
            Some((dom, sign)) => {
                let i = GrothVec::<Rational>::kac(dom).unwrap().iota_kac().unwrap();
                prop_assert_eq!(g, i.scale(&q(sign)));
            }
        }
    }

    #[test]
    fn super_schur_is_supersymmetric(lam in partition(5), m in 0usize..=3, n in 0usize..=3) {
        let s: IntPoly = super_schur(&lam, m, n);
        prop_assert!(is_supersymmetric(&s));
        if m >= 1 && n >= 1 {
            prop_assert_eq!(ds_eval(&s).unwrap(), super_schur(&lam, m - 1, n - 1));
        }
    }

    #[test]
    fn ds_is_a_ring_homomorphism(a in partition(3), b in partition(3), m in 1usize..=3, n in 1usize..=3, c in -3i64..=3) {
        let f: IntPoly = super_schur(&a, m, n);
        let g: IntPoly = super_schur::<BigInt>(&b, m, n).scale(&BigInt::from(c));
        let (df, dg) = (ds_eval(&f).unwrap(), ds_eval(&g).unwrap());
        prop_assert_eq!(ds_eval(&f.mul(&g).unwrap()).unwrap(), df.mul(&dg).unwrap());
        prop_assert_eq!(ds_eval(&f.add(&g).unwrap()).unwrap(), df.add(&dg).unwrap());
    }

    #[test]
    fn kac_characters_vanish_under_ds(
        m in 1usize..=2, n in 1usize..=2,
        even in prop::collection::vec(-2i64..=2, 2), odd in prop::collection::vec(-2i64..=2, 2),
    ) {
        let mut e = even[..m].to_vec();
        let mut o = odd[..n].to_vec();
        e.sort_unstable_by(|x, y| y.cmp(x));
        o.sort_unstable_by(|x, y| y.cmp(x));
        let k: IntPoly = kac_supercharacter(&Weight::new(e, o), m, n).unwrap();
        prop_assert!(ds_eval(&k).unwrap().is_zero());
    }
}
