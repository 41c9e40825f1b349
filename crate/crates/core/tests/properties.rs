mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use common::{int, random_poset, rng};
use kpsi_core::composition::permutations;
use kpsi_core::poset::{enumerate_skew_shapes, naturally_labeled_posets, skew_shape_poset};
use kpsi_core::ppartition::{
    apply_f_s, apply_g_s, count_t, enumerate_pointed_partitions, enumerate_zigzag_labelings,
    k_generating_function, psi_expansion_pointed, sigma_weight, zigzag_type,
};
use kpsi_core::qsym::{convert, max1, max1_basis, min1, multiply};
use kpsi_core::tableaux::enumerate_bst;
use kpsi_core::{Basis, Composition, Guards, LabeledPoset, QSymElement, Rational, SkewShape};

fn subsets(m: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << m.saturating_sub(1))
        .map(|mask| (1..m).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

fn signed(s: &BTreeSet<usize>, v: BigUint) -> BigInt {
    if s.len().is_multiple_of(2) {
        BigInt::from(v)
    } else {
        -BigInt::from(v)
    }
}

#[test]
fn min1_and_max1_detect_unique_extremes() {
    let g = Guards::DEFAULT;
    for n in 1..=7 {
        for p in naturally_labeled_posets(n, &g).unwrap() {
            let k = k_generating_function(&p, &g).unwrap();
            let lo = int(i64::from(p.minimal_elements().len() == 1));
            let hi = int(i64::from(p.maximal_elements().len() == 1));
            assert_eq!(min1(&k).unwrap(), lo, "{p}");
            assert_eq!(max1(&k).unwrap(), hi, "{p}");
        }
    }
}

#[test]
fn zigzags_by_type_are_alternating_sums() {
    let g = Guards::DEFAULT;
    for n in 1..=7 {
        for p in naturally_labeled_posets(n, &g).unwrap() {
            let m = p.minimal_elements().len();
            if m > 3 {
                continue;
            }
            let mut by_type: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for phi in enumerate_zigzag_labelings(&p, &g).unwrap() {
                *by_type.entry(zigzag_type(&p, &phi).unwrap()).or_insert(0) += 1;
            }
            let fact = Rational::from_integer((1..n).product::<usize>().into());
            for pi in permutations(m) {
                let mut sum = BigInt::from(0);
                for s in subsets(m) {
                    let sigma = apply_f_s(&pi, &s).unwrap();
                    sum += signed(&s, count_t(&p, &pi, &sigma, &g).unwrap());
                }
                let want = by_type.get(&pi).copied().unwrap_or(0);
                assert_eq!(sum, BigInt::from(want), "{p} type {pi:?}");

                let sigma = &pi;
                let mut sum = BigInt::from(0);
                for s in subsets(m) {
                    let pi2 = apply_g_s(sigma, &s).unwrap();
                    sum += signed(&s, count_t(&p, &pi2, sigma, &g).unwrap());
                }
                let weight = sigma_weight(&p, sigma).unwrap();
                let lhs = &fact * max1_basis(Basis::Psi, &weight);
                assert_eq!(lhs, Rational::from_integer(sum), "{p} sigma {sigma:?}");
            }
        }
    }
}

#[test]
fn border_strip_tableaux_match_pointed_partitions() {
    let g = Guards::DEFAULT;
    for n in 1..=7 {
        for s in enumerate_skew_shapes(n) {
            let p = skew_shape_poset(&s);
            let mut pointed: BTreeMap<Composition, Vec<i64>> = BTreeMap::new();
            for f in enumerate_pointed_partitions(&p, &g).unwrap() {
                pointed.entry(f.weight()).or_default().push(f.sign().into());
            }
            let mut tableaux: BTreeMap<Composition, Vec<i64>> = BTreeMap::new();
            for alpha in Composition::all_of(n) {
                for t in enumerate_bst(&s, &alpha).unwrap() {
                    assert_eq!(t.height(), t.strip_heights().iter().sum::<usize>());
                    tableaux.entry(alpha.clone()).or_default().push(t.sign());
                }
            }
            for signs in pointed.values_mut().chain(tableaux.values_mut()) {
                signs.sort();
            }
            assert_eq!(pointed, tableaux, "{s}");
        }
    }
}

#[test]
fn random_posets_have_integral_pointed_expansions() {
    let g = Guards::DEFAULT;
    let mut r = rng(7);
    for n in 5..=7 {
        for _ in 0..40 {
            let p = random_poset(n, 0.3, &mut r);
            let k = psi_expansion_pointed(&p, &g).unwrap();
            assert!(k.is_integral(), "{p}");
            let via_l = convert(&k_generating_function(&p, &g).unwrap(), Basis::Psi);
            assert!(via_l.same_representation(&k), "{p}");
        }
    }
}

#[test]
fn file_formats_round_trip() {
    let p = LabeledPoset::new(4, &[(1, 3), (2, 3), (3, 4)]).unwrap();
    assert_eq!(LabeledPoset::from_json(&p.to_json()).unwrap(), p);
    let s = SkewShape::from_parts(&[6, 3, 3, 2], &[2, 2, 1]).unwrap();
    assert_eq!(SkewShape::from_json(&s.to_json()).unwrap(), s);
    let f: QSymElement = "3/2*L[2,1] - L[3]".parse().unwrap();
    assert!(QSymElement::from_json(&f.to_json())
        .unwrap()
        .same_representation(&f));
    assert!(f
        .to_string()
        .parse::<QSymElement>()
        .unwrap()
        .same_representation(&f));
}

fn poset_strategy(max: usize) -> impl Strategy<Value = LabeledPoset> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| random_poset(n, 0.4, &mut rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn disjoint_unions_multiply(p in poset_strategy(4), q in poset_strategy(3)) {
        let g = Guards::DEFAULT;
        let union = k_generating_function(&p.disjoint_union(&q), &g).unwrap();
        let product = multiply(
            &k_generating_function(&p, &g).unwrap(),
            &k_generating_function(&q, &g).unwrap(),
        );
        prop_assert!(union == product);
        let psi = convert(&union, Basis::Psi);
        let lengths = |x: &LabeledPoset| x.minimal_elements().len();
        if p.is_naturally_labeled() && q.is_naturally_labeled() {
            let shortest = psi.support().map(Composition::len).min().unwrap();
            prop_assert_eq!(shortest, lengths(&p) + lengths(&q));
        }
    }

    #[test]
    fn pointed_route_matches_on_random_posets(p in poset_strategy(6)) {
        let g = Guards::DEFAULT;
        let a = convert(&k_generating_function(&p, &g).unwrap(), Basis::Psi);
        let b = psi_expansion_pointed(&p, &g).unwrap();
        prop_assert!(a.same_representation(&b));
    }
}
