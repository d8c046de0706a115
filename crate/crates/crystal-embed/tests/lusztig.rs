use crystal_embed::crystal::*;
use crystal_embed::lusztig::*;
use crystal_embed::verify::{lusztig_properties, random_datum};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn type_a(n: usize, entries: &[u32]) -> TypeAMatrix {
    let mut c = TypeAMatrix::zero(n);
    let mut k = 0;
    for i in 1..2 * n {
        for j in (i + 1)..=2 * n {
            c.set(i, j, entries[k % entries.len()]);
            k += 1;
        }
    }
    c
}

fn datum(n: usize, entries: &[u32]) -> FoldedDatum {
    let mut d = FoldedDatum::zero(n);
    let mut k = 0;
    for i in 1..=n {
        for j in i..=n {
            d.set_dplus(i, j, entries[k % entries.len()]);
            k += 1;
            if j > i {
                d.set_dminus(i, j, entries[k % entries.len()]);
                k += 1;
            }
        }
    }
    d
}

#[test]
fn zero_datum_is_highest() {
    for ty in [CartanType::B, CartanType::C] {
        let lm = LusztigModel::new(Cartan::new(ty, 3));
        let z = FoldedDatum::zero(3);
        for i in 1..=3 {
            assert_eq!(lm.step(&z, i, Dir::E), None);
            let f = lm.step(&z, i, Dir::F).unwrap();
            assert_eq!(lm.step(&f, i, Dir::E), Some(z.clone()));
            assert_eq!(lm.weight(&f), lm.cartan.alpha(i).scale(-1));
        }
    }
}

#[test]
fn folding_round_trips_and_rejects_asymmetric_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ty in [CartanType::B, CartanType::C] {
        for n in 1..=4 {
            for _ in 0..50 {
                let d = random_datum(&mut rng, n, 3);
                let c = chi(ty, &d);
                assert!(c.is_sigma_fixed());
                assert_eq!(chi_inv(ty, &c), Ok(d));
            }
        }
        let mut c = TypeAMatrix::zero(2);
        c.set(1, 2, 1);
        assert_eq!(chi_inv(ty, &c), Err(LusztigError::NotSigmaFixed));
    }
}

#[test]
fn bounded_closures_satisfy_the_axioms() {
    for (ty, n) in [(CartanType::B, 2), (CartanType::C, 2), (CartanType::B, 3), (CartanType::C, 3)] {
        let lm = LusztigModel::new(Cartan::new(ty, n));
        let opts = GraphOptions { max_depth: Some(4), ..Default::default() };
        let g = generate_graph(&lm, FoldedDatum::zero(n), opts).unwrap();
        assert!(g.len() > 1);
        let bad = g.check_axioms(&lm);
        assert!(bad.is_empty(), "{ty}{n}: {}", bad[0]);
    }
}

#[test]
fn random_data_properties() {
    for ty in [CartanType::B, CartanType::C] {
        for n in 1..=3 {
            let out = lusztig_properties(ty, n, 200, 11);
            assert!(out.is_ok(), "{ty}{n}: {:?}", out.err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn type_a_eps_matches_iteration(n in 1usize..=3, entries in prop::collection::vec(0u32..3, 15)) {
        let c = type_a(n, &entries);
        for i in 1..2 * n {
            let mut k = 0;
            let mut cur = c.clone();
            while let Some(next) = cur.step(i, Dir::E) {
                prop_assert_eq!(next.step(i, Dir::F), Some(cur.clone()));
                cur = next;
                k += 1;
            }
            prop_assert_eq!(k, c.eps(i));
            let f = c.step(i, Dir::F).unwrap();
            prop_assert_eq!(f.step(i, Dir::E), Some(c.clone()));
            let (w, wf) = (c.weight(), f.weight());
            let diff: Vec<i64> = w.iter().zip(&wf).map(|(a, b)| a - b).collect();
            let mut alpha = vec![0i64; 2 * n];
            alpha[i - 1] = 1;
            alpha[i] = -1;
            prop_assert_eq!(diff, alpha);
        }
    }

    #[test]
    fn sigma_is_an_involution(n in 1usize..=3, entries in prop::collection::vec(0u32..4, 15)) {
        let c = type_a(n, &entries);
        prop_assert_eq!(c.sigma().sigma(), c.clone());
        for i in 1..2 * n {
            prop_assert_eq!(c.sigma().eps(2 * n - i), c.eps(i));
        }
    }

    #[test]
    fn folded_operators_stay_sigma_fixed(c_type in any::<bool>(), n in 1usize..=3, entries in prop::collection::vec(0u32..3, 9)) {
        let ty = if c_type { CartanType::C } else { CartanType::B };
        let lm = LusztigModel::new(Cartan::new(ty, n));
        let d = datum(n, &entries);
        let c = chi(ty, &d);
        for i in 1..n {
            prop_assert_eq!(c.eps(i), c.eps(2 * n - i));
        }
        for i in 1..=n {
            prop_assert_eq!(lm.eps(&d, i), lm.eps_iterated(&d, i));
            for dir in Dir::both() {
                prop_assert!(lm.step_checked(&d, i, dir).is_ok());
                prop_assert_eq!(lm.step_via_delta(&d, i, dir), lm.step(&d, i, dir));
            }
        }
    }
}
