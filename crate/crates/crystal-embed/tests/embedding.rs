use crystal_embed::crystal::*;
use crystal_embed::embedding::*;
use crystal_embed::lusztig::FoldedDatum;
use crystal_embed::verify::{morphisms, random_e_r, separation_properties};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn schedule_length_and_range() {
    for a in [vec![0], vec![1, 1, 2, 3], vec![0, 0, 1, 1, 2], vec![2, 2, 2]] {
        let ell = a.len();
        let s = separation_schedule(&a);
        assert_eq!(s.len(), ell * (ell - 1) / 2);
        assert!(s.iter().all(|&(i, _)| i >= 1 && i < 2 * ell));
    }
    assert_eq!(separation_schedule(&[1, 1, 2, 3]), vec![(6, 2), (4, 1), (5, 1), (2, 1), (3, 1), (4, 1)]);
}

#[test]
fn e_r_operators_are_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let us = random_e_r(&mut rng, 4, 5);
        for i in 1..5 {
            let mut v = us.clone();
            if e_r_step(&mut v, i, Dir::F) {
                let mut w = v.clone();
                assert!(e_r_step(&mut w, i, Dir::E));
                assert_eq!(w, us);
            } else {
                assert_eq!(v, us);
            }
        }
    }
}

#[test]
fn twist_from_weight_balance() {
    for (ty, n, mu, spin) in [
        (CartanType::C, 5, vec![4, 4, 3, 2], false),
        (CartanType::C, 3, vec![2, 1], false),
        (CartanType::B, 3, vec![2, 1], false),
        (CartanType::B, 5, vec![3, 3, 3, 2], true),
        (CartanType::B, 2, vec![], true),
    ] {
        let p = Pipeline::new(ty, n, &mu, spin);
        let ell = mu.first().copied().unwrap_or(0);
        let want = match (ty, spin) {
            (CartanType::C, _) => ell,
            (CartanType::B, false) => 2 * ell,
            (CartanType::B, true) => 2 * ell + 1,
        };
        assert_eq!(p.r, want, "{ty}{n} {mu:?} spin={spin}");
    }
}

#[test]
fn highest_elements_correspond() {
    for (ty, n, mu, spin) in [(CartanType::C, 3, vec![2, 1], false), (CartanType::B, 3, vec![1, 1], true)] {
        let p = Pipeline::new(ty, n, &mu, spin);
        let s = p.psi(&p.kn.highest()).unwrap();
        assert_eq!(s, p.spinor.highest());
        let v = p.theta(&s).unwrap();
        assert!(v.body.cols.iter().all(|c| c.iter().all(|x| x.index() == n)));
        assert_eq!(p.xi(&p.kn.highest()).unwrap(), p.phi(&v).unwrap());
        let shifted = Shifted::new(&p.verma, p.verma_shift());
        assert_eq!(shifted.stats(&v).wt, p.kn.omega_lambda());
        if !spin {
            assert_eq!(v, p.verma.highest());
            assert_eq!(p.xi(&p.kn.highest()).unwrap(), FoldedDatum::zero(n));
        }
    }
}

#[test]
fn separation_on_small_shapes() {
    for (ty, n, mu, spin) in [
        (CartanType::C, 3, vec![2, 1], false),
        (CartanType::C, 2, vec![3, 3], false),
        (CartanType::B, 3, vec![2, 2], false),
        (CartanType::B, 3, vec![2, 1], true),
    ] {
        let out = separation_properties(ty, n, &mu, spin, 100_000);
        assert!(out.is_ok(), "{ty}{n} {mu:?}: {:?}", out.err());
    }
}

#[test]
fn embeddings_are_morphisms_in_rank_two() {
    for ty in [CartanType::B, CartanType::C] {
        let rep = morphisms(ty, 2, 2, 100_000);
        assert!(rep.passed(), "{rep}");
    }
}
