use std::collections::HashSet;

use crystal_embed::crystal::*;
use crystal_embed::kn::{KnModel, KnTableau};
use crystal_embed::spinor::*;
use crystal_embed::tableaux::{letters, Column};
use crystal_embed::verify::two_columns;
use proptest::prelude::*;

fn all_two_columns(m: usize, max: usize) -> Vec<TwoCol> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max - a {
            for c in 0..=max - a - b {
                out.extend(two_columns(m, a, b, c));
            }
        }
    }
    out
}

#[test]
fn sliding_matches_iterated_e() {
    let mut count = 0;
    for m in 1..=5 {
        for t in all_two_columns(m, 7).into_iter().filter(|t| t.r() == 0) {
            assert_eq!(t.lt_rt(), t.lt_rt_slide(), "{t:?}");
            count += 1;
        }
    }
    assert!(count > 1000);
}

#[test]
fn cal_e_and_cal_f_are_inverse() {
    for t in all_two_columns(4, 6) {
        if t.r() != 0 {
            assert_eq!(t.try_step(Dir::F), Err(SpinorError::NotNormal(t.r())));
            continue;
        }
        assert_eq!(t.try_step(Dir::F), Ok(t.cal_f()));
        if let Some(u) = t.cal_f() {
            assert_eq!(u.cal_e().as_ref(), Some(&t));
            assert_eq!(u.a, t.a + 1);
        }
        if let Some(u) = t.cal_e() {
            assert_eq!(u.cal_f().as_ref(), Some(&t));
        }
    }
}

#[test]
fn normalize_finds_the_unslidable_placement() {
    for t in all_two_columns(4, 6) {
        let nt = normalize(&t.left, &t.right);
        assert_eq!(nt.r(), 0);
        assert_eq!((&nt.left, &nt.right), (&t.left, &t.right));
        if t.r() == 0 {
            assert_eq!(nt, t);
        }
    }
}

/// Every admissible KN column of height `h` for rank `n`, found through
/// single-column models.
fn kn_columns(ty: CartanType, n: usize, h: usize) -> Vec<Column> {
    let mu = vec![1; h];
    let m = KnModel::new(Cartan::new(ty, n), &mu, false);
    generate_graph(&m, m.highest(), GraphOptions::default())
        .unwrap()
        .nodes
        .into_iter()
        .map(|t| t.cols[0].clone())
        .collect()
}

#[test]
fn single_column_bijection_round_trips() {
    for ty in [CartanType::B, CartanType::C] {
        for n in 1..=4 {
            for h in 1..=n {
                let mut seen = HashSet::new();
                for col in kn_columns(ty, n, h) {
                    let t = psi_column(ty, n, &col).unwrap();
                    assert_eq!(t.a, n - h);
                    assert!(seen.insert(t.clone()));
                    assert_eq!(psi_column_inv(n, &t), col);
                }
            }
        }
    }
}

#[test]
fn spin_column_bijection_round_trips() {
    let m = KnModel::new(Cartan::new(CartanType::B, 4), &[], true);
    let g = generate_graph(&m, m.highest(), GraphOptions::default()).unwrap();
    assert_eq!(g.len(), 16);
    let mut seen = HashSet::new();
    for t in &g.nodes {
        let sp = t.spin.as_ref().unwrap();
        let img = psi_spin(sp);
        assert!(img.iter().all(|x| x.is_neg()));
        assert!(seen.insert(img.clone()));
        assert_eq!(&psi_spin_inv(4, &img), sp);
    }
}

#[test]
fn psi_is_a_bijection_onto_the_spinor_crystal() {
    for (ty, n, mu, spin) in [
        (CartanType::C, 3, vec![2, 1], false),
        (CartanType::C, 2, vec![3, 2], false),
        (CartanType::B, 3, vec![2, 2, 1], false),
        (CartanType::B, 3, vec![1, 1], true),
    ] {
        let cartan = Cartan::new(ty, n);
        let kn = KnModel::new(cartan, &mu, spin);
        let sm = SpinorModel::from_kn(&kn);
        assert_eq!(sm.mu(), mu);
        let kg = generate_graph(&kn, kn.highest(), GraphOptions::default()).unwrap();
        let sg = generate_graph(&sm, sm.highest(), GraphOptions::default()).unwrap();
        assert_eq!(kg.len(), sg.len());
        assert!(sg.check_axioms(&sm).is_empty());
        let targets: HashSet<&SpinorTuple> = sg.nodes.iter().collect();
        assert_eq!(psi_lambda(&kn, &kn.highest()).unwrap(), sm.highest());
        for t in &kg.nodes {
            let s = psi_lambda(&kn, t).unwrap();
            assert!(targets.contains(&s));
            assert_eq!(&psi_lambda_inv(n, &s), t);
            assert_eq!(kn.stats(t), sm.stats(&s));
        }
    }
}

#[test]
fn validation_rejects_malformed_tuples() {
    let sm = SpinorModel::new(Cartan::new(CartanType::C, 3), &[1, 1], false);
    assert_eq!(sm.a, vec![1]);
    let gap = TwoCol::new(1, letters(&[-3]), letters(&[-2])).unwrap();
    assert_eq!(gap.b(), 1);
    let t = SpinorTuple { cols: vec![gap], spin: None };
    assert!(matches!(sm.validate(&t), Err(SpinorError::GapNotEmpty(1))));
    let wrong = SpinorTuple { cols: vec![SpinorModel::h_a(3, 2)], spin: None };
    assert!(matches!(sm.validate(&wrong), Err(SpinorError::WrongTail(1, 2, 1))));
    assert!(TwoCol::new(0, letters(&[-1]), letters(&[-2])).is_err());
    let kn = KnTableau { cols: vec![letters(&[1, 2])], spin: None };
    let km = KnModel::new(Cartan::new(CartanType::C, 3), &[1, 1], false);
    assert_eq!(psi_lambda(&km, &kn).unwrap().cols[0].a, 1);
}

proptest! {
    #[test]
    fn pair_operators_preserve_letters(m in 2usize..=5, pick in 0usize..10_000) {
        let all = all_two_columns(m, 6);
        let t = &all[pick % all.len()];
        for step in [pair_cal_f(&t.left, &t.right), pair_cal_e(&t.left, &t.right)].into_iter().flatten() {
            let mut before: Vec<_> = t.left.iter().chain(&t.right).copied().collect();
            let mut after: Vec<_> = step.0.iter().chain(&step.1).copied().collect();
            before.sort();
            after.sort();
            prop_assert_eq!(before, after);
        }
    }
}
