use crystal_embed::crystal::*;
use crystal_embed::kn::KnModel;
use crystal_embed::weyl::weyl_dim;
use proptest::prelude::*;

fn c1() -> Cartan {
    Cartan::new(CartanType::C, 1)
}

fn stats(e: u32, p: u32) -> CrystalStats {
    let cartan = c1();
    let wt = HalfWeight(vec![2 * (p as i32 - e as i32)]);
    CrystalStats::from_eps(&cartan, wt, vec![Ext::from(e as i32)])
}

/// Acting factor of the left-nested tensor product, decided one binary
/// product at a time.
fn fold_acting(fs: &[(u32, u32)], dir: Dir) -> (CrystalStats, Option<usize>) {
    let cartan = c1();
    let (last, init) = fs.split_last().unwrap();
    let right = stats(last.0, last.1);
    if init.is_empty() {
        let can = match dir {
            Dir::E => last.0 > 0,
            Dir::F => last.1 > 0,
        };
        return (right, can.then_some(0));
    }
    let (left, inner) = fold_acting(init, dir);
    let t = tensor_stats(&cartan, &left, &right, 1);
    let goes_left = match dir {
        Dir::E => t.e_left,
        Dir::F => t.f_left,
    };
    let pos = if goes_left {
        inner
    } else {
        (match dir {
            Dir::E => last.0,
            Dir::F => last.1,
        } > 0)
            .then_some(init.len())
    };
    (tensor(&cartan, &left, &right), pos)
}

fn weight(ty: CartanType, doubled: &[i32]) -> u128 {
    weyl_dim(ty, &HalfWeight(doubled.to_vec()))
}

#[test]
fn pairing_in_rank_one() {
    let s = stats(1, 3);
    assert_eq!(c1().pairing(&s.wt, 1), 2);
    assert_eq!(s.phi(1), Ext::from(3));
    assert!(s.axiom_holds(&c1()));
}

#[test]
fn signature_examples() {
    use Sign::*;
    let sig = signature_reduce(&[Plus, Minus, Plus, Dot, Minus, Minus, Plus]);
    assert_eq!((sig.eps, sig.phi), (1, 1));
    assert_eq!(sig.e_pos, Some(4));
    assert_eq!(sig.f_pos, Some(0));
    let sig = signature_reduce(&[Minus, Plus]);
    assert_eq!((sig.eps, sig.phi, sig.e_pos, sig.f_pos), (0, 0, None, None));
}

#[test]
fn weyl_dimensions() {
    assert_eq!(weight(CartanType::C, &[2, 2]), 5);
    assert_eq!(weight(CartanType::C, &[2]), 2);
    assert_eq!(weight(CartanType::B, &[1, 1, 1]), 8);
    assert_eq!(weight(CartanType::B, &[2, 0, 0]), 7);
    assert_eq!(weight(CartanType::B, &[0, 0, 0]), 1);
    assert_eq!(weight(CartanType::C, &[0, 0, 0, 0]), 1);
    assert_eq!(weight(CartanType::C, &[4, 2]), 16);
    assert_eq!(weight(CartanType::B, &[7, 7, 7, 5, 1]), 8_968_960);
}

#[test]
fn cap_is_reported() {
    let model = KnModel::new(Cartan::new(CartanType::C, 3), &[2, 1], false);
    let hw = model.highest();
    let err = generate_graph(&model, hw.clone(), GraphOptions { cap: 10, ..Default::default() }).unwrap_err();
    assert_eq!(err, GraphError::CapExceeded(10));
    let g = generate_graph(&model, hw, GraphOptions::default()).unwrap();
    assert_eq!(g.len() as u128, weight(CartanType::C, &[4, 2, 0]));
    assert!(g.check_axioms(&model).is_empty());
}

#[test]
fn depth_bound_limits_closure() {
    let model = KnModel::new(Cartan::new(CartanType::B, 2), &[1], false);
    let opts = GraphOptions { max_depth: Some(1), lowering_only: true, ..Default::default() };
    let g = generate_graph(&model, model.highest(), opts).unwrap();
    assert_eq!(g.len(), 2);
    assert_eq!(g.edges, vec![(0, 1, 1)]);
}

#[test]
fn shifted_crystal_moves_weight_only() {
    let cartan = Cartan::new(CartanType::C, 2);
    let model = KnModel::new(cartan, &[1], false);
    let shift = cartan.omega(2);
    let shifted = Shifted::new(&model, shift.clone());
    let b = model.highest();
    let (s, t) = (model.stats(&b), shifted.stats(&b));
    assert_eq!(t.wt, &s.wt + &shift);
    assert_eq!(s.eps, t.eps);
    assert_ne!(s.phi, t.phi);
    assert_eq!(shifted.step(&b, 1, Dir::F), model.step(&b, 1, Dir::F));
}

proptest! {
    #[test]
    fn route_agrees_with_tensor_fold(fs in prop::collection::vec((0u32..4, 0u32..4), 1..7), up in any::<bool>()) {
        let dir = if up { Dir::E } else { Dir::F };
        let (e, p, pos) = route(&fs, dir);
        let (s, fold_pos) = fold_acting(&fs, dir);
        prop_assert_eq!(Ext::from(e as i32), s.eps(1));
        prop_assert_eq!(Ext::from(p as i32), s.phi(1));
        prop_assert_eq!(pos, fold_pos);
        prop_assert_eq!(pos.is_some(), if up { e > 0 } else { p > 0 });
    }

    #[test]
    fn reduced_signature_shape(word in prop::collection::vec(0u8..3, 0..20)) {
        let word: Vec<Sign> = word.into_iter().map(|k| [Sign::Plus, Sign::Minus, Sign::Dot][k as usize]).collect();
        let sig = signature_reduce(&word);
        let plus = word.iter().filter(|s| **s == Sign::Plus).count() as i64;
        let minus = word.iter().filter(|s| **s == Sign::Minus).count() as i64;
        prop_assert_eq!(sig.phi as i64 - sig.eps as i64, plus - minus);
        if let (Some(e), Some(f)) = (sig.e_pos, sig.f_pos) {
            prop_assert!(f < e);
        }
    }
}
