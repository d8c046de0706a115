use crystal_embed::crystal::*;
use crystal_embed::tableaux::{RotTableau, Tableau};
use crystal_embed::verify::verma_closure;
use crystal_embed::verma::{VermaElem, VermaError, VermaModel};

fn closure(ty: CartanType, n: usize, mu: &[usize], depth: usize) -> (VermaModel, Vec<VermaElem>) {
    let vm = VermaModel::new(Cartan::new(ty, n), mu);
    let opts = GraphOptions { max_depth: Some(depth), ..Default::default() };
    let g = generate_graph(&vm, vm.highest(), opts).unwrap();
    (vm, g.nodes)
}

fn letter_weight(v: &VermaElem, n: usize) -> HalfWeight {
    let mut w = HalfWeight::zero(n);
    for x in v.body.cols.iter().flatten().chain(v.tail.rows.iter().flatten()) {
        w.add_doubled(x.index(), -2);
    }
    w
}

#[test]
fn padding_does_not_change_the_n_operators() {
    for (ty, n, mu) in [(CartanType::C, 3, vec![2, 1]), (CartanType::B, 3, vec![1, 1]), (CartanType::C, 2, vec![])] {
        let (vm, nodes) = closure(ty, n, &mu, 5);
        for v in &nodes {
            for dir in Dir::both() {
                let one = vm.step_n_padded(v, dir, 1);
                assert_eq!(one, vm.step_n_padded(v, dir, 6));
                assert_eq!(one, vm.step(v, n, dir));
            }
        }
    }
}

#[test]
fn weight_is_the_letter_content() {
    for (ty, n, mu) in [(CartanType::C, 3, vec![2, 1]), (CartanType::B, 2, vec![1])] {
        let (vm, nodes) = closure(ty, n, &mu, 5);
        for v in &nodes {
            assert_eq!(vm.stats(v).wt, letter_weight(v, n));
        }
    }
}

#[test]
fn f_n_on_the_empty_body_adds_a_block() {
    let c = VermaModel::new(Cartan::new(CartanType::C, 3), &[]);
    let v = c.step(&c.highest(), 3, Dir::F).unwrap();
    assert_eq!(v.body, RotTableau::from_rows(&[&[-3, -3]]));
    let b = VermaModel::new(Cartan::new(CartanType::B, 3), &[]);
    let v = b.step(&b.highest(), 3, Dir::F).unwrap();
    assert_eq!(v.body, RotTableau::from_rows(&[&[-3]]));
    assert_eq!(b.step(&v, 3, Dir::E), Some(b.highest()));
}

#[test]
fn highest_element_is_killed_by_every_e() {
    for ty in [CartanType::B, CartanType::C] {
        for mu in [vec![], vec![1], vec![2, 2, 1], vec![3, 1]] {
            let vm = VermaModel::new(Cartan::new(ty, 3), &mu);
            let hw = vm.highest();
            assert_eq!(vm.validate(&hw), Ok(()));
            for i in 1..=3 {
                assert_eq!(vm.step(&hw, i, Dir::E), None, "{ty} {mu:?} e_{i}");
                assert_eq!(vm.stats(&hw).eps(i), Ext::from(0));
            }
        }
    }
}

#[test]
fn tail_shape_comes_from_the_column_heights() {
    let vm = VermaModel::new(Cartan::new(CartanType::C, 5), &[4, 4, 3, 2]);
    assert_eq!(vm.nu, vec![4, 2, 1]);
    let hw = vm.highest();
    assert_eq!(hw.tail.rows.len(), 3);
    assert!(hw.body.cols.is_empty());
}

#[test]
fn bounded_closures_are_valid_crystals() {
    for (ty, n, mu, depth) in [
        (CartanType::C, 2, vec![1], 6),
        (CartanType::B, 2, vec![1], 6),
        (CartanType::C, 3, vec![2, 1], 4),
        (CartanType::B, 3, vec![1, 1, 1], 4),
    ] {
        let out = verma_closure(ty, n, &mu, depth, 100_000);
        assert!(out.is_ok(), "{ty}{n} {mu:?}: {:?}", out.err());
    }
}

#[test]
fn depth_bound_counts_operator_applications() {
    let (vm, shallow) = closure(CartanType::C, 2, &[], 2);
    let (_, deeper) = closure(CartanType::C, 2, &[], 3);
    assert!(shallow.len() < deeper.len());
    let mut reach = vec![vm.highest()];
    for _ in 0..2 {
        let next: Vec<VermaElem> = reach
            .iter()
            .flat_map(|v| (1..=2).flat_map(move |i| Dir::both().map(move |d| (v, i, d))))
            .filter_map(|(v, i, d)| vm.step(v, i, d))
            .collect();
        reach.extend(next);
    }
    reach.sort();
    reach.dedup();
    let mut got = shallow.clone();
    got.sort();
    assert_eq!(got, reach);
}

#[test]
fn validation_errors() {
    let c = VermaModel::new(Cartan::new(CartanType::C, 3), &[]);
    let odd = VermaElem { tail: Tableau { rows: vec![] }, body: RotTableau::from_rows(&[&[-3]]) };
    assert_eq!(c.validate(&odd), Err(VermaError::Pairs));
    let pos = VermaElem { tail: Tableau { rows: vec![] }, body: RotTableau::from_rows(&[&[1, 1]]) };
    assert_eq!(c.validate(&pos), Err(VermaError::Body));
    let wide = VermaModel::new(Cartan::new(CartanType::C, 3), &[1]);
    let bad_tail = VermaElem { tail: Tableau { rows: vec![] }, body: RotTableau { cols: vec![] } };
    assert!(matches!(wide.validate(&bad_tail), Err(VermaError::TailShape(..))));
}
