use std::collections::BTreeSet;

use crystal_embed::crystal::*;
use crystal_embed::kn::{KnModel, KnTableau};
use crystal_embed::tableaux::{ints, letters, Alphabet, Column, Letter, Variant};
use crystal_embed::weyl::weyl_dim;

/// Weakly increasing columns of height `h`; validation sorts out the rest.
fn columns(alpha: &[Letter], h: usize) -> Vec<Column> {
    if h == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (k, &x) in alpha.iter().enumerate() {
        for mut rest in columns(&alpha[k..], h - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Every filling of the shape by weakly increasing columns that passes
/// `validate`.
fn brute_force(model: &KnModel) -> BTreeSet<KnTableau> {
    let n = model.cartan.n;
    let alpha = Alphabet::new(n, Variant::J).letters();
    let spin_alpha = Alphabet::new(n, Variant::Jx).letters();
    let spins: Vec<Option<Column>> = if model.spin {
        columns(&spin_alpha, n).into_iter().filter(|c| c.windows(2).all(|w| w[0] < w[1])).map(Some).collect()
    } else {
        vec![None]
    };
    let mut partial: Vec<Vec<Column>> = vec![vec![]];
    for h in model.column_heights() {
        let cs = columns(&alpha, h);
        partial = partial
            .into_iter()
            .flat_map(|p| {
                cs.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
    }
    let mut out = BTreeSet::new();
    for cols in &partial {
        for spin in &spins {
            let t = KnTableau { cols: cols.clone(), spin: spin.clone() };
            if model.validate(&t).is_ok() {
                out.insert(t);
            }
        }
    }
    out
}

fn model(ty: CartanType, n: usize, mu: &[usize], spin: bool) -> KnModel {
    KnModel::new(Cartan::new(ty, n), mu, spin)
}

#[test]
fn brute_force_count_is_weyl_dimension_and_matches_closure() {
    let cases: &[(CartanType, usize, &[usize], bool)] = &[
        (CartanType::C, 2, &[2, 1], false),
        (CartanType::C, 2, &[2, 2], false),
        (CartanType::C, 2, &[3, 1], false),
        (CartanType::C, 3, &[1, 1, 1], false),
        (CartanType::C, 3, &[2, 2, 2], false),
        (CartanType::C, 3, &[3, 2, 1], false),
        (CartanType::B, 2, &[2, 1], false),
        (CartanType::B, 2, &[2, 2], false),
        (CartanType::B, 2, &[1], true),
        (CartanType::B, 2, &[2, 1], true),
        (CartanType::B, 3, &[2, 1], false),
        (CartanType::B, 3, &[1, 1, 1], false),
        (CartanType::B, 3, &[1, 1], true),
        (CartanType::B, 4, &[1, 1], true),
    ];
    for &(ty, n, mu, spin) in cases {
        let m = model(ty, n, mu, spin);
        let all = brute_force(&m);
        let w = weyl_dim(ty, &m.omega_lambda());
        assert_eq!(all.len() as u128, w, "{ty}{n} {mu:?} spin={spin}");
        let g = generate_graph(&m, m.highest(), GraphOptions::default()).unwrap();
        let closure: BTreeSet<KnTableau> = g.nodes.iter().cloned().collect();
        assert_eq!(closure, all, "{ty}{n} {mu:?} spin={spin}");
        assert!(g.check_axioms(&m).is_empty());
    }
}

#[test]
fn highest_weight_element_is_the_unique_source() {
    for (ty, n, mu, spin) in [
        (CartanType::C, 3, vec![2, 1], false),
        (CartanType::B, 3, vec![2, 2], false),
        (CartanType::B, 3, vec![1], true),
    ] {
        let m = model(ty, n, &mu, spin);
        let g = generate_graph(&m, m.highest(), GraphOptions::default()).unwrap();
        let sources: Vec<&KnTableau> =
            g.nodes.iter().filter(|t| m.cartan.indices().all(|i| m.step(t, i, Dir::E).is_none())).collect();
        assert_eq!(sources, vec![&m.highest()]);
    }
}

#[test]
fn reading_word_of_a_c5_tableau() {
    let t = KnTableau {
        cols: vec![letters(&[4, -4, -2, -1]), letters(&[1, 5, -5, -2]), letters(&[3, -5, -2]), letters(&[5, -3])],
        spin: None,
    };
    let m = model(CartanType::C, 5, &[4, 4, 3, 2], false);
    assert_eq!(m.validate(&t), Ok(()));
    assert_eq!(ints(&t.reading_word()), vec![4, 1, -4, 5, 3, -2, -5, -5, 5, -1, -2, -2, -3]);
}

#[test]
fn b5_spin_tableau_is_valid() {
    let t = KnTableau {
        cols: vec![letters(&[0, -5, -3, -1]), letters(&[2, 3, 0, -1]), letters(&[1, 4, -4])],
        spin: Some(letters(&[3, -5, -4, -2, -1])),
    };
    let m = model(CartanType::B, 5, &[3, 3, 3, 2], true);
    assert_eq!(m.validate(&t), Ok(()));
}

#[test]
fn inadmissible_columns_are_rejected() {
    let m = model(CartanType::C, 2, &[1, 1], false);
    let bad = KnTableau { cols: vec![letters(&[1, -1])], spin: None };
    assert!(m.validate(&bad).is_err());
    let ok = KnTableau { cols: vec![letters(&[2, -2])], spin: None };
    assert_eq!(m.validate(&ok), Ok(()));
    let zero = KnTableau { cols: vec![letters(&[1, 0])], spin: None };
    assert!(m.validate(&zero).is_err());
    let spin = model(CartanType::B, 2, &[], true);
    let pair = KnTableau { cols: vec![], spin: Some(letters(&[1, -1])) };
    assert!(spin.validate(&pair).is_err());
}

#[test]
fn operators_shift_weight_by_simple_roots() {
    let m = model(CartanType::B, 3, &[2, 1], true);
    let g = generate_graph(&m, m.highest(), GraphOptions::default()).unwrap();
    for &(s, i, t) in &g.edges {
        let (a, b) = (m.stats(&g.nodes[s]), m.stats(&g.nodes[t]));
        assert_eq!(&a.wt - &b.wt, m.cartan.alpha(i));
        assert_eq!(m.step(&g.nodes[t], i, Dir::E).as_ref(), Some(&g.nodes[s]));
    }
}
