//! Verification suites: worked fixtures, cardinality oracles, morphism
//! checks, and randomized structural properties.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crystal::{
    check_morphism, generate_graph, Cartan, CartanType, Crystal, CrystalGraph, Dir, GraphError, GraphOptions,
    MorphismReport, Shifted,
};
use crate::embedding::{e_r_step, separate, separation_schedule, to_e_r, Pipeline};
use crate::kn::KnTableau;
use crate::lusztig::{chi, FoldedDatum, LusztigModel};
use crate::spinor::{admissible, psi_column, psi_column_inv, psi_spin, psi_spin_inv, SpinorTuple, TwoCol};
use crate::tableaux::{column_ok, ints, is_partition, kappa_inv, letters, Column, Letter, RotTableau, SymMatrix};
use crate::verma::{VermaElem, VermaModel};
use crate::weyl::weyl_dim;

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "CRYSTAL_EMBED_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// The seed from [`SEED_ENV`], or [`DEFAULT_SEED`].
pub fn env_seed() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Graph generation stopped at the node cap before finishing.
    CapExceeded,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::CapExceeded => "CAP ",
        };
        write!(f, "{tag} {} [{:.1?}]", self.name, self.elapsed)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn cap_exceeded(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::CapExceeded)
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    /// Run `f`, timing it, and record the outcome under `name`.
    pub fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let out = f();
        let (status, detail) = match out {
            Ok(d) => (Status::Pass, d),
            Err(Failure::Check(d)) => (Status::Fail, d),
            Err(Failure::Cap(k)) => (Status::CapExceeded, format!("node cap {k} reached")),
        };
        self.checks.push(Check { name: name.into(), status, detail, elapsed: start.elapsed() });
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| c.status != Status::Pass).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

#[derive(Clone, Debug)]
pub enum Failure {
    Check(String),
    Cap(usize),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Check(s)
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::CapExceeded(k) => Failure::Cap(k),
        }
    }
}

pub type Outcome = Result<String, Failure>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Check(msg()))
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Result<(), Failure> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn col(v: &[i32]) -> Column {
    letters(v)
}

fn two(a: usize, left: &[i32], right: &[i32]) -> Result<TwoCol, Failure> {
    TwoCol::new(a, col(left), col(right)).map_err(|e| Failure::Check(e.to_string()))
}

fn pair(t: &TwoCol) -> (Vec<i32>, Vec<i32>) {
    (ints(&t.left), ints(&t.right))
}

fn rows_i(rows: &[Vec<Letter>]) -> Vec<Vec<i32>> {
    rows.iter().map(|r| ints(r)).collect()
}

fn fixture_kn_c5() -> KnTableau {
    KnTableau { cols: vec![col(&[4, -4, -2, -1]), col(&[1, 5, -5, -2]), col(&[3, -5, -2]), col(&[5, -3])], spin: None }
}

fn fixture_kn_b5() -> KnTableau {
    KnTableau {
        cols: vec![col(&[0, -5, -3, -1]), col(&[2, 3, 0, -1]), col(&[1, 4, -4])],
        spin: Some(col(&[3, -5, -4, -2, -1])),
    }
}

fn string_err<E: fmt::Display>(e: E) -> Failure {
    Failure::Check(e.to_string())
}

/// The worked fixtures, each compared value for value.
pub fn worked_examples() -> SuiteReport {
    let mut rep = SuiteReport::default();

    rep.run("1a two-column F chain over [8]", || {
        let mut t = two(0, &[4, 6, 7], &[1, 2, 4, 5, 6, 8])?;
        let want: [(&[i32], &[i32]); 3] =
            [(&[4, 5, 6, 7], &[1, 2, 4, 6, 8]), (&[2, 4, 5, 6, 7], &[1, 4, 6, 8]), (&[1, 2, 4, 5, 6, 7], &[4, 6, 8])];
        for (k, (l, r)) in want.iter().enumerate() {
            expect_eq("r_T", t.r(), 0)?;
            t = t.cal_f().ok_or_else(|| format!("F undefined at step {}", k + 1))?;
            expect_eq(&format!("step {}", k + 1), pair(&t), (l.to_vec(), r.to_vec()))?;
            expect_eq("tail", t.a, k + 1)?;
        }
        expect_eq("F at b = 0", t.cal_f(), None)?;
        Ok("3 steps".into())
    });

    rep.run("1b E-chain and sliding algorithm agree (B9)", || {
        let t = two(3, &[-8, -6, -4, -2, -1], &[-9, -7, -2])?;
        let want: [(&[i32], &[i32]); 2] =
            [(&[-8, -4, -2, -1], &[-9, -7, -6, -2]), (&[-8, -2, -1], &[-9, -7, -6, -4, -2])];
        let mut cur = t.clone();
        for (k, (l, r)) in want.iter().enumerate() {
            cur = cur.cal_e().ok_or_else(|| format!("E undefined at step {}", k + 1))?;
            expect_eq(&format!("step {}", k + 1), pair(&cur), (l.to_vec(), r.to_vec()))?;
        }
        let (lt, rt) = t.lt_rt();
        let (lt2, rt2) = t.lt_rt_slide();
        expect_eq("^LT", ints(&lt), vec![-8, -2])?;
        expect_eq("^RT", ints(&rt), vec![-9, -7, -6, -4, -2, -1])?;
        expect_eq("sliding ^LT", ints(&lt2), vec![-8, -2])?;
        expect_eq("sliding ^RT", ints(&rt2), vec![-9, -7, -6, -4, -2, -1])?;
        Ok(String::new())
    });

    rep.run("1c admissible pair (C7)", || {
        let t2 = two(2, &[-6, -5, -4, -3], &[-4, -2])?;
        let t1 = two(1, &[-7, -6, -3, -2], &[-5, -2, -1])?;
        let (lt2, rt2) = t2.lt_rt();
        expect_eq("^LT2", ints(&lt2), vec![-4, -3])?;
        expect_eq("^RT2", ints(&rt2), vec![-6, -5, -4, -2])?;
        let e1 = t1.cal_e().ok_or("E undefined on T1".to_string())?;
        expect_eq("E T1", pair(&e1), (vec![-6, -3, -2], vec![-7, -5, -2, -1]))?;
        expect_eq("admissible", admissible(&t2, &t1), Ok(()))?;
        Ok(String::new())
    });

    rep.run("1d single-column bijections (C5, B5, spin)", || {
        let ty = CartanType::C;
        let kn = col(&[1, 5, -5, -2]);
        let t = psi_column(ty, 5, &kn).map_err(string_err)?;
        expect_eq("Psi_4 (C5)", (t.a, pair(&t)), (1, (vec![-5, -3, -2], vec![-4, -2])))?;
        let (lt, rt) = t.lt_rt();
        expect_eq("C5 (^LT, ^RT)", (ints(&lt), ints(&rt)), (vec![-5, -2], vec![-4, -3, -2]))?;
        expect_eq("C5 inverse", ints(&psi_column_inv(5, &t)), ints(&kn))?;

        let tb = two(1, &[-3, -1], &[-5, -4, -1])?;
        let (lt, rt) = tb.lt_rt();
        expect_eq("B5 (^LT, ^RT)", (ints(&lt), ints(&rt)), (vec![-1], vec![-5, -4, -3, -1]))?;
        let knb = psi_column_inv(5, &tb);
        expect_eq("B5 tilde", ints(&knb), vec![2, 0, 0, -1])?;
        let back = psi_column(CartanType::B, 5, &knb).map_err(string_err)?;
        expect_eq("B5 inverse", back, tb)?;

        let sp = col(&[-5, -4, -2, -1]);
        let knsp = psi_spin_inv(5, &sp);
        expect_eq("spin tilde", ints(&knsp), vec![3, -5, -4, -2, -1])?;
        expect_eq("spin inverse", ints(&psi_spin(&knsp)), ints(&sp))?;
        Ok(String::new())
    });

    rep.run("1e Psi on a C5 tableau of shape (4,4,3,2)", || {
        let p = Pipeline::new(CartanType::C, 5, &[4, 4, 3, 2], false);
        let t = fixture_kn_c5();
        p.kn.validate(&t).map_err(string_err)?;
        let s = p.psi(&t).map_err(string_err)?;
        let got: Vec<_> = s.cols.iter().map(|c| (c.a, pair(c))).collect();
        let want = vec![
            (1, (vec![-5, -4, -2, -1], vec![-3, -2, -1])),
            (1, (vec![-5, -3, -2], vec![-4, -2])),
            (2, (vec![-5, -4, -2, -1], vec![-5, -2])),
            (3, (vec![-4, -3, -2, -1], vec![-3])),
        ];
        expect_eq("tuple (T1..T4)", got, want)?;
        Ok(String::new())
    });

    rep.run("1f separation intermediates, tail and body (C5)", || {
        let p = Pipeline::new(CartanType::C, 5, &[4, 4, 3, 2], false);
        let s = p.psi(&fixture_kn_c5()).map_err(string_err)?;
        let mut us = to_e_r(&s);
        let snap = |us: &[Column]| us.iter().rev().map(|c| ints(c)).collect::<Vec<_>>();
        expect_eq(
            "initial (U8..U1)",
            snap(&us),
            vec![
                vec![-4, -3, -2, -1],
                vec![-3],
                vec![-5, -4, -2, -1],
                vec![-5, -2],
                vec![-5, -3, -2],
                vec![-4, -2],
                vec![-5, -4, -2, -1],
                vec![-3, -2, -1],
            ],
        )?;
        let sched = separation_schedule(&p.spinor.a);
        expect_eq("schedule", sched.clone(), vec![(6, 2), (4, 1), (5, 1), (2, 1), (3, 1), (4, 1)])?;
        let groups: [(usize, Vec<Vec<i32>>); 3] = [
            (
                1,
                vec![
                    vec![-4, -3, -2, -1],
                    vec![-4, -3, -1],
                    vec![-5, -2],
                    vec![-5, -2],
                    vec![-5, -3, -2],
                    vec![-4, -2],
                    vec![-5, -4, -2, -1],
                    vec![-3, -2, -1],
                ],
            ),
            (
                3,
                vec![
                    vec![-4, -3, -2, -1],
                    vec![-4, -3, -1],
                    vec![-5, -3, -2],
                    vec![-5, -2],
                    vec![-5, -2],
                    vec![-4, -2],
                    vec![-5, -4, -2, -1],
                    vec![-3, -2, -1],
                ],
            ),
            (
                6,
                vec![
                    vec![-4, -3, -2, -1],
                    vec![-4, -3, -1],
                    vec![-5, -3, -2],
                    vec![-5, -2, -1],
                    vec![-5, -2],
                    vec![-4, -2],
                    vec![-5, -4, -2],
                    vec![-3, -2, -1],
                ],
            ),
        ];
        let mut done = 0;
        for (upto, want) in groups {
            for &(i, k) in &sched[done..upto] {
                for _ in 0..k {
                    ensure(e_r_step(&mut us, i, Dir::F), || format!("F_{i} undefined"))?;
                }
            }
            done = upto;
            expect_eq(&format!("after {upto} operator groups"), snap(&us), want)?;
        }
        expect_eq("separate", separate(&s, &p.spinor.a).map_err(string_err)?, us)?;
        let v = p.theta(&s).map_err(string_err)?;
        expect_eq(
            "body rows",
            rows_i(&v.body.rows()),
            vec![vec![-5, -3], vec![-5, -5, -5, -4, -4, -2], vec![-4, -4, -3, -2, -2, -2, -2, -1]],
        )?;
        expect_eq("tail rows", rows_i(&v.tail.rows), vec![vec![-3, -3, -2, -1], vec![-2, -1], vec![-1]])?;
        expect_eq("r", p.r, 4)?;
        Ok(String::new())
    });

    rep.run("1g kappa inverse and Lusztig datum (C5)", || {
        let n = 5;
        let body = RotTableau::from_rows(&[&[-5, -3], &[-5, -5, -5, -4, -4, -2], &[-4, -4, -3, -2, -2, -2, -2, -1]]);
        let m = kappa_inv(&body, n).map_err(string_err)?;
        let want = SymMatrix::from_bar_rows(&[
            &[2, 1, 1, 0, 0],
            &[1, 0, 0, 3, 0],
            &[1, 0, 0, 0, 1],
            &[0, 3, 0, 2, 0],
            &[0, 0, 1, 0, 0],
        ]);
        expect_eq("m", m, want)?;
        let tail = crate::tableaux::Tableau { rows: vec![col(&[-3, -3, -2, -1]), col(&[-2, -1]), col(&[-1])] };
        let p = Pipeline::new(CartanType::C, n, &[4, 4, 3, 2], false);
        let d = p.phi(&VermaElem { tail, body }).map_err(string_err)?;
        check_datum(
            &d,
            &[
                (1, 2, 0),
                (1, 3, 1),
                (1, 4, 1),
                (1, 5, 1),
                (2, 3, 0),
                (2, 4, 1),
                (2, 5, 1),
                (3, 4, 0),
                (3, 5, 2),
                (4, 5, 0),
            ],
            &[
                (4, 5, 1),
                (3, 5, 1),
                (2, 5, 0),
                (1, 5, 0),
                (3, 4, 0),
                (2, 4, 3),
                (1, 4, 0),
                (2, 3, 0),
                (1, 3, 1),
                (1, 2, 0),
            ],
        )?;
        let diag: Vec<u32> = (1..=n).rev().map(|i| d.dplus(i, i)).collect();
        expect_eq("diagonal (d55, d44, d33, d22, d11)", diag, vec![1, 0, 0, 1, 0])?;
        expect_eq("Xi of the KN tableau", p.xi(&fixture_kn_c5()).map_err(string_err)?, d)?;
        Ok("diagonal follows the matrix (printed values 2, 2 disagree)".into())
    });

    rep.run("1h end-to-end Xi on a B5 spin tableau", || {
        let p = Pipeline::new(CartanType::B, 5, &[3, 3, 3, 2], true);
        let t = fixture_kn_b5();
        p.kn.validate(&t).map_err(string_err)?;
        let s = p.psi(&t).map_err(string_err)?;
        let got: Vec<_> = s.cols.iter().map(|c| (c.a, pair(c))).collect();
        let want = vec![
            (1, (vec![-5, -3, -2, -1], vec![-5, -4, -3, -1])),
            (1, (vec![-4, -1], vec![-5, -1])),
            (2, (vec![-5, -4, -2], vec![-3])),
        ];
        expect_eq("Psi tuple", got, want)?;
        expect_eq("Psi spin", s.spin.as_deref().map(ints), Some(vec![-5, -4, -2, -1]))?;
        let v = p.theta(&s).map_err(string_err)?;
        expect_eq("tail rows", rows_i(&v.tail.rows), vec![vec![-4, -3, -1], vec![-2]])?;
        expect_eq(
            "body rows",
            rows_i(&v.body.rows()),
            vec![vec![-5, -5], vec![-5, -4, -4], vec![-5, -3, -3, -2], vec![-5, -4, -2, -1, -1, -1, -1]],
        )?;
        expect_eq("r", p.r, 7)?;
        let d = p.xi(&t).map_err(string_err)?;
        check_datum(
            &d,
            &[
                (1, 2, 0),
                (1, 3, 0),
                (1, 4, 0),
                (1, 5, 1),
                (2, 3, 0),
                (2, 4, 1),
                (2, 5, 0),
                (3, 4, 0),
                (3, 5, 1),
                (4, 5, 1),
            ],
            &[
                (5, 5, 4),
                (4, 5, 0),
                (3, 5, 0),
                (2, 5, 0),
                (1, 5, 1),
                (4, 4, 2),
                (3, 4, 0),
                (2, 4, 0),
                (1, 4, 1),
                (3, 3, 1),
                (2, 3, 1),
                (1, 3, 0),
                (2, 2, 0),
                (1, 2, 1),
                (1, 1, 1),
            ],
        )?;
        let kn_wt = p.kn.stats(&t).wt;
        let balance = |d: &FoldedDatum| &p.lusztig.weight(d) + &p.lusztig_shift() == kn_wt;
        let mut printed = d.clone();
        printed.set_dplus(1, 1, 0);
        ensure(balance(&d), || "computed datum violates weight balance".into())?;
        ensure(!balance(&printed), || "printed d+_11 = 0 unexpectedly balances".into())?;
        Ok("twist t_{7ω_5} by weight balance (printed 4); d+_11 = 1 by weight balance (printed 0)".into())
    });

    rep.run("Verma e_n removes the top of the rightmost eligible column (B5)", || {
        let vm = VermaModel { cartan: Cartan::new(CartanType::B, 5), nu: vec![] };
        let v = VermaElem {
            tail: crate::tableaux::Tableau { rows: vec![] },
            body: RotTableau::from_rows(&[&[-5], &[-5, -3, -3], &[-5, -4, -3, -2, -1]]),
        };
        let e = vm.step(&v, 5, Dir::E).ok_or("e_5 undefined".to_string())?;
        expect_eq("result rows", rows_i(&e.body.rows()), vec![vec![-5, -3, -3], vec![-5, -4, -3, -2, -1]])?;
        let h = VermaModel::new(Cartan::new(CartanType::C, 5), &[4, 4, 3, 2]);
        let top = h.highest();
        ensure(h.cartan.indices().all(|i| h.step(&top, i, Dir::E).is_none()), || {
            "highest element not killed by e_i".into()
        })?;
        Ok(String::new())
    });

    rep
}

fn check_datum(d: &FoldedDatum, minus: &[(usize, usize, u32)], plus: &[(usize, usize, u32)]) -> Result<(), Failure> {
    for &(i, j, v) in minus {
        expect_eq(&format!("d-_{i}{j}"), d.dminus(i, j), v)?;
    }
    for &(i, j, v) in plus {
        expect_eq(&format!("d+_{i}{j}"), d.dplus(i, j), v)?;
    }
    Ok(())
}

/// Shapes `μ` with at most `n` parts and `μ_1 ≤ max_cols`; in type `B` also
/// the spin shapes `μ + σ_n` with `μ_1 ≤ max_cols − 1`.
pub fn shape_family(ty: CartanType, n: usize, max_cols: usize) -> Vec<(Vec<usize>, bool)> {
    fn parts(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if prefix.len() == n {
            return;
        }
        let cap = prefix.last().copied().unwrap_or(max);
        for p in 1..=cap {
            prefix.push(p);
            parts(n, max, prefix, out);
            prefix.pop();
        }
    }
    let mut plain = Vec::new();
    parts(n, max_cols, &mut Vec::new(), &mut plain);
    let mut out: Vec<(Vec<usize>, bool)> = plain.into_iter().map(|m| (m, false)).collect();
    if ty == CartanType::B && max_cols >= 1 {
        let mut spin = Vec::new();
        parts(n, max_cols - 1, &mut Vec::new(), &mut spin);
        out.extend(spin.into_iter().map(|m| (m, true)));
    }
    out.retain(|(m, _)| is_partition(m));
    out
}

fn shape_name(ty: CartanType, n: usize, mu: &[usize], spin: bool) -> String {
    let s = if spin { "+spin" } else { "" };
    format!("{ty}{n} μ={mu:?}{s}")
}

fn opts(cap: usize) -> GraphOptions {
    GraphOptions { cap, ..GraphOptions::default() }
}

/// `|KN_λ| = |T_λ| = dim V(λ)` and every KN node passes validation.
pub fn oracle(ty: CartanType, n: usize, max_cols: usize, cap: usize) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for (mu, spin) in shape_family(ty, n, max_cols) {
        rep.run(format!("cardinality {}", shape_name(ty, n, &mu, spin)), || {
            let p = Pipeline::new(ty, n, &mu, spin);
            let kg = generate_graph(&p.kn, p.kn.highest(), opts(cap))?;
            let sg = generate_graph(&p.spinor, p.spinor.highest(), opts(cap))?;
            let w = weyl_dim(ty, &p.kn.omega_lambda());
            ensure(kg.len() as u128 == w && sg.len() as u128 == w, || {
                format!("|KN| = {}, |T| = {}, weyl = {w}", kg.len(), sg.len())
            })?;
            if let Some(t) = kg.nodes.iter().find(|t| p.kn.validate(t).is_err()) {
                return Err(format!("KN node fails validation: {}", p.kn.label(t)).into());
            }
            if let Some(t) = sg.nodes.iter().find(|t| p.spinor.validate(t).is_err()) {
                return Err(format!("spinor node fails validation: {}", p.spinor.label(t)).into());
            }
            Ok(format!("{w}"))
        });
    }
    rep
}

/// `check_morphism` with a fallible map: failures become violations.
fn morphism<D, T, E>(
    domain: &D,
    nodes: &[D::Elem],
    map: impl Fn(&D::Elem) -> Result<T::Elem, E>,
    fallback: T::Elem,
    codomain: &T,
) -> MorphismReport
where
    D: Crystal,
    T: Crystal,
    E: fmt::Display,
{
    let errors = RefCell::new(Vec::new());
    let mut rep = check_morphism(
        domain,
        nodes,
        |b| {
            map(b).unwrap_or_else(|e| {
                errors.borrow_mut().push(format!("map failed at {}: {e}", domain.label(b)));
                fallback.clone()
            })
        },
        codomain,
    );
    rep.violations.splice(0..0, errors.into_inner());
    rep
}

fn report_outcome(rep: MorphismReport) -> Outcome {
    match rep.violations.first() {
        None => Ok(format!("{} nodes", rep.nodes_checked)),
        Some(v) => Err(format!("{} violations; first: {v}", rep.violations.len()).into()),
    }
}

/// `Ψ_λ` (an isomorphism), `Θ_λ`, `Φ_λ` and `Ξ_λ` checked as crystal
/// morphisms on every element.
pub fn morphisms(ty: CartanType, n: usize, max_cols: usize, cap: usize) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for (mu, spin) in shape_family(ty, n, max_cols) {
        let name = shape_name(ty, n, &mu, spin);
        let p = Pipeline::new(ty, n, &mu, spin);
        let graphs = generate_graph(&p.kn, p.kn.highest(), opts(cap))
            .and_then(|k| generate_graph(&p.spinor, p.spinor.highest(), opts(cap)).map(|s| (k, s)));
        let (kg, sg) = match graphs {
            Ok(g) => g,
            Err(e) => {
                rep.run(format!("morphisms {name}"), || Err(e.into()));
                continue;
            }
        };
        rep.run(format!("Psi {name}"), || {
            let r = morphism(&p.kn, &kg.nodes, |t| p.psi(t), p.spinor.highest(), &p.spinor);
            let out = report_outcome(r)?;
            let mut images: Vec<SpinorTuple> = kg.nodes.iter().filter_map(|t| p.psi(t).ok()).collect();
            let mut all = sg.nodes.clone();
            images.sort();
            all.sort();
            ensure(images == all, || "image differs from the spinor crystal".into())?;
            Ok(out + ", bijective")
        });
        let vs = Shifted::new(&p.verma, p.verma_shift());
        rep.run(format!("Theta {name}"), || {
            report_outcome(morphism(&p.spinor, &sg.nodes, |t| p.theta(t), p.verma.highest(), &vs))
        });
        let ls = Shifted::new(&p.lusztig, p.lusztig_shift());
        rep.run(format!("Phi {name}"), || {
            let dom: Vec<VermaElem> = sg.nodes.iter().filter_map(|t| p.theta(t).ok()).collect();
            let zero = FoldedDatum::zero(n);
            report_outcome(morphism(&vs, &dom, |v| p.phi(v), zero, &ls))
        });
        rep.run(format!("Xi {name}"), || {
            let zero = FoldedDatum::zero(n);
            report_outcome(morphism(&p.kn, &kg.nodes, |t| p.xi(t), zero, &ls))
        });
    }
    rep
}

/// Bounded closure of a Verma crystal, checked for validity, the crystal
/// axioms and the morphism property of `Φ_λ`.
pub fn verma_closure(ty: CartanType, n: usize, mu: &[usize], depth: usize, cap: usize) -> Outcome {
    let cartan = Cartan::new(ty, n);
    let vm = VermaModel::new(cartan, mu);
    let g = generate_graph(&vm, vm.highest(), GraphOptions { cap, max_depth: Some(depth), lowering_only: false })?;
    if let Some(v) = g.nodes.iter().find(|v| vm.validate(v).is_err()) {
        return Err(format!("invalid element {}", vm.label(v)).into());
    }
    let ax = g.check_axioms(&vm);
    ensure(ax.is_empty(), || format!("axiom failure: {}", ax[0]))?;
    let p = Pipeline::new(ty, n, mu, false);
    let vs = Shifted::new(&vm, p.verma_shift());
    let ls = Shifted::new(&p.lusztig, p.lusztig_shift());
    report_outcome(morphism(&vs, &g.nodes, |v| p.phi(v), FoldedDatum::zero(n), &ls))
}

fn type_seed(seed: u64, ty: CartanType, n: usize) -> u64 {
    seed ^ ((ty == CartanType::B) as u64) << 40 ^ (n as u64) << 32
}

/// A random folded datum with entries in `0..=max`.
pub fn random_datum(rng: &mut impl Rng, n: usize, max: u32) -> FoldedDatum {
    let mut d = FoldedDatum::zero(n);
    for i in 1..=n {
        for j in i..=n {
            d.set_dplus(i, j, rng.gen_range(0..=max));
            if j > i {
                d.set_dminus(i, j, rng.gen_range(0..=max));
            }
        }
    }
    d
}

/// Randomized properties of the folded Lusztig crystal.
pub fn lusztig_properties(ty: CartanType, n: usize, count: usize, seed: u64) -> Outcome {
    let cartan = Cartan::new(ty, n);
    let lm = LusztigModel::new(cartan);
    let mut rng = ChaCha8Rng::seed_from_u64(type_seed(seed, ty, n));
    for _ in 0..count {
        let d = random_datum(&mut rng, n, 3);
        let fail = |what: &str, i: usize| Failure::Check(format!("{what} at i={i}, {}", lm.label(&d)));
        let c = chi(ty, &d);
        let wt = lm.weight(&d);
        for i in cartan.indices() {
            if i < n && c.eps(i) != c.eps(2 * n - i) {
                return Err(fail("eps_i != eps_{2n-i} on the folded image", i));
            }
            if lm.eps(&d, i) != lm.eps_iterated(&d, i) {
                return Err(fail("closed-form eps differs from iteration", i));
            }
            for dir in Dir::both() {
                let next = lm.step_checked(&d, i, dir).map_err(|e| fail(&e.to_string(), i))?;
                if let Some(x) = &next {
                    if lm.step(x, i, dir.opposite()).as_ref() != Some(&d) {
                        return Err(fail("e/f round trip", i));
                    }
                    let delta = match dir {
                        Dir::F => cartan.alpha(i).scale(-1),
                        Dir::E => cartan.alpha(i),
                    };
                    if lm.weight(x) != &wt + &delta {
                        return Err(fail("weight shift", i));
                    }
                }
                if lm.step_via_delta(&d, i, dir) != next {
                    return Err(fail("tensor routing through d+ ⊗ d- disagrees", i));
                }
                if dir == Dir::F && next.is_none() {
                    return Err(fail("f undefined", i));
                }
            }
        }
    }
    Ok(format!("{count} data"))
}

/// All semistandard two-column tableaux over `[m̄]` of shape `λ(a,b,c)`.
pub fn two_columns(m: usize, a: usize, b: usize, c: usize) -> Vec<TwoCol> {
    let cols = |h: usize| -> Vec<Column> {
        (0u32..1 << m)
            .filter(|s| s.count_ones() as usize == h)
            .map(|s| (1..=m).rev().filter(|&k| s >> (k - 1) & 1 == 1).map(Letter::bar).collect())
            .collect()
    };
    let mut out = Vec::new();
    for l in cols(a + c) {
        for r in cols(b + c) {
            if let Ok(t) = TwoCol::new(a, l.clone(), r) {
                out.push(t);
            }
        }
    }
    out
}

/// Every `r_T = 0` two-column tableau with `a + b + c ≤ max` over `[m̄]` lies
/// on an `𝓔/𝓕` string of length `a + b + 1` with `r = 0` throughout.
pub fn sl2_strings(m: usize, max: usize) -> Outcome {
    let mut count = 0;
    for a in 0..=max {
        for b in 0..=max - a {
            for c in 0..=max - a - b {
                for t in two_columns(m, a, b, c).into_iter().filter(|t| t.r() == 0) {
                    count += 1;
                    let mut len = 1;
                    for (dir, steps) in [(Dir::E, a), (Dir::F, b)] {
                        let mut cur = t.clone();
                        for k in 1..=steps {
                            let next = match dir {
                                Dir::E => cur.cal_e(),
                                Dir::F => cur.cal_f(),
                            };
                            let next = next.ok_or_else(|| format!("{dir:?}^{k} undefined on {:?}", pair(&t)))?;
                            ensure(next.r() == 0, || format!("r != 0 after {dir:?}^{k} on {:?}", pair(&t)))?;
                            let back = match dir {
                                Dir::E => next.cal_f(),
                                Dir::F => next.cal_e(),
                            };
                            ensure(back.as_ref() == Some(&cur), || {
                                format!("{dir:?} not invertible on {:?}", pair(&cur))
                            })?;
                            cur = next;
                            len += 1;
                        }
                        let beyond = match dir {
                            Dir::E => cur.cal_e(),
                            Dir::F => cur.cal_f(),
                        };
                        ensure(beyond.is_none(), || format!("string too long at {:?}", pair(&t)))?;
                    }
                    ensure(len == a + b + 1, || format!("string length {len} at {:?}", pair(&t)))?;
                }
            }
        }
    }
    Ok(format!("{count} tableaux"))
}

/// A random element of `𝐄^r` over `[m̄]`.
pub fn random_e_r(rng: &mut impl Rng, m: usize, r: usize) -> Vec<Column> {
    let all: Vec<usize> = (1..=m).collect();
    (0..r)
        .map(|_| {
            let h = rng.gen_range(0..=m);
            let mut pick: Vec<usize> = all.choose_multiple(rng, h).copied().collect();
            pick.sort_unstable_by(|x, y| y.cmp(x));
            pick.into_iter().map(Letter::bar).collect()
        })
        .collect()
}

/// `𝓕_i 𝓕_j = 𝓕_j 𝓕_i` and `𝓔_i 𝓔_j = 𝓔_j 𝓔_i` on `𝐄^r` for `|i − j| > 1`.
pub fn e_r_commutation(count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let apply = |us: &[Column], ops: [usize; 2], dir: Dir| -> Option<Vec<Column>> {
        let mut v = us.to_vec();
        ops.iter().all(|&i| e_r_step(&mut v, i, dir)).then_some(v)
    };
    let mut pairs = 0;
    for _ in 0..count {
        let r = rng.gen_range(4..=7);
        let us = random_e_r(&mut rng, 4, r);
        for i in 1..r {
            for j in (i + 2)..r {
                for dir in Dir::both() {
                    pairs += 1;
                    if apply(&us, [i, j], dir) != apply(&us, [j, i], dir) {
                        return Err(format!("{dir:?}_{i} and {dir:?}_{j} do not commute on {:?}", us).into());
                    }
                }
            }
        }
    }
    Ok(format!("{count} tuples, {pairs} pairs"))
}

fn letter_counts<'a>(cols: impl IntoIterator<Item = &'a Column>) -> HashMap<Letter, usize> {
    let mut m = HashMap::new();
    for c in cols {
        for &x in c {
            *m.entry(x).or_default() += 1;
        }
    }
    m
}

/// Separation yields strict columns, a valid `(V_2, V_1)` and conserves
/// letters, on every element of the spinor crystal.
pub fn separation_properties(ty: CartanType, n: usize, mu: &[usize], spin: bool, cap: usize) -> Outcome {
    let p = Pipeline::new(ty, n, mu, spin);
    let g: CrystalGraph<SpinorTuple> = generate_graph(&p.spinor, p.spinor.highest(), opts(cap))?;
    for t in &g.nodes {
        let bars = separate(t, &p.spinor.a).map_err(string_err)?;
        ensure(bars.iter().all(|c| column_ok(c)), || {
            format!("non-strict column after separating {}", p.spinor.label(t))
        })?;
        let before = letter_counts(to_e_r(t).iter().chain(&t.spin));
        let after = letter_counts(bars.iter().chain(&t.spin));
        ensure(before == after, || format!("letters not conserved for {}", p.spinor.label(t)))?;
        let v = p.theta(t).map_err(string_err)?;
        p.verma.validate(&v).map_err(|e| format!("{e} for {}", p.spinor.label(t)))?;
    }
    Ok(format!("{} tuples", g.len()))
}

/// Randomized and exhaustive structural properties.
pub fn structural(ty: CartanType, n: usize, max_cols: usize, cap: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    rep.run("sl2 strings over [3̄], a+b+c ≤ 6", || sl2_strings(3, 6));
    rep.run("E^r commutation, 500 tuples", || e_r_commutation(500, seed));
    for (mu, spin) in shape_family(ty, n, max_cols) {
        rep.run(format!("separation {}", shape_name(ty, n, &mu, spin)), || {
            separation_properties(ty, n, &mu, spin, cap)
        });
    }
    rep
}

/// Lusztig properties for every type and `n ≤ max_n`.
pub fn lusztig_suite(types: &[CartanType], max_n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for &ty in types {
        for n in 1..=max_n {
            rep.run(format!("Lusztig {ty}{n}, {count} random data"), || lusztig_properties(ty, n, count, seed));
        }
    }
    rep
}
