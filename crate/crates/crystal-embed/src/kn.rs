//! Kashiwara–Nakashima tableaux of types `B_n` and `C_n` in the rotated
//! convention, including spin shapes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::{route, Cartan, CartanType, Crystal, CrystalStats, Dir, Ext, HalfWeight};
use crate::tableaux::{column_pair_ok, conjugate, is_partition, row_pair_ok, Column, Letter};

/// A KN tableau: body columns from the right (each top to bottom, bottom
/// aligned) and, for spin shapes, the half-width spin column which sits to
/// the right of the body.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KnTableau {
    pub cols: Vec<Column>,
    pub spin: Option<Column>,
}

impl KnTableau {
    pub fn heights(&self) -> Vec<usize> {
        self.cols.iter().map(Vec::len).collect()
    }

    /// Entry `T(i, j)` of the body: row `i` from the bottom, column `j` from
    /// the right.
    pub fn entry(&self, i: usize, j: usize) -> Option<Letter> {
        let col = self.cols.get(j.checked_sub(1)?)?;
        (i >= 1 && i <= col.len()).then(|| col[col.len() - i])
    }

    /// Column reading: columns from the right, each top to bottom. The
    /// crystal operators act through this word.
    pub fn column_word(&self) -> Vec<Letter> {
        self.cols.iter().flatten().copied().collect()
    }

    /// `w(T)`: rows top to bottom, each right to left (body only).
    pub fn reading_word(&self) -> Vec<Letter> {
        let h = self.cols.first().map_or(0, Vec::len);
        let mut w = Vec::new();
        for i in (1..=h).rev() {
            for j in 1..=self.cols.len() {
                if let Some(x) = self.entry(i, j) {
                    w.push(x);
                }
            }
        }
        w
    }
}

/// Violation of a defining condition, with witnessing rows and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{clause} violated at column {col} (rows {rows:?})")]
pub struct Violation {
    pub clause: &'static str,
    pub col: usize,
    pub rows: Vec<usize>,
}

fn violation(clause: &'static str, col: usize, rows: Vec<usize>) -> Violation {
    Violation { clause, col, rows }
}

/// The crystal `KN_λ` for a fixed type, rank and shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnModel {
    pub cartan: Cartan,
    /// Integral part `μ` of the shape (the whole shape unless `spin`).
    pub mu: Vec<usize>,
    pub spin: bool,
}

impl KnModel {
    pub fn new(cartan: Cartan, mu: &[usize], spin: bool) -> Self {
        assert!(!spin || cartan.ty == CartanType::B, "spin shapes exist only in type B");
        let mut mu: Vec<usize> = mu.to_vec();
        while mu.last() == Some(&0) {
            mu.pop();
        }
        assert!(is_partition(&mu) && mu.len() <= cartan.n, "shape must be a partition with at most n parts");
        KnModel { cartan, mu, spin }
    }

    pub fn column_heights(&self) -> Vec<usize> {
        conjugate(&self.mu)
    }

    /// The highest weight element: column `k` holds `1, 2, …` from the top.
    pub fn highest(&self) -> KnTableau {
        let col = |h: usize| (1..=h).map(Letter::pos).collect::<Column>();
        KnTableau {
            cols: self.column_heights().into_iter().map(col).collect(),
            spin: self.spin.then(|| col(self.cartan.n)),
        }
    }

    /// `ω_λ`, the weight of the highest weight element.
    pub fn omega_lambda(&self) -> HalfWeight {
        self.stats(&self.highest()).wt
    }

    /// Checks semistandardness and the defining conditions of the type.
    pub fn validate(&self, t: &KnTableau) -> Result<(), Violation> {
        let n = self.cartan.n;
        let ty = self.cartan.ty;
        if t.heights() != self.column_heights() {
            return Err(violation("shape", 0, vec![]));
        }
        if t.spin.is_some() != self.spin {
            return Err(violation("shape", 0, vec![]));
        }
        for (j, col) in t.cols.iter().enumerate() {
            for (k, &x) in col.iter().enumerate() {
                let ok = x.index() <= n && (ty == CartanType::B || !x.is_zero());
                if !ok {
                    return Err(violation("alphabet", j + 1, vec![col.len() - k]));
                }
            }
            if let Some(k) = col.windows(2).position(|w| !column_pair_ok(w[0], w[1])) {
                return Err(violation("column semistandard", j + 1, vec![col.len() - k]));
            }
        }
        for j in 1..t.cols.len() {
            for i in 1..=t.cols[j].len() {
                if !row_pair_ok(t.entry(i, j + 1).unwrap(), t.entry(i, j).unwrap()) {
                    return Err(violation("row semistandard", j, vec![i]));
                }
            }
        }
        for j in 1..=t.cols.len() {
            check_single(&t.cols[j - 1], j, ty == CartanType::B)?;
        }
        // Column list including the spin column in front for pair conditions.
        let mut all: Vec<&Column> = Vec::new();
        if let Some(sp) = &t.spin {
            if sp.len() != n || sp.iter().any(|x| x.is_zero() || x.index() > n) || sp.windows(2).any(|w| w[0] >= w[1]) {
                return Err(violation("spin column", 0, vec![]));
            }
            if (1..=n).any(|a| sp.contains(&Letter::pos(a)) && sp.contains(&Letter::bar(a))) {
                return Err(violation("spin column", 0, vec![]));
            }
            all.push(sp);
            if let Some(first) = t.cols.first() {
                for i in 1..=first.len() {
                    let left = first[first.len() - i];
                    let right = sp[sp.len() - i];
                    if !row_pair_ok(left, right) {
                        return Err(violation("row semistandard", 0, vec![i]));
                    }
                }
            }
        }
        all.extend(t.cols.iter());
        let offset = usize::from(t.spin.is_some());
        for k in 0..all.len().saturating_sub(1) {
            let col = k + 1 - offset;
            check_pair(all[k], all[k + 1], col, n, ty)?;
        }
        Ok(())
    }

    /// Number of letter factors plus the spin factor, in tensor order.
    fn factors(&self, t: &KnTableau, i: usize) -> Vec<(u32, u32)> {
        let n = self.cartan.n;
        let ty = self.cartan.ty;
        let mut f = Vec::new();
        if let Some(sp) = &t.spin {
            f.push(spin_eps_phi(sp, n, i));
        }
        f.extend(t.column_word().into_iter().map(|x| letter_eps_phi(ty, n, x, i)));
        f
    }
}

/// `ε_i`, `φ_i` of a single letter.
pub fn letter_eps_phi(ty: CartanType, n: usize, x: Letter, i: usize) -> (u32, u32) {
    let v = x.0;
    let (i, ni) = (i as i32, n as i32);
    if i < ni {
        let phi = u32::from(v == i || v == -(i + 1));
        let eps = u32::from(v == i + 1 || v == -i);
        (eps, phi)
    } else {
        match ty {
            CartanType::C => (u32::from(v == -ni), u32::from(v == ni)),
            CartanType::B => match v {
                _ if v == ni => (0, 2),
                0 => (1, 1),
                _ if v == -ni => (2, 0),
                _ => (0, 0),
            },
        }
    }
}

/// `f̃_i` / `ẽ_i` on a single letter.
pub fn letter_step(ty: CartanType, n: usize, x: Letter, i: usize, dir: Dir) -> Option<Letter> {
    let v = x.0;
    let (i, ni) = (i as i32, n as i32);
    let r = if i < ni {
        match dir {
            Dir::F if v == i => i + 1,
            Dir::F if v == -(i + 1) => -i,
            Dir::E if v == i + 1 => i,
            Dir::E if v == -i => -(i + 1),
            _ => return None,
        }
    } else {
        match (ty, dir) {
            (CartanType::C, Dir::F) if v == ni => -ni,
            (CartanType::C, Dir::E) if v == -ni => ni,
            (CartanType::B, Dir::F) if v == ni => 0,
            (CartanType::B, Dir::F) if v == 0 => -ni,
            (CartanType::B, Dir::E) if v == -ni => 0,
            (CartanType::B, Dir::E) if v == 0 => ni,
            _ => return None,
        }
    };
    Some(Letter(r))
}

pub fn letter_weight(w: &mut HalfWeight, x: Letter) {
    if x.is_pos() {
        w.add_doubled(x.index(), 2);
    } else if x.is_neg() {
        w.add_doubled(x.index(), -2);
    }
}

fn spin_contains(col: &[Letter], x: i32) -> bool {
    col.iter().any(|y| y.0 == x)
}

/// `ε_i`, `φ_i` of a spin column.
pub fn spin_eps_phi(col: &[Letter], n: usize, i: usize) -> (u32, u32) {
    let ii = i as i32;
    if i < n {
        let eps = spin_contains(col, -ii) && spin_contains(col, ii + 1);
        let phi = spin_contains(col, ii) && spin_contains(col, -(ii + 1));
        (u32::from(eps), u32::from(phi))
    } else {
        (u32::from(spin_contains(col, -ii)), u32::from(spin_contains(col, ii)))
    }
}

/// Spin operators: swap the signs at `i`, `i+1` (or flip the sign at `n`).
pub fn spin_step(col: &[Letter], n: usize, i: usize, dir: Dir) -> Option<Column> {
    let (eps, phi) = spin_eps_phi(col, n, i);
    let ok = match dir {
        Dir::E => eps == 1,
        Dir::F => phi == 1,
    };
    if !ok {
        return None;
    }
    let ii = i as i32;
    let swap = |x: Letter| -> Letter {
        if i < n {
            match x.0 {
                v if v == ii => Letter(ii + 1),
                v if v == ii + 1 => Letter(ii),
                v if v == -ii => Letter(-(ii + 1)),
                v if v == -(ii + 1) => Letter(-ii),
                _ => x,
            }
        } else if x.index() == n {
            Letter(-x.0)
        } else {
            x
        }
    };
    let mut out: Column = col.iter().map(|&x| swap(x)).collect();
    out.sort();
    Some(out)
}

pub fn spin_weight(col: &[Letter], n: usize) -> HalfWeight {
    let mut w = HalfWeight::zero(n);
    for x in col {
        w.add_doubled(x.index(), if x.is_pos() { 1 } else { -1 });
    }
    w
}

/// Row (from the bottom) of the letter `x` in `col`.
fn row_of(col: &[Letter], x: Letter) -> Option<usize> {
    col.iter().position(|&y| y == x).map(|k| col.len() - k)
}

fn check_single(col: &[Letter], j: usize, type_b: bool) -> Result<(), Violation> {
    let h = col.len();
    for a in 1..=h.max(1) {
        if let (Some(i1), Some(i2)) = (row_of(col, Letter::bar(a)), row_of(col, Letter::pos(a))) {
            if i1 < i2 && i1 + (h - i2 + 1) > a {
                return Err(violation(if type_b { "b-1" } else { "c-1" }, j, vec![i1, i2]));
            }
        }
    }
    Ok(())
}

/// Conditions linking column `right` (index `j`) and `left` (index `j+1`).
fn check_pair(right: &[Letter], left: &[Letter], j: usize, n: usize, ty: CartanType) -> Result<(), Violation> {
    let type_b = ty == CartanType::B;
    let bmax = if type_b { n - 1 } else { n };
    let clause2 = if type_b { "b-2" } else { "c-2" };
    for a in 1..=n {
        let Some(p) = row_of(right, Letter::bar(a)) else { continue };
        let Some(s) = row_of(left, Letter::pos(a)) else { continue };
        for b in a..=bmax {
            for (qc, rc) in [(right, right), (left, left)] {
                let (Some(q), Some(r)) = (row_of(qc, Letter::bar(b)), row_of(rc, Letter::pos(b))) else {
                    continue;
                };
                if p <= q && q < r && r <= s && (q - p) + (s - r) >= b - a {
                    return Err(violation(clause2, j, vec![p, q, r, s]));
                }
            }
        }
        if type_b && a < n {
            let special = |x: Letter| x.index() == n || x.is_zero();
            for c in [right, left] {
                let h = c.len();
                for q in 1..h {
                    let r = q + 1;
                    if special(c[h - q]) && special(c[h - r]) && p <= q && r <= s && (q - p) + (s - r) >= n - a {
                        return Err(violation("b-3", j, vec![p, q, r, s]));
                    }
                }
            }
        }
    }
    if type_b {
        let hr = right.len();
        let hl = left.len();
        for p in 1..=hr {
            let x = right[hr - p];
            if !(x.is_zero() || x == Letter::bar(n)) {
                continue;
            }
            for q in (p + 1)..=hl {
                let y = left[hl - q];
                if y.is_zero() || y == Letter::pos(n) {
                    return Err(violation("b-4", j, vec![p, q]));
                }
            }
        }
    }
    Ok(())
}

impl Crystal for KnModel {
    type Elem = KnTableau;

    fn cartan(&self) -> Cartan {
        self.cartan
    }

    fn stats(&self, t: &KnTableau) -> CrystalStats {
        let n = self.cartan.n;
        let mut wt = match &t.spin {
            Some(sp) => spin_weight(sp, n),
            None => HalfWeight::zero(n),
        };
        for col in &t.cols {
            for &x in col {
                letter_weight(&mut wt, x);
            }
        }
        let mut eps = Vec::with_capacity(n);
        let mut phi = Vec::with_capacity(n);
        for i in 1..=n {
            let (e, p, _) = route(&self.factors(t, i), Dir::E);
            eps.push(Ext::Fin(e as i32));
            phi.push(Ext::Fin(p as i32));
        }
        CrystalStats { wt, eps, phi }
    }

    fn step(&self, t: &KnTableau, i: usize, dir: Dir) -> Option<KnTableau> {
        let n = self.cartan.n;
        let (_, _, pos) = route(&self.factors(t, i), dir);
        let mut pos = pos?;
        let mut out = t.clone();
        if let Some(sp) = &t.spin {
            if pos == 0 {
                out.spin = Some(spin_step(sp, n, i, dir)?);
                return Some(out);
            }
            pos -= 1;
        }
        for col in out.cols.iter_mut() {
            if pos < col.len() {
                col[pos] = letter_step(self.cartan.ty, n, col[pos], i, dir)?;
                return Some(out);
            }
            pos -= col.len();
        }
        None
    }

    fn label(&self, t: &KnTableau) -> String {
        let mut s = String::new();
        if let Some(sp) = &t.spin {
            s.push_str(&format!("{:?}|", crate::tableaux::ints(sp)));
        }
        let cols: Vec<Vec<i32>> = t.cols.iter().map(|c| crate::tableaux::ints(c)).collect();
        s.push_str(&format!("{cols:?}"));
        s
    }
}
