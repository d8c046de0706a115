//! Two-column skew tableaux, the operators `𝓔`/`𝓕`, and the spinor model of
//! `B(ω_λ)` together with the isomorphism from KN tableaux.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::{route, Cartan, CartanType, Crystal, CrystalStats, Dir, Ext, HalfWeight};
use crate::kn::{KnModel, KnTableau};
use crate::tableaux::{column_ok, conjugate, ints, Column, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpinorError {
    #[error("columns do not fit a two-column skew shape with tail {0}")]
    Shape(usize),
    #[error("two-column tableau is not semistandard")]
    NotSemistandard,
    #[error("two-column tableau can still slide down (r_T = {0})")]
    NotNormal(usize),
    #[error("type C element must have an empty gap (b = {0})")]
    GapNotEmpty(usize),
    #[error("letter {0} not allowed here")]
    BadLetter(Letter),
    #[error("factor {0} has tail {1}, expected {2}")]
    WrongTail(usize, usize, usize),
    #[error("pair ({0}, {1}) is not admissible: condition {2}")]
    NotAdmissible(usize, usize, &'static str),
    #[error("tuple has {0} factors, expected {1}")]
    Length(usize, usize),
    #[error("spin factor presence does not match the shape")]
    Spin,
}

/// A tableau of shape `λ(a,b,c) = (2^{b+c}, 1^a)/(1^b)`: right column of
/// height `b+c` on top, left column of height `c+a` below the gap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoCol {
    pub a: usize,
    pub left: Column,
    pub right: Column,
}

fn rows_ok(a: usize, left: &[Letter], right: &[Letter]) -> bool {
    let c = left.len() - a;
    let b = right.len() - c;
    (0..c).all(|t| left[t] <= right[b + t])
}

impl TwoCol {
    pub fn new(a: usize, left: Column, right: Column) -> Result<Self, SpinorError> {
        if left.len() < a || right.len() + a < left.len() {
            return Err(SpinorError::Shape(a));
        }
        if !column_ok(&left) || !column_ok(&right) || !rows_ok(a, &left, &right) {
            return Err(SpinorError::NotSemistandard);
        }
        Ok(TwoCol { a, left, right })
    }

    pub fn c(&self) -> usize {
        self.left.len() - self.a
    }

    pub fn b(&self) -> usize {
        self.right.len() - self.c()
    }

    pub fn tail(&self) -> &[Letter] {
        &self.left[self.c()..]
    }

    /// `r_T`: how far the right column can slide down keeping rows weakly
    /// increasing.
    pub fn r(&self) -> usize {
        let (a, b, c) = (self.a, self.b(), self.c());
        (1..=a.min(b)).filter(|&k| (0..c + k).all(|t| self.left[t] <= self.right[b + t - k])).max().unwrap_or(0)
    }

    /// Absolute-row layout: `(left, right)` indexed by row from the top of
    /// the right column.
    fn grid(&self) -> (Vec<Option<Letter>>, Vec<Option<Letter>>) {
        let (b, c) = (self.b(), self.c());
        let rows = b + c + self.a + 1;
        let mut l = vec![None; rows];
        let mut r = vec![None; rows];
        for (t, &x) in self.left.iter().enumerate() {
            l[b + t] = Some(x);
        }
        for (t, &x) in self.right.iter().enumerate() {
            r[t] = Some(x);
        }
        (l, r)
    }

    /// `𝓔` or `𝓕`, rejecting tableaux with `r_T ≠ 0`.
    pub fn try_step(&self, dir: Dir) -> Result<Option<TwoCol>, SpinorError> {
        match self.r() {
            0 => Ok(match dir {
                Dir::E => self.cal_e(),
                Dir::F => self.cal_f(),
            }),
            r => Err(SpinorError::NotNormal(r)),
        }
    }

    /// `𝓕`: forward slide into the cell above the left column.
    ///
    /// # Panics
    ///
    /// If `r_T ≠ 0`; see [`TwoCol::try_step`].
    pub fn cal_f(&self) -> Option<TwoCol> {
        assert_eq!(self.r(), 0, "𝓕 needs r_T = 0");
        let b = self.b();
        if b == 0 {
            return None;
        }
        let (mut l, mut r) = self.grid();
        let mut h = b - 1;
        let mut in_left = true;
        loop {
            if in_left {
                let below = l.get(h + 1).copied().flatten();
                let right = r[h];
                match (below, right) {
                    (None, None) => break,
                    (Some(x), Some(y)) if y < x => {
                        l[h] = Some(y);
                        r[h] = None;
                        in_left = false;
                    }
                    (None, Some(y)) => {
                        l[h] = Some(y);
                        r[h] = None;
                        in_left = false;
                    }
                    (Some(x), _) => {
                        l[h] = Some(x);
                        l[h + 1] = None;
                        h += 1;
                    }
                }
            } else {
                match r.get(h + 1).copied().flatten() {
                    Some(x) => {
                        r[h] = Some(x);
                        r[h + 1] = None;
                        h += 1;
                    }
                    None => break,
                }
            }
        }
        assert!(!in_left, "forward slide must vacate the right column");
        let left: Column = l.into_iter().flatten().collect();
        let right: Column = r.into_iter().flatten().collect();
        Some(TwoCol { a: self.a + 1, left, right })
    }

    /// `𝓔`: reverse slide into the cell below the right column.
    ///
    /// # Panics
    ///
    /// If `r_T ≠ 0`; see [`TwoCol::try_step`].
    pub fn cal_e(&self) -> Option<TwoCol> {
        assert_eq!(self.r(), 0, "𝓔 needs r_T = 0");
        if self.a == 0 {
            return None;
        }
        let (b, c) = (self.b(), self.c());
        let (mut l, mut r) = self.grid();
        let mut h = b + c;
        let mut in_right = true;
        loop {
            let above = |col: &Vec<Option<Letter>>| if h == 0 { None } else { col[h - 1] };
            if in_right {
                match (above(&r), l[h]) {
                    (None, None) => break,
                    (Some(x), Some(y)) if y > x => {
                        r[h] = Some(y);
                        l[h] = None;
                        in_right = false;
                    }
                    (None, Some(y)) => {
                        r[h] = Some(y);
                        l[h] = None;
                        in_right = false;
                    }
                    (Some(x), _) => {
                        r[h] = Some(x);
                        r[h - 1] = None;
                        h -= 1;
                    }
                }
            } else {
                match above(&l) {
                    Some(x) => {
                        l[h] = Some(x);
                        l[h - 1] = None;
                        h -= 1;
                    }
                    None => break,
                }
            }
        }
        assert!(!in_right, "reverse slide must vacate the left column");
        let left: Column = l.into_iter().flatten().collect();
        let right: Column = r.into_iter().flatten().collect();
        Some(TwoCol { a: self.a - 1, left, right })
    }

    /// `(^L T, ^R T)`, the columns of `𝓔^a T`.
    pub fn lt_rt(&self) -> (Column, Column) {
        let mut t = self.clone();
        while let Some(u) = t.cal_e() {
            t = u;
        }
        (t.left, t.right)
    }

    /// `(^L T, ^R T)` computed by sliding the right column down box by box.
    pub fn lt_rt_slide(&self) -> (Column, Column) {
        let (b, c) = (self.b(), self.c());
        let l_bottom = (b + c + self.a) as isize - 1;
        let mut placed: Vec<(isize, Letter)> = Vec::new();
        let mut limit = l_bottom;
        for k in 1..=self.right.len() {
            let y = self.right[self.right.len() - k];
            let cur = (b + c - k) as isize;
            let below_or_eq = self.left.iter().filter(|&&x| x <= y).count();
            let rstar = b as isize + below_or_eq as isize - 1;
            let row = cur.max(limit.min(rstar));
            placed.push((row, y));
            limit = row - 1;
        }
        let mut lt = Vec::new();
        for (t, &x) in self.left.iter().enumerate() {
            let row = (b + t) as isize;
            if placed.iter().any(|&(r, _)| r == row) {
                lt.push(x);
            } else {
                placed.push((row, x));
            }
        }
        placed.sort();
        (lt, placed.into_iter().map(|(_, y)| y).collect())
    }
}

/// The unique placement of `(left, right)` as a two-column tableau with
/// `r_T = 0`.
pub fn normalize(left: &[Letter], right: &[Letter]) -> TwoCol {
    let (u, v) = (left.len(), right.len());
    let c = (0..=u.min(v)).rev().find(|&c| (0..c).all(|t| left[t] <= right[v - c + t])).unwrap_or(0);
    TwoCol { a: u - c, left: left.to_vec(), right: right.to_vec() }
}

/// `𝓕(U, V)` on a pair of columns.
pub fn pair_cal_f(left: &[Letter], right: &[Letter]) -> Option<(Column, Column)> {
    normalize(left, right).cal_f().map(|t| (t.left, t.right))
}

/// `𝓔(U, V)` on a pair of columns.
pub fn pair_cal_e(left: &[Letter], right: &[Letter]) -> Option<(Column, Column)> {
    normalize(left, right).cal_e().map(|t| (t.left, t.right))
}

fn from_bottom(col: &[Letter], i: usize) -> Option<Letter> {
    (i >= 1 && i <= col.len()).then(|| col[col.len() - i])
}

/// Admissibility `T_2 ≺ T_1`. For a spin `T_1` pass `a1 = 0` and the column
/// as both `left1` and `lt1`.
pub fn admissible_parts(t2: &TwoCol, a1: usize, left1: &[Letter], lt1: &[Letter]) -> Result<(), &'static str> {
    if t2.right.len() + a1 > left1.len() {
        return Err("i");
    }
    for i in 1..=t2.right.len() {
        match from_bottom(lt1, i) {
            Some(y) if from_bottom(&t2.right, i).unwrap() <= y => {}
            _ => return Err("ii"),
        }
    }
    let (_, rt2) = t2.lt_rt();
    for i in 1..=left1.len() {
        let Some(k) = (i + t2.a).checked_sub(a1) else { continue };
        if let (Some(x), Some(y)) = (from_bottom(&rt2, k), from_bottom(left1, i)) {
            if x > y {
                return Err("iii");
            }
        }
    }
    Ok(())
}

pub fn admissible(t2: &TwoCol, t1: &TwoCol) -> Result<(), &'static str> {
    let (lt1, _) = t1.lt_rt();
    admissible_parts(t2, t1.a, &t1.left, &lt1)
}

pub fn admissible_spin(t2: &TwoCol, t0: &[Letter]) -> Result<(), &'static str> {
    admissible_parts(t2, 0, t0, t0)
}

/// An element `(T_ℓ, …, T_1[, T_0])` of the spinor model, stored with
/// `cols[k] = T_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinorTuple {
    pub cols: Vec<TwoCol>,
    pub spin: Option<Column>,
}

/// The crystal `𝐓_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorModel {
    pub cartan: Cartan,
    /// `a_1 ≤ ⋯ ≤ a_ℓ`.
    pub a: Vec<usize>,
    pub spin: bool,
}

impl SpinorModel {
    pub fn new(cartan: Cartan, mu: &[usize], spin: bool) -> Self {
        let a = conjugate(mu).into_iter().map(|h| cartan.n - h).collect();
        SpinorModel { cartan, a, spin }
    }

    pub fn from_kn(kn: &KnModel) -> Self {
        Self::new(kn.cartan, &kn.mu, kn.spin)
    }

    /// The shape `μ` recovered from `a_k = n − μ'_k`.
    pub fn mu(&self) -> Vec<usize> {
        conjugate(&self.a.iter().map(|&a| self.cartan.n - a).collect::<Vec<_>>())
    }

    pub fn ell(&self) -> usize {
        self.a.len()
    }

    /// `H_a`: the tail `n̄, …, (n−a+1)̄` and nothing else.
    pub fn h_a(n: usize, a: usize) -> TwoCol {
        TwoCol { a, left: ((n - a + 1)..=n).rev().map(Letter::bar).collect(), right: vec![] }
    }

    pub fn highest(&self) -> SpinorTuple {
        let n = self.cartan.n;
        SpinorTuple { cols: self.a.iter().map(|&a| Self::h_a(n, a)).collect(), spin: self.spin.then(Vec::new) }
    }

    fn check_factor(&self, k: usize, t: &TwoCol) -> Result<(), SpinorError> {
        let n = self.cartan.n;
        if t.a != self.a[k] {
            return Err(SpinorError::WrongTail(k + 1, t.a, self.a[k]));
        }
        let t = TwoCol::new(t.a, t.left.clone(), t.right.clone())?;
        if let Some(&x) = t.left.iter().chain(&t.right).find(|x| !x.is_neg() || x.index() > n) {
            return Err(SpinorError::BadLetter(x));
        }
        match self.cartan.ty {
            CartanType::C if t.b() != 0 => Err(SpinorError::GapNotEmpty(t.b())),
            CartanType::B if t.r() != 0 => Err(SpinorError::NotNormal(t.r())),
            _ => Ok(()),
        }
    }

    pub fn validate(&self, t: &SpinorTuple) -> Result<(), SpinorError> {
        let n = self.cartan.n;
        if t.cols.len() != self.ell() {
            return Err(SpinorError::Length(t.cols.len(), self.ell()));
        }
        if t.spin.is_some() != self.spin {
            return Err(SpinorError::Spin);
        }
        for (k, c) in t.cols.iter().enumerate() {
            self.check_factor(k, c)?;
        }
        if let Some(sp) = &t.spin {
            if !column_ok(sp) {
                return Err(SpinorError::NotSemistandard);
            }
            if let Some(&x) = sp.iter().find(|x| !x.is_neg() || x.index() > n) {
                return Err(SpinorError::BadLetter(x));
            }
            if let Some(t1) = t.cols.first() {
                admissible_spin(t1, sp).map_err(|e| SpinorError::NotAdmissible(1, 0, e))?;
            }
        }
        for k in 1..t.cols.len() {
            admissible(&t.cols[k], &t.cols[k - 1]).map_err(|e| SpinorError::NotAdmissible(k + 1, k, e))?;
        }
        Ok(())
    }

    /// Letters of the `𝔩`-part in tensor order.
    fn letters<'a>(&self, t: &'a SpinorTuple) -> impl Iterator<Item = &'a Letter> {
        t.spin.iter().flatten().chain(t.cols.iter().flat_map(|c| c.right.iter().chain(c.left.iter())))
    }

    /// `(ε_n, φ_n)` atoms in tensor order.
    fn atoms_n(&self, t: &SpinorTuple) -> Vec<(u32, u32)> {
        let nb = Letter::bar(self.cartan.n);
        let col_atom = |c: &[Letter]| (u32::from(c.first() == Some(&nb)), u32::from(!c.contains(&nb)));
        let mut f = Vec::new();
        if let Some(sp) = &t.spin {
            f.push(col_atom(sp));
        }
        for c in &t.cols {
            match self.cartan.ty {
                CartanType::C => {
                    let eps = c.right.first() == Some(&nb) && c.left.first() == Some(&nb);
                    let phi = !c.right.contains(&nb) && !c.left.contains(&nb);
                    f.push((u32::from(eps), u32::from(phi)));
                }
                CartanType::B => {
                    f.push(col_atom(&c.right));
                    f.push(col_atom(&c.left));
                }
            }
        }
        f
    }

    fn factors(&self, t: &SpinorTuple, i: usize) -> Vec<(u32, u32)> {
        if i == self.cartan.n {
            return self.atoms_n(t);
        }
        self.letters(t).map(|x| bar_letter_eps_phi(*x, i)).collect()
    }
}

/// `(ε_i, φ_i)` of a letter of `[n̄]` for `i < n`.
pub fn bar_letter_eps_phi(x: Letter, i: usize) -> (u32, u32) {
    (u32::from(x == Letter::bar(i)), u32::from(x == Letter::bar(i + 1)))
}

/// `f̃_i`/`ẽ_i` on a letter of `[n̄]` for `i < n`.
pub fn bar_letter_step(x: Letter, i: usize, dir: Dir) -> Option<Letter> {
    match dir {
        Dir::F if x == Letter::bar(i + 1) => Some(Letter::bar(i)),
        Dir::E if x == Letter::bar(i) => Some(Letter::bar(i + 1)),
        _ => None,
    }
}

fn col_step_n(col: &mut Column, n: usize, dir: Dir) {
    match dir {
        Dir::F => col.insert(0, Letter::bar(n)),
        Dir::E => {
            col.remove(0);
        }
    }
}

impl Crystal for SpinorModel {
    type Elem = SpinorTuple;

    fn cartan(&self) -> Cartan {
        self.cartan
    }

    fn stats(&self, t: &SpinorTuple) -> CrystalStats {
        let n = self.cartan.n;
        let mut wt = HalfWeight::zero(n);
        for x in self.letters(t) {
            wt.add_doubled(x.index(), -2);
        }
        for k in 1..=n {
            wt.add_doubled(k, 2 * t.cols.len() as i32 + i32::from(t.spin.is_some()));
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

    fn step(&self, t: &SpinorTuple, i: usize, dir: Dir) -> Option<SpinorTuple> {
        let n = self.cartan.n;
        let (_, _, pos) = route(&self.factors(t, i), dir);
        let mut pos = pos?;
        let mut out = t.clone();
        if i < n {
            let mut slots: Vec<&mut Letter> = out.spin.iter_mut().flatten().collect();
            for c in out.cols.iter_mut() {
                slots.extend(c.right.iter_mut());
                slots.extend(c.left.iter_mut());
            }
            *slots[pos] = bar_letter_step(*slots[pos], i, dir)?;
            return Some(out);
        }
        if let Some(sp) = out.spin.as_mut() {
            if pos == 0 {
                col_step_n(sp, n, dir);
                return Some(out);
            }
            pos -= 1;
        }
        match self.cartan.ty {
            CartanType::C => {
                let c = &mut out.cols[pos];
                col_step_n(&mut c.right, n, dir);
                col_step_n(&mut c.left, n, dir);
            }
            CartanType::B => {
                let c = &mut out.cols[pos / 2];
                col_step_n(if pos % 2 == 0 { &mut c.right } else { &mut c.left }, n, dir);
            }
        }
        Some(out)
    }

    fn label(&self, t: &SpinorTuple) -> String {
        let mut parts: Vec<String> =
            t.cols.iter().rev().map(|c| format!("({}; L{:?} R{:?})", c.a, ints(&c.left), ints(&c.right))).collect();
        if let Some(sp) = &t.spin {
            parts.push(format!("sp{:?}", ints(sp)));
        }
        parts.join(" ")
    }
}

/// `Ψ_a` on a KN column of height `h`, landing in `𝐓(n − h)`.
pub fn psi_column(ty: CartanType, n: usize, col: &[Letter]) -> Result<TwoCol, SpinorError> {
    let target = n.checked_sub(col.len()).ok_or(SpinorError::Shape(0))?;
    let plus: Vec<usize> = col.iter().filter(|x| x.is_pos()).map(|x| x.index()).collect();
    let minus: Column = col.iter().copied().filter(|x| x.is_neg()).collect();
    let tilde: Column = (1..=n).rev().filter(|k| !plus.contains(k)).map(Letter::bar).collect();
    let (mut l, mut r) = (minus, tilde);
    for _ in 0..target {
        (l, r) = pair_cal_f(&l, &r).ok_or(SpinorError::Shape(target))?;
    }
    let t = normalize(&l, &r);
    if t.a != target {
        return Err(SpinorError::Shape(t.a));
    }
    if ty == CartanType::C && t.b() != 0 {
        return Err(SpinorError::GapNotEmpty(t.b()));
    }
    Ok(t)
}

/// Inverse of [`psi_column`].
pub fn psi_column_inv(n: usize, t: &TwoCol) -> Column {
    let (lt, rt) = t.lt_rt();
    let mut col: Column = (1..=n).filter(|&k| !rt.contains(&Letter::bar(k))).map(Letter::pos).collect();
    let zeros = t.a + t.right.len() - t.left.len();
    col.extend(std::iter::repeat_n(Letter(0), zeros));
    col.extend(lt);
    col
}

/// `Ψ_sp`: keep the barred letters of a spin column.
pub fn psi_spin(col: &[Letter]) -> Column {
    col.iter().copied().filter(|x| x.is_neg()).collect()
}

pub fn psi_spin_inv(n: usize, t: &[Letter]) -> Column {
    let mut col: Column = (1..=n).filter(|&k| !t.contains(&Letter::bar(k))).map(Letter::pos).collect();
    col.extend_from_slice(t);
    col
}

/// `Ψ_λ`: KN tableaux to the spinor model, column by column.
pub fn psi_lambda(kn: &KnModel, t: &KnTableau) -> Result<SpinorTuple, SpinorError> {
    let (ty, n) = (kn.cartan.ty, kn.cartan.n);
    Ok(SpinorTuple {
        cols: t.cols.iter().map(|c| psi_column(ty, n, c)).collect::<Result<_, _>>()?,
        spin: t.spin.as_deref().map(psi_spin),
    })
}

pub fn psi_lambda_inv(n: usize, t: &SpinorTuple) -> KnTableau {
    KnTableau {
        cols: t.cols.iter().map(|c| psi_column_inv(n, c)).collect(),
        spin: t.spin.as_deref().map(|s| psi_spin_inv(n, s)),
    }
}
