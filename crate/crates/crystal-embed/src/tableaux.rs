//! Letters of the alphabet `1<…<n<0<n̄<…<1̄`, columns, straight, rotated and
//! skew tableaux, jeu de taquin, column insertion and the symmetric RSK map.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A letter: `k ↦ k`, `k̄ ↦ −k`, `0 ↦ 0`. Ordering follows the alphabet,
/// not the integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub const ZERO: Letter = Letter(0);

    pub fn bar(k: usize) -> Letter {
        Letter(-(k as i32))
    }

    pub fn pos(k: usize) -> Letter {
        Letter(k as i32)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_pos(self) -> bool {
        self.0 > 0
    }

    pub fn is_neg(self) -> bool {
        self.0 < 0
    }

    /// `k` for both `k` and `k̄`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    fn class(self) -> u8 {
        match self.0.cmp(&0) {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.class().cmp(&other.class()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{305}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convert signed integers into letters.
pub fn letters(v: &[i32]) -> Vec<Letter> {
    v.iter().map(|&x| Letter(x)).collect()
}

/// Convert letters into signed integers.
pub fn ints(v: &[Letter]) -> Vec<i32> {
    v.iter().map(|x| x.0).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// The full alphabet including 0.
    J,
    /// Without 0.
    Jx,
    /// `[n] = {1,…,n}`.
    Pos,
    /// `[n̄] = {n̄,…,1̄}`.
    Neg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub n: usize,
    pub variant: Variant,
}

impl Alphabet {
    pub fn new(n: usize, variant: Variant) -> Self {
        Alphabet { n, variant }
    }

    pub fn contains(&self, x: Letter) -> bool {
        let k = x.index();
        match self.variant {
            Variant::J => k <= self.n,
            Variant::Jx => !x.is_zero() && k <= self.n,
            Variant::Pos => x.is_pos() && k <= self.n,
            Variant::Neg => x.is_neg() && k <= self.n,
        }
    }

    /// All letters in increasing order.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.n as i32;
        let mut v: Vec<Letter> = (1..=n).map(Letter).collect();
        v.push(Letter::ZERO);
        v.extend((1..=n).rev().map(|k| Letter(-k)));
        v.retain(|&x| self.contains(x));
        v
    }
}

/// Letters `x` above `y` in a column: strictly increasing, except that the
/// odd letter 0 may repeat.
pub fn column_pair_ok(x: Letter, y: Letter) -> bool {
    x < y || (x.is_zero() && y.is_zero())
}

/// Letters `x` left of `y` in a row: weakly increasing, 0 never repeats.
pub fn row_pair_ok(x: Letter, y: Letter) -> bool {
    x < y || (x == y && !x.is_zero())
}

pub type Column = Vec<Letter>;

pub fn column_ok(col: &[Letter]) -> bool {
    col.windows(2).all(|w| column_pair_ok(w[0], w[1]))
}

/// Conjugate of a partition (trailing zeros ignored).
pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let m = p.first().copied().unwrap_or(0);
    (1..=m).map(|k| p.iter().filter(|&&x| x >= k).count()).collect()
}

pub fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("not symmetric")]
    NotSymmetric,
    #[error("shape is not a partition")]
    BadShape,
    #[error("entry {0} outside the alphabet")]
    BadLetter(i32),
}

/// A straight shape tableau in English convention: rows top to bottom,
/// each row left-justified and read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn from_rows(rows: &[&[i32]]) -> Self {
        Tableau { rows: rows.iter().map(|r| letters(r)).collect() }
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn columns(&self) -> Vec<Column> {
        let w = self.rows.first().map_or(0, Vec::len);
        (0..w).map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()).collect()
    }

    pub fn from_columns(cols: &[Column]) -> Self {
        let h = cols.first().map_or(0, Vec::len);
        let rows = (0..h).map(|i| cols.iter().take_while(|c| c.len() > i).map(|c| c[i]).collect()).collect();
        Tableau { rows }
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        is_partition(&self.shape())
            && self.rows.iter().all(|r| r.windows(2).all(|w| row_pair_ok(w[0], w[1])))
            && self.columns().iter().all(|c| column_ok(c))
    }
}

/// A tableau of rotated straight shape `μ^π`: rows right-justified and
/// bottom-aligned. Stored as columns from the right, each top to bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RotTableau {
    pub cols: Vec<Column>,
}

impl RotTableau {
    /// Build from rows listed top to bottom, each row left to right.
    pub fn from_rows(rows: &[&[i32]]) -> Self {
        let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut cols: Vec<Column> = vec![Vec::new(); width];
        for r in rows {
            for (k, &x) in r.iter().rev().enumerate() {
                cols[k].push(Letter(x));
            }
        }
        RotTableau { cols }
    }

    pub fn heights(&self) -> Vec<usize> {
        self.cols.iter().map(Vec::len).collect()
    }

    /// `μ`, read as row lengths from the bottom.
    pub fn shape(&self) -> Vec<usize> {
        conjugate(&self.heights())
    }

    pub fn size(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// `T(i, j)`: row `i` from the bottom, column `j` from the right (1-based).
    pub fn entry(&self, i: usize, j: usize) -> Option<Letter> {
        let col = self.cols.get(j - 1)?;
        (i >= 1 && i <= col.len()).then(|| col[col.len() - i])
    }

    /// Rows top to bottom, each left to right.
    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let h = self.cols.first().map_or(0, Vec::len);
        (1..=h)
            .rev()
            .map(|i| {
                let mut row: Vec<Letter> = (1..=self.cols.len()).filter_map(|j| self.entry(i, j)).collect();
                row.reverse();
                row
            })
            .collect()
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows().into_iter().flat_map(|r| r.into_iter().rev()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let h = self.heights();
        if !is_partition(&h) || h.contains(&0) {
            return false;
        }
        if !self.cols.iter().all(|c| column_ok(c)) {
            return false;
        }
        for (j, &height) in h.iter().enumerate().skip(1) {
            for i in 1..=height {
                let (left, right) = (self.entry(i, j + 1).unwrap(), self.entry(i, j).unwrap());
                if !row_pair_ok(left, right) {
                    return false;
                }
            }
        }
        true
    }
}

/// A skew tableau in English convention: `None` cells belong to the inner
/// shape, rows are left-justified against column 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    pub rows: Vec<Vec<Option<Letter>>>,
}

impl SkewTableau {
    /// Two columns `left`, `right` with the right column's top at row 0 and
    /// the left column's top at row `offset`.
    pub fn two_columns(left: &[Letter], right: &[Letter], offset: usize) -> Self {
        let height = (offset + left.len()).max(right.len());
        let mut rows = Vec::with_capacity(height);
        for r in 0..height {
            let l = (r >= offset && r - offset < left.len()).then(|| left[r - offset]);
            let rt = right.get(r).copied();
            let row = match (l, rt) {
                (l, Some(x)) => vec![l, Some(x)],
                (Some(y), None) => vec![Some(y)],
                (None, None) => vec![],
            };
            rows.push(row);
        }
        SkewTableau { rows }
    }

    pub fn from_straight(t: &Tableau) -> Self {
        SkewTableau { rows: t.rows.iter().map(|r| r.iter().map(|&x| Some(x)).collect()).collect() }
    }

    /// Rows top to bottom, filled cells read right to left.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().flat_map(|r| r.iter().rev().flatten().copied()).collect()
    }

    fn inner_len(&self, r: usize) -> usize {
        self.rows[r].iter().take_while(|c| c.is_none()).count()
    }

    /// Inner corners: cells of the inner shape whose removal leaves a partition.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows.len() {
            let k = self.inner_len(r);
            if k == 0 {
                continue;
            }
            let below = if r + 1 < self.rows.len() { self.inner_len(r + 1) } else { 0 };
            if below < k {
                out.push((r, k - 1));
            }
        }
        out
    }

    fn get(&self, r: usize, c: usize) -> Option<Letter> {
        self.rows.get(r).and_then(|row| row.get(c)).copied().flatten()
    }

    /// Forward slide into the inner corner `(r, c)`.
    pub fn slide(&mut self, mut r: usize, mut c: usize) {
        loop {
            let right = self.get(r, c + 1);
            let below = self.get(r + 1, c);
            let take_below = match (below, right) {
                (Some(b), Some(rt)) => b <= rt,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_below {
                self.rows[r][c] = below;
                self.rows[r + 1][c] = None;
                r += 1;
            } else {
                self.rows[r][c] = right;
                self.rows[r][c + 1] = None;
                c += 1;
            }
        }
        let row = &mut self.rows[r];
        debug_assert_eq!(c + 1, row.len());
        row.pop();
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
    }

    /// Rectify, choosing inner corners with `pick` (an index into the list
    /// of current inner corners).
    pub fn rectify_with(mut self, mut pick: impl FnMut(usize) -> usize) -> Tableau {
        loop {
            let corners = self.inner_corners();
            if corners.is_empty() {
                break;
            }
            let (r, c) = corners[pick(corners.len()) % corners.len()];
            self.slide(r, c);
        }
        Tableau { rows: self.rows.into_iter().map(|r| r.into_iter().flatten().collect()).collect() }
    }
}

/// Jeu de taquin rectification, always sliding into the lowest inner corner.
pub fn jdt_rectify(t: SkewTableau) -> Tableau {
    t.rectify_with(|k| k - 1)
}

/// Schensted column insertion of `x` into a straight tableau.
pub fn column_insert(t: &Tableau, x: Letter) -> Tableau {
    let mut cols = t.columns();
    let mut x = x;
    for col in cols.iter_mut() {
        match col.iter().position(|&y| y >= x) {
            Some(k) => std::mem::swap(&mut col[k], &mut x),
            None => {
                col.push(x);
                return Tableau::from_columns(&cols);
            }
        }
    }
    cols.push(vec![x]);
    Tableau::from_columns(&cols)
}

/// Column-insert the letters of `w` from left to right into the empty tableau.
pub fn column_insert_word(w: &[Letter]) -> Tableau {
    w.iter().fold(Tableau::default(), |t, &x| column_insert(&t, x))
}

/// `T ← x` for a rotated tableau over `[n̄]`: column insertion performed in
/// the reverse way starting from the rightmost column.
pub fn reverse_column_insert(t: &RotTableau, x: Letter) -> RotTableau {
    let mut out = t.clone();
    let mut x = x;
    for col in out.cols.iter_mut() {
        match col.iter().rposition(|&y| y <= x) {
            Some(k) => std::mem::swap(&mut col[k], &mut x),
            None => {
                col.insert(0, x);
                return out;
            }
        }
    }
    out.cols.push(vec![x]);
    out
}

/// Square matrix indexed by `[n̄] × [n̄]`; `get(i, j)` is `m_{īj̄}` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymMatrix {
    pub n: usize,
    pub m: Vec<Vec<u32>>,
}

impl SymMatrix {
    pub fn zero(n: usize) -> Self {
        SymMatrix { n, m: vec![vec![0; n]; n] }
    }

    /// Build from rows listed in the order `n̄, …, 1̄` with columns in the
    /// same order.
    pub fn from_bar_rows(rows: &[&[u32]]) -> Self {
        let n = rows.len();
        let mut s = SymMatrix::zero(n);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                s.m[n - 1 - r][n - 1 - c] = v;
            }
        }
        s
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.m[i - 1][j - 1]
    }

    pub fn add(&mut self, i: usize, j: usize, v: u32) {
        self.m[i - 1][j - 1] += v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.m[i][j] == self.m[j][i]))
    }

    /// `w(m)_{ī}`: the row `ī` read as a one-row tableau, right to left.
    pub fn row_word(&self, i: usize) -> Vec<Letter> {
        let mut row = Vec::new();
        for j in (1..=self.n).rev() {
            for _ in 0..self.get(i, j) {
                row.push(Letter::bar(j));
            }
        }
        row.reverse();
        row
    }
}

/// `κ(m) = ((w_r ← w_{r−1}) ⋯) ← w_1` for `w_1⋯w_r = w(m)_{n̄} ⋯ w(m)_{1̄}`.
pub fn kappa(m: &SymMatrix) -> Result<RotTableau, TableauError> {
    if !m.is_symmetric() {
        return Err(TableauError::NotSymmetric);
    }
    let word: Vec<Letter> = (1..=m.n).rev().flat_map(|i| m.row_word(i)).collect();
    Ok(word.iter().rev().fold(RotTableau::default(), |t, &x| reverse_column_insert(&t, x)))
}

/// Inverse of [`kappa`]. The tableau doubles as its own recording tableau:
/// cells holding `ī` are the cells created while inserting row `ī`.
pub fn kappa_inv(p: &RotTableau, n: usize) -> Result<SymMatrix, TableauError> {
    if !p.is_semistandard() {
        return Err(TableauError::BadShape);
    }
    if let Some(x) = p.cols.iter().flatten().find(|x| !x.is_neg() || x.index() > n) {
        return Err(TableauError::BadLetter(x.0));
    }
    let mut m = SymMatrix::zero(n);
    let mut cur = p.clone();
    for i in (1..=n).rev() {
        let target = Letter::bar(i);
        let mut cells: Vec<(usize, usize)> = Vec::new();
        for (j, col) in p.cols.iter().enumerate() {
            if let Some(k) = col.iter().position(|&x| x == target) {
                cells.push((j, col.len() - k));
            }
        }
        cells.sort_by_key(|c| std::cmp::Reverse(c.0));
        for (j, row) in cells {
            if cur.cols[j].len() != row {
                return Err(TableauError::BadShape);
            }
            let mut y = cur.cols[j].remove(0);
            if cur.cols[j].is_empty() {
                if j + 1 != cur.cols.len() {
                    return Err(TableauError::BadShape);
                }
                cur.cols.pop();
            }
            for c in (0..j).rev() {
                let col = &mut cur.cols[c];
                let k = col.iter().position(|&x| x >= y).ok_or(TableauError::BadShape)?;
                std::mem::swap(&mut col[k], &mut y);
            }
            m.add(i, y.index(), 1);
        }
    }
    Ok(m)
}
