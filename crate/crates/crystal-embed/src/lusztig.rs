//! Lusztig data: the type `A_{2n−1}` crystal for the reduced words adapted to
//! the single-sink orientation, its folding to types `B_n`/`C_n`, and the
//! embedding of the parabolic Verma crystal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::{tensor_stats, Cartan, CartanType, Crystal, CrystalStats, Dir, Ext, HalfWeight};
use crate::tableaux::{kappa_inv, Letter, TableauError};
use crate::verma::VermaElem;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LusztigError {
    #[error("datum is not fixed by σ")]
    NotSigmaFixed,
    #[error("antidiagonal entry c[{0},{1}] = {2} is not divisible by {3}")]
    Parity(usize, usize, u32, u32),
    #[error("diagonal entry m[{0},{0}] = {1} is not divisible by {2}")]
    OddDiagonal(usize, u32, u32),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// `c = (c_{ij})_{1 ≤ i < j ≤ 2n}`, multiplicities of the positive roots of
/// `A_{2n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeAMatrix {
    pub n: usize,
    c: Vec<u32>,
}

impl TypeAMatrix {
    pub fn zero(n: usize) -> Self {
        TypeAMatrix { n, c: vec![0; 4 * n * n] }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i < j && j <= 2 * self.n, "root index ({i},{j}) out of range");
        (i - 1) * 2 * self.n + (j - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.c[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let k = self.idx(i, j);
        self.c[k] = v;
    }

    fn bump(&mut self, i: usize, j: usize, up: bool) {
        let k = self.idx(i, j);
        self.c[k] = if up { self.c[k] + 1 } else { self.c[k].checked_sub(1).expect("negative entry") };
    }

    /// `c^σ_{ij} = c_{2n−j+1, 2n−i+1}`.
    pub fn sigma(&self) -> TypeAMatrix {
        let m = 2 * self.n;
        let mut out = TypeAMatrix::zero(self.n);
        for i in 1..m {
            for j in (i + 1)..=m {
                out.set(i, j, self.get(m - j + 1, m - i + 1));
            }
        }
        out
    }

    pub fn is_sigma_fixed(&self) -> bool {
        self.sigma() == *self
    }

    /// `(c_k^{(i)})_{1 ≤ k ≤ 2n−i}` for `1 ≤ i < n`.
    fn partial_sums(&self, i: usize) -> Vec<i64> {
        let n = self.n;
        let g = |a: usize, b: usize| self.get(a, b) as i64;
        let mut s = Vec::with_capacity(2 * n - i);
        s.push(g(i, n + 1));
        for k in 2..=n {
            let prev = s[k - 2];
            s.push(prev + g(i, n + k) - g(i + 1, n + k - 1));
        }
        let prev = s[n - 1];
        s.push(prev + g(i, n) - g(i + 1, 2 * n));
        for k in (n + 2)..=(2 * n - i) {
            let t = k - n - 1;
            let prev = s[k - 2];
            s.push(prev + g(i, n - t) - g(i + 1, n - t + 1));
        }
        s
    }

    /// `ε_i(c)` for `1 ≤ i ≤ 2n − 1`.
    pub fn eps(&self, i: usize) -> u32 {
        let n = self.n;
        assert!(1 <= i && i < 2 * n, "index {i} out of range");
        if i == n {
            self.get(n, n + 1)
        } else if i < n {
            self.partial_sums(i).into_iter().max().unwrap_or(0).max(0) as u32
        } else {
            self.sigma().eps(2 * n - i)
        }
    }

    /// `ẽ_i`/`f̃_i` for `1 ≤ i ≤ 2n − 1`.
    pub fn step(&self, i: usize, dir: Dir) -> Option<TypeAMatrix> {
        let n = self.n;
        assert!(1 <= i && i < 2 * n, "index {i} out of range");
        if i > n {
            return self.sigma().step(2 * n - i, dir).map(|c| c.sigma());
        }
        let mut out = self.clone();
        if i == n {
            match dir {
                Dir::E if self.get(n, n + 1) == 0 => return None,
                _ => out.bump(n, n + 1, dir == Dir::F),
            }
            return Some(out);
        }
        let s = self.partial_sums(i);
        let max = *s.iter().max().unwrap();
        let k = match dir {
            Dir::E => {
                if max <= 0 {
                    return None;
                }
                s.iter().position(|&v| v == max).unwrap() + 1
            }
            Dir::F => s.iter().rposition(|&v| v == max).unwrap() + 1,
        };
        let up = dir == Dir::F;
        if k <= n {
            out.bump(i, k + n, up);
            out.bump(i + 1, k + n, !up);
        } else if k < 2 * n - i {
            out.bump(i, 2 * n - k + 1, up);
            out.bump(i + 1, 2 * n - k + 1, !up);
        } else {
            out.bump(i, i + 1, up);
        }
        Some(out)
    }

    /// Doubled weight in the `2n` coordinates of `𝔤𝔩_{2n}`.
    pub fn weight(&self) -> Vec<i64> {
        let m = 2 * self.n;
        let mut w = vec![0i64; m];
        for i in 1..m {
            for j in (i + 1)..=m {
                let v = self.get(i, j) as i64;
                w[i - 1] -= v;
                w[j - 1] += v;
            }
        }
        w
    }
}

/// `d = (d⁺, d⁻)`: `d⁺_{ij}` (`i ≤ j`) for the roots `ε_i + ε_j` and
/// `εε_i`, `d⁻_{ij}` (`i < j`) for the roots `ε_i − ε_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FoldedDatum {
    pub n: usize,
    dplus: Vec<u32>,
    dminus: Vec<u32>,
}

impl FoldedDatum {
    pub fn zero(n: usize) -> Self {
        FoldedDatum { n, dplus: vec![0; n * n], dminus: vec![0; n * n] }
    }

    pub fn dplus(&self, i: usize, j: usize) -> u32 {
        assert!(1 <= i && i <= j && j <= self.n);
        self.dplus[(i - 1) * self.n + j - 1]
    }

    pub fn dminus(&self, i: usize, j: usize) -> u32 {
        assert!(1 <= i && i < j && j <= self.n);
        self.dminus[(i - 1) * self.n + j - 1]
    }

    pub fn set_dplus(&mut self, i: usize, j: usize, v: u32) {
        assert!(1 <= i && i <= j && j <= self.n);
        self.dplus[(i - 1) * self.n + j - 1] = v;
    }

    pub fn set_dminus(&mut self, i: usize, j: usize, v: u32) {
        assert!(1 <= i && i < j && j <= self.n);
        self.dminus[(i - 1) * self.n + j - 1] = v;
    }

    /// `d⁺` entries as `(i, j, v)` triples, `i ≤ j`.
    pub fn dplus_entries(&self) -> Vec<(usize, usize, u32)> {
        let n = self.n;
        (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).map(|(i, j)| (i, j, self.dplus(i, j))).collect()
    }

    /// `d⁻` entries as `(i, j, v)` triples, `i < j`.
    pub fn dminus_entries(&self) -> Vec<(usize, usize, u32)> {
        let n = self.n;
        (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))).map(|(i, j)| (i, j, self.dminus(i, j))).collect()
    }

    /// `d⁺ ⊗ d⁻` split.
    pub fn split(&self) -> (FoldedDatum, FoldedDatum) {
        let mut p = self.clone();
        let mut m = self.clone();
        p.dminus.iter_mut().for_each(|v| *v = 0);
        m.dplus.iter_mut().for_each(|v| *v = 0);
        (p, m)
    }

    pub fn join(plus: &FoldedDatum, minus: &FoldedDatum) -> FoldedDatum {
        FoldedDatum { n: plus.n, dplus: plus.dplus.clone(), dminus: minus.dminus.clone() }
    }
}

/// `χ`: fill both members of every `σ`-orbit.
pub fn chi(ty: CartanType, d: &FoldedDatum) -> TypeAMatrix {
    let n = d.n;
    let m = 2 * n;
    let eps = ty.epsilon();
    let mut c = TypeAMatrix::zero(n);
    for i in 1..=n {
        c.set(i, m - i + 1, eps * d.dplus(i, i));
        for j in (i + 1)..=n {
            let v = d.dplus(i, j);
            c.set(i, m - j + 1, v);
            c.set(j, m - i + 1, v);
            let w = d.dminus(i, j);
            c.set(i, j, w);
            c.set(m - j + 1, m - i + 1, w);
        }
    }
    c
}

/// Inverse of [`chi`] on the image.
pub fn chi_inv(ty: CartanType, c: &TypeAMatrix) -> Result<FoldedDatum, LusztigError> {
    let n = c.n;
    let m = 2 * n;
    let eps = ty.epsilon();
    if !c.is_sigma_fixed() {
        return Err(LusztigError::NotSigmaFixed);
    }
    let mut d = FoldedDatum::zero(n);
    for i in 1..=n {
        let v = c.get(i, m - i + 1);
        if !v.is_multiple_of(eps) {
            return Err(LusztigError::Parity(i, m - i + 1, v, eps));
        }
        d.set_dplus(i, i, v / eps);
        for j in (i + 1)..=n {
            d.set_dplus(i, j, c.get(i, m - j + 1));
            d.set_dminus(i, j, c.get(i, j));
        }
    }
    // Entries of `c` outside the folded pattern must vanish.
    if chi(ty, &d) != *c {
        return Err(LusztigError::NotSigmaFixed);
    }
    Ok(d)
}

/// The crystal `𝐁_𝐢` of folded Lusztig data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LusztigModel {
    pub cartan: Cartan,
}

impl LusztigModel {
    pub fn new(cartan: Cartan) -> Self {
        LusztigModel { cartan }
    }

    fn eps_const(&self) -> u32 {
        self.cartan.ty.epsilon()
    }

    pub fn weight(&self, d: &FoldedDatum) -> HalfWeight {
        let n = self.cartan.n;
        let mut w = HalfWeight::zero(n);
        for (i, j, v) in d.dplus_entries() {
            let v = v as i32;
            if i == j {
                w.add_doubled(i, -2 * self.eps_const() as i32 * v);
            } else {
                w.add_doubled(i, -2 * v);
                w.add_doubled(j, -2 * v);
            }
        }
        for (i, j, v) in d.dminus_entries() {
            w.add_doubled(i, -2 * v as i32);
            w.add_doubled(j, 2 * v as i32);
        }
        w
    }

    /// `ε_i(d)` by the closed form.
    pub fn eps(&self, d: &FoldedDatum, i: usize) -> u32 {
        let c = chi(self.cartan.ty, d);
        if i < self.cartan.n {
            c.eps(i)
        } else {
            c.eps(i) / self.eps_const()
        }
    }

    /// `ε_i(d)` by iterating `ẽ_i` until it fails.
    pub fn eps_iterated(&self, d: &FoldedDatum, i: usize) -> u32 {
        let mut k = 0;
        let mut cur = d.clone();
        while let Some(next) = self.step(&cur, i, Dir::E) {
            cur = next;
            k += 1;
        }
        k
    }

    /// `x̃_i = x̃_i x̃_{2n−i}` (`i < n`) or `x̃_n^ε`, computed on `χ(d)`.
    pub fn step_checked(&self, d: &FoldedDatum, i: usize, dir: Dir) -> Result<Option<FoldedDatum>, LusztigError> {
        let n = self.cartan.n;
        let c = chi(self.cartan.ty, d);
        let seq: Vec<usize> = if i < n { vec![2 * n - i, i] } else { vec![n; self.eps_const() as usize] };
        let mut cur = c;
        for k in seq {
            match cur.step(k, dir) {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        chi_inv(self.cartan.ty, &cur).map(Some)
    }

    /// Which tensor factor of `d⁺ ⊗ d⁻` the operator acts on (`true` for
    /// `d⁺`).
    pub fn delta_route(&self, d: &FoldedDatum, i: usize, dir: Dir) -> bool {
        let (p, m) = d.split();
        let sp = self.stats(&p);
        let sm = self.minus_stats(&m);
        let t = tensor_stats(&self.cartan, &sp, &sm, i);
        match dir {
            Dir::E => t.e_left,
            Dir::F => t.f_left,
        }
    }

    /// Stats of `d⁻` as an element of the subcrystal `𝐁⁻`, where
    /// `φ_n = ε_n = −∞`.
    pub fn minus_stats(&self, m: &FoldedDatum) -> CrystalStats {
        let mut s = self.stats(m);
        let n = self.cartan.n;
        s.eps[n - 1] = Ext::NegInf;
        s.phi[n - 1] = Ext::NegInf;
        s
    }

    /// `x̃_i(d)` computed through the split `d⁺ ⊗ d⁻`.
    pub fn step_via_delta(&self, d: &FoldedDatum, i: usize, dir: Dir) -> Option<FoldedDatum> {
        let (p, m) = d.split();
        if self.delta_route(d, i, dir) {
            self.step(&p, i, dir).map(|p2| FoldedDatum::join(&p2, &m))
        } else if i == self.cartan.n {
            None
        } else {
            self.step(&m, i, dir).map(|m2| FoldedDatum::join(&p, &m2))
        }
    }
}

impl Crystal for LusztigModel {
    type Elem = FoldedDatum;

    fn cartan(&self) -> Cartan {
        self.cartan
    }

    fn stats(&self, d: &FoldedDatum) -> CrystalStats {
        let eps = self.cartan.indices().map(|i| Ext::Fin(self.eps(d, i) as i32)).collect();
        CrystalStats::from_eps(&self.cartan, self.weight(d), eps)
    }

    fn step(&self, d: &FoldedDatum, i: usize, dir: Dir) -> Option<FoldedDatum> {
        self.step_checked(d, i, dir).expect("folded operator left the image of χ")
    }

    fn label(&self, d: &FoldedDatum) -> String {
        let p: Vec<String> =
            d.dplus_entries().iter().filter(|e| e.2 > 0).map(|(i, j, v)| format!("{i}{j}:{v}")).collect();
        let m: Vec<String> =
            d.dminus_entries().iter().filter(|e| e.2 > 0).map(|(i, j, v)| format!("{i}{j}:{v}")).collect();
        format!("d+[{}] d-[{}]", p.join(" "), m.join(" "))
    }
}

/// `Φ_λ(V_2, V_1)`: `d⁺` from `κ^{-1}(V_1)`, `d⁻` from the row contents of
/// `V_2`.
pub fn phi_lambda(ty: CartanType, n: usize, v: &VermaElem) -> Result<FoldedDatum, LusztigError> {
    let m = kappa_inv(&v.body, n)?;
    let eps = ty.epsilon();
    let mut d = FoldedDatum::zero(n);
    for i in 1..=n {
        let diag = m.get(i, i);
        if diag % eps != 0 {
            return Err(LusztigError::OddDiagonal(i, diag, eps));
        }
        d.set_dplus(i, i, diag / eps);
        for j in (i + 1)..=n {
            d.set_dplus(i, j, m.get(i, j));
            let row = v.tail.rows.get(n - j);
            let count = row.map_or(0, |r| r.iter().filter(|&&x| x == Letter::bar(i)).count());
            d.set_dminus(i, j, count as u32);
        }
    }
    Ok(d)
}
