//! Crystals of maximal parabolic Verma modules: rotated tableaux over `[n̄]`
//! whose columns come in blocks, twisted by a tail tableau of shape `ν`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crystal::{route, Cartan, CartanType, Crystal, CrystalStats, Dir, Ext, HalfWeight};
use crate::spinor::{bar_letter_eps_phi, bar_letter_step};
use crate::tableaux::{conjugate, ints, Letter, RotTableau, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VermaError {
    #[error("body is not a semistandard rotated tableau over [n̄]")]
    Body,
    #[error("type C body must have columns in equal-height pairs")]
    Pairs,
    #[error("tail has shape {0:?}, expected {1:?}")]
    TailShape(Vec<usize>, Vec<usize>),
    #[error("tail is not a semistandard tableau over [n̄]")]
    Tail,
}

/// An element `(V_2, V_1)` of `𝐕_λ`: `tail` has straight shape `ν`,
/// `body` is a rotated tableau in `𝐕`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VermaElem {
    pub tail: Tableau,
    pub body: RotTableau,
}

/// `𝐕_λ` for a fixed tail shape `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaModel {
    pub cartan: Cartan,
    pub nu: Vec<usize>,
}

impl VermaModel {
    /// `ν = (a_ℓ, …, a_1)'` built from the columns of the shape.
    pub fn new(cartan: Cartan, mu: &[usize]) -> Self {
        let mut a: Vec<usize> = conjugate(mu).into_iter().map(|h| cartan.n - h).collect();
        a.reverse();
        let nu = conjugate(&a);
        VermaModel { cartan, nu }
    }

    /// The highest weight element `(H_ν, ∅)`: column `j` reads
    /// `n̄, (n−1)̄, …` from the top.
    pub fn highest(&self) -> VermaElem {
        let n = self.cartan.n;
        let rows = self.nu.iter().enumerate().map(|(r, &len)| vec![Letter::bar(n - r); len]).collect();
        VermaElem { tail: Tableau { rows }, body: RotTableau { cols: vec![] } }
    }

    pub fn validate(&self, v: &VermaElem) -> Result<(), VermaError> {
        let n = self.cartan.n;
        let in_alpha = |x: &Letter| x.is_neg() && x.index() <= n;
        if !v.body.is_semistandard() || !v.body.cols.iter().flatten().all(in_alpha) {
            return Err(VermaError::Body);
        }
        if self.cartan.ty == CartanType::C {
            let h = v.body.heights();
            if h.len() % 2 == 1 || h.chunks(2).any(|p| p[0] != p[1]) {
                return Err(VermaError::Pairs);
            }
        }
        if v.tail.shape() != self.nu {
            return Err(VermaError::TailShape(v.tail.shape(), self.nu.clone()));
        }
        if !v.tail.is_semistandard() || !v.tail.rows.iter().flatten().all(in_alpha) {
            return Err(VermaError::Tail);
        }
        Ok(())
    }

    /// Letters in tensor order: body columns from the right, each top to
    /// bottom, then the tail columns from the right, each top to bottom.
    fn letter_slots(v: &mut VermaElem) -> Vec<&mut Letter> {
        let mut slots: Vec<&mut Letter> = v.body.cols.iter_mut().flatten().collect();
        let width = v.tail.rows.first().map_or(0, Vec::len);
        let mut tail: Vec<Vec<&mut Letter>> = (0..width).map(|_| Vec::new()).collect();
        for row in v.tail.rows.iter_mut() {
            for (j, x) in row.iter_mut().enumerate() {
                tail[j].push(x);
            }
        }
        for col in tail.into_iter().rev() {
            slots.extend(col);
        }
        slots
    }

    fn letters(v: &VermaElem) -> Vec<Letter> {
        let mut c = v.clone();
        Self::letter_slots(&mut c).into_iter().map(|x| *x).collect()
    }

    fn block_width(&self) -> usize {
        match self.cartan.ty {
            CartanType::C => 2,
            CartanType::B => 1,
        }
    }

    /// `(ε_n, φ_n)` of the body blocks in tensor order followed by `pad`
    /// empty blocks.
    fn atoms_n(&self, body: &RotTableau, pad: usize) -> Vec<(u32, u32)> {
        let nb = Letter::bar(self.cartan.n);
        let mut out: Vec<(u32, u32)> = body
            .cols
            .chunks(self.block_width())
            .map(|blk| {
                let eps = blk.iter().all(|c| c.first() == Some(&nb));
                let phi = blk.iter().all(|c| !c.contains(&nb));
                (u32::from(eps), u32::from(phi))
            })
            .collect();
        out.extend(std::iter::repeat_n((0, 1), pad));
        out
    }

    /// `ẽ_n`/`f̃_n` computed with `pad ≥ 1` virtual empty blocks.
    pub fn step_n_padded(&self, v: &VermaElem, dir: Dir, pad: usize) -> Option<VermaElem> {
        assert!(pad >= 1, "at least one empty block is needed");
        let n = self.cartan.n;
        let width = self.block_width();
        let pos = route(&self.atoms_n(&v.body, pad), dir).2?;
        let mut out = v.clone();
        let cols = &mut out.body.cols;
        for k in pos * width..(pos + 1) * width {
            match dir {
                Dir::F => {
                    while cols.len() <= k {
                        cols.push(vec![]);
                    }
                    cols[k].insert(0, Letter::bar(n));
                }
                Dir::E => {
                    cols[k].remove(0);
                }
            }
        }
        while cols.last().is_some_and(Vec::is_empty) {
            cols.pop();
        }
        Some(out)
    }
}

impl Crystal for VermaModel {
    type Elem = VermaElem;

    fn cartan(&self) -> Cartan {
        self.cartan
    }

    fn stats(&self, v: &VermaElem) -> CrystalStats {
        let n = self.cartan.n;
        let mut wt = HalfWeight::zero(n);
        let letters = Self::letters(v);
        for x in &letters {
            wt.add_doubled(x.index(), -2);
        }
        let mut eps = Vec::with_capacity(n);
        for i in 1..n {
            let f: Vec<_> = letters.iter().map(|&x| bar_letter_eps_phi(x, i)).collect();
            eps.push(Ext::Fin(route(&f, Dir::E).0 as i32));
        }
        eps.push(Ext::Fin(route(&self.atoms_n(&v.body, 1), Dir::E).0 as i32));
        CrystalStats::from_eps(&self.cartan, wt, eps)
    }

    fn step(&self, v: &VermaElem, i: usize, dir: Dir) -> Option<VermaElem> {
        let n = self.cartan.n;
        let mut out = v.clone();
        if i < n {
            let f: Vec<_> = Self::letters(v).into_iter().map(|x| bar_letter_eps_phi(x, i)).collect();
            let pos = route(&f, dir).2?;
            let mut slots = Self::letter_slots(&mut out);
            *slots[pos] = bar_letter_step(*slots[pos], i, dir)?;
            return Some(out);
        }
        self.step_n_padded(v, dir, 1)
    }

    fn label(&self, v: &VermaElem) -> String {
        let tail: Vec<Vec<i32>> = v.tail.rows.iter().map(|r| ints(r)).collect();
        let body: Vec<Vec<i32>> = v.body.cols.iter().map(|c| ints(c)).collect();
        format!("tail{tail:?} body{body:?}")
    }
}
