//! The separation algorithm and the embeddings
//! `Ξ_λ = Φ_λ ∘ Θ_λ ∘ Ψ_λ` of KN tableaux into Lusztig data.

use thiserror::Error;

use crate::crystal::{Cartan, CartanType, Crystal, Dir, HalfWeight};
use crate::kn::{KnModel, KnTableau};
use crate::lusztig::{phi_lambda, FoldedDatum, LusztigError, LusztigModel};
use crate::spinor::{pair_cal_e, pair_cal_f, psi_lambda, SpinorError, SpinorModel, SpinorTuple};
use crate::tableaux::{Column, RotTableau, Tableau};
use crate::verma::{VermaElem, VermaModel};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("𝓕_{0} is undefined during separation")]
    Separation(usize),
    #[error("separated column {0} has height {1}, expected {2}")]
    Height(usize, usize, usize),
    #[error("separated body is not a rotated tableau")]
    Body,
    #[error(transparent)]
    Spinor(#[from] SpinorError),
    #[error(transparent)]
    Lusztig(#[from] LusztigError),
}

/// `𝓧_i` on `𝐄^r`, with `us[k] = U_{k+1}`. Returns `false` (leaving `us`
/// untouched) when the result is `0`.
pub fn e_r_step(us: &mut [Column], i: usize, dir: Dir) -> bool {
    assert!(i >= 1 && i < us.len(), "index {i} out of range for 𝐄^{}", us.len());
    let (left, right) = (&us[i], &us[i - 1]);
    let out = match dir {
        Dir::F => pair_cal_f(left, right),
        Dir::E => pair_cal_e(left, right),
    };
    match out {
        Some((l, r)) => {
            us[i] = l;
            us[i - 1] = r;
            true
        }
        None => false,
    }
}

/// `(T_ℓ^L, T_ℓ^R, …, T_1^L, T_1^R)` as `[U_1, …, U_{2ℓ}]`.
pub fn to_e_r(t: &SpinorTuple) -> Vec<Column> {
    t.cols.iter().flat_map(|c| [c.right.clone(), c.left.clone()]).collect()
}

/// The operator sequence of the separation algorithm as `(index, power)`
/// pairs in order of application.
pub fn separation_schedule(a: &[usize]) -> Vec<(usize, usize)> {
    let ell = a.len();
    let mut out = Vec::new();
    for k in 1..ell {
        for i in (2 * ell - 2 * k)..=(2 * ell - k - 1) {
            out.push((i, a[ell - k - 1]));
        }
    }
    out
}

/// `T̄ = (T̄_{2ℓ}, …, T̄_1)` as `[T̄_1, …, T̄_{2ℓ}]`.
pub fn separate(t: &SpinorTuple, a: &[usize]) -> Result<Vec<Column>, EmbedError> {
    let mut us = to_e_r(t);
    for (i, p) in separation_schedule(a) {
        for _ in 0..p {
            if !e_r_step(&mut us, i, Dir::F) {
                return Err(EmbedError::Separation(i));
            }
        }
    }
    Ok(us)
}

/// Split the separated columns along the common line into `(V_2, V_1)`.
pub fn tail_body(t: &SpinorTuple, a: &[usize], bars: &[Column]) -> Result<VermaElem, EmbedError> {
    let ell = a.len();
    let b = |i: usize| -> usize {
        let c = &t.cols[(i - 1) / 2];
        if i % 2 == 1 {
            c.right.len()
        } else {
            c.left.len() - c.a
        }
    };
    let mut body: Vec<Column> = t.spin.iter().cloned().collect();
    let mut tail_cols: Vec<Column> = Vec::new();
    for i in 1..=2 * ell {
        let col = &bars[i - 1];
        let below = if i > ell { a[i - ell - 1] } else { 0 };
        let want = b(i) + below;
        if col.len() != want {
            return Err(EmbedError::Height(i, col.len(), want));
        }
        body.push(col[..b(i)].to_vec());
        if i > ell {
            tail_cols.push(col[b(i)..].to_vec());
        }
    }
    while body.last().is_some_and(Vec::is_empty) {
        body.pop();
    }
    if body.iter().any(Vec::is_empty) {
        return Err(EmbedError::Body);
    }
    tail_cols.reverse();
    let mut tail = Tableau::from_columns(&tail_cols);
    tail.rows.retain(|r| !r.is_empty());
    Ok(VermaElem { tail, body: RotTableau { cols: body } })
}

/// `Θ_λ`: spinor model to `𝐕_λ`.
pub fn theta_lambda(model: &SpinorModel, t: &SpinorTuple) -> Result<VermaElem, EmbedError> {
    let bars = separate(t, &model.a)?;
    tail_body(t, &model.a, &bars)
}

/// All the models attached to one highest weight, with the shifts that make
/// the embeddings weight preserving.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub kn: KnModel,
    pub spinor: SpinorModel,
    pub verma: VermaModel,
    pub lusztig: LusztigModel,
    /// `r` with `wt(H_ν) + r ω_n = ω_λ`.
    pub r: usize,
}

impl Pipeline {
    pub fn new(ty: CartanType, n: usize, mu: &[usize], spin: bool) -> Self {
        let cartan = Cartan::new(ty, n);
        let kn = KnModel::new(cartan, mu, spin);
        let spinor = SpinorModel::from_kn(&kn);
        let verma = VermaModel::new(cartan, mu);
        let lusztig = LusztigModel::new(cartan);
        let gap = &kn.omega_lambda() - &verma.stats(&verma.highest()).wt;
        let unit = cartan.omega(n);
        let r = (gap.0[0] / unit.0[0]) as usize;
        assert_eq!(gap, unit.scale(r as i32), "highest weights differ by a non-multiple of ω_n");
        Pipeline { kn, spinor, verma, lusztig, r }
    }

    pub fn cartan(&self) -> Cartan {
        self.kn.cartan
    }

    /// `r ω_n`.
    pub fn verma_shift(&self) -> HalfWeight {
        self.cartan().omega(self.cartan().n).scale(self.r as i32)
    }

    /// `ω_λ`.
    pub fn lusztig_shift(&self) -> HalfWeight {
        self.kn.omega_lambda()
    }

    pub fn psi(&self, t: &KnTableau) -> Result<SpinorTuple, EmbedError> {
        Ok(psi_lambda(&self.kn, t)?)
    }

    pub fn theta(&self, t: &SpinorTuple) -> Result<VermaElem, EmbedError> {
        theta_lambda(&self.spinor, t)
    }

    pub fn phi(&self, v: &VermaElem) -> Result<FoldedDatum, EmbedError> {
        let c = self.cartan();
        Ok(phi_lambda(c.ty, c.n, v)?)
    }

    /// `Ξ_λ = Φ_λ ∘ Θ_λ ∘ Ψ_λ`.
    pub fn xi(&self, t: &KnTableau) -> Result<FoldedDatum, EmbedError> {
        self.phi(&self.theta(&self.psi(t)?)?)
    }
}
