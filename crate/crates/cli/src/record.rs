use serde::{Deserialize, Serialize};

use loop_schubert::affine::{extended_grassmannian, lambda_hat, min_coset_rep, Coweight};
use loop_schubert::affschubert::Pipeline;
use loop_schubert::polyring::{PolyJson, VarEnv};
use loop_schubert::{QPoly, Result};
use rayon::prelude::*;

/// One row of a Schubert table. `lambda` is in fundamental-coweight
/// coordinates, `lambda_hat` in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub n: usize,
    pub lambda: Vec<i64>,
    pub lambda_hat: Vec<i64>,
    pub m_word: Vec<usize>,
    pub sigma_power: usize,
    pub length: usize,
    pub schubert_h: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tilde_xy: Option<PolyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tilde_x: Option<PolyJson>,
}

impl TableRecord {
    pub fn compute(lambda: &Coweight, tilde: bool, max_m: usize) -> Result<Self> {
        let word = min_coset_rep(lambda).reduced_word();
        let p = Pipeline::from_word(lambda.n(), &word)?;
        p.check_limit(max_m)?;
        let schubert: QPoly = p.schubert_h()?;
        let (tilde_xy, tilde_x) = if tilde {
            let xy: QPoly = p.tilde_xy()?;
            let x = loop_schubert::affschubert::specialize_y0(&xy, lambda.n())?;
            (Some(xy.to_json()), Some(x.to_json()))
        } else {
            (None, None)
        };
        Ok(Self {
            n: lambda.n(),
            lambda: lambda.coeffs().to_vec(),
            lambda_hat: lambda_hat(lambda).to_alpha().expect("lambda_hat lies in the coroot lattice"),
            m_word: word.letters.clone(),
            sigma_power: word.sigma_power,
            length: p.length(),
            schubert_h: schubert.to_json(),
            tilde_xy,
            tilde_x,
        })
    }

    pub fn schubert(&self) -> Result<QPoly> {
        QPoly::from_json_in(&VarEnv::h(self.n), &self.schubert_h)
    }

    /// Re-runs the pipeline on `m_word` and compares with the stored polynomial.
    pub fn reproduces(&self) -> Result<bool> {
        let word = loop_schubert::affine::AffineWord { sigma_power: self.sigma_power, letters: self.m_word.clone() };
        let again: QPoly = Pipeline::from_word(self.n, &word)?.schubert_h()?;
        Ok(again == self.schubert()?)
    }
}

/// All coweights with `l(m^lambda) <= max_len`, sorted by `(length, lambda)`.
pub fn table(n: usize, max_len: usize, tilde: bool, max_m: usize) -> Result<Vec<TableRecord>> {
    let lambdas: Vec<Coweight> = extended_grassmannian(n, max_len).iter().map(|v| v.translation_part()).collect();
    let mut rows = lambdas.par_iter().map(|l| TableRecord::compute(l, tilde, max_m)).collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| (a.length, &a.lambda).cmp(&(b.length, &b.lambda)));
    Ok(rows)
}
