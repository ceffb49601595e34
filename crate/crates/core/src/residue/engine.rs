use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::kostant::residue_term;
use super::quasi::{CharacterSum, QuasiPolynomial};
use crate::combinatorics::{exponent, BasicSubset, ChamberFan, TorusElement};
use crate::error::Result;
use crate::exact::{IntMat, Rat};

/// Evaluates the residue formula chamber by chamber, caching the
/// `Σ_g ires_σ F_{g,h}` contributions of every basic subset.
pub struct ResidueEngine {
    a: IntMat,
    gamma: Vec<TorusElement>,
    field: u32,
    cache: Mutex<BTreeMap<Vec<usize>, Arc<CharacterSum>>>,
}

impl ResidueEngine {
    pub fn new(a: &IntMat, gamma: &BTreeSet<TorusElement>) -> Self {
        ResidueEngine {
            a: a.clone(),
            gamma: gamma.iter().cloned().collect(),
            field: exponent(gamma) as u32,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    /// `Σ_{g∈Γ} e^{2πi⟨g,h⟩} ires_σ F_{g,h}` as a character sum in `h`.
    pub fn sigma_sum(&self, sigma: &BasicSubset) -> Result<Arc<CharacterSum>> {
        if let Some(s) = self.cache.lock().unwrap().get(&sigma.indices) {
            return Ok(s.clone());
        }
        let parts: Vec<(TorusElement, _)> = self
            .gamma
            .par_iter()
            .map(|g| residue_term(&self.a, sigma, g).map(|p| (g.clone(), p)))
            .collect::<Result<_>>()?;
        let mut sum = CharacterSum::zero(self.a.rows());
        for (g, p) in parts {
            sum.add_term(g, p.map_coeffs(|c| c.lift(self.field)));
        }
        let sum = Arc::new(sum);
        self.cache.lock().unwrap().insert(sigma.indices.clone(), sum.clone());
        Ok(sum)
    }

    /// `Σ_{σ∈B_nb(C)} (1/vol σ) Σ_g e^{2πi⟨g,h⟩} ires_σ F_{g,h}`.
    pub fn chamber_sum(&self, nbc: &[&BasicSubset]) -> Result<CharacterSum> {
        let parts: Vec<Arc<CharacterSum>> = nbc.par_iter().map(|s| self.sigma_sum(s)).collect::<Result<_>>()?;
        let mut total = CharacterSum::zero(self.a.rows());
        for (s, part) in nbc.iter().zip(parts) {
            total.add_scaled(&part, &Rat::new(1.into(), s.volume.into()));
        }
        Ok(total)
    }
}

/// The quasi-polynomial of `Φ_A` on the maximal cone `fan.cones()[cone]`.
pub fn chamber_quasipolynomial(
    a: &IntMat,
    cone: usize,
    fan: &ChamberFan,
    gamma: &BTreeSet<TorusElement>,
) -> Result<QuasiPolynomial> {
    let engine = ResidueEngine::new(a, gamma);
    engine.chamber_sum(&fan.b_nb(cone))?.to_quasipolynomial()
}
