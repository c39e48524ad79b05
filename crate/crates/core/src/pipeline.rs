//! End-to-end run for C[Z_n]: quasitriangular checks, transmutation, the
//! cocyclic object of the transmuted algebra, and its cohomology.

use serde::Serialize;

use crate::cocyclic::{build_and_verify, CocyclicReport};
use crate::cohomology::{hc_dimensions, CohomologyReport};
use crate::error::Result;
use crate::hopf::ModularPair;
use crate::report::{all_pass, CheckResult};
use crate::transmute::{czn_group_algebra, czn_r_matrix, r_braiding_check, transmutation_triviality, transmute};

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub level: usize,
    pub quasitriangular: Vec<CheckResult>,
    pub transmutation: Vec<CheckResult>,
    pub cocyclic: CocyclicReport,
    pub cohomology: CohomologyReport,
}

impl PipelineReport {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.quasitriangular) && all_pass(&self.transmutation) && self.cocyclic.all_pass() && self.cohomology.all_pass()
    }
}

/// Runs every stage. Cohomology is reported in degrees `0..level` (data to
/// level `k + 1` is needed for degree `k`); level 0 is raised to 1 so that
/// `HC⁰` is still produced.
pub fn run_czn(n: usize, level: usize, cap: usize) -> Result<PipelineReport> {
    let level = level.max(1);
    let h = czn_group_algebra(n);
    let r = czn_r_matrix(n);
    let quasitriangular = h.verify_quasitriangular(&r)?;
    let t = transmute(&h, &r)?;
    let mut transmutation = transmutation_triviality(&h, &t)?;
    transmutation.push(r_braiding_check(&h, &r)?);
    transmutation.extend(t.hopf.verify_axioms());
    let pair = ModularPair::trivial(&t.hopf);
    let (cm, cocyclic) = build_and_verify(&t.hopf, &pair, level, cap)?;
    let cohomology = hc_dimensions(&cm, level - 1)?;
    Ok(PipelineReport {
        n,
        level,
        quasitriangular,
        transmutation,
        cocyclic,
        cohomology,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocyclic::DEFAULT_CAP;

    #[test]
    fn small_pipeline() {
        let r = run_czn(2, 3, DEFAULT_CAP).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.cohomology.hc(), vec![1, 0, 1]);
    }

    #[test]
    fn level_zero_still_reports_hc0() {
        let r = run_czn(3, 0, DEFAULT_CAP).unwrap();
        assert_eq!(r.cohomology.hc(), vec![1]);
    }
}
