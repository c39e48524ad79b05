//! Hochschild and cyclic cohomology dimensions of a cocyclic module, the
//! latter through Connes' λ-invariant subcomplex (characteristic zero).

use serde::Serialize;

use crate::cocyclic::{para_defect, CocyclicModule};
use crate::error::{Error, Result};
use crate::exec;
use crate::graded::{GradedMap, Kernel};
use crate::report::CheckResult;
use crate::scalar::Cyclo;

/// `bₙ = Σᵢ (−1)ⁱ δᵢ: C^{n-1} → Cⁿ`, for `1 ≤ n ≤ N`.
pub fn hochschild_differential(cm: &CocyclicModule, n: usize) -> Result<GradedMap> {
    if n == 0 || n > cm.level() {
        return Err(Error::LevelBound {
            requested: n,
            available: cm.level(),
        });
    }
    let mut b = GradedMap::zero(cm.space(n - 1), cm.space(n));
    for i in 0..=n {
        let f = cm.face(n, i);
        b = if i % 2 == 0 { b.add(f)? } else { b.sub(f)? };
    }
    Ok(b)
}

/// `λₙ = (−1)ⁿ τₙ`.
pub fn lambda(cm: &CocyclicModule, n: usize) -> GradedMap {
    let t = cm.cyclic(n);
    if n.is_multiple_of(2) {
        t.clone()
    } else {
        t.scale(&-Cyclo::one(t.field()))
    }
}

/// `ker(id − λₙ)`; refused when `τₙ^{n+1} ≠ id`.
pub fn cyclic_subcomplex(cm: &CocyclicModule, n: usize) -> Result<Kernel> {
    let defect = para_defect(cm, n)?;
    if defect != 0 {
        return Err(Error::InvalidStructure(format!(
            "level {n} is only para-cocyclic (rank of τ^{} − id is {defect}); cyclic cohomology is undefined",
            n + 1
        )));
    }
    Ok(GradedMap::identity(cm.space(n)).sub(&lambda(cm, n))?.kernel())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_lambda: usize,
    pub hh: usize,
    pub hc: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    /// Highest level of the cocyclic data used; degrees go up to `level − 1`.
    pub level: usize,
    pub degrees: Vec<DegreeRow>,
    /// `b² = 0` and λ-closure, per level.
    pub checks: Vec<CheckResult>,
}

impl CohomologyReport {
    pub fn hc(&self) -> Vec<usize> {
        self.degrees.iter().map(|r| r.hc).collect()
    }

    pub fn hh(&self) -> Vec<usize> {
        self.degrees.iter().map(|r| r.hh).collect()
    }

    pub fn all_pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

/// `HHⁿ` and `HCⁿ` for `0 ≤ n ≤ up_to`; needs cocyclic data to level
/// `up_to + 1`.
pub fn hc_dimensions(cm: &CocyclicModule, up_to: usize) -> Result<CohomologyReport> {
    let top = up_to + 1;
    if top > cm.level() {
        return Err(Error::LevelBound {
            requested: top,
            available: cm.level(),
        });
    }
    let cm = cm.truncate(top);
    // b[n] for n in 1..=top; index 0 unused
    let b = exec::map_range(top + 1, |n| if n == 0 { Ok(None) } else { hochschild_differential(&cm, n).map(Some) })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let lam = exec::map_range(top + 1, |n| cyclic_subcomplex(&cm, n))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let bn = |n: usize| b[n].as_ref().expect("n ≥ 1");

    // rank bₙ and rank bₙ|λ for n in 1..=top
    let ranks = exec::map_range(top + 1, |n| -> Result<(usize, usize)> {
        if n == 0 {
            return Ok((0, 0));
        }
        let restricted = bn(n).compose(&lam[n - 1].inclusion)?;
        Ok((bn(n).rank(), restricted.rank()))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let mut checks = Vec::new();
    for n in 2..=top {
        checks.push(CheckResult::compare(
            format!("b{n}b{} = 0", n - 1),
            Some(n),
            bn(n).compose(bn(n - 1)),
            Ok(GradedMap::zero(cm.space(n - 2), cm.space(n))),
        ));
    }
    for n in 1..=top {
        let off_lambda = GradedMap::identity(cm.space(n)).sub(&lambda(&cm, n))?;
        checks.push(CheckResult::compare(
            format!("b{n} maps the λ-subcomplex into itself"),
            Some(n),
            GradedMap::chain(&[&off_lambda, bn(n), &lam[n - 1].inclusion]),
            Ok(GradedMap::zero(&lam[n - 1].space, cm.space(n))),
        ));
    }

    let degrees = (0..=up_to)
        .map(|n| {
            let (rank_in, rank_in_l) = ranks[n];
            let (rank_out, rank_out_l) = ranks[n + 1];
            let dim = cm.space(n).dim();
            let dl = lam[n].dim();
            DegreeRow {
                degree: n,
                dim_cochains: dim,
                dim_lambda: dl,
                hh: dim - rank_out - rank_in,
                hc: dl - rank_out_l - rank_in_l,
            }
        })
        .collect();
    Ok(CohomologyReport {
        level: top,
        degrees,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocyclic::{build_cm_cocyclic, DEFAULT_CAP};
    use crate::hopf::ModularPair;
    use crate::transmute::czn_group_algebra;

    fn czn_cm(n: usize, level: usize) -> CocyclicModule {
        let h = czn_group_algebra(n).hopf;
        build_cm_cocyclic(&h, &ModularPair::trivial(&h), level, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn b1_vanishes_for_trivial_pair() {
        let cm = czn_cm(3, 1);
        assert!(hochschild_differential(&cm, 1).unwrap().matrix().is_zero());
    }

    #[test]
    fn b2_on_czn2() {
        let cm = czn_cm(2, 2);
        let b2 = hochschild_differential(&cm, 2).unwrap();
        let f = cm.space(1).field().clone();
        let one = Cyclo::one(&f);
        // b₂(g) = 1⊗g − g⊗g + g⊗1; basis g^a⊗g^b ↦ 2a + b
        let expected = crate::sparse::collect_terms(vec![(1, one.clone()), (3, -one.clone()), (2, one)]);
        assert_eq!(b2.column(1), &expected);
    }

    #[test]
    fn lambda_subspaces_small_levels() {
        let cm = czn_cm(2, 1);
        assert_eq!(cyclic_subcomplex(&cm, 0).unwrap().dim(), 1);
        assert_eq!(cyclic_subcomplex(&cm, 1).unwrap().dim(), 0);
        let cm3 = czn_cm(3, 1);
        // τ₁ fixes 1 and swaps g, g²: ker(id + τ₁) = span(g − g²)
        let k = cyclic_subcomplex(&cm3, 1).unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn hc_pattern_small() {
        let r = hc_dimensions(&czn_cm(2, 3), 2).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.hc(), vec![1, 0, 1]);
        assert_eq!(r.hh(), vec![1, 0, 0]);
    }

    #[test]
    fn degree_zero_only() {
        let r = hc_dimensions(&czn_cm(3, 1), 0).unwrap();
        assert_eq!(r.hc(), vec![1]);
        assert!(matches!(hc_dimensions(&czn_cm(3, 1), 1), Err(Error::LevelBound { .. })));
    }
}
