//! Cocyclic objects as explicit operator families, the Connes–Moscovici
//! object of a braided Hopf algebra with a modular pair, and the full
//! cyclic-category identity suite.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::graded::{braid_symmetry_check, GradedMap, GradedSpace, SymmetryCheck};
use crate::hopf::{BraidedHopfAlgebra, ModularPair};
use crate::report::{all_pass, first_failure, CheckResult};

/// Default bound on `dim(Cⁿ)²`, the dense size of the largest operator.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Spaces `C⁰…C^N` with faces, degeneracies and cyclic operators.
#[derive(Clone, Debug)]
pub struct CocyclicModule {
    spaces: Vec<GradedSpace>,
    // faces[n][i]: C^{n-1} → Cⁿ, 0 ≤ i ≤ n (faces[0] is empty)
    faces: Vec<Vec<GradedMap>>,
    // degeneracies[n][i]: C^{n+1} → Cⁿ, 0 ≤ i ≤ n, n < N
    degeneracies: Vec<Vec<GradedMap>>,
    cyclic: Vec<GradedMap>,
}

impl CocyclicModule {
    pub fn from_parts(
        spaces: Vec<GradedSpace>,
        faces: Vec<Vec<GradedMap>>,
        degeneracies: Vec<Vec<GradedMap>>,
        cyclic: Vec<GradedMap>,
    ) -> Result<Self> {
        let top = spaces.len().checked_sub(1).ok_or_else(|| Error::ShapeMismatch("no spaces".into()))?;
        let bad = |what: String| Err(Error::ShapeMismatch(what));
        if faces.len() != top + 1 || degeneracies.len() != top || cyclic.len() != top + 1 {
            return bad("operator family lengths do not match the level".into());
        }
        for n in 0..=top {
            let expected_faces = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != expected_faces {
                return bad(format!("level {n} has {} faces", faces[n].len()));
            }
            for (i, f) in faces[n].iter().enumerate() {
                if f.source() != &spaces[n - 1] || f.target() != &spaces[n] {
                    return bad(format!("face δ{i} at level {n}"));
                }
            }
            if n < top {
                if degeneracies[n].len() != n + 1 {
                    return bad(format!("level {n} has {} degeneracies", degeneracies[n].len()));
                }
                for (i, s) in degeneracies[n].iter().enumerate() {
                    if s.source() != &spaces[n + 1] || s.target() != &spaces[n] {
                        return bad(format!("degeneracy σ{i} at level {n}"));
                    }
                }
            }
            if cyclic[n].source() != &spaces[n] || cyclic[n].target() != &spaces[n] {
                return bad(format!("cyclic operator τ{n}"));
            }
        }
        Ok(CocyclicModule {
            spaces,
            faces,
            degeneracies,
            cyclic,
        })
    }

    pub fn level(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, n: usize) -> &GradedSpace {
        &self.spaces[n]
    }

    /// `δᵢ: C^{n-1} → Cⁿ`.
    pub fn face(&self, n: usize, i: usize) -> &GradedMap {
        &self.faces[n][i]
    }

    /// `σᵢ: C^{n+1} → Cⁿ`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &GradedMap {
        &self.degeneracies[n][i]
    }

    /// `τₙ: Cⁿ → Cⁿ`.
    pub fn cyclic(&self, n: usize) -> &GradedMap {
        &self.cyclic[n]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(GradedSpace::dim).collect()
    }

    /// Drops everything above level `n`.
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.level());
        CocyclicModule {
            spaces: self.spaces[..=n].to_vec(),
            faces: self.faces[..=n].to_vec(),
            degeneracies: self.degeneracies[..n].to_vec(),
            cyclic: self.cyclic[..=n].to_vec(),
        }
    }
}

/// Checks `max_n dim(H)^{2n} ≤ cap` before anything is built.
pub fn check_cap(dim: usize, level: usize, cap: usize) -> Result<()> {
    let mut size: u128 = 1;
    for _ in 0..level {
        size = size.saturating_mul((dim * dim) as u128);
    }
    if size > cap as u128 {
        return Err(Error::SizeCap {
            needed: size.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    Ok(())
}

/// The cocyclic object of `(H, δ, σ)`: `C⁰ = I`, `Cⁿ = H^{⊗n}`,
/// `δ₀ = η⊗1`, `δᵢ = Δ` at slot i, `δₙ = 1⊗σ`, `σᵢ = ε` at slot i+1,
/// `τₙ = mₙ(Δ^{n-1}S̃ ⊗ 1^{⊗(n-1)} ⊗ σ)`.
pub fn build_cm_cocyclic(h: &BraidedHopfAlgebra, pair: &ModularPair, level: usize, cap: usize) -> Result<CocyclicModule> {
    check_cap(h.dim(), level, cap)?;
    let spaces: Vec<GradedSpace> = (0..=level).map(|n| h.power(n)).collect();
    let st = pair.twisted_antipode(h)?;
    let built = exec::map_range(level + 1, |n| -> Result<_> {
        let faces = if n == 0 {
            Vec::new()
        } else {
            let mut fs = Vec::with_capacity(n + 1);
            fs.push(h.unit().tensor(&h.id_power(n - 1))?);
            for i in 1..n {
                fs.push(GradedMap::tensor_all(&[&h.id_power(i - 1), h.comul(), &h.id_power(n - 1 - i)])?);
            }
            fs.push(h.id_power(n - 1).tensor(&pair.sigma)?);
            fs
        };
        let degeneracies = if n < level {
            (0..=n)
                .map(|i| GradedMap::tensor_all(&[&h.id_power(i), h.counit(), &h.id_power(n - i)]))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        let tau = if n == 0 {
            GradedMap::identity(&spaces[0])
        } else {
            let first = h.iterated_coproduct(n - 1)?.compose(&st)?;
            let spread = GradedMap::tensor_all(&[&first, &h.id_power(n - 1), &pair.sigma])?;
            h.power_multiplication(n)?.compose(&spread)?
        };
        Ok((faces, degeneracies, tau))
    });
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    let mut cyclic = Vec::new();
    for (n, b) in built.into_iter().enumerate() {
        let (f, d, t) = b?;
        faces.push(f);
        if n < level {
            degeneracies.push(d);
        }
        cyclic.push(t);
    }
    CocyclicModule::from_parts(spaces, faces, degeneracies, cyclic)
}

#[derive(Clone, Copy, Debug)]
enum Relation {
    FaceFace { n: usize, i: usize, j: usize },
    DegDeg { n: usize, i: usize, j: usize },
    DegFace { n: usize, i: usize, j: usize },
    CycFace { n: usize, i: usize },
    CycDeg { n: usize, i: usize },
    CycPower { n: usize },
}

fn relations(level: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for n in 0..=level {
        // δⱼδᵢ on C^{n-2} → Cⁿ
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    out.push(Relation::FaceFace { n, i, j });
                }
            }
        }
        // σⱼσᵢ on C^{n+1} → C^{n-1}
        if n >= 1 && n < level {
            for j in 0..n {
                for i in 0..=j {
                    out.push(Relation::DegDeg { n, i, j });
                }
            }
        }
        // σⱼδᵢ on C^{n-1} → C^{n-1}
        if n >= 1 {
            for j in 0..n {
                for i in 0..=n {
                    out.push(Relation::DegFace { n, i, j });
                }
            }
        }
        if n >= 1 {
            for i in 0..=n {
                out.push(Relation::CycFace { n, i });
            }
        }
        if n < level {
            for i in 0..=n {
                out.push(Relation::CycDeg { n, i });
            }
        }
        out.push(Relation::CycPower { n });
    }
    out
}

fn check(cm: &CocyclicModule, r: Relation) -> CheckResult {
    let d = |n: usize, i: usize| cm.face(n, i);
    let s = |n: usize, i: usize| cm.degeneracy(n, i);
    let t = |n: usize| cm.cyclic(n);
    match r {
        Relation::FaceFace { n, i, j } => CheckResult::compare(
            format!("δ{j}δ{i} = δ{i}δ{}", j - 1),
            Some(n),
            d(n, j).compose(d(n - 1, i)),
            d(n, i).compose(d(n - 1, j - 1)),
        ),
        Relation::DegDeg { n, i, j } => CheckResult::compare(
            format!("σ{j}σ{i} = σ{i}σ{}", j + 1),
            Some(n),
            s(n - 1, j).compose(s(n, i)),
            s(n - 1, i).compose(s(n, j + 1)),
        ),
        Relation::DegFace { n, i, j } => {
            let lhs = s(n - 1, j).compose(d(n, i));
            if i < j {
                CheckResult::compare(
                    format!("σ{j}δ{i} = δ{i}σ{}", j - 1),
                    Some(n),
                    lhs,
                    d(n - 1, i).compose(s(n - 2, j - 1)),
                )
            } else if i == j || i == j + 1 {
                CheckResult::compare(
                    format!("σ{j}δ{i} = id"),
                    Some(n),
                    lhs,
                    Ok(GradedMap::identity(cm.space(n - 1))),
                )
            } else {
                CheckResult::compare(
                    format!("σ{j}δ{i} = δ{}σ{j}", i - 1),
                    Some(n),
                    lhs,
                    d(n - 1, i - 1).compose(s(n - 2, j)),
                )
            }
        }
        Relation::CycFace { n, i } => {
            if i == 0 {
                CheckResult::compare(format!("τ{n}δ0 = δ{n}"), Some(n), t(n).compose(d(n, 0)), Ok(d(n, n).clone()))
            } else {
                CheckResult::compare(
                    format!("τ{n}δ{i} = δ{}τ{}", i - 1, n - 1),
                    Some(n),
                    t(n).compose(d(n, i)),
                    d(n, i - 1).compose(t(n - 1)),
                )
            }
        }
        Relation::CycDeg { n, i } => {
            if i == 0 {
                CheckResult::compare(
                    format!("τ{n}σ0 = σ{n}τ{}²", n + 1),
                    Some(n),
                    t(n).compose(s(n, 0)),
                    t(n + 1).power(2).and_then(|t2| s(n, n).compose(&t2)),
                )
            } else {
                CheckResult::compare(
                    format!("τ{n}σ{i} = σ{}τ{}", i - 1, n + 1),
                    Some(n),
                    t(n).compose(s(n, i)),
                    s(n, i - 1).compose(t(n + 1)),
                )
            }
        }
        Relation::CycPower { n } => CheckResult::compare(
            format!("τ{n}^{} = id", n + 1),
            Some(n),
            t(n).power(n + 1),
            Ok(GradedMap::identity(cm.space(n))),
        ),
    }
}

/// Every cosimplicial and cyclic relation up to the module's level, in a fixed
/// order (by level, then faces, degeneracies, mixed, cyclic).
pub fn verify_cocyclic_identities(cm: &CocyclicModule) -> Vec<CheckResult> {
    let rels = relations(cm.level());
    exec::map_slice(&rels, |r| check(cm, *r))
}

/// `rank(τₙ^{n+1} − id)`.
pub fn para_defect(cm: &CocyclicModule, n: usize) -> Result<usize> {
    if n > cm.level() {
        return Err(Error::LevelBound {
            requested: n,
            available: cm.level(),
        });
    }
    let t = cm.cyclic(n).power(n + 1)?;
    Ok(t.sub(&GradedMap::identity(cm.space(n)))?.rank())
}

/// Everything a `cocyclic build --verify` run reports.
#[derive(Clone, Debug, Serialize)]
pub struct CocyclicReport {
    pub level: usize,
    pub dims: Vec<usize>,
    pub hopf_axioms: Vec<CheckResult>,
    pub pair: Vec<CheckResult>,
    pub involution_defect: usize,
    pub hypotheses: Vec<HypothesisCheck>,
    pub identities: Vec<CheckResult>,
    pub para_defects: Vec<usize>,
}

impl CocyclicReport {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.hopf_axioms) && all_pass(&self.pair) && all_pass(&self.identities)
    }
}

/// One braid-symmetry hypothesis, e.g. `ψ_{H,H}ψ_{H,H} = id`.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisCheck {
    pub pair: String,
    #[serde(flatten)]
    pub result: SymmetryCheck,
}

pub fn hypothesis(label: &str, a: &GradedSpace, b: &GradedSpace) -> Result<HypothesisCheck> {
    Ok(HypothesisCheck {
        pair: label.to_string(),
        result: braid_symmetry_check(a, b)?,
    })
}

/// Validates the inputs, builds the module, and runs the identity suite.
pub fn build_and_verify(
    h: &BraidedHopfAlgebra,
    pair: &ModularPair,
    level: usize,
    cap: usize,
) -> Result<(CocyclicModule, CocyclicReport)> {
    let hopf_axioms = h.verify_axioms();
    if let Some(f) = first_failure(&hopf_axioms) {
        return Err(Error::InvalidStructure(format!("Hopf axiom fails: {}", f.identity)));
    }
    let pair_checks = pair.verify(h);
    if let Some(f) = first_failure(&pair_checks) {
        return Err(Error::InvalidStructure(format!("modular pair: {}", f.identity)));
    }
    let cm = build_cm_cocyclic(h, pair, level, cap)?;
    let identities = verify_cocyclic_identities(&cm);
    let para_defects = exec::map_range(level + 1, |n| para_defect(&cm, n))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let report = CocyclicReport {
        level,
        dims: cm.dims(),
        hopf_axioms,
        pair: pair_checks,
        involution_defect: pair.involution_defect(h)?,
        hypotheses: vec![hypothesis("H,H", h.space(), h.space())?],
        identities,
        para_defects,
    };
    Ok((cm, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Category;
    use crate::scalar::Cyclo;
    use crate::transmute::czn_group_algebra;

    fn czn_cm(n: usize, level: usize) -> CocyclicModule {
        let h = czn_group_algebra(n).hopf;
        build_cm_cocyclic(&h, &ModularPair::trivial(&h), level, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn dims_and_tau0() {
        let cm = czn_cm(3, 3);
        assert_eq!(cm.dims(), vec![1, 3, 9, 27]);
        assert_eq!(cm.cyclic(0), &GradedMap::identity(cm.space(0)));
    }

    #[test]
    fn tau1_is_antipode_and_delta0_is_unit() {
        let h = czn_group_algebra(4).hopf;
        let cm = czn_cm(4, 1);
        assert_eq!(cm.cyclic(1), h.antipode());
        assert_eq!(cm.face(1, 0), h.unit());
    }

    #[test]
    fn czn2_is_cocyclic_to_level_3() {
        let cm = czn_cm(2, 3);
        let report = verify_cocyclic_identities(&cm);
        assert!(all_pass(&report), "{:?}", first_failure(&report));
        for n in 0..=3 {
            assert_eq!(para_defect(&cm, n).unwrap(), 0);
        }
    }

    #[test]
    fn relation_count_is_fixed() {
        // levels 0..=2: counted by hand from the index ranges
        assert_eq!(relations(0).len(), 1);
        assert_eq!(relations(2).len(), 2 + (1 + 2 + 2 + 2 + 1) + (3 + 6 + 3 + 1));
    }

    #[test]
    fn cap_is_enforced() {
        let h = czn_group_algebra(3).hopf;
        let pair = ModularPair::trivial(&h);
        assert!(matches!(
            build_cm_cocyclic(&h, &pair, 4, 1000),
            Err(Error::SizeCap { needed: 6561, cap: 1000 })
        ));
        assert!(check_cap(3, 4, 6561).is_ok());
    }

    #[test]
    fn counit_with_generator_is_still_cyclic() {
        // (ε, g) on C[Z_3] is in involution: S̃ = S and S² = id = Ad_g
        let h = czn_group_algebra(3).hopf;
        let f = h.space().field().clone();
        let g = GradedMap::from_element(h.space(), vec![(1, Cyclo::one(&f))]).unwrap();
        let pair = ModularPair::new(&h, h.counit().clone(), g).unwrap();
        assert!(all_pass(&pair.verify(&h)));
        let cm = build_cm_cocyclic(&h, &pair, 3, DEFAULT_CAP).unwrap();
        assert!(all_pass(&verify_cocyclic_identities(&cm)));
    }

    #[test]
    fn character_not_trivial_on_sigma_breaks_cyclicity() {
        // δ(g^a) = ζ^a with σ = g: δ(σ) = ζ, so τ₁² = ζ·id
        let h = czn_group_algebra(3).hopf;
        let f = Category::anyonic(3).field().clone();
        let delta = GradedMap::new(
            h.space().clone(),
            h.unit_object(),
            crate::sparse::SparseMatrix::from_columns(1, (0..3).map(|a| vec![(0, Cyclo::zeta_power(&f, a))]).collect()),
        )
        .unwrap();
        let g = GradedMap::from_element(h.space(), vec![(1, Cyclo::one(&f))]).unwrap();
        let pair = ModularPair::new(&h, delta, g).unwrap();
        assert!(all_pass(&pair.verify(&h)));
        let cm = build_cm_cocyclic(&h, &pair, 3, DEFAULT_CAP).unwrap();
        let tau2 = cm.cyclic(1).power(2).unwrap();
        assert_eq!(tau2, GradedMap::identity(cm.space(1)).scale(&Cyclo::zeta_power(&f, 1)));
        let defects: Vec<usize> = (0..=3).map(|n| para_defect(&cm, n).unwrap()).collect();
        assert_eq!(defects, vec![0, 3, 9, 27]);
        let report = verify_cocyclic_identities(&cm);
        let failed = first_failure(&report).unwrap();
        assert_eq!(failed.identity, "τ0σ0 = σ0τ1²");
        assert!(report.iter().any(|c| c.identity == "τ1^2 = id" && !c.pass));
    }
}
