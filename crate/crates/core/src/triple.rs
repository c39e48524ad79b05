//! The para-cocyclic object of a triple `(H, C, M)`: `Cⁿ = M⊗C^{⊗(n+1)}`,
//! and the cocyclic object induced on the balanced tensor products
//! `M⊗_H C^{⊗(n+1)}`.

use serde::Serialize;

use crate::cocyclic::{hypothesis, verify_cocyclic_identities, CocyclicModule, HypothesisCheck};
use crate::error::{Error, Result};
use crate::exec;
use crate::graded::{braiding, GradedMap, GradedQuotient, GradedSpace};
use crate::hopf::{braid_past, braided_interleave, BraidedHopfAlgebra, ModularPair};
use crate::report::{all_pass, CheckResult};
use crate::sparse::SparseVec;

/// An H-module coalgebra.
#[derive(Clone, Debug)]
pub struct ModuleCoalgebra {
    pub space: GradedSpace,
    pub comul: GradedMap,
    pub counit: GradedMap,
    /// `φ_C: H⊗C → C`.
    pub action: GradedMap,
}

/// Coefficients: a left module and left comodule, plus the right action used
/// for balancing.
#[derive(Clone, Debug)]
pub struct CoefficientModule {
    pub space: GradedSpace,
    pub action: GradedMap,
    /// `ρ_M: M → H⊗M`.
    pub coaction: GradedMap,
    /// `M⊗H → M`.
    pub right_action: GradedMap,
}

impl CoefficientModule {
    /// Right action `m ◁ h = S(h) ▷ m`, i.e. `▷ ∘ (S⊗1) ∘ ψ_{M,H}`.
    pub fn default_right_action(h: &BraidedHopfAlgebra, space: &GradedSpace, action: &GradedMap) -> Result<GradedMap> {
        let s1 = h.antipode().tensor(&GradedMap::identity(space))?;
        GradedMap::chain(&[action, &s1, &braiding(space, h.space())?])
    }
}

#[derive(Clone, Debug)]
pub struct TripleData {
    pub hopf: BraidedHopfAlgebra,
    pub coalgebra: ModuleCoalgebra,
    pub module: CoefficientModule,
}

impl TripleData {
    /// Checks every map has the shape its role requires.
    pub fn new(hopf: BraidedHopfAlgebra, coalgebra: ModuleCoalgebra, module: CoefficientModule) -> Result<Self> {
        let h = hopf.space();
        let i = hopf.unit_object();
        let c = &coalgebra.space;
        let m = &module.space;
        let expect = |what: &str, f: &GradedMap, s: GradedSpace, t: GradedSpace| {
            if f.source() != &s || f.target() != &t {
                Err(Error::ShapeMismatch(format!("{what} has the wrong source or target")))
            } else {
                Ok(())
            }
        };
        expect("Δ_C", &coalgebra.comul, c.clone(), c.tensor(c)?)?;
        expect("ε_C", &coalgebra.counit, c.clone(), i.clone())?;
        expect("φ_C", &coalgebra.action, h.tensor(c)?, c.clone())?;
        expect("M action", &module.action, h.tensor(m)?, m.clone())?;
        expect("ρ_M", &module.coaction, m.clone(), h.tensor(m)?)?;
        expect("M right action", &module.right_action, m.tensor(h)?, m.clone())?;
        Ok(TripleData { hopf, coalgebra, module })
    }

    /// `M = I` (acting through δ, coacting through σ) and `C = H` acting on
    /// itself by multiplication.
    pub fn hopf_reduction(h: &BraidedHopfAlgebra, pair: &ModularPair) -> Result<Self> {
        let i = h.unit_object();
        let coalgebra = ModuleCoalgebra {
            space: h.space().clone(),
            comul: h.comul().clone(),
            counit: h.counit().clone(),
            action: h.mul().clone(),
        };
        let right_action = CoefficientModule::default_right_action(h, &i, &pair.delta)?;
        let module = CoefficientModule {
            space: i,
            action: pair.delta.clone(),
            coaction: pair.sigma.clone(),
            right_action,
        };
        Self::new(h.clone(), coalgebra, module)
    }

    /// Coalgebra, module, comodule and module-coalgebra axioms.
    pub fn verify_structure(&self) -> Vec<CheckResult> {
        let h = &self.hopf;
        let c = &self.coalgebra;
        let m = &self.module;
        let idc = GradedMap::identity(&c.space);
        let idm = GradedMap::identity(&m.space);
        let id = h.id();
        vec![
            CheckResult::compare(
                "Δ_C coassociative",
                None,
                c.comul.tensor(&idc).and_then(|x| x.compose(&c.comul)),
                idc.tensor(&c.comul).and_then(|x| x.compose(&c.comul)),
            ),
            CheckResult::compare(
                "ε_C left counit",
                None,
                c.counit.tensor(&idc).and_then(|x| x.compose(&c.comul)),
                Ok(idc.clone()),
            ),
            CheckResult::compare(
                "ε_C right counit",
                None,
                idc.tensor(&c.counit).and_then(|x| x.compose(&c.comul)),
                Ok(idc.clone()),
            ),
            CheckResult::compare(
                "φ_C associative",
                None,
                h.mul().tensor(&idc).and_then(|x| c.action.compose(&x)),
                id.tensor(&c.action).and_then(|x| c.action.compose(&x)),
            ),
            CheckResult::compare(
                "φ_C unital",
                None,
                h.unit().tensor(&idc).and_then(|x| c.action.compose(&x)),
                Ok(idc.clone()),
            ),
            CheckResult::compare(
                "Δ_C is H-linear: Δ_C φ_C = (φ_C⊗φ_C)(1⊗ψ_{H,C}⊗1)(Δ⊗Δ_C)",
                None,
                c.comul.compose(&c.action),
                (|| {
                    let mid = GradedMap::tensor_all(&[&id, &braiding(h.space(), &c.space)?, &idc])?;
                    GradedMap::chain(&[&c.action.tensor(&c.action)?, &mid, &h.comul().tensor(&c.comul)?])
                })(),
            ),
            CheckResult::compare(
                "ε_C is H-linear: ε_C φ_C = ε⊗ε_C",
                None,
                c.counit.compose(&c.action),
                h.counit().tensor(&c.counit),
            ),
            CheckResult::compare(
                "M action associative",
                None,
                h.mul().tensor(&idm).and_then(|x| m.action.compose(&x)),
                id.tensor(&m.action).and_then(|x| m.action.compose(&x)),
            ),
            CheckResult::compare(
                "M action unital",
                None,
                h.unit().tensor(&idm).and_then(|x| m.action.compose(&x)),
                Ok(idm.clone()),
            ),
            CheckResult::compare(
                "M right action associative",
                None,
                m.right_action.tensor(&id).and_then(|x| m.right_action.compose(&x)),
                idm.tensor(h.mul()).and_then(|x| m.right_action.compose(&x)),
            ),
            CheckResult::compare(
                "M right action unital",
                None,
                idm.tensor(h.unit()).and_then(|x| m.right_action.compose(&x)),
                Ok(idm.clone()),
            ),
            CheckResult::compare(
                "ρ_M coassociative",
                None,
                h.comul().tensor(&idm).and_then(|x| x.compose(&m.coaction)),
                id.tensor(&m.coaction).and_then(|x| x.compose(&m.coaction)),
            ),
            CheckResult::compare(
                "ρ_M counital",
                None,
                h.counit().tensor(&idm).and_then(|x| x.compose(&m.coaction)),
                Ok(idm),
            ),
        ]
    }

    /// `ψψ = id` for the pairs (H,M), (H,H), (H,C), (C,M), and (M,C) for the
    /// other composite order.
    pub fn hypotheses(&self) -> Result<Vec<HypothesisCheck>> {
        let (h, c, m) = (self.hopf.space(), &self.coalgebra.space, &self.module.space);
        Ok(vec![
            hypothesis("H,M", h, m)?,
            hypothesis("H,H", h, h)?,
            hypothesis("H,C", h, c)?,
            hypothesis("C,M", c, m)?,
            hypothesis("M,C", m, c)?,
        ])
    }

    fn c_power(&self, k: usize) -> GradedSpace {
        self.coalgebra.space.tensor_power(k)
    }

    fn id_c(&self, k: usize) -> GradedMap {
        GradedMap::identity(&self.c_power(k))
    }

    /// `Cⁿ = M⊗C^{⊗(n+1)}`.
    pub fn cochain_space(&self, n: usize) -> Result<GradedSpace> {
        self.module.space.tensor(&self.c_power(n + 1))
    }

    /// Diagonal action on `C^{⊗k}`: `φ^{⊗k} ∘ F ∘ (Δ^{k-1}⊗1)`, where `F`
    /// interleaves the H-factors with the C-factors.
    pub fn diagonal_action(&self, k: usize) -> Result<GradedMap> {
        let h = &self.hopf;
        let c = &self.coalgebra;
        let phis: Vec<&GradedMap> = std::iter::repeat_n(&c.action, k).collect();
        GradedMap::chain(&[
            &GradedMap::tensor_all(&phis)?,
            &braided_interleave(h.space(), &c.space, k)?,
            &h.iterated_coproduct(k - 1)?.tensor(&self.id_c(k))?,
        ])
    }

    /// `β = (◁⊗1) − (1_M⊗diag): M⊗H⊗C^{⊗(n+1)} → M⊗C^{⊗(n+1)}`.
    pub fn balancing_map(&self, n: usize) -> Result<GradedMap> {
        let idm = GradedMap::identity(&self.module.space);
        let right = self.module.right_action.tensor(&self.id_c(n + 1))?;
        let diag = idm.tensor(&self.diagonal_action(n + 1)?)?;
        right.sub(&diag)
    }

    /// `(1_M⊗ψ_{C,Cⁿ})(1_M⊗φ_C⊗1)(ψ_{H,M}⊗1)`, the tail shared by `δₙ` and
    /// `τₙ`, on `H⊗M⊗C^{⊗(n+1)}`.
    fn rotate_tail(&self, n: usize) -> Result<GradedMap> {
        let h = &self.hopf;
        let (c, m) = (&self.coalgebra.space, &self.module.space);
        let idm = GradedMap::identity(m);
        let cs: Vec<GradedSpace> = std::iter::repeat_n(c.clone(), n).collect();
        GradedMap::chain(&[
            &idm.tensor(&braid_past(c, &cs)?)?,
            &GradedMap::tensor_all(&[&idm, &self.coalgebra.action, &self.id_c(n)])?,
            &braiding(h.space(), m)?.tensor(&self.id_c(n + 1))?,
        ])
    }
}

/// Builds the operators on the unbalanced spaces `M⊗C^{⊗(n+1)}`, `n ≤ N`.
pub fn build_triple_paracocyclic(t: &TripleData, level: usize, cap: usize) -> Result<CocyclicModule> {
    let ambient_dim = |n: usize| t.module.space.dim() * t.coalgebra.space.dim().pow(n as u32 + 1);
    let biggest = (0..=level).map(|n| ambient_dim(n) * ambient_dim(n)).max().unwrap_or(0);
    if biggest > cap {
        return Err(Error::SizeCap { needed: biggest, cap });
    }
    let c = &t.coalgebra;
    let idm = GradedMap::identity(&t.module.space);
    let spaces = (0..=level).map(|n| t.cochain_space(n)).collect::<Result<Vec<_>>>()?;
    let built = exec::map_range(level + 1, |n| -> Result<_> {
        let faces = if n == 0 {
            Vec::new()
        } else {
            let mut fs = Vec::with_capacity(n + 1);
            for i in 0..n {
                fs.push(GradedMap::tensor_all(&[&idm, &t.id_c(i), &c.comul, &t.id_c(n - i - 1)])?);
            }
            let head = GradedMap::tensor_all(&[&t.module.coaction, &c.comul, &t.id_c(n - 1)])?;
            fs.push(t.rotate_tail(n)?.compose(&head)?);
            fs
        };
        let degeneracies = if n < level {
            (0..=n)
                .map(|i| GradedMap::tensor_all(&[&idm, &t.id_c(i + 1), &c.counit, &t.id_c(n - i)]))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        let head = t.module.coaction.tensor(&t.id_c(n + 1))?;
        let tau = t.rotate_tail(n)?.compose(&head)?;
        Ok((faces, degeneracies, tau))
    });
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    let mut cyclic = Vec::new();
    for (n, b) in built.into_iter().enumerate() {
        let (f, d, tau) = b?;
        faces.push(f);
        if n < level {
            degeneracies.push(d);
        }
        cyclic.push(tau);
    }
    CocyclicModule::from_parts(spaces, faces, degeneracies, cyclic)
}

/// `M⊗_H C^{⊗(n+1)}` as the cokernel of the balancing map.
#[derive(Clone, Debug)]
pub struct BalancedQuotient {
    pub quotient: GradedQuotient,
    relations: Vec<SparseVec>,
}

impl BalancedQuotient {
    pub fn ambient(&self) -> &GradedSpace {
        self.quotient.ambient()
    }

    pub fn space(&self) -> &GradedSpace {
        self.quotient.space()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Rank of the balancing map.
    pub fn relation_rank(&self) -> usize {
        self.quotient.relation_rank()
    }

    /// A spanning set of the relation subspace (the balancing map's columns).
    pub fn relations(&self) -> &[SparseVec] {
        &self.relations
    }
}

pub fn balanced_quotient(t: &TripleData, n: usize) -> Result<BalancedQuotient> {
    let beta = t.balancing_map(n)?;
    let relations: Vec<SparseVec> = beta.matrix().columns().iter().filter(|c| !c.is_empty()).cloned().collect();
    Ok(BalancedQuotient {
        quotient: GradedQuotient::by_relations(beta.target(), &relations),
        relations,
    })
}

/// An operator pushed down to quotients, or the relation it fails to respect.
#[derive(Clone, Debug)]
pub struct Induced {
    pub map: Option<GradedMap>,
    /// A relation vector whose image is not a relation.
    pub witness: Option<SparseVec>,
}

impl Induced {
    pub fn well_defined(&self) -> bool {
        self.map.is_some()
    }
}

/// Induces `op` on quotients: well defined iff `op(K_source) ⊆ K_target`.
pub fn induce_on_quotient(op: &GradedMap, source: &BalancedQuotient, target: &BalancedQuotient) -> Result<Induced> {
    if op.source() != source.ambient() || op.target() != target.ambient() {
        return Err(Error::ShapeMismatch("operator does not act between the quotients' ambient spaces".into()));
    }
    if let Some(bad) = source.relations.iter().find(|r| !target.quotient.is_relation(&op.apply(r))) {
        return Ok(Induced {
            map: None,
            witness: Some(bad.clone()),
        });
    }
    let columns = (0..source.dim())
        .map(|k| target.quotient.project(op.column(source.quotient.lift(k))))
        .collect();
    let m = crate::sparse::SparseMatrix::from_columns(target.dim(), columns);
    Ok(Induced {
        map: Some(GradedMap::new(source.space().clone(), target.space().clone(), m)?),
        witness: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleReport {
    pub level: usize,
    pub ambient_dims: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    pub hypotheses: Vec<HypothesisCheck>,
    pub structure: Vec<CheckResult>,
    /// One entry per operator: is its induction well defined.
    pub inductions: Vec<CheckResult>,
    /// The identity suite on the quotients (empty if an induction failed).
    pub identities: Vec<CheckResult>,
}

impl TripleReport {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.structure) && all_pass(&self.inductions) && all_pass(&self.identities)
    }
}

fn induction_check(name: String, level: usize, ind: &Induced) -> CheckResult {
    let mut r = CheckResult::flag(name, Some(level), ind.well_defined());
    if let Some(w) = &ind.witness {
        r.error = Some(format!(
            "relation {:?} is not mapped into the relations",
            w.iter().map(|(i, x)| (*i, x.to_string())).collect::<Vec<_>>()
        ));
    }
    r
}

/// Builds the ambient family, balances it, induces every operator and runs the
/// identity suite on the induced family.
pub fn build_triple_cocyclic(t: &TripleData, level: usize, cap: usize) -> Result<(Option<CocyclicModule>, TripleReport)> {
    let ambient = build_triple_paracocyclic(t, level, cap)?;
    let quotients = exec::map_range(level + 1, |n| balanced_quotient(t, n))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut inductions = Vec::new();
    let mut faces = vec![Vec::new()];
    let mut degeneracies = Vec::new();
    let mut cyclic = Vec::new();
    let mut ok = true;
    for n in 0..=level {
        if n > 0 {
            let mut fs = Vec::new();
            for i in 0..=n {
                let ind = induce_on_quotient(ambient.face(n, i), &quotients[n - 1], &quotients[n])?;
                inductions.push(induction_check(format!("δ{i} descends"), n, &ind));
                ok &= ind.well_defined();
                fs.extend(ind.map);
            }
            faces.push(fs);
        }
        if n < level {
            let mut ds = Vec::new();
            for i in 0..=n {
                let ind = induce_on_quotient(ambient.degeneracy(n, i), &quotients[n + 1], &quotients[n])?;
                inductions.push(induction_check(format!("σ{i} descends"), n, &ind));
                ok &= ind.well_defined();
                ds.extend(ind.map);
            }
            degeneracies.push(ds);
        }
        let ind = induce_on_quotient(ambient.cyclic(n), &quotients[n], &quotients[n])?;
        inductions.push(induction_check(format!("τ{n} descends"), n, &ind));
        ok &= ind.well_defined();
        cyclic.extend(ind.map);
    }
    let (module, identities) = if ok {
        let spaces = quotients.iter().map(|q| q.space().clone()).collect();
        let cm = CocyclicModule::from_parts(spaces, faces, degeneracies, cyclic)?;
        let ids = verify_cocyclic_identities(&cm);
        (Some(cm), ids)
    } else {
        (None, Vec::new())
    };
    let report = TripleReport {
        level,
        ambient_dims: ambient.dims(),
        quotient_dims: quotients.iter().map(BalancedQuotient::dim).collect(),
        hypotheses: t.hypotheses()?,
        structure: t.verify_structure(),
        inductions,
        identities,
    };
    Ok((module, report))
}
