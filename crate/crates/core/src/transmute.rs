//! Ordinary Hopf algebras with a quasitriangular structure, the group
//! algebra of Z_n with its nontrivial R-matrix, and transmutation into a
//! braided Hopf algebra living in the module category.
//!
//! Ordinary data is modelled as a Hopf algebra concentrated in degree 0, so
//! every braiding it sees is the plain flip. Sweedler-style formulas are
//! compiled into explicit composition chains; each chain is spelled out next
//! to the function that builds it.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graded::{braiding, flip, permute_factors, Category, GradedMap, GradedSpace};
use crate::hopf::BraidedHopfAlgebra;
use crate::report::{all_pass, first_failure, CheckResult};
use crate::scalar::Cyclo;
use crate::sparse::{kron_vec, SparseMatrix, SparseVec};

/// An ordinary Hopf algebra (degree-0 concentrated) with a distinguished
/// element whose action defines the Z_n-grading of modules.
#[derive(Clone, Debug)]
pub struct OrdinaryHopfData {
    pub hopf: BraidedHopfAlgebra,
    pub generator: SparseVec,
}

/// The group algebra C[Z_n] on the basis `g^0, …, g^{n-1}`.
pub fn czn_group_algebra(n: usize) -> OrdinaryHopfData {
    let cat = Category::anyonic(n);
    let f = cat.field().clone();
    let mut dims = vec![0; n];
    dims[0] = n;
    let h = GradedSpace::new(&cat, &dims).expect("dims length n");
    let hh = h.tensor(&h).unwrap();
    let i = GradedSpace::unit(&cat);
    let one = || Cyclo::one(&f);
    let mul = SparseMatrix::monomial(n, (0..n * n).map(|c| ((c / n + c % n) % n, one())).collect());
    let unit = SparseMatrix::monomial(n, vec![(0, one())]);
    let comul = SparseMatrix::monomial(n * n, (0..n).map(|a| (a * n + a, one())).collect());
    let counit = SparseMatrix::monomial(1, (0..n).map(|_| (0, one())).collect());
    let antipode = SparseMatrix::monomial(n, (0..n).map(|a| ((n - a) % n, one())).collect());
    let hopf = BraidedHopfAlgebra::new(
        h.clone(),
        GradedMap::new(hh.clone(), h.clone(), mul).unwrap(),
        GradedMap::new(i.clone(), h.clone(), unit).unwrap(),
        GradedMap::new(h.clone(), hh, comul).unwrap(),
        GradedMap::new(h.clone(), i, counit).unwrap(),
        GradedMap::new(h.clone(), h, antipode).unwrap(),
    )
    .expect("C[Z_n] shapes");
    OrdinaryHopfData {
        hopf,
        generator: vec![(1 % n, one())],
    }
}

/// An element `R ∈ H⊗H`, stored as a coefficient vector on the tensor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitriangularElement {
    pub r: SparseVec,
}

/// `R = (1/n) Σ_{a,b} ζ^{-ab} g^a ⊗ g^b`.
pub fn czn_r_matrix(n: usize) -> QuasitriangularElement {
    let f = Category::anyonic(n).field().clone();
    let inv_n = BigRational::new(BigInt::from(1), BigInt::from(n));
    let r = (0..n * n)
        .map(|c| {
            let (a, b) = ((c / n) as i64, (c % n) as i64);
            (c, Cyclo::zeta_power(&f, -a * b).scale(&inv_n))
        })
        .collect();
    QuasitriangularElement { r }
}

impl OrdinaryHopfData {
    pub fn space(&self) -> &GradedSpace {
        self.hopf.space()
    }

    fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// Componentwise product in the ordinary tensor-power algebra `H^{⊗k}`.
    pub fn tensor_product(&self, k: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mul = self.hopf.mul();
        let mut terms = Vec::new();
        for (i, xi) in x {
            for (j, yj) in y {
                let coeff = xi * yj;
                let mut acc: SparseVec = vec![(0, coeff)];
                let (mut i, mut j) = (*i, *j);
                let mut parts = Vec::with_capacity(k);
                for _ in 0..k {
                    parts.push((i % d, j % d));
                    i /= d;
                    j /= d;
                }
                for (a, b) in parts.into_iter().rev() {
                    acc = kron_vec(&acc, mul.column(a * d + b), d);
                }
                terms.extend(acc);
            }
        }
        crate::sparse::collect_terms(terms)
    }

    /// Element `x ∈ H^{⊗k}` as a map `I → H^{⊗k}`, for reporting.
    fn element(&self, k: usize, x: SparseVec) -> Result<GradedMap> {
        GradedMap::from_element(&self.hopf.power(k), x)
    }

    /// Left multiplication by `r` on `H⊗H`.
    fn left_mult(&self, r: &SparseVec) -> SparseMatrix {
        let d2 = self.dim() * self.dim();
        let f = self.space().field();
        let columns = (0..d2)
            .map(|c| self.tensor_product(2, r, &vec![(c, Cyclo::one(f))]))
            .collect();
        SparseMatrix::from_columns(d2, columns)
    }

    /// `R^{-1}` in the algebra `H⊗H`.
    pub fn r_inverse(&self, r: &QuasitriangularElement) -> Result<SparseVec> {
        let f = self.space().field();
        let lr = self.left_mult(&r.r);
        let inv = crate::linalg::inverse(&lr, f)
            .map_err(|_| Error::InvalidStructure("R is not invertible in H⊗H".into()))?;
        let one = self.one_power(2);
        Ok(inv.apply(&one))
    }

    fn one_power(&self, k: usize) -> SparseVec {
        let f = self.space().field();
        let mut acc: SparseVec = vec![(0, Cyclo::one(f))];
        for _ in 0..k {
            acc = kron_vec(&acc, self.hopf.unit().column(0), self.dim());
        }
        acc
    }

    /// `(Δ⊗1)R = R_13 R_23`, `(1⊗Δ)R = R_13 R_12`, `RΔ(h) = Δ^op(h)R`, and
    /// invertibility of R.
    pub fn verify_quasitriangular(&self, r: &QuasitriangularElement) -> Result<Vec<CheckResult>> {
        let h = &self.hopf;
        let hs = self.space();
        if r.r.iter().any(|(i, _)| *i >= self.dim() * self.dim()) {
            return Err(Error::ShapeMismatch("R has an index outside H⊗H".into()));
        }
        let id = h.id();
        let eta = h.unit();
        let r13 = GradedMap::tensor_all(&[&id, eta, &id])?.apply(&r.r);
        let r23 = eta.tensor(&h.id_power(2))?.apply(&r.r);
        let r12 = h.id_power(2).tensor(eta)?.apply(&r.r);
        let d1 = h.comul().tensor(&id)?.apply(&r.r);
        let d2 = id.tensor(h.comul())?.apply(&r.r);
        let mut checks = vec![
            CheckResult::compare(
                "(Δ⊗1)R = R13 R23",
                None,
                self.element(3, d1),
                self.element(3, self.tensor_product(3, &r13, &r23)),
            ),
            CheckResult::compare(
                "(1⊗Δ)R = R13 R12",
                None,
                self.element(3, d2),
                self.element(3, self.tensor_product(3, &r13, &r12)),
            ),
        ];
        let hh = hs.tensor(hs)?;
        let swap = flip(hs, hs)?;
        let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
        for c in 0..self.dim() {
            let dh = h.comul().column(c).clone();
            lhs.push(self.tensor_product(2, &r.r, &dh));
            rhs.push(self.tensor_product(2, &swap.apply(&dh), &r.r));
        }
        let dd = hh.dim();
        checks.push(CheckResult::compare(
            "R Δ(h) = Δ^op(h) R",
            None,
            GradedMap::new(hs.clone(), hh.clone(), SparseMatrix::from_columns(dd, lhs)),
            GradedMap::new(hs.clone(), hh.clone(), SparseMatrix::from_columns(dd, rhs)),
        ));
        let inv_check = match self.r_inverse(r) {
            Ok(ri) => {
                let one = self.element(2, self.one_power(2));
                let left = self.element(2, self.tensor_product(2, &ri, &r.r));
                let right = self.element(2, self.tensor_product(2, &r.r, &ri));
                let a = CheckResult::compare("R invertible", None, left, one);
                let b = CheckResult::compare("R invertible", None, right, self.element(2, self.one_power(2)));
                CheckResult::flag("R invertible: R⁻¹R = RR⁻¹ = 1⊗1", None, a.pass && b.pass)
            }
            Err(_) => CheckResult::flag("R invertible: R⁻¹R = RR⁻¹ = 1⊗1", None, false),
        };
        checks.push(inv_check);
        Ok(checks)
    }
}

/// A left module structure `act: H⊗V → V`.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub space: GradedSpace,
    pub act: GradedMap,
}

impl ModuleAction {
    pub fn new(h: &BraidedHopfAlgebra, space: GradedSpace, act: GradedMap) -> Result<Self> {
        let hv = h.space().tensor(&space)?;
        if act.source() != &hv || act.target() != &space {
            return Err(Error::ShapeMismatch("action must map H⊗V → V".into()));
        }
        Ok(ModuleAction { space, act })
    }

    /// `act(m⊗1) = act(1⊗act)`, `act(η⊗1) = id`.
    pub fn verify(&self, h: &BraidedHopfAlgebra) -> Vec<CheckResult> {
        let idv = GradedMap::identity(&self.space);
        vec![
            CheckResult::compare(
                "action is associative: ▷(m⊗1) = ▷(1⊗▷)",
                None,
                h.mul().tensor(&idv).and_then(|x| self.act.compose(&x)),
                h.id().tensor(&self.act).and_then(|x| self.act.compose(&x)),
            ),
            CheckResult::compare(
                "action is unital: ▷(η⊗1) = id",
                None,
                h.unit().tensor(&idv).and_then(|x| self.act.compose(&x)),
                Ok(idv),
            ),
        ]
    }
}

/// `a ▷ h = a_(1) h S(a_(2))`, compiled as
/// `m(m⊗1) ∘ (1⊗1⊗S) ∘ (1⊗flip) ∘ (Δ⊗1)` on `a⊗h`.
pub fn conjugation_action(h: &OrdinaryHopfData) -> Result<ModuleAction> {
    let hopf = &h.hopf;
    let hs = h.space();
    let id = hopf.id();
    let act = GradedMap::chain(&[
        hopf.mul(),
        &hopf.mul().tensor(&id)?,
        &GradedMap::tensor_all(&[&id, &id, hopf.antipode()])?,
        &id.tensor(&flip(hs, hs)?)?,
        &hopf.comul().tensor(&id)?,
    ])?;
    ModuleAction::new(hopf, hs.clone(), act)
}

/// Left multiplication of H on itself.
pub fn regular_action(h: &OrdinaryHopfData) -> ModuleAction {
    ModuleAction::new(&h.hopf, h.space().clone(), h.hopf.mul().clone()).expect("m: H⊗H → H")
}

/// `a ▷ v = ε(a) v`.
pub fn trivial_action(h: &OrdinaryHopfData, space: &GradedSpace) -> Result<ModuleAction> {
    let act = h.hopf.counit().tensor(&GradedMap::identity(space))?;
    ModuleAction::new(&h.hopf, space.clone(), act)
}

/// Eigen-decomposition of a module under the generator's action.
#[derive(Clone, Debug)]
pub struct Eigengrading {
    /// The module regraded: `V_k` = eigenspace of `ζ^k`.
    pub space: GradedSpace,
    /// Columns are the eigenvectors (in the original basis), degree-sorted.
    pub basis: SparseMatrix,
}

/// Grades a module by the eigenvalues of `g ▷ −`: `g ▷ v = ζ^{|v|} v`.
pub fn grading_from_action(h: &OrdinaryHopfData, action: &ModuleAction) -> Result<Eigengrading> {
    let v = &action.space;
    let f = v.field().clone();
    let g = GradedMap::from_element(h.space(), h.generator.clone())?;
    let ga = action.act.compose(&g.tensor(&GradedMap::identity(v))?)?;
    let n = v.n();
    let mut degrees = Vec::new();
    let mut columns = Vec::new();
    for k in 0..n {
        let shifted = ga.sub(&GradedMap::identity(v).scale(&Cyclo::zeta_power(&f, k as i64)))?;
        let ker = shifted.kernel();
        for c in ker.inclusion.matrix().columns() {
            degrees.push(k);
            columns.push(c.clone());
        }
    }
    if columns.len() != v.dim() {
        return Err(Error::NotDiagonalizable(format!(
            "generator action has {} independent root-of-unity eigenvectors on a space of dimension {}",
            columns.len(),
            v.dim()
        )));
    }
    Ok(Eigengrading {
        space: GradedSpace::from_degrees(v.category(), degrees),
        basis: SparseMatrix::from_columns(v.dim(), columns),
    })
}

/// `ψ(v⊗w) = R_2 ▷ w ⊗ R_1 ▷ v`, compiled as
/// `(▷_W ⊗ ▷_V) ∘ perm(R_2, w, R_1, v) ∘ (R⊗1⊗1)` on the ordinary modules.
pub fn braiding_from_r(
    h: &OrdinaryHopfData,
    r: &QuasitriangularElement,
    v: &ModuleAction,
    w: &ModuleAction,
) -> Result<GradedMap> {
    let hs = h.space();
    let rhat = GradedMap::from_element(&hs.tensor(hs)?, r.r.clone())?;
    let insert = GradedMap::tensor_all(&[&rhat, &GradedMap::identity(&v.space), &GradedMap::identity(&w.space)])?;
    let perm = permute_factors(&[hs, hs, &v.space, &w.space], &[1, 3, 0, 2])?;
    GradedMap::chain(&[&w.act.tensor(&v.act)?, &perm, &insert])
}

/// Re-expresses an ordinary map `V⊗W → W⊗V` in eigenbases, on graded spaces.
pub fn regrade_braiding(psi: &GradedMap, gv: &Eigengrading, gw: &Eigengrading) -> Result<GradedMap> {
    let f = gv.space.field();
    let pv_inv = crate::linalg::inverse(&gv.basis, f)?;
    let pw_inv = crate::linalg::inverse(&gw.basis, f)?;
    let m = pw_inv
        .kron(&pv_inv)
        .compose(psi.matrix())?
        .compose(&gv.basis.kron(&gw.basis))?;
    GradedMap::new(gv.space.tensor(&gw.space)?, gw.space.tensor(&gv.space)?, m)
}

/// `ψ_R` on the regular representation, written in its eigenbasis, against
/// the anyonic braiding `ζ^{|v||w|}·flip` of the regraded space.
pub fn r_braiding_check(h: &OrdinaryHopfData, r: &QuasitriangularElement) -> Result<CheckResult> {
    let reg = regular_action(h);
    let grading = grading_from_action(h, &reg)?;
    let psi = braiding_from_r(h, r, &reg, &reg)?;
    Ok(CheckResult::compare(
        "ψ_R on the regular representation is the anyonic braiding",
        None,
        regrade_braiding(&psi, &grading, &grading),
        braiding(&grading.space, &grading.space),
    ))
}

/// Transmutation output: the braided Hopf algebra and the eigenbasis of the
/// conjugation action it is written in.
#[derive(Clone, Debug)]
pub struct Transmuted {
    pub hopf: BraidedHopfAlgebra,
    pub grading: Eigengrading,
}

/// Builds `H̲` from `(H, R)`: same algebra and counit, coproduct
/// `Δ̲(h) = h_(1) S(R_2) ⊗ R_1 ▷ h_(2)`, antipode `S̲(h) = R_2 S(R_1 ▷ h)`,
/// graded by the eigen-degrees of the conjugation action.
pub fn transmute(h: &OrdinaryHopfData, r: &QuasitriangularElement) -> Result<Transmuted> {
    let qt = h.verify_quasitriangular(r)?;
    if !all_pass(&qt) {
        return Err(Error::InvalidStructure(format!(
            "R is not quasitriangular: {} fails",
            first_failure(&qt).unwrap().identity
        )));
    }
    let hopf = &h.hopf;
    let hs = h.space();
    let id = hopf.id();
    let conj = conjugation_action(h)?;
    let grading = grading_from_action(h, &conj)?;
    let rhat = GradedMap::from_element(&hs.tensor(hs)?, r.r.clone())?;

    // Δ̲ = (m(1⊗S) ⊗ ▷) ∘ perm(h1, R2, R1, h2) ∘ (Δ ⊗ R)
    let m_1s = hopf.mul().compose(&id.tensor(hopf.antipode())?)?;
    let comul = GradedMap::chain(&[
        &m_1s.tensor(&conj.act)?,
        &permute_factors(&[hs, hs, hs, hs], &[0, 3, 2, 1])?,
        &hopf.comul().tensor(&rhat)?,
    ])?;

    // S̲ = m ∘ (1 ⊗ S▷) ∘ perm(R2, R1, h) ∘ (R ⊗ 1)
    let s_act = hopf.antipode().compose(&conj.act)?;
    let antipode = GradedMap::chain(&[
        hopf.mul(),
        &id.tensor(&s_act)?,
        &permute_factors(&[hs, hs, hs], &[1, 0, 2])?,
        &rhat.tensor(&id)?,
    ])?;

    // write every structure map in the eigenbasis P: m' = P⁻¹ m (P⊗P), …
    let f = hs.field();
    let p = &grading.basis;
    let pi = crate::linalg::inverse(p, f)?;
    let gs = grading.space.clone();
    let gi = GradedSpace::unit(gs.category());
    let one = SparseMatrix::identity(f, 1);
    let conj_mat = |m: &GradedMap, left: &SparseMatrix, right: &SparseMatrix| -> Result<SparseMatrix> {
        left.compose(m.matrix())?.compose(right)
    };
    let gg = gs.tensor(&gs)?;
    let braided = BraidedHopfAlgebra::new(
        gs.clone(),
        GradedMap::new(gg.clone(), gs.clone(), conj_mat(hopf.mul(), &pi, &p.kron(p))?)?,
        GradedMap::new(gi.clone(), gs.clone(), conj_mat(hopf.unit(), &pi, &one)?)?,
        GradedMap::new(gs.clone(), gg, conj_mat(&comul, &pi.kron(&pi), p)?)?,
        GradedMap::new(gs.clone(), gi, conj_mat(hopf.counit(), &one, p)?)?,
        GradedMap::new(gs.clone(), gs.clone(), conj_mat(&antipode, &pi, p)?)?,
    )?;
    Ok(Transmuted { hopf: braided, grading })
}

/// Triviality facts for `C[Z_n]`: `Δ̲ = Δ`, `S̲ = S`, `ψ_{H̲,H̲}` is the flip
/// and squares to the identity.
pub fn transmutation_triviality(h: &OrdinaryHopfData, t: &Transmuted) -> Result<Vec<CheckResult>> {
    let hs = t.hopf.space();
    let psi = braiding(hs, hs)?;
    Ok(vec![
        CheckResult::compare("transmuted coproduct equals Δ", None, Ok(t.hopf.comul().clone()), Ok(h.hopf.comul().clone())),
        CheckResult::compare("transmuted antipode equals S", None, Ok(t.hopf.antipode().clone()), Ok(h.hopf.antipode().clone())),
        CheckResult::compare("ψ_{H̲,H̲} is the flip", None, Ok(psi.clone()), flip(hs, hs)),
        CheckResult::compare("ψ² = id", None, psi.compose(&psi), Ok(GradedMap::identity(&hs.tensor(hs)?))),
    ])
}
