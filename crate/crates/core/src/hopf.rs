//! Hopf algebras internal to the graded category, and the derived maps used
//! by the Connes–Moscovici cocyclic object: twisted antipode, iterated
//! coproducts, the braided interleaving shuffle and the tensor-power product.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec;
use crate::graded::{braiding, Category, GradedMap, GradedSpace};
use crate::report::CheckResult;

/// `(H, m, η, Δ, ε, S)` with every structure map degree-preserving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfAlgebra {
    space: GradedSpace,
    mul: GradedMap,
    unit: GradedMap,
    comul: GradedMap,
    counit: GradedMap,
    antipode: GradedMap,
}

fn expect_shape(name: &str, map: &GradedMap, source: &GradedSpace, target: &GradedSpace) -> Result<()> {
    if map.source() != source || map.target() != target {
        return Err(Error::ShapeMismatch(format!(
            "{name} has shape {:?} -> {:?}, expected {:?} -> {:?}",
            map.source().dims(),
            map.target().dims(),
            source.dims(),
            target.dims()
        )));
    }
    Ok(())
}

impl BraidedHopfAlgebra {
    pub fn new(
        space: GradedSpace,
        mul: GradedMap,
        unit: GradedMap,
        comul: GradedMap,
        counit: GradedMap,
        antipode: GradedMap,
    ) -> Result<Self> {
        let i = GradedSpace::unit(space.category());
        let hh = space.tensor(&space)?;
        expect_shape("m", &mul, &hh, &space)?;
        expect_shape("η", &unit, &i, &space)?;
        expect_shape("Δ", &comul, &space, &hh)?;
        expect_shape("ε", &counit, &space, &i)?;
        expect_shape("S", &antipode, &space, &space)?;
        Ok(BraidedHopfAlgebra {
            space,
            mul,
            unit,
            comul,
            counit,
            antipode,
        })
    }

    /// The unit object as a Hopf algebra (all maps identities).
    pub fn trivial(cat: &Arc<Category>) -> Self {
        let i = GradedSpace::unit(cat);
        let id = GradedMap::identity(&i);
        Self::new(i, id.clone(), id.clone(), id.clone(), id.clone(), id).expect("unit object shapes")
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn category(&self) -> &Arc<Category> {
        self.space.category()
    }

    pub fn unit_object(&self) -> GradedSpace {
        GradedSpace::unit(self.category())
    }

    pub fn mul(&self) -> &GradedMap {
        &self.mul
    }

    pub fn unit(&self) -> &GradedMap {
        &self.unit
    }

    pub fn comul(&self) -> &GradedMap {
        &self.comul
    }

    pub fn counit(&self) -> &GradedMap {
        &self.counit
    }

    pub fn antipode(&self) -> &GradedMap {
        &self.antipode
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn id(&self) -> GradedMap {
        GradedMap::identity(&self.space)
    }

    /// `H^{⊗k}`.
    pub fn power(&self, k: usize) -> GradedSpace {
        self.space.tensor_power(k)
    }

    /// `1_{H^{⊗k}}`.
    pub fn id_power(&self, k: usize) -> GradedMap {
        GradedMap::identity(&self.power(k))
    }

    pub fn braiding(&self) -> Result<GradedMap> {
        braiding(&self.space, &self.space)
    }

    /// Same structure with `mul`/`antipode`/etc. replaced; used to build
    /// deliberately broken fixtures.
    pub fn with_antipode(&self, antipode: GradedMap) -> Result<Self> {
        Self::new(
            self.space.clone(),
            self.mul.clone(),
            self.unit.clone(),
            self.comul.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    /// Hopf axioms checked as exact matrix identities, in this order:
    /// associativity, unit laws, coassociativity, counit laws, `εη = 1`,
    /// the braided bialgebra law, `Δη = η⊗η`, `εm = ε⊗ε`, antipode laws.
    pub fn verify_axioms(&self) -> Vec<CheckResult> {
        exec::map_range(HOPF_AXIOMS.len(), |k| self.check_axiom(k))
    }

    fn check_axiom(&self, k: usize) -> CheckResult {
        let id = self.id();
        let (m, eta, delta, eps, s) = (&self.mul, &self.unit, &self.comul, &self.counit, &self.antipode);
        let name = HOPF_AXIOMS[k];
        let cmp = |l: Result<GradedMap>, r: Result<GradedMap>| CheckResult::compare(name, None, l, r);
        match k {
            0 => cmp(
                m.tensor(&id).and_then(|x| m.compose(&x)),
                id.tensor(m).and_then(|x| m.compose(&x)),
            ),
            1 => cmp(eta.tensor(&id).and_then(|x| m.compose(&x)), Ok(id.clone())),
            2 => cmp(id.tensor(eta).and_then(|x| m.compose(&x)), Ok(id.clone())),
            3 => cmp(
                delta.tensor(&id).and_then(|x| x.compose(delta)),
                id.tensor(delta).and_then(|x| x.compose(delta)),
            ),
            4 => cmp(eps.tensor(&id).and_then(|x| x.compose(delta)), Ok(id.clone())),
            5 => cmp(id.tensor(eps).and_then(|x| x.compose(delta)), Ok(id.clone())),
            6 => cmp(eps.compose(eta), Ok(GradedMap::identity(&self.unit_object()))),
            7 => cmp(delta.compose(m), self.bialgebra_rhs()),
            8 => cmp(delta.compose(eta), eta.tensor(eta)),
            9 => cmp(eps.compose(m), eps.tensor(eps)),
            10 => cmp(
                s.tensor(&id).and_then(|x| GradedMap::chain(&[m, &x, delta])),
                eta.compose(eps),
            ),
            11 => cmp(
                id.tensor(s).and_then(|x| GradedMap::chain(&[m, &x, delta])),
                eta.compose(eps),
            ),
            _ => unreachable!(),
        }
    }

    /// `(m⊗m)(1⊗ψ_{H,H}⊗1)(Δ⊗Δ)`.
    fn bialgebra_rhs(&self) -> Result<GradedMap> {
        let id = self.id();
        let middle = GradedMap::tensor_all(&[&id, &self.braiding()?, &id])?;
        let mm = self.mul.tensor(&self.mul)?;
        let dd = self.comul.tensor(&self.comul)?;
        GradedMap::chain(&[&mm, &middle, &dd])
    }

    /// `Δ^k: H → H^{⊗(k+1)}`, `Δ^0 = id`, `Δ^k = (Δ⊗1^{⊗(k-1)})Δ^{k-1}`.
    pub fn iterated_coproduct(&self, k: usize) -> Result<GradedMap> {
        let mut acc = self.id();
        for j in 1..=k {
            let step = self.comul.tensor(&self.id_power(j - 1))?;
            acc = step.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Same as [`Self::iterated_coproduct`] but expanding on the right,
    /// `(1^{⊗(k-1)}⊗Δ)Δ^{k-1}`; equal to it by coassociativity.
    pub fn iterated_coproduct_right(&self, k: usize) -> Result<GradedMap> {
        let mut acc = self.id();
        for j in 1..=k {
            let step = self.id_power(j - 1).tensor(&self.comul)?;
            acc = step.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `F_n(ψ): H^{⊗2n} → H^{⊗2n}`, see [`braided_interleave`].
    pub fn braided_shuffle(&self, n: usize) -> Result<GradedMap> {
        braided_interleave(&self.space, &self.space, n)
    }

    /// `m_n = (m⊗…⊗m) F_n(ψ)`, the product of the braided tensor-power
    /// algebra `H^{⊗n}`; `m_1 = m`.
    pub fn power_multiplication(&self, n: usize) -> Result<GradedMap> {
        if n == 0 {
            // H^{⊗0} = I with its identity product
            return Ok(GradedMap::identity(&self.unit_object()));
        }
        let ms: Vec<&GradedMap> = std::iter::repeat_n(&self.mul, n).collect();
        GradedMap::tensor_all(&ms)?.compose(&self.braided_shuffle(n)?)
    }

    /// `η^{⊗n}: I → H^{⊗n}`.
    pub fn power_unit(&self, n: usize) -> Result<GradedMap> {
        let mut acc = GradedMap::identity(&self.unit_object());
        for _ in 0..n {
            acc = acc.tensor(&self.unit)?;
        }
        Ok(acc)
    }

    /// Transports the structure along an invertible map `p: H' → H`.
    pub fn change_basis(&self, p: &GradedMap) -> Result<Self> {
        let pi = p.inverse()?;
        let new_space = p.source().clone();
        Self::new(
            new_space,
            GradedMap::chain(&[&pi, &self.mul, &p.tensor(p)?])?,
            pi.compose(&self.unit)?,
            GradedMap::chain(&[&pi.tensor(&pi)?, &self.comul, p])?,
            self.counit.compose(p)?,
            GradedMap::chain(&[&pi, &self.antipode, p])?,
        )
    }
}

const HOPF_AXIOMS: [&str; 12] = [
    "associativity: m(m⊗1) = m(1⊗m)",
    "left unit: m(η⊗1) = id",
    "right unit: m(1⊗η) = id",
    "coassociativity: (Δ⊗1)Δ = (1⊗Δ)Δ",
    "left counit: (ε⊗1)Δ = id",
    "right counit: (1⊗ε)Δ = id",
    "counit of unit: εη = id_I",
    "braided bialgebra: Δm = (m⊗m)(1⊗ψ⊗1)(Δ⊗Δ)",
    "unit is group-like: Δη = η⊗η",
    "counit is multiplicative: εm = ε⊗ε",
    "left antipode: m(S⊗1)Δ = ηε",
    "right antipode: m(1⊗S)Δ = ηε",
];

/// `(A^{⊗n}) ⊗ (B^{⊗n}) → (A⊗B)^{⊗n}`, sending `a_1…a_n b_1…b_n` to
/// `a_1 b_1 … a_n b_n` as the product over `j = 1..n-1` of
/// `(1^{⊗j}, ψ, …, ψ, 1^{⊗j})` with `n - j` braidings. The `j = n-1` factor
/// acts first and the `j = 1` factor acts last.
pub fn braided_interleave(a: &GradedSpace, b: &GradedSpace, n: usize) -> Result<GradedMap> {
    let mut slots: Vec<GradedSpace> = std::iter::repeat_n(a.clone(), n)
        .chain(std::iter::repeat_n(b.clone(), n))
        .collect();
    let refs: Vec<&GradedSpace> = slots.iter().collect();
    let mut acc = GradedMap::identity(&GradedSpace::tensor_all(&refs)?);
    for j in (1..n).rev() {
        let mut pieces = Vec::with_capacity(2 * n);
        for s in &slots[..j] {
            pieces.push(GradedMap::identity(s));
        }
        let mut p = j;
        while p < 2 * n - j {
            pieces.push(braiding(&slots[p], &slots[p + 1])?);
            slots.swap(p, p + 1);
            p += 2;
        }
        for s in &slots[2 * n - j..] {
            pieces.push(GradedMap::identity(s));
        }
        let refs: Vec<&GradedMap> = pieces.iter().collect();
        acc = GradedMap::tensor_all(&refs)?.compose(&acc)?;
    }
    Ok(acc)
}

/// `ψ_{X, Y_1⊗…⊗Y_k}` built by moving `X` past one factor at a time.
pub fn braid_past(x: &GradedSpace, ys: &[GradedSpace]) -> Result<GradedMap> {
    let mut slots: Vec<GradedSpace> = std::iter::once(x.clone()).chain(ys.iter().cloned()).collect();
    let refs: Vec<&GradedSpace> = slots.iter().collect();
    let mut acc = GradedMap::identity(&GradedSpace::tensor_all(&refs)?);
    for p in 0..ys.len() {
        let mut pieces: Vec<GradedMap> = slots[..p].iter().map(GradedMap::identity).collect();
        pieces.push(braiding(&slots[p], &slots[p + 1])?);
        pieces.extend(slots[p + 2..].iter().map(GradedMap::identity));
        slots.swap(p, p + 1);
        let refs: Vec<&GradedMap> = pieces.iter().collect();
        acc = GradedMap::tensor_all(&refs)?.compose(&acc)?;
    }
    Ok(acc)
}

/// A character `δ: H → I` and group-like `σ: I → H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPair {
    pub delta: GradedMap,
    pub sigma: GradedMap,
}

impl ModularPair {
    /// `(ε, η)`.
    pub fn trivial(h: &BraidedHopfAlgebra) -> Self {
        ModularPair {
            delta: h.counit.clone(),
            sigma: h.unit.clone(),
        }
    }

    pub fn new(h: &BraidedHopfAlgebra, delta: GradedMap, sigma: GradedMap) -> Result<Self> {
        let i = h.unit_object();
        expect_shape("δ", &delta, h.space(), &i)?;
        expect_shape("σ", &sigma, &i, h.space())?;
        Ok(ModularPair { delta, sigma })
    }

    /// `δm = δ⊗δ`, `δη = 1`, `Δσ = σ⊗σ`, `εσ = 1`.
    pub fn verify(&self, h: &BraidedHopfAlgebra) -> Vec<CheckResult> {
        let id_i = GradedMap::identity(&h.unit_object());
        let (d, s) = (&self.delta, &self.sigma);
        vec![
            CheckResult::compare("δ is multiplicative: δm = δ⊗δ", None, d.compose(&h.mul), d.tensor(d)),
            CheckResult::compare("δ is unital: δη = id_I", None, d.compose(&h.unit), Ok(id_i.clone())),
            CheckResult::compare("σ is group-like: Δσ = σ⊗σ", None, h.comul.compose(s), s.tensor(s)),
            CheckResult::compare("σ is counital: εσ = id_I", None, h.counit.compose(s), Ok(id_i)),
        ]
    }

    /// `S̃ = (δ⊗S)Δ`.
    pub fn twisted_antipode(&self, h: &BraidedHopfAlgebra) -> Result<GradedMap> {
        self.delta.tensor(&h.antipode)?.compose(&h.comul)
    }

    /// Rank of `S̃² − Ad_σ`, `Ad_σ(x) = σ x S(σ)`; zero when the pair is in
    /// involution in the Connes–Moscovici sense. Reported, not enforced.
    pub fn involution_defect(&self, h: &BraidedHopfAlgebra) -> Result<usize> {
        let st = self.twisted_antipode(h)?;
        let st2 = st.compose(&st)?;
        let sigma_inv = h.antipode.compose(&self.sigma)?;
        let sandwich = GradedMap::tensor_all(&[&self.sigma, &h.id(), &sigma_inv])?;
        let ad = GradedMap::chain(&[&h.mul, &h.mul.tensor(&h.id())?, &sandwich])?;
        Ok(st2.sub(&ad)?.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;
    use crate::transmute::czn_group_algebra;
    use crate::scalar::Cyclo;
    use crate::sparse::SparseVec;

    fn e(h: &BraidedHopfAlgebra, i: usize) -> SparseVec {
        vec![(i, Cyclo::one(h.space().field()))]
    }

    #[test]
    fn czn_passes_axioms() {
        for n in 1..=4 {
            let h = czn_group_algebra(n).hopf;
            assert!(all_pass(&h.verify_axioms()), "n={n}");
        }
        assert!(all_pass(&BraidedHopfAlgebra::trivial(&Category::anyonic(3)).verify_axioms()));
    }

    #[test]
    fn identity_antipode_fails_with_witness_g() {
        let h = czn_group_algebra(3).hopf;
        let bad = h.with_antipode(h.id()).unwrap();
        let report = bad.verify_axioms();
        let left = report.iter().find(|c| c.identity.starts_with("left antipode")).unwrap();
        assert!(!left.pass);
        // basis vector 1 = g: m(g⊗g) = g² but ε(g)1 = 1
        assert_eq!(left.witness.as_ref().unwrap().basis_index, 1);
        assert!(report.iter().filter(|c| !c.pass).all(|c| c.identity.contains("antipode")));
    }

    #[test]
    fn twisted_antipode_with_counit_is_antipode() {
        for n in 1..=4 {
            let h = czn_group_algebra(n).hopf;
            let pair = ModularPair::trivial(&h);
            assert_eq!(pair.twisted_antipode(&h).unwrap(), *h.antipode());
            assert!(all_pass(&pair.verify(&h)));
        }
        let h = czn_group_algebra(5).hopf;
        let st = ModularPair::trivial(&h).twisted_antipode(&h).unwrap();
        assert_eq!(st.column(2), &e(&h, 3));
    }

    #[test]
    fn iterated_coproduct_on_group_likes() {
        let h = czn_group_algebra(3).hopf;
        assert_eq!(h.iterated_coproduct(0).unwrap(), h.id());
        let d2 = h.iterated_coproduct(2).unwrap();
        for a in 0..3 {
            assert_eq!(d2.column(a), &e(&h, a * 9 + a * 3 + a));
        }
        for k in 0..4 {
            assert_eq!(h.iterated_coproduct(k).unwrap(), h.iterated_coproduct_right(k).unwrap());
        }
    }

    #[test]
    fn shuffle_small_cases() {
        let h = czn_group_algebra(2).hopf;
        assert_eq!(h.braided_shuffle(1).unwrap(), h.id_power(2));
        let f2 = h.braided_shuffle(2).unwrap();
        // (a1 a2 b1 b2) -> (a1 b1 a2 b2)
        for c in 0..16 {
            let (a1, a2, b1, b2) = (c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1);
            assert_eq!(f2.column(c), &e(&h, a1 << 3 | b1 << 2 | a2 << 1 | b2));
        }
    }

    #[test]
    fn power_multiplication_componentwise_on_degree_zero() {
        let h = czn_group_algebra(2).hopf;
        assert_eq!(h.power_multiplication(1).unwrap(), *h.mul());
        let m2 = h.power_multiplication(2).unwrap();
        for c in 0..16 {
            let (a, b, cc, d) = (c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1);
            assert_eq!(m2.column(c), &e(&h, (((a + cc) % 2) << 1) | ((b + d) % 2)));
        }
    }

    #[test]
    fn power_unit_is_a_unit() {
        let h = czn_group_algebra(3).hopf;
        for n in 1..=3 {
            let mn = h.power_multiplication(n).unwrap();
            let u = h.power_unit(n).unwrap().tensor(&h.id_power(n)).unwrap();
            assert_eq!(mn.compose(&u).unwrap(), h.id_power(n));
        }
    }

    #[test]
    fn braid_past_matches_direct_braiding() {
        let cat = Category::anyonic(4);
        let x = GradedSpace::new(&cat, &[1, 1, 0, 0]).unwrap();
        let y = GradedSpace::new(&cat, &[0, 1, 0, 1]).unwrap();
        let ys = vec![y.clone(), x.clone(), y.clone()];
        let whole = GradedSpace::tensor_all(&[&y, &x, &y]).unwrap();
        assert_eq!(braid_past(&x, &ys).unwrap(), braiding(&x, &whole).unwrap());
    }

    #[test]
    fn sabotaged_pair_has_involution_defect() {
        let h = czn_group_algebra(3).hopf;
        let g = GradedMap::from_element(h.space(), e(&h, 1)).unwrap();
        let pair = ModularPair::new(&h, h.counit().clone(), g).unwrap();
        assert!(all_pass(&pair.verify(&h)));
        assert_eq!(pair.involution_defect(&h).unwrap(), 0);
        assert_eq!(ModularPair::trivial(&h).involution_defect(&h).unwrap(), 0);
    }
}
