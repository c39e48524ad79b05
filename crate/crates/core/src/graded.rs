//! Z_n-graded vector spaces over Q(ζ_n) with the anyonic braiding
//! `ψ(v⊗w) = q^{|v||w|} w⊗v`, where `q = ζ_n` (anyonic) or `q = 1` (symmetric).
//!
//! The monoidal structure is strict: a k-fold tensor product is flattened
//! left-associated with left-factor-major indexing, so `(U⊗V)⊗W` and
//! `U⊗(V⊗W)` are literally the same space and `I⊗V = V`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, Echelon, Quotient};
use crate::scalar::{CyclotomicField, Cyclo};
use crate::sparse::{SparseMatrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidingMode {
    /// `q = ζ_n`.
    Anyonic,
    /// `q = 1`: the braiding is the plain flip.
    Symmetric,
}

/// The ambient category: grading modulus, scalar field, and braiding phase.
#[derive(Debug)]
pub struct Category {
    field: Arc<CyclotomicField>,
    mode: BraidingMode,
}

impl PartialEq for Category {
    fn eq(&self, other: &Self) -> bool {
        self.field.n() == other.field.n() && self.mode == other.mode
    }
}

impl Eq for Category {}

impl Category {
    pub fn new(n: usize, mode: BraidingMode) -> Arc<Self> {
        Arc::new(Category {
            field: CyclotomicField::new(n),
            mode,
        })
    }

    pub fn anyonic(n: usize) -> Arc<Self> {
        Self::new(n, BraidingMode::Anyonic)
    }

    pub fn symmetric(n: usize) -> Arc<Self> {
        Self::new(n, BraidingMode::Symmetric)
    }

    pub fn n(&self) -> usize {
        self.field.n()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn mode(&self) -> BraidingMode {
        self.mode
    }

    /// The braiding coefficient for homogeneous elements of degrees `a`, `b`.
    pub fn braid_phase(&self, a: usize, b: usize) -> Cyclo {
        match self.mode {
            BraidingMode::Anyonic => Cyclo::zeta_power(&self.field, ((a * b) % self.n()) as i64),
            BraidingMode::Symmetric => Cyclo::one(&self.field),
        }
    }
}

/// A homogeneous basis vector: its degree and position within that degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub degree: usize,
    pub index: usize,
}

/// Finite-dimensional Z_n-graded space, described by the degree of each
/// basis vector. Spaces built from a dimension vector list their basis by
/// (degree, index); tensor products follow [`TensorIndexer`] instead.
#[derive(Clone)]
pub struct GradedSpace {
    cat: Arc<Category>,
    degrees: Arc<[usize]>,
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.cat == other.cat && self.degrees == other.degrees
    }
}

impl Eq for GradedSpace {}

impl fmt::Debug for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedSpace(n={}, dims={:?})", self.n(), self.dims())
    }
}

impl GradedSpace {
    pub fn new(cat: &Arc<Category>, dims: &[usize]) -> Result<Self> {
        if dims.len() != cat.n() {
            return Err(Error::ShapeMismatch(format!(
                "dimension vector has length {}, expected n = {}",
                dims.len(),
                cat.n()
            )));
        }
        let degrees: Vec<usize> = dims
            .iter()
            .enumerate()
            .flat_map(|(d, &k)| std::iter::repeat_n(d, k))
            .collect();
        Ok(Self::from_degrees(cat, degrees))
    }

    /// Space whose i-th basis vector has degree `degrees[i] mod n`.
    pub fn from_degrees(cat: &Arc<Category>, degrees: Vec<usize>) -> Self {
        let n = cat.n();
        GradedSpace {
            cat: cat.clone(),
            degrees: degrees.into_iter().map(|d| d % n).collect(),
        }
    }

    /// The unit object I: one dimension in degree 0.
    pub fn unit(cat: &Arc<Category>) -> Self {
        Self::from_degrees(cat, vec![0])
    }

    pub fn zero(cat: &Arc<Category>) -> Self {
        Self::from_degrees(cat, Vec::new())
    }

    pub fn category(&self) -> &Arc<Category> {
        &self.cat
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.cat.field()
    }

    pub fn n(&self) -> usize {
        self.cat.n()
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.n()];
        for &d in self.degrees.iter() {
            dims[d] += 1;
        }
        dims
    }

    /// Degrees carrying a nonzero component.
    pub fn support(&self) -> Vec<usize> {
        self.dims()
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(d, _)| d)
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> BasisVector {
        let degree = self.degrees[i];
        let index = self.degrees[..i].iter().filter(|&&d| d == degree).count();
        BasisVector { degree, index }
    }

    /// True when the basis is listed by (degree, index), i.e. the space is
    /// fully described by its dimension vector.
    pub fn is_degree_sorted(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] <= w[1])
    }

    /// Basis indices of each degree, in basis order.
    pub fn degree_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.n()];
        for (i, &d) in self.degrees.iter().enumerate() {
            blocks[d].push(i);
        }
        blocks
    }

    fn check_same_category(&self, other: &Self) -> Result<()> {
        if self.cat != other.cat {
            return Err(Error::FieldMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same_category(other)?;
        let n = self.n();
        let degrees = self
            .degrees
            .iter()
            .flat_map(|&a| other.degrees.iter().map(move |&b| (a + b) % n))
            .collect();
        Ok(Self::from_degrees(&self.cat, degrees))
    }

    /// `V^{⊗k}`, with `V^{⊗0} = I`.
    pub fn tensor_power(&self, k: usize) -> Self {
        let mut out = Self::unit(&self.cat);
        for _ in 0..k {
            out = out.tensor(self).expect("same category");
        }
        out
    }

    pub fn tensor_all(spaces: &[&GradedSpace]) -> Result<Self> {
        let first = spaces
            .first()
            .ok_or_else(|| Error::ShapeMismatch("empty tensor product".into()))?;
        let mut out = GradedSpace::unit(first.category());
        for s in spaces {
            out = out.tensor(s)?;
        }
        Ok(out)
    }
}

/// Flattening of multi-indices for `V_1 ⊗ … ⊗ V_k`:
/// `index(v⊗w) = index(v)·dim(W) + index(w)`, left-associated.
#[derive(Clone, Debug)]
pub struct TensorIndexer {
    dims: Vec<usize>,
}

impl TensorIndexer {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorIndexer { dims }
    }

    pub fn for_spaces(spaces: &[&GradedSpace]) -> Self {
        Self::new(spaces.iter().map(|s| s.dim()).collect())
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, parts: &[usize]) -> usize {
        parts
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&p, &d)| acc * d + p)
    }

    pub fn unflatten(&self, mut idx: usize) -> Vec<usize> {
        let mut parts = vec![0; self.dims.len()];
        for (p, &d) in parts.iter_mut().zip(&self.dims).rev() {
            *p = idx % d;
            idx /= d;
        }
        parts
    }
}

/// A degree-preserving linear map between graded spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedSpace,
    target: GradedSpace,
    matrix: SparseMatrix,
}

impl fmt::Debug for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedMap({:?} -> {:?}, {:?})",
            self.source.dims(),
            self.target.dims(),
            self.matrix
        )
    }
}

/// Where two maps first disagree: a source basis vector and both images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapWitness {
    pub basis_index: usize,
    pub lhs: Vec<(usize, Vec<String>)>,
    pub rhs: Vec<(usize, Vec<String>)>,
}

fn render(v: &SparseVec) -> Vec<(usize, Vec<String>)> {
    v.iter().map(|(i, x)| (*i, x.to_strings())).collect()
}

impl GradedMap {
    /// Checked constructor: shapes must match and every entry must connect
    /// basis vectors of equal degree.
    pub fn new(source: GradedSpace, target: GradedSpace, matrix: SparseMatrix) -> Result<Self> {
        source.check_same_category(&target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{}, spaces need {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let map = GradedMap {
            source,
            target,
            matrix,
        };
        map.degree_violation().map_or(Ok(()), Err)?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: GradedSpace, target: GradedSpace, matrix: SparseMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        GradedMap {
            source,
            target,
            matrix,
        }
    }

    fn degree_violation(&self) -> Option<Error> {
        for (c, col) in self.matrix.columns().iter().enumerate() {
            for (r, _) in col {
                let (rd, cd) = (self.target.degree(*r), self.source.degree(c));
                if rd != cd {
                    return Some(Error::NotDegreePreserving {
                        row: *r,
                        col: c,
                        row_degree: rd,
                        col_degree: cd,
                    });
                }
            }
        }
        None
    }

    pub fn is_degree_preserving(&self) -> bool {
        self.degree_violation().is_none()
    }

    pub fn identity(space: &GradedSpace) -> Self {
        Self::new_unchecked(
            space.clone(),
            space.clone(),
            SparseMatrix::identity(space.field(), space.dim()),
        )
    }

    pub fn zero(source: &GradedSpace, target: &GradedSpace) -> Self {
        Self::new_unchecked(
            source.clone(),
            target.clone(),
            SparseMatrix::zeros(target.dim(), source.dim()),
        )
    }

    /// A map `I → V` picking out the (homogeneous, degree-0) element `v`.
    pub fn from_element(space: &GradedSpace, v: SparseVec) -> Result<Self> {
        let unit = GradedSpace::unit(space.category());
        Self::new(
            unit,
            space.clone(),
            SparseMatrix::from_columns(space.dim(), vec![v]),
        )
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.source.field()
    }

    /// Image of basis vector `i`.
    pub fn column(&self, i: usize) -> &SparseVec {
        self.matrix.column(i)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedMap) -> Result<Self> {
        if inner.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: inner target {:?} != outer source {:?}",
                inner.target, self.source
            )));
        }
        Ok(Self::new_unchecked(
            inner.source.clone(),
            self.target.clone(),
            self.matrix.compose(&inner.matrix)?,
        ))
    }

    /// Composes a chain written left to right as in `f_1 ∘ f_2 ∘ … ∘ f_k`.
    pub fn chain(maps: &[&GradedMap]) -> Result<Self> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::ShapeMismatch("empty composition".into()))?;
        rest.iter()
            .rev()
            .try_fold((*last).clone(), |acc, f| f.compose(&acc))
    }

    pub fn tensor(&self, other: &GradedMap) -> Result<Self> {
        Ok(Self::new_unchecked(
            self.source.tensor(&other.source)?,
            self.target.tensor(&other.target)?,
            self.matrix.kron(&other.matrix),
        ))
    }

    /// `f_1 ⊗ f_2 ⊗ … ⊗ f_k`.
    pub fn tensor_all(maps: &[&GradedMap]) -> Result<Self> {
        let (first, rest) = maps
            .split_first()
            .ok_or_else(|| Error::ShapeMismatch("empty tensor product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| acc.tensor(f))
    }

    fn check_parallel(&self, other: &GradedMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch("maps are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedMap) -> Result<Self> {
        self.check_parallel(other)?;
        let one = Cyclo::one(self.field());
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.axpy(&one, &other.matrix)?,
        ))
    }

    pub fn sub(&self, other: &GradedMap) -> Result<Self> {
        self.check_parallel(other)?;
        let m1 = Cyclo::from_int(self.field(), -1);
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.axpy(&m1, &other.matrix)?,
        ))
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.scale(c))
    }

    /// `self^k` for an endomorphism.
    pub fn power(&self, k: usize) -> Result<Self> {
        if self.source != self.target {
            return Err(Error::ShapeMismatch("power of a non-endomorphism".into()));
        }
        let mut acc = Self::identity(&self.source);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// First source basis vector on which `self` and `other` differ.
    pub fn witness_difference(&self, other: &GradedMap) -> Option<MapWitness> {
        if self.source != other.source || self.target != other.target {
            return Some(MapWitness {
                basis_index: 0,
                lhs: Vec::new(),
                rhs: Vec::new(),
            });
        }
        self.matrix.first_difference(&other.matrix).map(|c| MapWitness {
            basis_index: c,
            lhs: render(self.column(c)),
            rhs: render(other.column(c)),
        })
    }

    pub fn rank(&self) -> usize {
        let blocks_src = self.source.degree_blocks();
        let blocks_tgt = self.target.degree_blocks();
        exec::map_range(self.source.n(), |d| {
            linalg::rank(&self.matrix.submatrix(&blocks_tgt[d], &blocks_src[d]))
        })
        .into_iter()
        .sum()
    }

    /// Kernel as a subobject: a degree-sorted space with its inclusion.
    pub fn kernel(&self) -> Kernel {
        let blocks_src = self.source.degree_blocks();
        let blocks_tgt = self.target.degree_blocks();
        let field = self.field().clone();
        let per_degree = exec::map_range(self.source.n(), |d| {
            let sub = self.matrix.submatrix(&blocks_tgt[d], &blocks_src[d]);
            linalg::kernel_with_field(&sub, &field)
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|(i, x)| (blocks_src[d][i], x))
                        .collect::<SparseVec>()
                })
                .collect::<Vec<_>>()
        });
        let mut degrees = Vec::new();
        let mut columns = Vec::new();
        for (d, vs) in per_degree.into_iter().enumerate() {
            for mut v in vs {
                v.sort_by_key(|(i, _)| *i);
                degrees.push(d);
                columns.push(v);
            }
        }
        let space = GradedSpace::from_degrees(self.source.category(), degrees);
        let inclusion = Self::new_unchecked(
            space.clone(),
            self.source.clone(),
            SparseMatrix::from_columns(self.source.dim(), columns),
        );
        Kernel { space, inclusion }
    }

    /// Cokernel `target / image(self)`.
    pub fn cokernel(&self) -> GradedQuotient {
        GradedQuotient::by_relations(&self.target, self.matrix.columns())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.source.dims() != self.target.dims() {
            return Err(Error::InvalidStructure("map between spaces of different dimension vectors is not invertible".into()));
        }
        let inv = linalg::inverse(&self.matrix, self.field())?;
        Self::new(self.target.clone(), self.source.clone(), inv)
    }
}

#[derive(Clone, Debug)]
pub struct Kernel {
    pub space: GradedSpace,
    pub inclusion: GradedMap,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Quotient of a graded space by a graded subspace, computed degree by
/// degree. The quotient basis is degree-sorted; each basis vector is the class
/// of a single ambient basis vector.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    ambient: GradedSpace,
    space: GradedSpace,
    // per degree: ambient indices of that degree and the quotient of that block
    blocks: Vec<(Vec<usize>, Quotient)>,
    offsets: Vec<usize>,
    block_pos: Vec<usize>,
}

impl GradedQuotient {
    /// Quotient by the span of homogeneous relation vectors.
    pub fn by_relations(ambient: &GradedSpace, relations: &[SparseVec]) -> Self {
        let blocks_idx = ambient.degree_blocks();
        let mut block_pos = vec![0; ambient.dim()];
        for idx in &blocks_idx {
            for (k, &i) in idx.iter().enumerate() {
                block_pos[i] = k;
            }
        }
        // bucket each relation by the degree of its support
        let mut by_degree: Vec<Vec<SparseVec>> = vec![Vec::new(); ambient.n()];
        for rel in relations {
            if let Some((i, _)) = rel.first() {
                let d = ambient.degree(*i);
                debug_assert!(rel.iter().all(|(j, _)| ambient.degree(*j) == d));
                let mut local: SparseVec = rel.iter().map(|(j, x)| (block_pos[*j], x.clone())).collect();
                local.sort_by_key(|(j, _)| *j);
                by_degree[d].push(local);
            }
        }
        let quotients = exec::map_range(ambient.n(), |d| {
            Quotient::new(blocks_idx[d].len(), Echelon::from_vectors(&by_degree[d]))
        });
        let mut degrees = Vec::new();
        let mut offsets = Vec::new();
        for (d, q) in quotients.iter().enumerate() {
            offsets.push(degrees.len());
            degrees.extend(std::iter::repeat_n(d, q.dim()));
        }
        let space = GradedSpace::from_degrees(ambient.category(), degrees);
        GradedQuotient {
            ambient: ambient.clone(),
            space,
            blocks: blocks_idx.into_iter().zip(quotients).collect(),
            offsets,
            block_pos,
        }
    }

    pub fn ambient(&self) -> &GradedSpace {
        &self.ambient
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn relation_rank(&self) -> usize {
        self.blocks.iter().map(|(_, q)| q.relations().rank()).sum()
    }

    /// Ambient basis index lifting quotient basis vector `k`.
    pub fn lift(&self, k: usize) -> usize {
        let d = self.space.degree(k);
        let local = k - self.offsets[d];
        let (idx, q) = &self.blocks[d];
        idx[q.lifts()[local]]
    }

    /// Coordinates of the class of an ambient vector.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let mut parts: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); self.ambient.n()];
        for (i, x) in v {
            parts[self.ambient.degree(*i)].push((self.block_pos[*i], x.clone()));
        }
        let mut out = Vec::new();
        for (d, mut p) in parts.into_iter().enumerate() {
            if p.is_empty() {
                continue;
            }
            p.sort_by_key(|(j, _)| *j);
            let q = &self.blocks[d].1;
            out.extend(q.project(p).into_iter().map(|(k, x)| (self.offsets[d] + k, x)));
        }
        out
    }

    /// True iff the ambient vector lies in the relation subspace.
    pub fn is_relation(&self, v: &SparseVec) -> bool {
        self.project(v).is_empty()
    }

    pub fn projection(&self) -> GradedMap {
        let field = self.ambient.field().clone();
        let columns = exec::map_range(self.ambient.dim(), |i| {
            self.project(&vec![(i, Cyclo::one(&field))])
        });
        GradedMap::new_unchecked(
            self.ambient.clone(),
            self.space.clone(),
            SparseMatrix::from_columns(self.space.dim(), columns),
        )
    }
}

/// `ψ_{V,W}: V⊗W → W⊗V`, `v⊗w ↦ q^{|v||w|} w⊗v`.
pub fn braiding(v: &GradedSpace, w: &GradedSpace) -> Result<GradedMap> {
    let cat = v.category();
    let (dv, dw) = (v.dim(), w.dim());
    let entries = (0..dv * dw)
        .map(|c| {
            let (i, j) = (c / dw, c % dw);
            (j * dv + i, cat.braid_phase(v.degree(i), w.degree(j)))
        })
        .collect();
    GradedMap::new(v.tensor(w)?, w.tensor(v)?, SparseMatrix::monomial(dw * dv, entries))
}

/// The plain transposition `v⊗w ↦ w⊗v` with coefficient 1.
pub fn flip(v: &GradedSpace, w: &GradedSpace) -> Result<GradedMap> {
    let field = v.field();
    let (dv, dw) = (v.dim(), w.dim());
    let entries = (0..dv * dw)
        .map(|c| ((c % dw) * dv + c / dw, Cyclo::one(field)))
        .collect();
    GradedMap::new(v.tensor(w)?, w.tensor(v)?, SparseMatrix::monomial(dw * dv, entries))
}

/// Reorders tensor factors: output slot `k` holds input factor `perm[k]`, with
/// no braiding phases. Only meaningful for ordinary (ungraded) data.
pub fn permute_factors(spaces: &[&GradedSpace], perm: &[usize]) -> Result<GradedMap> {
    let source = GradedSpace::tensor_all(spaces)?;
    let out_spaces: Vec<&GradedSpace> = perm.iter().map(|&p| spaces[p]).collect();
    let target = GradedSpace::tensor_all(&out_spaces)?;
    let src_ix = TensorIndexer::for_spaces(spaces);
    let tgt_ix = TensorIndexer::for_spaces(&out_spaces);
    let field = source.field().clone();
    let entries = (0..source.dim())
        .map(|c| {
            let parts = src_ix.unflatten(c);
            let out: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
            (tgt_ix.flatten(&out), Cyclo::one(&field))
        })
        .collect();
    GradedMap::new(source, target.clone(), SparseMatrix::monomial(target.dim(), entries))
}

/// `(ψ_{W,V}∘ψ_{V,W} = id, ψ_{V,W} = flip)`, both decided by exact matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryCheck {
    pub symmetric_pair: bool,
    pub flip: bool,
}

pub fn braid_symmetry_check(v: &GradedSpace, w: &GradedSpace) -> Result<SymmetryCheck> {
    let psi = braiding(v, w)?;
    let back = braiding(w, v)?;
    let round = back.compose(&psi)?;
    Ok(SymmetryCheck {
        symmetric_pair: round == GradedMap::identity(psi.source()),
        flip: psi == flip(v, w)?,
    })
}

/// The degree-support criterion: the pair is symmetric iff `2ij ≡ 0 (mod n)`
/// for all supported degrees, and the braiding is the flip iff `ij ≡ 0`.
pub fn support_criterion(n: usize, support_a: &[usize], support_b: &[usize]) -> Result<SymmetryCheck> {
    if let Some(&d) = support_a.iter().chain(support_b).find(|&&d| d >= n) {
        return Err(Error::InvalidStructure(format!("degree {d} outside [0, {n})")));
    }
    let all = |k: usize| {
        support_a
            .iter()
            .all(|&i| support_b.iter().all(|&j| (k * i * j).is_multiple_of(n)))
    };
    Ok(SymmetryCheck {
        symmetric_pair: all(2),
        flip: all(1),
    })
}

/// Space with one basis vector in each listed degree.
pub fn space_with_support(cat: &Arc<Category>, support: &[usize]) -> Result<GradedSpace> {
    let mut dims = vec![0; cat.n()];
    for &d in support {
        if d >= cat.n() {
            return Err(Error::InvalidStructure(format!("degree {d} outside [0, {})", cat.n())));
        }
        dims[d] = 1;
    }
    GradedSpace::new(cat, &dims)
}
