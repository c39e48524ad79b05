//! Exact Gauss–Jordan elimination over Q(ζ_n).
//!
//! [`Echelon`] keeps a subspace in reduced row echelon form: every stored
//! vector has a pivot (its first nonzero index) equal to 1, and no other stored
//! vector has a nonzero entry at that pivot. The pivot rule is fixed (lowest
//! index first), so bases and ranks are reproducible.

use crate::error::{Error, Result};
use crate::scalar::Cyclo;
use crate::sparse::{axpy, lookup, scale_vec, SparseMatrix, SparseVec};

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    vec: SparseVec,
    // linear combination of inserted inputs that produced `vec`
    tag: SparseVec,
}

/// Outcome of inserting a vector.
#[derive(Debug)]
pub enum Insert {
    /// The vector was independent; it now owns this pivot.
    Pivot(usize),
    /// The vector was dependent; the combination of inputs (tagged) that
    /// reduces to zero.
    Dependent(SparseVec),
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Span of the given vectors.
    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> Self {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v.clone(), Vec::new());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    /// The reduced basis, ordered by pivot.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.iter().map(|r| r.vec.clone()).collect()
    }

    fn reduce_tagged(&self, mut v: SparseVec, mut tag: SparseVec) -> (SparseVec, SparseVec) {
        for row in &self.rows {
            if let Some(c) = lookup(&v, row.pivot) {
                let c = -c;
                v = axpy(&v, &c, &row.vec);
                if !row.tag.is_empty() || !tag.is_empty() {
                    tag = axpy(&tag, &c, &row.tag);
                }
            }
        }
        (v, tag)
    }

    /// Remainder of `v` after reduction; zero iff `v` lies in the span.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_tagged(v, Vec::new()).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Inserts `v`, carrying `tag` (typically the input's own coordinates)
    /// through every row operation.
    pub fn insert(&mut self, v: SparseVec, tag: SparseVec) -> Insert {
        let (v, tag) = self.reduce_tagged(v, tag);
        if v.is_empty() {
            return Insert::Dependent(tag);
        }
        let pivot = v[0].0;
        let inv = v[0].1.inv().expect("pivot entry is nonzero");
        let v = scale_vec(&v, &inv);
        let tag = scale_vec(&tag, &inv);
        for row in self.rows.iter_mut() {
            if let Some(c) = lookup(&row.vec, pivot) {
                let c = -c;
                row.vec = axpy(&row.vec, &c, &v);
                if !tag.is_empty() || !row.tag.is_empty() {
                    row.tag = axpy(&row.tag, &c, &tag);
                }
            }
        }
        let pos = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(pos, Row { pivot, vec: v, tag });
        Insert::Pivot(pivot)
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    Echelon::from_vectors(m.columns()).rank()
}

/// Canonical (reduced echelon) basis of the null space, in source coordinates.
pub fn kernel(m: &SparseMatrix) -> Vec<SparseVec> {
    let field = match m.columns().iter().flatten().next() {
        Some((_, x)) => x.field().clone(),
        None => {
            return Vec::new();
        }
    };
    let mut e = Echelon::new();
    let mut relations = Vec::new();
    for (c, col) in m.columns().iter().enumerate() {
        if let Insert::Dependent(rel) = e.insert(col.clone(), vec![(c, Cyclo::one(&field))]) {
            relations.push(rel);
        }
    }
    Echelon::from_vectors(&relations).basis()
}

/// Kernel basis that also handles the all-zero matrix (needs the field).
pub fn kernel_with_field(m: &SparseMatrix, field: &std::sync::Arc<crate::scalar::CyclotomicField>) -> Vec<SparseVec> {
    if m.is_zero() {
        return (0..m.cols()).map(|c| vec![(c, Cyclo::one(field))]).collect();
    }
    kernel(m)
}

/// Inverse of a square matrix.
pub fn inverse(m: &SparseMatrix, field: &std::sync::Arc<crate::scalar::CyclotomicField>) -> Result<SparseMatrix> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch(format!(
            "inverse of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let mut e = Echelon::new();
    for (c, col) in m.columns().iter().enumerate() {
        if let Insert::Dependent(_) = e.insert(col.clone(), vec![(c, Cyclo::one(field))]) {
            return Err(Error::InvalidStructure("matrix is singular".into()));
        }
    }
    // full rank: row with pivot p is e_p and its tag t satisfies m·t = e_p
    let columns = e.rows.into_iter().map(|r| r.tag).collect();
    Ok(SparseMatrix::from_columns(m.cols(), columns))
}

/// Quotient of `F^dim` by a subspace: basis = non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    dim: usize,
    relations: Echelon,
    complement: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Quotient {
    pub fn new(dim: usize, relations: Echelon) -> Self {
        let mut is_pivot = vec![false; dim];
        for p in relations.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..dim).filter(|&i| !is_pivot[i]).collect();
        let mut position = vec![None; dim];
        for (k, &i) in complement.iter().enumerate() {
            position[i] = Some(k);
        }
        Quotient {
            dim,
            relations,
            complement,
            position,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Ambient basis indices whose classes form the quotient basis.
    pub fn lifts(&self) -> &[usize] {
        &self.complement
    }

    pub fn relations(&self) -> &Echelon {
        &self.relations
    }

    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: SparseVec) -> SparseVec {
        self.relations
            .reduce(v)
            .into_iter()
            .map(|(i, x)| (self.position[i].expect("reduced vector has no pivot entries"), x))
            .collect()
    }

    pub fn projection(&self, field: &std::sync::Arc<crate::scalar::CyclotomicField>) -> SparseMatrix {
        let columns = (0..self.dim)
            .map(|i| self.project(vec![(i, Cyclo::one(field))]))
            .collect();
        SparseMatrix::from_columns(self.dim(), columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CyclotomicField;

    fn m(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix {
        let f = CyclotomicField::new(3);
        SparseMatrix::from_triplets(
            rows,
            cols,
            entries.iter().map(|&(r, c, x)| (r, c, Cyclo::from_int(&f, x))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_kernel_agree() {
        // columns: (1,2), (2,4), (0,1)
        let a = m(2, 3, &[(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 4), (1, 2, 1)]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a);
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).is_empty());
    }

    #[test]
    fn zero_and_identity() {
        let f = CyclotomicField::new(3);
        let z = SparseMatrix::zeros(3, 3);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_with_field(&z, &f).len(), 3);
        let id = SparseMatrix::identity(&f, 3);
        assert_eq!(rank(&id), 3);
        assert!(kernel(&id).is_empty());
        assert_eq!(inverse(&id, &f).unwrap(), id);
    }

    #[test]
    fn inverse_over_cyclotomic_entries() {
        let f = CyclotomicField::new(5);
        let z = Cyclo::zeta_power(&f, 1);
        let a = SparseMatrix::from_triplets(
            2,
            2,
            vec![(0, 0, z.clone()), (0, 1, Cyclo::one(&f)), (1, 1, &z + &Cyclo::one(&f))],
        )
        .unwrap();
        let ai = inverse(&a, &f).unwrap();
        assert_eq!(a.compose(&ai).unwrap(), SparseMatrix::identity(&f, 2));
        assert_eq!(ai.compose(&a).unwrap(), SparseMatrix::identity(&f, 2));
        let singular = m(2, 2, &[(0, 0, 1), (0, 1, 1)]);
        assert!(inverse(&singular, &CyclotomicField::new(3)).is_err());
    }

    #[test]
    fn quotient_projection_kills_relations() {
        let f = CyclotomicField::new(3);
        let rel = vec![(0, Cyclo::one(&f)), (2, Cyclo::from_int(&f, -1))];
        let q = Quotient::new(3, Echelon::from_vectors([&rel]));
        assert_eq!(q.dim(), 2);
        assert_eq!(q.lifts(), &[1, 2]);
        assert!(q.project(rel).is_empty());
        let p = q.projection(&f);
        assert_eq!(p.rows(), 2);
        assert_eq!(p.get(1, 0), Some(&Cyclo::one(&f)));
    }
}
