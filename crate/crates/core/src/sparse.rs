//! Column-stored sparse matrices over Q(ζ_n).
//!
//! Column `c` holds the image of basis vector `c`, so composition and tensor
//! products read like the formulas they implement: `(g∘f)(e_c) = g(f(e_c))`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec;
use crate::scalar::{CyclotomicField, Cyclo};

/// Sparse vector: `(index, value)` pairs, strictly increasing in index, no zeros.
pub type SparseVec = Vec<(usize, Cyclo)>;

/// Sums terms with equal index and drops zeros.
pub fn collect_terms<I: IntoIterator<Item = (usize, Cyclo)>>(terms: I) -> SparseVec {
    let mut v: Vec<(usize, Cyclo)> = terms.into_iter().collect();
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += &x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

pub fn scale_vec(v: &[(usize, Cyclo)], c: &Cyclo) -> SparseVec {
    if c.is_one() {
        return v.to_vec();
    }
    v.iter()
        .map(|(i, x)| (*i, x * c))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// `a + c·b`.
pub fn axpy(a: &[(usize, Cyclo)], c: &Cyclo, b: &[(usize, Cyclo)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let bj = b.get(j).map(|t| t.0).unwrap_or(usize::MAX);
        if ai < bj {
            out.push(a[i].clone());
            i += 1;
        } else if bj < ai {
            out.push((bj, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + &(c * &b[j].1);
            if !s.is_zero() {
                out.push((ai, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn lookup(v: &[(usize, Cyclo)], idx: usize) -> Option<&Cyclo> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|p| &v[p].1)
}

/// Kronecker product of vectors under left-factor-major indexing.
pub fn kron_vec(a: &[(usize, Cyclo)], b: &[(usize, Cyclo)], b_dim: usize) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * b_dim + j, x * y));
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl std::fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                writeln!(f, "  ({r}, {c}) = {x}")?;
            }
        }
        write!(f, "]")
    }
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(field: &Arc<CyclotomicField>, n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Cyclo::one(field))]).collect(),
        }
    }

    /// Builds from columns; each column must be a valid [`SparseVec`] with
    /// indices below `rows`.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(r, x)| *r < rows && !x.is_zero())));
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, Cyclo)>) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); cols];
        for (r, c, x) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            buckets[c].push((r, x));
        }
        Ok(SparseMatrix {
            rows,
            cols,
            columns: buckets.into_iter().map(collect_terms).collect(),
        })
    }

    /// Permutation-like matrix sending column `c` to `coeff · e_{target(c)}`.
    pub fn monomial(rows: usize, entries: Vec<(usize, Cyclo)>) -> Self {
        let columns = entries
            .into_iter()
            .map(|(r, x)| if x.is_zero() { Vec::new() } else { vec![(r, x)] })
            .collect();
        Self::from_columns(rows, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Cyclo> {
        lookup(&self.columns[c], r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Entries in row-major order, the canonical serialization order.
    pub fn triplets(&self) -> Vec<(usize, usize, Cyclo)> {
        let mut t: Vec<(usize, usize, Cyclo)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x.clone())))
            .collect();
        t.sort_by_key(|(r, c, _)| (*r, *c));
        t
    }

    pub fn apply(&self, v: &[(usize, Cyclo)]) -> SparseVec {
        collect_terms(
            v.iter()
                .flat_map(|(c, x)| self.columns[*c].iter().map(move |(r, y)| (*r, y * x))),
        )
    }

    fn check_compose(&self, inner: &SparseMatrix) -> Result<()> {
        if self.cols != inner.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, inner.rows, inner.cols
            )));
        }
        Ok(())
    }

    /// `self ∘ inner`, parallel over the columns of `inner` when enabled.
    pub fn compose(&self, inner: &SparseMatrix) -> Result<Self> {
        self.check_compose(inner)?;
        let columns = exec::map_slice(&inner.columns, |col| self.apply(col));
        Ok(Self::from_columns(self.rows, columns))
    }

    /// Single-threaded `self ∘ inner`.
    pub fn compose_seq(&self, inner: &SparseMatrix) -> Result<Self> {
        self.check_compose(inner)?;
        let columns = inner.columns.iter().map(|col| self.apply(col)).collect();
        Ok(Self::from_columns(self.rows, columns))
    }

    /// Kronecker product under left-factor-major indexing.
    pub fn kron(&self, other: &SparseMatrix) -> Self {
        let (oc, or) = (other.cols, other.rows);
        let columns = exec::map_range(self.cols * oc, |c| {
            kron_vec(&self.columns[c / oc], &other.columns[c % oc], or)
        });
        Self::from_columns(self.rows * or, columns)
    }

    pub fn kron_seq(&self, other: &SparseMatrix) -> Self {
        let (oc, or) = (other.cols, other.rows);
        let columns = (0..self.cols * oc)
            .map(|c| kron_vec(&self.columns[c / oc], &other.columns[c % oc], or))
            .collect();
        Self::from_columns(self.rows * or, columns)
    }

    fn check_same_shape(&self, other: &SparseMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Cyclo, other: &SparseMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| axpy(a, c, b))
            .collect();
        Ok(Self::from_columns(self.rows, columns))
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let columns = self.columns.iter().map(|col| scale_vec(col, c)).collect();
        Self::from_columns(self.rows, columns)
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                cols[*r].push((c, x.clone()));
            }
        }
        Self::from_columns(self.cols, cols)
    }

    /// Restriction to the given rows and columns, re-indexed in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut row_pos = vec![usize::MAX; self.rows];
        for (i, r) in rows.iter().enumerate() {
            row_pos[*r] = i;
        }
        let columns = cols
            .iter()
            .map(|c| {
                collect_terms(
                    self.columns[*c]
                        .iter()
                        .filter(|(r, _)| row_pos[*r] != usize::MAX)
                        .map(|(r, x)| (row_pos[*r], x.clone())),
                )
            })
            .collect();
        Self::from_columns(rows.len(), columns)
    }

    /// First column where the two matrices differ.
    pub fn first_difference(&self, other: &SparseMatrix) -> Option<usize> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(0);
        }
        (0..self.cols).find(|&c| self.columns[c] != other.columns[c])
    }
}
