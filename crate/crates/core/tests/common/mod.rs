#![allow(dead_code)]

use braidcyc::cocyclic::CocyclicModule;
use braidcyc::cohomology::{hochschild_differential, lambda};
use braidcyc::graded::GradedMap;
use braidcyc::hopf::BraidedHopfAlgebra;
use braidcyc::linalg::rank;
use braidcyc::sparse::SparseMatrix;
use braidcyc::transmute::{czn_group_algebra, czn_r_matrix, transmute};

pub fn transmuted(n: usize) -> BraidedHopfAlgebra {
    transmute(&czn_group_algebra(n), &czn_r_matrix(n)).unwrap().hopf
}

/// `b' = Σ_{i<n} (−1)^i δ_i: C^{n-1} → Cⁿ`, the last coface dropped.
fn b_prime(cm: &CocyclicModule, n: usize) -> GradedMap {
    let mut acc = GradedMap::zero(cm.space(n - 1), cm.space(n));
    for i in 0..n {
        let f = cm.face(n, i);
        acc = if i % 2 == 0 { acc.add(f).unwrap() } else { acc.sub(f).unwrap() };
    }
    acc
}

fn norm(cm: &CocyclicModule, q: usize) -> GradedMap {
    let l = lambda(cm, q);
    let mut acc = GradedMap::identity(cm.space(q));
    let mut p = acc.clone();
    for _ in 0..q {
        p = l.compose(&p).unwrap();
        acc = acc.add(&p).unwrap();
    }
    acc
}

/// Total differential of Connes' cyclic bicomplex `Tot^n → Tot^{n+1}`, where
/// `Tot^n = ⊕_{p=0..n} C^{n-p}` (column `p`). Even columns carry `b`, odd
/// ones `−b'`; `1 − λ` leaves an even column, `N` an odd one.
pub fn total_differential(cm: &CocyclicModule, n: usize) -> SparseMatrix {
    let dims = cm.dims();
    let offsets = |t: usize| -> Vec<usize> {
        let mut acc = 0;
        (0..=t)
            .map(|p| {
                let o = acc;
                acc += dims[t - p];
                o
            })
            .collect()
    };
    let (src, tgt) = (offsets(n), offsets(n + 1));
    let rows = (0..=n + 1).map(|p| dims[n + 1 - p]).sum();
    let cols = (0..=n).map(|p| dims[n - p]).sum();
    let mut triplets = Vec::new();
    let mut place = |m: &GradedMap, r0: usize, c0: usize| {
        for (r, c, x) in m.matrix().triplets() {
            triplets.push((r0 + r, c0 + c, x));
        }
    };
    for p in 0..=n {
        let q = n - p;
        let vertical = if p % 2 == 0 {
            hochschild_differential(cm, q + 1).unwrap()
        } else {
            let bp = b_prime(cm, q + 1);
            GradedMap::zero(bp.source(), bp.target()).sub(&bp).unwrap()
        };
        place(&vertical, tgt[p], src[p]);
        let horizontal = if p % 2 == 0 {
            GradedMap::identity(cm.space(q)).sub(&lambda(cm, q)).unwrap()
        } else {
            norm(cm, q)
        };
        place(&horizontal, tgt[p + 1], src[p]);
    }
    SparseMatrix::from_triplets(rows, cols, triplets).unwrap()
}

/// `HCⁿ` for `n < level` from the cyclic bicomplex.
pub fn bicomplex_hc(cm: &CocyclicModule) -> Vec<usize> {
    let level = cm.level();
    let d: Vec<SparseMatrix> = (0..level).map(|n| total_differential(cm, n)).collect();
    for n in 1..level {
        assert!(d[n].compose(&d[n - 1]).unwrap().is_zero(), "bicomplex d² ≠ 0 at {n}");
    }
    (0..level)
        .map(|n| {
            let below = if n == 0 { 0 } else { rank(&d[n - 1]) };
            d[n].cols() - rank(&d[n]) - below
        })
        .collect()
}
