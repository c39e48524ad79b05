use std::sync::Arc;

use braidcyc::graded::{
    braid_symmetry_check, braiding, flip, space_with_support, support_criterion, Category, GradedMap, GradedSpace,
};
use braidcyc::scalar::Cyclo;
use braidcyc::sparse::SparseMatrix;
use proptest::prelude::*;

fn space(cat: &Arc<Category>, degrees: &[usize]) -> GradedSpace {
    GradedSpace::from_degrees(cat, degrees.to_vec())
}

/// Degree-preserving `src → tgt` with entries `c·ζ^k` drawn from `seed`.
fn random_map(src: &GradedSpace, tgt: &GradedSpace, seed: &[(i64, i64)]) -> GradedMap {
    let f = src.field();
    let mut it = seed.iter().cycle();
    let mut triplets = Vec::new();
    for c in 0..src.dim() {
        for r in 0..tgt.dim() {
            if src.degree(c) == tgt.degree(r) {
                let &(a, k) = it.next().unwrap();
                if a != 0 {
                    triplets.push((r, c, &Cyclo::from_int(f, a) * &Cyclo::zeta_power(f, k)));
                }
            }
        }
    }
    GradedMap::new(src.clone(), tgt.clone(), SparseMatrix::from_triplets(tgt.dim(), src.dim(), triplets).unwrap()).unwrap()
}

fn degrees(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 1..=3)
}

fn seed() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-2i64..=2, 0i64..6), 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn braiding_is_natural(
        (n, dv, dv2, dw, dw2) in (2usize..=6).prop_flat_map(|n| (Just(n), degrees(n), degrees(n), degrees(n), degrees(n))),
        s1 in seed(),
        s2 in seed(),
    ) {
        let cat = Category::anyonic(n);
        let (v, v2, w, w2) = (space(&cat, &dv), space(&cat, &dv2), space(&cat, &dw), space(&cat, &dw2));
        let f = random_map(&v, &v2, &s1);
        let g = random_map(&w, &w2, &s2);
        let lhs = braiding(&v2, &w2).unwrap().compose(&f.tensor(&g).unwrap()).unwrap();
        let rhs = g.tensor(&f).unwrap().compose(&braiding(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hexagons_hold_strictly(
        (n, du, dv, dw) in (2usize..=7).prop_flat_map(|n| (Just(n), degrees(n), degrees(n), degrees(n))),
    ) {
        let cat = Category::anyonic(n);
        let (u, v, w) = (space(&cat, &du), space(&cat, &dv), space(&cat, &dw));
        let id = GradedMap::identity;
        let uv = u.tensor(&v).unwrap();
        let vw = v.tensor(&w).unwrap();

        // ψ_{U⊗V,W} = (ψ_{U,W}⊗1)(1⊗ψ_{V,W})
        let lhs = braiding(&uv, &w).unwrap();
        let rhs = braiding(&u, &w).unwrap().tensor(&id(&v)).unwrap()
            .compose(&id(&u).tensor(&braiding(&v, &w).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        // ψ_{U,V⊗W} = (1⊗ψ_{U,W})(ψ_{U,V}⊗1)
        let lhs = braiding(&u, &vw).unwrap();
        let rhs = id(&v).tensor(&braiding(&u, &w).unwrap()).unwrap()
            .compose(&braiding(&u, &v).unwrap().tensor(&id(&w)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn braiding_matches_phase_formula(
        (n, dv, dw) in (1usize..=8).prop_flat_map(|n| (Just(n), degrees(n), degrees(n))),
    ) {
        let cat = Category::anyonic(n);
        let (v, w) = (space(&cat, &dv), space(&cat, &dw));
        let psi = braiding(&v, &w).unwrap();
        for i in 0..v.dim() {
            for j in 0..w.dim() {
                let col = psi.column(i * w.dim() + j);
                let phase = Cyclo::zeta_power(v.field(), (dv[i] * dw[j]) as i64);
                prop_assert_eq!(col, &vec![(j * v.dim() + i, phase)]);
            }
        }
    }

    #[test]
    fn symmetric_mode_braiding_is_flip(
        (n, dv, dw) in (1usize..=8).prop_flat_map(|n| (Just(n), degrees(n), degrees(n))),
    ) {
        let cat = Category::symmetric(n);
        let (v, w) = (space(&cat, &dv), space(&cat, &dw));
        prop_assert_eq!(braiding(&v, &w).unwrap(), flip(&v, &w).unwrap());
    }

    #[test]
    fn support_criterion_agrees_with_matrices(
        (n, a, b) in (1usize..=12).prop_flat_map(|n| (
            Just(n),
            prop::collection::btree_set(0..n, 1..=3),
            prop::collection::btree_set(0..n, 1..=3),
        )),
    ) {
        let cat = Category::anyonic(n);
        let a: Vec<usize> = a.into_iter().collect();
        let b: Vec<usize> = b.into_iter().collect();
        let exact = braid_symmetry_check(
            &space_with_support(&cat, &a).unwrap(),
            &space_with_support(&cat, &b).unwrap(),
        ).unwrap();
        prop_assert_eq!(support_criterion(n, &a, &b).unwrap(), exact);
    }

    #[test]
    fn operations_preserve_degrees(
        (n, dv, dw) in (2usize..=6).prop_flat_map(|n| (Just(n), degrees(n), degrees(n))),
        s1 in seed(),
        s2 in seed(),
    ) {
        let cat = Category::anyonic(n);
        let (v, w) = (space(&cat, &dv), space(&cat, &dw));
        let f = random_map(&v, &v, &s1);
        let g = random_map(&w, &w, &s2);
        let fg = f.tensor(&g).unwrap();
        let psi = braiding(&v, &w).unwrap();
        for m in [&fg, &psi, &psi.compose(&fg).unwrap(), &fg.add(&fg).unwrap(), &fg.power(3).unwrap()] {
            prop_assert!(m.is_degree_preserving());
        }
    }
}

#[test]
fn tensor_dims_follow_degree_sums() {
    let cat = Category::anyonic(3);
    let v = GradedSpace::new(&cat, &[1, 1, 0]).unwrap();
    let w = GradedSpace::new(&cat, &[0, 1, 0]).unwrap();
    assert_eq!(v.tensor(&w).unwrap().dims(), vec![0, 1, 1]);
    let cat = Category::anyonic(2);
    let v = GradedSpace::new(&cat, &[1, 1]).unwrap();
    assert_eq!(v.tensor(&v).unwrap().dims(), vec![2, 2]);
    let i = GradedSpace::unit(&cat);
    assert_eq!(i.tensor(&i).unwrap(), i);
}

#[test]
fn non_degree_preserving_matrix_is_rejected() {
    let cat = Category::anyonic(2);
    let v = GradedSpace::new(&cat, &[1, 1]).unwrap();
    let m = SparseMatrix::from_triplets(2, 2, vec![(1, 0, Cyclo::one(cat.field()))]).unwrap();
    assert!(GradedMap::new(v.clone(), v, m).is_err());
}
