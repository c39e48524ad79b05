use braidcyc::builtin::braided_line;
use braidcyc::graded::{Category, GradedMap, GradedSpace, TensorIndexer};
use braidcyc::hopf::{braided_interleave, BraidedHopfAlgebra, ModularPair};
use braidcyc::report::{all_pass, first_failure};
use braidcyc::scalar::Cyclo;
use braidcyc::sparse::SparseMatrix;
use braidcyc::transmute::{czn_group_algebra, czn_r_matrix, transmute};
use proptest::prelude::*;

/// Interleaving by hand: `b_i` crosses `a_{i+1} … a_n` on its way left, each
/// crossing costing `ζ^{|a_j||b_i|}`.
fn interleave_oracle(a: &GradedSpace, b: &GradedSpace, n: usize) -> GradedMap {
    let f = a.field();
    let src_spaces: Vec<&GradedSpace> = std::iter::repeat_n(a, n).chain(std::iter::repeat_n(b, n)).collect();
    let tgt_spaces: Vec<&GradedSpace> = (0..n).flat_map(|_| [a, b]).collect();
    let src = GradedSpace::tensor_all(&src_spaces).unwrap();
    let tgt = GradedSpace::tensor_all(&tgt_spaces).unwrap();
    let src_ix = TensorIndexer::for_spaces(&src_spaces);
    let tgt_ix = TensorIndexer::for_spaces(&tgt_spaces);
    let entries = (0..src.dim())
        .map(|c| {
            let parts = src_ix.unflatten(c);
            let (xs, ys) = parts.split_at(n);
            let mut exponent = 0;
            for i in 0..n {
                for j in i + 1..n {
                    exponent += a.degree(xs[j]) * b.degree(ys[i]);
                }
            }
            let out: Vec<usize> = (0..n).flat_map(|i| [xs[i], ys[i]]).collect();
            (tgt_ix.flatten(&out), Cyclo::zeta_power(f, exponent as i64))
        })
        .collect();
    GradedMap::new(src, tgt.clone(), SparseMatrix::monomial(tgt.dim(), entries)).unwrap()
}

fn transmuted(n: usize) -> BraidedHopfAlgebra {
    transmute(&czn_group_algebra(n), &czn_r_matrix(n)).unwrap().hopf
}

fn builtins() -> Vec<(&'static str, BraidedHopfAlgebra)> {
    vec![
        ("Z2", transmuted(2)),
        ("Z3", transmuted(3)),
        ("exterior line", braided_line(18, 3).unwrap()),
        ("q = ζ_5 line", braided_line(5, 1).unwrap()),
        ("q = -1 line over Z4", braided_line(4, 1).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn interleave_matches_phase_permutation(
        (field_n, da, db, n) in (2usize..=7).prop_flat_map(|m| (
            Just(m),
            prop::collection::vec(0..m, 1..=3),
            prop::collection::vec(0..m, 1..=3),
            1usize..=3,
        )),
    ) {
        prop_assume!(da.len() + db.len() <= 4 || n <= 2);
        let cat = Category::anyonic(field_n);
        let a = GradedSpace::from_degrees(&cat, da);
        let b = GradedSpace::from_degrees(&cat, db);
        prop_assert_eq!(braided_interleave(&a, &b, n).unwrap(), interleave_oracle(&a, &b, n));
    }

    #[test]
    fn braided_lines_are_hopf(n in 1usize..=12, d in 0usize..12) {
        prop_assume!(d < n);
        let h = braided_line(n, d).unwrap();
        prop_assume!(h.dim() <= 6);
        let report = h.verify_axioms();
        prop_assert!(all_pass(&report), "{:?}", first_failure(&report));
    }
}

#[test]
fn power_multiplication_is_associative() {
    for (name, h) in builtins() {
        let top = if h.dim() <= 2 { 3 } else { 2 };
        for n in 1..=top {
            let mn = h.power_multiplication(n).unwrap();
            let id = h.id_power(n);
            let left = mn.compose(&mn.tensor(&id).unwrap()).unwrap();
            let right = mn.compose(&id.tensor(&mn).unwrap()).unwrap();
            assert_eq!(left, right, "{name}, n = {n}");
            let unit = h.power_unit(n).unwrap();
            assert_eq!(mn.compose(&unit.tensor(&id).unwrap()).unwrap(), id, "{name} left unit, n = {n}");
        }
    }
}

#[test]
fn twisted_antipode_reduces_to_antipode_for_counit() {
    for (name, h) in builtins() {
        let pair = ModularPair::trivial(&h);
        assert_eq!(&pair.twisted_antipode(&h).unwrap(), h.antipode(), "{name}");
        assert!(all_pass(&pair.verify(&h)), "{name}");
    }
}

#[test]
fn transmuted_group_algebras_are_hopf() {
    for n in 2..=6 {
        let h = transmuted(n);
        let report = h.verify_axioms();
        assert!(all_pass(&report), "n = {n}: {:?}", first_failure(&report));
    }
}

#[test]
fn group_like_stability_for_a_character_pair() {
    // δ(g^a) = ζ^a, σ = g on C[Z_3]
    let h = czn_group_algebra(3).hopf;
    let f = h.space().field().clone();
    let i = h.unit_object();
    let delta = GradedMap::new(
        h.space().clone(),
        i.clone(),
        SparseMatrix::from_triplets(1, 3, (0..3).map(|a| (0, a, Cyclo::zeta_power(&f, a as i64))).collect()).unwrap(),
    )
    .unwrap();
    let sigma = GradedMap::new(i.clone(), h.space().clone(), SparseMatrix::monomial(3, vec![(1, Cyclo::one(&f))])).unwrap();
    let pair = ModularPair::new(&h, delta, sigma.clone()).unwrap();
    assert!(all_pass(&pair.verify(&h)));
    assert_eq!(h.counit().compose(&sigma).unwrap(), GradedMap::identity(&i));
    assert_eq!(h.comul().compose(&sigma).unwrap(), sigma.tensor(&sigma).unwrap());
    // S̃(g^a) = ζ^a g^{-a}, so S̃² = id = Ad_σ on a commutative algebra
    assert_eq!(pair.involution_defect(&h).unwrap(), 0);
}

#[test]
fn iterated_coproducts_agree_both_ways() {
    for (name, h) in builtins() {
        for k in 0..=2 {
            assert_eq!(
                h.iterated_coproduct(k).unwrap(),
                h.iterated_coproduct_right(k).unwrap(),
                "{name}, k = {k}"
            );
        }
    }
}
