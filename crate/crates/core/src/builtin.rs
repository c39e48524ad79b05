//! Ready-made braided Hopf algebras beyond the group algebras.

use crate::error::{Error, Result};
use crate::graded::{Category, GradedMap, GradedSpace};
use crate::hopf::BraidedHopfAlgebra;
use crate::scalar::Cyclo;
use crate::sparse::SparseMatrix;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Gaussian binomials `[j choose i]_q` for `0 ≤ i ≤ j < k`.
fn q_binomials(q: &Cyclo, k: usize) -> Vec<Vec<Cyclo>> {
    let f = q.field().clone();
    let mut rows: Vec<Vec<Cyclo>> = Vec::with_capacity(k);
    for j in 0..k {
        let mut row = vec![Cyclo::one(&f); j + 1];
        for i in 1..j {
            let prev = &rows[j - 1];
            row[i] = &prev[i - 1] + &(&q.pow(i as u64) * &prev[i]);
        }
        rows.push(row);
    }
    rows
}

/// The braided line `Q(ζ)[x]/(x^k)` with `x` primitive in degree `d`, where
/// `q = ζ^{d²}` has order `k`. `Δ(x^j) = Σ [j choose i]_q x^i ⊗ x^{j-i}` and
/// `S(x^j) = (−1)^j q^{j(j−1)/2} x^j`.
///
/// `ψ_{H,H}² = id` exactly when `q = ±1`; `n = 18, d = 3` gives the exterior
/// line with `ψ(x⊗x) = −x⊗x`.
pub fn braided_line(n: usize, degree: usize) -> Result<BraidedHopfAlgebra> {
    if n == 0 || degree >= n {
        return Err(Error::InvalidStructure(format!("degree {degree} outside [0, {n})")));
    }
    let cat = Category::anyonic(n);
    let f = cat.field().clone();
    let k = n / gcd(n, (degree * degree) % n);
    let q = Cyclo::zeta_power(&f, (degree * degree) as i64);
    let degrees: Vec<usize> = (0..k).map(|j| (j * degree) % n).collect();
    let h = GradedSpace::from_degrees(&cat, degrees);
    let hh = h.tensor(&h)?;
    let i = GradedSpace::unit(&cat);
    let one = Cyclo::one(&f);

    let mul = SparseMatrix::from_triplets(
        k,
        k * k,
        (0..k)
            .flat_map(|a| (0..k - a).map(move |b| (a, b)))
            .map(|(a, b)| (a + b, a * k + b, one.clone()))
            .collect(),
    )?;
    let unit = SparseMatrix::monomial(k, vec![(0, one.clone())]);
    let binom = q_binomials(&q, k);
    let comul = SparseMatrix::from_triplets(
        k * k,
        k,
        (0..k)
            .flat_map(|j| (0..=j).map(move |a| (j, a)))
            .map(|(j, a)| (a * k + (j - a), j, binom[j][a].clone()))
            .collect(),
    )?;
    let counit = SparseMatrix::from_triplets(1, k, vec![(0, 0, one.clone())])?;
    let antipode = SparseMatrix::from_triplets(
        k,
        k,
        (0..k)
            .map(|j| {
                let c = q.pow((j * j.saturating_sub(1) / 2) as u64);
                (j, j, if j % 2 == 0 { c } else { -c })
            })
            .collect(),
    )?;
    BraidedHopfAlgebra::new(
        h.clone(),
        GradedMap::new(hh.clone(), h.clone(), mul)?,
        GradedMap::new(i.clone(), h.clone(), unit)?,
        GradedMap::new(h.clone(), hh, comul)?,
        GradedMap::new(h.clone(), i, counit)?,
        GradedMap::new(h.clone(), h, antipode)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::braid_symmetry_check;
    use crate::report::{all_pass, first_failure};

    #[test]
    fn exterior_line_is_hopf_with_symmetric_nonflip_braiding() {
        let h = braided_line(18, 3).unwrap();
        assert_eq!(h.dim(), 2);
        let report = h.verify_axioms();
        assert!(all_pass(&report), "{:?}", first_failure(&report));
        let s = braid_symmetry_check(h.space(), h.space()).unwrap();
        assert!(s.symmetric_pair);
        assert!(!s.flip);
    }

    #[test]
    fn quantum_line_at_fifth_root() {
        let h = braided_line(5, 1).unwrap();
        assert_eq!(h.dim(), 5);
        assert!(all_pass(&h.verify_axioms()));
        assert!(!braid_symmetry_check(h.space(), h.space()).unwrap().symmetric_pair);
    }

    #[test]
    fn degree_zero_line_is_trivial() {
        let h = braided_line(4, 0).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(all_pass(&h.verify_axioms()));
    }

    #[test]
    fn gaussian_binomials_at_q_minus_one() {
        let f = Category::anyonic(2).field().clone();
        let b = q_binomials(&Cyclo::from_int(&f, -1), 3);
        // [2 choose 1]_{-1} = 1 + q = 0
        assert!(b[2][1].is_zero());
    }
}
