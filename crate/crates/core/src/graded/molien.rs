use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{GradedDegrees, HilbertSeries};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::QPolynomial;
use crate::rootdata::RootSystem;

/// `det(1 - t w)` from the integer matrix of `w`.
fn det_one_minus(matrix: &[i64], r: usize) -> QPolynomial {
    let rows: Vec<Vec<i64>> = matrix.chunks(r).map(<[i64]>::to_vec).collect();
    let cp = RatMatrix::from_i64_rows(&rows).charpoly();
    // det(1 - t w) = t^r det(t^{-1} - w) = sum_k c_k t^{r-k}
    QPolynomial::from_terms(cp.iter().enumerate().map(|(k, c)| {
        assert!(c.is_integer());
        ((r - k) as u32, c.to_integer())
    }))
}

/// Molien series `(1/|W|) sum_w 1/det(1 - t w)` of the reflection
/// representation, from explicit Weyl group matrices.
pub fn molien_series(system: &RootSystem) -> Result<HilbertSeries> {
    let r = system.rank();
    let elements = system.weyl_elements()?;
    let mut classes: BTreeMap<Vec<BigInt>, (QPolynomial, u64)> = BTreeMap::new();
    for w in &elements {
        let p = det_one_minus(&w.matrix, r);
        let key: Vec<BigInt> = (0..=r as u32).map(|k| p.coeff(k)).collect();
        classes.entry(key).or_insert((p, 0)).1 += 1;
    }
    let mut total: Option<HilbertSeries> = None;
    for (p, count) in classes.into_values() {
        let term = HilbertSeries::new(QPolynomial::monomial(0, count), p)?;
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term),
        });
    }
    let total = total.ok_or(Error::EmptySamples)?;
    total.divide_by_integer(&BigInt::from(elements.len()))
}

/// Generator degrees of a free polynomial algebra from its Hilbert series
/// coefficients `a_0, a_1, ...`: peel off one generator at a time in the
/// lowest degree where the series still exceeds the product found so far.
pub fn degrees_from_series(coeffs: &[BigInt]) -> GradedDegrees {
    let order = coeffs.len();
    let mut found = vec![BigInt::from(0); order];
    if order > 0 {
        found[0] = BigInt::from(1);
    }
    let mut degrees = Vec::new();
    for d in 1..order {
        while coeffs[d] > found[d] {
            degrees.push(d as u32);
            // multiply by 1/(1 - t^d)
            for i in d..order {
                let prev = found[i - d].clone();
                found[i] += prev;
            }
        }
        if coeffs[d] < found[d] || coeffs[d].is_negative() {
            break;
        }
    }
    GradedDegrees::new(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::invariant_degrees;
    use crate::rootdata::CartanType;

    #[test]
    fn rank_one() {
        let a1 = RootSystem::new(CartanType::A1).unwrap();
        let m = molien_series(&a1).unwrap();
        assert_eq!(m, GradedDegrees::new(vec![2]).hilbert_series());
    }

    #[test]
    fn molien_matches_tables() {
        let mut tys = vec![
            CartanType::A1,
            CartanType::A2,
            CartanType::G2,
            CartanType::F4,
        ];
        tys.extend((1..=4).map(CartanType::b));
        tys.extend((2..=4).map(CartanType::d));
        for ty in tys {
            let sys = RootSystem::new(ty).unwrap();
            let m = molien_series(&sys).unwrap();
            let table = invariant_degrees(ty).unwrap();
            assert_eq!(m, table.hilbert_series(), "{ty}");
            assert_eq!(degrees_from_series(&m.coefficients(30)), table, "{ty}");
        }
    }
}
