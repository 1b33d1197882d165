//! Degree bookkeeping for free graded-commutative algebras: invariant
//! degrees of Weyl groups, shifts `V[m]`, Hilbert series as exact rational
//! functions, and the generator-degree identities of the equivariant
//! cohomology of `K_R` and `M_R` and of the Ext algebra.

mod molien;

pub use molien::{degrees_from_series, molien_series};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::realform::{FamilySpec, RealFormFamily};
use crate::rootdata::{weyl_order, CartanType, Family};

/// Multiset of generator degrees, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GradedDegrees {
    degrees: Vec<u32>,
}

impl GradedDegrees {
    pub fn new(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable();
        Self { degrees }
    }

    /// `count` linear generators (degree one).
    pub fn linear(count: usize) -> Self {
        Self::new(vec![1; count])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Each degree `d` becomes `m d`.
    pub fn shifted(&self, m: u32) -> Self {
        Self::new(self.degrees.iter().map(|d| d * m).collect())
    }

    /// Multiset union (tensor product of the algebras).
    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.degrees.clone();
        v.extend_from_slice(&other.degrees);
        Self::new(v)
    }

    pub fn product(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).product()
    }

    /// `prod 1 / (1 - t^d)`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let den = self.degrees.iter().fold(QPolynomial::one(), |acc, &d| {
            acc * QPolynomial::one_minus_power(d)
        });
        HilbertSeries::new(QPolynomial::one(), den).expect("nonzero denominator")
    }
}

impl fmt::Display for GradedDegrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Reduced rational function `num / den` in `t` with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    num: QPolynomial,
    den: QPolynomial,
}

impl HilbertSeries {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Inconsistent("zero denominator".into()));
        }
        let mut s = Self { num, den };
        s.reduce();
        Ok(s)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QPolynomial::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            self.num = self.num.div_exact(&g).expect("gcd divides");
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
        // scale so that gcd(content) = 1 and den has positive constant term
        let c = num_integer::Integer::gcd(&self.num.content(), &self.den.content());
        if !c.is_one() {
            self.num = self
                .num
                .div_exact(&QPolynomial::monomial(0, c.clone()))
                .expect("content");
            self.den = self
                .den
                .div_exact(&QPolynomial::monomial(0, c))
                .expect("content");
        }
        let lead = self
            .den
            .low_degree()
            .map(|d| self.den.coeff(d))
            .unwrap_or_else(BigInt::one);
        if lead.is_negative() {
            self.num = -self.num.clone();
            self.den = -self.den.clone();
        }
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::Inconsistent("division by the zero series".into()));
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        let g = self.den.gcd(&other.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&other.num * &a);
        Self::new(num, &a * &other.den).expect("nonzero")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero")
    }

    pub fn divide_by_integer(&self, c: &BigInt) -> Result<Self> {
        if c.sign() == num_bigint::Sign::NoSign {
            return Err(Error::ZeroScaling);
        }
        Self::new(self.num.clone(), self.den.scale(c))
    }

    /// Power-series coefficients `a_0 .. a_order`; requires `den(0) = +-1`.
    pub fn coefficients(&self, order: u32) -> Vec<BigInt> {
        self.num.series_div(&self.den, order)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            self.num.display_in("t"),
            self.den.display_in("t")
        )
    }
}

/// Fundamental invariant degrees of the Weyl group acting on the Cartan
/// subalgebra. `B0` has none; the torus `D1` has a single linear generator.
pub fn invariant_degrees(ty: CartanType) -> Result<GradedDegrees> {
    if !ty.is_supported() {
        return Err(Error::UnsupportedType(ty));
    }
    let k = ty.rank as u32;
    let v: Vec<u32> = match (ty.family, k) {
        (Family::B, 0) => vec![],
        (Family::D, 1) => vec![1],
        (Family::A, _) => (2..=k + 1).collect(),
        (Family::B, _) => (1..=k).map(|i| 2 * i).collect(),
        (Family::D, _) => (1..k).map(|i| 2 * i).chain([k]).collect(),
        (Family::G, 2) => vec![2, 6],
        (Family::F, 4) => vec![2, 6, 8, 12],
        (Family::E, 6) => vec![2, 5, 6, 8, 9, 12],
        _ => return Err(Error::UnsupportedType(ty)),
    };
    Ok(GradedDegrees::new(v))
}

/// `prod d_i = |W|`, `sum (d_i - 1) = |Phi^+|` and one degree per rank.
pub fn shephard_todd_check(ty: CartanType) -> Result<bool> {
    let d = invariant_degrees(ty)?;
    if ty.is_degenerate() {
        return Ok(d.len() == ty.rank && d.product() == weyl_order(ty)?);
    }
    let sum: u64 = d.degrees().iter().map(|&x| u64::from(x) - 1).sum();
    Ok(d.len() == ty.rank
        && d.product() == weyl_order(ty)?
        && sum == ty.positive_root_count()? as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma31Report {
    pub part1_k: bool,
    pub part1_m: bool,
    pub part2_m: bool,
    pub part2_k: bool,
}

impl Lemma31Report {
    pub fn all(&self) -> bool {
        self.part1_k && self.part1_m && self.part2_m && self.part2_k
    }
}

/// The four multisets compared by [`lemma31_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma31Multisets {
    pub m_side: GradedDegrees,
    pub m_target: GradedDegrees,
    pub k_side: GradedDegrees,
    pub k_target: GradedDegrees,
}

pub fn lemma31_multisets(fam: &RealFormFamily) -> Result<Lemma31Multisets> {
    let inv = fam.inventory();
    let n_x = fam.n_x();
    let l = invariant_degrees(inv.l_x_wedge.ty)?.shifted(2);
    Ok(Lemma31Multisets {
        m_side: invariant_degrees(inv.m.ty)?.shifted(2),
        m_target: GradedDegrees::linear(inv.g_x_dual.ty.rank)
            .shifted(n_x)
            .union(&l),
        k_side: invariant_degrees(inv.k.ty)?.shifted(2),
        k_target: invariant_degrees(inv.g_x_dual.ty)?.shifted(n_x).union(&l),
    })
}

/// Generator-degree form of the two isomorphisms for `M_R` and `K_R`.
///
/// Part 1 (`H^*_{M_R}` and `H^*_{K_R}` as Weyl-invariants of `t[2]`) is
/// checked through the Shephard–Todd identities of `W_M` and `W_K` together
/// with `prod d(W_K) / prod d(W_M) = |W_X|`. Part 2 compares degree
/// multisets.
pub fn lemma31_check(fam: &RealFormFamily) -> Result<Lemma31Report> {
    let inv = fam.inventory();
    let sets = lemma31_multisets(fam)?;
    let prod_k = invariant_degrees(inv.k.ty)?.product();
    let prod_m = invariant_degrees(inv.m.ty)?.product();
    let w_x = weyl_order(inv.g_x_dual.ty)?;
    let same_rank = inv.k.ty.rank == inv.m.ty.rank;
    Ok(Lemma31Report {
        part1_m: shephard_todd_check(inv.m.ty)? && same_rank,
        part1_k: shephard_todd_check(inv.k.ty)? && prod_m * w_x == prod_k,
        part2_m: sets.m_side == sets.m_target,
        part2_k: sets.k_side == sets.k_target,
    })
}

/// `dim g_X^vee` generators in degree `n_X`, plus the invariants of
/// `l_X^wedge[2]`.
pub fn ext_algebra_degrees(fam: &RealFormFamily) -> Result<GradedDegrees> {
    let inv = fam.inventory();
    let dim = inv.g_x_dual.ty.lie_algebra_dim()?;
    Ok(GradedDegrees::new(vec![fam.n_x(); dim])
        .union(&invariant_degrees(inv.l_x_wedge.ty)?.shifted(2)))
}

/// `HS(g[n_X]) HS(t[2]//W_K) / HS(t_X[n_X]//W_X)` as a reduced rational
/// function.
pub fn fiberproduct_series(fam: &RealFormFamily) -> Result<HilbertSeries> {
    let inv = fam.inventory();
    let n_x = fam.n_x();
    let g = GradedDegrees::new(vec![n_x; inv.g_x_dual.ty.lie_algebra_dim()?]).hilbert_series();
    let k = invariant_degrees(inv.k.ty)?.shifted(2).hilbert_series();
    let x = invariant_degrees(inv.g_x_dual.ty)?
        .shifted(n_x)
        .hilbert_series();
    g.mul(&k).div(&x)
}

/// Compares the fiber-product series against the given generator degrees.
pub fn ext_fiberproduct_hilbert_check_with(
    fam: &RealFormFamily,
    ext: &GradedDegrees,
) -> Result<bool> {
    Ok(fiberproduct_series(fam)? == ext.hilbert_series())
}

pub fn ext_fiberproduct_hilbert_check(fam: &RealFormFamily) -> Result<bool> {
    ext_fiberproduct_hilbert_check_with(fam, &ext_algebra_degrees(fam)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesJson {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedChecks {
    pub part1_k: bool,
    pub part1_m: bool,
    pub part2_m: bool,
    pub part2_k: bool,
    pub ext_hilbert: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedReport {
    pub family: FamilySpec,
    pub checks: GradedChecks,
    pub degree_multisets: Lemma31MultisetsWithExt,
    pub hilbert_series: SeriesJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma31MultisetsWithExt {
    #[serde(flatten)]
    pub lemma31: Lemma31Multisets,
    pub ext: GradedDegrees,
}

impl GradedReport {
    pub fn passed(&self) -> bool {
        let c = &self.checks;
        c.part1_k && c.part1_m && c.part2_m && c.part2_k && c.ext_hilbert
    }
}

pub fn graded_report(fam: &RealFormFamily) -> Result<GradedReport> {
    let l = lemma31_check(fam)?;
    let ext = ext_algebra_degrees(fam)?;
    let hs = ext.hilbert_series();
    Ok(GradedReport {
        family: fam.spec(),
        checks: GradedChecks {
            part1_k: l.part1_k,
            part1_m: l.part1_m,
            part2_m: l.part2_m,
            part2_k: l.part2_k,
            ext_hilbert: ext_fiberproduct_hilbert_check(fam)?,
        },
        degree_multisets: Lemma31MultisetsWithExt {
            lemma31: lemma31_multisets(fam)?,
            ext,
        },
        hilbert_series: SeriesJson {
            num: hs.numerator().display_in("t"),
            den: hs.denominator().display_in("t"),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn degs(v: &[u32]) -> GradedDegrees {
        GradedDegrees::new(v.to_vec())
    }

    #[test]
    fn degree_tables() {
        assert_eq!(invariant_degrees(CartanType::G2).unwrap(), degs(&[2, 6]));
        assert_eq!(
            invariant_degrees(CartanType::d(4)).unwrap(),
            degs(&[2, 4, 4, 6])
        );
        assert_eq!(invariant_degrees(CartanType::b(1)).unwrap(), degs(&[2]));
        assert_eq!(invariant_degrees(CartanType::b(0)).unwrap(), degs(&[]));
        assert_eq!(invariant_degrees(CartanType::d(1)).unwrap(), degs(&[1]));
        assert_eq!(
            invariant_degrees(CartanType::d(3)).unwrap(),
            degs(&[2, 3, 4])
        );
        assert!(invariant_degrees(CartanType::new(Family::E, 7)).is_err());
    }

    #[test]
    fn shephard_todd() {
        let mut tys = vec![
            CartanType::A1,
            CartanType::A2,
            CartanType::G2,
            CartanType::F4,
            CartanType::E6,
        ];
        tys.extend((0..=12).map(CartanType::b));
        tys.extend((1..=12).map(CartanType::d));
        for ty in tys {
            assert!(shephard_todd_check(ty).unwrap(), "{ty}");
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(degs(&[2, 3]).shifted(8), degs(&[16, 24]));
        assert_eq!(GradedDegrees::linear(2).shifted(8), degs(&[8, 8]));
        assert_eq!(degs(&[2, 6]).shifted(1), degs(&[2, 6]));
    }

    #[test]
    fn lemma31_examples() {
        let l = RealFormFamily::lorentz(5).unwrap();
        let s = lemma31_multisets(&l).unwrap();
        assert_eq!(s.k_side, degs(&[4, 8, 12, 16]));
        assert_eq!(s.k_target, degs(&[16, 4, 8, 12]));
        let o = RealFormFamily::octonionic();
        let s = lemma31_multisets(&o).unwrap();
        assert_eq!(s.k_side, degs(&[4, 12, 16, 24]));
        assert_eq!(s.k_target, degs(&[4, 12, 16, 24]));
        assert_eq!(s.m_side, degs(&[4, 8, 8, 12]));
        assert_eq!(s.m_target, degs(&[8, 8, 4, 12]));
        assert!(lemma31_check(&o).unwrap().all());
        for n in 2..=12 {
            let r = lemma31_check(&RealFormFamily::lorentz(n).unwrap()).unwrap();
            assert!(r.all(), "n={n}: {r:?}");
        }
    }

    #[test]
    fn ext_degrees() {
        let o = RealFormFamily::octonionic();
        let e = ext_algebra_degrees(&o).unwrap();
        assert_eq!(e, degs(&[8, 8, 8, 8, 8, 8, 8, 8, 4, 12]));
        let l = RealFormFamily::lorentz(5).unwrap();
        assert_eq!(ext_algebra_degrees(&l).unwrap(), degs(&[8, 8, 8, 4, 8, 12]));
        // trivial L_X^wedge
        let l2 = RealFormFamily::lorentz(2).unwrap();
        assert_eq!(ext_algebra_degrees(&l2).unwrap(), degs(&[2, 2, 2]));
    }

    #[test]
    fn ext_hilbert() {
        for fam in [
            RealFormFamily::octonionic(),
            RealFormFamily::lorentz(5).unwrap(),
        ] {
            assert!(ext_fiberproduct_hilbert_check(&fam).unwrap());
            let inv = fam.inventory();
            let without_l =
                GradedDegrees::new(vec![fam.n_x(); inv.g_x_dual.ty.lie_algebra_dim().unwrap()]);
            assert!(!ext_fiberproduct_hilbert_check_with(&fam, &without_l).unwrap());
        }
    }

    #[test]
    fn hilbert_series_arithmetic() {
        let a = degs(&[2, 3]).hilbert_series();
        let b = degs(&[2]).hilbert_series();
        let q = a.div(&b).unwrap();
        assert_eq!(q, degs(&[3]).hilbert_series());
        assert_eq!(q.mul(&b), a);
        // 1/(1-t) + t/(1-t) = (1+t)/(1-t)
        let one = degs(&[1]).hilbert_series();
        let t = HilbertSeries::new(QPolynomial::q(), QPolynomial::one_minus_power(1)).unwrap();
        let sum = one.add(&t);
        assert_eq!(sum.numerator().to_string(), "1 + q");
        assert_eq!(
            sum.coefficients(3),
            vec![1, 2, 2, 2]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert_eq!(
            format!("{}", degs(&[2]).hilbert_series()),
            "(1) / (1 - t^2)"
        );
    }

    #[test]
    fn report_json_shape() {
        let r = graded_report(&RealFormFamily::octonionic()).unwrap();
        assert!(r.passed());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["family"]["family"], "octonionic");
        assert_eq!(v["checks"]["part2_k"], true);
        assert_eq!(
            v["degree_multisets"]["k_side"],
            serde_json::json!([4, 12, 16, 24])
        );
        assert!(v["hilbert_series"]["den"].is_string());
    }

    proptest! {
        #[test]
        fn shift_composes(v in proptest::collection::vec(1u32..20, 0..6), a in 1u32..10, b in 1u32..10) {
            let d = GradedDegrees::new(v);
            prop_assert_eq!(d.shifted(a).shifted(b), d.shifted(a * b));
        }

        #[test]
        fn series_determines_degrees(v in proptest::collection::vec(1u32..8, 0..5)) {
            let d = GradedDegrees::new(v);
            let coeffs = d.hilbert_series().coefficients(16);
            prop_assert_eq!(degrees_from_series(&coeffs), d);
        }
    }
}
