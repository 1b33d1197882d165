//! The section `e^T = p^T + e` into the upper-triangular Borel of
//! `sl2`/`sl3`, regularity of its values, the `G_m`-equivariance identity
//! and the map `nu(g, t) = (Ad_{g^{-1}} e^T(t), t)`.
//!
//! `p^T` is the composite `t -> t//W_M -> t_X^vee`. In coordinates:
//!
//! * Lorentz, `t` of rank `n-1`: `s = t_1 ... t_{n-1}` and `p^T(t) =
//!   diag(s, -s)`.
//! * Octonionic, `t` the Cartan of `F4` in the orthonormal basis: the three
//!   quartic `W(D4)`-invariants `f_V = sum_{+-e_i} <w,t>^4` and
//!   `f_+-` (sums over the two half-spin weight sets) permuted by triality,
//!   minus their mean.
//!
//! Both are homogeneous of degree `n_X / 2`.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{frac, rat, RatMatrix};
use crate::poly::LaurentPoly;
use crate::realform::{FamilySpec, RealFormFamily};

/// Commutative ring in which the section can be evaluated.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: &BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_rat(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Scalar for LaurentPoly {
    fn from_rat(r: &BigRational) -> Self {
        LaurentPoly::constant(r.clone())
    }
}

/// Point of the Cartan `t` of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanPoint {
    #[serde(serialize_with = "ser_rats")]
    pub t: Vec<BigRational>,
}

fn ser_rats<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl CartanPoint {
    pub fn new(t: Vec<BigRational>) -> Self {
        Self { t }
    }

    pub fn from_i64(t: &[i64]) -> Self {
        Self::new(t.iter().map(|&x| rat(x)).collect())
    }
}

/// Trace-zero square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracelessMatrix(RatMatrix);

impl TracelessMatrix {
    pub fn new(m: RatMatrix) -> Result<Self> {
        if !m.is_square() || !m.trace().is_zero() {
            return Err(Error::Inconsistent(
                "matrix is not square and traceless".into(),
            ));
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.size();
        (0..n).all(|r| (0..r).all(|c| self.0[(r, c)].is_zero()))
    }

    /// Coefficients of the characteristic polynomial.
    pub fn chevalley_invariants(&self) -> Vec<BigRational> {
        self.0.charpoly()
    }
}

/// Rank of `K`'s torus for the family.
pub fn cartan_rank(fam: &RealFormFamily) -> usize {
    fam.inventory().k.ty.rank
}

/// Size of the matrices of `g_X^vee`.
pub fn matrix_size(fam: &RealFormFamily) -> usize {
    fam.dual_system().rank() + 1
}

fn pow<S: Scalar>(x: &S, k: u32) -> S {
    (0..k).fold(S::one(), |acc, _| acc * x.clone())
}

/// Half-spin weights `(+-1/2, ..., +-1/2)` with an even (`true`) or odd
/// number of minus signs.
fn half_spin(even: bool) -> Vec<[i64; 4]> {
    (0..16u32)
        .filter(|m| (m.count_ones() % 2 == 0) == even)
        .map(|m| std::array::from_fn(|i| if m >> i & 1 == 1 { -1 } else { 1 }))
        .collect()
}

/// Diagonal entries of `p^T(t)`.
pub fn p_t_generic<S: Scalar>(fam: &RealFormFamily, t: &[S]) -> Result<Vec<S>> {
    let r = cartan_rank(fam);
    if t.len() != r {
        return Err(Error::InvalidFamily(format!(
            "{} needs a Cartan point of rank {r}, got {}",
            fam.spec(),
            t.len()
        )));
    }
    Ok(match fam.spec() {
        FamilySpec::Lorentz { .. } => {
            let s = t.iter().fold(S::one(), |acc, x| acc * x.clone());
            vec![s.clone(), -s]
        }
        FamilySpec::Octonionic => {
            let fourth = |w: &[S]| {
                pow(
                    &w.iter()
                        .zip(t)
                        .fold(S::zero(), |a, (c, x)| a + c.clone() * x.clone()),
                    4,
                )
            };
            let two = S::from_rat(&rat(2));
            let f_v = t.iter().fold(S::zero(), |a, x| a + two.clone() * pow(x, 4));
            let spin = |even: bool| {
                half_spin(even).iter().fold(S::zero(), |a, w| {
                    let w: Vec<S> = w.iter().map(|&c| S::from_rat(&frac(c, 2))).collect();
                    a + fourth(&w)
                })
            };
            let f_p = spin(true);
            let f_m = spin(false);
            let mean = (f_v.clone() + f_p.clone() + f_m.clone()) * S::from_rat(&frac(1, 3));
            vec![f_v - mean.clone(), f_p - mean.clone(), f_m - mean]
        }
    })
}

pub fn p_t(fam: &RealFormFamily, pt: &CartanPoint) -> Result<Vec<BigRational>> {
    p_t_generic(fam, &pt.t)
}

/// `diag(d) + e` as a dense matrix, `e` the superdiagonal regular nilpotent.
pub fn section_from_diagonal<S: Scalar>(d: &[S]) -> Vec<Vec<S>> {
    let n = d.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        d[i].clone()
                    } else if j == i + 1 {
                        S::one()
                    } else {
                        S::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn e_section(fam: &RealFormFamily, pt: &CartanPoint) -> Result<TracelessMatrix> {
    let rows = section_from_diagonal(&p_t(fam, pt)?);
    TracelessMatrix::new(RatMatrix::from_rows(rows))
}

/// Basis of `sl_n`: off-diagonal units, then `E_kk - E_{k+1,k+1}`.
fn sl_basis(n: usize) -> Vec<RatMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = RatMatrix::zeros(n, n);
                m[(i, j)] = BigRational::one();
                out.push(m);
            }
        }
    }
    for k in 0..n - 1 {
        let mut m = RatMatrix::zeros(n, n);
        m[(k, k)] = BigRational::one();
        m[(k + 1, k + 1)] = -BigRational::one();
        out.push(m);
    }
    out
}

/// Matrix of `y -> [x, y]` from `sl_n` into `gl_n` (flattened).
fn ad_matrix(x: &RatMatrix) -> (RatMatrix, Vec<RatMatrix>) {
    let n = x.rows();
    let basis = sl_basis(n);
    let mut ad = RatMatrix::zeros(n * n, basis.len());
    for (c, b) in basis.iter().enumerate() {
        let br = x.bracket(b);
        for i in 0..n {
            for j in 0..n {
                ad[(i * n + j, c)] = br[(i, j)].clone();
            }
        }
    }
    (ad, basis)
}

/// Dimension of the centralizer of `x` in `sl_n`.
pub fn centralizer_dimension(x: &TracelessMatrix) -> usize {
    ad_matrix(x.matrix()).0.nullity()
}

/// Basis of the centralizer of `x` in `sl_n`.
pub fn centralizer_basis(x: &TracelessMatrix) -> Vec<RatMatrix> {
    let (ad, basis) = ad_matrix(x.matrix());
    let n = x.size();
    ad.kernel()
        .into_iter()
        .map(|v| {
            v.iter()
                .zip(&basis)
                .fold(RatMatrix::zeros(n, n), |acc, (c, b)| &acc + &b.scale(c))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub family: FamilySpec,
    pub samples: usize,
    pub expected_dim: usize,
    pub failures: Vec<String>,
    pub abelian: bool,
}

impl RegularityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.abelian
    }
}

/// Centralizer dimension of `e^T(t)` equals the rank of `g_X^vee` at every
/// sample; the centralizer is also checked to be abelian.
pub fn regularity_scan(fam: &RealFormFamily, samples: &[CartanPoint]) -> Result<RegularityReport> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let expected = fam.dual_system().rank();
    let results: Vec<(Option<String>, bool)> = samples
        .par_iter()
        .map(|pt| {
            let x = e_section(fam, pt)?;
            let basis = centralizer_basis(&x);
            let abelian = basis.iter().all(|a| {
                basis
                    .iter()
                    .all(|b| a.bracket(b) == RatMatrix::zeros(x.size(), x.size()))
            });
            let fail = (basis.len() != expected).then(|| {
                let t: Vec<String> = pt.t.iter().map(ToString::to_string).collect();
                format!("t=({}) centralizer dimension {}", t.join(","), basis.len())
            });
            Ok((fail, abelian))
        })
        .collect::<Result<_>>()?;
    Ok(RegularityReport {
        family: fam.spec(),
        samples: samples.len(),
        expected_dim: expected,
        failures: results.iter().filter_map(|(f, _)| f.clone()).collect(),
        abelian: results.iter().all(|(_, a)| *a),
    })
}

/// Exponents `h_i` of the cocharacter `n_X rho_X^vee` as a diagonal matrix
/// `diag(x^{h_1}, ..., x^{h_n})`.
pub fn cocharacter_exponents(fam: &RealFormFamily) -> Result<Vec<i64>> {
    let c = fam.dual_system().rho_check().coords;
    let n = c.len() + 1;
    let n_x = rat(i64::from(fam.n_x()));
    (0..n)
        .map(|j| {
            let hi = if j < c.len() {
                c[j].clone()
            } else {
                BigRational::zero()
            };
            let lo = if j > 0 {
                c[j - 1].clone()
            } else {
                BigRational::zero()
            };
            let h = (hi - lo) * &n_x;
            if !h.is_integer() {
                return Err(Error::Inconsistent(format!("cocharacter exponent {h}")));
            }
            i64::try_from(h.to_integer()).map_err(|_| Error::Overflow(h.to_string()))
        })
        .collect()
}

/// `Ad_{(n_X rho^vee)(x^{-1})} e^T(x^{-2} t) == x^{-n_X} e^T(t)` in any
/// scalar ring; `x_pow(k)` must return `x^k`.
pub fn gm_equivariance_generic<S: Scalar>(
    fam: &RealFormFamily,
    x_pow: impl Fn(i64) -> S,
    t: &[S],
) -> Result<bool> {
    let h = cocharacter_exponents(fam)?;
    let scaled: Vec<S> = t.iter().map(|v| v.clone() * x_pow(-2)).collect();
    let lhs = section_from_diagonal(&p_t_generic(fam, &scaled)?);
    let rhs = section_from_diagonal(&p_t_generic(fam, t)?);
    let n = h.len();
    let factor = x_pow(-i64::from(fam.n_x()));
    for i in 0..n {
        for j in 0..n {
            // conjugation by diag(x^{-h}) scales entry (i,j) by x^{h_j - h_i}
            let l = lhs[i][j].clone() * x_pow(h[j] - h[i]);
            let r = rhs[i][j].clone() * factor.clone();
            if l != r {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn gm_equivariance_check(
    fam: &RealFormFamily,
    x: &BigRational,
    pt: &CartanPoint,
) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroScaling);
    }
    let x_pow = |k: i64| {
        let p = pow(x, k.unsigned_abs() as u32);
        if k < 0 {
            p.recip()
        } else {
            p
        }
    };
    gm_equivariance_generic(fam, x_pow, &pt.t)
}

/// The identity with `x` a formal variable (Laurent polynomials).
pub fn gm_equivariance_symbolic(fam: &RealFormFamily, pt: &CartanPoint) -> Result<bool> {
    let t: Vec<LaurentPoly> = pt.t.iter().map(LaurentPoly::from_rat).collect();
    gm_equivariance_generic(fam, LaurentPoly::power, &t)
}

/// `nu(g, t) = (g^{-1} e^T(t) g, t)` for `det g = 1`.
pub fn nu_map(
    fam: &RealFormFamily,
    g: &RatMatrix,
    pt: &CartanPoint,
) -> Result<(TracelessMatrix, CartanPoint)> {
    let n = matrix_size(fam);
    if g.rows() != n || !g.is_square() {
        return Err(Error::NotSpecialLinear(format!(
            "expected a {n}x{n} matrix"
        )));
    }
    let det = g.determinant();
    if !det.is_one() {
        return Err(Error::NotSpecialLinear(det.to_string()));
    }
    let inv = g.inverse().expect("determinant one");
    let e = e_section(fam, pt)?;
    let conj = &(&inv * e.matrix()) * g;
    Ok((TracelessMatrix::new(conj)?, pt.clone()))
}

/// Random rational in `[-20, 20]` with denominator at most 9.
pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    frac(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

pub fn random_point(fam: &RealFormFamily, rng: &mut ChaCha8Rng) -> CartanPoint {
    CartanPoint::new(
        (0..cartan_rank(fam))
            .map(|_| random_rational(rng))
            .collect(),
    )
}

/// Random element of `SL_n(Q)`: a product of elementary matrices and a
/// diagonal matrix of determinant one.
pub fn random_sl(n: usize, rng: &mut ChaCha8Rng) -> RatMatrix {
    let mut g = RatMatrix::identity(n);
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut e = RatMatrix::identity(n);
        e[(i, j)] = random_rational(rng);
        g = &g * &e;
    }
    let mut d = RatMatrix::identity(n);
    let a = frac(rng.gen_range(1..=5), rng.gen_range(1..=5));
    d[(0, 0)] = a.clone();
    d[(n - 1, n - 1)] = a.recip();
    &g * &d
}

/// Points where `p^T(t)` is degenerate: `t = 0` (nilpotent) and points with
/// repeated eigenvalues.
pub fn degenerate_points(fam: &RealFormFamily) -> Vec<CartanPoint> {
    let r = cartan_rank(fam);
    let mut out = vec![CartanPoint::from_i64(&vec![0; r])];
    match fam.spec() {
        FamilySpec::Lorentz { .. } => {
            // one zero coordinate kills s
            let mut t = vec![3; r];
            t[0] = 0;
            out.push(CartanPoint::from_i64(&t));
        }
        FamilySpec::Octonionic => {
            for t in [[1, 0, 0, 0], [0, 0, 2, 0], [1, 1, 0, 0], [1, 1, 1, 1]] {
                out.push(CartanPoint::from_i64(&t));
            }
        }
    }
    out
}

/// Deterministic sample set: the degenerate points followed by random
/// points up to `count`.
pub fn sample_points(fam: &RealFormFamily, count: usize, seed: u64) -> Vec<CartanPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = degenerate_points(fam);
    while out.len() < count {
        out.push(random_point(fam, &mut rng));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub family: FamilySpec,
    pub samples: usize,
    pub failures: Vec<String>,
    pub abelian: bool,
    pub equivariance: bool,
    pub equivariance_grid: usize,
    pub equivariance_symbolic: bool,
    pub nu_charpoly: bool,
    pub nu_samples: usize,
}

impl CentralizerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.abelian
            && self.equivariance
            && self.equivariance_symbolic
            && self.nu_charpoly
    }
}

/// Twenty nonzero rationals used as the `x` axis of the equivariance grid.
pub fn grid_scalars() -> Vec<BigRational> {
    (1..=10).flat_map(|k| [frac(k, 3), frac(-k, 2)]).collect()
}

/// Regularity on `samples` points, equivariance on a 20 x 20 grid (twenty
/// scalars against twenty points) plus once symbolically, and `nu` on 50
/// random pairs.
pub fn centralizer_suite(
    fam: &RealFormFamily,
    samples: usize,
    seed: u64,
) -> Result<CentralizerReport> {
    let points = sample_points(fam, samples, seed);
    let reg = regularity_scan(fam, &points)?;
    let grid_points = sample_points(fam, 20, seed.wrapping_add(1));
    let scalars = grid_scalars();
    let checks: Vec<bool> = scalars
        .par_iter()
        .map(|x| {
            grid_points
                .iter()
                .map(|pt| gm_equivariance_check(fam, x, pt))
                .collect::<Result<Vec<bool>>>()
                .map(|v| v.into_iter().all(|b| b))
        })
        .collect::<Result<_>>()?;
    let symbolic = gm_equivariance_symbolic(fam, &grid_points[grid_points.len() - 1])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    let n = matrix_size(fam);
    let mut nu_ok = true;
    let nu_samples = 50;
    for _ in 0..nu_samples {
        let g = random_sl(n, &mut rng);
        let pt = random_point(fam, &mut rng);
        let (y, back) = nu_map(fam, &g, &pt)?;
        let x = e_section(fam, &pt)?;
        nu_ok &= back == pt && y.chevalley_invariants() == x.chevalley_invariants();
    }
    Ok(CentralizerReport {
        family: fam.spec(),
        samples: reg.samples,
        failures: reg.failures,
        abelian: reg.abelian,
        equivariance: checks.iter().all(|&b| b),
        equivariance_grid: scalars.len() * grid_points.len(),
        equivariance_symbolic: symbolic,
        nu_charpoly: nu_ok,
        nu_samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sl2_from(s: BigRational) -> TracelessMatrix {
        TracelessMatrix::new(RatMatrix::from_rows(section_from_diagonal(&[
            s.clone(),
            -s,
        ])))
        .unwrap()
    }

    #[test]
    fn section_shapes() {
        let l = RealFormFamily::lorentz(3).unwrap();
        let x = e_section(&l, &CartanPoint::from_i64(&[2, 3])).unwrap();
        assert_eq!(
            x.matrix(),
            &RatMatrix::from_i64_rows(&[vec![6, 1], vec![0, -6]])
        );
        let x = e_section(&l, &CartanPoint::from_i64(&[0, 0])).unwrap();
        assert_eq!(
            x.matrix(),
            &RatMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]])
        );
        let o = RealFormFamily::octonionic();
        let x = e_section(&o, &CartanPoint::from_i64(&[1, 2, 0, -1])).unwrap();
        assert!(x.is_upper_triangular());
        assert!(x.matrix().trace().is_zero());
        assert_eq!(x.matrix()[(0, 1)], rat(1));
        assert_eq!(x.matrix()[(1, 2)], rat(1));
        assert!(e_section(&o, &CartanPoint::from_i64(&[1, 2])).is_err());
    }

    #[test]
    fn p_t_values() {
        let o = RealFormFamily::octonionic();
        // t = e_1: f_V = 2, f_+ = f_- = 8 / 16
        let d = p_t(&o, &CartanPoint::from_i64(&[1, 0, 0, 0])).unwrap();
        assert_eq!(d, vec![frac(1, 1), frac(-1, 2), frac(-1, 2)]);
        let l = RealFormFamily::lorentz(5).unwrap();
        let d = p_t(&l, &CartanPoint::from_i64(&[1, 2, 3, 4])).unwrap();
        assert_eq!(d, vec![rat(24), rat(-24)]);
    }

    // Simple reflections of W(F4) (orthonormal coordinates) permute the
    // entries of p^T; reflections in W(D4) fix them.
    #[test]
    fn p_t_is_weyl_compatible() {
        let o = RealFormFamily::octonionic();
        let t: Vec<BigRational> = [3, -1, 2, 5].iter().map(|&x| frac(x, 7)).collect();
        let base = p_t(&o, &CartanPoint::new(t.clone())).unwrap();
        let mut sorted_base = base.clone();
        sorted_base.sort();
        let reflect = |t: &[BigRational], v: [i64; 4]| -> Vec<BigRational> {
            let v: Vec<BigRational> = v.iter().map(|&c| frac(c, 2)).collect();
            let dot: BigRational = t.iter().zip(&v).map(|(a, b)| a * b).sum();
            let norm: BigRational = v.iter().map(|b| b * b).sum();
            t.iter()
                .zip(&v)
                .map(|(a, b)| a - rat(2) * &dot / &norm * b)
                .collect()
        };
        // D4 simple roots e1-e2, e2-e3, e3-e4, e3+e4 (doubled for halves)
        for v in [[2, -2, 0, 0], [0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 2, 2]] {
            assert_eq!(p_t(&o, &CartanPoint::new(reflect(&t, v))).unwrap(), base);
        }
        // short roots of F4 permute the three entries
        for v in [[0, 0, 0, 2], [1, -1, -1, -1]] {
            let mut img = p_t(&o, &CartanPoint::new(reflect(&t, v))).unwrap();
            assert_ne!(img, base);
            img.sort();
            assert_eq!(img, sorted_base);
        }
    }

    #[test]
    fn centralizer_examples() {
        let e = sl2_from(rat(0));
        assert_eq!(centralizer_dimension(&e), 1);
        let zero = TracelessMatrix::new(RatMatrix::zeros(2, 2)).unwrap();
        assert_eq!(centralizer_dimension(&zero), 3);
        let zero3 = TracelessMatrix::new(RatMatrix::zeros(3, 3)).unwrap();
        assert_eq!(centralizer_dimension(&zero3), 8);
        let diag = TracelessMatrix::new(RatMatrix::diagonal(&[rat(1), rat(1), rat(-2)])).unwrap();
        assert_eq!(centralizer_dimension(&diag), 4);
        let o = RealFormFamily::octonionic();
        let x = e_section(&o, &CartanPoint::from_i64(&[1, -2, 3, 1])).unwrap();
        assert_eq!(centralizer_dimension(&x), 2);
        assert!(TracelessMatrix::new(RatMatrix::identity(2)).is_err());
    }

    #[test]
    fn scans() {
        for fam in [
            RealFormFamily::lorentz(4).unwrap(),
            RealFormFamily::octonionic(),
        ] {
            let pts = sample_points(&fam, 30, 7);
            let r = regularity_scan(&fam, &pts).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert!(matches!(
            regularity_scan(&RealFormFamily::octonionic(), &[]),
            Err(Error::EmptySamples)
        ));
    }

    #[test]
    fn cocharacters() {
        assert_eq!(
            cocharacter_exponents(&RealFormFamily::lorentz(5).unwrap()).unwrap(),
            vec![4, -4]
        );
        assert_eq!(
            cocharacter_exponents(&RealFormFamily::octonionic()).unwrap(),
            vec![8, 0, -8]
        );
    }

    #[test]
    fn equivariance() {
        let o = RealFormFamily::octonionic();
        let pt = CartanPoint::from_i64(&[1, 2, -1, 3]);
        assert!(gm_equivariance_check(&o, &rat(1), &pt).unwrap());
        assert!(gm_equivariance_check(&o, &frac(-3, 2), &pt).unwrap());
        assert!(gm_equivariance_symbolic(&o, &pt).unwrap());
        assert!(matches!(
            gm_equivariance_check(&o, &rat(0), &pt),
            Err(Error::ZeroScaling)
        ));
        let l = RealFormFamily::lorentz(3).unwrap();
        assert!(gm_equivariance_check(&l, &rat(5), &CartanPoint::from_i64(&[0, 0])).unwrap());
        assert!(gm_equivariance_symbolic(&l, &CartanPoint::from_i64(&[2, 7])).unwrap());
    }

    #[test]
    fn nu() {
        let l = RealFormFamily::lorentz(3).unwrap();
        let pt = CartanPoint::from_i64(&[1, 2]);
        let (y, back) = nu_map(&l, &RatMatrix::identity(2), &pt).unwrap();
        assert_eq!(&y, &e_section(&l, &pt).unwrap());
        assert_eq!(back, pt);
        let g = RatMatrix::diagonal(&[rat(2), frac(1, 2)]);
        let (y, _) = nu_map(&l, &g, &pt).unwrap();
        assert_eq!(
            y.matrix().determinant(),
            e_section(&l, &pt).unwrap().matrix().determinant()
        );
        assert_eq!(y.matrix()[(0, 1)], frac(1, 4));
        assert!(matches!(
            nu_map(&l, &RatMatrix::diagonal(&[rat(2), rat(1)]), &pt),
            Err(Error::NotSpecialLinear(_))
        ));
    }

    #[test]
    fn suite_is_deterministic() {
        let o = RealFormFamily::octonionic();
        let a = centralizer_suite(&o, 12, 3).unwrap();
        let b = centralizer_suite(&o, 12, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.passed(), "{a:?}");
        assert_eq!(a.equivariance_grid, 400);
    }

    proptest! {
        #[test]
        fn sl2_section_always_regular(num in -50i64..50, den in 1i64..20) {
            prop_assert_eq!(centralizer_dimension(&sl2_from(frac(num, den))), 1);
        }

        #[test]
        fn random_sl_has_det_one(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            prop_assert!(random_sl(3, &mut rng).determinant().is_one());
        }
    }
}
