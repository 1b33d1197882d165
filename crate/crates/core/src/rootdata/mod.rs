//! Finite root systems of types A, B, D, E6, F4 and G2.
//!
//! Weights are stored in fundamental-weight coordinates and roots in
//! simple-root coordinates; the Cartan matrix converts between the two. The
//! convention is `cartan[i][j] = <alpha_i^vee, alpha_j>`, so column `j` of the
//! Cartan matrix is `alpha_j` written in fundamental weights.

mod freudenthal;
mod weyl;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rat, RatMatrix};

pub use weyl::{weyl_order, WeylElement, WeylGroup, WEYL_ENUMERATION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
}

/// A Cartan type such as `A2`, `B4` or `F4`.
///
/// The degenerate labels `B0` (trivial group) and `D1` (a rank-one torus) are
/// valid types for Weyl-order and invariant-degree bookkeeping but have no
/// [`RootSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub const A1: Self = Self::new(Family::A, 1);
    pub const A2: Self = Self::new(Family::A, 2);
    pub const G2: Self = Self::new(Family::G, 2);
    pub const F4: Self = Self::new(Family::F, 4);
    pub const E6: Self = Self::new(Family::E, 6);

    pub const fn new(family: Family, rank: usize) -> Self {
        Self { family, rank }
    }

    pub const fn a(rank: usize) -> Self {
        Self::new(Family::A, rank)
    }

    pub const fn b(rank: usize) -> Self {
        Self::new(Family::B, rank)
    }

    pub const fn d(rank: usize) -> Self {
        Self::new(Family::D, rank)
    }

    /// Accepted by the toolkit at all (possibly degenerate).
    pub fn is_supported(&self) -> bool {
        match self.family {
            Family::A => self.rank >= 1,
            Family::B => true,
            Family::D => self.rank >= 1,
            Family::E => self.rank == 6,
            Family::F => self.rank == 4,
            Family::G => self.rank == 2,
        }
    }

    /// `B0` or `D1`: no roots.
    pub fn is_degenerate(&self) -> bool {
        matches!((self.family, self.rank), (Family::B, 0) | (Family::D, 1))
    }

    /// Classical count of positive roots.
    pub fn positive_root_count(&self) -> Result<usize> {
        if !self.is_supported() {
            return Err(Error::UnsupportedType(*self));
        }
        let k = self.rank;
        Ok(match self.family {
            Family::A => k * (k + 1) / 2,
            Family::B => k * k,
            Family::D => k * (k - 1),
            Family::E => 36,
            Family::F => 24,
            Family::G => 6,
        })
    }

    /// Dimension of the Lie algebra (`rank + 2 |positive roots|`; `D1` is a
    /// one-dimensional torus).
    pub fn lie_algebra_dim(&self) -> Result<usize> {
        Ok(self.rank + 2 * self.positive_root_count()?)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(CartanType::new(Family::A, 0));
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = CartanType::new(family, rank);
        if ty.is_supported() {
            Ok(ty)
        } else {
            Err(Error::UnsupportedType(ty))
        }
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub ty: CartanType,
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn map2(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        debug_assert_eq!(self.ty, other.ty);
        Weight {
            ty: self.ty,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        self.map2(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        self.map2(other, |a, b| a - b)
    }

    /// Swaps the two coordinates of an `A2` weight (the diagram automorphism).
    pub fn dual_a2(&self) -> Weight {
        assert_eq!(self.ty, CartanType::A2);
        Weight {
            ty: self.ty,
            coords: vec![self.coords[1], self.coords[0]],
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Rational coweight in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coweight {
    pub ty: CartanType,
    pub coords: Vec<BigRational>,
}

impl Coweight {
    pub fn scale(&self, c: &BigRational) -> Coweight {
        Coweight {
            ty: self.ty,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    /// Squared lengths `(alpha_i, alpha_i)` of the simple roots.
    sq_len: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    inverse_cartan: RatMatrix,
    /// `(varpi_i, varpi_j)`.
    fundamental_gram: RatMatrix,
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<Self> {
        if !ty.is_supported() {
            return Err(Error::UnsupportedType(ty));
        }
        if ty.is_degenerate() {
            return Err(Error::DegenerateType(ty));
        }
        let (cartan, sq_len) = cartan_data(ty);
        let r = ty.rank;
        let inverse_cartan = RatMatrix::from_i64_rows(&cartan)
            .inverse()
            .expect("Cartan matrix of a finite type is invertible");
        let mut fundamental_gram = RatMatrix::zeros(r, r);
        for i in 0..r {
            for k in 0..r {
                fundamental_gram[(i, k)] = &inverse_cartan[(k, i)] * rat(sq_len[k]) / rat(2);
            }
        }
        let positive_roots = generate_positive_roots(&cartan);
        let mut sys = Self {
            ty,
            cartan,
            sq_len,
            positive_roots,
            positive_coroots: Vec::new(),
            inverse_cartan,
            fundamental_gram,
        };
        sys.positive_coroots = sys
            .positive_roots
            .iter()
            .map(|b| sys.coroot_coords(b))
            .collect();
        Ok(sys)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in simple-coroot coordinates, aligned with
    /// [`Self::positive_roots`].
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn weight(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                ty: self.ty,
                rank: self.rank(),
                got: coords.len(),
            });
        }
        Ok(Weight {
            ty: self.ty,
            coords: coords.to_vec(),
        })
    }

    pub fn zero_weight(&self) -> Weight {
        Weight {
            ty: self.ty,
            coords: vec![0; self.rank()],
        }
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        Weight {
            ty: self.ty,
            coords,
        }
    }

    pub(crate) fn check(&self, w: &Weight) -> Result<()> {
        if w.ty != self.ty {
            return Err(Error::IncompatibleSystems {
                left: self.ty,
                right: w.ty,
            });
        }
        if w.coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                ty: self.ty,
                rank: self.rank(),
                got: w.coords.len(),
            });
        }
        Ok(())
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let r = self.rank();
        let coords = (0..r)
            .map(|i| (0..r).map(|j| self.cartan[i][j] * root[j]).sum())
            .collect();
        Weight {
            ty: self.ty,
            coords,
        }
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<BigRational> {
        let v: Vec<BigRational> = w.coords.iter().map(|&c| rat(c)).collect();
        self.inverse_cartan.mul_vec(&v)
    }

    /// Integral simple-root coordinates, if the weight lies in the root lattice.
    pub fn root_lattice_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        self.weight_to_root_coords(w)
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_lattice_coords(w).is_some()
    }

    /// Dominance order: `lambda - mu` is a nonnegative integral combination of
    /// simple roots.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.root_lattice_coords(&lambda.sub(mu))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Half-sum of positive roots, computed from the root list.
    pub fn rho(&self) -> Weight {
        let r = self.rank();
        let mut two_rho = vec![0i64; r];
        for beta in &self.positive_roots {
            let w = self.root_to_weight(beta);
            for (acc, c) in two_rho.iter_mut().zip(w.coords) {
                *acc += c;
            }
        }
        debug_assert!(two_rho.iter().all(|c| c % 2 == 0));
        Weight {
            ty: self.ty,
            coords: two_rho.into_iter().map(|c| c / 2).collect(),
        }
    }

    /// Half-sum of positive coroots in simple-coroot coordinates.
    pub fn rho_check(&self) -> Coweight {
        let r = self.rank();
        let mut coords = vec![BigRational::zero(); r];
        for cb in &self.positive_coroots {
            for (acc, &c) in coords.iter_mut().zip(cb) {
                *acc += rat(c);
            }
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Coweight {
            ty: self.ty,
            coords,
        }
        .scale(&half)
    }

    /// Canonical pairing `<lambda, coweight>`.
    pub fn pair(&self, lambda: &Weight, coweight: &Coweight) -> Result<BigRational> {
        self.check(lambda)?;
        if coweight.ty != self.ty {
            return Err(Error::IncompatibleSystems {
                left: lambda.ty,
                right: coweight.ty,
            });
        }
        Ok(lambda
            .coords
            .iter()
            .zip(&coweight.coords)
            .map(|(&a, b)| rat(a) * b)
            .sum())
    }

    /// `<lambda, rho^vee>`.
    pub fn pair_rho_check(&self, lambda: &Weight) -> Result<BigRational> {
        self.pair(lambda, &self.rho_check())
    }

    /// Invariant inner product on weights.
    pub fn inner(&self, a: &Weight, b: &Weight) -> BigRational {
        let r = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..r {
            if a.coords[i] == 0 {
                continue;
            }
            for k in 0..r {
                if b.coords[k] == 0 {
                    continue;
                }
                acc += &self.fundamental_gram[(i, k)] * rat(a.coords[i] * b.coords[k]);
            }
        }
        acc
    }

    /// Squared length of a root given in simple-root coordinates.
    fn root_sq_len(&self, root: &[i64]) -> BigRational {
        let r = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..r {
            for j in 0..r {
                let bij = rat(self.cartan[i][j] * self.sq_len[i]) / rat(2);
                acc += bij * rat(root[i] * root[j]);
            }
        }
        acc
    }

    /// Coroot of `root`, in simple-coroot coordinates.
    fn coroot_coords(&self, root: &[i64]) -> Vec<i64> {
        let len = self.root_sq_len(root);
        root.iter()
            .zip(&self.sq_len)
            .map(|(&c, &l)| {
                let x = rat(c * l) / &len;
                assert!(x.is_integer(), "coroot coordinates are integral");
                i64::try_from(x.to_integer()).unwrap()
            })
            .collect()
    }

    /// Simple reflection `s_i` on a weight.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let c = w.coords[i];
        let coords = w
            .coords
            .iter()
            .enumerate()
            .map(|(k, &x)| x - c * self.cartan[k][i])
            .collect();
        Weight { ty: w.ty, coords }
    }

    /// Dominant element of the Weyl orbit together with the number of simple
    /// reflections used (the length of the shortest element reaching it).
    pub fn to_dominant(&self, w: &Weight) -> (Weight, u32) {
        let mut cur = w.clone();
        let mut len = 0;
        while let Some(i) = cur.coords.iter().position(|&c| c < 0) {
            cur = self.reflect(i, &cur);
            len += 1;
        }
        (cur, len)
    }

    /// Orbit of `w` under the Weyl group, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check(w)?;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                if cur.coords[i] == 0 {
                    continue;
                }
                let next = self.reflect(i, &cur);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let orbit: BTreeSet<Weight> = seen.into_iter().collect();
        Ok(orbit.into_iter().collect())
    }

    /// Dimension of the irreducible representation with highest weight
    /// `lambda` (Weyl dimension formula).
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        let rho = self.rho();
        let shifted = lambda.add(&rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for cb in &self.positive_coroots {
            let a: i64 = shifted.coords.iter().zip(cb).map(|(x, c)| x * c).sum();
            let b: i64 = rho.coords.iter().zip(cb).map(|(x, c)| x * c).sum();
            num *= a;
            den *= b;
        }
        let q = BigRational::new(num, den);
        debug_assert!(q.is_integer() && !q.is_negative());
        Ok(q.to_integer())
    }
}

fn cartan_data(ty: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let r = ty.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut sq_len = vec![2i64; r];
    match ty.family {
        Family::A => (0..r.saturating_sub(1)).for_each(|i| link(i, i + 1)),
        Family::B => {
            (0..r.saturating_sub(1)).for_each(|i| link(i, i + 1));
            sq_len[r - 1] = 1;
            if r >= 2 {
                a[r - 1][r - 2] = -2;
            }
        }
        Family::D => {
            if r >= 3 {
                (0..r - 3).for_each(|i| link(i, i + 1));
                link(r - 3, r - 2);
                link(r - 3, r - 1);
            }
        }
        Family::E => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                link(i, j);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            sq_len = vec![2, 2, 1, 1];
        }
        Family::G => {
            a[0][1] = -3;
            a[1][0] = -1;
            sq_len = vec![2, 6];
        }
    }
    (a, sq_len)
}

/// Closure of the simple roots under simple reflections, positive half.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let simple: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
            let mut next = beta.clone();
            next[i] -= pairing;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|b| b.iter().all(|&c| c >= 0))
        .collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn all_types() -> Vec<CartanType> {
        let mut v = vec![
            CartanType::A1,
            CartanType::A2,
            CartanType::G2,
            CartanType::F4,
            CartanType::E6,
        ];
        v.extend((1..=6).map(CartanType::b));
        v.extend((2..=6).map(CartanType::d));
        v
    }

    #[test]
    fn cartan_invariants_and_root_counts() {
        for ty in all_types() {
            let sys = RootSystem::new(ty).unwrap();
            let a = sys.cartan_matrix();
            for (i, row) in a.iter().enumerate() {
                assert_eq!(row[i], 2, "{ty}");
                for (j, &x) in row.iter().enumerate() {
                    if i != j {
                        assert!(x <= 0, "{ty}");
                    }
                }
            }
            assert_eq!(
                sys.positive_roots().len(),
                ty.positive_root_count().unwrap(),
                "{ty}"
            );
            assert!(sys.positive_roots().iter().flatten().all(|&c| c >= 0));
        }
    }

    #[test]
    fn rho_is_all_ones() {
        for ty in all_types() {
            let sys = RootSystem::new(ty).unwrap();
            assert_eq!(sys.rho().coords, vec![1; ty.rank], "{ty}");
        }
    }

    #[test]
    fn rho_reflections_drop_by_simple_root() {
        for ty in all_types() {
            let sys = RootSystem::new(ty).unwrap();
            let rho = sys.rho();
            for i in 0..ty.rank {
                let mut alpha = vec![0; ty.rank];
                alpha[i] = 1;
                let expected = rho.sub(&sys.root_to_weight(&alpha));
                let s = sys.reflect(i, &rho);
                assert_ne!(s, rho);
                assert_eq!(s, expected, "{ty} s_{i}");
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a1 = RootSystem::new(CartanType::A1).unwrap();
        let w = a1.weight(&[1]).unwrap();
        assert_eq!(a1.pair_rho_check(&w).unwrap(), frac(1, 2));

        let a2 = RootSystem::new(CartanType::A2).unwrap();
        let w = a2.weight(&[1, 1]).unwrap();
        // brute force: sum over the three positive coroots, halved
        let brute: i64 = a2
            .positive_coroots()
            .iter()
            .map(|c| c.iter().zip(&w.coords).map(|(x, y)| x * y).sum::<i64>())
            .sum();
        assert_eq!(brute, 4);
        assert_eq!(a2.pair_rho_check(&w).unwrap(), rat(2));

        for ty in all_types() {
            let sys = RootSystem::new(ty).unwrap();
            assert_eq!(sys.pair_rho_check(&sys.zero_weight()).unwrap(), rat(0));
        }
    }

    #[test]
    fn pairing_rejects_mixed_systems() {
        let a1 = RootSystem::new(CartanType::A1).unwrap();
        let a2 = RootSystem::new(CartanType::A2).unwrap();
        let err = a1.pair(&a2.weight(&[1, 0]).unwrap(), &a1.rho_check());
        assert!(matches!(err, Err(Error::IncompatibleSystems { .. })));
        let err = a1.pair(&a1.weight(&[1]).unwrap(), &a2.rho_check());
        assert!(matches!(err, Err(Error::IncompatibleSystems { .. })));
    }

    #[test]
    fn non_simply_laced_coroots() {
        // G2 with alpha_1 short: the coroot system is G2 with lengths swapped,
        // so its highest element is 2 a1^vee + 3 a2^vee.
        let g2 = RootSystem::new(CartanType::G2).unwrap();
        assert!(g2.positive_coroots().contains(&vec![2, 3]));
        assert!(!g2.positive_coroots().contains(&vec![3, 2]));
        // <rho, alpha^vee> is the height of alpha^vee
        let b2 = RootSystem::new(CartanType::b(2)).unwrap();
        let rho = b2.rho();
        for c in b2.positive_coroots() {
            let p: i64 = c.iter().zip(&rho.coords).map(|(x, y)| x * y).sum();
            assert_eq!(p, c.iter().sum::<i64>());
        }
    }

    #[test]
    fn orbits() {
        let a1 = RootSystem::new(CartanType::A1).unwrap();
        let orbit = a1.weyl_orbit(&a1.weight(&[2]).unwrap()).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&a1.weight(&[-2]).unwrap()));

        let a2 = RootSystem::new(CartanType::A2).unwrap();
        let orbit = a2.weyl_orbit(&a2.weight(&[1, 0]).unwrap()).unwrap();
        // (1,0) -s1-> (-1,1) -s2-> (0,-1)
        let expected: Vec<Weight> = [[-1, 1], [0, -1], [1, 0]]
            .iter()
            .map(|c| a2.weight(&c[..]).unwrap())
            .collect();
        assert_eq!(orbit, expected);

        for ty in all_types() {
            let sys = RootSystem::new(ty).unwrap();
            let z = sys.zero_weight();
            assert_eq!(sys.weyl_orbit(&z).unwrap(), vec![z]);
        }
    }

    #[test]
    fn orbit_has_one_dominant_element() {
        let f4 = RootSystem::new(CartanType::F4).unwrap();
        let w = f4.weight(&[0, 1, -1, 2]).unwrap();
        let orbit = f4.weyl_orbit(&w).unwrap();
        assert_eq!(orbit.iter().filter(|x| x.is_dominant()).count(), 1);
        let (dom, _) = f4.to_dominant(&w);
        assert!(orbit.contains(&dom));
    }

    #[test]
    fn degenerate_and_unsupported() {
        assert!(matches!(
            RootSystem::new(CartanType::d(1)),
            Err(Error::DegenerateType(_))
        ));
        assert!(matches!(
            RootSystem::new(CartanType::b(0)),
            Err(Error::DegenerateType(_))
        ));
        assert!(matches!(
            RootSystem::new(CartanType::new(Family::E, 7)),
            Err(Error::UnsupportedType(_))
        ));
        assert_eq!("a2".parse::<CartanType>().unwrap(), CartanType::A2);
        assert_eq!("F4".parse::<CartanType>().unwrap(), CartanType::F4);
        assert!("E8".parse::<CartanType>().is_err());
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = RootSystem::new(CartanType::A2).unwrap();
        assert_eq!(
            a2.weyl_dimension(&a2.weight(&[1, 1]).unwrap()).unwrap(),
            8.into()
        );
        assert_eq!(
            a2.weyl_dimension(&a2.weight(&[1, 0]).unwrap()).unwrap(),
            3.into()
        );
        let e6 = RootSystem::new(CartanType::E6).unwrap();
        assert_eq!(
            e6.weyl_dimension(&e6.fundamental_weight(0)).unwrap(),
            27.into()
        );
        let g2 = RootSystem::new(CartanType::G2).unwrap();
        // short-root fundamental weight of G2 gives the 7-dimensional rep
        assert_eq!(
            g2.weyl_dimension(&g2.fundamental_weight(0)).unwrap(),
            7.into()
        );
        let f4 = RootSystem::new(CartanType::F4).unwrap();
        assert_eq!(
            f4.weyl_dimension(&f4.fundamental_weight(3)).unwrap(),
            26.into()
        );
    }
}
