use std::collections::{HashMap, VecDeque};

use super::{CartanType, Family, RootSystem, Weight};
use crate::error::{Error, Result};

/// Largest Weyl group that [`RootSystem::weyl_elements`] will enumerate
/// (the order of `W(E6)`).
pub const WEYL_ENUMERATION_CAP: u64 = 51_840;

/// Order of the Weyl group from the classical formulas. `B0` and `D1` are
/// trivial.
pub fn weyl_order(ty: CartanType) -> Result<u64> {
    if !ty.is_supported() {
        return Err(Error::UnsupportedType(ty));
    }
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let k = ty.rank;
    Ok(match ty.family {
        Family::A => fact(k + 1),
        Family::B => (1u64 << k) * fact(k),
        Family::D => (1u64 << (k - 1)) * fact(k),
        Family::E => 51_840,
        Family::F => 1_152,
        Family::G => 12,
    })
}

/// Weyl group element acting on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major `rank x rank` integer matrix.
    pub matrix: Vec<i64>,
    pub length: u32,
}

impl WeylElement {
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let r = w.coords.len();
        let coords = (0..r)
            .map(|i| (0..r).map(|j| self.matrix[i * r + j] * w.coords[j]).sum())
            .collect();
        Weight { ty: w.ty, coords }
    }
}

/// Weyl group presented by its simple reflections on weight coordinates.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub ty: CartanType,
    pub generators: Vec<Vec<i64>>,
    pub order: u64,
    pub longest_length: u32,
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += x * b[k * r + j];
            }
        }
    }
    out
}

impl RootSystem {
    /// Matrix of the simple reflection `s_i` on fundamental-weight coordinates.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<i64> {
        let r = self.rank();
        let mut m = vec![0; r * r];
        for k in 0..r {
            m[k * r + k] = 1;
            m[k * r + i] -= self.cartan[k][i];
        }
        m
    }

    pub fn weyl_group(&self) -> WeylGroup {
        WeylGroup {
            ty: self.ty,
            generators: (0..self.rank())
                .map(|i| self.simple_reflection_matrix(i))
                .collect(),
            order: weyl_order(self.ty).expect("supported type"),
            longest_length: self.positive_roots.len() as u32,
        }
    }

    /// All Weyl group elements with their lengths, by breadth-first closure
    /// under left multiplication by simple reflections. Sorted by
    /// `(length, matrix)`.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        let order = weyl_order(self.ty)?;
        if order > WEYL_ENUMERATION_CAP {
            return Err(Error::WeylGroupTooLarge {
                ty: self.ty,
                order,
                cap: WEYL_ENUMERATION_CAP,
            });
        }
        let r = self.rank();
        let gens: Vec<Vec<i64>> = (0..r).map(|i| self.simple_reflection_matrix(i)).collect();
        let mut identity = vec![0; r * r];
        for i in 0..r {
            identity[i * r + i] = 1;
        }
        let mut lengths: HashMap<Vec<i64>, u32> = HashMap::new();
        lengths.insert(identity.clone(), 0);
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            let len = lengths[&g];
            for s in &gens {
                let h = mat_mul(s, &g, r);
                if !lengths.contains_key(&h) {
                    lengths.insert(h.clone(), len + 1);
                    queue.push_back(h);
                }
            }
        }
        let mut out: Vec<WeylElement> = lengths
            .into_iter()
            .map(|(matrix, length)| WeylElement { matrix, length })
            .collect();
        out.sort_by(|a, b| {
            a.length
                .cmp(&b.length)
                .then_with(|| a.matrix.cmp(&b.matrix))
        });
        Ok(out)
    }

    /// Order of the Weyl group counted as the size of the orbit of `rho`
    /// (which has trivial stabiliser). Works past the matrix-enumeration cap.
    pub fn weyl_order_by_rho_orbit(&self) -> u64 {
        self.weyl_orbit(&self.rho()).expect("own weight").len() as u64
    }

    /// Size of the stabiliser of a weight, by enumeration.
    pub fn stabilizer_order(&self, w: &Weight) -> Result<u64> {
        self.check(w)?;
        Ok(self
            .weyl_elements()?
            .iter()
            .filter(|e| e.apply(w) == *w)
            .count() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let a1 = RootSystem::new(CartanType::A1).unwrap();
        let els = a1.weyl_elements().unwrap();
        assert_eq!(els.len(), 2);
        let mut signs: Vec<i64> = els.iter().map(WeylElement::sign).collect();
        signs.sort();
        assert_eq!(signs, vec![-1, 1]);

        let a2 = RootSystem::new(CartanType::A2).unwrap();
        let els = a2.weyl_elements().unwrap();
        assert_eq!(els.len(), 6);
        assert_eq!(els.iter().map(WeylElement::sign).sum::<i64>(), 0);
        assert_eq!(els[0].length, 0);
        assert_eq!(els.iter().map(|e| e.length).max(), Some(3));
    }

    #[test]
    fn d4_closure_matches_formula() {
        let d4 = RootSystem::new(CartanType::d(4)).unwrap();
        let els = d4.weyl_elements().unwrap();
        assert_eq!(els.len() as u64, 8 * 24);
        assert_eq!(weyl_order(CartanType::d(4)).unwrap(), 192);
        assert_eq!(els.iter().map(|e| e.length).max(), Some(12));
    }

    #[test]
    fn closure_orders_match_formulas() {
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
            let els = sys.weyl_elements().unwrap();
            assert_eq!(els.len() as u64, weyl_order(ty).unwrap(), "{ty}");
            assert_eq!(els.iter().map(WeylElement::sign).sum::<i64>(), 0, "{ty}");
            let longest = els.iter().map(|e| e.length).max().unwrap();
            assert_eq!(longest, sys.weyl_group().longest_length, "{ty}");
        }
    }

    #[test]
    fn generators_are_involutions() {
        for ty in [
            CartanType::A2,
            CartanType::G2,
            CartanType::F4,
            CartanType::E6,
        ] {
            let sys = RootSystem::new(ty).unwrap();
            let r = sys.rank();
            let mut id = vec![0; r * r];
            for i in 0..r {
                id[i * r + i] = 1;
            }
            for g in sys.weyl_group().generators {
                assert_eq!(mat_mul(&g, &g, r), id, "{ty}");
            }
        }
    }

    #[test]
    fn e6_order_via_rho_orbit() {
        let e6 = RootSystem::new(CartanType::E6).unwrap();
        assert_eq!(e6.weyl_order_by_rho_orbit(), 51_840);
    }

    #[test]
    fn enumeration_cap() {
        let b7 = RootSystem::new(CartanType::b(7)).unwrap();
        assert!(matches!(
            b7.weyl_elements(),
            Err(Error::WeylGroupTooLarge { .. })
        ));
        assert_eq!(weyl_order(CartanType::d(1)).unwrap(), 1);
        assert_eq!(weyl_order(CartanType::b(0)).unwrap(), 1);
    }

    #[test]
    fn orbit_stabilizer() {
        let f4 = RootSystem::new(CartanType::F4).unwrap();
        for coords in [[1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 1, 0], [0, 0, 0, 0]] {
            let w = f4.weight(&coords).unwrap();
            let orbit = f4.weyl_orbit(&w).unwrap().len() as u64;
            let stab = f4.stabilizer_order(&w).unwrap();
            assert_eq!(orbit * stab, 1152, "{coords:?}");
            // the stabiliser of a dominant weight is the parabolic subgroup
            // generated by the simple reflections fixing it
            let fixed: Vec<usize> = (0..4).filter(|&i| coords[i] == 0).collect();
            let sub = parabolic_order(&f4, &fixed);
            assert_eq!(stab, sub, "{coords:?}");
        }
    }

    fn parabolic_order(sys: &RootSystem, gens: &[usize]) -> u64 {
        let r = sys.rank();
        let mut id = vec![0; r * r];
        for i in 0..r {
            id[i * r + i] = 1;
        }
        let mats: Vec<Vec<i64>> = gens
            .iter()
            .map(|&i| sys.simple_reflection_matrix(i))
            .collect();
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &mats {
                let h = mat_mul(s, &g, r);
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        seen.len() as u64
    }
}
