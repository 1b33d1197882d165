//! Data for the real forms `PSO(2n-1,1)` ("Lorentz") and `PE6(F4)`
//! ("octonionic"): restricted roots, the group inventory, the identification
//! of real coweights with weights of the dual group, and the minuscule
//! paving.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rat;
use crate::rootdata::{weyl_order, CartanType, Coweight, RootSystem, Weight};

/// Family selector, serialised as `{"family":"lorentz","n":5}` or
/// `{"family":"octonionic"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum FamilySpec {
    Lorentz { n: u32 },
    Octonionic,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Lorentz { n } => write!(f, "lorentz(n={n})"),
            FamilySpec::Octonionic => f.write_str("octonionic"),
        }
    }
}

/// A group named in the inventory, with the Cartan type of its root system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupLabel {
    pub name: String,
    pub ty: CartanType,
}

impl GroupLabel {
    fn new(name: impl Into<String>, ty: CartanType) -> Self {
        Self {
            name: name.into(),
            ty,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inventory {
    pub k: GroupLabel,
    pub m: GroupLabel,
    pub g_dual: GroupLabel,
    pub g_x_dual: GroupLabel,
    pub l_x_wedge: GroupLabel,
}

#[derive(Clone, Debug)]
pub struct RealFormFamily {
    spec: FamilySpec,
    n_x: u32,
    dual: RootSystem,
    /// One entry per positive restricted root, in the order of
    /// `dual.positive_roots()`.
    multiplicity: Vec<u32>,
    inventory: Inventory,
}

/// Real coweight: `m` for Lorentz, `(a, b)` for octonionic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RealWeight {
    pub coords: Vec<i64>,
}

impl RealWeight {
    pub fn new(coords: &[i64]) -> Self {
        Self {
            coords: coords.to_vec(),
        }
    }

    pub fn add(&self, other: &RealWeight) -> RealWeight {
        RealWeight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for RealWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coords.as_slice() {
            [m] => write!(f, "{m}"),
            cs => {
                let parts: Vec<String> = cs.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// Image of a real coweight in the weight lattice of the dual group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWeight {
    pub weight: Weight,
    /// The `GL`-style completion used for the translation (`[m, 0]` or
    /// `[a, b, 0]`).
    pub raw: Vec<i64>,
    /// Central offset subtracted from `raw`; zero for every accepted input.
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylFactorization {
    pub k_order: u64,
    pub m_order: u64,
    pub x_order: u64,
    pub by_enumeration: bool,
    pub holds: bool,
}

impl RealFormFamily {
    pub fn new(spec: FamilySpec) -> Result<Self> {
        match spec {
            FamilySpec::Lorentz { n } => Self::lorentz(n),
            FamilySpec::Octonionic => Ok(Self::octonionic()),
        }
    }

    /// `PSO(2n-1,1)`, `n >= 2`.
    pub fn lorentz(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!(
                "lorentz needs n >= 2, got {n}"
            )));
        }
        let k = n as usize;
        let n_x = 2 * n - 2;
        let inventory = Inventory {
            k: GroupLabel::new(format!("SO_{}", 2 * n - 1), CartanType::b(k - 1)),
            m: GroupLabel::new(format!("SO_{}", 2 * n - 2), CartanType::d(k - 1)),
            g_dual: GroupLabel::new(format!("Spin_{}", 2 * n), CartanType::d(k)),
            g_x_dual: GroupLabel::new("SL_2", CartanType::A1),
            l_x_wedge: GroupLabel::new(format!("Spin_{}", 2 * n - 3), CartanType::b(k - 2)),
        };
        let dual = RootSystem::new(CartanType::A1)?;
        Ok(Self {
            spec: FamilySpec::Lorentz { n },
            n_x,
            multiplicity: vec![n_x; dual.positive_roots().len()],
            dual,
            inventory,
        })
    }

    /// `PE6(F4)`.
    pub fn octonionic() -> Self {
        let inventory = Inventory {
            k: GroupLabel::new("F_4", CartanType::F4),
            m: GroupLabel::new("Spin_8", CartanType::d(4)),
            g_dual: GroupLabel::new("E_6", CartanType::E6),
            g_x_dual: GroupLabel::new("SL_3", CartanType::A2),
            l_x_wedge: GroupLabel::new("G_2", CartanType::G2),
        };
        let dual = RootSystem::new(CartanType::A2).expect("A2");
        Self {
            spec: FamilySpec::Octonionic,
            n_x: 8,
            multiplicity: vec![8; dual.positive_roots().len()],
            dual,
            inventory,
        }
    }

    /// Same family with a custom restricted-root multiplicity table.
    pub fn with_multiplicities(mut self, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != self.multiplicity.len() {
            return Err(Error::InvalidFamily(format!(
                "expected {} multiplicities, got {}",
                self.multiplicity.len(),
                mult.len()
            )));
        }
        self.multiplicity = mult;
        Ok(self)
    }

    pub fn spec(&self) -> FamilySpec {
        self.spec
    }

    pub fn n_x(&self) -> u32 {
        self.n_x
    }

    pub fn inventory(&self) -> &Inventory {
        &self.inventory
    }

    /// Root system of `G_X^vee`.
    pub fn dual_system(&self) -> &RootSystem {
        &self.dual
    }

    /// The restricted root system; it has the same type as the dual group.
    pub fn restricted_system(&self) -> &RootSystem {
        &self.dual
    }

    /// Multiplicity of a positive restricted root (simple-root coordinates).
    pub fn multiplicity(&self, root: &[i64]) -> Option<u32> {
        self.dual
            .positive_roots()
            .iter()
            .position(|r| r.as_slice() == root)
            .map(|i| self.multiplicity[i])
    }

    /// Rank of the coweight lattice `Lambda_S`.
    pub fn real_rank(&self) -> usize {
        match self.spec {
            FamilySpec::Lorentz { .. } => 1,
            FamilySpec::Octonionic => 2,
        }
    }

    pub fn real_weight(&self, coords: &[i64]) -> Result<RealWeight> {
        if coords.len() != self.real_rank() {
            return Err(Error::InvalidFamily(format!(
                "{} takes {} real coordinates, got {}",
                self.spec,
                self.real_rank(),
                coords.len()
            )));
        }
        Ok(RealWeight::new(coords))
    }

    /// `m >= 0`, resp. `a >= b`.
    pub fn is_dominant(&self, lam: &RealWeight) -> bool {
        match lam.coords.as_slice() {
            [m] => *m >= 0,
            [a, b] => a >= b,
            _ => false,
        }
    }

    /// Identification of `Lambda_S^+` with dominant weights of `G_X^vee`.
    /// Octonionic `(a, b)` is read as the `GL3` triple `(a, b, 0)`, giving
    /// `(a - b, b)`; inputs with `b < 0` have non-dominant image and are
    /// rejected.
    pub fn to_dual_weight(&self, lam: &RealWeight) -> Result<DualWeight> {
        let lam = self.real_weight(&lam.coords)?;
        if !self.is_dominant(&lam) {
            return Err(Error::NotDominant(lam.coords));
        }
        let (coords, raw) = match lam.coords.as_slice() {
            [m] => (vec![*m], vec![*m, 0]),
            [a, b] => (vec![a - b, *b], vec![*a, *b, 0]),
            _ => unreachable!(),
        };
        let weight = self.dual.weight(&coords)?;
        if !weight.is_dominant() {
            return Err(Error::NotDominant(lam.coords));
        }
        Ok(DualWeight {
            weight,
            raw,
            shift: 0,
        })
    }

    /// Inverse of [`Self::to_dual_weight`] on dominant weights.
    pub fn from_dual_weight(&self, w: &Weight) -> Result<RealWeight> {
        self.dual.weight(&w.coords)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coords.clone()));
        }
        Ok(match w.coords.as_slice() {
            [m] => RealWeight::new(&[*m]),
            [p, q] => RealWeight::new(&[p + q, *q]),
            _ => unreachable!(),
        })
    }

    /// `(1/2) sum mult(alpha) alpha` in simple-root coordinates.
    pub fn restricted_rho_root_coords(&self) -> Vec<BigRational> {
        let r = self.dual.rank();
        let mut acc = vec![BigRational::zero(); r];
        for (root, &m) in self.dual.positive_roots().iter().zip(&self.multiplicity) {
            for (a, &c) in acc.iter_mut().zip(root) {
                *a += rat(c * i64::from(m));
            }
        }
        acc.into_iter().map(|x| x / rat(2)).collect()
    }

    /// Restricted `rho` as a weight of the restricted system.
    pub fn restricted_rho(&self) -> Result<Weight> {
        let root = self.restricted_rho_root_coords();
        let r = self.dual.rank();
        let a = self.dual.cartan_matrix();
        let mut coords = Vec::with_capacity(r);
        for row in a {
            let x: BigRational = row.iter().zip(&root).map(|(&c, y)| rat(c) * y).sum();
            if !x.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "restricted rho has non-integral coordinate {x}"
                )));
            }
            coords.push(to_i64(&x.to_integer())?);
        }
        self.dual.weight(&coords)
    }

    /// `<lambda, rho_G>` computed from the restricted roots: the restricted
    /// `rho` is read as a coweight of the (simply laced) dual system.
    pub fn pair_rho_g(&self, lam: &RealWeight) -> Result<BigRational> {
        let w = self.to_dual_weight(lam)?.weight;
        let cw = Coweight {
            ty: self.dual.cartan_type(),
            coords: self.restricted_rho_root_coords(),
        };
        self.dual.pair(&w, &cw)
    }

    /// `n_X <lambda, rho_X^vee>`.
    pub fn n_x_pair_rho_check(&self, lam: &RealWeight) -> Result<BigRational> {
        let w = self.to_dual_weight(lam)?.weight;
        Ok(rat(i64::from(self.n_x)) * self.dual.pair_rho_check(&w)?)
    }

    /// Both sides of `<lambda, rho_G> = n_X <lambda, rho_X^vee>`.
    pub fn pairing_sides(&self, lam: &RealWeight) -> Result<(BigRational, BigRational)> {
        Ok((self.pair_rho_g(lam)?, self.n_x_pair_rho_check(lam)?))
    }

    pub fn check_pairing_identity(&self, lam: &RealWeight) -> bool {
        self.pairing_sides(lam).is_ok_and(|(l, r)| l == r)
    }

    /// Real dimension `2 n_X <lambda, rho_X^vee>` of the spherical orbit.
    pub fn orbit_dim(&self, lam: &RealWeight) -> Result<u64> {
        let d = self.n_x_pair_rho_check(lam)? * rat(2);
        if !d.is_integer() {
            return Err(Error::Inconsistent(format!(
                "orbit dimension {d} is not integral"
            )));
        }
        u64::try_from(d.to_integer()).map_err(|_| Error::Overflow(d.to_string()))
    }

    /// The minuscule real coweight: `m = 1`, resp. `(1, 0)` (mapping to the
    /// first fundamental weight).
    pub fn minuscule(&self) -> RealWeight {
        match self.spec {
            FamilySpec::Lorentz { .. } => RealWeight::new(&[1]),
            FamilySpec::Octonionic => RealWeight::new(&[1, 0]),
        }
    }

    /// Real cell dimensions of the paving of the minuscule orbit closure:
    /// `n_X` times the lengths of the minimal coset representatives of
    /// `W_X / Stab(omega)`, ascending.
    pub fn minuscule_paving(&self) -> Vec<u64> {
        let omega = self
            .to_dual_weight(&self.minuscule())
            .expect("minuscule weight is dominant")
            .weight;
        let mut dims: Vec<u64> = self
            .dual
            .weyl_orbit(&omega)
            .expect("own weight")
            .iter()
            .map(|v| u64::from(self.n_x) * u64::from(self.dual.to_dominant(v).1))
            .collect();
        dims.sort_unstable();
        dims
    }

    /// `|W_K| = |W_M| |W_X|`, by closure enumeration where the groups are
    /// small and by the order formulas otherwise.
    pub fn weyl_factorization(&self) -> WeylFactorization {
        let enumerate = match self.spec {
            FamilySpec::Lorentz { n } => n <= 5,
            FamilySpec::Octonionic => true,
        };
        let order = |ty: CartanType| -> u64 {
            if enumerate && !ty.is_degenerate() {
                let sys = RootSystem::new(ty).expect("inventory types are supported");
                sys.weyl_elements().expect("small group").len() as u64
            } else {
                weyl_order(ty).expect("inventory types are supported")
            }
        };
        let k_order = order(self.inventory.k.ty);
        let m_order = order(self.inventory.m.ty);
        let x_order = order(self.inventory.g_x_dual.ty);
        WeylFactorization {
            k_order,
            m_order,
            x_order,
            by_enumeration: enumerate,
            holds: k_order == m_order * x_order,
        }
    }

    pub fn weyl_factorization_check(&self) -> bool {
        self.weyl_factorization().holds
    }

    /// Dominant real coweights with every coordinate in `0..=bound`.
    pub fn dominant_box(&self, bound: i64) -> Vec<RealWeight> {
        match self.spec {
            FamilySpec::Lorentz { .. } => (0..=bound).map(|m| RealWeight::new(&[m])).collect(),
            FamilySpec::Octonionic => (0..=bound)
                .flat_map(|a| (0..=a).map(move |b| RealWeight::new(&[a, b])))
                .collect(),
        }
    }
}

fn to_i64(x: &BigInt) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(x.to_string()))
}
