//! IC-stalk dimensions of spherical orbit closures, read off the
//! Kostka–Foulkes polynomials of the dual group.
//!
//! The coefficient of `q^i` in `K_{lambda,mu}` is the stalk dimension at
//! degree `-n_X i - n_X <lambda, rho_X^vee>` (perverse normalisation).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::qanalog::kostka_foulkes;
use crate::realform::{FamilySpec, RealFormFamily, RealWeight};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Stalks in degrees `<= -n_X <lambda, rho_X^vee>`.
    #[default]
    Perverse,
    /// Perverse degrees shifted up by `n_X <lambda, rho_X^vee>`.
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StalkEntry {
    pub degree: i64,
    pub dim: u64,
}

/// Stalks of `IC_lambda` at a point of the orbit of `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StalkPolynomial {
    /// degree -> dimension, nonzero entries only
    pub stalks: BTreeMap<i64, u64>,
    pub diagnostic: Option<String>,
}

/// One row of the JSON table schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StalkRecord {
    pub family: FamilySpec,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub stalks: Vec<StalkEntry>,
}

/// Serialised through [`StalkTable::records`] / [`StalkTable::from_records`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkTable {
    pub family: FamilySpec,
    pub convention: Convention,
    pub entries: BTreeMap<(RealWeight, RealWeight), BTreeMap<i64, u64>>,
}

/// `n_X <lambda, rho_X^vee>`, an integer for both families.
pub fn top_degree_offset(fam: &RealFormFamily, lambda: &RealWeight) -> Result<i64> {
    let x = fam.n_x_pair_rho_check(lambda)?;
    ratio_to_i64(&x)
}

fn ratio_to_i64(x: &BigRational) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Inconsistent(format!("{x} is not an integer")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Overflow(x.to_string()))
}

/// `K_{lambda,mu}` of the dual group for real coweights, or `None` when
/// `mu` is not below `lambda`.
pub fn dual_kostka(
    fam: &RealFormFamily,
    lambda: &RealWeight,
    mu: &RealWeight,
) -> Result<Option<QPolynomial>> {
    let l = fam.to_dual_weight(lambda)?.weight;
    let m = fam.to_dual_weight(mu)?.weight;
    let sys = fam.dual_system();
    if !sys.dominates(&l, &m) {
        return Ok(None);
    }
    kostka_foulkes(sys, &l, &m).map(Some)
}

pub fn stalk_polynomial(
    fam: &RealFormFamily,
    lambda: &RealWeight,
    mu: &RealWeight,
) -> Result<StalkPolynomial> {
    stalk_polynomial_with(fam, lambda, mu, Convention::Perverse)
}

pub fn stalk_polynomial_with(
    fam: &RealFormFamily,
    lambda: &RealWeight,
    mu: &RealWeight,
    convention: Convention,
) -> Result<StalkPolynomial> {
    let Some(k) = dual_kostka(fam, lambda, mu)? else {
        return Ok(StalkPolynomial {
            stalks: BTreeMap::new(),
            diagnostic: Some(format!("mu = {mu} is not below lambda = {lambda}")),
        });
    };
    let offset = top_degree_offset(fam, lambda)?;
    let n_x = i64::from(fam.n_x());
    let base = match convention {
        Convention::Perverse => -offset,
        Convention::Shifted => 0,
    };
    let mut stalks = BTreeMap::new();
    for (i, c) in k.terms() {
        let dim = c.to_u64().ok_or_else(|| Error::Overflow(c.to_string()))?;
        stalks.insert(base - n_x * i64::from(i), dim);
    }
    Ok(StalkPolynomial {
        stalks,
        diagnostic: None,
    })
}

/// Same table with the shift written as `-(1/2) dim_R` of the orbit, as for
/// the symmetric-variety side. Fails if the two shifts disagree.
pub fn lx_stalk_polynomial(
    fam: &RealFormFamily,
    lambda: &RealWeight,
    mu: &RealWeight,
) -> Result<StalkPolynomial> {
    let dim = fam.orbit_dim(lambda)?;
    if dim % 2 != 0 {
        return Err(Error::Inconsistent(format!("odd orbit dimension {dim}")));
    }
    let half = i64::try_from(dim / 2).map_err(|_| Error::Overflow(dim.to_string()))?;
    let Some(k) = dual_kostka(fam, lambda, mu)? else {
        return Ok(StalkPolynomial::default());
    };
    let n_x = i64::from(fam.n_x());
    let stalks: BTreeMap<i64, u64> = k
        .terms()
        .map(|(i, c)| (-n_x * i64::from(i) - half, c.to_u64().unwrap_or(u64::MAX)))
        .collect();
    let main = stalk_polynomial(fam, lambda, mu)?;
    if main.stalks != stalks {
        return Err(Error::Inconsistent(format!(
            "orbit-dimension shift disagrees with the pairing shift at {lambda}, {mu}"
        )));
    }
    Ok(StalkPolynomial {
        stalks,
        diagnostic: None,
    })
}

/// `K_{lambda,mu}(q'^{n_X/2})`.
pub fn q_substitution_view(
    fam: &RealFormFamily,
    lambda: &RealWeight,
    mu: &RealWeight,
) -> Result<QPolynomial> {
    let k = dual_kostka(fam, lambda, mu)?.unwrap_or_else(QPolynomial::zero);
    Ok(k.scale_exponents(fam.n_x() / 2))
}

/// Every nonzero entry sits in the residue class of `-n_X <lambda,
/// rho_X^vee>` modulo `n_X`.
pub fn parity_check(table: &StalkTable) -> bool {
    let Ok(fam) = RealFormFamily::new(table.family) else {
        return false;
    };
    let n_x = i64::from(fam.n_x());
    table.entries.iter().all(|((lambda, _), stalks)| {
        let Ok(offset) = top_degree_offset(&fam, lambda) else {
            return false;
        };
        let shift = match table.convention {
            Convention::Perverse => offset,
            Convention::Shifted => 0,
        };
        stalks
            .iter()
            .all(|(&d, &dim)| dim == 0 || (d + shift).rem_euclid(n_x) == 0)
    })
}

/// Every degree lies in `[-2 n_X <lambda, rho^vee>, -n_X <lambda, rho^vee>]`
/// (perverse convention).
pub fn bounds_check(table: &StalkTable) -> bool {
    let Ok(fam) = RealFormFamily::new(table.family) else {
        return false;
    };
    table.entries.iter().all(|((lambda, _), stalks)| {
        let Ok(offset) = top_degree_offset(&fam, lambda) else {
            return false;
        };
        let shift = match table.convention {
            Convention::Perverse => 0,
            Convention::Shifted => -offset,
        };
        stalks
            .keys()
            .all(|&d| (-2 * offset..=-offset).contains(&(d + shift)))
    })
}

/// Union over `mu` of the degrees occurring for `lambda`.
pub fn degree_span(table: &StalkTable, lambda: &RealWeight) -> BTreeSet<i64> {
    table
        .entries
        .iter()
        .filter(|((l, _), _)| l == lambda)
        .flat_map(|(_, s)| s.iter().filter(|(_, &d)| d > 0).map(|(&k, _)| k))
        .collect()
}

/// Dominant real coweights `mu <= lambda`, sorted.
pub fn weights_below(fam: &RealFormFamily, lambda: &RealWeight) -> Result<Vec<RealWeight>> {
    let l = fam.to_dual_weight(lambda)?.weight;
    let mut out: Vec<RealWeight> = fam
        .dual_system()
        .dominant_weights_below(&l)?
        .iter()
        .map(|w| fam.from_dual_weight(w))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

type Key = (RealWeight, RealWeight);

/// Stalk table over every dominant `lambda` with coordinates `<= lmax` and
/// every dominant `mu <= lambda`.
pub fn sweep(fam: &RealFormFamily, lmax: i64, convention: Convention) -> Result<StalkTable> {
    let lambdas = fam.dominant_box(lmax);
    let rows: Vec<Vec<(Key, BTreeMap<i64, u64>)>> = lambdas
        .par_iter()
        .map(|lambda| {
            weights_below(fam, lambda)?
                .into_iter()
                .map(|mu| {
                    let s = stalk_polynomial_with(fam, lambda, &mu, convention)?;
                    Ok(((lambda.clone(), mu), s.stalks))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(StalkTable {
        family: fam.spec(),
        convention,
        entries: rows.into_iter().flatten().collect(),
    })
}

impl StalkTable {
    pub fn records(&self) -> Vec<StalkRecord> {
        self.entries
            .iter()
            .map(|((l, m), s)| StalkRecord {
                family: self.family,
                lambda: l.coords.clone(),
                mu: m.coords.clone(),
                stalks: s
                    .iter()
                    .map(|(&degree, &dim)| StalkEntry { degree, dim })
                    .collect(),
            })
            .collect()
    }

    pub fn from_records(records: &[StalkRecord], convention: Convention) -> Result<Self> {
        let family = records
            .first()
            .map(|r| r.family)
            .ok_or_else(|| Error::InvalidFamily("empty stalk table".into()))?;
        let mut entries = BTreeMap::new();
        for r in records {
            if r.family != family {
                return Err(Error::InvalidFamily(format!(
                    "mixed families {family} and {}",
                    r.family
                )));
            }
            let stalks = r.stalks.iter().map(|e| (e.degree, e.dim)).collect();
            entries.insert((RealWeight::new(&r.lambda), RealWeight::new(&r.mu)), stalks);
        }
        Ok(Self {
            family,
            convention,
            entries,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records()).expect("plain data")
    }

    /// Columns `lambda,mu,degree,dim`; one row per nonzero stalk.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["lambda", "mu", "degree", "dim"])
            .expect("in-memory");
        for ((l, m), s) in &self.entries {
            for (d, dim) in s {
                w.write_record([l.to_string(), m.to_string(), d.to_string(), dim.to_string()])
                    .expect("in-memory");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for ((l, m), s) in &self.entries {
            let cells: Vec<String> = s.iter().map(|(d, k)| format!("H^{d}={k}")).collect();
            let _ = writeln!(out, "lambda={l} mu={m}: {}", cells.join(" "));
        }
        out
    }
}

/// Total stalk dimension, the `q = 1` value.
pub fn total_dim(s: &StalkPolynomial) -> u64 {
    s.stalks.values().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn rw(c: &[i64]) -> RealWeight {
        RealWeight::new(c)
    }

    #[test]
    fn examples() {
        for n in 2..=8 {
            let l = RealFormFamily::lorentz(n).unwrap();
            let nx = i64::from(l.n_x());
            let s = stalk_polynomial(&l, &rw(&[2]), &rw(&[2])).unwrap();
            assert_eq!(s.stalks, BTreeMap::from([(-nx, 1)]));
        }
        let l = RealFormFamily::lorentz(5).unwrap();
        let s = stalk_polynomial(&l, &rw(&[2]), &rw(&[0])).unwrap();
        assert_eq!(s.stalks, BTreeMap::from([(-16, 1)]));

        let o = RealFormFamily::octonionic();
        // (2,1) is the adjoint weight (1,1) of SL3
        let s = stalk_polynomial(&o, &rw(&[2, 1]), &rw(&[0, 0])).unwrap();
        assert_eq!(s.stalks, BTreeMap::from([(-32, 1), (-24, 1)]));
        let s = stalk_polynomial_with(&o, &rw(&[2, 1]), &rw(&[0, 0]), Convention::Shifted).unwrap();
        assert_eq!(s.stalks, BTreeMap::from([(-16, 1), (-8, 1)]));
    }

    #[test]
    fn not_below_gives_diagnostic() {
        let l = RealFormFamily::lorentz(3).unwrap();
        let s = stalk_polynomial(&l, &rw(&[1]), &rw(&[3])).unwrap();
        assert!(s.stalks.is_empty());
        assert!(s.diagnostic.is_some());
        let s = stalk_polynomial(&l, &rw(&[2]), &rw(&[1])).unwrap();
        assert!(s.stalks.is_empty() && s.diagnostic.is_some());
        assert!(stalk_polynomial(&l, &rw(&[-1]), &rw(&[0])).is_err());
    }

    #[test]
    fn substitution_view() {
        let l = RealFormFamily::lorentz(5).unwrap();
        assert_eq!(
            q_substitution_view(&l, &rw(&[2]), &rw(&[0]))
                .unwrap()
                .display_in("q'"),
            "q'^4"
        );
        let o = RealFormFamily::octonionic();
        assert_eq!(
            q_substitution_view(&o, &rw(&[2, 1]), &rw(&[0, 0]))
                .unwrap()
                .display_in("q'"),
            "q'^4 + q'^8"
        );
        assert_eq!(
            q_substitution_view(&o, &rw(&[3, 1]), &rw(&[3, 1])).unwrap(),
            QPolynomial::one()
        );
    }

    #[test]
    fn parity_on_tables() {
        let l = RealFormFamily::lorentz(4).unwrap();
        let t = sweep(&l, 6, Convention::Perverse).unwrap();
        assert!(parity_check(&t) && bounds_check(&t));
        let mut bad = t.clone();
        bad.entries
            .insert((rw(&[2]), rw(&[2])), BTreeMap::from([(-7, 1)]));
        assert!(!parity_check(&bad));
        let empty = StalkTable {
            family: l.spec(),
            convention: Convention::Perverse,
            entries: BTreeMap::new(),
        };
        assert!(parity_check(&empty));
        let shifted = sweep(&l, 6, Convention::Shifted).unwrap();
        assert!(parity_check(&shifted) && bounds_check(&shifted));
    }

    #[test]
    fn lx_form_agrees() {
        let o = RealFormFamily::octonionic();
        for lambda in o.dominant_box(4) {
            for mu in weights_below(&o, &lambda).unwrap() {
                let a = lx_stalk_polynomial(&o, &lambda, &mu).unwrap();
                assert_eq!(a.stalks, stalk_polynomial(&o, &lambda, &mu).unwrap().stalks);
            }
        }
    }

    #[test]
    fn formats_round_trip() {
        let o = RealFormFamily::octonionic();
        let t = sweep(&o, 3, Convention::Perverse).unwrap();
        let records: Vec<StalkRecord> = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(
            StalkTable::from_records(&records, Convention::Perverse).unwrap(),
            t
        );
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        let first = &v[0];
        assert_eq!(first["family"]["family"], "octonionic");
        assert!(first["stalks"][0]["degree"].is_i64());
        let csv = t.to_csv();
        assert!(csv.starts_with("lambda,mu,degree,dim\n"));
        assert!(csv.contains("\"(2,1)\",\"(0,0)\",-24,1"));
    }

    #[test]
    fn top_degree_normalisation() {
        let o = RealFormFamily::octonionic();
        for lambda in o.dominant_box(5) {
            let s = stalk_polynomial(&o, &lambda, &lambda).unwrap();
            let top = top_degree_offset(&o, &lambda).unwrap();
            assert_eq!(s.stalks, BTreeMap::from([(-top, 1)]));
            assert_eq!(2 * top, o.orbit_dim(&lambda).unwrap() as i64);
        }
    }

    proptest! {
        #[test]
        fn total_matches_freudenthal(a in 0i64..6, b in 0i64..6) {
            let o = RealFormFamily::octonionic();
            let lambda = rw(&[a.max(b), a.min(b)]);
            let l = o.to_dual_weight(&lambda).unwrap().weight;
            for mu in weights_below(&o, &lambda).unwrap() {
                let m = o.to_dual_weight(&mu).unwrap().weight;
                let s = stalk_polynomial(&o, &lambda, &mu).unwrap();
                prop_assert_eq!(
                    BigInt::from(total_dim(&s)),
                    o.dual_system().freudenthal_multiplicity(&l, &m).unwrap()
                );
            }
        }
    }
}
