use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::linalg::rat;

impl RootSystem {
    /// Dominant weights `mu <= lambda`, found by subtracting positive roots
    /// and staying in the dominant chamber (this poset is connected by such
    /// steps). Sorted by the height of `lambda - mu`, then by coordinates.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        let roots: Vec<Weight> = self
            .positive_roots
            .iter()
            .map(|b| self.root_to_weight(b))
            .collect();
        let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(cur) = queue.pop_front() {
            for r in &roots {
                let next = cur.sub(r);
                if next.is_dominant() && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<(i64, Weight)> = seen
            .into_iter()
            .map(|w| {
                let h = self
                    .root_lattice_coords(&lambda.sub(&w))
                    .expect("differences of roots")
                    .iter()
                    .sum();
                (h, w)
            })
            .collect();
        out.sort();
        Ok(out.into_iter().map(|(_, w)| w).collect())
    }

    /// Multiplicities of all dominant weights of `V_lambda` via Freudenthal's
    /// recursion, memoised level by level.
    pub fn dominant_character(&self, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
        let doms = self.dominant_weights_below(lambda)?;
        let rho = self.rho();
        let lr = lambda.add(&rho);
        let top = self.inner(&lr, &lr);
        let roots: Vec<Weight> = self
            .positive_roots
            .iter()
            .map(|b| self.root_to_weight(b))
            .collect();
        let mut mult: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for mu in doms {
            if mu == *lambda {
                mult.insert(mu, BigInt::from(1));
                continue;
            }
            let mut acc = BigRational::zero();
            for alpha in &roots {
                let mut shifted = mu.add(alpha);
                loop {
                    let (dom, _) = self.to_dominant(&shifted);
                    let Some(m) = mult.get(&dom) else { break };
                    acc +=
                        rat(1) * BigRational::from_integer(m.clone()) * self.inner(&shifted, alpha);
                    shifted = shifted.add(alpha);
                }
            }
            let mr = mu.add(&rho);
            let denom = &top - self.inner(&mr, &mr);
            debug_assert!(denom.is_positive());
            let m = acc * rat(2) / denom;
            if !m.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "Freudenthal recursion produced non-integer {m} at {mu}"
                )));
            }
            mult.insert(mu, m.to_integer());
        }
        Ok(mult)
    }

    /// Dimension of the `mu`-weight space of `V_lambda`.
    pub fn freudenthal_multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<BigInt> {
        self.check(lambda)?;
        self.check(mu)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        let (dom, _) = self.to_dominant(mu);
        if !self.dominates(lambda, &dom) {
            return Ok(BigInt::zero());
        }
        Ok(self
            .dominant_character(lambda)?
            .remove(&dom)
            .unwrap_or_default())
    }

    /// Full character of `V_lambda`: every weight with its multiplicity.
    pub fn character(&self, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
        let dom = self.dominant_character(lambda)?;
        let mut out = BTreeMap::new();
        for (w, m) in dom {
            for x in self.weyl_orbit(&w)? {
                out.insert(x, m.clone());
            }
        }
        Ok(out)
    }
}
