use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// Decomposition of `V_lambda (x) V_mu` into irreducibles (Brauer–Klimyk):
/// each weight `nu` of `V_mu` contributes `+-mult(nu)` to the dominant
/// representative of `lambda + nu + rho`, shifted back by `rho`.
pub fn tensor_decompose(
    system: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    system.check(lambda)?;
    system.check(mu)?;
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coords.clone()));
        }
    }
    let rho = system.rho();
    let shifted = lambda.add(&rho);
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (nu, m) in system.character(mu)? {
        let (dom, len) = system.to_dominant(&shifted.add(&nu));
        if dom.coords.contains(&0) {
            continue;
        }
        let entry = acc.entry(dom.sub(&rho)).or_default();
        if len % 2 == 0 {
            *entry += m;
        } else {
            *entry -= m;
        }
    }
    let mut out = BTreeMap::new();
    for (w, m) in acc {
        if m.is_negative() {
            return Err(Error::Inconsistent(format!(
                "negative multiplicity {m} at {w}"
            )));
        }
        if !m.is_zero() {
            let m = u64::try_from(&m).map_err(|_| Error::Overflow(m.to_string()))?;
            out.insert(w, m);
        }
    }
    Ok(out)
}
