//! Kostka–Foulkes polynomials (Lusztig's q-analogue of weight multiplicity)
//! for `A1` and `A2`.

mod tableau;
mod tensor;

pub use tableau::{charge, charge_of_word, kostka_charge, ssyt, Tableau};
pub use tensor::tensor_decompose;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::rootdata::{CartanType, RootSystem, Weight};

fn require_type_a(system: &RootSystem) -> Result<()> {
    match system.cartan_type() {
        CartanType::A1 | CartanType::A2 => Ok(()),
        ty => Err(Error::UnsupportedType(ty)),
    }
}

/// q-analogue of Kostant's partition function on simple-root coordinates:
/// the coefficient of `q^N` counts the ways of writing `beta` as a sum of `N`
/// positive roots.
pub fn q_kostant_root(system: &RootSystem, beta: &[i64]) -> Result<QPolynomial> {
    require_type_a(system)?;
    if beta.len() != system.rank() {
        return Err(Error::RankMismatch {
            ty: system.cartan_type(),
            rank: system.rank(),
            got: beta.len(),
        });
    }
    if beta.iter().any(|&c| c < 0) {
        return Ok(QPolynomial::zero());
    }
    // dense table over the box 0 <= v <= beta, row-major
    let dims: Vec<usize> = beta.iter().map(|&c| c as usize + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[i64]| -> usize {
        v.iter()
            .zip(&dims)
            .fold(0, |acc, (&c, &d)| acc * d + c as usize)
    };
    let mut table = vec![QPolynomial::zero(); size];
    table[0] = QPolynomial::one();
    let q = QPolynomial::q();
    let mut point = vec![0i64; beta.len()];
    for alpha in system.positive_roots() {
        // unbounded knapsack: visit the box in increasing order
        for flat in 0..size {
            let mut rem = flat;
            for k in (0..dims.len()).rev() {
                point[k] = (rem % dims[k]) as i64;
                rem /= dims[k];
            }
            let prev: Vec<i64> = point.iter().zip(alpha).map(|(p, a)| p - a).collect();
            if prev.iter().any(|&c| c < 0) {
                continue;
            }
            let add = &q * &table[index(&prev)];
            table[flat] += &add;
        }
    }
    Ok(table.pop().expect("nonempty box"))
}

/// [`q_kostant_root`] for a weight; the weight must lie in the root lattice.
pub fn q_kostant(system: &RootSystem, beta: &Weight) -> Result<QPolynomial> {
    require_type_a(system)?;
    system.check(beta)?;
    let coords = system
        .root_lattice_coords(beta)
        .ok_or_else(|| Error::NotInRootLattice(beta.coords.clone()))?;
    q_kostant_root(system, &coords)
}

/// `K_{lambda,mu}(q) = sum_w sign(w) P_q(w(lambda + rho) - (mu + rho))`.
///
/// All `|W|` terms are summed. The result is checked for nonnegative
/// coefficients.
pub fn kostka_foulkes(system: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<QPolynomial> {
    require_type_a(system)?;
    system.check(lambda)?;
    system.check(mu)?;
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coords.clone()));
        }
    }
    let diff = lambda.sub(mu);
    if !system.in_root_lattice(&diff) {
        return Err(Error::NotInRootLattice(diff.coords));
    }
    let rho = system.rho();
    let lr = lambda.add(&rho);
    let mr = mu.add(&rho);
    let mut cache: HashMap<Vec<i64>, QPolynomial> = HashMap::new();
    let mut total = QPolynomial::zero();
    for w in system.weyl_elements()? {
        let arg = w.apply(&lr).sub(&mr);
        let coords = system
            .root_lattice_coords(&arg)
            .expect("Weyl group preserves the root-lattice class");
        let p = match cache.get(&coords) {
            Some(p) => p.clone(),
            None => {
                let p = q_kostant_root(system, &coords)?;
                cache.insert(coords, p.clone());
                p
            }
        };
        if w.sign() > 0 {
            total = total + p;
        } else {
            total = total - p;
        }
    }
    if let Some((exponent, value)) = total.first_negative() {
        return Err(Error::NegativeCoefficient {
            exponent,
            value: value.to_string(),
        });
    }
    Ok(total)
}

/// Semisimple weight of a `GL`-style partition with at most `rank + 1` rows
/// (consecutive row differences).
pub fn partition_to_weight(system: &RootSystem, partition: &[u32]) -> Result<Weight> {
    require_type_a(system)?;
    let rows = system.rank() + 1;
    tableau::check_partition(partition)?;
    if partition.len() > rows {
        return Err(Error::NotAPartition(partition.to_vec()));
    }
    let mut padded: Vec<i64> = partition.iter().map(|&x| i64::from(x)).collect();
    padded.resize(rows, 0);
    let coords: Vec<i64> = padded.windows(2).map(|w| w[0] - w[1]).collect();
    system.weight(&coords)
}

/// Kostka–Foulkes polynomial indexed by partitions of equal size, via the
/// semisimple weights of [`partition_to_weight`].
pub fn kostka_foulkes_gl(
    system: &RootSystem,
    shape: &[u32],
    content: &[u32],
) -> Result<QPolynomial> {
    let (s, c) = (shape.iter().sum::<u32>(), content.iter().sum::<u32>());
    if s != c {
        return Err(Error::SizeMismatch {
            shape: s,
            content: c,
        });
    }
    let lambda = partition_to_weight(system, shape)?;
    let mu = partition_to_weight(system, content)?;
    if !system.dominates(&lambda, &mu) {
        return Ok(QPolynomial::zero());
    }
    kostka_foulkes(system, &lambda, &mu)
}

/// Partitions of `size` with at most `rows` parts, in reverse lexicographic
/// order.
pub fn partitions(size: u32, rows: usize) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, rows, &mut Vec::new(), &mut out);
    out
}
