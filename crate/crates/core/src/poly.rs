//! Exact univariate polynomials.
//!
//! [`QPolynomial`] is a sparse polynomial with arbitrary-precision integer
//! coefficients. It carries Kostka-Foulkes polynomials, q-Kostant values and
//! the numerators/denominators of Hilbert series. [`LaurentPoly`] has rational
//! coefficients and integer exponents; it is only used for symbolic checks in
//! a formal scaling parameter.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse integer polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The variable itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exponent: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense constructor, `coeffs[k]` is the coefficient of the k-th power.
    pub fn from_dense<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, c.clone().into())),
        )
    }

    /// `1 - t^d`.
    pub fn one_minus_power(d: u32) -> Self {
        Self::from_terms([(0, 1), (d, -1)])
    }

    pub fn add_term(&mut self, exponent: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, exponent: u32) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|(e, c)| c * num_traits::pow(x.clone(), *e as usize))
            .sum()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// First negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(u32, &BigInt)> {
        self.terms().find(|(_, c)| c.is_negative())
    }

    /// Substitutes `q -> q^factor`.
    pub fn scale_exponents(&self, factor: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * factor, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the sign is left alone.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v / &c)).collect(),
        }
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let lb = b.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            r = &r.scale(&lb) - &b.shift(dr - db).scale(&lr);
        }
        r
    }

    /// Exact division over the integers; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let ld = d.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (qc, rem) = r.leading_coeff().unwrap().div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            let term = Self::monomial(dr - dd, qc);
            r = &r - &(&term * d);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Gcd in `Z[q]` by the primitive remainder sequence, normalised to a
    /// positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        let content = self.content().gcd(&other.content());
        let mut g = a.primitive_part().scale(&content);
        if g.leading_coeff().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        g
    }

    /// Power series coefficients of `self / den` up to `q^order` inclusive.
    /// Requires `den(0) = ±1`.
    pub fn series_div(&self, den: &Self, order: u32) -> Vec<BigInt> {
        let c0 = den.coeff(0);
        assert!(c0.abs().is_one(), "series_div needs a unit constant term");
        let n = order as usize + 1;
        let mut out = vec![BigInt::zero(); n];
        for k in 0..n {
            let mut acc = self.coeff(k as u32);
            for (e, c) in den.terms() {
                let e = e as usize;
                if e == 0 || e > k {
                    continue;
                }
                acc -= c * &out[k - e];
            }
            out[k] = acc * &c0;
        }
        out
    }

    /// Renders with the given variable name, ascending exponents, e.g. `1 + q + 2q^3`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if e == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

/// Laurent polynomial in one formal variable with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exponent: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exponent, c);
        }
        Self { coeffs }
    }

    /// `x^k`
    pub fn power(k: i64) -> Self {
        Self::monomial(k, BigRational::one())
    }

    pub fn coeff(&self, exponent: i64) -> BigRational {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exponent: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .coeffs
            .entry(exponent)
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::power(0)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_dense(c)
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[0, 1, 1]).to_string(), "q + q^2");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[-2, 0, 0, 3]).to_string(), "-2 + 3q^3");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[1, -1]).display_in("t"), "1 - t");
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let a = p(&[1, 2, 3]);
        let b = p(&[1, 2, 3]);
        let d = &a - &b;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
        assert_eq!(p(&[0, 0, 5]).terms().count(), 1);
    }

    #[test]
    fn exact_division_and_gcd() {
        // (1 - t^6) = (1 - t^2)(1 + t^2 + t^4)
        let num = QPolynomial::one_minus_power(6);
        let den = QPolynomial::one_minus_power(2);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[1, 0, 1, 0, 1]));
        assert!(den.div_exact(&QPolynomial::one_minus_power(3)).is_none());
        let g = QPolynomial::one_minus_power(4).gcd(&QPolynomial::one_minus_power(6));
        // gcd is 1 - t^2 up to sign
        assert_eq!(g, p(&[-1, 0, 1]));
    }

    #[test]
    fn series_of_geometric() {
        let s = QPolynomial::one().series_div(&QPolynomial::one_minus_power(2), 6);
        let expect: Vec<BigInt> = [1, 0, 1, 0, 1, 0, 1].iter().map(|&x| x.into()).collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn substitution_and_eval() {
        let k = p(&[0, 1, 1]);
        assert_eq!(
            k.scale_exponents(4),
            QPolynomial::from_terms([(4, 1), (8, 1)])
        );
        assert_eq!(k.eval_at_one(), BigInt::from(2));
        assert_eq!(k.eval(&BigInt::from(2)), BigInt::from(6));
    }

    #[test]
    fn laurent_cancellation() {
        let x = LaurentPoly::power(1);
        let xinv = LaurentPoly::power(-1);
        assert_eq!(x * xinv, LaurentPoly::one());
        let a = LaurentPoly::power(3) - LaurentPoly::power(3);
        assert!(a.is_zero());
    }
}
