//! Exact polynomials in `q` and the principal specialization of Schur
//! polynomials, computed both by tableau enumeration and by the hook
//! content product.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multiset::NatMultiset;
use crate::partition::{Frame, FramedPartition, Partition};
use crate::tableaux::enumerate_ssyt;

/// A polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Stored densely with no trailing zero coefficients, so the zero polynomial
/// has no coefficients and derived equality is coefficient-wise.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        Self::from_coeffs(coeffs)
    }

    /// `q^e - 1`.
    pub fn q_power_minus_one(e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[0] = -BigInt::one();
        coeffs[e] += BigInt::one();
        Self::from_coeffs(coeffs)
    }

    /// Coefficients by increasing exponent; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies in place by `q^e - 1`.
    pub fn mul_q_power_minus_one(&mut self, e: usize) {
        if self.is_zero() {
            return;
        }
        if e == 0 {
            self.coeffs.clear();
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + e, BigInt::zero());
        for k in (0..old_len + e).rev() {
            let shifted = if k >= e {
                self.coeffs[k - e].clone()
            } else {
                BigInt::zero()
            };
            let c = &mut self.coeffs[k];
            *c = shifted - &*c;
        }
        let trimmed = Self::from_coeffs(std::mem::take(&mut self.coeffs));
        *self = trimmed;
    }

    /// Quotient by `q^u - 1` when the division is exact, else `None`.
    pub fn div_q_power_minus_one(&self, u: usize) -> Option<QPoly> {
        if u == 0 {
            return None;
        }
        let n = self.coeffs.len();
        if n <= u {
            return self.is_zero().then(QPoly::zero);
        }
        // Cheap necessary test: folding exponents mod u must give zero.
        let mut folded = vec![BigInt::zero(); u];
        for (k, c) in self.coeffs.iter().enumerate() {
            folded[k % u] += c;
        }
        if folded.iter().any(|c| !c.is_zero()) {
            return None;
        }
        // p = (q^u - 1) Q means p_{k+u} = Q_k - Q_{k+u}; solve from the top.
        let mut quotient = vec![BigInt::zero(); n - u];
        for k in (0..n - u).rev() {
            let above = quotient.get(k + u).cloned().unwrap_or_default();
            quotient[k] = &self.coeffs[k + u] + above;
        }
        let q = QPoly::from_coeffs(quotient);
        let mut back = q.clone();
        back.mul_q_power_minus_one(u);
        (back == *self).then_some(q)
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every intermediate leading term; fails with [`Error::NonExactDivision`]
    /// if integer division does not apply.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if nd < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let factor = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &factor * d;
            }
            quot[k] = factor;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Exact quotient; fails unless the remainder is zero.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Whether the coefficients of `q^d` and `q^(total - d)` agree for every `d`.
    pub fn is_palindromic_about(&self, total: usize) -> bool {
        if self.degree().is_some_and(|d| d > total) {
            return false;
        }
        (0..=total).all(|d| self.coeff(d) == self.coeff(total - d))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

/// Lowest exponent first, as `c*q^e` terms joined by ` + ` / ` - `.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `sum over SSYT_r(shape) of q^weight(t)`.
pub fn schur_by_enumeration(shape: &Partition, r: u32) -> QPoly {
    let mut coeffs: Vec<u64> = Vec::new();
    for t in enumerate_ssyt(shape, r) {
        let w = t.weight() as usize;
        if coeffs.len() <= w {
            coeffs.resize(w + 1, 0);
        }
        coeffs[w] += 1;
    }
    QPoly::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}

/// Hook content product
/// `q^B(λ) * prod_{(i,j)} (q^(r+j-i) - 1) / (q^h(i,j) - 1)`,
/// evaluated as one numerator product divided once by one denominator product.
pub fn schur_hcf(shape: &Partition, r: u32) -> Result<QPoly> {
    if shape.length() > r as usize {
        return Err(Error::InvalidBound {
            length: shape.length(),
            bound: r,
        });
    }
    if shape.is_empty() {
        return Ok(QPoly::one());
    }
    // Interior hooks do not depend on the frame, so the tightest one will do.
    let frame = Frame::new(shape.length() as u32, shape.width())?;
    let framed = FramedPartition::new(shape.clone(), frame)?;
    let mut numerator = QPoly::monomial(BigInt::one(), shape.min_weight() as usize);
    let mut denominator = QPoly::one();
    for cell in shape.cells() {
        numerator.mul_q_power_minus_one((r + cell.col - cell.row) as usize);
        denominator.mul_q_power_minus_one(framed.hook_length(cell)? as usize);
    }
    numerator.exact_div(&denominator)
}

/// `prod_{e in E} (q^e - 1)`, with multiplicity.
pub fn geometric_product(exponents: &NatMultiset) -> QPoly {
    let mut p = QPoly::one();
    for e in exponents.elements() {
        p.mul_q_power_minus_one(e as usize);
    }
    p
}

/// Inverts [`geometric_product`]: repeatedly divides out `q^u - 1` for the
/// largest `u` that divides exactly, until only `1` remains.
pub fn recover_exponent_multiset(p: &QPoly) -> Result<NatMultiset> {
    if p.is_zero() {
        return Err(Error::NotAGeometricProduct);
    }
    let mut rest = p.clone();
    let mut found = NatMultiset::new();
    // After dividing out q^u - 1 no larger factor can appear, so the search
    // restarts at the last u rather than at the degree.
    let mut ceiling = rest.degree().unwrap_or(0);
    while !rest.is_one() {
        let deg = rest.degree().ok_or(Error::NotAGeometricProduct)?;
        let start = ceiling.min(deg);
        let (u, quotient) = (1..=start)
            .rev()
            .find_map(|u| rest.div_q_power_minus_one(u).map(|q| (u, q)))
            .ok_or(Error::NotAGeometricProduct)?;
        found.insert(u as u32);
        rest = quotient;
        ceiling = u;
    }
    Ok(found)
}

/// Whether the coefficients of `q^d` and `q^((r+1)n - d)` agree for all `d`.
pub fn is_centrally_symmetric(p: &QPoly, n: usize, r: u32) -> bool {
    p.is_palindromic_about((r as usize + 1) * n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    fn ms(v: &[u32]) -> NatMultiset {
        v.iter().copied().collect()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Schoolbook product over i64, independent of the BigInt path.
    fn naive_geometric(exps: &[u32]) -> Vec<i64> {
        let mut acc = vec![1i64];
        for &e in exps {
            let e = e as usize;
            let mut next = vec![0i64; acc.len() + e];
            for (k, &a) in acc.iter().enumerate() {
                next[k + e] += a;
                next[k] -= a;
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn ring_operations() {
        let a = poly(&[-1, 1]);
        let b = poly(&[1, 1]);
        assert_eq!(&a * &b, poly(&[-1, 0, 1]));
        assert_eq!(&a + &b, poly(&[0, 2]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(poly(&[-1, 0, 1]).exact_div(&a).unwrap(), b);
        assert_eq!(poly(&[1, 0, 1]).exact_div(&a), Err(Error::NonExactDivision));
        assert_eq!(a.exact_div(&QPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(poly(&[0, 0, 0]), QPoly::zero());
    }

    #[test]
    fn q_power_minus_one_helpers() {
        assert_eq!(QPoly::q_power_minus_one(3), poly(&[-1, 0, 0, 1]));
        let mut x = poly(&[1, 1]);
        x.mul_q_power_minus_one(2);
        assert_eq!(x, poly(&[-1, -1, 1, 1]));
        assert_eq!(x.div_q_power_minus_one(2), Some(poly(&[1, 1])));
        assert_eq!(x.div_q_power_minus_one(3), None);
        assert_eq!(poly(&[1, 0, 1]).div_q_power_minus_one(1), None);
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[0, 1, 1]).to_string(), "q + q^2");
        assert_eq!(poly(&[1]).to_string(), "1");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(poly(&[1, -1, -1, 1]).to_string(), "1 - q - q^2 + q^3");
        assert_eq!(poly(&[0, 0, -3, 2]).to_string(), "-3*q^2 + 2*q^3");
    }

    #[test]
    fn enumeration_specialization() {
        let want = poly(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 1]);
        assert_eq!(schur_by_enumeration(&p(&[3, 2, 1]), 3), want);
        assert_eq!(schur_by_enumeration(&Partition::empty(), 4), QPoly::one());
        assert_eq!(schur_by_enumeration(&p(&[1]), 2), poly(&[0, 1, 1]));
        assert_eq!(schur_by_enumeration(&p(&[1, 1, 1]), 2), QPoly::zero());
    }

    #[test]
    fn hook_content_specialization() {
        let want = poly(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 1]);
        assert_eq!(schur_hcf(&p(&[3, 2, 1]), 3).unwrap(), want);
        assert_eq!(schur_hcf(&Partition::empty(), 5).unwrap(), QPoly::one());
        // Only 11/22 fills (2,2) with entries <= 2.
        assert_eq!(
            schur_hcf(&p(&[2, 2]), 2).unwrap(),
            QPoly::monomial(BigInt::one(), 6)
        );
        assert_eq!(
            schur_by_enumeration(&p(&[2, 2]), 2),
            QPoly::monomial(BigInt::one(), 6)
        );
        assert_eq!(
            schur_hcf(&p(&[1, 1, 1]), 2),
            Err(Error::InvalidBound {
                length: 3,
                bound: 2
            })
        );
    }

    #[test]
    fn geometric_products() {
        assert_eq!(geometric_product(&ms(&[1, 2])), poly(&[1, -1, -1, 1]));
        assert_eq!(geometric_product(&NatMultiset::new()), QPoly::one());
        assert_eq!(
            geometric_product(&ms(&[1, 3, 3])),
            QPoly::from_i64(&naive_geometric(&[1, 3, 3]))
        );
        assert_eq!(naive_geometric(&[1, 3, 3]), vec![-1, 1, 0, 2, -2, 0, -1, 1]);
    }

    #[test]
    fn recovery() {
        assert_eq!(
            recover_exponent_multiset(&poly(&[1, -1, -1, 1])).unwrap(),
            ms(&[1, 2])
        );
        assert_eq!(
            recover_exponent_multiset(&QPoly::one()).unwrap(),
            NatMultiset::new()
        );
        let e = ms(&[1, 3, 3]);
        assert_eq!(
            recover_exponent_multiset(&geometric_product(&e)).unwrap(),
            e
        );
        assert_eq!(
            recover_exponent_multiset(&QPoly::zero()),
            Err(Error::NotAGeometricProduct)
        );
        assert_eq!(
            recover_exponent_multiset(&poly(&[1, 1])),
            Err(Error::NotAGeometricProduct)
        );
        // q^2 - 1 times 2: no way to reach 1.
        assert_eq!(
            recover_exponent_multiset(&poly(&[-2, 0, 2])),
            Err(Error::NotAGeometricProduct)
        );
    }

    #[test]
    fn smallest_first_would_fail() {
        // Dividing q^2 - 1 by q - 1 leaves q + 1, which has no factor q^e - 1.
        let rest = poly(&[-1, 0, 1]).div_q_power_minus_one(1).unwrap();
        assert_eq!(rest, poly(&[1, 1]));
        assert!(recover_exponent_multiset(&rest).is_err());
        assert_eq!(
            recover_exponent_multiset(&poly(&[-1, 0, 1])).unwrap(),
            ms(&[2])
        );
    }

    #[test]
    fn central_symmetry() {
        let s = schur_by_enumeration(&p(&[3, 2, 1]), 3);
        assert!(is_centrally_symmetric(&s, 6, 3));
        assert!(is_centrally_symmetric(&QPoly::one(), 0, 1));
        assert!(!is_centrally_symmetric(&poly(&[0, 1, 0, 1]), 1, 2));
    }
}
