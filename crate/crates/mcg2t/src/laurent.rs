//! Integer Laurent polynomials in one variable, with exact division,
//! resultants, and the torus-knot polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{bareiss_determinant, IntegerMatrix};

/// An integer Laurent polynomial, stored as a sparse exponent-to-coefficient
/// map with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> LaurentPolynomial {
        LaurentPolynomial::default()
    }

    pub fn one() -> LaurentPolynomial {
        LaurentPolynomial::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> LaurentPolynomial {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPolynomial { coeffs }
    }

    /// `t^n - 1`.
    pub fn power_minus_one(n: i64) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::monomial(n, BigInt::one());
        p.add_term(0, -BigInt::one());
        p
    }

    /// `1 + t + ... + t^(n-1)`.
    pub fn cyclotomic_quotient(n: i64) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for i in 0..n {
            p.add_term(i, BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn shifted(&self, delta: i64) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + delta, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division in the Laurent ring; errors if the divisor does not
    /// divide exactly.
    pub fn div_exact(&self, divisor: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        if divisor.is_zero() {
            return Err(Error::domain("division by zero polynomial".to_string()));
        }
        if self.is_zero() {
            return Ok(LaurentPolynomial::zero());
        }
        let shift = self.min_degree().expect("nonzero") - divisor.min_degree().expect("nonzero");
        let num = self.shifted(-self.min_degree().expect("nonzero"));
        let den = divisor.shifted(-divisor.min_degree().expect("nonzero"));
        // ordinary polynomial long division from the top degree
        let mut rem = num;
        let mut quot = LaurentPolynomial::zero();
        let den_deg = den.max_degree().expect("nonzero");
        let den_lead = den.coeff(den_deg);
        while !rem.is_zero() && rem.max_degree().expect("nonzero") >= den_deg {
            let deg = rem.max_degree().expect("nonzero");
            let lead = rem.coeff(deg);
            let (q, r) = num_integer::Integer::div_rem(&lead, &den_lead);
            if !r.is_zero() {
                return Err(Error::internal(format!(
                    "nonzero remainder in exact polynomial division ({lead} by {den_lead})"
                )));
            }
            let term = LaurentPolynomial::monomial(deg - den_deg, q);
            rem = rem.sub(&term.mul(&den));
            quot = quot.add(&term);
        }
        if !rem.is_zero() {
            return Err(Error::internal("nonzero remainder in exact polynomial division".to_string()));
        }
        Ok(quot.shifted(shift))
    }

    /// Unit normalization: lowest degree shifted to zero and the top
    /// coefficient made positive.
    pub fn normalized_unit(&self) -> LaurentPolynomial {
        if self.is_zero() {
            return LaurentPolynomial::zero();
        }
        let shifted = self.shifted(-self.min_degree().expect("nonzero"));
        if shifted.coeff(shifted.max_degree().expect("nonzero")).is_negative() {
            shifted.neg()
        } else {
            shifted
        }
    }

    /// Dense coefficient vector of the unit-normalized polynomial, constant
    /// term first.
    pub fn dense_coefficients(&self) -> Vec<BigInt> {
        let norm = self.normalized_unit();
        if norm.is_zero() {
            return vec![];
        }
        let deg = norm.max_degree().expect("nonzero");
        (0..=deg).map(|e| norm.coeff(e)).collect()
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Ascending powers: `1 - t + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if show_coeff {
                    f.write_str("*")?;
                }
                if e == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// The torus-knot polynomial `(t^(kh) - 1)(t - 1) / ((t^k - 1)(t^h - 1))`,
/// computed by exact division.
pub fn torus_alexander(k: i64, h: i64) -> Result<LaurentPolynomial> {
    if k < 2 || h < 2 {
        return Err(Error::domain(format!("torus polynomial requires k,h >= 2, got ({k},{h})")));
    }
    if num_integer::gcd(k, h) != 1 {
        return Err(Error::domain(format!("gcd({k},{h}) != 1")));
    }
    let num = LaurentPolynomial::power_minus_one(k * h)
        .mul(&LaurentPolynomial::power_minus_one(1));
    let q1 = num.div_exact(&LaurentPolynomial::power_minus_one(k))?;
    let q2 = q1.div_exact(&LaurentPolynomial::power_minus_one(h))?;
    Ok(q2.normalized_unit())
}

/// The resultant of two nonzero polynomials (after unit normalization),
/// computed as the Bareiss determinant of the Sylvester matrix.
pub fn resultant(f: &LaurentPolynomial, g: &LaurentPolynomial) -> BigInt {
    let fc = f.dense_coefficients();
    let gc = g.dense_coefficients();
    if fc.is_empty() || gc.is_empty() {
        return BigInt::zero();
    }
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 {
        return fc[0].pow(n as u32);
    }
    if n == 0 {
        return gc[0].pow(m as u32);
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in fc.iter().enumerate() {
            rows[i][i + (m - j)] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in gc.iter().enumerate() {
            rows[n + i][i + (n - j)] = c.clone();
        }
    }
    bareiss_determinant(&IntegerMatrix::from_rows(rows))
}
