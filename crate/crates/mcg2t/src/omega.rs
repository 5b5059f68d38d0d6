//! The matrix homomorphism onto SL(2,Z) obtained by forgetting the
//! punctures, and the lens-space classification it induces.
//!
//! `ta` maps to `[[1,0],[1,1]]` and both `tb` and `tc` map to
//! `[[1,-1],[0,1]]`. Words multiply left to right: the leftmost letter
//! contributes the leftmost matrix factor. A word with matrix
//! `[[q,s],[p,r]]` represents a knot in the lens space `L(|p|,|q|)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{expand, Gen, Word};

/// A 2x2 integer matrix of determinant one, row-major `[[a,b],[c,d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl SL2Matrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<SL2Matrix> {
        let m = SL2Matrix { a, b, c, d };
        if !m.det().is_one() {
            return Err(Error::internal(format!(
                "determinant {} != 1 for {m}",
                m.det()
            )));
        }
        Ok(m)
    }

    pub fn identity() -> SL2Matrix {
        SL2Matrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, rhs: &SL2Matrix) -> SL2Matrix {
        let m = SL2Matrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        };
        debug_assert!(m.det().is_one());
        m
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// First column, read as (q, p).
    pub fn first_column(&self) -> (BigInt, BigInt) {
        (self.a.clone(), self.c.clone())
    }

    fn from_i64(a: i64, b: i64, c: i64, d: i64) -> SL2Matrix {
        SL2Matrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }
}

impl fmt::Display for SL2Matrix {
    /// Text form `q s / p r`, i.e. the top row then the bottom row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} / {} {}", self.a, self.b, self.c, self.d)
    }
}

/// A lens space in normalized coordinates: L(1,0) is the 3-sphere and
/// L(0,1) is the product of a circle and a 2-sphere. For p > 1 the second
/// coordinate is reduced mod p into [1, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: BigUint,
    q: BigUint,
}

impl LensSpace {
    pub fn new(p: BigUint, q: BigUint) -> Result<LensSpace> {
        let ok = if p.is_zero() {
            q.is_one()
        } else if p.is_one() {
            q.is_zero()
        } else {
            q < p && p.gcd(&q).is_one()
        };
        if !ok {
            return Err(Error::domain(format!("invalid lens space L({p},{q})")));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn is_s3(&self) -> bool {
        self.p.is_one()
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Evaluates the matrix image of a pure word. Derived letters are expanded
/// first; a word whose normal form contains rho is rejected.
pub fn omega(w: &Word) -> Result<SL2Matrix> {
    let letters = expand(w).pure_letters()?;
    let mut m = SL2Matrix::identity();
    for (g, e) in letters {
        // closed forms for twist powers keep long power products cheap
        let factor = match g {
            Gen::Ta => SL2Matrix::from_i64(1, 0, e, 1),
            Gen::Tb | Gen::Tc => SL2Matrix::from_i64(1, -e, 0, 1),
            Gen::Rho => return Err(Error::NotPure),
            _ => unreachable!("derived letters are expanded"),
        };
        m = m.mul(&factor);
    }
    Ok(m)
}

/// True iff the word lies in the kernel of the matrix homomorphism.
pub fn is_kernel(w: &Word) -> Result<bool> {
    Ok(omega(w)?.is_identity())
}

/// Reads the lens space of the represented knot off the first matrix
/// column (q, p): the knot lives in L(|p|, |q| mod |p|), with L(1,0) and
/// L(0,1) normalized as stated on [`LensSpace`].
pub fn lens_of(w: &Word) -> Result<LensSpace> {
    let m = omega(w)?;
    let (q, p) = m.first_column();
    lens_from_column(&q, &p)
}

pub fn lens_from_column(q: &BigInt, p: &BigInt) -> Result<LensSpace> {
    let p_abs = p.abs();
    if p_abs.is_zero() {
        return LensSpace::new(BigUint::zero(), BigUint::one());
    }
    if p_abs.is_one() {
        return LensSpace::new(BigUint::one(), BigUint::zero());
    }
    let q_norm = q.mod_floor(&p_abs);
    LensSpace::new(
        p_abs.to_biguint().expect("abs is nonnegative"),
        q_norm.to_biguint().expect("mod_floor of positive is nonnegative"),
    )
}
