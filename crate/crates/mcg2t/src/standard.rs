//! Continued fractions, the standard trivial-knot words, matrix
//! adjustment, and the kernel/standard decomposition of a word.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::omega::omega;
use crate::word::{compose, invert, Gen, Word};

/// Euclidean continued-fraction expansion p/q = [a_1, ..., a_m] with all
/// coefficients positive and strictly decreasing remainders ending at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFExpansion {
    coefficients: Vec<i64>,
}

impl CFExpansion {
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Reassembles the fraction; exact inverse of [`continued_fraction`].
    pub fn value(&self) -> (i64, i64) {
        let (mut num, mut den) = (1i128, 0i128);
        for &a in self.coefficients.iter().rev() {
            // a + 1/(num/den) = (a*num + den)/num
            let new_num = a as i128 * num + den;
            den = num;
            num = new_num;
        }
        (num as i64, den as i64)
    }
}

/// Runs the Euclidean algorithm on 0 < q < p with gcd(p,q) = 1.
pub fn continued_fraction(p: i64, q: i64) -> Result<CFExpansion> {
    if !(0 < q && q < p) {
        return Err(Error::domain(format!(
            "continued fraction requires 0 < q < p, got ({p},{q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::domain(format!("gcd({p},{q}) != 1")));
    }
    let (mut r0, mut r1) = (p, q);
    let mut coefficients = Vec::new();
    while r1 != 0 {
        coefficients.push(r0 / r1);
        (r0, r1) = (r1, r0 % r1);
    }
    debug_assert_eq!(r0, 1);
    Ok(CFExpansion { coefficients })
}

/// The standard word representing the trivial knot in L(p,q).
///
/// L(1,0) gives `tb ta tb`, L(0,1) the empty word; otherwise the continued
/// fraction drives an alternating power product of `ta` and `tb^-1`, closed
/// by `tb ta tb` when the expansion has even length. The first matrix
/// column of the result is (q, p).
pub fn psi_standard(p: i64, q: i64) -> Result<Word> {
    let word = match (p, q) {
        (1, 0) => Word::from_letters([(Gen::Tb, 1), (Gen::Ta, 1), (Gen::Tb, 1)]),
        (0, 1) => Word::empty(),
        _ => {
            let cf = continued_fraction(p, q)?;
            let mut letters = Vec::new();
            for (i, &a) in cf.coefficients().iter().enumerate() {
                if i % 2 == 0 {
                    letters.push((Gen::Ta, a));
                } else {
                    letters.push((Gen::Tb, -a));
                }
            }
            if cf.len() % 2 == 0 {
                letters.extend([(Gen::Tb, 1), (Gen::Ta, 1), (Gen::Tb, 1)]);
            }
            Word::from_letters(letters).reduced()
        }
    };
    let (mq, mp) = omega(&word)?.first_column();
    if mq != BigInt::from(q) || mp != BigInt::from(p) {
        return Err(Error::internal(format!(
            "standard word for L({p},{q}) has first column ({mq},{mp})"
        )));
    }
    Ok(word)
}

/// Trades the free column of the matrix image: appends `tb^-c` so that the
/// image becomes `[[q,s],[p,r]]` for the requested (r,s). The appended
/// twist extends over the splitting, so the represented knot is unchanged.
pub fn adjust_rs(w: &Word, r: &BigInt, s: &BigInt) -> Result<Word> {
    let m = omega(w)?;
    let (q, p) = m.first_column();
    if &q * r - &p * s != BigInt::one() {
        return Err(Error::domain(format!(
            "determinant mismatch: q*r - p*s = {} != 1",
            &q * r - &p * s
        )));
    }
    // r = r_bar + c p and s = s_bar + c q must admit a common integer c
    let c = if !p.is_zero() {
        let (c, rem) = (r - &m.d).div_rem(&p);
        if !rem.is_zero() {
            return Err(Error::domain(format!("unreachable (r,s)=({r},{s})")));
        }
        if &m.b + &c * &q != *s {
            return Err(Error::domain(format!("unreachable (r,s)=({r},{s})")));
        }
        c
    } else {
        // p = 0 forces q = +-1 and r = r_bar; c comes from the s congruence
        if *r != m.d {
            return Err(Error::domain(format!("unreachable (r,s)=({r},{s})")));
        }
        (s - &m.b) * &q
    };
    let c_i64: i64 = i64::try_from(&c)
        .map_err(|_| Error::domain(format!("adjustment exponent {c} out of range")))?;
    Ok(compose(w, &Word::single(Gen::Tb, -c_i64)))
}

/// Splits a word representing a knot in L(p,q) into kernel factors around
/// the standard trivial-knot word: after the matrix adjustment,
/// `w = left * psi_standard = psi_standard * right` with both factors in
/// the kernel.
pub fn standard_decompose(w: &Word, p: i64, q: i64) -> Result<(Word, Word)> {
    let std_word = psi_standard(p, q)?;
    let target = omega(&std_word)?;
    let m = omega(w)?;
    let (wq, wp) = m.first_column();
    if wq != BigInt::from(q) || wp != BigInt::from(p) {
        return Err(Error::domain(format!(
            "wrong lens space: word has first column ({wq},{wp}), expected ({q},{p})"
        )));
    }
    let adjusted = adjust_rs(w, &target.d, &target.b)?;
    let std_inv = invert(&std_word);
    let left = compose(&adjusted, &std_inv);
    let right = compose(&std_inv, &adjusted);
    debug_assert!(omega(&left)?.is_identity());
    debug_assert!(omega(&right)?.is_identity());
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::is_kernel;
    use crate::word::{format_word, parse_word};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn cf_examples() {
        assert_eq!(continued_fraction(5, 2).unwrap().coefficients(), &[2, 2]);
        assert_eq!(continued_fraction(3, 1).unwrap().coefficients(), &[3]);
        assert_eq!(continued_fraction(7, 5).unwrap().coefficients(), &[1, 2, 2]);
        assert!(continued_fraction(4, 2).is_err());
        assert!(continued_fraction(2, 3).is_err());
        assert!(continued_fraction(5, 0).is_err());
    }

    #[test]
    fn cf_round_trip() {
        for p in 2..=60i64 {
            for q in 1..p {
                if p.gcd(&q) == 1 {
                    assert_eq!(continued_fraction(p, q).unwrap().value(), (p, q));
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(format_word(&psi_standard(1, 0).unwrap()), "tb ta tb");
        assert!(psi_standard(0, 1).unwrap().is_empty());
        assert_eq!(format_word(&psi_standard(5, 2).unwrap()), "ta^2 tb^-1 ta tb");
        assert_eq!(format_word(&psi_standard(3, 1).unwrap()), "ta^3");
        assert!(psi_standard(4, 2).is_err());
        assert!(psi_standard(0, 2).is_err());
    }

    #[test]
    fn adjust_examples() {
        let psi10 = psi_standard(1, 0).unwrap();
        // c = 1 appends one tb^-1
        let adjusted = adjust_rs(&psi10, &BigInt::from(1), &BigInt::from(-1)).unwrap();
        assert_eq!(format_word(&adjusted), "tb ta");
        let m = omega(&adjusted).unwrap();
        assert_eq!((m.a, m.b, m.c, m.d), (0.into(), (-1).into(), 1.into(), 1.into()));
        // c = 0 leaves the word alone
        let same = adjust_rs(&psi10, &BigInt::from(0), &BigInt::from(-1)).unwrap();
        assert_eq!(same, psi10.normalized());
        // determinant mismatch
        assert!(matches!(
            adjust_rs(&psi10, &BigInt::from(1), &BigInt::from(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn adjust_on_s1xs2() {
        // for L(0,1) any c is reachable through tb^-c
        let e = Word::empty();
        for c in -3..=3i64 {
            let adjusted = adjust_rs(&e, &BigInt::one(), &BigInt::from(c)).unwrap();
            let m = omega(&adjusted).unwrap();
            assert_eq!(m.b, BigInt::from(c));
        }
    }

    #[test]
    fn decompose_standard_is_trivial() {
        for (p, q) in [(1, 0), (0, 1), (5, 2), (7, 5)] {
            let psi = psi_standard(p, q).unwrap();
            let (left, right) = standard_decompose(&psi, p, q).unwrap();
            assert!(left.is_empty());
            assert!(right.is_empty());
        }
    }

    #[test]
    fn decompose_kernel_word() {
        let word = w("tm^3");
        let (left, right) = standard_decompose(&word, 0, 1).unwrap();
        assert_eq!(left, word);
        assert_eq!(right, word);
        assert!(is_kernel(&left).unwrap());
    }

    #[test]
    fn decompose_wrong_lens() {
        assert!(matches!(
            standard_decompose(&w("ta^2"), 1, 0),
            Err(Error::Domain(_))
        ));
    }
}
