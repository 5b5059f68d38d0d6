//! Standard words for torus knots and two-bridge knots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::word::{Gen, Word};

/// A torus knot of type (k,h): coprime, with 0 < |k| < h.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusKnotSpec {
    k: i64,
    h: i64,
}

impl TorusKnotSpec {
    pub fn new(k: i64, h: i64) -> Result<TorusKnotSpec> {
        if k == 0 || k.abs() >= h {
            return Err(Error::domain(format!(
                "torus knot requires 0 < |k| < h, got ({k},{h})"
            )));
        }
        if k.abs().gcd(&h) != 1 {
            return Err(Error::domain(format!("gcd({k},{h}) != 1")));
        }
        Ok(TorusKnotSpec { k, h })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn h(&self) -> i64 {
        self.h
    }
}

/// Half-parameters of an even Conway presentation: the diagram carries the
/// doubled values [2a_1, 2b_1, ..., 2a_n, 2b_n].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConwayParams {
    pairs: Vec<(i64, i64)>,
}

impl ConwayParams {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<ConwayParams> {
        if pairs.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::domain("Conway half-parameters must be nonzero".to_string()));
        }
        Ok(ConwayParams { pairs })
    }

    /// Builds from the doubled diagram parameters; the list must have even
    /// length and all entries even and nonzero.
    pub fn from_doubled(values: &[i64]) -> Result<ConwayParams> {
        if values.len() % 2 != 0 {
            return Err(Error::domain("Conway parameter list must have even length".to_string()));
        }
        if values.iter().any(|&v| v == 0 || v % 2 != 0) {
            return Err(Error::domain("Conway parameters must be even and nonzero".to_string()));
        }
        let pairs = values
            .chunks_exact(2)
            .map(|c| (c[0] / 2, c[1] / 2))
            .collect();
        Ok(ConwayParams { pairs })
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn doubled(&self) -> Vec<i64> {
        self.pairs.iter().flat_map(|&(a, b)| [2 * a, 2 * b]).collect()
    }

    /// Evaluates the continued fraction
    /// `2a_1 + 1/(2b_1 + 1/(... + 1/(2b_n)))` exactly, returning the
    /// fraction with positive numerator.
    pub fn fraction(&self) -> (BigInt, BigInt) {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(0);
        for &v in self.doubled().iter().rev() {
            let new_num = BigInt::from(v) * &num + &den;
            den = num;
            num = new_num;
        }
        if num.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        }
    }
}

/// A two-bridge knot of type (a,b): a odd positive, b even, 0 < |b| < a,
/// coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoBridgeSpec {
    a: i64,
    b: i64,
}

impl TwoBridgeSpec {
    pub fn new(a: i64, b: i64) -> Result<TwoBridgeSpec> {
        if a <= 0 || a % 2 == 0 {
            return Err(Error::domain(format!("two-bridge type needs odd a > 0, got a = {a}")));
        }
        if b % 2 != 0 || b == 0 || b.abs() >= a {
            return Err(Error::domain(format!(
                "two-bridge type needs b even with 0 < |b| < a, got b = {b}"
            )));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::domain(format!("gcd({a},{b}) != 1")));
        }
        Ok(TwoBridgeSpec { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }
}

/// The standard word of the (k,h) torus knot: the product over i = 1..h of
/// `tm^(floor((i-1)k/h) - floor(ik/h)) tl^-1`, closed by `tb ta tb`.
/// Floors are mathematical floors, so mirror knots (k < 0) work unchanged.
/// The result is freely reduced.
pub fn torus_knot_word(k: i64, h: i64) -> Result<Word> {
    let spec = TorusKnotSpec::new(k, h)?;
    let (k, h) = (spec.k(), spec.h());
    let mut letters = Vec::with_capacity(2 * h as usize + 3);
    for i in 1..=h {
        let e = ((i - 1) * k).div_euclid(h) - (i * k).div_euclid(h);
        if e != 0 {
            letters.push((Gen::Tm, e));
        }
        letters.push((Gen::Tl, -1));
    }
    letters.extend([(Gen::Tb, 1), (Gen::Ta, 1), (Gen::Tb, 1)]);
    Ok(Word::from_letters(letters).reduced())
}

/// Expands a/b into the even Conway parameters: at every step the quotient
/// is the unique even integer leaving a remainder smaller than the
/// divisor. The alternating parities (numerator odd at slope steps, even
/// at twist steps) guarantee existence and uniqueness, and the run always
/// closes on a twist step, so the parameter list has even length.
pub fn even_continued_fraction(a: i64, b: i64) -> Result<ConwayParams> {
    let spec = TwoBridgeSpec::new(a, b)?;
    let (mut num, mut den) = (spec.a(), spec.b());
    let mut halves = Vec::new();
    loop {
        // slope step: num odd, den even
        let (q, r) = even_quotient(num, den);
        halves.push(q / 2);
        (num, den) = (den, r);
        // twist step: num even, den odd
        let (q, r) = even_quotient(num, den);
        halves.push(q / 2);
        if r == 0 {
            break;
        }
        (num, den) = (den, r);
    }
    let pairs = halves.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    Ok(ConwayParams { pairs })
}

/// The unique even q with |num - q*den| < |den| (num/den never lies at odd
/// distance-one midpoints thanks to the parity alternation).
fn even_quotient(num: i64, den: i64) -> (i64, i64) {
    debug_assert!(den != 0);
    let q0 = num.div_euclid(den);
    let r0 = num.rem_euclid(den);
    if r0 == 0 {
        debug_assert!(q0 % 2 == 0);
        return (q0, 0);
    }
    // the two integer candidates around num/den are q0 and q0 +- 1; exactly
    // one of two consecutive integers is even
    let q1 = if den > 0 { q0 + 1 } else { q0 - 1 };
    if q0 % 2 == 0 {
        (q0, num - q0 * den)
    } else {
        (q1, num - q1 * den)
    }
}

/// The standard word of the two-bridge knot with the given Conway
/// parameters: `tb ta tb` followed by `tm^-b_i te^a_i` blocks in
/// descending index order. Empty parameters give the trivial knot word.
pub fn two_bridge_word(params: &ConwayParams) -> Word {
    let mut letters = vec![(Gen::Tb, 1), (Gen::Ta, 1), (Gen::Tb, 1)];
    for &(a, b) in params.pairs().iter().rev() {
        letters.push((Gen::Tm, -b));
        letters.push((Gen::Te, a));
    }
    Word::from_letters(letters).reduced()
}

/// Composition of [`even_continued_fraction`] and [`two_bridge_word`].
pub fn two_bridge_word_from_fraction(a: i64, b: i64) -> Result<Word> {
    Ok(two_bridge_word(&even_continued_fraction(a, b)?))
}
