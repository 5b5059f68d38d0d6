//! Group presentations derived from the torus-knot words: the two-generator
//! knot group presentation, its cyclic presentations for branched covers,
//! Fox calculus, and homology of the covers with a resultant cross-check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::free::{Basis, FreeWord};
use crate::laurent::{resultant, LaurentPolynomial};
use crate::matrix::{smith_normal_form, IntegerMatrix};

/// A finite group presentation with freely reduced relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    basis: Basis,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(basis: Basis, relators: Vec<FreeWord>) -> Presentation {
        Presentation { basis, relators }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn generators(&self) -> &[String] {
        self.basis.names()
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }
}

/// A cyclic presentation: n generators `x0 .. x{n-1}` whose relators are
/// the shift orbit of a single word (subscripts mod n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPresentation {
    n: usize,
    word: FreeWord,
}

impl CyclicPresentation {
    pub fn new(n: usize, word: FreeWord) -> Result<CyclicPresentation> {
        if n == 0 {
            return Err(Error::domain("cyclic presentation needs n >= 1".to_string()));
        }
        if word.runs().iter().any(|&(g, _)| g >= n) {
            return Err(Error::domain("cyclic word uses a generator index >= n".to_string()));
        }
        Ok(CyclicPresentation { n, word })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &FreeWord {
        &self.word
    }

    pub fn basis(&self) -> Basis {
        Basis::indexed(self.n)
    }

    /// The i-th relator: all subscripts shifted by +i mod n.
    pub fn shifted_word(&self, i: usize) -> FreeWord {
        self.word.relabel(|g| (g + i) % self.n)
    }

    pub fn relators(&self) -> Vec<FreeWord> {
        (0..self.n).map(|i| self.shifted_word(i)).collect()
    }

    /// Circulant relation matrix of the abelianization: row i lists the
    /// exponent sums of the i-th relator.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let n = self.n;
        let mut row0 = vec![0i64; n];
        for &(g, e) in self.word.runs() {
            row0[g] += e;
        }
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, BigInt::from(row0[(j + n - i) % n]));
            }
        }
        m
    }
}

/// Tests whether two words over `x0 .. x{n-1}` agree up to a uniform index
/// shift mod n, returning the shift when they do.
pub fn shift_equivalent(a: &FreeWord, b: &FreeWord, n: usize) -> Option<usize> {
    if a.runs().len() != b.runs().len() {
        return None;
    }
    if a.runs().is_empty() {
        return Some(0);
    }
    (0..n).find(|&s| &a.relabel(|g| (g + s) % n) == b)
}

/// The knot group presentation of the (k, ck+2) torus knot, k > 1 odd,
/// c > 0: two generators and the single relator
/// `(g^-1 a^(cr+1) g^-1 a^(-c(r+1)-1))^r g^-1 a^(cr+1)` with r = (k-1)/2.
pub fn torus_group_presentation(k: i64, c: i64) -> Result<Presentation> {
    validate_kc(k, c)?;
    let r = (k - 1) / 2;
    let up = c * r + 1;
    let down = -c * (r + 1) - 1;
    let mut word = FreeWord::empty();
    for _ in 0..r {
        word.push_run(GEN_G, -1);
        word.push_run(GEN_A, up);
        word.push_run(GEN_G, -1);
        word.push_run(GEN_A, down);
    }
    word.push_run(GEN_G, -1);
    word.push_run(GEN_A, up);
    Ok(Presentation::new(
        Basis::new(vec!["a".into(), "g".into()]),
        vec![word],
    ))
}

pub const GEN_A: usize = 0;
pub const GEN_G: usize = 1;

fn validate_kc(k: i64, c: i64) -> Result<()> {
    if k <= 1 || k % 2 == 0 {
        return Err(Error::domain(format!("requires odd k > 1, got k = {k}")));
    }
    if c <= 0 {
        return Err(Error::domain(format!("requires c > 0, got c = {c}")));
    }
    Ok(())
}

/// The cyclic-presentation word for the n-fold branched cover of the
/// (k, ck+2) torus knot, subscripts reduced mod n.
pub fn cyclic_word(k: i64, c: i64, n: usize) -> Result<FreeWord> {
    validate_kc(k, c)?;
    if n == 0 {
        return Err(Error::domain("requires n >= 1".to_string()));
    }
    let h = c * k + 2;
    let nn = n as i64;
    let idx = |v: i64| -> usize { v.rem_euclid(nn) as usize };
    let mut w = FreeWord::empty();
    for i in 0..=(k - 3) / 2 {
        for j in 0..=c * (k - 1) / 2 {
            w.push_run(idx(1 - i * h + j * k), 1);
        }
        for l in 0..=c * (k + 1) / 2 {
            w.push_run(idx(c * k * (k - 1) / 2 - i * h - l * k), -1);
        }
    }
    for m in 0..=c * (k - 1) / 2 {
        w.push_run(idx(1 - (k - 1) * h / 2 + m * k), 1);
    }
    Ok(w)
}

/// Wraps [`cyclic_word`] with its shift-orbit relators.
pub fn cyclic_presentation(k: i64, c: i64, n: usize) -> Result<CyclicPresentation> {
    CyclicPresentation::new(n, cyclic_word(k, c, n)?)
}

/// An element of the integer group ring of a free group.
pub type GroupRingElement = Vec<(BigInt, FreeWord)>;

fn add_ring_term(acc: &mut BTreeMap<FreeWord, BigInt>, coeff: BigInt, word: FreeWord) {
    use std::collections::btree_map::Entry;
    match acc.entry(word) {
        Entry::Vacant(slot) => {
            if !coeff.is_zero() {
                slot.insert(coeff);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// The free derivative with respect to generator `g`, satisfying
/// `d(uv) = du + u dv`, `dg/dg = 1` and `dg^-1/dg = -g^-1`.
pub fn fox_derivative(w: &FreeWord, g: usize) -> GroupRingElement {
    let mut acc: BTreeMap<FreeWord, BigInt> = BTreeMap::new();
    let mut prefix = FreeWord::empty();
    for &(h, e) in w.runs() {
        if h == g {
            if e > 0 {
                // d(g^e) = 1 + g + ... + g^(e-1)
                for i in 0..e {
                    let word = prefix.concat(&FreeWord::from_runs([(g, i)]));
                    add_ring_term(&mut acc, BigInt::one(), word);
                }
            } else {
                // d(g^e) = -(g^-1 + ... + g^e)
                for i in 1..=-e {
                    let word = prefix.concat(&FreeWord::from_runs([(g, -i)]));
                    add_ring_term(&mut acc, -BigInt::one(), word);
                }
            }
        }
        prefix = prefix.concat(&FreeWord::from_runs([(h, e)]));
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (c, w))
        .collect()
}

/// Abelianizes a group-ring element through generator weights, yielding a
/// Laurent polynomial in t.
pub fn abelianize(elem: &GroupRingElement, weights: &[i64]) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (coeff, word) in elem {
        let exp: i64 = word.runs().iter().map(|&(g, e)| e * weights[g]).sum();
        p.add_term(exp, coeff.clone());
    }
    p
}

/// The Alexander polynomial of a two-generator one-relator knot group
/// presentation whose abelianization sends the generators to `t^w1` and
/// `t^w2`: the abelianized derivative of the relator by the first
/// generator, multiplied by `(t - 1)/(t^w2 - 1)`, normalized to lowest
/// degree zero with positive top coefficient. The degenerate one-generator
/// presentation with no relators gives 1.
pub fn alexander_poly(p: &Presentation, weights: (i64, i64)) -> Result<LaurentPolynomial> {
    if p.generators().len() == 1 && p.relators().is_empty() {
        return Ok(LaurentPolynomial::one());
    }
    if p.generators().len() != 2 || p.relators().len() != 1 {
        return Err(Error::domain(
            "Alexander computation needs 2 generators and 1 relator".to_string(),
        ));
    }
    let (w1, w2) = weights;
    if w2 == 0 {
        return Err(Error::domain("weights inconsistent: second weight is zero".to_string()));
    }
    let relator = &p.relators()[0];
    let weighted_sum: i64 = relator
        .runs()
        .iter()
        .map(|&(g, e)| e * if g == 0 { w1 } else { w2 })
        .sum();
    if weighted_sum != 0 {
        return Err(Error::domain(format!(
            "weights inconsistent: relator abelianizes to t^{weighted_sum}"
        )));
    }
    let derivative = fox_derivative(relator, 0);
    let image = abelianize(&derivative, &[w1, w2]);
    let numerator = image.mul(&LaurentPolynomial::power_minus_one(1));
    let delta = numerator.div_exact(&LaurentPolynomial::power_minus_one(w2))?;
    Ok(delta.normalized_unit())
}

/// First homology of the n-fold cyclic branched cover presented by
/// `G_n(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// Number of infinite cyclic summands.
    pub free_rank: usize,
}

impl HomologyResult {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Group order; `None` means infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }
}

/// Abelianizes the cyclic presentation of the n-fold branched cover and
/// reads off the invariant factors of its circulant relation matrix.
pub fn branched_cover_homology(k: i64, c: i64, n: usize) -> Result<HomologyResult> {
    if n < 2 {
        return Err(Error::domain("requires n >= 2".to_string()));
    }
    let pres = cyclic_presentation(k, c, n)?;
    let snf = smith_normal_form(&pres.relation_matrix());
    Ok(HomologyResult {
        torsion: snf.factors.into_iter().filter(|f| !f.is_one()).collect(),
        free_rank: snf.rank_deficiency,
    })
}

/// Order of the first homology of the n-fold branched cover from the knot
/// polynomial: the absolute resultant of the polynomial with
/// `1 + t + ... + t^(n-1)`; zero means infinite homology (`None`).
pub fn fox_formula_order(delta: &LaurentPolynomial, n: usize) -> Result<Option<BigInt>> {
    let at_one = delta.eval_at_one();
    if !at_one.abs().is_one() {
        return Err(Error::domain(format!(
            "polynomial must evaluate to +-1 at t = 1, got {at_one}"
        )));
    }
    if n <= 1 {
        return Ok(Some(BigInt::one()));
    }
    let g = LaurentPolynomial::cyclotomic_quotient(n as i64);
    let r = resultant(delta, &g).abs();
    if r.is_zero() {
        Ok(None)
    } else {
        Ok(Some(r))
    }
}
