//! Action of pure mapping classes on the rank-3 free fundamental group of
//! the twice punctured torus.
//!
//! The basis is x (longitude), y (meridian) and z (a loop about the second
//! puncture); the loop about the first puncture is then `z^-1 x y x^-1 y^-1`.
//! The three twist generators act by the automorphisms tabulated in
//! [`gen_auto`], read off a square model of the surface with the basepoint
//! at the corner. The table is pinned down by the relation suite: braid and
//! commutation relations hold, the abelianized action reproduces the matrix
//! homomorphism, peripheral loops stay peripheral, and the kernel
//! coordinates of the puncture slides come out as the free generators m, l.
//!
//! Words act so that abelianization matrices multiply left to right, i.e.
//! the automorphism of `u v` is `auto(u) o auto(v)` with the right factor
//! applied first.

use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::omega::{is_kernel, SL2Matrix};
use crate::word::{expand, Gen, Word};

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;

/// Kernel-coordinate generator indices (basis `ml`).
pub const M: usize = 0;
pub const L: usize = 1;

/// An automorphism of the free group on x, y, z, stored together with its
/// inverse so that composition never has to solve for inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    img: [FreeWord; 3],
    inv: [FreeWord; 3],
}

impl FreeAutomorphism {
    pub fn identity() -> FreeAutomorphism {
        FreeAutomorphism {
            img: [
                FreeWord::generator(X),
                FreeWord::generator(Y),
                FreeWord::generator(Z),
            ],
            inv: [
                FreeWord::generator(X),
                FreeWord::generator(Y),
                FreeWord::generator(Z),
            ],
        }
    }

    pub fn new(img: [FreeWord; 3], inv: [FreeWord; 3]) -> FreeAutomorphism {
        FreeAutomorphism { img, inv }
    }

    pub fn image(&self, g: usize) -> &FreeWord {
        &self.img[g]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.img)
    }

    pub fn apply_inverse(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.inv)
    }

    /// Functional composition: `(self o other)(w) = self(other(w))`.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            img: [
                self.apply(&other.img[X]),
                self.apply(&other.img[Y]),
                self.apply(&other.img[Z]),
            ],
            inv: [
                other.apply_inverse(&self.inv[X]),
                other.apply_inverse(&self.inv[Y]),
                other.apply_inverse(&self.inv[Z]),
            ],
        }
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            img: self.inv.clone(),
            inv: self.img.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.img[X] == FreeWord::generator(X)
            && self.img[Y] == FreeWord::generator(Y)
            && self.img[Z] == FreeWord::generator(Z)
    }

    /// The induced matrix on the abelianization after killing z, in the
    /// (meridian, longitude) basis used by the matrix homomorphism: columns
    /// are the images of y and x.
    pub fn abelianization(&self) -> Result<SL2Matrix> {
        SL2Matrix::new(
            self.img[Y].exponent_sum(Y).into(),
            self.img[X].exponent_sum(Y).into(),
            self.img[Y].exponent_sum(X).into(),
            self.img[X].exponent_sum(X).into(),
        )
    }

    /// Checks that the stored inverse really inverts and that both
    /// peripheral loops stay peripheral (z up to conjugacy, and the loop
    /// about the first puncture up to conjugacy and orientation).
    pub fn validate(&self) -> Result<()> {
        for g in [X, Y, Z] {
            if self.apply(&self.inv[g]) != FreeWord::generator(g)
                || self.apply_inverse(&self.img[g]) != FreeWord::generator(g)
            {
                return Err(Error::internal("stored inverse does not invert"));
            }
        }
        let (_, core) = self.img[Z].cyclic_split();
        match core.as_single_letter() {
            Some((Z, _)) => {}
            _ => return Err(Error::internal("image of z is not peripheral")),
        }
        let d = boundary_word();
        let (_, dcore) = self.apply(&d).cyclic_split();
        if !cyclically_equal(&dcore, &d) && !cyclically_equal(&dcore, &d.inverse()) {
            return Err(Error::internal("image of the first puncture loop is not peripheral"));
        }
        Ok(())
    }
}

/// The loop about the first puncture: `z^-1 x y x^-1 y^-1` (already
/// cyclically reduced).
pub fn boundary_word() -> FreeWord {
    FreeWord::from_runs([(Z, -1), (X, 1), (Y, 1), (X, -1), (Y, -1)])
}

/// Equality of cyclically reduced words as cyclic words.
fn cyclically_equal(a: &FreeWord, b: &FreeWord) -> bool {
    let flat = |w: &FreeWord| -> Vec<(usize, i64)> {
        let mut v = Vec::with_capacity(w.len());
        for &(g, e) in w.runs() {
            for _ in 0..e.unsigned_abs() {
                v.push((g, e.signum()));
            }
        }
        v
    };
    let fa = flat(a);
    let fb = flat(b);
    if fa.len() != fb.len() {
        return false;
    }
    if fa.is_empty() {
        return true;
    }
    (0..fa.len()).any(|r| (0..fa.len()).all(|i| fa[(i + r) % fa.len()] == fb[i]))
}

fn words(runs: &[(usize, i64)]) -> FreeWord {
    FreeWord::from_runs(runs.iter().copied())
}

/// The fixed automorphism of a basic twist generator.
pub fn gen_auto(g: Gen) -> Result<FreeAutomorphism> {
    match g {
        Gen::Ta => Ok(FreeAutomorphism::new(
            [
                words(&[(X, 1)]),
                words(&[(X, 1), (Y, 1)]),
                words(&[(X, 1), (Z, 1), (X, -1)]),
            ],
            [
                words(&[(X, 1)]),
                words(&[(X, -1), (Y, 1)]),
                words(&[(X, -1), (Z, 1), (X, 1)]),
            ],
        )),
        Gen::Tb => Ok(FreeAutomorphism::new(
            [
                words(&[(X, 1), (Y, -1), (X, -1), (Z, 1), (X, 1)]),
                words(&[(Y, 1)]),
                words(&[(X, 1), (Y, -1), (X, -1), (Z, 1), (X, 1), (Y, 1), (X, -1)]),
            ],
            [
                words(&[(Z, -1), (X, 1), (Y, 1)]),
                words(&[(Y, 1)]),
                words(&[
                    (Z, -1),
                    (X, 1),
                    (Y, 1),
                    (X, -1),
                    (Z, 1),
                    (X, 1),
                    (Y, -1),
                    (X, -1),
                    (Z, 1),
                ]),
            ],
        )),
        Gen::Tc => Ok(FreeAutomorphism::new(
            [
                words(&[(X, 1), (Y, -1)]),
                words(&[(Y, 1)]),
                words(&[(Z, 1)]),
            ],
            [
                words(&[(X, 1), (Y, 1)]),
                words(&[(Y, 1)]),
                words(&[(Z, 1)]),
            ],
        )),
        Gen::Rho => Err(Error::NotPure),
        _ => Err(Error::internal("derived letters must be expanded first")),
    }
}

/// The automorphism of a pure word: derived letters are expanded and the
/// letter automorphisms composed in word order (rightmost applied first).
pub fn auto_of(w: &Word) -> Result<FreeAutomorphism> {
    let letters = expand(w).pure_letters()?;
    let mut auto = FreeAutomorphism::identity();
    for (g, e) in letters {
        let base = gen_auto(g)?;
        let step = if e < 0 { base.inverse() } else { base };
        for _ in 0..e.unsigned_abs() {
            auto = auto.compose(&step);
        }
    }
    Ok(auto)
}

/// If the automorphism is conjugation by some word w (so that every
/// generator g maps to `w g w^-1`), returns w; the conjugator is unique
/// because the free group has trivial center.
pub fn is_inner(auto: &FreeAutomorphism) -> Option<FreeWord> {
    // candidate from the image of x: it must be c x c^-1, leaving the
    // ambiguity w = c x^k
    let (c, core) = auto.image(X).cyclic_split();
    if core.as_single_letter() != Some((X, 1)) {
        return None;
    }
    // pin k with the image of y: c^-1 phi(y) c must be x^k y x^-k
    let y_stripped = c
        .inverse()
        .concat(auto.image(Y))
        .concat(&c);
    let k = match y_stripped.runs() {
        [(Y, 1)] => 0,
        [(X, k), (Y, 1), (X, nk)] if *nk == -k => *k,
        _ => return None,
    };
    let w = c.concat(&FreeWord::from_runs([(X, k)]));
    for g in [X, Y, Z] {
        if auto.image(g) != &FreeWord::generator(g).conjugate_by(&w) {
            return None;
        }
    }
    Some(w)
}

/// Equality in the mapping class group: rho exponents must agree mod 2 and
/// the pure parts must differ by an inner automorphism.
pub fn mcg_equal(u: &Word, v: &Word) -> bool {
    if u.rho_parity() != v.rho_parity() {
        return false;
    }
    let strip = |w: &Word| {
        Word::from_letters(
            w.normalized()
                .letters()
                .iter()
                .copied()
                .filter(|&(g, _)| g != Gen::Rho),
        )
    };
    let a = auto_of(&strip(u)).expect("rho stripped");
    let b = auto_of(&strip(v)).expect("rho stripped");
    is_inner(&a.compose(&b.inverse())).is_some()
}

/// Free coordinates of a kernel word: the conjugator of the peripheral
/// loop z, with z killed, rewritten in the rank-2 kernel basis m, l. This
/// is a homomorphism from kernel words to the free group on m, l sending
/// the meridian slide to m and the longitude slide to l.
pub fn pushed_loop(w: &Word) -> Result<FreeWord> {
    if !is_kernel(w)? {
        return Err(Error::NotInKernel);
    }
    let auto = auto_of(w)?;
    pushed_loop_of_auto(&auto)
}

pub(crate) fn pushed_loop_of_auto(auto: &FreeAutomorphism) -> Result<FreeWord> {
    let (c, core) = auto.image(Z).cyclic_split();
    if core.as_single_letter() != Some((Z, 1)) {
        return Err(Error::ExtractionFailed);
    }
    // phi(z) = c z c^-1 = u^-1 z u with u = c^-1
    let u = c.inverse().delete_generator(Z);
    // rewrite x -> l, y -> l^-1 m l
    let images = vec![
        FreeWord::generator(L),
        FreeWord::from_runs([(L, -1), (M, 1), (L, 1)]),
    ];
    Ok(u.substitute(&images))
}
