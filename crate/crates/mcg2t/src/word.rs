//! Words in the mapping class group of the twice punctured torus.
//!
//! The alphabet has four basic letters: the right-handed Dehn twists `ta`,
//! `tb`, `tc` about the three standard curves and the puncture swap `rho`.
//! Four derived letters abbreviate useful compositions: the puncture slides
//! `tm` (meridian) and `tl` (longitude), and the twists `th` and `te` about
//! the slid copies of the first curve. Words are stored as run-length
//! sequences of (letter, exponent) pairs, reflecting the power-product form
//! they naturally arrive in.

use std::fmt;

use crate::error::{Error, Result};

/// A generator letter of the mapping class group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// Twist about the longitude-slope curve.
    Ta,
    /// Twist about the meridian-slope curve left of the second puncture.
    Tb,
    /// Twist about the meridian-slope curve right of the second puncture.
    Tc,
    /// Rotation by pi exchanging the punctures; central, of order two.
    Rho,
    /// Meridian slide of the second puncture, `tb tc^-1`.
    Tm,
    /// Longitude slide of the second puncture, `th ta^-1`.
    Tl,
    /// Twist about the meridian-slid copy of the first curve, `tm^-1 ta tm`.
    Th,
    /// Twist about the commutator curve, `tl^-1 tm tl tm^-1`.
    Te,
}

impl Gen {
    pub const ALL: [Gen; 8] = [
        Gen::Ta,
        Gen::Tb,
        Gen::Tc,
        Gen::Rho,
        Gen::Tm,
        Gen::Tl,
        Gen::Th,
        Gen::Te,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Gen::Ta => "ta",
            Gen::Tb => "tb",
            Gen::Tc => "tc",
            Gen::Rho => "rho",
            Gen::Tm => "tm",
            Gen::Tl => "tl",
            Gen::Th => "th",
            Gen::Te => "te",
        }
    }

    pub fn from_token(tok: &str) -> Option<Gen> {
        Gen::ALL.iter().copied().find(|g| g.token() == tok)
    }

    /// Basic letters generate the group; derived letters are abbreviations.
    pub fn is_basic(self) -> bool {
        matches!(self, Gen::Ta | Gen::Tb | Gen::Tc | Gen::Rho)
    }

    /// One-step expansion of a derived letter. `Th` and `Te` expand through
    /// other derived letters; [`expand`] recurses until only basic letters
    /// remain.
    pub fn expansion(self) -> Option<&'static [(Gen, i64)]> {
        match self {
            Gen::Tm => Some(&[(Gen::Tb, 1), (Gen::Tc, -1)]),
            Gen::Th => Some(&[(Gen::Tm, -1), (Gen::Ta, 1), (Gen::Tm, 1)]),
            Gen::Tl => Some(&[(Gen::Th, 1), (Gen::Ta, -1)]),
            Gen::Te => Some(&[(Gen::Tl, -1), (Gen::Tm, 1), (Gen::Tl, 1), (Gen::Tm, -1)]),
            _ => None,
        }
    }
}

/// A word over the generator alphabet, stored as (letter, exponent) runs
/// with nonzero exponents. Construction does not reduce; see [`Word::reduced`]
/// and [`Word::normalized`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    /// Builds a word from runs, dropping zero exponents.
    pub fn from_letters(letters: impl IntoIterator<Item = (Gen, i64)>) -> Word {
        Word {
            letters: letters.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn single(g: Gen, exp: i64) -> Word {
        Word::from_letters([(g, exp)])
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total letter count, with multiplicity.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Free reduction: merges adjacent runs of the same letter and deletes
    /// zero exponents. No relations are used.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<(Gen, i64)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { letters: out }
    }

    /// Sum of all rho exponents mod 2.
    pub fn rho_parity(&self) -> i64 {
        let s: i64 = self
            .letters
            .iter()
            .filter(|&&(g, _)| g == Gen::Rho)
            .map(|&(_, e)| e)
            .sum();
        s.rem_euclid(2)
    }

    /// Rho-normal form: rho is central of order two, so every word equals a
    /// rho-free word followed by at most one `rho`. The rho-free part is
    /// freely reduced.
    pub fn normalized(&self) -> Word {
        let parity = self.rho_parity();
        let mut w = Word {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|&(g, _)| g != Gen::Rho)
                .collect(),
        }
        .reduced();
        if parity != 0 {
            w.letters.push((Gen::Rho, 1));
        }
        w
    }

    /// The rho-free runs of the normal form, or an error if the normal form
    /// still contains rho.
    pub fn pure_letters(&self) -> Result<Vec<(Gen, i64)>> {
        if self.rho_parity() != 0 {
            return Err(Error::NotPure);
        }
        Ok(self.normalized().letters)
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { invert(self) } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out.letters.extend_from_slice(&base.letters);
        }
        out.normalized()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// Parses a whitespace-separated token string. Each token is a letter name
/// optionally followed by `^` and a nonzero signed decimal exponent. The
/// result is not reduced.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut letters = Vec::new();
    for (i, tok) in text.split_whitespace().enumerate() {
        let position = i + 1;
        let (name, exp) = match tok.split_once('^') {
            None => (tok, 1i64),
            Some((name, exp_str)) => {
                let valid = !exp_str.is_empty()
                    && exp_str
                        .strip_prefix('-')
                        .unwrap_or(exp_str)
                        .chars()
                        .all(|c| c.is_ascii_digit())
                    && !exp_str.strip_prefix('-').unwrap_or(exp_str).is_empty();
                if !valid {
                    return Err(Error::Syntax {
                        position,
                        message: format!("malformed exponent `{exp_str}`"),
                    });
                }
                let e: i64 = exp_str.parse().map_err(|_| Error::Syntax {
                    position,
                    message: format!("exponent `{exp_str}` out of range"),
                })?;
                if e == 0 {
                    return Err(Error::Syntax {
                        position,
                        message: "zero exponent".to_string(),
                    });
                }
                (name, e)
            }
        };
        let g = Gen::from_token(name).ok_or_else(|| Error::Syntax {
            position,
            message: format!("unknown letter `{name}`"),
        })?;
        letters.push((g, exp));
    }
    Ok(Word { letters })
}

/// Formats a word in the same grammar that [`parse_word`] accepts. The
/// round trip `parse_word(format_word(w)) == w` is exact.
pub fn format_word(w: &Word) -> String {
    let mut parts = Vec::with_capacity(w.letters.len());
    for &(g, e) in &w.letters {
        if e == 1 {
            parts.push(g.token().to_string());
        } else {
            parts.push(format!("{}^{}", g.token(), e));
        }
    }
    parts.join(" ")
}

/// Concatenation followed by free reduction and rho normalization.
pub fn compose(u: &Word, v: &Word) -> Word {
    let mut letters = Vec::with_capacity(u.letters.len() + v.letters.len());
    letters.extend_from_slice(&u.letters);
    letters.extend_from_slice(&v.letters);
    Word { letters }.normalized()
}

/// The group inverse: reversed runs with negated exponents.
pub fn invert(w: &Word) -> Word {
    Word {
        letters: w.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
    }
}

/// Recursively replaces every derived letter by its expansion in basic
/// letters, then normalizes. Matrix and fundamental-group images are
/// unchanged by expansion.
pub fn expand(w: &Word) -> Word {
    let mut letters = Vec::new();
    for &(g, e) in &w.letters {
        expand_letter(g, e, &mut letters);
    }
    Word { letters }.normalized()
}

fn expand_letter(g: Gen, e: i64, out: &mut Vec<(Gen, i64)>) {
    match g.expansion() {
        None => out.push((g, e)),
        Some(body) => {
            if e >= 0 {
                for _ in 0..e {
                    for &(h, f) in body {
                        expand_letter(h, f, out);
                    }
                }
            } else {
                for _ in 0..-e {
                    for &(h, f) in body.iter().rev() {
                        expand_letter(h, -f, out);
                    }
                }
            }
        }
    }
}
