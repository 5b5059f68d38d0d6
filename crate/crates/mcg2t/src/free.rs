//! Reduced words in a finitely generated free group.
//!
//! Generators are addressed by index; a [`Basis`] attaches token names for
//! parsing and printing. Words are kept freely reduced in run-length form.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A freely reduced word, stored as (generator index, exponent) runs with
/// nonzero exponents and no adjacent runs on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    runs: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn empty() -> FreeWord {
        FreeWord { runs: Vec::new() }
    }

    pub fn generator(g: usize) -> FreeWord {
        FreeWord { runs: vec![(g, 1)] }
    }

    pub fn from_runs(runs: impl IntoIterator<Item = (usize, i64)>) -> FreeWord {
        let mut w = FreeWord::empty();
        for (g, e) in runs {
            w.push_run(g, e);
        }
        w
    }

    /// Appends a run, cancelling against the tail.
    pub fn push_run(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((g, e)),
        }
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Letter count with multiplicity.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &(g, e) in &other.runs {
            w.push_run(g, e);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        c.concat(self).concat(&c.inverse())
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.runs.iter().filter(|&&(h, _)| h == g).map(|&(_, e)| e).sum()
    }

    /// Rewrites the word through generator images: generator `g` is replaced
    /// by `images[g]`, with inverses for negative exponents.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::empty();
        for &(g, e) in &self.runs {
            let img = &images[g];
            if e >= 0 {
                for _ in 0..e {
                    out = out.concat(img);
                }
            } else {
                let inv = img.inverse();
                for _ in 0..-e {
                    out = out.concat(&inv);
                }
            }
        }
        out
    }

    /// Renames generators through `map` (a bijection on indices); adjacency
    /// is preserved, so the result is still reduced.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> FreeWord {
        FreeWord {
            runs: self.runs.iter().map(|&(g, e)| (map(g), e)).collect(),
        }
    }

    /// Deletes every run on generator `g` and re-reduces.
    pub fn delete_generator(&self, g: usize) -> FreeWord {
        FreeWord::from_runs(self.runs.iter().copied().filter(|&(h, _)| h != g))
    }

    /// Splits `w = c * core * c^-1` with `core` cyclically reduced.
    pub fn cyclic_split(&self) -> (FreeWord, FreeWord) {
        let mut conj = FreeWord::empty();
        let mut core = self.clone();
        loop {
            if core.runs.len() < 2 {
                break;
            }
            let (fg, fe) = core.runs[0];
            let (lg, le) = *core.runs.last().expect("len >= 2");
            if fg != lg || fe.signum() == le.signum() {
                break;
            }
            let take = fe.abs().min(le.abs()) * fe.signum();
            conj.push_run(fg, take);
            core.runs[0].1 -= take;
            if core.runs[0].1 == 0 {
                core.runs.remove(0);
            }
            let last = core.runs.len() - 1;
            core.runs[last].1 += take;
            if core.runs[last].1 == 0 {
                core.runs.pop();
            }
            // removing whole runs may expose a new cancelling pair, which the
            // loop handles; partial removal leaves same-sign ends and stops
        }
        (conj, core)
    }

    /// True iff the word is `g` or `g^-1` for some generator.
    pub fn as_single_letter(&self) -> Option<(usize, i64)> {
        match self.runs.as_slice() {
            [(g, e)] if e.abs() == 1 => Some((*g, *e)),
            _ => None,
        }
    }
}

/// Token names for a generator family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    names: Vec<String>,
}

impl Basis {
    pub fn new(names: Vec<String>) -> Basis {
        Basis { names }
    }

    /// The rank-3 fundamental-group basis: x (longitude), y (meridian),
    /// z (loop about the second puncture).
    pub fn xyz() -> Basis {
        Basis::new(vec!["x".into(), "y".into(), "z".into()])
    }

    /// The rank-2 kernel basis: m (meridian slide), l (longitude slide).
    pub fn ml() -> Basis {
        Basis::new(vec!["m".into(), "l".into()])
    }

    /// Indexed generators `x0 .. x{n-1}`.
    pub fn indexed(n: usize) -> Basis {
        Basis::new((0..n).map(|i| format!("x{i}")).collect())
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses the same token grammar as mapping-class words: whitespace
    /// separated `name` or `name^exp` with nonzero exponents.
    pub fn parse(&self, text: &str) -> Result<FreeWord> {
        let mut w = FreeWord::empty();
        for (i, tok) in text.split_whitespace().enumerate() {
            let position = i + 1;
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((name, exp_str)) => {
                    let e: i64 = exp_str.parse().map_err(|_| Error::Syntax {
                        position,
                        message: format!("malformed exponent `{exp_str}`"),
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
            let g = self.index_of(name).ok_or_else(|| Error::Syntax {
                position,
                message: format!("unknown generator `{name}`"),
            })?;
            w.push_run(g, exp);
        }
        Ok(w)
    }

    pub fn format(&self, w: &FreeWord) -> String {
        let mut out = String::new();
        for (i, &(g, e)) in w.runs().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&self.names[g]);
            if e != 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(runs: &[(usize, i64)]) -> FreeWord {
        FreeWord::from_runs(runs.iter().copied())
    }

    #[test]
    fn reduction_and_inverse() {
        let w = fw(&[(0, 2), (1, 1), (1, -1), (0, -2), (2, 1)]);
        assert_eq!(w, fw(&[(2, 1)]));
        let u = fw(&[(0, 1), (1, 2)]);
        assert!(u.concat(&u.inverse()).is_empty());
        assert_eq!(u.pow(-2), u.inverse().concat(&u.inverse()));
    }

    #[test]
    fn cyclic_split_strips_conjugation() {
        // x^3 y x^-1 = x * (x^2 y) * x^-1
        let w = fw(&[(0, 3), (1, 1), (0, -1)]);
        let (c, core) = w.cyclic_split();
        assert_eq!(c, fw(&[(0, 1)]));
        assert_eq!(core, fw(&[(0, 2), (1, 1)]));
        assert_eq!(core.conjugate_by(&c), w);

        // fully conjugated single letter
        let v = fw(&[(0, 1), (1, -1), (2, 1), (1, 1), (0, -1)]);
        let (c, core) = v.cyclic_split();
        assert_eq!(core, fw(&[(2, 1)]));
        assert_eq!(core.conjugate_by(&c), v);
        assert_eq!(core.as_single_letter(), Some((2, 1)));
    }

    #[test]
    fn substitute_homomorphism() {
        // x -> xy, y -> y under w = x y^-1
        let images = vec![fw(&[(0, 1), (1, 1)]), fw(&[(1, 1)])];
        let w = fw(&[(0, 1), (1, -1)]);
        assert_eq!(w.substitute(&images), fw(&[(0, 1)]));
    }

    #[test]
    fn basis_round_trip() {
        let b = Basis::xyz();
        let w = b.parse("x y^-2 z x^3").unwrap();
        assert_eq!(b.format(&w), "x y^-2 z x^3");
        assert!(b.parse("w").is_err());
        let ml = Basis::ml();
        assert_eq!(ml.format(&FreeWord::generator(0)), "m");
    }
}
