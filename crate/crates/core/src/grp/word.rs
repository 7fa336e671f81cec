use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A generator raised to a nonzero power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: impl Into<String>, exp: i64) -> Self {
        Letter {
            gen: gen.into(),
            exp,
        }
    }
}

/// A freely reduced word, stored run-length.
///
/// Adjacent letters always carry distinct generators and no exponent is zero;
/// every constructor goes through [`Word::reduce`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn gen(name: &str) -> Self {
        Word::power(name, 1)
    }

    pub fn power(name: &str, exp: i64) -> Self {
        Word::reduce([Letter::new(name, exp)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l.exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.gen == l.gen => {
                    top.exp += l.exp;
                    if top.exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    /// Word from `(name, exponent)` pairs.
    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, i64)>>(pairs: I) -> Self {
        Word::reduce(pairs.into_iter().map(|(g, e)| Letter::new(g, e)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length counted letter by letter, i.e. the sum of absolute exponents.
    pub fn len(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.gen.clone(), -l.exp))
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::new();
        for _ in 0..n.unsigned_abs() {
            out.extend(base.letters.iter().cloned());
        }
        Word::reduce(out)
    }

    /// `[u, v] = u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        Word::reduce(
            u.letters
                .iter()
                .chain(v.letters.iter())
                .cloned()
                .chain(u.inverse().letters)
                .chain(v.inverse().letters),
        )
    }

    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exp)
            .sum()
    }

    pub fn contains(&self, gen: &str) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Number of unit occurrences of `gen`.
    pub fn occurrences(&self, gen: &str) -> u64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exp.unsigned_abs())
            .sum()
    }

    pub fn generators(&self) -> impl Iterator<Item = &str> {
        self.letters.iter().map(|l| l.gen.as_str())
    }

    /// Replace every occurrence of `gen` by `image`.
    pub fn substitute(&self, gen: &str, image: &Word) -> Word {
        let mut out = Vec::new();
        for l in &self.letters {
            if l.gen == gen {
                out.extend(image.pow(l.exp).letters);
            } else {
                out.push(l.clone());
            }
        }
        Word::reduce(out)
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Word {
        Word::reduce(self.letters.iter().map(|l| Letter::new(f(&l.gen), l.exp)))
    }

    /// Cyclic reduction: conjugate away matching first and last letters.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 {
            let last = letters.len() - 1;
            if letters[0].gen != letters[last].gen {
                break;
            }
            let merged = letters[0].exp + letters[last].exp;
            letters.pop();
            if merged == 0 {
                letters.remove(0);
            } else {
                letters[0].exp = merged;
                break;
            }
        }
        Word { letters }
    }

    fn unit_letters(&self) -> Vec<(&str, i8)> {
        let mut out = Vec::new();
        for l in &self.letters {
            let s = if l.exp > 0 { 1 } else { -1 };
            for _ in 0..l.exp.unsigned_abs() {
                out.push((l.gen.as_str(), s));
            }
        }
        out
    }

    /// True when the two words generate the same normal closure because one
    /// is a cyclic permutation of the other or of its inverse.
    pub fn cyclically_equivalent(&self, other: &Word) -> bool {
        let a = self.cyclically_reduced();
        let b = other.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        let ua = a.unit_letters();
        let rotations_match = |ub: &[(&str, i8)]| {
            let n = ua.len();
            n == 0 || (0..n).any(|r| (0..n).all(|i| ua[(i + r) % n] == ub[i]))
        };
        rotations_match(&b.unit_letters()) || rotations_match(&b.inverse().unit_letters())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn cancellation() {
        assert!(Word::from_pairs([("a", 1), ("a", -1)]).is_empty());
        assert_eq!(
            Word::from_pairs([("a", 2), ("a", -1), ("b", 1)]),
            Word::from_pairs([("a", 1), ("b", 1)])
        );
    }

    #[test]
    fn commutator_shape() {
        let w = Word::from_pairs([("b", -1), ("y", -1), ("b", 1), ("y", 1)]);
        assert_eq!(w.len(), 4);
        assert_eq!(
            w,
            Word::commutator(&Word::power("b", -1), &Word::power("y", -1))
        );
    }

    #[test]
    fn nested_cancellation_cascades() {
        let w = Word::from_pairs([
            ("a", 1),
            ("b", 1),
            ("c", 2),
            ("c", -2),
            ("b", -1),
            ("a", -1),
        ]);
        assert!(w.is_empty());
    }

    #[test]
    fn substitution_and_inverse() {
        let w = Word::from_pairs([("x", 2), ("y", 1)]);
        let img = Word::from_pairs([("a", 1), ("b", 1)]);
        assert_eq!(w.substitute("x", &img).to_string(), "a b a b y");
        assert!(w.mul(&w.inverse()).is_empty());
        assert_eq!(w.pow(-1), w.inverse());
    }

    #[test]
    fn cyclic_equivalence() {
        let yb = Word::commutator(&Word::gen("y"), &Word::gen("b"));
        let by = Word::commutator(&Word::power("b", -1), &Word::power("y", -1));
        assert!(yb.cyclically_equivalent(&by));
        let other = Word::commutator(&Word::gen("y"), &Word::gen("a"));
        assert!(!yb.cyclically_equivalent(&other));
        assert_eq!(
            Word::from_pairs([("a", 1), ("b", 3), ("a", -1)]).cyclically_reduced(),
            Word::power("b", 3)
        );
        assert_eq!(
            Word::from_pairs([("a", 2), ("b", 1), ("a", 1)]).cyclically_reduced(),
            Word::from_pairs([("a", 3), ("b", 1)])
        );
    }
}
