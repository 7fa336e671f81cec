use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::abelian::AbelianType;
use super::snf::{smith_normal_form, IntMatrix};
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// A finite presentation: ordered generators and freely reduced relators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(generators: &[S]) -> Result<Self> {
        let mut p = Presentation::default();
        for g in generators {
            p.add_generator(g.as_ref())?;
        }
        Ok(p)
    }

    /// The trivial group with no generators.
    pub fn trivial() -> Self {
        Presentation::default()
    }

    pub fn with_relators<S: AsRef<str>>(generators: &[S], relators: Vec<Word>) -> Result<Self> {
        let mut p = Presentation::new(generators)?;
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    pub fn add_generator(&mut self, name: &str) -> Result<()> {
        if self.has_generator(name) {
            return Err(Error::DuplicateGenerator(name.to_string()));
        }
        self.generators.push(name.to_string());
        Ok(())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.generators.iter().any(|g| g == name)
    }

    /// Free reduction of `letters`, rejecting undeclared generators.
    pub fn word<I: IntoIterator<Item = Letter>>(&self, letters: I) -> Result<Word> {
        let letters: Vec<Letter> = letters.into_iter().collect();
        if let Some(l) = letters.iter().find(|l| !self.has_generator(&l.gen)) {
            return Err(Error::UnknownGenerator(l.gen.clone()));
        }
        Ok(Word::reduce(letters))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.generators().find(|g| !self.has_generator(g)) {
            Some(g) => Err(Error::UnknownGenerator(g.to_string())),
            None => Ok(()),
        }
    }

    fn push_relator(&mut self, w: Word) -> Result<()> {
        self.check_word(&w)?;
        if !w.is_empty() {
            self.relators.push(w);
        }
        Ok(())
    }

    /// Quotient by the normal closure of `w`; the empty word changes nothing.
    pub fn add_relator(&self, w: &Word) -> Result<Presentation> {
        let mut p = self.clone();
        p.push_relator(w.clone())?;
        Ok(p)
    }

    pub fn add_relators<'a, I: IntoIterator<Item = &'a Word>>(
        &self,
        ws: I,
    ) -> Result<Presentation> {
        let mut p = self.clone();
        for w in ws {
            p.push_relator(w.clone())?;
        }
        Ok(p)
    }

    pub(crate) fn from_parts_unchecked(generators: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation {
            generators,
            relators,
        }
    }

    /// Renames generators; the map must be injective on this presentation.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Presentation {
        Presentation {
            generators: self.generators.iter().map(|g| f(g)).collect(),
            relators: self.relators.iter().map(|r| r.rename(&f)).collect(),
        }
    }

    /// Free product: disjoint union of generators and relators.
    pub fn free_product(&self, other: &Presentation) -> Result<Presentation> {
        let mut p = self.clone();
        for g in &other.generators {
            p.add_generator(g)?;
        }
        p.relators.extend(other.relators.iter().cloned());
        Ok(p)
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn abelianize_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = self
            .relators
            .iter()
            .map(|r| {
                self.generators
                    .iter()
                    .map(|g| BigInt::from(r.exponent_sum(g)))
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, self.generators.len());
        }
        IntMatrix::from_rows(&rows)
    }

    /// Invariant factors of the abelianization. This is `H_1`; it equals the
    /// fundamental group only when the caller already knows it is abelian.
    pub fn identify_abelian(&self) -> AbelianType {
        let m = self.abelianize_matrix();
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        AbelianType::from_diagonal(&diag, m.cols().saturating_sub(diag.len()))
    }

    /// First Betti number of the presented group.
    pub fn betti_one(&self) -> usize {
        self.identify_abelian().rank()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| format!("{r}")).collect();
        write!(f, "{} >", rels.join(", "))
    }
}
