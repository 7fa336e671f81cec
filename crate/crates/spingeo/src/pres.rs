//! Text form of group presentations.
//!
//! ```text
//! file      := bracketed | sections
//! bracketed := '<' gens '|' rels? '>'
//! sections  := 'generators:' gens NEWLINE 'relators:' rels
//! gens      := ident ((',' | ws) ident)*
//! rels      := relation ((',' | NEWLINE) relation)*
//! relation  := word ('=' word)?
//! word      := '1' | factor+
//! factor    := atom ('^' int)?
//! atom      := ident | '(' word ')' | '[' word ',' word ']'
//! ident     := letter (letter | digit | '_' | '\'')*
//! ```
//!
//! `#` starts a comment running to the end of the line. `[u,v]` is
//! `u v u^-1 v^-1` and `u = v` becomes the relator `u v^-1`.

use std::fmt;

use spingeo_core::grp::{Letter, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// Skips blanks and comments; newlines too when `newlines` is set.
    fn skip(&mut self, newlines: bool) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.bump();
                }
            } else if c.is_whitespace() && (newlines || c != '\n') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char, newlines: bool) -> bool {
        self.skip(newlines);
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, newlines: bool) -> Result<(), ParseError> {
        if self.eat(c, newlines) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_alphabetic() => {
                self.bump();
            }
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '\'') {
            self.bump();
        }
        Some(&self.src[start..self.pos])
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip(false);
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.bump();
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }

    fn word(&mut self, nested: bool) -> Result<Word, ParseError> {
        self.skip(nested);
        if self.peek() == Some('1') {
            self.bump();
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        let mut any = false;
        loop {
            self.skip(nested);
            let atom = match self.peek() {
                Some('(') => {
                    self.bump();
                    let inner = self.word(true)?;
                    self.expect(')', true)?;
                    inner
                }
                Some('[') => {
                    self.bump();
                    let u = self.word(true)?;
                    self.expect(',', true)?;
                    let v = self.word(true)?;
                    self.expect(']', true)?;
                    Word::commutator(&u, &v)
                }
                Some(c) if c.is_alphabetic() => {
                    Word::reduce([Letter::new(self.ident().unwrap(), 1)])
                }
                _ => break,
            };
            let atom = if self.eat('^', nested) {
                atom.pow(self.int()?)
            } else {
                atom
            };
            w = w.mul(&atom);
            any = true;
        }
        if any {
            Ok(w)
        } else {
            Err(self.error("expected a word"))
        }
    }

    fn relation(&mut self, nested: bool) -> Result<Word, ParseError> {
        let lhs = self.word(nested)?;
        if self.eat('=', nested) {
            let rhs = self.word(nested)?;
            Ok(lhs.mul(&rhs.inverse()))
        } else {
            Ok(lhs)
        }
    }

    fn gens(&mut self, stop: impl Fn(Option<char>) -> bool) -> Result<Vec<String>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip(false);
            self.eat(',', false);
            self.skip(false);
            if stop(self.peek()) {
                return Ok(out);
            }
            match self.ident() {
                Some(g) => out.push(g.to_string()),
                None => return Err(self.error("expected a generator name")),
            }
        }
    }
}

pub fn parse_word(src: &str) -> Result<Word, ParseError> {
    let mut c = Cursor::new(src);
    let w = c.relation(true)?;
    c.skip(true);
    if c.peek().is_some() {
        return Err(c.error("trailing input"));
    }
    Ok(w)
}

pub fn parse_presentation(src: &str) -> Result<Presentation, ParseError> {
    let mut c = Cursor::new(src);
    c.skip(true);
    let (gens, rels) = if c.eat('<', true) {
        let gens = c.gens(|ch| matches!(ch, Some('|' | '\n') | None))?;
        c.expect('|', true)?;
        let mut rels = Vec::new();
        c.skip(true);
        if c.peek() != Some('>') {
            loop {
                c.skip(true);
                rels.push((c.pos, c.relation(true)?));
                if !c.eat(',', true) {
                    break;
                }
            }
        }
        c.expect('>', true)?;
        (gens, rels)
    } else {
        section(&mut c, "generators")?;
        let gens = c.gens(|ch| matches!(ch, Some('\n') | None))?;
        c.skip(true);
        section(&mut c, "relators")?;
        let mut rels = Vec::new();
        loop {
            c.skip(true);
            if c.peek().is_none() {
                break;
            }
            rels.push((c.pos, c.relation(false)?));
            c.skip(false);
            match c.peek() {
                Some(',' | '\n') => {
                    c.bump();
                }
                None => break,
                Some(_) => return Err(c.error("expected `,` or end of line")),
            }
        }
        (gens, rels)
    };
    c.skip(true);
    if c.peek().is_some() {
        return Err(c.error("trailing input"));
    }
    let p = Presentation::new(&gens).map_err(|e| Cursor { src, pos: 0 }.error(e.to_string()))?;
    for (pos, r) in &rels {
        if let Err(e) = p.check_word(r) {
            return Err(Cursor { src, pos: *pos }.error(e.to_string()));
        }
    }
    Presentation::with_relators(&gens, rels.into_iter().map(|(_, r)| r).collect())
        .map_err(|e| Cursor { src, pos: 0 }.error(e.to_string()))
}

fn section(c: &mut Cursor<'_>, name: &str) -> Result<(), ParseError> {
    c.skip(true);
    let start = c.pos;
    match c.ident() {
        Some(id) if id == name => c.expect(':', false),
        _ => {
            c.pos = start;
            Err(c.error(format!("expected `<` or `{name}:`")))
        }
    }
}

/// Writes `p` in the sections form, one relator per line.
pub struct Sections<'a>(pub &'a Presentation);

impl fmt::Display for Sections<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.0.generators().join(", "))?;
        writeln!(f, "relators:")?;
        for r in self.0.relators() {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spingeo_core::grp::AbelianType;

    #[test]
    fn bracketed_form() {
        let p = parse_presentation("< a | a^6 >").unwrap();
        assert_eq!(p.identify_abelian(), AbelianType::cyclic(6));
        let p = parse_presentation("<a, b | >").unwrap();
        assert_eq!(p.identify_abelian(), AbelianType::zz());
    }

    #[test]
    fn sections_form() {
        let src = "# torus knot\ngenerators: x, y\nrelators:\n  x^2 = y^3   # one relation\n";
        let p = parse_presentation(src).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.identify_abelian(), AbelianType::z());
    }

    #[test]
    fn commutators_and_groups() {
        let w = parse_word("[a^-1, b] (a b)^2").unwrap();
        let expect = Word::commutator(&Word::power("a", -1), &Word::gen("b"))
            .mul(&Word::gen("a").mul(&Word::gen("b")).pow(2));
        assert_eq!(w, expect);
        assert_eq!(parse_word("a = a").unwrap(), Word::empty());
        assert_eq!(parse_word("1").unwrap(), Word::empty());
    }

    #[test]
    fn errors_carry_location() {
        let e = parse_presentation("generators: a\nrelators:\n  a^x\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 5));
        let e = parse_presentation("< a | b >").unwrap_err();
        assert_eq!((e.line, e.col), (1, 7));
        assert!(e.msg.contains('b'));
        assert!(parse_presentation("gens: a").is_err());
    }

    #[test]
    fn display_roundtrip() {
        let p = spingeo_core::blocks::akhmedov_park_y(2).unwrap().pi1;
        let q = parse_presentation(&Sections(&p).to_string()).unwrap();
        assert_eq!(p, q);
        let q = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, q);
    }
}
