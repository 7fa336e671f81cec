//! Bounded, conservative Tietze simplification.
//!
//! Moves: free and cyclic reduction of relators, removal of empty and
//! duplicate relators (up to cyclic permutation and inversion), and
//! elimination of a generator that occurs exactly once in some relator,
//! substituting its definition everywhere else.

use alloc::string::String;
use alloc::vec::Vec;

use super::presentation::Presentation;
use super::word::Word;

/// Refuse an elimination that would grow the total relator length past this.
const LENGTH_CAP: u64 = 200_000;

pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut gens: Vec<String> = p.generators().to_vec();
    let mut rels = normalize(p.relators().to_vec());

    for _ in 0..budget {
        let Some((ri, gen)) = pick_elimination(&rels) else {
            break;
        };
        let definition = solve_for(&rels[ri], &gen);
        let rest: Vec<Word> = rels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ri)
            .map(|(_, r)| r.substitute(&gen, &definition))
            .collect();
        if rest.iter().map(Word::len).sum::<u64>() > LENGTH_CAP {
            break;
        }
        rels = normalize(rest);
        gens.retain(|g| *g != gen);
    }
    Presentation::from_parts_unchecked(gens, rels)
}

fn normalize(rels: Vec<Word>) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for r in rels {
        let r = r.cyclically_reduced();
        if r.is_empty() || out.iter().any(|o| o.cyclically_equivalent(&r)) {
            continue;
        }
        out.push(r);
    }
    out
}

/// Cheapest (relator, generator) pair where the generator occurs once.
fn pick_elimination(rels: &[Word]) -> Option<(usize, String)> {
    let mut best: Option<(u64, usize, String)> = None;
    for (ri, r) in rels.iter().enumerate() {
        for g in r.generators() {
            if r.occurrences(g) != 1 {
                continue;
            }
            let uses: u64 = rels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != ri)
                .map(|(_, o)| o.occurrences(g))
                .sum();
            let cost = (r.len() - 1) * uses;
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, ri, String::from(g)));
            }
        }
    }
    best.map(|(_, ri, g)| (ri, g))
}

/// For a relator `u g^e v` with `g` absent from `u` and `v`, returns the word
/// equal to `g` in the group.
fn solve_for(r: &Word, gen: &str) -> Word {
    let letters = r.letters();
    let pos = letters
        .iter()
        .position(|l| l.gen == gen)
        .expect("generator occurs in relator");
    let e = letters[pos].exp;
    let v = Word::reduce(letters[pos + 1..].iter().cloned());
    let u = Word::reduce(letters[..pos].iter().cloned());
    // g^e v u = 1
    let vu = v.mul(&u);
    if e == 1 {
        vu.inverse()
    } else {
        vu
    }
}
