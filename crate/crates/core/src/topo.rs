//! Homeomorphism prototypes and the classification results that apply.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::grp::{AbelianTag, AbelianType};
use crate::invariant::{CharNumbers, W2Type};
use crate::surgery::FamilyMarker;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Freedman,
    HambletonTeichner,
    HambletonKreck,
    Unsupported,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Freedman => "Freedman",
            Criterion::HambletonTeichner => "Hambleton-Teichner",
            Criterion::HambletonKreck => "Hambleton-Kreck",
            Criterion::Unsupported => "unsupported",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precondition {
    /// Universal cover spin, i.e. the same w2-type as the prototype.
    W2TypeSpin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub criterion: Criterion,
    pub preconditions: Vec<Precondition>,
}

impl Classification {
    /// Whether `chars` meet every precondition; never true for `Unsupported`.
    pub fn applies(&self, chars: &CharNumbers) -> bool {
        self.criterion != Criterion::Unsupported
            && chars.spin
            && self.preconditions.iter().all(|p| match p {
                Precondition::W2TypeSpin => chars.w2_type == W2Type::Spin,
            })
    }
}

pub fn is_odd_prime(q: u64) -> bool {
    q > 2
        && q % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

pub fn classification_criterion(group: &AbelianType) -> Classification {
    let hk = || Classification {
        criterion: Criterion::HambletonKreck,
        preconditions: vec![Precondition::W2TypeSpin],
    };
    let plain = |criterion| Classification {
        criterion,
        preconditions: Vec::new(),
    };
    match group.tag() {
        AbelianTag::Trivial => plain(Criterion::Freedman),
        AbelianTag::Z => plain(Criterion::HambletonTeichner),
        AbelianTag::Cyclic(_) => hk(),
        AbelianTag::CyclicCyclic(p, q) if p == q && is_odd_prime(q) => hk(),
        _ => plain(Criterion::Unsupported),
    }
}

/// Connected-sum pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    Elliptic {
        s: i64,
    },
    S2xS2,
    S3xS1,
    /// Same manifold as `S3xS1`, kept separate to match the zero-signature tables.
    S1xS3,
    /// `L(p,1) x S^1` with the circle factor killed: fundamental group `Z_p`.
    LensTwisted {
        p: i64,
    },
    /// Only `alpha^q` killed: fundamental group `Z_p + Z_q`.
    LensDoubleTwisted {
        p: i64,
        q: i64,
    },
    Horikawa {
        kp: i64,
    },
    K3,
}

impl Piece {
    /// `(e, sigma)`.
    pub fn invariants(&self) -> (i64, i64) {
        match *self {
            Piece::Elliptic { s } => (24 * s, -16 * s),
            Piece::S2xS2 => (4, 0),
            Piece::S3xS1 | Piece::S1xS3 => (0, 0),
            // surgery on a circle trades S^1 x D^3 for D^2 x S^2
            Piece::LensTwisted { .. } | Piece::LensDoubleTwisted { .. } => (2, 0),
            Piece::Horikawa { kp } => (80 * kp - 4, -48 * kp),
            Piece::K3 => (24, -16),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Elliptic { s } => write!(f, "E({})", 2 * s),
            Piece::S2xS2 => f.write_str("S²×S²"),
            Piece::S3xS1 => f.write_str("S³×S¹"),
            Piece::S1xS3 => f.write_str("S¹×S³"),
            Piece::LensTwisted { p } => write!(f, "L̃({p},1)×S¹"),
            Piece::LensDoubleTwisted { p, .. } => write!(f, "L̃̃({p},1)×S¹"),
            Piece::Horikawa { kp } => write!(f, "H({})", 8 * kp - 1),
            Piece::K3 => f.write_str("K3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrototypeName {
    pub summands: Vec<(Piece, u64)>,
}

impl PrototypeName {
    pub fn new(summands: Vec<(Piece, u64)>) -> Self {
        PrototypeName { summands }
    }

    /// `(e, sigma)` of the connected sum: Euler characteristics add with a
    /// correction of 2 per sum, signatures add. The empty sum is `S^4`.
    pub fn invariants(&self) -> (i64, i64) {
        let count: u64 = self.summands.iter().map(|(_, k)| k).sum();
        if count == 0 {
            return (2, 0);
        }
        let (mut e, mut sigma) = (0, 0);
        for (piece, k) in &self.summands {
            let (pe, ps) = piece.invariants();
            e += pe * *k as i64;
            sigma += ps * *k as i64;
        }
        (e - 2 * (count as i64 - 1), sigma)
    }
}

impl fmt::Display for PrototypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (piece, k) in self.summands.iter().filter(|(_, k)| *k > 0) {
            if !first {
                f.write_str("#")?;
            }
            first = false;
            if *k == 1 {
                write!(f, "{piece}")?;
            } else {
                write!(f, "{k}({piece})")?;
            }
        }
        if first {
            f.write_str("S⁴")?;
        }
        Ok(())
    }
}

/// The two zero-signature tables, kept verbatim: their indexing differs by
/// one `S^2 x S^2` pair on the infinite cyclic entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroTable {
    /// Finite groups `(2n+1)(S^2xS^2) # L`, infinite cyclic `(2n)(S^2xS^2) # S^1xS^3`; no simply connected entry.
    Base,
    /// `(2n+1)(S^2xS^2)`, lens entries as in `Base`, infinite cyclic `(2n+2)(S^2xS^2) # S^1xS^3`.
    Shifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    EllipticStrip {
        s: i64,
        n: i64,
    },
    HorikawaStrip {
        kp: i64,
        n: i64,
    },
    /// `n` is read off the Euler characteristic.
    ZeroSignature(ZeroTable),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unclassified {
    pub reason: String,
}

impl fmt::Display for Unclassified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unclassified: {}", self.reason)
    }
}

fn unclassified(reason: impl Into<String>) -> Unclassified {
    Unclassified {
        reason: reason.into(),
    }
}

/// The lens piece paired with a finite group, if any.
fn lens_piece(group: &AbelianType) -> Option<Piece> {
    let small = |x: u64| i64::try_from(x).ok();
    match group.tag() {
        AbelianTag::Cyclic(p) => Some(Piece::LensTwisted { p: small(p)? }),
        AbelianTag::CyclicCyclic(p, q) => Some(Piece::LensDoubleTwisted {
            p: small(p)?,
            q: small(q)?,
        }),
        _ => None,
    }
}

fn strip_prototype(
    head: Piece,
    n: i64,
    group: &AbelianType,
) -> core::result::Result<PrototypeName, Unclassified> {
    let pairs = |k: i64| (Piece::S2xS2, k as u64);
    match group.tag() {
        AbelianTag::Trivial if n >= 2 => Ok(PrototypeName::new(vec![(head, 1), pairs(2 * n - 2)])),
        AbelianTag::Z if n >= 1 => Ok(PrototypeName::new(vec![
            (head, 1),
            pairs(2 * n - 1),
            (Piece::S3xS1, 1),
        ])),
        AbelianTag::Cyclic(_) | AbelianTag::CyclicCyclic(..) if n >= 2 => {
            let lens = lens_piece(group).ok_or_else(|| unclassified("torsion too large"))?;
            Ok(PrototypeName::new(vec![
                (head, 1),
                pairs(2 * n - 2),
                (lens, 1),
            ]))
        }
        AbelianTag::Trivial
        | AbelianTag::Z
        | AbelianTag::Cyclic(_)
        | AbelianTag::CyclicCyclic(..) => {
            Err(unclassified(format!("n = {n} below the family range")))
        }
        _ => Err(unclassified(format!("no prototype listed for {group}"))),
    }
}

type SummandRule = fn(u64, Option<Piece>) -> Vec<(Piece, u64)>;

fn zero_prototype(
    table: ZeroTable,
    e: i64,
    group: &AbelianType,
) -> core::result::Result<PrototypeName, Unclassified> {
    // every entry has e = 4n + offset
    let (offset, build): (i64, SummandRule) = match (table, group.tag()) {
        (ZeroTable::Shifted, AbelianTag::Trivial) => (4, |n, _| vec![(Piece::S2xS2, 2 * n + 1)]),
        (_, AbelianTag::Cyclic(_) | AbelianTag::CyclicCyclic(..)) => (4, |n, lens| {
            vec![(Piece::S2xS2, 2 * n + 1), (lens.unwrap(), 1)]
        }),
        (ZeroTable::Base, AbelianTag::Z) => {
            (0, |n, _| vec![(Piece::S2xS2, 2 * n), (Piece::S1xS3, 1)])
        }
        (ZeroTable::Shifted, AbelianTag::Z) => {
            (4, |n, _| vec![(Piece::S2xS2, 2 * n + 2), (Piece::S1xS3, 1)])
        }
        _ => {
            return Err(unclassified(format!(
                "no zero-signature prototype listed for {group} in {table:?}"
            )))
        }
    };
    let lens = lens_piece(group);
    if matches!(
        group.tag(),
        AbelianTag::Cyclic(_) | AbelianTag::CyclicCyclic(..)
    ) && lens.is_none()
    {
        return Err(unclassified("torsion too large"));
    }
    if e < offset || (e - offset) % 4 != 0 {
        return Err(unclassified(format!(
            "e = {e} not of the form 4n + {offset}"
        )));
    }
    Ok(PrototypeName::new(build(((e - offset) / 4) as u64, lens)))
}

/// Names the prototype of `family` for `group` and checks that its
/// connected-sum invariants reproduce `chars`.
pub fn prototype_name(
    chars: &CharNumbers,
    group: &AbelianType,
    family: Family,
) -> core::result::Result<PrototypeName, Unclassified> {
    if !chars.spin {
        return Err(unclassified("not spin"));
    }
    let name = match family {
        Family::EllipticStrip { s, n } => strip_prototype(Piece::Elliptic { s }, n, group)?,
        Family::HorikawaStrip { kp, n } => strip_prototype(Piece::Horikawa { kp }, n, group)?,
        Family::ZeroSignature(table) => {
            if chars.sigma != 0 {
                return Err(unclassified(format!(
                    "signature {} is not zero",
                    chars.sigma
                )));
            }
            zero_prototype(table, chars.e, group)?
        }
    };
    let (e, sigma) = name.invariants();
    if (e, sigma) != (chars.e, chars.sigma) {
        return Err(unclassified(format!(
            "{name} has (e, sigma) = ({e}, {sigma}), input has ({}, {})",
            chars.e, chars.sigma
        )));
    }
    Ok(name)
}

pub const SW_CITATION: &str =
    "Seiberg-Witten invariants of members differ by the knot-surgery/torus-surgery product formula (axiomatic, not computed)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BotanyReport {
    pub members: usize,
    pub chars: CharNumbers,
    pub group: AbelianType,
    pub consistent: bool,
    pub symplectic_members: Vec<i64>,
    pub sw_distinct: bool,
    pub citation: &'static str,
    pub criterion: Criterion,
}

impl BotanyReport {
    pub fn exactly_one_symplectic(&self) -> bool {
        self.symplectic_members.len() == 1
    }
}

impl fmt::Display for BotanyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} members, pi1^ab = {}, consistent = {}, symplectic members {:?}, criterion {}",
            self.members, self.group, self.consistent, self.symplectic_members, self.criterion
        )
    }
}

/// Evaluates every member on the dial and compares the homeomorphism inputs.
pub fn botany_family_report(fam: &FamilyMarker) -> Result<BotanyReport> {
    let group = fam.base.abelian();
    let mut consistent = true;
    let mut symplectic_members = Vec::new();
    let (lo, hi) = fam.dial;
    for n in lo..=hi {
        let m = fam.member(n)?;
        consistent &= m.chars.same_topology(&fam.base.chars) && m.abelian() == group;
        if m.chars.symplectic {
            symplectic_members.push(n);
        }
    }
    Ok(BotanyReport {
        members: (hi - lo + 1).max(0) as usize,
        chars: fam.base.chars,
        criterion: classification_criterion(&group).criterion,
        group,
        consistent,
        symplectic_members,
        sw_distinct: fam.sw_distinct,
        citation: SW_CITATION,
    })
}

impl Family {
    pub fn label(&self) -> String {
        match self {
            Family::EllipticStrip { s, n } => format!("elliptic-strip(s={s},n={n})"),
            Family::HorikawaStrip { kp, n } => format!("horikawa-strip(kp={kp},n={n})"),
            Family::ZeroSignature(t) => format!("zero-signature({t:?})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::CharNumbers;
    use crate::surgery::{elliptic_strip, family_from_null_torus};
    use alloc::string::ToString;

    #[test]
    fn criteria() {
        assert_eq!(
            classification_criterion(&AbelianType::trivial()).criterion,
            Criterion::Freedman
        );
        assert_eq!(
            classification_criterion(&AbelianType::z()).criterion,
            Criterion::HambletonTeichner
        );
        assert_eq!(
            classification_criterion(&AbelianType::cyclic(4)).criterion,
            Criterion::HambletonKreck
        );
        assert_eq!(
            classification_criterion(&AbelianType::cyclic_cyclic(3, 3)).criterion,
            Criterion::HambletonKreck
        );
        assert_eq!(
            classification_criterion(&AbelianType::cyclic_cyclic(9, 9)).criterion,
            Criterion::Unsupported
        );
        assert_eq!(
            classification_criterion(&AbelianType::cyclic_cyclic(2, 2)).criterion,
            Criterion::Unsupported
        );
        assert_eq!(
            classification_criterion(&AbelianType::zz()).criterion,
            Criterion::Unsupported
        );
        let c = CharNumbers::spin_symplectic(28, -16, 0);
        assert!(!classification_criterion(&AbelianType::zz()).applies(&c));
        let mut unknown = c;
        unknown.w2_type = W2Type::Unknown;
        assert!(!classification_criterion(&AbelianType::cyclic(3)).applies(&unknown));
        assert!(classification_criterion(&AbelianType::cyclic(3)).applies(&c));
    }

    #[test]
    fn primes() {
        let odd: Vec<u64> = (0..30).filter(|&q| is_odd_prime(q)).collect();
        assert_eq!(odd, [3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn strip_names() {
        let c = CharNumbers::spin_symplectic(28, -16, 0);
        let name = prototype_name(
            &c,
            &AbelianType::trivial(),
            Family::EllipticStrip { s: 1, n: 2 },
        )
        .unwrap();
        assert_eq!(name.to_string(), "E(2)#2(S²×S²)");
        let c = CharNumbers::spin_symplectic(28, -16, 0);
        let name = prototype_name(
            &c,
            &AbelianType::cyclic(3),
            Family::EllipticStrip { s: 1, n: 2 },
        )
        .unwrap();
        assert_eq!(name.to_string(), "E(2)#2(S²×S²)#L̃(3,1)×S¹");
        let name =
            prototype_name(&c, &AbelianType::z(), Family::EllipticStrip { s: 1, n: 2 }).unwrap();
        assert_eq!(name.to_string(), "E(2)#3(S²×S²)#S³×S¹");
        assert!(
            prototype_name(&c, &AbelianType::zz(), Family::EllipticStrip { s: 1, n: 2 }).is_err()
        );
        assert!(prototype_name(
            &c,
            &AbelianType::trivial(),
            Family::EllipticStrip { s: 2, n: 2 }
        )
        .is_err());
    }

    #[test]
    fn horikawa_names() {
        let (kp, n) = (2, 3);
        let c = CharNumbers::from_chern(16 * kp + 8 * n - 16, 8 * kp + n - 2, 0);
        let name =
            prototype_name(&c, &AbelianType::cyclic(5), Family::HorikawaStrip { kp, n }).unwrap();
        assert_eq!(name.to_string(), "H(15)#4(S²×S²)#L̃(5,1)×S¹");
    }

    #[test]
    fn zero_signature_tables() {
        let c = CharNumbers::from_chern(8 * 7, 7, 1);
        let shifted = prototype_name(
            &c,
            &AbelianType::z(),
            Family::ZeroSignature(ZeroTable::Shifted),
        )
        .unwrap();
        assert_eq!(shifted.to_string(), "14(S²×S²)#S¹×S³");
        let base = prototype_name(
            &c,
            &AbelianType::z(),
            Family::ZeroSignature(ZeroTable::Base),
        )
        .unwrap();
        assert_eq!(base.to_string(), "14(S²×S²)#S¹×S³");
        let t = prototype_name(
            &c,
            &AbelianType::trivial(),
            Family::ZeroSignature(ZeroTable::Shifted),
        )
        .unwrap();
        assert_eq!(t.to_string(), "13(S²×S²)");
        assert!(prototype_name(
            &c,
            &AbelianType::trivial(),
            Family::ZeroSignature(ZeroTable::Base)
        )
        .is_err());
        let neg = CharNumbers::spin_symplectic(28, -16, 0);
        assert!(prototype_name(
            &neg,
            &AbelianType::z(),
            Family::ZeroSignature(ZeroTable::Base)
        )
        .is_err());
    }

    #[test]
    fn empty_sum_is_sphere() {
        let p = PrototypeName::new(vec![(Piece::S2xS2, 0)]);
        assert_eq!(p.to_string(), "S⁴");
        assert_eq!(p.invariants(), (2, 0));
    }

    #[test]
    fn strip_family_botany() {
        let m = elliptic_strip(1, 2, &AbelianType::trivial()).unwrap();
        let t = m
            .surfaces
            .iter()
            .find(|s| s.nullhomologous)
            .map(|s| s.id.clone())
            .unwrap();
        let fam = family_from_null_torus(&m, &t, 1, 5).unwrap();
        let r = botany_family_report(&fam).unwrap();
        assert!(r.consistent && r.exactly_one_symplectic() && r.sw_distinct);
        assert_eq!(r.symplectic_members, [1]);
        let single = family_from_null_torus(&m, &t, 1, 1).unwrap();
        assert!(botany_family_report(&single).unwrap().consistent);
    }
}
