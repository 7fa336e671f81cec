//! Manifold models and the catalog of building blocks.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::grp::{AbelianType, Presentation, Word};
use crate::invariant::{check_consistency, CharNumbers, ConsistencyReport, GeoPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SurfaceKind {
    Symplectic,
    Lagrangian,
}

/// Which of the two recorded push-off loops of a torus a surgery uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Pushoff {
    First,
    Second,
}

impl Pushoff {
    pub fn index(self) -> usize {
        match self {
            Pushoff::First => 0,
            Pushoff::Second => 1,
        }
    }
}

/// An embedded square-zero surface with its loops written in the
/// complement presentation of the owning model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSurface {
    pub id: String,
    pub genus: u32,
    pub self_intersection: i64,
    pub kind: SurfaceKind,
    pub meridian: Word,
    /// `2 * genus` push-off loops in the boundary; a torus has two.
    pub pushoffs: Vec<Word>,
    /// A geometric dual sphere or torus exists, so the meridian is trivial
    /// in the complement.
    pub meridian_trivial: bool,
    pub nullhomologous: bool,
    /// Id of the torus this one is geometrically dual to.
    pub dual_of: Option<String>,
    /// Surgery recorded for this torus in the catalog: loop and coefficient sign.
    pub scheduled: Option<(Pushoff, i64)>,
    /// For a surgery core: the push-off power and the meridian power whose
    /// product is its meridian. Used by the nullhomologous-torus dial.
    pub origin: Option<(Word, Word)>,
}

impl MarkedSurface {
    pub fn torus(id: &str, kind: SurfaceKind, meridian: Word, first: Word, second: Word) -> Self {
        MarkedSurface {
            id: id.to_string(),
            genus: 1,
            self_intersection: 0,
            kind,
            meridian,
            pushoffs: vec![first, second],
            meridian_trivial: false,
            nullhomologous: false,
            dual_of: None,
            scheduled: None,
            origin: None,
        }
    }

    /// Surface in a simply connected block whose meridian bounds a dual sphere.
    pub fn simply_connected(id: &str, genus: u32, kind: SurfaceKind) -> Self {
        MarkedSurface {
            id: id.to_string(),
            genus,
            self_intersection: 0,
            kind,
            meridian: Word::empty(),
            pushoffs: vec![Word::empty(); 2 * genus as usize],
            meridian_trivial: true,
            nullhomologous: false,
            dual_of: None,
            scheduled: None,
            origin: None,
        }
    }

    pub fn pushoff(&self, which: Pushoff) -> Result<&Word> {
        self.pushoffs
            .get(which.index())
            .ok_or_else(|| Error::MissingCertificate(format!("push-off data for `{}`", self.id)))
    }

    fn rename_words(&mut self, f: &impl Fn(&str) -> String) {
        self.meridian = self.meridian.rename(f);
        for w in &mut self.pushoffs {
            *w = w.rename(f);
        }
        if let Some((s, m)) = &mut self.origin {
            *s = s.rename(f);
            *m = m.rename(f);
        }
    }
}

/// Parameters addressing a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BlockSpec {
    Elliptic { s: i64, knotted: bool },
    FourTorus,
    LuttingerBlock { n: i64 },
    AkhmedovParkY { n: i64 },
    Horikawa { kp: i64 },
    Ppx { x: i64, g: i64 },
    ParkZ { g: i64 },
}

impl BlockSpec {
    pub fn build(&self) -> Result<ManifoldModel> {
        match *self {
            BlockSpec::Elliptic { s, knotted } => elliptic(s, knotted),
            BlockSpec::FourTorus => Ok(four_torus()),
            BlockSpec::LuttingerBlock { n } => luttinger_block(n),
            BlockSpec::AkhmedovParkY { n } => akhmedov_park_y(n),
            BlockSpec::Horikawa { kp } => horikawa(kp),
            BlockSpec::Ppx { x, g } => ppx_surface(x, g),
            BlockSpec::ParkZ { g } => park_z(g),
        }
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockSpec::Elliptic { s, knotted: false } => write!(f, "E({})", 2 * s),
            BlockSpec::Elliptic { s, knotted: true } => write!(f, "E({})_K", 2 * s),
            BlockSpec::FourTorus => f.write_str("T^4"),
            BlockSpec::LuttingerBlock { n } => write!(f, "S(2,{n})"),
            BlockSpec::AkhmedovParkY { n } => write!(f, "Y_{n}"),
            BlockSpec::Horikawa { kp } => write!(f, "H({})", 8 * kp - 1),
            BlockSpec::Ppx { x, g } => write!(f, "PPX(x={x},g={g})"),
            BlockSpec::ParkZ { g } => write!(f, "Z(g={g})"),
        }
    }
}

/// One entry of a model's construction log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Block(BlockSpec),
    Sum {
        left: String,
        right: String,
        genus: u32,
    },
    Perturb {
        surface: String,
    },
    Surgery {
        surface: String,
        beta: Pushoff,
        p: i64,
        q: i64,
        luttinger: bool,
        essential: bool,
        before: CharNumbers,
        after: CharNumbers,
    },
    FamilyMember {
        surface: String,
        n: i64,
    },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Block(b) => write!(f, "block {b}"),
            Step::Sum { left, right, genus } => {
                write!(f, "sum along {left} = {right} (genus {genus})")
            }
            Step::Perturb { surface } => write!(f, "perturb {surface} to symplectic"),
            Step::Surgery {
                surface,
                beta,
                p,
                q,
                luttinger,
                essential,
                ..
            } => {
                let kind = if *luttinger {
                    "luttinger"
                } else {
                    "torus surgery"
                };
                write!(f, "{kind} on {surface} along {beta:?}, p={p} q={q}")?;
                if *essential {
                    f.write_str(" (essential)")?;
                }
                Ok(())
            }
            Step::FamilyMember { surface, n } => write!(f, "dial {surface} to n={n}"),
        }
    }
}

/// Known discrepancies attached to a model, reported rather than corrected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// Invariants are leading terms of an asymptotic formula.
    NominalInvariants { block: String },
    /// Stated signature formula disagrees with the stated `(c, chi)`.
    SignatureFormulaMismatch { g: i64, stated: i64, from_pair: i64 },
    /// Computed coordinates differ from a published pair.
    PublishedValueMismatch {
        computed: GeoPoint,
        published: GeoPoint,
    },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NominalInvariants { block } => {
                write!(f, "{block}: invariants are nominal, downstream claims are conditional on them")
            }
            Warning::SignatureFormulaMismatch { g, stated, from_pair } => write!(
                f,
                "g={g}: stated sigma = -8g^2+8g = {stated} but c - 8 chi = {from_pair}; using the (c, chi) pair"
            ),
            Warning::PublishedValueMismatch { computed, published } => write!(
                f,
                "computed (c, chi) = {computed} differs from published {published}"
            ),
        }
    }
}

/// A 4-manifold as tracked by the calculus.
///
/// `complement` presents the complement of all marked surfaces at once;
/// filling a surface back in adds its meridian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldModel {
    pub name: String,
    pub chars: CharNumbers,
    pub pi1: Presentation,
    pub complement: Presentation,
    pub surfaces: Vec<MarkedSurface>,
    pub provenance: Vec<Step>,
    pub warnings: Vec<Warning>,
}

impl ManifoldModel {
    pub fn surface(&self, id: &str) -> Result<&MarkedSurface> {
        self.surfaces
            .iter()
            .find(|s| s.id == id)
            .ok_or_else(|| Error::UnknownSurface(id.to_string()))
    }

    pub(crate) fn surface_mut(&mut self, id: &str) -> Result<&mut MarkedSurface> {
        self.surfaces
            .iter_mut()
            .find(|s| s.id == id)
            .ok_or_else(|| Error::UnknownSurface(id.to_string()))
    }

    /// Presentation of the complement of the single surface `id`.
    pub fn complement_of(&self, id: &str) -> Result<Presentation> {
        self.surface(id)?;
        self.complement.add_relators(
            self.surfaces
                .iter()
                .filter(|s| s.id != id)
                .map(|s| &s.meridian),
        )
    }

    /// Resets `pi1` to the complement with every surface filled back in.
    pub(crate) fn refill_pi1(&mut self) -> Result<()> {
        self.pi1 = self
            .complement
            .add_relators(self.surfaces.iter().map(|s| &s.meridian))?;
        Ok(())
    }

    pub fn abelian(&self) -> AbelianType {
        self.pi1.identify_abelian()
    }

    pub fn point(&self) -> Result<GeoPoint> {
        self.chars.point()
    }

    pub fn consistency(&self) -> ConsistencyReport {
        check_consistency(&self.chars, None)
    }

    /// Every surface word must be written in the complement's generators.
    pub fn check_words(&self) -> Result<()> {
        for s in &self.surfaces {
            self.complement.check_word(&s.meridian)?;
            for w in &s.pushoffs {
                self.complement.check_word(w)?;
            }
            if let Some((a, b)) = &s.origin {
                self.complement.check_word(a)?;
                self.complement.check_word(b)?;
            }
        }
        Ok(())
    }

    /// Renames generators and surface words with `f`.
    pub(crate) fn rename_generators(&mut self, f: impl Fn(&str) -> String) {
        self.pi1 = self.pi1.rename(&f);
        self.complement = self.complement.rename(&f);
        for s in &mut self.surfaces {
            s.rename_words(&f);
        }
    }

    pub fn lagrangian_tori(&self) -> impl Iterator<Item = &MarkedSurface> {
        self.surfaces
            .iter()
            .filter(|s| s.genus == 1 && s.kind == SurfaceKind::Lagrangian)
    }

    fn catalog(
        spec: BlockSpec,
        chars: CharNumbers,
        complement: Presentation,
        surfaces: Vec<MarkedSurface>,
    ) -> Result<Self> {
        let mut m = ManifoldModel {
            name: spec.to_string(),
            chars,
            pi1: Presentation::trivial(),
            complement,
            surfaces,
            provenance: vec![Step::Block(spec)],
            warnings: Vec::new(),
        };
        m.refill_pi1()?;
        m.check_words()?;
        Ok(m)
    }
}

fn positive(name: &str, v: i64, min: i64) -> Result<()> {
    if v < min {
        return Err(Error::InvalidParameter(format!(
            "{name} = {v}, need {name} >= {min}"
        )));
    }
    Ok(())
}

fn g(name: &str) -> Word {
    Word::gen(name)
}

fn inv(name: &str) -> Word {
    Word::power(name, -1)
}

fn comm(u: Word, v: Word) -> Word {
    Word::commutator(&u, &v)
}

/// Relator for `lhs = rhs`.
fn equation(lhs: Word, rhs: Word) -> Word {
    lhs.mul(&rhs.inverse())
}

/// `E(2s)` or its knot-surgered twin: `c = 0`, `chi = 2s`, simply connected,
/// with three parallel fibers.
pub fn elliptic(s: i64, knotted: bool) -> Result<ManifoldModel> {
    positive("s", s, 1)?;
    let spec = BlockSpec::Elliptic { s, knotted };
    let fibers = ["F1", "F2", "F3"]
        .iter()
        .map(|id| MarkedSurface::simply_connected(id, 1, SurfaceKind::Symplectic))
        .collect();
    ManifoldModel::catalog(
        spec,
        CharNumbers::from_chern(0, 2 * s, 0),
        Presentation::trivial(),
        fibers,
    )
}

/// `T^4` with the tori `T1` (perturbed symplectic) and `T2` (Lagrangian).
pub fn four_torus() -> ManifoldModel {
    let gens = ["x", "y", "a", "b"];
    let complement =
        Presentation::with_relators(&gens, vec![comm(g("x"), g("a")), comm(g("y"), g("a"))])
            .expect("static presentation");
    let t1 = MarkedSurface::torus(
        "T1",
        SurfaceKind::Symplectic,
        comm(inv("b"), inv("y")),
        g("x"),
        g("a"),
    );
    let mut t2 = MarkedSurface::torus(
        "T2",
        SurfaceKind::Lagrangian,
        comm(inv("x"), g("b")),
        g("y"),
        g("b").mul(&g("a")).mul(&inv("b")),
    );
    t2.scheduled = Some((Pushoff::First, 1));
    let mut m = ManifoldModel::catalog(
        BlockSpec::FourTorus,
        CharNumbers::spin_symplectic(0, 0, 4),
        complement,
        vec![t1, t2],
    )
    .expect("static block");
    let mut all = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            all.push(comm(g(gens[i]), g(gens[j])));
        }
    }
    m.pi1 = Presentation::with_relators(&gens, all).expect("static presentation");
    m
}

fn surface_generators(n: i64) -> Vec<String> {
    let mut gens: Vec<String> = ["a1", "b1", "a2", "b2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for j in 1..=n {
        gens.push(format!("c{j}"));
        gens.push(format!("d{j}"));
    }
    gens
}

/// Relators of the fully surgered product of a genus 2 and a genus `n`
/// surface, in template order. The three relations withheld by the partial
/// block come first.
fn product_relators(n: i64) -> Vec<Word> {
    let c = |j: i64| g(&format!("c{j}"));
    let d = |j: i64| g(&format!("d{j}"));
    let ci = |j: i64| inv(&format!("c{j}"));
    let di = |j: i64| inv(&format!("d{j}"));
    let mut rels = vec![
        equation(comm(inv("b1"), di(1)), g("a1")),
        equation(comm(inv("b2"), di(2)), g("a2")),
        equation(comm(ci(1), g("b2")), d(1)),
        equation(comm(inv("a1"), d(1)), g("b1")),
        equation(comm(inv("a2"), d(2)), g("b2")),
        equation(comm(di(1), inv("b2")), c(1)),
        equation(comm(di(2), inv("b1")), c(2)),
        equation(comm(ci(2), g("b1")), d(2)),
        comm(g("a1"), c(1)),
        comm(g("a1"), c(2)),
        comm(g("a1"), d(2)),
        comm(g("b1"), c(1)),
        comm(g("a2"), c(1)),
        comm(g("a2"), c(2)),
        comm(g("a2"), d(1)),
        comm(g("b2"), c(2)),
        comm(g("a1"), g("b1")).mul(&comm(g("a2"), g("b2"))),
    ];
    for j in 3..=n {
        rels.push(equation(comm(inv("a1"), di(j)), c(j)));
        rels.push(equation(comm(inv("a2"), ci(j)), d(j)));
        rels.push(comm(g("b1"), c(j)));
        rels.push(comm(g("b2"), d(j)));
    }
    let mut surface = Word::empty();
    for j in 1..=n {
        surface = surface.mul(&comm(c(j), d(j)));
    }
    rels.push(surface);
    rels
}

const WITHHELD: usize = 3;

/// The product of a genus 2 and a genus `n` surface after all Luttinger
/// surgeries except those on `T1`, `T2`, `T3`, which stay marked.
pub fn luttinger_block(n: i64) -> Result<ManifoldModel> {
    positive("n", n, 2)?;
    let gens = surface_generators(n);
    let rels = product_relators(n).split_off(WITHHELD);
    let complement = Presentation::with_relators(&gens, rels)?;

    let mut t1 = MarkedSurface::torus(
        "T1",
        SurfaceKind::Lagrangian,
        comm(inv("b1"), inv("d1")),
        g("a1"),
        g("c1"),
    );
    t1.scheduled = Some((Pushoff::First, -1));
    let mut t2 = MarkedSurface::torus(
        "T2",
        SurfaceKind::Lagrangian,
        comm(inv("b2"), inv("d2")),
        g("a2"),
        g("c2"),
    );
    t2.scheduled = Some((Pushoff::First, -1));
    let mut t3 = MarkedSurface::torus(
        "T3",
        SurfaceKind::Lagrangian,
        comm(inv("c1"), g("b2")),
        g("a2"),
        g("d1"),
    );
    t3.scheduled = Some((Pushoff::Second, 1));
    let mut dual = MarkedSurface::torus(
        "T'",
        SurfaceKind::Lagrangian,
        comm(inv("a1"), inv("c1")),
        g("b1"),
        g("d1"),
    );
    dual.dual_of = Some("T1".to_string());

    let mut surfaces = vec![t1, t2, t3, dual];
    for j in 3..=n {
        for i in 1..=2 {
            let (a, b) = (format!("a{i}"), format!("b{i}"));
            let (c, d) = (format!("c{j}"), format!("d{j}"));
            let mut ac = MarkedSurface::torus(
                &format!("{a}x{c}"),
                SurfaceKind::Lagrangian,
                comm(inv(&b), inv(&d)),
                g(&a),
                g(&c),
            );
            ac.meridian_trivial = true;
            let mut ad = MarkedSurface::torus(
                &format!("{a}x{d}"),
                SurfaceKind::Lagrangian,
                comm(inv(&b), inv(&c)),
                g(&a),
                g(&d),
            );
            ad.meridian_trivial = true;
            surfaces.push(ac);
            surfaces.push(ad);
        }
    }
    let mut m = ManifoldModel::catalog(
        BlockSpec::LuttingerBlock { n },
        CharNumbers::spin_symplectic(4 * n - 4, 0, 0),
        complement,
        surfaces,
    )?;
    m.chars.b1 = m.pi1.betti_one() as u32;
    Ok(m)
}

/// The fully surgered block: all template relations, no marked surfaces.
pub fn akhmedov_park_y(n: i64) -> Result<ManifoldModel> {
    positive("n", n, 2)?;
    let p = Presentation::with_relators(&surface_generators(n), product_relators(n))?;
    let mut m = ManifoldModel::catalog(
        BlockSpec::AkhmedovParkY { n },
        CharNumbers::spin_symplectic(4 * n - 4, 0, 0),
        p,
        Vec::new(),
    )?;
    m.chars.b1 = m.pi1.betti_one() as u32;
    Ok(m)
}

/// `H(8k'-1)` with two parallel Lagrangian tori, each meeting a sphere once.
pub fn horikawa(kp: i64) -> Result<ManifoldModel> {
    positive("kp", kp, 1)?;
    let tori = ["T1", "T2"]
        .iter()
        .map(|id| MarkedSurface::simply_connected(id, 1, SurfaceKind::Lagrangian))
        .collect();
    ManifoldModel::catalog(
        BlockSpec::Horikawa { kp },
        CharNumbers::from_chern(16 * kp - 8, 8 * kp - 1, 0),
        Presentation::trivial(),
        tori,
    )
}

pub const PPX_C: i64 = 60068;
pub const PPX_CHI: i64 = 6857;

/// The positive-signature spin surface, with nominal invariants
/// `(60068 x^2, 6857 x^2)`, two parallel genus-`g` curves and a torus.
pub fn ppx_surface(x: i64, genus: i64) -> Result<ManifoldModel> {
    positive("x", x, 1)?;
    positive("g", genus, 1)?;
    let gu = genus as u32;
    let surfaces = vec![
        MarkedSurface::simply_connected("Sg1", gu, SurfaceKind::Symplectic),
        MarkedSurface::simply_connected("Sg2", gu, SurfaceKind::Symplectic),
        MarkedSurface::simply_connected("T", 1, SurfaceKind::Symplectic),
    ];
    let spec = BlockSpec::Ppx { x, g: genus };
    let mut m = ManifoldModel::catalog(
        spec.clone(),
        CharNumbers::from_chern(PPX_C * x * x, PPX_CHI * x * x, 0),
        Presentation::trivial(),
        surfaces,
    )?;
    m.warnings.push(Warning::NominalInvariants {
        block: spec.to_string(),
    });
    Ok(m)
}

/// Stated `(c, chi)` of the cusp block.
pub fn park_z_pair(genus: i64) -> GeoPoint {
    GeoPoint::new(8 * (genus - 1) * (genus - 1), 2 * genus * genus - genus + 1)
}

/// The cusp block's numbers as literally stated: `sigma = -8g^2 + 8g` with
/// `e` taken from `chi`. Fails the signature identity against the pair.
pub fn park_z_stated(genus: i64) -> CharNumbers {
    let pair = park_z_pair(genus);
    let sigma = -8 * genus * genus + 8 * genus;
    CharNumbers::spin_symplectic(4 * pair.chi - sigma, sigma, 0)
}

/// Simply connected block with a cusp torus and a genus-`g` surface. The
/// `(c, chi)` pair is primary; the stated signature is kept as a warning.
pub fn park_z(genus: i64) -> Result<ManifoldModel> {
    positive("g", genus, 2)?;
    let gu = genus as u32;
    let pair = park_z_pair(genus);
    let surfaces = vec![
        MarkedSurface::simply_connected("T", 1, SurfaceKind::Symplectic),
        MarkedSurface::simply_connected("T2", 1, SurfaceKind::Symplectic),
        MarkedSurface::simply_connected("Sg", gu, SurfaceKind::Symplectic),
    ];
    let mut m = ManifoldModel::catalog(
        BlockSpec::ParkZ { g: genus },
        CharNumbers::from_chern(pair.c, pair.chi, 0),
        Presentation::trivial(),
        surfaces,
    )?;
    m.warnings.push(Warning::SignatureFormulaMismatch {
        g: genus,
        stated: park_z_stated(genus).sigma,
        from_pair: pair.sigma(),
    });
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{tietze_simplify, AbelianTag};
    use crate::invariant::Violation;

    #[test]
    fn elliptic_numbers() {
        let e2 = elliptic(1, false).unwrap();
        assert_eq!(e2.point().unwrap(), GeoPoint::new(0, 2));
        assert_eq!((e2.chars.e, e2.chars.sigma), (24, -16));
        assert_eq!(e2.abelian(), AbelianType::trivial());
        let e4 = elliptic(2, false).unwrap();
        assert_eq!(e4.point().unwrap(), GeoPoint::new(0, 4));
        assert_eq!(e4.chars.sigma, -32);
        let k = elliptic(1, true).unwrap();
        assert_eq!(k.chars, e2.chars);
        assert_ne!(k.provenance, e2.provenance);
        assert!(elliptic(0, false).is_err());
    }

    #[test]
    fn four_torus_words() {
        let t = four_torus();
        assert_eq!(t.point().unwrap(), GeoPoint::new(0, 0));
        assert_eq!(t.chars.b1, 4);
        assert_eq!(t.surface("T2").unwrap().meridian, comm(inv("x"), g("b")));
        assert_eq!(t.surface("T1").unwrap().meridian.len(), 4);
        assert_eq!(t.complement.identify_abelian().factors(), &[0, 0, 0, 0]);
        assert_eq!(t.abelian().rank(), 4);
    }

    #[test]
    fn product_block_counts() {
        let s2 = luttinger_block(2).unwrap();
        assert_eq!((s2.chars.e, s2.chars.sigma), (4, 0));
        assert_eq!(s2.point().unwrap(), GeoPoint::new(8, 1));
        let spares = |n| {
            luttinger_block(n)
                .unwrap()
                .lagrangian_tori()
                .filter(|t| t.meridian_trivial)
                .count()
        };
        assert_eq!(spares(5), 12);
        assert_eq!(spares(7), 20);
        assert!(luttinger_block(1).is_err());
    }

    #[test]
    fn full_block_is_acyclic() {
        for n in 2..=5 {
            let y = akhmedov_park_y(n).unwrap();
            assert_eq!(y.abelian(), AbelianType::trivial(), "n={n}");
            assert_eq!(y.point().unwrap(), GeoPoint::new(8 * n - 8, n - 1));
            let s = luttinger_block(n).unwrap();
            assert_eq!((s.chars.e, s.chars.sigma), (y.chars.e, y.chars.sigma));
        }
        let y3 = akhmedov_park_y(3).unwrap();
        let rel = equation(comm(inv("a1"), inv("d3")), g("c3"));
        assert!(y3.pi1.relators().contains(&rel));
        assert_eq!(
            akhmedov_park_y(4).unwrap().point().unwrap(),
            GeoPoint::new(24, 3)
        );
    }

    #[test]
    fn first_block_matrix_kills_every_generator() {
        let y = akhmedov_park_y(2).unwrap();
        assert_eq!(y.pi1.relators().len(), 18);
        // [b1^-1, d1^-1] = a1 contributes the row -a1
        let m = y.pi1.abelianize_matrix();
        let a1 = y.pi1.generators().iter().position(|s| s == "a1").unwrap();
        assert_eq!(m[(0, a1)], num_bigint::BigInt::from(-1));
        assert_eq!(
            m.row(0)
                .iter()
                .filter(|v| **v != num_bigint::BigInt::from(0))
                .count(),
            1
        );
    }

    #[test]
    fn horikawa_line() {
        for kp in 1..6 {
            let h = horikawa(kp).unwrap();
            let p = h.point().unwrap();
            assert_eq!(p.c, 2 * p.chi - 6);
            assert_eq!(h.chars.sigma, -48 * kp);
        }
        assert_eq!(horikawa(1).unwrap().point().unwrap(), GeoPoint::new(8, 7));
        assert_eq!(horikawa(2).unwrap().point().unwrap(), GeoPoint::new(24, 15));
    }

    #[test]
    fn ppx_values() {
        let y1 = ppx_surface(1, 2).unwrap();
        assert_eq!(y1.chars.sigma, 5212);
        assert!(matches!(y1.warnings[0], Warning::NominalInvariants { .. }));
        assert_eq!(ppx_surface(2, 2).unwrap().point().unwrap().chi, 27428);
        assert!(ppx_surface(2, 2).unwrap().consistency().passed());
        assert!(!y1.consistency().passed());
    }

    #[test]
    fn cusp_block_flags_one_identity() {
        assert_eq!(park_z(2).unwrap().point().unwrap(), GeoPoint::new(8, 7));
        assert_eq!(park_z(3).unwrap().point().unwrap(), GeoPoint::new(32, 16));
        for genus in 2..=4 {
            let r = check_consistency(&park_z_stated(genus), Some(park_z_pair(genus)));
            assert_eq!(r.violations.len(), 1);
            assert!(matches!(
                r.violations[0],
                Violation::SignatureMismatch { .. }
            ));
            assert!(park_z(genus).unwrap().consistency().passed());
        }
        let w = &park_z(2).unwrap().warnings[0];
        assert_eq!(
            *w,
            Warning::SignatureFormulaMismatch {
                g: 2,
                stated: -16,
                from_pair: -48
            }
        );
    }

    #[test]
    fn catalog_surfaces_square_zero_and_consistent() {
        let models = [
            elliptic(3, true).unwrap(),
            four_torus(),
            luttinger_block(4).unwrap(),
            horikawa(2).unwrap(),
            ppx_surface(2, 3).unwrap(),
            park_z(3).unwrap(),
        ];
        for m in &models {
            assert!(m.consistency().passed(), "{}", m.name);
            assert!(m.surfaces.iter().all(|s| s.self_intersection == 0));
            m.check_words().unwrap();
        }
    }

    #[test]
    fn complement_of_fills_other_surfaces() {
        let t = four_torus();
        let c = t.complement_of("T1").unwrap();
        assert_eq!(c.relators().len(), 3);
        let simplified = tietze_simplify(&c, 10);
        assert_eq!(simplified.identify_abelian().tag(), AbelianTag::Other);
        assert!(t.complement_of("nope").is_err());
    }
}
