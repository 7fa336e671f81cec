//! Symplectic sums, torus surgeries and the composite routes built on them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::blocks::{
    elliptic, four_torus, horikawa, luttinger_block, ManifoldModel, MarkedSurface, Pushoff, Step,
    SurfaceKind, Warning,
};
use crate::error::{Error, Result};
use crate::grp::{tietze_simplify, AbelianTag, AbelianType, Presentation, Word};
use crate::invariant::{CharNumbers, GeoPoint};

fn simply_connected(p: &Presentation) -> bool {
    p.generators().is_empty()
        || tietze_simplify(p, 2 * p.generators().len() + 8)
            .generators()
            .is_empty()
}

fn fresh(name: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut out = name.to_string();
    while taken(&out) {
        out.push('\'');
    }
    out
}

fn require_spin_symplectic(m: &ManifoldModel) -> Result<()> {
    if m.chars.spin && m.chars.symplectic {
        Ok(())
    } else {
        Err(Error::NotSpinSymplectic(m.name.clone()))
    }
}

fn check_sum_surface(s: &MarkedSurface) -> Result<()> {
    if s.self_intersection != 0 {
        return Err(Error::NonzeroSelfIntersection {
            surface: s.id.clone(),
            value: s.self_intersection,
        });
    }
    if s.kind != SurfaceKind::Symplectic {
        return Err(Error::NotSymplecticSurface(s.id.clone()));
    }
    if s.pushoffs.len() != 2 * s.genus as usize {
        return Err(Error::MissingCertificate(format!(
            "push-off data for `{}`",
            s.id
        )));
    }
    Ok(())
}

/// Gompf sum of `a` and `b` along `sa` and `sb`.
///
/// The fundamental group is amalgamated over the boundary: push-offs are
/// identified and the meridians become inverse. This is only attempted when
/// one side has a simply connected surface complement or a surface carries
/// the trivial-meridian certificate. Names on the `b` side that clash with
/// `a` get a `'` suffix.
pub fn symplectic_sum(
    a: &ManifoldModel,
    sa: &str,
    b: &ManifoldModel,
    sb: &str,
) -> Result<ManifoldModel> {
    require_spin_symplectic(a)?;
    require_spin_symplectic(b)?;
    let surf_a = a.surface(sa)?;
    let surf_b = b.surface(sb)?;
    check_sum_surface(surf_a)?;
    check_sum_surface(surf_b)?;
    if surf_a.genus != surf_b.genus {
        return Err(Error::GenusMismatch {
            left: surf_a.genus,
            right: surf_b.genus,
        });
    }
    let genus = surf_a.genus;

    let supported = surf_a.meridian_trivial
        || surf_b.meridian_trivial
        || simply_connected(&a.complement_of(sa)?)
        || simply_connected(&b.complement_of(sb)?);
    if !supported {
        return Err(Error::UnsupportedFundamentalGroup);
    }

    let mut b = b.clone();
    let a_gens = a.complement.generators();
    let b_gens: Vec<String> = b.complement.generators().to_vec();
    let renames: Vec<(String, String)> = b_gens
        .iter()
        .filter(|g| a_gens.contains(g))
        .map(|g| {
            let new = fresh(g, |c| {
                a_gens.iter().any(|x| x == c) || b_gens.iter().any(|x| x == c)
            });
            (g.clone(), new)
        })
        .collect();
    if !renames.is_empty() {
        b.rename_generators(|g| {
            renames
                .iter()
                .find(|(old, _)| old == g)
                .map_or_else(|| g.to_string(), |(_, new)| new.clone())
        });
    }
    let surf_b = b.surface(sb)?.clone();
    let surf_a = surf_a.clone();

    let mut complement = a.complement.free_product(&b.complement)?;
    let mut glue: Vec<Word> = surf_a
        .pushoffs
        .iter()
        .zip(&surf_b.pushoffs)
        .map(|(x, y)| x.mul(&y.inverse()))
        .collect();
    glue.push(surf_a.meridian.mul(&surf_b.meridian));
    complement = complement.add_relators(&glue)?;

    let mut surfaces: Vec<MarkedSurface> =
        a.surfaces.iter().filter(|s| s.id != sa).cloned().collect();
    for s in b.surfaces.iter().filter(|s| s.id != sb) {
        let mut s = s.clone();
        s.id = fresh(&s.id, |c| surfaces.iter().any(|t| t.id == c) || c == sa);
        surfaces.push(s);
    }
    for s in &mut surfaces {
        if s.dual_of.as_deref() == Some(sa) {
            s.meridian_trivial = true;
        }
    }

    let chars = CharNumbers::spin_symplectic(
        a.chars.e + b.chars.e + 4 * (genus as i64 - 1),
        a.chars.sigma + b.chars.sigma,
        0,
    );
    let mut provenance = a.provenance.clone();
    provenance.extend(b.provenance.iter().cloned());
    provenance.push(Step::Sum {
        left: sa.to_string(),
        right: sb.to_string(),
        genus,
    });
    let mut warnings = a.warnings.clone();
    warnings.extend(b.warnings.iter().cloned());

    let mut m = ManifoldModel {
        name: format!("{} #[{}={}] {}", a.name, sa, sb, b.name),
        chars,
        pi1: Presentation::trivial(),
        complement,
        surfaces,
        provenance,
        warnings,
    };
    m.refill_pi1()?;
    m.chars.b1 = m.pi1.betti_one() as u32;
    Ok(m)
}

/// Gompf's perturbation turning a Lagrangian torus symplectic.
pub fn perturb_to_symplectic(m: &ManifoldModel, t: &str) -> Result<ManifoldModel> {
    if !m.chars.symplectic {
        return Err(Error::MissingCertificate(format!(
            "symplectic structure on {}",
            m.name
        )));
    }
    let s = m.surface(t)?;
    if s.genus != 1 {
        return Err(Error::NotATorus(t.to_string()));
    }
    if s.kind != SurfaceKind::Lagrangian {
        return Err(Error::NotLagrangian(t.to_string()));
    }
    let mut out = m.clone();
    out.surface_mut(t)?.kind = SurfaceKind::Symplectic;
    out.provenance.push(Step::Perturb {
        surface: t.to_string(),
    });
    Ok(out)
}

/// `(x, y)` with `a x + b y = gcd(a, b) >= 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn surgery(
    m: &ManifoldModel,
    t: &str,
    beta: Pushoff,
    p: i64,
    q: i64,
    luttinger: bool,
) -> Result<ManifoldModel> {
    let s = m.surface(t)?;
    if s.genus != 1 {
        return Err(Error::NotATorus(t.to_string()));
    }
    if s.self_intersection != 0 {
        return Err(Error::NonzeroSelfIntersection {
            surface: t.to_string(),
            value: s.self_intersection,
        });
    }
    if s.pushoffs.len() != 2 {
        return Err(Error::MissingCertificate(format!(
            "push-off data for `{t}`"
        )));
    }
    let (d, x, y) = ext_gcd(p, q);
    if d != 1 {
        return Err(Error::InvalidParameter(format!(
            "surgery coefficients p={p}, q={q} are not coprime"
        )));
    }
    let along = s.pushoff(beta)?.clone();
    let sp = along.pow(p);
    let mq = s.meridian.pow(q);
    // new longitude S^a mu^b with p b - q a = 1
    let lambda = if q.abs() == 1 {
        along.clone()
    } else {
        along.pow(-y).mul(&s.meridian.pow(x))
    };

    let mut out = m.clone();
    {
        let core = out.surface_mut(t)?;
        core.meridian = sp.mul(&mq);
        core.pushoffs[beta.index()] = lambda;
        core.meridian_trivial = false;
        core.scheduled = None;
        core.dual_of = None;
        core.origin = Some((sp, mq));
    }
    out.refill_pi1()?;
    let before = m.chars;
    let b1 = out.pi1.betti_one() as u32;
    let essential = b1 < before.b1;
    out.surface_mut(t)?.nullhomologous = essential;
    out.chars = CharNumbers {
        b1,
        symplectic: luttinger && before.symplectic,
        irreducible: luttinger && before.irreducible,
        sw_nontrivial: luttinger && before.sw_nontrivial,
        ..before
    };
    out.provenance.push(Step::Surgery {
        surface: t.to_string(),
        beta,
        p,
        q,
        luttinger,
        essential,
        before,
        after: out.chars,
    });
    Ok(out)
}

/// `q/p` surgery on the torus `t` along the push-off `beta`: the new disk
/// bounds `S_beta^p mu^q`. The core torus replaces `t` under the same id.
/// The symplectic certificate is dropped; see [`luttinger`].
pub fn torus_surgery(
    m: &ManifoldModel,
    t: &str,
    beta: Pushoff,
    p: i64,
    q: i64,
) -> Result<ManifoldModel> {
    surgery(m, t, beta, p, q, false)
}

/// `1/p` surgery in the Lagrangian framing; keeps the symplectic structure.
pub fn luttinger(m: &ManifoldModel, t: &str, beta: Pushoff, p: i64) -> Result<ManifoldModel> {
    if m.surface(t)?.kind != SurfaceKind::Lagrangian {
        return Err(Error::NotLagrangian(t.to_string()));
    }
    if !m.chars.symplectic {
        return Err(Error::MissingCertificate(format!(
            "symplectic structure on {}",
            m.name
        )));
    }
    surgery(m, t, beta, p, 1, true)
}

/// Exotic family obtained by dialing the surgery on a nullhomologous core
/// torus: member `n` replaces its meridian relation `S^p mu^q` by
/// `S^p (mu^q)^n`. Seiberg-Witten distinctness of members is carried as a
/// certificate, not computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMarker {
    pub base: ManifoldModel,
    pub surface: String,
    pub dial: (i64, i64),
    pub sw_distinct: bool,
}

impl FamilyMarker {
    pub fn member(&self, n: i64) -> Result<ManifoldModel> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!(
                "dial n = {n}, need n >= 1"
            )));
        }
        let mut m = self.base.clone();
        let s = m.surface_mut(&self.surface)?;
        let (sp, mq) = s.origin.clone().ok_or_else(|| {
            Error::MissingCertificate(format!("surgery origin of `{}`", self.surface))
        })?;
        s.meridian = sp.mul(&mq.pow(n));
        m.refill_pi1()?;
        m.chars.b1 = m.pi1.betti_one() as u32;
        if n != 1 {
            m.chars.symplectic = false;
            m.name = format!("{} [n={n}]", self.base.name);
            m.provenance.push(Step::FamilyMember {
                surface: self.surface.clone(),
                n,
            });
        }
        Ok(m)
    }

    pub fn members(&self) -> Result<Vec<ManifoldModel>> {
        (self.dial.0..=self.dial.1)
            .map(|n| self.member(n))
            .collect()
    }
}

pub fn family_from_null_torus(
    m: &ManifoldModel,
    t: &str,
    lo: i64,
    hi: i64,
) -> Result<FamilyMarker> {
    let s = m.surface(t)?;
    if !s.nullhomologous {
        return Err(Error::NotNullhomologous(t.to_string()));
    }
    if !m.chars.sw_nontrivial {
        return Err(Error::MissingCertificate(format!(
            "nontrivial Seiberg-Witten invariant of {}",
            m.name
        )));
    }
    if lo < 1 || hi < lo {
        return Err(Error::InvalidParameter(format!("dial range {lo}..={hi}")));
    }
    let fam = FamilyMarker {
        base: m.clone(),
        surface: t.to_string(),
        dial: (lo, hi),
        sw_distinct: true,
    };
    let group = m.abelian();
    for member in fam.members()? {
        if member.abelian() != group || !member.chars.same_topology(&m.chars) {
            return Err(Error::Inadmissible(format!(
                "family member {} changes H_1 or characteristic numbers",
                member.name
            )));
        }
    }
    Ok(fam)
}

/// Family on the first nullhomologous torus whose dial keeps `H_1` fixed.
pub fn family_on_some_null_torus(m: &ManifoldModel, lo: i64, hi: i64) -> Result<FamilyMarker> {
    let mut last = Error::NotNullhomologous(format!("no nullhomologous torus in {}", m.name));
    for s in m.surfaces.iter().filter(|s| s.nullhomologous) {
        match family_from_null_torus(m, &s.id, lo, hi) {
            Ok(f) => return Ok(f),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// A square-zero torus of `x` with simply connected complement, perturbed
/// to symplectic if needed.
pub(crate) fn summing_torus(x: &ManifoldModel) -> Result<(ManifoldModel, String)> {
    if !x.abelian().is_finite() || !simply_connected(&x.pi1) {
        return Err(Error::InvalidParameter(format!(
            "{} is not simply connected",
            x.name
        )));
    }
    let ok = |s: &&MarkedSurface| {
        s.genus == 1
            && s.self_intersection == 0
            && x.complement_of(&s.id).is_ok_and(|c| simply_connected(&c))
    };
    if let Some(s) = x
        .surfaces
        .iter()
        .filter(ok)
        .find(|s| s.kind == SurfaceKind::Symplectic)
    {
        return Ok((x.clone(), s.id.clone()));
    }
    if let Some(s) = x.surfaces.iter().find(ok) {
        return Ok((perturb_to_symplectic(x, &s.id)?, s.id.clone()));
    }
    Err(Error::MissingCertificate(format!(
        "torus with simply connected complement in {}",
        x.name
    )))
}

/// `T^4` summed along `T1` into `x`, then a Luttinger surgery on `T2`:
/// keeps `(c, chi)` and realizes `Z+Z`, `Z+Z_q` or `Z`.
pub fn four_torus_route(x: &ManifoldModel, target: &AbelianType) -> Result<ManifoldModel> {
    let p = match target.tag() {
        AbelianTag::ZZ => None,
        AbelianTag::Z => Some(1),
        AbelianTag::ZCyclic(q) => Some(q as i64),
        _ => return Err(Error::UnsupportedTarget(target.to_string())),
    };
    let (x, t) = summing_torus(x)?;
    let y = symplectic_sum(&four_torus(), "T1", &x, &t)?;
    match p {
        None => Ok(y),
        Some(p) => luttinger(&y, "T2", Pushoff::First, p),
    }
}

/// The partial product block of genus `n` summed into `x` along `T1`, then
/// Luttinger surgeries on `T2` and `T3` chosen by the target. Adds
/// `(8n - 8, n - 1)`.
pub fn product_block_route(
    x: &ManifoldModel,
    n: i64,
    target: &AbelianType,
) -> Result<ManifoldModel> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 1")));
    }
    if n == 1 {
        return match target.tag() {
            AbelianTag::Trivial => Ok(x.clone()),
            _ if target.rank() > 0 => four_torus_route(x, target),
            _ => Err(Error::InvalidParameter(format!(
                "n = 1 does not reach {target}"
            ))),
        };
    }
    let schedule: Vec<(&str, Pushoff, i64)> = match target.tag() {
        AbelianTag::ZZ => Vec::new(),
        AbelianTag::ZCyclic(q) => alloc::vec![("T2", Pushoff::First, -(q as i64))],
        AbelianTag::CyclicCyclic(p, q) => {
            alloc::vec![
                ("T2", Pushoff::First, -(q as i64)),
                ("T3", Pushoff::Second, p as i64)
            ]
        }
        AbelianTag::Cyclic(q) => alloc::vec![
            ("T2", Pushoff::First, -(q as i64)),
            ("T3", Pushoff::Second, 1)
        ],
        AbelianTag::Z => alloc::vec![("T3", Pushoff::Second, 1)],
        AbelianTag::Trivial => alloc::vec![("T3", Pushoff::Second, 1), ("T2", Pushoff::First, -1)],
        AbelianTag::Other => return Err(Error::UnsupportedTarget(target.to_string())),
    };
    let (x, t) = summing_torus(x)?;
    let block = perturb_to_symplectic(&luttinger_block(n)?, "T1")?;
    let mut z = symplectic_sum(&block, "T1", &x, &t)?;
    for (torus, beta, p) in schedule {
        z = luttinger(&z, torus, beta, p)?;
    }
    Ok(z)
}

fn strip_route(x: &ManifoldModel, n: i64, target: &AbelianType) -> Result<ManifoldModel> {
    let min_n = if target.rank() > 0 { 1 } else { 2 };
    if n < min_n {
        return Err(Error::InvalidParameter(format!(
            "group {target} needs n >= {min_n}, got {n}"
        )));
    }
    if target.tag() == AbelianTag::Other {
        return Err(Error::UnsupportedTarget(target.to_string()));
    }
    product_block_route(x, n, target)
}

/// Knot-surgered `E(2s)` through the two routes: `(8n - 8, n + 2s - 1)`.
pub fn elliptic_strip(s: i64, n: i64, target: &AbelianType) -> Result<ManifoldModel> {
    strip_route(&elliptic(s, true)?, n, target)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum HorikawaVariant {
    Plain,
    /// `H(7)` summed with `H(8k'-1)` along tori before the routes.
    Doubled,
}

/// Published coordinates for the doubled variant, which the computation
/// does not reproduce.
pub fn doubled_published(kp: i64, n: i64) -> GeoPoint {
    GeoPoint::new(16 * kp + 8 * n + 88, 8 * kp + n + 53)
}

/// Horikawa input through the two routes. Plain gives
/// `(16k' + 8n - 16, 8k' + n - 2)`; the doubled variant gives
/// `(16k' + 8n - 8, 8k' + n + 5)` and records the published mismatch.
pub fn horikawa_strip(
    kp: i64,
    n: i64,
    target: &AbelianType,
    variant: HorikawaVariant,
) -> Result<ManifoldModel> {
    let x = match variant {
        HorikawaVariant::Plain => horikawa(kp)?,
        HorikawaVariant::Doubled => {
            let h7 = perturb_to_symplectic(&horikawa(1)?, "T1")?;
            let h = perturb_to_symplectic(&horikawa(kp)?, "T1")?;
            symplectic_sum(&h7, "T1", &h, "T1")?
        }
    };
    let mut z = strip_route(&x, n, target)?;
    if variant == HorikawaVariant::Doubled {
        let computed = z.point()?;
        let published = doubled_published(kp, n);
        if computed != published {
            z.warnings.push(Warning::PublishedValueMismatch {
                computed,
                published,
            });
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{park_z, ppx_surface};
    use alloc::vec;

    fn e2() -> ManifoldModel {
        elliptic(1, false).unwrap()
    }

    #[test]
    fn ext_gcd_bezout() {
        for (a, b) in [(3, 5), (-4, 7), (1, 0), (0, -1), (6, 4), (-9, -6)] {
            let (d, x, y) = ext_gcd(a, b);
            assert_eq!(a * x + b * y, d);
            assert!(d >= 0);
        }
    }

    #[test]
    fn elliptic_sums() {
        let s = symplectic_sum(&e2(), "F1", &e2(), "F1").unwrap();
        assert_eq!(s.point().unwrap(), GeoPoint::new(0, 4));
        assert!(s.chars.spin);
        assert_eq!(s.surfaces.len(), 4);
        assert!(s.surface("F2'").is_ok());
    }

    #[test]
    fn horikawa_pair() {
        for kp in 1..4 {
            let a = perturb_to_symplectic(&horikawa(1).unwrap(), "T1").unwrap();
            let b = perturb_to_symplectic(&horikawa(kp).unwrap(), "T1").unwrap();
            let s = symplectic_sum(&a, "T1", &b, "T1").unwrap();
            assert_eq!(s.point().unwrap(), GeoPoint::new(16 * kp, 8 * kp + 6));
        }
    }

    #[test]
    fn sum_preconditions() {
        let h = horikawa(1).unwrap();
        assert_eq!(
            symplectic_sum(&h, "T1", &e2(), "F1"),
            Err(Error::NotSymplecticSurface("T1".into()))
        );
        let y = ppx_surface(2, 2).unwrap();
        assert_eq!(
            symplectic_sum(&y, "Sg1", &e2(), "F1"),
            Err(Error::GenusMismatch { left: 2, right: 1 })
        );
        assert!(matches!(
            symplectic_sum(&e2(), "X", &e2(), "F1"),
            Err(Error::UnknownSurface(_))
        ));
    }

    #[test]
    fn unsupported_amalgamation() {
        let t = four_torus();
        assert_eq!(
            symplectic_sum(&t, "T1", &t, "T1"),
            Err(Error::UnsupportedFundamentalGroup)
        );
    }

    #[test]
    fn four_torus_sum_has_rank_two() {
        let y = symplectic_sum(&four_torus(), "T1", &elliptic(1, true).unwrap(), "F1").unwrap();
        assert_eq!(y.abelian(), AbelianType::zz());
        assert_eq!(y.chars.e, 24);
        let s = tietze_simplify(&y.pi1, 50);
        assert_eq!(s.generators(), &["y", "b"]);
        assert_eq!(s.relators().len(), 1);
        assert!(s.relators()[0]
            .cyclically_equivalent(&Word::commutator(&Word::gen("y"), &Word::gen("b"))));
    }

    #[test]
    fn four_torus_route_targets() {
        let r = four_torus_route(&e2(), &AbelianType::zz()).unwrap();
        assert_eq!(
            (r.point().unwrap(), r.abelian()),
            (GeoPoint::new(0, 2), AbelianType::zz())
        );
        let e4 = elliptic(2, false).unwrap();
        let r = four_torus_route(&e4, &AbelianType::z()).unwrap();
        assert_eq!(
            (r.point().unwrap(), r.abelian()),
            (GeoPoint::new(0, 4), AbelianType::z())
        );
        for q in [2u64, 3, 5, 7] {
            let r = four_torus_route(&e2(), &AbelianType::z_cyclic(q)).unwrap();
            assert_eq!(r.abelian().factors(), &[q, 0]);
            assert!(r.chars.symplectic);
        }
        assert!(matches!(
            four_torus_route(&e2(), &AbelianType::cyclic(3)),
            Err(Error::UnsupportedTarget(_))
        ));
    }

    #[test]
    fn surgery_effects() {
        let y = symplectic_sum(&four_torus(), "T1", &e2(), "F1").unwrap();
        let z = torus_surgery(&y, "T2", Pushoff::First, 3, 1).unwrap();
        assert_eq!((z.chars.e, z.chars.sigma), (y.chars.e, y.chars.sigma));
        assert_eq!(z.chars.b1, 1);
        assert_eq!(z.chars.b2(), y.chars.b2() - 2);
        assert!(!z.chars.symplectic && z.chars.spin);
        assert!(z.surface("T2").unwrap().nullhomologous);
        let Step::Surgery { essential, .. } = z.provenance.last().unwrap() else {
            panic!()
        };
        assert!(essential);
        assert!(torus_surgery(&y, "T2", Pushoff::First, 0, 0).is_err());
        assert!(torus_surgery(&y, "T2", Pushoff::First, 4, 2).is_err());
        let lut = luttinger(&y, "T2", Pushoff::First, 3).unwrap();
        assert!(lut.chars.symplectic);
        assert_eq!(lut.abelian(), z.abelian());
    }

    #[test]
    fn general_coefficient_longitude() {
        let y = symplectic_sum(&four_torus(), "T1", &e2(), "F1").unwrap();
        let z = torus_surgery(&y, "T2", Pushoff::First, 3, 2).unwrap();
        let core = z.surface("T2").unwrap();
        assert_eq!(
            core.meridian,
            Word::power("y", 3)
                .mul(&Word::commutator(&Word::power("x", -1), &Word::gen("b")).pow(2))
        );
        z.check_words().unwrap();
    }

    #[test]
    fn luttinger_requires_lagrangian() {
        let y = symplectic_sum(&e2(), "F1", &e2(), "F1").unwrap();
        assert_eq!(
            luttinger(&y, "F2", Pushoff::First, 1),
            Err(Error::NotLagrangian("F2".into()))
        );
    }

    #[test]
    fn product_route_examples() {
        let t = product_block_route(&e2(), 2, &AbelianType::trivial()).unwrap();
        assert_eq!(t.point().unwrap(), GeoPoint::new(8, 3));
        assert_eq!(t.abelian(), AbelianType::trivial());
        let zz = product_block_route(&e2(), 2, &AbelianType::zz()).unwrap();
        assert_eq!(zz.abelian(), AbelianType::zz());
        let dual = zz.surface("T'").unwrap();
        assert!(dual.meridian_trivial);
        let h = horikawa(1).unwrap();
        let r = product_block_route(&h, 3, &AbelianType::cyclic_cyclic(3, 3)).unwrap();
        assert_eq!(r.point().unwrap(), GeoPoint::new(24, 9));
        assert_eq!(r.abelian().factors(), &[3, 3]);
    }

    #[test]
    fn survivors_generated_by_two_commuting_loops() {
        let zz = product_block_route(&e2(), 2, &AbelianType::zz()).unwrap();
        let s = tietze_simplify(&zz.pi1, 200);
        let mut gens = s.generators().to_vec();
        gens.sort();
        assert_eq!(gens, vec!["a2", "d1"]);
    }

    #[test]
    fn schedule_hits_every_target() {
        let ps = [1u64, 2, 3, 5, 7];
        let mut targets = vec![AbelianType::trivial(), AbelianType::z(), AbelianType::zz()];
        for &q in &ps {
            targets.push(AbelianType::cyclic(q));
            targets.push(AbelianType::z_cyclic(q));
            for &p in &ps {
                targets.push(AbelianType::cyclic_cyclic(p, q));
            }
        }
        for t in &targets {
            let r = product_block_route(&e2(), 2, t).unwrap();
            assert_eq!(&r.abelian(), t);
            assert_eq!(r.point().unwrap(), GeoPoint::new(8, 3));
        }
    }

    #[test]
    fn strip_formulas() {
        let r = elliptic_strip(1, 2, &AbelianType::trivial()).unwrap();
        assert_eq!(r.point().unwrap(), GeoPoint::new(8, 3));
        let r = elliptic_strip(3, 1, &AbelianType::z()).unwrap();
        assert_eq!(r.point().unwrap(), GeoPoint::new(0, 6));
        let r = elliptic_strip(2, 4, &AbelianType::cyclic_cyclic(3, 3)).unwrap();
        assert_eq!(
            (r.point().unwrap(), r.chars.sigma),
            (GeoPoint::new(24, 7), -32)
        );
        assert!(elliptic_strip(1, 1, &AbelianType::trivial()).is_err());

        let plain =
            |kp, n, g: AbelianType| horikawa_strip(kp, n, &g, HorikawaVariant::Plain).unwrap();
        assert_eq!(
            plain(1, 2, AbelianType::trivial()).point().unwrap(),
            GeoPoint::new(16, 8)
        );
        assert_eq!(
            plain(2, 3, AbelianType::z()).point().unwrap(),
            GeoPoint::new(40, 17)
        );
        let d = horikawa_strip(1, 2, &AbelianType::trivial(), HorikawaVariant::Doubled).unwrap();
        assert_eq!(d.point().unwrap(), GeoPoint::new(24, 15));
        assert_eq!(
            d.warnings,
            [Warning::PublishedValueMismatch {
                computed: GeoPoint::new(24, 15),
                published: GeoPoint::new(120, 63)
            }]
        );
    }

    #[test]
    fn families_keep_invariants() {
        let z = product_block_route(&e2(), 2, &AbelianType::z()).unwrap();
        let fam = family_from_null_torus(&z, "T3", 1, 5).unwrap();
        let members = fam.members().unwrap();
        assert_eq!(members[0].pi1, z.pi1);
        assert_eq!(members.iter().filter(|m| m.chars.symplectic).count(), 1);
        for m in &members {
            assert_eq!(m.abelian(), AbelianType::z());
            assert!(m.chars.same_topology(&z.chars));
        }
        let t = product_block_route(&e2(), 2, &AbelianType::trivial()).unwrap();
        let fam = family_from_null_torus(&t, "T2", 1, 5).unwrap();
        assert!(fam
            .members()
            .unwrap()
            .iter()
            .all(|m| m.abelian() == AbelianType::trivial()));
        assert!(matches!(
            family_from_null_torus(&t, "T'", 1, 3),
            Err(Error::NotNullhomologous(_))
        ));
    }

    #[test]
    fn sum_is_symmetric_in_numbers() {
        let a = perturb_to_symplectic(&horikawa(2).unwrap(), "T1").unwrap();
        let b = park_z(3).unwrap();
        let ab = symplectic_sum(&a, "T1", &b, "T").unwrap();
        let ba = symplectic_sum(&b, "T", &a, "T1").unwrap();
        assert_eq!(ab.chars, ba.chars);
    }

    #[test]
    fn higher_genus_sum_adds_defect() {
        let y = ppx_surface(2, 3).unwrap();
        let z = park_z(3).unwrap();
        let x = symplectic_sum(&y, "Sg1", &z, "Sg").unwrap();
        let (py, pz) = (y.point().unwrap(), z.point().unwrap());
        assert_eq!(
            x.point().unwrap(),
            GeoPoint::new(py.c + pz.c + 16, py.chi + pz.chi + 2)
        );
        assert_eq!(x.abelian(), AbelianType::trivial());
    }
}
