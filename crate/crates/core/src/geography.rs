//! Lattice-point realization in the `(c1^2, chi_h)` plane.
//!
//! Negative signature is covered by the elliptic strip `(8n - 8, 2s + n - 1)`.
//! The wedge `8 chi <= c <= 8.76 chi` is searched as `W = m X + V` where `X`
//! is a chain of positive-signature surfaces capped by the cusp block and
//! `V` comes from a short list; torus sums add invariants, so each query is
//! a linear Diophantine problem in the `V` parameters.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::blocks::{park_z, park_z_pair, ppx_surface, BlockSpec, ManifoldModel, PPX_C, PPX_CHI};
use crate::error::{Error, Result};
use crate::grp::{AbelianTag, AbelianType};
use crate::invariant::{spin_admissible, GeoPoint};
use crate::recipe::Recipe;
use crate::surgery::symplectic_sum;

pub type Rational = Ratio<i128>;

/// Upper slope of the positive-signature wedge, `8.76 = 219/25`.
pub fn wedge_slope() -> Rational {
    Ratio::new(219, 25)
}

/// Slope of the positive-signature surface, `60068/6857`.
pub fn ppx_ratio() -> Rational {
    Ratio::new(PPX_C as i128, PPX_CHI as i128)
}

/// `X = Y #_{Sigma_g} ... #_{Sigma_g} Y #_{Sigma_g} Z` with `k` copies of the
/// positive-signature surface at scale `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CompositionParams {
    pub k: i64,
    pub x: i64,
    pub g: i64,
}

impl CompositionParams {
    fn validate(&self) -> Result<()> {
        if self.k < 1 || self.x < 1 || self.g < 2 {
            return Err(Error::InvalidParameter(format!(
                "composition needs k >= 1, x >= 1, g >= 2; got k={}, x={}, g={}",
                self.k, self.x, self.g
            )));
        }
        Ok(())
    }

    /// Closed-form `(c, chi)` of the chain.
    pub fn point(&self) -> Result<GeoPoint> {
        self.validate()?;
        let (k, x, g) = (self.k, self.x, self.g);
        let z = park_z_pair(g);
        Ok(GeoPoint::new(
            k * PPX_C * x * x + z.c + 8 * k * (g - 1),
            k * PPX_CHI * x * x + z.chi + k * (g - 1),
        ))
    }

    /// Spin-admissible with positive signature and slope above `219/25`.
    pub fn usable(&self) -> bool {
        match self.point() {
            Ok(p) => p.sigma() > 0 && spin_admissible(p).admissible && slope(p) > wedge_slope(),
            Err(_) => false,
        }
    }
}

impl fmt::Display for CompositionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={},k={},g={}", self.x, self.k, self.g)
    }
}

fn slope(p: GeoPoint) -> Rational {
    Ratio::new(p.c as i128, p.chi as i128)
}

/// Builds the chain by actual sums: each new surface copy is summed along
/// its first genus-`g` curve into the free curve of the chain so far.
pub fn compose_park_x(params: &CompositionParams) -> Result<ManifoldModel> {
    params.validate()?;
    let y = ppx_surface(params.x, params.g)?;
    let mut acc = park_z(params.g)?;
    for i in 0..params.k {
        let free = if i == 0 { "Sg" } else { "Sg2" };
        acc = symplectic_sum(&y, "Sg1", &acc, free)?;
    }
    Ok(acc)
}

/// Bounds for the smallest-composition search, scanned `x`, then `k`, then `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CompositionBounds {
    pub x_max: i64,
    pub k_max: i64,
    pub g_max: i64,
}

impl Default for CompositionBounds {
    fn default() -> Self {
        CompositionBounds {
            x_max: 4,
            k_max: 64,
            g_max: 4,
        }
    }
}

pub fn smallest_composition(b: &CompositionBounds) -> Option<CompositionParams> {
    for x in 1..=b.x_max {
        for k in 1..=b.k_max {
            for g in 2..=b.g_max {
                let p = CompositionParams { k, x, g };
                if p.usable() {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// `f(chi) = (c/chi_X) (chi - c/2 - 6) + c` through the anchor `X`.
pub fn line_f(chi: i64, anchor: GeoPoint) -> Result<Rational> {
    if anchor.chi == 0 {
        return Err(Error::InvalidParameter("anchor has chi = 0".into()));
    }
    let c = anchor.c as i128;
    let s = slope(anchor);
    Ok(
        s * (Rational::from_integer(chi as i128) - Ratio::new(c, 2) - Rational::from_integer(6))
            + Rational::from_integer(c),
    )
}

/// The simply connected `V` blocks closing off `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum VChoice {
    /// `H(8k'-1) #_T E(2s)`.
    HorikawaElliptic { kp: i64, s: i64 },
    /// `H(7) #_T H(8k'-1) #_T E(2s)`.
    DoubleHorikawaElliptic { kp: i64, s: i64 },
    /// Simply connected elliptic strip output.
    Strip { s: i64, n: i64 },
}

impl VChoice {
    pub fn point(&self) -> GeoPoint {
        match *self {
            VChoice::HorikawaElliptic { kp, s } => GeoPoint::new(16 * kp - 8, 8 * kp - 1 + 2 * s),
            VChoice::DoubleHorikawaElliptic { kp, s } => GeoPoint::new(16 * kp, 8 * kp + 6 + 2 * s),
            VChoice::Strip { s, n } => GeoPoint::new(8 * n - 8, n + 2 * s - 1),
        }
    }

    pub fn recipe(&self) -> Recipe {
        let e = |s| Recipe::block(BlockSpec::Elliptic { s, knotted: false });
        let h = |kp| Recipe::block(BlockSpec::Horikawa { kp });
        match *self {
            VChoice::HorikawaElliptic { kp, s } => Recipe::torus_sum(h(kp), e(s)),
            VChoice::DoubleHorikawaElliptic { kp, s } => {
                Recipe::torus_sum(Recipe::torus_sum(h(1), h(kp)), e(s))
            }
            VChoice::Strip { s, n } => Recipe::EllipticStrip {
                s,
                n,
                target: AbelianType::trivial(),
            },
        }
    }

    /// All choices with exactly the point `p` and strip parameter `n <= n_max`,
    /// in the order horikawa-elliptic, double, strip.
    pub fn solve(p: GeoPoint, n_max: i64) -> Vec<VChoice> {
        let mut out = Vec::new();
        let (c, chi) = (p.c, p.chi);
        if (c + 8) % 16 == 0 {
            let kp = (c + 8) / 16;
            let rest = chi - 8 * kp + 1;
            if kp >= 1 && rest >= 2 && rest % 2 == 0 {
                out.push(VChoice::HorikawaElliptic { kp, s: rest / 2 });
            }
        }
        if c % 16 == 0 {
            let kp = c / 16;
            let rest = chi - 8 * kp - 6;
            if kp >= 1 && rest >= 2 && rest % 2 == 0 {
                out.push(VChoice::DoubleHorikawaElliptic { kp, s: rest / 2 });
            }
        }
        if c % 8 == 0 {
            let n = c / 8 + 1;
            let rest = chi - n + 1;
            if (2..=n_max).contains(&n) && rest >= 2 && rest % 2 == 0 {
                out.push(VChoice::Strip { s: rest / 2, n });
            }
        }
        out
    }
}

impl fmt::Display for VChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VChoice::HorikawaElliptic { kp, s } => write!(f, "he(kp={kp},s={s})"),
            VChoice::DoubleHorikawaElliptic { kp, s } => write!(f, "hhe(kp={kp},s={s})"),
            VChoice::Strip { s, n } => write!(f, "strip(s={s},n={n})"),
        }
    }
}

/// One of the six groups handled by the routes.
pub fn supported_group(group: &AbelianType) -> Result<()> {
    match group.tag() {
        AbelianTag::Other => Err(Error::UnsupportedTarget(format!("{group}"))),
        _ => Ok(()),
    }
}

/// Smallest `n` the strip allows for the group.
pub fn strip_min_n(group: &AbelianType) -> i64 {
    if group.rank() > 0 {
        1
    } else {
        2
    }
}

/// `(dc, dchi)` added by the group tail: nothing for the trivial group and
/// the `T^4` route, one genus-2 product block for finite nontrivial groups.
pub fn tail_delta(group: &AbelianType) -> GeoPoint {
    if group.rank() == 0 && group.tag() != AbelianTag::Trivial {
        GeoPoint::new(8, 1)
    } else {
        GeoPoint::new(0, 0)
    }
}

fn with_tail(w: Recipe, group: &AbelianType) -> Recipe {
    match group.tag() {
        AbelianTag::Trivial => w,
        _ if group.rank() > 0 => Recipe::FourTorusRoute {
            base: Box::new(w),
            target: group.clone(),
        },
        _ => Recipe::ProductRoute {
            base: Box::new(w),
            n: 2,
            target: group.clone(),
        },
    }
}

/// `W = m X + V` followed by the group tail.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WedgeParams {
    pub park: CompositionParams,
    pub m: i64,
    pub v: VChoice,
    pub group: AbelianType,
}

impl WedgeParams {
    pub fn point(&self) -> Result<GeoPoint> {
        let x = self.park.point()?;
        let v = self.v.point();
        let t = tail_delta(&self.group);
        Ok(GeoPoint::new(
            self.m * x.c + v.c + t.c,
            self.m * x.chi + v.chi + t.chi,
        ))
    }

    pub fn recipe(&self) -> Recipe {
        let mut w = self.v.recipe();
        for _ in 0..self.m {
            w = Recipe::torus_sum(Recipe::ParkX(self.park), w);
        }
        with_tail(w, &self.group)
    }

    pub fn id(&self) -> String {
        format!("wedge:{};m={};v={}", self.park, self.m, self.v)
    }
}

/// A realization claim and whether evaluating its recipe confirmed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub point: GeoPoint,
    pub group: AbelianType,
    pub recipe: Recipe,
    pub recipe_id: String,
    pub verified: bool,
}

impl RealizationCertificate {
    /// Evaluates the recipe and records whether it hits the point and group
    /// with the spin certificate.
    pub fn certify(point: GeoPoint, group: AbelianType, recipe: Recipe, recipe_id: String) -> Self {
        Self::certify_keeping(point, group, recipe, recipe_id).0
    }

    /// As `certify`, also returning the evaluated model.
    pub fn certify_keeping(
        point: GeoPoint,
        group: AbelianType,
        recipe: Recipe,
        recipe_id: String,
    ) -> (Self, Option<ManifoldModel>) {
        let mut cert = RealizationCertificate {
            point,
            group,
            recipe,
            recipe_id,
            verified: false,
        };
        let model = cert.recipe.evaluate().ok();
        cert.verified = model.as_ref().is_some_and(|m| cert.matches(m));
        (cert, model)
    }

    fn matches(&self, m: &ManifoldModel) -> bool {
        m.point().ok() == Some(self.point) && m.abelian() == self.group && m.chars.spin
    }

    /// Re-evaluates the recipe from scratch.
    pub fn check(&self) -> bool {
        self.recipe.evaluate().is_ok_and(|m| self.matches(&m))
    }
}

pub fn strip_id(s: i64, n: i64) -> String {
    format!("strip:s={s},n={n}")
}

/// Certificates for `(8n - 8, 2s + n - 1)` over the grid, `n` starting at
/// the group's lower bound.
pub fn negative_strip(
    group: &AbelianType,
    n_max: i64,
    s_max: i64,
) -> Result<Vec<RealizationCertificate>> {
    Ok(negative_strip_models(group, n_max, s_max)?
        .into_iter()
        .map(|(c, _)| c)
        .collect())
}

/// As `negative_strip`, keeping each evaluated model.
pub fn negative_strip_models(
    group: &AbelianType,
    n_max: i64,
    s_max: i64,
) -> Result<Vec<(RealizationCertificate, Option<ManifoldModel>)>> {
    supported_group(group)?;
    let mut out = Vec::new();
    for n in strip_min_n(group)..=n_max {
        for s in 1..=s_max {
            let point = GeoPoint::new(8 * n - 8, 2 * s + n - 1);
            let recipe = Recipe::EllipticStrip {
                s,
                n,
                target: group.clone(),
            };
            out.push(RealizationCertificate::certify_keeping(
                point,
                group.clone(),
                recipe,
                strip_id(s, n),
            ));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchBounds {
    pub compositions: Vec<CompositionParams>,
    pub m_max: i64,
    /// Largest product-block genus tried for a strip `V`.
    pub strip_n_max: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            compositions: smallest_composition(&CompositionBounds::default())
                .into_iter()
                .collect(),
            m_max: 8,
            strip_n_max: 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Found(RealizationCertificate, WedgeParams),
    NotFound { searched: String },
}

/// First `W` (by composition, then `m`, then `V` kind) landing exactly on
/// the point, evaluated end to end.
pub fn solve_positive_region(
    c: i64,
    chi: i64,
    group: &AbelianType,
    bounds: &SearchBounds,
) -> Result<Solve> {
    let point = GeoPoint::new(c, chi);
    let adm = spin_admissible(point);
    if !adm.admissible {
        return Err(Error::Inadmissible(adm.reason));
    }
    supported_group(group)?;
    let tail = tail_delta(group);
    for park in &bounds.compositions {
        let x = park.point()?;
        for m in 1..=bounds.m_max {
            let rest = GeoPoint::new(c - tail.c - m * x.c, chi - tail.chi - m * x.chi);
            if rest.c < 0 || rest.chi < 0 {
                break;
            }
            if let Some(v) = VChoice::solve(rest, bounds.strip_n_max).into_iter().next() {
                let params = WedgeParams {
                    park: *park,
                    m,
                    v,
                    group: group.clone(),
                };
                let cert = RealizationCertificate::certify(
                    point,
                    group.clone(),
                    params.recipe(),
                    params.id(),
                );
                return Ok(Solve::Found(cert, params));
            }
        }
    }
    Ok(Solve::NotFound {
        searched: format!(
            "{} compositions, m <= {}, strip n <= {}",
            bounds.compositions.len(),
            bounds.m_max,
            bounds.strip_n_max
        ),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    NegativeStrip,
    WedgeSearch,
    Exception,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::NegativeStrip => "strip",
            Status::WedgeSearch => "wedge",
            Status::Exception => "exception",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RegionBounds {
    pub c_max: i64,
    pub chi_max: i64,
    /// Evaluate every recipe instead of trusting the closed forms.
    pub verify: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionRow {
    pub point: GeoPoint,
    pub status: Status,
    pub recipe_id: String,
    pub verified: Option<bool>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RegionReport {
    pub rows: Vec<RegionRow>,
}

impl RegionReport {
    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn exceptions(&self) -> impl Iterator<Item = &RegionRow> {
        self.rows.iter().filter(|r| r.status == Status::Exception)
    }
}

/// True when `0 <= c <= (219/25) chi`.
pub fn in_region(p: GeoPoint) -> bool {
    p.c >= 0
        && p.chi >= 1
        && Rational::from_integer(p.c as i128)
            <= wedge_slope() * Rational::from_integer(p.chi as i128)
}

/// Classifies every spin-admissible point with `0 <= c <= c_max`,
/// `1 <= chi <= chi_max` inside the region. Rows are ordered by `chi`,
/// then `c`.
pub fn region_report(
    b: &RegionBounds,
    group: &AbelianType,
    search: &SearchBounds,
) -> Result<RegionReport> {
    supported_group(group)?;
    let mut rows = Vec::new();
    for chi in 1..=b.chi_max {
        for c in (0..=b.c_max).step_by(8) {
            let p = GeoPoint::new(c, chi);
            if !in_region(p) || !spin_admissible(p).admissible {
                continue;
            }
            let row = if p.sigma() < 0 {
                let n = c / 8 + 1;
                let s = -p.sigma() / 16;
                if n >= strip_min_n(group) {
                    let verified = b.verify.then(|| {
                        let r = Recipe::EllipticStrip {
                            s,
                            n,
                            target: group.clone(),
                        };
                        RealizationCertificate::certify(p, group.clone(), r, strip_id(s, n))
                            .verified
                    });
                    RegionRow {
                        point: p,
                        status: Status::NegativeStrip,
                        recipe_id: strip_id(s, n),
                        verified,
                    }
                } else {
                    RegionRow {
                        point: p,
                        status: Status::Exception,
                        recipe_id: String::new(),
                        verified: None,
                    }
                }
            } else {
                match find_wedge(p, group, search)? {
                    Some(params) => {
                        let verified = b.verify.then(|| {
                            RealizationCertificate::certify(
                                p,
                                group.clone(),
                                params.recipe(),
                                params.id(),
                            )
                            .verified
                        });
                        RegionRow {
                            point: p,
                            status: Status::WedgeSearch,
                            recipe_id: params.id(),
                            verified,
                        }
                    }
                    None => RegionRow {
                        point: p,
                        status: Status::Exception,
                        recipe_id: String::new(),
                        verified: None,
                    },
                }
            };
            rows.push(row);
        }
    }
    Ok(RegionReport { rows })
}

/// Closed-form part of the wedge search, without evaluation.
fn find_wedge(
    p: GeoPoint,
    group: &AbelianType,
    search: &SearchBounds,
) -> Result<Option<WedgeParams>> {
    let tail = tail_delta(group);
    for park in &search.compositions {
        let x = park.point()?;
        for m in 1..=search.m_max {
            let rest = GeoPoint::new(p.c - tail.c - m * x.c, p.chi - tail.chi - m * x.chi);
            if rest.c < 0 || rest.chi < 0 {
                break;
            }
            if let Some(v) = VChoice::solve(rest, search.strip_n_max).into_iter().next() {
                return Ok(Some(WedgeParams {
                    park: *park,
                    m,
                    v,
                    group: group.clone(),
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert!(wedge_slope() < ppx_ratio());
        assert!(ppx_ratio() < Ratio::new(87601, 10000));
    }

    #[test]
    fn composition_closed_form() {
        let p = CompositionParams { k: 1, x: 1, g: 2 };
        assert_eq!(p.point().unwrap(), GeoPoint::new(60084, 6865));
        assert!(CompositionParams { k: 0, x: 1, g: 2 }.point().is_err());
        for (k, x, g) in [(1, 1, 2), (3, 2, 3), (5, 2, 2)] {
            let params = CompositionParams { k, x, g };
            assert_eq!(
                compose_park_x(&params).unwrap().point().unwrap(),
                params.point().unwrap()
            );
        }
    }

    #[test]
    fn ratio_tends_to_surface_slope() {
        let mut prev = Rational::from_integer(0);
        for k in [1, 2, 4, 8, 16, 64, 256] {
            let r = slope(CompositionParams { k, x: 2, g: 2 }.point().unwrap());
            assert!(r > prev);
            assert!(r < ppx_ratio());
            prev = r;
        }
    }

    #[test]
    fn smallest_usable_composition() {
        let p = smallest_composition(&CompositionBounds::default()).unwrap();
        assert_eq!(p, CompositionParams { k: 28, x: 2, g: 2 });
        let x = p.point().unwrap();
        assert_eq!(x, GeoPoint::new(6727848, 768019));
        assert_eq!(x.sigma(), 16 * 36481);
        let step = line_f(11, x).unwrap() - line_f(10, x).unwrap();
        assert_eq!(step, slope(x));
        assert!(step > wedge_slope());
    }

    #[test]
    fn line_passes_through_anchor() {
        let x = GeoPoint::new(6727848, 768019);
        assert_eq!(
            line_f(x.c / 2 + 6, x).unwrap(),
            Rational::from_integer(x.c as i128)
        );
        assert!(!line_f(8, GeoPoint::new(8, 3)).unwrap().is_integer());
        assert!(line_f(1, GeoPoint::new(8, 0)).is_err());
    }

    #[test]
    fn strip_grid() {
        let certs = negative_strip(&AbelianType::trivial(), 3, 3).unwrap();
        let pts: Vec<(i64, i64)> = certs.iter().map(|c| (c.point.c, c.point.chi)).collect();
        assert_eq!(pts, [(8, 3), (8, 5), (8, 7), (16, 4), (16, 6), (16, 8)]);
        assert!(certs.iter().all(|c| c.verified));
        let z = negative_strip(&AbelianType::z(), 1, 2).unwrap();
        assert_eq!(z[0].point, GeoPoint::new(0, 2));
        assert!(z.iter().all(|c| c.verified && c.point.sigma() % 16 == 0));
        assert!(negative_strip(&AbelianType::from_orders(&[0, 0, 0]), 2, 2).is_err());
    }

    #[test]
    fn v_solutions_roundtrip() {
        for v in [
            VChoice::HorikawaElliptic { kp: 3, s: 2 },
            VChoice::DoubleHorikawaElliptic { kp: 2, s: 5 },
            VChoice::Strip { s: 4, n: 6 },
        ] {
            assert!(VChoice::solve(v.point(), 60).contains(&v));
            assert_eq!(v.recipe().evaluate().unwrap().point().unwrap(), v.point());
        }
    }

    #[test]
    fn solver_rejects_inadmissible() {
        let b = SearchBounds::default();
        assert!(matches!(
            solve_positive_region(4, 1, &AbelianType::trivial(), &b),
            Err(Error::Inadmissible(_))
        ));
    }

    #[test]
    fn solver_recovers_forward_composition() {
        let b = SearchBounds::default();
        let w = WedgeParams {
            park: b.compositions[0],
            m: 2,
            v: VChoice::HorikawaElliptic { kp: 1, s: 1 },
            group: AbelianType::trivial(),
        };
        let p = w.point().unwrap();
        assert_eq!(w.recipe().evaluate().unwrap().point().unwrap(), p);
        let Solve::Found(cert, _) = solve_positive_region(p.c, p.chi, &w.group, &b).unwrap() else {
            panic!()
        };
        assert!(cert.verified);
        assert!(cert.check());
    }

    #[test]
    fn zero_signature_wedge_point() {
        let b = SearchBounds::default();
        let x = b.compositions[0].point().unwrap();
        let w = WedgeParams {
            park: b.compositions[0],
            m: 1,
            v: VChoice::Strip {
                s: x.sigma() / 16,
                n: 2,
            },
            group: AbelianType::trivial(),
        };
        let p = w.point().unwrap();
        assert_eq!(p.sigma(), 0);
        let Solve::Found(cert, _) = solve_positive_region(p.c, p.chi, &w.group, &b).unwrap() else {
            panic!()
        };
        assert!(cert.verified);
    }

    #[test]
    fn strip_region_fully_realized() {
        let rb = RegionBounds {
            c_max: 72,
            chi_max: 40,
            verify: false,
        };
        let r = region_report(&rb, &AbelianType::trivial(), &SearchBounds::default()).unwrap();
        for row in r
            .rows
            .iter()
            .filter(|row| row.point.sigma() < 0 && row.point.c >= 8)
        {
            assert_eq!(row.status, Status::NegativeStrip);
        }
        assert!(r.rows.iter().all(|row| row.point.sigma() % 16 == 0));
        assert!(r.count(Status::Exception) > 0);
    }
}
