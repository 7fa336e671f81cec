//! Desk-scale verification suites, shared by `verify` and the acceptance run.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spingeo_core::blocks::{akhmedov_park_y, elliptic, park_z, park_z_stated, Step, Warning};
use spingeo_core::geography::{
    compose_park_x, line_f, negative_strip_models, ppx_ratio, smallest_composition,
    solve_positive_region, wedge_slope, CompositionParams, Rational, Solve, VChoice, WedgeParams,
};
use spingeo_core::grp::{smith_normal_form, AbelianType, IntMatrix};
use spingeo_core::invariant::{check_consistency, spin_admissible, GeoPoint, Violation};
use spingeo_core::recipe::Recipe;
use spingeo_core::surgery::{
    doubled_published, elliptic_strip, family_on_some_null_torus, four_torus_route, horikawa_strip,
    product_block_route, HorikawaVariant,
};
use spingeo_core::topo::{
    botany_family_report, classification_criterion, prototype_name, Criterion, Family, ZeroTable,
};

use crate::config::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Warn => "WARN",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Case {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub title: String,
    pub cases: Vec<Case>,
}

impl Report {
    fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            cases: Vec::new(),
        }
    }

    fn case(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.cases.push(Case {
            name: name.into(),
            verdict,
            detail: detail.into(),
        });
    }

    fn warn(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.cases.push(Case {
            name: name.into(),
            verdict: Verdict::Warn,
            detail: detail.into(),
        });
    }

    /// Warnings do not fail a report.
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.cases.extend(other.cases);
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.cases {
            write!(f, "  [{}] {}", c.verdict, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Collects up to a few failure descriptions for a summary case.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn into_case(self, report: &mut Report, name: &str) {
        let detail = if self.failures.is_empty() {
            format!("{} checked", self.checked)
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            format!(
                "{} of {} failed; {}",
                self.failures.len(),
                self.checked,
                shown.join("; ")
            )
        };
        report.case(name, self.failures.is_empty() && self.checked > 0, detail);
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| *x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// gcd of all `k x k` minors by brute force.
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    let mut g = 0;
    for rows in subsets(m.len(), k) {
        for cols in subsets(m[0].len(), k) {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect())
                .collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

fn small(x: &impl fmt::Display) -> i128 {
    x.to_string().parse().expect("entry fits in i128")
}

fn snf_sound(m: &[Vec<i64>]) -> Result<(), String> {
    let a = IntMatrix::from_rows(m);
    let s = smith_normal_form(&a);
    if s.u.mul(&a).mul(&s.v) != s.d {
        return Err("U M V != D".into());
    }
    if !s.d.is_diagonal() {
        return Err("D not diagonal".into());
    }
    if small(&s.u.determinant()).abs() != 1 || small(&s.v.determinant()).abs() != 1 {
        return Err("transform not unimodular".into());
    }
    let diag: Vec<i128> = s.diagonal().iter().map(small).collect();
    let mut prod = 1;
    for (i, d) in diag.iter().enumerate() {
        if *d < 0 {
            return Err(format!("negative invariant factor {d}"));
        }
        if i + 1 < diag.len()
            && (if *d == 0 {
                diag[i + 1] != 0
            } else {
                diag[i + 1] % d != 0
            })
        {
            return Err(format!("{d} does not divide {}", diag[i + 1]));
        }
        prod *= d;
        let oracle = minor_gcd(m, i + 1);
        if prod != oracle {
            return Err(format!(
                "product of first {} factors {prod} != minor gcd {oracle}",
                i + 1
            ));
        }
    }
    Ok(())
}

pub fn snf_soundness(cfg: &Config) -> Report {
    let mut r = Report::new("smith normal form soundness against the minor oracle");
    let mut rng = StdRng::seed_from_u64(cfg.snf.seed);
    let mut t = Tally::default();
    let e = cfg.snf.max_entry;
    for _ in 0..cfg.snf.samples {
        let rows = rng.gen_range(1..=cfg.snf.max_dim);
        let cols = rng.gen_range(1..=cfg.snf.max_dim);
        let m: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-e..=e)).collect())
            .collect();
        let res = snf_sound(&m);
        t.check(res.is_ok(), || format!("{m:?}: {}", res.unwrap_err()));
    }
    t.into_case(
        &mut r,
        &format!(
            "{} random matrices up to {}x{}",
            cfg.snf.samples, cfg.snf.max_dim, cfg.snf.max_dim
        ),
    );
    r
}

pub fn product_template(cfg: &Config) -> Report {
    let mut r = Report::new("genus-n product template: trivial H1, e = 4n-4, sigma = 0");
    for n in cfg.product_n.0..=cfg.product_n.1 {
        match akhmedov_park_y(n) {
            Ok(y) => {
                let ok = y.abelian() == AbelianType::trivial()
                    && (y.chars.e, y.chars.sigma) == (4 * n - 4, 0)
                    && y.point().ok() == Some(GeoPoint::new(8 * n - 8, n - 1));
                r.case(
                    format!("n = {n}"),
                    ok,
                    format!(
                        "H1 {}, e {}, sigma {}",
                        y.abelian(),
                        y.chars.e,
                        y.chars.sigma
                    ),
                );
            }
            Err(e) => r.case(format!("n = {n}"), false, e.to_string()),
        }
    }
    r
}

fn target_list(cfg: &Config) -> Vec<AbelianType> {
    let mut out = vec![AbelianType::trivial(), AbelianType::z(), AbelianType::zz()];
    for &q in &cfg.targets.q_values {
        out.push(AbelianType::cyclic(q));
        out.push(AbelianType::z_cyclic(q));
    }
    for &p in &cfg.targets.p_values {
        for &q in &cfg.targets.q_values {
            out.push(AbelianType::cyclic_cyclic(p, q));
        }
    }
    out.dedup();
    out
}

pub fn four_torus_targets(cfg: &Config) -> Report {
    let mut r = Report::new("T^4 route: target group, (c, chi) unchanged");
    let x = match elliptic(1, true) {
        Ok(x) => x,
        Err(e) => {
            r.case("base", false, e.to_string());
            return r;
        }
    };
    let base = x.point().ok();
    let mut t = Tally::default();
    for target in target_list(cfg).into_iter().filter(|g| g.rank() > 0) {
        let res = four_torus_route(&x, &target);
        t.check(
            matches!(&res, Ok(m) if m.abelian() == target && m.point().ok() == base),
            || {
                format!(
                    "{target}: {:?}",
                    res.as_ref()
                        .map(|m| (m.abelian().to_string(), m.point().ok()))
                )
            },
        );
    }
    t.into_case(&mut r, "targets containing Z");
    r
}

pub fn product_targets(cfg: &Config) -> Report {
    let mut r = Report::new("product-block route: target group, (c, chi) + (8n-8, n-1)");
    let x = match elliptic(1, true) {
        Ok(x) => x,
        Err(e) => {
            r.case("base", false, e.to_string());
            return r;
        }
    };
    let base = x.point().unwrap_or(GeoPoint::new(0, 0));
    for &n in &cfg.targets.product_genera {
        let mut t = Tally::default();
        for target in target_list(cfg) {
            let res = product_block_route(&x, n, &target);
            let want = GeoPoint::new(base.c + 8 * n - 8, base.chi + n - 1);
            t.check(
                matches!(&res, Ok(m) if m.abelian() == target && m.point().ok() == Some(want)),
                || {
                    format!(
                        "{target}: {:?}",
                        res.as_ref()
                            .map(|m| (m.abelian().to_string(), m.point().ok()))
                    )
                },
            );
        }
        t.into_case(&mut r, &format!("n = {n}"));
    }
    r
}

/// Evaluates the strip grid; with `prototypes` every certificate must also
/// round-trip through the prototype table of its group, and groups without
/// a table must have no applicable classification result.
pub fn strip_grid(cfg: &Config, prototypes: bool) -> Report {
    let mut r = Report::new(format!(
        "negative-signature strip (8n-8, 2s+n-1), n, s <= {}, {}",
        cfg.strip.n_max, cfg.strip.s_max
    ));
    for group in &cfg.strip.groups {
        let certs = match negative_strip_models(group, cfg.strip.n_max, cfg.strip.s_max) {
            Ok(c) => c,
            Err(e) => {
                r.case(group.to_string(), false, e.to_string());
                continue;
            }
        };
        let mut t = Tally::default();
        let mut named = 0;
        for (cert, model) in &certs {
            let Recipe::EllipticStrip { s, n, .. } = cert.recipe else {
                unreachable!()
            };
            let p = cert.point;
            let base_ok = cert.verified
                && p == GeoPoint::new(8 * n - 8, 2 * s + n - 1)
                && p.sigma() == -16 * s
                && spin_admissible(p).admissible;
            if !prototypes {
                t.check(base_ok, || format!("{} unverified", cert.recipe_id));
                continue;
            }
            let proto_ok = match model {
                Some(m) => match prototype_name(&m.chars, group, Family::EllipticStrip { s, n }) {
                    Ok(name) => {
                        named += 1;
                        name.invariants() == (m.chars.e, m.chars.sigma)
                    }
                    Err(_) => classification_criterion(group).criterion == Criterion::Unsupported,
                },
                None => false,
            };
            t.check(base_ok && proto_ok, || {
                format!(
                    "{} (verified {}, prototype {proto_ok})",
                    cert.recipe_id, cert.verified
                )
            });
        }
        let label = if prototypes {
            format!("{group} ({named} named)")
        } else {
            group.to_string()
        };
        t.into_case(&mut r, &label);
    }
    r
}

pub fn horikawa_points(cfg: &Config) -> Report {
    let mut r = Report::new("Horikawa strips");
    let mut plain = Tally::default();
    let mut doubled = Tally::default();
    let mut warned = 0;
    let mut example = String::new();
    for kp in 1..=cfg.horikawa.kp_max {
        for n in 1..=cfg.horikawa.n_max {
            let group = if n == 1 {
                AbelianType::z()
            } else {
                AbelianType::trivial()
            };
            let want = GeoPoint::new(16 * kp + 8 * n - 16, 8 * kp + n - 2);
            let m = horikawa_strip(kp, n, &group, HorikawaVariant::Plain);
            plain.check(
                matches!(&m, Ok(m) if m.point().ok() == Some(want) && m.abelian() == group),
                || format!("kp={kp}, n={n}"),
            );
            let computed = GeoPoint::new(16 * kp + 8 * n - 8, 8 * kp + n + 5);
            let published = doubled_published(kp, n);
            let d = horikawa_strip(kp, n, &group, HorikawaVariant::Doubled);
            let has_warning = matches!(&d, Ok(d) if d.warnings.contains(&Warning::PublishedValueMismatch { computed, published }));
            doubled.check(
                matches!(&d, Ok(d) if d.point().ok() == Some(computed)) && has_warning,
                || format!("kp={kp}, n={n}: warning present {has_warning}"),
            );
            if has_warning {
                warned += 1;
                if example.is_empty() {
                    example = format!("kp={kp}, n={n}: computed {computed}, published {published}");
                }
            }
        }
    }
    plain.into_case(&mut r, "first family (16k'+8n-16, 8k'+n-2)");
    doubled.into_case(
        &mut r,
        "second family computed (16k'+8n-8, 8k'+n+5) with mismatch warning",
    );
    if warned > 0 {
        r.warn(
            "second family disagrees with the published (16k'+8n+88, 8k'+n+53)",
            format!("{warned} points, e.g. {example}"),
        );
    }
    r
}

pub fn ratio_and_line(cfg: &Config) -> Report {
    let mut r = Report::new("surface slope and composition line");
    let upper = Rational::new(87601, 10000);
    r.case(
        "219/25 < 60068/6857 < 8.7601",
        wedge_slope() < ppx_ratio() && ppx_ratio() < upper,
        format!("60068/6857 = {}", ppx_ratio()),
    );
    let Some(params) = smallest_composition(&cfg.composition) else {
        r.case("smallest composition", false, "none within bounds");
        return r;
    };
    let closed = params.point().expect("found params are valid");
    r.case(
        "smallest composition",
        true,
        format!("{params}, (c, chi) = {closed}, sigma = {}", closed.sigma()),
    );
    match compose_park_x(&params) {
        Ok(x) => {
            let p = x.point().ok();
            r.case(
                "composed by sums matches closed form",
                p == Some(closed),
                format!("{p:?}"),
            );
            r.case(
                "simply connected",
                x.abelian() == AbelianType::trivial(),
                x.abelian().to_string(),
            );
        }
        Err(e) => r.case("composed by sums", false, e.to_string()),
    }
    let slope = line_f(closed.chi + 1, closed).and_then(|a| Ok(a - line_f(closed.chi, closed)?));
    r.case(
        "slope of f exceeds 219/25",
        matches!(slope, Ok(s) if s > wedge_slope()),
        format!("{slope:?}"),
    );
    let mut t = Tally::default();
    let b = &cfg.composition;
    for x in 1..=b.x_max {
        for k in 1..=b.k_max {
            for g in 2..=b.g_max {
                let p = CompositionParams { k, x, g }.point().expect("valid");
                if p.sigma() > 0 {
                    let ratio = Rational::new(p.c as i128, p.chi as i128);
                    t.check(
                        ratio > Rational::from_integer(8)
                            && ratio < ppx_ratio() + Rational::new(1, 1000),
                        || format!("k={k}, x={x}, g={g}: {ratio}"),
                    );
                }
            }
        }
    }
    t.into_case(&mut r, "8 < c/chi < 60068/6857 + 1/1000 once sigma > 0");
    r
}

fn random_v(rng: &mut StdRng, cfg: &Config) -> VChoice {
    let w = &cfg.wedge;
    match rng.gen_range(0..3) {
        0 => VChoice::HorikawaElliptic {
            kp: rng.gen_range(1..=w.kp_max),
            s: rng.gen_range(1..=w.s_max),
        },
        1 => VChoice::DoubleHorikawaElliptic {
            kp: rng.gen_range(1..=w.kp_max),
            s: rng.gen_range(1..=w.s_max),
        },
        _ => VChoice::Strip {
            s: rng.gen_range(1..=w.s_max),
            n: rng.gen_range(2..=w.strip_n_max),
        },
    }
}

pub fn wedge_roundtrip(cfg: &Config) -> Report {
    let mut r = Report::new("positive-region solver round-trip");
    let bounds = cfg.search_bounds();
    let Some(park) = bounds.compositions.first().copied() else {
        r.case("composition", false, "no usable composition within bounds");
        return r;
    };
    let mut rng = StdRng::seed_from_u64(cfg.wedge.seed);
    let mut t = Tally::default();
    for _ in 0..cfg.wedge.instances {
        let m = rng.gen_range(1..=cfg.wedge.m_max);
        let v = random_v(&mut rng, cfg);
        let group = cfg.strip.groups[rng.gen_range(0..cfg.strip.groups.len())].clone();
        let w = WedgeParams {
            park,
            m,
            v,
            group: group.clone(),
        };
        let point = w.point().expect("valid params");
        let forward = w.recipe().evaluate();
        let forward_ok =
            matches!(&forward, Ok(f) if f.point().ok() == Some(point) && f.abelian() == group);
        let solved = solve_positive_region(point.c, point.chi, &group, &bounds);
        let ok = forward_ok
            && match &solved {
                Ok(Solve::Found(cert, _)) => {
                    cert.verified
                        && matches!(cert.recipe.evaluate(), Ok(again) if again.point().ok() == Some(point) && again.abelian() == group)
                }
                _ => false,
            };
        t.check(ok, || {
            format!(
                "{} {group}: forward {forward_ok}, solve {:?}",
                w.id(),
                solved.as_ref().map(|s| matches!(s, Solve::Found(..)))
            )
        });
    }
    t.into_case(
        &mut r,
        &format!(
            "{} forward-composed instances, m <= {}",
            cfg.wedge.instances, cfg.wedge.m_max
        ),
    );
    r
}

/// Recipes whose surgeries are audited.
pub fn regression_recipes() -> Vec<(String, Recipe)> {
    let mut out = Vec::new();
    let groups = [
        "trivial", "Z", "Z+Z", "Z_5", "Z+Z_3", "Z_3+Z_3", "Z_2+Z_4", "Z_7",
    ];
    for g in groups {
        let target: AbelianType = g.parse().expect("valid group");
        for (s, n) in [(1, 1), (1, 2), (2, 3)] {
            if n >= spingeo_core::geography::strip_min_n(&target) {
                out.push((
                    format!("strip {g} s={s} n={n}"),
                    Recipe::EllipticStrip {
                        s,
                        n,
                        target: target.clone(),
                    },
                ));
            }
        }
        out.push((
            format!("horikawa {g}"),
            Recipe::HorikawaStrip {
                kp: 1,
                n: 2,
                target: target.clone(),
                variant: HorikawaVariant::Plain,
            },
        ));
    }
    let base = Recipe::ProductRoute {
        base: Box::new(Recipe::block(spingeo_core::blocks::BlockSpec::Elliptic {
            s: 1,
            knotted: true,
        })),
        n: 2,
        target: AbelianType::z(),
    };
    out.push((
        "family member".into(),
        Recipe::FamilyMember {
            base: Box::new(base),
            surface: "T3".into(),
            n: 3,
        },
    ));
    out
}

pub fn surgery_invariance(recipes: &[(String, Recipe)]) -> Report {
    let mut r = Report::new("surgery invariance over regression recipes");
    let mut t = Tally::default();
    let mut essential = 0;
    for (name, recipe) in recipes {
        let m = match recipe.evaluate() {
            Ok(m) => m,
            Err(e) => {
                t.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        for step in &m.provenance {
            if let Step::Surgery {
                before,
                after,
                luttinger,
                essential: ess,
                surface,
                ..
            } = step
            {
                let mut ok =
                    before.e == after.e && before.sigma == after.sigma && before.spin == after.spin;
                if *ess {
                    essential += 1;
                    ok &= after.b1 + 1 == before.b1 && after.b2() + 2 == before.b2();
                }
                if *luttinger {
                    ok &= after.symplectic == before.symplectic;
                }
                t.check(ok, || {
                    format!("{name}: surgery on {surface}: {before} -> {after}")
                });
            }
        }
    }
    let detail_essential = essential;
    t.into_case(
        &mut r,
        "e, sigma, spin kept; b1 and b2 drop by 1 and 2 when essential; Luttinger keeps symplectic",
    );
    r.case(
        "essential surgeries present",
        detail_essential > 0,
        format!("{detail_essential} essential"),
    );
    r
}

fn family_case(
    r: &mut Report,
    label: &str,
    model: spingeo_core::Result<spingeo_core::blocks::ManifoldModel>,
    hi: i64,
) {
    let m = match model {
        Ok(m) => m,
        Err(e) => {
            r.case(label, false, e.to_string());
            return;
        }
    };
    match family_on_some_null_torus(&m, 1, hi)
        .and_then(|f| botany_family_report(&f).map(|b| (f, b)))
    {
        Ok((f, b)) => r.case(
            label,
            b.consistent && b.exactly_one_symplectic() && b.sw_distinct,
            format!("torus {}, {b}", f.surface),
        ),
        Err(e) => r.case(label, false, e.to_string()),
    }
}

pub fn family_consistency(cfg: &Config) -> Report {
    let mut r = Report::new(format!(
        "families on a nullhomologous torus, dial 1..={}",
        cfg.family.dial_max
    ));
    for g in ["trivial", "Z", "Z_3+Z_3"] {
        let group: AbelianType = g.parse().expect("valid group");
        family_case(
            &mut r,
            &format!("strip s=1 n=2, {g}"),
            elliptic_strip(1, 2, &group),
            cfg.family.dial_max,
        );
    }
    r
}

pub fn cusp_block_flag(cfg: &Config) -> Report {
    let mut r = Report::new("cusp block: stated signature formula vs (c, chi)");
    for &g in &cfg.cusp_genera {
        match park_z(g) {
            Ok(z) => {
                let report = check_consistency(&park_z_stated(g), z.point().ok());
                let ok = report.violations.len() == 1
                    && matches!(report.violations[0], Violation::SignatureMismatch { .. })
                    && z.warnings
                        .iter()
                        .any(|w| matches!(w, Warning::SignatureFormulaMismatch { .. }));
                r.case(format!("g = {g}"), ok, format!("{:?}", report.violations));
            }
            Err(e) => r.case(format!("g = {g}"), false, e.to_string()),
        }
    }
    r
}

/// Zero-signature points `X + strip`, named from one of the two tables.
pub fn zero_signature(cfg: &Config, table: ZeroTable) -> Report {
    let mut r = Report::new(format!("zero-signature prototypes ({table:?} table)"));
    let bounds = cfg.search_bounds();
    let Some(park) = bounds.compositions.first().copied() else {
        r.case("composition", false, "no usable composition within bounds");
        return r;
    };
    let x = park.point().expect("valid");
    let groups: &[&str] = match table {
        ZeroTable::Base => &["Z_3", "Z_3+Z_3", "Z"],
        ZeroTable::Shifted => &["trivial", "Z_3", "Z_3+Z_3", "Z"],
    };
    for g in groups {
        let group: AbelianType = g.parse().expect("valid group");
        let w = WedgeParams {
            park,
            m: 1,
            v: VChoice::Strip {
                s: x.sigma() / 16,
                n: 2,
            },
            group: group.clone(),
        };
        let m = match w.recipe().evaluate() {
            Ok(m) => m,
            Err(e) => {
                r.case(g.to_string(), false, e.to_string());
                continue;
            }
        };
        let named = prototype_name(&m.chars, &group, Family::ZeroSignature(table));
        let ok = m.chars.sigma == 0 && m.abelian() == group && named.is_ok();
        let detail = match &named {
            Ok(n) => format!(
                "(c, chi) = {}, {}",
                m.point().map(|p| p.to_string()).unwrap_or_default(),
                n
            ),
            Err(u) => u.to_string(),
        };
        r.case(format!("{g} prototype"), ok, detail);
        family_case(&mut r, &format!("{g} family"), Ok(m), 3);
    }
    r
}

pub fn strip_botany(cfg: &Config) -> Report {
    let mut r = Report::new("strip prototypes with exotic families");
    for g in ["trivial", "Z_5", "Z_3+Z_3", "Z"] {
        let group: AbelianType = g.parse().expect("valid group");
        let (s, n) = (2, 3);
        let m = elliptic_strip(s, n, &group);
        if let Ok(m) = &m {
            let named = prototype_name(&m.chars, &group, Family::EllipticStrip { s, n });
            r.case(
                format!("{g} prototype"),
                named.is_ok(),
                named
                    .map(|n| n.to_string())
                    .unwrap_or_else(|u| u.to_string()),
            );
        }
        family_case(&mut r, &format!("{g} family"), m, cfg.family.dial_max);
    }
    r
}

pub fn horikawa_botany(cfg: &Config) -> Report {
    let mut r = Report::new("Horikawa strip prototypes with exotic families");
    for g in ["trivial", "Z_5", "Z_3+Z_3", "Z"] {
        let group: AbelianType = g.parse().expect("valid group");
        let (kp, n) = (1, 2);
        let m = horikawa_strip(kp, n, &group, HorikawaVariant::Plain);
        if let Ok(m) = &m {
            let named = prototype_name(&m.chars, &group, Family::HorikawaStrip { kp, n });
            r.case(
                format!("{g} prototype"),
                named.is_ok(),
                named
                    .map(|n| n.to_string())
                    .unwrap_or_else(|u| u.to_string()),
            );
        }
        family_case(&mut r, &format!("{g} family"), m, cfg.family.dial_max);
    }
    r
}

pub const CLAIMS: [&str; 11] = [
    "thm1", "thm2", "prop9", "prop11", "lemma7", "lemma8", "cor4", "cor10", "cor12", "cor14",
    "ratio",
];

/// Runs the suite behind a claim id; `None` for an unknown id.
pub fn verify_claim(id: &str, cfg: &Config) -> Option<Vec<Report>> {
    Some(match id {
        "thm1" => vec![strip_grid(cfg, true)],
        "thm2" => vec![ratio_and_line(cfg), wedge_roundtrip(cfg)],
        "prop9" => vec![strip_grid(cfg, false)],
        "prop11" => vec![horikawa_points(cfg)],
        "lemma7" => vec![four_torus_targets(cfg)],
        "lemma8" => vec![product_template(cfg), product_targets(cfg)],
        "cor4" => vec![zero_signature(cfg, ZeroTable::Base)],
        "cor10" => vec![strip_botany(cfg)],
        "cor12" => vec![horikawa_botany(cfg)],
        "cor14" => vec![zero_signature(cfg, ZeroTable::Shifted)],
        "ratio" => vec![ratio_and_line(cfg)],
        _ => return None,
    })
}
