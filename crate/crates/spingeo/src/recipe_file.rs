//! RON recipe files: a versioned construction tree plus optional assertions.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use spingeo_core::blocks::ManifoldModel;
use spingeo_core::grp::AbelianType;
use spingeo_core::invariant::CharNumbers;
use spingeo_core::recipe::{Recipe, RecipeError};
use spingeo_core::surgery::HorikawaVariant;
use spingeo_core::topo::{
    classification_criterion, prototype_name, Family, PrototypeName, Unclassified, ZeroTable,
};

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecipeFile {
    pub version: u32,
    pub recipe: Recipe,
    #[serde(default)]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expected {
    pub c: Option<i64>,
    pub chi: Option<i64>,
    pub group: Option<AbelianType>,
    /// Invariant factors, torsion ascending then one 0 per free summand.
    pub factors: Option<Vec<u64>>,
    pub prototype: Option<String>,
    pub symplectic: Option<bool>,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Ron {
        path: String,
        source: ron::error::SpannedError,
    },
    #[error("{path}: unsupported recipe version {found} (expected {VERSION})")]
    Version { path: String, found: u32 },
    #[error(transparent)]
    Eval(#[from] RecipeError),
}

pub fn parse(src: &str, path: &str) -> Result<RecipeFile, InputError> {
    let opts =
        ron::Options::default().with_default_extension(ron::extensions::Extensions::IMPLICIT_SOME);
    let file: RecipeFile = opts.from_str(src).map_err(|source| InputError::Ron {
        path: path.into(),
        source,
    })?;
    if file.version != VERSION {
        return Err(InputError::Version {
            path: path.into(),
            found: file.version,
        });
    }
    Ok(file)
}

pub fn load(path: &Path) -> Result<RecipeFile, InputError> {
    let name = path.display().to_string();
    let src = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: name.clone(),
        source,
    })?;
    parse(&src, &name)
}

pub fn to_ron(file: &RecipeFile) -> String {
    ron::ser::to_string_pretty(file, ron::ser::PrettyConfig::default())
        .expect("recipe files always serialize")
}

/// The prototype table a recipe's output belongs to, if any.
pub fn infer_family(recipe: &Recipe, chars: &CharNumbers) -> Option<Family> {
    match recipe {
        Recipe::EllipticStrip { s, n, .. } => Some(Family::EllipticStrip { s: *s, n: *n }),
        Recipe::HorikawaStrip {
            kp,
            n,
            variant: HorikawaVariant::Plain,
            ..
        } => Some(Family::HorikawaStrip { kp: *kp, n: *n }),
        _ if chars.sigma == 0 => Some(Family::ZeroSignature(ZeroTable::Shifted)),
        _ => None,
    }
}

pub fn prototype_of(
    recipe: &Recipe,
    model: &ManifoldModel,
) -> Option<Result<PrototypeName, Unclassified>> {
    let group = model.abelian();
    let family = infer_family(recipe, &model.chars)?;
    let first = prototype_name(&model.chars, &group, family);
    if first.is_err() && family == Family::ZeroSignature(ZeroTable::Shifted) {
        return Some(prototype_name(
            &model.chars,
            &group,
            Family::ZeroSignature(ZeroTable::Base),
        ));
    }
    Some(first)
}

pub struct Outcome {
    pub model: ManifoldModel,
    pub prototype: Option<Result<PrototypeName, Unclassified>>,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let m = &self.model;
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", m.name);
        let _ = writeln!(out, "invariants: {}", m.chars);
        match m.point() {
            Ok(p) => {
                let _ = writeln!(out, "(c, chi): {p}");
            }
            Err(e) => {
                let _ = writeln!(out, "(c, chi): {e}");
            }
        }
        let group = m.abelian();
        let _ = writeln!(out, "H1: {group} factors {:?}", group.factors());
        let _ = writeln!(
            out,
            "criterion: {}",
            classification_criterion(&group).criterion
        );
        match &self.prototype {
            Some(Ok(p)) => {
                let _ = writeln!(out, "prototype: {p}");
            }
            Some(Err(u)) => {
                let _ = writeln!(out, "prototype: {u}");
            }
            None => {}
        }
        let _ = writeln!(out, "provenance:");
        for step in &m.provenance {
            let _ = writeln!(out, "  {step}");
        }
        for w in &m.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAIL: {f}");
        }
        out
    }
}

pub fn run(file: &RecipeFile) -> Result<Outcome, InputError> {
    let model = file.recipe.evaluate()?;
    let prototype = prototype_of(&file.recipe, &model);
    let mut failures = Vec::new();
    if let Some(exp) = &file.expected {
        let point = model.point().ok();
        let mut check = |what: &str, ok: bool, got: String| {
            if !ok {
                failures.push(format!("{what}: got {got}"));
            }
        };
        if let Some(c) = exp.c {
            check(
                &format!("c = {c}"),
                point.map(|p| p.c) == Some(c),
                format!("{point:?}"),
            );
        }
        if let Some(chi) = exp.chi {
            check(
                &format!("chi = {chi}"),
                point.map(|p| p.chi) == Some(chi),
                format!("{point:?}"),
            );
        }
        let group = model.abelian();
        if let Some(g) = &exp.group {
            check(&format!("group = {g}"), &group == g, group.to_string());
        }
        if let Some(f) = &exp.factors {
            check(
                &format!("factors = {f:?}"),
                group.factors() == f.as_slice(),
                format!("{:?}", group.factors()),
            );
        }
        if let Some(s) = exp.symplectic {
            check(
                &format!("symplectic = {s}"),
                model.chars.symplectic == s,
                model.chars.symplectic.to_string(),
            );
        }
        if let Some(name) = &exp.prototype {
            let got = match &prototype {
                Some(Ok(p)) => p.to_string(),
                Some(Err(u)) => u.to_string(),
                None => "no family".into(),
            };
            check(&format!("prototype = {name}"), &got == name, got.clone());
        }
    }
    Ok(Outcome {
        model,
        prototype,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_file() {
        let src = r#"(
            version: 1,
            recipe: EllipticStrip(s: 1, n: 2, target: "trivial"),
            expected: (c: 8, chi: 3, prototype: "E(2)#2(S²×S²)"),
        )"#;
        let out = run(&parse(src, "inline").unwrap()).unwrap();
        assert!(out.passed(), "{}", out.render());
    }

    #[test]
    fn failed_assertion_is_reported() {
        let src = r#"(version: 1, recipe: Block(Horikawa(kp: 1)), expected: Some((c: Some(9))))"#;
        let out = run(&parse(src, "inline").unwrap()).unwrap();
        assert_eq!(out.failures.len(), 1);
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse("(version: 1,\n recipe: Block(Nope))", "f.ron").unwrap_err();
        assert!(e.to_string().starts_with("f.ron:2:"), "{e}");
        assert!(matches!(
            parse("(version: 2, recipe: Block(FourTorus))", "v"),
            Err(InputError::Version { .. })
        ));
    }

    #[test]
    fn ron_roundtrip() {
        let file = RecipeFile {
            version: VERSION,
            recipe: Recipe::torus_sum(
                Recipe::block(spingeo_core::blocks::BlockSpec::Horikawa { kp: 1 }),
                Recipe::block(spingeo_core::blocks::BlockSpec::Elliptic {
                    s: 1,
                    knotted: false,
                }),
            ),
            expected: Some(Expected {
                c: Some(8),
                chi: Some(9),
                ..Default::default()
            }),
        };
        assert_eq!(parse(&to_ron(&file), "x").unwrap(), file);
    }
}
