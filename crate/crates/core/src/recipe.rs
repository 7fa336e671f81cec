//! Serializable construction trees and their evaluation.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use crate::blocks::{BlockSpec, ManifoldModel, Pushoff};
use crate::error::Error;
use crate::geography::{compose_park_x, CompositionParams};
use crate::grp::AbelianType;
use crate::surgery::{
    elliptic_strip, family_from_null_torus, four_torus_route, horikawa_strip, luttinger,
    perturb_to_symplectic, product_block_route, summing_torus, symplectic_sum, torus_surgery,
    HorikawaVariant,
};

/// Surface id that asks the evaluator to pick a square-zero torus with
/// simply connected complement, perturbing it to symplectic if needed.
pub const AUTO_SURFACE: &str = "auto";

/// A construction step; leaves are catalog blocks or closed-form routes.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Recipe {
    Block(BlockSpec),
    Sum {
        left: Box<Recipe>,
        left_surface: String,
        right: Box<Recipe>,
        right_surface: String,
    },
    Perturb {
        base: Box<Recipe>,
        surface: String,
    },
    Luttinger {
        base: Box<Recipe>,
        surface: String,
        beta: Pushoff,
        p: i64,
    },
    TorusSurgery {
        base: Box<Recipe>,
        surface: String,
        beta: Pushoff,
        p: i64,
        q: i64,
    },
    FamilyMember {
        base: Box<Recipe>,
        surface: String,
        n: i64,
    },
    FourTorusRoute {
        base: Box<Recipe>,
        target: AbelianType,
    },
    ProductRoute {
        base: Box<Recipe>,
        n: i64,
        target: AbelianType,
    },
    EllipticStrip {
        s: i64,
        n: i64,
        target: AbelianType,
    },
    HorikawaStrip {
        kp: i64,
        n: i64,
        target: AbelianType,
        variant: HorikawaVariant,
    },
    ParkX(CompositionParams),
}

/// Evaluation failure with the path of the failing node, e.g. `root/left/base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipeError {
    pub path: String,
    pub error: Error,
}

impl fmt::Display for RecipeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.path, self.error)
    }
}

impl core::error::Error for RecipeError {}

impl Recipe {
    pub fn block(spec: BlockSpec) -> Self {
        Recipe::Block(spec)
    }

    /// Sum along automatically chosen tori.
    pub fn torus_sum(left: Recipe, right: Recipe) -> Self {
        Recipe::Sum {
            left: Box::new(left),
            left_surface: AUTO_SURFACE.to_string(),
            right: Box::new(right),
            right_surface: AUTO_SURFACE.to_string(),
        }
    }

    pub fn evaluate(&self) -> Result<ManifoldModel, RecipeError> {
        self.eval_at("root")
    }

    fn eval_at(&self, path: &str) -> Result<ManifoldModel, RecipeError> {
        let here = |error: Error| RecipeError {
            path: path.to_string(),
            error,
        };
        let sub = |r: &Recipe, name: &str| r.eval_at(&format!("{path}/{name}"));
        match self {
            Recipe::Block(spec) => spec.build().map_err(here),
            Recipe::Sum {
                left,
                left_surface,
                right,
                right_surface,
            } => {
                let a = sub(left, "left")?;
                let b = sub(right, "right")?;
                let (a, sa) = resolve(&a, left_surface).map_err(here)?;
                let (b, sb) = resolve(&b, right_surface).map_err(here)?;
                symplectic_sum(&a, &sa, &b, &sb).map_err(here)
            }
            Recipe::Perturb { base, surface } => {
                perturb_to_symplectic(&sub(base, "base")?, surface).map_err(here)
            }
            Recipe::Luttinger {
                base,
                surface,
                beta,
                p,
            } => luttinger(&sub(base, "base")?, surface, *beta, *p).map_err(here),
            Recipe::TorusSurgery {
                base,
                surface,
                beta,
                p,
                q,
            } => torus_surgery(&sub(base, "base")?, surface, *beta, *p, *q).map_err(here),
            Recipe::FamilyMember { base, surface, n } => {
                let m = sub(base, "base")?;
                family_from_null_torus(&m, surface, *n, *n)
                    .and_then(|f| f.member(*n))
                    .map_err(here)
            }
            Recipe::FourTorusRoute { base, target } => {
                four_torus_route(&sub(base, "base")?, target).map_err(here)
            }
            Recipe::ProductRoute { base, n, target } => {
                product_block_route(&sub(base, "base")?, *n, target).map_err(here)
            }
            Recipe::EllipticStrip { s, n, target } => elliptic_strip(*s, *n, target).map_err(here),
            Recipe::HorikawaStrip {
                kp,
                n,
                target,
                variant,
            } => horikawa_strip(*kp, *n, target, *variant).map_err(here),
            Recipe::ParkX(params) => compose_park_x(params).map_err(here),
        }
    }
}

fn resolve(m: &ManifoldModel, surface: &str) -> Result<(ManifoldModel, String), Error> {
    if surface == AUTO_SURFACE {
        summing_torus(m)
    } else {
        Ok((m.clone(), surface.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::GeoPoint;

    fn e(s: i64) -> Recipe {
        Recipe::block(BlockSpec::Elliptic { s, knotted: false })
    }

    #[test]
    fn evaluates_nested_sums() {
        let r = Recipe::torus_sum(Recipe::block(BlockSpec::Horikawa { kp: 1 }), e(1));
        let m = r.evaluate().unwrap();
        assert_eq!(m.point().unwrap(), GeoPoint::new(8, 9));
    }

    #[test]
    fn reports_failing_step_path() {
        let bad = Recipe::Sum {
            left: Box::new(e(1)),
            left_surface: "F1".into(),
            right: Box::new(Recipe::block(BlockSpec::Ppx { x: 2, g: 2 })),
            right_surface: "Sg1".into(),
        };
        let err = bad.evaluate().unwrap_err();
        assert_eq!(err.path, "root");
        assert_eq!(err.error, Error::GenusMismatch { left: 1, right: 2 });
        let nested = Recipe::FourTorusRoute {
            base: Box::new(e(0)),
            target: AbelianType::z(),
        };
        assert_eq!(nested.evaluate().unwrap_err().path, "root/base");
    }

    #[test]
    fn family_member_step() {
        let base = Recipe::ProductRoute {
            base: Box::new(e(1)),
            n: 2,
            target: AbelianType::z(),
        };
        let r = Recipe::FamilyMember {
            base: Box::new(base),
            surface: "T3".into(),
            n: 4,
        };
        let m = r.evaluate().unwrap();
        assert!(!m.chars.symplectic);
        assert_eq!(m.abelian(), AbelianType::z());
    }
}
