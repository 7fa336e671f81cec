//! Characteristic numbers and admissibility checks.
//!
//! Everything is stored as `(e, sigma, b1)`; `c1^2 = 2e + 3 sigma` and
//! `chi_h = (e + sigma) / 4` are derived on demand.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum W2Type {
    Spin,
    Unknown,
}

/// Exact characteristic numbers plus certificate flags.
///
/// The flags are set by construction rules only and never inferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CharNumbers {
    pub e: i64,
    pub sigma: i64,
    pub b1: u32,
    pub spin: bool,
    pub symplectic: bool,
    pub irreducible: bool,
    pub sw_nontrivial: bool,
    pub w2_type: W2Type,
}

impl CharNumbers {
    /// Closed spin symplectic manifold with the given `(e, sigma, b1)`.
    /// Symplectic implies nontrivial Seiberg-Witten invariants; spin plus
    /// symplectic implies irreducible.
    pub fn spin_symplectic(e: i64, sigma: i64, b1: u32) -> Self {
        CharNumbers {
            e,
            sigma,
            b1,
            spin: true,
            symplectic: true,
            irreducible: true,
            sw_nontrivial: true,
            w2_type: W2Type::Spin,
        }
    }

    pub fn from_chern(c: i64, chi: i64, b1: u32) -> Self {
        let (e, sigma) = euler_sigma_from_chern(c, chi);
        CharNumbers::spin_symplectic(e, sigma, b1)
    }

    pub fn c1_squared(&self) -> i64 {
        2 * self.e + 3 * self.sigma
    }

    pub fn chi_h(&self) -> Result<i64> {
        chern_from_euler_sigma(self.e, self.sigma).map(|(_, chi)| chi)
    }

    pub fn point(&self) -> Result<GeoPoint> {
        chern_from_euler_sigma(self.e, self.sigma).map(|(c, chi)| GeoPoint { c, chi })
    }

    pub fn b2(&self) -> i64 {
        self.e - 2 + 2 * self.b1 as i64
    }

    /// `(b2+, b2-)`, or `None` when `b2 ± sigma` is odd.
    pub fn b2_split(&self) -> Option<(i64, i64)> {
        let b2 = self.b2();
        if (b2 + self.sigma).rem_euclid(2) != 0 {
            return None;
        }
        Some(((b2 + self.sigma) / 2, (b2 - self.sigma) / 2))
    }

    /// Same topological invariants, ignoring the symplectic certificate.
    pub fn same_topology(&self, other: &CharNumbers) -> bool {
        self.e == other.e
            && self.sigma == other.sigma
            && self.b1 == other.b1
            && self.spin == other.spin
            && self.w2_type == other.w2_type
    }
}

impl fmt::Display for CharNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={} sigma={} b1={}", self.e, self.sigma, self.b1)?;
        if let Ok(p) = self.point() {
            write!(f, " c1^2={} chi_h={}", p.c, p.chi)?;
        }
        if let Some((bp, bm)) = self.b2_split() {
            write!(f, " b2+={bp} b2-={bm}")?;
        }
        let flags: Vec<&str> = [
            (self.spin, "spin"),
            (self.symplectic, "symplectic"),
            (self.irreducible, "irreducible"),
            (self.sw_nontrivial, "SW-nontrivial"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, n)| *n)
        .collect();
        write!(f, " [{}]", flags.join(", "))
    }
}

/// `(e, sigma) -> (c1^2, chi_h)`; needs `e + sigma` divisible by 4.
pub fn chern_from_euler_sigma(e: i64, sigma: i64) -> Result<(i64, i64)> {
    if (e + sigma).rem_euclid(4) != 0 {
        return Err(Error::Inadmissible(format!(
            "e + sigma = {} is not divisible by 4",
            e + sigma
        )));
    }
    Ok((2 * e + 3 * sigma, (e + sigma) / 4))
}

/// `(c1^2, chi_h) -> (e, sigma)`.
pub fn euler_sigma_from_chern(c: i64, chi: i64) -> (i64, i64) {
    let sigma = c - 8 * chi;
    (4 * chi - sigma, sigma)
}

/// A lattice point `(c1^2, chi_h)` of the geography plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeoPoint {
    pub c: i64,
    pub chi: i64,
}

impl GeoPoint {
    pub fn new(c: i64, chi: i64) -> Self {
        GeoPoint { c, chi }
    }

    pub fn sigma(&self) -> i64 {
        self.c - 8 * self.chi
    }

    pub fn e(&self) -> i64 {
        4 * self.chi - self.sigma()
    }
}

impl fmt::Display for GeoPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c, self.chi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: String,
}

/// Spin lattice points need `c = 0 mod 8` and `sigma = 0 mod 16`.
pub fn spin_admissible(pt: GeoPoint) -> Admissibility {
    let c_res = pt.c.rem_euclid(8);
    let s_res = pt.sigma().rem_euclid(16);
    let reason = if c_res != 0 {
        format!("c = {} is {} mod 8, not 0", pt.c, c_res)
    } else if s_res != 0 {
        format!("sigma = {} is {} mod 16, not 0", pt.sigma(), s_res)
    } else {
        format!("c = 0 mod 8 and sigma = {} = 0 mod 16", pt.sigma())
    };
    Admissibility {
        admissible: c_res == 0 && s_res == 0,
        reason,
    }
}

/// One violated identity in a stated invariant set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EulerSignatureNotDivisible {
        e: i64,
        sigma: i64,
    },
    SpinSignature {
        sigma: i64,
    },
    SpinChern {
        c: i64,
    },
    B2Parity {
        b2: i64,
        sigma: i64,
    },
    NegativeB2 {
        plus: i64,
        minus: i64,
    },
    SymplecticWithoutSw,
    /// `sigma != c - 8 chi` for the claimed pair.
    SignatureMismatch {
        stated: i64,
        from_pair: i64,
    },
    /// `e != 4 chi - sigma` for the claimed pair.
    EulerMismatch {
        stated: i64,
        from_pair: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EulerSignatureNotDivisible { e, sigma } => {
                write!(f, "e + sigma = {} + {} not divisible by 4", e, sigma)
            }
            Violation::SpinSignature { sigma } => {
                write!(f, "spin but sigma = {sigma} is not 0 mod 16")
            }
            Violation::SpinChern { c } => write!(f, "spin but c1^2 = {c} is not 0 mod 8"),
            Violation::B2Parity { b2, sigma } => {
                write!(f, "b2 = {b2} and sigma = {sigma} differ in parity")
            }
            Violation::NegativeB2 { plus, minus } => {
                write!(f, "negative b2 part: b2+ = {plus}, b2- = {minus}")
            }
            Violation::SymplecticWithoutSw => {
                write!(
                    f,
                    "symplectic without the nontrivial Seiberg-Witten certificate"
                )
            }
            Violation::SignatureMismatch { stated, from_pair } => {
                write!(f, "stated sigma = {stated} but c - 8 chi = {from_pair}")
            }
            Violation::EulerMismatch { stated, from_pair } => {
                write!(f, "stated e = {stated} but 4 chi - sigma = {from_pair}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub violations: Vec<Violation>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_consistency(stated: &CharNumbers, claimed: Option<GeoPoint>) -> ConsistencyReport {
    let mut v = Vec::new();
    let (e, sigma) = (stated.e, stated.sigma);
    if (e + sigma).rem_euclid(4) != 0 {
        v.push(Violation::EulerSignatureNotDivisible { e, sigma });
    }
    if stated.spin {
        if sigma.rem_euclid(16) != 0 {
            v.push(Violation::SpinSignature { sigma });
        }
        let c = stated.c1_squared();
        if c.rem_euclid(8) != 0 {
            v.push(Violation::SpinChern { c });
        }
    }
    match stated.b2_split() {
        None => v.push(Violation::B2Parity {
            b2: stated.b2(),
            sigma,
        }),
        Some((plus, minus)) if plus < 0 || minus < 0 => {
            v.push(Violation::NegativeB2 { plus, minus })
        }
        Some(_) => {}
    }
    if stated.symplectic && !stated.sw_nontrivial {
        v.push(Violation::SymplecticWithoutSw);
    }
    if let Some(pt) = claimed {
        if sigma != pt.sigma() {
            v.push(Violation::SignatureMismatch {
                stated: sigma,
                from_pair: pt.sigma(),
            });
        }
        let e_pair = 4 * pt.chi - sigma;
        if e != e_pair {
            v.push(Violation::EulerMismatch {
                stated: e,
                from_pair: e_pair,
            });
        }
    }
    ConsistencyReport { violations: v }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chern_conversions() {
        let n = 3;
        assert_eq!(chern_from_euler_sigma(4 * n - 4, 0), Ok((16, 2)));
        assert_eq!(chern_from_euler_sigma(24, -16), Ok((0, 2)));
        assert_eq!(chern_from_euler_sigma(0, 0), Ok((0, 0)));
        assert!(matches!(
            chern_from_euler_sigma(3, 0),
            Err(Error::Inadmissible(_))
        ));
        assert_eq!(euler_sigma_from_chern(8, 3), (28, -16));
        let kp = 1;
        assert_eq!(euler_sigma_from_chern(16 * kp - 8, 8 * kp - 1), (76, -48));
        assert_eq!(euler_sigma_from_chern(0, 0), (0, 0));
    }

    #[test]
    fn admissibility() {
        let (n, s) = (5, 2);
        let pt = GeoPoint::new(8 * n - 8, 2 * s + n - 1);
        assert!(spin_admissible(pt).admissible);
        assert_eq!(pt.sigma(), -32);
        let bad = spin_admissible(GeoPoint::new(4, 1));
        assert!(!bad.admissible);
        assert!(bad.reason.contains("mod 8"));
        assert!(spin_admissible(GeoPoint::new(16, 2)).admissible);
        let odd16 = spin_admissible(GeoPoint::new(8, 2));
        assert!(!odd16.admissible && odd16.reason.contains("mod 16"));
    }

    #[test]
    fn consistency_of_product_block_numbers() {
        for n in 2..30 {
            let ch = CharNumbers::spin_symplectic(4 * n - 4, 0, 0);
            let r = check_consistency(&ch, Some(GeoPoint::new(8 * n - 8, n - 1)));
            assert!(r.passed(), "n={n}: {:?}", r.violations);
        }
    }

    #[test]
    fn consistency_flags_signature_formula() {
        let g = 2;
        let (c, chi) = (8 * g * g - 16 * g + 8, 2 * g * g - g + 1);
        let stated_sigma = -8 * g * g + 8 * g;
        let stated = CharNumbers::spin_symplectic(4 * chi - stated_sigma, stated_sigma, 0);
        let r = check_consistency(&stated, Some(GeoPoint::new(c, chi)));
        assert_eq!(
            r.violations,
            [Violation::SignatureMismatch {
                stated: -16,
                from_pair: -48
            }]
        );
    }

    #[test]
    fn k3_numbers() {
        let k3 = CharNumbers::spin_symplectic(24, -16, 0);
        assert!(check_consistency(&k3, None).passed());
        assert_eq!(k3.b2_split(), Some((3, 19)));
    }

    #[test]
    fn detects_flag_and_parity_violations() {
        let mut ch = CharNumbers::spin_symplectic(24, -8, 0);
        ch.sw_nontrivial = false;
        let r = check_consistency(&ch, None);
        assert!(r
            .violations
            .contains(&Violation::SpinSignature { sigma: -8 }));
        assert!(r.violations.contains(&Violation::SymplecticWithoutSw));
    }
}
