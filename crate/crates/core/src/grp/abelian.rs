use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::snf::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// Classification tag of a finitely generated abelian group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbelianTag {
    Trivial,
    Z,
    Cyclic(u64),
    ZZ,
    ZCyclic(u64),
    CyclicCyclic(u64, u64),
    Other,
}

/// A finitely generated abelian group in invariant-factor form.
///
/// Factors are nonnegative, units are stripped, nonzero entries form a
/// divisibility chain and zeros (free summands) trail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianType {
    factors: Vec<u64>,
}

impl AbelianType {
    /// Normalizes an arbitrary list of cyclic orders (0 = infinite cyclic).
    pub fn from_orders(orders: &[u64]) -> Self {
        let rows: Vec<Vec<BigInt>> = (0..orders.len())
            .map(|i| {
                (0..orders.len())
                    .map(|j| {
                        if i == j {
                            BigInt::from(orders[i])
                        } else {
                            BigInt::from(0)
                        }
                    })
                    .collect()
            })
            .collect();
        let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
        AbelianType::from_diagonal(&snf.diagonal(), 0)
    }

    /// Cokernel of a relation matrix whose SNF diagonal is `diag`, with
    /// `extra_free` additional generators beyond the diagonal length.
    pub(crate) fn from_diagonal(diag: &[BigInt], extra_free: usize) -> Self {
        let mut torsion: Vec<u64> = Vec::new();
        let mut free = extra_free;
        for d in diag {
            let d = d
                .magnitude()
                .to_u64()
                .expect("invariant factor exceeds u64");
            match d {
                0 => free += 1,
                1 => {}
                d => torsion.push(d),
            }
        }
        torsion.sort_unstable();
        torsion.extend(core::iter::repeat_n(0, free));
        AbelianType { factors: torsion }
    }

    pub fn trivial() -> Self {
        AbelianType {
            factors: Vec::new(),
        }
    }

    pub fn z() -> Self {
        AbelianType {
            factors: alloc::vec![0],
        }
    }

    pub fn zz() -> Self {
        AbelianType {
            factors: alloc::vec![0, 0],
        }
    }

    pub fn cyclic(p: u64) -> Self {
        AbelianType::from_orders(&[p])
    }

    pub fn z_cyclic(q: u64) -> Self {
        AbelianType::from_orders(&[0, q])
    }

    pub fn cyclic_cyclic(p: u64, q: u64) -> Self {
        AbelianType::from_orders(&[p, q])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f == 0).count()
    }

    pub fn torsion(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().copied().filter(|&f| f != 0)
    }

    pub fn is_finite(&self) -> bool {
        self.rank() == 0
    }

    pub fn tag(&self) -> AbelianTag {
        let t: Vec<u64> = self.torsion().collect();
        match (self.rank(), t.as_slice()) {
            (0, []) => AbelianTag::Trivial,
            (1, []) => AbelianTag::Z,
            (0, [p]) => AbelianTag::Cyclic(*p),
            (2, []) => AbelianTag::ZZ,
            (1, [q]) => AbelianTag::ZCyclic(*q),
            (0, [p, q]) => AbelianTag::CyclicCyclic(*p, *q),
            _ => AbelianTag::Other,
        }
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&d| {
                if d == 0 {
                    "Z".to_string()
                } else {
                    format!("Z_{d}")
                }
            })
            .collect();
        // free summands first, matching the usual Z+Z_q reading
        let (free, tors): (Vec<_>, Vec<_>) = parts.into_iter().partition(|p| p == "Z");
        let mut all = free;
        all.extend(tors);
        f.write_str(&all.join("+"))
    }
}

impl FromStr for AbelianType {
    type Err = Error;

    /// Accepts `trivial`, `1`, or `+`-separated summands `Z`, `Z^k`, `Z_p`
    /// (also `Zp`), e.g. `Z+Z_3` or `Z_3+Z_3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("trivial") || s == "1" {
            return Ok(AbelianType::trivial());
        }
        let bad = || Error::InvalidParameter(format!("cannot parse group `{s}`"));
        let mut orders = Vec::new();
        for part in s.split(['+', ',']) {
            let part = part.trim();
            let rest = part.strip_prefix('Z').ok_or_else(bad)?;
            if rest.is_empty() {
                orders.push(0);
            } else if let Some(k) = rest.strip_prefix('^') {
                let k: usize = k.parse().map_err(|_| bad())?;
                orders.extend(core::iter::repeat_n(0, k));
            } else {
                let n: u64 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                orders.push(n);
            }
        }
        Ok(AbelianType::from_orders(&orders))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for AbelianType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for AbelianType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(AbelianType::cyclic_cyclic(2, 3), AbelianType::cyclic(6));
        assert_eq!(
            AbelianType::cyclic_cyclic(3, 3).tag(),
            AbelianTag::CyclicCyclic(3, 3)
        );
        assert_eq!(AbelianType::cyclic(1), AbelianType::trivial());
        assert_eq!(AbelianType::z_cyclic(1), AbelianType::z());
        assert_eq!(AbelianType::from_orders(&[4, 0, 6]).factors(), &[2, 12, 0]);
        assert_eq!(
            AbelianType::from_orders(&[2, 2, 2]).tag(),
            AbelianTag::Other
        );
    }

    #[test]
    fn display_and_parse() {
        for g in [
            AbelianType::trivial(),
            AbelianType::z(),
            AbelianType::zz(),
            AbelianType::cyclic(5),
            AbelianType::z_cyclic(3),
            AbelianType::cyclic_cyclic(3, 9),
        ] {
            assert_eq!(g.to_string().parse::<AbelianType>().unwrap(), g);
        }
        assert_eq!(AbelianType::z_cyclic(3).to_string(), "Z+Z_3");
        assert_eq!("Z^2".parse::<AbelianType>().unwrap(), AbelianType::zz());
        assert_eq!("Z7".parse::<AbelianType>().unwrap(), AbelianType::cyclic(7));
        assert!("Q".parse::<AbelianType>().is_err());
        assert!("Z_0".parse::<AbelianType>().is_err());
    }
}
