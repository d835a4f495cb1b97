//! Test curves as intersection functionals on divisor classes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::picard::{Basis, ClassView, Coeff, Space};
use crate::pushpull::ATTACH_GENUS;
use crate::scalar::Rational;

/// Genus range in which a general K3 surface carries Lefschetz pencils of
/// curves of that genus used here.
pub const K3_GENERA: std::ops::RangeInclusive<u32> = 2..=11;

/// A curve in `M̄_g` or `M̄_{g,1}`, known only through its intersection
/// numbers with the basis divisors. Absent pairings are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    name: String,
    space: Space,
    genus: u32,
    pairings: BTreeMap<Basis, Rational>,
}

impl CurveClass {
    pub fn new(
        name: impl Into<String>,
        space: Space,
        genus: u32,
        pairings: impl IntoIterator<Item = (Basis, Rational)>,
    ) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidGenus(genus, "genus >= 2"));
        }
        let mut map = BTreeMap::new();
        for (b, v) in pairings {
            if !b.is_valid(space, genus) {
                return Err(Error::InvalidBasis {
                    basis: b,
                    space,
                    genus,
                });
            }
            if !v.is_zero() {
                map.insert(b, v);
            }
        }
        Ok(CurveClass {
            name: name.into(),
            space,
            genus,
            pairings: map,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn pairing(&self, b: Basis) -> Rational {
        self.pairings.get(&b).cloned().unwrap_or_default()
    }

    pub fn pairings(&self) -> impl Iterator<Item = (Basis, &Rational)> {
        self.pairings.iter().map(|(b, v)| (*b, v))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {} (g={}):", self.name, self.space, self.genus)?;
        for (b, v) in &self.pairings {
            write!(f, " ·{b}={v}")?;
        }
        Ok(())
    }
}

/// Lefschetz pencil `B` of genus-`i` curves on a general K3 surface of
/// degree `2i-2`, as a curve in `M̄_i`: `B·λ = i+1`, `B·δ_0 = 6i+18`.
pub fn lefschetz_pencil(i: u32) -> Result<CurveClass> {
    if !K3_GENERA.contains(&i) {
        return Err(Error::InvalidGenus(i, "2 <= i <= 11"));
    }
    CurveClass::new(
        format!("lefschetz:{i}"),
        Space::Unpointed,
        i,
        [
            (Basis::Lambda, Rational::from(i + 1)),
            (Basis::Delta(0), Rational::from(6 * i + 18)),
        ],
    )
}

/// The pencil `B_i` in `Δ_i ⊂ M̄_g` obtained by gluing a fixed general
/// pointed curve of genus `g-i` to a base point section of a K3 pencil
/// (`i >= 2`) or of a pencil of plane cubics (`i = 1`).
pub fn glued_pencil(i: u32, g: u32) -> Result<CurveClass> {
    if i == 0 || i > *K3_GENERA.end() {
        return Err(Error::Domain(format!(
            "glued pencil index {i} outside 1..=11"
        )));
    }
    if i > g / 2 {
        return Err(Error::InvalidBasis {
            basis: Basis::Delta(i),
            space: Space::Unpointed,
            genus: g,
        });
    }
    let (lambda, delta0) = if i == 1 { (1, 12) } else { (i + 1, 6 * i + 18) };
    CurveClass::new(
        format!("glued:{i}:{g}"),
        Space::Unpointed,
        g,
        [
            (Basis::Lambda, Rational::from(lambda)),
            (Basis::Delta(0), Rational::from(delta0)),
            (Basis::Delta(i), Rational::from(-1)),
        ],
    )
}

/// The pencil `R ⊂ M̄_{10,1}` of pointed genus-10 curves on a general K3,
/// the marked point running along a base point section.
///
/// Its pairings are pinned by `R·j^*(D) = 11a - 78b_0 + b_10` for every
/// `D = aλ - Σ b_iδ_i` on `M̄_g` (g >= 20). Since `j^*` sends `λ ↦ λ`,
/// `δ_0 ↦ δ_0`, `δ_10 ↦ -ψ` and leaves no other `b_i` visible, matching
/// coefficients of `a`, `b_0`, `b_10` forces `R·λ = 11`, `R·δ_0 = 78`,
/// `R·ψ = 1` and zero on `δ_1 … δ_9`. The first two agree with the unpointed
/// K3 pencil in genus 10.
pub fn pointed_k3_pencil() -> CurveClass {
    CurveClass::new(
        "pointed-k3",
        Space::Pointed,
        ATTACH_GENUS,
        [
            (Basis::Lambda, Rational::from(11)),
            (Basis::Delta(0), Rational::from(78)),
            (Basis::Psi, Rational::one()),
        ],
    )
    .expect("valid basis on M_10,1")
}

/// `C·D`. An unknown coefficient of `D` is tolerated only where `C` pairs
/// to zero.
pub fn intersect(c: &CurveClass, d: &dyn ClassView) -> Result<Rational> {
    if c.space != d.space() {
        return Err(Error::SpaceMismatch {
            left: c.space,
            right: d.space(),
        });
    }
    if c.genus != d.genus() {
        return Err(Error::GenusMismatch {
            left: c.genus,
            right: d.genus(),
        });
    }
    let mut total = Rational::zero();
    for (b, p) in &c.pairings {
        match d.coefficient(*b)? {
            Coeff::Known(v) => total += p * &v,
            Coeff::Unknown => {
                return Err(Error::Indeterminate(format!(
                    "{} pairs {p} with unknown {b}",
                    c.name
                )));
            }
        }
    }
    Ok(total)
}

/// Curve spec as used on the command line: `lefschetz:<i>`,
/// `glued:<i>:<g>`, `pointed-k3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSpec {
    Lefschetz(u32),
    Glued { i: u32, g: u32 },
    PointedK3,
}

impl CurveSpec {
    pub fn build(self) -> Result<CurveClass> {
        match self {
            CurveSpec::Lefschetz(i) => lefschetz_pencil(i),
            CurveSpec::Glued { i, g } => glued_pencil(i, g),
            CurveSpec::PointedK3 => Ok(pointed_k3_pencil()),
        }
    }
}

impl FromStr for CurveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "unknown curve {s:?} (lefschetz:<i>, glued:<i>:<g>, pointed-k3)"
            ))
        };
        let num = |x: &str| x.parse::<u32>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["lefschetz", i] => Ok(CurveSpec::Lefschetz(num(i)?)),
            ["glued", i, g] => Ok(CurveSpec::Glued {
                i: num(i)?,
                g: num(g)?,
            }),
            ["pointed-k3"] | ["R"] => Ok(CurveSpec::PointedK3),
            _ => Err(bad()),
        }
    }
}
