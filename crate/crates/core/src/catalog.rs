//! Named divisor classes and closed-form scalars.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::picard::{
    AnyClass, Basis, Coeff, DivisorClass, PartialDivisorClass, PointedDivisorClass, Space,
};
use crate::scalar::{GenusPolynomial, Rational};

/// How the `δ_0` term of the canonical class of `M̄_{g,1}` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// As printed: no `δ_0` term.
    Paper,
    /// With the customary `-2δ_0`.
    Standard,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Paper, Convention::Standard];

    pub fn delta0_coefficient(self) -> Rational {
        match self {
            Convention::Paper => Rational::zero(),
            Convention::Standard => Rational::from(-2),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Paper => "paper",
            Convention::Standard => "standard",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Convention::Paper),
            "standard" => Ok(Convention::Standard),
            _ => Err(Error::Parse(format!(
                "convention must be paper or standard, got {s:?}"
            ))),
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn binom2(n: u32) -> Rational {
    Rational::from(n as u64 * n.saturating_sub(1) as u64 / 2)
}

/// Class of the closure of the Weierstrass divisor in
/// `M̄_{g,1}`: `-λ + g(g+1)/2 ψ - Σ_{i=1}^{g-1} C(g-i+1, 2) δ_i`.
pub fn weierstrass(g: u32) -> Result<PointedDivisorClass> {
    let mut w = PointedDivisorClass::zero(g)?;
    w.set(Basis::Lambda, Rational::from(-1))?;
    w.set(Basis::Psi, binom2(g + 1))?;
    for i in 1..g {
        w.set(Basis::Delta(i), -binom2(g - i + 1))?;
    }
    Ok(w)
}

/// Brill–Noether divisor class normalized to `c = 1`:
/// `(g+3)λ - (g+1)/6 δ_0 - Σ i(g-i) δ_i`. Defined only when `g+1` is
/// composite.
pub fn brill_noether(g: u32) -> Result<DivisorClass> {
    if g < 2 {
        return Err(Error::InvalidGenus(g, "genus >= 2"));
    }
    if is_prime(g + 1) {
        return Err(Error::Domain(format!(
            "no Brill–Noether divisor in genus {g}: g+1 = {} is prime",
            g + 1
        )));
    }
    let mut b = vec![Rational::frac(g as i64 + 1, 6)];
    b.extend((1..=g / 2).map(|i| Rational::from(i * (g - i))));
    DivisorClass::from_ab(g, Rational::from(g + 3), b)
}

/// Slope of the Petri divisor for even `g`: `2(3g²+13g+2) / (g(g+2))`.
pub fn petri_slope(g: u32) -> Result<Rational> {
    if g < 2 || !g.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "Petri slope bound needs even genus, got {g}"
        )));
    }
    let g = g as i64;
    Rational::new(2 * (3 * g * g + 13 * g + 2), g * (g + 2))
}

/// Brill–Noether slope `6 + 12/(g+1)`.
pub fn brill_noether_slope(g: u32) -> Rational {
    Rational::from(6) + Rational::frac(12, g as i64 + 1)
}

/// The K3 divisor on `M̄_10`: `7λ - δ_0 - 5δ_1 - 9δ_2`, with `δ_3, δ_4, δ_5`
/// unknown.
pub fn k3_divisor() -> PartialDivisorClass {
    let k = |n: i64| Coeff::Known(Rational::from(n));
    PartialDivisorClass::from_entries(
        Space::Unpointed,
        10,
        [
            (Basis::Lambda, k(7)),
            (Basis::Delta(0), k(-1)),
            (Basis::Delta(1), k(-5)),
            (Basis::Delta(2), k(-9)),
            (Basis::Delta(3), Coeff::Unknown),
            (Basis::Delta(4), Coeff::Unknown),
            (Basis::Delta(5), Coeff::Unknown),
        ],
    )
    .expect("valid basis on M_10")
}

/// `K_{M̄_{g,1}} = 13λ + ψ - 3(δ_1 + δ_{g-1}) - 2 Σ_{i=2}^{g-2} δ_i`, plus
/// `-2δ_0` under [`Convention::Standard`].
pub fn canonical_pointed(g: u32, conv: Convention) -> Result<PointedDivisorClass> {
    if g < 3 {
        return Err(Error::InvalidGenus(g, "genus >= 3"));
    }
    let mut k = PointedDivisorClass::zero(g)?;
    k.set(Basis::Lambda, Rational::from(13))?;
    k.set(Basis::Psi, Rational::one())?;
    k.set(Basis::Delta(0), conv.delta0_coefficient())?;
    for i in 2..=g - 2 {
        k.set(Basis::Delta(i), Rational::from(-2))?;
    }
    k.set(Basis::Delta(1), Rational::from(-3))?;
    k.set(Basis::Delta(g - 1), Rational::from(-3))?;
    Ok(k)
}

/// Closed forms for the coefficients of `π_*(W̄²) = aλ - Σ b_i δ_i`.
pub mod closed_form {
    use super::*;

    fn poly(c: &[i64]) -> GenusPolynomial {
        GenusPolynomial::from_ints(c).expect("small degree")
    }

    /// `a = g(g+1)(3g²+g+2)`.
    pub fn a() -> GenusPolynomial {
        poly(&[0, 1])
            .mul(&poly(&[1, 1]))
            .and_then(|p| p.mul(&poly(&[2, 1, 3])))
            .expect("degree 4")
    }

    /// `b_0 = g²(g+1)²/4`.
    pub fn b0() -> GenusPolynomial {
        let gg1 = poly(&[0, 1, 1]);
        gg1.mul(&gg1)
            .expect("degree 4")
            .scale(&Rational::frac(1, 4))
    }

    /// `g³ + 3g² + g - 1`; for `1 <= i < g/2`, `b_i = i(g-i)` times this.
    pub fn b_inner_factor() -> GenusPolynomial {
        poly(&[-1, 1, 3, 1])
    }

    /// `b_{g/2} = (8g⁵ + 33g⁴ + 28g³ + 4g²)/64` for even `g`.
    pub fn b_middle() -> GenusPolynomial {
        poly(&[0, 0, 4, 28, 33, 8]).scale(&Rational::frac(1, 64))
    }
}

/// `π_*(W̄²)` assembled from the closed-form coefficients.
pub fn pushed_weierstrass_square_closed(g: u32) -> Result<DivisorClass> {
    if g < 2 {
        return Err(Error::InvalidGenus(g, "genus >= 2"));
    }
    let gi = g as i64;
    let a = closed_form::a().eval_at(gi);
    let mut b = vec![closed_form::b0().eval_at(gi)];
    let inner = closed_form::b_inner_factor().eval_at(gi);
    for i in 1..=g / 2 {
        if 2 * i == g {
            b.push(closed_form::b_middle().eval_at(gi));
        } else {
            b.push(Rational::from(i * (g - i)) * &inner);
        }
    }
    DivisorClass::from_ab(g, a, b)
}

/// Keywords accepted by [`named_class`].
pub const NAMES: &[(&str, &str)] = &[
    (
        "k3divisor",
        "K3 divisor on M_10 (partial: δ_3..δ_5 unknown)",
    ),
    ("weierstrass:<g>", "Weierstrass divisor on M_g,1"),
    (
        "brillnoether:<g>",
        "Brill–Noether divisor on M_g, c = 1 (g+1 composite)",
    ),
    ("canonical:<g>:<paper|standard>", "canonical class of M_g,1"),
    ("pushedw2:<g>", "closed form of π_*(W̄²) on M_g"),
];

/// Looks up a bundled class by keyword, e.g. `weierstrass:10`.
pub fn named_class(name: &str) -> Result<AnyClass> {
    let bad = || Error::Parse(format!("unknown class name {name:?}"));
    let num = |x: &str| x.parse::<u32>().map_err(|_| bad());
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["k3divisor"] => Ok(AnyClass::Partial(k3_divisor())),
        ["weierstrass", g] => Ok(AnyClass::Pointed(weierstrass(num(g)?)?)),
        ["brillnoether", g] => Ok(AnyClass::Full(brill_noether(num(g)?)?)),
        ["canonical", g, conv] => Ok(AnyClass::Pointed(canonical_pointed(
            num(g)?,
            conv.parse()?,
        )?)),
        ["pushedw2", g] => Ok(AnyClass::Full(pushed_weierstrass_square_closed(num(g)?)?)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::ClassView;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn weierstrass_small_genus() {
        assert_eq!(
            weierstrass(2).unwrap(),
            PointedDivisorClass::new(2, r(-1), r(3), vec![r(0), r(-1)]).unwrap()
        );
        assert_eq!(
            weierstrass(3).unwrap(),
            PointedDivisorClass::new(3, r(-1), r(6), vec![r(0), r(-3), r(-1)]).unwrap()
        );
        let w10 = weierstrass(10).unwrap();
        assert_eq!(w10.psi(), &r(55));
        assert_eq!(w10.delta()[1], r(-45));
        assert_eq!(w10.delta()[9], r(-1));
        assert_eq!(w10.delta()[0], r(0));
    }

    #[test]
    fn brill_noether_cases() {
        assert_eq!(
            brill_noether(5).unwrap(),
            DivisorClass::from_ab(5, r(8), vec![r(1), r(4), r(6)]).unwrap()
        );
        assert!(brill_noether(10).is_err());
        assert!(brill_noether(4).is_err());
        for g in 3..=30 {
            if let Ok(bn) = brill_noether(g) {
                assert_eq!(
                    bn.slope().finite().unwrap(),
                    &brill_noether_slope(g),
                    "g={g}"
                );
            }
        }
    }

    #[test]
    fn petri_values() {
        assert_eq!(petri_slope(10).unwrap(), Rational::frac(36, 5));
        assert_eq!(petri_slope(20).unwrap(), Rational::frac(731, 110));
        assert!(petri_slope(7).is_err());
    }

    #[test]
    fn k3_coefficients() {
        let k = k3_divisor();
        assert_eq!(k.coefficient(Basis::Lambda).unwrap(), Coeff::Known(r(7)));
        assert_eq!(k.coefficient(Basis::Delta(2)).unwrap(), Coeff::Known(r(-9)));
        assert_eq!(k.coefficient(Basis::Delta(5)).unwrap(), Coeff::Unknown);
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(
            canonical_pointed(3, Convention::Paper).unwrap(),
            PointedDivisorClass::new(3, r(13), r(1), vec![r(0), r(-3), r(-3)]).unwrap()
        );
        assert_eq!(
            canonical_pointed(3, Convention::Standard).unwrap(),
            PointedDivisorClass::new(3, r(13), r(1), vec![r(-2), r(-3), r(-3)]).unwrap()
        );
        let k5 = canonical_pointed(5, Convention::Paper).unwrap();
        assert_eq!(k5.delta()[3], r(-2));
        assert_eq!(k5.delta()[4], r(-3));
        assert!(canonical_pointed(2, Convention::Paper).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(
            pushed_weierstrass_square_closed(4).unwrap(),
            DivisorClass::from_ab(4, r(1080), vec![r(100), r(345), r(289)]).unwrap()
        );
        assert_eq!(
            pushed_weierstrass_square_closed(2).unwrap(),
            DivisorClass::from_ab(2, r(96), vec![r(9), r(16)]).unwrap()
        );
        // i(g-i)(g³+3g²+g-1) at i=2, g=5: 6 * 204
        assert_eq!(
            pushed_weierstrass_square_closed(5).unwrap().delta()[2],
            r(-1224)
        );
    }

    #[test]
    fn primes() {
        let p: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn names() {
        assert!(matches!(
            named_class("k3divisor").unwrap(),
            AnyClass::Partial(_)
        ));
        assert!(matches!(
            named_class("weierstrass:4").unwrap(),
            AnyClass::Pointed(_)
        ));
        assert!(matches!(
            named_class("canonical:5:standard").unwrap(),
            AnyClass::Pointed(_)
        ));
        assert!(named_class("brillnoether:10").is_err());
        assert!(named_class("nope").is_err());
        assert!(named_class("canonical:5:other").is_err());
    }
}
