//! Pushforward of quadratic expressions along the forgetful map
//! `π: M̄_{g,1} → M̄_g`, and the pullbacks `π^*` and `j^*`.
//!
//! The quadratic rules, for basis elements of `M̄_{g,1}`:
//!
//! | product            | `π_*`                         |
//! |--------------------|-------------------------------|
//! | `λ²`, `λδ_i`       | 0                             |
//! | `δ_0δ_i` (any i)   | 0                             |
//! | `ψ²`               | `12λ - δ` (total boundary of `M̄_g`) |
//! | `λψ`               | `(2g-2)λ`                     |
//! | `ψδ_0`             | `(2g-2)δ_0`                   |
//! | `ψδ_i`, i ≥ 1      | `(2i-1)δ_i`                   |
//! | `δ_i²`, i ≥ 1      | `-δ_i`                        |
//! | `δ_iδ_{g-i}`, i < g/2 | `δ_i`                      |
//! | any other `δ_iδ_j` | 0                             |
//!
//! Right-hand indices are folded to `min(i, g-i)` on `M̄_g`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::picard::{
    basis, canonical_index, Basis, ClassView, Coeff, DivisorClass, PartialDivisorClass,
    PointedDivisorClass, Space,
};
use crate::scalar::Rational;

/// Pushforward of every unordered product of two basis elements of
/// `M̄_{g,1}` at a fixed genus.
#[derive(Debug, Clone)]
pub struct PushRuleTable {
    genus: u32,
    rules: BTreeMap<(Basis, Basis), DivisorClass>,
}

fn ordered(x: Basis, y: Basis) -> (Basis, Basis) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

impl PushRuleTable {
    pub fn new(genus: u32) -> Result<Self> {
        let elems = basis(Space::Pointed, genus);
        let mut rules = BTreeMap::new();
        for (k, &x) in elems.iter().enumerate() {
            for &y in &elems[k..] {
                rules.insert((x, y), basis_rule(genus, x, y)?);
            }
        }
        Ok(PushRuleTable { genus, rules })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rule(&self, x: Basis, y: Basis) -> Result<&DivisorClass> {
        self.rules.get(&ordered(x, y)).ok_or(Error::InvalidBasis {
            basis: if x.is_valid(Space::Pointed, self.genus) {
                y
            } else {
                x
            },
            space: Space::Pointed,
            genus: self.genus,
        })
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(Basis, Basis), &DivisorClass)> {
        self.rules.iter()
    }
}

fn basis_rule(g: u32, x: Basis, y: Basis) -> Result<DivisorClass> {
    use Basis::*;
    let mut out = DivisorClass::zero(g)?;
    let two_g_minus_2 = Rational::from(2 * g as i64 - 2);
    match ordered(x, y) {
        (Lambda, Lambda) | (Lambda, Delta(_)) => {}
        (Lambda, Psi) => out.set(Lambda, two_g_minus_2)?,
        (Psi, Psi) => {
            out.set(Lambda, Rational::from(12))?;
            for i in 0..=g / 2 {
                out.set(Delta(i), Rational::from(-1))?;
            }
        }
        (Psi, Delta(0)) => out.set(Delta(0), two_g_minus_2)?,
        (Psi, Delta(i)) => out.add_to(
            Delta(canonical_index(i, g)),
            &Rational::from(2 * i as i64 - 1),
        )?,
        (Delta(0), Delta(_)) => {}
        (Delta(i), Delta(j)) if i == j => {
            out.add_to(Delta(canonical_index(i, g)), &Rational::from(-1))?
        }
        (Delta(i), Delta(j)) if i + j == g => out.add_to(Delta(i.min(j)), &Rational::one())?,
        (Delta(_), Delta(_)) => {}
        (a, b) => unreachable!("pair ({a}, {b}) is not ordered"),
    }
    Ok(out)
}

fn same_genus(a: u32, b: u32) -> Result<()> {
    if a != b {
        return Err(Error::GenusMismatch { left: a, right: b });
    }
    Ok(())
}

/// `π_*(X·Y)` for full classes on `M̄_{g,1}`, by bilinear extension of
/// the rule table.
pub fn push_quadratic(x: &PointedDivisorClass, y: &PointedDivisorClass) -> Result<DivisorClass> {
    same_genus(x.genus(), y.genus())?;
    let table = PushRuleTable::new(x.genus())?;
    push_with_table(&table, x, y)
}

pub fn push_with_table(
    table: &PushRuleTable,
    x: &PointedDivisorClass,
    y: &PointedDivisorClass,
) -> Result<DivisorClass> {
    same_genus(table.genus(), x.genus())?;
    same_genus(table.genus(), y.genus())?;
    let mut out = DivisorClass::zero(table.genus())?;
    for (bx, cx) in x.terms() {
        for (by, cy) in y.terms() {
            let rule = table.rule(bx, by)?;
            if !rule.is_zero() {
                out = out.add(&rule.scale(&(cx * cy)))?;
            }
        }
    }
    Ok(out)
}

/// `π_*(X·Y)` where `Y` may carry unknown coefficients. An output slot is
/// unknown exactly when some unknown coefficient of `Y` reaches it through
/// a nonzero rule. The `λ` and `δ_0` slots must come out exact.
pub fn push_quadratic_partial(
    x: &PointedDivisorClass,
    y: &PartialDivisorClass,
) -> Result<PartialDivisorClass> {
    if y.space() != Space::Pointed {
        return Err(Error::SpaceMismatch {
            left: Space::Pointed,
            right: y.space(),
        });
    }
    same_genus(x.genus(), y.genus())?;
    let g = x.genus();
    let table = PushRuleTable::new(g)?;

    let mut known = DivisorClass::zero(g)?;
    let mut unknown_slots = BTreeSet::new();
    for (bx, cx) in x.terms() {
        for (by, cy) in y.entries() {
            let rule = table.rule(bx, by)?;
            match cy {
                Coeff::Known(cy) => known = known.add(&rule.scale(&(cx * cy)))?,
                Coeff::Unknown => {
                    for b in basis(Space::Unpointed, g) {
                        if !rule.known(b)?.is_zero() {
                            unknown_slots.insert(b);
                        }
                    }
                }
            }
        }
    }

    for slot in [Basis::Lambda, Basis::Delta(0)] {
        if unknown_slots.contains(&slot) {
            return Err(Error::Indeterminate(format!(
                "{slot} coefficient of the pushforward"
            )));
        }
    }

    let mut out = known.to_partial();
    for b in unknown_slots {
        out.set(b, Coeff::Unknown)?;
    }
    Ok(out)
}

/// `π^*` of a full class: `δ_i ↦ δ_i + δ_{g-i}` for `0 < i < g/2`, every
/// other basis element maps to itself.
pub fn pull_forgetful(a: &DivisorClass) -> PointedDivisorClass {
    let g = a.genus();
    let mut out = PointedDivisorClass::zero(g).expect("genus already validated");
    out.set(Basis::Lambda, a.lambda().clone()).expect("λ");
    for (i, c) in a.delta().iter().enumerate() {
        let i = i as u32;
        out.set(Basis::Delta(i), c.clone()).expect("i <= g/2 < g");
        if i > 0 && 2 * i < g {
            out.set(Basis::Delta(g - i), c.clone()).expect("g - i < g");
        }
    }
    out
}

/// `π^*` of a class that may carry unknowns; an unknown `δ_i` makes both
/// `δ_i` and `δ_{g-i}` unknown.
pub fn pull_forgetful_partial(a: &PartialDivisorClass) -> Result<PartialDivisorClass> {
    if a.space() != Space::Unpointed {
        return Err(Error::SpaceMismatch {
            left: Space::Unpointed,
            right: a.space(),
        });
    }
    let g = a.genus();
    let mut out = PartialDivisorClass::zero(Space::Pointed, g)?;
    for (b, c) in a.entries() {
        out.set(b, c.clone())?;
        if let Basis::Delta(i) = b {
            if i > 0 && 2 * i < g {
                out.set(Basis::Delta(g - i), c.clone())?;
            }
        }
    }
    Ok(out)
}

/// Genus of the attached component's image space for [`pull_attach10`].
pub const ATTACH_GENUS: u32 = 10;

/// Pullback along `j: M̄_{10,1} → M̄_g` that glues a fixed general pointed
/// curve of genus `g - 10` at the marked point. Only `j^*λ = λ`,
/// `j^*δ_0 = δ_0` and `j^*δ_10 = -ψ` are tracked; the boundary classes
/// `δ_1 … δ_9` of the result are unknown.
pub fn pull_attach10(d: &dyn ClassView) -> Result<PartialDivisorClass> {
    if d.space() != Space::Unpointed {
        return Err(Error::SpaceMismatch {
            left: Space::Unpointed,
            right: d.space(),
        });
    }
    if d.genus() < 2 * ATTACH_GENUS {
        return Err(Error::InvalidGenus(
            d.genus(),
            "genus >= 20 for the genus-10 attaching map",
        ));
    }
    let neg = |c: Coeff| match c {
        Coeff::Known(r) => Coeff::Known(-r),
        Coeff::Unknown => Coeff::Unknown,
    };
    let mut out = PartialDivisorClass::zero(Space::Pointed, ATTACH_GENUS)?;
    out.set(Basis::Lambda, d.coefficient(Basis::Lambda)?)?;
    out.set(Basis::Delta(0), d.coefficient(Basis::Delta(0))?)?;
    out.set(Basis::Psi, neg(d.coefficient(Basis::Delta(ATTACH_GENUS))?))?;
    for i in 1..ATTACH_GENUS {
        out.set(Basis::Delta(i), Coeff::Unknown)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::AnyClass;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn unit(g: u32, b: Basis) -> PointedDivisorClass {
        PointedDivisorClass::unit(g, b).unwrap()
    }

    #[test]
    fn psi_squared_is_twelve_lambda_minus_total_boundary() {
        for g in [2, 5, 8] {
            let p = push_quadratic(&unit(g, Basis::Psi), &unit(g, Basis::Psi)).unwrap();
            assert_eq!(p.lambda(), &r(12));
            assert!(p.delta().iter().all(|d| *d == r(-1)));
            assert_eq!(p.delta().len() as u32, g / 2 + 1);
        }
    }

    #[test]
    fn lambda_squared_vanishes() {
        let p = push_quadratic(&unit(6, Basis::Lambda), &unit(6, Basis::Lambda)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn delta0_squared_vanishes() {
        let p = push_quadratic(&unit(6, Basis::Delta(0)), &unit(6, Basis::Delta(0))).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn middle_index_not_double_counted() {
        // g = 4: δ_2·δ_2 is a self-intersection, not a {i, g-i} pair.
        let p = push_quadratic(&unit(4, Basis::Delta(2)), &unit(4, Basis::Delta(2))).unwrap();
        assert_eq!(
            p,
            DivisorClass::new(4, r(0), vec![r(0), r(0), r(-1)]).unwrap()
        );
        let p = push_quadratic(&unit(4, Basis::Delta(1)), &unit(4, Basis::Delta(3))).unwrap();
        assert_eq!(p, DivisorClass::new(4, r(0), vec![r(0), r(1)]).unwrap());
    }

    #[test]
    fn psi_delta_folds_index() {
        // ψ·δ_3 at g = 4 gives 5δ_3 = 5δ_1 on M_4.
        let p = push_quadratic(&unit(4, Basis::Psi), &unit(4, Basis::Delta(3))).unwrap();
        assert_eq!(p, DivisorClass::new(4, r(0), vec![r(0), r(5)]).unwrap());
    }

    #[test]
    fn genus_mismatch() {
        assert!(matches!(
            push_quadratic(&unit(4, Basis::Psi), &unit(5, Basis::Psi)),
            Err(Error::GenusMismatch { .. })
        ));
    }

    #[test]
    fn forgetful_examples() {
        let g = 4;
        let l = DivisorClass::new(g, r(1), vec![]).unwrap();
        assert_eq!(pull_forgetful(&l), unit(g, Basis::Lambda));
        let d1 = DivisorClass::new(g, r(0), vec![r(0), r(1)]).unwrap();
        assert_eq!(
            pull_forgetful(&d1),
            unit(g, Basis::Delta(1))
                .add(&unit(g, Basis::Delta(3)))
                .unwrap()
        );
        let d2 = DivisorClass::new(g, r(0), vec![r(0), r(0), r(1)]).unwrap();
        assert_eq!(pull_forgetful(&d2), unit(g, Basis::Delta(2)));
    }

    #[test]
    fn forgetful_partial_spreads_unknowns() {
        let a = PartialDivisorClass::from_entries(
            Space::Unpointed,
            10,
            [
                (Basis::Lambda, Coeff::Known(r(7))),
                (Basis::Delta(3), Coeff::Unknown),
            ],
        )
        .unwrap();
        let p = pull_forgetful_partial(&a).unwrap();
        assert_eq!(p.coefficient(Basis::Delta(7)).unwrap(), Coeff::Unknown);
        assert_eq!(p.coefficient(Basis::Delta(3)).unwrap(), Coeff::Unknown);
        assert_eq!(p.coefficient(Basis::Lambda).unwrap(), Coeff::Known(r(7)));
    }

    #[test]
    fn attach10_examples() {
        let d = DivisorClass::from_ab(20, r(20), {
            let mut b = vec![r(0); 11];
            b[0] = r(2);
            b[10] = r(3);
            b
        })
        .unwrap();
        let j = pull_attach10(&d).unwrap();
        assert_eq!(j.coefficient(Basis::Lambda).unwrap(), Coeff::Known(r(20)));
        assert_eq!(j.coefficient(Basis::Delta(0)).unwrap(), Coeff::Known(r(-2)));
        assert_eq!(j.coefficient(Basis::Psi).unwrap(), Coeff::Known(r(3)));
        for i in 1..10 {
            assert_eq!(j.coefficient(Basis::Delta(i)).unwrap(), Coeff::Unknown);
        }

        let lam = DivisorClass::new(24, r(1), vec![]).unwrap();
        let j = pull_attach10(&lam).unwrap();
        assert_eq!(j.coefficient(Basis::Lambda).unwrap(), Coeff::Known(r(1)));
        assert_eq!(j.coefficient(Basis::Psi).unwrap(), Coeff::Known(r(0)));

        let mut minus_d10 = DivisorClass::zero(21).unwrap();
        minus_d10.set(Basis::Delta(10), r(-1)).unwrap();
        let j = pull_attach10(&minus_d10).unwrap();
        assert_eq!(j.coefficient(Basis::Psi).unwrap(), Coeff::Known(r(1)));
        assert_eq!(j.coefficient(Basis::Lambda).unwrap(), Coeff::Known(r(0)));

        assert!(matches!(
            pull_attach10(&DivisorClass::zero(19).unwrap()),
            Err(Error::InvalidGenus(19, _))
        ));
        assert!(pull_attach10(&PointedDivisorClass::zero(20).unwrap()).is_err());
    }

    #[test]
    fn partial_push_rejects_unknown_lambda() {
        let w = unit(10, Basis::Psi);
        let y = PartialDivisorClass::from_entries(
            Space::Pointed,
            10,
            [(Basis::Lambda, Coeff::Unknown)],
        )
        .unwrap();
        assert!(matches!(
            push_quadratic_partial(&w, &y),
            Err(Error::Indeterminate(_))
        ));
    }

    #[test]
    fn partial_push_matches_full_push_on_full_input() {
        let x = PointedDivisorClass::new(6, r(-1), r(21), (0..6).map(|i| r(i * 2 - 3)).collect())
            .unwrap();
        let y =
            PointedDivisorClass::new(6, r(4), r(-2), (0..6).map(|i| r(5 - i)).collect()).unwrap();
        let full = push_quadratic(&x, &y).unwrap();
        let part = push_quadratic_partial(&x, &y.to_partial()).unwrap();
        assert_eq!(AnyClass::Partial(part).to_partial(), full.to_partial());
    }
}
