//! Divisor classes on `M̄_g` and `M̄_{g,1}`.
//!
//! Coefficients are stored signed: a class `aλ - Σ b_i δ_i` has
//! `lambda = a` and `delta[i] = -b_i`. The `a`/`b_i` view is only used by
//! [`DivisorClass::a`], [`DivisorClass::b`] and [`DivisorClass::slope`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Which moduli space a class lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Space {
    /// `M̄_g`, basis `λ, δ_0, …, δ_⌊g/2⌋`.
    Unpointed,
    /// `M̄_{g,1}`, basis `λ, ψ, δ_0, …, δ_{g-1}`.
    Pointed,
}

impl Space {
    pub fn tag(self) -> &'static str {
        match self {
            Space::Unpointed => "Mg",
            Space::Pointed => "Mg1",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Unpointed => "M_g",
            Space::Pointed => "M_g,1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Lambda,
    Psi,
    Delta(u32),
}

impl Basis {
    pub fn is_valid(self, space: Space, genus: u32) -> bool {
        match (self, space) {
            (Basis::Lambda, _) => true,
            (Basis::Psi, Space::Pointed) => true,
            (Basis::Psi, Space::Unpointed) => false,
            (Basis::Delta(i), Space::Unpointed) => i <= genus / 2,
            (Basis::Delta(i), Space::Pointed) => i < genus,
        }
    }

    /// JSON key: `lambda`, `psi`, `delta<i>`.
    pub fn key(self) -> String {
        match self {
            Basis::Lambda => "lambda".into(),
            Basis::Psi => "psi".into(),
            Basis::Delta(i) => format!("delta{i}"),
        }
    }

    pub fn from_key(key: &str) -> Option<Basis> {
        match key {
            "lambda" => Some(Basis::Lambda),
            "psi" => Some(Basis::Psi),
            _ => key.strip_prefix("delta")?.parse().ok().map(Basis::Delta),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Lambda => write!(f, "λ"),
            Basis::Psi => write!(f, "ψ"),
            Basis::Delta(i) => write!(f, "δ_{i}"),
        }
    }
}

/// Every basis element of `space` at `genus`, in canonical order.
pub fn basis(space: Space, genus: u32) -> Vec<Basis> {
    let mut out = vec![Basis::Lambda];
    let top = match space {
        Space::Unpointed => genus / 2,
        Space::Pointed => {
            out.push(Basis::Psi);
            genus - 1
        }
    };
    out.extend((0..=top).map(Basis::Delta));
    out
}

/// Boundary index on `M̄_g` after the identification `δ_i = δ_{g-i}`.
pub fn canonical_index(i: u32, genus: u32) -> u32 {
    if i == 0 {
        0
    } else {
        i.min(genus - i)
    }
}

fn check_genus(genus: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::InvalidGenus(genus, "genus >= 2"));
    }
    Ok(())
}

/// A coefficient that may be left unspecified.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Known(Rational),
    Unknown,
}

impl Coeff {
    pub fn known(&self) -> Option<&Rational> {
        match self {
            Coeff::Known(r) => Some(r),
            Coeff::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Coeff::Unknown)
    }

    fn scale(&self, c: &Rational) -> Coeff {
        match self {
            Coeff::Known(r) => Coeff::Known(r * c),
            Coeff::Unknown if c.is_zero() => Coeff::Known(Rational::zero()),
            Coeff::Unknown => Coeff::Unknown,
        }
    }

    fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Known(a), Coeff::Known(b)) => Coeff::Known(a + b),
            _ => Coeff::Unknown,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Known(r) => write!(f, "{r}"),
            Coeff::Unknown => f.write_str("unknown"),
        }
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::Known(r)
    }
}

/// Read access shared by every class representation.
pub trait ClassView {
    fn space(&self) -> Space;
    fn genus(&self) -> u32;
    /// Errors only when `b` is not a basis element of this space.
    fn coefficient(&self, b: Basis) -> Result<Coeff>;

    /// Like [`ClassView::coefficient`] but an unknown value is an error.
    fn known(&self, b: Basis) -> Result<Rational> {
        match self.coefficient(b)? {
            Coeff::Known(r) => Ok(r),
            Coeff::Unknown => Err(Error::UnknownCoefficient(b)),
        }
    }

    fn check_basis(&self, b: Basis) -> Result<()> {
        if b.is_valid(self.space(), self.genus()) {
            Ok(())
        } else {
            Err(Error::InvalidBasis {
                basis: b,
                space: self.space(),
                genus: self.genus(),
            })
        }
    }

    fn to_partial(&self) -> PartialDivisorClass {
        let coeffs = basis(self.space(), self.genus())
            .into_iter()
            .map(|b| (b, self.coefficient(b).expect("basis element is valid")))
            .collect::<Vec<_>>();
        PartialDivisorClass::from_entries(self.space(), self.genus(), coeffs)
            .expect("entries come from the class basis")
    }
}

/// Slope of a divisor class: `a / min b_i`, or infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Slope::Finite(r) => Some(r),
            Slope::Infinity => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{r}"),
            Slope::Infinity => f.write_str("infinity"),
        }
    }
}

/// Full class on `M̄_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    genus: u32,
    lambda: Rational,
    delta: Vec<Rational>,
}

impl DivisorClass {
    pub fn zero(genus: u32) -> Result<Self> {
        check_genus(genus)?;
        Ok(DivisorClass {
            genus,
            lambda: Rational::zero(),
            delta: vec![Rational::zero(); genus as usize / 2 + 1],
        })
    }

    /// Builds `lambda·λ + Σ delta[i]·δ_i`; `delta` may be shorter than the
    /// basis (missing entries are zero) but not longer.
    pub fn new(genus: u32, lambda: Rational, delta: Vec<Rational>) -> Result<Self> {
        let mut c = DivisorClass::zero(genus)?;
        if delta.len() > c.delta.len() {
            let i = delta.len() as u32 - 1;
            return Err(Error::InvalidBasis {
                basis: Basis::Delta(i),
                space: Space::Unpointed,
                genus,
            });
        }
        c.lambda = lambda;
        for (slot, v) in c.delta.iter_mut().zip(delta) {
            *slot = v;
        }
        Ok(c)
    }

    /// Builds `aλ - Σ b_i δ_i` from the unsigned coefficients.
    pub fn from_ab(genus: u32, a: Rational, b: Vec<Rational>) -> Result<Self> {
        DivisorClass::new(genus, a, b.into_iter().map(|x| -x).collect())
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn delta(&self) -> &[Rational] {
        &self.delta
    }

    /// Coefficient `a` of `λ`.
    pub fn a(&self) -> &Rational {
        &self.lambda
    }

    /// `b_i = -(coefficient of δ_i)`.
    pub fn b(&self, i: u32) -> Result<Rational> {
        self.delta
            .get(i as usize)
            .map(|d| -d)
            .ok_or(Error::InvalidBasis {
                basis: Basis::Delta(i),
                space: Space::Unpointed,
                genus: self.genus,
            })
    }

    pub fn set(&mut self, b: Basis, value: Rational) -> Result<()> {
        self.check_basis(b)?;
        match b {
            Basis::Lambda => self.lambda = value,
            Basis::Delta(i) => self.delta[i as usize] = value,
            Basis::Psi => unreachable!("checked above"),
        }
        Ok(())
    }

    pub fn add_to(&mut self, b: Basis, value: &Rational) -> Result<()> {
        self.check_basis(b)?;
        match b {
            Basis::Lambda => self.lambda += value,
            Basis::Delta(i) => self.delta[i as usize] += value,
            Basis::Psi => unreachable!("checked above"),
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.delta.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> DivisorClass {
        DivisorClass {
            genus: self.genus,
            lambda: &self.lambda * c,
            delta: self.delta.iter().map(|d| d * c).collect(),
        }
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(DivisorClass {
            genus: self.genus,
            lambda: &self.lambda + &other.lambda,
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    /// `s(D) = a / min_i b_i` when every `b_i > 0`; infinity when some
    /// `b_i <= 0`. A negative `a` with positive `b_i` yields a negative
    /// slope rather than infinity.
    pub fn slope(&self) -> Slope {
        let min_b = self
            .delta
            .iter()
            .map(|d| -d)
            .min()
            .expect("δ_0 always present");
        if !min_b.is_positive() {
            return Slope::Infinity;
        }
        Slope::Finite(self.lambda.checked_div(&min_b).expect("min b is positive"))
    }
}

impl ClassView for DivisorClass {
    fn space(&self) -> Space {
        Space::Unpointed
    }

    fn genus(&self) -> u32 {
        self.genus
    }

    fn coefficient(&self, b: Basis) -> Result<Coeff> {
        self.check_basis(b)?;
        Ok(Coeff::Known(match b {
            Basis::Lambda => self.lambda.clone(),
            Basis::Delta(i) => self.delta[i as usize].clone(),
            Basis::Psi => unreachable!("checked above"),
        }))
    }
}

/// Full class on `M̄_{g,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointedDivisorClass {
    genus: u32,
    lambda: Rational,
    psi: Rational,
    delta: Vec<Rational>,
}

impl PointedDivisorClass {
    pub fn zero(genus: u32) -> Result<Self> {
        check_genus(genus)?;
        Ok(PointedDivisorClass {
            genus,
            lambda: Rational::zero(),
            psi: Rational::zero(),
            delta: vec![Rational::zero(); genus as usize],
        })
    }

    pub fn new(genus: u32, lambda: Rational, psi: Rational, delta: Vec<Rational>) -> Result<Self> {
        let mut c = PointedDivisorClass::zero(genus)?;
        if delta.len() > c.delta.len() {
            let i = delta.len() as u32 - 1;
            return Err(Error::InvalidBasis {
                basis: Basis::Delta(i),
                space: Space::Pointed,
                genus,
            });
        }
        c.lambda = lambda;
        c.psi = psi;
        for (slot, v) in c.delta.iter_mut().zip(delta) {
            *slot = v;
        }
        Ok(c)
    }

    /// The single basis element `b` with coefficient 1.
    pub fn unit(genus: u32, b: Basis) -> Result<Self> {
        let mut c = PointedDivisorClass::zero(genus)?;
        c.set(b, Rational::one())?;
        Ok(c)
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn psi(&self) -> &Rational {
        &self.psi
    }

    pub fn delta(&self) -> &[Rational] {
        &self.delta
    }

    pub fn set(&mut self, b: Basis, value: Rational) -> Result<()> {
        self.check_basis(b)?;
        match b {
            Basis::Lambda => self.lambda = value,
            Basis::Psi => self.psi = value,
            Basis::Delta(i) => self.delta[i as usize] = value,
        }
        Ok(())
    }

    /// Nonzero `(basis, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Basis, &Rational)> {
        std::iter::once((Basis::Lambda, &self.lambda))
            .chain(std::iter::once((Basis::Psi, &self.psi)))
            .chain(
                self.delta
                    .iter()
                    .enumerate()
                    .map(|(i, d)| (Basis::Delta(i as u32), d)),
            )
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> PointedDivisorClass {
        PointedDivisorClass {
            genus: self.genus,
            lambda: &self.lambda * c,
            psi: &self.psi * c,
            delta: self.delta.iter().map(|d| d * c).collect(),
        }
    }

    pub fn add(&self, other: &PointedDivisorClass) -> Result<PointedDivisorClass> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(PointedDivisorClass {
            genus: self.genus,
            lambda: &self.lambda + &other.lambda,
            psi: &self.psi + &other.psi,
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }
}

impl ClassView for PointedDivisorClass {
    fn space(&self) -> Space {
        Space::Pointed
    }

    fn genus(&self) -> u32 {
        self.genus
    }

    fn coefficient(&self, b: Basis) -> Result<Coeff> {
        self.check_basis(b)?;
        Ok(Coeff::Known(match b {
            Basis::Lambda => self.lambda.clone(),
            Basis::Psi => self.psi.clone(),
            Basis::Delta(i) => self.delta[i as usize].clone(),
        }))
    }
}

/// Class on either space whose coefficients may be [`Coeff::Unknown`].
/// Absent entries are exactly zero; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialDivisorClass {
    space: Space,
    genus: u32,
    coeffs: BTreeMap<Basis, Coeff>,
}

impl PartialDivisorClass {
    pub fn zero(space: Space, genus: u32) -> Result<Self> {
        check_genus(genus)?;
        Ok(PartialDivisorClass {
            space,
            genus,
            coeffs: BTreeMap::new(),
        })
    }

    /// Later entries for the same basis element overwrite earlier ones.
    pub fn from_entries(
        space: Space,
        genus: u32,
        entries: impl IntoIterator<Item = (Basis, Coeff)>,
    ) -> Result<Self> {
        let mut c = PartialDivisorClass::zero(space, genus)?;
        for (b, v) in entries {
            c.set(b, v)?;
        }
        Ok(c)
    }

    pub fn set(&mut self, b: Basis, value: Coeff) -> Result<()> {
        self.check_basis(b)?;
        match value {
            Coeff::Known(r) if r.is_zero() => {
                self.coeffs.remove(&b);
            }
            v => {
                self.coeffs.insert(b, v);
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (Basis, &Coeff)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn unknowns(&self) -> impl Iterator<Item = Basis> + '_ {
        self.coeffs
            .iter()
            .filter(|(_, c)| c.is_unknown())
            .map(|(b, _)| *b)
    }

    pub fn is_full(&self) -> bool {
        self.unknowns().next().is_none()
    }

    pub fn scale(&self, c: &Rational) -> PartialDivisorClass {
        let mut out = PartialDivisorClass {
            space: self.space,
            genus: self.genus,
            coeffs: BTreeMap::new(),
        };
        for (b, v) in &self.coeffs {
            out.set(*b, v.scale(c)).expect("same space");
        }
        out
    }

    pub fn add(&self, other: &PartialDivisorClass) -> Result<PartialDivisorClass> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: self.space,
                right: other.space,
            });
        }
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        let mut out = self.clone();
        for (b, v) in &other.coeffs {
            let cur = out
                .coeffs
                .get(b)
                .cloned()
                .unwrap_or(Coeff::Known(Rational::zero()));
            out.set(*b, cur.add(v))?;
        }
        Ok(out)
    }

    pub fn to_full(&self) -> Result<AnyClass> {
        if !self.is_full() {
            return Err(Error::PartialClass);
        }
        let known = |b| self.known(b).expect("full");
        Ok(match self.space {
            Space::Unpointed => {
                let delta = (0..=self.genus / 2)
                    .map(|i| known(Basis::Delta(i)))
                    .collect();
                AnyClass::Full(DivisorClass::new(self.genus, known(Basis::Lambda), delta)?)
            }
            Space::Pointed => {
                let delta = (0..self.genus).map(|i| known(Basis::Delta(i))).collect();
                AnyClass::Pointed(PointedDivisorClass::new(
                    self.genus,
                    known(Basis::Lambda),
                    known(Basis::Psi),
                    delta,
                )?)
            }
        })
    }
}

impl ClassView for PartialDivisorClass {
    fn space(&self) -> Space {
        self.space
    }

    fn genus(&self) -> u32 {
        self.genus
    }

    fn coefficient(&self, b: Basis) -> Result<Coeff> {
        self.check_basis(b)?;
        Ok(self
            .coeffs
            .get(&b)
            .cloned()
            .unwrap_or(Coeff::Known(Rational::zero())))
    }

    fn to_partial(&self) -> PartialDivisorClass {
        self.clone()
    }
}

/// Any of the three class representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyClass {
    Full(DivisorClass),
    Pointed(PointedDivisorClass),
    Partial(PartialDivisorClass),
}

impl AnyClass {
    pub fn view(&self) -> &dyn ClassView {
        match self {
            AnyClass::Full(c) => c,
            AnyClass::Pointed(c) => c,
            AnyClass::Partial(c) => c,
        }
    }

    pub fn slope(&self) -> Result<Slope> {
        match self {
            AnyClass::Full(c) => Ok(c.slope()),
            AnyClass::Pointed(_) => Err(Error::Domain("slope is defined on M_g only".into())),
            AnyClass::Partial(_) => Err(Error::PartialClass),
        }
    }

    pub fn as_full(&self) -> Option<&DivisorClass> {
        match self {
            AnyClass::Full(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_pointed(&self) -> Option<&PointedDivisorClass> {
        match self {
            AnyClass::Pointed(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_partial(&self) -> Option<&PartialDivisorClass> {
        match self {
            AnyClass::Partial(c) => Some(c),
            _ => None,
        }
    }
}

impl ClassView for AnyClass {
    fn space(&self) -> Space {
        self.view().space()
    }

    fn genus(&self) -> u32 {
        self.view().genus()
    }

    fn coefficient(&self, b: Basis) -> Result<Coeff> {
        self.view().coefficient(b)
    }
}

impl From<DivisorClass> for AnyClass {
    fn from(c: DivisorClass) -> Self {
        AnyClass::Full(c)
    }
}

impl From<PointedDivisorClass> for AnyClass {
    fn from(c: PointedDivisorClass) -> Self {
        AnyClass::Pointed(c)
    }
}

impl From<PartialDivisorClass> for AnyClass {
    fn from(c: PartialDivisorClass) -> Self {
        AnyClass::Partial(c)
    }
}

/// Validated construction from `(basis, coefficient)` pairs. The result is
/// partial exactly when some coefficient is [`Coeff::Unknown`].
pub fn make_class(space: Space, genus: u32, coeffs: &[(Basis, Coeff)]) -> Result<AnyClass> {
    let partial = PartialDivisorClass::from_entries(space, genus, coeffs.iter().cloned())?;
    if partial.is_full() {
        partial.to_full()
    } else {
        Ok(AnyClass::Partial(partial))
    }
}

/// `Σ c_k · D_k`. All classes must share space and genus. Unknown
/// coefficients absorb everything except a zero multiplier.
pub fn linear_combine(terms: &[(Rational, &AnyClass)]) -> Result<AnyClass> {
    let (_, first) = terms
        .first()
        .ok_or_else(|| Error::Domain("empty linear combination".into()))?;
    let mut acc = PartialDivisorClass::zero(first.space(), first.genus())?;
    for (c, class) in terms {
        acc = acc.add(&class.to_partial().scale(c))?;
    }
    // A partial input keeps the result partial even if every unknown was
    // multiplied by zero.
    if terms.iter().any(|(_, c)| matches!(c, AnyClass::Partial(_))) {
        Ok(AnyClass::Partial(acc))
    } else {
        acc.to_full()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_partial(), f)
    }
}

impl fmt::Display for PointedDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_partial(), f)
    }
}

impl fmt::Display for PartialDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (b, c) in &self.coeffs {
            match c {
                Coeff::Unknown => {
                    write!(f, "{}?{b}", if first { "" } else { " + " })?;
                }
                Coeff::Known(r) => {
                    let sign = if r.is_negative() { "-" } else { "+" };
                    if first {
                        if r.is_negative() {
                            f.write_str("-")?;
                        }
                    } else {
                        write!(f, " {sign} ")?;
                    }
                    let mag = r.abs();
                    if mag == Rational::one() {
                        write!(f, "{b}")?;
                    } else {
                        write!(f, "{mag}{b}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for AnyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyClass::Full(c) => c.fmt(f),
            AnyClass::Pointed(c) => c.fmt(f),
            AnyClass::Partial(c) => c.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn k(n: i64) -> Coeff {
        Coeff::Known(r(n))
    }

    fn k3_like() -> AnyClass {
        make_class(
            Space::Unpointed,
            10,
            &[
                (Basis::Lambda, k(7)),
                (Basis::Delta(0), k(-1)),
                (Basis::Delta(1), k(-5)),
                (Basis::Delta(2), k(-9)),
                (Basis::Delta(3), Coeff::Unknown),
                (Basis::Delta(4), Coeff::Unknown),
                (Basis::Delta(5), Coeff::Unknown),
            ],
        )
        .unwrap()
    }

    #[test]
    fn make_class_cases() {
        let k3 = k3_like();
        assert!(matches!(k3, AnyClass::Partial(_)));
        assert_eq!(k3.coefficient(Basis::Delta(0)).unwrap(), k(-1));
        assert_eq!(k3.coefficient(Basis::Delta(4)).unwrap(), Coeff::Unknown);

        let zero = make_class(Space::Unpointed, 3, &[]).unwrap();
        assert_eq!(zero, AnyClass::Full(DivisorClass::zero(3).unwrap()));
        assert_eq!(zero.coefficient(Basis::Lambda).unwrap(), k(0));

        assert!(matches!(
            make_class(Space::Unpointed, 4, &[(Basis::Delta(3), k(1))]),
            Err(Error::InvalidBasis { .. })
        ));
        assert!(make_class(Space::Pointed, 4, &[(Basis::Delta(3), k(1))]).is_ok());
        assert!(make_class(Space::Pointed, 4, &[(Basis::Delta(4), k(1))]).is_err());
        assert!(make_class(Space::Unpointed, 4, &[(Basis::Psi, k(1))]).is_err());
        assert!(matches!(
            make_class(Space::Unpointed, 1, &[]),
            Err(Error::InvalidGenus(..))
        ));
    }

    #[test]
    fn combine_cancels_and_scales() {
        let l = make_class(Space::Unpointed, 5, &[(Basis::Lambda, k(1))]).unwrap();
        let z = linear_combine(&[(r(1), &l), (r(-1), &l)]).unwrap();
        assert_eq!(z, AnyClass::Full(DivisorClass::zero(5).unwrap()));

        let bn = AnyClass::Full(DivisorClass::from_ab(5, r(8), vec![r(1), r(4), r(6)]).unwrap());
        let twice = linear_combine(&[(r(2), &bn)]).unwrap();
        assert_eq!(
            twice,
            AnyClass::Full(DivisorClass::from_ab(5, r(16), vec![r(2), r(8), r(12)]).unwrap())
        );
    }

    #[test]
    fn combine_unknown_absorption() {
        let k3 = k3_like();
        let zeroed = linear_combine(&[(r(0), &k3)]).unwrap();
        assert_eq!(zeroed.coefficient(Basis::Delta(4)).unwrap(), k(0));
        let halved = linear_combine(&[(Rational::frac(1, 2), &k3)]).unwrap();
        assert_eq!(halved.coefficient(Basis::Delta(4)).unwrap(), Coeff::Unknown);
        let other = AnyClass::Full(DivisorClass::zero(10).unwrap());
        let sum = linear_combine(&[(r(1), &k3), (r(3), &other)]).unwrap();
        assert_eq!(sum.coefficient(Basis::Delta(5)).unwrap(), Coeff::Unknown);
        assert_eq!(sum.coefficient(Basis::Lambda).unwrap(), k(7));
    }

    #[test]
    fn combine_rejects_mismatch() {
        let a = AnyClass::Full(DivisorClass::zero(4).unwrap());
        let b = AnyClass::Full(DivisorClass::zero(5).unwrap());
        let p = AnyClass::Pointed(PointedDivisorClass::zero(4).unwrap());
        assert!(matches!(
            linear_combine(&[(r(1), &a), (r(1), &b)]),
            Err(Error::GenusMismatch { .. })
        ));
        assert!(matches!(
            linear_combine(&[(r(1), &a), (r(1), &p)]),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn slope_examples() {
        let bn = DivisorClass::from_ab(5, r(8), vec![r(1), r(4), r(6)]).unwrap();
        assert_eq!(bn.slope(), Slope::Finite(r(8)));
        let d = DivisorClass::from_ab(3, r(10), vec![r(2), r(1)]).unwrap();
        assert_eq!(d.slope(), Slope::Finite(r(10)));
        let d = DivisorClass::from_ab(3, r(5), vec![r(1), r(-1)]).unwrap();
        assert_eq!(d.slope(), Slope::Infinity);
        assert_eq!(DivisorClass::zero(7).unwrap().slope(), Slope::Infinity);
        let neg = DivisorClass::from_ab(3, r(-4), vec![r(2), r(1)]).unwrap();
        assert_eq!(neg.slope(), Slope::Finite(r(-4)));
        assert_eq!(
            AnyClass::Partial(PartialDivisorClass::zero(Space::Unpointed, 3).unwrap()).slope(),
            Err(Error::PartialClass)
        );
    }

    #[test]
    fn coefficient_rejects_foreign_basis() {
        let d = DivisorClass::zero(4).unwrap();
        assert!(d.coefficient(Basis::Psi).is_err());
        assert!(d.coefficient(Basis::Delta(3)).is_err());
        let p = PointedDivisorClass::zero(4).unwrap();
        assert_eq!(p.coefficient(Basis::Delta(3)).unwrap(), k(0));
    }

    #[test]
    fn basis_keys_roundtrip() {
        for b in basis(Space::Pointed, 12) {
            assert_eq!(Basis::from_key(&b.key()), Some(b));
        }
        assert_eq!(Basis::from_key("delta"), None);
        assert_eq!(Basis::from_key("mu"), None);
    }

    #[test]
    fn display() {
        let bn = DivisorClass::from_ab(5, r(8), vec![r(1), r(4), r(6)]).unwrap();
        assert_eq!(bn.to_string(), "8λ - δ_0 - 4δ_1 - 6δ_2");
        assert_eq!(
            k3_like().to_string(),
            "7λ - δ_0 - 5δ_1 - 9δ_2 + ?δ_3 + ?δ_4 + ?δ_5"
        );
    }
}
