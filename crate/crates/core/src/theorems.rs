//! Mechanical derivation of the coefficient inequalities for effective
//! divisors on `M̄_g`, the slope thresholds they imply, and the reports
//! built on them.
//!
//! Every statement is checked in exact arithmetic. Two inputs are geometric
//! and enter only as stated assumptions of [`derive_b10_bound`]:
//! the decomposition `j^*(D) = m·π^*(K̄) + E` with `E` effective, and the
//! nonnegativity of the `λ`-coefficient of an effective class on `M̄_g`.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::catalog::{
    brill_noether_slope, canonical_pointed, is_prime, k3_divisor, petri_slope, weierstrass,
    Convention,
};
use crate::curves::{glued_pencil, intersect, pointed_k3_pencil};
use crate::error::{Error, Result};
use crate::picard::{linear_combine, AnyClass, Basis, ClassView, DivisorClass, Slope, Space};
use crate::pushpull::{
    pull_attach10, pull_forgetful_partial, push_quadratic, push_quadratic_partial, ATTACH_GENUS,
};
use crate::scalar::{GenusPolynomial, Rational};

/// Largest genus for which the slope certificate is available.
pub const MAX_CERTIFIED_GENUS: u32 = 23;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The inequality holds with equality.
    Equality,
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        !matches!(self, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Equality => "equality",
        })
    }
}

/// Outcome of one exact comparison `left relation right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub left: Rational,
    pub relation: Relation,
    pub right: Rational,
    pub witness: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<CheckReport>,
}

impl CheckReport {
    pub fn compare(
        id: impl Into<String>,
        left: Rational,
        relation: Relation,
        right: Rational,
        witness: impl Into<String>,
    ) -> Self {
        let verdict = match (relation, left.cmp(&right)) {
            (_, std::cmp::Ordering::Equal) if relation != Relation::Eq => Verdict::Equality,
            (Relation::Eq, std::cmp::Ordering::Equal) => Verdict::Pass,
            (Relation::Ge, std::cmp::Ordering::Greater)
            | (Relation::Le, std::cmp::Ordering::Less) => Verdict::Pass,
            _ => Verdict::Fail,
        };
        CheckReport {
            id: id.into(),
            left,
            relation,
            right,
            witness: witness.into(),
            verdict,
            notes: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_details(mut self, details: Vec<CheckReport>) -> Self {
        self.details = details;
        self
    }

    pub fn is_ok(&self) -> bool {
        self.verdict.is_ok()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {} ({})",
            self.verdict, self.id, self.left, self.relation, self.right, self.witness
        )
    }
}

/// `a` and `b_i` of `D = aλ - Σ b_iδ_i`, failing on unknowns.
fn a_of(d: &dyn ClassView) -> Result<Rational> {
    d.known(Basis::Lambda)
}

fn b_of(d: &dyn ClassView, i: u32) -> Result<Rational> {
    Ok(-d.known(Basis::Delta(i))?)
}

fn require_unpointed(d: &dyn ClassView) -> Result<()> {
    if d.space() != Space::Unpointed {
        return Err(Error::SpaceMismatch {
            left: Space::Unpointed,
            right: d.space(),
        });
    }
    Ok(())
}

/// Lower bound for `b_i` from intersecting with the glued pencil `B_i`:
/// `(6i+18)b_0 - (i+1)a` for `i >= 2`, `12b_0 - a` for `i = 1`.
pub fn pencil_lower_bound(i: u32, a: &Rational, b0: &Rational) -> Rational {
    let (lam, d0) = if i == 1 {
        (1, 12)
    } else {
        (i as i64 + 1, 6 * i as i64 + 18)
    };
    Rational::from(d0) * b0 - Rational::from(lam) * a
}

/// `b_i >= (6i+18)b_0 - (i+1)a` (`i >= 2`) or `b_1 >= 12b_0 - a`.
/// For `i = 10` this assumes `D` does not contain the locus swept by the
/// glued genus-10 pencils; see [`check_thm1b`] otherwise.
pub fn check_pencil_inequality(d: &dyn ClassView, i: u32) -> Result<CheckReport> {
    require_unpointed(d)?;
    let curve = glued_pencil(i, d.genus())?;
    let a = a_of(d)?;
    let b0 = b_of(d, 0)?;
    let bi = b_of(d, i)?;
    let right = pencil_lower_bound(i, &a, &b0);
    let id = if i == 1 {
        "b_1 >= 12 b_0 - a".to_string()
    } else {
        format!("b_{i} >= {} b_0 - {} a", 6 * i + 18, i + 1)
    };
    let mut report = CheckReport::compare(id, bi, Relation::Ge, right, curve.name());
    if i == 10 {
        report = report
            .with_note("assumes D does not contain the divisor swept by glued genus-10 K3 pencils");
    }
    Ok(report)
}

/// Unknowns of the genus-10 elimination: `D = aλ - b_0δ_0 - b_10δ_10 - …`
/// and the multiplicity `m` of `π^*(K̄)` in `j^*(D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Symbol {
    A,
    B0,
    B10,
    M,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::A, Symbol::B0, Symbol::B10, Symbol::M];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::A => "a",
            Symbol::B0 => "b_0",
            Symbol::B10 => "b_10",
            Symbol::M => "m",
        })
    }
}

/// Homogeneous linear form in `a, b_0, b_10, m`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LinearForm([Rational; 4]);

impl LinearForm {
    pub fn from_ints(a: i64, b0: i64, b10: i64, m: i64) -> Self {
        LinearForm([a, b0, b10, m].map(Rational::from))
    }

    pub fn coeff(&self, s: Symbol) -> &Rational {
        &self.0[s.index()]
    }

    pub fn eval(&self, values: &[Rational; 4]) -> Rational {
        self.0.iter().zip(values).map(|(c, v)| c * v).sum()
    }

    fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    fn scale(&self, c: &Rational) -> LinearForm {
        LinearForm(std::array::from_fn(|k| &self.0[k] * c))
    }

    fn without(&self, s: Symbol) -> LinearForm {
        let mut out = self.clone();
        out.0[s.index()] = Rational::zero();
        out
    }

    /// Recovers a linear form by probing `f` at the origin and unit vectors;
    /// fails if `f` is not homogeneous.
    fn probe(mut f: impl FnMut(&[Rational; 4]) -> Result<Rational>) -> Result<LinearForm> {
        let zero: [Rational; 4] = Default::default();
        let c = f(&zero)?;
        if !c.is_zero() {
            return Err(Error::Consistency(format!(
                "expected a homogeneous form, constant term {c}"
            )));
        }
        let mut out = LinearForm::default();
        for s in Symbol::ALL {
            let mut e = zero.clone();
            e[s.index()] = Rational::one();
            out.0[s.index()] = f(&e)?;
        }
        Ok(out)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in Symbol::ALL {
            let c = self.coeff(s);
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}·{s}")?;
            } else if c.is_negative() {
                write!(f, " - {}·{s}", c.abs())?;
            } else {
                write!(f, " + {c}·{s}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Genus used for the class `D` when probing the genus-10 elimination;
/// any `g >= 20` gives the same pullback.
const PROBE_GENUS: u32 = 20;

/// `E = j^*(D) - m·π^*(K̄)` on `M̄_{10,1}` for `D = aλ - b_0δ_0 - b_10δ_10`.
/// Its boundary classes `δ_1 … δ_9` are unknown.
pub fn residual_class(values: &[Rational; 4]) -> Result<AnyClass> {
    let [a, b0, b10, m] = values;
    let mut d = DivisorClass::zero(PROBE_GENUS)?;
    d.set(Basis::Lambda, a.clone())?;
    d.set(Basis::Delta(0), -b0)?;
    d.set(Basis::Delta(ATTACH_GENUS), -b10)?;
    let pulled = AnyClass::Partial(pull_attach10(&d)?);
    let k3_up = AnyClass::Partial(pull_forgetful_partial(&k3_divisor())?);
    linear_combine(&[(Rational::one(), &pulled), (-m, &k3_up)])
}

/// `λ`- and `δ_0`-coefficients of `π_*(W̄·E)` on `M̄_10`, computed through
/// the pushforward engine.
pub fn pushed_residual_coefficients(values: &[Rational; 4]) -> Result<(Rational, Rational)> {
    let e = residual_class(values)?;
    let e = e
        .as_partial()
        .ok_or_else(|| Error::Consistency("residual class should be partial".into()))?;
    let pushed = push_quadratic_partial(&weierstrass(ATTACH_GENUS)?, e)?;
    Ok((pushed.known(Basis::Lambda)?, pushed.known(Basis::Delta(0))?))
}

/// `λ` form `642b_10 + 990(a - 7m)` expected for `π_*(W̄·E)`.
pub fn expected_lambda_form() -> LinearForm {
    LinearForm::from_ints(990, 0, 642, -6930)
}

/// `δ_0` form `-55(b_10 + 18(b_0 - m))` expected for `π_*(W̄·E)`.
pub fn expected_delta0_form() -> LinearForm {
    LinearForm::from_ints(0, -990, -55, 990)
}

/// Output of [`derive_b10_bound`]: `b_10 >= alpha·b_0 - beta·a` whenever
/// `b_10 < 78b_0 - 11a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct B10Bound {
    pub alpha: Rational,
    pub beta: Rational,
    /// `-R·j^*(D)`, a lower bound for `m`.
    pub m_lower: LinearForm,
    /// `λ`-coefficient of `π_*(W̄·E)`, required nonnegative.
    pub lambda_form: LinearForm,
    pub delta0_form: LinearForm,
    pub assumptions: Vec<String>,
}

/// Eliminates `m` between `m >= -R·j^*(D)` and `[λ]π_*(W̄·E) >= 0`.
/// All coefficients are recomputed through the engine and then compared to
/// the expected display; a mismatch is an error carrying both forms.
pub fn derive_b10_bound() -> Result<B10Bound> {
    let r = pointed_k3_pencil();
    let m_lower = LinearForm::probe(|v| {
        let [a, b0, b10, _] = v;
        let mut d = DivisorClass::zero(PROBE_GENUS)?;
        d.set(Basis::Lambda, a.clone())?;
        d.set(Basis::Delta(0), -b0)?;
        d.set(Basis::Delta(ATTACH_GENUS), -b10)?;
        Ok(-intersect(&r, &pull_attach10(&d)?)?)
    })?;
    let lambda_form = LinearForm::probe(|v| Ok(pushed_residual_coefficients(v)?.0))?;
    let delta0_form = LinearForm::probe(|v| Ok(pushed_residual_coefficients(v)?.1))?;

    for (name, got, want) in [
        ("λ", &lambda_form, expected_lambda_form()),
        ("δ_0", &delta0_form, expected_delta0_form()),
    ] {
        if *got != want {
            return Err(Error::Consistency(format!(
                "{name}-coefficient of π_*(W̄·E): engine {got}, expected {want}"
            )));
        }
    }
    if m_lower != LinearForm::from_ints(-11, 78, -1, 0) {
        return Err(Error::Consistency(format!(
            "-R·j^*(D): engine {m_lower}, expected 78·b_0 - 11·a - b_10"
        )));
    }

    // λ-form >= 0 with negative m-coefficient c_m gives m <= L'/(-c_m),
    // L' = λ-form without m. Then m_lower <= m requires L' + c_m·m_lower >= 0.
    let c_m = lambda_form.coeff(Symbol::M).clone();
    if !c_m.is_negative() {
        return Err(Error::Consistency(format!(
            "m enters the λ-form with coefficient {c_m}, need < 0"
        )));
    }
    let combined = lambda_form.without(Symbol::M).add(&m_lower.scale(&c_m));
    let k10 = combined.coeff(Symbol::B10).clone();
    if !k10.is_positive() {
        return Err(Error::Consistency(format!(
            "b_10 coefficient {k10} after elimination, need > 0"
        )));
    }
    let alpha = (-combined.coeff(Symbol::B0)).checked_div(&k10)?;
    let beta = combined.coeff(Symbol::A).checked_div(&k10)?;

    Ok(B10Bound {
        alpha,
        beta,
        m_lower,
        lambda_form,
        delta0_form,
        assumptions: vec![
            "j^*(D) = m·π^*(K̄) + E with E effective and m >= -R·j^*(D) > 0".into(),
            "π_*(W̄·E) is effective on M_10 for effective E".into(),
            "the λ-coefficient of an effective class on M_g is nonnegative".into(),
        ],
    })
}

fn cached_b10_bound() -> Result<&'static B10Bound> {
    static CELL: OnceLock<std::result::Result<B10Bound, Error>> = OnceLock::new();
    CELL.get_or_init(derive_b10_bound)
        .as_ref()
        .map_err(Clone::clone)
}

/// Largest `a/b_0` for which the inequalities force `b_i >= b_0`.
pub fn corollary_threshold(i: u32) -> Result<Rational> {
    match i {
        1 => Ok(Rational::from(11)),
        2..=9 | 11 => Rational::new(6 * i as i64 + 17, i as i64 + 1),
        10 => {
            let b = cached_b10_bound()?;
            let branch2 = (&b.alpha - Rational::one()).checked_div(&b.beta)?;
            Ok(Rational::frac(77, 11).min(branch2))
        }
        _ => Err(Error::Domain(format!("threshold index {i} outside 1..=11"))),
    }
}

/// Certifies `s(D) = a/b_0` for genus at most 23 by checking
/// `a/b_0 <= corollary_threshold(i)` for every `1 <= i <= ⌊g/2⌋`.
pub fn certify_slope_equals_a_over_b0(d: &dyn ClassView) -> Result<CheckReport> {
    require_unpointed(d)?;
    let g = d.genus();
    if g > MAX_CERTIFIED_GENUS {
        return Err(Error::OutsideScope(format!(
            "genus {g} > {MAX_CERTIFIED_GENUS}"
        )));
    }
    let a = a_of(d)?;
    let b0 = b_of(d, 0)?;
    if !a.is_positive() || !b0.is_positive() {
        return Err(Error::Domain(format!(
            "need a > 0 and b_0 > 0, got a = {a}, b_0 = {b0}"
        )));
    }
    let ratio = a.checked_div(&b0)?;
    let mut details = Vec::new();
    for i in 1..=g / 2 {
        let t = corollary_threshold(i)?;
        details.push(CheckReport::compare(
            format!("a/b_0 <= threshold({i})"),
            ratio.clone(),
            Relation::Le,
            t,
            format!("glued:{i}:{g}"),
        ));
    }
    let (binding_i, right) = (1..=g / 2)
        .zip(details.iter().map(|r| r.right.clone()))
        .min_by(|x, y| x.1.cmp(&y.1))
        .expect("g >= 2");
    let mut report = CheckReport::compare(
        "s(D) = a/b_0",
        ratio.clone(),
        Relation::Le,
        right,
        format!("binding threshold at i = {binding_i}"),
    );
    if details.iter().all(CheckReport::is_ok) {
        report = report.with_note(format!("slope = {ratio}"));
    } else {
        report.verdict = Verdict::Fail;
    }
    Ok(report.with_details(details))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    BrillNoether,
    Petri,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::BrillNoether => "brill_noether",
            BoundSource::Petri => "petri",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonRow {
    pub g: u32,
    pub upper_bound_source: BoundSource,
    /// Best available upper bound for `s_g`.
    pub u_g: Rational,
    pub binding_i: u32,
    pub threshold: Rational,
    pub epsilon_g: Rational,
}

impl EpsilonRow {
    pub fn is_valid(&self) -> bool {
        self.epsilon_g.is_positive()
    }
}

/// Best upper bound on `s_g`: the Brill–Noether slope when `g+1` is
/// composite, the Petri slope when `g` is even, whichever is smaller.
pub fn slope_upper_bound(g: u32) -> Result<(BoundSource, Rational)> {
    let bn = (!is_prime(g + 1)).then(|| (BoundSource::BrillNoether, brill_noether_slope(g)));
    let petri = if g.is_multiple_of(2) {
        Some((BoundSource::Petri, petri_slope(g)?))
    } else {
        None
    };
    match (bn, petri) {
        (Some(x), Some(y)) => Ok(if y.1 < x.1 { y } else { x }),
        (Some(x), None) | (None, Some(x)) => Ok(x),
        (None, None) => Err(Error::Domain(format!(
            "no upper bound for s_{g}: g odd and g+1 prime"
        ))),
    }
}

pub fn epsilon_row(g: u32) -> Result<EpsilonRow> {
    let (source, u_g) = slope_upper_bound(g)?;
    let mut best: Option<(u32, Rational)> = None;
    for i in 1..=g / 2 {
        let t = corollary_threshold(i)?;
        if best.as_ref().is_none_or(|(_, b)| t < *b) {
            best = Some((i, t));
        }
    }
    let (binding_i, threshold) = best.ok_or(Error::InvalidGenus(g, "genus >= 2"))?;
    let epsilon_g = &threshold - &u_g;
    Ok(EpsilonRow {
        g,
        upper_bound_source: source,
        u_g,
        binding_i,
        threshold,
        epsilon_g,
    })
}

/// One row per genus in `g_min..=g_max`, `3 <= g_min <= g_max <= 23`.
pub fn epsilon_table(g_min: u32, g_max: u32) -> Result<Vec<EpsilonRow>> {
    if g_min < 3 || g_min > g_max {
        return Err(Error::Domain(format!("bad genus range {g_min}..={g_max}")));
    }
    if g_max > MAX_CERTIFIED_GENUS {
        return Err(Error::OutsideScope(format!(
            "genus {g_max} > {MAX_CERTIFIED_GENUS}"
        )));
    }
    (g_min..=g_max).map(epsilon_row).collect()
}

/// For `D` on `M̄_g`, `g >= 20`: either `b_10 >= 78b_0 - 11a` or
/// `b_10 >= alpha·b_0 - beta·a`.
pub fn check_thm1b(d: &dyn ClassView) -> Result<CheckReport> {
    require_unpointed(d)?;
    if d.genus() < 2 * ATTACH_GENUS {
        return Err(Error::InvalidGenus(d.genus(), "genus >= 20"));
    }
    let a = a_of(d)?;
    let b0 = b_of(d, 0)?;
    let b10 = b_of(d, ATTACH_GENUS)?;
    let bound = cached_b10_bound()?;
    let branch1 = CheckReport::compare(
        "b_10 >= 78 b_0 - 11 a",
        b10.clone(),
        Relation::Ge,
        pencil_lower_bound(10, &a, &b0),
        format!("glued:10:{}", d.genus()),
    );
    let branch2 = CheckReport::compare(
        format!("b_10 >= {} b_0 - {} a", bound.alpha, bound.beta),
        b10,
        Relation::Ge,
        &bound.alpha * &b0 - &bound.beta * &a,
        "pointed-k3 + Weierstrass pushforward",
    );
    let mut top = if branch1.is_ok() {
        let mut t = branch1.clone();
        t.witness = format!("branch 1 ({})", t.witness);
        t
    } else {
        let mut t = branch2.clone();
        t.witness = format!("branch 2 ({})", t.witness);
        t
    };
    top.id = "b_10 bound (either branch)".into();
    Ok(top.with_details(vec![branch1, branch2]))
}

/// Checks that `π_*(W̄²) = aλ - Σ b_iδ_i` is dominated coefficient-wise by
/// a multiple of the Brill–Noether class: `b_0/a <= (g+1)/(6g+18)` and
/// `b_i/a <= i(g-i)/(g+3)`. The top-level comparison is the largest of
/// the ratios `(b_i/a) / bound_i` against 1.
pub fn prop_effectivity_report(g: u32) -> Result<CheckReport> {
    if g < 4 {
        return Err(Error::InvalidGenus(g, "genus >= 4"));
    }
    let w = weierstrass(g)?;
    let p = push_quadratic(&w, &w)?;
    let a = p.a().clone();
    let gi = g as i64;
    let mut details = Vec::new();
    let mut worst = Rational::zero();
    for i in 0..=g / 2 {
        let bound = if i == 0 {
            Rational::new(gi + 1, 6 * gi + 18)?
        } else {
            Rational::new((i * (g - i)) as i64, gi + 3)?
        };
        let ratio = p.b(i)?.checked_div(&a)?;
        worst = worst.max(ratio.checked_div(&bound)?);
        details.push(CheckReport::compare(
            format!("b_{i}/a <= bound_{i}"),
            ratio,
            Relation::Le,
            bound,
            "brillnoether",
        ));
    }
    let mut report = CheckReport::compare(
        format!("π_*(W̄²) dominated by Brill–Noether class, g = {g}"),
        worst,
        Relation::Le,
        Rational::one(),
        "max_i (b_i/a)/bound_i",
    );
    if is_prime(g + 1) {
        report = report.with_note(format!(
            "g+1 = {} is prime: no Brill–Noether divisor; the ratios are checked formally and effectivity rests on the Petri class",
            g + 1
        ));
    }
    Ok(report.with_details(details))
}

/// `2(13g³+6g²-9g+2) / (g(g+1)(4g+3))`.
pub fn kodaira_printed_slope(g: u32) -> Rational {
    let numerator = kodaira_lambda_polynomial().eval_at(g as i64) * Rational::from(2);
    let g = g as i64;
    numerator
        .checked_div(&Rational::from(g * (g + 1) * (4 * g + 3)))
        .expect("g >= 1")
}

/// `13g³ + 6g² - 9g + 2`.
pub fn kodaira_lambda_polynomial() -> GenusPolynomial {
    GenusPolynomial::from_ints(&[2, -9, 6, 13]).expect("cubic")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KodairaReport {
    pub g: u32,
    pub convention: String,
    pub class: DivisorClass,
    pub slope: Slope,
    pub printed_slope: Rational,
    pub lambda_match: bool,
    pub slope_match: bool,
}

/// `D = π_*(K_{M̄_{g,1}}·W̄)` under the chosen convention, with its slope
/// next to the printed closed form.
pub fn kodaira_slope_report(g: u32, conv: Convention) -> Result<KodairaReport> {
    if !(3..=20).contains(&g) {
        return Err(Error::InvalidGenus(g, "3 <= g <= 20"));
    }
    let class = push_quadratic(&canonical_pointed(g, conv)?, &weierstrass(g)?)?;
    let slope = class.slope();
    let printed_slope = kodaira_printed_slope(g);
    let lambda_match = *class.a() == kodaira_lambda_polynomial().eval_at(g as i64);
    let slope_match = slope.finite() == Some(&printed_slope);
    Ok(KodairaReport {
        g,
        convention: conv.to_string(),
        class,
        slope,
        printed_slope,
        lambda_match,
        slope_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::brill_noether;
    use crate::picard::{Coeff, PartialDivisorClass};

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            CheckReport::compare("x", r(1), Relation::Ge, r(0), "").verdict,
            Verdict::Pass
        );
        assert_eq!(
            CheckReport::compare("x", r(0), Relation::Ge, r(0), "").verdict,
            Verdict::Equality
        );
        assert_eq!(
            CheckReport::compare("x", r(0), Relation::Le, r(1), "").verdict,
            Verdict::Pass
        );
        assert_eq!(
            CheckReport::compare("x", r(2), Relation::Le, r(1), "").verdict,
            Verdict::Fail
        );
        assert_eq!(
            CheckReport::compare("x", r(2), Relation::Eq, r(2), "").verdict,
            Verdict::Pass
        );
        assert_eq!(
            CheckReport::compare("x", r(2), Relation::Eq, r(1), "").verdict,
            Verdict::Fail
        );
    }

    #[test]
    fn pencil_inequality_examples() {
        let k3 = k3_divisor();
        let c1 = check_pencil_inequality(&k3, 1).unwrap();
        assert_eq!(
            (c1.left.clone(), c1.right.clone(), c1.verdict),
            (r(5), r(5), Verdict::Equality)
        );
        let c2 = check_pencil_inequality(&k3, 2).unwrap();
        assert_eq!(
            (c2.left.clone(), c2.right.clone(), c2.verdict),
            (r(9), r(9), Verdict::Equality)
        );
        assert!(matches!(
            check_pencil_inequality(&k3, 3),
            Err(Error::UnknownCoefficient(Basis::Delta(3)))
        ));
        let bn = brill_noether(5).unwrap();
        let c = check_pencil_inequality(&bn, 2).unwrap();
        assert_eq!(
            (c.left, c.right, c.verdict),
            (r(6), r(6), Verdict::Equality)
        );
        assert!(check_pencil_inequality(&bn, 3).is_err());
    }

    #[test]
    fn b10_bound_values() {
        let b = derive_b10_bound().unwrap();
        assert_eq!(b.alpha, q(45045, 631));
        assert_eq!(b.beta, q(6435, 631));
        assert_eq!(b.lambda_form.eval(&[r(1), r(0), r(0), r(0)]), r(990));
        assert_eq!(b.lambda_form, expected_lambda_form());
        assert_eq!(b.delta0_form, expected_delta0_form());
    }

    #[test]
    fn thresholds() {
        assert_eq!(corollary_threshold(1).unwrap(), r(11));
        assert_eq!(corollary_threshold(9).unwrap(), q(71, 10));
        assert_eq!(corollary_threshold(11).unwrap(), q(83, 12));
        assert_eq!(corollary_threshold(10).unwrap(), q(44414, 6435));
        assert!(corollary_threshold(0).is_err());
        assert!(corollary_threshold(12).is_err());
    }

    #[test]
    fn certify_examples() {
        let k3 = certify_slope_equals_a_over_b0(&k3_divisor()).unwrap();
        assert!(k3.is_ok());
        assert_eq!(k3.left, r(7));
        let bn = certify_slope_equals_a_over_b0(&brill_noether(5).unwrap()).unwrap();
        assert!(bn.is_ok());
        assert_eq!(bn.left, r(8));
        assert_eq!(bn.right, q(29, 3));
        let big = PartialDivisorClass::from_entries(
            Space::Unpointed,
            10,
            [
                (Basis::Lambda, Coeff::Known(r(100))),
                (Basis::Delta(0), Coeff::Known(r(-1))),
            ],
        )
        .unwrap();
        let rep = certify_slope_equals_a_over_b0(&big).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        assert_eq!(rep.right, q(47, 6));
        assert!(matches!(
            certify_slope_equals_a_over_b0(&DivisorClass::from_ab(24, r(7), vec![r(1)]).unwrap()),
            Err(Error::OutsideScope(_))
        ));
    }

    #[test]
    fn epsilon_examples() {
        let t = epsilon_table(10, 23).unwrap();
        let row = |g: u32| t.iter().find(|x| x.g == g).unwrap().clone();
        let r23 = row(23);
        assert_eq!(
            (r23.u_g.clone(), r23.binding_i, r23.threshold.clone()),
            (q(13, 2), 10, q(44414, 6435))
        );
        assert_eq!(r23.epsilon_g, q(44414, 6435) - q(13, 2));
        assert_eq!(row(20).u_g, q(46, 7));
        let r10 = row(10);
        assert_eq!(r10.upper_bound_source, BoundSource::Petri);
        assert_eq!(
            (r10.u_g, r10.binding_i, r10.threshold, r10.epsilon_g),
            (q(36, 5), 5, q(47, 6), q(19, 30))
        );
        assert!(epsilon_table(2, 5).is_err());
        assert!(epsilon_table(3, 24).is_err());
        assert!(epsilon_table(9, 8).is_err());
    }

    fn d20(a: i64, b0: i64, b10: i64) -> DivisorClass {
        let mut b = vec![r(0); 11];
        b[0] = r(b0);
        b[10] = r(b10);
        DivisorClass::from_ab(20, r(a), b).unwrap()
    }

    #[test]
    fn thm1b_examples() {
        let c = check_thm1b(&d20(8, 1, 0)).unwrap();
        assert!(c.is_ok());
        assert!(c.witness.starts_with("branch 1"));
        let c = check_thm1b(&d20(0, 1, 72)).unwrap();
        assert!(c.is_ok());
        assert!(c.witness.starts_with("branch 2"));
        assert!(!c.details[0].is_ok());
        let c = check_thm1b(&d20(0, 1, 70)).unwrap();
        assert_eq!(c.verdict, Verdict::Fail);
        assert!(check_thm1b(&DivisorClass::zero(19).unwrap()).is_err());
    }

    #[test]
    fn effectivity_examples() {
        let g4 = prop_effectivity_report(4).unwrap();
        assert!(g4.is_ok());
        assert_eq!(g4.details[0].left, q(5, 54));
        assert_eq!(g4.details[0].right, q(5, 42));
        assert!(!g4.notes.is_empty());
        let g5 = prop_effectivity_report(5).unwrap();
        assert!(g5.is_ok());
        assert_eq!(g5.details[1].left, q(4 * 204, 5 * 6 * 82));
        assert_eq!(g5.details[1].right, q(4, 8));
        assert!(prop_effectivity_report(8).unwrap().is_ok());
        assert!(prop_effectivity_report(3).is_err());
    }

    #[test]
    fn kodaira_examples() {
        let s = kodaira_slope_report(3, Convention::Standard).unwrap();
        assert_eq!(
            s.class,
            DivisorClass::from_ab(3, r(380), vec![r(54), r(84)]).unwrap()
        );
        assert!(s.lambda_match);
        let p = kodaira_slope_report(3, Convention::Paper).unwrap();
        assert_eq!(p.class.delta()[0], r(-6));
        assert_eq!(p.printed_slope, q(38, 9));
        assert!(kodaira_slope_report(2, Convention::Paper).is_err());
        assert!(kodaira_slope_report(21, Convention::Paper).is_err());
    }
}
