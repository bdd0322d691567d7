//! Numerical invariants and bounds: degree, sectional and arithmetic genus,
//! Riemann-Roch on surfaces and curves, delta genus, the Castelnuovo genus
//! bound, Clifford index arithmetic, and the genus constraints used by the
//! classification engine.
//!
//! Every formula is evaluated in exact integer or rational arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::surface_models::{DivisorClass, SurfaceModel};

/// Degree of a polarization: the self-intersection `L^2`.
pub fn degree(model: &SurfaceModel, l: &DivisorClass) -> Result<i64, Error> {
    model.intersect(l, l)
}

/// Sectional genus `g` of `(S, L)`, defined by `2g - 2 = L.(K + L)`.
pub fn sectional_genus(model: &SurfaceModel, l: &DivisorClass) -> Result<i64, Error> {
    let k = model.canonical_class();
    let product = model.intersect(l, &(&k + l))?;
    // adjunction parity: D^2 + D.K is even for every integral class
    debug_assert_eq!(product.rem_euclid(2), 0);
    Ok(1 + product.div_euclid(2))
}

/// Arithmetic genus of a class: `p_a(D) = 1 + (D^2 + D.K) / 2`.
/// The zero class gets the empty-curve convention `p_a(0) = 1`.
pub fn arithmetic_genus(model: &SurfaceModel, d: &DivisorClass) -> Result<i64, Error> {
    let k = model.canonical_class();
    let val = model.intersect(d, d)? + model.intersect(d, &k)?;
    debug_assert_eq!(val.rem_euclid(2), 0);
    Ok(1 + val.div_euclid(2))
}

/// Euler characteristic of a line bundle by surface Riemann-Roch:
/// `chi(D) = chi(O) + D.(D - K) / 2`.
pub fn chi_line_bundle(model: &SurfaceModel, d: &DivisorClass) -> Result<i64, Error> {
    let k = model.canonical_class();
    let val = model.intersect(d, &(d - &k))?;
    debug_assert_eq!(val.rem_euclid(2), 0);
    Ok(model.chi() + val.div_euclid(2))
}

/// Cohomology dossier of a line bundle of degree `d` on a curve of genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveBundleData {
    pub d: i64,
    pub g: i64,
    pub h0: i64,
    pub h1: i64,
}

impl CurveBundleData {
    /// Builds the dossier from `(d, g, h1)` via Riemann-Roch, checking that
    /// the resulting `h0` is admissible and that nonspecial degrees carry
    /// `h1 = 0`.
    pub fn new(d: i64, g: i64, h1: i64) -> Result<Self, Error> {
        let h0 = curve_rr(d, g, h1)?;
        if d > 2 * g - 2 && h1 != 0 {
            return Err(Error::InvalidInput(format!(
                "h1 = {h1} impossible: degree {d} exceeds 2g - 2 = {}",
                2 * g - 2
            )));
        }
        Ok(CurveBundleData { d, g, h0, h1 })
    }
}

/// Riemann-Roch on a curve: `h0 = d - g + 1 + h1`.
pub fn curve_rr(d: i64, g: i64, h1: i64) -> Result<i64, Error> {
    if d < 0 || g < 0 || h1 < 0 {
        return Err(Error::InvalidInput(format!(
            "curve data (d={d}, g={g}, h1={h1}) out of range"
        )));
    }
    let h0 = d - g + 1 + h1;
    if h0 < 0 {
        return Err(Error::InvalidInput(format!(
            "inconsistent curve data: (d={d}, g={g}, h1={h1}) forces h0 = {h0} < 0"
        )));
    }
    Ok(h0)
}

/// Delta genus `2 + d - h0`. May be negative for inconsistent input; callers
/// validating a profile flag that instead of failing here.
pub fn delta_genus(d: i64, h0: i64) -> i64 {
    2 + d - h0
}

/// Castelnuovo's bound on the genus of a nondegenerate degree-`d` curve, in
/// the surface-ambient convention: `n` is the dimension of the projective
/// space holding the *surface*, whose hyperplane section the curve is.
///
/// With `m = floor((d - 2) / (n - 2))` the bound is
/// `m (d - n + 1 - (m - 1)(n - 2)/2)`, evaluated in exact rational
/// arithmetic and floored.
pub fn castelnuovo_bound(d: i64, n: i64) -> Result<i64, Error> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("ambient dimension {n} < 3")));
    }
    if d < n - 1 {
        return Err(Error::InvalidInput(format!(
            "degree {d} below the nondegeneracy minimum {} for ambient dimension {n}",
            n - 1
        )));
    }
    let m = (d - 2).div_euclid(n - 2);
    // 2 m (d - n + 1) - m (m - 1)(n - 2), halved exactly
    let twice = 2 * m * (d - n + 1) - m * (m - 1) * (n - 2);
    debug_assert_eq!(twice.rem_euclid(2), 0);
    Ok(twice.div_euclid(2))
}

/// Clifford index of a line bundle: `cl(H) = d - 2 (h0 - 1)`.
pub fn clifford_index_bundle(d: i64, h0: i64) -> i64 {
    d - 2 * (h0 - 1)
}

/// Upper bound for the Clifford index of a genus-`g` curve:
/// `floor((g - 1) / 2)`, clamped to 0 for `g <= 1`.
pub fn clifford_curve_max(g: i64) -> i64 {
    if g <= 1 {
        0
    } else {
        (g - 1).div_euclid(2)
    }
}

/// Possible sectional genera, as constrained by the section cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenusRange {
    AtMost(i64),
    OneOf(Vec<i64>),
}

impl GenusRange {
    pub fn contains(&self, g: i64) -> bool {
        match self {
            GenusRange::AtMost(max) => g <= *max,
            GenusRange::OneOf(list) => list.contains(&g),
        }
    }
}

/// A genus range together with the precondition under which it is valid.
/// This is a case fact, not a general theorem, and the scope travels with
/// the result so trails can record it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionGenusConstraint {
    pub range: GenusRange,
    pub scope: &'static str,
}

impl SectionGenusConstraint {
    pub fn contains(&self, g: i64) -> bool {
        self.range.contains(g)
    }
}

/// Genus constraint from `h1` of the restricted polarization on a general
/// section.
pub fn genus_range_from_h1(h1_section: i64) -> Result<SectionGenusConstraint, Error> {
    if h1_section < 0 {
        return Err(Error::InvalidInput(format!("h1 = {h1_section} negative")));
    }
    let range = match h1_section {
        0 => GenusRange::AtMost(5),
        1 => GenusRange::OneOf(vec![6, 7]),
        _ => GenusRange::OneOf(vec![7]),
    };
    Ok(SectionGenusConstraint {
        range,
        scope: "degree-9 non-scroll surfaces with h0(L) >= 6",
    })
}

/// `K^2 = 6 chi - 5 g + 23` for smooth nondegenerate degree-9 surfaces in
/// `P^4`, from the Aure-Ranestad classification.
pub fn aure_ranestad_k_squared(g: i64, chi: i64) -> i64 {
    6 * chi - 5 * g + 23
}
