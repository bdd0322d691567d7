//! Existence screen for a very ample adjoint preimage: given `(S, L)`, can
//! `L = K + M` hold for some very ample `M`?
//!
//! The candidate `M = L - K` is computed exactly (lattice arithmetic when a
//! model is available, the numerical identities `M^2 = 3d + 4 - 4g + K^2`
//! and `g(M) = d - g + 2` otherwise) and run through necessary conditions
//! for very ampleness: positivity against known curves and a genus screen
//! over every possible ambient dimension. A candidate failing any screen is
//! excluded; one passing all of them stays open, since the screens are only
//! necessary.

use serde::Serialize;

use super::Trail;
use crate::error::Error;
use crate::invariants::{castelnuovo_bound, sectional_genus};
use crate::normality::TrailEntry;
use crate::surface_models::{DivisorClass, SurfaceModel};

#[derive(Debug, Clone, Serialize)]
pub struct AdjointCandidate {
    /// Coefficients over the model basis, when lattice data was available.
    pub class: Option<Vec<i64>>,
    pub rendered: Option<String>,
    pub self_intersection: i64,
    pub sectional_genus: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjointOutcome {
    /// No very ample class of these invariants can exist.
    Excluded,
    /// Every necessary screen passes; existence is not decided here.
    Open,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdjointReport {
    pub candidate: AdjointCandidate,
    pub outcome: AdjointOutcome,
    pub trail: Vec<TrailEntry>,
}

/// Candidate invariants from `(d, g, K^2)` alone:
/// `M^2 = (L - K)^2 = 3d + 4 - 4g + K^2` and `g(M) = d - g + 2`.
pub fn adjoint_candidate_numeric(d: i64, g: i64, k_squared: i64) -> (i64, i64) {
    (3 * d + 4 - 4 * g + k_squared, d - g + 2)
}

/// Screens a candidate known only through `(d, g, K^2)`.
pub fn adjoint_preimage_numeric(d: i64, g: i64, k_squared: i64) -> Result<AdjointReport, Error> {
    let (m2, mg) = adjoint_candidate_numeric(d, g, k_squared);
    let mut trail = Trail::new();
    trail.note(
        "adjoint-candidate-arithmetic",
        format!("d = {d}, g = {g}, K^2 = {k_squared}"),
        format!("M = L - K has M^2 = {m2}, g(M) = {mg}"),
    );
    let candidate = AdjointCandidate {
        class: None,
        rendered: None,
        self_intersection: m2,
        sectional_genus: mg,
    };
    screen(candidate, trail)
}

/// Screens a candidate on a full lattice model.
pub fn adjoint_preimage_check(
    model: &SurfaceModel,
    l: &DivisorClass,
) -> Result<AdjointReport, Error> {
    let k = model.canonical_class();
    let m = l - &k;
    let m2 = model.intersect(&m, &m)?;
    let mg = sectional_genus(model, &m)?;
    let mut trail = Trail::new();
    trail.note(
        "adjoint-candidate-arithmetic",
        format!("L = {}", model.format_class(l)),
        format!(
            "M = L - K = {} with M^2 = {m2}, g(M) = {mg}",
            model.format_class(&m)
        ),
    );

    // positivity against the curves the model certifies: exceptional curves,
    // fibers, and the fiber through each blown-up point
    let mut failures: Vec<String> = Vec::new();
    for i in 0..model.blowups() {
        let e = model.exceptional(i)?;
        let v = model.intersect(&m, &e)?;
        if v < 1 {
            failures.push(format!("M.E{} = {v}", i + 1));
        }
    }
    if model.is_ruled_base() {
        let fiber = model.fiber()?;
        let v = model.intersect(&m, &fiber)?;
        if v < 1 {
            failures.push(format!("M.f = {v}"));
        }
        for i in 0..model.blowups() {
            let through = &fiber - &model.exceptional(i)?;
            let v = model.intersect(&m, &through)?;
            if v < 1 {
                failures.push(format!("M.(f - E{}) = {v}", i + 1));
            }
        }
    }
    if failures.is_empty() {
        trail.note(
            "adjoint-positivity",
            "exceptional curves, fibers, fibers through blown-up points",
            "all positive",
        );
    } else {
        trail.note(
            "adjoint-positivity",
            failures.join(", "),
            "very ampleness fails",
        );
        let candidate = AdjointCandidate {
            class: Some(m.coeffs().to_vec()),
            rendered: Some(model.format_class(&m)),
            self_intersection: m2,
            sectional_genus: mg,
        };
        return Ok(AdjointReport {
            candidate,
            outcome: AdjointOutcome::Excluded,
            trail: trail.into_entries(),
        });
    }

    let candidate = AdjointCandidate {
        class: Some(m.coeffs().to_vec()),
        rendered: Some(model.format_class(&m)),
        self_intersection: m2,
        sectional_genus: mg,
    };
    screen(candidate, trail)
}

/// The degree/genus screen shared by both entry points.
fn screen(candidate: AdjointCandidate, mut trail: Trail) -> Result<AdjointReport, Error> {
    let d = candidate.self_intersection;
    let g = candidate.sectional_genus;
    if d <= 0 {
        trail.note(
            "adjoint-candidate-arithmetic",
            format!("M^2 = {d} <= 0"),
            "an ample class has positive self-intersection; excluded",
        );
        return Ok(AdjointReport {
            candidate,
            outcome: AdjointOutcome::Excluded,
            trail: trail.into_entries(),
        });
    }
    let mut admissible: Vec<i64> = Vec::new();
    for ambient in 3..=(d + 1) {
        if ambient == 3 {
            // a surface in P^3 is a hypersurface of degree M^2 whose sections
            // are plane curves of exactly this genus
            if g == (d - 1) * (d - 2) / 2 {
                admissible.push(ambient);
            }
        } else if d >= ambient - 1 && g <= castelnuovo_bound(d, ambient)? {
            admissible.push(ambient);
        }
    }
    if admissible.is_empty() {
        trail.note(
            "adjoint-genus-screen",
            format!("M^2 = {d}, g(M) = {g}"),
            "no ambient dimension admits these invariants; excluded",
        );
        return Ok(AdjointReport {
            candidate,
            outcome: AdjointOutcome::Excluded,
            trail: trail.into_entries(),
        });
    }
    trail.note(
        "adjoint-genus-screen",
        format!("M^2 = {d}, g(M) = {g}"),
        format!("admissible ambient dimensions {admissible:?}"),
    );
    trail.note(
        "adjoint-open-case",
        "all necessary screens passed",
        "existence not decided by the numerical screens",
    );
    Ok(AdjointReport {
        candidate,
        outcome: AdjointOutcome::Open,
        trail: trail.into_entries(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_models::{BaseSurface, SurfaceModel};

    #[test]
    fn elliptic_blowup_case_stays_open() {
        let m = SurfaceModel::new(BaseSurface::Ruled { q: 1, e: 0 }, 3).unwrap();
        let l = m.class(&[2, 3, -1, -1, -1]).unwrap();
        let report = adjoint_preimage_check(&m, &l).unwrap();
        assert_eq!(report.outcome, AdjointOutcome::Open);
        assert_eq!(report.candidate.self_intersection, 12);
        assert_eq!(report.candidate.sectional_genus, 7);
        assert_eq!(report.candidate.class, Some(vec![4, 3, -2, -2, -2]));
    }

    #[test]
    fn hirzebruch_family_is_excluded() {
        for e in 0..=5 {
            let m = SurfaceModel::new(BaseSurface::Hirzebruch { e }, 15).unwrap();
            let mut coeffs = vec![2, 6 + e];
            coeffs.extend(std::iter::repeat_n(-1, 15));
            let l = m.class(&coeffs).unwrap();
            let report = adjoint_preimage_check(&m, &l).unwrap();
            assert_eq!(report.outcome, AdjointOutcome::Excluded, "e = {e}");
            assert_eq!(report.candidate.self_intersection, 4);
            assert_eq!(report.candidate.sectional_genus, 6);
        }
    }

    #[test]
    fn plane_blowup_candidate_is_excluded_by_the_genus_screen() {
        let m = SurfaceModel::new(BaseSurface::Plane, 10).unwrap();
        let mut coeffs = vec![13];
        coeffs.extend(std::iter::repeat_n(-4, 10));
        let l = m.class(&coeffs).unwrap();
        let report = adjoint_preimage_check(&m, &l).unwrap();
        assert_eq!(report.candidate.self_intersection, 6);
        assert_eq!(report.candidate.sectional_genus, 5);
        assert_eq!(report.outcome, AdjointOutcome::Excluded);
    }

    #[test]
    fn numeric_route_matches_lattice_route() {
        // same invariants as the Hirzebruch family: chi = 1, K^2 = -7
        let (m2, mg) = adjoint_candidate_numeric(9, 5, -7);
        assert_eq!((m2, mg), (4, 6));
        let report = adjoint_preimage_numeric(9, 5, -7).unwrap();
        assert_eq!(report.outcome, AdjointOutcome::Excluded);
    }

    #[test]
    fn negative_candidate_square_is_excluded_immediately() {
        // minimal general type row: K^2 = 1 gives M^2 = 0
        let report = adjoint_preimage_numeric(9, 8, 1).unwrap();
        assert_eq!(report.candidate.self_intersection, 0);
        assert_eq!(report.outcome, AdjointOutcome::Excluded);
    }
}
