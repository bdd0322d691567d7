//! Normality verdicts for surface scrolls over a smooth curve.

use serde::{Deserialize, Serialize};

use super::{NormalityStatus, NormalityVerdict, SectionClifford, Trail};
use crate::error::Error;
use crate::invariants::{clifford_curve_max, delta_genus};
use crate::ratio::Ratio;

/// Numerical dossier of a scroll `P(E) -> C` with its tautological
/// polarization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScrollSpec {
    pub base_genus: i64,
    pub rank: i64,
    pub degree: i64,
    /// Known lower bound for the minimal quotient slope, if any.
    #[serde(default)]
    pub mu_minus_lower_bound: Option<Ratio>,
    /// Stability of the bundle, if known; a stable bundle has
    /// `mu^- = mu = d / rank`.
    #[serde(default)]
    pub stable: Option<bool>,
    /// Clifford data of the base curve (the general section maps onto it).
    #[serde(default)]
    pub base_clifford: SectionClifford,
    #[serde(default)]
    pub ambient: Option<i64>,
}

impl ScrollSpec {
    pub fn slope(&self) -> Ratio {
        Ratio::new(self.degree, self.rank)
    }
}

/// Least degree of a very ample line bundle on a curve of genus `g`:
/// 1, 3, 5 for the rational, elliptic and genus-2 cases, `g + 3` in general
/// (used only for the small genera where it is sharp).
fn min_very_ample_degree(g: i64) -> i64 {
    match g {
        0 => 1,
        1 => 3,
        _ => 2 * g + 1,
    }
}

pub fn scroll_verdict(spec: &ScrollSpec) -> Result<NormalityVerdict, Error> {
    if spec.rank < 2 {
        return Err(Error::InvalidInput(format!(
            "a scroll needs rank >= 2, got {}",
            spec.rank
        )));
    }
    if spec.degree < 1 || spec.base_genus < 0 {
        return Err(Error::InvalidInput(format!(
            "scroll data (d = {}, g = {}) out of range",
            spec.degree, spec.base_genus
        )));
    }
    let mut trail = Trail::new();
    let g = spec.base_genus;
    let mu = spec.slope();

    // Butler's slope criterion, usable at any degree
    let mu_minus = match (spec.mu_minus_lower_bound, spec.stable) {
        (Some(bound), _) => Some(bound),
        (None, Some(true)) => Some(mu),
        _ => None,
    };
    if let Some(bound) = mu_minus {
        if bound > Ratio::int(2 * g) {
            trail.note(
                "butler-slope",
                format!("mu^- >= {bound} > 2g = {}", 2 * g),
                "projectively normal",
            );
            return Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ));
        }
        trail.note(
            "butler-slope",
            format!("mu^- bound {bound} <= 2g = {}", 2 * g),
            "slope criterion inconclusive",
        );
    }

    if spec.degree != 9 || spec.rank != 2 {
        trail.note(
            "not-evaluable",
            format!("d = {}, rank = {}", spec.degree, spec.rank),
            "the case tables cover rank-2 scrolls of degree 9",
        );
        return Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail));
    }

    // hyperelliptic bases force Delta = 2g, which caps the genus
    if spec.base_clifford == SectionClifford::Hyperelliptic && g >= 3 {
        trail.note(
            "hyperelliptic-scroll-delta",
            format!("hyperelliptic base of genus {g}"),
            format!("Delta = 2g = {}", 2 * g),
        );
        return Err(Error::NonexistentSurface(format!(
            "Delta = {} leaves h0 = {} <= 5, but no degree-9 scroll lives in P^4",
            2 * g,
            11 - 2 * g
        )));
    }

    match g {
        0 => {
            let h0 = 9 - spec.rank * (g - 1); // h0(E) with h1 = 0 on a rational base
            let delta = delta_genus(9, h0);
            trail.note(
                "scroll-section-count",
                "rational base, h1 = 0",
                format!("h0(L) = {h0}, Delta = {delta}"),
            );
            trail.note(
                "fujita-normal-generation",
                "d = 9 >= 2 Delta + 1 = 1, g = 0 >= Delta = 0",
                "normally generated, projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        1 => {
            trail.note(
                "elliptic-scroll-pn",
                "elliptic base: every very ample quotient has degree >= 3 > 2g = 2",
                "projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        2 => {
            let floor_mu = mu.floor();
            let least = min_very_ample_degree(2);
            trail.note(
                "forced-stability",
                format!("destabilizing quotient degree <= floor(mu) = {floor_mu} < {least}"),
                "the bundle is stable, mu^- = mu",
            );
            debug_assert!(floor_mu < least);
            let butler = mu > Ratio::int(2 * g);
            trail.note(
                "butler-slope",
                format!("mu^- = {mu} > 2g = {}: {butler}", 2 * g),
                "projectively normal",
            );
            debug_assert!(butler);
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        3..=5 => scroll_middle_genus(spec, trail),
        6 => {
            trail.note(
                "two-normal-reduction",
                "d = 9 >= g + 1 = 7",
                "section normal generation reduces to 2-normality",
            );
            trail.note(
                "genus-six-curve-two-normal",
                "degree-9 genus-6 section in P^4",
                "the section is 2-normal, hence normally generated",
            );
            trail.note(
                "hyperplane-descent",
                "regular ladder + normally generated section",
                "projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        _ => {
            trail.note(
                "not-evaluable",
                format!("base genus {g}"),
                "outside the classified degree-9 range",
            );
            Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail))
        }
    }
}

fn scroll_middle_genus(spec: &ScrollSpec, mut trail: Trail) -> Result<NormalityVerdict, Error> {
    let g = spec.base_genus;
    let cl_max = clifford_curve_max(g);
    trail.note(
        "clifford-max-bound",
        format!("g = {g}"),
        format!("cl(C) <= {cl_max}"),
    );

    match spec.base_clifford {
        SectionClifford::AtLeastTwo => {
            if cl_max < 2 {
                return Err(Error::InconsistentProfile(format!(
                    "cl(C) >= 2 impossible for genus {g} (max {cl_max})"
                )));
            }
            let ok = crate::normality::gl_check(9, g, 0, 2);
            trail.note(
                "green-lazarsfeld",
                format!("d = 9 >= 2g + 1 - 2 h1 - cl = {}", 2 * g + 1 - 2),
                format!("section normally generated: {ok}"),
            );
            debug_assert!(ok && g == 5);
            trail.note(
                "hyperplane-descent",
                "regular ladder + normally generated section",
                "projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        SectionClifford::Hyperelliptic => unreachable!("handled by the Delta cap"),
        SectionClifford::TrigonalOrPlaneQuintic | SectionClifford::Unknown => {
            if spec.base_clifford == SectionClifford::Unknown {
                trail.note(
                    "hyperelliptic-scroll-delta",
                    format!("a hyperelliptic base would force Delta = {}", 2 * g),
                    "hyperelliptic bases are excluded at this degree",
                );
                if cl_max < 2 {
                    trail.note(
                        "clifford-max-bound",
                        format!("cl(C) <= {cl_max} and not hyperelliptic"),
                        "the base is trigonal",
                    );
                }
            }
            trail.note(
                "trigonal-scroll-open",
                format!("trigonal base, genus {g}, ambient P^5"),
                "not decided",
            );
            Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scroll(g: i64) -> ScrollSpec {
        ScrollSpec {
            base_genus: g,
            rank: 2,
            degree: 9,
            mu_minus_lower_bound: None,
            stable: None,
            base_clifford: SectionClifford::Unknown,
            ambient: Some(5),
        }
    }

    #[test]
    fn genus_two_scroll_is_normal_via_forced_stability() {
        let v = scroll_verdict(&scroll(2)).unwrap();
        assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);
        assert!(v.trail.iter().any(|t| t.rule == "forced-stability"));
    }

    #[test]
    fn elliptic_scroll_is_normal() {
        let v = scroll_verdict(&scroll(1)).unwrap();
        assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);
    }

    #[test]
    fn trigonal_middle_genera_are_open() {
        for g in [3, 4, 5] {
            let mut s = scroll(g);
            s.base_clifford = SectionClifford::TrigonalOrPlaneQuintic;
            let v = scroll_verdict(&s).unwrap();
            assert_eq!(v.status, NormalityStatus::Undetermined, "g = {g}");
            assert!(v.trail.iter().any(|t| t.rule == "trigonal-scroll-open"));
        }
    }

    #[test]
    fn genus_five_general_clifford_is_normal() {
        let mut s = scroll(5);
        s.base_clifford = SectionClifford::AtLeastTwo;
        let v = scroll_verdict(&s).unwrap();
        assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);
    }

    #[test]
    fn butler_fires_at_any_degree() {
        let s = ScrollSpec {
            base_genus: 3,
            rank: 2,
            degree: 20,
            mu_minus_lower_bound: Some(Ratio::new(13, 2)),
            stable: None,
            base_clifford: SectionClifford::Unknown,
            ambient: None,
        };
        let v = scroll_verdict(&s).unwrap();
        assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);
    }

    #[test]
    fn hyperelliptic_middle_genus_cannot_exist() {
        let mut s = scroll(4);
        s.base_clifford = SectionClifford::Hyperelliptic;
        assert!(matches!(
            scroll_verdict(&s),
            Err(Error::NonexistentSurface(_))
        ));
    }

    #[test]
    fn rank_below_two_is_rejected() {
        let mut s = scroll(2);
        s.rank = 1;
        assert!(scroll_verdict(&s).is_err());
    }
}
