//! The projective-normality decision engine.
//!
//! [`classify`] walks a fixed, documented criterion order over a
//! [`SurfaceProfile`] and produces a [`NormalityVerdict`] whose trail records
//! every fired rule: computed criteria, imported classification facts,
//! caller assumptions and bookkeeping notes, each keyed into the anchor
//! registry. The first conclusive criterion decides; everything applicable
//! is still evaluated and logged, and a disagreement between conclusive
//! criteria is a hard error.

mod adjoint;
mod criteria;
mod scroll;

pub use adjoint::{
    adjoint_candidate_numeric, adjoint_preimage_check, adjoint_preimage_numeric, AdjointCandidate,
    AdjointOutcome, AdjointReport,
};
pub use criteria::{
    fujita_check, gl_check, hyperelliptic_block, quadric_deficit, two_normal_suffices, FujitaCheck,
};
pub use scroll::{scroll_verdict, ScrollSpec};

use serde::{Deserialize, Serialize};

use crate::anchors;
use crate::cone_chow::{
    c1_restriction_contains_line, c1_restriction_meets_points, c1_restriction_vertex_blowup,
    cone_ring, dpf_residual, enumerate_cone_classes, ConeRank, VertexConfig,
};
use crate::curve_search::{enumerate_curves, CurveQuery};
use crate::error::Error;
use crate::invariants::{
    castelnuovo_bound, chi_line_bundle, curve_rr, degree as polarization_degree, delta_genus,
    genus_range_from_h1, sectional_genus,
};
use crate::surface_models::{BaseSurface, DivisorClass, SurfaceModel, SurfaceSpec};

/// Verdict status. `Undetermined` is a first-class outcome, matching the
/// open cases of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalityStatus {
    ProjectivelyNormal,
    NotProjectivelyNormal,
    Undetermined,
}

impl std::fmt::Display for NormalityStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormalityStatus::ProjectivelyNormal => write!(f, "projectively normal"),
            NormalityStatus::NotProjectivelyNormal => write!(f, "NOT projectively normal"),
            NormalityStatus::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// One fired rule: the registry id, its kind, the inputs it saw and the
/// conclusion it contributed.
#[derive(Debug, Clone, Serialize)]
pub struct TrailEntry {
    pub rule: &'static str,
    pub kind: anchors::AnchorKind,
    pub inputs: String,
    pub conclusion: String,
}

/// Ordered citation trail; entries are appended in evaluation order.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Trail {
    entries: Vec<TrailEntry>,
}

impl Trail {
    pub fn new() -> Self {
        Trail::default()
    }

    /// Appends an entry. Unregistered ids are encoding bugs.
    pub fn note(
        &mut self,
        rule: &'static str,
        inputs: impl Into<String>,
        conclusion: impl Into<String>,
    ) {
        let anchor = anchors::lookup(rule)
            .unwrap_or_else(|| panic!("trail rule {rule:?} missing from the anchor registry"));
        self.entries.push(TrailEntry {
            rule,
            kind: anchor.kind,
            inputs: inputs.into(),
            conclusion: conclusion.into(),
        });
    }

    pub fn entries(&self) -> &[TrailEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<TrailEntry> {
        self.entries
    }
}

/// Verdict plus the ordered trail of everything that fired.
#[derive(Debug, Clone, Serialize)]
pub struct NormalityVerdict {
    pub status: NormalityStatus,
    pub trail: Vec<TrailEntry>,
}

impl NormalityVerdict {
    pub(crate) fn new(status: NormalityStatus, trail: Trail) -> Self {
        assert!(
            !trail.entries.is_empty(),
            "a verdict needs a non-empty trail"
        );
        NormalityVerdict {
            status,
            trail: trail.entries,
        }
    }

    /// Stable plain-text rendering used by report files.
    pub fn render(&self) -> String {
        let mut out = format!("verdict: {}\n", self.status);
        for (i, entry) in self.trail.iter().enumerate() {
            out.push_str(&format!(
                "  [{:02}] {:<invariant_width$} {:?}: {} => {}\n",
                i + 1,
                entry.rule,
                entry.kind,
                entry.inputs,
                entry.conclusion,
                invariant_width = 34,
            ));
        }
        out
    }
}

/// Clifford-index information about a general hyperplane section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SectionClifford {
    Hyperelliptic,
    TrigonalOrPlaneQuintic,
    AtLeastTwo,
    #[default]
    Unknown,
}

/// Structural facts a profile may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureFlag {
    Scroll {
        rank: i64,
        base_genus: i64,
    },
    ConicBundle {
        base_genus: i64,
    },
    Rational,
    /// Blow-up of an elliptic `P^1`-bundle at three points with the given
    /// normalized invariant.
    EllipticBundleBlowup {
        invariant: i64,
    },
    /// Unblown elliptic `P^1`-bundle (embedded by three times the section).
    EllipticBundle {
        invariant: i64,
    },
    EnriquesProjection,
    MinimalElliptic,
    K3WithLines,
    MinimalGeneralType,
    LinkedToCubicScroll,
    CompleteIntersection,
    LinkedToPlane,
}

/// Lattice data attached to a profile: a surface spec plus the polarization
/// class in basis order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeData {
    pub surface: SurfaceSpec,
    pub polarization: Vec<i64>,
}

impl LatticeData {
    pub fn model(&self) -> Result<SurfaceModel, Error> {
        SurfaceModel::from_spec(&self.surface)
    }

    pub fn class(&self, model: &SurfaceModel) -> Result<DivisorClass, Error> {
        model.class(&self.polarization)
    }
}

/// Numerical and cohomological dossier of a polarized surface, as consumed
/// by the decision engine. Partial information is allowed; criteria that
/// need missing fields are skipped and logged.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceProfile {
    pub ambient: i64,
    pub degree: i64,
    pub genus: i64,
    #[serde(default)]
    pub irregularity: Option<i64>,
    #[serde(default)]
    pub chi: Option<i64>,
    #[serde(default)]
    pub h0_polarization: Option<i64>,
    #[serde(default)]
    pub h1_polarization: Option<i64>,
    #[serde(default)]
    pub section_clifford: SectionClifford,
    #[serde(default)]
    pub structure: Vec<StructureFlag>,
    #[serde(default)]
    pub lattice: Option<LatticeData>,
}

impl SurfaceProfile {
    pub fn new(ambient: i64, degree: i64, genus: i64) -> Self {
        SurfaceProfile {
            ambient,
            degree,
            genus,
            irregularity: None,
            chi: None,
            h0_polarization: None,
            h1_polarization: None,
            section_clifford: SectionClifford::Unknown,
            structure: Vec::new(),
            lattice: None,
        }
    }

    pub fn has_flag(&self, flag: &StructureFlag) -> bool {
        self.structure.contains(flag)
    }

    fn scroll_data(&self) -> Option<(i64, i64)> {
        self.structure.iter().find_map(|f| match f {
            StructureFlag::Scroll { rank, base_genus } => Some((*rank, *base_genus)),
            _ => None,
        })
    }

    fn conic_bundle_base(&self) -> Option<i64> {
        self.structure.iter().find_map(|f| match f {
            StructureFlag::ConicBundle { base_genus } => Some(*base_genus),
            _ => None,
        })
    }

    /// Arithmetic consistency checks; lattice data, when present, must agree
    /// with the stated invariants.
    pub fn validate(&self) -> Result<(), Error> {
        if self.degree != 9 {
            return Err(Error::InvalidInput(format!(
                "the classification engine covers degree 9, got {}",
                self.degree
            )));
        }
        if self.genus < 0 {
            return Err(Error::InconsistentProfile(format!(
                "negative genus {}",
                self.genus
            )));
        }
        if !(3..=10).contains(&self.ambient) {
            return Err(Error::InconsistentProfile(format!(
                "ambient dimension {} outside 3..=10 for degree 9",
                self.ambient
            )));
        }
        if let Some(h0) = self.h0_polarization {
            let delta = delta_genus(self.degree, h0);
            if delta < 0 {
                return Err(Error::InconsistentProfile(format!(
                    "h0 = {h0} gives negative delta genus {delta}"
                )));
            }
            if h0 - 1 != self.ambient {
                return Err(Error::InconsistentProfile(format!(
                    "embedded by a complete system: ambient {} must be h0 - 1 = {}",
                    self.ambient,
                    h0 - 1
                )));
            }
        }
        let bound = castelnuovo_bound(self.degree, self.ambient)?;
        if self.genus > bound {
            return Err(Error::InconsistentProfile(format!(
                "genus {} exceeds the Castelnuovo bound {bound} in P^{}",
                self.genus, self.ambient
            )));
        }
        // a surface in P^3 is a degree-9 hypersurface, and its sections are
        // plane curves of known genus
        if self.ambient == 3 && self.genus != 28 {
            return Err(Error::InconsistentProfile(format!(
                "a degree-9 surface in P^3 has sectional genus 28, not {}",
                self.genus
            )));
        }
        if let Some(lattice) = &self.lattice {
            let model = lattice.model()?;
            let l = lattice.class(&model)?;
            let d = polarization_degree(&model, &l)?;
            if d != self.degree {
                return Err(Error::InconsistentProfile(format!(
                    "lattice degree {d} disagrees with stated degree {}",
                    self.degree
                )));
            }
            let g = sectional_genus(&model, &l)?;
            if g != self.genus {
                return Err(Error::InconsistentProfile(format!(
                    "lattice sectional genus {g} disagrees with stated genus {}",
                    self.genus
                )));
            }
            if let Some(chi) = self.chi {
                if chi != model.chi() {
                    return Err(Error::InconsistentProfile(format!(
                        "lattice chi {} disagrees with stated chi {chi}",
                        model.chi()
                    )));
                }
            }
            if let Some(q) = self.irregularity {
                if q != model.irregularity() {
                    return Err(Error::InconsistentProfile(format!(
                        "lattice irregularity {} disagrees with stated q = {q}",
                        model.irregularity()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Classifies a degree-9 profile. Errors distinguish malformed input,
/// internally inconsistent profiles, and profiles the classification
/// excludes from existence.
pub fn classify(profile: &SurfaceProfile) -> Result<NormalityVerdict, Error> {
    profile.validate()?;
    let mut trail = Trail::new();

    if let Some((rank, base_genus)) = profile.scroll_data() {
        let spec = ScrollSpec {
            base_genus,
            rank,
            degree: profile.degree,
            mu_minus_lower_bound: None,
            stable: None,
            base_clifford: profile.section_clifford,
            ambient: Some(profile.ambient),
        };
        return scroll_verdict(&spec);
    }

    if profile.ambient == 3 {
        trail.note(
            "codimension-one",
            format!("ambient P^{}", profile.ambient),
            "hypersurface, projectively normal",
        );
        return Ok(NormalityVerdict::new(
            NormalityStatus::ProjectivelyNormal,
            trail,
        ));
    }

    if profile.ambient == 4 {
        return classify_p4(profile, trail);
    }

    // embedded by a complete system, so h0 = N + 1 when not stated
    let h0 = profile.h0_polarization.unwrap_or(profile.ambient + 1);
    let delta = delta_genus(profile.degree, h0);
    trail.note(
        "delta-genus",
        format!(
            "d = 9, h0(L) = {h0} (linearly normal in P^{})",
            profile.ambient
        ),
        format!("Delta = {delta}"),
    );

    if delta <= 4 {
        return classify_low_delta(profile, delta, trail);
    }
    debug_assert_eq!(delta, 5);

    let bound = castelnuovo_bound(profile.degree, profile.ambient)?;
    trail.note(
        "castelnuovo-genus-bound",
        format!("d = 9, ambient P^{}", profile.ambient),
        format!("g <= {bound}"),
    );
    trail.note(
        "castelnuovo-ambient-convention",
        format!("ambient P^{}", profile.ambient),
        "bound taken with the surface's ambient dimension",
    );

    match profile.genus {
        7 => {
            trail.note(
                "castelnuovo-surface-pn",
                "d = 9, h0 = 6, g = 7 (maximal)",
                "Castelnuovo surface, projectively normal",
            );
            Ok(NormalityVerdict::new(NormalityStatus::ProjectivelyNormal, trail))
        }
        6 => classify_delta5_genus6(profile, trail),
        5 => classify_delta5_genus5(profile, trail),
        4 => classify_delta5_genus4(profile, trail),
        2 | 3 => Err(Error::NonexistentSurface(format!(
            "degree-9 surfaces in P^5 with Delta = 5 and genus {} do not exist",
            profile.genus
        ))),
        g => Err(Error::NonexistentSurface(format!(
            "genus {g} with Delta = 5 is incompatible (genus 0 forces Delta = 0; genus 1 non-scrolls do not occur)"
        ))),
    }
}

fn classify_low_delta(
    profile: &SurfaceProfile,
    delta: i64,
    mut trail: Trail,
) -> Result<NormalityVerdict, Error> {
    let g = profile.genus;
    let check = fujita_check(profile.degree, g, delta);
    if check.normally_generated {
        trail.note(
            "fujita-normal-generation",
            format!(
                "d = 9 >= 2 Delta + 1 = {}, g = {g} >= Delta = {delta}",
                2 * delta + 1
            ),
            "normally generated, projectively normal",
        );
        return Ok(NormalityVerdict::new(
            NormalityStatus::ProjectivelyNormal,
            trail,
        ));
    }
    // g < delta from here on
    match delta {
        3 => Err(Error::NonexistentSurface(
            "delta genus 3 at degree 9 forces sectional genus 3".into(),
        )),
        4 => {
            trail.note(
                "ionescu-delta-four",
                format!("Delta = 4, g = {g}, non-scroll"),
                "projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        _ => Err(Error::NonexistentSurface(format!(
            "Delta = {delta} with g = {g} < Delta does not occur for degree-9 non-scrolls \
             (genus 0 forces Delta = 0, genus 1 only happens for elliptic scrolls)"
        ))),
    }
}

fn classify_p4(profile: &SurfaceProfile, mut trail: Trail) -> Result<NormalityVerdict, Error> {
    let Some(chi) = profile.chi else {
        trail.note(
            "not-evaluable",
            "chi unknown",
            "the classification of P^4 surfaces is keyed by (g, chi)",
        );
        return Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail));
    };
    let g = profile.genus;
    let k2 = crate::invariants::aure_ranestad_k_squared(g, chi);
    trail.note(
        "aure-ranestad-classification",
        format!("g = {g}, chi = {chi}"),
        format!("regular surface with K^2 = {k2}"),
    );

    let admissible = matches!(
        (g, chi),
        (6, 1) | (7, 1) | (7, 2) | (8, 2) | (8, 3) | (9, 4) | (10, 5) | (10, 6) | (12, 9)
    );
    if !admissible {
        return Err(Error::NonexistentSurface(format!(
            "no degree-9 surface in P^4 has (g, chi) = ({g}, {chi})"
        )));
    }

    match g {
        6..=8 => {
            // linearly normal and regular: h0(L) = 5, h0(L|C) = 4
            let h0_l = 5i64;
            let h0_section = 4i64;
            let h1_section = h0_section - (9 - g + 1);
            trail.note(
                "curve-riemann-roch",
                format!("d = 9, g = {g}, h0(L|C) = {h0_section}"),
                format!("h1(L|C) = {h1_section}"),
            );
            trail.note(
                "nonspecial-degree",
                format!("deg(2L|C) = 18 > 2g - 2 = {}", 2 * g - 2),
                "h1(2L|C) = 0",
            );
            let h0_2l_section = curve_rr(18, g, 0)?;
            trail.note(
                "curve-riemann-roch",
                format!("d = 18, g = {g}, h1 = 0"),
                format!("h0(2L|C) = {h0_2l_section}"),
            );
            trail.note(
                "negative-degree-vanishing",
                format!("L.(K - L) = {} < 0", 2 * g - 20),
                "h2(L) = h0(K - L) = 0",
            );
            let chi_l = chi + 10 - g;
            trail.note(
                "surface-riemann-roch",
                format!("chi(O) = {chi}, L^2 = 9, L.K = {}", 2 * g - 2 - 9),
                format!("chi(L) = {chi_l}"),
            );
            let h1_l = h0_l - chi_l;
            if h1_l < 0 {
                return Err(Error::InconsistentProfile(format!(
                    "chi(L) = {chi_l} exceeds h0(L) = {h0_l} with h2(L) = 0"
                )));
            }
            if g >= 7 {
                trail.note(
                    "aure-ranestad-h1-vanishing",
                    format!("g = {g}"),
                    "h1(2L) = 0",
                );
            }
            let h0_2l = h0_l + h0_2l_section - h1_l;
            trail.note(
                "curve-riemann-roch",
                format!("restriction sequence with h1(L) = {h1_l} and h1(2L) = 0"),
                format!("h0(2L) = {h0_2l}"),
            );
            let deficit = quadric_deficit(4, h0_2l)?;
            trail.note(
                "quadric-count",
                format!("h0(O_P4(2)) = 15 vs h0(2L) = {h0_2l}"),
                format!("deficit {deficit}"),
            );
            if deficit < 0 {
                trail.note(
                    "quadric-count",
                    format!("deficit {deficit} < 0"),
                    "not 2-normal, hence not projectively normal",
                );
                return Ok(NormalityVerdict::new(
                    NormalityStatus::NotProjectivelyNormal,
                    trail,
                ));
            }
            debug_assert_eq!((g, chi), (8, 2));
            trail.note(
                "quartic-not-quadric",
                "g = 8 surface on quartics",
                "no quadric through the surface, so deficit 0 means 2-normal",
            );
            let reduces = two_normal_suffices(9, g);
            trail.note(
                "two-normal-reduction",
                format!("d = 9 >= g + 1 = {}", g + 1),
                format!("2-normality decides projective normality: {reduces}"),
            );
            debug_assert!(reduces);
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        9 => {
            trail.note(
                "aure-ranestad-linkage",
                "g = 9, chi = 4",
                "projectively normal by linkage",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        10 => {
            trail.note(
                "complete-intersection-pn",
                format!("g = 10, chi = {chi}"),
                "complete intersection of two cubics, projectively normal",
            );
            trail.note(
                "g10-chi-discrepancy",
                format!("chi = {chi} accepted"),
                "both published chi values (5 and 6) are admitted for this row",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        12 => {
            trail.note(
                "linked-to-plane-acm",
                "g = 12, chi = 9",
                "arithmetically Cohen-Macaulay, projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::ProjectivelyNormal,
                trail,
            ))
        }
        _ => unreachable!("admissibility checked above"),
    }
}

fn classify_delta5_genus6(
    profile: &SurfaceProfile,
    mut trail: Trail,
) -> Result<NormalityVerdict, Error> {
    let check = fujita_check(profile.degree, profile.genus, 5);
    trail.note(
        "fujita-ladder",
        "d = 9 >= 2 Delta - 1 = 9, g = 6 >= Delta = 5",
        format!("ladder regular: {}", check.ladder_regular),
    );
    debug_assert!(check.ladder_regular);
    let reduces = two_normal_suffices(9, 6);
    trail.note(
        "two-normal-reduction",
        "d = 9 >= g + 1 = 7",
        format!("section normal generation reduces to 2-normality: {reduces}"),
    );
    trail.note(
        "genus-six-curve-two-normal",
        "degree-9 genus-6 section in P^4",
        "the section is 2-normal, hence normally generated",
    );
    trail.note(
        "hyperplane-descent",
        "regular ladder + normally generated section",
        "L normally generated, projectively normal",
    );
    Ok(NormalityVerdict::new(
        NormalityStatus::ProjectivelyNormal,
        trail,
    ))
}

fn classify_delta5_genus5(
    profile: &SurfaceProfile,
    mut trail: Trail,
) -> Result<NormalityVerdict, Error> {
    let check = fujita_check(9, 5, 5);
    trail.note(
        "fujita-ladder",
        "d = 9 >= 2 Delta - 1 = 9, g = 5 = Delta",
        format!("ladder regular: {}", check.ladder_regular),
    );

    // a conic bundle over a rational base has hyperelliptic sections
    let mut clifford = profile.section_clifford;
    if clifford == SectionClifford::Unknown {
        if let Some(0) = profile.conic_bundle_base() {
            trail.note(
                "conic-bundle-section-double-cover",
                "conic bundle over a rational base, L.f = 2",
                "general sections are hyperelliptic",
            );
            clifford = SectionClifford::Hyperelliptic;
        }
    }

    match clifford {
        SectionClifford::Hyperelliptic => {
            trail.note(
                "hyperelliptic-section-surfaces",
                "degree 9, genus 5, hyperelliptic section",
                "the surface is a rational conic bundle",
            );
            let blocked = hyperelliptic_block(9, 5);
            trail.note(
                "hyperelliptic-degree-block",
                "d = 9 <= 2g = 10",
                format!("section bundle not normally generated: {blocked}"),
            );
            debug_assert!(blocked);
            match profile.h1_polarization {
                Some(0) => {
                    trail.note(
                        "regular-ladder-reduction",
                        "h1(L) = 0, Delta = g = 5",
                        "projective normality is equivalent to that of the section, which fails",
                    );
                    Ok(NormalityVerdict::new(
                        NormalityStatus::NotProjectivelyNormal,
                        trail,
                    ))
                }
                _ => {
                    trail.note(
                        "not-evaluable",
                        "h1(L) unknown",
                        "the ladder reduction needs h1(L) = 0",
                    );
                    Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail))
                }
            }
        }
        SectionClifford::AtLeastTwo => {
            // regular ladder gives h0(L|C) = 5 = d - g + 1, so h1(L|C) = 0
            let h0_section = curve_rr(9, 5, 0)?;
            trail.note(
                "curve-riemann-roch",
                format!("d = 9, g = 5, h0(L|C) = {h0_section}"),
                "h1(L|C) = 0",
            );
            let ok = gl_check(9, 5, 0, 2);
            trail.note(
                "green-lazarsfeld",
                "d = 9 >= 2g + 1 - 2 h1 - cl = 9",
                format!("section normally generated: {ok}"),
            );
            debug_assert!(ok);
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
        SectionClifford::TrigonalOrPlaneQuintic => classify_genus5_trigonal(profile, trail),
        SectionClifford::Unknown => {
            trail.note(
                "clifford-max-bound",
                "g = 5",
                "cl(C) <= 2: hyperelliptic, trigonal, or general",
            );
            trail.note(
                "not-evaluable",
                "section Clifford data unknown",
                "hyperelliptic sections would fail, all other cases pass; undetermined",
            );
            Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail))
        }
    }
}

fn classify_genus5_trigonal(
    profile: &SurfaceProfile,
    mut trail: Trail,
) -> Result<NormalityVerdict, Error> {
    trail.note(
        "conic-bundle-trigonal-exclusion",
        "g = 5 = 2q + 2 would need q = 3/2",
        "no conic bundle in this case",
    );
    trail.note(
        "low-genus-classification",
        "degree 9, genus 5, h0 = 6, trigonal section",
        "candidates: 10- or 12-point plane blow-ups, 10-point Hirzebruch blow-ups, or a 12-point blow-up of the first Hirzebruch surface",
    );
    if let Some(lattice) = &profile.lattice {
        let model = lattice.model()?;
        match (model.base(), model.blowups()) {
            (BaseSurface::Plane, 10) => {
                trail.note(
                    "trigonal-case-unique-quadric",
                    "10-point plane blow-up, bidegree-(3,6) line congruence",
                    "exactly one quadric through the surface, projectively normal",
                );
                return Ok(NormalityVerdict::new(
                    NormalityStatus::ProjectivelyNormal,
                    trail,
                ));
            }
            (BaseSurface::Plane, 12) => {
                trail.note(
                    "trigonal-case-reduction",
                    "12-point plane blow-up with degree-16 first reduction",
                    "no trigonal section after all, projectively normal",
                );
                return Ok(NormalityVerdict::new(
                    NormalityStatus::ProjectivelyNormal,
                    trail,
                ));
            }
            (BaseSurface::Hirzebruch { .. }, 10) => {
                let l = lattice.class(&model)?;
                let k = model.canonical_class();
                let product = model.intersect(&k, &(&k + &l))?;
                trail.note(
                    "trigonal-case-adjoint-product",
                    format!("K.(K + L) = {product}"),
                    "no trigonal section after all, projectively normal",
                );
                if product != -3 {
                    return Err(Error::InconsistentProfile(format!(
                        "Hirzebruch candidate must have K.(K + L) = -3, got {product}"
                    )));
                }
                return Ok(NormalityVerdict::new(
                    NormalityStatus::ProjectivelyNormal,
                    trail,
                ));
            }
            (BaseSurface::Hirzebruch { e: 1 }, 12) => {
                return Err(Error::NonexistentSurface(
                    "the genus-5 trigonal candidate over the first Hirzebruch surface does not exist".into(),
                ));
            }
            other => {
                return Err(Error::InconsistentProfile(format!(
                    "lattice {other:?} is not one of the genus-5 trigonal candidates"
                )))
            }
        }
    }
    // without a lattice: every existing candidate resolves to projectively
    // normal; the remaining one does not exist
    trail.note(
        "trigonal-f1-nonexistence",
        "the only candidate that could fail does not exist",
        "every existing trigonal case is projectively normal",
    );
    Ok(NormalityVerdict::new(
        NormalityStatus::ProjectivelyNormal,
        trail,
    ))
}

fn classify_delta5_genus4(
    profile: &SurfaceProfile,
    mut trail: Trail,
) -> Result<NormalityVerdict, Error> {
    let constraint = genus_range_from_h1(0)?;
    trail.note(
        "section-h1-genus-range",
        format!("g = 4 not in {{6, 7}}; scope: {}", constraint.scope),
        format!("h1(L|C) = 0 (range for h1 = 0 is {:?})", constraint.range),
    );
    let h0_section = curve_rr(9, 4, 0)?;
    trail.note(
        "curve-riemann-roch",
        "d = 9, g = 4, h1 = 0",
        format!("h0(L|C) = {h0_section}, so the surface is irregular"),
    );
    trail.note(
        "genus-four-case-list",
        "degree 9, genus 4, h0 = 6, irregular",
        "elliptic-bundle cases: unblown with e = -1, or three-point blow-ups with e = -1 or e = 0",
    );

    let blowup_invariant = profile.structure.iter().find_map(|f| match f {
        StructureFlag::EllipticBundleBlowup { invariant } => Some(*invariant),
        _ => None,
    });
    let unblown = profile
        .structure
        .iter()
        .any(|f| matches!(f, StructureFlag::EllipticBundle { .. }));

    if unblown {
        trail.note(
            "symmetric-quotient-pn",
            "elliptic P^1-bundle, e = -1, embedded by 3 C0",
            "projectively normal",
        );
        return Ok(NormalityVerdict::new(
            NormalityStatus::ProjectivelyNormal,
            trail,
        ));
    }

    match blowup_invariant {
        Some(-1) => classify_genus4_blowup_em1(profile, trail),
        Some(0) => {
            genus4_reduction_preamble(profile, &mut trail, 0)?;
            trail.note(
                "line-congruence-on-quadric",
                "e = 0 case, bidegree-(3,6) line congruence",
                "the Grassmannian quadric contains the surface",
            );
            trail.note(
                "quadric-count",
                "deficit 0 with a quadric through the surface",
                "not 2-normal, hence not projectively normal",
            );
            Ok(NormalityVerdict::new(
                NormalityStatus::NotProjectivelyNormal,
                trail,
            ))
        }
        Some(e) => Err(Error::InconsistentProfile(format!(
            "no genus-4 case has an elliptic-bundle blow-up with invariant {e}"
        ))),
        None => {
            trail.note(
                "not-evaluable",
                "no structure flag identifies the genus-4 case",
                "cannot resolve among the elliptic-bundle cases",
            );
            Ok(NormalityVerdict::new(NormalityStatus::Undetermined, trail))
        }
    }
}

/// Shared head of the genus-4 blow-up cases: the three-regularity reduction
/// and the quadric count `h0(2L) = 21 = h0(O_P5(2))` under asserted
/// vanishing.
fn genus4_reduction_preamble(
    profile: &SurfaceProfile,
    trail: &mut Trail,
    invariant: i64,
) -> Result<(SurfaceModel, DivisorClass), Error> {
    let lattice = profile.lattice.clone().unwrap_or(LatticeData {
        surface: SurfaceSpec {
            base: BaseSurface::Ruled { q: 1, e: invariant },
            blowups: 3,
        },
        polarization: if invariant == -1 {
            vec![2, 2, -1, -1, -1]
        } else {
            vec![2, 3, -1, -1, -1]
        },
    });
    let model = lattice.model()?;
    let l = lattice.class(&model)?;

    trail.note(
        "three-regularity-reduction",
        "p_g = 0 and h1(L) = 0 in every genus-4 case",
        "projectively normal exactly when no quadric contains the surface",
    );
    let chi_2l = chi_line_bundle(&model, &(&l * 2))?;
    trail.note(
        "surface-riemann-roch",
        format!("2L on {}", model.format_class(&l)),
        format!("chi(2L) = {chi_2l}"),
    );
    trail.note("assumed-h1-vanishing", "2L", "h1(2L) = 0");
    trail.note("assumed-h2-vanishing", "2L", "h2(2L) = 0");
    let deficit = quadric_deficit(5, chi_2l)?;
    trail.note(
        "quadric-count",
        format!("h0(O_P5(2)) = 21 vs h0(2L) = {chi_2l}"),
        format!("deficit {deficit}: 2-normal exactly when no quadric contains the surface"),
    );
    if deficit != 0 {
        return Err(Error::InconsistentProfile(format!(
            "genus-4 cases must have h0(2L) = 21, computed {chi_2l}"
        )));
    }
    Ok((model, l))
}

/// The e = -1 three-point blow-up: excluded from every quadric by the cone
/// machinery, hence projectively normal.
fn classify_genus4_blowup_em1(
    profile: &SurfaceProfile,
    mut trail: Trail,
) -> Result<NormalityVerdict, Error> {
    let (model, l) = genus4_reduction_preamble(profile, &mut trail, -1)?;
    let k = model.canonical_class();
    let l_dot_k = model.intersect(&l, &k)?;
    let k2 = model.k_squared();
    let c2 = model.c2();

    trail.note(
        "smooth-quadric-excluded",
        "suppose a quadric through the surface",
        "the quadric must be a singular cone of rank 5, 4 or 3",
    );

    // rank 5: vertex off the surface is a parity contradiction; vertex on
    // the surface leaves one class, killed by the Chern relation
    let r5 = cone_ring(ConeRank::Five)?;
    let disjoint = enumerate_cone_classes(r5, 9, VertexConfig::Disjoint)?;
    trail.note(
        "cone-class-enumeration",
        "rank 5, degree 9, vertex off the surface",
        format!(
            "{} classes (degree 2 alpha = 9 has no solution)",
            disjoint.len()
        ),
    );
    if !disjoint.is_empty() {
        return Err(Error::CriterionConflict(
            "rank-5 disjoint case should be empty".into(),
        ));
    }
    let on_surface = enumerate_cone_classes(r5, 9, VertexConfig::VertexOnSurface)?;
    for tuple in &on_surface {
        let class = r5.class(2, &[tuple.alpha, tuple.beta_like])?;
        let residual = dpf_residual(
            r5,
            &class,
            k2 - 1,
            c2 + 1,
            c1_restriction_vertex_blowup(l_dot_k),
        )?;
        trail.note(
            "chern-relation-residual",
            format!("rank 5, S' = {}", r5.format_class(&class)),
            format!("residual {residual}"),
        );
        if residual == 0 {
            return Err(Error::CriterionConflict(
                "rank-5 class must violate the Chern relation".into(),
            ));
        }
    }

    // rank 4, vertex line on the surface: the lines of the surface all have
    // r.K = -1; the single admissible class violates the relation for every
    // coefficient split
    let lines = enumerate_curves(&model, &l, &CurveQuery::new(1, 0))?;
    let r_dot_k = lines
        .iter()
        .map(|r| model.intersect(r, &k))
        .collect::<Result<Vec<_>, _>>()?;
    if r_dot_k.iter().any(|&v| v != -1) {
        return Err(Error::CriterionConflict(
            "every line on this surface has r.K = -1".into(),
        ));
    }
    trail.note(
        "cone-class-enumeration",
        format!(
            "{} line classes on the surface, all with r.K = -1",
            lines.len()
        ),
        "vertex-line-on-surface case uses delta copies of such a line",
    );
    let r4 = cone_ring(ConeRank::Four)?;
    let contains = enumerate_cone_classes(r4, 9, VertexConfig::ContainsLine { delta: None })?;
    for tuple in &contains {
        let mut all_nonzero = true;
        for beta in -tuple.alpha..=(tuple.beta_like + tuple.alpha) {
            let gamma = tuple.beta_like - beta;
            let class = r4.class(2, &[tuple.alpha, beta, gamma, tuple.delta])?;
            let c1c1 = c1_restriction_contains_line(l_dot_k, -1, tuple.delta);
            let residual = dpf_residual(r4, &class, k2, c2, c1c1)?;
            if residual == 0 {
                all_nonzero = false;
            }
        }
        trail.note(
            "chern-relation-residual",
            format!(
                "rank 4 contains-line, (alpha, delta, beta+gamma) = ({}, {}, {})",
                tuple.alpha, tuple.delta, tuple.beta_like
            ),
            format!("residual nonzero for every coefficient split: {all_nonzero}"),
        );
        if !all_nonzero {
            return Err(Error::CriterionConflict(
                "contains-line class must violate the Chern relation".into(),
            ));
        }
    }

    // rank 4, vertex line meeting the surface in points
    let meets = enumerate_cone_classes(
        r4,
        9,
        VertexConfig::MeetsPoints {
            total_multiplicity: None,
        },
    )?;
    trail.note(
        "cone-class-enumeration",
        "rank 4, degree 9, vertex line meeting the surface",
        format!(
            "(alpha, s) in {:?}",
            meets
                .iter()
                .map(|t| (t.alpha, t.beta_like))
                .collect::<Vec<_>>()
        ),
    );
    let mut surviving = Vec::new();
    for tuple in &meets {
        let s = tuple.beta_like;
        let mut zero_splits = Vec::new();
        for beta in -tuple.alpha..=(s + tuple.alpha) {
            let gamma = s - beta;
            let class = r4.class(2, &[tuple.alpha, beta, gamma, 0])?;
            let c1c1 = c1_restriction_meets_points(l_dot_k, s);
            let residual = dpf_residual(r4, &class, k2 - s, c2 + s, c1c1)?;
            if residual == 0 {
                zero_splits.push((beta, gamma));
            }
        }
        trail.note(
            "chern-relation-residual",
            format!(
                "rank 4 meets, (alpha, s) = ({}, {s}), simple intersection points",
                tuple.alpha
            ),
            if zero_splits.is_empty() {
                "residual nonzero for every coefficient split".to_string()
            } else {
                format!("relation satisfiable at splits {zero_splits:?}")
            },
        );
        if !zero_splits.is_empty() {
            surviving.push((tuple.alpha, s));
        }
    }
    if !surviving.is_empty() {
        trail.note(
            "chern-relation-partial",
            format!("surviving meets-tuples {surviving:?}"),
            "numerical residual alone does not exclude these",
        );
        trail.note(
            "rank4-residual-geometry",
            format!("tuples {surviving:?} and the multiple-point configurations"),
            "excluded by the hyperplane-section geometry",
        );
    }

    trail.note(
        "rank3-cone-excluded",
        "rank-3 cone with plane vertex",
        "excluded by the hyperplane-splitting argument",
    );
    trail.note(
        "quadric-count",
        "every quadric configuration excluded",
        "no quadric contains the surface: 2-normal, projectively normal",
    );
    Ok(NormalityVerdict::new(
        NormalityStatus::ProjectivelyNormal,
        trail,
    ))
}
