//! Built-in library of the named degree-9 surfaces: the rows of the
//! failure table, the projectively normal companions, and the scroll cases.
//! The CLI's table mode classifies every entry; tests pin the verdicts.

use serde::{Deserialize, Serialize};

use crate::curve_search::CurveQuery;
use crate::normality::{LatticeData, ScrollSpec, SectionClifford, StructureFlag, SurfaceProfile};
use crate::surface_models::{BaseSurface, DivisorClass, SurfaceModel, SurfaceSpec};

/// One library entry: a surface profile or a scroll dossier, with the
/// strings the classification table prints.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub key: String,
    pub ambient: i64,
    pub genus: i64,
    pub surface: String,
    pub polarization: String,
    pub case: CatalogCase,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogCase {
    Surface(SurfaceProfile),
    Scroll(ScrollSpec),
}

fn lattice(base: BaseSurface, blowups: usize, polarization: Vec<i64>) -> LatticeData {
    LatticeData {
        surface: SurfaceSpec { base, blowups },
        polarization,
    }
}

fn repeat(value: i64, count: usize) -> Vec<i64> {
    std::iter::repeat_n(value, count).collect()
}

/// The ten-point plane blow-up polarized by `13 H - 4 sum E_i`.
fn plane_g6_lattice() -> LatticeData {
    let mut coeffs = vec![13];
    coeffs.extend(repeat(-4, 10));
    lattice(BaseSurface::Plane, 10, coeffs)
}

/// The fifteen-point plane blow-up polarized by
/// `9 H - 3 (E_1..E_6) - 2 (E_7..E_9) - (E_10..E_15)`.
fn plane_g7_lattice() -> LatticeData {
    let mut coeffs = vec![9];
    coeffs.extend(repeat(-3, 6));
    coeffs.extend(repeat(-2, 3));
    coeffs.extend(repeat(-1, 6));
    lattice(BaseSurface::Plane, 15, coeffs)
}

fn hirzebruch_g5_lattice(e: i64) -> LatticeData {
    let mut coeffs = vec![2, 6 + e];
    coeffs.extend(repeat(-1, 15));
    lattice(BaseSurface::Hirzebruch { e }, 15, coeffs)
}

fn scroll_entry(
    key: &str,
    genus: i64,
    ambient: i64,
    clifford: SectionClifford,
    surface: &str,
) -> CatalogEntry {
    CatalogEntry {
        key: key.to_string(),
        ambient,
        genus,
        surface: surface.to_string(),
        polarization: "tautological class of a rank-2 bundle of degree 9".to_string(),
        case: CatalogCase::Scroll(ScrollSpec {
            base_genus: genus,
            rank: 2,
            degree: 9,
            mu_minus_lower_bound: None,
            stable: None,
            base_clifford: clifford,
            ambient: Some(ambient),
        }),
    }
}

/// Every built-in entry, in the order the classification table prints them.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();

    // ---- the failure table -------------------------------------------------
    let mut p = SurfaceProfile::new(5, 9, 4);
    p.irregularity = Some(1);
    p.chi = Some(0);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.structure = vec![
        StructureFlag::ConicBundle { base_genus: 1 },
        StructureFlag::EllipticBundleBlowup { invariant: 0 },
    ];
    p.lattice = Some(lattice(
        BaseSurface::Ruled { q: 1, e: 0 },
        3,
        vec![2, 3, -1, -1, -1],
    ));
    out.push(CatalogEntry {
        key: "p5-g4-elliptic-blowup-e0".into(),
        ambient: 5,
        genus: 4,
        surface: "3-point blow-up of an elliptic P^1-bundle, e = 0".into(),
        polarization: "2C0 + 3f - E1 - E2 - E3".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 5);
    p.irregularity = Some(0);
    p.chi = Some(1);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.section_clifford = SectionClifford::Hyperelliptic;
    p.structure = vec![
        StructureFlag::Rational,
        StructureFlag::ConicBundle { base_genus: 0 },
    ];
    p.lattice = Some(hirzebruch_g5_lattice(0));
    out.push(CatalogEntry {
        key: "p5-g5-rational-conic-bundle".into(),
        ambient: 5,
        genus: 5,
        surface: "rational conic bundle: 15-point blow-up of a Hirzebruch surface, 0 <= e <= 5"
            .into(),
        polarization: "2C0 + (6+e)f - sum E_i".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 6);
    p.irregularity = Some(0);
    p.chi = Some(1);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::Rational];
    p.lattice = Some(plane_g6_lattice());
    out.push(CatalogEntry {
        key: "p4-g6-rational".into(),
        ambient: 4,
        genus: 6,
        surface: "10-point blow-up of the plane".into(),
        polarization: "13H - 4 sum E_i".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 7);
    p.irregularity = Some(0);
    p.chi = Some(1);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::Rational];
    p.lattice = Some(plane_g7_lattice());
    out.push(CatalogEntry {
        key: "p4-g7-rational".into(),
        ambient: 4,
        genus: 7,
        surface: "15-point blow-up of the plane".into(),
        polarization: "9H - 3(E1..E6) - 2(E7..E9) - (E10..E15)".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 6);
    p.chi = Some(1);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::EnriquesProjection];
    out.push(CatalogEntry {
        key: "p4-g6-enriques-projection".into(),
        ambient: 4,
        genus: 6,
        surface: "projection of a degree-10 Enriques surface from a point on it".into(),
        polarization: "projected hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 7);
    p.chi = Some(2);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::MinimalElliptic];
    out.push(CatalogEntry {
        key: "p4-g7-minimal-elliptic".into(),
        ambient: 4,
        genus: 7,
        surface: "minimal elliptic surface".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 8);
    p.chi = Some(3);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::MinimalGeneralType];
    out.push(CatalogEntry {
        key: "p4-g8-general-type".into(),
        ambient: 4,
        genus: 8,
        surface: "minimal surface of general type".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    // ---- projectively normal companions ------------------------------------
    let mut p = SurfaceProfile::new(5, 9, 4);
    p.irregularity = Some(1);
    p.chi = Some(0);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.structure = vec![StructureFlag::EllipticBundle { invariant: -1 }];
    p.lattice = Some(lattice(BaseSurface::Ruled { q: 1, e: -1 }, 0, vec![3, 0]));
    out.push(CatalogEntry {
        key: "p5-g4-elliptic-bundle".into(),
        ambient: 5,
        genus: 4,
        surface: "elliptic P^1-bundle, e = -1".into(),
        polarization: "3C0".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 4);
    p.irregularity = Some(1);
    p.chi = Some(0);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.structure = vec![
        StructureFlag::ConicBundle { base_genus: 1 },
        StructureFlag::EllipticBundleBlowup { invariant: -1 },
    ];
    p.lattice = Some(lattice(
        BaseSurface::Ruled { q: 1, e: -1 },
        3,
        vec![2, 2, -1, -1, -1],
    ));
    out.push(CatalogEntry {
        key: "p5-g4-elliptic-blowup-em1".into(),
        ambient: 5,
        genus: 4,
        surface: "3-point blow-up of an elliptic P^1-bundle, e = -1".into(),
        polarization: "2C0 + 2f - E1 - E2 - E3".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 5);
    p.irregularity = Some(0);
    p.chi = Some(1);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.section_clifford = SectionClifford::TrigonalOrPlaneQuintic;
    p.structure = vec![StructureFlag::Rational];
    let mut coeffs = vec![7];
    coeffs.extend(repeat(-2, 10));
    p.lattice = Some(lattice(BaseSurface::Plane, 10, coeffs));
    out.push(CatalogEntry {
        key: "p5-g5-trigonal-plane-ten".into(),
        ambient: 5,
        genus: 5,
        surface: "10-point blow-up of the plane (line congruence of bidegree (3,6))".into(),
        polarization: "7H - 2 sum E_i".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 5);
    p.irregularity = Some(0);
    p.chi = Some(1);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.section_clifford = SectionClifford::TrigonalOrPlaneQuintic;
    p.structure = vec![StructureFlag::Rational];
    let mut coeffs = vec![6];
    coeffs.extend(repeat(-2, 5));
    coeffs.extend(repeat(-1, 7));
    p.lattice = Some(lattice(BaseSurface::Plane, 12, coeffs));
    out.push(CatalogEntry {
        key: "p5-g5-trigonal-plane-twelve".into(),
        ambient: 5,
        genus: 5,
        surface: "12-point blow-up of the plane".into(),
        polarization: "6H - 2(E1..E5) - (E6..E12)".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 5);
    p.irregularity = Some(0);
    p.chi = Some(1);
    p.h0_polarization = Some(6);
    p.h1_polarization = Some(0);
    p.section_clifford = SectionClifford::TrigonalOrPlaneQuintic;
    p.structure = vec![StructureFlag::Rational];
    let mut coeffs = vec![4, 5];
    coeffs.extend(repeat(-2, 7));
    coeffs.extend(repeat(-1, 3));
    p.lattice = Some(lattice(BaseSurface::Hirzebruch { e: 0 }, 10, coeffs));
    out.push(CatalogEntry {
        key: "p5-g5-trigonal-hirzebruch".into(),
        ambient: 5,
        genus: 5,
        surface: "10-point blow-up of a Hirzebruch surface, e in {0, 1, 2}".into(),
        polarization: "4C0 + (2e+5)f - 2(E1..E7) - (E8..E10)".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 6);
    p.h0_polarization = Some(6);
    out.push(CatalogEntry {
        key: "p5-g6".into(),
        ambient: 5,
        genus: 6,
        surface: "any degree-9 surface with h0 = 6 and sectional genus 6".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(5, 9, 7);
    p.h0_polarization = Some(6);
    out.push(CatalogEntry {
        key: "p5-g7-castelnuovo".into(),
        ambient: 5,
        genus: 7,
        surface: "Castelnuovo surface (maximal genus for h0 = 6)".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 8);
    p.chi = Some(2);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::K3WithLines];
    out.push(CatalogEntry {
        key: "p4-g8-k3".into(),
        ambient: 4,
        genus: 8,
        surface: "K3 surface with five (-1)-lines".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 9);
    p.chi = Some(4);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::LinkedToCubicScroll];
    out.push(CatalogEntry {
        key: "p4-g9-linked".into(),
        ambient: 4,
        genus: 9,
        surface: "surface linked (3,4) to a cubic scroll".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 10);
    p.chi = Some(6);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::CompleteIntersection];
    out.push(CatalogEntry {
        key: "p4-g10-complete-intersection".into(),
        ambient: 4,
        genus: 10,
        surface: "complete intersection of two cubics".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    let mut p = SurfaceProfile::new(4, 9, 12);
    p.chi = Some(9);
    p.h0_polarization = Some(5);
    p.structure = vec![StructureFlag::LinkedToPlane];
    out.push(CatalogEntry {
        key: "p4-g12-linked-plane".into(),
        ambient: 4,
        genus: 12,
        surface: "surface linked to a plane".into(),
        polarization: "hyperplane class".into(),
        case: CatalogCase::Surface(p),
    });

    // ---- scrolls (ambient = h0 - 1 = 10 - 2g + h1) --------------------------
    out.push(scroll_entry(
        "scroll-g0",
        0,
        10,
        SectionClifford::Unknown,
        "rational normal scroll",
    ));
    out.push(scroll_entry(
        "scroll-g1",
        1,
        8,
        SectionClifford::Unknown,
        "elliptic scroll",
    ));
    out.push(scroll_entry(
        "scroll-g2",
        2,
        6,
        SectionClifford::Hyperelliptic,
        "scroll over a genus-2 curve",
    ));
    out.push(scroll_entry(
        "scroll-g3-trigonal",
        3,
        5,
        SectionClifford::TrigonalOrPlaneQuintic,
        "scroll over a trigonal genus-3 curve",
    ));
    out.push(scroll_entry(
        "scroll-g4-trigonal",
        4,
        5,
        SectionClifford::TrigonalOrPlaneQuintic,
        "scroll over a trigonal genus-4 curve",
    ));
    out.push(scroll_entry(
        "scroll-g5-trigonal",
        5,
        5,
        SectionClifford::TrigonalOrPlaneQuintic,
        "scroll over a trigonal genus-5 curve",
    ));
    out.push(scroll_entry(
        "scroll-g5-general",
        5,
        5,
        SectionClifford::AtLeastTwo,
        "scroll over a genus-5 curve of general Clifford index",
    ));

    out
}

/// Looks an entry up by key.
pub fn entry(key: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.key == key)
}

/// Keys of the seven rows that fail projective normality.
pub fn failure_table_keys() -> [&'static str; 7] {
    [
        "p5-g4-elliptic-blowup-e0",
        "p5-g5-rational-conic-bundle",
        "p4-g6-rational",
        "p4-g7-rational",
        "p4-g6-enriques-projection",
        "p4-g7-minimal-elliptic",
        "p4-g8-general-type",
    ]
}

/// Lattice family behind the genus-5 conic-bundle row: one model per
/// invariant `e` from 0 to 5.
pub fn conic_bundle_family() -> Vec<(i64, SurfaceModel, DivisorClass)> {
    (0..=5)
        .map(|e| {
            let data = hirzebruch_g5_lattice(e);
            let model = data.model().expect("catalog lattice");
            let l = data.class(&model).expect("catalog class");
            (e, model, l)
        })
        .collect()
}

/// The genus-4 case-2 model (three-point blow-up, e = -1) used by the curve
/// searches and the cone exclusions.
pub fn genus4_case_two() -> (SurfaceModel, DivisorClass) {
    let data = lattice(
        BaseSurface::Ruled { q: 1, e: -1 },
        3,
        vec![2, 2, -1, -1, -1],
    );
    let model = data.model().expect("catalog lattice");
    let l = data.class(&model).expect("catalog class");
    (model, l)
}

/// A cataloged curve enumeration: the query, the published classes, and any
/// classes the numerical filters admit beyond the published list. With
/// `exact` set, published plus flagged extras is the complete output.
#[derive(Debug, Clone, Serialize)]
pub struct KnownCurveQuery {
    pub name: &'static str,
    pub query: CurveQuery,
    pub published: Vec<Vec<i64>>,
    pub flagged_extras: Vec<Vec<i64>>,
    pub exact: bool,
}

/// The curve searches on the genus-4 case-2 model with their published
/// outcomes.
pub fn known_curve_queries() -> Vec<KnownCurveQuery> {
    let lines = KnownCurveQuery {
        name: "lines",
        query: CurveQuery::new(1, 0),
        published: vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![0, 1, -1, 0, 0],
            vec![0, 1, 0, -1, 0],
            vec![0, 1, 0, 0, -1],
        ],
        flagged_extras: vec![],
        exact: true,
    };
    let conics = KnownCurveQuery {
        name: "conics",
        query: CurveQuery::new(2, 0),
        published: vec![vec![0, 1, 0, 0, 0]],
        flagged_extras: vec![],
        exact: false,
    };
    let cubics = KnownCurveQuery {
        name: "cubics",
        query: CurveQuery::new(3, 1).with_min_self(0),
        published: vec![vec![1, 1, -1, -1, -1]],
        flagged_extras: vec![
            vec![1, 0, -1, 0, 0],
            vec![1, 0, 0, -1, 0],
            vec![1, 0, 0, 0, -1],
        ],
        exact: true,
    };
    let quartics = KnownCurveQuery {
        name: "quartics",
        query: CurveQuery::new(4, 1).with_min_self(0),
        published: vec![
            vec![1, 0, 0, 0, 0],
            vec![1, 1, -1, -1, 0],
            vec![1, 1, -1, 0, -1],
            vec![1, 1, 0, -1, -1],
        ],
        flagged_extras: vec![],
        exact: true,
    };
    vec![lines, conics, cubics, quartics]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{degree, sectional_genus};

    #[test]
    fn every_lattice_entry_is_consistent() {
        for entry in entries() {
            if let CatalogCase::Surface(profile) = &entry.case {
                profile
                    .validate()
                    .unwrap_or_else(|e| panic!("{}: {e}", entry.key));
            }
        }
    }

    #[test]
    fn failure_keys_are_catalogued() {
        for key in failure_table_keys() {
            assert!(entry(key).is_some(), "{key} missing");
        }
    }

    #[test]
    fn conic_bundle_family_invariants() {
        for (e, model, l) in conic_bundle_family() {
            assert_eq!(degree(&model, &l).unwrap(), 9, "e = {e}");
            assert_eq!(sectional_genus(&model, &l).unwrap(), 5, "e = {e}");
        }
    }

    #[test]
    fn plane_rows_have_the_right_invariants() {
        let g6 = plane_g6_lattice();
        let m = g6.model().unwrap();
        let l = g6.class(&m).unwrap();
        assert_eq!(degree(&m, &l).unwrap(), 9);
        assert_eq!(sectional_genus(&m, &l).unwrap(), 6);

        let g7 = plane_g7_lattice();
        let m = g7.model().unwrap();
        let l = g7.class(&m).unwrap();
        assert_eq!(degree(&m, &l).unwrap(), 9);
        assert_eq!(sectional_genus(&m, &l).unwrap(), 7);
    }

    #[test]
    fn keys_are_unique() {
        let mut keys: Vec<String> = entries().into_iter().map(|e| e.key).collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(before, keys.len());
    }
}
