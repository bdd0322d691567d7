//! Acceptance suite: one test per shipped guarantee, each printing its own
//! pass line. Run with `cargo test -p ennea --test acceptance`.

use std::collections::BTreeSet;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use ennea::catalog;
use ennea::cone_chow::{
    c1_restriction_contains_line, c1_restriction_meets_points, c1_restriction_vertex_blowup,
    cone_ring, dpf_residual, enumerate_cone_classes, ConeRank, VertexConfig,
};
use ennea::curve_search::{enumerate_curves, satisfies_query, CurveQuery};
use ennea::error::Error;
use ennea::invariants::{castelnuovo_bound, chi_line_bundle, degree, sectional_genus};
use ennea::normality::{
    adjoint_preimage_check, adjoint_preimage_numeric, classify, fujita_check, gl_check,
    scroll_verdict, AdjointOutcome, LatticeData, NormalityStatus, SectionClifford, StructureFlag,
    SurfaceProfile,
};
use ennea::surface_models::{BaseSurface, DivisorClass, SurfaceModel, SurfaceSpec};

fn verdict_of(case: &catalog::CatalogCase) -> NormalityStatus {
    match case {
        catalog::CatalogCase::Surface(profile) => {
            classify(profile).expect("catalog profile").status
        }
        catalog::CatalogCase::Scroll(spec) => scroll_verdict(spec).expect("catalog scroll").status,
    }
}

#[test]
fn criterion_01_classification_table() {
    let mut failing = BTreeSet::new();
    for entry in catalog::entries() {
        if verdict_of(&entry.case) == NormalityStatus::NotProjectivelyNormal {
            failing.insert(entry.key.clone());
        }
    }
    let expected: BTreeSet<String> = catalog::failure_table_keys()
        .iter()
        .map(|k| k.to_string())
        .collect();
    assert_eq!(
        failing, expected,
        "the failing set must be exactly the seven table rows"
    );

    // the conic-bundle row stands for its whole 0 <= e <= 5 family
    assert_eq!(catalog::conic_bundle_family().len(), 6);

    // the removed genus-5 trigonal candidate is absent because it does not
    // exist; classifying it must say so rather than return a verdict
    let mut ghost = SurfaceProfile::new(5, 9, 5);
    ghost.h0_polarization = Some(6);
    ghost.h1_polarization = Some(0);
    ghost.chi = Some(1);
    ghost.irregularity = Some(0);
    ghost.section_clifford = SectionClifford::TrigonalOrPlaneQuintic;
    let mut coeffs = vec![3, 5];
    coeffs.extend(std::iter::repeat_n(-1, 12));
    ghost.lattice = Some(LatticeData {
        surface: SurfaceSpec {
            base: BaseSurface::Hirzebruch { e: 1 },
            blowups: 12,
        },
        polarization: coeffs,
    });
    assert!(matches!(
        classify(&ghost),
        Err(Error::NonexistentSurface(_))
    ));

    println!("criterion 01: pass - classification table reproduces exactly the 7 failing rows");
}

#[test]
fn criterion_02_p4_verdicts() {
    let cases = [
        (6, 1, NormalityStatus::NotProjectivelyNormal),
        (7, 1, NormalityStatus::NotProjectivelyNormal),
        (7, 2, NormalityStatus::NotProjectivelyNormal),
        (8, 2, NormalityStatus::ProjectivelyNormal),
        (8, 3, NormalityStatus::NotProjectivelyNormal),
        (9, 4, NormalityStatus::ProjectivelyNormal),
        (10, 5, NormalityStatus::ProjectivelyNormal),
        (10, 6, NormalityStatus::ProjectivelyNormal),
        (12, 9, NormalityStatus::ProjectivelyNormal),
    ];
    for (g, chi, expected) in cases {
        let mut p = SurfaceProfile::new(4, 9, g);
        p.chi = Some(chi);
        p.h0_polarization = Some(5);
        let verdict = classify(&p).unwrap_or_else(|e| panic!("(g, chi) = ({g}, {chi}): {e}"));
        assert_eq!(verdict.status, expected, "(g, chi) = ({g}, {chi})");
    }

    // the genus-6 computation pins h0(2L) = 18 against the 15 quadrics of P^4
    let mut p = SurfaceProfile::new(4, 9, 6);
    p.chi = Some(1);
    p.h0_polarization = Some(5);
    let verdict = classify(&p).unwrap();
    assert!(verdict
        .trail
        .iter()
        .any(|t| t.conclusion.contains("h0(2L) = 18")));
    assert!(verdict
        .trail
        .iter()
        .any(|t| t.inputs.contains("h0(O_P4(2)) = 15") && t.conclusion.contains("deficit -3")));

    println!("criterion 02: pass - P^4 verdicts match, with h0(2L) = 18 > 15 at genus 6");
}

#[test]
fn criterion_03_castelnuovo() {
    assert_eq!(castelnuovo_bound(9, 5).unwrap(), 7);
    assert_eq!(castelnuovo_bound(9, 4).unwrap(), 12);
    println!("criterion 03: pass - Castelnuovo bounds 7 and 12");
}

#[test]
fn criterion_04_invariant_formulas() {
    let genus4 = catalog::entry("p5-g4-elliptic-blowup-e0").unwrap();
    let catalog::CatalogCase::Surface(profile) = genus4.case else {
        panic!("surface entry")
    };
    let lattice = profile.lattice.unwrap();
    let model = lattice.model().unwrap();
    let l = lattice.class(&model).unwrap();
    assert_eq!(degree(&model, &l).unwrap(), 9);
    assert_eq!(sectional_genus(&model, &l).unwrap(), 4);

    for (e, model, l) in catalog::conic_bundle_family() {
        assert_eq!(degree(&model, &l).unwrap(), 9, "e = {e}");
        assert_eq!(sectional_genus(&model, &l).unwrap(), 5, "e = {e}");
    }
    println!("criterion 04: pass - (d, g) = (9, 4) and (9, 5) across the whole lattice family");
}

#[test]
fn criterion_05_quadric_section_count() {
    // the genus-4 e = 0 case: chi(2L) = 21 = h0(O_P5(2)) under the stated
    // vanishing
    let model = SurfaceModel::new(BaseSurface::Ruled { q: 1, e: 0 }, 3).unwrap();
    let l = model.class(&[2, 3, -1, -1, -1]).unwrap();
    assert_eq!(chi_line_bundle(&model, &(&l * 2)).unwrap(), 21);

    // the same count holds in the companion cases
    let (case2, l2) = catalog::genus4_case_two();
    assert_eq!(chi_line_bundle(&case2, &(&l2 * 2)).unwrap(), 21);
    println!("criterion 05: pass - h0(2L) = 21 = h0(O_P5(2)) under the stated vanishing");
}

#[test]
fn criterion_06_curve_enumeration() {
    let (model, l) = catalog::genus4_case_two();

    for known in catalog::known_curve_queries() {
        let found = enumerate_curves(&model, &l, &known.query).unwrap();
        let found_coeffs: BTreeSet<Vec<i64>> = found.iter().map(|c| c.coeffs().to_vec()).collect();
        for published in &known.published {
            assert!(
                found_coeffs.contains(published),
                "{}: published class {published:?} missing",
                known.name
            );
        }
        for extra in &known.flagged_extras {
            assert!(
                found_coeffs.contains(extra),
                "{}: flagged extra {extra:?} must be reported, not merged away",
                known.name
            );
            assert!(
                !known.published.contains(extra),
                "{}: extras stay distinct from the published list",
                known.name
            );
        }
        if known.exact {
            let expected: BTreeSet<Vec<i64>> = known
                .published
                .iter()
                .chain(known.flagged_extras.iter())
                .cloned()
                .collect();
            assert_eq!(found_coeffs, expected, "{}: exact outcome", known.name);
        }
    }

    // the line search is exactly the six published classes
    let lines = enumerate_curves(&model, &l, &CurveQuery::new(1, 0)).unwrap();
    assert_eq!(lines.len(), 6);

    // unpruned brute force over the default box agrees, in under ten seconds
    let start = Instant::now();
    for known in catalog::known_curve_queries() {
        let fast: BTreeSet<DivisorClass> = enumerate_curves(&model, &l, &known.query)
            .unwrap()
            .into_iter()
            .collect();
        let mut slow = BTreeSet::new();
        for a in -4i64..=4 {
            for b in -8i64..=8 {
                for e1 in -4i64..=4 {
                    for e2 in -4i64..=4 {
                        for e3 in -4i64..=4 {
                            let class = model.class(&[a, b, e1, e2, e3]).unwrap();
                            if satisfies_query(&model, &l, &known.query, &class).unwrap() {
                                slow.insert(class);
                            }
                        }
                    }
                }
            }
        }
        let fast_in_box: BTreeSet<DivisorClass> = fast
            .into_iter()
            .filter(|c| {
                let co = c.coeffs();
                co[0].abs() <= 4 && co[1].abs() <= 8 && co[2..].iter().all(|x| x.abs() <= 4)
            })
            .collect();
        assert_eq!(fast_in_box, slow, "{}: oracle equivalence", known.name);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "oracle sweep took {elapsed:?}");

    println!(
        "criterion 06: pass - line classes exact, published classes present, extras flagged, \
         oracle sweep in {elapsed:?}"
    );
}

#[test]
fn criterion_07_cone_arithmetic() {
    // loading already performs the exhaustive commutativity/associativity
    // check and fails hard on any transcription defect; sweep the basis
    // triples again through the public API so the evidence is in this test
    let r5 = cone_ring(ConeRank::Five).unwrap();
    let r4 = cone_ring(ConeRank::Four).unwrap();
    let mut triples = 0usize;
    for ring in [r5, r4] {
        let basis: Vec<_> = (1..=4)
            .flat_map(|g| ring.grade_names(g).iter().map(|n| ring.basis(n).unwrap()))
            .collect();
        let product = |x: &ennea::cone_chow::CycleClass, y: &ennea::cone_chow::CycleClass| {
            if x.grade() + y.grade() > 4 {
                None // vanishes beyond the top grade
            } else {
                Some(ring.mul(x, y).unwrap())
            }
        };
        for x in &basis {
            for y in &basis {
                let xy = product(x, y);
                assert_eq!(xy, product(y, x), "commutativity");
                for z in &basis {
                    // None marks a product vanishing beyond the top grade;
                    // both associations agree on that exactly when the
                    // total codimension does
                    let left = xy.as_ref().and_then(|p| product(p, z));
                    let right = product(y, z).and_then(|p| product(x, &p));
                    assert_eq!(left, right, "associativity");
                    triples += 1;
                }
            }
        }
    }
    assert!(triples > 1000, "swept {triples} basis triples");

    let contains =
        enumerate_cone_classes(r4, 9, VertexConfig::ContainsLine { delta: None }).unwrap();
    assert_eq!(contains.len(), 1);
    assert_eq!(
        (contains[0].alpha, contains[0].delta, contains[0].beta_like),
        (3, 1, 2)
    );

    let meets = enumerate_cone_classes(
        r4,
        9,
        VertexConfig::MeetsPoints {
            total_multiplicity: None,
        },
    )
    .unwrap();
    let pairs: Vec<(i64, i64)> = meets.iter().map(|t| (t.alpha, t.beta_like)).collect();
    assert_eq!(pairs, vec![(2, 5), (3, 3), (4, 1)]);

    // genus-4 case-2 surface data: L.K = -3, K^2 = -3, c2 = 3, lines have r.K = -1
    let (l_dot_k, k2, c2) = (-3i64, -3i64, 3i64);

    // rank 5, vertex on the surface: the single class violates the relation
    let s = r5.class(2, &[4, 1]).unwrap();
    let residual = dpf_residual(
        r5,
        &s,
        k2 - 1,
        c2 + 1,
        c1_restriction_vertex_blowup(l_dot_k),
    )
    .unwrap();
    assert_eq!(residual, 4);

    // rank 4 contains-line: nonzero for every coefficient split
    for beta in -3i64..=5 {
        let gamma = 2 - beta;
        let class = r4.class(2, &[3, beta, gamma, 1]).unwrap();
        let res = dpf_residual(
            r4,
            &class,
            k2,
            c2,
            c1_restriction_contains_line(l_dot_k, -1, 1),
        )
        .unwrap();
        assert!(res != 0, "split ({beta}, {gamma})");
        assert!(res >= 4);
    }

    // rank 4 meets: (4,1) and (3,3) are violated for every split; (2,5)
    // admits exactly the splits (2,3) and (3,2), which the geometric
    // argument, not the residual, excludes
    for (alpha, s_total, expect_zero_splits) in [
        (4i64, 1i64, vec![]),
        (3, 3, vec![]),
        (2, 5, vec![(2i64, 3i64), (3, 2)]),
    ] {
        let mut zero_splits = Vec::new();
        for beta in -alpha..=(s_total + alpha) {
            let gamma = s_total - beta;
            let class = r4.class(2, &[alpha, beta, gamma, 0]).unwrap();
            let res = dpf_residual(
                r4,
                &class,
                k2 - s_total,
                c2 + s_total,
                c1_restriction_meets_points(l_dot_k, s_total),
            )
            .unwrap();
            if res == 0 {
                zero_splits.push((beta, gamma));
            }
        }
        assert_eq!(
            zero_splits, expect_zero_splits,
            "(alpha, s) = ({alpha}, {s_total})"
        );
    }

    // rank 5 disjoint vertex: no class at all (odd degree)
    assert!(enumerate_cone_classes(r5, 9, VertexConfig::Disjoint)
        .unwrap()
        .is_empty());

    println!(
        "criterion 07: pass - tables validated, enumerations (3,1,2) and {{(4,1),(3,3),(2,5)}}, \
         residuals nonzero wherever the relation decides"
    );
}

#[test]
fn criterion_08_scroll_criteria() {
    let spec = |g, clifford| ennea::normality::ScrollSpec {
        base_genus: g,
        rank: 2,
        degree: 9,
        mu_minus_lower_bound: None,
        stable: None,
        base_clifford: clifford,
        ambient: Some(5),
    };

    let v = scroll_verdict(&spec(2, SectionClifford::Hyperelliptic)).unwrap();
    assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);
    assert!(v
        .trail
        .iter()
        .any(|t| t.inputs.contains("9/2") && t.inputs.contains("> 2g = 4")));

    let v = scroll_verdict(&spec(1, SectionClifford::Unknown)).unwrap();
    assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);

    for g in [3, 4, 5] {
        let v = scroll_verdict(&spec(g, SectionClifford::TrigonalOrPlaneQuintic)).unwrap();
        assert_eq!(v.status, NormalityStatus::Undetermined, "g = {g}");
    }

    println!("criterion 08: pass - scroll verdicts: g=2 via slope 9/2 > 4, elliptic normal, trigonal 3..5 open");
}

#[test]
fn criterion_09_property_suites() {
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };

    // Noether's identity
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&(any_model(), Just(())), |(model, ())| {
            let (chi, k2, c2) = model.model_invariants();
            prop_assert_eq!(12 * chi, k2 + c2);
            Ok(())
        })
        .unwrap();

    // adjunction parity
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&model_with_class(), |(model, class)| {
            let k = model.canonical_class();
            let v = model.intersect(&class, &class).unwrap() + model.intersect(&class, &k).unwrap();
            prop_assert_eq!(v.rem_euclid(2), 0);
            Ok(())
        })
        .unwrap();

    // Hodge-index filter soundness: every class the search returns obeys
    // r^2 L^2 <= (L.r)^2
    let (model, l) = catalog::genus4_case_two();
    let l2 = model.intersect(&l, &l).unwrap();
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&((1i64..=9), (0i64..=3)), |(d, pa)| {
            let query = CurveQuery::new(d, pa);
            for r in enumerate_curves(&model, &l, &query).unwrap() {
                let r2 = model.intersect(&r, &r).unwrap();
                let lr = model.intersect(&l, &r).unwrap();
                prop_assert!(r2 * l2 <= lr * lr);
            }
            Ok(())
        })
        .unwrap();

    // normal generation implies a regular ladder, for all inputs
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&((0i64..=30), (0i64..=15), (0i64..=12)), |(d, g, delta)| {
            let check = fujita_check(d, g, delta);
            prop_assert!(!check.normally_generated || check.ladder_regular);
            Ok(())
        })
        .unwrap();

    // Green-Lazarsfeld monotonicity: the bound 2g + 1 - 2 h1 - cl only
    // drops when h1 or cl grow, so a passing check keeps passing as h1 or
    // the Clifford index grows, or the degree grows
    let mut runner = TestRunner::new(config);
    runner
        .run(
            &((0i64..=30), (0i64..=15), (0i64..=6), (0i64..=6)),
            |(d, g, h1, cl)| {
                if gl_check(d, g, h1, cl) {
                    for higher_h1 in h1..=h1 + 3 {
                        for higher_cl in cl..=cl + 3 {
                            prop_assert!(gl_check(d, g, higher_h1, higher_cl));
                            prop_assert!(gl_check(d + 1, g, higher_h1, higher_cl));
                        }
                    }
                }
                Ok(())
            },
        )
        .unwrap();

    println!("criterion 09: pass - five property suites, 1000 randomized cases each");
}

fn any_model() -> impl Strategy<Value = SurfaceModel> {
    let base = prop_oneof![
        Just(BaseSurface::Plane),
        (0i64..=3).prop_map(|e| BaseSurface::Hirzebruch { e }),
        ((0i64..=2), (-2i64..=2)).prop_map(|(q, e)| BaseSurface::Ruled { q, e }),
    ];
    (base, 0usize..=6).prop_map(|(b, n)| SurfaceModel::new(b, n).unwrap())
}

fn model_with_class() -> impl Strategy<Value = (SurfaceModel, DivisorClass)> {
    any_model().prop_flat_map(|m| {
        let rank = m.rank();
        (
            Just(m),
            proptest::collection::vec(-5i64..=5, rank).prop_map(DivisorClass::from_coeffs),
        )
    })
}

#[test]
fn criterion_10_adjoint_preimage() {
    // lattice rows
    let open_row = catalog::entry("p5-g4-elliptic-blowup-e0").unwrap();
    let catalog::CatalogCase::Surface(profile) = open_row.case else {
        panic!()
    };
    let lattice = profile.lattice.unwrap();
    let model = lattice.model().unwrap();
    let l = lattice.class(&model).unwrap();
    let report = adjoint_preimage_check(&model, &l).unwrap();
    assert_eq!(
        report.outcome,
        AdjointOutcome::Open,
        "the elliptic blow-up row stays open"
    );

    for key in [
        "p5-g5-rational-conic-bundle",
        "p4-g6-rational",
        "p4-g7-rational",
    ] {
        let entry = catalog::entry(key).unwrap();
        let catalog::CatalogCase::Surface(profile) = entry.case else {
            panic!()
        };
        let lattice = profile.lattice.unwrap();
        let model = lattice.model().unwrap();
        let l = lattice.class(&model).unwrap();
        let report = adjoint_preimage_check(&model, &l).unwrap();
        assert_eq!(report.outcome, AdjointOutcome::Excluded, "{key}");
    }

    // rows known only through (g, chi): K^2 = 6 chi - 5 g + 23
    for (key, g, chi) in [
        ("p4-g6-enriques-projection", 6, 1),
        ("p4-g7-minimal-elliptic", 7, 2),
        ("p4-g8-general-type", 8, 3),
    ] {
        let k2 = ennea::invariants::aure_ranestad_k_squared(g, chi);
        let report = adjoint_preimage_numeric(9, g, k2).unwrap();
        assert_eq!(report.outcome, AdjointOutcome::Excluded, "{key}");
    }

    println!(
        "criterion 10: pass - adjoint preimage excluded on six rows, open on the elliptic blow-up"
    );
}

#[test]
fn verdict_trails_only_cite_registered_rules() {
    for entry in catalog::entries() {
        let verdict = match &entry.case {
            catalog::CatalogCase::Surface(p) => classify(p).unwrap(),
            catalog::CatalogCase::Scroll(s) => scroll_verdict(s).unwrap(),
        };
        for step in &verdict.trail {
            assert!(
                ennea::anchors::lookup(step.rule).is_some(),
                "{}: rule {} unregistered",
                entry.key,
                step.rule
            );
        }
    }
}

#[test]
fn undetermined_exit_cases_are_scroll_only() {
    // every catalog entry that is undetermined is one of the open trigonal
    // scroll cases
    for entry in catalog::entries() {
        let status = verdict_of(&entry.case);
        if status == NormalityStatus::Undetermined {
            assert!(entry.key.contains("trigonal") && entry.key.starts_with("scroll"));
        }
    }
}

#[test]
fn classify_routes_scroll_profiles() {
    let mut p = SurfaceProfile::new(5, 9, 2);
    p.structure = vec![StructureFlag::Scroll {
        rank: 2,
        base_genus: 2,
    }];
    p.genus = 2;
    let v = classify(&p).unwrap();
    assert_eq!(v.status, NormalityStatus::ProjectivelyNormal);
    assert!(v.trail.iter().any(|t| t.rule == "forced-stability"));
}
