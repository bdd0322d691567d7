//! Registry of every rule a citation trail may fire.
//!
//! Each entry is either a criterion the engine computes, a classification
//! fact imported from the published literature and taken as an axiom, an
//! assumption a caller asserted, or a bookkeeping note. Trails refer to
//! entries by id; a trail entry with an unregistered id is an encoding bug
//! and panics at construction.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnchorKind {
    /// Evaluated numerically by the engine.
    Criterion,
    /// Imported classification fact, cited rather than recomputed.
    ClassificationFact,
    /// Vanishing or structure statement asserted by the caller.
    Assumption,
    /// Bookkeeping remark attached to a trail.
    Note,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Anchor {
    pub id: &'static str,
    pub kind: AnchorKind,
    pub statement: &'static str,
}

use AnchorKind::*;

pub const REGISTRY: &[Anchor] = &[
    // ---- computed criteria -------------------------------------------------
    Anchor { id: "codimension-one", kind: Criterion, statement: "a smooth hypersurface is projectively normal" },
    Anchor { id: "delta-genus", kind: Criterion, statement: "delta genus: Delta = 2 + L^2 - h0(L)" },
    Anchor { id: "fujita-ladder", kind: Criterion, statement: "Fujita: with g >= Delta, the ladder is regular once d >= 2 Delta - 1" },
    Anchor { id: "fujita-normal-generation", kind: Criterion, statement: "Fujita: with g >= Delta and d >= 2 Delta + 1, L is normally generated, hence projectively normal" },
    Anchor { id: "green-lazarsfeld", kind: Criterion, statement: "Green-Lazarsfeld: a very ample bundle with deg >= 2g + 1 - 2 h1 - cl(C) is normally generated" },
    Anchor { id: "hyperelliptic-degree-block", kind: Criterion, statement: "a hyperelliptic curve of genus g has no normally generated bundle of degree <= 2g" },
    Anchor { id: "two-normal-reduction", kind: Criterion, statement: "for a base-point-free bundle of degree >= g + 1, normal generation is equivalent to surjectivity in degree two" },
    Anchor { id: "quadric-count", kind: Criterion, statement: "comparison of h0(O_PN(2)) with h0(2L): a deficit below zero kills 2-normality, zero makes it equivalent to the absence of quadrics through the surface" },
    Anchor { id: "castelnuovo-genus-bound", kind: Criterion, statement: "Castelnuovo's bound on the sectional genus of a nondegenerate surface of degree d" },
    Anchor { id: "castelnuovo-ambient-convention", kind: Note, statement: "the bound is evaluated with the ambient dimension of the surface; its hyperplane section spans one dimension less" },
    Anchor { id: "section-h1-genus-range", kind: Criterion, statement: "genus range forced by h1 of the restricted polarization on a general section (degree-9 non-scrolls with h0 >= 6)" },
    Anchor { id: "regular-ladder-reduction", kind: Criterion, statement: "with h1(L) = 0 and Delta = g, L is normally generated exactly when its restriction to a general section is" },
    Anchor { id: "hyperplane-descent", kind: Criterion, statement: "Fujita: a regular ladder with normally generated section bundle makes L normally generated" },
    Anchor { id: "three-regularity-reduction", kind: Criterion, statement: "for the genus-4 conic-bundle cases (p_g = 0, h1(L) = 0): 2-normal, 3-regular ideal, projectively normal and quadric-free are equivalent" },
    Anchor { id: "surface-riemann-roch", kind: Criterion, statement: "chi(D) = chi(O) + D.(D - K)/2" },
    Anchor { id: "curve-riemann-roch", kind: Criterion, statement: "h0 = d - g + 1 + h1 on a curve" },
    Anchor { id: "nonspecial-degree", kind: Criterion, statement: "a bundle of degree above 2g - 2 on a curve has h1 = 0" },
    Anchor { id: "negative-degree-vanishing", kind: Criterion, statement: "a bundle with negative degree against an ample class has no sections" },
    Anchor { id: "conic-bundle-section-double-cover", kind: Criterion, statement: "a conic bundle has L.f = 2, so a general section double-covers the base; over a rational base the section is hyperelliptic" },
    Anchor { id: "clifford-max-bound", kind: Criterion, statement: "cl(C) <= floor((g - 1)/2)" },
    Anchor { id: "butler-slope", kind: Criterion, statement: "Butler: a scroll with mu^-(E) > 2g is projectively normal" },
    Anchor { id: "forced-stability", kind: Criterion, statement: "a destabilizing quotient would have degree <= floor(mu), below the least very ample degree on the base curve, so the bundle is stable and mu^- = mu" },
    Anchor { id: "scroll-section-count", kind: Criterion, statement: "h0 of a scroll polarization equals h0 of its bundle: d - rank (g - 1) + h1" },
    Anchor { id: "cone-class-enumeration", kind: Criterion, statement: "exhaustive enumeration of strict-transform classes compatible with degree, effectivity and the vertex configuration" },
    Anchor { id: "chern-relation-residual", kind: Criterion, statement: "residual of the Chern-class relation c2|_S' = S'.S' + c1|_S'.c1(S') - K^2 + c2(S'); nonzero certifies exclusion" },
    Anchor { id: "adjoint-candidate-arithmetic", kind: Criterion, statement: "candidate adjoint preimage M = L - K with M^2 and g(M) computed exactly" },
    Anchor { id: "adjoint-positivity", kind: Criterion, statement: "a very ample class must meet every curve positively (exceptional curves, fibers, fibers through blown-up points)" },
    Anchor { id: "adjoint-genus-screen", kind: Criterion, statement: "some ambient dimension must admit (M^2, g(M)): plane-section genus in P^3, Castelnuovo's bound beyond" },

    // ---- imported classification facts ------------------------------------
    Anchor { id: "aure-ranestad-classification", kind: ClassificationFact, statement: "Aure-Ranestad: smooth nondegenerate degree-9 surfaces in P^4 are regular with K^2 = 6 chi - 5g + 23, and fall into the six listed types (g = 6, 7, 8, 9, 10, 12)" },
    Anchor { id: "aure-ranestad-h1-vanishing", kind: ClassificationFact, statement: "Aure-Ranestad: h1(2L) = 0 for the genus-7 and genus-8 degree-9 surfaces in P^4" },
    Anchor { id: "aure-ranestad-linkage", kind: ClassificationFact, statement: "the genus-9 surface is linked (3,4) to a cubic scroll and projectively normal by linkage" },
    Anchor { id: "complete-intersection-pn", kind: ClassificationFact, statement: "complete intersections are projectively normal" },
    Anchor { id: "g10-chi-discrepancy", kind: Note, statement: "the classification lists chi = 6 for the genus-10 complete intersection while the normality statement lists chi = 5; both values are accepted and flagged" },
    Anchor { id: "linked-to-plane-acm", kind: ClassificationFact, statement: "the genus-12 surface is linked to a plane, hence arithmetically Cohen-Macaulay and projectively normal" },
    Anchor { id: "quartic-not-quadric", kind: ClassificationFact, statement: "degree-9 surfaces in P^4 with g >= 7 lie on at least two quartics and on no quadric" },
    Anchor { id: "ionescu-delta-three", kind: ClassificationFact, statement: "Ionescu: delta genus 3 and degree 9 force sectional genus 3" },
    Anchor { id: "ionescu-delta-four", kind: ClassificationFact, statement: "Ionescu: delta genus 4 surfaces are projectively normal unless scrolls over a genus-2 curve" },
    Anchor { id: "low-genus-classification", kind: ClassificationFact, statement: "classification of polarized surfaces of small sectional genus, consulted for the degree-9 case lists (irregularity <= 1 in the relevant range)" },
    Anchor { id: "castelnuovo-surface-pn", kind: ClassificationFact, statement: "degree-9 surfaces with h0 = 6 and the maximal genus 7 are Castelnuovo surfaces, projectively normal" },
    Anchor { id: "no-low-genus-delta-five", kind: ClassificationFact, statement: "no degree-9 surface in P^5 with delta genus 5 has sectional genus 2 or 3" },
    Anchor { id: "genus-four-case-list", kind: ClassificationFact, statement: "the degree-9, genus-4, h0 = 6 non-scrolls are irregular: an elliptic P^1-bundle embedded by 3 C0 (e = -1), or a blow-up of an elliptic P^1-bundle at three points (e = -1 or e = 0)" },
    Anchor { id: "genus-six-curve-two-normal", kind: ClassificationFact, statement: "a degree-9 genus-6 curve embedded in P^4 by a complete very ample system is 2-normal (three independent quadrics would force a pencil on a (2,2) complete intersection)" },
    Anchor { id: "hyperelliptic-section-surfaces", kind: ClassificationFact, statement: "Sommese-Van de Ven: the only degree-9 genus-5 candidate with hyperelliptic sections is a rational conic bundle" },
    Anchor { id: "conic-bundle-trigonal-exclusion", kind: ClassificationFact, statement: "a conic bundle with trigonal section has g = 2q + 2, impossible here since q <= 1" },
    Anchor { id: "trigonal-case-unique-quadric", kind: ClassificationFact, statement: "the bidegree-(3,6) line congruence lies on exactly one quadric (the Grassmannian), so it is projectively normal" },
    Anchor { id: "trigonal-case-reduction", kind: ClassificationFact, statement: "the genus-5 candidate with a degree-16 first reduction cannot have a trigonal section, so it is projectively normal" },
    Anchor { id: "trigonal-case-adjoint-product", kind: ClassificationFact, statement: "K.(K + L) = -3 excludes trigonal sections for the genus-5 Hirzebruch candidates, so they are projectively normal" },
    Anchor { id: "trigonal-f1-nonexistence", kind: ClassificationFact, statement: "the remaining genus-5 trigonal candidate (a 12-point blow-up of the first Hirzebruch surface) was later shown not to exist" },
    Anchor { id: "symmetric-quotient-pn", kind: ClassificationFact, statement: "the unblown elliptic-bundle case is projectively normal (Homma; symmetric-square of an elliptic curve argument)" },
    Anchor { id: "line-congruence-on-quadric", kind: ClassificationFact, statement: "the genus-4 conic bundle with e = 0 is a bidegree-(3,6) congruence of lines of P^3, hence lies on the Grassmannian quadric" },
    Anchor { id: "smooth-quadric-excluded", kind: ClassificationFact, statement: "a quadric through the genus-4 blow-up must be singular (Arrondo-Sols)" },
    Anchor { id: "rank3-cone-excluded", kind: ClassificationFact, statement: "the rank-3 quadric cone is excluded by the hyperplane-splitting argument through its plane vertex" },
    Anchor { id: "rank4-residual-geometry", kind: ClassificationFact, statement: "the rank-4 meets-configurations surviving the Chern relation are excluded by hyperplane-section geometry (secant lines of space quartics, forbidden conic-bundle structures)" },
    Anchor { id: "elliptic-scroll-pn", kind: ClassificationFact, statement: "elliptic scrolls of degree 9 are projectively normal; every very ample quotient on an elliptic curve has degree at least 3 > 2g" },
    Anchor { id: "hyperelliptic-scroll-delta", kind: ClassificationFact, statement: "Ionescu: a scroll over a hyperelliptic curve has Delta = (dim) g" },
    Anchor { id: "trigonal-scroll-open", kind: ClassificationFact, statement: "the projective normality of degree-9 scrolls over trigonal curves of genus 3, 4, 5 in P^5 is not decided" },
    Anchor { id: "adjoint-open-case", kind: ClassificationFact, statement: "the numerical screens are necessary, never sufficient: a candidate passing all of them stays open; for the elliptic-bundle blow-up this is a known open question (general point triples make the relevant class ample but not effective)" },

    // ---- assumptions -------------------------------------------------------
    Anchor { id: "assumed-h1-vanishing", kind: Assumption, statement: "caller-asserted vanishing of h1 for the bundle in question" },
    Anchor { id: "assumed-h2-vanishing", kind: Assumption, statement: "caller-asserted vanishing of h2 for the bundle in question" },

    // ---- notes -------------------------------------------------------------
    Anchor { id: "chern-relation-partial", kind: Note, statement: "the (alpha, s) = (2, 5) meets-configuration admits coefficient splits satisfying the Chern relation; its exclusion needs the geometric argument, not the residual" },
    Anchor { id: "flagged-extra-class", kind: Note, statement: "class admitted by the numerical filter suite but outside the published list; reported, never merged" },
    Anchor { id: "not-evaluable", kind: Note, statement: "criterion skipped: the profile does not carry the fields it needs" },
];

/// Looks up an anchor by id.
pub fn lookup(id: &str) -> Option<&'static Anchor> {
    REGISTRY.iter().find(|a| a.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique() {
        let mut seen = BTreeSet::new();
        for anchor in REGISTRY {
            assert!(seen.insert(anchor.id), "duplicate id {}", anchor.id);
        }
    }

    #[test]
    fn lookup_finds_registered_ids() {
        assert!(lookup("fujita-ladder").is_some());
        assert!(lookup("no-such-rule").is_none());
    }
}
