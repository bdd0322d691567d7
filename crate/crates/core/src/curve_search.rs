//! Exhaustive enumeration of numerical classes of candidate irreducible
//! curves with prescribed polarization degree and arithmetic genus on a
//! blown-up surface model.
//!
//! The output is a complete list of classes passing a suite of *necessary*
//! conditions for irreducibility; geometric realizability is not decided.
//! The suite, applied identically by the pruned search and by the brute-force
//! oracle used in tests:
//!
//! - shape: a candidate is a single exceptional class `E_i`; or, on a ruled
//!   base with zero fiber degree, a fiber component `f` or `f - E_i`
//!   (blown-up points sit on distinct fibers); or a strict transform with
//!   positive degree over the base and multiplicities `0 <= a_i <= r.f`
//!   (`a_i <= h` on the plane) - a curve of fiber degree `a` cannot pass
//!   through a point with multiplicity above `a`;
//! - nef filter: nonnegative product against the pulled-back nef generators
//!   of the base (`H`; `f` and `C0 + e f`; `f` and `C0`; `f` and `2 C0 - f`
//!   for the plane, Hirzebruch, genus-one `e = 0` and genus-one `e = -1`
//!   bases respectively);
//! - Hodge-index inequality `r^2 L^2 <= (L.r)^2`, exact integer arithmetic;
//! - the degree, genus and optional self-intersection targets themselves.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::invariants::arithmetic_genus;
use crate::surface_models::{BaseSurface, DivisorClass, SurfaceModel};

/// Search targets and optional box overrides for one enumeration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveQuery {
    /// Degree `L.r` the candidates must have.
    pub target_degree: i64,
    /// Arithmetic genus the candidates must have.
    pub target_genus: i64,
    /// Optional lower bound on `r^2` (used for the cubic and quartic
    /// searches, which restrict to moving classes).
    pub min_self_intersection: Option<i64>,
    /// Optional cap on the base-degree coefficient; defaults to
    /// `target_degree`.
    pub max_base_coeff: Option<i64>,
    /// Optional override for the fiber-coefficient range.
    pub fiber_range: Option<(i64, i64)>,
}

impl CurveQuery {
    pub fn new(target_degree: i64, target_genus: i64) -> Self {
        CurveQuery {
            target_degree,
            target_genus,
            min_self_intersection: None,
            max_base_coeff: None,
            fiber_range: None,
        }
    }

    pub fn with_min_self(mut self, min: i64) -> Self {
        self.min_self_intersection = Some(min);
        self
    }
}

/// Pulled-back nef-cone generators of the base, fixed per supported base.
pub fn nef_generators(model: &SurfaceModel) -> Result<Vec<DivisorClass>, Error> {
    let rank = model.rank();
    let lift = |ruled: &[i64]| {
        let mut coeffs = vec![0i64; rank];
        coeffs[..ruled.len()].copy_from_slice(ruled);
        DivisorClass::from_coeffs(coeffs)
    };
    match model.base() {
        BaseSurface::Plane => Ok(vec![lift(&[1])]),
        BaseSurface::Hirzebruch { e } => Ok(vec![lift(&[0, 1]), lift(&[1, e])]),
        BaseSurface::Ruled { q: 1, e: 0 } => Ok(vec![lift(&[0, 1]), lift(&[1, 0])]),
        BaseSurface::Ruled { q: 1, e: -1 } => Ok(vec![lift(&[0, 1]), lift(&[2, -1])]),
        base => Err(Error::InvalidInput(format!(
            "nef generators are not catalogued for base {base:?}"
        ))),
    }
}

/// Full necessary-condition predicate. The brute-force oracle in the test
/// suite applies exactly this to raw lattice vectors.
pub fn satisfies_query(
    model: &SurfaceModel,
    l: &DivisorClass,
    query: &CurveQuery,
    class: &DivisorClass,
) -> Result<bool, Error> {
    if model.intersect(l, class)? != query.target_degree {
        return Ok(false);
    }
    if arithmetic_genus(model, class)? != query.target_genus {
        return Ok(false);
    }
    let self_int = model.intersect(class, class)?;
    if let Some(min) = query.min_self_intersection {
        if self_int < min {
            return Ok(false);
        }
    }
    // Hodge-index inequality, valid for any class when L^2 > 0
    let l2 = model.intersect(l, l)?;
    if self_int * l2 > query.target_degree * query.target_degree {
        return Ok(false);
    }
    if !has_candidate_shape(model, class) {
        return Ok(false);
    }
    // exceptional classes are orthogonal to the pulled-back generators, so
    // the nef filter is harmless to apply uniformly
    for gen in nef_generators(model)? {
        if model.intersect(class, &gen)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape filter: single exceptional, fiber component, or strict transform
/// with capped nonnegative multiplicities.
fn has_candidate_shape(model: &SurfaceModel, class: &DivisorClass) -> bool {
    let base_rank = if model.is_ruled_base() { 2 } else { 1 };
    let coeffs = class.coeffs();
    let (base_part, exc_part) = coeffs.split_at(base_rank);
    let multiplicities: Vec<i64> = exc_part.iter().map(|c| -c).collect();

    // single exceptional class
    if base_part.iter().all(|&c| c == 0) {
        let ones = exc_part.iter().filter(|&&c| c == 1).count();
        let zeros = exc_part.iter().filter(|&&c| c == 0).count();
        if model.is_ruled_base() {
            if ones == 1 && ones + zeros == exc_part.len() {
                return true;
            }
        } else {
            return ones == 1 && ones + zeros == exc_part.len();
        }
    }

    if model.is_ruled_base() {
        let (a, b) = (base_part[0], base_part[1]);
        if a == 0 {
            // fiber or the strict transform of the fiber through one of the
            // blown-up points (the points sit on distinct fibers)
            return b == 1
                && multiplicities.iter().all(|&m| m == 0 || m == 1)
                && multiplicities.iter().sum::<i64>() <= 1;
        }
        a >= 1 && multiplicities.iter().all(|&m| 0 <= m && m <= a)
    } else {
        let h = base_part[0];
        h >= 1 && multiplicities.iter().all(|&m| 0 <= m && m <= h)
    }
}

/// Enumerates, in lexicographic coefficient order, every class satisfying
/// the query's filter suite. Complete within the suite: no candidate in the
/// closed search region is missed.
pub fn enumerate_curves(
    model: &SurfaceModel,
    l: &DivisorClass,
    query: &CurveQuery,
) -> Result<Vec<DivisorClass>, Error> {
    let l2 = model.intersect(l, l)?;
    if l2 <= 0 {
        return Err(Error::InvalidInput(format!(
            "polarization has L^2 = {l2} <= 0"
        )));
    }
    if query.target_degree < 1 || query.target_degree > l2 {
        return Err(Error::InvalidInput(format!(
            "target degree {} outside 1..=L^2 = {l2}",
            query.target_degree
        )));
    }
    nef_generators(model)?; // fail early on uncatalogued bases

    let n = model.blowups();
    let mut found: Vec<DivisorClass> = Vec::new();

    // exceptional candidates
    for i in 0..n {
        let e = model.exceptional(i)?;
        if satisfies_query(model, l, query, &e)? {
            found.push(e);
        }
    }

    if model.is_ruled_base() {
        let l_dot_fiber = model.intersect(l, &model.fiber()?)?;
        if l_dot_fiber < 1 {
            return Err(Error::UnboundedSearch(format!(
                "L.f = {l_dot_fiber} cannot bound the fiber coefficient"
            )));
        }
        // fiber components
        for coeffs in fiber_family(model) {
            let class = model.class(&coeffs)?;
            if satisfies_query(model, l, query, &class)? {
                found.push(class);
            }
        }
        // strict transforms with positive fiber degree
        let a_max = query.max_base_coeff.unwrap_or(query.target_degree).max(1);
        let l_dot_section = model.intersect(l, &model.section()?)?;
        let exc_weights: Vec<i64> = (0..n)
            .map(|i| -l.coeffs()[2 + i]) // L = ... - sum c_i E_i
            .collect();
        for a in 1..=a_max {
            let cap = a;
            let (w_min, w_max) = weight_range(&exc_weights, cap);
            // solve target = a L.C0 + b L.f - sum c_i a_i for the b interval
            let num_lo = query.target_degree + w_min - a * l_dot_section;
            let num_hi = query.target_degree + w_max - a * l_dot_section;
            let mut b_lo = div_ceil(num_lo, l_dot_fiber);
            let mut b_hi = div_floor(num_hi, l_dot_fiber);
            if let Some((lo, hi)) = query.fiber_range {
                b_lo = b_lo.max(lo);
                b_hi = b_hi.min(hi);
            }
            for b in b_lo..=b_hi {
                let ruled = ruled_part(model, a, b);
                let w = model.intersect(l, &ruled)? - query.target_degree;
                // p_a target translates to sum a_i^2 - sum a_i = t
                let r2 = model.intersect(&ruled, &ruled)?;
                let rk = model.intersect(&ruled, &model.canonical_class())?;
                let t = r2 + rk + 2 - 2 * query.target_genus;
                for assignment in multiplicity_assignments(&exc_weights, cap, w, t) {
                    let mut coeffs = vec![a, b];
                    coeffs.extend(assignment.iter().map(|m| -m));
                    let class = model.class(&coeffs)?;
                    if satisfies_query(model, l, query, &class)? {
                        found.push(class);
                    }
                }
            }
        }
    } else {
        let h_class = model.hyperplane()?;
        let l_dot_h = model.intersect(l, &h_class)?;
        if l_dot_h < 1 {
            return Err(Error::UnboundedSearch(format!(
                "L.H = {l_dot_h} cannot bound the line coefficient"
            )));
        }
        let h_max = query.max_base_coeff.unwrap_or(query.target_degree).max(1);
        let exc_weights: Vec<i64> = (0..n).map(|i| -l.coeffs()[1 + i]).collect();
        for h in 1..=h_max {
            let cap = h;
            let w = h * l_dot_h - query.target_degree;
            // p_a: sum a_i^2 - sum a_i = h^2 - 3h + 2 - 2 p_a
            let t = h * h - 3 * h + 2 - 2 * query.target_genus;
            for assignment in multiplicity_assignments(&exc_weights, cap, w, t) {
                let mut coeffs = vec![h];
                coeffs.extend(assignment.iter().map(|m| -m));
                let class = model.class(&coeffs)?;
                if satisfies_query(model, l, query, &class)? {
                    found.push(class);
                }
            }
        }
    }

    found.sort();
    found.dedup();
    Ok(found)
}

fn ruled_part(model: &SurfaceModel, a: i64, b: i64) -> DivisorClass {
    let mut coeffs = vec![0i64; model.rank()];
    coeffs[0] = a;
    coeffs[1] = b;
    DivisorClass::from_coeffs(coeffs)
}

fn fiber_family(model: &SurfaceModel) -> Vec<Vec<i64>> {
    let n = model.blowups();
    let rank = model.rank();
    let mut out = Vec::with_capacity(n + 1);
    let mut fiber = vec![0i64; rank];
    fiber[1] = 1;
    out.push(fiber.clone());
    for i in 0..n {
        let mut c = fiber.clone();
        c[2 + i] = -1;
        out.push(c);
    }
    out
}

fn weight_range(weights: &[i64], cap: i64) -> (i64, i64) {
    let mut lo = 0;
    let mut hi = 0;
    for &c in weights {
        if c >= 0 {
            hi += c * cap;
        } else {
            lo += c * cap;
        }
    }
    (lo, hi)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// All multisets `(a_1..a_n)` with `0 <= a_i <= cap`, `sum a_i = s1` and
/// `sum a_i^2 = s2`, returned as non-increasing vectors. Empty whenever the
/// Cauchy-Schwarz feasibility `s1^2 <= n s2` fails.
pub fn solve_multiplicities(s1: i64, s2: i64, n: usize, cap: i64) -> Vec<Vec<i64>> {
    if s1 < 0 || s2 < 0 || cap < 0 {
        return Vec::new();
    }
    if s1 > n as i64 * cap || s2 > s1 * cap {
        return Vec::new();
    }
    if n == 0 {
        return if s1 == 0 && s2 == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    // Cauchy-Schwarz prune
    if s1 * s1 > n as i64 * s2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    descend_multisets(s1, s2, n, cap, &mut prefix, &mut out);
    out
}

fn descend_multisets(
    s1: i64,
    s2: i64,
    slots: usize,
    cap: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if slots == 0 {
        if s1 == 0 && s2 == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let k = slots as i64;
    // remaining sums must stay feasible
    if s1 < 0 || s2 < 0 || s1 > k * cap || s2 > s1 * cap || s1 * s1 > k * s2 {
        return;
    }
    let hi = cap.min(s1);
    for v in (0..=hi).rev() {
        prefix.push(v);
        // keep the vector non-increasing by capping deeper values at v
        descend_multisets(s1 - v, s2 - v * v, slots - 1, v, prefix, out);
        prefix.pop();
    }
}

/// All ordered assignments `(a_1..a_n)` with `0 <= a_i <= cap`, weighted sum
/// `sum c_i a_i = w` and `sum a_i (a_i - 1) = t`. Handles non-uniform
/// polarization weights; the uniform case reduces to `solve_multiplicities`.
fn multiplicity_assignments(weights: &[i64], cap: i64, w: i64, t: i64) -> Vec<Vec<i64>> {
    let n = weights.len();
    if cap < 0 || t < 0 {
        // sum a_i (a_i - 1) is nonnegative for integer a_i >= 0
        return if n == 0 && w == 0 && t == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    // uniform positive weights: pin the plain sum and use the multiset solver
    if n > 0 && weights.iter().all(|&c| c == weights[0]) && weights[0] > 0 {
        let c = weights[0];
        if w.rem_euclid(c) != 0 {
            return Vec::new();
        }
        let s1 = w / c;
        let s2 = t + s1;
        let mut out = Vec::new();
        for multiset in solve_multiplicities(s1, s2, n, cap) {
            expand_multiset(&multiset, n, &mut out);
        }
        out.sort();
        out.dedup();
        return out;
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    descend_assignments(weights, cap, w, t, &mut prefix, &mut out);
    out
}

fn descend_assignments(
    weights: &[i64],
    cap: i64,
    w: i64,
    t: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let i = prefix.len();
    if i == weights.len() {
        if w == 0 && t == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if t < 0 {
        return;
    }
    let (w_lo, w_hi) = weight_range(&weights[i..], cap);
    if w < w_lo || w > w_hi {
        return;
    }
    let t_max = (weights.len() - i) as i64 * (cap * cap - cap);
    if t > t_max {
        return;
    }
    for v in 0..=cap {
        prefix.push(v);
        descend_assignments(
            weights,
            cap,
            w - weights[i] * v,
            t - v * (v - 1),
            prefix,
            out,
        );
        prefix.pop();
    }
}

/// Distinct ordered vectors realizing a multiset over `n` slots.
fn expand_multiset(multiset: &[i64], n: usize, out: &mut Vec<Vec<i64>>) {
    debug_assert_eq!(multiset.len(), n);
    let mut sorted = multiset.to_vec();
    sorted.sort_unstable();
    permute_unique(&mut sorted, 0, out);
}

fn permute_unique(values: &mut Vec<i64>, start: usize, out: &mut Vec<Vec<i64>>) {
    if start == values.len() {
        out.push(values.clone());
        return;
    }
    let mut seen = Vec::new();
    for i in start..values.len() {
        if seen.contains(&values[i]) {
            continue;
        }
        seen.push(values[i]);
        values.swap(start, i);
        permute_unique(values, start + 1, out);
        values.swap(start, i);
    }
}

/// Annotated class for report output.
#[derive(Debug, Clone, Serialize)]
pub struct CurveRecord {
    pub coefficients: Vec<i64>,
    pub rendered: String,
    pub self_intersection: i64,
    pub k_product: i64,
    pub arithmetic_genus: i64,
}

/// Wraps an enumeration result with the annotations the reports carry.
pub fn annotate(model: &SurfaceModel, classes: &[DivisorClass]) -> Result<Vec<CurveRecord>, Error> {
    let k = model.canonical_class();
    classes
        .iter()
        .map(|c| {
            Ok(CurveRecord {
                coefficients: c.coeffs().to_vec(),
                rendered: model.format_class(c),
                self_intersection: model.intersect(c, c)?,
                k_product: model.intersect(c, &k)?,
                arithmetic_genus: arithmetic_genus(model, c)?,
            })
        })
        .collect()
}
