//! Exact arithmetic on the numerical equivalence lattice of the surface
//! models used by the classification: the plane, Hirzebruch surfaces, ruled
//! surfaces over a curve of genus `q`, and their blow-ups at `n` general
//! points lying on distinct fibers.
//!
//! The lattice basis is fixed as `(H)` or `(C0, f)` followed by the
//! exceptional classes `E_1..E_n`; serialized coefficient vectors follow this
//! order exactly. Only numerical equivalence is tracked: a class is an
//! integer vector, and linear-equivalence data (which bundle within a class)
//! is out of scope.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Minimal model under the blow-ups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BaseSurface {
    /// The projective plane; rank-one lattice spanned by the line class `H`.
    Plane,
    /// The Hirzebruch surface of invariant `e >= 0`.
    Hirzebruch { e: i64 },
    /// A `P^1`-bundle over a smooth curve of genus `q`, with normalized
    /// invariant `e` (negative values are allowed; the elliptic cases use
    /// `e = -1`).
    Ruled { q: i64, e: i64 },
}

impl BaseSurface {
    fn rank(&self) -> usize {
        match self {
            BaseSurface::Plane => 1,
            _ => 2,
        }
    }
}

/// Serializable description of a model: base kind plus blow-up count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub base: BaseSurface,
    pub blowups: usize,
}

/// A surface model with its intersection lattice and cached invariants.
///
/// Values are immutable after construction and every operation is pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    base: BaseSurface,
    blowups: usize,
}

/// Integer coefficient vector over a model's basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass {
    coeffs: Vec<i64>,
}

impl SurfaceModel {
    pub fn new(base: BaseSurface, blowups: usize) -> Result<Self, Error> {
        if let BaseSurface::Hirzebruch { e } = base {
            if e < 0 {
                return Err(Error::InvalidModel(format!(
                    "Hirzebruch invariant must be nonnegative, got {e}"
                )));
            }
        }
        if let BaseSurface::Ruled { q, .. } = base {
            if q < 0 {
                return Err(Error::InvalidModel(format!(
                    "base genus must be nonnegative, got {q}"
                )));
            }
        }
        Ok(SurfaceModel { base, blowups })
    }

    pub fn from_spec(spec: &SurfaceSpec) -> Result<Self, Error> {
        SurfaceModel::new(spec.base, spec.blowups)
    }

    pub fn spec(&self) -> SurfaceSpec {
        SurfaceSpec {
            base: self.base,
            blowups: self.blowups,
        }
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn blowups(&self) -> usize {
        self.blowups
    }

    /// Rank of the numerical lattice: 1 (plane) or 2 (ruled bases), plus one
    /// per blown-up point.
    pub fn rank(&self) -> usize {
        self.base.rank() + self.blowups
    }

    pub fn is_ruled_base(&self) -> bool {
        self.base.rank() == 2
    }

    /// Irregularity of the model (genus of the base curve; 0 for rational).
    pub fn irregularity(&self) -> i64 {
        match self.base {
            BaseSurface::Ruled { q, .. } => q,
            _ => 0,
        }
    }

    /// Self-intersection of the fundamental section on the ruled base.
    pub fn section_self_intersection(&self) -> Option<i64> {
        match self.base {
            BaseSurface::Hirzebruch { e } => Some(-e),
            BaseSurface::Ruled { e, .. } => Some(-e),
            BaseSurface::Plane => None,
        }
    }

    fn gram(&self, i: usize, j: usize) -> i64 {
        let base_rank = self.base.rank();
        if i >= base_rank || j >= base_rank {
            // exceptional classes: E_i^2 = -1, orthogonal to everything else
            return if i == j { -1 } else { 0 };
        }
        match self.base {
            BaseSurface::Plane => 1, // H^2 = 1
            BaseSurface::Hirzebruch { e } | BaseSurface::Ruled { e, .. } => {
                // basis (C0, f): C0^2 = -e, C0.f = 1, f^2 = 0
                match (i, j) {
                    (0, 0) => -e,
                    (1, 1) => 0,
                    _ => 1,
                }
            }
        }
    }

    fn check(&self, class: &DivisorClass) -> Result<(), Error> {
        if class.coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: class.coeffs.len(),
            });
        }
        Ok(())
    }

    /// Symmetric bilinear intersection pairing.
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.pair_unchecked(a, b))
    }

    pub(crate) fn pair_unchecked(&self, a: &DivisorClass, b: &DivisorClass) -> i64 {
        let base_rank = self.base.rank();
        let mut total = 0i64;
        for i in 0..base_rank {
            for j in 0..base_rank {
                total += a.coeffs[i] * b.coeffs[j] * self.gram(i, j);
            }
        }
        for k in base_rank..self.rank() {
            total -= a.coeffs[k] * b.coeffs[k];
        }
        total
    }

    /// Canonical class: `-3H + sum E_i` on the plane,
    /// `-2C0 + (2q - 2 - e) f + sum E_i` on ruled bases.
    pub fn canonical_class(&self) -> DivisorClass {
        let mut coeffs = vec![0i64; self.rank()];
        match self.base {
            BaseSurface::Plane => coeffs[0] = -3,
            BaseSurface::Hirzebruch { e } => {
                coeffs[0] = -2;
                coeffs[1] = -(e + 2);
            }
            BaseSurface::Ruled { q, e } => {
                coeffs[0] = -2;
                coeffs[1] = 2 * q - 2 - e;
            }
        }
        for c in coeffs.iter_mut().skip(self.base.rank()) {
            *c = 1;
        }
        DivisorClass { coeffs }
    }

    /// Holomorphic Euler characteristic: 1 for rational bases, `1 - q` for
    /// ruled bases; blow-ups do not change it.
    pub fn chi(&self) -> i64 {
        match self.base {
            BaseSurface::Plane | BaseSurface::Hirzebruch { .. } => 1,
            BaseSurface::Ruled { q, .. } => 1 - q,
        }
    }

    /// Topological Euler characteristic; each blow-up adds one.
    pub fn c2(&self) -> i64 {
        let minimal = match self.base {
            BaseSurface::Plane => 3,
            BaseSurface::Hirzebruch { .. } => 4,
            BaseSurface::Ruled { q, .. } => 4 * (1 - q),
        };
        minimal + self.blowups as i64
    }

    /// Self-intersection of the canonical class; each blow-up subtracts one.
    pub fn k_squared(&self) -> i64 {
        let k = self.canonical_class();
        self.pair_unchecked(&k, &k)
    }

    /// `(chi(O), K^2, c2)`, satisfying Noether's identity `12 chi = K^2 + c2`.
    pub fn model_invariants(&self) -> (i64, i64, i64) {
        (self.chi(), self.k_squared(), self.c2())
    }

    /// Zero class.
    pub fn zero(&self) -> DivisorClass {
        DivisorClass {
            coeffs: vec![0; self.rank()],
        }
    }

    /// Class from a coefficient slice in basis order.
    pub fn class(&self, coeffs: &[i64]) -> Result<DivisorClass, Error> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coeffs.len(),
            });
        }
        Ok(DivisorClass {
            coeffs: coeffs.to_vec(),
        })
    }

    /// Line class `H` (plane base only).
    pub fn hyperplane(&self) -> Result<DivisorClass, Error> {
        match self.base {
            BaseSurface::Plane => Ok(self.basis_vector(0)),
            _ => Err(Error::InvalidInput(
                "hyperplane class needs a plane base".into(),
            )),
        }
    }

    /// Pullback of the fundamental section `C0` (ruled bases only).
    pub fn section(&self) -> Result<DivisorClass, Error> {
        if self.is_ruled_base() {
            Ok(self.basis_vector(0))
        } else {
            Err(Error::InvalidInput(
                "section class needs a ruled base".into(),
            ))
        }
    }

    /// Pullback of the fiber class `f` (ruled bases only).
    pub fn fiber(&self) -> Result<DivisorClass, Error> {
        if self.is_ruled_base() {
            Ok(self.basis_vector(1))
        } else {
            Err(Error::InvalidInput("fiber class needs a ruled base".into()))
        }
    }

    /// Exceptional class `E_i`, zero-indexed.
    pub fn exceptional(&self, i: usize) -> Result<DivisorClass, Error> {
        if i >= self.blowups {
            return Err(Error::InvalidInput(format!(
                "exceptional index {i} out of range, model has {} blow-ups",
                self.blowups
            )));
        }
        Ok(self.basis_vector(self.base.rank() + i))
    }

    fn basis_vector(&self, i: usize) -> DivisorClass {
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[i] = 1;
        DivisorClass { coeffs }
    }

    /// Name of the `i`-th basis vector, for report output.
    pub fn basis_name(&self, i: usize) -> String {
        let base_rank = self.base.rank();
        if i < base_rank {
            match self.base {
                BaseSurface::Plane => "H".to_string(),
                _ => {
                    if i == 0 {
                        "C0".to_string()
                    } else {
                        "f".to_string()
                    }
                }
            }
        } else {
            format!("E{}", i - base_rank + 1)
        }
    }

    /// Human-readable rendering of a class over this model's basis.
    pub fn format_class(&self, class: &DivisorClass) -> String {
        let mut out = String::new();
        for (i, &c) in class.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = self.basis_name(i);
            if out.is_empty() {
                match c {
                    1 => out.push_str(&name),
                    -1 => out.push_str(&format!("-{name}")),
                    _ => out.push_str(&format!("{c}{name}")),
                }
            } else {
                match c {
                    1 => out.push_str(&format!(" + {name}")),
                    -1 => out.push_str(&format!(" - {name}")),
                    c if c > 0 => out.push_str(&format!(" + {c}{name}")),
                    c => out.push_str(&format!(" - {}{name}", -c)),
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl DivisorClass {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(
            self.coeffs.len(),
            rhs.coeffs.len(),
            "mismatched class lengths"
        );
        DivisorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(
            self.coeffs.len(),
            rhs.coeffs.len(),
            "mismatched class lengths"
        );
        DivisorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<i64> for &DivisorClass {
    type Output = DivisorClass;
    fn mul(self, rhs: i64) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(n: usize) -> SurfaceModel {
        SurfaceModel::new(BaseSurface::Plane, n).unwrap()
    }

    fn ruled(q: i64, e: i64, n: usize) -> SurfaceModel {
        SurfaceModel::new(BaseSurface::Ruled { q, e }, n).unwrap()
    }

    #[test]
    fn plane_lattice_basics() {
        let m = plane(0);
        assert_eq!(m.rank(), 1);
        let h = m.hyperplane().unwrap();
        assert_eq!(m.intersect(&h, &h).unwrap(), 1);
        assert_eq!(m.canonical_class(), m.class(&[-3]).unwrap());
        assert_eq!(m.model_invariants(), (1, 9, 3));
    }

    #[test]
    fn elliptic_bundle_blowup_lattice() {
        // rank-5 lattice over an elliptic curve, invariant 0, three points
        let m = ruled(1, 0, 3);
        assert_eq!(m.rank(), 5);
        let l = m.class(&[2, 3, -1, -1, -1]).unwrap();
        assert_eq!(m.intersect(&l, &l).unwrap(), 9);
        assert_eq!(m.canonical_class(), m.class(&[-2, 0, 1, 1, 1]).unwrap());
    }

    #[test]
    fn hirzebruch_many_blowups() {
        let m = SurfaceModel::new(BaseSurface::Hirzebruch { e: 1 }, 15).unwrap();
        assert_eq!(m.rank(), 17);
        let mut coeffs = vec![2, 7];
        coeffs.extend(std::iter::repeat_n(-1, 15));
        let l = m.class(&coeffs).unwrap();
        assert_eq!(m.intersect(&l, &l).unwrap(), 9);
    }

    #[test]
    fn negative_invariant_section() {
        let m = ruled(1, -1, 0);
        let c0 = m.section().unwrap();
        assert_eq!(m.intersect(&c0, &c0).unwrap(), 1);
        assert_eq!(m.model_invariants(), (0, 0, 0));
    }

    #[test]
    fn blowup_shifts_invariants() {
        let m0 = ruled(1, -1, 0);
        let m3 = ruled(1, -1, 3);
        assert_eq!(m3.chi(), m0.chi());
        assert_eq!(m3.k_squared(), m0.k_squared() - 3);
        assert_eq!(m3.c2(), m0.c2() + 3);
        assert_eq!(m3.model_invariants(), (0, -3, 3));
    }

    #[test]
    fn noether_identity_holds() {
        for m in [
            plane(0),
            plane(10),
            ruled(0, 2, 4),
            ruled(1, -1, 3),
            ruled(2, 1, 5),
        ] {
            let (chi, k2, c2) = m.model_invariants();
            assert_eq!(12 * chi, k2 + c2, "{:?}", m.spec());
        }
    }

    #[test]
    fn canonical_class_gives_right_fiber_and_section_genus() {
        for (q, e) in [(0i64, 0i64), (0, 3), (1, -1), (1, 0), (2, 1)] {
            let m = ruled(q, e, 0);
            let k = m.canonical_class();
            let f = m.fiber().unwrap();
            let c0 = m.section().unwrap();
            let pa = |d: &DivisorClass| {
                1 + (m.intersect(d, d).unwrap() + m.intersect(d, &k).unwrap()) / 2
            };
            assert_eq!(pa(&f), 0);
            assert_eq!(pa(&c0), q);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(SurfaceModel::new(BaseSurface::Hirzebruch { e: -1 }, 0).is_err());
        assert!(SurfaceModel::new(BaseSurface::Ruled { q: -2, e: 0 }, 0).is_err());
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let m = ruled(1, 0, 3);
        let short = DivisorClass::from_coeffs(vec![1, 2]);
        assert!(matches!(
            m.intersect(&short, &short),
            Err(Error::DimensionMismatch {
                expected: 5,
                found: 2
            })
        ));
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = SurfaceSpec {
            base: BaseSurface::Ruled { q: 1, e: -1 },
            blowups: 3,
        };
        let text = serde_json::to_string(&spec).unwrap();
        let back: SurfaceSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn formats_classes_readably() {
        let m = ruled(1, 0, 3);
        let l = m.class(&[2, 3, -1, -1, -1]).unwrap();
        assert_eq!(m.format_class(&l), "2C0 + 3f - E1 - E2 - E3");
    }
}
