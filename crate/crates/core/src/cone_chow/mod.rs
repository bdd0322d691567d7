//! Exact cycle arithmetic on the blow-up of a rank-4 or rank-5 quadric cone
//! in `P^5` along its vertex.
//!
//! The two multiplication tables are shipped as data files with a checksum
//! (`rank4.table`, `rank5.table`). Loading a ring parses its file, verifies
//! the checksum, and then validates the transcription: commutativity and
//! associativity on every basis triple, the definitional products
//! (`p1 = tau.P1`, `l = tau.F`, ...), and the degree of the cone itself.
//! A transcription error cannot survive construction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Error;

const RANK5_TABLE: &str = include_str!("rank5.table");
const RANK4_TABLE: &str = include_str!("rank4.table");

/// Rank of the quadric cone: 5 (vertex a point) or 4 (vertex a line).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConeRank {
    Four,
    Five,
}

impl fmt::Display for ConeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeRank::Four => write!(f, "4"),
            ConeRank::Five => write!(f, "5"),
        }
    }
}

/// Presentation of the Chow ring of the blown-up cone, with graded bases and
/// integer multiplication tensors. Immutable once constructed.
#[derive(Debug)]
pub struct ConeRing {
    rank: ConeRank,
    /// basis names for codimensions 1..=4
    grades: [Vec<&'static str>; 4],
    /// (grade_a, grade_b, index_a, index_b) -> coefficients over grade a+b
    products: BTreeMap<(usize, usize, usize, usize), Vec<i64>>,
}

/// Integer cycle class in a fixed grade of one of the two rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass {
    rank: ConeRank,
    grade: usize,
    coeffs: Vec<i64>,
}

impl CycleClass {
    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Returns the validated ring for the requested rank. Rings are built once
/// and cached; construction fails loudly on any table defect.
pub fn cone_ring(rank: ConeRank) -> Result<&'static ConeRing, Error> {
    static RANK5: OnceLock<Result<ConeRing, Error>> = OnceLock::new();
    static RANK4: OnceLock<Result<ConeRing, Error>> = OnceLock::new();
    let slot = match rank {
        ConeRank::Five => RANK5.get_or_init(|| ConeRing::load(ConeRank::Five)),
        ConeRank::Four => RANK4.get_or_init(|| ConeRing::load(ConeRank::Four)),
    };
    match slot {
        Ok(ring) => Ok(ring),
        Err(e) => Err(e.clone()),
    }
}

impl ConeRing {
    fn load(rank: ConeRank) -> Result<Self, Error> {
        let text = match rank {
            ConeRank::Five => RANK5_TABLE,
            ConeRank::Four => RANK4_TABLE,
        };
        Self::load_from_str(rank, text)
    }

    fn load_from_str(rank: ConeRank, text: &str) -> Result<Self, Error> {
        let grades: [Vec<&'static str>; 4] = match rank {
            ConeRank::Five => [
                vec!["Z", "tau"],
                vec!["Hbar", "X"],
                vec!["lbar", "F"],
                vec!["pt"],
            ],
            ConeRank::Four => [
                vec!["tau", "P1", "P2"],
                vec!["Q", "p1", "p2", "F"],
                vec!["l1bar", "l2bar", "l"],
                vec!["pt"],
            ],
        };
        let mut ring = ConeRing {
            rank,
            grades,
            products: BTreeMap::new(),
        };
        ring.parse(text)?;
        ring.validate()?;
        Ok(ring)
    }

    fn grade_of(&self, name: &str) -> Option<(usize, usize)> {
        for (g, names) in self.grades.iter().enumerate() {
            if let Some(i) = names.iter().position(|n| *n == name) {
                return Some((g + 1, i));
            }
        }
        None
    }

    fn parse(&mut self, text: &str) -> Result<(), Error> {
        let mut body_lines: Vec<&str> = Vec::new();
        let mut declared_checksum: Option<String> = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("checksum") {
                let value = rest.trim_start_matches(['=', ' ']).trim();
                declared_checksum = Some(value.to_string());
                continue;
            }
            if line.contains("AMBIGUOUS") {
                return Err(Error::ConeTable(format!(
                    "rank-{} table carries an unresolved entry: {line}",
                    self.rank
                )));
            }
            body_lines.push(line);
        }
        let digest = fnv1a64(&body_lines.join("\n"));
        match declared_checksum {
            None => {
                return Err(Error::ConeTable(format!(
                    "rank-{} table has no checksum",
                    self.rank
                )))
            }
            Some(expected) if expected != digest => {
                return Err(Error::ConeTable(format!(
                "rank-{} table checksum mismatch: declared {expected}, content hashes to {digest}",
                self.rank
            )))
            }
            _ => {}
        }

        for line in body_lines {
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| Error::ConeTable(format!("malformed line: {line}")))?;
            let (a, b) = lhs
                .trim()
                .split_once('.')
                .ok_or_else(|| Error::ConeTable(format!("malformed product: {lhs}")))?;
            let (ga, ia) = self
                .grade_of(a.trim())
                .ok_or_else(|| Error::ConeTable(format!("unknown cycle {a}")))?;
            let (gb, ib) = self
                .grade_of(b.trim())
                .ok_or_else(|| Error::ConeTable(format!("unknown cycle {b}")))?;
            let target = ga + gb;
            if target > 4 {
                return Err(Error::ConeTable(format!(
                    "product {line} exceeds the top grade"
                )));
            }
            let coeffs = self.parse_combination(rhs.trim(), target)?;
            self.insert_symmetric(ga, ia, gb, ib, coeffs)?;
        }

        // pairs in codimensions summing past the top grade vanish; fill the
        // remaining <=4 pairs only if the file defined them all
        for ga in 1..=3usize {
            for gb in ga..=3usize {
                if ga + gb > 4 {
                    continue;
                }
                for ia in 0..self.grades[ga - 1].len() {
                    for ib in 0..self.grades[gb - 1].len() {
                        if !self.products.contains_key(&(ga, gb, ia, ib)) {
                            return Err(Error::ConeTable(format!(
                                "missing product {}.{}",
                                self.grades[ga - 1][ia],
                                self.grades[gb - 1][ib]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn parse_combination(&self, rhs: &str, target_grade: usize) -> Result<Vec<i64>, Error> {
        let dim = self.grades[target_grade - 1].len();
        let mut coeffs = vec![0i64; dim];
        if rhs == "0" {
            return Ok(coeffs);
        }
        for term in rhs.split('+') {
            let term = term.trim();
            let (scalar, name) = match term.split_once(' ') {
                Some((k, n)) => (
                    k.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::ConeTable(format!("bad coefficient in {term}")))?,
                    n.trim(),
                ),
                None => (1, term),
            };
            let (g, i) = self
                .grade_of(name)
                .ok_or_else(|| Error::ConeTable(format!("unknown cycle {name}")))?;
            if g != target_grade {
                return Err(Error::ConeTable(format!(
                    "{name} has codimension {g}, expected {target_grade}"
                )));
            }
            coeffs[i] += scalar;
        }
        Ok(coeffs)
    }

    fn insert_symmetric(
        &mut self,
        ga: usize,
        ia: usize,
        gb: usize,
        ib: usize,
        coeffs: Vec<i64>,
    ) -> Result<(), Error> {
        for key in [(ga, gb, ia, ib), (gb, ga, ib, ia)] {
            if let Some(prev) = self.products.get(&key) {
                if *prev != coeffs {
                    return Err(Error::ConeTable(format!(
                        "conflicting entries for {}.{}",
                        self.grades[ga - 1][ia],
                        self.grades[gb - 1][ib]
                    )));
                }
            }
            self.products.insert(key, coeffs.clone());
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), Error> {
        // definitional products
        let defs: &[(&str, &str, &str)] = match self.rank {
            ConeRank::Five => &[],
            ConeRank::Four => &[
                ("tau", "P1", "p1"),
                ("tau", "P2", "p2"),
                ("tau", "F", "l"),
                ("tau", "p1", "l1bar"),
                ("tau", "p2", "l2bar"),
            ],
        };
        for (a, b, expect) in defs {
            let prod = self.mul(&self.basis(a).unwrap(), &self.basis(b).unwrap())?;
            if prod != self.basis(expect).unwrap() {
                return Err(Error::ConeTable(format!(
                    "definition {a}.{b} = {expect} violated"
                )));
            }
        }

        // exhaustive commutativity and associativity on basis triples
        let basis: Vec<CycleClass> = self
            .grades
            .iter()
            .enumerate()
            .flat_map(|(g, names)| (0..names.len()).map(move |i| (g + 1, i)))
            .map(|(g, i)| self.basis_at(g, i))
            .collect();
        for x in &basis {
            for y in &basis {
                let xy = self.mul_or_zero(x, y);
                let yx = self.mul_or_zero(y, x);
                if xy != yx {
                    return Err(Error::ConeTable(format!(
                        "commutativity fails at grades {} x {}",
                        x.grade, y.grade
                    )));
                }
                for z in &basis {
                    let left = self.mul_or_zero(&xy, z);
                    let right = self.mul_or_zero(x, &self.mul_or_zero(y, z));
                    if left != right {
                        return Err(Error::ConeTable(format!(
                            "associativity fails on a ({}, {}, {}) triple",
                            x.grade, y.grade, z.grade
                        )));
                    }
                }
            }
        }

        // the cone is a quadric: deg tau^4 = 2
        let tau = self.tau();
        let t2 = self.mul(&tau, &tau)?;
        let t4 = self.mul(&t2, &t2)?;
        if self.point_degree(&t4)? != 2 {
            return Err(Error::ConeTable("tau^4 must have degree 2".into()));
        }
        Ok(())
    }

    pub fn rank(&self) -> ConeRank {
        self.rank
    }

    /// Basis names of the given codimension (1 through 4).
    pub fn grade_names(&self, grade: usize) -> &[&'static str] {
        &self.grades[grade - 1]
    }

    /// Basis class by name.
    pub fn basis(&self, name: &str) -> Option<CycleClass> {
        let (g, i) = self.grade_of(name)?;
        Some(self.basis_at(g, i))
    }

    fn basis_at(&self, grade: usize, index: usize) -> CycleClass {
        let mut coeffs = vec![0i64; self.grades[grade - 1].len()];
        coeffs[index] = 1;
        CycleClass {
            rank: self.rank,
            grade,
            coeffs,
        }
    }

    /// Class from coefficients over the basis of one grade.
    pub fn class(&self, grade: usize, coeffs: &[i64]) -> Result<CycleClass, Error> {
        if !(1..=4).contains(&grade) {
            return Err(Error::InvalidInput(format!("grade {grade} out of range")));
        }
        let dim = self.grades[grade - 1].len();
        if coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coeffs.len(),
            });
        }
        Ok(CycleClass {
            rank: self.rank,
            grade,
            coeffs: coeffs.to_vec(),
        })
    }

    /// Tautological divisor `tau`.
    pub fn tau(&self) -> CycleClass {
        self.basis("tau").unwrap()
    }

    /// Exceptional divisor of the blow-up: `tau - Z` (rank 5) or
    /// `tau - P1 - P2` (rank 4).
    pub fn exceptional_divisor(&self) -> CycleClass {
        match self.rank {
            ConeRank::Five => self.class(1, &[-1, 1]).unwrap(),
            ConeRank::Four => self.class(1, &[1, -1, -1]).unwrap(),
        }
    }

    /// First Chern class of the blown-up cone.
    pub fn c1(&self) -> CycleClass {
        match self.rank {
            // 2 (tau + Z)
            ConeRank::Five => self.class(1, &[2, 2]).unwrap(),
            // 4 tau - T = 3 tau + P1 + P2
            ConeRank::Four => self.class(1, &[3, 1, 1]).unwrap(),
        }
    }

    /// Second Chern class of the blown-up cone.
    pub fn c2(&self) -> CycleClass {
        match self.rank {
            // Z^2 + 6 tau Z = 2 X + 6 Hbar
            ConeRank::Five => self.class(2, &[6, 2]).unwrap(),
            // 3 Q + 4 p1 + 4 p2
            ConeRank::Four => self.class(2, &[3, 4, 4, 0]).unwrap(),
        }
    }

    /// Table-driven bilinear product. Errors if the grades sum past the top.
    pub fn mul(&self, x: &CycleClass, y: &CycleClass) -> Result<CycleClass, Error> {
        if x.rank != self.rank || y.rank != self.rank {
            return Err(Error::InvalidInput(
                "cycle belongs to the other cone ring".into(),
            ));
        }
        let target = x.grade + y.grade;
        if target > 4 {
            return Err(Error::GradeOverflow { grade_sum: target });
        }
        let dim = self.grades[target - 1].len();
        let mut out = vec![0i64; dim];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let entry = &self.products[&(x.grade, y.grade, i, j)];
                for (k, &c) in entry.iter().enumerate() {
                    out[k] += a * b * c;
                }
            }
        }
        Ok(CycleClass {
            rank: self.rank,
            grade: target,
            coeffs: out,
        })
    }

    /// Like `mul`, but dimension overflow yields the zero point class, which
    /// is what the geometry means; used by the validation sweeps.
    fn mul_or_zero(&self, x: &CycleClass, y: &CycleClass) -> CycleClass {
        if x.grade + y.grade > 4 {
            CycleClass {
                rank: self.rank,
                grade: 4,
                coeffs: vec![0],
            }
        } else {
            self.mul(x, y).expect("grades checked")
        }
    }

    /// Integer degree of a point class.
    pub fn point_degree(&self, x: &CycleClass) -> Result<i64, Error> {
        if x.grade != 4 {
            return Err(Error::InvalidInput(format!(
                "degree needs a point class, got grade {}",
                x.grade
            )));
        }
        Ok(x.coeffs[0])
    }

    /// Degree of a surface class under the tautological embedding:
    /// `deg = tau . tau . S`.
    pub fn surface_degree(&self, s: &CycleClass) -> Result<i64, Error> {
        if s.grade != 2 {
            return Err(Error::InvalidInput(format!(
                "surface class expected, got grade {}",
                s.grade
            )));
        }
        let tau = self.tau();
        let t2 = self.mul(&tau, &tau)?;
        self.point_degree(&self.mul(&t2, s)?)
    }

    /// Renders a class over its grade's basis names.
    pub fn format_class(&self, x: &CycleClass) -> String {
        let names = &self.grades[x.grade - 1];
        let mut out = String::new();
        for (i, &c) in x.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = names[i];
            if out.is_empty() {
                match c {
                    1 => out.push_str(name),
                    -1 => out.push_str(&format!("-{name}")),
                    _ => out.push_str(&format!("{c} {name}")),
                }
            } else if c > 0 {
                if c == 1 {
                    out.push_str(&format!(" + {name}"));
                } else {
                    out.push_str(&format!(" + {c} {name}"));
                }
            } else if c == -1 {
                out.push_str(&format!(" - {name}"));
            } else {
                out.push_str(&format!(" - {} {name}", -c));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// 64-bit FNV-1a digest, hex-encoded; guards the table files.
pub fn fnv1a64(text: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

/// How the cone vertex sits relative to the embedded surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexConfig {
    /// Vertex disjoint from the surface.
    Disjoint,
    /// Rank 5 only: the vertex point is a smooth point of the surface.
    VertexOnSurface,
    /// Rank 4 only: the vertex line meets the surface in finitely many
    /// points of total intersection multiplicity `s >= 1`. `None` leaves `s`
    /// free and enumerates every feasible value.
    MeetsPoints { total_multiplicity: Option<i64> },
    /// Rank 4 only: the vertex line lies on the surface, with exceptional
    /// restriction `delta` times a line of self-intersection -1. `None`
    /// leaves `delta` free.
    ContainsLine { delta: Option<i64> },
}

/// Admissible strict-transform class of an embedded surface, summarized by
/// the coefficients the numerical constraints pin down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConeClassTuple {
    pub alpha: i64,
    /// Rank 5: the coefficient of `X`. Rank 4: `beta + gamma`; the summands
    /// are not individually pinned by the numerical constraints.
    pub beta_like: i64,
    /// Coefficient of `F`; zero except in the contains-line configuration.
    pub delta: i64,
}

/// Enumerates every coefficient tuple compatible with the degree identity,
/// the effectivity constraints and the vertex configuration.
pub fn enumerate_cone_classes(
    ring: &ConeRing,
    degree: i64,
    config: VertexConfig,
) -> Result<Vec<ConeClassTuple>, Error> {
    if degree < 1 {
        return Err(Error::InvalidInput(format!("degree {degree} < 1")));
    }
    let mut out = Vec::new();
    match (ring.rank(), config) {
        (ConeRank::Five, VertexConfig::Disjoint) => {
            // T.S' = 0 forces the X coefficient to vanish, so deg = 2 alpha
            if degree % 2 == 0 {
                out.push(ConeClassTuple {
                    alpha: degree / 2,
                    beta_like: 0,
                    delta: 0,
                });
            }
        }
        (ConeRank::Five, VertexConfig::VertexOnSurface) => {
            // one exceptional (-1)-curve: (T|)^2 = -1 forces X coefficient 1
            if (degree - 1) % 2 == 0 && degree >= 1 {
                out.push(ConeClassTuple {
                    alpha: (degree - 1) / 2,
                    beta_like: 1,
                    delta: 0,
                });
            }
        }
        (ConeRank::Five, _) => {
            return Err(Error::InvalidInput(
                "the rank-5 vertex is a point; points and lines configurations need rank 4".into(),
            ))
        }
        (ConeRank::Four, VertexConfig::Disjoint) => {
            // T.tau.S' = delta = 0 and (T|)^2 = -(beta+gamma) = 0
            if degree % 2 == 0 {
                out.push(ConeClassTuple {
                    alpha: degree / 2,
                    beta_like: 0,
                    delta: 0,
                });
            }
        }
        (ConeRank::Four, VertexConfig::MeetsPoints { total_multiplicity }) => {
            // delta = 0, beta + gamma = s, and alpha >= 2: alpha is the degree
            // of the generically finite projection from the vertex line, and
            // the surface is not birational to the base quadric
            let candidates: Vec<i64> = match total_multiplicity {
                Some(s) => vec![s],
                None => (1..=degree).collect(),
            };
            for s in candidates {
                if s < 1 {
                    continue;
                }
                let rest = degree - s;
                if rest >= 4 && rest % 2 == 0 {
                    out.push(ConeClassTuple {
                        alpha: rest / 2,
                        beta_like: s,
                        delta: 0,
                    });
                }
            }
        }
        (ConeRank::Four, VertexConfig::ContainsLine { delta }) => {
            // the vertex line restricts to delta times a (-1)-line, which
            // pins beta + gamma = delta + delta^2
            let candidates: Vec<i64> = match delta {
                Some(d) => vec![d],
                None => (1..=degree).collect(),
            };
            for d in candidates {
                if d < 1 {
                    continue;
                }
                let pair = d + d * d;
                let rest = degree - d - pair;
                if rest < 0 || rest % 2 != 0 {
                    continue;
                }
                let alpha = rest / 2;
                // a (beta, gamma) split obeying alpha + beta >= 0 and
                // alpha + gamma >= 0 must exist
                if pair >= -2 * alpha {
                    out.push(ConeClassTuple {
                        alpha,
                        beta_like: pair,
                        delta: d,
                    });
                }
            }
        }
        (ConeRank::Four, VertexConfig::VertexOnSurface) => {
            return Err(Error::InvalidInput(
                "the rank-4 vertex is a line; use the meets or contains-line configurations".into(),
            ))
        }
    }
    out.sort();
    Ok(out)
}

/// Model-side value of `c1(cone)|_{S'} . c1(S')` when the vertex is a point
/// of the surface, blown up once: `2 (2L - E)(-K - E) = -4 L.K - 2`.
pub fn c1_restriction_vertex_blowup(l_dot_k: i64) -> i64 {
    -4 * l_dot_k - 2
}

/// Same value when the vertex line lies on the surface (so the strict
/// transform is the surface itself): `(4L - delta r)(-K) = -4 L.K + delta r.K`.
pub fn c1_restriction_contains_line(l_dot_k: i64, r_dot_k: i64, delta: i64) -> i64 {
    -4 * l_dot_k + delta * r_dot_k
}

/// Same value when the vertex line meets the surface in points of total
/// multiplicity `s`, all simple: `(4L - sum E_j)(-K - sum E_j) = -4 L.K - s`.
pub fn c1_restriction_meets_points(l_dot_k: i64, s: i64) -> i64 {
    -4 * l_dot_k - s
}

/// Residual of the double-point-style Chern relation
/// `c2(cone)|_{S'} = S'.S' + c1(cone)|_{S'} . c1(S') - K^2_{S'} + c2(S')`,
/// as `LHS - RHS`. Zero means the relation is satisfiable; a nonzero value
/// certifies that the configuration cannot occur.
pub fn dpf_residual(
    ring: &ConeRing,
    s_class: &CycleClass,
    k2_surface: i64,
    c2_surface: i64,
    c1_restriction: i64,
) -> Result<i64, Error> {
    if s_class.grade() != 2 {
        return Err(Error::InvalidInput(format!(
            "surface class expected in grade 2, got grade {}",
            s_class.grade()
        )));
    }
    let lhs = ring.point_degree(&ring.mul(&ring.c2(), s_class)?)?;
    let self_int = ring.point_degree(&ring.mul(s_class, s_class)?)?;
    Ok(lhs - (self_int + c1_restriction - k2_surface + c2_surface))
}
