//! Corona transition matrices: the general block construction for
//! monomorphic all-≥4 sequences, a parameterized catalog of explicit
//! matrices for families containing 3-valent vertices or non-concentric
//! behavior, and the fixed pair of matrices for the polymorphic sequence
//! [4,4,6,8].
//!
//! Every matrix is stored with the convention **column = parent type**, so
//! the distribution vectors of successive coronas satisfy v_{n+1} = M·v_n
//! and |F_n| = j·(M^{n−1}·v_1) with j the weight (usually all-ones) row.
//! Entries are exact rationals; all catalog entries lie in (1/4)·ℤ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{match_pattern, Morphism};
use crate::cyclic::CyclicSequence;

/// Exact rational scalar used throughout the matrix layer.
pub type Rational = BigRational;

fn q(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// n/2 as an exact rational (half-face counts are routine in the catalog).
fn qh(n: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

/// Identity of a face type within a corona: its incidence with the previous
/// corona (one vertex / two adjacent vertices / three consecutive vertices
/// with a 3-valent middle), indexed by position in σ where applicable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FaceTypeId {
    /// Shares a single vertex with the previous corona; 1-indexed by σ slot.
    Wedge(usize),
    /// Shares one edge (two adjacent vertices) with the previous corona.
    Brick(usize),
    /// Shares a path of three vertices whose middle is 3-valent.
    NotchedBrick(usize),
    /// A family-specific type that does not fit the three standard kinds.
    Other(String),
}

impl fmt::Display for FaceTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceTypeId::Wedge(i) => write!(f, "w{i}"),
            FaceTypeId::Brick(i) => write!(f, "b{i}"),
            FaceTypeId::NotchedBrick(i) => write!(f, "nb{i}"),
            FaceTypeId::Other(s) => write!(f, "{s}"),
        }
    }
}

/// Errors from matrix construction and catalog lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    /// The block construction requires a monomorphic sequence.
    #[error("sequence is not monomorphic")]
    NotMonomorphic,
    /// The block construction requires every valence ≥ 4.
    #[error("sequence has a 3-valent entry; the block construction needs all terms >= 4")]
    TermBelowFour,
    /// No explicit matrix exists for this sequence.
    #[error("no catalog matrix for this sequence")]
    NoCatalogEntry,
    /// [4,4,6,8] admits two tessellations; a variant must be chosen.
    #[error("sequence admits multiple tessellations; a variant (T1 or T2) is required")]
    VariantRequired,
    /// A notched-brick type was requested at a position without a 3.
    #[error("notched brick at position {0} requires a 3-valent predecessor")]
    NotchedBrickInvalid(usize),
    /// The requested root valence is not the catalog root for this family.
    #[error("unsupported root valence {got}; the catalog root for this family is {expected}")]
    UnsupportedRoot { got: u32, expected: u32 },
}

/// The two tessellations with valence sequence [4,4,6,8] (see the paired
/// local configurations around 4-valent vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Every 4-valent vertex sees one 6- and one 8-valent non-4 neighbor.
    T1,
    /// Every 4-valent vertex sees two equal non-4 neighbors (6,6 or 8,8).
    T2,
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "T1" => Ok(Variant::T1),
            "T2" => Ok(Variant::T2),
            other => Err(format!("unknown variant {other:?}; expected T1 or T2")),
        }
    }
}

/// Exact-rational corona transition matrix with face-type labels and a
/// counting weight row (all ones except for the halved [p,p,3] system).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionMatrix {
    labels: Vec<FaceTypeId>,
    /// Row = child type, column = parent type.
    entries: Vec<Vec<Rational>>,
    /// Weight row j: |F_n| = j·v_n.
    weights: Vec<Rational>,
}

impl TransitionMatrix {
    /// Builds a matrix from rows; panics when the shape is not square.
    pub fn new(labels: Vec<FaceTypeId>, entries: Vec<Vec<Rational>>) -> Self {
        let d = labels.len();
        assert_eq!(entries.len(), d, "row count must match label count");
        for row in &entries {
            assert_eq!(row.len(), d, "matrix must be square");
        }
        let weights = vec![Rational::one(); d];
        TransitionMatrix { labels, entries, weights }
    }

    /// Overrides the counting weight row (used by the halved [p,p,3] system).
    pub fn with_weights(mut self, weights: Vec<Rational>) -> Self {
        assert_eq!(weights.len(), self.order());
        self.weights = weights;
        self
    }

    /// Matrix order (number of face types).
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Face-type labels, row/column order.
    pub fn labels(&self) -> &[FaceTypeId] {
        &self.labels
    }

    /// The weight row j used to turn a distribution vector into |F_n|.
    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Entry at (row=child i, column=parent j).
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    /// All rows (child-major).
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// v_{n+1} = M·v_n.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let d = self.order();
        assert_eq!(v.len(), d);
        (0..d)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..d {
                    if !self.entries[i][j].is_zero() && !v[j].is_zero() {
                        acc += &self.entries[i][j] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// |F_n| for the given distribution vector: the weighted total j·v.
    pub fn face_count(&self, v: &[Rational]) -> Rational {
        self.weights
            .iter()
            .zip(v)
            .map(|(w, x)| w * x)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Sum of one column (equals Ω of that column's face type for
    /// uniformly-concentric monomorphic families).
    pub fn column_sum(&self, j: usize) -> Rational {
        self.entries
            .iter()
            .map(|row| row[j].clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Transposed copy (spectra are invariant; used for property tests).
    pub fn transposed(&self) -> TransitionMatrix {
        let d = self.order();
        let entries = (0..d)
            .map(|i| (0..d).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        TransitionMatrix {
            labels: self.labels.clone(),
            entries,
            weights: self.weights.clone(),
        }
    }

    /// True when every denominator divides 4 (catalog-wide invariant).
    pub fn denominators_divide_four(&self) -> bool {
        let four = BigInt::from(4);
        self.entries
            .iter()
            .flatten()
            .all(|e| (&four % e.denom()).is_zero())
    }

    /// JSON export: labels plus entries as exact "n/d" strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "entries": self.entries.iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "weights": self.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "convention": "column = parent; v_{n+1} = M v_n",
        })
    }

    /// Plain-text aligned grid for eyeball diffs.
    pub fn to_text_grid(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (label, row) in self.labels.iter().zip(&cells) {
            out.push_str(&format!("{:>4} |", label.to_string()));
            for c in row {
                out.push_str(&format!(" {c:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Per-face-type counts of one corona; rational because half-faces occur in
/// the accretion bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionVector {
    pub counts: Vec<Rational>,
}

impl DistributionVector {
    /// A vector that is zero except for `value` at `index`.
    pub fn unit(order: usize, index: usize, value: Rational) -> Self {
        let mut counts = vec![Rational::zero(); order];
        counts[index] = value;
        DistributionVector { counts }
    }

    /// Plain (unweighted) total of all components.
    pub fn total(&self) -> Rational {
        self.counts.iter().fold(Rational::zero(), |a, b| a + b)
    }
}

/// A catalog lookup result: matrix, first-corona distribution, and the root
/// the distribution was derived for.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Canonical family key (e.g. "3pqp").
    pub family: String,
    pub matrix: TransitionMatrix,
    /// First-corona face-type census for `root_valence` (simulator-derived).
    pub v1: DistributionVector,
    /// Valence of the root vertex that v1 describes.
    pub root_valence: u32,
}

// ------------------------------------------------------------------ Ω counts

/// Offspring count Ω of a face type for a monomorphic sequence, i.e. the
/// total (half-weighted) number of corona-(n+1) faces attributed to one face
/// of that type.
pub fn offspring_counts(s: &CyclicSequence, f: &FaceTypeId) -> Result<Rational, TransitionError> {
    let ps: Vec<i64> = s.terms().iter().map(|&t| t as i64).collect();
    let k = ps.len();
    let kk = k as i64;
    let at = |i: i64| ps[i.rem_euclid(kk) as usize];
    let sum_except = |excl: &[i64]| -> i64 {
        let excl: Vec<usize> = excl.iter().map(|&i| i.rem_euclid(kk) as usize).collect();
        (0..k).filter(|j| !excl.contains(j)).map(|j| ps[j]).sum()
    };
    match *f {
        FaceTypeId::Wedge(i) => {
            let u = (i as i64) - 1; // 1-indexed slot -> 0-indexed position
            Ok(qh(at(u - 1) + at(u + 1)) + q(-2 * kk + 3 + sum_except(&[u - 1, u, u + 1])))
        }
        FaceTypeId::Brick(i) => {
            let u = (i as i64) - 1;
            Ok(qh(at(u - 2) + at(u + 1)) + q(-2 * kk + 5 + sum_except(&[u - 2, u - 1, u, u + 1])))
        }
        FaceTypeId::NotchedBrick(i) => {
            let u = (i as i64) - 1;
            if at(u - 1) != 3 {
                return Err(TransitionError::NotchedBrickInvalid(i));
            }
            // the notched brick consumes one more old vertex than a brick
            Ok(qh(at(u - 3) + at(u + 1))
                + q(-2 * kk + 7 + sum_except(&[u - 3, u - 2, u - 1, u, u + 1])))
        }
        FaceTypeId::Other(_) => Err(TransitionError::NoCatalogEntry),
    }
}

// ------------------------------------------------------------ block matrices

/// The general 2k×2k block transition matrix for a monomorphic sequence with
/// all valences ≥ 4; labels ŵ_1..ŵ_k then b̂_1..b̂_k, column = parent.
pub fn block_matrix_g44(s: &CyclicSequence) -> Result<TransitionMatrix, TransitionError> {
    if s.terms().iter().any(|&t| t < 4) {
        return Err(TransitionError::TermBelowFour);
    }
    match match_pattern(s) {
        Some((pat, _)) if pat.morphism == Morphism::Monomorphic => {}
        Some(_) => return Err(TransitionError::NotMonomorphic),
        // unmatched all-≥4 sequences are outside the catalog's guarantee
        None => return Err(TransitionError::NotMonomorphic),
    }
    Ok(block_matrix_raw(s.terms()))
}

/// The block construction itself, without the monomorphism guard (used for
/// parameter sweeps over raw words in tests and for the fixed 12×12 rows).
pub fn block_matrix_raw(ps: &[u32]) -> TransitionMatrix {
    let k = ps.len();
    let mut labels = Vec::with_capacity(2 * k);
    labels.extend((1..=k).map(FaceTypeId::Wedge));
    labels.extend((1..=k).map(FaceTypeId::Brick));
    let mut m = vec![vec![Rational::zero(); 2 * k]; 2 * k];
    for i in 0..k {
        let p = ps[i] as i64;
        for j in 0..k {
            let d = (j + k - i) % k;
            // A block: wedge child i, wedge parent j
            m[i][j] = if d == 0 {
                q(0)
            } else if d == 1 || d == k - 1 {
                qh(p - 4)
            } else {
                q(p - 3)
            };
            // B block: wedge child i, brick parent j
            m[i][k + j] = if d == 0 || d == 1 {
                q(0)
            } else if d == 2 || d == k - 1 {
                qh(p - 4)
            } else {
                q(p - 3)
            };
            // C block: brick child i, wedge parent j
            m[k + i][j] = if d == 0 || d == k - 1 { q(0) } else { q(1) };
            // D block: brick child i, brick parent j
            m[k + i][k + j] = if d == 0 || d == 1 || d == k - 1 { q(0) } else { q(1) };
        }
    }
    TransitionMatrix::new(labels, m)
}

/// The [p,q,r,p,s,t] matrix as printed in its proposition: the block
/// construction with the brick-offspring-of-wedge block zeroed at offsets
/// {0,1} instead of {0,k−1}. Kept for diagnostics; the catalog uses the
/// standard block construction for this family because the simulator census
/// matches the standard blocks, not this variant.
pub fn pqrpst_printed_matrix(p: u32, qv: u32, r: u32, sv: u32, t: u32) -> TransitionMatrix {
    let ps = [p, qv, r, p, sv, t];
    let mut m = block_matrix_raw(&ps);
    let k = 6;
    for i in 0..k {
        for j in 0..k {
            let d = (j + k - i) % k;
            m.entries[k + i][j] = if d == 0 || d == 1 { q(0) } else { q(1) };
        }
    }
    m
}

// ------------------------------------------------------- explicit catalogs

fn labeled(names: &[&str], rows: Vec<Vec<Rational>>) -> TransitionMatrix {
    TransitionMatrix::new(
        names.iter().map(|n| FaceTypeId::Other((*n).to_string())).collect(),
        rows,
    )
}

fn m_ppq(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4"],
        vec![
            vec![qh(p - 4), q(p - 4), q(-1), q(0)],
            vec![qh(qv - 4), q(0), q(0), q(-1)],
            vec![q(1), q(0), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0)],
        ],
    )
}

fn m_4pq(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4"],
        vec![
            vec![q(0), qh(p - 4), q(-1), q(0)],
            vec![qh(qv - 4), q(0), q(0), q(-1)],
            vec![q(1), q(0), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0)],
        ],
    )
}

/// [p,p,3] reduces to the constant sequence [p/2,p/2,p/2] after suppressing
/// 3-valent vertices; |F_n| = (2,4)·M^{n−1}·(p/2,0) in the halved system.
fn m_pp3_halved(p: i64) -> TransitionMatrix {
    labeled(
        &["g1", "g2"],
        vec![vec![qh(p) - q(4), q(-1)], vec![q(1), q(0)]],
    )
    .with_weights(vec![q(2), q(4)])
}

fn m_pqr(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![q(0), qh(p - 4), qh(p - 4), q(-1), q(0), q(0)],
            vec![qh(qv - 4), q(0), qh(qv - 4), q(0), q(-1), q(0)],
            vec![qh(r - 4), qh(r - 4), q(0), q(0), q(0), q(-1)],
            vec![q(1), q(0), q(0), q(0), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0), q(0), q(0)],
            vec![q(0), q(0), q(1), q(0), q(0), q(0)],
        ],
    )
}

fn m_ppqq(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5"],
        vec![
            vec![qh(p - 4), qh(3 * p - 10), qh(p - 4), q(0), q(p - 4)],
            vec![qh(3 * qv - 10), qh(qv - 4), qh(qv - 4), q(qv - 4), q(0)],
            vec![q(1), q(1), q(1), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0), q(1)],
            vec![q(1), q(0), q(0), q(1), q(0)],
        ],
    )
}

fn m_3p4p(p: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7"],
        vec![
            vec![q(p - 3), q(p - 4), q(p - 4), qh(p - 4), qh(p - 4), q(-2), q(0)],
            vec![q(0); 7],
            vec![q(0), q(1), q(0), q(0), q(0), q(0), q(0)],
            vec![q(1), q(2), q(0), q(0), q(1), q(-2), q(0)],
            vec![q(0), q(0), q(2), q(0), q(0), q(2), q(0)],
            vec![qh(1), q(0), q(0), qh(1), q(0), q(0), q(0)],
            vec![q(0), q(0), q(0), q(0), q(0), q(1), q(0)],
        ],
    )
}

fn m_3pqp(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![q(p - 3), q(p - 4), q(p - 4), qh(p - 4), qh(p - 4), q(0)],
            vec![q(0); 6],
            vec![qh(qv - 4), q(qv - 3), q(0), q(0), qh(qv - 4), q(-1)],
            vec![q(1), q(2), q(0), q(0), q(1), q(0)],
            vec![q(0), q(0), q(2), q(0), q(0), q(0)],
            vec![qh(1), q(0), q(0), qh(1), q(0), q(0)],
        ],
    )
}

fn m_pqpr(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5"],
        vec![
            vec![q(p - 3), q(p - 4), q(p - 4), qh(p - 4), qh(p - 4)],
            vec![qh(qv - 4), q(0), q(qv - 3), q(0), qh(qv - 4)],
            vec![qh(r - 4), q(r - 3), q(0), qh(r - 4), q(0)],
            vec![q(1), q(0), q(2), q(0), q(1)],
            vec![q(1), q(2), q(0), q(1), q(0)],
        ],
    )
}

/// Corrected [3,3,3,3,p] accretion matrix. Six face types alternating by
/// corona parity, order [b4, nb2, w4 | b3, nb1, nb3]; the census obeys
/// b4 = nb2 = x_{m−1}, w4 = x_m on odd coronas and b3 = nb1 = x_m,
/// nb3 = x_{m−1} on even coronas, with x_{m+1} = (p−4)x_m − x_{m−1},
/// x_0 = 0, x_1 = p. Spectral radius (√(p−2)+√(p−6))/2; v1 = p·e_{w4}.
fn m_3333p_fixed(p: i64) -> TransitionMatrix {
    labeled(
        &["b4", "nb2", "w4", "b3", "nb1", "nb3"],
        vec![
            vec![q(0), q(0), q(0), q(1), q(0), q(0)],
            vec![q(0), q(0), q(0), q(0), q(1), q(0)],
            vec![q(0), q(0), q(0), qh(p - 4), qh(p - 4), q(-1)],
            vec![q(0), q(0), q(1), q(0), q(0), q(0)],
            vec![q(0), q(0), q(1), q(0), q(0), q(0)],
            vec![qh(1), qh(1), q(0), q(0), q(0), q(0)],
        ],
    )
}

/// The [3,3,3,3,p] matrix as printed in its proposition; its corona series
/// is infeasible against the simulator (no nonnegative v1 reproduces the
/// counts past corona 5). Kept for diagnostics only.
pub fn m_3333p_printed(p: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![q(0), q(0), qh(p - 4), q(0), qh(p - 4), q(-1)],
            vec![q(0), q(0), q(1), q(0), q(0), q(0)],
            vec![q(1), q(0), q(0), q(0), q(0), q(0)],
            vec![q(0), q(0), qh(1), q(0), qh(1), q(0)],
            vec![q(1), qh(1), q(0), q(0), q(0), q(0)],
            vec![q(0), qh(1), q(0), q(0), q(0), q(0)],
        ],
    )
}

fn m_333pp(p: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![qh(p - 4), qh(p - 4), qh(3 * p - 10), q(0), q(p - 4), qh(p - 4)],
            vec![q(1), q(1), q(0), q(0), q(0), q(0)],
            vec![q(1), q(0), q(0), q(0), q(0), q(0)],
            vec![q(0), q(0), q(1), q(0), q(1), q(0)],
            vec![qh(1), q(0), q(0), q(1), q(0), q(0)],
            vec![q(0), qh(1), qh(1), q(0), q(0), qh(1)],
        ],
    )
}

fn m_33p3p(p: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3"],
        vec![
            vec![q(p - 3), qh(p - 4), qh(p - 4)],
            vec![q(1), q(1), q(0)],
            vec![q(1), qh(1), qh(1)],
        ],
    )
}

fn m_33p3q(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![q(0), q(p - 3), q(0), qh(p - 4), qh(p - 4), q(0)],
            vec![q(qv - 3), q(0), qh(qv - 4), q(0), q(0), qh(qv - 4)],
            vec![q(0), q(1), q(0), q(1), q(0), q(0)],
            vec![q(1), q(0), q(1), q(0), q(0), q(0)],
            vec![q(1), q(0), qh(1), q(0), q(0), qh(1)],
            vec![q(0), q(1), q(0), qh(1), qh(1), q(0)],
        ],
    )
}

fn m_ppqrq(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![qh(p - 4), qh(3 * p - 10), q(2 * p - 6), qh(p - 4), q(0), qh(3 * p - 10)],
            vec![qh(3 * qv - 10), q(qv - 3), q(qv - 4), q(qv - 3), q(qv - 4), qh(qv - 4)],
            vec![q(r - 3), qh(r - 4), q(0), qh(r - 4), q(r - 3), q(0)],
            vec![q(1), q(1), q(2), q(1), q(0), q(1)],
            vec![q(0), q(1), q(1), q(0), q(0), q(1)],
            vec![q(2), q(1), q(0), q(1), q(2), q(0)],
        ],
    )
}

fn m_ppq3q(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![qh(p - 4), qh(3 * p - 10), qh(p - 4), q(0), qh(3 * p - 10), q(p - 4)],
            vec![qh(3 * qv - 10), q(qv - 3), q(qv - 3), q(qv - 4), qh(qv - 4), q(0)],
            vec![q(1), q(1), q(1), q(0), q(1), q(0)],
            vec![q(0), q(1), q(0), q(0), q(1), q(1)],
            vec![q(2), q(0), q(0), q(2), q(0), q(0)],
            vec![q(0), qh(1), qh(1), q(0), q(0), q(0)],
        ],
    )
}

fn m_ppqppq(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4"],
        vec![
            vec![qh(5 * p - 16), q(3 * p - 10), q(2 * p - 7), q(2 * p - 6)],
            vec![qh(3 * qv - 10), q(qv - 3), q(qv - 3), q(qv - 4)],
            vec![q(3), q(2), q(2), q(2)],
            vec![q(1), q(2), q(1), q(1)],
        ],
    )
}

fn m_pqqprr(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7"],
        vec![
            vec![q(p - 3), qh(3 * p - 10), qh(3 * p - 10), q(p - 3), q(p - 3), q(p - 4), q(p - 4)],
            vec![qh(3 * qv - 10), qh(qv - 4), q(2 * qv - 6), qh(3 * qv - 10), qh(qv - 4), q(0), q(2 * qv - 6)],
            vec![qh(3 * r - 10), q(2 * r - 6), qh(r - 4), qh(r - 4), qh(3 * r - 10), q(2 * r - 6), q(0)],
            vec![q(1), q(2), q(1), q(1), q(1), q(2), q(0)],
            vec![q(1), q(1), q(2), q(1), q(1), q(0), q(2)],
            vec![q(1), q(0), q(1), q(1), q(0), q(0), q(1)],
            vec![q(1), q(1), q(0), q(0), q(1), q(1), q(0)],
        ],
    )
}

fn m_pqprqr(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7"],
        vec![
            vec![q(p - 3), q(p - 4), qh(3 * p - 10), q(2 * p - 6), q(p - 3), qh(p - 4), qh(3 * p - 10)],
            vec![qh(qv - 4), q(0), q(qv - 3), q(qv - 3), qh(qv - 4), q(0), q(qv - 3)],
            vec![qh(3 * r - 10), q(2 * r - 6), q(r - 3), q(r - 4), q(r - 3), qh(3 * r - 10), qh(r - 4)],
            vec![q(qv - 3), q(qv - 3), qh(qv - 4), q(0), qh(qv - 4), q(qv - 3), q(0)],
            vec![q(1), q(2), q(1), q(2), q(1), q(1), q(1)],
            vec![q(1), q(0), q(2), q(2), q(1), q(0), q(2)],
            vec![q(2), q(2), q(1), q(0), q(1), q(2), q(0)],
        ],
    )
}

/// [p,q,p,r,s,r] shares the [p,q,p,r,q,r] structure with the fourth row
/// (the second q-type) re-parameterized by s.
fn m_pqprsr(p: i64, qv: i64, r: i64, sv: i64) -> TransitionMatrix {
    let mut m = m_pqprqr(p, qv, r);
    m.entries[3] = vec![q(sv - 3), q(sv - 3), qh(sv - 4), q(0), qh(sv - 4), q(sv - 3), q(0)];
    m
}

fn m_pqrpqr(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6"],
        vec![
            vec![q(p - 3), qh(3 * p - 10), qh(3 * p - 10), q(p - 3), q(p - 3), q(p - 4)],
            vec![qh(3 * qv - 10), q(qv - 3), qh(3 * qv - 10), q(qv - 4), q(qv - 3), q(qv - 3)],
            vec![qh(3 * r - 10), qh(3 * r - 10), q(r - 3), q(r - 3), q(r - 4), q(r - 3)],
            vec![q(1), q(2), q(1), q(1), q(1), q(1)],
            vec![q(1), q(1), q(2), q(1), q(1), q(1)],
            vec![q(2), q(1), q(1), q(1), q(1), q(1)],
        ],
    )
}

/// [3,p,3,q,3,r] 12×12 derived from the simulator's parent/child
/// attribution; its characteristic polynomial equals
/// ¼z³(z−1)(2z+1)²(z⁶−az⁴−bz³−az²+1) with a = pq+pr+qr−4(p+q+r)+9 and
/// b = 2pqr−4(pq+pr+qr)+8(p+q+r)−16. Types: B3x/Bx3 bricks over a directed
/// (3,x)/(x,3) old edge, NBxy the notched brick over an old (x,3,y) path,
/// Wx the wedge with x-valent apex.
fn m_3p3q3r(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    let z = q(0);
    let o = q(1);
    let hh = qh(1);
    labeled(
        &[
            "B3p", "B3q", "B3r", "Bp3", "Bq3", "Br3", "NBpq", "NBpr", "NBqr", "Wp", "Wq", "Wr",
        ],
        vec![
            vec![z.clone(), o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone()],
            vec![o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone()],
            vec![o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z.clone(), hh.clone(), z.clone(), z.clone(), hh.clone(), z.clone(), hh.clone(), hh.clone(), z.clone(), z.clone(), o.clone()],
            vec![z.clone(), hh.clone(), z.clone(), z.clone(), hh.clone(), z.clone(), hh.clone(), z.clone(), hh.clone(), z.clone(), o.clone(), z.clone()],
            vec![hh.clone(), z.clone(), z.clone(), hh.clone(), z.clone(), z.clone(), hh.clone(), hh.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
            vec![z.clone(), q(p - 3), qh(p - 4), z.clone(), qh(p - 4), q(p - 3), z.clone(), z.clone(), q(p - 3), z.clone(), q(p - 3), q(p - 3)],
            vec![qh(qv - 4), z.clone(), q(qv - 3), q(qv - 3), z.clone(), qh(qv - 4), z.clone(), q(qv - 3), z.clone(), q(qv - 3), z.clone(), q(qv - 3)],
            vec![q(r - 3), qh(r - 4), z.clone(), qh(r - 4), q(r - 3), z.clone(), q(r - 3), z.clone(), z.clone(), q(r - 3), q(r - 3), z],
        ],
    )
}

/// The [3,p,3,q,3,r] matrix as printed in its proposition; its trace and
/// corona series disagree with both the printed characteristic polynomial
/// and the simulator. Kept for diagnostics only.
pub fn m_3p3q3r_printed(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    let z = q(0);
    let o = q(1);
    let hh = qh(1);
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11", "f12"],
        vec![
            vec![z.clone(), q(p - 3), q(p - 3), qh(p - 4), z.clone(), z.clone(), qh(p - 4), q(p - 3), q(p - 3), z.clone(), z.clone(), q(p - 3)],
            vec![q(qv - 3), z.clone(), q(qv - 3), q(qv - 3), q(qv - 3), qh(qv - 4), z.clone(), z.clone(), qh(qv - 4), q(qv - 3), z.clone(), z.clone()],
            vec![q(r - 3), q(r - 3), z.clone(), z.clone(), qh(r - 4), q(r - 3), q(r - 3), qh(r - 4), z.clone(), z.clone(), q(r - 3), z.clone()],
            vec![z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone()],
            vec![o.clone(), z.clone(), z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone()],
            vec![o.clone(), z.clone(), z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), hh.clone(), hh.clone(), z.clone(), z.clone(), hh.clone(), hh.clone()],
            vec![z.clone(), z.clone(), o.clone(), hh.clone(), z.clone(), z.clone(), z.clone(), z.clone(), hh.clone(), hh.clone(), z.clone(), hh.clone()],
            vec![o, z.clone(), z.clone(), z.clone(), hh.clone(), hh.clone(), z.clone(), z.clone(), z.clone(), hh.clone(), hh, z],
        ],
    )
}

fn m_pp3pp3(p: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5"],
        vec![
            vec![qh(5 * p - 16), q(3 * p - 10), q(2 * p - 7), q(2 * p - 6), q(p - 4)],
            vec![q(0); 5],
            vec![q(2), q(2), q(2), q(0), q(2)],
            vec![q(1), q(0), q(1), q(1), q(0)],
            vec![qh(1), q(0), q(0), q(1), q(0)],
        ],
    )
}

fn m_333pqp(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7"],
        vec![
            vec![q(p - 3), q(p - 4), q(p - 3), qh(3 * p - 10), qh(p - 4), q(p - 3), q(p - 4)],
            vec![qh(qv - 4), q(0), qh(qv - 4), q(qv - 3), q(0), qh(qv - 4), q(qv - 3)],
            vec![q(1), q(2), q(1), q(0), q(1), q(0), q(0)],
            vec![q(1), q(2), q(0), q(0), q(1), q(0), q(0)],
            vec![q(1), q(0), q(1), q(2), q(0), q(1), q(2)],
            vec![q(0), q(0), qh(1), qh(1), q(0), qh(1), q(0)],
            vec![qh(1), q(0), q(0), q(0), qh(1), q(0), q(0)],
        ],
    )
}

fn m_p3pq3q(p: i64, qv: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7"],
        vec![
            vec![q(p - 3), qh(3 * p - 10), q(p - 3), qh(p - 4), qh(3 * p - 10), q(0), q(p - 4)],
            vec![qh(3 * qv - 10), q(qv - 3), q(qv - 3), qh(3 * qv - 10), qh(qv - 4), q(qv - 4), q(0)],
            vec![q(1), q(1), q(1), q(1), q(1), q(0), q(0)],
            vec![q(0), q(2), q(0), q(0), q(2), q(0), q(2)],
            vec![q(2), q(0), q(0), q(2), q(0), q(2), q(0)],
            vec![qh(1), q(0), qh(1), q(0), q(0), q(0), q(0)],
            vec![q(0), qh(1), qh(1), q(0), q(0), q(0), q(0)],
        ],
    )
}

fn m_p3pqrq(p: i64, qv: i64, r: i64) -> TransitionMatrix {
    labeled(
        &["f1", "f2", "f3", "f4", "f5", "f6", "f7"],
        vec![
            vec![q(p - 3), qh(3 * p - 10), q(2 * p - 6), q(p - 3), qh(p - 4), qh(3 * p - 10), q(0)],
            vec![qh(3 * qv - 10), q(qv - 3), q(qv - 4), q(qv - 3), qh(3 * qv - 10), qh(qv - 4), q(qv - 4)],
            vec![q(r - 3), qh(r - 4), q(0), qh(r - 4), q(r - 3), q(0), q(r - 3)],
            vec![q(1), q(1), q(2), q(1), q(1), q(1), q(0)],
            vec![q(0), q(2), q(2), q(0), q(0), q(2), q(0)],
            vec![q(2), q(1), q(0), q(1), q(2), q(0), q(2)],
            vec![qh(1), q(0), q(0), qh(1), q(0), q(0), q(0)],
        ],
    )
}

/// The fixed [4,4,6,8] matrix for the given variant (rows as printed;
/// column = parent).
pub fn matrix_4468(variant: Variant) -> TransitionMatrix {
    let mut rows: Vec<Vec<Rational>> = [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [3, 1, 0, 1, 1, 1, 0, 0],
        [2, 5, 2, 0, 0, 2, 2, 0],
        [0, 1, 1, 0, 0, 0, 1, 0],
        [0, 0, 1, 1, 0, 0, 0, 1],
        [1, 0, 0, 1, 1, 0, 0, 0],
        [1, 1, 0, 0, 0, 1, 0, 0],
    ]
    .iter()
    .map(|row| row.iter().map(|&x| q(x)).collect())
    .collect();
    if variant == Variant::T2 {
        rows[0] = [0, 0, 1, 0, 0, 0, 0, 0].iter().map(|&x| q(x)).collect();
        rows[1] = [0, 0, 0, 1, 0, 0, 0, 0].iter().map(|&x| q(x)).collect();
    }
    labeled(&["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8"], rows)
}

// ----------------------------------------------------------- catalog lookup

/// Per-family v1 recipe: which bound letter is the catalog root and which
/// face-type index carries the whole first corona (simulator-derived).
struct V1Spec {
    root_letter: usize,
    face_index: usize,
}

fn v1_spec(key: &str) -> Option<V1Spec> {
    let (root_letter, face_index) = match key {
        "ppq" => (1, 1),
        "4pq" => (1, 1),
        "pqr" => (2, 2),
        "pppp" => (0, 0),
        "ppqq" => (1, 1),
        "pqpq" => (1, 0),
        "3p4p" => (0, 0),
        "3pqp" => (1, 2),
        "pqpr" => (2, 2),
        "pqrs" => (0, 0),
        "ppppp" => (0, 0),
        "3333p" => (0, 2),
        "333pp" => (0, 0),
        "33p3p" => (0, 0),
        "33p3q" => (1, 1),
        "ppqrq" => (1, 1),
        "ppq3q" => (0, 0),
        "pqrst" => (0, 0),
        "pppppp" => (0, 0),
        "ppqppq" => (1, 1),
        "pqpqpq" => (1, 0),
        "pqqprr" => (2, 2),
        "pqprqr" => (2, 2),
        "pqrpqr" => (2, 2),
        "pqprsr" => (3, 3),
        "pqrpst" => (0, 0),
        "pqrstu" => (0, 0),
        "pp3pp3" => (0, 0),
        "333pqp" => (1, 1),
        "p3pq3q" => (1, 1),
        "3p3q3r" => (2, 11),
        "p3pqrq" => (1, 1),
        _ => return None,
    };
    Some(V1Spec { root_letter, face_index })
}

/// Looks up the explicit or block matrix for a cataloged sequence, together
/// with its simulator-derived first-corona distribution.
///
/// [4,4,6,8] requires a [`Variant`]; every other polymorphic sequence (and
/// any sequence outside the catalog) yields [`TransitionError::NoCatalogEntry`].
pub fn catalog_matrix(
    s: &CyclicSequence,
    variant: Option<Variant>,
) -> Result<CatalogEntry, TransitionError> {
    if s.terms() == [4, 4, 6, 8] {
        let variant = variant.ok_or(TransitionError::VariantRequired)?;
        let matrix = matrix_4468(variant);
        // root is 4-valent; the first corona splits over the two 4-apex
        // wedge types (T1) or concentrates on the first (T2)
        let v1 = match variant {
            Variant::T1 => DistributionVector {
                counts: vec![q(2), q(2), q(0), q(0), q(0), q(0), q(0), q(0)],
            },
            Variant::T2 => DistributionVector::unit(8, 0, q(4)),
        };
        return Ok(CatalogEntry {
            family: "4468".to_string(),
            matrix,
            v1,
            root_valence: 4,
        });
    }
    let (pat, bound) = match_pattern(s).ok_or(TransitionError::NoCatalogEntry)?;
    let b = |i: usize| bound[i] as i64;
    let matrix = match pat.key {
        "ppq" => m_ppq(b(0), b(1)),
        "4pq" => m_4pq(b(0), b(1)),
        "pp3" => m_pp3_halved(b(0)),
        "pqr" => m_pqr(b(0), b(1), b(2)),
        "ppqq" => m_ppqq(b(0), b(1)),
        "3p4p" => m_3p4p(b(0)),
        "3pqp" => m_3pqp(b(0), b(1)),
        "pqpr" => m_pqpr(b(0), b(1), b(2)),
        "3333p" => m_3333p_fixed(b(0)),
        "333pp" => m_333pp(b(0)),
        "33p3p" => m_33p3p(b(0)),
        "33p3q" => m_33p3q(b(0), b(1)),
        "ppqrq" => m_ppqrq(b(0), b(1), b(2)),
        "ppq3q" => m_ppq3q(b(0), b(1)),
        "ppqppq" => m_ppqppq(b(0), b(1)),
        "pqqprr" => m_pqqprr(b(0), b(1), b(2)),
        "pqprqr" => m_pqprqr(b(0), b(1), b(2)),
        "pqrpqr" => m_pqrpqr(b(0), b(1), b(2)),
        "pqprsr" => m_pqprsr(b(0), b(1), b(2), b(3)),
        "pp3pp3" => m_pp3pp3(b(0)),
        "333pqp" => m_333pqp(b(0), b(1)),
        "p3pq3q" => m_p3pq3q(b(0), b(1)),
        "3p3q3r" => m_3p3q3r(b(0), b(1), b(2)),
        "p3pqrq" => m_p3pqrq(b(0), b(1), b(2)),
        // monomorphic all-≥4 families take the general block construction
        "pppp" | "pqpq" | "pqrs" | "ppppp" | "pqrst" | "pppppp" | "pqpqpq" | "pqrpst"
        | "pqrstu" => block_matrix_raw(s.terms()),
        // edge-homogeneous families without an explicit matrix are handled
        // by the closed-form layer
        _ => return Err(TransitionError::NoCatalogEntry),
    };
    let v1;
    let root_valence;
    if pat.key == "pp3" {
        // halved system: root p-valent, first corona p faces = p/2 weighted
        root_valence = bound[0];
        v1 = DistributionVector {
            counts: vec![qh(b(0)), q(0)],
        };
    } else {
        let spec = v1_spec(pat.key).ok_or(TransitionError::NoCatalogEntry)?;
        root_valence = bound[spec.root_letter];
        v1 = DistributionVector::unit(matrix.order(), spec.face_index, q(root_valence as i64));
    }
    Ok(CatalogEntry {
        family: pat.key.to_string(),
        matrix,
        v1,
        root_valence,
    })
}

/// The first-corona distribution vector for a cataloged sequence rooted at a
/// vertex of the given valence; errors when the catalog root differs.
pub fn first_distribution(
    s: &CyclicSequence,
    root_valence: u32,
    variant: Option<Variant>,
) -> Result<DistributionVector, TransitionError> {
    let entry = catalog_matrix(s, variant)?;
    if entry.root_valence != root_valence {
        return Err(TransitionError::UnsupportedRoot {
            got: root_valence,
            expected: entry.root_valence,
        });
    }
    Ok(entry.v1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(raw: &[u32]) -> CyclicSequence {
        CyclicSequence::new(raw).unwrap()
    }

    #[test]
    fn offspring_count_examples() {
        let s5 = seq(&[5, 5, 5, 5, 5]);
        assert_eq!(offspring_counts(&s5, &FaceTypeId::Wedge(1)).unwrap(), q(8));
        assert_eq!(offspring_counts(&s5, &FaceTypeId::Brick(1)).unwrap(), q(5));
        let s4 = seq(&[4, 4, 4, 4]);
        assert_eq!(offspring_counts(&s4, &FaceTypeId::Wedge(1)).unwrap(), q(3));
    }

    #[test]
    fn notched_brick_requires_three() {
        let s = seq(&[5, 5, 5, 5, 5]);
        assert_eq!(
            offspring_counts(&s, &FaceTypeId::NotchedBrick(1)),
            Err(TransitionError::NotchedBrickInvalid(1))
        );
    }

    #[test]
    fn block_matrix_column_sums_equal_offspring_counts() {
        let s = seq(&[5, 5, 5, 5, 5]);
        let m = block_matrix_g44(&s).unwrap();
        let k = 5;
        for j in 0..k {
            assert_eq!(
                m.column_sum(j),
                offspring_counts(&s, &FaceTypeId::Wedge(j + 1)).unwrap()
            );
            assert_eq!(
                m.column_sum(k + j),
                offspring_counts(&s, &FaceTypeId::Brick(j + 1)).unwrap()
            );
        }
    }

    #[test]
    fn block_matrix_rejects_threes_and_polymorphic() {
        assert_eq!(
            block_matrix_g44(&seq(&[3, 4, 4, 4])),
            Err(TransitionError::TermBelowFour)
        );
        assert_eq!(
            block_matrix_g44(&seq(&[4, 4, 6, 8])),
            Err(TransitionError::NotMonomorphic)
        );
    }

    #[test]
    fn example_4_6_14_matrix() {
        let entry = catalog_matrix(&seq(&[4, 6, 14]), None).unwrap();
        let want: Vec<Vec<Rational>> = vec![
            vec![q(0), q(1), q(-1), q(0)],
            vec![q(5), q(0), q(0), q(-1)],
            vec![q(1), q(0), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0)],
        ];
        assert_eq!(entry.matrix.rows(), want.as_slice());
        assert_eq!(entry.root_valence, 14);
    }

    #[test]
    fn example_33535_matrix() {
        let entry = catalog_matrix(&seq(&[3, 3, 5, 3, 5]), None).unwrap();
        let want: Vec<Vec<Rational>> = vec![
            vec![q(2), qh(1), qh(1)],
            vec![q(1), q(1), q(0)],
            vec![q(1), qh(1), qh(1)],
        ];
        assert_eq!(entry.matrix.rows(), want.as_slice());
    }

    #[test]
    fn matrices_4468_differ_in_exactly_four_entries_in_rows_1_2() {
        let m1 = matrix_4468(Variant::T1);
        let m2 = matrix_4468(Variant::T2);
        let mut diffs = Vec::new();
        for i in 0..8 {
            for j in 0..8 {
                if m1.entry(i, j) != m2.entry(i, j) {
                    diffs.push((i, j));
                }
            }
        }
        assert_eq!(diffs, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn variant_required_for_4468() {
        assert_eq!(
            catalog_matrix(&seq(&[4, 4, 6, 8]), None).err(),
            Some(TransitionError::VariantRequired)
        );
        assert!(catalog_matrix(&seq(&[4, 4, 6, 8]), Some(Variant::T1)).is_ok());
    }

    #[test]
    fn catalog_denominators_divide_four() {
        for raw in [
            vec![6u32, 6, 7],
            vec![4, 6, 14],
            vec![3, 14, 14],
            vec![6, 8, 10],
            vec![4, 4, 6, 6],
            vec![3, 6, 4, 6],
            vec![3, 4, 7, 4],
            vec![4, 5, 4, 6],
            vec![3, 3, 3, 3, 7],
            vec![3, 3, 3, 6, 6],
            vec![3, 3, 5, 3, 5],
            vec![3, 3, 4, 3, 5],
            vec![4, 4, 6, 5, 6],
            vec![3, 4, 6, 6, 4],
            vec![4, 4, 5, 4, 4, 5],
            vec![6, 4, 4, 6, 8, 8],
            vec![4, 5, 4, 6, 5, 6],
            vec![4, 6, 8, 4, 6, 8],
            vec![4, 5, 4, 6, 7, 6],
            vec![3, 4, 4, 3, 4, 4],
            vec![3, 3, 3, 4, 5, 4],
            vec![3, 4, 6, 3, 6, 4],
            vec![3, 4, 3, 5, 3, 6],
            vec![3, 4, 6, 5, 6, 4],
        ] {
            let entry = catalog_matrix(&seq(&raw), None).unwrap();
            assert!(
                entry.matrix.denominators_divide_four(),
                "denominator violation for {raw:?}"
            );
        }
    }

    #[test]
    fn first_distribution_checks_root() {
        let s = seq(&[4, 6, 14]);
        assert!(first_distribution(&s, 14, None).is_ok());
        assert_eq!(
            first_distribution(&s, 5, None).err(),
            Some(TransitionError::UnsupportedRoot { got: 5, expected: 14 })
        );
    }

    #[test]
    fn pp3_halved_first_corona_weighted_count() {
        let entry = catalog_matrix(&seq(&[3, 14, 14]), None).unwrap();
        assert_eq!(entry.matrix.face_count(&entry.v1.counts), q(14));
        let v2 = entry.matrix.apply(&entry.v1.counts);
        assert_eq!(entry.matrix.face_count(&v2), q(70));
    }

    #[test]
    fn json_and_grid_exports_are_well_formed() {
        let entry = catalog_matrix(&seq(&[4, 6, 14]), None).unwrap();
        let json = entry.matrix.to_json();
        assert_eq!(json["entries"][0][2], "-1");
        assert!(entry.matrix.to_text_grid().contains("-1"));
    }
}
