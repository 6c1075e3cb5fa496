//! Corona-by-corona planar patch simulator.
//!
//! Grows an actual planar patch from a root vertex (or root face), assigning
//! valences to new vertices by matching every face's vertex cycle against the
//! cyclic sequence σ in all rotations and reflections. Ambiguities are
//! resolved by an accretion policy or, failing that, by a DFS over decision
//! tapes that backtracks from contradictions ("Stuck" states).
//!
//! The simulator is deliberately independent of the transition-matrix
//! machinery: it counts whole faces on a concrete graph and serves as a
//! brute-force cross-check of the matrix corona series.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclic::CyclicSequence;
use crate::spectral::{CertifiedRoot, GrowthRate, GrowthSource};
use crate::transition::Variant;

/// Default cap on the total number of faces grown across all coronas.
pub const DEFAULT_MAX_FACES: u64 = 10_000_000;

/// Default cap on DFS backtracks before the search is abandoned.
pub const DEFAULT_MAX_BRANCHES: u32 = 10_000;

/// Errors raised by patch growth and growth estimation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    /// No consistent completion exists from the current configuration.
    #[error("construction stuck: {0}")]
    Stuck(String),
    /// The face budget was exceeded on every branch of the search.
    #[error("face budget exceeded")]
    FaceBudgetExceeded,
    /// The DFS backtrack budget was exhausted.
    #[error("branch budget exhausted after {0} backtracks")]
    BranchBudgetExhausted(u32),
    /// An accretion policy must be supplied to make growth deterministic.
    #[error("an accretion policy is required for this sequence")]
    PolicyRequired,
    /// Growth estimation needs at least four complete coronas.
    #[error("need at least 4 coronas to estimate growth, got {0}")]
    TooFewCoronas(usize),
    /// A serialized patch failed validation on import.
    #[error("invalid patch data: {0}")]
    InvalidData(String),
}

/// Where growth starts: a vertex of the given valence, or a single face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Root {
    /// A root vertex with the given target valence.
    Vertex(u32),
    /// A single root face (its k corners form corona 0).
    Face,
}

/// Options controlling a growth run.
#[derive(Debug, Clone)]
pub struct GrowOptions {
    /// Accretion policy for polymorphic sequences; `None` takes the first
    /// consistent completion at every ambiguity (non-canonical default).
    pub policy: Option<Variant>,
    /// `None` allows reflected face orientations; `Some(±1)` fixes the sense
    /// in which boundary-co-oriented face cycles read σ.
    pub orient: Option<i8>,
    /// Cap on the total number of faces across all coronas.
    pub max_faces: u64,
    /// Cap on DFS backtracks.
    pub max_branches: u32,
}

impl Default for GrowOptions {
    fn default() -> Self {
        GrowOptions {
            policy: None,
            orient: None,
            max_faces: DEFAULT_MAX_FACES,
            max_branches: DEFAULT_MAX_BRANCHES,
        }
    }
}

// ------------------------------------------------------------------ alignment

/// A per-position constraint when matching a face cycle against σ.
#[derive(Debug, Clone)]
enum Constraint {
    /// Unconstrained position.
    Free,
    /// Position must carry exactly this valence.
    Fixed(u32),
    /// Position must carry one of these valences.
    OneOf(BTreeSet<u32>),
}

impl Constraint {
    fn allows(&self, s: u32) -> bool {
        match self {
            Constraint::Free => true,
            Constraint::Fixed(v) => *v == s,
            Constraint::OneOf(set) => set.contains(&s),
        }
    }
}

fn seq_at(seq: &[u32], rot: usize, d: i8, t: usize) -> u32 {
    let k = seq.len() as i64;
    let i = (rot as i64 + d as i64 * t as i64).rem_euclid(k) as usize;
    seq[i]
}

/// All (rotation, direction) pairs under which σ is compatible with the
/// per-position constraints.
fn consistent_alignments(seq: &[u32], vals: &[Constraint], dirs: &[i8]) -> Vec<(usize, i8)> {
    let mut out = Vec::new();
    for rot in 0..seq.len() {
        for &d in dirs {
            let ok = vals
                .iter()
                .enumerate()
                .all(|(t, v)| v.allows(seq_at(seq, rot, d, t)));
            if ok {
                out.push((rot, d));
            }
        }
    }
    out
}

/// Distinct valence vectors σ can impose on a face cycle, each mapped to the
/// first alignment producing it.
fn candidate_vectors(
    seq: &[u32],
    vals: &[Constraint],
    dirs: &[i8],
) -> BTreeMap<Vec<u32>, (usize, i8)> {
    let mut seen = BTreeMap::new();
    for (rot, d) in consistent_alignments(seq, vals, dirs) {
        let vec: Vec<u32> = (0..seq.len()).map(|t| seq_at(seq, rot, d, t)).collect();
        seen.entry(vec).or_insert((rot, d));
    }
    seen
}

// ------------------------------------------------------------------ the patch

/// One face of the patch: its vertex cycle, which cycle positions belong to
/// the previous corona ("old"), and whether the stored cycle runs
/// co-oriented with the boundary walk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceRec {
    /// Vertex cycle in face order.
    pub cycle: Vec<usize>,
    /// Vertices of the cycle that predate this corona.
    pub old: Vec<usize>,
    /// Positions of `old` within `cycle`.
    pub old_pos: Vec<usize>,
    /// True when `cycle` runs in the boundary walk's sense.
    pub co: bool,
}

/// Census class of a corona face, keyed by how many of its vertices predate
/// the corona: a wedge touches one old vertex, a brick two, a notched brick
/// more; the root face touches none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FaceClass {
    /// Two old vertices.
    Brick,
    /// Three or more old vertices.
    NotchedBrick,
    /// The root face itself (no old vertices).
    RootFace,
    /// One old vertex (the apex).
    Wedge,
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FaceClass::Brick => "b",
            FaceClass::NotchedBrick => "nb",
            FaceClass::RootFace => "root",
            FaceClass::Wedge => "w",
        };
        f.write_str(s)
    }
}

/// A growing (or completed) planar patch: the concrete graph, per-corona
/// series, and construction diagnostics.
///
/// A patch is single-owner mutable while growing and immutable once
/// returned; independent runs can proceed in parallel freely.
#[derive(Debug, Clone)]
pub struct PatchGraph {
    seq: Vec<u32>,
    k: usize,
    orient: Option<i8>,
    /// walks[c][l] = set of valence pairs joinable by an exactly-l-step walk
    /// in the flank graph of c (one-corona completability lookahead).
    walks: BTreeMap<u32, Vec<HashSet<(u32, u32)>>>,
    val: Vec<Option<u32>>,
    deg: Vec<u32>,
    nbrs: Vec<Vec<usize>>,
    corona: Vec<usize>,
    boundary: Vec<usize>,
    f: Vec<u64>,
    u: Vec<u64>,
    face_census: Vec<Vec<((FaceClass, usize), u64)>>,
    faces_by_corona: Vec<Vec<FaceRec>>,
    concentric: Vec<bool>,
    tape_pos: usize,
    pendants: Vec<usize>,
}

impl PatchGraph {
    fn new(seq: &[u32], orient: Option<i8>) -> Self {
        PatchGraph {
            seq: seq.to_vec(),
            k: seq.len(),
            orient,
            walks: walk_tables(seq),
            val: Vec::new(),
            deg: Vec::new(),
            nbrs: Vec::new(),
            corona: Vec::new(),
            boundary: Vec::new(),
            f: Vec::new(),
            u: Vec::new(),
            face_census: Vec::new(),
            faces_by_corona: Vec::new(),
            concentric: Vec::new(),
            tape_pos: 0,
            pendants: Vec::new(),
        }
    }

    fn new_vertex(&mut self, corona: usize, valence: Option<u32>) -> usize {
        self.val.push(valence);
        self.deg.push(0);
        self.nbrs.push(Vec::new());
        self.corona.push(corona);
        self.val.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        if self.nbrs[a].contains(&b) {
            return;
        }
        self.nbrs[a].push(b);
        self.nbrs[b].push(a);
        self.deg[a] += 1;
        self.deg[b] += 1;
    }

    /// The cyclic valence sequence this patch realizes.
    pub fn seq(&self) -> &[u32] {
        &self.seq
    }

    /// |F_n| per corona, n = 1..
    pub fn face_series(&self) -> &[u64] {
        &self.f
    }

    /// |U_n| per corona, n = 1..
    pub fn vertex_series(&self) -> &[u64] {
        &self.u
    }

    /// Per-corona concentricity flags (does ⟨U_n⟩ induce a single cycle?).
    pub fn concentric_flags(&self) -> &[bool] {
        &self.concentric
    }

    /// True iff corona `n` (1-based) is concentric.
    pub fn is_concentric(&self, n: usize) -> bool {
        self.concentric.get(n.wrapping_sub(1)).copied().unwrap_or(false)
    }

    /// Vertices that hang off their corona's boundary cycle (forced
    /// 3-valent shared-flank slots; a non-concentric configuration).
    pub fn pendants(&self) -> &[usize] {
        &self.pendants
    }

    /// The current outer boundary walk.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Number of vertices instantiated so far.
    pub fn vertex_count(&self) -> usize {
        self.val.len()
    }

    /// Target valence of a vertex, if assigned.
    pub fn valence(&self, v: usize) -> Option<u32> {
        self.val.get(v).copied().flatten()
    }

    /// Corona index of a vertex (root = 0).
    pub fn corona_of(&self, v: usize) -> usize {
        self.corona[v]
    }

    /// Face census per corona: counts by (face class, σ-index of the first
    /// old vertex under a canonical alignment).
    pub fn census(&self) -> &[Vec<((FaceClass, usize), u64)>] {
        &self.face_census
    }

    /// Face records per corona.
    pub fn faces(&self) -> &[Vec<FaceRec>] {
        &self.faces_by_corona
    }

    /// Undirected edge set with endpoints ordered (low, high).
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (a, ns) in self.nbrs.iter().enumerate() {
            for &b in ns {
                out.insert((a.min(b), a.max(b)));
            }
        }
        out
    }

    /// Per-corona profile: series, running sums, and ratio estimates.
    pub fn profile(&self) -> CoronaProfile {
        let mut tau = Vec::with_capacity(self.f.len());
        let mut acc = 0u64;
        for &fi in &self.f {
            acc += fi;
            tau.push(acc);
        }
        let ratios = (1..self.f.len())
            .map(|i| self.f[i] as f64 / self.f[i - 1] as f64)
            .collect();
        let tau_ratios = (1..tau.len())
            .map(|i| tau[i] as f64 / tau[i - 1] as f64)
            .collect();
        let two_corona_ratios = (2..self.f.len())
            .map(|i| (self.f[i] as f64 / self.f[i - 2] as f64).sqrt())
            .collect();
        CoronaProfile {
            f: self.f.clone(),
            u: self.u.clone(),
            tau,
            ratios,
            tau_ratios,
            two_corona_ratios,
        }
    }

    /// Graph equality up to adjacency-list order (used by the JSON
    /// round-trip, which does not preserve edge insertion order).
    pub fn same_graph(&self, other: &PatchGraph) -> bool {
        self.seq == other.seq
            && self.val == other.val
            && self.corona == other.corona
            && self.edges() == other.edges()
            && self.boundary == other.boundary
            && self.f == other.f
            && self.u == other.u
            && self.concentric == other.concentric
            && self.pendants == other.pendants
    }
}

/// Per-corona counting profile of a grown patch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoronaProfile {
    /// |F_n| per corona.
    pub f: Vec<u64>,
    /// |U_n| per corona.
    pub u: Vec<u64>,
    /// Running sums τ(n) = Σ_{i ≤ n} |F_i|.
    pub tau: Vec<u64>,
    /// Single-corona ratios |F_{n+1}| / |F_n|.
    pub ratios: Vec<f64>,
    /// Running-sum ratios τ(n+1) / τ(n).
    pub tau_ratios: Vec<f64>,
    /// Two-corona ratios √(|F_n| / |F_{n−2}|): immune to the period-two
    /// oscillation that a negative eigenvalue of the same modulus as the
    /// growth rate induces in the single-corona ratios.
    pub two_corona_ratios: Vec<f64>,
}

// ------------------------------------------------------------------ lookahead

/// For each valence c in σ: `reach[l]` is the set of valence pairs (x, y)
/// joinable by a walk of exactly l steps in the graph whose edges are the
/// unordered pairs of σ-entries flanking an occurrence of c.
///
/// Around a c-valent vertex every pair of face-consecutive neighbors must
/// flank an occurrence of c in σ; a boundary vertex with r remaining edges
/// therefore needs a walk of length r + 1 between its two current
/// boundary neighbors.
fn walk_tables(seq: &[u32]) -> BTreeMap<u32, Vec<HashSet<(u32, u32)>>> {
    let k = seq.len();
    let vals: BTreeSet<u32> = seq.iter().copied().collect();
    let maxlen = *seq.iter().max().expect("nonempty sequence") as usize + 1;
    let mut tables = BTreeMap::new();
    for &c in &vals {
        let mut adj: BTreeMap<u32, BTreeSet<u32>> =
            vals.iter().map(|&x| (x, BTreeSet::new())).collect();
        for i in 0..k {
            if seq[i] == c {
                let x = seq[(i + k - 1) % k];
                let y = seq[(i + 1) % k];
                adj.get_mut(&x).expect("valence present").insert(y);
                adj.get_mut(&y).expect("valence present").insert(x);
            }
        }
        let mut reach: Vec<HashSet<(u32, u32)>> = vec![HashSet::new(); maxlen + 1];
        for (&x, ys) in &adj {
            for &y in ys {
                reach[1].insert((x, y));
            }
        }
        for l in 2..=maxlen {
            let mut step = HashSet::new();
            for (&x, ys) in &adj {
                for &y in ys {
                    for &z in &vals {
                        if reach[l - 1].contains(&(y, z)) {
                            step.insert((x, z));
                        }
                    }
                }
            }
            reach[l] = step;
        }
        tables.insert(c, reach);
    }
    tables
}

// ------------------------------------------------------------------ skeletons

/// Faces around a root vertex of the given valence (corona 1).
fn corona1_skeleton(patch: &mut PatchGraph, root_valence: u32) -> (Vec<FaceRec>, Vec<usize>) {
    let k = patch.k;
    let x = patch.new_vertex(0, Some(root_valence));
    let p = root_valence as usize;
    let slots: Vec<usize> = (0..p).map(|_| patch.new_vertex(1, None)).collect();
    let mut faces = Vec::with_capacity(p);
    let mut bnd = Vec::new();
    for i in 0..p {
        let a = slots[i];
        let b = slots[(i + 1) % p];
        let fresh: Vec<usize> = (0..k.saturating_sub(3))
            .map(|_| patch.new_vertex(1, None))
            .collect();
        let mut cycle = vec![x, a];
        cycle.extend(&fresh);
        cycle.push(b);
        faces.push(FaceRec {
            cycle,
            old: vec![x],
            old_pos: vec![0],
            co: true,
        });
        bnd.push(a);
        bnd.extend(&fresh);
    }
    add_face_edges(patch, &faces);
    (faces, bnd)
}

/// A single root face whose k corners form corona 0.
fn face_root_skeleton(patch: &mut PatchGraph) -> (Vec<FaceRec>, Vec<usize>) {
    let k = patch.k;
    let vs: Vec<usize> = (0..k)
        .map(|t| {
            let valence = patch.seq[t];
            patch.new_vertex(0, Some(valence))
        })
        .collect();
    let face = FaceRec {
        cycle: vs.clone(),
        old: Vec::new(),
        old_pos: Vec::new(),
        co: true,
    };
    let faces = vec![face];
    add_face_edges(patch, &faces);
    (faces, vs)
}

fn add_face_edges(patch: &mut PatchGraph, faces: &[FaceRec]) {
    for f in faces {
        let c = &f.cycle;
        for t in 0..c.len() {
            patch.add_edge(c[t], c[(t + 1) % c.len()]);
        }
    }
}

fn uf_find(parent: &HashMap<usize, usize>, mut v: usize) -> usize {
    while let Some(&p) = parent.get(&v) {
        v = p;
    }
    v
}

/// Face skeletons for corona n ≥ 2, built from the current boundary.
fn corona_skeleton(
    patch: &mut PatchGraph,
    n: usize,
) -> Result<(Vec<FaceRec>, Vec<usize>), SimError> {
    let k = patch.k;
    let boundary = patch.boundary.clone();
    let m = boundary.len();
    if boundary.iter().any(|&v| patch.val[v].is_none()) {
        return Err(SimError::Stuck("unassigned boundary vertex".into()));
    }
    let rem: Vec<i64> = boundary
        .iter()
        .map(|&v| patch.val[v].expect("assigned") as i64 - patch.deg[v] as i64)
        .collect();
    if rem.iter().any(|&r| r < 0) {
        return Err(SimError::Stuck("oversaturated boundary vertex".into()));
    }
    let anchors: Vec<usize> = (0..m).filter(|&i| rem[i] >= 1).collect();
    let na = anchors.len();
    if na < 2 {
        return Err(SimError::Stuck(
            "fewer than two boundary vertices can accept new edges".into(),
        ));
    }
    // phase 1: slot vertices (new neighbors of each anchor)
    let mut slots: HashMap<usize, Vec<usize>> = HashMap::new();
    for &i in &anchors {
        let s: Vec<usize> = (0..rem[i]).map(|_| patch.new_vertex(n, None)).collect();
        slots.insert(i, s);
    }
    // phase 2: per anchor pair, compute the old path; when the face has no
    // room for fresh middle vertices the two flanking slots are one vertex
    // (shared flank, e.g. all faces of a triangulation): union them first.
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut segs: Vec<(usize, usize, Vec<usize>, i64)> = Vec::new();
    let mut pendants: BTreeSet<usize> = BTreeSet::new();
    for idx in 0..na {
        let a_i = anchors[idx];
        let b_i = anchors[(idx + 1) % na];
        let mut path = vec![boundary[a_i]];
        let mut j = a_i;
        loop {
            j = (j + 1) % m;
            path.push(boundary[j]);
            if j == b_i {
                break;
            }
        }
        let nf = k as i64 - path.len() as i64 - 2;
        if nf < -1 {
            return Err(SimError::Stuck(
                "face cannot close (old path longer than face); \
                 non-concentric collapse not supported"
                    .into(),
            ));
        }
        if nf == -1 {
            let u0 = uf_find(&parent, *slots[&a_i].last().expect("slot"));
            let w0 = uf_find(&parent, slots[&b_i][0]);
            if u0 != w0 {
                parent.insert(w0, u0);
            }
            let u = uf_find(&parent, u0);
            // if the gap face forces the merged slot to be 3-valent, it
            // cannot carry the degree-4 plain merge; the two flanking faces
            // must then share their fresh vertex, leaving the slot as a
            // pendant of the new boundary (non-concentric configuration)
            let mut vals = vec![Constraint::Free];
            vals.extend(
                path.iter()
                    .map(|&v| Constraint::Fixed(patch.val[v].expect("assigned"))),
            );
            let opts: BTreeSet<u32> = candidate_vectors(&patch.seq, &vals, &[1, -1])
                .keys()
                .map(|vec| vec[0])
                .collect();
            if opts.is_empty() {
                return Err(SimError::Stuck(
                    "gap face has no consistent alignment".into(),
                ));
            }
            if opts.len() == 1 && opts.contains(&3) {
                pendants.insert(u);
            }
        }
        segs.push((a_i, b_i, path, nf));
    }
    // phase 3: build fans, edge-faces, and the new boundary walk
    let mut faces: Vec<FaceRec> = Vec::new();
    let mut bnd: Vec<usize> = Vec::new();
    for (a_i, b_i, path, nf) in &segs {
        let s: Vec<usize> = slots[a_i].iter().map(|&v| uf_find(&parent, v)).collect();
        bnd.push(s[0]);
        for t in 0..s.len() - 1 {
            let fresh: Vec<usize> = (0..k.saturating_sub(3))
                .map(|_| patch.new_vertex(n, None))
                .collect();
            let mut cycle = vec![boundary[*a_i], s[t]];
            cycle.extend(&fresh);
            cycle.push(s[t + 1]);
            faces.push(FaceRec {
                cycle,
                old: vec![boundary[*a_i]],
                old_pos: vec![0],
                co: true,
            });
            bnd.extend(&fresh);
            bnd.push(s[t + 1]);
        }
        let u = *s.last().expect("slot");
        let w = uf_find(&parent, slots[b_i][0]);
        if *nf >= 0 {
            let fresh: Vec<usize> = (0..*nf).map(|_| patch.new_vertex(n, None)).collect();
            let mut cycle = vec![u];
            cycle.extend(path);
            cycle.push(w);
            cycle.extend(&fresh);
            faces.push(FaceRec {
                cycle,
                old: path.clone(),
                old_pos: (1..=path.len()).collect(),
                co: false,
            });
            // boundary walk from u to w passes fresh in reverse cycle order
            bnd.extend(fresh.iter().rev());
        } else {
            debug_assert_eq!(u, w, "shared-flank merge must identify the slots");
            let mut cycle = vec![u];
            cycle.extend(path);
            faces.push(FaceRec {
                cycle,
                old: path.clone(),
                old_pos: (1..=path.len()).collect(),
                co: false,
            });
        }
    }
    // pendant resolution: a forced-3-valent merged slot keeps degree 3 by
    // having its two flanking faces share their fresh neighbor; the slot then
    // hangs off the new boundary as a pendant (its faces are all present)
    if !pendants.is_empty() {
        let roots: BTreeSet<usize> = pendants.iter().map(|&u| uf_find(&parent, u)).collect();
        for &u in &roots {
            let mut nb: BTreeSet<usize> = BTreeSet::new();
            for f in &faces {
                let c: Vec<usize> = f.cycle.iter().map(|&v| uf_find(&parent, v)).collect();
                let len = c.len();
                for (t, &v) in c.iter().enumerate() {
                    if v == u {
                        for &w in &[c[(t + len - 1) % len], c[(t + 1) % len]] {
                            if patch.corona[w] == n && w != u {
                                nb.insert(w);
                            }
                        }
                    }
                }
            }
            if nb.len() != 2 {
                return Err(SimError::Stuck(format!(
                    "pendant slot has {} new neighbors, expected 2",
                    nb.len()
                )));
            }
            let mut it = nb.into_iter();
            let w1 = it.next().expect("two neighbors");
            let w2 = it.next().expect("two neighbors");
            let (r1, r2) = (uf_find(&parent, w1), uf_find(&parent, w2));
            if r1 != r2 {
                parent.insert(r2, r1);
            }
        }
        for f in &mut faces {
            for v in &mut f.cycle {
                *v = uf_find(&parent, *v);
            }
        }
        for v in &mut bnd {
            *v = uf_find(&parent, *v);
        }
        let pend: BTreeSet<usize> = roots.iter().map(|&u| uf_find(&parent, u)).collect();
        patch.pendants.extend(pend.iter().copied());
        bnd.retain(|v| !pend.contains(v));
    }
    add_face_edges(patch, &faces);
    // deduplicate consecutive boundary repeats (introduced by shared flanks)
    let mut out: Vec<usize> = Vec::with_capacity(bnd.len());
    for v in bnd {
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    Ok((faces, out))
}

// ----------------------------------------------------------------- assignment

type Chosen = (Vec<u32>, (usize, i8));

fn constraint_of(patch: &PatchGraph, dom: &HashMap<usize, BTreeSet<u32>>, v: usize) -> Constraint {
    match patch.val[v] {
        Some(x) => Constraint::Fixed(x),
        None => Constraint::OneOf(dom[&v].clone()),
    }
}

fn value_set(patch: &PatchGraph, dom: &HashMap<usize, BTreeSet<u32>>, v: usize) -> BTreeSet<u32> {
    match patch.val[v] {
        Some(x) => std::iter::once(x).collect(),
        None => dom[&v].clone(),
    }
}

fn face_dirs(patch: &PatchGraph, f: &FaceRec) -> Vec<i8> {
    match patch.orient {
        None => vec![1, -1],
        // cycles are stored boundary-co-oriented or counter-oriented
        Some(o) => vec![if f.co { o } else { -o }],
    }
}

fn face_cands(
    patch: &PatchGraph,
    dom: &HashMap<usize, BTreeSet<u32>>,
    f: &FaceRec,
    policy: Option<Variant>,
) -> BTreeMap<Vec<u32>, (usize, i8)> {
    let vals: Vec<Constraint> = f
        .cycle
        .iter()
        .map(|&v| constraint_of(patch, dom, v))
        .collect();
    let mut cands = candidate_vectors(&patch.seq, &vals, &face_dirs(patch, f));
    if let Some(p) = policy {
        cands.retain(|vec, _| policy_allows(patch, f, vec, p));
    }
    cands
}

/// One-corona lookahead: prune each new-boundary vertex's domain to valences
/// whose remaining fan can still be completed between its two boundary
/// neighbors. Returns true on progress.
fn completable_pass(
    patch: &mut PatchGraph,
    dom: &mut HashMap<usize, BTreeSet<u32>>,
    new_bnd: &[usize],
) -> Result<bool, SimError> {
    let m = new_bnd.len();
    if m < 3 {
        return Ok(false);
    }
    let mut progress = false;
    for i in 0..m {
        let v = new_bnd[i];
        let a = new_bnd[(i + m - 1) % m];
        let b = new_bnd[(i + 1) % m];
        let da = value_set(patch, dom, a);
        let db = value_set(patch, dom, b);
        let mut ok = BTreeSet::new();
        let mut oka = BTreeSet::new();
        let mut okb = BTreeSet::new();
        for c in value_set(patch, dom, v) {
            let l = c as i64 - patch.deg[v] as i64 + 1;
            let table = &patch.walks[&c];
            if l < 1 || l >= table.len() as i64 {
                continue;
            }
            let reach = &table[l as usize];
            for &x in &da {
                for &y in &db {
                    if reach.contains(&(x, y)) {
                        ok.insert(c);
                        oka.insert(x);
                        okb.insert(y);
                    }
                }
            }
        }
        if ok.is_empty() {
            return Err(SimError::Stuck(format!(
                "boundary vertex cannot be completed: v={} dom={:?} deg={} nbr doms ({:?}, {:?})",
                v,
                value_set(patch, dom, v),
                patch.deg[v],
                da,
                db
            )));
        }
        for (u, new) in [(v, ok), (a, oka), (b, okb)] {
            if patch.val[u].is_none() {
                let cur = dom.get(&u).expect("domain entry for unassigned vertex");
                if new.is_subset(cur) && new.len() < cur.len() {
                    if new.len() == 1 {
                        patch.val[u] = new.iter().next().copied();
                    }
                    dom.insert(u, new);
                    progress = true;
                }
            }
        }
    }
    Ok(progress)
}

fn try_assign_pass(
    patch: &mut PatchGraph,
    dom: &mut HashMap<usize, BTreeSet<u32>>,
    faces: &[FaceRec],
    pending: &mut Vec<usize>,
    chosen: &mut [Option<Chosen>],
    policy: Option<Variant>,
) -> Result<bool, SimError> {
    let mut progress = false;
    let mut still_pending: Vec<usize> = Vec::with_capacity(pending.len());
    for &fi in pending.iter() {
        let f = &faces[fi];
        let cands = face_cands(patch, dom, f, policy);
        if cands.is_empty() {
            return Err(SimError::Stuck(
                "no consistent sigma alignment for a face".into(),
            ));
        }
        let vecs: Vec<&Vec<u32>> = cands.keys().collect();
        let mut done = true;
        for (t, &v) in f.cycle.iter().enumerate() {
            if patch.val[v].is_some() {
                continue;
            }
            let opts: BTreeSet<u32> = vecs.iter().map(|vec| vec[t]).collect();
            let cur = dom.get(&v).expect("domain entry").clone();
            if opts.len() == 1 {
                patch.val[v] = Some(vecs[0][t]);
                progress = true;
            } else if opts.is_subset(&cur) && opts.len() < cur.len() {
                dom.insert(v, opts);
                progress = true;
                done = false;
            } else {
                done = false;
            }
        }
        if done {
            let vec: Vec<u32> = f
                .cycle
                .iter()
                .map(|&v| patch.val[v].expect("assigned"))
                .collect();
            let align = cands[vecs[0]];
            chosen[fi] = Some((vec, align));
            progress = true;
        } else {
            still_pending.push(fi);
        }
    }
    *pending = still_pending;
    Ok(progress)
}

/// Constraint-propagate valences over the corona's faces.
///
/// `tape` is a pre-recorded decision tape for the DFS driver: each entry
/// picks a candidate index at successive ambiguity points; `radices` records
/// how many candidates were available at each position.
fn assign_corona(
    patch: &mut PatchGraph,
    faces: &[FaceRec],
    policy: Option<Variant>,
    tape: &mut Vec<usize>,
    radices: &mut Vec<usize>,
    new_bnd: &[usize],
) -> Result<Vec<Chosen>, SimError> {
    let mut pending: Vec<usize> = (0..faces.len()).collect();
    let mut chosen: Vec<Option<Chosen>> = vec![None; faces.len()];
    let allv: BTreeSet<u32> = patch.seq.iter().copied().collect();
    // per-vertex valence domains for vertices touched by this corona
    let mut dom: HashMap<usize, BTreeSet<u32>> = HashMap::new();
    for f in faces {
        for &v in &f.cycle {
            if patch.val[v].is_none() {
                dom.entry(v).or_insert_with(|| allv.clone());
            }
        }
    }
    while !pending.is_empty() {
        if try_assign_pass(patch, &mut dom, faces, &mut pending, &mut chosen, policy)? {
            continue;
        }
        if completable_pass(patch, &mut dom, new_bnd)? {
            continue;
        }
        // ambiguity: pick the most-constrained pending face, consult the tape
        let mut best: Option<(usize, BTreeMap<Vec<u32>, (usize, i8)>)> = None;
        for &fj in &pending {
            let cj = face_cands(patch, &dom, &faces[fj], policy);
            if cj.is_empty() {
                return Err(SimError::Stuck(
                    "no consistent alignment at ambiguity point".into(),
                ));
            }
            if best.as_ref().map_or(true, |(_, b)| cj.len() < b.len()) {
                let two = cj.len() == 2;
                best = Some((fj, cj));
                if two {
                    break;
                }
            }
        }
        let (fi, cands) = best.expect("pending nonempty");
        let vecs: Vec<&Vec<u32>> = cands.keys().collect();
        let pick = if patch.tape_pos < tape.len() {
            tape[patch.tape_pos]
        } else {
            tape.push(0);
            0
        };
        if patch.tape_pos < radices.len() {
            radices[patch.tape_pos] = vecs.len();
        } else {
            radices.push(vecs.len());
        }
        patch.tape_pos += 1;
        if pick >= vecs.len() {
            // handled by the DFS driver: advance the tape and retry
            return Err(SimError::Stuck("decision tape exhausted".into()));
        }
        let vec = vecs[pick].clone();
        for (t, &v) in faces[fi].cycle.iter().enumerate() {
            patch.val[v] = Some(vec[t]);
        }
        let align = cands[&vec];
        chosen[fi] = Some((vec, align));
        pending.retain(|&x| x != fi);
    }
    while completable_pass(patch, &mut dom, new_bnd)? {}
    Ok(chosen
        .into_iter()
        .map(|c| c.expect("all faces resolved"))
        .collect())
}

/// The two accretion policies of the [4,4,6,8] tessellations: constrain the
/// two non-4 neighbors of every 4-valent vertex to {6,8} (T1) or to an equal
/// pair 6,6 / 8,8 (T2).
fn policy_allows(patch: &PatchGraph, face: &FaceRec, vec: &[u32], policy: Variant) -> bool {
    let mut tentative: HashMap<usize, u32> = HashMap::new();
    for (t, &v) in face.cycle.iter().enumerate() {
        match patch.val[v] {
            None => {
                tentative.insert(v, vec[t]);
            }
            Some(x) if x != vec[t] => return false,
            Some(_) => {}
        }
    }
    let val_of = |v: usize| -> Option<u32> { tentative.get(&v).copied().or(patch.val[v]) };
    let mut affected: BTreeSet<usize> = BTreeSet::new();
    for &v in &face.cycle {
        if val_of(v) == Some(4) {
            affected.insert(v);
        }
        for &u in &patch.nbrs[v] {
            if val_of(u) == Some(4) {
                affected.insert(u);
            }
        }
    }
    for &v in &affected {
        let others: Vec<u32> = patch.nbrs[v]
            .iter()
            .filter_map(|&u| val_of(u))
            .filter(|&x| x != 4)
            .collect();
        let fours = patch.nbrs[v]
            .iter()
            .filter(|&&u| val_of(u) == Some(4))
            .count();
        if others.len() > 2 || fours > 2 {
            return false;
        }
        if others.len() == 2 {
            match policy {
                Variant::T1 => {
                    let set: BTreeSet<u32> = others.iter().copied().collect();
                    if set != BTreeSet::from([6, 8]) {
                        return false;
                    }
                }
                Variant::T2 => {
                    if others[0] != others[1] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// --------------------------------------------------------------------- census

/// Classify each corona face by how many previous-corona vertices it touches
/// and by the σ-index of its first old vertex under a canonical alignment.
fn census(
    patch: &PatchGraph,
    faces: &[FaceRec],
    _chosen: &[Chosen],
) -> Vec<((FaceClass, usize), u64)> {
    let mut out: BTreeMap<(FaceClass, usize), u64> = BTreeMap::new();
    for f in faces {
        let vals: Vec<Constraint> = f
            .cycle
            .iter()
            .map(|&v| Constraint::Fixed(patch.val[v].expect("assigned")))
            .collect();
        let aligns = consistent_alignments(&patch.seq, &vals, &[1, -1]);
        let (rot, d) = *aligns.iter().min().expect("closed face reads sigma");
        let key = if f.old.is_empty() {
            (FaceClass::RootFace, 0)
        } else {
            let p0 = f.old_pos[0] as i64;
            let idx = (rot as i64 + d as i64 * p0).rem_euclid(patch.k as i64) as usize;
            let class = match f.old.len() {
                1 => FaceClass::Wedge,
                2 => FaceClass::Brick,
                _ => FaceClass::NotchedBrick,
            };
            (class, idx)
        };
        *out.entry(key).or_insert(0) += 1;
    }
    out.into_iter().collect()
}

// --------------------------------------------------------------------- driver

fn step_corona(
    patch: &mut PatchGraph,
    n: usize,
    root: Root,
    policy: Option<Variant>,
    tape: &mut Vec<usize>,
    radices: &mut Vec<usize>,
    total: &mut u64,
    max_faces: u64,
) -> Result<(), SimError> {
    let (faces, bnd) = if n == 1 {
        match root {
            Root::Vertex(p) => corona1_skeleton(patch, p),
            Root::Face => face_root_skeleton(patch),
        }
    } else {
        corona_skeleton(patch, n)?
    };
    let chosen = assign_corona(patch, &faces, policy, tape, radices, &bnd)?;
    patch.boundary = bnd.clone();
    patch.f.push(faces.len() as u64);
    // U_n is the set of corona-n vertices (merge victims keep degree 0);
    // pendants belong to U_n even though the boundary walk skips them
    let mut un: BTreeSet<usize> = (0..patch.val.len())
        .filter(|&v| patch.corona[v] == n && patch.deg[v] > 0)
        .collect();
    if un.is_empty() {
        un = bnd.iter().copied().collect();
    }
    patch.u.push(un.len() as u64);
    patch.face_census.push(census(patch, &faces, &chosen));
    patch.concentric.push(check_concentric(patch, &un));
    *total += faces.len() as u64;
    patch.faces_by_corona.push(faces);
    if *total > max_faces {
        return Err(SimError::FaceBudgetExceeded);
    }
    Ok(())
}

fn advance_tape(tape: &mut Vec<usize>, radices: &[usize]) -> bool {
    // increment the decision tape like a mixed-radix counter using the
    // candidate counts recorded on the failing run
    while !tape.is_empty() {
        let i = tape.len() - 1;
        tape[i] += 1;
        if tape[i] < radices[i] {
            return true;
        }
        tape.pop();
    }
    false
}

/// Grow `n_coronas` coronas of the patch realizing `s` from the given root.
///
/// Runs a DFS over decision tapes, checkpointing the patch at each corona
/// boundary so that backtracking restores a snapshot instead of replaying
/// the whole construction.
pub fn grow(
    s: &CyclicSequence,
    root: Root,
    n_coronas: usize,
    opts: &GrowOptions,
) -> Result<PatchGraph, SimError> {
    let mut tape: Vec<usize> = Vec::new();
    let mut radices: Vec<usize> = Vec::new();
    let mut branches: u32 = 0;
    let mut patch = PatchGraph::new(s.terms(), opts.orient);
    let mut total: u64 = 0;
    // stack of (corona n, tape length at its start, patch snapshot, total)
    let mut snaps: Vec<(usize, usize, PatchGraph, u64)> = Vec::new();
    let mut n = 1usize;
    while n <= n_coronas {
        if snaps.last().map_or(true, |s| s.0 != n) {
            snaps.push((n, patch.tape_pos, patch.clone(), total));
        }
        let step = step_corona(
            &mut patch,
            n,
            root,
            opts.policy,
            &mut tape,
            &mut radices,
            &mut total,
            opts.max_faces,
        );
        match step {
            Ok(()) => n += 1,
            // a blown face budget on one branch is blown on every branch;
            // backtracking would only regrow the same coronas, so abort
            Err(SimError::FaceBudgetExceeded) => return Err(SimError::FaceBudgetExceeded),
            Err(err) => {
                branches += 1;
                if branches > opts.max_branches {
                    return Err(SimError::BranchBudgetExhausted(branches));
                }
                // keep only the decisions actually consumed before the failure
                let consumed = patch.tape_pos;
                tape.truncate(consumed);
                radices.truncate(consumed);
                if !advance_tape(&mut tape, &radices) {
                    return Err(err);
                }
                // restart from the corona that owns the first changed position
                while snaps.len() > 1
                    && snaps.last().expect("nonempty").1 as i64 > tape.len() as i64 - 1
                {
                    snaps.pop();
                }
                let (sn, start_len, snap, stotal) = snaps.last().expect("nonempty").clone();
                n = sn;
                total = stotal;
                patch = snap;
                debug_assert_eq!(patch.tape_pos, start_len);
            }
        }
    }
    Ok(patch)
}

/// Like [`grow`], but when no orientation is pinned, tries the fixed senses
/// and the reflective mode in turn and returns the first success. Some
/// non-concentric families complete only under a particular mode.
pub fn grow_auto(
    s: &CyclicSequence,
    root: Root,
    n_coronas: usize,
    opts: &GrowOptions,
) -> Result<PatchGraph, SimError> {
    if opts.orient.is_some() {
        return grow(s, root, n_coronas, opts);
    }
    let mut last: Option<SimError> = None;
    for orient in [Some(1), None, Some(-1)] {
        let attempt = GrowOptions {
            orient,
            ..opts.clone()
        };
        match grow(s, root, n_coronas, &attempt) {
            Ok(p) => return Ok(p),
            // the budget is orientation-independent; no point retrying
            Err(SimError::FaceBudgetExceeded) => return Err(SimError::FaceBudgetExceeded),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// True iff the given vertex set induces a single cycle in the patch.
pub fn check_concentric(patch: &PatchGraph, vs: &BTreeSet<usize>) -> bool {
    if vs.is_empty() {
        return false;
    }
    for &v in vs {
        let d = patch.nbrs[v].iter().filter(|u| vs.contains(u)).count();
        if d != 2 {
            return false;
        }
    }
    // connected?
    let start = *vs.iter().next().expect("nonempty");
    let mut seen: BTreeSet<usize> = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &patch.nbrs[v] {
            if vs.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == vs.len()
}

// ------------------------------------------------------------------ estimator

/// Growth-rate estimate from a corona profile: the last two-corona ratio
/// √(|F_n| / |F_{n−2}|), with an honesty interval spanning the last three
/// such ratios. Two-corona ratios are used because a negative eigenvalue of
/// maximal modulus makes single-corona ratios oscillate without converging.
pub fn estimate_growth(profile: &CoronaProfile) -> Result<GrowthRate, SimError> {
    if profile.f.len() < 4 {
        return Err(SimError::TooFewCoronas(profile.f.len()));
    }
    let r = &profile.two_corona_ratios;
    let tail = &r[r.len().saturating_sub(3)..];
    let value = *tail.last().expect("at least two ratios");
    let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let interval = match (BigRational::from_float(lo), BigRational::from_float(hi)) {
        (Some(lo), Some(hi)) => Some(CertifiedRoot { lo, hi }),
        _ => None,
    };
    Ok(GrowthRate {
        value,
        certified_interval: interval,
        source: GrowthSource::SimulatorEstimate,
    })
}

// --------------------------------------------------------------------- export

/// Serialization formats for a grown patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// One `u v` line per edge, with vertex annotations in `#` comments.
    EdgeList,
    /// Graphviz DOT with corona/valence attributes.
    Dot,
    /// JSON; round-trips through [`import_patch_json`].
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edges" | "edge-list" | "edgelist" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(format!("unknown export format: {other}")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    valence: Option<u32>,
    corona: usize,
}

/// Serialized form of a patch (graph, series, and diagnostics).
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PatchJson {
    seq: Vec<u32>,
    orient: Option<i8>,
    vertices: Vec<VertexJson>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<FaceRec>>,
    boundary: Vec<usize>,
    f: Vec<u64>,
    u: Vec<u64>,
    concentric: Vec<bool>,
    pendants: Vec<usize>,
}

/// Render a patch in the requested format with stable vertex ordering.
pub fn export_patch(patch: &PatchGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::EdgeList => {
            let mut out = String::new();
            for v in 0..patch.vertex_count() {
                let val = patch.val[v]
                    .map(|x| x.to_string())
                    .unwrap_or_else(|| "?".into());
                out.push_str(&format!(
                    "# vertex {v} corona {} valence {val}\n",
                    patch.corona[v]
                ));
            }
            for (a, b) in patch.edges() {
                out.push_str(&format!("{a} {b}\n"));
            }
            out
        }
        ExportFormat::Dot => {
            let mut out = String::from("graph patch {\n");
            for v in 0..patch.vertex_count() {
                let val = patch.val[v]
                    .map(|x| x.to_string())
                    .unwrap_or_else(|| "0".into());
                out.push_str(&format!(
                    "  {v} [corona={}, valence={}];\n",
                    patch.corona[v], val
                ));
            }
            for (a, b) in patch.edges() {
                out.push_str(&format!("  {a} -- {b};\n"));
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::Json => {
            let data = PatchJson {
                seq: patch.seq.clone(),
                orient: patch.orient,
                vertices: (0..patch.vertex_count())
                    .map(|v| VertexJson {
                        id: v,
                        valence: patch.val[v],
                        corona: patch.corona[v],
                    })
                    .collect(),
                edges: patch.edges().into_iter().collect(),
                faces: patch.faces_by_corona.clone(),
                boundary: patch.boundary.clone(),
                f: patch.f.clone(),
                u: patch.u.clone(),
                concentric: patch.concentric.clone(),
                pendants: patch.pendants.clone(),
            };
            serde_json::to_string_pretty(&data).expect("patch serializes")
        }
    }
}

/// Reconstruct a patch from its JSON export. The rebuilt patch is
/// graph-identical to the original up to adjacency-list order (compare with
/// [`PatchGraph::same_graph`]).
pub fn import_patch_json(text: &str) -> Result<PatchGraph, SimError> {
    let data: PatchJson =
        serde_json::from_str(text).map_err(|e| SimError::InvalidData(e.to_string()))?;
    if data.seq.is_empty() {
        return Err(SimError::InvalidData("empty sequence".into()));
    }
    let n = data.vertices.len();
    for (i, v) in data.vertices.iter().enumerate() {
        if v.id != i {
            return Err(SimError::InvalidData(format!(
                "vertex ids must be contiguous from 0; found {} at position {i}",
                v.id
            )));
        }
    }
    let mut patch = PatchGraph::new(&data.seq, data.orient);
    for v in &data.vertices {
        patch.new_vertex(v.corona, v.valence);
    }
    for &(a, b) in &data.edges {
        if a >= n || b >= n {
            return Err(SimError::InvalidData(format!(
                "edge ({a}, {b}) references a missing vertex"
            )));
        }
        patch.add_edge(a, b);
    }
    patch.boundary = data.boundary;
    patch.f = data.f;
    patch.u = data.u;
    patch.concentric = data.concentric;
    patch.pendants = data.pendants;
    patch.faces_by_corona = data.faces;
    Ok(patch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transition::{catalog_matrix, Variant};

    fn seq(raw: &[u32]) -> CyclicSequence {
        CyclicSequence::new(raw).expect("valid sequence")
    }

    fn opts(orient: Option<i8>, policy: Option<Variant>) -> GrowOptions {
        GrowOptions {
            policy,
            orient,
            ..GrowOptions::default()
        }
    }

    #[test]
    fn heptagonal_triangulation_series() {
        let p = grow(&seq(&[7, 7, 7]), Root::Vertex(7), 3, &opts(Some(1), None)).unwrap();
        assert_eq!(p.face_series(), &[7, 28, 77]);
        assert_eq!(p.vertex_series(), &[7, 21, 56]);
        assert_eq!(p.concentric_flags(), &[true, true, true]);
        assert!(p.pendants().is_empty());
    }

    #[test]
    fn brick_wall_policies_diverge() {
        let s = seq(&[4, 4, 6, 8]);
        let t1 = grow(&s, Root::Vertex(4), 5, &opts(None, Some(Variant::T1))).unwrap();
        assert_eq!(t1.face_series(), &[4, 30, 110, 494, 1938]);
        let t2 = grow(&s, Root::Vertex(4), 5, &opts(None, Some(Variant::T2))).unwrap();
        assert_eq!(t2.face_series(), &[4, 28, 108, 468, 1900]);
    }

    #[test]
    fn pendant_root_is_non_concentric() {
        let s = seq(&[3, 3, 5, 3, 5]);
        let bad = grow(&s, Root::Vertex(3), 4, &opts(Some(1), None)).unwrap();
        assert_eq!(bad.face_series(), &[3, 14, 43, 116]);
        assert_eq!(bad.pendants().len(), 3);
        assert_eq!(bad.concentric_flags(), &[true, true, false, false]);

        let good = grow(&s, Root::Vertex(5), 5, &opts(Some(1), None)).unwrap();
        assert_eq!(good.face_series(), &[5, 20, 55, 145, 380]);
        assert!(good.pendants().is_empty());
        assert!(good.concentric_flags().iter().all(|&c| c));
    }

    #[test]
    fn golden_mean_series_matches_matrix() {
        let s = seq(&[4, 6, 14]);
        let p = grow(&s, Root::Vertex(14), 6, &opts(None, None)).unwrap();
        assert_eq!(p.face_series(), &[14, 28, 70, 98, 196, 266]);

        let entry = catalog_matrix(&s, None).unwrap();
        let series = crate::spectral::corona_series(&entry.matrix, &entry.v1.counts, 6);
        let sim: Vec<_> = p
            .face_series()
            .iter()
            .map(|&x| crate::transition::Rational::from_integer(x.into()))
            .collect();
        assert_eq!(series, sim);
    }

    #[test]
    fn golden_mean_estimate_within_two_percent() {
        let s = seq(&[4, 6, 14]);
        let p = grow(&s, Root::Vertex(14), 12, &opts(None, None)).unwrap();
        let est = estimate_growth(&p.profile()).unwrap();
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!(
            (est.value - phi).abs() / phi < 0.02,
            "estimate {} too far from {phi}",
            est.value
        );
        assert_eq!(est.source, GrowthSource::SimulatorEstimate);
        let iv = est.certified_interval.unwrap();
        assert!(iv.lo <= iv.hi);
    }

    #[test]
    fn auto_orientation_finds_reflective_mode() {
        // from the 6-valent root this family only completes when reflected
        // alignments are allowed
        let s = seq(&[4, 6, 14]);
        assert!(grow(&s, Root::Vertex(6), 4, &opts(Some(1), None)).is_err());
        let p = grow_auto(&s, Root::Vertex(6), 4, &opts(None, None)).unwrap();
        assert_eq!(&p.face_series()[..2], &[6, 36]);
    }

    #[test]
    fn too_few_coronas_rejected() {
        let p = grow(&seq(&[7, 7, 7]), Root::Vertex(7), 3, &opts(Some(1), None)).unwrap();
        assert_eq!(
            estimate_growth(&p.profile()),
            Err(SimError::TooFewCoronas(3))
        );
    }

    #[test]
    fn edge_list_counts_wheel_edges() {
        let p = grow(&seq(&[7, 7, 7]), Root::Vertex(7), 1, &opts(Some(1), None)).unwrap();
        let text = export_patch(&p, ExportFormat::EdgeList);
        let edges = text.lines().filter(|l| !l.starts_with('#')).count();
        // 7 spokes + 7 outer cycle edges
        assert_eq!(edges, 14);
    }

    #[test]
    fn dot_export_is_well_formed() {
        let p = grow(&seq(&[7, 7, 7]), Root::Vertex(7), 2, &opts(Some(1), None)).unwrap();
        let text = export_patch(&p, ExportFormat::Dot);
        assert!(text.starts_with("graph patch {"));
        assert!(text.trim_end().ends_with('}'));
        assert!(text.contains("--"));
    }

    #[test]
    fn json_round_trip() {
        let s = seq(&[4, 4, 6, 8]);
        let p = grow(&s, Root::Vertex(4), 2, &opts(None, Some(Variant::T1))).unwrap();
        let text = export_patch(&p, ExportFormat::Json);
        let back = import_patch_json(&text).unwrap();
        assert!(p.same_graph(&back));
        assert_eq!(p.face_series(), back.face_series());
    }

    #[test]
    fn profile_sums_and_ratios() {
        let p = grow(&seq(&[7, 7, 7]), Root::Vertex(7), 4, &opts(Some(1), None)).unwrap();
        let prof = p.profile();
        assert_eq!(prof.tau.len(), 4);
        assert_eq!(prof.tau[0], prof.f[0]);
        assert_eq!(prof.tau[3], prof.f.iter().sum::<u64>());
        assert!(prof.tau.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(prof.ratios.len(), 3);
        assert_eq!(prof.two_corona_ratios.len(), 2);
    }
}
