//! Property-based and exhaustive invariant tests across all modules.
//!
//! Each invariant here is part of the library's contract: canonical forms
//! are orbit constants, the domination order is a genuine partial order
//! compatible with the angle excess, transition matrices obey the offspring
//! counting law, characteristic polynomials agree with cofactor expansion,
//! the palindromic-quartic root formula matches exact root isolation, and
//! simulated patches respect the spectral bounds.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use tessgrowth::classify::{classify, polymorphism_sufficient, Morphism};
use tessgrowth::cyclic::{
    angle_excess, canonicalize, compare, realizability_check, CyclicSequence, GrowthClass,
    OrderRel, Realizability,
};
use tessgrowth::cyclic::growth_class;
use tessgrowth::formulas::{closed_form, EdgeSymbol};
use tessgrowth::sim::{grow_auto, GrowOptions, Root};
use tessgrowth::spectral::{
    char_poly, corona_series, growth_rate, palindromic_quartic, palindromic_quartic_root,
    RationalPolynomial,
};
use tessgrowth::transition::{
    block_matrix_raw, catalog_matrix, offspring_counts, FaceTypeId, Rational, TransitionMatrix,
    Variant,
};

/// Tolerance for floating-point identities between closed-form radicals and
/// certified spectral roots; certified intervals are 1e−12 wide and the
/// radicals carry at most a few ulps of error, so 1e−9 has ample headroom.
const FLOAT_TOLERANCE: f64 = 1e-9;

fn seq(raw: &[u32]) -> CyclicSequence {
    CyclicSequence::new(raw).unwrap()
}

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

fn le(a: &CyclicSequence, b: &CyclicSequence) -> bool {
    matches!(compare(a, b), OrderRel::Less | OrderRel::Equal)
}

/// Calls `f` for every word of length 3..=max_len over valences lo..=hi.
fn for_each_word(max_len: usize, lo: u32, hi: u32, f: &mut impl FnMut(&[u32])) {
    for k in 3..=max_len {
        let mut word = vec![lo; k];
        'words: loop {
            f(&word);
            // mixed-radix odometer, most significant digit first
            for i in (0..k).rev() {
                if word[i] < hi {
                    word[i] += 1;
                    for w in word[i + 1..].iter_mut() {
                        *w = lo;
                    }
                    continue 'words;
                }
            }
            break;
        }
    }
}

/// Admissible catalog representatives used by several matrix-level checks.
fn catalog_words() -> Vec<(Vec<u32>, Option<Variant>)> {
    let mut out: Vec<(Vec<u32>, Option<Variant>)> = [
        vec![6u32, 6, 7],
        vec![4, 6, 14],
        vec![3, 14, 14],
        vec![6, 8, 10],
        vec![5, 5, 5, 5],
        vec![4, 4, 6, 6],
        vec![4, 5, 4, 5],
        vec![3, 6, 4, 6],
        vec![3, 4, 7, 4],
        vec![4, 5, 4, 6],
        vec![4, 6, 10, 8],
        vec![4, 4, 4, 4, 4],
        vec![3, 3, 3, 3, 7],
        vec![3, 3, 3, 6, 6],
        vec![3, 3, 5, 3, 5],
        vec![3, 3, 4, 3, 5],
        vec![4, 4, 6, 5, 6],
        vec![3, 4, 6, 6, 4],
        vec![4, 6, 10, 12, 8],
        vec![4, 4, 4, 4, 4, 4],
        vec![4, 4, 5, 4, 4, 5],
        vec![4, 5, 4, 5, 4, 5],
        vec![6, 4, 4, 6, 8, 8],
        vec![4, 5, 4, 6, 5, 6],
        vec![4, 6, 8, 4, 6, 8],
        vec![4, 5, 4, 6, 7, 6],
        vec![4, 6, 8, 4, 10, 12],
        vec![4, 6, 10, 14, 12, 8],
        vec![3, 4, 4, 3, 4, 4],
        vec![3, 3, 3, 4, 5, 4],
        vec![3, 4, 6, 3, 6, 4],
        vec![3, 4, 3, 5, 3, 6],
        vec![3, 4, 6, 5, 6, 4],
    ]
    .into_iter()
    .map(|w| (w, None))
    .collect();
    out.push((vec![4, 4, 6, 8], Some(Variant::T1)));
    out.push((vec![4, 4, 6, 8], Some(Variant::T2)));
    out
}

// ------------------------------------------------------------------- cyclic

/// Canonical form is constant on every rotation/reflection orbit and
/// idempotent, checked exhaustively for k ≤ 6 and valences ≤ 14. Constancy
/// under the two orbit generators (rotate by one, reverse) at every word
/// implies constancy on the full orbit.
#[test]
fn canonical_form_exhaustive_orbit_constant_and_idempotent() {
    let mut checked = 0u64;
    for_each_word(6, 3, 14, &mut |word| {
        let c = canonicalize(word).unwrap();
        let mut rot = word.to_vec();
        rot.rotate_left(1);
        assert_eq!(canonicalize(&rot).unwrap(), c, "rotation changed {word:?}");
        let mut rev = word.to_vec();
        rev.reverse();
        assert_eq!(canonicalize(&rev).unwrap(), c, "reflection changed {word:?}");
        if word == c.terms() {
            assert_eq!(canonicalize(c.terms()).unwrap(), c, "not idempotent at {word:?}");
        }
        checked += 1;
    });
    // 12^3 + 12^4 + 12^5 + 12^6
    assert_eq!(checked, 1728 + 20736 + 248832 + 2985984);
}

/// Exhaustive pairwise check (k ≤ 4, valences ≤ 14): the order is
/// antisymmetric and strictly compatible with the angle excess.
#[test]
fn order_and_excess_compatible_exhaustive_small() {
    let mut canon: BTreeSet<CyclicSequence> = BTreeSet::new();
    for_each_word(4, 3, 14, &mut |word| {
        canon.insert(canonicalize(word).unwrap());
    });
    let items: Vec<(CyclicSequence, BigRational)> = canon
        .into_iter()
        .map(|s| {
            let eta = angle_excess(&s).value;
            (s, eta)
        })
        .collect();
    for (a, ea) in &items {
        for (b, eb) in &items {
            match compare(a, b) {
                OrderRel::Less => {
                    assert_eq!(compare(b, a), OrderRel::Greater, "{a} vs {b}");
                    assert!(ea < eb, "{a} < {b} but excess {ea} >= {eb}");
                }
                OrderRel::Equal => assert_eq!(a, b, "distinct classes compared Equal"),
                _ => {}
            }
        }
    }
}

/// Exact closed form for the angle excess of constant sequences:
/// η([p,…,p], length k) = k(p−2)/p − 2.
#[test]
fn constant_sequence_excess_closed_form() {
    for p in 3i64..=20 {
        for k in 3usize..=8 {
            let s = seq(&vec![p as u32; k]);
            let want = BigRational::new(BigInt::from(k as i64 * (p - 2)), BigInt::from(p))
                - rat(2);
            assert_eq!(angle_excess(&s).value, want, "p={p} k={k}");
        }
    }
}

proptest! {
    /// Reflexivity: every sequence compares Equal to itself.
    #[test]
    fn order_is_reflexive(word in prop::collection::vec(3u32..=14, 3..=6)) {
        let s = seq(&word);
        prop_assert_eq!(compare(&s, &s), OrderRel::Equal);
    }

    /// Antisymmetry on random pairs of any length ≤ 6.
    #[test]
    fn order_is_antisymmetric(
        wa in prop::collection::vec(3u32..=14, 3..=6),
        wb in prop::collection::vec(3u32..=14, 3..=6),
    ) {
        let (a, b) = (seq(&wa), seq(&wb));
        match compare(&a, &b) {
            OrderRel::Less => prop_assert_eq!(compare(&b, &a), OrderRel::Greater),
            OrderRel::Greater => prop_assert_eq!(compare(&b, &a), OrderRel::Less),
            OrderRel::Equal => prop_assert_eq!(&a, &b),
            OrderRel::Incomparable => {
                prop_assert_eq!(compare(&b, &a), OrderRel::Incomparable)
            }
        }
    }

    /// Transitivity on random triples.
    #[test]
    fn order_is_transitive(
        wa in prop::collection::vec(3u32..=14, 3..=6),
        wb in prop::collection::vec(3u32..=14, 3..=6),
        wc in prop::collection::vec(3u32..=14, 3..=6),
    ) {
        let (a, b, c) = (seq(&wa), seq(&wb), seq(&wc));
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c), "{} <= {} <= {} but not {} <= {}", a, b, c, a, c);
        }
    }

    /// Strict order/excess compatibility on random pairs up to length 6.
    #[test]
    fn less_implies_strictly_smaller_excess(
        wa in prop::collection::vec(3u32..=14, 3..=6),
        wb in prop::collection::vec(3u32..=14, 3..=6),
    ) {
        let (a, b) = (seq(&wa), seq(&wb));
        if compare(&a, &b) == OrderRel::Less {
            prop_assert!(angle_excess(&a).value < angle_excess(&b).value, "{} < {}", a, b);
        }
    }

    /// Classification only depends on the equivalence class, not the word.
    #[test]
    fn classification_is_rotation_and_reflection_invariant(
        word in prop::collection::vec(3u32..=14, 3..=6),
        shift in 0usize..6,
        flip in any::<bool>(),
    ) {
        let mut other = word.clone();
        let len = other.len();
        other.rotate_left(shift % len);
        if flip {
            other.reverse();
        }
        prop_assert_eq!(classify(&seq(&word)), classify(&seq(&other)));
    }
}

// ----------------------------------------------------------------- classify

/// Exhaustive sweep of all hyperbolic classes with k ≤ 6 and valences ≤ 10:
/// the sufficient polymorphism witness is never found on a sequence the
/// catalog classifies as monomorphic, and every parity-realizable
/// hyperbolic sequence receives a definite morphism verdict.
#[test]
fn classification_sweep_exhaustive_small_valences() {
    let mut canon: BTreeSet<CyclicSequence> = BTreeSet::new();
    for_each_word(6, 3, 10, &mut |word| {
        canon.insert(canonicalize(word).unwrap());
    });
    let mut hyperbolic = 0usize;
    for s in &canon {
        if growth_class(s) != GrowthClass::Hyperbolic {
            continue;
        }
        let verdict = classify(s);
        if polymorphism_sufficient(s) == Ok(true) {
            assert_eq!(
                verdict.morphism,
                Morphism::Polymorphic,
                "{s} has a polymorphism witness but is classified {:?}",
                verdict.morphism
            );
        }
        if realizability_check(s) == Realizability::Ok {
            hyperbolic += 1;
            assert_ne!(
                verdict.morphism,
                Morphism::Unknown,
                "{s} is realizable and hyperbolic but unclassified"
            );
        }
    }
    assert!(hyperbolic > 1000, "sweep too small: {hyperbolic}");
}

// --------------------------------------------------------------- transition

/// Column sums of the block construction equal the offspring counts Ω of
/// the corresponding face types, swept over p, q ∈ {4..14} in three shapes.
#[test]
fn block_matrix_column_sums_equal_offspring_counts_sweep() {
    for p in 4u32..=14 {
        for qv in 4u32..=14 {
            for word in [
                vec![p, qv, 10, 12],
                vec![p, qv, p, qv],
                vec![p, qv, 6, 8, 12],
            ] {
                let s = seq(&word);
                let m = block_matrix_raw(s.terms());
                let k = s.len();
                for j in 0..k {
                    assert_eq!(
                        m.column_sum(j),
                        offspring_counts(&s, &FaceTypeId::Wedge(j + 1)).unwrap(),
                        "wedge column {j} of {s}"
                    );
                    assert_eq!(
                        m.column_sum(k + j),
                        offspring_counts(&s, &FaceTypeId::Brick(j + 1)).unwrap(),
                        "brick column {j} of {s}"
                    );
                }
            }
        }
    }
}

/// Every catalog matrix keeps its entries in (1/4)·ℤ.
#[test]
fn catalog_matrix_entries_lie_in_quarter_integers() {
    for (word, variant) in catalog_words() {
        let entry = catalog_matrix(&seq(&word), variant).unwrap();
        assert!(
            entry.matrix.denominators_divide_four(),
            "denominator violation for {word:?}"
        );
    }
}

// ----------------------------------------------------------------- spectral

/// Polynomial subtraction helper for the cofactor-expansion cross-check.
fn poly_sub(a: &RationalPolynomial, b: &RationalPolynomial) -> RationalPolynomial {
    let n = a.coeffs().len().max(b.coeffs().len());
    let get = |p: &RationalPolynomial, i: usize| {
        p.coeffs().get(i).cloned().unwrap_or_else(Rational::zero)
    };
    RationalPolynomial::new((0..n).map(|i| get(a, i) - get(b, i)).collect())
}

fn poly_add(a: &RationalPolynomial, b: &RationalPolynomial) -> RationalPolynomial {
    let n = a.coeffs().len().max(b.coeffs().len());
    let get = |p: &RationalPolynomial, i: usize| {
        p.coeffs().get(i).cloned().unwrap_or_else(Rational::zero)
    };
    RationalPolynomial::new((0..n).map(|i| get(a, i) + get(b, i)).collect())
}

/// det of a matrix of polynomials by first-row cofactor expansion.
fn poly_det(m: &[Vec<RationalPolynomial>]) -> RationalPolynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RationalPolynomial::from_ints(&[0]);
    for j in 0..n {
        let minor: Vec<Vec<RationalPolynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&poly_det(&minor));
        acc = if j % 2 == 0 {
            poly_add(&acc, &term)
        } else {
            poly_sub(&acc, &term)
        };
    }
    acc
}

fn char_poly_by_cofactors(m: &TransitionMatrix) -> RationalPolynomial {
    let d = m.order();
    let zi_minus_m: Vec<Vec<RationalPolynomial>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut coeffs = vec![-m.entry(i, j).clone()];
                    if i == j {
                        coeffs.push(Rational::one());
                    }
                    RationalPolynomial::new(coeffs)
                })
                .collect()
        })
        .collect();
    poly_det(&zi_minus_m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The trace-recurrence characteristic polynomial agrees exactly with
    /// cofactor expansion of det(zI − M) on random matrices of order ≤ 6
    /// with entries in (1/4)·ℤ.
    #[test]
    fn char_poly_matches_cofactor_expansion(
        order in 2usize..=6,
        nums in prop::collection::vec(-8i64..=8, 36),
    ) {
        let entries: Vec<Vec<Rational>> = (0..order)
            .map(|i| {
                (0..order)
                    .map(|j| BigRational::new(BigInt::from(nums[i * 6 + j]), BigInt::from(4)))
                    .collect()
            })
            .collect();
        let labels = (0..order)
            .map(|i| FaceTypeId::Other(format!("t{i}")))
            .collect();
        let m = TransitionMatrix::new(labels, entries);
        prop_assert_eq!(char_poly(&m), char_poly_by_cofactors(&m));
    }

    /// The palindromic quartic z⁴ − az³ − bz² − az + 1 has reciprocal root
    /// pairs: the formula root r and 1/r both annihilate it.
    #[test]
    fn palindromic_quartic_roots_come_in_reciprocal_pairs(
        a in 0.1f64..10.0,
        b in 0.1f64..10.0,
    ) {
        let r = palindromic_quartic_root(a, b);
        let p = |z: f64| z.powi(4) - a * z.powi(3) - b * z * z - a * z + 1.0;
        let scale = 1.0 + r.powi(4);
        prop_assert!(p(r).abs() <= 1e-9 * scale, "p({r}) = {}", p(r));
        prop_assert!(p(1.0 / r).abs() <= 1e-9, "p(1/{r}) = {}", p(1.0 / r));
    }

    /// The closed-form root of the palindromic quartic matches exact root
    /// isolation to 1e−10 on random (a, b) ∈ (0, 20]² (dyadic grid).
    #[test]
    fn palindromic_formula_matches_exact_isolation(
        an in 1i64..=160,
        bn in 1i64..=160,
    ) {
        let a = BigRational::new(BigInt::from(an), BigInt::from(8));
        let b = BigRational::new(BigInt::from(bn), BigInt::from(8));
        let fast = palindromic_quartic_root(an as f64 / 8.0, bn as f64 / 8.0);
        let exact = palindromic_quartic(&a, &b).max_real_root().unwrap();
        prop_assert!(
            (fast - exact.value()).abs() <= 1e-10,
            "a={a} b={b}: {} vs {}", fast, exact.value()
        );
    }
}

/// Characteristic polynomials (hence spectra) are invariant under transpose
/// and under simultaneous row/column permutation.
#[test]
fn char_poly_invariant_under_transpose_and_relabeling() {
    for (word, variant) in catalog_words() {
        let entry = catalog_matrix(&seq(&word), variant).unwrap();
        let m = &entry.matrix;
        let p = char_poly(m);
        assert_eq!(p, char_poly(&m.transposed()), "transpose changed χ for {word:?}");
        let d = m.order();
        // rotate the type indexing by one: P M Pᵀ
        let perm: Vec<usize> = (0..d).map(|i| (i + 1) % d).collect();
        let entries: Vec<Vec<Rational>> = (0..d)
            .map(|i| (0..d).map(|j| m.entry(perm[i], perm[j]).clone()).collect())
            .collect();
        let labels = (0..d).map(|i| m.labels()[perm[i]].clone()).collect();
        let pm = TransitionMatrix::new(labels, entries);
        assert_eq!(p, char_poly(&pm), "relabeling changed χ for {word:?}");
    }
}

/// The corona series obeys the linear recurrence given by the
/// characteristic polynomial beyond its degree.
#[test]
fn corona_series_satisfies_characteristic_recurrence() {
    for (word, variant) in catalog_words() {
        let entry = catalog_matrix(&seq(&word), variant).unwrap();
        let poly = char_poly(&entry.matrix);
        let d = poly.degree();
        let series = corona_series(&entry.matrix, &entry.v1.counts, d + 5);
        for offset in 0..4 {
            let mut acc = Rational::zero();
            for (i, c) in poly.coeffs().iter().enumerate() {
                acc += c * &series[offset + i];
            }
            assert!(acc.is_zero(), "recurrence fails for {word:?} at offset {offset}");
        }
    }
}

// ----------------------------------------------------------------- formulas

/// Growth rates are monotone in each free parameter along single-family
/// sweeps.
#[test]
fn closed_forms_are_monotone_in_each_parameter() {
    let sweeps: Vec<Vec<Vec<u32>>> = vec![
        (7u32..=20).map(|p| vec![p, p, p]).collect(),
        (14..=40).step_by(2).map(|p| vec![p, p, 3]).collect(),
        (14..=30).step_by(2).map(|q| vec![4, 6, q]).collect(),
        (7..=20).map(|q| vec![6, 6, q]).collect(),
        (5..=20).map(|p| vec![p, p, p, p]).collect(),
        (6..=20).map(|q| vec![4, q, 4, q]).collect(),
        (7..=20).map(|p| vec![3, 3, 3, 3, p]).collect(),
    ];
    for sweep in sweeps {
        let mut prev: Option<f64> = None;
        for word in sweep {
            let v = closed_form(&seq(&word)).unwrap().value;
            if let Some(p) = prev {
                assert!(
                    v >= p - FLOAT_TOLERANCE,
                    "growth decreased along sweep at {word:?}: {p} -> {v}"
                );
            }
            prev = Some(v);
        }
    }
}

/// The edge-homogeneous growth parameter t is self-dual, so every symbol
/// grows exactly as fast as its planar dual.
#[test]
fn edge_symbol_growth_is_self_dual() {
    for p in 3u32..=9 {
        for q in 3u32..=9 {
            for k in 3u32..=9 {
                for l in 3u32..=9 {
                    let sym = EdgeSymbol::new(p, q, k, l);
                    let dual = sym.dual();
                    assert_eq!(sym.exists(), dual.exists(), "{sym:?}");
                    assert_eq!(sym.t(), dual.t(), "{sym:?}");
                    match (sym.growth(), dual.growth()) {
                        (Some(a), Some(b)) => assert!((a - b).abs() < 1e-12, "{sym:?}"),
                        (None, None) => {}
                        other => panic!("dual growth mismatch for {sym:?}: {other:?}"),
                    }
                }
            }
        }
    }
}

/// Λ(σ) ≤ 1 + Σ p_i − 2k for every catalog representative.
#[test]
fn growth_rate_respects_the_universal_upper_bound() {
    for (word, variant) in catalog_words() {
        let s = seq(&word);
        let rate = growth_rate(&s, variant).unwrap();
        let bound = 1.0 + word.iter().map(|&p| p as f64).sum::<f64>() - 2.0 * word.len() as f64;
        assert!(
            rate.value <= bound + FLOAT_TOLERANCE,
            "{word:?}: {} exceeds {bound}",
            rate.value
        );
    }
}

/// Suppressing the 3-valent vertices of [p,p,3] (even p) yields the constant
/// sequence [p/2, p/2, p/2]; their growth rates agree.
#[test]
fn pp3_reduces_to_the_constant_half_sequence() {
    for p in (14u32..=40).step_by(2) {
        let a = growth_rate(&seq(&[p, p, 3]), None).unwrap().value;
        let h = p / 2;
        let b = growth_rate(&seq(&[h, h, h]), None).unwrap().value;
        assert!((a - b).abs() < FLOAT_TOLERANCE, "p={p}: {a} vs {b}");
    }
}

/// Growth is monotone across comparable monomorphic representatives.
#[test]
fn growth_is_monotone_over_comparable_catalog_pairs() {
    let reps: Vec<(CyclicSequence, f64)> = catalog_words()
        .into_iter()
        .filter(|(_, v)| v.is_none())
        .map(|(w, _)| {
            let s = seq(&w);
            let r = growth_rate(&s, None).unwrap().value;
            (s, r)
        })
        .collect();
    let mut comparable = 0usize;
    for (a, ra) in &reps {
        for (b, rb) in &reps {
            if compare(a, b) == OrderRel::Less {
                comparable += 1;
                assert!(*ra <= rb + FLOAT_TOLERANCE, "{a} < {b} but {ra} > {rb}");
            }
        }
    }
    assert!(comparable >= 20, "only {comparable} comparable pairs");
}

// ---------------------------------------------------------------- simulator

/// Single-corona face ratios of simulated patches stay below the universal
/// bound 1 + Σ p_i − 2k.
#[test]
fn simulated_face_ratios_stay_below_the_universal_bound() {
    for (word, n) in [(vec![7u32, 7, 7], 8usize), (vec![4, 5, 4, 5], 8), (vec![4, 6, 14], 10)] {
        let s = seq(&word);
        let root = match catalog_matrix(&s, None) {
            Ok(e) => e.root_valence,
            Err(_) => *word.iter().max().unwrap(),
        };
        let patch = grow_auto(&s, Root::Vertex(root), n, &GrowOptions::default()).unwrap();
        let bound = 1.0 + word.iter().map(|&p| p as f64).sum::<f64>() - 2.0 * word.len() as f64;
        for (i, r) in patch.profile().ratios.iter().enumerate() {
            assert!(*r <= bound + 1e-9, "{word:?} corona {}: ratio {r} > {bound}", i + 1);
        }
    }
}

/// Comparison property: [4,5,4,5] precedes [4,6,6,4,5] in the domination
/// order, and its simulated corona counts never exceed the larger
/// sequence's from corona 3 on.
#[test]
fn dominated_sequence_grows_no_faster_in_simulation() {
    let small = seq(&[4, 5, 4, 5]);
    let large = seq(&[4, 6, 6, 4, 5]);
    assert_eq!(compare(&small, &large), OrderRel::Less);
    let a = grow_auto(&small, Root::Vertex(5), 6, &GrowOptions::default()).unwrap();
    let b = grow_auto(&large, Root::Vertex(5), 6, &GrowOptions::default()).unwrap();
    for n in 2..6 {
        assert!(
            a.face_series()[n] <= b.face_series()[n],
            "corona {}: {} > {}",
            n + 1,
            a.face_series()[n],
            b.face_series()[n]
        );
    }
}

/// Exact face counts reported through the public Rational series helpers
/// stay integral for whole-face systems.
#[test]
fn catalog_series_are_integral_for_whole_face_systems() {
    for (word, variant) in catalog_words() {
        if word.len() == 3 && word.contains(&3) {
            continue; // the halved [p,p,3] system counts half-faces by design
        }
        let entry = catalog_matrix(&seq(&word), variant).unwrap();
        for x in corona_series(&entry.matrix, &entry.v1.counts, 8) {
            assert!(x.is_integer(), "non-integral count {x} for {word:?}");
        }
    }
}
