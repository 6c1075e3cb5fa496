//! Closed-form growth rates, edge-homogeneous symbols, and the reference
//! tables: the 36-family least-growth table and the minimal-representative
//! tables for the five- and six-letter all-distinct families.
//!
//! Closed forms are radical expressions evaluated in f64; they exist for a
//! subset of the catalog and serve as an independent cross-check of the
//! spectral route. Where a published value is known to disagree with both
//! the spectral radius and the simulator census, the table reports the value
//! all independent routes agree on and records the differing figure in
//! [`LeastGrowthRow::published_differs`].

use serde::{Deserialize, Serialize};

use crate::classify::{match_pattern, minimal_representatives};
use crate::cyclic::{growth_class, CyclicSequence, GrowthClass};
use crate::spectral::{growth_rate, palindromic_quartic_root, GrowthRate, GrowthSource};

/// g(t) = (t − 2 + √((t−2)² − 4))/2, the growth rate of the quadratic
/// recurrence F_{n+1} = (t−2)F_n − F_{n−1}; requires t ≥ 4.
pub fn g(t: f64) -> f64 {
    (t - 2.0 + ((t - 2.0) * (t - 2.0) - 4.0).sqrt()) / 2.0
}

// ------------------------------------------------------------- edge symbols

/// An edge-homogeneous tessellation symbol ⟨p,q;k,ℓ⟩: every edge joins a
/// p-valent and a q-valent vertex and separates a k-gon from an ℓ-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSymbol {
    pub p: u32,
    pub q: u32,
    pub k: u32,
    pub l: u32,
}

impl EdgeSymbol {
    pub fn new(p: u32, q: u32, k: u32, l: u32) -> Self {
        EdgeSymbol { p, q, k, l }
    }

    /// The planar dual swaps valences with covalences.
    pub fn dual(&self) -> EdgeSymbol {
        EdgeSymbol { p: self.k, q: self.l, k: self.p, l: self.q }
    }

    /// Existence: an edge-homogeneous tessellation with this symbol exists
    /// iff p,q ≥ 3, k,ℓ ≥ 3 and one of:
    /// all four parameters even; k = ℓ even; p = q even; or
    /// p = q, k = ℓ with all four odd.
    pub fn exists(&self) -> bool {
        let (p, q, k, l) = (self.p, self.q, self.k, self.l);
        if p < 3 || q < 3 || k < 3 || l < 3 {
            return false;
        }
        let even = |x: u32| x % 2 == 0;
        let all_even = even(p) && even(q) && even(k) && even(l);
        let faces_match = k == l && even(k);
        let valences_match = p == q && even(p);
        let all_odd_matched = p == q && k == l && !even(p) && !even(k);
        all_even || faces_match || valences_match || all_odd_matched
    }

    /// The growth parameter t = ((p+q)/2 − 2)·((k+ℓ)/2 − 2).
    pub fn t(&self) -> f64 {
        ((self.p + self.q) as f64 / 2.0 - 2.0) * ((self.k + self.l) as f64 / 2.0 - 2.0)
    }

    /// Growth rate: g(t), except the symbols ⟨3,p;4,4⟩ with p ≥ 6 and their
    /// duals, which grow like g(t−1). `None` when t < 4 (no exponential
    /// growth) or the symbol does not exist.
    pub fn growth(&self) -> Option<f64> {
        if !self.exists() {
            return None;
        }
        let (p, q, k, l) = (self.p, self.q, self.k, self.l);
        let slow = (k == 4 && l == 4 && p.min(q) == 3 && p.max(q) >= 6)
            || (p == 4 && q == 4 && k.min(l) == 3 && k.max(l) >= 6);
        let t = self.t() - if slow { 1.0 } else { 0.0 };
        if t < 4.0 {
            return None;
        }
        Some(g(t))
    }

    /// Upper bound on the ratio |F_{n+1}|/|F_n| of the Bilinski annuli:
    /// 1 + max{pk, qk, pℓ, qℓ}.
    pub fn bounded_ratio_bound(&self) -> u32 {
        let m = (self.p * self.k)
            .max(self.q * self.k)
            .max(self.p * self.l)
            .max(self.q * self.l);
        1 + m
    }
}

// ------------------------------------------------------------- closed forms

/// Closed-form growth rate when one is known for the family of `s`
/// (f64 radicals; no certified interval). `None` for non-hyperbolic
/// sequences or families without a closed form.
pub fn closed_form(s: &CyclicSequence) -> Option<GrowthRate> {
    if growth_class(s) != GrowthClass::Hyperbolic {
        return None;
    }
    let (pat, bound) = match_pattern(s)?;
    let v = |i: usize| bound[i] as f64;
    let value = match pat.key {
        "ppp" => {
            let p = v(0);
            (p - 4.0 + ((p - 4.0) * (p - 4.0) - 4.0).sqrt()) / 2.0
        }
        "pp3" => {
            let p = v(0);
            (p - 8.0 + ((p - 8.0) * (p - 8.0) - 16.0).sqrt()) / 4.0
        }
        "ppq" => {
            let (p, q) = (v(0), v(1));
            palindromic_quartic_root((p - 4.0) / 2.0, ((p - 4.0) * (q - 4.0) - 4.0) / 2.0)
        }
        "4pq" => {
            let (p, q) = (v(0), v(1));
            let pq = (p - 4.0) * (q - 4.0);
            0.25 * (2.0 * pq - 16.0 + 2.0 * (pq * pq - 16.0 * pq).sqrt()).sqrt()
        }
        "pppp" => {
            let p = v(0);
            (p - 3.0) + ((p - 3.0) * (p - 3.0) - 1.0).sqrt()
        }
        "ppqq" => {
            let (p, q) = (v(0), v(1));
            palindromic_quartic_root(
                (p + q - 8.0) / 2.0,
                2.0 * p * q - 5.0 * p - 5.0 * q + 10.0,
            )
        }
        "3p3p" => {
            let q = v(0);
            (q - 4.0 + ((q - 4.0) * (q - 4.0) - 4.0).sqrt()) / 2.0
        }
        "pqpq" => {
            let s = v(0) + v(1) - 6.0;
            (s + (s * s - 4.0).sqrt()) / 2.0
        }
        "3p4p" => {
            let p = v(0);
            let d = (p * p - 4.0 * p + 1.0).sqrt();
            0.25 * (p - 3.0 + d + (2.0 * p * p - 10.0 * p - 6.0 + 2.0 * (p - 3.0) * d).sqrt())
        }
        "3pqp" => {
            let (p, q) = (v(0), v(1));
            let d = (p * p + 2.0 * p * q - 10.0 * p - 4.0 * q + 16.0).sqrt();
            0.25 * (p - 4.0
                + d
                + (2.0 * p * p + 2.0 * p * q - 18.0 * p - 4.0 * q + 16.0 + d * (2.0 * p - 8.0))
                    .sqrt())
        }
        "pqpr" => {
            let (p, q, r) = (v(0), v(1), v(2));
            palindromic_quartic_root(
                p - 4.0,
                (p * q + p * r + 2.0 * q * r - 4.0 * p - 8.0 * q - 8.0 * r + 20.0) / 2.0,
            )
        }
        "ppppp" => {
            let p = v(0);
            (3.0 * p - 8.0 + (9.0 * p * p - 48.0 * p + 60.0).sqrt()) / 2.0
        }
        // maximum root of z⁴ − (p−4)z² + 1; golden mean at p = 7
        "3333p" => {
            let p = v(0);
            ((p - 2.0).sqrt() + (p - 6.0).sqrt()) / 2.0
        }
        "333pp" => {
            let p = v(0);
            let d = (p * p + 32.0 * p - 80.0).sqrt();
            0.125 * (p - 4.0 + d + (2.0 * (p - 4.0) * (p + 16.0 + d)).sqrt())
        }
        "33p3p" => {
            let p = v(0);
            (p - 2.0 + ((p - 2.0) * (p - 2.0) - 4.0).sqrt()) / 2.0
        }
        "33p3q" => {
            let (p, q) = (v(0), v(1));
            let pq = (p - 2.0) * (q - 2.0);
            0.5 * (2.0 * pq - 4.0 + 2.0 * (pq * pq - 4.0 * pq).sqrt()).sqrt()
        }
        "pppppp" => {
            let p = v(0);
            2.0 * p - 5.0 + 2.0 * (p * p - 5.0 * p + 6.0).sqrt()
        }
        "ppqppq" => {
            let (p, q) = (v(0), v(1));
            palindromic_quartic_root(
                5.0 * p / 2.0 + q - 8.0,
                2.0 * p * q - 7.0 * p - 6.0 * q + 18.0,
            )
        }
        "pqpqpq" => {
            let s = v(0) + v(1);
            s - 5.0 + ((s - 4.0) * (s - 6.0)).sqrt()
        }
        "3p3p3p" => {
            let p = v(0);
            p - 2.0 + ((p - 2.0) * (p - 2.0) - 1.0).sqrt()
        }
        "pp3pp3" => {
            let p = v(0);
            palindromic_quartic_root(5.0 * p / 2.0 - 5.0, -p)
        }
        _ => return None,
    };
    Some(GrowthRate {
        value,
        certified_interval: None,
        source: GrowthSource::ClosedForm,
    })
}

/// Family keys for which [`closed_form`] returns a value.
pub const CLOSED_FORM_FAMILIES: &[&str] = &[
    "ppp", "pp3", "ppq", "4pq", "pppp", "ppqq", "3p3p", "pqpq", "3p4p", "3pqp", "pqpr",
    "ppppp", "3333p", "333pp", "33p3p", "33p3q", "pppppp", "ppqppq", "pqpqpq", "3p3p3p",
    "pp3pp3",
];

// ------------------------------------------------------------------- tables

/// Truncates (toward zero) to `digits` decimals, formatted with exactly that
/// many places. Table comparisons use truncation, not rounding.
pub fn truncate_decimals(x: f64, digits: u32) -> String {
    let scale = 10f64.powi(digits as i32);
    let t = (x * scale).floor() / scale;
    format!("{t:.prec$}", prec = digits as usize)
}

/// One row of the least-growth table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeastGrowthRow {
    /// Family shape, e.g. "[3,p,q,p]".
    pub family: &'static str,
    /// The representative attaining the least growth in the family.
    pub representative: CyclicSequence,
    pub rate: GrowthRate,
    /// Truncated display string (4 decimals; the [p,p,q] row uses 3).
    pub display: String,
    /// True when the rate equals the global minimum (the golden mean).
    pub attains_minimum: bool,
    /// A previously published figure this row is known to correct, if any.
    pub published_differs: Option<&'static str>,
}

/// (family shape, representative word, display decimals, corrected-from)
const LEAST_GROWTH_ROWS: &[(&str, &[u32], u32, Option<&str>)] = &[
    ("[p,p,p]", &[7, 7, 7], 4, None),
    ("[3,p,p]", &[3, 14, 14], 4, None),
    ("[p,p,q]", &[6, 6, 7], 3, None),
    ("[4,p,q]", &[4, 6, 14], 4, None),
    ("[p,q,r]", &[6, 8, 10], 4, None),
    ("[p,p,p,p]", &[5, 5, 5, 5], 4, None),
    ("[p,p,q,q]", &[4, 4, 6, 6], 4, None),
    ("[3,p,3,p]", &[3, 7, 3, 7], 4, None),
    ("[p,q,p,q]", &[4, 5, 4, 5], 4, None),
    ("[3,p,4,p]", &[3, 6, 4, 6], 4, None),
    ("[3,p,q,p]", &[3, 4, 7, 4], 4, None),
    ("[p,q,p,r]", &[4, 5, 4, 6], 4, None),
    ("[p,q,r,s]", &[4, 6, 10, 8], 4, None),
    ("[p,p,p,p,p]", &[4, 4, 4, 4, 4], 4, None),
    ("[3,3,3,3,p]", &[3, 3, 3, 3, 7], 4, Some("1.7553")),
    ("[3,3,3,p,p]", &[3, 3, 3, 6, 6], 4, Some("3.0217")),
    ("[3,3,p,3,p]", &[3, 3, 5, 3, 5], 4, None),
    ("[3,3,p,3,q]", &[3, 3, 4, 3, 5], 4, None),
    ("[p,p,q,r,q]", &[4, 4, 6, 5, 6], 4, None),
    ("[3,p,q,q,p]", &[3, 4, 6, 6, 4], 4, None),
    ("[p,q,r,s,t]", &[4, 6, 10, 12, 8], 4, None),
    ("[p,p,p,p,p,p]", &[4, 4, 4, 4, 4, 4], 4, None),
    ("[p,p,q,p,p,q]", &[4, 4, 5, 4, 4, 5], 4, None),
    ("[p,q,p,q,p,q]", &[4, 5, 4, 5, 4, 5], 4, None),
    ("[p,q,q,p,r,r]", &[6, 4, 4, 6, 8, 8], 4, None),
    ("[p,q,p,r,q,r]", &[4, 5, 4, 6, 5, 6], 4, None),
    ("[p,q,r,p,q,r]", &[4, 6, 8, 4, 6, 8], 4, None),
    ("[p,q,p,r,s,r]", &[4, 5, 4, 6, 7, 6], 4, None),
    ("[p,q,r,p,s,t]", &[4, 6, 8, 4, 10, 12], 4, Some("18.1174")),
    ("[p,q,r,s,t,u]", &[4, 6, 10, 14, 12, 8], 4, None),
    ("[3,p,p,3,p,p]", &[3, 4, 4, 3, 4, 4], 4, None),
    ("[3,p,3,p,3,p]", &[3, 4, 3, 4, 3, 4], 4, None),
    ("[3,3,3,p,q,p]", &[3, 3, 3, 4, 5, 4], 4, None),
    ("[3,p,q,3,q,p]", &[3, 4, 6, 3, 6, 4], 4, None),
    ("[3,p,3,q,3,r]", &[3, 4, 3, 5, 3, 6], 4, None),
    ("[3,p,q,r,q,p]", &[3, 4, 6, 5, 6, 4], 4, None),
];

/// Builds the least-growth table: for every catalog family, its least-growth
/// representative and growth rate.
pub fn least_growth_table() -> Vec<LeastGrowthRow> {
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    LEAST_GROWTH_ROWS
        .iter()
        .map(|&(family, word, digits, published)| {
            let representative = CyclicSequence::new(word).expect("table rows are valid");
            let rate = growth_rate(&representative, None).expect("table rows are hyperbolic");
            let display = truncate_decimals(rate.value, digits);
            LeastGrowthRow {
                family,
                representative,
                attains_minimum: (rate.value - phi).abs() < 1e-9,
                display,
                rate,
                published_differs: published,
            }
        })
        .collect()
}

/// One row of a minimal-representatives table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinimalFamilyRow {
    pub representative: CyclicSequence,
    pub rate: GrowthRate,
    /// 4-decimal truncated display.
    pub display: String,
}

fn minimal_family_table(key: &str) -> Vec<MinimalFamilyRow> {
    let mut reps = minimal_representatives(key).unwrap_or_default();
    reps.sort();
    reps.into_iter()
        .map(|representative| {
            let rate = growth_rate(&representative, None).expect("minima are hyperbolic");
            MinimalFamilyRow {
                display: truncate_decimals(rate.value, 4),
                representative,
                rate,
            }
        })
        .collect()
}

/// Growth rates of all 12 poset-minimal representatives of [p,q,r,s,t].
pub fn pqrst_minimal_table() -> Vec<MinimalFamilyRow> {
    minimal_family_table("pqrst")
}

/// Growth rates of all 60 poset-minimal representatives of [p,q,r,s,t,u].
pub fn pqrstu_minimal_table() -> Vec<MinimalFamilyRow> {
    minimal_family_table("pqrstu")
}
