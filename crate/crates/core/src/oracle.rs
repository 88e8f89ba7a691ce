//! Brute-force cross-checks and the survey harness.
//!
//! [`verify_algebra`] runs every structural identity the rest of the
//! crate relies on, exhaustively over the indecomposables of one
//! algebra, reporting failures as data rather than panicking.
//! [`survey`] enumerates all admissible Kupisch series up to given
//! bounds (deduplicated up to cyclic rotation, which presents the same
//! algebra) and aggregates the verifications.
//!
//! Verifications of distinct algebras are independent, so the survey
//! runs them through rayon when the `parallel` feature is enabled;
//! [`survey_sequential`] is the fallback and always produces the
//! identical report.

use crate::algebra::{NakayamaAlgebra, Uniserial};
use crate::defring::deformation_ring;
use crate::error::Error;
use crate::gorenstein::{build_core, is_gorenstein_projective, GorensteinCore};
use crate::position::{core_strips, distance_to_boundary, stable_tube};
use serde::Serialize;
use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// One failed invariant, with the witness that broke it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub invariant: &'static str,
    pub witness: String,
}

/// Outcome of verifying a single algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraVerification {
    pub kupisch: Vec<usize>,
    pub failures: Vec<CheckFailure>,
    pub empty_core: bool,
    pub g: usize,
    pub ell_core: Option<usize>,
    pub hypothesis_ok: bool,
    /// `(module, n, m)` for every non-projective Gorenstein-projective
    /// module, when the hypothesis holds.
    pub presentations: Vec<(Uniserial, usize, usize)>,
}

fn gp_non_projectives(a: &NakayamaAlgebra) -> Vec<Uniserial> {
    a.indecomposables()
        .into_iter()
        .filter(|&m| !a.is_projective(m) && is_gorenstein_projective(a, m))
        .collect()
}

/// Runs every invariant check over one algebra.
pub fn verify_algebra(a: &NakayamaAlgebra) -> AlgebraVerification {
    let mut failures: Vec<CheckFailure> = Vec::new();
    let push = |failures: &mut Vec<CheckFailure>, invariant: &'static str, witness: String| {
        failures.push(CheckFailure { invariant, witness });
    };

    let core: Option<GorensteinCore> = match build_core(a) {
        Ok(c) => c,
        Err(e) => {
            push(&mut failures, "core_invariants", e.to_string());
            None
        }
    };

    let gp_set = gp_non_projectives(a);
    let s = a.vertex_count();

    // orbit criterion vs core membership (tops of module and syzygy in X)
    for &m in &a.indecomposables() {
        if a.is_projective(m) {
            continue;
        }
        let orbit_gp = gp_set.contains(&m);
        let membership = core.as_ref().is_some_and(|c| {
            let w = a.syzygy(m).expect("non-projective");
            c.x_set.contains(&m.top) && c.x_set.contains(&w.top)
        });
        if orbit_gp != membership {
            push(
                &mut failures,
                "gp_equiv_core_membership",
                format!("{m}: orbit {orbit_gp}, membership {membership}"),
            );
        }
    }

    // elementary length sum and cover-length divisibility
    if let Some(c) = &core {
        let length_sum: usize = c.elementaries.iter().map(|e| e.len).sum();
        if length_sum != s {
            push(&mut failures, "elementary_length_sum", format!("{length_sum} != {s}"));
        }
        let cover_sum: usize = c.elementaries.iter().map(|e| a.projective_cover(*e).len).sum();
        if !cover_sum.is_multiple_of(s) {
            push(&mut failures, "cover_sum_divisibility", format!("{s} does not divide {cover_sum}"));
        }
        for e in &c.elementaries {
            if a.is_projective(*e) {
                push(&mut failures, "elementary_non_projective", e.to_string());
            }
        }
    } else if !gp_set.is_empty() {
        push(&mut failures, "empty_core_consistency", format!("{} GP modules but empty core", gp_set.len()));
    }

    // closure of the Gorenstein-projective non-projectives under syzygy
    for &m in &gp_set {
        let w = a.syzygy(m).expect("non-projective");
        if a.is_projective(w) || !gp_set.contains(&w) {
            push(&mut failures, "gp_syzygy_closure", format!("{m} -> {w}"));
        }
    }

    // filtration soundness over the core, and rejection off the core
    if let Some(c) = &core {
        for m in a.indecomposables() {
            let member = crate::gorenstein::is_in_core(a, c, m);
            match core_strips(a, c, m) {
                Ok(strips) if member => {
                    let factors: Vec<usize> =
                        strips.iter().flat_map(|e| a.composition_factors(*e)).collect();
                    if factors != a.composition_factors(m) {
                        push(&mut failures, "filtration_reconstruction", m.to_string());
                    }
                    let full = strips.len() == c.ell_core;
                    if full != a.is_projective(m) {
                        push(
                            &mut failures,
                            "core_length_projectivity",
                            format!("{m}: core length {}", strips.len()),
                        );
                    }
                }
                Ok(_) => push(&mut failures, "core_length_rejects_non_members", m.to_string()),
                Err(_) if member => push(&mut failures, "core_length_accepts_members", m.to_string()),
                Err(_) => {}
            }
        }
    }

    // tube BFS distance equals the closed form
    if let Some(c) = &core {
        match stable_tube(c) {
            Ok(tube) => {
                for (q, row) in tube.vertices() {
                    let bfs = tube.bfs_distance_to_boundary(q, row);
                    let closed = distance_to_boundary(c, row).expect("row in stable range");
                    if bfs != closed {
                        push(&mut failures, "tube_bfs_distance", format!("({q},{row}): bfs {bfs}, closed {closed}"));
                    }
                }
            }
            Err(e) => push(&mut failures, "tube_construction", e.to_string()),
        }
    }

    // deformation rings: syzygy invariance, degeneracy exclusion, or
    // consistent refusal when the hypothesis fails
    let hypothesis_ok = core.as_ref().is_some_and(|c| c.hypothesis_ok);
    let mut presentations = Vec::new();
    for &m in &gp_set {
        let res = deformation_ring(a, core.as_ref(), m);
        if hypothesis_ok {
            match res {
                Ok(pres) => {
                    if pres.n >= 1 && pres.m < 1 || pres.n >= 2 && pres.m < 2 {
                        push(&mut failures, "presentation_degeneracy", format!("{m}: ({}, {})", pres.n, pres.m));
                    }
                    let w = a.syzygy(m).expect("non-projective");
                    match deformation_ring(a, core.as_ref(), w) {
                        Ok(pres_w) if pres_w == pres => {}
                        other => push(
                            &mut failures,
                            "udr_syzygy_invariance",
                            format!("{m}: {:?} vs {:?}", pres, other),
                        ),
                    }
                    presentations.push((m, pres.n, pres.m));
                }
                Err(e) => push(&mut failures, "udr_computable", format!("{m}: {e}")),
            }
        } else {
            match res {
                Err(Error::HypothesisViolated { .. }) => {}
                other => push(
                    &mut failures,
                    "hypothesis_refusal",
                    format!("{m}: expected refusal, got {other:?}"),
                ),
            }
        }
    }

    // self-injective specialization
    if a.is_constant_series() {
        let loewy = a.projective_length(0);
        match &core {
            Some(c) => {
                let simples: Vec<Uniserial> = (0..s).map(|v| Uniserial::new(v, 1)).collect();
                if c.g != s || c.elementaries != simples {
                    push(&mut failures, "constant_series_elementaries", format!("g = {}", c.g));
                }
                if c.ell_core != loewy {
                    push(&mut failures, "constant_series_loewy", format!("{} != {loewy}", c.ell_core));
                }
                for m in a.indecomposables() {
                    if !is_gorenstein_projective(a, m) {
                        push(&mut failures, "constant_series_all_gp", m.to_string());
                    }
                    match core_strips(a, c, m) {
                        Ok(strips) if strips.len() == m.len => {}
                        other => push(
                            &mut failures,
                            "constant_series_core_length",
                            format!("{m}: {other:?}"),
                        ),
                    }
                }
            }
            None => push(&mut failures, "constant_series_elementaries", "empty core".into()),
        }
    }

    AlgebraVerification {
        kupisch: a.kupisch().to_vec(),
        failures,
        empty_core: core.is_none(),
        g: core.as_ref().map_or(0, |c| c.g),
        ell_core: core.as_ref().map(|c| c.ell_core),
        hypothesis_ok,
        presentations,
    }
}

/// All admissible Kupisch series with `s <= max_s` and entries in
/// `2..=max_c`, one representative per cyclic-rotation class (the
/// lexicographically minimal rotation), in deterministic order.
pub fn enumerate_kupisch(max_s: usize, max_c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    for s in 1..=max_s {
        extend_series(&mut out, &mut buf, s, max_c);
    }
    out
}

fn extend_series(out: &mut Vec<Vec<usize>>, buf: &mut Vec<usize>, s: usize, max_c: usize) {
    if buf.len() == s {
        if buf[0] + 1 >= buf[s - 1] && is_minimal_rotation(buf) {
            out.push(buf.clone());
        }
        return;
    }
    let lo = buf.last().map_or(2, |&c| c.saturating_sub(1).max(2));
    // remaining steps can drop by at most 1 each, so prune anything that
    // cannot wrap back to within one of the first entry
    let hi = if buf.is_empty() {
        max_c
    } else {
        max_c.min(buf[0] + s - buf.len())
    };
    for c in lo..=hi {
        buf.push(c);
        extend_series(out, buf, s, max_c);
        buf.pop();
    }
}

fn is_minimal_rotation(series: &[usize]) -> bool {
    let s = series.len();
    (1..s).all(|k| {
        let rotation = series[k..].iter().chain(&series[..k]);
        series.iter().le(rotation)
    })
}

/// One CSV row: a Gorenstein-projective module and its presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub kupisch: Vec<usize>,
    pub g: usize,
    pub ell_core: usize,
    pub module: Uniserial,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyFailure {
    pub kupisch: Vec<usize>,
    pub invariant: &'static str,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationCount {
    pub n: usize,
    pub m: usize,
    pub count: usize,
}

/// Aggregated survey outcome. `rows` backs the CSV export and is not
/// part of the JSON rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub algebras_checked: usize,
    pub empty_core_count: usize,
    pub hypothesis_violation_count: usize,
    pub failures: Vec<SurveyFailure>,
    /// Distribution of `(n, m)` over all computed presentations.
    pub presentation_counts: Vec<PresentationCount>,
    /// Distribution of `g` over algebras with nonempty core.
    pub g_counts: Vec<PresentationGCount>,
    #[serde(skip)]
    pub rows: Vec<SurveyRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationGCount {
    pub g: usize,
    pub count: usize,
}

fn aggregate(verifications: Vec<AlgebraVerification>) -> SurveyReport {
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let mut empty_core_count = 0;
    let mut hypothesis_violation_count = 0;
    let mut nm_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut g_counts: BTreeMap<usize, usize> = BTreeMap::new();
    let algebras_checked = verifications.len();

    for v in verifications {
        if v.empty_core {
            empty_core_count += 1;
        } else {
            *g_counts.entry(v.g).or_default() += 1;
            if !v.hypothesis_ok {
                hypothesis_violation_count += 1;
            }
        }
        for f in v.failures {
            failures.push(SurveyFailure {
                kupisch: v.kupisch.clone(),
                invariant: f.invariant,
                witness: f.witness,
            });
        }
        if let Some(ell_core) = v.ell_core {
            for (module, n, m) in v.presentations {
                *nm_counts.entry((n, m)).or_default() += 1;
                rows.push(SurveyRow {
                    kupisch: v.kupisch.clone(),
                    g: v.g,
                    ell_core,
                    module,
                    n,
                    m,
                });
            }
        }
    }

    failures.sort_by(|a, b| (&a.kupisch, a.invariant, &a.witness).cmp(&(&b.kupisch, b.invariant, &b.witness)));
    rows.sort_by(|a, b| (&a.kupisch, a.module).cmp(&(&b.kupisch, b.module)));

    SurveyReport {
        algebras_checked,
        empty_core_count,
        hypothesis_violation_count,
        failures,
        presentation_counts: nm_counts
            .into_iter()
            .map(|((n, m), count)| PresentationCount { n, m, count })
            .collect(),
        g_counts: g_counts
            .into_iter()
            .map(|(g, count)| PresentationGCount { g, count })
            .collect(),
        rows,
    }
}

fn verify_series(series: &[usize]) -> AlgebraVerification {
    let a = NakayamaAlgebra::from_kupisch(series).expect("enumeration emits admissible series");
    verify_algebra(&a)
}

/// Verifies every admissible algebra within the bounds. Uses rayon
/// when built with the `parallel` feature (the default); the report is
/// identical either way.
pub fn survey(max_s: usize, max_c: usize) -> SurveyReport {
    #[cfg(feature = "parallel")]
    {
        let list = enumerate_kupisch(max_s, max_c);
        let verifications: Vec<AlgebraVerification> =
            list.par_iter().map(|series| verify_series(series)).collect();
        aggregate(verifications)
    }
    #[cfg(not(feature = "parallel"))]
    {
        survey_sequential(max_s, max_c)
    }
}

/// Single-threaded survey; the fallback implementation behind
/// [`survey`] and the baseline for the benchmark suite.
pub fn survey_sequential(max_s: usize, max_c: usize) -> SurveyReport {
    let list = enumerate_kupisch(max_s, max_c);
    let verifications: Vec<AlgebraVerification> =
        list.iter().map(|series| verify_series(series)).collect();
    aggregate(verifications)
}

impl SurveyReport {
    /// CSV export of the per-module presentation rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kupisch,g,ell_core,module,n,m\n");
        for row in &self.rows {
            let kupisch = row
                .kupisch
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!(
                "\"{}\",{},{},\"{},{}\",{},{}\n",
                kupisch, row.g, row.ell_core, row.module.top, row.module.len, row.n, row.m
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_small() {
        assert_eq!(
            enumerate_kupisch(1, 4),
            vec![vec![2], vec![3], vec![4]]
        );
        let two = enumerate_kupisch(2, 5);
        assert!(two.contains(&vec![4, 5]));
        assert!(!two.contains(&vec![5, 4]));
        // s = 1: (2)..(5); s = 2: pairs |a-b| <= 1 up to rotation
        let expected_pairs = [
            vec![2, 2], vec![2, 3], vec![3, 3], vec![3, 4],
            vec![4, 4], vec![4, 5], vec![5, 5],
        ];
        assert_eq!(two.len(), 4 + expected_pairs.len());
        for p in expected_pairs {
            assert!(two.contains(&p), "{p:?}");
        }
    }

    #[test]
    fn enumeration_is_admissible_and_canonical() {
        for series in enumerate_kupisch(4, 6) {
            NakayamaAlgebra::from_kupisch(&series).unwrap();
            assert!(is_minimal_rotation(&series), "{series:?}");
        }
    }

    #[test]
    fn verify_golden_algebras() {
        let a = NakayamaAlgebra::from_kupisch(&[4, 5]).unwrap();
        let v = verify_algebra(&a);
        assert!(v.failures.is_empty(), "{:?}", v.failures);
        assert_eq!(v.presentations.len(), 1);
        assert_eq!(v.presentations[0], (Uniserial::new(0, 2), 1, 2));

        let b = NakayamaAlgebra::from_kupisch(&[3]).unwrap();
        let v = verify_algebra(&b);
        assert!(v.failures.is_empty(), "{:?}", v.failures);
        assert_eq!(v.presentations.len(), 2);

        let c = NakayamaAlgebra::from_kupisch(&[2, 2, 2]).unwrap();
        let v = verify_algebra(&c);
        assert!(v.failures.is_empty(), "{:?}", v.failures);
        assert_eq!(v.g, 3);
        assert!(!v.hypothesis_ok);
    }

    type RotationSummary = (usize, Option<usize>, bool, Vec<(usize, usize)>);

    #[test]
    fn rotation_soundness() {
        let base = [3, 4, 4, 3];
        let s = base.len();
        let mut reference: Option<RotationSummary> = None;
        for k in 0..s {
            let rotated: Vec<usize> = (0..s).map(|i| base[(i + k) % s]).collect();
            let a = NakayamaAlgebra::from_kupisch(&rotated).unwrap();
            let v = verify_algebra(&a);
            assert!(v.failures.is_empty(), "{rotated:?}: {:?}", v.failures);
            let mut nm: Vec<(usize, usize)> =
                v.presentations.iter().map(|&(_, n, m)| (n, m)).collect();
            nm.sort();
            let summary = (v.g, v.ell_core, v.empty_core, nm);
            match &reference {
                None => reference = Some(summary),
                Some(r) => assert_eq!(r, &summary, "rotation {rotated:?}"),
            }
        }
    }

    #[test]
    fn small_survey_clean() {
        let report = survey(2, 5);
        assert_eq!(report.algebras_checked, 11);
        assert!(report.failures.is_empty(), "{:?}", report.failures);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let a = survey(3, 6);
        let b = survey_sequential(3, 6);
        assert_eq!(a, b);
    }

    #[test]
    fn csv_shape() {
        let report = survey(2, 5);
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("kupisch,g,ell_core,module,n,m"));
        assert!(csv.contains("\"4,5\",1,2,\"0,2\",1,2"));
    }
}
