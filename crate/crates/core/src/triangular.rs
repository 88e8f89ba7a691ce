//! Gorenstein-projectivity certification for modules over triangular
//! matrix algebras `Sigma = [[Lambda, B], [0, Gamma]]`, and the
//! reduction of their deformation rings to the Lambda side.
//!
//! A Sigma-module is a triple `(V, W, f)` with `f: B (x) W -> V`. With
//! `B` projective as a left Lambda-module and `Gamma` of finite global
//! dimension, such a module is Gorenstein-projective exactly when `f`
//! is injective, `W` is projective over Gamma, and `coker f` is
//! Gorenstein-projective over Lambda; and then the deformation ring of
//! the triple equals that of `V` alone.
//!
//! Gamma is never materialized: the certificate carries only what the
//! reduction consumes. `Gamma` is a set of projective labels plus two
//! asserted flags (finite global dimension, Sigma Gorenstein), the
//! bimodule is the decomposition of each `B (x) Q(label)` into
//! indecomposable Lambda-projectives, `W` is a multiset of labels, and
//! `f` is implicit: injective with the declared cokernel. Since
//! submodules of a uniserial are unique per length, the data pins `f`
//! up to isomorphism, and two multiset checks make the certificate
//! falsifiable.

use crate::algebra::{NakayamaAlgebra, Uniserial};
use crate::defring::{deformation_ring, DefRingPresentation};
use crate::error::{Error, Result};
use crate::gorenstein::{build_core, is_gorenstein_projective};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// What the reduction needs to know about Gamma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDescriptor {
    /// Labels of the indecomposable projective left Gamma-modules.
    pub labels: Vec<String>,
    /// Asserted: Gamma has finite global dimension (so Gorenstein-
    /// projective Gamma-modules are projective).
    pub gldim_finite: bool,
    /// Asserted: Sigma is Gorenstein.
    pub sigma_gorenstein: bool,
}

/// Decomposition of `B (x) Q(label)` into indecomposable
/// Lambda-projectives `P(v)`, one vertex multiset per label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BimoduleDescriptor {
    pub summands: BTreeMap<String, Vec<usize>>,
}

/// A claimed Gorenstein-projective Sigma-module `(V, W, f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularModule {
    /// Lambda components of `V`, as uniserials.
    #[serde(rename = "V")]
    pub v: Vec<Uniserial>,
    /// Multiset of Gamma-projective labels making up `W`.
    #[serde(rename = "W")]
    pub w: Vec<String>,
    /// Declared `coker f`, as Lambda uniserials.
    pub coker: Vec<Uniserial>,
}

/// On-disk certificate format for the `triangular` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangularSpec {
    pub lambda_kupisch: Vec<usize>,
    pub gamma: GammaDescriptor,
    pub bimodule: BimoduleDescriptor,
    pub module: TriangularModule,
}

impl TriangularSpec {
    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::InvalidSpec(e.to_string()))
    }
}

/// Expands `B (x) W` into a sorted multiset of Lambda-projective top
/// vertices, additively over the labels of `W`.
pub fn tensor_bw(bimod: &BimoduleDescriptor, w: &[String]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for label in w {
        let vertices = bimod
            .summands
            .get(label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        out.extend_from_slice(vertices);
    }
    out.sort_unstable();
    Ok(out)
}

/// Outcome of a successful certificate validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZhangVerdict {
    /// The certified fact: the triple is Gorenstein-projective.
    pub gorenstein_projective: bool,
    /// Derived along the way: `V` itself is Gorenstein-projective over
    /// Lambda (it must be, since `B (x) W` is projective).
    pub v_gorenstein_projective: bool,
}

/// Validates a Gorenstein-projectivity certificate.
///
/// Checks, in order: every `W` label is known; the length accounting
/// `|V| = |B (x) W| + |coker f|`; some assignment of the projective
/// summands of `B (x) W` to distinct `V` components embeds each summand
/// (top vertices must agree on the unique submodule of the right
/// length) and leaves exactly the declared cokernel; and every cokernel
/// component is Gorenstein-projective over Lambda.
pub fn zhang_gp_check(
    a: &NakayamaAlgebra,
    gamma: &GammaDescriptor,
    bimod: &BimoduleDescriptor,
    module: &TriangularModule,
) -> Result<ZhangVerdict> {
    if !gamma.gldim_finite {
        return Err(Error::PreconditionUnmet(
            "Gamma must have finite global dimension".into(),
        ));
    }
    for (label, vertices) in &bimod.summands {
        for &v in vertices {
            if v >= a.vertex_count() {
                return Err(Error::InvalidSpec(format!(
                    "bimodule summand P({v}) under label \"{label}\" is not a Lambda vertex (s = {})",
                    a.vertex_count()
                )));
            }
        }
    }
    for m in module.v.iter().chain(&module.coker) {
        a.check_module(*m)?;
    }
    let summands = tensor_bw(bimod, &module.w)?;

    let v_total: usize = module.v.iter().map(|m| m.len).sum();
    let bw_total: usize = summands.iter().map(|&v| a.projective_length(v)).sum();
    let coker_total: usize = module.coker.iter().map(|m| m.len).sum();
    if v_total != bw_total + coker_total {
        return Err(Error::LengthMismatch {
            v_total,
            bw_total,
            coker_total,
        });
    }

    if !assignment_exists(a, &summands, &module.v, &module.coker) {
        return Err(Error::EmbeddingMismatch(format!(
            "summands {summands:?} cannot embed into V with cokernel {:?}",
            module.coker
        )));
    }

    for c in &module.coker {
        if !is_gorenstein_projective(a, *c) {
            return Err(Error::CokerNotGorenstein { top: c.top, len: c.len });
        }
    }

    let v_gorenstein_projective = module
        .v
        .iter()
        .all(|m| is_gorenstein_projective(a, *m));
    Ok(ZhangVerdict {
        gorenstein_projective: true,
        v_gorenstein_projective,
    })
}

/// Whether `P(v)` embeds into the uniserial `target` as its (unique)
/// submodule of length `c_v`: the submodule's top must be `v`.
fn embeds(a: &NakayamaAlgebra, v: usize, target: Uniserial) -> bool {
    let c = a.projective_length(v);
    c <= target.len && a.vertex(target.top + target.len - c) == a.vertex(v)
}

/// A projective summand can only land inside a single uniserial
/// component (uniserials have simple socle, so submodules pairwise
/// intersect), and each component receives at most one summand.
/// Searches for an injective assignment whose leftover quotients match
/// the declared cokernel as a multiset.
fn assignment_exists(
    a: &NakayamaAlgebra,
    summands: &[usize],
    components: &[Uniserial],
    declared_coker: &[Uniserial],
) -> bool {
    let mut declared: Vec<Uniserial> = declared_coker.to_vec();
    declared.sort();
    let mut assigned = vec![None; components.len()];
    search(a, summands, components, &mut assigned, 0, &declared)
}

fn search(
    a: &NakayamaAlgebra,
    summands: &[usize],
    components: &[Uniserial],
    assigned: &mut Vec<Option<usize>>,
    next: usize,
    declared: &[Uniserial],
) -> bool {
    if next == summands.len() {
        let mut induced: Vec<Uniserial> = Vec::new();
        for (idx, comp) in components.iter().enumerate() {
            match assigned[idx] {
                Some(v) => {
                    let used = a.projective_length(v);
                    if comp.len > used {
                        induced.push(Uniserial::new(comp.top, comp.len - used));
                    }
                }
                None => induced.push(*comp),
            }
        }
        induced.sort();
        return induced == declared;
    }
    let v = summands[next];
    for idx in 0..components.len() {
        if assigned[idx].is_none() && embeds(a, v, components[idx]) {
            assigned[idx] = Some(v);
            if search(a, summands, components, assigned, next + 1, declared) {
                assigned[idx] = None;
                return true;
            }
            assigned[idx] = None;
        }
    }
    false
}

/// Reduces the deformation ring of a certified Gorenstein-projective
/// Sigma-module to the Lambda side: the result is the presentation of
/// `V` over Lambda. Requires both Gamma flags and a single
/// indecomposable `V`.
pub fn reduce_udr(
    a: &NakayamaAlgebra,
    gamma: &GammaDescriptor,
    bimod: &BimoduleDescriptor,
    module: &TriangularModule,
) -> Result<DefRingPresentation> {
    zhang_gp_check(a, gamma, bimod, module)?;
    if !gamma.sigma_gorenstein {
        return Err(Error::NotGorensteinSigma);
    }
    if module.v.len() != 1 {
        return Err(Error::DecomposableV(module.v.len()));
    }
    let core = build_core(a)?;
    deformation_ring(a, core.as_ref(), module.v[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda_x3() -> NakayamaAlgebra {
        NakayamaAlgebra::from_kupisch(&[3]).unwrap()
    }

    fn gamma() -> GammaDescriptor {
        GammaDescriptor {
            labels: vec!["e1Gamma".into(), "e2Gamma".into()],
            gldim_finite: true,
            sigma_gorenstein: true,
        }
    }

    fn bimod() -> BimoduleDescriptor {
        // B is Lambda (+) Lambda as a left Lambda-module, carried by
        // the e2Gamma label
        BimoduleDescriptor {
            summands: BTreeMap::from([
                ("e1Gamma".to_string(), vec![]),
                ("e2Gamma".to_string(), vec![0, 0]),
            ]),
        }
    }

    fn triple(v: &[(usize, usize)], w: &[&str], coker: &[(usize, usize)]) -> TriangularModule {
        TriangularModule {
            v: v.iter().map(|&(t, l)| Uniserial::new(t, l)).collect(),
            w: w.iter().map(|s| s.to_string()).collect(),
            coker: coker.iter().map(|&(t, l)| Uniserial::new(t, l)).collect(),
        }
    }

    #[test]
    fn tensor_examples() {
        let b = bimod();
        assert!(tensor_bw(&b, &[]).unwrap().is_empty());
        assert_eq!(tensor_bw(&b, &["e2Gamma".into()]).unwrap(), vec![0, 0]);
        // additivity over repeated labels
        let double = tensor_bw(&b, &["e2Gamma".into(), "e2Gamma".into()]).unwrap();
        assert_eq!(double, vec![0, 0, 0, 0]);
        assert!(matches!(
            tensor_bw(&b, &["bogus".into()]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn paper_modules_certify() {
        let a = lambda_x3();
        // U1: k at the loop vertex; U2: its syzygy
        for len in [1, 2] {
            let m = triple(&[(0, len)], &[], &[(0, len)]);
            let verdict = zhang_gp_check(&a, &gamma(), &bimod(), &m).unwrap();
            assert!(verdict.gorenstein_projective);
            assert!(verdict.v_gorenstein_projective);
        }
    }

    #[test]
    fn reduction_golden() {
        let a = lambda_x3();
        for len in [1, 2] {
            let m = triple(&[(0, len)], &[], &[(0, len)]);
            let pres = reduce_udr(&a, &gamma(), &bimod(), &m).unwrap();
            assert_eq!((pres.n, pres.m), (1, 3));
            assert_eq!(pres.to_string(), "k[[t1]]/(t1^3)");
        }
    }

    #[test]
    fn projective_v_with_full_embedding_gives_k() {
        let a = lambda_x3();
        // f is an isomorphism onto V = P(0) = M(0,3), coker 0
        let m = triple(&[(0, 3)], &["e2Gamma"], &[]);
        // one summand of B (x) e2Gamma embeds; the other needs a second
        // copy of P(0) to land in, so use V = P(0) (+) P(0)
        let m2 = TriangularModule {
            v: vec![Uniserial::new(0, 3), Uniserial::new(0, 3)],
            ..m
        };
        let verdict = zhang_gp_check(&a, &gamma(), &bimod(), &m2).unwrap();
        assert!(verdict.gorenstein_projective);
        // reduction refuses a decomposable V even though the check passes
        assert!(matches!(
            reduce_udr(&a, &gamma(), &bimod(), &m2),
            Err(Error::DecomposableV(2))
        ));
    }

    #[test]
    fn certificate_failures() {
        let a = NakayamaAlgebra::from_kupisch(&[4, 5]).unwrap();
        let g = gamma();
        let b = BimoduleDescriptor {
            summands: BTreeMap::from([("q".to_string(), vec![0])]),
        };

        // M(0,1) over (4,5) is not Gorenstein-projective
        let m = triple(&[(0, 1)], &[], &[(0, 1)]);
        assert!(matches!(
            zhang_gp_check(&a, &g, &b, &m),
            Err(Error::CokerNotGorenstein { top: 0, len: 1 })
        ));

        // lengths that cannot account
        let m = triple(&[(0, 2)], &[], &[(0, 1)]);
        assert!(matches!(
            zhang_gp_check(&a, &g, &b, &m),
            Err(Error::LengthMismatch { .. })
        ));

        // P(0) has length 4 and cannot embed into M(1,5): the length-4
        // submodule of M(1,5) is M(0,4) = P(0)... so use a target whose
        // submodule top differs: P(1) into M(0,4) needs length 5 > 4.
        let m = triple(&[(0, 4)], &["q"], &[]);
        let b_bad = BimoduleDescriptor {
            summands: BTreeMap::from([("q".to_string(), vec![1])]),
        };
        assert!(matches!(
            zhang_gp_check(&a, &g, &b_bad, &m),
            Err(Error::LengthMismatch { .. })
        ));

        // embedding failure with matching lengths: over (4,4), P(1)
        // cannot embed into P(0) even though lengths agree
        let c = NakayamaAlgebra::from_kupisch(&[4, 4]).unwrap();
        let m = triple(&[(0, 4)], &["q"], &[]);
        let b_bad = BimoduleDescriptor {
            summands: BTreeMap::from([("q".to_string(), vec![1])]),
        };
        assert!(matches!(
            zhang_gp_check(&c, &g, &b_bad, &m),
            Err(Error::EmbeddingMismatch(_))
        ));

        // flags gate the theorems
        let mut g_bad = gamma();
        g_bad.gldim_finite = false;
        let m = triple(&[(0, 1)], &[], &[(0, 1)]);
        assert!(matches!(
            zhang_gp_check(&lambda_x3(), &g_bad, &bimod(), &m),
            Err(Error::PreconditionUnmet(_))
        ));
        let mut g_bad = gamma();
        g_bad.sigma_gorenstein = false;
        assert!(matches!(
            reduce_udr(&lambda_x3(), &g_bad, &bimod(), &m),
            Err(Error::NotGorensteinSigma)
        ));

        // bimodule vertices must exist over Lambda
        let b_oob = BimoduleDescriptor {
            summands: BTreeMap::from([("q".to_string(), vec![5])]),
        };
        assert!(matches!(
            zhang_gp_check(&lambda_x3(), &gamma(), &b_oob, &m),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn w_independence() {
        // two certificates with the same indecomposable V reduce to the
        // same presentation regardless of W
        let a = lambda_x3();
        let with_w = TriangularModule {
            v: vec![Uniserial::new(0, 3)],
            w: vec!["e1Gamma".to_string()],
            coker: vec![Uniserial::new(0, 3)],
        };
        // e1Gamma carries no summands, so f = 0 and coker = V
        let without_w = triple(&[(0, 3)], &[], &[(0, 3)]);
        let p1 = reduce_udr(&a, &gamma(), &bimod(), &with_w).unwrap();
        let p2 = reduce_udr(&a, &gamma(), &bimod(), &without_w).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1.to_string(), "k");
    }

    #[test]
    fn spec_json_parses_both_module_forms() {
        let json = r#"{
            "lambda_kupisch": [3],
            "gamma": {"labels": ["e1Gamma", "e2Gamma"], "gldim_finite": true, "sigma_gorenstein": true},
            "bimodule": {"e1Gamma": [], "e2Gamma": [0, 0]},
            "module": {"V": [{"top": 0, "len": 1}], "W": [], "coker": ["0,1"]}
        }"#;
        let spec = TriangularSpec::from_json(json).unwrap();
        assert_eq!(spec.module.v, vec![Uniserial::new(0, 1)]);
        assert_eq!(spec.module.coker, vec![Uniserial::new(0, 1)]);
        let a = NakayamaAlgebra::from_kupisch(&spec.lambda_kupisch).unwrap();
        let pres = reduce_udr(&a, &spec.gamma, &spec.bimodule, &spec.module).unwrap();
        assert_eq!((pres.n, pres.m), (1, 3));
    }
}
