//! Gorenstein-projective modules, elementary modules, and the
//! Gorenstein core of a cyclic Nakayama algebra.
//!
//! A non-projective uniserial is Gorenstein-projective exactly when it
//! lies on its own syzygy cycle and every projective cover appearing on
//! that cycle is a minimal projective (one with no proper nonzero
//! projective submodule). Splicing the covers around the cycle then
//! realizes the complete resolution. Projectives are always
//! Gorenstein-projective.
//!
//! The elementary modules are the Gorenstein-projective non-projectives
//! none of whose proper nonzero factor modules is Gorenstein-projective;
//! they are the simple objects of the core. [`GorensteinCore`] packages
//! them together with the derived invariants: the vertex class `X` of
//! their tops, the core Loewy length, and the length hypothesis flag.

use crate::algebra::{NakayamaAlgebra, Uniserial};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// The forward syzygy orbit of a non-projective module.
///
/// `preperiod` holds the modules visited before the orbit either
/// repeats or dies; `cycle` holds the periodic part (empty when the
/// orbit reaches the zero module). Successive members are syzygies of
/// one another, and the syzygy of the last cycle member is the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyOrbit {
    pub preperiod: Vec<Uniserial>,
    pub cycle: Vec<Uniserial>,
}

impl SyzygyOrbit {
    /// True iff the starting module lies on its own cycle.
    pub fn starts_on_cycle(&self) -> bool {
        self.preperiod.is_empty() && !self.cycle.is_empty()
    }
}

/// Iterates the syzygy from a non-projective module until the orbit
/// repeats or reaches zero. Terminates within `sum(c_v)` steps since
/// the visited modules are pairwise distinct indecomposables.
///
/// A projective can only appear as the final visited module (its
/// syzygy is zero), so cycles consist of non-projectives.
pub fn syzygy_orbit(a: &NakayamaAlgebra, m: Uniserial) -> Result<SyzygyOrbit> {
    if a.is_projective(m) {
        return Err(Error::ProjectiveInput);
    }
    let mut visited: Vec<Uniserial> = Vec::new();
    let mut current = m;
    loop {
        if let Some(pos) = visited.iter().position(|&x| x == current) {
            let cycle = visited.split_off(pos);
            return Ok(SyzygyOrbit {
                preperiod: visited,
                cycle,
            });
        }
        visited.push(current);
        match a.syzygy(current) {
            Some(next) => current = next,
            None => {
                return Ok(SyzygyOrbit {
                    preperiod: visited,
                    cycle: Vec::new(),
                })
            }
        }
    }
}

/// Whether the projective `P(S_v)` is minimal, i.e. has no proper
/// nonzero projective submodule.
///
/// The proper submodules of `P(S_v)` are its bottom pieces of length
/// `l < c_v`, with top `(v + c_v - l) mod s`; such a piece is projective
/// iff its length equals the Kupisch entry at its top.
pub fn is_minimal_projective(a: &NakayamaAlgebra, v: usize) -> bool {
    let v = a.vertex(v);
    let c = a.projective_length(v);
    (1..c).all(|l| a.projective_length(v + c - l) != l)
}

/// Whether `m` is Gorenstein-projective.
pub fn is_gorenstein_projective(a: &NakayamaAlgebra, m: Uniserial) -> bool {
    if a.is_projective(m) {
        return true;
    }
    let orbit = syzygy_orbit(a, m).expect("non-projective checked above");
    orbit.starts_on_cycle()
        && orbit
            .cycle
            .iter()
            .all(|&x| is_minimal_projective(a, x.top))
}

/// The elementary Gorenstein-projective modules, sorted by top vertex.
///
/// Since the proper nonzero factors of `M(v, l)` are the `M(v, l')`
/// with `l' < l`, an elementary is the shortest Gorenstein-projective
/// non-projective at its top vertex; tops are therefore pairwise
/// distinct.
pub fn elementaries(a: &NakayamaAlgebra) -> Vec<Uniserial> {
    let mut out = Vec::new();
    for v in 0..a.vertex_count() {
        for l in 1..a.projective_length(v) {
            let m = Uniserial::new(v, l);
            if is_gorenstein_projective(a, m) {
                out.push(m);
                break;
            }
        }
    }
    out
}

/// The Gorenstein core invariants of an algebra with at least one
/// non-projective Gorenstein-projective module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinCore {
    /// Elementary modules `E_1..E_g`, ordered by top vertex.
    pub elementaries: Vec<Uniserial>,
    /// Number of elementaries; also the number of simples of the core
    /// category's self-injective model algebra.
    pub g: usize,
    /// Vertex class `X`: the tops of the elementaries. A module belongs
    /// to the core iff its top, and the top of its syzygy when
    /// non-projective, lie in `X`.
    pub x_set: BTreeSet<usize>,
    /// Loewy length of the core: `sum(|P(E_i)|) / s`.
    pub ell_core: usize,
    /// Whether `s < |P(E_i)|` holds for every elementary. The
    /// deformation ring formula is only available when it does.
    pub hypothesis_ok: bool,
}

/// Assembles the Gorenstein core. Returns `Ok(None)` when no
/// non-projective Gorenstein-projective module exists (the empty core
/// is a first-class result, not an error).
///
/// Violations of the structural identities (`sum |E_i| = s`, pairwise
/// distinct tops, `s` divides `sum |P(E_i)|`) indicate an implementation
/// bug and surface as [`Error::CoreInvariantViolation`].
pub fn build_core(a: &NakayamaAlgebra) -> Result<Option<GorensteinCore>> {
    let elems = elementaries(a);
    if elems.is_empty() {
        return Ok(None);
    }
    let s = a.vertex_count();
    let g = elems.len();
    let x_set: BTreeSet<usize> = elems.iter().map(|e| e.top).collect();
    if x_set.len() != g {
        return Err(Error::CoreInvariantViolation(format!(
            "elementary tops not pairwise distinct: {elems:?}"
        )));
    }
    let length_sum: usize = elems.iter().map(|e| e.len).sum();
    if length_sum != s {
        return Err(Error::CoreInvariantViolation(format!(
            "sum of elementary lengths is {length_sum}, expected s = {s}"
        )));
    }
    let cover_sum: usize = elems
        .iter()
        .map(|e| a.projective_cover(*e).len)
        .sum();
    if !cover_sum.is_multiple_of(s) {
        return Err(Error::CoreInvariantViolation(format!(
            "s = {s} does not divide sum of cover lengths {cover_sum}"
        )));
    }
    let hypothesis_ok = elems
        .iter()
        .all(|e| s < a.projective_cover(*e).len);
    Ok(Some(GorensteinCore {
        elementaries: elems,
        g,
        x_set,
        ell_core: cover_sum / s,
        hypothesis_ok,
    }))
}

impl GorensteinCore {
    /// The elementary with the given top vertex, if any.
    pub fn elementary_at(&self, top: usize) -> Option<Uniserial> {
        self.elementaries.iter().copied().find(|e| e.top == top)
    }

    /// If the hypothesis fails, the offending elementary as an error.
    pub fn require_hypothesis(&self, a: &NakayamaAlgebra) -> Result<()> {
        let s = a.vertex_count();
        for e in &self.elementaries {
            let cover_length = a.projective_cover(*e).len;
            if s >= cover_length {
                return Err(Error::HypothesisViolated {
                    top: e.top,
                    s,
                    cover_length,
                });
            }
        }
        Ok(())
    }
}

/// Core membership test: for projective `m`, `top(m)` must lie in `X`;
/// for non-projective `m`, both `top(m)` and `top(syzygy(m))` must.
pub fn is_in_core(a: &NakayamaAlgebra, core: &GorensteinCore, m: Uniserial) -> bool {
    if !core.x_set.contains(&m.top) {
        return false;
    }
    match a.syzygy(m) {
        None => true,
        Some(w) => core.x_set.contains(&w.top),
    }
}
