//! Position of a core object: its length as an object of the core
//! (number of elementary filtration factors) and its distance to the
//! boundary of the stable Auslander-Reiten quiver of the core.
//!
//! The core is equivalent to the module category of a self-injective
//! Nakayama algebra with `g` simples and Loewy length `ell_core`; its
//! stable Auslander-Reiten quiver is a finite cylinder with `g` columns
//! and rows indexed by core length `1..=ell_core-1`. The boundary rows
//! are `1` and `ell_core - 1`, giving the closed form
//! `d = min(m - 1, ell_core - 1 - m)`. [`StableTube`] realizes the
//! cylinder explicitly so BFS can confirm the closed form.

use crate::algebra::{NakayamaAlgebra, Uniserial};
use crate::error::{Error, Result};
use crate::gorenstein::GorensteinCore;
use serde::Serialize;
use std::collections::VecDeque;

/// Position data for a non-projective core object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorePosition {
    /// Core length `m`: number of elementary filtration factors.
    #[serde(rename = "m")]
    pub core_length: usize,
    /// Distance `d` to the closest boundary row of the stable tube.
    #[serde(rename = "d")]
    pub distance: usize,
    /// `d + 1`, the quantity entering the deformation ring formula.
    pub ell_v: usize,
}

/// The elementary filtration of a core object, as the top-down sequence
/// of stripped elementary factors.
///
/// Each step locates the unique elementary whose top matches the top of
/// the remaining module and strips it off as the top factor. Fails with
/// [`Error::NotInCore`] if no elementary matches or the remainder is too
/// short, which doubles as an independent core-membership rejection.
pub fn core_strips(
    a: &NakayamaAlgebra,
    core: &GorensteinCore,
    m: Uniserial,
) -> Result<Vec<Uniserial>> {
    let mut strips = Vec::new();
    let mut rest = Some(m);
    while let Some(u) = rest {
        let e = core
            .elementary_at(u.top)
            .filter(|e| e.len <= u.len)
            .ok_or(Error::NotInCore { top: m.top, len: m.len })?;
        strips.push(e);
        rest = if e.len == u.len {
            None
        } else {
            Some(a.submodule(u, u.len - e.len)?)
        };
    }
    debug_assert_eq!(
        strips
            .iter()
            .flat_map(|e| a.composition_factors(*e))
            .collect::<Vec<_>>(),
        a.composition_factors(m),
        "strips must reconstruct the composition factors"
    );
    Ok(strips)
}

/// Core length `m` of a core object.
pub fn core_length(a: &NakayamaAlgebra, core: &GorensteinCore, m: Uniserial) -> Result<usize> {
    core_strips(a, core, m).map(|s| s.len())
}

/// Closed-form distance of the core-length-`m` row to the closest
/// boundary of the stable tube: `min(m - 1, ell_core - 1 - m)`.
///
/// Projective core objects (`m = ell_core`) have no stable position.
pub fn distance_to_boundary(core: &GorensteinCore, m: usize) -> Result<usize> {
    if m == core.ell_core {
        return Err(Error::ProjectiveInCore);
    }
    if m < 1 || m >= core.ell_core {
        return Err(Error::LengthOutOfRange {
            vertex: 0,
            len: m,
            max: core.ell_core - 1,
        });
    }
    Ok((m - 1).min(core.ell_core - 1 - m))
}

/// Full position report for a non-projective core object.
pub fn position(a: &NakayamaAlgebra, core: &GorensteinCore, m: Uniserial) -> Result<CorePosition> {
    let core_length = core_length(a, core, m)?;
    let distance = distance_to_boundary(core, core_length)?;
    Ok(CorePosition {
        core_length,
        distance,
        ell_v: distance + 1,
    })
}

/// The stable Auslander-Reiten quiver of the core, realized as a
/// cylinder: vertices `(q, m)` with `q` in `Z/g` and `1 <= m <= rows`
/// where `rows = ell_core - 1`, and mesh arrows one row up within a
/// column and one row down into the next column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableTube {
    pub g: usize,
    pub rows: usize,
}

/// Builds the stable tube of a nonempty core. The tube is empty iff
/// `ell_core = 1`, which the core invariants rule out; the guard stays
/// anyway.
pub fn stable_tube(core: &GorensteinCore) -> Result<StableTube> {
    if core.ell_core < 2 {
        return Err(Error::DegenerateTube);
    }
    Ok(StableTube {
        g: core.g,
        rows: core.ell_core - 1,
    })
}

impl StableTube {
    pub fn vertex_count(&self) -> usize {
        self.g * self.rows
    }

    pub fn vertices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.g).flat_map(move |q| (1..=self.rows).map(move |m| (q, m)))
    }

    /// Mesh successors of `(q, m)`.
    pub fn neighbors(&self, q: usize, m: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2);
        if m < self.rows {
            out.push((q, m + 1));
        }
        if m >= 2 {
            out.push(((q + 1) % self.g, m - 1));
        }
        out
    }

    /// BFS distance from `(q, m)` to the boundary row set `{1, rows}`.
    pub fn bfs_distance_to_boundary(&self, q: usize, m: usize) -> usize {
        let idx = |q: usize, m: usize| q * self.rows + (m - 1);
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[idx(q, m)] = 0;
        queue.push_back((q, m));
        while let Some((cq, cm)) = queue.pop_front() {
            let d = dist[idx(cq, cm)];
            if cm == 1 || cm == self.rows {
                return d;
            }
            for (nq, nm) in self.neighbors(cq, cm) {
                if dist[idx(nq, nm)] == usize::MAX {
                    dist[idx(nq, nm)] = d + 1;
                    queue.push_back((nq, nm));
                }
            }
        }
        unreachable!("every tube column meets the boundary rows")
    }
}
