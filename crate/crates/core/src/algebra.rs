//! Cyclic Nakayama algebras presented by Kupisch series, and exact
//! arithmetic on their uniserial modules.
//!
//! The algebra is the path algebra of the cyclic quiver on vertices
//! `0..s` with arrows `v -> v+1 (mod s)`, modulo an admissible ideal.
//! It is determined by the Kupisch series `(c_0, ..., c_{s-1})`, where
//! `c_v` is the length of the indecomposable projective with top at
//! vertex `v`. With this orientation the radical layers of that
//! projective are the simples at `v, v+1, ..., v+c_v-1` (mod s).
//!
//! Every indecomposable module is uniserial and is written `M(v, l)`:
//! top at vertex `v`, length `l` with `1 <= l <= c_v`. Vertices are
//! 0-indexed and all vertex arithmetic is mod `s`.
//!
//! All values here are immutable after construction and every operation
//! is a pure function, so everything is safe to share across threads.

use crate::error::{Error, Result};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An indecomposable module `M(v, l)` over a cyclic Nakayama algebra:
/// top vertex `v`, length `l`.
///
/// This is plain data; whether it is valid over a particular algebra
/// (`1 <= len <= c_top`) is checked by [`NakayamaAlgebra::module`] or
/// [`NakayamaAlgebra::check_module`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Uniserial {
    pub top: usize,
    pub len: usize,
}

impl Uniserial {
    pub fn new(top: usize, len: usize) -> Self {
        Uniserial { top, len }
    }
}

impl fmt::Display for Uniserial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

// Modules are accepted in two interchangeable JSON forms:
// the string "v,l" and the object {"top": v, "len": l}.
impl<'de> Deserialize<'de> for Uniserial {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: Deserializer<'de>,
    {
        struct UniserialVisitor;

        impl<'de> Visitor<'de> for UniserialVisitor {
            type Value = Uniserial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a \"top,len\" string or a {\"top\", \"len\"} object")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Uniserial, E> {
                let (top, len) = s
                    .split_once(',')
                    .ok_or_else(|| E::custom(format!("expected \"top,len\", got \"{s}\"")))?;
                let top = top.trim().parse().map_err(E::custom)?;
                let len = len.trim().parse().map_err(E::custom)?;
                Ok(Uniserial { top, len })
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Uniserial, A::Error> {
                let mut top = None;
                let mut len = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "top" => top = Some(map.next_value()?),
                        "len" => len = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["top", "len"])),
                    }
                }
                Ok(Uniserial {
                    top: top.ok_or_else(|| de::Error::missing_field("top"))?,
                    len: len.ok_or_else(|| de::Error::missing_field("len"))?,
                })
            }
        }

        deserializer.deserialize_any(UniserialVisitor)
    }
}

/// A basic connected cyclic Nakayama algebra without simple projective
/// modules, encoded by its Kupisch series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NakayamaAlgebra {
    kupisch: Vec<usize>,
}

/// Input form for algebra files: `{"kupisch": [c0, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KupischInput {
    pub kupisch: Vec<usize>,
}

impl NakayamaAlgebra {
    /// Validates a Kupisch series and constructs the algebra.
    ///
    /// Accepted series satisfy `c_v >= 2` for all `v` (no simple
    /// projectives) and `c_{v+1} >= c_v - 1` cyclically (admissibility).
    pub fn from_kupisch(series: &[usize]) -> Result<Self> {
        if series.is_empty() {
            return Err(Error::EmptySeries);
        }
        for (v, &c) in series.iter().enumerate() {
            if c < 2 {
                return Err(Error::SimpleProjectivePresent { vertex: v, length: c });
            }
        }
        let s = series.len();
        for v in 0..s {
            let next = (v + 1) % s;
            if series[next] + 1 < series[v] {
                return Err(Error::NotAdmissible {
                    vertex: v,
                    next_vertex: next,
                    next_length: series[next],
                    required: series[v] - 1,
                });
            }
        }
        Ok(NakayamaAlgebra {
            kupisch: series.to_vec(),
        })
    }

    /// Number of vertices (= number of simple modules).
    pub fn vertex_count(&self) -> usize {
        self.kupisch.len()
    }

    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    /// `c_v`, the length of the projective with top `v`. `v` is reduced mod `s`.
    pub fn projective_length(&self, v: usize) -> usize {
        self.kupisch[v % self.kupisch.len()]
    }

    /// Reduces an arbitrary vertex index mod `s`.
    pub fn vertex(&self, v: usize) -> usize {
        v % self.kupisch.len()
    }

    /// True iff all Kupisch entries are equal, i.e. the algebra is
    /// self-injective.
    pub fn is_constant_series(&self) -> bool {
        self.kupisch.iter().all(|&c| c == self.kupisch[0])
    }

    /// Constructs `M(top, len)`, reducing `top` mod `s` and checking
    /// `1 <= len <= c_top`.
    pub fn module(&self, top: usize, len: usize) -> Result<Uniserial> {
        let top = self.vertex(top);
        let max = self.projective_length(top);
        if len == 0 || len > max {
            return Err(Error::LengthOutOfRange { vertex: top, len, max });
        }
        Ok(Uniserial { top, len })
    }

    /// Checks that `m` is a valid module over this algebra.
    pub fn check_module(&self, m: Uniserial) -> Result<()> {
        if m.top >= self.vertex_count() {
            return Err(Error::LengthOutOfRange {
                vertex: m.top,
                len: m.len,
                max: 0,
            });
        }
        self.module(m.top, m.len).map(|_| ())
    }

    /// Composition factors of `m` from top to socle:
    /// `(v, v+1, ..., v+len-1)` reduced mod `s`.
    pub fn composition_factors(&self, m: Uniserial) -> Vec<usize> {
        (0..m.len).map(|i| self.vertex(m.top + i)).collect()
    }

    /// Vertex of the socle of `m`: `(top + len - 1) mod s`.
    pub fn socle_vertex(&self, m: Uniserial) -> usize {
        self.vertex(m.top + m.len - 1)
    }

    pub fn is_projective(&self, m: Uniserial) -> bool {
        m.len == self.projective_length(m.top)
    }

    /// The projective cover `P(m) = M(top, c_top)`; same top as `m`.
    pub fn projective_cover(&self, m: Uniserial) -> Uniserial {
        Uniserial {
            top: m.top,
            len: self.projective_length(m.top),
        }
    }

    /// First syzygy: the kernel of the projective cover `P(m) -> m`.
    ///
    /// `None` encodes the zero module (projective input). Otherwise
    /// the kernel is `M((top+len) mod s, c_top - len)`, so that
    /// `|syzygy| + |m| = |P(m)|`.
    pub fn syzygy(&self, m: Uniserial) -> Option<Uniserial> {
        let c = self.projective_length(m.top);
        if m.len == c {
            None
        } else {
            Some(Uniserial {
                top: self.vertex(m.top + m.len),
                len: c - m.len,
            })
        }
    }

    /// The factor module of `m` of length `l`: `M(top, l)`.
    pub fn quotient(&self, m: Uniserial, l: usize) -> Result<Uniserial> {
        if l == 0 || l > m.len {
            return Err(Error::LengthOutOfRange {
                vertex: m.top,
                len: l,
                max: m.len,
            });
        }
        Ok(Uniserial { top: m.top, len: l })
    }

    /// The submodule of `m` of length `l`: `M((top + len - l) mod s, l)`.
    ///
    /// `submodule(m, len - l)` is the kernel of `m -> quotient(m, l)`.
    pub fn submodule(&self, m: Uniserial, l: usize) -> Result<Uniserial> {
        if l == 0 || l > m.len {
            return Err(Error::LengthOutOfRange {
                vertex: m.top,
                len: l,
                max: m.len,
            });
        }
        Ok(Uniserial {
            top: self.vertex(m.top + m.len - l),
            len: l,
        })
    }

    /// All indecomposables `M(v, l)` with `0 <= v < s`, `1 <= l <= c_v`,
    /// in (top, len) order. There are exactly `sum(c_v)` of them.
    pub fn indecomposables(&self) -> Vec<Uniserial> {
        let mut out = Vec::with_capacity(self.kupisch.iter().sum());
        for (v, &c) in self.kupisch.iter().enumerate() {
            for l in 1..=c {
                out.push(Uniserial { top: v, len: l });
            }
        }
        out
    }
}
