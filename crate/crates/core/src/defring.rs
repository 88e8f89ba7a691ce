//! Universal deformation ring presentations.
//!
//! The presentation of the deformation ring of a non-projective
//! Gorenstein-projective module is `k[[t1,...,tn]] / Jn(m)`, where
//! `Jn(m)` is generated by the entries of the `m`-th power of the
//! structured matrix `Nn`: first row `(0, ..., 0, tn)`, the identity
//! in the lower-left block, and `(t_{n-1}, ..., t1)` down the rest of
//! the last column. The pair `(n, m)` is derived from the core
//! invariants: with `ell_core = mu*g + l'` and `d + 1 = n*g + i`
//! (Euclidean divisions by `g`), the exponent is `mu` when `i <= l'`
//! and `mu - 1` otherwise.
//!
//! Projective modules always have deformation ring `k`. Modules that
//! are not Gorenstein-projective, or algebras violating the hypothesis
//! `s < |P(E_i)|`, are refused with a typed error: no formula is
//! available and none is fabricated.

use crate::algebra::{NakayamaAlgebra, Uniserial};
use crate::error::{Error, Result};
use crate::gorenstein::{is_gorenstein_projective, GorensteinCore};
use crate::position::{core_length, distance_to_boundary};
use crate::poly::SparsePoly;
use serde::{Deserialize, Serialize};
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A square matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<SparsePoly>,
}

/// Entry-count threshold below which multiplication stays sequential;
/// tiny matrices are not worth the scheduling overhead.
#[cfg(feature = "parallel")]
const PAR_DIM_THRESHOLD: usize = 8;

impl PolyMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &SparsePoly {
        &self.entries[row * self.dim + col]
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        let mut entries = vec![SparsePoly::zero(nvars); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = SparsePoly::one(nvars);
        }
        PolyMatrix { dim, entries }
    }

    fn mul_entry(&self, other: &PolyMatrix, row: usize, col: usize) -> Result<SparsePoly> {
        let mut acc = SparsePoly::zero(self.entries[0].nvars());
        for k in 0..self.dim {
            let prod = self.entry(row, k).mul(other.entry(k, col))?;
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        assert_eq!(self.dim, other.dim);
        let dim = self.dim;
        let indices: Vec<(usize, usize)> = (0..dim)
            .flat_map(|r| (0..dim).map(move |c| (r, c)))
            .collect();
        // entries are independent, so they can be computed in any order
        #[cfg(feature = "parallel")]
        let entries = if dim >= PAR_DIM_THRESHOLD {
            indices
                .par_iter()
                .map(|&(r, c)| self.mul_entry(other, r, c))
                .collect::<Result<Vec<_>>>()?
        } else {
            indices
                .iter()
                .map(|&(r, c)| self.mul_entry(other, r, c))
                .collect::<Result<Vec<_>>>()?
        };
        #[cfg(not(feature = "parallel"))]
        let entries = indices
            .iter()
            .map(|&(r, c)| self.mul_entry(other, r, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { dim, entries })
    }

    /// Exact power by repeated squaring.
    pub fn pow(&self, mut exp: usize) -> Result<PolyMatrix> {
        let mut result = PolyMatrix::identity(self.dim, self.entries[0].nvars());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }
}

/// The structured matrix `Nn` over `t1..tn`. Requires `n >= 1`;
/// `N1 = (t1)`.
pub fn matrix_n(n: usize) -> Result<PolyMatrix> {
    if n == 0 {
        return Err(Error::NonPositiveDimension);
    }
    let mut entries = vec![SparsePoly::zero(n); n * n];
    entries[n - 1] = SparsePoly::var(n, n); // first row: (0, ..., 0, tn)
    for row in 1..n {
        entries[row * n + (row - 1)] = SparsePoly::one(n);
        entries[row * n + (n - 1)] = SparsePoly::var(n, n - row);
    }
    Ok(PolyMatrix { dim: n, entries })
}

/// Generators of the ideal `Jn(a)`: the nonzero entries of `(Nn)^a`,
/// deduplicated and canonically sorted. `n = 0` gives the empty list
/// (the zero ideal of `k`); `a = 0` gives the single generator `1`.
pub fn jn_generators(n: usize, a: usize) -> Result<Vec<SparsePoly>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let power = matrix_n(n)?.pow(a)?;
    let mut gens: Vec<SparsePoly> = power
        .entries
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// A universal deformation ring presentation `k[[t1,...,tn]] / Jn(m)`.
///
/// `n = 0` means the ring `k` itself: no variables, no generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefRingPresentation {
    pub n: usize,
    pub m: usize,
    pub generators: Vec<SparsePoly>,
}

impl DefRingPresentation {
    pub fn trivial() -> Self {
        DefRingPresentation {
            n: 0,
            m: 0,
            generators: Vec::new(),
        }
    }
}

impl fmt::Display for DefRingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return write!(f, "k");
        }
        let vars: Vec<String> = (1..=self.n).map(|i| format!("t{i}")).collect();
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "k[[{}]]/({})", vars.join(","), gens.join(", "))
    }
}

/// The universal deformation ring presentation of an indecomposable
/// module.
///
/// Projectives give `k` unconditionally. For a non-projective module,
/// the core must be nonempty (`core = None` is refused), the module
/// must be Gorenstein-projective, and the hypothesis `s < |P(E_i)|`
/// must hold; otherwise the corresponding typed error is returned.
pub fn deformation_ring(
    a: &NakayamaAlgebra,
    core: Option<&GorensteinCore>,
    m: Uniserial,
) -> Result<DefRingPresentation> {
    a.check_module(m)?;
    if a.is_projective(m) {
        return Ok(DefRingPresentation::trivial());
    }
    let core = core.ok_or(Error::EmptyCore)?;
    if !is_gorenstein_projective(a, m) {
        return Err(Error::NotGorensteinProjective { top: m.top, len: m.len });
    }
    core.require_hypothesis(a)?;

    let fil_len = core_length(a, core, m)?;
    let distance = distance_to_boundary(core, fil_len)?;
    let ell_v = distance + 1;
    let g = core.g;
    let (mu, l_prime) = (core.ell_core / g, core.ell_core % g);
    let (n, i) = (ell_v / g, ell_v % g);
    let m_v = if i <= l_prime {
        mu
    } else {
        // i > l' forces mu >= 1: ell_v <= ell_core/2 rules out mu = 0 here
        mu.checked_sub(1)
            .expect("exponent underflow: core invariants violated")
    };
    // never the unit ideal, hence never the zero ring
    debug_assert!(n < 1 || m_v >= 1, "degenerate presentation ({n}, {m_v})");
    debug_assert!(n < 2 || m_v >= 2, "degenerate presentation ({n}, {m_v})");
    Ok(DefRingPresentation {
        n,
        m: m_v,
        generators: jn_generators(n, m_v)?,
    })
}
