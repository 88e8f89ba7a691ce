//! Exact sparse multivariate polynomials with integer coefficients in
//! variables `t1..tn`.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector under graded
//! lexicographic order (total degree first, then the standard
//! lexicographic comparison with `t1 > t2 > ...`), so the representation
//! is canonical: no zero coefficients are stored and iteration order is
//! fixed. Arithmetic is checked; exceeding the `i64` range surfaces as
//! [`Error::Overflow`] instead of wrapping.
//!
//! Polynomials order among themselves by comparing term sequences from
//! the leading (largest) monomial downward; the generator lists produced
//! elsewhere in the crate are sorted ascending in that order.

use crate::error::{Error, Result};
use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// An exponent vector of fixed width (one entry per variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u64>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A sparse polynomial over the integers in `nvars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(Monomial::constant(nvars), c);
        }
        p
    }

    /// The variable `t_i`, 1-indexed.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(exps), 1);
        p
    }

    /// Builds a polynomial from raw terms; duplicates are accumulated
    /// and zero coefficients dropped.
    pub fn from_terms(nvars: usize, terms: &[(&[u64], i64)]) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector width mismatch");
            p.add_term(Monomial(exps.to_vec()), *c)?;
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Minimum total degree over the terms (`None` for zero).
    pub fn min_total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    /// Maximum total degree over the terms (`None` for zero).
    pub fn max_total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.checked_add(c).ok_or(Error::Overflow)?;
                if *existing == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = SparsePoly::zero(self.nvars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.add_term(ma.checked_mul(mb)?, c)?;
            }
        }
        Ok(out)
    }
}

impl Ord for SparsePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        // compare from the leading monomial downward
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let ord = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for SparsePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, &c)) in self.terms.iter().rev().enumerate() {
            let constant = m.total_degree() == 0;
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let abs = c.unsigned_abs();
            if constant {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

// Wire form: an ascending list of [exponent-vector, coefficient] pairs.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&(&m.0, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(Vec<u64>, i64)> = Vec::deserialize(deserializer)?;
        let nvars = raw.first().map_or(0, |(e, _)| e.len());
        let mut p = SparsePoly::zero(nvars);
        for (exps, c) in raw {
            if exps.len() != nvars {
                return Err(serde::de::Error::custom("inconsistent exponent vector width"));
            }
            p.add_term(Monomial(exps), c)
                .map_err(|_| serde::de::Error::custom("coefficient overflow"))?;
        }
        Ok(p)
    }
}
