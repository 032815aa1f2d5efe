//! Permutations of a fixed finite domain `{0, .., n-1}`.
//!
//! The action convention is fixed project-wide: permutations act on the
//! right, `(x)p = p.apply(x)`, and products compose left to right, so
//! `(x)(a * b) = ((x)a)b`. This matches the right-action notation used
//! for flags throughout.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from a 0-based image array, checking that it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v as usize >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range for domain {n}"
                )));
            }
            if seen[v as usize] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v as usize] = true;
        }
        Ok(Self { images })
    }

    /// Product of disjoint-or-not cycles over a domain of size `degree`;
    /// mostly a convenience for tests and small constructions.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut p = Self::identity(degree);
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w] as usize;
                let to = cyc[(w + 1) % cyc.len()];
                if from >= degree || to as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range for domain {degree}"
                    )));
                }
                p.images[from] = to;
            }
        }
        Self::from_images(p.images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` then `other`: the result maps `x` to `other(self(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DomainMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Same-domain product used on hot paths.
    pub(crate) fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&v| other.images[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Perm { images }
    }

    /// Least `m >= 1` with `p^m = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> Result<u64> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut ord: u128 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = lcm_u128(ord, len).ok_or_else(|| {
                Error::Overflow("element order exceeds u128".into())
            })?;
        }
        u64::try_from(ord).map_err(|_| Error::Overflow("element order exceeds u64".into()))
    }

    pub fn smallest_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i as u32 != v)
            .map(|(i, _)| i as u32)
    }

    /// Cycle notation on the moved points, e.g. `(0 1)(2 4 3)`; `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&x.to_string());
                x = self.images[x] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

fn lcm_u128(a: u128, b: u128) -> Option<u128> {
    (a / gcd_u128(a, b)).checked_mul(b)
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.cycle_string())
    }
}
