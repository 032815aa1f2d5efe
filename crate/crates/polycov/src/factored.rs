//! Exact group orders as prime-exponent maps.
//!
//! Orders of the groups built here routinely exceed machine integers
//! (the cover of the worked 4-polytope example has order `2^4632 * 3^14 * 5`),
//! so every order is kept factored and only rendered to `u64`/`u128` on demand.

use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A positive integer stored as a map prime -> exponent. The empty map is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u64>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor `n` by trial division. The numbers factored here are transversal
    /// lengths bounded by the permutation domain, so this is never the bottleneck.
    pub fn from_u64(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cannot factor 0".into()));
        }
        let mut m = n;
        let mut factors = BTreeMap::new();
        let mut d = 2u64;
        while d * d <= m {
            while m.is_multiple_of(d) {
                *factors.entry(d).or_insert(0) += 1;
                m /= d;
            }
            d += 1;
        }
        if m > 1 {
            *factors.entry(m).or_insert(0) += 1;
        }
        Ok(Self { factors })
    }

    /// `p^e` for prime `p`. Exponent 0 gives 1.
    pub fn prime_power(p: u64, e: u64) -> Result<Self> {
        let base = Self::from_u64(p)?;
        if base.factors.len() != 1 || *base.factors.values().next().unwrap() != 1 {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let mut factors = BTreeMap::new();
        if e > 0 {
            factors.insert(p, e);
        }
        Ok(Self { factors })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    /// Exact quotient, or None when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            match factors.get_mut(&p) {
                Some(f) if *f > e => *f -= e,
                Some(f) if *f == e => {
                    factors.remove(&p);
                }
                _ => return None,
            }
        }
        Some(Self { factors })
    }

    /// The value as `u128`, or None if it does not fit.
    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p as u128)?;
            }
        }
        Some(acc)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_u128().and_then(|v| u64::try_from(v).ok())
    }

    /// Compare against a plain cap without materializing huge values.
    pub fn cmp_u64(&self, cap: u64) -> Ordering {
        match self.to_u128() {
            Some(v) => v.cmp(&(cap as u128)),
            None => Ordering::Greater,
        }
    }

    pub fn exceeds(&self, cap: u64) -> bool {
        self.cmp_u64(cap) == Ordering::Greater
    }
}

impl fmt::Display for FactoredInteger {
    /// `2^12 * 3^11 * 5`; exponent 1 is written bare; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&p, &e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FactoredInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut factors = BTreeMap::new();
        for part in s.split('*') {
            let part = part.trim();
            let (p, e) = match part.split_once('^') {
                Some((p, e)) => (
                    p.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad prime in {part:?}")))?,
                    e.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?,
                ),
                None => (
                    part.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad factor {part:?}")))?,
                    1,
                ),
            };
            if e == 0 {
                return Err(Error::Parse(format!("zero exponent in {part:?}")));
            }
            let fp = Self::from_u64(p)?;
            if fp.factors.len() != 1 || fp.factors.get(&p) != Some(&1) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            if factors.insert(p, e).is_some() {
                return Err(Error::Parse(format!("repeated prime {p}")));
            }
        }
        Ok(Self { factors })
    }
}

impl Serialize for FactoredInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FactoredInteger {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
