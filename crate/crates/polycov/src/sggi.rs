//! String groups generated by involutions, as permutation groups.
//!
//! An sggi of rank `n` is an ordered list of `n` generators over one domain,
//! each an involution (or the identity), where generators more than one step
//! apart commute. Recognition, Schläfli types, the intersection condition,
//! and the generator-wise covering relation all live here.

use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::group::PermGroup;
use crate::perm::Perm;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Why a generator list fails to be an sggi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SggiViolation {
    NotInvolution { index: usize },
    NonCommuting { i: usize, j: usize },
    DomainMismatch { index: usize },
}

impl fmt::Display for SggiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SggiViolation::NotInvolution { index } => {
                write!(f, "generator {index} is not an involution")
            }
            SggiViolation::NonCommuting { i, j } => {
                write!(f, "generators {i} and {j} are more than one apart but do not commute")
            }
            SggiViolation::DomainMismatch { index } => {
                write!(f, "generator {index} acts on a different domain")
            }
        }
    }
}

/// Check the sggi invariants for an ordered generator list.
pub fn check_sggi(degree: usize, gens: &[Perm]) -> std::result::Result<(), SggiViolation> {
    for (i, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(SggiViolation::DomainMismatch { index: i });
        }
        if !g.mul(g).is_identity() {
            return Err(SggiViolation::NotInvolution { index: i });
        }
    }
    for i in 0..gens.len() {
        for j in i + 2..gens.len() {
            let prod = gens[i].mul(&gens[j]);
            if !prod.mul(&prod).is_identity() {
                return Err(SggiViolation::NonCommuting { i, j });
            }
        }
    }
    Ok(())
}

/// Schläfli symbol `{p_1, .., p_{n-1}}`: the periods of consecutive
/// generator products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchlafliType {
    pub periods: Vec<u64>,
}

impl fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.periods.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Outcome of the exhaustive intersection-condition sweep.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    pub passed: bool,
    pub witness: Option<IntersectionWitness>,
    /// Pairs whose check was skipped because the enumeration cap was hit.
    pub capped_pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Order of the actual intersection of the two generator subgroups.
    pub intersection_order: FactoredInteger,
    /// Order of the subgroup generated by the common indices.
    pub expected_order: FactoredInteger,
}

#[derive(Serialize, Deserialize)]
struct SggiJson {
    rank: usize,
    domain: usize,
    generators: Vec<Vec<u32>>,
}

/// An sggi: ordered involutory generators with the string property, plus the
/// permutation group they generate. The group's stabilizer chain is built at
/// construction, so a finished `Sggi` is read-only and cheap to query.
#[derive(Clone, Debug)]
pub struct Sggi {
    degree: usize,
    gens: Vec<Perm>,
    group: PermGroup,
}

impl Sggi {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        check_sggi(degree, &gens).map_err(|v| Error::NotSggi(v.to_string()))?;
        let group = PermGroup::new(degree, gens.clone())?;
        Ok(Self { degree, gens, group })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> FactoredInteger {
        self.group.order()
    }

    /// The sub-sggi on the first `k` generators.
    pub fn prefix(&self, k: usize) -> Result<Sggi> {
        if k == 0 || k > self.rank() {
            return Err(Error::InvalidParameter(format!(
                "prefix length {k} out of 1..={}",
                self.rank()
            )));
        }
        Sggi::new(self.degree, self.gens[..k].to_vec())
    }

    /// Subgroup generated by the generators whose indices are in `mask`.
    fn subset_group(&self, mask: u32) -> Result<PermGroup> {
        let gens: Vec<Perm> = (0..self.rank())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.gens[i].clone())
            .collect();
        PermGroup::new(self.degree, gens)
    }

    pub fn schlafli_type(&self) -> Result<SchlafliType> {
        let mut periods = Vec::new();
        for j in 1..self.rank() {
            periods.push(self.gens[j - 1].mul(&self.gens[j]).order()?);
        }
        Ok(SchlafliType { periods })
    }

    /// Exhaustively check `<g_k : k in I> ∩ <g_k : k in J> = <g_k : k in I∩J>`
    /// over all subset pairs. Pairs with one side contained in the other hold
    /// identically and are skipped; each remaining unordered pair is decided
    /// by enumerating the smaller subgroup and sifting into the larger, which
    /// is exact. The first failing pair (in ascending bitmask order) becomes
    /// the witness.
    pub fn intersection_condition(&self, cap: u64) -> Result<IntersectionReport> {
        let n = self.rank();
        if n > 20 {
            return Err(Error::InvalidParameter(format!(
                "intersection sweep over 4^{n} subset pairs is not sensible"
            )));
        }
        let mut groups: HashMap<u32, PermGroup> = HashMap::new();
        let mut capped_pairs = Vec::new();
        for i_mask in 0u32..1 << n {
            for j_mask in (i_mask + 1)..1 << n {
                let meet = i_mask & j_mask;
                if meet == i_mask || meet == j_mask {
                    continue;
                }
                for m in [i_mask, j_mask, meet] {
                    if let std::collections::hash_map::Entry::Vacant(e) = groups.entry(m) {
                        e.insert(self.subset_group(m)?);
                    }
                }
                let a = &groups[&i_mask];
                let b = &groups[&j_mask];
                let (small, large) = if a.order().to_u128().unwrap_or(u128::MAX)
                    <= b.order().to_u128().unwrap_or(u128::MAX)
                {
                    (a, b)
                } else {
                    (b, a)
                };
                if small.order().exceeds(cap) {
                    capped_pairs.push((mask_to_set(i_mask), mask_to_set(j_mask)));
                    continue;
                }
                let mut count: u64 = 0;
                let mut err = None;
                small.for_each_element(cap, |e| {
                    if err.is_some() {
                        return;
                    }
                    match large.contains(e) {
                        Ok(true) => count += 1,
                        Ok(false) => {}
                        Err(e) => err = Some(e),
                    }
                })?;
                if let Some(e) = err {
                    return Err(e);
                }
                let expected = groups[&meet].order();
                if expected.to_u64() != Some(count) {
                    return Ok(IntersectionReport {
                        passed: false,
                        witness: Some(IntersectionWitness {
                            left: mask_to_set(i_mask),
                            right: mask_to_set(j_mask),
                            intersection_order: FactoredInteger::from_u64(count)?,
                            expected_order: expected,
                        }),
                        capped_pairs,
                    });
                }
            }
        }
        Ok(IntersectionReport {
            passed: capped_pairs.is_empty(),
            witness: None,
            capped_pairs,
        })
    }

    /// SC1 holds by construction; this decides SC2. Errors with `CapExceeded`
    /// when some pair could not be enumerated and no genuine failure was found.
    pub fn is_string_c_group(&self, cap: u64) -> Result<bool> {
        let report = self.intersection_condition(cap)?;
        if report.witness.is_some() {
            return Ok(false);
        }
        if let Some((left, right)) = report.capped_pairs.first() {
            let li: u32 = left.iter().fold(0, |m, &i| m | 1 << i);
            let ri: u32 = right.iter().fold(0, |m, &i| m | 1 << i);
            let a = self.subset_group(li)?;
            let b = self.subset_group(ri)?;
            let order = if a.order().to_u128().unwrap_or(u128::MAX)
                <= b.order().to_u128().unwrap_or(u128::MAX)
            {
                a.order()
            } else {
                b.order()
            };
            return Err(Error::CapExceeded { order });
        }
        Ok(true)
    }

    /// Does the generator-wise map from `self`'s generators to `other`'s
    /// extend to a group epimorphism? Decided exactly by the order of the mix:
    /// the mix is the graph of a well-defined map precisely when its order
    /// equals `|self|`.
    pub fn covers(&self, other: &Sggi) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let mixed = crate::covers::mix(self, other)?;
        Ok(mixed.order() == self.order())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: SggiJson = serde_json::from_str(s)?;
        if j.generators.len() != j.rank {
            return Err(Error::Parse(format!(
                "rank {} but {} generators",
                j.rank,
                j.generators.len()
            )));
        }
        let gens = j
            .generators
            .into_iter()
            .map(Perm::from_images)
            .collect::<Result<Vec<_>>>()?;
        Sggi::new(j.domain, gens)
    }

    pub fn to_json(&self) -> String {
        let j = SggiJson {
            rank: self.rank(),
            domain: self.degree,
            generators: self.gens.iter().map(|g| g.images().to_vec()).collect(),
        };
        serde_json::to_string_pretty(&j).expect("sggi serializes")
    }
}

fn mask_to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}
