//! Finite ranked posets modelling abstract polytopes.
//!
//! A polytope of rank `n` stores faces of ranks `-1..=n` and the cover
//! relations of its Hasse diagram. Structural problems (duplicate ids,
//! dangling references) are rejected at construction; the polytope axioms
//! are checked by [`Polytope::validate`], which reports violations of
//!
//! * **A** — strictly monotone rank function with unique least and greatest
//!   faces,
//! * **B** — the diamond condition: every incident pair two ranks apart has
//!   exactly two faces between, and
//! * **C** — strong flag connectivity: the flag graph of every section is
//!   connected.
//!
//! Posets that pass A and B but fail C (pre-polytopes) are representable and
//! only `validate` tells them apart from genuine polytopes.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::OnceLock;

#[derive(Clone, Debug)]
pub struct Face {
    pub id: String,
    pub rank: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    /// One face index per rank `-1..=n`.
    indices: Vec<u32>,
}

impl Flag {
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Face index at rank `r` (so position `r + 1`).
    pub fn face_at(&self, r: i32) -> u32 {
        self.indices[(r + 1) as usize]
    }

    pub fn ids<'a>(&self, q: &'a Polytope) -> Vec<&'a str> {
        self.indices.iter().map(|&i| q.faces[i as usize].id.as_str()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    A,
    B,
    C,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Witness face ids (e.g. the section ends for a connectivity failure).
    pub faces: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Serialize, Deserialize)]
struct FaceJson {
    id: String,
    rank: i32,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    rank: usize,
    faces: Vec<FaceJson>,
    cover_relations: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub struct Polytope {
    rank: usize,
    /// Sorted by (rank, id); within one rank, index order is id order.
    faces: Vec<Face>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
    /// First face index of each rank, `rank_start[r + 1]`.
    rank_start: Vec<usize>,
    validation: OnceLock<ValidationReport>,
}

impl Polytope {
    pub fn new(
        rank: usize,
        faces: Vec<(String, i32)>,
        covers: Vec<(String, String)>,
    ) -> Result<Self> {
        let n = rank as i32;
        let mut faces: Vec<Face> = faces
            .into_iter()
            .map(|(id, rank)| Face { id, rank })
            .collect();
        for f in &faces {
            if f.rank < -1 || f.rank > n {
                return Err(Error::Structural(format!(
                    "face {:?} has rank {} outside -1..={}",
                    f.id, f.rank, n
                )));
            }
        }
        faces.sort_by(|a, b| (a.rank, &a.id).cmp(&(b.rank, &b.id)));
        let mut index: HashMap<&str, u32> = HashMap::with_capacity(faces.len());
        for (i, f) in faces.iter().enumerate() {
            if index.insert(f.id.as_str(), i as u32).is_some() {
                return Err(Error::Structural(format!("duplicate face id {:?}", f.id)));
            }
        }
        let mut up = vec![Vec::new(); faces.len()];
        let mut down = vec![Vec::new(); faces.len()];
        for (lo, hi) in &covers {
            let &li = index
                .get(lo.as_str())
                .ok_or_else(|| Error::UnknownFace(lo.clone()))?;
            let &hi_i = index
                .get(hi.as_str())
                .ok_or_else(|| Error::UnknownFace(hi.clone()))?;
            if li == hi_i {
                return Err(Error::Structural(format!("face {lo:?} covers itself")));
            }
            up[li as usize].push(hi_i);
            down[hi_i as usize].push(li);
        }
        for l in up.iter_mut().chain(down.iter_mut()) {
            l.sort_unstable();
            let before = l.len();
            l.dedup();
            if l.len() != before {
                return Err(Error::Structural("duplicate cover relation".into()));
            }
        }
        let mut rank_start = vec![faces.len(); rank + 3];
        for (i, f) in faces.iter().enumerate().rev() {
            rank_start[(f.rank + 1) as usize] = i;
        }
        // backfill empty ranks so each slice is well-defined
        for r in (0..rank + 2).rev() {
            if rank_start[r] > rank_start[r + 1] {
                rank_start[r] = rank_start[r + 1];
            }
        }
        Ok(Self {
            rank,
            faces,
            up,
            down,
            rank_start,
            validation: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_index(&self, id: &str) -> Option<u32> {
        self.faces
            .iter()
            .position(|f| f.id == id)
            .map(|i| i as u32)
    }

    /// Indices of the faces of rank `r`, as a contiguous range.
    pub fn faces_of_rank(&self, r: i32) -> std::ops::Range<usize> {
        let lo = self.rank_start[(r + 1) as usize];
        let hi = self.rank_start[(r + 2) as usize];
        lo..hi
    }

    pub fn rank_counts(&self) -> Vec<usize> {
        (-1..=self.rank as i32)
            .map(|r| self.faces_of_rank(r).len())
            .collect()
    }

    pub fn covers_above(&self, i: u32) -> &[u32] {
        &self.up[i as usize]
    }

    pub fn covers_below(&self, i: u32) -> &[u32] {
        &self.down[i as usize]
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PosetJson = serde_json::from_str(s)?;
        Self::new(
            j.rank,
            j.faces.into_iter().map(|f| (f.id, f.rank)).collect(),
            j.cover_relations,
        )
    }

    pub fn to_json(&self) -> String {
        let mut cover_relations = Vec::new();
        for (lo, ups) in self.up.iter().enumerate() {
            for &hi in ups {
                cover_relations.push((
                    self.faces[lo].id.clone(),
                    self.faces[hi as usize].id.clone(),
                ));
            }
        }
        let j = PosetJson {
            rank: self.rank,
            faces: self
                .faces
                .iter()
                .map(|f| FaceJson {
                    id: f.id.clone(),
                    rank: f.rank,
                })
                .collect(),
            cover_relations,
        };
        serde_json::to_string_pretty(&j).expect("poset serializes")
    }

    /// Check axioms A, B and C; the result is computed once and cached.
    pub fn validate(&self) -> &ValidationReport {
        self.validation.get_or_init(|| self.run_validation())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.passed {
            Ok(())
        } else {
            let first = &report.violations[0];
            Err(Error::NotPolytopal(format!(
                "axiom {:?}: {}",
                first.axiom, first.detail
            )))
        }
    }

    fn run_validation(&self) -> ValidationReport {
        let mut violations = Vec::new();
        self.check_axiom_a(&mut violations);
        if violations.is_empty() {
            self.check_axiom_b(&mut violations);
        }
        if violations.is_empty() {
            self.check_axiom_c(&mut violations);
        }
        ValidationReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    fn check_axiom_a(&self, violations: &mut Vec<Violation>) {
        let n = self.rank as i32;
        for (r, label) in [(-1, "least"), (n, "greatest")] {
            let count = self.faces_of_rank(r).len();
            if count != 1 {
                violations.push(Violation {
                    axiom: Axiom::A,
                    faces: self.faces_of_rank(r).map(|i| self.faces[i].id.clone()).collect(),
                    detail: format!("{count} faces of rank {r}; need a unique {label} face"),
                });
            }
        }
        for r in -1..=n {
            if self.faces_of_rank(r).is_empty() {
                violations.push(Violation {
                    axiom: Axiom::A,
                    faces: vec![],
                    detail: format!("no faces of rank {r}"),
                });
            }
        }
        for (lo, ups) in self.up.iter().enumerate() {
            for &hi in ups {
                let (rl, rh) = (self.faces[lo].rank, self.faces[hi as usize].rank);
                if rh != rl + 1 {
                    violations.push(Violation {
                        axiom: Axiom::A,
                        faces: vec![
                            self.faces[lo].id.clone(),
                            self.faces[hi as usize].id.clone(),
                        ],
                        detail: format!("cover spans ranks {rl} -> {rh}"),
                    });
                }
            }
        }
        if !violations.is_empty() {
            return;
        }
        // the declared extremes must really be least and greatest: every face
        // reaches the top going up and the bottom going down
        for name in ["greatest", "least"] {
            let target = if name == "greatest" {
                self.faces_of_rank(n).start
            } else {
                self.faces_of_rank(-1).start
            };
            let mut reach = vec![false; self.faces.len()];
            reach[target] = true;
            let mut stack = vec![target as u32];
            let back = if name == "greatest" { &self.down } else { &self.up };
            while let Some(x) = stack.pop() {
                for &y in &back[x as usize] {
                    if !reach[y as usize] {
                        reach[y as usize] = true;
                        stack.push(y);
                    }
                }
            }
            for (i, ok) in reach.iter().enumerate() {
                if !ok {
                    violations.push(Violation {
                        axiom: Axiom::A,
                        faces: vec![self.faces[i].id.clone()],
                        detail: format!("face does not lie under/over the {name} face"),
                    });
                }
            }
        }
    }

    fn check_axiom_b(&self, violations: &mut Vec<Violation>) {
        let mut counts: HashMap<(u32, u32), u32> = HashMap::new();
        for h in 0..self.faces.len() {
            for &lo in &self.down[h] {
                for &hi in &self.up[h] {
                    *counts.entry((lo, hi)).or_insert(0) += 1;
                }
            }
        }
        let mut bad: Vec<_> = counts.into_iter().filter(|&(_, c)| c != 2).collect();
        bad.sort_unstable_by_key(|&((lo, hi), _)| (lo, hi));
        for ((lo, hi), c) in bad {
            violations.push(Violation {
                axiom: Axiom::B,
                faces: vec![
                    self.faces[lo as usize].id.clone(),
                    self.faces[hi as usize].id.clone(),
                ],
                detail: format!("{c} faces between, need exactly 2"),
            });
        }
    }

    fn check_axiom_c(&self, violations: &mut Vec<Violation>) {
        // every section of rank >= 2 must have a connected flag graph;
        // lower-rank sections are connected whenever A and B hold
        for g in 0..self.faces.len() as u32 {
            let rg = self.faces[g as usize].rank;
            if rg < 2 {
                continue;
            }
            let downset = self.downset(g);
            for f in 0..self.faces.len() as u32 {
                if !downset[f as usize] {
                    continue;
                }
                let rf = self.faces[f as usize].rank;
                if rg - rf < 3 {
                    continue;
                }
                let components = self.section_flag_components(f, g, &downset);
                if components.len() > 1 {
                    violations.push(Violation {
                        axiom: Axiom::C,
                        faces: vec![
                            self.faces[f as usize].id.clone(),
                            self.faces[g as usize].id.clone(),
                        ],
                        detail: format!(
                            "section flag graph is disconnected: {} components of sizes {:?}",
                            components.len(),
                            components
                        ),
                    });
                }
            }
        }
    }

    fn downset(&self, g: u32) -> Vec<bool> {
        let mut seen = vec![false; self.faces.len()];
        seen[g as usize] = true;
        let mut stack = vec![g];
        while let Some(x) = stack.pop() {
            for &y in &self.down[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// All maximal chains from `f` to `g` staying inside `downset(g)`.
    fn section_chains(&self, f: u32, g: u32, downset: &[bool]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut chain = vec![f];
        self.section_chains_rec(g, downset, &mut chain, &mut out);
        out
    }

    fn section_chains_rec(
        &self,
        g: u32,
        downset: &[bool],
        chain: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let cur = *chain.last().unwrap();
        if cur == g {
            out.push(chain.clone());
            return;
        }
        for &next in &self.up[cur as usize] {
            if downset[next as usize] {
                chain.push(next);
                self.section_chains_rec(g, downset, chain, out);
                chain.pop();
            }
        }
    }

    fn other_middle(&self, lo: u32, hi: u32, not: u32) -> Option<u32> {
        let mut found = None;
        for &m in &self.up[lo as usize] {
            if m != not && self.up[m as usize].binary_search(&hi).is_ok() {
                if found.is_some() {
                    return None; // more than two middles: diamond is broken
                }
                found = Some(m);
            }
        }
        found
    }

    /// Connected-component sizes of the section's flag graph, largest first.
    fn section_flag_components(&self, f: u32, g: u32, downset: &[bool]) -> Vec<usize> {
        let chains = self.section_chains(f, g, downset);
        if chains.len() <= 1 {
            return vec![chains.len()];
        }
        let index: HashMap<&[u32], usize> =
            chains.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        let mut seen = vec![false; chains.len()];
        let len = chains[0].len();
        let mut sizes = Vec::new();
        for start in 0..chains.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut size = 1usize;
            while let Some(ci) = stack.pop() {
                for lv in 1..len - 1 {
                    let chain = &chains[ci];
                    let other = match self.other_middle(chain[lv - 1], chain[lv + 1], chain[lv]) {
                        Some(o) => o,
                        None => continue,
                    };
                    let mut adj = chain.clone();
                    adj[lv] = other;
                    if let Some(&k) = index.get(adj.as_slice()) {
                        if !seen[k] {
                            seen[k] = true;
                            size += 1;
                            stack.push(k);
                        }
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// All flags in lexicographic order (by face id, rank by rank).
    pub fn flags(&self) -> Result<Vec<Flag>> {
        self.require_valid()?;
        Ok(self.maximal_chains())
    }

    /// Maximal chains from the least face, without the validity gate;
    /// validation itself and pre-polytope inspection use this directly.
    pub(crate) fn maximal_chains(&self) -> Vec<Flag> {
        let bot = self.faces_of_rank(-1).start as u32;
        let mut out = Vec::new();
        let mut chain = vec![bot];
        self.chains_rec(&mut chain, &mut out);
        out
    }

    fn chains_rec(&self, chain: &mut Vec<u32>, out: &mut Vec<Flag>) {
        let cur = *chain.last().unwrap();
        if self.faces[cur as usize].rank == self.rank as i32 {
            if chain.len() == self.rank + 2 {
                out.push(Flag { indices: chain.clone() });
            }
            return;
        }
        for &next in &self.up[cur as usize] {
            chain.push(next);
            self.chains_rec(chain, out);
            chain.pop();
        }
    }

    /// The unique flag differing from `f` exactly at rank `j`.
    pub fn adjacent_flag(&self, f: &Flag, j: usize) -> Result<Flag> {
        if j >= self.rank {
            return Err(Error::InvalidParameter(format!(
                "adjacency rank {j} out of range 0..{}",
                self.rank
            )));
        }
        self.require_valid()?;
        let lo = f.indices[j];
        let me = f.indices[j + 1];
        let hi = f.indices[j + 2];
        let other = self
            .other_middle(lo, hi, me)
            .ok_or_else(|| Error::Internal("diamond failed on validated polytope".into()))?;
        let mut indices = f.indices.clone();
        indices[j + 1] = other;
        Ok(Flag { indices })
    }

    /// The section `g/f`: the induced poset on the faces between `f` and `g`,
    /// reranked to start at -1.
    pub fn section(&self, f_id: &str, g_id: &str) -> Result<Polytope> {
        let f = self
            .face_index(f_id)
            .ok_or_else(|| Error::UnknownFace(f_id.to_string()))?;
        let g = self
            .face_index(g_id)
            .ok_or_else(|| Error::UnknownFace(g_id.to_string()))?;
        let downset = self.downset(g);
        let upset = self.upset(f);
        if !downset[f as usize] {
            return Err(Error::Incomparable(f_id.to_string(), g_id.to_string()));
        }
        let rf = self.faces[f as usize].rank;
        let rg = self.faces[g as usize].rank;
        let new_rank = (rg - rf - 1).max(0) as usize;
        let keep: Vec<u32> = (0..self.faces.len() as u32)
            .filter(|&i| downset[i as usize] && upset[i as usize])
            .collect();
        let faces = keep
            .iter()
            .map(|&i| {
                let f = &self.faces[i as usize];
                (f.id.clone(), f.rank - rf - 1)
            })
            .collect();
        let in_keep: Vec<bool> = {
            let mut v = vec![false; self.faces.len()];
            for &i in &keep {
                v[i as usize] = true;
            }
            v
        };
        let mut covers = Vec::new();
        for &i in &keep {
            for &j in &self.up[i as usize] {
                if in_keep[j as usize] {
                    covers.push((
                        self.faces[i as usize].id.clone(),
                        self.faces[j as usize].id.clone(),
                    ));
                }
            }
        }
        Polytope::new(new_rank, faces, covers)
    }

    fn upset(&self, f: u32) -> Vec<bool> {
        let mut seen = vec![false; self.faces.len()];
        seen[f as usize] = true;
        let mut stack = vec![f];
        while let Some(x) = stack.pop() {
            for &y in &self.up[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Reverse the partial order: ranks map `r -> n - 1 - r`, covers flip.
    pub fn dual(&self) -> Result<Polytope> {
        self.require_valid()?;
        let n = self.rank as i32;
        let faces = self
            .faces
            .iter()
            .map(|f| (f.id.clone(), n - 1 - f.rank))
            .collect();
        let mut covers = Vec::new();
        for (lo, ups) in self.up.iter().enumerate() {
            for &hi in ups {
                covers.push((
                    self.faces[hi as usize].id.clone(),
                    self.faces[lo].id.clone(),
                ));
            }
        }
        Polytope::new(self.rank, faces, covers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A hand-built square: 4 vertices, 4 edges.
    fn square() -> Polytope {
        let mut faces = vec![("bot".into(), -1), ("top".into(), 2)];
        let mut covers: Vec<(String, String)> = Vec::new();
        for i in 0..4u32 {
            faces.push((format!("v{i}"), 0));
            faces.push((format!("e{i}"), 1));
            covers.push(("bot".into(), format!("v{i}")));
            covers.push((format!("e{i}"), "top".into()));
            covers.push((format!("v{i}"), format!("e{i}")));
            covers.push((format!("v{}", (i + 1) % 4), format!("e{i}")));
        }
        Polytope::new(2, faces, covers).unwrap()
    }

    #[test]
    fn square_is_a_polytope() {
        let q = square();
        assert!(q.validate().passed);
        assert_eq!(q.rank_counts(), vec![1, 4, 4, 1]);
        assert_eq!(q.flags().unwrap().len(), 8);
    }

    #[test]
    fn deleting_an_incidence_breaks_the_diamond() {
        let mut faces = vec![("bot".into(), -1), ("top".into(), 2)];
        let mut covers: Vec<(String, String)> = Vec::new();
        for i in 0..4u32 {
            faces.push((format!("v{i}"), 0));
            faces.push((format!("e{i}"), 1));
            covers.push(("bot".into(), format!("v{i}")));
            covers.push((format!("e{i}"), "top".into()));
            covers.push((format!("v{i}"), format!("e{i}")));
            if !(i == 0) {
                covers.push((format!("v{}", (i + 1) % 4), format!("e{i}")));
            }
        }
        let q = Polytope::new(2, faces, covers).unwrap();
        let report = q.validate();
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::B));
    }

    #[test]
    fn structural_errors_are_not_axiom_violations() {
        let err = Polytope::new(
            1,
            vec![("a".into(), 0), ("a".into(), 1)],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let err = Polytope::new(1, vec![("a".into(), 0)], vec![("a".into(), "b".into())])
            .unwrap_err();
        assert!(matches!(err, Error::UnknownFace(_)));
    }

    #[test]
    fn missing_extremes_fail_axiom_a() {
        let q = Polytope::new(
            1,
            vec![("v0".into(), 0), ("v1".into(), 0), ("e".into(), 1)],
            vec![("v0".into(), "e".into()), ("v1".into(), "e".into())],
        )
        .unwrap();
        let report = q.validate();
        assert!(!report.passed);
        assert!(report.violations.iter().all(|v| v.axiom == Axiom::A));
    }

    #[test]
    fn flag_adjacency_is_an_involution() {
        let q = square();
        for f in q.flags().unwrap() {
            for j in 0..2 {
                let g = q.adjacent_flag(&f, j).unwrap();
                assert_ne!(g, f);
                assert_eq!(q.adjacent_flag(&g, j).unwrap(), f);
            }
        }
    }

    #[test]
    fn adjacent_flag_swaps_edge_endpoint() {
        let q = square();
        let flags = q.flags().unwrap();
        let base = &flags[0];
        let adj = q.adjacent_flag(base, 0).unwrap();
        // same edge, other endpoint
        assert_eq!(base.face_at(1), adj.face_at(1));
        assert_ne!(base.face_at(0), adj.face_at(0));
    }

    #[test]
    fn whole_section_is_the_polytope_itself() {
        let q = square();
        let s = q.section("bot", "top").unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.rank_counts(), q.rank_counts());
        assert!(s.validate().passed);
    }

    #[test]
    fn incomparable_faces_are_rejected() {
        let q = square();
        assert!(matches!(
            q.section("v0", "v1"),
            Err(Error::Incomparable(_, _))
        ));
    }

    #[test]
    fn dual_of_square_is_a_square() {
        let q = square();
        let d = q.dual().unwrap();
        assert!(d.validate().passed);
        assert_eq!(d.rank_counts(), vec![1, 4, 4, 1]);
        let dd = d.dual().unwrap();
        assert_eq!(dd.rank_counts(), q.rank_counts());
        assert_eq!(dd.flags().unwrap().len(), q.flags().unwrap().len());
    }

    #[test]
    fn json_round_trip() {
        let q = square();
        let s = q.to_json();
        let q2 = Polytope::from_json(&s).unwrap();
        assert_eq!(q2.rank_counts(), q.rank_counts());
        assert_eq!(q2.to_json(), s);
    }

    // a single point is a perfectly good rank-0 polytope
    #[test]
    fn rank_zero_point() {
        let q = Polytope::new(
            0,
            vec![("bot".into(), -1), ("pt".into(), 0)],
            vec![("bot".into(), "pt".into())],
        )
        .unwrap();
        assert!(q.validate().passed);
        assert_eq!(q.flags().unwrap().len(), 1);
        assert!(crate::monodromy::monodromy(&q).is_err());
    }
}
