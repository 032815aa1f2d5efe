//! Permutation groups backed by a deterministic stabilizer chain.
//!
//! The chain (base and strong generating set) is built eagerly at
//! construction with the classic Schreier-Sims procedure: verify each level's
//! Schreier generators bottom-up, and whenever one fails to sift through the
//! deeper levels, adjoin the residue as a new strong generator and resume
//! verification at the level it reached. Base points are always the smallest
//! moved point, so chains (and everything derived from them) are reproducible.

use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::perm::Perm;
use std::collections::HashMap;

/// Materialize transversals as full permutations while
/// `orbit_len * degree` stays under this; fall back to Schreier-vector
/// walks above it.
const TRANSVERSAL_BUDGET: usize = 1 << 26;

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DomainMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = StabChain::build(degree, &gens);
        Ok(Self { degree, gens, chain })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Exact order: the product of the transversal lengths, factored.
    pub fn order(&self) -> FactoredInteger {
        let mut o = FactoredInteger::one();
        for lv in &self.chain.levels {
            o = o.mul(
                &FactoredInteger::from_u64(lv.orbit.len() as u64).expect("orbit length"),
            );
        }
        o
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DomainMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain.sift(0, p.clone()).0.is_identity())
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    /// Whether the group moves every point of some single orbit covering the domain.
    pub fn is_transitive(&self) -> bool {
        if self.degree <= 1 {
            return true;
        }
        match self.chain.levels.first() {
            Some(lv) => lv.orbit.len() == self.degree,
            None => false,
        }
    }

    /// All elements in a deterministic order, when the order fits under `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<Perm>> {
        let order = self.order();
        if order.exceeds(cap) {
            return Err(Error::CapExceeded { order });
        }
        let mut out = Vec::with_capacity(order.to_u64().unwrap_or(0) as usize);
        self.for_each_element(cap, |p| out.push(p.clone()))?;
        Ok(out)
    }

    /// Streaming enumeration; same order as `enumerate` without holding all
    /// elements at once.
    pub fn for_each_element<F: FnMut(&Perm)>(&self, cap: u64, mut f: F) -> Result<()> {
        let order = self.order();
        if order.exceeds(cap) {
            return Err(Error::CapExceeded { order });
        }
        let k = self.chain.levels.len();
        if k == 0 {
            f(&Perm::identity(self.degree));
            return Ok(());
        }
        let reps: Vec<Vec<Perm>> = (0..k)
            .map(|i| {
                let lv = &self.chain.levels[i];
                (0..lv.orbit.len()).map(|s| self.chain.rep(i, s)).collect()
            })
            .collect();
        // odometer over transversal slots, deepest level varying slowest
        let mut counters = vec![0usize; k];
        // prefix[i] = reps[k-1][c_{k-1}] * ... * reps[i][c_i]
        let mut prefix: Vec<Perm> = vec![Perm::identity(self.degree); k];
        let recompute = |prefix: &mut Vec<Perm>, counters: &[usize], from: usize| {
            for i in (0..=from).rev() {
                let r = &reps[i][counters[i]];
                prefix[i] = if i + 1 < k { prefix[i + 1].mul(r) } else { r.clone() };
            }
        };
        recompute(&mut prefix, &counters, k - 1);
        loop {
            f(&prefix[0]);
            // increment
            let mut i = 0;
            loop {
                counters[i] += 1;
                if counters[i] < reps[i].len() {
                    break;
                }
                counters[i] = 0;
                i += 1;
                if i == k {
                    return Ok(());
                }
            }
            recompute(&mut prefix, &counters, i);
        }
    }

    /// Exhaustive exact intersection: enumerate the smaller-order factor and
    /// keep the members of the other. The kept elements are the intersection
    /// as a set; redundant generators are dropped as they arrive.
    pub fn subgroup_intersection(&self, other: &PermGroup, cap: u64) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DomainMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let (oa, ob) = (self.order(), other.order());
        let (small, big) = if oa.to_u128().unwrap_or(u128::MAX) <= ob.to_u128().unwrap_or(u128::MAX)
        {
            (self, other)
        } else {
            (other, self)
        };
        let small_order = small.order();
        if small_order.exceeds(cap) {
            return Err(Error::CapExceeded { order: small_order });
        }
        let mut gens: Vec<Perm> = Vec::new();
        let mut partial = StabChain::build(self.degree, &gens);
        let mut err = None;
        small.for_each_element(cap, |e| {
            if err.is_some() || e.is_identity() {
                return;
            }
            match big.contains(e) {
                Ok(true) => {
                    if !partial.sift(0, e.clone()).0.is_identity() {
                        gens.push(e.clone());
                        partial = StabChain::build(self.degree, &gens);
                    }
                }
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        PermGroup::new(self.degree, gens)
    }

    /// The right-coset space of `sub` in `self`, with the induced action of
    /// each generator of `self` on coset indices. Cosets are canonically keyed
    /// by their lexicographically least element, and coset 0 is the coset of
    /// the identity. `sub` must be generated by elements of `self`.
    pub fn right_cosets(&self, sub: &PermGroup, cap: u64) -> Result<CosetSpace> {
        if sub.degree() != self.degree {
            return Err(Error::DomainMismatch {
                left: self.degree,
                right: sub.degree(),
            });
        }
        let sub_order = sub.order();
        if sub_order.exceeds(cap) {
            return Err(Error::CapExceeded { order: sub_order });
        }
        let count = self
            .order()
            .checked_div(&sub_order)
            .ok_or_else(|| Error::Precondition("coset space of a non-subgroup".into()))?;
        if count.exceeds(cap) {
            return Err(Error::CapExceeded { order: self.order() });
        }
        let count = count
            .to_u64()
            .ok_or_else(|| Error::Overflow("coset count exceeds u64".into()))? as usize;
        let sub_els = sub.enumerate(cap)?;
        let canon = |x: &Perm| -> Perm {
            let mut best: Option<Perm> = None;
            for h in &sub_els {
                let c = h.mul(x);
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
            best.expect("subgroup is nonempty")
        };
        let mut index: HashMap<Perm, u32> = HashMap::new();
        let mut reps: Vec<Perm> = Vec::new();
        let first = canon(&Perm::identity(self.degree));
        index.insert(first.clone(), 0);
        reps.push(first);
        let mut action_images: Vec<Vec<u32>> = vec![Vec::new(); self.gens.len()];
        let mut q = 0usize;
        while q < reps.len() {
            let r = reps[q].clone();
            for (t, g) in self.gens.iter().enumerate() {
                let c = canon(&r.mul(g));
                let slot = match index.get(&c) {
                    Some(&s) => s,
                    None => {
                        let s = reps.len() as u32;
                        index.insert(c.clone(), s);
                        reps.push(c);
                        s
                    }
                };
                action_images[t].push(slot);
            }
            q += 1;
        }
        debug_assert_eq!(reps.len(), count);
        let action = action_images
            .into_iter()
            .map(|imgs| Perm::from_images(imgs).expect("coset action is a permutation"))
            .collect();
        Ok(CosetSpace {
            count,
            reps,
            action,
        })
    }
}

/// Right-coset space of a subgroup, as produced by [`PermGroup::right_cosets`].
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub count: usize,
    /// Canonical (lexicographically least) representative per coset.
    pub reps: Vec<Perm>,
    /// Induced permutation of coset indices, one per group generator, aligned
    /// with `generators()`.
    pub action: Vec<Perm>,
}

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gen_idx: Vec<usize>,
    orbit: Vec<u32>,
    /// point -> slot+1 in `orbit`, 0 when absent
    slot: Vec<u32>,
    /// per orbit slot: (parent point, strong generator index); slot 0 is the base
    tree: Vec<(u32, u32)>,
    trans: Option<Vec<Perm>>,
}

impl Level {
    fn slot_of(&self, p: u32) -> Option<usize> {
        match self.slot[p as usize] {
            0 => None,
            s => Some((s - 1) as usize),
        }
    }
}

#[derive(Clone, Debug)]
struct StabChain {
    degree: usize,
    sgens: Vec<Perm>,
    sinvs: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            sgens: Vec::new(),
            sinvs: Vec::new(),
            levels: Vec::new(),
        };
        let mut seen: HashMap<&Perm, ()> = HashMap::new();
        for g in gens {
            if !g.is_identity() && !seen.contains_key(g) {
                seen.insert(g, ());
                chain.add_strong_gen(g.clone());
            }
        }
        if chain.levels.is_empty() {
            return chain;
        }
        chain.rebuild_all();
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            match chain.verify(i as usize) {
                None => i -= 1,
                Some((res, l)) => {
                    chain.add_strong_gen(res);
                    chain.rebuild_all();
                    i = (l as isize).min(chain.levels.len() as isize - 1);
                }
            }
        }
        chain
    }

    fn add_strong_gen(&mut self, g: Perm) {
        let fixes_all_bases = self.levels.iter().all(|lv| g.apply(lv.base) == lv.base);
        if fixes_all_bases {
            let base = g.smallest_moved().expect("non-identity generator");
            self.levels.push(Level {
                base,
                gen_idx: Vec::new(),
                orbit: Vec::new(),
                slot: Vec::new(),
                tree: Vec::new(),
                trans: None,
            });
        }
        self.sinvs.push(g.inverse());
        self.sgens.push(g);
    }

    fn rebuild_all(&mut self) {
        for i in 0..self.levels.len() {
            self.rebuild(i);
        }
    }

    fn rebuild(&mut self, i: usize) {
        let bases: Vec<u32> = self.levels[..i].iter().map(|lv| lv.base).collect();
        let lv = &mut self.levels[i];
        lv.gen_idx = self
            .sgens
            .iter()
            .enumerate()
            .filter(|(_, s)| bases.iter().all(|&b| s.apply(b) == b))
            .map(|(k, _)| k)
            .collect();
        lv.orbit.clear();
        lv.slot = vec![0; self.degree];
        lv.tree.clear();
        lv.orbit.push(lv.base);
        lv.slot[lv.base as usize] = 1;
        lv.tree.push((lv.base, u32::MAX));
        let mut q = 0usize;
        while q < lv.orbit.len() {
            let p = lv.orbit[q];
            for &k in &lv.gen_idx {
                let r = self.sgens[k].apply(p);
                if lv.slot[r as usize] == 0 {
                    lv.slot[r as usize] = lv.orbit.len() as u32 + 1;
                    lv.orbit.push(r);
                    lv.tree.push((p, k as u32));
                }
            }
            q += 1;
        }
        lv.trans = None;
        if lv.orbit.len().saturating_mul(self.degree) <= TRANSVERSAL_BUDGET {
            let mut trans = Vec::with_capacity(lv.orbit.len());
            trans.push(Perm::identity(self.degree));
            for s in 1..lv.orbit.len() {
                let (parent, k) = lv.tree[s];
                let parent_slot = (lv.slot[parent as usize] - 1) as usize;
                let rep: &Perm = &trans[parent_slot];
                trans.push(rep.mul(&self.sgens[k as usize]));
            }
            lv.trans = Some(trans);
        }
    }

    /// Forward transversal representative: `(base) rep = orbit[slot]`.
    fn rep(&self, i: usize, slot: usize) -> Perm {
        let lv = &self.levels[i];
        if let Some(trans) = &lv.trans {
            return trans[slot].clone();
        }
        let mut word = Vec::new();
        let mut s = slot;
        while s != 0 {
            let (parent, k) = lv.tree[s];
            word.push(k as usize);
            s = (lv.slot[parent as usize] - 1) as usize;
        }
        let mut u = Perm::identity(self.degree);
        for &k in word.iter().rev() {
            u = u.mul(&self.sgens[k]);
        }
        u
    }

    /// `g * rep(slot)^{-1}` without materializing the representative.
    fn mul_inv_rep(&self, i: usize, g: Perm, slot: usize) -> Perm {
        let lv = &self.levels[i];
        if let Some(trans) = &lv.trans {
            return g.mul(&trans[slot].inverse());
        }
        let mut out = g;
        let mut s = slot;
        while s != 0 {
            let (parent, k) = lv.tree[s];
            out = out.mul(&self.sinvs[k as usize]);
            s = (lv.slot[parent as usize] - 1) as usize;
        }
        out
    }

    /// Strip `g` through levels `start..`; returns the residue and the level
    /// where stripping stopped (== number of levels when fully stripped).
    fn sift(&self, start: usize, mut g: Perm) -> (Perm, usize) {
        for i in start..self.levels.len() {
            let lv = &self.levels[i];
            let p = g.apply(lv.base);
            if p == lv.base {
                continue;
            }
            match lv.slot_of(p) {
                None => return (g, i),
                Some(s) => g = self.mul_inv_rep(i, g, s),
            }
        }
        (g, self.levels.len())
    }

    /// Check all Schreier generators of level `i`; on the first one that does
    /// not strip to the identity, return the residue and the level it reached.
    fn verify(&self, i: usize) -> Option<(Perm, usize)> {
        let lv = &self.levels[i];
        for slot in 0..lv.orbit.len() {
            let p = lv.orbit[slot];
            let up = self.rep(i, slot);
            for &k in &lv.gen_idx {
                let s = &self.sgens[k];
                let q = s.apply(p);
                let q_slot = lv.slot_of(q).expect("orbit is closed under generators");
                let sg = self.mul_inv_rep(i, up.mul(s), q_slot);
                if sg.is_identity() {
                    continue;
                }
                let (res, l) = self.sift(i + 1, sg);
                if !res.is_identity() {
                    return Some((res, l));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: breadth-first closure of the generated set.
    fn brute_force_elements(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(Perm::identity(degree));
        let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    fn perm(images: &[u32]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn single_transposition() {
        let g = PermGroup::new(3, vec![perm(&[1, 0, 2])]).unwrap();
        assert_eq!(g.order().to_u64(), Some(2));
        assert!(g.contains(&perm(&[1, 0, 2])).unwrap());
        assert!(!g.contains(&perm(&[2, 1, 0])).unwrap());
    }

    #[test]
    fn dihedral_on_three_points_is_s3() {
        let g = PermGroup::new(3, vec![perm(&[1, 0, 2]), perm(&[0, 2, 1])]).unwrap();
        assert_eq!(g.order().to_u64(), Some(6));
        let els = g.enumerate(10).unwrap();
        assert_eq!(els.len(), 6);
        let brute = brute_force_elements(3, g.generators());
        assert_eq!(els.iter().cloned().collect::<HashSet<_>>(), brute);
    }

    #[test]
    fn trivial_group_enumerates_identity() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.order().to_u64(), Some(1));
        assert_eq!(g.enumerate(10).unwrap(), vec![Perm::identity(5)]);
    }

    #[test]
    fn chain_matches_brute_force_on_assorted_groups() {
        let cases: Vec<(usize, Vec<Perm>)> = vec![
            (4, vec![perm(&[1, 2, 3, 0])]),
            (4, vec![perm(&[1, 0, 2, 3]), perm(&[0, 2, 1, 3]), perm(&[0, 1, 3, 2])]),
            (5, vec![perm(&[1, 2, 3, 4, 0]), perm(&[1, 0, 2, 3, 4])]),
            (6, vec![perm(&[1, 0, 3, 2, 5, 4]), perm(&[2, 3, 4, 5, 0, 1])]),
            (7, vec![
                perm(&[0, 1, 4, 5, 2, 3, 6]),
                perm(&[5, 6, 4, 1, 2, 3, 0]),
                perm(&[4, 6, 5, 2, 1, 0, 3]),
            ]),
        ];
        for (degree, gens) in cases {
            let g = PermGroup::new(degree, gens).unwrap();
            let brute = brute_force_elements(degree, g.generators());
            assert_eq!(g.order().to_u64(), Some(brute.len() as u64), "degree {degree}");
            let enumerated: HashSet<Perm> =
                g.enumerate(200_000).unwrap().into_iter().collect();
            assert_eq!(enumerated, brute);
            for e in brute.iter().take(24) {
                assert!(g.contains(e).unwrap());
            }
        }
    }

    #[test]
    fn order_ignores_generator_order_and_redundancy() {
        let a = perm(&[1, 0, 2, 3]);
        let b = perm(&[0, 2, 1, 3]);
        let c = perm(&[0, 1, 3, 2]);
        let g1 = PermGroup::new(4, vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let g2 = PermGroup::new(4, vec![c.clone(), a.clone(), b.clone()]).unwrap();
        let redundant = a.mul(&b);
        let g3 = PermGroup::new(4, vec![a, b, c, redundant]).unwrap();
        assert_eq!(g1.order(), g2.order());
        assert_eq!(g1.order(), g3.order());
    }

    #[test]
    fn enumerate_respects_cap() {
        let g = PermGroup::new(4, vec![perm(&[1, 2, 3, 0]), perm(&[1, 0, 2, 3])]).unwrap();
        assert_eq!(g.order().to_u64(), Some(24));
        match g.enumerate(10) {
            Err(Error::CapExceeded { order }) => assert_eq!(order.to_u64(), Some(24)),
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn intersection_of_point_stabilizers_in_s3_is_trivial() {
        let stab0 = PermGroup::new(3, vec![perm(&[0, 2, 1])]).unwrap();
        let stab1 = PermGroup::new(3, vec![perm(&[2, 1, 0])]).unwrap();
        let i = stab0.subgroup_intersection(&stab1, 100).unwrap();
        assert!(i.is_trivial());
    }

    #[test]
    fn intersection_with_self_is_self() {
        let g = PermGroup::new(4, vec![perm(&[1, 0, 2, 3]), perm(&[0, 2, 1, 3])]).unwrap();
        let i = g.subgroup_intersection(&g, 100).unwrap();
        assert_eq!(i.order(), g.order());
    }

    #[test]
    fn coset_space_of_stabilizer() {
        // S3 on 3 points, subgroup <(1 2)>: 3 cosets, identity coset first
        let g = PermGroup::new(3, vec![perm(&[1, 0, 2]), perm(&[0, 2, 1])]).unwrap();
        let h = PermGroup::new(3, vec![perm(&[0, 2, 1])]).unwrap();
        let cs = g.right_cosets(&h, 100).unwrap();
        assert_eq!(cs.count, 3);
        assert_eq!(cs.reps[0], Perm::identity(3));
        assert_eq!(cs.action.len(), 2);
        for a in &cs.action {
            assert_eq!(a.degree(), 3);
        }
    }

    #[test]
    fn membership_is_closed_under_products() {
        let g = PermGroup::new(5, vec![perm(&[1, 2, 0, 3, 4]), perm(&[0, 1, 2, 4, 3])]).unwrap();
        let els = g.enumerate(100).unwrap();
        for x in els.iter().take(6) {
            for y in els.iter().take(6) {
                assert!(g.contains(&x.mul(y)).unwrap());
            }
        }
    }
}
