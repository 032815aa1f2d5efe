//! Monodromy groups: the flag-adjacency involutions of a polytope as an sggi.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poset::Polytope;
use crate::sggi::Sggi;
use std::collections::HashMap;

/// The monodromy group of a validated polytope of rank >= 1: generator `g_j`
/// maps each flag (indexed in canonical lexicographic order) to its
/// j-adjacent flag.
pub fn monodromy(q: &Polytope) -> Result<Sggi> {
    if q.rank() < 1 {
        return Err(Error::InvalidParameter(
            "monodromy requires rank >= 1".into(),
        ));
    }
    q.require_valid()?;
    let flags = q.flags()?;
    let pos: HashMap<&[u32], u32> = flags
        .iter()
        .enumerate()
        .map(|(i, f)| (f.indices(), i as u32))
        .collect();
    let mut gens = Vec::with_capacity(q.rank());
    for j in 0..q.rank() {
        let mut images = Vec::with_capacity(flags.len());
        for f in &flags {
            let adj = q.adjacent_flag(f, j)?;
            images.push(pos[adj.indices()]);
        }
        gens.push(Perm::from_images(images)?);
    }
    Sggi::new(flags.len(), gens)
}

/// Regularity via the monodromy criterion: a validated polytope is reported
/// regular exactly when `|Mon(Q)|` equals the flag count, i.e. the monodromy
/// action is simply transitive.
pub fn is_regular(q: &Polytope) -> Result<bool> {
    let flag_count = q.flags()?.len() as u64;
    let m = monodromy(q)?;
    Ok(m.order().to_u64() == Some(flag_count))
}
