//! The constructive cover machinery: the mix of two sggis, the signed
//! wreath-style extension of a string C-group by its facet action, the bump
//! step that raises the certified rank by one, and the iterative driver that
//! produces a finite regular cover of any finite sggi.
//!
//! Extensions whose order fits under the enumeration cap are built as honest
//! permutation groups and all their structural guarantees are verified; past
//! the cap the construction switches to a symbolic ledger that tracks exact
//! factored orders and type bounds, which is how the astronomically large
//! covers are reported.

use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::sggi::{SchlafliType, Sggi};
use serde::Serialize;

/// Construction caps. `domain` bounds the number of points an explicit
/// permutation representation may use; `enumeration` bounds how many group
/// elements any exhaustive pass may touch. `POLYCOV_CAP` overrides the
/// enumeration cap.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub domain: usize,
    pub enumeration: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            domain: 10_000,
            enumeration: 10_000_000,
        }
    }
}

impl Caps {
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var("POLYCOV_CAP") {
            if let Ok(n) = v.parse::<u64>() {
                caps.enumeration = n;
            }
        }
        caps
    }
}

/// The mix of two same-rank sggis: the subgroup of the direct product
/// generated by the pairs `(g_t, h_t)`, realized on the disjoint union of the
/// two domains.
pub fn mix(a: &Sggi, b: &Sggi) -> Result<Sggi> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::with_capacity(a.rank());
    for (ga, gb) in a.gens().iter().zip(b.gens()) {
        let mut images = Vec::with_capacity(da + db);
        images.extend_from_slice(ga.images());
        images.extend(gb.images().iter().map(|&x| x + da as u32));
        gens.push(Perm::from_images(images)?);
    }
    Sggi::new(da + db, gens)
}

/// The right-coset action of a rank-`m` string C-group on the cosets of its
/// facet subgroup `<g_0, .., g_{m-2}>`. Coset 0 (the identity's coset) is the
/// base facet.
#[derive(Clone, Debug)]
pub struct FacetAction {
    /// Induced action, one generator per generator of the input.
    pub action: PermGroup,
    pub base_facet: u32,
    pub facet_count: u64,
}

pub fn facet_action(g: &Sggi, caps: &Caps) -> Result<FacetAction> {
    if g.rank() == 0 {
        return Err(Error::InvalidParameter("facet action needs rank >= 1".into()));
    }
    let sub = PermGroup::new(g.degree(), g.gens()[..g.rank() - 1].to_vec())?;
    let cosets = g.group().right_cosets(&sub, caps.enumeration)?;
    let action = PermGroup::new(cosets.count, cosets.action)?;
    Ok(FacetAction {
        action,
        base_facet: 0,
        facet_count: cosets.count as u64,
    })
}

/// A group tracked only by its invariants, with the construction expression
/// that produced it. Orders of extensions are exact; orders of symbolic mixes
/// are the direct-product bound.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicGroup {
    pub rank: usize,
    pub schlafli: SchlafliType,
    pub order: FactoredInteger,
    /// Order of the facet subgroup `<l_0, .., l_{rank-2}>`, tracked so that a
    /// further extension can still compute its facet count.
    pub facet_subgroup_order: FactoredInteger,
    pub provenance: String,
}

/// Either an honest permutation group or a symbolic ledger entry.
#[derive(Clone, Debug)]
pub enum StageGroup {
    Explicit(Sggi),
    Symbolic(SymbolicGroup),
}

impl StageGroup {
    pub fn rank(&self) -> usize {
        match self {
            StageGroup::Explicit(s) => s.rank(),
            StageGroup::Symbolic(s) => s.rank,
        }
    }

    pub fn order(&self) -> FactoredInteger {
        match self {
            StageGroup::Explicit(s) => s.order(),
            StageGroup::Symbolic(s) => s.order.clone(),
        }
    }

    pub fn schlafli_type(&self) -> Result<SchlafliType> {
        match self {
            StageGroup::Explicit(s) => s.schlafli_type(),
            StageGroup::Symbolic(s) => Ok(s.schlafli.clone()),
        }
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self, StageGroup::Explicit(_))
    }
}

/// The extension of a string C-group by sign flips over its facets: a regular
/// (m+1)-polytope group of type `{p_1, .., p_{m-1}, 4}`, with facets the input
/// group and order `|G| * 2^(number of facets)`.
///
/// Explicit mode acts on facet-coset/sign pairs (two points per facet; the
/// original domain is appended as an extra block when the facet action is not
/// faithful, which keeps the representation faithful and the order formula
/// exact). When the signed domain or the extension order exceeds the caps the
/// result is symbolic. The input must be a string C-group with involutory
/// (non-identity) generators; explicit-mode guarantees are verified before
/// returning.
pub fn extend_2k(g: &Sggi, caps: &Caps) -> Result<StageGroup> {
    let m = g.rank();
    if m == 0 {
        return Err(Error::InvalidParameter("cannot extend a rank-0 sggi".into()));
    }
    if g.gens().iter().any(|x| x.is_identity()) {
        return Err(Error::Precondition(
            "extension requires involutory (non-identity) generators".into(),
        ));
    }
    let order = g.order();
    let facet_sub_order = PermGroup::new(g.degree(), g.gens()[..m - 1].to_vec())?.order();
    let facet_count_f = order
        .checked_div(&facet_sub_order)
        .ok_or_else(|| Error::Internal("facet subgroup order does not divide group order".into()))?;
    let facet_count = facet_count_f
        .to_u64()
        .ok_or_else(|| Error::Overflow("facet count exceeds u64".into()))?;
    let ext_order = order.mul(&FactoredInteger::prime_power(2, facet_count)?);

    let explicit_fits = 2 * (facet_count as usize) <= caps.domain
        && !ext_order.exceeds(caps.enumeration)
        && !facet_sub_order.exceeds(caps.enumeration);
    if !explicit_fits {
        let mut periods = g.schlafli_type()?.periods;
        periods.push(4);
        return Ok(StageGroup::Symbolic(SymbolicGroup {
            rank: m + 1,
            schlafli: SchlafliType { periods },
            order: ext_order,
            provenance: format!("extend_2k(group of order {order}, {facet_count} facets)"),
            facet_subgroup_order: order,
        }));
    }

    let fa = facet_action(g, caps)?;
    let na = facet_count as usize;
    let faithful = fa.action.order() == order;
    let extra = if faithful { 0 } else { g.degree() };
    let degree = 2 * na + extra;
    let mut gens = Vec::with_capacity(m + 1);
    for (j, act) in fa.action.generators().iter().enumerate() {
        let mut images = vec![0u32; degree];
        for p in 0..na {
            let q = act.apply(p as u32) as usize;
            images[2 * p] = (2 * q) as u32;
            images[2 * p + 1] = (2 * q + 1) as u32;
        }
        for x in 0..extra {
            images[2 * na + x] = 2 * na as u32 + g.gens()[j].apply(x as u32);
        }
        gens.push(Perm::from_images(images)?);
    }
    // the new generator flips the sign over the base facet only
    let mut flip: Vec<u32> = (0..degree as u32).collect();
    flip.swap(2 * fa.base_facet as usize, 2 * fa.base_facet as usize + 1);
    gens.push(Perm::from_images(flip)?);

    let ext = Sggi::new(degree, gens)?;
    verify_extension(&ext, g, &ext_order, caps)?;
    Ok(StageGroup::Explicit(ext))
}

/// Explicit-mode guarantees; all are consequences of the construction, so a
/// failure here is a bug, not bad input.
fn verify_extension(ext: &Sggi, g: &Sggi, expected_order: &FactoredInteger, caps: &Caps) -> Result<()> {
    let m = g.rank();
    if &ext.order() != expected_order {
        return Err(Error::Internal(format!(
            "extension order {} != |G| * 2^|A| = {}",
            ext.order(),
            expected_order
        )));
    }
    let rho_m = &ext.gens()[m];
    for j in 0..m.saturating_sub(1) {
        let a = ext.gens()[j].mul(rho_m);
        let b = rho_m.mul(&ext.gens()[j]);
        if a != b {
            return Err(Error::Internal(format!("rho_{j} does not commute with rho_{m}")));
        }
    }
    if m >= 1 {
        let t = ext.gens()[m - 1].mul(rho_m);
        let t2 = t.mul(&t);
        if !t2.mul(&t2).is_identity() {
            return Err(Error::Internal(
                "(rho_{m-1} rho_m)^2 is not an involution".into(),
            ));
        }
    }
    let mut expected_type = g.schlafli_type()?.periods;
    expected_type.push(4);
    if ext.schlafli_type()?.periods != expected_type {
        return Err(Error::Internal("extension type is not {p_1, .., p_{m-1}, 4}".into()));
    }
    if !ext.is_string_c_group(caps.enumeration)? {
        return Err(Error::Internal("extension failed the intersection condition".into()));
    }
    let facet_sub = ext.prefix(m)?;
    if facet_sub.order() != g.order()
        || !facet_sub.covers(g)?
        || !g.covers(&facet_sub)?
    {
        return Err(Error::Internal(
            "facet subgroup of the extension is not a copy of the input".into(),
        ));
    }
    Ok(())
}

/// Result of one bump step.
#[derive(Clone, Debug)]
pub struct BumpResult {
    pub group: StageGroup,
    /// Facet count of the extension used in this step.
    pub facet_count: FactoredInteger,
    pub extension_order: FactoredInteger,
    pub extension_schlafli: SchlafliType,
    /// True when the step was explicit and both post-conditions
    /// (string C-group, covers the prefix) were verified.
    pub certified: bool,
}

/// One induction step: given a string C-group `h` covering the first `i+1`
/// generators of `g`, produce one covering the first `i+2`, as the mix of the
/// prefix with the extension of `h`.
pub fn bump(g: &Sggi, i: usize, h: &StageGroup, caps: &Caps) -> Result<BumpResult> {
    let n = g.rank();
    if n < 2 || i > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "bump index {i} out of 0..={}",
            n.saturating_sub(2)
        )));
    }
    if h.rank() != i + 1 {
        return Err(Error::Precondition(format!(
            "bump at index {i} needs a rank-{} group, got rank {}",
            i + 1,
            h.rank()
        )));
    }
    let prefix = g.prefix(i + 2)?;
    let ext = match h {
        StageGroup::Explicit(h_sggi) => {
            if !h_sggi.covers(&g.prefix(i + 1)?)? {
                return Err(Error::Precondition(
                    "bump requires H to cover the generator prefix".into(),
                ));
            }
            extend_2k(h_sggi, caps)?
        }
        StageGroup::Symbolic(sym) => StageGroup::Symbolic(extend_symbolic(sym)?),
    };
    // |ext| = |H| * 2^|A|: recover the facet count |A| from the power of two
    let pow = ext
        .order()
        .checked_div(&h.order())
        .ok_or_else(|| Error::Internal("extension order not divisible by |H|".into()))?;
    let facet_count = two_exponent_as_count(&pow)?;
    let extension_order = ext.order();
    let extension_schlafli = ext.schlafli_type()?;
    match ext {
        StageGroup::Explicit(ext_sggi) => {
            let l = mix(&prefix, &ext_sggi)?;
            let is_c = l.is_string_c_group(caps.enumeration)?;
            let covers_prefix = l.covers(&prefix)?;
            if !is_c || !covers_prefix {
                return Err(Error::Internal(
                    "mix with the extension lost a guaranteed property".into(),
                ));
            }
            Ok(BumpResult {
                group: StageGroup::Explicit(l),
                facet_count,
                extension_order,
                extension_schlafli,
                certified: true,
            })
        }
        StageGroup::Symbolic(ext_sym) => {
            let mut periods = Vec::new();
            let pt = prefix.schlafli_type()?.periods;
            for (t, &pe) in ext_sym.schlafli.periods.iter().enumerate() {
                let pp = pt.get(t).copied().unwrap_or(1);
                periods.push(lcm_u64(pp, pe)?);
            }
            let prefix_facet_order = g.prefix(i + 1)?.order();
            Ok(BumpResult {
                group: StageGroup::Symbolic(SymbolicGroup {
                    rank: i + 2,
                    schlafli: SchlafliType { periods },
                    order: prefix.order().mul(&ext_sym.order),
                    facet_subgroup_order: prefix_facet_order.mul(&ext_sym.facet_subgroup_order),
                    provenance: format!(
                        "mix(prefix of order {}, {})",
                        prefix.order(),
                        ext_sym.provenance
                    ),
                }),
                facet_count,
                extension_order,
                extension_schlafli,
                certified: false,
            })
        }
    }
}

/// Extension of a symbolic stage: facets of the extension are copies of the
/// input, so the facet-subgroup order is the input's order.
fn extend_symbolic(sym: &SymbolicGroup) -> Result<SymbolicGroup> {
    let facets = sym
        .order
        .checked_div(&sym.facet_subgroup_order)
        .ok_or_else(|| Error::Internal("facet subgroup order does not divide".into()))?
        .to_u64()
        .ok_or_else(|| Error::Overflow("symbolic facet count exceeds u64".into()))?;
    let mut periods = sym.schlafli.periods.clone();
    periods.push(4);
    Ok(SymbolicGroup {
        rank: sym.rank + 1,
        schlafli: SchlafliType { periods },
        order: sym.order.mul(&FactoredInteger::prime_power(2, facets)?),
        facet_subgroup_order: sym.order.clone(),
        provenance: format!("extend_2k({})", sym.provenance),
    })
}

/// The `2^|A|` part of an extension order, reported as the facet count |A|.
fn two_exponent_as_count(pow: &FactoredInteger) -> Result<FactoredInteger> {
    let mut exp = 0u64;
    for (p, e) in pow.factors() {
        if p != 2 {
            return Err(Error::Internal("extension factor is not a power of two".into()));
        }
        exp = e;
    }
    if exp == 0 {
        return Err(Error::Internal("extension did not add sign flips".into()));
    }
    FactoredInteger::from_u64(exp)
}

#[derive(Clone, Debug, Serialize)]
pub enum StageMode {
    #[serde(rename = "explicit")]
    Explicit,
    #[serde(rename = "symbolic")]
    Symbolic,
}

/// One bump stage in the cover report.
#[derive(Clone, Debug, Serialize)]
pub struct CoverStage {
    /// Bump index `i`: this stage produced a group covering `<g_0, .., g_{i+1}>`.
    pub index: usize,
    pub mode: StageMode,
    pub order: FactoredInteger,
    pub schlafli: SchlafliType,
    /// Facet count of the extension used by this stage.
    pub facet_count: FactoredInteger,
    /// Order and type of the extension itself (`|H| * 2^|A|`, `{p_1,..,4}`).
    pub extension_order: FactoredInteger,
    pub extension_schlafli: SchlafliType,
    pub provenance: String,
}

/// Ledger of the iterative cover construction.
#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    /// Rank of the largest generator prefix that is already a string C-group;
    /// the iteration starts there.
    pub start_prefix_rank: usize,
    pub stages: Vec<CoverStage>,
    pub final_order: FactoredInteger,
    pub final_schlafli: SchlafliType,
    /// In symbolic mode the final order is the direct-product bound and the
    /// type is an entry-wise lcm bound rather than the exact type.
    pub final_is_bound: bool,
    /// True when every stage was explicit and the final group was verified to
    /// cover the input generator-wise.
    pub certified: bool,
    /// The explicit cover group, when the whole run stayed under the caps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_group: Option<SggiWire>,
}

/// Wire form of an sggi embedded in reports.
#[derive(Clone, Debug, Serialize)]
pub struct SggiWire {
    pub rank: usize,
    pub domain: usize,
    pub generators: Vec<Vec<u32>>,
}

impl SggiWire {
    pub fn of(s: &Sggi) -> Self {
        SggiWire {
            rank: s.rank(),
            domain: s.degree(),
            generators: s.gens().iter().map(|g| g.images().to_vec()).collect(),
        }
    }
}

/// Outcome of [`regular_cover`]: the report plus the explicit cover group
/// when one was constructed.
#[derive(Clone, Debug)]
pub struct CoverOutcome {
    pub report: CoverReport,
    pub group: StageGroup,
}

/// Iteratively build a finite string C-group covering `g`: start from the
/// largest generator prefix that is already a string C-group and bump once per
/// remaining generator. Stages stay explicit while the caps allow and fall
/// back to the symbolic ledger after that; the driver itself never fails on
/// size.
pub fn regular_cover(g: &Sggi, caps: &Caps) -> Result<CoverOutcome> {
    let n = g.rank();
    if n == 0 {
        return Err(Error::InvalidParameter("cannot cover a rank-0 sggi".into()));
    }
    let mut start = 1;
    for k in 1..=n {
        match g.prefix(k)?.is_string_c_group(caps.enumeration) {
            Ok(true) => start = k,
            Ok(false) => {}
            Err(Error::CapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let mut current = StageGroup::Explicit(g.prefix(start)?);
    let mut stages = Vec::new();
    let mut all_certified = true;
    for i in start.saturating_sub(1)..n.saturating_sub(1) {
        let br = bump(g, i, &current, caps)?;
        all_certified &= br.certified;
        stages.push(CoverStage {
            index: i,
            mode: if br.group.is_explicit() {
                StageMode::Explicit
            } else {
                StageMode::Symbolic
            },
            order: br.group.order(),
            schlafli: br.group.schlafli_type()?,
            facet_count: br.facet_count,
            extension_order: br.extension_order,
            extension_schlafli: br.extension_schlafli,
            provenance: match &br.group {
                StageGroup::Explicit(s) => format!(
                    "mix of <g_0..g_{}> with extend_2k of the previous stage, on {} points",
                    i + 1,
                    s.degree()
                ),
                StageGroup::Symbolic(s) => s.provenance.clone(),
            },
        });
        current = br.group;
    }
    let certified = match &current {
        StageGroup::Explicit(s) => all_certified && s.covers(g)?,
        StageGroup::Symbolic(_) => false,
    };
    let report = CoverReport {
        start_prefix_rank: start,
        stages,
        final_order: current.order(),
        final_schlafli: current.schlafli_type()?,
        final_is_bound: !current.is_explicit(),
        certified,
        final_group: match &current {
            StageGroup::Explicit(s) => Some(SggiWire::of(s)),
            StageGroup::Symbolic(_) => None,
        },
    };
    Ok(CoverOutcome {
        report,
        group: current,
    })
}

fn lcm_u64(a: u64, b: u64) -> Result<u64> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    if a == 0 || b == 0 {
        return Ok(a.max(b));
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or_else(|| Error::Overflow("period lcm exceeds u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::monodromy::monodromy;

    fn dihedral_sggi(p: u64) -> Sggi {
        monodromy(&polygon(p).unwrap()).unwrap()
    }

    #[test]
    fn mix_with_self_is_the_diagonal() {
        let d = dihedral_sggi(4);
        let m = mix(&d, &d).unwrap();
        assert_eq!(m.order(), d.order());
    }

    #[test]
    fn mix_of_triangle_and_square_groups() {
        let d3 = dihedral_sggi(3);
        let d4 = dihedral_sggi(4);
        let m = mix(&d3, &d4).unwrap();
        assert_eq!(m.order().to_u64(), Some(24));
        assert_eq!(m.schlafli_type().unwrap().periods, vec![12]);
    }

    #[test]
    fn mix_projections_divide() {
        let d3 = dihedral_sggi(3);
        let d6 = dihedral_sggi(6);
        let m = mix(&d3, &d6).unwrap();
        let mo = m.order().to_u64().unwrap();
        assert_eq!(mo % 6, 0);
        assert_eq!(mo % 12, 0);
        assert_eq!(24 % mo, 0);
    }

    #[test]
    fn facet_action_of_the_square() {
        let d4 = dihedral_sggi(4);
        let fa = facet_action(&d4, &Caps::default()).unwrap();
        assert_eq!(fa.facet_count, 4);
        assert_eq!(fa.base_facet, 0);
        assert_eq!(fa.action.order().to_u64(), Some(8));
    }

    #[test]
    fn facet_action_of_the_cube() {
        let c = monodromy(&hypercube(3).unwrap()).unwrap();
        let fa = facet_action(&c, &Caps::default()).unwrap();
        assert_eq!(fa.facet_count, 6);
    }

    #[test]
    fn extension_of_the_square() {
        let d4 = dihedral_sggi(4);
        let ext = extend_2k(&d4, &Caps::default()).unwrap();
        match ext {
            StageGroup::Explicit(e) => {
                assert_eq!(e.order().to_u64(), Some(128));
                assert_eq!(e.schlafli_type().unwrap().periods, vec![4, 4]);
                assert_eq!(e.prefix(2).unwrap().order().to_u64(), Some(8));
            }
            StageGroup::Symbolic(_) => panic!("expected explicit extension"),
        }
    }

    #[test]
    fn extension_of_a_single_involution() {
        let s = Sggi::new(2, vec![Perm::from_images(vec![1, 0]).unwrap()]).unwrap();
        let ext = extend_2k(&s, &Caps::default()).unwrap();
        match ext {
            StageGroup::Explicit(e) => {
                assert_eq!(e.order().to_u64(), Some(8));
                assert_eq!(e.schlafli_type().unwrap().periods, vec![4]);
            }
            _ => panic!("expected explicit"),
        }
    }

    #[test]
    fn extension_goes_symbolic_over_the_cap() {
        let d4 = dihedral_sggi(4);
        let caps = Caps { domain: 10_000, enumeration: 100 };
        match extend_2k(&d4, &caps).unwrap() {
            StageGroup::Symbolic(s) => {
                assert_eq!(s.order.to_u64(), Some(128));
                assert_eq!(s.schlafli.periods, vec![4, 4]);
            }
            _ => panic!("expected symbolic"),
        }
    }

    #[test]
    fn cover_of_a_c_group_is_itself() {
        let d5 = dihedral_sggi(5);
        let out = regular_cover(&d5, &Caps::default()).unwrap();
        assert_eq!(out.report.start_prefix_rank, 2);
        assert!(out.report.stages.is_empty());
        assert!(out.report.certified);
        assert_eq!(out.report.final_order, d5.order());
    }

    #[test]
    fn bump_rejects_a_non_covering_h() {
        // D5 does not cover the square's prefix <g_0, g_1> = D4
        let sq = monodromy(&pyramid(&polygon(4).unwrap()).unwrap()).unwrap();
        let d5 = StageGroup::Explicit(dihedral_sggi(5));
        assert!(matches!(
            bump(&sq, 1, &d5, &Caps::default()),
            Err(Error::Precondition(_))
        ));
    }

    /// Two hexagon reflections plus the central half-turn: an sggi whose full
    /// intersection condition fails (the central element lies in both end
    /// subgroups) while the dihedral prefix is fine.
    fn hexagon_with_central_flip() -> Sggi {
        let g0 = Perm::from_cycles(6, &[&[1, 5], &[2, 4]]).unwrap();
        let g1 = Perm::from_cycles(6, &[&[0, 1], &[2, 5], &[3, 4]]).unwrap();
        let g2 = Perm::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap();
        Sggi::new(6, vec![g0, g1, g2]).unwrap()
    }

    #[test]
    fn explicit_bump_certifies_a_cover_of_a_non_c_group() {
        let g = hexagon_with_central_flip();
        assert!(!g.is_string_c_group(10_000).unwrap());
        let out = regular_cover(&g, &Caps::default()).unwrap();
        assert_eq!(out.report.start_prefix_rank, 2);
        assert_eq!(out.report.stages.len(), 1);
        assert!(matches!(out.report.stages[0].mode, StageMode::Explicit));
        assert!(out.report.certified);
        let l = match &out.group {
            StageGroup::Explicit(l) => l,
            _ => panic!("expected explicit"),
        };
        assert!(l.covers(&g).unwrap());
        assert!(l.is_string_c_group(1_000_000).unwrap());
        // the already-certified dihedral prefix survives the bump unchanged
        assert_eq!(l.prefix(2).unwrap().order(), g.prefix(2).unwrap().order());
        // covered types divide covering types, entry by entry
        let tg = g.schlafli_type().unwrap().periods;
        let tl = l.schlafli_type().unwrap().periods;
        for (a, b) in tg.iter().zip(&tl) {
            assert_eq!(b % a, 0);
        }
    }

    #[test]
    fn covers_is_transitive_on_polygon_groups() {
        let d12 = dihedral_sggi(12);
        let d6 = dihedral_sggi(6);
        let d3 = dihedral_sggi(3);
        assert!(d12.covers(&d6).unwrap());
        assert!(d6.covers(&d3).unwrap());
        assert!(d12.covers(&d3).unwrap());
        assert!(!d6.covers(&d12).unwrap());
    }

    /// The facet action of the digon group is not faithful (the first
    /// reflection fixes both edge cosets); the extension still has the exact
    /// order |G| * 2^|A| because the representation appends the original
    /// domain in that case.
    #[test]
    fn extension_of_the_digon_handles_the_unfaithful_action() {
        let d2 = dihedral_sggi(2);
        assert_eq!(d2.order().to_u64(), Some(4));
        let fa = facet_action(&d2, &Caps::default()).unwrap();
        assert_eq!(fa.facet_count, 2);
        assert!(fa.action.order().to_u64() < d2.order().to_u64());
        match extend_2k(&d2, &Caps::default()).unwrap() {
            StageGroup::Explicit(e) => {
                assert_eq!(e.order().to_u64(), Some(16));
                assert!(e.is_string_c_group(1000).unwrap());
            }
            _ => panic!("expected explicit"),
        }
    }
}
