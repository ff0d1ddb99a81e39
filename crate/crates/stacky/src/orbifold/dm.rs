//! Deligne-Mumford curves as gerbes over orbifold curves, and their
//! fundamental groups as graphs of groups.

use crate::algebra::hom::check_hom;
use crate::algebra::{cyclic, FiniteGroup};
use crate::error::{Error, Result};
use crate::fpgroup::{cayley_relators, invert, letter, shift, GroupPresentation, Word};

use super::OrbifoldCurve;

/// Stabilizer at an orbifold point: a group `G` with a marked normal copy
/// of the generic stabilizer `H` and cyclic quotient of the point's order.
#[derive(Clone, Debug)]
pub struct LocalExtension {
    pub group: FiniteGroup,
    /// Image of each element of `H` in `G`.
    pub inclusion: Vec<usize>,
}

/// An `H`-gerbe over an orbifold curve.
///
/// The band lists one automorphism of `H` per free loop of the coarse
/// curve: `2g + l - 1` of them for open curves, `2g` for compact ones.
#[derive(Clone, Debug)]
pub struct DMCurve {
    base: OrbifoldCurve,
    generic: FiniteGroup,
    band: Vec<Vec<usize>>,
    local: Vec<LocalExtension>,
}

fn free_loops(base: &OrbifoldCurve) -> usize {
    let two_g = 2 * base.genus() as usize;
    match base.punctures() {
        0 => two_g,
        l => two_g + l as usize - 1,
    }
}

impl DMCurve {
    pub fn new(base: OrbifoldCurve, generic: FiniteGroup, band: Vec<Vec<usize>>, local: Vec<LocalExtension>) -> Result<Self> {
        let h = &generic;
        if band.len() != free_loops(&base) {
            return Err(Error::invalid(format!(
                "band has {} entries, the curve has {} free loops",
                band.len(),
                free_loops(&base)
            )));
        }
        for f in &band {
            check_bijective_hom(h, h, f)?;
        }
        if local.len() != base.orders().len() {
            return Err(Error::invalid(format!(
                "{} local extensions for {} orbifold points",
                local.len(),
                base.orders().len()
            )));
        }
        for (ext, &n) in local.iter().zip(base.orders()) {
            validate_local(h, ext, n)?;
        }
        Ok(DMCurve { base, generic, band, local })
    }

    /// The orbifold itself: trivial generic stabilizer, cyclic local groups.
    pub fn orbifold(base: OrbifoldCurve) -> Self {
        let band = vec![vec![0]; free_loops(&base)];
        let local = base
            .orders()
            .iter()
            .map(|&n| LocalExtension { group: cyclic(n as usize), inclusion: vec![0] })
            .collect();
        DMCurve { base, generic: FiniteGroup::trivial(), band, local }
    }

    /// The product gerbe: trivial band and local groups `H x Z_n`.
    pub fn trivial_gerbe(base: OrbifoldCurve, generic: FiniteGroup) -> Self {
        let identity: Vec<usize> = generic.elements().collect();
        let band = vec![identity; free_loops(&base)];
        let local = base
            .orders()
            .iter()
            .map(|&n| {
                let (group, inclusion, _) = FiniteGroup::direct_product(&generic, &cyclic(n as usize));
                LocalExtension { group, inclusion }
            })
            .collect();
        DMCurve { base, generic, band, local }
    }

    pub fn base(&self) -> &OrbifoldCurve {
        &self.base
    }

    pub fn generic(&self) -> &FiniteGroup {
        &self.generic
    }

    pub fn band(&self) -> &[Vec<usize>] {
        &self.band
    }

    pub fn local(&self) -> &[LocalExtension] {
        &self.local
    }
}

fn check_bijective_hom(src: &FiniteGroup, dst: &FiniteGroup, f: &[usize]) -> Result<()> {
    if f.len() != src.order() || f.iter().any(|&x| x >= dst.order()) {
        return Err(Error::invalid("map has the wrong length or leaves the target"));
    }
    check_hom(src, dst, f)?;
    let mut seen = vec![false; dst.order()];
    for &x in f {
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::invalid("map is not injective"));
        }
    }
    Ok(())
}

fn validate_local(h: &FiniteGroup, ext: &LocalExtension, n: u64) -> Result<()> {
    let g = &ext.group;
    if g.order() != h.order() * n as usize {
        return Err(Error::invalid(format!(
            "local group has order {}, expected {} * {n}",
            g.order(),
            h.order()
        )));
    }
    if ext.inclusion.len() != h.order() || ext.inclusion.iter().any(|&x| x >= g.order()) {
        return Err(Error::invalid("inclusion has the wrong length or leaves the local group"));
    }
    check_hom(h, g, &ext.inclusion)?;
    let mut inside = vec![false; g.order()];
    for &x in &ext.inclusion {
        if std::mem::replace(&mut inside[x], true) {
            return Err(Error::invalid("inclusion is not injective"));
        }
    }
    if !g.is_normal(&ext.inclusion) {
        return Err(Error::invalid("marked copy of H is not normal"));
    }
    // cyclic quotient: some coset generates it
    let coset_order = |x: usize| (1..=n).find(|&j| inside[g.pow(x, j as i64)]).expect("index is n");
    if !g.elements().any(|x| coset_order(x) == n) {
        return Err(Error::invalid(format!("local quotient is not cyclic of order {n}")));
    }
    Ok(())
}

/// Fundamental group of an open DM curve:
/// `(H x| F_(2g+l-1)) *_H (*_H G_i)`.
///
/// Generators are `h*` for `H`, `t1..` for the free loops and `g<i>_*` for
/// each local group. Relators present `H` and each `G_i`, set
/// `t^-1 h t = band(h)`, and identify `H` with its copy in each `G_i`.
pub fn graph_of_groups_pi1(d: &DMCurve) -> Result<GroupPresentation> {
    if d.base.is_compact() {
        return Err(Error::RequiresOpenCurve);
    }
    let h = &d.generic;
    let (h_rels, h_words) = cayley_relators(h);
    let kh = h.generators().len();
    let loops = d.band.len();
    let mut names: Vec<String> = (1..=kh).map(|i| format!("h{i}")).collect();
    names.extend((1..=loops).map(|i| format!("t{i}")));
    let mut rels: Vec<Word> = h_rels;
    for (i, f) in d.band.iter().enumerate() {
        let t = letter(kh + i);
        for (s, &x) in h.generators().iter().enumerate() {
            let mut r = vec![-t, letter(s), t];
            r.extend(invert(&h_words[f[x]]));
            rels.push(r);
        }
    }
    let mut offset = kh + loops;
    for (i, ext) in d.local.iter().enumerate() {
        let g = &ext.group;
        let (g_rels, g_words) = cayley_relators(g);
        names.extend((1..=g.generators().len()).map(|j| format!("g{}_{j}", i + 1)));
        rels.extend(g_rels.iter().map(|r| shift(r, offset)));
        for (s, &x) in h.generators().iter().enumerate() {
            let mut r = vec![letter(s)];
            r.extend(invert(&shift(&g_words[ext.inclusion[x]], offset)));
            rels.push(r);
        }
        offset += g.generators().len();
    }
    GroupPresentation::new(names, rels)
}
