//! Crossed modules and the strict 2-groups they present.

use serde::{Deserialize, Serialize};

use std::collections::HashMap;

use crate::algebra::hom::{check_hom, invert_bijection, kernel};
use crate::algebra::structure::quotient_by_normal;
use crate::algebra::{abelian_subgroup, is_isomorphic, AbelianSubgroup, FiniteGroup};
use crate::error::{Error, Result};

/// `[phi: G2 -> G1]` with a right action `g^x` of `G1` on `G2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g2: FiniteGroup,
    g1: FiniteGroup,
    phi: Vec<usize>,
    /// `action[x][g] = g^x`.
    action: Vec<Vec<usize>>,
}

fn check_bijection(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&x| x < f.len() && !std::mem::replace(&mut seen[x], true))
}

impl CrossedModule {
    /// Checks every axiom on every pair of elements.
    pub fn new(g2: FiniteGroup, g1: FiniteGroup, phi: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        check_hom(&g2, &g1, &phi)?;
        if action.len() != g1.order() {
            return Err(Error::invalid(format!("action has {} rows, G1 has order {}", action.len(), g1.order())));
        }
        for row in &action {
            if row.len() != g2.order() || !check_bijection(row) {
                return Err(Error::invalid("each action row must permute G2"));
            }
            check_hom(&g2, &g2, row)?;
        }
        if action[0].iter().enumerate().any(|(g, &y)| g != y) {
            return Err(Error::invalid("the identity of G1 acts nontrivially"));
        }
        for x in g1.elements() {
            for y in g1.elements() {
                let xy = g1.mul(x, y);
                if g2.elements().any(|g| action[xy][g] != action[y][action[x][g]]) {
                    return Err(Error::invalid(format!("not a right action at ({x}, {y})")));
                }
            }
        }
        for g in g2.elements() {
            for x in g1.elements() {
                if phi[action[x][g]] != g1.conj(phi[g], x) {
                    return Err(Error::EquivarianceFailure { g, x });
                }
            }
        }
        for g in g2.elements() {
            for h in g2.elements() {
                if action[phi[h]][g] != g2.conj(g, h) {
                    return Err(Error::PeifferFailure { g, h });
                }
            }
        }
        Ok(CrossedModule { g2, g1, phi, action })
    }

    /// Builds the action table from `f(g, x) = g^x`.
    pub fn from_fn(g2: FiniteGroup, g1: FiniteGroup, phi: Vec<usize>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let action = g1.elements().map(|x| g2.elements().map(|g| f(g, x)).collect()).collect();
        Self::new(g2, g1, phi, action)
    }

    /// `[1 -> gamma]`.
    pub fn discrete(gamma: &FiniteGroup) -> Self {
        let action = vec![vec![0]; gamma.order()];
        CrossedModule { g2: FiniteGroup::trivial(), g1: gamma.clone(), phi: vec![0], action }
    }

    /// `[A -> 1]` for an abelian group `A`.
    pub fn abelian(a: &FiniteGroup) -> Result<Self> {
        Self::new(a.clone(), FiniteGroup::trivial(), vec![0; a.order()], vec![a.elements().collect()])
    }

    /// `[N -> G]` for a normal subgroup, acting by conjugation.
    pub fn normal_inclusion(g: &FiniteGroup, normal: &[usize]) -> Result<Self> {
        if !g.is_normal(normal) {
            return Err(Error::invalid("subgroup is not normal"));
        }
        let (n, incl) = g.subgroup(normal);
        let back = |x: usize| incl.iter().position(|&y| y == x).expect("normal subgroup is closed");
        let action = g.elements().map(|x| n.elements().map(|a| back(g.conj(incl[a], x))).collect()).collect();
        Self::new(n, g.clone(), incl, action)
    }

    pub fn g2(&self) -> &FiniteGroup {
        &self.g2
    }

    pub fn g1(&self) -> &FiniteGroup {
        &self.g1
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// `g^x`.
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[x][g]
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn homotopy_groups(&self) -> HomotopyGroups {
        let ker = kernel(&self.phi);
        let mut im: Vec<usize> = self.phi.clone();
        im.sort_unstable();
        im.dedup();
        let (pi1, projection) = quotient_by_normal(&self.g1, &im);
        HomotopyGroups { pi1, projection, pi2: abelian_subgroup(&self.g2, &ker) }
    }

    /// Homomorphic sections of `G1 -> pi1`.
    pub fn sections(&self) -> Result<Vec<Vec<usize>>> {
        let hg = self.homotopy_groups();
        Ok(crate::algebra::homomorphisms(&hg.pi1, &self.g1)?
            .into_iter()
            .filter(|s| s.iter().enumerate().all(|(q, &x)| hg.projection[x] == q))
            .collect())
    }

    pub fn is_split(&self) -> Result<bool> {
        Ok(!self.sections()?.is_empty())
    }

    pub fn to_data(&self) -> CrossedModuleData {
        CrossedModuleData {
            g2: self.g2.table_rows(),
            g1: self.g1.table_rows(),
            phi: self.phi.clone(),
            action: self.action.clone(),
        }
    }
}

/// `pi1 = G1 / im(phi)` and `pi2 = ker(phi)`.
#[derive(Clone, Debug)]
pub struct HomotopyGroups {
    pub pi1: FiniteGroup,
    /// `G1 -> pi1`.
    pub projection: Vec<usize>,
    /// The kernel of `phi` inside `G2`.
    pub pi2: AbelianSubgroup,
}

/// Serialized crossed module; groups are Cayley tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModuleData {
    #[serde(rename = "G2")]
    pub g2: Vec<Vec<usize>>,
    #[serde(rename = "G1")]
    pub g1: Vec<Vec<usize>>,
    pub phi: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

impl TryFrom<CrossedModuleData> for CrossedModule {
    type Error = Error;

    fn try_from(d: CrossedModuleData) -> Result<Self> {
        CrossedModule::new(FiniteGroup::from_table(d.g2)?, FiniteGroup::from_table(d.g1)?, d.phi, d.action)
    }
}

/// The strict 2-group of a crossed module: objects `G1`, arrows `G1 x G2`.
#[derive(Clone, Debug)]
pub struct StrictTwoGroup {
    pub objects: FiniteGroup,
    /// Group of arrows; arrow `(g, a)` has index `g * |G2| + a`.
    pub arrows: FiniteGroup,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// Identity arrow of each object.
    pub identity: Vec<usize>,
    g2_order: usize,
    g2: FiniteGroup,
}

impl StrictTwoGroup {
    pub fn num_arrows(&self) -> usize {
        self.arrows.order()
    }

    /// The pair `(g, a)` of an arrow.
    pub fn pair(&self, arrow: usize) -> (usize, usize) {
        (arrow / self.g2_order, arrow % self.g2_order)
    }

    /// `(g, a)` then `(h, b)` is `(g, ab)` when `t(g, a) = h`.
    pub fn compose(&self, first: usize, second: usize) -> Option<usize> {
        if self.target[first] != self.source[second] {
            return None;
        }
        let (g, a) = self.pair(first);
        let (_, b) = self.pair(second);
        Some(g * self.g2_order + self.g2.mul(a, b))
    }
}

pub fn to_2group(x: &CrossedModule) -> Result<StrictTwoGroup> {
    let (n1, n2) = (x.g1.order(), x.g2.order());
    let idx = |g: usize, a: usize| g * n2 + a;
    let mut rows = vec![vec![0usize; n1 * n2]; n1 * n2];
    for g in 0..n1 {
        for a in 0..n2 {
            for h in 0..n1 {
                for b in 0..n2 {
                    rows[idx(g, a)][idx(h, b)] = idx(x.g1.mul(g, h), x.g2.mul(x.act(a, h), b));
                }
            }
        }
    }
    let arrows = FiniteGroup::from_table(rows)?;
    Ok(StrictTwoGroup {
        objects: x.g1.clone(),
        arrows,
        source: (0..n1 * n2).map(|i| i / n2).collect(),
        target: (0..n1 * n2).map(|i| x.g1.mul(i / n2, x.phi[i % n2])).collect(),
        identity: (0..n1).map(|g| idx(g, 0)).collect(),
        g2_order: n2,
        g2: x.g2.clone(),
    })
}

/// Arrows out of the identity object, with `phi = target` and `G1` acting
/// by conjugation with identity arrows.
pub fn from_2group(t: &StrictTwoGroup) -> Result<CrossedModule> {
    let arrows = &t.arrows;
    let out_of_identity: Vec<usize> = arrows.elements().filter(|&a| t.source[a] == 0).collect();
    let (g2, incl) = arrows.subgroup(&out_of_identity);
    let mut back = vec![usize::MAX; arrows.order()];
    for (i, &a) in incl.iter().enumerate() {
        back[a] = i;
    }
    let phi = incl.iter().map(|&a| t.target[a]).collect();
    let action = t
        .objects
        .elements()
        .map(|g| g2.elements().map(|b| back[arrows.conj(incl[b], t.identity[g])]).collect())
        .collect();
    CrossedModule::new(g2, t.objects.clone(), phi, action)
}

/// Converts to a 2-group and back, certifying an isomorphism of crossed
/// modules that is the identity on `G1`, and equality of homotopy groups.
pub fn roundtrip_check(x: &CrossedModule) -> Result<bool> {
    let t = to_2group(x)?;
    let y = from_2group(&t)?;
    if y.g1 != x.g1 || y.g2.order() != x.g2.order() {
        return Ok(false);
    }
    // a -> arrow (e, a) -> index in y.g2
    let (_, incl) = t.arrows.subgroup(&t.arrows.elements().filter(|&a| t.source[a] == 0).collect::<Vec<_>>());
    let back = invert_bijection(&incl.iter().map(|&a| t.pair(a).1).collect::<Vec<_>>());
    if !check_bijection(&back) || check_hom(&x.g2, &y.g2, &back).is_err() {
        return Ok(false);
    }
    let intertwines = x.g2.elements().all(|a| {
        y.phi[back[a]] == x.phi[a] && x.g1.elements().all(|g| back[x.act(a, g)] == y.act(back[a], g))
    });
    if !intertwines {
        return Ok(false);
    }
    let (hx, hy) = (x.homotopy_groups(), y.homotopy_groups());
    Ok(hx.pi2.group == hy.pi2.group && is_isomorphic(&hx.pi1, &hy.pi1)?.is_some())
}

/// `K x| G` modulo `{(l(h)^-1, p(h))}`, with the images of `K` and `G`.
#[derive(Clone, Debug)]
pub struct SemidirectAlong {
    pub group: FiniteGroup,
    pub from_k: Vec<usize>,
    pub from_g: Vec<usize>,
}

/// Semidirect product along `H`: `K`, `H`, `G` carry right `K`-actions
/// (`act_h[k][h]`, `act_g[k][g]`, conjugation on `K`), `l: H -> K` and
/// `p: H -> G` are equivariant, and `g^l(h) = p(h)^-1 g p(h)`.
pub fn semidirect_along(
    k: &FiniteGroup,
    g: &FiniteGroup,
    h: &FiniteGroup,
    l: &[usize],
    p: &[usize],
    act_h: &[Vec<usize>],
    act_g: &[Vec<usize>],
) -> Result<SemidirectAlong> {
    let fail = |m: String| Err(Error::CompatibilityFailure(m));
    if check_hom(h, k, l).is_err() || check_hom(h, g, p).is_err() {
        return fail("l and p must be homomorphisms".into());
    }
    if act_h.len() != k.order() || act_g.len() != k.order() {
        return fail("actions need one row per element of K".into());
    }
    for x in k.elements() {
        if !check_bijection(&act_g[x]) || act_g[x].len() != g.order() || check_hom(g, g, &act_g[x]).is_err() {
            return fail(format!("element {x} of K does not act on G by automorphisms"));
        }
        if !check_bijection(&act_h[x]) || act_h[x].len() != h.order() || check_hom(h, h, &act_h[x]).is_err() {
            return fail(format!("element {x} of K does not act on H by automorphisms"));
        }
        for y in k.elements() {
            let xy = k.mul(x, y);
            if g.elements().any(|a| act_g[xy][a] != act_g[y][act_g[x][a]])
                || h.elements().any(|a| act_h[xy][a] != act_h[y][act_h[x][a]])
            {
                return fail(format!("not a right action at ({x}, {y})"));
            }
        }
        for a in h.elements() {
            if l[act_h[x][a]] != k.conj(l[a], x) {
                return fail(format!("l is not equivariant at ({a}, {x})"));
            }
            if p[act_h[x][a]] != act_g[x][p[a]] {
                return fail(format!("p is not equivariant at ({a}, {x})"));
            }
        }
    }
    for a in h.elements() {
        for y in g.elements() {
            if act_g[l[a]][y] != g.conj(y, p[a]) {
                return fail(format!("g^l(h) != p(h)^-1 g p(h) at h={a}, g={y}"));
            }
        }
    }
    // (k, g) ~ (k l(a)^-1, g^(l(a)^-1) p(a)); normal form has k least in k l(H).
    let mut hit = vec![false; k.order()];
    if h.elements().any(|a| std::mem::replace(&mut hit[l[a]], true)) {
        return fail("l must be injective".into());
    }
    let mut normal_form = vec![(usize::MAX, usize::MAX); k.order()];
    for x in k.elements() {
        if normal_form[x].0 != usize::MAX {
            continue;
        }
        for a in h.elements() {
            // x l(a) has representative x, reached by a
            let y = k.mul(x, l[a]);
            normal_form[y] = (x, a);
        }
    }
    let reduce = |(x, y): (usize, usize)| {
        let (t, a) = normal_form[x];
        let li = k.inv(l[a]);
        (t, g.mul(act_g[li][y], p[a]))
    };
    let mul = |&(k1, g1): &(usize, usize), &(k2, g2): &(usize, usize)| reduce((k.mul(k1, k2), g.mul(act_g[k2][g1], g2)));
    let mut gens: Vec<(usize, usize)> = k.generators().iter().map(|&x| reduce((x, 0))).collect();
    gens.extend(g.generators().iter().map(|&y| (0, y)));
    let (group, elems) = FiniteGroup::from_closure((0usize, 0usize), &gens, mul, usize::MAX)?;
    if group.order() * h.order() != k.order() * g.order() {
        return fail("the antidiagonal copy of H is not a normal subgroup".into());
    }
    let index: HashMap<(usize, usize), usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    Ok(SemidirectAlong {
        from_k: k.elements().map(|x| index[&reduce((x, 0))]).collect(),
        from_g: g.elements().map(|y| index[&(0, y)]).collect(),
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{abelian, dihedral, quaternion, symmetric};
    use crate::algebra::{cyclic, FinAbGroup};

    fn times(n: usize, k: usize, m: usize) -> Vec<usize> {
        (0..n).map(|x| x * k % m).collect()
    }

    #[test]
    fn spec_examples() {
        let s3 = symmetric(3);
        let d = CrossedModule::discrete(&s3);
        let hg = d.homotopy_groups();
        assert_eq!(hg.pi1.order(), 6);
        assert!(hg.pi2.group.is_trivial());

        let a = CrossedModule::abelian(&cyclic(2)).unwrap();
        let hg = a.homotopy_groups();
        assert_eq!(hg.pi1.order(), 1);
        assert_eq!(hg.pi2.group, FinAbGroup::cyclic(2));

        let z2z4 = CrossedModule::from_fn(cyclic(2), cyclic(4), times(2, 2, 4), |g, _| g).unwrap();
        let hg = z2z4.homotopy_groups();
        assert_eq!(hg.pi1.order(), 2);
        assert!(hg.pi2.group.is_trivial());

        let z4z8 = CrossedModule::from_fn(cyclic(4), cyclic(8), times(4, 2, 8), |g, _| g).unwrap();
        let hg = z4z8.homotopy_groups();
        assert_eq!(hg.pi1.order(), 2);
        assert!(hg.pi2.group.is_trivial());
    }

    #[test]
    fn axioms_are_enforced() {
        // trivial phi with a non-abelian G2 breaks Peiffer
        let s3 = symmetric(3);
        let err = CrossedModule::abelian(&s3).unwrap_err();
        assert!(matches!(err, Error::PeifferFailure { .. }));
        // Z2 -> Z2 identity with G1 acting trivially is fine; with a
        // nontrivial phi into a non-normal image equivariance fails
        let refl = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let err = CrossedModule::from_fn(cyclic(2), s3.clone(), vec![0, refl], |g, _| g).unwrap_err();
        assert!(matches!(err, Error::EquivarianceFailure { .. }));
        let err = CrossedModule::new(cyclic(2), cyclic(3), vec![0, 1], vec![vec![0, 1]; 3]).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism { .. }));
    }

    #[test]
    fn two_group_roundtrips() {
        let z2z4 = CrossedModule::from_fn(cyclic(2), cyclic(4), times(2, 2, 4), |g, _| g).unwrap();
        let t = to_2group(&z2z4).unwrap();
        assert_eq!(t.num_arrows(), 8);
        assert!(roundtrip_check(&z2z4).unwrap());

        let a = CrossedModule::abelian(&cyclic(2)).unwrap();
        let t = to_2group(&a).unwrap();
        assert_eq!(t.num_arrows(), 2);
        assert!(t.source.iter().zip(&t.target).all(|(&s, &u)| s == 0 && u == 0));
        assert!(roundtrip_check(&a).unwrap());

        let d = CrossedModule::discrete(&dihedral(4));
        assert_eq!(to_2group(&d).unwrap().num_arrows(), 8);
        assert!(roundtrip_check(&d).unwrap());

        let q8 = quaternion();
        let x = CrossedModule::normal_inclusion(&q8, &crate::algebra::structure::center_elements(&q8)).unwrap();
        assert!(roundtrip_check(&x).unwrap());
    }

    #[test]
    fn composition_is_functorial() {
        // interchange law: (a;b)(c;d) = (ac);(bd)
        let s3 = symmetric(3);
        let rotations: Vec<usize> = s3.elements().filter(|&g| s3.element_order(g) != 2).collect();
        let x = CrossedModule::normal_inclusion(&s3, &rotations).unwrap();
        let t = to_2group(&x).unwrap();
        let arr = &t.arrows;
        for a in arr.elements() {
            for b in arr.elements() {
                let Some(ab) = t.compose(a, b) else { continue };
                for c in arr.elements() {
                    for d in arr.elements() {
                        let Some(cd) = t.compose(c, d) else { continue };
                        let lhs = arr.mul(ab, cd);
                        let rhs = t.compose(arr.mul(a, c), arr.mul(b, d)).expect("composable");
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn semidirect_examples() {
        let z2 = cyclic(2);
        let id2 = vec![vec![0, 1]; 2];
        let s = semidirect_along(&z2, &z2, &FiniteGroup::trivial(), &[0], &[0], &vec![vec![0]; 2], &id2).unwrap();
        assert_eq!(s.group.order(), 4);
        let s = semidirect_along(&z2, &z2, &z2, &[0, 1], &[0, 1], &id2, &id2).unwrap();
        assert_eq!(s.group.order(), 2);
        let z4 = cyclic(4);
        let s = semidirect_along(&z4, &z2, &z2, &[0, 2], &[0, 1], &vec![vec![0, 1]; 4], &vec![vec![0, 1]; 4]).unwrap();
        assert_eq!(s.group.order(), 4);
        let z3 = cyclic(3);
        let inv3: Vec<usize> = (0..3).map(|x| z3.inv(x)).collect();
        let act_g = vec![vec![0, 1, 2], inv3];
        let s3 = semidirect_along(&z2, &z3, &FiniteGroup::trivial(), &[0], &[0], &vec![vec![0]; 2], &act_g).unwrap();
        assert!(!s3.group.is_abelian());
        let s = semidirect_along(&z2, &z2, &z2, &[0, 1], &[0, 0], &id2, &id2).unwrap();
        assert_eq!(s.group.order(), 2);
        // the identity of K must act trivially
        let bad = semidirect_along(&z2, &abelian(&[2, 2]), &z2, &[0, 1], &[0, 1], &id2, &vec![vec![0, 2, 1, 3]; 2]);
        assert!(matches!(bad, Err(Error::CompatibilityFailure(_))));
    }

    #[test]
    fn json_roundtrip() {
        let x = CrossedModule::from_fn(cyclic(2), cyclic(4), times(2, 2, 4), |g, _| g).unwrap();
        let s = serde_json::to_string(&x.to_data()).unwrap();
        assert!(s.contains("\"G2\""));
        let back: CrossedModuleData = serde_json::from_str(&s).unwrap();
        assert_eq!(CrossedModule::try_from(back).unwrap(), x);
    }
}
