//! Homomorphisms between finite groups by backtracking over generator images.

use std::collections::HashMap;

use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::limits::Limits;

const UNSET: usize = usize::MAX;

/// Extends `images[i]` (the image of `gens[i]`) along the Cayley graph of the
/// subgroup generated by `gens`. Unreached elements stay `usize::MAX`.
///
/// Returns `None` as soon as an edge is inconsistent; a consistent extension
/// is a homomorphism on the generated subgroup.
pub fn extend_partial(src: &FiniteGroup, gens: &[usize], images: &[usize], dst: &FiniteGroup) -> Option<Vec<usize>> {
    debug_assert_eq!(gens.len(), images.len());
    let mut map = vec![UNSET; src.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        let fx = map[x];
        for (&g, &fg) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let fy = dst.mul(fx, fg);
            if map[y] == UNSET {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        head += 1;
    }
    Some(map)
}

/// The homomorphism sending `gens[i]` to `images[i]`, if one exists and
/// `gens` generates `src`.
pub fn extend_hom(src: &FiniteGroup, gens: &[usize], images: &[usize], dst: &FiniteGroup) -> Option<Vec<usize>> {
    extend_partial(src, gens, images, dst).filter(|m| m.iter().all(|&x| x != UNSET))
}

/// Checks `f(ab) = f(a)f(b)` for all pairs.
pub fn check_hom(src: &FiniteGroup, dst: &FiniteGroup, f: &[usize]) -> Result<()> {
    if f.len() != src.order() || f.iter().any(|&x| x >= dst.order()) {
        return Err(Error::invalid("map has the wrong shape"));
    }
    for a in src.elements() {
        for b in src.elements() {
            if f[src.mul(a, b)] != dst.mul(f[a], f[b]) {
                return Err(Error::NotHomomorphism { a, b });
            }
        }
    }
    Ok(())
}

/// Composite `x -> g(f(x))`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

pub fn invert_bijection(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; f.len()];
    for (i, &x) in f.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Sorted kernel of a homomorphism.
pub fn kernel(f: &[usize]) -> Vec<usize> {
    f.iter().enumerate().filter(|(_, &y)| y == 0).map(|(x, _)| x).collect()
}

/// Sorted image of a homomorphism.
pub fn image(f: &[usize]) -> Vec<usize> {
    let mut v = f.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

struct Search<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    injective: bool,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    /// Visits every full assignment; the visitor returns `false` to stop.
    fn run(&mut self, visit: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<()> {
        let mut chosen = Vec::with_capacity(self.gens.len());
        self.descend(&mut chosen, visit).map(|_| ())
    }

    fn descend(&mut self, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<bool> {
        let j = chosen.len();
        if j == self.gens.len() {
            let map = extend_hom(self.src, &self.gens, chosen, self.dst).expect("checked on prefix");
            return Ok(visit(map));
        }
        for ci in 0..self.candidates[j].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            chosen.push(self.candidates[j][ci]);
            let ok = match extend_partial(self.src, &self.gens[..=j], chosen, self.dst) {
                None => false,
                Some(m) if self.injective => {
                    let vals: Vec<usize> = m.iter().copied().filter(|&x| x != UNSET).collect();
                    image(&vals).len() == vals.len()
                }
                Some(_) => true,
            };
            if ok && !self.descend(chosen, visit)? {
                chosen.pop();
                return Ok(false);
            }
            chosen.pop();
        }
        Ok(true)
    }
}

fn small_generators(g: &FiniteGroup) -> Vec<usize> {
    let greedy = g.greedy_generators();
    if greedy.len() <= g.generators().len() {
        greedy
    } else {
        g.generators().to_vec()
    }
}

/// All homomorphisms `src -> dst` as element maps, in lexicographic order of
/// generator images.
pub fn homomorphisms(src: &FiniteGroup, dst: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    homomorphisms_with(src, dst, &Limits::default())
}

pub fn homomorphisms_with(src: &FiniteGroup, dst: &FiniteGroup, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let gens = small_generators(src);
    let candidates = gens
        .iter()
        .map(|&g| {
            let o = src.element_order(g);
            dst.elements().filter(|&y| o.is_multiple_of(dst.element_order(y))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut s = Search { src, dst, gens, candidates, injective: false, budget: limits.hom_budget, nodes: 0 };
    s.run(&mut |m| {
        out.push(m);
        true
    })?;
    Ok(out)
}

fn iso_screen(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order()
        && a.is_abelian() == b.is_abelian()
        && a.order_histogram() == b.order_histogram()
        && super::character::abelianization(a) == super::character::abelianization(b)
}

/// An isomorphism `a -> b` as an element map, if one exists.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with(a, b, &Limits::default())
}

pub fn is_isomorphic_with(a: &FiniteGroup, b: &FiniteGroup, limits: &Limits) -> Result<Option<Vec<usize>>> {
    for g in [a, b] {
        if g.order() > limits.max_iso_order {
            return Err(Error::OrderBoundExceeded { what: "isomorphism test input", bound: limits.max_iso_order, actual: g.order() });
        }
    }
    if a == b {
        return Ok(Some(a.elements().collect()));
    }
    if !iso_screen(a, b) {
        return Ok(None);
    }
    let mut found = None;
    bijections(a, b, limits, &mut |m| {
        found = Some(m);
        false
    })?;
    Ok(found)
}

/// Visits isomorphisms `a -> b` until the visitor returns `false`.
fn bijections(a: &FiniteGroup, b: &FiniteGroup, limits: &Limits, visit: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<()> {
    let gens = small_generators(a);
    let candidates = gens
        .iter()
        .map(|&g| {
            let o = a.element_order(g);
            b.elements().filter(|&y| b.element_order(y) == o).collect()
        })
        .collect();
    let mut s = Search { src: a, dst: b, gens, candidates, injective: true, budget: limits.hom_budget, nodes: 0 };
    s.run(visit)
}

/// The automorphism group with its inner part and the action on the center.
///
/// An automorphism is an element map. Composition is "first, then":
/// `(f * g)(x) = g(f(x))`, and conjugation `c_g(x) = g^-1 x g` makes
/// `g -> c_g` a homomorphism.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    /// All automorphisms, lexicographically sorted; the identity is first.
    pub maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    gens: Vec<usize>,
    /// `inner_of[g]` is the index of `c_g`.
    pub inner_of: Vec<usize>,
    /// Sorted center of the group.
    pub center: Vec<usize>,
}

/// Largest automorphism group materialized as a Cayley table.
pub const AUT_TABLE_LIMIT: usize = 5040;

impl Automorphisms {
    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// Index of an automorphism given as a full element map.
    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        let key: Vec<usize> = self.gens.iter().map(|&g| f[g]).collect();
        self.index.get(&key).copied()
    }

    /// `i` followed by `j`.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        let key: Vec<usize> = self.gens.iter().map(|&g| self.maps[j][self.maps[i][g]]).collect();
        self.index[&key]
    }

    /// Sorted indices of inner automorphisms.
    pub fn inner(&self) -> Vec<usize> {
        image(&self.inner_of)
    }

    pub fn is_inner(&self, i: usize) -> bool {
        self.inner_of.contains(&i)
    }

    /// Aut as a finite group indexed like `maps`.
    pub fn group(&self) -> Result<FiniteGroup> {
        let n = self.order();
        if n > AUT_TABLE_LIMIT {
            return Err(Error::OrderBoundExceeded { what: "automorphism group", bound: AUT_TABLE_LIMIT, actual: n });
        }
        let rows = (0..n).map(|i| (0..n).map(|j| self.compose(i, j)).collect()).collect();
        FiniteGroup::from_table(rows)
    }

    /// `Out = Aut/Inn` with the projection from `maps` indices.
    pub fn out(&self) -> Result<(FiniteGroup, Vec<usize>)> {
        let aut = self.group()?;
        Ok(super::structure::quotient(&aut, &self.inner()))
    }

    /// Orbits of Aut on the center, each sorted, ordered by least element.
    pub fn center_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.maps[0].len()];
        let mut orbits = Vec::new();
        for &z in &self.center {
            if seen[z] {
                continue;
            }
            let mut orbit: Vec<usize> = self.maps.iter().map(|f| f[z]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                seen[x] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Image of each center element under the automorphism `i`; inner
    /// automorphisms act trivially, so this is the Out action.
    pub fn act_on_center(&self, i: usize) -> Vec<(usize, usize)> {
        self.center.iter().map(|&z| (z, self.maps[i][z])).collect()
    }
}

/// Conjugation `x -> g^-1 x g` as an element map.
pub fn conjugation(g: &FiniteGroup, by: usize) -> Vec<usize> {
    g.elements().map(|x| g.conj(x, by)).collect()
}

pub fn automorphisms(g: &FiniteGroup) -> Result<Automorphisms> {
    automorphisms_with(g, &Limits::default())
}

pub fn automorphisms_with(g: &FiniteGroup, limits: &Limits) -> Result<Automorphisms> {
    if g.order() > limits.max_aut_order {
        return Err(Error::OrderBoundExceeded { what: "automorphism input", bound: limits.max_aut_order, actual: g.order() });
    }
    let gens = small_generators(g);
    let mut maps = Vec::new();
    bijections(g, g, limits, &mut |m| {
        maps.push(m);
        true
    })?;
    maps.sort();
    let index = maps
        .iter()
        .enumerate()
        .map(|(i, f)| (gens.iter().map(|&x| f[x]).collect::<Vec<_>>(), i))
        .collect::<HashMap<_, _>>();
    let mut aut = Automorphisms { maps, index, gens, inner_of: vec![], center: super::structure::center_elements(g) };
    aut.inner_of = g.elements().map(|x| aut.index_of(&conjugation(g, x)).expect("inner automorphism")).collect();
    Ok(aut)
}
