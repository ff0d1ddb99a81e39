//! Centers, centralizers and quotients.

use super::abelian::{abelian_subgroup, AbelianSubgroup};
use super::group::FiniteGroup;

/// Sorted elements commuting with every element of `set`.
pub fn centralizer_elements(g: &FiniteGroup, set: &[usize]) -> Vec<usize> {
    g.elements().filter(|&x| set.iter().all(|&s| g.mul(x, s) == g.mul(s, x))).collect()
}

/// Sorted elements of the center.
pub fn center_elements(g: &FiniteGroup) -> Vec<usize> {
    let gens: Vec<usize> = g.generators().to_vec();
    centralizer_elements(g, &gens)
}

/// The center in invariant-factor form, with coordinates of its elements and
/// a basis realizing the embedding.
pub fn center(g: &FiniteGroup) -> AbelianSubgroup {
    abelian_subgroup(g, &center_elements(g))
}

/// The centralizer of `set` as a group with its inclusion.
pub fn centralizer(g: &FiniteGroup, set: &[usize]) -> (FiniteGroup, Vec<usize>) {
    let elems = centralizer_elements(g, set);
    let gens = g.induced_on(&elems).expect("centralizer is a subgroup").greedy_generators();
    let gens: Vec<usize> = gens.iter().map(|&i| elems[i]).collect();
    g.subgroup(&gens)
}

/// `g` modulo the normal closure of `elems`, with the projection.
///
/// Quotient elements are indexed breadth-first over the images of the
/// generators of `g`.
pub fn quotient(g: &FiniteGroup, elems: &[usize]) -> (FiniteGroup, Vec<usize>) {
    let normal = g.normal_closure(elems);
    quotient_by_normal(g, &normal)
}

/// Quotient by a subgroup the caller knows to be normal.
pub fn quotient_by_normal(g: &FiniteGroup, normal: &[usize]) -> (FiniteGroup, Vec<usize>) {
    debug_assert!(g.is_normal(normal));
    // coset label = least element of the coset
    let mut label = vec![usize::MAX; g.order()];
    for x in g.elements() {
        if label[x] == usize::MAX {
            for &k in normal {
                label[g.mul(x, k)] = x;
            }
        }
    }
    let gens: Vec<usize> = g.generators().iter().map(|&s| label[s]).collect();
    let (q, reps) = FiniteGroup::from_closure(0usize, &gens, |&a, &b| label[g.mul(a, b)], usize::MAX)
        .expect("unbounded closure");
    let mut pos = vec![0usize; g.order()];
    for (i, &r) in reps.iter().enumerate() {
        pos[r] = i;
    }
    let proj = g.elements().map(|x| pos[label[x]]).collect();
    (q, proj)
}
