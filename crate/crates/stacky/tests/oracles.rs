//! Library counts against exhaustive enumeration.

use stacky::algebra::catalog::small_groups;
use stacky::algebra::{automorphisms, homomorphisms, FiniteGroup};
use stacky::fpgroup::{hom_count, parse_presentation, presentation_of, todd_coxeter, CosetResult, GroupPresentation};
use stacky::orbifold::triangle_presentation;

fn eval(g: &FiniteGroup, images: &[usize], w: &[i32]) -> usize {
    w.iter().fold(0, |acc, &l| {
        let x = images[l.unsigned_abs() as usize - 1];
        g.mul(acc, if l > 0 { x } else { g.inv(x) })
    })
}

/// Tuples of generator images satisfying every relator.
fn brute_hom_count(p: &GroupPresentation, g: &FiniteGroup) -> u64 {
    let k = p.num_generators();
    let n = g.order();
    let mut count = 0;
    let mut images = vec![0usize; k];
    'outer: loop {
        if p.relators().iter().all(|r| eval(g, &images, r) == 0) {
            count += 1;
        }
        for slot in images.iter_mut() {
            *slot += 1;
            if *slot < n {
                continue 'outer;
            }
            *slot = 0;
        }
        return count;
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

fn preserves_products(g: &FiniteGroup, f: &[usize]) -> bool {
    g.elements().all(|a| g.elements().all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b])))
}

#[test]
fn hom_counts_match_exhaustive_generator_assignment() {
    let presentations = [
        triangle_presentation(2, 3, 3),
        triangle_presentation(2, 3, 4),
        triangle_presentation(3, 3, 3),
        triangle_presentation(2, 4, 4),
        parse_presentation("< a, b | a^4, b^6, a*b^-1 >").unwrap(),
        parse_presentation("< a, b, c | a*b*a^-1*b^-1*c^2 >").unwrap(),
    ];
    for p in &presentations {
        for g in small_groups().iter().filter(|g| g.order() <= 12) {
            assert_eq!(hom_count(p, g).unwrap(), brute_hom_count(p, g), "{:?} into order {}", p.relators(), g.order());
        }
    }
}

#[test]
fn hom_enumeration_matches_exhaustive_maps() {
    let groups: Vec<&FiniteGroup> = small_groups().iter().filter(|g| g.order() <= 6).collect();
    for src in &groups {
        for dst in &groups {
            let expected = brute_hom_count(&presentation_of(src, "g"), dst);
            assert_eq!(homomorphisms(src, dst).unwrap().len() as u64, expected);
        }
    }
}

#[test]
fn automorphism_counts_match_exhaustive_permutations() {
    for g in small_groups().iter().filter(|g| g.order() <= 8) {
        let expected = all_permutations(g.order()).iter().filter(|f| f[0] == 0 && preserves_products(g, f)).count();
        assert_eq!(automorphisms(g).unwrap().order(), expected, "order {}", g.order());
    }
}

#[test]
fn coset_enumeration_recovers_group_orders_from_cayley_presentations() {
    for g in small_groups().iter().filter(|g| g.order() <= 16) {
        match todd_coxeter(&presentation_of(g, "g"), &[], 10_000) {
            CosetResult::Index(i) => assert_eq!(i, g.order()),
            CosetResult::Unknown => panic!("enumeration of order {} did not close", g.order()),
        }
    }
}
