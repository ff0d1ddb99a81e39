//! Named groups and the catalog of all groups of order at most 24.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::abelian::FinAbGroup;
use super::character::abelianization;
use super::extension::cyclic_extension;
use super::group::{cyclic, FiniteGroup};
use super::hom::{automorphisms, is_isomorphic};
use super::perm::Perm;
use super::structure::center_elements;

/// Largest order in the catalog.
pub const CATALOG_MAX_ORDER: usize = 24;

/// Dihedral group of order `2n`: rotations `(r, 0)` and reflections `(r, 1)`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mul = |&(r1, s1): &(usize, usize), &(r2, s2): &(usize, usize)| {
        let r = if s1 == 0 { (r1 + r2) % n } else { (r1 + n - r2) % n };
        (r, s1 ^ s2)
    };
    let gens: Vec<(usize, usize)> = if n == 1 { vec![(0, 1)] } else { vec![(1 % n, 0), (0, 1)] };
    let (g, _) = FiniteGroup::from_closure((0, 0), &gens, mul, usize::MAX).expect("dihedral");
    g.with_name(format!("D{n}"))
}

/// Dicyclic group of order `4n`: `<a, x | a^2n, x^2 = a^n, x^-1 a x = a^-1>`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let base = cyclic(2 * n);
    let inversion: Vec<usize> = base.elements().map(|x| base.inv(x)).collect();
    let top = base.pow(1, n as i64);
    let ext = cyclic_extension(&base, &inversion, top, 2).expect("dicyclic data is compatible");
    let name = if n == 2 { "Q8".to_string() } else { format!("Dic{n}") };
    ext.group.with_name(name)
}

pub fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return FiniteGroup::trivial().with_name("1");
    }
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let mut swap: Vec<u32> = (0..n as u32).collect();
    swap.swap(0, 1);
    let gens = [Perm::from_images(cycle).expect("cycle"), Perm::from_images(swap).expect("transposition")];
    let gens = if n == 2 { &gens[..1] } else { &gens[..] };
    FiniteGroup::from_permutations(n, gens).expect("symmetric group within bounds").with_name(format!("S{n}"))
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n <= 2 {
        return FiniteGroup::trivial().with_name("1");
    }
    let gens: Vec<Perm> = (2..n)
        .map(|k| {
            let mut img: Vec<u32> = (0..n as u32).collect();
            img[0] = 1;
            img[1] = k as u32;
            img[k] = 0;
            Perm::from_images(img).expect("3-cycle")
        })
        .collect();
    FiniteGroup::from_permutations(n, &gens).expect("alternating group within bounds").with_name(format!("A{n}"))
}

/// Abelian group from arbitrary cyclic factor orders.
pub fn abelian(orders: &[u64]) -> FiniteGroup {
    let a = FinAbGroup::from_cyclic_orders(orders);
    if a.is_trivial() {
        return FiniteGroup::trivial().with_name("1");
    }
    a.to_finite_group()
}

pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (g, _, _) = FiniteGroup::direct_product(a, b);
    let name = format!("{}x{}", a.name().unwrap_or("?"), b.name().unwrap_or("?"));
    g.with_name(name)
}

/// Isomorphism invariants used to bucket groups before a full test.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Fingerprint {
    order: usize,
    histogram: Vec<(u64, usize)>,
    abelianization: FinAbGroup,
    center: usize,
}

fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    Fingerprint {
        order: g.order(),
        histogram: g.order_histogram(),
        abelianization: abelianization(g),
        center: center_elements(g).len(),
    }
}

/// Nonabelian groups with a conventional name, tried in order.
fn named_nonabelian(order: usize) -> Vec<FiniteGroup> {
    let mut v = Vec::new();
    if order.is_multiple_of(2) && order >= 6 {
        v.push(dihedral(order / 2));
    }
    if order.is_multiple_of(4) && order >= 8 {
        v.push(dicyclic(order / 4));
    }
    match order {
        12 => v.push(alternating(4)),
        24 => v.push(symmetric(4)),
        60 => v.push(alternating(5)),
        _ => {}
    }
    v
}

/// Conventional name if one applies, else `None`.
pub fn recognize(g: &FiniteGroup) -> Option<String> {
    if g.order() == 1 {
        return Some("1".into());
    }
    if g.is_abelian() {
        return Some(abelianization(g).to_string());
    }
    if g.order() > 60 {
        return None;
    }
    named_nonabelian(g.order())
        .into_iter()
        .find(|h| matches!(is_isomorphic(g, h), Ok(Some(_))))
        .and_then(|h| h.name().map(String::from))
}

fn build_catalog() -> Vec<FiniteGroup> {
    let mut by_order: Vec<Vec<FiniteGroup>> = vec![Vec::new(); CATALOG_MAX_ORDER + 1];
    by_order[1].push(FiniteGroup::trivial().with_name("1"));
    for n in 2..=CATALOG_MAX_ORDER {
        let mut found: Vec<FiniteGroup> = Vec::new();
        let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
        let primes: Vec<usize> = (2..=n).filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0)).collect();
        for p in primes {
            // Every group here is solvable, hence an extension of a group of
            // index p by Z_p.
            for base in by_order[n / p].clone() {
                let aut = automorphisms(&base).expect("catalog groups are small");
                for theta in &aut.maps {
                    let mut theta_p: Vec<usize> = base.elements().collect();
                    for _ in 0..p {
                        theta_p = theta_p.iter().map(|&x| theta[x]).collect();
                    }
                    for top in base.elements() {
                        if theta[top] != top {
                            continue;
                        }
                        let top_inv = base.inv(top);
                        if base.elements().any(|y| theta_p[y] != base.mul(base.mul(top, y), top_inv)) {
                            continue;
                        }
                        let g = cyclic_extension(&base, theta, top, p).expect("compatible data").group;
                        let fp = fingerprint(&g);
                        let bucket = buckets.entry(fp).or_default();
                        if bucket.iter().any(|&i| matches!(is_isomorphic(&found[i], &g), Ok(Some(_)))) {
                            continue;
                        }
                        bucket.push(found.len());
                        found.push(g);
                    }
                }
            }
        }
        found.sort_by_key(|g| (!g.is_abelian(), abelianization(g).factors().to_vec(), g.order_histogram()));
        let mut unnamed = 0;
        for g in &mut found {
            let name = match recognize(g) {
                Some(s) => s,
                None => {
                    unnamed += 1;
                    format!("{n}.{unnamed}")
                }
            };
            g.set_name(name);
        }
        by_order[n] = found;
    }
    by_order.into_iter().flatten().collect()
}

/// Short JSON description of a group: a conventional name when one is
/// known, else `"?"`, with the order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub order: usize,
}

pub fn describe(g: &FiniteGroup) -> GroupDescriptor {
    GroupDescriptor { name: recognize(g).unwrap_or_else(|| "?".into()), order: g.order() }
}

/// One group of each isomorphism type of order at most 24, sorted by order.
pub fn small_groups() -> &'static [FiniteGroup] {
    static CATALOG: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// The catalog plus the icosahedral group.
pub fn default_panel() -> Vec<FiniteGroup> {
    let mut v = small_groups().to_vec();
    v.push(alternating(5));
    v
}

/// A handful of small groups for quick profiles.
pub fn minimal_panel() -> Vec<FiniteGroup> {
    vec![
        cyclic(2),
        cyclic(3),
        cyclic(4),
        abelian(&[2, 2]),
        symmetric(3),
        dihedral(4),
        quaternion(),
        alternating(4),
        alternating(5),
    ]
}
