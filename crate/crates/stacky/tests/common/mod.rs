//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's cohomology or butterfly constructions.
#![allow(dead_code)]

use std::collections::HashMap;

use stacky::algebra::catalog::small_groups;
use stacky::algebra::{automorphisms, homomorphisms, FiniteGroup};
use stacky::twogroup::{Butterfly, CrossedModule};

/// `|H^2(Z_n, Z_m)|` with trivial action, as `|Z^2| / |B^2|` over
/// normalized cochains.
pub fn brute_h2_order(n: usize, m: usize) -> usize {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut f = vec![0usize; n * n];
    let mut cocycles = 0usize;
    fn rec(i: usize, cells: &[(usize, usize)], f: &mut [usize], n: usize, m: usize, count: &mut usize) {
        if i == cells.len() {
            let ok = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| (f[a * n + b] + f[((a + b) % n) * n + c]) % m == (f[b * n + c] + f[a * n + (b + c) % n]) % m)
                })
            });
            if ok {
                *count += 1;
            }
            return;
        }
        let (a, b) = cells[i];
        for v in 0..m {
            f[a * n + b] = v;
            rec(i + 1, cells, f, n, m, count);
        }
    }
    rec(0, &cells, &mut f, n, m, &mut cocycles);
    let mut boundaries = std::collections::HashSet::new();
    let mut c = vec![0usize; n];
    loop {
        let d: Vec<usize> = (0..n * n).map(|i| (c[i / n] + c[i % n] + m - c[(i / n + i % n) % n]) % m).collect();
        boundaries.insert(d);
        let mut k = 1;
        while k < n && c[k] + 1 == m {
            c[k] = 0;
            k += 1;
        }
        if k >= n {
            break;
        }
        c[k] += 1;
    }
    cocycles / boundaries.len()
}

/// Right actions of `g1` on `g2` by automorphisms compatible with `phi`
/// on generators; full axioms are left to `CrossedModule::new`.
fn candidate_actions(g2: &FiniteGroup, g1: &FiniteGroup, phi: &[usize], auts: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let gens = g1.generators().to_vec();
    let per_gen: Vec<Vec<&Vec<usize>>> = gens
        .iter()
        .map(|&s| {
            auts.iter()
                .filter(|t| g2.elements().all(|g| phi[t[g]] == g1.conj(phi[g], s)))
                .filter(|t| g2.elements().filter(|&h| phi[h] == s).all(|h| g2.elements().all(|g| t[g] == g2.conj(g, h))))
                .collect()
        })
        .collect();
    let words = g1.words();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if per_gen.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let thetas: Vec<&Vec<usize>> = choice.iter().zip(&per_gen).map(|(&i, c)| c[i]).collect();
        let table: Vec<Vec<usize>> = words
            .iter()
            .map(|w| {
                let mut row: Vec<usize> = g2.elements().collect();
                for &s in w {
                    row = row.iter().map(|&g| thetas[s][g]).collect();
                }
                row
            })
            .collect();
        let consistent = g1.elements().all(|x| {
            gens.iter().enumerate().all(|(i, &s)| {
                let xs = g1.mul(x, s);
                g2.elements().all(|g| table[xs][g] == thetas[i][table[x][g]])
            })
        });
        if consistent {
            out.push(table);
        }
        let mut k = 0;
        while k < choice.len() && choice[k] + 1 == per_gen[k].len() {
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
        choice[k] += 1;
    }
    out
}

/// Least relabeling of `(phi, action)` under `Aut(G2) x Aut(G1)`:
/// `phi' = b phi a^-1` and `action'[b(x)][a(g)] = a(action[x][g])`.
fn canonical_key(x: &CrossedModule, aut2: &[Vec<usize>], aut1: &[Vec<usize>]) -> Vec<usize> {
    let (n2, n1) = (x.g2().order(), x.g1().order());
    let mut best: Option<Vec<usize>> = None;
    let mut key = vec![0usize; n2 + n1 * n2];
    for a in aut2 {
        for b in aut1 {
            for g in 0..n2 {
                key[a[g]] = b[x.phi()[g]];
                for y in 0..n1 {
                    key[n2 + b[y] * n2 + a[g]] = a[x.act(g, y)];
                }
            }
            if best.as_ref().is_none_or(|k| key < *k) {
                best = Some(key.clone());
            }
        }
    }
    best.expect("automorphism groups are nonempty")
}

/// One crossed module per isomorphism type on catalog groups with
/// `|G1||G2| <= bound`.
pub fn crossed_corpus(bound: usize) -> Vec<CrossedModule> {
    let mut out = Vec::new();
    for g2 in small_groups().iter().filter(|g| g.order() <= bound) {
        let aut2 = automorphisms(g2).expect("catalog group").maps;
        for g1 in small_groups().iter().filter(|g| g.order() * g2.order() <= bound) {
            let aut1 = automorphisms(g1).expect("catalog group").maps;
            let mut seen = std::collections::HashSet::new();
            for phi in homomorphisms(g2, g1).expect("small groups") {
                for action in candidate_actions(g2, g1, &phi, &aut2) {
                    if let Ok(x) = CrossedModule::new(g2.clone(), g1.clone(), phi.clone(), action) {
                        if seen.insert(canonical_key(&x, &aut2, &aut1)) {
                            out.push(x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Least element of each coset of `im phi`, indexed by `pi1`.
pub fn coset_reps(x: &CrossedModule) -> (Vec<usize>, Vec<usize>) {
    let projection = x.homotopy_groups().projection;
    let pi1_order = projection.iter().max().map_or(1, |&q| q + 1);
    let mut rep = vec![usize::MAX; pi1_order];
    for (y, &q) in projection.iter().enumerate() {
        rep[q] = rep[q].min(y);
    }
    (rep, projection)
}

/// Normalized lax maps `gamma -> X` with a fixed 1-cell `tau` (coset
/// representatives), modulo gauge by normalized `h: gamma -> ker phi`.
#[derive(Debug)]
pub struct LaxClassesForChi {
    pub tau: Vec<usize>,
    /// Each solution `f` (row-major over `gamma x gamma`) to its orbit.
    pub orbit_of: HashMap<Vec<usize>, usize>,
    pub orbits: usize,
}

/// The oracle's classification, keyed by `chi: gamma -> pi1`.
pub fn lax_classes(gamma: &FiniteGroup, x: &CrossedModule) -> HashMap<Vec<usize>, LaxClassesForChi> {
    let (g1, g2) = (x.g1(), x.g2());
    let phi = x.phi();
    let n = gamma.order();
    let (rep, projection) = coset_reps(x);
    let in_image: Vec<bool> = {
        let mut v = vec![false; g1.order()];
        for &y in phi {
            v[y] = true;
        }
        v
    };
    let ker: Vec<usize> = g2.elements().filter(|&g| phi[g] == g1.identity()).collect();
    let defect = |tau: &[usize], a: usize, b: usize| g1.mul(g1.mul(tau[a], tau[b]), g1.inv(tau[gamma.mul(a, b)]));

    // 1-cells: tau(0) = 1 and every defect lies in im phi.
    let mut taus = Vec::new();
    let mut tau = vec![0usize; n];
    fn rec_tau(
        i: usize,
        n: usize,
        rep: &[usize],
        tau: &mut Vec<usize>,
        ok: &dyn Fn(&[usize], usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            out.push(tau.clone());
            return;
        }
        for &r in rep {
            tau[i] = r;
            if ok(tau, i) {
                rec_tau(i + 1, n, rep, tau, ok, out);
            }
        }
    }
    let ok = |tau: &[usize], i: usize| {
        (0..=i).all(|a| (0..=i).all(|b| gamma.mul(a, b) > i || in_image[defect(tau, a, b)]))
    };
    rec_tau(1, n, &rep, &mut tau, &ok, &mut taus);

    let mut out = HashMap::new();
    for tau in taus {
        let chi: Vec<usize> = tau.iter().map(|&y| projection[y]).collect();
        let fibre: Vec<Vec<usize>> = (0..n * n)
            .map(|i| {
                let t = defect(&tau, i / n, i % n);
                g2.elements().filter(|&g| phi[g] == t).collect()
            })
            .collect();
        let inv_tau: Vec<usize> = tau.iter().map(|&y| g1.inv(y)).collect();
        // The cocycle identity for (a, b, c) is checked once its last cell is set.
        let cells: Vec<usize> = (0..n * n).filter(|&i| i / n != 0 && i % n != 0).collect();
        let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n * n];
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    let ab = gamma.mul(a, b);
                    let bc = gamma.mul(b, c);
                    let last = [a * n + b, ab * n + c, b * n + c, a * n + bc].into_iter().max().unwrap();
                    checks[last].push((a, b, c));
                }
            }
        }
        let holds = |f: &[usize], (a, b, c): (usize, usize, usize)| {
            let ab = gamma.mul(a, b);
            let bc = gamma.mul(b, c);
            g2.mul(f[a * n + b], f[ab * n + c]) == g2.mul(x.act(f[b * n + c], inv_tau[a]), f[a * n + bc])
        };
        let mut f = vec![g2.identity(); n * n];
        let mut solutions = Vec::new();
        fn rec_f(
            k: usize,
            cells: &[usize],
            fibre: &[Vec<usize>],
            checks: &[Vec<(usize, usize, usize)>],
            holds: &dyn Fn(&[usize], (usize, usize, usize)) -> bool,
            f: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if k == cells.len() {
                out.push(f.clone());
                return;
            }
            let i = cells[k];
            for &v in &fibre[i] {
                f[i] = v;
                if checks[i].iter().all(|&t| holds(f, t)) {
                    rec_f(k + 1, cells, fibre, checks, holds, f, out);
                }
            }
        }
        // Cells at the boundary row and column are fixed to the identity;
        // their checks are vacuous but the defect must be trivial there.
        assert!((0..n).all(|a| fibre[a].contains(&g2.identity()) && fibre[a * n].contains(&g2.identity())));
        rec_f(0, &cells, &fibre, &checks, &holds, &mut f, &mut solutions);
        assert!(!solutions.is_empty(), "a split crossed module admits a lax lift of every 1-cell");
        assert!(is_associative(gamma, x, &tau, &solutions[0]));

        let index: HashMap<Vec<usize>, usize> = solutions.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut orbit = vec![usize::MAX; solutions.len()];
        let mut orbits = 0;
        for start in 0..solutions.len() {
            if orbit[start] != usize::MAX {
                continue;
            }
            orbit[start] = orbits;
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for g in 1..n {
                    for &z in &ker {
                        let mut h = vec![g2.identity(); n];
                        h[g] = z;
                        let moved = gauge(gamma, x, &tau, &h, &solutions[s]);
                        let t = *index.get(&moved).expect("gauge preserves solutions");
                        if orbit[t] == usize::MAX {
                            orbit[t] = orbits;
                            stack.push(t);
                        }
                    }
                }
            }
            orbits += 1;
        }
        let orbit_of = solutions.into_iter().zip(orbit).collect();
        out.insert(chi, LaxClassesForChi { tau, orbit_of, orbits });
    }
    out
}

/// `f'(a, b) = h(a) h(b)^(tau(a)^-1) f(a, b) h(ab)^-1`.
fn gauge(gamma: &FiniteGroup, x: &CrossedModule, tau: &[usize], h: &[usize], f: &[usize]) -> Vec<usize> {
    let (g1, g2) = (x.g1(), x.g2());
    let n = gamma.order();
    (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            let t = g2.mul(h[a], x.act(h[b], g1.inv(tau[a])));
            g2.mul(g2.mul(t, f[i]), g2.inv(h[gamma.mul(a, b)]))
        })
        .collect()
}

/// `(g, a)(h, b) = (g h^(tau(a)^-1) f(a, b), ab)` on `G2 x gamma`.
fn is_associative(gamma: &FiniteGroup, x: &CrossedModule, tau: &[usize], f: &[usize]) -> bool {
    let (g1, g2) = (x.g1(), x.g2());
    let n = gamma.order();
    let mul = |(g, a): (usize, usize), (h, b): (usize, usize)| {
        (g2.mul(g2.mul(g, x.act(h, g1.inv(tau[a]))), f[a * n + b]), gamma.mul(a, b))
    };
    let elems: Vec<(usize, usize)> = g2.elements().flat_map(|g| gamma.elements().map(move |a| (g, a))).collect();
    elems.iter().all(|&p| elems.iter().all(|&q| elems.iter().all(|&r| mul(mul(p, q), r) == mul(p, mul(q, r)))))
}

/// Reads a butterfly as a normalized lax map: `chi` and the cocycle `f`
/// for lifts `x_a` with `rho(x_a)` the least element of its coset.
/// `cosets` is `coset_reps` of the target crossed module.
pub fn butterfly_to_lax(b: &Butterfly, cosets: &(Vec<usize>, Vec<usize>)) -> (Vec<usize>, Vec<usize>) {
    let (rep, projection) = cosets;
    let (e, gamma) = (&b.e, &b.gamma);
    let n = gamma.order();
    let mut chi = vec![usize::MAX; n];
    for y in e.elements() {
        chi[b.proj[y]] = projection[b.rho[y]];
    }
    let lift: Vec<usize> = (0..n)
        .map(|a| {
            if a == gamma.identity() {
                e.identity()
            } else {
                e.elements().find(|&y| b.proj[y] == a && b.rho[y] == rep[chi[a]]).expect("fibre meets every coset lift")
            }
        })
        .collect();
    let mut inj_inv = vec![usize::MAX; e.order()];
    for (g, &y) in b.inj.iter().enumerate() {
        inj_inv[y] = g;
    }
    let f = (0..n * n)
        .map(|i| {
            let (a, c) = (i / n, i % n);
            let y = e.mul(e.mul(lift[a], lift[c]), e.inv(lift[gamma.mul(a, c)]));
            let g = inj_inv[y];
            assert!(g != usize::MAX, "lift defect lies over the identity");
            g
        })
        .collect();
    (chi, f)
}
