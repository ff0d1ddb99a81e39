//! Second cohomology of a finite group with coefficients in a finite
//! abelian module, from normalized bar cochains.

use num_integer::Integer;

use crate::algebra::{AbelianPresentation, FinAbElement, FinAbGroup, FiniteGroup};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite abelian group with a left action of `gamma` by automorphisms.
#[derive(Clone, Debug)]
pub struct GammaModule {
    gamma: FiniteGroup,
    a: FinAbGroup,
    /// `act[g][i]` is `g . e_i`.
    act: Vec<Vec<FinAbElement>>,
}

impl GammaModule {
    pub fn trivial(gamma: &FiniteGroup, a: &FinAbGroup) -> Self {
        let basis: Vec<FinAbElement> = (0..a.rank()).map(|i| unit(a, i)).collect();
        GammaModule { gamma: gamma.clone(), a: a.clone(), act: vec![basis; gamma.order()] }
    }

    /// Module with `g . x = f(g, x)`; checks that this is an action by
    /// automorphisms.
    pub fn from_action(gamma: &FiniteGroup, a: &FinAbGroup, f: impl Fn(usize, &[u64]) -> FinAbElement) -> Result<Self> {
        let act: Vec<Vec<FinAbElement>> =
            gamma.elements().map(|g| (0..a.rank()).map(|i| a.reduce(&to_i64(&f(g, &unit(a, i))))).collect()).collect();
        let m = GammaModule { gamma: gamma.clone(), a: a.clone(), act };
        let elems = a.elements();
        for g in gamma.elements() {
            for (i, img) in m.act[g].iter().enumerate() {
                if a.element_order(img) > 1 && !a.factors()[i].is_multiple_of(a.element_order(img)) {
                    return Err(Error::invalid(format!("element {g} does not act by a homomorphism")));
                }
            }
            for x in &elems {
                if m.act(g, x) != f(g, x) {
                    return Err(Error::invalid(format!("element {g} does not act additively")));
                }
            }
        }
        for x in &elems {
            if m.act(0, x) != *x {
                return Err(Error::invalid("the identity acts nontrivially"));
            }
            for g in gamma.elements() {
                for h in gamma.elements() {
                    if m.act(gamma.mul(g, h), x) != m.act(g, &m.act(h, x)) {
                        return Err(Error::invalid(format!("not a left action at ({g}, {h})")));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn module(&self) -> &FinAbGroup {
        &self.a
    }

    pub fn act(&self, g: usize, x: &[u64]) -> FinAbElement {
        let mut out = self.a.zero();
        for (i, &k) in x.iter().enumerate() {
            out = self.a.add(&out, &self.a.scale(&self.act[g][i], k as i64));
        }
        out
    }

    pub fn is_trivial_action(&self) -> bool {
        self.act.iter().all(|row| row.iter().enumerate().all(|(i, img)| *img == unit(&self.a, i)))
    }
}

fn unit(a: &FinAbGroup, i: usize) -> FinAbElement {
    let mut v = a.zero();
    v[i] = 1;
    v
}

fn to_i64(x: &[u64]) -> Vec<i64> {
    x.iter().map(|&v| v as i64).collect()
}

/// A normalized 2-cochain `c(g, h)`, zero when either argument is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cocycle {
    n: usize,
    values: Vec<FinAbElement>,
}

impl Cocycle {
    pub fn zero(m: &GammaModule) -> Self {
        let n = m.gamma.order();
        Cocycle { n, values: vec![m.a.zero(); n * n] }
    }

    /// Normalized cochain from any function; values at the identity are
    /// rejected unless zero.
    pub fn from_fn(m: &GammaModule, f: impl Fn(usize, usize) -> FinAbElement) -> Result<Self> {
        let n = m.gamma.order();
        let mut values = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                let v = m.a.reduce(&to_i64(&f(g, h)));
                if (g == 0 || h == 0) && v != m.a.zero() {
                    return Err(Error::invalid("cochain is not normalized"));
                }
                values.push(v);
            }
        }
        Ok(Cocycle { n, values })
    }

    pub fn eval(&self, g: usize, h: usize) -> &FinAbElement {
        &self.values[g * self.n + h]
    }

    pub fn add(&self, m: &GammaModule, other: &Cocycle) -> Cocycle {
        let values = self.values.iter().zip(&other.values).map(|(x, y)| m.a.add(x, y)).collect();
        Cocycle { n: self.n, values }
    }

    pub fn scale(&self, m: &GammaModule, k: i64) -> Cocycle {
        Cocycle { n: self.n, values: self.values.iter().map(|x| m.a.scale(x, k)).collect() }
    }
}

/// `g.c(h,k) - c(gh,k) + c(g,hk) - c(g,h) = 0` for all triples.
pub fn is_cocycle(m: &GammaModule, c: &Cocycle) -> bool {
    let (gm, a) = (&m.gamma, &m.a);
    gm.elements().all(|g| {
        gm.elements().all(|h| {
            gm.elements().all(|k| {
                let lhs = a.add(&m.act(g, c.eval(h, k)), c.eval(g, gm.mul(h, k)));
                let rhs = a.add(c.eval(gm.mul(g, h), k), c.eval(g, h));
                lhs == rhs
            })
        })
    })
}

/// `(df)(g,h) = g.f(h) - f(gh) + f(g)` for a 1-cochain with `f(e) = 0`.
pub fn coboundary(m: &GammaModule, f: &[FinAbElement]) -> Cocycle {
    let (gm, a) = (&m.gamma, &m.a);
    Cocycle::from_fn(m, |g, h| a.add(&a.add(&m.act(g, &f[h]), &a.neg(&f[gm.mul(g, h)])), &f[g]))
        .expect("coboundaries of normalized cochains are normalized")
}

/// `H^2(gamma, A)` with one normalized representative per class.
#[derive(Clone, Debug)]
pub struct H2 {
    module: GammaModule,
    group: FinAbGroup,
    representatives: Vec<Cocycle>,
    /// Reduction data: modulus, kernel slots and inverse column transform.
    e: u64,
    slots: Vec<(usize, u64)>,
    v_inv: Vec<Vec<u64>>,
    pres: AbelianPresentation,
}

impl H2 {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn module(&self) -> &GammaModule {
        &self.module
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Representative of the class with the given coordinates.
    pub fn representative(&self, class: &[u64]) -> &Cocycle {
        &self.representatives[self.group.index_of(class)]
    }

    /// Representatives in class index order; the zero class comes first.
    pub fn representatives(&self) -> &[Cocycle] {
        &self.representatives
    }

    /// Coordinates of the class of a cocycle.
    pub fn class_of(&self, c: &Cocycle) -> Result<FinAbElement> {
        if !is_cocycle(&self.module, c) {
            return Err(Error::invalid("not a 2-cocycle"));
        }
        let x = flatten(&self.module, c);
        let z: Vec<i64> = self
            .slots
            .iter()
            .map(|&(j, g)| {
                let y = dot_mod(&self.v_inv[j], &x, self.e);
                let step = self.e / g;
                debug_assert_eq!(y % step, 0);
                (y / step) as i64
            })
            .collect();
        Ok(self.pres.coords(&z))
    }
}

/// The extension `1 -> A -> E -> gamma -> 1` on pairs `(a, g)` with
/// `(a, g)(b, h) = (a + g.b + c(g, h), gh)`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub group: FiniteGroup,
    /// Image of each element of `A`, indexed by [`FinAbGroup::index_of`].
    pub inclusion: Vec<usize>,
    /// Image of `(0, g)` for each `g`.
    pub section: Vec<usize>,
    /// Image in `gamma` of each element.
    pub projection: Vec<usize>,
}

pub fn extension(m: &GammaModule, c: &Cocycle) -> Result<Extension> {
    if !is_cocycle(m, c) {
        return Err(Error::invalid("not a 2-cocycle"));
    }
    let (gm, a) = (&m.gamma, &m.a);
    let mul = |(x, g): &(FinAbElement, usize), (y, h): &(FinAbElement, usize)| {
        (a.add(&a.add(x, &m.act(*g, y)), c.eval(*g, *h)), gm.mul(*g, *h))
    };
    let mut gens: Vec<(FinAbElement, usize)> = (0..a.rank()).map(|i| (unit(a, i), 0)).collect();
    gens.extend(gm.generators().iter().map(|&g| (a.zero(), g)));
    let (group, elems) = FiniteGroup::from_closure((a.zero(), 0usize), &gens, mul, Limits::default().max_group_order)?;
    let na = a.order() as usize;
    let mut pos = vec![0usize; na * gm.order()];
    for (idx, (x, g)) in elems.iter().enumerate() {
        pos[g * na + a.index_of(x)] = idx;
    }
    let zero = a.index_of(&a.zero());
    Ok(Extension {
        inclusion: (0..na).map(|i| pos[i]).collect(),
        section: gm.elements().map(|g| pos[g * na + zero]).collect(),
        projection: elems.iter().map(|&(_, g)| g).collect(),
        group,
    })
}

/// Unknown for coordinate `i` of `c(g,h)`, `g,h` not the identity.
fn unknown(n: usize, r: usize, g: usize, h: usize, i: usize) -> usize {
    ((g - 1) * (n - 1) + (h - 1)) * r + i
}

fn flatten(m: &GammaModule, c: &Cocycle) -> Vec<u64> {
    let n = m.gamma.order();
    let r = m.a.rank();
    let e = m.a.exponent();
    let mut x = vec![0u64; (n - 1) * (n - 1) * r];
    for g in 1..n {
        for h in 1..n {
            for i in 0..r {
                // coordinate i lives in Z/d_i, embedded in Z/e by lifting
                x[unknown(n, r, g, h, i)] = c.eval(g, h)[i] % e;
            }
        }
    }
    x
}

fn dot_mod(row: &[u64], x: &[u64], e: u64) -> u64 {
    (row.iter().zip(x).map(|(&a, &b)| a as u128 * b as u128 % e as u128).sum::<u128>() % e as u128) as u64
}

pub fn h2(m: &GammaModule) -> Result<H2> {
    h2_with(m, &Limits::default())
}

/// Bar-resolution computation of `H^2`.
///
/// Cocycles are the kernel, over `Z/e` with `e` the exponent of `A`, of the
/// cocycle equations for triples whose last entry is a generator of
/// `gamma`; associativity of the twisted product on `A x gamma` against a
/// generating set implies it everywhere. The kernel comes out of a
/// diagonalization as a sum of cyclic groups, and coboundaries together
/// with the relations `d_i x_i = 0` are divided out by Smith normal form.
pub fn h2_with(m: &GammaModule, limits: &Limits) -> Result<H2> {
    let gm = &m.gamma;
    let n = gm.order();
    if n > limits.max_h2_order {
        return Err(Error::OrderBoundExceeded { what: "acting group", bound: limits.max_h2_order, actual: n });
    }
    let a = &m.a;
    let r = a.rank();
    let e = a.exponent();
    let cols = (n - 1) * (n - 1) * r;
    if cols == 0 {
        let representatives = vec![Cocycle::zero(m)];
        return Ok(H2 {
            module: m.clone(),
            group: FinAbGroup::trivial(),
            representatives,
            e,
            slots: vec![],
            v_inv: vec![],
            pres: AbelianPresentation::new(0, &[]),
        });
    }
    let d = a.factors();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let gens: Vec<usize> = gm.generators().to_vec();
    for g in 1..n {
        for h in 1..n {
            for &s in &gens {
                // g.c(h,s) - c(gh,s) + c(g,hs) - c(g,h), coordinate j, scaled by e/d_j
                for j in 0..r {
                    let scale = e / d[j];
                    let mut row = vec![0u64; cols];
                    let mut put = |idx: usize, coef: i64| {
                        let v = (row[idx] as i128 + coef as i128 * scale as i128).rem_euclid(e as i128);
                        row[idx] = v as u64;
                    };
                    for i in 0..r {
                        let coef = m.act[g][i][j] as i64;
                        if coef != 0 {
                            put(unknown(n, r, h, s, i), coef);
                        }
                    }
                    let gh = gm.mul(g, h);
                    if gh != 0 {
                        put(unknown(n, r, gh, s, j), -1);
                    }
                    let hs = gm.mul(h, s);
                    if hs != 0 {
                        put(unknown(n, r, g, hs, j), 1);
                    }
                    put(unknown(n, r, g, h, j), -1);
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let (diag, v, v_inv) = diagonalize_mod(rows, cols, e);
    // kernel: y_j in (e/g_j) Z/e with g_j = gcd(diag_j, e)
    let slots: Vec<(usize, u64)> =
        (0..cols).map(|j| (j, diag[j].gcd(&e))).filter(|&(_, g)| g > 1).collect();
    let z_of = |x: &[u64]| -> Vec<i64> {
        slots
            .iter()
            .map(|&(j, g)| {
                let y = dot_mod(&v_inv[j], x, e);
                let step = e / g;
                debug_assert_eq!(y % step, 0, "vector lies in the cocycle kernel");
                (y / step) as i64
            })
            .collect()
    };
    let t = slots.len();
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for (k, &(_, g)) in slots.iter().enumerate() {
        let mut row = vec![0i64; t];
        row[k] = g as i64;
        relations.push(row);
    }
    // x_i is only defined modulo d_i
    for col in 0..cols {
        let di = d[col % r];
        if di == e {
            continue;
        }
        let z: Vec<i64> = slots
            .iter()
            .map(|&(j, g)| {
                let y = (v_inv[j][col] as u128 * di as u128 % e as u128) as u64;
                (y / (e / g)) as i64
            })
            .collect();
        relations.push(z);
    }
    for k in 1..n {
        for i in 0..r {
            let mut f = vec![a.zero(); n];
            f[k] = unit(a, i);
            relations.push(z_of(&flatten(m, &coboundary(m, &f))));
        }
    }
    let pres = AbelianPresentation::new(t, &relations);
    debug_assert_eq!(pres.free_rank(), 0);
    let group = pres.torsion();
    let basis = pres.torsion_basis();
    let representatives = group
        .elements()
        .iter()
        .map(|class| {
            let mut y = vec![0u64; cols];
            for (k, &(j, g)) in slots.iter().enumerate() {
                let zk: i128 = class.iter().zip(&basis).map(|(&c, b)| c as i128 * b[k] as i128).sum();
                y[j] = (zk.rem_euclid(g as i128) as u64) * (e / g);
            }
            let x: Vec<u64> = (0..cols).map(|row| dot_mod(&v[row], &y, e)).collect();
            Cocycle::from_fn(m, |g, h| {
                if g == 0 || h == 0 {
                    return a.zero();
                }
                (0..r).map(|i| x[unknown(n, r, g, h, i)] % d[i]).collect()
            })
            .expect("normalized by construction")
        })
        .collect();
    Ok(H2 { module: m.clone(), group, representatives, e, slots, v_inv, pres })
}

/// Diagonalizes a matrix over `Z/e` by row operations and tracked column
/// operations. Returns the diagonal (length `cols`), `V` and `V^-1` with
/// `A V` equal to the diagonal up to row operations.
fn diagonalize_mod(mut a: Vec<Vec<u64>>, cols: usize, e: u64) -> (Vec<u64>, Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let m = a.len();
    let ei = e as i128;
    let md = |x: i128| x.rem_euclid(ei) as u64;
    let mut v: Vec<Vec<u64>> = (0..cols).map(|i| (0..cols).map(|j| u64::from(i == j)).collect()).collect();
    let mut v_inv = v.clone();
    let mut diag = vec![0u64; cols];
    let mut t = 0;
    while t < m.min(cols) {
        // pivot: entry with the smallest gcd against e
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let g = x.gcd(&e);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                        if g == 1 {
                            break;
                        }
                    }
                }
            }
            if best.is_some_and(|(g, _, _)| g == 1) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            v_inv.swap(t, pj);
        }
        loop {
            // clear column t below the pivot with row operations
            for i in t + 1..m {
                let b = a[i][t];
                if b == 0 {
                    continue;
                }
                let p = a[t][t];
                if b.is_multiple_of(p) {
                    let q = (b / p) as i128;
                    for j in t..cols {
                        a[i][j] = md(a[i][j] as i128 - q * a[t][j] as i128);
                    }
                } else {
                    let eg = (p as i64).extended_gcd(&(b as i64));
                    let (x, y, g) = (eg.x as i128, eg.y as i128, eg.gcd as i128);
                    let (pg, bg) = (p as i128 / g, b as i128 / g);
                    for j in t..cols {
                        let (u, w) = (a[t][j] as i128, a[i][j] as i128);
                        a[t][j] = md(x * u + y * w);
                        a[i][j] = md(-bg * u + pg * w);
                    }
                }
            }
            // clear row t right of the pivot with column operations
            let mut changed = false;
            for j in t + 1..cols {
                let b = a[t][j];
                if b == 0 {
                    continue;
                }
                let p = a[t][t];
                if b.is_multiple_of(p) {
                    let q = (b / p) as i128;
                    for row in a.iter_mut() {
                        row[j] = md(row[j] as i128 - q * row[t] as i128);
                    }
                    for row in v.iter_mut() {
                        row[j] = md(row[j] as i128 - q * row[t] as i128);
                    }
                    // V^-1: row t += q row j
                    let rj = v_inv[j].clone();
                    for (x, &y) in v_inv[t].iter_mut().zip(&rj) {
                        *x = md(*x as i128 + q * y as i128);
                    }
                } else {
                    changed = true;
                    let eg = (p as i64).extended_gcd(&(b as i64));
                    let (x, y, g) = (eg.x as i128, eg.y as i128, eg.gcd as i128);
                    let (pg, bg) = (p as i128 / g, b as i128 / g);
                    let combine = |rows: &mut Vec<Vec<u64>>| {
                        for row in rows.iter_mut() {
                            let (u, w) = (row[t] as i128, row[j] as i128);
                            row[t] = md(x * u + y * w);
                            row[j] = md(-bg * u + pg * w);
                        }
                    };
                    combine(&mut a);
                    combine(&mut v);
                    // inverse transform acts on rows t, j of V^-1
                    let (rt, rj) = (v_inv[t].clone(), v_inv[j].clone());
                    for k in 0..cols {
                        let (u, w) = (rt[k] as i128, rj[k] as i128);
                        v_inv[t][k] = md(pg * u + bg * w);
                        v_inv[j][k] = md(-y * u + x * w);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        diag[t] = a[t][t];
        t += 1;
    }
    (diag, v, v_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{abelian, symmetric};
    use crate::algebra::cyclic;

    fn trivial_h2(gamma: &FiniteGroup, a: &FinAbGroup) -> H2 {
        h2(&GammaModule::trivial(gamma, a)).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert!(trivial_h2(&FiniteGroup::trivial(), &FinAbGroup::cyclic(5)).group().is_trivial());
        assert_eq!(trivial_h2(&cyclic(2), &FinAbGroup::cyclic(2)).group(), &FinAbGroup::cyclic(2));
        assert_eq!(
            trivial_h2(&abelian(&[2, 2]), &FinAbGroup::cyclic(2)).group(),
            &FinAbGroup::new(vec![2, 2, 2]).unwrap()
        );
    }

    #[test]
    fn cyclic_groups_give_gcd() {
        for n in 1..=8u64 {
            for k in 2..=8u64 {
                let h = trivial_h2(&cyclic(n as usize), &FinAbGroup::cyclic(k));
                assert_eq!(h.group(), &FinAbGroup::cyclic(n.gcd(&k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn representatives_are_cocycles_in_their_class() {
        for (g, a) in [
            (cyclic(4), FinAbGroup::new(vec![2, 4]).unwrap()),
            (symmetric(3), FinAbGroup::cyclic(6)),
            (abelian(&[2, 2]), FinAbGroup::new(vec![2, 2]).unwrap()),
        ] {
            let h = trivial_h2(&g, &a);
            for (idx, c) in h.representatives().iter().enumerate() {
                assert!(is_cocycle(h.module(), c));
                assert_eq!(h.class_of(c).unwrap(), h.group().element_at(idx));
            }
        }
    }

    #[test]
    fn known_groups() {
        // Schur multiplier of Z2^2 is Z2; H^2(S3, Z) torsion is Z2
        assert_eq!(trivial_h2(&symmetric(3), &FinAbGroup::cyclic(6)).order(), 2);
        assert_eq!(trivial_h2(&abelian(&[2, 2]), &FinAbGroup::cyclic(4)).group(), &FinAbGroup::new(vec![2, 2, 2]).unwrap());
        assert_eq!(trivial_h2(&cyclic(4), &FinAbGroup::new(vec![2, 4]).unwrap()).group(), &FinAbGroup::new(vec![2, 4]).unwrap());
        // H^2(S4, F2) is two-dimensional
        assert_eq!(trivial_h2(&symmetric(4), &FinAbGroup::cyclic(2)).group(), &FinAbGroup::new(vec![2, 2]).unwrap());
    }

    #[test]
    fn twisted_coefficients() {
        // Z2 acting on Z3 by inversion: fixed points are trivial
        let gamma = cyclic(2);
        let a = FinAbGroup::cyclic(3);
        let m = GammaModule::from_action(&gamma, &a, |g, x| if g == 0 { x.to_vec() } else { a.neg(x) }).unwrap();
        assert!(h2(&m).unwrap().group().is_trivial());
        // Z2 swapping the factors of Z2 x Z2: induced module, cohomology vanishes
        let a = FinAbGroup::new(vec![2, 2]).unwrap();
        let m = GammaModule::from_action(&gamma, &a, |g, x| if g == 0 { x.to_vec() } else { vec![x[1], x[0]] }).unwrap();
        assert!(h2(&m).unwrap().group().is_trivial());
        // Z2 acting on Z4 by inversion: H^2 = fixed points / norms = Z2 / 0
        let a = FinAbGroup::cyclic(4);
        let m = GammaModule::from_action(&gamma, &a, |g, x| if g == 0 { x.to_vec() } else { a.neg(x) }).unwrap();
        assert_eq!(h2(&m).unwrap().group(), &FinAbGroup::cyclic(2));
    }

    #[test]
    fn extensions_of_z2_by_z2() {
        let m = GammaModule::trivial(&cyclic(2), &FinAbGroup::cyclic(2));
        let h = h2(&m).unwrap();
        let split = extension(&m, &h.representatives()[0]).unwrap();
        let twisted = extension(&m, &h.representatives()[1]).unwrap();
        assert_eq!(split.group.exponent(), 2);
        assert_eq!(twisted.group.exponent(), 4);
        assert_eq!(twisted.group.order(), 4);
    }

    #[test]
    fn bound_is_enforced() {
        let limits = Limits { max_h2_order: 4, ..Limits::default() };
        let m = GammaModule::trivial(&symmetric(3), &FinAbGroup::cyclic(2));
        assert!(matches!(h2_with(&m, &limits), Err(Error::OrderBoundExceeded { .. })));
    }
}
