//! Gerbes with finite generic stabilizer over stacky discs and over
//! weighted projective lines `P(m, n)`.
//!
//! A gerbe over the disc with one orbifold point of order `n` and trivial
//! band is determined by its local group `G_a = H x Z / (a, -n)` for a
//! central `a`, up to `n`-th powers of central elements. Over `P(m, n)`
//! the classes are the central elements themselves, glued from two disc
//! charts.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::catalog::{describe, GroupDescriptor};
use crate::algebra::hom::{automorphisms, check_hom, is_isomorphic};
use crate::algebra::structure::{center, center_elements};
use crate::algebra::{cyclic, cyclic_extension, quotient, CyclicExtension, FinAbElement, FinAbGroup, FiniteGroup};
use crate::error::{Error, Result};
use crate::fpgroup::{cayley_relators, finite_quotient, invert, shift, GroupPresentation, Word};
use crate::limits::Limits;
use crate::twogroup::cohomology::{h2, GammaModule};

/// A trivial-band gerbe over the disc with an order-`n` point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnGerbeClass {
    pub n: u64,
    /// Least element of its coset of `n Z(H)`.
    pub a: usize,
}

/// The `n`-th powers of central elements, sorted.
fn nth_powers(h: &FiniteGroup, n: u64) -> Vec<usize> {
    let mut v: Vec<usize> = center_elements(h).into_iter().map(|z| h.pow(z, n as i64)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// One class per element of `Z(H) / n Z(H)`.
pub fn dn_trivial_band_classes(h: &FiniteGroup, n: u64) -> Result<Vec<DnGerbeClass>> {
    if n == 0 {
        return Err(Error::invalid("the orbifold point needs order n >= 1"));
    }
    let powers = nth_powers(h, n);
    let mut seen = vec![false; h.order()];
    let mut out = Vec::new();
    for z in center_elements(h) {
        if seen[z] {
            continue;
        }
        for &p in &powers {
            seen[h.mul(z, p)] = true;
        }
        out.push(DnGerbeClass { n, a: z });
    }
    Ok(out)
}

/// True when `a` and `b` agree modulo `n Z(H)`.
pub fn same_dn_class(h: &FiniteGroup, n: u64, a: usize, b: usize) -> bool {
    nth_powers(h, n).contains(&h.mul(h.inv(b), a))
}

/// `G_a`: `H` with a central `t` of order `n` modulo `H`, `t^n = a`.
pub fn gerbe_group(h: &FiniteGroup, n: u64, a: usize) -> Result<CyclicExtension> {
    if n == 0 {
        return Err(Error::invalid("the orbifold point needs order n >= 1"));
    }
    if a >= h.order() {
        return Err(Error::invalid(format!("element {a} is not in H")));
    }
    if h.generators().iter().any(|&x| h.mul(a, x) != h.mul(x, a)) {
        return Err(Error::NotCentral { element: a });
    }
    let identity: Vec<usize> = h.elements().collect();
    let mut ext = cyclic_extension(h, &identity, a, n as usize)?;
    ext.group.set_name(format!("G_{a}"));
    Ok(ext)
}

/// The class in `Z(H)/nZ(H)` of an extension `H -> G -> Z_n` whose
/// generator of `Z_n` acts on `H` by an inner automorphism.
///
/// Takes `g = lift`, an `x` in `H` conjugating like `g`, and returns
/// `(x^-1 g)^n`, which is central in `H`.
pub fn recover_class(h: &FiniteGroup, ext: &CyclicExtension, n: u64) -> Result<usize> {
    let g = &ext.group;
    let t = ext.lift;
    let mut preimage = vec![usize::MAX; g.order()];
    for (x, &y) in ext.inclusion.iter().enumerate() {
        preimage[y] = x;
    }
    let acts_like = |x: usize| {
        h.generators().iter().all(|&s| g.conj(ext.inclusion[s], t) == ext.inclusion[h.conj(s, x)])
    };
    let x = h.elements().find(|&x| acts_like(x)).ok_or_else(|| Error::invalid("the band is not inner"))?;
    let c = g.mul(g.inv(ext.inclusion[x]), t);
    let a = preimage[g.pow(c, n as i64)];
    debug_assert!(a != usize::MAX);
    Ok(a)
}

/// Extensions of a gerbe over the punctured disc, with band `theta`, to a
/// gerbe over the disc with an order-`n` point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DInftyExtension {
    /// `theta^n` is inner.
    pub extends: bool,
    /// Number of extensions: `|H^2(Z_n, Z(H))|` when they exist, else 0.
    pub count: u64,
}

pub fn dinfty_extension(h: &FiniteGroup, theta: &[usize], n: u64) -> Result<DInftyExtension> {
    if n == 0 {
        return Err(Error::invalid("the orbifold point needs order n >= 1"));
    }
    if theta.len() != h.order() || theta.iter().any(|&x| x >= h.order()) {
        return Err(Error::invalid("theta must be an element map of H"));
    }
    check_hom(h, h, theta)?;
    let mut hit = vec![false; h.order()];
    for &x in theta {
        if std::mem::replace(&mut hit[x], true) {
            return Err(Error::invalid("theta is not bijective"));
        }
    }
    let power = |k: u64, x: usize| (0..k).fold(x, |y, _| theta[y]);
    let inner = h.elements().any(|c| h.generators().iter().all(|&s| power(n, s) == h.conj(s, c)));
    if !inner {
        return Ok(DInftyExtension { extends: false, count: 0 });
    }
    let z = center(h);
    let gamma = cyclic(n as usize);
    let module = GammaModule::from_action(&gamma, &z.group, |k, x| {
        let y = power(k as u64, z.embed(h, x));
        z.coords[&y].clone()
    })?;
    Ok(DInftyExtension { extends: true, count: h2(&module)?.order() })
}

/// The fixed pair `(r, s)` with `s m + r n = 1`: `s = 1, r = 0` when
/// `m = 1`, otherwise `0 <= s < n`.
pub fn rs_pair(m: u64, n: u64) -> Result<(i64, i64)> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    if m == 1 {
        return Ok((0, 1));
    }
    let (m, n) = (m as i64, n as i64);
    let s = (0..n).find(|s| (s * m).rem_euclid(n) == 1 % n).expect("m is a unit mod n");
    Ok(((1 - s * m) / n, s))
}

/// A gerbe over `P(m, n)` with generic stabilizer `H`, given by a central
/// element.
#[derive(Clone, Debug)]
pub struct PGerbeClass {
    pub h: FiniteGroup,
    pub m: u64,
    pub n: u64,
    pub a: usize,
    pub r: i64,
    pub s: i64,
}

impl PGerbeClass {
    pub fn new(h: &FiniteGroup, m: u64, n: u64, a: usize) -> Result<Self> {
        let (r, s) = rs_pair(m, n)?;
        if a >= h.order() {
            return Err(Error::invalid(format!("element {a} is not in H")));
        }
        if h.generators().iter().any(|&x| h.mul(a, x) != h.mul(x, a)) {
            return Err(Error::NotCentral { element: a });
        }
        Ok(PGerbeClass { h: h.clone(), m, n, a, r, s })
    }
}

/// The two disc charts of a gerbe over `P(m, n)` and their van Kampen
/// pushout.
#[derive(Clone, Debug)]
pub struct GammaConstruction {
    /// Local group `G_{s a}` at the order-`n` point.
    pub chart_n: CyclicExtension,
    /// Local group `G_{r a}` at the order-`m` point.
    pub chart_m: CyclicExtension,
    /// Both local groups, with `H` identified and `t_n = t_m^-1`.
    pub presentation: GroupPresentation,
    pub pushout: FiniteGroup,
    /// `H / <a>`.
    pub quotient: FiniteGroup,
    /// Isomorphism from the pushout to `H / <a>`.
    pub certificate: Option<Vec<usize>>,
}

impl GammaConstruction {
    /// `m x + n y`, where `z = c t` generates the loop around the equator,
    /// `x` is `z^n` in the order-`n` chart and `y` is `z^-m` in the
    /// order-`m` chart. Independent of the central `c`.
    pub fn alpha(&self, h: &FiniteGroup, m: u64, n: u64, c: usize) -> usize {
        let (gn, gm) = (&self.chart_n, &self.chart_m);
        let back = |ext: &CyclicExtension, y: usize| ext.inclusion.iter().position(|&v| v == y).expect("power lies in H");
        let zn = gn.group.mul(gn.inclusion[c], gn.lift);
        let x = back(gn, gn.group.pow(zn, n as i64));
        let z_inv = gm.group.mul(gm.lift, gm.inclusion[h.inv(c)]);
        let y = back(gm, gm.group.pow(z_inv, m as i64));
        h.mul(h.pow(x, m as i64), h.pow(y, n as i64))
    }
}

pub fn gamma_construct(cls: &PGerbeClass) -> Result<GammaConstruction> {
    let h = &cls.h;
    let chart_n = gerbe_group(h, cls.n, h.pow(cls.a, cls.s))?;
    let chart_m = gerbe_group(h, cls.m, h.pow(cls.a, cls.r))?;
    let (rels_n, words_n) = cayley_relators(&chart_n.group);
    let (rels_m, words_m) = cayley_relators(&chart_m.group);
    let k = chart_n.group.generators().len();
    let mut names: Vec<String> = (1..=k).map(|i| format!("u{i}")).collect();
    names.extend((1..=chart_m.group.generators().len()).map(|i| format!("v{i}")));
    let mut rels: Vec<Word> = rels_n;
    rels.extend(rels_m.iter().map(|r| shift(r, k)));
    for &x in h.generators() {
        let mut r = words_n[chart_n.inclusion[x]].clone();
        r.extend(invert(&shift(&words_m[chart_m.inclusion[x]], k)));
        rels.push(r);
    }
    let mut glue = words_n[chart_n.lift].clone();
    glue.extend(shift(&words_m[chart_m.lift], k));
    rels.push(glue);
    let presentation = GroupPresentation::new(names, rels)?;
    let pushout = finite_quotient(&presentation)?
        .ok_or(Error::BudgetExceeded { budget: Limits::default().max_cosets as u64 })?
        .group;
    let (quotient, _) = quotient(h, &[cls.a]);
    let certificate = is_isomorphic(&pushout, &quotient)?;
    Ok(GammaConstruction { chart_n, chart_m, presentation, pushout, quotient, certificate })
}

/// One `Out(H)`-orbit of central elements, with the fundamental group of
/// the corresponding gerbe over `P(m, n)`.
#[derive(Clone, Debug, Serialize)]
pub struct POrbit {
    /// Least element of the orbit.
    pub a: usize,
    pub pi1: GroupDescriptor,
    pub orbit: Vec<usize>,
    /// `(m |H|, n |H|)` when the gerbe is simply connected, hence the
    /// weighted projective line with those weights.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weighted_projective: Option<(u64, u64)>,
    #[serde(skip)]
    pub pi1_group: FiniteGroup,
}

pub fn classify_over_p(h: &FiniteGroup, m: u64, n: u64) -> Result<Vec<POrbit>> {
    rs_pair(m, n)?;
    let orbits = automorphisms(h)?.center_orbits();
    let out = orbits
        .into_par_iter()
        .map(|orbit| {
            let a = orbit[0];
            let (pi1_group, _) = quotient(h, &[a]);
            let d = h.order() as u64;
            let weighted_projective = (pi1_group.order() == 1).then_some((m * d, n * d));
            POrbit { a, pi1: describe(&pi1_group), orbit, weighted_projective, pi1_group }
        })
        .collect();
    Ok(out)
}

/// Exactness of
/// `0 -> A[n] + A[m] -> A -(mn)-> A -(s, r)-> A/nA + A/mA -> 0`,
/// checked by enumerating kernels and images.
pub fn mayer_vietoris_check(a: &FinAbGroup, m: u64, n: u64) -> Result<bool> {
    let (r, s) = rs_pair(m, n)?;
    let elems = a.elements();
    let torsion = |k: u64| -> Vec<FinAbElement> { elems.iter().filter(|x| k.is_multiple_of(a.element_order(x))).cloned().collect() };
    let (tn, tm) = (torsion(n), torsion(m));
    let multiples = |k: u64| -> Vec<FinAbElement> {
        (0..a.rank()).map(|i| a.scale(&unit(a, i), k as i64)).collect()
    };
    let (qn, proj_n) = a.quotient(&multiples(n));
    let (qm, proj_m) = a.quotient(&multiples(m));

    // A[n] + A[m] -> A is injective with image ker(mn)
    let mut sums: Vec<FinAbElement> = Vec::with_capacity(tn.len() * tm.len());
    for u in &tn {
        for v in &tm {
            sums.push(a.add(u, v));
        }
    }
    let mut distinct = sums.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != sums.len() {
        return Ok(false);
    }
    let ker_mn: Vec<FinAbElement> = torsion(m * n);
    if distinct != sorted(ker_mn) {
        return Ok(false);
    }
    // im(mn) = ker(s, r)
    let image_mn = sorted(elems.iter().map(|x| a.scale(x, (m * n) as i64)).collect());
    let third = |x: &FinAbElement| (proj_n(&a.scale(x, s)), proj_m(&a.scale(x, r)));
    let (zn, zm) = (qn.zero(), qm.zero());
    let ker_third = sorted(elems.iter().filter(|x| third(x) == (zn.clone(), zm.clone())).cloned().collect());
    if image_mn != ker_third {
        return Ok(false);
    }
    // (s, r) is onto
    let mut hit: Vec<(FinAbElement, FinAbElement)> = elems.iter().map(third).collect();
    hit.sort();
    hit.dedup();
    Ok(hit.len() as u64 == qn.order() * qm.order())
}

fn unit(a: &FinAbGroup, i: usize) -> FinAbElement {
    let mut v = a.zero();
    v[i] = 1;
    v
}

fn sorted(mut v: Vec<FinAbElement>) -> Vec<FinAbElement> {
    v.sort();
    v.dedup();
    v
}
