//! Maps from a finite group into a finite 2-group as diagrams
//! `G2 -> E -> G1` with `E` an extension of `gamma` by `G2`.

use std::fmt;

use crate::algebra::hom::{check_hom, extend_hom};
use crate::algebra::{homomorphisms, FinAbElement, FiniteGroup};
use crate::error::{Error, Result};

use super::cohomology::{extension, h2, is_cocycle, Cocycle, GammaModule};
use super::crossed::{semidirect_along, CrossedModule, HomotopyGroups};

/// An extension `G2 -> E -> gamma` with `rho: E -> G1`.
#[derive(Clone, Debug)]
pub struct Butterfly {
    pub gamma: FiniteGroup,
    pub e: FiniteGroup,
    /// `G2 -> E`.
    pub inj: Vec<usize>,
    /// `E -> gamma`.
    pub proj: Vec<usize>,
    /// `E -> G1`.
    pub rho: Vec<usize>,
}

/// The first condition a diagram fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ButterflyFailure {
    Shape,
    InjNotHomomorphism,
    InjNotInjective,
    ProjNotHomomorphism,
    ProjNotSurjective,
    KernelNotImage,
    RhoNotHomomorphism,
    /// `rho(inj(g)) != phi(g)`.
    Triangle { g: usize },
    /// `g^rho(x) != x^-1 g x`.
    Compatibility { x: usize, g: usize },
}

impl fmt::Display for ButterflyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ButterflyFailure::Shape => write!(f, "maps have the wrong shape"),
            ButterflyFailure::InjNotHomomorphism => write!(f, "inj is not a homomorphism"),
            ButterflyFailure::InjNotInjective => write!(f, "inj is not injective"),
            ButterflyFailure::ProjNotHomomorphism => write!(f, "proj is not a homomorphism"),
            ButterflyFailure::ProjNotSurjective => write!(f, "proj is not surjective"),
            ButterflyFailure::KernelNotImage => write!(f, "kernel of proj differs from image of inj"),
            ButterflyFailure::RhoNotHomomorphism => write!(f, "rho is not a homomorphism"),
            ButterflyFailure::Triangle { g } => write!(f, "triangle: rho(inj({g})) != phi({g})"),
            ButterflyFailure::Compatibility { x, g } => write!(f, "compatibility: {g}^rho({x}) != {x}^-1 {g} {x}"),
        }
    }
}

/// Checks every diagram condition exhaustively.
pub fn butterfly_validate(b: &Butterfly, x: &CrossedModule) -> std::result::Result<(), ButterflyFailure> {
    let (e, g2, g1) = (&b.e, x.g2(), x.g1());
    if b.inj.len() != g2.order()
        || b.proj.len() != e.order()
        || b.rho.len() != e.order()
        || b.inj.iter().any(|&y| y >= e.order())
        || b.proj.iter().any(|&y| y >= b.gamma.order())
        || b.rho.iter().any(|&y| y >= g1.order())
    {
        return Err(ButterflyFailure::Shape);
    }
    if check_hom(g2, e, &b.inj).is_err() {
        return Err(ButterflyFailure::InjNotHomomorphism);
    }
    let mut in_image = vec![false; e.order()];
    for &y in &b.inj {
        if std::mem::replace(&mut in_image[y], true) {
            return Err(ButterflyFailure::InjNotInjective);
        }
    }
    if check_hom(e, &b.gamma, &b.proj).is_err() {
        return Err(ButterflyFailure::ProjNotHomomorphism);
    }
    let mut hit = vec![false; b.gamma.order()];
    for &y in &b.proj {
        hit[y] = true;
    }
    if hit.contains(&false) {
        return Err(ButterflyFailure::ProjNotSurjective);
    }
    if e.elements().any(|y| (b.proj[y] == 0) != in_image[y]) {
        return Err(ButterflyFailure::KernelNotImage);
    }
    if check_hom(e, g1, &b.rho).is_err() {
        return Err(ButterflyFailure::RhoNotHomomorphism);
    }
    if let Some(g) = g2.elements().find(|&g| b.rho[b.inj[g]] != x.phi()[g]) {
        return Err(ButterflyFailure::Triangle { g });
    }
    for y in e.elements() {
        for g in g2.elements() {
            if b.inj[x.act(g, b.rho[y])] != e.conj(b.inj[g], y) {
                return Err(ButterflyFailure::Compatibility { x: y, g });
            }
        }
    }
    Ok(())
}

impl Butterfly {
    /// One element of `E` over each element of `gamma`; the identity over
    /// the identity.
    pub fn lifts(&self) -> Vec<usize> {
        let mut lift = vec![usize::MAX; self.gamma.order()];
        for y in self.e.elements() {
            if lift[self.proj[y]] == usize::MAX {
                lift[self.proj[y]] = y;
            }
        }
        lift
    }

    /// The induced homomorphism `gamma -> pi1`.
    pub fn chi(&self, hg: &HomotopyGroups) -> Vec<usize> {
        self.lifts().iter().map(|&y| hg.projection[self.rho[y]]).collect()
    }
}

/// An isomorphism `E2 -> E1` fixing `G2` and `gamma` and intertwining
/// `rho`, as an element map.
pub fn butterfly_isomorphism(b1: &Butterfly, b2: &Butterfly) -> Option<Vec<usize>> {
    if b1.e.order() != b2.e.order() || b1.inj.len() != b2.inj.len() || b1.gamma != b2.gamma {
        return None;
    }
    let lifts2 = b2.lifts();
    let top: Vec<usize> = b2.gamma.generators().to_vec();
    // generators of E2: inj(G2) and lifts of the generators of gamma
    let mut gens: Vec<usize> = b2.inj.iter().copied().filter(|&y| y != 0).collect();
    let mut images: Vec<usize> = (0..b2.inj.len()).filter(|&g| b2.inj[g] != 0).map(|g| b1.inj[g]).collect();
    gens.extend(top.iter().map(|&t| lifts2[t]));
    let candidates: Vec<Vec<usize>> = top
        .iter()
        .map(|&t| {
            let want = b2.rho[lifts2[t]];
            b1.e.elements().filter(|&y| b1.proj[y] == t && b1.rho[y] == want).collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let fixed = images.len();
    let mut choice = vec![0usize; top.len()];
    loop {
        images.truncate(fixed);
        images.extend(choice.iter().zip(&candidates).map(|(&i, c)| c[i]));
        if let Some(f) = extend_hom(&b2.e, &gens, &images, &b1.e) {
            let bijective = {
                let mut seen = vec![false; f.len()];
                f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            };
            if bijective && b2.e.elements().all(|y| b1.proj[f[y]] == b2.proj[y] && b1.rho[f[y]] == b2.rho[y]) {
                return Some(f);
            }
        }
        // next choice, odometer style
        let mut i = 0;
        loop {
            if i == choice.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn butterflies_isomorphic(b1: &Butterfly, b2: &Butterfly) -> bool {
    butterfly_isomorphism(b1, b2).is_some()
}

/// `pi2` as a `gamma`-module: `gamma . a = a^(lift(gamma)^-1)` where
/// `lift: gamma -> G1` is any map inducing the chosen `chi`.
pub fn pi2_module(x: &CrossedModule, hg: &HomotopyGroups, gamma: &FiniteGroup, lift: &[usize]) -> Result<GammaModule> {
    let pi2 = &hg.pi2;
    let g1 = x.g1();
    GammaModule::from_action(gamma, &pi2.group, |g, a| {
        let y = x.act(pi2.embed(x.g2(), a), g1.inv(lift[g]));
        pi2.coords[&y].clone()
    })
}

/// The coefficient module of a butterfly.
pub fn butterfly_module(b: &Butterfly, x: &CrossedModule, hg: &HomotopyGroups) -> Result<GammaModule> {
    let lift: Vec<usize> = b.lifts().iter().map(|&y| b.rho[y]).collect();
    pi2_module(x, hg, &b.gamma, &lift)
}

/// One homotopy class of maps `gamma -> X` for split `X`.
#[derive(Clone, Debug)]
pub struct SplitClass {
    /// `gamma -> pi1`.
    pub chi: Vec<usize>,
    /// Coordinates in `H^2(gamma, pi2)` with the action through `chi`.
    pub class: FinAbElement,
    pub cocycle: Cocycle,
    pub butterfly: Butterfly,
}

/// Every class for a split crossed module: for each `chi` and each class
/// of `H^2(gamma, pi2)`, the extension `K` and `E = K x|_pi2 G2` with
/// `rho(k, a) = sigma(chi(k)) phi(a)`.
pub fn hom_classes_split(gamma: &FiniteGroup, x: &CrossedModule, sigma: &[usize]) -> Result<Vec<SplitClass>> {
    let hg = x.homotopy_groups();
    let (g1, g2) = (x.g1(), x.g2());
    if sigma.len() != hg.pi1.order()
        || sigma.iter().any(|&y| y >= g1.order())
        || check_hom(&hg.pi1, g1, sigma).is_err()
        || sigma.iter().enumerate().any(|(q, &y)| hg.projection[y] != q)
    {
        return Err(Error::NotASection);
    }
    let pi2 = &hg.pi2;
    let (h, h_incl) = g2.subgroup(&pi2.basis);
    let mut out = Vec::new();
    for chi in homomorphisms(gamma, &hg.pi1)? {
        let lift: Vec<usize> = chi.iter().map(|&q| sigma[q]).collect();
        let module = pi2_module(x, &hg, gamma, &lift)?;
        let coh = h2(&module)?;
        for (idx, c) in coh.representatives().iter().enumerate() {
            let ext = extension(&module, c)?;
            let k = &ext.group;
            let a = &pi2.group;
            let l: Vec<usize> = h_incl.iter().map(|&y| ext.inclusion[a.index_of(&pi2.coords[&y])]).collect();
            let mut l_inv = vec![usize::MAX; k.order()];
            for (i, &y) in l.iter().enumerate() {
                l_inv[y] = i;
            }
            let act_h: Vec<Vec<usize>> =
                k.elements().map(|kk| h.elements().map(|i| l_inv[k.conj(l[i], kk)]).collect()).collect();
            let act_g: Vec<Vec<usize>> = k
                .elements()
                .map(|kk| {
                    let s = lift[ext.projection[kk]];
                    g2.elements().map(|g| x.act(g, s)).collect()
                })
                .collect();
            let sd = semidirect_along(k, g2, &h, &l, &h_incl, &act_h, &act_g)?;
            let e = sd.group;
            let mut proj = vec![usize::MAX; e.order()];
            let mut rho = vec![usize::MAX; e.order()];
            for kk in k.elements() {
                let gbar = ext.projection[kk];
                for g in g2.elements() {
                    let y = e.mul(sd.from_k[kk], sd.from_g[g]);
                    let r = g1.mul(lift[gbar], x.phi()[g]);
                    debug_assert!(rho[y] == usize::MAX || (rho[y] == r && proj[y] == gbar));
                    proj[y] = gbar;
                    rho[y] = r;
                }
            }
            let b = Butterfly { gamma: gamma.clone(), e, inj: sd.from_g, proj, rho };
            if let Err(f) = butterfly_validate(&b, x) {
                return Err(Error::invalid(format!("constructed diagram fails: {f}")));
            }
            out.push(SplitClass { chi: chi.clone(), class: coh.group().element_at(idx), cocycle: c.clone(), butterfly: b });
        }
    }
    Ok(out)
}

/// Twists the multiplication of `E` by a cocycle with values in `pi2`:
/// `x * y = inj(c(x̄, ȳ)) x y`.
pub fn torsor_act(b: &Butterfly, x: &CrossedModule, c: &Cocycle) -> Result<Butterfly> {
    Torsor::new(b, x)?.act(c)
}

/// The action of `H^2(gamma, pi2)` on butterflies with the same `chi`,
/// with the coefficient module computed once.
#[derive(Clone, Debug)]
pub struct Torsor<'a> {
    base: &'a Butterfly,
    x: &'a CrossedModule,
    hg: HomotopyGroups,
    module: GammaModule,
}

impl<'a> Torsor<'a> {
    pub fn new(base: &'a Butterfly, x: &'a CrossedModule) -> Result<Self> {
        let hg = x.homotopy_groups();
        let module = butterfly_module(base, x, &hg)?;
        Ok(Torsor { base, x, hg, module })
    }

    pub fn module(&self) -> &GammaModule {
        &self.module
    }

    pub fn act(&self, c: &Cocycle) -> Result<Butterfly> {
        if !is_cocycle(&self.module, c) {
            return Err(Error::invalid("not a cocycle for the butterfly's coefficient module"));
        }
        let b = self.base;
        let e = &b.e;
        let n = b.gamma.order();
        // inj(c(g, h)) for every pair in gamma
        let twist: Vec<usize> = (0..n * n).map(|i| b.inj[self.hg.pi2.embed(self.x.g2(), c.eval(i / n, i % n))]).collect();
        let rows = e
            .elements()
            .map(|y| e.elements().map(|z| e.mul(twist[b.proj[y] * n + b.proj[z]], e.mul(y, z))).collect())
            .collect();
        // associative because c is a cocycle for conjugation on inj(pi2)
        let twisted = FiniteGroup::from_associative_table(rows)?;
        Ok(Butterfly { gamma: b.gamma.clone(), e: twisted, inj: b.inj.clone(), proj: b.proj.clone(), rho: b.rho.clone() })
    }
}

/// Conjugation by `a` in `G1`: `rho` becomes `a^-1 rho a` and `inj`
/// becomes `inj((-)^(a^-1))`.
pub fn conjugate_class(a: usize, b: &Butterfly, x: &CrossedModule) -> Butterfly {
    let g1 = x.g1();
    let a_inv = g1.inv(a);
    Butterfly {
        gamma: b.gamma.clone(),
        e: b.e.clone(),
        inj: x.g2().elements().map(|g| b.inj[x.act(g, a_inv)]).collect(),
        proj: b.proj.clone(),
        rho: b.rho.iter().map(|&r| g1.conj(r, a)).collect(),
    }
}

pub fn is_fixed(a: usize, b: &Butterfly, x: &CrossedModule) -> bool {
    butterflies_isomorphic(b, &conjugate_class(a, b, x))
}
