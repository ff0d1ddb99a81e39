//! The weighted projective 2-groups `PGL(m, n)` and spherical
//! Deligne-Mumford curves, whose universal cover is some `P(m, n)`.
//!
//! The infinite groups involved are never materialized: characters into
//! `C*` are `Q/Z`-valued, and the `(d, d)` conjugacy analysis is carried
//! out on finite character groups.

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::catalog::{describe, GroupDescriptor};
use crate::algebra::character::{abelianization, normalize, Character, CharacterGroup, Qz};
use crate::algebra::hom::check_hom;
use crate::algebra::structure::quotient_by_normal;
use crate::algebra::{FinAbElement, FinAbGroup, FiniteGroup};
use crate::error::{Error, Result};
use crate::gerbe::rs_pair;
use crate::twogroup::cohomology::{extension, h2, Cocycle, GammaModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PglCase {
    /// Neither weight divides the other.
    NonDividing,
    /// One weight properly divides the other.
    Dividing,
    Equal,
}

/// Isomorphism type of `pi1 PGL(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pi1Type {
    /// `C*`.
    Cstar,
    /// `C* x| C` with the multiplication action.
    CstarLtimesC,
    /// `PGL_2`.
    Pgl2,
}

/// A section `pi1 -> G` of the crossed module, as exponent data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PglSection {
    /// `lambda -> (lambda^first, lambda^second)`.
    Diagonal { first: i64, second: i64 },
    /// `(lambda, a) -> (1, lambda, a)`.
    Triangular,
    /// The 2-group is not split.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PglDescriptor {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub case: PglCase,
    pub pi1: Pi1Type,
    /// `pi2` is cyclic of order `d`.
    pub pi2_order: u64,
    /// `s m + r n = d`, with `s = 1, r = 0` when `m | n`.
    pub r: i64,
    pub s: i64,
    pub section: PglSection,
}

pub fn pgl_descriptor(m: u64, n: u64) -> Result<PglDescriptor> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("weights must be positive"));
    }
    let d = m.gcd(&n);
    let (r, s) = rs_pair(m / d, n / d)?;
    let (case, pi1, section) = if m == n {
        (PglCase::Equal, Pi1Type::Pgl2, PglSection::None)
    } else if n.is_multiple_of(m) || m.is_multiple_of(n) {
        (PglCase::Dividing, Pi1Type::CstarLtimesC, PglSection::Triangular)
    } else {
        (PglCase::NonDividing, Pi1Type::Cstar, PglSection::Diagonal { first: -r, second: s })
    };
    Ok(PglDescriptor { m, n, d, case, pi1, pi2_order: d, r, s, section })
}

/// `pi1 PGL(m, n)` and `pi1 PGL(m/d, n/d)` have the same type.
pub fn pgl_pi1_reduction_check(m: u64, n: u64) -> Result<bool> {
    let full = pgl_descriptor(m, n)?;
    let reduced = pgl_descriptor(m / full.d, n / full.d)?;
    Ok(full.pi1 == reduced.pi1)
}

/// A map from `gamma` into `PGL(m, n)`, `m != n`, in canonical form: a
/// character of `gamma` and a class in `H^2(gamma, mu_d)`.
#[derive(Clone, Debug, Serialize)]
pub struct SphericalClassMN {
    /// Coordinates in the character group of `gamma`.
    pub chi: FinAbElement,
    /// Index of the class in `H^2(gamma, mu_d)`.
    pub cocycle_class: usize,
    #[serde(rename = "K")]
    pub k: GroupDescriptor,
    #[serde(skip)]
    pub character: Character,
    #[serde(skip)]
    pub cocycle: Cocycle,
}

#[derive(Clone, Debug, Serialize)]
pub struct SphericalClassification {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub count: u64,
    pub classes: Vec<SphericalClassMN>,
}

fn mu_module(gamma: &FiniteGroup, d: u64) -> GammaModule {
    GammaModule::trivial(gamma, &FinAbGroup::cyclic(d))
}

/// All classes `Hom(gamma, C*) x H^2(gamma, mu_d)`.
pub fn classify_spherical_mn(gamma: &FiniteGroup, m: u64, n: u64) -> Result<SphericalClassification> {
    if m == n {
        return Err(Error::invalid("classify_spherical_mn needs m != n"));
    }
    let desc = pgl_descriptor(m, n)?;
    let module = mu_module(gamma, desc.d);
    let h = h2(&module)?;
    let chars = CharacterGroup::new(gamma);
    let pairs: Vec<(FinAbElement, usize)> = chars
        .group
        .elements()
        .into_iter()
        .flat_map(|k| (0..h.representatives().len()).map(move |c| (k.clone(), c)))
        .collect();
    let classes = pairs
        .into_par_iter()
        .map(|(k, c)| {
            let cocycle = h.representatives()[c].clone();
            let ext = extension(&module, &cocycle)?;
            Ok(SphericalClassMN { character: chars.character(&k), chi: k, cocycle_class: c, k: describe(&ext.group), cocycle })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SphericalClassification { m, n, d: desc.d, count: chars.order() * h.order(), classes })
}

/// A finite group `K` with a central `mu_d` and a character of `K/mu_d`,
/// presented over a fixed quotient `gamma`.
#[derive(Clone, Debug)]
pub struct KChiPair {
    pub k: FiniteGroup,
    /// `mu[j]` is the image of `exp(2 pi i j / d)`.
    pub mu: Vec<usize>,
    /// `K -> K/mu_d = gamma`.
    pub projection: Vec<usize>,
    /// The character pulled back to `K`.
    pub chi: Character,
}

pub fn to_pair_k_chi(gamma: &FiniteGroup, d: u64, cls: &SphericalClassMN) -> Result<KChiPair> {
    let module = mu_module(gamma, d);
    let ext = extension(&module, &cls.cocycle)?;
    let mu = (0..d as usize).map(|j| ext.inclusion[j]).collect();
    let chi = cls.character.pullback(&ext.projection);
    Ok(KChiPair { k: ext.group, mu, projection: ext.projection, chi })
}

/// The character of `gamma` and the `H^2(gamma, mu_d)` coordinates of a
/// pair, from the cocycle of the least-index lift of each element.
pub fn from_pair_k_chi(gamma: &FiniteGroup, d: u64, pair: &KChiPair) -> Result<(FinAbElement, FinAbElement)> {
    let k = &pair.k;
    if pair.mu.len() != d as usize || pair.projection.len() != k.order() {
        return Err(Error::invalid("pair data has the wrong shape"));
    }
    check_hom(k, gamma, &pair.projection)?;
    let mut mu_index = vec![usize::MAX; k.order()];
    for (j, &x) in pair.mu.iter().enumerate() {
        mu_index[x] = j;
    }
    let mut lift = vec![usize::MAX; gamma.order()];
    for x in k.elements().rev() {
        lift[pair.projection[x]] = x;
    }
    let module = mu_module(gamma, d);
    let cocycle = Cocycle::from_fn(&module, |g, h| {
        let c = k.mul(k.mul(lift[g], lift[h]), k.inv(lift[gamma.mul(g, h)]));
        let j = mu_index[c];
        if d == 1 {
            vec![]
        } else {
            vec![j as u64]
        }
    })?;
    let class = h2(&module)?.class_of(&cocycle)?;
    let values: Vec<Qz> = gamma.elements().map(|g| pair.chi.eval(lift[g])).collect();
    let chi = Character::from_values(gamma, values)?;
    let coords = CharacterGroup::new(gamma).coords_of(&chi).ok_or_else(|| Error::invalid("character does not factor through gamma"))?;
    Ok((coords, class))
}

/// The curve `[C^2 - 0 / E]` with `E = C* x_{mu_d} K`, for a pair
/// `(K, chi)` and weights `m != n`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub r: i64,
    pub s: i64,
    chi: Character,
    /// `pi1 X = K / mu_d`.
    pub pi1: FiniteGroup,
    /// `ker chi` in `K`: the generic stabilizer, containing `mu_d`.
    pub generic: Vec<usize>,
    /// Order of `chi(K)`, the rotation group acting on the coarse weighted
    /// projective line.
    pub rotation_order: u64,
    /// Weights of the coarse line `P(m/d, n/d)`.
    pub base_weights: (u64, u64),
}

impl Reconstruction {
    /// Exponents in `Q/Z` of the diagonal matrix of `(lambda, u)`:
    /// `(-r chi(u) + m lambda, s chi(u) + n lambda)`.
    pub fn rho(&self, lambda: Qz, u: usize) -> (Qz, Qz) {
        let c = self.chi.eval(u);
        (
            normalize(c * -self.r + lambda * self.m as i64),
            normalize(c * self.s + lambda * self.n as i64),
        )
    }

    /// `rho(lambda, 1)` is `(m lambda, n lambda)` on all of `mu_big`.
    pub fn rho_iota_is_power_map(&self, big: u64) -> bool {
        (0..big as i64).all(|j| {
            let lambda = Qz::new(j, big as i64);
            self.rho(lambda, 0) == (normalize(lambda * self.m as i64), normalize(lambda * self.n as i64))
        })
    }

    pub fn base_descriptor(&self) -> String {
        let (a, b) = self.base_weights;
        format!("[P({a},{b})/Z_{}]", self.rotation_order)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReconstructionReport {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub pi1: GroupDescriptor,
    pub generic: GroupDescriptor,
    pub rotation_order: u64,
    pub base: String,
}

impl Reconstruction {
    pub fn report(&self, k: &FiniteGroup) -> ReconstructionReport {
        let (generic, _) = k.subgroup(&self.generic);
        ReconstructionReport {
            m: self.m,
            n: self.n,
            d: self.d,
            pi1: describe(&self.pi1),
            generic: describe(&generic),
            rotation_order: self.rotation_order,
            base: self.base_descriptor(),
        }
    }
}

/// `mu` lists `mu_d` in `K` as `mu[j] = zeta^j`; `chi` is a character of
/// `K` vanishing on `mu_d`.
pub fn reconstruct(k: &FiniteGroup, mu: &[usize], chi: &Character, m: u64, n: u64) -> Result<Reconstruction> {
    if m == n {
        return Err(Error::invalid("reconstruction needs m != n"));
    }
    let desc = pgl_descriptor(m, n)?;
    let d = desc.d;
    if mu.len() != d as usize || mu.iter().any(|&x| x >= k.order()) {
        return Err(Error::invalid(format!("mu_d must list {d} elements of K")));
    }
    let zeta = mu.get(1).copied().unwrap_or(0);
    if (0..d as usize).any(|j| mu[j] != k.pow(zeta, j as i64)) || k.element_order(zeta) != d {
        return Err(Error::invalid("mu must be the powers of an element of order d"));
    }
    if k.generators().iter().any(|&x| k.mul(x, zeta) != k.mul(zeta, x)) {
        return Err(Error::NotCentral { element: zeta });
    }
    if chi.values().len() != k.order() {
        return Err(Error::invalid("chi must be a character of K"));
    }
    if mu.iter().any(|&x| !chi.eval(x).is_zero()) {
        return Err(Error::invalid("chi does not vanish on mu_d"));
    }
    let (pi1, _) = quotient_by_normal(k, mu);
    Ok(Reconstruction {
        m,
        n,
        d,
        r: desc.r,
        s: desc.s,
        chi: chi.clone(),
        pi1,
        generic: chi.kernel(),
        rotation_order: chi.image_order(),
        base_weights: (m / d, n / d),
    })
}

/// Finite subgroups of `PGL_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "n", rename_all = "snake_case")]
pub enum PlatonicType {
    Cyclic(u64),
    Dihedral(u64),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

/// Recognizes cyclic groups, dihedral groups of order `2n >= 4` and the
/// three exceptional groups from order, abelianization and element orders.
pub fn platonic_type(g: &FiniteGroup) -> Result<PlatonicType> {
    let order = g.order() as u64;
    if g.elements().any(|x| g.element_order(x) == order) {
        return Ok(PlatonicType::Cyclic(order));
    }
    let hist = g.order_histogram();
    let ab = abelianization(g);
    let exceptional = match (order, ab.factors()) {
        (12, [3]) if hist == [(1, 1), (2, 3), (3, 8)] => Some(PlatonicType::Tetrahedral),
        (24, [2]) if hist == [(1, 1), (2, 9), (3, 8), (4, 6)] => Some(PlatonicType::Octahedral),
        (60, []) if hist == [(1, 1), (2, 15), (3, 20), (5, 24)] => Some(PlatonicType::Icosahedral),
        _ => None,
    };
    if let Some(t) = exceptional {
        return Ok(t);
    }
    if order.is_multiple_of(2) && order >= 4 {
        let n = order / 2;
        // a rotation of order n whose complement consists of involutions
        let dihedral = g.elements().filter(|&r| g.element_order(r) == n).any(|r| {
            let rotations: Vec<usize> = (0..n as i64).map(|j| g.pow(r, j)).collect();
            g.elements().filter(|x| !rotations.contains(x)).all(|x| g.element_order(x) == 2)
        });
        if dihedral {
            return Ok(PlatonicType::Dihedral(n));
        }
    }
    Err(Error::NotAPgl2Subgroup { order: g.order() })
}

/// Centralizer in `PGL_2` of a finite subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pgl2Centralizer {
    /// The trivial subgroup: all of `PGL_2`.
    Whole,
    /// The circle of rotations about the common axis.
    FullRotationCircle,
    Trivial,
    /// The rotation by a half turn inside `mu_n`.
    Mu2InRotations,
    /// The image itself, a Klein four group.
    AllOfD2,
}

impl Pgl2Centralizer {
    /// Order when finite.
    pub fn order(self) -> Option<u64> {
        match self {
            Pgl2Centralizer::Whole | Pgl2Centralizer::FullRotationCircle => None,
            Pgl2Centralizer::Trivial => Some(1),
            Pgl2Centralizer::Mu2InRotations => Some(2),
            Pgl2Centralizer::AllOfD2 => Some(4),
        }
    }
}

pub fn pgl2_centralizer(t: PlatonicType) -> Pgl2Centralizer {
    match t {
        PlatonicType::Cyclic(1) => Pgl2Centralizer::Whole,
        PlatonicType::Cyclic(_) => Pgl2Centralizer::FullRotationCircle,
        PlatonicType::Dihedral(2) => Pgl2Centralizer::AllOfD2,
        PlatonicType::Dihedral(n) if n % 2 == 0 => Pgl2Centralizer::Mu2InRotations,
        _ => Pgl2Centralizer::Trivial,
    }
}

/// A surjection from `gamma` onto a finite subgroup of `PGL_2`.
#[derive(Clone, Debug)]
pub struct Pgl2Image {
    pub image: FiniteGroup,
    /// Element map `gamma -> image`.
    pub chi: Vec<usize>,
    pub image_type: PlatonicType,
}

impl Pgl2Image {
    pub fn new(gamma: &FiniteGroup, image: &FiniteGroup, chi: Vec<usize>) -> Result<Self> {
        if chi.len() != gamma.order() || chi.iter().any(|&x| x >= image.order()) {
            return Err(Error::invalid("chi must map gamma into the image"));
        }
        check_hom(gamma, image, &chi)?;
        let mut hit = vec![false; image.order()];
        for &x in &chi {
            hit[x] = true;
        }
        if hit.contains(&false) {
            return Err(Error::invalid("chi is not surjective"));
        }
        let image_type = platonic_type(image)?;
        Ok(Pgl2Image { image: image.clone(), chi, image_type })
    }
}

/// `C*`: the characters `a* = q o chi` of `gamma`, one per element `a` of
/// the centralizer, with `q` the quotient of a dihedral image by its
/// rotations (by `a` itself for `D_2`). Coordinates in the character
/// group of `gamma`, sorted.
pub fn a_star_characters(gamma: &FiniteGroup, img: &Pgl2Image) -> Vec<FinAbElement> {
    let chars = CharacterGroup::new(gamma);
    let mut out = vec![chars.group.zero()];
    let image = &img.image;
    let kernels: Vec<Vec<usize>> = match img.image_type {
        PlatonicType::Dihedral(2) => image.elements().skip(1).map(|a| vec![0, a]).collect(),
        PlatonicType::Dihedral(n) if n % 2 == 0 => {
            let r = image.elements().find(|&x| image.element_order(x) == n).expect("dihedral rotation");
            vec![(0..n as i64).map(|j| image.pow(r, j)).collect()]
        }
        _ => vec![],
    };
    for kernel in kernels {
        let values: Vec<Qz> = img.chi.iter().map(|x| if kernel.contains(x) { Qz::zero() } else { Qz::new(1, 2) }).collect();
        let a_star = Character::from_values(gamma, values).expect("quotient of a hom is a hom");
        out.push(chars.coords_of(&a_star).expect("character of gamma"));
    }
    out.sort();
    out.dedup();
    out
}

/// Size of a conjugacy class of maps into `PGL(d, d)` over a fixed
/// homomorphism to `PGL_2`: `D = C* / (C* n (gamma*)^d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdConjugacyReport {
    pub image_type: PlatonicType,
    pub d: u64,
    pub centralizer: Pgl2Centralizer,
    pub centralizer_order: Option<u64>,
    pub c_star: Vec<FinAbElement>,
    pub power_image_order: usize,
    pub d_order: usize,
}

pub fn class_size_dd(gamma: &FiniteGroup, img: &Pgl2Image, d: u64) -> Result<DdConjugacyReport> {
    let c_star = a_star_characters(gamma, img);
    class_size_dd_from_characters(gamma, img.image_type, c_star, d)
}

/// The same report from the image type and the characters `a*` directly.
pub fn class_size_dd_from_characters(
    gamma: &FiniteGroup,
    image_type: PlatonicType,
    c_star: Vec<FinAbElement>,
    d: u64,
) -> Result<DdConjugacyReport> {
    if d == 0 {
        return Err(Error::invalid("d must be positive"));
    }
    let chars = CharacterGroup::new(gamma);
    let powers = chars.power_image(d);
    let span = chars.group.span(&c_star);
    let meet = span.iter().filter(|x| powers.contains(x)).count();
    let centralizer = pgl2_centralizer(image_type);
    Ok(DdConjugacyReport {
        image_type,
        d,
        centralizer,
        centralizer_order: centralizer.order(),
        d_order: span.len() / meet,
        power_image_order: powers.len(),
        c_star: span,
    })
}
