//! Orbifold curves: Euler weight, the hyperbolic/Euclidean/spherical
//! trichotomy, fundamental-group presentations, triangle groups and
//! footballs.
//!
//! An orbifold curve is recorded by its genus `g`, the orders `n_1..n_k`
//! of its orbifold points and its number of punctures `l`. Its
//! fundamental group is
//!
//! ```text
//! < a_i, b_i, r_j, s_h | r_j^(n_j), [a_1,b_1]..[a_g,b_g] r_1..r_k s_1..s_l >
//! ```
//!
//! Deligne-Mumford curves (gerbes over orbifolds) live in [`dm`]; explicit
//! finite quotients certifying uniformizability live in [`witness`].

pub mod dm;
pub mod witness;

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::algebra::FinAbGroup;
use crate::error::{Error, Result};
use crate::fpgroup::{commutator, letter, todd_coxeter, CosetResult, GroupPresentation, Word};
use crate::limits::Limits;

pub use dm::{graph_of_groups_pi1, DMCurve, LocalExtension};
pub use witness::{heisenberg_witness, psl2_witness, HeisenbergWitness, Psl2Witness};

/// Orbifold curve of finite type. Orders are sorted ascending and at
/// least 2; punctures behave as points of order infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbifoldCurve {
    genus: u32,
    orders: Vec<u64>,
    punctures: u32,
}

/// JSON form `{"genus", "orders", "punctures", "compact"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldCurveData {
    pub genus: u32,
    pub orders: Vec<u64>,
    pub punctures: u32,
    pub compact: bool,
}

impl OrbifoldCurve {
    pub fn new(genus: u32, mut orders: Vec<u64>, punctures: u32) -> Result<Self> {
        if let Some(&n) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::invalid(format!("orbifold order {n} is below 2")));
        }
        orders.sort_unstable();
        Ok(OrbifoldCurve { genus, orders, punctures })
    }

    pub fn compact(genus: u32, orders: Vec<u64>) -> Result<Self> {
        Self::new(genus, orders, 0)
    }

    /// The football with points of orders `m` and `n`; order-1 points are
    /// dropped.
    pub fn football(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::invalid("football orders must be positive"));
        }
        Self::compact(0, [m, n].into_iter().filter(|&x| x > 1).collect())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn is_compact(&self) -> bool {
        self.punctures == 0
    }

    /// `2g - 2 + sum (n_i - 1)/n_i + l`.
    pub fn euler_weight(&self) -> Ratio<i64> {
        let base = Ratio::from_integer(2 * self.genus as i64 - 2 + self.punctures as i64);
        self.orders.iter().fold(base, |acc, &n| acc + Ratio::new(n as i64 - 1, n as i64))
    }

    pub fn uniformization(&self) -> Uniformization {
        if !self.is_compact() {
            let euclidean = self.genus == 0
                && matches!((self.punctures, self.orders.as_slice()), (1, []) | (1, [_]) | (1, [2, 2]) | (2, []));
            return if euclidean { Uniformization::Euclidean } else { Uniformization::Hyperbolic };
        }
        let w = self.euler_weight();
        if w > Ratio::from_integer(0) {
            Uniformization::Hyperbolic
        } else if w == Ratio::from_integer(0) {
            Uniformization::Euclidean
        } else {
            Uniformization::Spherical { cover: spherical_cover(&self.orders, 1) }
        }
    }

    /// Presentation on `a1, b1, .., ag, bg, r1, .., rk, s1, .., sl`.
    pub fn pi1_presentation(&self) -> GroupPresentation {
        let g = self.genus as usize;
        let k = self.orders.len();
        let l = self.punctures as usize;
        let mut names = Vec::with_capacity(2 * g + k + l);
        for i in 1..=g {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
        names.extend((1..=k).map(|j| format!("r{j}")));
        names.extend((1..=l).map(|h| format!("s{h}")));
        let mut rels: Vec<Word> = self
            .orders
            .iter()
            .enumerate()
            .map(|(j, &n)| vec![letter(2 * g + j); n as usize])
            .collect();
        let mut product: Word = Vec::new();
        for i in 0..g {
            product.extend(commutator(&[letter(2 * i)], &[letter(2 * i + 1)]));
        }
        product.extend((2 * g..2 * g + k + l).map(letter));
        rels.push(product);
        GroupPresentation::new(names, rels).expect("letters are in range")
    }

    /// Disc, plane and sphere, plus compact genus-0 curves with at most two
    /// orbifold points of coprime orders.
    pub fn is_simply_connected(&self) -> bool {
        if self.genus != 0 {
            return false;
        }
        match (self.punctures, self.orders.as_slice()) {
            (0 | 1, []) => true,
            (0, [_]) => true,
            (0, [m, n]) => m.gcd(n) == 1,
            _ => false,
        }
    }
}

impl TryFrom<OrbifoldCurveData> for OrbifoldCurve {
    type Error = Error;

    fn try_from(d: OrbifoldCurveData) -> Result<Self> {
        if d.compact != (d.punctures == 0) {
            return Err(Error::invalid(format!(
                "compact = {} is inconsistent with {} punctures",
                d.compact, d.punctures
            )));
        }
        OrbifoldCurve::new(d.genus, d.orders, d.punctures)
    }
}

impl From<&OrbifoldCurve> for OrbifoldCurveData {
    fn from(c: &OrbifoldCurve) -> Self {
        OrbifoldCurveData { genus: c.genus, orders: c.orders.clone(), punctures: c.punctures, compact: c.is_compact() }
    }
}

impl fmt::Display for OrbifoldCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        write!(f, "g={} orders=[{}] l={}", self.genus, orders.join(","), self.punctures)
    }
}

/// Universal cover type. Spherical curves are covered by the weighted
/// projective line with the recorded weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Uniformization {
    Hyperbolic,
    Euclidean,
    Spherical { cover: (u64, u64) },
}

impl fmt::Display for Uniformization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Uniformization::Hyperbolic => write!(f, "Hyperbolic"),
            Uniformization::Euclidean => write!(f, "Euclidean"),
            Uniformization::Spherical { cover: (m, n) } => write!(f, "Spherical P({m},{n})"),
        }
    }
}

/// Cover weights of a spherical curve over a compact genus-0 orbifold with
/// the given orders, for a gerbe whose generic stabilizer loses a cyclic
/// kernel of order `hidden` in the fundamental group (1 for orbifolds).
pub fn spherical_cover(orders: &[u64], hidden: u64) -> (u64, u64) {
    match *orders {
        [] => (hidden, hidden),
        [n] => (hidden, hidden * n),
        [m, n] => {
            let a = m.gcd(&n);
            (hidden * m / a, hidden * n / a)
        }
        _ => (hidden, hidden),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SphericalFamily {
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl SphericalFamily {
    pub fn name(self) -> &'static str {
        match self {
            SphericalFamily::Dihedral => "dihedral",
            SphericalFamily::Tetrahedral => "tetrahedral",
            SphericalFamily::Octahedral => "octahedral",
            SphericalFamily::Icosahedral => "icosahedral",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum TriangleGroup {
    Spherical { family: SphericalFamily, order: usize },
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for TriangleGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleGroup::Spherical { family, order } => write!(f, "spherical {} {order}", family.name()),
            TriangleGroup::Euclidean => write!(f, "euclidean"),
            TriangleGroup::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

/// `< x, y | x^p, y^q, (xy)^r >`.
pub fn triangle_presentation(p: u64, q: u64, r: u64) -> GroupPresentation {
    let xy: Word = vec![1, 2];
    let rels = vec![vec![1; p as usize], vec![2; q as usize], xy.repeat(r as usize)];
    GroupPresentation::new(vec!["x".into(), "y".into()], rels).expect("letters are in range")
}

pub fn triangle_group(p: u64, q: u64, r: u64) -> Result<TriangleGroup> {
    triangle_group_with(p, q, r, &Limits::default())
}

/// Classifies by the sign of `1/p + 1/q + 1/r - 1`; spherical orders come
/// from coset enumeration.
pub fn triangle_group_with(p: u64, q: u64, r: u64, limits: &Limits) -> Result<TriangleGroup> {
    let mut t = [p, q, r];
    t.sort_unstable();
    if t[0] < 2 {
        return Err(Error::invalid(format!("triangle orders must be at least 2, got ({p},{q},{r})")));
    }
    let [p, q, r] = t.map(|x| x as i128);
    let excess = q * r + p * r + p * q - p * q * r;
    if excess < 0 {
        return Ok(TriangleGroup::Hyperbolic);
    }
    if excess == 0 {
        return Ok(TriangleGroup::Euclidean);
    }
    let family = match t {
        [2, 2, _] => SphericalFamily::Dihedral,
        [2, 3, 3] => SphericalFamily::Tetrahedral,
        [2, 3, 4] => SphericalFamily::Octahedral,
        [2, 3, 5] => SphericalFamily::Icosahedral,
        _ => unreachable!("positive excess forces a platonic triple"),
    };
    match todd_coxeter(&triangle_presentation(t[0], t[1], t[2]), &[], limits.max_cosets) {
        CosetResult::Index(order) => Ok(TriangleGroup::Spherical { family, order }),
        CosetResult::Unknown => Err(Error::BudgetExceeded { budget: limits.max_cosets as u64 }),
    }
}

/// Fundamental group and universal cover weights of a football.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Football {
    pub pi1: FinAbGroup,
    pub cover: (u64, u64),
}

pub fn football(m: u64, n: u64) -> Result<Football> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("football orders must be positive"));
    }
    let d = m.gcd(&n);
    Ok(Football { pi1: FinAbGroup::cyclic(d), cover: (m / d, n / d) })
}
