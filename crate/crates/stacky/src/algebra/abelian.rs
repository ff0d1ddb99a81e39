use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::group::FiniteGroup;
use super::snf::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// A finite abelian group `Z/d1 + ... + Z/dr` with `d1 | d2 | ... | dr`, all `>= 2`.
///
/// Elements are coordinate vectors with `x[i]` in `0..d[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

pub type FinAbElement = Vec<u64>;

impl FinAbGroup {
    /// Checks the divisibility chain.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::invalid(format!("invariant factors must be >= 2, got {factors:?}")));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::invalid(format!("{factors:?} is not a divisibility chain")));
        }
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1);
        if n == 1 {
            Self::trivial()
        } else {
            FinAbGroup { factors: vec![n] }
        }
    }

    /// Normal form of `Z/o1 + ... + Z/ok` for arbitrary positive orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let rows: Vec<Vec<i64>> = (0..orders.len())
            .map(|i| (0..orders.len()).map(|j| if i == j { orders[i] as i64 } else { 0 }).collect())
            .collect();
        let m = IntMatrix::from_rows_with_cols(&rows, orders.len());
        let diag = smith_normal_form(&m).diagonal();
        FinAbGroup { factors: diag.iter().map(|x| x.to_u64().unwrap()).filter(|&d| d > 1).collect() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> FinAbElement {
        vec![0; self.factors.len()]
    }

    pub fn reduce(&self, x: &[i64]) -> FinAbElement {
        x.iter().zip(&self.factors).map(|(&v, &d)| v.rem_euclid(d as i64) as u64).collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> FinAbElement {
        a.iter().zip(b).zip(&self.factors).map(|((&x, &y), &d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &[u64]) -> FinAbElement {
        a.iter().zip(&self.factors).map(|(&x, &d)| (d - x) % d).collect()
    }

    pub fn scale(&self, a: &[u64], k: i64) -> FinAbElement {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
            .collect()
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        a.iter().zip(&self.factors).fold(1, |l, (&x, &d)| num_integer::lcm(l, d / num_integer::gcd(x, d)))
    }

    /// Mixed-radix index of an element, first coordinate most significant.
    pub fn index_of(&self, a: &[u64]) -> usize {
        a.iter().zip(&self.factors).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> FinAbElement {
        let mut out = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            let d = self.factors[i] as usize;
            out[i] = (idx % d) as u64;
            idx /= d;
        }
        out
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<FinAbElement> {
        (0..self.order() as usize).map(|i| self.element_at(i)).collect()
    }

    /// Cayley table realization with element `i` at index `index_of`.
    pub fn to_finite_group(&self) -> FiniteGroup {
        let n = self.order() as usize;
        let elems = self.elements();
        let rows = (0..n).map(|i| (0..n).map(|j| self.index_of(&self.add(&elems[i], &elems[j]))).collect()).collect();
        FiniteGroup::from_table(rows).expect("abelian table is a group").with_name(self.to_string())
    }

    /// `self / <gens>` with the projection on coordinates.
    pub fn quotient(&self, gens: &[FinAbElement]) -> (FinAbGroup, impl Fn(&[u64]) -> FinAbElement + '_) {
        let r = self.factors.len();
        let mut rel: Vec<Vec<i64>> = Vec::new();
        for (i, &d) in self.factors.iter().enumerate() {
            let mut row = vec![0i64; r];
            row[i] = d as i64;
            rel.push(row);
        }
        for g in gens {
            rel.push(g.iter().map(|&x| x as i64).collect());
        }
        let pres = AbelianPresentation::new(r, &rel);
        assert_eq!(pres.free_rank(), 0, "finite quotient");
        let q = pres.torsion();
        (q, move |x: &[u64]| {
            let v: Vec<i64> = x.iter().map(|&a| a as i64).collect();
            pres.coords(&v)
        })
    }

    /// Elements of the subgroup generated by `gens`, sorted by index.
    pub fn span(&self, gens: &[FinAbElement]) -> Vec<FinAbElement> {
        let mut seen = vec![false; self.order() as usize];
        let mut list = vec![self.zero()];
        seen[0] = true;
        let mut head = 0;
        while head < list.len() {
            let x = list[head].clone();
            for g in gens {
                let y = self.add(&x, g);
                let i = self.index_of(&y);
                if !seen[i] {
                    seen[i] = true;
                    list.push(y);
                }
            }
            head += 1;
        }
        list.sort_by_key(|x| self.index_of(x));
        list
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// The abelian group `Z^r / <relations>` brought to invariant-factor form.
///
/// With `D = U M V`, coordinates transform as `x -> x V`; the basis element
/// for diagonal slot `j` is row `j` of `V^-1`.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    r: usize,
    diag: Vec<BigInt>,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl AbelianPresentation {
    pub fn new(r: usize, relations: &[Vec<i64>]) -> Self {
        let m = IntMatrix::from_rows_with_cols(relations, r);
        let snf = smith_normal_form(&m);
        let mut diag = snf.diagonal();
        diag.resize(r, BigInt::zero());
        AbelianPresentation { r, diag, v: snf.v, v_inv: snf.v_inv }
    }

    pub fn free_rank(&self) -> usize {
        self.diag.iter().filter(|d| d.is_zero()).count()
    }

    /// Slots with a finite nontrivial cyclic factor.
    fn torsion_slots(&self) -> Vec<usize> {
        (0..self.r).filter(|&j| !self.diag[j].is_zero() && self.diag[j] != BigInt::from(1)).collect()
    }

    pub fn free_slots(&self) -> Vec<usize> {
        (0..self.r).filter(|&j| self.diag[j].is_zero()).collect()
    }

    pub fn torsion(&self) -> FinAbGroup {
        FinAbGroup {
            factors: self.torsion_slots().iter().map(|&j| self.diag[j].to_u64().expect("factor fits")).collect(),
        }
    }

    fn transformed(&self, x: &[i64]) -> Vec<BigInt> {
        (0..self.r)
            .map(|j| (0..self.r).fold(BigInt::zero(), |acc, k| acc + BigInt::from(x[k]) * self.v.get(k, j)))
            .collect()
    }

    /// Torsion coordinates of the class of `x`.
    pub fn coords(&self, x: &[i64]) -> FinAbElement {
        let y = self.transformed(x);
        self.torsion_slots()
            .iter()
            .map(|&j| y[j].mod_floor(&self.diag[j]).to_u64().expect("reduced coordinate"))
            .collect()
    }

    /// Free coordinates of the class of `x`.
    pub fn free_coords(&self, x: &[i64]) -> Vec<BigInt> {
        let y = self.transformed(x);
        self.free_slots().iter().map(|&j| y[j].clone()).collect()
    }

    /// Preimages in `Z^r` of the torsion basis elements.
    pub fn torsion_basis(&self) -> Vec<Vec<i64>> {
        self.torsion_slots()
            .iter()
            .map(|&j| (0..self.r).map(|k| self.v_inv.get(j, k).to_i64().expect("basis entry fits")).collect())
            .collect()
    }
}

/// Invariant-factor structure of an abelian subgroup of a finite group.
#[derive(Clone, Debug)]
pub struct AbelianSubgroup {
    pub group: FinAbGroup,
    /// Group elements realizing the invariant-factor basis.
    pub basis: Vec<usize>,
    /// Coordinates of each subgroup element.
    pub coords: HashMap<usize, FinAbElement>,
}

impl AbelianSubgroup {
    /// Group element with the given coordinates.
    pub fn embed(&self, g: &FiniteGroup, x: &[u64]) -> usize {
        x.iter().zip(&self.basis).fold(0, |acc, (&k, &b)| g.mul(acc, g.pow(b, k as i64)))
    }

    /// Sorted group elements of the subgroup.
    pub fn elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.coords.keys().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Structure of the subgroup generated by pairwise commuting `gens`.
pub fn abelian_subgroup(g: &FiniteGroup, gens: &[usize]) -> AbelianSubgroup {
    let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
    let k = gens.len();
    // BFS assigning each element an exponent vector; every edge yields a relation.
    let mut vecs: HashMap<usize, Vec<i64>> = HashMap::new();
    vecs.insert(0, vec![0; k]);
    let mut queue = vec![0usize];
    let mut relations: Vec<Vec<i64>> = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        let vx = vecs[&x].clone();
        for (s, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            let mut vy = vx.clone();
            vy[s] += 1;
            match vecs.get(&y) {
                Some(w) => relations.push(vy.iter().zip(w).map(|(a, b)| a - b).collect()),
                None => {
                    vecs.insert(y, vy);
                    queue.push(y);
                }
            }
        }
        head += 1;
    }
    let pres = AbelianPresentation::new(k, &relations);
    let group = pres.torsion();
    let basis = pres
        .torsion_basis()
        .iter()
        .map(|b| b.iter().zip(&gens).fold(0, |acc, (&e, &gen)| g.mul(acc, g.pow(gen, e))))
        .collect();
    let coords = vecs.iter().map(|(&x, v)| (x, pres.coords(v))).collect();
    AbelianSubgroup { group, basis, coords }
}
