//! Characters of finite groups with values in `Q/Z`.
//!
//! A homomorphism from a finite group to the nonzero complex numbers lands in
//! the roots of unity, so `exp(2 pi i t)` is recorded as `t` in `[0, 1)`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use super::abelian::{AbelianPresentation, FinAbElement, FinAbGroup};
use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// An element of `Q/Z`, always normalized into `[0, 1)`.
pub type Qz = Ratio<i64>;

pub fn qz(num: i64, den: i64) -> Qz {
    normalize(Ratio::new(num, den))
}

pub fn normalize(r: Qz) -> Qz {
    r - r.floor()
}

/// Exponent-vector coordinates of every element in the abelianization.
fn abelian_coords(g: &FiniteGroup) -> (FinAbGroup, Vec<FinAbElement>) {
    let gens = g.generators();
    let k = gens.len();
    let n = g.order();
    let mut vecs: Vec<Option<Vec<i64>>> = vec![None; n];
    vecs[0] = Some(vec![0; k]);
    let mut queue = vec![0usize];
    let mut relations = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        let vx = vecs[x].clone().expect("visited");
        for (s, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            let mut vy = vx.clone();
            vy[s] += 1;
            match &vecs[y] {
                Some(w) => relations.push(vy.iter().zip(w).map(|(a, b)| a - b).collect::<Vec<i64>>()),
                None => {
                    vecs[y] = Some(vy);
                    queue.push(y);
                }
            }
        }
        head += 1;
    }
    // Each cycle in the Cayley graph is a relator; the spanning-tree
    // relators present the group, so their exponent sums present G^ab.
    let pres = AbelianPresentation::new(k, &relations);
    debug_assert_eq!(pres.free_rank(), 0);
    let coords = vecs.iter().map(|v| pres.coords(v.as_ref().expect("generators generate"))).collect();
    (pres.torsion(), coords)
}

/// `G^ab` in invariant-factor form.
pub fn abelianization(g: &FiniteGroup) -> FinAbGroup {
    abelian_coords(g).0
}

/// A homomorphism `G -> Q/Z`, stored by its value on every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    values: Vec<Qz>,
}

impl Character {
    pub fn trivial(g: &FiniteGroup) -> Self {
        Character { values: vec![Qz::zero(); g.order()] }
    }

    /// Extends values on `g.generators()` and checks the homomorphism property.
    pub fn from_generator_values(g: &FiniteGroup, on_gens: &[Qz]) -> Result<Self> {
        if on_gens.len() != g.generators().len() {
            return Err(Error::invalid("one value per generator is required"));
        }
        let mut values: Vec<Option<Qz>> = vec![None; g.order()];
        values[0] = Some(Qz::zero());
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            let vx = values[x].expect("visited");
            for (&gen, &v) in g.generators().iter().zip(on_gens) {
                let y = g.mul(x, gen);
                let vy = normalize(vx + v);
                match values[y] {
                    None => {
                        values[y] = Some(vy);
                        queue.push(y);
                    }
                    Some(w) if w != vy => return Err(Error::invalid("generator values do not define a character")),
                    Some(_) => {}
                }
            }
            head += 1;
        }
        Ok(Character { values: values.into_iter().map(|v| v.expect("generators generate")).collect() })
    }

    /// Wraps a full value table after checking additivity.
    pub fn from_values(g: &FiniteGroup, values: Vec<Qz>) -> Result<Self> {
        if values.len() != g.order() {
            return Err(Error::invalid("one value per element is required"));
        }
        let values: Vec<Qz> = values.into_iter().map(normalize).collect();
        for a in g.elements() {
            for &s in g.generators() {
                if values[g.mul(a, s)] != normalize(values[a] + values[s]) {
                    return Err(Error::NotHomomorphism { a, b: s });
                }
            }
        }
        Ok(Character { values })
    }

    pub fn eval(&self, x: usize) -> Qz {
        self.values[x]
    }

    pub fn values(&self) -> &[Qz] {
        &self.values
    }

    pub fn on_generators(&self, g: &FiniteGroup) -> Vec<Qz> {
        g.generators().iter().map(|&s| self.values[s]).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(&a, &b)| normalize(a + b)).collect() }
    }

    pub fn scale(&self, k: i64) -> Character {
        Character { values: self.values.iter().map(|&a| normalize(a * k)).collect() }
    }

    /// Pull back along a homomorphism given as an element map into this domain.
    pub fn pullback(&self, f: &[usize]) -> Character {
        Character { values: f.iter().map(|&x| self.values[x]).collect() }
    }

    /// Sorted kernel.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&x| self.values[x].is_zero()).collect()
    }

    /// Order of the image, a cyclic subgroup of `Q/Z`.
    pub fn image_order(&self) -> u64 {
        self.values.iter().fold(1i64, |l, v| l.lcm(v.denom())) as u64
    }
}

/// `Hom(G, Q/Z)`, identified with `G^ab` through the invariant-factor basis.
///
/// The character with coordinates `k` sends an element whose abelianized
/// coordinates are `x` to `sum k_i x_i / d_i`.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub group: FinAbGroup,
    coords: Vec<FinAbElement>,
}

impl CharacterGroup {
    pub fn new(g: &FiniteGroup) -> Self {
        let (group, coords) = abelian_coords(g);
        CharacterGroup { group, coords }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Coordinates of an element of `G` in `G^ab`.
    pub fn abelianized(&self, x: usize) -> &FinAbElement {
        &self.coords[x]
    }

    pub fn character(&self, k: &[u64]) -> Character {
        let d = self.group.factors();
        let values = self
            .coords
            .iter()
            .map(|x| {
                normalize(x.iter().zip(k).zip(d).fold(Qz::zero(), |acc, ((&xi, &ki), &di)| {
                    acc + Ratio::new((xi * ki % di) as i64, di as i64)
                }))
            })
            .collect();
        Character { values }
    }

    /// Every character, in index order of `self.group`.
    pub fn all(&self) -> Vec<Character> {
        self.group.elements().iter().map(|k| self.character(k)).collect()
    }

    /// Coordinates of a character of the same group.
    pub fn coords_of(&self, chi: &Character) -> Option<FinAbElement> {
        // evaluate on the preimages of the basis elements of G^ab
        let r = self.group.rank();
        let mut k = vec![0u64; r];
        for (i, &d) in self.group.factors().iter().enumerate() {
            let mut unit = vec![0u64; r];
            unit[i] = 1;
            let x = self.coords.iter().position(|c| *c == unit)?;
            let v = chi.eval(x) * d as i64;
            if !v.is_integer() {
                return None;
            }
            k[i] = v.to_integer().rem_euclid(d as i64) as u64;
        }
        (self.character(&k) == *chi).then_some(k)
    }

    /// Elements of `(G*)^d`, sorted by index.
    pub fn power_image(&self, d: u64) -> Vec<FinAbElement> {
        let gens: Vec<FinAbElement> = (0..self.group.rank())
            .map(|i| {
                let mut e = self.group.zero();
                e[i] = 1;
                self.group.scale(&e, d as i64)
            })
            .collect();
        self.group.span(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::symmetric;
    use crate::algebra::group::cyclic;

    #[test]
    fn character_groups() {
        assert_eq!(CharacterGroup::new(&symmetric(3)).group.factors(), &[2]);
        let (v4, _, _) = FiniteGroup::direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(CharacterGroup::new(&v4).power_image(2).len(), 1);
        assert_eq!(CharacterGroup::new(&cyclic(6)).power_image(2).len(), 3);
    }

    #[test]
    fn characters_are_homomorphisms() {
        let g = symmetric(4);
        let cg = CharacterGroup::new(&g);
        for chi in cg.all() {
            Character::from_values(&g, chi.values().to_vec()).unwrap();
            assert_eq!(cg.coords_of(&chi).map(|k| cg.character(&k)), Some(chi));
        }
    }

    #[test]
    fn rejects_non_character() {
        let z3 = cyclic(3);
        assert!(Character::from_generator_values(&z3, &[qz(1, 2)]).is_err());
        assert!(Character::from_generator_values(&z3, &[qz(1, 3)]).is_ok());
    }
}
