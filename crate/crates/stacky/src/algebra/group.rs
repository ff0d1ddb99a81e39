use std::collections::HashMap;
use std::hash::Hash;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Order up to which [`FiniteGroup::from_table`] verifies associativity.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

/// A finite group stored as a dense Cayley table.
///
/// Elements are indices `0..order`; index 0 is the identity. Groups built by
/// closure are indexed in breadth-first order over words in the generators,
/// so an element's index is the shortlex rank of its shortest word.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
    perm_gens: Option<(usize, Vec<Perm>)>,
    name: Option<String>,
}

impl PartialEq for FiniteGroup {
    /// Equality of labelled tables, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn trivial() -> Self {
        FiniteGroup { n: 1, table: vec![0], inv: vec![0], gens: vec![], perm_gens: None, name: None }
    }

    /// Validates a Cayley table: identity at 0, Latin square, and (up to
    /// [`ASSOCIATIVITY_CHECK_LIMIT`]) associativity.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_checked(rows, true)
    }

    /// As [`FiniteGroup::from_table`] without the associativity check, for
    /// tables that are associative by construction.
    pub(crate) fn from_associative_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_checked(rows, false)
    }

    fn from_table_checked(rows: Vec<Vec<usize>>, check_associativity: bool) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("empty Cayley table"));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::invalid(format!("row {i} is not a permutation of 0..{n}")));
                }
                seen[x] = true;
            }
            table.extend(row.iter().map(|&x| x as u32));
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let x = table[i * n + j] as usize;
                if seen[x] {
                    return Err(Error::invalid(format!("column {j} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::invalid("row and column 0 must be the identity map"));
            }
        }
        if check_associativity && n <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a * n + b] as usize;
                    for c in 0..n {
                        let bc = table[b * n + c] as usize;
                        if table[ab * n + c] != table[a * n + bc] {
                            return Err(Error::invalid(format!("associativity fails at ({a},{b},{c})")));
                        }
                    }
                }
            }
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("Latin square has inverses") as u32)
            .collect();
        let mut g = FiniteGroup { n, table, inv, gens: vec![], perm_gens: None, name: None };
        g.gens = g.greedy_generators();
        Ok(g)
    }

    /// Closure of `gens` under `mul`, indexed breadth-first with shortlex
    /// tie-break. Returns the group and the element list in index order.
    ///
    /// `mul` must be an associative operation with two-sided identity
    /// `identity` on the generated set; it is not re-verified here.
    pub fn from_closure<T, F>(identity: T, gens: &[T], mul: F, bound: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        // right[e * k + s] = index of elems[e] * gens[s]
        let k = gens.len();
        let mut right: Vec<u32> = Vec::new();
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut head = 0;
        while head < elems.len() {
            for (s, g) in gens.iter().enumerate() {
                let prod = mul(&elems[head], g);
                let idx = match index.get(&prod) {
                    Some(&i) => i,
                    None => {
                        let i = elems.len();
                        if i >= bound {
                            return Err(Error::OrderBoundExceeded {
                                what: "generated group",
                                bound,
                                actual: i + 1,
                            });
                        }
                        index.insert(prod.clone(), i);
                        elems.push(prod);
                        parent.push((head, s));
                        i
                    }
                };
                right.push(idx as u32);
            }
            head += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
        }
        // i * j = (i * parent(j)) * gen(j); parents precede children.
        for j in 1..n {
            let (p, s) = parent[j];
            for i in 0..n {
                let ip = table[i * n + p] as usize;
                table[i * n + j] = right[ip * k + s];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut gen_idx: Vec<usize> = Vec::new();
        for g in gens {
            let i = index[g];
            if i != 0 && !gen_idx.contains(&i) {
                gen_idx.push(i);
            }
        }
        Ok((FiniteGroup { n, table, inv, gens: gen_idx, perm_gens: None, name: None }, elems))
    }

    /// The permutation group generated by `gens`, bounded by the default limit.
    pub fn from_permutations(degree: usize, gens: &[Perm]) -> Result<Self> {
        Self::from_permutations_bounded(degree, gens, Limits::default().max_group_order)
    }

    pub fn from_permutations_bounded(degree: usize, gens: &[Perm], bound: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::invalid("at least one generator is required"));
        }
        if let Some(p) = gens.iter().find(|p| p.degree() != degree) {
            return Err(Error::invalid(format!("generator {p} does not have degree {degree}")));
        }
        let (mut g, _) = Self::from_closure(Perm::identity(degree), gens, |a, b| a.then(b), bound)?;
        g.perm_gens = Some((degree, gens.to_vec()));
        Ok(g)
    }

    /// Subgroup generated by `elems`, re-indexed canonically, with its inclusion.
    pub fn subgroup(&self, elems: &[usize]) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<usize> = elems.iter().copied().filter(|&e| e != 0).collect();
        let (sub, incl) = FiniteGroup::from_closure(0usize, &gens, |&a, &b| self.mul(a, b), usize::MAX)
            .expect("unbounded closure");
        (sub, incl)
    }

    /// Group on an explicitly listed subset closed under multiplication, in
    /// the order given (identity first).
    pub fn induced_on(&self, elems: &[usize]) -> Result<FiniteGroup> {
        if elems.first() != Some(&0) {
            return Err(Error::invalid("induced subgroup list must start with the identity"));
        }
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let rows = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| {
                        pos.get(&self.mul(a, b)).copied().ok_or_else(|| Error::invalid("subset is not closed"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// A generating set: the closure generators, or a greedy choice for
    /// tables. Empty for the trivial group.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn perm_generators(&self) -> Option<(usize, &[Perm])> {
        self.perm_gens.as_ref().map(|(d, p)| (*d, p.as_slice()))
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    /// Replaces the generating set; the caller guarantees it generates.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Self {
        debug_assert_eq!(self.subgroup_closure(&gens).len(), self.n);
        self.gens = gens.into_iter().filter(|&g| g != 0).collect();
        self
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `x^-1 a x`.
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        self.elements().fold(1, |l, a| num_integer::lcm(l, self.element_order(a)))
    }

    /// Sorted elements of the subgroup generated by `elems`.
    pub fn subgroup_closure(&self, elems: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut list = vec![0];
        let gens: Vec<usize> = elems.iter().copied().filter(|&e| e != 0).collect();
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &g in &gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
            head += 1;
        }
        list.sort_unstable();
        list
    }

    /// Sorted elements of the normal closure of `elems`.
    pub fn normal_closure(&self, elems: &[usize]) -> Vec<usize> {
        let mut conjugates: Vec<usize> = Vec::new();
        for &e in elems {
            for x in self.elements() {
                conjugates.push(self.conj(e, x));
            }
        }
        conjugates.sort_unstable();
        conjugates.dedup();
        self.subgroup_closure(&conjugates)
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &s in sub {
            inside[s] = true;
        }
        sub.iter().all(|&s| self.gens.iter().all(|&x| inside[self.conj(s, x)]))
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let comms: Vec<usize> = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.subgroup_closure(&comms)
    }

    /// Histogram of element orders as sorted `(order, count)` pairs.
    pub fn order_histogram(&self) -> Vec<(u64, usize)> {
        let mut h: std::collections::BTreeMap<u64, usize> = Default::default();
        for a in self.elements() {
            *h.entry(self.element_order(a)).or_default() += 1;
        }
        h.into_iter().collect()
    }

    /// Shortlex-minimal words in the generators, as generator positions.
    pub fn words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.n];
        words[0] = Some(vec![]);
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            for (s, &g) in self.gens.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().expect("visited");
                    w.push(s);
                    words[y] = Some(w);
                    queue.push(y);
                }
            }
            head += 1;
        }
        words.into_iter().map(|w| w.expect("generators generate")).collect()
    }

    /// Rows of the Cayley table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> (FiniteGroup, Vec<usize>, Vec<usize>) {
        let nb = b.order();
        let mut gens: Vec<(usize, usize)> = a.generators().iter().map(|&x| (x, 0)).collect();
        gens.extend(b.generators().iter().map(|&y| (0, y)));
        let (g, elems) = FiniteGroup::from_closure(
            (0usize, 0usize),
            &gens,
            |&(x1, y1), &(x2, y2)| (a.mul(x1, x2), b.mul(y1, y2)),
            usize::MAX,
        )
        .expect("unbounded closure");
        let mut pos = vec![0usize; a.order() * nb];
        for (i, &(x, y)) in elems.iter().enumerate() {
            pos[x * nb + y] = i;
        }
        let left = (0..a.order()).map(|x| pos[x * nb]).collect();
        let right = (0..nb).map(|y| pos[y]).collect();
        (g, left, right)
    }

    /// Generators picked greedily, highest element order first.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.n).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut count = 1;
        for a in by_order {
            if count == self.n {
                break;
            }
            if inside[a] {
                continue;
            }
            gens.push(a);
            let closure = self.subgroup_closure(&gens);
            inside.iter_mut().for_each(|x| *x = false);
            for &x in &closure {
                inside[x] = true;
            }
            count = closure.len();
        }
        gens
    }
}

/// The cyclic group of order `n` with generator at index 1.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group needs n >= 1");
    if n == 1 {
        return FiniteGroup::trivial().with_name("1");
    }
    let (g, _) = FiniteGroup::from_closure(0usize, &[1usize], |&a, &b| (a + b) % n, usize::MAX).expect("cyclic");
    g.with_name(format!("Z{n}"))
}
