//! Todd-Coxeter coset enumeration, relator-tracing (HLT) strategy.

use super::{cyclic_reduce, GroupPresentation, Word};
use crate::algebra::{FiniteGroup, Perm};
use crate::error::Result;
use crate::limits::Limits;

const UNDEF: u32 = u32::MAX;

/// Outcome of an enumeration: the index, or `Unknown` when the table
/// outgrew its limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetResult {
    Index(usize),
    Unknown,
}

/// A complete coset table; coset 0 is the subgroup.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// `action[g][c]` is the coset `c * g` for generator `g`.
    pub action: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.action.first().map_or(1, |a| a.len())
    }

    /// The generator permutations of the coset action, points acted on from
    /// the right.
    pub fn permutations(&self) -> Vec<Perm> {
        self.action.iter().map(|a| Perm::from_images(a.clone()).expect("complete coset table")).collect()
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: usize,
    max_cosets: usize,
    deductions: Vec<(u32, usize)>,
    /// Relator conjugates indexed by first column.
    by_first: Vec<Vec<Vec<usize>>>,
    overflow: bool,
}

/// Column of letter `x`: `2g` for a generator, `2g+1` for its inverse.
fn col(x: i32) -> usize {
    2 * (x.unsigned_abs() as usize - 1) + usize::from(x < 0)
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn cosets(&self) -> usize {
        self.forward.len()
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn alive(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut x = c;
        while self.forward[x as usize] != r {
            let next = self.forward[x as usize];
            self.forward[x as usize] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: u32, x: usize) {
        if self.live >= self.max_cosets {
            self.overflow = true;
            return;
        }
        let d = self.cosets() as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        self.deductions.push((c, x));
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.forward[drop as usize] = keep;
        self.live -= 1;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                if self.get(f, inv_col(x)) == e {
                    self.set(f, inv_col(x), UNDEF);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex, &mut queue);
                } else {
                    let fy = self.get(f1, inv_col(x));
                    if fy != UNDEF {
                        self.merge(e1, fy, &mut queue);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, inv_col(x), e1);
                        self.deductions.push((e1, x));
                    }
                }
            }
        }
    }

    /// Traces `w` from `c` from both ends; defines new cosets only if `fill`.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) {
        if w.is_empty() {
            return;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != UNDEF {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i as isize && self.get(b, inv_col(w[j as usize])) != UNDEF {
                b = self.get(b, inv_col(w[j as usize]));
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if i as isize == j {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                self.deductions.push((f, w[i]));
                return;
            }
            if !fill {
                return;
            }
            self.define(f, w[i]);
            if self.overflow {
                return;
            }
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if self.overflow {
                return;
            }
            for (cc, xx) in [(c, x), (self.get(c, x), inv_col(x))] {
                if cc == UNDEF || !self.alive(cc) {
                    continue;
                }
                for k in 0..self.by_first[xx].len() {
                    if !self.alive(cc) {
                        break;
                    }
                    let w = self.by_first[xx][k].clone();
                    self.scan(cc, &w, false);
                }
            }
        }
    }

    fn is_closed(&self, rels: &[Vec<usize>]) -> bool {
        (0..self.cosets() as u32).all(|c| {
            (0..self.ncols).all(|x| self.get(c, x) != UNDEF)
                && rels.iter().all(|r| r.iter().fold(c, |d, &x| self.get(d, x)) == c)
        })
    }

    /// Renumbers live cosets in order; returns the new index of `c` or of
    /// the next live coset after it.
    fn compact(&mut self, c: u32) -> u32 {
        let n = self.cosets();
        let mut new_index = vec![UNDEF; n];
        let mut next = 0u32;
        for k in 0..n {
            if self.alive(k as u32) {
                new_index[k] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for k in 0..n {
            if new_index[k] == UNDEF {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.table[k * self.ncols + x];
                table.push(if d == UNDEF { UNDEF } else { new_index[self.rep(d) as usize] });
            }
        }
        let remap = |k: usize| (k..n).find(|&m| new_index[m] != UNDEF).map_or(next, |m| new_index[m]);
        let c_new = remap(c as usize);
        self.deductions.clear();
        self.table = table;
        self.forward = (0..next).collect();
        c_new
    }
}

fn run(p: &GroupPresentation, subgroup: &[Word], max_cosets: usize) -> Option<CosetTable> {
    let ngens = p.num_generators();
    let ncols = 2 * ngens;
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| cyclic_reduce(r))
        .filter(|r| !r.is_empty())
        .map(|r| r.iter().map(|&x| col(x)).collect())
        .collect();
    let mut by_first: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols];
    for r in &rels {
        let inv: Vec<usize> = r.iter().rev().map(|&c| inv_col(c)).collect();
        for w in [r, &inv] {
            for s in 0..w.len() {
                let mut conj = w[s..].to_vec();
                conj.extend_from_slice(&w[..s]);
                if !by_first[conj[0]].contains(&conj) {
                    by_first[conj[0]].push(conj);
                }
            }
        }
    }
    let mut e = Enumerator {
        ncols,
        table: vec![UNDEF; ncols],
        forward: vec![0],
        live: 1,
        max_cosets,
        deductions: Vec::new(),
        by_first,
        overflow: false,
    };
    for w in subgroup {
        let w: Vec<usize> = super::free_reduce(w).iter().map(|&x| col(x)).collect();
        e.scan(0, &w, true);
        if e.overflow {
            return None;
        }
        e.process_deductions();
    }
    // HLT passes until every relator closes at every live coset.
    loop {
        let mut c: u32 = 0;
        while (c as usize) < e.cosets() {
            if e.alive(c) {
                for r in &rels {
                    if !e.alive(c) {
                        break;
                    }
                    e.scan(c, r, true);
                    if e.overflow {
                        return None;
                    }
                    e.process_deductions();
                }
                for x in 0..ncols {
                    if e.alive(c) && e.get(c, x) == UNDEF {
                        e.define(c, x);
                        if e.overflow {
                            return None;
                        }
                        e.process_deductions();
                    }
                }
            }
            c += 1;
            let dead = e.cosets() - e.live;
            if dead > 0 && dead * 4 >= e.cosets() {
                c = e.compact(c);
            }
        }
        e.compact(0);
        if e.is_closed(&rels) {
            break;
        }
    }
    e.compact(0);
    let n = e.cosets();
    let action = (0..ngens).map(|g| (0..n).map(|k| e.get(k as u32, 2 * g)).collect()).collect();
    Some(CosetTable { action })
}

/// Index of the subgroup generated by `subgroup` (the group order when it
/// is empty), or `Unknown` past `max_cosets` live cosets.
pub fn todd_coxeter(p: &GroupPresentation, subgroup: &[Word], max_cosets: usize) -> CosetResult {
    match run(p, subgroup, max_cosets.max(1)) {
        Some(t) => CosetResult::Index(t.index()),
        None => CosetResult::Unknown,
    }
}

/// Complete coset table, if the enumeration finishes.
pub fn coset_table(p: &GroupPresentation, subgroup: &[Word], max_cosets: usize) -> Option<CosetTable> {
    run(p, subgroup, max_cosets.max(1))
}

/// A presented group realized by its regular coset action.
#[derive(Clone, Debug)]
pub struct FiniteQuotient {
    pub group: FiniteGroup,
    /// Element of `group` for each presentation generator.
    pub generator_images: Vec<usize>,
}

impl FiniteQuotient {
    /// Element represented by a word.
    pub fn eval(&self, w: &[i32]) -> usize {
        w.iter().fold(0, |acc, &x| {
            let v = self.generator_images[x.unsigned_abs() as usize - 1];
            self.group.mul(acc, if x > 0 { v } else { self.group.inv(v) })
        })
    }
}

/// The presented group when finite within the coset limit and the order
/// bound; `Ok(None)` when the enumeration does not finish.
pub fn finite_quotient(p: &GroupPresentation) -> Result<Option<FiniteQuotient>> {
    finite_quotient_with(p, &Limits::default())
}

pub fn finite_quotient_with(p: &GroupPresentation, limits: &Limits) -> Result<Option<FiniteQuotient>> {
    let Some(table) = run(p, &[], limits.max_cosets) else {
        return Ok(None);
    };
    let n = table.index();
    if n > limits.max_group_order {
        return Err(crate::Error::OrderBoundExceeded { what: "finite quotient", bound: limits.max_group_order, actual: n });
    }
    let perms = table.permutations();
    if perms.is_empty() || n == 1 {
        return Ok(Some(FiniteQuotient { group: FiniteGroup::trivial(), generator_images: vec![0; perms.len()] }));
    }
    let (group, elems) = FiniteGroup::from_closure(Perm::identity(n), &perms, |a, b| a.then(b), limits.max_group_order)?;
    let generator_images = perms.iter().map(|q| elems.iter().position(|e| e == q).expect("generator in closure")).collect();
    Ok(Some(FiniteQuotient { group, generator_images }))
}
