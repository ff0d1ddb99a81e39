use serde::{Deserialize, Serialize};

use super::{cyclic_reduce, GroupPresentation, Word};
use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Homomorphism counts against a panel of groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCountProfile {
    pub entries: Vec<ProfileEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub target: String,
    pub count: u64,
}

/// Removes a generator occurring exactly once overall; its relator then
/// determines it uniquely from the others, so the count is unchanged.
fn eliminate(num_gens: usize, mut rels: Vec<Word>) -> (Vec<bool>, Vec<Word>) {
    let mut alive = vec![true; num_gens];
    loop {
        let mut occurrences = vec![0usize; num_gens];
        for r in &rels {
            for &x in r {
                occurrences[x.unsigned_abs() as usize - 1] += 1;
            }
        }
        let Some(g) = (0..num_gens).find(|&g| alive[g] && occurrences[g] == 1) else {
            break;
        };
        alive[g] = false;
        rels.retain(|r| !r.iter().any(|&x| x.unsigned_abs() as usize - 1 == g));
    }
    (alive, rels)
}

/// Connected components of generators linked by shared relators.
fn components(alive: &[bool], rels: &[Word]) -> Vec<(Vec<usize>, Vec<Word>)> {
    let n = alive.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for r in rels {
        let first = r[0].unsigned_abs() as usize - 1;
        for &x in r {
            let a = find(&mut parent, first);
            let b = find(&mut parent, x.unsigned_abs() as usize - 1);
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut comps: Vec<(Vec<usize>, Vec<Word>)> = Vec::new();
    let mut root_pos: Vec<Option<usize>> = vec![None; n];
    for g in (0..n).filter(|&g| alive[g]) {
        let root = find(&mut parent, g);
        let pos = *root_pos[root].get_or_insert_with(|| {
            comps.push((Vec::new(), Vec::new()));
            comps.len() - 1
        });
        comps[pos].0.push(g);
    }
    for r in rels {
        let root = find(&mut parent, r[0].unsigned_abs() as usize - 1);
        comps[root_pos[root].expect("relator generators are alive")].1.push(r.clone());
    }
    comps
}

struct Component<'a> {
    g: &'a FiniteGroup,
    /// Generators in assignment order.
    order: Vec<usize>,
    /// Candidate images per depth.
    candidates: Vec<Vec<usize>>,
    /// Relators fully assigned at each depth, with letters rewritten to depths.
    checks: Vec<Vec<Word>>,
    /// At each depth, a relator solving for that depth's generator: the
    /// prefix and suffix around its single occurrence, and the exponent.
    solver: Vec<Option<(Word, Word, i32)>>,
    budget: u64,
    nodes: u64,
}

impl Component<'_> {
    fn eval(&self, w: &[i32], assign: &[usize]) -> usize {
        w.iter().fold(0, |acc, &x| {
            let v = assign[x.unsigned_abs() as usize - 1];
            self.g.mul(acc, if x > 0 { v } else { self.g.inv(v) })
        })
    }

    fn count(&mut self, assign: &mut Vec<usize>) -> Result<u64> {
        let depth = assign.len();
        if depth == self.order.len() {
            return Ok(1);
        }
        let forced = self.solver[depth].as_ref().map(|(pre, post, e)| {
            // pre * x^e * post = 1, so x^e = pre^-1 post^-1
            let v = self.g.mul(self.g.inv(self.eval(pre, assign)), self.g.inv(self.eval(post, assign)));
            if *e > 0 {
                v
            } else {
                self.g.inv(v)
            }
        });
        let options: Vec<usize> = match forced {
            Some(v) => {
                if self.candidates[depth].binary_search(&v).is_ok() {
                    vec![v]
                } else {
                    vec![]
                }
            }
            None => self.candidates[depth].clone(),
        };
        let mut total: u64 = 0;
        for v in options {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            assign.push(v);
            if self.checks[depth].iter().all(|r| self.eval(r, assign) == 0) {
                let sub = self.count(assign)?;
                total = total.checked_add(sub).ok_or(Error::BudgetExceeded { budget: self.budget })?;
            }
            assign.pop();
        }
        Ok(total)
    }
}

fn count_component(g: &FiniteGroup, gens: &[usize], rels: &[Word], budget: u64) -> Result<(u64, u64)> {
    let uses = |r: &Word, x: usize| r.iter().any(|&l| l.unsigned_abs() as usize - 1 == x);
    // order: repeatedly take the generator completing or touching the most relators
    let mut order: Vec<usize> = Vec::new();
    let mut remaining: Vec<usize> = gens.to_vec();
    while !remaining.is_empty() {
        let score = |x: usize, order: &[usize]| {
            let completes = rels
                .iter()
                .filter(|r| uses(r, x) && r.iter().all(|&l| {
                    let y = l.unsigned_abs() as usize - 1;
                    y == x || order.contains(&y)
                }))
                .count();
            let touches = rels.iter().filter(|r| uses(r, x)).count();
            (completes, touches)
        };
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .max_by(|(_, &a), (_, &b)| score(a, &order).cmp(&score(b, &order)).then(b.cmp(&a)))
            .expect("nonempty");
        order.push(remaining.remove(pos));
    }
    let depth_of = |x: usize| order.iter().position(|&y| y == x).expect("generator in component");
    let rewrite = |r: &Word| -> Word {
        r.iter().map(|&l| (depth_of(l.unsigned_abs() as usize - 1) as i32 + 1) * l.signum()).collect()
    };
    let k = order.len();
    let mut checks: Vec<Vec<Word>> = vec![Vec::new(); k];
    let mut solver: Vec<Option<(Word, Word, i32)>> = vec![None; k];
    let mut candidates: Vec<Vec<usize>> = vec![g.elements().collect(); k];
    for r in rels {
        let w = rewrite(r);
        let top = w.iter().map(|&l| l.unsigned_abs() as usize - 1).max().expect("nonempty relator");
        if w.iter().all(|&l| l.unsigned_abs() as usize - 1 == top) {
            // a power of one generator restricts its candidates
            let e: i64 = w.iter().map(|&l| l.signum() as i64).sum();
            candidates[top].retain(|&x| g.pow(x, e) == 0);
            continue;
        }
        let hits: Vec<usize> = (0..w.len()).filter(|&i| w[i].unsigned_abs() as usize - 1 == top).collect();
        if hits.len() == 1 && solver[top].is_none() {
            let i = hits[0];
            solver[top] = Some((w[..i].to_vec(), w[i + 1..].to_vec(), w[i].signum()));
        }
        checks[top].push(w);
    }
    let mut comp = Component { g, order, candidates, checks, solver, budget, nodes: 0 };
    let count = comp.count(&mut Vec::with_capacity(k))?;
    Ok((count, comp.nodes))
}

/// Number of homomorphisms from the presented group to `g`.
pub fn hom_count(p: &GroupPresentation, g: &FiniteGroup) -> Result<u64> {
    hom_count_with(p, g, &Limits::default())
}

pub fn hom_count_with(p: &GroupPresentation, g: &FiniteGroup, limits: &Limits) -> Result<u64> {
    let rels: Vec<Word> = p.relators().iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
    let (alive, rels) = eliminate(p.num_generators(), rels);
    let overflow = Error::BudgetExceeded { budget: limits.hom_budget };
    let mut total: u64 = 1;
    let mut budget = limits.hom_budget;
    for (gens, comp_rels) in components(&alive, &rels) {
        let factor = if comp_rels.is_empty() {
            g.order() as u64
        } else {
            let (c, used) = count_component(g, &gens, &comp_rels, budget)?;
            budget -= used.min(budget);
            c
        };
        total = total.checked_mul(factor).ok_or_else(|| overflow.clone())?;
    }
    Ok(total)
}

/// Counts against every group of a panel, labelled by group name.
pub fn hom_profile(p: &GroupPresentation, panel: &[FiniteGroup]) -> Result<HomCountProfile> {
    hom_profile_with(p, panel, &Limits::default())
}

pub fn hom_profile_with(p: &GroupPresentation, panel: &[FiniteGroup], limits: &Limits) -> Result<HomCountProfile> {
    let entries = panel
        .iter()
        .enumerate()
        .map(|(i, g)| {
            Ok(ProfileEntry {
                target: g.name().map(String::from).unwrap_or_else(|| format!("group{i}")),
                count: hom_count_with(p, g, limits)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomCountProfile { entries })
}
