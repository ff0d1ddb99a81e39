//! Finite quotients certifying that orbifold fundamental groups inject
//! their cone-point subgroups.

use crate::algebra::{FiniteGroup, Perm};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Heisenberg group over `Z_n` with images of `a, b, c` satisfying
/// `a b a^-1 b^-1 = c`.
#[derive(Clone, Debug)]
pub struct HeisenbergWitness {
    pub group: FiniteGroup,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl HeisenbergWitness {
    /// The defining relation holds and `z` has order exactly `n`.
    pub fn certifies(&self, n: u64) -> bool {
        let g = &self.group;
        let comm = g.mul(g.mul(self.x, self.y), g.mul(g.inv(self.x), g.inv(self.y)));
        comm == self.z && g.element_order(self.z) == n
    }
}

/// `(Z_n z + Z_n y) x| Z_n x` with `x` acting by the unipotent matrix
/// `[[1,1],[0,1]]`, realized as unitriangular triples `(x, y, z)`.
pub fn heisenberg_witness(n: u64) -> Result<HeisenbergWitness> {
    if n == 0 {
        return Err(Error::invalid("heisenberg witness needs n >= 1"));
    }
    let m = n as usize;
    let limits = Limits::default();
    let mul = |&(a, b, c): &(usize, usize, usize), &(d, e, f): &(usize, usize, usize)| {
        ((a + d) % m, (b + e) % m, (c + f + a * e) % m)
    };
    let gens = [(1 % m, 0, 0), (0, 1 % m, 0)];
    let (group, elems) = FiniteGroup::from_closure((0, 0, 0), &gens, mul, limits.max_group_order)?;
    let pos = |t: (usize, usize, usize)| elems.iter().position(|&e| e == t).expect("element of the group");
    Ok(HeisenbergWitness {
        x: pos(gens[0]),
        y: pos(gens[1]),
        z: pos((0, 0, 1 % m)),
        group: group.with_name(format!("Heis({n})")),
    })
}

/// Finite field of odd prime power order, elements `0..q` as base-`p`
/// coefficient vectors.
struct Field {
    q: usize,
    p: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

fn prime_power(q: usize) -> Option<(usize, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

impl Field {
    fn new(q: usize) -> Option<Field> {
        let (p, k) = prime_power(q)?;
        let k = k as usize;
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let pack = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
        let mut add = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let s: Vec<usize> = (0..k).map(|i| (da[i] + db[i]) % p).collect();
                add[a * q + b] = pack(&s) as u16;
            }
        }
        // try monic moduli x^k + tail until multiplication has no zero divisors
        for tail in 0..q {
            let f = digits(tail);
            let mut mul = vec![0u16; q * q];
            for a in 0..q {
                for b in 0..q {
                    let (da, db) = (digits(a), digits(b));
                    let mut prod = vec![0usize; 2 * k];
                    for i in 0..k {
                        for j in 0..k {
                            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                        }
                    }
                    for deg in (k..2 * k).rev() {
                        let c = prod[deg];
                        if c != 0 {
                            prod[deg] = 0;
                            for (i, &fi) in f.iter().enumerate() {
                                prod[deg - k + i] = (prod[deg - k + i] + (p - c) * fi) % p;
                            }
                        }
                    }
                    mul[a * q + b] = pack(&prod[..k]) as u16;
                }
            }
            let is_field = (1..q).all(|a| (1..q).any(|b| mul[a * q + b] == 1));
            if is_field {
                return Some(Field { q, p, add, mul });
            }
        }
        None
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    fn inv(&self, a: usize) -> usize {
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("nonzero element")
    }

    /// The image of the integer `k`.
    fn int(&self, k: i64) -> usize {
        k.rem_euclid(self.p as i64) as usize
    }
}

type Mat = [usize; 4];

fn mat_mul(f: &Field, a: &Mat, b: &Mat) -> Mat {
    let e = |x: usize, y: usize, z: usize, w: usize| f.add(f.mul(x, y), f.mul(z, w));
    [e(a[0], b[0], a[1], b[2]), e(a[0], b[1], a[1], b[3]), e(a[2], b[0], a[3], b[2]), e(a[2], b[1], a[3], b[3])]
}

fn is_scalar_unit(f: &Field, a: &Mat) -> bool {
    a[1] == 0 && a[2] == 0 && a[0] == a[3] && (a[0] == 1 || a[0] == f.int(-1))
}

/// Order of a matrix of SL(2,q) modulo `+-1`.
fn psl_order(f: &Field, a: &Mat) -> u64 {
    let mut x = *a;
    let mut k = 1;
    while !is_scalar_unit(f, &x) {
        x = mat_mul(f, &x, a);
        k += 1;
    }
    k
}

/// Mobius action on the projective line; point `q` is infinity.
fn mobius(f: &Field, a: &Mat) -> Perm {
    let q = f.q;
    let images = (0..=q)
        .map(|z| {
            let (num, den) = if z == q { (a[0], a[2]) } else { (f.add(f.mul(a[0], z), a[1]), f.add(f.mul(a[2], z), a[3])) };
            if den == 0 {
                q as u32
            } else {
                f.mul(num, f.inv(den)) as u32
            }
        })
        .collect();
    Perm::from_images(images).expect("invertible matrix")
}

/// A triple in PSL(2,q) acting on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Psl2Witness {
    pub q: u64,
    pub x: Perm,
    pub y: Perm,
}

impl Psl2Witness {
    /// Orders of `x`, `y` and `xy`.
    pub fn orders(&self) -> (u64, u64, u64) {
        (self.x.order(), self.y.order(), self.x.then(&self.y).order())
    }
}

/// Largest field searched by [`psl2_witness`].
pub const PSL2_MAX_Q: u64 = 101;

/// Searches odd prime powers `q <= q_max` for `x, y` in PSL(2,q) with `x`
/// of order `m`, `y` of order `n` and `xy` of order `p`.
///
/// `x` runs over one representative per conjugacy class of the right
/// order; `y` is found by solving for its entries with prescribed traces.
pub fn psl2_witness(m: u64, n: u64, p: u64, q_max: u64) -> Result<Option<Psl2Witness>> {
    if q_max > PSL2_MAX_Q {
        return Err(Error::invalid(format!("q_max {q_max} exceeds {PSL2_MAX_Q}")));
    }
    if m < 2 || n < 2 || p < 2 {
        return Err(Error::invalid("orders must be at least 2"));
    }
    for q in (3..=q_max as usize).step_by(2) {
        let Some(f) = Field::new(q) else { continue };
        if let Some((x, y)) = search_field(&f, m, n, p) {
            let w = Psl2Witness { q: q as u64, x: mobius(&f, &x), y: mobius(&f, &y) };
            debug_assert_eq!(w.orders(), (m, n, p));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn search_field(f: &Field, m: u64, n: u64, p: u64) -> Option<(Mat, Mat)> {
    let q = f.q;
    let companion = |t: usize| -> Mat { [0, f.int(-1), 1, t] };
    let order_of_trace: Vec<u64> = (0..q).map(|t| psl_order(f, &companion(t))).collect();
    let traces = |k: u64| -> Vec<usize> { (0..q).filter(|&t| order_of_trace[t] == k).collect() };
    let (tm, tn, tp) = (traces(m), traces(n), traces(p));
    if tm.is_empty() || tn.is_empty() || tp.is_empty() {
        return None;
    }
    let mut reps: Vec<Mat> = tm.iter().map(|&t| companion(t)).collect();
    if m == f.p as u64 {
        // second class of unipotents: [[1, v], [0, 1]] with v a non-square
        let squares: Vec<usize> = (1..q).map(|a| f.mul(a, a)).collect();
        if let Some(v) = (1..q).find(|v| !squares.contains(v)) {
            reps.push([1, v, 0, 1]);
        }
    }
    let in_tp = |t: usize| tp.contains(&t);
    for x in &reps {
        for &s in &tn {
            for a in 0..q {
                let d = f.add(s, f.neg(a));
                let e = f.add(f.mul(a, d), f.int(-1));
                for b in 0..q {
                    let cs: Vec<usize> = if b == 0 {
                        if e != 0 {
                            continue;
                        }
                        (0..q).collect()
                    } else {
                        vec![f.mul(e, f.inv(b))]
                    };
                    for c in cs {
                        let y: Mat = [a, b, c, d];
                        let tr = f.add(f.add(f.mul(x[0], a), f.mul(x[1], c)), f.add(f.mul(x[2], b), f.mul(x[3], d)));
                        if !in_tp(tr) || is_scalar_unit(f, &y) {
                            continue;
                        }
                        let xy = mat_mul(f, x, &y);
                        if psl_order(f, &y) == n && psl_order(f, &xy) == p {
                            return Some((*x, y));
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_examples() {
        let w = heisenberg_witness(1).unwrap();
        assert_eq!(w.group.order(), 1);
        assert!(w.certifies(1));
        for n in [2u64, 3, 5] {
            let w = heisenberg_witness(n).unwrap();
            assert_eq!(w.group.order() as u64, n * n * n);
            assert!(w.certifies(n));
        }
    }

    #[test]
    fn fields_are_fields() {
        for q in [3, 9, 25, 27, 49, 81] {
            let f = Field::new(q).unwrap();
            assert!((1..q).all(|a| f.mul(a, f.inv(a)) == 1));
        }
        assert!(Field::new(15).is_none());
    }

    #[test]
    fn psl2_examples() {
        let w = psl2_witness(2, 3, 5, 11).unwrap().unwrap();
        assert_eq!(w.q, 5);
        assert_eq!(w.orders(), (2, 3, 5));
        let w = psl2_witness(2, 3, 7, 13).unwrap().unwrap();
        assert!(w.q == 7 || w.q == 13);
        assert_eq!(w.orders(), (2, 3, 7));
        let w = psl2_witness(2, 2, 2, 5).unwrap().unwrap();
        assert_eq!(w.orders(), (2, 2, 2));
        assert!(psl2_witness(2, 3, 7, 103).is_err());
    }

    #[test]
    fn psl2_finds_unipotent_orders() {
        // order 3 elements of PSL(2,3) are unipotent
        let w = psl2_witness(3, 3, 2, 3).unwrap().unwrap();
        assert_eq!((w.q, w.orders()), (3, (3, 3, 2)));
    }
}
