use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A dense integer matrix with big-integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, data: rows.iter().flat_map(|x| x.iter().map(|&v| v.into())).collect() }
    }

    /// A `rows x cols` matrix from row vectors, used when `rows` may be empty.
    pub fn from_rows_with_cols<T: Into<BigInt> + Copy>(rows: &[Vec<T>], cols: usize) -> Self {
        assert!(rows.iter().all(|x| x.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flat_map(|x| x.iter().map(|&v| v.into())).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self.data[i * self.cols + j];
            self.data[i * self.cols + j] = v;
        }
    }

    /// Replaces rows `(a, b)` by `(p*a + q*b, r*a + s*b)`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self.data[a * self.cols + j].clone();
            let y = self.data[b * self.cols + j].clone();
            self.data[a * self.cols + j] = p * &x + q * &y;
            self.data[b * self.cols + j] = r * &x + s * &y;
        }
    }

    /// Replaces columns `(a, b)` by `(p*a + q*b, r*a + s*b)`.
    fn combine_cols(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for i in 0..self.rows {
            let x = self.data[i * self.cols + a].clone();
            let y = self.data[i * self.cols + b].clone();
            self.data[i * self.cols + a] = p * &x + q * &y;
            self.data[i * self.cols + b] = r * &x + s * &y;
        }
    }
}

/// Smith normal form `D = U * M * V` with `U`, `V` unimodular and the
/// diagonal of `D` a non-negative divisibility chain (zeros last).
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// The diagonal entries, `min(rows, cols)` of them.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Computes the Smith normal form with all four transformation matrices.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Each row operation on D is applied to U; its inverse is applied to
    // the columns of U_inv. Dually for column operations.
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: entry of least absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = d.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            let mut changed = false;
            // clear column t below the pivot with gcd steps
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let a = d.get(t, t).clone();
                let b = d.get(i, t).clone();
                if b.is_multiple_of(&a) {
                    let q = &b / &a;
                    d.add_row(i, t, &(-&q));
                    u.add_row(i, t, &(-&q));
                    u_inv.add_col(t, i, &q);
                    continue;
                }
                let eg = a.extended_gcd(&b);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let (ag, bg) = (&a / &g, &b / &g);
                // [x y; -b/g a/g] has determinant 1; inverse [a/g -y; b/g x]
                d.combine_rows(t, i, &x, &y, &(-&bg), &ag);
                u.combine_rows(t, i, &x, &y, &(-&bg), &ag);
                u_inv.combine_cols(t, i, &ag, &bg, &(-&y), &x);
                changed = true;
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let a = d.get(t, t).clone();
                let b = d.get(t, j).clone();
                if b.is_multiple_of(&a) {
                    let q = &b / &a;
                    d.add_col(j, t, &(-&q));
                    v.add_col(j, t, &(-&q));
                    v_inv.add_row(t, j, &q);
                    continue;
                }
                let eg = a.extended_gcd(&b);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let (ag, bg) = (&a / &g, &b / &g);
                d.combine_cols(t, j, &x, &y, &(-&bg), &ag);
                v.combine_cols(t, j, &x, &y, &(-&bg), &ag);
                v_inv.combine_rows(t, j, &ag, &bg, &(-&y), &x);
                changed = true;
            }
            if changed {
                continue;
            }
            // divisibility: the pivot must divide the trailing block
            let p = d.get(t, t).clone();
            let mut bad: Option<usize> = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d.get(i, j).is_multiple_of(&p) {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    u_inv.add_col(i, t, &(-&one));
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            // inverse of negating row t is negating column t of U_inv
            for i in 0..rows {
                let val = -u_inv.get(i, t);
                u_inv.set(i, t, val);
            }
        }
        t += 1;
    }
    Snf { d, u, v, u_inv, v_inv }
}

/// Diagonal of the Smith normal form as machine integers.
pub fn invariant_diagonal(m: &IntMatrix) -> Vec<u64> {
    smith_normal_form(m).diagonal().iter().map(|x| x.to_u64().expect("diagonal fits in u64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Snf {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "D = U M V");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn small_cases() {
        let s = check(&IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = check(&IntMatrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        let s = check(&IntMatrix::from_rows(&[vec![1i64]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1)]);
    }

    #[test]
    fn rectangular_and_negative() {
        check(&IntMatrix::from_rows(&[vec![4i64, 0], vec![0, 6], vec![1, 1]]));
        check(&IntMatrix::from_rows(&[vec![-6i64, 4, 10], vec![3, -9, 12]]));
        check(&IntMatrix::from_rows(&[vec![0i64, 0, 0], vec![0, 0, 5], vec![0, 7, 0], vec![2, 0, 0]]));
    }
}
