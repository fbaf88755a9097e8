//! Dense linear algebra over the prime field `F_p`.
//!
//! Residues are `u64` values in `0..p`; products go through `u128`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub type Matrix = Vec<Vec<u64>>;

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        self.add(a, self.p - b % self.p)
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(self, m: &mut Matrix) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let scale = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, scale);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of `{ x : m x = 0 }` for an `rows x cols` matrix.
    pub fn nullspace(self, m: &Matrix, cols: usize) -> Vec<Vec<u64>> {
        let mut e = m.clone();
        let pivots = self.rref(&mut e);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = self.sub(0, e[row][free]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn mat_vec(self, m: &Matrix, v: &[u64]) -> Vec<u64> {
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)` of a square matrix, as
    /// coefficients from the constant term up (monic, length `n + 1`), via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(self, a: &Matrix) -> Vec<u64> {
        let n = a.len();
        let mut h = a.clone();
        // Similarity transform to Hessenberg form.
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let pivot_inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let f = self.mul(h[i][m - 1], pivot_inv);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(f, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(f, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // polys[k] = charpoly of the leading k x k block.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let mut next = vec![0u64; k + 1];
            // (x - h[k-1][k-1]) * polys[k-1]
            for (d, &c) in polys[k - 1].iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[k - 1][k - 1], c));
            }
            let mut prod = 1u64;
            for i in 1..k {
                prod = self.mul(prod, h[k - i][k - i - 1]);
                let coef = self.mul(prod, h[k - i - 1][k - 1]);
                for (d, &c) in polys[k - i - 1].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in `F_p`, ascending, by evaluating at every residue.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Square roots of `a`: exhaustive search for small moduli, Tonelli–Shanks
    /// otherwise. Returns the roots in ascending order.
    pub fn sqrt(self, a: u64) -> Vec<u64> {
        let a = a % self.p;
        if a == 0 {
            return vec![0];
        }
        if self.p < 10_000 {
            return (1..self.p).filter(|&x| self.mul(x, x) == a).collect();
        }
        match self.tonelli_shanks(a) {
            Some(r) => {
                let mut v = vec![r, self.p - r];
                v.sort_unstable();
                v.dedup();
                v
            }
            None => Vec::new(),
        }
    }

    fn tonelli_shanks(self, a: u64) -> Option<u64> {
        let p = self.p;
        if p == 2 {
            return Some(a);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        let (mut q, mut s) = (p - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| self.pow(z, (p - 1) / 2) == p - 1)?;
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Determinant by cofactor expansion, for the charpoly oracle.
    fn det(f: PrimeField, m: &Matrix) -> u64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0;
        for j in 0..n {
            let minor: Matrix = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = f.mul(m[0][j], det(f, &minor));
            acc = if j % 2 == 0 {
                f.add(acc, term)
            } else {
                f.sub(acc, term)
            };
        }
        acc
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = PrimeField::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(f.mat_vec(&m, &v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn sqrt_paths_agree() {
        let small = PrimeField::new(43);
        assert!(small.sqrt(42).is_empty());
        assert_eq!(small.sqrt(36), vec![6, 37]);
        let big = PrimeField::new(10_009);
        for a in [4u64, 36, 2, 10_008, 1234] {
            let ts = big.sqrt(a);
            let brute: Vec<u64> = (1..10_009).filter(|&x| big.mul(x, x) == a).collect();
            assert_eq!(ts, brute);
        }
    }

    proptest! {
        #[test]
        fn charpoly_matches_cofactor_determinant(entries in proptest::collection::vec(0u64..13, 16), x in 0u64..13) {
            let f = PrimeField::new(13);
            let a: Matrix = entries.chunks(4).map(<[u64]>::to_vec).collect();
            let xi_minus_a: Matrix = (0..4)
                .map(|i| (0..4).map(|j| {
                    let d = if i == j { x } else { 0 };
                    f.sub(d, a[i][j])
                }).collect())
                .collect();
            prop_assert_eq!(f.eval(&f.charpoly(&a), x), det(f, &xi_minus_a));
        }
    }
}
