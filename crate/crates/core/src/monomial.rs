//! Monomial bases and the induced action of a linear substitution on
//! homogeneous polynomials (equivalently, on symmetric powers).

use std::collections::HashMap;

use crate::arith::{Mat, PrimeModulus, Scalar};

/// Degree-`d` monomials in `n` variables, in graded-lex order: exponent
/// vectors sorted descending lexicographically, so `x0^d` comes first.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    degree: usize,
    exps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        fn fill(prefix: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<Vec<u32>>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                fill(prefix, nvars, left - e, out);
                prefix.pop();
            }
        }
        let mut exps = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                exps.push(Vec::new());
            }
        } else {
            fill(&mut Vec::with_capacity(nvars), nvars, degree as u32, &mut exps);
        }
        let index = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialBasis { nvars, degree, exps, index }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exps
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Monomial bases of degrees `0..=max_degree` with the index tables needed to
/// multiply by a variable and to multiply two homogeneous pieces.
#[derive(Clone, Debug)]
pub struct MonomialTower {
    bases: Vec<MonomialBasis>,
    /// `raise[d][s][k]`: index in degree `d + 1` of monomial `s` times `x_k`.
    raise: Vec<Vec<Vec<usize>>>,
}

impl MonomialTower {
    pub fn new(nvars: usize, max_degree: usize) -> Self {
        let bases: Vec<MonomialBasis> = (0..=max_degree).map(|d| MonomialBasis::new(nvars, d)).collect();
        let raise = (0..max_degree)
            .map(|d| {
                bases[d]
                    .exponents()
                    .iter()
                    .map(|e| {
                        (0..nvars)
                            .map(|k| {
                                let mut up = e.clone();
                                up[k] += 1;
                                bases[d + 1].index_of(&up).expect("raised monomial exists")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        MonomialTower { bases, raise }
    }

    pub fn basis(&self, d: usize) -> &MonomialBasis {
        &self.bases[d]
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    /// Matrices of the substitution `x_i ↦ Σ_j sub[j][i] x_j` on every degree
    /// `0..=max_degree`; column `s` of entry `d` is the image of monomial `s`.
    pub fn substitution_powers(&self, sub: &Mat) -> Vec<Mat> {
        let field = sub.field();
        let n = self.bases[0].nvars();
        assert_eq!((sub.rows(), sub.cols()), (n, n));
        let mut out = vec![Mat::identity(field, 1)];
        for d in 1..=self.max_degree() {
            let prev = &out[d - 1];
            let basis = &self.bases[d];
            let mut m = Mat::zeros(field, basis.len(), basis.len());
            for (s, e) in basis.exponents().iter().enumerate() {
                let j = e.iter().position(|&x| x > 0).expect("positive degree");
                let mut lower = e.clone();
                lower[j] -= 1;
                let sp = self.bases[d - 1].index_of(&lower).expect("lowered monomial exists");
                for t in 0..prev.rows() {
                    let c = prev[(t, sp)];
                    if c == 0 {
                        continue;
                    }
                    for k in 0..n {
                        let l = sub[(k, j)];
                        if l == 0 {
                            continue;
                        }
                        let row = self.raise[d - 1][t][k];
                        m[(row, s)] = field.add(m[(row, s)], field.mul(c, l));
                    }
                }
            }
            out.push(m);
        }
        out
    }

    /// Product table: `table[s][t]` is the index in degree `a + b` of the
    /// product of monomial `s` of degree `a` and monomial `t` of degree `b`.
    pub fn product_table(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let target = &self.bases[a + b];
        self.bases[a]
            .exponents()
            .iter()
            .map(|u| {
                self.bases[b]
                    .exponents()
                    .iter()
                    .map(|v| {
                        let w: Vec<u32> = u.iter().zip(v).map(|(x, y)| x + y).collect();
                        target.index_of(&w).expect("product monomial exists")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Multiplies homogeneous polynomials given as coefficient vectors.
pub fn multiply(
    field: PrimeModulus,
    table: &[Vec<usize>],
    target_len: usize,
    u: &[Scalar],
    v: &[Scalar],
) -> Vec<Scalar> {
    let mut out = vec![0; target_len];
    for (s, &a) in u.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (t, &b) in v.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let k = table[s][t];
            out[k] = field.add(out[k], field.mul(a, b));
        }
    }
    out
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let b = MonomialBasis::new(3, 2);
        let want: Vec<Vec<u32>> =
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]];
        assert_eq!(b.exponents(), want.as_slice());
        for d in 0..8 {
            assert_eq!(MonomialBasis::new(3, d).len(), binomial(d + 2, d));
        }
    }

    #[test]
    fn substitution_is_multiplicative() {
        let f = PrimeModulus::new(7).unwrap();
        let a = Mat::from_rows(f, &[vec![1, 2], vec![3, 4]]);
        let b = Mat::from_rows(f, &[vec![0, 1], vec![5, 2]]);
        let tower = MonomialTower::new(2, 4);
        let pa = tower.substitution_powers(&a);
        let pb = tower.substitution_powers(&b);
        let pab = tower.substitution_powers(&a.mul(&b));
        for d in 0..=4 {
            assert_eq!(pab[d], pa[d].mul(&pb[d]));
        }
        assert_eq!(pa[1], a);
    }

    #[test]
    fn sign_flip_in_degree_three() {
        let f = PrimeModulus::new(3).unwrap();
        let tower = MonomialTower::new(1, 3);
        let m = tower.substitution_powers(&Mat::from_rows(f, &[vec![-1]]));
        assert_eq!(m[3][(0, 0)], 2);
        assert_eq!(m[2][(0, 0)], 1);
    }

    #[test]
    fn subset_order() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
    }
}
