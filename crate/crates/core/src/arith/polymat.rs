use std::ops::{Index, IndexMut};

use serde::{Serialize, Serializer};

use super::field::PrimeModulus;
use super::poly::Poly;

/// Dense matrix over the polynomial ring F_p[y].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMat {
    field: PrimeModulus,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMat {
    pub fn zeros(field: PrimeModulus, rows: usize, cols: usize) -> Self {
        PolyMat { field, rows, cols, data: vec![Poly::zero(field); rows * cols] }
    }

    pub fn from_fn(
        field: PrimeModulus,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Poly,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMat { field, rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeModulus {
        self.field
    }

    pub fn mul(&self, rhs: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, rhs.rows);
        PolyMat::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Poly::zero(self.field), |acc, k| &acc + &(&self[(i, k)] * &rhs[(k, j)]))
        })
    }

    /// Largest degree among the entries, `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Poly::degree).max()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination over F_p[y].
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return Poly::one(f);
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = Poly::one(f);
        for k in 0..n {
            let Some(pr) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Poly::zero(f);
            };
            if pr != k {
                m.swap_rows(pr, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = v.exact_div(&prev);
                }
                m[(i, k)] = Poly::zero(f);
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// Diagonal of the Smith normal form: monic elementary divisors in
    /// divisibility order, followed by zeros for the rank defect.
    pub fn elementary_divisors(&self) -> Vec<Poly> {
        let f = self.field;
        let mut m = self.clone();
        let size = self.rows.min(self.cols);
        let mut diag = Vec::with_capacity(size);
        for t in 0..size {
            loop {
                // smallest-degree nonzero entry of the trailing block, first in row-major order
                let mut best: Option<(usize, usize, usize)> = None;
                for i in t..m.rows {
                    for j in t..m.cols {
                        if let Some(d) = m[(i, j)].degree() {
                            if best.is_none_or(|(_, _, bd)| d < bd) {
                                best = Some((i, j, d));
                            }
                        }
                    }
                }
                let Some((bi, bj, _)) = best else {
                    diag.extend(std::iter::repeat_n(Poly::zero(f), size - t));
                    return diag;
                };
                m.swap_rows(t, bi);
                m.swap_cols(t, bj);
                let pivot = m[(t, t)].clone();
                let mut dirty = false;
                for i in t + 1..m.rows {
                    if m[(i, t)].is_zero() {
                        continue;
                    }
                    let (q, r) = m[(i, t)].div_rem(&pivot);
                    for j in t..m.cols {
                        let v = &m[(i, j)] - &(&q * &m[(t, j)]);
                        m[(i, j)] = v;
                    }
                    dirty |= !r.is_zero();
                }
                for j in t + 1..m.cols {
                    if m[(t, j)].is_zero() {
                        continue;
                    }
                    let (q, r) = m[(t, j)].div_rem(&pivot);
                    for i in t..m.rows {
                        let v = &m[(i, j)] - &(&q * &m[(i, t)]);
                        m[(i, j)] = v;
                    }
                    dirty |= !r.is_zero();
                }
                if dirty {
                    continue;
                }
                // enforce divisibility of the trailing block by the pivot
                let offender = (t + 1..m.rows)
                    .find(|&i| (t + 1..m.cols).any(|j| !pivot.divides(&m[(i, j)])));
                match offender {
                    Some(i) => {
                        for j in t..m.cols {
                            let v = &m[(t, j)] + &m[(i, j)];
                            m[(t, j)] = v;
                        }
                    }
                    None => break,
                }
            }
            diag.push(m[(t, t)].monic());
        }
        diag
    }
}

impl Index<(usize, usize)> for PolyMat {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for PolyMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[Poly]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        rows.serialize(s)
    }
}
