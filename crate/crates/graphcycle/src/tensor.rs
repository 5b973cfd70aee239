//! Dense multi-index tensors over an exact coefficient ring, plus the little
//! square-matrix algebra needed for inner products. Dimensions stay at desk
//! scale (dim <= 4, rank <= 7), so dense storage is the right call.


use crate::scalar::Ring;

/// A rank-`rank` tensor with every index ranging over `0..dim`, stored
/// row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<R> {
    dim: usize,
    rank: usize,
    data: Vec<R>,
}

impl<R: Ring> Tensor<R> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        assert!(dim >= 1);
        let len = dim.checked_pow(rank as u32).expect("tensor too large");
        Tensor {
            dim,
            rank,
            data: vec![R::zero(); len],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn flat(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.rank);
        let mut f = 0;
        for &i in index {
            debug_assert!(i < self.dim);
            f = f * self.dim + i;
        }
        f
    }

    pub fn get(&self, index: &[usize]) -> &R {
        &self.data[self.flat(index)]
    }

    pub fn set(&mut self, index: &[usize], value: R) {
        let f = self.flat(index);
        self.data[f] = value;
    }

    pub fn add_assign_at(&mut self, index: &[usize], value: R) {
        let f = self.flat(index);
        self.data[f] = self.data[f].clone() + value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Tensor<S> {
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, by: &R) -> Tensor<R> {
        self.map(|x| x.clone() * by.clone())
    }

    pub fn add(&self, other: &Tensor<R>) -> Tensor<R> {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.rank, other.rank);
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Iterates over all multi-indices in lexicographic order.
    pub fn indices(&self) -> MultiIndexIter {
        MultiIndexIter::new(self.dim, self.rank)
    }

    /// The nonzero entries, in lexicographic index order.
    pub fn support(&self) -> Vec<(Vec<usize>, R)> {
        self.indices()
            .filter_map(|idx| {
                let v = self.get(&idx);
                if v.is_zero() {
                    None
                } else {
                    Some((idx, v.clone()))
                }
            })
            .collect()
    }
}

/// Odometer over multi-indices `[0, dim)^rank` in lexicographic order.
pub struct MultiIndexIter {
    dim: usize,
    rank: usize,
    next: Option<Vec<usize>>,
}

impl MultiIndexIter {
    pub fn new(dim: usize, rank: usize) -> Self {
        MultiIndexIter {
            dim,
            rank,
            next: Some(vec![0; rank]),
        }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        if self.rank > 0 {
            let mut bumped = current.clone();
            for pos in (0..self.rank).rev() {
                bumped[pos] += 1;
                if bumped[pos] < self.dim {
                    self.next = Some(bumped);
                    break;
                }
                bumped[pos] = 0;
            }
        }
        current.into()
    }
}

/// Inverse of a square rank-2 tensor by Gaussian elimination, pivoting on
/// unit entries. Over dual numbers a pivot is usable iff its constant part is
/// nonzero, which is exactly invertibility of the matrix's constant part.
#[allow(clippy::needless_range_loop)]
pub fn invert_matrix<R: Ring>(m: &Tensor<R>) -> Option<Tensor<R>> {
    assert_eq!(m.rank(), 2, "matrix inversion needs a rank-2 tensor");
    let n = m.dim();
    let mut a: Vec<Vec<R>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(&[i, j]).clone()).collect())
        .collect();
    let mut inv: Vec<Vec<R>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { R::one() } else { R::zero() })
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| a[r][col].try_inv().is_some())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pinv = a[col][col].try_inv().expect("pivot invertible");
        for j in 0..n {
            a[col][j] = a[col][j].clone() * pinv.clone();
            inv[col][j] = inv[col][j].clone() * pinv.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                a[r][j] = a[r][j].clone() - factor.clone() * a[col][j].clone();
                inv[r][j] = inv[r][j].clone() - factor.clone() * inv[col][j].clone();
            }
        }
    }

    let mut out = Tensor::zeros(n, 2);
    for i in 0..n {
        for j in 0..n {
            out.set(&[i, j], inv[i][j].clone());
        }
    }
    Some(out)
}

/// Identity matrix as a rank-2 tensor.
pub fn identity_matrix<R: Ring>(dim: usize) -> Tensor<R> {
    let mut m = Tensor::zeros(dim, 2);
    for i in 0..dim {
        m.set(&[i, i], R::one());
    }
    m
}
