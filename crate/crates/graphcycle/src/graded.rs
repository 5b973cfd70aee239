//! Z2-graded sign bookkeeping: parities, permutation signs, Koszul signs and
//! unshuffles. This is the foundation every other module leans on; all sign
//! errors elsewhere eventually trace back here, so the conventions are fixed
//! once and property-tested exhaustively at small sizes.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use itertools::Itertools;

use crate::scalar::Ring;

/// Parity of a homogeneous element: even (0) or odd (1), closed under
/// addition mod 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_usize(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A sign, `+1` or `-1`. Orientation-degenerate graphs use `Option<Sign>`
/// with `None` standing for the zero class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(p: usize) -> Sign {
        if p.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn scalar<R: Ring>(self) -> R {
        R::from_int(self.i64())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Ordered list of parities, one per basis element of a graded space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedBasis {
    parities: Vec<Parity>,
}

impl GradedBasis {
    /// Panics on an empty parity list; a graded basis is nonempty.
    pub fn new(parities: Vec<Parity>) -> Self {
        assert!(!parities.is_empty(), "graded basis must be nonempty");
        GradedBasis { parities }
    }

    pub fn all_odd(dim: usize) -> Self {
        GradedBasis::new(vec![Parity::Odd; dim])
    }

    pub fn all_even(dim: usize) -> Self {
        GradedBasis::new(vec![Parity::Even; dim])
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// The parity reversion: same space, even and odd exchanged.
    pub fn reversed(&self) -> GradedBasis {
        GradedBasis::new(self.parities.iter().map(|p| p.flip()).collect())
    }

    /// Sum of the parities of the basis elements at `indices`.
    pub fn total_parity(&self, indices: &[usize]) -> Parity {
        indices
            .iter()
            .fold(Parity::Even, |acc, &i| acc + self.parity(i))
    }
}

/// A permutation of `{0, .., n-1}` stored as the image list: position `i` of
/// the permuted word holds element `images[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermutationError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` after `other`: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Applies the permutation to a word: output position `i` receives
    /// `word[self(i)]`.
    pub fn permute<T: Clone>(&self, word: &[T]) -> Vec<T> {
        assert_eq!(word.len(), self.degree());
        self.images.iter().map(|&i| word[i].clone()).collect()
    }
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum PermutationError {
    #[error("image list is not a bijection")]
    NotBijective,
}

/// The classical sign of a permutation, via inversion count.
pub fn permutation_sign(sigma: &Permutation) -> Sign {
    let mut inversions = 0usize;
    let im = sigma.images();
    for i in 0..im.len() {
        for j in (i + 1)..im.len() {
            if im[i] > im[j] {
                inversions += 1;
            }
        }
    }
    Sign::from_parity(inversions)
}

/// The Koszul sign ε(σ) for permuting graded elements with the given
/// parities: every exchange of adjacent elements with parities p, q
/// contributes (-1)^{pq}. `parities[k]` is the parity of element `k` in the
/// *original* word; the permuted word holds element `σ(i)` at position `i`.
///
/// With all parities even this is `+1`; with all parities odd it equals the
/// classical permutation sign.
pub fn koszul_sign(sigma: &Permutation, parities: &[Parity]) -> Sign {
    assert_eq!(
        sigma.degree(),
        parities.len(),
        "parity list must match permutation degree"
    );
    let im = sigma.images();
    let mut odd_crossings = 0usize;
    for i in 0..im.len() {
        for j in (i + 1)..im.len() {
            if im[i] > im[j] && parities[im[i]].is_odd() && parities[im[j]].is_odd() {
                odd_crossings += 1;
            }
        }
    }
    Sign::from_parity(odd_crossings)
}

/// All unshuffles of type `(l, r)`: permutations of `{0, .., l+r-1}`
/// increasing on the first `l` positions and on the last `r` positions.
/// There are `binomial(l+r, l)` of them.
pub fn unshuffles(l: usize, r: usize) -> Vec<Permutation> {
    assert!(l >= 1, "left block of an unshuffle is nonempty");
    let n = l + r;
    (0..n)
        .combinations(l)
        .map(|left| {
            let in_left = {
                let mut mask = vec![false; n];
                for &i in &left {
                    mask[i] = true;
                }
                mask
            };
            let mut images = left;
            images.extend((0..n).filter(|&i| !in_left[i]));
            Permutation { images }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn permutation_sign_basics() {
        assert_eq!(permutation_sign(&Permutation::identity(3)), Sign::Plus);
        assert_eq!(permutation_sign(&perm(&[1, 0, 2])), Sign::Minus);
        // 3-cycle 0 -> 1 -> 2 -> 0 as an image list: position i holds i-1.
        // Brute-force inversion count of (2, 0, 1) gives two inversions.
        assert_eq!(permutation_sign(&perm(&[2, 0, 1])), Sign::Plus);
    }

    #[test]
    fn permutation_sign_multiplicative_up_to_5() {
        for n in 1..=5 {
            let all: Vec<Permutation> = (0..n)
                .permutations(n)
                .map(|v| Permutation::new(v).unwrap())
                .collect();
            for s in &all {
                for t in &all {
                    assert_eq!(
                        permutation_sign(&s.compose(t)),
                        permutation_sign(s) * permutation_sign(t)
                    );
                }
            }
        }
    }

    #[test]
    fn koszul_sign_basics() {
        use Parity::*;
        assert_eq!(
            koszul_sign(&Permutation::identity(4), &[Odd, Even, Odd, Odd]),
            Sign::Plus
        );
        assert_eq!(koszul_sign(&perm(&[1, 0]), &[Odd, Odd]), Sign::Minus);
        assert_eq!(koszul_sign(&perm(&[1, 0]), &[Odd, Even]), Sign::Plus);
        // 3-cycle on three odd elements: two adjacent odd-odd transpositions.
        assert_eq!(
            koszul_sign(&perm(&[2, 0, 1]), &[Odd, Odd, Odd]),
            Sign::Plus
        );
    }

    #[test]
    fn koszul_sign_extremes_up_to_5() {
        for n in 1..=5 {
            for v in (0..n).permutations(n) {
                let p = Permutation::new(v).unwrap();
                assert_eq!(koszul_sign(&p, &vec![Parity::Even; n]), Sign::Plus);
                assert_eq!(
                    koszul_sign(&p, &vec![Parity::Odd; n]),
                    permutation_sign(&p)
                );
            }
        }
    }

    /// Second, independent route for ε(σ): bubble-sort the permuted word back
    /// to the identity, accumulating (-1)^{pq} for every adjacent swap. The
    /// Koszul sign must not depend on the decomposition into transpositions.
    fn koszul_by_bubble_sort(sigma: &Permutation, parities: &[Parity]) -> Sign {
        let mut word: Vec<usize> = sigma.images().to_vec();
        let mut sign = Sign::Plus;
        for i in 0..word.len() {
            for j in (i + 1..word.len()).rev() {
                if word[j - 1] > word[j] {
                    if parities[word[j - 1]].is_odd() && parities[word[j]].is_odd() {
                        sign = -sign;
                    }
                    word.swap(j - 1, j);
                }
            }
        }
        sign
    }

    #[test]
    fn koszul_sign_independent_of_decomposition() {
        use Parity::*;
        let parities = [
            vec![Odd, Odd, Even, Odd],
            vec![Even, Odd, Odd, Even],
            vec![Odd, Even, Odd, Odd],
        ];
        for v in (0..4).permutations(4) {
            let p = Permutation::new(v).unwrap();
            for ps in &parities {
                assert_eq!(koszul_sign(&p, ps), koszul_by_bubble_sort(&p, ps));
            }
        }
    }

    #[test]
    fn unshuffle_counts_and_monotonicity() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for l in 1..=6usize {
            for r in 0..=(7 - l) {
                let us = unshuffles(l, r);
                assert_eq!(us.len(), binom(l + r, l));
                for s in &us {
                    let im = s.images();
                    for i in 0..l + r - 1 {
                        if i + 1 != l {
                            assert!(im[i] <= im[i + 1] || i + 1 == l);
                        }
                    }
                    for i in 0..l - 1 {
                        assert!(im[i] < im[i + 1]);
                    }
                    for i in l..l + r {
                        if i + 1 < l + r {
                            assert!(im[i] < im[i + 1]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unshuffles_explicit_small_cases() {
        let u = unshuffles(2, 0);
        assert_eq!(u.len(), 1);
        assert_eq!(u[0], Permutation::identity(2));

        let u = unshuffles(1, 2);
        let images: Vec<Vec<usize>> = u.iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(images, vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 0, 1]]);

        assert_eq!(unshuffles(2, 2).len(), 6);
    }
}
