//! A-infinity and L-infinity structures on a graded space, presented through
//! lower structure constants relative to a graded antisymmetric inner
//! product.
//!
//! The structure is carried by the parity reversion: all structure tensors
//! are odd, the inner product is even and graded antisymmetric, and the
//! defining relations become index sums that can be checked exhaustively at
//! desk-scale dimensions. An A-infinity tensor is graded cyclically
//! symmetric; an L-infinity tensor is graded symmetric.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::graded::{koszul_sign, unshuffles, GradedBasis, Parity, Sign};
use crate::scalar::{Ring, Scalar};
use crate::tensor::{invert_matrix, Tensor};

/// Which family of relations the structure constants are required to obey.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    AInfinity,
    LInfinity,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::AInfinity => write!(f, "a-infinity"),
            Flavor::LInfinity => write!(f, "l-infinity"),
        }
    }
}

#[derive(thiserror::Error, Debug)]
pub enum AlgebraError {
    #[error("inner product must be a {dim} x {dim} matrix")]
    InnerDimension { dim: usize },
    #[error("structure tensor for arity {arity} must have {} indices over dimension {dim}", arity + 1)]
    TensorDimension { arity: usize, dim: usize },
    #[error("arity {0} structure constants are not allowed; the differential term must vanish and products start at arity 2")]
    ArityTooSmall(usize),
    #[error("n_max = {0} admits no relations; the first nontrivial level is 3")]
    NMaxTooSmall(usize),
    #[error("expected a {expected} structure")]
    FlavorMismatch { expected: Flavor },
    #[error("inner product is degenerate")]
    DegenerateInner,
    #[error("product of arity {arity} violates the parity-of-arity rule at index {index:?}")]
    ProductParity { arity: usize, index: Vec<usize> },
    #[error("v-side inner product must be graded symmetric and even")]
    BadVInner,
}

/// A violated invariant found by [`AlgebraSpec::validate`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    InnerNotEven { index: [usize; 2] },
    InnerNotGradedAntisymmetric { index: [usize; 2] },
    InnerDegenerate,
    ConstantNotOdd { arity: usize, index: Vec<usize> },
    SymmetryBroken { arity: usize, index: Vec<usize>, image: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InnerNotEven { index } => {
                write!(f, "inner product entry ({}, {}) pairs opposite parities", index[0] + 1, index[1] + 1)
            }
            Violation::InnerNotGradedAntisymmetric { index } => {
                write!(f, "inner product is not graded antisymmetric at ({}, {})", index[0] + 1, index[1] + 1)
            }
            Violation::InnerDegenerate => write!(f, "inner product is degenerate"),
            Violation::ConstantNotOdd { arity, index } => {
                write!(f, "arity-{arity} constant at {:?} has even total parity", one_based(index))
            }
            Violation::SymmetryBroken { arity, index, image } => {
                write!(
                    f,
                    "arity-{arity} constants break the required symmetry between {:?} and {:?}",
                    one_based(index),
                    one_based(image)
                )
            }
        }
    }
}

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

/// Finite-dimensional structure: graded basis, even graded antisymmetric
/// inner product `k_{ab}`, and lower structure constants per arity
/// (`d_{j_1 .. j_{n+1}}`, one more index than the arity of the product).
///
/// Arities not present in the map are zero tensors. Arity 1 is rejected: the
/// differential term is assumed to vanish throughout.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraSpec<R: Ring = Scalar> {
    flavor: Flavor,
    basis: GradedBasis,
    inner: Tensor<R>,
    lower: BTreeMap<usize, Tensor<R>>,
}

impl<R: Ring> AlgebraSpec<R> {
    pub fn new(
        flavor: Flavor,
        basis: GradedBasis,
        inner: Tensor<R>,
        lower: BTreeMap<usize, Tensor<R>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis.dim();
        if inner.rank() != 2 || inner.dim() != dim {
            return Err(AlgebraError::InnerDimension { dim });
        }
        for (&arity, tensor) in &lower {
            if arity < 2 {
                return Err(AlgebraError::ArityTooSmall(arity));
            }
            if tensor.dim() != dim || tensor.rank() != arity + 1 {
                return Err(AlgebraError::TensorDimension { arity, dim });
            }
        }
        Ok(AlgebraSpec { flavor, basis, inner, lower })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn inner(&self) -> &Tensor<R> {
        &self.inner
    }

    /// Inverse inner product `k^{ab}`, or an error when degenerate.
    pub fn inner_inverse(&self) -> Result<Tensor<R>, AlgebraError> {
        invert_matrix(&self.inner).ok_or(AlgebraError::DegenerateInner)
    }

    /// Lower structure tensor of the given arity; absent arities are zero.
    pub fn lower_tensor(&self, arity: usize) -> Option<&Tensor<R>> {
        self.lower.get(&arity)
    }

    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.lower.keys().copied()
    }

    pub fn lower_constants(&self) -> &BTreeMap<usize, Tensor<R>> {
        &self.lower
    }

    /// Embeds the coefficients into a larger ring.
    pub fn map_coefficients<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> AlgebraSpec<S> {
        AlgebraSpec {
            flavor: self.flavor,
            basis: self.basis.clone(),
            inner: self.inner.map(f),
            lower: self.lower.iter().map(|(&a, t)| (a, t.map(f))).collect(),
        }
    }

    /// Checks every mathematical invariant and reports all violations found,
    /// in deterministic order. An empty report means the spec is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let v = self.inner.get(&[a, b]);
                if !v.is_zero() && self.basis.parity(a) + self.basis.parity(b) == Parity::Odd {
                    out.push(Violation::InnerNotEven { index: [a, b] });
                }
            }
        }
        // k_{ba} = (-1)^{p(a)p(b)+1} k_{ab}
        for a in 0..dim {
            for b in a..dim {
                let sign = if self.basis.parity(a).is_odd() && self.basis.parity(b).is_odd() {
                    R::from_int(1)
                } else {
                    R::from_int(-1)
                };
                let expect = sign * self.inner.get(&[a, b]).clone();
                if *self.inner.get(&[b, a]) != expect {
                    out.push(Violation::InnerNotGradedAntisymmetric { index: [a, b] });
                }
            }
        }
        if invert_matrix(&self.inner).is_none() {
            out.push(Violation::InnerDegenerate);
        }
        for (&arity, tensor) in &self.lower {
            for idx in tensor.indices() {
                if !tensor.get(&idx).is_zero() && self.basis.total_parity(&idx) == Parity::Even {
                    out.push(Violation::ConstantNotOdd { arity, index: idx });
                }
            }
            if let Some((index, image)) = symmetry_violation(self.flavor, &self.basis, tensor) {
                out.push(Violation::SymmetryBroken { arity, index, image });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Raises the last index: `d^a_{j_1..j_n} = sum_c d_{j_1..j_n c} k^{c a}`
    /// where `k^{..}` inverts the lowering map `x^a -> sum_a x^a k_{a c}`.
    /// Lowering the result back recovers the input exactly.
    pub fn raise_last_index(&self, arity: usize) -> Result<Tensor<R>, AlgebraError> {
        let kinv = self.inner_inverse()?;
        let tensor = match self.lower_tensor(arity) {
            Some(t) => t.clone(),
            None => Tensor::zeros(self.dim(), arity + 1),
        };
        Ok(raise_last(&tensor, &kinv))
    }

    /// Lowers the last index of an upper tensor through the inner product.
    pub fn lower_last_index(&self, upper: &Tensor<R>) -> Tensor<R> {
        lower_last(upper, &self.inner)
    }
}

/// `raised[j.., a] = sum_c t[j.., c] * kinv[c, a]`.
pub(crate) fn raise_last<R: Ring>(t: &Tensor<R>, kinv: &Tensor<R>) -> Tensor<R> {
    let dim = t.dim();
    let rank = t.rank();
    let mut out = Tensor::zeros(dim, rank);
    for idx in t.indices() {
        let v = t.get(&idx);
        if v.is_zero() {
            continue;
        }
        let c = idx[rank - 1];
        let mut target = idx.clone();
        for a in 0..dim {
            let w = kinv.get(&[c, a]);
            if w.is_zero() {
                continue;
            }
            target[rank - 1] = a;
            out.add_assign_at(&target, v.clone() * w.clone());
        }
    }
    out
}

/// `lowered[j.., c] = sum_a t[j.., a] * k[a, c]`.
pub(crate) fn lower_last<R: Ring>(t: &Tensor<R>, k: &Tensor<R>) -> Tensor<R> {
    let dim = t.dim();
    let rank = t.rank();
    let mut out = Tensor::zeros(dim, rank);
    for idx in t.indices() {
        let v = t.get(&idx);
        if v.is_zero() {
            continue;
        }
        let a = idx[rank - 1];
        let mut target = idx.clone();
        for c in 0..dim {
            let w = k.get(&[a, c]);
            if w.is_zero() {
                continue;
            }
            target[rank - 1] = c;
            out.add_assign_at(&target, v.clone() * w.clone());
        }
    }
    out
}

/// First index tuple (with its symmetry image) at which a tensor fails the
/// flavor's symmetry, if any.
///
/// A-infinity: cycling the last index to the front multiplies by
/// `(-1)^{p(last) * (p(rest))}`. L-infinity: each adjacent transposition
/// multiplies by `(-1)^{p q}`.
pub(crate) fn symmetry_violation<R: Ring>(
    flavor: Flavor,
    basis: &GradedBasis,
    tensor: &Tensor<R>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let rank = tensor.rank();
    for idx in tensor.indices() {
        match flavor {
            Flavor::AInfinity => {
                let mut rotated = Vec::with_capacity(rank);
                rotated.push(idx[rank - 1]);
                rotated.extend_from_slice(&idx[..rank - 1]);
                let last_p = basis.parity(idx[rank - 1]);
                let rest_p = basis.total_parity(&idx[..rank - 1]);
                let sign: R = if last_p.is_odd() && rest_p.is_odd() {
                    R::from_int(-1)
                } else {
                    R::from_int(1)
                };
                if *tensor.get(&rotated) != sign * tensor.get(&idx).clone() {
                    return Some((idx, rotated));
                }
            }
            Flavor::LInfinity => {
                for i in 0..rank.saturating_sub(1) {
                    let mut swapped = idx.clone();
                    swapped.swap(i, i + 1);
                    let sign: R =
                        if basis.parity(idx[i]).is_odd() && basis.parity(idx[i + 1]).is_odd() {
                            R::from_int(-1)
                        } else {
                            R::from_int(1)
                        };
                    if *tensor.get(&swapped) != sign * tensor.get(&idx).clone() {
                        return Some((idx, swapped));
                    }
                }
            }
        }
    }
    None
}

/// The full symmetry orbit of one tensor entry together with the signed
/// values the flavor's symmetry forces: cyclic rotations for a-infinity,
/// all permutations with Koszul signs for l-infinity. Includes the entry
/// itself. An index fixed by an odd symmetry forces the value zero, which
/// shows up as two different signed values on the same index.
pub fn symmetry_orbit(
    flavor: Flavor,
    basis: &GradedBasis,
    indices: &[usize],
    value: &Scalar,
) -> Vec<(Vec<usize>, Scalar)> {
    use crate::graded::Permutation;
    use itertools::Itertools;

    let n = indices.len();
    let mut out: Vec<(Vec<usize>, Scalar)> = Vec::new();
    match flavor {
        Flavor::AInfinity => {
            let mut idx = indices.to_vec();
            let mut v = value.clone();
            for _ in 0..n {
                out.push((idx.clone(), v.clone()));
                // rotate last to front
                let last_p = basis.parity(idx[n - 1]);
                let rest_p = basis.total_parity(&idx[..n - 1]);
                if last_p.is_odd() && rest_p.is_odd() {
                    v = -v;
                }
                idx.rotate_right(1);
            }
        }
        Flavor::LInfinity => {
            let parities: Vec<Parity> = indices.iter().map(|&i| basis.parity(i)).collect();
            for images in (0..n).permutations(n) {
                let sigma = Permutation::new(images).expect("permutation");
                let image: Vec<usize> = (0..n).map(|i| indices[sigma.image(i)]).collect();
                let v = match koszul_sign(&sigma, &parities) {
                    Sign::Plus => value.clone(),
                    Sign::Minus => -value.clone(),
                };
                out.push((image, v));
            }
        }
    }
    out
}

/// One nonvanishing term of a defining relation.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationViolation<R> {
    /// Relation level `n`; the index tuple has `n + 1` entries.
    pub level: usize,
    pub indices: Vec<usize>,
    pub value: R,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport<R> {
    pub n_max: usize,
    pub violations: Vec<RelationViolation<R>>,
}

impl<R> RelationReport<R> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the cyclic A-infinity relations for every level `3 <= n <= n_max`:
/// for each tuple, the sum over splittings `k + l = n + 1` and rotations `i`
/// of the signed contraction `d^a(block) d(a, rest)` must vanish. Indices
/// are read cyclically; the sign for rotation `i` is the Koszul sign of the
/// linear split `(p_1 + .. + p_i)(p_{i+1} + .. + p_{n+1})`.
pub fn check_ainf_relations<R: Ring>(
    spec: &AlgebraSpec<R>,
    n_max: usize,
) -> Result<RelationReport<R>, AlgebraError> {
    if spec.flavor() != Flavor::AInfinity {
        return Err(AlgebraError::FlavorMismatch { expected: Flavor::AInfinity });
    }
    check_relations(spec, n_max)
}

/// Checks the L-infinity relations for every level `3 <= n <= n_max`: for
/// each tuple, the sum over unshuffles of the Koszul-signed contraction must
/// vanish.
pub fn check_linf_relations<R: Ring>(
    spec: &AlgebraSpec<R>,
    n_max: usize,
) -> Result<RelationReport<R>, AlgebraError> {
    if spec.flavor() != Flavor::LInfinity {
        return Err(AlgebraError::FlavorMismatch { expected: Flavor::LInfinity });
    }
    check_relations(spec, n_max)
}

fn check_relations<R: Ring>(
    spec: &AlgebraSpec<R>,
    n_max: usize,
) -> Result<RelationReport<R>, AlgebraError> {
    if n_max < 3 {
        return Err(AlgebraError::NMaxTooSmall(n_max));
    }
    let dim = spec.dim();
    let mut raised: BTreeMap<usize, Tensor<R>> = BTreeMap::new();
    for arity in spec.arities() {
        raised.insert(arity, spec.raise_last_index(arity)?);
    }

    let mut violations = Vec::new();
    for level in 3..=n_max {
        let tuple_len = level + 1;
        for tuple in Tensor::<R>::zeros(dim, tuple_len).indices() {
            // Both factors are odd, so nonzero terms need even total parity.
            if spec.basis().total_parity(&tuple) == Parity::Odd {
                continue;
            }
            let value = relation_sum(spec, &raised, level, &tuple);
            if !value.is_zero() {
                violations.push(RelationViolation { level, indices: tuple, value });
            }
        }
    }
    Ok(RelationReport { n_max, violations })
}

fn relation_sum<R: Ring>(
    spec: &AlgebraSpec<R>,
    raised: &BTreeMap<usize, Tensor<R>>,
    level: usize,
    tuple: &[usize],
) -> R {
    let dim = spec.dim();
    let n = level;
    let len = n + 1;
    let parities: Vec<Parity> = tuple.iter().map(|&j| spec.basis().parity(j)).collect();
    let mut total = R::zero();

    for inner_arity in 2..=(n - 1) {
        let outer_arity = n + 1 - inner_arity;
        let (inner_t, outer_t) = match (raised.get(&inner_arity), spec.lower_tensor(outer_arity)) {
            (Some(i), Some(o)) => (i, o),
            _ => continue,
        };
        match spec.flavor() {
            Flavor::AInfinity => {
                for i in 0..len {
                    let left = parities[..i]
                        .iter()
                        .fold(Parity::Even, |acc, &p| acc + p);
                    let right = parities[i..]
                        .iter()
                        .fold(Parity::Even, |acc, &p| acc + p);
                    let rot_sign = if left.is_odd() && right.is_odd() {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    };
                    let mut inner_idx: Vec<usize> = (0..inner_arity)
                        .map(|s| tuple[(i + s) % len])
                        .collect();
                    inner_idx.push(0);
                    let mut outer_idx: Vec<usize> = vec![0];
                    outer_idx.extend((0..outer_arity).map(|s| tuple[(i + inner_arity + s) % len]));
                    total = total
                        + contract_over_link(inner_t, outer_t, &mut inner_idx, &mut outer_idx, dim)
                            * rot_sign.scalar::<R>();
                }
            }
            Flavor::LInfinity => {
                for sigma in unshuffles(inner_arity, len - inner_arity) {
                    let eps = koszul_sign(&sigma, &parities);
                    let mut inner_idx: Vec<usize> = (0..inner_arity)
                        .map(|s| tuple[sigma.image(s)])
                        .collect();
                    inner_idx.push(0);
                    let mut outer_idx: Vec<usize> = vec![0];
                    outer_idx.extend((inner_arity..len).map(|s| tuple[sigma.image(s)]));
                    total = total
                        + contract_over_link(inner_t, outer_t, &mut inner_idx, &mut outer_idx, dim)
                            * eps.scalar::<R>();
                }
            }
        }
    }
    total
}

/// `sum_a inner[.., a] * outer[a, ..]` where the last slot of `inner_idx` and
/// the first slot of `outer_idx` run over the linking index.
fn contract_over_link<R: Ring>(
    inner: &Tensor<R>,
    outer: &Tensor<R>,
    inner_idx: &mut [usize],
    outer_idx: &mut [usize],
    dim: usize,
) -> R {
    let last = inner_idx.len() - 1;
    let mut acc = R::zero();
    for a in 0..dim {
        inner_idx[last] = a;
        let x = inner.get(inner_idx);
        if x.is_zero() {
            continue;
        }
        outer_idx[0] = a;
        let y = outer.get(outer_idx);
        if y.is_zero() {
            continue;
        }
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// An algebra presented on the original space: products with upper output
/// index (`m^a_{j_1..j_k}`, output stored last) and a graded symmetric even
/// inner product. The structure is moved to the parity reversion by
/// [`eta_transport`].
#[derive(Clone, Debug)]
pub struct VSideStructure {
    pub flavor: Flavor,
    pub basis: GradedBasis,
    pub products: BTreeMap<usize, Tensor<Scalar>>,
    pub inner: Tensor<Scalar>,
}

/// Transports a structure on `V` to structure constants on the parity
/// reversion `W` through the coalgebra isomorphism:
///
/// * basis parities flip;
/// * the inner product picks up the arity-2 transport sign on its first
///   argument, becoming graded antisymmetric;
/// * the arity-`k` product picks up the transport sign
///   `(-1)^{(k-1) p_1 + (k-2) p_2 + .. + p_{k-1}}`, read off the first
///   `k - 1` arguments, with the tensor-coalgebra convention using original
///   parities and the symmetric-coalgebra convention using reversed ones;
/// * the result is lowered through the transported inner product.
pub fn eta_transport(v: &VSideStructure) -> Result<AlgebraSpec<Scalar>, AlgebraError> {
    let dim = v.basis.dim();
    if v.inner.rank() != 2 || v.inner.dim() != dim {
        return Err(AlgebraError::InnerDimension { dim });
    }
    // h must be graded symmetric, even and nondegenerate.
    for a in 0..dim {
        for b in 0..dim {
            let val = v.inner.get(&[a, b]);
            if val.is_zero() {
                continue;
            }
            if v.basis.parity(a) + v.basis.parity(b) == Parity::Odd {
                return Err(AlgebraError::BadVInner);
            }
            let sign = if v.basis.parity(a).is_odd() && v.basis.parity(b).is_odd() {
                int_scalar(-1)
            } else {
                int_scalar(1)
            };
            if *v.inner.get(&[b, a]) != sign * val.clone() {
                return Err(AlgebraError::BadVInner);
            }
        }
    }
    if invert_matrix(&v.inner).is_none() {
        return Err(AlgebraError::DegenerateInner);
    }

    let w_basis = v.basis.reversed();
    let exponent_parity = |i: usize| -> Parity {
        match v.flavor {
            Flavor::AInfinity => v.basis.parity(i),
            Flavor::LInfinity => w_basis.parity(i),
        }
    };

    // Inner product on W: the arity-2 transport sign on the first argument.
    let mut k_w = Tensor::zeros(dim, 2);
    for a in 0..dim {
        for b in 0..dim {
            let sign = if exponent_parity(a).is_odd() {
                int_scalar(-1)
            } else {
                int_scalar(1)
            };
            k_w.set(&[a, b], sign * v.inner.get(&[a, b]).clone());
        }
    }

    let mut lower = BTreeMap::new();
    for (&arity, m) in &v.products {
        if arity < 2 {
            return Err(AlgebraError::ArityTooSmall(arity));
        }
        if m.dim() != dim || m.rank() != arity + 1 {
            return Err(AlgebraError::TensorDimension { arity, dim });
        }
        // parity of the arity-k product must be k mod 2 on V
        let arity_parity = Parity::from_usize(arity);
        for idx in m.indices() {
            if m.get(&idx).is_zero() {
                continue;
            }
            let inputs = v.basis.total_parity(&idx[..arity]);
            let output = v.basis.parity(idx[arity]);
            if inputs + arity_parity != output {
                return Err(AlgebraError::ProductParity { arity, index: idx });
            }
        }

        let mut upper = Tensor::zeros(dim, arity + 1);
        for idx in m.indices() {
            let val = m.get(&idx);
            if val.is_zero() {
                continue;
            }
            let mut exp = 0usize;
            for (pos, &j) in idx[..arity - 1].iter().enumerate() {
                if exponent_parity(j).is_odd() {
                    exp += arity - 1 - pos;
                }
            }
            let sign = if exp % 2 == 1 { int_scalar(-1) } else { int_scalar(1) };
            upper.set(&idx, sign * val.clone());
        }
        lower.insert(arity, lower_last(&upper, &k_w));
    }

    AlgebraSpec::new(v.flavor, w_basis, k_w, lower)
}

fn int_scalar(n: i64) -> Scalar {
    crate::scalar::int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::zoo;

    #[test]
    fn abelian_spec_is_valid() {
        let spec = zoo::abelian3();
        assert!(spec.validate().is_empty());
        assert!(check_linf_relations(&spec, 4).unwrap().passed());
    }

    #[test]
    fn so3_is_valid_and_broken_symmetry_is_reported() {
        let spec = zoo::so3();
        assert!(spec.validate().is_empty());

        // d_{123} = 2 while d_{231} = 1 breaks the graded symmetry.
        let mut lower = spec.lower_constants().clone();
        let t = lower.get_mut(&2).unwrap();
        t.set(&[0, 1, 2], int(2));
        let broken = AlgebraSpec::new(
            Flavor::LInfinity,
            spec.basis().clone(),
            spec.inner().clone(),
            lower,
        )
        .unwrap();
        assert!(broken
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::SymmetryBroken { .. })));
    }

    #[test]
    fn raise_lower_round_trip_on_zoo() {
        for spec in [zoo::so3(), zoo::m2k()] {
            for arity in spec.arities().collect::<Vec<_>>() {
                let raised = spec.raise_last_index(arity).unwrap();
                let lowered = spec.lower_last_index(&raised);
                assert_eq!(&lowered, spec.lower_tensor(arity).unwrap());
            }
        }
    }

    #[test]
    fn raise_lower_round_trip_on_antisymmetric_even_block() {
        // Mixed basis: two even elements with a symplectic pairing plus one
        // odd element; the round trip must hold on the antisymmetric block
        // as well.
        let basis = GradedBasis::new(vec![Parity::Even, Parity::Even, Parity::Odd]);
        let mut inner: Tensor<Scalar> = Tensor::zeros(3, 2);
        inner.set(&[0, 1], int(1));
        inner.set(&[1, 0], int(-1));
        inner.set(&[2, 2], int(1));
        let mut d: Tensor<Scalar> = Tensor::zeros(3, 3);
        // Entry with odd total parity: (2, 2, 0) has parity odd+odd+even = even.. use (0, 1, 2).
        d.set(&[0, 1, 2], int(5));
        let spec = AlgebraSpec::new(
            Flavor::AInfinity,
            basis,
            inner,
            BTreeMap::from([(2, d)]),
        )
        .unwrap();
        let raised = spec.raise_last_index(2).unwrap();
        let lowered = spec.lower_last_index(&raised);
        assert_eq!(&lowered, spec.lower_tensor(2).unwrap());
    }

    #[test]
    fn raising_scales_with_inner_product() {
        let spec = zoo::so3();
        let doubled = AlgebraSpec::new(
            Flavor::LInfinity,
            spec.basis().clone(),
            spec.inner().scale(&int(2)),
            spec.lower_constants().clone(),
        )
        .unwrap();
        let r1 = spec.raise_last_index(2).unwrap();
        let r2 = doubled.raise_last_index(2).unwrap();
        assert_eq!(r2.scale(&int(2)), r1);
    }

    #[test]
    fn all_zero_upper_tensor() {
        let spec = zoo::abelian3();
        let raised = spec.raise_last_index(2).unwrap();
        assert!(raised.is_zero());
    }

    #[test]
    fn singular_inner_product_cannot_raise() {
        let spec = zoo::so3();
        let singular = AlgebraSpec::new(
            Flavor::LInfinity,
            spec.basis().clone(),
            Tensor::zeros(3, 2),
            spec.lower_constants().clone(),
        )
        .unwrap();
        assert!(singular.validate().contains(&Violation::InnerDegenerate));
        assert!(matches!(
            singular.raise_last_index(2),
            Err(AlgebraError::DegenerateInner)
        ));
    }

    #[test]
    fn relation_checkers_reject_small_n_max_and_wrong_flavor() {
        let spec = zoo::so3();
        assert!(matches!(
            check_linf_relations(&spec, 2),
            Err(AlgebraError::NMaxTooSmall(2))
        ));
        assert!(matches!(
            check_ainf_relations(&spec, 4),
            Err(AlgebraError::FlavorMismatch { .. })
        ));
    }

    #[test]
    fn so3_satisfies_linf_relations() {
        assert!(check_linf_relations(&zoo::so3(), 4).unwrap().passed());
    }

    #[test]
    fn m2k_satisfies_ainf_relations() {
        assert!(check_ainf_relations(&zoo::m2k(), 4).unwrap().passed());
    }

    #[test]
    fn negated_m2k_constant_fails_at_level_3() {
        let spec = zoo::m2k();
        let mut lower = spec.lower_constants().clone();
        {
            // Negate a full cyclic orbit so the spec still validates.
            let t = lower.get_mut(&2).unwrap();
            let orbit = [[0usize, 1, 2], [2, 0, 1], [1, 2, 0]];
            for idx in orbit {
                let v = t.get(&idx).clone();
                t.set(&idx, -v);
            }
        }
        let broken = AlgebraSpec::new(
            Flavor::AInfinity,
            spec.basis().clone(),
            spec.inner().clone(),
            lower,
        )
        .unwrap();
        assert!(broken.validate().is_empty());
        let report = check_ainf_relations(&broken, 4).unwrap();
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.level == 3));
    }

    #[test]
    fn eta_transport_of_so3_gives_expected_spec() {
        let w = eta_transport(&zoo::so3_v_side()).unwrap();
        assert_eq!(w.flavor(), Flavor::LInfinity);
        assert!(w.basis().parities().iter().all(|p| p.is_odd()));
        // Hand expansion of the transport at arity 2: the inner product
        // becomes minus the identity and the lowered constants stay fully
        // antisymmetric with d_{123} = 1.
        for a in 0..3 {
            for b in 0..3 {
                let expect = if a == b { int(-1) } else { int(0) };
                assert_eq!(*w.inner().get(&[a, b]), expect);
            }
        }
        let d = w.lower_tensor(2).unwrap();
        assert_eq!(*d.get(&[0, 1, 2]), int(1));
        assert_eq!(*d.get(&[1, 0, 2]), int(-1));
        assert_eq!(*d.get(&[2, 0, 1]), int(1));
        assert_eq!(*d.get(&[0, 0, 1]), int(0));
        assert!(w.validate().is_empty());
        assert!(check_linf_relations(&w, 4).unwrap().passed());
    }

    #[test]
    fn eta_transport_of_zero_products_is_zero() {
        let mut v = zoo::so3_v_side();
        v.products = BTreeMap::from([(2, Tensor::zeros(3, 3))]);
        let w = eta_transport(&v).unwrap();
        assert!(w.lower_tensor(2).unwrap().is_zero());
    }

    #[test]
    fn eta_transport_rejects_bad_product_parity() {
        let mut v = zoo::so3_v_side();
        // An odd-parity entry on an all-even basis violates parity-of-arity.
        let mut m = Tensor::zeros(3, 3);
        m.set(&[0, 0, 0], int(1));
        v.products = BTreeMap::from([(3, m)]);
        assert!(matches!(
            eta_transport(&v),
            Err(AlgebraError::TensorDimension { .. })
        ));
        let mut m = Tensor::zeros(3, 4);
        m.set(&[0, 0, 0, 0], int(1));
        v.products = BTreeMap::from([(3, m)]);
        // arity 3 product must be odd on an all-even basis: impossible.
        assert!(matches!(
            eta_transport(&v),
            Err(AlgebraError::ProductParity { .. })
        ));
    }
}
