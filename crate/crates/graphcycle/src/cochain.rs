//! Cyclic cochains in lowered form, the coderivation bracket, the
//! differential `D(psi) = [psi, d]`, and first-order deformations over the
//! dual numbers.
//!
//! A cochain is stored as its inner-product-lowered tensors: the arity-`n`
//! component is a tensor with `n + 1` indices obeying the flavor's symmetry
//! (cyclic for a-infinity, full graded symmetry for l-infinity) and the
//! parity constraint. The bracket is evaluated directly on lowered tensors;
//! for cyclic inputs a single rotation (respectively unshuffle) sum produces
//! the full graded commutator.

use std::collections::BTreeMap;

use num::Zero;

use crate::algebra::{raise_last, symmetry_violation, AlgebraError, AlgebraSpec, Flavor};
use crate::graded::{koszul_sign, unshuffles, GradedBasis, Parity, Sign};
use crate::scalar::{DualScalar, Ring, Scalar};
use crate::tensor::Tensor;

/// A degree-indexed family of lowered multilinear maps with a fixed parity.
/// Components absent from the map are zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Cochain<R: Ring = Scalar> {
    pub parity: Parity,
    components: BTreeMap<usize, Tensor<R>>,
}

#[derive(thiserror::Error, Debug)]
pub enum CochainError {
    #[error("component of arity {arity} must have {} indices over dimension {dim}", arity + 1)]
    ComponentDimension { arity: usize, dim: usize },
    #[error("component of arity {arity} violates the parity constraint at {index:?}")]
    ParityConstraint { arity: usize, index: Vec<usize> },
    #[error("component of arity {arity} is not {flavor} symmetric at {index:?}")]
    NotSymmetric { arity: usize, flavor: Flavor, index: Vec<usize> },
    #[error("not a cocycle: D(phi) has a nonzero entry at arity {arity}, index {index:?}")]
    NotACocycle { arity: usize, index: Vec<usize> },
    #[error("cochain must be odd to deform the structure")]
    NotOdd,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl<R: Ring> Cochain<R> {
    /// Builds a cochain, dropping zero components and checking dimensions,
    /// the parity constraint and the flavor symmetry against the basis.
    pub fn new(
        parity: Parity,
        components: BTreeMap<usize, Tensor<R>>,
        basis: &GradedBasis,
        flavor: Flavor,
    ) -> Result<Self, CochainError> {
        let dim = basis.dim();
        let mut kept = BTreeMap::new();
        for (arity, tensor) in components {
            if tensor.dim() != dim || tensor.rank() != arity + 1 {
                return Err(CochainError::ComponentDimension { arity, dim });
            }
            if tensor.is_zero() {
                continue;
            }
            for idx in tensor.indices() {
                if !tensor.get(&idx).is_zero() && basis.total_parity(&idx) != parity {
                    return Err(CochainError::ParityConstraint { arity, index: idx });
                }
            }
            if let Some((index, _)) = symmetry_violation(flavor, basis, &tensor) {
                return Err(CochainError::NotSymmetric { arity, flavor, index });
            }
            kept.insert(arity, tensor);
        }
        Ok(Cochain { parity, components: kept })
    }

    pub fn zero(parity: Parity) -> Self {
        Cochain { parity, components: BTreeMap::new() }
    }

    pub fn component(&self, arity: usize) -> Option<&Tensor<R>> {
        self.components.get(&arity)
    }

    pub fn components(&self) -> &BTreeMap<usize, Tensor<R>> {
        &self.components
    }

    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|t| t.is_zero())
    }

    pub fn map_coefficients<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> Cochain<S> {
        Cochain {
            parity: self.parity,
            components: self.components.iter().map(|(&a, t)| (a, t.map(f))).collect(),
        }
    }

    pub fn add(&self, other: &Cochain<R>) -> Cochain<R> {
        assert_eq!(self.parity, other.parity);
        let mut components = self.components.clone();
        for (&arity, t) in &other.components {
            let entry = components
                .entry(arity)
                .or_insert_with(|| Tensor::zeros(t.dim(), t.rank()));
            *entry = entry.add(t);
        }
        components.retain(|_, t| !t.is_zero());
        Cochain { parity: self.parity, components }
    }

    pub fn scale(&self, by: &R) -> Cochain<R> {
        let mut components: BTreeMap<usize, Tensor<R>> = self
            .components
            .iter()
            .map(|(&a, t)| (a, t.scale(by)))
            .collect();
        components.retain(|_, t| !t.is_zero());
        Cochain { parity: self.parity, components }
    }
}

impl<R: Ring> AlgebraSpec<R> {
    /// The structure constants viewed as an odd cochain.
    pub fn structure_cochain(&self) -> Cochain<R> {
        let mut components = self.lower_constants().clone();
        components.retain(|_, t| !t.is_zero());
        Cochain { parity: Parity::Odd, components }
    }
}

/// Lowered coderivation bracket `[a, b]` of two cyclic cochains. The first
/// argument is the outer map; for each splitting the inner component of `b`
/// is raised and plugged into the first slot of a lowered component of `a`.
///
/// A-infinity: a cyclic rotation sum with the linear-split Koszul signs.
/// L-infinity: an unshuffle sum weighted by the Koszul sign alone.
///
/// The result is again cyclic, and `[a, b] = -(-1)^{p(a) p(b)} [b, a]`.
pub fn coderivation_bracket<R: Ring>(
    a: &Cochain<R>,
    b: &Cochain<R>,
    spec: &AlgebraSpec<R>,
) -> Result<Cochain<R>, AlgebraError> {
    let dim = spec.dim();
    let kinv = spec.inner_inverse()?;
    let basis = spec.basis();

    let raised_b: BTreeMap<usize, Tensor<R>> = b
        .components()
        .iter()
        .map(|(&arity, t)| (arity, raise_last(t, &kinv)))
        .collect();

    let mut components: BTreeMap<usize, Tensor<R>> = BTreeMap::new();
    for (&inner_arity, inner_t) in &raised_b {
        for (&outer_arity, outer_t) in a.components() {
            let len = inner_arity + outer_arity; // free lowered indices
            let result = components
                .entry(len - 1)
                .or_insert_with(|| Tensor::zeros(dim, len));
            for tuple in Tensor::<R>::zeros(dim, len).indices() {
                let parities: Vec<Parity> =
                    tuple.iter().map(|&j| basis.parity(j)).collect();
                let mut acc = R::zero();
                match spec.flavor() {
                    Flavor::AInfinity => {
                        for i in 0..len {
                            let left = parities[..i].iter().fold(Parity::Even, |s, &p| s + p);
                            let right = parities[i..].iter().fold(Parity::Even, |s, &p| s + p);
                            let rot = if left.is_odd() && right.is_odd() {
                                Sign::Minus
                            } else {
                                Sign::Plus
                            };
                            let mut inner_idx: Vec<usize> = (0..inner_arity)
                                .map(|s| tuple[(i + s) % len])
                                .collect();
                            inner_idx.push(0);
                            let mut outer_idx: Vec<usize> = vec![0];
                            outer_idx
                                .extend((0..outer_arity).map(|s| tuple[(i + inner_arity + s) % len]));
                            acc = acc
                                + link(inner_t, outer_t, &mut inner_idx, &mut outer_idx, dim)
                                    * rot.scalar::<R>();
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
                            acc = acc
                                + link(inner_t, outer_t, &mut inner_idx, &mut outer_idx, dim)
                                    * eps.scalar::<R>();
                        }
                    }
                }
                if !acc.is_zero() {
                    result.add_assign_at(&tuple, acc);
                }
            }
        }
    }
    components.retain(|_, t| !t.is_zero());
    Ok(Cochain { parity: a.parity + b.parity, components })
}

fn link<R: Ring>(
    inner: &Tensor<R>,
    outer: &Tensor<R>,
    inner_idx: &mut [usize],
    outer_idx: &mut [usize],
    dim: usize,
) -> R {
    let last = inner_idx.len() - 1;
    let mut acc = R::zero();
    for x in 0..dim {
        inner_idx[last] = x;
        let v = inner.get(inner_idx);
        if v.is_zero() {
            continue;
        }
        outer_idx[0] = x;
        let w = outer.get(outer_idx);
        if w.is_zero() {
            continue;
        }
        acc = acc + v.clone() * w.clone();
    }
    acc
}

/// The cyclic-cohomology differential `D(psi) = [psi, d]`. Applying it twice
/// gives zero for any valid structure.
pub fn differential<R: Ring>(
    psi: &Cochain<R>,
    spec: &AlgebraSpec<R>,
) -> Result<Cochain<R>, AlgebraError> {
    coderivation_bracket(psi, &spec.structure_cochain(), spec)
}

/// First-order deformation `d + t * phi` over the dual numbers. `phi` must be
/// odd, cyclic for the spec's flavor, and a cocycle (`D(phi) = 0`); the
/// deformed structure then satisfies the defining relations modulo `t^2`.
pub fn deform(
    spec: &AlgebraSpec<Scalar>,
    phi: &Cochain<Scalar>,
) -> Result<AlgebraSpec<DualScalar>, CochainError> {
    if phi.parity != Parity::Odd {
        return Err(CochainError::NotOdd);
    }
    for (&arity, tensor) in phi.components() {
        for idx in tensor.indices() {
            if !tensor.get(&idx).is_zero() && spec.basis().total_parity(&idx) != Parity::Odd {
                return Err(CochainError::ParityConstraint { arity, index: idx });
            }
        }
        if let Some((index, _)) = symmetry_violation(spec.flavor(), spec.basis(), tensor) {
            return Err(CochainError::NotSymmetric {
                arity,
                flavor: spec.flavor(),
                index,
            });
        }
    }
    let d_phi = differential(phi, spec)?;
    for (&arity, tensor) in d_phi.components() {
        if let Some((index, _)) = tensor.support().into_iter().next() {
            return Err(CochainError::NotACocycle { arity, index });
        }
    }

    let embed = |s: &Scalar| DualScalar::from(s.clone());
    let t_embed = |s: &Scalar| DualScalar::new(Scalar::zero(), s.clone());

    let dim = spec.dim();
    let mut lower: BTreeMap<usize, Tensor<DualScalar>> = spec
        .lower_constants()
        .iter()
        .map(|(&a, t)| (a, t.map(embed)))
        .collect();
    for (&arity, t) in phi.components() {
        let entry = lower
            .entry(arity)
            .or_insert_with(|| Tensor::zeros(dim, arity + 1));
        *entry = entry.add(&t.map(t_embed));
    }

    Ok(AlgebraSpec::new(
        spec.flavor(),
        spec.basis().clone(),
        spec.inner().map(embed),
        lower,
    )?)
}
