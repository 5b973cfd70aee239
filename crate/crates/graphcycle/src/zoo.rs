//! Built-in example algebras. Every entry passes validation and its flavor's
//! relation checker; the release gate test enforces this.

use std::collections::BTreeMap;

use crate::algebra::{eta_transport, AlgebraSpec, Flavor, VSideStructure};
use crate::cochain::deform;
use crate::graded::GradedBasis;
use crate::scalar::{int, DualScalar, Scalar};
use crate::tensor::{identity_matrix, Tensor};

pub const NAMES: [&str; 4] = ["abelian3", "so3", "m2k", "so3-deformed"];

/// Dimension 3, all odd, identity inner product, zero structure constants.
pub fn abelian3() -> AlgebraSpec<Scalar> {
    AlgebraSpec::new(
        Flavor::LInfinity,
        GradedBasis::all_odd(3),
        identity_matrix(3),
        BTreeMap::new(),
    )
    .expect("abelian3 is well formed")
}

/// The rotation Lie algebra on the parity reversion: dimension 3, all odd,
/// identity inner product, `d_{abc}` totally antisymmetric with
/// `d_{123} = 1`.
pub fn so3() -> AlgebraSpec<Scalar> {
    let mut d: Tensor<Scalar> = Tensor::zeros(3, 3);
    for (idx, v) in [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ] {
        d.set(&idx, int(v));
    }
    AlgebraSpec::new(
        Flavor::LInfinity,
        GradedBasis::all_odd(3),
        identity_matrix(3),
        BTreeMap::from([(2, d)]),
    )
    .expect("so3 is well formed")
}

/// The rotation Lie algebra presented on the original (even) space, with
/// the cross-product bracket and the identity pairing.
pub fn so3_v_side() -> VSideStructure {
    let mut m: Tensor<Scalar> = Tensor::zeros(3, 3);
    // [e_b, e_c] = sum_a eps_{bca} e_a, output index last.
    for (idx, v) in [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([1, 0, 2], -1),
        ([2, 1, 0], -1),
        ([0, 2, 1], -1),
    ] {
        m.set(&idx, int(v));
    }
    VSideStructure {
        flavor: Flavor::LInfinity,
        basis: GradedBasis::all_even(3),
        products: BTreeMap::from([(2, m)]),
        inner: identity_matrix(3),
    }
}

/// The algebra of 2x2 matrices with the trace pairing, presented on the
/// original space in the matrix-unit basis `E11, E12, E21, E22`.
pub fn m2k_v_side() -> VSideStructure {
    // Basis index (i, j) -> 2*i + j for E_{i+1, j+1}.
    let unit = |i: usize, j: usize| 2 * i + j;
    let mut m: Tensor<Scalar> = Tensor::zeros(4, 3);
    // E_{ij} E_{kl} = delta_{jk} E_{il}
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                m.set(&[unit(i, j), unit(j, l), unit(i, l)], int(1));
            }
        }
    }
    let mut h: Tensor<Scalar> = Tensor::zeros(4, 2);
    // tr(E_{ij} E_{kl}) = delta_{jk} delta_{li}
    for i in 0..2 {
        for j in 0..2 {
            h.set(&[unit(i, j), unit(j, i)], int(1));
        }
    }
    VSideStructure {
        flavor: Flavor::AInfinity,
        basis: GradedBasis::all_even(4),
        products: BTreeMap::from([(2, m)]),
        inner: h,
    }
}

/// 2x2 matrix algebra transported to the parity reversion: dimension 4, all
/// odd, trace-form inner product, cyclically symmetric `d_{abc} = tr(abc)`.
pub fn m2k() -> AlgebraSpec<Scalar> {
    eta_transport(&m2k_v_side()).expect("m2k transport is well formed")
}

/// so3 deformed by its own structure cochain, over the dual numbers. The
/// structure cochain is always a cocycle, so this is the canonical example
/// of a first-order deformation.
pub fn so3_deformed() -> AlgebraSpec<DualScalar> {
    let spec = so3();
    let phi = spec.structure_cochain();
    deform(&spec, &phi).expect("deformation by the structure cochain is valid")
}

/// Looks up a zoo entry by name. Deformed entries live over the dual
/// numbers, so the result distinguishes the two coefficient rings.
pub enum ZooAlgebra {
    Rational(AlgebraSpec<Scalar>),
    Dual(AlgebraSpec<DualScalar>),
}

pub fn zoo(name: &str) -> Option<ZooAlgebra> {
    match name {
        "abelian3" => Some(ZooAlgebra::Rational(abelian3())),
        "so3" => Some(ZooAlgebra::Rational(so3())),
        "m2k" => Some(ZooAlgebra::Rational(m2k())),
        "so3-deformed" => Some(ZooAlgebra::Dual(so3_deformed())),
        _ => None,
    }
}
