//! Graded tensor contraction over a graph: one odd structure tensor per
//! vertex (indices in the local order), one even inverse-inner-product
//! tensor per edge (tail index first), contracted with Koszul signs. The
//! resulting number per oriented graph assembles into a chain whose boundary
//! vanishes when the algebra satisfies its defining relations.


use crate::algebra::{AlgebraError, AlgebraSpec, Flavor};
use crate::complex::{boundary_terms, Chain, ComplexParams};
use crate::graded::{GradedBasis, Sign};
use crate::graph::{GraphKind, OrientedGraph};
use crate::scalar::Ring;

#[derive(thiserror::Error, Debug)]
pub enum StateSumError {
    #[error("{flavor} structures pair with {expected} graphs, got a {got} graph")]
    KindMismatch { flavor: Flavor, expected: GraphKind, got: GraphKind },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("state must assign one basis index to each of {expected} half-edges")]
    BadState { expected: usize },
}

/// One slot of the contraction word: a lower (vertex-tensor) or upper
/// (edge-tensor) index carried by a half-edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Slot {
    pub upper: bool,
    pub half_edge: usize,
}

/// The ordered tensor word of a graph: all vertex tensors in vertex order,
/// each vertex's slots in its local order; then all edge tensors in edge
/// order, each contributing its tail slot then its head slot. The pairing
/// matches the lower and upper slot of every half-edge.
#[derive(Clone, Debug)]
pub struct SlotWord {
    slots: Vec<Slot>,
    /// `(lower position, upper position)` per half-edge, lower first.
    pairs: Vec<(usize, usize)>,
}

impl SlotWord {
    pub fn from_graph(g: &OrientedGraph) -> SlotWord {
        let order: Vec<usize> = (0..g.edge_count()).collect();
        SlotWord::from_graph_with_edge_order(g, &order)
    }

    /// Builds the word with the edge tensors written in a chosen order. The
    /// edge tensors are even, so reordering them must not change any value;
    /// the sign-convention tests exercise exactly that.
    pub fn from_graph_with_edge_order(g: &OrientedGraph, edge_order: &[usize]) -> SlotWord {
        let n = g.half_edge_count();
        let edges = g.edges();
        assert_eq!(edge_order.len(), edges.len());
        let mut slots = Vec::with_capacity(2 * n);
        let mut lower_pos = vec![usize::MAX; n];
        let mut upper_pos = vec![usize::MAX; n];
        for v in 0..g.vertex_count() {
            for &h in g.local_order(v) {
                lower_pos[h] = slots.len();
                slots.push(Slot { upper: false, half_edge: h });
            }
        }
        for &e in edge_order {
            let (t, h) = edges[e];
            upper_pos[t] = slots.len();
            slots.push(Slot { upper: true, half_edge: t });
            upper_pos[h] = slots.len();
            slots.push(Slot { upper: true, half_edge: h });
        }
        let pairs = (0..n).map(|h| (lower_pos[h], upper_pos[h])).collect();
        SlotWord { slots, pairs }
    }

    /// Builds a word from raw slots and a matching; every pair must put its
    /// lower slot before its upper slot.
    pub fn new(slots: Vec<Slot>, pairs: Vec<(usize, usize)>) -> Result<SlotWord, StateSumError> {
        let mut seen = vec![false; slots.len()];
        let ok = pairs.len() * 2 == slots.len()
            && pairs.iter().all(|&(lo, hi)| {
                let fresh = lo < hi
                    && hi < slots.len()
                    && !seen[lo]
                    && !seen[hi]
                    && !slots[lo].upper
                    && slots[hi].upper
                    && slots[lo].half_edge == slots[hi].half_edge;
                if fresh {
                    seen[lo] = true;
                    seen[hi] = true;
                }
                fresh
            });
        if !ok {
            return Err(StateSumError::BadState { expected: pairs.len() });
        }
        Ok(SlotWord { slots, pairs })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// The Koszul sign of contracting every matched pair of the word, given a
/// state assigning one basis index per half-edge. Pairs are eliminated one
/// at a time: moving the upper slot next to its lower partner crosses the
/// live slots between them, each odd-odd crossing contributing `-1`. The
/// result does not depend on the elimination order.
pub fn contraction_sign(
    word: &SlotWord,
    state: &[usize],
    basis: &GradedBasis,
) -> Result<Sign, StateSumError> {
    let order: Vec<usize> = (0..word.pairs.len()).collect();
    contraction_sign_with_order(word, state, basis, &order)
}

/// Same as [`contraction_sign`] with an explicit pair-elimination order;
/// used to verify order independence.
pub fn contraction_sign_with_order(
    word: &SlotWord,
    state: &[usize],
    basis: &GradedBasis,
    order: &[usize],
) -> Result<Sign, StateSumError> {
    let n_half = word.pairs.len();
    if state.len() != n_half {
        return Err(StateSumError::BadState { expected: n_half });
    }
    let mut alive = vec![true; word.slots.len()];
    let mut sign = Sign::Plus;
    for &p in order {
        let (lo, hi) = word.pairs[p];
        debug_assert!(lo < hi, "vertex slots precede edge slots");
        let parity = basis.parity(state[word.slots[lo].half_edge]);
        if parity.is_odd() {
            let mut crossings = 0usize;
            for (k, &live) in alive.iter().enumerate().take(hi).skip(lo + 1) {
                if live && basis.parity(state[word.slots[k].half_edge]).is_odd() {
                    crossings += 1;
                }
            }
            sign = sign * Sign::from_parity(crossings);
        }
        alive[lo] = false;
        alive[hi] = false;
    }
    Ok(sign)
}

fn check_kind<R: Ring>(spec: &AlgebraSpec<R>, kind: GraphKind) -> Result<(), StateSumError> {
    let expected = match spec.flavor() {
        Flavor::AInfinity => GraphKind::Ribbon,
        Flavor::LInfinity => GraphKind::Ordinary,
    };
    if kind != expected {
        return Err(StateSumError::KindMismatch { flavor: spec.flavor(), expected, got: kind });
    }
    Ok(())
}

/// The contraction number of one oriented graph: the sum over all index
/// states of the product of vertex tensors and edge tensors times the
/// graded contraction sign. States are enumerated through the support of
/// the inverse inner product, which reproduces the full state sum exactly.
///
/// The value changes sign under an odd vertex relabeling or an arrow flip,
/// and is invariant under rotating a ribbon vertex's starting half-edge and
/// under reordering the stored local order of an ordinary vertex.
pub fn partition_value<R: Ring>(
    g: &OrientedGraph,
    spec: &AlgebraSpec<R>,
) -> Result<R, StateSumError> {
    let order: Vec<usize> = (0..g.edge_count()).collect();
    partition_value_with_edge_order(g, spec, &order)
}

/// [`partition_value`] with the edge tensors multiplied in a chosen order;
/// the result must be the same for every order.
pub fn partition_value_with_edge_order<R: Ring>(
    g: &OrientedGraph,
    spec: &AlgebraSpec<R>,
    edge_order: &[usize],
) -> Result<R, StateSumError> {
    check_kind(spec, g.kind())?;
    // A vertex of valence n needs the n-index tensor; arities not carried by
    // the spec are zero, so the whole sum collapses.
    for v in 0..g.vertex_count() {
        if spec.lower_tensor(g.valence(v) - 1).is_none() {
            return Ok(R::zero());
        }
    }
    let kinv = spec.inner_inverse()?;
    let word = SlotWord::from_graph_with_edge_order(g, edge_order);
    let edges = g.edges();

    let support: Vec<(usize, usize, R)> = kinv
        .support()
        .into_iter()
        .map(|(idx, v)| (idx[0], idx[1], v))
        .collect();
    if support.is_empty() {
        return Ok(R::zero());
    }

    let mut total = R::zero();
    let mut choice = vec![0usize; edges.len()];
    let mut state = vec![0usize; g.half_edge_count()];
    loop {
        let mut edge_factor = R::one();
        for (e, &(t, h)) in edges.iter().enumerate() {
            let (a, b, ref v) = support[choice[e]];
            state[t] = a;
            state[h] = b;
            edge_factor = edge_factor * v.clone();
        }
        let mut term = edge_factor;
        for v in 0..g.vertex_count() {
            if term.is_zero() {
                break;
            }
            let idx: Vec<usize> = g.local_order(v).iter().map(|&h| state[h]).collect();
            let tensor = spec
                .lower_tensor(g.valence(v) - 1)
                .expect("checked above");
            term = term * tensor.get(&idx).clone();
        }
        if !term.is_zero() {
            let sign = contraction_sign(&word, &state, spec.basis())?;
            total = total + term * sign.scalar::<R>();
        }

        // odometer over per-edge support choices
        let mut pos = edges.len();
        loop {
            if pos == 0 {
                return Ok(total);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < support.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// The symbolic contraction pattern of a graph: one `d` factor per vertex
/// with its half-edge letters in local order, one `k` factor per edge with
/// the tail letter first.
pub fn expression(g: &OrientedGraph) -> String {
    let letter = |h: usize| -> String {
        let alphabet = "abcdefghijklmnopqrstuvwxyz";
        match alphabet.chars().nth(h) {
            Some(c) => c.to_string(),
            None => format!("x{}", h - alphabet.len() + 1),
        }
    };
    let mut factors = Vec::new();
    for v in 0..g.vertex_count() {
        let letters: String = g.local_order(v).iter().map(|&h| letter(h)).collect();
        factors.push(format!("d_{{{letters}}}"));
    }
    for (t, h) in g.edges() {
        factors.push(format!("k^{{{}{}}}", letter(t), letter(h)));
    }
    factors.join(" ")
}

/// The chain `Z = sum Z(graph) / |Aut(graph)| graph` over all nonzero
/// canonical generators with at most `max_edges` edges.
///
/// The contraction number is a function on labeled graphs; summing over
/// isomorphism classes instead requires dividing each coefficient by the
/// order of the automorphism group, and the boundary of the result then
/// vanishes degree by degree through the defining relations of the algebra.
pub fn cycle_chain<R: Ring>(
    spec: &AlgebraSpec<R>,
    params: &ComplexParams,
    max_edges: usize,
) -> Result<Chain<R>, StateSumError> {
    check_kind(spec, params.kind())?;
    let mut chain = Chain::new();
    for class in params.classes(max_edges) {
        if class.is_zero_class() {
            continue;
        }
        let value = partition_value(class.representative(), spec)?;
        let aut = class.representative().automorphism_count();
        let weight = R::from_scalar(crate::scalar::ratio(1, aut as i64));
        chain.add_term(class, value * weight);
    }
    Ok(chain)
}

/// Per-degree result of a cycle verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleReport {
    /// `(edge degree of the boundary component, vanished)` for every degree
    /// whose incoming generator set is complete.
    pub degrees: Vec<(usize, bool)>,
    /// Whether the chain was truncated below the complex's edge bound.
    pub truncated: bool,
    pub verified: bool,
}

/// Computes the boundary of a chain degree by degree and checks that it
/// vanishes wherever the generator set one edge up is complete. A chain
/// produced by [`cycle_chain`] with `max_edges` at the complex's edge bound
/// is checked in every degree.
pub fn verify_cycle<R: Ring>(
    chain: &Chain<R>,
    params: &ComplexParams,
    max_edges: usize,
) -> CycleReport {
    let top = max_edges.min(params.edge_bound());
    let truncated = top < params.edge_bound();
    let mut boundary: Chain<R> = Chain::new();
    for (graph, coeff) in chain.terms() {
        for (canon, n) in boundary_terms(graph.representative()) {
            boundary.add_term(canon, coeff.clone() * R::from_int(n));
        }
    }
    let mut degrees = Vec::new();
    let mut verified = true;
    for d in (1..top).rev() {
        // degree d of the boundary receives from degree d + 1 <= top: complete
        let ok = boundary.degree_part(d).is_zero();
        verified &= ok;
        degrees.push((d, ok));
    }
    degrees.reverse();
    CycleReport { degrees, truncated, verified }
}
