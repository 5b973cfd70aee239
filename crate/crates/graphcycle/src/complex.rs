//! Chain groups graded by edge count, the boundary operator through signed
//! edge contractions, boundary matrices and rational homology ranks.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::enumerate::{enumerate_ordinary, enumerate_ribbon};
use crate::graph::{CanonicalGraph, GraphKind, OrientedGraph};
use crate::scalar::{Ring, Scalar};

/// Which graph complex a chain lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComplexParams {
    Ordinary { chi: i64 },
    Ribbon { genus: usize, punctures: usize },
}

impl ComplexParams {
    pub fn kind(&self) -> GraphKind {
        match self {
            ComplexParams::Ordinary { .. } => GraphKind::Ordinary,
            ComplexParams::Ribbon { .. } => GraphKind::Ribbon,
        }
    }

    pub fn chi(&self) -> i64 {
        match *self {
            ComplexParams::Ordinary { chi } => chi,
            ComplexParams::Ribbon { genus, punctures } => 2 - 2 * genus as i64 - punctures as i64,
        }
    }

    /// Largest possible edge count: trivalence forces `e <= -3 chi`.
    pub fn edge_bound(&self) -> usize {
        let chi = self.chi();
        if chi >= 0 {
            0
        } else {
            (-3 * chi) as usize
        }
    }

    /// All isomorphism classes with at most `max_edges` edges, including
    /// zero-orientation classes.
    pub fn classes(&self, max_edges: usize) -> Vec<CanonicalGraph> {
        match *self {
            ComplexParams::Ordinary { chi } => enumerate_ordinary(chi, max_edges),
            ComplexParams::Ribbon { genus, punctures } => {
                enumerate_ribbon(genus, punctures, max_edges)
            }
        }
    }

    /// Basis of the degree-`e` chain group: the nonzero classes with exactly
    /// `e` edges, in canonical order.
    pub fn generators(&self, e: usize) -> Vec<CanonicalGraph> {
        self.classes(e)
            .into_iter()
            .filter(|c| c.edge_count() == e && !c.is_zero_class())
            .collect()
    }
}

impl fmt::Display for ComplexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexParams::Ordinary { chi } => write!(f, "ordinary complex, chi = {chi}"),
            ComplexParams::Ribbon { genus, punctures } => {
                write!(f, "ribbon complex, genus = {genus}, punctures = {punctures}")
            }
        }
    }
}

/// Finite formal linear combination of canonical oriented graphs. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Chain<R: Ring = Scalar> {
    terms: BTreeMap<CanonicalGraph, R>,
}

impl<R: Ring> Chain<R> {
    pub fn new() -> Self {
        Chain { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, graph: CanonicalGraph, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(graph);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, graph: &CanonicalGraph) -> R {
        self.terms.get(graph).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalGraph, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, by: &R) -> Chain<R> {
        let mut out = Chain::new();
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c.clone() * by.clone());
        }
        out
    }

    pub fn add(&self, other: &Chain<R>) -> Chain<R> {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    /// The part supported on graphs with exactly `e` edges.
    pub fn degree_part(&self, e: usize) -> Chain<R> {
        let mut out = Chain::new();
        for (g, c) in &self.terms {
            if g.edge_count() == e {
                out.add_term(g.clone(), c.clone());
            }
        }
        out
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|g| g.edge_count()).max()
    }
}

impl<R: Ring> Default for Chain<R> {
    fn default() -> Self {
        Chain::new()
    }
}

impl<R: Ring> fmt::Display for Chain<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (g, c) in &self.terms {
            writeln!(f, "{c} {g}")?;
        }
        Ok(())
    }
}

/// Signed incidence contributions of one oriented graph: each non-loop edge
/// is contracted, the result canonicalized, and zero classes dropped.
pub fn boundary_terms(g: &OrientedGraph) -> Vec<(CanonicalGraph, i64)> {
    let mut acc: BTreeMap<CanonicalGraph, i64> = BTreeMap::new();
    for edge in 0..g.edge_count() {
        if g.is_loop(edge).expect("edge index in range") {
            continue;
        }
        let c = g.contract_edge(edge).expect("non-loop edge contracts");
        let (canon, orient) = c.graph.canonicalize();
        if let Some(s) = orient {
            *acc.entry(canon).or_insert(0) += (c.sign * s).i64();
        }
    }
    acc.into_iter().filter(|&(_, n)| n != 0).collect()
}

/// The boundary of an oriented graph as a chain.
pub fn boundary<R: Ring>(g: &OrientedGraph) -> Chain<R> {
    let mut out = Chain::new();
    for (canon, n) in boundary_terms(g) {
        out.add_term(canon, R::from_int(n));
    }
    out
}

/// The boundary operator from degree `e` to degree `e - 1`, as a dense
/// matrix over the canonical generator bases.
pub struct BoundaryMatrix {
    pub rows: Vec<CanonicalGraph>,
    pub cols: Vec<CanonicalGraph>,
    /// `entries[r][c]` is the incidence number of `rows[r]` in the boundary
    /// of `cols[c]`.
    pub entries: Vec<Vec<Scalar>>,
}

impl BoundaryMatrix {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    /// Matrix product `self * next`, defined when `next` maps into the
    /// column space of `self`. For consecutive boundary operators this must
    /// be the zero matrix.
    pub fn compose(&self, next: &BoundaryMatrix) -> BoundaryMatrix {
        assert_eq!(self.cols, next.rows, "degree mismatch in composition");
        let mut entries = vec![vec![Scalar::zero(); next.cols.len()]; self.rows.len()];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                let mut acc = Scalar::zero();
                for k in 0..self.cols.len() {
                    acc += self.entries[r][k].clone() * next.entries[k][c].clone();
                }
                *cell = acc;
            }
        }
        BoundaryMatrix { rows: self.rows.clone(), cols: next.cols.clone(), entries }
    }

    /// Exact rank by Gaussian elimination over the rationals.
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Scalar>> = self.entries.clone();
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            m.swap(row, pivot);
            let inv = Scalar::from_int(1) / m[row][col].clone();
            for c in col..cols {
                m[row][c] = m[row][c].clone() * inv.clone();
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..cols {
                        m[r][c] = m[r][c].clone() - factor.clone() * m[row][c].clone();
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    /// Nonzero entries in `(row, col, value)` coordinate form, 1-based.
    pub fn coordinate_form(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (r, row) in self.entries.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    out.push((r + 1, c + 1, x.clone()));
                }
            }
        }
        out
    }
}

/// Assembles the boundary operator from degree `e` into degree `e - 1`.
pub fn boundary_matrix(params: &ComplexParams, e: usize) -> BoundaryMatrix {
    let cols = params.generators(e);
    let rows = if e == 0 { Vec::new() } else { params.generators(e - 1) };
    let mut entries = vec![vec![Scalar::zero(); cols.len()]; rows.len()];
    for (c, col) in cols.iter().enumerate() {
        for (canon, n) in boundary_terms(col.representative()) {
            if let Some(r) = rows.iter().position(|g| *g == canon) {
                entries[r][c] = Scalar::from_int(n);
            }
        }
    }
    BoundaryMatrix { rows, cols, entries }
}

/// Betti-number data for one degree of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub edges: usize,
    pub dim: usize,
    /// Rank of the boundary out of this degree.
    pub rank_out: usize,
    /// Rank of the boundary coming in from one degree up; `None` when the
    /// enumeration was truncated below the complex's edge bound.
    pub rank_in: Option<usize>,
    pub betti: Option<usize>,
}

/// Rational homology ranks by edge degree. When `max_edges` is below the
/// complex's edge bound the top degree is flagged as truncated instead of
/// silently mis-stating its homology.
pub fn homology_ranks(params: &ComplexParams, max_edges: usize) -> Vec<DegreeSummary> {
    let top = max_edges.min(params.edge_bound());
    let complete = top == params.edge_bound();
    let mut out = Vec::new();
    let mut rank_cache: BTreeMap<usize, usize> = BTreeMap::new();
    let mut rank_of = |e: usize| -> usize {
        *rank_cache
            .entry(e)
            .or_insert_with(|| boundary_matrix(params, e).rank())
    };
    for e in 1..=top {
        let dim = params.generators(e).len();
        if dim == 0 {
            continue;
        }
        let rank_out = rank_of(e);
        let rank_in = if e < top {
            Some(rank_of(e + 1))
        } else if complete {
            Some(0)
        } else {
            None
        };
        let betti = rank_in.map(|ri| dim - rank_out - ri);
        out.push(DegreeSummary { edges: e, dim, rank_out, rank_in, betti });
    }
    out
}
