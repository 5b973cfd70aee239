//! Half-edge multigraphs, ordinary and ribbon, with orientations given by a
//! vertex ordering plus an arrow on every edge.
//!
//! Two oriented graphs are the same generator when an isomorphism of the
//! underlying graphs carries one orientation to the other; an odd vertex
//! relabeling or a single arrow flip costs a sign. Canonical forms are found
//! by exhaustive minimization over relabelings (and, for ribbon graphs,
//! rotation starts), which is exact at desk scale and doubles as an
//! automorphism scan: a graph equivalent to its own opposite orientation is
//! zero in the complex. Any graph with a loop is zero.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::graded::Sign;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GraphKind {
    Ordinary,
    Ribbon,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Ordinary => write!(f, "ordinary"),
            GraphKind::Ribbon => write!(f, "ribbon"),
        }
    }
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("half-edges must cover 0..n exactly once across the vertex lists")]
    HalfEdgeCover,
    #[error("edge list must pair every half-edge exactly once, with no fixed point")]
    BadPairing,
    #[error("vertex {0} has valence {1}; every vertex must be at least trivalent")]
    SubTrivalent(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge {0} is a loop and cannot be contracted")]
    LoopNotContractible(usize),
    #[error("no edge with index {0}")]
    NoSuchEdge(usize),
    #[error("face tracing requires a ribbon graph")]
    NotRibbon,
}

/// A connected multigraph on half-edges with an orientation: vertex labels
/// are the list positions, each vertex stores its incident half-edges in a
/// fixed local order (the cyclic order, for ribbon graphs), and every edge
/// carries an arrow from its tail half-edge to its head half-edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedGraph {
    kind: GraphKind,
    vertices: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    pairing: Vec<usize>,
    is_tail: Vec<bool>,
}

impl OrientedGraph {
    /// Builds and validates a graph from per-vertex half-edge lists and
    /// directed edges `(tail half-edge, head half-edge)`.
    pub fn new(
        kind: GraphKind,
        vertices: Vec<Vec<usize>>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let n: usize = vertices.iter().map(|v| v.len()).sum();
        let mut vertex_of = vec![usize::MAX; n];
        for (v, list) in vertices.iter().enumerate() {
            for &h in list {
                if h >= n || vertex_of[h] != usize::MAX {
                    return Err(GraphError::HalfEdgeCover);
                }
                vertex_of[h] = v;
            }
        }
        if !n.is_multiple_of(2) || edges.len() != n / 2 {
            return Err(GraphError::BadPairing);
        }
        let mut pairing = vec![usize::MAX; n];
        let mut is_tail = vec![false; n];
        for &(t, h) in edges {
            if t >= n || h >= n || t == h || pairing[t] != usize::MAX || pairing[h] != usize::MAX {
                return Err(GraphError::BadPairing);
            }
            pairing[t] = h;
            pairing[h] = t;
            is_tail[t] = true;
        }
        for (v, list) in vertices.iter().enumerate() {
            if list.len() < 3 {
                return Err(GraphError::SubTrivalent(v, list.len()));
            }
        }
        let g = OrientedGraph { kind, vertices, vertex_of, pairing, is_tail };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.pairing.len()
    }

    pub fn edge_count(&self) -> usize {
        self.pairing.len() / 2
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    pub fn pairing(&self, h: usize) -> usize {
        self.pairing[h]
    }

    pub fn local_order(&self, v: usize) -> &[usize] {
        &self.vertices[v]
    }

    pub fn half_edge_is_tail(&self, h: usize) -> bool {
        self.is_tail[h]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    /// Edges as `(tail, head)` half-edge pairs, ordered by minimal half-edge.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for h in 0..self.half_edge_count() {
            if h < self.pairing[h] {
                if self.is_tail[h] {
                    out.push((h, self.pairing[h]));
                } else {
                    out.push((self.pairing[h], h));
                }
            }
        }
        out
    }

    pub fn is_loop(&self, edge: usize) -> Result<bool, GraphError> {
        let (t, h) = *self.edges().get(edge).ok_or(GraphError::NoSuchEdge(edge))?;
        Ok(self.vertex_of[t] == self.vertex_of[h])
    }

    pub fn has_loop(&self) -> bool {
        (0..self.half_edge_count()).any(|h| self.vertex_of[h] == self.vertex_of[self.pairing[h]])
    }

    fn is_connected(&self) -> bool {
        let m = self.vertex_count();
        if m == 0 {
            return false;
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &h in &self.vertices[v] {
                let w = self.vertex_of[self.pairing[h]];
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of face circuits of a ribbon graph: orbits of the successor
    /// map `h -> next(pairing(h))`, `next` being the cyclic order at the
    /// vertex of `pairing(h)`.
    pub fn faces(&self) -> Result<usize, GraphError> {
        if self.kind != GraphKind::Ribbon {
            return Err(GraphError::NotRibbon);
        }
        let n = self.half_edge_count();
        let next_at_vertex = |h: usize| -> usize {
            let v = self.vertex_of[h];
            let list = &self.vertices[v];
            let pos = list.iter().position(|&x| x == h).expect("half-edge at vertex");
            list[(pos + 1) % list.len()]
        };
        let mut seen = vec![false; n];
        let mut orbits = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = next_at_vertex(self.pairing[h]);
            }
        }
        Ok(orbits)
    }

    /// Relabels vertices: `new_of_old[v]` is the new label of vertex `v`.
    pub fn relabel_vertices(&self, new_of_old: &[usize]) -> OrientedGraph {
        assert_eq!(new_of_old.len(), self.vertex_count());
        let mut vertices = vec![Vec::new(); self.vertex_count()];
        for (old, list) in self.vertices.iter().enumerate() {
            vertices[new_of_old[old]] = list.clone();
        }
        let mut g = self.clone();
        g.vertices = vertices;
        g.vertex_of = rebuild_vertex_of(&g.vertices, self.half_edge_count());
        g
    }

    /// Reverses the arrow on one edge.
    pub fn flip_arrow(&self, edge: usize) -> Result<OrientedGraph, GraphError> {
        let (t, h) = *self.edges().get(edge).ok_or(GraphError::NoSuchEdge(edge))?;
        let mut g = self.clone();
        g.is_tail[t] = false;
        g.is_tail[h] = true;
        Ok(g)
    }

    /// Rotates the designated starting point of a vertex's cyclic order.
    /// The ribbon structure is unchanged.
    pub fn rotate_vertex(&self, v: usize, by: usize) -> OrientedGraph {
        let mut g = self.clone();
        let len = g.vertices[v].len();
        g.vertices[v].rotate_left(by % len);
        g
    }

    /// Reorders the stored local order of a vertex (ordinary graphs only;
    /// for ribbon graphs this would change the surface).
    pub fn permute_local(&self, v: usize, order: &[usize]) -> OrientedGraph {
        assert_eq!(self.kind, GraphKind::Ordinary);
        let mut g = self.clone();
        g.vertices[v] = order.iter().map(|&i| self.vertices[v][i]).collect();
        g
    }

    /// Contracts a non-loop edge. The labels are first adjusted by the
    /// transposition that gives the head vertex the highest label (cost: the
    /// returned sign); that vertex is then deleted and its half-edges are
    /// spliced into the tail vertex where the tail half-edge sat, following
    /// the cyclic order after the head half-edge.
    #[allow(clippy::needless_range_loop)]
    pub fn contract_edge(&self, edge: usize) -> Result<Contraction, GraphError> {
        let (t, h) = *self.edges().get(edge).ok_or(GraphError::NoSuchEdge(edge))?;
        let vt = self.vertex_of[t];
        let vh = self.vertex_of[h];
        if vt == vh {
            return Err(GraphError::LoopNotContractible(edge));
        }
        let last = self.vertex_count() - 1;
        let sign = if vh == last { Sign::Plus } else { Sign::Minus };

        let mut lists = self.vertices.clone();
        lists.swap(vh, last);
        let vt_now = if vt == last { vh } else { vt };

        let head_list = lists[last].clone();
        let head_pos = head_list.iter().position(|&x| x == h).expect("head in its vertex");
        let mut spliced: Vec<usize> = Vec::with_capacity(head_list.len() - 1);
        for i in 1..head_list.len() {
            spliced.push(head_list[(head_pos + i) % head_list.len()]);
        }

        let tail_list = &lists[vt_now];
        let tail_pos = tail_list.iter().position(|&x| x == t).expect("tail in its vertex");
        let mut merged = Vec::with_capacity(tail_list.len() - 1 + spliced.len());
        merged.extend_from_slice(&tail_list[..tail_pos]);
        merged.extend_from_slice(&spliced);
        merged.extend_from_slice(&tail_list[tail_pos + 1..]);

        lists[vt_now] = merged;
        lists.pop();

        // Renumber half-edges, dropping t and h.
        let n = self.half_edge_count();
        let mut new_id = vec![usize::MAX; n];
        let mut next = 0;
        for old in 0..n {
            if old != t && old != h {
                new_id[old] = next;
                next += 1;
            }
        }
        let vertices: Vec<Vec<usize>> = lists
            .iter()
            .map(|list| list.iter().map(|&x| new_id[x]).collect())
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .filter(|&&(a, b)| a != t && a != h && b != t && b != h)
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();

        let graph = OrientedGraph::new(self.kind, vertices, &edges)?;
        let block_len = head_list.len() - 1;
        Ok(Contraction { graph, sign, merged_vertex: vt_now, block_start: tail_pos, block_len })
    }

    /// Inserts an edge at a vertex, splitting off the local block
    /// `[start, start + len)` to a new vertex with the highest label. The
    /// arrow on the new edge points to the new vertex, which fixes the
    /// induced orientation with sign `+1`; the new half-edge comes first in
    /// the new vertex's order and replaces the block in the old one.
    pub fn insert_edge(&self, v: usize, start: usize, len: usize) -> Result<OrientedGraph, GraphError> {
        let list = &self.vertices[v];
        assert!(start + len <= list.len(), "block must not wrap");
        let n = self.half_edge_count();
        let t_new = n;
        let h_new = n + 1;

        let mut old_list = Vec::with_capacity(list.len() - len + 1);
        old_list.extend_from_slice(&list[..start]);
        old_list.push(t_new);
        old_list.extend_from_slice(&list[start + len..]);
        let mut new_list = Vec::with_capacity(len + 1);
        new_list.push(h_new);
        new_list.extend_from_slice(&list[start..start + len]);

        let mut vertices = self.vertices.clone();
        vertices[v] = old_list;
        vertices.push(new_list);
        let mut edges = self.edges();
        edges.push((t_new, h_new));
        OrientedGraph::new(self.kind, vertices, &edges)
    }

    /// Canonical form and the sign relating this graph to the canonical
    /// representative: `[g] = sign * [canonical]` in the chain group, or
    /// `None` when the class is zero (a loop, or an automorphism carrying
    /// the orientation to its negative).
    pub fn canonicalize(&self) -> (CanonicalGraph, Option<Sign>) {
        match self.kind {
            GraphKind::Ordinary => self.canonicalize_ordinary(),
            GraphKind::Ribbon => self.canonicalize_ribbon(),
        }
    }

    fn canonicalize_ordinary(&self) -> (CanonicalGraph, Option<Sign>) {
        let v = self.vertex_count();
        let vertex_edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(t, h)| (self.vertex_of[t], self.vertex_of[h]))
            .collect();

        let mut best: Option<(Vec<usize>, Sign)> = None;
        let mut zero = self.has_loop();
        for perm in (0..v).permutations(v) {
            let mut flips = 0usize;
            let mut pairs: Vec<(usize, usize)> = vertex_edges
                .iter()
                .map(|&(tv, hv)| {
                    let (a, b) = (perm[tv], perm[hv]);
                    if a > b {
                        flips += 1;
                        (b, a)
                    } else {
                        (a, b)
                    }
                })
                .collect();
            pairs.sort_unstable();
            let payload: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            let sign = perm_sign(&perm) * Sign::from_parity(flips);
            match &best {
                None => best = Some((payload, sign)),
                Some((bp, bs)) => match payload.cmp(bp) {
                    Ordering::Less => best = Some((payload, sign)),
                    Ordering::Equal => {
                        if sign != *bs {
                            zero = true;
                        }
                    }
                    Ordering::Greater => {}
                },
            }
        }
        let (payload, sign) = best.expect("at least the identity relabeling");
        let rep = ordinary_from_pairs(v, &payload);
        let canonical = CanonicalGraph {
            code: CanonCode {
                kind: GraphKind::Ordinary,
                edges: payload.len() / 2,
                verts: v,
                payload,
            },
            zero,
            rep,
        };
        let out_sign = if zero { None } else { Some(sign) };
        (canonical, out_sign)
    }

    fn canonicalize_ribbon(&self) -> (CanonicalGraph, Option<Sign>) {
        let v = self.vertex_count();
        let n = self.half_edge_count();

        let mut best: Option<(Vec<usize>, Sign)> = None;
        let mut zero = self.has_loop();
        self.scan_ribbon_candidates(|payload, sign| {
            let replace = match &best {
                None => true,
                Some((bp, bs)) => match payload.cmp(bp.as_slice()) {
                    Ordering::Less => true,
                    Ordering::Equal => {
                        if sign != *bs {
                            zero = true;
                        }
                        false
                    }
                    Ordering::Greater => false,
                },
            };
            if replace {
                best = Some((payload.to_vec(), sign));
            }
        });
        let (payload, sign) = best.expect("at least one candidate");
        let rep = ribbon_from_payload(v, n, &payload);
        let canonical = CanonicalGraph {
            code: CanonCode { kind: GraphKind::Ribbon, edges: n / 2, verts: v, payload },
            zero,
            rep,
        };
        let out_sign = if zero { None } else { Some(sign) };
        (canonical, out_sign)
    }

    /// Visits every relabeling candidate of a ribbon graph: a vertex order
    /// and a rotation start per vertex, yielding the resulting encoding
    /// (valences then pairing) and the orientation sign relating the graph
    /// to it.
    fn scan_ribbon_candidates(&self, mut visit: impl FnMut(&[usize], Sign)) {
        let v = self.vertex_count();
        let n = self.half_edge_count();
        let edges = self.edges();
        for order in (0..v).permutations(v) {
            // order[pos] = old vertex at new position pos
            let mut new_label = vec![0usize; v];
            for (pos, &old) in order.iter().enumerate() {
                new_label[old] = pos;
            }
            let vertex_sign = perm_sign(&new_label);

            let valences: Vec<usize> = order.iter().map(|&old| self.valence(old)).collect();
            let mut starts = vec![0usize; v];
            loop {
                // Renumber half-edges by visiting vertices in order, each
                // cyclic list read from its chosen start.
                let mut new_id = vec![usize::MAX; n];
                let mut next = 0;
                for (pos, &old) in order.iter().enumerate() {
                    let list = &self.vertices[old];
                    for j in 0..list.len() {
                        new_id[list[(starts[pos] + j) % list.len()]] = next;
                        next += 1;
                    }
                }
                let mut payload = valences.clone();
                let mut inverse = vec![0usize; n];
                for (old, &nid) in new_id.iter().enumerate() {
                    inverse[nid] = old;
                }
                payload.extend((0..n).map(|nid| new_id[self.pairing[inverse[nid]]]));

                let mut flips = 0usize;
                for &(t, h) in &edges {
                    if new_id[t] > new_id[h] {
                        flips += 1;
                    }
                }
                visit(&payload, vertex_sign * Sign::from_parity(flips));

                // Odometer over rotation starts.
                let mut pos = v;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    starts[pos] += 1;
                    if starts[pos] < valences[pos] {
                        break;
                    }
                    starts[pos] = 0;
                }
                if starts.iter().all(|&s| s == 0) {
                    break;
                }
            }
        }
    }

    /// Order of the automorphism group at the half-edge level. Ribbon
    /// automorphisms preserve the cyclic orders; for ordinary graphs,
    /// permutations of parallel edges and flips of loops count as distinct
    /// automorphisms.
    pub fn automorphism_count(&self) -> u64 {
        match self.kind {
            GraphKind::Ordinary => {
                let v = self.vertex_count();
                let mut mult: std::collections::BTreeMap<(usize, usize), usize> =
                    Default::default();
                for (t, h) in self.edges() {
                    let (a, b) = (self.vertex_of[t], self.vertex_of[h]);
                    *mult.entry((a.min(b), a.max(b))).or_insert(0) += 1;
                }
                let mut vertex_autos = 0u64;
                for perm in (0..v).permutations(v) {
                    let ok = mult.iter().all(|(&(a, b), &m)| {
                        let key = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                        mult.get(&key) == Some(&m)
                    });
                    if ok {
                        vertex_autos += 1;
                    }
                }
                let mut half_edge_freedom = 1u64;
                for (&(a, b), &m) in &mult {
                    let fact: u64 = (1..=m as u64).product();
                    half_edge_freedom *= fact;
                    if a == b {
                        half_edge_freedom *= 2u64.pow(m as u32);
                    }
                }
                vertex_autos * half_edge_freedom
            }
            GraphKind::Ribbon => {
                // Candidates sharing one payload value are a torsor over the
                // automorphism group; compare against the identity candidate.
                let v = self.vertex_count();
                let n = self.half_edge_count();
                let mut identity = Vec::with_capacity(v + n);
                for list in &self.vertices {
                    identity.push(list.len());
                }
                let mut new_id = vec![usize::MAX; n];
                let mut next = 0;
                for list in &self.vertices {
                    for &h in list {
                        new_id[h] = next;
                        next += 1;
                    }
                }
                let mut inverse = vec![0usize; n];
                for (old, &nid) in new_id.iter().enumerate() {
                    inverse[nid] = old;
                }
                identity.extend((0..n).map(|nid| new_id[self.pairing[inverse[nid]]]));

                let mut count = 0u64;
                self.scan_ribbon_candidates(|payload, _| {
                    if payload == identity.as_slice() {
                        count += 1;
                    }
                });
                count
            }
        }
    }
}

/// Result of contracting an edge: the contracted graph, the relabeling sign,
/// and where the head vertex's half-edges landed (for reinsertion).
pub struct Contraction {
    pub graph: OrientedGraph,
    pub sign: Sign,
    pub merged_vertex: usize,
    pub block_start: usize,
    pub block_len: usize,
}

fn rebuild_vertex_of(vertices: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut vertex_of = vec![usize::MAX; n];
    for (v, list) in vertices.iter().enumerate() {
        for &h in list {
            vertex_of[h] = v;
        }
    }
    vertex_of
}

fn perm_sign(perm: &[usize]) -> Sign {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    Sign::from_parity(inversions)
}

fn ordinary_from_pairs(v: usize, payload: &[usize]) -> OrientedGraph {
    let mut vertices: Vec<Vec<usize>> = vec![Vec::new(); v];
    let mut edges = Vec::with_capacity(payload.len() / 2);
    for (i, pair) in payload.chunks_exact(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let t = 2 * i;
        let h = 2 * i + 1;
        vertices[a].push(t);
        vertices[b].push(h);
        edges.push((t, h));
    }
    OrientedGraph::new(GraphKind::Ordinary, vertices, &edges)
        .expect("canonical payload encodes a valid graph")
}

#[allow(clippy::needless_range_loop)]
fn ribbon_from_payload(v: usize, n: usize, payload: &[usize]) -> OrientedGraph {
    let valences = &payload[..v];
    let pairing = &payload[v..];
    let mut vertices = Vec::with_capacity(v);
    let mut next = 0;
    for &val in valences {
        vertices.push((next..next + val).collect::<Vec<usize>>());
        next += val;
    }
    let mut edges = Vec::with_capacity(n / 2);
    for h in 0..n {
        if h < pairing[h] {
            edges.push((h, pairing[h]));
        }
    }
    OrientedGraph::new(GraphKind::Ribbon, vertices, &edges)
        .expect("canonical payload encodes a valid graph")
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct CanonCode {
    kind: GraphKind,
    edges: usize,
    verts: usize,
    payload: Vec<usize>,
}

/// The canonical representative of an isomorphism class of oriented graphs.
/// Ordering, equality and hashing use only the minimal encoding, so two
/// graphs are isomorphic exactly when their canonical forms compare equal.
#[derive(Clone, Debug)]
pub struct CanonicalGraph {
    code: CanonCode,
    zero: bool,
    rep: OrientedGraph,
}

impl CanonicalGraph {
    pub fn kind(&self) -> GraphKind {
        self.code.kind
    }

    pub fn edge_count(&self) -> usize {
        self.code.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.code.verts
    }

    /// Whether the class is zero in the complex (orientation-degenerate).
    pub fn is_zero_class(&self) -> bool {
        self.zero
    }

    pub fn representative(&self) -> &OrientedGraph {
        &self.rep
    }
}

impl PartialEq for CanonicalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}
impl Eq for CanonicalGraph {}
impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}
impl std::hash::Hash for CanonicalGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}

impl fmt::Display for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.code.kind {
            GraphKind::Ordinary => {
                write!(f, "o;v={};", self.code.verts)?;
                let pairs: Vec<String> = self
                    .code
                    .payload
                    .chunks_exact(2)
                    .map(|p| format!("{}>{}", p[0] + 1, p[1] + 1))
                    .collect();
                write!(f, "{}", pairs.join(","))
            }
            GraphKind::Ribbon => {
                let v = self.code.verts;
                let vals: Vec<String> =
                    self.code.payload[..v].iter().map(|x| x.to_string()).collect();
                let pair: Vec<String> = self.code.payload[v..]
                    .iter()
                    .map(|x| (x + 1).to_string())
                    .collect();
                write!(f, "r;v={};ord={};pair={}", v, vals.join(","), pair.join(","))
            }
        }
    }
}
