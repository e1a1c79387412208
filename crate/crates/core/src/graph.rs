//! Graph representations: directed graphs with loops, their shadows, and
//! BFS level structures.
//!
//! Vertices are dense ids `0..n`. A [`DiGraph`] keeps its non-loop arcs in a
//! sorted CSR out-adjacency and its loops as a per-vertex flag. The
//! [`ShadowGraph`] is the underlying simple undirected graph; every edge
//! carries a [`DirTag`] recording which of the two arcs it stands for.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Marker for "no value" in distance and index tables.
pub const NONE: usize = usize::MAX;

/// A finite directed graph with loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiGraph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    looped: Vec<bool>,
    loop_count: usize,
}

impl DiGraph {
    /// Builds a graph, rejecting out-of-range ids, arcs `(u, u)`, and
    /// duplicate arcs or loops.
    pub fn new<A, L>(n: usize, arcs: A, loops: L) -> Result<Self>
    where
        A: IntoIterator<Item = (usize, usize)>,
        L: IntoIterator<Item = usize>,
    {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            check_id(u, n)?;
            check_id(v, n)?;
            if u == v {
                return Err(Error::SelfArc(u));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        let mut looped = vec![false; n];
        let mut loop_count = 0;
        for v in loops {
            check_id(v, n)?;
            if looped[v] {
                return Err(Error::DuplicateLoop(v));
            }
            looped[v] = true;
            loop_count += 1;
        }
        Ok(Self::from_sorted(n, &arcs, looped, loop_count))
    }

    fn from_sorted(
        n: usize,
        arcs: &[(usize, usize)],
        looped: Vec<bool>,
        loop_count: usize,
    ) -> Self {
        let mut offsets = vec![0; n + 1];
        for &(u, _) in arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.iter().map(|&(_, v)| v).collect();
        DiGraph {
            n,
            offsets,
            targets,
            looped,
            loop_count,
        }
    }

    /// The one-vertex graph without loop, the unit of the Cartesian product.
    pub fn trivial() -> Self {
        Self::from_sorted(1, &[], vec![false], 0)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of non-loop arcs.
    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    pub fn loop_count(&self) -> usize {
        self.loop_count
    }

    /// `|A(G)|`, loops included.
    pub fn size(&self) -> usize {
        self.targets.len() + self.loop_count
    }

    pub fn is_looped(&self, v: usize) -> bool {
        self.looped[v]
    }

    pub fn has_loops(&self) -> bool {
        self.loop_count > 0
    }

    /// Smallest vertex id without a loop.
    pub fn first_unlooped(&self) -> Option<usize> {
        self.looped.iter().position(|&l| !l)
    }

    /// Out-neighbors of `v` (loops excluded), sorted ascending.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// `true` iff `u -> v` is an arc; `has_arc(v, v)` asks for a loop.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        if u == v {
            return self.looped[u];
        }
        self.out_neighbors(u).binary_search(&v).is_ok()
    }

    /// Non-loop arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v)))
    }

    /// Looped vertices in ascending order.
    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.looped
            .iter()
            .enumerate()
            .filter(|(_, &l)| l)
            .map(|(v, _)| v)
    }

    /// `N(G)`: the same graph with every loop removed.
    pub fn strip_loops(&self) -> DiGraph {
        DiGraph {
            looped: vec![false; self.n],
            loop_count: 0,
            ..self.clone()
        }
    }

    /// The shadow `S(G)`.
    pub fn shadow(&self) -> ShadowGraph {
        let mut pairs: Vec<(usize, usize, DirTag)> = Vec::with_capacity(self.targets.len());
        for (u, v) in self.arcs() {
            if u < v {
                let tag = if self.has_arc(v, u) {
                    DirTag::Both
                } else {
                    DirTag::Forward
                };
                pairs.push((u, v, tag));
            } else if !self.has_arc(v, u) {
                pairs.push((v, u, DirTag::Backward));
            }
        }
        pairs.sort_unstable_by_key(|&(a, b, _)| (a, b));
        ShadowGraph::from_sorted_edges(self.n, pairs)
    }

    /// Applies the relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<DiGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            check_id(p, self.n)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(format!(
                    "{p} appears twice in permutation"
                )));
            }
        }
        DiGraph::new(
            self.n,
            self.arcs().map(|(u, v)| (perm[u], perm[v])),
            self.loops().map(|v| perm[v]),
        )
    }

    /// The subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<DiGraph> {
        let mut local = vec![NONE; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            check_id(v, self.n)?;
            local[v] = i;
        }
        let arcs = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.out_neighbors(v)
                .iter()
                .filter(move |&&w| local[w] != NONE)
                .map(move |&w| (i, local[w]))
        });
        let loops = vertices
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.looped[v])
            .map(|(i, _)| i);
        DiGraph::new(
            vertices.len(),
            arcs.collect::<Vec<_>>(),
            loops.collect::<Vec<_>>(),
        )
    }
}

fn check_id(id: usize, n: usize) -> Result<()> {
    if id < n {
        Ok(())
    } else {
        Err(Error::IdOutOfRange { id, n })
    }
}

/// Canonical text form: `n`, then sorted `a` lines, then sorted `l` lines.
impl fmt::Display for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in self.arcs() {
            writeln!(f, "a {u} {v}")?;
        }
        for v in self.loops() {
            writeln!(f, "l {v}")?;
        }
        Ok(())
    }
}

impl FromStr for DiGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Parses the line-oriented graph format (`# comment`, `n N`, `a u v`, `l v`).
pub fn parse_graph(text: &str) -> Result<DiGraph> {
    let (g, coords) = parse_document(text, false)?;
    debug_assert!(coords.is_empty());
    Ok(g)
}

/// A `c` line: a vertex and its coordinates.
pub type CoordRow = (usize, Vec<usize>);

/// Parses a graph file that may carry a coordinate table (`c v c_1 .. c_k`).
/// Returns the graph together with the `(vertex, coordinates)` rows.
pub fn parse_graph_with_coords(text: &str) -> Result<(DiGraph, Vec<CoordRow>)> {
    parse_document(text, true)
}

fn parse_document(text: &str, allow_coords: bool) -> Result<(DiGraph, Vec<CoordRow>)> {
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    let mut loops = Vec::new();
    let mut coords = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let key = tokens.next().unwrap_or_default();
        let nums = tokens
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Syntax {
                    line,
                    msg: format!("expected a non-negative integer, found `{t}`"),
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        let arity = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(Error::Syntax {
                    line,
                    msg: format!("`{key}` takes {want} argument(s), found {}", nums.len()),
                })
            }
        };
        if key != "n" && n.is_none() {
            return Err(Error::Syntax {
                line,
                msg: "`n` must precede arcs, loops, and coordinates".into(),
            });
        }
        match key {
            "n" => {
                arity(1)?;
                if n.is_some() {
                    return Err(Error::Syntax {
                        line,
                        msg: "vertex count given twice".into(),
                    });
                }
                n = Some(nums[0]);
            }
            "a" => {
                arity(2)?;
                arcs.push((nums[0], nums[1]));
            }
            "l" => {
                arity(1)?;
                loops.push(nums[0]);
            }
            "c" if allow_coords => {
                if nums.is_empty() {
                    return Err(Error::Syntax {
                        line,
                        msg: "`c` needs a vertex id".into(),
                    });
                }
                coords.push((nums[0], nums[1..].to_vec()));
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Syntax {
        line: last_line + 1,
        msg: "missing vertex count `n`".into(),
    })?;
    let g = DiGraph::new(n, arcs, loops)?;
    Ok((g, coords))
}

/// Which arcs an undirected shadow edge `{a, b}` (with `a < b`) stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DirTag {
    /// Only `a -> b`.
    Forward,
    /// Only `b -> a`.
    Backward,
    /// Both arcs.
    Both,
}

impl DirTag {
    /// Viewed from `from` towards `to`: `(from -> to exists, to -> from exists)`.
    pub fn oriented(self, from: usize, to: usize) -> (bool, bool) {
        let (lo_hi, hi_lo) = match self {
            DirTag::Forward => (true, false),
            DirTag::Backward => (false, true),
            DirTag::Both => (true, true),
        };
        if from < to {
            (lo_hi, hi_lo)
        } else {
            (hi_lo, lo_hi)
        }
    }

    /// The tag of `{from, to}` given the arcs seen from `from`.
    pub fn from_oriented(from: usize, to: usize, out: bool, back: bool) -> Option<DirTag> {
        let (lo_hi, hi_lo) = if from < to { (out, back) } else { (back, out) };
        match (lo_hi, hi_lo) {
            (true, false) => Some(DirTag::Forward),
            (false, true) => Some(DirTag::Backward),
            (true, true) => Some(DirTag::Both),
            (false, false) => None,
        }
    }
}

/// Edge of a [`ShadowGraph`]; `a < b` always.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub tag: DirTag,
}

/// Entry of an adjacency row: neighbor and the id of the connecting edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub to: usize,
    pub edge: usize,
}

/// Simple undirected graph with direction-tagged edges.
///
/// Edge ids follow the lexicographic order of `(a, b)`; adjacency rows are
/// sorted by neighbor id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    links: Vec<Link>,
}

impl ShadowGraph {
    /// Builds a shadow from tagged pairs `{u, v}`; the tag is read relative
    /// to `(min, max)`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, DirTag)>,
    {
        let mut pairs = Vec::new();
        for (u, v, tag) in edges {
            check_id(u, n)?;
            check_id(v, n)?;
            if u == v {
                return Err(Error::SelfArc(u));
            }
            pairs.push((u.min(v), u.max(v), tag));
        }
        pairs.sort_unstable_by_key(|&(a, b, _)| (a, b));
        if let Some(w) = pairs
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(n, pairs))
    }

    /// Undirected graph: every edge tagged [`DirTag::Both`].
    pub fn undirected<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges.into_iter().map(|(u, v)| (u, v, DirTag::Both)))
    }

    fn from_sorted_edges(n: usize, pairs: Vec<(usize, usize, DirTag)>) -> Self {
        let edges: Vec<Edge> = pairs
            .into_iter()
            .map(|(a, b, tag)| Edge { a, b, tag })
            .collect();
        let mut offsets = vec![0; n + 1];
        for e in &edges {
            offsets[e.a + 1] += 1;
            offsets[e.b + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut links = vec![Link { to: 0, edge: 0 }; 2 * edges.len()];
        // Smaller neighbors first, then larger ones; both passes run in
        // sorted edge order, so every row comes out sorted.
        for (id, e) in edges.iter().enumerate() {
            links[fill[e.b]] = Link { to: e.a, edge: id };
            fill[e.b] += 1;
        }
        for (id, e) in edges.iter().enumerate() {
            links[fill[e.a]] = Link { to: e.b, edge: id };
            fill[e.a] += 1;
        }
        ShadowGraph {
            n,
            edges,
            offsets,
            links,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Adjacency row of `v`, sorted by neighbor.
    pub fn links(&self, v: usize) -> &[Link] {
        &self.links[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.links(v).iter().map(|l| l.to)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let row = self.links(u);
        row.binary_search_by_key(&v, |l| l.to)
            .ok()
            .map(|i| row[i].edge)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// `(from -> to exists, to -> from exists)` for edge id `e` joining them.
    pub fn oriented(&self, e: usize, from: usize, to: usize) -> (bool, bool) {
        self.edges[e].tag.oriented(from, to)
    }

    /// Minimum degree `δ`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// BFS distances from `src`; [`NONE`] marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![NONE; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for l in self.links(v) {
                if dist[l.to] == NONE {
                    dist[l.to] = dist[v] + 1;
                    queue.push_back(l.to);
                }
            }
        }
        dist
    }

    /// Shortest-path distance, `None` if `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.distances_from(u)[v];
        (d != NONE).then_some(d)
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.distances_from(0).iter().all(|&d| d != NONE)
    }

    /// Recovers the directed graph from the tags plus a loop set.
    pub fn to_digraph<L>(&self, loops: L) -> Result<DiGraph>
    where
        L: IntoIterator<Item = usize>,
    {
        let mut arcs = Vec::with_capacity(self.edges.len() * 2);
        for e in &self.edges {
            let (fwd, bwd) = e.tag.oriented(e.a, e.b);
            if fwd {
                arcs.push((e.a, e.b));
            }
            if bwd {
                arcs.push((e.b, e.a));
            }
        }
        DiGraph::new(self.n, arcs, loops)
    }
}

/// BFS level structure rooted at one vertex, with down- and cross-neighbor
/// lists. Up-neighbors are not recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsOrder {
    root: usize,
    level: Vec<usize>,
    number: Vec<usize>,
    order: Vec<usize>,
    down_offsets: Vec<usize>,
    down: Vec<Link>,
    cross_offsets: Vec<usize>,
    cross: Vec<Link>,
}

impl BfsOrder {
    pub fn new(shadow: &ShadowGraph, root: usize) -> Result<Self> {
        let n = shadow.vertex_count();
        check_id(root, n)?;
        let mut level = vec![NONE; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        level[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for l in shadow.links(v) {
                if level[l.to] == NONE {
                    level[l.to] = level[v] + 1;
                    queue.push_back(l.to);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Disconnected);
        }
        let mut number = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            number[v] = i;
        }
        let mut down_offsets = Vec::with_capacity(n + 1);
        let mut cross_offsets = Vec::with_capacity(n + 1);
        let mut down = Vec::new();
        let mut cross = Vec::new();
        down_offsets.push(0);
        cross_offsets.push(0);
        for v in 0..n {
            for &l in shadow.links(v) {
                if level[l.to] + 1 == level[v] {
                    down.push(l);
                } else if level[l.to] == level[v] {
                    cross.push(l);
                }
            }
            down_offsets.push(down.len());
            cross_offsets.push(cross.len());
        }
        Ok(BfsOrder {
            root,
            level,
            number,
            order,
            down_offsets,
            down,
            cross_offsets,
            cross,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    /// BFS number of `v`; the root has number 0.
    pub fn number(&self, v: usize) -> usize {
        self.number[v]
    }

    /// Vertices by increasing BFS number.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn down(&self, v: usize) -> &[Link] {
        &self.down[self.down_offsets[v]..self.down_offsets[v + 1]]
    }

    pub fn cross(&self, v: usize) -> &[Link] {
        &self.cross[self.cross_offsets[v]..self.cross_offsets[v + 1]]
    }

    /// Number of the deepest level.
    pub fn depth(&self) -> usize {
        self.order.last().map_or(0, |&v| self.level[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> ShadowGraph {
        ShadowGraph::undirected(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn parses_single_arc_and_single_loop() {
        let g = parse_graph("n 2\na 0 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g.loop_count(), 0);

        let g = parse_graph("n 1\nl 0").unwrap();
        assert_eq!(g.arc_count(), 0);
        assert_eq!(g.loops().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_graph("n 2\na 0 2"),
            Err(Error::IdOutOfRange { id: 2, n: 2 })
        );
        assert_eq!(
            parse_graph("n 2\na 0 1\na 0 1"),
            Err(Error::DuplicateArc(0, 1))
        );
        assert_eq!(parse_graph("n 2\nl 1\nl 1"), Err(Error::DuplicateLoop(1)));
        assert_eq!(parse_graph("n 2\na 1 1"), Err(Error::SelfArc(1)));
        assert!(matches!(
            parse_graph("a 0 1\nn 2"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("# x\nn 2\na 0 x"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("n 2\nq 1"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 2\nc 0 1"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("# nothing"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn canonical_text_is_sorted() {
        let g = parse_graph("# demo\nn 3\nl 2\na 2 0\nl 0\na 0 1\n").unwrap();
        assert_eq!(g.to_string(), "n 3\na 0 1\na 2 0\nl 0\nl 2\n");
        assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn coordinate_rows_are_returned() {
        let (g, rows) = parse_graph_with_coords("n 2\na 0 1\nc 0 0\nc 1 1\n").unwrap();
        assert_eq!(g.arc_count(), 1);
        assert_eq!(rows, vec![(0, vec![0]), (1, vec![1])]);
    }

    #[test]
    fn shadow_tags() {
        let s = parse_graph("n 2\na 0 1").unwrap().shadow();
        assert_eq!(
            s.edges(),
            &[Edge {
                a: 0,
                b: 1,
                tag: DirTag::Forward
            }]
        );

        let s = parse_graph("n 2\na 0 1\na 1 0").unwrap().shadow();
        assert_eq!(
            s.edges(),
            &[Edge {
                a: 0,
                b: 1,
                tag: DirTag::Both
            }]
        );

        let s = parse_graph("n 2\na 1 0\nl 1").unwrap().shadow();
        assert_eq!(
            s.edges(),
            &[Edge {
                a: 0,
                b: 1,
                tag: DirTag::Backward
            }]
        );

        let s = parse_graph("n 2\na 0 1\nl 1").unwrap().shadow();
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.edge(0).tag, DirTag::Forward);
    }

    #[test]
    fn strip_loops_cases() {
        let g = parse_graph("n 2\na 0 1\nl 1").unwrap();
        let n = g.strip_loops();
        assert_eq!(n.loop_count(), 0);
        assert_eq!(n.arcs().collect::<Vec<_>>(), vec![(0, 1)]);

        let g = parse_graph("n 2\na 0 1").unwrap();
        assert_eq!(g.strip_loops(), g);

        let g = parse_graph("n 2\na 0 1\na 1 0\nl 0\nl 1").unwrap();
        assert_eq!(g.strip_loops(), parse_graph("n 2\na 0 1\na 1 0").unwrap());
    }

    #[test]
    fn oriented_tags_agree_with_arcs() {
        let g = parse_graph("n 3\na 2 0\na 1 2\na 2 1").unwrap();
        let s = g.shadow();
        for e in s.edges() {
            for (x, y) in [(e.a, e.b), (e.b, e.a)] {
                assert_eq!(e.tag.oriented(x, y), (g.has_arc(x, y), g.has_arc(y, x)));
                assert_eq!(
                    DirTag::from_oriented(x, y, g.has_arc(x, y), g.has_arc(y, x)),
                    Some(e.tag)
                );
            }
        }
    }

    #[test]
    fn bfs_on_path() {
        let b = BfsOrder::new(&path3(), 0).unwrap();
        assert_eq!(
            (0..3).map(|v| b.level(v)).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(b.down(1).iter().map(|l| l.to).collect::<Vec<_>>(), vec![0]);
        assert!(b.cross(1).is_empty());
        assert_eq!(b.depth(), 2);
    }

    #[test]
    fn bfs_on_four_cycle() {
        let s = ShadowGraph::undirected(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let b = BfsOrder::new(&s, 0).unwrap();
        assert_eq!(b.level(3), 2);
        let mut down: Vec<usize> = b.down(3).iter().map(|l| l.to).collect();
        down.sort();
        assert_eq!(down, vec![1, 2]);
    }

    #[test]
    fn bfs_triangle_cross_edge() {
        let s = ShadowGraph::undirected(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = BfsOrder::new(&s, 0).unwrap();
        assert_eq!(b.cross(1).iter().map(|l| l.to).collect::<Vec<_>>(), vec![2]);
        assert_eq!(b.cross(2).iter().map(|l| l.to).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn bfs_rejects_disconnected() {
        let s = ShadowGraph::undirected(3, [(0, 1)]).unwrap();
        assert_eq!(BfsOrder::new(&s, 0), Err(Error::Disconnected));
    }

    #[test]
    fn connectivity_degree_distance() {
        let k2 = ShadowGraph::undirected(2, [(0, 1)]).unwrap();
        assert!(k2.is_connected());
        assert_eq!(k2.min_degree(), 1);
        assert_eq!(k2.distance(0, 1), Some(1));

        let isolated = ShadowGraph::undirected(2, []).unwrap();
        assert!(!isolated.is_connected());
        assert_eq!(isolated.distance(0, 1), None);

        let c4 = ShadowGraph::undirected(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.min_degree(), 2);
        assert_eq!(c4.distance(0, 2), Some(2));
    }

    #[test]
    fn adjacency_rows_sorted() {
        let s = ShadowGraph::undirected(5, [(4, 2), (0, 2), (2, 3), (1, 2)]).unwrap();
        assert_eq!(s.neighbors(2).collect::<Vec<_>>(), vec![0, 1, 3, 4]);
        for v in 0..5 {
            for l in s.links(v) {
                assert_eq!(s.edge_id(v, l.to), Some(l.edge));
            }
        }
    }

    #[test]
    fn induced_and_relabel() {
        let g = parse_graph("n 3\na 0 1\na 1 2\nl 2").unwrap();
        let h = g.induced(&[2, 1]).unwrap();
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![(1, 0)]);
        assert_eq!(h.loops().collect::<Vec<_>>(), vec![0]);

        let r = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(r.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 0)]);
        assert_eq!(r.loops().collect::<Vec<_>>(), vec![1]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
    }
}
