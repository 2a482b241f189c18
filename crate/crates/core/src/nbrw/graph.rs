use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default cap on the number of group elements enumerated by [`cayley_digraph`].
pub const CAYLEY_CAP: usize = 2_000_000;

/// Known symmetry of a digraph: one representative per automorphism orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryHint {
    pub orbit_reps: Vec<usize>,
}

impl SymmetryHint {
    pub fn transitive() -> Self {
        Self { orbit_reps: vec![0] }
    }

    pub fn vertex_transitive(&self) -> bool {
        self.orbit_reps.len() == 1
    }
}

/// A finite digraph in which every vertex has exactly `d` out-neighbours,
/// counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    d: usize,
    out: Vec<Vec<usize>>,
    pub symmetry_hint: Option<SymmetryHint>,
}

impl Digraph {
    pub fn new(out: Vec<Vec<usize>>) -> Result<Self> {
        let n = out.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let d = out[0].len();
        for (v, nb) in out.iter().enumerate() {
            if nb.len() != d {
                return Err(Error::RaggedDegree { vertex: v, expected: d, got: nb.len() });
            }
            if let Some(&w) = nb.iter().find(|&&w| w >= n) {
                return Err(Error::VertexOutOfRange { id: w, n, line: 0 });
            }
        }
        if d == 0 {
            return Err(Error::InvalidArgument("out-degree must be at least 1".into()));
        }
        Ok(Self { n, d, out, symmetry_hint: None })
    }

    pub fn with_symmetry(mut self, hint: SymmetryHint) -> Self {
        self.symmetry_hint = Some(hint);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.symmetry_hint.as_ref().is_some_and(SymmetryHint::vertex_transitive)
    }

    /// Reverse adjacency, with multiplicity.
    pub fn in_neighbors(&self) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); self.n];
        for (v, nb) in self.out.iter().enumerate() {
            for &w in nb {
                inn[w].push(v);
            }
        }
        inn
    }

    /// Every vertex also has in-degree `d`, so the uniform measure is stationary.
    pub fn is_in_regular(&self) -> bool {
        let mut indeg = vec![0usize; self.n];
        for nb in &self.out {
            for &w in nb {
                indeg[w] += 1;
            }
        }
        indeg.iter().all(|&c| c == self.d)
    }

    /// Complete digraph with a loop at every vertex: `d = n`.
    pub fn complete_with_loops(n: usize) -> Result<Self> {
        let out = (0..n).map(|_| (0..n).collect()).collect();
        Ok(Self::new(out)?.with_symmetry(SymmetryHint::transitive()))
    }

    /// Directed cycle `i -> i + 1 mod n`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        let out = (0..n).map(|i| vec![(i + 1) % n.max(1)]).collect();
        Ok(Self::new(out)?.with_symmetry(SymmetryHint::transitive()))
    }

    /// Parse the edge-list format: a header `n d` (or just `n`), then one
    /// `src dst` line per edge. Blank lines and `#` comments are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::EmptyGraph)?;
        let head = parse_fields(hline, header)?;
        let (n, declared_d) = match head.as_slice() {
            [n] => (*n, None),
            [n, d] => (*n, Some(*d)),
            _ => return Err(Error::Parse { line: hline, msg: "header must be `n d`".into() }),
        };
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut out = vec![Vec::new(); n];
        let mut edges = 0usize;
        for (line, l) in lines {
            let f = parse_fields(line, l)?;
            let [src, dst] = f.as_slice() else {
                return Err(Error::Parse { line, msg: "expected `src dst`".into() });
            };
            for &id in [src, dst] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n, line });
                }
            }
            out[*src].push(*dst);
            edges += 1;
        }
        if edges == 0 {
            return Err(Error::EmptyGraph);
        }
        let d = declared_d.unwrap_or(out[0].len());
        if let Some((v, nb)) = out.iter().enumerate().find(|(_, nb)| nb.len() != d) {
            return Err(Error::RaggedDegree { vertex: v, expected: d, got: nb.len() });
        }
        Self::new(out)
    }

    /// Inverse of [`Digraph::from_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.d);
        for (v, nb) in self.out.iter().enumerate() {
            for w in nb {
                let _ = writeln!(s, "{v} {w}");
            }
        }
        s
    }
}

fn parse_fields(line: usize, l: &str) -> Result<Vec<usize>> {
    l.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("not a vertex id: {t:?}") })
        })
        .collect()
}

/// Undirected multigraph given by its edge list. A loop `(u, u)` adds 2 to
/// the degree of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Set by constructors that know the automorphism group acts
    /// transitively on oriented edges.
    pub arc_transitive: bool,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for (line, &(u, v)) in edges.iter().enumerate() {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n, line: line + 1 });
                }
            }
        }
        Ok(Self { n, edges, arc_transitive: false })
    }

    /// Same format as [`Digraph::from_edge_list`], one line per undirected
    /// edge; a header degree, when present, is checked against every vertex.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::EmptyGraph)?;
        let head = parse_fields(hline, header)?;
        let (n, declared_k) = match head.as_slice() {
            [n] => (*n, None),
            [n, k] => (*n, Some(*k)),
            _ => return Err(Error::Parse { line: hline, msg: "header must be `n k`".into() }),
        };
        let mut edges = Vec::new();
        for (line, l) in lines {
            let f = parse_fields(line, l)?;
            let [u, v] = f.as_slice() else {
                return Err(Error::Parse { line, msg: "expected `u v`".into() });
            };
            for &id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n, line });
                }
            }
            edges.push((*u, *v));
        }
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let g = Self::new(n, edges)?;
        if let Some(k) = declared_k {
            let adj = g.neighbors();
            if let Some((v, nb)) = adj.iter().enumerate().find(|(_, nb)| nb.len() != k) {
                return Err(Error::RaggedDegree { vertex: v, expected: k, got: nb.len() });
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Ok(Self { arc_transitive: true, ..Self::new(n, edges)? })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges = (0..n).map(|i| (i, (i + 1) % n.max(1))).collect();
        Ok(Self { arc_transitive: true, ..Self::new(n, edges)? })
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self { n: 10, edges, arc_transitive: true }
    }

    /// Neighbour lists with multiplicity; a loop contributes its vertex twice.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Common degree of every vertex.
    pub fn regular_degree(&self) -> Result<usize> {
        let adj = self.neighbors();
        let k = adj[0].len();
        match adj.iter().enumerate().find(|(_, nb)| nb.len() != k) {
            Some((v, nb)) => Err(Error::RaggedDegree { vertex: v, expected: k, got: nb.len() }),
            None => Ok(k),
        }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    fn component_count(&self) -> usize {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// A proper 2-colouring when the graph is connected and bipartite.
    fn bipartition(&self) -> Option<Vec<bool>> {
        let adj = self.neighbors();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        colour[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u]?;
            for &v in &adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    _ => {}
                }
            }
        }
        colour.into_iter().collect()
    }

    pub fn is_bipartite(&self) -> bool {
        self.component_count() == 1 && self.bipartition().is_some()
    }

    /// Length of a shortest cycle; loops have length 1 and parallel edges 2.
    pub fn girth(&self) -> Option<usize> {
        if self.edges.iter().any(|&(u, v)| u == v) {
            return Some(1);
        }
        if !self.is_simple() {
            return Some(2);
        }
        let adj = self.neighbors();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Random simple connected non-bipartite `k`-regular graph from the
    /// permutation model: `k / 2` uniform permutations, plus a uniform perfect
    /// matching when `k` is odd, resampled until the result qualifies.
    pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Self> {
        if k < 3 || k >= n {
            return Err(Error::InvalidArgument(format!("need 3 <= k < n, got n={n}, k={k}")));
        }
        if (n * k) % 2 == 1 {
            return Err(Error::InvalidArgument(format!("n*k must be even, got n={n}, k={k}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<usize> = (0..n).collect();
        for _ in 0..10_000 {
            let mut edges = Vec::with_capacity(n * k / 2);
            for _ in 0..k / 2 {
                ids.shuffle(&mut rng);
                edges.extend((0..n).map(|i| (ids[i], ids[(i + 1) % n])));
            }
            if k % 2 == 1 {
                ids.shuffle(&mut rng);
                edges.extend(ids.chunks(2).map(|c| (c[0], c[1])));
            }
            let g = Self::new(n, edges)?;
            if g.is_simple() && g.component_count() == 1 && g.bipartition().is_none() {
                return Ok(g);
            }
        }
        Err(Error::LimitExceeded(format!("no simple {k}-regular graph on {n} vertices after 10000 draws")))
    }
}

/// Directed-edge chain of a `k`-regular multigraph: vertices are the `n k`
/// darts, and `u -> v` continues to every `v -> w` except its own reversal.
/// For `k = 2` the result has `d = 1` and the walk is deterministic.
pub fn nonbacktracking_lift(g: &UndirectedGraph) -> Result<Digraph> {
    let k = g.regular_degree()?;
    if k < 2 {
        return Err(Error::InvalidArgument(format!("lift needs degree >= 2, got {k}")));
    }
    // dart 2i runs a -> b and dart 2i + 1 runs b -> a for edge i = (a, b)
    let mut leaving: Vec<Vec<usize>> = vec![Vec::with_capacity(k); g.n];
    let mut head = Vec::with_capacity(2 * g.edges.len());
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        leaving[a].push(2 * i);
        leaving[b].push(2 * i + 1);
        head.push(b);
        head.push(a);
    }
    let out = (0..head.len())
        .map(|e| leaving[head[e]].iter().copied().filter(|&f| f != e ^ 1).collect())
        .collect();
    let lift = Digraph::new(out)?;
    Ok(if g.arc_transitive { lift.with_symmetry(SymmetryHint::transitive()) } else { lift })
}

/// A permutation of `0..m` as its image vector.
pub type Perm = Vec<u32>;

/// Right Cayley digraph of the group generated by `generators`: vertex 0 is
/// the identity and `g -> g s` for each generator `s`, with multiplicity.
pub fn cayley_digraph(generators: &[Perm], cap: usize) -> Result<Digraph> {
    let m = generators.first().map(Vec::len).ok_or_else(|| {
        Error::InvalidArgument("at least one generator is required".into())
    })?;
    for s in generators {
        let mut seen = vec![false; m];
        if s.len() != m || !s.iter().all(|&i| (i as usize) < m && !std::mem::replace(&mut seen[i as usize], true)) {
            return Err(Error::InvalidArgument(format!("not a permutation of 0..{m}: {s:?}")));
        }
    }
    let identity: Perm = (0..m as u32).collect();
    let mut index: HashMap<Perm, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < elements.len() {
        let g = elements[next].clone();
        let mut row = Vec::with_capacity(generators.len());
        for s in generators {
            // (g s)(i) = g(s(i))
            let h: Perm = s.iter().map(|&i| g[i as usize]).collect();
            let id = match index.get(&h) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::LimitExceeded(format!("group closure exceeds {cap} elements")));
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                    elements.len() - 1
                }
            };
            row.push(id);
        }
        out.push(row);
        next += 1;
    }
    Ok(Digraph::new(out)?.with_symmetry(SymmetryHint::transitive()))
}

/// Generators for the named Cayley families accepted by the command line:
/// `cyclic:N`, `sym:N`, `sl2:P`, and `perm:a,b,..;c,d,..`.
pub fn cayley_generators(spec: &str) -> Result<Vec<Perm>> {
    let bad = |msg: &str| Error::InvalidArgument(format!("cayley spec {spec:?}: {msg}"));
    let (kind, arg) = spec.split_once(':').ok_or_else(|| bad("expected KIND:ARG"))?;
    let num = || arg.trim().parse::<u32>().map_err(|_| bad("expected a positive integer"));
    match kind {
        "cyclic" => {
            let n = num()?;
            if n == 0 {
                return Err(bad("order must be positive"));
            }
            Ok(vec![(0..n).map(|i| (i + 1) % n).collect()])
        }
        "sym" => {
            let n = num()?;
            if n < 2 {
                return Err(bad("degree must be at least 2"));
            }
            let mut swap: Perm = (0..n).collect();
            swap.swap(0, 1);
            Ok(vec![swap, (0..n).map(|i| (i + 1) % n).collect()])
        }
        "sl2" => {
            let p = num()?;
            if p < 2 || !(2..p).take_while(|i| i * i <= p).all(|i| p % i != 0) {
                return Err(bad("modulus must be prime"));
            }
            Ok(vec![sl2_action(p, [1, 1, 0, 1]), sl2_action(p, [1, 0, 1, 1])])
        }
        "perm" => arg
            .split(';')
            .map(|g| {
                g.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| bad("bad permutation entry")))
                    .collect()
            })
            .collect(),
        _ => Err(bad("unknown family")),
    }
}

/// `[[a, b], [c, d]]` acting on the nonzero vectors of `F_p^2`, where the
/// vector `(x, y)` has index `x p + y - 1`.
fn sl2_action(p: u32, [a, b, c, d]: [u32; 4]) -> Perm {
    (1..p * p)
        .map(|idx| {
            let (x, y) = (idx / p, idx % p);
            let (u, v) = ((a * x + b * y) % p, (c * x + d * y) % p);
            u * p + v - 1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_from_text() {
        let g = Digraph::from_edge_list("3 1\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((g.n(), g.d()), (3, 1));
        assert_eq!(Digraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn multi_edges_and_inferred_degree() {
        let g = Digraph::from_edge_list("2\n0 1\n0 1\n1 0\n1 1\n").unwrap();
        assert_eq!(g.d(), 2);
        assert_eq!(g.out_neighbors(0), &[1, 1]);
    }

    #[test]
    fn edge_list_rejections() {
        assert_eq!(
            Digraph::from_edge_list("3 1\n0 1\n1 2\n1 0\n"),
            Err(Error::RaggedDegree { vertex: 1, expected: 1, got: 2 })
        );
        assert_eq!(
            Digraph::from_edge_list("2 1\n0 1\n1 5\n"),
            Err(Error::VertexOutOfRange { id: 5, n: 2, line: 3 })
        );
        assert_eq!(Digraph::from_edge_list(""), Err(Error::EmptyGraph));
        assert_eq!(Digraph::from_edge_list("# nothing\n\n"), Err(Error::EmptyGraph));
        assert!(matches!(Digraph::from_edge_list("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn lifts() {
        let k4 = nonbacktracking_lift(&UndirectedGraph::complete(4).unwrap()).unwrap();
        assert_eq!((k4.n(), k4.d()), (12, 2));
        let pet = nonbacktracking_lift(&UndirectedGraph::petersen()).unwrap();
        assert_eq!((pet.n(), pet.d()), (30, 2));
        assert!(pet.is_vertex_transitive());
        assert!(pet.is_in_regular());
        let c5 = nonbacktracking_lift(&UndirectedGraph::cycle(5).unwrap()).unwrap();
        assert_eq!((c5.n(), c5.d()), (10, 1));
        // two disjoint directed 5-cycles
        let mut v = 0;
        for _ in 0..5 {
            v = c5.out_neighbors(v)[0];
            assert_eq!(v % 2, 0);
        }
        assert_eq!(v, 0);
        let ragged = UndirectedGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(nonbacktracking_lift(&ragged).is_err());
    }

    #[test]
    fn lift_of_a_loop_keeps_degree() {
        // one vertex with a loop and a parallel pair to a second vertex
        let g = UndirectedGraph::new(2, vec![(0, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(g.regular_degree().unwrap(), 3);
        let lift = nonbacktracking_lift(&g).unwrap();
        assert_eq!((lift.n(), lift.d()), (6, 2));
    }

    #[test]
    fn undirected_from_text() {
        let g = UndirectedGraph::from_edge_list("4 3\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(g.regular_degree().unwrap(), 3);
        assert!(matches!(
            UndirectedGraph::from_edge_list("3 2\n0 1\n1 2\n"),
            Err(Error::RaggedDegree { vertex: 0, .. })
        ));
    }

    #[test]
    fn girths() {
        assert_eq!(UndirectedGraph::petersen().girth(), Some(5));
        assert_eq!(UndirectedGraph::complete(4).unwrap().girth(), Some(3));
        assert_eq!(UndirectedGraph::cycle(7).unwrap().girth(), Some(7));
        assert_eq!(UndirectedGraph::new(2, vec![(0, 1), (0, 1)]).unwrap().girth(), Some(2));
    }

    #[test]
    fn random_regular_is_simple_and_reproducible() {
        let g = UndirectedGraph::random_regular(200, 3, 11).unwrap();
        assert!(g.is_simple());
        assert_eq!(g.regular_degree().unwrap(), 3);
        assert!(g.is_connected());
        assert!(!g.is_bipartite());
        assert_eq!(g, UndirectedGraph::random_regular(200, 3, 11).unwrap());
        assert_ne!(g, UndirectedGraph::random_regular(200, 3, 12).unwrap());
        assert!(UndirectedGraph::random_regular(7, 3, 0).is_err());
    }

    #[test]
    fn cayley_examples() {
        let z5 = cayley_digraph(&cayley_generators("cyclic:5").unwrap(), CAYLEY_CAP).unwrap();
        assert_eq!(z5, Digraph::directed_cycle(5).unwrap());
        let s3 = cayley_digraph(&cayley_generators("sym:3").unwrap(), CAYLEY_CAP).unwrap();
        assert_eq!((s3.n(), s3.d()), (6, 2));
        let sl = cayley_digraph(&cayley_generators("sl2:3").unwrap(), CAYLEY_CAP).unwrap();
        assert_eq!(sl.n(), 24);
        let explicit = cayley_generators("perm:1,0,2;1,2,0").unwrap();
        assert_eq!(cayley_digraph(&explicit, CAYLEY_CAP).unwrap().n(), 6);
        assert!(matches!(
            cayley_digraph(&cayley_generators("sym:5").unwrap(), 100),
            Err(Error::LimitExceeded(_))
        ));
        assert!(cayley_generators("sl2:4").is_err());
        assert!(cayley_digraph(&[vec![0, 0]], CAYLEY_CAP).is_err());
    }
}
