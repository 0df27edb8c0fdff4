//! Simple graphs: toric edge configurations, cycle-based circuits for
//! bipartite graphs, and an exact chromatic-number solver used for the γ
//! lower bound.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::primitive_signed;
use crate::configuration::{Circuit, VectorConfiguration};
use crate::error::Error;

/// An undirected simple graph on vertices `1..=n` (no loops, no
/// multi-edges), edges stored as pairs `(i, j)` with `i < j` in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        for &(i, j) in &edges {
            if i < 1 || j < 1 || i > vertices || j > vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i},{j}) leaves the vertex range 1..={vertices}"
                )));
            }
            if i >= j {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i},{j}) must be written with i < j"
                )));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(String::from("duplicate edge")));
        }
        Ok(Graph { vertices, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).is_ok()
    }

    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertices + 1];
        for &(i, j) in &self.edges {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        adj
    }

    /// A two-coloring `1..=n → {0,1}` when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.vertices + 1];
        for start in 1..=self.vertices {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color[1..].to_vec())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn connected_components(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices + 1];
        let mut components = 0;
        for start in 1..=self.vertices {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
        components
    }

    /// The toric configuration of the graph: one column `e_i + e_j ∈ Z^n`
    /// per edge, in edge order, labeled `"ij"` (with an underscore once
    /// vertex numbers reach two digits).
    pub fn configuration(&self) -> Result<VectorConfiguration, Error> {
        if self.edges.is_empty() {
            return Err(Error::EmptyInput("graph has no edges"));
        }
        let mut cols = Vec::with_capacity(self.edges.len());
        let mut labels = Vec::with_capacity(self.edges.len());
        for &(i, j) in &self.edges {
            let mut c = vec![BigInt::ZERO; self.vertices];
            c[i - 1] = BigInt::from(1);
            c[j - 1] = BigInt::from(1);
            cols.push(c);
            labels.push(if j <= 9 { format!("{i}{j}") } else { format!("{i}_{j}") });
        }
        VectorConfiguration::from_columns(self.vertices, cols)?.with_labels(labels)
    }

    /// All simple cycles, each listed once as a vertex sequence starting at
    /// its smallest vertex with the smaller neighbor second; sorted by
    /// (length, lexicographic sequence).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; self.vertices + 1];

        fn dfs(
            v: usize,
            anchor: usize,
            adj: &[BTreeSet<usize>],
            path: &mut Vec<usize>,
            on_path: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            for &w in &adj[v] {
                if w == anchor && path.len() >= 3 && path[1] < v {
                    out.push(path.clone());
                } else if w > anchor && !on_path[w] {
                    path.push(w);
                    on_path[w] = true;
                    dfs(w, anchor, adj, path, on_path, out);
                    on_path[w] = false;
                    path.pop();
                }
            }
        }

        for anchor in 1..=self.vertices {
            path.clear();
            path.push(anchor);
            on_path[anchor] = true;
            dfs(anchor, anchor, &adj, &mut path, &mut on_path, &mut out);
            on_path[anchor] = false;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

/// Circuits of the graph's toric configuration, derived from simple cycles
/// with alternating `±1` exponents. Only valid for bipartite graphs (all
/// cycles even); refuses others with [`Error::NotBipartite`]. Output order
/// matches [`crate::configuration::circuits`].
pub fn graph_circuits(g: &Graph) -> Result<Vec<Circuit>, Error> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let index: BTreeMap<(usize, usize), usize> =
        g.edges().iter().copied().enumerate().map(|(k, e)| (e, k)).collect();
    let mut circuits = Vec::new();
    for cycle in g.cycles() {
        debug_assert_eq!(cycle.len() % 2, 0, "bipartite graphs have even cycles");
        let mut v = vec![BigInt::ZERO; g.edge_count()];
        for step in 0..cycle.len() {
            let (x, y) = (cycle[step], cycle[(step + 1) % cycle.len()]);
            let key = (x.min(y), x.max(y));
            let sign = if step % 2 == 0 { 1 } else { -1 };
            v[index[&key]] = BigInt::from(sign);
        }
        circuits.push(Circuit::from_vector(primitive_signed(&v)));
    }
    circuits.sort_by(|a, b| {
        let (sa, sb) = (a.support(), b.support());
        sa.len().cmp(&sb.len()).then_with(|| sa.cmp(&sb)).then_with(|| a.vector().cmp(b.vector()))
    });
    Ok(circuits)
}

/// Result of the exact coloring solver. `certified` means `lower == upper`
/// and the search ran to completion; otherwise the pair is a proven
/// bracket and `coloring` witnesses the upper end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub lower: usize,
    pub upper: usize,
    /// Proper coloring with colors `0..upper`, indexed by vertex − 1.
    pub coloring: Vec<usize>,
    pub certified: bool,
}

impl ChromaticResult {
    /// The chromatic number, when certified.
    pub fn value(&self) -> Option<usize> {
        self.certified.then_some(self.upper)
    }
}

/// Exact chromatic number by iterated k-colorability: greedy upper bound,
/// greedy clique lower bound, then DSATUR-ordered backtracking with
/// one-new-color symmetry breaking for each k in between. A stop callback
/// turns the answer into an uncertified bracket instead of blocking.
pub fn chromatic_number_with_stop(g: &Graph, stop: &mut dyn FnMut() -> bool) -> ChromaticResult {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticResult { lower: 0, upper: 0, coloring: Vec::new(), certified: true };
    }
    let adj = g.adjacency();

    // Greedy first-fit along descending degree.
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (usize::MAX - adj[v].len(), v));
    let mut greedy = vec![usize::MAX; n + 1];
    let mut upper = 0;
    for &v in &order {
        let taken: BTreeSet<usize> =
            adj[v].iter().filter(|&&w| greedy[w] != usize::MAX).map(|&w| greedy[w]).collect();
        let c = (0..).find(|c| !taken.contains(c)).expect("some color is free");
        greedy[v] = c;
        upper = upper.max(c + 1);
    }
    let greedy_coloring: Vec<usize> = (1..=n).map(|v| greedy[v]).collect();
    debug_assert!(is_proper_coloring(g, &greedy_coloring));

    // Greedy clique from every seed vertex.
    let mut lower = 1;
    for seed in 1..=n {
        let mut clique = BTreeSet::from([seed]);
        let mut cand = adj[seed].clone();
        while let Some(&v) = cand
            .iter()
            .max_by_key(|&&v| (cand.intersection(&adj[v]).count(), usize::MAX - v))
        {
            clique.insert(v);
            cand = cand.intersection(&adj[v]).copied().collect();
        }
        lower = lower.max(clique.len());
    }

    let mut best_upper = upper;
    let mut best_coloring = greedy_coloring;
    let mut k = lower;
    while k < best_upper {
        match k_colorable(n, &adj, k, stop) {
            Search::Found(c) => {
                debug_assert!(is_proper_coloring(g, &c));
                best_upper = k;
                best_coloring = c;
                break;
            }
            Search::Exhausted => {
                lower = k + 1;
                k += 1;
            }
            Search::Stopped => {
                return ChromaticResult {
                    lower,
                    upper: best_upper,
                    coloring: best_coloring,
                    certified: false,
                };
            }
        }
    }
    ChromaticResult { lower: best_upper, upper: best_upper, coloring: best_coloring, certified: true }
}

pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    chromatic_number_with_stop(g, &mut || false)
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.vertex_count()
        && g.edges().iter().all(|&(i, j)| coloring[i - 1] != coloring[j - 1])
}

enum Search {
    Found(Vec<usize>),
    Exhausted,
    Stopped,
}

fn k_colorable(
    n: usize,
    adj: &[BTreeSet<usize>],
    k: usize,
    stop: &mut dyn FnMut() -> bool,
) -> Search {
    struct State<'a> {
        n: usize,
        adj: &'a [BTreeSet<usize>],
        k: usize,
        color: Vec<usize>,
        used: usize,
        nodes: u64,
        stop: &'a mut dyn FnMut() -> bool,
        stopped: bool,
    }
    impl State<'_> {
        fn solve(&mut self, colored: usize) -> bool {
            if self.stopped {
                return false;
            }
            self.nodes += 1;
            if self.nodes % 1024 == 1 && (self.stop)() {
                self.stopped = true;
                return false;
            }
            if colored == self.n {
                return true;
            }
            // DSATUR: most saturated, then highest degree, then smallest id.
            let mut pick = 0;
            let mut key = (0usize, 0usize, 0usize);
            for v in 1..=self.n {
                if self.color[v] != usize::MAX {
                    continue;
                }
                let sat = self
                    .adj[v]
                    .iter()
                    .filter(|&&w| self.color[w] != usize::MAX)
                    .map(|&w| self.color[w])
                    .collect::<BTreeSet<usize>>()
                    .len();
                let cand = (sat, self.adj[v].len(), self.n - v);
                if pick == 0 || cand > key {
                    pick = v;
                    key = cand;
                }
            }
            // Symmetry breaking: at most one previously unused color.
            let limit = self.k.min(self.used + 1);
            for c in 0..limit {
                if self.adj[pick].iter().all(|&w| self.color[w] != c) {
                    let prev_used = self.used;
                    self.color[pick] = c;
                    self.used = self.used.max(c + 1);
                    if self.solve(colored + 1) {
                        return true;
                    }
                    self.color[pick] = usize::MAX;
                    self.used = prev_used;
                    if self.stopped {
                        return false;
                    }
                }
            }
            false
        }
    }
    let mut st = State {
        n,
        adj,
        k,
        color: vec![usize::MAX; n + 1],
        used: 0,
        nodes: 0,
        stop,
        stopped: false,
    };
    if st.solve(0) {
        Search::Found((1..=n).map(|v| st.color[v]).collect())
    } else if st.stopped {
        Search::Stopped
    } else {
        Search::Exhausted
    }
}
