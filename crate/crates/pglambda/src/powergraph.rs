//! The power graph of a finite group, its punctured complement, and the
//! plain undirected graphs both are built on.
//!
//! Two distinct elements are adjacent in the power graph exactly when one is
//! a positive power of the other, equivalently when one lies in the cyclic
//! subgroup generated by the other. The identity is therefore adjacent to
//! everything, which keeps the whole graph within diameter two. The
//! *punctured complement* drops the identity vertex and flips all edges; it
//! is the graph whose Hamiltonian paths certify optimal labellings.

use std::fmt::Write as _;

use thiserror::Error;

use crate::groups::FiniteGroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("adjacency is only defined for distinct vertices (got {0} twice)")]
    SelfQuery(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    BadVertex(usize, usize),
}

/// An undirected simple graph over vertices `0..n`, adjacency as a packed
/// bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> SimpleGraph {
        let words_per_row = n.div_ceil(64);
        SimpleGraph {
            n,
            words_per_row,
            bits: vec![0u64; words_per_row * n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words_per_row + u / 64] |= 1 << (u % 64);
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adjacent(u, v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_common_neighbor(&self, u: usize, v: usize) -> bool {
        self.row(u).iter().zip(self.row(v)).any(|(a, b)| a & b != 0)
    }

    /// True when `u` and `v` are non-adjacent but share a neighbor, i.e. are
    /// at distance exactly two.
    pub fn at_distance_two(&self, u: usize, v: usize) -> bool {
        u != v && !self.adjacent(u, v) && self.has_common_neighbor(u, v)
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut c = SimpleGraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    c.add_edge(u, v);
                }
            }
        }
        c
    }
}

/// The power graph of a finite group, with per-vertex element orders.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    graph: SimpleGraph,
    orders: Vec<u64>,
}

impl PowerGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The underlying adjacency structure.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Order of the group element behind vertex `v`.
    pub fn order_of(&self, v: usize) -> u64 {
        self.orders[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.adjacent(u, v)
    }

    pub fn to_dot(&self) -> String {
        render_dot("power_graph", &vertex_labels(&self.orders, |i| i), &self.graph.edges())
    }

    pub fn to_edge_list(&self) -> String {
        render_edge_list(&self.graph.edges())
    }
}

/// `(Gamma_G \ {e})^c`: complement adjacency on the non-identity elements.
/// Graph vertex `v` stands for group element `v + 1`.
#[derive(Debug, Clone)]
pub struct PuncturedComplement {
    graph: SimpleGraph,
    orders: Vec<u64>,
}

impl PuncturedComplement {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// The group element index behind graph vertex `v`.
    pub fn element_of(&self, v: usize) -> usize {
        v + 1
    }

    /// Adjacency by *element* index: true when the elements are distinct,
    /// non-identity and non-adjacent in the power graph.
    pub fn elements_adjacent(&self, x: usize, y: usize) -> bool {
        x != y && x > 0 && y > 0 && self.graph.adjacent(x - 1, y - 1)
    }

    pub fn to_dot(&self) -> String {
        render_dot(
            "punctured_complement",
            &vertex_labels(&self.orders, |i| i + 1),
            &element_edges(&self.graph),
        )
    }

    pub fn to_edge_list(&self) -> String {
        render_edge_list(&element_edges(&self.graph))
    }
}

fn element_edges(graph: &SimpleGraph) -> Vec<(usize, usize)> {
    graph.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
}

fn vertex_labels(orders: &[u64], to_element: impl Fn(usize) -> usize) -> Vec<(usize, String)> {
    orders
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let e = to_element(i);
            (e, format!("v{e} (ord={d})"))
        })
        .collect()
}

fn render_dot(name: &str, labels: &[(usize, String)], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for (v, label) in labels {
        let _ = writeln!(out, "  v{v} [label=\"{label}\"];");
    }
    for (u, v) in edges {
        let _ = writeln!(out, "  v{u} -- v{v};");
    }
    out.push_str("}\n");
    out
}

fn render_edge_list(edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Builds the power graph: `x` and `y` are adjacent iff one generates the
/// other, computed by marking each element against its cyclic subgroup.
pub fn build_power_graph(group: &FiniteGroup) -> PowerGraph {
    let n = group.order();
    let mut graph = SimpleGraph::new(n);
    for g in 0..n {
        for x in group.cyclic_subgroup(g) {
            if x != g {
                graph.add_edge(g, x);
            }
        }
    }
    let orders = (0..n).map(|i| group.element_order(i)).collect();
    PowerGraph { graph, orders }
}

/// The complement of the power graph restricted to non-identity vertices.
pub fn punctured_complement(pg: &PowerGraph) -> PuncturedComplement {
    let n = pg.vertex_count();
    let mut graph = SimpleGraph::new(n - 1);
    for x in 1..n {
        for y in x + 1..n {
            if !pg.adjacent(x, y) {
                graph.add_edge(x - 1, y - 1);
            }
        }
    }
    let orders = (1..n).map(|v| pg.order_of(v)).collect();
    PuncturedComplement { graph, orders }
}

/// Power-graph adjacency with the self-query guarded as a domain error.
pub fn is_adjacent(pg: &PowerGraph, u: usize, v: usize) -> Result<bool, GraphError> {
    let n = pg.vertex_count();
    if u >= n {
        return Err(GraphError::BadVertex(u, n));
    }
    if v >= n {
        return Err(GraphError::BadVertex(v, n));
    }
    if u == v {
        return Err(GraphError::SelfQuery(u));
    }
    Ok(pg.adjacent(u, v))
}

/// True when the shortest path between `u` and `v` in the power graph has
/// length exactly two.
pub fn at_distance_two(pg: &PowerGraph, u: usize, v: usize) -> bool {
    pg.graph.at_distance_two(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_from_str;
    use crate::spectrum::cyclic_classes;

    fn pg(spec: &str) -> (FiniteGroup, PowerGraph) {
        let (_, g) = build_from_str(spec).unwrap();
        let pg = build_power_graph(&g);
        (g, pg)
    }

    /// The adjacency definition taken literally: some positive power of one
    /// element equals the other.
    fn power_condition(g: &FiniteGroup, x: usize, y: usize) -> bool {
        let hits = |a: usize, b: usize| {
            let mut acc = a;
            loop {
                if acc == b {
                    return true;
                }
                if acc == 0 {
                    return false;
                }
                acc = g.multiply(acc, a);
            }
        };
        hits(x, y) || hits(y, x)
    }

    #[test]
    fn prime_cyclic_power_graph_is_complete() {
        let (_, pg) = pg("C5");
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(pg.adjacent(u, v));
            }
        }
        assert_eq!(pg.graph().edge_count(), 10);
    }

    #[test]
    fn cyclic_6_is_not_complete() {
        let (g, pg) = pg("C6");
        let two = (0..6).find(|&i| g.element_order(i) == 2).unwrap();
        let threes: Vec<usize> = (0..6).filter(|&i| g.element_order(i) == 3).collect();
        for &t in &threes {
            assert!(!pg.adjacent(two, t));
        }
    }

    #[test]
    fn identity_is_adjacent_to_everything() {
        for spec in ["C6", "D4", "Q2", "E3_2", "A4", "PSL2_5"] {
            let (_, pg) = pg(spec);
            for v in 1..pg.vertex_count() {
                assert!(pg.adjacent(0, v), "{spec} vertex {v}");
            }
        }
    }

    #[test]
    fn adjacency_matches_literal_power_condition() {
        // Includes A6 (order 360), the largest group this check runs on.
        for spec in ["C6", "C12", "D6", "Q2", "Q3", "E2_3", "A4", "S4", "A5", "PSL2_5", "A6"] {
            let (g, pg) = pg(spec);
            for x in 0..g.order() {
                for y in x + 1..g.order() {
                    assert_eq!(
                        pg.adjacent(x, y),
                        power_condition(&g, x, y),
                        "{spec} pair ({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn complement_of_prime_cyclic_is_edgeless() {
        let (_, pg) = pg("C5");
        let pc = punctured_complement(&pg);
        assert_eq!(pc.vertex_count(), 4);
        assert_eq!(pc.graph().edge_count(), 0);
    }

    #[test]
    fn complement_of_elementary_abelian_four_is_triangle() {
        let (_, pg) = pg("E2_2");
        let pc = punctured_complement(&pg);
        assert_eq!(pc.vertex_count(), 3);
        assert_eq!(pc.graph().edge_count(), 3);
    }

    #[test]
    fn complement_edges_of_cyclic_6_join_orders_2_and_3() {
        let (g, pg) = pg("C6");
        let pc = punctured_complement(&pg);
        for (u, v) in pc.graph().edges() {
            let (x, y) = (pc.element_of(u), pc.element_of(v));
            let mut orders = [g.element_order(x), g.element_order(y)];
            orders.sort_unstable();
            assert_eq!(orders, [2, 3]);
        }
        assert_eq!(pc.graph().edge_count(), 2);
    }

    #[test]
    fn is_adjacent_guards_inputs() {
        let (_, pg) = pg("C6");
        assert_eq!(is_adjacent(&pg, 2, 2), Err(GraphError::SelfQuery(2)));
        assert_eq!(is_adjacent(&pg, 9, 2), Err(GraphError::BadVertex(9, 6)));
        assert!(is_adjacent(&pg, 0, 3).unwrap());
    }

    #[test]
    fn distance_two_examples() {
        let (g, pg) = pg("C6");
        let two = (0..6).find(|&i| g.element_order(i) == 2).unwrap();
        let three = (0..6).find(|&i| g.element_order(i) == 3).unwrap();
        // non-adjacent, but the identity is a common neighbor
        assert!(at_distance_two(&pg, two, three));

        let (_, complete) = pg_complete();
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(!at_distance_two(&complete, u, v));
            }
        }

        let edgeless = SimpleGraph::new(2);
        assert!(!edgeless.at_distance_two(0, 1));
    }

    fn pg_complete() -> (FiniteGroup, PowerGraph) {
        pg("C5")
    }

    #[test]
    fn every_pair_is_within_distance_two() {
        for spec in ["C6", "C12", "D5", "Q3", "E2_3", "A4", "A5", "PSL2_7"] {
            let (_, pg) = pg(spec);
            let n = pg.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    assert!(
                        pg.adjacent(u, v) || at_distance_two(&pg, u, v),
                        "{spec} pair ({u},{v})"
                    );
                }
            }
        }
    }

    #[test]
    fn same_length_cross_order_pairs_are_never_adjacent() {
        // Catalog groups of non-prime-power order, including PSL2_7 and A6.
        for spec in ["C6", "C12", "D3", "D6", "Q3", "A4", "S4", "A5", "PSL2_5", "PSL2_7", "A6"] {
            let (g, pg) = pg(spec);
            let dec = cyclic_classes(&g).unwrap();
            for x in 1..g.order() {
                for y in x + 1..g.order() {
                    let (dx, dy) = (g.element_order(x), g.element_order(y));
                    if dx != dy && dec.length_of(dx) == dec.length_of(dy) {
                        assert!(!pg.adjacent(x, y), "{spec} pair ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn higher_strata_always_see_a_nonadjacent_lower_element() {
        // PSL2_7 is the smallest catalog group with two strata; A6 and S5
        // exercise the same descent.
        for spec in ["PSL2_7", "A6", "S5"] {
            let (g, pg) = pg(spec);
            let dec = cyclic_classes(&g).unwrap();
            let strata: Vec<u32> = dec.strata().keys().copied().collect();
            for (i, &upper) in strata.iter().enumerate() {
                for &lower in &strata[..i] {
                    let lower_elements = dec.stratum(lower);
                    for &g1 in &dec.stratum(upper) {
                        assert!(
                            lower_elements.iter().any(|&g2| !pg.adjacent(g1, g2)),
                            "{spec}: no partner for {g1} from stratum {upper} in {lower}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dot_export_shapes() {
        let (_, k2) = pg("C2");
        let dot = k2.to_dot();
        assert!(dot.starts_with("graph power_graph {"));
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("v0 [label=\"v0 (ord=1)\"];"));
        assert!(dot.contains("v1 [label=\"v1 (ord=2)\"];"));

        let (_, c3) = pg("C3");
        assert_eq!(c3.to_dot().matches(" -- ").count(), 3);

        // Edgeless complement on 4 vertices: C5 punctured complement.
        let (_, c5) = pg("C5");
        let pc = punctured_complement(&c5);
        let dot = pc.to_dot();
        assert!(dot.starts_with("graph punctured_complement {"));
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 0);
    }

    #[test]
    fn edge_list_is_sorted_with_element_indices() {
        let (_, pg) = pg("C6");
        let listing = pg.to_edge_list();
        let pairs: Vec<(usize, usize)> = listing
            .lines()
            .map(|l| {
                let (a, b) = l.split_once(' ').unwrap();
                (a.parse().unwrap(), b.parse().unwrap())
            })
            .collect();
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        assert!(pairs.iter().all(|&(u, v)| u < v));

        let pc = punctured_complement(&pg);
        // Complement edge lists use element indices, so vertex 0 never shows.
        assert!(pc.to_edge_list().lines().all(|l| !l.starts_with("0 ")));
    }
}
