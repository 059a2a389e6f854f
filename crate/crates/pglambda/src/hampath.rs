//! Hamiltonian paths in the punctured complement of a power graph.
//!
//! The constructive algorithm assembles the path from the cyclic-class
//! decomposition. For each order `d` with classes `F_1, ..., F_mu` (`mu >= 2`
//! required) the column-major interleaving
//!
//! ```text
//! gamma_d = (x_{1,1}, x_{2,1}, ..., x_{mu,1}, x_{1,2}, ..., x_{mu,phi(d)})
//! ```
//!
//! never steps inside a single class, so consecutive entries are non-adjacent
//! in the power graph. Orders of equal exponent-vector length chain freely
//! (cross-order pairs of the same length are never adjacent), giving one
//! block `E_k` per stratum. Blocks are then joined from the highest stratum
//! downward: the current endpoint descends to a non-adjacent partner in the
//! next stratum, whose block is re-derived to start there.
//!
//! A generic backtracking search over any graph serves as the independent
//! oracle for the same Hamiltonian-path criterion.

use thiserror::Error;

use crate::groups::FiniteGroup;
use crate::powergraph::{PowerGraph, PuncturedComplement, SimpleGraph};
use crate::spectrum::{ClassDecomposition, CyclicClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HamError {
    #[error("construction requires at least two cyclic classes per order; violated by d in {orders:?}")]
    Precondition { orders: Vec<u64> },
    #[error("gamma path for d={0} needs at least two cyclic classes")]
    SingleClass(u64),
    #[error("cyclic classes for d={0} have unequal sizes")]
    UnequalClasses(u64),
    #[error("no element of stratum {stratum} is non-adjacent to element {from}")]
    JunctionFailure { from: usize, stratum: u32 },
    #[error("element {0} is not covered by the block")]
    VertexNotInBlock(usize),
    #[error("path has {got} vertices, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("path visits element {0} twice")]
    RepeatedVertex(usize),
    #[error("path contains the identity")]
    ContainsIdentity,
    #[error("consecutive path elements {u} and {v} are adjacent in the power graph")]
    AdjacentConsecutive { u: usize, v: usize },
}

/// An ordered traversal of all non-identity elements in which consecutive
/// entries are non-adjacent in the power graph. Only obtainable validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianPath {
    vertices: Vec<usize>,
}

impl HamiltonianPath {
    /// Element indices in path order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The definitive path check: covers every non-identity element exactly
    /// once and never steps between adjacent elements of the power graph.
    pub fn validated(vertices: Vec<usize>, pg: &PowerGraph) -> Result<HamiltonianPath, HamError> {
        let expected = pg.vertex_count() - 1;
        if vertices.len() != expected {
            return Err(HamError::WrongLength {
                got: vertices.len(),
                expected,
            });
        }
        let mut seen = vec![false; pg.vertex_count()];
        for &v in &vertices {
            if v == 0 {
                return Err(HamError::ContainsIdentity);
            }
            if seen[v] {
                return Err(HamError::RepeatedVertex(v));
            }
            seen[v] = true;
        }
        for pair in vertices.windows(2) {
            if pg.adjacent(pair[0], pair[1]) {
                return Err(HamError::AdjacentConsecutive {
                    u: pair[0],
                    v: pair[1],
                });
            }
        }
        Ok(HamiltonianPath { vertices })
    }
}

/// The interleaved path through all elements of one order, kept in class
/// form so it can be re-rooted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaPath {
    d: u64,
    classes: Vec<Vec<usize>>,
}

impl GammaPath {
    pub fn order(&self) -> u64 {
        self.d
    }

    /// Column-major interleaving of the classes.
    pub fn vertices(&self) -> Vec<usize> {
        let width = self.classes[0].len();
        let mut out = Vec::with_capacity(self.classes.len() * width);
        for j in 0..width {
            for class in &self.classes {
                out.push(class[j]);
            }
        }
        out
    }

    fn contains(&self, x: usize) -> bool {
        self.classes.iter().any(|c| c.contains(&x))
    }

    /// Reorders so `x` comes first: its class becomes class 1 (others keep
    /// their relative order) and `x` leads that class.
    fn rooted_at(&self, x: usize) -> GammaPath {
        let t0 = self
            .classes
            .iter()
            .position(|c| c.contains(&x))
            .expect("caller checked membership");
        let mut classes = Vec::with_capacity(self.classes.len());
        let mut lead = self.classes[t0].clone();
        let pos = lead.iter().position(|&m| m == x).unwrap();
        lead.remove(pos);
        lead.insert(0, x);
        classes.push(lead);
        for (t, class) in self.classes.iter().enumerate() {
            if t != t0 {
                classes.push(class.clone());
            }
        }
        GammaPath { d: self.d, classes }
    }
}

/// Builds `gamma_d` from the cyclic classes of one order. Requires at least
/// two classes; fewer is exactly the failure mode of non-simple inputs.
pub fn gamma_path(classes: &[CyclicClass]) -> Result<GammaPath, HamError> {
    let d = classes.first().map_or(0, CyclicClass::order);
    if classes.len() < 2 {
        return Err(HamError::SingleClass(d));
    }
    let width = classes[0].members().len();
    if classes.iter().any(|c| c.members().len() != width) {
        return Err(HamError::UnequalClasses(d));
    }
    Ok(GammaPath {
        d,
        classes: classes.iter().map(|c| c.members().to_vec()).collect(),
    })
}

/// The path `E_k` through one stratum: the gamma paths of its orders chained
/// in sequence. Junctions between different orders of equal length are safe
/// because such cross pairs are never adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumBlock {
    k: u32,
    gammas: Vec<GammaPath>,
}

impl StratumBlock {
    pub fn stratum(&self) -> u32 {
        self.k
    }

    pub fn orders(&self) -> Vec<u64> {
        self.gammas.iter().map(GammaPath::order).collect()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.gammas.iter().flat_map(GammaPath::vertices).collect()
    }

    fn contains(&self, x: usize) -> bool {
        self.gammas.iter().any(|g| g.contains(x))
    }
}

/// Chains the gamma paths of one stratum, ascending by order.
pub fn join_same_length(k: u32, mut gammas: Vec<GammaPath>) -> StratumBlock {
    gammas.sort_by_key(GammaPath::order);
    StratumBlock { k, gammas }
}

/// The lowest-indexed element of the lower stratum non-adjacent to `g`.
pub fn descend_junction(
    g: usize,
    lower_stratum: &[usize],
    pg: &PowerGraph,
    stratum: u32,
) -> Result<usize, HamError> {
    lower_stratum
        .iter()
        .copied()
        .find(|&h| !pg.adjacent(g, h))
        .ok_or(HamError::JunctionFailure { from: g, stratum })
}

/// Re-derives a block so it starts at `h`: the gamma of `h`'s order moves to
/// the front and is re-rooted at `h`. Covers the same vertex set and stays
/// consecutive-non-adjacent.
pub fn rotate_block_to_start(block: &StratumBlock, h: usize) -> Result<StratumBlock, HamError> {
    if !block.contains(h) {
        return Err(HamError::VertexNotInBlock(h));
    }
    let lead_idx = block.gammas.iter().position(|g| g.contains(h)).unwrap();
    let mut gammas = Vec::with_capacity(block.gammas.len());
    gammas.push(block.gammas[lead_idx].rooted_at(h));
    for (i, g) in block.gammas.iter().enumerate() {
        if i != lead_idx {
            gammas.push(g.clone());
        }
    }
    Ok(StratumBlock { k: block.k, gammas })
}

/// One descent between consecutive strata in the final chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JunctionTrace {
    pub from: usize,
    pub from_stratum: u32,
    pub to: usize,
    pub to_stratum: u32,
}

/// Diagnostic record of how the path was assembled.
#[derive(Debug, Clone, Default)]
pub struct ConstructionTrace {
    /// Per-order interleavings in emission order.
    pub gammas: Vec<(u64, Vec<usize>)>,
    /// Per-stratum blocks in emission order: (stratum, orders, vertex count).
    pub blocks: Vec<(u32, Vec<u64>, usize)>,
    pub junctions: Vec<JunctionTrace>,
    /// Strata in emission order (highest first).
    pub block_order: Vec<u32>,
}

/// Runs the full construction: gamma paths per order, blocks per stratum,
/// then a descending chain over strata. The preconditions are checked, not
/// assumed, so near-miss groups may be attempted and fail informatively.
pub fn build_constructive_hamiltonian(
    group: &FiniteGroup,
    dec: &ClassDecomposition,
    pg: &PowerGraph,
) -> Result<(HamiltonianPath, ConstructionTrace), HamError> {
    let offending: Vec<u64> = dec
        .spectrum()
        .iter()
        .copied()
        .filter(|&d| dec.classes_of(d).len() < 2)
        .collect();
    if !offending.is_empty() {
        return Err(HamError::Precondition { orders: offending });
    }

    let mut blocks: Vec<StratumBlock> = Vec::new();
    for (&k, orders) in dec.strata() {
        let gammas = orders
            .iter()
            .map(|&d| gamma_path(dec.classes_of(d)))
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(join_same_length(k, gammas));
    }

    // Chain from the highest stratum downward; every step descends to a
    // non-adjacent partner and re-roots the lower block there.
    let mut trace = ConstructionTrace::default();
    let mut path: Vec<usize> = Vec::with_capacity(group.order() - 1);
    for block in blocks.iter().rev() {
        let block = if let Some(&g) = path.last() {
            let lower = dec.stratum(block.stratum());
            let h = descend_junction(g, &lower, pg, block.stratum())?;
            debug_assert!(!pg.adjacent(g, h));
            trace.junctions.push(JunctionTrace {
                from: g,
                from_stratum: *trace.block_order.last().unwrap(),
                to: h,
                to_stratum: block.stratum(),
            });
            rotate_block_to_start(block, h)?
        } else {
            block.clone()
        };
        trace.block_order.push(block.stratum());
        trace
            .blocks
            .push((block.stratum(), block.orders(), block.vertices().len()));
        for gamma in &block.gammas {
            trace.gammas.push((gamma.order(), gamma.vertices()));
        }
        path.extend(block.vertices());
    }

    let path = HamiltonianPath::validated(path, pg)?;
    Ok((path, trace))
}

/// Outcome of the backtracking search on a punctured complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(HamiltonianPath),
    /// The search space was exhausted: no Hamiltonian path exists.
    Exhausted,
    BudgetExceeded,
}

/// Outcome of the generic search on an arbitrary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSearch {
    Found(Vec<usize>),
    Exhausted,
    BudgetExceeded,
}

/// Default node budget for the backtracking oracle.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Depth-first Hamiltonian-path search over any graph: start vertices in
/// degree-ascending order, neighbors expanded least-degree-first, every
/// path extension counted against the node budget.
pub fn search_hamiltonian_path(graph: &SimpleGraph, budget: u64) -> GraphSearch {
    let n = graph.vertex_count();
    if n == 0 {
        return GraphSearch::Found(Vec::new());
    }

    let degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let by_degree = |list: &mut Vec<usize>| {
        list.sort_by_key(|&v| (degree[v], v));
    };
    let mut adjacency: Vec<Vec<usize>> = (0..n).map(|v| graph.neighbors(v)).collect();
    for list in &mut adjacency {
        by_degree(list);
    }
    let mut starts: Vec<usize> = (0..n).collect();
    by_degree(&mut starts);

    let mut nodes: u64 = 0;
    let mut visited = vec![false; n];
    for &start in &starts {
        visited.fill(false);
        let mut path = vec![start];
        let mut cursor = vec![0usize];
        visited[start] = true;
        nodes += 1;
        if nodes > budget {
            return GraphSearch::BudgetExceeded;
        }
        while let Some(&v) = path.last() {
            if path.len() == n {
                return GraphSearch::Found(path);
            }
            let pos = cursor.last_mut().unwrap();
            let mut extended = false;
            while *pos < adjacency[v].len() {
                let w = adjacency[v][*pos];
                *pos += 1;
                if !visited[w] {
                    nodes += 1;
                    if nodes > budget {
                        return GraphSearch::BudgetExceeded;
                    }
                    visited[w] = true;
                    path.push(w);
                    cursor.push(0);
                    extended = true;
                    break;
                }
            }
            if !extended {
                visited[v] = false;
                path.pop();
                cursor.pop();
            }
        }
    }
    GraphSearch::Exhausted
}

/// The backtracking oracle for the Hamiltonian criterion, reporting in
/// element indices. `Exhausted` is a proof that no path exists.
pub fn backtracking_hamiltonian(pc: &PuncturedComplement, budget: u64) -> SearchOutcome {
    match search_hamiltonian_path(pc.graph(), budget) {
        GraphSearch::Found(vertices) => {
            let elements: Vec<usize> = vertices.iter().map(|&v| pc.element_of(v)).collect();
            debug_assert!(elements
                .windows(2)
                .all(|w| pc.elements_adjacent(w[0], w[1])));
            SearchOutcome::Found(HamiltonianPath { vertices: elements })
        }
        GraphSearch::Exhausted => SearchOutcome::Exhausted,
        GraphSearch::BudgetExceeded => SearchOutcome::BudgetExceeded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_from_str;
    use crate::powergraph::{build_power_graph, punctured_complement};
    use crate::spectrum::cyclic_classes;

    fn setup(spec: &str) -> (FiniteGroup, ClassDecomposition, PowerGraph) {
        let (_, g) = build_from_str(spec).unwrap();
        let dec = cyclic_classes(&g).unwrap();
        let pg = build_power_graph(&g);
        (g, dec, pg)
    }

    fn assert_consecutive_nonadjacent(vertices: &[usize], pg: &PowerGraph) {
        for w in vertices.windows(2) {
            assert!(!pg.adjacent(w[0], w[1]), "pair ({},{})", w[0], w[1]);
        }
    }

    #[test]
    fn gamma_path_interleaves_singleton_classes() {
        let (_, dec, pg) = setup("E2_2");
        let gamma = gamma_path(dec.classes_of(2)).unwrap();
        let vertices = gamma.vertices();
        assert_eq!(vertices, vec![1, 2, 3]);
        assert_consecutive_nonadjacent(&vertices, &pg);
    }

    #[test]
    fn gamma_path_covers_an_order_level_set() {
        let (g, dec, pg) = setup("A5");
        let gamma = gamma_path(dec.classes_of(5)).unwrap();
        let vertices = gamma.vertices();
        assert_eq!(vertices.len(), 24);
        assert_consecutive_nonadjacent(&vertices, &pg);
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        let expected: Vec<usize> = (0..g.order()).filter(|&i| g.element_order(i) == 5).collect();
        assert_eq!(sorted, expected);
        // column-major: the first mu entries are the class minima in order
        let mu = dec.class_count(5).unwrap();
        for (t, class) in dec.classes_of(5).iter().enumerate() {
            assert_eq!(vertices[t], class.members()[0], "class {t}");
            assert_eq!(mu, 6);
        }
    }

    #[test]
    fn gamma_path_requires_two_classes() {
        let (_, dec, _) = setup("C6");
        assert_eq!(
            gamma_path(dec.classes_of(6)),
            Err(HamError::SingleClass(6))
        );
    }

    #[test]
    fn join_same_length_chains_orders_ascending() {
        let (_, dec, pg) = setup("A5");
        let gammas: Vec<GammaPath> = [5, 2, 3] // deliberately out of order
            .iter()
            .map(|&d| gamma_path(dec.classes_of(d)).unwrap())
            .collect();
        let block = join_same_length(1, gammas);
        assert_eq!(block.orders(), vec![2, 3, 5]);
        let vertices = block.vertices();
        assert_eq!(vertices.len(), 59);
        assert_consecutive_nonadjacent(&vertices, &pg);
    }

    #[test]
    fn single_order_stratum_is_its_gamma() {
        let (_, dec, _) = setup("PSL2_7");
        let gamma = gamma_path(dec.classes_of(4)).unwrap();
        let block = join_same_length(2, vec![gamma.clone()]);
        assert_eq!(block.vertices(), gamma.vertices());
    }

    #[test]
    fn empty_stratum_block_is_empty() {
        let block = join_same_length(3, Vec::new());
        assert_eq!(block.vertices(), Vec::<usize>::new());
    }

    #[test]
    fn descent_exists_for_every_top_stratum_element_of_psl2_7() {
        let (g, dec, pg) = setup("PSL2_7");
        let lower = dec.stratum(1);
        for &g1 in &dec.stratum(2) {
            assert_eq!(g.element_order(g1), 4);
            let h = descend_junction(g1, &lower, &pg, 1).unwrap();
            assert!(!pg.adjacent(g1, h));
            // chosen partner is the lowest-indexed one
            for &earlier in lower.iter().take_while(|&&x| x < h) {
                assert!(pg.adjacent(g1, earlier));
            }
        }
    }

    #[test]
    fn descent_fails_against_a_universal_vertex() {
        let (g, _, pg) = setup("C6");
        let generator = (1..6).find(|&i| g.element_order(i) == 6).unwrap();
        let two = (1..6).find(|&i| g.element_order(i) == 2).unwrap();
        assert_eq!(
            descend_junction(generator, &[two], &pg, 1),
            Err(HamError::JunctionFailure {
                from: generator,
                stratum: 1
            })
        );
    }

    #[test]
    fn rotation_is_identity_when_already_first() {
        let (_, dec, _) = setup("E2_2");
        let block = join_same_length(1, vec![gamma_path(dec.classes_of(2)).unwrap()]);
        let first = block.vertices()[0];
        let rotated = rotate_block_to_start(&block, first).unwrap();
        assert_eq!(rotated.vertices(), block.vertices());
    }

    #[test]
    fn rotation_moves_the_target_forward() {
        let (_, dec, pg) = setup("E2_2");
        let block = join_same_length(1, vec![gamma_path(dec.classes_of(2)).unwrap()]);
        assert_eq!(block.vertices(), vec![1, 2, 3]);
        let rotated = rotate_block_to_start(&block, 3).unwrap();
        assert_eq!(rotated.vertices(), vec![3, 1, 2]);
        assert_consecutive_nonadjacent(&rotated.vertices(), &pg);
    }

    #[test]
    fn rotation_reroots_a_multi_order_block() {
        let (g, dec, pg) = setup("PSL2_7");
        let gammas: Vec<GammaPath> = dec.strata()[&1]
            .iter()
            .map(|&d| gamma_path(dec.classes_of(d)).unwrap())
            .collect();
        let block = join_same_length(1, gammas);
        let h = *dec.stratum(1)
            .iter()
            .find(|&&x| g.element_order(x) == 7)
            .unwrap();
        let rotated = rotate_block_to_start(&block, h).unwrap();
        let vertices = rotated.vertices();
        assert_eq!(vertices[0], h);
        assert_eq!(rotated.orders(), vec![7, 2, 3]);
        assert_consecutive_nonadjacent(&vertices, &pg);
        let mut covered = vertices.clone();
        covered.sort_unstable();
        assert_eq!(covered, dec.stratum(1));
    }

    #[test]
    fn rotation_rejects_a_foreign_vertex() {
        let (_, dec, _) = setup("PSL2_7");
        let gamma = gamma_path(dec.classes_of(4)).unwrap();
        let block = join_same_length(2, vec![gamma]);
        let outsider = dec.stratum(1)[0];
        assert_eq!(
            rotate_block_to_start(&block, outsider),
            Err(HamError::VertexNotInBlock(outsider))
        );
    }

    #[test]
    fn constructive_path_on_a5() {
        let (g, dec, pg) = setup("A5");
        let (path, trace) = build_constructive_hamiltonian(&g, &dec, &pg).unwrap();
        assert_eq!(path.len(), 59);
        assert!(trace.junctions.is_empty());
        assert_eq!(trace.block_order, vec![1]);
    }

    #[test]
    fn constructive_path_on_psl2_7_has_one_junction() {
        let (g, dec, pg) = setup("PSL2_7");
        let (path, trace) = build_constructive_hamiltonian(&g, &dec, &pg).unwrap();
        assert_eq!(path.len(), 167);
        assert_eq!(trace.junctions.len(), 1);
        assert_eq!(trace.block_order, vec![2, 1]);
        let junction = &trace.junctions[0];
        assert_eq!(junction.from_stratum, 2);
        assert_eq!(junction.to_stratum, 1);
        assert!(!pg.adjacent(junction.from, junction.to));
        // the junction really is where the strata meet on the path
        let pos = path
            .vertices()
            .iter()
            .position(|&v| v == junction.from)
            .unwrap();
        assert_eq!(path.vertices()[pos + 1], junction.to);
    }

    #[test]
    fn constructive_path_rejects_cyclic_6() {
        let (g, dec, pg) = setup("C6");
        match build_constructive_hamiltonian(&g, &dec, &pg) {
            Err(HamError::Precondition { orders }) => assert!(orders.contains(&6)),
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn constructive_path_is_deterministic() {
        let (g, dec, pg) = setup("PSL2_7");
        let (p1, _) = build_constructive_hamiltonian(&g, &dec, &pg).unwrap();
        let (p2, _) = build_constructive_hamiltonian(&g, &dec, &pg).unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn validator_rejects_defective_paths() {
        let (_, _, pg) = setup("C6");
        // C6 has no Hamiltonian path in its punctured complement, but the
        // validator's individual checks are visible on handmade inputs.
        assert_eq!(
            HamiltonianPath::validated(vec![1, 2], &pg),
            Err(HamError::WrongLength {
                got: 2,
                expected: 5
            })
        );
        assert_eq!(
            HamiltonianPath::validated(vec![0, 1, 2, 3, 4], &pg),
            Err(HamError::ContainsIdentity)
        );
        assert_eq!(
            HamiltonianPath::validated(vec![1, 2, 3, 4, 4], &pg),
            Err(HamError::RepeatedVertex(4))
        );
        let err = HamiltonianPath::validated(vec![1, 2, 3, 4, 5], &pg);
        assert!(matches!(err, Err(HamError::AdjacentConsecutive { .. })));
    }

    #[test]
    fn oracle_finds_path_in_triangle_complement() {
        let (_, g) = build_from_str("E2_2").unwrap();
        let pc = punctured_complement(&build_power_graph(&g));
        match backtracking_hamiltonian(&pc, DEFAULT_SEARCH_BUDGET) {
            SearchOutcome::Found(path) => assert_eq!(path.len(), 3),
            other => panic!("expected a path, got {other:?}"),
        }
    }

    #[test]
    fn oracle_exhausts_on_edgeless_complements() {
        for spec in ["C3", "C5", "C7"] {
            let (_, g) = build_from_str(spec).unwrap();
            let pc = punctured_complement(&build_power_graph(&g));
            assert_eq!(
                backtracking_hamiltonian(&pc, DEFAULT_SEARCH_BUDGET),
                SearchOutcome::Exhausted,
                "{spec}"
            );
        }
    }

    #[test]
    fn oracle_exhausts_on_cyclic_6() {
        let (_, g) = build_from_str("C6").unwrap();
        let pc = punctured_complement(&build_power_graph(&g));
        assert_eq!(
            backtracking_hamiltonian(&pc, DEFAULT_SEARCH_BUDGET),
            SearchOutcome::Exhausted
        );
    }

    #[test]
    fn oracle_handles_the_single_vertex_complement() {
        // C2: one non-identity element; the one-vertex path is Hamiltonian.
        let (_, g) = build_from_str("C2").unwrap();
        let pc = punctured_complement(&build_power_graph(&g));
        match backtracking_hamiltonian(&pc, DEFAULT_SEARCH_BUDGET) {
            SearchOutcome::Found(path) => assert_eq!(path.vertices(), &[1]),
            other => panic!("expected the trivial path, got {other:?}"),
        }
    }

    #[test]
    fn oracle_respects_the_budget() {
        let (_, g) = build_from_str("A5").unwrap();
        let pc = punctured_complement(&build_power_graph(&g));
        assert_eq!(
            backtracking_hamiltonian(&pc, 1),
            SearchOutcome::BudgetExceeded
        );
    }

    #[test]
    fn oracle_agrees_with_construction_on_small_groups() {
        for spec in ["E2_2", "E2_3", "E3_2", "A4", "S4"] {
            let (g, dec, pg) = setup(spec);
            let constructed = build_constructive_hamiltonian(&g, &dec, &pg);
            assert!(constructed.is_ok(), "{spec} should construct");
            let pc = punctured_complement(&pg);
            assert!(
                matches!(
                    backtracking_hamiltonian(&pc, DEFAULT_SEARCH_BUDGET),
                    SearchOutcome::Found(_)
                ),
                "{spec}: oracle should also find a path"
            );
        }
    }

    #[test]
    fn oracle_paths_validate_against_the_power_graph() {
        for spec in ["E2_3", "A4", "D3"] {
            let (_, g) = build_from_str(spec).unwrap();
            let pg = build_power_graph(&g);
            let pc = punctured_complement(&pg);
            if let SearchOutcome::Found(path) = backtracking_hamiltonian(&pc, DEFAULT_SEARCH_BUDGET)
            {
                HamiltonianPath::validated(path.vertices().to_vec(), &pg).unwrap();
            }
        }
    }

    #[test]
    fn generic_search_on_tiny_graphs() {
        let empty = SimpleGraph::new(0);
        assert_eq!(
            search_hamiltonian_path(&empty, 10),
            GraphSearch::Found(vec![])
        );

        let mut path3 = SimpleGraph::new(3);
        path3.add_edge(0, 1);
        path3.add_edge(1, 2);
        assert_eq!(
            search_hamiltonian_path(&path3, 1000),
            GraphSearch::Found(vec![0, 1, 2])
        );

        let mut star = SimpleGraph::new(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        assert_eq!(search_hamiltonian_path(&star, 1000), GraphSearch::Exhausted);
    }
}
