//! L(2,1)-labellings of power graphs and the lambda number.
//!
//! A labelling assigns an integer to every vertex so that adjacent vertices
//! differ by at least two and vertices at distance two differ at all; its
//! span is the difference between the largest and smallest label. The lambda
//! number is the least achievable span, and for a power graph it is at least
//! the group order, with equality exactly when the punctured complement has
//! a Hamiltonian path.
//!
//! Three routes to a value live here: the closed form `2(p-1)` for cyclic
//! groups of prime order, the span-`|G|` labelling read off a constructed
//! Hamiltonian path, and an exhaustive search usable on any small graph.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::groups::{FiniteGroup, GroupSpec};
use crate::hampath::{build_constructive_hamiltonian, HamiltonianPath};
use crate::powergraph::{build_power_graph, PowerGraph, SimpleGraph};
use crate::spectrum::cyclic_classes;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("vertex {0} has no label")]
    MissingLabel(usize),
    #[error("adjacent vertices {u} and {v} carry labels {lu} and {lv}, less than 2 apart")]
    AdjacentTooClose { u: usize, v: usize, lu: i64, lv: i64 },
    #[error("vertices {u} and {v} at distance two share the label {label}")]
    DistanceTwoEqual { u: usize, v: usize, label: i64 },
    #[error("path does not traverse the non-identity elements of this group")]
    ForeignPath,
}

/// An integer label per vertex together with the resulting span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L21Labelling {
    labels: BTreeMap<usize, i64>,
    span: i64,
}

impl L21Labelling {
    pub fn new(labels: BTreeMap<usize, i64>) -> L21Labelling {
        let span = match (labels.values().min(), labels.values().max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        };
        L21Labelling { labels, span }
    }

    pub fn labels(&self) -> &BTreeMap<usize, i64> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<i64> {
        self.labels.get(&v).copied()
    }

    /// Max label minus min label.
    pub fn span(&self) -> i64 {
        self.span
    }
}

/// Checks both labelling conditions against a graph, reporting the first
/// violating pair in vertex order. A vertex without a label is a domain
/// error rather than a verdict.
pub fn verify_l21(graph: &SimpleGraph, labelling: &L21Labelling) -> Result<(), LabelError> {
    let n = graph.vertex_count();
    let mut f = Vec::with_capacity(n);
    for v in 0..n {
        f.push(labelling.label(v).ok_or(LabelError::MissingLabel(v))?);
    }
    for u in 0..n {
        for v in u + 1..n {
            if graph.adjacent(u, v) {
                if (f[u] - f[v]).abs() < 2 {
                    return Err(LabelError::AdjacentTooClose {
                        u,
                        v,
                        lu: f[u],
                        lv: f[v],
                    });
                }
            } else if graph.at_distance_two(u, v) && f[u] == f[v] {
                return Err(LabelError::DistanceTwoEqual {
                    u,
                    v,
                    label: f[u],
                });
            }
        }
    }
    Ok(())
}

/// Reads the span-`|G|` labelling off a Hamiltonian path of the punctured
/// complement: the identity gets 0 and the i-th path vertex gets `i + 1`,
/// so the labels are `0, 2, 3, ..., |G|`.
///
/// Consecutive labels only ever land on complement-adjacent elements, the
/// gap below the identity's neighbors is two, and all labels are distinct,
/// which settles the distance-two condition on a diameter-two graph.
pub fn labelling_from_path(
    group: &FiniteGroup,
    path: &HamiltonianPath,
) -> Result<L21Labelling, LabelError> {
    let n = group.order();
    let vertices = path.vertices();
    if vertices.len() != n - 1 || vertices.iter().any(|&v| v == 0 || v >= n) {
        return Err(LabelError::ForeignPath);
    }
    let mut labels = BTreeMap::new();
    labels.insert(0usize, 0i64);
    for (i, &v) in vertices.iter().enumerate() {
        labels.insert(v, i as i64 + 2);
    }
    if labels.len() != n {
        return Err(LabelError::ForeignPath);
    }
    Ok(L21Labelling::new(labels))
}

/// Result of the exhaustive lambda search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactLambda {
    Exact { lambda: u64, witness: L21Labelling },
    CapExceeded { cap: u64 },
}

/// Exhaustive branch-and-bound for the least L(2,1) span of any graph.
///
/// Trial spans grow from the standard lower bound (max degree plus one, when
/// the graph has an edge); for each trial, labels `0..=s` are assigned
/// depth-first in degree-descending vertex order, pruning on both labelling
/// conditions. Interchangeable vertices (identical neighborhoods outside the
/// pair; swapping their labels preserves validity) are additionally assumed
/// to carry non-decreasing labels in index order, which collapses the
/// factorial orderings of e.g. a clique of generators without affecting the
/// value. Exponential: meant for graphs of at most ~16 vertices.
pub fn exact_lambda(graph: &SimpleGraph, span_cap: u64) -> ExactLambda {
    let n = graph.vertex_count();
    if n == 0 {
        return ExactLambda::Exact {
            lambda: 0,
            witness: L21Labelling::new(BTreeMap::new()),
        };
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));

    // For each position, the earlier positions it must be checked against.
    let mut adjacent_before: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut dist2_before: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..i {
            if graph.adjacent(order[i], order[j]) {
                adjacent_before[i].push(j);
            } else if graph.at_distance_two(order[i], order[j]) {
                dist2_before[i].push(j);
            }
        }
    }

    // Interchangeability classes: transitive closure of "same neighborhoods
    // outside the pair". Any valid labelling can be rearranged so labels are
    // non-decreasing within a class, so the search only visits that
    // representative; prior_twin[i] is the latest earlier position of the
    // same class.
    let class = interchange_classes(graph);
    let mut prior_twin: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        for j in (0..i).rev() {
            if class[order[j]] == class[order[i]] {
                prior_twin[i] = Some(j);
                break;
            }
        }
    }

    let lower = if graph.edge_count() == 0 {
        0
    } else {
        graph.max_degree() as u64 + 1
    };

    for s in lower..=span_cap {
        let mut assignment = vec![0i64; n];
        if assign(
            0,
            s as i64,
            &adjacent_before,
            &dist2_before,
            &prior_twin,
            &mut assignment,
        ) {
            let labels: BTreeMap<usize, i64> = order
                .iter()
                .zip(&assignment)
                .map(|(&v, &l)| (v, l))
                .collect();
            let witness = L21Labelling::new(labels);
            debug_assert_eq!(witness.span(), s as i64);
            debug_assert_eq!(verify_l21(graph, &witness), Ok(()));
            return ExactLambda::Exact { lambda: s, witness };
        }
    }
    ExactLambda::CapExceeded { cap: span_cap }
}

/// Partitions vertices into classes whose members may be freely relabelled
/// among themselves: `u` and `v` join when every other vertex sees them
/// identically. Swaps generate the full symmetric group on each class.
fn interchange_classes(graph: &SimpleGraph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut class: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for v in u + 1..n {
            let same_outside = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| graph.adjacent(u, w) == graph.adjacent(v, w));
            if same_outside && class[v] == v {
                // class[u] is already a root: it was fixed in iteration u.
                class[v] = class[u];
            }
        }
    }
    class
}

fn assign(
    pos: usize,
    span: i64,
    adjacent_before: &[Vec<usize>],
    dist2_before: &[Vec<usize>],
    prior_twin: &[Option<usize>],
    assignment: &mut Vec<i64>,
) -> bool {
    if pos == assignment.len() {
        return true;
    }
    let floor = prior_twin[pos].map_or(0, |j| assignment[j]);
    'candidate: for label in floor..=span {
        for &j in &adjacent_before[pos] {
            if (assignment[j] - label).abs() < 2 {
                continue 'candidate;
            }
        }
        for &j in &dist2_before[pos] {
            if assignment[j] == label {
                continue 'candidate;
            }
        }
        assignment[pos] = label;
        if assign(
            pos + 1,
            span,
            adjacent_before,
            dist2_before,
            prior_twin,
            assignment,
        ) {
            return true;
        }
    }
    false
}

/// Which route produced (or failed to produce) a lambda value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Constructive,
    ExactSearch,
    BoundsOnly,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Constructive => "constructive",
            Method::ExactSearch => "exact-search",
            Method::BoundsOnly => "bounds-only",
        }
    }
}

/// Knobs for [`lambda_of_group_with`].
#[derive(Debug, Clone)]
pub struct LambdaOptions {
    /// Skip the closed-form and constructive routes and go straight to the
    /// exhaustive solver.
    pub force_exact: bool,
    /// Span cap for the exhaustive solver; defaults to `2(|G| - 1)`, which
    /// no power graph exceeds.
    pub max_span: Option<u64>,
    /// Largest group order fed to the exhaustive solver.
    pub exact_size_limit: usize,
}

impl Default for LambdaOptions {
    fn default() -> LambdaOptions {
        LambdaOptions {
            force_exact: false,
            max_span: None,
            exact_size_limit: 16,
        }
    }
}

/// The outcome of a lambda computation: the value (or bounds), the witness
/// labelling, and how it was obtained.
#[derive(Debug, Clone)]
pub struct LambdaReport {
    pub group: String,
    pub order: u64,
    pub method: Method,
    pub lambda: Option<u64>,
    /// Every power graph satisfies `lambda >= |G|`.
    pub lower_bound: u64,
    pub upper_bound: Option<u64>,
    pub labelling: Option<L21Labelling>,
    pub verified: bool,
    pub detail: String,
}

/// Computes (or bounds) the lambda number of a group's power graph with the
/// default options: closed form for prime-order cyclic groups, the
/// constructive route whenever its preconditions hold, exhaustive search for
/// small leftovers, bounds otherwise.
pub fn lambda_of_group(group: &FiniteGroup, spec: &GroupSpec) -> LambdaReport {
    lambda_of_group_with(group, spec, &LambdaOptions::default())
}

pub fn lambda_of_group_with(
    group: &FiniteGroup,
    spec: &GroupSpec,
    options: &LambdaOptions,
) -> LambdaReport {
    let n = group.order() as u64;
    let pg = build_power_graph(group);
    let mut fallthrough_note = String::new();

    if !options.force_exact {
        if spec.is_cyclic_prime() {
            return closed_form_prime_cyclic(group, spec, &pg);
        }
        let dec = cyclic_classes(group).expect("catalog groups are non-trivial");
        match build_constructive_hamiltonian(group, &dec, &pg) {
            Ok((path, trace)) => {
                let labelling =
                    labelling_from_path(group, &path).expect("validated path fits its group");
                let verified = verify_l21(pg.graph(), &labelling).is_ok();
                assert!(verified, "constructed labelling must verify");
                return LambdaReport {
                    group: spec.to_string(),
                    order: n,
                    method: Method::Constructive,
                    lambda: Some(n),
                    lower_bound: n,
                    upper_bound: Some(n),
                    labelling: Some(labelling),
                    verified,
                    detail: format!(
                        "Hamiltonian path through {} strata with {} junction(s)",
                        trace.block_order.len(),
                        trace.junctions.len()
                    ),
                };
            }
            Err(e) => fallthrough_note = e.to_string(),
        }
    }

    if group.order() <= options.exact_size_limit {
        let cap = options.max_span.unwrap_or(2 * (n - 1));
        match exact_lambda(pg.graph(), cap) {
            ExactLambda::Exact { lambda, witness } => {
                let verified = verify_l21(pg.graph(), &witness).is_ok();
                return LambdaReport {
                    group: spec.to_string(),
                    order: n,
                    method: Method::ExactSearch,
                    lambda: Some(lambda),
                    lower_bound: n,
                    upper_bound: Some(lambda),
                    labelling: Some(witness),
                    verified,
                    detail: format!("exhaustive search over spans up to {cap}"),
                };
            }
            ExactLambda::CapExceeded { cap } => {
                return LambdaReport {
                    group: spec.to_string(),
                    order: n,
                    method: Method::BoundsOnly,
                    lambda: None,
                    lower_bound: n,
                    upper_bound: None,
                    labelling: None,
                    verified: false,
                    detail: format!("no labelling within the span cap {cap}"),
                };
            }
        }
    }

    let detail = if fallthrough_note.is_empty() {
        format!(
            "order {n} exceeds the exact-search size limit {}",
            options.exact_size_limit
        )
    } else {
        format!(
            "{fallthrough_note}; order {n} exceeds the exact-search size limit {}",
            options.exact_size_limit
        )
    };
    LambdaReport {
        group: spec.to_string(),
        order: n,
        method: Method::BoundsOnly,
        lambda: None,
        lower_bound: n,
        upper_bound: None,
        labelling: None,
        verified: false,
        detail,
    }
}

/// `lambda(Z_p) = 2(p - 1)`, witnessed by labelling `a^i` with `2i`.
fn closed_form_prime_cyclic(
    group: &FiniteGroup,
    spec: &GroupSpec,
    pg: &PowerGraph,
) -> LambdaReport {
    let p = group.order() as u64;
    let generator = 1usize; // any non-identity element generates C_p
    let mut labels = BTreeMap::new();
    let mut g = 0usize;
    for i in 0..p {
        labels.insert(g, 2 * i as i64);
        g = group.multiply(g, generator);
    }
    let labelling = L21Labelling::new(labels);
    let verified = verify_l21(pg.graph(), &labelling).is_ok();
    assert!(verified, "arithmetic-progression labelling must verify");
    LambdaReport {
        group: spec.to_string(),
        order: p,
        method: Method::ClosedForm,
        lambda: Some(2 * (p - 1)),
        lower_bound: p,
        upper_bound: Some(2 * (p - 1)),
        labelling: Some(labelling),
        verified,
        detail: "complete power graph of a prime-order cyclic group".to_string(),
    }
}

#[derive(Serialize)]
struct LabelEntry {
    element: String,
    label: i64,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    group: &'a str,
    order: u64,
    method: &'a str,
    span: i64,
    labels: Vec<LabelEntry>,
    verified: bool,
}

/// The labelling witness as deterministic JSON, labels ascending by element
/// index. `None` when the report carries no witness.
pub fn report_to_json(report: &LambdaReport, group: &FiniteGroup) -> Option<String> {
    let labelling = report.labelling.as_ref()?;
    let labels = labelling
        .labels()
        .iter()
        .map(|(&v, &l)| LabelEntry {
            element: group.name(v).to_string(),
            label: l,
        })
        .collect();
    let doc = ReportJson {
        group: &report.group,
        order: report.order,
        method: report.method.as_str(),
        span: labelling.span(),
        labels,
        verified: report.verified,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    Some(text)
}
