//! Dependency graphs on root sets: vertices are roots, edges join
//! non-orthogonal pairs. By the covariance theorem, root sets with no edge
//! between them carry independent indicator families.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::rootsys::{RootId, RootSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyGraph {
    vertices: Vec<RootId>,
    adjacency: BTreeMap<RootId, BTreeSet<RootId>>,
}

impl DependencyGraph {
    pub fn vertices(&self) -> &[RootId] {
        &self.vertices
    }

    pub fn neighbors(&self, v: RootId) -> &BTreeSet<RootId> {
        &self.adjacency[&v]
    }

    pub fn degree(&self, v: RootId) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency
            .values()
            .map(BTreeSet::len)
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(RootId, RootId)> {
        self.adjacency
            .iter()
            .flat_map(|(&u, set)| set.range(u..).map(move |&v| (u, v)))
            .collect()
    }

    /// Sizes of the connected components, descending.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut sizes = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut stack = vec![start];
            let mut size = 0;
            while let Some(v) = stack.pop() {
                size += 1;
                for &u in &self.adjacency[&v] {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Edge list as CSV with header `source,target`.
    pub fn to_csv(&self, rs: &RootSystem) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(["source", "target"])
            .expect("in-memory write");
        for (u, v) in self.edges() {
            w.write_record([rs.render(u), rs.render(v)])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }

    /// Undirected DOT rendering.
    pub fn to_dot(&self, rs: &RootSystem) -> String {
        let mut out = String::from("graph dependency {\n");
        for &v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", rs.render(v)));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                rs.render(u),
                rs.render(v)
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Graph on `psi` (sorted, deduplicated) with an edge for every pair of
/// distinct non-orthogonal roots.
pub fn build_graph(rs: &RootSystem, psi: &[RootId]) -> DependencyGraph {
    let mut vertices = psi.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let adjacency = vertices
        .par_iter()
        .map(|&v| {
            let set: BTreeSet<RootId> = vertices
                .iter()
                .copied()
                .filter(|&u| u != v && rs.inner_product_int(u, v) != 0)
                .collect();
            (v, set)
        })
        .collect();
    DependencyGraph {
        vertices,
        adjacency,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AntichainDegree {
    pub is_antichain: bool,
    pub max_degree: usize,
    pub edge_count: usize,
}

/// Measures the dependency graph of `psi`; for antichains, fails unless the
/// graph has at most `|Ψ| − 1` edges and maximum degree at most 3.
pub fn check_antichain_degree(rs: &RootSystem, psi: &[RootId]) -> Result<AntichainDegree> {
    let g = build_graph(rs, psi);
    let out = AntichainDegree {
        is_antichain: rs.is_antichain(g.vertices()),
        max_degree: g.max_degree(),
        edge_count: g.edge_count(),
    };
    if out.is_antichain {
        let k = g.vertices().len();
        if out.edge_count > k.saturating_sub(1) || out.max_degree > 3 {
            return Err(Error::PropertyViolation(format!(
                "antichain {{{}}} has {} edges and maximum degree {}",
                rs.render_list(g.vertices()),
                out.edge_count,
                out.max_degree
            )));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    pub max_degree: usize,
    /// Largest per-component bound: `4d` for classical components, 5 for G2.
    pub bound: usize,
    /// `(measured, bound)` per component.
    pub per_component: Vec<(usize, usize)>,
}

/// Maximum degree of the dependency graph on `Φ_inv^d`, checked per
/// component against `4d` (classical) or `5` (G2).
pub fn degree_bound_phi_d(rs: &RootSystem, d: u32) -> Result<DegreeBound> {
    let g = build_graph(rs, &rs.roots_up_to_height(d));
    let mut per_component = Vec::new();
    for (c, comp) in rs.spec().components().iter().enumerate() {
        let measured = rs
            .component_range(c)
            .map(|k| g.degree(RootId(k as u32)))
            .max()
            .unwrap_or(0);
        let bound = if comp.family.is_classical() {
            4 * d as usize
        } else {
            5
        };
        if measured > bound {
            return Err(Error::PropertyViolation(format!(
                "component {} of {} has dependency degree {measured} > {bound} at d={d}",
                comp.label(),
                rs.spec()
            )));
        }
        per_component.push((measured, bound));
    }
    Ok(DegreeBound {
        max_degree: g.max_degree(),
        bound: per_component.iter().map(|p| p.1).max().unwrap_or(0),
        per_component,
    })
}
