//! Boundaries of plumbings of disk bundles over surfaces.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{cokernel, AbelianGroup, IntegerMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlumbingVertex {
    pub genus: usize,
    pub euler_number: i64,
}

/// Disk bundles (vertices) plumbed once along each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<PlumbingVertex>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<PlumbingVertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPlumbing);
        }
        let mut seen = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u == v || u >= vertices.len() || v >= vertices.len() {
                return Err(Error::InvalidPlumbingEdge(u, v));
            }
            let key = (u.min(v), u.max(v));
            if seen.contains(&key) {
                return Err(Error::DuplicatePlumbingEdge(u, v));
            }
            seen.push(key);
        }
        Ok(Self { vertices, edges })
    }

    /// `(genus g, euler 0) — (genus 0, euler 2)`.
    pub fn stein_boundary(g: usize) -> Self {
        Self::new(
            vec![
                PlumbingVertex { genus: g, euler_number: 0 },
                PlumbingVertex { genus: 0, euler_number: 2 },
            ],
            vec![(0, 1)],
        )
        .expect("two vertices joined by one edge")
    }

    pub fn vertices(&self) -> &[PlumbingVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let next = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !reached[next] {
                    reached[next] = true;
                    stack.push(next);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// Euler numbers on the diagonal, edge counts off it.
    pub fn intersection_matrix(&self) -> IntegerMatrix {
        let n = self.vertices.len();
        let mut q = IntegerMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            q.set(i, i, BigInt::from(v.euler_number));
        }
        for &(a, b) in &self.edges {
            let x: BigInt = q.get(a, b) + 1;
            q.set(a, b, x.clone());
            q.set(b, a, x);
        }
        q
    }

    /// First Betti number of the graph itself.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }
}

/// `H_1` of the boundary 3-manifold: `Z^{2Σg + b_1(graph)} ⊕ coker(Q)`.
pub fn plumbing_boundary_h1(p: &PlumbingGraph) -> Result<AbelianGroup> {
    if !p.is_connected() {
        return Err(Error::DisconnectedPlumbing);
    }
    let genus_rank: usize = p.vertices.iter().map(|v| 2 * v.genus).sum();
    Ok(AbelianGroup::free(genus_rank + p.cycle_rank()).direct_sum(&cokernel(&p.intersection_matrix())))
}
