//! All-pairs hop distances by repeated breadth-first search.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel for unreachable pairs. Never do arithmetic on it.
pub const UNREACHABLE: u16 = u16::MAX;

/// Largest vertex count for which a dense distance matrix is built (512 MiB).
pub const MAX_MATRIX_VERTICES: usize = 16_384;

/// Fails with [`Error::ResourceLimit`] when `n` vertices exceed [`MAX_MATRIX_VERTICES`].
pub fn ensure_matrix_fits(n: usize) -> Result<()> {
    if n > MAX_MATRIX_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "{n} vertices exceed the distance matrix limit of {MAX_MATRIX_VERTICES}"
        )));
    }
    Ok(())
}

/// Dense `n x n` matrix of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
    diameter: usize,
    connected: bool,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(usize::from(d))
    }

    /// Row `u`, with [`UNREACHABLE`] entries for other components.
    pub fn row(&self, u: usize) -> &[u16] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance. For a disconnected graph this is the largest
    /// component diameter.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Largest finite distance from `u`.
    pub fn eccentricity(&self, u: usize) -> usize {
        self.row(u)
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .map(|&d| usize::from(d))
            .max()
            .unwrap_or(0)
    }
}

/// Distances from `source` to every vertex.
pub fn bfs_from(graph: &Graph, source: usize) -> Vec<u16> {
    let mut row = vec![UNREACHABLE; graph.vertex_count()];
    let mut queue = Vec::with_capacity(graph.vertex_count());
    bfs_into(graph, source, &mut row, &mut queue);
    row
}

fn bfs_into(graph: &Graph, source: usize, row: &mut [u16], queue: &mut Vec<usize>) {
    row.fill(UNREACHABLE);
    queue.clear();
    row[source] = 0;
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        debug_assert_ne!(
            row[u], UNREACHABLE,
            "arithmetic on the unreachable sentinel"
        );
        let next = row[u] + 1;
        for &v in graph.neighbors(u) {
            if row[v] == UNREACHABLE {
                row[v] = next;
                queue.push(v);
            }
        }
    }
}

/// BFS from every vertex. Rows are filled in parallel; each source owns its row.
pub fn all_pairs(graph: &Graph) -> DistanceMatrix {
    let n = graph.vertex_count();
    assert!(
        n < usize::from(UNREACHABLE),
        "graph too large for u16 distances"
    );
    let mut dist = vec![UNREACHABLE; n * n];
    if n > 0 {
        dist.par_chunks_mut(n)
            .enumerate()
            .for_each_init(Vec::new, |queue, (source, row)| {
                bfs_into(graph, source, row, queue)
            });
    }
    let connected = !dist.contains(&UNREACHABLE);
    let diameter = dist
        .iter()
        .filter(|&&d| d != UNREACHABLE)
        .map(|&d| usize::from(d))
        .max()
        .unwrap_or(0);
    DistanceMatrix {
        n,
        dist,
        diameter,
        connected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_rows() {
        let k4 = Graph::complete(4);
        let row = bfs_from(&k4, 2);
        assert_eq!(row, vec![1, 1, 0, 1]);
    }

    #[test]
    fn cycle_distances() {
        let c6 = Graph::cycle(6);
        assert_eq!(bfs_from(&c6, 0), vec![0, 1, 2, 3, 2, 1]);
        assert_eq!(all_pairs(&c6).diameter(), 3);
    }

    #[test]
    fn k2_diameter_one() {
        let d = all_pairs(&Graph::complete(2));
        assert_eq!(d.diameter(), 1);
        assert!(d.is_connected());
    }

    #[test]
    fn disconnected_flagged() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = all_pairs(&g);
        assert!(!d.is_connected());
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.get(0, 1), Some(1));
        assert_eq!(d.diameter(), 1);
    }
}
