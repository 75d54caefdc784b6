//! Oriented trivalent graphs, the transverse curves crossing them, and the
//! built-in surface presets.

use crate::error::{KernelError, Result};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// An oriented edge `src -> dst`. Loops are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
}

/// An oriented trivalent graph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriGraph {
    vertices: usize,
    edges: Vec<Edge>,
}

impl TriGraph {
    /// Builds and validates a graph: every vertex trivalent, connected,
    /// and no edge whose removal disconnects it.
    pub fn new(vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        let g = Self { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    /// First Betti number `|E| - |V| + 1` of the connected graph.
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices
    }

    /// Half-edges at `v` as `(edge, sign)`, where the sign is `+1` when the
    /// edge leaves `v`. A loop contributes two half-edges.
    pub fn half_edges(&self, v: usize) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.src == v {
                out.push((i, 1));
            }
            if e.dst == v {
                out.push((i, -1));
            }
        }
        out
    }

    /// `+1` if `e` leaves `v`, `-1` if it enters.
    pub fn orientation_at(&self, e: usize, v: usize) -> i64 {
        if self.edges[e].src == v {
            1
        } else {
            -1
        }
    }

    fn connected_without(&self, skip: Option<usize>) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (i, e) in self.edges.iter().enumerate() {
                if Some(i) == skip {
                    continue;
                }
                for (a, b) in [(e.src, e.dst), (e.dst, e.src)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn validate(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(KernelError::InvalidGraph("graph has no vertices".into()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.src >= self.vertices || e.dst >= self.vertices {
                return Err(KernelError::InvalidGraph(format!("edge {i} references a missing vertex")));
            }
        }
        for v in 0..self.vertices {
            let deg = self.half_edges(v).len();
            if deg != 3 {
                return Err(KernelError::InvalidGraph(format!("vertex {v} has degree {deg}, expected 3")));
            }
        }
        if !self.connected_without(None) {
            return Err(KernelError::InvalidGraph("graph is disconnected".into()));
        }
        if let Some(e) = (0..self.edges.len()).find(|&e| !self.connected_without(Some(e))) {
            return Err(KernelError::InvalidGraph(format!("edge {e} separates the graph")));
        }
        Ok(())
    }
}

/// One edge crossed by a curve, with `sign = +1` when the curve runs along
/// the edge orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub edge: usize,
    pub sign: i64,
}

/// A curve passing near a vertex: it arrives along `incoming`, leaves
/// along `outgoing`, and `flank` is the third edge at that vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub vertex: usize,
    pub outgoing: usize,
    pub incoming: usize,
    pub flank: usize,
    /// Orientations at `vertex` (`+1` for an edge leaving it) of the
    /// outgoing, incoming and flanking half-edges.
    pub signs: [i64; 3],
}

/// A transverse curve given by the cycle it follows in the graph: crossed
/// edges in cyclic order with directions, and one flanking edge for each
/// vertex between consecutive crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaCurve {
    pub name: String,
    crossings: Vec<Crossing>,
    flanks: Vec<usize>,
    passages: Vec<Passage>,
}

impl BetaCurve {
    /// Validates the cycle against `graph` and derives its passages.
    pub fn new(graph: &TriGraph, name: impl Into<String>, crossings: Vec<Crossing>, flanks: Vec<usize>) -> Result<Self> {
        let name = name.into();
        let bad = |msg: String| KernelError::InvalidGraph(format!("curve {name}: {msg}"));
        if crossings.is_empty() {
            return Err(bad("no crossed edges".into()));
        }
        if flanks.len() != crossings.len() {
            return Err(bad(format!("{} crossings but {} flanks", crossings.len(), flanks.len())));
        }
        let mut seen = vec![false; graph.edge_count()];
        for c in &crossings {
            if c.edge >= graph.edge_count() {
                return Err(bad(format!("edge {} does not exist", c.edge)));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(bad(format!("crossing sign {} is not +1 or -1", c.sign)));
            }
            if core::mem::replace(&mut seen[c.edge], true) {
                return Err(bad(format!("edge {} crossed twice", c.edge)));
            }
        }
        let head = |c: &Crossing| if c.sign == 1 { graph.edge(c.edge).dst } else { graph.edge(c.edge).src };
        let tail = |c: &Crossing| if c.sign == 1 { graph.edge(c.edge).src } else { graph.edge(c.edge).dst };
        let mut passages = Vec::with_capacity(crossings.len());
        for (i, c) in crossings.iter().enumerate() {
            let next = &crossings[(i + 1) % crossings.len()];
            let v = head(c);
            if tail(next) != v {
                return Err(bad(format!("edges {} and {} do not meet head to tail", c.edge, next.edge)));
            }
            let flank = flanks[i];
            let mut rest = graph.half_edges(v);
            for used in [(c.edge, -c.sign), (next.edge, next.sign)] {
                match rest.iter().position(|h| *h == used) {
                    Some(p) => {
                        rest.remove(p);
                    }
                    None => return Err(bad(format!("vertex {v} lacks the half-edge of edge {}", used.0))),
                }
            }
            if rest.len() != 1 || rest[0].0 != flank {
                return Err(bad(format!("flank {flank} is not the third edge at vertex {v}")));
            }
            let signs = [next.sign, -c.sign, rest[0].1];
            passages.push(Passage { vertex: v, outgoing: next.edge, incoming: c.edge, flank, signs });
        }
        Ok(Self { name, crossings, flanks, passages })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn flanks(&self) -> &[usize] {
        &self.flanks
    }

    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    /// The cycle as a vector over the edges with entries in `{-1, 0, 1}`.
    pub fn cycle(&self, edges: usize) -> Vec<i64> {
        let mut out = vec![0; edges];
        for c in &self.crossings {
            out[c.edge] = c.sign;
        }
        out
    }

    /// Crossed edges in increasing order.
    pub fn crossed_edges(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.crossings.iter().map(|c| c.edge).collect();
        e.sort_unstable();
        e
    }

    /// Whether the curve crosses edge `e`.
    pub fn crosses(&self, e: usize) -> bool {
        self.crossings.iter().any(|c| c.edge == e)
    }
}

/// A closed surface of genus `g` presented by a trivalent graph in a
/// handlebody, its pants curves (one per edge) and transverse curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePreset {
    pub genus: usize,
    pub graph: TriGraph,
    pub betas: Vec<BetaCurve>,
}

impl SurfacePreset {
    /// Checks the counts `2g - 2` vertices, `3g - 3` edges, Betti number `g`.
    pub fn new(genus: usize, graph: TriGraph, betas: Vec<BetaCurve>) -> Result<Self> {
        if genus < 2 {
            return Err(KernelError::InvalidGraph(format!("genus {genus} is below 2")));
        }
        if graph.vertex_count() != 2 * genus - 2 || graph.edge_count() != 3 * genus - 3 {
            return Err(KernelError::InvalidGraph(format!(
                "genus {genus} needs {} vertices and {} edges, got {} and {}",
                2 * genus - 2,
                3 * genus - 3,
                graph.vertex_count(),
                graph.edge_count()
            )));
        }
        if betas.is_empty() {
            return Err(KernelError::InvalidGraph("no transverse curves".into()));
        }
        Ok(Self { genus, graph, betas })
    }

    pub fn beta(&self, name: &str) -> Option<&BetaCurve> {
        self.betas.iter().find(|b| b.name == name)
    }
}

fn edges(list: &[(usize, usize)]) -> Vec<Edge> {
    list.iter().map(|&(src, dst)| Edge { src, dst }).collect()
}

fn curve(g: &TriGraph, name: &str, cross: &[(usize, i64)], flanks: &[usize]) -> Result<BetaCurve> {
    let crossings = cross.iter().map(|&(edge, sign)| Crossing { edge, sign }).collect();
    BetaCurve::new(g, name, crossings, flanks.to_vec())
}

/// Built-in presets: the theta graph for genus 2 and the doubled ladder
/// for genus 3. Higher genus needs a fixture.
pub fn preset(genus: usize) -> Result<SurfacePreset> {
    match genus {
        2 => {
            let g = TriGraph::new(2, edges(&[(0, 1), (0, 1), (0, 1)]))?;
            let betas = vec![curve(&g, "beta_1", &[(0, 1), (1, -1)], &[2, 2])?, curve(&g, "beta_2", &[(1, 1), (2, -1)], &[0, 0])?];
            SurfacePreset::new(2, g, betas)
        }
        3 => {
            let g = TriGraph::new(4, edges(&[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)]))?;
            let betas = vec![
                curve(&g, "beta_1", &[(0, 1), (1, -1)], &[5, 4])?,
                curve(&g, "beta_2", &[(2, 1), (3, -1)], &[5, 4])?,
                curve(&g, "beta_3", &[(0, 1), (5, 1), (2, -1), (4, -1)], &[1, 3, 3, 1])?,
                curve(&g, "beta_4", &[(1, 1), (5, 1), (3, -1), (4, -1)], &[0, 2, 2, 0])?,
            ];
            SurfacePreset::new(3, g, betas)
        }
        g if g < 2 => Err(KernelError::InvalidGraph(format!("genus {g} is below 2"))),
        g => Err(KernelError::Unsupported(format!("no built-in preset for genus {g}; supply a fixture"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_passages_follow_the_cycle() {
        let p = preset(2).unwrap();
        let b = &p.betas[0];
        assert_eq!(b.passages()[0], Passage { vertex: 1, outgoing: 1, incoming: 0, flank: 2, signs: [-1, -1, -1] });
        assert_eq!(b.passages()[1], Passage { vertex: 0, outgoing: 0, incoming: 1, flank: 2, signs: [1, 1, 1] });
        assert_eq!(b.cycle(3), vec![1, -1, 0]);
    }

    #[test]
    fn ladder_curves_match_their_vertices() {
        let p = preset(3).unwrap();
        let c = &p.betas[2];
        let v: Vec<usize> = c.passages().iter().map(|p| p.vertex).collect();
        assert_eq!(v, vec![1, 3, 2, 0]);
        assert_eq!(p.graph.betti(), 3);
    }

    #[test]
    fn separating_edge_is_rejected() {
        // the dumbbell: two loops joined by a bridge
        let g = TriGraph::new(2, edges(&[(0, 0), (0, 1), (1, 1)]));
        assert!(matches!(g, Err(KernelError::InvalidGraph(m)) if m.contains("separates")));
    }
}
