//! Graph fixtures and boundary data files.

use crate::error::{CliError, CliResult};
use crate::serial::{parse_rational, SCHEMA};
use serde::{Deserialize, Serialize};
use skein_core::skein::{BetaCurve, Crossing, Edge, OmegaData, SurfacePreset, TriGraph};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: usize,
    pub src: i64,
    pub dst: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub edge: usize,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub id: String,
    pub crossings: Vec<CrossingJson>,
    /// One flanking edge per vertex the curve passes, in crossing order.
    pub flanks: Vec<usize>,
}

/// A trivalent graph with its transverse curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    #[serde(default = "schema")]
    pub schema: String,
    pub vertices: Vec<i64>,
    pub edges: Vec<EdgeJson>,
    /// Cyclic order of edge ids at each vertex. Checked against the
    /// incidences; the operators themselves only use the curve data.
    #[serde(default)]
    pub rotation: BTreeMap<String, Vec<usize>>,
    pub beta: Vec<CurveJson>,
}

fn schema() -> String {
    SCHEMA.into()
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.display().to_string(), source })
}

impl FixtureFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        read_json(path)
    }

    /// Builds and validates the surface.
    pub fn to_preset(&self) -> CliResult<SurfacePreset> {
        let index: BTreeMap<i64, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if index.len() != self.vertices.len() {
            return Err(CliError::Inadmissible("duplicate vertex ids".into()));
        }
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| e.id);
        if edges.iter().enumerate().any(|(i, e)| e.id != i) {
            return Err(CliError::Inadmissible("edge ids must be 0..E-1".into()));
        }
        let lookup = |v: i64| index.get(&v).copied().ok_or_else(|| CliError::Inadmissible(format!("unknown vertex {v}")));
        let edges = edges.iter().map(|e| Ok(Edge { src: lookup(e.src)?, dst: lookup(e.dst)? })).collect::<CliResult<Vec<_>>>()?;
        let graph = TriGraph::new(self.vertices.len(), edges)?;
        for (v, order) in &self.rotation {
            let vi = v.parse::<i64>().ok().and_then(|v| index.get(&v).copied());
            let vi = vi.ok_or_else(|| CliError::Inadmissible(format!("rotation names unknown vertex {v}")))?;
            let mut want: Vec<usize> = graph.half_edges(vi).into_iter().map(|(e, _)| e).collect();
            let mut got = order.clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(CliError::Inadmissible(format!("rotation at vertex {v} does not list its half-edges")));
            }
        }
        let betas = self
            .beta
            .iter()
            .map(|c| {
                let crossings = c.crossings.iter().map(|x| Crossing { edge: x.edge, sign: x.sign }).collect();
                BetaCurve::new(&graph, c.id.clone(), crossings, c.flanks.clone())
            })
            .collect::<Result<Vec<_>, _>>()?;
        let e = graph.edge_count();
        if e % 3 != 0 {
            return Err(CliError::Inadmissible(format!("{e} edges is not 3g - 3")));
        }
        Ok(SurfacePreset::new(e / 3 + 1, graph, betas)?)
    }

    pub fn from_preset(p: &SurfacePreset) -> Self {
        let g = &p.graph;
        let edges =
            g.edges().iter().enumerate().map(|(id, e)| EdgeJson { id, src: e.src as i64, dst: e.dst as i64 }).collect();
        let rotation =
            (0..g.vertex_count()).map(|v| (v.to_string(), g.half_edges(v).into_iter().map(|(e, _)| e).collect())).collect();
        let beta = p
            .betas
            .iter()
            .map(|b| CurveJson {
                id: b.name.clone(),
                crossings: b.crossings().iter().map(|c| CrossingJson { edge: c.edge, sign: c.sign }).collect(),
                flanks: b.flanks().to_vec(),
            })
            .collect();
        Self { schema: schema(), vertices: (0..g.vertex_count() as i64).collect(), edges, rotation, beta }
    }
}

/// Boundary values, either per edge or as coefficients of the transverse
/// cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaFile {
    #[serde(default = "schema")]
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<String>>,
}

impl OmegaFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        read_json(path)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|source| CliError::Json { path: "<inline>".into(), source })
    }

    pub fn to_omega(&self, preset: &SurfacePreset) -> CliResult<OmegaData> {
        let parse = |v: &Vec<String>| v.iter().map(|s| parse_rational(s)).collect::<CliResult<Vec<_>>>();
        match (&self.omega, &self.cycles) {
            (Some(values), None) => Ok(OmegaData::new(&preset.graph, parse(values)?)?),
            (None, Some(t)) => Ok(OmegaData::from_cycles(preset, &parse(t)?)?),
            _ => Err(CliError::Inadmissible("give exactly one of \"omega\" and \"cycles\"".into())),
        }
    }
}
