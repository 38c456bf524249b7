//! JSON shapes. Field order is the output order; infinite values print as
//! `null`.

use std::collections::BTreeMap;

use approxroot::branch::CharData;
use approxroot::char_roots::RootsReport;
use approxroot::resolution::DualGraph;
use approxroot::Extended;
use serde::Serialize;

pub fn ext(v: Extended<u64>) -> Option<u64> {
    v.finite()
}

#[derive(Serialize)]
pub struct RootOut {
    pub p: usize,
    pub root: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
}

#[derive(Serialize)]
pub struct CharOut {
    #[serde(rename = "B")]
    pub b: Vec<i64>,
    #[serde(rename = "E")]
    pub e: Vec<u64>,
    #[serde(rename = "Nseq")]
    pub n_seq: Vec<u64>,
    #[serde(rename = "Bbar")]
    pub bbar: Vec<i64>,
    pub genus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersections: Option<Vec<Option<u64>>>,
}

impl CharOut {
    pub fn new(cd: &CharData, report: Option<&RootsReport>) -> Self {
        CharOut {
            b: cd.b.clone(),
            e: cd.e.clone(),
            n_seq: cd.n_seq.clone(),
            bbar: cd.bbar.clone(),
            genus: cd.genus,
            roots: report.map(|r| r.roots.iter().map(|f| f.to_string()).collect()),
            intersections: report.map(|r| r.intersections.iter().map(|&v| ext(v)).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct CurveOut {
    pub curve: String,
}

#[derive(Serialize)]
pub struct SemirootOut {
    pub k: usize,
    pub semiroot: String,
    pub intersection: Option<u64>,
}

#[derive(Serialize)]
pub struct SemirootTestOut {
    pub k: usize,
    pub semiroot: bool,
    pub intersection: Option<u64>,
}

#[derive(Serialize)]
pub struct TermOut {
    pub digits: Vec<usize>,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct ExpandOut {
    pub roots: Vec<String>,
    pub terms: Vec<TermOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection: Option<Option<u64>>,
}

#[derive(Serialize)]
pub struct VertexOut {
    pub id: usize,
    pub phi: u64,
    pub mu: u64,
}

#[derive(Serialize)]
pub struct GraphOut {
    pub vertices: Vec<VertexOut>,
    pub edges: Vec<[usize; 2]>,
    pub arrowheads: BTreeMap<String, usize>,
    pub horizontal: Vec<usize>,
    pub vertical: Vec<Vec<usize>>,
    pub distinguished: Vec<usize>,
}

impl GraphOut {
    pub fn new(g: &DualGraph) -> Self {
        GraphOut {
            vertices: g.vertices.iter().map(|v| VertexOut { id: v.id, phi: v.phi, mu: v.mu }).collect(),
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
            arrowheads: g.arrowheads.clone(),
            horizontal: g.segments.horizontal.clone(),
            vertical: g.segments.vertical.clone(),
            distinguished: g.distinguished(),
        }
    }
}

#[derive(Serialize)]
pub struct EpiOut {
    pub epimorphism: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct StrictOut {
    pub gamma: i64,
    pub digits: Option<Vec<u64>>,
}

#[derive(Serialize)]
pub struct MeromOut {
    #[serde(rename = "N")]
    pub n: u64,
    pub y: String,
    #[serde(flatten)]
    pub data: CharOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansions: Option<Vec<StrictOut>>,
}
