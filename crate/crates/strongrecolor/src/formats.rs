//! JSON shapes for graphs, colourings, schedules, certificates and verdicts.
//!
//! Colourings are plain integer arrays; the number of colours travels
//! separately (it is always known from the command line).

use serde::{Deserialize, Serialize};
use strongrecolor_core::{
    Bipartition, Certificate, Colouring, ComponentSummary, Graph, RecolourStep, Schedule, Verdict, Witness,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] strongrecolor_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().collect(), labels: g.labels().map(<[String]>::to_vec) }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = strongrecolor_core::Error;

    fn try_from(j: GraphJson) -> Result<Self, Self::Error> {
        let g = Graph::new(j.n, j.edges)?;
        match j.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub vertex: usize,
    pub from: u8,
    pub to: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleJson {
    pub start: Vec<u8>,
    pub steps: Vec<StepJson>,
}

impl From<&Schedule> for ScheduleJson {
    fn from(s: &Schedule) -> Self {
        ScheduleJson {
            start: s.start.colours().to_vec(),
            steps: s.steps.iter().map(|st| StepJson { vertex: st.vertex, from: st.from, to: st.to }).collect(),
        }
    }
}

impl ScheduleJson {
    pub fn into_schedule(self, k: usize) -> Result<Schedule, strongrecolor_core::Error> {
        Ok(Schedule {
            start: Colouring::new(self.start, k)?,
            steps: self.steps.into_iter().map(|s| RecolourStep { vertex: s.vertex, from: s.from, to: s.to }).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateJson {
    BipartiteSwap { part_a: Vec<usize>, part_b: Vec<usize>, colour: u8 },
    CycleWeight { cycle: Vec<usize>, weight_alpha: i64, weight_beta: i64 },
    FrozenVertex { vertex: usize },
    Exhaustive { component_alpha: usize, component_beta: usize },
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        match c.clone() {
            Certificate::BipartiteSwap { bipartition, colour } => {
                CertificateJson::BipartiteSwap { part_a: bipartition.part_a, part_b: bipartition.part_b, colour }
            }
            Certificate::CycleWeight { cycle, weight_alpha, weight_beta } => {
                CertificateJson::CycleWeight { cycle, weight_alpha, weight_beta }
            }
            Certificate::FrozenVertex { vertex } => CertificateJson::FrozenVertex { vertex },
            Certificate::Exhaustive { component_alpha, component_beta } => {
                CertificateJson::Exhaustive { component_alpha, component_beta }
            }
        }
    }
}

impl From<CertificateJson> for Certificate {
    fn from(c: CertificateJson) -> Self {
        match c {
            CertificateJson::BipartiteSwap { part_a, part_b, colour } => {
                Certificate::BipartiteSwap { bipartition: Bipartition { part_a, part_b }, colour }
            }
            CertificateJson::CycleWeight { cycle, weight_alpha, weight_beta } => {
                Certificate::CycleWeight { cycle, weight_alpha, weight_beta }
            }
            CertificateJson::FrozenVertex { vertex } => Certificate::FrozenVertex { vertex },
            CertificateJson::Exhaustive { component_alpha, component_beta } => {
                Certificate::Exhaustive { component_alpha, component_beta }
            }
        }
    }
}

/// Two colourings and the certificate separating them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationJson {
    pub alpha: Vec<u8>,
    pub beta: Vec<u8>,
    pub certificate: CertificateJson,
}

impl SeparationJson {
    pub fn new(alpha: &Colouring, beta: &Colouring, certificate: &Certificate) -> Self {
        SeparationJson {
            alpha: alpha.colours().to_vec(),
            beta: beta.colours().to_vec(),
            certificate: certificate.into(),
        }
    }

    pub fn into_parts(self, k: usize) -> Result<(Colouring, Colouring, Certificate), strongrecolor_core::Error> {
        Ok((Colouring::new(self.alpha, k)?, Colouring::new(self.beta, k)?, self.certificate.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Separation(SeparationJson),
    Components { component_count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub connected: bool,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        let witness = v.witness.as_ref().map(|w| match w {
            Witness::Separation { alpha, beta, certificate } => {
                WitnessJson::Separation(SeparationJson::new(alpha, beta, certificate))
            }
            Witness::ComponentCount(c) => WitnessJson::Components { component_count: *c },
        });
        VerdictJson { connected: v.connected, reason: v.reason.as_str().to_owned(), witness }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub size: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_cycle: bool,
}

impl From<&ComponentSummary> for ComponentJson {
    fn from(s: &ComponentSummary) -> Self {
        ComponentJson {
            size: s.size,
            edges: s.edges,
            min_degree: s.min_degree,
            max_degree: s.max_degree,
            is_cycle: s.is_cycle,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data always serialises");
    s.push('\n');
    s
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let j: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::try_from(j)?)
}

pub fn read_schedule(text: &str, k: usize) -> Result<Schedule, FormatError> {
    let j: ScheduleJson = serde_json::from_str(text)?;
    Ok(j.into_schedule(k)?)
}
