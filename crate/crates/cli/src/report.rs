//! Machine-readable output objects.

use serde::Serialize;

use segre_core::{ChernFultonResult, SegreRun};

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub ring: Vec<String>,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub generators: usize,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub per_d_ms: Vec<u64>,
    pub total_ms: u64,
}

/// The single JSON object emitted by the segre family of commands.
/// Everything outside `timings` is deterministic for a fixed seed.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub input: InputEcho,
    pub k: i64,
    pub n: i64,
    pub m: u32,
    pub seed: u64,
    pub strategy: String,
    pub segre: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chern_fulton: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
    pub residual_degrees: Vec<i64>,
    pub timings: Timings,
}

impl RunReport {
    pub fn new(
        input: InputEcho,
        run: &SegreRun,
        chern: Option<&ChernFultonResult>,
        total_ms: u64,
    ) -> Self {
        RunReport {
            input,
            k: run.result.k,
            n: run.result.n,
            m: run.result.m,
            seed: run.result.seed,
            strategy: run.result.strategy.to_string(),
            segre: run.result.segre_degrees.clone(),
            chern_fulton: chern.map(|c| c.chern_fulton_degrees.clone()),
            euler: chern.map(|c| c.euler),
            residual_degrees: run.result.residual_degrees.clone(),
            timings: Timings {
                per_d_ms: run
                    .step_times
                    .iter()
                    .map(|d| d.as_millis().min(u64::MAX as u128) as u64)
                    .collect(),
                total_ms,
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DimDegReport {
    pub input: InputEcho,
    pub k: i64,
    pub proj_dim: i64,
    pub degree: i64,
    pub timings: Timings,
}
