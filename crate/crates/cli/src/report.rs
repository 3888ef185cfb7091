//! Machine-readable run reports.
//!
//! Every subcommand prints exactly one JSON object on stdout in the
//! shape pinned by `schema/report.schema.json`, which ships with the
//! crate so downstream tooling can validate captured output.

use ramsey_core::Witness;
use serde::Serialize;
use serde_json::{Map, Value};
use std::time::Instant;

/// The shared JSON schema, embedded verbatim from the repository copy.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

/// One run report: which command ran, with which inputs, and what came
/// out of it.
#[derive(Debug, Serialize)]
pub struct Report {
    /// Subcommand name, e.g. `"extract"`.
    pub command: String,
    /// Echo of the parsed inputs, including defaulted values.
    pub inputs: Map<String, Value>,
    /// The certificate, when the run produced one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    /// Result of re-checking the outcome against the board; always
    /// present (and `true`) when a witness is reported.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validated: Option<bool>,
    /// Pipeline stage that gave up, for runs that end without a witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
    /// Command-specific extras (bounds, counterexamples, …).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    /// Wall-clock timings.
    pub timings: Timings,
}

/// Wall-clock timings for the run.
#[derive(Debug, Serialize)]
pub struct Timings {
    /// Total time from argument parsing to report emission, in
    /// milliseconds.
    pub total_ms: f64,
}

/// JSON face of a [`Witness`].
#[derive(Debug, Serialize)]
pub struct WitnessReport {
    /// `"red_cycle"` or `"blue_copy"`.
    #[serde(rename = "type")]
    pub kind: String,
    /// Cycle vertices in board order (red cycles only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    /// `map[i]` = board vertex playing target vertex `i` (blue copies
    /// only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
}

impl WitnessReport {
    /// Converts a library witness into its report shape.
    pub fn from_witness(witness: &Witness) -> Self {
        match witness {
            Witness::RedCycle(vertices) => WitnessReport {
                kind: witness.kind().to_string(),
                vertices: Some(vertices.clone()),
                map: None,
            },
            Witness::BlueCopy(embedding) => WitnessReport {
                kind: witness.kind().to_string(),
                vertices: None,
                map: Some(embedding.map().to_vec()),
            },
        }
    }
}

impl Report {
    /// Starts a report with no outcome fields filled in.
    pub fn new(command: &str, inputs: Map<String, Value>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            witness: None,
            validated: None,
            stage: None,
            details: None,
            timings: Timings { total_ms: 0.0 },
        }
    }

    /// Stamps the total wall-clock time and prints the report as pretty
    /// JSON on stdout.
    pub fn finish(mut self, started: Instant) {
        self.timings.total_ms = started.elapsed().as_secs_f64() * 1000.0;
        println!(
            "{}",
            serde_json::to_string_pretty(&self).expect("report serialization cannot fail")
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_core::Embedding;

    #[test]
    fn witness_reports_carry_one_payload_each() {
        let cycle = Witness::RedCycle(vec![4, 1, 3]);
        let report = WitnessReport::from_witness(&cycle);
        assert_eq!(report.kind, "red_cycle");
        assert_eq!(report.vertices, Some(vec![4, 1, 3]));
        assert!(report.map.is_none());

        let copy = Witness::BlueCopy(Embedding::from_map(vec![2, 0, 5]));
        let report = WitnessReport::from_witness(&copy);
        assert_eq!(report.kind, "blue_copy");
        assert!(report.vertices.is_none());
        assert_eq!(report.map, Some(vec![2, 0, 5]));
    }

    #[test]
    fn reports_serialize_without_null_noise() {
        let mut inputs = Map::new();
        inputs.insert("k".into(), 5.into());
        let report = Report::new("bounds", inputs);
        let json = serde_json::to_value(&report).unwrap();
        let object = json.as_object().unwrap();
        assert_eq!(
            object.keys().collect::<Vec<_>>(),
            ["command", "inputs", "timings"]
        );
    }

    #[test]
    fn embedded_schema_is_valid_json() {
        let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
        assert_eq!(schema["properties"]["command"]["type"], "string");
    }
}
