//! Experiment reports: one row per case, rows kept in input order.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Row {
    pub case: String,
    pub inputs: Value,
    pub values: Map<String, Value>,
    pub claim: String,
    pub pass: bool,
    pub error: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExperimentReport {
    pub schema: u32,
    pub experiment: String,
    pub parameters: Value,
    pub rows: Vec<Row>,
}

/// Computed values and the verdict for one case.
pub struct Outcome {
    pub values: Map<String, Value>,
    pub pass: bool,
}

impl Outcome {
    pub fn new(pass: bool) -> Self {
        Outcome {
            values: Map::new(),
            pass,
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.values.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable value"),
        );
        self
    }
}

/// One case of an experiment, evaluated lazily.
pub struct Case {
    pub name: String,
    pub inputs: Value,
    pub claim: String,
    pub run: Box<dyn Fn() -> anyhow::Result<Outcome> + Send + Sync>,
}

impl Case {
    pub fn new(
        name: impl Into<String>,
        inputs: Value,
        claim: impl Into<String>,
        run: impl Fn() -> anyhow::Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Case {
            name: name.into(),
            inputs,
            claim: claim.into(),
            run: Box::new(run),
        }
    }

    fn evaluate(&self) -> Row {
        let start = Instant::now();
        let result = (self.run)();
        let millis = start.elapsed().as_millis() as u64;
        let (values, pass, error) = match result {
            Ok(o) => (o.values, o.pass, None),
            Err(e) => (Map::new(), false, Some(format!("{e:#}"))),
        };
        Row {
            case: self.name.clone(),
            inputs: self.inputs.clone(),
            values,
            claim: self.claim.clone(),
            pass,
            error,
            millis,
        }
    }
}

impl ExperimentReport {
    /// Runs the cases concurrently; rows follow the order of `cases`.
    pub fn run(experiment: &str, parameters: Value, cases: Vec<Case>) -> Self {
        let rows = cases.par_iter().map(Case::evaluate).collect();
        ExperimentReport {
            schema: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            parameters,
            rows,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Header plus one line per row; `inputs` and `values` as compact JSON.
    pub fn to_tsv(&self) -> String {
        let mut out =
            String::from("experiment\tcase\tclaim\tpass\tmillis\terror\tinputs\tvalues\n");
        for r in &self.rows {
            let clean = |s: &str| s.replace(['\t', '\n'], " ");
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                self.experiment,
                clean(&r.case),
                clean(&r.claim),
                r.pass,
                r.millis,
                clean(r.error.as_deref().unwrap_or("")),
                r.inputs,
                Value::Object(r.values.clone()),
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rows_keep_input_order_and_capture_errors() {
        let cases = (0..20)
            .map(|i| {
                Case::new(format!("c{i}"), json!({ "i": i }), "even", move || {
                    if i == 7 {
                        anyhow::bail!("cap exceeded");
                    }
                    Ok(Outcome::new(true).with("i", i))
                })
            })
            .collect();
        let report = ExperimentReport::run("demo", json!({}), cases);
        let names: Vec<_> = report.rows.iter().map(|r| r.case.as_str()).collect();
        assert_eq!(names[..3], ["c0", "c1", "c2"]);
        assert!(!report.all_pass());
        assert_eq!(report.failures().count(), 1);
        assert_eq!(report.rows[7].error.as_deref(), Some("cap exceeded"));
        let tsv = report.to_tsv();
        assert_eq!(tsv.lines().count(), 21);
        let back: ExperimentReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }
}
