use serde::{Deserialize, Serialize};

use dispersion_core::{DispersionResult, Dist2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRef {
    pub i: usize,
    pub j: usize,
}

/// JSON report of one solver run.
///
/// For point inputs `value2` is the squared max-min distance and `value` its
/// square root. For weighted graphs `value` is the max-min edge weight and
/// `value2` is absent. Both are absent for `k = 1` (unbounded).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algo: String,
    pub n: usize,
    pub d: Option<usize>,
    pub k: usize,
    pub value: Option<f64>,
    pub value2: Option<f64>,
    pub indices: Vec<usize>,
    pub closest_pair: Option<PairRef>,
    pub status: String,
    pub elapsed_ms: f64,
    pub seed: Option<u64>,
    pub config: serde_json::Value,
}

impl RunReport {
    pub fn from_points(
        result: &DispersionResult<f64>,
        n: usize,
        d: usize,
        elapsed_ms: f64,
    ) -> Self {
        let value2 = match result.value2 {
            Dist2::Finite(v) => Some(v),
            Dist2::Infinite => None,
        };
        RunReport {
            algo: result.algo.to_string(),
            n,
            d: Some(d),
            k: result.k,
            value: value2.map(f64::sqrt),
            value2,
            indices: result.indices.clone(),
            closest_pair: result.closest_pair.map(|w| PairRef { i: w.i, j: w.j }),
            status: result.status.to_string(),
            elapsed_ms,
            seed: None,
            config: serde_json::Value::Null,
        }
    }

    pub fn from_graph(result: &DispersionResult<f64>, n: usize, elapsed_ms: f64) -> Self {
        RunReport {
            d: None,
            value: result.value2.finite(),
            value2: None,
            ..Self::from_points(result, n, 0, elapsed_ms)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let value = self.value.map_or("inf".to_string(), |v| format!("{v}"));
        format!(
            "{} k={} n={}: status={} value={} indices={:?} ({:.3} ms)",
            self.algo, self.k, self.n, self.status, value, self.indices, self.elapsed_ms
        )
    }
}
