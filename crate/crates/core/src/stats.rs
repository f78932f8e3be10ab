// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Descriptive statistics in the familiar
//! `count / mean / std / min / 25% / 50% / 75% / max` shape.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    /// Sample (n-1) standard deviation; 0 when `std_defined` is false.
    pub std: f64,
    pub std_defined: bool,
    pub min: f64,
    pub q25: f64,
    pub q50: f64,
    pub q75: f64,
    pub max: f64,
}

/// Quantile of sorted data with linear interpolation between closest ranks.
pub fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

impl Summary {
    /// `None` for an empty sample or one containing NaN.
    pub fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() || values.iter().any(|v| v.is_nan()) {
            return None;
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let count = sorted.len();
        let mean = sorted.iter().sum::<f64>() / count as f64;
        let (std, std_defined) = if count > 1 {
            let ss: f64 = sorted.iter().map(|v| (v - mean).powi(2)).sum();
            ((ss / (count - 1) as f64).sqrt(), true)
        } else {
            (0.0, false)
        };
        Some(Self {
            count,
            mean,
            std,
            std_defined,
            min: sorted[0],
            q25: quantile_sorted(&sorted, 0.25),
            q50: quantile_sorted(&sorted, 0.5),
            q75: quantile_sorted(&sorted, 0.75),
            max: sorted[count - 1],
        })
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "count: {}", self.count)?;
        writeln!(f, "mean: {}", self.mean)?;
        if self.std_defined {
            writeln!(f, "std: {}", self.std)?;
        } else {
            writeln!(f, "std: 0 (undefined for a single value)")?;
        }
        writeln!(f, "min: {}", self.min)?;
        writeln!(f, "25%: {}", self.q25)?;
        writeln!(f, "50%: {}", self.q50)?;
        writeln!(f, "75%: {}", self.q75)?;
        writeln!(f, "max: {}", self.max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn single_value() {
        let s = Summary::of(&[0.1]).unwrap();
        assert_eq!(s.count, 1);
        assert!(!s.std_defined);
        assert_eq!(s.std, 0.0);
        for v in [s.mean, s.min, s.q25, s.q50, s.q75, s.max] {
            assert_eq!(v, 0.1);
        }
    }

    #[test]
    fn two_values() {
        let s = Summary::of(&[0.3, 0.1]).unwrap();
        assert!(close(s.mean, 0.2));
        assert!(close(s.q50, 0.2));
        assert!(close(s.std, (0.02f64).sqrt()));
        let text = s.to_string();
        assert!(text.starts_with("count: 2\nmean: 0.2\n"), "{text}");
    }

    #[test]
    fn interpolated_quartiles() {
        // pos = 0.25 * 3 = 0.75 -> 0.1 + 0.75 * 0.1; pos = 2.25 -> 0.3 + 0.25 * 0.1
        let s = Summary::of(&[0.4, 0.1, 0.3, 0.2]).unwrap();
        assert!(close(s.q25, 0.175));
        assert!(close(s.q75, 0.325));
        assert!(close(s.q50, 0.25));
    }

    #[test]
    fn rendering_has_every_line() {
        let text = Summary::of(&[0.1, 0.2, 0.5]).unwrap().to_string();
        let keys: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
        assert_eq!(
            keys,
            ["count", "mean", "std", "min", "25%", "50%", "75%", "max"]
        );
    }

    #[test]
    fn empty_and_nan_have_no_summary() {
        assert!(Summary::of(&[]).is_none());
        assert!(Summary::of(&[0.1, f64::NAN]).is_none());
    }
}
