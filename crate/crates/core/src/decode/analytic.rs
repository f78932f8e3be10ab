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

use super::DecodeError;

pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Probability that a strict majority of `n` independent copies, each
/// garbled with probability `p`, is garbled.
pub fn analytic_majority(n: usize, p: f64) -> Result<f64, DecodeError> {
    if n.is_multiple_of(2) {
        return Err(DecodeError::EvenRepetitions(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(DecodeError::InvalidProbability(p));
    }
    let n = n as u64;
    Ok((n / 2 + 1..=n)
        .map(|k| binomial(n, k) * p.powi(k as i32) * (1.0 - p).powi((n - k) as i32))
        .sum())
}
