use std::fmt;

use serde::{Deserialize, Serialize};

use super::AtomError;

const NODE_LIMIT: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Feasible,
    Infeasible,
}

/// Record of an exhausted search: each `x_i` ranged over `lower[i]..=upper[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub lower: Vec<u64>,
    pub upper: Vec<u64>,
    pub nodes: u64,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityResult {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

impl fmt::Display for FeasibilityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, &self.certificate) {
            (Some(w), _) => {
                let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(f, "feasible ({})", parts.join(","))
            }
            (None, Some(c)) => write!(f, "infeasible: {}", c.text),
            (None, None) => write!(f, "infeasible"),
        }
    }
}

/// Decides whether `target = Σ x_i basis_i` has a solution in nonnegative
/// integers with `x_i ≥ forced minimum`. The witness returned is the
/// lexicographically smallest solution.
///
/// Basis vectors must be nonnegative with at least one positive entry, which
/// bounds every coordinate by the target.
pub fn feasibility(
    target: &[i64],
    basis: &[Vec<i64>],
    forced: &[(usize, u64)],
) -> Result<FeasibilityResult, AtomError> {
    if basis.is_empty() {
        return Err(AtomError::EmptyBasis);
    }
    let dim = target.len();
    for (i, b) in basis.iter().enumerate() {
        if b.len() != dim {
            return Err(AtomError::DimensionMismatch {
                index: i,
                expected: dim,
                found: b.len(),
            });
        }
        if b.iter().any(|&x| x < 0) {
            return Err(AtomError::NegativeComponent(i));
        }
        if b.iter().all(|&x| x == 0) {
            return Err(AtomError::UnboundedDirection(i));
        }
    }
    let mut lower = vec![0u64; basis.len()];
    for &(i, min) in forced {
        if i >= basis.len() {
            return Err(AtomError::ForcedIndex {
                index: i,
                len: basis.len(),
            });
        }
        lower[i] = lower[i].max(min);
    }

    let mut residual: Vec<i128> = target.iter().map(|&t| i128::from(t)).collect();
    for (i, &m) in lower.iter().enumerate() {
        for (r, &b) in residual.iter_mut().zip(&basis[i]) {
            *r -= i128::from(m) * i128::from(b);
        }
    }
    if let Some(j) = residual.iter().position(|&r| r < 0) {
        return Ok(infeasible(
            lower.clone(),
            lower,
            0,
            format!("forced minima exceed the target in component {j}"),
        ));
    }

    let extra: Vec<u64> = basis
        .iter()
        .map(|b| {
            b.iter()
                .zip(&residual)
                .filter(|(&x, _)| x > 0)
                .map(|(&x, &r)| (r / i128::from(x)) as u64)
                .min()
                .unwrap_or(0)
        })
        .collect();
    let upper: Vec<u64> = lower.iter().zip(&extra).map(|(l, e)| l + e).collect();

    // covers[i][j]: some basis vector at index >= i is positive in component j
    let mut covers = vec![vec![false; dim]; basis.len() + 1];
    for i in (0..basis.len()).rev() {
        for j in 0..dim {
            covers[i][j] = covers[i + 1][j] || basis[i][j] > 0;
        }
    }

    let mut search = Search {
        basis,
        extra: &extra,
        covers: &covers,
        x: vec![0; basis.len()],
        nodes: 0,
    };
    if search.run(0, &mut residual)? {
        let witness = search.x.iter().zip(&lower).map(|(a, b)| a + b).collect();
        return Ok(FeasibilityResult {
            verdict: Verdict::Feasible,
            witness: Some(witness),
            certificate: None,
        });
    }
    let ranges: Vec<String> = lower
        .iter()
        .zip(&upper)
        .enumerate()
        .map(|(i, (l, u))| format!("{l}<=x{}<={u}", i + 1))
        .collect();
    let text = format!(
        "no solution with {} ({} nodes searched)",
        ranges.join(", "),
        search.nodes
    );
    Ok(infeasible(lower, upper, search.nodes, text))
}

fn infeasible(lower: Vec<u64>, upper: Vec<u64>, nodes: u64, text: String) -> FeasibilityResult {
    FeasibilityResult {
        verdict: Verdict::Infeasible,
        witness: None,
        certificate: Some(Certificate {
            lower,
            upper,
            nodes,
            text,
        }),
    }
}

struct Search<'a> {
    basis: &'a [Vec<i64>],
    extra: &'a [u64],
    covers: &'a [Vec<bool>],
    x: Vec<u64>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, i: usize, residual: &mut [i128]) -> Result<bool, AtomError> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(AtomError::SearchLimit(NODE_LIMIT));
        }
        if residual
            .iter()
            .zip(&self.covers[i])
            .any(|(&r, &c)| r > 0 && !c)
        {
            return Ok(false);
        }
        if i == self.basis.len() {
            return Ok(residual.iter().all(|&r| r == 0));
        }
        let b = &self.basis[i];
        let mut k = 0u64;
        loop {
            self.x[i] = k;
            if self.run(i + 1, residual)? {
                return Ok(true);
            }
            if k == self.extra[i] {
                break;
            }
            for (r, &bj) in residual.iter_mut().zip(b) {
                *r -= i128::from(bj);
            }
            k += 1;
            if residual.iter().any(|&r| r < 0) {
                break;
            }
        }
        for (r, &bj) in residual.iter_mut().zip(b) {
            *r += i128::from(bj) * i128::from(k);
        }
        self.x[i] = 0;
        Ok(false)
    }
}
