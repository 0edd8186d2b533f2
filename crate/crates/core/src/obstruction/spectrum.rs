//! The spectrum `N(m)`: the largest `n` for which an `(m,n)`-obstruction
//! exists, so that `G` is `T(m,n)` exactly when `n > N(m)`.

use serde::Serialize;

use super::{find_obstruction, verify_certificate, ObstructionCert, SearchBudget, SearchOutcome};
use crate::analysis::Analysis;
use crate::error::{GroupError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub m: usize,
    /// `N(m)`; a lower bound only when `exact` is false.
    pub n_max: usize,
    /// An `(m, N(m))`-obstruction, absent when `N(m) = 0`.
    pub witness: Option<ObstructionCert>,
    /// Nodes spent proving that no `(m, N(m)+1)`-obstruction exists.
    pub upper_nodes: u64,
    pub exact: bool,
}

/// Rows for `m = 2..=m_max` (default `w(G) + 1`, the first `m` with `N(m) = 0`,
/// and at least one row).
///
/// `N` is non-increasing in `m` (dropping a part keeps an obstruction), so each
/// row descends from `min(⌊(|G|-|Z|)/m⌋, N(m-1))`.
pub fn spectrum(
    analysis: &Analysis,
    m_max: Option<usize>,
    budget: &SearchBudget,
) -> Result<Vec<SpectrumRow>> {
    let last = m_max.unwrap_or((analysis.w() + 1).max(2));
    let v = analysis.noncentral();
    let mut rows = Vec::new();
    let mut prev = v;
    for m in 2..=last {
        let start = (v / m).min(prev);
        let mut exact = true;
        let mut found = None;
        let mut upper_nodes = 0;
        for n in (1..=start).rev() {
            let res = find_obstruction(analysis, m, n, budget)?;
            match res.outcome {
                SearchOutcome::Found(cert) => {
                    found = Some((n, cert));
                    break;
                }
                SearchOutcome::None => {
                    if n == start {
                        upper_nodes = res.nodes;
                    }
                }
                SearchOutcome::BudgetExceeded => exact = false,
            }
        }
        let n_max = found.as_ref().map_or(0, |(n, _)| *n);
        if n_max == start {
            // N(m)+1 was never searched; settle it explicitly.
            let res = find_obstruction(analysis, m, n_max + 1, budget)?;
            upper_nodes = res.nodes;
            match res.outcome {
                SearchOutcome::Found(_) => {
                    return Err(GroupError::Invariant(format!(
                        "found an ({m},{})-obstruction above the descent start {start}",
                        n_max + 1
                    )))
                }
                SearchOutcome::None => {}
                SearchOutcome::BudgetExceeded => exact = false,
            }
        }
        let witness = match found {
            Some((n, cert)) => {
                if let Err(e) = verify_certificate(analysis.group(), &cert, m, n) {
                    return Err(GroupError::Invariant(format!("spectrum witness: {e}")));
                }
                Some(cert)
            }
            None => None,
        };
        rows.push(SpectrumRow {
            m,
            n_max,
            witness,
            upper_nodes,
            exact,
        });
        prev = n_max;
    }
    Ok(rows)
}

/// Reads `T(m,n)` off a spectrum. Rows past the end count as `N = 0` when the
/// last row is exact and zero. `None` when the rows do not settle it.
pub fn tmn_from_spectrum(rows: &[SpectrumRow], m: usize, n: usize) -> Option<bool> {
    match rows.iter().find(|r| r.m == m) {
        Some(r) if n <= r.n_max => Some(false),
        Some(r) if r.exact => Some(true),
        Some(_) => None,
        None => {
            let tail = rows.last()?;
            (m > tail.m && tail.exact && tail.n_max == 0).then_some(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(spec: &str) -> Vec<usize> {
        let a = Analysis::from_spec(spec).unwrap();
        let rows = spectrum(&a, None, &SearchBudget::default()).unwrap();
        assert!(rows.iter().all(|r| r.exact));
        rows.iter().map(|r| r.n_max).collect()
    }

    #[test]
    fn small_spectra() {
        assert_eq!(ns("S:3"), vec![2, 1, 1, 0]);
        assert_eq!(ns("D:8"), vec![2, 2, 0]);
        assert_eq!(ns("Q:8"), vec![2, 2, 0]);
        assert_eq!(ns("C:5"), vec![0]);
        assert_eq!(ns("C:1"), vec![0]);
    }

    #[test]
    fn lookup() {
        let a = Analysis::from_spec("S:3").unwrap();
        let rows = spectrum(&a, None, &SearchBudget::default()).unwrap();
        assert_eq!(tmn_from_spectrum(&rows, 2, 2), Some(false));
        assert_eq!(tmn_from_spectrum(&rows, 2, 3), Some(true));
        assert_eq!(tmn_from_spectrum(&rows, 9, 1), Some(true));
        assert_eq!(tmn_from_spectrum(&rows[..1], 9, 1), None);
    }
}
