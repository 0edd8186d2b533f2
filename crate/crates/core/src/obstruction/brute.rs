//! Element-level exhaustive search, used to cross-check the class engine on
//! small groups. It reads only the multiplication table.

use super::{check_params, Decision, ObstructionCert, Status};
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteLimits {
    pub max_order: usize,
    pub max_mn: usize,
}

impl Default for BruteLimits {
    fn default() -> Self {
        BruteLimits {
            max_order: 24,
            max_mn: 12,
        }
    }
}

/// [`brute_force_is_tmn_with`] under the default limits.
pub fn brute_force_is_tmn(group: &FiniteGroup, m: usize, n: usize) -> Result<Decision> {
    brute_force_is_tmn_with(group, m, n, &BruteLimits::default())
}

/// Enumerates families of `m` disjoint `n`-subsets of noncentral elements,
/// parts ordered by least element, and returns the first with no commuting
/// cross pair. Never returns `UNKNOWN`.
pub fn brute_force_is_tmn_with(
    group: &FiniteGroup,
    m: usize,
    n: usize,
    limits: &BruteLimits,
) -> Result<Decision> {
    check_params(m, n)?;
    if group.order() > limits.max_order {
        return Err(GroupError::TooLarge(format!(
            "order {} exceeds {}",
            group.order(),
            limits.max_order
        )));
    }
    if m.saturating_mul(n) > limits.max_mn {
        return Err(GroupError::TooLarge(format!(
            "m*n = {} exceeds {}",
            m.saturating_mul(n),
            limits.max_mn
        )));
    }
    let noncentral: Vec<usize> = group
        .elements()
        .filter(|&x| group.elements().any(|y| !group.commutes(x, y)))
        .collect();
    let k = noncentral.len();
    if k > 64 {
        return Err(GroupError::TooLarge(format!(
            "{k} noncentral elements exceed 64"
        )));
    }
    // bit j of `apart[i]` is set when noncentral[i] and noncentral[j] do not commute
    let apart: Vec<u64> = noncentral
        .iter()
        .map(|&x| {
            noncentral
                .iter()
                .enumerate()
                .filter(|&(_, &y)| !group.commutes(x, y))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut state = Brute {
        apart,
        m,
        n,
        parts: Vec::new(),
        nodes: 0,
    };
    let found = state.next_part(all, 0, 0);
    let certificate = found.then(|| {
        ObstructionCert::canonical(
            state
                .parts
                .iter()
                .map(|&mask| bits(mask).map(|j| noncentral[j]).collect())
                .collect(),
        )
    });
    Ok(Decision {
        status: if found { Status::NotTmn } else { Status::IsTmn },
        certificate,
        nodes: state.nodes,
    })
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let j = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            j
        })
    })
}

/// Bits strictly above `j`.
fn above(j: usize) -> u64 {
    if j >= 63 {
        0
    } else {
        u64::MAX << (j + 1)
    }
}

struct Brute {
    apart: Vec<u64>,
    m: usize,
    n: usize,
    parts: Vec<u64>,
    nodes: u64,
}

impl Brute {
    /// `compat`: elements apart from every element of every finished part.
    /// `used`: union of finished parts. `floor`: mask of allowed first elements.
    fn next_part(&mut self, compat: u64, used: u64, floor_after: usize) -> bool {
        let done = self.parts.len();
        if done == self.m {
            return true;
        }
        let mut avail = compat & !used;
        if done > 0 {
            avail &= above(floor_after);
        }
        let needed = (self.m - done) * self.n;
        for first in bits(avail) {
            let pool = avail & above(first);
            if (pool.count_ones() as usize) + 1 < needed {
                break;
            }
            self.nodes += 1;
            if self.fill(compat, used, first, 1 << first, pool) {
                return true;
            }
        }
        false
    }

    fn fill(&mut self, compat: u64, used: u64, first: usize, part: u64, pool: u64) -> bool {
        let size = part.count_ones() as usize;
        if size == self.n {
            let next_compat = bits(part).fold(compat, |acc, j| acc & self.apart[j]);
            self.parts.push(part);
            if self.next_part(next_compat, used | part, first) {
                return true;
            }
            self.parts.pop();
            return false;
        }
        let needed_here = self.n - size;
        for x in bits(pool) {
            let rest = pool & above(x);
            if (rest.count_ones() as usize) + 1 < needed_here {
                break;
            }
            self.nodes += 1;
            if self.fill(compat, used, first, part | 1 << x, rest) {
                return true;
            }
        }
        false
    }
}
