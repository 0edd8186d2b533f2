//! Capacity packing: can `m` bins each reach `n` using disjoint items?
//!
//! When the twin-class graph is complete multipartite, every pair of classes
//! is adjacent and an obstruction exists exactly when the class capacities
//! pack this way. This module knows nothing about groups.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub feasible: bool,
    /// Item indices per bin, when feasible.
    pub witness: Option<Vec<Vec<usize>>>,
}

pub fn packing_oracle(capacities: &[usize], m: usize, n: usize) -> Packing {
    let mut items: Vec<usize> = (0..capacities.len()).collect();
    items.sort_by(|&a, &b| capacities[b].cmp(&capacities[a]).then(a.cmp(&b)));
    let sizes: Vec<usize> = items.iter().map(|&i| capacities[i]).collect();
    // suffix[k] = sum over items k.. of min(c, n)
    let mut suffix = vec![0; sizes.len() + 1];
    for k in (0..sizes.len()).rev() {
        suffix[k] = suffix[k + 1] + sizes[k].min(n);
    }
    let mut p = Packer {
        sizes: &sizes,
        suffix,
        n,
        sums: vec![0; m],
        bins: vec![Vec::new(); m],
    };
    if m == 0 || p.place(0) {
        let witness = p
            .bins
            .iter()
            .map(|b| {
                let mut v: Vec<usize> = b.iter().map(|&k| items[k]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        Packing {
            feasible: true,
            witness: Some(witness),
        }
    } else {
        Packing {
            feasible: false,
            witness: None,
        }
    }
}

struct Packer<'a> {
    sizes: &'a [usize],
    suffix: Vec<usize>,
    n: usize,
    sums: Vec<usize>,
    bins: Vec<Vec<usize>>,
}

impl Packer<'_> {
    fn place(&mut self, k: usize) -> bool {
        let deficit: usize = self.sums.iter().map(|&s| self.n.saturating_sub(s)).sum();
        if deficit == 0 {
            return true;
        }
        let unfilled = self.sums.iter().filter(|&&s| s < self.n).count();
        if deficit > self.suffix[k] || unfilled > self.sizes.len() - k {
            return false;
        }
        for j in 0..self.sums.len() {
            let s = self.sums[j];
            if s >= self.n || self.sums[..j].contains(&s) {
                continue;
            }
            self.sums[j] += self.sizes[k];
            self.bins[j].push(k);
            if self.place(k + 1) {
                return true;
            }
            self.bins[j].pop();
            self.sums[j] = s;
        }
        self.place(k + 1)
    }
}
