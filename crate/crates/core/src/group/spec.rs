//! Group spec strings: `C:<n> | D:<order> | Q:<order> | S:<n> | A:<n> |
//! cayley:<path> | perm:<path> | <spec>*<spec>` (left-associative direct product).

use std::fmt;
use std::str::FromStr;

use super::families;
use super::ingest::{ingest_cayley_with_cap, ingest_permutations_with_cap};
use super::{AssocCheck, FiniteGroup};
use crate::error::{GroupError, Result};

pub const DEFAULT_ORDER_CAP: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub order_cap: usize,
    /// Check associativity on every triple instead of `10·k` sampled ones.
    pub full_assoc_check: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
            full_assoc_check: false,
        }
    }
}

impl BuildOptions {
    fn assoc(&self) -> AssocCheck {
        if self.full_assoc_check {
            AssocCheck::Full
        } else {
            AssocCheck::Sampled { per_element: 10 }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Cayley(String),
    Perm(String),
}

/// A parsed group expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    expression: String,
    factors: Vec<Atom>,
}

impl GroupSpec {
    pub fn parse(expression: &str) -> Result<Self> {
        let expression = expression.trim();
        let err = |reason: String| GroupError::Spec {
            spec: expression.to_string(),
            reason,
        };
        if expression.is_empty() {
            return Err(err("empty spec".into()));
        }
        let mut factors = Vec::new();
        for raw in expression.split('*') {
            let raw = raw.trim();
            let (family, arg) = raw
                .split_once(':')
                .ok_or_else(|| err(format!("factor `{raw}` lacks `<family>:<arg>`")))?;
            let number = || -> Result<usize> {
                arg.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("`{arg}` is not a non-negative integer")))
            };
            let atom = match family {
                "C" => {
                    let n = number()?;
                    if n == 0 {
                        return Err(err("cyclic order must be at least 1".into()));
                    }
                    Atom::Cyclic(n)
                }
                "D" => {
                    let n = number()?;
                    if n < 4 || n % 2 != 0 {
                        return Err(err(format!("dihedral order {n} must be even and >= 4")));
                    }
                    Atom::Dihedral(n)
                }
                "Q" => {
                    let n = number()?;
                    if n < 8 || n % 4 != 0 {
                        return Err(err(format!(
                            "dicyclic order {n} must be divisible by 4 and >= 8"
                        )));
                    }
                    Atom::Dicyclic(n)
                }
                "S" | "A" => {
                    let n = number()?;
                    if !(1..=7).contains(&n) {
                        return Err(err(format!("degree {n} must lie in 1..=7")));
                    }
                    if family == "S" {
                        Atom::Symmetric(n)
                    } else {
                        Atom::Alternating(n)
                    }
                }
                "cayley" if !arg.is_empty() => Atom::Cayley(arg.to_string()),
                "perm" if !arg.is_empty() => Atom::Perm(arg.to_string()),
                _ => return Err(err(format!("unknown factor `{raw}`"))),
            };
            factors.push(atom);
        }
        Ok(GroupSpec {
            expression: expression.to_string(),
            factors,
        })
    }

    pub fn expression(&self) -> &str {
        &self.expression
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expression)
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: path.to_string(),
        reason: e.to_string(),
    })
}

fn build_atom(atom: &Atom, opts: &BuildOptions) -> Result<FiniteGroup> {
    let cap = opts.order_cap;
    let assoc = opts.assoc();
    match atom {
        Atom::Cyclic(n) => families::cyclic(*n, cap, assoc),
        Atom::Dihedral(n) => families::dihedral(*n, cap, assoc),
        Atom::Dicyclic(n) => families::dicyclic(*n, cap, assoc),
        Atom::Symmetric(n) => families::symmetric(*n, false, cap, assoc),
        Atom::Alternating(n) => families::symmetric(*n, true, cap, assoc),
        Atom::Cayley(path) => {
            ingest_cayley_with_cap(&read_file(path)?, cap, format!("cayley:{path}"))
        }
        Atom::Perm(path) => {
            ingest_permutations_with_cap(&read_file(path)?, cap, format!("perm:{path}"))
        }
    }
}

/// Builds a group with the default order cap and sampled associativity check.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with(spec, &BuildOptions::default())
}

pub fn build_group_with(spec: &GroupSpec, opts: &BuildOptions) -> Result<FiniteGroup> {
    let mut factors = spec.factors.iter();
    let first = factors
        .next()
        .ok_or_else(|| GroupError::Invariant("spec without factors".into()))?;
    let mut group = build_atom(first, opts)?;
    for atom in factors {
        let next = build_atom(atom, opts)?;
        let order = group.order() * next.order();
        if order > opts.order_cap {
            return Err(GroupError::OrderCap {
                order,
                cap: opts.order_cap,
            });
        }
        group = group.direct_product(&next, opts.assoc())?;
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Result<FiniteGroup> {
        build_group(&s.parse()?)
    }

    #[test]
    fn orders_of_named_families() {
        assert_eq!(build("S:3").unwrap().order(), 6);
        assert_eq!(build("Q:8*S:3").unwrap().order(), 48);
        assert_eq!(build("D:8").unwrap().order(), 8);
        assert_eq!(build("A:5").unwrap().order(), 60);
        assert_eq!(build("C:1").unwrap().order(), 1);
        assert_eq!(build("C:2*C:3*C:2").unwrap().order(), 12);
    }

    #[test]
    fn malformed_specs() {
        for bad in [
            "", "X:3", "C:", "C:0", "D:6x", "D:7", "D:2", "Q:12x", "Q:6", "S:8", "A:0", "C",
        ] {
            let err = GroupSpec::parse(bad).unwrap_err();
            assert_eq!(err.category(), "spec", "{bad}");
        }
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            build("S:7"),
            Err(GroupError::OrderCap { order: 5040, .. })
        ));
        let err = build("A:5*A:5").unwrap_err();
        assert!(matches!(err, GroupError::OrderCap { order: 3600, .. }));
        let opts = BuildOptions {
            order_cap: 10,
            ..BuildOptions::default()
        };
        assert!(build_group_with(&"C:11".parse().unwrap(), &opts).is_err());
    }

    #[test]
    fn construction_is_deterministic() {
        let a = build("Q:8*S:3").unwrap();
        let b = build("Q:8*S:3").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn full_check_accepts_builtin_families() {
        let opts = BuildOptions {
            full_assoc_check: true,
            ..BuildOptions::default()
        };
        for s in ["D:10", "Q:16", "S:4", "A:4", "C:6*S:3"] {
            build_group_with(&s.parse().unwrap(), &opts).unwrap();
        }
    }
}
