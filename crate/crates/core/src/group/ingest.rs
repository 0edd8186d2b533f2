//! Cayley-table and permutation-generator file ingestion.
//!
//! Cayley file: `order <k>`, then `k` rows of `k` whitespace-separated
//! 0-based indices, then optional `label <i> <string>` lines.
//!
//! Permutation file: `degree <d>`, then one generator per line as `d`
//! 1-based images; `#` starts a comment.

use super::families::{permutation_closure, Permutation};
use super::{AssocCheck, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{GroupError, Result};

fn parse_err(line: usize, reason: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        reason: reason.into(),
    }
}

fn header(line_no: usize, line: &str, keyword: &str) -> Result<usize> {
    let mut words = line.split_whitespace();
    match (words.next(), words.next(), words.next()) {
        (Some(k), Some(v), None) if k == keyword => v
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{v}` is not a positive integer"))),
        _ => Err(parse_err(line_no, format!("expected `{keyword} <n>`"))),
    }
}

/// Parses and fully validates a Cayley file (associativity on every triple).
pub fn ingest_cayley(text: &str) -> Result<FiniteGroup> {
    ingest_cayley_with_cap(text, DEFAULT_ORDER_CAP, "cayley")
}

pub(crate) fn ingest_cayley_with_cap(
    text: &str,
    cap: usize,
    origin: impl Into<String>,
) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let order = header(first_no, first, "order")?;
    if order == 0 {
        return Err(parse_err(first_no, "order must be positive"));
    }
    if order > cap {
        return Err(GroupError::OrderCap { order, cap });
    }
    let mut table = Vec::with_capacity(order * order);
    let mut labels: Vec<String> = (0..order).map(|i| i.to_string()).collect();
    let mut rows = 0;
    for (line_no, line) in lines {
        if let Some(rest) = line.strip_prefix("label") {
            if rows < order {
                return Err(parse_err(
                    line_no,
                    "label line before the table is complete",
                ));
            }
            let rest = rest.trim_start();
            let (idx, label) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| parse_err(line_no, "expected `label <i> <string>`"))?;
            let idx: usize = idx
                .parse()
                .map_err(|_| parse_err(line_no, format!("`{idx}` is not an index")))?;
            if idx >= order {
                return Err(parse_err(
                    line_no,
                    format!("label index {idx} >= order {order}"),
                ));
            }
            labels[idx] = label.trim().to_string();
            continue;
        }
        if rows == order {
            return Err(GroupError::Dimension {
                expected: order,
                found: rows + 1,
                context: format!("table rows (extra row at line {line_no})"),
            });
        }
        let mut count = 0;
        for word in line.split_whitespace() {
            let v: usize = word
                .parse()
                .map_err(|_| parse_err(line_no, format!("`{word}` is not an index")))?;
            table.push(v);
            count += 1;
        }
        if count != order {
            return Err(GroupError::Dimension {
                expected: order,
                found: count,
                context: format!("entries in row {rows} (line {line_no})"),
            });
        }
        rows += 1;
    }
    if rows != order {
        return Err(GroupError::Dimension {
            expected: order,
            found: rows,
            context: "table rows".into(),
        });
    }
    FiniteGroup::from_table(order, table, labels, origin, AssocCheck::Full)
}

/// Parses generators and enumerates the permutation group they generate.
pub fn ingest_permutations(text: &str) -> Result<FiniteGroup> {
    ingest_permutations_with_cap(text, DEFAULT_ORDER_CAP, "perm")
}

pub(crate) fn ingest_permutations_with_cap(
    text: &str,
    cap: usize,
    origin: impl Into<String>,
) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let degree = header(first_no, first, "degree")?;
    if degree == 0 || degree > 255 {
        return Err(parse_err(
            first_no,
            format!("degree {degree} must lie in 1..=255"),
        ));
    }
    let mut generators: Vec<Permutation> = Vec::new();
    for (line_no, line) in lines {
        let mut images = Vec::with_capacity(degree);
        for word in line.split_whitespace() {
            let v: usize = word
                .parse()
                .map_err(|_| parse_err(line_no, format!("`{word}` is not an image")))?;
            images.push(v);
        }
        if images.len() != degree {
            return Err(GroupError::Permutation {
                reason: format!(
                    "line {line_no}: {} images for degree {degree}",
                    images.len()
                ),
            });
        }
        let mut seen = vec![false; degree];
        for &v in &images {
            if v == 0 || v > degree {
                return Err(GroupError::Permutation {
                    reason: format!("line {line_no}: image {v} outside 1..={degree}"),
                });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(GroupError::Permutation {
                    reason: format!("line {line_no}: image {v} repeated"),
                });
            }
        }
        generators.push(images.iter().map(|&v| (v - 1) as u8).collect());
    }
    permutation_closure(degree, &generators, cap, origin.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_from_two_generators() {
        let g = ingest_permutations("degree 5\n2 3 1 4 5\n2 3 4 5 1\n").unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn frobenius_21_from_affine_maps() {
        let text =
            "# x -> x+1 and x -> 2x on Z/7\ndegree 7\n2 3 4 5 6 7 1\n2 4 6 1 3 5 7 # doubling\n";
        let g = ingest_permutations(text).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = ingest_permutations("degree 3\n1 2 3\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn malformed_permutations() {
        assert_eq!(
            ingest_permutations("degree 3\n1 1 2\n")
                .unwrap_err()
                .category(),
            "permutation"
        );
        assert_eq!(
            ingest_permutations("degree 3\n1 2\n")
                .unwrap_err()
                .category(),
            "permutation"
        );
        assert_eq!(
            ingest_permutations("deg 3\n").unwrap_err().category(),
            "parse"
        );
    }

    #[test]
    fn closure_respects_cap() {
        let err =
            ingest_permutations_with_cap("degree 5\n2 1 3 4 5\n2 3 4 5 1\n", 100, "p").unwrap_err();
        assert_eq!(err.category(), "order-cap");
    }

    #[test]
    fn cayley_errors() {
        let dup = "order 3\n0 1 1\n1 2 0\n2 0 1\n";
        assert_eq!(ingest_cayley(dup).unwrap_err().category(), "latin-square");
        let short = "order 3\n0 1 2\n1 2 0\n";
        assert_eq!(ingest_cayley(short).unwrap_err().category(), "dimension");
        let junk = "order 2\n0 x\n1 0\n";
        assert_eq!(ingest_cayley(junk).unwrap_err().category(), "parse");
        let range = "order 2\n0 2\n1 0\n";
        assert_eq!(ingest_cayley(range).unwrap_err().category(), "index-range");
    }

    #[test]
    fn cayley_labels_apply() {
        let g = ingest_cayley("order 2\n0 1\n1 0\nlabel 0 e\nlabel 1 minus one\n").unwrap();
        assert_eq!(g.label(1), "minus one");
    }
}
