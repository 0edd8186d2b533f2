use std::fmt;

use super::ObstructionCert;
use crate::group::FiniteGroup;

/// First reason a family of sets fails to be an `(m,n)`-obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertViolation {
    PartCount {
        expected: usize,
        found: usize,
    },
    PartSize {
        part: usize,
        expected: usize,
        found: usize,
    },
    OutOfRange {
        part: usize,
        element: usize,
    },
    RepeatedInPart {
        part: usize,
        element: usize,
    },
    Shared {
        element: usize,
        first: usize,
        second: usize,
    },
    Central {
        part: usize,
        element: usize,
    },
    CrossCommuting {
        part_a: usize,
        x: usize,
        part_b: usize,
        y: usize,
    },
}

impl fmt::Display for CertViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertViolation::PartCount { expected, found } => {
                write!(f, "expected {expected} parts, found {found}")
            }
            CertViolation::PartSize {
                part,
                expected,
                found,
            } => write!(f, "part {part} has {found} elements, expected {expected}"),
            CertViolation::OutOfRange { part, element } => {
                write!(f, "part {part} lists element {element} outside the group")
            }
            CertViolation::RepeatedInPart { part, element } => {
                write!(f, "part {part} repeats element {element}")
            }
            CertViolation::Shared {
                element,
                first,
                second,
            } => write!(
                f,
                "element {element} lies in parts {first} and {second} (parts must be disjoint)"
            ),
            CertViolation::Central { part, element } => {
                write!(f, "part {part} contains central element {element}")
            }
            CertViolation::CrossCommuting {
                part_a,
                x,
                part_b,
                y,
            } => write!(
                f,
                "element {x} of part {part_a} commutes with element {y} of part {part_b}"
            ),
        }
    }
}

impl std::error::Error for CertViolation {}

/// Checks every obstruction invariant straight from the multiplication table.
pub fn verify_certificate(
    group: &FiniteGroup,
    cert: &ObstructionCert,
    m: usize,
    n: usize,
) -> Result<(), CertViolation> {
    if cert.parts.len() != m {
        return Err(CertViolation::PartCount {
            expected: m,
            found: cert.parts.len(),
        });
    }
    let mut owner = vec![usize::MAX; group.order()];
    for (i, part) in cert.parts.iter().enumerate() {
        if part.len() != n {
            return Err(CertViolation::PartSize {
                part: i,
                expected: n,
                found: part.len(),
            });
        }
        for &x in part {
            if x >= group.order() {
                return Err(CertViolation::OutOfRange {
                    part: i,
                    element: x,
                });
            }
            match owner[x] {
                usize::MAX => owner[x] = i,
                j if j == i => {
                    return Err(CertViolation::RepeatedInPart {
                        part: i,
                        element: x,
                    })
                }
                j => {
                    return Err(CertViolation::Shared {
                        element: x,
                        first: j,
                        second: i,
                    })
                }
            }
            if group.elements().all(|g| group.commutes(x, g)) {
                return Err(CertViolation::Central {
                    part: i,
                    element: x,
                });
            }
        }
    }
    for (i, a) in cert.parts.iter().enumerate() {
        for (j, b) in cert.parts.iter().enumerate().skip(i + 1) {
            for &x in a {
                for &y in b {
                    if group.commutes(x, y) {
                        return Err(CertViolation::CrossCommuting {
                            part_a: i,
                            x,
                            part_b: j,
                            y,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}
