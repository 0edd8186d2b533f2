use thiserror::Error;

/// Errors raised while building, ingesting or interrogating groups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group spec `{spec}`: {reason}")]
    Spec { spec: String, reason: String },

    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("expected {expected} entries, found {found} ({context})")]
    Dimension {
        expected: usize,
        found: usize,
        context: String,
    },

    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    IndexRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("{axis} {index} repeats element {value}")]
    LatinSquare {
        axis: &'static str,
        index: usize,
        value: usize,
    },

    #[error("element 0 is not a two-sided identity: 0*{x} or {x}*0 differs from {x}")]
    Identity { x: usize },

    #[error("associativity fails for ({x}, {y}, {z}): (xy)z = {left}, x(yz) = {right}")]
    Associativity {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },

    #[error("duplicate element label `{label}`")]
    DuplicateLabel { label: String },

    #[error("element {index} out of range for group of order {order}")]
    ElementRange { index: usize, order: usize },

    #[error("invalid permutation: {reason}")]
    Permutation { reason: String },

    #[error("set is not a subgroup: {reason}")]
    NotSubgroup { reason: String },

    #[error("subgroup is not normal: {g}*{n}*{g}^-1 = {conj} lies outside it")]
    NotNormal { g: usize, n: usize, conj: usize },

    #[error("{p} is not a prime divisor of the group order {order}")]
    NotPrimeDivisor { p: usize, order: usize },

    #[error("cannot read `{path}`: {reason}")]
    Io { path: String, reason: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("instance too large for the brute-force oracle: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl GroupError {
    /// Short machine-readable category used in diagnostics (`error:<category>:`).
    pub fn category(&self) -> &'static str {
        match self {
            GroupError::Spec { .. } => "spec",
            GroupError::OrderCap { .. } => "order-cap",
            GroupError::Parse { .. } => "parse",
            GroupError::Dimension { .. } => "dimension",
            GroupError::IndexRange { .. } => "index-range",
            GroupError::LatinSquare { .. } => "latin-square",
            GroupError::Identity { .. } => "identity",
            GroupError::Associativity { .. } => "associativity",
            GroupError::DuplicateLabel { .. } => "label",
            GroupError::ElementRange { .. } => "element-range",
            GroupError::Permutation { .. } => "permutation",
            GroupError::NotSubgroup { .. } => "not-subgroup",
            GroupError::NotNormal { .. } => "not-normal",
            GroupError::NotPrimeDivisor { .. } => "prime",
            GroupError::Io { .. } => "io",
            GroupError::Parameter(_) => "parameter",
            GroupError::TooLarge(_) => "instance-too-large",
            GroupError::Invariant(_) => "internal",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, GroupError::Invariant(_))
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
