use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Group axiom named by a failed Cayley-table validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Axiom {
    Shape,
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl core::fmt::Display for Axiom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "shape",
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A multiplication table violates a group axiom. The witness holds the
    /// offending element indices (a single element, a pair or a triple).
    #[error("{axiom} axiom violated, witness {witness:?}")]
    Axiom { axiom: Axiom, witness: [usize; 3] },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("graphs are not comparable: {0}")]
    Mismatch(String),
    #[error("unknown group id `{0}`")]
    UnknownGroup(String),
}
