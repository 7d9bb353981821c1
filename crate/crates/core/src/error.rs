use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not invertible: constant term is zero")]
    NotInvertible,
    #[error("degree {degree} exceeds degree bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("expected a homogeneous element of degree {expected}")]
    NotHomogeneous { expected: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("the empty word has no Lyndon property")]
    EmptyWord,
    #[error("word {0} is not a Lyndon word of length at least 2")]
    NotLyndon(String),
    #[error("letter {letter} outside alphabet 1..={n}")]
    LetterOutOfRange { letter: u32, n: usize },
    #[error("singular linear system in block {0}")]
    SingularBlock(String),
    #[error("{monomials} monomials exceed the budget of {budget}")]
    BudgetExceeded { monomials: u128, budget: u64 },
    #[error("subspace is not closed under the symmetric group action")]
    NotInvariant,
}
