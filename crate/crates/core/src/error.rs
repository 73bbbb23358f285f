use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("not a Laurent monomial, no inverse exists: {0}")]
    NonMonomial(String),

    #[error("normal form exceeded the step budget of {0} rewrites")]
    StepBudgetExceeded(usize),

    #[error("generator id {id} is not part of presentation `{presentation}`")]
    ForeignGenerator { id: u8, presentation: String },

    #[error("element is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("`{map}` is not defined on generator `{generator}`")]
    UnknownGenerator {
        map: &'static str,
        generator: String,
    },

    #[error("unsupported input for {op}: {reason}")]
    Unsupported { op: &'static str, reason: String },

    #[error("invalid rewrite rule {rule}: {reason}")]
    InvalidRule { rule: String, reason: String },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown token `{token}` at offset {offset}; valid tokens: {valid}")]
    UnknownToken {
        token: String,
        offset: usize,
        valid: String,
    },

    #[error("token `{token}` is not available in algebra `{algebra}`")]
    TokenNotInAlgebra { token: String, algebra: String },

    #[error("`{function}` cannot be applied in algebra `{algebra}`: {reason}")]
    NotApplicable {
        function: String,
        algebra: String,
        reason: String,
    },

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
