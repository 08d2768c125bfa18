use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size bound exceeded: {what} needs {needed}, bound is {bound}")]
    Bound {
        what: &'static str,
        needed: u128,
        bound: u128,
    },

    #[error("invalid atom text {text:?}: {reason}")]
    AtomSyntax { text: String, reason: String },

    #[error("duplicate atom {0}")]
    Duplicate(String),

    #[error("atom {atom} is not an element of {context}")]
    NotAnElement { atom: String, context: String },

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("not a morphism: {0}")]
    NotMorphism(String),

    #[error("morphisms are not parallel: {0}")]
    NotParallel(String),

    #[error("not a monomorphism: {0}")]
    NotMonic(String),

    #[error("not a recognized product: {0}")]
    NotProduct(String),

    #[error("not a multigraph: {0}")]
    NotMultigraph(String),

    #[error("quotient is not well defined: {0}")]
    IllDefined(String),

    #[error("unknown name {0:?}")]
    Unknown(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("document error at {location}: {message}")]
    Document { location: String, message: String },
}

impl Error {
    pub(crate) fn not_element(atom: impl std::fmt::Display, context: impl Into<String>) -> Self {
        Error::NotAnElement {
            atom: atom.to_string(),
            context: context.into(),
        }
    }
}
