use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("transvectant order {r} exceeds a form degree ({m}, {n})")]
    TransvectantOrder { r: usize, m: usize, n: usize },
    #[error("derivative order exceeds the form degree")]
    DerivativeOrder,
    #[error("resultant of the zero form is undefined")]
    ZeroForm,
    #[error("singular matrix (determinant 0)")]
    SingularMatrix,
    #[error("not a degree-3 rational map (I6 = 0)")]
    NotARationalMap,
    #[error("coefficients are not primitive (gcd {0})")]
    NotPrimitive(i64),
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("{locus}: degenerate parameters ({reason})")]
    DegenerateFamily { locus: &'static str, reason: String },
    #[error("{0} has no parametric family")]
    NoFamily(&'static str),
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}
