use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("non-finite coordinate ({re}, {im})")]
    NonFinite { re: f64, im: f64 },
    #[error("Möbius coefficients are singular (ad - bc = 0)")]
    SingularMap,
    #[error("input points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("degenerate Hermitian form (AC - |B|^2 >= 0)")]
    DegenerateForm,
    #[error("invalid disc parameters: {0}")]
    InvalidDisc(&'static str),
    #[error("invalid cap: {0}")]
    InvalidCap(&'static str),
}
