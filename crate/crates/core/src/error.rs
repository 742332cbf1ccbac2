use crate::report::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("map is not even: entry ({row}, {col}) links degrees {from} and {to}")]
    NotEven {
        row: usize,
        col: usize,
        from: String,
        to: String,
    },

    #[error("product is not even: e{i}·e{j} has a component on e{k} of the wrong degree")]
    ProductNotEven { i: usize, j: usize, k: usize },

    #[error("missing component: {0}")]
    MissingComponent(&'static str),

    #[error("group order {order} exceeds the configured bound {bound}")]
    GroupTooLarge { order: u64, bound: u64 },

    #[error("map is singular")]
    Singular,

    #[error("incompatible inputs: {0}")]
    Incompatible(String),

    #[error("hypothesis `{gate}` failed")]
    Gate {
        gate: String,
        report: Box<AxiomReport>,
    },

    #[error("search space of {size} candidates exceeds the limit {limit}")]
    SearchTooLarge { size: u128, limit: u128 },

    #[error("invalid parameter: {0}")]
    Parameter(String),
}

impl Error {
    pub(crate) fn gate(gate: impl Into<String>, report: AxiomReport) -> Self {
        Error::Gate {
            gate: gate.into(),
            report: Box::new(report),
        }
    }
}
