use thiserror::Error;

/// Errors raised by permutation arithmetic, group algorithms and the atlas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation at byte {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: u64, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(u64),

    #[error("image table is not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("a group needs at least one generator")]
    NoGenerators,

    #[error("group of order {order} is too large to enumerate (cap {cap})")]
    TooLarge { order: u128, cap: usize },

    #[error("{count} conjugacy classes exceed the class-lattice cap {cap}")]
    TooManyClasses { count: usize, cap: usize },

    #[error("element {0} is not a member of the group")]
    NotMember(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is insoluble")]
    Insoluble,

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("group is not a p-group")]
    NotPGroup,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group is not nonabelian simple")]
    NotSimple,

    #[error("tower precondition fails at item {item}: {detail}")]
    InvalidTower { item: u8, detail: String },

    #[error("unknown atlas entry `{0}`")]
    UnknownAtlasId(String),

    #[error("atlas parameter out of range: {0}")]
    BadParameter(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("group spec: {0}")]
    Spec(String),

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("internal defect: {0}")]
    Defect(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Spec(e.to_string())
    }
}
