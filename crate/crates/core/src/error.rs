use thiserror::Error;

/// Errors raised when constructing or combining games, profiles and indexes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("player count {0} is outside the supported range 1..={max}", max = crate::MAX_PLAYERS)]
    PlayerCount(usize),

    #[error("table for {players} players must have {expected} entries, found {found}")]
    TableLength {
        players: usize,
        expected: usize,
        found: usize,
    },

    #[error("entry at mask {mask} is not finite ({value})")]
    NonFinite { mask: usize, value: f64 },

    #[error("dimension mismatch: expected {expected} players, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("player {player} is outside 1..={players}")]
    PlayerOutOfRange { player: usize, players: usize },

    #[error("coalition mask {mask:#b} does not fit {players} players")]
    CoalitionOutOfRange { mask: u32, players: usize },

    #[error("coordinate {coordinate} of the point is {value}, outside [0, 1]")]
    PointOutOfRange { coordinate: usize, value: f64 },

    #[error("probability for player {player} is {value}, outside [0, 1]")]
    ProbabilityOutOfRange { player: usize, value: f64 },

    #[error("probability for player {player} is {value}; this operation needs 0 < p < 1")]
    BoundaryProbability { player: usize, value: f64 },

    #[error("profiles differ")]
    ProfileMismatch,

    #[error("degree {k} is outside 0..={players}")]
    InvalidDegree { k: usize, players: usize },

    #[error("coalitions {0} and {1} overlap")]
    Overlap(crate::Coalition, crate::Coalition),

    #[error("the game is constant, so its standard deviation vanishes")]
    ConstantGame,

    #[error("the empty coalition is not allowed here")]
    EmptyCoalition,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
