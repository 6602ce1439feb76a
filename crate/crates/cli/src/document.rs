//! The JSON game file and the textual profile and coalition arguments.
//!
//! A game file holds exactly one of two representations:
//!
//! ```json
//! { "name": "majority", "n": 3, "values": [0, 0, 0, 1, 0, 1, 1, 1] }
//! { "n": 3, "mobius": [ { "players": [1, 2], "coeff": 1.0 } ] }
//! ```
//!
//! Dense `values` are ordered by mask, bit `i - 1` standing for player `i`.
//! Sparse `mobius` terms list strictly increasing 1-based player ids.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use wbanzhaf::{Coalition, Game, MobiusTransform, ProbabilityProfile};

use crate::error::CliError;
use crate::number::Num;

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct MobiusTerm {
    pub players: Vec<usize>,
    pub coeff: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub n: usize,
    #[serde(default)]
    pub values: Option<Vec<f64>>,
    #[serde(default)]
    pub mobius: Option<Vec<MobiusTerm>>,
}

impl GameDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed game file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        GameDocument::parse(&text)
    }

    /// Validates the document and builds the game.
    pub fn to_game(&self) -> Result<Game, CliError> {
        let bad = |msg: String| CliError::Input(format!("invalid game file: {msg}"));
        match (&self.values, &self.mobius) {
            (Some(values), None) => Game::new(self.n, values.clone()).map_err(|e| bad(e.to_string())),
            (None, Some(terms)) => {
                let mut seen = std::collections::BTreeSet::new();
                let mut coalitions = Vec::with_capacity(terms.len());
                for term in terms {
                    if term.players.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(bad(format!(
                            "players {:?} must be strictly increasing",
                            term.players
                        )));
                    }
                    if let Some(&p) = term.players.iter().find(|&&p| p == 0 || p > self.n) {
                        return Err(bad(format!("player {p} is outside 1..={}", self.n)));
                    }
                    let s = Coalition::from_players(term.players.iter().copied())
                        .map_err(|e| bad(e.to_string()))?;
                    if !seen.insert(s) {
                        return Err(bad(format!("coalition {s} is listed twice")));
                    }
                    coalitions.push((s, term.coeff));
                }
                MobiusTransform::from_terms(self.n, coalitions)
                    .map(|a| a.to_game())
                    .map_err(|e| bad(e.to_string()))
            }
            (Some(_), Some(_)) => Err(bad("both \"values\" and \"mobius\" are present".into())),
            (None, None) => Err(bad("one of \"values\" or \"mobius\" is required".into())),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TermOut {
    pub players: Vec<usize>,
    pub coeff: Num,
}

/// A game document in the sparse Möbius representation, as written by
/// `approx`.
#[derive(Debug, Serialize)]
pub struct MobiusDocumentOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub mobius: Vec<TermOut>,
}

impl MobiusDocumentOut {
    pub fn new(name: Option<String>, n: usize, terms: impl Iterator<Item = (Coalition, f64)>) -> Self {
        MobiusDocumentOut {
            name,
            n,
            mobius: terms
                .map(|(s, c)| TermOut {
                    players: s.players().collect(),
                    coeff: Num(c),
                })
                .collect(),
        }
    }
}

/// Parses a profile: one probability for every player, or a comma-separated
/// list with one entry per player.
pub fn parse_profile(spec: &str, n: usize) -> Result<ProbabilityProfile, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let mut probs = Vec::with_capacity(parts.len());
    for part in &parts {
        let p: f64 = part
            .parse()
            .map_err(|_| CliError::Mismatch(format!("profile entry {part:?} is not a number")))?;
        probs.push(p);
    }
    let probs = match probs.len() {
        1 => vec![probs[0]; n],
        len if len == n => probs,
        len => {
            return Err(CliError::Mismatch(format!(
                "profile has {len} entries but the game has {n} players"
            )))
        }
    };
    Ok(ProbabilityProfile::new(probs)?)
}

/// Parses a member list such as `2,3`. The empty string is the empty
/// coalition.
pub fn parse_coalition(spec: &str, n: usize) -> Result<Coalition, CliError> {
    let spec = spec.trim();
    let mut players = Vec::new();
    if !spec.is_empty() {
        for part in spec.split(',') {
            let part = part.trim();
            let p: usize = part
                .parse()
                .map_err(|_| CliError::Input(format!("coalition member {part:?} is not a player id")))?;
            if p == 0 || p > n {
                return Err(CliError::Mismatch(format!("player {p} is outside 1..={n}")));
            }
            players.push(p);
        }
    }
    Coalition::from_players(players)
        .map_err(|e| CliError::Input(format!("invalid coalition {spec:?}: {e}")))
}
