//! `wbanzhaf approx`: the best degree-`k` approximation as a Möbius game file.

use std::fs;
use std::path::Path;

use serde::Serialize;
use wbanzhaf::{best_approximation, r_squared, residual_norm, Error};

use crate::document::{parse_profile, GameDocument, MobiusDocumentOut};
use crate::error::CliError;
use crate::number::{nums, Num};

pub struct ApproxArgs<'a> {
    pub document: &'a GameDocument,
    pub profile: &'a str,
    pub k: usize,
    pub out: Option<&'a Path>,
}

#[derive(Serialize)]
struct Report<'a> {
    name: Option<&'a str>,
    n: usize,
    k: usize,
    profile: Vec<Num>,
    residual_norm: Num,
    /// `null` for a constant game.
    r_squared: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approximation: Option<MobiusDocumentOut>,
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut out = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("cannot encode report: {e}")))?;
    out.push('\n');
    Ok(out)
}

pub fn run(args: &ApproxArgs) -> Result<String, CliError> {
    let game = args.document.to_game()?;
    let n = game.players();
    let p = parse_profile(args.profile, n)?;
    p.require_strict()?;
    let approx = best_approximation(&game, &p, args.k)?;
    let residual = residual_norm(&game, &approx, &p)?;
    let r2 = match r_squared(&game, &p, args.k) {
        Ok(r) => Some(Num(r)),
        Err(Error::ConstantGame) => None,
        Err(e) => return Err(e.into()),
    };
    let document = MobiusDocumentOut::new(args.document.name.clone(), n, approx.terms());
    let approximation = match args.out {
        Some(path) => {
            fs::write(path, to_json(&document)?)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            None
        }
        None => Some(document),
    };
    to_json(&Report {
        name: args.document.name.as_deref(),
        n,
        k: args.k,
        profile: nums(p.probs()),
        residual_norm: Num(residual),
        r_squared: r2,
        approximation,
    })
}
