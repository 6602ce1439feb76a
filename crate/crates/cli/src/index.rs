//! `wbanzhaf index`: one row per coalition of an interaction index table.

use clap::ValueEnum;
use serde::Serialize;
use wbanzhaf::{banzhaf_all, shapley_all, weighted_banzhaf_all, Coalition, Game};

use crate::document::{parse_coalition, parse_profile, GameDocument};
use crate::error::CliError;
use crate::number::{format, nums, Num};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    WeightedBanzhaf,
    Banzhaf,
    Shapley,
    Mobius,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::WeightedBanzhaf => "weighted-banzhaf",
            Family::Banzhaf => "banzhaf",
            Family::Shapley => "shapley",
            Family::Mobius => "mobius",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub struct IndexArgs<'a> {
    pub document: &'a GameDocument,
    pub family: Family,
    pub profile: Option<&'a str>,
    pub max_order: Option<usize>,
    pub coalition: Option<&'a str>,
    pub format: Format,
}

#[derive(Serialize)]
struct Row {
    coalition: Vec<usize>,
    size: usize,
    value: Num,
}

#[derive(Serialize)]
struct Report<'a> {
    family: &'static str,
    name: Option<&'a str>,
    n: usize,
    profile: Option<Vec<Num>>,
    rows: Vec<Row>,
}

fn table(game: &Game, family: Family, profile: Option<&str>) -> Result<(Vec<f64>, Option<Vec<f64>>), CliError> {
    Ok(match family {
        Family::WeightedBanzhaf => {
            let spec = profile.ok_or_else(|| {
                CliError::Input("--p is required for the weighted-banzhaf family".into())
            })?;
            let p = parse_profile(spec, game.players())?;
            let t = weighted_banzhaf_all(game, &p)?;
            (t.values().to_vec(), Some(p.probs().to_vec()))
        }
        Family::Banzhaf => (banzhaf_all(game)?.values().to_vec(), None),
        Family::Shapley => (shapley_all(game), None),
        Family::Mobius => (game.mobius().into_coeffs(), None),
    })
}

pub fn run(args: &IndexArgs) -> Result<String, CliError> {
    let game = args.document.to_game()?;
    let n = game.players();
    let (values, profile) = table(&game, args.family, args.profile)?;
    let selected: Vec<Coalition> = match (args.coalition, args.max_order) {
        (Some(spec), _) => vec![parse_coalition(spec, n)?],
        (None, order) => {
            let order = order.unwrap_or(n);
            if order > n {
                return Err(CliError::Mismatch(format!(
                    "max order {order} exceeds the player count {n}"
                )));
            }
            (0..1u32 << n)
                .map(Coalition::from_mask)
                .filter(|s| s.len() <= order)
                .collect()
        }
    };
    match args.format {
        Format::Json => {
            let report = Report {
                family: args.family.name(),
                name: args.document.name.as_deref(),
                n,
                profile: profile.as_deref().map(nums),
                rows: selected
                    .iter()
                    .map(|s| Row {
                        coalition: s.players().collect(),
                        size: s.len(),
                        value: Num(values[s.index()]),
                    })
                    .collect(),
            };
            let mut out = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Io(format!("cannot encode report: {e}")))?;
            out.push('\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| CliError::Io(format!("cannot encode csv: {e}"));
            w.write_record(["coalition", "size", "value"]).map_err(csv_err)?;
            for s in &selected {
                let members: Vec<String> = s.players().map(|i| i.to_string()).collect();
                w.write_record([members.join(" "), s.len().to_string(), format(values[s.index()])])
                    .map_err(csv_err)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Io(format!("cannot encode csv: {e}")))?;
            String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}
