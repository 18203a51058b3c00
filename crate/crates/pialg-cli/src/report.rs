//! Machine-readable mirrors of the CLI reports. Every report the CLI prints
//! can also be written as JSON with `--json`; these structures round-trip.

use serde::{Deserialize, Serialize};

use pialg::FGAbelianGroup;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub rank: usize,
    pub invariant_factors: Vec<i64>,
    pub display: String,
}

impl GroupJson {
    pub fn of(g: &FGAbelianGroup) -> GroupJson {
        GroupJson {
            rank: g.rank(),
            invariant_factors: g
                .torsion()
                .iter()
                .map(|t| t.to_i64().expect("desk-scale invariant factors"))
                .collect(),
            display: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationItemJson {
    pub kind: String,
    pub name: String,
    pub ok: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidateJson {
    pub items: Vec<ValidationItemJson>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeRowJson {
    pub degree: usize,
    pub group: GroupJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub algebra: String,
    pub module: String,
    pub resolution: String,
    pub rows: Vec<DegreeRowJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JunctionJson {
    pub index: usize,
    pub exact: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub map: String,
    pub coefficients: String,
    pub rows: Vec<DegreeRowJson>,
    pub les_exact: bool,
    pub junctions: Vec<JunctionJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageJson {
    pub stage: usize,
    pub window_exhausted: bool,
    pub arrow_existence: GroupJson,
    pub arrow_difference: GroupJson,
    pub source_existence: GroupJson,
    pub source_difference: GroupJson,
    pub target_existence: GroupJson,
    pub target_difference: GroupJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TodaComparisonJson {
    pub bracket: String,
    pub pushed_along: String,
    pub pushed_elements: Vec<Vec<i64>>,
    pub against: String,
    pub reading: String,
    pub verdict: String,
    pub witness: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructJson {
    pub map: String,
    pub stages: Vec<StageJson>,
    pub toda: Vec<TodaComparisonJson>,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketJson {
    pub name: String,
    pub algebra: String,
    pub degree: String,
    pub ambient: GroupJson,
    pub representative: Vec<i64>,
    pub indeterminacy: GroupJson,
    pub elements: Option<Vec<Vec<i64>>>,
    pub readings: Vec<ReadingJson>,
    pub comparisons: Vec<TodaComparisonJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReadingJson {
    pub label: String,
    pub elements: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketsJson {
    pub brackets: Vec<BracketJson>,
}

pub fn coords_to_json(coords: &[pialg::Int]) -> Vec<i64> {
    coords.iter().map(|c| c.to_i64().expect("desk-scale coordinates")).collect()
}
