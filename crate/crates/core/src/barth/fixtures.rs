use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::exactfield::{NfElem, NumberField};
use crate::groups::GroupWord;
use crate::lattice::GramMatrix;
use crate::multipoly::{MPoly, PolyRing};

use super::BarthError;

const XI: &str = "xi_planes.json";
const THETA: &str = "theta_planes.json";
const TABLE1: &str = "table1_words.json";
const TABLE2: &str = "table2.json";

pub const FIXTURE_FILES: [&str; 4] = [XI, THETA, TABLE1, TABLE2];

/// The four data files behind the plane lists and both tables.
///
/// A file that could not be read is remembered as an error and reported
/// only by the checks that need it.
#[derive(Debug, Clone)]
pub struct BarthFixtures {
    texts: BTreeMap<&'static str, Result<String, String>>,
}

#[derive(Deserialize)]
struct PlaneList {
    planes: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct Table1File {
    rows: Vec<RawRow>,
}

#[derive(Deserialize)]
struct RawRow {
    v: Vec<String>,
    word: GroupWord,
}

/// One row of the transport table: the word carrying `Xi+_(1,1,1)` to
/// `Xi+_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub v: Vec<NfElem>,
    pub word: GroupWord,
}

impl BarthFixtures {
    pub fn embedded() -> Self {
        let texts = BTreeMap::from([
            (XI, Ok(include_str!("../../fixtures/v1/xi_planes.json").to_string())),
            (THETA, Ok(include_str!("../../fixtures/v1/theta_planes.json").to_string())),
            (TABLE1, Ok(include_str!("../../fixtures/v1/table1_words.json").to_string())),
            (TABLE2, Ok(include_str!("../../fixtures/v1/table2.json").to_string())),
        ]);
        BarthFixtures { texts }
    }

    pub fn from_dir(dir: &Path) -> Self {
        let texts = FIXTURE_FILES
            .iter()
            .map(|&name| {
                let text = std::fs::read_to_string(dir.join(name)).map_err(|e| e.to_string());
                (name, text)
            })
            .collect();
        BarthFixtures { texts }
    }

    fn text(&self, name: &'static str) -> Result<&str, BarthError> {
        match self.texts.get(name) {
            Some(Ok(t)) => Ok(t),
            Some(Err(e)) => Err(fixture_err(name, e)),
            None => Err(fixture_err(name, "missing")),
        }
    }

    pub fn xi_planes(&self, field: &Arc<NumberField>) -> Result<Vec<Vec<NfElem>>, BarthError> {
        plane_list(self.text(XI)?, XI, field, 20)
    }

    pub fn theta_planes(&self, field: &Arc<NumberField>) -> Result<Vec<Vec<NfElem>>, BarthError> {
        plane_list(self.text(THETA)?, THETA, field, 6)
    }

    pub fn table1(&self, field: &Arc<NumberField>) -> Result<Vec<Table1Row>, BarthError> {
        let file: Table1File =
            serde_json::from_str(self.text(TABLE1)?).map_err(|e| fixture_err(TABLE1, e))?;
        file.rows
            .into_iter()
            .map(|r| Ok(Table1Row { v: vector(&r.v, TABLE1, field)?, word: r.word }))
            .collect()
    }

    pub fn table2(&self) -> Result<GramMatrix, BarthError> {
        GramMatrix::from_json(self.text(TABLE2)?).map_err(|e| fixture_err(TABLE2, e))
    }
}

fn fixture_err(name: &str, msg: impl ToString) -> BarthError {
    BarthError::Fixture { name: name.to_string(), msg: msg.to_string() }
}

/// Parses a scalar such as `1 - t` in the given field.
pub fn parse_scalar(field: &Arc<NumberField>, text: &str) -> Option<NfElem> {
    let ring = PolyRing::<NfElem>::new(field, &[]);
    MPoly::parse(&ring, text).ok()?.as_constant()
}

fn vector(raw: &[String], name: &str, field: &Arc<NumberField>) -> Result<Vec<NfElem>, BarthError> {
    if raw.len() != 3 {
        return Err(fixture_err(name, format!("vector of length {}", raw.len())));
    }
    raw.iter()
        .map(|s| parse_scalar(field, s).ok_or_else(|| fixture_err(name, format!("bad scalar {s:?}"))))
        .collect()
}

fn plane_list(
    text: &str,
    name: &str,
    field: &Arc<NumberField>,
    expected: usize,
) -> Result<Vec<Vec<NfElem>>, BarthError> {
    let list: PlaneList = serde_json::from_str(text).map_err(|e| fixture_err(name, e))?;
    if list.planes.len() != expected {
        return Err(fixture_err(name, format!("{} planes, expected {expected}", list.planes.len())));
    }
    list.planes.iter().map(|v| vector(v, name, field)).collect()
}
