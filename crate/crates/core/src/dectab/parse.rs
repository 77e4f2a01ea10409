//! The `.dec` decomposition-matrix format.

use super::{DecError, DecompositionData};
use crate::chartab::parse::{parse_values, strip_comment};
use crate::chartab::CharacterTable;
use crate::cyclo::CycNum;

pub(crate) fn parse_dec(text: &str, table: CharacterTable) -> Result<DecompositionData, DecError> {
    let mut shape = None;
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Option<Vec<i64>>> = vec![None; table.characters().len()];
    let mut known: Vec<(String, Vec<CycNum>)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let perr = |msg: String| DecError::Parse { line, msg };
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("decmatrix") {
            let dims: Vec<usize> = rest
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| perr(format!("bad dimension {x:?}"))))
                .collect::<Result<_, _>>()?;
            let [k, c] = dims[..] else {
                return Err(perr("expected `decmatrix <k> <l>`".into()));
            };
            shape = Some((k, c));
        } else if let Some(rest) = l.strip_prefix("value ") {
            let (name, vals) = rest
                .trim()
                .split_once(char::is_whitespace)
                .ok_or_else(|| perr("expected `value <name> [..]`".into()))?;
            let values = parse_values(vals, line).map_err(|e| perr(e.to_string()))?;
            known.push((name.to_string(), values));
        } else if let Some((head, rest)) = l.split_once(':') {
            let head = head.trim();
            if head == "brauer" {
                labels = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
            let i = table
                .character_index(head)
                .ok_or_else(|| perr(format!("{head} is not a character of the table")))?;
            if rows[i].is_some() {
                return Err(perr(format!("duplicate row for {head}")));
            }
            let r: Vec<i64> = rest
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| perr(format!("bad decomposition number {x:?}"))))
                .collect::<Result<_, _>>()?;
            rows[i] = Some(r);
        } else {
            return Err(perr(format!("unrecognised line {l:?}")));
        }
    }
    let (k, c) = shape.ok_or(DecError::Parse { line: 0, msg: "missing `decmatrix` header".into() })?;
    if k != table.characters().len() {
        return Err(DecError::Shape(format!("header declares {k} rows, table has {} characters", table.characters().len())));
    }
    let labels = labels.unwrap_or_else(|| (1..=c).map(|j| format!("phi{j}")).collect());
    if labels.len() != c {
        return Err(DecError::Shape(format!("header declares {c} columns, found {} labels", labels.len())));
    }
    let d: Vec<Vec<i64>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let r = r.ok_or_else(|| DecError::Shape(format!("no row for {}", table.characters()[i].name)))?;
            if r.len() != c {
                return Err(DecError::Shape(format!("row {} has {} entries, expected {c}", table.characters()[i].name, r.len())));
            }
            Ok(r)
        })
        .collect::<Result<_, _>>()?;
    DecompositionData::from_matrix(table, labels, d, &known)
}
