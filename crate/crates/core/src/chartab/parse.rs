//! The line-oriented table format.

use std::collections::BTreeMap;

use super::{Character, CharacterTable, TableClass, TableError};
use crate::cyclo::CycNum;

/// Strips a trailing `#` comment and surrounding whitespace.
pub(crate) fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a).trim()
}

/// Splits `[a, b, 5:[1,2], c]` into its top-level items.
pub(crate) fn split_list(s: &str) -> Option<Vec<&str>> {
    let body = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    if body.trim().is_empty() {
        return Some(Vec::new());
    }
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in body.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                items.push(body[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then(|| {
        items.push(body[start..].trim());
        items
    })
}

pub(crate) fn parse_values(s: &str, line: usize) -> Result<Vec<CycNum>, TableError> {
    let perr = |msg: String| TableError::Parse { line, msg };
    split_list(s)
        .ok_or_else(|| perr("expected a bracketed value list".into()))?
        .into_iter()
        .map(|v| v.parse::<CycNum>().map_err(|e| perr(e.to_string())))
        .collect()
}

pub(crate) fn parse_table(text: &str) -> Result<CharacterTable, TableError> {
    let mut label = None;
    let mut order = None;
    let mut declared = None;
    let mut classes = Vec::new();
    let mut characters = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let perr = |msg: &str| TableError::Parse { line, msg: msg.to_string() };
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "label" => label = Some(rest.to_string()),
            "order" => order = Some(rest.parse::<u64>().map_err(|_| perr("bad group order"))?),
            "classes" => declared = Some(rest.parse::<usize>().map_err(|_| perr("bad class count"))?),
            "class" => {
                let mut fields = rest.split_whitespace();
                let name = fields.next().ok_or_else(|| perr("class line needs a name"))?.to_string();
                let mut size = None;
                let mut elt_order = None;
                let mut inverse = None;
                let mut power_maps = BTreeMap::new();
                for f in fields {
                    let (key, val) = f.split_once('=').ok_or_else(|| perr("expected key=value"))?;
                    let v: u64 = val.parse().map_err(|_| perr(&format!("bad value for {key}")))?;
                    match key {
                        "size" => size = Some(v),
                        "order" => elt_order = Some(v),
                        "inv" => inverse = Some(v),
                        _ => {
                            let p: u64 = key
                                .strip_prefix("pow")
                                .and_then(|p| p.parse().ok())
                                .ok_or_else(|| perr(&format!("unknown class field {key}")))?;
                            power_maps.insert(p, index(v, line)?);
                        }
                    }
                }
                classes.push(TableClass {
                    name,
                    size: size.ok_or_else(|| perr("missing size="))?,
                    element_order: elt_order.ok_or_else(|| perr("missing order="))?,
                    inverse: index(inverse.ok_or_else(|| perr("missing inv="))?, line)?,
                    power_maps,
                });
            }
            "char" => {
                let (name, vals) = rest.split_once(char::is_whitespace).ok_or_else(|| perr("char line needs a name and values"))?;
                characters.push(Character { name: name.to_string(), values: parse_values(vals, line)? });
            }
            _ => return Err(perr(&format!("unknown keyword {kw}"))),
        }
    }
    let order = order.ok_or(TableError::Parse { line: 0, msg: "missing `order` line".into() })?;
    if let Some(k) = declared {
        if k != classes.len() {
            return Err(TableError::Invalid(format!("declared {k} classes but found {}", classes.len())));
        }
    }
    CharacterTable::new(label, order, classes, characters)
}

fn index(v: u64, line: usize) -> Result<usize, TableError> {
    if v == 0 {
        return Err(TableError::Parse { line, msg: "class indices are 1-based".into() });
    }
    Ok(v as usize - 1)
}
