//! Parsing of `gen` parameter specs such as `item2:i=0,n=1,m=-2`.

use std::collections::HashMap;

use freeq::solver::GenParams;
use freeq::Word;

fn fields(body: &str) -> Result<HashMap<&str, &str>, String> {
    let mut map = HashMap::new();
    for part in body.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        if map.insert(k.trim(), v.trim()).is_some() {
            return Err(format!("repeated key {k:?}"));
        }
    }
    Ok(map)
}

fn int<T: std::str::FromStr>(map: &HashMap<&str, &str>, key: &str, default: Option<T>) -> Result<T, String> {
    match map.get(key) {
        Some(v) => v.parse().map_err(|_| format!("{key}={v} is not an integer")),
        None => default.ok_or_else(|| format!("missing {key}")),
    }
}

fn word(map: &HashMap<&str, &str>, key: &str) -> Result<Word, String> {
    let v = map.get(key).copied().unwrap_or("1");
    Word::parse(v).map_err(|e| e.to_string())
}

pub fn parse(spec: &str) -> Result<GenParams, String> {
    let (kind, body) = spec.split_once(':').unwrap_or((spec, ""));
    let map = fields(body)?;
    let known: &[&str] = match kind {
        "rank1" => &["m"],
        "item1" => &["i", "n"],
        "item2" => &["i", "n", "m"],
        "item3" => &["i", "sigma"],
        "primitive" => &["z"],
        "trivial" => &["r", "n1", "n2"],
        other => return Err(format!("unknown family {other:?}")),
    };
    if let Some(k) = map.keys().find(|k| !known.contains(k)) {
        return Err(format!("{kind} takes no parameter {k:?}"));
    }
    Ok(match kind {
        "rank1" => GenParams::Rank1 { m: int(&map, "m", Some(0))? },
        "item1" => GenParams::Item1 {
            i: int(&map, "i", Some(0))?,
            n: int(&map, "n", Some(0))?,
        },
        "item2" => GenParams::Item2 {
            i: int(&map, "i", Some(0))?,
            n: int(&map, "n", Some(0))?,
            m: int(&map, "m", Some(0))?,
        },
        "item3" => GenParams::Item3 {
            i: int(&map, "i", Some(0))?,
            sigma: map.get("sigma").copied().unwrap_or("").to_string(),
        },
        "primitive" => GenParams::Primitive { z: word(&map, "z")? },
        _ => GenParams::TrivialU {
            r: word(&map, "r")?,
            n1: int(&map, "n1", Some(1))?,
            n2: int(&map, "n2", Some(0))?,
        },
    })
}
