//! Phase files: JSON objects mapping element indices to `[num, den]`.

use std::collections::BTreeMap;

use crate::cocycle::PhaseFunction;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::phase::Phase;

/// Parses `{"3": [1, 4], ...}`. Keys must be decimal element indices and
/// may not repeat.
pub fn parse_phase_map(text: &str) -> Result<Vec<(usize, Phase)>> {
    let raw: serde_json::Map<String, serde_json::Value> = serde_json::from_str(text)?;
    let mut out = BTreeMap::new();
    for (key, value) in raw {
        let x: usize = key
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("phase file key `{key}`")))?;
        let p: Phase = serde_json::from_value(value)?;
        if out.insert(x, p).is_some() {
            return Err(Error::InvalidSpec(format!("element {x} listed twice")));
        }
    }
    Ok(out.into_iter().collect())
}

/// A phase function on `domain`; elements missing from the file get 1.
pub fn read_phase_function(text: &str, domain: Subgroup) -> Result<PhaseFunction> {
    PhaseFunction::from_pairs(domain, &parse_phase_map(text)?)
}

pub fn phase_function_to_json(f: &PhaseFunction) -> String {
    let map: BTreeMap<String, Phase> = f.to_map().into_iter().map(|(x, p)| (x.to_string(), p)).collect();
    serde_json::to_string(&map).expect("phase maps serialize")
}
