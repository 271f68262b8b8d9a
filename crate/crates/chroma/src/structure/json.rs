//! JSON interchange format for blowup and bracelet specs.
//!
//! ```json
//! {"kind":"blowup","base":"emerald","weights":{"1":3,"2":3,...}}
//! {"kind":"bracelet",
//!  "bags":{"a1":{"zero":1,"plus":0,"minus":0}, ..., "a7":{...}},
//!  "cross":{"e72":[[0,0]],"e13":[],"e61":[]}}
//! ```
//!
//! Cross pairs are 0-based indices into the plus sub-bag and the minus
//! sub-bag of the relation's two sides. Maps use sorted keys, so
//! serialization is deterministic.

use super::blowup::{BaseId, BlowupSpec};
use super::bracelet::{Bag, BraceletSpec};
use super::StructureError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecJson {
    Blowup {
        base: String,
        weights: BTreeMap<String, u32>,
    },
    Bracelet {
        bags: BTreeMap<String, BagJson>,
        cross: CrossJson,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize, Default, PartialEq, Eq)]
pub struct BagJson {
    #[serde(default)]
    pub zero: usize,
    #[serde(default)]
    pub plus: usize,
    #[serde(default)]
    pub minus: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, Default, PartialEq, Eq)]
pub struct CrossJson {
    #[serde(default)]
    pub e72: Vec<(usize, usize)>,
    #[serde(default)]
    pub e13: Vec<(usize, usize)>,
    #[serde(default)]
    pub e61: Vec<(usize, usize)>,
}

/// Either kind of spec, decoded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySpec {
    Blowup(BlowupSpec),
    Bracelet(BraceletSpec),
}

pub fn to_json(spec: &AnySpec) -> SpecJson {
    match spec {
        AnySpec::Blowup(b) => {
            let g = b.base_graph();
            let weights = (0..g.n())
                .map(|v| (g.label(v), b.weights()[v]))
                .collect();
            SpecJson::Blowup { base: b.base().as_str().to_string(), weights }
        }
        AnySpec::Bracelet(b) => {
            let bags = (0..7)
                .map(|i| {
                    let bag = b.bags[i];
                    (
                        format!("a{}", i + 1),
                        BagJson { zero: bag.zero, plus: bag.plus, minus: bag.minus },
                    )
                })
                .collect();
            SpecJson::Bracelet {
                bags,
                cross: CrossJson {
                    e72: b.e72.clone(),
                    e13: b.e13.clone(),
                    e61: b.e61.clone(),
                },
            }
        }
    }
}

pub fn from_json(j: &SpecJson) -> Result<AnySpec, StructureError> {
    match j {
        SpecJson::Blowup { base, weights } => {
            let id = BaseId::from_str_id(base)
                .ok_or_else(|| StructureError::InvalidSpec(format!("unknown base '{base}'")))?;
            let g = id.graph();
            let mut w = vec![0u32; g.n()];
            for (label, &value) in weights {
                let idx = (0..g.n()).find(|&v| &g.label(v) == label).ok_or_else(|| {
                    StructureError::InvalidSpec(format!(
                        "base '{base}' has no vertex labeled '{label}'"
                    ))
                })?;
                w[idx] = value;
            }
            Ok(AnySpec::Blowup(BlowupSpec::new(id, w)?))
        }
        SpecJson::Bracelet { bags, cross } => {
            let mut arr = [Bag::default(); 7];
            for (key, bag) in bags {
                let idx: usize = key
                    .strip_prefix('a')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| (1..=7).contains(&i))
                    .ok_or_else(|| {
                        StructureError::InvalidSpec(format!("bad bag key '{key}'"))
                    })?;
                arr[idx - 1] = Bag { zero: bag.zero, plus: bag.plus, minus: bag.minus };
            }
            Ok(AnySpec::Bracelet(BraceletSpec {
                bags: arr,
                e72: cross.e72.clone(),
                e13: cross.e13.clone(),
                e61: cross.e61.clone(),
            }))
        }
    }
}

pub fn to_string(spec: &AnySpec) -> String {
    serde_json::to_string(&to_json(spec)).expect("serializable")
}

pub fn from_str(s: &str) -> Result<AnySpec, StructureError> {
    let j: SpecJson = serde_json::from_str(s)
        .map_err(|e| StructureError::InvalidSpec(format!("json: {e}")))?;
    from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::bracelet;

    #[test]
    fn blowup_round_trip() {
        let spec = BlowupSpec::new(BaseId::Emerald, (1..=11).collect()).unwrap();
        let s = to_string(&AnySpec::Blowup(spec.clone()));
        let back = from_str(&s).unwrap();
        assert_eq!(back, AnySpec::Blowup(spec));
    }

    #[test]
    fn bracelet_round_trip() {
        let mut spec = BraceletSpec::ring([2; 7]);
        spec.bags[bracelet::A7] = Bag { zero: 1, plus: 1, minus: 0 };
        spec.bags[bracelet::A2] = Bag { zero: 1, plus: 0, minus: 1 };
        spec.e72 = vec![(0, 0)];
        let s = to_string(&AnySpec::Bracelet(spec.clone()));
        let back = from_str(&s).unwrap();
        assert_eq!(back, AnySpec::Bracelet(spec));
    }

    #[test]
    fn serialization_is_deterministic() {
        let spec = BlowupSpec::new(BaseId::C72T, vec![3, 1, 3, 3, 3, 3, 2, 2, 1]).unwrap();
        let a = to_string(&AnySpec::Blowup(spec.clone()));
        let b = to_string(&AnySpec::Blowup(spec));
        assert_eq!(a, b);
        assert!(a.contains("\"t2\""));
    }

    #[test]
    fn unknown_base_rejected() {
        assert!(from_str("{\"kind\":\"blowup\",\"base\":\"nope\",\"weights\":{}}").is_err());
    }
}
