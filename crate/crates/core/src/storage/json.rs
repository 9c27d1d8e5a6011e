use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::{Coord, Interval, IntervalLayer};
use crate::representation::LocalBoxRepresentation;

pub const JSON_VERSION: u32 = 1;

/// A rational written as the string `"p/q"`.
#[derive(Clone, Copy)]
struct Rat(Coord);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&format_args!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
                parse_rational(v)
                    .map(Rat)
                    .ok_or_else(|| E::custom(format!("{v:?} is not a rational \"p/q\"")))
            }
        }

        d.deserialize_str(RatVisitor)
    }
}

fn parse_rational(s: &str) -> Option<Coord> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let (p, q): (i64, i64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
    (q != 0).then(|| Coord::new(p, q))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayerDoc {
    span: [Rat; 2],
    explicit: BTreeMap<usize, [Rat; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    version: u32,
    n: usize,
    strategy: String,
    layers: Vec<LayerDoc>,
}

/// Pretty-printed JSON with vertices in ascending order, so equal
/// representations serialize to equal bytes.
pub fn write_representation_json(rep: &LocalBoxRepresentation) -> String {
    let doc = RepDoc {
        version: JSON_VERSION,
        n: rep.target_n(),
        strategy: rep.strategy().to_string(),
        layers: rep
            .layers()
            .iter()
            .map(|l| LayerDoc {
                span: [Rat(l.span().lo()), Rat(l.span().hi())],
                explicit: l
                    .explicit()
                    .iter()
                    .map(|(&v, iv)| (v, [Rat(iv.lo()), Rat(iv.hi())]))
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

fn schema(path: String, message: impl fmt::Display) -> Error {
    Error::Schema {
        path,
        message: message.to_string(),
    }
}

pub fn read_representation_json(text: &str) -> Result<LocalBoxRepresentation> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: RepDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner())
    })?;
    if doc.version != JSON_VERSION {
        return Err(schema(
            "version".into(),
            format!("unsupported version {}", doc.version),
        ));
    }
    if doc.layers.is_empty() {
        return Err(schema("layers".into(), "at least one layer is required"));
    }
    let mut layers = Vec::with_capacity(doc.layers.len());
    for (i, l) in doc.layers.into_iter().enumerate() {
        let span = Interval::new(l.span[0].0, l.span[1].0)
            .map_err(|e| schema(format!("layers[{i}].span"), e))?;
        let mut layer = IntervalLayer::new(span);
        for (v, [lo, hi]) in l.explicit {
            let path = format!("layers[{i}].explicit.{v}");
            if v >= doc.n {
                return Err(schema(
                    path,
                    format!("vertex {v} out of range for n = {}", doc.n),
                ));
            }
            let iv = Interval::new(lo.0, hi.0).map_err(|e| schema(path.clone(), e))?;
            layer.assign(v, iv).map_err(|e| schema(path, e))?;
        }
        layers.push(layer);
    }
    LocalBoxRepresentation::new(doc.n, layers, doc.strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::roberts_representation;

    #[test]
    fn round_trip_is_byte_identical() {
        let rep = roberts_representation(3).unwrap();
        let text = write_representation_json(&rep);
        let back = read_representation_json(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(write_representation_json(&back), text);
    }

    #[test]
    fn fractions_survive() {
        let mut layer = IntervalLayer::new(Interval::int(0, 2));
        layer
            .assign(
                1,
                Interval::new(Coord::new(1, 3), Coord::new(7, 4)).unwrap(),
            )
            .unwrap();
        layer.assign(10, Interval::int(2, 2)).unwrap();
        let rep = LocalBoxRepresentation::new(11, vec![layer], "manual").unwrap();
        let text = write_representation_json(&rep);
        assert!(text.contains("\"1/3\""));
        // numeric key order, not lexicographic
        assert!(text.find("\"1\":").unwrap() < text.find("\"10\":").unwrap());
        assert_eq!(read_representation_json(&text).unwrap(), rep);
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad = r#"{"version":1,"n":2,"strategy":"x","layers":[{"span":["0/1","4/1"],"explicit":{"1":["1/1","oops"]}}]}"#;
        match read_representation_json(bad) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "layers[0].explicit.1[1]"),
            other => panic!("{other:?}"),
        }
        let bad = r#"{"version":1,"n":2,"strategy":"x","layers":[{"span":["0/1","4/1"],"explicit":{"5":["1/1","2/1"]}}]}"#;
        match read_representation_json(bad) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "layers[0].explicit.5"),
            other => panic!("{other:?}"),
        }
        let bad = r#"{"version":1,"n":2,"layers":[]}"#;
        assert!(matches!(
            read_representation_json(bad),
            Err(Error::Schema { .. })
        ));
    }
}
