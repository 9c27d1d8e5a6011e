//! Compact records: each vertex keeps one `(layer, lo, hi)` triple per layer
//! where it is explicit and non-universal, each poset element one
//! `(ple, position)` pair per ple containing it. The binary layout is
//! described in `docs/compact-format.md`.

use crate::error::{Error, Result};
use crate::interval::{Coord, Interval, IntervalLayer};
use crate::poset::{LocalRealizer, Ple};
use crate::representation::LocalBoxRepresentation;

const GRAPH_MAGIC: &[u8; 4] = b"LBXC";
const POSET_MAGIC: &[u8; 4] = b"LBXP";
const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple {
    pub layer: u32,
    pub interval: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactGraphRecord {
    spans: Vec<Interval>,
    records: Vec<Vec<Triple>>,
}

impl CompactGraphRecord {
    /// Validates layer ids, ordering and containment in the layer span.
    pub fn new(spans: Vec<Interval>, records: Vec<Vec<Triple>>) -> Result<Self> {
        if spans.is_empty() {
            return Err(Error::Compact("at least one layer is required".into()));
        }
        for (v, list) in records.iter().enumerate() {
            for (i, t) in list.iter().enumerate() {
                let Some(span) = spans.get(t.layer as usize) else {
                    return Err(Error::Compact(format!(
                        "vertex {v}: unknown layer id {}",
                        t.layer
                    )));
                };
                if i > 0 && list[i - 1].layer >= t.layer {
                    return Err(Error::Compact(format!(
                        "vertex {v}: layer ids not strictly increasing"
                    )));
                }
                if !span.contains(&t.interval) {
                    return Err(Error::Compact(format!(
                        "vertex {v}: interval {:?} leaves span of layer {}",
                        t.interval, t.layer
                    )));
                }
            }
        }
        Ok(CompactGraphRecord { spans, records })
    }

    pub fn n(&self) -> usize {
        self.records.len()
    }

    pub fn layer_count(&self) -> usize {
        self.spans.len()
    }

    pub fn spans(&self) -> &[Interval] {
        &self.spans
    }

    pub fn record(&self, v: usize) -> &[Triple] {
        &self.records[v]
    }

    pub fn triple_count(&self) -> usize {
        self.records.iter().map(Vec::len).sum()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(GRAPH_MAGIC);
        put_u32(&mut out, FORMAT_VERSION);
        put_u32(&mut out, self.n() as u32);
        put_u32(&mut out, self.spans.len() as u32);
        for span in &self.spans {
            put_interval(&mut out, span);
        }
        for list in &self.records {
            put_u32(&mut out, list.len() as u32);
            for t in list {
                put_u32(&mut out, t.layer);
                put_interval(&mut out, &t.interval);
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes, GRAPH_MAGIC)?;
        let n = r.u32()? as usize;
        let layers = r.u32()? as usize;
        let spans = (0..layers)
            .map(|_| r.interval())
            .collect::<Result<Vec<_>>>()?;
        let mut records = Vec::with_capacity(n.min(bytes.len()));
        for _ in 0..n {
            let count = r.u32()? as usize;
            let mut list = Vec::with_capacity(count.min(bytes.len()));
            for _ in 0..count {
                let layer = r.u32()?;
                list.push(Triple {
                    layer,
                    interval: r.interval()?,
                });
            }
            records.push(list);
        }
        r.finish()?;
        CompactGraphRecord::new(spans, records)
    }
}

/// Keeps only explicit non-universal intervals. The representation should
/// already be verified; dropping universal intervals does not change the
/// intersection graph.
pub fn to_compact(rep: &LocalBoxRepresentation) -> CompactGraphRecord {
    let mut records = vec![Vec::new(); rep.target_n()];
    for (id, layer) in rep.layers().iter().enumerate() {
        for v in layer.non_universal() {
            records[v].push(Triple {
                layer: id as u32,
                interval: layer.interval_of(v),
            });
        }
    }
    CompactGraphRecord {
        spans: rep.layers().iter().map(IntervalLayer::span).collect(),
        records,
    }
}

pub fn from_compact(rec: &CompactGraphRecord) -> Result<LocalBoxRepresentation> {
    let mut layers: Vec<IntervalLayer> = rec.spans.iter().map(|&s| IntervalLayer::new(s)).collect();
    for (v, list) in rec.records.iter().enumerate() {
        for t in list {
            layers[t.layer as usize].assign(v, t.interval)?;
        }
    }
    LocalBoxRepresentation::new(rec.n(), layers, "compact")
}

/// Walks the two sorted record lists in step; a layer missing from either
/// list places no constraint on the pair.
pub fn adjacency_query(rec: &CompactGraphRecord, u: usize, v: usize) -> bool {
    if u == v {
        return false;
    }
    let (a, b) = (&rec.records[u], &rec.records[v]);
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].layer.cmp(&b[j].layer) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if !a[i].interval.intersects(&b[j].interval) {
                    return false;
                }
                i += 1;
                j += 1;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactPosetRecord {
    ple_lengths: Vec<u32>,
    records: Vec<Vec<(u32, u32)>>,
}

impl CompactPosetRecord {
    pub fn from_realizer(n: usize, r: &LocalRealizer) -> Result<Self> {
        let mut records = vec![Vec::new(); n];
        for (id, ple) in r.ples().iter().enumerate() {
            for (pos, &x) in ple.elements().iter().enumerate() {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
                records[x].push((id as u32, pos as u32));
            }
        }
        let rec = CompactPosetRecord {
            ple_lengths: r.ples().iter().map(|p| p.len() as u32).collect(),
            records,
        };
        rec.to_realizer()?;
        Ok(rec)
    }

    /// Rebuilds the ples, checking every position is filled exactly once.
    pub fn to_realizer(&self) -> Result<LocalRealizer> {
        let mut slots: Vec<Vec<Option<usize>>> = self
            .ple_lengths
            .iter()
            .map(|&l| vec![None; l as usize])
            .collect();
        for (x, list) in self.records.iter().enumerate() {
            for (i, &(id, pos)) in list.iter().enumerate() {
                if i > 0 && list[i - 1].0 >= id {
                    return Err(Error::Compact(format!(
                        "element {x}: ple ids not strictly increasing"
                    )));
                }
                let ple = slots
                    .get_mut(id as usize)
                    .ok_or_else(|| Error::Compact(format!("element {x}: unknown ple id {id}")))?;
                let slot = ple.get_mut(pos as usize).ok_or_else(|| {
                    Error::Compact(format!("element {x}: position {pos} beyond ple {id}"))
                })?;
                if slot.replace(x).is_some() {
                    return Err(Error::Compact(format!(
                        "ple {id}: position {pos} used twice"
                    )));
                }
            }
        }
        let mut ples = Vec::with_capacity(slots.len());
        for (id, ple) in slots.into_iter().enumerate() {
            let elements: Option<Vec<usize>> = ple.into_iter().collect();
            let elements = elements
                .ok_or_else(|| Error::Compact(format!("ple {id} has an empty position")))?;
            ples.push(Ple(elements));
        }
        Ok(LocalRealizer::new(ples))
    }

    pub fn n(&self) -> usize {
        self.records.len()
    }

    pub fn record(&self, x: usize) -> &[(u32, u32)] {
        &self.records[x]
    }

    pub fn pair_count(&self) -> usize {
        self.records.iter().map(Vec::len).sum()
    }

    /// `x` before `y` in some shared ple, read from the two records alone.
    pub fn placed_before(&self, x: usize, y: usize) -> bool {
        let (a, b) = (&self.records[x], &self.records[y]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i].1 < b[j].1 {
                        return true;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        false
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(POSET_MAGIC);
        put_u32(&mut out, FORMAT_VERSION);
        put_u32(&mut out, self.n() as u32);
        put_u32(&mut out, self.ple_lengths.len() as u32);
        for &len in &self.ple_lengths {
            put_u32(&mut out, len);
        }
        for list in &self.records {
            put_u32(&mut out, list.len() as u32);
            for &(id, pos) in list {
                put_u32(&mut out, id);
                put_u32(&mut out, pos);
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes, POSET_MAGIC)?;
        let n = r.u32()? as usize;
        let count = r.u32()? as usize;
        let ple_lengths = (0..count).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
        let mut records = Vec::with_capacity(n.min(bytes.len()));
        for _ in 0..n {
            let k = r.u32()? as usize;
            let list = (0..k)
                .map(|_| Ok((r.u32()?, r.u32()?)))
                .collect::<Result<Vec<_>>>()?;
            records.push(list);
        }
        r.finish()?;
        let rec = CompactPosetRecord {
            ple_lengths,
            records,
        };
        rec.to_realizer()?;
        Ok(rec)
    }
}

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_coord(out: &mut Vec<u8>, c: Coord) {
    out.extend_from_slice(&c.numer().to_le_bytes());
    out.extend_from_slice(&c.denom().to_le_bytes());
}

fn put_interval(out: &mut Vec<u8>, iv: &Interval) {
    put_coord(out, iv.lo());
    put_coord(out, iv.hi());
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Reader<'a> {
    fn new(bytes: &'a [u8], magic: &[u8; 4]) -> Result<Self> {
        if bytes.len() < 4 || &bytes[..4] != magic {
            return Err(Error::Compact("bad magic".into()));
        }
        let mut r = Reader { bytes, at: 4 };
        let version = r.u32()?;
        if version != FORMAT_VERSION {
            return Err(Error::Compact(format!("unsupported version {version}")));
        }
        Ok(r)
    }

    fn take<const N: usize>(&mut self) -> Result<[u8; N]> {
        let end = self.at + N;
        let chunk = self
            .bytes
            .get(self.at..end)
            .ok_or_else(|| Error::Compact(format!("truncated at byte {}", self.at)))?;
        self.at = end;
        Ok(chunk.try_into().expect("slice has length N"))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take()?))
    }

    fn coord(&mut self) -> Result<Coord> {
        let p = i64::from_le_bytes(self.take()?);
        let q = i64::from_le_bytes(self.take()?);
        if q <= 0 {
            return Err(Error::Compact(format!("malformed rational {p}/{q}")));
        }
        Ok(Coord::new(p, q))
    }

    fn interval(&mut self) -> Result<Interval> {
        let lo = self.coord()?;
        let hi = self.coord()?;
        Interval::new(lo, hi)
            .map_err(|_| Error::Compact(format!("malformed interval [{lo}, {hi}]")))
    }

    fn finish(self) -> Result<()> {
        if self.at != self.bytes.len() {
            return Err(Error::Compact(format!(
                "{} trailing bytes",
                self.bytes.len() - self.at
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{biclique_representation, roberts_representation};
    use crate::generators;
    use crate::poset::{crown_local_realizer, crown_poset, verify_local_realizer};

    #[test]
    fn roberts_one_triple_per_vertex() {
        let rep = roberts_representation(5).unwrap();
        let rec = to_compact(&rep);
        assert!((0..10).all(|v| rec.record(v).len() == 1));
        assert!(!adjacency_query(&rec, 0, 1));
        assert!(adjacency_query(&rec, 0, 2));
        assert_eq!(to_compact(&from_compact(&rec).unwrap()), rec);
        assert_eq!(
            CompactGraphRecord::from_bytes(&rec.to_bytes()).unwrap(),
            rec
        );
    }

    #[test]
    fn all_implicit_complete_graph() {
        let rep = LocalBoxRepresentation::all_implicit(5, Interval::int(0, 1), "k5");
        let rec = to_compact(&rep);
        assert_eq!(rec.triple_count(), 0);
        assert!((0..5).all(|u| (0..5).all(|v| u == v || adjacency_query(&rec, u, v))));
    }

    #[test]
    fn gnp_queries_match() {
        let g = generators::gnp(10, 0.5, 3).unwrap();
        let rep = biclique_representation(&g).unwrap();
        let rec = to_compact(&rep);
        for u in 0..10 {
            for v in (u + 1)..10 {
                assert_eq!(adjacency_query(&rec, u, v), g.has_edge(u, v), "{u} {v}");
            }
        }
        let total: usize = rep.frequencies().iter().sum();
        assert_eq!(rec.triple_count(), total);
    }

    #[test]
    fn corrupt_bytes_rejected() {
        let rec = to_compact(&roberts_representation(2).unwrap());
        let bytes = rec.to_bytes();
        assert!(CompactGraphRecord::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        assert!(CompactGraphRecord::from_bytes(b"NOPE").is_err());
        let mut bad = bytes.clone();
        // the first layer id follows the header, the spans and one count
        bad[16 + 32 * rec.layer_count() + 4] = 99;
        assert!(
            matches!(CompactGraphRecord::from_bytes(&bad), Err(Error::Compact(m)) if m.contains("unknown layer"))
        );
    }

    #[test]
    fn crown_records() {
        let n = 4;
        let p = crown_poset(n).unwrap();
        let r = crown_local_realizer(n).unwrap();
        let rec = CompactPosetRecord::from_realizer(2 * n, &r).unwrap();
        let mu = verify_local_realizer(&p, &r).unwrap().mu_per_element;
        assert_eq!(rec.pair_count(), mu.iter().sum::<usize>());
        assert_eq!(rec.to_realizer().unwrap(), r);
        assert_eq!(
            CompactPosetRecord::from_bytes(&rec.to_bytes()).unwrap(),
            rec
        );
        for x in 0..2 * n {
            for y in 0..2 * n {
                if p.less(x, y) {
                    assert!(rec.placed_before(x, y));
                }
            }
        }
    }
}
