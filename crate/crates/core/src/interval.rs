//! Closed intervals with exact rational endpoints, and interval layers.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};

/// Interval endpoint. Exact, so intersection tests never round.
pub type Coord = Rational64;

pub fn coord(v: i64) -> Coord {
    Coord::from_integer(v)
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Coord,
    hi: Coord,
}

impl Interval {
    pub fn new(lo: Coord, hi: Coord) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "interval [{lo}, {hi}] has lo > hi"
            )));
        }
        Ok(Interval { lo, hi })
    }

    /// Integer-endpoint shorthand. Panics if `lo > hi`.
    pub fn int(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "interval [{lo}, {hi}] has lo > hi");
        Interval {
            lo: coord(lo),
            hi: coord(hi),
        }
    }

    pub fn lo(&self) -> Coord {
        self.lo
    }

    pub fn hi(&self) -> Coord {
        self.hi
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// One interval graph over a host vertex set. Vertices missing from
/// `explicit` implicitly receive the whole `span`, which makes them
/// universal in the layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalLayer {
    span: Interval,
    explicit: BTreeMap<usize, Interval>,
}

impl IntervalLayer {
    pub fn new(span: Interval) -> Self {
        IntervalLayer {
            span,
            explicit: BTreeMap::new(),
        }
    }

    /// Builds a layer from explicit assignments, checking each lies in the span.
    pub fn with_intervals<I>(span: Interval, intervals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Interval)>,
    {
        let mut layer = IntervalLayer::new(span);
        for (v, iv) in intervals {
            layer.assign(v, iv)?;
        }
        Ok(layer)
    }

    /// Assigns `v` an explicit interval, which must lie inside the span.
    pub fn assign(&mut self, v: usize, interval: Interval) -> Result<()> {
        if !self.span.contains(&interval) {
            return Err(Error::InvalidParameter(format!(
                "interval {interval:?} of vertex {v} leaves layer span {:?}",
                self.span
            )));
        }
        self.explicit.insert(v, interval);
        Ok(())
    }

    pub fn span(&self) -> Interval {
        self.span
    }

    pub fn explicit(&self) -> &BTreeMap<usize, Interval> {
        &self.explicit
    }

    pub fn is_explicit(&self, v: usize) -> bool {
        self.explicit.contains_key(&v)
    }

    pub fn interval_of(&self, v: usize) -> Interval {
        self.explicit.get(&v).copied().unwrap_or(self.span)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match (self.explicit.get(&u), self.explicit.get(&v)) {
            (Some(a), Some(b)) => a.intersects(b),
            _ => true,
        }
    }

    /// Explicit vertices whose interval misses at least one other interval.
    /// Implicit vertices cover the span and therefore meet everything, so
    /// only explicit intervals can witness non-universality.
    pub fn non_universal(&self) -> Vec<usize> {
        if self.explicit.len() < 2 {
            return Vec::new();
        }
        // two smallest right endpoints and two largest left endpoints
        let mut min_hi = [(None::<Coord>, usize::MAX); 2];
        let mut max_lo = [(None::<Coord>, usize::MAX); 2];
        for (&v, iv) in &self.explicit {
            if min_hi[0].0.is_none_or(|h| iv.hi < h) {
                min_hi[1] = min_hi[0];
                min_hi[0] = (Some(iv.hi), v);
            } else if min_hi[1].0.is_none_or(|h| iv.hi < h) {
                min_hi[1] = (Some(iv.hi), v);
            }
            if max_lo[0].0.is_none_or(|l| iv.lo > l) {
                max_lo[1] = max_lo[0];
                max_lo[0] = (Some(iv.lo), v);
            } else if max_lo[1].0.is_none_or(|l| iv.lo > l) {
                max_lo[1] = (Some(iv.lo), v);
            }
        }
        self.explicit
            .iter()
            .filter(|(&v, iv)| {
                let other_min_hi = if min_hi[0].1 == v {
                    min_hi[1].0
                } else {
                    min_hi[0].0
                };
                let other_max_lo = if max_lo[0].1 == v {
                    max_lo[1].0
                } else {
                    max_lo[0].0
                };
                let (h, l) = (other_min_hi.unwrap(), other_max_lo.unwrap());
                !(iv.lo <= h && iv.hi >= l)
            })
            .map(|(&v, _)| v)
            .collect()
    }

    /// All pairs `(u, v)`, `u < v`, whose intervals are disjoint here.
    pub fn broken_pairs(&self) -> Vec<(usize, usize)> {
        let mut by_lo: Vec<(Coord, Coord, usize)> = self
            .explicit
            .iter()
            .map(|(&v, iv)| (iv.lo, iv.hi, v))
            .collect();
        by_lo.sort_unstable();
        let mut out = Vec::new();
        for (i, &(_, hi, u)) in by_lo.iter().enumerate() {
            let start = i + 1 + by_lo[i + 1..].partition_point(|&(lo, _, _)| lo <= hi);
            for &(_, _, v) in &by_lo[start..] {
                out.push((u.min(v), u.max(v)));
            }
        }
        out
    }

    /// Renames explicit vertices through `mapping` (local index -> host index).
    pub fn lift(&self, mapping: &[usize]) -> IntervalLayer {
        IntervalLayer {
            span: self.span,
            explicit: self
                .explicit
                .iter()
                .map(|(&v, &iv)| (mapping[v], iv))
                .collect(),
        }
    }

    /// Drops explicit intervals of universal vertices; the induced graph is
    /// unchanged.
    pub fn without_universal(&self) -> IntervalLayer {
        let keep = self.non_universal();
        IntervalLayer {
            span: self.span,
            explicit: keep.into_iter().map(|v| (v, self.explicit[&v])).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn touching_closed_intervals_meet() {
        assert!(Interval::int(1, 2).intersects(&Interval::int(2, 3)));
        assert!(!Interval::int(1, 2).intersects(&Interval::int(3, 4)));
    }

    #[test]
    fn universality_is_layer_local() {
        let layer = IntervalLayer::with_intervals(
            Interval::int(0, 10),
            [
                (0, Interval::int(1, 2)),
                (1, Interval::int(2, 3)),
                (2, Interval::int(3, 4)),
            ],
        )
        .unwrap();
        // 1 meets both neighbours; 0 and 2 miss each other
        assert_eq!(layer.non_universal(), vec![0, 2]);
        assert_eq!(layer.broken_pairs(), vec![(0, 2)]);
        assert!(layer.adjacent(0, 7));
    }

    #[test]
    fn interval_outside_span_rejected() {
        let mut layer = IntervalLayer::new(Interval::int(1, 4));
        assert!(layer.assign(0, Interval::int(0, 2)).is_err());
        assert!(Interval::new(coord(2), coord(1)).is_err());
    }

    #[test]
    fn lone_explicit_vertex_is_universal() {
        let layer =
            IntervalLayer::with_intervals(Interval::int(1, 5), [(3, Interval::int(3, 3))]).unwrap();
        assert!(layer.non_universal().is_empty());
    }
}
