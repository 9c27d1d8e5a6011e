use crate::error::Result;
use crate::generators;
use crate::interval::{Interval, IntervalLayer};
use crate::representation::LocalBoxRepresentation;

/// Frequency-1 representation of `R_n`: layer `i` separates the matched
/// pair `(2i, 2i + 1)` and leaves everyone else implicit.
pub fn roberts_representation(n: usize) -> Result<LocalBoxRepresentation> {
    let g = generators::roberts(n)?;
    let span = Interval::int(1, 4);
    let layers = (0..n)
        .map(|i| {
            IntervalLayer::with_intervals(
                span,
                [
                    (2 * i, Interval::int(1, 2)),
                    (2 * i + 1, Interval::int(3, 4)),
                ],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    LocalBoxRepresentation::new(g.n(), layers, "roberts")
}
