//! Wirtinger presentation data extracted from traced knot diagrams.
//!
//! Arcs are maximal over-strand runs: the closed curve is cut at every
//! point where it passes under a crossing. Since vertical strands always
//! cross over horizontal ones, every cut lies on a horizontal segment, and
//! the number of arcs equals the number of crossings.

use crate::error::{Error, Result};
use crate::grid::{KnotDiagram, Orientation};
use serde::Serialize;

/// One crossing in arc terms. `under_in` enters the crossing and ends
/// there; `under_out` leaves it; `over` passes across unbroken. The sign is
/// the usual right-hand convention for the (under, over) direction pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PdCrossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

impl PdCrossing {
    /// The four incident arc labels in cyclic order around the crossing,
    /// starting at the incoming under-arc; the over-arc fills both
    /// transverse slots.
    pub fn cyclic_labels(&self) -> [usize; 4] {
        [self.under_in, self.over, self.under_out, self.over]
    }
}

/// Arc-labeled crossing list of a knot diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdCode {
    /// Number of arcs (equals the number of crossings).
    pub arcs: usize,
    pub crossings: Vec<PdCrossing>,
}

impl PdCode {
    /// Structural sanity: every arc starts at exactly one crossing and ends
    /// at exactly one crossing (so each label appears exactly twice among
    /// the under slots), and all labels are in range.
    pub fn check(&self) -> Result<()> {
        if self.crossings.len() != self.arcs {
            return Err(Error::MalformedPd(format!(
                "{} crossings but {} arcs",
                self.crossings.len(),
                self.arcs
            )));
        }
        let mut ins = vec![0usize; self.arcs];
        let mut outs = vec![0usize; self.arcs];
        for c in &self.crossings {
            for label in [c.over, c.under_in, c.under_out] {
                if label >= self.arcs {
                    return Err(Error::MalformedPd(format!("arc label {label} out of range")));
                }
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::MalformedPd(format!("bad crossing sign {}", c.sign)));
            }
            ins[c.under_in] += 1;
            outs[c.under_out] += 1;
        }
        if ins.iter().any(|&k| k != 1) || outs.iter().any(|&k| k != 1) {
            return Err(Error::MalformedPd(
                "each arc must enter exactly one crossing and leave exactly one".into(),
            ));
        }
        Ok(())
    }
}

/// Extract the arc-based crossing data from a traced diagram.
///
/// Errors with [`Error::ZeroCrossings`] for crossingless diagrams (an
/// unknot diagram has no Wirtinger presentation to speak of).
pub fn pd_code(k: &KnotDiagram) -> Result<PdCode> {
    if k.crossings.is_empty() {
        return Err(Error::ZeroCrossings);
    }

    // Under-passage events in curve order: for each horizontal segment (in
    // cycle order), its crossings ordered along the direction of travel.
    let mut events: Vec<usize> = Vec::with_capacity(k.crossings.len());
    // events_before[s] = number of under-passages strictly before finishing
    // segment s
    let mut events_before_end = vec![0usize; k.segments.len()];
    let mut passed = 0usize;
    for (si, seg) in k.segments.iter().enumerate() {
        if seg.orientation == Orientation::Horizontal {
            let mut here: Vec<usize> = k
                .crossings
                .iter()
                .enumerate()
                .filter(|(_, c)| c.under_segment == si)
                .map(|(ci, _)| ci)
                .collect();
            here.sort_by_key(|&ci| k.crossings[ci].col);
            if seg.to < seg.from {
                here.reverse();
            }
            for ci in here {
                events.push(ci);
                passed += 1;
            }
        }
        events_before_end[si] = passed;
    }
    let m = events.len();
    debug_assert_eq!(m, k.crossings.len());

    // arc k starts immediately after event k; the arc in progress while
    // traversing segment s is the one opened by the last event before s
    let arc_during = |si: usize| -> usize {
        let before = if si == 0 { 0 } else { events_before_end[si - 1] };
        (before + m - 1) % m
    };

    let mut order_of = vec![0usize; m];
    for (pos, &ci) in events.iter().enumerate() {
        order_of[ci] = pos;
    }

    let crossings = k
        .crossings
        .iter()
        .enumerate()
        .map(|(ci, c)| {
            let pos = order_of[ci];
            let under = &k.segments[c.under_segment];
            let over = &k.segments[c.over_segment];
            let ux: i8 = if under.to > under.from { 1 } else { -1 };
            let oy: i8 = if over.to > over.from { 1 } else { -1 };
            PdCrossing {
                over: arc_during(c.over_segment),
                under_in: (pos + m - 1) % m,
                under_out: pos,
                sign: ux * oy,
            }
        })
        .collect();

    let pd = PdCode { arcs: m, crossings };
    pd.check()?;
    Ok(pd)
}
