//! Grid diagrams (arc presentations) and the knot diagrams traced from them.
//!
//! An `N x N` grid diagram places one black and one white dot in every row
//! and every column, no two dots sharing a cell. Dots sit at cell centers:
//! the dot in row `r`, column `c` is at `(c + 0.5, r + 0.5)` in cell units,
//! with rows increasing upward. Connecting the two dots of each row by a
//! horizontal segment and the two dots of each column by a vertical segment
//! yields a closed rectilinear curve; vertical strands always cross over
//! horizontal strands.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An `N x N` grid diagram. `black[r]` and `white[r]` are the column indices
/// of the two dots in row `r` (0-based).
///
/// Construction enforces shape only (lengths match `size`, indices in
/// range); the combinatorial conditions are checked by [`validate`], so that
/// invalid diagrams can be represented and reported on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGrid")]
pub struct GridDiagram {
    size: usize,
    black: Vec<usize>,
    white: Vec<usize>,
}

#[derive(Deserialize)]
struct RawGrid {
    size: usize,
    black: Vec<usize>,
    white: Vec<usize>,
}

impl TryFrom<RawGrid> for GridDiagram {
    type Error = Error;

    fn try_from(raw: RawGrid) -> Result<Self> {
        GridDiagram::new(raw.size, raw.black, raw.white)
    }
}

impl GridDiagram {
    pub fn new(size: usize, black: Vec<usize>, white: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidGrid("size must be positive".into()));
        }
        if black.len() != size || white.len() != size {
            return Err(Error::InvalidGrid(format!(
                "expected {} rows, got {} black and {} white entries",
                size,
                black.len(),
                white.len()
            )));
        }
        if let Some(&c) = black.iter().chain(white.iter()).find(|&&c| c >= size) {
            return Err(Error::InvalidGrid(format!(
                "column index {c} out of range for size {size}"
            )));
        }
        Ok(Self { size, black, white })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn black(&self) -> &[usize] {
        &self.black
    }

    pub fn white(&self) -> &[usize] {
        &self.white
    }

    /// Row index of the black dot in each column (inverse of `black`).
    /// Only meaningful when `black` is a permutation.
    pub fn black_rows_by_column(&self) -> Vec<usize> {
        invert(&self.black, self.size)
    }

    pub fn white_rows_by_column(&self) -> Vec<usize> {
        invert(&self.white, self.size)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("grid serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidGrid(format!("bad grid JSON: {e}")))
    }
}

fn invert(perm: &[usize], size: usize) -> Vec<usize> {
    let mut inv = vec![0; size];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Outcome of checking a diagram against the grid-diagram conditions.
/// A report rather than an error: invalid diagrams are data, too.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Every column contains exactly one black dot (rows hold one by shape).
    pub black_is_permutation: bool,
    /// Every column contains exactly one white dot.
    pub white_is_permutation: bool,
    /// No cell contains more than one dot.
    pub no_shared_cell: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.black_is_permutation && self.white_is_permutation && self.no_shared_cell
    }
}

/// Check the dot-placement conditions and report each one separately.
///
/// Note the degenerate 1x1 diagram always fails `no_shared_cell`: both dots
/// are forced into the single cell.
pub fn validate(d: &GridDiagram) -> ValidationReport {
    ValidationReport {
        black_is_permutation: is_permutation(&d.black),
        white_is_permutation: is_permutation(&d.white),
        no_shared_cell: d.black.iter().zip(&d.white).all(|(b, w)| b != w),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// One axis-aligned segment of the traced curve, in cell units.
///
/// For a horizontal segment `line` is the row and `from`/`to` are columns;
/// for a vertical segment `line` is the column and `from`/`to` are rows.
/// `from -> to` is the direction of travel along the knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub orientation: Orientation,
    pub line: usize,
    pub from: usize,
    pub to: usize,
}

impl Segment {
    pub fn start_point(&self) -> (f64, f64) {
        self.point_at(self.from)
    }

    pub fn end_point(&self) -> (f64, f64) {
        self.point_at(self.to)
    }

    fn point_at(&self, pos: usize) -> (f64, f64) {
        match self.orientation {
            Orientation::Horizontal => (pos as f64 + 0.5, self.line as f64 + 0.5),
            Orientation::Vertical => (self.line as f64 + 0.5, pos as f64 + 0.5),
        }
    }

    pub fn lo(&self) -> usize {
        self.from.min(self.to)
    }

    pub fn hi(&self) -> usize {
        self.from.max(self.to)
    }

    /// Length of the segment in cell units.
    pub fn length(&self) -> usize {
        self.hi() - self.lo()
    }
}

/// A transverse intersection of a vertical and a horizontal segment.
/// The vertical strand is always the over-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// Row of the horizontal (under) segment.
    pub row: usize,
    /// Column of the vertical (over) segment.
    pub col: usize,
    /// Index of the vertical segment in the diagram's segment cycle.
    pub over_segment: usize,
    /// Index of the horizontal segment in the diagram's segment cycle.
    pub under_segment: usize,
}

impl Crossing {
    /// Intersection point in cell units.
    pub fn point(&self) -> (f64, f64) {
        (self.col as f64 + 0.5, self.row as f64 + 0.5)
    }
}

/// The closed rectilinear curve traced from a grid diagram, with its
/// crossing data. Segments alternate horizontal/vertical and form a single
/// cycle visiting all `2N` dots.
#[derive(Clone, Debug, Serialize)]
pub struct KnotDiagram {
    pub segments: Vec<Segment>,
    pub crossings: Vec<Crossing>,
}

/// Follow the dots into a closed curve: start at row 0's black dot, move
/// horizontally to the white dot of that row, then vertically along the
/// white dot's column to that column's black dot, and repeat.
///
/// Errors with [`Error::MultiComponent`] if the cycle closes before
/// visiting every row (the diagram presents a link, not a knot).
pub fn trace(d: &GridDiagram) -> Result<KnotDiagram> {
    let report = validate(d);
    if !report.is_valid() {
        return Err(Error::InvalidGrid(format!(
            "trace requires a valid diagram: {report:?}"
        )));
    }
    let n = d.size();
    let black_row_of_col = d.black_rows_by_column();
    let mut segments = Vec::with_capacity(2 * n);
    let mut visited = 0usize;
    let mut row = 0usize;
    loop {
        segments.push(Segment {
            orientation: Orientation::Horizontal,
            line: row,
            from: d.black[row],
            to: d.white[row],
        });
        let col = d.white[row];
        let next_row = black_row_of_col[col];
        segments.push(Segment {
            orientation: Orientation::Vertical,
            line: col,
            from: row,
            to: next_row,
        });
        visited += 1;
        row = next_row;
        if row == 0 {
            break;
        }
    }
    if visited != n {
        return Err(Error::MultiComponent { visited, size: n });
    }
    let crossings = find_crossings(&segments);
    Ok(KnotDiagram {
        segments,
        crossings,
    })
}

/// All strict-interior intersections between vertical and horizontal
/// segments. Dots are at half-integer coordinates and segment endpoints are
/// dots, so "strict interior" is an exact integer comparison on indices.
fn find_crossings(segments: &[Segment]) -> Vec<Crossing> {
    let mut out = Vec::new();
    for (vi, v) in segments.iter().enumerate() {
        if v.orientation != Orientation::Vertical {
            continue;
        }
        for (hi, h) in segments.iter().enumerate() {
            if h.orientation != Orientation::Horizontal {
                continue;
            }
            if h.lo() < v.line && v.line < h.hi() && v.lo() < h.line && h.line < v.hi() {
                out.push(Crossing {
                    row: h.line,
                    col: v.line,
                    over_segment: vi,
                    under_segment: hi,
                });
            }
        }
    }
    out.sort_by_key(|c| (c.row, c.col));
    out
}

/// Crossings of the traced diagram; requires a single-component trace.
pub fn crossings(d: &GridDiagram) -> Result<Vec<Crossing>> {
    Ok(trace(d)?.crossings)
}

/// Exchange rows and columns. The dot at `(r, c)` moves to `(c, r)`, so the
/// new column arrays are the inverse permutations. An involution that
/// preserves validity and swaps the horizontal/vertical distance sums.
pub fn transpose(d: &GridDiagram) -> GridDiagram {
    GridDiagram {
        size: d.size,
        black: invert(&d.black, d.size),
        white: invert(&d.white, d.size),
    }
}
