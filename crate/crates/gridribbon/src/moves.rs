//! Knot-type-preserving grid moves: commutations of adjacent rows/columns
//! with non-interleaving dot intervals, cyclic translations, and corner
//! (de)stabilizations.
//!
//! The legality conditions are purely combinatorial; knot-type preservation
//! is additionally enforced empirically by the Alexander-invariance
//! property tests over the optimizer.

use crate::error::{Error, Result};
use crate::grid::{validate, GridDiagram};
use serde::Serialize;

/// Which corner of the 2x2 stabilization block receives the lone
/// opposite-colored dot. Equivalently: where the new row and column are
/// inserted relative to the chosen dot (N = row above, E = column right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Corner {
    NE,
    NW,
    SE,
    SW,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NE, Corner::NW, Corner::SE, Corner::SW];

    fn row_above(&self) -> bool {
        matches!(self, Corner::NE | Corner::NW)
    }

    fn col_right(&self) -> bool {
        matches!(self, Corner::NE | Corner::SE)
    }
}

/// Which dot color a stabilization splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DotColor {
    Black,
    White,
}

/// One grid move. Commutations and shifts preserve the grid size;
/// stabilization grows it by one, destabilization shrinks it by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GridMove {
    /// Swap rows `row` and `row + 1` (legal when their dot intervals are
    /// disjoint or strictly nested).
    RowCommutation { row: usize },
    /// Swap columns `col` and `col + 1`.
    ColumnCommutation { col: usize },
    /// Move every dot up one row, wrapping the top row to the bottom
    /// (`up = false` shifts down).
    CyclicRowShift { up: bool },
    /// Move every dot right one column, wrapping (`right = false` shifts left).
    CyclicColumnShift { right: bool },
    /// Split the dot of `color` in row `row` into an L of three dots,
    /// inserting one row and one column next to it.
    Stabilization {
        row: usize,
        color: DotColor,
        corner: Corner,
    },
    /// Merge the three-dot L in the 2x2 block whose lower-left cell is
    /// `(row, col)` back into a single dot.
    Destabilization { row: usize, col: usize },
}

impl GridMove {
    /// Does applying this move change the grid size?
    pub fn size_delta(&self) -> isize {
        match self {
            GridMove::Stabilization { .. } => 1,
            GridMove::Destabilization { .. } => -1,
            _ => 0,
        }
    }
}

fn interval(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Non-interleaving condition: disjoint or strictly nested.
fn commutable(i1: (usize, usize), i2: (usize, usize)) -> bool {
    let (lo1, hi1) = i1;
    let (lo2, hi2) = i2;
    hi1 < lo2 || hi2 < lo1 || (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2)
}

/// Dots at the corners of the 2x2 block at (row, col), as
/// (present, is_black) per corner in order [SW, SE, NW, NE].
fn block_pattern(d: &GridDiagram, row: usize, col: usize) -> [Option<DotColor>; 4] {
    let mut out = [None; 4];
    for (idx, (r, c)) in [
        (row, col),
        (row, col + 1),
        (row + 1, col),
        (row + 1, col + 1),
    ]
    .iter()
    .enumerate()
    {
        if d.black()[*r] == *c {
            out[idx] = Some(DotColor::Black);
        } else if d.white()[*r] == *c {
            out[idx] = Some(DotColor::White);
        }
    }
    out
}

/// All moves that are legal on `d`. Deterministic order: row commutations,
/// column commutations, shifts, destabilizations, stabilizations.
pub fn legal_moves(d: &GridDiagram) -> Vec<GridMove> {
    let n = d.size();
    let mut moves = Vec::new();

    for row in 0..n - 1 {
        let i1 = interval(d.black()[row], d.white()[row]);
        let i2 = interval(d.black()[row + 1], d.white()[row + 1]);
        if commutable(i1, i2) {
            moves.push(GridMove::RowCommutation { row });
        }
    }
    let black_rows = d.black_rows_by_column();
    let white_rows = d.white_rows_by_column();
    for col in 0..n - 1 {
        let i1 = interval(black_rows[col], white_rows[col]);
        let i2 = interval(black_rows[col + 1], white_rows[col + 1]);
        if commutable(i1, i2) {
            moves.push(GridMove::ColumnCommutation { col });
        }
    }

    moves.push(GridMove::CyclicRowShift { up: true });
    moves.push(GridMove::CyclicRowShift { up: false });
    moves.push(GridMove::CyclicColumnShift { right: true });
    moves.push(GridMove::CyclicColumnShift { right: false });

    if n >= 3 {
        for row in 0..n - 1 {
            for col in 0..n - 1 {
                let pattern = block_pattern(d, row, col);
                if pattern.iter().filter(|p| p.is_some()).count() == 3 {
                    moves.push(GridMove::Destabilization { row, col });
                }
            }
        }
    }

    for row in 0..n {
        for color in [DotColor::Black, DotColor::White] {
            for corner in Corner::ALL {
                moves.push(GridMove::Stabilization { row, color, corner });
            }
        }
    }

    moves
}

/// Apply a move, checking legality. The result of a legal move on a valid
/// diagram is always valid.
pub fn apply(d: &GridDiagram, mv: GridMove) -> Result<GridDiagram> {
    if !validate(d).is_valid() {
        return Err(Error::InvalidGrid("moves require a valid diagram".into()));
    }
    let n = d.size();
    match mv {
        GridMove::RowCommutation { row } => {
            if row + 1 >= n {
                return Err(Error::IllegalMove(format!("row {row} out of range")));
            }
            let i1 = interval(d.black()[row], d.white()[row]);
            let i2 = interval(d.black()[row + 1], d.white()[row + 1]);
            if !commutable(i1, i2) {
                return Err(Error::IllegalMove(format!(
                    "rows {row} and {} interleave",
                    row + 1
                )));
            }
            let mut black = d.black().to_vec();
            let mut white = d.white().to_vec();
            black.swap(row, row + 1);
            white.swap(row, row + 1);
            GridDiagram::new(n, black, white)
        }
        GridMove::ColumnCommutation { col } => {
            if col + 1 >= n {
                return Err(Error::IllegalMove(format!("column {col} out of range")));
            }
            let black_rows = d.black_rows_by_column();
            let white_rows = d.white_rows_by_column();
            let i1 = interval(black_rows[col], white_rows[col]);
            let i2 = interval(black_rows[col + 1], white_rows[col + 1]);
            if !commutable(i1, i2) {
                return Err(Error::IllegalMove(format!(
                    "columns {col} and {} interleave",
                    col + 1
                )));
            }
            let swap = |c: usize| {
                if c == col {
                    col + 1
                } else if c == col + 1 {
                    col
                } else {
                    c
                }
            };
            let black = d.black().iter().map(|&c| swap(c)).collect();
            let white = d.white().iter().map(|&c| swap(c)).collect();
            GridDiagram::new(n, black, white)
        }
        GridMove::CyclicRowShift { up } => {
            let mut black = d.black().to_vec();
            let mut white = d.white().to_vec();
            if up {
                black.rotate_right(1);
                white.rotate_right(1);
            } else {
                black.rotate_left(1);
                white.rotate_left(1);
            }
            GridDiagram::new(n, black, white)
        }
        GridMove::CyclicColumnShift { right } => {
            let delta = if right { 1 } else { n - 1 };
            let black = d.black().iter().map(|&c| (c + delta) % n).collect();
            let white = d.white().iter().map(|&c| (c + delta) % n).collect();
            GridDiagram::new(n, black, white)
        }
        GridMove::Stabilization { row, color, corner } => {
            if row >= n {
                return Err(Error::IllegalMove(format!("row {row} out of range")));
            }
            let col = match color {
                DotColor::Black => d.black()[row],
                DotColor::White => d.white()[row],
            };
            stabilize(d, row, col, color, corner)
        }
        GridMove::Destabilization { row, col } => destabilize(d, row, col),
    }
}

fn stabilize(
    d: &GridDiagram,
    row: usize,
    col: usize,
    color: DotColor,
    corner: Corner,
) -> Result<GridDiagram> {
    let n = d.size();
    let new_row_at = if corner.row_above() { row + 1 } else { row };
    let new_col_at = if corner.col_right() { col + 1 } else { col };
    let shift_row = |r: usize| if r >= new_row_at { r + 1 } else { r };
    let shift_col = |c: usize| if c >= new_col_at { c + 1 } else { c };

    // relocate every dot except the one being split
    let mut black = vec![usize::MAX; n + 1];
    let mut white = vec![usize::MAX; n + 1];
    for r in 0..n {
        let nr = shift_row(r);
        if !(r == row && color == DotColor::Black) {
            black[nr] = shift_col(d.black()[r]);
        }
        if !(r == row && color == DotColor::White) {
            white[nr] = shift_col(d.white()[r]);
        }
    }

    // the block occupies rows {row, row+1} x cols {col, col+1} in new
    // indexing; the split dot's old position is the empty corner, the
    // opposite color goes diagonal to it, the split color fills the rest
    let old_pos = (shift_row(row).min(row), shift_col(col).min(col));
    debug_assert_eq!(old_pos, (row, col));
    let empty = (
        if corner.row_above() { row } else { row + 1 },
        if corner.col_right() { col } else { col + 1 },
    );
    let lone = (
        if corner.row_above() { row + 1 } else { row },
        if corner.col_right() { col + 1 } else { col },
    );
    for r in [row, row + 1] {
        for c in [col, col + 1] {
            if (r, c) == empty {
                continue;
            }
            let is_lone = (r, c) == lone;
            let put_black = (color == DotColor::Black) != is_lone;
            if put_black {
                black[r] = c;
            } else {
                white[r] = c;
            }
        }
    }

    debug_assert!(black.iter().all(|&c| c != usize::MAX));
    debug_assert!(white.iter().all(|&c| c != usize::MAX));
    GridDiagram::new(n + 1, black, white)
}

fn destabilize(d: &GridDiagram, row: usize, col: usize) -> Result<GridDiagram> {
    let n = d.size();
    if n < 3 || row + 1 >= n || col + 1 >= n {
        return Err(Error::IllegalMove(format!(
            "no destabilization block at ({row}, {col})"
        )));
    }
    let pattern = block_pattern(d, row, col);
    let present: Vec<usize> = (0..4).filter(|&i| pattern[i].is_some()).collect();
    if present.len() != 3 {
        return Err(Error::IllegalMove(format!(
            "block at ({row}, {col}) does not hold exactly three dots"
        )));
    }
    // corners in order [SW, SE, NW, NE]; opposite pairs (SW,NE), (SE,NW)
    let empty = (0..4).find(|i| pattern[*i].is_none()).unwrap();
    let middle = 3 - empty; // diagonal of the empty corner
    let ends: Vec<usize> = present.iter().copied().filter(|&i| i != middle).collect();
    let end_color = pattern[ends[0]].unwrap();
    if pattern[ends[1]].unwrap() != end_color || pattern[middle].unwrap() == end_color {
        return Err(Error::IllegalMove(format!(
            "block at ({row}, {col}) is not a stabilization pattern"
        )));
    }
    let corner_pos = |i: usize| (row + i / 2, col + i % 2);
    let (mid_r, mid_c) = corner_pos(middle);
    let (empty_r, empty_c) = corner_pos(empty);

    let unshift_row = |r: usize| if r > mid_r { r - 1 } else { r };
    let unshift_col = |c: usize| if c > mid_c { c - 1 } else { c };
    let mut black = vec![usize::MAX; n - 1];
    let mut white = vec![usize::MAX; n - 1];
    let in_block = |r: usize, c: usize| {
        (r == row || r == row + 1) && (c == col || c == col + 1)
    };
    for r in 0..n {
        if r == mid_r {
            // both dots of the middle row lie in the block and disappear
            // with it only if they are block dots; the row itself is deleted,
            // so any non-block dot in it must be re-homed -- but a legal
            // pattern has no such dot for the deleted row? It does: the
            // deleted row is the middle's row, which holds the middle and
            // one end, both block dots.
            debug_assert!(in_block(r, d.black()[r]) && in_block(r, d.white()[r]));
            continue;
        }
        for (arr, c) in [(&mut black, d.black()[r]), (&mut white, d.white()[r])] {
            if in_block(r, c) {
                continue; // block dot, replaced below
            }
            arr[unshift_row(r)] = unshift_col(c);
        }
    }
    // the merged dot sits at the empty corner, compacted
    let (tr, tc) = (unshift_row(empty_r), unshift_col(empty_c));
    match end_color {
        DotColor::Black => black[tr] = tc,
        DotColor::White => white[tr] = tc,
    }
    if black.contains(&usize::MAX) || white.contains(&usize::MAX) {
        return Err(Error::IllegalMove(format!(
            "block at ({row}, {col}) cannot be merged"
        )));
    }
    GridDiagram::new(n - 1, black, white)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{torus_grid, TorusParams};
    use crate::grid::trace;

    fn unknot2() -> GridDiagram {
        GridDiagram::new(2, vec![0, 1], vec![1, 0]).unwrap()
    }

    #[test]
    fn unknot_moves_contain_no_commutation() {
        let moves = legal_moves(&unknot2());
        assert!(!moves
            .iter()
            .any(|m| matches!(m, GridMove::RowCommutation { .. } | GridMove::ColumnCommutation { .. })));
        // size-2 grids hold four dots in one block: nothing to destabilize
        assert!(!moves
            .iter()
            .any(|m| matches!(m, GridMove::Destabilization { .. })));
    }

    #[test]
    fn every_legal_move_yields_a_valid_diagram() {
        let d = torus_grid(&TorusParams::new(2, 3).unwrap());
        let moves = legal_moves(&d);
        assert!(!moves.is_empty());
        for mv in moves {
            let next = apply(&d, mv).unwrap();
            assert!(validate(&next).is_valid(), "{mv:?}");
            assert!(trace(&next).is_ok(), "single component after {mv:?}");
        }
    }

    #[test]
    fn row_commutation_is_an_involution() {
        let d = torus_grid(&TorusParams::new(2, 3).unwrap());
        for mv in legal_moves(&d) {
            if let GridMove::RowCommutation { .. } = mv {
                let once = apply(&d, mv).unwrap();
                let twice = apply(&once, mv).unwrap();
                assert_eq!(twice, d);
            }
        }
    }

    #[test]
    fn cyclic_shifts_compose_to_identity() {
        let d = torus_grid(&TorusParams::new(2, 5).unwrap());
        let mut cur = d.clone();
        for _ in 0..d.size() {
            cur = apply(&cur, GridMove::CyclicRowShift { up: true }).unwrap();
        }
        assert_eq!(cur, d);
        let up = apply(&d, GridMove::CyclicRowShift { up: true }).unwrap();
        let back = apply(&up, GridMove::CyclicRowShift { up: false }).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn stabilize_then_destabilize_round_trips() {
        let d = torus_grid(&TorusParams::new(2, 3).unwrap());
        for color in [DotColor::Black, DotColor::White] {
            for corner in Corner::ALL {
                let mv = GridMove::Stabilization { row: 2, color, corner };
                let big = apply(&d, mv).unwrap();
                assert_eq!(big.size(), d.size() + 1);
                assert!(validate(&big).is_valid());
                // some destabilization recovers a 5x5 diagram
                let restored = legal_moves(&big)
                    .into_iter()
                    .filter(|m| matches!(m, GridMove::Destabilization { .. }))
                    .map(|m| apply(&big, m).unwrap())
                    .find(|c| c == &d);
                assert!(restored.is_some(), "{color:?} {corner:?}");
            }
        }
    }

    #[test]
    fn interleaved_rows_are_rejected()  {
        // rows 0 and 1 of the trefoil pattern interleave: [0,3] vs [1,4]
        let d = torus_grid(&TorusParams::new(2, 3).unwrap());
        assert!(matches!(
            apply(&d, GridMove::RowCommutation { row: 0 }),
            Err(Error::IllegalMove(_))
        ));
    }

    #[test]
    fn moves_preserve_ribbon_length_parity_sanity() {
        // commutations and shifts never change the grid size
        let d = torus_grid(&TorusParams::new(2, 3).unwrap());
        for mv in legal_moves(&d) {
            let next = apply(&d, mv).unwrap();
            assert_eq!(
                next.size() as isize - d.size() as isize,
                mv.size_delta()
            );
        }
    }
}
