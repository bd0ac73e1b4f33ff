//! Grid-diagram families: torus knots and twist knots.

use crate::error::{Error, Result};
use crate::grid::GridDiagram;
use serde::Serialize;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Parameters of the (p, q) torus knot with the normal form
/// `2 <= p < q`, `gcd(p, q) = 1`.
///
/// Other sign/order combinations are deliberately rejected rather than
/// normalized: (q, p) and (-p, -q) give the same knot and (p, -q) its
/// mirror image, so a silent rewrite would misreport knot identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorusParams {
    p: u64,
    q: u64,
}

impl TorusParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let reason = if p < 2 {
            Some("p must be at least 2")
        } else if q <= p {
            Some("q must exceed p")
        } else if gcd(p as u64, q as u64) != 1 {
            Some("p and q must be coprime (otherwise the pattern is a link)")
        } else {
            None
        };
        match reason {
            Some(r) => Err(Error::BadTorusParams {
                p,
                q,
                reason: r.into(),
            }),
            None => Ok(Self {
                p: p as u64,
                q: q as u64,
            }),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Crossing number of the (p, q) torus knot: `(p - 1) * q` for p < q.
    pub fn crossing_number(&self) -> u64 {
        (self.p - 1) * self.q
    }

    pub fn label(&self) -> String {
        format!("torus({},{})", self.p, self.q)
    }
}

/// Parameters of the twist knot with `n >= 1` half twists closed by a
/// two-crossing clasp. Negative or zero counts are rejected; the
/// other sign conventions reduce to this family by mirror equivalences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwistParams {
    n: u64,
}

impl TwistParams {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadTwistParams { n });
        }
        Ok(Self { n: n as u64 })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Crossing number of the twist knot: `n + 2`.
    pub fn crossing_number(&self) -> u64 {
        self.n + 2
    }

    pub fn label(&self) -> String {
        format!("twist({})", self.n)
    }
}

/// A knot family parameter set, for certificate labeling and dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KnotFamily {
    Torus(TorusParams),
    Twist(TwistParams),
}

impl KnotFamily {
    pub fn crossing_number(&self) -> u64 {
        match self {
            KnotFamily::Torus(t) => t.crossing_number(),
            KnotFamily::Twist(t) => t.crossing_number(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            KnotFamily::Torus(t) => t.label(),
            KnotFamily::Twist(t) => t.label(),
        }
    }

    pub fn grid(&self) -> GridDiagram {
        match self {
            KnotFamily::Torus(t) => torus_grid(t),
            KnotFamily::Twist(t) => twist_grid(t),
        }
    }
}

/// The raw diagonal pattern on an (p+q)-sized grid: black dots on the main
/// diagonal, white dots shifted down by `p` diagonals (cyclically).
///
/// No coprimality check: when `gcd(p, q) > 1` the traced curve splits into
/// `gcd(p, q)` components, which is exactly what the link tests exercise.
pub fn torus_pattern(p: u64, q: u64) -> Result<GridDiagram> {
    if p == 0 || q == 0 {
        return Err(Error::BadTorusParams {
            p: p as i64,
            q: q as i64,
            reason: "p and q must be positive".into(),
        });
    }
    let n = (p + q) as usize;
    let p = p as usize;
    let black = (0..n).collect();
    let white = (0..n).map(|i| (i + n - p) % n).collect();
    GridDiagram::new(n, black, white)
}

/// Grid diagram of the (p, q) torus knot on an N = p+q grid.
///
/// Row `i` has its black dot in column `i` and its white dot in column
/// `(i - p) mod N`, so `q` rows have horizontal distance `p` and `p` rows
/// have distance `q`; both distance sums equal `2pq`.
pub fn torus_grid(params: &TorusParams) -> GridDiagram {
    torus_pattern(params.p, params.q).expect("validated parameters")
}

/// Grid diagram of the twist knot with `n` half twists on an N = n+4 grid.
///
/// The twist region is a pair of adjacent anti-diagonals `row + col = n+2`
/// and `row + col = n+4` filled with dots of alternating color (the
/// staircase carrying the half twists); six more dots close the curve with
/// a clasp. Both distance sums equal `4n + 8`, and the knot identity is
/// certified against the twist-family Alexander polynomials.
pub fn twist_grid(params: &TwistParams) -> GridDiagram {
    let n = params.n as usize;
    let size = n + 4;
    let mut black = vec![0usize; size];
    let mut white = vec![0usize; size];

    black[0] = n + 1;
    white[0] = n + 3;
    if n % 2 == 1 {
        black[1] = n + 2;
        white[1] = 0;
    } else {
        black[1] = 0;
        white[1] = n + 2;
    }
    black[2] = n + 3;
    white[2] = n;
    // anti-diagonal staircase rows: dots at columns n+2-r and n+4-r,
    // colors alternating with the row parity
    for r in 3..=n + 2 {
        if r % 2 == 1 {
            black[r] = n + 2 - r;
            white[r] = n + 4 - r;
        } else {
            black[r] = n + 4 - r;
            white[r] = n + 2 - r;
        }
    }
    if n % 2 == 1 {
        black[n + 3] = 1;
        white[n + 3] = n + 2;
    } else {
        black[n + 3] = n + 2;
        white[n + 3] = 1;
    }

    GridDiagram::new(size, black, white).expect("twist pattern is structurally well-formed")
}
