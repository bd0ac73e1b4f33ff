//! Alexander polynomials from Wirtinger presentations.
//!
//! Each crossing contributes one row of the Alexander matrix over Z[t]
//! (Fox derivatives of the Wirtinger relation, abelianized): for a positive
//! crossing with over-arc k, incoming under-arc i and outgoing under-arc j,
//! the row is `t` at column i, `1 - t` at column k, `-1` at column j; a
//! negative crossing swaps i and j. Deleting one row and one column and
//! taking the determinant gives the Alexander polynomial up to `±t^k`.
//!
//! The determinant runs fraction-free (Bareiss) over dense integer
//! polynomials with arbitrary-precision coefficients, so desk-scale
//! diagrams finish exactly and instantly.

use crate::error::{Error, Result};
use crate::generators::{TorusParams, TwistParams};
use crate::grid::{trace, GridDiagram};
use crate::pd::PdCode;
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_traits::Zero;

/// Dense polynomial over BigInt; index = exponent. Internal to the
/// determinant computation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn zero() -> Self {
        ZPoly(Vec::new())
    }

    fn one() -> Self {
        ZPoly(vec![BigInt::from(1)])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn add_assign_term(&mut self, exp: usize, coeff: i64) {
        if self.0.len() <= exp {
            self.0.resize(exp + 1, BigInt::zero());
        }
        self.0[exp] += coeff;
        let t = std::mem::take(self);
        *self = t.trim();
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        out.resize(out.len().max(other.0.len()), BigInt::zero());
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        ZPoly(out).trim()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly(out).trim()
    }

    fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Exact division; panics if the division leaves a remainder, which
    /// cannot happen in fraction-free elimination.
    fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem = self.0.clone();
        let d = &divisor.0;
        let dlead = d.last().unwrap();
        assert!(rem.len() >= d.len(), "non-exact polynomial division");
        let mut quot = vec![BigInt::zero(); rem.len() - d.len() + 1];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d.len() - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let q = &lead / dlead;
            assert!((&lead % dlead).is_zero(), "non-exact polynomial division");
            for (i, di) in d.iter().enumerate() {
                let delta = di * &q;
                rem[k + i] -= delta;
            }
            quot[k] = q;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "non-exact polynomial division"
        );
        ZPoly(quot).trim()
    }
}

/// Fraction-free (Bareiss) determinant with row pivoting.
fn bareiss_det(mut m: Vec<Vec<ZPoly>>) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::one();
    }
    let mut prev = ZPoly::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return ZPoly::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev);
            }
            m[i][k] = ZPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Alexander polynomial of a knot from its arc-labeled crossing data,
/// normalized so the lowest exponent is zero and the leading coefficient is
/// positive.
pub fn alexander(pd: &PdCode) -> Result<LaurentPoly> {
    pd.check()?;
    let m = pd.crossings.len();
    if m == 1 {
        // a single kink; deleting one row and column leaves nothing
        return Ok(LaurentPoly::one());
    }
    let mut matrix = vec![vec![ZPoly::zero(); m]; m];
    for (r, c) in pd.crossings.iter().enumerate() {
        let (i, j) = if c.sign > 0 {
            (c.under_in, c.under_out)
        } else {
            (c.under_out, c.under_in)
        };
        matrix[r][i].add_assign_term(1, 1); // t
        matrix[r][c.over].add_assign_term(0, 1); // 1 - t
        matrix[r][c.over].add_assign_term(1, -1);
        matrix[r][j].add_assign_term(0, -1); // -1
    }
    matrix.truncate(m - 1);
    for row in &mut matrix {
        row.truncate(m - 1);
    }
    let det = bareiss_det(matrix);
    if det.is_zero() {
        return Err(Error::MalformedPd(
            "singular Alexander matrix (arc bookkeeping inconsistent)".into(),
        ));
    }
    let mut poly = LaurentPoly::zero();
    for (exp, coeff) in det.0.iter().enumerate() {
        let c: i64 = coeff.try_into().map_err(|_| Error::CoefficientOverflow)?;
        poly.add_term(exp as i64, c);
    }
    Ok(poly.normalized())
}

/// Alexander polynomial of the diagram traced from a grid. Crossingless
/// diagrams get the unknot convention Δ = 1.
pub fn grid_alexander(d: &GridDiagram) -> Result<LaurentPoly> {
    let k = trace(d)?;
    if k.crossings.is_empty() {
        return Ok(LaurentPoly::one());
    }
    alexander(&crate::pd::pd_code(&k)?)
}

/// Does the diagram's Alexander polynomial match `expected` up to units?
pub fn verify_family(d: &GridDiagram, expected: &LaurentPoly) -> Result<bool> {
    Ok(grid_alexander(d)?.equals_up_to_units(expected))
}

/// Twist-family Alexander polynomial: `a t - (2a ∓ 1) + a t⁻¹`, where
/// a = ⌈n/2⌉ and the middle coefficient is n+1 for even n, n for odd n.
pub fn twist_alexander(params: &TwistParams) -> LaurentPoly {
    let n = params.n() as i64;
    let a = (n + 1) / 2;
    let b = if n % 2 == 0 { n + 1 } else { n };
    LaurentPoly::from_pairs([(1, a), (0, -b), (-1, a)])
}

/// Torus-knot Alexander polynomial via the exact quotient
/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(params: &TorusParams) -> LaurentPoly {
    let (p, q) = (params.p() as usize, params.q() as usize);
    let tn_minus_1 = |n: usize| {
        let mut v = vec![BigInt::ZERO; n + 1];
        v[0] = BigInt::from(-1);
        v[n] = BigInt::from(1);
        ZPoly(v)
    };
    let numerator = tn_minus_1(p * q).mul(&tn_minus_1(1));
    let denominator = tn_minus_1(p).mul(&tn_minus_1(q));
    let quotient = numerator.exact_div(&denominator);
    let mut poly = LaurentPoly::zero();
    for (exp, coeff) in quotient.0.iter().enumerate() {
        let c: i64 = coeff.try_into().expect("torus coefficients are 0 or ±1");
        poly.add_term(exp as i64, c);
    }
    poly.normalized()
}

/// Check several (diagram, expected polynomial) pairs; parallel when the
/// `parallel` feature is on.
pub fn verify_batch(items: &[(GridDiagram, LaurentPoly)]) -> Vec<Result<bool>> {
    crate::parallel::map_slice(items, |(d, expected)| verify_family(d, expected))
}

/// Serial variant of [`verify_batch`] for comparison benchmarks.
pub fn verify_batch_serial(items: &[(GridDiagram, LaurentPoly)]) -> Vec<Result<bool>> {
    items
        .iter()
        .map(|(d, expected)| verify_family(d, expected))
        .collect()
}
