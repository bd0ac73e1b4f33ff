//! Integer-coefficient Laurent polynomials in one variable `t`.
//!
//! The Alexander polynomial is only defined up to multiplication by a unit
//! `±t^k`, so equality of invariants goes through [`LaurentPoly::normalized`]:
//! divide out the greatest common monomial, then fix the sign so the
//! highest-degree coefficient is positive. After that, equality up to units
//! is plain structural equality.

use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial with `i64` coefficients, stored sparsely.
/// Zero coefficients are never kept.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, 0)
    }

    /// The monomial `coeff * t^exp`.
    pub fn term(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (exp, coeff) in pairs {
            p.add_term(exp, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Iterate terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Substitute `t -> 1/t`.
    pub fn reciprocal(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Evaluate at an integer point (used for the determinant `|Δ(-1)|`
    /// and the normalization check `Δ(1) = ±1`). The polynomial must have
    /// no negative exponents unless `x` is `±1`.
    pub fn eval_int(&self, x: i64) -> i64 {
        let mut acc = 0i64;
        for (e, c) in self.iter() {
            let p = if x == 1 {
                1
            } else if x == -1 {
                if e.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            } else {
                assert!(e >= 0, "negative exponent in integer evaluation");
                x.pow(e as u32)
            };
            acc += c * p;
        }
        acc
    }

    /// Unit normalization: divide by the greatest common monomial so the
    /// lowest exponent is 0, then flip the sign if the highest-degree
    /// coefficient is negative. Two polynomials are equal up to `±t^k`
    /// exactly when their normalizations are equal.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shift = self.min_exp().unwrap();
        let sign = if self.coeff(self.max_exp().unwrap()) < 0 {
            -1
        } else {
            1
        };
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e - shift, sign * c))
                .collect(),
        }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn equals_up_to_units(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Exponent -> coefficient map with string keys, for JSON output.
    pub fn to_json_map(&self) -> BTreeMap<String, i64> {
        self.iter().map(|(e, c)| (e.to_string(), c)).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest degree first reads like a polynomial
        for (&e, &c) in self.terms.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 => {
                    if a == 1 {
                        write!(f, "t")?
                    } else {
                        write!(f, "{a}t")?
                    }
                }
                _ => {
                    if a == 1 {
                        write!(f, "t^{e}")?
                    } else {
                        write!(f, "{a}t^{e}")?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normalization() {
        // t - 1 + t^-1, shifted by t^3 and negated, normalizes back
        let trefoil = LaurentPoly::from_pairs([(1, 1), (0, -1), (-1, 1)]);
        let shifted = trefoil.mul(&LaurentPoly::term(-1, 3));
        assert_ne!(trefoil, shifted);
        assert!(trefoil.equals_up_to_units(&shifted));
        assert_eq!(trefoil.normalized(), LaurentPoly::from_pairs([(2, 1), (1, -1), (0, 1)]));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = LaurentPoly::term(3, 2);
        p.add_term(2, -3);
        assert!(p.is_zero());
        assert_eq!(p.min_exp(), None);
    }

    #[test]
    fn eval_and_reciprocal() {
        let figure_eight = LaurentPoly::from_pairs([(1, 1), (0, -3), (-1, 1)]);
        assert_eq!(figure_eight.eval_int(-1).abs(), 5);
        assert_eq!(figure_eight.eval_int(1), -1);
        // palindromic: reciprocal agrees up to units
        assert!(figure_eight.equals_up_to_units(&figure_eight.reciprocal()));
    }

    #[test]
    fn display_reads_naturally() {
        let p = LaurentPoly::from_pairs([(1, 2), (0, -3), (-1, 2)]);
        assert_eq!(p.to_string(), "2t - 3 + 2t^-1");
    }
}
