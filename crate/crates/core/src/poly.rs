//! Sparse Laurent polynomials with exact integer coefficients on a
//! quarter-integer exponent grid.
//!
//! Exponents are stored scaled by 4 so the bracket variable `A` (integer
//! exponents) and the Jones variable `t` (half-integer exponents for
//! even-component links) share one representation without rational
//! arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

/// Variable tag carried by a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    /// Kauffman bracket variable.
    A,
    /// Jones variable.
    T,
    /// Quantum grading variable used in Euler characteristic checks.
    Q,
}

impl Var {
    fn letter(self) -> char {
        match self {
            Var::A => 'A',
            Var::T => 't',
            Var::Q => 'q',
        }
    }
}

/// Sparse Laurent polynomial; `terms` maps 4x-scaled exponents to nonzero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    var: Var,
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero(var: Var) -> Self {
        LaurentPolynomial {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    /// `coeff * x^(exp4/4)`.
    pub fn monomial(var: Var, coeff: i64, exp4: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp4, coeff);
        }
        LaurentPolynomial { var, terms }
    }

    pub fn from_terms(var: Var, entries: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(var);
        for &(exp4, coeff) in entries {
            p.add_term(exp4, coeff);
        }
        p
    }

    /// Integer-exponent convenience constructor.
    pub fn from_int_terms(var: Var, entries: &[(i64, i64)]) -> Self {
        let scaled: Vec<(i64, i64)> = entries.iter().map(|&(e, c)| (4 * e, c)).collect();
        Self::from_terms(var, &scaled)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp4: i64) -> i64 {
        self.terms.get(&exp4).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp4: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp4).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp4);
        }
    }

    pub fn min_exp4(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp4(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Max degree minus min degree, as an exact rational.
    pub fn span(&self) -> Option<Rational64> {
        match (self.min_exp4(), self.max_exp4()) {
            (Some(lo), Some(hi)) => Some(Rational64::new(hi - lo, 4)),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var, other.var);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            var: self.var,
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var, other.var);
        let mut out = Self::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.var);
        }
        LaurentPolynomial {
            var: self.var,
            terms: self.terms.iter().map(|(&e, &c)| (e, k * c)).collect(),
        }
    }

    /// Substitute `t = A^(-4)`, converting a bracket polynomial to the Jones
    /// variable. Every stored exponent of `A` sits on the integer grid, so
    /// the image lands on the half-integer grid in `t`.
    pub fn bracket_to_jones(&self) -> Self {
        debug_assert_eq!(self.var, Var::A);
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| {
                debug_assert_eq!(e % 4, 0);
                (-e / 4, c)
            })
            .collect();
        LaurentPolynomial { var: Var::T, terms }
    }

    /// Substitute `sqrt(t) = -q` for graded Euler characteristic
    /// comparisons. Integer powers of `t` map to `q^2k` unchanged; the sign
    /// only matters on the half-integer exponents of even-component links.
    pub fn jones_to_q(&self) -> Self {
        debug_assert_eq!(self.var, Var::T);
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| {
                debug_assert_eq!(e % 2, 0);
                let sign = if (e / 2) % 2 == 0 { 1 } else { -1 };
                (2 * e, sign * c)
            })
            .collect();
        LaurentPolynomial { var: Var::Q, terms }
    }
}

fn fmt_exponent(f: &mut fmt::Formatter<'_>, letter: char, exp4: i64) -> fmt::Result {
    if exp4 == 4 {
        return write!(f, "{letter}");
    }
    if exp4 % 4 == 0 {
        let n = exp4 / 4;
        if n < 0 {
            return write!(f, "{letter}^({n})");
        }
        return write!(f, "{letter}^{n}");
    }
    let g = if exp4 % 2 == 0 { 2 } else { 4 };
    write!(f, "{letter}^({}/{})", exp4 / (4 / g), g)
}

impl fmt::Display for LaurentPolynomial {
    /// Terms in ascending exponent order with ` + ` / ` - ` separators,
    /// e.g. `t^3 + t^5 - t^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.var.letter();
        for (i, (&exp4, &coeff)) in self.terms.iter().enumerate() {
            if i == 0 {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.unsigned_abs();
            if exp4 == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                fmt_exponent(f, letter, exp4)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_the_fixed_form() {
        let p = LaurentPolynomial::from_int_terms(Var::T, &[(3, 1), (5, 1), (8, -1)]);
        assert_eq!(p.to_string(), "t^3 + t^5 - t^8");
        let q = LaurentPolynomial::from_int_terms(Var::T, &[(0, 1)]);
        assert_eq!(q.to_string(), "1");
        let r = LaurentPolynomial::from_int_terms(Var::T, &[(1, 1), (-4, -2)]);
        assert_eq!(r.to_string(), "-2*t^(-4) + t");
        let h = LaurentPolynomial::from_terms(Var::T, &[(2, 1), (-2, 3)]);
        assert_eq!(h.to_string(), "3*t^(-1/2) + t^(1/2)");
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut p = LaurentPolynomial::zero(Var::A);
        p.add_term(4, 2);
        p.add_term(4, -2);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn multiplication_and_span() {
        let d = LaurentPolynomial::from_int_terms(Var::A, &[(2, -1), (-2, -1)]);
        let sq = d.mul(&d);
        assert_eq!(
            sq,
            LaurentPolynomial::from_int_terms(Var::A, &[(4, 1), (0, 2), (-4, 1)])
        );
        assert_eq!(sq.span(), Some(Rational64::from_integer(8)));
    }

    #[test]
    fn bracket_to_jones_flips_and_scales() {
        let p = LaurentPolynomial::from_int_terms(Var::A, &[(-4, 1), (-12, 1), (-16, -1)]);
        let v = p.bracket_to_jones();
        assert_eq!(
            v,
            LaurentPolynomial::from_int_terms(Var::T, &[(1, 1), (3, 1), (4, -1)])
        );
        assert_eq!(v.to_string(), "t + t^3 - t^4");
    }
}
