use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};

use crate::rational::{display, q, Q};

/// Univariate polynomial in `t` with exact rational coefficients, lowest
/// degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TracePolynomial(Vec<Q>);

impl TracePolynomial {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TracePolynomial(coeffs)
    }

    pub fn zero() -> Self {
        TracePolynomial(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `t - root`
    pub fn linear(root: Q) -> Self {
        Self::new(vec![-root, Q::one()])
    }

    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Q {
        self.eval(&q(t))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::constant(Q::one()), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &TracePolynomial {
    type Output = TracePolynomial;

    fn add(self, rhs: &TracePolynomial) -> TracePolynomial {
        let n = self.0.len().max(rhs.0.len());
        TracePolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul for &TracePolynomial {
    type Output = TracePolynomial;

    fn mul(self, rhs: &TracePolynomial) -> TracePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return TracePolynomial::zero();
        }
        let mut out = vec![Q::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TracePolynomial::new(out)
    }
}

/// Highest degree first, e.g. `t^2 + t` or `1/12 t^4 - 1/12 t^2`.
impl fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                f.write_str(&display(&abs))?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{} {}", display(&abs), var)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TracePolynomial({self})")
    }
}

/// Lagrange interpolation through `(x_i, y_i)` with distinct nodes.
pub fn interpolate(points: &[(Q, Q)]) -> TracePolynomial {
    let mut acc = TracePolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = TracePolynomial::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let denom = (xi - xj).recip();
                basis = &basis * &TracePolynomial::linear(xj.clone()).scale(&denom);
            }
        }
        acc = &acc + &basis;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn display_forms() {
        let p = TracePolynomial::new(vec![q(0), q(1), q(1)]);
        assert_eq!(p.to_string(), "t^2 + t");
        let p = TracePolynomial::new(vec![q(0), q(0), frac(-1, 12), q(0), frac(1, 12)]);
        assert_eq!(p.to_string(), "1/12 t^4 - 1/12 t^2");
        assert_eq!(TracePolynomial::new(vec![q(-2), q(-1)]).to_string(), "-t - 2");
        assert_eq!(TracePolynomial::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic_and_interpolation() {
        let p = &TracePolynomial::linear(q(1)) * &TracePolynomial::linear(q(-1));
        assert_eq!(p, TracePolynomial::new(vec![q(-1), q(0), q(1)]));
        assert_eq!(p.eval_int(3), q(8));
        let pts: Vec<_> = (0..4).map(|x| (q(x), p.eval_int(x))).collect();
        assert_eq!(interpolate(&pts), p);
    }
}
