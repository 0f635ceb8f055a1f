use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{regularity, GradedModule};
use crate::error::Result;

/// A numerical polynomial in Newton form: `P(d) = Σ_k diffs[k] · C(d - anchor, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertPolynomial {
    anchor: i64,
    diffs: Vec<i64>,
}

fn binomial_at(t: i128, k: usize) -> i128 {
    // C(t, k) for any integer t.
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 0..k as i128 {
        num *= t - j;
        den *= j + 1;
    }
    num / den
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial {
            anchor: 0,
            diffs: Vec::new(),
        }
    }

    /// Interpolates through `(anchor + i, values[i])`.
    pub fn interpolate(anchor: i64, values: &[i64]) -> Self {
        let mut row: Vec<i64> = values.to_vec();
        let mut diffs = Vec::with_capacity(values.len());
        while !row.is_empty() {
            diffs.push(row[0]);
            row = row.windows(2).map(|w| w[1] - w[0]).collect();
        }
        while diffs.last() == Some(&0) {
            diffs.pop();
        }
        HilbertPolynomial { anchor, diffs }
    }

    pub fn eval(&self, d: i64) -> i64 {
        let t = (d - self.anchor) as i128;
        self.diffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c as i128 * binomial_at(t, k))
            .sum::<i128>() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.diffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.diffs.len().checked_sub(1)
    }

    /// Leading coefficient times `degree!`; the multiplicity for modules.
    pub fn normalized_leading_coefficient(&self) -> i64 {
        self.diffs.last().copied().unwrap_or(0)
    }

    /// Monomial-basis coefficients as reduced fractions `(num, den)`, constant term first.
    pub fn coefficients(&self) -> Vec<(i128, i128)> {
        let Some(deg) = self.degree() else { return Vec::new() };
        let big: i128 = (1..=deg as i128).product();
        let mut acc = vec![0i128; deg + 1];
        for (k, &c) in self.diffs.iter().enumerate() {
            // Π_{j<k} (d - anchor - j), integer coefficients
            let mut poly = vec![1i128];
            for j in 0..k as i128 {
                let root = self.anchor as i128 + j;
                let mut next = vec![0i128; poly.len() + 1];
                for (e, &a) in poly.iter().enumerate() {
                    next[e + 1] += a;
                    next[e] -= a * root;
                }
                poly = next;
            }
            let kfact: i128 = (1..=k as i128).product();
            let scale = c as i128 * (big / kfact);
            for (e, &a) in poly.iter().enumerate() {
                acc[e] += a * scale;
            }
        }
        acc.into_iter()
            .map(|n| {
                let g = gcd(n, big).max(1);
                (n / g, big / g)
            })
            .collect()
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coefficients();
        let mut first = true;
        for (e, &(n, den)) in coeffs.iter().enumerate().rev() {
            if n == 0 {
                continue;
            }
            let sign = if n < 0 { "-" } else if first { "" } else { "+" };
            let a = n.abs();
            let c = match (den, e) {
                (1, 0) => a.to_string(),
                (1, _) if a == 1 => String::new(),
                (1, _) => format!("{a}*"),
                (_, 0) => format!("{a}/{den}"),
                _ => format!("{a}/{den}*"),
            };
            let x = match e {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{e}"),
            };
            write!(f, "{sign}{c}{x}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Degreewise dimensions on a window, the Hilbert polynomial and the degree
/// from which the two agree.
#[derive(Debug, Clone, Serialize)]
pub struct HilbertData {
    pub values: BTreeMap<i64, usize>,
    pub polynomial: HilbertPolynomial,
    pub stability_bound: i64,
}

/// Hilbert data on a default window covering the generators and the regularity.
pub fn hilbert(m: &GradedModule) -> Result<HilbertData> {
    let lo = m.min_generator_degree().unwrap_or(0).min(0);
    let hi = if m.is_zero() {
        lo
    } else {
        regularity(m)? + m.ring().nvars() as i64 + 1
    };
    hilbert_window(m, lo, hi)
}

/// Hilbert data with values on `lo..=hi`.
pub fn hilbert_window(m: &GradedModule, lo: i64, hi: i64) -> Result<HilbertData> {
    let polynomial = if m.is_zero() {
        HilbertPolynomial::zero()
    } else {
        let reg = regularity(m)?;
        let pts: Vec<i64> = (1..=m.ring().nvars() as i64).map(|i| m.dim(reg + i) as i64).collect();
        HilbertPolynomial::interpolate(reg + 1, &pts)
    };
    let values: BTreeMap<i64, usize> = (lo..=hi).map(|d| (d, m.dim(d))).collect();
    let mut stability_bound = hi + 1;
    for d in (lo..=hi).rev() {
        if values[&d] as i64 != polynomial.eval(d) {
            break;
        }
        stability_bound = d;
    }
    Ok(HilbertData {
        values,
        polynomial,
        stability_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    #[test]
    fn newton_form() {
        let p = HilbertPolynomial::interpolate(0, &[1, 2, 3]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.to_string(), "d+1");
        let q = HilbertPolynomial::interpolate(2, &[6, 10, 15]);
        assert_eq!(q.eval(0), 1);
        assert_eq!(q.to_string(), "1/2*d^2+3/2*d+1");
        assert_eq!(HilbertPolynomial::interpolate(5, &[0, 0]).to_string(), "0");
        assert_eq!(HilbertPolynomial::interpolate(-3, &[-4, -4]).to_string(), "-4");
    }

    #[test]
    fn hilbert_examples() {
        let r = PolyRing::new(32003, 2).unwrap();
        let h = hilbert(&GradedModule::free(r, vec![0])).unwrap();
        assert_eq!(h.polynomial.to_string(), "d+1");
        assert_eq!(h.stability_bound, 0);
        let h = hilbert(&GradedModule::cyclic(r, 0, &["x1"]).unwrap()).unwrap();
        assert_eq!(h.polynomial.to_string(), "1");
        assert_eq!(h.stability_bound, 0);
        let h = hilbert(&GradedModule::power_of_irrelevant(r, 0, 3).unwrap()).unwrap();
        assert!(h.polynomial.is_zero());
        assert_eq!(h.values.range(0..6).map(|(_, v)| *v).collect::<Vec<_>>(), vec![1, 2, 3, 0, 0, 0]);
        assert_eq!(h.stability_bound, 3);
    }
}
