//! Exponent vectors: the monomial `t^a = t1^a1 * ... * ts^as` stored as `a`.
//!
//! Variables are written `t1..ts` in text and are 1-indexed there; the
//! underlying vector is an ordinary 0-indexed slice.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    /// `power * e_var`, with `var` 0-indexed.
    pub fn pure_power(nvars: usize, var: usize, power: u32) -> Self {
        let mut v = vec![0; nvars];
        v[var] = power;
        ExponentVector(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// 0-indexed positions with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    /// `self` divides `other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, k: u32) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise `max(self - other, 0)`: the exponent of `t^self / gcd(t^self, t^other)`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Every positive entry replaced by 1.
    pub fn support_vector(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Parses a single term: `t3*t1^2`, `1`, or the vector form `(2,0,1)`.
    /// Monomial syntax needs the ambient variable count.
    pub fn parse_term(text: &str, nvars: usize) -> std::result::Result<ExponentVector, String> {
        let text = text.trim();
        if text.starts_with('(') {
            let v = parse_vector(text)?;
            if v.nvars() != nvars {
                return Err(format!(
                    "vector {text} has length {}, expected {nvars}",
                    v.nvars()
                ));
            }
            return Ok(v);
        }
        let mut coords = vec![0u32; nvars];
        for (var, exp) in parse_factors(text)? {
            if var > nvars {
                return Err(format!("variable t{var} outside t1..t{nvars}"));
            }
            coords[var - 1] = coords[var - 1]
                .checked_add(exp)
                .ok_or_else(|| "exponent overflow".to_string())?;
        }
        Ok(ExponentVector(coords))
    }

    /// `(1,2,0,0)`.
    pub fn to_vector_string(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// `(a,b,c)` with natural entries.
pub(crate) fn parse_vector(text: &str) -> std::result::Result<ExponentVector, String> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("malformed exponent vector {text:?}"))?;
    if inner.trim().is_empty() {
        return Ok(ExponentVector(Vec::new()));
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad exponent {:?} in {text:?}", p.trim()))
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(ExponentVector)
}

/// Splits a `*`-product into `(variable, exponent)` pairs, 1-indexed.
/// `1` is the empty product.
pub(crate) fn parse_factors(text: &str) -> std::result::Result<Vec<(usize, u32)>, String> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e = e
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad exponent in {factor:?}"))?;
                (b.trim(), e)
            }
            None => (factor, 1),
        };
        if base == "1" {
            continue;
        }
        let idx = base
            .strip_prefix('t')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| format!("expected a variable t1, t2, ... but found {base:?}"))?;
        out.push((idx, exp));
    }
    Ok(out)
}

/// Graded order: total degree first; within a degree, lexicographically
/// larger vectors (more weight on t1) come first.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial form, `t1*t2^2`; the empty product prints as `1`.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}
