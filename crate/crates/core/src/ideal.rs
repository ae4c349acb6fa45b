//! Monomial ideals held by their canonical minimal generating set.
//!
//! Every constructor minimalizes, so two ideals are equal exactly when their
//! generator sequences are equal.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// Divisibility antichain of `gens` in canonical order.
fn antichain(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    // Sorted by degree, so any divisor of a candidate has already been seen.
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize<I>(gens: I, nvars: usize) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        for g in &gens {
            check_dim(nvars, g.nvars())?;
        }
        Ok(MonomialIdeal {
            nvars,
            gens: antichain(gens),
        })
    }

    pub(crate) fn from_antichain_unchecked(nvars: usize, gens: Vec<ExponentVector>) -> Self {
        MonomialIdeal {
            nvars,
            gens: antichain(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![ExponentVector::zeros(nvars)],
        }
    }

    /// `(t_i : i in vars)`, `vars` 1-indexed.
    pub fn from_variables(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::from_antichain_unchecked(
            nvars,
            vars.into_iter()
                .map(|v| ExponentVector::pure_power(nvars, v - 1, 1))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators `G(I)` in canonical order.
    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_zero())
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::domain("the zero ideal is not allowed here"))
        } else if self.is_unit() {
            Err(Error::domain("the unit ideal is not allowed here"))
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.coords().iter().all(|&e| e <= 1))
    }

    /// `t^a` in I iff some minimal generator divides it.
    pub fn contains_monomial(&self, a: &ExponentVector) -> Result<bool> {
        check_dim(self.nvars, a.nvars())?;
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.nvars, other.nvars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for v in &self.gens {
            for w in &other.gens {
                products.push(v.checked_add(w)?);
            }
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: antichain(products),
        })
    }

    /// `I^n` for `n >= 1`, by repeated squaring.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::domain("power exponent must be at least 1"));
        }
        let mut result: Option<MonomialIdeal> = None;
        let mut base = self.clone();
        let mut k = n;
        loop {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.multiply(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.multiply(&base)?;
        }
        Ok(result.expect("n >= 1"))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: antichain(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    /// Pairwise lcm of generators, then minimalize.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for v in &self.gens {
            for w in &other.gens {
                lcms.push(v.lcm(w));
            }
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: antichain(lcms),
        })
    }

    /// Left fold of [`intersect`](Self::intersect). An empty input has no
    /// well-defined ambient ring and is rejected.
    pub fn intersect_all<'a, I>(ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::domain("cannot intersect an empty family of ideals"))?;
        iter.try_fold(first.clone(), |acc, j| acc.intersect(j))
    }

    /// `(I : t^f)`.
    pub fn colon_monomial(&self, f: &ExponentVector) -> Result<MonomialIdeal> {
        check_dim(self.nvars, f.nvars())?;
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: antichain(self.gens.iter().map(|v| v.saturating_sub(f)).collect()),
        })
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: antichain(self.gens.iter().map(|v| v.support_vector()).collect()),
        }
    }

    /// Componentwise maximum exponent over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.nvars];
        for g in &self.gens {
            for (mk, &e) in m.iter_mut().zip(g.coords()) {
                *mk = (*mk).max(e);
            }
        }
        m
    }

    /// Parses the text syntax with an explicit variable count.
    pub fn parse_with_vars(text: &str, nvars: usize) -> Result<MonomialIdeal> {
        parse_ideal(text, Some(nvars))
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    /// Comma- or newline-separated monomials (`t1*t2^2`) or exponent vectors
    /// (`(1,2,0)`), optionally wrapped in one pair of parentheses. A
    /// `vars s` line fixes the ambient variable count; otherwise it is the
    /// largest variable index or vector length seen. `#` starts a comment.
    fn from_str(text: &str) -> Result<Self> {
        parse_ideal(text, None)
    }
}

fn strip_wrapper(text: &str) -> String {
    let trimmed = text.trim();
    if !(trimmed.starts_with('(') && trimmed.ends_with(')') && trimmed.contains('t')) {
        return text.to_string();
    }
    let mut depth = 0i32;
    for (i, c) in trimmed.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 < trimmed.len() {
                    return text.to_string();
                }
            }
            _ => {}
        }
    }
    let start = text.find('(').expect("checked above");
    let end = text.rfind(')').expect("checked above");
    let mut s = text.to_string();
    s.replace_range(end..end + 1, " ");
    s.replace_range(start..start + 1, " ");
    s
}

fn split_top_level(line: &str) -> Vec<&str> {
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in line.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&line[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&line[start..]);
    items
}

fn parse_ideal(text: &str, nvars_hint: Option<usize>) -> Result<MonomialIdeal> {
    let mut declared = nvars_hint;
    let mut body = String::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut words = line.split_whitespace();
        if words.next() == Some("vars") {
            let n = words
                .next()
                .and_then(|w| w.parse::<usize>().ok())
                .filter(|_| words.next().is_none())
                .ok_or_else(|| Error::parse(lineno + 1, "expected `vars <count>`"))?;
            if let Some(prev) = declared {
                if prev != n {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("variable count {n} conflicts with {prev}"),
                    ));
                }
            }
            declared = Some(n);
            body.push('\n');
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    let body = strip_wrapper(&body);

    // First pass: collect items with their line numbers and infer nvars.
    let mut items: Vec<(usize, &str)> = Vec::new();
    for (lineno, line) in body.lines().enumerate() {
        for item in split_top_level(line) {
            let item = item.trim();
            if !item.is_empty() {
                items.push((lineno + 1, item));
            }
        }
    }
    let nvars = match declared {
        Some(n) => n,
        None => {
            let mut n = 0usize;
            for &(lineno, item) in &items {
                if item.starts_with('(') {
                    let v =
                        crate::monomial::parse_vector(item).map_err(|m| Error::parse(lineno, m))?;
                    n = n.max(v.nvars());
                } else if item != "0" {
                    for (var, _) in
                        crate::monomial::parse_factors(item).map_err(|m| Error::parse(lineno, m))?
                    {
                        n = n.max(var);
                    }
                }
            }
            n
        }
    };
    let mut gens = Vec::with_capacity(items.len());
    for (lineno, item) in items {
        if item == "0" {
            continue;
        }
        gens.push(ExponentVector::parse_term(item, nvars).map_err(|m| Error::parse(lineno, m))?);
    }
    MonomialIdeal::minimalize(gens, nvars)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `q_alpha = (t_i^{alpha_i} : alpha_i >= 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct IrreducibleIdeal {
    alpha: ExponentVector,
}

impl IrreducibleIdeal {
    pub fn new(alpha: ExponentVector) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::domain(
                "an irreducible ideal needs a nonzero exponent vector",
            ));
        }
        Ok(IrreducibleIdeal { alpha })
    }

    /// Recognizes an ideal generated by pure powers of distinct variables.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let mut alpha = vec![0u32; ideal.nvars()];
        for g in ideal.gens() {
            let mut support = g.support();
            match (support.next(), support.next()) {
                (Some(i), None) => alpha[i] = g.coords()[i],
                _ => {
                    return Err(Error::domain(format!(
                        "{ideal} is not generated by pure powers"
                    )))
                }
            }
        }
        IrreducibleIdeal::new(ExponentVector::new(alpha))
    }

    pub fn alpha(&self) -> &ExponentVector {
        &self.alpha
    }

    pub fn nvars(&self) -> usize {
        self.alpha.nvars()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.alpha.nvars();
        MonomialIdeal {
            nvars: n,
            gens: antichain(
                self.alpha
                    .support()
                    .map(|i| ExponentVector::pure_power(n, i, self.alpha.coords()[i]))
                    .collect(),
            ),
        }
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::from_support(self.nvars(), self.alpha.support().map(|i| i + 1))
    }

    /// `q_self ⊆ q_other`: every pure power of `self` is divisible by one of `other`.
    pub fn is_subset_of(&self, other: &IrreducibleIdeal) -> bool {
        let (a, b) = (self.alpha.coords(), other.alpha.coords());
        a.iter()
            .zip(b)
            .all(|(&ai, &bi)| ai == 0 || (bi >= 1 && bi <= ai))
    }

    pub fn contains_monomial(&self, m: &ExponentVector) -> bool {
        self.alpha
            .coords()
            .iter()
            .zip(m.coords())
            .any(|(&ai, &mi)| ai >= 1 && mi >= ai)
    }
}

impl fmt::Display for IrreducibleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Variable order reads better than degree order here.
        write!(f, "(")?;
        for (k, i) in self.alpha.support().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let e = self.alpha.coords()[i];
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        write!(f, ")")
    }
}

/// Prime monomial ideal generated by a set of variables (1-indexed).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialPrime {
    nvars: usize,
    support: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn from_support(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let support: BTreeSet<usize> = vars.into_iter().collect();
        debug_assert!(support.iter().all(|&v| v >= 1 && v <= nvars));
        MonomialPrime { nvars, support }
    }

    /// The irrelevant maximal ideal `(t1, ..., ts)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::from_support(nvars, 1..=nvars)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.support.contains(&var)
    }

    pub fn is_maximal(&self) -> bool {
        self.support.len() == self.nvars
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.support.is_subset(&other.support)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_variables(self.nvars, self.support.iter().copied())
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
            .then_with(|| self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support.iter().map(|v| format!("t{v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}
