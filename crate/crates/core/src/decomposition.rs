//! Irredundant irreducible decomposition and the associated primes it exposes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::ideal::{IrreducibleIdeal, MonomialIdeal, MonomialPrime};
use crate::monomial::ExponentVector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrreducibleDecomposition {
    nvars: usize,
    components: Vec<IrreducibleIdeal>,
}

impl IrreducibleDecomposition {
    /// Takes the components as given after sorting and deduplication;
    /// does not check irredundancy.
    pub fn from_components(nvars: usize, mut components: Vec<IrreducibleIdeal>) -> Result<Self> {
        for q in &components {
            if q.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: q.nvars(),
                });
            }
        }
        components.sort();
        components.dedup();
        Ok(IrreducibleDecomposition { nvars, components })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[IrreducibleIdeal] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Intersection of all components.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        let ideals: Vec<MonomialIdeal> = self.components.iter().map(|q| q.to_ideal()).collect();
        MonomialIdeal::intersect_all(&ideals)
    }

    /// No component contains another. For monomial irreducible ideals this is
    /// equivalent to `I != ∩_{i≠j} q_i` for every `j`.
    pub fn is_irredundant(&self) -> bool {
        self.components.iter().enumerate().all(|(j, qj)| {
            !self
                .components
                .iter()
                .enumerate()
                .any(|(i, qi)| i != j && qi.is_subset_of(qj))
        })
    }

    /// Radicals pairwise distinct.
    pub fn is_minimal(&self) -> bool {
        let radicals: HashSet<MonomialPrime> =
            self.components.iter().map(|q| q.radical()).collect();
        radicals.len() == self.components.len()
    }

    /// Drops redundant components, scanning in descending canonical order.
    pub fn irredundant(&self) -> IrreducibleDecomposition {
        let mut kept: Vec<bool> = vec![true; self.components.len()];
        for j in (0..self.components.len()).rev() {
            let qj = &self.components[j];
            let redundant = self
                .components
                .iter()
                .enumerate()
                .any(|(i, qi)| i != j && kept[i] && qi.is_subset_of(qj));
            if redundant {
                kept[j] = false;
            }
        }
        IrreducibleDecomposition {
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .zip(kept)
                .filter(|(_, k)| *k)
                .map(|(q, _)| q.clone())
                .collect(),
        }
    }
}

impl fmt::Display for IrreducibleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∩ ")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Order in which the splitting recursion picks a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitRule {
    /// Canonically least mixed generator, least variable in its support.
    LeastIndex,
    /// Canonically greatest mixed generator, greatest variable in its support.
    GreatestIndex,
}

const CACHE_CAPACITY: usize = 8192;

fn cache() -> &'static RwLock<HashMap<MonomialIdeal, IrreducibleDecomposition>> {
    static CACHE: OnceLock<RwLock<HashMap<MonomialIdeal, IrreducibleDecomposition>>> =
        OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The unique irredundant irreducible decomposition of a proper nonzero
/// monomial ideal. Results are memoized per ideal.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<IrreducibleDecomposition> {
    ideal.require_proper_nonzero()?;
    if let Some(hit) = cache().read().expect("cache poisoned").get(ideal) {
        return Ok(hit.clone());
    }
    let dec = decompose_with_rule(ideal, SplitRule::LeastIndex)?;
    let mut guard = cache().write().expect("cache poisoned");
    if guard.len() >= CACHE_CAPACITY {
        guard.clear();
    }
    guard.insert(ideal.clone(), dec.clone());
    Ok(dec)
}

/// Uncached decomposition with an explicit splitting rule. Every rule yields
/// the same irredundant result.
pub fn decompose_with_rule(
    ideal: &MonomialIdeal,
    rule: SplitRule,
) -> Result<IrreducibleDecomposition> {
    ideal.require_proper_nonzero()?;
    let nvars = ideal.nvars();
    let mut leaves: BTreeSet<ExponentVector> = BTreeSet::new();
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(current) = stack.pop() {
        if !seen.insert(current.clone()) {
            continue;
        }
        let mixed = match rule {
            SplitRule::LeastIndex => current.gens().iter().find(|g| g.support_size() >= 2),
            SplitRule::GreatestIndex => current.gens().iter().rev().find(|g| g.support_size() >= 2),
        };
        let Some(g) = mixed else {
            // Only pure powers remain, at most one per variable.
            let mut alpha = vec![0u32; nvars];
            for p in current.gens() {
                let i = p
                    .support()
                    .next()
                    .expect("proper ideal has no unit generator");
                alpha[i] = p.coords()[i];
            }
            leaves.insert(ExponentVector::new(alpha));
            continue;
        };
        let i = match rule {
            SplitRule::LeastIndex => g.support().next(),
            SplitRule::GreatestIndex => g.support().last(),
        }
        .expect("mixed generator");
        let pure = ExponentVector::pure_power(nvars, i, g.coords()[i]);
        let rest = g.saturating_sub(&pure);
        stack.push(current.sum(&MonomialIdeal::from_antichain_unchecked(nvars, vec![pure]))?);
        stack.push(current.sum(&MonomialIdeal::from_antichain_unchecked(nvars, vec![rest]))?);
    }
    let components = leaves
        .into_iter()
        .map(IrreducibleIdeal::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(IrreducibleDecomposition::from_components(nvars, components)?.irredundant())
}

/// All pure powers `t_j^{v_ij}` read off the generators of `I`.
pub fn exponent_duality(ideal: &MonomialIdeal) -> Result<BTreeSet<ExponentVector>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.nvars();
    Ok(ideal
        .gens()
        .iter()
        .flat_map(|g| {
            g.support()
                .map(move |j| ExponentVector::pure_power(n, j, g.coords()[j]))
                .collect::<Vec<_>>()
        })
        .collect())
}

/// Radicals of the irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let dec = irreducible_decomposition(ideal)?;
    Ok(primes_of(&dec))
}

pub(crate) fn primes_of(dec: &IrreducibleDecomposition) -> Vec<MonomialPrime> {
    let set: BTreeSet<MonomialPrime> = dec.components().iter().map(|q| q.radical()).collect();
    set.into_iter().collect()
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(minimal_elements(&associated_primes(ideal)?))
}

pub fn embedded_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    let min = minimal_elements(&ass);
    Ok(ass.into_iter().filter(|p| !min.contains(p)).collect())
}

/// Inclusion-maximal associated primes.
pub fn max_associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && p.is_subset_of(q)))
        .cloned()
        .collect())
}

pub(crate) fn minimal_elements(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect()
}

/// Brute-force search for `f` with every entry at most `degree_bound` and
/// `(I : t^f) = p`. Intended as an independent check on [`associated_primes`].
pub fn ass_witness_oracle(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
    degree_bound: u32,
) -> Option<ExponentVector> {
    if prime.nvars() != ideal.nvars() {
        return None;
    }
    let target = prime.to_ideal();
    box_points(ideal.nvars(), degree_bound).find(|f| {
        ideal
            .colon_monomial(f)
            .map(|c| c == target)
            .unwrap_or(false)
    })
}

/// One pass over the box `[0, degree_bound]^s`, recording the first witness
/// found for every prime that arises as a colon ideal.
pub fn ass_witness_scan(
    ideal: &MonomialIdeal,
    degree_bound: u32,
) -> BTreeMap<MonomialPrime, ExponentVector> {
    let n = ideal.nvars();
    let mut found = BTreeMap::new();
    for f in box_points(n, degree_bound) {
        let Ok(colon) = ideal.colon_monomial(&f) else {
            continue;
        };
        let is_prime = !colon.is_zero() && colon.gens().iter().all(|g| g.degree() == 1);
        if is_prime {
            let vars = colon
                .gens()
                .iter()
                .map(|g| g.support().next().expect("degree one") + 1);
            found
                .entry(MonomialPrime::from_support(n, vars))
                .or_insert(f);
        }
    }
    found
}

fn box_points(nvars: usize, bound: u32) -> impl Iterator<Item = ExponentVector> {
    let mut current: Option<Vec<u32>> = Some(vec![0; nvars]);
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut k = 0;
        loop {
            if k == nvars {
                current = None;
                break;
            }
            if next[k] < bound {
                next[k] += 1;
                current = Some(next);
                break;
            }
            next[k] = 0;
            k += 1;
        }
        Some(ExponentVector::new(out))
    })
}
