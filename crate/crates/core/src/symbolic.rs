//! Localization at monomial primes and the two flavours of symbolic power.
//!
//! `I^(n)` intersects the localizations at the minimal primes of `I`;
//! `I^<n>` intersects those at the maximal associated primes. Both use
//! `I^n S_p ∩ S = (I S_p ∩ S)^n`, so only the localized ideal is raised to
//! the n-th power.

use rayon::prelude::*;

use crate::decomposition::{
    associated_primes, irreducible_decomposition, max_associated_primes, minimal_primes, primes_of,
};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::ExponentVector;

/// `I S_p ∩ S`: every variable outside `p` is set to 1.
pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    if prime.support().is_empty() {
        return Err(Error::domain(
            "cannot localize at a prime with empty support",
        ));
    }
    if prime.nvars() != ideal.nvars() {
        return Err(Error::Dimension {
            expected: ideal.nvars(),
            found: prime.nvars(),
        });
    }
    let gens = ideal.gens().iter().map(|g| {
        let coords = g
            .coords()
            .iter()
            .enumerate()
            .map(|(i, &e)| if prime.contains_var(i + 1) { e } else { 0 })
            .collect();
        ExponentVector::new(coords)
    });
    MonomialIdeal::minimalize(gens, ideal.nvars())
}

/// `∩_p (I S_p ∩ S)^n` over the given primes.
pub fn localized_power_intersection(
    ideal: &MonomialIdeal,
    primes: &[MonomialPrime],
    n: u32,
) -> Result<MonomialIdeal> {
    let parts = primes
        .par_iter()
        .map(|p| localize(ideal, p)?.power(n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(&parts)
}

/// `I^(n)`, from the minimal primes.
pub fn symbolic_power_min(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    check_n(n)?;
    localized_power_intersection(ideal, &minimal_primes(ideal)?, n)
}

/// `I^<n>`, from the maximal associated primes.
pub fn symbolic_power_ass(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    check_n(n)?;
    localized_power_intersection(ideal, &max_associated_primes(ideal)?, n)
}

/// `I^<n>` intersecting over every associated prime rather than the maximal ones.
pub fn symbolic_power_all_ass(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    check_n(n)?;
    localized_power_intersection(ideal, &associated_primes(ideal)?, n)
}

/// `I^(n) = ∩ 𝔍_i^n` over the primary components `𝔍_i` of the minimal primes,
/// each formed by intersecting the irreducible components with that radical.
pub fn symbolic_power_via_primary_components(
    ideal: &MonomialIdeal,
    n: u32,
) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    check_n(n)?;
    let dec = irreducible_decomposition(ideal)?;
    let parts = minimal_primes(ideal)?
        .par_iter()
        .map(|p| {
            let with_radical: Vec<MonomialIdeal> = dec
                .components()
                .iter()
                .filter(|q| &q.radical() == p)
                .map(|q| q.to_ideal())
                .collect();
            MonomialIdeal::intersect_all(&with_radical)?.power(n)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(&parts)
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::domain("symbolic power exponent must be at least 1"))
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicPowerReport {
    pub n: u32,
    pub power: MonomialIdeal,
    pub symbolic_ass: MonomialIdeal,
    pub symbolic_min: MonomialIdeal,
    /// `I^n == I^(n)`.
    pub equal_min: bool,
    /// `I^n == I^<n>`.
    pub equal_ass: bool,
    /// Minimal generators of `I^(n)` outside `I^n`.
    pub witnesses: Vec<ExponentVector>,
}

pub fn compare_powers(ideal: &MonomialIdeal, n: u32) -> Result<SymbolicPowerReport> {
    let power = ideal.power(n)?;
    let symbolic_ass = symbolic_power_ass(ideal, n)?;
    let symbolic_min = symbolic_power_min(ideal, n)?;
    let witnesses: Vec<ExponentVector> = symbolic_min
        .gens()
        .iter()
        .filter(|g| !power.contains_unchecked(g))
        .cloned()
        .collect();
    let equal_min = power == symbolic_min;
    let equal_ass = power == symbolic_ass;
    if equal_min && !equal_ass {
        return Err(Error::Consistency(format!(
            "I^{n} = I^({n}) but I^{n} != I^<{n}>"
        )));
    }
    Ok(SymbolicPowerReport {
        n,
        power,
        symbolic_ass,
        symbolic_min,
        equal_min,
        equal_ass,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtfReport {
    pub ass: Vec<MonomialPrime>,
    /// `(n, Ass(I^n))` for `n = 1..=max_n`.
    pub ass_of_powers: Vec<(u32, Vec<MonomialPrime>)>,
    pub normally_torsion_free: bool,
    /// Filled when `I` has no embedded primes: whether `I^n == I^(n)` for
    /// every tested `n`, which must then agree with `normally_torsion_free`.
    pub powers_equal_symbolic: Option<bool>,
}

/// Checks `Ass(I^n) == Ass(I)` for `n = 1..=max_n`.
pub fn is_ntf_up_to(ideal: &MonomialIdeal, max_n: u32) -> Result<NtfReport> {
    ideal.require_proper_nonzero()?;
    check_n(max_n)?;
    let ass = associated_primes(ideal)?;
    let no_embedded = minimal_primes(ideal)?.len() == ass.len();
    let mut ass_of_powers = Vec::with_capacity(max_n as usize);
    let mut all_equal = true;
    let mut all_symbolic = true;
    for n in 1..=max_n {
        let pw = ideal.power(n)?;
        let ass_n = primes_of(&irreducible_decomposition(&pw)?);
        let same = ass_n == ass;
        all_equal &= same;
        if no_embedded {
            let sym = symbolic_power_min(ideal, n)? == pw;
            if sym != same {
                return Err(Error::Consistency(format!(
                    "n = {n}: Ass(I^n) == Ass(I) is {same} but I^n == I^(n) is {sym}"
                )));
            }
            all_symbolic &= sym;
        }
        ass_of_powers.push((n, ass_n));
    }
    Ok(NtfReport {
        ass,
        ass_of_powers,
        normally_torsion_free: all_equal,
        powers_equal_symbolic: no_embedded.then_some(all_symbolic),
    })
}
