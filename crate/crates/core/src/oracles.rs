//! Brute-force reference checks for the fast algorithms.
//!
//! Each function recomputes a fact from definitions alone (products of
//! generators, colon ideals over a box, dual certificates) and reports
//! whether it agrees with the library. They are slow by design and meant for
//! tests on small ideals.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::decomposition::{ass_witness_scan, associated_primes, irreducible_decomposition};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::ExponentVector;
use crate::polyhedra::{
    closure_contains, covering_polyhedron, integral_closure_power, PolyLimits, RationalVector,
};
use crate::symbolic::localize;

/// All points of the box `[0, bounds[0]] × … × [0, bounds[s-1]]`.
pub fn box_points(bounds: &[u32]) -> Vec<ExponentVector> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector::new).collect()
}

/// Every nonzero monomial prime in `nvars` variables.
pub fn all_primes(nvars: usize) -> Vec<MonomialPrime> {
    (1u64..(1 << nvars))
        .map(|mask| {
            MonomialPrime::from_support(
                nvars,
                (0..nvars).filter(|b| mask & (1 << b) != 0).map(|b| b + 1),
            )
        })
        .collect()
}

/// Whether some `k` generators (with repetition, from `start` on) have a sum
/// dividing `budget`.
fn sum_of_gens_divides(
    gens: &[Vec<u32>],
    start: usize,
    k: u32,
    budget: &mut Vec<u32>,
    memo: &mut HashMap<(usize, u32, Vec<u32>), bool>,
) -> bool {
    if k == 0 {
        return true;
    }
    if start == gens.len() {
        return false;
    }
    let key = (start, k, budget.clone());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let g = &gens[start];
    let mut found = false;
    if g.iter().zip(budget.iter()).all(|(a, b)| a <= b) {
        for (b, a) in budget.iter_mut().zip(g) {
            *b -= a;
        }
        found = sum_of_gens_divides(gens, start, k - 1, budget, memo);
        for (b, a) in budget.iter_mut().zip(g) {
            *b += a;
        }
    }
    if !found {
        found = sum_of_gens_divides(gens, start + 1, k, budget, memo);
    }
    memo.insert(key, found);
    found
}

/// `t^{pa} ∈ I^{pn}`, decided by searching products of `pn` generators.
pub fn in_power_by_products(ideal: &MonomialIdeal, a: &ExponentVector, p: u32, n: u32) -> bool {
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.coords().to_vec()).collect();
    let mut budget: Vec<u32> = a.coords().iter().map(|&x| x * p).collect();
    sum_of_gens_divides(&gens, 0, p * n, &mut budget, &mut HashMap::new())
}

/// A point `u >= 0` with `g·u >= 1` for every generator and `a·u < n`,
/// checked directly against the generators. Such a `u` shows
/// `t^{pa} ∉ I^{pn}` for every `p`.
pub fn dual_certificate<'a>(
    ideal: &MonomialIdeal,
    candidates: &'a [RationalVector],
    a: &ExponentVector,
    n: u32,
) -> Option<&'a RationalVector> {
    let n_q = BigRational::from_integer(n.into());
    let point = RationalVector::from(a);
    candidates.iter().find(|u| {
        u.is_nonnegative()
            && ideal
                .gens()
                .iter()
                .all(|g| RationalVector::from(g).dot(u) >= BigRational::one())
            && point.dot(u) < n_q
    })
}

/// Compares the integral closure of `I^n` on the box `[0, n·max]^s` with
/// the definition: a point is in the closure exactly when `t^{pa} ∈ I^{pn}`
/// for some `p` up to the lcm of the vertex denominators of `Q(I)`, and is
/// outside exactly when a dual certificate exists (confirmed directly for
/// `p <= 4`). Returns the first disagreeing point.
pub fn closure_disagreement(
    ideal: &MonomialIdeal,
    n: u32,
    limits: &PolyLimits,
) -> Result<Option<ExponentVector>> {
    let vertices = covering_polyhedron(ideal)?.vertex_points(limits)?;
    let p0 = vertices
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(&v.denominator_lcm()))
        .to_u32()
        .ok_or(Error::Overflow)?;
    let bounds: Vec<u32> = ideal.max_exponents().iter().map(|m| m * n).collect();
    let closure = integral_closure_power(ideal, n, limits)?;
    for a in box_points(&bounds) {
        let inside = closure_contains(ideal, n, &a, limits)?;
        let agrees = inside == closure.contains_monomial(&a)?
            && if inside {
                (1..=p0).any(|p| in_power_by_products(ideal, &a, p, n))
            } else {
                dual_certificate(ideal, &vertices, &a, n).is_some()
                    && (1..=p0.min(4)).all(|p| !in_power_by_products(ideal, &a, p, n))
            };
        if !agrees {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Whether `Ass(I)` equals the set of primes arising as `I : f` for `f` in
/// the box `[0, max·s]^s`.
pub fn ass_matches_colon_scan(ideal: &MonomialIdeal) -> Result<bool> {
    let bound = ideal.max_exponents().into_iter().max().unwrap_or(0) * ideal.nvars() as u32;
    let scanned: BTreeSet<MonomialPrime> = ass_witness_scan(ideal, bound).into_keys().collect();
    let ass: BTreeSet<MonomialPrime> = associated_primes(ideal)?.into_iter().collect();
    Ok(scanned == ass)
}

/// Whether the decomposition intersects back to `I`.
pub fn decomposition_reintersects(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(&irreducible_decomposition(ideal)?.intersection()? == ideal)
}

/// Whether `(I_P)^n = (I^n)_P` for every monomial prime `P`.
pub fn localization_commutes(ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    let power = ideal.power(n)?;
    for p in all_primes(ideal.nvars()) {
        if localize(ideal, &p)?.power(n)? != localize(&power, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        text.parse().unwrap()
    }

    #[test]
    fn box_has_product_size() {
        assert_eq!(box_points(&[1, 2]).len(), 6);
        assert_eq!(all_primes(3).len(), 7);
    }

    #[test]
    fn products_decide_power_membership() {
        let i = ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2");
        let a = ExponentVector::new(vec![1, 1, 0, 1]);
        assert!(!in_power_by_products(&i, &a, 1, 1));
        assert!(in_power_by_products(&i, &a, 2, 1));
    }

    #[test]
    fn four_cycle_agrees_with_every_oracle() {
        let i = ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2");
        let limits = PolyLimits::default();
        for n in 1..=2 {
            assert_eq!(closure_disagreement(&i, n, &limits).unwrap(), None);
            assert!(localization_commutes(&i, n).unwrap());
        }
        assert!(ass_matches_colon_scan(&i).unwrap());
        assert!(decomposition_reintersects(&i).unwrap());
    }
}
