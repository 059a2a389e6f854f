//! Order spectrum, cyclic classes and length strata of a finite group.
//!
//! Two elements are equivalent when they generate the same cyclic subgroup;
//! an equivalence class (a *cyclic class*) is the generator set of one cyclic
//! subgroup and has size `phi(d)` for subgroup order `d`. The classes of a
//! fixed order `d` partition the order-level set `Lambda(d) = { g : |g| = d }`,
//! so their count is `m(d) = |Lambda(d)| / phi(d)`. Elements are further
//! stratified by the length of their order's exponent vector.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{euler_phi, factorize, PrimeBasis};
use crate::groups::FiniteGroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("the trivial group has an empty order spectrum")]
    TrivialGroup,
    #[error("{0} is not in the order spectrum")]
    NotInSpectrum(u64),
}

/// The generator set of one cyclic subgroup of order `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicClass {
    order: u64,
    members: Vec<usize>,
}

impl CyclicClass {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Member element indices, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

/// The full cyclic-class decomposition of `G \ {e}`, grouped by element order.
#[derive(Debug, Clone)]
pub struct ClassDecomposition {
    spectrum: Vec<u64>,
    classes: BTreeMap<u64, Vec<CyclicClass>>,
    strata: BTreeMap<u32, Vec<u64>>,
    basis: PrimeBasis,
}

impl ClassDecomposition {
    /// Distinct orders of non-identity elements, ascending.
    pub fn spectrum(&self) -> &[u64] {
        &self.spectrum
    }

    pub fn basis(&self) -> &PrimeBasis {
        &self.basis
    }

    /// The classes of order `d`, ordered by minimal member index.
    pub fn classes_of(&self, d: u64) -> &[CyclicClass] {
        self.classes.get(&d).map_or(&[], Vec::as_slice)
    }

    /// `m(d)`: the number of cyclic classes of order `d`.
    pub fn class_count(&self, d: u64) -> Result<usize, SpectrumError> {
        self.classes
            .get(&d)
            .map(Vec::len)
            .ok_or(SpectrumError::NotInSpectrum(d))
    }

    /// Length `l(d)` of the exponent vector of `d` over the primes of `|G|`.
    pub fn length_of(&self, d: u64) -> u32 {
        self.basis
            .partial_vector(d)
            .expect("spectrum orders divide |G|")
            .length()
    }

    /// Map from length `k` to the orders of that length, ascending.
    pub fn strata(&self) -> &BTreeMap<u32, Vec<u64>> {
        &self.strata
    }

    /// `U_k`: all element indices whose order has length `k`, ascending.
    /// Empty when no order has that length.
    pub fn stratum(&self, k: u32) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(orders) = self.strata.get(&k) {
            for d in orders {
                for class in &self.classes[d] {
                    out.extend_from_slice(&class.members);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Sorted distinct orders of non-identity elements.
pub fn order_spectrum(group: &FiniteGroup) -> Result<Vec<u64>, SpectrumError> {
    if group.order() < 2 {
        return Err(SpectrumError::TrivialGroup);
    }
    let mut orders: Vec<u64> = (1..group.order()).map(|i| group.element_order(i)).collect();
    orders.sort_unstable();
    orders.dedup();
    Ok(orders)
}

/// `Lambda(d)`: the element indices of order exactly `d`, ascending.
/// Empty (not an error) when `d` is outside the spectrum.
pub fn elements_of_order(group: &FiniteGroup, d: u64) -> Vec<usize> {
    (0..group.order())
        .filter(|&i| group.element_order(i) == d)
        .collect()
}

/// Partitions `G \ {e}` into cyclic classes, grouped by order and stratified
/// by exponent-vector length.
pub fn cyclic_classes(group: &FiniteGroup) -> Result<ClassDecomposition, SpectrumError> {
    if group.order() < 2 {
        return Err(SpectrumError::TrivialGroup);
    }
    let basis = factorize(group.order() as u64).expect("|G| >= 2");

    let mut assigned = vec![false; group.order()];
    let mut classes: BTreeMap<u64, Vec<CyclicClass>> = BTreeMap::new();
    for g in 1..group.order() {
        if assigned[g] {
            continue;
        }
        let d = group.element_order(g);
        // Generators of <g> are exactly its members of order d.
        let mut members: Vec<usize> = group
            .cyclic_subgroup(g)
            .into_iter()
            .filter(|&x| group.element_order(x) == d)
            .collect();
        members.sort_unstable();
        debug_assert_eq!(members.len() as u64, euler_phi(d));
        for &x in &members {
            assigned[x] = true;
        }
        classes
            .entry(d)
            .or_default()
            .push(CyclicClass { order: d, members });
    }

    let spectrum: Vec<u64> = classes.keys().copied().collect();
    let mut strata: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for &d in &spectrum {
        let k = basis
            .partial_vector(d)
            .expect("element orders divide |G|")
            .length();
        strata.entry(k).or_default().push(d);
    }

    Ok(ClassDecomposition {
        spectrum,
        classes,
        strata,
        basis,
    })
}
