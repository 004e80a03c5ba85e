//! Subgroup closure and right-coset partition verification, by exhaustive
//! enumeration (the groups here have order at most 120).

use std::collections::BTreeSet;

use itertools::Itertools;

use super::perm::Perm;

/// All of S_n, sorted for determinism.
pub fn symmetric_group(n: usize) -> Vec<Perm> {
    (1..=n as u8)
        .permutations(n)
        .map(|v| Perm::from_images(v).expect("valid permutation"))
        .sorted()
        .collect()
}

/// All of A_n.
pub fn alternating_group(n: usize) -> Vec<Perm> {
    symmetric_group(n).into_iter().filter(|p| p.is_even()).collect()
}

/// The subgroup generated by `gens` inside S_n, by closure.
pub fn generated_subgroup(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert(Perm::identity(n));
    let mut frontier: Vec<Perm> = vec![Perm::identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if set.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    set.into_iter().collect()
}

/// The ambient set a coset partition is claimed to cover.
#[derive(Clone, Debug)]
pub enum Ambient {
    Symmetric,
    Alternating,
    /// A named subgroup, given by generators.
    Generated(Vec<Perm>),
}

/// Outcome of a coset-partition check: either the right cosets H*mu over the
/// listed representatives partition the ambient set, or a witness of why not.
#[derive(Clone, Debug)]
pub enum PartitionOutcome {
    Partition { subgroup_order: usize },
    Failure { witness: String },
}

impl PartitionOutcome {
    pub fn is_partition(&self) -> bool {
        matches!(self, PartitionOutcome::Partition { .. })
    }
}

/// Check that the right cosets `H*mu`, `mu` in `reps`, partition `ambient`
/// with `H` generated by `subgroup_gens`.
pub fn verify_coset_partition(
    n: usize,
    subgroup_gens: &[Perm],
    ambient: &Ambient,
    reps: &[Perm],
) -> PartitionOutcome {
    let h = generated_subgroup(n, subgroup_gens);
    let ambient_set: BTreeSet<Perm> = match ambient {
        Ambient::Symmetric => symmetric_group(n).into_iter().collect(),
        Ambient::Alternating => alternating_group(n).into_iter().collect(),
        Ambient::Generated(gens) => generated_subgroup(n, gens).into_iter().collect(),
    };
    let mut covered: BTreeSet<Perm> = BTreeSet::new();
    for mu in reps {
        if !ambient_set.contains(mu) {
            return PartitionOutcome::Failure {
                witness: format!("representative {mu} lies outside the ambient set"),
            };
        }
        for g in &h {
            let x = g.compose(mu);
            if !ambient_set.contains(&x) {
                return PartitionOutcome::Failure {
                    witness: format!("coset element {x} = {g}*{mu} escapes the ambient set"),
                };
            }
            if !covered.insert(x.clone()) {
                return PartitionOutcome::Failure {
                    witness: format!("element {x} covered twice (rep {mu})"),
                };
            }
        }
    }
    if covered.len() != ambient_set.len() {
        let missing = ambient_set.difference(&covered).next().unwrap();
        return PartitionOutcome::Failure { witness: format!("element {missing} not covered") };
    }
    PartitionOutcome::Partition { subgroup_order: h.len() }
}
