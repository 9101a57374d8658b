//! Partitions and permutations of `{0, .., d-1}`, and the brute-force
//! monodromy enumeration built on them.

mod monodromy;
mod partition;
mod permutation;

pub use monodromy::{
    count_all_tuples, count_for_representative, count_monodromy_tuples, tally_monodromy,
    EnumerationBudget, MonodromyTally, DEFAULT_BUDGET, MAX_ENUMERATION_DEGREE,
};
pub use partition::{partitions_of, Partition};
pub use permutation::{is_transitive, transpositions, Permutation, UnionFind};
