//! Exact combinatorics of stacked lattices.
//!
//! This crate builds the lattices that arise from iterated lax colimits
//! ("stacking") of chain powers `C^n_m`, counts their maximal chains with
//! arbitrary-precision arithmetic, and realizes the classical bijections
//! between those chains and restricted words, m-partitions, first-quadrant
//! lattice walks, and Hermite histories.
//!
//! The main entry points:
//!
//! * [`Poset`] — finite posets with order queries, Hasse covers, lattice and
//!   distributivity checks.
//! * [`LaxSum`] / [`iterate_stacking`] — the concrete lax sum of a sequence
//!   of monotone maps and its iteration `Σ^k_n`.
//! * [`power`], [`star_sublattice`], [`row_star_sublattice`] — chain powers
//!   and the sublattice representations of the stacked lattices.
//! * [`count_maximal_chains`] and the closed-form families
//!   ([`catalan_kdim`], [`odd_double_factorial`], [`m_partition_count`],
//!   [`hypercube_count`], [`kreweras`], [`weighted_dyck_sum`]).
//! * [`grid`] — the column/row tables of chain counts, with renderers in
//!   [`io`].
//!
//! Every construction is pure and immutable after build; see the crate
//! examples for end-to-end tours of each capability.

pub mod biject;
pub mod chains;
pub mod cli;
pub mod error;
pub mod hypercube;
pub mod io;
pub mod lax;
pub mod monotone;
pub mod poset;
pub mod verify;

pub use biject::{
    chain_to_partition, chain_to_walk, chain_to_word, enumerate_fpf_involutions,
    enumerate_histories, enumerate_mpartitions, enumerate_stack_words, enumerate_walks,
    history_to_involution, partition_to_chain, walk_to_chain, word_to_chain, HermiteHistory,
    LatticeWalk, MPartition, StackWord, WalkStep,
};
pub use chains::{
    catalan_kdim, count_maximal_chains, enumerate_maximal_chains, grid, hypercube_count, kreweras,
    m_partition_count, odd_double_factorial, weighted_dyck_sum, Axis, GridCell, GridSpec,
    HeightSequence, SequenceGrid,
};
pub use error::{Error, Result};
pub use hypercube::{
    canonical_iso, chain, check_star_prime, column_embeddings, column_series, power,
    row_embeddings, row_series, row_star_sublattice, satisfies_row_star, satisfies_star,
    star_sublattice, HypercubeLattice, RowStarSublattice, StarSublattice,
};
pub use io::{export_dot, read_poset, render_grid, write_poset, GridFormat, PosetDocument};
pub use lax::{
    iterate_stacking, lax_pushout, lax_sum_meet_join, stacking_trace, verify_lax_pushout,
    LatticeSeries, LaxPushout, LaxSum, PushoutSquare, StackingTrace,
};
pub use monotone::{MapProperties, MonotoneMap};
pub use poset::{
    closure_of_covers, verify_iso, CoverDigraph, IsoWitness, Poset, DEFAULT_ELEMENT_BUDGET,
    MAX_POSET_SIZE,
};
pub use verify::{run_suite, Check, Suite};
