//! Ordered enumeration of parameterized solutions with FPT delay.
//!
//! Solutions are finite sets of atoms ([`OpSet`]) ordered by cardinality and
//! then by a canonical byte encoding. The engine ([`enumerate_ordered`]) pulls
//! the least solution from a duplicate-free priority queue, emits it, and
//! pushes its neighbours; given a neighbourhood function that is computable in
//! FPT time, consecutive outputs are separated by FPT time as well.
//!
//! Neighbourhoods come from two places. Any problem that can list its minimal
//! solutions ([`MinimalSolutions`]) gets one for free through
//! [`GenericNeighbourhood`]. Cluster editing also ships the direct merge/split
//! neighbourhood in [`cluster`].
//!
//! Problems:
//!
//! * [`cluster`]: cluster editing by edge insertions and deletions;
//! * [`chordal`]: chordal completion (minimum fill-in);
//! * [`triangle`]: triangle deletion by vertex removal;
//! * [`closest_string`]: binary closest string;
//! * [`backdoors`]: weak and strong Horn / 2CNF backdoors;
//! * [`minones`]: satisfying assignments of bounded weight.
//!
//! [`oracle`] enumerates candidate sets exhaustively and serves as ground
//! truth in the test suite.
//!
//! ```
//! use enumfpt::cluster::{ClusterInstance, MergeSplit};
//! use enumfpt::graph::Graph;
//! use enumfpt::enumerate_all;
//!
//! let p3 = ClusterInstance::new(Graph::path(3), 1);
//! let all = enumerate_all(&MergeSplit::new(&p3)).unwrap();
//! let lines: Vec<String> = all.iter().map(|s| s.to_string()).collect();
//! assert_eq!(lines, ["{del(1,2)}", "{del(2,3)}", "{add(1,3)}"]);
//! ```

pub mod backdoors;
pub mod chordal;
pub mod closest_string;
pub mod cluster;
pub mod cnf;
mod enumerate;
mod error;
pub mod graph;
pub mod minones;
pub mod oracle;
mod order;
mod problem;
mod queue;
mod search;
pub mod triangle;

pub use enumerate::{
    build_neighbourhood, enumerate_all, enumerate_generic, enumerate_minimal, enumerate_ordered,
    GenericNeighbourhood, RunSummary,
};
pub use error::{Error, Result};
pub use order::{compare_solutions, inclusion_minimal, sort_dedup, Atom, OpSet, Position, SolutionKey, Var};
pub use problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
pub use queue::SolutionQueue;
pub use search::SearchStats;

// The guide under `book/` is compiled as doc-tests so its snippets stay honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ordering.md")]
    mod ordering {}
    #[doc = include_str!("../../../book/src/neighbourhoods.md")]
    mod neighbourhoods {}
    #[doc = include_str!("../../../book/src/graph-modification.md")]
    mod graph_modification {}
    #[doc = include_str!("../../../book/src/cluster-editing.md")]
    mod cluster_editing {}
    #[doc = include_str!("../../../book/src/chordal-completion.md")]
    mod chordal_completion {}
    #[doc = include_str!("../../../book/src/closest-string.md")]
    mod closest_string {}
    #[doc = include_str!("../../../book/src/backdoors.md")]
    mod backdoors {}
    #[doc = include_str!("../../../book/src/minones.md")]
    mod minones {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
