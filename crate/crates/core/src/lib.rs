//! Powers of edge ideals of finite simple graphs, linear-quotients orders
//! of their generators, and the constructions that produce such orders.
//!
//! ```
//! use linquo::{fixtures, verify_linear_quotients};
//!
//! let (_, order) = fixtures::named_order("istanbul").unwrap();
//! assert_eq!(order.len(), 15);
//! assert!(verify_linear_quotients(&order).pass);
//! ```

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod linquot;
pub mod monomial;
pub mod orderings;
pub mod power;

pub use error::{Error, Result};
pub use graph::{Graph, PatternId, Vertex, VertexSet};
pub use linquot::{
    colon_min_gens, duplication_order, expansion_order, find_lq_order, greedy_lq_order,
    verify_linear_quotients, ExpansionContext, GeneratorOrdering, LqReport, Provenance,
    SearchOutcome, SearchResult, TieBreak, Witness,
};
pub use monomial::{Monomial, VariableIndex};
pub use orderings::{
    admissible_order, classify_buckets, compatible_orders, compatible_step, efficient_ordering,
    is_admissible, pure_power_order, Bucket, EdgeOrdering,
};
pub use power::{duplicate_ideal, EdgeIdeal, EdgeMultiset, PowerGenerators, DEFAULT_CAP};
