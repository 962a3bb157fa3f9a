//! Decision problems on matroids and the reductions between them and graph
//! or matching problems.

pub mod bipartite;
pub mod graph_iso;
pub mod graphs;
pub mod intersect;
pub mod iso;
pub mod minor;
pub mod tdm;

pub use bipartite::{decode_bipartite, encode_bipartite, EncodedBipartiteGraph, VertexRole};
pub use graph_iso::graph_isomorphism;
pub use graphs::{
    find_independent_set, find_subgraph, reduce_independent_set, reduce_subgraph_iso,
    UniformMinorInstance,
};
pub use intersect::{intersect3_bases, intersect3_bruteforce};
pub use iso::{is_isomorphism, isomorphic, isomorphic_circuits};
pub use minor::{detect_minor_exhaustive, detect_minor_fixed, verify_witness, MinorWitness};
pub use tdm::{reduce_3dm, ThreeDmReduction, TripleSystem};
