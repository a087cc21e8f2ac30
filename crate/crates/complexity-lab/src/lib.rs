//! One coherent hierarchy of compression-flavoured complexity measures —
//! LZ-family coders, assembly (join-program) indices, Shannon/block
//! entropy, and CTM/BDM estimates from exhaustive small-machine
//! enumeration — plus the statistics and experiment harness used to
//! compare them on sequence ensembles and molecular data.
//!
//! The crate is organized around the measures:
//! - [`seq`], [`generate`], [`rng`]: inputs and deterministic randomness;
//! - [`lz`]: LZW and LZ-prefix parsing with dictionary/codeword metrics;
//! - [`assembly`]: exact and heuristic assembly indices with replayable
//!   construction certificates;
//! - [`entropy`]: block entropy and the empirical entropy rate;
//! - [`ctm`], [`bdm`]: output-frequency tables for small machine spaces
//!   and block-decomposition scores on top of them;
//! - [`stats`]: the shared statistical toolbox;
//! - [`molecular`]: the InChI/MS2 pipeline;
//! - [`experiment`]: the reproducible experiment runners behind the CLI.
//!
//! Built with the `parallel` feature (default), trial loops and machine
//! enumeration fan out over rayon; every reduction is ordered by index,
//! so results are identical to the sequential build.

pub mod assembly;
pub mod bdm;
pub mod ctm;
pub mod entropy;
pub mod error;
pub mod experiment;
pub mod generate;
pub mod lz;
pub mod molecular;
pub mod par;
pub mod rng;
pub mod seq;
pub mod stats;

pub use error::{Error, Result};
pub use seq::{Sequence, Symbol};
