//! Energy-minimal federation planning for a cell-free massive MIMO downlink.
//!
//! The library plans which radio units (CSPs) to activate, how to group CSPs
//! and UEs into interference-free federations, and how much transmit power
//! each unit spends, so that every UE's downlink rate requirement is met at
//! minimum total energy per coherence block.
//!
//! The pipeline is:
//! 1. [`scenario`] builds a reproducible indoor-factory deployment,
//! 2. [`channel`] realizes large-scale gains and channel-estimate variances,
//! 3. [`orchestrator`] alternates a second-order cone power subproblem
//!    ([`conesolve`]) with a mixed-integer assignment subproblem
//!    ([`mipsolve`]), plus a random-activation refinement,
//! 4. [`model`] independently verifies every constraint of the result and
//!    [`energy`] prices it.
//!
//! The `cellfed` binary drives experiment sweeps over rates, CSP counts,
//! antenna counts, and federation counts, writing deterministic CSV output.

pub mod channel;
pub mod conesolve;
pub mod mipsolve;
pub mod orchestrator;
pub mod energy;
pub mod error;
pub mod experiment;
pub mod model;
pub mod rng;
pub mod scenario;

pub use error::{Error, Result};

/// Compiles and runs every code block of the guide in `book/` as doc-tests,
/// keeping the published snippets in sync with the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(model, "../../../book/src/model.md");
    chapter!(channel, "../../../book/src/channel.md");
    chapter!(energy, "../../../book/src/energy.md");
    chapter!(solvers, "../../../book/src/solvers.md");
    chapter!(algorithm, "../../../book/src/algorithm.md");
    chapter!(experiments, "../../../book/src/experiments.md");
}
