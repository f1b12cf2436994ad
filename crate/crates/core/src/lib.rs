//! Effective rig categories at desk scale: coherence-law checkers for
//! permutative and (graded) bipermutative structure, an indexing category of
//! injections acting on signed subsets, cube-shaped diagrams with diagonals
//! and extension by zero, a homotopy colimit with multiplicative structure, a
//! zero-correcting simplicial layer, and K0-level verification (connected
//! components, group-completion witnesses, a Grothendieck-ring oracle, and
//! the pair-model comparison).

pub mod term;
pub mod effcat;
pub mod permcat;
pub mod indexing;
pub mod biperm;
pub mod examples;
pub mod cube;
pub mod thomason;
pub mod zeros;
pub mod pi0;
pub mod gq;
