//! Exact computational algebra for crossed modules of finite groups
//! and of finite-dimensional Lie algebras.
//!
//! The toolkit computes, with no floating point anywhere:
//!
//! - finite groups as validated Cayley tables, their automorphism
//!   groups, quotients and isomorphism tests ([`group`]);
//! - crossed modules ∂: G₁ → G₀ with a G₀-action, their homotopy
//!   groups π₀ and π₁, and morphism checking ([`xmod`]);
//! - the centre construction: the group Z₀ of pairs (x, ξ) of an
//!   element and a compatible derivation-like map, the crossed module
//!   structure on it, the braiding it carries, and the exactness
//!   properties that relate it back to the input ([`centre`]);
//! - low-dimensional group cohomology (H⁰, H¹, H² with explicit
//!   cocycle representatives over ℤ-lattices) and derivation-style
//!   invariant comparisons ([`cohom`], [`zlattice`]);
//! - the Norrie-style centre subobject and its comparison map
//!   ([`norrie`]);
//! - an independent categorical oracle: the one-object-set monoidal
//!   category attached to a crossed module, its categorical centre by
//!   direct enumeration of half-braidings, and the object-by-object
//!   comparison with the algebraic centre ([`catoracle`]);
//! - the Lie-algebra analogue over ℚ or 𝔽ₚ (p odd): Lie crossed
//!   modules, their centres as solution spaces of linear systems,
//!   Chevalley–Eilenberg cohomology in degrees ≤ 2, and the
//!   four-term exactness check ([`lie`]);
//! - a JSON input layer shared with the `xmodc` command-line tool
//!   ([`json`]).
//!
//! All enumerations are deterministic: element orders, generator
//! choices and basis orders are fixed by index, never by hashing or
//! randomness (seeds only enter where a check deliberately re-runs a
//! construction with a different section choice).

pub mod catoracle;
pub mod centre;
pub mod cohom;
pub mod group;
pub mod json;
pub mod lie;
pub mod norrie;
pub mod xmod;
pub mod zlattice;
