//! Constructor classes — functor, applicative, monad, alternative,
//! monad-zero-plus — emulated without higher-kinded polymorphism.
//!
//! Type constructors are zero-data tags ([`kind::TyCon`]); class instances
//! are first-class operation bundles tied to a tag. A user hand-writes a
//! minimal bundle (for a monad: `ret` and `bind`) and elaboration derives the
//! rest of the class surface plus the whole superclass chain:
//!
//! ```
//! use kindling::elaborate::mk_monad;
//! use kindling::instances::list_monad_min;
//! use kindling::signatures::{ApplicativeOps, FunctorOps, MonadOps};
//!
//! let m = mk_monad(list_monad_min());
//! assert_eq!(m.bind(vec![1, 2], |x| vec![x, 10 * x]), vec![1, 10, 2, 20]);
//! // Superclasses come for free, derived from ret/bind:
//! assert_eq!(m.fmap(|x: i64| x + 1, vec![1, 2]), vec![2, 3]);
//! assert_eq!(m.pure(7), vec![7]);
//! ```
//!
//! Because bundles are values, several instances for one constructor
//! coexist (the cartesian and pairwise list applicatives), bundles can carry
//! data (the writer monad takes an explicit monoid value), transformers are
//! ordinary functions from bundle to bundle, and members can be overridden
//! one at a time. The [`laws`] module checks the algebraic laws of every
//! shipped instance with a seeded, reproducible property harness.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alt;
pub mod combine;
pub mod elaborate;
pub mod instances;
pub mod kind;
pub mod laws;
pub mod parser;
pub mod signatures;
pub mod transform;

/// The traits needed to call bundle operations, in one import.
pub mod prelude {
    pub use crate::alt::{AlterMin, AlterOps, Monad0pMin, Monad0pOps};
    pub use crate::kind::{App, Bundle, Elem, ElemFn, ElemFn2, ElemFn3, TyCon};
    pub use crate::signatures::{
        ApplicativeMin, ApplicativeOps, FoldableMin, FunctorMin, FunctorOps, JoinMin, MonadMin,
        MonadOps, MonoidMin,
    };
    pub use crate::transform::TransformedMonadMin;
}
