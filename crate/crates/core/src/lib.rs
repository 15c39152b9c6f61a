//! Integer compositions as tilings of a `1 x n` board.
//!
//! The crate covers the cut/join encoding and conjugation of compositions,
//! the three restriction classes counted by Fibonacci numbers (parts in
//! `{1, 2}`, odd parts, parts at least two), explicit bijections realising
//! their recurrences, and exact checks of several Fibonacci sum identities.
//!
//! ```
//! use fibcomp::{count, encode, ClassSpec, Composition};
//!
//! let c: Composition = "3,1,1".parse().unwrap();
//! assert_eq!(encode(&c).unwrap().to_string(), "JJCC");
//! assert_eq!(count(ClassSpec::Parts12, 5), 8u32.into());
//! ```

pub mod bijections;
pub mod codec;
pub mod composition;
pub mod enumerate;
pub mod error;
pub mod fib;
pub mod identities;
pub mod render;

pub use bijections::{
    verify_bijection, BijectionMap, Failure, Origin, TaggedSource, VerifyConfig, VerifyReport,
};
pub use codec::{conjugate, decode, encode, reverse, CutJoinSeq, Letter};
pub use composition::{comp, ClassSet, ClassSpec, Composition};
pub use enumerate::{
    binomial, count, count_by_parts, enumerate, enumerate_range, rank, unrank, Compositions,
    CountTable, PascalTriangle,
};
pub use error::{Error, ParseError, Result};
pub use fib::{fib, FibTable};
pub use identities::{
    check_eq1, check_eq2, check_eq3, check_eq4, check_identity, check_pow2, IdentityConfig,
    IdentityId, IdentityReport, IdentityRow,
};
pub use render::{render, Annotation, Format, RenderSpec, Shading};
