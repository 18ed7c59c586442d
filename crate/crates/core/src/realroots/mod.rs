//! Exact real roots: Sturm chains, isolation, real algebraic numbers, and
//! counting over `ℚ(σ)` for an algebraic `σ`.

pub mod algebraic;
pub mod count;
pub mod extension;
pub mod isolate;
pub mod sturm;

pub use algebraic::{compare, compare_mut, sign_at, sign_at_mut, AlgebraicNumber};
pub use count::{bound_less, count_half_open, count_roots, Bound, RootCounter};
pub use extension::{count_roots_extension, ExtContext, ExtRoot, SigmaPoly};
pub use isolate::{isolate_roots, isolate_squarefree, RootList};
pub use sturm::{one_sided_sign, RatBound, SturmChain};
