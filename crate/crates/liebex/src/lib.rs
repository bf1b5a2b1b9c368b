//! Exact-arithmetic toolkit for finite-dimensional Lie bialgebras and their
//! extending structures.
//!
//! Everything is computed over the field `Q(i)` of Gaussian rationals, with
//! arbitrary-precision arithmetic, so every verdict produced by this crate is
//! exact: a law either holds identically or a nonzero residual is reported.
//!
//! The crate is organized in layers:
//!
//! * [`exactnum`] — scalars, dense matrices, deterministic reduced row echelon
//!   form, and affine/homogeneous linear solving with canonical solution bases.
//! * [`liecore`] — basis-indexed Lie algebras, Lie coalgebras and Lie
//!   bialgebras with structure-constant storage and exhaustive law checkers.
//! * [`extension`] — extending structures of a Lie bialgebra by a complement:
//!   bracket-side and cobracket-side extending data, the unified product,
//!   co-product and bi-product constructions, recognition of complemented
//!   sub-bialgebras, and the equivalence theory of bi-products.
//! * [`special`] — the distinguished bi-products (crossed, bicrossed,
//!   double cross) with their reduced condition systems.
//! * [`flag`] — the codimension-one (flag) classification machinery: flag
//!   data, their solution spaces, equivalence witnesses, and the cell
//!   decomposition of equivalence classes.

pub mod exactnum;
pub mod extension;
pub mod flag;
pub mod liecore;
pub mod special;

pub use exactnum::{Matrix, NumError, Rational, Scalar, SolutionSpace};
pub use extension::{
    AlgExtendingDatum, BiExtendingDatum, CoalgExtendingDatum, ExtendError, HomReport, PQPair,
};
pub use flag::{
    FlagCell, FlagClassification, FlagDatum, SampleClassification, SampleOutcome,
    StructureCertificate,
};
pub use liecore::{
    BasisSpace, BilinearMap, CobracketMap, LieAlgebra, LieBialgebra, LieCoalgebra, LinearMap,
    ShapeError, SkewEntry, Tensor2, Tensor3, TensorMap, Vector, VerdictReport, Violation,
};
pub use special::{BicrossedSumDatum, CrossedBiDatum, DoubleCrossSumDatum};
