//! Exact toric geometry over arbitrary bases: integer linear algebra, cones,
//! affine monoids, fans, monoid algebras and the schemes glued from them.

pub mod algebra;
pub mod catalog;
pub mod cone;
pub mod error;
pub mod fan;
pub mod linalg;
pub mod monoid;
pub mod scheme;

pub use algebra::{AlgebraElement, CoeffMorphism, CoeffRing};
pub use cone::{Face, Polycone};
pub use error::{Error, Result};
pub use fan::{Fan, FullificationResult, RegularityReport};
pub use linalg::{IntMatrix, IntVec, Lattice, RatVector};
pub use monoid::{AffineMonoid, DifferenceExtension, HilbertBasis};
pub use scheme::{BaseDescriptor, GluingAtlas, MonoidSystem, PropertyReport, Tri};
