//! Modular group algebras of finite p-groups.
//!
//! The crate builds `kG` for a finite p-group `G` (given by a power-commutator
//! presentation) over a finite field `k` of characteristic `p`, computes the
//! radical filtration `J^r(kG)`, the dimension subgroups `F_r(G)`, the graded
//! restricted Lie algebra on `F_r / F_{r+1}` with its PBW bookkeeping, and the
//! action of algebra automorphisms on the one-dimensional socle.
//!
//! For an automorphism `alpha` of `kG` the socle element `n = sum_g g` is sent
//! to `lambda * n`, and `lambda = det(A)^(p-1)` where `A` is the induced
//! action on the dimension subquotients. [`autmod::verify_theorem`] computes
//! both sides independently and compares them.
//!
//! ```
//! use jennings_socle::prelude::*;
//!
//! let g = std::sync::Arc::new(catalog("D8").unwrap());
//! let k = Field::prime(2).unwrap();
//! let alg = GroupAlgebra::new(g, k);
//! let jb = JenningsBasis::build(&alg).unwrap();
//! assert_eq!(jb.layer_dims(), &[2, 1]);
//! ```

pub mod autmod;
pub mod error;
pub mod ffield;
pub mod galgebra;
pub mod jennings;
pub mod linalg;
pub mod pgroup;
pub mod truncsym;
pub mod verify;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::autmod::{AlgebraAutomorphism, AutoSpec, CheckMode};
    pub use crate::error::{Error, Result};
    pub use crate::ffield::{Field, FieldElement};
    pub use crate::galgebra::{AlgebraElement, GroupAlgebra};
    pub use crate::jennings::JenningsBasis;
    pub use crate::linalg::Matrix;
    pub use crate::pgroup::{catalog, GroupElement, PcGroup, Subgroup};
    pub use crate::truncsym::TruncatedPolynomial;
}
