//! Minimal abelian codes in the semisimple group algebra `GF(q) G`.
//!
//! Characters of `G` are labelled by elements of `G` through the reference
//! basis: `chi_t(g) = zeta^<t, g>` with `zeta` a fixed primitive `exp(G)`-th
//! root of unity in the splitting field. Minimal ideals correspond to orbits
//! of `t -> q t`.

pub mod algebra;
pub mod classes;
pub mod equivalence;
pub mod field;

pub use algebra::{AlgebraElement, GroupAlgebra};
pub use classes::{
    cyclotomic_classes, minimal_code, primitive_idempotent, weight_distribution, weight_distribution_with,
    CyclotomicClass, MinimalCode,
};
pub use equivalence::{code_equivalence_classes, g_equivalence_check, CodeEquivalence};
pub use field::FieldSpec;

use crate::error::Result;
use crate::exec::Exec;
use crate::group::AbelianGroup;

/// Every minimal code of `GF(q) G`, one per cyclotomic class, in class order.
pub fn all_minimal_codes(g: &AbelianGroup, spec: &FieldSpec, exec: Exec) -> Result<(GroupAlgebra, Vec<MinimalCode>)> {
    let alg = GroupAlgebra::new(g, spec.clone())?;
    let classes = cyclotomic_classes(g, spec)?;
    let powers = classes::root_powers(&alg)?;
    let codes = exec
        .map_slice(&classes, |c| classes::code_with(&alg, c, &powers))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok((alg, codes))
}
