pub mod arith;
pub mod codes;
pub mod cocyclic;
pub mod error;
pub mod eta;
pub mod exec;
pub mod group;
pub mod hom;
pub mod isotype;
pub mod orbit;
pub mod snf;
pub mod subgroup;
pub mod witness;

pub use cocyclic::{enumerate_cocyclic, eta_bruteforce, CocyclicInventory, EnumOptions};
pub use error::{Error, Result};
pub use eta::{eta, EtaResult, Step};
pub use exec::Exec;
pub use group::{AbelianGroup, GroupElement};
pub use hom::GroupHom;
pub use isotype::IsoType;
pub use subgroup::{CyclicFactor, Subgroup};
pub use witness::{extend_to_automorphism, WitnessReport};
