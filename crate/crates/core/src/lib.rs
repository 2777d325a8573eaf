pub mod algebra;
pub mod numeric;
pub mod power;
pub mod stats;
pub mod verify;
pub mod weyl;
