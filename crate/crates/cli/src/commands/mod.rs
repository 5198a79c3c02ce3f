pub mod aseq;
pub mod asym;
pub mod function;
pub mod presets;
pub mod table;
pub mod verify;
