pub mod cli;
pub mod cone;
pub mod push;
pub mod rational;
pub mod ring;
pub mod theorems;
