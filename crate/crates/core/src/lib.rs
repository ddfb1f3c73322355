pub mod algebra;
pub mod cancel;
pub mod catalog;
pub mod jordan;
pub mod lie;
pub mod linalg;
pub mod random;
