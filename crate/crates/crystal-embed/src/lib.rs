//! Crystal bases of types `B_n` and `C_n`: Kashiwara–Nakashima tableaux,
//! spinor tableaux, a Verma-type model, Lusztig data, and the embeddings
//! connecting them.

pub mod crystal;
pub mod embedding;
pub mod json;
pub mod kn;
pub mod lusztig;
pub mod spinor;
pub mod tableaux;
pub mod verify;
pub mod verma;
pub mod weyl;
