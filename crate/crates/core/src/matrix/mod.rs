//! Exact linear algebra backends: GF(2) (dense and sparse), GF(p) for small
//! primes, and integer SNF.

pub mod gf2;
pub mod modp;
pub mod snf;
pub mod zdense;
