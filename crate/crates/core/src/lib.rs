//! Extended quadratic residue codes over finite fields and the combinatorial
//! designs supported by their shells.
//!
//! The crate is organised bottom-up:
//!
//! * [`numtheory`]: primality, quadratic characters, cyclotomic cosets.
//! * [`gf`]: table-driven arithmetic in `F_{r^k}` and subfield embeddings.
//! * [`poly`]: polynomials, minimal polynomials, QR generator polynomials.
//! * [`codes`]: linear codes in canonical RREF form, duals, enumeration.
//! * [`designs`]: t-design verification, Jacobi polynomials, Assmus-Mattson.
//! * [`qres`]: QR code pairs, intersection cases, duadic duality and the
//!   3-design verification pipeline.

pub mod codes;
pub mod designs;
pub mod error;
pub mod exec;
pub mod gf;
pub mod numtheory;
pub mod poly;
pub mod qres;

pub use error::{Error, ErrorKind, Result};
pub use exec::Exec;
