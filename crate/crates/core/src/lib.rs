//! Exact arithmetic for the modified third-order Jacobsthal numbers
//! `K_n = 2^n + w^n + w^(-n)` and the unrestricted quaternions
//! `QK_n^(a,b,c) = K_n + K_(n+a) I + K_(n+b) J + K_(n+c) K`, together with
//! their closed forms and a verifier that checks every closed form against
//! direct evaluation.

pub mod error;
pub mod scalars;
pub mod quaternion;
pub mod sequences;
pub mod unrestricted;
pub mod series;
pub mod matrix;
pub mod verify;
pub mod commands;

pub use error::{Error, Result};
pub use quaternion::{Quaternion, Scalar};
pub use scalars::{pow2, CycloScalar, Rational};
