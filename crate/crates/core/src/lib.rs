//! Exact optimality decisions for the cyclic codes with generator polynomial
//! `(x+1) · m_α(x) · m_{α^e}(x)` over a prime field, together with the
//! closed-form exponent families that produce optimal parameters, complete
//! polynomial factorization over Z_p, and reproduction of the reference
//! tables of optimal exponents.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate. Everything is deterministic: field contexts are pinned by a
//! lexicographic construction rule, and the one randomized algorithm
//! (equal-degree splitting) runs on a counter stream seeded from its input.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cosets;
pub mod families;
pub mod field;
pub mod poly;
pub mod reference;
pub mod verifier;

pub mod catalog;
