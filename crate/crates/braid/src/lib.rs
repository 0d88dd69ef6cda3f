//! Free-group words on two generators and the three-strand braid action.
//!
//! Conventions:
//!  - free-group letters are signed bytes: `+1`/`-1` for `alpha` and its
//!    inverse, `+2`/`-2` for `beta` and its inverse; words are kept reduced;
//!  - braid words are signed letter lists over the two braid generators,
//!    acting with the leftmost letter outermost, so `act` is a homomorphism
//!    from braid words to automorphisms;
//!  - the commutator `theta = alpha beta alpha^{-1} beta^{-1}` is fixed by
//!    the action, and the fourth power of the inversion word acts by
//!    conjugation by `theta`;
//!  - `f_matrix` is the projection to unit-determinant 2x2 integer matrices
//!    and `r_cocycle` the homomorphism to rational multiples of `L` taking
//!    `-L/24` on both positive generators.

mod b3;
mod free;

pub use b3::{act, f_matrix, invert, r_cocycle, repeat, s_tilde, theta_fixed, BraidAuto};
pub use free::{theta, FreeWord, ALPHA, BETA};
