//! Three notions of rationality for power series over a ring: global
//! certificates `g f = h`, eventual vanishing of Hankel determinants, and
//! rationality after every sampled homomorphism to a field.
//!
//! All verdicts are about a finite prefix `a_0..a_K`.

mod certificate;
mod hankel;
mod pointwise;
mod probe;
mod reconstruct;

pub use certificate::{check_global, RationalCertificate};
pub use hankel::{determinantal_test, hankel_window, HankelEntry, HankelReport, CSV_HEADER};
pub use pointwise::{pointwise_test, PointwiseEntry, PointwiseReport, PointwiseVerdict};
pub use probe::{chain_check, implication_chain_probe, random_certificate, ChainInstance, ChainReport, PROBE_POINTS};
pub use reconstruct::{berlekamp_massey, reconstruct_certificate};
