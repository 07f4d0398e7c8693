//! Exact commutative algebra over `Q` and `F_p`: sparse multivariate
//! polynomials with a fixed lexicographic order, Buchberger's algorithm with
//! lift and syzygy tracking, elimination and quotient ideals, and the
//! radicality certification pipeline for the determinantal ideals `J(s, n)`.

pub mod certificate;
pub mod certify;
pub mod chain;
pub mod coeff;
pub mod determinantal;
pub mod graded;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod primes;
pub mod unlucky;
pub mod vars;

pub use certificate::{CertificateJson, RadicalityCertificate, Verdict};
pub use certify::{certify, certify_presentation, CertifyOptions, Tier};
pub use chain::{ChainStep, ChainStepKind, NzdObligation, NzdStatus, ObligationTarget};
pub use coeff::{Coeff, CoefficientDomain};
pub use determinantal::DeterminantalIdealSpec;
pub use graded::GradedComponent;
pub use groebner::{
    is_groebner_basis, lift, normal_form, s_polynomial, syzygy_matrix, EngineConfig, EngineError,
    GroebnerBasis, LiftDirection, LiftMatrix, SyzygyMatrix,
};
pub use ideal::{elimination_subset, ideal_equal, ideal_quotient, IdealPresentation};
pub use monomial::Monomial;
pub use parse::{format_poly, parse_poly, ParseError};
pub use poly::{Canon, PolyError, Polynomial};
pub use vars::VariableTable;
