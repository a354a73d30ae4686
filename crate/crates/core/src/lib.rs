//! Numerical semigroups generated by the partial sums
//! `s_n = n·a + n(n-1)/2·d` of an arithmetic progression.
//!
//! The closed forms for `Γ₅ = ⟨s₁, …, s₅⟩` (Apéry set, pseudo-Frobenius
//! numbers, defining ideal, Apéry table and tangent cone) live next to
//! brute-force oracles in [`oracle`] that they are tested against.

pub mod cone;
pub mod error;
pub mod family;
pub mod frobenius;
pub mod ideal;
pub mod oracle;
pub mod sweep;

pub use cone::{
    apery_table, cone_decomposition, hilbert_numerator, landings, reduction_number,
    ring_properties, AperyTable, ConeDecomposition, HilbertNumerator, LadderAnalysis,
    ReductionNumber, RingProperties,
};
pub use error::{Error, Result};
pub use family::{
    apery_gamma5, apery_gamma6_conjectured, partial_sum_generators, phi_values, uniqueness_check,
    AperyRecord, ArithmeticSeed, PhiValues, GAMMA5_MIN_A,
};
pub use frobenius::{frobenius_gamma5, pf_gamma5, PfResult, PfSource};
pub use ideal::{
    gastinger_verify, generator_catalog, BinomialGenerator, Dimension, ExponentVector,
    GastingerReport,
};
pub use oracle::{
    apery_oracle, frobenius_oracle, order_oracle, pseudo_frobenius_oracle, GeneratorList,
};
pub use sweep::{sweep_gamma6, sweep_uniqueness, SeedRecord, SweepOptions, SweepReport, Verdict};
