//! Characteristic polynomials, closed-form and numeric spectra, and
//! spectral measures.

mod charpoly;
mod measure;
mod numeric;
mod oracle;
mod poly;

pub use charpoly::{
    cycle_charpoly, path_charpoly, spiderweb_charpoly, FactoredCharPoly, EXPAND_CAP,
};
pub use measure::{
    closed_form_spectrum, measure_distance, measure_distance_exact, AtomKey, ClosedFormSpectrum,
    SpectralMeasure,
};
pub use numeric::{numeric_matrix_spectrum, numeric_spectrum};
pub use oracle::{bareiss_det, charpoly_oracle};
pub use poly::IntPolynomial;

#[cfg(test)]
pub(crate) use measure::to_f64;
