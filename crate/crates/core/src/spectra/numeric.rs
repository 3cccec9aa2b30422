//! Floating-point spectra via a symmetric eigensolver.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};

/// Sorted eigenvalues of a symmetric matrix.
pub fn numeric_matrix_spectrum(a: &DMatrix<f64>) -> Result<Vec<f64>> {
    if !a.is_square() {
        return Err(Error::InvalidParameter("matrix is not square".into()));
    }
    let scale = a.amax().max(1.0);
    if (a - a.transpose()).amax() > 1e-12 * scale {
        return Err(Error::InvalidParameter("matrix is not symmetric".into()));
    }
    let mut values: Vec<f64> = SymmetricEigen::new(a.clone()).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Sorted adjacency eigenvalues of a graph. Oriented graphs are replaced by
/// their underlying graph first.
pub fn numeric_spectrum(g: &Graph) -> Result<Vec<f64>> {
    let a = match g.kind() {
        GraphKind::Oriented => g.underlying()?.adjacency_matrix(),
        GraphKind::Serre => g.adjacency_matrix(),
    };
    numeric_matrix_spectrum(&a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_m, spider_web_m};

    #[test]
    fn cycle_spectrum() {
        let s = numeric_spectrum(&cycle_m(4).unwrap()).unwrap();
        let want = [-2.0, 0.0, 0.0, 2.0];
        assert!(s.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-10));
    }

    #[test]
    fn spider_web_2_2_2() {
        let s = numeric_spectrum(&spider_web_m(2, 2, 2).unwrap()).unwrap();
        let want = [-4.0, -2.0, -2.0, 0.0, 0.0, 2.0, 2.0, 4.0];
        assert!(s.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9), "{s:?}");
    }

    #[test]
    fn asymmetric_matrix_is_rejected() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(numeric_matrix_spectrum(&a).is_err());
    }
}
