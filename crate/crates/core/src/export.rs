//! JSON export of the spectrum and of every exact matrix behind it.

use std::path::Path;

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{ExactMatrix, Label};
use crate::model::{
    density_matrices, fourier_block, full_spectrum, projector, qubit_hamiltonian, s_block,
    SpectrumRecord,
};
use crate::numbers::{FieldElement, IntoFieldElement, Momentum};

/// One labelled matrix; `entries` is row-major.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixExport {
    pub name: String,
    pub k: Momentum,
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<Label>,
    pub col_labels: Vec<Label>,
    pub entries: Vec<Vec<FieldElement>>,
}

impl MatrixExport {
    pub fn new<F>(name: impl Into<String>, k: Momentum, m: &ExactMatrix<F>) -> Self
    where
        F: crate::numbers::Field + IntoFieldElement,
    {
        MatrixExport {
            name: name.into(),
            k,
            rows: m.rows(),
            cols: m.cols(),
            row_labels: m.row_labels().to_vec(),
            col_labels: m.col_labels().to_vec(),
            entries: m.to_rows().iter().map(|r| r.iter().map(|x| x.to_element()).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Export {
    pub spectrum: Vec<SpectrumRecord>,
    pub matrices: Vec<MatrixExport>,
}

/// Blocks `H_r^k` (r ≤ 3), lowering blocks, qubit Hamiltonians, projectors and
/// density matrices, ordered by kind then `k`.
pub fn all_matrices() -> Result<Vec<MatrixExport>> {
    let mut out = Vec::new();
    for r in 0..=3 {
        for k in Momentum::all() {
            out.push(MatrixExport::new(format!("H_{r}"), k, &fourier_block(r, k)?));
        }
    }
    for (r, dr) in [(1, 1), (2, 1), (1, 2)] {
        for k in Momentum::all() {
            out.push(MatrixExport::new(format!("S_{r},{dr}"), k, &s_block(r, dr, k)?));
        }
    }
    for rp in [2, 3] {
        for k in Momentum::nonzero() {
            out.push(MatrixExport::new(format!("H_{rp},{rp}"), k, &qubit_hamiltonian(rp, k)?));
        }
    }
    for (r, rp) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        for k in Momentum::all() {
            out.push(MatrixExport::new(format!("P_{r},{rp}"), k, &projector(r, rp, k)?));
        }
    }
    for (r, rp) in [(2, 2), (3, 2), (3, 3)] {
        for k in Momentum::all() {
            let [plus, minus] = density_matrices(r, rp, k)?;
            out.push(MatrixExport::new(format!("rho_{r},{rp},+1"), k, &plus));
            out.push(MatrixExport::new(format!("rho_{r},{rp},-1"), k, &minus));
        }
    }
    Ok(out)
}

pub fn build_export() -> Result<Export> {
    Ok(Export { spectrum: full_spectrum()?, matrices: all_matrices()? })
}

pub fn write_export(path: &Path) -> Result<()> {
    let file = std::io::BufWriter::new(std::fs::File::create(path)?);
    serde_json::to_writer_pretty(file, &build_export()?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_entries_round_trip() {
        let k = Momentum::new(2);
        let m = fourier_block(3, k).unwrap();
        let e = MatrixExport::new("H_3", k, &m);
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["row_labels"][0], serde_json::json!({"t": [1, 1, 5]}));
        let back: Vec<Vec<FieldElement>> = serde_json::from_value(v["entries"].clone()).unwrap();
        for (i, row) in back.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, FieldElement::Cyc(m.get(i, j).clone()));
            }
        }
    }

    #[test]
    fn export_is_complete() {
        let ex = build_export().unwrap();
        assert_eq!(ex.spectrum.len(), 35);
        assert_eq!(ex.matrices.len(), 4 * 7 + 3 * 7 + 2 * 6 + 5 * 7 + 6 * 7);
    }
}
