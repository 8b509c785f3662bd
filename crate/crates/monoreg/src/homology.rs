//! Reduced simplicial homology dimensions over a coefficient field.
//!
//! For a non-void complex the reduced chain complex includes the empty face
//! in homological degree -1, so the augmentation map is the boundary from
//! vertices to the empty face. Dimensions follow from exact boundary ranks:
//!
//! dim H̃_(k-1) = #(k-vertex faces) - rank ∂_k - rank ∂_(k+1)
//!
//! where ∂_k maps k-vertex faces to (k-1)-vertex faces.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::field::FieldSpec;
use crate::rank::IntMatrix;

/// Reduced homology dimensions, indexed so that `dims()[k]` is the dimension
/// of H̃ in homological degree `k - 1`. Index 0 therefore reports the degree
/// -1 homology (nonzero exactly for the complex `{∅}`), and index `i` lines
/// up with the Betti number β_i of the associated multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<usize>,
}

impl HomologyDims {
    /// Dimension of H̃ in homological degree `degree` (−1-based, as usual for
    /// reduced homology). Degrees outside the computed range are zero.
    pub fn reduced_dim(&self, degree: i32) -> usize {
        let idx = degree + 1;
        if idx < 0 {
            return 0;
        }
        self.dims.get(idx as usize).copied().unwrap_or(0)
    }

    /// The raw vector: entry `k` is dim H̃_(k−1).
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_all_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Computes all reduced homology dimensions of `complex` over `field`.
/// The void complex has no homology in any degree.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: &FieldSpec) -> HomologyDims {
    if complex.is_void() {
        return HomologyDims { dims: Vec::new() };
    }
    let by_card = complex.faces_by_cardinality();
    let max_card = by_card.len() - 1; // largest face cardinality present

    // ranks[k] = rank of ∂_k for 1 <= k <= max_card; ∂_0 and anything beyond
    // max_card are zero maps.
    let mut ranks = vec![0usize; max_card + 2];
    for k in 1..=max_card {
        ranks[k] = boundary_matrix(&by_card[k], &by_card[k - 1]).rank(field);
    }

    let dims = (0..=max_card)
        .map(|k| by_card[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    HomologyDims { dims }
}

/// The boundary matrix from faces with `k` vertices (columns) to faces with
/// `k-1` vertices (rows): deleting the j-th smallest vertex contributes sign
/// (-1)^j.
fn boundary_matrix(sources: &[u64], targets: &[u64]) -> IntMatrix {
    let row_index: HashMap<u64, usize> = targets
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let mut matrix = IntMatrix::zero(targets.len(), sources.len());
    for (col, &face) in sources.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = face;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg(); // lowest set bit
            let sub = face & !bit;
            let row = row_index[&sub]; // subset closure guarantees presence
            matrix.set(row, col, sign);
            sign = -sign;
            rest &= rest - 1;
        }
    }
    matrix
}
