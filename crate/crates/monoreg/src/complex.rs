use std::collections::BTreeSet;

use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// A finite abstract simplicial complex on an ordered vertex list.
///
/// Faces are stored as bitmasks over *positions* in the vertex list (not raw
/// vertex labels), in a sorted set, so iteration order is deterministic. The
/// face set is closed under subsets; the empty face (mask 0) belongs to every
/// non-void complex. The void complex — no faces at all, not even the empty
/// one — is representable and distinct from the complex `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    faces: BTreeSet<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from an explicit face set. Panics if the set is not
    /// subset-closed (callers construct faces positionally).
    pub fn new(vertices: Vec<usize>, faces: BTreeSet<u64>) -> Self {
        assert!(vertices.len() <= 64, "complexes are limited to 64 vertices");
        let c = SimplicialComplex { vertices, faces };
        assert!(c.is_subset_closed(), "face set must be closed under subsets");
        c
    }

    /// The void complex (no faces).
    pub fn void(vertices: Vec<usize>) -> Self {
        SimplicialComplex { vertices, faces: BTreeSet::new() }
    }

    /// Builds the subset closure of the given maximal faces (positions into
    /// `vertices`). With an empty list this is the complex `{∅}`.
    pub fn from_maximal_faces(vertices: Vec<usize>, maximal: &[&[usize]]) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(0u64);
        for face in maximal {
            let mask = face.iter().fold(0u64, |m, &p| {
                assert!(p < vertices.len());
                m | (1 << p)
            });
            // Insert every subset of `mask`.
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        SimplicialComplex { vertices, faces }
    }

    /// The vertex labels (ring variable indices for Koszul complexes).
    pub fn vertex_labels(&self) -> &[usize] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains_face(&self, mask: u64) -> bool {
        self.faces.contains(&mask)
    }

    /// Dimension of the complex: largest face cardinality minus one;
    /// `None` for the void complex (and `Some(-1)` never occurs — the empty
    /// face gives cardinality 0, i.e. dimension -1, reported as `Some(-1)`).
    pub fn dim(&self) -> Option<i32> {
        self.faces
            .iter()
            .map(|m| m.count_ones() as i32 - 1)
            .max()
    }

    /// Faces grouped by cardinality: entry `k` lists the masks with `k` set
    /// bits, each list in increasing mask order.
    pub fn faces_by_cardinality(&self) -> Vec<Vec<u64>> {
        let max_card = self
            .faces
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .map_or(0, |c| c + 1);
        let mut by_card = vec![Vec::new(); max_card];
        for &m in &self.faces {
            by_card[m.count_ones() as usize].push(m);
        }
        by_card
    }

    /// The f-vector indexed by cardinality (entry `k` counts faces with `k`
    /// vertices); empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_cardinality()
            .iter()
            .map(Vec::len)
            .collect()
    }

    /// Checks subset closure (used by constructors and property tests).
    pub fn is_subset_closed(&self) -> bool {
        self.faces.iter().all(|&m| {
            (0..64).filter(|b| m >> b & 1 == 1).all(|b| {
                self.faces.contains(&(m & !(1 << b)))
            })
        })
    }
}

/// The upper Koszul simplicial complex of a monomial ideal `I` at a
/// multidegree `a`.
///
/// Vertices are the variables with positive exponent in `a`. A subset `b` of
/// vertices is a face exactly when `x^(a - e_b)` lies in `I`, where `e_b` is
/// the 0/1 vector of `b`. Divisibility makes this automatically
/// subset-closed. The complex is void exactly when `x^a` itself is not in
/// `I`, and equals `{∅}` when `x^a ∈ I` but no single-variable step-down
/// stays inside.
pub fn upper_koszul(ideal: &MonomialIdeal, multidegree: &[u32]) -> SimplicialComplex {
    assert_eq!(multidegree.len(), ideal.context().num_vars());
    let vertices: Vec<usize> = multidegree
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect();
    let k = vertices.len();
    let mut faces = BTreeSet::new();
    // Ascending masks visit each face after all its subsets, so a face can be
    // skipped as soon as one sub-face is missing (subset closure is
    // necessary); this prunes most of the 2^k space for sparse complexes.
    for mask in 0u64..(1 << k) {
        if mask != 0 {
            let parent = mask & (mask - 1); // mask without its lowest bit
            if !faces.contains(&parent) {
                continue;
            }
        }
        let mut exps = multidegree.to_vec();
        for (pos, &v) in vertices.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                exps[v] -= 1;
            }
        }
        if ideal.contains_monomial(&Monomial::new(exps)) {
            faces.insert(mask);
        }
    }
    SimplicialComplex { vertices, faces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            RingContext::new(n),
            gens.iter().map(|e| Monomial::new(e.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn void_versus_empty_face_only() {
        let void = SimplicialComplex::void(vec![0, 1]);
        assert!(void.is_void());
        assert_eq!(void.dim(), None);
        assert_eq!(void.f_vector(), Vec::<usize>::new());

        let point_free = SimplicialComplex::from_maximal_faces(vec![0, 1], &[]);
        assert!(!point_free.is_void());
        assert_eq!(point_free.dim(), Some(-1));
        assert_eq!(point_free.f_vector(), vec![1]);
    }

    #[test]
    fn closure_generation() {
        // Hollow triangle: three edges, no 2-face.
        let t = SimplicialComplex::from_maximal_faces(vec![0, 1, 2], &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(t.f_vector(), vec![1, 3, 3]);
        assert!(t.is_subset_closed());
        assert!(!t.contains_face(0b111));

        let full = SimplicialComplex::from_maximal_faces(vec![0, 1, 2], &[&[0, 1, 2]]);
        assert_eq!(full.f_vector(), vec![1, 3, 3, 1]);
    }

    #[test]
    #[should_panic(expected = "closed under subsets")]
    fn non_closed_face_set_rejected() {
        let mut faces = BTreeSet::new();
        faces.insert(0b11u64);
        SimplicialComplex::new(vec![0, 1], faces);
    }

    #[test]
    fn koszul_at_generator_degree_is_empty_face_only() {
        // I = (x, y) at a = (1, 0): x^a = x ∈ I, stepping down leaves 1 ∉ I.
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let c = upper_koszul(&i, &[1, 0]);
        assert_eq!(c.vertex_labels(), &[0]);
        assert_eq!(c.f_vector(), vec![1]);
    }

    #[test]
    fn koszul_at_lcm_of_x_and_y() {
        // I = (x, y) at a = (1, 1): faces ∅, {x}, {y} but not {x,y}
        // (x^(0,0) = 1 ∉ I). Two disconnected points.
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let c = upper_koszul(&i, &[1, 1]);
        assert_eq!(c.f_vector(), vec![1, 2]);
        assert!(!c.contains_face(0b11));
    }

    #[test]
    fn koszul_void_when_degree_outside_ideal() {
        let i = ideal(2, &[&[2, 0]]);
        let c = upper_koszul(&i, &[1, 0]);
        assert!(c.is_void());
    }

    #[test]
    fn koszul_mixed_exponents() {
        // I = (x^2, y) at a = (2, 1), vertices {x, y}. Faces: ∅ since
        // x^2*y ∈ I; {x} since x*y ∈ I (divisible by y); {y} since x^2 ∈ I.
        // Not {x,y}: stepping both down leaves x ∉ I.
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        let c = upper_koszul(&i, &[2, 1]);
        assert_eq!(c.f_vector(), vec![1, 2]);
        assert!(!c.contains_face(0b11));
    }

    #[test]
    fn koszul_is_always_subset_closed() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        for a in [[1, 1, 1], [2, 1, 1], [1, 1, 2], [2, 2, 2], [1, 2, 1]] {
            assert!(upper_koszul(&i, &a).is_subset_closed());
        }
    }
}
