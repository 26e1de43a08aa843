//! Canonical subspaces of `GF(p)^n` and quotients by them.

use super::matrix::Mat;
use crate::error::Error;
use crate::Result;

/// A subspace of `GF(p)^ambient`, stored as an RREF basis (one vector per
/// row, no zero rows). Equal subspaces have identical representations, so
/// derived `==` decides equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    /// Canonicalizes the row span of `rows`.
    pub fn from_span(rows: &Mat) -> Self {
        let (r, pivots) = rows.rref();
        let basis = r.submatrix(0, pivots.len(), 0, rows.cols());
        Subspace {
            ambient: rows.cols(),
            basis,
        }
    }

    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(p, 0, ambient),
        }
    }

    pub fn whole(p: u32, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(p, ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn prime(&self) -> u32 {
        self.basis.prime()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Pivot columns of the RREF basis, in order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| (0..self.ambient).find(|&j| self.basis.raw(i, j) != 0).unwrap())
            .collect()
    }

    /// Reduces `v` modulo the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let p = self.prime() as u64;
        let mut w: Vec<u32> = v.iter().map(|&x| x % self.prime()).collect();
        for (i, &pc) in self.pivots().iter().enumerate() {
            let c = u64::from(w[pc]);
            if c == 0 {
                continue;
            }
            for j in 0..self.ambient {
                let t = u64::from(w[j]) + (p - 1) * c % p * u64::from(self.basis.raw(i, j));
                w[j] = (t % p) as u32;
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..other.dim()).all(|i| self.contains_vec(other.basis.row(i)))
    }

    /// Coordinates of `v` with respect to the RREF basis, when `v` is in the
    /// span. For an RREF basis these are just the entries at pivot columns.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&c| v[c] % self.prime()).collect())
    }

    /// The ambient vector with the given basis coordinates.
    pub fn from_coords(&self, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim());
        let p = u64::from(self.prime());
        let mut v = vec![0u32; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            if c % self.prime() == 0 {
                continue;
            }
            for j in 0..self.ambient {
                let t = u64::from(v[j]) + u64::from(c) * u64::from(self.basis.raw(i, j));
                v[j] = (t % p) as u32;
            }
        }
        v
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_span(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of `[U^T | -V^T]`: a vector is in both
    /// spans iff it is `U^T a = V^T b` for some coefficient vectors.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let ut = self.basis.transpose();
        let vt = other.basis.transpose().neg();
        let k = ut.hstack(&vt).kernel();
        // The first dim(self) coordinates of each kernel row are the `a` part.
        let mut rows = Mat::zeros(self.prime(), k.rows(), self.ambient);
        for i in 0..k.rows() {
            let a = &k.row(i)[..self.dim()];
            let v = self.basis.transpose().apply(a);
            for (j, &x) in v.iter().enumerate() {
                rows.set_raw(i, j, x);
            }
        }
        Ok(Subspace::from_span(&rows))
    }

    /// `{f : f · pairing · a^T = 0 for all a in self}` for a nondegenerate
    /// bilinear form on the ambient space.
    pub fn pairing_annihilator(&self, pairing: &Mat) -> Result<Subspace> {
        if pairing.rows() != self.ambient || pairing.cols() != self.ambient {
            return Err(Error::AmbientMismatch(pairing.rows(), self.ambient));
        }
        let rank = pairing.rank();
        if rank != self.ambient {
            return Err(Error::DegeneratePairing {
                rank,
                dim: self.ambient,
            });
        }
        // f·G·a^T = 0 for all basis rows a  <=>  (S·G^T)·f^T = 0.
        let sys = self.basis.mul(&pairing.transpose());
        Ok(Subspace::from_span(&sys.kernel()))
    }

    /// Annihilator under the standard dot pairing (always nondegenerate).
    pub fn orthogonal(&self) -> Subspace {
        Subspace::from_span(&self.basis.kernel())
    }
}

/// The quotient of `GF(p)^ambient` by a subspace of relations.
///
/// The quotient basis is the set of classes of standard basis vectors at
/// non-pivot columns of the relation RREF, in ascending column order; this
/// makes projections deterministic.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    relations: Subspace,
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let pivots = relations.pivots();
        let free_cols = (0..relations.ambient())
            .filter(|c| !pivots.contains(c))
            .collect();
        QuotientSpace {
            relations,
            free_cols,
        }
    }

    pub fn trivial(p: u32, ambient: usize) -> Self {
        QuotientSpace::new(Subspace::zero(p, ambient))
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient()
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let w = self.relations.reduce(v);
        self.free_cols.iter().map(|&c| w[c]).collect()
    }

    /// The canonical ambient representative of the `k`-th quotient basis vector.
    pub fn lift_basis(&self, k: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.ambient()];
        v[self.free_cols[k]] = 1;
        v
    }

    /// Any ambient representative of the class with the given coordinates.
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![0u32; self.ambient()];
        for (k, &c) in coords.iter().enumerate() {
            v[self.free_cols[k]] = c % self.relations.prime();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf2_span(rows: &[Vec<i64>]) -> Subspace {
        Subspace::from_span(&Mat::from_rows(2, rows))
    }

    #[test]
    fn sum_and_intersection_trivial_cases() {
        let u = gf2_span(&[vec![1, 0]]);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);

        let v = gf2_span(&[vec![0, 1]]);
        assert_eq!(u.sum(&v).unwrap().dim(), 2);
        assert_eq!(u.intersect(&v).unwrap().dim(), 0);
    }

    #[test]
    fn two_planes_in_gf2_cubed() {
        // Oracle: brute force over all 8 vectors of GF(2)^3.
        let u = gf2_span(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let v = gf2_span(&[vec![0, 1, 1], vec![1, 0, 1]]);
        let mut both = Vec::new();
        for x in 0..8u32 {
            let vec = vec![x & 1, (x >> 1) & 1, (x >> 2) & 1];
            if u.contains_vec(&vec) && v.contains_vec(&vec) {
                both.push(vec);
            }
        }
        // 2^dim(intersection) vectors lie in both.
        let inter = u.intersect(&v).unwrap();
        assert_eq!(both.len(), 1 << inter.dim());
        assert_eq!(inter.dim(), 1);
        assert_eq!(u.sum(&v).unwrap().dim(), 3);
        for w in &both {
            assert!(inter.contains_vec(w));
        }
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = gf2_span(&[vec![1, 0]]);
        let v = gf2_span(&[vec![1, 0, 0]]);
        assert!(u.sum(&v).is_err());
    }

    #[test]
    fn pairing_annihilator_examples() {
        let id = Mat::identity(2, 2);
        let whole = Subspace::whole(2, 2);
        assert_eq!(whole.pairing_annihilator(&id).unwrap().dim(), 0);

        let zero = Subspace::zero(2, 2);
        assert_eq!(zero.pairing_annihilator(&id).unwrap().dim(), 2);

        // span{e2} in GF(2)^2 under the dot pairing: annihilator is span{e1}.
        let line = gf2_span(&[vec![0, 1]]);
        let ann = line.pairing_annihilator(&id).unwrap();
        // Oracle: enumerate.
        let mut expect = Vec::new();
        for x in 0..4u32 {
            let f = vec![x & 1, (x >> 1) & 1];
            if (f[1] * 1) % 2 == 0 {
                expect.push(f);
            }
        }
        assert_eq!(ann.dim(), 1);
        for f in expect {
            assert!(ann.contains_vec(&f));
        }
    }

    #[test]
    fn degenerate_pairing_rejected() {
        let g = Mat::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        let line = gf2_span(&[vec![0, 1]]);
        assert!(matches!(
            line.pairing_annihilator(&g),
            Err(Error::DegeneratePairing { .. })
        ));
    }

    #[test]
    fn quotient_projection() {
        let rel = gf2_span(&[vec![1, 1, 0]]);
        let q = QuotientSpace::new(rel);
        assert_eq!(q.dim(), 2);
        // e1 and e2 have the same class.
        assert_eq!(q.project(&[1, 0, 0]), q.project(&[0, 1, 0]));
        assert_ne!(q.project(&[0, 0, 1]), q.project(&[1, 0, 0]));
        // project . lift = id
        for k in 0..q.dim() {
            let mut coords = vec![0; q.dim()];
            coords[k] = 1;
            assert_eq!(q.project(&q.lift(&coords)), coords);
        }
    }

    fn random_subspace(p: u32, ambient: usize, rows: usize, seed: u64) -> Subspace {
        let mut s = seed | 1;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) as i64
        };
        let data: Vec<i64> = (0..rows * ambient).map(|_| next()).collect();
        Subspace::from_span(&Mat::from_flat(p, rows, ambient, data))
    }

    proptest! {
        #[test]
        fn modular_law_of_dims(p in prop::sample::select(vec![2u32, 3]),
                               ambient in 1usize..5,
                               r1 in 0usize..4, r2 in 0usize..4,
                               s1 in any::<u64>(), s2 in any::<u64>()) {
            let u = random_subspace(p, ambient, r1, s1);
            let v = random_subspace(p, ambient, r2, s2);
            let sum = u.sum(&v).unwrap();
            let inter = u.intersect(&v).unwrap();
            prop_assert_eq!(sum.dim() + inter.dim(), u.dim() + v.dim());
            prop_assert!(sum.contains(&u) && sum.contains(&v));
            prop_assert!(u.contains(&inter) && v.contains(&inter));
        }

        #[test]
        fn annihilator_is_involutive(p in prop::sample::select(vec![2u32, 3]),
                                     ambient in 1usize..5,
                                     rows in 0usize..4,
                                     seed in any::<u64>()) {
            let s = random_subspace(p, ambient, rows, seed);
            let ann = s.orthogonal();
            prop_assert_eq!(ann.dim(), ambient - s.dim());
            prop_assert_eq!(ann.orthogonal(), s);
        }

        #[test]
        fn canonical_form_is_span_invariant(p in prop::sample::select(vec![2u32, 3]),
                                            ambient in 1usize..5,
                                            rows in 1usize..4,
                                            seed in any::<u64>(),
                                            shuffle in any::<u64>()) {
            let s = random_subspace(p, ambient, rows, seed);
            // Re-span by random combinations of basis vectors plus repeats.
            let mut rng = shuffle | 1;
            let mut next = || {
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (rng >> 33) as u32
            };
            let k = s.dim();
            let mut rows2 = Mat::zeros(p, 2 * k + 1, ambient);
            for i in 0..2 * k + 1 {
                let coeffs: Vec<u32> = (0..k).map(|_| next() % p).collect();
                let v = s.from_coords(&coeffs);
                for (j, &x) in v.iter().enumerate() {
                    rows2.set_raw(i, j, x);
                }
            }
            let s2 = Subspace::from_span(&rows2);
            prop_assert!(s.contains(&s2));
            if s2.dim() == s.dim() {
                prop_assert_eq!(s, s2);
            }
        }
    }
}
