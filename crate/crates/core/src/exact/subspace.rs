use super::field::Field;
use super::matrix::MatrixQ;
use super::rational::Rational;

/// Subspace of ℚⁿ stored by its reduced row-echelon basis.
///
/// The basis is canonical, so derived `PartialEq` is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: MatrixQ,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: MatrixQ::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: MatrixQ::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let m = MatrixQ::from_rows(ambient, vectors);
        Self::row_space(&m)
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &MatrixQ) -> Self {
        let (r, pivots) = m.rref();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        let all: Vec<usize> = (0..m.cols()).collect();
        Subspace { ambient: m.cols(), basis: r.submatrix(&idx, &all), pivots }
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &MatrixQ) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn kernel_of(m: &MatrixQ) -> Self {
        Self::from_vectors(m.cols(), m.kernel())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis vectors as rows.
    pub fn basis_matrix(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residue = v.to_vec();
        for (i, ci) in c.iter().enumerate() {
            if Field::is_zero(ci) {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !Field::is_zero(b) {
                    residue[j] -= ci * b;
                }
            }
        }
        residue.iter().all(Field::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        // x = Σ a_i s_i lies in `other` iff its annihilator vanishes on it.
        let ann = other.annihilator();
        let restricted = ann.mul(&self.basis.transpose());
        let coeffs = restricted.kernel();
        let vectors = coeffs
            .iter()
            .map(|a| self.basis.transpose().mul_vec(a))
            .collect();
        Self::from_vectors(self.ambient, vectors)
    }

    /// Rows spanning `{λ : λ(v) = 0 for v in self}`.
    pub fn annihilator(&self) -> MatrixQ {
        let k = self.basis.kernel();
        MatrixQ::from_rows(self.ambient, k)
    }

    /// `{x : Mx ∈ self}` for `M` mapping into the ambient space.
    pub fn preimage(&self, m: &MatrixQ) -> Subspace {
        assert_eq!(m.rows(), self.ambient);
        let ann = self.annihilator();
        if ann.rows() == 0 {
            return Subspace::full(m.cols());
        }
        Subspace::kernel_of(&ann.mul(m))
    }

    /// `M(self)`.
    pub fn image(&self, m: &MatrixQ) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let imgs = self.basis().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(m.rows(), imgs)
    }

    /// Vectors completing a basis of `self` to one of `outer`, chosen greedily
    /// from the echelon basis of `outer`.
    pub fn complement_in(&self, outer: &Subspace) -> Vec<Vec<Rational>> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in outer.basis() {
            if !acc.contains(&v) {
                acc = acc.sum(&Subspace::from_vectors(self.ambient, vec![v.clone()]));
                out.push(v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rational_int;
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational_int(x)).collect()
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_vectors(3, vec![q(&[1, 0, 0]), q(&[0, 1, 0])]);
        let b = Subspace::from_vectors(3, vec![q(&[0, 1, 1]), q(&[1, 1, 0])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::from_vectors(3, vec![q(&[1, 1, 0])]));
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn preimage_and_image() {
        let n = MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]);
        let z = Subspace::zero(2);
        assert_eq!(z.preimage(&n), Subspace::from_vectors(2, vec![q(&[0, 1])]));
        assert_eq!(Subspace::full(2).image(&n), Subspace::from_vectors(2, vec![q(&[0, 1])]));
    }

    proptest! {
        #[test]
        fn canonical_form_is_basis_independent(
            rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..4),
            mix in proptest::collection::vec(-2i64..=2, 9),
        ) {
            let a = Subspace::from_vectors(4, rows.iter().map(|r| q(r)).collect());
            let mut mixed: Vec<Vec<Rational>> = Vec::new();
            for k in 0..rows.len() {
                let mut v = q(&rows[k]);
                for (j, other) in rows.iter().enumerate() {
                    if j != k {
                        let c = rational_int(mix[(3 * k + j) % mix.len()]);
                        for (x, y) in v.iter_mut().zip(q(other)) {
                            *x += &c * y;
                        }
                    }
                }
                mixed.push(v);
            }
            mixed.extend(rows.iter().map(|r| q(r)));
            prop_assert_eq!(a, Subspace::from_vectors(4, mixed));
        }
    }
}
