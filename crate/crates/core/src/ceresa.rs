//! The genus-`g` Ceresa variation: `∧³H` modulo `θ ∧ H`, its polarization, and
//! the two-variable bounding-pair degeneration.

use crate::exact::{Field, MatrixQ, ParamScalar, Poly, Rational};
use crate::heights::{h_q, h_q_symbolic, is_infinitesimal_isometry, PairingReport};
use crate::koszul::{binomial, index_of, multi_indices, Cochain, MonodromyRep};
use crate::{Error, Result};

/// `H = ℤ^{2g}` with basis `e_1..e_g, f_1..f_g` and `Q(e_i, f_j) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticLattice {
    pub genus: usize,
    pub form: MatrixQ,
}

impl SymplecticLattice {
    pub fn new(genus: usize) -> Self {
        let n = 2 * genus;
        let form = MatrixQ::from_fn(n, n, |a, b| {
            if b == a + genus && a < genus {
                Rational::from_integer(1.into())
            } else if a == b + genus && b < genus {
                Rational::from_integer((-1).into())
            } else {
                Rational::from_integer(0.into())
            }
        });
        SymplecticLattice { genus, form }
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn e(&self, i: usize) -> usize {
        i
    }

    pub fn f(&self, i: usize) -> usize {
        self.genus + i
    }
}

/// Matrices on `∧³H` in the lexicographic basis of increasing triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge3Data {
    pub triples: Vec<Vec<usize>>,
    /// `u(x) = θ ∧ x`, `H → ∧³H`.
    pub u: MatrixQ,
    /// The contraction `∧³H → H`.
    pub c: MatrixQ,
    /// `I = (g−1)·id − u∘c`.
    pub i_map: MatrixQ,
    /// Columns: the basis of the complement `L` of `u(H)`.
    pub complement: MatrixQ,
    /// Quotient map `∧³H → V`, in the basis of `V` given by `L`.
    pub pi: MatrixQ,
    /// Section `j = I∘ι_L/(g−1)`, `V → ∧³H`.
    pub j: MatrixQ,
    /// Induced pairing `Q₃` on `∧³H`.
    pub q3: MatrixQ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeresaModel {
    pub lattice: SymplecticLattice,
    pub wedge: Wedge3Data,
    /// Polarization `q` on `V`.
    pub q: MatrixQ,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `b_a ∧ b_b ∧ b_c` as `(sign, index)` in the triple basis.
fn wedge_basis(n: usize, a: usize, b: usize, c: usize) -> Option<(i64, usize)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut v = [a, b, c];
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, index_of(n, &v)))
}

fn det3(m: [[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Genus labels `i` (0-based) of a basis vector of `H`.
fn label(g: usize, a: usize) -> usize {
    a % g
}

/// The complement `L`: triples with three distinct genus labels, and
/// `v_i ∧ e_j ∧ f_j` with `i − j ≢ 0, 1 (mod g)`.
fn complement_triples(g: usize) -> Vec<Vec<usize>> {
    let n = 2 * g;
    let mut out: Vec<Vec<usize>> = multi_indices(n, 3)
        .into_iter()
        .filter(|t| {
            let (x, y, z) = (label(g, t[0]), label(g, t[1]), label(g, t[2]));
            x != y && y != z && x != z
        })
        .collect();
    for j in 0..g {
        for i in 0..g {
            let diff = (i + g - j) % g;
            if diff == 0 || diff == 1 {
                continue;
            }
            for v in [i, g + i] {
                let mut t = vec![v, j, g + j];
                t.sort_unstable();
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

/// Builds `∧³H`, the Johnson maps, the quotient `V` and its polarization.
pub fn build_ceresa(g: usize) -> Result<CeresaModel> {
    if g < 3 {
        return Err(Error::GenusTooSmall(g));
    }
    let lattice = SymplecticLattice::new(g);
    let n = lattice.rank();
    let qh = &lattice.form;
    let triples = multi_indices(n, 3);
    let dim = triples.len();

    let mut u = MatrixQ::zeros(dim, n);
    for k in 0..n {
        for i in 0..g {
            if let Some((s, idx)) = wedge_basis(n, lattice.e(i), lattice.f(i), k) {
                u[(idx, k)] += rat(s);
            }
        }
    }
    let mut c = MatrixQ::zeros(n, dim);
    for (col, t) in triples.iter().enumerate() {
        let (a, b, d) = (t[0], t[1], t[2]);
        c[(d, col)] += &qh[(a, b)];
        c[(a, col)] += &qh[(b, d)];
        c[(b, col)] += &qh[(d, a)];
    }
    let gm1 = rat(g as i64 - 1);
    let i_map = MatrixQ::identity(dim).scale(&gm1).minus(&u.mul(&c));

    let comp = complement_triples(g);
    let mut complement = MatrixQ::zeros(dim, comp.len());
    for (col, t) in comp.iter().enumerate() {
        complement[(index_of(n, t), col)] = rat(1);
    }
    let inv = u
        .hstack(&complement)
        .inverse()
        .ok_or_else(|| Error::Validation("complement does not split ∧³H".into()))?;
    let vdim = comp.len();
    let pi = inv.submatrix(&(n..dim).collect::<Vec<_>>(), &(0..dim).collect::<Vec<_>>());
    let j = i_map.mul(&complement).scale(&gm1.inverse());

    let q3 = MatrixQ::from_fn(dim, dim, |a, b| {
        let (x, y) = (&triples[a], &triples[b]);
        det3(std::array::from_fn(|p| std::array::from_fn(|s| qh[(x[p], y[s])].clone())))
    });
    let q = j.transpose().mul(&q3).mul(&j).scale(&gm1);
    debug_assert_eq!(q.rows(), vdim);
    let wedge = Wedge3Data { triples, u, c, i_map, complement, pi, j, q3 };
    Ok(CeresaModel { lattice, wedge, q })
}

impl CeresaModel {
    pub fn genus(&self) -> usize {
        self.lattice.genus
    }

    pub fn dim_v(&self) -> usize {
        self.q.rows()
    }

    fn check_pair(&self, h: usize) -> Result<()> {
        let g = self.genus();
        if h == 0 || h > g / 2 {
            return Err(Error::InvalidPair(g, h));
        }
        Ok(())
    }

    /// `N` on `H`: `x ↦ Q(x, γ)γ` with `γ = f_{h+1}`.
    pub fn dehn_log(&self, h: usize) -> Result<MatrixQ> {
        self.check_pair(h)?;
        let n = self.lattice.rank();
        let gamma = self.lattice.f(h);
        let qh = &self.lattice.form;
        Ok(MatrixQ::from_fn(n, n, |a, b| if a == gamma { qh[(b, gamma)].clone() } else { rat(0) }))
    }

    /// `N` extended to `∧³H` as a derivation.
    pub fn wedge_log(&self, h: usize) -> Result<MatrixQ> {
        let nh = self.dehn_log(h)?;
        let n = self.lattice.rank();
        let tr = &self.wedge.triples;
        let mut out = MatrixQ::zeros(tr.len(), tr.len());
        for (col, t) in tr.iter().enumerate() {
            for slot in 0..3 {
                for img in 0..n {
                    let coeff = &nh[(img, t[slot])];
                    if Field::is_zero(coeff) {
                        continue;
                    }
                    let mut v = [t[0], t[1], t[2]];
                    v[slot] = img;
                    if let Some((s, idx)) = wedge_basis(n, v[0], v[1], v[2]) {
                        out[(idx, col)] += coeff * rat(s);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `N = π ∘ N_∧ ∘ ι_L` on `V`.
    pub fn v_log(&self, h: usize) -> Result<MatrixQ> {
        let nw = self.wedge_log(h)?;
        let nh = self.dehn_log(h)?;
        if nw.mul(&self.wedge.u) != self.wedge.u.mul(&nh) {
            return Err(Error::Validation("N does not commute with u".into()));
        }
        Ok(self.wedge.pi.mul(&nw).mul(&self.wedge.complement))
    }

    /// `N₁ = N₂ = N` on `V`, weight −1, polarized by `q`.
    pub fn bounding_pair_rep(&self, h: usize) -> Result<MonodromyRep> {
        let n = self.v_log(h)?;
        if !n.mul(&n).is_zero() {
            return Err(Error::Validation("N² ≠ 0 on V".into()));
        }
        let rep = MonodromyRep::new(self.dim_v(), vec![n.clone(), n])?.with_weight(-1);
        if !is_infinitesimal_isometry(&rep, &self.q) {
            return Err(Error::Validation("N does not preserve q".into()));
        }
        rep.with_polarization(self.q.clone())
    }

    /// `2 Σ_{i≤h} e_i ∧ f_i ∧ f_{h+1}` in `∧³H`.
    pub fn sing_wedge(&self, h: usize) -> Result<Vec<Rational>> {
        self.check_pair(h)?;
        let l = &self.lattice;
        let n = l.rank();
        let mut w = vec![rat(0); self.wedge.triples.len()];
        for i in 0..h {
            let (s, idx) = wedge_basis(n, l.e(i), l.f(i), l.f(h)).expect("distinct indices");
            w[idx] += rat(2 * s);
        }
        Ok(w)
    }

    /// The singularity class as `(0, sing) ∈ B¹`.
    pub fn sing_class(&self, h: usize) -> Result<Cochain<Rational>> {
        let s = self.wedge.pi.mul_vec(&self.sing_wedge(h)?);
        Cochain::from_components(1, 2, vec![vec![rat(0); s.len()], s])
    }

    pub fn height(&self, h: usize, t: &[Rational]) -> Result<PairingReport> {
        let rep = self.bounding_pair_rep(h)?;
        let s = self.sing_class(h)?;
        h_q(&rep, &s, &s, t, &self.q)
    }

    pub fn height_symbolic(&self, h: usize, stratum: &[usize]) -> Result<PairingReport> {
        let rep = self.bounding_pair_rep(h)?;
        let s = self.sing_class(h)?;
        h_q_symbolic(&rep, &s, &s, stratum, &self.q)
    }
}

pub fn bounding_pair_rep(g: usize, h: usize) -> Result<MonodromyRep> {
    build_ceresa(g)?.bounding_pair_rep(h)
}

pub fn sing_class(g: usize, h: usize) -> Result<Cochain<Rational>> {
    build_ceresa(g)?.sing_class(h)
}

/// `h_q(t)(sing, sing)` at a point of the closed quadrant.
pub fn ceresa_height(g: usize, h: usize, t: &[Rational]) -> Result<PairingReport> {
    build_ceresa(g)?.height(h, t)
}

/// `h_q(t)(sing, sing)` as a rational function on a stratum of `ℝ²_{≥0}`.
pub fn ceresa_height_symbolic(g: usize, h: usize, stratum: &[usize]) -> Result<PairingReport> {
    build_ceresa(g)?.height_symbolic(h, stratum)
}

/// `4 t₁t₂/(t₁+t₂) · (g−h−1) · h`.
pub fn closed_form(g: usize, h: usize) -> ParamScalar {
    let (t1, t2) = (ParamScalar::var(0), ParamScalar::var(1));
    let c = 4 * (g as i64 - h as i64 - 1) * h as i64;
    t1.times(&t2).divide(&t1.plus(&t2)).times(&ParamScalar::from_poly(Poly::from_i64(c)))
}

/// `rank ∧³H − 2g`.
pub fn expected_dim_v(g: usize) -> usize {
    binomial(2 * g, 3) - 2 * g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational_int;

    #[test]
    fn genus_three_shapes() {
        let m = build_ceresa(3).unwrap();
        assert_eq!(m.wedge.triples.len(), 20);
        assert_eq!(m.dim_v(), 14);
        assert_eq!(expected_dim_v(3), 14);
        let cu = m.wedge.c.mul(&m.wedge.u);
        assert_eq!(cu, MatrixQ::identity(6).scale(&rational_int(2)));
        let nonzero = (0..20).filter(|&k| !Field::is_zero(&m.wedge.u[(k, 0)])).count();
        assert_eq!(nonzero, 2);
        assert!(matches!(build_ceresa(2), Err(Error::GenusTooSmall(2))));
    }

    #[test]
    fn quotient_and_section() {
        for g in 3..=4 {
            let m = build_ceresa(g).unwrap();
            let w = &m.wedge;
            let dv = m.dim_v();
            assert_eq!(w.pi.mul(&w.j), MatrixQ::identity(dv));
            let gm1 = rational_int(g as i64 - 1);
            assert_eq!(w.j.mul(&w.pi), w.i_map.scale(&gm1.inverse()));
            assert_eq!(w.i_map.mul(&w.u), MatrixQ::zeros(w.triples.len(), 2 * g));
            assert_eq!(w.i_map.rank(), dv);
            assert_eq!(m.q.transpose(), m.q.negated());
            assert_eq!(m.q.rank(), dv);
        }
    }

    #[test]
    fn bounding_pair_genus_three() {
        let m = build_ceresa(3).unwrap();
        let nh = m.dehn_log(1).unwrap();
        let mut expect = MatrixQ::zeros(6, 6);
        expect[(4, 1)] = rational_int(1);
        assert_eq!(nh, expect);
        let rep = m.bounding_pair_rep(1).unwrap();
        assert_eq!(rep.logs()[0], rep.logs()[1]);
        assert!(matches!(m.bounding_pair_rep(2), Err(Error::InvalidPair(3, 2))));
        assert!(matches!(m.bounding_pair_rep(0), Err(Error::InvalidPair(3, 0))));
    }

    #[test]
    fn sing_is_in_image_and_nonzero() {
        for (g, h) in [(3, 1), (4, 2), (5, 1)] {
            let m = build_ceresa(g).unwrap();
            let l = &m.lattice;
            let n = l.rank();
            let mut pre = vec![rational_int(0); m.wedge.triples.len()];
            for i in 0..h {
                let (s, idx) = wedge_basis(n, l.e(i), l.f(i), l.e(h)).unwrap();
                pre[idx] += rational_int(2 * s);
            }
            let nv = m.v_log(h).unwrap();
            let s = m.sing_class(h).unwrap();
            assert_eq!(nv.mul_vec(&m.wedge.pi.mul_vec(&pre)), s.component(1));
            assert!(m.wedge.i_map.mul_vec(&m.sing_wedge(h).unwrap()).iter().any(|x| !Field::is_zero(x)));
        }
    }

    #[test]
    fn height_genus_three() {
        let t = [rational_int(1), rational_int(1)];
        assert_eq!(ceresa_height(3, 1, &t).unwrap().value.as_rational().unwrap(), rational_int(2));
        let s = ceresa_height_symbolic(3, 1, &[0, 1]).unwrap();
        assert_eq!(s.value, closed_form(3, 1));
        assert_eq!(s.value.to_string(), "(4*t1*t2)/(t1+t2)");
        assert!(ceresa_height_symbolic(3, 1, &[0]).unwrap().value.is_zero());
    }

    #[test]
    fn graded_polarization_matches_height() {
        use crate::heights::{graded_qbar, height_gram, apply_polarization, inertia};
        let m = build_ceresa(3).unwrap();
        let rep = m.bounding_pair_rep(1).unwrap();
        let t = [rational_int(2), rational_int(3)];
        let qb = graded_qbar(&rep, 1, &t, &m.q).unwrap();
        let reps: Vec<Cochain<Rational>> =
            qb.representatives.iter().map(|v| Cochain::from_vec(1, 2, m.dim_v(), v.clone()).unwrap()).collect();
        let lefts: Vec<Cochain<Rational>> = reps.iter().map(|x| apply_polarization(&m.q, x)).collect();
        assert_eq!(height_gram(&rep.dual(), &lefts, &reps, &t).unwrap(), qb.gram);
        assert_eq!(inertia(&qb.gram), (3, 2, 0));
        let s = m.sing_class(1).unwrap();
        let hs = height_gram(&rep.dual(), &[apply_polarization(&m.q, &s)], &[s], &t).unwrap();
        assert_eq!(hs[(0, 0)], rational_int(24) / rational_int(5));
    }
}
