//! Koszul complex `K = L ⊗ ∧E`, the partial Koszul complex `B ⊆ K`,
//! contractions, and cohomology presentations.
//!
//! Degree-`p` cochains are flattened blockwise: the component for the
//! `a`-th multi-index `J` (lexicographic order) occupies coordinates
//! `a·n .. (a+1)·n`.

use crate::exact::{Field, Matrix, MatrixQ, ParamScalar, Rational, Subspace};
use crate::{Error, Result};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `p`-subsets of `0..r` in lexicographic order.
pub fn multi_indices(r: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            if r - i < left {
                break;
            }
            cur.push(i);
            rec(i + 1, r, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, r, p, &mut Vec::new(), &mut out);
    out
}

pub fn index_of(r: usize, j: &[usize]) -> usize {
    multi_indices(r, j.len()).iter().position(|x| x == j).expect("valid multi-index")
}

/// `e_i ∧ e_J = sign · e_{J ∪ {i}}`, or `None` when `i ∈ J`.
pub fn wedge_sign(i: usize, j: &[usize]) -> Option<(i64, Vec<usize>)> {
    if j.contains(&i) {
        return None;
    }
    let below = j.iter().filter(|&&x| x < i).count();
    let mut k = j.to_vec();
    k.insert(below, i);
    Some((if below % 2 == 0 { 1 } else { -1 }, k))
}

/// `M·v` for a rational matrix and a vector over any field.
pub fn apply<F: Field>(m: &MatrixQ, v: &[F]) -> Vec<F> {
    assert_eq!(m.cols(), v.len());
    (0..m.rows())
        .map(|i| {
            let mut acc = F::zero();
            for (a, x) in m.row(i).iter().zip(v) {
                if !Field::is_zero(a) && !x.is_zero() {
                    acc = acc.plus(&x.scale_by(a));
                }
            }
            acc
        })
        .collect()
}

/// Unipotent local system on `(Δ*)^r`, given by commuting nilpotent
/// logarithms of monodromy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyRep {
    rank: usize,
    logs: Vec<MatrixQ>,
    unipotent: Option<Vec<MatrixQ>>,
    weight: Option<i64>,
    polarization: Option<MatrixQ>,
}

impl MonodromyRep {
    pub fn new(rank: usize, logs: Vec<MatrixQ>) -> Result<Self> {
        for (i, n) in logs.iter().enumerate() {
            if n.rows() != rank || n.cols() != rank {
                return Err(Error::DimensionMismatch(format!("N{} is not {rank}x{rank}", i + 1)));
            }
            if !n.pow(rank + 1).is_zero() {
                return Err(Error::NotNilpotent);
            }
        }
        for i in 0..logs.len() {
            for j in i + 1..logs.len() {
                if !logs[i].commutator(&logs[j]).is_zero() {
                    return Err(Error::NotCommuting(i, j));
                }
            }
        }
        Ok(MonodromyRep { rank, logs, unipotent: None, weight: None, polarization: None })
    }

    /// From integral unipotent monodromies `T_i`, with `N_i = log T_i`.
    pub fn from_unipotent(rank: usize, ts: Vec<MatrixQ>) -> Result<Self> {
        for (i, t) in ts.iter().enumerate() {
            if t.rows() != rank || t.cols() != rank {
                return Err(Error::DimensionMismatch(format!("T{} is not {rank}x{rank}", i + 1)));
            }
            if !t.is_integral() {
                return Err(Error::Validation(format!("T{} is not integral", i + 1)));
            }
            if !t.minus(&MatrixQ::identity(rank)).pow(rank + 1).is_zero() {
                return Err(Error::NotNilpotent);
            }
        }
        let logs = ts.iter().map(MatrixQ::log_unipotent).collect();
        let mut rep = Self::new(rank, logs)?;
        rep.unipotent = Some(ts);
        Ok(rep)
    }

    pub fn with_weight(mut self, k: i64) -> Self {
        self.weight = Some(k);
        self
    }

    pub fn with_polarization(mut self, q: MatrixQ) -> Result<Self> {
        if q.rows() != self.rank || q.cols() != self.rank {
            return Err(Error::DimensionMismatch("polarization has the wrong size".into()));
        }
        self.polarization = Some(q);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of variables `r`.
    pub fn r(&self) -> usize {
        self.logs.len()
    }

    pub fn logs(&self) -> &[MatrixQ] {
        &self.logs
    }

    pub fn weight(&self) -> Option<i64> {
        self.weight
    }

    pub fn polarization(&self) -> Option<&MatrixQ> {
        self.polarization.as_ref()
    }

    /// `T_i`, as given or as `exp(N_i)`.
    pub fn unipotents(&self) -> Vec<MatrixQ> {
        match &self.unipotent {
            Some(ts) => ts.clone(),
            None => self.logs.iter().map(MatrixQ::exp_nilpotent).collect(),
        }
    }

    pub fn has_integral_structure(&self) -> bool {
        self.unipotent.is_some()
    }

    /// Whether every `exp(N_i)` is an integral matrix.
    pub fn is_integral(&self) -> bool {
        self.unipotents().iter().all(MatrixQ::is_integral)
    }

    /// Dual local system: logarithms `−N_iᵀ`, weight `−k`.
    pub fn dual(&self) -> MonodromyRep {
        MonodromyRep {
            rank: self.rank,
            logs: self.logs.iter().map(|n| n.transpose().negated()).collect(),
            unipotent: self.unipotent.as_ref().map(|_| {
                self.logs.iter().map(|n| n.transpose().negated().exp_nilpotent()).collect()
            }),
            weight: self.weight.map(|k| -k),
            polarization: None,
        }
    }

    /// `𝓗^∨ = 𝓗*(1)`: same matrices as the dual, weight `−k − 2`.
    pub fn twisted_dual(&self) -> MonodromyRep {
        let mut d = self.dual();
        d.weight = self.weight.map(|k| -k - 2);
        d
    }

    /// `N(t) = Σ t_i N_i` over any field.
    pub fn n_of_t<F: Field>(&self, t: &[F]) -> Matrix<F> {
        assert_eq!(t.len(), self.r(), "one coordinate per variable");
        let mut out: Matrix<F> = Matrix::zeros(self.rank, self.rank);
        for (n, ti) in self.logs.iter().zip(t) {
            if ti.is_zero() {
                continue;
            }
            for a in 0..self.rank {
                for b in 0..self.rank {
                    if !Field::is_zero(&n[(a, b)]) {
                        out[(a, b)] = out[(a, b)].plus(&ti.scale_by(&n[(a, b)]));
                    }
                }
            }
        }
        out
    }

    /// `N_J = N_{j_1} ⋯ N_{j_p}`.
    pub fn n_multi(&self, j: &[usize]) -> MatrixQ {
        j.iter().fold(MatrixQ::identity(self.rank), |acc, &i| acc.mul(&self.logs[i]))
    }

    /// Some `l` with `N(t) l = x`, or `None`.
    ///
    /// The system is first cut down to the pivot rows of `Σ im N_i` and the
    /// pivot columns of `Σ row(N_i)`, which is where all the information
    /// lives; the result is checked against the full system.
    pub fn solve_n_of_t<F: Field>(&self, t: &[F], x: &[F]) -> Option<Vec<F>> {
        let n = self.rank;
        let images = self.logs.iter().fold(Subspace::zero(n), |s, m| s.sum(&Subspace::column_space(m)));
        let rows = self.logs.iter().fold(Subspace::zero(n), |s, m| s.sum(&Subspace::row_space(m)));
        let ann = images.annihilator();
        if apply(&ann, x).iter().any(|v| !v.is_zero()) {
            return None;
        }
        let pr = images.pivots().to_vec();
        let pc = rows.pivots().to_vec();
        if pr.is_empty() {
            return Some(vec![F::zero(); n]);
        }
        let full = self.n_of_t(t);
        let a = full.submatrix(&pr, &pc);
        let rhs: Vec<F> = pr.iter().map(|&i| x[i].clone()).collect();
        let y = F::solve_system(&a, &rhs)?;
        let mut l = vec![F::zero(); n];
        for (v, &c) in y.into_iter().zip(&pc) {
            l[c] = v;
        }
        (full.mul_vec(&l) == x).then_some(l)
    }
}

/// Element of `K^p` with coefficients in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain<F> {
    degree: usize,
    r: usize,
    n: usize,
    data: Vec<F>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: usize, r: usize, n: usize) -> Self {
        Cochain { degree, r, n, data: vec![F::zero(); n * binomial(r, degree)] }
    }

    pub fn from_vec(degree: usize, r: usize, n: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != n * binomial(r, degree) {
            return Err(Error::DimensionMismatch(format!(
                "degree-{degree} cochain needs {} entries, got {}",
                n * binomial(r, degree),
                data.len()
            )));
        }
        Ok(Cochain { degree, r, n, data })
    }

    /// Components listed in multi-index order.
    pub fn from_components(degree: usize, r: usize, comps: Vec<Vec<F>>) -> Result<Self> {
        let n = comps.first().map_or(0, Vec::len);
        if comps.len() != binomial(r, degree) || comps.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch("wrong number or size of components".into()));
        }
        Ok(Cochain { degree, r, n, data: comps.concat() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<F> {
        self.data
    }

    pub fn component(&self, pos: usize) -> &[F] {
        &self.data[pos * self.n..(pos + 1) * self.n]
    }

    pub fn component_mut(&mut self, pos: usize) -> &mut [F] {
        &mut self.data[pos * self.n..(pos + 1) * self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!((self.degree, self.r, self.n), (other.degree, other.r, other.n));
        Cochain { data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: &F) -> Self {
        Cochain { data: self.data.iter().map(|a| a.times(c)).collect(), ..self.clone() }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Cochain<G> {
        Cochain { degree: self.degree, r: self.r, n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl Cochain<Rational> {
    pub fn lift<G: Field>(&self) -> Cochain<G> {
        self.map(G::from_rational)
    }
}

/// `d(l ⊗ e_J) = Σ_i N_i l ⊗ e_i ∧ e_J`.
pub fn apply_d<F: Field>(rep: &MonodromyRep, x: &Cochain<F>) -> Cochain<F> {
    let (p, r, n) = (x.degree, rep.r(), rep.rank());
    let mut out = Cochain::zero(p + 1, r, n);
    if p >= r {
        return out;
    }
    let targets = multi_indices(r, p + 1);
    for (pos, j) in multi_indices(r, p).iter().enumerate() {
        let comp = x.component(pos);
        if comp.iter().all(Field::is_zero) {
            continue;
        }
        for i in 0..r {
            let Some((sign, k)) = wedge_sign(i, j) else { continue };
            let tpos = targets.iter().position(|m| *m == k).expect("target index");
            let img = apply(&rep.logs[i], comp);
            for (o, v) in out.component_mut(tpos).iter_mut().zip(img) {
                *o = if sign > 0 { o.plus(&v) } else { o.minus(&v) };
            }
        }
    }
    out
}

/// Contraction with `X(t) = Σ t_i e_i^*`:
/// `ι(e_J) = Σ_a (−1)^a t_{j_a} e_{J ∖ j_a}`.
pub fn delta_t<F: Field>(x: &Cochain<F>, t: &[F]) -> Cochain<F> {
    let (p, r, n) = (x.degree, x.r, x.n);
    assert_eq!(t.len(), r, "one coordinate per variable");
    if p == 0 {
        return Cochain { degree: 0, r, n, data: vec![F::zero(); n] };
    }
    let mut out: Cochain<F> = Cochain::zero(p - 1, r, n);
    let targets = multi_indices(r, p - 1);
    for (pos, j) in multi_indices(r, p).iter().enumerate() {
        let comp = x.component(pos);
        for (a, &ja) in j.iter().enumerate() {
            if t[ja].is_zero() {
                continue;
            }
            let mut k = j.clone();
            k.remove(a);
            let tpos = targets.iter().position(|m| *m == k).expect("target index");
            let c = if a % 2 == 0 { t[ja].clone() } else { t[ja].negated() };
            for (o, v) in out.component_mut(tpos).iter_mut().zip(comp) {
                if !v.is_zero() {
                    *o = o.plus(&v.times(&c));
                }
            }
        }
    }
    out
}

/// `Δ_t = dδ_t + δ_t d`.
pub fn laplace_t<F: Field>(rep: &MonodromyRep, x: &Cochain<F>, t: &[F]) -> Cochain<F> {
    let a = apply_d(rep, &delta_t(x, t));
    let b = delta_t(&apply_d(rep, x), t);
    let mut out = if x.degree == 0 { Cochain::zero(0, x.r, x.n) } else { a };
    out = out.plus(&b);
    out
}

/// Componentwise `N(t)`.
pub fn n_of_t_componentwise<F: Field>(rep: &MonodromyRep, x: &Cochain<F>, t: &[F]) -> Cochain<F> {
    let nt = rep.n_of_t(t);
    let mut out = x.clone();
    for pos in 0..binomial(x.r, x.degree) {
        let v = nt.mul_vec(x.component(pos));
        out.component_mut(pos).clone_from_slice(&v);
    }
    out
}

/// Explicit differentials of `K` and the subspaces `B^p ⊆ K^p`.
#[derive(Clone, Debug)]
pub struct Complexes {
    rep: MonodromyRep,
    d: Vec<MatrixQ>,
    b: Vec<Subspace>,
}

/// Which complex a cohomology computation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    K,
    B,
}

/// `ker d / im d` at one degree, as subspaces of `K^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyPresentation {
    pub degree: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Representatives of a basis of the quotient.
    pub transversal: Vec<Vec<Rational>>,
}

impl CohomologyPresentation {
    pub fn dim(&self) -> usize {
        self.transversal.len()
    }

    /// Coordinates of the class of `x` in the transversal basis, or `None`
    /// if `x` is not a cocycle.
    pub fn class_of(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        if !self.cocycles.contains(x) {
            return None;
        }
        let mut cols = self.transversal.clone();
        cols.extend(self.coboundaries.basis());
        if cols.is_empty() {
            return Some(Vec::new());
        }
        let m = MatrixQ::from_rows(x.len(), cols).transpose();
        let c = m.solve_gauss(x).expect("cocycle decomposes");
        Some(c[..self.dim()].to_vec())
    }

    pub fn is_coboundary(&self, x: &[Rational]) -> bool {
        self.coboundaries.contains(x)
    }
}

pub fn build_complexes(rep: &MonodromyRep) -> Complexes {
    let (r, n) = (rep.r(), rep.rank());
    let mut d = Vec::with_capacity(r + 1);
    for p in 0..=r {
        let src = multi_indices(r, p);
        let dst = multi_indices(r, p + 1);
        let mut m = MatrixQ::zeros(n * dst.len(), n * src.len());
        for (sp, j) in src.iter().enumerate() {
            for i in 0..r {
                let Some((sign, k)) = wedge_sign(i, j) else { continue };
                let tp = dst.iter().position(|x| *x == k).expect("target index");
                for a in 0..n {
                    for b in 0..n {
                        let v = &rep.logs[i][(a, b)];
                        if !Field::is_zero(v) {
                            m[(tp * n + a, sp * n + b)] = if sign > 0 { v.clone() } else { -v.clone() };
                        }
                    }
                }
            }
        }
        d.push(m);
    }
    let b = (0..=r)
        .map(|p| {
            let js = multi_indices(r, p);
            let total = n * js.len();
            let mut vecs = Vec::new();
            for (pos, j) in js.iter().enumerate() {
                let col = Subspace::column_space(&rep.n_multi(j));
                for v in col.basis() {
                    let mut x = vec![Rational::from_integer(0.into()); total];
                    x[pos * n..(pos + 1) * n].clone_from_slice(&v);
                    vecs.push(x);
                }
            }
            Subspace::from_vectors(total, vecs)
        })
        .collect();
    Complexes { rep: rep.clone(), d, b }
}

impl Complexes {
    pub fn rep(&self) -> &MonodromyRep {
        &self.rep
    }

    /// `d : K^p → K^{p+1}`.
    pub fn d(&self, p: usize) -> &MatrixQ {
        &self.d[p]
    }

    /// `B^p` as a subspace of `K^p`.
    pub fn b(&self, p: usize) -> &Subspace {
        &self.b[p]
    }

    pub fn dim_k(&self, p: usize) -> usize {
        self.rep.rank() * binomial(self.rep.r(), p)
    }

    fn space(&self, which: Which, p: usize) -> Subspace {
        match which {
            Which::K => Subspace::full(self.dim_k(p)),
            Which::B => self.b[p].clone(),
        }
    }

    pub fn cocycles(&self, which: Which, p: usize) -> Subspace {
        Subspace::kernel_of(&self.d[p]).intersection(&self.space(which, p))
    }

    pub fn coboundaries(&self, which: Which, p: usize) -> Subspace {
        if p == 0 {
            return Subspace::zero(self.dim_k(0));
        }
        self.space(which, p - 1).image(&self.d[p - 1])
    }

    pub fn cohomology(&self, which: Which, p: usize) -> CohomologyPresentation {
        let cocycles = self.cocycles(which, p);
        let coboundaries = self.coboundaries(which, p);
        debug_assert!(cocycles.contains_subspace(&coboundaries));
        let transversal = coboundaries.complement_in(&cocycles);
        CohomologyPresentation { degree: p, cocycles, coboundaries, transversal }
    }

    /// `IH^p → H^p` is injective.
    pub fn ih_to_h_injective(&self, p: usize) -> bool {
        let zb = self.cocycles(Which::B, p);
        let dk = self.coboundaries(Which::K, p);
        zb.intersection(&dk) == self.coboundaries(Which::B, p)
    }

    pub fn in_b(&self, x: &Cochain<Rational>) -> bool {
        self.b[x.degree()].contains(x.as_slice())
    }

    pub fn d_squared_vanishes(&self) -> bool {
        (1..self.d.len()).all(|p| self.d[p].mul(&self.d[p - 1]).is_zero())
    }

    /// `d(B^p) ⊆ B^{p+1}` for all `p`.
    pub fn b_is_subcomplex(&self) -> bool {
        (0..self.rep.r()).all(|p| self.b[p + 1].contains_subspace(&self.b[p].image(&self.d[p])))
    }
}

/// Pullback of a degree-1 class along the test curve `s ↦ (s^{t_1}, …)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestCurveRestriction<F> {
    pub alpha_t: Vec<F>,
    pub solvable: bool,
    pub l_t: Option<Vec<F>>,
}

pub fn restrict_test_curve<F: Field>(rep: &MonodromyRep, alpha: &Cochain<F>, t: &[F]) -> TestCurveRestriction<F> {
    assert_eq!(alpha.degree(), 1, "test-curve restriction takes a degree-1 cochain");
    let alpha_t = delta_t(alpha, t).into_vec();
    let l_t = rep.solve_n_of_t(t, &alpha_t);
    TestCurveRestriction { solvable: l_t.is_some(), alpha_t, l_t }
}

/// Point of a stratum: `t_j = var(j)` for `j ∈ stratum`, `0` elsewhere.
pub fn symbolic_point(r: usize, stratum: &[usize]) -> Vec<ParamScalar> {
    (0..r).map(|i| if stratum.contains(&i) { ParamScalar::var(i) } else { ParamScalar::zero() }).collect()
}
