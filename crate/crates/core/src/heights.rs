//! Pairings on Koszul cochains and the asymptotic height pairing.

use crate::exact::{Field, ImageSolver, MatrixQ, ParamScalar, Rational, Subspace};
use crate::filtration::{induced_weight_on_koszul, monodromy_weight_filtration};
use crate::koszul::{
    apply, build_complexes, delta_t, multi_indices, symbolic_point, Cochain, Complexes, MonodromyRep, Which,
};
use crate::{Error, Result};

/// `(v, λ)` for any `v` with `Tv = x`.
pub fn pair_t<F: Field>(x: &[F], lambda: &[F], t: &MatrixQ) -> Result<F> {
    pair_with(&ImageSolver::new(t), &ImageSolver::new(&t.transpose()), x, lambda)
}

fn pair_with<F: Field>(solver: &ImageSolver, dual: &ImageSolver, x: &[F], lambda: &[F]) -> Result<F> {
    if !dual.contains(lambda) {
        return Err(Error::NotInImage);
    }
    let v = solver.solve(x).ok_or(Error::NotInImage)?;
    Ok(dot(&v, lambda))
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc.plus(&x.times(y)) })
}

fn t_multi<F: Field>(t: &[F], j: &[usize]) -> F {
    j.iter().fold(F::one(), |acc, &i| acc.times(&t[i]))
}

/// Solvers for `N_J` and `N_Jᵀ` over all multi-indices of one degree.
struct DegreeSolvers {
    direct: Vec<ImageSolver>,
    transposed: Vec<ImageSolver>,
}

impl DegreeSolvers {
    fn new(rep: &MonodromyRep, p: usize) -> Self {
        let js = multi_indices(rep.r(), p);
        let mats: Vec<MatrixQ> = js.iter().map(|j| rep.n_multi(j)).collect();
        DegreeSolvers {
            direct: mats.iter().map(ImageSolver::new).collect(),
            transposed: mats.iter().map(|m| ImageSolver::new(&m.transpose())).collect(),
        }
    }
}

/// `q_t(α, β) = Σ_I t_I (α_I, β_I)_{N_I}` for `α ∈ B^p(𝓗)`, `β ∈ B^p(𝓗*)`.
pub fn q_t<F: Field>(rep: &MonodromyRep, alpha: &Cochain<F>, beta: &Cochain<F>, t: &[F]) -> Result<F> {
    let p = alpha.degree();
    q_t_with(&DegreeSolvers::new(rep, p), rep.r(), alpha, beta, t)
}

fn q_t_with<F: Field>(s: &DegreeSolvers, r: usize, alpha: &Cochain<F>, beta: &Cochain<F>, t: &[F]) -> Result<F> {
    let p = alpha.degree();
    if beta.degree() != p {
        return Err(Error::DimensionMismatch("q_t pairs cochains of equal degree".into()));
    }
    let mut acc = F::zero();
    for (pos, j) in multi_indices(r, p).iter().enumerate() {
        let tj = t_multi(t, j);
        let (a, b) = (alpha.component(pos), beta.component(pos));
        if a.iter().all(Field::is_zero) || b.iter().all(Field::is_zero) {
            continue;
        }
        let v = pair_with(&s.direct[pos], &s.transposed[pos], a, b)?;
        if !tj.is_zero() {
            acc = acc.plus(&tj.times(&v));
        }
    }
    Ok(acc)
}

/// Gram matrix of `q_t` between canonical bases of `B^p(𝓗)` and `B^p(𝓗*)`.
pub fn q_t_gram(rep: &MonodromyRep, p: usize, t: &[Rational]) -> Result<MatrixQ> {
    let dual = rep.dual();
    let (cb, cd) = (build_complexes(rep), build_complexes(&dual));
    let s = DegreeSolvers::new(rep, p);
    let (r, n) = (rep.r(), rep.rank());
    let rows = cb.b(p).basis();
    let cols = cd.b(p).basis();
    let mut g = MatrixQ::zeros(rows.len(), cols.len());
    for (a, x) in rows.iter().enumerate() {
        let xa = Cochain::from_vec(p, r, n, x.clone())?;
        for (b, y) in cols.iter().enumerate() {
            let yb = Cochain::from_vec(p, r, n, y.clone())?;
            g[(a, b)] = q_t_with(&s, r, &xa, &yb, t)?;
        }
    }
    Ok(g)
}

/// Value of a pairing with the data used to compute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub value: ParamScalar,
    /// Variables `j` (0-based) with `t_j > 0`; the others vanish.
    pub stratum: Vec<usize>,
    pub alpha: Cochain<Rational>,
    pub beta: Cochain<Rational>,
    /// The solution of `N(t) l = α(t)` that was used.
    pub l_t: Vec<ParamScalar>,
}

fn check_b1_cocycle(c: &Complexes, x: &Cochain<Rational>, what: &str) -> Result<()> {
    let rep = c.rep();
    if x.degree() != 1 || x.r() != rep.r() || x.rank() != rep.rank() {
        return Err(Error::DimensionMismatch(format!("{what} must be a degree-1 cochain of the right shape")));
    }
    if !c.in_b(x) {
        return Err(Error::Validation(format!("{what} does not lie in the partial Koszul complex")));
    }
    if !c.cocycles(Which::K, 1).contains(x.as_slice()) {
        return Err(Error::Validation(format!("{what} is not a cocycle")));
    }
    Ok(())
}

/// `h(t)(α, β) = Σ t_i (α_i − N_i l, β_i)_{N_i}` with `N(t) l = α(t)`,
/// evaluated over any field containing the coordinates of `t`.
pub fn height_value<F: Field>(
    rep: &MonodromyRep,
    alpha: &Cochain<Rational>,
    beta: &Cochain<Rational>,
    t: &[F],
) -> Result<(F, Vec<F>)> {
    let r = rep.r();
    let a: Cochain<F> = alpha.lift();
    let b: Cochain<F> = beta.lift();
    let alpha_t = delta_t(&a, t).into_vec();
    let l = rep
        .solve_n_of_t(t, &alpha_t)
        .ok_or_else(|| Error::NotAdmissible("α(t) is not in the image of N(t)".into()))?;
    let s = DegreeSolvers::new(rep, 1);
    let mut acc = F::zero();
    for (i, ti) in t.iter().enumerate().take(r) {
        if ti.is_zero() {
            continue;
        }
        let nl = apply(&rep.logs()[i], &l);
        let x: Vec<F> = a.component(i).iter().zip(&nl).map(|(p, q)| p.minus(q)).collect();
        let v = pair_with(&s.direct[i], &s.transposed[i], &x, b.component(i))?;
        acc = acc.plus(&ti.times(&v));
    }
    Ok((acc, l))
}

/// `Σ t_i (α_i − N_i l, β_i)_{N_i}` for a caller-supplied `l` with
/// `N(t) l = α(t)`.
pub fn height_from_l<F: Field>(rep: &MonodromyRep, alpha: &Cochain<F>, beta: &Cochain<F>, t: &[F], l: &[F]) -> Result<F> {
    if rep.n_of_t(t).mul_vec(l) != delta_t(alpha, t).into_vec() {
        return Err(Error::NotAdmissible("l does not solve N(t) l = α(t)".into()));
    }
    let s = DegreeSolvers::new(rep, 1);
    let mut acc = F::zero();
    for (i, ti) in t.iter().enumerate().take(rep.r()) {
        if ti.is_zero() {
            continue;
        }
        let nl = apply(&rep.logs()[i], l);
        let x: Vec<F> = alpha.component(i).iter().zip(&nl).map(|(p, q)| p.minus(q)).collect();
        acc = acc.plus(&ti.times(&pair_with(&s.direct[i], &s.transposed[i], &x, beta.component(i))?));
    }
    Ok(acc)
}

/// Checks that `x` is a cocycle of `B¹` for `rep`.
pub fn check_class(rep: &MonodromyRep, x: &Cochain<Rational>, what: &str) -> Result<()> {
    check_b1_cocycle(&build_complexes(rep), x, what)
}

fn validated(rep: &MonodromyRep, alpha: &Cochain<Rational>, beta: &Cochain<Rational>) -> Result<()> {
    check_b1_cocycle(&build_complexes(rep), alpha, "α")?;
    check_b1_cocycle(&build_complexes(&rep.dual()), beta, "β")
}

/// Asymptotic height pairing at a point of the closed cone.
pub fn height_pairing(
    rep: &MonodromyRep,
    alpha: &Cochain<Rational>,
    beta: &Cochain<Rational>,
    t: &[Rational],
) -> Result<PairingReport> {
    if t.len() != rep.r() || t.iter().any(|x| x < &Rational::from_integer(0.into())) {
        return Err(Error::Validation("t must have r nonnegative coordinates".into()));
    }
    validated(rep, alpha, beta)?;
    let (value, l) = height_value(rep, alpha, beta, t)?;
    Ok(PairingReport {
        value: ParamScalar::from_rational(&value),
        stratum: (0..t.len()).filter(|&i| !Field::is_zero(&t[i])).collect(),
        alpha: alpha.clone(),
        beta: beta.clone(),
        l_t: l.iter().map(ParamScalar::from_rational).collect(),
    })
}

/// Asymptotic height pairing as a rational function on the stratum where
/// exactly the variables in `stratum` are positive.
pub fn height_pairing_symbolic(
    rep: &MonodromyRep,
    alpha: &Cochain<Rational>,
    beta: &Cochain<Rational>,
    stratum: &[usize],
) -> Result<PairingReport> {
    if stratum.iter().any(|&j| j >= rep.r()) {
        return Err(Error::Validation("stratum index out of range".into()));
    }
    validated(rep, alpha, beta)?;
    let t = symbolic_point(rep.r(), stratum);
    let (value, l_t) = height_value(rep, alpha, beta, &t)?;
    let mut stratum = stratum.to_vec();
    stratum.sort_unstable();
    stratum.dedup();
    Ok(PairingReport { value, stratum, alpha: alpha.clone(), beta: beta.clone(), l_t })
}

/// `a_Q` applied componentwise: `x ↦ Q(x, ·) = Qᵀx`.
pub fn apply_polarization(q: &MatrixQ, x: &Cochain<Rational>) -> Cochain<Rational> {
    let qt = q.transpose();
    let mut out = x.clone();
    for pos in 0..x.as_slice().len() / x.rank().max(1) {
        let v = qt.mul_vec(x.component(pos));
        out.component_mut(pos).clone_from_slice(&v);
    }
    out
}

/// `N_iᵀ Q + Q N_i = 0` for all `i`.
pub fn is_infinitesimal_isometry(rep: &MonodromyRep, q: &MatrixQ) -> bool {
    rep.logs().iter().all(|n| n.transpose().mul(q).plus(&q.mul(n)).is_zero())
}

/// Size, nondegeneracy and invariance of a polarization.
pub fn check_polarization(rep: &MonodromyRep, q: &MatrixQ) -> Result<()> {
    if q.rows() != rep.rank() || q.cols() != rep.rank() {
        return Err(Error::DimensionMismatch("polarization has the wrong size".into()));
    }
    if q.rank() != rep.rank() {
        return Err(Error::Validation("polarization is degenerate".into()));
    }
    if !is_infinitesimal_isometry(rep, q) {
        return Err(Error::Validation("monodromy does not preserve the polarization".into()));
    }
    Ok(())
}

/// `h_Q(t)(α, β) = h(t)(a_Q α, β)`, both arguments classes of `𝓗`.
pub fn h_q(rep: &MonodromyRep, alpha: &Cochain<Rational>, beta: &Cochain<Rational>, t: &[Rational], q: &MatrixQ) -> Result<PairingReport> {
    check_polarization(rep, q)?;
    height_pairing(&rep.dual(), &apply_polarization(q, alpha), beta, t)
}

pub fn h_q_symbolic(
    rep: &MonodromyRep,
    alpha: &Cochain<Rational>,
    beta: &Cochain<Rational>,
    stratum: &[usize],
    q: &MatrixQ,
) -> Result<PairingReport> {
    check_polarization(rep, q)?;
    height_pairing_symbolic(&rep.dual(), &apply_polarization(q, alpha), beta, stratum)
}

/// Matrix of `δ_t : K^p → K^{p−1}`.
pub fn delta_matrix(rep: &MonodromyRep, p: usize, t: &[Rational]) -> MatrixQ {
    let (r, n) = (rep.r(), rep.rank());
    let src = n * crate::koszul::binomial(r, p);
    let dst = if p == 0 { n } else { n * crate::koszul::binomial(r, p - 1) };
    let cols: Vec<Vec<Rational>> = (0..src)
        .map(|k| {
            let mut e = vec![Rational::from_integer(0.into()); src];
            e[k] = Rational::from_integer(1.into());
            delta_t(&Cochain::from_vec(p, r, n, e).expect("basis cochain"), t).into_vec()
        })
        .collect();
    MatrixQ::from_rows(dst, cols).transpose()
}

/// Block-diagonal `N(t)` on `K^p`.
pub fn laplace_matrix(rep: &MonodromyRep, p: usize, t: &[Rational]) -> MatrixQ {
    let n = rep.rank();
    let blocks = crate::koszul::binomial(rep.r(), p);
    let nt = rep.n_of_t(t);
    let mut m = MatrixQ::zeros(n * blocks, n * blocks);
    for b in 0..blocks {
        for i in 0..n {
            for j in 0..n {
                m[(b * n + i, b * n + j)] = nt[(i, j)].clone();
            }
        }
    }
    m
}

/// `L^p_t = ker δ_t ∩ ker d` inside `B^p`.
pub fn lt_space(c: &Complexes, p: usize, t: &[Rational]) -> Subspace {
    let kd = Subspace::kernel_of(&delta_matrix(c.rep(), p, t));
    c.cocycles(Which::B, p).intersection(&kd)
}

/// `R^p_t = ker d ∩ ker Δ_t` inside `B^p`.
pub fn rt_space(c: &Complexes, p: usize, t: &[Rational]) -> Subspace {
    let kl = Subspace::kernel_of(&laplace_matrix(c.rep(), p, t));
    c.cocycles(Which::B, p).intersection(&kl)
}

/// Whether `L^p_t → IH^p` is onto.
pub fn lt_surjects(c: &Complexes, p: usize, t: &[Rational]) -> bool {
    lt_space(c, p, t).sum(&c.coboundaries(Which::B, p)) == c.cocycles(Which::B, p)
}

/// `Q_t(α, β) = Σ_I t_I Q(u_I, β_I)` with `N_I u_I = α_I`.
pub fn polarized_q_t(rep: &MonodromyRep, q: &MatrixQ, alpha: &[Rational], beta: &[Rational], p: usize, t: &[Rational]) -> Result<Rational> {
    let (r, n) = (rep.r(), rep.rank());
    let a = Cochain::from_vec(p, r, n, alpha.to_vec())?;
    let b = Cochain::from_vec(p, r, n, beta.to_vec())?;
    let mut acc = Rational::from_integer(0.into());
    for (pos, j) in multi_indices(r, p).iter().enumerate() {
        let tj = t_multi(t, j);
        if Field::is_zero(&tj) {
            continue;
        }
        let u = ImageSolver::new(&rep.n_multi(j)).solve(a.component(pos)).ok_or(Error::NotInImage)?;
        acc += tj * dot(&u, &q.mul_vec(b.component(pos)));
    }
    Ok(acc)
}

/// Gram matrix of the graded polarization on `Gr^W_{p+k} IH^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbarReport {
    pub gram: MatrixQ,
    /// Representatives in `R^p_t` of the basis used.
    pub representatives: Vec<Vec<Rational>>,
    pub positive_definite: bool,
    pub positive_semidefinite: bool,
}

pub fn graded_qbar(rep: &MonodromyRep, p: usize, t: &[Rational], q: &MatrixQ) -> Result<QbarReport> {
    let k = rep.weight().ok_or_else(|| Error::Validation("representation carries no weight".into()))?;
    if t.iter().any(|x| x <= &Rational::from_integer(0.into())) {
        return Err(Error::Validation("graded polarization needs t in the open cone".into()));
    }
    check_polarization(rep, q)?;
    let c = build_complexes(rep);
    let r_space = rt_space(&c, p, t);
    let w_h = monodromy_weight_filtration(&rep.n_of_t(t), k)?;
    let w = induced_weight_on_koszul(&w_h, 2, p, rep.r());
    let top = p as i64 + k;
    let low = w.get(top - 1).intersection(&c.cocycles(Which::B, p)).sum(&c.coboundaries(Which::B, p));
    let kernel = r_space.intersection(&low);
    // Representatives Q_t-orthogonal to the kernel.
    let rb = r_space.basis();
    let kb = kernel.basis();
    let mut funcs = MatrixQ::zeros(kb.len(), rb.len());
    for (i, kv) in kb.iter().enumerate() {
        for (j, rv) in rb.iter().enumerate() {
            funcs[(i, j)] = polarized_q_t(rep, q, rv, kv, p, t)?;
        }
    }
    let perp: Vec<Vec<Rational>> = funcs
        .kernel()
        .iter()
        .map(|c| {
            let mut v = vec![Rational::from_integer(0.into()); c_len(&rb)];
            for (ci, b) in c.iter().zip(&rb) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += ci * bi;
                }
            }
            v
        })
        .collect();
    let ambient = c.dim_k(p);
    let perp = Subspace::from_vectors(ambient, perp);
    if perp.sum(&kernel) != r_space {
        return Err(Error::NotAdmissible("no representatives orthogonal to the kernel".into()));
    }
    let reps = perp.intersection(&kernel).complement_in(&perp);
    let mut gram = MatrixQ::zeros(reps.len(), reps.len());
    for a in 0..reps.len() {
        for b in 0..reps.len() {
            gram[(a, b)] = polarized_q_t(rep, q, &reps[a], &reps[b], p, t)?;
        }
    }
    Ok(QbarReport {
        positive_definite: is_positive_definite(&gram),
        positive_semidefinite: is_positive_semidefinite(&gram),
        gram,
        representatives: reps,
    })
}

fn c_len(rb: &[Vec<Rational>]) -> usize {
    rb.first().map_or(0, Vec::len)
}

/// All leading principal minors positive, via fraction-free pivots.
pub fn is_positive_definite(g: &MatrixQ) -> bool {
    if g != &g.transpose() {
        return false;
    }
    let n = g.rows();
    let mut a = g.clone();
    let zero = Rational::from_integer(0.into());
    for k in 0..n {
        if a[(k, k)] <= zero {
            return false;
        }
        for i in k + 1..n {
            let f = &a[(i, k)] / &a[(k, k)];
            for j in k..n {
                let s = &f * &a[(k, j)];
                a[(i, j)] -= s;
            }
        }
    }
    true
}

/// Exact semidefiniteness by symmetric elimination: a zero pivot must have a
/// zero row.
pub fn is_positive_semidefinite(g: &MatrixQ) -> bool {
    if g != &g.transpose() {
        return false;
    }
    let n = g.rows();
    let mut a = g.clone();
    let zero = Rational::from_integer(0.into());
    for k in 0..n {
        if a[(k, k)] < zero {
            return false;
        }
        if a[(k, k)] == zero {
            if (k..n).any(|j| a[(k, j)] != zero) {
                return false;
            }
            continue;
        }
        for i in k + 1..n {
            let f = &a[(i, k)] / &a[(k, k)];
            for j in k..n {
                let s = &f * &a[(k, j)];
                a[(i, j)] -= s;
            }
        }
    }
    true
}

/// Matrix of `h(t)(α_a, β_b)` for families of cocycles, sharing one solve of
/// `N(t) l = α_a(t)` per row.
pub fn height_gram(rep: &MonodromyRep, lefts: &[Cochain<Rational>], rights: &[Cochain<Rational>], t: &[Rational]) -> Result<MatrixQ> {
    let s = DegreeSolvers::new(rep, 1);
    for b in rights {
        for i in 0..rep.r() {
            if !s.transposed[i].contains(b.component(i)) {
                return Err(Error::NotInImage);
            }
        }
    }
    let mut g = MatrixQ::zeros(lefts.len(), rights.len());
    for (ai, a) in lefts.iter().enumerate() {
        let alpha_t = delta_t(a, t).into_vec();
        let l = rep
            .solve_n_of_t(t, &alpha_t)
            .ok_or_else(|| Error::NotAdmissible("α(t) is not in the image of N(t)".into()))?;
        let mut pre = Vec::with_capacity(rep.r());
        for i in 0..rep.r() {
            let nl = rep.logs()[i].mul_vec(&l);
            let x: Vec<Rational> = a.component(i).iter().zip(&nl).map(|(p, q)| p - q).collect();
            pre.push(s.direct[i].solve(&x).ok_or(Error::NotInImage)?);
        }
        for (bi, b) in rights.iter().enumerate() {
            g[(ai, bi)] = (0..rep.r()).fold(Rational::from_integer(0.into()), |acc, i| acc + &t[i] * dot(&pre[i], b.component(i)));
        }
    }
    Ok(g)
}

/// `(positive, negative, zero)` counts of a symmetric matrix, by congruence
/// diagonalization.
pub fn inertia(g: &MatrixQ) -> (usize, usize, usize) {
    let n = g.rows();
    let mut a = g.clone();
    let zero = Rational::from_integer(0.into());
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if a[(k, k)] == zero {
            let Some(j) = (k + 1..n).find(|&j| a[(j, j)] != zero).or_else(|| (k + 1..n).find(|&j| a[(k, j)] != zero)) else {
                k += 1;
                continue;
            };
            if a[(j, j)] != zero {
                for c in 0..n {
                    let tmp = a[(k, c)].clone();
                    a[(k, c)] = a[(j, c)].clone();
                    a[(j, c)] = tmp;
                }
                for r in 0..n {
                    let tmp = a[(r, k)].clone();
                    a[(r, k)] = a[(r, j)].clone();
                    a[(r, j)] = tmp;
                }
            } else {
                for c in 0..n {
                    let v = a[(j, c)].clone();
                    a[(k, c)] += v;
                }
                for r in 0..n {
                    let v = a[(r, j)].clone();
                    a[(r, k)] += v;
                }
            }
        }
        let p = a[(k, k)].clone();
        if p > zero {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = &a[(i, k)] / &p;
            if f == zero {
                continue;
            }
            for j in k..n {
                let s = &f * &a[(k, j)];
                a[(i, j)] -= s;
            }
            for r in k..n {
                let s = &f * &a[(r, k)];
                a[(r, i)] -= s;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

/// Gram matrix of `h_Q(t)` on the basis of `IH¹` given by the transversal
/// of its cohomology presentation.
pub fn h_q_gram(rep: &MonodromyRep, t: &[Rational], q: &MatrixQ) -> Result<MatrixQ> {
    check_polarization(rep, q)?;
    let c = build_complexes(rep);
    let ih = c.cohomology(Which::B, 1);
    let (r, n) = (rep.r(), rep.rank());
    let basis: Vec<Cochain<Rational>> =
        ih.transversal.iter().map(|v| Cochain::from_vec(1, r, n, v.clone())).collect::<Result<_>>()?;
    let lefts: Vec<Cochain<Rational>> = basis.iter().map(|x| apply_polarization(q, x)).collect();
    height_gram(&rep.dual(), &lefts, &basis, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational_frac, rational_int};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational_int(x)).collect()
    }

    fn jordan(r: usize) -> MonodromyRep {
        MonodromyRep::new(2, vec![MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]); r]).unwrap().with_weight(-1)
    }

    /// α_i = a_i v on 𝓗, β_i = b_i u* on 𝓗*.
    fn jordan_classes(a: &[i64], b: &[i64]) -> (Cochain<Rational>, Cochain<Rational>) {
        let alpha = Cochain::from_components(1, a.len(), a.iter().map(|&x| q(&[0, x])).collect()).unwrap();
        let beta = Cochain::from_components(1, b.len(), b.iter().map(|&x| q(&[x, 0])).collect()).unwrap();
        (alpha, beta)
    }

    fn symplectic() -> MatrixQ {
        MatrixQ::from_i64(2, 2, &[0, 1, -1, 0])
    }

    #[test]
    fn pair_t_examples() {
        let n = MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]);
        assert_eq!(pair_t(&q(&[0, 1]), &q(&[1, 0]), &n).unwrap(), rational_int(1));
        assert_eq!(pair_t(&q(&[0, 0]), &q(&[1, 0]), &n).unwrap(), rational_int(0));
        assert_eq!(pair_t(&q(&[2, 3]), &q(&[5, 7]), &MatrixQ::identity(2)).unwrap(), rational_int(31));
        assert_eq!(pair_t(&q(&[1, 0]), &q(&[1, 0]), &n), Err(Error::NotInImage));
        assert_eq!(pair_t(&q(&[0, 1]), &q(&[0, 1]), &n), Err(Error::NotInImage));
    }

    #[test]
    fn q_t_examples() {
        let rep = jordan(1);
        let (alpha, beta) = jordan_classes(&[1], &[1]);
        assert_eq!(q_t(&rep, &alpha, &beta, &q(&[7])).unwrap(), rational_int(7));
        let zero = Cochain::zero(1, 1, 2);
        assert_eq!(q_t(&rep, &zero, &beta, &q(&[7])).unwrap(), rational_int(0));
    }

    #[test]
    fn jordan_height_values() {
        let rep = jordan(2);
        let (alpha, beta) = jordan_classes(&[0, 1], &[0, 1]);
        let h = height_pairing(&rep, &alpha, &beta, &q(&[1, 1])).unwrap();
        assert_eq!(h.value.as_rational().unwrap(), rational_frac(1, 2));
        assert_eq!(h.l_t[0].as_rational().unwrap(), rational_frac(1, 2));
        let h0 = height_pairing(&rep, &alpha, &beta, &q(&[0, 0])).unwrap();
        assert!(h0.value.is_zero());
        let s = height_pairing_symbolic(&rep, &alpha, &beta, &[0, 1]).unwrap();
        assert_eq!(s.value.to_string(), "(t1*t2)/(t1+t2)");
    }

    #[test]
    fn coboundaries_pair_to_zero() {
        let rep = jordan(3);
        let c = build_complexes(&rep);
        let dl = c.d(0).mul_vec(&q(&[1, 0]));
        let alpha = Cochain::from_vec(1, 3, 2, dl).unwrap();
        let (_, beta) = jordan_classes(&[0, 0, 0], &[1, -2, 3]);
        let h = height_pairing_symbolic(&rep, &alpha, &beta, &[0, 1, 2]).unwrap();
        assert!(h.value.is_zero());
    }

    #[test]
    fn h_q_examples() {
        let rep = jordan(2);
        let (alpha, _) = jordan_classes(&[1, 3], &[0, 0]);
        let h = h_q_symbolic(&rep, &alpha, &alpha, &[0, 1], &symplectic()).unwrap();
        assert_eq!(h.value.to_string(), "(4*t1*t2)/(t1+t2)");
        let zero = Cochain::zero(1, 2, 2);
        assert!(h_q(&rep, &alpha, &zero, &q(&[1, 2]), &symplectic()).unwrap().value.is_zero());
    }

    #[test]
    fn spaces_for_jordan() {
        let c = build_complexes(&jordan(2));
        let t = q(&[1, 1]);
        assert_eq!(lt_space(&c, 1, &t).dim(), 1);
        assert!(lt_surjects(&c, 1, &t));
        assert!(rt_space(&c, 1, &t).contains_subspace(&lt_space(&c, 1, &t)));
        let zero = MonodromyRep::new(2, vec![MatrixQ::zeros(2, 2); 2]).unwrap();
        let cz = build_complexes(&zero);
        assert!(lt_space(&cz, 1, &t).is_zero() && rt_space(&cz, 1, &t).is_zero());
    }

    #[test]
    fn graded_qbar_for_jordan() {
        for r in 2..=4 {
            let rep = jordan(r);
            let t: Vec<Rational> = (1..=r as i64).map(rational_int).collect();
            let rep_q = graded_qbar(&rep, 1, &t, &symplectic()).unwrap();
            assert_eq!(rep_q.gram.rows(), r - 1);
            assert!(rep_q.positive_definite);
        }
        let gram = h_q_gram(&jordan(3), &q(&[1, 2, 3]), &symplectic()).unwrap();
        assert_eq!(gram.rows(), 2);
        assert!(is_positive_definite(&gram));
        let zero = MonodromyRep::new(2, vec![MatrixQ::zeros(2, 2); 2]).unwrap().with_weight(-1);
        let g = graded_qbar(&zero, 1, &q(&[1, 1]), &symplectic()).unwrap();
        assert_eq!(g.gram.rows(), 0);
    }

    #[test]
    fn definiteness_tests() {
        assert!(is_positive_definite(&MatrixQ::from_i64(2, 2, &[2, 1, 1, 2])));
        assert!(!is_positive_definite(&MatrixQ::from_i64(2, 2, &[1, 2, 2, 1])));
        assert!(is_positive_semidefinite(&MatrixQ::from_i64(2, 2, &[1, 1, 1, 1])));
        assert!(!is_positive_semidefinite(&MatrixQ::from_i64(2, 2, &[0, 1, 1, 0])));
        assert!(is_positive_semidefinite(&MatrixQ::zeros(0, 0)));
        assert_eq!(inertia(&MatrixQ::from_i64(2, 2, &[0, 1, 1, 0])), (1, 1, 0));
        assert_eq!(inertia(&MatrixQ::from_i64(3, 3, &[1, 1, 0, 1, 1, 0, 0, 0, 0])), (1, 0, 2));
        assert_eq!(inertia(&MatrixQ::from_i64(2, 2, &[-3, 1, 1, 2])), (1, 1, 0));
    }

    mod properties {
        use super::*;
        use crate::families::{random_commuting_rep, random_element, random_positive};
        use crate::koszul::apply_d;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        fn cochain(p: usize, rep: &MonodromyRep, v: Vec<Rational>) -> Cochain<Rational> {
            Cochain::from_vec(p, rep.r(), rep.rank(), v).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            #[test]
            fn pairing_identities(seed in any::<u64>(), n in 1usize..=4, r in 1usize..=3) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let rep = random_commuting_rep(&mut rng, n, r);
                let dual = rep.dual();
                let (cb, cd) = (build_complexes(&rep), build_complexes(&dual));
                let t: Vec<Rational> = (0..r).map(|_| random_positive(&mut rng)).collect();
                let ts = symbolic_point(r, &(0..r).collect::<Vec<_>>());
                for p in 1..=r {
                    let a = cochain(p - 1, &rep, random_element(&mut rng, &cb.b(p - 1).basis(), cb.dim_k(p - 1)));
                    let b = cochain(p, &rep, random_element(&mut rng, &cd.b(p).basis(), cd.dim_k(p)));
                    let (a, b): (Cochain<ParamScalar>, Cochain<ParamScalar>) = (a.lift(), b.lift());
                    let lhs = q_t(&rep, &apply_d(&rep, &a), &b, &ts).unwrap();
                    let rhs = q_t(&rep, &a, &delta_t(&b, &ts), &ts).unwrap();
                    prop_assert_eq!(lhs, rhs);
                    let a2 = cochain(p, &rep, random_element(&mut rng, &cb.b(p).basis(), cb.dim_k(p)));
                    let b2 = cochain(p - 1, &rep, random_element(&mut rng, &cd.b(p - 1).basis(), cd.dim_k(p - 1)));
                    let (a2, b2): (Cochain<ParamScalar>, Cochain<ParamScalar>) = (a2.lift(), b2.lift());
                    let lhs = q_t(&rep, &delta_t(&a2, &ts), &b2, &ts).unwrap();
                    let adjoint = MonodromyRep::new(n, rep.logs().iter().map(MatrixQ::transpose).collect()).unwrap();
                    let rhs = q_t(&rep, &a2, &apply_d(&adjoint, &b2), &ts).unwrap();
                    prop_assert_eq!(lhs, rhs);
                    let b3: Cochain<ParamScalar> =
                        cochain(p, &rep, random_element(&mut rng, &cd.b(p).basis(), cd.dim_k(p))).lift();
                    let sign = if p % 2 == 0 { ParamScalar::one() } else { ParamScalar::one().negated() };
                    prop_assert_eq!(q_t(&rep, &a2, &b3, &ts).unwrap(), sign.times(&q_t(&dual, &b3, &a2, &ts).unwrap()));
                    let g = q_t_gram(&rep, p, &t).unwrap();
                    prop_assert_eq!(g.rows(), g.cols());
                    prop_assert_eq!(g.rank(), g.rows());
                }
            }

            #[test]
            fn height_invariances(seed in any::<u64>(), n in 1usize..=4, r in 1usize..=3, c in 0i64..5) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let rep = random_commuting_rep(&mut rng, n, r);
                let dual = rep.dual();
                let (cb, cd) = (build_complexes(&rep), build_complexes(&dual));
                let za = cb.cocycles(Which::B, 1).basis();
                let zb = cd.cocycles(Which::B, 1).basis();
                let alpha = cochain(1, &rep, random_element(&mut rng, &za, cb.dim_k(1)));
                let beta = cochain(1, &rep, random_element(&mut rng, &zb, cd.dim_k(1)));
                let t: Vec<Rational> = (0..r).map(|_| random_positive(&mut rng)).collect();
                let h = height_pairing(&rep, &alpha, &beta, &t).unwrap().value;
                let ct: Vec<Rational> = t.iter().map(|x| x * rational_int(c)).collect();
                let hc = height_pairing(&rep, &alpha, &beta, &ct).unwrap().value;
                prop_assert_eq!(hc, h.scale_rational(&rational_int(c)));
                let l0 = random_element(&mut rng, &cb.b(0).basis(), n);
                let m0 = random_element(&mut rng, &cd.b(0).basis(), n);
                let a2 = alpha.plus(&apply_d(&rep, &cochain(0, &rep, l0)));
                let b2 = beta.plus(&apply_d(&dual, &cochain(0, &rep, m0)));
                prop_assert_eq!(height_pairing(&rep, &a2, &b2, &t).unwrap().value, h.clone());
                let (_, l) = height_value(&rep, &alpha, &beta, &t).unwrap();
                let ker = rep.n_of_t(&t).kernel();
                let l2 = random_element(&mut rng, &ker, n).iter().zip(&l).map(|(a, b)| a + b).collect::<Vec<_>>();
                let v = height_from_l(&rep, &alpha, &beta, &t, &l2).unwrap();
                prop_assert_eq!(ParamScalar::from_rational(&v), h);
            }
        }
    }
}
