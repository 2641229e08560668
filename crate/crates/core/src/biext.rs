//! Mixed extensions of `ℤ` by a local system by `ℤ(1)`, in weight-split block
//! form, with the biextension operations, `τ̃`, the torsion pairing and the
//! height-jump coefficient `μ`.
//!
//! Block matrices act on `(e₀, H, e₋₂)`:
//!
//! ```text
//! Ñ_i = [ 0    0    0 ]
//!       [ α_i  N_i  0 ]
//!       [ γ_i  −β_i 0 ]
//! ```

use std::fmt;

use crate::exact::{frac_part, smith_normal_form, Field, ImageSolver, MatrixQ, ParamScalar, Rational, Subspace};
use crate::heights::height_value;
use crate::koszul::{symbolic_point, Cochain, MonodromyRep};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integer,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedExtension {
    rep: MonodromyRep,
    alpha: Vec<Vec<Rational>>,
    beta: Vec<Vec<Rational>>,
    gamma: Vec<Rational>,
    ring: Ring,
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| acc.plus(&x.times(y)))
}

/// Glues the blocks after checking that the assembled `Ñ_i` commute.
pub fn make_mixed_extension(
    rep: &MonodromyRep,
    alpha: &Cochain<Rational>,
    beta: &Cochain<Rational>,
    gamma: &[Rational],
    ring: Ring,
) -> Result<MixedExtension> {
    let (r, n) = (rep.r(), rep.rank());
    for (name, c) in [("α", alpha), ("β", beta)] {
        if c.degree() != 1 || c.r() != r || c.rank() != n {
            return Err(Error::DimensionMismatch(format!("{name} must be a degree-1 cochain with r={r}, n={n}")));
        }
    }
    if gamma.len() != r {
        return Err(Error::DimensionMismatch(format!("γ must have {r} entries")));
    }
    let alpha: Vec<Vec<Rational>> = (0..r).map(|i| alpha.component(i).to_vec()).collect();
    let beta: Vec<Vec<Rational>> = (0..r).map(|i| beta.component(i).to_vec()).collect();
    let logs = rep.logs();
    for i in 0..r {
        for j in i + 1..r {
            if logs[i].mul_vec(&alpha[j]) != logs[j].mul_vec(&alpha[i]) {
                return Err(Error::Validation(format!("α fails the cocycle condition at ({}, {})", i + 1, j + 1)));
            }
            let (ti, tj) = (logs[i].transpose(), logs[j].transpose());
            if ti.mul_vec(&beta[j]) != tj.mul_vec(&beta[i]) {
                return Err(Error::Validation(format!("β fails the cocycle condition at ({}, {})", i + 1, j + 1)));
            }
            if dot(&beta[i], &alpha[j]) != dot(&beta[j], &alpha[i]) {
                return Err(Error::NotGluable(i, j));
            }
        }
    }
    let x = MixedExtension { rep: rep.clone(), alpha, beta, gamma: gamma.to_vec(), ring };
    let blocks = x.logs();
    for i in 0..r {
        for j in i + 1..r {
            if !blocks[i].commutator(&blocks[j]).is_zero() {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    if ring == Ring::Integer {
        if let Some(i) = x.unipotents().iter().position(|t| !t.is_integral()) {
            return Err(Error::Validation(format!("exp(Ñ{}) is not integral", i + 1)));
        }
    }
    Ok(x)
}

impl MixedExtension {
    pub fn rep(&self) -> &MonodromyRep {
        &self.rep
    }

    pub fn r(&self) -> usize {
        self.rep.r()
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn alpha(&self) -> Cochain<Rational> {
        Cochain::from_components(1, self.r(), self.alpha.clone()).expect("stored blocks have the right shape")
    }

    pub fn beta(&self) -> Cochain<Rational> {
        Cochain::from_components(1, self.r(), self.beta.clone()).expect("stored blocks have the right shape")
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    /// Split extension over `rep`.
    pub fn split(rep: &MonodromyRep, ring: Ring) -> MixedExtension {
        let (r, n) = (rep.r(), rep.rank());
        MixedExtension {
            rep: rep.clone(),
            alpha: vec![vec![zero(); n]; r],
            beta: vec![vec![zero(); n]; r],
            gamma: vec![zero(); r],
            ring,
        }
    }

    pub fn is_split(&self) -> bool {
        self.alpha.iter().chain(&self.beta).flatten().all(Field::is_zero) && self.gamma.iter().all(Field::is_zero)
    }

    fn block(&self, i: usize) -> MatrixQ {
        let n = self.rank();
        let nl = &self.rep.logs()[i];
        MatrixQ::from_fn(n + 2, n + 2, |a, b| match (a, b) {
            (a, 0) if (1..=n).contains(&a) => self.alpha[i][a - 1].clone(),
            (a, b) if (1..=n).contains(&a) && (1..=n).contains(&b) => nl[(a - 1, b - 1)].clone(),
            (a, 0) if a == n + 1 => self.gamma[i].clone(),
            (a, b) if a == n + 1 && (1..=n).contains(&b) => -self.beta[i][b - 1].clone(),
            _ => zero(),
        })
    }

    /// The block logarithms `Ñ_i`.
    pub fn logs(&self) -> Vec<MatrixQ> {
        (0..self.r()).map(|i| self.block(i)).collect()
    }

    /// `T̃_i = exp(Ñ_i)`.
    pub fn unipotents(&self) -> Vec<MatrixQ> {
        self.logs().iter().map(MatrixQ::exp_nilpotent).collect()
    }

    fn rebuild(&self, alpha: Vec<Vec<Rational>>, beta: Vec<Vec<Rational>>, gamma: Vec<Rational>) -> Result<MixedExtension> {
        let r = self.r();
        make_mixed_extension(
            &self.rep,
            &Cochain::from_components(1, r, alpha)?,
            &Cochain::from_components(1, r, beta)?,
            &gamma,
            self.ring,
        )
    }

    /// Conjugate by `g = [[1,0,0],[x,I,0],[0,λ,1]]`, an isomorphism of
    /// mixed extensions inducing the identity on the graded pieces.
    pub fn conjugate(&self, x: &[Rational], lambda: &[Rational]) -> MixedExtension {
        let n = self.rank();
        let g = MatrixQ::from_fn(n + 2, n + 2, |a, b| {
            if a == b {
                Rational::from_integer(1.into())
            } else if b == 0 && (1..=n).contains(&a) {
                x[a - 1].clone()
            } else if a == n + 1 && (1..=n).contains(&b) {
                lambda[b - 1].clone()
            } else {
                zero()
            }
        });
        let gi = g.log_unipotent().negated().exp_nilpotent();
        let mut out = self.clone();
        for (i, blk) in self.logs().iter().enumerate() {
            let c = g.mul(blk).mul(&gi);
            out.alpha[i] = (1..=n).map(|a| c[(a, 0)].clone()).collect();
            out.beta[i] = (1..=n).map(|b| -c[(n + 1, b)].clone()).collect();
            out.gamma[i] = c[(n + 1, 0)].clone();
            debug_assert_eq!(c.submatrix(&(1..=n).collect::<Vec<_>>(), &(1..=n).collect::<Vec<_>>()), self.rep.logs()[i]);
        }
        out
    }

    /// Canonical representative of the isomorphism class over ℚ.
    pub fn normal_form(&self) -> MixedExtension {
        let (r, n) = (self.r(), self.rank());
        let zeros = vec![zero(); n];
        let unit = |k: usize| -> Vec<Rational> {
            let mut e = zeros.clone();
            e[k] = Rational::from_integer(1.into());
            e
        };
        let flat = |v: &[Vec<Rational>]| -> Vec<Rational> { v.iter().flatten().cloned().collect() };

        let x = reduce_by_action(&flat(&self.alpha), n, |k| flat(&self.conjugate(&unit(k), &zeros).alpha));
        let step1 = self.conjugate(&x, &zeros);
        let lam = reduce_by_action(&flat(&step1.beta), n, |k| flat(&step1.conjugate(&zeros, &unit(k)).beta));
        let mut out = step1.conjugate(&zeros, &lam);

        // Residual freedom only moves γ.
        let stab_x = Subspace::kernel_of(&stack(self.rep.logs(), n));
        let tlogs: Vec<MatrixQ> = self.rep.logs().iter().map(MatrixQ::transpose).collect();
        let stab_l = Subspace::kernel_of(&stack(&tlogs, n));
        let mut moves = Vec::new();
        for v in stab_x.basis() {
            let c = out.conjugate(&v, &zeros);
            moves.push(c.gamma.iter().zip(&out.gamma).map(|(a, b)| a - b).collect());
        }
        for v in stab_l.basis() {
            let c = out.conjugate(&zeros, &v);
            moves.push(c.gamma.iter().zip(&out.gamma).map(|(a, b)| a - b).collect());
        }
        out.gamma = reduce_mod(&out.gamma, &Subspace::from_vectors(r, moves));
        out
    }

    pub fn is_isomorphic(&self, other: &MixedExtension) -> bool {
        self.rep == other.rep && self.normal_form() == other.normal_form()
    }
}

fn stack(ms: &[MatrixQ], n: usize) -> MatrixQ {
    ms.iter().fold(MatrixQ::zeros(0, n), |acc, m| acc.vstack(m))
}

/// Zeroes the pivot coordinates of `v` using the RREF basis of `s`.
fn reduce_mod(v: &[Rational], s: &Subspace) -> Vec<Rational> {
    let mut out = v.to_vec();
    for (b, &p) in s.basis().iter().zip(s.pivots()) {
        let c = out[p].clone();
        if !Field::is_zero(&c) {
            for (o, x) in out.iter_mut().zip(b) {
                *o -= &c * x;
            }
        }
    }
    out
}

/// Finds `x` with `v + Σ x_k (act(k) − v) = reduce_mod(v, span)`, for an
/// action affine-linear in `x`.
fn reduce_by_action(v: &[Rational], n: usize, act: impl Fn(usize) -> Vec<Rational>) -> Vec<Rational> {
    let cols: Vec<Vec<Rational>> = (0..n).map(|k| act(k).iter().zip(v).map(|(a, b)| a - b).collect()).collect();
    if cols.is_empty() || v.is_empty() {
        return vec![zero(); n];
    }
    let target = reduce_mod(v, &Subspace::from_vectors(v.len(), cols.clone()));
    let d = MatrixQ::from_rows(v.len(), cols).transpose();
    let rhs: Vec<Rational> = target.iter().zip(v).map(|(a, b)| a - b).collect();
    d.solve_gauss(&rhs).expect("reduction lies in the span of the action")
}

fn check_same_rep(x: &MixedExtension, y: &MixedExtension) -> Result<()> {
    if x.rep != y.rep || x.ring != y.ring {
        return Err(Error::BlockMismatch("extensions live over different local systems".into()));
    }
    Ok(())
}

fn add_vecs(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect()).collect()
}

fn add_gamma(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(p, q)| p + q).collect()
}

/// Shift `γ` by `q ∈ ℚ^r` (the action of `Ext(ℤ, ℤ(1))`).
pub fn act_torsor(q: &[Rational], x: &MixedExtension) -> Result<MixedExtension> {
    if q.len() != x.r() {
        return Err(Error::DimensionMismatch(format!("torsor shift needs {} entries", x.r())));
    }
    x.rebuild(x.alpha.clone(), x.beta.clone(), add_gamma(&x.gamma, q))
}

/// First partial group law: extensions sharing `β`.
pub fn add1(x: &MixedExtension, y: &MixedExtension) -> Result<MixedExtension> {
    check_same_rep(x, y)?;
    if x.beta != y.beta {
        return Err(Error::BlockMismatch("+₁ needs equal β blocks".into()));
    }
    x.rebuild(add_vecs(&x.alpha, &y.alpha), x.beta.clone(), add_gamma(&x.gamma, &y.gamma))
}

/// Second partial group law: extensions sharing `α`.
pub fn add2(x: &MixedExtension, y: &MixedExtension) -> Result<MixedExtension> {
    check_same_rep(x, y)?;
    if x.alpha != y.alpha {
        return Err(Error::BlockMismatch("+₂ needs equal α blocks".into()));
    }
    x.rebuild(x.alpha.clone(), add_vecs(&x.beta, &y.beta), add_gamma(&x.gamma, &y.gamma))
}

fn combine_blocks<F: Field>(blocks: &[Vec<Rational>], t: &[F]) -> Vec<F> {
    let n = blocks.first().map_or(0, Vec::len);
    let mut out = vec![F::zero(); n];
    for (b, ti) in blocks.iter().zip(t) {
        if ti.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !Field::is_zero(x) {
                *o = o.plus(&ti.scale_by(x));
            }
        }
    }
    out
}

/// Restriction along `s ↦ (s^{t_1}, …, s^{t_r})`: one variable with
/// `Ñ(t) = Σ t_i Ñ_i`, i.e. `T̃(t) = Π T̃_i^{t_i}`.
pub fn pullback_test_curve(x: &MixedExtension, t: &[Rational]) -> Result<MixedExtension> {
    if t.len() != x.r() {
        return Err(Error::DimensionMismatch(format!("t must have {} entries", x.r())));
    }
    if x.ring == Ring::Integer && t.iter().any(|v| !v.is_integer() || v < &zero()) {
        return Err(Error::Validation("integral pullback needs t in ℤ_{≥0}^r".into()));
    }
    let n = x.rank();
    let mut rep = MonodromyRep::new(n, vec![x.rep.n_of_t(t)])?;
    if let Some(k) = x.rep.weight() {
        rep = rep.with_weight(k);
    }
    let one = |v: Vec<Rational>| Cochain::from_components(1, 1, vec![v]);
    let gamma = combine_blocks(&x.gamma.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>(), t);
    make_mixed_extension(&rep, &one(combine_blocks(&x.alpha, t))?, &one(combine_blocks(&x.beta, t))?, &gamma, x.ring)
}

/// `τ̃` of a single unipotent block matrix on `(e₀, H, e₋₂)`: the `e₋₂`
/// coordinate of `(T̃ − 1)e₀` for a lift `e₀` of `1` with
/// `(T̃ − 1)e₀ ∈ W₋₂`.
pub fn tau_tilde_matrix(tt: &MatrixQ) -> Result<Rational> {
    let m = tt.rows();
    if m < 2 || !tt.is_square() {
        return Err(Error::DimensionMismatch("block matrix must be square of size ≥ 2".into()));
    }
    let n = m - 2;
    let one = Rational::from_integer(1.into());
    let top_ok = (0..m).all(|b| tt[(0, b)] == if b == 0 { one.clone() } else { zero() });
    let right_ok = (0..m).all(|a| tt[(a, m - 1)] == if a == m - 1 { one.clone() } else { zero() });
    if !top_ok || !right_ok {
        return Err(Error::Validation("matrix does not preserve the weight filtration".into()));
    }
    let mid: Vec<usize> = (1..=n).collect();
    let t1 = tt.submatrix(&mid, &mid).minus(&MatrixQ::identity(n));
    let alpha: Vec<Rational> = mid.iter().map(|&a| tt[(a, 0)].clone()).collect();
    let beta: Vec<Rational> = mid.iter().map(|&b| tt[(n + 1, b)].clone()).collect();
    let ell = ImageSolver::new(&t1)
        .solve(&alpha)
        .ok_or_else(|| Error::NotRestricted("the quotient by W₋₂ is not rationally trivial".into()))?;
    if !ImageSolver::new(&t1.transpose()).contains(&beta) {
        return Err(Error::NotRestricted("W₋₁ is not rationally trivial".into()));
    }
    Ok(&tt[(n + 1, 0)] - dot(&ell, &beta))
}

/// `τ̃` of a one-variable mixed extension, read off `exp(Ñ)`.
pub fn tau_tilde(x: &MixedExtension) -> Result<Rational> {
    if x.r() != 1 {
        return Err(Error::Validation("τ̃ is defined for one-variable extensions".into()));
    }
    tau_tilde_matrix(&x.unipotents()[0])
}

/// A value of `ℚ/ℤ`, stored as its representative in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionValue(Rational);

impl TorsionValue {
    pub fn new(q: &Rational) -> Self {
        TorsionValue(frac_part(q))
    }

    pub fn representative(&self) -> &Rational {
        &self.0
    }
}

impl std::ops::Add for &TorsionValue {
    type Output = TorsionValue;

    fn add(self, other: &TorsionValue) -> TorsionValue {
        TorsionValue::new(&(&self.0 + &other.0))
    }
}

impl fmt::Display for TorsionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exact::format_rational(&self.0))
    }
}

fn unipotent_minus_one(t: &MatrixQ) -> Result<MatrixQ> {
    if !t.is_square() || !t.is_integral() {
        return Err(Error::Validation("T must be a square integral matrix".into()));
    }
    let a = t.minus(&MatrixQ::identity(t.rows()));
    if !a.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    Ok(a)
}

/// Whether `x ∈ L ∩ A·L_ℚ`, read off the Smith form `UAV = D`.
fn in_rational_image(a: &MatrixQ, x: &[Rational]) -> bool {
    if x.iter().any(|v| !v.is_integer()) {
        return false;
    }
    let s = smith_normal_form(a);
    let rank = s.invariant_factors().len();
    s.u.mul_vec(x)[rank..].iter().all(Field::is_zero)
}

/// Invariant factors `> 1` of `T − 1`: the torsion subgroup of `H¹` is
/// `⊕ ℤ/d_k`.
pub fn torsion_invariants(t: &MatrixQ) -> Result<Vec<num_bigint::BigInt>> {
    let a = unipotent_minus_one(t)?;
    Ok(smith_normal_form(&a).invariant_factors().into_iter().filter(|d| d > &1.into()).collect())
}

/// `τ([α], [β]) = −(ℓ, β) mod ℤ` with `(T − 1)ℓ = α`.
pub fn torsion_pairing(t: &MatrixQ, alpha: &[Rational], beta: &[Rational]) -> Result<TorsionValue> {
    let a = unipotent_minus_one(t)?;
    if alpha.len() != a.rows() || beta.len() != a.rows() {
        return Err(Error::DimensionMismatch("α, β must match the lattice rank".into()));
    }
    if !in_rational_image(&a, alpha) {
        return Err(Error::NotTorsion("α is not in L ∩ (T−1)L_ℚ".into()));
    }
    if !in_rational_image(&a.transpose(), beta) {
        return Err(Error::NotTorsion("β is not in L* ∩ (T*−1)L*_ℚ".into()));
    }
    let ell = a.solve_gauss(alpha).expect("membership checked");
    Ok(TorsionValue::new(&-dot(&ell, beta)))
}

/// `μ(t) = γ(t) + (l(t), β(t))` with `N(t) l(t) = α(t)`, over any field.
pub fn mu_value<F: Field>(x: &MixedExtension, t: &[F]) -> Result<F> {
    let alpha_t: Vec<F> = combine_blocks(&x.alpha, t);
    let beta_t: Vec<F> = combine_blocks(&x.beta, t);
    let l = x
        .rep
        .solve_n_of_t(t, &alpha_t)
        .ok_or_else(|| Error::NotAdmissible("α(t) is not in the image of N(t)".into()))?;
    let gamma_t = t.iter().zip(&x.gamma).fold(F::zero(), |acc, (ti, g)| acc.plus(&ti.scale_by(g)));
    Ok(gamma_t.plus(&dot(&l, &beta_t)))
}

pub fn mu_of_t(x: &MixedExtension, t: &[Rational]) -> Result<Rational> {
    if t.len() != x.r() {
        return Err(Error::DimensionMismatch(format!("t must have {} entries", x.r())));
    }
    mu_value(x, t)
}

/// `μ` as a rational function on the stratum where exactly `stratum` is
/// positive.
pub fn mu_symbolic(x: &MixedExtension, stratum: &[usize]) -> Result<ParamScalar> {
    mu_value(x, &symbolic_point(x.r(), stratum))
}

/// `μ_i = μ(ε_i)`.
pub fn mu_coordinates(x: &MixedExtension) -> Result<Vec<Rational>> {
    (0..x.r())
        .map(|i| {
            let e: Vec<Rational> = (0..x.r()).map(|j| Rational::from_integer(((i == j) as i64).into())).collect();
            mu_value(x, &e)
        })
        .collect()
}

/// Both sides of `h(t) = −μ(t) + Σ t_i μ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpReport<F> {
    pub h: F,
    pub mu: F,
    pub sum_t_mu: F,
    /// The jump of the height along the test curve, `−h(t)`.
    pub jump: F,
    pub holds: bool,
}

fn jump_report<F: Field>(x: &MixedExtension, t: &[F]) -> Result<JumpReport<F>> {
    let (h, _) = height_value(&x.rep, &x.alpha(), &x.beta(), t)?;
    let mu = mu_value(x, t)?;
    let mus = mu_coordinates(x)?;
    let sum_t_mu = t.iter().zip(&mus).fold(F::zero(), |acc, (ti, m)| acc.plus(&ti.scale_by(m)));
    let holds = h == sum_t_mu.minus(&mu);
    Ok(JumpReport { jump: h.negated(), h, mu, sum_t_mu, holds })
}

pub fn jump_identity_check(x: &MixedExtension, t: &[Rational]) -> Result<JumpReport<Rational>> {
    if t.len() != x.r() {
        return Err(Error::DimensionMismatch(format!("t must have {} entries", x.r())));
    }
    jump_report(x, t)
}

pub fn jump_identity_symbolic(x: &MixedExtension, stratum: &[usize]) -> Result<JumpReport<ParamScalar>> {
    jump_report(x, &symbolic_point(x.r(), stratum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational_frac, rational_int};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational_int(x)).collect()
    }

    fn jordan(r: usize) -> MonodromyRep {
        MonodromyRep::new(2, vec![MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]); r]).unwrap()
    }

    fn jordan_ext(a: &[i64], b: &[i64], g: &[i64]) -> MixedExtension {
        let r = a.len();
        let alpha = Cochain::from_components(1, r, a.iter().map(|&x| q(&[0, x])).collect()).unwrap();
        let beta = Cochain::from_components(1, r, b.iter().map(|&x| q(&[x, 0])).collect()).unwrap();
        make_mixed_extension(&jordan(r), &alpha, &beta, &q(g), Ring::Rational).unwrap()
    }

    /// `e₀ = (1, x, 0)` over a grid of small fractions.
    fn brute_tau(tt: &MatrixQ) -> Option<Rational> {
        let n = tt.rows() - 2;
        assert!(n <= 2);
        let grid: Vec<Rational> = (-8..=8).flat_map(|p| (1..=4).map(move |d| rational_frac(p, d))).collect();
        let mut cands = vec![vec![]];
        for _ in 0..n {
            cands = cands.into_iter().flat_map(|c: Vec<Rational>| grid.iter().map(move |g| [c.clone(), vec![g.clone()]].concat())).collect();
        }
        for x in cands {
            let mut e0 = vec![rational_int(1)];
            e0.extend(x);
            e0.push(rational_int(0));
            let y = tt.minus(&MatrixQ::identity(n + 2)).mul_vec(&e0);
            if y[..=n].iter().all(Field::is_zero) {
                return Some(y[n + 1].clone());
            }
        }
        None
    }

    fn spec_matrix(m: i64) -> MatrixQ {
        MatrixQ::from_i64(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 1, 2, 1, 0, m, 1, 0, 1])
    }

    #[test]
    fn tau_tilde_example() {
        let tt = spec_matrix(0);
        assert_eq!(tau_tilde_matrix(&tt).unwrap(), rational_frac(-1, 2));
        assert_eq!(brute_tau(&tt).unwrap(), rational_frac(-1, 2));
        assert_eq!(tau_tilde_matrix(&spec_matrix(3)).unwrap(), rational_frac(5, 2));
        assert_eq!(tau_tilde_matrix(&MatrixQ::identity(4)).unwrap(), rational_int(0));
        let bad = MatrixQ::from_i64(3, 3, &[1, 0, 0, 1, 1, 0, 0, 0, 1]);
        assert!(matches!(tau_tilde_matrix(&bad), Err(Error::NotRestricted(_))));
    }

    #[test]
    fn torsion_examples() {
        let t = MatrixQ::from_i64(2, 2, &[1, 0, 2, 1]);
        assert_eq!(torsion_pairing(&t, &q(&[0, 1]), &q(&[1, 0])).unwrap().to_string(), "1/2");
        assert_eq!(torsion_pairing(&t, &q(&[0, 2]), &q(&[1, 0])).unwrap().to_string(), "0");
        assert!(matches!(torsion_pairing(&t, &q(&[1, 0]), &q(&[1, 0])), Err(Error::NotTorsion(_))));
        assert_eq!(torsion_invariants(&t).unwrap(), vec![2.into()]);
    }

    #[test]
    fn gluing() {
        let split = jordan_ext(&[0, 0], &[0, 0], &[0, 0]);
        assert!(split.is_split());
        assert_eq!(split, MixedExtension::split(&jordan(2), Ring::Rational));
        let x = jordan_ext(&[0, 1], &[0, 1], &[0, 0]);
        let ls = x.logs();
        assert!(ls[0].commutator(&ls[1]).is_zero());
        // (β_1, α_2) ≠ (β_2, α_1) for a non-Jordan pairing.
        let rep = MonodromyRep::new(1, vec![MatrixQ::zeros(1, 1); 2]).unwrap();
        let alpha = Cochain::from_components(1, 2, vec![q(&[1]), q(&[0])]).unwrap();
        let beta = Cochain::from_components(1, 2, vec![q(&[1]), q(&[0])]).unwrap();
        assert!(make_mixed_extension(&rep, &alpha, &beta, &q(&[0, 0]), Ring::Rational).is_ok());
        let beta = Cochain::from_components(1, 2, vec![q(&[0]), q(&[1])]).unwrap();
        assert_eq!(make_mixed_extension(&rep, &alpha, &beta, &q(&[0, 0]), Ring::Rational), Err(Error::NotGluable(0, 1)));
        let rank0 = MonodromyRep::new(0, vec![MatrixQ::zeros(0, 0)]).unwrap();
        let e = Cochain::zero(1, 1, 0);
        assert!(make_mixed_extension(&rank0, &e, &e, &q(&[7]), Ring::Integer).is_ok());
    }

    #[test]
    fn group_laws() {
        let x = jordan_ext(&[0, 1], &[0, 1], &[1, 0]);
        let y = jordan_ext(&[2, 1], &[0, 1], &[0, 3]);
        assert_eq!(add1(&x, &y).unwrap(), jordan_ext(&[2, 2], &[0, 1], &[1, 3]));
        assert!(matches!(add2(&x, &y), Err(Error::BlockMismatch(_))));
        assert_eq!(act_torsor(&q(&[0, 0]), &x).unwrap(), x);
        let (x11, x12) = (jordan_ext(&[1, 0], &[0, 1], &[1, 0]), jordan_ext(&[0, 2], &[0, 1], &[0, 1]));
        let (x21, x22) = (jordan_ext(&[1, 0], &[3, 1], &[2, 0]), jordan_ext(&[0, 2], &[3, 1], &[0, 5]));
        let lhs = add2(&add1(&x11, &x12).unwrap(), &add1(&x21, &x22).unwrap()).unwrap();
        let rhs = add1(&add2(&x11, &x21).unwrap(), &add2(&x12, &x22).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_and_mu() {
        let x = jordan_ext(&[0, 1], &[0, 1], &[0, 0]);
        let p = pullback_test_curve(&x, &q(&[1, 1])).unwrap();
        assert_eq!(p.logs()[0][(2, 0)], rational_int(1));
        assert_eq!(p.rep().logs()[0], MatrixQ::from_i64(2, 2, &[0, 0, 2, 0]));
        let p0 = pullback_test_curve(&x, &q(&[0, 0])).unwrap();
        assert!(p0.unipotents()[0] == MatrixQ::identity(4));
        assert_eq!(pullback_test_curve(&x, &q(&[1, 0])).unwrap().alpha().component(0), x.alpha().component(0));
        assert_eq!(mu_of_t(&x, &q(&[1, 1])).unwrap(), rational_frac(1, 2));
        assert_eq!(tau_tilde(&p).unwrap(), rational_frac(1, 2));
        assert_eq!(mu_symbolic(&x, &[0, 1]).unwrap().to_string(), "(t2^2)/(t1+t2)");
    }

    #[test]
    fn jump_identity_examples() {
        let x = jordan_ext(&[0, 1], &[0, 1], &[0, 0]);
        let j = jump_identity_check(&x, &q(&[1, 1])).unwrap();
        assert_eq!((j.h.clone(), j.mu, j.sum_t_mu), (rational_frac(1, 2), rational_frac(1, 2), rational_int(1)));
        assert!(j.holds);
        assert_eq!(j.jump, rational_frac(-1, 2));
        let s = jump_identity_symbolic(&jordan_ext(&[3, -1, 2], &[1, 0, -2], &[1, 2, 5]), &[0, 1, 2]).unwrap();
        assert!(s.holds);
        let split = MixedExtension::split(&jordan(2), Ring::Rational);
        assert!(jump_identity_check(&split, &q(&[2, 3])).unwrap().holds);
    }

    #[test]
    fn normal_forms() {
        let x = jordan_ext(&[0, 1], &[0, 1], &[1, 4]);
        let y = x.conjugate(&q(&[3, -2]), &q(&[5, 7]));
        assert_ne!(x, y);
        assert!(x.is_isomorphic(&y));
        assert_eq!(tau_tilde(&pullback_test_curve(&y, &q(&[2, 1])).unwrap()).unwrap(), tau_tilde(&pullback_test_curve(&x, &q(&[2, 1])).unwrap()).unwrap());
        let z = act_torsor(&q(&[1, 0]), &x).unwrap();
        assert!(!x.is_isomorphic(&z));
    }
}
