//! Increasing filtrations of ℚⁿ: monodromy weight filtrations, relative
//! weight filtrations and the filtrations induced on Koszul cochains.

use std::collections::BTreeMap;

use crate::exact::{Field, MatrixQ, Rational, Subspace};
use crate::{Error, Result};

/// Increasing exhaustive filtration `W_k` of ℚⁿ, stored between its lowest
/// nonzero step and its first full step.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Filtration {
    ambient: usize,
    lowest: i64,
    steps: Vec<Subspace>,
}

impl Filtration {
    /// `steps[i]` is `W_{lowest + i}`; the last step must be the whole space.
    pub fn new(ambient: usize, lowest: i64, steps: Vec<Subspace>) -> Result<Self> {
        let map = steps.into_iter().enumerate().map(|(i, s)| (lowest + i as i64, s)).collect();
        Self::from_map(ambient, map)
    }

    /// Builds a filtration from its values at some indices; missing indices
    /// take the value at the nearest defined index below.
    pub fn from_map(ambient: usize, map: BTreeMap<i64, Subspace>) -> Result<Self> {
        let mut prev: Option<&Subspace> = None;
        for (k, s) in &map {
            if s.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch(format!("step {k} lives in the wrong space")));
            }
            if let Some(p) = prev {
                if !s.contains_subspace(p) {
                    return Err(Error::Validation(format!("filtration is not increasing at {k}")));
                }
            }
            prev = Some(s);
        }
        if ambient == 0 {
            return Ok(Filtration { ambient, lowest: 0, steps: Vec::new() });
        }
        if !map.values().last().is_some_and(Subspace::is_full) {
            return Err(Error::Validation("filtration is not exhaustive".into()));
        }
        let lowest = *map.iter().find(|(_, s)| !s.is_zero()).expect("nonzero step").0;
        let highest = *map.iter().find(|(_, s)| s.is_full()).expect("full step").0;
        let steps = (lowest..=highest)
            .map(|k| map.range(..=k).next_back().expect("defined below").1.clone())
            .collect();
        Ok(Filtration { ambient, lowest, steps })
    }

    /// `W_{k-1} = 0`, `W_k = ℚⁿ`.
    pub fn trivial(ambient: usize, k: i64) -> Self {
        let steps = if ambient == 0 { Vec::new() } else { vec![Subspace::full(ambient)] };
        Filtration { ambient, lowest: if ambient == 0 { 0 } else { k }, steps }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn highest(&self) -> i64 {
        self.lowest + self.steps.len() as i64 - 1
    }

    pub fn get(&self, k: i64) -> Subspace {
        if self.steps.is_empty() || k > self.highest() {
            Subspace::full(self.ambient)
        } else if k < self.lowest {
            Subspace::zero(self.ambient)
        } else {
            self.steps[(k - self.lowest) as usize].clone()
        }
    }

    pub fn graded_dim(&self, k: i64) -> usize {
        self.get(k).dim() - self.get(k - 1).dim()
    }

    /// Indices with nonzero graded piece, increasing.
    pub fn jumps(&self) -> Vec<i64> {
        (self.lowest..=self.highest()).filter(|&k| self.graded_dim(k) > 0).collect()
    }

    /// `(k, dim Gr_k)` over the jumps.
    pub fn graded_dims(&self) -> Vec<(i64, usize)> {
        self.jumps().into_iter().map(|k| (k, self.graded_dim(k))).collect()
    }

    /// The filtration `V_j = W_{j - s}`.
    pub fn shifted(&self, s: i64) -> Filtration {
        Filtration { ambient: self.ambient, lowest: self.lowest + s, steps: self.steps.clone() }
    }

    /// `N(W_k) ⊆ W_{k + shift}` for every `k`.
    pub fn is_preserved_by(&self, n: &MatrixQ, shift: i64) -> Option<i64> {
        (self.lowest - 1..=self.highest()).find(|&k| !self.get(k + shift).contains_subspace(&self.get(k).image(n)))
    }

    /// `W ∩ S`, as subspaces of the ambient space.
    pub fn intersect(&self, s: &Subspace) -> Vec<(i64, Subspace)> {
        (self.lowest..=self.highest()).map(|k| (k, self.get(k).intersection(s))).collect()
    }
}

fn check_nilpotent(n: &MatrixQ) -> Result<()> {
    if !n.is_square() || !n.pow(n.rows() + 1).is_zero() {
        return Err(Error::NotNilpotent);
    }
    Ok(())
}

fn weight_recursion(n: &MatrixQ, a: Subspace, b: Subspace, out: &mut BTreeMap<i64, Subspace>) {
    if a == b {
        return;
    }
    let mut m = 0usize;
    let mut nm = MatrixQ::identity(n.rows());
    let mut pows = vec![nm.clone()];
    loop {
        nm = nm.mul(n);
        if a.contains_subspace(&b.image(&nm)) {
            break;
        }
        pows.push(nm.clone());
        m += 1;
    }
    let nm = &pows[m];
    let mi = m as i64;
    let upper = a.preimage(nm).intersection(&b);
    out.insert(mi, b.clone());
    out.insert(-mi - 1, a.clone());
    if m == 0 {
        return;
    }
    let lower = a.sum(&b.image(nm));
    out.insert(mi - 1, upper.clone());
    out.insert(-mi, lower.clone());
    weight_recursion(n, lower, upper, out);
}

/// `W(N)[−k]`: the unique filtration with `N W_j ⊆ W_{j−2}` and
/// `N^ℓ : Gr_{k+ℓ} ≅ Gr_{k−ℓ}`.
pub fn monodromy_weight_filtration(n: &MatrixQ, center: i64) -> Result<Filtration> {
    check_nilpotent(n)?;
    let dim = n.rows();
    if dim == 0 {
        return Ok(Filtration::trivial(0, center));
    }
    let mut out = BTreeMap::new();
    weight_recursion(n, Subspace::zero(dim), Subspace::full(dim), &mut out);
    Ok(Filtration::from_map(dim, out)?.shifted(center))
}

/// Checks both defining properties of `W(N)[−center]` directly.
pub fn is_monodromy_weight_filtration(n: &MatrixQ, w: &Filtration, center: i64) -> bool {
    if w.is_preserved_by(n, -2).is_some() {
        return false;
    }
    let span = (w.highest() - center).max(center - w.lowest()).max(0) + 1;
    (1..=span).all(|l| {
        let nl = n.pow(l as usize);
        let top = w.get(center + l);
        let below = w.get(center + l - 1);
        let injective = w.get(center - l - 1).preimage(&nl).intersection(&top) == below;
        injective && w.graded_dim(center + l) == w.graded_dim(center - l)
    })
}

fn check_commuting(ns: &[MatrixQ]) -> Result<()> {
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            if !ns[i].commutator(&ns[j]).is_zero() {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    Ok(())
}

/// `N(t) = Σ t_i N_i`.
pub fn combine(ns: &[MatrixQ], t: &[Rational]) -> MatrixQ {
    assert_eq!(ns.len(), t.len(), "one coefficient per operator");
    let dim = ns.first().map_or(0, MatrixQ::rows);
    ns.iter().zip(t).fold(MatrixQ::zeros(dim, dim), |acc, (n, c)| acc.plus(&n.scale(c)))
}

/// Whether `W(N(t))` agrees at all sample points.
pub fn check_cone_constancy(ns: &[MatrixQ], samples: &[Vec<Rational>]) -> Result<bool> {
    for n in ns {
        check_nilpotent(n)?;
    }
    check_commuting(ns)?;
    let mut first: Option<Filtration> = None;
    for t in samples {
        let w = monodromy_weight_filtration(&combine(ns, t), 0)?;
        match &first {
            None => first = Some(w),
            Some(f) if *f != w => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// Basis of `x ∈ W_k` modulo `W_{k−1}`, with coordinate map and induced
/// operator, used to test properties on graded pieces.
struct GradedPiece {
    complement: Vec<Vec<Rational>>,
    solver: MatrixQ,
}

impl GradedPiece {
    fn new(lower: &Subspace, upper: &Subspace) -> Self {
        let complement = lower.complement_in(upper);
        let mut cols: Vec<Vec<Rational>> = complement.clone();
        cols.extend(lower.basis());
        let solver = MatrixQ::from_rows(upper.ambient_dim(), cols).transpose();
        GradedPiece { complement, solver }
    }

    fn dim(&self) -> usize {
        self.complement.len()
    }

    fn coords(&self, x: &[Rational]) -> Vec<Rational> {
        let c = self.solver.solve_gauss(x).expect("vector lies in the upper step");
        c[..self.dim()].to_vec()
    }

    fn project(&self, s: &Subspace) -> Subspace {
        let v = s.basis().iter().map(|x| self.coords(x)).collect();
        Subspace::from_vectors(self.dim(), v)
    }

    fn induced(&self, n: &MatrixQ) -> MatrixQ {
        let cols: Vec<Vec<Rational>> = self.complement.iter().map(|x| self.coords(&n.mul_vec(x))).collect();
        MatrixQ::from_rows(self.dim(), cols).transpose()
    }
}

/// Checks that `M` is the relative weight filtration of `W` for `N`.
pub fn is_relative_weight_filtration(n: &MatrixQ, w: &Filtration, m: &Filtration) -> bool {
    if m.is_preserved_by(n, -2).is_some() {
        return false;
    }
    w.jumps().into_iter().all(|k| {
        let wk = w.get(k);
        let piece = GradedPiece::new(&w.get(k - 1), &wk);
        let nbar = piece.induced(n);
        let Ok(expected) = monodromy_weight_filtration(&nbar, k) else {
            return false;
        };
        let lo = m.lowest().min(expected.lowest()) - 1;
        let hi = m.highest().max(expected.highest()) + 1;
        (lo..=hi).all(|i| piece.project(&m.get(i).intersection(&wk)) == expected.get(i))
    })
}

/// Relative weight filtration `M(N, W)`, or `None` when it does not exist.
///
/// Built up the weight ladder of `W`: on each new graded piece the Jordan
/// strings of the induced operator are lifted so that the string tails land
/// in the already constructed filtration.
#[allow(clippy::needless_range_loop)]
pub fn relative_weight_filtration(n: &MatrixQ, w: &Filtration) -> Result<Option<Filtration>> {
    check_nilpotent(n)?;
    if let Some(k) = w.is_preserved_by(n, 0) {
        return Err(Error::FiltrationNotPreserved(k));
    }
    let dim = n.rows();
    if dim == 0 {
        return Ok(Some(Filtration::trivial(0, 0)));
    }
    let pows: Vec<MatrixQ> = (0..=dim + 1).map(|j| n.pow(j)).collect();
    // M restricted to the current W_k.
    let mut m: BTreeMap<i64, Subspace> = BTreeMap::new();
    let step = |m: &BTreeMap<i64, Subspace>, i: i64| -> Subspace {
        match m.range(..=i).next_back() {
            Some((_, s)) => s.clone(),
            None => Subspace::zero(dim),
        }
    };
    let mut u = Subspace::zero(dim);
    for k in w.jumps() {
        let wk = w.get(k);
        let kj = |j: usize| u.preimage(&pows[j]).intersection(&wk);
        let mut strings: Vec<(i64, Vec<Rational>)> = Vec::new();
        for j in 1..=dim {
            let taken = kj(j - 1).sum(&kj(j + 1).image(n));
            for x in taken.complement_in(&kj(j)) {
                // Lift x by some u0 ∈ U so that N^j (x + u0) ∈ M'_{k-j-1}.
                let target = step(&m, k - j as i64 - 1);
                let nj = &pows[j];
                let rhs: Vec<Rational> = nj.mul_vec(&x).iter().map(Field::negated).collect();
                let mut cols: Vec<Vec<Rational>> = u.basis().iter().map(|b| nj.mul_vec(b)).collect();
                cols.extend(target.basis().iter().map(|b| b.iter().map(Field::negated).collect()));
                let coeffs = if cols.is_empty() {
                    rhs.iter().all(Field::is_zero).then(Vec::new)
                } else {
                    MatrixQ::from_rows(dim, cols).transpose().solve_gauss(&rhs)
                };
                let Some(coeffs) = coeffs else {
                    return Ok(None);
                };
                let mut v = x;
                for (c, b) in coeffs.iter().zip(u.basis()) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += c * bi;
                    }
                }
                for a in 0..j {
                    strings.push((k + j as i64 - 1 - 2 * a as i64, v.clone()));
                    v = n.mul_vec(&v);
                }
            }
        }
        let weights = strings.iter().map(|(i, _)| *i).chain(m.keys().copied());
        let lo = weights.clone().min().unwrap_or(k);
        let hi = weights.max().unwrap_or(k);
        let mut next = BTreeMap::new();
        for i in lo..=hi {
            let extra = strings.iter().filter(|(w, _)| *w <= i).map(|(_, v)| v.clone()).collect();
            next.insert(i, step(&m, i).sum(&Subspace::from_vectors(dim, extra)));
        }
        m = next;
        u = wk;
    }
    let mut map = m;
    let top = map.keys().last().copied().unwrap_or(0);
    map.insert(top + 1, Subspace::full(dim));
    let result = Filtration::from_map(dim, map)?;
    debug_assert!(is_relative_weight_filtration(n, w, &result));
    Ok(Some(result))
}

/// Filtration on `K^p = H ⊗ ∧^p E` (flattened blockwise, `C(r,p)` blocks of
/// size `n`) where `e_J` carries weight `p · weight_of_e`.
pub fn induced_weight_on_koszul(w_h: &Filtration, weight_of_e: i64, p: usize, r: usize) -> Filtration {
    let n = w_h.ambient_dim();
    let blocks = crate::koszul::binomial(r, p);
    let total = n * blocks;
    if total == 0 {
        return Filtration::trivial(0, 0);
    }
    let shift = weight_of_e * p as i64;
    let embed = |s: &Subspace| -> Subspace {
        let mut vecs = Vec::new();
        for b in 0..blocks {
            for v in s.basis() {
                let mut x = vec![Rational::from_integer(0.into()); total];
                x[b * n..(b + 1) * n].clone_from_slice(&v);
                vecs.push(x);
            }
        }
        Subspace::from_vectors(total, vecs)
    };
    let map = (w_h.lowest()..=w_h.highest()).map(|k| (k + shift, embed(&w_h.get(k)))).collect();
    Filtration::from_map(total, map).expect("induced filtration is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational_int;
    use proptest::prelude::*;

    fn sp(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::from_vectors(n, vs.iter().map(|v| v.iter().map(|&x| rational_int(x)).collect()).collect())
    }

    fn jordan(n: usize) -> MatrixQ {
        MatrixQ::from_fn(n, n, |i, j| rational_int((i == j + 1) as i64))
    }

    #[test]
    fn two_block() {
        let n = jordan(2);
        let w = monodromy_weight_filtration(&n, 0).unwrap();
        assert!(w.get(-2).is_zero());
        assert_eq!(w.get(-1), sp(2, &[&[0, 1]]));
        assert_eq!(w.get(0), sp(2, &[&[0, 1]]));
        assert!(w.get(1).is_full());
        assert!(is_monodromy_weight_filtration(&n, &w, 0));
    }

    #[test]
    fn zero_operator_single_jump() {
        let w = monodromy_weight_filtration(&MatrixQ::zeros(3, 3), 5).unwrap();
        assert!(w.get(4).is_zero());
        assert!(w.get(5).is_full());
        assert_eq!(w, Filtration::trivial(3, 5));
    }

    #[test]
    fn three_block() {
        let w = monodromy_weight_filtration(&jordan(3), 0).unwrap();
        assert_eq!(w.graded_dims(), vec![(-2, 1), (0, 1), (2, 1)]);
    }

    #[test]
    fn not_nilpotent() {
        assert_eq!(monodromy_weight_filtration(&MatrixQ::identity(2), 0), Err(Error::NotNilpotent));
    }

    #[test]
    fn cone_constancy_examples() {
        let n = jordan(2);
        let samples: Vec<Vec<Rational>> =
            [[1, 1], [1, 2], [3, 5]].iter().map(|t| t.iter().map(|&x| rational_int(x)).collect()).collect();
        assert!(check_cone_constancy(&[n.clone(), n.clone()], &samples).unwrap());
        assert!(check_cone_constancy(&[jordan(3), MatrixQ::zeros(3, 3)], &samples).unwrap());
        let a = MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]);
        let b = MatrixQ::from_i64(2, 2, &[0, 1, 0, 0]);
        assert_eq!(check_cone_constancy(&[a, b], &samples), Err(Error::NotCommuting(0, 1)));
    }

    #[test]
    fn relative_examples() {
        let w = Filtration::new(2, -1, vec![sp(2, &[&[0, 1]]), Subspace::full(2)]).unwrap();
        assert_eq!(relative_weight_filtration(&MatrixQ::zeros(2, 2), &w).unwrap(), Some(w.clone()));
        assert_eq!(relative_weight_filtration(&jordan(2), &w).unwrap(), None);
        let pure = Filtration::trivial(3, 1);
        let m = relative_weight_filtration(&jordan(3), &pure).unwrap().unwrap();
        assert_eq!(m, monodromy_weight_filtration(&jordan(3), 1).unwrap());
        let w2 = Filtration::new(2, 0, vec![sp(2, &[&[1, 0]]), Subspace::full(2)]).unwrap();
        assert_eq!(relative_weight_filtration(&jordan(2), &w2), Err(Error::FiltrationNotPreserved(0)));
    }

    #[test]
    fn relative_filtration_of_mixed_strings() {
        let n = jordan(2);
        let w = Filtration::new(2, -2, vec![sp(2, &[&[0, 1]]), sp(2, &[&[0, 1]]), Subspace::full(2)]).unwrap();
        let m = relative_weight_filtration(&n, &w).unwrap().unwrap();
        assert!(is_relative_weight_filtration(&n, &w, &m));
        assert_eq!(m.graded_dims(), vec![(-2, 1), (0, 1)]);

        let n = jordan(3);
        let low = sp(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let w = Filtration::from_map(3, [(-1, low.clone()), (2, Subspace::full(3))].into_iter().collect()).unwrap();
        let m = relative_weight_filtration(&n, &w).unwrap().unwrap();
        assert!(is_relative_weight_filtration(&n, &w, &m));
        assert_eq!(m.graded_dims(), vec![(-2, 1), (0, 1), (2, 1)]);
        let w = Filtration::from_map(3, [(-1, low), (0, Subspace::full(3))].into_iter().collect()).unwrap();
        assert_eq!(relative_weight_filtration(&n, &w).unwrap(), None);
    }

    #[test]
    fn koszul_shift() {
        let w = monodromy_weight_filtration(&jordan(2), -1).unwrap();
        assert_eq!(induced_weight_on_koszul(&w, 2, 0, 3), w);
        let k1 = induced_weight_on_koszul(&w, 2, 1, 2);
        assert_eq!(k1.graded_dims(), vec![(0, 2), (2, 2)]);
        let pure = Filtration::trivial(2, -1);
        assert_eq!(induced_weight_on_koszul(&pure, 2, 1, 1), Filtration::trivial(2, 1));
    }

    fn arb_nilpotent() -> impl Strategy<Value = MatrixQ> {
        (2usize..6, proptest::collection::vec(-2i64..=2, 36), proptest::collection::vec(-1i64..=1, 36)).prop_map(
            |(n, low, conj)| {
                let a = MatrixQ::from_fn(n, n, |i, j| if i > j { rational_int(low[i * 6 + j]) } else { rational_int(0) });
                let p = MatrixQ::from_fn(n, n, |i, j| {
                    if i == j {
                        rational_int(1)
                    } else if i < j {
                        rational_int(conj[i * 6 + j])
                    } else {
                        rational_int(0)
                    }
                });
                let pinv = MatrixQ::from_fn(n, n, |i, j| {
                    let mut e = vec![rational_int(0); n];
                    e[j] = rational_int(1);
                    p.solve_gauss(&e).unwrap()[i].clone()
                });
                p.mul(&a).mul(&pinv)
            },
        )
    }

    proptest! {
        #[test]
        fn weight_filtration_properties(n in arb_nilpotent(), center in -2i64..=2, c in 1i64..5) {
            let w = monodromy_weight_filtration(&n, center).unwrap();
            prop_assert!(is_monodromy_weight_filtration(&n, &w, center));
            prop_assert_eq!(monodromy_weight_filtration(&n.scale(&rational_int(c)), center).unwrap(), w.clone());
            if n.rows() > 0 {
                prop_assert!(!is_monodromy_weight_filtration(&n, &w.shifted(1), center));
            }
            let jumps = w.jumps();
            if jumps.len() > 1 {
                let mut map: BTreeMap<i64, Subspace> = (w.lowest()..=w.highest()).map(|k| (k, w.get(k))).collect();
                map.insert(jumps[0], Subspace::zero(n.rows()));
                for k in jumps[0]..jumps[1] {
                    map.insert(k, Subspace::zero(n.rows()));
                }
                let merged = Filtration::from_map(n.rows(), map).unwrap();
                prop_assert!(!is_monodromy_weight_filtration(&n, &merged, center));
            }
        }

        #[test]
        fn relative_filtration_restricts_correctly(n in arb_nilpotent(), cut in 0usize..4) {
            let dim = n.rows();
            let ker = Subspace::kernel_of(&n.pow(cut.min(dim)));
            let w = Filtration::from_map(dim, [(-1, ker), (0, Subspace::full(dim))].into_iter().collect()).unwrap();
            if let Some(m) = relative_weight_filtration(&n, &w).unwrap() {
                prop_assert!(is_relative_weight_filtration(&n, &w, &m));
            }
        }
    }
}
