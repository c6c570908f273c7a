//! Weight-lattice combinatorics and representation modules with admissible
//! lattices.
//!
//! Weights are always written in fundamental-weight coordinates
//! `λ = Σ m_i ϖ_i` with `m_i = λ(h_i)`; the rational expansion over the
//! simple roots is used only as the sort key that keeps module bases in
//! non-increasing height order (so raising operators are strictly upper
//! triangular). Modules carry integer matrices for the canonical root
//! vectors of every root together with their divided powers, which are
//! computed over ℚ and integrality-checked rather than trusted.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::canbasis::{canonical_system, AlgebraError, LadderChoice, LieAlgebraData};
use crate::cartan::CartanMatrix;
use crate::exact::{int, smith_normal_form, solve_rational, Int, Rat, SparseMat};
use crate::roots::RootSystem;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModuleError {
    /// A requested orbit generator is not a nonzero dominant minuscule weight.
    NotMinuscule(Vec<i64>),
    /// Validation failure, with the reason.
    NotAdmissible(String),
    /// Mixed Cartan matrices or mismatched matrix shapes.
    WeightMismatch,
}

impl fmt::Display for ModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleError::NotMinuscule(w) => write!(f, "{w:?} is not a nonzero dominant minuscule weight"),
            ModuleError::NotAdmissible(r) => write!(f, "module is not admissible: {r}"),
            ModuleError::WeightMismatch => write!(f, "incompatible Cartan data or matrix shapes"),
        }
    }
}

impl From<AlgebraError> for ModuleError {
    fn from(e: AlgebraError) -> Self {
        ModuleError::NotAdmissible(alloc::format!("{e}"))
    }
}

/// s_i(λ): m_k ↦ m_k − m_i·a_{ki}.
pub fn s_i_on_weight(cartan: &CartanMatrix, i: usize, m: &[i64]) -> Vec<i64> {
    (0..cartan.size()).map(|k| m[k] - m[i] * cartan.entry(k, i)).collect()
}

/// The unique dominant representative of the orbit of λ and the word that
/// reaches it: repeatedly apply s_i for the smallest i with m_i < 0.
pub fn dominant_rep(cartan: &CartanMatrix, m: &[i64]) -> (Vec<i64>, Vec<usize>) {
    let mut cur = m.to_vec();
    let mut word = Vec::new();
    loop {
        match cur.iter().position(|&v| v < 0) {
            Some(i) => {
                cur = s_i_on_weight(cartan, i, &cur);
                word.push(i);
            }
            None => return (cur, word),
        }
    }
}

/// The W-orbit of λ in discovery order: scan the list, apply s_1..s_l,
/// append unseen images.
pub fn weight_orbit(cartan: &CartanMatrix, m: &[i64]) -> Vec<Vec<i64>> {
    let mut orbit = vec![m.to_vec()];
    let mut k = 0;
    while k < orbit.len() {
        for i in 0..cartan.size() {
            let img = s_i_on_weight(cartan, i, &orbit[k]);
            if !orbit.contains(&img) {
                orbit.push(img);
            }
        }
        k += 1;
    }
    orbit
}

/// λ(h_α) = Σ_i n_i^∨(α)·m_i.
pub fn pairing_weight_coroot(rs: &RootSystem, m: &[i64], alpha: usize) -> i64 {
    rs.coroot_coeffs(alpha).iter().zip(m).map(|(c, v)| c * v).sum()
}

/// Indices i whose fundamental weight ϖ_i is minuscule: |⟨α^∨, ϖ_i⟩| ≤ 1
/// for every root α.
pub fn minuscule_weights(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| (0..rs.num_positive()).all(|a| rs.coroot_coeffs(a)[i].abs() <= 1))
        .collect()
}

/// Is λ minuscule (pairs to {0, ±1} with every coroot)?
pub fn is_minuscule(rs: &RootSystem, m: &[i64]) -> bool {
    (0..rs.num_positive()).all(|a| pairing_weight_coroot(rs, m, a).abs() <= 1)
}

/// Rational height of a weight: Σ u_j where λ = Σ u_j α_j.
pub fn weight_height(cartan: &CartanMatrix, m: &[i64]) -> Rat {
    let rhs: Vec<Int> = m.iter().map(|&v| int(v)).collect();
    let u = solve_rational(&cartan.to_sparse(), &rhs)
        .expect("finite-type Cartan matrices are nonsingular");
    u.into_iter().fold(Rat::zero(), |acc, x| acc + x)
}

/// Admissibility report for a module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub failures: Vec<String>,
    /// Largest divided power that is nonzero, over all roots.
    pub max_divided_power: usize,
}

/// A representation module over an admissible lattice: a weighted basis and
/// integer matrices (with divided powers) for every canonical root vector.
#[derive(Clone, Debug)]
pub struct RepModule {
    rs: RootSystem,
    epsilon: Vec<i8>,
    weights: Vec<Vec<i64>>,
    rho_e_simple: Vec<SparseMat<Int>>,
    rho_f_simple: Vec<SparseMat<Int>>,
    /// Canonical matrix ρ(e_β) per root index.
    rho: Vec<SparseMat<Int>>,
    /// Divided powers per root: `dp[r][m-1] = ρ(e_β)^m / m!`, nonzero ones only.
    dp: Vec<Vec<SparseMat<Int>>>,
}

impl RepModule {
    /// Construct and fully validate a module from matrices of the simple
    /// Chevalley generators in an arbitrary basis order (the basis is
    /// re-sorted by non-increasing weight height, stably).
    pub fn from_generators(
        rs: &RootSystem,
        weights: Vec<Vec<i64>>,
        e: Vec<SparseMat<Int>>,
        f: Vec<SparseMat<Int>>,
    ) -> Result<RepModule, ModuleError> {
        let l = rs.rank();
        let dim = weights.len();
        if e.len() != l || f.len() != l || weights.iter().any(|w| w.len() != l) {
            return Err(ModuleError::WeightMismatch);
        }
        if e.iter().chain(&f).any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(ModuleError::WeightMismatch);
        }
        // stable sort by non-increasing rational height
        let mut order: Vec<usize> = (0..dim).collect();
        let hts: Vec<Rat> = weights.iter().map(|w| weight_height(rs.cartan(), w)).collect();
        order.sort_by(|&a, &b| hts[b].cmp(&hts[a]));
        let position_of: Vec<usize> = {
            let mut pos = vec![0usize; dim];
            for (new_pos, &old) in order.iter().enumerate() {
                pos[old] = new_pos;
            }
            pos
        };
        let permute = |m: &SparseMat<Int>| -> SparseMat<Int> {
            let mut out = SparseMat::zero(dim, dim);
            for (r, c, v) in m.iter() {
                out.set(position_of[r], position_of[c], v.clone());
            }
            out
        };
        let weights: Vec<Vec<i64>> = order.iter().map(|&k| weights[k].clone()).collect();
        let e: Vec<SparseMat<Int>> = e.iter().map(&permute).collect();
        let f: Vec<SparseMat<Int>> = f.iter().map(&permute).collect();

        // (A1): h_i = [e_i, f_i] must be diagonal with entries m_i
        for i in 0..l {
            let h = e[i].commutator(&f[i]);
            if !h.is_diagonal() {
                return Err(ModuleError::NotAdmissible(alloc::format!(
                    "[e_{}, f_{}] is not diagonal: basis vectors are not weight vectors",
                    i + 1,
                    i + 1
                )));
            }
            for k in 0..dim {
                let got = h.get(k, k).cloned().unwrap_or_else(Int::zero);
                if got != int(weights[k][i]) {
                    return Err(ModuleError::NotAdmissible(alloc::format!(
                        "h_{} eigenvalue at basis vector {} is {} but the declared weight gives {}",
                        i + 1,
                        k + 1,
                        got,
                        weights[k][i]
                    )));
                }
            }
        }
        let epsilon = rs.cartan().epsilon().map_err(AlgebraError::from)?;
        let rho = canonical_system(rs, &epsilon, &e, &f, LadderChoice::SmallestIndex)?;

        // fundamental calculation: ρ(e_β) maps the μ-space into the (μ+β)-space
        for (r, m) in rho.iter().enumerate() {
            let shift: Vec<i64> =
                (0..l).map(|i| rs.pairing_simple(i, r)).collect();
            for (row, col, _) in m.iter() {
                let expect: Vec<i64> =
                    weights[col].iter().zip(&shift).map(|(a, b)| a + b).collect();
                if weights[row] != expect {
                    return Err(ModuleError::NotAdmissible(alloc::format!(
                        "root vector {} does not shift weights by its root",
                        r + 1
                    )));
                }
            }
        }

        // divided powers over Q, integrality-checked
        let mut dp = Vec::with_capacity(rho.len());
        for (r, m) in rho.iter().enumerate() {
            let mut powers: Vec<SparseMat<Int>> = Vec::new();
            let mut acc: SparseMat<Rat> = m.map(|v| Rat::from_integer(v.clone()));
            let mut k = 1usize;
            loop {
                if acc.is_zero() {
                    break;
                }
                if k > dim {
                    return Err(ModuleError::NotAdmissible(alloc::format!(
                        "root vector {} is not nilpotent",
                        r + 1
                    )));
                }
                let mut integral = SparseMat::zero(dim, dim);
                for (rr, cc, v) in acc.iter() {
                    if !One::is_one(v.denom()) {
                        return Err(ModuleError::NotAdmissible(alloc::format!(
                            "divided power {k} of root vector {} is not integral",
                            r + 1
                        )));
                    }
                    integral.set(rr, cc, v.numer().clone());
                }
                powers.push(integral);
                k += 1;
                acc = acc
                    .mul(&m.map(|v| Rat::from_integer(v.clone())))
                    .scale(&Rat::new(Int::one(), int(k as i64)));
            }
            dp.push(powers);
        }

        Ok(RepModule {
            rs: rs.clone(),
            epsilon,
            weights,
            rho_e_simple: e,
            rho_f_simple: f,
            rho,
            dp,
        })
    }

    /// The module with basis `z_μ` over a union Ψ of W-orbits of nonzero
    /// dominant minuscule weights: `e_i z_μ = z_{μ+α_i}` iff `m_i = −1`,
    /// `f_i z_μ = z_{μ−α_i}` iff `m_i = +1`.
    pub fn minuscule(rs: &RootSystem, dominant: &[Vec<i64>]) -> Result<RepModule, ModuleError> {
        let cartan = rs.cartan();
        let l = rs.rank();
        let mut psi: Vec<Vec<i64>> = Vec::new();
        for lam in dominant {
            if lam.len() != l {
                return Err(ModuleError::WeightMismatch);
            }
            let nonzero = lam.iter().any(|&v| v != 0);
            let dominant_ok = lam.iter().all(|&v| v >= 0);
            if !nonzero || !dominant_ok || !is_minuscule(rs, lam) {
                return Err(ModuleError::NotMinuscule(lam.clone()));
            }
            for w in weight_orbit(cartan, lam) {
                if !psi.contains(&w) {
                    psi.push(w);
                }
            }
        }
        let dim = psi.len();
        let alpha_coords =
            |i: usize| -> Vec<i64> { (0..l).map(|k| cartan.entry(k, i)).collect() };
        let mut e = vec![SparseMat::zero(dim, dim); l];
        let mut f = vec![SparseMat::zero(dim, dim); l];
        for (k, mu) in psi.iter().enumerate() {
            for i in 0..l {
                let ai = alpha_coords(i);
                if mu[i] == -1 {
                    let up: Vec<i64> = mu.iter().zip(&ai).map(|(a, b)| a + b).collect();
                    let t = psi.iter().position(|w| *w == up).expect("orbit is s_i-closed");
                    e[i].set(t, k, Int::one());
                }
                if mu[i] == 1 {
                    let down: Vec<i64> = mu.iter().zip(&ai).map(|(a, b)| a - b).collect();
                    let t = psi.iter().position(|w| *w == down).expect("orbit is s_i-closed");
                    f[i].set(t, k, Int::one());
                }
            }
        }
        RepModule::from_generators(rs, psi, e, f)
    }

    /// The adjoint module: basis = the canonical basis of the algebra,
    /// weights `β(h_i)` on root vectors and 0 on the Cartan block, action by
    /// the canonical matrices themselves.
    pub fn adjoint(d: &LieAlgebraData) -> RepModule {
        let dim = d.dim();
        let weights: Vec<Vec<i64>> = (0..dim).map(|k| d.weight_of_basis(k)).collect();
        let e: Vec<SparseMat<Int>> = (0..d.roots().rank()).map(|i| d.e(i).clone()).collect();
        let f: Vec<SparseMat<Int>> = (0..d.roots().rank()).map(|i| d.f(i).clone()).collect();
        RepModule::from_generators(d.roots(), weights, e, f)
            .expect("the adjoint lattice is admissible")
    }

    /// The (m+1)-dimensional irreducible A₁-module on v_0..v_m:
    /// `e·v_k = (m−k+1)v_{k−1}`, `f·v_k = (k+1)v_{k+1}`, weight of v_k = m−2k.
    pub fn sl2_irrep(m: usize) -> RepModule {
        let cartan = CartanMatrix::validate(&[vec![2]]).expect("A1");
        let rs = RootSystem::generate(cartan).expect("A1 is finite");
        let dim = m + 1;
        let weights: Vec<Vec<i64>> = (0..dim).map(|k| vec![m as i64 - 2 * k as i64]).collect();
        let mut e = SparseMat::zero(dim, dim);
        let mut f = SparseMat::zero(dim, dim);
        for k in 1..dim {
            e.set(k - 1, k, int((m - k + 1) as i64));
        }
        for k in 0..dim - 1 {
            f.set(k + 1, k, int(k as i64 + 1));
        }
        RepModule::from_generators(&rs, weights, vec![e], vec![f])
            .expect("the binomial lattice is admissible")
    }

    /// Direct sum over the same root system; the combined basis is re-sorted
    /// by height (stable, first summand first).
    pub fn direct_sum(parts: &[RepModule]) -> Result<RepModule, ModuleError> {
        let first = parts.first().ok_or(ModuleError::WeightMismatch)?;
        let rs = &first.rs;
        if parts.iter().any(|p| p.rs.cartan() != rs.cartan()) {
            return Err(ModuleError::WeightMismatch);
        }
        let dim: usize = parts.iter().map(|p| p.dim()).sum();
        let l = rs.rank();
        let mut weights = Vec::with_capacity(dim);
        let mut e = vec![SparseMat::zero(dim, dim); l];
        let mut f = vec![SparseMat::zero(dim, dim); l];
        let mut offset = 0;
        for p in parts {
            weights.extend(p.weights.iter().cloned());
            for i in 0..l {
                for (r, c, v) in p.rho_e_simple[i].iter() {
                    e[i].set(offset + r, offset + c, v.clone());
                }
                for (r, c, v) in p.rho_f_simple[i].iter() {
                    f[i].set(offset + r, offset + c, v.clone());
                }
            }
            offset += p.dim();
        }
        RepModule::from_generators(rs, weights, e, f)
    }

    pub fn roots(&self) -> &RootSystem {
        &self.rs
    }

    pub fn epsilon(&self) -> &[i8] {
        &self.epsilon
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, k: usize) -> &[i64] {
        &self.weights[k]
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// ρ(e_i) for a simple generator (not ε-twisted).
    pub fn rho_e_simple(&self, i: usize) -> &SparseMat<Int> {
        &self.rho_e_simple[i]
    }

    pub fn rho_f_simple(&self, i: usize) -> &SparseMat<Int> {
        &self.rho_f_simple[i]
    }

    /// Canonical matrix ρ(e_β) for a root index.
    pub fn rho(&self, r: usize) -> &SparseMat<Int> {
        &self.rho[r]
    }

    /// Divided powers of ρ(e_β): slot m−1 holds ρ(e_β)^m/m!; the list stops
    /// at the nilpotency degree.
    pub fn divided_powers(&self, r: usize) -> &[SparseMat<Int>] {
        &self.dp[r]
    }

    /// Invariant factors of Ω/Λ(V) where Λ(V) is spanned by the basis
    /// weights: the Smith normal form of the stacked weight rows (zeros mean
    /// the weights do not span, i.e. the module is not faithful).
    pub fn lattice_index_factors(&self) -> Vec<Int> {
        let l = self.rs.rank();
        let mut m = SparseMat::zero(self.dim(), l);
        for (r, w) in self.weights.iter().enumerate() {
            for (c, &v) in w.iter().enumerate() {
                if v != 0 {
                    m.set(r, c, int(v));
                }
            }
        }
        smith_normal_form(&m)
    }

    /// Test-only mutable access for negative controls.
    #[cfg(test)]
    pub(crate) fn test_only_dp_mut(&mut self) -> &mut Vec<Vec<SparseMat<Int>>> {
        &mut self.dp
    }

    /// Re-run every admissibility check and report.
    pub fn check_admissible(&self) -> AdmissibilityReport {
        let mut failures = Vec::new();
        let l = self.rs.rank();
        let dim = self.dim();
        // weight-vector property
        for i in 0..l {
            let h = self.rho_e_simple[i].commutator(&self.rho_f_simple[i]);
            if !h.is_diagonal() {
                failures.push(alloc::format!("h_{} is not diagonal", i + 1));
                continue;
            }
            for k in 0..dim {
                let got = h.get(k, k).cloned().unwrap_or_else(Int::zero);
                if got != int(self.weights[k][i]) {
                    failures.push(alloc::format!("weight mismatch at h_{}, basis {}", i + 1, k + 1));
                    break;
                }
            }
        }
        // divided-power integrality recomputed over Q
        let mut max_dp = 0usize;
        for r in 0..self.rs.num_roots() {
            let m = self.rho[r].map(|v| Rat::from_integer(v.clone()));
            let mut acc = m.clone();
            let mut k = 1usize;
            while !acc.is_zero() && k <= dim {
                if acc.iter().any(|(_, _, v)| !One::is_one(v.denom())) {
                    failures.push(alloc::format!("divided power {k} of root {} not integral", r + 1));
                    break;
                }
                max_dp = max_dp.max(k);
                k += 1;
                acc = acc.mul(&m).scale(&Rat::new(Int::one(), int(k as i64)));
            }
            // gcd of entries of rho(e_beta) is 1
            let mut g = Int::zero();
            for (_, _, v) in self.rho[r].iter() {
                g = num_integer::Integer::gcd(&g, v);
            }
            if !One::is_one(&g) {
                failures.push(alloc::format!("entries of root vector {} have gcd {g}", r + 1));
            }
            // fundamental calculation
            let shift: Vec<i64> = (0..l).map(|i| self.rs.pairing_simple(i, r)).collect();
            for (row, col, _) in self.rho[r].iter() {
                let expect: Vec<i64> =
                    self.weights[col].iter().zip(&shift).map(|(a, b)| a + b).collect();
                if self.weights[row] != expect {
                    failures.push(alloc::format!("root vector {} breaks weight shifts", r + 1));
                    break;
                }
            }
        }
        AdmissibilityReport { admissible: failures.is_empty(), failures, max_divided_power: max_dp }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn system(fam: Family, rank: usize) -> RootSystem {
        RootSystem::generate(CartanMatrix::standard(fam, rank).unwrap()).unwrap()
    }

    #[test]
    fn s_i_action_examples() {
        let e6 = CartanMatrix::standard(Family::E, 6).unwrap();
        assert_eq!(s_i_on_weight(&e6, 0, &[1, 0, 0, 0, 0, 0]), vec![-1, 0, 1, 0, 0, 0]);
        let c2 = CartanMatrix::standard(Family::C, 2).unwrap();
        assert_eq!(s_i_on_weight(&c2, 1, &[0, 1]), vec![1, -1]);
        // involution
        let m = vec![2, -1];
        assert_eq!(s_i_on_weight(&c2, 0, &s_i_on_weight(&c2, 0, &m)), m);
    }

    #[test]
    fn dominant_rep_examples() {
        let e6 = CartanMatrix::standard(Family::E, 6).unwrap();
        let (lam, word) = dominant_rep(&e6, &[0, 0, 0, 0, 0, -1]);
        assert_eq!(lam, vec![1, 0, 0, 0, 0, 0]);
        assert!(!word.is_empty());
        let a1 = CartanMatrix::standard(Family::A, 1).unwrap();
        assert_eq!(dominant_rep(&a1, &[-3]), (vec![3], vec![0]));
        assert_eq!(dominant_rep(&a1, &[3]), (vec![3], vec![]));
    }

    #[test]
    fn minuscule_sets() {
        assert_eq!(minuscule_weights(&system(Family::E, 6)), vec![0, 5]);
        assert_eq!(minuscule_weights(&system(Family::G, 2)), Vec::<usize>::new());
        assert_eq!(minuscule_weights(&system(Family::F, 4)), Vec::<usize>::new());
        assert_eq!(minuscule_weights(&system(Family::E, 8)), Vec::<usize>::new());
        assert_eq!(minuscule_weights(&system(Family::A, 3)), vec![0, 1, 2]);
        assert_eq!(minuscule_weights(&system(Family::B, 3)), vec![0]);
        assert_eq!(minuscule_weights(&system(Family::C, 3)), vec![2]);
        assert_eq!(minuscule_weights(&system(Family::D, 4)), vec![0, 1, 3]);
        assert_eq!(minuscule_weights(&system(Family::E, 7)), vec![6]);
    }

    #[test]
    fn orbit_sizes() {
        let sizes = |fam, rank, i: usize| {
            let rs = system(fam, rank);
            let mut m = vec![0i64; rs.rank()];
            m[i] = 1;
            weight_orbit(rs.cartan(), &m).len()
        };
        assert_eq!(sizes(Family::B, 4, 0), 16); // 2^n
        assert_eq!(sizes(Family::C, 3, 2), 6); // 2n
        assert_eq!(sizes(Family::E, 7, 6), 56);
        assert_eq!(sizes(Family::D, 4, 0), 8); // 2^{n-1}
        assert_eq!(sizes(Family::D, 4, 3), 8); // natural = 2n coincides at n=4
        assert_eq!(sizes(Family::A, 4, 1), 10); // binom(5, 2)
        // trivial orbit of 0
        let g2 = CartanMatrix::standard(Family::G, 2).unwrap();
        assert_eq!(weight_orbit(&g2, &[0, 0]), vec![vec![0, 0]]);
    }

    #[test]
    fn weight_coroot_pairing_examples() {
        let g2 = system(Family::G, 2);
        // fundamental weights pair to Kronecker deltas with simple coroots
        for i in 0..2 {
            for j in 0..2 {
                let mut m = vec![0i64; 2];
                m[j] = 1;
                assert_eq!(
                    pairing_weight_coroot(&g2, &m, g2.simple(i)),
                    i64::from(i == j)
                );
            }
        }
        // w1 against the highest short root (coroot coefficients (3, 2))
        let hs = g2.highest_short_root().unwrap();
        assert_eq!(pairing_weight_coroot(&g2, &[1, 0], hs), 3);
        // the weight of a root beta pairs like the root pairing
        let f4 = system(Family::F, 4);
        for beta in 0..f4.num_roots() {
            let m: Vec<i64> = (0..4).map(|i| f4.pairing_simple(i, beta)).collect();
            for alpha in 0..f4.num_positive() {
                assert_eq!(pairing_weight_coroot(&f4, &m, alpha), f4.pairing(alpha, beta));
            }
        }
    }

    #[test]
    fn minuscule_modules_satisfy_chevalley_relations() {
        for (fam, rank, w) in [(Family::C, 2, 1usize), (Family::A, 3, 1), (Family::D, 4, 0)] {
            let rs = system(fam, rank);
            let mut lam = vec![0i64; rank];
            lam[w] = 1;
            let m = RepModule::minuscule(&rs, &[lam]).unwrap();
            let h: Vec<SparseMat<Int>> = (0..rank)
                .map(|i| m.rho_e_simple(i).commutator(m.rho_f_simple(i)))
                .collect();
            for i in 0..rank {
                for j in 0..rank {
                    if i != j {
                        assert!(m.rho_e_simple(i).commutator(m.rho_f_simple(j)).is_zero());
                    }
                    let a = int(rs.cartan().entry(i, j));
                    assert_eq!(h[i].commutator(m.rho_e_simple(j)), m.rho_e_simple(j).scale(&a));
                    assert_eq!(
                        h[i].commutator(m.rho_f_simple(j)),
                        m.rho_f_simple(j).scale(&(-&a))
                    );
                    assert!(h[i].commutator(&h[j]).is_zero());
                }
            }
        }
    }

    #[test]
    fn minusculity_is_w_invariant() {
        let rs = system(Family::D, 5);
        for &i in &minuscule_weights(&rs) {
            let mut m = vec![0i64; 5];
            m[i] = 1;
            for w in weight_orbit(rs.cartan(), &m) {
                assert!(is_minuscule(&rs, &w));
            }
        }
    }

    #[test]
    fn c2_minuscule_matrices() {
        let rs = system(Family::C, 2);
        let m = RepModule::minuscule(&rs, &[vec![0, 1]]).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.weights(), &[vec![0, 1], vec![1, -1], vec![-1, 1], vec![0, -1]]);
        let e1 = m.rho_e_simple(0);
        assert_eq!(e1.nnz(), 1);
        assert_eq!(e1.get(1, 2), Some(&int(1)));
        let e2 = m.rho_e_simple(1);
        assert_eq!(e2.get(0, 1), Some(&int(1)));
        assert_eq!(e2.get(2, 3), Some(&int(1)));
        assert_eq!(e2.nnz(), 2);
        let f1 = m.rho_f_simple(0);
        assert_eq!(f1.get(2, 1), Some(&int(1)));
        let f2 = m.rho_f_simple(1);
        assert_eq!(f2.get(1, 0), Some(&int(1)));
        assert_eq!(f2.get(3, 2), Some(&int(1)));
    }

    #[test]
    fn minuscule_squares_vanish() {
        let rs = system(Family::E, 6);
        let m = RepModule::minuscule(&rs, &[vec![1, 0, 0, 0, 0, 0]]).unwrap();
        assert_eq!(m.dim(), 27);
        for r in 0..rs.num_roots() {
            assert_eq!(m.divided_powers(r).len(), 1);
        }
        // h_i eigenvalues are the weight coordinates
        for i in 0..6 {
            let h = m.rho_e_simple(i).commutator(m.rho_f_simple(i));
            for k in 0..m.dim() {
                assert_eq!(
                    h.get(k, k).cloned().unwrap_or_else(Int::zero),
                    int(m.weight(k)[i])
                );
            }
        }
    }

    #[test]
    fn minuscule_rejects_bad_weights() {
        let rs = system(Family::C, 2);
        assert!(matches!(
            RepModule::minuscule(&rs, &[vec![1, 0]]),
            Err(ModuleError::NotMinuscule(_))
        ));
        assert!(matches!(
            RepModule::minuscule(&rs, &[vec![0, 0]]),
            Err(ModuleError::NotMinuscule(_))
        ));
    }

    #[test]
    fn adjoint_a1() {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::A, 1).unwrap()).unwrap();
        let m = RepModule::adjoint(&d);
        assert_eq!(m.dim(), 3);
        assert_eq!(m.weights(), &[vec![2], vec![0], vec![-2]]);
        assert_eq!(m.rho(0), d.ad_e(0));
    }

    #[test]
    fn sl2_irrep_matrices() {
        let m = RepModule::sl2_irrep(4);
        assert_eq!(m.dim(), 5);
        assert_eq!(m.weights()[0], vec![4]);
        assert_eq!(m.weights()[4], vec![-4]);
        // trace of h is zero and the eigenvalue multiset is symmetric
        let h = m.rho_e_simple(0).commutator(m.rho_f_simple(0));
        let eigs: Vec<i64> = (0..5)
            .map(|k| h.get(k, k).cloned().unwrap_or_else(Int::zero))
            .map(|v| {
                use num_traits::ToPrimitive;
                v.to_i64().unwrap()
            })
            .collect();
        assert_eq!(eigs.iter().sum::<i64>(), 0);
        let mut neg: Vec<i64> = eigs.iter().map(|v| -v).collect();
        neg.reverse();
        assert_eq!(eigs, neg);
        // m = 2 weights mirror the adjoint
        let two = RepModule::sl2_irrep(2);
        assert_eq!(two.weights(), &[vec![2], vec![0], vec![-2]]);
    }

    #[test]
    fn sl2_irrep_trivial_module() {
        let m = RepModule::sl2_irrep(0);
        assert_eq!(m.dim(), 1);
        assert_eq!(m.weights(), &[vec![0]]);
        assert!(m.rho(0).is_zero());
        assert!(m.divided_powers(0).is_empty());
        // the one-dimensional lattice is not faithful, which the gcd check reports
        assert!(!m.check_admissible().admissible);
    }

    #[test]
    fn direct_sum_and_lattice_index() {
        let a2 = CartanMatrix::standard(Family::A, 2).unwrap();
        let d = LieAlgebraData::build(a2).unwrap();
        let adj = RepModule::adjoint(&d);
        // adjoint lattice = root lattice: index factors = SNF of the Cartan matrix
        assert_eq!(
            adj.lattice_index_factors().into_iter().filter(|v| !One::is_one(v)).collect::<Vec<_>>(),
            vec![int(3)]
        );
        let minu = RepModule::minuscule(d.roots(), &[vec![1, 0]]).unwrap();
        let sum = RepModule::direct_sum(&[adj, minu]).unwrap();
        assert_eq!(sum.dim(), 8 + 3);
        // adjoint + minuscule spans the full weight lattice
        assert!(sum.lattice_index_factors().into_iter().all(|v| One::is_one(&v)));
        assert!(sum.check_admissible().admissible);
    }

    #[test]
    fn multi_orbit_minuscule_union() {
        // A3 with both 4-dimensional orbits: an 8-dimensional admissible
        // module whose weights span the full lattice
        let rs = system(Family::A, 3);
        let m = RepModule::minuscule(&rs, &[vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(m.dim(), 8);
        assert!(m.check_admissible().admissible);
        assert!(m.lattice_index_factors().iter().all(One::is_one));
        // duplicated generators collapse to a single orbit
        let once = RepModule::minuscule(&rs, &[vec![1, 0, 0], vec![1, 0, 0]]).unwrap();
        assert_eq!(once.dim(), 4);
    }

    #[test]
    fn corrupted_module_rejected() {
        let rs = system(Family::C, 2);
        let good = RepModule::minuscule(&rs, &[vec![0, 1]]).unwrap();
        let mut e: Vec<SparseMat<Int>> =
            (0..2).map(|i| good.rho_e_simple(i).clone()).collect();
        let f: Vec<SparseMat<Int>> = (0..2).map(|i| good.rho_f_simple(i).clone()).collect();
        // corrupt: double one entry so h_1 no longer matches the weights
        e[0].set(1, 2, int(2));
        let bad = RepModule::from_generators(&rs, good.weights().to_vec(), e, f);
        assert!(matches!(bad, Err(ModuleError::NotAdmissible(_))));
    }

    #[test]
    fn heights_sorted_nonincreasing() {
        let rs = system(Family::B, 3);
        let m = RepModule::minuscule(&rs, &[vec![1, 0, 0]]).unwrap();
        let hts: Vec<Rat> =
            m.weights().iter().map(|w| weight_height(rs.cartan(), w)).collect();
        for k in 1..hts.len() {
            assert!(hts[k - 1] >= hts[k]);
        }
        assert_eq!(m.dim(), 8);
    }
}
