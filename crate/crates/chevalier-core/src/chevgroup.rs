//! Chevalley group elements over exact rings, for any admissible module.
//!
//! For a module V with basis sorted by weight height, the one-parameter
//! generators are `x_β(ζ) = Σ_m ζ^m·ρ(e_β)^m/m!` — finite sums of the stored
//! integer divided powers, taken over ℤ\[T\] (with `ζ = T`), ℚ, or GF(p).
//! Monomial and diagonal elements `n_i(ξ) = x_i(ξ)y_i(−ξ⁻¹)x_i(ξ)` and
//! `h_i(ξ) = n_i(ξ)n_i(−1)` require a field. The relation suite treats the
//! defining identities of these elements as testable contracts and runs them
//! exhaustively over small fields.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::canbasis::LieAlgebraData;
use crate::exact::ring::{Field, Ring, RingOps};
use crate::exact::{int, Gfp, Int, IntPoly, Rat, SparseMat};
use crate::weights::RepModule;
use crate::weyl::{permword, WeylPerm};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupError {
    /// n- and h-elements need an invertible parameter.
    ZeroParameter,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::ZeroParameter => write!(f, "parameter must be nonzero"),
        }
    }
}

/// `x_β(ζ)`: sum of divided powers scaled by powers of the parameter.
/// Unitriangular (upper for positive β, lower for negative) by the height
/// ordering of the module basis.
pub fn x_gen<R: Ring>(m: &RepModule, root: usize, value: &R) -> SparseMat<R>
where
    for<'a> &'a R: RingOps<R>,
{
    let one = value.one_like();
    let mut acc = SparseMat::identity(m.dim(), &one);
    let mut pw = one.clone();
    for dp in m.divided_powers(root) {
        pw = &pw * value;
        acc = acc.add(&dp.map(|v| &value.embed_int(v) * &pw));
    }
    acc
}

/// `x_i(ζ) = x_{α_i}(ε(i)·ζ)`.
pub fn xi_gen<R: Ring>(m: &RepModule, i: usize, value: &R) -> SparseMat<R>
where
    for<'a> &'a R: RingOps<R>,
{
    let v = signed(value, m.epsilon()[i]);
    x_gen(m, m.roots().simple(i), &v)
}

/// `y_i(ζ) = x_{−α_i}(−ε(i)·ζ)`.
pub fn yi_gen<R: Ring>(m: &RepModule, i: usize, value: &R) -> SparseMat<R>
where
    for<'a> &'a R: RingOps<R>,
{
    let v = signed(value, -m.epsilon()[i]);
    x_gen(m, m.roots().negative(m.roots().simple(i)), &v)
}

fn signed<R: Ring>(value: &R, sign: i8) -> R
where
    for<'a> &'a R: RingOps<R>,
{
    if sign >= 0 {
        value.clone()
    } else {
        -value
    }
}

/// `n_i(ξ) = x_i(ξ)·y_i(−ξ⁻¹)·x_i(ξ)` over a field, ξ ≠ 0.
pub fn n_gen<F: Field>(m: &RepModule, i: usize, xi: &F) -> Result<SparseMat<F>, GroupError>
where
    for<'a> &'a F: RingOps<F>,
{
    let inv = xi.inv().ok_or(GroupError::ZeroParameter)?;
    let x = xi_gen(m, i, xi);
    let y = yi_gen(m, i, &-&inv);
    Ok(x.mul(&y).mul(&x))
}

/// `h_i(ξ) = n_i(ξ)·n_i(−1)`: diagonal with entries `ξ^{⟨α_i^∨,μ⟩}`.
pub fn h_gen<F: Field>(m: &RepModule, i: usize, xi: &F) -> Result<SparseMat<F>, GroupError>
where
    for<'a> &'a F: RingOps<F>,
{
    let minus_one = -&xi.one_like();
    Ok(n_gen(m, i, xi)?.mul(&n_gen(m, i, &minus_one)?))
}

/// `n_β(ξ) = x_β(ξ)·x_{−β}(−(−1)^{ht β}·ξ⁻¹)·x_β(ξ)`; the height sign
/// compensates `[e_β, e_{−β}] = (−1)^{ht β}·h_β`. At a simple root,
/// `n_{α_i}(ξ) = n_i(ε(i)ξ)`.
pub fn n_alpha_gen<F: Field>(m: &RepModule, root: usize, xi: &F) -> Result<SparseMat<F>, GroupError>
where
    for<'a> &'a F: RingOps<F>,
{
    let inv = xi.inv().ok_or(GroupError::ZeroParameter)?;
    let ht = m.roots().height(root);
    let twist = if ht.rem_euclid(2) == 0 { inv } else { -&inv };
    let x = x_gen(m, root, xi);
    let y = x_gen(m, m.roots().negative(root), &-&twist);
    Ok(x.mul(&y).mul(&x))
}

/// `h_β(ξ) = n_β(ξ)·n_β(−1)` — diagonal, like `h_i`.
pub fn h_alpha_gen<F: Field>(m: &RepModule, root: usize, xi: &F) -> Result<SparseMat<F>, GroupError>
where
    for<'a> &'a F: RingOps<F>,
{
    let minus_one = -&xi.one_like();
    Ok(n_alpha_gen(m, root, xi)?.mul(&n_alpha_gen(m, root, &minus_one)?))
}

/// The canonical representative `n_w`: product of `n_i(1)` along a reduced
/// word of w. Well defined because the `n_i(1)` satisfy the braid relations;
/// any input permutation is reduced internally.
pub fn n_w<F: Field>(m: &RepModule, w: &WeylPerm, one: &F) -> SparseMat<F>
where
    for<'a> &'a F: RingOps<F>,
{
    let word = permword(m.roots(), w);
    n_word(m, &word, one)
}

/// `n_w` from a word (reduced internally through the permutation).
pub fn n_word_reduced<F: Field>(m: &RepModule, word: &[usize], one: &F) -> SparseMat<F>
where
    for<'a> &'a F: RingOps<F>,
{
    let w = crate::weyl::wordperm(m.roots(), word).expect("valid generator indices");
    n_w(m, &w, one)
}

fn n_word<F: Field>(m: &RepModule, word: &[usize], one: &F) -> SparseMat<F>
where
    for<'a> &'a F: RingOps<F>,
{
    let mut acc = SparseMat::identity(m.dim(), one);
    for &i in word {
        let n = n_gen(m, i, one).expect("1 is invertible");
        acc = acc.mul(&n);
    }
    acc
}

/// Which of the two one-parameter families a closed-form generator is from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    X,
    Y,
}

/// The adjoint-module matrix of `x_i(t)` or `y_i(t)` assembled directly from
/// the closed formulas (no exponential):
///
/// * `x_i(t)·h_j⁺ = h_j⁺ + |a_{ji}|·t·e_{α_i}⁺`,
/// * `x_i(t)·e_{−α_i}⁺ = e_{−α_i}⁺ + t·h_i⁺ + t²·e_{α_i}⁺`,
/// * `x_i(t)·e_α⁺ = Σ_{0≤r≤p_{i,α}} C(q_{i,α}+r, r)·t^r·e_{α+rα_i}⁺`,
///
/// and the mirror for `y_i(t)`. Must equal [`xi_gen`]/[`yi_gen`] on the
/// adjoint module.
pub fn adjoint_closed_form<R: Ring>(
    d: &LieAlgebraData,
    i: usize,
    value: &R,
    kind: GenKind,
) -> SparseMat<R>
where
    for<'a> &'a R: RingOps<R>,
{
    let rs = d.roots();
    let dim = d.dim();
    let one = value.one_like();
    let mut m = SparseMat::identity(dim, &one);
    let simple = rs.simple(i);
    let (plus_i, minus_i) = match kind {
        GenKind::X => (simple, rs.negative(simple)),
        GenKind::Y => (rs.negative(simple), simple),
    };
    // value^r cache
    let mut powers = vec![one.clone()];
    for _ in 0..4 {
        let next = powers.last().expect("nonempty") * value;
        powers.push(next);
    }
    // Cartan columns
    for j in 0..rs.rank() {
        let a_ji = rs.cartan().entry(j, i);
        if a_ji != 0 {
            let coeff = &value.embed_int(&int(a_ji.abs())) * &powers[1];
            m.set(d.basis_of_root(plus_i), d.basis_of_u(j), coeff);
        }
    }
    // opposite simple column: + t·h_i^+ + t²·e_{plus}^+
    m.set(d.basis_of_u(i), d.basis_of_root(minus_i), powers[1].clone());
    m.set(d.basis_of_root(plus_i), d.basis_of_root(minus_i), powers[2].clone());
    // generic root columns
    for alpha in 0..rs.num_roots() {
        if alpha == plus_i || alpha == minus_i {
            continue;
        }
        let (p, q) = rs.string_pq(i, alpha);
        let (steps, base) = match kind {
            GenKind::X => (p, q),
            GenKind::Y => (q, p),
        };
        let dir: i64 = if kind == GenKind::X { 1 } else { -1 };
        let mut cur = alpha;
        for r in 1..=steps {
            let target: Vec<i64> = rs
                .root(cur)
                .iter()
                .enumerate()
                .map(|(j, &v)| v + dir * i64::from(j == i))
                .collect();
            cur = rs.index_of(&target).expect("inside the root string");
            let c = binom(base + r, r);
            let coeff = &value.embed_int(&c) * &powers[r as usize];
            m.set(d.basis_of_root(cur), d.basis_of_root(alpha), coeff);
        }
    }
    m
}

fn binom(n: i64, k: i64) -> Int {
    let mut acc = Int::one();
    for j in 0..k {
        acc = acc * int(n - j) / int(j + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// relation suite

/// Result of one identity family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

/// Full report of the relation suite on one module over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub label: String,
    pub seed: u64,
    pub outcomes: Vec<SuiteOutcome>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "relation suite [{}] seed={}", self.label, self.seed)?;
        for o in &self.outcomes {
            match (&o.pass, &o.witness) {
                (true, _) => writeln!(f, "  pass  {:<22} ({} checks)", o.name, o.checked)?,
                (false, Some(w)) => writeln!(f, "  FAIL  {:<22} {w}", o.name)?,
                (false, None) => writeln!(f, "  FAIL  {:<22}", o.name)?,
            }
        }
        Ok(())
    }
}

/// Parameter pool for the suite over one field.
#[derive(Clone, Debug)]
pub struct SuiteParams<F> {
    pub label: String,
    /// Candidate parameters (must contain 0 and 1).
    pub elements: Vec<F>,
    pub one: F,
    pub seed: u64,
}

/// SplitMix64 — a tiny deterministic generator for suite sampling.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Exhaustive pool for GF(p) when p ≤ 9, seeded sample otherwise.
pub fn gfp_params(p: u64, seed: u64) -> SuiteParams<Gfp> {
    let field = Gfp::field(p).expect("prime modulus");
    let elements = if p <= 9 {
        field.all_elements()
    } else {
        let mut rng = SplitMix(seed);
        let mut pool = vec![field.elt(0), field.elt(1), field.elt(-1)];
        while pool.len() < 8 {
            let v = field.elt((rng.next_u64() % p) as i64);
            if !pool.contains(&v) {
                pool.push(v);
            }
        }
        pool
    };
    SuiteParams { label: alloc::format!("GF({p})"), elements, one: field.elt(1), seed }
}

/// Small seeded rational pool: 0, ±1 and a few short fractions.
pub fn rat_params(seed: u64) -> SuiteParams<Rat> {
    let mut rng = SplitMix(seed);
    let mut pool = vec![
        Rat::zero(),
        Rat::one(),
        -Rat::one(),
    ];
    while pool.len() < 7 {
        let num = (rng.next_u64() % 7) as i64 - 3;
        let den = (rng.next_u64() % 3) as i64 + 1;
        let v = Rat::new(int(num), int(den));
        if !pool.contains(&v) {
            pool.push(v);
        }
    }
    SuiteParams { label: String::from("Q"), elements: pool, one: Rat::one(), seed }
}

/// Run every identity of the suite on one module. Each identity is
/// checked for all parameters in the pool (the pool is exhaustive for small
/// fields); failures carry a witness.
pub fn relation_suite<F: Field>(m: &RepModule, params: &SuiteParams<F>) -> SuiteReport
where
    for<'a> &'a F: RingOps<F>,
{
    let rs = m.roots();
    let one = &params.one;
    let nonzero: Vec<F> = params.elements.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut outcomes = Vec::new();

    // cache x-generators per (root, param)
    let xmat = |root: usize, v: &F| x_gen(m, root, v);

    // 1. additivity x_a(z+w) = x_a(z)x_a(w)
    outcomes.push(run_check("additivity", || {
        let mut n = 0;
        for root in 0..rs.num_roots() {
            for z in &params.elements {
                for w in &params.elements {
                    n += 1;
                    if xmat(root, &(z + w)) != xmat(root, z).mul(&xmat(root, w)) {
                        return Err((alloc::format!("root {}, params {z:?},{w:?}", root + 1), n));
                    }
                }
            }
        }
        Ok(n)
    }));

    // 2. inverse x_a(z) x_a(-z) = 1
    outcomes.push(run_check("inverse", || {
        let id = SparseMat::identity(m.dim(), one);
        let mut n = 0;
        for root in 0..rs.num_roots() {
            for z in &params.elements {
                n += 1;
                if xmat(root, z).mul(&xmat(root, &-z)) != id {
                    return Err((alloc::format!("root {}, param {z:?}", root + 1), n));
                }
            }
        }
        Ok(n)
    }));

    // 3. commuting pairs: a+b not a root, b != -a
    outcomes.push(run_check("commuting-pair", || {
        let mut n = 0;
        for a in 0..rs.num_roots() {
            for b in a + 1..rs.num_roots() {
                if rs.negative(a) == b || rs.root_sum(a, b).is_some() {
                    continue;
                }
                for z in &nonzero {
                    for w in &nonzero {
                        n += 1;
                        let left = xmat(a, z).mul(&xmat(b, w));
                        let right = xmat(b, w).mul(&xmat(a, z));
                        if left != right {
                            return Err((alloc::format!("roots {},{}", a + 1, b + 1), n));
                        }
                    }
                }
            }
        }
        Ok(n)
    }));

    // 4. n-conjugation: n_i(x) x_a(z) n_i(x)^-1 = x_{s_i a}((-1)^{q_{i,a}} z x^{-<a_i',a>})
    outcomes.push(run_check("n-conjugation", || {
        let mut n = 0;
        for i in 0..rs.rank() {
            for x in &nonzero {
                let ni = n_gen(m, i, x).expect("nonzero");
                let ni_inv = n_gen(m, i, &-x).expect("nonzero");
                let xinv = x.inv().expect("nonzero");
                for a in 0..rs.num_roots() {
                    let sa = rs.refl(i, a);
                    let (_, q) = rs.string_pq(i, a);
                    let pairing = rs.pairing_simple(i, a);
                    for z in &nonzero {
                        n += 1;
                        let factor = &power(&xinv, x, pairing) * z;
                        let factor = if q % 2 == 0 { factor } else { -&factor };
                        let left = ni.mul(&xmat(a, z)).mul(&ni_inv);
                        if left != xmat(sa, &factor) {
                            return Err((alloc::format!("i={}, root {}, x={x:?}, z={z:?}", i + 1, a + 1), n));
                        }
                    }
                }
            }
        }
        Ok(n)
    }));

    // 5. h-conjugation: h_i(x) x_a(z) h_i(x)^-1 = x_a(z x^{<a_i',a>})
    outcomes.push(run_check("h-conjugation", || {
        let mut n = 0;
        for i in 0..rs.rank() {
            for x in &nonzero {
                let hi = h_gen(m, i, x).expect("nonzero");
                let hi_inv = h_gen(m, i, &x.inv().expect("nonzero")).expect("nonzero");
                let xinv = x.inv().expect("nonzero");
                for a in 0..rs.num_roots() {
                    let pairing = rs.pairing_simple(i, a);
                    for z in &nonzero {
                        n += 1;
                        let factor = &power(x, &xinv, pairing) * z;
                        let left = hi.mul(&xmat(a, z)).mul(&hi_inv);
                        if left != xmat(a, &factor) {
                            return Err((alloc::format!("i={}, root {}", i + 1, a + 1), n));
                        }
                    }
                }
            }
        }
        Ok(n)
    }));

    // 6. h-diagonal entries x^{<a_i',mu>}
    outcomes.push(run_check("h-diagonal", || {
        let mut n = 0;
        for i in 0..rs.rank() {
            for x in &nonzero {
                let hi = h_gen(m, i, x).expect("nonzero");
                if !hi.is_diagonal() {
                    return Err((alloc::format!("h_{}({x:?}) not diagonal", i + 1), n));
                }
                let xinv = x.inv().expect("nonzero");
                for k in 0..m.dim() {
                    n += 1;
                    let want = power(x, &xinv, m.weight(k)[i]);
                    let got = hi.get(k, k).cloned().unwrap_or_else(|| one.zero_like());
                    if got != want {
                        return Err((alloc::format!("h_{} diag {}", i + 1, k + 1), n));
                    }
                }
            }
        }
        Ok(n)
    }));

    // 7. n_i(x)^2 = h_i(-1), n_i(x)^4 = 1
    outcomes.push(run_check("n-squared", || {
        let id = SparseMat::identity(m.dim(), one);
        let mut n = 0;
        for i in 0..rs.rank() {
            let h_minus = h_gen(m, i, &-one).expect("nonzero");
            for x in &nonzero {
                n += 1;
                let ni = n_gen(m, i, x).expect("nonzero");
                let sq = ni.mul(&ni);
                if sq != h_minus {
                    return Err((alloc::format!("n_{}({x:?})^2", i + 1), n));
                }
                if sq.mul(&sq) != id {
                    return Err((alloc::format!("n_{}({x:?})^4", i + 1), n));
                }
            }
        }
        Ok(n)
    }));

    // 8. h-braid: n_j(x) h_i(z) n_j(x)^-1 = h_i(z) h_j(z^{-a_ij})
    outcomes.push(run_check("nh-conjugation", || {
        let mut n = 0;
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                let a_ij = rs.cartan().entry(i, j);
                for x in &nonzero {
                    let nj = n_gen(m, j, x).expect("nonzero");
                    let nj_inv = n_gen(m, j, &-x).expect("nonzero");
                    for z in &nonzero {
                        n += 1;
                        let zi = z.inv().expect("nonzero");
                        let hi = h_gen(m, i, z).expect("nonzero");
                        let hj = h_gen(m, j, &power(&zi, z, a_ij)).expect("nonzero");
                        if nj.mul(&hi).mul(&nj_inv) != hi.mul(&hj) {
                            return Err((alloc::format!("i={}, j={}", i + 1, j + 1), n));
                        }
                    }
                }
            }
        }
        Ok(n)
    }));

    // 9. braid relations on n_i(1)
    outcomes.push(run_check("braid", || {
        let mut n = 0;
        for i in 0..rs.rank() {
            for j in i + 1..rs.rank() {
                n += 1;
                let mij = crate::weyl::braid_order(rs, i, j);
                let ni = n_gen(m, i, one).expect("one");
                let nj = n_gen(m, j, one).expect("one");
                let mut left = SparseMat::identity(m.dim(), one);
                let mut right = left.clone();
                for k in 0..mij {
                    left = left.mul(if k % 2 == 0 { &ni } else { &nj });
                    right = right.mul(if k % 2 == 0 { &nj } else { &ni });
                }
                if left != right {
                    return Err((alloc::format!("pair ({}, {})", i + 1, j + 1), n));
                }
            }
        }
        Ok(n)
    }));

    // 10. kernel of the h-parametrization: prod h_i(x_i) = 1 iff
    //     prod x_i^{<a_i',mu>} = 1 for every basis weight mu
    outcomes.push(run_check("h-kernel", || {
        let mut rng = SplitMix(params.seed ^ 0xd1b54a32d192ed03);
        let l = rs.rank();
        let mut tuples: Vec<Vec<F>> = vec![
            vec![one.clone(); l],
            vec![-one; l],
        ];
        for _ in 0..20 {
            let t: Vec<F> =
                (0..l).map(|_| nonzero[(rng.next_u64() as usize) % nonzero.len()].clone()).collect();
            tuples.push(t);
        }
        let id = SparseMat::identity(m.dim(), one);
        let mut n = 0;
        for t in &tuples {
            n += 1;
            let mut h = id.clone();
            for (i, x) in t.iter().enumerate() {
                h = h.mul(&h_gen(m, i, x).expect("nonzero"));
            }
            let trivial_on_weights = (0..m.dim()).all(|k| {
                let mut acc = one.clone();
                for (i, x) in t.iter().enumerate() {
                    let xinv = x.inv().expect("nonzero");
                    acc = &acc * &power(x, &xinv, m.weight(k)[i]);
                }
                acc == *one
            });
            if (h == id) != trivial_on_weights {
                return Err((alloc::format!("tuple {t:?}"), n));
            }
        }
        Ok(n)
    }));

    SuiteReport { label: params.label.clone(), seed: params.seed, outcomes }
}

fn run_check(
    name: &'static str,
    body: impl FnOnce() -> Result<usize, (String, usize)>,
) -> SuiteOutcome {
    match body() {
        Ok(checked) => SuiteOutcome { name, pass: true, checked, witness: None },
        Err((witness, checked)) => {
            SuiteOutcome { name, pass: false, checked, witness: Some(witness) }
        }
    }
}

/// x^e for signed e, with the inverse precomputed by the caller.
fn power<F: Field>(x: &F, xinv: &F, e: i64) -> F
where
    for<'a> &'a F: RingOps<F>,
{
    let (base, n) = if e >= 0 { (x, e) } else { (xinv, -e) };
    let mut acc = x.one_like();
    for _ in 0..n {
        acc = &acc * base;
    }
    acc
}

/// Convenience: specialize a ℤ\[T\]-matrix at a value in another ring.
pub fn specialize_matrix<R: Ring>(m: &SparseMat<IntPoly>, value: &R) -> SparseMat<R>
where
    for<'a> &'a R: RingOps<R>,
{
    m.map(|p| p.specialize(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanMatrix, Family};
    use crate::exact::rat;
    use crate::roots::RootSystem;

    fn a1_adjoint() -> RepModule {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::A, 1).unwrap()).unwrap();
        RepModule::adjoint(&d)
    }

    #[test]
    fn a1_adjoint_x_over_zt() {
        let m = a1_adjoint();
        let t = IntPoly::t();
        let x = xi_gen(&m, 0, &t);
        // [[1, 2T, T^2], [0, 1, T], [0, 0, 1]]
        assert_eq!(x.get(0, 0), Some(&IntPoly::constant(int(1))));
        assert_eq!(x.get(0, 1), Some(&IntPoly::from_coeffs(vec![int(0), int(2)])));
        assert_eq!(x.get(0, 2), Some(&IntPoly::from_coeffs(vec![int(0), int(0), int(1)])));
        assert_eq!(x.get(1, 2), Some(&t));
        assert_eq!(x.nnz(), 6);
        let y = yi_gen(&m, 0, &t);
        assert_eq!(y.get(2, 0), Some(&IntPoly::from_coeffs(vec![int(0), int(0), int(1)])));
        assert_eq!(y.get(2, 1), Some(&IntPoly::from_coeffs(vec![int(0), int(2)])));
        assert!(x.is_unitriangular(true));
        assert!(y.is_unitriangular(false));
    }

    #[test]
    fn a1_adjoint_n_h_over_q() {
        let m = a1_adjoint();
        let xi = rat(3);
        let n = n_gen(&m, 0, &xi).unwrap();
        // antidiagonal (xi^2, -1, xi^-2)
        assert_eq!(n.get(0, 2), Some(&rat(9)));
        assert_eq!(n.get(1, 1), Some(&rat(-1)));
        assert_eq!(n.get(2, 0), Some(&Rat::new(int(1), int(9))));
        assert_eq!(n.nnz(), 3);
        let h = h_gen(&m, 0, &xi).unwrap();
        assert_eq!(h.get(0, 0), Some(&rat(9)));
        assert_eq!(h.get(1, 1), Some(&rat(1)));
        assert_eq!(h.get(2, 2), Some(&Rat::new(int(1), int(9))));
        // h_1(-1) = identity on the adjoint (nontrivial kernel)
        let hm = h_gen(&m, 0, &rat(-1)).unwrap();
        assert_eq!(hm, SparseMat::identity(3, &rat(1)));
    }

    #[test]
    fn x_at_zero_is_identity() {
        let rs = RootSystem::generate(CartanMatrix::standard(Family::C, 2).unwrap()).unwrap();
        let m = RepModule::minuscule(&rs, &[vec![0, 1]]).unwrap();
        for root in 0..rs.num_roots() {
            assert_eq!(
                x_gen(&m, root, &Rat::zero()),
                SparseMat::identity(m.dim(), &rat(1))
            );
        }
    }

    #[test]
    fn closed_form_matches_exponential() {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::G, 2).unwrap()).unwrap();
        let m = RepModule::adjoint(&d);
        let t = IntPoly::t();
        for i in 0..2 {
            assert_eq!(adjoint_closed_form(&d, i, &t, GenKind::X), xi_gen(&m, i, &t));
            assert_eq!(adjoint_closed_form(&d, i, &t, GenKind::Y), yi_gen(&m, i, &t));
        }
    }

    #[test]
    fn specialization_commutes() {
        let rs = RootSystem::generate(CartanMatrix::standard(Family::C, 2).unwrap()).unwrap();
        let m = RepModule::minuscule(&rs, &[vec![0, 1]]).unwrap();
        let xt = x_gen(&m, 2, &IntPoly::t());
        let f7 = Gfp::field(7).unwrap();
        for v in 0..7 {
            let z = f7.elt(v);
            assert_eq!(specialize_matrix(&xt, &z), x_gen(&m, 2, &z));
        }
    }

    #[test]
    fn n_w_independent_of_reduced_word() {
        let rs = RootSystem::generate(CartanMatrix::standard(Family::A, 2).unwrap()).unwrap();
        let m = RepModule::minuscule(&rs, &[vec![1, 0]]).unwrap();
        let f5 = Gfp::field(5).unwrap();
        let a = n_word_reduced(&m, &[0, 1, 0], &f5.elt(1));
        let b = n_word_reduced(&m, &[1, 0, 1], &f5.elt(1));
        assert_eq!(a, b);
        // n_{s_i} = n_i(1), identity for the empty word
        let id = n_word_reduced(&m, &[], &f5.elt(1));
        assert_eq!(id, SparseMat::identity(m.dim(), &f5.elt(1)));
        assert_eq!(n_word_reduced(&m, &[0], &f5.elt(1)), n_gen(&m, 0, &f5.elt(1)).unwrap());
    }

    #[test]
    fn n_alpha_at_simple_matches_n_i() {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::G, 2).unwrap()).unwrap();
        let m = RepModule::adjoint(&d);
        let f7 = Gfp::field(7).unwrap();
        for i in 0..2 {
            let eps = m.epsilon()[i];
            // n_{alpha_i}(eps(i)) = n_i(1) by n_{alpha_i}(xi) = n_i(eps(i) xi)
            let lhs = n_alpha_gen(&m, m.roots().simple(i), &f7.elt(eps.into())).unwrap();
            let rhs = n_gen(&m, i, &f7.elt(1)).unwrap();
            assert_eq!(lhs, rhs);
        }
        // inverse law and diagonality of h_alpha
        for root in 0..d.roots().num_roots() {
            let n = n_alpha_gen(&m, root, &f7.elt(3)).unwrap();
            let ninv = n_alpha_gen(&m, root, &f7.elt(-3)).unwrap();
            assert_eq!(n.mul(&ninv), SparseMat::identity(m.dim(), &f7.elt(1)));
            let h = h_alpha_gen(&m, root, &f7.elt(3)).unwrap();
            assert!(h.is_diagonal());
        }
    }

    #[test]
    fn f4_adjoint_n_has_order_four_over_gf3() {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::F, 4).unwrap()).unwrap();
        let m = RepModule::adjoint(&d);
        let f3 = Gfp::field(3).unwrap();
        let id = SparseMat::identity(m.dim(), &f3.elt(1));
        for i in 0..4 {
            let n = n_gen(&m, i, &f3.elt(1)).unwrap();
            let h_minus = h_gen(&m, i, &f3.elt(-1)).unwrap();
            assert_eq!(n.mul(&n), h_minus);
            assert_eq!(n.pow(4, &f3.elt(1)), id);
        }
    }

    #[test]
    fn closed_form_at_zero_is_identity() {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::A, 2).unwrap()).unwrap();
        let m = RepModule::adjoint(&d);
        let zero = IntPoly::zero();
        let id = SparseMat::identity(m.dim(), &IntPoly::constant(int(1)));
        assert_eq!(adjoint_closed_form(&d, 0, &zero, GenKind::X), id);
        assert_eq!(adjoint_closed_form(&d, 1, &zero, GenKind::Y), id);
    }

    #[test]
    fn suite_passes_a2_adjoint_gf3() {
        let d = LieAlgebraData::build(CartanMatrix::standard(Family::A, 2).unwrap()).unwrap();
        let m = RepModule::adjoint(&d);
        let report = relation_suite(&m, &gfp_params(3, 1));
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn suite_detects_corruption() {
        // corrupt a divided power and watch additivity fail
        let rs = RootSystem::generate(CartanMatrix::standard(Family::C, 2).unwrap()).unwrap();
        let mut m = RepModule::minuscule(&rs, &[vec![0, 1]]).unwrap();
        // break rho(e_beta) for the highest root by doctoring its dp table
        let bad = {
            let mut b = m.rho(3).clone();
            b.set(0, 3, int(5));
            b
        };
        m = {
            // rebuild a module value with the corrupted matrix via direct field
            // access within the crate (test-only surgery)
            let mut clone = m.clone();
            let dp = clone.test_only_dp_mut();
            dp[3][0] = bad;
            clone
        };
        let report = relation_suite(&m, &gfp_params(5, 7));
        assert!(!report.pass());
    }
}
