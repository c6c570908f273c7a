//! Generation and indexing of the finite root system Φ(A).
//!
//! Positive roots are produced by the orbit algorithm (closure of the simple
//! roots under the simple reflections, skipping `s_i(α_i)`), then ordered by
//! increasing height with ties broken by descending lexicographic order on
//! the coefficient tuples — the ordering that all golden tables downstream
//! rely on. Roots `N+1..2N` are the negatives, in the same order. Sum,
//! string, height and length-class tables are built eagerly; a `RootSystem`
//! is immutable after generation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{CartanMatrix, ClassKind};

/// Hard caps used as a defense against non-finite input that slipped past
/// classification: no finite block has more than 120 positive roots or a
/// coefficient above 6.
const MAX_POS_PER_BLOCK: usize = 120;
const MAX_COEFF: i64 = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootsError {
    NotFiniteType,
    /// A coefficient vector that is not in Φ.
    NotARoot(Vec<i64>),
}

impl fmt::Display for RootsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsError::NotFiniteType => write!(f, "matrix is not of finite type"),
            RootsError::NotARoot(v) => write!(f, "{v:?} is not a root"),
        }
    }
}

/// Per-block data of a (possibly decomposable) root system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    /// Vertices of I in this block, sorted.
    pub vertices: Vec<usize>,
    /// Squared-length ratio e ∈ {1, 2, 3} (1 for simply laced).
    pub e: i64,
    /// Index of the unique highest root of the block.
    pub highest: usize,
    /// Index of the unique highest short root (only when e > 1).
    pub highest_short: Option<usize>,
}

/// The finite root system of a Cartan matrix, with all derived tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    nplus: usize,
    roots: Vec<Vec<i64>>,
    index: BTreeMap<Vec<i64>, usize>,
    /// (2N)² table: 0 = sum not a root, else index+1.
    sum_table: Vec<u32>,
    heights: Vec<i64>,
    /// (p, q) per (i, root): `strings[i * 2N + r]`, with the convention
    /// q_{i,α_i} = p_{i,−α_i} = 2 at ±α_i.
    strings: Vec<(u8, u8)>,
    long: Vec<bool>,
    blocks: Vec<Block>,
    block_of_vertex: Vec<usize>,
}

impl RootSystem {
    /// Run the orbit algorithm and build every table. Errors unless every
    /// indecomposable block classifies as finite type.
    pub fn generate(cartan: CartanMatrix) -> Result<RootSystem, RootsError> {
        let comps = cartan.components();
        for c in &comps {
            match cartan.submatrix(c).classify() {
                Ok(ClassKind::Finite) => {}
                _ => return Err(RootsError::NotFiniteType),
            }
        }
        let l = cartan.size();
        let cap = MAX_POS_PER_BLOCK * comps.len();

        // orbit algorithm on positive tuples
        let mut pos: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| i64::from(j == i)).collect())
            .collect();
        let mut seen: BTreeMap<Vec<i64>, ()> = pos.iter().map(|r| (r.clone(), ())).collect();
        let mut k = 0;
        while k < pos.len() {
            for i in 0..l {
                if pos[k][i] == 1 && pos[k].iter().enumerate().all(|(j, &v)| j == i || v == 0) {
                    continue; // skip s_i(alpha_i) = -alpha_i
                }
                let nr = refl_coeffs(&cartan, i, &pos[k]);
                if nr.iter().any(|&v| v.abs() > MAX_COEFF) {
                    return Err(RootsError::NotFiniteType);
                }
                if !seen.contains_key(&nr) {
                    seen.insert(nr.clone(), ());
                    pos.push(nr);
                    if pos.len() > cap {
                        return Err(RootsError::NotFiniteType);
                    }
                }
            }
            k += 1;
        }
        // paper ordering: stable descending lexicographic, then stable by height
        pos.sort_by(|a, b| b.cmp(a));
        pos.sort_by_key(|r| r.iter().sum::<i64>());

        let nplus = pos.len();
        let mut roots = pos;
        for k in 0..nplus {
            let neg: Vec<i64> = roots[k].iter().map(|v| -v).collect();
            roots.push(neg);
        }
        let index: BTreeMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let n2 = 2 * nplus;
        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();

        let mut sum_table = vec![0u32; n2 * n2];
        for a in 0..n2 {
            for b in 0..n2 {
                let s: Vec<i64> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                if let Some(&idx) = index.get(&s) {
                    sum_table[a * n2 + b] = (idx + 1) as u32;
                }
            }
        }

        let mut strings = vec![(0u8, 0u8); l * n2];
        for i in 0..l {
            for r in 0..n2 {
                strings[i * n2 + r] = string_scan(&roots, &index, l, i, r);
            }
        }

        // length classes: W-orbits of the simple roots; short simples are
        // those of minimal squared length within their block
        let (blocks, block_of_vertex, long) = length_classes(&cartan, &comps, &roots, &heights);

        Ok(RootSystem {
            cartan,
            nplus,
            roots,
            index,
            sum_table,
            heights,
            strings,
            long,
            blocks,
            block_of_vertex,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Rank l = |I|.
    pub fn rank(&self) -> usize {
        self.cartan.size()
    }

    /// N = |Φ⁺|.
    pub fn num_positive(&self) -> usize {
        self.nplus
    }

    /// 2N.
    pub fn num_roots(&self) -> usize {
        2 * self.nplus
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.roots[idx]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.heights[idx]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.nplus
    }

    /// Index of −β for the root β.
    pub fn negative(&self, idx: usize) -> usize {
        if idx < self.nplus {
            idx + self.nplus
        } else {
            idx - self.nplus
        }
    }

    /// Index of the simple root α_i.
    pub fn simple(&self, i: usize) -> usize {
        debug_assert!(self.roots[i].iter().enumerate().all(|(j, &v)| v == i64::from(j == i)));
        i
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Index of a coefficient vector, or the error naming it.
    pub fn require_root(&self, coeffs: &[i64]) -> Result<usize, RootsError> {
        self.index_of(coeffs).ok_or_else(|| RootsError::NotARoot(coeffs.to_vec()))
    }

    /// Index of β_a + β_b if it is a root.
    pub fn root_sum(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.sum_table[a * self.num_roots() + b];
        if v == 0 {
            None
        } else {
            Some((v - 1) as usize)
        }
    }

    /// Apply s_i to a root, returning the index of the image.
    pub fn refl(&self, i: usize, idx: usize) -> usize {
        let img = refl_coeffs(&self.cartan, i, &self.roots[idx]);
        self.index[&img]
    }

    /// String numbers (p, q) of the α_i-string through β: p is the largest m
    /// with β + m·α_i ∈ Φ, q the largest with β − m·α_i ∈ Φ, extended by the
    /// convention q = 2, p = 0 at β = α_i (and mirrored at −α_i).
    pub fn string_pq(&self, i: usize, idx: usize) -> (i64, i64) {
        let (p, q) = self.strings[i * self.num_roots() + idx];
        (i64::from(p), i64::from(q))
    }

    /// ⟨α_i^∨, β⟩ = Σ_j a_{ij} β_j.
    pub fn pairing_simple(&self, i: usize, idx: usize) -> i64 {
        (0..self.rank()).map(|j| self.cartan.entry(i, j) * self.roots[idx][j]).sum()
    }

    /// Coefficients of the coroot: h_β = Σ n_i^∨ h_i with
    /// n_i^∨ = (L_i / L_β)·n_i, where L is the squared-length class
    /// (e for long roots of a block with ratio e, 1 for short).
    pub fn coroot_coeffs(&self, idx: usize) -> Vec<i64> {
        let l = self.rank();
        let lb = self.len2_class(idx);
        (0..l)
            .map(|i| {
                let li = self.len2_class(self.simple(i));
                let num = li * self.roots[idx][i];
                debug_assert_eq!(num % lb, 0, "coroot coefficients must be integral");
                num / lb
            })
            .collect()
    }

    /// β(h_α) = Σ_i n_i^∨(α)·⟨α_i^∨, β⟩-style pairing; equals q − p of the
    /// α-string through β.
    pub fn pairing(&self, alpha: usize, beta: usize) -> i64 {
        let co = self.coroot_coeffs(alpha);
        (0..self.rank()).map(|i| co[i] * self.pairing_simple(i, beta)).sum()
    }

    pub fn is_long(&self, idx: usize) -> bool {
        self.long[idx]
    }

    /// Indices (0-based) of the short roots, ascending. Empty when simply laced.
    pub fn short_roots(&self) -> Vec<usize> {
        (0..self.num_roots()).filter(|&r| !self.long[r]).collect()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The block a vertex of I belongs to.
    pub fn block_of_vertex(&self, i: usize) -> usize {
        self.block_of_vertex[i]
    }

    /// The highest root (of the only block; panics if decomposable).
    pub fn highest_root(&self) -> usize {
        assert_eq!(self.blocks.len(), 1, "highest root is per block");
        self.blocks[0].highest
    }

    pub fn highest_short_root(&self) -> Option<usize> {
        assert_eq!(self.blocks.len(), 1, "highest short root is per block");
        self.blocks[0].highest_short
    }

    /// Squared-length class of a root: e if long in a block with ratio e, else 1.
    fn len2_class(&self, idx: usize) -> i64 {
        if !self.long[idx] {
            return 1;
        }
        // block of the root = block of any vertex with nonzero coefficient
        let v = self.roots[idx].iter().position(|&c| c != 0).expect("roots are nonzero");
        self.blocks[self.block_of_vertex[v]].e
    }
}

/// s_i(r) = r − ⟨α_i^∨, r⟩ α_i on coefficient vectors.
pub fn refl_coeffs(cartan: &CartanMatrix, i: usize, r: &[i64]) -> Vec<i64> {
    let l = cartan.size();
    let m: i64 = (0..l).map(|j| cartan.entry(i, j) * r[j]).sum();
    let mut nr = r.to_vec();
    nr[i] -= m;
    nr
}

fn string_scan(
    roots: &[Vec<i64>],
    index: &BTreeMap<Vec<i64>, usize>,
    l: usize,
    i: usize,
    r: usize,
) -> (u8, u8) {
    let is_simple_i =
        roots[r].iter().enumerate().all(|(j, &v)| v == i64::from(j == i));
    let is_neg_simple_i =
        roots[r].iter().enumerate().all(|(j, &v)| v == -i64::from(j == i));
    if is_simple_i {
        return (0, 2);
    }
    if is_neg_simple_i {
        return (2, 0);
    }
    let step = |m: i64| -> bool {
        let v: Vec<i64> = (0..l).map(|j| roots[r][j] + m * i64::from(j == i)).collect();
        index.contains_key(&v)
    };
    let mut p = 0u8;
    while step(i64::from(p) + 1) {
        p += 1;
    }
    let mut q = 0u8;
    while step(-(i64::from(q) + 1)) {
        q += 1;
    }
    (p, q)
}

fn length_classes(
    cartan: &CartanMatrix,
    comps: &[Vec<usize>],
    roots: &[Vec<i64>],
    heights: &[i64],
) -> (Vec<Block>, Vec<usize>, Vec<bool>) {
    let l = cartan.size();
    let n2 = roots.len();
    let index: BTreeMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let mut block_of_vertex = vec![0usize; l];
    for (bi, c) in comps.iter().enumerate() {
        for &v in c {
            block_of_vertex[v] = bi;
        }
    }
    // relative squared lengths of the simple roots within each block: if
    // a_{ij} = -1 and a_{ji} = -r then |α_i|² = r·|α_j|²; propagate along the
    // tree and normalize the minimum of each block to 1
    let mut len2 = vec![(1i64, 1i64); l]; // (num, den) relative to block anchor
    for c in comps {
        let anchor = c[0];
        let mut stack = vec![anchor];
        let mut done = vec![anchor];
        while let Some(i) = stack.pop() {
            for &j in c.iter() {
                if j != i && cartan.entry(i, j) != 0 && !done.contains(&j) {
                    // |α_j|² / |α_i|² = a_{ij} / a_{ji}
                    let (ni, di) = len2[i];
                    let nj = ni * cartan.entry(i, j).abs();
                    let dj = di * cartan.entry(j, i).abs();
                    let g = gcd(nj, dj);
                    len2[j] = (nj / g, dj / g);
                    done.push(j);
                    stack.push(j);
                }
            }
        }
        // normalize: minimum length in block becomes 1
        let min = c
            .iter()
            .map(|&i| len2[i])
            .min_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)))
            .expect("nonempty block");
        for &i in c {
            let (n, d) = len2[i];
            // len2[i] / min, guaranteed integral in a finite block
            let num = n * min.1;
            let den = d * min.0;
            debug_assert_eq!(num % den, 0);
            len2[i] = (num / den, 1);
        }
    }
    // orbit closure: a root is short iff it lies in the W-orbit of a short simple
    let mut short = vec![false; n2];
    let mut frontier: Vec<usize> = Vec::new();
    for i in 0..l {
        if len2[i].0 == 1 && comps[block_of_vertex[i]].iter().any(|&j| len2[j].0 > 1) {
            short[i] = true;
            frontier.push(i);
        }
    }
    while let Some(r) = frontier.pop() {
        for i in 0..l {
            let img = index[&refl_coeffs(cartan, i, &roots[r])];
            if !short[img] {
                short[img] = true;
                frontier.push(img);
            }
        }
    }
    let long: Vec<bool> = short.iter().map(|&s| !s).collect();

    let blocks = comps
        .iter()
        .map(|c| {
            let e = c.iter().map(|&i| len2[i].0).max().unwrap_or(1);
            let in_block = |r: usize| {
                roots[r].iter().enumerate().any(|(j, &v)| v != 0 && c.contains(&j))
            };
            let highest = (0..n2)
                .filter(|&r| in_block(r))
                .max_by_key(|&r| heights[r])
                .expect("block has roots");
            let highest_short = if e > 1 {
                (0..n2)
                    .filter(|&r| in_block(r) && !long[r])
                    .max_by_key(|&r| heights[r])
            } else {
                None
            };
            Block { vertices: c.clone(), e, highest, highest_short }
        })
        .collect();
    (blocks, block_of_vertex, long)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn system(fam: Family, rank: usize) -> RootSystem {
        RootSystem::generate(CartanMatrix::standard(fam, rank).unwrap()).unwrap()
    }

    #[test]
    fn g2_positive_roots_in_paper_order() {
        let rs = system(Family::G, 2);
        let expected: Vec<Vec<i64>> = [
            [1, 0],
            [0, 1],
            [1, 1],
            [1, 2],
            [1, 3],
            [2, 3],
        ]
        .iter()
        .map(|r| r.to_vec())
        .collect();
        assert_eq!(&rs.roots()[..6], &expected[..]);
        assert_eq!(rs.num_positive(), 6);
        // negatives mirror the positives
        assert_eq!(rs.root(6), &[-1, 0]);
        assert_eq!(rs.root(11), &[-2, -3]);
    }

    #[test]
    fn a1_is_plus_minus_alpha() {
        let rs = system(Family::A, 1);
        assert_eq!(rs.roots(), &[vec![1], vec![-1]]);
        assert_eq!(rs.highest_root(), 0);
    }

    #[test]
    fn rank_two_positive_systems() {
        let a2 = system(Family::A, 2);
        assert_eq!(&a2.roots()[..3], &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let c2 = system(Family::C, 2);
        assert_eq!(
            &c2.roots()[..4],
            &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn counts_match_tables() {
        for (fam, rank, n) in [
            (Family::F, 4, 24),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::A, 5, 15),
            (Family::B, 4, 16),
            (Family::C, 4, 16),
            (Family::D, 5, 20),
        ] {
            assert_eq!(system(fam, rank).num_positive(), n, "{fam}{rank}");
        }
    }

    #[test]
    fn generate_rejects_affine() {
        let aff = CartanMatrix::validate(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(RootSystem::generate(aff), Err(RootsError::NotFiniteType));
    }

    #[test]
    fn require_root_names_the_offender() {
        let rs = system(Family::G, 2);
        assert_eq!(rs.require_root(&[1, 1]), Ok(2));
        assert_eq!(
            rs.require_root(&[2, 0]),
            Err(RootsError::NotARoot(alloc::vec![2, 0]))
        );
    }

    #[test]
    fn refl_formula_and_involution() {
        let rs = system(Family::G, 2);
        // s_2(alpha_1) = alpha_1 + 3 alpha_2 (a_{21} = -3)
        let img = rs.refl(1, 0);
        assert_eq!(rs.root(img), &[1, 3]);
        for r in 0..rs.num_roots() {
            for i in 0..2 {
                assert_eq!(rs.refl(i, rs.refl(i, r)), r);
            }
        }
    }

    #[test]
    fn string_numbers() {
        let rs = system(Family::G, 2);
        // i = 2, alpha = a1 + a2: q = 1, p = 2
        let a11 = rs.index_of(&[1, 1]).unwrap();
        assert_eq!(rs.string_pq(1, a11), (2, 1));
        // at alpha_i itself: (p, q) = (0, 2)
        assert_eq!(rs.string_pq(0, 0), (0, 2));
        assert_eq!(rs.string_pq(0, rs.negative(0)), (2, 0));
        // q - p = <alpha_i^vee, alpha> everywhere
        for i in 0..2 {
            for r in 0..rs.num_roots() {
                let (p, q) = rs.string_pq(i, r);
                assert_eq!(q - p, rs.pairing_simple(i, r));
            }
        }
    }

    #[test]
    fn simply_laced_strings_have_p_plus_q_one() {
        let rs = system(Family::A, 3);
        for i in 0..3 {
            for r in 0..rs.num_roots() {
                let (p, q) = rs.string_pq(i, r);
                let neighbors = p + q;
                let simple = rs.simple(i);
                if r != simple && r != rs.negative(simple) && neighbors > 0 {
                    assert_eq!(neighbors, 1, "i={i} r={r}");
                }
            }
        }
    }

    #[test]
    fn string_lengths_bounded_by_three() {
        for (fam, rank) in [(Family::G, 2), (Family::F, 4), (Family::B, 3)] {
            let rs = system(fam, rank);
            for i in 0..rs.rank() {
                for r in 0..rs.num_roots() {
                    let (p, q) = rs.string_pq(i, r);
                    assert!(p + q <= 3, "{fam}{rank}: i={i} r={r}");
                }
            }
        }
    }

    #[test]
    fn g2_coroots() {
        let rs = system(Family::G, 2);
        assert_eq!(rs.coroot_coeffs(rs.index_of(&[1, 1]).unwrap()), vec![3, 1]);
        assert_eq!(rs.coroot_coeffs(rs.index_of(&[1, 2]).unwrap()), vec![3, 2]);
        assert_eq!(rs.coroot_coeffs(rs.index_of(&[1, 3]).unwrap()), vec![1, 1]);
        assert_eq!(rs.coroot_coeffs(rs.index_of(&[2, 3]).unwrap()), vec![2, 1]);
        assert_eq!(rs.coroot_coeffs(0), vec![1, 0]);
    }

    #[test]
    fn pairing_matches_string_difference() {
        let rs = system(Family::F, 4);
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if rs.negative(a) == b || a == b {
                    continue;
                }
                // q - p of the beta_a-string through beta_b
                let (mut p, mut q) = (0i64, 0i64);
                loop {
                    let v: Vec<i64> = rs
                        .root(b)
                        .iter()
                        .zip(rs.root(a))
                        .map(|(x, y)| x + (p + 1) * y)
                        .collect();
                    if rs.index_of(&v).is_none() {
                        break;
                    }
                    p += 1;
                }
                loop {
                    let v: Vec<i64> = rs
                        .root(b)
                        .iter()
                        .zip(rs.root(a))
                        .map(|(x, y)| x - (q + 1) * y)
                        .collect();
                    if rs.index_of(&v).is_none() {
                        break;
                    }
                    q += 1;
                }
                assert_eq!(rs.pairing(a, b), q - p, "a={a} b={b}");
                assert!(rs.pairing(a, b).abs() <= 3);
            }
        }
        assert_eq!(rs.pairing(5, 5), 2);
    }

    #[test]
    fn g2_short_roots_positions() {
        let rs = system(Family::G, 2);
        // 1-based positions {2,3,4,8,9,10}
        assert_eq!(rs.short_roots(), vec![1, 2, 3, 7, 8, 9]);
    }

    #[test]
    fn simple_orbits_are_the_length_classes() {
        let rs = system(Family::F, 4);
        let orbit = |start: usize| -> Vec<usize> {
            let mut seen = alloc::vec![false; rs.num_roots()];
            seen[start] = true;
            let mut stack = alloc::vec![start];
            while let Some(r) = stack.pop() {
                for i in 0..rs.rank() {
                    let img = rs.refl(i, r);
                    if !seen[img] {
                        seen[img] = true;
                        stack.push(img);
                    }
                }
            }
            (0..rs.num_roots()).filter(|&r| seen[r]).collect()
        };
        let longs: Vec<usize> = (0..rs.num_roots()).filter(|&r| rs.is_long(r)).collect();
        assert_eq!(orbit(rs.simple(0)), longs);
        assert_eq!(orbit(rs.simple(3)), rs.short_roots());
    }

    #[test]
    fn highest_roots() {
        let e8 = system(Family::E, 8);
        assert_eq!(e8.root(e8.highest_root()), &[2, 3, 4, 6, 5, 4, 3, 2]);
        let g2 = system(Family::G, 2);
        assert_eq!(g2.root(g2.highest_root()), &[2, 3]);
        assert_eq!(g2.root(g2.highest_short_root().unwrap()), &[1, 2]);
        let f4 = system(Family::F, 4);
        assert_eq!(f4.root(f4.highest_root()), &[2, 3, 4, 2]);
        assert_eq!(f4.root(f4.highest_short_root().unwrap()), &[1, 2, 3, 2]);
    }

    #[test]
    fn roots_are_reduced_and_coprime() {
        let rs = system(Family::B, 3);
        for r in 0..rs.num_roots() {
            let twice: Vec<i64> = rs.root(r).iter().map(|v| 2 * v).collect();
            assert!(rs.index_of(&twice).is_none());
            let g = rs.root(r).iter().fold(0i64, |acc, &v| gcd(acc, v));
            assert_eq!(g, 1);
        }
    }

    #[test]
    fn decomposable_union_ordering() {
        // A1 x A1: four roots, heights 1, 1, -1, -1
        let m = CartanMatrix::validate(&[vec![2, 0], vec![0, 2]]).unwrap();
        let rs = RootSystem::generate(m).unwrap();
        assert_eq!(rs.roots(), &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]);
        assert_eq!(rs.blocks().len(), 2);
        assert_eq!(rs.blocks()[0].highest, 0);
        assert_eq!(rs.blocks()[1].highest, 1);
    }
}
