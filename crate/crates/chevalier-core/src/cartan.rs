//! Generalized Cartan matrices: validation, decomposition into blocks,
//! exact finite/affine/indefinite classification, standard matrices for the
//! finite Dynkin types, type recognition, the ε-function and fundamental
//! groups.
//!
//! The classification is fully decidable and exact: a block is of finite
//! type iff `det(A) ≠ 0` and all entries of `A⁻¹·(1,…,1)ᵗ` are strictly
//! positive; it is affine iff `det(A) = 0` and the rational nullspace is one
//! dimensional with a sign-definite generator; otherwise it is indefinite.
//! No eigenvalues, no floating point.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{int, rational_kernel, smith_normal_form, solve_rational, Int, SparseMat};

/// Errors from Cartan matrix validation and classification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CartanError {
    NotSquare,
    /// `a_{ii} ≠ 2` at the given index.
    DiagonalNotTwo(usize),
    /// `a_{ij} > 0` for `i ≠ j`.
    PositiveOffDiagonal(usize, usize),
    /// `a_{ij} = 0` but `a_{ji} ≠ 0`.
    AsymmetricZero(usize, usize),
    /// An operation required an indecomposable matrix.
    DecomposableInput,
    /// An operation required finite type.
    NotFiniteType,
    /// No such standard type (family/rank outside the tables).
    IllegalRank,
    /// The sign graph is not two-colorable (impossible for finite type).
    OddCycle,
}

impl fmt::Display for CartanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanError::NotSquare => write!(f, "matrix is not square"),
            CartanError::DiagonalNotTwo(i) => write!(f, "diagonal entry a[{i}][{i}] is not 2"),
            CartanError::PositiveOffDiagonal(i, j) => {
                write!(f, "off-diagonal entry a[{i}][{j}] is positive")
            }
            CartanError::AsymmetricZero(i, j) => {
                write!(f, "a[{i}][{j}] = 0 but a[{j}][{i}] != 0")
            }
            CartanError::DecomposableInput => write!(f, "matrix is decomposable"),
            CartanError::NotFiniteType => write!(f, "matrix is not of finite type"),
            CartanError::IllegalRank => write!(f, "no standard matrix for this family and rank"),
            CartanError::OddCycle => write!(f, "sign graph contains an odd cycle"),
        }
    }
}

/// Classification of an indecomposable generalized Cartan matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassKind {
    Finite,
    /// Affine type; carries the primitive strictly positive integer vector
    /// spanning the nullspace (the vertex labels of the affine diagram).
    Affine(Vec<Int>),
    Indefinite,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::Finite => write!(f, "finite"),
            ClassKind::Affine(u) => {
                write!(f, "affine, null vector (")?;
                for (k, v) in u.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
            ClassKind::Indefinite => write!(f, "indefinite"),
        }
    }
}

/// The nine families of finite Dynkin diagrams.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Legal rank range of the standard tables.
    pub fn rank_legal(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A recognized finite Dynkin type with the relabelling onto the standard
/// matrix, plus any relabel-equivalent alternative names (B₂/C₂, A₃/D₃).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
    /// `relabel[i]` is the standard label (0-based) of vertex `i`; the
    /// defining property is `a[i][j] == standard[relabel[i]][relabel[j]]`.
    pub relabel: Vec<usize>,
    /// Other (family, relabel) pairs that also match this matrix.
    pub alternatives: Vec<(Family, Vec<usize>)>,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A validated generalized Cartan matrix over the index set {0, …, l−1}.
///
/// Entries are stored as machine integers: the axioms bound nothing below,
/// but every matrix accepted here comes from i64 input, and all derived
/// linear algebra (determinants, nullspaces, Smith form) is done in
/// arbitrary precision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    size: usize,
    a: Vec<i64>,
}

impl CartanMatrix {
    /// Validate the generalized-Cartan axioms: square, `a_{ii} = 2`,
    /// `a_{ij} ≤ 0` for `i ≠ j`, and `a_{ij} ≠ 0 ⇔ a_{ji} ≠ 0`.
    pub fn validate(rows: &[Vec<i64>]) -> Result<CartanMatrix, CartanError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(CartanError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 2 {
                return Err(CartanError::DiagonalNotTwo(i));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && v > 0 {
                    return Err(CartanError::PositiveOffDiagonal(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return Err(CartanError::AsymmetricZero(i, j));
                }
            }
        }
        Ok(CartanMatrix { size: n, a: rows.iter().flatten().copied().collect() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn to_sparse(&self) -> SparseMat<Int> {
        let mut m = SparseMat::zero(self.size, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                if self.entry(i, j) != 0 {
                    m.set(i, j, int(self.entry(i, j)));
                }
            }
        }
        m
    }

    /// Connected components of the graph with an edge i—j iff `a_{ij} ≠ 0`,
    /// each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if !seen[j] && i != j && self.entry(i, j) != 0 {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }

    /// The principal submatrix on the given (sorted) vertex set.
    pub fn submatrix(&self, vertices: &[usize]) -> CartanMatrix {
        let rows: Vec<Vec<i64>> = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        CartanMatrix { size: vertices.len(), a: rows.into_iter().flatten().collect() }
    }

    /// Exact trichotomy for an indecomposable matrix.
    pub fn classify(&self) -> Result<ClassKind, CartanError> {
        if !self.is_indecomposable() {
            return Err(CartanError::DecomposableInput);
        }
        let m = self.to_sparse();
        let ones = vec![Int::one(); self.size];
        if let Some(u) = solve_rational(&m, &ones) {
            // det != 0: finite iff A^{-1}·1 is strictly positive
            if u.iter().all(|x| x.is_positive()) {
                return Ok(ClassKind::Finite);
            }
            return Ok(ClassKind::Indefinite);
        }
        let kernel = rational_kernel(&m);
        if kernel.len() == 1 {
            let v = &kernel[0];
            let pos = v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| x.is_positive());
            let neg = v.iter().all(|x| !x.is_positive()) && v.iter().any(|x| x.is_negative());
            if pos || neg {
                // scale to the primitive positive integer vector
                let mut lcm = Int::one();
                for x in v {
                    lcm = num_integer::Integer::lcm(&lcm, x.denom());
                }
                let mut ints: Vec<Int> =
                    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
                if neg {
                    for x in ints.iter_mut() {
                        *x = -&*x;
                    }
                }
                let mut g = Int::zero();
                for x in &ints {
                    g = num_integer::Integer::gcd(&g, x);
                }
                for x in ints.iter_mut() {
                    *x = &*x / &g;
                }
                return Ok(ClassKind::Affine(ints));
            }
        }
        Ok(ClassKind::Indefinite)
    }

    /// True iff every indecomposable block is of finite type.
    pub fn is_finite_type(&self) -> bool {
        self.components()
            .iter()
            .all(|c| matches!(self.submatrix(c).classify(), Ok(ClassKind::Finite)))
    }

    /// The standard matrix of a finite family under the table labelling.
    ///
    /// Single edges carry `a_{ij} = a_{ji} = −1`; the multiple edges are
    /// B: `a_{01} = −2`, C: `a_{10} = −2`, F₄: `a_{21} = −2` (between
    /// vertices 2 and 3 in 1-based labels), G₂: `a_{10} = −3`. Dₙ forks at
    /// the start (vertices 1, 2 joined to 3, 1-based), Eₙ hangs vertex 2
    /// off vertex 4 of the path 1–3–4–5–⋯ (1-based).
    pub fn standard(family: Family, rank: usize) -> Result<CartanMatrix, CartanError> {
        if !family.rank_legal(rank) {
            return Err(CartanError::IllegalRank);
        }
        let n = rank;
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |i: usize, j: usize, aij: i64, aji: i64, rows: &mut Vec<Vec<i64>>| {
            rows[i][j] = aij;
            rows[j][i] = aji;
        };
        match family {
            Family::A => {
                for i in 0..n - 1 {
                    edge(i, i + 1, -1, -1, &mut rows);
                }
            }
            Family::B => {
                edge(0, 1, -2, -1, &mut rows);
                for i in 1..n - 1 {
                    edge(i, i + 1, -1, -1, &mut rows);
                }
            }
            Family::C => {
                edge(0, 1, -1, -2, &mut rows);
                for i in 1..n - 1 {
                    edge(i, i + 1, -1, -1, &mut rows);
                }
            }
            Family::D => {
                edge(0, 2, -1, -1, &mut rows);
                edge(1, 2, -1, -1, &mut rows);
                for i in 2..n - 1 {
                    edge(i, i + 1, -1, -1, &mut rows);
                }
            }
            Family::E => {
                edge(0, 2, -1, -1, &mut rows);
                edge(2, 3, -1, -1, &mut rows);
                edge(1, 3, -1, -1, &mut rows);
                for i in 3..n - 1 {
                    edge(i, i + 1, -1, -1, &mut rows);
                }
            }
            Family::F => {
                edge(0, 1, -1, -1, &mut rows);
                edge(1, 2, -1, -2, &mut rows);
                edge(2, 3, -1, -1, &mut rows);
            }
            Family::G => {
                edge(0, 1, -1, -3, &mut rows);
            }
        }
        CartanMatrix::validate(&rows)
    }

    /// Recognize an indecomposable finite-type block: family, rank, and an
    /// explicit relabelling under which the block equals the standard matrix.
    ///
    /// When several standard types match (B₂/C₂, A₃/D₃), the one matching
    /// via the identity relabelling is reported and the rest are listed as
    /// alternatives, so `recognize ∘ standard` is the identity on
    /// (family, rank).
    pub fn recognize(&self) -> Result<DynkinType, CartanError> {
        if !self.is_indecomposable() {
            return Err(CartanError::DecomposableInput);
        }
        if self.classify()? != ClassKind::Finite {
            return Err(CartanError::NotFiniteType);
        }
        let n = self.size;
        let mut matches: Vec<(Family, Vec<usize>)> = Vec::new();
        for family in Family::ALL {
            if !family.rank_legal(n) {
                continue;
            }
            let std_m = CartanMatrix::standard(family, n).expect("legal rank");
            if let Some(p) = find_relabelling(self, &std_m) {
                matches.push((family, p));
            }
        }
        // a finite-type block always matches exactly one diagram shape, up to
        // the B2/C2 and A3/D3 label coincidences
        assert!(!matches.is_empty(), "finite type block must match a table entry");
        let id: Vec<usize> = (0..n).collect();
        let best = matches
            .iter()
            .position(|(_, p)| *p == id)
            .unwrap_or(0);
        let (family, relabel) = matches.remove(best);
        Ok(DynkinType { family, rank: n, relabel, alternatives: matches })
    }

    /// A ±1 two-coloring with `ε(j) = −ε(i)` across every edge, normalized so
    /// that the smallest vertex of each component gets +1.
    pub fn epsilon(&self) -> Result<Vec<i8>, CartanError> {
        let n = self.size;
        let mut eps = vec![0i8; n];
        for start in 0..n {
            if eps[start] != 0 {
                continue;
            }
            eps[start] = 1;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if j != i && self.entry(i, j) != 0 {
                        if eps[j] == 0 {
                            eps[j] = -eps[i];
                            stack.push(j);
                        } else if eps[j] != -eps[i] {
                            return Err(CartanError::OddCycle);
                        }
                    }
                }
            }
        }
        Ok(eps)
    }

    /// Invariant factors > 1 of the Smith normal form of the matrix — the
    /// structure of the fundamental group Ω/P. Requires finite type.
    pub fn fundamental_group(&self) -> Result<Vec<Int>, CartanError> {
        if !self.is_finite_type() {
            return Err(CartanError::NotFiniteType);
        }
        Ok(smith_normal_form(&self.to_sparse())
            .into_iter()
            .filter(|d| !One::is_one(d))
            .collect())
    }

    /// "a3", "e8", … — lowercase family letter and rank.
    pub fn parse_type(s: &str) -> Option<(Family, usize)> {
        let mut chars = s.chars();
        let fam = match chars.next()?.to_ascii_lowercase() {
            'a' => Family::A,
            'b' => Family::B,
            'c' => Family::C,
            'd' => Family::D,
            'e' => Family::E,
            'f' => Family::F,
            'g' => Family::G,
            _ => return None,
        };
        let rank: usize = chars.as_str().parse().ok()?;
        Some((fam, rank))
    }
}

/// Find a bijection p with `a[i][j] == b[p(i)][p(j)]` by backtracking on
/// degree-compatible assignments; ranks are at most 8, so this is instant.
fn find_relabelling(a: &CartanMatrix, b: &CartanMatrix) -> Option<Vec<usize>> {
    let n = a.size();
    debug_assert_eq!(n, b.size());
    let deg = |m: &CartanMatrix, i: usize| -> usize {
        (0..n).filter(|&j| j != i && m.entry(i, j) != 0).count()
    };
    let dega: Vec<usize> = (0..n).map(|i| deg(a, i)).collect();
    let degb: Vec<usize> = (0..n).map(|i| deg(b, i)).collect();
    {
        let mut sa = dega.clone();
        let mut sb = degb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let mut assign: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn bt(
        k: usize,
        n: usize,
        a: &CartanMatrix,
        b: &CartanMatrix,
        dega: &[usize],
        degb: &[usize],
        assign: &mut [Option<usize>],
        used: &mut [bool],
    ) -> bool {
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || dega[k] != degb[cand] {
                continue;
            }
            let ok = (0..k).all(|i| {
                let pi = assign[i].unwrap();
                a.entry(i, k) == b.entry(pi, cand) && a.entry(k, i) == b.entry(cand, pi)
            });
            if ok {
                assign[k] = Some(cand);
                used[cand] = true;
                if bt(k + 1, n, a, b, dega, degb, assign, used) {
                    return true;
                }
                assign[k] = None;
                used[cand] = false;
            }
        }
        false
    }
    if bt(0, n, a, b, &dega, &degb, &mut assign, &mut used) {
        let p: Vec<usize> = assign.into_iter().map(|x| x.unwrap()).collect();
        // final verification: the relabelled matrix equals the standard one
        for i in 0..n {
            for j in 0..n {
                if a.entry(i, j) != b.entry(p[i], p[j]) {
                    return None;
                }
            }
        }
        Some(p)
    } else {
        None
    }
}

/// Render a type name like "G2" for display.
pub fn type_name(family: Family, rank: usize) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(s, "{}{}", family.letter(), rank);
    s
}

/// All distinct vertex labels occurring in the components of a matrix
/// (helper for per-block reporting).
pub fn block_vertices(m: &CartanMatrix) -> BTreeSet<usize> {
    (0..m.size()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(rows: &[&[i64]]) -> CartanMatrix {
        CartanMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn validate_axioms() {
        assert!(CartanMatrix::validate(&[vec![2, -1], vec![-3, 2]]).is_ok());
        assert_eq!(
            CartanMatrix::validate(&[vec![2, -1], vec![0, 2]]),
            Err(CartanError::AsymmetricZero(0, 1))
        );
        assert_eq!(
            CartanMatrix::validate(&[vec![2, 1], vec![1, 2]]),
            Err(CartanError::PositiveOffDiagonal(0, 1))
        );
        assert_eq!(
            CartanMatrix::validate(&[vec![1, 0], vec![0, 2]]),
            Err(CartanError::DiagonalNotTwo(0))
        );
        assert_eq!(CartanMatrix::validate(&[vec![2, 0]]), Err(CartanError::NotSquare));
    }

    #[test]
    fn components_split() {
        let m = cm(&[&[2, 0], &[0, 2]]);
        assert_eq!(m.components(), vec![vec![0], vec![1]]);
        let g2 = cm(&[&[2, -1], &[-3, 2]]);
        assert_eq!(g2.components(), vec![vec![0, 1]]);
    }

    #[test]
    fn components_block_diagonal_a2_g2() {
        // block-diagonal(A2, G2): oracle = reachability over the edge graph
        let m = cm(&[
            &[2, -1, 0, 0],
            &[-1, 2, 0, 0],
            &[0, 0, 2, -1],
            &[0, 0, -3, 2],
        ]);
        assert_eq!(m.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn classify_trichotomy() {
        assert_eq!(cm(&[&[2, -1], &[-3, 2]]).classify(), Ok(ClassKind::Finite));
        let aff = cm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]).classify().unwrap();
        assert_eq!(aff, ClassKind::Affine(vec![int(1), int(1), int(1)]));
        assert_eq!(
            cm(&[&[2, -1, 0], &[-2, 2, -1], &[0, -3, 2]]).classify(),
            Ok(ClassKind::Indefinite)
        );
        assert_eq!(
            cm(&[&[2, 0], &[0, 2]]).classify(),
            Err(CartanError::DecomposableInput)
        );
    }

    #[test]
    fn standard_matrices() {
        assert_eq!(CartanMatrix::standard(Family::G, 2).unwrap(), cm(&[&[2, -1], &[-3, 2]]));
        assert_eq!(CartanMatrix::standard(Family::C, 2).unwrap(), cm(&[&[2, -1], &[-2, 2]]));
        let a3 = CartanMatrix::standard(Family::A, 3).unwrap();
        assert_eq!(a3, cm(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]));
        assert_eq!(CartanMatrix::standard(Family::F, 5), Err(CartanError::IllegalRank));
        assert_eq!(CartanMatrix::standard(Family::D, 2), Err(CartanError::IllegalRank));
    }

    #[test]
    fn recognize_swapped_g2() {
        let t = cm(&[&[2, -3], &[-1, 2]]).recognize().unwrap();
        assert_eq!((t.family, t.rank), (Family::G, 2));
        assert_eq!(t.relabel, vec![1, 0]);
    }

    #[test]
    fn recognize_standard_is_identity() {
        for (fam, rank) in [
            (Family::A, 1),
            (Family::A, 5),
            (Family::B, 2),
            (Family::B, 4),
            (Family::C, 2),
            (Family::C, 3),
            (Family::D, 3),
            (Family::D, 6),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let m = CartanMatrix::standard(fam, rank).unwrap();
            let t = m.recognize().unwrap();
            assert_eq!((t.family, t.rank), (fam, rank), "type {fam}{rank}");
            assert_eq!(t.relabel, (0..rank).collect::<Vec<_>>(), "type {fam}{rank}");
        }
    }

    #[test]
    fn recognize_d3_reports_a3_alternative() {
        let t = CartanMatrix::standard(Family::D, 3).unwrap().recognize().unwrap();
        assert_eq!((t.family, t.rank), (Family::D, 3));
        assert!(t.alternatives.iter().any(|(f, _)| *f == Family::A));
    }

    #[test]
    fn recognize_c2_reports_b2_alternative() {
        let t = cm(&[&[2, -1], &[-2, 2]]).recognize().unwrap();
        assert_eq!(t.family, Family::C);
        assert!(t.alternatives.iter().any(|(f, _)| *f == Family::B));
    }

    #[test]
    fn epsilon_tables() {
        let g2 = CartanMatrix::standard(Family::G, 2).unwrap();
        assert_eq!(g2.epsilon().unwrap(), vec![1, -1]);
        let e7 = CartanMatrix::standard(Family::E, 7).unwrap();
        assert_eq!(e7.epsilon().unwrap(), vec![1, -1, -1, 1, -1, 1, -1]);
        let a1 = CartanMatrix::standard(Family::A, 1).unwrap();
        assert_eq!(a1.epsilon().unwrap(), vec![1]);
        // D_n starts (+, +, -, ...)
        let d5 = CartanMatrix::standard(Family::D, 5).unwrap();
        assert_eq!(d5.epsilon().unwrap(), vec![1, 1, -1, 1, -1]);
    }

    #[test]
    fn fundamental_groups() {
        let a4 = CartanMatrix::standard(Family::A, 4).unwrap();
        assert_eq!(a4.fundamental_group().unwrap(), vec![int(5)]);
        let d5 = CartanMatrix::standard(Family::D, 5).unwrap();
        assert_eq!(d5.fundamental_group().unwrap(), vec![int(4)]);
        let e8 = CartanMatrix::standard(Family::E, 8).unwrap();
        assert_eq!(e8.fundamental_group().unwrap(), Vec::<Int>::new());
        let aff = cm(&[&[2, -2], &[-2, 2]]);
        assert_eq!(aff.fundamental_group(), Err(CartanError::NotFiniteType));
    }

    #[test]
    fn finite_bond_products_bounded_by_three() {
        for fam in Family::ALL {
            for rank in 1..=8 {
                if !fam.rank_legal(rank) {
                    continue;
                }
                let m = CartanMatrix::standard(fam, rank).unwrap();
                for i in 0..rank {
                    for j in 0..rank {
                        if i != j {
                            assert!((0..=3).contains(&(m.entry(i, j) * m.entry(j, i))));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn finite_blocks_have_positive_inverse_row_sums() {
        // det(A) > 0 and A^{-1}·1 strictly positive for every finite block
        for (fam, rank) in [(Family::B, 5), (Family::E, 8), (Family::F, 4)] {
            let m = CartanMatrix::standard(fam, rank).unwrap();
            assert_eq!(m.classify(), Ok(ClassKind::Finite));
        }
    }
}
