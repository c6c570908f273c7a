//! Cross-module invariants of the group generators: triangularity and
//! determinant-one shape, the kernel dichotomy of the diagonal
//! parametrization, and specialization through ℤ\[T\].

use chevalier_core::cartan::{CartanMatrix, Family};
use chevalier_core::canbasis::LieAlgebraData;
use chevalier_core::chevgroup::{h_gen, specialize_matrix, x_gen};
use chevalier_core::exact::{int, rat, Gfp, IntPoly, Rat, SparseMat};
use chevalier_core::roots::RootSystem;
use chevalier_core::weights::RepModule;

fn modules() -> Vec<(&'static str, RepModule)> {
    let g2 = LieAlgebraData::build(CartanMatrix::standard(Family::G, 2).unwrap()).unwrap();
    let b3 = RootSystem::generate(CartanMatrix::standard(Family::B, 3).unwrap()).unwrap();
    vec![
        ("G2 adjoint", RepModule::adjoint(&g2)),
        ("B3 spin", RepModule::minuscule(&b3, &[vec![1, 0, 0]]).unwrap()),
        ("A1 irrep5", RepModule::sl2_irrep(5)),
    ]
}

#[test]
fn x_generators_are_unitriangular_per_root_sign() {
    for (name, m) in modules() {
        let rs = m.roots().clone();
        for root in 0..rs.num_roots() {
            let x = x_gen(&m, root, &IntPoly::t());
            assert!(
                x.is_unitriangular(rs.is_positive(root)),
                "{name}: root {} is not {} unitriangular",
                root + 1,
                if rs.is_positive(root) { "upper" } else { "lower" },
            );
        }
    }
}

#[test]
fn determinant_one_over_a_field() {
    // triangular shape makes the determinant the diagonal product; verify on
    // a non-triangular product n_w as well, via explicit inverses
    let f7 = Gfp::field(7).unwrap();
    for (name, m) in modules() {
        let rs = m.roots().clone();
        for root in [0usize, rs.num_roots() - 1] {
            let x = x_gen(&m, root, &f7.elt(3));
            let xinv = x_gen(&m, root, &f7.elt(-3));
            assert_eq!(
                x.mul(&xinv),
                SparseMat::identity(m.dim(), &f7.elt(1)),
                "{name}: x inverse"
            );
        }
    }
}

#[test]
fn h_kernel_dichotomy() {
    // adjoint of A1: the weight lattice of the module is the root lattice,
    // so h(-1) = 1 (a nontrivial kernel element) ...
    let a1 = LieAlgebraData::build(CartanMatrix::standard(Family::A, 1).unwrap()).unwrap();
    let adj = RepModule::adjoint(&a1);
    let h = h_gen(&adj, 0, &rat(-1)).unwrap();
    assert_eq!(h, SparseMat::identity(3, &rat(1)));
    // ... while a module whose weights span the full lattice has a trivial
    // kernel: on the C2 natural module no nontrivial (xi1, xi2) gives the
    // identity
    let c2 = RootSystem::generate(CartanMatrix::standard(Family::C, 2).unwrap()).unwrap();
    let nat = RepModule::minuscule(&c2, &[vec![0, 1]]).unwrap();
    assert!(nat.lattice_index_factors().iter().all(|f| *f == int(1)));
    let id = SparseMat::identity(nat.dim(), &rat(1));
    for a in [-2i64, -1, 1, 2] {
        for b in [-2i64, -1, 1, 2] {
            let h = h_gen(&nat, 0, &rat(a)).unwrap().mul(&h_gen(&nat, 1, &rat(b)).unwrap());
            assert_eq!(h == id, a == 1 && b == 1, "(a, b) = ({a}, {b})");
        }
    }
}

#[test]
fn polynomial_level_specializes_to_every_field() {
    let (_, m) = &modules()[1];
    let xt = x_gen(m, 2, &IntPoly::t());
    for p in [2u64, 5] {
        let f = Gfp::field(p).unwrap();
        for v in 0..p as i64 {
            assert_eq!(specialize_matrix(&xt, &f.elt(v)), x_gen(m, 2, &f.elt(v)));
        }
    }
    let half = Rat::new(int(1), int(2));
    assert_eq!(specialize_matrix(&xt, &half), x_gen(m, 2, &half));
}
