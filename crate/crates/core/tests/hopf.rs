use hopfkit::catalog::{taft_x_c3, uq_sl2, GroupTable, RootOfUnity};
use hopfkit::coalgebra::{full_filtration, IsotypicKey};
use hopfkit::hopf::{check_exact_sequence, Side};
use hopfkit::linalg::Matrix;
use hopfkit::{CycMatrix, CycNumber, HopfAlgebra};
use num_traits::One;

/// 0/1 matrix sending basis element j to basis element f(j).
fn basis_map(rows: usize, cols: usize, f: impl Fn(usize) -> usize) -> CycMatrix {
    let mut m = Matrix::zeros(rows, cols);
    for j in 0..cols {
        m.set(f(j), j, CycNumber::one());
    }
    m
}

fn group(moduli: &[usize]) -> HopfAlgebra {
    GroupTable::abelian(moduli).group_algebra().unwrap()
}

#[test]
fn c3_c9_c3_is_exact() {
    let (a, h, b) = (group(&[3]), group(&[9]), group(&[3]));
    let r = check_exact_sequence(&a, &basis_map(9, 3, |k| 3 * k), &h, &basis_map(3, 9, |j| j % 3), &b).unwrap();
    assert!(r.is_exact(), "{:?}", r.witnesses);
    assert!(r.dimension_identity);
    assert_eq!((r.dim_h, r.dim_coinvariants, r.dim_b), (9, 3, 3));
}

#[test]
fn c3_c3xc3_c3_is_exact() {
    let (a, h, b) = (group(&[3]), group(&[3, 3]), group(&[3]));
    let r = check_exact_sequence(&a, &basis_map(9, 3, |k| 3 * k), &h, &basis_map(3, 9, |j| j % 3), &b).unwrap();
    assert!(r.is_exact(), "{:?}", r.witnesses);
    assert!(r.dimension_identity);
}

#[test]
fn wrong_projection_is_not_exact() {
    // π kills the wrong factor: ι(A) is not the coinvariants.
    let (a, h, b) = (group(&[3]), group(&[3, 3]), group(&[3]));
    let r = check_exact_sequence(&a, &basis_map(9, 3, |k| 3 * k), &h, &basis_map(3, 9, |j| j / 3), &b).unwrap();
    assert!(!r.is_exact());
    assert!(!r.witnesses.is_empty());
}

fn fukuda_symmetric(h: &HopfAlgebra) {
    let (f, dec) = full_filtration(h.coalgebra()).unwrap();
    let nb = dec.blocks.len();
    let s = h.antipode_block_permutation(&dec).unwrap();
    let dim = |n, l, r| f.isotypic_dim(n, IsotypicKey { left: l, right: r });
    for g in h.grouplikes() {
        let lg = h.translation_block_permutation(&dec, &g, Side::Left).unwrap();
        let rg = h.translation_block_permutation(&dec, &g, Side::Right).unwrap();
        for n in 0..f.isotypic.len() {
            for t in 0..nb {
                for c in 0..nb {
                    let d = dim(n, t, c);
                    assert_eq!(d, dim(n, s[c], s[t]));
                    assert_eq!(d, dim(n, lg[t], lg[c]));
                    assert_eq!(d, dim(n, rg[t], rg[c]));
                }
            }
        }
    }
}

#[test]
fn fukuda_symmetries() {
    let q = RootOfUnity::new(3, 1);
    fukuda_symmetric(&taft_x_c3(q).unwrap());
    fukuda_symmetric(&uq_sl2(q).unwrap());
}
