mod common;

use arcc::io::{complex_from_json, complex_to_json};
use arcc::{
    betti_numbers, closure, harmonic_basis, hodge_laplacian, persistence, product, smith_normal_form,
    spanning_tree_lifting, spectral_basis, vietoris_rips_simplices, vr_filtration, window_lifting, CellComplex,
    CellRef, Chain, Coefficients, Part, Points,
};
use common::*;
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn exact(cc: &CellComplex) -> bool {
    (2..=cc.dim()).all(|k| {
        let a = cc.boundary(k - 1).unwrap().to_dense::<i64>();
        let b = cc.boundary(k).unwrap().to_dense::<i64>();
        (&a * &b).iter().all(|&x| x == 0)
    })
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect()).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    (r - 1..n)
        .flat_map(|last| {
            subsets(last, r - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// gcd of all `r × r` minors.
fn minor_gcd(m: &DMatrix<i64>, r: usize) -> i64 {
    let mut g = 0;
    for rows in subsets(m.nrows(), r) {
        for cols in subsets(m.ncols(), r) {
            let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[(i, j)]).collect()).collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn builder_outputs_are_exact_and_euler_matches_betti(seed in any::<u64>()) {
        let cc = random_builder_output(&mut rng(seed));
        prop_assert!(exact(&cc));
        let betti = betti_numbers(&cc, Coefficients::Real).unwrap().betti;
        let alt: i64 = betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(alt, cc.euler_characteristic());
    }

    #[test]
    fn real_integer_and_rational_betti_agree(seed in any::<u64>()) {
        let cc = random_builder_output(&mut rng(seed));
        let real = betti_numbers(&cc, Coefficients::Real).unwrap();
        let int = betti_numbers(&cc, Coefficients::Integer).unwrap();
        prop_assert_eq!(&real.betti, &int.betti);
        prop_assert_eq!(real.betti, rational_betti(&cc));
    }

    #[test]
    fn flips_are_involutions_and_keep_betti(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cc = random_builder_output(&mut r);
        let k = r.gen_range(0..=cc.dim());
        let j = r.gen_range(0..cc.num_cells(k));
        let once = cc.flip_orientation(k, j).unwrap();
        prop_assert!(exact(&once));
        prop_assert_eq!(once.flip_orientation(k, j).unwrap(), cc.clone());
        prop_assert_eq!(rational_betti(&once), rational_betti(&cc));
    }

    #[test]
    fn boundary_is_linear(seed in any::<u64>(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let mut r = rng(seed);
        let cc = random_builder_output(&mut r);
        let k = r.gen_range(1..=cc.dim().max(1)).min(cc.dim());
        prop_assume!(k >= 1);
        let n = cc.num_cells(k);
        let x = Chain::from_vec(k, (0..n).map(|_| r.gen_range(-1.0..1.0)).collect());
        let y = Chain::from_vec(k, (0..n).map(|_| r.gen_range(-1.0..1.0)).collect());
        let combo = Chain::new(k, &x.values * a + &y.values * b);
        let lhs = cc.apply_boundary(&combo).unwrap().values;
        let rhs = cc.apply_boundary(&x).unwrap().values * a + cc.apply_boundary(&y).unwrap().values * b;
        prop_assert!((lhs - rhs).amax() < 1e-12);
        let bb = cc.apply_boundary(&cc.apply_boundary(&x).unwrap());
        if k >= 2 {
            prop_assert!(bb.unwrap().values.amax() < 1e-12);
        }
    }

    #[test]
    fn vr_is_monotone(seed in any::<u64>(), e1 in 0.0f64..1.0, e2 in 0.0f64..1.0) {
        let mut r = rng(seed);
        let pc = random_points(&mut r, 7, 2);
        let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        let small = vietoris_rips_simplices(&pc, lo, 3, 10_000).unwrap();
        let big = vietoris_rips_simplices(&pc, hi, 3, 10_000).unwrap();
        prop_assert!(small.iter().all(|s| big.contains(s)));
    }

    #[test]
    fn product_counts_multiply(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = small_complex(&mut r);
        let b = small_complex(&mut r);
        let p = product(&a, &b);
        prop_assert_eq!(p.dim(), a.dim() + b.dim());
        for k in 0..=p.dim() {
            let expected: usize = (0..=k)
                .filter(|&i| i <= a.dim() && k - i <= b.dim())
                .map(|i| a.num_cells(i) * b.num_cells(k - i))
                .sum();
            prop_assert_eq!(p.num_cells(k), expected);
        }
        prop_assert!(exact(&p));
    }

    #[test]
    fn closure_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cc = random_builder_output(&mut r);
        let k = r.gen_range(0..=cc.dim());
        let j = r.gen_range(0..cc.num_cells(k));
        let once = closure(&cc, CellRef::new(k, j));
        let label = &cc.cells(k)[j];
        let again = closure(&once, once.cell(k, label).unwrap());
        prop_assert_eq!(once.dim(), k);
        prop_assert_eq!(again, once);
    }

    #[test]
    fn snf_matches_minor_gcds(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = DMatrix::from_fn(rows, cols, |_, _| r.gen_range(-4i64..=4));
        let snf = smith_normal_form(&m).unwrap();
        prop_assert_eq!(snf.rank, rational_rank(&m));
        let mut prod = 1i64;
        for t in 0..snf.rank {
            prod *= snf.diagonal[t];
            prop_assert_eq!(prod, minor_gcd(&m, t + 1));
            if t > 0 {
                prop_assert_eq!(snf.diagonal[t] % snf.diagonal[t - 1], 0);
            }
        }
        prop_assert!(snf.diagonal[snf.rank..].iter().all(|&d| d == 0));
    }

    #[test]
    fn validate_nd_agrees_with_dim2(seed in any::<u64>()) {
        let cc = random_two_complex(&mut rng(seed));
        let d2 = arcc::validate_dim1(&cc).merge(arcc::validate_dim2(&cc));
        let nd = arcc::validate_nd(&cc).unwrap();
        prop_assert_eq!(d2.valid, nd.valid);
    }

    #[test]
    fn persistence_ignores_point_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..8);
        let pc = random_points(&mut r, n, 2);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let a = persistence(&vr_filtration(&pc, 2.0, 2).unwrap(), false);
        let b = persistence(&vr_filtration(&pc.permuted(&perm), 2.0, 2).unwrap(), false);
        prop_assert_eq!(a.bars.len(), b.bars.len());
        for (x, y) in a.bars.iter().zip(&b.bars) {
            prop_assert_eq!(x.dim, y.dim);
            prop_assert!((x.birth - y.birth).abs() < 1e-12);
            prop_assert_eq!(x.death.is_some(), y.death.is_some());
            if let (Some(p), Some(q)) = (x.death, y.death) {
                prop_assert!((p - q).abs() < 1e-12);
            }
        }
        prop_assert_eq!(a.in_dim(0).count(), n);
        prop_assert_eq!(a.in_dim(0).filter(|b| b.death.is_none()).count(), 1);
    }

    #[test]
    fn spectral_basis_diagonalizes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cc = random_builder_output(&mut r);
        let k = r.gen_range(0..=cc.dim());
        let basis = spectral_basis::<f64>(&cc, k, None).unwrap();
        let l = hodge_laplacian::<f64>(&cc, k, Part::Full, None).unwrap();
        let u = &basis.eigenvectors;
        let n = u.ncols();
        prop_assert!((u.transpose() * u - DMatrix::identity(n, n)).amax() < 1e-9);
        let lam = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(basis.eigenvalues.clone()));
        prop_assert!((&l * u - u * lam).amax() < 1e-8);
        let betti = rational_betti(&cc);
        prop_assert_eq!(harmonic_basis::<f64>(&cc, k).unwrap().len(), betti[k]);
    }

    #[test]
    fn lifts_fill_every_cycle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (w, h) = (r.gen_range(2..5), r.gen_range(2..4));
        let emb = random_planar(&mut r, w, h);
        let lifted = window_lifting(&emb).unwrap();
        let betti = rational_betti(&lifted);
        prop_assert_eq!(betti[0], 1);
        prop_assert!(betti[1..].iter().all(|&b| b == 0));
        let (n, extra) = (r.gen_range(2..9), r.gen_range(0..8));
        let g = random_graph(&mut r, n, extra);
        let tree = spanning_tree_lifting(&g, None).unwrap();
        prop_assert_eq!(rational_betti(&tree)[..2].to_vec(), vec![1, 0]);
        prop_assert_eq!(tree.num_cells(1), g.num_cells(1));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let cc = random_builder_output(&mut rng(seed));
        prop_assert_eq!(complex_from_json(&complex_to_json(&cc)).unwrap(), cc);
    }

    #[test]
    fn canonicalization_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, extra) = (r.gen_range(3..8), r.gen_range(0..8));
        let g = random_graph(&mut r, n, extra);
        let lifted = arcc::chordless_cycle_lifting(&g, 1000).unwrap();
        let mut flipped = lifted.clone();
        for k in 1..=lifted.dim() {
            for j in 0..lifted.num_cells(k) {
                if r.gen_bool(0.5) {
                    flipped = flipped.flip_orientation(k, j).unwrap();
                }
            }
        }
        let canon = flipped.canonicalize_orientations().unwrap();
        prop_assert_eq!(canon.canonicalize_orientations().unwrap(), canon.clone());
        let reference = lifted.canonicalize_orientations().unwrap();
        prop_assert_eq!(canon.boundaries(), reference.boundaries());
    }
}

#[test]
fn f32_and_f64_agree_on_betti() {
    let mut r = rng(99);
    for _ in 0..20 {
        let cc = random_builder_output(&mut r);
        assert_eq!(arcc::betti_numbers_real::<f32>(&cc).betti, arcc::betti_numbers_real::<f64>(&cc).betti);
    }
    let pts: Points = Points::new(vec![vec![0.0], vec![1.0]]).unwrap();
    assert_eq!(pts.len(), 2);
}
