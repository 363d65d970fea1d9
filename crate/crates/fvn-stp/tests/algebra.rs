use fvn_stp::{
    mix_index, power_reducing_matrix, swap_matrix, BooleanMatrix, CountMatrix, LogicalMatrix,
    MatrixError, MatrixJson, StochasticMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_logical(rng: &mut ChaCha8Rng, rows: usize, ncols: usize) -> LogicalMatrix {
    let cols = (0..ncols).map(|_| rng.gen_range(1..=rows)).collect();
    LogicalMatrix::new(rows, cols).unwrap()
}

fn random_count(rng: &mut ChaCha8Rng, rows: usize, ncols: usize) -> CountMatrix {
    let data = (0..rows * ncols).map(|_| rng.gen_range(0..3u64)).collect();
    CountMatrix::new(rows, ncols, data).unwrap()
}

fn random_boolean(rng: &mut ChaCha8Rng, rows: usize, ncols: usize) -> BooleanMatrix {
    let mut m = BooleanMatrix::zeros(rows, ncols);
    for j in 0..ncols {
        for i in 0..rows {
            if rng.gen_bool(0.4) {
                m.set(i, j, true);
            }
        }
    }
    m
}

#[test]
fn logical_stp_matches_dense_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (n, p) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let (q, s) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = random_logical(&mut rng, n, p);
        let b = random_logical(&mut rng, q, s);
        let fast = a.stp(&b);
        let dense = a.to_count().stp(&b.to_count()).unwrap();
        assert_eq!(fast.to_count(), dense, "{n}x{p} stp {q}x{s}");
    }
}

#[test]
fn dense_stp_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let dims: Vec<usize> = (0..6).map(|_| rng.gen_range(1..=4)).collect();
        let a = random_count(&mut rng, dims[0], dims[1]);
        let b = random_count(&mut rng, dims[2], dims[3]);
        let c = random_count(&mut rng, dims[4], dims[5]);
        let left = a.stp(&b).unwrap().stp(&c).unwrap();
        let right = a.stp(&b.stp(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn stp_generalizes_the_ordinary_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let (n, p, s) = (rng.gen_range(1..=5), rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = random_count(&mut rng, n, p);
        let b = random_count(&mut rng, p, s);
        assert_eq!(a.stp(&b).unwrap(), a.mul(&b).unwrap());
    }
}

#[test]
fn negation_applies_to_the_leading_factor_of_a_composite() {
    let not = LogicalMatrix::new(2, vec![2, 1]).unwrap();
    for a in 1..=2usize {
        for b in 1..=2usize {
            let x = LogicalMatrix::unit(4, mix_index(&[a, b], 2)).unwrap();
            let y = not.stp(&x);
            assert_eq!(y.rows(), 4);
            assert_eq!(y.col(0), mix_index(&[3 - a, b], 2));
        }
    }
}

#[test]
fn kron_of_logical_matches_dense_and_known_case() {
    let a = LogicalMatrix::new(2, vec![1, 2]).unwrap();
    let b = LogicalMatrix::new(2, vec![2, 1]).unwrap();
    assert_eq!(a.kron(&b).entries(), &[2, 1, 4, 3]);

    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let (n, p) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let (q, s) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let x = random_logical(&mut rng, n, p);
        let y = random_logical(&mut rng, q, s);
        assert_eq!(x.kron(&y).to_count(), x.to_count().kron(&y.to_count()));
    }
}

#[test]
fn swap_matrix_exchanges_factors() {
    for (m, n) in [(2, 2), (2, 3), (3, 2), (1, 5), (5, 1), (3, 3)] {
        let w = swap_matrix(m, n);
        assert_eq!(w.rows(), m * n);
        assert_eq!(w.ncols(), m * n);
        for i in 1..=m {
            for j in 1..=n {
                let x = LogicalMatrix::unit(m, i).unwrap();
                let y = LogicalMatrix::unit(n, j).unwrap();
                let swapped = w.stp(&x.stp(&y));
                assert_eq!(swapped.col(0), y.stp(&x).col(0));
            }
        }
    }
    assert_eq!(swap_matrix(2, 2).entries(), &[1, 3, 2, 4]);
}

#[test]
fn power_reducing_matrix_squares_a_factor() {
    assert_eq!(power_reducing_matrix(2).entries(), &[1, 4]);
    assert_eq!(power_reducing_matrix(3).entries(), &[1, 5, 9]);
    for k in 2..=4usize {
        let pr = power_reducing_matrix(k);
        for i in 1..=k {
            let x = LogicalMatrix::unit(k, i).unwrap();
            assert_eq!(pr.stp(&x).col(0), x.stp(&x).col(0));
        }
    }
}

#[test]
fn boolean_product_is_the_sign_of_the_count_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let (n, p, s) = (rng.gen_range(1..=8), rng.gen_range(1..=8), rng.gen_range(1..=8));
        let a = random_boolean(&mut rng, n, p);
        let b = random_boolean(&mut rng, p, s);
        let fast = a.bool_mul(&b).unwrap();
        let sign = a.to_count().mul(&b.to_count()).unwrap().booleanize();
        assert_eq!(fast, sign);
    }
}

#[test]
fn boolean_kron_matches_dense() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..50 {
        let (n, p) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let (q, s) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = random_boolean(&mut rng, n, p);
        let b = random_boolean(&mut rng, q, s);
        assert_eq!(a.kron(&b).to_count(), a.to_count().kron(&b.to_count()));
    }
}

#[test]
fn product_dimension_mismatch_is_reported() {
    let a = BooleanMatrix::identity(2);
    let b = BooleanMatrix::identity(3);
    assert!(matches!(a.bool_mul(&b), Err(MatrixError::DimensionMismatch { .. })));
    let c = CountMatrix::identity(2);
    let d = CountMatrix::identity(3);
    assert!(matches!(c.mul(&d), Err(MatrixError::DimensionMismatch { .. })));
}

#[test]
fn normalization_is_exact_and_tracks_dead_columns() {
    let m = CountMatrix::new(4, 3, vec![4, 0, 1, 4, 0, 1, 16, 0, 1, 8, 0, 1]).unwrap();
    let s = m.column_normalize();
    let expect = |n: i64, d: i64| num::BigRational::new(n.into(), d.into());
    assert_eq!(s.get(0, 0), &expect(1, 8));
    assert_eq!(s.get(2, 0), &expect(1, 2));
    assert_eq!(s.get(3, 0), &expect(1, 4));
    assert_eq!(s.get(1, 2), &expect(1, 4));
    assert_eq!(s.dead_cols(), &[1]);
    for j in [0usize, 2] {
        let total: num::BigRational = (0..4).map(|i| s.get(i, j).clone()).sum();
        assert!(num::One::is_one(&total));
    }
}

#[test]
fn json_roundtrips_every_kind() {
    let logical = LogicalMatrix::new(3, vec![2, 2, 1, 3]).unwrap();
    let boolean = BooleanMatrix::from_col_sets(3, &[vec![1, 3], vec![], vec![2]]).unwrap();
    let count = CountMatrix::new(2, 3, vec![0, 1, 2, 3, 4, 5]).unwrap();
    let stochastic = count.column_normalize();

    let j = serde_json::to_string(&MatrixJson::from(&logical)).unwrap();
    assert_eq!(LogicalMatrix::try_from(serde_json::from_str::<MatrixJson>(&j).unwrap()).unwrap(), logical);

    let j = serde_json::to_string(&MatrixJson::from(&boolean)).unwrap();
    assert_eq!(BooleanMatrix::try_from(serde_json::from_str::<MatrixJson>(&j).unwrap()).unwrap(), boolean);

    let j = serde_json::to_string(&MatrixJson::from(&count)).unwrap();
    assert_eq!(CountMatrix::try_from(serde_json::from_str::<MatrixJson>(&j).unwrap()).unwrap(), count);

    let j = serde_json::to_string(&MatrixJson::from(&stochastic)).unwrap();
    assert_eq!(
        StochasticMatrix::try_from(serde_json::from_str::<MatrixJson>(&j).unwrap()).unwrap(),
        stochastic
    );
}

#[test]
fn json_rejects_bad_payloads() {
    let bad: MatrixJson = serde_json::from_str(r#"{"kind":"logical","rows":2,"cols":[1,5]}"#).unwrap();
    assert!(matches!(
        LogicalMatrix::try_from(bad),
        Err(MatrixError::IndexOutOfRange { col: 1, index: 5, rows: 2 })
    ));

    let wrong: MatrixJson = serde_json::from_str(r#"{"kind":"count","rows":2,"cols":[1,0,0,1]}"#).unwrap();
    assert!(matches!(
        LogicalMatrix::try_from(wrong),
        Err(MatrixError::WrongKind { expected: "logical", found: "count" })
    ));

    let unbalanced: MatrixJson =
        serde_json::from_str(r#"{"kind":"stochastic","rows":2,"cols":["1/2","1/3"]}"#).unwrap();
    assert!(matches!(
        StochasticMatrix::try_from(unbalanced),
        Err(MatrixError::ColumnSumNotOne { .. })
    ));
}

#[test]
fn logical_transpose_is_boolean() {
    let l = LogicalMatrix::new(2, vec![1, 1, 2]).unwrap();
    let t = l.transpose();
    assert_eq!(t.rows(), 3);
    assert_eq!(t.ncols(), 2);
    assert_eq!(t.col_ones(0), vec![1, 2]);
    assert_eq!(t.col_ones(1), vec![3]);
}
