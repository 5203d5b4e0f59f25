//! Cross-field properties of the exact linear algebra, checked against an
//! independent integer Smith-form oracle.

use zorbit_core::matrix::Matrix;
use zorbit_core::rng::Rng;
use zorbit_core::scalar::Field;

/// Invariant factors of an integer matrix by naive Smith reduction. Not used
/// anywhere in the library; this is the oracle.
fn invariant_factors(rows: usize, cols: usize, data: &[i64]) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..cols).map(|j| data[i * cols + j] as i128).collect())
        .collect();
    let mut factors = Vec::new();
    let mut top = 0usize;
    while top < rows.min(cols) {
        // find the smallest nonzero entry in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if m[i][j] != 0 && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }
        // clear the row and column; restart whenever a remainder appears
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in top + 1..rows {
                let q = m[i][top] / m[top][top];
                if q != 0 {
                    for j in top..cols {
                        m[i][j] -= q * m[top][j];
                    }
                }
                if m[i][top] != 0 {
                    m.swap(top, i);
                    dirty = true;
                }
            }
            for j in top + 1..cols {
                let q = m[top][j] / m[top][top];
                if q != 0 {
                    for i in top..rows {
                        m[i][j] -= q * m[i][top];
                    }
                }
                if m[top][j] != 0 {
                    for row in m.iter_mut() {
                        row.swap(top, j);
                    }
                    dirty = true;
                }
            }
        }
        factors.push(m[top][top].abs());
        top += 1;
    }
    factors
}

#[test]
fn prime_field_rank_agrees_unless_p_divides_an_invariant_factor() {
    let mut rng = Rng::new(0xFACADE);
    for _ in 0..60 {
        let rows = 2 + (rng.below(4) as usize);
        let cols = 2 + (rng.below(4) as usize);
        let data: Vec<i64> = (0..rows * cols).map(|_| rng.small_int(6)).collect();
        let q_matrix = Matrix::from_i64(rows, cols, &data, Field::Q);
        let rank_q = q_matrix.rank();
        let factors = invariant_factors(rows, cols, &data);
        assert_eq!(factors.len(), rank_q, "oracle rank disagrees over Q");
        for p in [2u64, 3, 5, 7, 11, 13] {
            let rank_p = Matrix::from_i64(rows, cols, &data, Field::Fp(p)).rank();
            let expected = factors.iter().filter(|&&f| f % p as i128 != 0).count();
            assert_eq!(
                rank_p, expected,
                "rank over GF({p}) vs invariant factors {factors:?}"
            );
            if factors.iter().all(|&f| f % p as i128 != 0) {
                assert_eq!(rank_p, rank_q, "p={p} divides no invariant factor");
            } else {
                assert!(rank_p < rank_q, "drop expected when p divides a factor");
            }
        }
    }
}

#[test]
fn reduction_mod_p_commutes_with_products() {
    let mut rng = Rng::new(0xBEADED);
    for p in [3u64, 5, 7] {
        for _ in 0..10 {
            let a_data: Vec<i64> = (0..9).map(|_| rng.small_int(4)).collect();
            let b_data: Vec<i64> = (0..9).map(|_| rng.small_int(4)).collect();
            let aq = Matrix::from_i64(3, 3, &a_data, Field::Q);
            let bq = Matrix::from_i64(3, 3, &b_data, Field::Q);
            let lhs = aq.mul(&bq).reduce_mod(p).unwrap();
            let rhs = aq.reduce_mod(p).unwrap().mul(&bq.reduce_mod(p).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
