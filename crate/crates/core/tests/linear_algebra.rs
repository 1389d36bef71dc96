//! Exact linear algebra against a separately written elimination over pairs
//! of big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trias_core::{Matrix, Scalar};

/// a + bi as a plain pair.
type G = (BigRational, BigRational);

fn g(s: &Scalar) -> G {
    (s.re.clone(), s.im.clone())
}

fn gmul(a: &G, b: &G) -> G {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gsub(a: &G, b: &G) -> G {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn gdiv(a: &G, b: &G) -> G {
    let n = &b.0 * &b.0 + &b.1 * &b.1;
    let conj = (b.0.clone(), -b.1.clone());
    let p = gmul(a, &conj);
    (p.0 / &n, p.1 / n)
}

fn gzero(a: &G) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

/// Forward elimination only; counts pivots.
fn oracle_rank(rows: &[Vec<G>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !gzero(&m[r][c])) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if gzero(&m[r][c]) {
                continue;
            }
            let f = gdiv(&m[r][c], &m[rank][c]);
            let pivot_row = m[rank].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                *x = gsub(x, &gmul(&f, p));
            }
        }
        rank += 1;
    }
    rank
}

fn oracle_mul(a: &[Vec<G>], b: &[Vec<G>]) -> Vec<Vec<G>> {
    let zero = (BigRational::zero(), BigRational::zero());
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| {
                    (0..b.len()).fold(zero.clone(), |acc, k| {
                        let p = gmul(&a[i][k], &b[k][j]);
                        (acc.0 + p.0, acc.1 + p.1)
                    })
                })
                .collect()
        })
        .collect()
}

fn rows_of(m: &Matrix) -> Vec<Vec<G>> {
    m.to_rows().iter().map(|r| r.iter().map(g).collect()).collect()
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let q = |rng: &mut ChaCha8Rng| {
        BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=5)))
    };
    if rng.gen_bool(0.3) {
        return Scalar::zero();
    }
    Scalar::new(q(rng), q(rng))
}

/// A 6×6 matrix, sometimes made singular by repeating row combinations.
fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix {
    let mut rows: Vec<Vec<Scalar>> = (0..6).map(|_| (0..6).map(|_| random_scalar(rng)).collect()).collect();
    let dependent = rng.gen_range(0..4);
    for d in 0..dependent {
        let (a, b) = (rng.gen_range(0..6), rng.gen_range(0..6));
        let (s, t) = (random_scalar(rng), random_scalar(rng));
        let target = 5 - d;
        if target == a || target == b {
            continue;
        }
        rows[target] = (0..6).map(|c| &(&s * &rows[a][c]) + &(&t * &rows[b][c])).collect();
    }
    Matrix::from_rows(rows).unwrap()
}

#[test]
fn hundred_random_matrices_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut singular = 0;
    for _ in 0..100 {
        let m = random_matrix(&mut rng);
        let rows = rows_of(&m);
        let rank = m.rank();
        assert_eq!(rank, oracle_rank(&rows));
        let kernel = m.nullspace();
        assert_eq!(rank + kernel.len(), 6);
        for v in &kernel {
            let col: Vec<Vec<G>> = v.iter().map(|x| vec![g(x)]).collect();
            assert!(oracle_mul(&rows, &col).iter().all(|r| gzero(&r[0])));
        }
        let kernel_rows: Vec<Vec<G>> = kernel.iter().map(|v| v.iter().map(g).collect()).collect();
        assert_eq!(oracle_rank(&kernel_rows), kernel.len());
        match m.inverse() {
            Ok(inv) => {
                assert_eq!(rank, 6);
                let prod = oracle_mul(&rows, &rows_of(&inv));
                for (i, r) in prod.iter().enumerate() {
                    for (j, x) in r.iter().enumerate() {
                        let want = if i == j { BigRational::one() } else { BigRational::zero() };
                        assert_eq!(x, &(want, BigRational::zero()));
                    }
                }
            }
            Err(_) => {
                singular += 1;
                assert!(rank < 6);
            }
        }
    }
    assert!(singular > 0, "the sample should include singular matrices");
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -4i64..=4).prop_map(|(a, d, b)| &Scalar::from_frac(a, d) + &(&Scalar::i() * &Scalar::from_int(b)))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_scalar(), r * c).prop_map(move |e| Matrix::from_entries(r, c, e).unwrap())
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_cols(m in any_matrix()) {
        prop_assert_eq!(m.rank() + m.nullspace().len(), m.cols());
        prop_assert_eq!(m.rank(), oracle_rank(&rows_of(&m)));
    }

    #[test]
    fn rank_is_transpose_invariant(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let r = m.rref().matrix;
        prop_assert_eq!(r.rref().matrix, r);
    }

    #[test]
    fn scalar_parse_round_trip(s in small_scalar()) {
        let back: Scalar = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }
}
