#![allow(dead_code)]

use lefschetz::{
    twist_power_matrix, HomologyClass, IntegerMatrix, Letter, Surface, SymplecticMatrix, TwistWord,
};
use num_bigint::BigInt;
use rand::Rng;

pub fn random_class<R: Rng>(rng: &mut R, s: Surface, bound: i64) -> HomologyClass {
    let coords: Vec<i64> = (0..s.dimension()).map(|_| rng.gen_range(-bound..=bound)).collect();
    HomologyClass::from_i64(s, &coords).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, s: Surface, len: usize) -> TwistWord {
    let letters = (0..len)
        .map(|_| {
            let c = random_class(rng, s, 2);
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            Letter::new(c, e * rng.gen_range(1..=2), false).unwrap()
        })
        .collect();
    TwistWord::new(s, letters).unwrap()
}

/// Product of `len` random twists (of either handedness) about small classes.
pub fn random_twist_product<R: Rng>(rng: &mut R, s: Surface, len: usize) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(s);
    for _ in 0..len {
        let c = random_class(rng, s, 1);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        m = twist_power_matrix(&c, e).compose(&m).unwrap();
    }
    m
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    IntegerMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Determinant by cofactor expansion over i128; independent of the crate's elimination code.
pub fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * cofactor_det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut c in choose(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Determinantal divisors: `D_k` = gcd of all `k x k` minors, for `k = 1..=min(rows, cols)`.
/// Invariant factors are `d_k = D_k / D_{k-1}`.
pub fn determinantal_divisors(m: &[Vec<i128>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = 0;
            for rs in choose(rows, k) {
                for cs in choose(cols, k) {
                    let sub: Vec<Vec<i128>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                    g = gcd(g, cofactor_det(&sub));
                }
            }
            g
        })
        .collect()
}

/// Invariant factors (with zeros) from the determinantal divisors.
pub fn invariant_factors_oracle(m: &[Vec<i128>]) -> Vec<i128> {
    let d = determinantal_divisors(m);
    let mut prev = 1;
    d.iter()
        .map(|&dk| {
            if dk == 0 {
                0
            } else {
                let f = dk / prev;
                prev = dk;
                f
            }
        })
        .collect()
}

pub fn to_i128_rows(m: &IntegerMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| i128::try_from(x).unwrap()).collect())
        .collect()
}
