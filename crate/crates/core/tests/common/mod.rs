//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toric_core::cone::Polycone;
use toric_core::fan::{complete_under_faces, validate_fan};
use toric_core::linalg::{primitive, IntVec};
use toric_core::Fan;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn big(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("small coordinate"))
        .collect()
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

pub fn random_rays(
    rng: &mut ChaCha8Rng,
    n: usize,
    count: usize,
    lo: i64,
    hi: i64,
) -> Vec<Vec<i64>> {
    (0..count).map(|_| random_vec(rng, n, lo, hi)).collect()
}

pub fn cone(n: usize, rays: &[Vec<i64>]) -> Polycone {
    let rays: Vec<IntVec> = rays.iter().map(|r| big(r)).collect();
    Polycone::from_rays(n, &rays).expect("ray lengths match")
}

fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// A fan in the plane: random primitive rays in angular order, with every
/// consecutive pair spanning a cone when the angle between them is below π.
pub fn random_planar_fan(rng: &mut ChaCha8Rng) -> Fan {
    let count = rng.gen_range(2..=6);
    let mut rays: Vec<Vec<i64>> = Vec::new();
    while rays.len() < count {
        let v = random_vec(rng, 2, -4, 4);
        if v == [0, 0] {
            continue;
        }
        let p = small(&primitive(&big(&v)));
        if !rays.contains(&p) {
            rays.push(p);
        }
    }
    rays.sort_by(|a, b| {
        let ta = (a[1] as f64).atan2(a[0] as f64);
        let tb = (b[1] as f64).atan2(b[0] as f64);
        ta.partial_cmp(&tb).unwrap()
    });
    let mut cones = Vec::new();
    for i in 0..rays.len() {
        let (a, b) = (&rays[i], &rays[(i + 1) % rays.len()]);
        let cross = a[0] * b[1] - a[1] * b[0];
        if cross > 0 && rng.gen_bool(0.8) {
            cones.push(cone(2, &[a.clone(), b.clone()]));
        } else {
            cones.push(cone(2, std::slice::from_ref(a)));
        }
    }
    validate_fan(2, &complete_under_faces(&cones).unwrap()).expect("angular fans are valid")
}

/// A simplicial cone and its negative, meeting only at the origin.
pub fn random_opposite_pair_fan(rng: &mut ChaCha8Rng) -> Fan {
    loop {
        let rays = random_rays(rng, 3, 3, -3, 3);
        if det3(&rays[0], &rays[1], &rays[2]) == 0 {
            continue;
        }
        let negated: Vec<Vec<i64>> = rays
            .iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        let cones = [cone(3, &rays), cone(3, &negated)];
        return validate_fan(3, &complete_under_faces(&cones).unwrap())
            .expect("opposite simplicial cones form a fan");
    }
}

pub fn random_fans(seed: u64, planar: usize, spatial: usize) -> Vec<Fan> {
    let mut r = rng(seed);
    let mut out: Vec<Fan> = (0..planar).map(|_| random_planar_fan(&mut r)).collect();
    out.extend((0..spatial).map(|_| random_opposite_pair_fan(&mut r)));
    out
}

/// Whether `x` is a nonnegative combination of `rays`, by Carathéodory:
/// some linearly independent subset expresses `x` with nonnegative
/// coefficients. Integer Cramer's rule on a nonsingular minor.
pub fn in_cone_oracle(rays: &[Vec<i64>], x: &[i64]) -> bool {
    if x.iter().all(|&c| c == 0) {
        return true;
    }
    let n = x.len();
    let m = rays.len();
    for mask in 1u32..(1 << m) {
        let chosen: Vec<&Vec<i64>> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &rays[i])
            .collect();
        let k = chosen.len();
        if k > n {
            continue;
        }
        for rows in subsets(n, k) {
            let minor = |col: Option<usize>| {
                let mat: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&r| {
                        (0..k)
                            .map(|j| {
                                if Some(j) == col {
                                    x[r] as i128
                                } else {
                                    chosen[j][r] as i128
                                }
                            })
                            .collect()
                    })
                    .collect();
                det(mat)
            };
            let d = minor(None);
            if d == 0 {
                continue;
            }
            let nums: Vec<i128> = (0..k).map(|j| minor(Some(j))).collect();
            if nums.iter().any(|&c| c != 0 && (c > 0) != (d > 0)) {
                break;
            }
            let exact = (0..n).all(|r| {
                let lhs: i128 = (0..k).map(|j| nums[j] * chosen[j][r] as i128).sum();
                lhs == d * x[r] as i128
            });
            if exact {
                return true;
            }
            break;
        }
    }
    false
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let k = a.len();
    if k == 0 {
        return 1;
    }
    // fraction-free Bareiss elimination
    let mut sign = 1;
    let mut prev = 1i128;
    for i in 0..k {
        if a[i][i] == 0 {
            let Some(p) = (i + 1..k).find(|&r| a[r][i] != 0) else {
                return 0;
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
        }
        prev = a[i][i];
    }
    sign * a[k - 1][k - 1]
}

/// Lattice points of `cone(rays)` in the box `[-b, b]ⁿ` that are not a sum
/// of two nonzero lattice points of the cone.
pub fn hilbert_basis_oracle(rays: &[Vec<i64>], n: usize, b: i64) -> Vec<Vec<i64>> {
    // membership of every point of [-2b, 2b]ⁿ, where all differences land
    let reach = 2 * b;
    let side = (2 * reach + 1) as usize;
    let decode = |mut idx: usize| -> Vec<i64> {
        (0..n)
            .map(|_| {
                let c = (idx % side) as i64 - reach;
                idx /= side;
                c
            })
            .collect()
    };
    let encode = |p: &[i64]| -> usize {
        p.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * side + (c + reach) as usize)
    };
    let member: Vec<bool> = (0..side.pow(n as u32))
        .map(|i| in_cone_oracle(rays, &decode(i)))
        .collect();
    let mut points: Vec<Vec<i64>> = (0..side.pow(n as u32))
        .filter(|&i| member[i])
        .map(decode)
        .filter(|p| p.iter().all(|c| c.abs() <= b) && p.iter().any(|&c| c != 0))
        .collect();
    points.sort_by_key(|p| p.iter().map(|c| c.abs()).sum::<i64>());
    let mut out: Vec<Vec<i64>> = points
        .iter()
        .filter(|x| {
            !points.iter().any(|y| {
                let d: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                d.iter().any(|&c| c != 0) && member[encode(&d)]
            })
        })
        .cloned()
        .collect();
    out.sort();
    out
}
