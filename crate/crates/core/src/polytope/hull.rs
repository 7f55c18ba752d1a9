//! Facet enumeration for stable set polytopes by double description.
//!
//! The polytope is the convex hull of 0/1 points. Homogenize each point `v`
//! to the ray `(1, v)`; a valid inequality `a·x <= b` is the vector
//! `y = (-b, a)` of the polar cone `{ y : <(1,v), y> <= 0 for all v }`, and
//! the facets of the polytope are exactly the extreme rays of that polar
//! cone (the polytope is full-dimensional, so the polar cone is pointed and
//! the lone extra ray `(-1, 0, ..., 0)` is never extreme).
//!
//! The empty set and the singletons give a starting simplex whose polar rays
//! are known in closed form; the remaining points are inserted one at a time
//! with the classic combinatorial adjacency test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::multigraph::NodeId;

use super::Inequality;

struct Ray {
    y: Vec<BigInt>,
    /// Tight constraints among those processed so far, as a bitset.
    zero: Vec<u64>,
}

impl Ray {
    fn normalize(&mut self) {
        let mut g = BigInt::zero();
        for c in &self.y {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.y {
                *c /= &g;
            }
        }
    }
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn bit_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bit_subset(sub: &[u64], sup: &[u64]) -> bool {
    sub.iter().zip(sup).all(|(x, y)| x & !y == 0)
}

/// `sets` must contain the empty set and all singletons of `0..n`.
pub(super) fn facets_of_stable_sets(n: usize, sets: &[Vec<NodeId>]) -> Vec<Inequality> {
    // Constraint order: empty set, singletons, then the remaining sets by
    // ascending size and lexicographic order. Ascending size keeps the
    // intermediate cones close to cardinality truncations of the final
    // polytope, which keeps the ray count small.
    let mut rest: Vec<&Vec<NodeId>> = sets.iter().filter(|s| s.len() >= 2).collect();
    rest.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let total = n + 1 + rest.len();
    let words = total.div_ceil(64);

    // Polar rays of the initial simplex {0, e_1, ..., e_n}:
    //   r_0 = (-1, 1, ..., 1)   tight on every singleton constraint,
    //   r_i = (0, -e_i)         tight on everything except singleton i.
    let mut rays: Vec<Ray> = Vec::with_capacity(n + 1);
    {
        let mut y = vec![BigInt::from(-1)];
        y.extend(std::iter::repeat_with(BigInt::one).take(n));
        let mut zero = vec![0u64; words];
        for c in 1..=n {
            bit_set(&mut zero, c);
        }
        rays.push(Ray { y, zero });
    }
    for i in 0..n {
        let mut y = vec![BigInt::zero(); n + 1];
        y[i + 1] = BigInt::from(-1);
        let mut zero = vec![0u64; words];
        for c in 0..=n {
            if c != i + 1 {
                bit_set(&mut zero, c);
            }
        }
        rays.push(Ray { y, zero });
    }

    for (offset, set) in rest.iter().enumerate() {
        let idx = n + 1 + offset;
        // <(1, chi_S), y> = y_0 + sum_{i in S} y_{i+1}
        let eval = |y: &[BigInt]| -> BigInt {
            let mut v = y[0].clone();
            for &i in set.iter() {
                v += &y[i + 1];
            }
            v
        };

        let values: Vec<BigInt> = rays.iter().map(|r| eval(&r.y)).collect();
        if values.iter().all(|v| !v.is_positive()) {
            for (ray, value) in rays.iter_mut().zip(&values) {
                if value.is_zero() {
                    bit_set(&mut ray.zero, idx);
                }
            }
            continue;
        }

        // New rays: one per adjacent (positive, negative) pair.
        let mut next: Vec<Ray> = Vec::new();
        for (pi, pv) in values.iter().enumerate() {
            if !pv.is_positive() {
                continue;
            }
            for (qi, qv) in values.iter().enumerate() {
                if !qv.is_negative() {
                    continue;
                }
                let common = bit_and(&rays[pi].zero, &rays[qi].zero);
                let adjacent = rays.iter().enumerate().all(|(ri, r)| {
                    ri == pi || ri == qi || !bit_subset(&common, &r.zero)
                });
                if !adjacent {
                    continue;
                }
                let mut y = Vec::with_capacity(n + 1);
                for k in 0..=n {
                    y.push(pv.clone() * &rays[qi].y[k] - qv.clone() * &rays[pi].y[k]);
                }
                let mut zero = common;
                bit_set(&mut zero, idx);
                let mut ray = Ray { y, zero };
                ray.normalize();
                next.push(ray);
            }
        }

        let mut survivors: Vec<Ray> = Vec::new();
        for (ray, value) in rays.into_iter().zip(values) {
            if !value.is_positive() {
                let mut ray = ray;
                if value.is_zero() {
                    bit_set(&mut ray.zero, idx);
                }
                survivors.push(ray);
            }
        }
        survivors.extend(next);
        rays = survivors;
    }

    rays.into_iter()
        .map(|r| {
            let b = -r.y[0].clone();
            Inequality::new(r.y[1..].to_vec(), b)
        })
        .collect()
}
