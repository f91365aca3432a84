//! Brute-force reference for the point classes, written against plain
//! integer pairs so it shares nothing with the library beyond the digit
//! conventions.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `a + bθ` with `θ² = −1 − θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Z3(pub i64, pub i64);

impl Z3 {
    pub fn add(self, o: Z3) -> Z3 {
        Z3(self.0 + o.0, self.1 + o.1)
    }

    pub fn mul(self, o: Z3) -> Z3 {
        let (a, b, c, d) = (self.0, self.1, o.0, o.1);
        Z3(a * c - b * d, a * d + b * c - b * d)
    }

    pub fn cube(self) -> Z3 {
        self.mul(self).mul(self)
    }

    /// 𝔭-adic valuation, via the 3-adic valuation of the norm.
    pub fn val(self) -> Option<u32> {
        let n = self.0 * self.0 - self.0 * self.1 + self.1 * self.1;
        if n == 0 {
            return None;
        }
        let mut n = n;
        let mut v = 0;
        while n % 3 == 0 {
            n /= 3;
            v += 1;
        }
        Some(v)
    }
}

pub const P: Z3 = Z3(1, -1);
pub const THETA: Z3 = Z3(0, 1);

pub fn from_digits(d: &[i8]) -> Z3 {
    d.iter()
        .rev()
        .fold(Z3(0, 0), |acc, &x| acc.mul(P).add(Z3(x as i64, 0)))
}

pub fn form(x: [Z3; 4]) -> Z3 {
    x[0].cube()
        .add(x[1].cube())
        .add(x[2].cube())
        .add(THETA.mul(x[3].cube()))
}

/// All balanced digit vectors of length `n`.
pub fn digit_vectors(n: usize) -> Vec<Vec<i8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1, 0, 1].into_iter().map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

/// A tuple mod 𝔭³ with a unit coordinate lifts to a point iff `ν(F) ≥ 5`:
/// `F` mod 𝔭⁵ only sees the tuple mod 𝔭³, and the partial derivative in a
/// unit coordinate has valuation exactly 2.
pub fn liftable3(t: &[Vec<i8>; 4]) -> bool {
    let x = [0, 1, 2, 3].map(|i| from_digits(&t[i]));
    form(x).val().is_none_or(|v| v >= 5)
}

/// Canonical tuples modulo 𝔭ⁿ: pivot `1`, earlier coordinates divisible by
/// 𝔭, kept iff some extension to 𝔭³ is liftable.
pub fn brute_force_classes(n: usize) -> BTreeSet<[Vec<i8>; 4]> {
    let mut out = BTreeSet::new();
    let all = digit_vectors(n);
    let ext = digit_vectors(3 - n);
    let mut one = vec![0i8; n];
    one[0] = 1;
    for pivot in 0..4 {
        let choices = |j: usize| -> Vec<Vec<i8>> {
            if j < pivot {
                all.iter().filter(|v| v[0] == 0).cloned().collect()
            } else if j == pivot {
                vec![one.clone()]
            } else {
                all.clone()
            }
        };
        for a in choices(0) {
            for b in choices(1) {
                for c in choices(2) {
                    for d in choices(3) {
                        let t = [a.clone(), b.clone(), c.clone(), d.clone()];
                        if extends_to_point(&t, pivot, &ext) {
                            out.insert(t);
                        }
                    }
                }
            }
        }
    }
    out
}

fn extends_to_point(t: &[Vec<i8>; 4], pivot: usize, ext: &[Vec<i8>]) -> bool {
    let options = |j: usize| -> Vec<Vec<i8>> {
        if j == pivot {
            vec![[t[j].clone(), vec![0; ext[0].len()]].concat()]
        } else {
            ext.iter()
                .map(|e| [t[j].clone(), e.clone()].concat())
                .collect()
        }
    };
    let (o0, o1, o2, o3) = (options(0), options(1), options(2), options(3));
    o0.iter().any(|a| {
        o1.iter().any(|b| {
            o2.iter().any(|c| {
                o3.iter()
                    .any(|d| liftable3(&[a.clone(), b.clone(), c.clone(), d.clone()]))
            })
        })
    })
}
