//! Dense univariate polynomials over GF(p), coefficients low to high, used
//! for root finding when splitting idempotents.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn rem(f: PrimeField, a: &[u64], m: &[u64]) -> Vec<u64> {
    let dm = degree(m).expect("nonzero modulus");
    let inv = f.inv(m[dm]);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], inv);
        let shift = dr - dm;
        for (i, &mi) in m[..=dm].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r = trim(r);
    }
    r
}

fn mul_mod(f: PrimeField, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(out[i + j], x, y);
        }
    }
    rem(f, &out, m)
}

fn pow_mod(f: PrimeField, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut result = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(f, &result, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        e >>= 1;
    }
    result
}

fn monic(f: PrimeField, a: Vec<u64>) -> Vec<u64> {
    let a = trim(a);
    match a.last() {
        Some(&lead) => {
            let inv = f.inv(lead);
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
        None => a,
    }
}

fn gcd(f: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn sub_x(f: PrimeField, a: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    if a.len() < 2 {
        a.resize(2, 0);
    }
    a[1] = f.sub(a[1], 1);
    trim(a)
}

fn eval(f: PrimeField, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, x))
}

/// Distinct roots in GF(p), sorted.
pub(crate) fn roots(f: PrimeField, poly: &[u64]) -> Vec<u64> {
    let poly = monic(f, poly.to_vec());
    let Some(d) = degree(&poly) else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let p = f.modulus();
    let mut out = if p <= 1 << 12 {
        (0..p).filter(|&x| eval(f, &poly, x) == 0).collect()
    } else {
        // gcd with x^p - x keeps the product of the distinct linear factors.
        let xp = pow_mod(f, &[0, 1], p, &poly);
        let g = gcd(f, &poly, &sub_x(f, &xp));
        let mut found = Vec::new();
        split(f, g, &mut found);
        found
    };
    out.sort_unstable();
    out.dedup();
    out
}

/// Equal-degree splitting of a product of distinct linear factors.
fn split(f: PrimeField, g: Vec<u64>, out: &mut Vec<u64>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(g[0])),
        Some(d) => {
            let half = (f.modulus() - 1) / 2;
            for a in 0..f.modulus() {
                let t = pow_mod(f, &[a, 1], half, &g);
                let mut t1 = t.clone();
                if t1.is_empty() {
                    t1.push(0);
                }
                t1[0] = f.sub(t1[0], 1);
                let h = gcd(f, &g, &t1);
                let dh = degree(&h).unwrap_or(0);
                if dh > 0 && dh < d {
                    let (q, _) = div(f, &g, &h);
                    split(f, h, out);
                    split(f, q, out);
                    return;
                }
            }
        }
    }
}

fn div(f: PrimeField, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("nonzero divisor");
    let inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv);
        q[dr - db] = c;
        for (i, &bi) in b[..=db].iter().enumerate() {
            r[dr - db + i] = f.sub(r[dr - db + i], f.mul(c, bi));
        }
        r = trim(r);
    }
    (trim(q), r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_small_and_large_fields() {
        // x² + x + 1 is irreducible mod 101, x² + 1 mod 1000003.
        for (p, quad) in [(101u64, [1u64, 1, 1]), (1_000_003, [1, 0, 1])] {
            let f = PrimeField::new(p).unwrap();
            let mut poly = vec![1u64];
            for r in [2u64, 5, 7] {
                let mut next = vec![0u64; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i + 1] = f.add(next[i + 1], c);
                    next[i] = f.sub(next[i], f.mul(c, r));
                }
                poly = next;
            }
            assert_eq!(roots(f, &poly), vec![2, 5, 7]);
            let q = mul_mod(f, &poly, &quad, &[0, 0, 0, 0, 0, 0, 1]);
            assert_eq!(roots(f, &q), vec![2, 5, 7]);
        }
    }
}
