//! Dense univariate polynomials over a table-driven [`Gf`], stored as
//! coefficient vectors with the constant term first.

use super::Gf;

pub(crate) fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(f: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.sub(x, y)
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(f: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn divrem(f: &Gf, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv_nonzero(b[db]);
    let mut rem = trim(a.to_vec());
    let Some(da) = degree(&rem) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0; da - db + 1];
    for i in (db..=da).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        let factor = f.mul(c, lead_inv);
        quot[i - db] = factor;
        for (j, &bj) in b[..=db].iter().enumerate() {
            let idx = i - db + j;
            rem[idx] = f.sub(rem[idx], f.mul(factor, bj));
        }
    }
    (trim(quot), trim(rem))
}

pub(crate) fn rem(f: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(f, a, b).1
}

pub(crate) fn mulmod(f: &Gf, a: &[u32], b: &[u32], modulus: &[u32]) -> Vec<u32> {
    rem(f, &mul(f, a, b), modulus)
}

pub(crate) fn powmod(f: &Gf, base: &[u32], mut exp: u64, modulus: &[u32]) -> Vec<u32> {
    let mut acc = vec![1];
    let mut sq = rem(f, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &sq, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            sq = mulmod(f, &sq, &sq, modulus);
        }
    }
    acc
}

/// Monic greatest common divisor.
pub(crate) fn gcd(f: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, x)
}

fn make_monic(f: &Gf, a: Vec<u32>) -> Vec<u32> {
    match a.last() {
        Some(&lead) if lead != 1 => {
            let inv = f.inv_nonzero(lead);
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
        _ => a,
    }
}

/// Inverse of `a` modulo `modulus`, if `gcd(a, modulus) = 1`.
pub(crate) fn inv_mod(f: &Gf, a: &[u32], modulus: &[u32]) -> Option<Vec<u32>> {
    // extended Euclid tracking only the coefficient of `a`
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = rem(f, a, modulus);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let scale = f.inv_nonzero(r0[0]);
    let inv: Vec<u32> = s0.into_iter().map(|c| f.mul(c, scale)).collect();
    Some(rem(f, &inv, modulus))
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn has_root(f: &Gf, poly: &[u32]) -> bool {
    (0..f.order()).any(|x| {
        let mut acc = 0;
        for &c in poly.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc == 0
    })
}

/// Rabin's test for a monic polynomial of degree `m >= 1`.
pub(crate) fn is_irreducible(f: &Gf, poly: &[u32]) -> bool {
    let m = match degree(poly) {
        Some(m) if m >= 1 => m,
        _ => return false,
    };
    if m == 1 {
        return true;
    }
    if poly[0] == 0 {
        return false;
    }
    if f.order() <= 64 && has_root(f, poly) {
        return false;
    }
    let q = u64::from(f.order());
    let x = vec![0, 1];
    let factors = prime_factors(m);
    // powers[i] = x^(q^i) mod poly
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(x.clone());
    for i in 1..=m {
        let next = powmod(f, &powers[i - 1], q, poly);
        powers.push(next);
    }
    if powers[m] != x {
        return false;
    }
    factors.iter().all(|&r| {
        let h = sub(f, &powers[m / r], &x);
        degree(&gcd(f, &h, poly)) == Some(0)
    })
}

/// Lexicographically smallest monic irreducible polynomial of degree `m`,
/// comparing the coefficient lists constant term first. The returned vector
/// has length `m + 1` and ends in the leading 1.
pub(crate) fn smallest_irreducible(f: &Gf, m: usize) -> Vec<u32> {
    assert!(m >= 1);
    let q = f.order();
    let mut coeffs = vec![0u32; m + 1];
    coeffs[m] = 1;
    if m > 1 {
        // constant term 0 means x divides the candidate
        coeffs[0] = 1;
    }
    loop {
        if is_irreducible(f, &coeffs) {
            return coeffs;
        }
        // odometer: the last non-leading coefficient moves fastest
        let mut pos = m - 1;
        loop {
            coeffs[pos] += 1;
            if coeffs[pos] < q {
                break;
            }
            coeffs[pos] = 0;
            assert!(pos > 0, "no irreducible polynomial of degree {m}");
            pos -= 1;
        }
    }
}
