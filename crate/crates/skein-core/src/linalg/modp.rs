//! Arithmetic modulo a word-sized prime, and reduction of cyclotomic
//! integers through a prime that splits completely.
//!
//! If `p = 1 mod M` and `r` has order `M` in `F_p`, sending `zeta_M` to `r`
//! is a ring map from `Z[zeta_M][1/d]` to `F_p` whenever `p` does not divide
//! `d`. A matrix family whose reduction has full rank therefore has full
//! rank over the cyclotomic field.

use crate::scalar::Cyclo;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    (a % p != 0).then(|| pow_mod(a, p - 2, p))
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Largest prime `p < 2^61` with `p = 1 mod m`, skipping `skip` hits, and
/// an element of exact order `m` modulo it.
pub fn split_prime(m: u64, skip: usize) -> (u64, u64) {
    let top = 1u64 << 61;
    let mut p = top - (top % m) + 1;
    let mut seen = 0;
    loop {
        p -= m;
        if is_prime(p) {
            if seen == skip {
                break;
            }
            seen += 1;
        }
    }
    let factors = prime_factors(m);
    let cof = (p - 1) / m;
    for g in 2u64.. {
        let r = pow_mod(g, cof, p);
        if factors.iter().all(|&l| pow_mod(r, m / l, p) != 1) {
            return (p, r);
        }
    }
    unreachable!("a primitive root exists")
}

/// Reduction `Q(zeta_M) -> F_p` with `zeta_M -> r`.
#[derive(Clone, Debug)]
pub struct CycloReducer {
    p: u64,
    conductor: usize,
    root_powers: Vec<u64>,
}

impl CycloReducer {
    pub fn new(conductor: usize, skip: usize) -> Self {
        let (p, r) = split_prime(conductor as u64, skip);
        let mut root_powers = Vec::with_capacity(conductor);
        let mut x = 1u64;
        for _ in 0..conductor {
            root_powers.push(x);
            x = mul_mod(x, r, p);
        }
        Self { p, conductor, root_powers }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn big_mod(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap_or(0)
    }

    /// Image of `c`, or `None` when its denominator is divisible by `p`.
    pub fn reduce(&self, c: &Cyclo) -> Option<u64> {
        assert_eq!(c.conductor(), self.conductor, "reducer built for another conductor");
        let (num, den) = c.integer_parts();
        let d = inv_mod(self.big_mod(den), self.p)?;
        let mut acc = 0u64;
        for (j, a) in num.iter().enumerate() {
            let a = self.big_mod(a);
            if a != 0 {
                acc = (acc + mul_mod(a, self.root_powers[j], self.p)) % self.p;
            }
        }
        Some(mul_mod(acc, d, self.p))
    }
}

/// An incrementally grown row-echelon basis over `F_p`.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    p: u64,
    dim: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonSpan {
    pub fn new(p: u64, dim: usize) -> Self {
        Self { p, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduces `v` against the basis and keeps it if independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let p = self.p;
        for (piv, row) in &self.rows {
            let f = v[*piv];
            if f == 0 {
                continue;
            }
            let f = p - f;
            for (x, r) in v.iter_mut().zip(row) {
                if *r != 0 {
                    *x = (*x + mul_mod(f, *r, p)) % p;
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[piv], p).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        self.rows.push((piv, v));
        true
    }
}

/// Dense square matrices over `F_p`, row-major.
pub fn matmul_mod(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut out = alloc::vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    let t = &mut out[i * n + j];
                    *t = (*t + mul_mod(x, y, p)) % p;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloField;

    #[test]
    fn split_prime_has_root() {
        let (p, r) = split_prime(18, 0);
        assert_eq!(p % 18, 1);
        assert_eq!(pow_mod(r, 18, p), 1);
        assert_ne!(pow_mod(r, 9, p), 1);
        assert_ne!(pow_mod(r, 6, p), 1);
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let f = CycloField::new(9);
        let red = CycloReducer::new(9, 0);
        let a = Cyclo::zeta_pow(&f, 2) + Cyclo::from_i64(&f, 3);
        let b = Cyclo::zeta_pow(&f, 7).scale_i64(-4) + Cyclo::one(&f);
        let lhs = red.reduce(&(a.clone() * b.clone())).unwrap();
        let rhs = mul_mod(red.reduce(&a).unwrap(), red.reduce(&b).unwrap(), red.prime());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn echelon_rank() {
        let mut s = EchelonSpan::new(101, 3);
        assert!(s.insert(alloc::vec![1, 2, 3]));
        assert!(!s.insert(alloc::vec![2, 4, 6]));
        assert!(s.insert(alloc::vec![0, 1, 0]));
        assert_eq!(s.rank(), 2);
    }
}
