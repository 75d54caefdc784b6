//! The root of unity data: `A` of odd order `N`, `q = A^2`.

use crate::error::KernelError;
use alloc::format;
use num_integer::Integer;

/// `A = exp(2 i pi k'/N)` with `N` odd and `gcd(k', N) = 1`; `k = 2k'` and `q = A^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootData {
    n: u32,
    kprime: u32,
}

impl RootData {
    pub fn new(n: u32, kprime: u32) -> Result<Self, KernelError> {
        if n < 3 || n % 2 == 0 {
            return Err(KernelError::InvalidRoot(format!("N = {n} must be odd and at least 3")));
        }
        if kprime == 0 || kprime >= n || kprime.gcd(&n) != 1 {
            return Err(KernelError::InvalidRoot(format!(
                "k' = {kprime} must lie in 1..N-1 and be coprime to N = {n}"
            )));
        }
        Ok(Self { n, kprime })
    }

    /// Order of `A` (and of `q`).
    pub fn n(&self) -> i64 {
        self.n as i64
    }

    pub fn kprime(&self) -> i64 {
        self.kprime as i64
    }

    /// `k = 2k'`.
    pub fn k(&self) -> i64 {
        2 * self.kprime as i64
    }

    /// `(N-1)/2`, an integer because `N` is odd.
    pub fn half_n_minus_one(&self) -> i64 {
        (self.n as i64 - 1) / 2
    }
}
