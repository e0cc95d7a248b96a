//! Sieved prime tables.

use alloc::vec;
use alloc::vec::Vec;

/// Primes up to a limit with their logarithms.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    logs: Vec<f64>,
}

impl PrimeTable {
    /// Sieve of Eratosthenes up to `limit` inclusive.
    pub fn sieve(limit: u64) -> PrimeTable {
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        let logs = primes.iter().map(|&p| libm::log(p as f64)).collect();
        PrimeTable {
            limit,
            primes,
            logs,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Pairs `(p, log p)` in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.primes.iter().copied().zip(self.logs.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Number of primes `≤ x`.
    pub fn count_up_to(&self, x: u64) -> usize {
        self.primes.partition_point(|&p| p <= x)
    }
}
