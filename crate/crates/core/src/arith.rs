//! Integer-side machinery: prime sieve with smallest-factor table, Mobius
//! and von Mangoldt functions, prime counting, square-free enumeration,
//! counting snapshots (step functions), and the shared spectrum-file reader.

use crate::error::{Error, Result};
use serde::Serialize;
use std::path::Path;

pub const DEFAULT_SIEVE_BUDGET: u64 = 100_000_000;

/// Primes up to `limit` plus the smallest-prime-factor table that generated
/// them. `smallest_factor[n]` divides n for every 2 <= n <= limit.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    pub limit: u64,
    pub primes: Vec<u64>,
    pub smallest_factor: Vec<u32>,
}

pub fn sieve_primes(limit: u64) -> Result<PrimeSieve> {
    sieve_primes_with_budget(limit, DEFAULT_SIEVE_BUDGET)
}

pub fn sieve_primes_with_budget(limit: u64, budget: u64) -> Result<PrimeSieve> {
    if limit > budget || limit > u32::MAX as u64 {
        return Err(Error::Capacity(format!(
            "sieve limit {limit} exceeds the budget {budget}"
        )));
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u64);
        }
        // standard linear sieve: each composite is struck once via its spf
        for &p in &primes {
            let p = p as usize;
            if p > spf[i] as usize || i * p > n {
                break;
            }
            spf[i * p] = p as u32;
        }
    }
    Ok(PrimeSieve { limit, primes, smallest_factor: spf })
}

impl PrimeSieve {
    /// Mobius via the smallest-factor walk; n must be <= limit.
    pub fn mobius(&self, n: u64) -> i32 {
        debug_assert!(n >= 1 && n <= self.limit);
        let mut m = n as usize;
        let mut val = 1i32;
        while m > 1 {
            let p = self.smallest_factor[m] as usize;
            m /= p;
            if m % p == 0 {
                return 0;
            }
            val = -val;
        }
        val
    }

    /// ln p if n is a prime power p^k, else 0.
    pub fn von_mangoldt(&self, n: u64) -> f64 {
        debug_assert!(n >= 1 && n <= self.limit);
        if n < 2 {
            return 0.0;
        }
        let p = self.smallest_factor[n as usize] as u64;
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        if m == 1 {
            (p as f64).ln()
        } else {
            0.0
        }
    }
}

/// Standalone Mobius by trial division (for arguments outside any sieve).
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius needs n >= 1");
    let mut m = n;
    let mut val = 1i32;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            val = -val;
        }
        d += 1;
    }
    if m > 1 {
        val = -val;
    }
    val
}

/// Standalone von Mangoldt by trial division.
pub fn von_mangoldt(n: u64) -> f64 {
    assert!(n >= 1, "von_mangoldt needs n >= 1");
    if n < 2 {
        return 0.0;
    }
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            return if m == 1 { (d as f64).ln() } else { 0.0 };
        }
        d += 1;
    }
    (m as f64).ln() // n itself is prime
}

/// pi(x) from a sieve that covers x.
pub fn prime_counting(x: f64, sieve: &PrimeSieve) -> Result<u64> {
    if !x.is_finite() {
        return Err(Error::Domain("prime_counting needs finite x".into()));
    }
    if x > sieve.limit as f64 {
        return Err(Error::Capacity(format!(
            "prime_counting at x = {x} exceeds the sieve limit {}",
            sieve.limit
        )));
    }
    let cnt = sieve.primes.partition_point(|&p| p as f64 <= x);
    Ok(cnt as u64)
}

/// All square-free integers in [1, K], ascending.
pub fn squarefree_up_to(k: u64) -> Vec<u64> {
    (1..=k).filter(|&n| mobius(n) != 0).collect()
}

/// A right-continuous integer step function: value(x) = values[i] for the
/// largest breakpoint <= x, and 0 left of the first breakpoint.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingSnapshot {
    pub breakpoints: Vec<f64>,
    pub values: Vec<i64>,
}

impl CountingSnapshot {
    pub fn new(breakpoints: Vec<f64>, values: Vec<i64>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::Domain(format!(
                "snapshot needs matching lengths (got {} breakpoints, {} values)",
                breakpoints.len(),
                values.len()
            )));
        }
        if breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Domain("snapshot breakpoints must be strictly ascending".into()));
        }
        if breakpoints.iter().any(|b| !b.is_finite()) {
            return Err(Error::Domain("snapshot breakpoints must be finite".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain("snapshot values must be non-decreasing".into()));
        }
        Ok(CountingSnapshot { breakpoints, values })
    }

    /// Unit-jump snapshot: one increment at each listed point.
    pub fn from_jump_points(points: &[f64]) -> Result<Self> {
        let values = (1..=points.len() as i64).collect();
        Self::new(points.to_vec(), values)
    }

    /// The counting function of all primes <= limit.
    pub fn primes_upto(sieve: &PrimeSieve) -> Self {
        let breakpoints: Vec<f64> = sieve.primes.iter().map(|&p| p as f64).collect();
        let values = (1..=breakpoints.len() as i64).collect();
        CountingSnapshot { breakpoints, values }
    }

    pub fn value_at(&self, x: f64) -> i64 {
        let i = self.breakpoints.partition_point(|&b| b <= x);
        if i == 0 {
            0
        } else {
            self.values[i - 1]
        }
    }

    pub fn max_breakpoint(&self) -> f64 {
        self.breakpoints.last().copied().unwrap_or(0.0)
    }
}

/// Read one strictly-ascending positive real per line; '#' starts a comment,
/// blank lines are skipped. An empty file yields an empty list.
pub fn read_spectrum(path: &Path) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_spectrum(&text)
}

pub fn parse_spectrum(text: &str) -> Result<Vec<f64>> {
    let mut out: Vec<f64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let v: f64 = body.parse().map_err(|_| Error::Format {
            line,
            msg: format!("expected a real number, got {body:?}"),
        })?;
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::Format {
                line,
                msg: format!("entries must be positive finite reals, got {v}"),
            });
        }
        if let Some(&prev) = out.last() {
            if v <= prev {
                return Err(Error::Order {
                    line,
                    msg: format!("entries must be strictly ascending ({v} after {prev})"),
                });
            }
        }
        out.push(v);
    }
    Ok(out)
}
