//! Gram points `t_n` solving `theta(t_n) = pi*(n-1)` and the Gram intervals
//! `G_n = (t_{n-1}, t_n]`.
//!
//! Note the indexing: `t_n` here is the classical Gram point `g_{n-1}`, so
//! `t_0 = 9.6669...` solves `theta = -pi` and `t_1 = 17.8455...` solves
//! `theta = 0`. A solver run is accepted only when the residual
//! `|theta(t_n) - pi*(n-1)|` drops below [`RESIDUAL_TOL`].

use crate::special::{theta, theta_prime, THETA_T_MIN};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Residual tolerance on `theta(t_n) - pi*(n-1)`.
pub const RESIDUAL_TOL: f64 = 1e-9;

const MAX_ITER: u32 = 64;

/// A Gram point in the paper indexing `theta(t_n) = pi*(n-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramPoint {
    pub n: u64,
    pub t: f64,
}

impl GramPoint {
    /// The classically indexed name of this point (`g_m = t_{m+1}`),
    /// or `None` for `t_0` whose classical index would be -1.
    pub fn classical_index(&self) -> Option<u64> {
        self.n.checked_sub(1)
    }
}

/// The half-open interval `G_n = (t_{n-1}, t_n]`, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramInterval {
    pub n: u64,
    /// `t_{n-1}`, exclusive.
    pub lo: f64,
    /// `t_n`, inclusive.
    pub hi: f64,
}

impl GramInterval {
    pub fn contains(&self, t: f64) -> bool {
        self.lo < t && t <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

fn target(n: u64) -> f64 {
    PI * (n as f64 - 1.0)
}

/// Solve `theta(t) = y` by Newton from `guess`, with a bisection fallback.
fn solve_theta(y: f64, guess: f64) -> Result<f64> {
    let mut t = guess.max(THETA_T_MIN);
    for _ in 0..MAX_ITER {
        let r = theta(t)? - y;
        if r.abs() < RESIDUAL_TOL {
            return Ok(t);
        }
        let step = r / theta_prime(t)?;
        let next = t - step;
        if !next.is_finite() || next < THETA_T_MIN {
            return solve_theta_bisect(y, t);
        }
        t = next;
    }
    // Newton made progress but stalled above the tolerance; the bisection
    // fallback signals a kernel accuracy bug if it cannot finish either.
    solve_theta_bisect(y, t)
}

fn solve_theta_bisect(y: f64, near: f64) -> Result<f64> {
    let mut lo = THETA_T_MIN;
    let mut hi = near.max(THETA_T_MIN + 1.0);
    let mut grow = 0;
    while theta(hi)? < y {
        hi *= 2.0;
        grow += 1;
        if grow > 64 {
            return Err(Error::Convergence {
                what: "gram point bracket",
                iterations: grow,
                last: hi,
            });
        }
    }
    if theta(lo)? > y {
        return Err(Error::Domain {
            quantity: "gram point",
            value: y,
            min: THETA_T_MIN,
        });
    }
    for i in 0..200 {
        let mid = 0.5 * (lo + hi);
        let r = theta(mid)? - y;
        if r.abs() < RESIDUAL_TOL {
            return Ok(mid);
        }
        if r < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < f64::EPSILON * hi {
            return Err(Error::Convergence {
                what: "gram point bisection",
                iterations: i,
                last: mid,
            });
        }
    }
    Err(Error::Convergence {
        what: "gram point bisection",
        iterations: 200,
        last: 0.5 * (lo + hi),
    })
}

/// The Gram point `t_n`.
pub fn gram_point(n: u64) -> Result<GramPoint> {
    let x = (n as f64).max(2.0);
    let guess = 2.0 * PI * x / x.ln();
    let t = solve_theta(target(n), guess)?;
    Ok(GramPoint { n, t })
}

/// The Gram interval `G_n = (t_{n-1}, t_n]`, `n >= 1`.
pub fn gram_interval(n: u64) -> Result<GramInterval> {
    if n < 1 {
        return Err(Error::InvalidParam("gram interval index must be >= 1".into()));
    }
    let lo = gram_point(n - 1)?;
    let hi = gram_point(n)?;
    Ok(GramInterval { n, lo: lo.t, hi: hi.t })
}

/// A contiguous run of `count` Gram points starting at index `first`,
/// each solve warm-started from its predecessor.
pub fn gram_range(first: u64, count: u64) -> Result<Vec<GramPoint>> {
    if count < 1 {
        return Err(Error::InvalidParam("gram range needs count >= 1".into()));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut prev = gram_point(first)?;
    out.push(prev);
    for n in first + 1..first + count {
        let guess = prev.t + PI / theta_prime(prev.t)?;
        let t = solve_theta(target(n), guess)?;
        prev = GramPoint { n, t };
        out.push(prev);
    }
    Ok(out)
}

/// Cached table of Gram points `t_0 .. t_max`, used by the scanning and
/// sequence layers.
#[derive(Debug, Clone)]
pub struct GramTable {
    ts: Vec<f64>,
}

impl GramTable {
    /// Build the table for indices `0..=n_max`.
    pub fn build(n_max: u64) -> Result<Self> {
        let pts = gram_range(0, n_max + 1)?;
        Ok(Self {
            ts: pts.into_iter().map(|p| p.t).collect(),
        })
    }

    pub fn max_index(&self) -> u64 {
        self.ts.len() as u64 - 1
    }

    /// `t_n`; panics if `n` is out of the built range.
    pub fn t(&self, n: u64) -> f64 {
        self.ts[n as usize]
    }

    pub fn get(&self, n: u64) -> Option<f64> {
        self.ts.get(n as usize).copied()
    }

    /// Extend the table through `n_max`.
    pub fn extend_to(&mut self, n_max: u64) -> Result<()> {
        while self.max_index() < n_max {
            let n = self.max_index() + 1;
            let prev = *self.ts.last().unwrap();
            let guess = prev + PI / theta_prime(prev)?;
            self.ts.push(solve_theta(target(n), guess)?);
        }
        Ok(())
    }

    /// Smallest `m` with `gamma <= t_m`, i.e. the index of the Gram interval
    /// containing `gamma` under the closed-upper-end convention. Comparison
    /// is raw, with no epsilon. `None` if `gamma` is beyond the table.
    pub fn interval_index(&self, gamma: f64) -> Option<u64> {
        if gamma > *self.ts.last()? {
            return None;
        }
        Some(self.ts.partition_point(|&t| t < gamma) as u64)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.ts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // oracle roots of theta(t) = -pi, 0, pi (30-digit fixtures)
    const T0: f64 = 9.66690805613019214126153552310;
    const T1: f64 = 17.8455995404108608168263384125;
    const T2: f64 = 23.1702827012463092789966435383;

    #[test]
    fn first_three_gram_points_match_oracle() {
        assert!((gram_point(0).unwrap().t - T0).abs() < 1e-8);
        assert!((gram_point(1).unwrap().t - T1).abs() < 1e-8);
        assert!((gram_point(2).unwrap().t - T2).abs() < 1e-8);
    }

    #[test]
    fn residual_invariant() {
        for n in [0u64, 1, 2, 10, 100, 12345, 100_000] {
            let p = gram_point(n).unwrap();
            assert!(
                (theta(p.t).unwrap() - target(n)).abs() < RESIDUAL_TOL,
                "residual too large at n = {n}"
            );
        }
    }

    #[test]
    fn gram_interval_matches_endpoints() {
        let g = gram_interval(1).unwrap();
        assert!((g.lo - T0).abs() < 1e-8);
        assert!((g.hi - T1).abs() < 1e-8);
        assert_eq!(g.hi, gram_point(1).unwrap().t);
        // gamma_1 lies in G_1
        assert!(g.contains(14.1347251417));
        assert!(gram_interval(0).is_err());
    }

    #[test]
    fn gram_interval_width_scale() {
        // width within [0.5, 2] of 2pi/ln(n) at n = 1e4
        let g = gram_interval(10_000).unwrap();
        let scale = 2.0 * PI / (1e4f64).ln();
        assert!(g.width() > 0.5 * scale && g.width() < 2.0 * scale);
    }

    #[test]
    fn gram_range_contiguous_increasing() {
        let pts = gram_range(0, 3).unwrap();
        assert!((pts[0].t - T0).abs() < 1e-8);
        assert!((pts[1].t - T1).abs() < 1e-8);
        assert!((pts[2].t - T2).abs() < 1e-8);
        let one = gram_range(777, 1).unwrap();
        assert_eq!(one[0], gram_point(777).unwrap());

        let run = gram_range(100_000, 10).unwrap();
        for w in run.windows(2) {
            assert!(w[1].t > w[0].t);
            // consecutive spacing tracks pi/theta'(t)
            let predicted = PI / theta_prime(w[0].t).unwrap();
            assert!((w[1].t - w[0].t - predicted).abs() < 1e-3 * predicted);
        }
    }

    #[test]
    fn spacing_asymptotics_loose_band() {
        // (t_{n+1} - t_n) * ln(n) / 2pi stays in a loose band around 1;
        // the exact ratio is ln(n)/(2 theta'(t_n)) ~ 1.22..1.28 on this range.
        for n in [1_000u64, 10_000, 100_000] {
            let a = gram_point(n).unwrap().t;
            let b = gram_point(n + 1).unwrap().t;
            let ratio = (b - a) * (n as f64).ln() / (2.0 * PI);
            assert!(
                (0.8..1.3).contains(&ratio),
                "spacing ratio {ratio} out of band at n = {n}"
            );
        }
    }

    #[test]
    fn table_interval_index_boundaries() {
        let table = GramTable::build(50).unwrap();
        // exact hit on t_m lands in the closed upper end: index m
        let t10 = table.t(10);
        assert_eq!(table.interval_index(t10), Some(10));
        assert_eq!(table.interval_index(t10 + 1e-9), Some(11));
        assert_eq!(table.interval_index(14.1347251417), Some(1));
        assert_eq!(table.interval_index(1e9), None);
    }

    #[test]
    fn table_extend() {
        let mut table = GramTable::build(5).unwrap();
        table.extend_to(64).unwrap();
        assert_eq!(table.max_index(), 64);
        let direct = gram_point(64).unwrap().t;
        assert!((table.t(64) - direct).abs() < 1e-9);
    }
}
