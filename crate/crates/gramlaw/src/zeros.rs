//! Verified, contiguous tables of critical-line zero ordinates.
//!
//! Zeros are located by scanning Gram intervals for sign changes of `Z(t)`.
//! Counts are certified Turing-style: a Gram point `t_n` is a *trusted
//! anchor* when Gram's law visibly holds around it (the point and both
//! neighbours carry the expected sign of `Z` and the three surrounding
//! intervals each show exactly one sign change); at such a point `S(t_n)` is
//! pinned to 0, so `N(t_n) = n` by the Riemann-von Mangoldt formula. Between
//! consecutive anchors `a < b` exactly `b - a` zeros must exist; intervals
//! that disagree with their expected count are pooled into blocks and
//! uniformly subdivided (64 panels, doubling up to 4096) until the forced
//! count is recovered. A block that never resolves is reported as an error,
//! never silently skipped.
//!
//! Every bracketed zero is refined by bisection to well below the documented
//! `1e-9 * t` bound. No multiple zero has ever been found; computed zeros
//! carry `kappa = 1`, and two sign changes closer than `1e-6` of the local
//! mean spacing abort the block instead of being folded into a `kappa = 2`
//! entry, because double precision cannot tell a close pair from a double
//! zero. The data model still carries `kappa` so the downstream formulas
//! that sum multiplicities work in full generality.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::gram::GramTable;
use crate::special::{theta, theta_prime};
use crate::{special, Error, Result, KERNEL_VERSION};

/// Refinement tolerance relative to the height; two orders stricter than the
/// documented `1e-9 * t` bound so that `|Z|` residuals stay small.
const BISECT_REL_TOL: f64 = 1e-11;
/// First-pass panels per Gram interval.
const SCAN_PANELS: u64 = 8;
/// Escalation panel counts for pooled blocks.
const BLOCK_PANELS_START: u64 = 64;
const BLOCK_PANELS_MAX: u64 = 4096;
/// Sign changes closer than this fraction of the local mean spacing are
/// treated as unresolved rather than as a multiple zero.
const CLOSE_PAIR_FRAC: f64 = 1e-6;
/// Gram indices appended past the requested range while hunting for anchors.
const ANCHOR_PAD: u64 = 64;
const ANCHOR_PAD_MAX: u64 = 512;
/// Upper guard for `find_zeros` heights.
pub const HEIGHT_MARGIN: f64 = 1000.0;

/// An indexed ordinate. A `kappa > 1` entry represents `kappa` coincident
/// ordinates occupying indices `n .. n + kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zero {
    pub n: u64,
    pub gamma: f64,
    pub kappa: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Computed,
    Ingested,
}

impl Source {
    fn as_str(self) -> &'static str {
        match self {
            Source::Computed => "computed",
            Source::Ingested => "ingested",
        }
    }
}

/// A contiguous, indexed run of zero ordinates.
#[derive(Debug, Clone)]
pub struct ZeroTable {
    first_index: u64,
    zeros: Vec<Zero>,
    source: Source,
    precision: f64,
    certified: bool,
    /// Height of `t_{first_index - 1}`, the lower edge of certified coverage.
    min_height: f64,
}

impl ZeroTable {
    /// Assemble a table from parts, validating ordering and contiguity.
    pub fn from_parts(
        first_index: u64,
        zeros: Vec<Zero>,
        source: Source,
        precision: f64,
        certified: bool,
    ) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut expect = first_index;
        let mut prev = f64::NEG_INFINITY;
        for (i, z) in zeros.iter().enumerate() {
            if z.n != expect {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("index {} does not continue run at {}", z.n, expect),
                });
            }
            if z.kappa < 1 {
                return Err(Error::InvalidParam("kappa must be >= 1".into()));
            }
            if !(z.gamma > prev) || !(z.gamma > 0.0) {
                return Err(Error::NonMonotone { line: i + 1 });
            }
            prev = z.gamma;
            expect += z.kappa as u64;
        }
        let min_height = crate::gram::gram_point(first_index.saturating_sub(1))?.t;
        Ok(Self {
            first_index,
            zeros,
            source,
            precision,
            certified,
            min_height,
        })
    }

    /// Compute and certify the table of zeros with indices `1 ..= last`.
    pub fn compute_through_index(last: u64) -> Result<Self> {
        if last < 1 {
            return Err(Error::InvalidParam("need at least one zero".into()));
        }
        let scan = scan_between(0, last)?;
        let mut zeros = scan.zeros;
        zeros.retain(|z| z.n <= last);
        if zeros.last().map(|z| z.n) != Some(last) {
            return Err(Error::TableGap { index: last });
        }
        let precision = 1e-9 * zeros.last().map(|z| z.gamma).unwrap_or(0.0);
        Self::from_parts(1, zeros, Source::Computed, precision, true)
    }

    pub fn first_index(&self) -> u64 {
        self.first_index
    }

    pub fn last_index(&self) -> u64 {
        let z = self.zeros.last().expect("table is never empty");
        z.n + z.kappa as u64 - 1
    }

    /// Number of indices covered (counts multiplicity).
    pub fn index_count(&self) -> u64 {
        self.last_index() - self.first_index + 1
    }

    pub fn zeros(&self) -> &[Zero] {
        &self.zeros
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn precision(&self) -> f64 {
        self.precision
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Lower edge of certified coverage, `t_{first_index - 1}`.
    pub fn min_height(&self) -> f64 {
        self.min_height
    }

    pub fn max_height(&self) -> f64 {
        self.zeros.last().expect("non-empty").gamma
    }

    pub fn covers_index(&self, n: u64) -> bool {
        n >= self.first_index && n <= self.last_index()
    }

    fn entry_for(&self, n: u64) -> Result<&Zero> {
        if !self.covers_index(n) {
            return Err(Error::TableGap { index: n });
        }
        // entries are ordered by starting index; a kappa > 1 entry spans
        // several indices, so take the last entry starting at or before n
        let i = self.zeros.partition_point(|z| z.n <= n);
        Ok(&self.zeros[i - 1])
    }

    /// The ordinate `gamma_n`.
    pub fn gamma(&self, n: u64) -> Result<f64> {
        Ok(self.entry_for(n)?.gamma)
    }

    /// The multiplicity `kappa_n`.
    pub fn kappa(&self, n: u64) -> Result<u32> {
        Ok(self.entry_for(n)?.kappa)
    }

    /// `N(t)`: the number of ordinates `<= t` counted with multiplicity,
    /// including the `first_index - 1` zeros below the table's range.
    pub fn count_upto(&self, t: f64) -> Result<u64> {
        if t < self.min_height || t > self.max_height() {
            return Err(Error::RangeGap { t });
        }
        let i = self.zeros.partition_point(|z| z.gamma <= t);
        Ok(if i == 0 {
            self.first_index - 1
        } else {
            let z = &self.zeros[i - 1];
            z.n + z.kappa as u64 - 1
        })
    }

    /// Serialise in the cache format.
    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        if !self.certified {
            return Err(Error::InvalidParam(
                "refusing to save an uncertified table".into(),
            ));
        }
        if self.zeros.iter().any(|z| z.kappa != 1) {
            return Err(Error::InvalidParam(
                "cache format stores one line per index (kappa = 1 only)".into(),
            ));
        }
        writeln!(
            w,
            "#gramlaw-zeros v{} first={} count={} precision={:e} source={}",
            KERNEL_VERSION,
            self.first_index,
            self.zeros.len(),
            self.precision,
            self.source.as_str()
        )?;
        let mut hasher = Sha256::new();
        let mut line = String::new();
        for z in &self.zeros {
            line.clear();
            writeln!(line, "{}\t{:.16e}", z.n, z.gamma).expect("format");
            hasher.update(line.as_bytes());
            w.write_all(line.as_bytes())?;
        }
        writeln!(w, "#sha256={:x}", hasher.finalize())?;
        Ok(())
    }

    /// Parse the cache format.
    pub fn read_from(r: impl BufRead) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines.next().ok_or(Error::EmptyInput)?.map_err(Error::Io)?;
        let rest = header
            .strip_prefix("#gramlaw-zeros v")
            .ok_or_else(|| Error::VersionMismatch {
                found: header.clone(),
            })?;
        let mut fields = rest.split_whitespace();
        let version = fields.next().unwrap_or("");
        if version != KERNEL_VERSION.to_string() {
            return Err(Error::VersionMismatch {
                found: version.into(),
            });
        }
        let mut first = None;
        let mut count = None;
        let mut precision = None;
        let mut source = Source::Computed;
        for f in fields {
            let (k, v) = f.split_once('=').ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("bad header field {f:?}"),
            })?;
            match k {
                "first" => first = v.parse().ok(),
                "count" => count = v.parse().ok(),
                "precision" => precision = v.parse().ok(),
                "source" => {
                    source = match v {
                        "ingested" => Source::Ingested,
                        _ => Source::Computed,
                    }
                }
                _ => {}
            }
        }
        let (first, count, precision): (u64, usize, f64) = match (first, count, precision) {
            (Some(f), Some(c), Some(p)) => (f, c, p),
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: "incomplete header".into(),
                })
            }
        };

        let mut hasher = Sha256::new();
        let mut zeros = Vec::with_capacity(count);
        let mut checksum = None;
        for (i, line) in lines.enumerate() {
            let line = line.map_err(Error::Io)?;
            if let Some(hex) = line.strip_prefix("#sha256=") {
                checksum = Some(hex.to_string());
                break;
            }
            hasher.update(line.as_bytes());
            hasher.update(b"\n");
            let (ns, gs) = line.split_once('\t').ok_or_else(|| Error::Parse {
                line: i + 2,
                message: "expected index<TAB>gamma".into(),
            })?;
            let n: u64 = ns.parse().map_err(|e| Error::Parse {
                line: i + 2,
                message: format!("bad index: {e}"),
            })?;
            let gamma: f64 = gs.parse().map_err(|e| Error::Parse {
                line: i + 2,
                message: format!("bad ordinate: {e}"),
            })?;
            zeros.push(Zero { n, gamma, kappa: 1 });
        }
        let expected = checksum.ok_or_else(|| Error::Checksum {
            expected: "#sha256= trailer".into(),
            computed: "missing (truncated file?)".into(),
        })?;
        let computed = format!("{:x}", hasher.finalize());
        if computed != expected {
            return Err(Error::Checksum { expected, computed });
        }
        if zeros.len() != count {
            return Err(Error::Parse {
                line: zeros.len() + 1,
                message: format!("header count {} but {} rows", count, zeros.len()),
            });
        }
        Self::from_parts(first, zeros, source, precision, true)
    }
}

/// Write a certified table to `path` in the cache format.
pub fn save_table(table: &ZeroTable, path: &Path) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    table.write_to(&mut f)?;
    f.flush()?;
    Ok(())
}

/// Load a table written by [`save_table`].
pub fn load_table(path: &Path) -> Result<ZeroTable> {
    let f = std::io::BufReader::new(std::fs::File::open(path)?);
    ZeroTable::read_from(f)
}

/// Parse a plain-text list of ordinates (one per line, `#` comments), add
/// `offset`, index from `first_index`, and certify the result at both ends.
pub fn ingest_table(path: &Path, offset: f64, first_index: u64) -> Result<ZeroTable> {
    let text = std::fs::read_to_string(path)?;
    let mut zeros = Vec::new();
    let mut prev = f64::NEG_INFINITY;
    let mut n = first_index;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|e| Error::Parse {
            line: i + 1,
            message: format!("bad ordinate {line:?}: {e}"),
        })?;
        let gamma = v + offset;
        if gamma <= prev {
            return Err(Error::NonMonotone { line: i + 1 });
        }
        prev = gamma;
        zeros.push(Zero { n, gamma, kappa: 1 });
        n += 1;
    }
    if zeros.is_empty() {
        return Err(Error::EmptyInput);
    }
    // published tables usually carry ~1e-6 absolute accuracy
    let precision = 1e-6;
    let mut table = ZeroTable::from_parts(first_index, zeros, Source::Ingested, precision, false)?;
    // verify strictly between zeros: the stored ordinates carry rounding, so
    // a count taken exactly at one of them is a coin flip
    let nudge = (8.0 * precision).max(1e-4);
    let low = (table.zeros[0].gamma - nudge).max(table.min_height);
    let high = table.max_height() + nudge;
    verify_count(&mut table, low)?;
    verify_count(&mut table, high)?;
    Ok(table)
}

// ---------------------------------------------------------------- scanning

/// `Z(t)` that never reports an exact 0.0 (nudges the sample instead, so a
/// lattice hit cannot eat a sign change).
fn z_signed(t: f64) -> Result<f64> {
    let v = special::z_internal(t)?;
    if v == 0.0 {
        special::z_internal(t + 1e-12 * t)
    } else {
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy)]
struct Bracket {
    lo: f64,
    hi: f64,
    z_lo: f64,
}

/// Sign-change brackets of `Z` on `(lo, hi]` from `panels` uniform panels.
fn scan_panels(lo: f64, hi: f64, z_lo: f64, z_hi: f64, panels: u64) -> Result<Vec<Bracket>> {
    let mut brackets = Vec::new();
    let mut prev_t = lo;
    let mut prev_z = z_lo;
    for i in 1..=panels {
        let t = if i == panels {
            hi
        } else {
            lo + (hi - lo) * i as f64 / panels as f64
        };
        let zv = if i == panels { z_hi } else { z_signed(t)? };
        if (zv < 0.0) != (prev_z < 0.0) {
            brackets.push(Bracket {
                lo: prev_t,
                hi: t,
                z_lo: prev_z,
            });
        }
        prev_t = t;
        prev_z = zv;
    }
    Ok(brackets)
}

/// Bisect a bracket down to `BISECT_REL_TOL * t`.
fn refine(b: Bracket) -> Result<f64> {
    let mut lo = b.lo;
    let mut hi = b.hi;
    let mut z_lo = b.z_lo;
    let tol = BISECT_REL_TOL * hi;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // f64 resolution floor
        }
        let zm = z_signed(mid)?;
        if (zm < 0.0) == (z_lo < 0.0) {
            lo = mid;
            z_lo = zm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

struct Scan {
    /// Trusted anchors bounding the requested index range.
    anchor_lo: u64,
    #[allow(dead_code)]
    anchor_hi: u64,
    /// All zeros with indices `anchor_lo + 1 ..= anchor_hi`, ascending.
    zeros: Vec<Zero>,
}

/// Gram-point sign consistent with `S(t_n) = 0`: `(-1)^(n-1) Z(t_n) > 0`.
fn is_good(n: u64, z: f64) -> bool {
    if n % 2 == 1 {
        z > 0.0
    } else {
        z < 0.0
    }
}

/// Scan and certify all zeros between trusted anchors enclosing the Gram
/// index range `[n_from, n_to]`.
fn scan_between(n_from: u64, n_to: u64) -> Result<Scan> {
    let mut pad = ANCHOR_PAD;
    loop {
        match scan_between_padded(n_from, n_to, pad) {
            Err(Error::Convergence {
                what: "anchor search",
                ..
            }) if pad < ANCHOR_PAD_MAX => {
                pad = ANCHOR_PAD_MAX;
            }
            other => return other,
        }
    }
}

fn scan_between_padded(n_from: u64, n_to: u64, pad: u64) -> Result<Scan> {
    let lo_built = n_from.saturating_sub(pad);
    let hi_built = n_to + pad;
    let grams = GramTable::build(hi_built)?;
    let ts: Vec<f64> = (lo_built..=hi_built).map(|n| grams.t(n)).collect();

    let z_at: Vec<f64> = ts.par_iter().map(|&t| z_signed(t)).collect::<Result<_>>()?;

    // first-pass interval scans: slot i covers G_{lo_built + 1 + i}
    let first_pass: Vec<Vec<Bracket>> = (0..ts.len() - 1)
        .into_par_iter()
        .map(|i| scan_panels(ts[i], ts[i + 1], z_at[i], z_at[i + 1], SCAN_PANELS))
        .collect::<Result<_>>()?;

    let good: Vec<bool> = z_at
        .iter()
        .enumerate()
        .map(|(i, &z)| is_good(lo_built + i as u64, z))
        .collect();
    let count_of = |n: u64| first_pass[(n - lo_built - 1) as usize].len() as u64;
    let trusted = |n: u64| -> bool {
        if n < lo_built || n > hi_built {
            return false;
        }
        let i = (n - lo_built) as usize;
        if !good[i] {
            return false;
        }
        match n {
            0 => good[1] && count_of(1) == 1,
            1 => good[0] && good.get(2) == Some(&true) && count_of(1) == 1 && count_of(2) == 1,
            _ => {
                n - 2 >= lo_built
                    && n + 1 <= hi_built
                    && good[i - 1]
                    && good[i + 1]
                    && count_of(n - 1) == 1
                    && count_of(n) == 1
                    && count_of(n + 1) == 1
            }
        }
    };

    let anchor_lo = (lo_built..=n_from)
        .rev()
        .find(|&n| trusted(n))
        .ok_or(Error::Convergence {
            what: "anchor search",
            iterations: pad as u32,
            last: n_from as f64,
        })?;
    let anchor_hi = (n_to.max(anchor_lo + 1)..=hi_built.saturating_sub(2))
        .find(|&n| trusted(n))
        .ok_or(Error::Convergence {
            what: "anchor search",
            iterations: pad as u32,
            last: n_to as f64,
        })?;

    // interior anchors split the work into small independently forced blocks
    let mut anchors = vec![anchor_lo];
    anchors.extend((anchor_lo + 1..anchor_hi).filter(|&n| trusted(n)));
    anchors.push(anchor_hi);

    let blocks: Vec<(u64, u64)> = anchors.windows(2).map(|w| (w[0], w[1])).collect();
    let per_block: Vec<Vec<Zero>> = blocks
        .par_iter()
        .map(|&(a, b)| resolve_block(a, b, &ts, &z_at, &first_pass, lo_built))
        .collect::<Result<_>>()?;

    let mut zeros = Vec::with_capacity((anchor_hi - anchor_lo) as usize);
    for block in per_block {
        zeros.extend(block);
    }
    Ok(Scan {
        anchor_lo,
        anchor_hi,
        zeros,
    })
}

/// Resolve the block between trusted anchors `a < b`: exactly `b - a` zeros
/// must lie in `(t_a, t_b]`.
fn resolve_block(
    a: u64,
    b: u64,
    ts: &[f64],
    z_at: &[f64],
    first_pass: &[Vec<Bracket>],
    lo_built: u64,
) -> Result<Vec<Zero>> {
    let expected = b - a;
    let ia = (a - lo_built) as usize;
    let ib = (b - lo_built) as usize;
    let t_lo = ts[ia];
    let t_hi = ts[ib];

    let mut brackets: Vec<Bracket> = first_pass[ia..ib].iter().flatten().copied().collect();
    if brackets.len() as u64 != expected {
        let mut panels = BLOCK_PANELS_START;
        loop {
            brackets = scan_panels(t_lo, t_hi, z_at[ia], z_at[ib], panels)?;
            if brackets.len() as u64 == expected {
                break;
            }
            if panels >= BLOCK_PANELS_MAX {
                return Err(Error::UnresolvedBlock {
                    t_lo,
                    t_hi,
                    expected,
                    found: brackets.len() as u64,
                    panels,
                });
            }
            panels *= 2;
        }
    }

    let refined: Vec<f64> = brackets.into_iter().map(refine).collect::<Result<_>>()?;
    for w in refined.windows(2) {
        let spacing = PI / theta_prime(w[0])?;
        if w[1] - w[0] < CLOSE_PAIR_FRAC * spacing {
            // beyond double-precision separation: a close pair or a kernel bug
            return Err(Error::UnresolvedBlock {
                t_lo: w[0],
                t_hi: w[1],
                expected,
                found: expected,
                panels: BLOCK_PANELS_MAX,
            });
        }
    }
    Ok(refined
        .into_iter()
        .enumerate()
        .map(|(i, gamma)| Zero {
            n: a + 1 + i as u64,
            gamma,
            kappa: 1,
        })
        .collect())
}

/// Largest Gram index `n` with `t_n <= t`.
fn gram_index_below(t: f64) -> Result<u64> {
    let x = theta(t)? / PI + 1.0;
    let mut n = x.floor().max(0.0) as u64;
    // guard against roundoff at the edges
    while n > 0 && crate::gram::gram_point(n)?.t > t {
        n -= 1;
    }
    while crate::gram::gram_point(n + 1)?.t <= t {
        n += 1;
    }
    Ok(n)
}

/// All zeros with ordinates in `[t_lo, t_hi]`, certified and indexed.
pub fn find_zeros(t_lo: f64, t_hi: f64) -> Result<Vec<Zero>> {
    if !(t_lo >= 10.0) || !(t_hi > t_lo) {
        return Err(Error::InvalidParam(
            "need 10 <= t_lo < t_hi for zero scans".into(),
        ));
    }
    if t_hi > 1e5 + HEIGHT_MARGIN {
        return Err(Error::InvalidParam(format!(
            "t_hi beyond supported height {:.0}",
            1e5 + HEIGHT_MARGIN
        )));
    }
    let n_left = gram_index_below(t_lo)?;
    let n_right = gram_index_below(t_hi)? + 1;
    let scan = scan_between(n_left, n_right)?;
    Ok(scan
        .zeros
        .into_iter()
        .filter(|z| z.gamma >= t_lo && z.gamma <= t_hi)
        .collect())
}

/// Certify the table's zero count at height `t` against an independent scan.
///
/// Returns `N(t)` and marks the table certified/uncertified according to the
/// outcome. The forced count comes from the nearest trusted anchors around
/// `t`, which pin `S` to zero there; the count in between is then dictated
/// by the Riemann-von Mangoldt formula.
///
/// `t` may overhang the last tabulated ordinate by up to a quarter of the
/// local mean spacing; the table then claims no further zeros up to `t`, and
/// the scan checks that claim like any other.
pub fn verify_count(table: &mut ZeroTable, t: f64) -> Result<u64> {
    let overhang = 0.25 * PI / theta_prime(t.max(10.0))?;
    let table_count = if t > table.max_height() && t <= table.max_height() + overhang {
        table.last_index()
    } else {
        table.count_upto(t)?
    };
    let n_t = gram_index_below(t)?;
    let scan = scan_between(n_t, n_t + 1)?;
    let mut forced = scan.anchor_lo;
    for z in &scan.zeros {
        if z.gamma <= t {
            forced += z.kappa as u64;
        }
    }
    if forced == table_count {
        table.certified = true;
        Ok(forced)
    } else {
        table.certified = false;
        Err(Error::Certification {
            t,
            table_count,
            forced,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_zeros_first_three() {
        let zs = find_zeros(10.0, 30.0).unwrap();
        let want = [14.1347251417, 21.0220396388, 25.0108575801];
        assert_eq!(zs.len(), 3);
        for (z, w) in zs.iter().zip(want) {
            assert!((z.gamma - w).abs() < 1e-6, "{} vs {w}", z.gamma);
            assert_eq!(z.kappa, 1);
        }
        assert_eq!(zs[0].n, 1);
        assert_eq!(zs[2].n, 3);
    }

    #[test]
    fn find_zeros_empty_range() {
        // no ordinates between the first two zeros
        let zs = find_zeros(15.0, 15.5).unwrap();
        assert!(zs.is_empty());
    }

    #[test]
    fn find_zeros_count_to_100() {
        // classical N(100) = 29
        let zs = find_zeros(10.0, 100.0).unwrap();
        assert_eq!(zs.len(), 29);
    }

    #[test]
    fn compute_small_table_and_verify() {
        let mut table = ZeroTable::compute_through_index(50).unwrap();
        assert!(table.is_certified());
        assert_eq!(table.first_index(), 1);
        assert_eq!(table.last_index(), 50);
        assert_eq!(verify_count(&mut table, 100.0).unwrap(), 29);
        // just below the first zero
        assert_eq!(verify_count(&mut table, 14.0).unwrap(), 0);
        assert!(table.is_certified());
    }

    #[test]
    fn count_upto_boundaries() {
        let table = ZeroTable::compute_through_index(10).unwrap();
        let g1 = table.gamma(1).unwrap();
        assert_eq!(table.count_upto(g1).unwrap(), 1);
        assert_eq!(table.count_upto(g1 - 1e-6).unwrap(), 0);
        assert!(table.count_upto(1e9).is_err());
    }

    #[test]
    fn residual_small_at_computed_zeros() {
        let table = ZeroTable::compute_through_index(80).unwrap();
        for z in table.zeros() {
            let v = special::z(z.gamma).unwrap();
            assert!(v.abs() < 1e-4, "|Z({})| = {}", z.gamma, v.abs());
        }
    }

    #[test]
    fn interlacing_partition() {
        // zeros per Gram interval sum to the total over a certified range
        let table = ZeroTable::compute_through_index(60).unwrap();
        let grams = GramTable::build(64).unwrap();
        let mut per_interval = vec![0u64; 65];
        for z in table.zeros() {
            let m = grams.interval_index(z.gamma).unwrap();
            per_interval[m as usize] += 1;
        }
        let total: u64 = per_interval.iter().sum();
        assert_eq!(total, table.index_count());
    }

    #[test]
    fn roundtrip_through_cache_format() {
        let table = ZeroTable::compute_through_index(5).unwrap();
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let back = ZeroTable::read_from(&buf[..]).unwrap();
        assert_eq!(back.first_index(), table.first_index());
        assert_eq!(back.precision(), table.precision());
        assert_eq!(back.source(), table.source());
        assert!(back.is_certified());
        assert_eq!(back.zeros(), table.zeros());
    }

    #[test]
    fn truncated_cache_is_checksum_error() {
        let table = ZeroTable::compute_through_index(5).unwrap();
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let cut = buf.len() - 20;
        match ZeroTable::read_from(&buf[..cut]) {
            Err(Error::Checksum { .. }) => {}
            other => panic!("expected checksum error, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_cache_is_checksum_error() {
        let table = ZeroTable::compute_through_index(5).unwrap();
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap().replacen("\t1.4", "\t1.5", 1);
        match ZeroTable::read_from(text.as_bytes()) {
            Err(Error::Checksum { .. }) => {}
            other => panic!("expected checksum error, got {other:?}"),
        }
    }

    #[test]
    fn version_mismatch_detected() {
        let text = "#gramlaw-zeros v999 first=1 count=0 precision=1e-9 source=computed\n";
        match ZeroTable::read_from(text.as_bytes()) {
            Err(Error::VersionMismatch { .. }) => {}
            other => panic!("expected version mismatch, got {other:?}"),
        }
    }

    #[test]
    fn precision_metadata_roundtrip() {
        let table = ZeroTable::from_parts(
            1,
            vec![
                Zero {
                    n: 1,
                    gamma: 14.134725141734693,
                    kappa: 1,
                },
                Zero {
                    n: 2,
                    gamma: 21.022039638771554,
                    kappa: 1,
                },
            ],
            Source::Ingested,
            1e-6,
            true,
        )
        .unwrap();
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let back = ZeroTable::read_from(&buf[..]).unwrap();
        assert_eq!(back.precision(), 1e-6);
        assert_eq!(back.source(), Source::Ingested);
    }

    #[test]
    fn kappa_spanning_entries() {
        // synthetic table with a planted double ordinate occupying indices 2,3
        let table = ZeroTable::from_parts(
            1,
            vec![
                Zero { n: 1, gamma: 10.0, kappa: 1 },
                Zero { n: 2, gamma: 11.0, kappa: 2 },
                Zero { n: 4, gamma: 12.0, kappa: 1 },
            ],
            Source::Computed,
            1e-9,
            false,
        )
        .unwrap();
        assert_eq!(table.gamma(2).unwrap(), 11.0);
        assert_eq!(table.gamma(3).unwrap(), 11.0);
        assert_eq!(table.kappa(3).unwrap(), 2);
        assert_eq!(table.last_index(), 4);
        assert_eq!(table.count_upto(11.5).unwrap(), 3);
    }

    #[test]
    fn from_parts_rejects_gaps_and_disorder() {
        let bad_gap = ZeroTable::from_parts(
            1,
            vec![
                Zero { n: 1, gamma: 10.0, kappa: 1 },
                Zero { n: 3, gamma: 11.0, kappa: 1 },
            ],
            Source::Computed,
            1e-9,
            false,
        );
        assert!(matches!(bad_gap, Err(Error::Parse { .. })));
        let bad_order = ZeroTable::from_parts(
            1,
            vec![
                Zero { n: 1, gamma: 10.0, kappa: 1 },
                Zero { n: 2, gamma: 9.0, kappa: 1 },
            ],
            Source::Computed,
            1e-9,
            false,
        );
        assert!(matches!(bad_order, Err(Error::NonMonotone { .. })));
    }
}
