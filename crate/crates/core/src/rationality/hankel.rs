use std::fmt::{Display, Write as _};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::json::CoeffJson;
use crate::algebra::{Ring, SeriesPrefix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct HankelEntry<R> {
    pub offset: usize,
    pub det: R,
}

impl<R: Ring> HankelEntry<R> {
    pub fn is_zero(&self) -> bool {
        self.det.is_zero()
    }
}

/// Hankel determinants of one window size at every offset that fits in the
/// prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelReport<R> {
    pub window: usize,
    /// Truncation order `K` of the tested prefix.
    pub prefix_order: usize,
    pub entries: Vec<HankelEntry<R>>,
    /// Smallest `n` such that every tested determinant at an offset `i > n`
    /// vanishes (`-1` when all of them do); `None` when the last tested
    /// determinant is nonzero.
    pub first_stable_offset: Option<i64>,
}

impl<R: Ring> HankelReport<R> {
    fn from_entries(window: usize, prefix_order: usize, entries: Vec<HankelEntry<R>>) -> Self {
        let nonzero_tail = entries.iter().rposition(|e| !e.is_zero());
        let first_stable_offset = match nonzero_tail {
            None => Some(-1),
            Some(pos) if pos + 1 < entries.len() => Some(entries[pos].offset as i64),
            Some(_) => None,
        };
        Self { window, prefix_order, entries, first_stable_offset }
    }

    /// "Determinantally rational up to prefix K" for this window.
    pub fn stabilizes(&self) -> bool {
        self.first_stable_offset.is_some()
    }

    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(HankelEntry::is_zero)
    }

    pub fn summary(&self) -> String {
        match self.first_stable_offset {
            Some(n) => format!(
                "window {}: every determinant at offsets {}..={} vanishes (finite-prefix evidence, K = {})",
                self.window,
                n + 1,
                self.entries.last().map_or(n + 1, |e| e.offset as i64),
                self.prefix_order
            ),
            None => format!(
                "window {}: determinant at the last tested offset is nonzero (K = {})",
                self.window, self.prefix_order
            ),
        }
    }
}

impl<R: CoeffJson> HankelReport<R> {
    pub fn to_json(&self) -> Value {
        json!({
            "window": self.window,
            "K": self.prefix_order,
            "offsets": self.entries.iter().map(|e| json!({
                "i": e.offset,
                "det": e.det.to_json(),
                "zero": e.is_zero(),
            })).collect::<Vec<_>>(),
            "first_stable_offset": self.first_stable_offset,
            "summary": self.summary(),
        })
    }
}

impl<R: Ring + Display> HankelReport<R> {
    /// Rows `window,i,zero,det` without a header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let det = e.det.to_string().replace('"', "\"\"");
            writeln!(out, "{},{},{},\"{}\"", self.window, e.offset, e.is_zero(), det).expect("string write");
        }
        out
    }
}

pub const CSV_HEADER: &str = "window,i,zero,det";

/// Hankel determinants of one window size at every offset `i` with
/// `i + 2(s-1) <= K`.
pub fn hankel_window<R: Ring>(f: &SeriesPrefix<R>, window: usize) -> Result<HankelReport<R>> {
    if window == 0 {
        return Err(Error::InvalidParams("window size must be at least 1".into()));
    }
    let k = f.order();
    let needed = 2 * (window - 1);
    if needed > k {
        return Err(Error::InsufficientPrefix { needed, available: k });
    }
    let entries = (0..=k - needed)
        .into_par_iter()
        .map(|offset| Ok(HankelEntry { offset, det: f.hankel_det(offset, window)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(HankelReport::from_entries(window, k, entries))
}

/// Reports for every window size `1..=s_max`.
pub fn determinantal_test<R: Ring>(f: &SeriesPrefix<R>, s_max: usize) -> Result<Vec<HankelReport<R>>> {
    if s_max == 0 {
        return Err(Error::InvalidParams("window size must be at least 1".into()));
    }
    let needed = 2 * (s_max - 1);
    if needed > f.order() {
        return Err(Error::InsufficientPrefix { needed, available: f.order() });
    }
    (1..=s_max).map(|s| hankel_window(f, s)).collect()
}
