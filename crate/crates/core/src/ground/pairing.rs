//! Minimal-length pairings of boundary sign changes.
//!
//! A ground state configuration pairs the `2k` boundary points into open
//! contours whose total L1 length is minimal among all pairings, and the
//! non-principal segments stay away from the central quarter box.

use crate::error::{Error, Result};

/// A pairing is a list of index pairs `(i, j)` with `i < j`, sorted by `i`.
pub type Pairing = Vec<(usize, usize)>;

/// Boundary sign-change points with an optional minimal pairing.
///
/// By convention the first point is the origin; the pair containing it is
/// the principal segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointSet {
    pub points: Vec<(i64, i64)>,
    pub pairing: Option<Pairing>,
}

impl EndpointSet {
    pub fn new(points: Vec<(i64, i64)>) -> Self {
        EndpointSet {
            points,
            pairing: None,
        }
    }

    /// Total L1 cost of a pairing over these points.
    pub fn cost(&self, pairing: &Pairing) -> u64 {
        pairing
            .iter()
            .map(|&(i, j)| l1(self.points[i], self.points[j]))
            .sum()
    }

    /// Straight-line segments of the stored pairing.
    pub fn segments(&self) -> Option<Vec<((i64, i64), (i64, i64))>> {
        self.pairing.as_ref().map(|pairs| {
            pairs
                .iter()
                .map(|&(i, j)| (self.points[i], self.points[j]))
                .collect()
        })
    }
}

fn l1(a: (i64, i64), b: (i64, i64)) -> u64 {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1)
}

/// Exhaustively minimize the summed L1 length over all `(2k-1)!!` pairings,
/// `k <= 8`. Ties resolve to the lexicographically smallest pairing in the
/// canonical form (pairs `(i, j)`, `i < j`, sorted by first index), which is
/// the order the recursion enumerates.
pub fn ground_pairing(points: &EndpointSet) -> Result<EndpointSet> {
    let n = points.points.len();
    if n == 0 || n % 2 != 0 {
        return Err(Error::domain(format!(
            "ground_pairing: need an even, positive point count, got {n}"
        )));
    }
    if n > 16 {
        return Err(Error::domain(format!(
            "ground_pairing: exact mode handles at most 16 points, got {n}"
        )));
    }
    {
        let mut sorted = points.points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::domain("ground_pairing: points must be distinct"));
        }
    }

    let mut used = vec![false; n];
    let mut current: Pairing = Vec::with_capacity(n / 2);
    let mut best: Option<(u64, Pairing)> = None;
    recurse(&points.points, &mut used, &mut current, 0, &mut best);
    let (_, pairing) = best.expect("nonempty point set has a pairing");
    Ok(EndpointSet {
        points: points.points.clone(),
        pairing: Some(pairing),
    })
}

fn recurse(
    points: &[(i64, i64)],
    used: &mut [bool],
    current: &mut Pairing,
    cost_so_far: u64,
    best: &mut Option<(u64, Pairing)>,
) {
    let first = match used.iter().position(|u| !u) {
        None => {
            // Strict improvement keeps the first (lexicographically
            // smallest) pairing on ties.
            if best.as_ref().map_or(true, |(c, _)| cost_so_far < *c) {
                *best = Some((cost_so_far, current.clone()));
            }
            return;
        }
        Some(i) => i,
    };
    if let Some((c, _)) = best {
        if cost_so_far >= *c {
            return; // branch and bound
        }
    }
    used[first] = true;
    for j in first + 1..points.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        current.push((first, j));
        recurse(points, used, current, cost_so_far + l1(points[first], points[j]), best);
        current.pop();
        used[j] = false;
    }
    used[first] = false;
}

/// True iff every non-principal segment of the pairing avoids the box
/// `[0, N/4] x [-N/4, N/4]`.
///
/// The principal segment is the one containing point 0 (the origin).
pub fn separation_predicate(set: &EndpointSet, n: u64) -> bool {
    let pairing = match &set.pairing {
        Some(p) => p,
        None => return true,
    };
    let q = n as f64 / 4.0;
    for &(i, j) in pairing {
        if i == 0 || j == 0 {
            continue;
        }
        let a = set.points[i];
        let b = set.points[j];
        if segment_hits_box(
            (a.0 as f64, a.1 as f64),
            (b.0 as f64, b.1 as f64),
            0.0,
            q,
            -q,
            q,
        ) {
            return false;
        }
    }
    true
}

/// Closed-box segment intersection via Liang–Barsky clipping.
fn segment_hits_box(a: (f64, f64), b: (f64, f64), x0: f64, x1: f64, y0: f64, y1: f64) -> bool {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let mut t0 = 0.0_f64;
    let mut t1 = 1.0_f64;
    for (p, q) in [
        (-dx, a.0 - x0),
        (dx, x1 - a.0),
        (-dy, a.1 - y0),
        (dy, y1 - a.1),
    ] {
        if p == 0.0 {
            if q < 0.0 {
                return false; // parallel and outside
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                t0 = t0.max(r);
            } else {
                t1 = t1.min(r);
            }
            if t0 > t1 {
                return false;
            }
        }
    }
    true
}
