//! Reed-Solomon over GF(256) in the evaluation view, with a
//! Berlekamp-Welch errors-and-erasures decoder.
//!
//! Codeword = evaluations of the message polynomial (degree < k) at the
//! points `alpha^0 .. alpha^(n-1)`, so any `n <= 255` works and the code is
//! MDS: distance `d = n - k + 1`, correcting `e` errors plus `f` erasures
//! whenever `2e + f < d`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

// GF(256) with primitive polynomial x^8 + x^4 + x^3 + x^2 + 1, generator 2.
const PRIMITIVE_POLY: u16 = 0x11D;

struct GfTables {
    exp: [u8; 512],
    log: [u8; 256],
}

static GF: GfTables = build_tables();

const fn build_tables() -> GfTables {
    let mut exp = [0u8; 512];
    let mut log = [0u8; 256];
    let mut x: u16 = 1;
    let mut i = 0usize;
    while i < 255 {
        exp[i] = x as u8;
        log[x as usize] = i as u8;
        x <<= 1;
        if x & 0x100 != 0 {
            x ^= PRIMITIVE_POLY;
        }
        i += 1;
    }
    while i < 512 {
        exp[i] = exp[i - 255];
        i += 1;
    }
    GfTables { exp, log }
}

#[inline]
fn gf_mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        0
    } else {
        GF.exp[GF.log[a as usize] as usize + GF.log[b as usize] as usize]
    }
}

#[inline]
fn gf_inv(a: u8) -> u8 {
    debug_assert!(a != 0);
    GF.exp[255 - GF.log[a as usize] as usize]
}

#[inline]
fn gf_pow_alpha(e: usize) -> u8 {
    GF.exp[e % 255]
}

/// Horner evaluation of `poly` (coefficient of x^i at index i) at `x`.
fn poly_eval(poly: &[u8], x: u8) -> u8 {
    let mut acc = 0u8;
    for &c in poly.iter().rev() {
        acc = gf_mul(acc, x) ^ c;
    }
    acc
}

/// Quotient of `num / den`; `None` when the division leaves a remainder.
fn poly_div_exact(num: &[u8], den: &[u8]) -> Option<Vec<u8>> {
    let dd = den.iter().rposition(|&c| c != 0)?;
    let mut rem = num.to_vec();
    let nd = match rem.iter().rposition(|&c| c != 0) {
        Some(p) => p,
        None => return Some(vec![0]),
    };
    if nd < dd {
        return None;
    }
    let mut quot = vec![0u8; nd - dd + 1];
    let lead_inv = gf_inv(den[dd]);
    for qi in (0..quot.len()).rev() {
        let c = gf_mul(rem[qi + dd], lead_inv);
        quot[qi] = c;
        if c != 0 {
            for (b, &dc) in den.iter().enumerate().take(dd + 1) {
                rem[qi + b] ^= gf_mul(c, dc);
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        None
    } else {
        Some(quot)
    }
}

/// An `(n, k)` Reed-Solomon code over GF(256).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCode {
    n: usize,
    k: usize,
}

impl RsCode {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > 255 {
            return Err(Error::ParamOutOfRange {
                name: "n",
                value: n as f64,
                expected: "1..=255",
            });
        }
        if k == 0 || k >= n {
            return Err(Error::ParamOutOfRange {
                name: "k",
                value: k as f64,
                expected: "1..n",
            });
        }
        Ok(RsCode { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance `n - k + 1`.
    pub fn distance(&self) -> usize {
        self.n - self.k + 1
    }

    /// Largest half-error budget: corrects any `e` errors and `f` erasures
    /// with `2e + f <= half_error_budget()`.
    pub fn half_error_budget(&self) -> usize {
        self.distance() - 1
    }

    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        if message.len() != self.k {
            return Err(Error::MessageLength {
                got: message.len(),
                want: self.k,
            });
        }
        Ok((0..self.n)
            .map(|i| poly_eval(message, gf_pow_alpha(i)))
            .collect())
    }

    /// Errors-and-erasures decoding; `None` entries are erasures.
    ///
    /// Finds polynomials `Q` (degree < e_max + k) and monic `E` (degree
    /// e_max) with `Q(x_i) = y_i E(x_i)` on every non-erased point, then
    /// reads the message off `Q / E`. Any inconsistency (unsolvable system,
    /// inexact division, re-encoded codeword too far from the input) is an
    /// explicit failure.
    pub fn decode(&self, received: &[Option<u8>]) -> Result<Vec<u8>> {
        if received.len() != self.n {
            return Err(Error::MessageLength {
                got: received.len(),
                want: self.n,
            });
        }
        let erasures = received.iter().filter(|s| s.is_none()).count();
        if erasures > self.half_error_budget() {
            return Err(Error::DecodeFailure {
                detail: format!(
                    "{erasures} erasures exceed the half-error budget {}",
                    self.half_error_budget()
                ),
            });
        }
        let e_max = (self.half_error_budget() - erasures) / 2;
        let points: Vec<(u8, u8)> = received
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|y| (gf_pow_alpha(i), y)))
            .collect();

        // unknowns: q_0..q_{e_max+k-1}, then e_0..e_{e_max-1}
        let nq = e_max + self.k;
        let unknowns = nq + e_max;
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(points.len());
        for &(x, y) in &points {
            let mut row = vec![0u8; unknowns + 1];
            let mut xp = 1u8;
            for cell in row.iter_mut().take(nq) {
                *cell = xp;
                xp = gf_mul(xp, x);
            }
            let mut xp = 1u8;
            for b in 0..e_max {
                row[nq + b] = gf_mul(y, xp);
                xp = gf_mul(xp, x);
            }
            // rhs: y * x^e_max (E is monic)
            row[unknowns] = gf_mul(y, xp);
            rows.push(row);
        }
        let solution = solve(rows, unknowns).ok_or_else(|| Error::DecodeFailure {
            detail: "locator system is inconsistent".to_string(),
        })?;

        let q_poly = &solution[..nq];
        let mut e_poly = vec![0u8; e_max + 1];
        e_poly[..e_max].copy_from_slice(&solution[nq..]);
        e_poly[e_max] = 1;

        let message_poly = poly_div_exact(q_poly, &e_poly).ok_or_else(|| Error::DecodeFailure {
            detail: "error locator does not divide the interpolant".to_string(),
        })?;
        if message_poly.len() > self.k {
            return Err(Error::DecodeFailure {
                detail: "recovered polynomial exceeds the message degree".to_string(),
            });
        }
        let mut message = vec![0u8; self.k];
        message[..message_poly.len()].copy_from_slice(&message_poly);

        // re-encode and confirm the input sits within the claimed radius
        let reencoded = self.encode(&message)?;
        let disagreements = received
            .iter()
            .zip(reencoded.iter())
            .filter(|(r, c)| matches!(r, Some(y) if y != *c))
            .count();
        if disagreements > e_max {
            return Err(Error::DecodeFailure {
                detail: format!("{disagreements} disagreements exceed error capacity {e_max}"),
            });
        }
        Ok(message)
    }
}

/// Gauss-Jordan over GF(256) on an augmented matrix; returns any solution
/// (free variables zero) or `None` when inconsistent.
fn solve(mut rows: Vec<Vec<u8>>, unknowns: usize) -> Option<Vec<u8>> {
    let m = rows.len();
    let mut pivot_of_col = vec![usize::MAX; unknowns];
    let mut rank = 0usize;
    for col in 0..unknowns {
        let Some(pr) = (rank..m).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = gf_inv(rows[rank][col]);
        for cell in rows[rank][col..=unknowns].iter_mut() {
            *cell = gf_mul(*cell, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (cell, &p) in row[col..=unknowns]
                    .iter_mut()
                    .zip(&pivot_row[col..=unknowns])
                {
                    *cell ^= gf_mul(factor, p);
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
        if rank == m {
            break;
        }
    }
    // inconsistent: zero coefficients with nonzero rhs
    for row in rows.iter().skip(rank) {
        if row[unknowns] != 0 {
            return None;
        }
    }
    let mut sol = vec![0u8; unknowns];
    for col in 0..unknowns {
        if pivot_of_col[col] != usize::MAX {
            sol[col] = rows[pivot_of_col[col]][unknowns];
        }
    }
    Some(sol)
}
