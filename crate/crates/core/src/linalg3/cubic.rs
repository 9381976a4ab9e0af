use crate::error::{GeometryError, Result};

/// `k^3 + c2 k^2 + c1 k + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonicCubic {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

/// Bisection stops once the bracket is this narrow (relative to `max(1, |k|)`).
const BISECTION_WIDTH: f64 = 1e-10;
const MAX_NEWTON_STEPS: usize = 5;

impl MonicCubic {
    pub const fn new(c2: f64, c1: f64, c0: f64) -> Self {
        Self { c2, c1, c0 }
    }

    /// `(k - r0)(k - r1)(k - r2)`.
    pub fn from_roots(r: [f64; 3]) -> Self {
        Self::new(
            -(r[0] + r[1] + r[2]),
            r[0] * r[1] + r[0] * r[2] + r[1] * r[2],
            -(r[0] * r[1] * r[2]),
        )
    }

    pub fn eval(&self, k: f64) -> f64 {
        ((k + self.c2) * k + self.c1) * k + self.c0
    }

    pub fn derivative(&self, k: f64) -> f64 {
        (3.0 * k + 2.0 * self.c2) * k + self.c1
    }

    /// Sum of the magnitudes of the four terms at `k`; the natural scale for
    /// judging a residual `|p(k)|`.
    pub fn term_scale(&self, k: f64) -> f64 {
        let a = k.abs();
        a * a * a + self.c2.abs() * a * a + self.c1.abs() * a + self.c0.abs()
    }

    pub fn relative_residual(&self, k: f64) -> f64 {
        let s = self.term_scale(k);
        if s == 0.0 {
            0.0
        } else {
            self.eval(k).abs() / s
        }
    }

    pub fn max_coefficient(&self) -> f64 {
        1.0_f64
            .max(self.c2.abs())
            .max(self.c1.abs())
            .max(self.c0.abs())
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.c2, self.c1, self.c0]
    }
}

/// Finds one root in each of three disjoint open brackets.
///
/// Each bracket must show a strict sign change. Bisection shrinks it to width
/// `1e-10` and at most five safeguarded Newton steps polish the result.
/// Roots come back ascending.
pub fn solve_bracketed_cubic(p: &MonicCubic, brackets: [(f64, f64); 3]) -> Result<[f64; 3]> {
    let mut roots = [0.0; 3];
    for (slot, &(lo, hi)) in roots.iter_mut().zip(brackets.iter()) {
        *slot = root_in(p, lo, hi)?;
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

fn root_in(p: &MonicCubic, lo: f64, hi: f64) -> Result<f64> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = p.eval(lo);
    let f_hi = p.eval(hi);
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo * f_hi >= 0.0 {
        return Err(GeometryError::NoSignChange { lo, hi });
    }

    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= BISECTION_WIDTH * mid.abs().max(1.0) || mid <= lo || mid >= hi {
            break;
        }
        let f_mid = p.eval(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }

    let mut k = 0.5 * (lo + hi);
    for _ in 0..MAX_NEWTON_STEPS {
        let f = p.eval(k);
        let d = p.derivative(k);
        if f == 0.0 || d == 0.0 {
            break;
        }
        let next = k - f / d;
        // keep the iterate inside the last bracket
        if !(next > lo && next < hi) || next == k {
            break;
        }
        k = next;
    }
    Ok(k)
}
