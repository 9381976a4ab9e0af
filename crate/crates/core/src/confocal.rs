//! The confocal family `x^2/(a-k) + y^2/(b-k) + z^2/(c-k) = 1`.
//!
//! Parameters are accepted in any order. Internally they are sorted into the
//! canonical order `c < b < a`, and the axis carrying each parameter is
//! recorded, so a point given in the caller's axes is never rotated: the
//! canonical roles only decide which formula applies to which coordinate.
//! All points, vectors and matrices in the public API are in the caller's
//! axes; [`Critical`] and [`ConfocalCoords`] always refer to canonical roles.

use std::f64::consts::PI;

use crate::cone::Plane;
use crate::error::{GeometryError, Result};
use crate::linalg3::{solve_bracketed_cubic, MonicCubic, SymMat3, UnitVec3, Vec3, EPS_REL};

/// Relative distance to a principal plane below which a point is non-generic.
pub const GENERIC_THRESHOLD: f64 = 1e-7;

/// Membership tolerance for `|u^T A_k u - 1|`.
pub const SURFACE_TOLERANCE: f64 = 1e-8;

/// One of the three critical parameter values, by canonical role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Critical {
    /// The largest parameter; the surface degenerates to the imaginary focal curve.
    A,
    /// The middle parameter; degenerates to the focal hyperbola.
    B,
    /// The smallest parameter; degenerates to the focal ellipse.
    C,
}

impl Critical {
    /// Canonical axis index (0 for `a`, 1 for `b`, 2 for `c`).
    pub const fn role(self) -> usize {
        match self {
            Critical::A => 0,
            Critical::B => 1,
            Critical::C => 2,
        }
    }

    pub const fn from_role(role: usize) -> Self {
        match role {
            0 => Critical::A,
            1 => Critical::B,
            _ => Critical::C,
        }
    }

    /// The focal curve the family degenerates to at this value.
    pub const fn focal_kind(self) -> FocalKind {
        match self {
            Critical::A => FocalKind::Imaginary,
            Critical::B => FocalKind::Hyperbola,
            Critical::C => FocalKind::Ellipse,
        }
    }
}

/// Three pairwise distinct parameters together with their canonical order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfocalSystem {
    params: [f64; 3],
    canonical: [f64; 3],
    /// `role[user_axis]` is the canonical role (0 = a, 1 = b, 2 = c).
    role: [usize; 3],
    /// `axis[role]` is the user axis carrying that role.
    axis: [usize; 3],
}

impl ConfocalSystem {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let params = [a, b, c];
        if params.iter().any(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite("confocal parameter"));
        }
        let scale = params.iter().fold(1.0_f64, |m, p| m.max(p.abs()));
        let tol = EPS_REL * scale;
        if (a - b).abs() <= tol || (b - c).abs() <= tol || (a - c).abs() <= tol {
            return Err(GeometryError::DegenerateParameters(a, b, c));
        }
        let mut axis = [0, 1, 2];
        axis.sort_by(|&i, &j| params[j].total_cmp(&params[i]));
        let mut role = [0; 3];
        for (r, &ax) in axis.iter().enumerate() {
            role[ax] = r;
        }
        Ok(Self {
            params,
            canonical: axis.map(|ax| params[ax]),
            role,
            axis,
        })
    }

    /// Parameters in the caller's axis order.
    pub fn params(&self) -> [f64; 3] {
        self.params
    }

    /// Largest parameter.
    pub fn a(&self) -> f64 {
        self.canonical[0]
    }

    /// Middle parameter.
    pub fn b(&self) -> f64 {
        self.canonical[1]
    }

    /// Smallest parameter.
    pub fn c(&self) -> f64 {
        self.canonical[2]
    }

    /// `[a, b, c]` with `c < b < a`.
    pub fn canonical(&self) -> [f64; 3] {
        self.canonical
    }

    pub fn critical(&self, which: Critical) -> f64 {
        self.canonical[which.role()]
    }

    /// Canonical role of user axis `axis`.
    pub fn role_of(&self, axis: usize) -> usize {
        self.role[axis]
    }

    /// User axis that carries canonical role `role`.
    pub fn axis_of(&self, role: usize) -> usize {
        self.axis[role]
    }

    /// Re-expresses a user-axis vector with components ordered by role.
    pub fn to_canonical(&self, v: Vec3) -> Vec3 {
        Vec3::new(v[self.axis[0]], v[self.axis[1]], v[self.axis[2]])
    }

    /// Inverse of [`to_canonical`](Self::to_canonical).
    pub fn to_user(&self, v: Vec3) -> Vec3 {
        Vec3::new(v[self.role[0]], v[self.role[1]], v[self.role[2]])
    }

    /// `max(1, |a|, |b|, |c|)`.
    pub fn scale(&self) -> f64 {
        self.params.iter().fold(1.0_f64, |m, p| m.max(p.abs()))
    }

    /// Absolute tolerance for parameter coincidences.
    pub fn tolerance(&self) -> f64 {
        EPS_REL * self.scale()
    }

    /// `a - c`.
    pub fn span(&self) -> f64 {
        self.a() - self.c()
    }

    /// The critical value `k` coincides with, if any.
    pub fn critical_hit(&self, k: f64) -> Option<Critical> {
        let tol = self.tolerance();
        (0..3)
            .find(|&r| (k - self.canonical[r]).abs() <= tol)
            .map(Critical::from_role)
    }

    fn check_parameter(&self, k: f64) -> Result<()> {
        if !k.is_finite() {
            return Err(GeometryError::NonFinite("confocal parameter"));
        }
        match self.critical_hit(k) {
            Some(_) => Err(GeometryError::CriticalParameter(k)),
            None => Ok(()),
        }
    }

    /// `A_k = diag(1/(a-k), 1/(b-k), 1/(c-k))` in the caller's axes.
    pub fn matrix_at(&self, k: f64) -> Result<SymMat3> {
        self.check_parameter(k)?;
        let [p, q, r] = self.params;
        Ok(SymMat3::diag(1.0 / (p - k), 1.0 / (q - k), 1.0 / (r - k)))
    }

    pub fn classify_surface(&self, k: f64) -> SurfaceClass {
        if self.critical_hit(k).is_some() {
            SurfaceClass::FocalDegenerate
        } else if k < self.c() {
            SurfaceClass::Ellipsoid
        } else if k < self.b() {
            SurfaceClass::HyperboloidOneSheet
        } else if k < self.a() {
            SurfaceClass::HyperboloidTwoSheets
        } else {
            SurfaceClass::Imaginary
        }
    }

    /// `phi_u(k) = (a-k)(b-k)(c-k) (u^T A_k u - 1)` expanded as a monic cubic.
    ///
    /// Its roots are the parameters of the family members through `u`.
    pub fn phi(&self, u: Vec3) -> MonicCubic {
        let [p, q, r] = self.params;
        let s = [u.x * u.x, u.y * u.y, u.z * u.z];
        // other two parameters for each axis
        let others = [(q, r), (p, r), (p, q)];
        let e1 = p + q + r;
        let e2 = p * q + p * r + q * r;
        let e3 = p * q * r;
        let mut c2 = -e1;
        let mut c1 = e2;
        let mut c0 = -e3;
        for (si, (x, y)) in s.iter().zip(others.iter()) {
            c2 += si;
            c1 -= si * (x + y);
            c0 += si * x * y;
        }
        MonicCubic::new(c2, c1, c0)
    }

    /// Whether every coordinate of `u` is clear of the principal planes.
    pub fn is_generic(&self, u: Vec3) -> bool {
        let thresh = GENERIC_THRESHOLD * u.norm().max(1.0);
        u.is_finite() && u.to_array().iter().all(|c| c.abs() > thresh)
    }

    /// The three parameters `k1 < c < k2 < b < k3 < a` of the family members
    /// through a generic point.
    pub fn confocal_coords(&self, u: Vec3) -> Result<ConfocalCoords> {
        if !self.is_generic(u) {
            return Err(GeometryError::NonGenericPoint);
        }
        let phi = self.phi(u);
        let [a, b, c] = self.canonical;
        let lower = c - u.norm_squared() - self.span() - 1.0;
        let brackets = [(lower, c), (c, b), (b, a)];
        let roots = solve_bracketed_cubic(&phi, brackets)?;
        let [k1, k2, k3] = [0, 1, 2].map(|i| self.polish_root(u, roots[i], brackets[i]));
        Ok(ConfocalCoords { k1, k2, k3 })
    }

    /// Newton on `u^T A_k u - 1`, the form whose residual matters downstream.
    ///
    /// When two parameters are close the monomial cubic loses digits near
    /// its roots; the rational form is monotone between the poles and keeps
    /// them.
    fn polish_root(&self, u: Vec3, k0: f64, (lo, hi): (f64, f64)) -> f64 {
        let s = [u.x * u.x, u.y * u.y, u.z * u.z];
        let g = |k: f64| {
            let mut f = -1.0;
            let mut df = 0.0;
            for (si, p) in s.iter().zip(self.params.iter()) {
                let inv = 1.0 / (p - k);
                f += si * inv;
                df += si * inv * inv;
            }
            (f, df)
        };
        let mut k = k0;
        let (mut f, mut df) = g(k);
        for _ in 0..4 {
            if f == 0.0 || df == 0.0 || !f.is_finite() {
                break;
            }
            let next = k - f / df;
            if !(next > lo && next < hi) {
                break;
            }
            let (nf, ndf) = g(next);
            if !(nf.abs() < f.abs()) {
                break;
            }
            (k, f, df) = (next, nf, ndf);
        }
        k
    }

    /// The point with the given confocal coordinates in the octant picked by
    /// `signs` (caller's axes).
    pub fn cartesian_from_confocal(&self, coords: ConfocalCoords, signs: [Sign; 3]) -> Result<Vec3> {
        coords.check_interlaced(self)?;
        let k = coords.to_array();
        let mut out = [0.0; 3];
        for (axis, slot) in out.iter_mut().enumerate() {
            let role = self.role[axis];
            let p = self.canonical[role];
            let num: f64 = k.iter().map(|kj| p - kj).product();
            let den: f64 = (0..3)
                .filter(|&r| r != role)
                .map(|r| self.canonical[r] - p)
                .product();
            let sq = num / den;
            if sq < -self.tolerance() * self.scale() {
                return Err(GeometryError::NegativeSquare(format!(
                    "squared coordinate {sq} on axis {axis}"
                )));
            }
            *slot = signs[axis].apply(sq.max(0.0).sqrt());
        }
        Ok(Vec3::from_array(out))
    }

    /// The plane `x^T A_k u = 1` tangent to the surface `x^T A_k x = 1` at `u`.
    pub fn tangent_plane(&self, k: f64, u: Vec3) -> Result<Plane> {
        let a = self.matrix_at(k)?;
        let residual = a.quadratic_form(u) - 1.0;
        if residual.abs() > SURFACE_TOLERANCE {
            return Err(GeometryError::NotOnSurface(residual));
        }
        let n = a.mul_vec(u);
        let len = n.norm();
        Ok(Plane {
            normal: UnitVec3::new(n)?,
            offset: 1.0 / len,
        })
    }

    pub fn focal_curve(&self, kind: FocalKind) -> FocalCurve {
        let [a, b, c] = self.canonical;
        let ax = |role: usize| self.axis[role];
        match kind {
            FocalKind::Ellipse => FocalCurve {
                kind,
                plane_axis: ax(2),
                terms: [(ax(0), a - c), (ax(1), b - c)],
            },
            FocalKind::Hyperbola => FocalCurve {
                kind,
                plane_axis: ax(1),
                terms: [(ax(0), a - b), (ax(2), c - b)],
            },
            FocalKind::Imaginary => FocalCurve {
                kind,
                plane_axis: ax(0),
                terms: [(ax(1), b - a), (ax(2), c - a)],
            },
        }
    }

    /// Point, unit tangent and collided confocal coordinates at parameter `t`
    /// of a real focal curve.
    ///
    /// On the focal ellipse `k1 = k2 = c` and `k3 = a - (a-b) cos^2 t`; on the
    /// focal hyperbola `k2 = k3 = b` and `k1 = a - (a-c) cosh^2 t`.
    pub fn focal_point_and_tangent(&self, kind: FocalKind, t: f64, branch: Branch) -> Result<FocalPoint> {
        let curve = self.focal_curve(kind);
        let point = curve.point(t, branch)?;
        let tangent = curve.tangent(t, branch)?;
        let [a, b, c] = self.canonical;
        let tol = self.tolerance();
        let (coords, boundary) = match kind {
            FocalKind::Ellipse => {
                let k3 = a - (a - b) * t.cos().powi(2);
                let flag = if (k3 - b).abs() <= tol {
                    Some(VertexFlag::K3AtB)
                } else if (a - k3).abs() <= tol {
                    Some(VertexFlag::K3AtA)
                } else {
                    None
                };
                (ConfocalCoords { k1: c, k2: c, k3 }, flag)
            }
            FocalKind::Hyperbola => {
                let k1 = a - (a - c) * t.cosh().powi(2);
                let flag = ((c - k1).abs() <= tol).then_some(VertexFlag::K1AtC);
                (ConfocalCoords { k1, k2: b, k3: b }, flag)
            }
            FocalKind::Imaginary => unreachable!("rejected by FocalCurve::point"),
        };
        Ok(FocalPoint {
            point,
            tangent,
            coords,
            boundary,
        })
    }

    /// A `rows x cols` grid on the surface `x^T A_k x = 1`.
    ///
    /// Hyperbolic directions are sampled for `|s| <= extent`. Two-sheet
    /// hyperboloids return the rows of both sheets, `rows` each.
    pub fn sample_surface(&self, k: f64, rows: usize, cols: usize, extent: f64) -> Result<Vec<Vec<Vec3>>> {
        self.check_parameter(k)?;
        let [a, b, c] = self.canonical;
        let (sa, sb, sc) = (
            (a - k).abs().sqrt(),
            (b - k).abs().sqrt(),
            (c - k).abs().sqrt(),
        );
        let lerp = |i: usize, n: usize, lo: f64, hi: f64| {
            if n <= 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        };
        let grid = |f: &dyn Fn(f64, f64) -> Vec3, (lo0, hi0): (f64, f64)| -> Vec<Vec<Vec3>> {
            (0..rows)
                .map(|i| {
                    let s = lerp(i, rows, lo0, hi0);
                    (0..cols)
                        .map(|j| {
                            let psi = 2.0 * PI * j as f64 / cols as f64;
                            self.to_user(f(s, psi))
                        })
                        .collect()
                })
                .collect()
        };
        Ok(match self.classify_surface(k) {
            SurfaceClass::Ellipsoid => grid(
                &|s, psi| Vec3::new(sa * s.sin() * psi.cos(), sb * s.sin() * psi.sin(), sc * s.cos()),
                (0.0, PI),
            ),
            SurfaceClass::HyperboloidOneSheet => grid(
                &|s, psi| Vec3::new(sa * s.cosh() * psi.cos(), sb * s.cosh() * psi.sin(), sc * s.sinh()),
                (-extent, extent),
            ),
            SurfaceClass::HyperboloidTwoSheets => {
                let mut out = Vec::with_capacity(2 * rows);
                for sign in [1.0, -1.0] {
                    out.extend(grid(
                        &|s, psi| {
                            Vec3::new(sign * sa * s.cosh(), sb * s.sinh() * psi.cos(), sc * s.sinh() * psi.sin())
                        },
                        (0.0, extent),
                    ));
                }
                out
            }
            SurfaceClass::Imaginary | SurfaceClass::FocalDegenerate => Vec::new(),
        })
    }
}

/// `(k1, k2, k3)`; for generic points `k1 < c < k2 < b < k3 < a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfocalCoords {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
}

impl ConfocalCoords {
    pub const fn new(k1: f64, k2: f64, k3: f64) -> Self {
        Self { k1, k2, k3 }
    }

    pub const fn to_array(self) -> [f64; 3] {
        [self.k1, self.k2, self.k3]
    }

    /// Strict interlacing `k1 < c < k2 < b < k3 < a`.
    pub fn is_interlaced(&self, sys: &ConfocalSystem) -> bool {
        let [a, b, c] = sys.canonical();
        self.k1 < c && c < self.k2 && self.k2 < b && b < self.k3 && self.k3 < a
    }

    /// Weak interlacing (up to tolerance), which admits points on the
    /// principal planes.
    fn check_interlaced(&self, sys: &ConfocalSystem) -> Result<()> {
        let [a, b, c] = sys.canonical();
        let tol = sys.tolerance();
        let chain = [self.k1, c, self.k2, b, self.k3, a];
        if self.to_array().iter().any(|k| !k.is_finite()) {
            return Err(GeometryError::NonFinite("confocal coordinate"));
        }
        match chain.windows(2).position(|w| w[0] > w[1] + tol) {
            None => Ok(()),
            Some(i) => Err(GeometryError::NegativeSquare(format!(
                "interlacing k1 <= c <= k2 <= b <= k3 <= a fails at position {i}: {} > {}",
                chain[i],
                chain[i + 1]
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceClass {
    Ellipsoid,
    HyperboloidOneSheet,
    HyperboloidTwoSheets,
    Imaginary,
    FocalDegenerate,
}

impl SurfaceClass {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceClass::Ellipsoid => "ellipsoid",
            SurfaceClass::HyperboloidOneSheet => "hyperboloid_one_sheet",
            SurfaceClass::HyperboloidTwoSheets => "hyperboloid_two_sheets",
            SurfaceClass::Imaginary => "imaginary",
            SurfaceClass::FocalDegenerate => "focal_degenerate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn of(x: f64) -> Self {
        if x.is_sign_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Hyperbola branch, labelled by the sign of the coordinate along the
/// transverse axis.
pub type Branch = Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FocalKind {
    Ellipse,
    Hyperbola,
    Imaginary,
}

impl FocalKind {
    pub fn name(self) -> &'static str {
        match self {
            FocalKind::Ellipse => "ellipse",
            FocalKind::Hyperbola => "hyperbola",
            FocalKind::Imaginary => "imaginary",
        }
    }
}

/// A plane curve `sum x_i^2 / d_i = 1` lying in the plane `x_plane_axis = 0`.
///
/// For the ellipse both denominators are positive; for the hyperbola the
/// first is positive (transverse axis) and the second negative; for the
/// imaginary curve both are negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocalCurve {
    pub kind: FocalKind,
    pub plane_axis: usize,
    pub terms: [(usize, f64); 2],
}

impl FocalCurve {
    /// A plane conic given directly by its two `(axis, denominator)` terms.
    pub fn from_terms(plane_axis: usize, terms: [(usize, f64); 2]) -> Result<Self> {
        let [(i, d0), (j, d1)] = terms;
        if i == j || i == plane_axis || j == plane_axis || plane_axis > 2 || i > 2 || j > 2 {
            return Err(GeometryError::InvalidConic("axes must be distinct"));
        }
        if d0 == 0.0 || d1 == 0.0 || !d0.is_finite() || !d1.is_finite() {
            return Err(GeometryError::InvalidConic("denominators must be finite and nonzero"));
        }
        let (kind, terms) = match (d0 > 0.0, d1 > 0.0) {
            (true, true) => (FocalKind::Ellipse, terms),
            (true, false) => (FocalKind::Hyperbola, terms),
            (false, true) => (FocalKind::Hyperbola, [terms[1], terms[0]]),
            (false, false) => (FocalKind::Imaginary, terms),
        };
        Ok(Self {
            kind,
            plane_axis,
            terms,
        })
    }

    pub fn is_real(&self) -> bool {
        self.kind != FocalKind::Imaginary
    }

    /// `sum x_i^2 / d_i - 1` (the in-plane equation only).
    pub fn residual(&self, p: Vec3) -> f64 {
        self.terms.iter().map(|&(ax, d)| p[ax] * p[ax] / d).sum::<f64>() - 1.0
    }

    /// Distance of `p` from the curve's plane.
    pub fn plane_offset(&self, p: Vec3) -> f64 {
        p[self.plane_axis]
    }

    /// `(sqrt(d0) cos t, sqrt(d1) sin t)` for the ellipse and
    /// `(+-sqrt(d0) cosh t, sqrt(-d1) sinh t)` for the hyperbola.
    pub fn point(&self, t: f64, branch: Branch) -> Result<Vec3> {
        let [(i, d0), (j, d1)] = self.terms;
        let (xi, xj) = match self.kind {
            FocalKind::Ellipse => (d0.sqrt() * t.cos(), d1.sqrt() * t.sin()),
            FocalKind::Hyperbola => (branch.apply(d0.sqrt() * t.cosh()), (-d1).sqrt() * t.sinh()),
            FocalKind::Imaginary => return Err(GeometryError::ImaginaryCurve),
        };
        let mut out = [0.0; 3];
        out[i] = xi;
        out[j] = xj;
        Ok(Vec3::from_array(out))
    }

    /// Derivative of [`point`](Self::point) with respect to `t`.
    pub fn velocity(&self, t: f64, branch: Branch) -> Result<Vec3> {
        let [(i, d0), (j, d1)] = self.terms;
        let (xi, xj) = match self.kind {
            FocalKind::Ellipse => (-d0.sqrt() * t.sin(), d1.sqrt() * t.cos()),
            FocalKind::Hyperbola => (branch.apply(d0.sqrt() * t.sinh()), (-d1).sqrt() * t.cosh()),
            FocalKind::Imaginary => return Err(GeometryError::ImaginaryCurve),
        };
        let mut out = [0.0; 3];
        out[i] = xi;
        out[j] = xj;
        Ok(Vec3::from_array(out))
    }

    pub fn tangent(&self, t: f64, branch: Branch) -> Result<UnitVec3> {
        UnitVec3::new(self.velocity(t, branch)?)
    }

    /// `n` samples: evenly spaced around an ellipse, or `n/2` per branch of a
    /// hyperbola with `|t| <= extent`.
    pub fn samples(&self, n: usize, extent: f64) -> Result<Vec<Vec3>> {
        match self.kind {
            FocalKind::Ellipse => (0..n)
                .map(|i| self.point(2.0 * PI * i as f64 / n as f64, Branch::Plus))
                .collect(),
            FocalKind::Hyperbola => {
                let per = n.div_ceil(2).max(2);
                let mut out = Vec::with_capacity(2 * per);
                for branch in [Branch::Plus, Branch::Minus] {
                    for i in 0..per {
                        let t = -extent + 2.0 * extent * i as f64 / (per - 1) as f64;
                        out.push(self.point(t, branch)?);
                    }
                }
                out.truncate(n.max(4));
                Ok(out)
            }
            FocalKind::Imaginary => Err(GeometryError::ImaginaryCurve),
        }
    }

    /// Human-readable equation such as `x^2/2 - z^2 = 1 (y=0)`.
    pub fn equation(&self) -> String {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        let mut s = String::new();
        for (n, &(ax, d)) in self.terms.iter().enumerate() {
            let mag = d.abs();
            let term = if mag == 1.0 {
                format!("{}^2", NAMES[ax])
            } else {
                format!("{}^2/{}", NAMES[ax], mag)
            };
            match (n, d < 0.0) {
                (0, false) => s.push_str(&term),
                (0, true) => s.push_str(&format!("-{term}")),
                (_, false) => s.push_str(&format!(" + {term}")),
                (_, true) => s.push_str(&format!(" - {term}")),
            }
        }
        format!("{s} = 1 ({}=0)", NAMES[self.plane_axis])
    }
}

/// Where a focal-curve point meets a principal axis and two confocal
/// coordinates collide with a critical value at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexFlag {
    /// Focal-ellipse vertex on the focal hyperbola's transverse axis.
    K3AtB,
    /// Focal-ellipse vertex on its minor axis.
    K3AtA,
    /// Focal-hyperbola vertex.
    K1AtC,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocalPoint {
    pub point: Vec3,
    pub tangent: UnitVec3,
    pub coords: ConfocalCoords,
    pub boundary: Option<VertexFlag>,
}
