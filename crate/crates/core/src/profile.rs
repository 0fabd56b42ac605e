/// Coefficients of one column's misfit along a geodesic.
///
/// With `g(t) = a cos t + b sin t` and
/// `d(t) = p cos²t + 2q cos t sin t + r sin²t`, the column's contribution is
/// `f_j(t) = x_norm_sq - g(t)² / d(t)`.
///
/// Values are evaluated in the equivalent form
/// `f_j(t) = perp_sq + (kappa cos t + lambda sin t)² / d(t)`, where
/// `perp_sq` is the part of `x_Ωj` outside the span of the restricted `u` and
/// `h`. Both terms are nonnegative, so small misfits keep full relative
/// precision instead of cancelling against `x_norm_sq`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomicProfile {
    pub column: usize,
    /// `⟨u_Ωj, x_Ωj⟩`
    pub a: f64,
    /// `⟨h_Ωj, x_Ωj⟩`
    pub b: f64,
    /// `‖u_Ωj‖²`
    pub p: f64,
    /// `⟨u_Ωj, h_Ωj⟩`
    pub q: f64,
    /// `‖h_Ωj‖²`
    pub r: f64,
    /// `‖x_Ωj‖²`
    pub x_norm_sq: f64,
    /// Restricted `u` and `h` are linearly dependent.
    pub degenerate: bool,
    /// Squared distance of `x_Ωj` from `span(u_Ωj, h_Ωj)`.
    pub perp_sq: f64,
    pub kappa: f64,
    pub lambda: f64,
}

/// `p r - q² <= DEGENERACY_RTOL * max(p r, 1)` marks a profile degenerate.
pub const DEGENERACY_RTOL: f64 = 1e-14;

fn is_degenerate(p: f64, q: f64, r: f64) -> bool {
    let pr = p * r;
    pr - q * q <= DEGENERACY_RTOL * pr.max(1.0)
}

impl AtomicProfile {
    /// Builds the profile from the restrictions of `u`, `h` and `x` to one
    /// column's observed rows.
    pub fn from_restrictions(column: usize, u: &[f64], h: &[f64], x: &[f64]) -> Self {
        Self::from_triples(
            column,
            u.iter().zip(h).zip(x).map(|((u, h), x)| (*u, *h, *x)),
        )
    }

    /// Same as [`from_restrictions`](Self::from_restrictions), over
    /// `(u_i, h_i, x_i)` for the observed rows `i`.
    pub fn from_triples<I>(column: usize, triples: I) -> Self
    where
        I: Iterator<Item = (f64, f64, f64)> + Clone,
    {
        let (mut a, mut b, mut p, mut q, mut r, mut xx) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        for (ui, hi, xi) in triples.clone() {
            a += ui * xi;
            b += hi * xi;
            p += ui * ui;
            q += ui * hi;
            r += hi * hi;
            xx += xi * xi;
        }
        let degenerate = is_degenerate(p, q, r);

        // explicit least-squares residual of x on the restricted span
        let (perp_sq, kappa, lambda) = if !degenerate {
            let det = p * r - q * q;
            let alpha = (r * a - q * b) / det;
            let beta = (p * b - q * a) / det;
            let perp = triples
                .map(|(ui, hi, xi)| {
                    let e = xi - alpha * ui - beta * hi;
                    e * e
                })
                .sum();
            let root = det.sqrt();
            (perp, -(p * b - q * a) / root, (a * r - q * b) / root)
        } else {
            let (coef_u, coef_h) = if p >= r && p > 0.0 {
                (a / p, 0.0)
            } else if r > 0.0 {
                (0.0, b / r)
            } else {
                (0.0, 0.0)
            };
            let perp = triples
                .map(|(ui, hi, xi)| {
                    let e = xi - coef_u * ui - coef_h * hi;
                    e * e
                })
                .sum();
            (perp, 0.0, 0.0)
        };

        Self {
            column,
            a,
            b,
            p,
            q,
            r,
            x_norm_sq: xx,
            degenerate,
            perp_sq,
            kappa,
            lambda,
        }
    }

    /// Builds a profile from the inner products alone. The derived terms are
    /// obtained algebraically and are less accurate near an exact fit than
    /// those of [`from_restrictions`](Self::from_restrictions).
    pub fn from_coefficients(
        column: usize,
        a: f64,
        b: f64,
        p: f64,
        q: f64,
        r: f64,
        x_norm_sq: f64,
    ) -> Self {
        let degenerate = is_degenerate(p, q, r);
        let (perp_sq, kappa, lambda) = if !degenerate {
            let det = p * r - q * q;
            let root = det.sqrt();
            let fitted = (a * a * r - 2.0 * a * b * q + b * b * p) / det;
            (
                (x_norm_sq - fitted).max(0.0),
                -(p * b - q * a) / root,
                (a * r - q * b) / root,
            )
        } else if p >= r && p > 0.0 {
            ((x_norm_sq - a * a / p).max(0.0), 0.0, 0.0)
        } else if r > 0.0 {
            ((x_norm_sq - b * b / r).max(0.0), 0.0, 0.0)
        } else {
            (x_norm_sq, 0.0, 0.0)
        };
        Self {
            column,
            a,
            b,
            p,
            q,
            r,
            x_norm_sq,
            degenerate,
            perp_sq,
            kappa,
            lambda,
        }
    }

    /// `det([[p, q], [q, r]])`, the Gram determinant of the restricted pair.
    pub fn gram_det(&self) -> f64 {
        self.p * self.r - self.q * self.q
    }

    fn denominator(&self, s: f64, c: f64) -> f64 {
        self.p * c * c + 2.0 * self.q * c * s + self.r * s * s
    }

    /// `f_j(u(t))`. A vanishing restricted point fits nothing.
    pub fn value(&self, t: f64) -> f64 {
        let (s, c) = t.sin_cos();
        let d = self.denominator(s, c);
        if !(d > 0.0) {
            return self.x_norm_sq;
        }
        let n = self.kappa * c + self.lambda * s;
        (self.perp_sq + n * n / d).min(self.x_norm_sq)
    }

    /// `f_j(u(t))` in the textbook form `x_norm_sq - g²/d`.
    pub fn value_direct(&self, t: f64) -> f64 {
        let (s, c) = t.sin_cos();
        let d = self.denominator(s, c);
        if !(d > 0.0) {
            return self.x_norm_sq;
        }
        let g = self.a * c + self.b * s;
        self.x_norm_sq - g * g / d
    }

    /// `d/dt f_j(u(t))`; zero for degenerate profiles, which are constant
    /// almost everywhere.
    pub fn slope(&self, t: f64) -> f64 {
        if self.degenerate {
            return 0.0;
        }
        let (s, c) = t.sin_cos();
        let d = self.denominator(s, c);
        let n = self.kappa * c + self.lambda * s;
        let dn = -self.kappa * s + self.lambda * c;
        let dd = (self.r - self.p) * 2.0 * s * c + 2.0 * self.q * (c * c - s * s);
        (2.0 * n * dn * d - n * n * dd) / (d * d)
    }
}
