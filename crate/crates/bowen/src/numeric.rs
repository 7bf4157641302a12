//! Small numeric utilities shared across the engine: compensated summation,
//! Gauss–Legendre nodes, least-squares fits, and angle reduction.

/// Neumaier-compensated accumulator. Used wherever a sum must be independent
/// of how work was chunked (ordered merges of parallel partials) and wherever
/// many small terms meet a large one (tree expansion totals).
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sum an iterator with Neumaier compensation.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let mut acc = CompensatedSum::new();
    for x in xs {
        acc.add(x);
    }
    acc.value()
}

/// Reduce an angle to (-pi, pi].
pub fn wrap_angle(a: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut r = a % two_pi;
    if r <= -std::f64::consts::PI {
        r += two_pi;
    } else if r > std::f64::consts::PI {
        r -= two_pi;
    }
    r
}

/// Gauss–Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence. Plenty for the fixed small orders used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th positive-side root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// `int_{v_lo}^inf f(v) dv` for integrands decaying like `v^-q` (q > 1),
/// by Gauss–Legendre after the substitution `m = v^(1-q)` which maps the tail
/// to a finite interval and flattens a pure power exactly.
pub fn power_tail_integral(f: impl Fn(f64) -> f64, v_lo: f64, q: f64, order: usize) -> f64 {
    debug_assert!(q > 1.0 && v_lo > 0.0);
    let (nodes, weights) = gauss_legendre(order);
    let m_hi = v_lo.powf(1.0 - q);
    let ex = 1.0 / (1.0 - q);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let m = 0.5 * (x + 1.0) * m_hi;
        let v = m.powf(ex);
        let dvdm = ex.abs() * m.powf(ex - 1.0);
        acc += w * 0.5 * m_hi * f(v) * dvdm;
    }
    acc
}

/// Ordinary least squares y = a + b x; returns (a, b, r2).
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    assert!(n >= 2.0);
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (a, b, r2)
}

/// Least-squares fit of a degree-`deg` polynomial in the Chebyshev basis over
/// the data's own span (mapped to [-1, 1]). Returns the fitted values at the
/// sample points. Solved by normal equations + Gaussian elimination; the
/// Chebyshev basis keeps them well-conditioned at the degrees used here.
pub fn chebyshev_fit_values(xs: &[f64], ys: &[f64], deg: usize) -> Vec<f64> {
    let n = xs.len();
    assert!(n > deg, "need more samples than coefficients");
    let (lo, hi) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &x| (l.min(x), h.max(x)));
    let span = (hi - lo).max(f64::MIN_POSITIVE);
    let ncoef = deg + 1;
    // design matrix rows of T_0..T_deg at mapped x
    let mut design = vec![0.0; n * ncoef];
    for (i, &x) in xs.iter().enumerate() {
        let u = 2.0 * (x - lo) / span - 1.0;
        let row = &mut design[i * ncoef..(i + 1) * ncoef];
        row[0] = 1.0;
        if ncoef > 1 {
            row[1] = u;
        }
        for j in 2..ncoef {
            row[j] = 2.0 * u * row[j - 1] - row[j - 2];
        }
    }
    // normal equations A^T A c = A^T y
    let mut ata = vec![0.0; ncoef * ncoef];
    let mut aty = vec![0.0; ncoef];
    for i in 0..n {
        let row = &design[i * ncoef..(i + 1) * ncoef];
        for j in 0..ncoef {
            aty[j] += row[j] * ys[i];
            for k in 0..ncoef {
                ata[j * ncoef + k] += row[j] * row[k];
            }
        }
    }
    let coef = solve_dense(&mut ata, &mut aty, ncoef);
    (0..n)
        .map(|i| {
            let row = &design[i * ncoef..(i + 1) * ncoef];
            row.iter().zip(&coef).map(|(b, c)| b * c).sum()
        })
        .collect()
}

/// In-place Gaussian elimination with partial pivoting for small systems.
fn solve_dense(a: &mut [f64], b: &mut [f64], n: usize) -> Vec<f64> {
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| {
                a[i * n + col]
                    .abs()
                    .partial_cmp(&a[j * n + col].abs())
                    .unwrap()
            })
            .unwrap();
        if piv != col {
            for k in 0..n {
                a.swap(col * n + k, piv * n + k);
            }
            b.swap(col, piv);
        }
        let d = a[col * n + col];
        assert!(d.abs() > 1e-300, "singular normal equations");
        for row in (col + 1)..n {
            let f = a[row * n + col] / d;
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                a[row * n + k] -= f * a[col * n + k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in (row + 1)..n {
            s -= a[row * n + k] * x[k];
        }
        x[row] = s / a[row * n + row];
    }
    x
}

/// FNV-1a over bytes; stable fingerprint for config provenance headers.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let mut acc = CompensatedSum::new();
        acc.add(1e16);
        for _ in 0..10 {
            acc.add(1.0);
        }
        acc.add(-1e16);
        assert_eq!(acc.value(), 10.0);
    }

    #[test]
    fn wrap_angle_lands_in_half_open_interval() {
        for i in -40..40 {
            let a = 0.37 * i as f64;
            let w = wrap_angle(a);
            assert!(w > -std::f64::consts::PI - 1e-12 && w <= std::f64::consts::PI + 1e-12);
            assert_relative_eq!((a - w).rem_euclid(std::f64::consts::TAU), 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // order n is exact through degree 2n-1
        let (nodes, weights) = gauss_legendre(8);
        let integral: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(x, w)| w * (x.powi(14) + 3.0 * x.powi(7) + 1.0))
            .sum();
        // int_{-1}^{1} x^14 dx = 2/15, odd term drops, constant gives 2
        assert_relative_eq!(integral, 2.0 / 15.0 + 2.0, epsilon = 1e-12);
    }

    #[test]
    fn power_tail_integral_matches_closed_form() {
        // int_2^inf v^-3 dv = 1/(2*2^2)
        let got = power_tail_integral(|v| v.powi(-3), 2.0, 3.0, 16);
        assert_relative_eq!(got, 0.125, epsilon = 1e-12);
        // decay exponent only approximate: f ~ v^-2.5 with q hint 2.3
        let got = power_tail_integral(|v| v.powf(-2.5), 3.0, 2.3, 48);
        assert_relative_eq!(got, 3.0_f64.powf(-1.5) / 1.5, epsilon = 1e-9);
    }

    #[test]
    fn linear_fit_recovers_exact_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.5 - 0.75 * x).collect();
        let (a, b, r2) = linear_fit(&xs, &ys);
        assert_relative_eq!(a, 2.5, epsilon = 1e-12);
        assert_relative_eq!(b, -0.75, epsilon = 1e-12);
        assert_relative_eq!(r2, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn chebyshev_fit_reproduces_low_degree_polynomial() {
        let xs: Vec<f64> = (0..13).map(|i| 0.14 + 0.005 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 1.0 + x - 3.0 * x * x + x * x * x).collect();
        let fit = chebyshev_fit_values(&xs, &ys, 6);
        for (f, y) in fit.iter().zip(&ys) {
            assert_relative_eq!(f, y, epsilon = 1e-10);
        }
    }

    #[test]
    fn fnv_fingerprint_is_stable() {
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
        assert_ne!(fnv1a64(b"config=1"), fnv1a64(b"config=2"));
    }
}
