//! Small numerical kernels shared by the distribution, expansion and EVT code.
//!
//! Most of these exist to keep tail computations free of cancellation: the
//! record simulator and the expansion checks evaluate quantiles at tail
//! probabilities far below `f64::EPSILON`, where the textbook formulas
//! collapse to `0` or `inf`.

use std::f64::consts::PI;

/// `ln(e^y - 1)` for `y > 0`, stable for both tiny and huge `y`.
pub fn ln_expm1(y: f64) -> f64 {
    if y > 36.0 {
        y + (-(-y).exp()).ln_1p()
    } else {
        y.exp_m1().ln()
    }
}

/// `ln(1 + e^x)`.
pub fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Logistic function `1 / (1 + e^{-x})`.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Sum of `u^j / j` for `j >= 2`, i.e. `-ln(1-u) - u`, without cancellation.
fn neg_ln1m_minus_linear(u: f64) -> f64 {
    if u > 0.05 {
        return -(-u).ln_1p() - u;
    }
    let mut term = u * u;
    let mut sum = 0.0f64;
    let mut j = 2.0;
    while term / j > 1e-18 * (sum.abs() + f64::MIN_POSITIVE) || j < 3.0 {
        sum += term / j;
        term *= u;
        j += 1.0;
        if j > 60.0 {
            break;
        }
    }
    sum
}

/// `e^w - 1 - w` without cancellation.
fn expm1_minus_linear(w: f64) -> f64 {
    if w.abs() > 0.05 {
        return w.exp_m1() - w;
    }
    let mut term = w * w / 2.0;
    let mut sum = 0.0f64;
    let mut j = 2.0;
    while term.abs() > 1e-18 * sum.abs() || j < 3.0 {
        sum += term;
        j += 1.0;
        term *= w / j;
        if j > 40.0 {
            break;
        }
    }
    sum
}

/// Relative excess `r((1-u)^{-1/r} - 1)/u - 1`.
///
/// Behaves like `(r+1)u/(2r)` as `u -> 0`. Returns `0` for `u == 0`.
pub fn pow_excess_rel(u: f64, r: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    if u < 0.01 {
        let w = -(-u).ln_1p() / r;
        (r * expm1_minus_linear(w) + neg_ln1m_minus_linear(u)) / u
    } else {
        r * (-(-u).ln_1p() / r).exp_m1() / u - 1.0
    }
}

/// Relative deficit `r(1 - (1-u)^{1/r})/u - 1`.
///
/// Behaves like `(r-1)u/(2r)` as `u -> 0`. Returns `0` for `u == 0`.
pub fn pow_deficit_rel(u: f64, r: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    if u < 0.01 {
        let w = (-u).ln_1p() / r;
        (neg_ln1m_minus_linear(u) - r * expm1_minus_linear(w)) / u
    } else {
        -r * ((-u).ln_1p() / r).exp_m1() / u - 1.0
    }
}

/// `z - sin(2πz)/(2π)`, accurate near `z = 0` where it behaves like `(2π)²z³/6`.
pub fn sin_defect(z: f64) -> f64 {
    let a = 2.0 * PI * z;
    if a.abs() < 0.5 {
        // z - sin(a)/(2π) = (1/(2π)) Σ_{j>=1} (-1)^{j+1} a^{2j+1}/(2j+1)!
        let a2 = a * a;
        let mut term = a * a2 / 6.0;
        let mut sum = 0.0f64;
        let mut j = 1.0;
        while term.abs() > 1e-19 * sum.abs() || sum == 0.0 {
            sum += term;
            term *= -a2 / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
            j += 1.0;
            if j > 30.0 {
                break;
            }
        }
        sum / (2.0 * PI)
    } else {
        z - a.sin() / (2.0 * PI)
    }
}

/// `ln(tan(v)/v)` for `0 < v < π/2`.
pub fn ln_tan_ratio(v: f64) -> f64 {
    if v < 0.05 {
        let v2 = v * v;
        // tan v / v = 1 + v²/3 + 2v⁴/15 + 17v⁶/315 + ...
        // ln of it  = v²/3 + 7v⁴/90 + 62v⁶/2835 + ...
        v2 * (1.0 / 3.0 + v2 * (7.0 / 90.0 + v2 * (62.0 / 2835.0)))
    } else {
        (v.tan() / v).ln()
    }
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2)
}

/// Standard normal upper tail `1 - Φ(x)`.
pub fn normal_sf(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(x / std::f64::consts::SQRT_2)
}

/// Ordinary least-squares slope and intercept of `y` on `x`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Solves the normal equations of a small least-squares problem
/// `min ||A c - y||` where `rows[i]` is the i-th row of `A`.
pub fn least_squares(rows: &[Vec<f64>], y: &[f64]) -> Vec<f64> {
    let p = rows[0].len();
    let mut m = vec![vec![0.0; p + 1]; p];
    for (row, &yi) in rows.iter().zip(y) {
        for i in 0..p {
            for j in 0..p {
                m[i][j] += row[i] * row[j];
            }
            m[i][p] += row[i] * yi;
        }
    }
    // Gaussian elimination with partial pivoting.
    for col in 0..p {
        let piv = (col..p)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        m.swap(col, piv);
        for row in col + 1..p {
            let f = m[row][col] / m[col][col];
            for k in col..=p {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    let mut c = vec![0.0; p];
    for i in (0..p).rev() {
        let s: f64 = (i + 1..p).map(|j| m[i][j] * c[j]).sum();
        c[i] = (m[i][p] - s) / m[i][i];
    }
    c
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const GK_WEIGHTS_K: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const GK_WEIGHTS_G: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * GK_WEIGHTS_K[7];
    let mut gauss = fc * GK_WEIGHTS_G[3];
    for i in 0..7 {
        let dx = h * GK_NODES[i];
        let pair = f(c - dx) + f(c + dx);
        kronrod += GK_WEIGHTS_K[i] * pair;
        if i % 2 == 1 {
            gauss += GK_WEIGHTS_G[i / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss–Kronrod (7/15) quadrature on a finite interval.
///
/// Returns the integral estimate and the accumulated error estimate.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> (f64, f64) {
    let mut intervals = vec![(a, b, gk15(&f, a, b))];
    for _ in 0..2000 {
        let total: f64 = intervals.iter().map(|iv| iv.2 .0).sum();
        let err: f64 = intervals.iter().map(|iv| iv.2 .1).sum();
        if err <= abs_tol.max(rel_tol * total.abs()) {
            break;
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1))
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        intervals.push((lo, mid, gk15(&f, lo, mid)));
        intervals.push((mid, hi, gk15(&f, mid, hi)));
    }
    let total = intervals.iter().map(|iv| iv.2 .0).sum();
    let err = intervals.iter().map(|iv| iv.2 .1).sum();
    (total, err)
}

/// Central difference with step `h`.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}
