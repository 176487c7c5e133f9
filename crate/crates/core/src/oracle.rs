//! Slow, independent reference computations used to cross-check the main
//! algorithms. Nothing here calls into `roots`, `decompose` or `classify`.

use crate::gaussian::GaussianRational;

fn form(c: &[Vec<i64>], v: &[i64], w: &[i64]) -> i64 {
    c.iter()
        .zip(v)
        .map(|(row, a)| a * row.iter().zip(w).map(|(x, b)| x * b).sum::<i64>())
        .sum()
}

/// All integer `v` with `v^T C v = 2`, for a positive definite `C`, found by
/// Fincke-Pohst enumeration of the ellipsoid. Sorted.
pub fn quadric_roots(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    // C = L D L^T with L unit lower triangular
    let mut l = vec![vec![0f64; n]; n];
    let mut d = vec![0f64; n];
    for j in 0..n {
        let s: f64 = (0..j).map(|k| l[j][k] * l[j][k] * d[k]).sum();
        d[j] = c[j][j] as f64 - s;
        assert!(d[j] > 0.0, "form is not positive definite");
        l[j][j] = 1.0;
        for i in (j + 1)..n {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k] * d[k]).sum();
            l[i][j] = (c[i][j] as f64 - s) / d[j];
        }
    }
    // v^T C v = sum_j d_j (v_j + sum_{i>j} l_ij v_i)^2
    let mut out = Vec::new();
    let mut v = vec![0i64; n];
    search(c, &l, &d, n, 2.0, &mut v, &mut out);
    out.sort();
    out
}

fn search(
    c: &[Vec<i64>],
    l: &[Vec<f64>],
    d: &[f64],
    level: usize,
    budget: f64,
    v: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if level == 0 {
        if form(c, v, v) == 2 {
            out.push(v.clone());
        }
        return;
    }
    let j = level - 1;
    let centre: f64 = -((j + 1)..v.len()).map(|i| l[i][j] * v[i] as f64).sum::<f64>();
    let radius = (budget.max(0.0) / d[j]).sqrt();
    let lo = (centre - radius - 1.0).ceil() as i64;
    let hi = (centre + radius + 1.0).floor() as i64;
    for x in lo..=hi {
        let used = d[j] * (x as f64 - centre).powi(2);
        if used > budget + 1e-6 {
            continue;
        }
        v[j] = x;
        search(c, l, d, j, budget - used, v, out);
    }
    v[j] = 0;
}

/// Integer vectors `0 <= theta <= bound` (componentwise) in lexicographic order
/// of the reversed coordinates.
fn box_points(bound: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![0i64; bound.len()];
    loop {
        out.push(v.clone());
        let mut k = 0;
        loop {
            if k == bound.len() {
                return out;
            }
            if v[k] < bound[k] {
                v[k] += 1;
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

fn is_zero_pairing(lambda: &[GaussianRational], v: &[i64]) -> bool {
    let mut total = GaussianRational::zero();
    for (l, &x) in lambda.iter().zip(v) {
        total += &l.scale(x);
    }
    total.is_zero()
}

/// Reference answer for simple modules of every dimension `0 < alpha <= delta`
/// of the deformed preprojective algebra at weight `lambda`, for an extended
/// Cartan matrix `c` with imaginary root `delta`.
///
/// Positive roots in the box are the vectors with `(theta, theta) = 2` together
/// with `delta`. A simple module of dimension `alpha` exists iff `alpha` is such
/// a root with `lambda . alpha = 0` and `p(alpha)` exceeds `sum p(beta_k)` for
/// every decomposition `alpha = beta_1 + ... + beta_r` (`r >= 2`) into such roots.
pub struct CrawleyBoeveyOracle {
    bound: Vec<i64>,
    strides: Vec<usize>,
    /// Best `sum p` over decompositions into one or more parts; `None` if unreachable.
    best: Vec<Option<i64>>,
    parts: Vec<(Vec<i64>, i64)>,
}

impl CrawleyBoeveyOracle {
    pub fn new(c: &[Vec<i64>], delta: &[i64], lambda: &[GaussianRational]) -> Self {
        let points = box_points(delta);
        let parts: Vec<(Vec<i64>, i64)> = points
            .iter()
            .filter(|t| t.iter().any(|&x| x != 0))
            .filter_map(|t| {
                let q = form(c, t, t);
                let p = match q {
                    2 => 0,
                    0 if t.as_slice() == delta => 1,
                    _ => return None,
                };
                is_zero_pairing(lambda, t).then(|| (t.clone(), p))
            })
            .collect();
        let mut strides = Vec::new();
        let mut s = 1usize;
        for &b in delta {
            strides.push(s);
            s *= (b + 1) as usize;
        }
        let index = |v: &[i64]| -> usize { v.iter().zip(&strides).map(|(x, s)| *x as usize * s).sum() };
        let mut best: Vec<Option<i64>> = vec![None; points.len()];
        // box_points enumerates cells in increasing index order
        for (cell, v) in points.iter().enumerate() {
            let mut top: Option<i64> = None;
            for (p, weight) in &parts {
                if !p.iter().zip(v).all(|(a, b)| a <= b) {
                    continue;
                }
                let rest: Vec<i64> = v.iter().zip(p).map(|(a, b)| a - b).collect();
                let value = if rest.iter().all(|&x| x == 0) {
                    Some(*weight)
                } else {
                    best[index(&rest)].map(|b| b + weight)
                };
                top = top.max(value);
            }
            best[cell] = top;
        }
        CrawleyBoeveyOracle { bound: delta.to_vec(), strides, best, parts }
    }

    fn index(&self, v: &[i64]) -> usize {
        v.iter().zip(&self.strides).map(|(x, s)| *x as usize * s).sum()
    }

    /// Positive roots `theta <= delta` with `lambda . theta = 0`.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        self.parts.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn simple_exists(&self, alpha: &[i64]) -> bool {
        if alpha.len() != self.bound.len() || !alpha.iter().zip(&self.bound).all(|(a, b)| 0 <= *a && a <= b) {
            return false;
        }
        let Some((_, p_alpha)) = self.parts.iter().find(|(p, _)| p == alpha) else {
            return false;
        };
        let split = self
            .parts
            .iter()
            .filter(|(b, _)| b != alpha && b.iter().zip(alpha).all(|(x, a)| x <= a))
            .filter_map(|(b, w)| {
                let rest: Vec<i64> = alpha.iter().zip(b).map(|(a, x)| a - x).collect();
                self.best[self.index(&rest)].map(|r| r + w)
            })
            .max();
        split.is_none_or(|s| *p_alpha > s)
    }
}

/// `{ theta : 0 < theta < v, (theta, theta) <= 2 }` by scanning the box, sorted.
pub fn box_r_plus(c: &[Vec<i64>], v: &[i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = box_points(v)
        .into_iter()
        .filter(|t| t.iter().any(|&x| x != 0) && t.as_slice() != v && form(c, t, t) <= 2)
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cartan_a(n: usize) -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 }).collect())
            .collect()
    }

    #[test]
    fn quadric_counts_type_a() {
        for n in 1..=6 {
            assert_eq!(quadric_roots(&cartan_a(n)).len(), n * (n + 1));
        }
    }

    #[test]
    fn crawley_boevey_on_kronecker() {
        let c = vec![vec![2, -2], vec![-2, 2]];
        let zero = vec![GaussianRational::zero(); 2];
        let o = CrawleyBoeveyOracle::new(&c, &[1, 1], &zero);
        assert!(o.simple_exists(&[1, 0]));
        assert!(o.simple_exists(&[0, 1]));
        assert!(o.simple_exists(&[1, 1]));
        let lam = vec![GaussianRational::from_int(-1), GaussianRational::from_int(1)];
        let o = CrawleyBoeveyOracle::new(&c, &[1, 1], &lam);
        assert!(!o.simple_exists(&[1, 0]));
        assert!(o.simple_exists(&[1, 1]));
    }

    #[test]
    fn box_r_plus_kronecker() {
        let c = vec![vec![2, -2], vec![-2, 2]];
        assert_eq!(box_r_plus(&c, &[1, 1]), vec![vec![0, 1], vec![1, 0]]);
    }
}
