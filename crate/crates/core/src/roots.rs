//! Finite ADE root systems, Weyl reflections, dominance, and the maps `psi`
//! and `psi*` relating an extended system to its finite part.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::diagrams::{AdeType, Diagram, ExtendedDiagram};
use crate::error::{Error, Result};
use crate::gaussian::{self, GaussianRational};

/// Integer coordinates of a root (or any lattice vector) in the simple-root basis.
pub type Root = Vec<i64>;

/// `v^T C w`.
pub fn pairing(cartan: &[Vec<i64>], v: &[i64], w: &[i64]) -> Result<i64> {
    let n = cartan.len();
    if v.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: v.len() });
    }
    if w.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: w.len() });
    }
    let mut total = 0;
    for (i, row) in cartan.iter().enumerate() {
        if v[i] == 0 {
            continue;
        }
        let cw: i64 = row.iter().zip(w).map(|(c, x)| c * x).sum();
        total += v[i] * cw;
    }
    Ok(total)
}

/// A complex parameter vector (`tau` of length `n`, or `lambda` of length `n + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Parameter(pub Vec<GaussianRational>);

impl Parameter {
    pub fn zero(len: usize) -> Self {
        Parameter(vec![GaussianRational::zero(); len])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Parameter(values.iter().map(|&v| GaussianRational::from_int(v)).collect())
    }

    pub fn parse_csv(s: &str) -> Result<Self> {
        gaussian::parse_csv(s).map(Parameter)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.0
    }

    /// `theta . self` for an integer vector `theta`.
    pub fn dot(&self, theta: &[i64]) -> GaussianRational {
        gaussian::dot(theta, &self.0)
    }

    /// All coordinates nonnegative in the lexicographic order.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(GaussianRational::is_nonnegative)
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(","))
    }
}

/// A finite root system of simply-laced type, in simple-root coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    adtype: AdeType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    positives: Vec<Root>,
    maximal: Root,
    members: HashSet<Root>,
}

impl RootSystem {
    pub fn generate(t: AdeType) -> RootSystem {
        Self::from_diagram(&Diagram::build(t))
    }

    /// Closure of the simple roots under the simple reflections of `d`.
    pub fn from_diagram(d: &Diagram) -> RootSystem {
        let cartan = d.cartan_matrix();
        let n = cartan.len();
        let mut members: HashSet<Root> = HashSet::new();
        let mut frontier: Vec<Root> = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if members.insert(e.clone()) {
                frontier.push(e);
            }
        }
        while let Some(v) = frontier.pop() {
            for i in 0..n {
                let w = reflect(&cartan, i, &v);
                if members.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        let roots: Vec<Root> = members.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let positives: Vec<Root> = roots.iter().filter(|r| r.iter().all(|&x| x >= 0)).cloned().collect();
        let maximal = positives
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .expect("nonempty root system");
        assert!(
            positives.iter().all(|p| p.iter().zip(&maximal).all(|(a, b)| a <= b)),
            "highest root does not dominate every positive root"
        );
        RootSystem { adtype: d.adtype(), cartan, roots, positives, maximal, members }
    }

    pub fn adtype(&self) -> AdeType {
        self.adtype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots, sorted lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Positive roots, sorted lexicographically.
    pub fn positives(&self) -> &[Root] {
        &self.positives
    }

    /// The unique highest root `d`.
    pub fn maximal(&self) -> &[i64] {
        &self.maximal
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.members.contains(v)
    }

    pub fn is_positive(v: &[i64]) -> bool {
        v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
    }

    pub fn bilinear(&self, v: &[i64], w: &[i64]) -> Result<i64> {
        pairing(&self.cartan, v, w)
    }

    /// `p(v) = 1 - (v, v) / 2`.
    pub fn p_defect(&self, v: &[i64]) -> Result<i64> {
        p_defect(&self.cartan, v)
    }

    /// `s_i(v) = v - (v, e_i) e_i`.
    pub fn simple_reflection(&self, i: usize, v: &[i64]) -> Root {
        reflect(&self.cartan, i, v)
    }

    /// The dual action of `s_i` on parameters: `tau - tau_i * (C e_i)`.
    ///
    /// Satisfies `s_i(alpha) . tau = alpha . dual_reflection(i, tau)`.
    pub fn dual_reflection(&self, i: usize, tau: &Parameter) -> Parameter {
        assert_eq!(tau.len(), self.rank(), "parameter length");
        let ti = tau.0[i].clone();
        if ti.is_zero() {
            return tau.clone();
        }
        let out = tau
            .0
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let c = self.cartan[j][i];
                if c == 0 {
                    t.clone()
                } else {
                    t - &ti.scale(c)
                }
            })
            .collect();
        Parameter(out)
    }

    /// Applies `dual_reflection` for each index of `word`, left to right.
    pub fn apply_word(&self, word: &[usize], tau: &Parameter) -> Parameter {
        word.iter().fold(tau.clone(), |t, &i| self.dual_reflection(i, &t))
    }

    /// Reflects `tau` into the dominant chamber, always choosing the lowest
    /// index with a negative coordinate. Returns the dominant parameter and the
    /// reflection word that produced it.
    pub fn make_dominant(&self, tau: &Parameter) -> (Parameter, Vec<usize>) {
        let mut current = tau.clone();
        let mut word = Vec::new();
        while let Some(i) = current.0.iter().position(GaussianRational::is_negative) {
            current = self.dual_reflection(i, &current);
            word.push(i);
        }
        (current, word)
    }

    /// Sum of the positive roots, i.e. twice the Weyl vector.
    pub fn doubled_weyl_vector(&self) -> Root {
        let mut out = vec![0; self.rank()];
        for p in &self.positives {
            for (o, x) in out.iter_mut().zip(p) {
                *o += x;
            }
        }
        out
    }
}

pub(crate) fn p_defect(cartan: &[Vec<i64>], v: &[i64]) -> Result<i64> {
    let norm = pairing(cartan, v, v)?;
    assert!(norm % 2 == 0, "odd norm from an even form");
    Ok(1 - norm / 2)
}

fn reflect(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Root {
    let coeff: i64 = v.iter().zip(cartan.iter()).map(|(x, row)| x * row[i]).sum();
    let mut w = v.to_vec();
    w[i] -= coeff;
    w
}

/// `psi(e_0) = -d`, `psi(e_i) = e_i`.
pub fn psi(ed: &ExtendedDiagram, theta: &[i64]) -> Result<Root> {
    let n = ed.rank();
    if theta.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, got: theta.len() });
    }
    let d = ed.roots().maximal();
    Ok((0..n).map(|i| theta[i + 1] - theta[0] * d[i]).collect())
}

/// `psi*(tau) = (-d . tau, tau)`, the adjoint of `psi`.
pub fn psi_star(ed: &ExtendedDiagram, tau: &Parameter) -> Result<Parameter> {
    let n = ed.rank();
    if tau.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: tau.len() });
    }
    let mut out = vec![-tau.dot(ed.roots().maximal())];
    out.extend(tau.0.iter().cloned());
    Ok(Parameter(out))
}

/// Inverse of `psi` on `Sigma`: `(0, a)` for positive `a`, `(1, d + a)` for negative `a`.
pub fn psi_inverse(ed: &ExtendedDiagram, alpha: &[i64]) -> Option<Root> {
    let rs = ed.roots();
    if !rs.contains(alpha) {
        return None;
    }
    let mut out = Vec::with_capacity(alpha.len() + 1);
    if RootSystem::is_positive(alpha) {
        out.push(0);
        out.extend_from_slice(alpha);
    } else {
        out.push(1);
        out.extend(alpha.iter().zip(rs.maximal()).map(|(a, d)| a + d));
    }
    Some(out)
}

/// `Sigma = { beta real root : 0 < beta < delta }`, built as the image of the
/// finite system under `psi^{-1}`. Sorted lexicographically.
pub fn sigma_set(ed: &ExtendedDiagram) -> Vec<Root> {
    let mut out: Vec<Root> = ed
        .roots()
        .roots()
        .iter()
        .map(|a| psi_inverse(ed, a).expect("root"))
        .collect();
    out.sort();
    out
}
