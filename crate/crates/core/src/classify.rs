//! Singularities of the quiver varieties `M_(0,lambda)(Q, delta)` for an
//! extended Dynkin quiver `Q`.
//!
//! A singular point corresponds to a semisimple, non-simple module of
//! dimension `delta`; these are in bijection with the irreducible components
//! of `Phi ∩ tau^⊥` where `lambda = (lambda_0, tau)`.

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::decompose::{decompose, ComponentBase};
use crate::diagrams::{mckay_group, AdeType, Bond, ExtendedDiagram, GroupDescriptor, Quiver};
use crate::error::{Error, Result};
use crate::roots::{p_defect, psi_star, sigma_set, Parameter, Root, RootSystem};

/// Mixed-radix indexing of the integer box `[0, bound]`.
struct LatticeBox {
    bound: Vec<i64>,
    strides: Vec<usize>,
    size: usize,
}

impl LatticeBox {
    fn new(bound: &[i64]) -> Self {
        let mut strides = Vec::with_capacity(bound.len());
        let mut size = 1usize;
        for &b in bound {
            strides.push(size);
            size *= (b + 1) as usize;
        }
        LatticeBox { bound: bound.to_vec(), strides, size }
    }

    fn contains(&self, v: &[i64]) -> bool {
        v.iter().zip(&self.bound).all(|(x, b)| 0 <= *x && x <= b)
    }

    fn index(&self, v: &[i64]) -> usize {
        v.iter().zip(&self.strides).map(|(x, s)| *x as usize * s).sum()
    }

    /// `reach[c]` is true iff the cell `c` is a sum of one or more `parts`
    /// (with repetition). Parts must be nonzero and nonnegative.
    fn reachable(&self, parts: &[Root]) -> Vec<bool> {
        let parts: Vec<(&Root, usize)> =
            parts.iter().filter(|p| self.contains(p)).map(|p| (p, self.index(p))).collect();
        let mut reach = vec![false; self.size];
        let mut digits = vec![0i64; self.bound.len()];
        for c in 0..self.size {
            if c > 0 {
                // advance the odometer
                for (d, b) in digits.iter_mut().zip(&self.bound) {
                    if *d < *b {
                        *d += 1;
                        break;
                    }
                    *d = 0;
                }
            }
            reach[c] = parts.iter().any(|(p, pidx)| {
                p.iter().zip(&digits).all(|(a, b)| a <= b) && (c == *pidx || reach[c - pidx])
            });
        }
        reach
    }
}

fn check_len(v: &[impl Sized], expected: usize) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got: v.len() })
    }
}

/// `Sigma_lambda = { alpha in Sigma : alpha . lambda = 0 }`, sorted.
pub fn sigma_lambda(ed: &ExtendedDiagram, lambda: &Parameter) -> Result<Vec<Root>> {
    check_len(lambda.coords(), ed.rank() + 1)?;
    Ok(sigma_set(ed).into_iter().filter(|a| lambda.dot(a).is_zero()).collect())
}

/// Elements of `sigma_lambda` that are not a sum of two or more of its elements.
pub fn sigma_lambda_min(ed: &ExtendedDiagram, sigma_lambda: &[Root]) -> Vec<Root> {
    let bx = LatticeBox::new(ed.delta());
    let reach = bx.reachable(sigma_lambda);
    sigma_lambda
        .iter()
        .filter(|alpha| !decomposes(&bx, &reach, alpha, sigma_lambda))
        .cloned()
        .collect()
}

fn decomposes(bx: &LatticeBox, reach: &[bool], alpha: &[i64], parts: &[Root]) -> bool {
    parts.iter().any(|beta| {
        beta.as_slice() != alpha && beta.iter().zip(alpha).all(|(b, a)| b <= a) && {
            let rest: Vec<i64> = alpha.iter().zip(beta).map(|(a, b)| a - b).collect();
            reach[bx.index(&rest)]
        }
    })
}

/// Whether a simple module of dimension `alpha` exists for weight `lambda`,
/// for `0 < alpha <= delta`. Vectors outside that range, or not roots, give `false`.
pub fn simple_exists(ed: &ExtendedDiagram, alpha: &[i64], lambda: &Parameter) -> Result<bool> {
    let n1 = ed.rank() + 1;
    check_len(alpha, n1)?;
    check_len(lambda.coords(), n1)?;
    if alpha == ed.delta() {
        return Ok(lambda.dot(ed.delta()).is_zero());
    }
    let below_delta = alpha.iter().zip(ed.delta()).all(|(a, d)| 0 <= *a && a <= d)
        && alpha.iter().any(|&a| a > 0);
    if !below_delta || p_defect(&ed.cartan_matrix(), alpha)? != 0 || !lambda.dot(alpha).is_zero() {
        return Ok(false);
    }
    let parts: Vec<Root> = sigma_lambda(ed, lambda)?
        .into_iter()
        .filter(|b| b.as_slice() != alpha && b.iter().zip(alpha).all(|(x, a)| x <= a))
        .collect();
    let bx = LatticeBox::new(alpha);
    let mut memo = vec![0u8; bx.size];
    let mut rest = alpha.to_vec();
    Ok(!parts.iter().any(|beta| {
        sub_assign(&mut rest, beta, -1);
        let found = reachable_from(&bx, &parts, &mut rest, &mut memo);
        sub_assign(&mut rest, beta, 1);
        found
    }))
}

fn sub_assign(v: &mut [i64], w: &[i64], sign: i64) {
    for (x, y) in v.iter_mut().zip(w) {
        *x += sign * y;
    }
}

/// Depth-first search for a decomposition of `c` into `parts`; `memo` holds
/// 0 (unknown), 1 (no) or 2 (yes) per box cell.
fn reachable_from(bx: &LatticeBox, parts: &[Root], c: &mut Vec<i64>, memo: &mut [u8]) -> bool {
    let idx = bx.index(c);
    if memo[idx] != 0 {
        return memo[idx] == 2;
    }
    let mut found = false;
    for p in parts {
        if !p.iter().zip(c.iter()).all(|(a, b)| a <= b) {
            continue;
        }
        if p == c {
            found = true;
            break;
        }
        sub_assign(c, p, -1);
        found = reachable_from(bx, parts, c, memo);
        sub_assign(c, p, 1);
        if found {
            break;
        }
    }
    memo[idx] = if found { 2 } else { 1 };
    found
}

/// The extended Dynkin quiver governing the local structure at a singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceQuiver {
    pub adtype: AdeType,
    pub quiver: Quiver,
    /// `(1, n_1, ..., n_k)`.
    pub delta: Vec<i64>,
}

impl SliceQuiver {
    pub fn bonds(&self) -> Vec<Bond> {
        self.quiver.underlying_bonds()
    }

    /// `(delta', delta')` in the slice quiver's own symmetric form.
    pub fn delta_norm(&self) -> i64 {
        self.quiver.symmetric_form(&self.delta, &self.delta)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.adtype.to_string(),
            "vertices": self.quiver.vertex_count(),
            "edges": self.quiver.edges().iter().map(|&(s, t)| [s, t]).collect::<Vec<_>>(),
            "delta": self.delta,
        })
    }
}

/// Slice quiver on `{-beta, alpha_1, ..., alpha_k}`: `s` and `t` are joined by
/// `-(alpha_s, alpha_t)` edges, oriented from lower to higher index.
pub fn slice_quiver(rs: &RootSystem, component: &ComponentBase) -> SliceQuiver {
    let mut vertices: Vec<Root> = vec![component.maximal.iter().map(|x| -x).collect()];
    vertices.extend(component.base.iter().cloned());
    let mut edges = Vec::new();
    for s in 0..vertices.len() {
        for t in (s + 1)..vertices.len() {
            let pairing = rs.bilinear(&vertices[s], &vertices[t]).expect("lengths agree");
            debug_assert!(pairing <= 0, "positive pairing in a slice quiver");
            for _ in 0..(-pairing).max(0) {
                edges.push((s, t));
            }
        }
    }
    let mut delta = vec![1];
    delta.extend_from_slice(&component.multiplicities);
    SliceQuiver { adtype: component.adtype, quiver: Quiver::new(vertices.len(), edges), delta }
}

/// One singular point of `M_(0,lambda)(Q, delta)`.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub component: ComponentBase,
    pub adtype: AdeType,
    pub mckay: GroupDescriptor,
    /// Dimension of the distinguished simple summand, `(1, d - beta)`.
    pub gamma0: Root,
    /// Dimensions `(0, alpha_t)` of the remaining simple summands.
    pub gammas: Vec<Root>,
    pub multiplicities: Vec<i64>,
    /// Sizes of the unitary blocks of the stabilizer, `[1, n_1, ..., n_k]`.
    pub stabilizer: Vec<i64>,
    pub slice: SliceQuiver,
}

impl SingularPoint {
    /// `gamma0 + sum n_t gamma_t`, which equals `delta`.
    pub fn dimension(&self) -> Root {
        let mut total = self.gamma0.clone();
        for (g, n) in self.gammas.iter().zip(&self.multiplicities) {
            for (x, y) in total.iter_mut().zip(g) {
                *x += n * y;
            }
        }
        total
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.adtype.to_string(),
            "mckay": self.mckay,
            "base": self.component.base,
            "beta": self.component.maximal,
            "gamma0": self.gamma0,
            "gammas": self.gammas,
            "multiplicities": self.multiplicities,
            "stabilizer": self.stabilizer,
            "slice_delta": self.slice.delta,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub lambda: Parameter,
    pub regular_nonempty: bool,
    pub singular_points: Vec<SingularPoint>,
}

impl Classification {
    pub fn types(&self) -> Vec<AdeType> {
        let mut t: Vec<AdeType> = self.singular_points.iter().map(|p| p.adtype).collect();
        t.sort();
        t
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "lambda": self.lambda.to_strings(),
            "regular_nonempty": self.regular_nonempty,
            "singular": self.singular_points.iter().map(SingularPoint::to_json).collect::<Vec<_>>(),
        })
    }
}

/// A parameter supplied either as a full `lambda` (length `n + 1`) or as `tau`
/// (length `n`), in which case `lambda = psi*(tau)`.
#[derive(Clone, Debug)]
pub enum ParameterInput {
    Tau(Parameter),
    Lambda(Parameter),
}

impl ParameterInput {
    pub fn resolve(&self, ed: &ExtendedDiagram) -> Result<Parameter> {
        match self {
            ParameterInput::Tau(tau) => psi_star(ed, tau),
            ParameterInput::Lambda(lambda) => {
                check_len(lambda.coords(), ed.rank() + 1)?;
                Ok(lambda.clone())
            }
        }
    }
}

pub fn classify_singularities(ed: &ExtendedDiagram, lambda: &Parameter) -> Result<Classification> {
    check_len(lambda.coords(), ed.rank() + 1)?;
    let pairing = lambda.dot(ed.delta());
    if !pairing.is_zero() {
        return Err(Error::OutsideDelta(pairing.to_string()));
    }
    let tau = Parameter(lambda.coords()[1..].to_vec());
    // lambda_0 carries no information beyond lambda . delta = 0
    debug_assert_eq!(lambda.coords()[0], -tau.dot(ed.roots().maximal()));
    let rs = ed.roots();
    let d = rs.maximal();
    let decomposition = decompose(rs, &tau)?;
    let singular_points = decomposition
        .components
        .into_iter()
        .map(|component| {
            let mut gamma0 = vec![1];
            gamma0.extend(d.iter().zip(&component.maximal).map(|(a, b)| a - b));
            let gammas = component
                .base
                .iter()
                .map(|a| std::iter::once(0).chain(a.iter().copied()).collect())
                .collect();
            let mut stabilizer = vec![1];
            stabilizer.extend_from_slice(&component.multiplicities);
            SingularPoint {
                adtype: component.adtype,
                mckay: mckay_group(component.adtype),
                gamma0,
                gammas,
                multiplicities: component.multiplicities.clone(),
                stabilizer,
                slice: slice_quiver(rs, &component),
                component,
            }
        })
        .collect();
    Ok(Classification { lambda: lambda.clone(), regular_nonempty: true, singular_points })
}

/// Classifies using the extended diagram recovered from an oriented quiver.
pub fn classify_quiver(q: &Quiver, input: &ParameterInput) -> Result<Classification> {
    let ed = ExtendedDiagram::from_quiver(q)?;
    classify_singularities(&ed, &input.resolve(&ed)?)
}

/// `R_+(v) = { theta : 0 < theta < v, (theta, theta) <= 2 }`, sorted.
pub fn r_plus(ed: &ExtendedDiagram, v: &[i64]) -> Result<Vec<Root>> {
    check_len(v, ed.rank() + 1)?;
    let c = ed.cartan_matrix();
    let mut out = Vec::new();
    let mut theta = vec![0i64; v.len()];
    loop {
        let nonzero = theta.iter().any(|&x| x != 0);
        if nonzero && theta.as_slice() != v && crate::roots::pairing(&c, &theta, &theta)? <= 2 {
            out.push(theta.clone());
        }
        // odometer over the box [0, v]
        let mut k = 0;
        loop {
            if k == v.len() {
                out.sort();
                return Ok(out);
            }
            if theta[k] < v[k] {
                theta[k] += 1;
                break;
            }
            theta[k] = 0;
            k += 1;
        }
    }
}

/// Whether the real triple `xi` lies in `D_v` for every component and avoids
/// every wall `D_v ∩ D_theta` with `theta` in `R_+(v)`.
pub fn is_generic(ed: &ExtendedDiagram, xi: &[Vec<BigRational>; 3], v: &[i64]) -> Result<bool> {
    for x in xi {
        check_len(x, ed.rank() + 1)?;
    }
    let dot = |x: &[BigRational], w: &[i64]| -> BigRational {
        x.iter()
            .zip(w)
            .map(|(a, &b)| a * BigRational::from_integer(b.into()))
            .fold(BigRational::zero(), |s, t| s + t)
    };
    if xi.iter().any(|x| !dot(x, v).is_zero()) {
        return Ok(false);
    }
    let walls = r_plus(ed, v)?;
    Ok(walls.iter().all(|theta| xi.iter().any(|x| !dot(x, theta).is_zero())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::psi;

    fn t(s: &str) -> AdeType {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_lambda_examples() {
        let a1 = ExtendedDiagram::of_type(t("A1"));
        assert_eq!(sigma_lambda(&a1, &Parameter::zero(2)).unwrap().len(), 2);
        assert!(sigma_lambda(&a1, &Parameter::from_ints(&[-1, 1])).unwrap().is_empty());
        assert!(sigma_lambda(&a1, &Parameter::zero(3)).is_err());
    }

    #[test]
    fn sigma_min_a2_at_zero() {
        let ed = ExtendedDiagram::of_type(t("A2"));
        let all = sigma_lambda(&ed, &Parameter::zero(3)).unwrap();
        assert_eq!(all.len(), 6);
        let min = sigma_lambda_min(&ed, &all);
        assert_eq!(min, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(sigma_lambda_min(&ed, &[]).is_empty());
        assert_eq!(sigma_lambda_min(&ed, &[vec![1, 1, 0]]), vec![vec![1, 1, 0]]);
    }

    #[test]
    fn simple_exists_examples() {
        let ed = ExtendedDiagram::of_type(t("A2"));
        let zero = Parameter::zero(3);
        assert!(simple_exists(&ed, ed.delta(), &zero).unwrap());
        assert!(!simple_exists(&ed, ed.delta(), &Parameter::from_ints(&[1, 0, 0])).unwrap());
        assert!(simple_exists(&ed, &[0, 1, 0], &zero).unwrap());
        assert!(!simple_exists(&ed, &[0, 1, 1], &zero).unwrap());
        // not a root
        assert!(!simple_exists(&ed, &[0, 0, 0], &zero).unwrap());
        assert!(!simple_exists(&ed, &[2, 0, 0], &zero).unwrap());
        // (0,1,1) becomes simple once e1 and e2 are no longer orthogonal to lambda
        let lam = psi_star(&ed, &Parameter::from_ints(&[1, -1])).unwrap();
        assert!(simple_exists(&ed, &[0, 1, 1], &lam).unwrap());
    }

    #[test]
    fn zero_lambda_has_one_singularity_of_full_type() {
        for ty in AdeType::all_up_to_rank(8) {
            let ed = ExtendedDiagram::of_type(ty);
            let c = classify_singularities(&ed, &Parameter::zero(ty.rank() + 1)).unwrap();
            assert_eq!(c.singular_points.len(), 1);
            let sp = &c.singular_points[0];
            assert_eq!(sp.adtype, ty);
            assert_eq!(sp.multiplicities, ed.roots().maximal());
            assert_eq!(sp.slice.delta, ed.delta());
            assert_eq!(sp.slice.bonds(), ed.bonds());
            assert_eq!(sp.gamma0[0], 1);
            assert!(sp.gamma0[1..].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn a3_tau_middle() {
        let ed = ExtendedDiagram::of_type(t("A3"));
        let lam = psi_star(&ed, &Parameter::from_ints(&[0, 1, 0])).unwrap();
        assert_eq!(lam, Parameter::from_ints(&[-1, 0, 1, 0]));
        let c = classify_singularities(&ed, &lam).unwrap();
        assert_eq!(c.types(), vec![t("A1"), t("A1")]);
        for sp in &c.singular_points {
            let alpha = &sp.component.base[0];
            let expected_g0: Vec<i64> = std::iter::once(1).chain([1, 1, 1].iter().zip(alpha).map(|(d, a)| d - a)).collect();
            assert_eq!(sp.gamma0, expected_g0);
            assert_eq!(sp.stabilizer, vec![1, 1]);
            assert_eq!(sp.dimension(), ed.delta());
            assert_eq!(psi(&ed, &sp.gamma0).unwrap(), alpha.iter().map(|x| -x).collect::<Vec<_>>());
        }
    }

    #[test]
    fn generic_lambda_is_smooth() {
        let ed = ExtendedDiagram::of_type(t("A3"));
        let tau = Parameter::parse_csv("1,1/2,1/3").unwrap();
        let c = classify_singularities(&ed, &psi_star(&ed, &tau).unwrap()).unwrap();
        assert!(c.singular_points.is_empty());
        assert!(c.regular_nonempty);
    }

    #[test]
    fn outside_delta_is_an_error() {
        let ed = ExtendedDiagram::of_type(t("A1"));
        let err = classify_singularities(&ed, &Parameter::from_ints(&[1, 0])).unwrap_err();
        assert!(matches!(err, Error::OutsideDelta(_)));
    }

    #[test]
    fn slice_quivers() {
        let a3 = ExtendedDiagram::of_type(t("A3"));
        let lam = psi_star(&a3, &Parameter::from_ints(&[0, 1, 0])).unwrap();
        let sp = &classify_singularities(&a3, &lam).unwrap().singular_points[0];
        assert_eq!(sp.slice.bonds(), vec![Bond::new(0, 1, 2)]);
        assert_eq!(sp.slice.delta, vec![1, 1]);
        assert_eq!(sp.slice.delta_norm(), 0);

        let a2 = ExtendedDiagram::of_type(t("A2"));
        let sp = &classify_singularities(&a2, &Parameter::zero(3)).unwrap().singular_points[0];
        assert_eq!(sp.slice.bonds().len(), 3);
        assert_eq!(sp.slice.delta, vec![1, 1, 1]);
    }

    #[test]
    fn r_plus_examples() {
        let a1 = ExtendedDiagram::of_type(t("A1"));
        assert_eq!(r_plus(&a1, a1.delta()).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert!(r_plus(&a1, &[1, 0]).unwrap().is_empty());
        let d4 = ExtendedDiagram::of_type(t("D4"));
        assert_eq!(r_plus(&d4, d4.delta()).unwrap(), sigma_set(&d4));
    }

    #[test]
    fn genericity() {
        let a1 = ExtendedDiagram::of_type(t("A1"));
        let q = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
        let zero = [q(&[0, 0]), q(&[0, 0]), q(&[0, 0])];
        assert!(!is_generic(&a1, &zero, a1.delta()).unwrap());
        let good = [q(&[0, 0]), q(&[1, -1]), q(&[0, 0])];
        assert!(is_generic(&a1, &good, a1.delta()).unwrap());
        let off = [q(&[1, 0]), q(&[1, -1]), q(&[0, 0])];
        assert!(!is_generic(&a1, &off, a1.delta()).unwrap());
    }
}
