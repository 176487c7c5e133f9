//! Explicit representations of doubled quivers over `Q(i)`: moment maps, the
//! symplectic form, and the three-term complex `Hom -> Rep -> Hom` whose
//! cohomology computes homomorphisms and extensions between modules.

use serde_json::json;

use crate::diagrams::{AdeType, ExtendedDiagram, Family, Quiver};
use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;

type G = GaussianRational;

/// A dense matrix over `Q(i)`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<G>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![G::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::scalar(n, &G::one())
    }

    pub fn scalar(n: usize, c: &G) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| G::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &G {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: G) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[G] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(G::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&G, &G) -> G) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!("{:?} vs {:?}", self.shape(), other.shape())));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &G) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&G::from_int(-1))
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> G {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for r in (rank + 1)..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col) * &inv;
                for c in col..m.cols {
                    let delta = &f * m.get(rank, c);
                    m.data[r * m.cols + c] -= &delta;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero())?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = m.get(col, col).inv().expect("nonzero pivot");
            for c in 0..n {
                m.set(col, c, m.get(col, c) * &p);
                inv.set(col, c, inv.get(col, c) * &p);
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in 0..n {
                    let dm = &f * m.get(col, c);
                    let di = &f * inv.get(col, c);
                    m.data[r * n + c] -= &dm;
                    inv.data[r * n + c] -= &di;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `Some(c)` if the matrix is `c * I` (an empty block gives `None`).
    pub fn central_value(&self) -> Option<G> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        (*self == Matrix::scalar(self.rows, &c)).then_some(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        json!(rows)
    }

    /// Parses a list of rows of Gaussian-rational strings. `cols` fixes the
    /// width when there are no rows.
    pub fn from_json(value: &serde_json::Value, cols: usize) -> Result<Matrix> {
        let rows = value.as_array().ok_or_else(|| Error::Parse("matrix must be an array".into()))?;
        if rows.is_empty() {
            return Ok(Matrix::zeros(0, cols));
        }
        let parsed: Vec<Vec<G>> = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(|e| match e {
                        serde_json::Value::String(s) => s.parse(),
                        serde_json::Value::Number(n) => n.to_string().parse(),
                        _ => Err(Error::Parse(format!("bad matrix entry {e}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Matrix::from_rows(parsed)
    }
}

/// One square matrix per vertex: an element of `⊕ End(C^{v_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVector(pub Vec<Matrix>);

impl BlockVector {
    pub fn zero(dims: &[usize]) -> BlockVector {
        BlockVector(dims.iter().map(|&d| Matrix::zeros(d, d)).collect())
    }

    pub fn scalars(dims: &[usize], values: &[G]) -> BlockVector {
        BlockVector(dims.iter().zip(values).map(|(&d, c)| Matrix::scalar(d, c)).collect())
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Matrix::is_zero)
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.0.iter().all(|b| b.conj_transpose() == b.neg())
    }

    pub fn neg(&self) -> BlockVector {
        BlockVector(self.0.iter().map(Matrix::neg).collect())
    }

    /// Per-block scalar if every nonempty block is central; `None` marks an empty block.
    pub fn central_values(&self) -> Option<Vec<Option<G>>> {
        self.0
            .iter()
            .map(|b| if b.rows() == 0 { Some(None) } else { b.central_value().map(Some) })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self.0.iter().map(Matrix::to_json).collect::<Vec<_>>())
    }
}

/// A point of `Rep(doubled Q, v)`: one matrix of shape `v_t(h) x v_s(h)` per
/// doubled arrow, indexed as in [`Quiver::doubled`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPoint {
    quiver: Quiver,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl RepPoint {
    pub fn new(quiver: Quiver, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<RepPoint> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::LengthMismatch { expected: quiver.vertex_count(), got: dims.len() });
        }
        let arrows = quiver.doubled();
        if mats.len() != arrows.len() {
            return Err(Error::Shape(format!("{} matrices for {} arrows", mats.len(), arrows.len())));
        }
        for (h, (a, m)) in arrows.iter().zip(&mats).enumerate() {
            let want = (dims[a.target], dims[a.source]);
            if m.shape() != want {
                return Err(Error::Shape(format!(
                    "{} has shape {:?}, expected {:?}",
                    quiver.arrow_name(h),
                    m.shape(),
                    want
                )));
            }
        }
        Ok(RepPoint { quiver, dims, mats })
    }

    pub fn zero(quiver: Quiver, dims: Vec<usize>) -> Result<RepPoint> {
        let mats = quiver.doubled().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        RepPoint::new(quiver, dims, mats)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, h: usize) -> &Matrix {
        &self.mats[h]
    }

    /// Replaces the matrix on arrow `h`, checking its shape.
    pub fn with(mut self, h: usize, m: Matrix) -> Result<RepPoint> {
        let a = self.quiver.doubled()[h];
        if m.shape() != (self.dims[a.target], self.dims[a.source]) {
            return Err(Error::Shape(format!("bad shape for {}", self.quiver.arrow_name(h))));
        }
        self.mats[h] = m;
        Ok(self)
    }

    pub fn add(&self, other: &RepPoint) -> Result<RepPoint> {
        self.same_space(other)?;
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        RepPoint::new(self.quiver.clone(), self.dims.clone(), mats)
    }

    pub fn scale(&self, c: &G) -> RepPoint {
        RepPoint { quiver: self.quiver.clone(), dims: self.dims.clone(), mats: self.mats.iter().map(|m| m.scale(c)).collect() }
    }

    fn same_space(&self, other: &RepPoint) -> Result<()> {
        if self.quiver != other.quiver || self.dims != other.dims {
            return Err(Error::Shape("points live in different representation spaces".into()));
        }
        Ok(())
    }

    /// `(g.x)_h = g_t(h) x_h g_s(h)^{-1}` for invertible blocks `g`.
    pub fn act(&self, g: &BlockVector) -> Result<RepPoint> {
        let inverses: Vec<Matrix> = g
            .0
            .iter()
            .map(|b| b.inverse().ok_or_else(|| Error::Shape("group element is not invertible".into())))
            .collect::<Result<_>>()?;
        let mats = self
            .quiver
            .doubled()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| g.0[a.target].mul(m)?.mul(&inverses[a.source]))
            .collect::<Result<_>>()?;
        RepPoint::new(self.quiver.clone(), self.dims.clone(), mats)
    }

    /// The same point viewed on the opposite quiver, where every arrow and
    /// its reverse trade places (and hence signs).
    pub fn reversed(&self) -> RepPoint {
        let edges = self.quiver.edges().iter().map(|&(s, t)| (t, s)).collect();
        let m = self.quiver.edges().len();
        let mats = (0..2 * m).map(|h| self.mats[(h + m) % (2 * m)].clone()).collect();
        RepPoint { quiver: Quiver::new(self.quiver.vertex_count(), edges), dims: self.dims.clone(), mats }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mats: serde_json::Map<String, serde_json::Value> = self
            .mats
            .iter()
            .enumerate()
            .map(|(h, m)| (self.quiver.arrow_name(h), m.to_json()))
            .collect();
        json!({ "dims": self.dims, "mats": mats })
    }

    /// Reads `{"dims": [...], "mats": {"h1": [[...]], "h1bar": ...}}`. Missing
    /// arrows are zero.
    pub fn from_json(quiver: Quiver, value: &serde_json::Value) -> Result<RepPoint> {
        let dims: Vec<usize> = serde_json::from_value(value["dims"].clone())
            .map_err(|e| Error::Parse(format!("dims: {e}")))?;
        let mut point = RepPoint::zero(quiver, dims)?;
        let Some(mats) = value.get("mats").and_then(|m| m.as_object()) else {
            return Ok(point);
        };
        let arrows = point.quiver.doubled();
        for (name, m) in mats {
            let h = (0..arrows.len())
                .find(|&h| point.quiver.arrow_name(h) == *name)
                .ok_or_else(|| Error::Parse(format!("unknown arrow {name:?}")))?;
            let cols = point.dims[arrows[h].source];
            point = point.with(h, Matrix::from_json(m, cols)?)?;
        }
        Ok(point)
    }
}

/// Block `i` is `sum over doubled arrows h into i of eps(h) x_h x_hbar`.
pub fn mu_complex(x: &RepPoint) -> BlockVector {
    let mut blocks = BlockVector::zero(&x.dims).0;
    for (h, a) in x.quiver.doubled().iter().enumerate() {
        let term = x.mats[h].mul(&x.mats[a.partner]).expect("shapes are valid");
        let b = &mut blocks[a.target];
        *b = if a.sign > 0 { b.add(&term) } else { b.sub(&term) }.expect("square block");
    }
    BlockVector(blocks)
}

/// Block `i` is `(i/2) sum over doubled arrows h into i of (x_h x_h^* - x_hbar^* x_hbar)`.
pub fn mu_real(x: &RepPoint) -> BlockVector {
    let half_i = G::from_ratios(0, 1, 1, 2);
    let mut blocks = BlockVector::zero(&x.dims).0;
    for (h, a) in x.quiver.doubled().iter().enumerate() {
        let xh = &x.mats[h];
        let xbar = &x.mats[a.partner];
        let term = xh
            .mul(&xh.conj_transpose())
            .and_then(|p| p.sub(&xbar.conj_transpose().mul(xbar)?))
            .expect("shapes are valid");
        blocks[a.target] = blocks[a.target].add(&term.scale(&half_i)).expect("square block");
    }
    BlockVector(blocks)
}

/// `omega(x, y) = sum over doubled arrows of eps(h) tr(x_h y_hbar)`.
pub fn symplectic_pairing(x: &RepPoint, y: &RepPoint) -> Result<G> {
    x.same_space(y)?;
    let mut total = G::zero();
    for (h, a) in x.quiver.doubled().iter().enumerate() {
        let tr = x.mats[h].mul(&y.mats[a.partner])?.trace();
        total = if a.sign > 0 { total + tr } else { total - tr };
    }
    Ok(total)
}

/// Offsets of the blocks `(rows_k x cols_k)` inside a flattened coordinate vector.
struct Layout {
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Layout {
    fn new(shapes: Vec<(usize, usize)>) -> Layout {
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut dim = 0;
        for &(r, c) in &shapes {
            offsets.push(dim);
            dim += r * c;
        }
        Layout { shapes, offsets, dim }
    }

    fn unpack(&self, coords: &[G]) -> Vec<Matrix> {
        self.shapes
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &o)| Matrix { rows: r, cols: c, data: coords[o..o + r * c].to_vec() })
            .collect()
    }

    fn pack(&self, blocks: &[Matrix]) -> Vec<G> {
        blocks.iter().flat_map(|b| b.data.iter().cloned()).collect()
    }
}

/// Matrix of a linear map, built column by column from images of basis vectors.
fn matrix_of(source: &Layout, target: &Layout, f: impl Fn(&[Matrix]) -> Vec<Matrix>) -> Matrix {
    let mut out = Matrix::zeros(target.dim, source.dim);
    let mut basis = vec![G::zero(); source.dim];
    for j in 0..source.dim {
        basis[j] = G::one();
        let image = target.pack(&f(&source.unpack(&basis)));
        for (i, v) in image.into_iter().enumerate() {
            out.set(i, j, v);
        }
        basis[j] = G::zero();
    }
    out
}

fn check_pair(x: &RepPoint, y: &RepPoint) -> Result<()> {
    if x.quiver != y.quiver {
        return Err(Error::Shape("points are on different quivers".into()));
    }
    Ok(())
}

fn hom_layout(v: &[usize], w: &[usize]) -> Layout {
    Layout::new(v.iter().zip(w).map(|(&a, &b)| (b, a)).collect())
}

fn rep_layout(q: &Quiver, v: &[usize], w: &[usize]) -> Layout {
    Layout::new(q.doubled().iter().map(|a| (w[a.target], v[a.source])).collect())
}

/// `sigma(u) = (u_t(h) x_h - y_h u_s(h))_h`, from `⊕ Hom(C^{v_i}, C^{w_i})` to
/// `⊕_h Hom(C^{v_s(h)}, C^{w_t(h)})`.
pub fn sigma_map(x: &RepPoint, y: &RepPoint) -> Result<Matrix> {
    check_pair(x, y)?;
    let arrows = x.quiver.doubled();
    let hom = hom_layout(&x.dims, &y.dims);
    let rep = rep_layout(&x.quiver, &x.dims, &y.dims);
    Ok(matrix_of(&hom, &rep, |u| {
        arrows
            .iter()
            .enumerate()
            .map(|(h, a)| {
                let left = u[a.target].mul(&x.mats[h]).expect("shape");
                let right = y.mats[h].mul(&u[a.source]).expect("shape");
                left.sub(&right).expect("shape")
            })
            .collect()
    }))
}

/// `nu(u)_i = sum over arrows h into i of eps(h) (u_h x_hbar + y_h u_hbar)`.
pub fn nu_map(x: &RepPoint, y: &RepPoint) -> Result<Matrix> {
    check_pair(x, y)?;
    let arrows = x.quiver.doubled();
    let hom = hom_layout(&x.dims, &y.dims);
    let rep = rep_layout(&x.quiver, &x.dims, &y.dims);
    Ok(matrix_of(&rep, &hom, |u| {
        let mut blocks: Vec<Matrix> = x.dims.iter().zip(&y.dims).map(|(&v, &w)| Matrix::zeros(w, v)).collect();
        for (h, a) in arrows.iter().enumerate() {
            let term = u[h]
                .mul(&x.mats[a.partner])
                .and_then(|p| p.add(&y.mats[h].mul(&u[a.partner])?))
                .expect("shape");
            let b = &mut blocks[a.target];
            *b = if a.sign > 0 { b.add(&term) } else { b.sub(&term) }.expect("shape");
        }
        blocks
    }))
}

/// Dimensions of the cohomology of `Hom(v,w) -> Rep(v,w) -> Hom(v,w)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

impl Cohomology {
    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

/// Checks that `mu_C(x)` and `mu_C(y)` are central with equal scalars wherever
/// both blocks are nonempty, so that `nu . sigma = 0`.
pub fn check_complex(x: &RepPoint, y: &RepPoint) -> Result<()> {
    check_pair(x, y)?;
    let (mx, my) = (mu_complex(x), mu_complex(y));
    let cx = mx.central_values().ok_or_else(|| Error::NotAComplex("mu_C(x) is not central".into()))?;
    let cy = my.central_values().ok_or_else(|| Error::NotAComplex("mu_C(y) is not central".into()))?;
    for (i, (a, b)) in cx.iter().zip(&cy).enumerate() {
        if let (Some(a), Some(b)) = (a, b) {
            if a != b {
                return Err(Error::NotAComplex(format!("vertex {i}: {a} vs {b}")));
            }
        }
    }
    Ok(())
}

pub fn cohomology_dims(x: &RepPoint, y: &RepPoint) -> Result<Cohomology> {
    check_complex(x, y)?;
    let sigma = sigma_map(x, y)?;
    let nu = nu_map(x, y)?;
    let hom = sigma.cols();
    let rep = sigma.rows();
    let (rs, rn) = (sigma.rank(), nu.rank());
    Ok(Cohomology { h0: hom - rs, h1: rep - rs - rn, h2: hom - rn })
}

/// The simple module at vertex `i`: dimension `e_i`, all maps zero.
pub fn vertex_simple(q: &Quiver, i: usize) -> Result<RepPoint> {
    if i >= q.vertex_count() {
        return Err(Error::Shape(format!("vertex {i} out of range")));
    }
    let dims = (0..q.vertex_count()).map(|k| usize::from(k == i)).collect();
    RepPoint::zero(q.clone(), dims)
}

/// The Kronecker quiver (two arrows `0 -> 1`) underlying the extended `A1` diagram.
pub fn tilde_a1_quiver() -> Quiver {
    let a1 = AdeType::new(Family::A, 1).expect("A1");
    ExtendedDiagram::of_type(a1).orient(&Default::default())
}

/// Point of dimension `(1,1)` with `a1 = 1`, `a2 = 0`, `b1 = lambda1`, `b2 = 0`;
/// its complex moment map is `(-lambda1, lambda1)`.
pub fn tilde_a1_simple(lambda1: &G) -> RepPoint {
    let one = |c: &G| Matrix::scalar(1, c);
    let mats = vec![one(&G::one()), one(&G::zero()), one(lambda1), one(&G::zero())];
    RepPoint::new(tilde_a1_quiver(), vec![1, 1], mats).expect("1x1 blocks")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    #[test]
    fn rank_and_inverse() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_none());
        let m = Matrix::from_rows(vec![vec![g("i"), g("1")], vec![g("1"), g("i")]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Matrix::identity(2));
        // i*i - 1 = -2; rows (1, i) and (i, -1) are dependent over Q(i)
        let dep = Matrix::from_rows(vec![vec![g("1"), g("i")], vec![g("i"), g("-1")]]).unwrap();
        assert_eq!(dep.rank(), 1);
        assert_eq!(Matrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn mu_complex_tilde_a1() {
        let x = tilde_a1_simple(&g("1"));
        assert_eq!(mu_complex(&x), BlockVector::scalars(&[1, 1], &[g("-1"), g("1")]));
        let z = tilde_a1_simple(&g("0"));
        assert!(mu_complex(&z).is_zero());
        let zero = RepPoint::zero(tilde_a1_quiver(), vec![2, 3]).unwrap();
        assert!(mu_complex(&zero).is_zero());
    }

    #[test]
    fn mu_real_examples() {
        let x = tilde_a1_simple(&g("1"));
        assert!(mu_real(&x).is_zero());
        let y = tilde_a1_simple(&g("1/2+1/3i"));
        let m = mu_real(&y);
        assert!(m.is_anti_hermitian());
        assert!(!m.is_zero());
    }

    #[test]
    fn symplectic_examples() {
        let q = tilde_a1_quiver();
        let unit = Matrix::scalar(1, &G::one());
        let x = RepPoint::zero(q.clone(), vec![1, 1]).unwrap().with(0, unit.clone()).unwrap();
        let y = RepPoint::zero(q, vec![1, 1]).unwrap().with(2, unit).unwrap();
        assert_eq!(symplectic_pairing(&x, &y).unwrap(), g("1"));
        assert_eq!(symplectic_pairing(&y, &x).unwrap(), g("-1"));
        assert_eq!(symplectic_pairing(&x, &x).unwrap(), G::zero());
    }

    #[test]
    fn cohomology_fixtures() {
        let x = tilde_a1_simple(&g("1"));
        let c = cohomology_dims(&x, &x).unwrap();
        assert_eq!((c.h0, c.h1, c.h2), (1, 2, 1));
        let sigma = sigma_map(&x, &x).unwrap();
        assert!(nu_map(&x, &x).unwrap().mul(&sigma).unwrap().is_zero());

        let q = tilde_a1_quiver();
        let s0 = vertex_simple(&q, 0).unwrap();
        let s1 = vertex_simple(&q, 1).unwrap();
        assert_eq!(cohomology_dims(&s0, &s0).unwrap(), Cohomology { h0: 1, h1: 0, h2: 1 });
        // adjacent by two arrows: (e0, e1) = -2
        assert_eq!(cohomology_dims(&s0, &s1).unwrap(), Cohomology { h0: 0, h1: 2, h2: 0 });
    }

    #[test]
    fn nonadjacent_vertex_simples() {
        let q = Quiver::new(3, vec![(0, 1), (1, 2)]);
        let s0 = vertex_simple(&q, 0).unwrap();
        let s2 = vertex_simple(&q, 2).unwrap();
        assert_eq!(cohomology_dims(&s0, &s2).unwrap(), Cohomology { h0: 0, h1: 0, h2: 0 });
        assert!(vertex_simple(&q, 3).is_err());
    }

    #[test]
    fn mismatched_moment_maps_are_rejected() {
        let x = tilde_a1_simple(&g("1"));
        let y = tilde_a1_simple(&g("2"));
        assert!(matches!(cohomology_dims(&x, &y), Err(Error::NotAComplex(_))));
        assert!(!nu_map(&x, &y).unwrap().mul(&sigma_map(&x, &y).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let x = tilde_a1_simple(&g("1/2+1/3i"));
        let v = x.to_json();
        assert_eq!(v["mats"]["h1"], json!([["1"]]));
        assert_eq!(v["mats"]["h1bar"], json!([["1/2+1/3i"]]));
        assert_eq!(RepPoint::from_json(tilde_a1_quiver(), &v).unwrap(), x);
        let bad = json!({"dims": [1, 1], "mats": {"h1": [["1", "2"]]}});
        assert!(RepPoint::from_json(tilde_a1_quiver(), &bad).is_err());
    }

    #[test]
    fn reversal_negates_mu_complex() {
        let x = tilde_a1_simple(&g("3/2"));
        assert_eq!(mu_complex(&x.reversed()), mu_complex(&x).neg());
    }
}
