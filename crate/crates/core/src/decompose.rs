//! Orthogonal slices `Phi ∩ tau^⊥`, their positive bases and irreducible components.

use std::collections::{HashSet, VecDeque};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde_json::json;

use crate::diagrams::{identify_graph, AdeType};
use crate::error::{Error, Result};
use crate::roots::{Parameter, Root, RootSystem};

/// Roots orthogonal to both the real and the imaginary part of `tau`.
#[derive(Clone, Debug)]
pub struct OrthogonalSlice {
    pub tau: Parameter,
    pub roots: Vec<Root>,
    pub positives: Vec<Root>,
}

impl OrthogonalSlice {
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

pub fn orthogonal_roots(rs: &RootSystem, tau: &Parameter) -> Result<OrthogonalSlice> {
    if tau.len() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), got: tau.len() });
    }
    let roots: Vec<Root> = rs.roots().iter().filter(|a| tau.dot(a).is_zero()).cloned().collect();
    let positives = roots.iter().filter(|a| RootSystem::is_positive(a)).cloned().collect();
    Ok(OrthogonalSlice { tau: tau.clone(), roots, positives })
}

/// Positive slice roots that are not a sum of two positive slice roots.
pub fn minimal_base(slice: &OrthogonalSlice) -> Vec<Root> {
    let positives: HashSet<&Root> = slice.positives.iter().collect();
    slice
        .positives
        .iter()
        .filter(|alpha| {
            !slice.positives.iter().any(|beta| {
                let diff: Root = alpha.iter().zip(beta.iter()).map(|(a, b)| a - b).collect();
                positives.contains(&diff)
            })
        })
        .cloned()
        .collect()
}

/// One irreducible component of a slice, with its base in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentBase {
    pub adtype: AdeType,
    /// Simple roots `alpha_1..alpha_k` in ambient coordinates, ordered by the
    /// canonical labeling of `adtype`.
    pub base: Vec<Root>,
    /// Highest root `beta` of the component.
    pub maximal: Root,
    /// `beta = sum n_t alpha_t`.
    pub multiplicities: Vec<i64>,
}

impl ComponentBase {
    /// All roots of the component subsystem (closure of the base under its own reflections).
    pub fn root_set(&self, rs: &RootSystem) -> Vec<Root> {
        closure(rs, &self.base)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.adtype.to_string(),
            "base": self.base,
            "beta": self.maximal,
            "mult": self.multiplicities,
        })
    }
}

fn closure(rs: &RootSystem, base: &[Root]) -> Vec<Root> {
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for b in base {
        if seen.insert(b.clone()) {
            queue.push_back(b.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for a in base {
            let c = rs.bilinear(&v, a).expect("lengths agree");
            let w: Root = v.iter().zip(a).map(|(x, y)| x - c * y).collect();
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<Root> = seen.into_iter().collect();
    out.sort();
    out
}

/// Type of the graph on `base` with an edge wherever the pairing is `-1`,
/// together with the canonical ordering of `base`.
pub fn identify_type(rs: &RootSystem, base: &[Root]) -> Result<(AdeType, Vec<usize>)> {
    let mut edges = Vec::new();
    for s in 0..base.len() {
        for t in (s + 1)..base.len() {
            match rs.bilinear(&base[s], &base[t])? {
                0 => {}
                -1 => edges.push((s, t)),
                other => return Err(Error::NotAde(format!("base pairing {other}"))),
            }
        }
    }
    identify_graph(base.len(), &edges)
}

/// Connected components of the pairing graph on `base`, each typed and put in canonical order.
pub fn split_components(rs: &RootSystem, base: &[Root]) -> Result<Vec<ComponentBase>> {
    let k = base.len();
    let mut adjacency = vec![Vec::new(); k];
    for s in 0..k {
        for t in (s + 1)..k {
            match rs.bilinear(&base[s], &base[t])? {
                0 => {}
                -1 => {
                    adjacency[s].push(t);
                    adjacency[t].push(s);
                }
                other => return Err(Error::NotAde(format!("base pairing {other}"))),
            }
        }
    }
    let mut component_of = vec![usize::MAX; k];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![start];
        component_of[start] = id;
        let mut idx = 0;
        while idx < members.len() {
            for &w in &adjacency[members[idx]] {
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    members.push(w);
                }
            }
            idx += 1;
        }
        members.sort_unstable();
        groups.push(members);
    }
    let mut out = Vec::with_capacity(groups.len());
    for members in groups {
        let local: Vec<Root> = members.iter().map(|&m| base[m].clone()).collect();
        let (adtype, order) = identify_type(rs, &local)?;
        let ordered: Vec<Root> = order.iter().map(|&p| local[p].clone()).collect();
        let (maximal, multiplicities) = component_data(rs, &ordered)?;
        out.push(ComponentBase { adtype, base: ordered, maximal, multiplicities });
    }
    out.sort_by(|a, b| (a.adtype, &a.base).cmp(&(b.adtype, &b.base)));
    Ok(out)
}

/// Highest root of the subsystem spanned by `base` and its coefficients in `base`.
pub fn component_data(rs: &RootSystem, base: &[Root]) -> Result<(Root, Vec<i64>)> {
    let roots = closure(rs, base);
    let maximal = roots
        .iter()
        .filter(|r| RootSystem::is_positive(r))
        .max_by_key(|r| r.iter().sum::<i64>())
        .cloned()
        .ok_or_else(|| Error::NotAde("empty component".into()))?;
    let multiplicities = solve_in_base(base, &maximal)
        .ok_or_else(|| Error::NotAde("highest root outside the span of the base".into()))?;
    Ok((maximal, multiplicities))
}

/// Integer coefficients `n` with `target = sum n_t base_t`, by exact elimination.
fn solve_in_base(base: &[Root], target: &[i64]) -> Option<Vec<i64>> {
    let k = base.len();
    let rows = target.len();
    // augmented matrix: rows = ambient coordinates, columns = base vectors + target
    let mut m: Vec<Vec<Ratio<i64>>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Ratio<i64>> = base.iter().map(|b| Ratio::from_integer(b[r])).collect();
            row.push(Ratio::from_integer(target[r]));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let p = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, p);
        let inv = Ratio::one() / m[pivot_row][col];
        for x in m[pivot_row].iter_mut() {
            *x *= inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot = m[pivot_row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !m[r][k].is_zero()) {
        return None;
    }
    pivots
        .iter()
        .map(|&r| {
            let v = m[r][k];
            v.is_integer().then(|| v.to_integer())
        })
        .collect()
}

/// The full decomposition of `Phi ∩ tau^⊥` into irreducible components.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub slice: OrthogonalSlice,
    pub components: Vec<ComponentBase>,
}

impl Decomposition {
    /// Component types as a sorted multiset.
    pub fn types(&self) -> Vec<AdeType> {
        let mut t: Vec<AdeType> = self.components.iter().map(|c| c.adtype).collect();
        t.sort();
        t
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "components": self.components.iter().map(ComponentBase::to_json).collect::<Vec<_>>() })
    }
}

/// An empty slice yields an empty decomposition.
pub fn decompose(rs: &RootSystem, tau: &Parameter) -> Result<Decomposition> {
    let slice = orthogonal_roots(rs, tau)?;
    let base = minimal_base(&slice);
    let components = split_components(rs, &base)?;
    Ok(Decomposition { slice, components })
}
