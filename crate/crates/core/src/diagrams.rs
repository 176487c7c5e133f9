//! Dynkin and extended Dynkin diagrams, Cartan matrices, the McKay table and
//! quivers (oriented diagrams together with their doubles).
//!
//! Vertex labeling conventions for the finite diagrams (labels `1..=n`,
//! stored as 0-based indices `label - 1`):
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `D_n`: the path `1 - ... - (n-2)` with leaves `n-1` and `n` attached to `n-2`.
//! * `E_n`: the path `1 - ... - (n-1)` with the leaf `n` attached to `3`.
//!
//! Extended diagrams use indices `0..=n`, where `0` is the adjoined vertex and
//! index `k >= 1` is finite label `k`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::RootSystem;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            _ => Err(Error::InvalidType(format!("unknown family {s:?}"))),
        }
    }
}

/// A simply-laced finite type `A_n (n >= 1)`, `D_n (n >= 4)` or `E_6, E_7, E_8`.
///
/// Ordered by family, then rank.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeType {
    family: Family,
    rank: usize,
}

impl AdeType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type with rank at most `max_rank`, in canonical order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<AdeType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::D, Family::E] {
            for rank in 1..=max_rank {
                if let Ok(t) = AdeType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Number of roots in the finite root system of this type.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for AdeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidType("empty type label".into()))?;
        let family: Family = letter.to_string().parse()?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::InvalidType(format!("bad rank in {s:?}")))?;
        AdeType::new(family, rank)
    }
}

impl Serialize for AdeType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An unordered bond between two vertex indices `a < b`, with multiplicity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: usize,
}

impl Bond {
    pub fn new(a: usize, b: usize, multiplicity: usize) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Self { a, b, multiplicity }
    }
}

/// Cartan matrix `2 Id - A` of a multigraph on `n` vertices.
pub fn cartan_from_bonds(n: usize, bonds: &[Bond]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for bond in bonds {
        c[bond.a][bond.b] -= bond.multiplicity as i64;
        c[bond.b][bond.a] -= bond.multiplicity as i64;
    }
    c
}

/// Merges repeated unordered pairs into bonds with multiplicity, sorted.
fn collect_bonds(pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Bond> {
    let mut counts = std::collections::BTreeMap::new();
    for (a, b) in pairs {
        let key = if a <= b { (a, b) } else { (b, a) };
        *counts.entry(key).or_insert(0usize) += 1;
    }
    counts
        .into_iter()
        .map(|((a, b), m)| Bond::new(a, b, m))
        .collect()
}

/// Identifies a connected simply-laced tree as an ADE type.
///
/// Returns the type and a canonical ordering: `order[p]` is the input node
/// carrying canonical label `p + 1`. Ties are broken by smallest node index.
pub fn identify_graph(k: usize, edges: &[(usize, usize)]) -> Result<(AdeType, Vec<usize>)> {
    if k == 0 {
        return Err(Error::NotAde("empty graph".into()));
    }
    let mut adj = vec![Vec::new(); k];
    let mut seen = BTreeSet::new();
    for &(a, b) in edges {
        if a == b || a >= k || b >= k {
            return Err(Error::NotAde(format!("bad edge ({a}, {b})")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::NotAde("multiple bond".into()));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    if edges.len() + 1 != k {
        return Err(Error::NotAde(format!("{k} nodes but {} edges", edges.len())));
    }
    // connectivity
    let mut visited = vec![false; k];
    let mut stack = vec![0];
    visited[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !visited[w] {
                visited[w] = true;
                stack.push(w);
            }
        }
    }
    if visited.iter().any(|v| !v) {
        return Err(Error::NotAde("disconnected".into()));
    }

    // walk away from `from` starting at `start` along a chain of degree <= 2 nodes
    let walk = |from: usize, start: usize| -> Vec<usize> {
        let mut out = vec![start];
        let (mut prev, mut cur) = (from, start);
        while adj[cur].len() == 2 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            out.push(next);
            prev = cur;
            cur = next;
        }
        out
    };

    let branch_nodes: Vec<usize> = (0..k).filter(|&v| adj[v].len() >= 3).collect();
    if branch_nodes.is_empty() {
        if k == 1 {
            return Ok((AdeType::new(Family::A, 1)?, vec![0]));
        }
        let start = (0..k).find(|&v| adj[v].len() == 1).expect("path has an end");
        let mut order = vec![start];
        order.extend(walk(start, adj[start][0]));
        return Ok((AdeType::new(Family::A, k)?, order));
    }
    if branch_nodes.len() > 1 || adj[branch_nodes[0]].len() > 3 {
        return Err(Error::NotAde("more than one branch point".into()));
    }
    let center = branch_nodes[0];
    let mut branches: Vec<Vec<usize>> = adj[center].iter().map(|&w| walk(center, w)).collect();
    branches.sort_by_key(|b| (b.len(), b[0]));
    let lens = (branches[0].len(), branches[1].len(), branches[2].len());
    let reversed = |b: &Vec<usize>| b.iter().rev().copied().collect::<Vec<_>>();
    match lens {
        (1, 1, m) => {
            // for D4 all branches are leaves; the smallest one starts the path
            let (long, l1, l2) = if m == 1 { (0, 1, 2) } else { (2, 0, 1) };
            let mut order = reversed(&branches[long]);
            order.push(center);
            order.push(branches[l1][0]);
            order.push(branches[l2][0]);
            Ok((AdeType::new(Family::D, m + 3)?, order))
        }
        (1, 2, m) if (2..=4).contains(&m) => {
            let mut order = reversed(&branches[1]);
            order.push(center);
            order.extend(branches[2].iter().copied());
            order.push(branches[0][0]);
            Ok((AdeType::new(Family::E, m + 4)?, order))
        }
        _ => Err(Error::NotAde(format!("branch lengths {lens:?}"))),
    }
}

/// A finite ADE Dynkin diagram with vertex indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    adtype: AdeType,
    bonds: Vec<Bond>,
}

/// One connected component of an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphComponent {
    /// Ambient vertex indices in the canonical order of `diagram`.
    pub vertices: Vec<usize>,
    /// The component relabeled canonically.
    pub diagram: Diagram,
}

impl Diagram {
    /// The diagram of type `t` in the documented labeling.
    pub fn build(t: AdeType) -> Diagram {
        let n = t.rank();
        let mut pairs = Vec::new();
        match t.family() {
            Family::A => pairs.extend((1..n).map(|i| (i - 1, i))),
            Family::D => {
                pairs.extend((1..n - 2).map(|i| (i - 1, i)));
                pairs.push((n - 3, n - 2));
                pairs.push((n - 3, n - 1));
            }
            Family::E => {
                pairs.extend((1..n - 1).map(|i| (i - 1, i)));
                pairs.push((2, n - 1));
            }
        }
        Diagram { adtype: t, bonds: collect_bonds(pairs) }
    }

    /// Builds a diagram from arbitrary labeled edges, identifying its type.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Diagram> {
        let (adtype, _) = identify_graph(n, edges)?;
        Ok(Diagram { adtype, bonds: collect_bonds(edges.iter().copied()) })
    }

    pub fn adtype(&self) -> AdeType {
        self.adtype
    }

    pub fn rank(&self) -> usize {
        self.adtype.rank()
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.bonds.iter().map(|b| (b.a, b.b)).collect()
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from_bonds(self.rank(), &self.bonds)
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.bonds.iter().any(|bond| bond.a == a && bond.b == b)
    }

    /// The same graph with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Diagram> {
        if perm.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: perm.len() });
        }
        let edges: Vec<_> = self.bonds.iter().map(|b| (perm[b.a], perm[b.b])).collect();
        Diagram::from_edges(self.rank(), &edges)
    }

    /// Induced subgraph on `subset`, split into canonically labeled components.
    ///
    /// Components are sorted by type, then by their ambient vertex sets.
    pub fn full_subgraph(&self, subset: &[usize]) -> Vec<SubgraphComponent> {
        let members: BTreeSet<usize> = subset.iter().copied().filter(|&v| v < self.rank()).collect();
        let mut remaining = members.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = vec![start];
            remaining.remove(&start);
            let mut idx = 0;
            while idx < comp.len() {
                let u = comp[idx];
                let nbrs: Vec<usize> =
                    remaining.iter().copied().filter(|&w| self.are_adjacent(u, w)).collect();
                for w in nbrs {
                    remaining.remove(&w);
                    comp.push(w);
                }
                idx += 1;
            }
            comp.sort_unstable();
            let local = |v: usize| comp.binary_search(&v).expect("member");
            let edges: Vec<_> = self
                .bonds
                .iter()
                .filter(|b| members.contains(&b.a) && members.contains(&b.b))
                .filter(|b| comp.binary_search(&b.a).is_ok())
                .map(|b| (local(b.a), local(b.b)))
                .collect();
            let (t, order) = identify_graph(comp.len(), &edges)
                .expect("induced connected subgraphs of ADE trees are ADE");
            out.push(SubgraphComponent {
                vertices: order.iter().map(|&p| comp[p]).collect(),
                diagram: Diagram::build(t),
            });
        }
        out.sort_by(|x, y| (x.diagram.adtype, &x.vertices).cmp(&(y.diagram.adtype, &y.vertices)));
        out
    }

    pub fn orient(&self, orientation: &Orientation) -> Quiver {
        orient_bonds(self.rank(), &self.bonds, orientation)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = DiagramWire {
            family: self.adtype.family(),
            rank: self.rank(),
            bonds: expand_bonds(&self.bonds).iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            delta: None,
        };
        serde_json::to_value(wire).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Diagram> {
        let wire: DiagramWire =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let declared = AdeType::new(wire.family, wire.rank)?;
        let mut edges = Vec::new();
        for [a, b] in wire.bonds {
            if a == 0 || b == 0 {
                return Err(Error::Parse("finite diagram labels start at 1".into()));
            }
            edges.push((a - 1, b - 1));
        }
        let d = Diagram::from_edges(wire.rank, &edges)?;
        if d.adtype != declared {
            return Err(Error::Parse(format!("bonds describe {} not {declared}", d.adtype)));
        }
        Ok(d)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    family: Family,
    rank: usize,
    bonds: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<Vec<i64>>,
}

fn expand_bonds(bonds: &[Bond]) -> Vec<(usize, usize)> {
    bonds
        .iter()
        .flat_map(|b| std::iter::repeat_n((b.a, b.b), b.multiplicity))
        .collect()
}

/// An extended Dynkin diagram: the base diagram with a vertex `0` adjoined
/// along the maximal root, together with the minimal imaginary root `delta`.
#[derive(Clone, Debug)]
pub struct ExtendedDiagram {
    base: Diagram,
    roots: RootSystem,
    bonds: Vec<Bond>,
    delta: Vec<i64>,
}

impl ExtendedDiagram {
    pub fn new(base: Diagram) -> ExtendedDiagram {
        let roots = RootSystem::from_diagram(&base);
        extend_diagram(&base, &roots)
    }

    pub fn of_type(t: AdeType) -> ExtendedDiagram {
        Self::new(Diagram::build(t))
    }

    pub fn base(&self) -> &Diagram {
        &self.base
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn adtype(&self) -> AdeType {
        self.base.adtype()
    }

    /// Number of finite vertices `n`; the extended diagram has `n + 1`.
    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from_bonds(self.rank() + 1, &self.bonds)
    }

    /// `v^T C~ w` for vectors of length `n + 1`.
    pub fn bilinear(&self, v: &[i64], w: &[i64]) -> Result<i64> {
        crate::roots::pairing(&self.cartan_matrix(), v, w)
    }

    pub fn orient(&self, orientation: &Orientation) -> Quiver {
        orient_bonds(self.rank() + 1, &self.bonds, orientation)
    }

    /// Recovers an extended diagram from a quiver on vertices `0..=n` whose
    /// vertex `0` is the adjoined vertex. Orientation is ignored: the Cartan
    /// matrix is read off the doubled quiver's symmetric form.
    pub fn from_quiver(q: &Quiver) -> Result<ExtendedDiagram> {
        let size = q.vertex_count();
        if size < 2 {
            return Err(Error::NotExtended("fewer than two vertices".into()));
        }
        let c = q.cartan_matrix();
        let mut edges = Vec::new();
        for i in 1..size {
            for j in (i + 1)..size {
                match c[i][j] {
                    0 => {}
                    -1 => edges.push((i - 1, j - 1)),
                    m => return Err(Error::NotExtended(format!("bond multiplicity {} between {i} and {j}", -m))),
                }
            }
        }
        let base = Diagram::from_edges(size - 1, &edges).map_err(|e| Error::NotExtended(e.to_string()))?;
        let ed = ExtendedDiagram::new(base);
        if ed.cartan_matrix() != c {
            return Err(Error::NotExtended("vertex 0 is not attached along the maximal root".into()));
        }
        Ok(ed)
    }

    /// Deletes vertex `0`, returning the base diagram rebuilt from the remaining bonds.
    pub fn delete_extra_vertex(&self) -> Result<Diagram> {
        let edges: Vec<_> = self
            .bonds
            .iter()
            .filter(|b| b.a != 0)
            .flat_map(|b| std::iter::repeat_n((b.a - 1, b.b - 1), b.multiplicity))
            .collect();
        Diagram::from_edges(self.rank(), &edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = DiagramWire {
            family: self.adtype().family(),
            rank: self.rank(),
            bonds: expand_bonds(&self.bonds).iter().map(|&(a, b)| [a, b]).collect(),
            delta: Some(self.delta.clone()),
        };
        serde_json::to_value(wire).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<ExtendedDiagram> {
        let wire: DiagramWire =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let declared = AdeType::new(wire.family, wire.rank)?;
        let pairs: Vec<(usize, usize)> = wire.bonds.iter().map(|&[a, b]| (a, b)).collect();
        let q = orient_bonds(wire.rank + 1, &collect_bonds(pairs), &Orientation::Default);
        let ed = ExtendedDiagram::from_quiver(&q)?;
        if ed.adtype() != declared {
            return Err(Error::Parse(format!("bonds describe {} not {declared}", ed.adtype())));
        }
        if let Some(delta) = wire.delta {
            if delta != ed.delta {
                return Err(Error::Parse(format!("delta {delta:?} != {:?}", ed.delta)));
            }
        }
        Ok(ed)
    }
}

/// Adjoins vertex `0` to `d`, bonded to `i` with multiplicity `(d_max, e_i)`
/// when that pairing is positive; for `A_1` this is the double bond of `A~_1`.
pub fn extend_diagram(d: &Diagram, roots: &RootSystem) -> ExtendedDiagram {
    let n = d.rank();
    let maximal = roots.maximal().to_vec();
    let c = d.cartan_matrix();
    let mut bonds: Vec<Bond> = d.bonds().iter().map(|b| Bond::new(b.a + 1, b.b + 1, b.multiplicity)).collect();
    for i in 0..n {
        let pairing: i64 = (0..n).map(|j| maximal[j] * c[j][i]).sum();
        if pairing > 0 {
            bonds.push(Bond::new(0, i + 1, pairing as usize));
        }
    }
    bonds.sort();
    let mut delta = vec![1];
    delta.extend_from_slice(&maximal);
    let ed = ExtendedDiagram { base: d.clone(), roots: roots.clone(), bonds, delta };
    let order: i64 = ed.delta.iter().map(|x| x * x).sum();
    assert_eq!(
        order as u64,
        mckay_group(d.adtype()).order,
        "McKay table disagrees with sum of squares of delta for {}",
        d.adtype()
    );
    ed
}

/// A binary polyhedral group, identified by name and order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub order: u64,
}

/// The finite subgroup of `SU(2)` attached to `t` by the McKay correspondence.
pub fn mckay_group(t: AdeType) -> GroupDescriptor {
    let n = t.rank() as u64;
    let (name, order) = match (t.family(), n) {
        (Family::A, _) => (format!("cyclic of order {}", n + 1), n + 1),
        (Family::D, _) => ("binary dihedral".to_string(), 4 * (n - 2)),
        (Family::E, 6) => ("binary tetrahedral".to_string(), 24),
        (Family::E, 7) => ("binary octahedral".to_string(), 48),
        (Family::E, _) => ("binary icosahedral".to_string(), 120),
    };
    GroupDescriptor { name, order }
}

/// Choice of direction for every edge (multi-bonds expanded in bond order).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Every edge runs from the lower to the higher index.
    #[default]
    Default,
    /// `true` reverses the corresponding edge relative to the default.
    Flips(Vec<bool>),
}

fn orient_bonds(n: usize, bonds: &[Bond], orientation: &Orientation) -> Quiver {
    let expanded = expand_bonds(bonds);
    let edges = expanded
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| match orientation {
            Orientation::Flips(flips) if flips.get(k).copied().unwrap_or(false) => (b, a),
            _ => (a, b),
        })
        .collect();
    Quiver::new(n, edges)
}

/// An arrow of the doubled quiver.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    /// `+1` for arrows of the chosen orientation, `-1` for their reverses.
    pub sign: i64,
    /// Index of the reversed arrow.
    pub partner: usize,
}

/// A quiver on vertices `0..n`. Its double lists the `m` original arrows
/// first (indices `0..m`) followed by their reverses (`m..2m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Quiver {
        assert!(edges.iter().all(|&(s, t)| s < vertices && t < vertices), "edge out of range");
        Quiver { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Arrows of the chosen orientation as `(source, target)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn doubled(&self) -> Vec<Arrow> {
        let m = self.edges.len();
        let forward = self.edges.iter().enumerate().map(|(k, &(s, t))| Arrow {
            source: s,
            target: t,
            sign: 1,
            partner: k + m,
        });
        let backward = self.edges.iter().enumerate().map(|(k, &(s, t))| Arrow {
            source: t,
            target: s,
            sign: -1,
            partner: k,
        });
        forward.chain(backward).collect()
    }

    /// Name of doubled arrow `h`: `h1..hm` for the orientation, `h1bar..` for reverses.
    pub fn arrow_name(&self, h: usize) -> String {
        let m = self.edges.len();
        if h < m {
            format!("h{}", h + 1)
        } else {
            format!("h{}bar", h - m + 1)
        }
    }

    /// `(v, w) = 2 sum v_i w_i - sum over doubled arrows of v_s(h) w_t(h)`.
    pub fn symmetric_form(&self, v: &[i64], w: &[i64]) -> i64 {
        let diag: i64 = v.iter().zip(w).map(|(a, b)| 2 * a * b).sum();
        let off: i64 = self.doubled().iter().map(|h| v[h.source] * w[h.target]).sum();
        diag - off
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices;
        let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
        (0..n)
            .map(|i| (0..n).map(|j| self.symmetric_form(&unit(i), &unit(j))).collect())
            .collect()
    }

    /// Forgets the orientation.
    pub fn underlying_bonds(&self) -> Vec<Bond> {
        collect_bonds(self.edges.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> AdeType {
        s.parse().unwrap()
    }

    #[test]
    fn type_validation() {
        assert!(AdeType::new(Family::A, 0).is_err());
        assert!(AdeType::new(Family::D, 3).is_err());
        assert!(AdeType::new(Family::E, 9).is_err());
        assert!(AdeType::new(Family::E, 5).is_err());
        assert!("X4".parse::<AdeType>().is_err());
        assert!("E".parse::<AdeType>().is_err());
        assert_eq!(t("e8"), AdeType::new(Family::E, 8).unwrap());
        assert_eq!(t("D_5").to_string(), "D5");
    }

    #[test]
    fn small_diagrams() {
        let a1 = Diagram::build(t("A1"));
        assert!(a1.bonds().is_empty());
        assert_eq!(a1.cartan_matrix(), vec![vec![2]]);
        let a3 = Diagram::build(t("A3"));
        assert_eq!(a3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(Diagram::build(t("A2")).cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn d4_is_a_star_centered_at_2() {
        let d4 = Diagram::build(t("D4"));
        assert_eq!(d4.edges(), vec![(0, 1), (1, 2), (1, 3)]);
        let c = d4.cartan_matrix();
        let rows_with_three = c.iter().filter(|r| r.iter().filter(|&&x| x == -1).count() == 3).count();
        assert_eq!(rows_with_three, 1);
        assert_eq!(
            d4.to_json(),
            serde_json::json!({"family":"D","rank":4,"bonds":[[1,2],[2,3],[2,4]]})
        );
    }

    #[test]
    fn e_labeling() {
        let e8 = Diagram::build(t("E8"));
        assert!(e8.are_adjacent(2, 7));
        assert_eq!(e8.bonds().len(), 7);
    }

    #[test]
    fn identify_all_canonical_shapes() {
        for ty in AdeType::all_up_to_rank(9) {
            let d = Diagram::build(ty);
            let (found, order) = identify_graph(ty.rank(), &d.edges()).unwrap();
            assert_eq!(found, ty);
            assert_eq!(order, (0..ty.rank()).collect::<Vec<_>>(), "{ty} canonical labeling is not a fixed point");
        }
    }

    #[test]
    fn identify_rejects_non_ade() {
        // D~4 star with four leaves
        assert!(identify_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).is_err());
        // cycle
        assert!(identify_graph(3, &[(0, 1), (1, 2), (0, 2)]).is_err());
        // E~6 branch lengths (2,2,2)
        let e6t = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)];
        assert!(identify_graph(7, &e6t).is_err());
        // two branch points
        let two = [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)];
        assert!(identify_graph(7, &two).is_err());
        assert!(identify_graph(2, &[]).is_err());
    }

    #[test]
    fn extended_small_cases() {
        let a2 = ExtendedDiagram::of_type(t("A2"));
        assert_eq!(a2.delta(), &[1, 1, 1]);
        assert_eq!(a2.bonds().len(), 3);
        let a1 = ExtendedDiagram::of_type(t("A1"));
        assert_eq!(a1.delta(), &[1, 1]);
        assert_eq!(a1.cartan_matrix(), vec![vec![2, -2], vec![-2, 2]]);
        let d4 = ExtendedDiagram::of_type(t("D4"));
        assert_eq!(d4.delta(), &[1, 1, 2, 1, 1]);
        assert_eq!(
            d4.to_json(),
            serde_json::json!({"family":"D","rank":4,"bonds":[[0,2],[1,2],[2,3],[2,4]],"delta":[1,1,2,1,1]})
        );
    }

    #[test]
    fn extended_delta_spans_kernel() {
        for ty in AdeType::all_up_to_rank(8) {
            let ed = ExtendedDiagram::of_type(ty);
            let c = ed.cartan_matrix();
            for row in &c {
                let v: i64 = row.iter().zip(ed.delta()).map(|(a, b)| a * b).sum();
                assert_eq!(v, 0, "{ty}");
            }
            assert_eq!(ed.delete_extra_vertex().unwrap(), *ed.base());
        }
    }

    #[test]
    fn mckay_table() {
        assert_eq!(mckay_group(t("A1")).order, 2);
        assert_eq!(mckay_group(t("E8")), GroupDescriptor { name: "binary icosahedral".into(), order: 120 });
        assert_eq!(mckay_group(t("D4")).order, 8);
        assert_eq!(mckay_group(t("E6")).name, "binary tetrahedral");
    }

    #[test]
    fn orientation_and_double() {
        let q = Diagram::build(t("A2")).orient(&Orientation::Default);
        assert_eq!(q.edges(), &[(0, 1)]);
        let dbl = q.doubled();
        assert_eq!(dbl[1], Arrow { source: 1, target: 0, sign: -1, partner: 0 });
        assert_eq!(dbl[0].partner, 1);

        let qa1 = ExtendedDiagram::of_type(t("A1")).orient(&Orientation::Default);
        assert_eq!(qa1.edges(), &[(0, 1), (0, 1)]);
        assert_eq!(qa1.doubled().len(), 4);

        let flipped = Diagram::build(t("A3")).orient(&Orientation::Flips(vec![true, false]));
        assert_eq!(flipped.edges(), &[(1, 0), (1, 2)]);
        assert_eq!(flipped.cartan_matrix(), Diagram::build(t("A3")).cartan_matrix());
    }

    #[test]
    fn full_subgraph_examples() {
        let a3 = Diagram::build(t("A3"));
        let comps = a3.full_subgraph(&[0, 2]);
        let types: Vec<_> = comps.iter().map(|c| c.diagram.adtype()).collect();
        assert_eq!(types, vec![t("A1"), t("A1")]);

        let e8 = Diagram::build(t("E8"));
        let comps = e8.full_subgraph(&[1, 2, 3, 7]);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].diagram.adtype(), t("D4"));
        assert_eq!(comps[0].vertices[1], 2, "D4 center maps to E8 branch vertex");

        assert!(a3.full_subgraph(&[]).is_empty());
    }

    #[test]
    fn json_round_trip_and_validation() {
        for ty in AdeType::all_up_to_rank(8) {
            let d = Diagram::build(ty);
            assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
            let ed = ExtendedDiagram::of_type(ty);
            let back = ExtendedDiagram::from_json(&ed.to_json()).unwrap();
            assert_eq!(back.bonds(), ed.bonds());
        }
        let wrong = serde_json::json!({"family":"A","rank":3,"bonds":[[1,2],[1,3]]});
        assert!(Diagram::from_json(&wrong).is_ok());
        let wrong_type = serde_json::json!({"family":"D","rank":3,"bonds":[[1,2],[2,3]]});
        assert!(Diagram::from_json(&wrong_type).is_err());
        let bad_delta = serde_json::json!({"family":"A","rank":1,"bonds":[[0,1],[0,1]],"delta":[1,2]});
        assert!(ExtendedDiagram::from_json(&bad_delta).is_err());
    }
}
