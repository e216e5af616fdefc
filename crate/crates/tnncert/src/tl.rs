//! Temperley–Lieb diagrams at loop value 2, their basis and multiplication,
//! and the expansion σ(w) = (t_{i₁}−1)⋯(t_{i_ℓ}−1) of a permutation in the
//! diagram basis.
//!
//! A diagram on 2n vertices uses the labeling: left column bottom-to-top
//! 1..n, right column top-to-bottom n+1..2n, so vertex v sits at height v
//! (v ≤ n) or 2n+1−v (v > n). Going around the box boundary visits the
//! vertices in the circular order 1, 2, …, 2n, so a diagram is exactly a
//! noncrossing perfect matching in that order. Products glue the right
//! boundary of the left factor to the left boundary of the right factor,
//! matching vertices of equal height; each closed loop formed contributes a
//! factor of 2.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::symgroup::{all_permutations, Permutation};
use crate::Result;

/// Largest n for which the diagram basis may be enumerated (Catalan growth).
pub const MAX_BASIS_N: usize = 12;
/// Largest n for word expansions σ(w).
pub const MAX_SIGMA_N: usize = 9;
/// Largest n for which the full per-permutation expansion table is built.
pub const MAX_SIGMA_TABLE_N: usize = 7;

/// A Temperley–Lieb diagram: a noncrossing perfect matching of 1..2n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Diagram {
    /// Validates and normalizes an edge list: every vertex of 1..2n matched
    /// exactly once and no two edges crossing in the circular order.
    pub fn from_edges(n: usize, edges: impl Into<Vec<(usize, usize)>>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = edges.into();
        if n == 0 {
            return Err(Error::InvalidDiagram(
                "diagram size must be positive".into(),
            ));
        }
        if edges.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "expected {n} edges on 2·{n} vertices, got {}",
                edges.len()
            )));
        }
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in &edges {
            if a == 0 || b > 2 * n || a == b {
                return Err(Error::InvalidDiagram(format!(
                    "edge ({a},{b}) out of range for 2n = {}",
                    2 * n
                )));
            }
            for v in [a, b] {
                if seen[v] {
                    return Err(Error::InvalidDiagram(format!("vertex {v} matched twice")));
                }
                seen[v] = true;
            }
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a < c && c < b && b < d {
                    return Err(Error::InvalidDiagram(format!(
                        "edges ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        Ok(Diagram { n, edges })
    }

    /// The identity diagram: horizontal strands (i, 2n+1−i).
    pub fn identity(n: usize) -> Self {
        let edges = (1..=n).map(|i| (i, 2 * n + 1 - i)).collect();
        Diagram { n, edges }
    }

    /// The generator t_i: cups (i, i+1) on the left and (2n−i, 2n+1−i) on
    /// the right, all other strands horizontal.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::OutOfRange {
                what: "generator index".into(),
                value: i.to_string(),
                allowed: format!("1..={}", n.saturating_sub(1)),
            });
        }
        let mut edges = vec![(i, i + 1), (2 * n - i, 2 * n + 1 - i)];
        for j in 1..=n {
            if j != i && j != i + 1 {
                edges.push((j, 2 * n + 1 - j));
            }
        }
        edges.sort_unstable();
        Ok(Diagram { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges with a < b, sorted by first coordinate.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The vertex matched with v.
    pub fn partner(&self, v: usize) -> usize {
        for &(a, b) in &self.edges {
            if a == v {
                return b;
            }
            if b == v {
                return a;
            }
        }
        unreachable!("vertex {v} outside 1..={}", 2 * self.n)
    }

    /// Height of vertex v in the box drawing.
    pub fn height(&self, v: usize) -> usize {
        if v <= self.n {
            v
        } else {
            2 * self.n + 1 - v
        }
    }

    /// Product self·other with `other` drawn to the right: glue heights on
    /// the shared boundary. Returns the resulting diagram and the number of
    /// closed loops absorbed.
    pub fn multiply(&self, other: &Diagram) -> Result<(Diagram, usize)> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
                context: "multiplying diagrams of different sizes",
            });
        }
        let n = self.n;
        // node ids: 0..n left boundary (vertex v−1), n..2n right boundary
        // (vertex v−1), 2n..3n the glued seam indexed by height−1
        let map_left = |v: usize| if v <= n { v - 1 } else { 2 * n + (2 * n - v) };
        let map_right = |v: usize| if v <= n { 2 * n + (v - 1) } else { v - 1 };
        let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(2); 3 * n];
        for &(x, y) in &self.edges {
            let (a, b) = (map_left(x), map_left(y));
            adj[a].push(b);
            adj[b].push(a);
        }
        for &(x, y) in &other.edges {
            let (a, b) = (map_right(x), map_right(y));
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut visited = vec![false; 3 * n];
        let mut edges = Vec::with_capacity(n);
        for start in 0..2 * n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut prev = start;
            let mut cur = adj[start][0];
            while cur >= 2 * n {
                visited[cur] = true;
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
            }
            visited[cur] = true;
            edges.push((start.min(cur) + 1, start.max(cur) + 1));
        }
        let mut loops = 0;
        for s in 2 * n..3 * n {
            if visited[s] {
                continue;
            }
            loops += 1;
            visited[s] = true;
            let mut prev = s;
            let mut cur = adj[s][0];
            while cur != s {
                visited[cur] = true;
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
            }
        }
        edges.sort_unstable();
        Ok((Diagram { n, edges }, loops))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}{:?}", self.n, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = DiagramRepr::deserialize(de)?;
        Diagram::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

/// The diagram basis of the Temperley–Lieb algebra on 2n vertices: all
/// noncrossing perfect matchings, in increasing edge-list order.
pub fn tl_basis(n: usize) -> Result<Vec<Diagram>> {
    if n == 0 || n > MAX_BASIS_N {
        return Err(Error::OutOfRange {
            what: "diagram basis size".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_BASIS_N}"),
        });
    }
    let points: Vec<usize> = (1..=2 * n).collect();
    let mut out: Vec<Diagram> = matchings(&points)
        .into_iter()
        .map(|edges| Diagram {
            n,
            edges: sorted(edges),
        })
        .collect();
    out.sort_unstable();
    return Ok(out);

    fn sorted(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        edges.sort_unstable();
        edges
    }

    fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let p = points[0];
        let mut out = Vec::new();
        for idx in (1..points.len()).step_by(2) {
            let q = points[idx];
            let inside = matchings(&points[1..idx]);
            let outside = matchings(&points[idx + 1..]);
            for ins in &inside {
                for outs in &outside {
                    let mut edges = Vec::with_capacity(points.len() / 2);
                    edges.push((p, q));
                    edges.extend_from_slice(ins);
                    edges.extend_from_slice(outs);
                    out.push(edges);
                }
            }
        }
        out
    }
}

/// An integer linear combination of basis diagrams of a fixed size.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<Diagram, i64>,
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or_else(overflow)
}

fn overflow() -> Error {
    Error::OutOfRange {
        what: "diagram-basis coefficient".into(),
        value: "overflow".into(),
        allowed: "i64".into(),
    }
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        TLElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: Diagram) -> Self {
        let n = d.n();
        let mut terms = BTreeMap::new();
        terms.insert(d, 1);
        TLElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    pub fn coeff(&self, d: &Diagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: Diagram, c: i64) -> Result<()> {
        let entry = self.terms.entry(d).or_insert(0);
        *entry = checked_add(*entry, c)?;
        Ok(())
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn add(&self, other: &TLElement) -> Result<TLElement> {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d.clone(), c)?;
        }
        out.prune();
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<TLElement> {
        let mut out = TLElement::zero(self.n);
        for (d, c) in self.terms() {
            out.add_term(d.clone(), c.checked_mul(k).ok_or_else(overflow)?)?;
        }
        out.prune();
        Ok(out)
    }

    /// Right multiplication by a basis diagram, loops absorbed as factors
    /// of 2.
    pub fn mul_diagram(&self, d: &Diagram) -> Result<TLElement> {
        let mut out = TLElement::zero(self.n);
        for (t, c) in self.terms() {
            let (prod, loops) = t.multiply(d)?;
            let factor = 1i64.checked_shl(loops as u32).ok_or_else(overflow)?;
            out.add_term(prod, c.checked_mul(factor).ok_or_else(overflow)?)?;
        }
        out.prune();
        Ok(out)
    }

    /// Right multiplication by (t_i − 1).
    pub fn mul_gen_minus_one(&self, i: usize) -> Result<TLElement> {
        let t = Diagram::generator(self.n, i)?;
        let mut out = self.mul_diagram(&t)?;
        for (d, c) in self.terms() {
            out.add_term(d.clone(), c.checked_neg().ok_or_else(overflow)?)?;
        }
        out.prune();
        Ok(out)
    }
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{d:?}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    diagram: &'a Diagram,
    coeff: String,
}

impl Serialize for TLElement {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(d, c)| TermRepr {
                diagram: d,
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(ser)
    }
}

/// σ of a word: the product (t_{i₁}−1)(t_{i₂}−1)⋯ expanded in the diagram
/// basis, applied left to right starting from the identity. Defined for any
/// word, reduced or not.
pub fn sigma_word(word: &[usize], n: usize) -> Result<TLElement> {
    if n == 0 || n > MAX_SIGMA_N {
        return Err(Error::OutOfRange {
            what: "sigma expansion size".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_SIGMA_N}"),
        });
    }
    let mut acc = TLElement::from_diagram(Diagram::identity(n));
    for &i in word {
        acc = acc.mul_gen_minus_one(i)?;
    }
    Ok(acc)
}

/// σ(w) computed from a deterministic reduced word for w.
pub fn sigma(w: &Permutation) -> Result<TLElement> {
    sigma_word(&w.reduced_word(), w.n())
}

/// The coefficient f_τ(w) of the basis diagram τ in σ(w).
pub fn f_tau(tau: &Diagram, w: &Permutation) -> Result<i64> {
    if tau.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: tau.n(),
            right: w.n(),
            context: "diagram and permutation sizes must agree",
        });
    }
    Ok(sigma(w)?.coeff(tau))
}

/// All of σ on S_n at once: for each permutation (indexed by its rank in
/// lexicographic order) the sparse row of diagram-basis coefficients.
///
/// Built by breadth-first search over the weak order — appending a letter at
/// an ascent extends a reduced word — so each row is computed exactly once.
pub struct SigmaTable {
    n: usize,
    basis: Vec<Diagram>,
    index: HashMap<Diagram, u32>,
    perms: Vec<Permutation>,
    rows: Vec<Vec<(u32, i64)>>,
}

impl SigmaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Diagram] {
        &self.basis
    }

    /// Permutations in lexicographic (rank) order.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn diagram_index(&self, d: &Diagram) -> Option<u32> {
        self.index.get(d).copied()
    }

    /// Sparse σ row for the permutation of the given rank: pairs of
    /// (basis index, coefficient).
    pub fn row(&self, rank: usize) -> &[(u32, i64)] {
        &self.rows[rank]
    }

    pub fn coeff(&self, w: &Permutation, tau: &Diagram) -> Result<i64> {
        if w.n() != self.n || tau.n() != self.n {
            return Err(Error::SizeMismatch {
                left: w.n().max(tau.n()),
                right: self.n,
                context: "table lookup with mismatched size",
            });
        }
        let Some(idx) = self.diagram_index(tau) else {
            return Err(Error::InvalidDiagram(format!(
                "{tau:?} is not a basis diagram"
            )));
        };
        let row = self.row(w.lehmer_rank());
        Ok(row.iter().find(|&&(d, _)| d == idx).map_or(0, |&(_, c)| c))
    }
}

static SIGMA_CACHE: OnceLock<Mutex<HashMap<usize, Arc<SigmaTable>>>> = OnceLock::new();

pub fn sigma_table(n: usize) -> Result<Arc<SigmaTable>> {
    if n == 0 || n > MAX_SIGMA_TABLE_N {
        return Err(Error::OutOfRange {
            what: "sigma table size".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_SIGMA_TABLE_N}"),
        });
    }
    let cache = SIGMA_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(build_sigma_table(n)?);
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

fn build_sigma_table(n: usize) -> Result<SigmaTable> {
    let basis = tl_basis(n)?;
    let index: HashMap<Diagram, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, d)| (d.clone(), i as u32))
        .collect();
    // generator action on basis diagrams: (target index, loops)
    let mut act: Vec<Vec<(u32, u8)>> = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let t = Diagram::generator(n, i)?;
        let col = basis
            .iter()
            .map(|d| {
                let (prod, loops) = d.multiply(&t).expect("equal sizes");
                (index[&prod], loops as u8)
            })
            .collect();
        act.push(col);
    }
    let perms = all_permutations(n)?;
    let total = perms.len();
    let id_idx = index[&Diagram::identity(n)];
    let mut rows: Vec<Option<Vec<(u32, i64)>>> = vec![None; total];
    rows[0] = Some(vec![(id_idx, 1)]);
    let mut queue = VecDeque::from([0usize]);
    let mut dense = vec![0i64; basis.len()];
    while let Some(rank) = queue.pop_front() {
        let w = &perms[rank];
        for i in 1..n {
            if w.apply(i) >= w.apply(i + 1) {
                continue;
            }
            let mut line = w.one_line().to_vec();
            line.swap(i - 1, i);
            let next = Permutation::new(line).expect("swap keeps a permutation");
            let next_rank = next.lehmer_rank();
            if rows[next_rank].is_some() {
                continue;
            }
            // row(w·s_i) = row(w)·(t_i − 1); coefficients stay far inside
            // i64 for n ≤ 7 (L1 norm grows by at most 3 per letter)
            for x in dense.iter_mut() {
                *x = 0;
            }
            for &(d, c) in rows[rank].as_ref().unwrap() {
                let (target, loops) = act[i - 1][d as usize];
                dense[target as usize] += c << loops;
                dense[d as usize] -= c;
            }
            let sparse: Vec<(u32, i64)> = dense
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(d, &c)| (d as u32, c))
                .collect();
            rows[next_rank] = Some(sparse);
            queue.push_back(next_rank);
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| r.expect("weak-order search reaches every permutation"))
        .collect();
    Ok(SigmaTable {
        n,
        basis,
        index,
        perms,
        rows,
    })
}
