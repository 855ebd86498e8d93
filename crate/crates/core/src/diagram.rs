//! Non-crossing matchings on the standard `n`-box and their labeled versions.
//!
//! Boundary points are numbered `1..=2n`: top points `1..=n` from left to
//! right, then bottom points `n+1..=2n` from right to left, so the numbering
//! runs once around the box. Point `p > n` sits at x-coordinate `2n + 1 - p`.
//!
//! Every edge joins an even point to an odd point. Its canonical direction
//! runs from the even endpoint (tail) to the odd endpoint (head), and a label
//! is always read relative to that direction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table_algebra::TableAlgebra;

/// A non-crossing perfect matching of `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    // sorted by first endpoint, each pair (a, b) with a < b
    pairs: Vec<(usize, usize)>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl PlanarMatching {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; 2 * n + 1];
        let mut out = Vec::with_capacity(n);
        for (a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || b > 2 * n || a == b {
                return Err(Error::InvalidArgument(format!(
                    "edge {a}-{b} is not a pair of points in 1..={}",
                    2 * n
                )));
            }
            if seen[a] || seen[b] {
                return Err(Error::InvalidArgument(format!(
                    "point used twice in edge {a}-{b}"
                )));
            }
            seen[a] = true;
            seen[b] = true;
            out.push((a, b));
        }
        if out.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} edges, found {}",
                out.len()
            )));
        }
        out.sort_unstable();
        for (i, &e) in out.iter().enumerate() {
            if (e.0 + e.1) % 2 == 0 {
                return Err(Error::InvalidArgument(format!(
                    "edge {}-{} joins points of equal parity",
                    e.0, e.1
                )));
            }
            if let Some(f) = out[i + 1..].iter().find(|&&f| crosses(e, f)) {
                return Err(Error::InvalidArgument(format!(
                    "edges {}-{} and {}-{} cross",
                    e.0, e.1, f.0, f.1
                )));
            }
        }
        Ok(Self { n, pairs: out })
    }

    /// The matching `i ↔ 2n + 1 - i`.
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            pairs: (1..=n).map(|i| (i, 2 * n + 1 - i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `partner[p]` for `p` in `1..=2n`; index 0 is unused.
    pub fn partner_table(&self) -> Vec<usize> {
        let mut partner = vec![0; 2 * self.n + 1];
        for &(a, b) in &self.pairs {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }

    /// Index into [`PlanarMatching::pairs`] of the edge at each point.
    pub fn edge_table(&self) -> Vec<usize> {
        let mut edge = vec![usize::MAX; 2 * self.n + 1];
        for (k, &(a, b)) in self.pairs.iter().enumerate() {
            edge[a] = k;
            edge[b] = k;
        }
        edge
    }

    pub fn is_top(&self, p: usize) -> bool {
        p <= self.n
    }

    pub fn x_coordinate(&self, p: usize) -> usize {
        if p <= self.n {
            p
        } else {
            2 * self.n + 1 - p
        }
    }

    pub fn is_propagating(&self, (a, b): (usize, usize)) -> bool {
        self.is_top(a) != self.is_top(b)
    }

    pub fn propagating_count(&self) -> usize {
        self.pairs
            .iter()
            .filter(|&&e| self.is_propagating(e))
            .count()
    }

    /// Half the number of non-propagating edges.
    pub fn a_value(&self) -> usize {
        (self.n - self.propagating_count()) / 2
    }

    /// Number of non-propagating edges with both ends on top.
    pub fn top_arc_count(&self) -> usize {
        self.pairs
            .iter()
            .filter(|&&(a, b)| b <= self.n && a <= self.n)
            .count()
    }

    /// Which edges border the face touching the left wall, found by walking
    /// that face from the boundary gap between `2n` and `1`.
    pub fn principal_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.pairs.len()];
        if self.n == 0 {
            return flags;
        }
        let partner = self.partner_table();
        let edge = self.edge_table();
        let mut p = 1;
        loop {
            flags[edge[p]] = true;
            let q = partner[p];
            if q == 2 * self.n {
                break;
            }
            p = q + 1;
        }
        flags
    }

    /// Reflection in the horizontal midline: point `p ↦ 2n + 1 - p`.
    pub fn reflect(&self) -> Self {
        let m = 2 * self.n + 1;
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(a, b)| (m - b, m - a)).collect();
        pairs.sort_unstable();
        Self { n: self.n, pairs }
    }
}

/// All Catalan(n) non-crossing perfect matchings, sorted lexicographically by pair list.
pub fn enumerate_matchings(n: usize) -> Vec<PlanarMatching> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    fn go(
        p: usize,
        n: usize,
        stack: &mut Vec<usize>,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Vec<PlanarMatching>,
    ) {
        if p > 2 * n {
            let mut sorted = pairs.clone();
            sorted.sort_unstable();
            out.push(PlanarMatching { n, pairs: sorted });
            return;
        }
        let remaining = 2 * n - p + 1;
        if stack.len() < remaining {
            stack.push(p);
            go(p + 1, n, stack, pairs, out);
            stack.pop();
        }
        if let Some(a) = stack.pop() {
            pairs.push((a, p));
            go(p + 1, n, stack, pairs, out);
            pairs.pop();
            stack.push(a);
        }
    }
    go(1, n, &mut stack, &mut pairs, &mut out);
    out.sort();
    out
}

/// Per-edge classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    pub propagating: bool,
    pub transitional: bool,
    pub principal: bool,
}

/// A canonical basis diagram: a matching with one basis label per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDiagram {
    matching: PlanarMatching,
    // aligned with matching.pairs
    labels: Vec<usize>,
}

impl LabeledDiagram {
    pub fn new(matching: PlanarMatching, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != matching.pairs.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} edges",
                labels.len(),
                matching.pairs.len()
            )));
        }
        Ok(Self { matching, labels })
    }

    /// From `(a, b, label)` triples in any order.
    pub fn from_edges(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let matching = PlanarMatching::new(n, edges.iter().map(|&(a, b, _)| (a, b)))?;
        let labels = matching
            .pairs
            .iter()
            .map(|&(a, _)| {
                edges
                    .iter()
                    .find(|&&(x, y, _)| x.min(y) == a)
                    .map(|&(_, _, l)| l)
                    .expect("edge present")
            })
            .collect();
        Ok(Self { matching, labels })
    }

    pub fn uniform(matching: PlanarMatching, label: usize) -> Self {
        let labels = vec![label; matching.pairs.len()];
        Self { matching, labels }
    }

    pub fn identity(n: usize, alg: &TableAlgebra) -> Self {
        Self::uniform(PlanarMatching::identity(n), alg.identity())
    }

    /// All-propagating diagram with `k`-th edge labeled `b_k` for odd `k` and
    /// `bar(b_k)` for even `k`, the canonical image of `b_1 ⊗ ... ⊗ b_n`.
    pub fn tensor_embed(alg: &TableAlgebra, b: &[usize]) -> Self {
        let labels = b
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x } else { alg.bar(x) })
            .collect();
        Self {
            matching: PlanarMatching::identity(b.len()),
            labels,
        }
    }

    /// `E_k(x)`: vertical edges everywhere except the arcs `(k, k+1)`,
    /// labeled `x`, and `(2n-k, 2n+1-k)`, labeled `bar(x)`.
    pub fn e_k(n: usize, k: usize, x: usize, alg: &TableAlgebra) -> Result<Self> {
        if n < 2 || k == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "E_k needs 1 <= k < n, got k = {k}, n = {n}"
            )));
        }
        if x >= alg.rank() {
            return Err(Error::IndexOutOfRange {
                index: x,
                rank: alg.rank(),
            });
        }
        let m = 2 * n + 1;
        let mut edges: Vec<(usize, usize, usize)> = (1..=n)
            .filter(|&i| i != k && i != k + 1)
            .map(|i| (i, m - i, alg.identity()))
            .collect();
        edges.push((k, k + 1, x));
        edges.push((m - k - 1, m - k, alg.bar(x)));
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.matching.n
    }

    pub fn matching(&self) -> &PlanarMatching {
        &self.matching
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `(a, b, label)` with `a < b`, sorted by `a`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.matching
            .pairs
            .iter()
            .zip(&self.labels)
            .map(|(&(a, b), &l)| (a, b, l))
    }

    pub fn with_labels(&self, labels: Vec<usize>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        Self {
            matching: self.matching.clone(),
            labels,
        }
    }

    pub fn validate(&self, alg: &TableAlgebra) -> Result<()> {
        match self.labels.iter().find(|&&l| l >= alg.rank()) {
            Some(&index) => Err(Error::IndexOutOfRange {
                index,
                rank: alg.rank(),
            }),
            None => Ok(()),
        }
    }

    pub fn propagating_count(&self) -> usize {
        self.matching.propagating_count()
    }

    pub fn classify_edges(&self) -> Vec<EdgeClass> {
        let n = self.matching.n;
        let principal = self.matching.principal_flags();
        self.matching
            .pairs
            .iter()
            .zip(principal)
            .map(|(&(a, b), principal)| EdgeClass {
                propagating: self.matching.is_propagating((a, b)),
                transitional: (a == 1) != (b == 2 * n),
                principal,
            })
            .collect()
    }

    /// Reflect in the horizontal midline, reverse arrows and bar every label.
    pub fn star(&self, alg: &TableAlgebra) -> Self {
        let m = 2 * self.matching.n + 1;
        let edges: Vec<_> = self
            .edges()
            .map(|(a, b, l)| (m - a, m - b, alg.bar(l)))
            .collect();
        Self::from_edges(self.matching.n, &edges).expect("reflection of a valid diagram")
    }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} |", self.matching.n)?;
        for (a, b, l) in self.edges() {
            write!(f, " {a}-{b}:{l}")?;
        }
        Ok(())
    }
}

impl FromStr for LabeledDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("diagram `{}`: {why}", s.trim()));
        let (head, body) = s.split_once('|').ok_or_else(|| bad("missing `|`"))?;
        let n: usize = head
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| bad("expected `n=<n>`"))?
            .trim()
            .parse()
            .map_err(|_| bad("bad strand count"))?;
        let mut edges = Vec::new();
        for tok in body.split_whitespace() {
            let (ab, l) = tok
                .split_once(':')
                .ok_or_else(|| bad("edge needs `a-b:label`"))?;
            let (a, b) = ab.split_once('-').ok_or_else(|| bad("edge needs `a-b`"))?;
            let num = |t: &str| t.parse::<usize>().map_err(|_| bad("bad number"));
            edges.push((num(a)?, num(b)?, num(l)?));
        }
        Self::from_edges(n, &edges)
    }
}

/// One pass of a curve through an edge of an input diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub label: usize,
    /// True when traversed from tail to head.
    pub forward: bool,
}

/// Curves obtained by stacking one diagram on another.
#[derive(Clone, Debug)]
pub struct Composition {
    pub matching: PlanarMatching,
    /// Segments of each resulting edge in tail-to-head order, aligned with `matching.pairs()`.
    pub paths: Vec<Vec<Segment>>,
    /// Segments of each closed curve, in traversal order.
    pub loops: Vec<Vec<Segment>>,
}

/// Strand graph: node `k` carries one end of a diagram edge and may be glued to another node.
struct Strands {
    partner: Vec<usize>,
    label: Vec<usize>,
    is_tail: Vec<bool>,
    glue: Vec<Option<usize>>,
}

impl Strands {
    fn with_capacity(k: usize) -> Self {
        Self {
            partner: Vec::with_capacity(k),
            label: Vec::with_capacity(k),
            is_tail: Vec::with_capacity(k),
            glue: Vec::with_capacity(k),
        }
    }

    /// Append the ends of `d` as nodes `offset + p - 1` for points `p`.
    fn push_diagram(&mut self, d: &LabeledDiagram) {
        let offset = self.partner.len();
        let size = 2 * d.n();
        self.partner.resize(offset + size, 0);
        self.label.resize(offset + size, 0);
        self.is_tail.resize(offset + size, false);
        self.glue.resize(offset + size, None);
        for (a, b, l) in d.edges() {
            let (na, nb) = (offset + a - 1, offset + b - 1);
            self.partner[na] = nb;
            self.partner[nb] = na;
            self.label[na] = l;
            self.label[nb] = l;
            self.is_tail[na] = a % 2 == 0;
            self.is_tail[nb] = b % 2 == 0;
        }
    }

    fn glue(&mut self, x: usize, y: usize) {
        self.glue[x] = Some(y);
        self.glue[y] = Some(x);
    }

    /// Follow a curve from `start`, which must be an unglued node or the first
    /// node of a loop. Returns the segments and the node where the walk stops.
    fn walk(&self, start: usize, visited: &mut [bool]) -> (Vec<Segment>, usize) {
        let mut segs = Vec::new();
        let mut cur = start;
        loop {
            let other = self.partner[cur];
            visited[cur] = true;
            visited[other] = true;
            segs.push(Segment {
                label: self.label[cur],
                forward: self.is_tail[cur],
            });
            match self.glue[other] {
                None => return (segs, other),
                Some(next) if next == start => return (segs, start),
                Some(next) => cur = next,
            }
        }
    }
}

fn reverse_path(segs: &mut [Segment]) {
    segs.reverse();
    for s in segs.iter_mut() {
        s.forward = !s.forward;
    }
}

/// Place `top` above `bottom`, identifying bottom point `p` of `top` with top
/// point `2n + 1 - p` of `bottom`, and trace every resulting curve.
pub fn compose_matchings(top: &LabeledDiagram, bottom: &LabeledDiagram) -> Result<Composition> {
    let n = top.n();
    if bottom.n() != n {
        return Err(Error::StrandMismatch(n, bottom.n()));
    }
    let size = 2 * n;
    let mut s = Strands::with_capacity(2 * size);
    s.push_diagram(top);
    s.push_diagram(bottom);
    for p in n + 1..=size {
        s.glue(p - 1, size + (size + 1 - p) - 1);
    }
    // Free ends: top points of `top` and bottom points of `bottom`, keeping their numbers.
    let point_of = |node: usize| {
        if node < size {
            node + 1
        } else {
            node - size + 1
        }
    };
    let mut visited = vec![false; 2 * size];
    let mut pairs = Vec::with_capacity(n);
    let mut paths = Vec::with_capacity(n);
    let free = (0..n).chain(size + n..2 * size);
    for start in free {
        if visited[start] {
            continue;
        }
        let (mut segs, end) = s.walk(start, &mut visited);
        let (a, b) = (point_of(start), point_of(end));
        if a % 2 == 1 {
            reverse_path(&mut segs);
        }
        pairs.push(((a.min(b), a.max(b)), segs));
    }
    pairs.sort_by_key(|(e, _)| *e);
    let matching = PlanarMatching {
        n,
        pairs: pairs.iter().map(|(e, _)| *e).collect(),
    };
    paths.extend(pairs.into_iter().map(|(_, segs)| segs));
    let mut loops = Vec::new();
    for start in 0..2 * size {
        if !visited[start] {
            loops.push(s.walk(start, &mut visited).0);
        }
    }
    Ok(Composition {
        matching,
        paths,
        loops,
    })
}

/// Close `d` by joining `i` to `2n + 1 - i` outside the box; returns the label
/// segments of every resulting loop.
pub fn closure_loops(d: &LabeledDiagram) -> Vec<Vec<Segment>> {
    let size = 2 * d.n();
    let mut s = Strands::with_capacity(size);
    s.push_diagram(d);
    for i in 1..=d.n() {
        s.glue(i - 1, size - i);
    }
    let mut visited = vec![false; size];
    let mut loops = Vec::new();
    for start in 0..size {
        if !visited[start] {
            loops.push(s.walk(start, &mut visited).0);
        }
    }
    loops
}

/// Product of segment labels read from head to tail, barring segments
/// traversed against their direction.
pub fn fuse_labels(alg: &TableAlgebra, segs: &[Segment]) -> Vec<(usize, i64)> {
    let seq: Vec<usize> = segs
        .iter()
        .rev()
        .map(|s| if s.forward { s.label } else { alg.bar(s.label) })
        .collect();
    alg.mul_sequence(&seq)
}

/// Integer trace of the label product around a closed curve.
pub fn loop_trace(alg: &TableAlgebra, segs: &[Segment]) -> i64 {
    fuse_labels(alg, segs)
        .iter()
        .find(|(m, _)| *m == alg.identity())
        .map_or(0, |(_, c)| *c)
}

/// A top half-diagram: labeled arcs among points `1..=n` and unmatched defects.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDiagram {
    n: usize,
    // (a, b, label) with a < b, sorted by a
    arcs: Vec<(usize, usize, usize)>,
    defects: Vec<usize>,
}

impl HalfDiagram {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        for a in arcs.iter_mut() {
            if a.0 > a.1 {
                std::mem::swap(&mut a.0, &mut a.1);
            }
            let (x, y, _) = *a;
            if x == 0 || y > n || x == y || used[x] || used[y] || (x + y) % 2 == 0 {
                return Err(Error::InvalidArgument(format!(
                    "invalid arc {x}-{y} in half-diagram on {n} points"
                )));
            }
            used[x] = true;
            used[y] = true;
        }
        arcs.sort_unstable();
        let defects: Vec<usize> = (1..=n).filter(|&p| !used[p]).collect();
        for (i, &(a, b, _)) in arcs.iter().enumerate() {
            if arcs[i + 1..]
                .iter()
                .any(|&(c, d, _)| crosses((a, b), (c, d)))
                || defects.iter().any(|&p| a < p && p < b)
            {
                return Err(Error::InvalidArgument(format!(
                    "arc {a}-{b} crosses another arc or covers a defect"
                )));
            }
        }
        Ok(Self { n, arcs, defects })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize, usize)] {
        &self.arcs
    }

    pub fn defects(&self) -> &[usize] {
        &self.defects
    }

    pub fn lambda(&self) -> usize {
        self.defects.len()
    }

    /// Same shape with the arc labels replaced, in arc order.
    pub fn relabeled(&self, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), self.arcs.len());
        let arcs = self
            .arcs
            .iter()
            .zip(labels)
            .map(|(&(a, b, _), &l)| (a, b, l))
            .collect();
        Self {
            n: self.n,
            arcs,
            defects: self.defects.clone(),
        }
    }
}

/// Unlabeled half-diagrams on `n` points with exactly `lambda` defects (arcs
/// labeled 0), sorted.
pub fn enumerate_half_shapes(n: usize, lambda: usize) -> Vec<HalfDiagram> {
    fn go(
        p: usize,
        n: usize,
        lambda: usize,
        stack: &mut Vec<usize>,
        arcs: &mut Vec<(usize, usize, usize)>,
        defects: &mut Vec<usize>,
        out: &mut Vec<HalfDiagram>,
    ) {
        if p > n {
            if stack.is_empty() && defects.len() == lambda {
                let mut a = arcs.clone();
                a.sort_unstable();
                out.push(HalfDiagram {
                    n,
                    arcs: a,
                    defects: defects.clone(),
                });
            }
            return;
        }
        if stack.is_empty() && defects.len() < lambda {
            defects.push(p);
            go(p + 1, n, lambda, stack, arcs, defects, out);
            defects.pop();
        }
        stack.push(p);
        go(p + 1, n, lambda, stack, arcs, defects, out);
        stack.pop();
        if let Some(a) = stack.pop() {
            arcs.push((a, p, 0));
            go(p + 1, n, lambda, stack, arcs, defects, out);
            arcs.pop();
            stack.push(a);
        }
    }
    let mut out = Vec::new();
    if lambda <= n && (n - lambda).is_multiple_of(2) {
        go(
            1,
            n,
            lambda,
            &mut Vec::new(),
            &mut Vec::new(),
            &mut Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out
}

/// Assemble a diagram from top half `s`, propagating labels `b` and a bottom
/// half `t` given in top-half coordinates. `t` is turned upside down with its
/// labels barred; the `k`-th propagating edge (1-based) carries `b_k` for odd
/// `k` and `bar(b_k)` for even `k`.
pub fn half_join(
    alg: &TableAlgebra,
    s: &HalfDiagram,
    b: &[usize],
    t: &HalfDiagram,
) -> Result<LabeledDiagram> {
    if s.n != t.n {
        return Err(Error::StrandMismatch(s.n, t.n));
    }
    if s.lambda() != t.lambda() || b.len() != s.lambda() {
        return Err(Error::DefectMismatch {
            top: s.lambda(),
            bottom: t.lambda(),
            labels: b.len(),
        });
    }
    let m = 2 * s.n + 1;
    let mut edges: Vec<(usize, usize, usize)> = s.arcs.clone();
    edges.extend(t.arcs.iter().map(|&(a, c, l)| (m - a, m - c, alg.bar(l))));
    for (k, ((&top, &bot), &x)) in s.defects.iter().zip(&t.defects).zip(b).enumerate() {
        let label = if k % 2 == 0 { x } else { alg.bar(x) };
        edges.push((top, m - bot, label));
    }
    LabeledDiagram::from_edges(s.n, &edges)
}

/// Inverse of [`half_join`].
pub fn half_split(
    alg: &TableAlgebra,
    d: &LabeledDiagram,
) -> (HalfDiagram, Vec<usize>, HalfDiagram) {
    let n = d.n();
    let m = 2 * n + 1;
    let mut top_arcs = Vec::new();
    let mut bottom_arcs = Vec::new();
    let mut props = Vec::new();
    for (a, c, l) in d.edges() {
        match (a <= n, c <= n) {
            (true, true) => top_arcs.push((a, c, l)),
            (false, false) => bottom_arcs.push((m - c, m - a, alg.bar(l))),
            _ => props.push((a, m - c, l)),
        }
    }
    props.sort_unstable();
    let b = props
        .iter()
        .enumerate()
        .map(|(k, &(_, _, l))| if k % 2 == 0 { l } else { alg.bar(l) })
        .collect();
    let mut bottom_defects: Vec<usize> = props.iter().map(|&(_, p, _)| p).collect();
    bottom_defects.sort_unstable();
    top_arcs.sort_unstable();
    bottom_arcs.sort_unstable();
    let s = HalfDiagram {
        n,
        arcs: top_arcs,
        defects: props.iter().map(|&(p, _, _)| p).collect(),
    };
    let t = HalfDiagram {
        n,
        arcs: bottom_arcs,
        defects: bottom_defects,
    };
    (s, b, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verlinde::VerlindeAlgebra;

    fn catalan(n: usize) -> usize {
        (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    #[test]
    fn matching_counts_are_catalan() {
        for n in 0..=8 {
            assert_eq!(enumerate_matchings(n).len(), catalan(n), "n = {n}");
        }
        let two = enumerate_matchings(2);
        assert_eq!(two[0].pairs(), &[(1, 2), (3, 4)]);
        assert_eq!(two[1].pairs(), &[(1, 4), (2, 3)]);
    }

    #[test]
    fn crossing_and_parity_rejected() {
        assert!(PlanarMatching::new(2, [(1, 3), (2, 4)]).is_err());
        assert!(PlanarMatching::new(2, [(1, 4), (2, 3)]).is_ok());
        assert!(PlanarMatching::new(3, [(1, 6), (2, 5), (3, 4)]).is_ok());
    }

    #[test]
    fn e1_classification() {
        let v = VerlindeAlgebra::new(3);
        let d = LabeledDiagram::e_k(2, 1, 1, v.algebra()).unwrap();
        assert_eq!(d.to_string(), "n=2 | 1-2:1 3-4:1");
        for c in d.classify_edges() {
            assert!(c.transitional && c.principal && !c.propagating);
        }
        let e2 = LabeledDiagram::e_k(3, 2, 1, v.algebra()).unwrap();
        let cls = e2.classify_edges();
        // edges sorted: (1,6), (2,3), (4,5)
        assert!(cls[0].principal && cls[0].propagating && !cls[0].transitional);
        assert!(!cls[1].principal && !cls[2].principal);
    }

    #[test]
    fn identity_only_leftmost_edge_is_principal() {
        let d = PlanarMatching::identity(4);
        assert_eq!(d.principal_flags(), vec![true, false, false, false]);
    }

    #[test]
    fn text_round_trip() {
        let d: LabeledDiagram = "n=3 | 1-6:0 2-3:2 4-5:1".parse().unwrap();
        assert_eq!(d.to_string(), "n=3 | 1-6:0 2-3:2 4-5:1");
        assert!("n=2 | 1-3:0 2-4:0".parse::<LabeledDiagram>().is_err());
        assert!("n=2 1-2:0".parse::<LabeledDiagram>().is_err());
        let empty: LabeledDiagram = "n=0 |".parse().unwrap();
        assert_eq!(empty.to_string(), "n=0 |");
    }

    #[test]
    fn e1_squared_has_one_loop() {
        let v = VerlindeAlgebra::new(2);
        let e1 = LabeledDiagram::e_k(2, 1, 0, v.algebra()).unwrap();
        let c = compose_matchings(&e1, &e1).unwrap();
        assert_eq!(&c.matching, e1.matching());
        assert_eq!(c.loops.len(), 1);
        assert_eq!(c.loops[0].len(), 2);
    }

    #[test]
    fn temperley_lieb_relation_by_composition() {
        let v = VerlindeAlgebra::new(1);
        let a = v.algebra();
        let e1 = LabeledDiagram::e_k(3, 1, 0, a).unwrap();
        let e2 = LabeledDiagram::e_k(3, 2, 0, a).unwrap();
        let c12 = compose_matchings(&e1, &e2).unwrap();
        let e12 = LabeledDiagram::uniform(c12.matching, 0);
        let c = compose_matchings(&e12, &e1).unwrap();
        assert_eq!(&c.matching, e1.matching());
        assert!(c.loops.is_empty());
    }

    #[test]
    fn identity_composition_has_singleton_paths() {
        let v = VerlindeAlgebra::new(3);
        let d: LabeledDiagram = "n=3 | 1-2:1 3-4:2 5-6:0".parse().unwrap();
        let id = LabeledDiagram::identity(3, v.algebra());
        let c = compose_matchings(&id, &d).unwrap();
        assert_eq!(&c.matching, d.matching());
        assert!(c.loops.is_empty());
        for (path, &l) in c.paths.iter().zip(d.labels()) {
            assert_eq!(fuse_labels(v.algebra(), path), vec![(l, 1)]);
        }
    }

    #[test]
    fn half_join_split_round_trip() {
        let z3 = TableAlgebra::cyclic_group(3).unwrap();
        for lambda in [0usize, 2, 4] {
            let shapes = enumerate_half_shapes(4, lambda);
            for s in &shapes {
                for t in &shapes {
                    let s1 = s.relabeled(&vec![1; s.arcs().len()]);
                    let t1 = t.relabeled(&vec![2; t.arcs().len()]);
                    let b: Vec<usize> = (0..lambda).map(|k| k % 3).collect();
                    let d = half_join(&z3, &s1, &b, &t1).unwrap();
                    assert_eq!(d.propagating_count(), lambda);
                    let (s2, b2, t2) = half_split(&z3, &d);
                    assert_eq!((s2, b2, t2), (s1.clone(), b.clone(), t1.clone()));
                }
            }
        }
    }

    #[test]
    fn defect_parity() {
        for n in 0..=7 {
            for lambda in 0..=n {
                for h in enumerate_half_shapes(n, lambda) {
                    for (k, &d) in h.defects().iter().enumerate() {
                        assert_eq!(d % 2, (k + 1) % 2);
                    }
                }
            }
        }
    }
}
