//! Minimal embedded resolution of a branch by explicit point blow-ups, and
//! its dual graph.
//!
//! The branch is followed through the charts as a pair of rational functions
//! of the parameter. At each step the center is the point the strict
//! transform passes through; the chart is the one in which it stays at the
//! origin. Blowing up stops as soon as the strict transform is smooth and
//! meets exactly one exceptional curve, transversally.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_traits::Zero;

use crate::branch::{char_sequence, coincidence_order, truncated_parameterization, Parameterization};
use crate::series::Poly;
use crate::{Error, Extended, Rational, Result};

/// `num / den` as a power series in `T`, with `den(0) != 0`.
#[derive(Clone, Debug, PartialEq)]
struct Coord {
    num: Poly,
    den: Poly,
}

impl Coord {
    fn poly(p: Poly) -> Self {
        Coord { num: p, den: Poly::one() }
    }

    fn order(&self) -> Extended<u64> {
        self.num.valuation()
    }

    fn value_at_zero(&self) -> Rational {
        self.num.constant_term() / self.den.constant_term()
    }

    /// `self / other` where `ord self >= ord other`.
    fn div(&self, other: &Coord) -> Coord {
        let v = other.num.low_degree().expect("division by a zero coordinate");
        let num = (&self.num * &other.den).unshift(v);
        let den = &self.den * &other.num.unshift(v);
        Coord { num, den }.reduced()
    }

    fn minus_const(&self, c: &Rational) -> Coord {
        Coord { num: &self.num - &self.den.scale(c), den: self.den.clone() }
    }

    fn reduced(self) -> Coord {
        if self.num.is_zero() {
            return Coord { num: Poly::zero(), den: Poly::one() };
        }
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = (self.num.exact_div(&g).unwrap(), self.den.exact_div(&g).unwrap());
        let lead = den.constant_term().recip();
        num = num.scale(&lead);
        den = den.scale(&lead);
        Coord { num, den }
    }
}

fn ord(c: &Coord) -> u64 {
    c.order().finite().unwrap_or(u64::MAX)
}

/// A component of the exceptional divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Position in the blow-up sequence, starting at 1.
    pub id: usize,
    /// Order of vanishing of the pulled-back equation of the branch.
    pub phi: u64,
    /// Same for a generic smooth curve through the origin.
    pub mu: u64,
}

/// Decomposition of the dual graph into the segment from the first
/// exceptional curve to the one carrying the strict transform, and the
/// chains hanging off it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Segments {
    pub horizontal: Vec<usize>,
    /// Each chain listed from its free end towards the horizontal segment,
    /// chains ordered by where they attach along the horizontal segment.
    pub vertical: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: Vec<Vertex>,
    /// Unordered pairs stored as `(smaller, larger)`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Curve label to the vertex its strict transform meets.
    pub arrowheads: BTreeMap<String, usize>,
    pub segments: Segments,
}

impl DualGraph {
    pub fn empty() -> Self {
        DualGraph::default()
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.get(id.checked_sub(1)?)
    }

    pub fn neighbours(&self, id: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == id { Some(b) } else if b == id { Some(a) } else { None })
            .collect()
    }

    /// Number of vertical segments; the genus of the branch.
    pub fn genus(&self) -> usize {
        self.segments.vertical.len()
    }

    /// `L_0, ..., L_(g+1)`: the first exceptional curve, the free ends of
    /// the vertical segments, and the curve met by the strict transform.
    pub fn distinguished(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(&first) = self.segments.horizontal.first() {
            out.push(first);
        }
        out.extend(self.segments.vertical.iter().map(|chain| chain[0]));
        if let Some(&last) = self.segments.horizontal.last() {
            out.push(last);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return self.edges.is_empty();
        }
        if self.edges.len() != n - 1 {
            return false;
        }
        let mut seen = BTreeSet::from([1]);
        let mut queue = VecDeque::from([1]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == n
    }

    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut prev = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        prev.insert(from, from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for w in self.neighbours(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(w) {
                    e.insert(v);
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![to];
        while *path.last().unwrap() != from {
            path.push(prev[path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    fn compute_segments(&mut self, last: usize) {
        let horizontal = self.path(1, last);
        let on_path: BTreeSet<usize> = horizontal.iter().copied().collect();
        let mut vertical = Vec::new();
        for &h in &horizontal {
            let mut starts: Vec<usize> = self.neighbours(h).into_iter().filter(|w| !on_path.contains(w)).collect();
            starts.sort_unstable();
            for s in starts {
                // walk outward, then list free end first
                let mut chain = vec![s];
                let mut seen = BTreeSet::from([h, s]);
                let mut frontier = vec![s];
                while let Some(v) = frontier.pop() {
                    for w in self.neighbours(v) {
                        if seen.insert(w) {
                            chain.push(w);
                            frontier.push(w);
                        }
                    }
                }
                chain.reverse();
                vertical.push(chain);
            }
        }
        self.segments = Segments { horizontal, vertical };
    }
}

/// Where the strict transform of a second branch ends up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meeting {
    /// Exceptional curves met, with intersection multiplicities.
    pub components: Vec<(usize, u64)>,
    /// Multiplicity of the second branch at the point where it left the
    /// first one's strict transform; `None` if both are the same branch.
    pub multiplicity: Option<u64>,
    /// Exceptional curves created past the minimal resolution of the first
    /// branch before the two strict transforms separated.
    pub extra: Vec<Vertex>,
}

impl Meeting {
    pub fn is_curvette(&self) -> bool {
        self.multiplicity == Some(1) && self.components.len() == 1 && self.extra.is_empty()
    }
}

struct Engine {
    x: Coord,
    y: Coord,
    /// Exceptional curve through the current point with equation `x = 0`.
    on_x: Option<usize>,
    /// Same with equation `y = 0`.
    on_y: Option<usize>,
    graph: DualGraph,
}

enum Chart {
    /// `(x, y/x - c)`
    A(Rational),
    /// `(x/y, y)`
    B,
}

impl Engine {
    fn new(p: &Parameterization) -> Self {
        Engine {
            x: Coord::poly(p.x()),
            y: Coord::poly(p.y().clone()),
            on_x: None,
            on_y: None,
            graph: DualGraph::empty(),
        }
    }

    fn multiplicity(&self) -> u64 {
        ord(&self.x).min(ord(&self.y))
    }

    fn resolved(&self) -> bool {
        if self.multiplicity() != 1 {
            return false;
        }
        match (self.on_x, self.on_y) {
            (Some(_), None) => ord(&self.x) == 1,
            (None, Some(_)) => ord(&self.y) == 1,
            _ => false,
        }
    }

    fn chart(&self) -> Chart {
        if ord(&self.x) <= ord(&self.y) {
            Chart::A(self.y.div(&self.x).value_at_zero())
        } else {
            Chart::B
        }
    }

    /// Blows up the current point; returns the chart used and the id of the
    /// new exceptional curve.
    fn blow_up(&mut self) -> (Chart, usize) {
        let id = self.graph.vertices.len() + 1;
        let through: Vec<usize> = self.on_x.into_iter().chain(self.on_y).collect();
        let phi = through.iter().map(|&l| self.graph.vertices[l - 1].phi).sum::<u64>() + self.multiplicity();
        let mu = if through.is_empty() {
            1
        } else {
            through.iter().map(|&l| self.graph.vertices[l - 1].mu).sum()
        };
        self.graph.vertices.push(Vertex { id, phi, mu });
        for &l in &through {
            self.graph.edges.insert((l, id));
        }
        if let [a, b] = through[..] {
            self.graph.edges.remove(&(a.min(b), a.max(b)));
        }
        let chart = self.chart();
        match &chart {
            Chart::A(c) => {
                self.y = self.y.div(&self.x).minus_const(c);
                self.on_x = Some(id);
                if !c.is_zero() {
                    self.on_y = None;
                }
            }
            Chart::B => {
                self.x = self.x.div(&self.y);
                self.on_y = Some(id);
            }
        }
        (chart, id)
    }
}

/// Dual graph of the minimal embedded resolution of a singular branch.
pub fn resolve(p: &Parameterization) -> Result<DualGraph> {
    char_sequence(p)?;
    let mut engine = Engine::new(p);
    if engine.multiplicity() <= 1 {
        return Err(Error::SmoothBranch);
    }
    while !engine.resolved() {
        engine.blow_up();
    }
    let last = engine.graph.vertices.len();
    let mut graph = engine.graph;
    graph.arrowheads.insert("f".into(), last);
    graph.compute_segments(last);
    Ok(graph)
}

/// Follows `qp` through the resolution of `fp`, blowing up further points
/// of `fp`'s strict transform until the two separate, and reports which
/// exceptional curves the strict transform of `qp` meets, and how often.
pub fn meeting(fp: &Parameterization, qp: &Parameterization) -> Result<Meeting> {
    let minimal = resolve(fp)?.vertices.len();
    if !qp.is_local() {
        return Err(Error::NotLocal);
    }
    if coincidence_order(fp, qp)? == Extended::Infinity {
        return Ok(Meeting { components: vec![], multiplicity: None, extra: vec![] });
    }
    let mut engine = Engine::new(fp);
    let mut qx = Coord::poly(qp.x());
    let mut qy = Coord::poly(qp.y().clone());
    loop {
        let (old_x, old_y) = (engine.on_x, engine.on_y);
        let (vx, vy) = (ord(&qx), ord(&qy));
        let m_q = vx.min(vy);
        let (chart, id) = engine.blow_up();
        let mut components = vec![(id, m_q)];
        let separated = match chart {
            Chart::A(c) => {
                if vx > vy {
                    // tangent to x = 0: the far point of this chart
                    if let Some(l) = old_x {
                        components.push((l, vx - vy));
                    }
                    true
                } else {
                    let ratio = qy.div(&qx);
                    let cq = ratio.value_at_zero();
                    if cq == c {
                        qy = ratio.minus_const(&c);
                        false
                    } else {
                        if cq.is_zero() {
                            if let Some(l) = old_y {
                                components.push((l, vy.saturating_sub(vx)));
                            }
                        }
                        true
                    }
                }
            }
            Chart::B => {
                if vx > vy {
                    qx = qx.div(&qy);
                    false
                } else {
                    if vx < vy {
                        if let Some(l) = old_y {
                            components.push((l, vy.saturating_sub(vx)));
                        }
                    }
                    true
                }
            }
        };
        if separated {
            let extra = engine.graph.vertices.split_off(minimal.min(engine.graph.vertices.len()));
            return Ok(Meeting { components, multiplicity: Some(m_q), extra });
        }
    }
}

/// The exceptional curve of `fp`'s minimal resolution of which `qp` is a
/// curvette: its strict transform is smooth and meets that curve
/// transversally at a point on no other exceptional curve.
pub fn attach(fp: &Parameterization, qp: &Parameterization) -> Result<usize> {
    let m = meeting(fp, qp)?;
    match m.multiplicity {
        None => Err(Error::NotResolved("the strict transforms are not separated".into())),
        Some(_) if !m.extra.is_empty() => Err(Error::NotResolved(format!(
            "the strict transforms separate only after {} further blow-ups",
            m.extra.len()
        ))),
        Some(_) if m.is_curvette() => Ok(m.components[0].0),
        Some(mult) => Err(Error::NotResolved(format!(
            "strict transform has multiplicity {mult} and meets {} exceptional curves",
            m.components.len()
        ))),
    }
}

/// `sum phi(L) (L, q')` over the exceptional curves met by the strict
/// transform `q'`; equals `(f, q)` once the two are separated.
pub fn projection_intersection(graph: &DualGraph, m: &Meeting) -> Extended<u64> {
    if m.multiplicity.is_none() {
        return Extended::Infinity;
    }
    Extended::Finite(
        m.components
            .iter()
            .map(|&(id, mult)| {
                let v = graph.vertex(id).or_else(|| m.extra.iter().find(|v| v.id == id));
                v.map_or(0, |v| v.phi) * mult
            })
            .sum(),
    )
}

/// Resolution graph with arrowheads for the truncated semiroots `f_0..f_(g-1)`
/// next to the one for the branch.
pub fn resolve_with_semiroots(p: &Parameterization) -> Result<DualGraph> {
    let mut graph = resolve(p)?;
    let genus = char_sequence(p)?.genus;
    for k in 0..genus {
        let q = truncated_parameterization(p, k)?;
        let id = attach(p, &q)?;
        graph.arrowheads.insert(format!("f_{k}"), id);
    }
    Ok(graph)
}

/// Graphviz text for the graph; each vertex is labelled with its `phi` and
/// `mu`, each arrowhead is drawn as an arrow-shaped node.
pub fn to_dot(g: &DualGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in &g.vertices {
        let _ = writeln!(out, "  E{} [label=\"E{}\\nphi={} mu={}\"];", v.id, v.id, v.phi, v.mu);
    }
    for (a, b) in &g.edges {
        let _ = writeln!(out, "  E{a} -- E{b};");
    }
    for (label, id) in &g.arrowheads {
        let _ = writeln!(out, "  \"{label}\" [shape=rarrow, label=\"{label}\"];");
        let _ = writeln!(out, "  E{id} -- \"{label}\";");
    }
    out.push_str("}\n");
    out
}
