//! Planar link diagrams built from tangle expressions, and the invariants
//! used to check solver output independently of the fraction calculus.
//!
//! A crossing has four slots numbered counterclockwise from the north-east:
//! `0 = NE, 1 = NW, 2 = SW, 3 = SE`. Slots `0-2` and `1-3` are the two strands
//! through it and `over` names the strand on top. The positive twist `[1]`
//! puts the `NW-SE` strand on top.

mod bracket;
mod classify;
mod poly;
mod reidemeister;
mod signature;

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Result, TangleError};
use crate::expr::TangleExpr;
use crate::fraction::{fraction_to_cf, Axis, TangleFraction, TwistWord};

pub use bracket::{bracket_state_sum, kauffman_bracket};
pub use classify::{
    candidate_fingerprint, candidates, classify_closure, crossing_cap, Classification, Fingerprint,
    Oracle, CAP_ENV, DEFAULT_CROSSING_CAP,
};
pub use poly::LaurentPoly;
pub use reidemeister::{add_kink, finger_move, random_finger_move, random_kink};
pub use signature::{matrix_signature, signature_of};

/// A slot: `(crossing index, slot 0..4)`.
pub type Slot = (usize, u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    /// The slot joined by an edge to each of this crossing's slots.
    pub adj: [Slot; 4],
    /// `0` when the `0-2` strand is over, `1` when the `1-3` strand is over.
    pub over: u8,
}

/// A closed planar diagram. Every slot is joined to exactly one other slot;
/// crossingless unknotted circles are counted in `free_loops`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
}

/// How the two ends of a strand visit a crossing: `(crossing, incoming slot)`.
pub type Visit = (usize, u8);

impl Diagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn adj(&self, s: Slot) -> Slot {
        self.crossings[s.0].adj[s.1 as usize]
    }

    /// Checks the edge involution and slot ranges.
    pub fn validate(&self) -> Result<()> {
        for (c, x) in self.crossings.iter().enumerate() {
            if x.over > 1 {
                return Err(TangleError::precondition(format!(
                    "crossing {c} has over {}",
                    x.over
                )));
            }
            for k in 0..4u8 {
                let (d, j) = x.adj[k as usize];
                if d >= self.crossings.len()
                    || j > 3
                    || self.adj((d, j)) != (c, k)
                    || (d, j) == (c, k)
                {
                    return Err(TangleError::precondition(format!(
                        "slot ({c},{k}) is not paired"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Closed curves traced straight through each crossing, each starting at
    /// its smallest visit. Free loops are not listed.
    pub fn strand_cycles(&self) -> Vec<Vec<Visit>> {
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut out = Vec::new();
        for c in 0..n {
            for k in 0..2u8 {
                if seen[c][k as usize] {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut x, mut i) = (c, k);
                loop {
                    seen[x][i as usize] = true;
                    seen[x][((i + 2) % 4) as usize] = true;
                    cycle.push((x, i));
                    let (y, j) = self.adj((x, (i + 2) % 4));
                    x = y;
                    i = j;
                    if (x, i) == (c, k) {
                        break;
                    }
                }
                out.push(cycle);
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    /// Orientation following each cycle in its traced direction.
    pub fn orient(&self) -> OrientedDiagram {
        OrientedDiagram::new(self.clone())
    }

    pub fn mirror(&self) -> Diagram {
        let mut d = self.clone();
        for x in &mut d.crossings {
            x.over ^= 1;
        }
        d
    }

    /// Connected pieces of the crossing graph, as sorted crossing lists.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if piece[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            piece[start] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                for &(d, _) in &self.crossings[c].adj {
                    if piece[d] == usize::MAX {
                        piece[d] = id;
                        members.push(d);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Faces as orbits of `slot ↦ next_ccw(adj(slot))`. Returns the face
    /// index of every corner, where corner `(c, i)` lies between slots `i`
    /// and `i + 1`, together with the number of faces.
    pub fn faces(&self) -> (Vec<[usize; 4]>, usize) {
        let n = self.crossings.len();
        let mut face = vec![[usize::MAX; 4]; n];
        let mut count = 0;
        for c in 0..n {
            for i in 0..4u8 {
                if face[c][i as usize] != usize::MAX {
                    continue;
                }
                // corner (c,i) is entered from the edge at slot i
                let (mut x, mut k) = (c, i);
                while face[x][k as usize] == usize::MAX {
                    face[x][k as usize] = count;
                    let next = self.adj((x, (k + 1) % 4));
                    x = next.0;
                    k = next.1;
                }
                count += 1;
            }
        }
        (face, count)
    }

    /// Crossing-list text: one line per crossing with its id, the half-edge
    /// ids (`4 * crossing + slot`) joined to slots `0..4`, and its sign
    /// under the traced orientation.
    pub fn export(&self) -> String {
        let o = self.orient();
        let mut s = String::new();
        let _ = writeln!(
            s,
            "# crossings {} free_loops {}",
            self.crossings.len(),
            self.free_loops
        );
        for (c, x) in self.crossings.iter().enumerate() {
            let h: Vec<String> = x
                .adj
                .iter()
                .map(|&(d, j)| (4 * d + j as usize).to_string())
                .collect();
            let sign = if o.sign(c) > 0 { "+" } else { "-" };
            let _ = writeln!(s, "{c} {} {sign}", h.join(" "));
        }
        s
    }
}

/// A diagram with a direction on every component.
#[derive(Debug, Clone)]
pub struct OrientedDiagram {
    pub diagram: Diagram,
    cycles: Vec<Vec<Visit>>,
    /// Incoming slot of strands `0-2` and `1-3` at each crossing.
    incoming: Vec<[u8; 2]>,
    /// Component index of strands `0-2` and `1-3` at each crossing.
    comp: Vec<[usize; 2]>,
}

impl OrientedDiagram {
    pub fn new(diagram: Diagram) -> Self {
        let cycles = diagram.strand_cycles();
        let mut o = OrientedDiagram {
            incoming: vec![[0, 1]; diagram.crossings.len()],
            comp: vec![[0, 0]; diagram.crossings.len()],
            diagram,
            cycles,
        };
        o.refresh();
        o
    }

    fn refresh(&mut self) {
        for (ci, cyc) in self.cycles.iter().enumerate() {
            for &(c, i) in cyc {
                self.incoming[c][(i % 2) as usize] = i;
                self.comp[c][(i % 2) as usize] = ci;
            }
        }
    }

    /// Number of components that pass through crossings.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn component_count(&self) -> usize {
        self.cycles.len() + self.diagram.free_loops
    }

    pub fn cycles(&self) -> &[Vec<Visit>] {
        &self.cycles
    }

    pub fn incoming(&self, c: usize, strand: u8) -> u8 {
        self.incoming[c][strand as usize]
    }

    pub fn component_of(&self, c: usize, strand: u8) -> usize {
        self.comp[c][strand as usize]
    }

    pub fn reverse_component(&mut self, i: usize) {
        let cyc = &mut self.cycles[i];
        let rev: Vec<Visit> = cyc.iter().rev().map(|&(c, k)| (c, (k + 2) % 4)).collect();
        *cyc = rev;
        self.refresh();
    }

    pub fn reversed(&self, i: usize) -> Self {
        let mut o = self.clone();
        o.reverse_component(i);
        o
    }

    /// Sign of crossing `c`: `+1` when the over strand turns counterclockwise
    /// onto the under strand.
    pub fn sign(&self, c: usize) -> i32 {
        let over = self.diagram.crossings[c].over;
        let o_out = (self.incoming[c][over as usize] + 2) % 4;
        let u_out = (self.incoming[c][(1 - over) as usize] + 2) % 4;
        let pos = |k: u8| -> (i32, i32) {
            match k {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            }
        };
        let (a, b) = (pos(o_out), pos(u_out));
        (a.0 * b.1 - a.1 * b.0).signum()
    }

    pub fn writhe(&self) -> i64 {
        (0..self.diagram.crossings.len())
            .map(|c| self.sign(c) as i64)
            .sum()
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_between(&self, i: usize, j: usize) -> i64 {
        let mut total = 0i64;
        for c in 0..self.diagram.crossings.len() {
            let [a, b] = self.comp[c];
            if (a == i && b == j) || (a == j && b == i) {
                total += self.sign(c) as i64;
            }
        }
        total / 2
    }

    /// Linking number of a two-component link.
    pub fn linking_number(&self) -> Result<i64> {
        match (self.cycles.len(), self.diagram.free_loops) {
            (2, 0) => Ok(self.linking_between(0, 1)),
            (1, 1) | (0, 2) => Ok(0),
            _ => Err(TangleError::precondition(format!(
                "linking number needs 2 components, found {}",
                self.component_count()
            ))),
        }
    }

    /// Jones polynomial in `s = t^{1/2}`.
    pub fn jones(&self) -> LaurentPoly {
        bracket::jones_from_bracket(&kauffman_bracket(&self.diagram), self.writhe())
    }

    /// Link signature by the Gordon–Litherland formula.
    pub fn signature(&self) -> i64 {
        signature_of(self)
    }

    /// Every orientation up to reversing all components at once.
    pub fn orientation_classes(&self) -> Vec<OrientedDiagram> {
        let n = self.cycles.len();
        if n == 0 {
            return vec![self.clone()];
        }
        (0..1usize << (n - 1))
            .map(|mask| {
                let mut o = self.clone();
                for i in 1..n {
                    if mask >> (i - 1) & 1 == 1 {
                        o.reverse_component(i);
                    }
                }
                o
            })
            .collect()
    }
}

/// Builder handle for an open tangle: four boundary ports.
#[derive(Debug, Clone, Copy)]
struct Piece {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum End {
    Port(usize),
    Slot(usize, u8),
}

#[derive(Default)]
struct Builder {
    over: Vec<u8>,
    link: HashMap<End, End>,
    ports: usize,
    free_loops: usize,
}

impl Builder {
    fn port(&mut self) -> usize {
        self.ports += 1;
        self.ports - 1
    }

    fn connect(&mut self, a: End, b: End) {
        self.link.insert(a, b);
        self.link.insert(b, a);
    }

    /// Glues two ports together and removes them.
    fn join(&mut self, p: usize, q: usize) {
        let (p, q) = (End::Port(p), End::Port(q));
        let a = self.link.remove(&p).expect("port in use");
        if a == q {
            self.link.remove(&q);
            self.free_loops += 1;
            return;
        }
        let b = self.link.remove(&q).expect("port in use");
        self.connect(a, b);
    }

    fn crossing(&mut self, sign: i64) -> Piece {
        let c = self.over.len();
        self.over.push(if sign > 0 { 1 } else { 0 });
        let piece = Piece {
            ne: self.port(),
            nw: self.port(),
            sw: self.port(),
            se: self.port(),
        };
        for (k, p) in [piece.ne, piece.nw, piece.sw, piece.se]
            .into_iter()
            .enumerate()
        {
            self.connect(End::Port(p), End::Slot(c, k as u8));
        }
        piece
    }

    fn zero(&mut self) -> Piece {
        let p = Piece {
            nw: self.port(),
            ne: self.port(),
            sw: self.port(),
            se: self.port(),
        };
        self.connect(End::Port(p.nw), End::Port(p.ne));
        self.connect(End::Port(p.sw), End::Port(p.se));
        p
    }

    fn infinity(&mut self) -> Piece {
        let p = Piece {
            nw: self.port(),
            ne: self.port(),
            sw: self.port(),
            se: self.port(),
        };
        self.connect(End::Port(p.nw), End::Port(p.sw));
        self.connect(End::Port(p.ne), End::Port(p.se));
        p
    }

    fn sum(&mut self, a: Piece, b: Piece) -> Piece {
        self.join(a.ne, b.nw);
        self.join(a.se, b.sw);
        Piece {
            nw: a.nw,
            sw: a.sw,
            ne: b.ne,
            se: b.se,
        }
    }

    /// `a` stacked on top of `b`.
    fn stack(&mut self, a: Piece, b: Piece) -> Piece {
        self.join(a.sw, b.nw);
        self.join(a.se, b.ne);
        Piece {
            nw: a.nw,
            ne: a.ne,
            sw: b.sw,
            se: b.se,
        }
    }

    fn twist(&mut self, mut t: Piece, c: i64, axis: Axis) -> Piece {
        for _ in 0..c.unsigned_abs() {
            let x = self.crossing(c.signum());
            t = match axis {
                Axis::Horizontal => self.sum(t, x),
                Axis::Vertical => self.stack(t, x),
            };
        }
        t
    }

    fn word(&mut self, mut t: Piece, word: &TwistWord) -> Piece {
        for (c, axis) in word.steps() {
            t = self.twist(t, c, axis);
        }
        t
    }

    fn rational(&mut self, f: TangleFraction) -> Piece {
        let word = fraction_to_cf(f);
        let base = if word.base().is_infinite() {
            self.infinity()
        } else {
            self.zero()
        };
        self.word(base, &word)
    }

    fn expr(&mut self, e: &TangleExpr) -> Piece {
        match e {
            TangleExpr::Rational(f) => self.rational(*f),
            TangleExpr::Sum(parts) => {
                let mut acc = self.expr(&parts[0]);
                for p in &parts[1..] {
                    let next = self.expr(p);
                    acc = self.sum(acc, next);
                }
                acc
            }
            TangleExpr::CircleProduct(inner, word) => {
                let t = self.expr(inner);
                self.word(t, word)
            }
        }
    }

    fn finish(self) -> Diagram {
        let n = self.over.len();
        let mut crossings: Vec<Crossing> = self
            .over
            .iter()
            .map(|&over| Crossing {
                adj: [(usize::MAX, 0); 4],
                over,
            })
            .collect();
        for (a, b) in &self.link {
            match (a, b) {
                (End::Slot(c, k), End::Slot(d, j)) => crossings[*c].adj[*k as usize] = (*d, *j),
                _ => panic!("open port left after closure"),
            }
        }
        debug_assert!(crossings.iter().all(|x| x.adj.iter().all(|s| s.0 < n)));
        Diagram {
            crossings,
            free_loops: self.free_loops,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    Numerator,
    Denominator,
}

/// Diagram of the numerator closure `N(e)`; the crossings of the summands
/// are numbered in left-to-right order.
pub fn expr_to_diagram(e: &TangleExpr, closure: Closure) -> Result<Diagram> {
    expr_to_diagram_capped(e, closure, crossing_cap())
}

pub fn expr_to_diagram_capped(e: &TangleExpr, closure: Closure, cap: usize) -> Result<Diagram> {
    let crossings = e.crossing_count();
    if crossings > cap {
        return Err(TangleError::CapExceeded { crossings, cap });
    }
    Ok(build(e, closure))
}

fn build(e: &TangleExpr, closure: Closure) -> Diagram {
    let mut b = Builder::default();
    let t = b.expr(e);
    match closure {
        Closure::Numerator => {
            b.join(t.nw, t.ne);
            b.join(t.sw, t.se);
        }
        Closure::Denominator => {
            b.join(t.nw, t.sw);
            b.join(t.ne, t.se);
        }
    }
    b.finish()
}

/// `N(e)` ignoring the crossing cap.
pub fn numerator_diagram(e: &TangleExpr) -> Diagram {
    build(e, Closure::Numerator)
}

/// Pretzel link `P(a, b, c)` as the sum of vertical twist tangles
/// `-1/a + -1/b + -1/c`.
pub fn pretzel(a: i64, b: i64, c: i64) -> TangleExpr {
    TangleExpr::sum(
        [a, b, c]
            .iter()
            .map(|&x| TangleExpr::frac(-1, x))
            .collect::<Vec<_>>(),
    )
}

/// The `(2, 2k)`-torus link `N(2k)` together with the orientation class
/// fixed by its linking number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedTorusLink2 {
    pub k: i64,
    pub lk: i64,
}

impl OrientedTorusLink2 {
    pub fn new(k: i64, lk: i64) -> Result<Self> {
        if lk.abs() != k.abs() {
            return Err(TangleError::precondition(format!(
                "need lk = ±k, got k={k} lk={lk}"
            )));
        }
        Ok(OrientedTorusLink2 { k, lk })
    }

    /// `lk = -k`: the orientation class reached by coherent bands.
    pub fn is_antiparallel(&self) -> bool {
        self.lk == -self.k
    }

    pub fn fraction(&self) -> TangleFraction {
        TangleFraction::integer(2 * self.k)
    }

    /// The diagram of `N(2k)` oriented to realize `lk`.
    pub fn diagram(&self) -> OrientedDiagram {
        let d = numerator_diagram(&TangleExpr::int(2 * self.k));
        d.orient()
            .orientation_classes()
            .into_iter()
            .find(|o| o.linking_number().ok() == Some(self.lk))
            .expect("N(2k) realizes both linking numbers")
    }
}

/// Orients the link `link` so that it agrees with `knot` on their shared
/// crossings `0..shared`. `None` when the two orientations cannot agree
/// there, i.e. the surgery is not coherent.
pub fn transfer_orientation(
    knot: &OrientedDiagram,
    link: &Diagram,
    shared: usize,
) -> Option<OrientedDiagram> {
    let mut o = link.orient();
    for ci in 0..o.cycle_count() {
        let mut agree = 0;
        let mut disagree = 0;
        for &(c, k) in &o.cycles()[ci] {
            if c < shared {
                if knot.incoming(c, k % 2) == k {
                    agree += 1;
                } else {
                    disagree += 1;
                }
            }
        }
        match (agree, disagree) {
            (0, 0) => return None,
            (_, 0) => {}
            (0, _) => o.reverse_component(ci),
            _ => return None,
        }
    }
    Some(o)
}
