//! Kauffman bracket in the variable `A`, and the Jones polynomial derived
//! from it.
//!
//! `kauffman_bracket` contracts crossings one at a time, keeping for every
//! way the processed part pairs up its dangling edges the polynomial of
//! smoothings that produce it. Processing in breadth-first order keeps that
//! frontier small for twist-region diagrams.

use std::collections::{HashMap, VecDeque};

use super::poly::LaurentPoly;
use super::Diagram;

/// `d = -A^2 - A^-2`, the value of a crossingless circle.
fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// The two arcs of each smoothing of crossing with the given `over` flag:
/// `[A-smoothing, B-smoothing]`, each a pair of slot pairs.
fn smoothings(over: u8) -> [[(u8, u8); 2]; 2] {
    let o = over;
    let a = [((o + 1) % 4, (o + 2) % 4), ((o + 3) % 4, o)];
    let b = [(o, (o + 1) % 4), ((o + 2) % 4, (o + 3) % 4)];
    [a, b]
}

/// Edge ids: `edge[c][k]` for every slot, shared by both ends.
fn edge_ids(d: &Diagram) -> (Vec<[u32; 4]>, usize) {
    let n = d.crossings.len();
    let mut edge = vec![[u32::MAX; 4]; n];
    let mut count = 0u32;
    for c in 0..n {
        for k in 0..4u8 {
            if edge[c][k as usize] == u32::MAX {
                let (x, j) = d.adj((c, k));
                edge[c][k as usize] = count;
                edge[x][j as usize] = count;
                count += 1;
            }
        }
    }
    (edge, count as usize)
}

fn bfs_order(d: &Diagram) -> Vec<usize> {
    let n = d.crossings.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(c) = q.pop_front() {
            order.push(c);
            for &(x, _) in &d.crossings[c].adj {
                if !seen[x] {
                    seen[x] = true;
                    q.push_back(x);
                }
            }
        }
    }
    order
}

/// Pairing of open edges, as sorted `(low, high)` pairs.
type Frontier = Vec<(u32, u32)>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Node {
    Slot(u8),
    Open(u32),
}

/// `<D>` normalized so that the crossingless unknot has bracket `1`.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let dval = loop_value();
    let (edge, _) = edge_ids(d);
    let mut open_side: HashMap<u32, ()> = HashMap::new();
    let mut states: HashMap<Frontier, LaurentPoly> =
        HashMap::from([(Vec::new(), LaurentPoly::one())]);
    let mut processed = vec![false; d.crossings.len()];

    for c in bfs_order(d) {
        let x = &d.crossings[c];
        let es = edge[c];
        // Classify this crossing's slots.
        let mut self_partner = [None; 4];
        for k in 0..4u8 {
            let (y, j) = x.adj[k as usize];
            if y == c {
                self_partner[k as usize] = Some(j);
            }
        }
        let mut is_new = [false; 4];
        for k in 0..4 {
            if self_partner[k].is_none() && !open_side.contains_key(&es[k]) {
                is_new[k] = true;
            }
        }
        let slot_of_edge = |e: u32| -> Option<u8> {
            (0..4u8).find(|&k| es[k as usize] == e && self_partner[k as usize].is_none())
        };

        let mut next: HashMap<Frontier, LaurentPoly> = HashMap::new();
        for (frontier, poly) in &states {
            let partner: HashMap<u32, u32> = frontier
                .iter()
                .flat_map(|&(a, b)| [(a, b), (b, a)])
                .collect();
            // Where the far side of each slot leads.
            let outside = |k: u8| -> Node {
                if let Some(j) = self_partner[k as usize] {
                    return Node::Slot(j);
                }
                let e = es[k as usize];
                if is_new[k as usize] {
                    return Node::Open(e);
                }
                let g = partner[&e];
                match slot_of_edge(g) {
                    Some(s) => Node::Slot(s),
                    None => Node::Open(g),
                }
            };
            for (weight, arcs) in [1i32, -1].into_iter().zip(smoothings(x.over)) {
                let mut arc = [0u8; 4];
                for (p, q) in arcs {
                    arc[p as usize] = q;
                    arc[q as usize] = p;
                }
                let mut visited = [false; 4];
                let mut pairs: Frontier = Vec::new();
                let walk = |start: u8, visited: &mut [bool; 4]| -> Node {
                    let mut s = start;
                    loop {
                        visited[s as usize] = true;
                        let t = arc[s as usize];
                        visited[t as usize] = true;
                        match outside(t) {
                            Node::Open(e) => return Node::Open(e),
                            Node::Slot(u) => s = u,
                        }
                    }
                };
                // Untouched pairs and paths from dangling edges.
                for &(a, b) in frontier {
                    let sa = slot_of_edge(a);
                    let sb = slot_of_edge(b);
                    if sa.is_none() && sb.is_none() {
                        pairs.push((a, b));
                    }
                }
                let mut starts: Vec<(u32, u8)> = Vec::new();
                for &(a, b) in frontier {
                    match (slot_of_edge(a), slot_of_edge(b)) {
                        (None, Some(s)) => starts.push((a, s)),
                        (Some(s), None) => starts.push((b, s)),
                        _ => {}
                    }
                }
                for k in 0..4u8 {
                    if is_new[k as usize] {
                        starts.push((es[k as usize], k));
                    }
                }
                let mut done: HashMap<u32, ()> = HashMap::new();
                for (e, s) in starts {
                    if done.contains_key(&e) {
                        continue;
                    }
                    let end = match walk(s, &mut visited) {
                        Node::Open(f) => f,
                        Node::Slot(_) => unreachable!(),
                    };
                    done.insert(e, ());
                    done.insert(end, ());
                    pairs.push((e.min(end), e.max(end)));
                }
                let mut loops = 0u32;
                for k in 0..4u8 {
                    if !visited[k as usize] {
                        loops += 1;
                        let mut s = k;
                        loop {
                            visited[s as usize] = true;
                            let t = arc[s as usize];
                            visited[t as usize] = true;
                            match outside(t) {
                                Node::Slot(u) if u == k => break,
                                Node::Slot(u) => s = u,
                                Node::Open(_) => unreachable!(),
                            }
                        }
                    }
                }
                pairs.sort_unstable();
                let term = &poly.shift(weight) * &dval.pow(loops);
                let entry = next.entry(pairs).or_default();
                *entry = &*entry + &term;
            }
        }
        states = next;
        processed[c] = true;
        for k in 0..4 {
            if is_new[k] {
                open_side.insert(es[k], ());
            } else if self_partner[k].is_none() {
                open_side.remove(&es[k]);
            }
        }
    }
    debug_assert!(processed.iter().all(|&p| p));
    let total = states.remove(&Vec::new()).unwrap_or_default();
    let total = &total * &dval.pow(d.free_loops as u32);
    total.div_exact(&dval).expect("at least one loop")
}

/// Direct sum over all `2^c` smoothings. Exponential; used to cross-check
/// `kauffman_bracket` on small diagrams.
pub fn bracket_state_sum(d: &Diagram) -> LaurentPoly {
    let n = d.crossings.len();
    assert!(n <= 24, "state sum over {n} crossings");
    let dval = loop_value();
    let mut total = LaurentPoly::zero();
    let mut by_loops: HashMap<(i32, u32), i64> = HashMap::new();
    for mask in 0u64..(1u64 << n) {
        let mut parent: Vec<usize> = (0..4 * n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
            }
        };
        let mut a_count = 0i32;
        for c in 0..n {
            let which = (mask >> c & 1) as usize;
            if which == 0 {
                a_count += 1;
            }
            for (p, q) in smoothings(d.crossings[c].over)[which] {
                union(&mut parent, 4 * c + p as usize, 4 * c + q as usize);
            }
            for k in 0..4u8 {
                let (x, j) = d.adj((c, k));
                union(&mut parent, 4 * c + k as usize, 4 * x + j as usize);
            }
        }
        let loops = (0..4 * n).filter(|&i| find(&mut parent, i) == i).count() as u32;
        *by_loops
            .entry((a_count - (n as i32 - a_count), loops + d.free_loops as u32))
            .or_default() += 1;
    }
    for ((e, loops), count) in by_loops {
        let term = &LaurentPoly::monomial(count, e) * &dval.pow(loops - 1);
        total = &total + &term;
    }
    total
}

/// `V = (-A^3)^{-w} <D>` with `A = t^{-1/4}`, returned in `s = t^{1/2}`.
pub(super) fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = &LaurentPoly::monomial(sign, (-3 * writhe) as i32) * bracket;
    // A^e = s^{-e/2}
    f.divide_exponents(-2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::numerator_diagram;
    use crate::expr::parse_expr;

    fn nd(s: &str) -> Diagram {
        numerator_diagram(&parse_expr(s).unwrap())
    }

    #[test]
    fn frontier_matches_state_sum() {
        for s in [
            "3",
            "-3",
            "2",
            "0",
            "1/0",
            "5/2",
            "15/4",
            "(-1/3 + -1/3 + -1)",
            "(2/7 + 1/0 + -3)",
            "(-1/3 + -1/5) o (-1,2,0)",
            "(0 + 0 + 0)",
            "(1/2 + 1/2)",
        ] {
            let d = nd(s);
            assert_eq!(kauffman_bracket(&d), bracket_state_sum(&d), "{s}");
        }
    }

    #[test]
    fn trefoil_and_hopf_jones() {
        // all-positive trefoil: t + t^3 - t^4, in s = t^{1/2}
        let tref = nd("3").orient();
        assert_eq!(tref.writhe().abs(), 3);
        let j = if tref.writhe() == 3 {
            tref.jones()
        } else {
            tref.jones().invert_variable()
        };
        assert_eq!(j, LaurentPoly::from_terms([(2, 1), (6, 1), (8, -1)]));

        let hopf = nd("2").orient();
        let pos = hopf
            .orientation_classes()
            .into_iter()
            .find(|o| o.writhe() == 2)
            .unwrap();
        assert_eq!(pos.jones(), LaurentPoly::from_terms([(1, -1), (5, -1)]));
    }

    #[test]
    fn unknot_diagrams_have_trivial_jones() {
        for s in ["1", "-1", "1/3", "1/0", "(-1/2 + 1)", "(3/2 + -1) o (2,0)"] {
            assert_eq!(parse_expr(s).unwrap().evaluate().unwrap().num().abs(), 1);
            assert_eq!(nd(s).orient().jones(), LaurentPoly::one(), "{s}");
        }
        assert_eq!(
            nd("0").orient().jones(),
            LaurentPoly::from_terms([(-1, -1), (1, -1)])
        );
    }

    #[test]
    fn mirror_inverts_jones() {
        let d = nd("15/4");
        let j = d.orient().jones();
        assert_eq!(d.mirror().orient().jones(), j.invert_variable());
        assert_eq!(nd("-15/4").orient().jones(), j.invert_variable());
    }
}
