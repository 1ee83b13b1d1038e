//! Reidemeister I and II moves on closed diagrams. Both keep the diagram
//! planar, so every invariant computed afterwards must be unchanged.

use super::{Crossing, Diagram, Slot};

fn set(d: &mut Diagram, a: Slot, b: Slot) {
    d.crossings[a.0].adj[a.1 as usize] = b;
    d.crossings[b.0].adj[b.1 as usize] = a;
}

/// Adds a curl on the edge leaving `slot`, with the new crossing's over
/// strand chosen by `over`. On a crossingless diagram the curl is put on
/// a free loop and `slot` is ignored.
pub fn add_kink(d: &Diagram, slot: Slot, over: u8) -> Diagram {
    let mut out = d.clone();
    let c = out.crossings.len();
    out.crossings.push(Crossing {
        adj: [(c, 1), (c, 0), (c, 3), (c, 2)],
        over: over & 1,
    });
    if c == 0 {
        assert!(out.free_loops > 0, "no curve to put a curl on");
        out.free_loops -= 1;
        return out;
    }
    let other = d.adj(slot);
    set(&mut out, (c, 2), slot);
    set(&mut out, (c, 3), other);
    out
}

/// Pushes a finger of one edge across another edge bounding the same face,
/// creating a bigon. `corner1` and `corner2` are corners `(crossing, i)` of
/// one face; the edges leaving slots `i + 1` of each are the two edges.
/// Returns `None` when the corners are not in one face or share an edge.
pub fn finger_move(d: &Diagram, corner1: Slot, corner2: Slot, first_over: bool) -> Option<Diagram> {
    let (face, _) = d.faces();
    if face[corner1.0][corner1.1 as usize] != face[corner2.0][corner2.1 as usize] {
        return None;
    }
    let u1 = (corner1.0, (corner1.1 + 1) % 4);
    let u2 = (corner2.0, (corner2.1 + 1) % 4);
    let v1 = d.adj(u1);
    let v2 = d.adj(u2);
    if u1 == u2 || u1 == v2 {
        return None;
    }
    let mut out = d.clone();
    let l = out.crossings.len();
    let r = l + 1;
    let over = if first_over { 1 } else { 0 };
    let blank = Crossing {
        adj: [(0, 0); 4],
        over,
    };
    out.crossings.push(blank);
    out.crossings.push(blank);
    set(&mut out, (l, 0), (r, 2));
    set(&mut out, (l, 3), (r, 3));
    set(&mut out, (l, 1), u1);
    set(&mut out, (r, 1), v1);
    set(&mut out, (r, 0), u2);
    set(&mut out, (l, 2), v2);
    Some(out)
}

/// All corners, for picking move locations.
pub(crate) fn corners(d: &Diagram) -> Vec<Slot> {
    (0..d.crossings.len())
        .flat_map(|c| (0..4u8).map(move |i| (c, i)))
        .collect()
}

/// Picks a curl location from `pick` (any function returning an index
/// below its argument).
pub fn random_kink(d: &Diagram, pick: &mut dyn FnMut(usize) -> usize) -> Diagram {
    let slots = corners(d);
    let slot = if slots.is_empty() {
        (0, 0)
    } else {
        slots[pick(slots.len())]
    };
    add_kink(d, slot, pick(2) as u8)
}

/// Picks a finger move between two edges of a random face, or `None` when
/// no face has two distinct edges.
pub fn random_finger_move(d: &Diagram, pick: &mut dyn FnMut(usize) -> usize) -> Option<Diagram> {
    let (face, nfaces) = d.faces();
    if nfaces == 0 {
        return None;
    }
    let mut by_face: Vec<Vec<Slot>> = vec![Vec::new(); nfaces];
    for (c, fs) in face.iter().enumerate() {
        for (i, &f) in fs.iter().enumerate() {
            by_face[f].push((c, i as u8));
        }
    }
    let usable: Vec<&Vec<Slot>> = by_face.iter().filter(|v| v.len() >= 2).collect();
    if usable.is_empty() {
        return None;
    }
    let f = usable[pick(usable.len())];
    let a = f[pick(f.len())];
    let b = f[pick(f.len())];
    finger_move(d, a, b, pick(2) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{kauffman_bracket, numerator_diagram};
    use crate::expr::parse_expr;

    #[test]
    fn kink_changes_bracket_by_a_unit() {
        let d = numerator_diagram(&parse_expr("5/2").unwrap());
        let b = kauffman_bracket(&d);
        for over in 0..2 {
            let k = add_kink(&d, (0, 0), over);
            k.validate().unwrap();
            let kb = kauffman_bracket(&k);
            assert!(kb == -&b.shift(3) || kb == -&b.shift(-3));
            assert_eq!(k.orient().jones(), d.orient().jones());
        }
    }

    #[test]
    fn curl_on_free_loop() {
        let d = numerator_diagram(&parse_expr("0").unwrap());
        let k = add_kink(&d, (0, 0), 1);
        k.validate().unwrap();
        assert_eq!(k.component_count(), 2);
        assert_eq!(k.orient().jones(), d.orient().jones());
    }

    #[test]
    fn finger_moves_stay_planar() {
        let d = numerator_diagram(&parse_expr("(-1/3 + -1/3 + -1)").unwrap());
        let j = d.orient().jones();
        let mut moved = 0;
        for a in corners(&d) {
            for b in corners(&d) {
                if let Some(m) = finger_move(&d, a, b, (a.0 + b.0) % 2 == 0) {
                    m.validate().unwrap();
                    assert_eq!(m.faces().1, m.crossing_count() + 2);
                    assert_eq!(m.component_count(), d.component_count());
                    assert_eq!(m.orient().jones(), j);
                    moved += 1;
                }
            }
        }
        assert!(moved > 0);
    }
}
