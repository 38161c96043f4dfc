//! Face-by-face chord arrangements of a curve system.
//!
//! Every curve segment between consecutive edge crossings is a straight
//! chord of its polygon face, drawn between exact rational boundary
//! points. Crossings between curves are interleaving chord pairs; their
//! order along each chord and their signs come from exact segment
//! geometry.

use crate::cellulation::{Cellulation, FaceId, SideId};
use crate::curves::{System, point_on_side};
use crate::geom::{self, Pt, Rat};

/// A boundary point of one face: one side of one passage.
#[derive(Debug, Clone)]
pub struct BPoint {
    pub face: FaceId,
    pub side: SideId,
    /// Face-local coordinate along the side, increasing counterclockwise.
    pub coord: Rat,
    pub comp: usize,
    pub pidx: usize,
    /// True if this is where the passage leaves its face (the side it
    /// crosses out through); false for the matching entry point.
    pub is_exit: bool,
    /// Rank in the face's boundary cyclic order.
    pub rank: usize,
}

/// A chord: the curve segment after passage `pidx` of component `comp`,
/// from that passage's entry point to the next passage's exit point.
#[derive(Debug, Clone)]
pub struct Chord {
    pub comp: usize,
    pub pidx: usize,
    pub face: FaceId,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone)]
pub struct Crossing {
    pub chord_a: usize,
    pub chord_b: usize,
    /// Position along chord_a and chord_b, in (0,1).
    pub param_a: Rat,
    pub param_b: Rat,
    /// +1 when (chord_a direction, chord_b direction) is a positively
    /// oriented frame.
    pub sign: i8,
}

/// One appearance of a crossing along a component's walk.
#[derive(Debug, Clone, Copy)]
pub struct CrossOcc {
    pub crossing: usize,
    pub chord: usize,
}

#[derive(Debug)]
pub struct Arrangement {
    pub points: Vec<BPoint>,
    pub coords: Vec<Pt>,
    pub chords: Vec<Chord>,
    pub crossings: Vec<Crossing>,
    /// Crossing occurrences per chord, sorted by parameter.
    pub chord_crossings: Vec<Vec<usize>>,
    /// Crossing walk per component; occurrence k and k+1 bound a
    /// crossing-free arc.
    pub comp_walk: Vec<Vec<CrossOcc>>,
    /// Entry point id of (comp, pidx) and exit point id.
    pub entry_of: Vec<Vec<usize>>,
    pub exit_of: Vec<Vec<usize>>,
    /// Chord index by (comp, pidx).
    pub chord_of: Vec<Vec<usize>>,
}

impl Arrangement {
    pub fn build(sys: &System) -> Arrangement {
        let cell: &Cellulation = sys.cell();
        let comps = sys.comps();
        let mut points: Vec<BPoint> = Vec::new();
        let mut entry_of: Vec<Vec<usize>> = Vec::new();
        let mut exit_of: Vec<Vec<usize>> = Vec::new();
        for (ci, comp) in comps.iter().enumerate() {
            let mut entries = Vec::with_capacity(comp.len());
            let mut exits = Vec::with_capacity(comp.len());
            for (pi, p) in comp.iter().enumerate() {
                let (pos_side, neg_side) = cell.edges[p.edge];
                let exit_side = if p.dir > 0 { pos_side } else { neg_side };
                let entry_side = if p.dir > 0 { neg_side } else { pos_side };
                exits.push(points.len());
                points.push(BPoint {
                    face: cell.sides[exit_side].face,
                    side: exit_side,
                    coord: point_on_side(cell, exit_side, &p.pos),
                    comp: ci,
                    pidx: pi,
                    is_exit: true,
                    rank: 0,
                });
                entries.push(points.len());
                points.push(BPoint {
                    face: cell.sides[entry_side].face,
                    side: entry_side,
                    coord: point_on_side(cell, entry_side, &p.pos),
                    comp: ci,
                    pidx: pi,
                    is_exit: false,
                    rank: 0,
                });
            }
            entry_of.push(entries);
            exit_of.push(exits);
        }

        // rank points within each face boundary
        let nfaces = cell.faces.len();
        let mut by_face: Vec<Vec<usize>> = vec![Vec::new(); nfaces];
        for (i, p) in points.iter().enumerate() {
            by_face[p.face].push(i);
        }
        for face_pts in &mut by_face {
            face_pts.sort_by(|&i, &j| {
                let (a, b) = (&points[i], &points[j]);
                cell.sides[a.side]
                    .index_in_face
                    .cmp(&cell.sides[b.side].index_in_face)
                    .then_with(|| a.coord.cmp(&b.coord))
            });
        }
        for face_pts in &by_face {
            for (r, &i) in face_pts.iter().enumerate() {
                points[i].rank = r;
            }
        }
        let coords: Vec<Pt> = points
            .iter()
            .map(|p| geom::boundary_point(p.rank, by_face[p.face].len().max(1)))
            .collect();

        // chords
        let mut chords = Vec::new();
        let mut chord_of: Vec<Vec<usize>> = Vec::new();
        for (ci, comp) in comps.iter().enumerate() {
            let n = comp.len();
            let mut ids = Vec::with_capacity(n);
            for pi in 0..n {
                let from = entry_of[ci][pi];
                let to = exit_of[ci][(pi + 1) % n];
                assert_eq!(
                    points[from].face, points[to].face,
                    "consecutive passages must meet in one face"
                );
                ids.push(chords.len());
                chords.push(Chord {
                    comp: ci,
                    pidx: pi,
                    face: points[from].face,
                    from,
                    to,
                });
            }
            chord_of.push(ids);
        }

        // crossings, face by face
        let mut face_chords: Vec<Vec<usize>> = vec![Vec::new(); nfaces];
        for (i, c) in chords.iter().enumerate() {
            face_chords[c.face].push(i);
        }
        let mut crossings = Vec::new();
        let mut chord_crossings: Vec<Vec<usize>> = vec![Vec::new(); chords.len()];
        for list in &face_chords {
            for (ii, &ca) in list.iter().enumerate() {
                for &cb in &list[ii + 1..] {
                    let (a, b) = (&chords[ca], &chords[cb]);
                    let (a1, a2) = (points[a.from].rank, points[a.to].rank);
                    let (b1, b2) = (points[b.from].rank, points[b.to].rank);
                    if !geom::interleaves(a1, a2, b1, b2) {
                        continue;
                    }
                    let pa = geom::cross_param(
                        &coords[a.from],
                        &coords[a.to],
                        &coords[b.from],
                        &coords[b.to],
                    );
                    let pb = geom::cross_param(
                        &coords[b.from],
                        &coords[b.to],
                        &coords[a.from],
                        &coords[a.to],
                    );
                    let sign = geom::cross_sign(
                        &coords[a.from],
                        &coords[a.to],
                        &coords[b.from],
                        &coords[b.to],
                    );
                    let id = crossings.len();
                    crossings.push(Crossing {
                        chord_a: ca,
                        chord_b: cb,
                        param_a: pa,
                        param_b: pb,
                        sign,
                    });
                    chord_crossings[ca].push(id);
                    chord_crossings[cb].push(id);
                }
            }
        }
        for (ci, list) in chord_crossings.iter_mut().enumerate() {
            list.sort_by(|&x, &y| {
                let px = param_on(&crossings[x], ci);
                let py = param_on(&crossings[y], ci);
                px.cmp(py)
            });
        }

        // per-component crossing walks
        let mut comp_walk = Vec::with_capacity(comps.len());
        for (ci, comp) in comps.iter().enumerate() {
            let mut walk = Vec::new();
            for pi in 0..comp.len() {
                let ch = chord_of[ci][pi];
                for &cr in &chord_crossings[ch] {
                    walk.push(CrossOcc {
                        crossing: cr,
                        chord: ch,
                    });
                }
            }
            comp_walk.push(walk);
        }

        Arrangement {
            points,
            coords,
            chords,
            crossings,
            chord_crossings,
            comp_walk,
            entry_of,
            exit_of,
            chord_of,
        }
    }

    /// Total crossings between two components (or self-crossings of one,
    /// when a == b).
    pub fn crossings_between(&self, a: usize, b: usize) -> u64 {
        self.crossings
            .iter()
            .filter(|cr| {
                let (x, y) = (
                    self.chords[cr.chord_a].comp,
                    self.chords[cr.chord_b].comp,
                );
                (x, y) == (a, b) || (x, y) == (b, a)
            })
            .count() as u64
    }

    pub fn total_crossings(&self) -> u64 {
        self.crossings.len() as u64
    }

    /// Signed sum over crossings between two distinct components, with
    /// component `a` first in the orientation convention.
    pub fn algebraic_between(&self, a: usize, b: usize) -> i64 {
        let mut sum = 0i64;
        for cr in &self.crossings {
            let (x, y) = (
                self.chords[cr.chord_a].comp,
                self.chords[cr.chord_b].comp,
            );
            if (x, y) == (a, b) {
                sum += cr.sign as i64;
            } else if (x, y) == (b, a) {
                sum -= cr.sign as i64;
            }
        }
        sum
    }
}

pub fn param_on(cr: &Crossing, chord: usize) -> &Rat {
    if cr.chord_a == chord {
        &cr.param_a
    } else {
        debug_assert_eq!(cr.chord_b, chord);
        &cr.param_b
    }
}

/// The chord id of the other strand at a crossing.
pub fn other_chord(cr: &Crossing, chord: usize) -> usize {
    if cr.chord_a == chord {
        cr.chord_b
    } else {
        cr.chord_a
    }
}
