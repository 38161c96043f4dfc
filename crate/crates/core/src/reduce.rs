//! Crossing reduction for curve systems.
//!
//! Moves: merging a backtrack through an edge when that does not
//! increase crossings, smoothing nullhomotopic monogons, and pulling
//! one arc of an empty bigon across the other. An empty bigon is a pair
//! of crossings joined by crossing-free arcs of two strands whose
//! combined loop is nullhomotopic; because the arcs are crossing-free
//! and every component is essential, the disk bounded by such a loop
//! contains no strands, so the pull is an isotopy. A transverse
//! embedded pair that is not in minimal position always contains an
//! innermost (hence empty) bigon, so for embedded pairs the terminal
//! state realizes the geometric intersection number.

use crate::arrangement::{param_on, Arrangement};
use crate::curves::{Passage, System};
use crate::geom::{rat, Rat};
use crate::words::Letter;
use num::BigRational;
use std::collections::{BTreeMap, BTreeSet};

const MAX_ROUNDS: usize = 100_000;

impl System {
    /// Reduce until no move applies. Deterministic: candidate moves are
    /// collected per round, ordered canonically, and applied greedily
    /// subject to disjoint support.
    pub fn reduce(&mut self) {
        for _ in 0..MAX_ROUNDS {
            self.renormalize();
            let arr = Arrangement::build(self);
            let moves = collect_moves(self, &arr);
            if moves.is_empty() {
                return;
            }
            apply_moves(self, moves);
        }
        panic!("reduction did not terminate");
    }
}

/// Cyclic index range: passages `first, first+1, ..., first+count-1`
/// (mod n); `count == 0` encodes the empty range anchored at `first`.
#[derive(Debug, Clone, Copy)]
struct CycRange {
    first: usize,
    count: usize,
}

impl CycRange {
    fn indices(&self, n: usize) -> Vec<usize> {
        (0..self.count).map(|k| (self.first + k) % n).collect()
    }
}

/// A surgery on one component.
#[derive(Debug, Clone)]
enum Move {
    /// Remove the backtracking passages at cyclic indices i, i+1.
    Backtrack { comp: usize, i: usize },
    /// Remove the passages of a nullhomotopic crossing-free loop.
    Monogon { comp: usize, range: CycRange },
    /// Replace one bigon arc by a parallel copy of the other.
    Bigon {
        comp: usize,
        range: CycRange,
        replacement: Vec<Passage>,
    },
}

/// Deterministic ordering: kind, then smallest removed (edge, position).
type MoveKey = (u8, usize, Rat, usize, usize);

struct Candidate {
    key: MoveKey,
    mv: Move,
    /// All (component, passage index) pairs the move reads or writes.
    footprint: Vec<(usize, usize)>,
}

fn key_for(sys: &System, kind: u8, comp: usize, idxs: &[usize]) -> MoveKey {
    let mut best: Option<(usize, Rat)> = None;
    for &i in idxs {
        let p = &sys.comps()[comp][i];
        let cand = (p.edge, p.pos.clone());
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    let (e, q) = best.unwrap_or((usize::MAX, rat(0, 1)));
    (kind, e, q, comp, idxs.first().copied().unwrap_or(0))
}

fn span_with_padding(n: usize, range: CycRange) -> Vec<usize> {
    let mut idxs = range.indices(n);
    idxs.push((range.first + n - 1) % n);
    idxs.push((range.first + range.count) % n);
    idxs.sort_unstable();
    idxs.dedup();
    idxs
}

fn collect_moves(sys: &System, arr: &Arrangement) -> Vec<Move> {
    let mut cands: Vec<Candidate> = Vec::new();
    collect_backtracks(sys, arr, &mut cands);
    collect_loops(sys, arr, &mut cands);
    cands.sort_by(|a, b| a.key.cmp(&b.key));

    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut chosen = Vec::new();
    for cand in cands {
        if cand.footprint.iter().any(|k| used.contains(k)) {
            continue;
        }
        used.extend(cand.footprint.iter().copied());
        chosen.push(cand.mv);
    }
    chosen
}

fn collect_backtracks(sys: &System, arr: &Arrangement, out: &mut Vec<Candidate>) {
    for (ci, comp) in sys.comps().iter().enumerate() {
        let n = comp.len();
        if n < 3 {
            continue;
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if comp[i].edge != comp[j].edge || comp[j].dir != -comp[i].dir {
                continue;
            }
            if backtrack_delta(sys, arr, ci, i) <= 0 {
                let footprint: Vec<(usize, usize)> =
                    [(i + n - 1) % n, i, j, (i + 2) % n]
                        .into_iter()
                        .map(|k| (ci, k))
                        .collect();
                out.push(Candidate {
                    key: key_for(sys, 0, ci, &[i, j]),
                    mv: Move::Backtrack { comp: ci, i },
                    footprint,
                });
            }
        }
    }
}

/// Crossing-count change from merging the three chords around the
/// backtrack at (ci, i, i+1) into one straight chord.
fn backtrack_delta(sys: &System, arr: &Arrangement, ci: usize, i: usize) -> i64 {
    let n = sys.comps()[ci].len();
    let prev = (i + n - 1) % n;
    let j = (i + 1) % n;
    let removed: BTreeSet<usize> = [
        arr.chord_of[ci][prev],
        arr.chord_of[ci][i],
        arr.chord_of[ci][j],
    ]
    .into_iter()
    .collect();
    let mut old = 0i64;
    for cr in &arr.crossings {
        if removed.contains(&cr.chord_a) || removed.contains(&cr.chord_b) {
            old += 1;
        }
    }
    let from = arr.entry_of[ci][prev];
    let to = arr.exit_of[ci][(i + 2) % n];
    debug_assert_eq!(arr.points[from].face, arr.points[to].face);
    let mut new = 0i64;
    for (chid, ch) in arr.chords.iter().enumerate() {
        if removed.contains(&chid) || ch.face != arr.points[from].face {
            continue;
        }
        if crate::geom::interleaves(
            arr.points[from].rank,
            arr.points[to].rank,
            arr.points[ch.from].rank,
            arr.points[ch.to].rank,
        ) {
            new += 1;
        }
    }
    new - old
}

/// An arc between consecutive crossings along one component's walk.
#[derive(Debug, Clone)]
struct WalkArc {
    comp: usize,
    cr_from: usize,
    cr_to: usize,
    chord_from: usize,
    chord_to: usize,
    range: CycRange,
}

impl WalkArc {
    fn chord_at(&self, crossing: usize) -> usize {
        if self.cr_from == crossing {
            self.chord_from
        } else {
            debug_assert_eq!(self.cr_to, crossing);
            self.chord_to
        }
    }
}

fn collect_loops(sys: &System, arr: &Arrangement, out: &mut Vec<Candidate>) {
    let mut arcs: Vec<WalkArc> = Vec::new();
    for (ci, walk) in arr.comp_walk.iter().enumerate() {
        let m = walk.len();
        if m < 2 {
            continue;
        }
        let n = sys.comps()[ci].len();
        for k in 0..m {
            let (a, b) = (walk[k], walk[(k + 1) % m]);
            let pa = arr.chords[a.chord].pidx;
            let pb = arr.chords[b.chord].pidx;
            let count = if a.chord == b.chord {
                let sa = param_on(&arr.crossings[a.crossing], a.chord);
                let sb = param_on(&arr.crossings[b.crossing], b.chord);
                if sa < sb {
                    0
                } else {
                    n // the walk wrapped all the way around
                }
            } else {
                (pb + n - pa) % n
            };
            arcs.push(WalkArc {
                comp: ci,
                cr_from: a.crossing,
                cr_to: b.crossing,
                chord_from: a.chord,
                chord_to: b.chord,
                range: CycRange {
                    first: (pa + 1) % n,
                    count,
                },
            });
        }
    }

    // monogons
    for arc in &arcs {
        if arc.cr_from != arc.cr_to || arc.range.count == 0 {
            continue;
        }
        if arc.range.count == sys.comps()[arc.comp].len() {
            // the whole component: removing it would delete the curve
            continue;
        }
        let word = arc_word(sys, arc.comp, arc.range);
        if sys.cell().word_is_null(&word) {
            let n = sys.comps()[arc.comp].len();
            let idxs = arc.range.indices(n);
            out.push(Candidate {
                key: key_for(sys, 1, arc.comp, &idxs),
                mv: Move::Monogon {
                    comp: arc.comp,
                    range: arc.range,
                },
                footprint: span_with_padding(n, arc.range)
                    .into_iter()
                    .map(|k| (arc.comp, k))
                    .collect(),
            });
        }
    }

    // bigons: two arcs joining the same pair of distinct crossings by
    // different strands at both corners
    let mut by_ends: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ai, arc) in arcs.iter().enumerate() {
        if arc.cr_from == arc.cr_to {
            continue;
        }
        let ends = (arc.cr_from.min(arc.cr_to), arc.cr_from.max(arc.cr_to));
        by_ends.entry(ends).or_default().push(ai);
    }
    for list in by_ends.values() {
        for (ii, &ai) in list.iter().enumerate() {
            for &bi in &list[ii + 1..] {
                let (a, b) = (&arcs[ai], &arcs[bi]);
                let (x, y) = (a.cr_from, a.cr_to);
                if a.chord_at(x) == b.chord_at(x) || a.chord_at(y) == b.chord_at(y) {
                    // smooth continuation through a crossing, not a corner
                    continue;
                }
                let wa = arc_word(sys, a.comp, a.range);
                let wb = arc_word(sys, b.comp, b.range);
                let same_dir = a.cr_from == b.cr_from;
                let mut loop_word = wa.clone();
                if same_dir {
                    loop_word.extend(crate::words::invert(&wb));
                } else {
                    loop_word.extend(wb.iter().copied());
                }
                if !sys.cell().word_is_null(&loop_word) {
                    continue;
                }
                let (mover, track) = if a.range.count <= b.range.count {
                    (a, b)
                } else {
                    (b, a)
                };
                let replacement = parallel_copy(sys, arr, mover, track);
                let n_m = sys.comps()[mover.comp].len();
                let n_t = sys.comps()[track.comp].len();
                let mut footprint: Vec<(usize, usize)> = span_with_padding(n_m, mover.range)
                    .into_iter()
                    .map(|k| (mover.comp, k))
                    .collect();
                footprint.extend(
                    span_with_padding(n_t, track.range)
                        .into_iter()
                        .map(|k| (track.comp, k)),
                );
                footprint.sort_unstable();
                footprint.dedup();
                let key_idxs = {
                    let mut v = mover.range.indices(n_m);
                    v.push(arr.chords[mover.chord_from].pidx);
                    v
                };
                out.push(Candidate {
                    key: key_for(sys, 2, mover.comp, &key_idxs),
                    mv: Move::Bigon {
                        comp: mover.comp,
                        range: mover.range,
                        replacement,
                    },
                    footprint,
                });
            }
        }
    }
}

fn arc_word(sys: &System, comp: usize, range: CycRange) -> Vec<Letter> {
    let n = sys.comps()[comp].len();
    range
        .indices(n)
        .into_iter()
        .map(|i| sys.comps()[comp][i].letter())
        .collect()
}

/// Passages of `track`'s arc copied on the far side of the bigon disk,
/// oriented to substitute for `mover`'s arc.
fn parallel_copy(
    sys: &System,
    arr: &Arrangement,
    mover: &WalkArc,
    track: &WalkArc,
) -> Vec<Passage> {
    let cell = sys.cell();
    let n_track = sys.comps()[track.comp].len();
    let same_dir = mover.cr_from == track.cr_from;

    // directions into the respective arcs at mover's starting crossing
    let mover_chord = mover.chord_from;
    let track_chord = track.chord_at(mover.cr_from);
    let t_from = &arr.coords[arr.chords[track_chord].from];
    let t_to = &arr.coords[arr.chords[track_chord].to];
    let m_from = &arr.coords[arr.chords[mover_chord].from];
    let m_to = &arr.coords[arr.chords[mover_chord].to];
    let raw = crate::geom::cross_sign(t_from, t_to, m_from, m_to);
    // disk side relative to the track component's own orientation
    let disk_side = if same_dir { raw } else { -raw };
    let copy_side = -disk_side;

    // per-edge spacing
    let mut per_edge: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
    for comp in sys.comps() {
        for p in comp {
            per_edge.entry(p.edge).or_default().push(p.pos.clone());
        }
    }
    let mut gap_cache: BTreeMap<usize, Rat> = BTreeMap::new();
    let mut gap_for = |e: usize| -> Rat {
        if let Some(g) = gap_cache.get(&e) {
            return g.clone();
        }
        let mut pts = per_edge.get(&e).cloned().unwrap_or_default();
        pts.sort();
        let one = BigRational::from_integer(1.into());
        let mut gap = pts
            .first()
            .map(|p| p.clone().min(one - pts.last().unwrap().clone()))
            .unwrap_or_else(|| rat(1, 2));
        for w in pts.windows(2) {
            let d = w[1].clone() - &w[0];
            if d < gap {
                gap = d;
            }
        }
        gap_cache.insert(e, gap.clone());
        gap
    };

    let idxs = track.range.indices(n_track);
    let ordered: Vec<usize> = if same_dir {
        idxs
    } else {
        idxs.into_iter().rev().collect()
    };
    ordered
        .into_iter()
        .map(|ti| {
            let p = &sys.comps()[track.comp][ti];
            let (pos_side, neg_side) = cell.edges[p.edge];
            let exit_side = if p.dir > 0 { pos_side } else { neg_side };
            let exit_positive = cell.sides[exit_side].positive;
            let sgn = (copy_side as i64) * if exit_positive { 1 } else { -1 };
            let delta = gap_for(p.edge) / BigRational::from_integer(4.into());
            let dir = if same_dir { p.dir } else { -p.dir };
            Passage {
                edge: p.edge,
                dir,
                pos: p.pos.clone() + BigRational::from_integer(sgn.into()) * delta,
            }
        })
        .collect()
}

fn apply_moves(sys: &mut System, moves: Vec<Move>) {
    let mut per_comp: BTreeMap<usize, Vec<Move>> = BTreeMap::new();
    for mv in moves {
        let comp = match &mv {
            Move::Backtrack { comp, .. } => *comp,
            Move::Monogon { comp, .. } => *comp,
            Move::Bigon { comp, .. } => *comp,
        };
        per_comp.entry(comp).or_default().push(mv);
    }
    for (comp, mvs) in per_comp {
        let n = sys.comps()[comp].len();
        let mut drop = vec![false; n];
        let mut insert_at: BTreeMap<usize, Vec<Passage>> = BTreeMap::new();
        for mv in mvs {
            match mv {
                Move::Backtrack { i, .. } => {
                    drop[i] = true;
                    drop[(i + 1) % n] = true;
                }
                Move::Monogon { range, .. } => {
                    for i in range.indices(n) {
                        drop[i] = true;
                    }
                }
                Move::Bigon {
                    range, replacement, ..
                } => {
                    for i in range.indices(n) {
                        drop[i] = true;
                    }
                    insert_at.insert(range.first, replacement);
                }
            }
        }
        let old = sys.comps()[comp].clone();
        let mut fresh: Vec<Passage> = Vec::with_capacity(n);
        for (i, p) in old.into_iter().enumerate() {
            if let Some(rep) = insert_at.remove(&i) {
                fresh.extend(rep);
            }
            if !drop[i] {
                fresh.push(p);
            }
        }
        for (_, rep) in insert_at {
            fresh.extend(rep);
        }
        assert!(!fresh.is_empty(), "components stay essential");
        sys.comps_mut()[comp] = fresh;
    }
}
