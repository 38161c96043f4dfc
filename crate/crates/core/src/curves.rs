//! Combinatorial closed curves: cyclic edge-crossing sequences with
//! exact rational positions, supporting minimal position, intersection
//! numbers, complement classification, and Dehn twists.

use crate::arrangement::{other_chord, param_on, Arrangement};
use crate::cellulation::{Cellulation, SideId};
use crate::geom::{rat, Rat};
use crate::regions::{regions_of, Region};
use crate::words::{cyclic_reduce, primitive_period, Letter};
use crate::{Error, Result};
use num::BigRational;
use std::collections::BTreeMap;
use std::sync::Arc;

/// One transverse crossing of an edge: `dir = +1` leaves through the
/// edge's positive side; `pos` is the exact coordinate of the crossing
/// point along the positive side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Passage {
    pub edge: usize,
    pub dir: i8,
    pub pos: Rat,
}

impl Passage {
    pub fn letter(&self) -> Letter {
        Letter::new(self.edge as u32, self.dir)
    }
}

fn one() -> Rat {
    BigRational::from_integer(1.into())
}

/// Face-local coordinate of an edge point seen from one of its sides.
pub fn point_on_side(cell: &Cellulation, side: SideId, pos: &Rat) -> Rat {
    if cell.sides[side].positive {
        pos.clone()
    } else {
        one() - pos
    }
}

/// A closed curve in general position with respect to the cellulation.
#[derive(Debug, Clone)]
pub struct CombCurve {
    cell: Arc<Cellulation>,
    passages: Vec<Passage>,
    simple: bool,
    multiplicity: usize,
}

impl CombCurve {
    pub fn cell(&self) -> &Arc<Cellulation> {
        &self.cell
    }

    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    /// Whether the curve is embedded: no essential self-crossings and
    /// not a proper power.
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// The cyclic crossing word.
    pub fn word(&self) -> Vec<Letter> {
        self.passages.iter().map(|p| p.letter()).collect()
    }

    /// Lexicographically least rotation of the crossing word or its
    /// inverse. Equal canonical words imply isotopic curves.
    pub fn canonical_word(&self) -> Vec<Letter> {
        canonical_cyclic(&self.word())
    }

    /// Crossing word rendered with edge names, upper case for reversed
    /// crossings.
    pub fn display_word(&self) -> String {
        self.passages
            .iter()
            .map(|p| {
                let name = &self.cell.edge_names[p.edge];
                if p.dir > 0 {
                    name.clone()
                } else {
                    name.to_uppercase()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub(crate) fn from_parts(
        cell: Arc<Cellulation>,
        passages: Vec<Passage>,
        simple: bool,
        multiplicity: usize,
    ) -> CombCurve {
        CombCurve {
            cell,
            passages,
            simple,
            multiplicity,
        }
    }
}

pub fn canonical_cyclic(word: &[Letter]) -> Vec<Letter> {
    let w = cyclic_reduce(word);
    if w.is_empty() {
        return w;
    }
    let mut best: Option<Vec<Letter>> = None;
    for base in [w.clone(), crate::words::invert(&w)] {
        for r in 0..base.len() {
            let rot: Vec<Letter> = base
                .iter()
                .cycle()
                .skip(r)
                .take(base.len())
                .copied()
                .collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// A jointly realized family of curves on one cellulation. Components
/// keep their identity through reduction.
#[derive(Debug, Clone)]
pub struct System {
    cell: Arc<Cellulation>,
    comps: Vec<Vec<Passage>>,
}

impl System {
    pub fn cell(&self) -> &Arc<Cellulation> {
        &self.cell
    }

    pub fn comps(&self) -> &[Vec<Passage>] {
        &self.comps
    }

    pub(crate) fn comps_mut(&mut self) -> &mut Vec<Vec<Passage>> {
        &mut self.comps
    }

    pub(crate) fn new_raw(cell: Arc<Cellulation>, comps: Vec<Vec<Passage>>) -> System {
        System { cell, comps }
    }

    /// Realize cyclic crossing words, positions assigned in occurrence
    /// order along each edge.
    pub fn from_letters(cell: &Arc<Cellulation>, words: &[&[Letter]]) -> System {
        let mut comps: Vec<Vec<Passage>> = words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|l| Passage {
                        edge: l.gen as usize,
                        dir: l.sign,
                        pos: rat(0, 1),
                    })
                    .collect()
            })
            .collect();
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        for comp in &comps {
            for p in comp {
                *counts.entry(p.edge).or_insert(0) += 1;
            }
        }
        let mut seen: BTreeMap<usize, i64> = BTreeMap::new();
        for comp in &mut comps {
            for p in comp.iter_mut() {
                let k = seen.entry(p.edge).or_insert(0);
                p.pos = rat(*k + 1, counts[&p.edge] + 1);
                *k += 1;
            }
        }
        System {
            cell: cell.clone(),
            comps,
        }
    }

    /// Merge already-realized curves into one transverse system,
    /// breaking exact position ties by list order.
    pub fn from_curves(curves: &[&CombCurve]) -> Result<System> {
        let cell = curves
            .first()
            .map(|c| c.cell.clone())
            .ok_or_else(|| Error::Input("empty curve list".into()))?;
        if !curves.iter().all(|c| Arc::ptr_eq(&c.cell, &cell)) {
            return Err(Error::SurfaceMismatch);
        }
        let mut sys = System {
            cell,
            comps: curves.iter().map(|c| c.passages.clone()).collect(),
        };
        sys.respace();
        Ok(sys)
    }

    fn respace(&mut self) {
        let mut per_edge: BTreeMap<usize, Vec<(Rat, usize, usize)>> = BTreeMap::new();
        for (ci, comp) in self.comps.iter().enumerate() {
            for (pi, p) in comp.iter().enumerate() {
                per_edge
                    .entry(p.edge)
                    .or_default()
                    .push((p.pos.clone(), ci, pi));
            }
        }
        for pts in per_edge.values_mut() {
            pts.sort();
            let m = pts.len() as i64;
            for (i, (_, ci, pi)) in pts.iter().enumerate() {
                self.comps[*ci][*pi].pos = rat(i as i64 + 1, m + 1);
            }
        }
    }

    /// Respace all positions to small rationals, preserving strict order.
    pub fn renormalize(&mut self) {
        let mut per_edge: BTreeMap<usize, Vec<(Rat, usize, usize)>> = BTreeMap::new();
        for (ci, comp) in self.comps.iter().enumerate() {
            for (pi, p) in comp.iter().enumerate() {
                per_edge
                    .entry(p.edge)
                    .or_default()
                    .push((p.pos.clone(), ci, pi));
            }
        }
        for pts in per_edge.values_mut() {
            pts.sort();
            for w in pts.windows(2) {
                assert!(w[0].0 < w[1].0, "edge positions must be distinct");
            }
            let m = pts.len() as i64;
            for (i, (_, ci, pi)) in pts.iter().enumerate() {
                self.comps[*ci][*pi].pos = rat(i as i64 + 1, m + 1);
            }
        }
    }

    pub fn word(&self, comp: usize) -> Vec<Letter> {
        self.comps[comp].iter().map(|p| p.letter()).collect()
    }

    /// Extract one component as a standalone curve, keeping the joint
    /// positions so families produced together stay transverse.
    pub fn extract(&self, comp: usize) -> CombCurve {
        let arr = Arrangement::build(self);
        self.extract_with(comp, &arr)
    }

    pub(crate) fn extract_with(&self, comp: usize, arr: &Arrangement) -> CombCurve {
        let selfx = arr.crossings_between(comp, comp);
        let word = cyclic_reduce(&self.word(comp));
        let period = primitive_period(&word);
        let mult = if period == 0 { 1 } else { word.len() / period };
        CombCurve {
            cell: self.cell.clone(),
            passages: self.comps[comp].clone(),
            simple: selfx == 0 && mult <= 1,
            multiplicity: mult.max(1),
        }
    }
}

/// Parse a word over the surface's named generators into a reduced,
/// essential combinatorial curve.
pub fn parse_curve(cell: &Arc<Cellulation>, word: &str) -> Result<CombCurve> {
    let letters = cell.parse_word(word)?;
    let cyc = cyclic_reduce(&letters);
    if cyc.is_empty() || cell.word_is_null(&cyc) {
        return Err(Error::Nullhomotopic(word.trim().to_string()));
    }
    if cell.word_is_peripheral(&cyc) {
        return Err(Error::Peripheral(word.trim().to_string()));
    }
    let mut sys = System::from_letters(cell, &[&cyc]);
    sys.reduce();
    Ok(sys.extract(0))
}

/// Two curve representatives with no removable crossings between them.
#[derive(Debug, Clone)]
pub struct MinimalPair {
    pub first: CombCurve,
    pub second: CombCurve,
    pub crossings: u64,
}

/// Put two curves in minimal position. Self-application is allowed and
/// counts crossings of two parallel copies.
pub fn minimal_position(x: &CombCurve, y: &CombCurve) -> Result<MinimalPair> {
    let mut sys = System::from_curves(&[x, y])?;
    sys.reduce();
    let arr = Arrangement::build(&sys);
    let crossings = arr.crossings_between(0, 1);
    Ok(MinimalPair {
        first: sys.extract_with(0, &arr),
        second: sys.extract_with(1, &arr),
        crossings,
    })
}

/// Geometric intersection number of the two isotopy classes.
pub fn intersection_number(x: &CombCurve, y: &CombCurve) -> Result<u64> {
    Ok(minimal_position(x, y)?.crossings)
}

/// Signed crossing count of the oriented classes. Homology-invariant,
/// so no reduction is needed.
pub fn algebraic_intersection(x: &CombCurve, y: &CombCurve) -> Result<i64> {
    let sys = System::from_curves(&[x, y])?;
    let arr = Arrangement::build(&sys);
    Ok(arr.algebraic_between(0, 1))
}

/// Whether the complement of the two curves consists of disks and
/// once-punctured disks only.
pub fn is_filling(x: &CombCurve, y: &CombCurve) -> Result<bool> {
    for c in [x, y] {
        if !c.is_simple() {
            return Err(Error::NotSimple(c.display_word()));
        }
    }
    let mut sys = System::from_curves(&[x, y])?;
    sys.reduce();
    let regs = regions_of(&sys);
    Ok(regs.iter().all(|r| r.chi == 1 && r.punctures <= 1))
}

/// Complement regions of a pair put in minimal position.
pub fn complement_regions(x: &CombCurve, y: &CombCurve) -> Result<Vec<Region>> {
    let mut sys = System::from_curves(&[x, y])?;
    sys.reduce();
    Ok(regions_of(&sys))
}

/// Whether two embedded essential curves are isotopic.
pub fn is_isotopic(x: &CombCurve, y: &CombCurve) -> Result<bool> {
    for c in [x, y] {
        if !c.is_simple() {
            return Err(Error::NotSimple(c.display_word()));
        }
    }
    if !Arc::ptr_eq(&x.cell, &y.cell) {
        return Err(Error::SurfaceMismatch);
    }
    if x.canonical_word() == y.canonical_word() {
        return Ok(true);
    }
    let mut sys = System::from_curves(&[x, y])?;
    sys.reduce();
    let arr = Arrangement::build(&sys);
    if arr.crossings_between(0, 1) > 0 {
        return Ok(false);
    }
    let regs = regions_of(&sys);
    Ok(regs.iter().any(|r| {
        r.chi == 0 && r.punctures == 0 && {
            let comps: Vec<usize> = r.boundary_sides.iter().map(|(c, _)| *c).collect();
            r.boundary_sides.len() == 2 && comps == vec![0, 1]
        }
    }))
}

/// Image of `x` under the `power`-th Dehn twist along the embedded
/// curve `c`.
///
/// Orientation convention: polygon boundaries run counterclockwise and
/// a positive twist acts on homology by `[x] + power * alg(x, c) * [c]`.
pub fn dehn_twist(c: &CombCurve, x: &CombCurve, power: i64) -> Result<CombCurve> {
    if !c.is_simple() {
        return Err(Error::NotSimple(c.display_word()));
    }
    if !Arc::ptr_eq(&c.cell, &x.cell) {
        return Err(Error::SurfaceMismatch);
    }
    if power == 0 {
        return Ok(x.clone());
    }
    let mut sys = System::from_curves(&[c, x])?;
    sys.reduce();
    let arr = Arrangement::build(&sys);
    if arr.crossings_between(0, 1) == 0 {
        return Ok(sys.extract_with(1, &arr));
    }
    let spliced = splice_twist(&sys, &arr, power);
    let mut out = System {
        cell: sys.cell.clone(),
        comps: vec![spliced],
    };
    out.renormalize();
    out.reduce();
    Ok(out.extract(0))
}

/// Build the twisted passage list. Component 0 of the system is the
/// twisting curve, component 1 the curve being twisted. At each
/// crossing the strand is rerouted along parallel copies of the full
/// twisting cycle; copies are nested by spiral progress so copies never
/// cross each other.
fn splice_twist(sys: &System, arr: &Arrangement, power: i64) -> Vec<Passage> {
    let cell = sys.cell().clone();
    let c_comp = sys.comps()[0].clone();
    let x_comp = sys.comps()[1].clone();
    let clen = c_comp.len();
    let n_abs = power.unsigned_abs() as usize;

    // smallest spacing on each edge, for collision-free offsets
    let mut edge_gap: BTreeMap<usize, Rat> = BTreeMap::new();
    {
        let mut per_edge: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
        for comp in sys.comps() {
            for p in comp {
                per_edge.entry(p.edge).or_default().push(p.pos.clone());
            }
        }
        for (e, mut pts) in per_edge {
            pts.sort();
            let mut gap = pts[0].clone().min(one() - pts.last().unwrap().clone());
            for w in pts.windows(2) {
                let d = w[1].clone() - &w[0];
                if d < gap {
                    gap = d;
                }
            }
            edge_gap.insert(e, gap);
        }
    }

    // insertion sites: crossings of x chords with c chords, walk order
    struct Site {
        x_pidx: usize,
        param: Rat,
        c_pidx: usize,
        c_param: Rat,
        dir: i8,
        side: i8,
    }
    let mut sites: Vec<Site> = Vec::new();
    for pi in 0..x_comp.len() {
        let xch = arr.chord_of[1][pi];
        for &cr_id in &arr.chord_crossings[xch] {
            let cr = &arr.crossings[cr_id];
            let cch = other_chord(cr, xch);
            debug_assert_eq!(arr.chords[cch].comp, 0, "both curves are embedded");
            let sign_cx = if arr.chords[cr.chord_a].comp == 0 {
                cr.sign
            } else {
                -cr.sign
            };
            // drag orientation depends on the crossing direction
            let dir = if power > 0 { sign_cx } else { -sign_cx };
            // the copies run on the side of c the strand approaches from
            let side = crate::geom::side_of(
                &arr.coords[arr.chords[cch].from],
                &arr.coords[arr.chords[cch].to],
                &arr.coords[arr.chords[xch].from],
            );
            debug_assert!(side != 0);
            sites.push(Site {
                x_pidx: pi,
                param: param_on(cr, xch).clone(),
                c_pidx: arr.chords[cch].pidx,
                c_param: param_on(cr, cch).clone(),
                dir,
                side,
            });
        }
    }

    // one copy per (site, wrap, step), keyed by spiral progress
    struct CopyRef {
        site: usize,
        slot: usize,
        c_pidx: usize,
        progress: Rat,
    }
    let mut copies: Vec<CopyRef> = Vec::new();
    for (si, site) in sites.iter().enumerate() {
        for w in 0..n_abs {
            for step in 0..clen {
                let (c_pidx, frac) = if site.dir > 0 {
                    ((site.c_pidx + 1 + step) % clen, one() - &site.c_param)
                } else {
                    ((site.c_pidx + clen - step) % clen, site.c_param.clone())
                };
                copies.push(CopyRef {
                    site: si,
                    slot: w * clen + step,
                    c_pidx,
                    progress: rat((w * clen + step) as i64, 1) + frac,
                });
            }
        }
    }

    // deeper progress sits closer to the twisting strand
    let mut offsets: Vec<Rat> = vec![rat(0, 1); copies.len()];
    {
        let mut by_passage: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in copies.iter().enumerate() {
            by_passage.entry(c.c_pidx).or_default().push(i);
        }
        for (c_pidx, mut list) in by_passage {
            list.sort_by(|&i, &j| copies[i].progress.cmp(&copies[j].progress));
            let count = list.len() as i64;
            let gap = &edge_gap[&c_comp[c_pidx].edge];
            let unit = gap / BigRational::from_integer((2 * (count + 1)).into());
            for (rank, &i) in list.iter().enumerate() {
                offsets[i] = &unit * BigRational::from_integer((count - rank as i64).into());
            }
        }
    }

    // displacing leftward along the twisting strand adds face parameter
    // at a chord end; convert to edge coordinates per side orientation
    let exit_sign: Vec<i8> = (0..clen)
        .map(|pidx| {
            let p = &c_comp[pidx];
            let (pos_side, neg_side) = cell.edges[p.edge];
            let exit_side = if p.dir > 0 { pos_side } else { neg_side };
            if cell.sides[exit_side].positive {
                1
            } else {
                -1
            }
        })
        .collect();

    let mut blocks: Vec<Vec<Passage>> = sites
        .iter()
        .map(|_| Vec::with_capacity(n_abs * clen))
        .collect();
    {
        // fill blocks in slot order
        let mut by_site: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in copies.iter().enumerate() {
            by_site.entry(c.site).or_default().push(i);
        }
        for (si, mut list) in by_site {
            list.sort_by_key(|&i| copies[i].slot);
            for &i in &list {
                let cref = &copies[i];
                let orig = &c_comp[cref.c_pidx];
                let site = &sites[si];
                let sgn = BigRational::from_integer(
                    ((site.side * exit_sign[cref.c_pidx]) as i64).into(),
                );
                blocks[si].push(Passage {
                    edge: orig.edge,
                    dir: orig.dir * site.dir,
                    pos: orig.pos.clone() + sgn * &offsets[i],
                });
            }
        }
    }

    // assemble: walk x, appending blocks at crossings in chord order
    let mut site_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (si, s) in sites.iter().enumerate() {
        site_order.entry(s.x_pidx).or_default().push(si);
    }
    for list in site_order.values_mut() {
        list.sort_by(|&i, &j| sites[i].param.cmp(&sites[j].param));
    }
    let mut out: Vec<Passage> = Vec::new();
    for (pi, p) in x_comp.iter().enumerate() {
        out.push(p.clone());
        if let Some(list) = site_order.get(&pi) {
            for &si in list {
                out.extend(blocks[si].iter().cloned());
            }
        }
    }
    out
}
