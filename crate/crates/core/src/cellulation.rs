//! Polygonal cell structures on surfaces.
//!
//! A base surface is a single polygon with a fixed-point-free
//! side-pairing involution: the canonical 4g-gon for closed surfaces,
//! and a 2(2g+n-1)-gon whose n vertex classes are the punctures in the
//! punctured case. Covering surfaces reuse the machinery with one
//! polygon per sheet.
//!
//! Curves cross sides transversally and never pass through vertices, so
//! a closed curve is described by the cyclic sequence of sides it
//! crosses; the free group on edge classes (one relator per closed base)
//! is the fundamental group based at the polygon interior.

use crate::words::{cyclic_reduce, free_reduce, is_conjugate_power, Dehn, Letter};
use crate::{Error, Result, SurfaceSig};
use std::collections::BTreeMap;
use std::sync::Arc;

pub type SideId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;
pub type VertexId = usize;

#[derive(Debug, Clone)]
pub struct Side {
    pub face: FaceId,
    /// Position of this side along its face boundary, counterclockwise.
    pub index_in_face: usize,
    pub pair: SideId,
    pub edge: EdgeId,
    /// Whether this is the edge's positive side (edge coordinates run
    /// along the positive side's counterclockwise direction).
    pub positive: bool,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    /// Corners in this class, as (face, corner index) pairs. Corner i of
    /// a face sits between boundary sides i-1 and i.
    pub corners: Vec<(FaceId, usize)>,
    pub puncture: bool,
    /// Word read by a small loop around this vertex.
    pub link: Vec<Letter>,
}

/// A named generator of the surface's fundamental group, expressed as a
/// word in edge crossings.
#[derive(Debug, Clone)]
pub struct UserGen {
    pub name: String,
    pub word: Vec<Letter>,
}

#[derive(Debug, Clone)]
enum Topology {
    ClosedBase { dehn: Dehn },
    PuncturedBase,
    Cover {
        base: Arc<Cellulation>,
        /// Base edge class of each cover edge.
        edge_to_base: Vec<EdgeId>,
    },
}

#[derive(Debug, Clone)]
pub struct Cellulation {
    pub sig: SurfaceSig,
    /// Boundary sides of each face, counterclockwise.
    pub faces: Vec<Vec<SideId>>,
    pub sides: Vec<Side>,
    /// (positive side, negative side) per edge class.
    pub edges: Vec<(SideId, SideId)>,
    pub edge_names: Vec<String>,
    pub vertices: Vec<Vertex>,
    /// Vertex class of each (face, corner) pair, keyed by face then corner.
    corner_vertex: Vec<Vec<VertexId>>,
    /// Named generators usable in curve words; empty on covers.
    pub user_gens: Vec<UserGen>,
    topology: Topology,
}

impl Cellulation {
    /// Canonical one-polygon cellulation of the surface with the given
    /// signature. Closed: the 4g-gon `a1 b1 A1 B1 ...` with one vertex.
    /// Punctured: `a1 b1 A1 B1 ... c1 C1 ... c(n-1) C(n-1)` whose n
    /// vertex classes are all punctures.
    pub fn new(sig: SurfaceSig) -> Arc<Cellulation> {
        let g = sig.genus() as usize;
        let n = sig.punctures() as usize;

        // boundary word of the polygon: per-side (edge, positive?)
        let mut sides_spec: Vec<(usize, bool)> = Vec::new();
        let mut edge_names = Vec::new();
        for i in 0..g {
            let ea = edge_names.len();
            edge_names.push(format!("a{}", i + 1));
            let eb = edge_names.len();
            edge_names.push(format!("b{}", i + 1));
            sides_spec.push((ea, true));
            sides_spec.push((eb, true));
            sides_spec.push((ea, false));
            sides_spec.push((eb, false));
        }
        if n > 0 {
            for j in 0..n.saturating_sub(1) {
                let ec = edge_names.len();
                edge_names.push(format!("c{}", j + 1));
                sides_spec.push((ec, true));
                sides_spec.push((ec, false));
            }
        }
        let k = sides_spec.len();
        assert!(k >= 4, "non-sporadic surfaces have at least a 4-gon");

        let mut edges = vec![(usize::MAX, usize::MAX); edge_names.len()];
        for (s, &(e, positive)) in sides_spec.iter().enumerate() {
            if positive {
                edges[e].0 = s;
            } else {
                edges[e].1 = s;
            }
        }
        let sides: Vec<Side> = sides_spec
            .iter()
            .enumerate()
            .map(|(s, &(e, positive))| Side {
                face: 0,
                index_in_face: s,
                pair: if positive { edges[e].1 } else { edges[e].0 },
                edge: e,
                positive,
            })
            .collect();
        let faces = vec![(0..k).collect::<Vec<_>>()];

        let mut cell = Cellulation {
            sig,
            faces,
            sides,
            edges,
            edge_names,
            vertices: Vec::new(),
            corner_vertex: Vec::new(),
            user_gens: Vec::new(),
            topology: Topology::PuncturedBase, // placeholder
        };
        cell.compute_vertices();

        if n == 0 {
            assert_eq!(cell.vertices.len(), 1, "closed polygon must have one vertex");
            let relator = cell.vertices[0].link.clone();
            cell.topology = Topology::ClosedBase {
                dehn: Dehn::new(&relator),
            };
        } else {
            assert_eq!(cell.vertices.len(), n, "punctured polygon must have n vertices");
            for v in &mut cell.vertices {
                v.puncture = true;
            }
            cell.topology = Topology::PuncturedBase;
        }
        cell.build_user_gens();
        cell.check_euler();
        Arc::new(cell)
    }

    /// Cellulation of a covering surface: one polygon per sheet, side
    /// pairings twisted by the permutations `perm[edge]` (applied when
    /// crossing out through the positive side).
    pub(crate) fn cover(
        base: &Arc<Cellulation>,
        degree: usize,
        perm: &[Vec<usize>],
        sig: SurfaceSig,
    ) -> Arc<Cellulation> {
        assert_eq!(base.faces.len(), 1, "covers are built over base surfaces");
        let base_k = base.sides.len();
        let mut inv = vec![vec![0; degree]; perm.len()];
        for (e, p) in perm.iter().enumerate() {
            for (i, &pi) in p.iter().enumerate() {
                inv[e][pi] = i;
            }
        }

        // side (s, sheet) gets id sheet * base_k + s
        let mut sides = Vec::with_capacity(degree * base_k);
        let mut edges = Vec::new();
        let mut edge_to_base = Vec::new();
        let mut edge_names = Vec::new();
        let mut edge_of_side = vec![usize::MAX; degree * base_k];
        for sheet in 0..degree {
            for s in 0..base_k {
                let id = sheet * base_k + s;
                if edge_of_side[id] != usize::MAX {
                    continue;
                }
                let bs = &base.sides[s];
                // crossing out through s from `sheet` lands on the paired
                // side in the permuted sheet
                let target_sheet = if bs.positive {
                    perm[bs.edge][sheet]
                } else {
                    inv[bs.edge][sheet]
                };
                let pair_id = target_sheet * base_k + bs.pair;
                let e = edges.len();
                let (pos_id, neg_id) = if bs.positive {
                    (id, pair_id)
                } else {
                    (pair_id, id)
                };
                edges.push((pos_id, neg_id));
                edge_to_base.push(bs.edge);
                edge_names.push(format!("{}~{}", base.edge_names[bs.edge], sheet));
                edge_of_side[id] = e;
                edge_of_side[pair_id] = e;
            }
        }
        for sheet in 0..degree {
            for s in 0..base_k {
                let id = sheet * base_k + s;
                let e = edge_of_side[id];
                let (pos_id, neg_id) = edges[e];
                let positive = pos_id == id;
                sides.push(Side {
                    face: sheet,
                    index_in_face: s,
                    pair: if positive { neg_id } else { pos_id },
                    edge: e,
                    positive,
                });
            }
        }
        let faces: Vec<Vec<SideId>> = (0..degree)
            .map(|sheet| (0..base_k).map(|s| sheet * base_k + s).collect())
            .collect();

        let mut cell = Cellulation {
            sig,
            faces,
            sides,
            edges,
            edge_names,
            vertices: Vec::new(),
            corner_vertex: Vec::new(),
            user_gens: Vec::new(),
            topology: Topology::Cover {
                base: base.clone(),
                edge_to_base,
            },
        };
        cell.compute_vertices();
        // a cover vertex is a puncture iff it lies over a base puncture
        for v in &mut cell.vertices {
            let (_, corner) = v.corners[0];
            let base_vertex = base.corner_vertex[0][corner];
            v.puncture = base.vertices[base_vertex].puncture;
        }
        cell.check_euler();
        Arc::new(cell)
    }

    fn compute_vertices(&mut self) {
        let mut corner_vertex: Vec<Vec<Option<VertexId>>> = self
            .faces
            .iter()
            .map(|f| vec![None; f.len()])
            .collect();
        let mut vertices = Vec::new();
        for f0 in 0..self.faces.len() {
            for c0 in 0..self.faces[f0].len() {
                if corner_vertex[f0][c0].is_some() {
                    continue;
                }
                let vid = vertices.len();
                let mut corners = Vec::new();
                let mut link = Vec::new();
                let (mut f, mut c) = (f0, c0);
                loop {
                    corner_vertex[f][c] = Some(vid);
                    corners.push((f, c));
                    // cross the side ending at this corner
                    let k = self.faces[f].len();
                    let s = self.faces[f][(c + k - 1) % k];
                    let side = &self.sides[s];
                    link.push(Letter::new(
                        side.edge as u32,
                        if side.positive { 1 } else { -1 },
                    ));
                    let t = side.pair;
                    f = self.sides[t].face;
                    c = self.sides[t].index_in_face;
                    if (f, c) == (f0, c0) {
                        break;
                    }
                }
                vertices.push(Vertex {
                    corners,
                    puncture: false,
                    link,
                });
            }
        }
        self.vertices = vertices;
        self.corner_vertex = corner_vertex
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.unwrap()).collect())
            .collect();
    }

    fn check_euler(&self) {
        let v = self.vertices.len() as i64;
        let e = self.edges.len() as i64;
        let f = self.faces.len() as i64;
        let closed_chi = v - e + f;
        let punctures = self.vertices.iter().filter(|v| v.puncture).count() as i64;
        assert_eq!(
            closed_chi - punctures,
            self.sig.chi(),
            "cell structure must realize chi"
        );
    }

    /// Named generators: `a_i -> (b_i edge crossed backwards)`,
    /// `b_i -> (a_i edge crossed forwards)`, plus puncture loops. The
    /// assignment is chosen so that the standard-generator relator maps
    /// to a word trivial in the one-relator group; this is asserted.
    fn build_user_gens(&mut self) {
        let g = self.sig.genus() as usize;
        let n = self.sig.punctures() as usize;
        let mut gens = Vec::new();
        let edge_by_name: BTreeMap<&str, usize> = self
            .edge_names
            .iter()
            .enumerate()
            .map(|(e, s)| (s.as_str(), e))
            .collect();
        for i in 0..g {
            let ea = edge_by_name[format!("a{}", i + 1).as_str()] as u32;
            let eb = edge_by_name[format!("b{}", i + 1).as_str()] as u32;
            gens.push(UserGen {
                name: format!("a{}", i + 1),
                word: vec![Letter::new(eb, -1)],
            });
            gens.push(UserGen {
                name: format!("b{}", i + 1),
                word: vec![Letter::new(ea, 1)],
            });
        }
        for j in 0..n.saturating_sub(1) {
            let ec = edge_by_name[format!("c{}", j + 1).as_str()] as u32;
            gens.push(UserGen {
                name: format!("c{}", j + 1),
                word: vec![Letter::new(ec, 1)],
            });
        }
        if n > 0 {
            // the last puncture loop is the link of the vertex class
            // containing corner 0 of the polygon
            let main = self.corner_vertex[0][0];
            gens.push(UserGen {
                name: format!("c{n}"),
                word: self.vertices[main].link.clone(),
            });
        }

        if let Topology::ClosedBase { dehn } = &self.topology {
            // the vertex link is the product of handle commutators in
            // descending handle order, so that is the relator our named
            // generators satisfy
            let relator = Self::commutator_relator(&gens, g);
            assert!(
                dehn.is_trivial(&relator),
                "generator assignment must satisfy the surface relator"
            );
        }
        self.user_gens = gens;
    }

    /// `[a_g, b_g][a_{g-1}, b_{g-1}] ... [a_1, b_1]` as a crossing word.
    /// This (and not the ascending product) is the identity on our
    /// polygon model; homomorphism checks must respect the order.
    fn commutator_relator(gens: &[UserGen], g: usize) -> Vec<Letter> {
        let mut relator = Vec::new();
        for i in (0..g).rev() {
            let a = &gens[2 * i].word;
            let b = &gens[2 * i + 1].word;
            relator.extend_from_slice(a);
            relator.extend_from_slice(b);
            relator.extend(crate::words::invert(a));
            relator.extend(crate::words::invert(b));
        }
        relator
    }

    pub fn is_closed_base(&self) -> bool {
        matches!(self.topology, Topology::ClosedBase { .. })
    }

    pub fn is_cover(&self) -> bool {
        matches!(self.topology, Topology::Cover { .. })
    }

    pub fn base(&self) -> Option<&Arc<Cellulation>> {
        match &self.topology {
            Topology::Cover { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Base edge class of an edge (identity on base surfaces).
    pub fn edge_base(&self, e: EdgeId) -> EdgeId {
        match &self.topology {
            Topology::Cover { edge_to_base, .. } => edge_to_base[e],
            _ => e,
        }
    }

    pub fn vertex_of_corner(&self, face: FaceId, corner: usize) -> VertexId {
        self.corner_vertex[face][corner]
    }

    /// Whether a crossing word is nullhomotopic. On covers the word is
    /// projected to the base, where the answer is the same because
    /// covering maps are injective on fundamental groups.
    pub fn word_is_null(&self, word: &[Letter]) -> bool {
        match &self.topology {
            Topology::ClosedBase { dehn } => dehn.is_trivial(word),
            Topology::PuncturedBase => free_reduce(word).is_empty(),
            Topology::Cover { base, edge_to_base } => {
                let projected: Vec<Letter> = word
                    .iter()
                    .map(|l| Letter::new(edge_to_base[l.gen as usize] as u32, l.sign))
                    .collect();
                base.word_is_null(&projected)
            }
        }
    }

    /// Whether a cyclic crossing word is conjugate to a nonzero power of
    /// a puncture loop. Meaningful on punctured base surfaces; closed
    /// surfaces have no peripheral classes.
    pub fn word_is_peripheral(&self, word: &[Letter]) -> bool {
        match &self.topology {
            Topology::ClosedBase { .. } => false,
            Topology::PuncturedBase => {
                let w = cyclic_reduce(word);
                self.vertices.iter().any(|v| {
                    let p = cyclic_reduce(&v.link);
                    is_conjugate_power(&w, &p)
                })
            }
            Topology::Cover { .. } => false,
        }
    }

    /// Look up a user generator by name.
    pub fn user_gen(&self, name: &str) -> Option<&UserGen> {
        self.user_gens.iter().find(|g| g.name == name)
    }

    /// Translate a whitespace-separated word over named generators
    /// (upper case = inverse) into a crossing word.
    pub fn parse_word(&self, word: &str) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        let mut any = false;
        for token in word.split_whitespace() {
            any = true;
            let lower = token.to_lowercase();
            let inverse = token != lower;
            if token.chars().next().is_some_and(|c| c.is_uppercase()) != inverse {
                return Err(Error::Input(format!("mixed-case token '{token}'")));
            }
            let gen = self
                .user_gen(&lower)
                .ok_or_else(|| Error::Input(format!("unknown generator '{token}'")))?;
            if inverse {
                out.extend(crate::words::invert(&gen.word));
            } else {
                out.extend_from_slice(&gen.word);
            }
        }
        if !any {
            return Err(Error::Input("empty word".into()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_genus_two_structure() {
        let cell = Cellulation::new(SurfaceSig::new(2, 0).unwrap());
        assert_eq!(cell.faces.len(), 1);
        assert_eq!(cell.sides.len(), 8);
        assert_eq!(cell.edges.len(), 4);
        assert_eq!(cell.vertices.len(), 1);
        assert!(cell.is_closed_base());
        assert_eq!(cell.vertices[0].link.len(), 8);
    }

    #[test]
    fn closed_generators_satisfy_relator_up_to_genus_six() {
        for g in 2..=6 {
            let _ = Cellulation::new(SurfaceSig::new(g, 0).unwrap());
        }
    }

    #[test]
    fn punctured_structures() {
        let cell = Cellulation::new(SurfaceSig::new(0, 5).unwrap());
        assert_eq!(cell.sides.len(), 8);
        assert_eq!(cell.vertices.len(), 5);
        assert!(cell.vertices.iter().all(|v| v.puncture));
        assert_eq!(cell.user_gens.len(), 5);

        let cell = Cellulation::new(SurfaceSig::new(1, 2).unwrap());
        assert_eq!(cell.sides.len(), 6);
        assert_eq!(cell.vertices.len(), 2);
        assert_eq!(cell.user_gens.len(), 4); // a1 b1 c1 c2
    }

    #[test]
    fn puncture_loops_are_peripheral() {
        let cell = Cellulation::new(SurfaceSig::new(0, 5).unwrap());
        for name in ["c1", "c2", "c3", "c4", "c5"] {
            let w = cell.parse_word(name).unwrap();
            assert!(
                cell.word_is_peripheral(&cyclic_reduce(&w)),
                "{name} must be peripheral"
            );
        }
        let w = cell.parse_word("c1 c2").unwrap();
        assert!(!cell.word_is_peripheral(&cyclic_reduce(&w)));
    }

    #[test]
    fn nullhomotopy_oracle() {
        let cell = Cellulation::new(SurfaceSig::new(2, 0).unwrap());
        let w = cell.parse_word("a1 A1").unwrap();
        assert!(cell.word_is_null(&w));
        let w = cell.parse_word("a1 b1 A1 B1 a2 b2 A2 B2").unwrap();
        assert!(cell.word_is_null(&w), "the defining relator is trivial");
        let w = cell.parse_word("a1 b1 A1 B1").unwrap();
        assert!(!cell.word_is_null(&w));
        let w = cell.parse_word("a1").unwrap();
        assert!(!cell.word_is_null(&w));
    }

    #[test]
    fn word_parsing_errors() {
        let cell = Cellulation::new(SurfaceSig::new(2, 0).unwrap());
        assert!(cell.parse_word("").is_err());
        assert!(cell.parse_word("x9").is_err());
        assert!(cell.parse_word("c1").is_err(), "no puncture loops when closed");
    }
}
