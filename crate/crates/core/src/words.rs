//! Words over the edge-crossing generators of a cellulation.
//!
//! A letter is an oriented crossing of one edge class. Punctured
//! surfaces have free fundamental group on these generators; closed
//! surfaces carry a single vertex-link relator, short enough that the
//! classical greedy relator-replacement algorithm decides the word
//! problem (the relator has no repeated 2-letter subword, so every
//! piece has length 1).

use serde::{Deserialize, Serialize};

/// One oriented edge crossing: `gen` is the edge class, `sign` is +1 for
/// crossing out through the positive side, -1 for the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: u32,
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: u32, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            sign: -self.sign,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign == -other.sign
    }
}

/// Freely reduce a linear word.
pub fn free_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last().is_some_and(|&last| last.cancels(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Freely and cyclically reduce a word (conjugacy-class representative).
pub fn cyclic_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w.first().unwrap().cancels(*w.last().unwrap()) {
        w.pop();
        w.remove(0);
    }
    w
}

pub fn invert(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// Smallest period of a cyclic word; the word is `root^(len/period)`.
pub fn primitive_period(word: &[Letter]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    'outer: for p in 1..=n {
        if n % p != 0 {
            continue;
        }
        for i in p..n {
            if word[i] != word[i - p] {
                continue 'outer;
            }
        }
        return p;
    }
    n
}

/// Whether cyclic word `a` is a rotation of cyclic word `b`.
pub fn is_rotation(a: &[Letter], b: &[Letter]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|r| (0..a.len()).all(|i| a[i] == b[(i + r) % b.len()]))
}

/// Whether the cyclically reduced word `w` is conjugate to a nonzero
/// power of the cyclically reduced word `p`, in a free group.
pub fn is_conjugate_power(w: &[Letter], p: &[Letter]) -> bool {
    if w.is_empty() || p.is_empty() {
        return false;
    }
    if w.len() % p.len() != 0 {
        return false;
    }
    let k = w.len() / p.len();
    let fwd: Vec<Letter> = p.iter().cycle().take(p.len() * k).copied().collect();
    let bwd = invert(&fwd);
    is_rotation(w, &fwd) || is_rotation(w, &bwd)
}

/// Greedy relator-replacement solver for the word problem in a
/// one-relator group whose relator satisfies the small-cancellation
/// condition checked by [`Dehn::new`].
#[derive(Debug, Clone)]
pub struct Dehn {
    /// All rotations of the relator and of its inverse.
    rotations: Vec<Vec<Letter>>,
    relator_len: usize,
}

impl Dehn {
    /// Builds the solver, asserting that the maximal piece (common
    /// prefix of two distinct symmetrized rotations) is shorter than a
    /// sixth of the relator. Our vertex-link relators have pieces of
    /// length 1, so this holds whenever the relator is longer than 6.
    pub fn new(relator: &[Letter]) -> Self {
        let r = cyclic_reduce(relator);
        let n = r.len();
        assert!(n > 6, "relator too short for greedy replacement");
        let mut rotations = Vec::with_capacity(2 * n);
        for base in [r.clone(), invert(&r)] {
            for s in 0..n {
                let mut rot: Vec<Letter> = base[s..].to_vec();
                rot.extend_from_slice(&base[..s]);
                rotations.push(rot);
            }
        }
        // max piece length: longest common prefix over distinct rotations
        let mut max_piece = 0usize;
        for i in 0..rotations.len() {
            for j in (i + 1)..rotations.len() {
                if rotations[i] == rotations[j] {
                    continue;
                }
                let mut l = 0;
                while l < n && rotations[i][l] == rotations[j][l] {
                    l += 1;
                }
                max_piece = max_piece.max(l);
            }
        }
        assert!(
            6 * max_piece < n,
            "relator is not C'(1/6): piece {max_piece}, length {n}"
        );
        Dehn {
            rotations,
            relator_len: n,
        }
    }

    /// One replacement pass: find a subword longer than half the relator
    /// matching a prefix of some rotation, swap it for the inverse of the
    /// rotation's complement. Returns true if a replacement happened.
    fn step(&self, w: &mut Vec<Letter>) -> bool {
        let half = self.relator_len / 2;
        for start in 0..w.len() {
            for rot in &self.rotations {
                let mut l = 0;
                while start + l < w.len() && l < self.relator_len && w[start + l] == rot[l] {
                    l += 1;
                }
                if l > half {
                    // rot = matched * rest, so matched = rest^{-1} in the group
                    let replacement = invert(&rot[l..]);
                    let mut next =
                        Vec::with_capacity(w.len() - l + replacement.len());
                    next.extend_from_slice(&w[..start]);
                    next.extend_from_slice(&replacement);
                    next.extend_from_slice(&w[start + l..]);
                    *w = free_reduce(&next);
                    return true;
                }
            }
        }
        false
    }

    /// Fully reduced form of a linear word (empty iff trivial).
    pub fn reduce(&self, word: &[Letter]) -> Vec<Letter> {
        let mut w = free_reduce(word);
        while self.step(&mut w) {}
        w
    }

    pub fn is_trivial(&self, word: &[Letter]) -> bool {
        self.reduce(word).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(gen: u32, sign: i8) -> Letter {
        Letter::new(gen, sign)
    }

    fn commutator_pair_relator() -> Vec<Letter> {
        // [x0, x1][x2, x3], the shape of a genus-2 vertex link
        vec![
            l(0, 1),
            l(1, 1),
            l(0, -1),
            l(1, -1),
            l(2, 1),
            l(3, 1),
            l(2, -1),
            l(3, -1),
        ]
    }

    #[test]
    fn free_reduction() {
        let w = vec![l(0, 1), l(1, 1), l(1, -1), l(0, -1), l(2, 1)];
        assert_eq!(free_reduce(&w), vec![l(2, 1)]);
        assert_eq!(cyclic_reduce(&[l(0, 1), l(1, 1), l(1, -1)]), vec![l(0, 1)]);
        // cyclic reduction peels matched ends
        let w = vec![l(3, -1), l(0, 1), l(1, 1), l(3, 1)];
        assert_eq!(cyclic_reduce(&w), vec![l(0, 1), l(1, 1)]);
    }

    #[test]
    fn primitive_period_detects_powers() {
        let u = vec![l(0, 1), l(1, -1)];
        let mut w = u.clone();
        w.extend_from_slice(&u);
        w.extend_from_slice(&u);
        assert_eq!(primitive_period(&w), 2);
        assert_eq!(primitive_period(&u), 2);
        let prim = vec![l(0, 1), l(1, -1), l(0, 1)];
        assert_eq!(primitive_period(&prim), 3);
    }

    #[test]
    fn conjugate_power_detection() {
        let p = vec![l(4, 1)];
        let w = vec![l(4, 1), l(4, 1)];
        assert!(is_conjugate_power(&w, &p));
        let w = vec![l(4, -1)];
        assert!(is_conjugate_power(&w, &p));
        let w = vec![l(4, 1), l(3, 1)];
        assert!(!is_conjugate_power(&w, &p));
    }

    #[test]
    fn dehn_kills_relator_and_conjugates() {
        let r = commutator_pair_relator();
        let dehn = Dehn::new(&r);
        assert!(dehn.is_trivial(&r));
        assert!(dehn.is_trivial(&invert(&r)));
        // conjugate g r g^{-1}
        let mut w = vec![l(2, -1), l(0, 1)];
        w.extend_from_slice(&r);
        w.extend(invert(&[l(2, -1), l(0, 1)]));
        assert!(dehn.is_trivial(&w));
        // r^2
        let mut w = r.clone();
        w.extend_from_slice(&r);
        assert!(dehn.is_trivial(&w));
    }

    #[test]
    fn dehn_keeps_nontrivial_words() {
        let dehn = Dehn::new(&commutator_pair_relator());
        assert!(!dehn.is_trivial(&[l(0, 1)]));
        assert!(!dehn.is_trivial(&[l(0, 1), l(1, 1)]));
        // commutator of the first pair alone is nontrivial in genus 2
        let half = vec![l(0, 1), l(1, 1), l(0, -1), l(1, -1)];
        assert!(!dehn.is_trivial(&half));
    }
}
