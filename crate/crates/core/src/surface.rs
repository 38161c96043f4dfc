use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Genus/puncture signature of an orientable finite-type surface.
///
/// Construction rejects sporadic signatures: every value of this type
/// satisfies `omega() > 0`, which in turn forces `chi() <= -2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSig {
    genus: u32,
    punctures: u32,
}

impl SurfaceSig {
    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        let sig = SurfaceSig { genus, punctures };
        if sig.omega() <= 0 {
            return Err(Error::Sporadic {
                genus,
                punctures,
                omega: sig.omega(),
            });
        }
        // omega > 0 forces chi <= -2 for integer (g, n)
        debug_assert!(sig.chi() <= -2);
        Ok(sig)
    }

    /// Closed surface of the given genus (g >= 2).
    pub fn closed(genus: u32) -> Result<Self> {
        Self::new(genus, 0)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn is_closed(&self) -> bool {
        self.punctures == 0
    }

    /// Euler characteristic 2 - 2g - n; strictly negative.
    pub fn chi(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.punctures as i64
    }

    /// |chi|, at least 2 for every non-sporadic signature.
    pub fn chi_abs(&self) -> u64 {
        (-self.chi()) as u64
    }

    /// Complexity 3g + n - 4; strictly positive (non-sporadic).
    pub fn omega(&self) -> i64 {
        3 * self.genus as i64 + self.punctures as i64 - 4
    }
}

impl std::fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S_{{{},{}}}", self.genus, self.punctures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_sporadic_signatures() {
        for (g, n) in [(0, 0), (0, 4), (1, 0), (1, 1), (0, 3), (0, 1)] {
            assert!(SurfaceSig::new(g, n).is_err(), "({g},{n}) should be sporadic");
        }
    }

    #[test]
    fn accepts_non_sporadic_and_derives_chi_omega() {
        let s = SurfaceSig::new(2, 0).unwrap();
        assert_eq!(s.chi(), -2);
        assert_eq!(s.omega(), 2);

        let s = SurfaceSig::new(0, 5).unwrap();
        assert_eq!(s.chi(), -3);
        assert_eq!(s.omega(), 1);

        let s = SurfaceSig::new(1, 2).unwrap();
        assert_eq!(s.chi(), -2);
        assert_eq!(s.omega(), 1);
    }

    #[test]
    fn chi_abs_is_at_least_two() {
        for g in 0..40u32 {
            for n in 0..40u32 {
                if let Ok(s) = SurfaceSig::new(g, n) {
                    assert!(s.chi_abs() >= 2);
                }
            }
        }
    }
}
