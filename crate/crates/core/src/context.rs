//! Cuspidal families and the ambient inner-form datum.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which Grothendieck ring a segment or element lives in: the split group
/// GL(n, F) or the inner form GL(r, D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    F,
    D,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::F => f.write_str("F"),
            Side::D => f.write_str("D"),
        }
    }
}

/// A twist orbit `{ν^a ρ}` of a cuspidal representation of GL(p, F),
/// optionally carrying the attached D-side cuspidal line.
///
/// Families compare, order and hash by name only; names are unique inside
/// one [`AlgebraContext`].
#[derive(Debug, Clone)]
pub struct CuspidalFamily {
    name: String,
    p: u64,
    s: Option<u64>,
    d: u64,
}

impl CuspidalFamily {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Degree of the F-side cuspidal.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Torsion number of the attached D-side cuspidal line.
    pub fn s(&self) -> Option<u64> {
        self.s
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Degree over D of the D-side cuspidal, `p·s/d`.
    pub fn t(&self) -> Option<u64> {
        self.s.map(|s| self.p * s / self.d)
    }

    pub fn has_d_side(&self) -> bool {
        self.s.is_some()
    }
}

impl PartialEq for CuspidalFamily {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for CuspidalFamily {}

impl PartialOrd for CuspidalFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CuspidalFamily {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name.cmp(&other.name)
    }
}

impl Hash for CuspidalFamily {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

pub type Family = Arc<CuspidalFamily>;

/// The inner form datum: `D` has dimension `d²` over `F`, together with the
/// declared cuspidal families.
#[derive(Debug, Clone)]
pub struct AlgebraContext {
    d: u64,
    families: Vec<Family>,
}

impl AlgebraContext {
    /// Validates and builds a context from `(name, p, s)` triples.
    pub fn new<S: Into<String>>(
        d: u64,
        families: impl IntoIterator<Item = (S, u64, Option<u64>)>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree);
        }
        let mut out: Vec<Family> = Vec::new();
        for (name, p, s) in families {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::InvalidFamily {
                    name,
                    reason: "empty name".into(),
                });
            }
            if out.iter().any(|f| f.name == name) {
                return Err(Error::DuplicateFamily(name));
            }
            if p == 0 {
                return Err(Error::InvalidFamily {
                    name,
                    reason: "p must be at least 1".into(),
                });
            }
            if let Some(s) = s {
                if s == 0 {
                    return Err(Error::InvalidFamily {
                        name,
                        reason: "s must be at least 1".into(),
                    });
                }
                if (p * s) % d != 0 {
                    return Err(Error::InvalidFamily {
                        name,
                        reason: format!("d = {d} does not divide p·s = {}", p * s),
                    });
                }
            }
            out.push(Arc::new(CuspidalFamily { name, p, s, d }));
        }
        out.sort();
        Ok(AlgebraContext { d, families: out })
    }

    /// The quaternion setting of the classic counterexample: `d = 2` and a
    /// single character family `rho` with `s = 2`.
    pub fn quaternion_default() -> Self {
        AlgebraContext::new(2, [("rho", 1, Some(2))]).expect("valid default context")
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Families sorted by name.
    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family(&self, name: &str) -> Result<&Family> {
        self.families
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_context_has_t_one() {
        let ctx = AlgebraContext::quaternion_default();
        let rho = ctx.family("rho").unwrap();
        assert_eq!(rho.t(), Some(1));
        assert_eq!(ctx.d(), 2);
    }

    #[test]
    fn rejects_bad_data() {
        assert_eq!(
            AlgebraContext::new(0, [("rho", 1, None)]).unwrap_err(),
            Error::InvalidDegree
        );
        assert!(matches!(
            AlgebraContext::new(2, [("rho", 1, Some(3))]),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            AlgebraContext::new(2, [("rho", 1, Some(2)), ("rho", 2, None)]),
            Err(Error::DuplicateFamily(_))
        ));
        assert!(matches!(
            AlgebraContext::new(1, [("x", 0, None)]),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn families_sorted_by_name() {
        let ctx = AlgebraContext::new(1, [("b", 1, None), ("a", 2, Some(1))]).unwrap();
        let names: Vec<_> = ctx.families().iter().map(|f| f.name()).collect();
        assert_eq!(names, ["a", "b"]);
        assert_eq!(
            ctx.family("c").unwrap_err(),
            Error::UnknownFamily("c".into())
        );
    }
}
