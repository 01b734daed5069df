//! Carriers and sentence sets.
//!
//! A sentence set is either finite or cofinite. On a finite carrier every set is stored
//! in finite form, so equality is structural.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single sentence. Finite carriers use `0..n`; countable carriers use the integers
/// they are named after.
pub type SentenceId = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Carrier {
    Finite(usize),
    /// `{1, 2, 3, ...}`
    NaturalsFrom1,
    /// `{0, 1, 2, ...}`
    Naturals,
    Integers,
}

impl Carrier {
    pub fn contains(&self, x: SentenceId) -> bool {
        match *self {
            Carrier::Finite(n) => x >= 0 && (x as u64) < n as u64,
            Carrier::NaturalsFrom1 => x >= 1,
            Carrier::Naturals => x >= 0,
            Carrier::Integers => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Carrier::Finite(_))
    }

    pub fn finite_size(&self) -> Option<usize> {
        match *self {
            Carrier::Finite(n) => Some(n),
            _ => None,
        }
    }

    fn check(&self, x: SentenceId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfCarrier { element: x.to_string(), carrier: self.to_string() })
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Finite(n) => write!(f, "finite({n})"),
            Carrier::NaturalsFrom1 => f.write_str("N+"),
            Carrier::Naturals => f.write_str("N"),
            Carrier::Integers => f.write_str("Z"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Finite(BTreeSet<SentenceId>),
    /// The carrier minus the listed elements.
    Cofinite(BTreeSet<SentenceId>),
}

/// A finite or cofinite subset of a carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SentenceSet {
    carrier: Carrier,
    repr: Repr,
}

impl SentenceSet {
    pub fn empty(carrier: Carrier) -> Self {
        SentenceSet { carrier, repr: Repr::Finite(BTreeSet::new()) }
    }

    pub fn full(carrier: Carrier) -> Self {
        Self::cofinite_unchecked(carrier, BTreeSet::new())
    }

    pub fn finite<I: IntoIterator<Item = SentenceId>>(carrier: Carrier, elems: I) -> Result<Self> {
        let elems: BTreeSet<_> = elems.into_iter().collect();
        for &x in &elems {
            carrier.check(x)?;
        }
        Ok(SentenceSet { carrier, repr: Repr::Finite(elems) })
    }

    /// The carrier minus `excluded`.
    pub fn cofinite<I: IntoIterator<Item = SentenceId>>(carrier: Carrier, excluded: I) -> Result<Self> {
        let excluded: BTreeSet<_> = excluded.into_iter().collect();
        for &x in &excluded {
            carrier.check(x)?;
        }
        Ok(Self::cofinite_unchecked(carrier, excluded))
    }

    pub fn singleton(carrier: Carrier, x: SentenceId) -> Result<Self> {
        Self::finite(carrier, [x])
    }

    fn cofinite_unchecked(carrier: Carrier, excluded: BTreeSet<SentenceId>) -> Self {
        match carrier {
            Carrier::Finite(n) => {
                let elems = (0..n as SentenceId).filter(|x| !excluded.contains(x)).collect();
                SentenceSet { carrier, repr: Repr::Finite(elems) }
            }
            _ => SentenceSet { carrier, repr: Repr::Cofinite(excluded) },
        }
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.repr, Repr::Finite(_))
    }

    /// Elements of a finite set, or the excluded elements of a cofinite one.
    pub fn listed(&self) -> impl Iterator<Item = SentenceId> + '_ {
        match &self.repr {
            Repr::Finite(s) | Repr::Cofinite(s) => s.iter().copied(),
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn len(&self) -> Option<usize> {
        match &self.repr {
            Repr::Finite(s) => Some(s.len()),
            Repr::Cofinite(_) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(&self.repr, Repr::Finite(s) if s.is_empty())
    }

    pub fn is_full(&self) -> bool {
        match (&self.repr, self.carrier) {
            (Repr::Cofinite(e), _) => e.is_empty(),
            (Repr::Finite(s), Carrier::Finite(n)) => s.len() == n,
            (Repr::Finite(_), _) => false,
        }
    }

    pub fn contains(&self, x: SentenceId) -> bool {
        self.carrier.contains(x)
            && match &self.repr {
                Repr::Finite(s) => s.contains(&x),
                Repr::Cofinite(e) => !e.contains(&x),
            }
    }

    fn same_carrier(&self, other: &Self) -> Result<()> {
        if self.carrier == other.carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(self.carrier.to_string(), other.carrier.to_string()))
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        let c = self.carrier;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Finite(a), Repr::Finite(b)) => Self::fin(c, a | b),
            (Repr::Finite(a), Repr::Cofinite(e)) | (Repr::Cofinite(e), Repr::Finite(a)) => {
                Self::cofinite_unchecked(c, e - a)
            }
            (Repr::Cofinite(e1), Repr::Cofinite(e2)) => Self::cofinite_unchecked(c, e1 & e2),
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        let c = self.carrier;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Finite(a), Repr::Finite(b)) => Self::fin(c, a & b),
            (Repr::Finite(a), Repr::Cofinite(e)) | (Repr::Cofinite(e), Repr::Finite(a)) => Self::fin(c, a - e),
            (Repr::Cofinite(e1), Repr::Cofinite(e2)) => Self::cofinite_unchecked(c, e1 | e2),
        })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        self.intersection(&other.complement())
    }

    pub fn complement(&self) -> Self {
        match &self.repr {
            Repr::Finite(a) => Self::cofinite_unchecked(self.carrier, a.clone()),
            Repr::Cofinite(e) => Self::fin(self.carrier, e.clone()),
        }
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_carrier(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Finite(a), Repr::Finite(b)) => a.is_subset(b),
            (Repr::Finite(a), Repr::Cofinite(e)) => a.is_disjoint(e),
            (Repr::Cofinite(_), Repr::Finite(_)) => false,
            (Repr::Cofinite(e1), Repr::Cofinite(e2)) => e2.is_subset(e1),
        })
    }

    pub fn with(&self, x: SentenceId) -> Result<Self> {
        self.union(&Self::singleton(self.carrier, x)?)
    }

    fn fin(carrier: Carrier, s: BTreeSet<SentenceId>) -> Self {
        SentenceSet { carrier, repr: Repr::Finite(s) }
    }
}

impl fmt::Display for SentenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, s: &BTreeSet<SentenceId>| {
            f.write_str("{")?;
            for (i, x) in s.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")
        };
        match &self.repr {
            Repr::Finite(s) => list(f, s),
            Repr::Cofinite(e) if e.is_empty() => f.write_str("L"),
            Repr::Cofinite(e) => {
                f.write_str("L \\ ")?;
                list(f, e)
            }
        }
    }
}

/// JSON form used in reports: `{"finite": [..]}` or `{"cofinite": [..]}`.
impl Serialize for SentenceSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(1))?;
        match &self.repr {
            Repr::Finite(a) => m.serialize_entry("finite", a)?,
            Repr::Cofinite(e) => m.serialize_entry("cofinite", e)?,
        }
        m.end()
    }
}
