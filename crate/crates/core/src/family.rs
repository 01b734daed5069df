//! Bitmask subsets of a finite carrier and families of trivial sets.
//!
//! Apart from ECQ and the Tarskian conditions, every principle in this crate is a
//! property of the family of trivial sets alone, so the exact checkers are written
//! against [`Trivials`].

/// A subset of a carrier of at most 16 elements.
pub type Mask = u32;

pub const MAX_CARRIER: usize = 16;

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1 << i
}

/// Elements of a mask in increasing order.
pub fn elements(m: Mask) -> impl Iterator<Item = usize> {
    let mut rest = m;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All submasks of `m`, from `m` down to the empty set.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

pub trait Trivials {
    fn size(&self) -> usize;
    fn is_trivial(&self, m: Mask) -> bool;

    fn full(&self) -> Mask {
        full_mask(self.size())
    }
}

/// A family of trivial sets over at most six elements, one bit per subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallFamily {
    n: u8,
    bits: u64,
}

impl SmallFamily {
    pub const MAX: usize = 6;

    pub fn new(n: usize, bits: u64) -> Self {
        assert!(n <= Self::MAX, "small families hold at most {} elements", Self::MAX);
        let width = 1u32 << n;
        let bits = if width == 64 { bits } else { bits & ((1u64 << width) - 1) };
        SmallFamily { n: n as u8, bits }
    }

    pub fn of<T: Trivials + ?Sized>(t: &T) -> Self {
        let n = t.size();
        let mut bits = 0u64;
        for m in 0..=full_mask(n) {
            if t.is_trivial(m) {
                bits |= 1 << m;
            }
        }
        SmallFamily::new(n, bits)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn members(&self) -> impl Iterator<Item = Mask> + '_ {
        (0..=full_mask(self.n as usize)).filter(|&m| self.is_trivial(m))
    }
}

impl Trivials for SmallFamily {
    #[inline]
    fn size(&self) -> usize {
        self.n as usize
    }

    #[inline]
    fn is_trivial(&self, m: Mask) -> bool {
        self.bits >> m & 1 == 1
    }
}

/// A family over up to [`MAX_CARRIER`] elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    n: usize,
    words: Vec<u64>,
}

impl Family {
    pub fn from_fn(n: usize, mut f: impl FnMut(Mask) -> bool) -> Self {
        assert!(n <= MAX_CARRIER);
        let count = 1usize << n;
        let mut words = vec![0u64; count.div_ceil(64)];
        for m in 0..count {
            if f(m as Mask) {
                words[m / 64] |= 1 << (m % 64);
            }
        }
        Family { n, words }
    }
}

impl Trivials for Family {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn is_trivial(&self, m: Mask) -> bool {
        let m = m as usize;
        self.words[m / 64] >> (m % 64) & 1 == 1
    }
}

impl<T: Trivials + ?Sized> Trivials for &T {
    fn size(&self) -> usize {
        (**self).size()
    }
    fn is_trivial(&self, m: Mask) -> bool {
        (**self).is_trivial(m)
    }
}
