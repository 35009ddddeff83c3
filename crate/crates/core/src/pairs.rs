//! Enumeration of amplitude index pairs.
//!
//! A single-qubit gate on target `t` updates the amplitudes of outcomes `z` and `o = z + 2^t`
//! together, where `z` has bit `t` clear. For a pair ordinal `j` in `[0, 2^(n-1))`, write
//! `j = q * 2^t + r`; `q` is the prefix above the target and `r` the suffix below it, and
//!
//! ```text
//! z = 2q * 2^t + r
//! o = (2q + 1) * 2^t + r
//! ```
//!
//! Four enumeration schemes are provided. All yield pairs in ascending `z`:
//!
//! - [`traverse_recognize`]: scan every outcome and keep the ones with bit `t` clear.
//! - [`group_traverse`]: chunks of `2^t` consecutive outcomes sharing the target bit.
//! - [`concatenate`]: nested loops over prefixes and suffixes.
//! - [`insert`]: closed form `z = j + ((j >> t) << t)`.
//!
//! [`controlled`] restricts [`insert`] to pairs whose control bits are all set, building each
//! index directly from a shorter counter.

use crate::error::{Error, Result};
use crate::state::MAX_QUBITS;

fn check(n: usize, t: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoQubits);
    }
    if n > MAX_QUBITS {
        return Err(Error::TooManyQubits(n));
    }
    if t >= n {
        return Err(Error::QubitOutOfRange { qubit: t, n });
    }
    Ok(())
}

/// Prefix and suffix of pair ordinal `j` around target `t`.
#[inline]
pub fn split(j: usize, t: usize) -> (usize, usize) {
    (j >> t, j & ((1 << t) - 1))
}

/// Pair for prefix `q` and suffix `r`.
#[inline]
pub fn from_prefix_suffix(q: usize, r: usize, t: usize) -> (usize, usize) {
    let z = ((2 * q) << t) + r;
    (z, z + (1 << t))
}

/// Pair for ordinal `j`, by inserting the target bit.
#[inline]
pub fn pair_at(j: usize, t: usize) -> (usize, usize) {
    let z = j + ((j >> t) << t);
    let o = j + (((j >> t) + 1) << t);
    (z, o)
}

/// Pairs found by scanning all `2^n` outcomes.
pub fn traverse_recognize(n: usize, t: usize) -> Result<TraverseRecognize> {
    check(n, t)?;
    Ok(TraverseRecognize {
        next: 0,
        end: 1 << n,
        t,
    })
}

#[derive(Debug, Clone)]
pub struct TraverseRecognize {
    next: usize,
    end: usize,
    t: usize,
}

impl Iterator for TraverseRecognize {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.end {
            let i = self.next;
            self.next += 1;
            if (i >> self.t) & 1 == 0 {
                return Some((i, i + (1 << self.t)));
            }
        }
        None
    }
}

/// A run of `len` consecutive outcomes with the target bit clear, starting at `zero_start`,
/// and the matching run with it set, starting at `one_start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkPair {
    pub zero_start: usize,
    pub one_start: usize,
    pub len: usize,
}

impl ChunkPair {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len).map(|r| (self.zero_start + r, self.one_start + r))
    }
}

/// Chunk pairs of length `2^t`, in ascending start index.
pub fn group_traverse(n: usize, t: usize) -> Result<GroupTraverse> {
    check(n, t)?;
    Ok(GroupTraverse {
        start: 0,
        end: 1 << n,
        len: 1 << t,
    })
}

#[derive(Debug, Clone)]
pub struct GroupTraverse {
    start: usize,
    end: usize,
    len: usize,
}

impl Iterator for GroupTraverse {
    type Item = ChunkPair;

    fn next(&mut self) -> Option<ChunkPair> {
        if self.start >= self.end {
            return None;
        }
        let chunk = ChunkPair {
            zero_start: self.start,
            one_start: self.start + self.len,
            len: self.len,
        };
        self.start += 2 * self.len;
        Some(chunk)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.start.min(self.end)) / (2 * self.len);
        (left, Some(left))
    }
}

impl ExactSizeIterator for GroupTraverse {}

/// Pairs from an outer loop over prefixes and an inner loop over suffixes.
pub fn concatenate(n: usize, t: usize) -> Result<Concatenate> {
    check(n, t)?;
    Ok(Concatenate {
        base: 0,
        offset: 0,
        end: 1 << n,
        dist: 1 << t,
    })
}

#[derive(Debug, Clone)]
pub struct Concatenate {
    /// `2q * 2^t` for the current prefix.
    base: usize,
    offset: usize,
    end: usize,
    dist: usize,
}

impl Iterator for Concatenate {
    type Item = (usize, usize);

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        if self.offset == self.dist {
            self.offset = 0;
            self.base += 2 * self.dist;
        }
        if self.base >= self.end {
            return None;
        }
        let z = self.base + self.offset;
        self.offset += 1;
        Some((z, z + self.dist))
    }
}

/// Pairs from the closed-form target insertion over `j = 0..2^(n-1)`.
pub fn insert(n: usize, t: usize) -> Result<Insert> {
    check(n, t)?;
    Ok(Insert {
        j: 0,
        end: 1 << (n - 1),
        t,
    })
}

#[derive(Debug, Clone)]
pub struct Insert {
    j: usize,
    end: usize,
    t: usize,
}

impl Iterator for Insert {
    type Item = (usize, usize);

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        if self.j >= self.end {
            return None;
        }
        let pair = pair_at(self.j, self.t);
        self.j += 1;
        Some(pair)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end - self.j;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Insert {}

/// Pairs on target `t` whose outcomes have every bit in `controls` set.
///
/// Each pair comes from a `(n - 1 - |controls|)`-bit counter with a 0 inserted at the target
/// and every control position, in ascending position order, after which the control bits
/// are set.
pub fn controlled(n: usize, t: usize, controls: &[usize]) -> Result<Controlled> {
    check(n, t)?;
    let mut positions = Vec::with_capacity(controls.len() + 1);
    let mut mask = 0usize;
    for &c in controls {
        if c == t {
            return Err(Error::TargetIsControl(c));
        }
        if c >= n {
            return Err(Error::QubitOutOfRange { qubit: c, n });
        }
        if mask & (1 << c) != 0 {
            return Err(Error::DuplicateControl(c));
        }
        mask |= 1 << c;
        positions.push(c);
    }
    positions.push(t);
    positions.sort_unstable();
    Ok(Controlled {
        counter: 0,
        end: 1 << (n - positions.len()),
        positions,
        control_mask: mask,
        target_bit: 1 << t,
    })
}

#[derive(Debug, Clone)]
pub struct Controlled {
    counter: usize,
    end: usize,
    positions: Vec<usize>,
    control_mask: usize,
    target_bit: usize,
}

impl Iterator for Controlled {
    type Item = (usize, usize);

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        if self.counter >= self.end {
            return None;
        }
        let mut x = self.counter;
        for &p in &self.positions {
            let low = x & ((1 << p) - 1);
            x = ((x >> p) << (p + 1)) | low;
        }
        self.counter += 1;
        let z = x | self.control_mask;
        Some((z, z | self.target_bit))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end - self.counter;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Controlled {}
