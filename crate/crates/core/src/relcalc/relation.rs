use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, check_size, Error, Result};

/// A finite set `{0, .., size-1}` with optional display labels.
///
/// Labels are display-only; carriers compare by size.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct FinCarrier {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FinCarrier {
    pub fn new(size: usize) -> Self {
        FinCarrier { size, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate carrier label `{l}`")));
            }
        }
        Ok(FinCarrier {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) if x < l.len() => l[x].clone(),
            _ => x.to_string(),
        }
    }
}

impl PartialEq for FinCarrier {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for FinCarrier {}

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A binary relation between two finite carriers, stored as a row-major bit
/// matrix of `src × dst` bits packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    src: usize,
    dst: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(src: usize, dst: usize) -> Self {
        let stride = words_for(dst);
        Relation {
            src,
            dst,
            stride,
            bits: vec![0; src * stride],
        }
    }

    /// The full relation `∇`.
    pub fn full(src: usize, dst: usize) -> Self {
        let mut r = Self::empty(src, dst);
        for x in 0..src {
            for y in 0..dst {
                r.set(x, y);
            }
        }
        r
    }

    /// The identity (discrete) relation `Δ` on a carrier.
    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n, n);
        for x in 0..n {
            r.set(x, x);
        }
        r
    }

    pub fn from_pairs<I>(src: usize, dst: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(src, dst);
        for (x, y) in pairs {
            check_index(x, src)?;
            check_index(y, dst)?;
            r.set(x, y);
        }
        Ok(r)
    }

    pub(crate) fn from_fn(src: usize, dst: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(src, dst);
        for x in 0..src {
            for y in 0..dst {
                if f(x, y) {
                    r.set(x, y);
                }
            }
        }
        r
    }

    #[inline]
    fn set(&mut self, x: usize, y: usize) {
        self.bits[x * self.stride + y / WORD] |= 1u64 << (y % WORD);
    }

    #[inline]
    fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.stride..(x + 1) * self.stride]
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn is_square(&self) -> bool {
        self.src == self.dst
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.src && y < self.dst && self.bits[x * self.stride + y / WORD] >> (y % WORD) & 1 == 1
    }

    /// Number of related pairs.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Related pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.src).flat_map(move |x| self.successors(x).map(move |y| (x, y)))
    }

    /// Elements related to `x`, ascending.
    pub fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(x);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    /// Diagram-order composite: `(x, z)` whenever `x self y` and `y other z`.
    /// In juxtaposition notation this is `other · self`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        check_size("compose: self.dst vs other.src", self.dst, other.src)?;
        let mut out = Relation::empty(self.src, other.dst);
        for x in 0..self.src {
            let base = x * out.stride;
            for y in self.successors(x) {
                let row = other.row(y);
                for (dst, src) in out.bits[base..base + out.stride].iter_mut().zip(row) {
                    *dst |= *src;
                }
            }
        }
        Ok(out)
    }

    /// The opposite relation `R°`.
    pub fn opposite(&self) -> Relation {
        let mut out = Relation::empty(self.dst, self.src);
        for (x, y) in self.pairs() {
            out.set(y, x);
        }
        out
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |a, b| a & b)
    }

    fn zip_words(&self, other: &Relation, f: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        check_size("relation source", self.src, other.src)?;
        check_size("relation target", self.dst, other.dst)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect();
        Ok(Relation { bits, ..*self })
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.src == other.src
            && self.dst == other.dst
            && self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & !b == 0)
    }

    /// First pair (lexicographic) in exactly one of the two relations.
    pub fn first_difference(&self, other: &Relation) -> Option<(usize, usize)> {
        if self.src != other.src || self.dst != other.dst {
            return None;
        }
        (0..self.src)
            .flat_map(|x| (0..self.dst).map(move |y| (x, y)))
            .find(|&(x, y)| self.contains(x, y) != other.contains(x, y))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({}→{}, ", self.src, self.dst)?;
        f.debug_set().entries(self.pairs()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "}}")
    }
}
