//! Depth-first walk over a filtered delta set with incremental exact
//! evaluation.
//!
//! With `a_0 = 0` and `a_i = d_1 + ... + d_i`, the scaled value
//! `p^(s-1) h_p(a)` is `sum_i T_i p^(s-1-a_i)` where `T_i = sum_{k<i} p^(a_k)`.
//! Each level of the walk adds one term, so a leaf costs one multiply-add.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::combinatorics::Shape;

pub(crate) trait Word: Clone + Ord + Send + Sync {
    fn small(x: u64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn to_big(&self) -> BigUint;
}

impl Word for u128 {
    fn small(x: u64) -> Self {
        x as u128
    }
    #[inline]
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    #[inline]
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Word for BigUint {
    fn small(x: u64) -> Self {
        BigUint::from(x)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn to_big(&self) -> BigUint {
        self.clone()
    }
}

/// Whether every intermediate of the walk fits in 128 bits: the scaled
/// value is below `C(r,2) p^(s-1)` and each `T_i` is below `2 p^(s-1)`.
pub(crate) fn fits_u128(p: u64, s: u32, r: u32) -> bool {
    let top = BigUint::from(p).pow(s - 1);
    let pairs = BigUint::from(u64::from(r) * u64::from(r - 1) / 2);
    let bound = (&top * pairs).max(&top * 2u32 * BigUint::from(p));
    bound.bits() < 127
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Minimize,
    Maximize,
}

/// The `k` best distinct values seen, each with every vector attaining it.
#[derive(Debug, Clone)]
pub(crate) struct TopK<W> {
    k: usize,
    direction: Direction,
    entries: BTreeMap<W, Vec<Vec<u32>>>,
}

impl<W: Word> TopK<W> {
    pub fn new(k: usize, direction: Direction) -> Self {
        TopK {
            k: k.max(1),
            direction,
            entries: BTreeMap::new(),
        }
    }

    fn worst(&self) -> Option<&W> {
        if self.entries.len() < self.k {
            return None;
        }
        match self.direction {
            Direction::Minimize => self.entries.keys().next_back(),
            Direction::Maximize => self.entries.keys().next(),
        }
    }

    #[inline]
    fn admits(&self, value: &W) -> bool {
        match self.worst() {
            None => true,
            Some(w) => match self.direction {
                Direction::Minimize => value <= w,
                Direction::Maximize => value >= w,
            },
        }
    }

    fn trim(&mut self) {
        while self.entries.len() > self.k {
            match self.direction {
                Direction::Minimize => self.entries.pop_last(),
                Direction::Maximize => self.entries.pop_first(),
            };
        }
    }

    pub fn offer(&mut self, value: W, vector: &[u32]) {
        if !self.admits(&value) {
            return;
        }
        self.entries.entry(value).or_default().push(vector.to_vec());
        self.trim();
    }

    /// Folds in a later unit; vectors keep unit order within a value.
    pub fn merge(mut self, other: TopK<W>) -> Self {
        for (value, mut vectors) in other.entries {
            self.entries.entry(value).or_default().append(&mut vectors);
        }
        self.trim();
        self
    }

    /// Best first.
    pub fn into_ranked(self) -> Vec<(W, Vec<Vec<u32>>)> {
        let mut out: Vec<_> = self.entries.into_iter().collect();
        if self.direction == Direction::Maximize {
            out.reverse();
        }
        out
    }
}

pub(crate) type Restrict<'a> = &'a (dyn Fn(&[u32]) -> bool + Sync);

pub(crate) struct Walk<'a, W> {
    shape: &'a Shape,
    pow: Vec<W>,
    top: u32,
    restrict: Option<Restrict<'a>>,
    cur: Vec<u32>,
    pub tracker: TopK<W>,
    pub examined: u128,
}

impl<'a, W: Word> Walk<'a, W> {
    pub fn new(p: u64, shape: &'a Shape, k: usize, direction: Direction, restrict: Option<Restrict<'a>>) -> Self {
        let top = shape.total;
        let base = W::small(p);
        let mut pow = Vec::with_capacity(top as usize + 1);
        pow.push(W::small(1));
        for i in 0..top as usize {
            pow.push(pow[i].mul(&base));
        }
        Walk {
            shape,
            pow,
            top,
            restrict,
            cur: Vec::with_capacity(shape.len),
            tracker: TopK::new(k, direction),
            examined: 0,
        }
    }

    /// Walks every member that starts with `prefix`.
    pub fn run(&mut self, prefix: &[u32]) {
        if !self.shape.accepts_prefix(prefix) {
            return;
        }
        let mut t = self.pow[0].clone();
        let mut acc = W::small(0);
        let mut used = 0u32;
        for &x in prefix {
            used += x;
            acc = acc.add(&t.mul(&self.pow[(self.top - used) as usize]));
            t = t.add(&self.pow[used as usize]);
        }
        self.cur.clear();
        self.cur.extend_from_slice(prefix);
        if prefix.len() == self.shape.len {
            self.leaf(acc);
        } else {
            self.descend(used, &t, &acc);
        }
    }

    fn leaf(&mut self, acc: W) {
        if let Some(f) = self.restrict {
            if !f(&self.cur) {
                return;
            }
        }
        self.examined += 1;
        self.tracker.offer(acc, &self.cur);
    }

    fn descend(&mut self, used: u32, t: &W, acc: &W) {
        let pos = self.cur.len();
        let prev = self.cur.last().copied();
        if pos + 1 == self.shape.len {
            if self.shape.next_value(pos, prev, used, 0).is_some() {
                // the last entry closes the tuple at a_r = s-1
                let value = acc.add(t);
                self.cur.push(self.top - used);
                self.leaf(value);
                self.cur.pop();
            }
            return;
        }
        let mut from = 0;
        while let Some(x) = self.shape.next_value(pos, prev, used, from) {
            let next_used = used + x;
            let next_acc = acc.add(&t.mul(&self.pow[(self.top - next_used) as usize]));
            let next_t = t.add(&self.pow[next_used as usize]);
            self.cur.push(x);
            self.descend(next_used, &next_t, &next_acc);
            self.cur.pop();
            from = x + 1;
        }
    }
}
