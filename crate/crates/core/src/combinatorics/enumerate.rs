//! Lexicographic enumeration of `D(s, r)` and its filtered subsets.
//!
//! All four filters are described by one [`Shape`]: a value window per
//! entry, an optional forced value for the first and last entry, and an
//! optional value that may not repeat in adjacent positions. Pruning keeps
//! every partial vector completable, so the walk is output-sensitive.

use std::collections::HashMap;

use super::{DeltaVector, StructureFilter};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Shape {
    pub len: usize,
    pub total: u32,
    pub lo: u32,
    pub hi: u32,
    pub ends: Option<u32>,
    pub no_repeat: Option<u32>,
}

impl Shape {
    pub fn new(inst: &ProblemInstance, filter: StructureFilter) -> Shape {
        let len = inst.delta_len();
        let total = inst.delta_sum();
        let n = len as u32;
        let all = Shape {
            len,
            total,
            lo: 1,
            hi: total - (n - 1),
            ends: None,
            no_repeat: None,
        };
        if filter == StructureFilter::All {
            return all;
        }
        let fq = total / n;
        let g = total % n;
        let hi = if g == 0 { fq } else { fq + 1 };
        let biv = Shape { lo: fq, hi, ..all };
        match filter {
            StructureFilter::All => unreachable!(),
            StructureFilter::Biv => biv,
            StructureFilter::BivStar => Shape { ends: Some(fq), ..biv },
            StructureFilter::SepStar => {
                let isolated = if 2 * g >= n { fq } else { fq + 1 };
                Shape {
                    ends: Some(fq),
                    no_repeat: Some(isolated),
                    ..biv
                }
            }
        }
    }

    fn value_allowed(&self, pos: usize, prev: Option<u32>, x: u32) -> bool {
        if x < self.lo || x > self.hi {
            return false;
        }
        if let Some(e) = self.ends {
            if (pos == 0 || pos + 1 == self.len) && x != e {
                return false;
            }
        }
        !(self.no_repeat == Some(x) && prev == Some(x))
    }

    /// Whether `rem` can be spread over the entries after `pos`, given that
    /// entry `pos` holds `x`.
    fn completable(&self, pos: usize, x: u32, rem: u32) -> bool {
        let left = (self.len - pos - 1) as u32;
        if left == 0 {
            return rem == 0;
        }
        let (free, free_rem) = match self.ends {
            Some(e) => {
                if rem < e {
                    return false;
                }
                if left == 1 {
                    return rem == e && self.value_allowed(pos + 1, Some(x), e);
                }
                (left - 1, rem - e)
            }
            None => (left, rem),
        };
        if free_rem < free * self.lo || free_rem > free * self.hi {
            return false;
        }
        match self.no_repeat {
            Some(v) if self.hi == self.lo + 1 => {
                let highs = rem - left * self.lo;
                let need = if v == self.hi { highs } else { left - highs };
                let start = if x == v { 2 } else { 1 };
                let (end, forced) = match self.ends {
                    Some(e) if e == v => (left as i64 - 2, 1),
                    Some(_) => (left as i64 - 1, 0),
                    None => (left as i64, 0),
                };
                let span = (end - start + 1).max(0) as u32;
                let most = span.div_ceil(2) + forced;
                need >= forced && need <= most
            }
            _ => true,
        }
    }

    /// Smallest value `>= from` that entry `pos` can take.
    pub fn next_value(&self, pos: usize, prev: Option<u32>, used: u32, from: u32) -> Option<u32> {
        let rem = self.total.checked_sub(used)?;
        if pos + 1 == self.len {
            return (rem >= from && self.value_allowed(pos, prev, rem)).then_some(rem);
        }
        let start = from.max(self.lo);
        let stop = self.hi.min(rem);
        (start..=stop).find(|&x| self.value_allowed(pos, prev, x) && self.completable(pos, x, rem - x))
    }

    pub fn accepts_prefix(&self, prefix: &[u32]) -> bool {
        if prefix.len() > self.len {
            return false;
        }
        let mut used = 0;
        let mut prev = None;
        for (pos, &x) in prefix.iter().enumerate() {
            if self.next_value(pos, prev, used, x) != Some(x) {
                return false;
            }
            used += x;
            prev = Some(x);
        }
        true
    }

    /// Feasible prefixes of length `depth`, in lexicographic order.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<u32>> {
        fn walk(shape: &Shape, depth: usize, cur: &mut Vec<u32>, used: u32, out: &mut Vec<Vec<u32>>) {
            if cur.len() == depth {
                out.push(cur.clone());
                return;
            }
            let pos = cur.len();
            let mut from = 0;
            while let Some(x) = shape.next_value(pos, cur.last().copied(), used, from) {
                cur.push(x);
                walk(shape, depth, cur, used + x, out);
                cur.pop();
                from = x + 1;
            }
        }
        let mut out = Vec::new();
        walk(self, depth.min(self.len), &mut Vec::new(), 0, &mut out);
        out
    }

    /// Number of vectors of this shape, by dynamic programming over
    /// `(position, partial sum, previous value)`.
    pub fn count(&self) -> u128 {
        fn go(shape: &Shape, pos: usize, used: u32, prev: u32, memo: &mut HashMap<(usize, u32, u32), u128>) -> u128 {
            if pos == shape.len {
                return u128::from(used == shape.total);
            }
            if let Some(&c) = memo.get(&(pos, used, prev)) {
                return c;
            }
            let prev_opt = (pos > 0).then_some(prev);
            let mut total = 0;
            for x in shape.lo..=shape.hi {
                if used + x > shape.total {
                    break;
                }
                if shape.value_allowed(pos, prev_opt, x) {
                    total += go(shape, pos + 1, used + x, x, memo);
                }
            }
            memo.insert((pos, used, prev), total);
            total
        }
        go(self, 0, 0, 0, &mut HashMap::new())
    }
}

/// Streams the members of a filtered set in lexicographic order.
#[derive(Debug, Clone)]
pub struct DeltaIter {
    shape: Shape,
    base: usize,
    cur: Vec<u32>,
    used: u32,
    next_from: Vec<u32>,
    done: bool,
}

impl DeltaIter {
    fn new(shape: Shape, prefix: &[u32]) -> Self {
        let done = !shape.accepts_prefix(prefix);
        let mut next_from = vec![0; shape.len + 1];
        if prefix.len() < shape.len {
            next_from[prefix.len()] = 0;
        }
        DeltaIter {
            base: prefix.len(),
            used: prefix.iter().sum(),
            cur: prefix.to_vec(),
            next_from,
            done,
            shape,
        }
    }
}

impl Iterator for DeltaIter {
    type Item = DeltaVector;

    fn next(&mut self) -> Option<DeltaVector> {
        if self.done {
            return None;
        }
        if self.base == self.shape.len {
            // the prefix is a complete vector
            self.done = true;
            return Some(DeltaVector::from_raw(self.cur.clone()));
        }
        loop {
            let depth = self.cur.len();
            if depth == self.shape.len {
                let x = self.cur.pop().expect("non-empty");
                self.used -= x;
                continue;
            }
            let prev = self.cur.last().copied();
            match self.shape.next_value(depth, prev, self.used, self.next_from[depth]) {
                Some(x) => {
                    self.next_from[depth] = x + 1;
                    self.cur.push(x);
                    self.used += x;
                    if depth + 1 == self.shape.len {
                        return Some(DeltaVector::from_raw(self.cur.clone()));
                    }
                    self.next_from[depth + 1] = 0;
                }
                None => {
                    if depth == self.base {
                        self.done = true;
                        return None;
                    }
                    let x = self.cur.pop().expect("above base");
                    self.used -= x;
                }
            }
        }
    }
}

/// All members of the filtered subset of `D(s, r)`, lexicographically.
pub fn enumerate_delta(inst: &ProblemInstance, filter: StructureFilter) -> DeltaIter {
    DeltaIter::new(Shape::new(inst, filter), &[])
}

/// The members that start with `prefix`; splitting on prefixes partitions
/// the set into independent streams.
pub fn enumerate_delta_from(inst: &ProblemInstance, filter: StructureFilter, prefix: &[u32]) -> Result<DeltaIter> {
    if prefix.len() > inst.delta_len() {
        return Err(Error::InvalidDelta(format!(
            "prefix of length {} is longer than r-1 = {}",
            prefix.len(),
            inst.delta_len()
        )));
    }
    Ok(DeltaIter::new(Shape::new(inst, filter), prefix))
}

/// Cardinality of the filtered set, without enumerating it.
pub fn count_delta(inst: &ProblemInstance, filter: StructureFilter) -> u128 {
    Shape::new(inst, filter).count()
}
