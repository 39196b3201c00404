//! The three transformations that strictly lower `h_p` for `p >= 3`.
//!
//! Indices are 0-based positions in the delta vector (`balance_move`,
//! `swap_move`) or in the list of runs of the repeated value
//! (`shift_block_move`). Every move also accepts the mirrored
//! configuration, since reversing the delta vector leaves `h_p` unchanged.

use crate::combinatorics::{has_adjacent, runs};
use crate::error::{Error, Result};
use crate::instance::ExponentTuple;

fn deltas(a: &ExponentTuple) -> Vec<u32> {
    a.entries().windows(2).map(|w| w[1] - w[0]).collect()
}

fn rebuild(first: u32, d: &[u32]) -> ExponentTuple {
    let mut entries = Vec::with_capacity(d.len() + 1);
    let mut x = first;
    entries.push(x);
    for &step in d {
        x += step;
        entries.push(x);
    }
    ExponentTuple::new(entries).expect("positive steps keep the tuple increasing")
}

fn refuse<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::MovePrecondition(msg.into()))
}

fn check_index(i: usize, len: usize, what: &str) -> Result<()> {
    if i >= len {
        return refuse(format!("{what} index {i} is out of range 0..{len}"));
    }
    Ok(())
}

fn mirrored<F>(d: &[u32], f: F) -> Result<Vec<u32>>
where
    F: FnOnce(&[u32]) -> Result<Vec<u32>>,
{
    let rev: Vec<u32> = d.iter().rev().copied().collect();
    let mut out = f(&rev)?;
    out.reverse();
    Ok(out)
}

pub(crate) fn balance_pair_ok(d: &[u32], u: usize, v: usize) -> Result<()> {
    check_index(u, d.len(), "u")?;
    check_index(v, d.len(), "v")?;
    let lo = *d.iter().min().expect("non-empty");
    let hi = *d.iter().max().expect("non-empty");
    if hi - lo < 2 {
        return refuse(format!("range {} is below 2", hi - lo));
    }
    if d[u] != lo {
        return refuse(format!("d[{u}] = {} is not the minimum {lo}", d[u]));
    }
    if d[v] != hi {
        return refuse(format!("d[{v}] = {} is not the maximum {hi}", d[v]));
    }
    let (i, j) = (u.min(v), u.max(v));
    if let Some(k) = (i + 1..j).find(|&k| d[k] == lo || d[k] == hi) {
        return refuse(format!("d[{k}] = {} lies between u and v but is extremal", d[k]));
    }
    Ok(())
}

/// Widens the smallest gap `d[u]` by one and narrows the largest `d[v]` by
/// one; every gap strictly between them is neither smallest nor largest.
pub fn balance_move(a: &ExponentTuple, u: usize, v: usize) -> Result<ExponentTuple> {
    let mut d = deltas(a);
    if d.is_empty() {
        return refuse("a single exponent has no gaps");
    }
    balance_pair_ok(&d, u, v)?;
    d[u] += 1;
    d[v] -= 1;
    Ok(rebuild(a.first(), &d))
}

pub(crate) fn find_balance(d: &[u32]) -> Option<(usize, usize)> {
    let lo = *d.iter().min()?;
    let hi = *d.iter().max()?;
    if hi - lo < 2 {
        return None;
    }
    let extremal: Vec<usize> = (0..d.len()).filter(|&k| d[k] == lo || d[k] == hi).collect();
    extremal.windows(2).find(|w| d[w[0]] != d[w[1]]).map(|w| {
        if d[w[0]] == lo {
            (w[0], w[1])
        } else {
            (w[1], w[0])
        }
    })
}

/// The two values of a bivalent vector that starts and ends with the
/// smaller one.
fn framed_bivalent(d: &[u32]) -> Result<(u32, u32)> {
    let lo = *d.iter().min().ok_or_else(|| Error::MovePrecondition("empty delta vector".into()))?;
    let hi = *d.iter().max().expect("non-empty");
    if hi != lo + 1 {
        return refuse(format!("the delta vector must take exactly two adjacent values, range is {}", hi - lo));
    }
    if d[0] != lo || d[d.len() - 1] != lo {
        return refuse(format!("the delta vector must start and end with {lo}"));
    }
    Ok((lo, hi))
}

fn swap_forward(d: &[u32], u: usize, v: usize) -> Result<Vec<u32>> {
    let (lo, hi) = framed_bivalent(d)?;
    let n = d.len();
    if v + 1 >= n || u + 1 >= v {
        return refuse(format!("need u + 1 < v < {} - 1, got u = {u}, v = {v}", n));
    }
    if d[u] != lo || d[u + 1] != lo {
        return refuse(format!("d[{u}] and d[{}] must both be {lo}", u + 1));
    }
    if d[v] != hi || d[v + 1] != hi {
        return refuse(format!("d[{v}] and d[{}] must both be {hi}", v + 1));
    }
    if let Some(j) = (u + 1..v).find(|&j| d[j] == d[j + 1]) {
        return refuse(format!("d[{j}] = d[{}] breaks the alternation between u and v", j + 1));
    }
    let mut out = d.to_vec();
    out[u + 1..=v].rotate_left(1);
    Ok(out)
}

/// In a bivalent `[q]`-framed vector, `d[u] = d[u+1] = [q]` and
/// `d[v] = d[v+1] = [q+1]` with the entries from `u+1` to `v` alternating;
/// moves `d[u+1]` behind `d[v]`, shifting the alternating stretch one place
/// left. For `v = u + 2` this exchanges `d[u+1]` and `d[v]`. With `v < u`
/// the pairs are read from the right.
pub fn swap_move(a: &ExponentTuple, u: usize, v: usize) -> Result<ExponentTuple> {
    let d = deltas(a);
    if d.len() < 2 {
        return refuse("need at least two gaps");
    }
    check_index(u, d.len() - 1, "u")?;
    check_index(v, d.len() - 1, "v")?;
    let out = if u < v {
        swap_forward(&d, u, v)?
    } else if u > v {
        let n = d.len();
        mirrored(&d, |rev| swap_forward(rev, n - 2 - u, n - 2 - v))?
    } else {
        return refuse("u and v must differ");
    };
    Ok(rebuild(a.first(), &out))
}

pub(crate) fn find_swap(d: &[u32]) -> Option<(usize, usize)> {
    let (lo, _) = framed_bivalent(d).ok()?;
    let pairs: Vec<usize> = (0..d.len().saturating_sub(1)).filter(|&j| d[j] == d[j + 1]).collect();
    pairs.windows(2).find(|w| d[w[0]] != d[w[1]]).map(|w| {
        if d[w[0]] == lo {
            (w[0], w[1])
        } else {
            (w[1], w[0])
        }
    })
}

/// Value whose runs are balanced: the other value never repeats.
fn block_value(d: &[u32]) -> Result<u32> {
    let (lo, hi) = framed_bivalent(d)?;
    if !has_adjacent(d, lo) {
        Ok(hi)
    } else if !has_adjacent(d, hi) {
        Ok(lo)
    } else {
        refuse("both values repeat, so the vector is not separable")
    }
}

/// `(start, len)` of each run of `k`.
fn blocks_of(d: &[u32], k: u32) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut pos = 0;
    for run in runs(d) {
        if run.value == k {
            out.push((pos, run.len));
        }
        pos += run.len as usize;
    }
    out
}

fn shift_pair_ok(blocks: &[(usize, u32)], short: usize, long: usize) -> bool {
    if short >= blocks.len() || long >= blocks.len() || short == long {
        return false;
    }
    let (ls, ll) = (blocks[short].1, blocks[long].1);
    if ll < ls + 2 {
        return false;
    }
    let (i, j) = (short.min(long), short.max(long));
    j == i + 1 || (ll == ls + 2 && blocks[i + 1..j].iter().all(|b| b.1 == ls + 1))
}

fn shift_forward(d: &[u32], short: usize, long: usize) -> Vec<u32> {
    let k = block_value(d).expect("checked by caller");
    let blocks = blocks_of(d, k);
    let from = blocks[short].0 + blocks[short].1 as usize;
    let to = blocks[long].0;
    let mut out = d.to_vec();
    out[from..=to].rotate_right(1);
    out
}

/// Moves one entry of the repeated value from the longer block `block_v`
/// to the shorter block `block_u`, shifting the blocks between them. The
/// blocks are neighbours and differ by at least two, or differ by exactly
/// two with every block between them one longer than the shorter.
pub fn shift_block_move(a: &ExponentTuple, block_u: usize, block_v: usize) -> Result<ExponentTuple> {
    let d = deltas(a);
    let k = block_value(&d)?;
    let blocks = blocks_of(&d, k);
    check_index(block_u, blocks.len(), "block_u")?;
    check_index(block_v, blocks.len(), "block_v")?;
    if !shift_pair_ok(&blocks, block_u, block_v) {
        return refuse(format!(
            "blocks {block_u} (length {}) and {block_v} (length {}) do not qualify",
            blocks[block_u].1, blocks[block_v].1
        ));
    }
    let out = if block_u < block_v {
        shift_forward(&d, block_u, block_v)
    } else {
        let m = blocks.len() - 1;
        mirrored(&d, |rev| Ok(shift_forward(rev, m - block_u, m - block_v)))?
    };
    Ok(rebuild(a.first(), &out))
}

pub(crate) fn find_shift(d: &[u32]) -> Option<(usize, usize)> {
    let k = block_value(d).ok()?;
    let blocks = blocks_of(d, k);
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if shift_pair_ok(&blocks, i, j) {
                return Some((i, j));
            }
            if shift_pair_ok(&blocks, j, i) {
                return Some((j, i));
            }
        }
    }
    None
}
