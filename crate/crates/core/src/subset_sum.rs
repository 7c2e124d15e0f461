//! Pseudo-polynomial Subset Sum over small nonnegative integers.

use crate::gf2::BitRow;

/// Bitset of sums reachable by sub-multisets of `weights`, truncated to
/// `0..=limit`.
pub fn reachable_sums(weights: &[u64], limit: u64) -> Vec<bool> {
    let width = limit as usize + 1;
    let mut reach = BitRow::new(width);
    reach.flip(0);
    for &w in weights {
        let shifted = shifted_left(&reach, w, width);
        reach.or_assign(&shifted);
    }
    (0..width).map(|s| reach.get(s)).collect()
}

/// Indices of a sub-multiset of `weights` summing to `target`, or `None`.
///
/// Reconstruction walks the weights in order and keeps a weight whenever
/// the remainder is still reachable from the rest, so lower-indexed
/// weights are preferred.
pub fn subset_sum(weights: &[u64], target: u64) -> Option<Vec<usize>> {
    let width = usize::try_from(target).ok()?.checked_add(1)?;
    // suffix[i]: sums reachable using weights[i..]
    let mut suffix = vec![BitRow::new(width); weights.len() + 1];
    suffix[weights.len()].flip(0);
    for i in (0..weights.len()).rev() {
        let shifted = shifted_left(&suffix[i + 1], weights[i], width);
        let mut row = suffix[i + 1].clone();
        row.or_assign(&shifted);
        suffix[i] = row;
    }
    if !suffix[0].get(target as usize) {
        return None;
    }
    let mut remaining = target;
    let mut chosen = Vec::new();
    for (i, &w) in weights.iter().enumerate() {
        if w <= remaining && suffix[i + 1].get((remaining - w) as usize) {
            chosen.push(i);
            remaining -= w;
        }
    }
    debug_assert_eq!(remaining, 0);
    Some(chosen)
}

fn shifted_left(row: &BitRow, by: u64, width: usize) -> BitRow {
    let mut out = BitRow::new(width);
    if by as u128 >= width as u128 {
        return out;
    }
    let by = by as usize;
    for s in 0..width - by {
        if row.get(s) {
            out.flip(s + by);
        }
    }
    out
}
