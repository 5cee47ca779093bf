use super::{is_graphical, DegreeSequence};
use crate::bounds::max_edges;
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_graphical`].
pub const MAX_ENUMERATION_ORDER: usize = 12;

/// Non-increasing sequences of fixed length with a fixed sum and bounded
/// entries, in lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct BoundedPartitions {
    current: Option<Vec<usize>>,
}

impl BoundedPartitions {
    pub fn new(len: usize, sum: usize, cap: usize) -> Self {
        if sum > len * cap {
            return Self { current: None };
        }
        let mut first = vec![0; len];
        fill_greedy(&mut first, 0, sum, cap);
        Self {
            current: Some(first),
        }
    }
}

/// Writes the lexicographically largest non-increasing fill of `a[from..]`.
fn fill_greedy(a: &mut [usize], from: usize, mut rest: usize, cap: usize) {
    for slot in a[from..].iter_mut() {
        *slot = cap.min(rest);
        rest -= *slot;
    }
    debug_assert_eq!(rest, 0);
}

impl Iterator for BoundedPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let len = out.len();
        let mut next = out.clone();
        let mut suffix = 0usize;
        for i in (0..len).rev() {
            suffix += next[i];
            if next[i] == 0 {
                continue;
            }
            let cap = next[i] - 1;
            let rest = suffix - cap;
            if rest <= (len - 1 - i) * cap {
                next[i] = cap;
                fill_greedy(&mut next, i + 1, rest, cap);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every graphical sequence of length `n` with sum `2m`, each exactly once, in
/// lexicographically decreasing order.
pub fn enumerate_graphical(n: usize, m: u64) -> Result<impl Iterator<Item = DegreeSequence>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "order n = {n} must be at least 2"
        )));
    }
    if m > max_edges(n) {
        return Err(Error::InvalidParams(format!(
            "m = {m} exceeds n(n-1)/2 for n = {n}"
        )));
    }
    Ok(BoundedPartitions::new(n, 2 * m as usize, n - 1)
        .map(DegreeSequence::from_sorted)
        .filter(is_graphical))
}
