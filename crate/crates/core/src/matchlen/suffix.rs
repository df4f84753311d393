//! Suffix array by induced sorting (SA-IS) and Kasai's LCP array, both
//! linear in the series length.

const EMPTY: u32 = u32::MAX;

/// Ranks symbols densely into `1..=k`, reserving 0 for the sentinel.
fn dense_ranks(symbols: &[i64]) -> (Vec<u32>, usize) {
    let (lo, hi) = symbols.iter().fold((i64::MAX, i64::MIN), |(lo, hi), &s| (lo.min(s), hi.max(s)));
    let span = hi.checked_sub(lo).and_then(|d| usize::try_from(d).ok());
    match span {
        Some(d) if d < 4 * symbols.len() + 256 => {
            let mut table = vec![0u32; d + 1];
            for &s in symbols {
                table[(s - lo) as usize] = 1;
            }
            let mut next = 0;
            for slot in table.iter_mut() {
                if *slot != 0 {
                    next += 1;
                    *slot = next;
                }
            }
            (symbols.iter().map(|&s| table[(s - lo) as usize]).collect(), next as usize + 1)
        }
        _ => {
            let mut sorted = symbols.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            let ranks = symbols.iter().map(|s| sorted.binary_search(s).unwrap() as u32 + 1).collect();
            (ranks, sorted.len() + 1)
        }
    }
}

pub(crate) struct SuffixIndex {
    /// `sa[r]` = start of the r-th smallest suffix (sentinel excluded).
    #[cfg_attr(not(test), allow(dead_code))]
    pub sa: Vec<u32>,
    pub rank: Vec<u32>,
    /// `lcp[r]` = LCP of suffixes `sa[r]` and `sa[r + 1]`; length `N − 1`.
    pub lcp: Vec<u32>,
}

impl SuffixIndex {
    pub fn build(symbols: &[i64]) -> Self {
        let n = symbols.len();
        assert!(n < EMPTY as usize, "series too long for 32-bit suffix indices");
        let (mut text, alphabet) = dense_ranks(symbols);
        text.push(0);
        // sa[0] is the sentinel
        let mut sa = sais(&text, alphabet);
        sa.remove(0);
        let mut rank = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(&text[..n], &sa, &rank);
        Self { sa, rank, lcp }
    }

    /// Longest common prefix of suffix `i` with any other suffix.
    pub fn longest_repeat_at(&self, i: usize) -> usize {
        let r = self.rank[i] as usize;
        let before = if r > 0 { self.lcp[r - 1] } else { 0 };
        let after = self.lcp.get(r).copied().unwrap_or(0);
        before.max(after) as usize
    }
}

/// `s` must end with a unique 0; every symbol is below `k`.
fn sais(s: &[u32], k: usize) -> Vec<u32> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }
    // true = S-type
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];

    let mut bucket = vec![0u32; k];
    for &c in s {
        bucket[c as usize] += 1;
    }
    let mut sa = vec![EMPTY; n];
    let lms: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    induce(s, &stype, &bucket, &lms, &mut sa);

    // name LMS substrings in sorted order
    let mut names = vec![EMPTY; n];
    let mut name = 0u32;
    let mut prev: Option<usize> = None;
    for &p in sa.iter().filter(|&&p| is_lms(p as usize)) {
        let p = p as usize;
        if let Some(q) = prev {
            if !lms_substrings_equal(s, &stype, p, q) {
                name += 1;
            }
        }
        names[p] = name;
        prev = Some(p);
    }
    let reduced: Vec<u32> = lms.iter().map(|&p| names[p as usize]).collect();
    let distinct = name as usize + 1;

    let order: Vec<u32> = if distinct == reduced.len() {
        let mut order = vec![0u32; reduced.len()];
        for (i, &c) in reduced.iter().enumerate() {
            order[c as usize] = i as u32;
        }
        order
    } else {
        sais(&reduced, distinct)
    };
    let sorted_lms: Vec<u32> = order.iter().map(|&i| lms[i as usize]).collect();
    sa.fill(EMPTY);
    induce(s, &stype, &bucket, &sorted_lms, &mut sa);
    sa
}

/// Places LMS suffixes at bucket tails in the given order, then induces L-type
/// suffixes left to right and S-type suffixes right to left.
fn induce(s: &[u32], stype: &[bool], bucket: &[u32], lms: &[u32], sa: &mut [u32]) {
    let mut tails = bucket_ends(bucket);
    for &p in lms.iter().rev() {
        let c = s[p as usize] as usize;
        tails[c] -= 1;
        sa[tails[c] as usize] = p;
    }
    let mut heads = bucket_starts(bucket);
    for i in 0..sa.len() {
        let j = sa[i];
        if j != EMPTY && j > 0 && !stype[j as usize - 1] {
            let c = s[j as usize - 1] as usize;
            sa[heads[c] as usize] = j - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_ends(bucket);
    for i in (0..sa.len()).rev() {
        let j = sa[i];
        if j != EMPTY && j > 0 && stype[j as usize - 1] {
            let c = s[j as usize - 1] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = j - 1;
        }
    }
}

fn bucket_starts(bucket: &[u32]) -> Vec<u32> {
    let mut sum = 0;
    bucket
        .iter()
        .map(|&b| {
            sum += b;
            sum - b
        })
        .collect()
}

fn bucket_ends(bucket: &[u32]) -> Vec<u32> {
    let mut sum = 0;
    bucket
        .iter()
        .map(|&b| {
            sum += b;
            sum
        })
        .collect()
}

fn lms_substrings_equal(s: &[u32], stype: &[bool], a: usize, b: usize) -> bool {
    let n = s.len();
    if a == n - 1 || b == n - 1 {
        return false;
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    let mut k = 0;
    loop {
        if s[a + k] != s[b + k] || stype[a + k] != stype[b + k] {
            return false;
        }
        if k > 0 && (is_lms(a + k) || is_lms(b + k)) {
            return is_lms(a + k) && is_lms(b + k);
        }
        k += 1;
    }
}

fn kasai(text: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n.saturating_sub(1)];
    let mut k = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r + 1 == n {
            k = 0;
            continue;
        }
        let j = sa[r + 1] as usize;
        while i + k < n && j + k < n && text[i + k] == text[j + k] {
            k += 1;
        }
        lcp[r] = k as u32;
        k = k.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_sa(s: &[i64]) -> Vec<u32> {
        let mut idx: Vec<u32> = (0..s.len() as u32).collect();
        idx.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
        idx
    }

    #[test]
    fn banana() {
        let s: Vec<i64> = "banana".bytes().map(i64::from).collect();
        let idx = SuffixIndex::build(&s);
        assert_eq!(idx.sa, vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(idx.lcp, vec![1, 3, 0, 0, 2]);
    }

    #[test]
    fn matches_naive_sort() {
        let mut state = 12345u64;
        for len in 1..120 {
            for alphabet in [1i64, 2, 3, 7, 1000] {
                let s: Vec<i64> = (0..len)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((state >> 33) as i64 % alphabet) - 3
                    })
                    .collect();
                assert_eq!(SuffixIndex::build(&s).sa, naive_sa(&s), "{s:?}");
            }
        }
    }

    #[test]
    fn wide_alphabet_uses_sorted_ranks() {
        let s = vec![i64::MAX, i64::MIN, 0, i64::MAX, i64::MIN];
        let idx = SuffixIndex::build(&s);
        assert_eq!(idx.sa, naive_sa(&s));
        assert_eq!(idx.longest_repeat_at(0), 2);
    }

    #[test]
    fn single_symbol() {
        let idx = SuffixIndex::build(&[4]);
        assert_eq!(idx.sa, vec![0]);
        assert!(idx.lcp.is_empty());
        assert_eq!(idx.longest_repeat_at(0), 0);
    }
}
