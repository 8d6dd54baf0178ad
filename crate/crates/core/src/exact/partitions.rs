/// A partition as weakly decreasing positive parts.
pub type Partition = Vec<u32>;

/// Partitions of `n` with all parts `>= min_part`, ordered lexicographically on
/// the decreasing part sequence: for `n = 3` this is `[1,1,1], [2,1], [3]`.
pub fn partitions_min(n: u32, min_part: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, min: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max.min(n);
        for p in min..=top {
            prefix.push(p);
            rec(n - p, p, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if min_part == 0 {
        return out;
    }
    rec(n, n, min_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_min(n, 1)
}

/// Number of partitions of `n`.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for j in part..=n {
            p[j] += p[j - part];
        }
    }
    p[n]
}

/// Strictly decreasing sets of positive half-odd-integers of total `2·weight = twice`,
/// stored doubled (odd positive integers). Used for fermionic monomials.
pub fn strict_odd_sets(twice: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut p = 1;
        while p <= max.min(rem) {
            prefix.push(p);
            rec(rem - p, p.saturating_sub(2), prefix, out);
            prefix.pop();
            p += 2;
        }
    }
    let mut out = Vec::new();
    rec(twice, twice, &mut Vec::new(), &mut out);
    for s in &mut out {
        s.sort_unstable_by(|a, b| b.cmp(a));
    }
    out.sort();
    out
}
