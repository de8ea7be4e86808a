//! Brute-force domination oracle shared by the integration tests. It rebuilds
//! adjacency from the edge rule and never calls into the library.

/// Closed neighbourhoods on vertices `0..n`, `u_i ↦ i-1`, `v_j ↦ h+j-1`,
/// built from `u_i ~ v_j ⟺ j ≡ i + 2^k - 1 (mod h)` without the library.
pub fn oracle_closed(delta: usize, n: usize) -> Vec<u32> {
    let h = n / 2;
    let mut closed: Vec<u32> = (0..n).map(|x| 1u32 << x).collect();
    for i in 0..h {
        for k in 0..delta {
            let j = (i + (1 << k) - 1) % h;
            closed[i] |= 1 << (h + j);
            closed[h + j] |= 1 << i;
        }
    }
    closed
}

fn next_same_popcount(x: u32) -> u32 {
    // Gosper's hack
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Minimum dominating set size, skipping vertex `deleted` entirely.
pub fn brute_force_gamma(delta: usize, n: usize, deleted: Option<usize>) -> usize {
    let closed = oracle_closed(delta, n);
    let all: u32 = ((1u64 << n) - 1) as u32;
    let universe = match deleted {
        Some(w) => all & !(1 << w),
        None => all,
    };
    for k in 0..=n {
        if k == 0 {
            if universe == 0 {
                return 0;
            }
            continue;
        }
        let mut s: u32 = ((1u64 << k) - 1) as u32;
        while (s as u64) < (1u64 << n) {
            if s & !universe == 0 {
                let covered = (0..n).filter(|x| s >> x & 1 == 1).fold(0u32, |acc, x| acc | closed[x]);
                if covered & universe == universe {
                    return k;
                }
            }
            if k == n {
                break;
            }
            s = next_same_popcount(s);
        }
    }
    unreachable!("the universe dominates itself")
}
