//! Conjectural dimension sequences the computed counts are compared with.

/// `d'_k` from `(1 - X^2 + X^4) / (1 - 2X^2 - 2X^3)`, i.e. `1, 0, 1, 2, 3` and
/// `d'_k = 2 d'_{k-2} + 2 d'_{k-3}` afterwards.
pub fn dprime_sequence(kmax: usize) -> Vec<u64> {
    let num = [1i64, 0, -1, 0, 1];
    series_quotient(&num, &[1, 0, -2, -2], kmax)
}

/// `d_k` from `1 / (1 - X^2 - X^3)`.
pub fn d_sequence(kmax: usize) -> Vec<u64> {
    series_quotient(&[1], &[1, 0, -1, -1], kmax)
}

/// Number of admissible z-words of weight `k`: `2^{k-2}` for `k > 1`, one
/// (the empty word) for `k = 0` and none for `k = 1`.
pub fn gen_count(k: u32) -> u64 {
    match k {
        0 => 1,
        1 => 0,
        _ => 1u64 << (k - 2),
    }
}

// Power series division; `den[0]` must be 1 and every quotient coefficient
// here is a nonnegative integer.
fn series_quotient(num: &[i64], den: &[i64], kmax: usize) -> Vec<u64> {
    let mut out: Vec<i64> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let mut c = num.get(k).copied().unwrap_or(0);
        for j in 1..den.len().min(k + 1) {
            c -= den[j] * out[k - j];
        }
        out.push(c);
    }
    out.into_iter()
        .map(|c| u64::try_from(c).expect("nonnegative"))
        .collect()
}
