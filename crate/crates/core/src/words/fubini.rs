use super::{bar_eligible, BarredWord, BinaryWord};

/// Every value `0..=max(γ)` occurs in `γ`.
pub fn is_fubini(levels: &[u32]) -> bool {
    let Some(&max) = levels.iter().max() else { return true };
    let mut seen = vec![false; max as usize + 1];
    for &x in levels {
        seen[x as usize] = true;
    }
    seen.into_iter().all(|s| s)
}

/// Unbarred Fubini words associated with `v`, in lexicographic order.
///
/// For `v = 0^n` the associated words are those of `1 0^{n-1}`: a single
/// zero, in the first position.
pub fn enumerate_fubini(v: &BinaryWord) -> Vec<Vec<u32>> {
    if v.is_empty() {
        return vec![Vec::new()];
    }
    if v.is_all_zero() {
        return enumerate_fubini(&BinaryWord::one_then_zeros(v.len()));
    }
    let free = v.zeros_count() as u32;
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(v.len());
    // multiplicity of each positive value used so far
    let mut counts = vec![0u32; free as usize + 2];
    extend(v.bits(), free, &mut cur, &mut counts, &mut out);
    out
}

fn extend(v: &[u8], free: u32, cur: &mut Vec<u32>, counts: &mut [u32], out: &mut Vec<Vec<u32>>) {
    let pos = cur.len();
    let remaining_free = v[pos..].iter().filter(|&&b| b == 0).count() as u32;
    let max = (1..=free).rev().find(|&k| counts[k as usize] > 0).unwrap_or(0);
    let missing = (1..=max).filter(|&k| counts[k as usize] == 0).count() as u32;
    if missing > remaining_free {
        return;
    }
    if pos == v.len() {
        if missing == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if v[pos] == 1 {
        cur.push(0);
        extend(v, free, cur, counts, out);
        cur.pop();
        return;
    }
    for x in 1..=free {
        cur.push(x);
        counts[x as usize] += 1;
        extend(v, free, cur, counts, out);
        counts[x as usize] -= 1;
        cur.pop();
    }
}

/// The barred Fubini words associated with `v`, ordered lexicographically
/// on `(levels, bars)`.
pub fn enumerate_barred_fubini(v: &BinaryWord) -> Vec<BarredWord> {
    let mut out = Vec::new();
    for levels in enumerate_fubini(v) {
        let eligible: Vec<usize> = (0..levels.len()).filter(|&j| bar_eligible(&levels, j)).collect();
        for mask in 0u32..(1 << eligible.len()) {
            let mut bars = vec![false; levels.len()];
            for (k, &j) in eligible.iter().enumerate() {
                bars[j] = mask >> k & 1 == 1;
            }
            out.push(BarredWord { levels: levels.clone(), bars });
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &str) -> Vec<String> {
        enumerate_barred_fubini(&v.parse().unwrap()).iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn fubini_property() {
        assert!(is_fubini(&[4, 1, 2, 5, 5, 1, 0, 3]));
        assert!(!is_fubini(&[2, 0, 1, 4, 1, 0, 2, 2]));
    }

    #[test]
    fn small_cases() {
        assert_eq!(names("0"), ["0"]);
        assert_eq!(names("00"), ["01", "01'"]);
        assert_eq!(names("1"), ["0"]);
        assert_eq!(names("110"), ["001", "001'"]);
    }

    #[test]
    fn all_zero_word_of_length_three() {
        let mut got = names("000");
        got.sort();
        let mut want: Vec<String> =
            ["011", "012", "01'2", "012'", "01'2'", "021", "02'1"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn counts_for_zero_words() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_barred_fubini(&BinaryWord::zeros(n)).len()).collect();
        assert_eq!(counts, [1, 2, 7, 35, 226]);
    }
}
