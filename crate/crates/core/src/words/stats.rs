use super::{BarredWord, BinaryWord, Label, LabelWord, LevelWord};
use crate::error::{Error, Result};

/// `|γ|` minus the number of nonzero entries.
pub fn area(gamma: &LevelWord) -> u32 {
    gamma.0.iter().map(|&x| x.saturating_sub(1)).sum()
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

/// Equal-level descents plus level-plus-one ascents. Positions whose flag
/// in `bars` is set are excluded as targets of the second clause.
pub(crate) fn dinv_raw(levels: &[u32], bars: Option<&[bool]>, labels: &[Label]) -> u32 {
    let n = levels.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if levels[i] == levels[j] && labels[i].gt(labels[j]) {
                count += 1;
            }
            if levels[i] + 1 == levels[j] && labels[i].lt(labels[j]) && !bars.is_some_and(|b| b[j]) {
                count += 1;
            }
        }
    }
    count
}

/// Same statistic on plain integer labels (hot path for symmetric-function sums).
pub(crate) fn dinv_ints(levels: &[u32], bars: &[bool], labels: &[u8]) -> u32 {
    let n = levels.len();
    let mut count = 0;
    for i in 0..n {
        let (li, pi) = (levels[i], labels[i]);
        for j in i + 1..n {
            let lj = levels[j];
            if li == lj {
                count += (pi > labels[j]) as u32;
            } else if li + 1 == lj && !bars[j] {
                count += (pi < labels[j]) as u32;
            }
        }
    }
    count
}

/// `dinv(γ, π)`.
pub fn dinv(gamma: &LevelWord, pi: &LabelWord) -> Result<u32> {
    check_len(gamma.len(), pi.len())?;
    Ok(dinv_raw(&gamma.0, None, &pi.0))
}

/// `dinv` for barred words: the level-plus-one clause skips barred targets.
pub fn dinv_barred(gamma: &BarredWord, pi: &LabelWord) -> Result<u32> {
    check_len(gamma.len(), pi.len())?;
    Ok(dinv_raw(gamma.levels(), Some(gamma.bars()), &pi.0))
}

/// `#{j < i : γ_j = γ_i} + #{j > i : γ_j = γ_i + 1, j unbarred}`, with `i` 1-based.
pub fn dinv_i(gamma: &BarredWord, i: usize) -> Result<u32> {
    let n = gamma.len();
    if i == 0 || i > n {
        return Err(Error::PositionOutOfRange { pos: i, len: n });
    }
    let (levels, bars) = (gamma.levels(), gamma.bars());
    let x = levels[i - 1];
    let before = levels[..i - 1].iter().filter(|&&y| y == x).count();
    let after = (i..n).filter(|&j| levels[j] == x + 1 && !bars[j]).count();
    Ok((before + after) as u32)
}

/// `u_i = 1` where `v_i = 1`; at the `j`-th zero of `v`, `u_i = 2 w_j`.
pub fn build_u_word(v: &BinaryWord, w: &BinaryWord) -> Result<Vec<u8>> {
    check_len(v.zeros_count(), w.len())?;
    let mut ws = w.bits().iter();
    Ok(v.bits().iter().map(|&b| if b == 1 { 1 } else { 2 * ws.next().copied().unwrap() }).collect())
}

/// `u_i` is 1, 2 or 0 as `γ_i` is 0, 1 or larger; `w` reads the 2s and 0s
/// of `u` as 1s and 0s.
pub fn gamma_to_uw(gamma: &LevelWord) -> (Vec<u8>, BinaryWord) {
    let u: Vec<u8> = gamma
        .0
        .iter()
        .map(|&x| match x {
            0 => 1,
            1 => 2,
            _ => 0,
        })
        .collect();
    let w = u.iter().filter(|&&x| x != 1).map(|&x| x / 2).collect();
    (u, BinaryWord::new(w).expect("bits"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(s: &str) -> LevelWord {
        s.parse().unwrap()
    }

    fn bw(s: &str) -> BarredWord {
        s.parse().unwrap()
    }

    fn pi(s: &str) -> LabelWord {
        s.parse().unwrap()
    }

    #[test]
    fn area_examples() {
        assert_eq!(area(&lw("20141022")), 6);
        assert_eq!(area(&lw("0000")), 0);
        assert_eq!(area(&lw("013021")), 3);
    }

    #[test]
    fn dinv_examples() {
        assert_eq!(dinv(&lw("20141022"), &pi("41322231")).unwrap(), 7);
        assert_eq!(dinv(&lw("0000"), &pi("1234")).unwrap(), 0);
        assert_eq!(dinv(&lw("1111"), &pi("0101")).unwrap(), 2);
        assert_eq!(dinv(&lw("11"), &pi("1")).unwrap_err(), Error::LengthMismatch { expected: 2, got: 1 });
    }

    #[test]
    fn dinv_pairs_of_the_worked_diagram() {
        let g = lw("20141022");
        let p = pi("41322231");
        let mut pairs = Vec::new();
        for i in 0..8 {
            for j in i + 1..8 {
                let sub_l = LevelWord(vec![g.0[i], g.0[j]]);
                let sub_p = LabelWord(vec![p.0[i], p.0[j]]);
                if dinv(&sub_l, &sub_p).unwrap() == 1 {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        assert_eq!(pairs, [(1, 7), (1, 8), (2, 3), (2, 5), (3, 5), (5, 7), (7, 8)]);
    }

    #[test]
    fn super_alphabet_pairs() {
        // under the resolved convention the pairs are (1,3) and (2,3)
        let g = lw("1111");
        let p = pi("0101");
        let mut pairs = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if dinv(&LevelWord(vec![g.0[i], g.0[j]]), &LabelWord(vec![p.0[i], p.0[j]])).unwrap() == 1 {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        assert_eq!(pairs, [(1, 3), (2, 3)]);
    }

    #[test]
    fn dinv_barred_examples() {
        assert_eq!(dinv_barred(&bw("01"), &pi("12")).unwrap(), 1);
        assert_eq!(dinv_barred(&bw("01'"), &pi("12")).unwrap(), 0);
        assert_eq!(dinv_barred(&bw("01'"), &pi("21")).unwrap(), 0);
    }

    #[test]
    fn dinv_i_examples() {
        let g = bw("1111");
        assert_eq!(g.dinv_vector(), [0, 1, 2, 3]);
        assert_eq!(dinv_i(&bw("011"), 1).unwrap(), 2);
        assert_eq!(dinv_i(&bw("01'2"), 1).unwrap(), 0);
        assert_eq!(dinv_i(&bw("01"), 3).unwrap_err(), Error::PositionOutOfRange { pos: 3, len: 2 });
        assert!(dinv_i(&bw("01"), 0).is_err());
    }

    #[test]
    fn u_word_examples() {
        let u = build_u_word(&"10110100".parse().unwrap(), &"0110".parse().unwrap()).unwrap();
        assert_eq!(u, [1, 0, 1, 1, 2, 1, 2, 0]);
        assert_eq!(build_u_word(&"11".parse().unwrap(), &BinaryWord::empty()).unwrap(), [1, 1]);
        assert_eq!(build_u_word(&"00".parse().unwrap(), &"10".parse().unwrap()).unwrap(), [2, 0]);
        assert!(build_u_word(&"00".parse().unwrap(), &"1".parse().unwrap()).is_err());
    }

    #[test]
    fn gamma_to_uw_examples() {
        let (u, w) = gamma_to_uw(&lw("013021"));
        assert_eq!(u, [1, 2, 0, 1, 0, 2]);
        assert_eq!(w.to_string(), "1001");
        let (u, w) = gamma_to_uw(&lw("000"));
        assert_eq!(u, [1, 1, 1]);
        assert!(w.is_empty());
        let (u, w) = gamma_to_uw(&lw("22"));
        assert_eq!(u, [0, 0]);
        assert_eq!(w.to_string(), "00");
    }

    #[test]
    fn super_alphabet_sums_to_e2() {
        // all placements of two 0̲ and two 1 under γ = 1111
        let g = lw("1111");
        let mut hist = [0u32; 7];
        for mask in 0u32..16 {
            if mask.count_ones() != 2 {
                continue;
            }
            let labels = (0..4).map(|i| if mask >> i & 1 == 1 { Label::SuperZero } else { Label::Int(1) }).collect();
            hist[dinv(&g, &LabelWord(labels)).unwrap() as usize] += 1;
        }
        // t + t^2 + 2t^3 + t^4 + t^5 = e_2(1, t, t^2, t^3)
        assert_eq!(hist, [0, 1, 1, 2, 1, 1, 0]);
    }
}
