use super::quasi::{quasi_shuffle, Stuffle, ZeroDiamond};
use super::{LinComb, Word, XYWord, Xy, ZLinComb, ZWord, Z};
use crate::error::{Error, Result};

/// How a z-letter is spelled in `x`, `y`.
///
/// `YEnded` (`z_j = x^{j-1} y`) is the convention used throughout the crate.
/// `YStarting` (`z_j = y x^{j-1}`) is the reversed convention some relation
/// counts are stated in; counted quantities agree under word reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum XyConvention {
    #[default]
    YEnded,
    YStarting,
}

pub fn z_to_xy(w: &ZWord, conv: XyConvention) -> XYWord {
    let mut out = Vec::with_capacity(w.weight() as usize);
    for z in w.letters() {
        let xs = std::iter::repeat_n(Xy::X, z.0 as usize - 1);
        match conv {
            XyConvention::YEnded => {
                out.extend(xs);
                out.push(Xy::Y);
            }
            XyConvention::YStarting => {
                out.push(Xy::Y);
                out.extend(xs);
            }
        }
    }
    Word(out)
}

pub fn xy_to_z(w: &XYWord, conv: XyConvention) -> Result<ZWord> {
    let letters = w.letters();
    let ok = match conv {
        XyConvention::YEnded => letters.last().is_none_or(|l| *l == Xy::Y),
        XyConvention::YStarting => letters.first().is_none_or(|l| *l == Xy::Y),
    };
    if !ok {
        return Err(Error::NotZDecomposable(w.to_string()));
    }
    let mut out = Vec::new();
    let mut run = 0u32;
    match conv {
        XyConvention::YEnded => {
            for l in letters {
                match l {
                    Xy::X => run += 1,
                    Xy::Y => {
                        out.push(Z(run + 1));
                        run = 0;
                    }
                }
            }
        }
        XyConvention::YStarting => {
            for l in letters.iter().rev() {
                match l {
                    Xy::X => run += 1,
                    Xy::Y => {
                        out.push(Z(run + 1));
                        run = 0;
                    }
                }
            }
            out.reverse();
        }
    }
    Ok(Word(out))
}

/// Shuffle product on the two-letter alphabet (all interleavings).
pub fn xy_shuffle(u: &XYWord, v: &XYWord) -> LinComb<Xy> {
    quasi_shuffle(u, v, &ZeroDiamond)
}

/// Letter-level shuffle of z-words, rewritten in the z basis.
pub fn xy_shuffle_z(u: &ZWord, v: &ZWord, conv: XyConvention) -> ZLinComb {
    let prod = xy_shuffle(&z_to_xy(u, conv), &z_to_xy(v, conv));
    prod.try_map_linear(|w| xy_to_z(w, conv).map(LinComb::word))
        .expect("shuffle of z-decomposable words stays z-decomposable")
}

/// `ds(u, v) = u ⧢ v - u * v` in the z basis, for z-words.
pub fn ds_z(u: &ZWord, v: &ZWord, conv: XyConvention) -> ZLinComb {
    let sh = xy_shuffle_z(u, v, conv);
    let st = quasi_shuffle(u, v, &Stuffle);
    &sh - &st
}

/// `ds(u, v)` for words given over `x`, `y` in the default convention.
/// Both must be empty or end in `y`.
pub fn ds(u: &XYWord, v: &XYWord) -> Result<ZLinComb> {
    let conv = XyConvention::YEnded;
    let zu = xy_to_z(u, conv)?;
    let zv = xy_to_z(v, conv)?;
    Ok(ds_z(&zu, &zv, conv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::words::z_words_of_weight;

    fn xy(s: &str) -> XYWord {
        Word(
            s.chars()
                .map(|c| if c == 'x' { Xy::X } else { Xy::Y })
                .collect(),
        )
    }

    #[test]
    fn shuffle_xy_xy() {
        let p = xy_shuffle(&xy("xy"), &xy("xy"));
        assert_eq!(p.coeff(&xy("xyxy")), int(2));
        assert_eq!(p.coeff(&xy("xxyy")), int(4));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn shuffle_counts_interleavings() {
        let p = xy_shuffle(&xy("xxy"), &xy("xyy"));
        let total: i64 = p
            .iter()
            .map(|(_, c)| i64::try_from(c.to_integer()).unwrap())
            .sum();
        assert_eq!(total, 20); // C(6, 3)
        assert_eq!(
            xy_shuffle(&XYWord::empty(), &xy("xy")),
            LinComb::word(xy("xy"))
        );
    }

    #[test]
    fn round_trip_conventions() {
        for k in 1..=6 {
            for w in z_words_of_weight(k) {
                for conv in [XyConvention::YEnded, XyConvention::YStarting] {
                    assert_eq!(xy_to_z(&z_to_xy(&w, conv), conv).unwrap(), w);
                }
            }
        }
        assert!(xy_to_z(&xy("yx"), XyConvention::YEnded).is_err());
        assert!(xy_to_z(&xy("xy"), XyConvention::YStarting).is_err());
    }

    #[test]
    fn ds_examples() {
        let d = ds(&xy("xy"), &xy("xy")).unwrap();
        let mut expected = ZLinComb::term(ZWord::from_indices(&[3, 1]), int(4));
        expected.add_term(ZWord::from_indices(&[4]), int(-1));
        assert_eq!(d, expected);
        assert!(ds(&xy("xy"), &XYWord::empty()).unwrap().is_zero());
        assert!(ds(&xy("yx"), &xy("y")).is_err());
    }

    #[test]
    fn ds_symmetric() {
        for a in 1..=4 {
            for b in 1..=(6 - a) {
                for u in z_words_of_weight(a) {
                    for v in z_words_of_weight(b) {
                        assert_eq!(
                            ds_z(&u, &v, XyConvention::YEnded),
                            ds_z(&v, &u, XyConvention::YEnded)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn conventions_related_by_reversal() {
        for a in 1..=3 {
            for b in 1..=3 {
                for u in z_words_of_weight(a) {
                    for v in z_words_of_weight(b) {
                        let rev = ds_z(&u.reversed(), &v.reversed(), XyConvention::YStarting)
                            .map_linear(|w| LinComb::word(w.reversed()));
                        assert_eq!(ds_z(&u, &v, XyConvention::YEnded), rev);
                    }
                }
            }
        }
    }
}
