use super::{Letter, Word};

/// Deconcatenation `w -> sum_{uv = w} u ⊗ v`, as the list of all `l + 1`
/// splittings from `(∅, w)` to `(w, ∅)`.
pub fn deconcat_coproduct<L: Letter>(w: &Word<L>) -> Vec<(Word<L>, Word<L>)> {
    let l = w.letters();
    (0..=l.len())
        .map(|i| (Word(l[..i].to_vec()), Word(l[i..].to_vec())))
        .collect()
}
