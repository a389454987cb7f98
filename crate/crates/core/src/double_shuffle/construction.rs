use crate::arith::{CommutativeAlgebra, TruncatedQSeries};
use crate::brackets::eval_lincomb;
use crate::words::ZWord;

use super::stuffle_bracket;

/// `F_w(M) = sum over w = w_1..w_k (nonempty blocks) and 0 < m_1 < .. < m_k < M
/// of prod_i f(w_i, m_i)`.
///
/// `f(., m)` should be a stuffle homomorphism for each `m`; then so is
/// `w -> F_w(M)`. `f(empty, m)` must be the unit of the target algebra.
pub fn construction_f<A, F>(f: F, w: &ZWord, m_max: usize) -> A
where
    A: CommutativeAlgebra,
    F: Fn(&ZWord, usize) -> A,
{
    let one = f(&ZWord::empty(), 1).one_like();
    let l = w.len();
    // state[p]: the sum for the prefix of length p with all m_i below the
    // current m
    let mut state = vec![one.zero_like(); l + 1];
    state[0] = one;
    let letters = w.letters();
    for m in 1..m_max {
        for p in (1..=l).rev() {
            let mut add = state[p].zero_like();
            for q in 0..p {
                let block =
                    ZWord::from_indices(&letters[q..p].iter().map(|z| z.0).collect::<Vec<_>>());
                add = add.plus(&state[q].times(&f(&block, m)));
            }
            state[p] = state[p].plus(&add);
        }
    }
    state.swap_remove(l)
}

/// Test family `f_w(m) = [w]^*(q^m)`: a stuffle homomorphism for every `m`
/// because `q -> q^m` is a ring endomorphism.
pub fn stuffle_family(precision: usize) -> impl Fn(&ZWord, usize) -> TruncatedQSeries {
    move |w, m| eval_lincomb(&stuffle_bracket(&w.indices()), precision).substitute_power(m)
}
