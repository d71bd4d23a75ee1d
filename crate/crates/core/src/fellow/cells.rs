use super::{Element, NormalFormProvider};
use crate::ball::BallIndex;
use crate::error::{Error, Result};
use crate::group::{evaluate, GroupModel};
use crate::word::Word;

/// One cell of the decomposition of a loop along the normal forms of its
/// prefixes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCell {
    pub word: Word,
    /// `i` for cells between `u_i` and `u_{i+1}`; `None` for the two end
    /// cells.
    pub row: Option<usize>,
    /// Synchronous step `j` the cell sits at (1-based); end cells use 1.
    pub column: usize,
}

/// Cuts the loop `w = s_1 … s_n` into cells.
///
/// With `u_i = nf(π(s_1 … s_i))` and `v_{i,j}` a shortest word from the
/// length-`j` prefix of `u_i` to that of `u_{i+1}`, row `i` consists of
/// `u_{i,j} v_{i,j} u_{i+1,j}⁻¹ v_{i,j-1}⁻¹` for `j < M_i` and the closing
/// cell `u_{i,M} s_{i+1} u_{i+1,M}⁻¹ v_{i,M-1}⁻¹`, where
/// `M_i = max(|u_i|, |u_{i+1}|)` and missing symbols are skipped. The end
/// cells are `s_1 u_1⁻¹` and `u_{n-1} s_n`.
pub fn loop_cells<P: NormalFormProvider>(
    w: &Word,
    provider: &P,
    ball: &BallIndex<Element<P>>,
) -> Result<Vec<LoopCell>> {
    let model = provider.model();
    let alphabet = model.alphabet();
    if evaluate(model, w)? != model.identity() {
        return Err(Error::NotALoop {
            word: alphabet.format(w),
        });
    }
    let n = w.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let s = w.symbols();
    if n == 1 {
        return Ok(vec![LoopCell {
            word: w.clone(),
            row: None,
            column: 1,
        }]);
    }

    let mut normal_forms = Vec::with_capacity(n - 1);
    let mut g = model.identity();
    for &symbol in &s[..n - 1] {
        model.mul_gen(&mut g, symbol);
        normal_forms.push(provider.normal_form(&g)?);
    }
    let u = |i: usize| &normal_forms[i - 1];

    let mut cells = vec![LoopCell {
        word: Word::from_symbols(vec![s[0]]).concat(&u(1).inverse()),
        row: None,
        column: 1,
    }];
    for (i, &step) in s.iter().enumerate().take(n - 1).skip(1) {
        let (upper, lower) = (u(i), u(i + 1));
        let m = upper.len().max(lower.len());
        let mut top = model.identity();
        let mut bottom = model.identity();
        let mut previous = Word::empty();
        for j in 1..=m {
            let mut cell = Word::empty();
            if let Some(x) = upper.get(j - 1) {
                cell.push(x);
                model.mul_gen(&mut top, x);
            }
            if let Some(y) = lower.get(j - 1) {
                model.mul_gen(&mut bottom, y);
            }
            let connector = if j < m {
                ball.shortest_word(&model.difference(&top, &bottom))?
            } else {
                Word::from_symbols(vec![step])
            };
            cell.extend_from(&connector);
            if let Some(y) = lower.get(j - 1) {
                cell.push(y.inverse());
            }
            cell.extend_from(&previous.inverse());
            cells.push(LoopCell {
                word: cell,
                row: Some(i),
                column: j,
            });
            previous = connector;
        }
    }
    let mut last = u(n - 1).clone();
    last.push(s[n - 1]);
    cells.push(LoopCell {
        word: last,
        row: None,
        column: 1,
    });
    Ok(cells)
}
