//! Reference implementations shared by the integration tests. They work
//! directly on words and share no code with the library's group models.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fellow_core::bs::{BsBlock, BsNormalForm, TSign};
use fellow_core::lamplighter::LampElement;
use fellow_core::{GenSymbol, Word};

/// Canonical form of a word in `BS(p,q)` computed by pinch reduction
/// followed by left-to-right coset normalization.
pub fn bs_reference(w: &Word, p: i128, q: i128) -> BsNormalForm {
    // exps[i] is the a-exponent before letter i of `signs`; the last entry
    // is the trailing exponent.
    let mut exps: Vec<i128> = vec![0];
    let mut signs: Vec<i8> = Vec::new();
    for s in w {
        match (s.base, s.inverted) {
            (0, false) => *exps.last_mut().unwrap() += 1,
            (0, true) => *exps.last_mut().unwrap() -= 1,
            (_, inverted) => {
                let sign = if inverted { -1 } else { 1 };
                let pinch = match (signs.last(), sign) {
                    (Some(1), -1) => Some((p, q)),
                    (Some(-1), 1) => Some((q, p)),
                    _ => None,
                };
                let k = *exps.last().unwrap();
                match pinch {
                    Some((divisor, image)) if k % divisor == 0 => {
                        exps.pop();
                        signs.pop();
                        *exps.last_mut().unwrap() += k / divisor * image;
                    }
                    _ => {
                        signs.push(sign);
                        exps.push(0);
                    }
                }
            }
        }
    }
    let mut blocks = Vec::new();
    for (i, &sign) in signs.iter().enumerate() {
        let (modulus, carry) = if sign == 1 { (q, p) } else { (p, q) };
        let k = exps[i];
        let r = k.rem_euclid(modulus);
        let m = k.div_euclid(modulus);
        exps[i + 1] += m * carry;
        blocks.push(BsBlock::new(
            r as u32,
            if sign == 1 { TSign::Plus } else { TSign::Minus },
        ));
    }
    BsNormalForm::new(blocks, *exps.last().unwrap())
}

/// Lamp configuration and position reached by walking `w` over `{a,b,c}`.
pub fn lamp_reference(w: &Word) -> LampElement {
    let mut lit = BTreeSet::new();
    let mut pos = (0i64, 0i64);
    for s in w {
        match (s.base, s.inverted) {
            (0, false) => pos.0 += 1,
            (0, true) => pos.0 -= 1,
            (1, false) => pos.1 += 1,
            (1, true) => pos.1 -= 1,
            _ => {
                if !lit.remove(&pos) {
                    lit.insert(pos);
                }
            }
        }
    }
    LampElement::new(lit, pos)
}

pub fn random_word(rng: &mut impl rand::Rng, rank: u8, involution: Option<u8>, len: usize) -> Word {
    (0..len)
        .map(|_| {
            let base = rng.gen_range(0..rank);
            let inverted = Some(base) != involution && rng.gen_bool(0.5);
            GenSymbol::new(base, inverted)
        })
        .collect()
}
