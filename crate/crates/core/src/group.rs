//! The abstract group interface and the two abelian models.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;
use crate::word::{Alphabet, GenSymbol, Word};

/// A finitely generated group given by generator multiplication.
///
/// `Element` values are canonical: two elements compare equal exactly when
/// they are the same group element, so they double as canonical keys in
/// hash maps. [`GroupModel::canonical_key`] gives the printable form.
pub trait GroupModel: Send + Sync {
    type Element: Clone + Eq + Hash + Debug + Send + Sync;

    fn name(&self) -> String;

    fn alphabet(&self) -> &Alphabet;

    fn identity(&self) -> Self::Element;

    /// `g ← g·s`.
    fn mul_gen(&self, g: &mut Self::Element, s: GenSymbol);

    fn multiply(&self, g: &Self::Element, h: &Self::Element) -> Self::Element;

    fn inverse(&self, g: &Self::Element) -> Self::Element;

    fn canonical_key(&self, g: &Self::Element) -> String;

    /// `d_A(g)` by a closed formula, for models that have one. `None` means
    /// callers fall back to breadth-first search.
    fn word_length(&self, _g: &Self::Element) -> Option<u32> {
        None
    }

    /// `g ← s·g`.
    fn left_mul_gen(&self, s: GenSymbol, g: &mut Self::Element) {
        let mut x = self.identity();
        self.mul_gen(&mut x, s);
        *g = self.multiply(&x, g);
    }

    fn apply(&self, g: &Self::Element, s: GenSymbol) -> Self::Element {
        let mut out = g.clone();
        self.mul_gen(&mut out, s);
        out
    }

    /// `g⁻¹h`.
    fn difference(&self, g: &Self::Element, h: &Self::Element) -> Self::Element {
        self.multiply(&self.inverse(g), h)
    }
}

/// `π(w)`: left-to-right fold of generator multiplication from the identity.
pub fn evaluate<M: GroupModel + ?Sized>(model: &M, w: &Word) -> Result<M::Element> {
    model.alphabet().check(w)?;
    Ok(evaluate_unchecked(model, w))
}

pub(crate) fn evaluate_unchecked<M: GroupModel + ?Sized>(model: &M, w: &Word) -> M::Element {
    let mut g = model.identity();
    for &s in w {
        model.mul_gen(&mut g, s);
    }
    g
}

/// ℤ = ⟨a⟩.
#[derive(Clone, Debug)]
pub struct IntegerLine {
    alphabet: Alphabet,
}

impl IntegerLine {
    pub fn new() -> Self {
        Self {
            alphabet: Alphabet::new(&['a'], &[false]),
        }
    }
}

impl Default for IntegerLine {
    fn default() -> Self {
        Self::new()
    }
}

fn step(s: GenSymbol) -> i64 {
    if s.inverted {
        -1
    } else {
        1
    }
}

impl GroupModel for IntegerLine {
    type Element = i64;

    fn name(&self) -> String {
        "Z".into()
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> i64 {
        0
    }

    fn mul_gen(&self, g: &mut i64, s: GenSymbol) {
        *g += step(s);
    }

    fn left_mul_gen(&self, s: GenSymbol, g: &mut i64) {
        *g += step(s);
    }

    fn multiply(&self, g: &i64, h: &i64) -> i64 {
        g + h
    }

    fn inverse(&self, g: &i64) -> i64 {
        -g
    }

    fn canonical_key(&self, g: &i64) -> String {
        g.to_string()
    }
}

/// ℤ² = ⟨a, b | ab = ba⟩ with `a = (1,0)`, `b = (0,1)`.
#[derive(Clone, Debug)]
pub struct IntegerPlane {
    alphabet: Alphabet,
}

impl IntegerPlane {
    pub fn new() -> Self {
        Self {
            alphabet: Alphabet::new(&['a', 'b'], &[false, false]),
        }
    }
}

impl Default for IntegerPlane {
    fn default() -> Self {
        Self::new()
    }
}

pub type Point = (i64, i64);

pub(crate) fn unit_step(s: GenSymbol) -> Point {
    match s.base {
        0 => (step(s), 0),
        _ => (0, step(s)),
    }
}

impl GroupModel for IntegerPlane {
    type Element = Point;

    fn name(&self) -> String {
        "Z2".into()
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Point {
        (0, 0)
    }

    fn mul_gen(&self, g: &mut Point, s: GenSymbol) {
        let (dx, dy) = unit_step(s);
        g.0 += dx;
        g.1 += dy;
    }

    fn left_mul_gen(&self, s: GenSymbol, g: &mut Point) {
        self.mul_gen(g, s);
    }

    fn multiply(&self, g: &Point, h: &Point) -> Point {
        (g.0 + h.0, g.1 + h.1)
    }

    fn inverse(&self, g: &Point) -> Point {
        (-g.0, -g.1)
    }

    fn canonical_key(&self, g: &Point) -> String {
        format!("{},{}", g.0, g.1)
    }
}
