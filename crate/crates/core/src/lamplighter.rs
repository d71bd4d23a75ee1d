//! The lamplighter group `ℤ₂ ≀ ℤ²` and its spiral normal form.
//!
//! Elements are pairs (lit lamps, lamplighter position). `a` and `b` move
//! the lamplighter by `(1,0)` and `(0,1)`; `c` toggles the lamp under it.
//!
//! The normal form walks a square spiral `τ: ℕ → ℤ²` from the origin up to
//! the furthest lit lamp (in spiral order), writing `c` at every lit lamp,
//! then walks along the spiral, forwards or backwards, to the lamplighter's
//! final position.

use std::collections::BTreeSet;
use std::fmt;

use crate::group::{unit_step, GroupModel, Point};
use crate::word::{Alphabet, GenSymbol, Word};

pub const A: GenSymbol = GenSymbol::positive(0);
pub const B: GenSymbol = GenSymbol::positive(1);
pub const C: GenSymbol = GenSymbol::positive(2);

/// Ring index `r(p) = max(|x|, |y|)`.
pub fn ring(p: Point) -> u64 {
    p.0.unsigned_abs().max(p.1.unsigned_abs())
}

/// `τ(k)`: the counterclockwise square spiral
/// `(0,0), (1,0), (1,1), (0,1), (-1,1), (-1,0), (-1,-1), (0,-1), (1,-1), (2,-1), …`.
///
/// Ring `r ≥ 1` occupies indices `(2r-1)² ..= (2r+1)² - 1` and starts at
/// `(r, 1-r)`.
pub fn spiral(k: u64) -> Point {
    if k == 0 {
        return (0, 0);
    }
    let r = k.isqrt().div_ceil(2);
    let t = (k - (2 * r - 1).pow(2)) as i64;
    let r = r as i64;
    match t / (2 * r) {
        0 => (r, t + 1 - r),
        1 => (3 * r - 1 - t, r),
        2 => (-r, 5 * r - 1 - t),
        _ => (t - 7 * r + 1, -r),
    }
}

/// `τ⁻¹(p)`.
pub fn spiral_index(p: Point) -> u64 {
    let r = ring(p) as i64;
    if r == 0 {
        return 0;
    }
    let (x, y) = p;
    let t = if x == r && y > -r {
        y + r - 1
    } else if y == r {
        3 * r - 1 - x
    } else if x == -r {
        5 * r - 1 - y
    } else {
        x + 7 * r - 1
    };
    ((2 * r - 1) * (2 * r - 1) + t) as u64
}

/// Index bounds `(2r-1)² - 1 ≤ τ⁻¹(p) ≤ (2r+1)² - 1` for `r = r(p)`.
pub fn ring_index_bounds(r: u64) -> (i128, i128) {
    let r = r as i128;
    ((2 * r - 1).pow(2) - 1, (2 * r + 1).pow(2) - 1)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampElement {
    /// Lit lamps, kept sorted so equal elements hash equally.
    pub support: BTreeSet<Point>,
    pub position: Point,
}

impl LampElement {
    pub fn new(support: impl IntoIterator<Item = Point>, position: Point) -> Self {
        Self {
            support: support.into_iter().collect(),
            position,
        }
    }

    pub fn toggle(&mut self, p: Point) {
        if !self.support.remove(&p) {
            self.support.insert(p);
        }
    }

    pub fn is_lit(&self, p: Point) -> bool {
        self.support.contains(&p)
    }
}

impl fmt::Display for LampElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lamps: Vec<String> = self
            .support
            .iter()
            .map(|(x, y)| format!("{x},{y}"))
            .collect();
        write!(
            f,
            "[{}]@{},{}",
            lamps.join(";"),
            self.position.0,
            self.position.1
        )
    }
}

pub fn lamp_alphabet() -> Alphabet {
    Alphabet::new(&['a', 'b', 'c'], &[false, false, true])
}

pub fn lamp_mul_gen(g: &LampElement, s: GenSymbol) -> LampElement {
    let mut out = g.clone();
    mul_gen_in_place(&mut out, s);
    out
}

fn mul_gen_in_place(g: &mut LampElement, s: GenSymbol) {
    if s.base == 2 {
        let here = g.position;
        g.toggle(here);
    } else {
        let (dx, dy) = unit_step(s);
        g.position.0 += dx;
        g.position.1 += dy;
    }
}

fn step_symbol(from: Point, to: Point) -> GenSymbol {
    match (to.0 - from.0, to.1 - from.1) {
        (1, 0) => A,
        (-1, 0) => A.inverse(),
        (0, 1) => B,
        (0, -1) => B.inverse(),
        d => unreachable!("spiral steps are unit steps, got {d:?}"),
    }
}

/// The spiral normal form `u·v` of `g`.
pub fn lamp_normal_form(g: &LampElement) -> Word {
    let m = g
        .support
        .iter()
        .map(|&p| spiral_index(p))
        .max()
        .unwrap_or(0);
    let mut out = Word::empty();
    if g.is_lit((0, 0)) {
        out.push(C);
    }
    let mut here = (0, 0);
    for i in 1..=m {
        let next = spiral(i);
        out.push(step_symbol(here, next));
        if g.is_lit(next) {
            out.push(C);
        }
        here = next;
    }
    let l = spiral_index(g.position);
    if l > m {
        for i in m + 1..=l {
            let next = spiral(i);
            out.push(step_symbol(here, next));
            here = next;
        }
    } else {
        for i in (l..m).rev() {
            let next = spiral(i);
            out.push(step_symbol(here, next));
            here = next;
        }
    }
    out
}

/// The model of `ℤ₂ ≀ ℤ²` over `{a, b, c}`.
#[derive(Clone, Debug)]
pub struct Lamplighter {
    alphabet: Alphabet,
}

impl Lamplighter {
    pub fn new() -> Self {
        Self {
            alphabet: lamp_alphabet(),
        }
    }
}

impl Default for Lamplighter {
    fn default() -> Self {
        Self::new()
    }
}

impl GroupModel for Lamplighter {
    type Element = LampElement;

    fn name(&self) -> String {
        "Z2wrZ2".into()
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> LampElement {
        LampElement::default()
    }

    fn mul_gen(&self, g: &mut LampElement, s: GenSymbol) {
        mul_gen_in_place(g, s);
    }

    fn left_mul_gen(&self, s: GenSymbol, g: &mut LampElement) {
        if s.base == 2 {
            g.toggle((0, 0));
        } else {
            let (dx, dy) = unit_step(s);
            g.support = g.support.iter().map(|&(x, y)| (x + dx, y + dy)).collect();
            g.position.0 += dx;
            g.position.1 += dy;
        }
    }

    /// `(φ, z)(ψ, w) = (φ + ψ(· - z), z + w)`.
    fn multiply(&self, g: &LampElement, h: &LampElement) -> LampElement {
        let (zx, zy) = g.position;
        let mut out = g.clone();
        for &(x, y) in &h.support {
            out.toggle((x + zx, y + zy));
        }
        out.position = (zx + h.position.0, zy + h.position.1);
        out
    }

    fn inverse(&self, g: &LampElement) -> LampElement {
        let (zx, zy) = g.position;
        LampElement::new(g.support.iter().map(|&(x, y)| (x - zx, y - zy)), (-zx, -zy))
    }

    fn canonical_key(&self, g: &LampElement) -> String {
        g.to_string()
    }

    fn word_length(&self, g: &LampElement) -> Option<u32> {
        lamp_word_length(g)
    }
}

/// Largest support handled by [`lamp_word_length`].
pub const EXACT_LENGTH_MAX_LAMPS: usize = 16;

/// `d_A(g)`: one `c` per lit lamp plus the shortest grid walk from the
/// origin through every lit lamp to the lamplighter's position, found by
/// dynamic programming over subsets. `None` above
/// [`EXACT_LENGTH_MAX_LAMPS`] lit lamps.
pub fn lamp_word_length(g: &LampElement) -> Option<u32> {
    let lamps: Vec<Point> = g.support.iter().copied().collect();
    let k = lamps.len();
    if k > EXACT_LENGTH_MAX_LAMPS {
        return None;
    }
    let manhattan = |p: Point, q: Point| (p.0 - q.0).unsigned_abs() + (p.1 - q.1).unsigned_abs();
    if k == 0 {
        return Some(manhattan((0, 0), g.position) as u32);
    }
    // best[mask * k + i]: shortest walk from the origin through `mask`
    // ending at lamp i.
    let full = (1usize << k) - 1;
    let mut best = vec![u64::MAX; (full + 1) * k];
    for (i, &p) in lamps.iter().enumerate() {
        best[(1 << i) * k + i] = manhattan((0, 0), p);
    }
    for mask in 1..=full {
        for i in 0..k {
            let here = best[mask * k + i];
            if here == u64::MAX || mask & (1 << i) == 0 {
                continue;
            }
            for j in 0..k {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let slot = &mut best[(mask | 1 << j) * k + j];
                *slot = (*slot).min(here + manhattan(lamps[i], lamps[j]));
            }
        }
    }
    let walk = (0..k)
        .map(|i| best[full * k + i] + manhattan(lamps[i], g.position))
        .min()?;
    Some((walk + k as u64) as u32)
}

/// `g_m = ({τ(m)}, (0,0))` and the closed-form divergence
/// `2(|x_m| + |y_m| + 1)` at `n = m + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LampSharpnessProbe {
    pub g: LampElement,
    pub n: usize,
    pub claimed_distance: u64,
}

pub fn lamp_sharpness_family(m: u64) -> LampSharpnessProbe {
    let (x, y) = spiral(m);
    LampSharpnessProbe {
        g: LampElement::new([(x, y)], (0, 0)),
        n: m as usize + 1,
        claimed_distance: 2 * (x.unsigned_abs() + y.unsigned_abs() + 1),
    }
}
