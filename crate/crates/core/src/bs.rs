//! Baumslag–Solitar groups `BS(p,q) = ⟨a, t | t aᵖ t⁻¹ = a^q⟩`, `1 ≤ p < q`.
//!
//! Every element has a unique freely reduced spelling
//!
//! ```text
//! a^{e_ℓ} t^{ε_ℓ} … a^{e_1} t^{ε_1} a^k
//! ```
//!
//! with `0 ≤ e_i < q` before `t` and `0 ≤ e_i < p` before `t⁻¹`. The
//! exponents before each `t^{±1}` are coset representatives of `⟨a^q⟩` and
//! `⟨aᵖ⟩` respectively, and freeness forbids `t^{±1} a⁰ t^{∓1}`. This is
//! Britton's normal form read from the left, and it is prefix-closed.
//!
//! Right multiplication by `t^{±1}` only touches the tail: writing
//! `k = mq + r`, `a^k t = a^r t a^{mp}`, and symmetrically
//! `a^k t⁻¹ = a^r t⁻¹ a^{mq}` for `k = mp + r`. When `r = 0` and the last
//! block carries the opposite sign, the two `t` letters cancel and the last
//! block's exponent joins the new tail.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::ball::BallIndex;
use crate::error::{Error, Result};
use crate::group::GroupModel;
use crate::word::{Alphabet, GenSymbol, Word};

pub const A: GenSymbol = GenSymbol::positive(0);
pub const T: GenSymbol = GenSymbol::positive(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BsParams {
    p: u32,
    q: u32,
}

impl BsParams {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p >= 1 && p < q {
            Ok(Self { p, q })
        } else {
            Err(Error::InvalidParameter(format!(
                "BS(p,q) needs 1 <= p < q, got p={p}, q={q}"
            )))
        }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// Exponent bound for the block in front of `t^sign`.
    fn modulus(self, sign: TSign) -> u32 {
        match sign {
            TSign::Plus => self.q,
            TSign::Minus => self.p,
        }
    }

    /// What `a^{modulus}` becomes after crossing `t^sign`.
    fn carry(self, sign: TSign) -> u32 {
        match sign {
            TSign::Plus => self.p,
            TSign::Minus => self.q,
        }
    }
}

impl fmt::Display for BsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS({},{})", self.p, self.q)
    }
}

/// The sign `ε_i` of a stable letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TSign {
    Plus,
    Minus,
}

impl TSign {
    pub fn flip(self) -> Self {
        match self {
            TSign::Plus => TSign::Minus,
            TSign::Minus => TSign::Plus,
        }
    }

    pub fn symbol(self) -> GenSymbol {
        match self {
            TSign::Plus => T,
            TSign::Minus => T.inverse(),
        }
    }
}

/// `a^{exponent} t^{sign}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BsBlock {
    pub exponent: u32,
    pub sign: TSign,
}

impl BsBlock {
    pub fn new(exponent: u32, sign: TSign) -> Self {
        Self { exponent, sign }
    }
}

/// Blocks are stored in written order: `blocks[0]` is block `ℓ` and the last
/// entry is block 1, adjacent to the tail `a^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BsNormalForm {
    pub blocks: Vec<BsBlock>,
    pub tail: BigInt,
}

impl BsNormalForm {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(blocks: Vec<BsBlock>, tail: impl Into<BigInt>) -> Self {
        Self {
            blocks,
            tail: tail.into(),
        }
    }

    pub fn a_power(k: impl Into<BigInt>) -> Self {
        Self::new(Vec::new(), k)
    }

    /// Number of stable letters `ℓ`.
    pub fn ell(&self) -> usize {
        self.blocks.len()
    }

    pub fn validate(&self, params: BsParams) -> bool {
        let bounded = self
            .blocks
            .iter()
            .all(|b| b.exponent < params.modulus(b.sign));
        // blocks[i] sits right of blocks[i-1]; an empty a-power between them
        // must not separate opposite signs.
        let reduced = self
            .blocks
            .windows(2)
            .all(|pair| pair[1].exponent != 0 || pair[0].sign == pair[1].sign);
        bounded && reduced
    }

    /// `|w| = ℓ + Σ e_i + |k|`.
    pub fn word_len(&self) -> BigInt {
        let blocks: u64 = self.blocks.iter().map(|b| 1 + b.exponent as u64).sum();
        BigInt::from(blocks) + self.tail.abs()
    }

    pub fn to_word(&self) -> Word {
        let tail = self
            .tail
            .to_i64()
            .expect("tail too large to spell out as a word");
        let mut out = Vec::new();
        for b in &self.blocks {
            out.extend(std::iter::repeat_n(A, b.exponent as usize));
            out.push(b.sign.symbol());
        }
        out.extend(Word::power(A, tail).into_symbols());
        Word::from_symbols(out)
    }

    /// Reads a word of the normal-form shape, rejecting anything else.
    pub fn parse(w: &Word, params: BsParams) -> Result<Self> {
        let err = |position: usize, reason: String| Error::MalformedNormalForm { position, reason };
        let mut blocks: Vec<BsBlock> = Vec::new();
        let mut run: i64 = 0;
        for (position, &s) in w.iter().enumerate() {
            match s.base {
                0 => {
                    let delta = if s.inverted { -1 } else { 1 };
                    if run != 0 && run.signum() != delta {
                        return Err(err(position, "a-run is not freely reduced".into()));
                    }
                    run += delta;
                }
                1 => {
                    let sign = if s.inverted {
                        TSign::Minus
                    } else {
                        TSign::Plus
                    };
                    if run < 0 {
                        return Err(err(
                            position,
                            "negative a-power before a stable letter".into(),
                        ));
                    }
                    if run as u64 >= params.modulus(sign) as u64 {
                        return Err(err(
                            position,
                            format!(
                                "a^{run} before t^{} exceeds the bound {}",
                                if sign == TSign::Plus { "+1" } else { "-1" },
                                params.modulus(sign) - 1
                            ),
                        ));
                    }
                    if run == 0 && blocks.last().is_some_and(|b| b.sign != sign) {
                        return Err(err(position, "free reduction violated".into()));
                    }
                    blocks.push(BsBlock::new(run as u32, sign));
                    run = 0;
                }
                other => {
                    return Err(err(
                        position,
                        format!("generator index {other} not in {{a,t}}"),
                    ))
                }
            }
        }
        Ok(Self::new(blocks, run))
    }

    pub fn mul_gen(&mut self, s: GenSymbol, params: BsParams) {
        match (s.base, s.inverted) {
            (0, false) => self.tail += 1,
            (0, true) => self.tail -= 1,
            (_, false) => self.mul_stable(TSign::Plus, params),
            (_, true) => self.mul_stable(TSign::Minus, params),
        }
    }

    pub fn mul_a_power(&mut self, k: &BigInt) {
        self.tail += k;
    }

    fn mul_stable(&mut self, sign: TSign, params: BsParams) {
        let modulus = BigInt::from(params.modulus(sign));
        let (m, r) = self.tail.div_mod_floor(&modulus);
        let carried = m * params.carry(sign);
        let cancels = r.is_zero() && self.blocks.last().is_some_and(|b| b.sign == sign.flip());
        if cancels {
            let last = self.blocks.pop().expect("checked above");
            self.tail = carried + last.exponent;
        } else {
            let r = r.to_u32().expect("remainder below modulus");
            self.blocks.push(BsBlock::new(r, sign));
            self.tail = carried;
        }
    }

    /// `self ← self·other`, in `O(ℓ(other))` stable-letter steps.
    pub fn mul_normal_form(&mut self, other: &BsNormalForm, params: BsParams) {
        for b in &other.blocks {
            self.tail += b.exponent;
            self.mul_stable(b.sign, params);
        }
        self.tail += &other.tail;
    }

    pub fn inverse(&self, params: BsParams) -> BsNormalForm {
        let mut out = BsNormalForm::a_power(-&self.tail);
        for b in self.blocks.iter().rev() {
            out.mul_stable(b.sign.flip(), params);
            out.tail -= b.exponent;
        }
        out
    }
}

impl fmt::Display for BsNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha = bs_alphabet();
        f.write_str(&alpha.format(&self.to_word()))
    }
}

pub fn bs_alphabet() -> Alphabet {
    Alphabet::new(&['a', 't'], &[false, false])
}

pub fn bs_validate(nf: &BsNormalForm, params: BsParams) -> bool {
    nf.validate(params)
}

pub fn bs_to_word(nf: &BsNormalForm) -> Word {
    nf.to_word()
}

pub fn bs_parse(w: &Word, params: BsParams) -> Result<BsNormalForm> {
    BsNormalForm::parse(w, params)
}

pub fn bs_mul_gen(nf: &BsNormalForm, s: GenSymbol, params: BsParams) -> BsNormalForm {
    let mut out = nf.clone();
    out.mul_gen(s, params);
    out
}

pub fn bs_normal_form_of(w: &Word, params: BsParams) -> BsNormalForm {
    let mut nf = BsNormalForm::identity();
    for &s in w {
        nf.mul_gen(s, params);
    }
    nf
}

/// The model of `BS(p,q)` over the alphabet `{a, t}`.
#[derive(Clone, Debug)]
pub struct BaumslagSolitar {
    params: BsParams,
    alphabet: Alphabet,
}

impl BaumslagSolitar {
    pub fn new(params: BsParams) -> Self {
        Self {
            params,
            alphabet: bs_alphabet(),
        }
    }

    pub fn params(&self) -> BsParams {
        self.params
    }
}

impl GroupModel for BaumslagSolitar {
    type Element = BsNormalForm;

    fn name(&self) -> String {
        self.params.to_string()
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> BsNormalForm {
        BsNormalForm::identity()
    }

    fn mul_gen(&self, g: &mut BsNormalForm, s: GenSymbol) {
        g.mul_gen(s, self.params);
    }

    fn left_mul_gen(&self, s: GenSymbol, g: &mut BsNormalForm) {
        let mut x = BsNormalForm::identity();
        x.mul_gen(s, self.params);
        x.mul_normal_form(g, self.params);
        *g = x;
    }

    fn multiply(&self, g: &BsNormalForm, h: &BsNormalForm) -> BsNormalForm {
        let mut out = g.clone();
        out.mul_normal_form(h, self.params);
        out
    }

    fn inverse(&self, g: &BsNormalForm) -> BsNormalForm {
        g.inverse(self.params)
    }

    fn canonical_key(&self, g: &BsNormalForm) -> String {
        g.to_string()
    }
}

/// Positive constants of the two-sided estimate
/// `C1(ℓ + log(|k|+1)) − D1 ≤ d_A(g) ≤ C2(ℓ + log(|k|+1)) + D2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricConstants {
    pub c1: f64,
    pub c2: f64,
    pub d1: f64,
    pub d2: f64,
}

/// `ℓ + log₂(|k|+1)`.
pub fn metric_size(ell: usize, k: &BigInt) -> f64 {
    let magnitude = k.abs() + 1u32;
    let log = match magnitude.to_f64() {
        Some(x) if x.is_finite() => x.log2(),
        // Beyond f64 range: bit length is accurate to well under one unit.
        _ => magnitude.bits() as f64,
    };
    ell as f64 + log
}

pub fn bs_metric_bounds(ell: usize, k: &BigInt, consts: MetricConstants) -> (f64, f64) {
    let x = metric_size(ell, k);
    let lower = (consts.c1 * x - consts.d1).max(0.0);
    let upper = consts.c2 * x + consts.d2;
    (lower, upper)
}

/// Fits constants under which the metric estimate brackets every distance
/// in `ball`. The slopes are the extreme ratios `d / size` over
/// non-identity elements; the offsets absorb the remaining slack.
pub fn calibrate_metric_constants(ball: &BallIndex<BsNormalForm>) -> MetricConstants {
    let points: Vec<(f64, f64)> = ball
        .iter()
        .map(|(g, e)| (metric_size(g.ell(), &g.tail), e.distance as f64))
        .collect();
    let ratios = points.iter().filter(|(x, _)| *x > 0.0).map(|(x, d)| d / x);
    let (mut c1, mut c2) = (f64::INFINITY, 0.0f64);
    for r in ratios {
        c1 = c1.min(r);
        c2 = c2.max(r);
    }
    if !c1.is_finite() {
        c1 = 1.0;
        c2 = 1.0;
    }
    // Halve the lower slope so the offset is not forced to zero by the
    // single element attaining the minimum ratio.
    c1 *= 0.5;
    let slack = 1e-9;
    let d1 = points
        .iter()
        .map(|(x, d)| c1 * x - d)
        .fold(0.0f64, f64::max)
        + slack;
    let d2 = points
        .iter()
        .map(|(x, d)| d - c2 * x)
        .fold(0.0f64, f64::max)
        + slack;
    MetricConstants { c1, c2, d1, d2 }
}

/// The family `w = a^{mq²}`, `w_t = nf(π(w)·t) = t a^{mpq}`, probed at
/// `n = mq`, on which the logarithmic divergence is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsSharpnessProbe {
    pub w: Word,
    pub w_t: Word,
    pub n: usize,
}

pub fn bs_sharpness_family(m: u32, params: BsParams) -> Result<BsSharpnessProbe> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let (p, q) = (params.p() as i64, params.q() as i64);
    let m = m as i64;
    let g = BsNormalForm::a_power(m * q * q);
    let gt = bs_mul_gen(&g, T, params);
    debug_assert_eq!(
        gt,
        BsNormalForm::new(vec![BsBlock::new(0, TSign::Plus)], m * p * q)
    );
    Ok(BsSharpnessProbe {
        w: g.to_word(),
        w_t: gt.to_word(),
        n: (m * q) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::bfs_ball;
    use crate::group::evaluate;

    fn bs(p: u32, q: u32) -> BsParams {
        BsParams::new(p, q).unwrap()
    }

    fn word(text: &str) -> Word {
        bs_alphabet().parse(text).unwrap()
    }

    fn text(w: &Word) -> String {
        bs_alphabet().format(w)
    }

    #[test]
    fn params_are_checked() {
        assert!(BsParams::new(2, 2).is_err());
        assert!(BsParams::new(0, 2).is_err());
        assert!(BsParams::new(3, 2).is_err());
    }

    #[test]
    fn validate_examples() {
        assert!(BsNormalForm::a_power(3).validate(bs(1, 2)));
        let too_big = BsNormalForm::new(vec![BsBlock::new(2, TSign::Minus)], 0);
        assert!(!too_big.validate(bs(2, 3)));
        // t⁻¹ t with nothing in between
        let pinch = BsNormalForm::new(
            vec![BsBlock::new(0, TSign::Minus), BsBlock::new(0, TSign::Plus)],
            0,
        );
        assert!(!pinch.validate(bs(1, 2)));
        let ok = BsNormalForm::new(
            vec![BsBlock::new(0, TSign::Minus), BsBlock::new(1, TSign::Plus)],
            0,
        );
        assert!(ok.validate(bs(1, 2)));
    }

    #[test]
    fn serialization_examples() {
        assert_eq!(text(&BsNormalForm::a_power(-2).to_word()), "AA");
        let ta = BsNormalForm::new(vec![BsBlock::new(0, TSign::Plus)], 1);
        assert_eq!(text(&ta.to_word()), "ta");
        assert_eq!(ta.word_len(), BigInt::from(2));
    }

    #[test]
    fn parse_rejects_non_normal_words() {
        let p = bs(1, 2);
        assert!(matches!(
            bs_parse(&word("tT"), p),
            Err(Error::MalformedNormalForm { position: 1, .. })
        ));
        assert!(bs_parse(&word("aat"), p).is_err());
        assert!(bs_parse(&word("At"), p).is_err());
        assert!(bs_parse(&word("aAt"), p).is_err());
        assert!(bs_parse(&word("aT"), p).is_err());
        assert_eq!(
            bs_parse(&word("atTTaaAA"), bs(2, 3)).unwrap_err(),
            Error::MalformedNormalForm {
                position: 2,
                reason: "free reduction violated".into()
            }
        );
        assert_eq!(
            bs_parse(&word("ttAA"), p).unwrap(),
            BsNormalForm::new(
                vec![BsBlock::new(0, TSign::Plus), BsBlock::new(0, TSign::Plus)],
                -2
            )
        );
    }

    #[test]
    fn multiplication_examples() {
        let p = bs(1, 2);
        assert_eq!(
            bs_mul_gen(&BsNormalForm::identity(), A, p),
            BsNormalForm::a_power(1)
        );
        let ta = BsNormalForm::new(vec![BsBlock::new(0, TSign::Plus)], 1);
        assert_eq!(bs_mul_gen(&BsNormalForm::a_power(2), T, p), ta);
        assert_eq!(bs_mul_gen(&ta, T.inverse(), p), BsNormalForm::a_power(2));
    }

    #[test]
    fn normal_form_of_examples() {
        let p = bs(1, 2);
        assert_eq!(
            bs_normal_form_of(&Word::empty(), p),
            BsNormalForm::identity()
        );
        assert_eq!(bs_normal_form_of(&word("taT"), p), BsNormalForm::a_power(2));
        assert_eq!(
            bs_normal_form_of(&word("aatA"), p),
            BsNormalForm::new(vec![BsBlock::new(0, TSign::Plus)], 0)
        );
        // t a² t⁻¹ = a³ in BS(2,3)
        assert_eq!(
            bs_normal_form_of(&word("taaT"), bs(2, 3)),
            BsNormalForm::a_power(3)
        );
    }

    #[test]
    fn remainder_uses_floor_division() {
        // a⁻¹ t in BS(1,2): -1 = (-1)·2 + 1, so a⁻¹ t = a t a⁻¹
        let nf = bs_normal_form_of(&word("At"), bs(1, 2));
        assert_eq!(
            nf,
            BsNormalForm::new(vec![BsBlock::new(1, TSign::Plus)], -1)
        );
        assert!(nf.validate(bs(1, 2)));
    }

    #[test]
    fn metric_bounds_examples() {
        let consts = MetricConstants {
            c1: 1.5,
            c2: 2.0,
            d1: 3.0,
            d2: 4.0,
        };
        assert_eq!(bs_metric_bounds(0, &BigInt::from(0), consts), (0.0, 4.0));
        let unit = MetricConstants {
            c1: 1.0,
            c2: 1.0,
            d1: 0.0,
            d2: 0.0,
        };
        assert_eq!(bs_metric_bounds(2, &BigInt::from(0), unit), (2.0, 2.0));
    }

    #[test]
    fn calibrated_constants_bracket_the_ball() {
        let model = BaumslagSolitar::new(bs(1, 2));
        let ball = bfs_ball(&model, 8).unwrap();
        let consts = calibrate_metric_constants(&ball);
        assert!(consts.c1 > 0.0 && consts.c2 > 0.0 && consts.d1 > 0.0 && consts.d2 > 0.0);
        for (g, e) in ball.iter() {
            let (lo, hi) = bs_metric_bounds(g.ell(), &g.tail, consts);
            let d = e.distance as f64;
            assert!(lo <= d && d <= hi, "{g}: {lo} <= {d} <= {hi}");
        }
    }

    #[test]
    fn sharpness_family_examples() {
        let p = bs(1, 2);
        let probe = bs_sharpness_family(1, p).unwrap();
        assert_eq!(text(&probe.w), "aaaa");
        assert_eq!(text(&probe.w_t), "taa");
        assert_eq!(probe.n, 2);
        let probe = bs_sharpness_family(2, p).unwrap();
        assert_eq!(text(&probe.w), "a".repeat(8));
        assert_eq!(text(&probe.w_t), "taaaa");
        assert_eq!(probe.n, 4);
        assert!(bs_sharpness_family(0, p).is_err());
    }

    #[test]
    fn ball_distances_of_small_elements() {
        let model = BaumslagSolitar::new(bs(1, 2));
        let ball = bfs_ball(&model, 1).unwrap();
        assert_eq!(ball.len(), 5);
        let ball = bfs_ball(&model, 4).unwrap();
        assert_eq!(ball.distance(&BsNormalForm::a_power(2)).unwrap(), 2);
        let w = ball.shortest_word(&BsNormalForm::a_power(2)).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(evaluate(&model, &w).unwrap(), BsNormalForm::a_power(2));
    }

    #[test]
    fn group_operations_agree_with_words() {
        for (p, q) in [(1, 2), (2, 3), (2, 5)] {
            let model = BaumslagSolitar::new(bs(p, q));
            let ball = bfs_ball(&model, 5).unwrap();
            let elems: Vec<_> = ball.elements().cloned().step_by(7).collect();
            for g in &elems {
                let inv = model.inverse(g);
                assert_eq!(model.multiply(g, &inv), BsNormalForm::identity());
                for h in elems.iter().take(20) {
                    let expect = bs_normal_form_of(&g.to_word().concat(&h.to_word()), bs(p, q));
                    assert_eq!(model.multiply(g, h), expect);
                }
                for s in model.alphabet().directions() {
                    let mut left = g.clone();
                    model.left_mul_gen(s, &mut left);
                    let expect = bs_normal_form_of(
                        &Word::from_symbols(vec![s]).concat(&g.to_word()),
                        bs(p, q),
                    );
                    assert_eq!(left, expect);
                }
            }
        }
    }
}
