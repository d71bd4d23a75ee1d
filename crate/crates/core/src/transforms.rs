//! Rewritings of a normal form that keep the fellow-traveler behaviour
//! under control while destroying other properties.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::ball::{bfs_ball, BallIndex};
use crate::error::{Error, Result};
use crate::fellow::{in_language, Element, NormalFormProvider};
use crate::group::{evaluate, GroupModel};
use crate::word::{GenSymbol, Word};

fn require_loop<M: GroupModel>(model: &M, u: &Word) -> Result<()> {
    if u.is_empty() {
        return Err(Error::InvalidParameter("loop word must be nonempty".into()));
    }
    if evaluate(model, u)? != model.identity() {
        return Err(Error::NotALoop {
            word: model.alphabet().format(u),
        });
    }
    Ok(())
}

/// `nf'(g) = u^{ℓ²} nf(g)` with `ℓ = |nf(g)|`.
#[derive(Clone, Debug)]
pub struct FirstWay<P> {
    inner: P,
    prefix_loop: Word,
}

impl<P: NormalFormProvider> FirstWay<P> {
    pub fn new(inner: P, prefix_loop: Word) -> Result<Self> {
        require_loop(inner.model(), &prefix_loop)?;
        Ok(Self { inner, prefix_loop })
    }
}

pub fn first_way<P: NormalFormProvider>(inner: P, prefix_loop: Word) -> Result<FirstWay<P>> {
    FirstWay::new(inner, prefix_loop)
}

impl<P: NormalFormProvider> NormalFormProvider for FirstWay<P> {
    type Model = P::Model;

    fn model(&self) -> &P::Model {
        self.inner.model()
    }

    fn normal_form(&self, g: &Element<P>) -> Result<Word> {
        let w = self.inner.normal_form(g)?;
        let mut out = self.prefix_loop.repeat(w.len() * w.len());
        out.extend_from(&w);
        Ok(out)
    }

    fn name(&self) -> String {
        let alphabet = self.model().alphabet();
        format!(
            "{}+first({})",
            self.inner.name(),
            alphabet.format(&self.prefix_loop)
        )
    }
}

/// Supplies the loop `u_k` inserted after the `k`-th letter.
pub trait LoopChooser: Send + Sync {
    /// `(C₁, C₂)` with `C₁√k ≤ |u_k| ≤ C₂√k`.
    fn band(&self) -> (f64, f64);

    /// `u_k` for the word `context` being rewritten.
    fn loop_at(&self, k: usize, context: &Word) -> Word;
}

/// `u_k = base^{⌈√k⌉}`, with band `(|base|, 2|base|)`.
#[derive(Clone, Debug)]
pub struct RepeatedLoop {
    base: Word,
}

impl RepeatedLoop {
    pub fn new<M: GroupModel>(model: &M, base: Word) -> Result<Self> {
        require_loop(model, &base)?;
        Ok(Self { base })
    }

    pub fn base(&self) -> &Word {
        &self.base
    }
}

impl LoopChooser for RepeatedLoop {
    fn band(&self) -> (f64, f64) {
        let len = self.base.len() as f64;
        (len, 2.0 * len)
    }

    fn loop_at(&self, k: usize, _context: &Word) -> Word {
        self.base
            .repeat(k.isqrt() + usize::from(k.isqrt().pow(2) != k))
    }
}

/// `nf''(g) = s_1 u_1 s_2 u_2 … s_m u_m` for `nf(g) = s_1 … s_m`.
#[derive(Clone, Debug)]
pub struct SecondWay<P, L> {
    inner: P,
    chooser: L,
}

impl<P: NormalFormProvider, L: LoopChooser> SecondWay<P, L> {
    pub fn new(inner: P, chooser: L) -> Self {
        Self { inner, chooser }
    }

    fn checked_loop(&self, k: usize, context: &Word) -> Result<Word> {
        let model = self.inner.model();
        let u = self.chooser.loop_at(k, context);
        if evaluate(model, &u)? != model.identity() {
            return Err(Error::Contract(format!(
                "loop u_{k} = {} is not a loop",
                model.alphabet().format(&u)
            )));
        }
        let (lo, hi) = self.chooser.band();
        let root = (k as f64).sqrt();
        let len = u.len() as f64;
        if len < lo * root || len > hi * root {
            return Err(Error::Contract(format!(
                "|u_{k}| = {} is outside [{:.3}, {:.3}]",
                u.len(),
                lo * root,
                hi * root
            )));
        }
        Ok(u)
    }
}

pub fn second_way<P: NormalFormProvider, L: LoopChooser>(inner: P, chooser: L) -> SecondWay<P, L> {
    SecondWay::new(inner, chooser)
}

impl<P: NormalFormProvider, L: LoopChooser> NormalFormProvider for SecondWay<P, L> {
    type Model = P::Model;

    fn model(&self) -> &P::Model {
        self.inner.model()
    }

    fn normal_form(&self, g: &Element<P>) -> Result<Word> {
        let w = self.inner.normal_form(g)?;
        let mut out = Word::empty();
        for (i, &s) in w.iter().enumerate() {
            out.push(s);
            out.extend_from(&self.checked_loop(i + 1, &w)?);
        }
        Ok(out)
    }

    fn name(&self) -> String {
        format!("{}+second", self.inner.name())
    }
}

/// Supplies, for a prefix `u` of a normal form, a word `x` with
/// `|x| ≤ c` and `ux` a normal form.
pub trait CompletionRule<P: NormalFormProvider>: Send + Sync {
    fn constant(&self) -> usize;

    /// `None` when no completion exists.
    fn complete(&self, provider: &P, prefix: &Word) -> Result<Option<Word>>;
}

/// Finds completions by searching the radius-`c` ball around `π(u)`,
/// preferring the shortest and then lexicographically least `x`.
/// Results are memoized per prefix.
#[derive(Debug)]
pub struct SearchCompletion<E> {
    c: usize,
    offsets: Vec<E>,
    memo: RwLock<HashMap<Word, Option<Word>>>,
}

impl<E: Clone + Eq + std::hash::Hash> SearchCompletion<E> {
    pub fn new<M: GroupModel<Element = E>>(model: &M, c: usize) -> Result<Self> {
        let radius = u32::try_from(c).map_err(|_| Error::InvalidParameter("c too large".into()))?;
        let ball: BallIndex<E> = bfs_ball(model, radius)?;
        Ok(Self {
            c,
            offsets: ball.elements().cloned().collect(),
            memo: RwLock::new(HashMap::new()),
        })
    }
}

impl<P: NormalFormProvider> CompletionRule<P> for SearchCompletion<Element<P>> {
    fn constant(&self) -> usize {
        self.c
    }

    fn complete(&self, provider: &P, prefix: &Word) -> Result<Option<Word>> {
        if let Some(hit) = self.memo.read().unwrap().get(prefix) {
            return Ok(hit.clone());
        }
        let model = provider.model();
        let base = evaluate(model, prefix)?;
        let mut best: Option<Word> = None;
        for y in &self.offsets {
            let w = provider.normal_form(&model.multiply(&base, y))?;
            if w.len() > prefix.len() + self.c || !w.starts_with(prefix) {
                continue;
            }
            let x = w.slice(prefix.len()..w.len());
            if best.as_ref().is_none_or(|b| (x.len(), &x) < (b.len(), b)) {
                best = Some(x);
            }
        }
        self.memo
            .write()
            .unwrap()
            .insert(prefix.clone(), best.clone());
        Ok(best)
    }
}

/// Turns a normal form that is quasiregular with constant `c` into one that
/// is quasiprefix-closed with constant `4c`.
///
/// `w = u_1 … u_m t` is cut into blocks of length `c + 1` (`|t| ≤ c`) and
/// rewritten to `u_1 q(u_1) u_2 q(u_1 u_2) … u_{m-1} q(u_1 … u_{m-1}) u_m t`,
/// where `q(u) = x y y⁻¹ x⁻¹` with `x` the completion of `u` and `y` the
/// first generator repeated `c - |x|` times.
#[derive(Debug)]
pub struct QuasiprefixClosure<P, R> {
    inner: P,
    rule: R,
}

impl<P: NormalFormProvider, R: CompletionRule<P>> QuasiprefixClosure<P, R> {
    pub fn new(inner: P, rule: R) -> Self {
        Self { inner, rule }
    }

    pub fn constant(&self) -> usize {
        self.rule.constant()
    }

    fn detour(&self, prefix: &Word) -> Result<Word> {
        let c = self.rule.constant();
        let alphabet = self.inner.model().alphabet();
        let x = self.rule.complete(&self.inner, prefix)?.ok_or_else(|| {
            Error::Contract(format!(
                "prefix {} has no completion of length at most {c}",
                alphabet.format(prefix)
            ))
        })?;
        if x.len() > c || !in_language(&self.inner, &prefix.concat(&x))? {
            return Err(Error::Contract(format!(
                "completion {} of prefix {} is not a normal form within length {c}",
                alphabet.format(&x),
                alphabet.format(prefix)
            )));
        }
        let y = Word::power(GenSymbol::positive(0), (c - x.len()) as i64);
        Ok(x.concat(&y).concat(&y.inverse()).concat(&x.inverse()))
    }
}

pub fn quasiprefix_closure<P: NormalFormProvider>(
    inner: P,
    c: usize,
) -> Result<QuasiprefixClosure<P, SearchCompletion<Element<P>>>> {
    let rule = SearchCompletion::new(inner.model(), c)?;
    Ok(QuasiprefixClosure::new(inner, rule))
}

impl<P: NormalFormProvider, R: CompletionRule<P>> NormalFormProvider for QuasiprefixClosure<P, R> {
    type Model = P::Model;

    fn model(&self) -> &P::Model {
        self.inner.model()
    }

    fn normal_form(&self, g: &Element<P>) -> Result<Word> {
        let w = self.inner.normal_form(g)?;
        let c = self.rule.constant();
        if c == 0 {
            return Ok(w);
        }
        let block = c + 1;
        let blocks = w.len() / block;
        let mut out = Word::empty();
        for i in 1..=blocks {
            out.extend_from(&w.slice((i - 1) * block..i * block));
            if i < blocks {
                out.extend_from(&self.detour(&w.prefix(i * block))?);
            }
        }
        out.extend_from(&w.slice(blocks * block..w.len()));
        Ok(out)
    }

    fn name(&self) -> String {
        format!("{}+qpc({})", self.inner.name(), self.rule.constant())
    }
}
