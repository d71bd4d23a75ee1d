//! Synchronous fellow-traveler divergence and the geometric predicates on
//! normal forms.

mod cells;
mod divergence;
mod growth;
mod predicates;

pub use cells::{loop_cells, LoopCell};
pub use divergence::{divergence, s_curve, SCurve, SCurveOptions};
pub use growth::{
    example1_f, example1_sequence, fit_bound, verify_coarse_leq, CoarseCheck, GrowthModel,
};
pub use predicates::{check_nf_property, in_language, NfProperty, PropertyOutcome, Witness};

use std::collections::HashMap;

use crate::bs::{BaumslagSolitar, BsNormalForm, BsParams};
use crate::error::Result;
use crate::group::{GroupModel, IntegerLine, IntegerPlane, Point};
use crate::lamplighter::{lamp_normal_form, LampElement, Lamplighter};
use crate::word::{GenSymbol, Word};

pub type Element<P> = <<P as NormalFormProvider>::Model as GroupModel>::Element;

/// A normal form: an injective map from group elements to words that
/// evaluate back to them.
pub trait NormalFormProvider: Send + Sync {
    type Model: GroupModel;

    fn model(&self) -> &Self::Model;

    fn normal_form(&self, g: &Element<Self>) -> Result<Word>;

    fn name(&self) -> String {
        self.model().name()
    }
}

impl<P: NormalFormProvider + ?Sized> NormalFormProvider for &P {
    type Model = P::Model;

    fn model(&self) -> &Self::Model {
        (**self).model()
    }

    fn normal_form(&self, g: &Element<Self>) -> Result<Word> {
        (**self).normal_form(g)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}

/// `k ↦ a^k` on ℤ.
#[derive(Clone, Debug, Default)]
pub struct IntegerPowers {
    model: IntegerLine,
}

impl IntegerPowers {
    pub fn new() -> Self {
        Self::default()
    }
}

impl NormalFormProvider for IntegerPowers {
    type Model = IntegerLine;

    fn model(&self) -> &IntegerLine {
        &self.model
    }

    fn normal_form(&self, g: &i64) -> Result<Word> {
        Ok(Word::power(GenSymbol::positive(0), *g))
    }
}

/// `(x, y) ↦ a^x b^y` on ℤ².
#[derive(Clone, Debug, Default)]
pub struct PlaneLex {
    model: IntegerPlane,
}

impl PlaneLex {
    pub fn new() -> Self {
        Self::default()
    }
}

impl NormalFormProvider for PlaneLex {
    type Model = IntegerPlane;

    fn model(&self) -> &IntegerPlane {
        &self.model
    }

    fn normal_form(&self, g: &Point) -> Result<Word> {
        let mut w = Word::power(GenSymbol::positive(0), g.0);
        w.extend_from(&Word::power(GenSymbol::positive(1), g.1));
        Ok(w)
    }
}

/// The block normal form of `BS(p,q)`.
#[derive(Clone, Debug)]
pub struct BsCanonical {
    model: BaumslagSolitar,
}

impl BsCanonical {
    pub fn new(params: BsParams) -> Self {
        Self {
            model: BaumslagSolitar::new(params),
        }
    }
}

impl NormalFormProvider for BsCanonical {
    type Model = BaumslagSolitar;

    fn model(&self) -> &BaumslagSolitar {
        &self.model
    }

    fn normal_form(&self, g: &BsNormalForm) -> Result<Word> {
        Ok(g.to_word())
    }
}

/// The spiral normal form of `ℤ₂ ≀ ℤ²`.
#[derive(Clone, Debug, Default)]
pub struct LampSpiral {
    model: Lamplighter,
}

impl LampSpiral {
    pub fn new() -> Self {
        Self::default()
    }
}

impl NormalFormProvider for LampSpiral {
    type Model = Lamplighter;

    fn model(&self) -> &Lamplighter {
        &self.model
    }

    fn normal_form(&self, g: &LampElement) -> Result<Word> {
        Ok(lamp_normal_form(g))
    }
}

/// Replaces the normal form of finitely many elements.
///
/// Each replacement must evaluate to its element and must not collide with
/// another normal form; neither is checked here.
#[derive(Clone, Debug)]
pub struct Overridden<P: NormalFormProvider> {
    inner: P,
    table: HashMap<Element<P>, Word>,
}

impl<P: NormalFormProvider> Overridden<P> {
    pub fn new(inner: P, table: impl IntoIterator<Item = (Element<P>, Word)>) -> Self {
        Self {
            inner,
            table: table.into_iter().collect(),
        }
    }
}

impl<P: NormalFormProvider> NormalFormProvider for Overridden<P> {
    type Model = P::Model;

    fn model(&self) -> &Self::Model {
        self.inner.model()
    }

    fn normal_form(&self, g: &Element<P>) -> Result<Word> {
        match self.table.get(g) {
            Some(w) => Ok(w.clone()),
            None => self.inner.normal_form(g),
        }
    }

    fn name(&self) -> String {
        format!("{}*", self.inner.name())
    }
}

/// ℤ with `nf(2) = a a a a⁻¹`: quasiprefix-closed with constant 1 but not
/// prefix-closed.
pub fn bumped_integers() -> Overridden<IntegerPowers> {
    let a = GenSymbol::positive(0);
    Overridden::new(
        IntegerPowers::new(),
        [(2, Word::from_symbols(vec![a, a, a, a.inverse()]))],
    )
}
