use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::NormalFormProvider;
use crate::ball::bfs_ball_with_budget;
use crate::error::{Error, Result};
use crate::group::{evaluate, GroupModel};
use crate::word::Word;

/// Geometric properties of a normal form, checked on a finite ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NfProperty {
    /// `|nf(g)| ≤ C·(d(g) + 1)`.
    Quasigeodesic(f64),
    /// Every prefix of a normal form is a normal form.
    PrefixClosed,
    /// Every prefix `u` extends to a normal form `ux` with `|x| ≤ c`.
    Quasiregular(usize),
    /// Every prefix `u` of `uv ∈ L` has `ux ∈ L` for a prefix `x` of `v`
    /// with `|x| ≤ C`.
    QuasiprefixClosed(usize),
}

impl fmt::Display for NfProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfProperty::Quasigeodesic(c) => write!(f, "quasigeodesic:{c}"),
            NfProperty::PrefixClosed => f.write_str("prefix-closed"),
            NfProperty::Quasiregular(c) => write!(f, "quasiregular:{c}"),
            NfProperty::QuasiprefixClosed(c) => write!(f, "quasiprefix-closed:{c}"),
        }
    }
}

impl FromStr for NfProperty {
    type Err = Error;

    /// `prefix-closed`, `quasigeodesic:C`, `quasiregular:c`,
    /// `quasiprefix-closed:C`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown property `{text}`"));
        let (name, arg) = match text.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (text, None),
        };
        let int = || -> Result<usize> { arg.ok_or_else(bad)?.parse().map_err(|_| bad()) };
        match name {
            "prefix-closed" if arg.is_none() => Ok(NfProperty::PrefixClosed),
            "quasigeodesic" => {
                let c: f64 = arg.ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if c.is_finite() && c >= 0.0 {
                    Ok(NfProperty::Quasigeodesic(c))
                } else {
                    Err(bad())
                }
            }
            "quasiregular" => Ok(NfProperty::Quasiregular(int()?)),
            "quasiprefix-closed" => Ok(NfProperty::QuasiprefixClosed(int()?)),
            _ => Err(bad()),
        }
    }
}

/// A word violating a property; `n` is its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub word: Word,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyOutcome {
    Pass,
    Violation(Witness),
}

impl PropertyOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, PropertyOutcome::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            PropertyOutcome::Pass => None,
            PropertyOutcome::Violation(w) => Some(w),
        }
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyOutcome::Pass => f.write_str("PASS"),
            PropertyOutcome::Violation(w) => write!(f, "VIOLATION n={} word={}", w.n, w.text),
        }
    }
}

/// `w ∈ L`, i.e. `nf(π(w)) = w`.
pub fn in_language<P: NormalFormProvider>(provider: &P, w: &Word) -> Result<bool> {
    let g = evaluate(provider.model(), w)?;
    Ok(provider.normal_form(&g)? == *w)
}

/// Checks `property` on the normal forms of the radius-`radius` ball and
/// returns the first violator in ball order.
pub fn check_nf_property<P: NormalFormProvider>(
    provider: &P,
    property: NfProperty,
    radius: u32,
    budget: usize,
) -> Result<PropertyOutcome> {
    let model = provider.model();
    let ball = bfs_ball_with_budget(model, radius, budget)?;
    let extensions = match property {
        NfProperty::Quasiregular(c) => {
            let c = u32::try_from(c).map_err(|_| Error::InvalidParameter("c too large".into()))?;
            Some(bfs_ball_with_budget(model, c, budget)?)
        }
        _ => None,
    };
    let entries: Vec<_> = ball.iter().collect();
    let found = entries
        .par_iter()
        .map(|(g, entry)| -> Result<Option<Word>> {
            let w = provider.normal_form(g)?;
            match property {
                NfProperty::Quasigeodesic(c) => {
                    Ok((w.len() as f64 > c * (entry.distance as f64 + 1.0)).then_some(w))
                }
                NfProperty::PrefixClosed => {
                    let mut h = model.identity();
                    for k in 1..=w.len() {
                        model.mul_gen(&mut h, w.symbols()[k - 1]);
                        if provider.normal_form(&h)?.symbols() != &w.symbols()[..k] {
                            return Ok(Some(w.prefix(k)));
                        }
                    }
                    Ok(None)
                }
                NfProperty::QuasiprefixClosed(c) => {
                    for k in 0..w.len() {
                        let mut ok = false;
                        for end in k..=(k + c).min(w.len()) {
                            if in_language(provider, &w.prefix(end))? {
                                ok = true;
                                break;
                            }
                        }
                        if !ok {
                            return Ok(Some(w.prefix(k)));
                        }
                    }
                    Ok(None)
                }
                NfProperty::Quasiregular(c) => {
                    let small = extensions.as_ref().expect("extension ball");
                    let mut h = model.identity();
                    for k in 0..=w.len() {
                        if k > 0 {
                            model.mul_gen(&mut h, w.symbols()[k - 1]);
                        }
                        let u = &w.symbols()[..k];
                        let mut ok = false;
                        for y in small.elements() {
                            let x = provider.normal_form(&model.multiply(&h, y))?;
                            if x.len() <= k + c && x.symbols().starts_with(u) {
                                ok = true;
                                break;
                            }
                        }
                        if !ok {
                            return Ok(Some(w.prefix(k)));
                        }
                    }
                    Ok(None)
                }
            }
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match found {
        None => Ok(PropertyOutcome::Pass),
        Some(Err(e)) => Err(e),
        Some(Ok(None)) => unreachable!(),
        Some(Ok(Some(word))) => Ok(PropertyOutcome::Violation(Witness {
            n: word.len(),
            text: model.alphabet().format(&word),
            word,
        })),
    }
}
