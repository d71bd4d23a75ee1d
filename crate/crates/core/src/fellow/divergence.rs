use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;

use super::{Element, NormalFormProvider};
use crate::ball::{bfs_ball_with_budget, BallIndex, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::group::GroupModel;
use crate::word::{GenSymbol, Word};

/// `d(t) = d_A(π(w1(t)), π(w2(t)))` for `t = 0 ..= max(|w1|, |w2|)`.
///
/// The difference `π(w1(t))⁻¹ π(w2(t))` is carried along step by step and
/// measured by the model's closed-form word length when it has one,
/// otherwise looked up in `ball`.
pub fn divergence<M: GroupModel>(
    model: &M,
    ball: &BallIndex<M::Element>,
    w1: &Word,
    w2: &Word,
) -> Result<Vec<u32>> {
    model.alphabet().check(w1)?;
    model.alphabet().check(w2)?;
    let len = w1.len().max(w2.len());
    let common = w1.iter().zip(w2.iter()).take_while(|(x, y)| x == y).count();
    let mut out = vec![0u32; len + 1];
    let mut diff = model.identity();
    for t in common..len {
        if let Some(s) = w2.get(t) {
            model.mul_gen(&mut diff, s);
        }
        if let Some(s) = w1.get(t) {
            model.left_mul_gen(s.inverse(), &mut diff);
        }
        out[t + 1] = match model.word_length(&diff) {
            Some(d) => d,
            None => ball.distance(&diff)?,
        };
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SCurveOptions {
    /// Pairs `(g, g·a)` are taken over the ball of this radius.
    pub radius: u32,
    /// Starting radius of the distance oracle; grown on demand.
    pub distance_radius: u32,
    /// Also pair `g` with `g·a⁻¹`.
    pub include_inverses: bool,
    pub budget: usize,
}

impl SCurveOptions {
    pub fn new(radius: u32) -> Self {
        Self {
            radius,
            distance_radius: 2,
            include_inverses: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Sampled divergence function `n ↦ s_R(n)`, `n = 0 ..= len-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCurve {
    pub values: Vec<u32>,
    pub group: String,
    pub radius: u32,
    pub distance_radius: u32,
    pub generators: Vec<String>,
}

impl SCurve {
    pub fn samples(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.values.iter().copied().enumerate()
    }

    /// `s(n)`, extended as constant beyond the sampled range.
    pub fn at(&self, n: usize) -> u32 {
        match self.values.get(n) {
            Some(&s) => s,
            None => self.values.last().copied().unwrap_or(0),
        }
    }

    pub fn max_n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# group={}", self.group).unwrap();
        writeln!(out, "# R={}", self.radius).unwrap();
        writeln!(out, "# R_d={}", self.distance_radius).unwrap();
        writeln!(out, "# generators={}", self.generators.join(",")).unwrap();
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["n", "s"]).unwrap();
        for (n, s) in self.samples() {
            writer.serialize((n, s)).unwrap();
        }
        out.push_str(std::str::from_utf8(&writer.into_inner().unwrap()).unwrap());
        out
    }

    pub fn write_csv<W: io::Write>(&self, mut sink: W) -> io::Result<()> {
        sink.write_all(self.to_csv().as_bytes())
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidParameter(format!("s-curve csv: {reason}"));
        let mut group = None;
        let mut radius = None;
        let mut distance_radius = None;
        let mut generators = None;
        for line in text.lines().filter_map(|l| l.strip_prefix('#')) {
            let Some((key, value)) = line.trim().split_once('=') else {
                continue;
            };
            match key {
                "group" => group = Some(value.to_string()),
                "R" => radius = value.parse().ok(),
                "R_d" => distance_radius = value.parse().ok(),
                "generators" => {
                    generators = Some(
                        value
                            .split(',')
                            .filter(|s| !s.is_empty())
                            .map(String::from)
                            .collect(),
                    )
                }
                _ => {}
            }
        }
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
        if headers.iter().collect::<Vec<_>>() != ["n", "s"] {
            return Err(bad(format!("unexpected header {headers:?}")));
        }
        let mut values = Vec::new();
        for row in reader.deserialize::<(usize, u32)>() {
            let (n, s) = row.map_err(|e| bad(e.to_string()))?;
            if n != values.len() {
                return Err(bad(format!("expected n={}, found {n}", values.len())));
            }
            values.push(s);
        }
        Ok(SCurve {
            values,
            group: group.ok_or_else(|| bad("missing group".into()))?,
            radius: radius.ok_or_else(|| bad("missing R".into()))?,
            distance_radius: distance_radius.ok_or_else(|| bad("missing R_d".into()))?,
            generators: generators.ok_or_else(|| bad("missing generators".into()))?,
        })
    }
}

/// `s_R(n)`: the running maximum of the divergence over all pairs
/// `(nf(g), nf(g·a))` with `g` in the radius-`R` ball and `a ∈ A`.
pub fn s_curve<P: NormalFormProvider>(provider: &P, options: SCurveOptions) -> Result<SCurve> {
    let model = provider.model();
    let alphabet = model.alphabet();
    let generators: Vec<GenSymbol> = if options.include_inverses {
        alphabet.directions()
    } else {
        alphabet.positive()
    };
    let ball = bfs_ball_with_budget(model, options.radius, options.budget)?;
    let elements: Vec<&Element<P>> = ball.elements().collect();

    let pairs: Vec<(Word, Word)> = elements
        .par_iter()
        .map(|g| -> Result<Vec<(Word, Word)>> {
            let w = provider.normal_form(g)?;
            generators
                .iter()
                .map(|&s| Ok((w.clone(), provider.normal_form(&model.apply(g, s))?)))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let longest = pairs
        .iter()
        .map(|(x, y)| x.len().max(y.len()))
        .max()
        .unwrap_or(0);
    let mut pointwise = vec![0u32; longest + 1];
    let mut oracle = bfs_ball_with_budget(model, options.distance_radius, options.budget)?;
    let mut pending: Vec<usize> = (0..pairs.len()).collect();
    while !pending.is_empty() {
        let results: Vec<(usize, Result<Vec<u32>>)> = pending
            .par_iter()
            .map(|&i| (i, divergence(model, &oracle, &pairs[i].0, &pairs[i].1)))
            .collect();
        pending.clear();
        for (i, result) in results {
            match result {
                Ok(d) => {
                    for (slot, v) in pointwise.iter_mut().zip(d) {
                        *slot = (*slot).max(v);
                    }
                }
                Err(Error::OutOfRange { .. }) => pending.push(i),
                Err(e) => return Err(e),
            }
        }
        if !pending.is_empty() {
            let next = oracle.radius() + 1;
            oracle.extend(model, next)?;
        }
    }

    let mut running = 0;
    let values = pointwise
        .into_iter()
        .map(|v| {
            running = running.max(v);
            running
        })
        .collect();
    Ok(SCurve {
        values,
        group: provider.name(),
        radius: options.radius,
        distance_radius: oracle.radius(),
        generators: generators
            .iter()
            .map(|&s| alphabet.format_symbol(s).to_string())
            .collect(),
    })
}
