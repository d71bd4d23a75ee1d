mod args;
mod provider;

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use fellow_core::bs::{bs_alphabet, bs_mul_gen, bs_normal_form_of, bs_parse, bs_sharpness_family};
use fellow_core::lamplighter::{lamp_normal_form, lamp_sharpness_family, spiral, C};
use fellow_core::{
    bfs_ball_with_budget, check_nf_property, divergence, evaluate, fit_bound, s_curve,
    BaumslagSolitar, BsParams, Error, GroupModel, GrowthModel, IntegerLine, IntegerPlane,
    LampElement, Lamplighter, NfProperty, NormalFormProvider, Point, SCurveOptions,
};

use args::{BsArgs, BsCommand, Cli, Command, FamilyCommand, GroupName, LampCommand};
use provider::{with_provider, ProviderTask};

/// Exit status 1: the check found a violation.
const VIOLATION: u8 = 1;
/// Exit status 2: bad input or a failed computation.
const FAILURE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = match run(cli, &mut out) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            FAILURE
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(FAILURE);
    }
    ExitCode::from(status)
}

fn params(args: BsArgs) -> Result<BsParams, Error> {
    BsParams::new(args.p, args.q)
}

fn run(cli: Cli, out: &mut String) -> Result<u8, Error> {
    let budget = cli.budget;
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    match cli.command {
        Command::Ball {
            group,
            radius,
            spheres,
        } => {
            let sizes = match group.group {
                GroupName::Z => sphere_sizes(&IntegerLine::new(), radius, budget)?,
                GroupName::Z2 => sphere_sizes(&IntegerPlane::new(), radius, budget)?,
                GroupName::Bs => {
                    sphere_sizes(&BaumslagSolitar::new(params(group.params)?), radius, budget)?
                }
                GroupName::Lamp => sphere_sizes(&Lamplighter::new(), radius, budget)?,
            };
            if spheres {
                writeln!(out, "r,count").unwrap();
                for (r, count) in sizes.iter().enumerate() {
                    writeln!(out, "{r},{count}").unwrap();
                }
            } else {
                writeln!(out, "{}", sizes.iter().sum::<usize>()).unwrap();
            }
            Ok(0)
        }
        Command::Nf { provider, word } => {
            let w = with_provider(&provider, NormalFormOf { word })?;
            writeln!(out, "{w}").unwrap();
            Ok(0)
        }
        Command::Scurve {
            provider,
            radius,
            distance_radius,
            include_inverses,
            output,
            fit,
        } => {
            let fit = fit.map(|f| f.parse::<GrowthModel>()).transpose()?;
            let options = SCurveOptions {
                radius,
                distance_radius,
                include_inverses,
                budget,
            };
            let curve = with_provider(&provider, Curve { options })?;
            if let Some(model) = fit {
                eprintln!("fit {model}: C = {:.6}", fit_bound(&curve, model));
            }
            match output {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| io_error(&path, e))?;
                    let mut sink = BufWriter::new(file);
                    curve
                        .write_csv(&mut sink)
                        .and_then(|_| sink.flush())
                        .map_err(|e| io_error(&path, e))?;
                }
                None => out.push_str(&curve.to_csv()),
            }
            Ok(0)
        }
        Command::Check {
            provider,
            mode,
            constant,
            radius,
        } => {
            let mode = match constant {
                Some(c) if !mode.contains(':') => format!("{mode}:{c}"),
                _ => mode,
            };
            let property: NfProperty = mode.parse()?;
            let outcome = with_provider(
                &provider,
                Check {
                    property,
                    radius,
                    budget,
                },
            )?;
            writeln!(out, "{outcome}").unwrap();
            Ok(if outcome.is_pass() { 0 } else { VIOLATION })
        }
        Command::Transform {
            kind,
            group,
            options,
            radius,
        } => {
            let provider = args::ProviderArgs {
                group,
                transform: Some(kind),
                options,
            };
            out.push_str(&with_provider(&provider, Census { radius, budget })?);
            Ok(0)
        }
        Command::Family { family } => {
            family_probe(family, budget, out)?;
            Ok(0)
        }
        Command::Bs { command } => {
            let alphabet = bs_alphabet();
            match command {
                BsCommand::Nf { word, params: p } => {
                    let w = alphabet.parse(&word)?;
                    let nf = bs_normal_form_of(&w, params(p)?);
                    writeln!(out, "{}", alphabet.format(&nf.to_word())).unwrap();
                }
                BsCommand::Mul {
                    normal_form,
                    generator,
                    params: p,
                } => {
                    let params = params(p)?;
                    let nf = bs_parse(&alphabet.parse(&normal_form)?, params)?;
                    let generator = alphabet.parse(&generator)?;
                    let [s] = generator.symbols() else {
                        return Err(Error::InvalidParameter(format!(
                            "expected one generator, got `{}`",
                            alphabet.format(&generator)
                        )));
                    };
                    let product = bs_mul_gen(&nf, *s, params);
                    writeln!(out, "{}", alphabet.format(&product.to_word())).unwrap();
                }
            }
            Ok(0)
        }
        Command::Lamp { command } => {
            match command {
                LampCommand::Nf { lamps, pos } => {
                    let lamps = lamps
                        .split(';')
                        .filter(|s| !s.trim().is_empty())
                        .map(parse_point)
                        .collect::<Result<Vec<_>, _>>()?;
                    let g = LampElement::new(lamps, parse_point(&pos)?);
                    let model = Lamplighter::new();
                    writeln!(out, "{}", model.alphabet().format(&lamp_normal_form(&g))).unwrap();
                }
                LampCommand::Spiral { k } => {
                    let (x, y) = spiral(k);
                    writeln!(out, "{x},{y}").unwrap();
                }
            }
            Ok(0)
        }
    }
}

fn io_error(path: &std::path::Path, e: io::Error) -> Error {
    Error::InvalidParameter(format!("{}: {e}", path.display()))
}

fn parse_point(text: &str) -> Result<Point, Error> {
    let bad = || Error::InvalidParameter(format!("expected `x,y`, got `{text}`"));
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        x.trim().parse().map_err(|_| bad())?,
        y.trim().parse().map_err(|_| bad())?,
    ))
}

fn sphere_sizes<M: GroupModel>(model: &M, radius: u32, budget: usize) -> Result<Vec<usize>, Error> {
    Ok(bfs_ball_with_budget(model, radius, budget)?.sphere_sizes())
}

fn family_probe(family: FamilyCommand, budget: usize, out: &mut String) -> Result<(), Error> {
    match family {
        FamilyCommand::Bs { m, params: p } => {
            let params = params(p)?;
            let model = BaumslagSolitar::new(params);
            let probe = bs_sharpness_family(m, params)?;
            let d = grown_divergence(&model, &probe.w, &probe.w_t, budget)?;
            let alphabet = model.alphabet();
            writeln!(out, "w={}", alphabet.format(&probe.w)).unwrap();
            writeln!(out, "w_t={}", alphabet.format(&probe.w_t)).unwrap();
            writeln!(out, "n={}", probe.n).unwrap();
            writeln!(out, "d={}", d[probe.n]).unwrap();
        }
        FamilyCommand::Lamp { m } => {
            let model = Lamplighter::new();
            let probe = lamp_sharpness_family(m);
            let w1 = lamp_normal_form(&probe.g);
            let w2 = lamp_normal_form(&model.apply(&probe.g, C));
            let d = grown_divergence(&model, &w1, &w2, budget)?;
            writeln!(out, "g={}", probe.g).unwrap();
            writeln!(out, "n={}", probe.n).unwrap();
            writeln!(out, "claimed={}", probe.claimed_distance).unwrap();
            writeln!(out, "d={}", d.get(probe.n).copied().unwrap_or(0)).unwrap();
        }
    }
    Ok(())
}

fn grown_divergence<M: GroupModel>(
    model: &M,
    w1: &fellow_core::Word,
    w2: &fellow_core::Word,
    budget: usize,
) -> Result<Vec<u32>, Error> {
    let mut ball = bfs_ball_with_budget(model, 2, budget)?;
    loop {
        match divergence(model, &ball, w1, w2) {
            Err(Error::OutOfRange { radius }) => ball.extend(model, radius + 1)?,
            other => return other,
        }
    }
}

struct NormalFormOf {
    word: String,
}

impl ProviderTask for NormalFormOf {
    type Output = String;

    fn run<P: NormalFormProvider>(self, provider: P) -> Result<String, Error> {
        let alphabet = provider.model().alphabet();
        let g = evaluate(provider.model(), &alphabet.parse(&self.word)?)?;
        Ok(alphabet.format(&provider.normal_form(&g)?))
    }
}

struct Curve {
    options: SCurveOptions,
}

impl ProviderTask for Curve {
    type Output = fellow_core::SCurve;

    fn run<P: NormalFormProvider>(self, provider: P) -> Result<Self::Output, Error> {
        s_curve(&provider, self.options)
    }
}

struct Check {
    property: NfProperty,
    radius: u32,
    budget: usize,
}

impl ProviderTask for Check {
    type Output = fellow_core::PropertyOutcome;

    fn run<P: NormalFormProvider>(self, provider: P) -> Result<Self::Output, Error> {
        check_nf_property(&provider, self.property, self.radius, self.budget)
    }
}

/// `# provider=…` followed by `element,normal_form` rows in ball order.
struct Census {
    radius: u32,
    budget: usize,
}

impl ProviderTask for Census {
    type Output = String;

    fn run<P: NormalFormProvider>(self, provider: P) -> Result<String, Error> {
        let model = provider.model();
        let ball = bfs_ball_with_budget(model, self.radius, self.budget)?;
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["element", "normal_form"]).unwrap();
        for g in ball.elements() {
            let w = provider.normal_form(g)?;
            writer
                .write_record([model.canonical_key(g), model.alphabet().format(&w)])
                .unwrap();
        }
        let body = String::from_utf8(writer.into_inner().unwrap()).unwrap();
        Ok(format!("# provider={}\n{body}", provider.name()))
    }
}
