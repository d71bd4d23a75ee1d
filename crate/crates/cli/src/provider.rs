use fellow_core::fellow::{BsCanonical, IntegerPowers, LampSpiral, NormalFormProvider, PlaneLex};
use fellow_core::transforms::{first_way, quasiprefix_closure, second_way, RepeatedLoop};
use fellow_core::{BsParams, Error, GroupModel};

use crate::args::{GroupName, ProviderArgs, TransformKind};

/// Work that needs a concrete normal form provider.
pub trait ProviderTask {
    type Output;

    fn run<P: NormalFormProvider>(self, provider: P) -> Result<Self::Output, Error>;
}

/// Builds the provider described by `args` and hands it to `task`.
pub fn with_provider<T: ProviderTask>(args: &ProviderArgs, task: T) -> Result<T::Output, Error> {
    let group = &args.group;
    match group.group {
        GroupName::Z => transformed(IntegerPowers::new(), args, task),
        GroupName::Z2 => transformed(PlaneLex::new(), args, task),
        GroupName::Bs => {
            let params = BsParams::new(group.params.p, group.params.q)?;
            transformed(BsCanonical::new(params), args, task)
        }
        GroupName::Lamp => transformed(LampSpiral::new(), args, task),
    }
}

fn transformed<P: NormalFormProvider, T: ProviderTask>(
    base: P,
    args: &ProviderArgs,
    task: T,
) -> Result<T::Output, Error> {
    let loop_word = || -> Result<_, Error> {
        let text = args.options.loop_word.as_deref().ok_or_else(|| {
            Error::InvalidParameter("--loop is required for this transform".into())
        })?;
        base.model().alphabet().parse(text)
    };
    match args.transform {
        None => task.run(base),
        Some(TransformKind::FirstWay) => {
            let u = loop_word()?;
            task.run(first_way(base, u)?)
        }
        Some(TransformKind::SecondWay) => {
            let chooser = RepeatedLoop::new(base.model(), loop_word()?)?;
            task.run(second_way(base, chooser))
        }
        Some(TransformKind::QpcClosure) => {
            let c = args
                .options
                .c
                .ok_or_else(|| Error::InvalidParameter("--c is required for qpc-closure".into()))?;
            task.run(quasiprefix_closure(base, c)?)
        }
    }
}
