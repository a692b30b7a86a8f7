use std::fs;
use std::path::Path;

use eqschub::json::CartanJson;
use eqschub::{Error, Kind, RootSystem};

use crate::error::CliError;

/// How to classify a Cartan matrix read from a file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    Auto,
    Finite,
    General,
}

/// Resolves `--type` / `--cartan` into a root system.
///
/// Built-in names carry their own kind unless `kind` forces one. A file may
/// name its kind with a `"kind"` field; otherwise `kind` applies, and `Auto`
/// tries finite-type closure first.
pub fn load_system(
    type_name: Option<&str>,
    cartan: Option<&Path>,
    kind: KindArg,
) -> Result<RootSystem, CliError> {
    match (type_name, cartan) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--type and --cartan are mutually exclusive".into(),
        )),
        (None, None) => Err(CliError::Usage("one of --type or --cartan is required".into())),
        (Some(name), None) => {
            let (matrix, builtin_kind) = eqschub::CartanMatrix::builtin(name)?;
            let kind = match kind {
                KindArg::Auto => builtin_kind,
                KindArg::Finite => Kind::Finite,
                KindArg::General => Kind::General,
            };
            Ok(RootSystem::new(name, matrix, kind)?)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let spec = CartanJson::parse(&text)?;
            let matrix = spec.to_matrix()?;
            let name = format!("GCM{matrix}");
            let kind = match spec.kind.as_deref() {
                Some("finite") => KindArg::Finite,
                Some("general") => KindArg::General,
                Some(other) => {
                    return Err(Error::InvalidCartan(format!("unknown kind {other:?}")).into())
                }
                None => kind,
            };
            Ok(match kind {
                KindArg::Auto => RootSystem::detect(name, matrix)?,
                KindArg::Finite => RootSystem::new(name, matrix, Kind::Finite)?,
                KindArg::General => RootSystem::new(name, matrix, Kind::General)?,
            })
        }
    }
}
