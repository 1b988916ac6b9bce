use std::fs;

use anyhow::{bail, Context, Result};
use fracspec::strings::StringSpec;

use crate::cli::{Builtin, Source};

pub fn string_spec(src: &Source) -> Result<StringSpec> {
    if let Some(path) = &src.spec_file {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        return serde_json::from_str(&text).with_context(|| format!("invalid string spec in {}", path.display()));
    }
    Ok(match src.builtin {
        Some(Builtin::Cantor) => StringSpec::Cantor { depth: src.depth },
        Some(Builtin::Power) => StringSpec::Power {
            exponent: src.exponent,
            count: src.count,
        },
        Some(Builtin::Selfsimilar) => StringSpec::Selfsimilar {
            a: src.a,
            b: src.b,
            start_index: 1,
            normalization: 1.0,
            depth: src.depth,
        },
        Some(Builtin::Unit) => StringSpec::unit(),
        None => bail!("give --builtin or --spec-file"),
    })
}
