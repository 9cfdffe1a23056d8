use std::path::Path;

use sensitivity_core::graph::ClassSetFile;
use sensitivity_core::hypercube::{read_truth_table, PropertyFunction, MAGIC};

use crate::builtins::{lookup, BuiltinProperty};
use crate::error::{LabError, Result};

/// A property ready for analysis, with where it came from.
#[derive(Debug, Clone)]
pub struct LoadedProperty {
    pub label: String,
    pub function: PropertyFunction,
    /// Vertex count, when the function is on graphs.
    pub n: Option<usize>,
    pub builtin: Option<&'static BuiltinProperty>,
}

/// Resolves `--property`/`--input`/`--n` into a function. Exactly one of
/// `property` and `input` must be given; `n` is required for builtins and
/// must agree with the file otherwise.
pub fn load(property: Option<&str>, input: Option<&Path>, n: Option<usize>) -> Result<LoadedProperty> {
    let loaded = match (property, input) {
        (Some(name), None) => {
            let b = lookup(name)?;
            let n = n.ok_or_else(|| LabError::Usage("--n is required with --property".into()))?;
            LoadedProperty {
                label: name.to_string(),
                function: b.function(n)?,
                n: Some(n),
                builtin: Some(b),
            }
        }
        (None, Some(path)) => {
            let bytes = std::fs::read(path)
                .map_err(|e| LabError::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_bytes(&bytes, &path.display().to_string())?
        }
        (Some(_), Some(_)) => return Err(LabError::Usage("give either --property or --input, not both".into())),
        (None, None) => return Err(LabError::Usage("one of --property or --input is required".into())),
    };
    if let (Some(want), Some(have)) = (n, loaded.n) {
        if want != have {
            return Err(LabError::Usage(format!("--n {want} disagrees with the input's n = {have}")));
        }
    }
    Ok(loaded)
}

/// Truth-table files start with the `GPTT` magic; anything else is read as a
/// class-set JSON document.
pub fn parse_bytes(bytes: &[u8], label: &str) -> Result<LoadedProperty> {
    if bytes.starts_with(MAGIC) {
        let function = read_truth_table(bytes).map_err(|e| LabError::Malformed(e.to_string()))?;
        return Ok(LoadedProperty {
            label: label.to_string(),
            n: function.vertices(),
            function,
            builtin: None,
        });
    }
    let text = std::str::from_utf8(bytes)
        .map_err(|_| LabError::Malformed(format!("{label}: neither a truth table nor UTF-8 JSON")))?;
    let file = ClassSetFile::from_json(text).map_err(|e| LabError::Malformed(e.to_string()))?;
    let function = file.to_property().map_err(|e| LabError::Malformed(e.to_string()))?;
    Ok(LoadedProperty {
        label: label.to_string(),
        n: Some(file.n),
        function,
        builtin: None,
    })
}
