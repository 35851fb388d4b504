//! Golden values for the Nakayama automorphism: written once with
//! `--bless`, compared exactly afterwards.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::expr::{JsonElement, Render};
use crate::shriek::{degree_dimensions, gram_matrix, nakayama};
use crate::Result;

pub const GOLDEN_ENV: &str = "WEYLKIT_GOLDEN_DIR";

/// `$WEYLKIT_GOLDEN_DIR`, or the `golden/` directory of this crate.
pub fn golden_dir() -> PathBuf {
    std::env::var_os(GOLDEN_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"))
}

pub fn golden_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("nakayama_n{n}.json"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenImage {
    pub generator: String,
    pub image: JsonElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GoldenNakayama {
    pub n: usize,
    pub dims: Vec<usize>,
    /// `det gram_matrix(n, j)` for `j = 0..=2n+1`, as `p/q`.
    pub gram_determinants: Vec<String>,
    pub images: Vec<GoldenImage>,
    /// `k` with `σ(z) = k·z`, or `null` if `σ(z)` is not a multiple of `z`.
    pub k: Option<String>,
}

impl GoldenNakayama {
    pub fn compute(n: usize) -> Result<Self> {
        let m = nakayama(n)?;
        let gram_determinants = (0..=2 * n + 1)
            .map(|j| {
                let d = gram_matrix(n, j).determinant();
                format!("{}/{}", d.numer(), d.denom())
            })
            .collect();
        let images = m
            .images()
            .iter()
            .map(|(g, e)| GoldenImage {
                generator: g.to_string(),
                image: e.to_json(),
            })
            .collect();
        Ok(GoldenNakayama {
            n,
            dims: degree_dimensions(n),
            gram_determinants,
            images,
            k: m.z_scalar().map(|k| format!("{}/{}", k.numer(), k.denom())),
        })
    }

    pub fn load(path: &Path) -> std::result::Result<Option<Self>, String> {
        match fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text)
                .map(Some)
                .map_err(|e| format!("{}: {e}", path.display())),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(format!("{}: {e}", path.display())),
        }
    }

    pub fn save(&self, path: &Path) -> std::result::Result<(), String> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| format!("{}: {e}", parent.display()))?;
        }
        let mut text = serde_json::to_string_pretty(self).expect("plain data serializes");
        text.push('\n');
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
    }
}
