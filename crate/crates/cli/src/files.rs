//! On-disk TOML schemas. Vectors and matrices are integer-only; every
//! file round-trips byte-identically through `to_toml` when written in
//! the canonical order the serializer produces.

use std::collections::BTreeMap;
use std::path::Path;

use colfan_core::quasiproj::maximal_cones;
use colfan_core::{
    Color, ColoredCone, ColoredFan, Cone, GroupAction, GroupElement, MorphismData, RatMat, RatVec,
    SphericalDatum,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub dim: usize,
    pub valuation_cone: GeneratorsFile,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub colors: Vec<ColorFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsFile {
    pub generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColorFile {
    pub name: String,
    pub rho: Vec<i64>,
}

/// Maximal cones only; the face closure is recomputed on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub cones: Vec<ConeFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub rays: Vec<Vec<i64>>,
    #[serde(default)]
    pub colors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub generators: Vec<ElementFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementFile {
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub color_perm: BTreeMap<String, String>,
}

/// The target datum and fan travel with the morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dominant_colors: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub color_map: BTreeMap<String, String>,
    pub target: DatumFile,
    pub target_fan: FanFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaFile {
    pub matrix: Vec<Vec<i64>>,
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text).map_err(|e| match e {
        CliError::Schema { message, .. } => CliError::Schema {
            path: path.display().to_string(),
            message,
        },
        other => other,
    })
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    toml::from_str(text).map_err(|e| CliError::Schema {
        path: String::new(),
        message: e.message().to_string(),
    })
}

pub fn to_toml<T: Serialize>(value: &T) -> String {
    toml::to_string(value).expect("file schemas always serialize")
}

fn ints(v: &RatVec) -> Vec<i64> {
    v.primitive()
        .to_bigints()
        .expect("primitive vectors are integral")
        .iter()
        .map(|c| i64::try_from(c).expect("coordinate fits in i64"))
        .collect()
}

fn matrix(rows: &[Vec<i64>]) -> Result<RatMat, CliError> {
    let ncols = rows.first().map_or(0, Vec::len);
    let rows = rows.iter().map(|r| RatVec::from_ints(r)).collect();
    Ok(RatMat::new(rows, ncols)?)
}

fn matrix_rows(m: &RatMat) -> Vec<Vec<i64>> {
    m.rows()
        .iter()
        .map(|r| {
            r.to_bigints()
                .expect("integer matrix")
                .iter()
                .map(|c| i64::try_from(c).expect("entry fits in i64"))
                .collect()
        })
        .collect()
}

fn cone(gens: &[Vec<i64>], dim: usize) -> Result<Cone, CliError> {
    let gens: Vec<RatVec> = gens.iter().map(|g| RatVec::from_ints(g)).collect();
    Ok(Cone::from_generators(&gens, dim)?)
}

impl DatumFile {
    pub fn to_datum(&self) -> Result<SphericalDatum, CliError> {
        let colors = self
            .colors
            .iter()
            .map(|c| Color {
                name: c.name.clone(),
                rho: RatVec::from_ints(&c.rho),
            })
            .collect();
        let v = cone(&self.valuation_cone.generators, self.dim)?;
        Ok(SphericalDatum::new(self.dim, v, colors)?)
    }

    pub fn from_datum(d: &SphericalDatum) -> Self {
        DatumFile {
            dim: d.dim(),
            valuation_cone: GeneratorsFile {
                generators: d.valuation_cone().generators().iter().map(ints).collect(),
            },
            colors: d
                .colors()
                .iter()
                .map(|c| ColorFile {
                    name: c.name.clone(),
                    rho: ints_exact(&c.rho),
                })
                .collect(),
        }
    }
}

// color images are not rescaled: their length carries information
fn ints_exact(v: &RatVec) -> Vec<i64> {
    v.to_bigints()
        .expect("file vectors are integral")
        .iter()
        .map(|c| i64::try_from(c).expect("coordinate fits in i64"))
        .collect()
}

impl FanFile {
    /// Face closure of the listed cones.
    pub fn to_fan(&self, datum: &SphericalDatum) -> Result<ColoredFan, CliError> {
        let maximal = self
            .cones
            .iter()
            .map(|c| {
                Ok(ColoredCone::new(
                    cone(&c.rays, datum.dim())?,
                    c.colors.iter().cloned(),
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(ColoredFan::from_maximal(datum, maximal)?)
    }

    pub fn from_fan(fan: &ColoredFan) -> Self {
        FanFile {
            cones: maximal_cones(fan)
                .into_iter()
                .map(|i| {
                    let cc = &fan.cones()[i];
                    ConeFile {
                        rays: cc.cone.generators().iter().map(ints).collect(),
                        colors: cc.colors.iter().cloned().collect(),
                    }
                })
                .collect(),
        }
    }
}

impl ActionFile {
    pub fn to_action(&self, datum: &SphericalDatum) -> Result<GroupAction, CliError> {
        let gens = self
            .generators
            .iter()
            .map(|g| Ok(GroupElement::new(matrix(&g.matrix)?, g.color_perm.clone())))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(GroupAction::new(datum, gens)?)
    }

    pub fn from_action(a: &GroupAction) -> Self {
        ActionFile {
            generators: a
                .generators()
                .iter()
                .map(|g| ElementFile {
                    matrix: matrix_rows(&g.matrix),
                    color_perm: g.color_perm.clone(),
                })
                .collect(),
        }
    }
}

/// A parsed morphism with its target.
pub struct Morphism {
    pub data: MorphismData,
    pub target: SphericalDatum,
    pub target_fan: ColoredFan,
}

impl MorphismFile {
    pub fn to_morphism(&self) -> Result<Morphism, CliError> {
        let target = self.target.to_datum()?;
        let target_fan = self.target_fan.to_fan(&target)?;
        Ok(Morphism {
            data: MorphismData {
                matrix: matrix(&self.matrix)?,
                color_map: self.color_map.clone(),
                dominant_colors: self.dominant_colors.iter().cloned().collect(),
            },
            target,
            target_fan,
        })
    }

    pub fn from_morphism(m: &Morphism) -> Self {
        MorphismFile {
            matrix: matrix_rows(&m.data.matrix),
            dominant_colors: m.data.dominant_colors.iter().cloned().collect(),
            color_map: m.data.color_map.clone(),
            target: DatumFile::from_datum(&m.target),
            target_fan: FanFile::from_fan(&m.target_fan),
        }
    }
}

impl ThetaFile {
    pub fn to_matrix(&self) -> Result<RatMat, CliError> {
        matrix(&self.matrix)
    }

    pub fn from_matrix(m: &RatMat) -> Self {
        ThetaFile {
            matrix: matrix_rows(m),
        }
    }
}
