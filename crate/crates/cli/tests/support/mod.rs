//! Fixture invocations with their documented exit codes.
#![allow(dead_code)]

use std::path::PathBuf;

use colfan_cli::{Command, Inputs};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub struct Case {
    pub name: &'static str,
    pub command: Command,
    pub inputs: Inputs,
    pub exit: i32,
}

fn inputs(datum: &str, fan: &str, action: &str, morphism: &str) -> Inputs {
    let opt = |s: &str| (!s.is_empty()).then(|| fixture(s));
    Inputs {
        datum: opt(datum),
        fan: opt(fan),
        action: opt(action),
        morphism: opt(morphism),
        ..Inputs::default()
    }
}

fn lined(lambda: &str, theta: &str) -> Inputs {
    Inputs {
        lambda: Some(lambda.to_string()),
        theta: Some(fixture(theta)),
        ..Inputs::default()
    }
}

pub fn cases() -> Vec<Case> {
    use Command::*;
    let case = |name, command, inputs, exit| Case {
        name,
        command,
        inputs,
        exit,
    };
    vec![
        case(
            "validate P1",
            Validate,
            inputs("toric1.datum.toml", "p1.fan.toml", "", ""),
            0,
        ),
        case(
            "validate P1xP1",
            Validate,
            inputs("toric2.datum.toml", "p1xp1.fan.toml", "", ""),
            0,
        ),
        case(
            "validate P1xP1 with swap",
            Validate,
            inputs(
                "toric2.datum.toml",
                "p1xp1.fan.toml",
                "swap.action.toml",
                "",
            ),
            0,
        ),
        case(
            "validate rank one",
            Validate,
            inputs(
                "rank_one.datum.toml",
                "rank_one.fan.toml",
                "color_swap.action.toml",
                "",
            ),
            0,
        ),
        case(
            "validate overlapping cones",
            Validate,
            inputs("toric2.datum.toml", "overlap.fan.toml", "", ""),
            1,
        ),
        case(
            "validate unknown color",
            Validate,
            inputs("rank_one.datum.toml", "unknown_color.fan.toml", "", ""),
            2,
        ),
        case(
            "validate non-invertible action",
            Validate,
            inputs(
                "toric2.datum.toml",
                "p1xp1.fan.toml",
                "noninvertible.action.toml",
                "",
            ),
            2,
        ),
        case(
            "validate without fan",
            Validate,
            inputs("toric2.datum.toml", "", "", ""),
            2,
        ),
        case(
            "quasiproj P2",
            Quasiproj,
            inputs("toric2.datum.toml", "p2.fan.toml", "", ""),
            0,
        ),
        case(
            "quasiproj P1xP1",
            Quasiproj,
            inputs("toric2.datum.toml", "p1xp1.fan.toml", "", ""),
            0,
        ),
        case(
            "quasiproj twisted prism",
            Quasiproj,
            inputs("toric3.datum.toml", "twisted_prism.fan.toml", "", ""),
            1,
        ),
        case(
            "quasiproj overlapping cones",
            Quasiproj,
            inputs("toric2.datum.toml", "overlap.fan.toml", "", ""),
            2,
        ),
        case(
            "kform P1xP1 swap",
            Kform,
            inputs(
                "toric2.datum.toml",
                "p1xp1.fan.toml",
                "swap.action.toml",
                "",
            ),
            0,
        ),
        case(
            "kform P2 swap",
            Kform,
            inputs("toric2.datum.toml", "p2.fan.toml", "swap.action.toml", ""),
            0,
        ),
        case(
            "kform ray swap",
            Kform,
            inputs("toric2.datum.toml", "ray.fan.toml", "swap.action.toml", ""),
            1,
        ),
        case(
            "kform without action",
            Kform,
            inputs("toric2.datum.toml", "ray.fan.toml", "", ""),
            2,
        ),
        case(
            "monoid A2",
            Monoid,
            inputs("toric2.datum.toml", "a2.fan.toml", "", ""),
            0,
        ),
        case(
            "monoid line",
            Monoid,
            inputs("toric1.datum.toml", "line.fan.toml", "", ""),
            1,
        ),
        case(
            "monoid rank one forward",
            Monoid,
            inputs("rank_one.datum.toml", "forward.fan.toml", "", ""),
            1,
        ),
        case(
            "monoid with two cones",
            Monoid,
            inputs("toric1.datum.toml", "p1.fan.toml", "", ""),
            2,
        ),
        case(
            "monoid-kform A2 swap",
            MonoidKform,
            inputs("toric2.datum.toml", "a2.fan.toml", "swap.action.toml", ""),
            0,
        ),
        case(
            "monoid-kform skew swap",
            MonoidKform,
            inputs("toric2.datum.toml", "skew.fan.toml", "swap.action.toml", ""),
            1,
        ),
        case(
            "monoid-kform line",
            MonoidKform,
            inputs("toric1.datum.toml", "line.fan.toml", "", ""),
            2,
        ),
        case(
            "morphism projection",
            Morphism,
            inputs(
                "toric2.datum.toml",
                "quadrant.fan.toml",
                "",
                "projection.morphism.toml",
            ),
            0,
        ),
        case(
            "morphism projection to origin",
            Morphism,
            inputs(
                "toric2.datum.toml",
                "quadrant.fan.toml",
                "",
                "projection_origin.morphism.toml",
            ),
            1,
        ),
        case("lined negation", Lined, lined("1", "theta_neg.toml"), 0),
        case("lined identity", Lined, lined("1", "theta_id.toml"), 1),
        case(
            "lined not an involution",
            Lined,
            lined("1", "theta_bad.toml"),
            2,
        ),
        case("lined bad weight", Lined, lined("1,x", "theta_neg.toml"), 2),
    ]
}

/// Fixtures in canonical serializer order.
pub const CANONICAL: [&str; 24] = [
    "toric1.datum.toml",
    "toric2.datum.toml",
    "toric3.datum.toml",
    "rank_one.datum.toml",
    "p1.fan.toml",
    "p2.fan.toml",
    "p1xp1.fan.toml",
    "ray.fan.toml",
    "overlap.fan.toml",
    "rank_one.fan.toml",
    "forward.fan.toml",
    "a2.fan.toml",
    "skew.fan.toml",
    "line.fan.toml",
    "quadrant.fan.toml",
    "twisted_prism.fan.toml",
    "swap.action.toml",
    "color_swap.action.toml",
    "projection.morphism.toml",
    "projection_origin.morphism.toml",
    "theta_neg.toml",
    "theta_id.toml",
    "theta_bad.toml",
    "noninvertible.action.toml",
];

/// Serializes the parsed domain object for `name` and compares bytes.
pub fn round_trips(name: &str) -> Result<(), String> {
    use colfan_cli::files::*;
    let text = std::fs::read_to_string(fixture(name)).map_err(|e| e.to_string())?;
    let err = |e: colfan_cli::CliError| e.to_string();
    let out = if name.ends_with(".datum.toml") {
        to_toml(&DatumFile::from_datum(
            &parse::<DatumFile>(&text)
                .map_err(err)?
                .to_datum()
                .map_err(err)?,
        ))
    } else if name.ends_with(".fan.toml") {
        let datum_name = match name {
            "rank_one.fan.toml" | "forward.fan.toml" => "rank_one.datum.toml",
            "p1.fan.toml" | "line.fan.toml" => "toric1.datum.toml",
            "twisted_prism.fan.toml" => "toric3.datum.toml",
            _ => "toric2.datum.toml",
        };
        let datum = read::<DatumFile>(&fixture(datum_name))
            .map_err(err)?
            .to_datum()
            .map_err(err)?;
        to_toml(&FanFile::from_fan(
            &parse::<FanFile>(&text)
                .map_err(err)?
                .to_fan(&datum)
                .map_err(err)?,
        ))
    } else if name.ends_with(".morphism.toml") {
        to_toml(&MorphismFile::from_morphism(
            &parse::<MorphismFile>(&text)
                .map_err(err)?
                .to_morphism()
                .map_err(err)?,
        ))
    } else if name == "noninvertible.action.toml" {
        // not an automorphism, so only the schema layer round-trips
        to_toml(&parse::<ActionFile>(&text).map_err(err)?)
    } else if name.ends_with(".action.toml") {
        let datum_name = if name == "color_swap.action.toml" {
            "rank_one.datum.toml"
        } else {
            "toric2.datum.toml"
        };
        let datum = read::<DatumFile>(&fixture(datum_name))
            .map_err(err)?
            .to_datum()
            .map_err(err)?;
        to_toml(&ActionFile::from_action(
            &parse::<ActionFile>(&text)
                .map_err(err)?
                .to_action(&datum)
                .map_err(err)?,
        ))
    } else {
        to_toml(&ThetaFile::from_matrix(
            &parse::<ThetaFile>(&text)
                .map_err(err)?
                .to_matrix()
                .map_err(err)?,
        ))
    };
    if out == text {
        Ok(())
    } else {
        Err(format!("{name}: serialized\n{out}\ndiffers from\n{text}"))
    }
}
