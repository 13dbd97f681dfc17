use std::io::Write;

use morphic_core::fixed_point::fixed_point;
use morphic_core::suite::{
    run_all, stabilizer_level, submonoid_member_level, Fixtures, RunConfig, Status,
};
use morphic_core::{Alphabet, Letter, Morphism};
use serde_json::json;

use crate::args::{Format, GenArgs, StabArgs, VerifyArgs};
use crate::report::{reports_json, reports_text};
use crate::{UsageError, EXIT_FAILED, EXIT_OK};

pub fn parse_morphism(literal: &str, alphabet: Option<&str>) -> Result<Morphism, UsageError> {
    let phi = match alphabet {
        Some(a) => {
            let a = Alphabet::parse(a)?;
            Morphism::parse_with(literal, &a, &a)?
        }
        None => Morphism::parse(literal)?,
    };
    Ok(phi)
}

pub fn write_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), UsageError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn generate(args: &GenArgs, out: &mut dyn Write) -> Result<u8, UsageError> {
    let phi = parse_morphism(&args.morphism, args.alphabet.as_deref())?;
    let seed = Letter::new(args.seed)?;
    let prefix = fixed_point(&phi, seed)?.prefix(args.n);
    match args.format {
        // the raw prefix, so n = 0 prints nothing
        Format::Text if prefix.is_empty() => {}
        Format::Text => writeln!(out, "{prefix}")?,
        Format::Json => write_json(
            out,
            &json!({
                "morphism": phi.to_string(),
                "seed": args.seed.to_string(),
                "n": args.n,
                "prefix": prefix.to_string(),
            }),
        )?,
    }
    Ok(EXIT_OK)
}

const GENERATOR_NAMES: [&str; 4] = ["gamma0", "gamma1", "gamma2", "gamma3"];

pub fn stabilizer(args: &StabArgs, out: &mut dyn Write) -> Result<u8, UsageError> {
    let fixtures = Fixtures::standard();
    let level = stabilizer_level(&fixtures.gamma, args.k)?;
    let factor = |phi: &Morphism| -> Result<Option<Vec<&str>>, UsageError> {
        let found = submonoid_member_level(phi, args.k, &fixtures.gamma, fixtures.level_one())?;
        Ok(found.map(|f| f.iter().map(|&i| GENERATOR_NAMES[i]).collect()))
    };
    match args.format {
        Format::Text => {
            writeln!(out, "level {}: {} elements", args.k, level.len())?;
            writeln!(out, "  image of ac: {}", level.image_ac().human())?;
            writeln!(out, "  image of ab: {}", level.image_ab().human())?;
            for (len, phi) in level.elements().iter().enumerate() {
                write!(out, "  |a|={len:<3} {phi}")?;
                if args.verbose {
                    match factor(phi)? {
                        Some(f) if f.is_empty() => write!(out, "  = id")?,
                        Some(f) => write!(out, "  = {}", f.join(" "))?,
                        None => write!(out, "  not a product of level-1 elements")?,
                    }
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let mut elements = Vec::new();
            for phi in level.elements() {
                let mut entry = json!({ "morphism": phi.to_string() });
                if args.verbose {
                    entry["factorization"] = json!(factor(phi)?);
                }
                elements.push(entry);
            }
            write_json(
                out,
                &json!({
                    "level": args.k,
                    "image_ac": level.image_ac().to_string(),
                    "image_ab": level.image_ab().to_string(),
                    "elements": elements,
                }),
            )?;
        }
    }
    Ok(EXIT_OK)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, UsageError> {
    let fixtures = match &args.corrupt_fixture {
        None => Fixtures::standard(),
        Some(name) => Fixtures::corrupted(name).ok_or_else(|| {
            UsageError(format!(
                "unknown fixture '{name}', expected one of {}",
                Fixtures::NAMES.join(", ")
            ))
        })?,
    };
    let config = RunConfig {
        kmax: args.kmax,
        stab_kmax: args.stab_kmax,
        prefix_bound: args.prefix_bound,
        primitivity_maxlen: args.primitivity_maxlen,
    };
    let reports = run_all(&config, &fixtures);
    match args.format {
        Format::Text => write!(out, "{}", reports_text(&reports, args.verbose))?,
        Format::Json => write_json(out, &reports_json(&reports))?,
    }
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}
