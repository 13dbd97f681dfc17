use std::io::Write;

use morphic_core::morphism::{
    common_symmetry_residue, enumerate_conjugates, has_conjugate_in_class_p, is_class_p,
};
use morphic_core::symmetry::symmetry_points;
use morphic_core::{
    ClassPWitness, ConjugacyWitness, Direction, EnumerationStatus, Error, Morphism,
};
use serde_json::{json, Map, Value};

use crate::args::{AnalyzeArgs, Format};
use crate::commands::{parse_morphism, write_json};
use crate::{UsageError, EXIT_OK};

fn direction(d: Direction) -> &'static str {
    match d {
        Direction::Right => "right",
        Direction::Left => "left",
    }
}

fn status_text(s: EnumerationStatus) -> String {
    match s {
        EnumerationStatus::Complete => "complete".into(),
        EnumerationStatus::Cyclic { period } => format!("cyclic (period {period})"),
        EnumerationStatus::CapReached { cap } => format!("cap of {cap} reached"),
    }
}

fn witness_json(w: &ClassPWitness) -> Value {
    let q: Map<String, Value> =
        w.q.iter()
            .map(|(l, q)| (l.as_char().to_string(), json!(q.to_string())))
            .collect();
    json!({ "p": w.p.to_string(), "q": q })
}

fn conjugate_json(c: &ConjugacyWitness) -> Value {
    json!({
        "direction": direction(c.direction),
        "shift": c.shift.to_string(),
        "result": c.result.to_string(),
    })
}

fn witness_lines(out: &mut Vec<String>, w: &ClassPWitness) {
    out.push(format!("  p = {}", w.p.human()));
    for (l, q) in &w.q {
        out.push(format!("  q({}) = {}", l.as_char(), q.human()));
    }
}

fn class_p(phi: &Morphism, cap: usize, verbose: bool) -> (Vec<String>, Value) {
    let mut text = Vec::new();
    let mut data = Map::new();
    match is_class_p(phi) {
        Some(w) => {
            text.push("class P: yes".into());
            witness_lines(&mut text, &w);
            data.insert("member".into(), json!(true));
            data.insert("witness".into(), witness_json(&w));
        }
        None => {
            text.push("class P: no".into());
            data.insert("member".into(), json!(false));
        }
    }
    let residue = common_symmetry_residue(phi);
    if verbose {
        text.push(match residue {
            Some((r, m)) => format!("common symmetry residue: {r} mod {m}"),
            None => "common symmetry residue: none".into(),
        });
    }
    data.insert(
        "symmetry_residue".into(),
        residue.map_or(Value::Null, |(r, m)| json!([r as u64, m as u64])),
    );
    match has_conjugate_in_class_p(phi, cap) {
        Ok(Some((conj, w))) => {
            text.push(format!(
                "conjugate in class P: {} shift {} gives {}",
                direction(conj.direction),
                conj.shift.human(),
                conj.result
            ));
            witness_lines(&mut text, &w);
            let mut c = conjugate_json(&conj);
            c["witness"] = witness_json(&w);
            data.insert("conjugate".into(), c);
        }
        Ok(None) => {
            text.push("conjugate in class P: none".into());
            data.insert("conjugate".into(), Value::Null);
        }
        Err(Error::CapReached { cap }) => {
            text.push(format!(
                "conjugate in class P: undecided, cap of {cap} reached"
            ));
            data.insert("conjugate".into(), json!("undecided"));
        }
        Err(e) => {
            text.push(format!("conjugate in class P: {e}"));
            data.insert("conjugate".into(), json!(e.to_string()));
        }
    }
    (text, Value::Object(data))
}

fn conjugates(phi: &Morphism, cap: usize) -> (Vec<String>, Value) {
    let all = enumerate_conjugates(phi, cap);
    let mut text = vec![format!(
        "conjugates: {} ({})",
        all.witnesses.len(),
        status_text(all.status)
    )];
    for c in &all.witnesses {
        text.push(format!(
            "  {:<5} {:<8} {}",
            direction(c.direction),
            c.shift.human().to_string(),
            c.result
        ));
    }
    let data = json!({
        "status": status_text(all.status),
        "witnesses": all.witnesses.iter().map(conjugate_json).collect::<Vec<_>>(),
    });
    (text, data)
}

fn symmetry(phi: &Morphism) -> (Vec<String>, Value) {
    let mut text = vec!["points of symmetry:".to_string()];
    let mut data = Map::new();
    for (l, img) in phi.source().letters().iter().zip(phi.images()) {
        let points = symmetry_points(img);
        let listed: Vec<String> = points.points().iter().map(usize::to_string).collect();
        text.push(format!(
            "  {} -> {}: {{{}}}",
            l.as_char(),
            img.human(),
            listed.join(", ")
        ));
        data.insert(
            l.as_char().to_string(),
            json!({ "image": img.to_string(), "points": points.points() }),
        );
    }
    (text, Value::Object(data))
}

fn charpoly(phi: &Morphism, verbose: bool) -> Result<(Vec<String>, Value), UsageError> {
    let m = phi.incidence_matrix()?;
    let poly = m.char_poly();
    let expanded = poly.to_string();
    let factored = poly.factored();
    let mut text = Vec::new();
    if verbose {
        text.push("incidence matrix:".into());
        for row in m.rows() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            text.push(format!("  {}", cells.join(" ")));
        }
        text.push(format!("primitive: {}", m.is_primitive()));
    }
    text.push(if factored == expanded {
        expanded.clone()
    } else {
        format!("{expanded} = {factored}")
    });
    let data = json!({
        "coefficients": poly.coeffs(),
        "expanded": expanded,
        "factored": factored,
        "matrix": m.rows(),
        "primitive": m.is_primitive(),
    });
    Ok((text, data))
}

pub fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<u8, UsageError> {
    let phi = parse_morphism(&args.morphism, args.alphabet.as_deref())?;
    let all = args.all();
    let mut sections: Vec<(&str, (Vec<String>, Value))> = Vec::new();
    if all || args.classp {
        sections.push(("class_p", class_p(&phi, args.cap, args.verbose)));
    }
    if all || args.conjugates {
        sections.push(("conjugates", conjugates(&phi, args.cap)));
    }
    if all || args.symmetry {
        sections.push(("symmetry", symmetry(&phi)));
    }
    if all || args.charpoly {
        sections.push(("charpoly", charpoly(&phi, args.verbose)?));
    }
    match args.format {
        Format::Text => {
            for (_, (lines, _)) in &sections {
                for line in lines {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("morphism".into(), json!(phi.to_string()));
            for (name, (_, data)) in sections {
                obj.insert(name.into(), data);
            }
            write_json(out, &Value::Object(obj))?;
        }
    }
    Ok(EXIT_OK)
}
