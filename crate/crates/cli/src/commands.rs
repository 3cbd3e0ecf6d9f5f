use std::path::Path;

use hopf_forest::combinatorics::{enumerate, phi, phi_inv, psi, psi_inv, DegreeCaps, ObjectKind};
use hopf_forest::iso::{
    freeness_report, triangularity_certificate, verify_hopf_morphism, IsoId, Isomorphism, Phi, Psi,
};
use hopf_forest::machinery::{antipode, coradical_level, eulerian, is_primitive};
use hopf_forest::report::{CheckReport, VerificationReport};
use hopf_forest::structures::{
    verify_axioms, verify_cocommutative, verify_commutative, AxiomOptions, HopfAlgebra,
};
use hopf_forest::{Basis, LinComb};

use crate::Format;

pub type CmdResult<T> = Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Reads an operand: a canonical basis string, or with `json` a LinComb
/// JSON document given inline or as `@path`.
pub fn read_element<H: HopfAlgebra>(h: &H, text: &str, json: bool) -> CmdResult<LinComb<H::Basis>> {
    if !json {
        return h.parse_basis(text).map(LinComb::basis).map_err(err);
    }
    let doc = match text.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
        }
        None => text.to_string(),
    };
    h.parse_lincomb_json(&doc).map_err(err)
}

fn show<B: Basis>(a: &LinComb<B>, format: Format) -> String {
    match format {
        Format::Text => a.to_string(),
        Format::Json => a.to_json(),
    }
}

pub fn product<H: HopfAlgebra>(
    h: &H,
    x: &str,
    y: &str,
    json: bool,
    format: Format,
) -> CmdResult<String> {
    let a = read_element(h, x, json)?;
    let b = read_element(h, y, json)?;
    Ok(show(&h.mul(&a, &b), format))
}

pub fn coproduct<H: HopfAlgebra>(h: &H, x: &str, json: bool, format: Format) -> CmdResult<String> {
    let a = read_element(h, x, json)?;
    Ok(show(&h.comul(&a), format))
}

pub fn antipode_cmd<H: HopfAlgebra>(
    h: &H,
    x: &str,
    json: bool,
    format: Format,
) -> CmdResult<String> {
    let a = read_element(h, x, json)?;
    Ok(show(&antipode(h, &a), format))
}

pub fn eulerian_cmd<H: HopfAlgebra>(
    h: &H,
    x: &str,
    json: bool,
    format: Format,
) -> CmdResult<String> {
    let a = read_element(h, x, json)?;
    Ok(show(&eulerian(h, &a), format))
}

pub fn coradical_level_cmd<H: HopfAlgebra>(
    h: &H,
    x: &str,
    json: bool,
    format: Format,
) -> CmdResult<String> {
    let a = read_element(h, x, json)?;
    let k = coradical_level(h, &a);
    Ok(match format {
        Format::Text => k.to_string(),
        Format::Json => serde_json::json!({ "level": k }).to_string(),
    })
}

pub fn is_primitive_cmd<H: HopfAlgebra>(
    h: &H,
    x: &str,
    json: bool,
    format: Format,
) -> CmdResult<String> {
    let a = read_element(h, x, json)?;
    let p = is_primitive(h, &a);
    Ok(match format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::json!({ "primitive": p }).to_string(),
    })
}

pub fn enumerate_cmd(
    kind: &str,
    degree: usize,
    caps: DegreeCaps,
    format: Format,
) -> CmdResult<String> {
    let kind: ObjectKind = kind.parse().map_err(err)?;
    let items: Vec<String> = enumerate(kind, degree, &caps)
        .map_err(err)?
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(match format {
        Format::Text => items.join("\n"),
        Format::Json => serde_json::to_string(&items).map_err(err)?,
    })
}

pub fn bij(which: IsoId, inverse: bool, object: &str, format: Format) -> CmdResult<String> {
    let out = match (which, inverse) {
        (IsoId::Psi, false) => psi(&object.parse().map_err(err)?).to_string(),
        (IsoId::Psi, true) => psi_inv(&object.parse().map_err(err)?).to_string(),
        (IsoId::Phi, false) => phi(&object.parse().map_err(err)?).to_string(),
        (IsoId::Phi, true) => phi_inv(&object.parse().map_err(err)?).to_string(),
    };
    Ok(match format {
        Format::Text => out,
        Format::Json => serde_json::to_string(&out).map_err(err)?,
    })
}

pub fn verify_axioms_cmd<H: HopfAlgebra>(
    h: &H,
    max_degree: usize,
) -> CmdResult<VerificationReport> {
    let mut report = verify_axioms(h, &AxiomOptions { max_degree }).map_err(err)?;
    if h.id().is_cocommutative() {
        report.push(verify_cocommutative(h, max_degree).map_err(err)?);
    }
    if h.id().is_commutative() {
        report.push(verify_commutative(h, max_degree).map_err(err)?);
    }
    Ok(report)
}

/// Morphism checks, per-degree triangularity certificates and the freeness
/// count, merged into one report. Certificates are written to `emit`.
pub fn verify_iso_cmd(
    which: IsoId,
    max_degree: usize,
    caps: DegreeCaps,
    emit: Option<&Path>,
) -> CmdResult<VerificationReport> {
    match which {
        IsoId::Psi => verify_iso_with(&Psi::new(caps), max_degree, emit),
        IsoId::Phi => verify_iso_with(&Phi::new(caps), max_degree, emit),
    }
}

fn verify_iso_with<I: Isomorphism>(
    iso: &I,
    max_degree: usize,
    emit: Option<&Path>,
) -> CmdResult<VerificationReport> {
    let mut report = verify_hopf_morphism(iso, max_degree).map_err(err)?;
    let mut tri = CheckReport::new("triangularity");
    let mut certs = Vec::new();
    for d in 1..=max_degree {
        let c = triangularity_certificate(iso, d).map_err(err)?;
        tri.record(c.unitriangular, || {
            format!("degree {d} certificate is not unitriangular")
        });
        certs.push(c);
    }
    report.push(tri);

    let free = freeness_report(iso.id().target(), max_degree).map_err(err)?;
    let mut fc = CheckReport::new("freeness");
    for row in &free.rows {
        fc.record(row.dimension == row.words, || {
            format!(
                "degree {}: dimension {} but {} words",
                row.degree, row.dimension, row.words
            )
        });
    }
    report.push(fc);

    if let Some(path) = emit {
        let doc = serde_json::json!({
            "iso": iso.id().name(),
            "certificates": certs,
            "freeness": free,
        });
        let text = serde_json::to_string_pretty(&doc).map_err(err)?;
        std::fs::write(path, text + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(report)
}

/// Product structure constants of all basis pairs with total degree at most
/// `max_degree`, as CSV.
pub fn export_structure_constants<H: HopfAlgebra>(h: &H, max_degree: usize) -> CmdResult<String> {
    let by_degree: Vec<Vec<H::Basis>> = (0..=max_degree)
        .map(|d| h.basis(d))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["degA", "basisA", "degB", "basisB", "basisOut", "coeff"])
        .map_err(err)?;
    for (da, xs) in by_degree.iter().enumerate() {
        for x in xs {
            for (db, ys) in by_degree.iter().enumerate().take(max_degree - da + 1) {
                for y in ys {
                    for (t, c) in h.product(x, y).sorted_terms() {
                        w.write_record([
                            da.to_string(),
                            x.encode(),
                            db.to_string(),
                            y.encode(),
                            t.encode(),
                            c.to_string(),
                        ])
                        .map_err(err)?;
                    }
                }
            }
        }
    }
    let bytes = w.into_inner().map_err(err)?;
    String::from_utf8(bytes).map_err(err)
}
