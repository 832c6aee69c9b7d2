//! Report builders behind the `beg` binary.
//!
//! Each `cmd_*` function runs one verification and returns a [`Report`]. The
//! binary only parses arguments, renders the report and maps the outcome to
//! an exit code with [`exit_code`].

use beg_core::braid::{self, BraidRepSpec, Variant};
use beg_core::classify::{self, Table1Column};
use beg_core::egroup;
use beg_core::nice_basis;
use beg_core::report::{Report, Status};
use beg_core::{Error, LambdaBranch, Nu};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Matrices of dimension `2^k` for `k` above this make the pairwise trace
/// check too slow to be useful.
pub const NICE_BASIS_MAX_N: usize = 9;

/// Whether and how to enumerate the finite braid image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageMode {
    Skip,
    /// Enumerate up to `cap` elements. Refused for `k > IMAGE_DEFAULT_MAX_K`
    /// unless `explicit` is set.
    Capped { cap: usize, explicit: bool },
}

pub fn exit_code(result: &Result<Report, Error>) -> i32 {
    match result {
        Ok(r) if r.passed() => EXIT_OK,
        Ok(_) => EXIT_CLAIM_FAILED,
        Err(Error::CapExceeded { .. }) => EXIT_CAP,
        Err(_) => EXIT_USAGE,
    }
}

fn check_cap(needed: u64, cap: usize) -> Result<(), Error> {
    if needed > cap as u64 {
        return Err(Error::CapExceeded { cap });
    }
    Ok(())
}

pub fn cmd_classify(n: usize, nu: Nu, cap: usize) -> Result<Report, Error> {
    if n == 0 || n > egroup::DEFAULT_MAX_N {
        return Err(Error::InvalidParameter(format!("n must be in 1..={}", egroup::DEFAULT_MAX_N)));
    }
    check_cap(1u64 << (n + 1), cap)?;
    let rec = classify::classify_e(n, nu)?;
    let mut r = Report::new(format!("classify E^{nu}_{n}"));
    r.check("order", format!("|E^{nu}_{n}| = 2^{}", n + 1), rec.order == 1u64 << (n + 1), format!("{} elements", rec.order));
    let (center, ctype) = egroup::center_of(n, nu)?;
    let center_names: Vec<String> = center.iter().map(ToString::to_string).collect();
    r.check(
        "center",
        format!("Z(E^{nu}_{n}) is {}", rec.predicted.center),
        ctype == rec.predicted.center,
        format!("{} = {{{}}}", ctype, center_names.join(", ")),
    );
    r.check(
        "label",
        format!("E^{nu}_{n} is {} ({:?})", rec.label, rec.category),
        rec.invariants() == rec.predicted,
        format!("computed {}; predicted {}", rec.invariants(), rec.predicted),
    );
    if let Some((a, b)) = rec.order4_formula {
        r.check(
            "order4-formula",
            format!("order-4 count is 2·{a} or 2·{b}"),
            rec.order4_count == 2 * a || rec.order4_count == 2 * b,
            format!("{} elements of order 4", rec.order4_count),
        );
    }
    let mut summary = serde_json::to_value(&rec).expect("record serializes");
    if n >= 2 {
        let d = classify::decompose_e(n, nu)?;
        r.check(
            "decomposition",
            format!("E^{nu}_{n} = {}", d.classified),
            d.passed(),
            format!("{} -> {}", d.word_string(), d.normalized),
        );
        summary["decomposition"] = json!(d.word_string());
    }
    Ok(r.with_summary(summary))
}

pub fn cmd_decompose(n: usize, nu: Nu, cap: usize) -> Result<Report, Error> {
    if n > egroup::DEFAULT_MAX_N {
        return Err(Error::InvalidParameter(format!("n must be in 2..={}", egroup::DEFAULT_MAX_N)));
    }
    check_cap(1u64 << (n + 1), cap)?;
    let d = classify::decompose_e(n, nu)?;
    let mut r = Report::new(format!("central product decomposition of E^{nu}_{n}"));
    for (i, s) in d.steps.iter().enumerate() {
        r.check(
            format!("step-{i}"),
            format!("E_{} = <{}> ∘ <{}>, factor {}", s.within, s.h, s.k, s.factor),
            s.passed(),
            format!("recognized {}; {} ({})", s.recognized, s.square_rule, s.square_rule_holds),
        );
    }
    r.check(
        "word",
        format!("{} normalizes to {}", d.word_string(), d.classified),
        d.normalized == d.classified,
        format!("normalized {}", d.normalized),
    );
    let summary = serde_json::to_value(&d).expect("decomposition serializes");
    Ok(r.with_summary(summary))
}

pub fn cmd_table1(cap: usize) -> Result<Report, Error> {
    let cells = classify::table1_cells();
    let largest = cells.iter().map(|c| 2 * c.k as u64 + 2).max().unwrap_or(0);
    check_cap(1u64 << largest, cap)?;
    let mut r = classify::verify_table(&cells)?;
    let names: Vec<String> = Table1Column::ALL.iter().map(|c| c.group_name(1)).collect();
    r.summary = Some(json!({
        "columns_at_k1": names,
        "cells": cells.iter().map(|c| json!({"k": c.k, "group": c.column.group_name(c.k), "label": c.label.to_string()})).collect::<Vec<_>>(),
    }));
    Ok(r)
}

pub fn cmd_compare(k: usize, cap: usize) -> Result<Report, Error> {
    if k == 0 || 2 * k + 1 > egroup::DEFAULT_MAX_N {
        return Err(Error::InvalidParameter(format!("k must be in 1..={}", (egroup::DEFAULT_MAX_N - 1) / 2)));
    }
    check_cap(1u64 << (2 * k + 2), cap)?;
    classify::compare_pauli(k)
}

pub fn cmd_nice_basis(n: usize, nu: Nu, branch: LambdaBranch) -> Result<Report, Error> {
    if n > NICE_BASIS_MAX_N {
        return Err(Error::InvalidParameter(format!("nice-basis supports n <= {NICE_BASIS_MAX_N}")));
    }
    let rep = nice_basis::standard_rep(n, nu, branch)?;
    let mut r = nice_basis::nice_error_basis_check(n, nu, &rep)?;
    let kernel = egroup::rep_kernel(n, nu, &rep)?;
    let kernel_names: Vec<String> = kernel.iter().map(ToString::to_string).collect();
    r.push(
        "faithful",
        "the representation is faithful",
        if kernel.is_empty() { Status::Pass } else { Status::Flagged },
        if kernel.is_empty() { "trivial kernel".to_string() } else { format!("kernel contains {}", kernel_names.join(", ")) },
    );
    let mats = nice_basis::basis_matrices(n, nu, &rep)?;
    let k = n / 2;
    let pauli = nice_basis::pauli_basis_matrices(k);
    r.absorb("pauli", nice_basis::basis_equiv_mod_phase(&mats, &pauli));
    if n % 2 == 1 {
        let even = nice_basis::standard_rep(n - 1, nu, branch)?;
        let even_mats = nice_basis::basis_matrices(n - 1, nu, &even)?;
        r.absorb("even", nice_basis::basis_equiv_mod_phase(&mats, &even_mats));
    }
    Ok(r)
}

pub fn cmd_braid(k: usize, variant: Variant, image: ImageMode) -> Result<Report, Error> {
    let spec = BraidRepSpec::new(k, variant)?;
    let mut r = Report::new(format!("braid representation {spec}"));
    r.absorb("hypotheses", braid::generator_hypotheses(&spec));
    let mats = braid::build_r_matrices(&spec);
    let pres = braid::verify_braid_presentation(&mats);
    let pres_summary = pres.summary.clone().unwrap_or_default();
    r.absorb("presentation", pres);
    r.absorb("forms", braid::exponential_forms(&spec));
    let ghz = match braid::ghz_search(&spec, braid::DEFAULT_GHZ_MAX_LEN) {
        Some(hit) => json!({"word": hit.word.to_string(), "phase": hit.witness.phase.to_string(), "a": hit.witness.a}),
        None => json!({"word": null, "phase": null, "max_len": braid::DEFAULT_GHZ_MAX_LEN}),
    };
    let mut summary = json!({
        "spec": spec.to_string(),
        "k": k,
        "variant": variant,
        "strands": spec.strands(),
        "dim": spec.dim(),
        "relations_checked": pres_summary["relations_checked"],
        "failures": pres_summary["failures"],
        "ghz": ghz,
    });

    match image {
        ImageMode::Skip => {
            r.push("image", "finite image", Status::Info, "not computed (--no-image)");
        }
        ImageMode::Capped { explicit: false, .. } if k > braid::IMAGE_DEFAULT_MAX_K => {
            r.push(
                "image",
                "finite image",
                Status::Info,
                format!("not computed for k > {}; pass --cap to enumerate", braid::IMAGE_DEFAULT_MAX_K),
            );
        }
        ImageMode::Capped { cap, .. } => {
            let img = braid::image_group(&spec, cap)?;
            image_claims(&mut r, &spec, &img)?;
            summary["image"] = img.summary();
        }
    }
    Ok(r.with_summary(summary))
}

fn image_claims(r: &mut Report, spec: &BraidRepSpec, img: &braid::ImageRecord) -> Result<(), Error> {
    let n = spec.strands();
    let k = spec.k;
    let witness = format!(
        "|G| = {}, |H| = {}, |G/H| = {}",
        img.group.order(),
        img.pure_image.order(),
        img.quotient_order()
    );
    let pure_inv = img.pure_image.invariants();
    match spec.variant {
        Variant::Unscaled | Variant::Jones => {
            r.check("image/consistent", "each image matrix determines its permutation", img.consistent, "");
            r.check("image/normal", "H is normal in G", img.pure_is_normal, "");
            r.check("image/kernel", "H maps to the identity permutation", img.pure_in_kernel, "");
            r.check("image/quotient".to_string(), format!("G/H = S_{n}"), img.factorizes(), witness);
            let (target_nu, name) = match spec.variant {
                Variant::Jones => (Nu::Plus, format!("E^1_{}", 2 * k)),
                _ => (Nu::Minus, format!("E^-1_{}", 2 * k)),
            };
            let target = classify::classify_e(2 * k, target_nu)?.invariants();
            let (same, why) = classify::invariant_verdict(&pure_inv, &target);
            if same || spec.variant == Variant::Unscaled {
                r.check("image/pure", format!("H = {name}"), same, why);
            } else {
                let sq = img.squares_group.invariants();
                let (sq_same, _) = classify::invariant_verdict(&sq, &target);
                r.push(
                    "image/pure",
                    format!("H = {name}"),
                    Status::Flagged,
                    format!(
                        "normal closure of the squares has {pure_inv}; the squares alone generate {sq}{}",
                        if sq_same { format!(", matching {name}") } else { String::new() }
                    ),
                );
            }
        }
        Variant::Lambda1 | Variant::Lambda2 => {
            r.push(
                "image/consistent",
                "each image matrix determines its permutation",
                if img.consistent { Status::Pass } else { Status::Info },
                format!("{witness}; consistent = {}", img.consistent),
            );
            r.push("image/pure", "image of the pure braid group", Status::Info, pure_inv.to_string());
        }
    }
    Ok(())
}

pub fn cmd_ghz(k: usize, variant: Variant, max_len: usize) -> Result<Report, Error> {
    let spec = BraidRepSpec::new(k, variant)?;
    let mut r = Report::new(format!("GHZ search for {spec}, words up to length {max_len}"));
    match braid::ghz_search(&spec, max_len) {
        Some(hit) => {
            let mut start = vec![beg_core::CycScalar::zero(); spec.dim()];
            start[0] = beg_core::CycScalar::one();
            let state = braid::apply_word(&spec, &hit.word, &start)?;
            let again = braid::ghz_test(&state);
            r.check(
                "ghz",
                format!("some braid word maps |0...0> to a GHZ state on {k} qubits"),
                again == Some(hit.witness),
                format!("word {}, phase {}, a = {}", hit.word, hit.witness.phase, hit.witness.a),
            );
            Ok(r.with_summary(json!({
                "word": hit.word.to_string(),
                "length": hit.word.len(),
                "phase": hit.witness.phase.to_string(),
                "a": hit.witness.a,
                "state": hit.state.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })))
        }
        None => {
            r.push("ghz", "GHZ state reachable", Status::Info, "none within bound");
            Ok(r.with_summary(json!({ "word": null, "max_len": max_len })))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = report.to_string();
            out.push('\n');
            if let Some(s) = &report.summary {
                out.push_str(&serde_json::to_string_pretty(s).expect("summary serializes"));
                out.push('\n');
            }
            out
        }
    }
}
