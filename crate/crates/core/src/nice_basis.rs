//! Nice error bases from the Pauli-string representations of `E^ν_n`.
//!
//! The basis attached to a representation φ is `{φ(g)}` with `g` running over
//! one representative of each coset of the center. It must contain the
//! identity, be traceless away from it, and be closed under products up to
//! phases `ω(g, h)` that form a cyclic group.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use serde_json::json;

use crate::cyclotomic::CycScalar;
use crate::egroup::{self, EElement, Nu};
use crate::error::{Error, Result};
use crate::group::{closure, FiniteGroupRecord};
use crate::matrix::ExactMatrix;
use crate::par;
use crate::pauli::{self, check_e_relations, LambdaBranch, PauliString};
use crate::report::Report;

/// ρ for even `n`, λ on the given branch for odd `n ≥ 3`; multiplied by `i`
/// when ν = +1.
pub fn standard_rep(n: usize, nu: Nu, branch: LambdaBranch) -> Result<Vec<PauliString>> {
    if n < 2 {
        return Err(Error::InvalidParameter("nice error bases need n >= 2".into()));
    }
    let gens = if n.is_multiple_of(2) {
        pauli::generators_rho(n / 2)
    } else {
        pauli::generators_lambda((n - 1) / 2, branch)
    };
    Ok(match nu {
        Nu::Minus => gens,
        Nu::Plus => pauli::rescale_by_i(&gens),
    })
}

/// The least element, under `(mask, sign)` order, of every coset of the
/// center, sorted.
pub fn coset_representatives(g: &FiniteGroupRecord<EElement>) -> Vec<EElement> {
    let center: Vec<EElement> = g.center().iter().map(|&i| *g.element(i)).collect();
    let reps: BTreeSet<EElement> = g
        .elements()
        .iter()
        .map(|x| center.iter().map(|z| *x * *z).min().expect("center contains the identity"))
        .collect();
    reps.into_iter().collect()
}

fn checked_group(n: usize, nu: Nu, rep: &[PauliString]) -> Result<FiniteGroupRecord<EElement>> {
    if rep.len() != n {
        return Err(Error::NotARepresentation(format!("{} images for {n} generators", rep.len())));
    }
    check_e_relations(rep, nu).map_err(Error::NotARepresentation)?;
    egroup::enumerate(n, nu)
}

/// Images of the coset representatives, in the order of
/// [`coset_representatives`].
pub fn basis_matrices(n: usize, nu: Nu, rep: &[PauliString]) -> Result<Vec<ExactMatrix>> {
    let g = checked_group(n, nu, rep)?;
    let reps = coset_representatives(&g);
    Ok(par::map(&reps, |r| r.image(rep).to_matrix()))
}

fn is_fourth_root_of_unity(c: &CycScalar) -> bool {
    matches!(c.zeta_exponent(), Some(p) if p % 2 == 0)
}

/// Checks conditions a) to c) of a nice error basis, the degree relation
/// `d² = |G/Z(G)|` and trace orthogonality of distinct basis elements.
pub fn nice_error_basis_check(n: usize, nu: Nu, rep: &[PauliString]) -> Result<Report> {
    let g = checked_group(n, nu, rep)?;
    let reps = coset_representatives(&g);
    let center: Vec<EElement> = g.center().iter().map(|&i| *g.element(i)).collect();
    let rep_index: HashMap<EElement, usize> = reps
        .iter()
        .enumerate()
        .flat_map(|(i, r)| center.iter().map(move |z| (*r * *z, i)))
        .collect();
    let mats = par::map(&reps, |r| r.image(rep).to_matrix());
    let d = mats[0].dim();
    let mut report = Report::new(format!("nice error basis of E^{nu}_{n}"));

    let identity = EElement::identity(n, nu);
    report.check(
        "a-identity",
        "phi(1) is the identity matrix",
        reps[0] == identity && mats[0].is_identity(),
        format!("representative {} maps to I_{d}", reps[0]),
    );

    let traced: Vec<String> = mats
        .iter()
        .zip(&reps)
        .skip(1)
        .filter(|(m, _)| !m.trace().is_zero())
        .map(|(_, r)| r.to_string())
        .collect();
    report.check(
        "b-traceless",
        "Tr phi(g) = 0 for every non-identity coset representative g",
        traced.is_empty(),
        if traced.is_empty() {
            format!("{} representatives traceless", reps.len() - 1)
        } else {
            format!("nonzero trace at {}", traced.join(", "))
        },
    );

    // ω(g, h) for every ordered pair; None marks a product that is not a
    // phase multiple of the representative's image
    let rows = par::map_range(reps.len(), |i| {
        (0..reps.len())
            .map(|j| {
                let target = rep_index[&(reps[i] * reps[j])];
                (&mats[i] * &mats[j]).equal_up_to_phase(&mats[target])
            })
            .collect::<Vec<_>>()
    });
    let mut omegas = BTreeSet::new();
    let mut bad_pairs = 0usize;
    for row in &rows {
        for w in row {
            match w {
                Some(c) if is_fourth_root_of_unity(c) => {
                    omegas.insert(*c);
                }
                _ => bad_pairs += 1,
            }
        }
    }
    let omega_list: Vec<CycScalar> = omegas.iter().copied().collect();
    let omega_group = closure(CycScalar::one(), &omega_list, 8)?;
    let cyclic = omega_group.element_orders().iter().any(|&o| o as usize == omega_group.order());
    report.check(
        "c-projective",
        "phi(g) phi(h) = omega(g,h) phi(gh) with omega in {±1, ±i} forming a cyclic group",
        bad_pairs == 0 && cyclic,
        format!(
            "{} pairs, {bad_pairs} without a unit phase; omega values {{{}}} generate a cyclic group of order {}",
            reps.len() * reps.len(),
            omega_list.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            omega_group.order()
        ),
    );

    report.check(
        "degree",
        "deg phi = |G : Z(G)|^(1/2)",
        d * d == reps.len() && reps.len() * center.len() == g.order(),
        format!("d = {d}, |G/Z(G)| = {} = {}/{}", reps.len(), g.order(), center.len()),
    );

    let non_orthogonal = par::map_range(reps.len(), |i| {
        let gi = mats[i].dagger();
        (i + 1..reps.len()).filter(|&j| !(&gi * &mats[j]).trace().is_zero()).count()
    })
    .into_iter()
    .sum::<usize>();
    report.check(
        "trace-orthogonal",
        "Tr(phi(g)^† phi(h)) = 0 for distinct representatives g, h",
        non_orthogonal == 0,
        format!("{non_orthogonal} non-orthogonal pairs"),
    );

    Ok(report.with_summary(json!({
        "index_group_order": reps.len(),
        "degree": d,
        "center": g.center_type(),
        "omega": omega_list.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "representatives": reps.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })))
}

/// One entry of a phase table: `rep_basis[rep] = phase · pauli_basis[pauli]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseMatch {
    pub rep: usize,
    pub pauli: usize,
    pub phase: CycScalar,
}

/// A bijection between the two bases modulo unit phases, if one exists.
///
/// Candidates are found with [`ExactMatrix::equal_up_to_phase`] and matched
/// by augmenting paths, so repeated or degenerate entries are handled.
pub fn match_mod_phase(rep_basis: &[ExactMatrix], pauli_basis: &[ExactMatrix]) -> Option<Vec<PhaseMatch>> {
    if rep_basis.len() != pauli_basis.len() {
        return None;
    }
    let candidates: Vec<Vec<(usize, CycScalar)>> = par::map(rep_basis, |a| {
        pauli_basis
            .iter()
            .enumerate()
            .filter_map(|(j, b)| a.equal_up_to_phase(b).map(|c| (j, c)))
            .collect()
    });
    let mut owner: Vec<Option<usize>> = vec![None; pauli_basis.len()];

    fn augment(i: usize, cand: &[Vec<(usize, CycScalar)>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &(j, _) in &cand[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|o| augment(o, cand, owner, seen)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..rep_basis.len() {
        let mut seen = vec![false; pauli_basis.len()];
        if !augment(i, &candidates, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut table: Vec<PhaseMatch> = owner
        .iter()
        .enumerate()
        .map(|(j, o)| {
            let i = o.expect("perfect matching");
            let phase = candidates[i].iter().find(|(jj, _)| *jj == j).expect("matched candidate").1;
            PhaseMatch { rep: i, pauli: j, phase }
        })
        .collect();
    table.sort_by_key(|m| m.rep);
    Some(table)
}

/// Report form of [`match_mod_phase`].
pub fn basis_equiv_mod_phase(rep_basis: &[ExactMatrix], pauli_basis: &[ExactMatrix]) -> Report {
    let mut report = Report::new("basis equivalence modulo phases");
    let table = match_mod_phase(rep_basis, pauli_basis);
    report.check(
        "bijection",
        "the representation basis equals the Pauli basis up to unit phases",
        table.is_some(),
        match &table {
            Some(t) => format!("{} elements matched", t.len()),
            None => format!("no bijection between {} and {} matrices", rep_basis.len(), pauli_basis.len()),
        },
    );
    match table {
        Some(t) => report.with_summary(json!(t
            .iter()
            .map(|m| json!({"rep": m.rep, "pauli": m.pauli, "phase": m.phase}))
            .collect::<Vec<_>>())),
        None => report,
    }
}

/// The unsigned Pauli error basis on `k` qubits as matrices.
pub fn pauli_basis_matrices(k: usize) -> Vec<ExactMatrix> {
    pauli::pauli_error_basis(k).iter().map(PauliString::to_matrix).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn rho_bases_are_nice() {
        for n in [2, 4] {
            let rep = standard_rep(n, Nu::Minus, LambdaBranch::One).unwrap();
            let r = nice_error_basis_check(n, Nu::Minus, &rep).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = nice_error_basis_check(4, Nu::Minus, &pauli::generators_rho(2)).unwrap();
        assert_eq!(r.summary.as_ref().unwrap()["index_group_order"], 16);
        assert_eq!(r.summary.as_ref().unwrap()["degree"], 4);
    }

    #[test]
    fn rescaled_and_lambda_bases() {
        let rep = standard_rep(4, Nu::Plus, LambdaBranch::One).unwrap();
        assert!(nice_error_basis_check(4, Nu::Plus, &rep).unwrap().passed());
        let rep = standard_rep(3, Nu::Minus, LambdaBranch::Two).unwrap();
        assert!(nice_error_basis_check(3, Nu::Minus, &rep).unwrap().passed());
    }

    #[test]
    fn lambda_basis_equals_rho_basis() {
        let lam = basis_matrices(5, Nu::Minus, &standard_rep(5, Nu::Minus, LambdaBranch::One).unwrap()).unwrap();
        let rho = basis_matrices(4, Nu::Minus, &pauli::generators_rho(2)).unwrap();
        let a: BTreeSet<_> = lam.into_iter().collect();
        let b: BTreeSet<_> = rho.into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn wrong_images_are_rejected() {
        let bad = pauli::generators_pauli(1, false);
        assert!(matches!(nice_error_basis_check(2, Nu::Minus, &bad), Err(Error::NotARepresentation(_))));
        assert!(standard_rep(1, Nu::Minus, LambdaBranch::One).is_err());
    }

    #[test]
    fn one_qubit_phase_table() {
        let rho = basis_matrices(2, Nu::Minus, &pauli::generators_rho(1)).unwrap();
        let table = match_mod_phase(&rho, &pauli_basis_matrices(1)).unwrap();
        assert_eq!(table[0], PhaseMatch { rep: 0, pauli: 0, phase: CycScalar::one() });
        assert!(table.iter().all(|m| m.phase.is_unit_modulus()));
    }

    #[test]
    fn corrupted_basis_has_no_bijection() {
        let mut rho = basis_matrices(2, Nu::Minus, &pauli::generators_rho(1)).unwrap();
        let h = ExactMatrix::from_ints(&[&[1, 1], &[1, -1]]).unwrap().scale(CycScalar::inv_sqrt2());
        rho[1] = h;
        let r = basis_equiv_mod_phase(&rho, &pauli_basis_matrices(1));
        assert_eq!(r.status_of("bijection"), Some(Status::Fail));
    }
}
