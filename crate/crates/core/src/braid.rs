//! Braid group representations `b_i ↦ R_i = (I + T_i)/√2` built from the
//! generator images `T_i` of a nice error basis.
//!
//! With `T_i² = −I`, distant `T`'s commuting and neighbours anticommuting,
//! the `R_i` are unitary and satisfy the braid relations. This module builds
//! them for ρ (optionally rescaled by `−e^{−iπ/4}`) and for the λ branches,
//! checks the relations exactly, enumerates the finite image of the braid
//! group together with the image of the pure braid group, and searches for
//! short words that prepare GHZ states.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cyclotomic::CycScalar;
use crate::error::{Error, Result};
use crate::group::{closure, closure_labeled, FiniteGroupRecord};
use crate::matrix::ExactMatrix;
use crate::par;
use crate::pauli::{self, LambdaBranch, PauliString};
use crate::report::Report;

/// Largest `k` whose image is enumerated without an explicit cap.
pub const IMAGE_DEFAULT_MAX_K: usize = 2;

/// Largest supported `k`; matrices are `2^k × 2^k`.
pub const MAX_K: usize = 8;

pub const DEFAULT_GHZ_MAX_LEN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `T_i = ρ(e_i)`.
    Unscaled,
    /// The unscaled matrices times `−e^{−iπ/4} = ζ8³`.
    Jones,
    /// ρ plus the extra generator `+iZ_k`.
    Lambda1,
    /// ρ plus the extra generator `−iZ_k`.
    Lambda2,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Unscaled, Variant::Jones, Variant::Lambda1, Variant::Lambda2];

    fn branch(self) -> Option<LambdaBranch> {
        match self {
            Variant::Lambda1 => Some(LambdaBranch::One),
            Variant::Lambda2 => Some(LambdaBranch::Two),
            _ => None,
        }
    }

    /// Overall scalar applied to every `R_i`.
    pub fn scale(self) -> CycScalar {
        match self {
            Variant::Jones => CycScalar::zeta(3),
            _ => CycScalar::one(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Unscaled => "unscaled",
            Variant::Jones => "jones",
            Variant::Lambda1 => "lambda1",
            Variant::Lambda2 => "lambda2",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown variant {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidRepSpec {
    pub k: usize,
    pub variant: Variant,
}

impl BraidRepSpec {
    pub fn new(k: usize, variant: Variant) -> Result<Self> {
        if !(1..=MAX_K).contains(&k) {
            return Err(Error::InvalidParameter(format!("k must be in 1..={MAX_K}, got {k}")));
        }
        Ok(BraidRepSpec { k, variant })
    }

    /// `2k` for ρ-based variants, `2k + 1` with the λ generator.
    pub fn generator_count(&self) -> usize {
        if self.variant.branch().is_some() {
            2 * self.k + 1
        } else {
            2 * self.k
        }
    }

    pub fn strands(&self) -> usize {
        self.generator_count() + 1
    }

    pub fn dim(&self) -> usize {
        1 << self.k
    }

    /// The images `T_i` as Pauli strings.
    pub fn generator_images(&self) -> Vec<PauliString> {
        match self.variant.branch() {
            Some(b) => pauli::generators_lambda(self.k, b),
            None => pauli::generators_rho(self.k),
        }
    }
}

impl fmt::Display for BraidRepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, {} ({} strands)", self.k, self.variant, self.strands())
    }
}

/// A word in `b_1^{±1} … b_{n−1}^{±1}`; negative letters are inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::BadLetter { letter: bad, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::ParameterMismatch(format!("{} vs {} strands", self.strands, other.strands)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("b{l}") } else { format!("b{}^-1", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// A permutation of `0..n` in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u16).collect())
    }

    /// The image of `b_i`: strands `i` and `i + 1` (1-based) swap.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// `(self ∘ other)[x] = self[other[x]]`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }
}

/// Cycle notation on strands `1..=n`, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.0[x] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// `T_i` as matrices.
pub fn t_matrices(spec: &BraidRepSpec) -> Vec<ExactMatrix> {
    spec.generator_images().iter().map(PauliString::to_matrix).collect()
}

/// `R_i = s · (I + T_i)/√2` with `s` the variant's scalar.
pub fn build_r_matrices(spec: &BraidRepSpec) -> Vec<ExactMatrix> {
    let id = ExactMatrix::identity(spec.dim());
    let c = spec.variant.scale() * CycScalar::inv_sqrt2();
    t_matrices(spec).iter().map(|t| (&id + t).scale(c)).collect()
}

fn embed(op: &ExactMatrix, first_qubit: usize, k: usize) -> ExactMatrix {
    let width = op.dim().trailing_zeros() as usize;
    let before = ExactMatrix::identity(1 << (first_qubit - 1));
    let after = ExactMatrix::identity(1 << (k + 1 - first_qubit - width));
    ExactMatrix::tensor_all([&before, op, &after])
}

/// The same matrices written as tensor products of
/// `d = diag(ζ8, ζ8⁻¹) = e^{iπ/4 Z}`, `f = (1/√2)[[1, 1], [−1, 1]] = e^{π/4 Y}` and
/// `D = diag(ζ8, ζ8⁻¹, ζ8⁻¹, ζ8) = e^{iπ/4 Z⊗Z}`: `R_1 = d_1`, `R_{2i} = f_i`,
/// `R_{2i−1} = D` on qubits `i − 1, i`, and `d_k` or its conjugate last for
/// the λ variants.
pub fn explicit_r_matrices(spec: &BraidRepSpec) -> Vec<ExactMatrix> {
    let z = CycScalar::zeta(1);
    let zb = CycScalar::zeta(-1);
    let d = ExactMatrix::diagonal(vec![z, zb]);
    let f = ExactMatrix::from_ints(&[&[1, 1], &[-1, 1]]).expect("2x2").scale(CycScalar::inv_sqrt2());
    let dd = ExactMatrix::diagonal(vec![z, zb, zb, z]);
    let k = spec.k;
    let mut out = Vec::with_capacity(spec.generator_count());
    for i in 1..=k {
        out.push(if i == 1 { embed(&d, 1, k) } else { embed(&dd, i - 1, k) });
        out.push(embed(&f, i, k));
    }
    match spec.variant.branch() {
        Some(LambdaBranch::One) => out.push(embed(&d, k, k)),
        Some(LambdaBranch::Two) => out.push(embed(&ExactMatrix::diagonal(vec![zb, z]), k, k)),
        None => {}
    }
    let s = spec.variant.scale();
    out.iter().map(|m| m.scale(s)).collect()
}

/// Checks `T_i² = −I`, distant commutation, adjacent anticommutation and
/// anti-Hermiticity.
pub fn check_t_hypotheses(ts: &[ExactMatrix]) -> Report {
    let mut r = Report::new("hypotheses on T_i");
    if ts.is_empty() {
        return r;
    }
    let dim = ts[0].dim();
    let minus = ExactMatrix::identity(dim).scale(-CycScalar::one());
    let bad_sq: Vec<usize> = (0..ts.len()).filter(|&i| &ts[i] * &ts[i] != minus).map(|i| i + 1).collect();
    r.check("t-squared", "T_i^2 = -I", bad_sq.is_empty(), failing("i", &bad_sq, ts.len()));

    let mut far = Vec::new();
    let mut adj = Vec::new();
    for i in 0..ts.len() {
        for j in i + 1..ts.len() {
            let ab = &ts[i] * &ts[j];
            let ba = &ts[j] * &ts[i];
            if j == i + 1 {
                if ab != -&ba {
                    adj.push(i + 1);
                }
            } else if ab != ba {
                far.push(i + 1);
            }
        }
    }
    r.check("far-commute", "T_i T_j = T_j T_i for |i-j| >= 2", far.is_empty(), failing("first index", &far, 0));
    r.check(
        "adjacent-anticommute",
        "T_i T_{i+1} = -T_{i+1} T_i",
        adj.is_empty(),
        failing("i", &adj, ts.len().saturating_sub(1)),
    );
    let bad_ah: Vec<usize> = (0..ts.len()).filter(|&i| ts[i].dagger() != -&ts[i]).map(|i| i + 1).collect();
    r.check("anti-hermitian", "T_i^† = -T_i", bad_ah.is_empty(), failing("i", &bad_ah, ts.len()));
    r
}

fn failing(what: &str, bad: &[usize], total: usize) -> String {
    if bad.is_empty() {
        if total > 0 {
            format!("holds for all {total}")
        } else {
            "holds".into()
        }
    } else {
        let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
        format!("fails at {what} = {}", list.join(", "))
    }
}

pub fn generator_hypotheses(spec: &BraidRepSpec) -> Report {
    let mut r = check_t_hypotheses(&t_matrices(spec));
    r.case = format!("hypotheses on T_i, {spec}");
    r
}

#[derive(Clone, Copy, Debug)]
enum Relation {
    Far(usize, usize),
    Braid(usize),
    Unitary(usize),
}

/// Exact check of `R_i R_j = R_j R_i` (`|i − j| ≥ 2`),
/// `R_i R_{i+1} R_i = R_{i+1} R_i R_{i+1}` and unitarity.
pub fn verify_braid_presentation(mats: &[ExactMatrix]) -> Report {
    let mut rels = Vec::new();
    for i in 0..mats.len() {
        rels.push(Relation::Unitary(i));
        if i + 1 < mats.len() {
            rels.push(Relation::Braid(i));
        }
        for j in i + 2..mats.len() {
            rels.push(Relation::Far(i, j));
        }
    }
    let holds = par::map(&rels, |rel| match *rel {
        Relation::Far(i, j) => &mats[i] * &mats[j] == &mats[j] * &mats[i],
        Relation::Braid(i) => {
            let (a, b) = (&mats[i], &mats[i + 1]);
            &(a * b) * a == &(b * a) * b
        }
        Relation::Unitary(i) => mats[i].is_unitary(),
    });
    let mut r = Report::new("braid group presentation");
    let mut failures = Vec::new();
    let mut counts = [0usize; 3];
    for (rel, ok) in rels.iter().zip(&holds) {
        let (slot, name) = match *rel {
            Relation::Far(i, j) => (0, format!("R{}R{} = R{}R{}", i + 1, j + 1, j + 1, i + 1)),
            Relation::Braid(i) => (1, format!("R{a}R{b}R{a} = R{b}R{a}R{b}", a = i + 1, b = i + 2)),
            Relation::Unitary(i) => (2, format!("R{} unitary", i + 1)),
        };
        counts[slot] += 1;
        if !ok {
            failures.push((slot, name));
        }
    }
    let names = ["far-commutation", "braid-relation", "unitary"];
    let anchors = [
        "b_i b_j = b_j b_i for |i-j| >= 2",
        "b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}",
        "every R_i is unitary",
    ];
    for slot in 0..3 {
        let bad: Vec<&str> = failures.iter().filter(|(s, _)| *s == slot).map(|(_, n)| n.as_str()).collect();
        let witness = if bad.is_empty() {
            format!("{} instances hold exactly", counts[slot])
        } else {
            format!("fails: {}", bad.join("; "))
        };
        r.check(names[slot], anchors[slot], bad.is_empty(), witness);
    }
    r.with_summary(json!({
        "relations_checked": rels.len(),
        "failures": failures.iter().map(|(_, n)| n.clone()).collect::<Vec<_>>(),
    }))
}

/// Compares the built `R_i` with three independent descriptions: the
/// closed form `cos(π/4) I + sin(π/4) T_i`, the spectral form
/// `ζ8 (I − iT)/2 + ζ8⁻¹ (I + iT)/2` (projectors onto the `±i` eigenspaces)
/// and the explicit tensor products of `d`, `f` and `D`. For the Jones
/// variant also checks that each matrix is `−e^{−iπ/4}` times the unscaled
/// one.
pub fn exponential_forms(spec: &BraidRepSpec) -> Report {
    let mats = build_r_matrices(spec);
    let ts = t_matrices(spec);
    let s = spec.variant.scale();
    let id = ExactMatrix::identity(spec.dim());
    let h = CycScalar::inv_sqrt2();
    let half = h * h;
    let i = CycScalar::i();
    let mut r = Report::new(format!("exponential forms, {spec}"));

    let closed: Vec<usize> = (0..ts.len())
        .filter(|&n| mats[n] != (&id.scale(h) + &ts[n].scale(h)).scale(s))
        .map(|n| n + 1)
        .collect();
    r.check("closed-form", "e^{(pi/4) T} = cos(pi/4) I + sin(pi/4) T", closed.is_empty(), failing("i", &closed, ts.len()));

    let spectral: Vec<usize> = (0..ts.len())
        .filter(|&n| {
            let t = &ts[n];
            let plus = (&id - &t.scale(i)).scale(half * CycScalar::zeta(1));
            let minus = (&id + &t.scale(i)).scale(half * CycScalar::zeta(-1));
            mats[n] != (&plus + &minus).scale(s)
        })
        .map(|n| n + 1)
        .collect();
    r.check(
        "spectral-form",
        "e^{(pi/4) T} = e^{i pi/4} (I - iT)/2 + e^{-i pi/4} (I + iT)/2",
        spectral.is_empty(),
        failing("i", &spectral, ts.len()),
    );

    let explicit = explicit_r_matrices(spec);
    let bad: Vec<usize> = (0..mats.len()).filter(|&n| mats[n] != explicit[n]).map(|n| n + 1).collect();
    r.check(
        "tensor-form",
        "R_1 = d_1, R_{2i-1} = D on qubits i-1, i, R_{2i} = f_i (and d_k or conj(d_k) last for lambda)",
        bad.is_empty(),
        failing("i", &bad, mats.len()),
    );

    if spec.variant == Variant::Jones {
        let plain = build_r_matrices(&BraidRepSpec { variant: Variant::Unscaled, ..*spec });
        let expected = CycScalar::zeta(3);
        let bad: Vec<usize> = (0..mats.len())
            .filter(|&n| mats[n].equal_up_to_phase(&plain[n]) != Some(expected))
            .map(|n| n + 1)
            .collect();
        r.check("jones-phase", "R'_i = -e^{-i pi/4} R_i", bad.is_empty(), failing("i", &bad, mats.len()));
    }
    r
}

/// Matrix of `word` under `mats`; inverse letters use the adjoint.
fn word_matrix_from(mats: &[ExactMatrix], word: &BraidWord) -> ExactMatrix {
    let dim = mats[0].dim();
    word.letters.iter().fold(ExactMatrix::identity(dim), |acc, &l| {
        let m = &mats[l.unsigned_abs() as usize - 1];
        if l > 0 {
            &acc * m
        } else {
            &acc * &m.dagger()
        }
    })
}

fn check_word(spec: &BraidRepSpec, word: &BraidWord) -> Result<()> {
    if word.strands != spec.strands() {
        return Err(Error::ParameterMismatch(format!(
            "word on {} strands for a {}-strand representation",
            word.strands,
            spec.strands()
        )));
    }
    Ok(())
}

pub fn word_matrix(spec: &BraidRepSpec, word: &BraidWord) -> Result<ExactMatrix> {
    check_word(spec, word)?;
    Ok(word_matrix_from(&build_r_matrices(spec), word))
}

/// The word's matrix applied to `state`.
pub fn apply_word(spec: &BraidRepSpec, word: &BraidWord, state: &[CycScalar]) -> Result<Vec<CycScalar>> {
    word_matrix(spec, word)?.apply(state)
}

/// The finite image `G` of the braid group, permutation labels, and the
/// image `H` of the pure braid group.
#[derive(Clone, Debug)]
pub struct ImageRecord {
    pub spec: BraidRepSpec,
    pub group: FiniteGroupRecord<ExactMatrix>,
    pub perm_labels: Vec<Permutation>,
    pub pure_image: FiniteGroupRecord<ExactMatrix>,
    /// The subgroup generated by the squares `R_i²` alone, before taking
    /// conjugates. It can be smaller than the pure image.
    pub squares_group: FiniteGroupRecord<ExactMatrix>,
    /// No matrix was reached with two different permutations.
    pub consistent: bool,
    /// `g h g⁻¹ ∈ H` for every generator `g` of `G` and every `h ∈ H`.
    pub pure_is_normal: bool,
    /// Every element of `H` carries the identity permutation.
    pub pure_in_kernel: bool,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl ImageRecord {
    pub fn quotient_order(&self) -> usize {
        self.group.order() / self.pure_image.order()
    }

    /// `|G| = |H| · n!`.
    pub fn factorizes(&self) -> bool {
        self.group.order() == self.pure_image.order() * factorial(self.spec.strands())
    }

    pub fn summary(&self) -> serde_json::Value {
        json!({
            "order": self.group.order(),
            "pure_order": self.pure_image.order(),
            "quotient_order": self.quotient_order(),
            "strands_factorial": factorial(self.spec.strands()),
            "consistent": self.consistent,
            "pure_is_normal": self.pure_is_normal,
            "histograms": {
                "image": self.group.order_histogram(),
                "pure_image": self.pure_image.order_histogram(),
            },
            "pure_center": self.pure_image.center_type(),
            "pure_order4": self.pure_image.count_of_order(4),
            "squares_subgroup": {
                "order": self.squares_group.order(),
                "histogram": self.squares_group.order_histogram(),
            },
        })
    }
}

/// Enumerates `G` over `{R_i, R_i^†}`, labelling each matrix with the
/// permutation of its producing word, and computes `H` as the normal closure
/// of `{R_i²}` in `G`.
pub fn image_group(spec: &BraidRepSpec, cap: usize) -> Result<ImageRecord> {
    let mats = build_r_matrices(spec);
    let n = spec.strands();
    let dim = spec.dim();
    let mut gens = mats.clone();
    gens.extend(mats.iter().map(ExactMatrix::dagger));
    let labels: Vec<Permutation> = (1..=mats.len())
        .chain(1..=mats.len())
        .map(|i| Permutation::transposition(n, i))
        .collect();
    let lc = closure_labeled(ExactMatrix::identity(dim), &gens, Permutation::identity(n), &labels, |a, b| a.compose(b), cap)?;
    let mut group = lc.group;
    group.set_labels(lc.labels.iter().map(ToString::to_string).collect());

    // normal closure: add conjugates of the current generators by the
    // generators of G until nothing new appears
    let mut h_gens: Vec<ExactMatrix> = mats.iter().map(|m| m * m).collect();
    let squares_group = closure(ExactMatrix::identity(dim), &h_gens, cap)?;
    let mut pure = squares_group.clone();
    loop {
        let conjugates: Vec<ExactMatrix> = h_gens
            .iter()
            .flat_map(|h| gens.iter().map(move |g| &(g * h) * &g.dagger()))
            .collect();
        let mut fresh: Vec<ExactMatrix> = conjugates.into_iter().filter(|c| !pure.contains(c)).collect();
        if fresh.is_empty() {
            break;
        }
        fresh.sort();
        fresh.dedup();
        h_gens.extend(fresh);
        pure = closure(ExactMatrix::identity(dim), &h_gens, cap)?;
    }

    let pure_is_normal = par::all(pure.elements(), |h| gens.iter().all(|g| pure.contains(&(&(g * h) * &g.dagger()))));
    let pure_in_kernel = pure
        .elements()
        .iter()
        .all(|h| group.index_of(h).is_some_and(|i| lc.labels[i].is_identity()));
    Ok(ImageRecord {
        spec: *spec,
        group,
        perm_labels: lc.labels,
        pure_image: pure,
        squares_group,
        consistent: lc.consistent,
        pure_is_normal,
        pure_in_kernel,
    })
}

/// `state = phase · (|0…0⟩ + ζ8^a |1…1⟩)/√2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GhzWitness {
    pub phase: CycScalar,
    pub a: u8,
}

pub fn ghz_test(state: &[CycScalar]) -> Option<GhzWitness> {
    let len = state.len();
    if len < 2 || !len.is_power_of_two() {
        return None;
    }
    let last = len - 1;
    if state[1..last].iter().any(|s| !s.is_zero()) || state[0].is_zero() {
        return None;
    }
    let phase = state[0] * CycScalar::sqrt2();
    if !phase.is_unit_modulus() {
        return None;
    }
    let a = state[last].checked_div(&state[0])?.zeta_exponent()?;
    Some(GhzWitness { phase, a })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GhzHit {
    pub word: BraidWord,
    pub witness: GhzWitness,
    pub state: Vec<CycScalar>,
}

/// Breadth-first search for the shortest word taking `|0…0⟩` to a GHZ
/// state. Letters are tried in the order `1, …, n−1, −1, …, −(n−1)`.
pub fn ghz_search(spec: &BraidRepSpec, max_len: usize) -> Option<GhzHit> {
    let mats = build_r_matrices(spec);
    let daggers: Vec<ExactMatrix> = mats.iter().map(ExactMatrix::dagger).collect();
    let g = mats.len() as i32;
    let letters: Vec<i32> = (1..=g).chain((1..=g).map(|l| -l)).collect();
    let mut start = vec![CycScalar::zero(); spec.dim()];
    start[0] = CycScalar::one();
    let mut seen: HashSet<Vec<CycScalar>> = HashSet::from([start.clone()]);
    let mut queue: VecDeque<(Vec<CycScalar>, Vec<i32>)> = VecDeque::from([(start, Vec::new())]);
    while let Some((state, word)) = queue.pop_front() {
        if word.len() >= max_len {
            continue;
        }
        for &l in &letters {
            let m = if l > 0 { &mats[l as usize - 1] } else { &daggers[(-l) as usize - 1] };
            let next = m.apply(&state).expect("state has the matrix dimension");
            if !seen.insert(next.clone()) {
                continue;
            }
            // the new letter acts last, so it goes in front
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(l);
            w.extend_from_slice(&word);
            if let Some(witness) = ghz_test(&next) {
                let word = BraidWord { strands: spec.strands(), letters: w };
                return Some(GhzHit { word, witness, state: next });
            }
            queue.push_back((next, w));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn spec(k: usize, v: Variant) -> BraidRepSpec {
        BraidRepSpec::new(k, v).unwrap()
    }

    #[test]
    fn one_qubit_matrices() {
        let r = build_r_matrices(&spec(1, Variant::Unscaled));
        assert_eq!(r[0], ExactMatrix::diagonal(vec![CycScalar::zeta(1), CycScalar::zeta(7)]));
        let f = ExactMatrix::from_ints(&[&[1, 1], &[-1, 1]]).unwrap().scale(CycScalar::inv_sqrt2());
        assert_eq!(r[1], f);
    }

    #[test]
    fn zz_generator() {
        let r = build_r_matrices(&spec(2, Variant::Unscaled));
        let z = CycScalar::zeta(1);
        let zb = CycScalar::zeta(-1);
        assert_eq!(r[2], ExactMatrix::diagonal(vec![z, zb, zb, z]));
    }

    #[test]
    fn presentations_hold() {
        for k in 1..=3 {
            for v in Variant::ALL {
                let s = spec(k, v);
                assert!(verify_braid_presentation(&build_r_matrices(&s)).passed(), "{s}");
                assert!(generator_hypotheses(&s).passed(), "{s}");
                assert!(exponential_forms(&s).passed(), "{s}");
            }
        }
    }

    #[test]
    fn rescaled_generators_fail_hypothesis_a() {
        let ts: Vec<ExactMatrix> =
            pauli::rescale_by_i(&pauli::generators_rho(2)).iter().map(PauliString::to_matrix).collect();
        let r = check_t_hypotheses(&ts);
        assert!(!r.passed());
        // -Z and friends are Hermitian, so anti-Hermiticity goes too
        assert_eq!(r.failures().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["t-squared", "anti-hermitian"]);
    }

    #[test]
    fn words() {
        assert!(matches!(BraidWord::new(3, vec![3]), Err(Error::BadLetter { letter: 3, strands: 3 })));
        assert!(BraidWord::new(3, vec![0]).is_err());
        let s = spec(1, Variant::Unscaled);
        let state = vec![CycScalar::one(), CycScalar::zero()];
        assert_eq!(apply_word(&s, &BraidWord::empty(3), &state).unwrap(), state);
        let w = BraidWord::new(3, vec![1, -1]).unwrap();
        assert_eq!(apply_word(&s, &w, &state).unwrap(), state);
        assert_eq!(w.to_string(), "b1 b1^-1");
        assert!(apply_word(&s, &BraidWord::empty(4), &state).is_err());
    }

    #[test]
    fn permutations() {
        let a = Permutation::transposition(3, 1);
        let b = Permutation::transposition(3, 2);
        assert!(a.compose(&a).is_identity());
        let aba = a.compose(&b).compose(&a);
        assert_eq!(aba, b.compose(&a).compose(&b));
        assert_eq!(aba.to_string(), "(1 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn three_strand_image() {
        let img = image_group(&spec(1, Variant::Unscaled), 10_000).unwrap();
        assert_eq!(img.group.order(), 48);
        assert_eq!(img.pure_image.order(), 8);
        assert_eq!(img.pure_image.order_histogram(), &BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert!(img.consistent && img.pure_is_normal && img.pure_in_kernel && img.factorizes());

        // conjugates of the squares bring in the scalar i: the pure image is
        // Z4∘D, while the squares alone generate D
        let img = image_group(&spec(1, Variant::Jones), 10_000).unwrap();
        assert_eq!(img.group.order(), 96);
        assert_eq!(img.pure_image.order_histogram(), &BTreeMap::from([(1, 1), (2, 7), (4, 8)]));
        assert_eq!(img.squares_group.order_histogram(), &BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
    }

    #[test]
    fn ghz_states() {
        let s = vec![CycScalar::inv_sqrt2(), CycScalar::zero(), CycScalar::zero(), CycScalar::inv_sqrt2()];
        assert_eq!(ghz_test(&s), Some(GhzWitness { phase: CycScalar::one(), a: 0 }));
        let basis = vec![CycScalar::one(), CycScalar::zero(), CycScalar::zero(), CycScalar::zero()];
        assert_eq!(ghz_test(&basis), None);

        let sp = spec(1, Variant::Unscaled);
        assert_eq!(ghz_search(&sp, 0), None);
        let hit = ghz_search(&sp, 4).unwrap();
        let mut zero = vec![CycScalar::zero(); 2];
        zero[0] = CycScalar::one();
        assert!(ghz_test(&apply_word(&sp, &hit.word, &zero).unwrap()).is_some());
    }
}
