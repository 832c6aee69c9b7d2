//! Classification of `E^ν_n` as central products of `D` and `Q`.
//!
//! A [`GroupLabel`] names one of the groups `D^r`, `QD^{r−1}`, `Z4∘X` and
//! `Z2∘X` (with `X` one of the first two) and predicts its invariant triple
//! (order, center type, number of order-4 elements). The functions here
//! compare those predictions with abstract enumeration, rebuild the
//! central-product decompositions step by step, and compare `E^ν_n` with the
//! real and complex Pauli groups.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::json;

use crate::egroup::{self, EElement, Nu};
use crate::error::{Error, Result};
use crate::group::{closure, CenterType, FiniteGroupRecord, GroupElement, GroupInvariants, DEFAULT_CAP};
use crate::par;
use crate::pauli::{self, PauliString};
use crate::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CentralFactor {
    Z2,
    Z4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    /// Center `Z2`.
    Extraspecial,
    /// Center `Z4`.
    Almost,
    /// Center `Z2×Z2`.
    Nearly,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Extraspecial => "extraspecial",
            Category::Almost => "almost extraspecial",
            Category::Nearly => "nearly extraspecial",
        })
    }
}

/// `[central ∘] D^rank` or `[central ∘] Q D^{rank−1}`.
///
/// Rank 0 only occurs with a central factor, giving `Z4` and `Z2×Z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupLabel {
    pub central: Option<CentralFactor>,
    pub quaternion: bool,
    pub rank: u32,
}

impl GroupLabel {
    /// `D^r`.
    pub fn d(r: u32) -> Self {
        GroupLabel { central: None, quaternion: false, rank: r }
    }

    /// `Q D^s`, a central product of `s + 1` factors.
    pub fn qd(s: u32) -> Self {
        GroupLabel { central: None, quaternion: true, rank: s + 1 }
    }

    pub fn z4(self) -> Self {
        GroupLabel { central: Some(CentralFactor::Z4), ..self }
    }

    pub fn z2(self) -> Self {
        GroupLabel { central: Some(CentralFactor::Z2), ..self }
    }

    pub fn category(&self) -> Category {
        match self.central {
            None => Category::Extraspecial,
            Some(CentralFactor::Z4) => Category::Almost,
            Some(CentralFactor::Z2) => Category::Nearly,
        }
    }

    /// Invariants implied by the label.
    ///
    /// For the extraspecial part `X` of rank `r`, `|X| = 2^{2r+1}` and `X`
    /// has `4^r − 2^r` (for `D^r`) or `4^r + 2^r` (for `QD^{r−1}`) elements
    /// of order 4. In `Z4∘X = X ∪ iX` an element `ix` has order 4 exactly
    /// when `x² = 1`, so every such group has `|X|` of them; `Z2∘X = Z2×X`
    /// doubles the count.
    pub fn predicted(&self) -> GroupInvariants {
        let r = self.rank;
        let es_order = 1u64 << (2 * r + 1);
        let pow2 = 1u64 << r;
        let es_order4 = if self.quaternion { pow2 * pow2 + pow2 } else { pow2 * pow2 - pow2 };
        match self.central {
            None => GroupInvariants { order: es_order, center: CenterType::Z2, order4: es_order4 },
            Some(CentralFactor::Z4) => GroupInvariants { order: 2 * es_order, center: CenterType::Z4, order4: es_order },
            Some(CentralFactor::Z2) => {
                GroupInvariants { order: 2 * es_order, center: CenterType::Z2xZ2, order4: 2 * es_order4 }
            }
        }
    }
}

fn power(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match (self.quaternion, self.rank) {
            (_, 0) => String::new(),
            (true, 1) => "Q".to_string(),
            (true, r) => format!("Q{}", power("D", r - 1)),
            (false, r) => power("D", r),
        };
        match (self.central, base.is_empty()) {
            (None, true) => f.write_str("Z2"),
            (None, false) => f.write_str(&base),
            (Some(CentralFactor::Z4), true) => f.write_str("Z4"),
            (Some(CentralFactor::Z2), true) => f.write_str("Z2xZ2"),
            (Some(CentralFactor::Z4), false) => write!(f, "Z4∘{base}"),
            (Some(CentralFactor::Z2), false) => write!(f, "Z2∘{base}"),
        }
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The label predicted for `E^ν_n`.
///
/// For ν = −1 the even cases cycle with period 8 through
/// `D^{4j}, QD^{4j}, QD^{4j+1}, D^{4j+3}` (n ≡ 0, 2, 4, 6) and odd `n` adds a
/// central `Z4` (n ≡ 1, 5) or `Z2` (n ≡ 3, 7) to the label of `n − 1`. For
/// ν = +1 it is `D^k` at `n = 2k` and `Z2∘D^k` at `n = 2k + 1`.
pub fn predicted_label(n: usize, nu: Nu) -> Result<GroupLabel> {
    if n == 0 {
        return Err(Error::InvalidParameter("E^nu_n needs n >= 1".into()));
    }
    let half = (n / 2) as u32;
    if n.is_multiple_of(2) {
        return Ok(match (nu, n % 8) {
            (Nu::Plus, _) | (Nu::Minus, 0 | 6) => GroupLabel::d(half),
            _ => GroupLabel::qd(half - 1),
        });
    }
    let base = if n == 1 { GroupLabel::d(0) } else { predicted_label(n - 1, nu)? };
    Ok(match (nu, n % 8) {
        (Nu::Minus, 1 | 5) => base.z4(),
        _ => base.z2(),
    })
}

/// `((4^s + (−2)^s)/2, (4^s − (−2)^s)/2)`: the numbers of cyclic subgroups of
/// order 4 in `DQ^{s−1}` and in `Q^s`.
pub fn order4_formula(s: u32) -> (u64, u64) {
    assert!((1..=30).contains(&s), "s must be in 1..=30");
    let p = 4i128.pow(s);
    let q = (-2i128).pow(s);
    (((p + q) / 2) as u64, ((p - q) / 2) as u64)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub nu: Nu,
    pub order: u64,
    pub center_type: CenterType,
    pub order4_count: u64,
    pub order_histogram: std::collections::BTreeMap<u32, usize>,
    pub label: GroupLabel,
    pub category: Category,
    pub predicted: GroupInvariants,
    /// For even `n`: the pair from [`order4_formula`] at `s = n/2`.
    pub order4_formula: Option<(u64, u64)>,
    /// Enumerated invariants equal the prediction, the order is `2^{n+1}`
    /// and, for even `n`, the order-4 count is twice one formula entry.
    pub matches: bool,
}

impl ClassificationRecord {
    pub fn invariants(&self) -> GroupInvariants {
        GroupInvariants { order: self.order, center: self.center_type, order4: self.order4_count }
    }
}

pub fn classify_e(n: usize, nu: Nu) -> Result<ClassificationRecord> {
    let g = egroup::enumerate(n, nu)?;
    let inv = g.invariants();
    let label = predicted_label(n, nu)?;
    let predicted = label.predicted();
    let formula = n.is_multiple_of(2).then(|| order4_formula((n / 2) as u32));
    let formula_ok = formula.is_none_or(|(a, b)| inv.order4 == 2 * a || inv.order4 == 2 * b);
    let matches = inv == predicted && inv.order == 1u64 << (n + 1) && formula_ok;
    Ok(ClassificationRecord {
        n,
        nu,
        order: inv.order,
        center_type: inv.center,
        order4_count: inv.order4,
        order_histogram: g.order_histogram().clone(),
        label,
        category: label.category(),
        predicted,
        order4_formula: formula,
        matches,
    })
}

/// Small groups that show up as factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SmallGroup {
    Trivial,
    Z2,
    Z4,
    Z2xZ2,
    D,
    Q,
    Other(usize),
}

impl fmt::Display for SmallGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallGroup::Trivial => f.write_str("1"),
            SmallGroup::Z2 => f.write_str("Z2"),
            SmallGroup::Z4 => f.write_str("Z4"),
            SmallGroup::Z2xZ2 => f.write_str("Z2xZ2"),
            SmallGroup::D => f.write_str("D"),
            SmallGroup::Q => f.write_str("Q"),
            SmallGroup::Other(n) => write!(f, "other(order {n})"),
        }
    }
}

/// Tells `D` from `Q` by counting cyclic subgroups of order 4 (one in `D`,
/// three in `Q`), and names the groups of order at most 4.
pub fn recognize_dq<T: GroupElement>(g: &FiniteGroupRecord<T>) -> SmallGroup {
    match g.order() {
        1 => SmallGroup::Trivial,
        2 => SmallGroup::Z2,
        4 if g.count_of_order(4) > 0 => SmallGroup::Z4,
        4 => SmallGroup::Z2xZ2,
        8 if !g.is_abelian() => match g.cyclic_order4_subgroups() {
            1 => SmallGroup::D,
            3 => SmallGroup::Q,
            _ => SmallGroup::Other(8),
        },
        n => SmallGroup::Other(n),
    }
}

/// Outcome of checking that `G = H∘K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentralProductCheck {
    pub group_order: usize,
    pub h_order: usize,
    pub k_order: usize,
    pub intersection_order: usize,
    /// Every element of `H` commutes with every element of `K`.
    pub commute: bool,
    /// `H ∩ K ⊆ Z(G)`.
    pub intersection_central: bool,
    /// `|H|·|K| = |G|·|H ∩ K|`.
    pub order_product: bool,
    /// The products `hk` exhaust `G`.
    pub covers: bool,
}

impl CentralProductCheck {
    pub fn passed(&self) -> bool {
        self.commute && self.intersection_central && self.order_product && self.covers
    }
}

pub fn verify_central_product<T: GroupElement>(
    g: &FiniteGroupRecord<T>,
    h_gens: &[T],
    k_gens: &[T],
) -> Result<CentralProductCheck> {
    if let Some(bad) = h_gens.iter().chain(k_gens).position(|x| !g.contains(x)) {
        return Err(Error::InvalidParameter(format!("generator {bad} does not lie in the group")));
    }
    let h = g.subgroup(h_gens, g.order())?;
    let k = g.subgroup(k_gens, g.order())?;
    let commute = par::all(h.elements(), |a| k.elements().iter().all(|b| a.op(b) == b.op(a)));
    let intersection: Vec<&T> = h.elements().iter().filter(|a| k.contains(a)).collect();
    let intersection_central = intersection.iter().all(|a| g.is_central(a));
    let order_product = h.order() * k.order() == g.order() * intersection.len();
    let products: HashSet<T> = h
        .elements()
        .iter()
        .flat_map(|a| k.elements().iter().map(move |b| a.op(b)))
        .collect();
    let covers = products.len() == g.order() && products.iter().all(|x| g.contains(x));
    Ok(CentralProductCheck {
        group_order: g.order(),
        h_order: h.order(),
        k_order: k.order(),
        intersection_order: intersection.len(),
        commute,
        intersection_central,
        order_product,
        covers,
    })
}

/// One factor in a decomposition word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Factor {
    D,
    Q,
    Z2,
    Z4,
}

impl Factor {
    fn small_group(self) -> SmallGroup {
        match self {
            Factor::D => SmallGroup::D,
            Factor::Q => SmallGroup::Q,
            Factor::Z2 => SmallGroup::Z2,
            Factor::Z4 => SmallGroup::Z4,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.small_group(), f)
    }
}

/// Peeling one factor `K` off `E_m = H∘K`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionStep {
    /// Number of generators of the ambient group `E_m`.
    pub within: usize,
    pub h: String,
    pub k: String,
    /// Type read off the squares of `K`'s generators.
    pub factor: Factor,
    /// Type found by enumerating `K`.
    pub recognized: SmallGroup,
    /// Statement and truth of the square rule for `e_1 e_3 ⋯`.
    pub square_rule: String,
    pub square_rule_holds: bool,
    pub check: Option<CentralProductCheck>,
}

impl DecompositionStep {
    pub fn passed(&self) -> bool {
        self.square_rule_holds
            && self.recognized == self.factor.small_group()
            && self.check.is_none_or(|c| c.passed())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub nu: Nu,
    /// The base `E_2 = ⟨e_1, e_2⟩` followed by one step per peeled factor.
    pub steps: Vec<DecompositionStep>,
    pub word: Vec<Factor>,
    /// The word after rewriting `Q∘Q` as `D∘D`.
    pub normalized: GroupLabel,
    pub classified: GroupLabel,
}

impl Decomposition {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(DecompositionStep::passed) && self.normalized == self.classified
    }

    pub fn word_string(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        parts.join("∘")
    }
}

/// The central element `value` (±1) of `E^ν_n`.
fn sign_element(n: usize, nu: Nu, value: Nu) -> EElement {
    match value {
        Nu::Plus => EElement::identity(n, nu),
        Nu::Minus => EElement::minus_one(n, nu),
    }
}

fn generator_list(from: usize, to: usize) -> String {
    match to - from {
        0 => format!("e{from}"),
        1 => format!("e{from}, e{to}"),
        _ => format!("e{from}, ..., e{to}"),
    }
}

/// Rebuilds `E^ν_n` as a central product, one verified step at a time.
///
/// Starting from `E_2 = ⟨e_1, e_2⟩`, step `m` splits
/// `E_{2m} = E_{2m−2} ∘ ⟨c_m, e_{2m}⟩` with `c_m = e_1 e_3 ⋯ e_{2m−1}`.
/// `c_m² = ν^m` and `e_{2m}² = ν`, and the factor is `Q` when both squares
/// are `−1` and `D` otherwise. For odd `n` the last step splits off the
/// central `⟨e_1 e_3 ⋯ e_n⟩`, which is `Z4` or `Z2`.
pub fn decompose_e(n: usize, nu: Nu) -> Result<Decomposition> {
    if n < 2 {
        return Err(Error::InvalidParameter("decomposition needs n >= 2".into()));
    }
    let g = egroup::enumerate(n, nu)?;
    let e = |i: usize| EElement::generator(n, nu, i);
    let minus = EElement::minus_one(n, nu);
    let mut steps = Vec::new();

    let base = g.subgroup(&[e(1), e(2)], 8)?;
    let base_factor = if e(1).square() == minus { Factor::Q } else { Factor::D };
    steps.push(DecompositionStep {
        within: 2,
        h: "1".into(),
        k: generator_list(1, 2),
        factor: base_factor,
        recognized: recognize_dq(&base),
        square_rule: format!("e1^2 = e2^2 = {nu}"),
        square_rule_holds: e(1).square() == sign_element(n, nu, nu) && e(2).square() == sign_element(n, nu, nu),
        check: None,
    });

    for m in 2..=n / 2 {
        let ambient_gens: Vec<EElement> = (1..=2 * m).map(e).collect();
        let ambient = g.subgroup(&ambient_gens, g.order())?;
        let c = EElement::odd_product(n, nu, 2 * m - 1);
        let k_gens = [c, e(2 * m)];
        let both_negative = c.square() == minus && e(2 * m).square() == minus;
        let factor = if both_negative { Factor::Q } else { Factor::D };
        let k_group = ambient.subgroup(&k_gens, 8)?;
        steps.push(DecompositionStep {
            within: 2 * m,
            h: format!("<{}>", generator_list(1, 2 * m - 2)),
            k: format!("<{c}, e{}>", 2 * m),
            factor,
            recognized: recognize_dq(&k_group),
            square_rule: format!("({c})^2 = ({nu})^{m}"),
            square_rule_holds: c.square() == sign_element(n, nu, nu.pow(m)),
            check: Some(verify_central_product(&ambient, &ambient_gens[..2 * m - 2], &k_gens)?),
        });
    }

    if n % 2 == 1 {
        let c = EElement::odd_product(n, nu, n);
        let factor = if c.square() == minus { Factor::Z4 } else { Factor::Z2 };
        let h_gens: Vec<EElement> = (1..n).map(e).collect();
        let k_group = g.subgroup(&[c], 4)?;
        let m = n.div_ceil(2);
        steps.push(DecompositionStep {
            within: n,
            h: format!("<{}>", generator_list(1, n - 1)),
            k: format!("<{c}>"),
            factor,
            recognized: recognize_dq(&k_group),
            square_rule: format!("({c})^2 = ({nu})^{m}"),
            square_rule_holds: c.square() == sign_element(n, nu, nu.pow(m)),
            check: Some(verify_central_product(&g, &h_gens, &[c])?),
        });
    }

    let word: Vec<Factor> = steps.iter().map(|s| s.factor).collect();
    let mut q = word.iter().filter(|f| **f == Factor::Q).count() as u32;
    let mut d = word.iter().filter(|f| **f == Factor::D).count() as u32;
    while q >= 2 {
        q -= 2;
        d += 2;
    }
    let central = word.iter().find_map(|f| match f {
        Factor::Z2 => Some(CentralFactor::Z2),
        Factor::Z4 => Some(CentralFactor::Z4),
        _ => None,
    });
    let normalized = GroupLabel { central, quaternion: q == 1, rank: q + d };
    Ok(Decomposition { n, nu, steps, word, normalized, classified: predicted_label(n, nu)? })
}

/// The real (`complex = false`) or complex Pauli group on `k` qubits.
pub fn pauli_group(k: usize, complex: bool) -> Result<FiniteGroupRecord<PauliString>> {
    if k == 0 {
        return Err(Error::InvalidParameter("Pauli groups need k >= 1".into()));
    }
    closure(PauliString::identity(k), &pauli::generators_pauli(k, complex), DEFAULT_CAP)
}

/// `D^d ∘ Q^q` realised on `d + q` qubits: `⟨X_j, Z_j⟩` on the first `d`
/// qubits and `⟨iX_j, iZ_j⟩` on the rest.
pub fn dq_product(d: usize, q: usize) -> Result<FiniteGroupRecord<PauliString>> {
    let k = d + q;
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one factor".into()));
    }
    let mut gens = Vec::with_capacity(2 * k);
    for j in 1..=k {
        let phase = if j > d { 2 } else { 0 };
        gens.push(PauliString::x_on(k, j).times_phase(phase));
        gens.push(PauliString::z_on(k, j).times_phase(phase));
    }
    closure(PauliString::identity(k), &gens, DEFAULT_CAP)
}

/// Whether two groups agree on (order, center type, order-4 count), with a
/// sentence stating the basis of the verdict.
pub fn invariant_verdict(a: &GroupInvariants, b: &GroupInvariants) -> (bool, String) {
    let same = a == b;
    let word = if same { "isomorphic" } else { "not isomorphic" };
    (same, format!("{word} by invariants: [{a}] vs [{b}]"))
}

fn group_summary<T: GroupElement>(name: &str, g: &FiniteGroupRecord<T>) -> serde_json::Value {
    json!({
        "group": name,
        "order": g.order(),
        "center": g.center_type(),
        "order_histogram": g.order_histogram(),
        "order4": g.count_of_order(4),
        "squares_to_one": g.involution_count(),
    })
}

/// An anticommuting pair of elements squaring to `−1`, i.e. generators of
/// a quaternion subgroup, if `P_k` has one.
fn quaternion_in_pauli(g: &FiniteGroupRecord<PauliString>) -> Option<(PauliString, PauliString)> {
    let k = g.identity().k();
    let minus = PauliString::phase_only(k, 4);
    let roots: Vec<PauliString> = g.elements().iter().copied().filter(|a| *a * *a == minus).collect();
    roots.iter().enumerate().find_map(|(i, a)| {
        roots[i + 1..].iter().find(|b| a.commutator_sign(b) == -1).map(|b| (*a, *b))
    })
}

/// Compares `E^ν_{2k}`, `E^ν_{2k+1}` with the real and complex Pauli groups
/// on `k` qubits. Isomorphism verdicts use the invariant triple.
pub fn compare_pauli(k: usize) -> Result<Report> {
    let pk = pauli_group(k, false)?;
    let pkc = pauli_group(k, true)?;
    let ep_even = egroup::enumerate(2 * k, Nu::Plus)?;
    let em_even = egroup::enumerate(2 * k, Nu::Minus)?;
    let ep_odd = egroup::enumerate(2 * k + 1, Nu::Plus)?;
    let em_odd = egroup::enumerate(2 * k + 1, Nu::Minus)?;
    let (n_even, n_odd) = (2 * k, 2 * k + 1);
    let mut r = Report::new(format!("compare Pauli groups, k={k}"));

    let trans = pauli::pauli_from_e(k);
    let ok = trans.iter().filter(|c| c.holds).count();
    r.check(
        "bases-trans",
        "Y_i = e_{2i}, Z_i = (-i)^i e_1 e_3 ... e_{2i-1}, X_i = Z_i Y_i under rho",
        ok == trans.len(),
        format!("{ok}/{} identities hold for i = 1..{k}", trans.len()),
    );

    let (same, why) = invariant_verdict(&pk.invariants(), &ep_even.invariants());
    r.check("real-pauli-vs-e+even", format!("P_{k} is isomorphic to E^1_{n_even}"), same, why);

    let (same, why) = invariant_verdict(&pkc.invariants(), &ep_odd.invariants());
    let centers = pkc.center_type() == CenterType::Z4 && ep_odd.center_type() == CenterType::Z2xZ2;
    r.check(
        "complex-pauli-vs-e+odd",
        format!("P'_{k} (center Z4) is not isomorphic to E^1_{n_odd} (center Z2xZ2)"),
        !same && centers,
        why,
    );

    let (same, why) = invariant_verdict(&em_even.invariants(), &pk.invariants());
    let anchor = format!("E^-1_{n_even} is isomorphic to P_{k} when 2k = 8j or 8j+6");
    if matches!(k % 4, 0 | 3) {
        r.check("e-even-iso-pauli", anchor, same, why.clone());
    } else {
        r.push("e-even-iso-pauli", anchor, Status::Info, format!("not applicable at k={k}; {why}"));
    }

    let anchor = format!("E^-1_{n_even} contains Q and is not isomorphic to P_{k} when 2k = 8j+2 or 8j+4");
    if matches!(k % 4, 1 | 2) {
        let q = em_even.subgroup(&[EElement::generator(n_even, Nu::Minus, 1), EElement::generator(n_even, Nu::Minus, 2)], 8)?;
        let has_q = recognize_dq(&q) == SmallGroup::Q;
        r.check("e-even-contains-q", anchor, !same && has_q, format!("<e1, e2> is {}; {why}", recognize_dq(&q)));
        let anchor = format!("P_{k} contains no quaternion subgroup");
        match quaternion_in_pauli(&pk) {
            None => r.check("pauli-has-no-q", anchor, true, format!("no anticommuting pair squaring to -1 in P_{k}")),
            Some((a, b)) => r.push(
                "pauli-has-no-q",
                anchor,
                Status::Flagged,
                format!("<{a}, {b}> is a quaternion subgroup of P_{k}; only non-isomorphism of the groups holds"),
            ),
        }
    } else {
        r.push("e-even-contains-q", anchor, Status::Info, format!("not applicable at k={k}; {why}"));
    }

    let (same, why) = invariant_verdict(&em_odd.invariants(), &pkc.invariants());
    let anchor = format!("E^-1_{n_odd} is isomorphic to P'_{k} when 2k+1 = 8j+1");
    if k.is_multiple_of(4) {
        r.check("e-odd-iso-complex-pauli", anchor, same, why);
    } else {
        r.push("e-odd-iso-complex-pauli", anchor, Status::Info, format!("not applicable at k={k}; {why}"));
    }

    let (same, why) = invariant_verdict(&em_odd.invariants(), &ep_odd.invariants());
    let anchor = format!("E^-1_{n_odd} is isomorphic to E^1_{n_odd}, both with center Z2xZ2, when 2k+1 = 8j+7");
    if k % 4 == 3 {
        let centers = em_odd.center_type() == CenterType::Z2xZ2 && ep_odd.center_type() == CenterType::Z2xZ2;
        r.check("e-odd-iso-e+odd", anchor, same && centers, why);
    } else {
        r.push("e-odd-iso-e+odd", anchor, Status::Info, format!("not applicable at k={k}; {why}"));
    }

    Ok(r.with_summary(json!([
        group_summary(&format!("P_{k}"), &pk),
        group_summary(&format!("E^1_{n_even}"), &ep_even),
        group_summary(&format!("E^-1_{n_even}"), &em_even),
        group_summary(&format!("P'_{k}"), &pkc),
        group_summary(&format!("E^1_{n_odd}"), &ep_odd),
        group_summary(&format!("E^-1_{n_odd}"), &em_odd),
    ])))
}

/// Columns of the comparison table, left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Table1Column {
    RealPauli,
    EPlusEven,
    EMinusEven,
    ComplexPauli,
    EPlusOdd,
    EMinusOdd,
}

impl Table1Column {
    pub const ALL: [Table1Column; 6] = [
        Table1Column::RealPauli,
        Table1Column::EPlusEven,
        Table1Column::EMinusEven,
        Table1Column::ComplexPauli,
        Table1Column::EPlusOdd,
        Table1Column::EMinusOdd,
    ];

    pub fn group_name(self, k: usize) -> String {
        match self {
            Table1Column::RealPauli => format!("P_{k}"),
            Table1Column::EPlusEven => format!("E^1_{}", 2 * k),
            Table1Column::EMinusEven => format!("E^-1_{}", 2 * k),
            Table1Column::ComplexPauli => format!("P'_{k}"),
            Table1Column::EPlusOdd => format!("E^1_{}", 2 * k + 1),
            Table1Column::EMinusOdd => format!("E^-1_{}", 2 * k + 1),
        }
    }

    /// Enumerates the group in this column at `k` and returns its invariants.
    pub fn invariants(self, k: usize) -> Result<GroupInvariants> {
        Ok(match self {
            Table1Column::RealPauli => pauli_group(k, false)?.invariants(),
            Table1Column::ComplexPauli => pauli_group(k, true)?.invariants(),
            Table1Column::EPlusEven => egroup::enumerate(2 * k, Nu::Plus)?.invariants(),
            Table1Column::EMinusEven => egroup::enumerate(2 * k, Nu::Minus)?.invariants(),
            Table1Column::EPlusOdd => egroup::enumerate(2 * k + 1, Nu::Plus)?.invariants(),
            Table1Column::EMinusOdd => egroup::enumerate(2 * k + 1, Nu::Minus)?.invariants(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub k: usize,
    pub column: Table1Column,
    pub label: GroupLabel,
}

/// The 24 entries of the comparison table for `k = 1..4`.
pub fn table1_cells() -> Vec<Table1Cell> {
    let d = GroupLabel::d;
    let qd = GroupLabel::qd;
    let rows = [
        [d(1), d(1), qd(0), d(1).z4(), d(1).z2(), qd(0).z2()],
        [d(2), d(2), qd(1), d(2).z4(), d(2).z2(), qd(1).z4()],
        [d(3), d(3), d(3), d(3).z4(), d(3).z2(), d(3).z2()],
        [d(4), d(4), d(4), d(4).z4(), d(4).z2(), d(4).z4()],
    ];
    rows.iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .zip(Table1Column::ALL)
                .map(move |(&label, column)| Table1Cell { k: i + 1, column, label })
        })
        .collect()
}

/// Checks every cell's label against the enumerated group, plus `D² ≅ Q²`.
pub fn verify_table(cells: &[Table1Cell]) -> Result<Report> {
    let computed = par::map(cells, |c| c.column.invariants(c.k));
    let mut r = Report::new("comparison table, k = 1..4");
    for (cell, inv) in cells.iter().zip(computed) {
        let inv = inv?;
        let predicted = cell.label.predicted();
        r.check(
            format!("k{}/{}", cell.k, cell.column.group_name(cell.k)),
            format!("{} ≅ {}", cell.column.group_name(cell.k), cell.label),
            inv == predicted,
            format!("enumerated [{inv}], label predicts [{predicted}]"),
        );
    }
    let dd = dq_product(2, 0)?.invariants();
    let qq = dq_product(0, 2)?.invariants();
    let (same, why) = invariant_verdict(&dd, &qq);
    r.check("d2-q2", "D^2 ≅ Q^2", same, why);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_rendering() {
        assert_eq!(GroupLabel::qd(1).to_string(), "QD");
        assert_eq!(GroupLabel::qd(0).to_string(), "Q");
        assert_eq!(GroupLabel::qd(4).to_string(), "QD^4");
        assert_eq!(GroupLabel::d(4).z4().to_string(), "Z4∘D^4");
        assert_eq!(GroupLabel::d(1).z2().to_string(), "Z2∘D");
        assert_eq!(GroupLabel::d(0).z4().to_string(), "Z4");
        assert_eq!(GroupLabel::d(0).z2().to_string(), "Z2xZ2");
    }

    #[test]
    fn small_label_predictions() {
        let q = GroupLabel::qd(0).predicted();
        assert_eq!((q.order, q.center, q.order4), (8, CenterType::Z2, 6));
        let d = GroupLabel::d(1).predicted();
        assert_eq!(d.order4, 2);
        let z4 = GroupLabel::d(0).z4().predicted();
        assert_eq!((z4.order, z4.center, z4.order4), (4, CenterType::Z4, 2));
        let klein = GroupLabel::d(0).z2().predicted();
        assert_eq!((klein.order, klein.center, klein.order4), (4, CenterType::Z2xZ2, 0));
    }

    #[test]
    fn predicted_labels() {
        let m = |n| predicted_label(n, Nu::Minus).unwrap().to_string();
        let p = |n| predicted_label(n, Nu::Plus).unwrap().to_string();
        assert_eq!(m(1), "Z4");
        assert_eq!(m(2), "Q");
        assert_eq!(m(3), "Z2∘Q");
        assert_eq!(m(4), "QD");
        assert_eq!(m(5), "Z4∘QD");
        assert_eq!(m(6), "D^3");
        assert_eq!(m(7), "Z2∘D^3");
        assert_eq!(m(8), "D^4");
        assert_eq!(m(9), "Z4∘D^4");
        assert_eq!(m(10), "QD^4");
        assert_eq!(p(1), "Z2xZ2");
        assert_eq!(p(3), "Z2∘D");
        assert_eq!(p(8), "D^4");
    }

    #[test]
    fn formula_values() {
        assert_eq!(order4_formula(1), (1, 3));
        assert_eq!(order4_formula(2), (10, 6));
        assert_eq!(order4_formula(3), (28, 36));
    }

    #[test]
    fn classify_examples() {
        let r = classify_e(4, Nu::Minus).unwrap();
        assert_eq!(r.label.to_string(), "QD");
        assert_eq!(r.category, Category::Extraspecial);
        assert_eq!(r.order4_count, 20);
        assert!(r.matches);

        let r = classify_e(8, Nu::Minus).unwrap();
        assert_eq!(r.label, GroupLabel::d(4));
        assert_eq!(r.order4_count, 240);
        assert!(r.matches);

        let r = classify_e(3, Nu::Plus).unwrap();
        assert_eq!(r.category, Category::Nearly);
        assert_eq!(r.center_type, CenterType::Z2xZ2);
        assert!(r.matches);
    }

    #[test]
    fn recognition() {
        let d = closure(PauliString::identity(1), &pauli::generators_pauli(1, false), 100).unwrap();
        assert_eq!(recognize_dq(&d), SmallGroup::D);
        let q = dq_product(0, 1).unwrap();
        assert_eq!(recognize_dq(&q), SmallGroup::Q);
        let z2 = closure(PauliString::identity(1), &[PauliString::phase_only(1, 4)], 100).unwrap();
        assert_eq!(recognize_dq(&z2), SmallGroup::Z2);
    }

    #[test]
    fn central_product_examples() {
        let n = 4;
        let nu = Nu::Minus;
        let g = egroup::enumerate(n, nu).unwrap();
        let e = |i| EElement::generator(n, nu, i);
        let c = verify_central_product(&g, &[e(1), e(2)], &[e(1) * e(3), e(4)]).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.intersection_order, 2);

        // whole group against the trivial subgroup
        let all: Vec<EElement> = (1..=n).map(e).collect();
        assert!(verify_central_product(&g, &all, &[]).unwrap().passed());

        // <e1, e2> and <e2, e3> do not commute
        let bad = verify_central_product(&g, &[e(1), e(2)], &[e(2), e(3)]).unwrap();
        assert!(!bad.commute);
        assert!(!bad.passed());
    }

    #[test]
    fn decompositions() {
        let d = decompose_e(6, Nu::Minus).unwrap();
        assert_eq!(d.word, vec![Factor::Q, Factor::D, Factor::Q]);
        assert_eq!(d.normalized.to_string(), "D^3");
        assert!(d.passed());

        let d = decompose_e(4, Nu::Minus).unwrap();
        assert_eq!(d.word_string(), "Q∘D");
        assert!(d.passed());

        let d = decompose_e(2, Nu::Minus).unwrap();
        assert_eq!(d.word, vec![Factor::Q]);

        let d = decompose_e(5, Nu::Minus).unwrap();
        assert_eq!(*d.word.last().unwrap(), Factor::Z4);
        assert!(d.passed());
    }

    #[test]
    fn table_negative_path() {
        let mut cells = table1_cells();
        assert_eq!(cells.len(), 24);
        cells[2].label = GroupLabel::d(1);
        let r = verify_table(&cells).unwrap();
        let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(failed, ["k1/E^-1_2"]);
    }
}
