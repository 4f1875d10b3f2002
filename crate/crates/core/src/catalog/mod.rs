//! Named constructors for the Hopf algebras of dimension 27 (and Taft
//! algebras of any order), with the invariants expected of each.

pub mod groups;
pub mod pbw;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coalgebra::{full_filtration_with, simple_decomposition_escalating, CoalgebraError};
use crate::hopf::HopfError;
use crate::linalg::{CycNumber, Field};

pub use groups::GroupTable;
use pbw::{single, Elem, NilGenerator, Presentation};

pub use crate::HopfAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}

/// ζ_order^power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u32,
    pub power: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, power: i64) -> RootOfUnity {
        let order = order.max(1);
        RootOfUnity { order, power: power.rem_euclid(order as i64) as u32 }
    }

    /// Accepts `1`, `-1`, `zN` and `zN^k`.
    pub fn parse(s: &str) -> Result<RootOfUnity, CatalogError> {
        let bad = || CatalogError::BadParameter(format!("cannot parse root of unity `{s}`"));
        match s.trim() {
            "1" => return Ok(RootOfUnity::new(1, 0)),
            "-1" => return Ok(RootOfUnity::new(2, 1)),
            _ => {}
        }
        let rest = s.trim().strip_prefix('z').ok_or_else(bad)?;
        let (ord, pow) = match rest.split_once('^') {
            Some((o, p)) => (o, p.parse::<i64>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let ord: u32 = ord.parse().map_err(|_| bad())?;
        if ord == 0 {
            return Err(bad());
        }
        Ok(RootOfUnity::new(ord, pow))
    }

    /// Multiplicative order of the value.
    pub fn exact_order(&self) -> u32 {
        use num_integer::Integer;
        self.order / self.order.gcd(&self.power)
    }

    pub fn value(&self) -> CycNumber {
        CycNumber::root_of_unity(self.order, self.power as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.power) {
            (_, 0) => write!(f, "1"),
            (o, 1) => write!(f, "z{o}"),
            (o, p) => write!(f, "z{o}^{p}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<RootOfUnity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

impl Params {
    pub fn q(q: RootOfUnity) -> Params {
        Params { q: Some(q), ..Params::default() }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("N={n}"));
        }
        if let Some(q) = self.q {
            parts.push(format!("q={q}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        write!(f, "{}", parts.join(", "))
    }
}

fn require_root(p: &Params, order: u32) -> Result<RootOfUnity, CatalogError> {
    let q = p.q.ok_or_else(|| CatalogError::BadParameter("missing q".into()))?;
    if q.exact_order() != order {
        return Err(CatalogError::BadParameter(format!("q = {q} is not a primitive root of unity of order {order}")));
    }
    Ok(q)
}

fn x_delta(left: [usize; 3], right_g: usize) -> Vec<([usize; 3], [usize; 3], CycNumber)> {
    // x⊗g^k + 1⊗x with x = left.
    vec![(left, [right_g, 0, 0], CycNumber::one()), ([0, 0, 0], left, CycNumber::one())]
}

/// −x·g^{−k} in normal form, for g x g⁻¹ = λx and g of order n.
fn minus_x_g_inv(lambda: &CycNumber, k: usize, n: usize, x: [usize; 3]) -> Elem {
    let e = (n - k % n) % n;
    let c = lambda.inv().expect("root of unity").pow(e as u64).neg_ref();
    single([e, x[1], x[2]], c)
}

/// T_q(N): g^N = 1, x^N = 0, gx = qxg, Δx = x⊗1 + g⊗x, S(x) = −g⁻¹x.
pub fn taft(n: usize, q: RootOfUnity) -> Result<HopfAlgebra, CatalogError> {
    if n < 2 {
        return Err(CatalogError::BadParameter(format!("Taft order N = {n} must be at least 2")));
    }
    let q = require_root(&Params::q(q), n as u32)?;
    let lambda = q.value();
    let x = NilGenerator {
        conj: lambda,
        order: n,
        power: Elem::new(),
        delta: vec![([0, 1, 0], [0, 0, 0], CycNumber::one()), ([1, 0, 0], [0, 1, 0], CycNumber::one())],
        antipode: single([n - 1, 1, 0], CycNumber::from_int(-1)),
    };
    let p = Presentation { g_order: n, x: Some(x), y: None, yx_correction: Elem::new(), field_order: n as u32 };
    Ok(p.build()?)
}

fn cyclic_labelled(n: usize) -> Result<HopfAlgebra, CatalogError> {
    let mut t = GroupTable::abelian(&[n]);
    t.labels = (0..n).map(|k| pbw_power("c", k)).collect();
    Ok(t.group_algebra()?)
}

fn pbw_power(s: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => s.into(),
        _ => format!("{s}^{k}"),
    }
}

/// (d) T_q ⊗ kC_3.
pub fn taft_x_c3(q: RootOfUnity) -> Result<HopfAlgebra, CatalogError> {
    let t = taft(3, q)?;
    let h = t.tensor(&cyclic_labelled(3)?);
    h.validate()?;
    Ok(h)
}

/// (e) g⁹ = 1, x³ = 0, gxg⁻¹ = wx with w³ = q, Δx = x⊗g³ + 1⊗x.
/// The parameter is w, a primitive 9th root of unity.
pub fn taft_tilde(w: RootOfUnity) -> Result<HopfAlgebra, CatalogError> {
    let w = require_root(&Params::q(w), 9)?;
    let lambda = w.value();
    let x = NilGenerator {
        conj: lambda.clone(),
        order: 3,
        power: Elem::new(),
        delta: x_delta([0, 1, 0], 3),
        antipode: minus_x_g_inv(&lambda, 3, 9, [0, 1, 0]),
    };
    let p = Presentation { g_order: 9, x: Some(x), y: None, yx_correction: Elem::new(), field_order: 9 };
    Ok(p.build()?)
}

fn hat_presentation(q: RootOfUnity, power: Elem) -> Result<Presentation, CatalogError> {
    let q = require_root(&Params::q(q), 3)?;
    let lambda = q.value();
    let x = NilGenerator {
        conj: lambda.clone(),
        order: 3,
        power,
        delta: x_delta([0, 1, 0], 1),
        antipode: minus_x_g_inv(&lambda, 1, 9, [0, 1, 0]),
    };
    Ok(Presentation { g_order: 9, x: Some(x), y: None, yx_correction: Elem::new(), field_order: 9 })
}

/// (f) g⁹ = 1, x³ = 0, gxg⁻¹ = qx, Δx = x⊗g + 1⊗x.
pub fn taft_hat(q: RootOfUnity) -> Result<HopfAlgebra, CatalogError> {
    Ok(hat_presentation(q, Elem::new())?.build()?)
}

/// (g) r(q): as (f) but x³ = 1 − g³.
pub fn r_q(q: RootOfUnity) -> Result<HopfAlgebra, CatalogError> {
    let mut power = single([0, 0, 0], CycNumber::one());
    power.insert([3, 0, 0], CycNumber::from_int(-1));
    Ok(hat_presentation(q, power)?.build()?)
}

/// (h) u_q(sl2): g³ = 1, gxg⁻¹ = q²x, gyg⁻¹ = q⁻²y, x³ = y³ = 0,
/// xy − yx = g − g⁻¹, Δx = x⊗g + 1⊗x, Δy = y⊗1 + g⁻¹⊗y.
pub fn uq_sl2(q: RootOfUnity) -> Result<HopfAlgebra, CatalogError> {
    let q = require_root(&Params::q(q), 3)?;
    let lx = q.value().pow(2);
    let ly = lx.inv().expect("root of unity");
    let x = NilGenerator {
        conj: lx.clone(),
        order: 3,
        power: Elem::new(),
        delta: x_delta([0, 1, 0], 1),
        antipode: minus_x_g_inv(&lx, 1, 3, [0, 1, 0]),
    };
    let y = NilGenerator {
        conj: ly,
        order: 3,
        power: Elem::new(),
        delta: vec![([0, 0, 1], [0, 0, 0], CycNumber::one()), ([2, 0, 0], [0, 0, 1], CycNumber::one())],
        antipode: single([1, 0, 1], CycNumber::from_int(-1)),
    };
    // y x = x y − g + g².
    let mut corr = single([1, 0, 0], CycNumber::from_int(-1));
    corr.insert([2, 0, 0], CycNumber::one());
    let p = Presentation { g_order: 3, x: Some(x), y: Some(y), yx_correction: corr, field_order: 3 };
    Ok(p.build()?)
}

/// (i) h(q, m): g³ = 1, gxg⁻¹ = qx, gyg⁻¹ = q^m y, x³ = y³ = 0, xy = yx,
/// Δx = x⊗g + 1⊗x, Δy = y⊗1 + g^m⊗y.
pub fn book(q: RootOfUnity, m: u32) -> Result<HopfAlgebra, CatalogError> {
    if m != 1 && m != 2 {
        return Err(CatalogError::BadParameter(format!("book parameter m = {m} must be 1 or 2")));
    }
    let q = require_root(&Params::q(q), 3)?;
    let lx = q.value();
    let ly = lx.pow(m as u64);
    let m = m as usize;
    let x = NilGenerator {
        conj: lx.clone(),
        order: 3,
        power: Elem::new(),
        delta: x_delta([0, 1, 0], 1),
        antipode: minus_x_g_inv(&lx, 1, 3, [0, 1, 0]),
    };
    let y = NilGenerator {
        conj: ly,
        order: 3,
        power: Elem::new(),
        delta: vec![([0, 0, 1], [0, 0, 0], CycNumber::one()), ([m, 0, 0], [0, 0, 1], CycNumber::one())],
        antipode: single([3 - m, 0, 1], CycNumber::from_int(-1)),
    };
    let p = Presentation { g_order: 3, x: Some(x), y: Some(y), yx_correction: Elem::new(), field_order: 3 };
    Ok(p.build()?)
}

/// Every name accepted by [`build`].
pub const BUILDERS: &[&str] = &[
    "taft",
    "cyclic",
    "group_c27",
    "group_c9xc3",
    "group_c3xc3xc3",
    "group_heis",
    "group_c9sdc3",
    "dual_group_heis",
    "dual_group_c9sdc3",
    "taft_x_c3",
    "taft_tilde",
    "taft_hat",
    "r_q",
    "uq_sl2",
    "book",
    "uq_sl2_dual",
    "r_q_dual",
];

fn no_params(name: &str, p: &Params) -> Result<(), CatalogError> {
    if *p != Params::default() {
        return Err(CatalogError::BadParameter(format!("`{name}` takes no parameters")));
    }
    Ok(())
}

pub fn build(name: &str, p: &Params) -> Result<HopfAlgebra, CatalogError> {
    let q = || p.q.ok_or_else(|| CatalogError::BadParameter("missing q".into()));
    match name {
        "taft" => taft(p.n.ok_or_else(|| CatalogError::BadParameter("missing N".into()))?, q()?),
        "cyclic" => {
            let n = p.n.ok_or_else(|| CatalogError::BadParameter("missing N".into()))?;
            if n == 0 {
                return Err(CatalogError::BadParameter("N must be positive".into()));
            }
            cyclic_labelled(n)
        }
        "group_c27" | "group_c9xc3" | "group_c3xc3xc3" | "group_heis" | "group_c9sdc3" => {
            no_params(name, p)?;
            Ok(group_table(name).group_algebra()?)
        }
        "dual_group_heis" | "dual_group_c9sdc3" => {
            no_params(name, p)?;
            Ok(group_table(&name["dual_".len()..]).group_algebra()?.dual())
        }
        "taft_x_c3" => taft_x_c3(q()?),
        "taft_tilde" => taft_tilde(q()?),
        "taft_hat" => taft_hat(q()?),
        "r_q" => r_q(q()?),
        "uq_sl2" => uq_sl2(q()?),
        "book" => book(q()?, p.m.ok_or_else(|| CatalogError::BadParameter("missing m".into()))?),
        "uq_sl2_dual" => Ok(uq_sl2(q()?)?.dual()),
        "r_q_dual" => Ok(r_q(q()?)?.dual()),
        other => Err(CatalogError::UnknownEntry(other.into())),
    }
}

fn group_table(name: &str) -> GroupTable {
    match name {
        "group_c27" => GroupTable::abelian(&[27]),
        "group_c9xc3" => GroupTable::abelian(&[9, 3]),
        "group_c3xc3xc3" => GroupTable::abelian(&[3, 3, 3]),
        "group_heis" => GroupTable::heisenberg27(),
        "group_c9sdc3" => GroupTable::c9_semidirect_c3(),
        _ => unreachable!("checked by caller"),
    }
}

/// Properties an entry must have. `None` means not asserted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub dim: usize,
    pub grouplikes: usize,
    /// Display form of G(H) when abelian, `None` when nonabelian.
    pub group: Option<String>,
    pub dual_grouplikes: Option<usize>,
    pub pointed: Option<bool>,
    pub copointed: Option<bool>,
    pub semisimple: Option<bool>,
    pub antipode_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Item letter of the classification list, e.g. "a", "d".
    pub item: String,
    pub name: String,
    pub params: Params,
    pub expected: Expected,
}

/// The invariants compared by [`invariant_separation`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Invariants {
    pub dim: usize,
    pub grouplikes: usize,
    pub group: String,
    pub group_order_statistics: Vec<(u64, usize)>,
    pub dual_grouplikes: usize,
    pub antipode_order: u64,
    pub semisimple: bool,
    pub pointed: bool,
    pub copointed: bool,
    pub coradical_profile: Vec<usize>,
    pub layer_dims: Vec<usize>,
    /// Refinement beyond the tuple above: for each pair of grouplikes (a, b)
    /// with nontrivial Δu = a⊗u + u⊗b, the order of t = b·a⁻¹ and the
    /// eigenvalues of u ↦ t u t⁻¹ modulo k(a − b), as a sorted multiset.
    pub skew_primitive_characters: Vec<(u64, String)>,
}

impl Invariants {
    /// The tuple without the skew-primitive refinement.
    pub fn coarse(&self) -> Invariants {
        Invariants { skew_primitive_characters: Vec::new(), ..self.clone() }
    }
}

pub fn skew_primitive_characters(h: &HopfAlgebra) -> Result<Vec<(u64, String)>, CatalogError> {
    let g = h.grouplike_group()?;
    let m = h.field_order();
    let mut out = Vec::new();
    for a in 0..g.order() {
        let a_inv = (0..g.order()).find(|&x| g.table[a][x] == g.identity).expect("group");
        for b in 0..g.order() {
            let p = h.coalgebra().skew_primitives(&g.elements[a], &g.elements[b])?;
            let trivial = usize::from(a != b);
            if p.dim() <= trivial {
                continue;
            }
            let t = g.table[b][a_inv];
            let conj = h.adjoint_action(&g.elements[t], crate::hopf::Side::Left);
            let Some(r) = conj.restrict(&p) else { continue };
            let eig = crate::linalg::finite_order_eigendecomposition_in(&r, g.orders[t].max(1), m)
                .map_err(|e| CatalogError::Hopf(HopfError::Linalg(e)))?;
            let mut skipped_trivial = trivial == 0;
            for (lambda, space) in eig {
                let mut mult = space.dim();
                if !skipped_trivial && lambda == CycNumber::one() {
                    mult -= 1;
                    skipped_trivial = true;
                }
                for _ in 0..mult {
                    out.push((g.orders[t], lambda.to_string_in(m)));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn invariants(h: &HopfAlgebra) -> Result<Invariants, CatalogError> {
    let g = h.grouplike_group()?;
    let (dec, _) = simple_decomposition_escalating(h.coalgebra())?;
    let profile = dec.profile();
    let (filt, _) = full_filtration_with(h.coalgebra(), dec)?;
    let dual = h.dual();
    let dual_g = dual.grouplikes().len();
    Ok(Invariants {
        dim: h.dim(),
        grouplikes: g.order(),
        group: g.to_string(),
        group_order_statistics: g.order_statistics().into_iter().collect(),
        dual_grouplikes: dual_g,
        antipode_order: h.antipode_order_default()?,
        semisimple: h.is_semisimple(),
        pointed: profile.iter().all(|&d| d == 1),
        copointed: dual.is_pointed(),
        coradical_profile: profile,
        layer_dims: filt.layer_dims(),
        skew_primitive_characters: skew_primitive_characters(h)?,
    })
}

fn expect(
    item: &str,
    name: &str,
    params: Params,
    grouplikes: usize,
    group: Option<&str>,
    dual_grouplikes: usize,
    flags: (bool, bool, bool),
) -> CatalogEntry {
    let (pointed, copointed, semisimple) = flags;
    CatalogEntry {
        item: item.into(),
        name: name.into(),
        params,
        expected: Expected {
            dim: 27,
            grouplikes,
            group: group.map(str::to_string),
            dual_grouplikes: Some(dual_grouplikes),
            pointed: Some(pointed),
            copointed: Some(copointed),
            semisimple: Some(semisimple),
            antipode_order: None,
        },
    }
}

/// Constructed entries of dimension 27 with one parameter choice per family.
pub fn catalog27_entries() -> Vec<CatalogEntry> {
    let z3 = RootOfUnity::new(3, 1);
    let z9 = RootOfUnity::new(9, 1);
    let none = Params::default;
    let mut d = expect("d", "taft_x_c3", Params::q(z3), 9, Some("C_3 × C_3"), 9, (true, true, false));
    d.expected.antipode_order = Some(6);
    vec![
        expect("a", "group_c27", none(), 27, Some("C_27"), 27, (true, true, true)),
        expect("a", "group_c9xc3", none(), 27, Some("C_3 × C_9"), 27, (true, true, true)),
        expect("a", "group_c3xc3xc3", none(), 27, Some("C_3 × C_3 × C_3"), 27, (true, true, true)),
        expect("b", "group_heis", none(), 27, None, 9, (true, false, true)),
        expect("b", "group_c9sdc3", none(), 27, None, 9, (true, false, true)),
        expect("b", "dual_group_heis", none(), 9, Some("C_3 × C_3"), 27, (false, true, true)),
        expect("b", "dual_group_c9sdc3", none(), 9, Some("C_3 × C_3"), 27, (false, true, true)),
        d,
        expect("e", "taft_tilde", Params::q(z9), 9, Some("C_9"), 9, (true, true, false)),
        expect("f", "taft_hat", Params::q(z3), 9, Some("C_9"), 9, (true, true, false)),
        expect("g", "r_q", Params::q(z3), 9, Some("C_9"), 3, (true, false, false)),
        expect("h", "uq_sl2", Params::q(z3), 3, Some("C_3"), 1, (true, false, false)),
        expect("i", "book", Params { q: Some(z3), m: Some(1), n: None }, 3, Some("C_3"), 3, (true, true, false)),
        expect("j", "uq_sl2_dual", Params::q(z3), 1, Some("1"), 3, (false, true, false)),
        expect("k", "r_q_dual", Params::q(z3), 3, Some("C_3"), 9, (false, true, false)),
    ]
}

/// Item (c): semisimple self-dual extensions without a presentation here.
pub const NOT_CONSTRUCTED: &[&str] = &["c1", "c2", "c3", "c4"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub entry: CatalogEntry,
    pub constructed: bool,
    pub axioms_pass: bool,
    pub invariants: Option<Invariants>,
    pub mismatches: Vec<String>,
}

impl EntryReport {
    pub fn passes(&self) -> bool {
        !self.constructed || (self.axioms_pass && self.mismatches.is_empty())
    }
}

pub fn check_expected(exp: &Expected, inv: &Invariants) -> Vec<String> {
    let mut out = Vec::new();
    let mut cmp = |what: &str, want: String, got: String| {
        if want != got {
            out.push(format!("{what}: expected {want}, found {got}"));
        }
    };
    cmp("dim", exp.dim.to_string(), inv.dim.to_string());
    cmp("|G|", exp.grouplikes.to_string(), inv.grouplikes.to_string());
    match &exp.group {
        Some(g) => cmp("G", g.clone(), inv.group.clone()),
        None => {
            if !inv.group.starts_with("nonabelian") {
                out.push(format!("G: expected nonabelian, found {}", inv.group));
            }
        }
    }
    let mut opt = |what: &str, want: Option<String>, got: String| {
        if let Some(w) = want {
            if w != got {
                out.push(format!("{what}: expected {w}, found {got}"));
            }
        }
    };
    opt("|G(H*)|", exp.dual_grouplikes.map(|x| x.to_string()), inv.dual_grouplikes.to_string());
    opt("pointed", exp.pointed.map(|x| x.to_string()), inv.pointed.to_string());
    opt("copointed", exp.copointed.map(|x| x.to_string()), inv.copointed.to_string());
    opt("semisimple", exp.semisimple.map(|x| x.to_string()), inv.semisimple.to_string());
    opt("ord S", exp.antipode_order.map(|x| x.to_string()), inv.antipode_order.to_string());
    out
}

pub fn verify_entry(entry: &CatalogEntry) -> EntryReport {
    let mut report = EntryReport { entry: entry.clone(), constructed: true, axioms_pass: false, invariants: None, mismatches: Vec::new() };
    let h = match build(&entry.name, &entry.params) {
        Ok(h) => h,
        Err(e) => {
            report.mismatches.push(e.to_string());
            return report;
        }
    };
    report.axioms_pass = h.validate().is_ok();
    match invariants(&h) {
        Ok(inv) => {
            report.mismatches = check_expected(&entry.expected, &inv);
            report.invariants = Some(inv);
        }
        Err(e) => report.mismatches.push(e.to_string()),
    }
    report
}

/// Verification reports for every constructed entry, followed by
/// "not constructed" placeholders; order is fixed by the entry list.
pub fn catalog27() -> Vec<EntryReport> {
    let mut reports: Vec<EntryReport> = catalog27_entries().par_iter().map(verify_entry).collect();
    for name in NOT_CONSTRUCTED {
        reports.push(EntryReport {
            entry: CatalogEntry { item: "c".into(), name: (*name).into(), params: Params::default(), expected: Expected { dim: 27, ..Expected::default() } },
            constructed: false,
            axioms_pass: false,
            invariants: None,
            mismatches: Vec::new(),
        });
    }
    reports
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Separation {
    Separated,
    NotSeparated,
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Separation::Separated => "separated",
            Separation::NotSeparated => "not separated",
        })
    }
}

/// Pairwise comparison of invariant tuples. Equal tuples are only "not
/// separated"; no isomorphism is claimed.
pub fn invariant_separation(tuples: &[Invariants]) -> Vec<Vec<Separation>> {
    tuples
        .iter()
        .map(|a| tuples.iter().map(|b| if a == b { Separation::NotSeparated } else { Separation::Separated }).collect())
        .collect()
}

/// Every parameter choice of the pointed families (d)–(i).
pub fn pointed_family_parameters() -> Vec<(String, Params)> {
    let mut out = Vec::new();
    for k in [1, 2] {
        let q = RootOfUnity::new(3, k);
        for name in ["taft_x_c3", "taft_hat", "r_q", "uq_sl2"] {
            out.push((name.to_string(), Params::q(q)));
        }
        for m in [1, 2] {
            out.push(("book".to_string(), Params { q: Some(q), m: Some(m), n: None }));
        }
    }
    for k in [1, 2, 4, 5, 7, 8] {
        out.push(("taft_tilde".to_string(), Params::q(RootOfUnity::new(9, k))));
    }
    out.sort();
    out
}

/// Distinct invariant tuples over [`pointed_family_parameters`], with the
/// parameter choices sharing each tuple.
pub fn pointed_family_tuples() -> Result<BTreeMap<Invariants, Vec<String>>, CatalogError> {
    let tuples: Vec<(String, Invariants)> = pointed_family_parameters()
        .par_iter()
        .map(|(name, p)| -> Result<_, CatalogError> { Ok((format!("{name}({p})"), invariants(&build(name, p)?)?)) })
        .collect::<Result<_, _>>()?;
    let mut classes: BTreeMap<Invariants, Vec<String>> = BTreeMap::new();
    for (label, inv) in tuples {
        classes.entry(inv).or_default().push(label);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roots() {
        assert_eq!(RootOfUnity::parse("z3").unwrap(), RootOfUnity::new(3, 1));
        assert_eq!(RootOfUnity::parse("z9^-1").unwrap(), RootOfUnity::new(9, 8));
        assert_eq!(RootOfUnity::parse("1").unwrap().exact_order(), 1);
        assert_eq!(RootOfUnity::parse("z6^2").unwrap().exact_order(), 3);
        assert!(RootOfUnity::parse("q").is_err());
        assert_eq!(RootOfUnity::new(9, 2).to_string(), "z9^2");
    }

    #[test]
    fn taft_rejects_non_primitive_q() {
        assert!(matches!(taft(3, RootOfUnity::new(1, 0)), Err(CatalogError::BadParameter(_))));
        assert!(matches!(book(RootOfUnity::new(3, 1), 3), Err(CatalogError::BadParameter(_))));
        assert!(matches!(build("nope", &Params::default()), Err(CatalogError::UnknownEntry(_))));
    }

    #[test]
    fn taft3_basics() {
        let h = taft(3, RootOfUnity::new(3, 1)).unwrap();
        assert_eq!(h.dim(), 9);
        assert_eq!(h.grouplikes().len(), 3);
        assert_eq!(h.antipode_order_default().unwrap(), 6);
        assert_eq!(h.labels()[4], "gx");
    }

    #[test]
    fn r_q_power_relation() {
        let h = r_q(RootOfUnity::new(3, 1)).unwrap();
        let x = h.basis_vector(1);
        let x3 = h.pow(&x, 3);
        let mut want = h.unit().to_vec();
        want[9] = want[9].sub_ref(&CycNumber::one());
        assert_eq!(x3, want);
    }
}
