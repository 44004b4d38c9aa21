//! Truncated one-parameter families over Q[pi]/(pi^N): perturbation of
//! hyperelliptic models, rescaling of the v-variables, order detection,
//! the even/odd split and the discriminant section.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{solve_sparse, Coeff, Echelon, RatMatrix, Rational, SparseVec, TruncatedScalar};
use crate::json::{wpoly_from_json, wpoly_to_json};
use crate::poly::{enumerate_monomials, BinaryForm, Grading, MonomialBasis, WPoly};
use crate::rnc::check_genus;
use crate::xg::{
    hyperelliptic_model, hyperelliptic_quartics, uu_representatives, uv_representatives, vv_pairs, Group, XgIdeal,
};

pub type TPoly = WPoly<TruncatedScalar>;

/// Tagged equations over Q[pi]/(pi^N), grouped as in [`XgIdeal`].
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedFamily {
    g: usize,
    order_bound: usize,
    groups: [Vec<TPoly>; 3],
}

fn lift(p: &WPoly, n: usize) -> TPoly {
    p.map_coeffs(|c| TruncatedScalar::constant(c.clone(), n))
}

fn truncate_poly(p: &TPoly, m: usize) -> TPoly {
    p.map_coeffs(|c| c.truncate(m))
}

/// Coefficient of `pi^k`.
fn digit(p: &TPoly, k: usize) -> WPoly {
    p.map_coeffs(|c| c.coeff(k))
}

fn v_degree(g: usize, m: &crate::poly::Monomial) -> usize {
    WPoly::<Rational>::v_degree_of(g, m)
}

impl TruncatedFamily {
    pub fn new(g: usize, order_bound: usize, uu: Vec<TPoly>, uv: Vec<TPoly>, vv: Vec<TPoly>) -> Result<Self> {
        check_genus(g)?;
        if order_bound == 0 {
            return Err(Error::Precondition("order bound must be positive".into()));
        }
        let groups = [uu, uv, vv];
        for (grp, gens) in Group::ALL.iter().zip(&groups) {
            for p in gens {
                if p.g() != g {
                    return Err(Error::DimensionMismatch { expected: g, found: p.g() });
                }
                for (m, c) in p.terms() {
                    if c.order_bound() != order_bound {
                        return Err(Error::DimensionMismatch { expected: order_bound, found: c.order_bound() });
                    }
                    let d = m.weighted_degree(&Grading::Weighted.weights(g));
                    if d != grp.degree() {
                        return Err(Error::DegreeMismatch { expected: grp.degree(), found: d });
                    }
                }
            }
        }
        Ok(Self { g, order_bound, groups })
    }

    /// The family constant in pi.
    pub fn constant(ideal: &XgIdeal, order_bound: usize) -> Result<Self> {
        let f = |grp| ideal.group(grp).iter().map(|p| lift(p, order_bound)).collect();
        Self::new(ideal.g(), order_bound, f(Group::UU), f(Group::UV), f(Group::VV))
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn order_bound(&self) -> usize {
        self.order_bound
    }

    pub fn group(&self, grp: Group) -> &[TPoly] {
        &self.groups[grp as usize]
    }

    /// Reduction modulo `pi^m`.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.order_bound {
            return Err(Error::Precondition(format!("cannot truncate order bound {} to {m}", self.order_bound)));
        }
        Ok(Self { g: self.g, order_bound: m, groups: self.groups.clone().map(|v| v.iter().map(|p| truncate_poly(p, m)).collect()) })
    }

    /// Reduction modulo pi.
    pub fn special_fiber(&self) -> XgIdeal {
        let [uu, uv, vv] = self.groups.clone().map(|v| v.iter().map(|p| digit(p, 0)).collect::<Vec<_>>());
        XgIdeal::new(self.g, uu, uv, vv).expect("groups keep their degrees")
    }

    fn map_groups(&self, order_bound: usize, f: impl Fn(Group, usize, &TPoly) -> Result<TPoly>) -> Result<Self> {
        let mut groups: [Vec<TPoly>; 3] = Default::default();
        for grp in Group::ALL {
            groups[grp as usize] =
                self.group(grp).iter().enumerate().map(|(e, p)| f(grp, e, p)).collect::<Result<_>>()?;
        }
        Ok(Self { g: self.g, order_bound, groups })
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("g".into(), json!(self.g));
        obj.insert("N".into(), json!(self.order_bound));
        for grp in Group::ALL {
            obj.insert(format!("{grp:?}"), Value::Array(self.group(grp).iter().map(wpoly_to_json).collect()));
        }
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("missing \"{k}\"")));
        let g = field("g")? as usize;
        let n = field("N")? as usize;
        check_genus(g)?;
        let mut groups: [Vec<TPoly>; 3] = Default::default();
        for grp in Group::ALL {
            if let Some(list) = v.get(format!("{grp:?}")) {
                let list = list.as_array().ok_or_else(|| Error::Parse(format!("{grp:?} must be a list")))?;
                groups[grp as usize] = list.iter().map(|p| wpoly_from_json(g, p)).collect::<Result<_>>()?;
            }
        }
        let [uu, uv, vv] = groups;
        Self::new(g, n, uu, uv, vv)
    }
}

/// Hyperelliptic model of `h` with `pi^d ell_e(v)` added to the UU equations.
pub fn perturb_hyperelliptic(g: usize, h: &BinaryForm, d: usize, order_bound: usize, ell: &[WPoly]) -> Result<TruncatedFamily> {
    if order_bound <= 2 * d {
        return Err(Error::Precondition(format!("order bound {order_bound} must exceed 2d = {}", 2 * d)));
    }
    if d == 0 {
        return Err(Error::Precondition("perturbation order must be positive".into()));
    }
    let model = hyperelliptic_model(g, h)?.ideal;
    if ell.len() != model.group(Group::UU).len() {
        return Err(Error::DimensionMismatch { expected: model.group(Group::UU).len(), found: ell.len() });
    }
    let base = TruncatedFamily::constant(&model, order_bound)?;
    let pi_d = TruncatedScalar::monomial(Rational::one(), d, order_bound);
    let mut out = base;
    for (p, l) in out.groups[Group::UU as usize].iter_mut().zip(ell) {
        if l.terms().any(|(m, _)| v_degree(g, m) != 1) {
            return Err(Error::Precondition(format!("odd direction must be linear in v, got {l}")));
        }
        *p = p.add(&lift(l, order_bound).map_coeffs(|c| c.clone() * pi_d.clone()));
    }
    Ok(out)
}

/// Substitute `v -> v / pi^k` and multiply UU, UV, VV by `pi^0`, `pi^k`,
/// `pi^2k`. The order bound drops by `k` (by `2|k|` when `k < 0`).
pub fn rescale_v(f: &TruncatedFamily, k: i64) -> Result<TruncatedFamily> {
    let g = f.g;
    let n = f.order_bound as i64;
    let new_n = if k >= 0 { n - k } else { n + 2 * k };
    if new_n <= 0 {
        return Err(Error::InexactDivision(format!("rescaling by {k} leaves no precision at order bound {n}")));
    }
    let new_n = new_n as usize;
    f.map_groups(new_n, |grp, _, p| {
        let base = match grp {
            Group::UU => 0,
            Group::UV => 1,
            Group::VV => 2,
        };
        let mut out = TPoly::zero(g);
        for (m, c) in p.terms() {
            let e = k * (base - v_degree(g, m) as i64);
            let c = if e >= 0 { c.mul_pi_pow(e as usize) } else { c.div_pi_pow((-e) as usize)? };
            out.add_term(m.clone(), c.truncate(new_n));
        }
        Ok(out)
    })
}

/// Substitute `pi -> pi^2` in every coefficient.
pub fn ramify(f: &TruncatedFamily) -> TruncatedFamily {
    let n = 2 * f.order_bound - 1;
    f.map_groups(n, |_, _, p| Ok(p.map_coeffs(TruncatedScalar::ramify))).expect("reindexing cannot fail")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyOrder {
    pub order: usize,
    /// The shape persists up to the order bound.
    pub at_bound: bool,
}

impl FamilyOrder {
    pub fn display(&self) -> String {
        if self.at_bound {
            format!("≥ {}", self.order)
        } else {
            self.order.to_string()
        }
    }
}

/// Largest `m <= N` with `shape(F mod pi^m)`; shapes are checked digit by digit.
fn order_of(f: &TruncatedFamily, ok_digit: impl Fn(usize, Group, usize, &WPoly) -> bool) -> FamilyOrder {
    for k in 0..f.order_bound {
        for grp in Group::ALL {
            for (e, p) in f.group(grp).iter().enumerate() {
                if !ok_digit(k, grp, e, &digit(p, k)) {
                    return FamilyOrder { order: k, at_bound: false };
                }
            }
        }
    }
    FamilyOrder { order: f.order_bound, at_bound: true }
}

fn standard_groups(g: usize) -> [Vec<WPoly>; 3] {
    let vv = vv_pairs(g).into_iter().map(|(i, j)| WPoly::v(g, i).mul(&WPoly::v(g, j))).collect();
    [uu_representatives(g), uv_representatives(g), vv]
}

fn sizes_match(f: &TruncatedFamily, std: &[Vec<WPoly>; 3]) -> bool {
    Group::ALL.iter().all(|&grp| f.group(grp).len() == std[grp as usize].len())
}

/// Largest m with F mod pi^m of the form `(uu)_0 = ell(v)`, `(uv)_0`, `v_i v_j`.
pub fn ribbon_order(f: &TruncatedFamily) -> FamilyOrder {
    let g = f.g;
    let std = standard_groups(g);
    if !sizes_match(f, &std) {
        return FamilyOrder { order: 0, at_bound: false };
    }
    order_of(f, |k, grp, e, dig| {
        let target = if k == 0 { std[grp as usize][e].clone() } else { WPoly::zero(g) };
        match grp {
            Group::UU => dig.v_part(0) == target,
            _ => *dig == target,
        }
    })
}

/// Largest m with F mod pi^m of the form `(uu)_0`, `(uv)_0`, `v_i v_j - p_ij(u)`.
pub fn hyperell_order(f: &TruncatedFamily) -> FamilyOrder {
    let g = f.g;
    let std = standard_groups(g);
    if !sizes_match(f, &std) {
        return FamilyOrder { order: 0, at_bound: false };
    }
    order_of(f, |k, grp, e, dig| {
        let target = if k == 0 { std[grp as usize][e].clone() } else { WPoly::zero(g) };
        match grp {
            Group::VV => dig.filter_terms(|m, _| v_degree(g, m) > 0) == target,
            _ => *dig == target,
        }
    })
}

fn group_sign(grp: Group) -> i64 {
    match grp {
        Group::UV => -1,
        _ => 1,
    }
}

/// The hyperelliptic involution: negate v, with the group signs that fix
/// the hyperelliptic equations (UU +1, UV -1, VV +1).
pub fn involution(f: &TruncatedFamily) -> TruncatedFamily {
    f.map_groups(f.order_bound, |grp, _, p| Ok(p.negate_v().map_coeffs(|c| c.scale_int(group_sign(grp)))))
        .expect("sign changes cannot fail")
}

/// Even and odd parts of `F - base` under the involution.
pub fn even_odd_split(f: &TruncatedFamily, base: &XgIdeal) -> Result<(TruncatedFamily, TruncatedFamily)> {
    let g = f.g;
    if base.g() != g {
        return Err(Error::DimensionMismatch { expected: g, found: base.g() });
    }
    let n = f.order_bound;
    let lifted = TruncatedFamily::constant(base, n)?;
    if !Group::ALL.iter().all(|&grp| lifted.group(grp).len() == f.group(grp).len()) {
        return Err(Error::Precondition("family and base have different group sizes".into()));
    }
    let delta = f.map_groups(n, |grp, e, p| Ok(p.sub(&lifted.group(grp)[e])))?;
    for grp in Group::ALL {
        if delta.group(grp).iter().any(|p| !digit(p, 0).is_zero()) {
            return Err(Error::Precondition("family does not reduce to the base modulo pi".into()));
        }
    }
    let sigma = involution(&delta);
    let half = Rational::new(1.into(), 2.into());
    let combine = |sign: i64| {
        delta.map_groups(n, |grp, e, p| {
            let s = &sigma.group(grp)[e];
            let sum = if sign > 0 { p.add(s) } else { p.sub(s) };
            Ok(sum.map_coeffs(|c| c.scale_rat(&half)))
        })
    };
    Ok((combine(1)?, combine(-1)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantSection {
    pub g: usize,
    pub s: BinaryForm,
}

/// The section `s` of O(2g+2) read off the quartic terms `-pi^r p_ij(u)`
/// of the VV equations, where `r` is the (even) ribbon order.
pub fn discriminant_section(f: &TruncatedFamily) -> Result<DiscriminantSection> {
    let g = f.g;
    let r = ribbon_order(f);
    if r.at_bound {
        return Err(Error::Precondition(format!("family is a ribbon to order {}; no discriminant section", r.display())));
    }
    let r = r.order;
    if r == 0 || r % 2 == 1 {
        return Err(Error::Precondition(format!("ribbon order {r} is not a positive even number")));
    }
    let mut common: Option<BinaryForm> = None;
    for ((i, j), p) in vv_pairs(g).into_iter().zip(f.group(Group::VV)) {
        let quartic = digit(p, r).v_part(0).neg();
        let pulled = crate::poly::pullback_in_degree(&quartic, 4)?;
        let q = pulled
            .div_monomial(i + j, 2 * g - 6 - i - j)
            .map_err(|_| Error::InexactDivision(format!("p_{i}{j} is not divisible by x0^{} x1^{}", i + j, 2 * g - 6 - i - j)))?;
        match &common {
            None => common = Some(q),
            Some(c) if *c != q => {
                return Err(Error::Precondition(format!("quotient for p_{i}{j} differs from p_00")));
            }
            _ => {}
        }
    }
    let s = common.expect("at least one VV equation");
    if s.is_zero() {
        return Err(Error::Precondition(format!("the VV equations have no quartic terms at order {r}")));
    }
    Ok(DiscriminantSection { g, s })
}

/// Homogeneous resultant of two binary forms (Sylvester determinant on
/// the full coefficient vectors).
pub fn resultant(f: &BinaryForm, h: &BinaryForm) -> Rational {
    let (m, n) = (f.degree(), h.degree());
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut mat = RatMatrix::zeros(size, size);
    for r in 0..n {
        for a in 0..=m {
            mat[(r, r + a)] = f.coeff(m - a).clone();
        }
    }
    for r in 0..m {
        for a in 0..=n {
            mat[(n + r, r + a)] = h.coeff(n - a).clone();
        }
    }
    mat.det().expect("square")
}

/// `Res(ds/dx0, ds/dx1) / n^(n-2)`; zero iff `s` has a repeated root on P^1.
pub fn binary_discriminant(s: &BinaryForm) -> Result<Rational> {
    if s.is_zero() {
        return Err(Error::Precondition("discriminant of the zero form".into()));
    }
    let n = s.degree() as i32;
    let scale = num_traits::pow::Pow::pow(Rational::from_integer(n.into()), n - 2);
    Ok(resultant(&s.d_x0(), &s.d_x1()) / scale)
}

/// Q-dimension of `(Q[pi]/pi^m)[u,v]_d / I_d` for `F mod pi^m`.
pub fn truncated_hilbert_length(f: &TruncatedFamily, m: usize, d: usize) -> Result<usize> {
    let f = f.truncate(m)?;
    let g = f.g;
    let basis = MonomialBasis::new(g, Grading::Weighted, d, false);
    let weights = Grading::Weighted.weights(g);
    let all = vec![true; 2 * g - 2];
    let mut ech = Echelon::new();
    for grp in Group::ALL {
        if grp.degree() > d {
            continue;
        }
        let mults = enumerate_monomials(&weights, &all, d - grp.degree());
        for p in f.group(grp) {
            for mono in &mults {
                let prod = p.mul_monomial(mono);
                for shift in 0..m {
                    let mut row = Vec::new();
                    for (mm, c) in prod.terms() {
                        let idx = basis.index_of(mm).ok_or(Error::NotHomogeneous)?;
                        for t in 0..m - shift {
                            let x = c.coeff(t);
                            if !x.is_zero() {
                                row.push((idx * m + t + shift, x));
                            }
                        }
                    }
                    row.sort_by_key(|(i, _)| *i);
                    ech.insert(row);
                }
            }
        }
    }
    Ok(m * basis.len() - ech.rank())
}

/// Odd first-order completion of a perturbation: besides `pi^d ell_e(v)`
/// on UU, adds `pi^d (uuu)` to UV and `pi^d (uuv)` to VV so that every
/// syzygy of the hyperelliptic model lifts, which makes the family flat
/// modulo `pi^2d`. Fails when `ell` admits no such completion.
pub fn complete_odd_perturbation(g: usize, h: &BinaryForm, d: usize, order_bound: usize, ell: &[WPoly]) -> Result<TruncatedFamily> {
    let fam = perturb_hyperelliptic(g, h, d, order_bound, ell)?;
    let model = hyperelliptic_model(g, h)?.ideal;
    let weights = Grading::Weighted.weights(g);
    let all = vec![true; 2 * g - 2];
    let cubics = enumerate_monomials(&weights, &(0..2 * g - 2).map(|i| i < g).collect::<Vec<_>>(), 3);
    let uuv: Vec<_> = enumerate_monomials(&weights, &all, 4).into_iter().filter(|m| v_degree(g, m) == 1).collect();
    // unknowns: (generator index in generators(), monomial)
    let gens = model.generators();
    let mut unknowns = Vec::new();
    for (e, (grp, _)) in gens.iter().enumerate() {
        let monos = match grp {
            Group::UV => &cubics,
            Group::VV => &uuv,
            Group::UU => continue,
        };
        unknowns.extend(monos.iter().map(|m| (e, m.clone())));
    }
    let known: Vec<WPoly> = gens
        .iter()
        .enumerate()
        .map(|(e, (grp, _))| if *grp == Group::UU { ell[e].clone() } else { WPoly::zero(g) })
        .collect();

    // syzygies are linear in the Koszul grading, so weighted degree <= 4 + 2
    let report = crate::xg::syzygies_by_degree(&model, 6);
    // one equation per (syzygy, basis monomial): the lifted syzygy must
    // vanish modulo the model in that degree
    let mut equations: std::collections::BTreeMap<(usize, usize), SparseVec> = Default::default();
    let mut rhs: std::collections::BTreeMap<(usize, usize), Rational> = Default::default();
    // normal forms are linear: tabulate them on each degree's monomial basis
    let mut tables: std::collections::BTreeMap<usize, (MonomialBasis, Vec<SparseVec>)> = Default::default();
    for syz in &report.minimal {
        if let std::collections::btree_map::Entry::Vacant(slot) = tables.entry(syz.degree) {
            let basis = MonomialBasis::new(g, Grading::Weighted, syz.degree, false);
            let slice = crate::xg::slice_echelon(&model, Grading::Weighted, &basis)?;
            let table = (0..basis.len()).map(|i| slice.normal_form(crate::exact::unit(i))).collect();
            slot.insert((basis, table));
        }
    }
    for (s_idx, syz) in report.minimal.iter().enumerate() {
        let (basis, table) = &tables[&syz.degree];
        let nf = |p: &WPoly| -> Result<SparseVec> {
            let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
            for (m, c) in p.terms() {
                let i = basis.index_of(m).ok_or(Error::NotHomogeneous)?;
                for (k, x) in &table[i] {
                    *acc.entry(*k).or_insert_with(Rational::zero) += c * x;
                }
            }
            Ok(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
        };
        let known_part = syz.coeffs.iter().zip(&known).fold(WPoly::zero(g), |acc, (c, k)| acc.add(&c.mul(k)));
        for (idx, c) in nf(&known_part)? {
            rhs.insert((s_idx, idx), -c);
        }
        for (j, (e, m)) in unknowns.iter().enumerate() {
            if syz.coeffs[*e].is_zero() {
                continue;
            }
            for (idx, c) in nf(&syz.coeffs[*e].mul_monomial(m))? {
                equations.entry((s_idx, idx)).or_default().push((j, c));
            }
        }
    }
    for key in rhs.keys() {
        equations.entry(*key).or_default();
    }
    let system = equations.into_iter().map(|(key, row)| {
        let b = rhs.get(&key).cloned().unwrap_or_else(Rational::zero);
        (row, b)
    });
    let x = solve_sparse(unknowns.len(), system).ok_or_else(|| {
        Error::Precondition("the odd direction does not extend to a flat first-order deformation".into())
    })?;
    let pi_d = TruncatedScalar::monomial(Rational::one(), d, order_bound);
    let n_uu = model.group(Group::UU).len();
    let n_uv = model.group(Group::UV).len();
    let mut out = fam;
    for ((e, m), c) in unknowns.iter().zip(x) {
        if c.is_zero() {
            continue;
        }
        let (grp, k) = if *e < n_uu + n_uv { (Group::UV, e - n_uu) } else { (Group::VV, e - n_uu - n_uv) };
        let p = &mut out.groups[grp as usize][k];
        p.add_term(m.clone(), pi_d.scale_rat(&c));
    }
    Ok(out)
}

/// Per degree in `degrees`: whether `length(F mod pi^m) = m * HF(F mod pi)`.
pub fn is_flat_to(f: &TruncatedFamily, m: usize, degrees: &[usize]) -> Result<bool> {
    let base = crate::xg::hilbert_function(&f.special_fiber(), Grading::Weighted, degrees)?;
    for (&d, h) in degrees.iter().zip(base) {
        if truncated_hilbert_length(f, m, d)? != m * h {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderDoublingReport {
    pub g: usize,
    pub d: usize,
    pub order_bound: usize,
    pub hyperell_order: usize,
    pub ribbon_order_after_rescaling: usize,
    pub rescaled_order_bound: usize,
    #[serde(with = "crate::json::rational_vec")]
    pub section: Vec<Rational>,
    pub section_equals_h: bool,
    #[serde(with = "crate::json::rational")]
    pub discriminant: Rational,
    pub passed: bool,
}

/// Order bound used by the experiment: rescaling by d costs d digits and
/// the doubled order 2d must stay strictly below what is left.
pub fn experiment_order_bound(d: usize) -> usize {
    3 * d + 2
}

/// Perturb the hyperelliptic model of `h` at order `d`, rescale by `d`,
/// and check that the ribbon order is `2d` and the section is `h`.
pub fn order_doubling_experiment(g: usize, h: &BinaryForm, d: usize, ell: &[WPoly]) -> Result<OrderDoublingReport> {
    if ell.iter().all(WPoly::is_zero) {
        return Err(Error::Precondition("odd direction is zero".into()));
    }
    let n = experiment_order_bound(d);
    let fam = perturb_hyperelliptic(g, h, d, n, ell)?;
    let ho = hyperell_order(&fam);
    let rescaled = rescale_v(&fam, d as i64)?;
    let ro = ribbon_order(&rescaled);
    let section = discriminant_section(&rescaled)?;
    let discriminant = binary_discriminant(&section.s)?;
    let section_equals_h = section.s == *h;
    let passed = ho.order == d && !ho.at_bound && ro.order == 2 * d && !ro.at_bound && section_equals_h;
    Ok(OrderDoublingReport {
        g,
        d,
        order_bound: n,
        hyperell_order: ho.order,
        ribbon_order_after_rescaling: ro.order,
        rescaled_order_bound: rescaled.order_bound,
        section: section.s.coeffs().to_vec(),
        section_equals_h,
        discriminant,
        passed,
    })
}

/// `p_ij` of the model, exposed for consumers building their own families.
pub fn model_quartics(g: usize, h: &BinaryForm) -> Result<Vec<WPoly>> {
    hyperelliptic_quartics(g, h)
}
