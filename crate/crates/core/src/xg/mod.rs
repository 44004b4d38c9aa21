//! Subschemes of the weighted projective space X_g: the split ribbon,
//! ribbons in canonical form and hyperelliptic models, with the linear
//! algebra (Hilbert functions, v-elimination) and Groebner/syzygy tools
//! used to study them.

mod groebner;
mod syzygy;

pub use groebner::{buchberger, certify_quadratic_groebner, normal_monomial_count, reduce, GroebnerCertificate, GroebnerResult};
pub use syzygy::{classify, split_ribbon_shapes, syzygies_by_degree, SyzygyDegree, SyzygyRecord, SyzygyReport};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::conormal::{phi_d, psi2_as_v_form, ribbon_slice, LambdaFunctional};
use crate::error::{Error, Result};
use crate::exact::{Echelon, RatMatrix, Rational};
use crate::families::binary_discriminant;
use crate::json::{wpoly_from_json, wpoly_to_json};
use crate::poly::{quartic_lift, BinaryForm, Grading, Monomial, MonomialBasis, WPoly};
use crate::rnc::{check_genus, IdealSlice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    UU,
    UV,
    VV,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::UU, Group::UV, Group::VV];

    /// Weighted degree of the generators in the group.
    pub fn degree(self) -> usize {
        match self {
            Group::UU => 2,
            Group::UV => 3,
            Group::VV => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Group::UU => "uu",
            Group::UV => "uv",
            Group::VV => "vv",
        }
    }

    fn key(self) -> &'static str {
        match self {
            Group::UU => "UU",
            Group::UV => "UV",
            Group::VV => "VV",
        }
    }
}

/// Weighted-homogeneous ideal of X_g with generators tagged UU/UV/VV.
#[derive(Clone, Debug, PartialEq)]
pub struct XgIdeal {
    g: usize,
    groups: [Vec<WPoly>; 3],
}

impl XgIdeal {
    pub fn new(g: usize, uu: Vec<WPoly>, uv: Vec<WPoly>, vv: Vec<WPoly>) -> Result<Self> {
        check_genus(g)?;
        let groups = [uu, uv, vv];
        for (grp, gens) in Group::ALL.iter().zip(&groups) {
            for p in gens {
                if p.g() != g {
                    return Err(Error::DimensionMismatch { expected: g, found: p.g() });
                }
                if let Some(d) = p.degree(Grading::Weighted) {
                    if d != grp.degree() {
                        return Err(Error::DegreeMismatch { expected: grp.degree(), found: d });
                    }
                } else if !p.is_zero() {
                    return Err(Error::NotHomogeneous);
                }
            }
        }
        Ok(Self { g, groups })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn group(&self, grp: Group) -> &[WPoly] {
        &self.groups[grp as usize]
    }

    /// All generators, UU first, with their tags.
    pub fn generators(&self) -> Vec<(Group, &WPoly)> {
        Group::ALL.iter().flat_map(|&grp| self.group(grp).iter().map(move |p| (grp, p))).collect()
    }

    pub fn len(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Substitute `v_j -> t v_j`.
    pub fn scale_v(&self, t: &Rational) -> Self {
        let g = self.g;
        let f = |p: &WPoly| {
            let mut out = WPoly::zero(g);
            for (m, c) in p.terms() {
                let k = WPoly::<Rational>::v_degree_of(g, m) as i32;
                out.add_term(m.clone(), c * num_traits::pow::Pow::pow(t, k as u32));
            }
            out
        };
        Self { g, groups: self.groups.clone().map(|gens| gens.iter().map(f).collect()) }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("g".into(), json!(self.g));
        for grp in Group::ALL {
            obj.insert(grp.key().into(), Value::Array(self.group(grp).iter().map(wpoly_to_json).collect()));
        }
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let g = v.get("g").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing \"g\"".into()))? as usize;
        check_genus(g)?;
        let mut groups: [Vec<WPoly>; 3] = Default::default();
        for grp in Group::ALL {
            if let Some(list) = v.get(grp.key()) {
                let list = list.as_array().ok_or_else(|| Error::Parse(format!("{} must be a list", grp.key())))?;
                groups[grp as usize] = list.iter().map(|p| wpoly_from_json(g, p)).collect::<Result<_>>()?;
            }
        }
        let [uu, uv, vv] = groups;
        Self::new(g, uu, uv, vv)
    }
}

/// Pairs `((i, j), (k, l))` with `i + j = k + l`, `i < k <= l < j`, where
/// `(k, l)` is the most balanced split of the sum. Ordered by sum, then `i`.
pub fn uu_pairs(g: usize) -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    for s in 0..=2 * (g - 1) {
        let (k, l) = (s / 2, s - s / 2);
        for i in s.saturating_sub(g - 1)..k {
            out.push(((i, s - i), (k, l)));
        }
    }
    out
}

/// Pairs `((i, j), (k, l))` for `u_i v_j - u_k v_l`, `i + j = k + l`, where
/// `(k, l)` has the smallest v-index. Ordered by sum, then `i`.
pub fn uv_pairs(g: usize) -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    for s in 0..=2 * g - 4 {
        let k = s.min(g - 1);
        for i in s.saturating_sub(g - 3)..k {
            out.push(((i, s - i), (k, s - k)));
        }
    }
    out
}

pub fn uu_representatives(g: usize) -> Vec<WPoly> {
    let u = |i| WPoly::u(g, i);
    uu_pairs(g).into_iter().map(|((i, j), (k, l))| u(i).mul(&u(j)).sub(&u(k).mul(&u(l)))).collect()
}

pub fn uv_representatives(g: usize) -> Vec<WPoly> {
    uv_pairs(g)
        .into_iter()
        .map(|((i, j), (k, l))| WPoly::u(g, i).mul(&WPoly::v(g, j)).sub(&WPoly::u(g, k).mul(&WPoly::v(g, l))))
        .collect()
}

/// Index pairs `(i, j)`, `i <= j`, of the VV group.
pub fn vv_pairs(g: usize) -> Vec<(usize, usize)> {
    (0..g - 2).flat_map(|i| (i..g - 2).map(move |j| (i, j))).collect()
}

fn vv_products(g: usize) -> Vec<WPoly> {
    vv_pairs(g).into_iter().map(|(i, j)| WPoly::v(g, i).mul(&WPoly::v(g, j))).collect()
}

/// The hyperelliptic ribbon: `u_i u_j = u_k u_l`, `u_i v_j = u_k v_l`, `v_i v_j = 0`.
pub fn split_ribbon_ideal(g: usize) -> Result<XgIdeal> {
    check_genus(g)?;
    XgIdeal::new(g, uu_representatives(g), uv_representatives(g), vv_products(g))
}

/// `UU_e = (uu)_{0,e} - ell_e(v)` with the standard UV and VV groups.
pub fn canonical_ribbon_ideal(g: usize, ell: &[WPoly]) -> Result<XgIdeal> {
    check_genus(g)?;
    let reps = uu_representatives(g);
    if ell.len() != reps.len() {
        return Err(Error::DimensionMismatch { expected: reps.len(), found: ell.len() });
    }
    for l in ell {
        if l.terms().any(|(m, _)| m.degree() != 1 || WPoly::<Rational>::v_degree_of(g, m) != 1) {
            return Err(Error::Precondition(format!("ell must be linear in v, got {l}")));
        }
    }
    let uu = reps.iter().zip(ell).map(|(r, l)| r.sub(l)).collect();
    XgIdeal::new(g, uu, uv_representatives(g), vv_products(g))
}

/// The linear terms `ell_e(v) = psi_2(lambda, (uu)_{0,e})` read through
/// `v_a <-> x0^a x1^(g-3-a)`; the canonical-form ribbon they define
/// eliminates to the ribbon of `lambda` in P^(g-1).
pub fn ribbon_ell(lambda: &LambdaFunctional) -> Result<Vec<WPoly>> {
    uu_representatives(lambda.g()).iter().map(|r| psi2_as_v_form(lambda, r)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct HyperellipticModel {
    pub ideal: XgIdeal,
    /// `h` has 2g+2 distinct roots.
    pub smooth: bool,
}

/// The quartic lift `p_ij` of `x0^(i+j) x1^(2g-6-i-j) h`.
pub fn hyperelliptic_quartics(g: usize, h: &BinaryForm) -> Result<Vec<WPoly>> {
    check_genus(g)?;
    if h.degree() != 2 * g + 2 {
        return Err(Error::DegreeMismatch { expected: 2 * g + 2, found: h.degree() });
    }
    vv_pairs(g)
        .into_iter()
        .map(|(i, j)| quartic_lift(&h.shift(i + j, 2 * g - 6 - i - j), g))
        .collect()
}

/// `y^2 = h` in X_g: split UU and UV, `VV_ij = v_i v_j - p_ij(u)`.
pub fn hyperelliptic_model(g: usize, h: &BinaryForm) -> Result<HyperellipticModel> {
    let p = hyperelliptic_quartics(g, h)?;
    let vv = vv_products(g).iter().zip(&p).map(|(a, b)| a.sub(b)).collect();
    let ideal = XgIdeal::new(g, uu_representatives(g), uv_representatives(g), vv)?;
    let smooth = !h.is_zero() && !binary_discriminant(h)?.is_zero();
    Ok(HyperellipticModel { ideal, smooth })
}

/// Weighted (or Koszul) degree of every generator, failing if one is not
/// homogeneous in that grading.
fn generator_degrees(ideal: &XgIdeal, grading: Grading) -> Result<Vec<Option<usize>>> {
    ideal
        .generators()
        .iter()
        .map(|(_, p)| match p.degree(grading) {
            Some(d) => Ok(Some(d)),
            None if p.is_zero() => Ok(None),
            None => Err(Error::NotHomogeneous),
        })
        .collect()
}

/// Echelon form of the ideal's slice in the degree of `basis`.
pub fn slice_echelon(ideal: &XgIdeal, grading: Grading, basis: &MonomialBasis) -> Result<Echelon> {
    let g = ideal.g;
    let degs = generator_degrees(ideal, grading)?;
    let weights = grading.weights(g);
    let all = vec![true; 2 * g - 2];
    let mut ech = Echelon::new();
    for ((_, p), d) in ideal.generators().into_iter().zip(degs) {
        let Some(d) = d else { continue };
        if d > basis.degree {
            continue;
        }
        for m in crate::poly::enumerate_monomials(&weights, &all, basis.degree - d) {
            ech.insert(basis.coords(&p.mul_monomial(&m))?);
        }
    }
    Ok(ech)
}

/// `dim k[u,v]_delta - dim I_delta` for each requested degree.
pub fn hilbert_function(ideal: &XgIdeal, grading: Grading, degrees: &[usize]) -> Result<Vec<usize>> {
    degrees
        .iter()
        .map(|&d| {
            let basis = MonomialBasis::new(ideal.g, grading, d, false);
            Ok(basis.len() - slice_echelon(ideal, grading, &basis)?.rank())
        })
        .collect()
}

/// `(2d-1)(g-1)` for `d >= 2`, `g` for `d = 1`, `1` for `d = 0`.
pub fn ribbon_hilbert_value(g: usize, d: usize) -> usize {
    match d {
        0 => 1,
        1 => g,
        _ => (2 * d - 1) * (g - 1),
    }
}

/// u-only part of the weighted slices of degree `1..=cap`.
pub fn eliminate_v(ideal: &XgIdeal, cap: usize) -> Result<Vec<IdealSlice>> {
    let g = ideal.g;
    let mut out = Vec::new();
    for d in 1..=cap {
        let full = MonomialBasis::new(g, Grading::Weighted, d, false);
        // v-monomials get the smallest column indices, so reduced rows
        // led by a u-column have no v-terms
        let (vm, um): (Vec<Monomial>, Vec<Monomial>) = full
            .monomials()
            .iter()
            .cloned()
            .partition(|m| WPoly::<Rational>::v_degree_of(g, m) > 0);
        let nv = vm.len();
        let basis = MonomialBasis::from_sorted(g, Grading::Weighted, d, false, vm.into_iter().chain(um).collect());
        let ech = slice_echelon(ideal, Grading::Weighted, &basis)?;
        let polys: Vec<WPoly> =
            ech.reduced_basis().into_iter().filter(|r| r[0].0 >= nv).map(|r| basis.poly(&r)).collect();
        out.push(IdealSlice::span(g, d, &polys)?);
    }
    Ok(out)
}

/// The functional `lambda` whose ribbon has exactly these quadrics, if any.
pub fn match_lambda(quadrics: &IdealSlice) -> Result<Option<LambdaFunctional>> {
    let g = quadrics.g();
    if quadrics.degree() != 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: quadrics.degree() });
    }
    let n = g - 2;
    let mut rows = Vec::new();
    for x in quadrics.basis() {
        rows.extend(phi_d(x, 2)?.matrix.to_rows());
    }
    let candidates = if rows.is_empty() {
        RatMatrix::identity(n).to_rows()
    } else {
        RatMatrix::from_rows_with_cols(n, rows)?.kernel_basis()
    };
    for c in candidates {
        let lambda = LambdaFunctional::new(g, c)?.normalized();
        if &ribbon_slice(&lambda, g, 2)? == quadrics {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// Image of a weighted-homogeneous polynomial of degree `d` in the
/// trivial extension `O(d(g-1)) + eps O(d(g-1)-g-1)` of the split ribbon.
pub fn split_ribbon_eval(p: &WPoly, d: usize) -> Result<(BinaryForm, Option<BinaryForm>)> {
    let g = p.g();
    let n = g - 1;
    let mut a = BinaryForm::zero(d * n);
    let mut b = if d >= 2 { Some(BinaryForm::zero(d * n - g - 1)) } else { None };
    for (m, c) in p.terms() {
        if m.weighted_degree(&Grading::Weighted.weights(g)) != d {
            return Err(Error::NotHomogeneous);
        }
        let e = m.exps();
        let x0: usize = (0..g).map(|i| i * e[i] as usize).sum::<usize>() + (0..g - 2).map(|j| j * e[g + j] as usize).sum::<usize>();
        match WPoly::<Rational>::v_degree_of(g, m) {
            0 => a = a.add(&BinaryForm::monomial(x0, d * n, c.clone()))?,
            1 => {
                let bf = b.as_mut().expect("v-terms have degree >= 2");
                *bf = bf.add(&BinaryForm::monomial(x0, d * n - g - 1, c.clone()))?;
            }
            _ => {}
        }
    }
    Ok((a, b))
}

/// Kernel of `split_ribbon_eval` on weighted degree `d`, as the reduced
/// basis of coordinate vectors over the weighted monomial basis.
pub fn split_ribbon_eval_kernel(g: usize, d: usize) -> Result<Vec<crate::exact::SparseVec>> {
    check_genus(g)?;
    let basis = MonomialBasis::new(g, Grading::Weighted, d, false);
    let evals: Vec<Vec<Rational>> = basis
        .monomials()
        .iter()
        .map(|m| {
            let (a, b) = split_ribbon_eval(&WPoly::term(g, m.clone(), Rational::from_integer(1.into())), d)?;
            let mut col = a.coeffs().to_vec();
            if let Some(b) = b {
                col.extend(b.coeffs().iter().cloned());
            }
            Ok(col)
        })
        .collect::<Result<_>>()?;
    let mut kernel = Echelon::new();
    for k in RatMatrix::from_rows(evals)?.transpose().kernel_basis() {
        kernel.insert(crate::exact::dense_to_sparse(&k));
    }
    Ok(kernel.reduced_basis())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub g: usize,
    pub grading: Grading,
    pub computed: Vec<usize>,
    /// `1 + g t + (g-2) sum (2n-1) t^n`
    pub displayed_series: Vec<usize>,
    /// `1 + g t + (g-1) sum (2n-1) t^n`
    pub ribbon_cohomology: Vec<usize>,
    pub matches_displayed: bool,
    pub matches_ribbon_cohomology: bool,
}

/// Hilbert series of the split ribbon through degree `maxdeg`, compared
/// with the two closed forms.
pub fn split_ribbon_series(g: usize, grading: Grading, maxdeg: usize) -> Result<SeriesReport> {
    let ideal = split_ribbon_ideal(g)?;
    let degrees: Vec<usize> = (0..=maxdeg).collect();
    let computed = hilbert_function(&ideal, grading, &degrees)?;
    let closed = |c: usize| -> Vec<usize> {
        degrees.iter().map(|&n| if n < 2 { ribbon_hilbert_value(g, n) } else { c * (2 * n - 1) }).collect()
    };
    let displayed_series = closed(g - 2);
    let ribbon_cohomology = closed(g - 1);
    Ok(SeriesReport {
        g,
        grading,
        matches_displayed: computed == displayed_series,
        matches_ribbon_cohomology: computed == ribbon_cohomology,
        computed,
        displayed_series,
        ribbon_cohomology,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::rnc::ideal_slice;

    fn u(g: usize, i: usize) -> WPoly {
        WPoly::u(g, i)
    }

    fn v(g: usize, j: usize) -> WPoly {
        WPoly::v(g, j)
    }

    #[test]
    fn split_ribbon_shapes() {
        let i3 = split_ribbon_ideal(3).unwrap();
        assert_eq!(i3.group(Group::UU), &[u(3, 0).mul(&u(3, 2)).sub(&u(3, 1).mul(&u(3, 1)))]);
        assert!(i3.group(Group::UV).is_empty());
        assert_eq!(i3.group(Group::VV), &[v(3, 0).mul(&v(3, 0))]);
        let i4 = split_ribbon_ideal(4).unwrap();
        let uv = |i, j, k, l| u(4, i).mul(&v(4, j)).sub(&u(4, k).mul(&v(4, l)));
        assert_eq!(i4.group(Group::UU).len(), 3);
        assert_eq!(i4.group(Group::UV), &[uv(0, 1, 1, 0), uv(1, 1, 2, 0), uv(2, 1, 3, 0)]);
        assert_eq!(i4.group(Group::VV).len(), 3);
        assert_eq!(split_ribbon_ideal(5).unwrap().group(Group::VV).len(), 6);
        for g in 3..9 {
            let i = split_ribbon_ideal(g).unwrap();
            assert_eq!(i.group(Group::UU).len(), (g - 1) * (g - 2) / 2);
            assert_eq!(i.group(Group::UV).len(), (g - 1) * (g - 3));
        }
        assert_eq!(split_ribbon_ideal(2), Err(Error::InvalidGenus(2)));
    }

    #[test]
    fn uu_group_spans_the_quadrics() {
        for g in 3..7 {
            assert_eq!(IdealSlice::span(g, 2, &uu_representatives(g)).unwrap(), ideal_slice(g, 2).unwrap());
        }
    }

    #[test]
    fn hyperelliptic_model_examples() {
        let h = BinaryForm::from_coeffs((0..=8).map(|a| rat(if a == 0 || a == 8 { 1 } else { 0 })).collect());
        let m = hyperelliptic_model(3, &h).unwrap();
        let vv = v(3, 0).mul(&v(3, 0)).sub(&u(3, 2).mul(&u(3, 2)).mul(&u(3, 2)).mul(&u(3, 2))).sub(
            &u(3, 0).mul(&u(3, 0)).mul(&u(3, 0)).mul(&u(3, 0)),
        );
        assert_eq!(m.ideal.group(Group::VV), &[vv]);
        assert!(m.smooth);
        let z = hyperelliptic_model(4, &BinaryForm::zero(10)).unwrap();
        assert_eq!(z.ideal, split_ribbon_ideal(4).unwrap());
        assert!(!z.smooth);
        assert!(hyperelliptic_model(4, &BinaryForm::zero(8)).is_err());
        let h4 = BinaryForm::from_coeffs((0..=10).map(|a| rat(a * a - 3)).collect());
        for ((i, j), p) in vv_pairs(4).into_iter().zip(hyperelliptic_quartics(4, &h4).unwrap()) {
            let pulled = crate::poly::veronese_pullback(&p).unwrap();
            assert_eq!(pulled, h4.shift(i + j, 2 - i - j));
        }
    }

    #[test]
    fn canonical_ribbon_examples() {
        let g = 3;
        let c = rat(5);
        let i = canonical_ribbon_ideal(g, &[v(g, 0).scale(&c)]).unwrap();
        assert_eq!(i.group(Group::UU), &[u(g, 0).mul(&u(g, 2)).sub(&u(g, 1).mul(&u(g, 1))).sub(&v(g, 0).scale(&c))]);
        let zero = vec![WPoly::zero(5); 6];
        assert_eq!(canonical_ribbon_ideal(5, &zero).unwrap(), split_ribbon_ideal(5).unwrap());
        assert!(canonical_ribbon_ideal(4, &[u(4, 0), WPoly::zero(4), WPoly::zero(4)]).is_err());
    }

    #[test]
    fn ribbon_hilbert_function() {
        for g in 3..6 {
            let i = split_ribbon_ideal(g).unwrap();
            let hf = hilbert_function(&i, Grading::Weighted, &[0, 1, 2, 3, 4, 5]).unwrap();
            let expect: Vec<usize> = (0..6).map(|d| ribbon_hilbert_value(g, d)).collect();
            assert_eq!(hf, expect, "g={g}");
        }
    }

    #[test]
    fn admissible_ribbons_keep_the_hilbert_function() {
        for g in 3..6 {
            let lambda = LambdaFunctional::new(g, (0..g - 2).map(|a| rat(a as i64 * 2 - 1)).collect()).unwrap();
            let i = canonical_ribbon_ideal(g, &ribbon_ell(&lambda).unwrap()).unwrap();
            let hf = hilbert_function(&i, Grading::Weighted, &[2, 3, 4]).unwrap();
            assert_eq!(hf, vec![3 * (g - 1), 5 * (g - 1), 7 * (g - 1)]);
            let scaled = i.scale_v(&rat(-3));
            assert_eq!(hilbert_function(&scaled, Grading::Weighted, &[2, 3, 4]).unwrap(), hf);
        }
    }

    #[test]
    fn evaluation_oracle_matches_split_ribbon_slices() {
        for g in 3..6 {
            let ideal = split_ribbon_ideal(g).unwrap();
            for d in 1..=5 {
                let basis = MonomialBasis::new(g, Grading::Weighted, d, false);
                let ech = slice_echelon(&ideal, Grading::Weighted, &basis).unwrap();
                assert_eq!(split_ribbon_eval_kernel(g, d).unwrap(), ech.reduced_basis(), "g={g} d={d}");
            }
        }
    }

    #[test]
    fn elimination_on_the_genus_three_ribbon() {
        let g = 3;
        let conic = u(g, 0).mul(&u(g, 2)).sub(&u(g, 1).mul(&u(g, 1)));
        let i = canonical_ribbon_ideal(g, &[v(g, 0)]).unwrap();
        let slices = eliminate_v(&i, 4).unwrap();
        assert_eq!(slices[1].dim(), 0);
        assert_eq!(slices[3], IdealSlice::span(g, 4, &[conic.mul(&conic)]).unwrap());
        let split = eliminate_v(&split_ribbon_ideal(g).unwrap(), 2).unwrap();
        assert_eq!(split[1], ideal_slice(g, 2).unwrap());
    }

    #[test]
    fn lambda_recovered_from_elimination() {
        for g in [4, 5] {
            let lambda = LambdaFunctional::new(g, (0..g - 2).map(|a| rat(3 - a as i64 * 5)).collect()).unwrap();
            let i = canonical_ribbon_ideal(g, &ribbon_ell(&lambda).unwrap()).unwrap();
            let q = &eliminate_v(&i, 2).unwrap()[1];
            assert_eq!(match_lambda(q).unwrap(), Some(lambda.normalized()));
        }
    }

    #[test]
    fn series_report() {
        let r = split_ribbon_series(4, Grading::Weighted, 5).unwrap();
        assert!(r.matches_ribbon_cohomology);
        assert!(!r.matches_displayed);
    }

    #[test]
    fn json_round_trip() {
        let i = split_ribbon_ideal(4).unwrap();
        let v = i.to_json();
        assert_eq!(v["UV"].as_array().unwrap().len(), 3);
        assert_eq!(XgIdeal::from_json(&v).unwrap(), i);
    }
}
