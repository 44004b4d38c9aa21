use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use super::{Group, XgIdeal};
use crate::exact::{Echelon, Rational, SparseVec};
use crate::json::wpoly_to_json;
use crate::poly::{enumerate_monomials, Grading, Monomial, MonomialBasis, WPoly};

/// A syzygy `sum_e coeffs[e] * gen_e = 0` of weighted degree `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyRecord {
    pub degree: usize,
    pub coeffs: Vec<WPoly>,
    /// Coefficient pattern, e.g. `"u(vv)+v(uv)"`.
    pub shape: String,
    /// Index into the shape list it fits, if any.
    pub matches: Option<usize>,
}

impl SyzygyRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "shape": self.shape,
            "matches": self.matches,
            "coeffs": self.coeffs.iter().map(wpoly_to_json).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyDegree {
    pub degree: usize,
    pub total: usize,
    pub decomposable: usize,
    pub minimal: usize,
}

#[derive(Clone, Debug)]
pub struct SyzygyReport {
    pub cap: usize,
    pub degrees: Vec<SyzygyDegree>,
    pub minimal: Vec<SyzygyRecord>,
}

impl SyzygyReport {
    pub fn minimal_degrees(&self) -> Vec<usize> {
        self.degrees.iter().filter(|d| d.minimal > 0).map(|d| d.degree).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cap": self.cap,
            "degrees": self.degrees,
            "minimal_degrees": self.minimal_degrees(),
            "minimal": self.minimal.iter().map(SyzygyRecord::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Linear syzygy shapes of the split ribbon.
pub fn split_ribbon_shapes() -> Vec<&'static str> {
    vec!["u(uu)", "v(uu)+u(uv)", "v(uv)+u(vv)", "v(vv)"]
}

fn coeff_type(g: usize, m: &Monomial) -> String {
    let a = WPoly::<Rational>::u_degree_of(g, m);
    let b = WPoly::<Rational>::v_degree_of(g, m);
    if a + b == 0 {
        "1".into()
    } else {
        "u".repeat(a) + &"v".repeat(b)
    }
}

/// Pattern of a syzygy: the distinct `type(group)` items of its
/// coefficient monomials, and the first shape containing all of them.
pub fn classify(g: usize, groups: &[Group], coeffs: &[WPoly], shapes: &[&str]) -> (String, Option<usize>) {
    let mut items = BTreeSet::new();
    for (grp, c) in groups.iter().zip(coeffs) {
        for (m, _) in c.terms() {
            items.insert(format!("{}({})", coeff_type(g, m), grp.label()));
        }
    }
    let shape = items.iter().cloned().collect::<Vec<_>>().join("+");
    let matches = shapes.iter().position(|s| {
        let allowed: BTreeSet<&str> = s.split('+').collect();
        items.iter().all(|i| allowed.contains(i.as_str()))
    });
    (shape, matches)
}

/// Source space in one degree: pairs (generator, monomial multiplier).
struct Source {
    index: HashMap<(usize, Monomial), usize>,
    entries: Vec<(usize, Monomial)>,
}

/// Degreewise syzygies up to weighted degree `cap`. Each degree is split
/// into sectors by v-degree (or v-parity when the generators are not
/// v-homogeneous); decomposable syzygies are variables times syzygies of
/// lower degree, and the minimal ones are a canonical basis of the
/// quotient, normalized modulo the decomposables.
pub fn syzygies_by_degree(ideal: &XgIdeal, cap: usize) -> SyzygyReport {
    let g = ideal.g();
    let nv = 2 * g - 2;
    let weights = Grading::Weighted.weights(g);
    let all = vec![true; nv];
    let gens: Vec<(Group, &WPoly)> = ideal.generators().into_iter().filter(|(_, p)| !p.is_zero()).collect();
    let groups: Vec<Group> = gens.iter().map(|(grp, _)| *grp).collect();
    let v_homogeneous = gens.iter().all(|(_, p)| {
        let ks: BTreeSet<usize> = p.terms().map(|(m, _)| WPoly::<Rational>::v_degree_of(g, m)).collect();
        ks.len() <= 1
    });
    // sector of a generator: its v-degree, or v-parity
    let gen_sector: Vec<usize> = gens
        .iter()
        .map(|(_, p)| {
            let k = p.terms().next().map(|(m, _)| WPoly::<Rational>::v_degree_of(g, m)).unwrap_or(0);
            if v_homogeneous {
                k
            } else {
                k % 2
            }
        })
        .collect();
    let sector_of = |e: usize, m: &Monomial| {
        let s = gen_sector[e] + WPoly::<Rational>::v_degree_of(g, m);
        if v_homogeneous {
            s
        } else {
            s % 2
        }
    };

    // syzygy bases per degree, as coefficient vectors over generators
    let mut bases: Vec<Vec<Vec<WPoly>>> = Vec::new();
    let mut degrees = Vec::new();
    let mut minimal = Vec::new();

    for d in 0..=cap {
        let mut src = Source { index: HashMap::new(), entries: Vec::new() };
        for (e, (grp, _)) in gens.iter().enumerate() {
            if grp.degree() <= d {
                for m in enumerate_monomials(&weights, &all, d - grp.degree()) {
                    src.index.insert((e, m.clone()), src.entries.len());
                    src.entries.push((e, m));
                }
            }
        }
        let to_coeffs = |v: &SparseVec, src: &Source| -> Vec<WPoly> {
            let mut c = vec![WPoly::zero(g); gens.len()];
            for (i, x) in v {
                let (e, m) = &src.entries[*i];
                c[*e].add_term(m.clone(), x.clone());
            }
            c
        };
        let from_coeffs = |c: &[WPoly], src: &Source| -> SparseVec {
            let mut v: SparseVec =
                c.iter().enumerate().flat_map(|(e, p)| p.terms().map(move |(m, x)| (src.index[&(e, m.clone())], x.clone()))).collect();
            v.sort_by_key(|(i, _)| *i);
            v
        };

        let target = MonomialBasis::new(g, Grading::Weighted, d, false);
        let mut by_sector: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, (e, m)) in src.entries.iter().enumerate() {
            by_sector.entry(sector_of(*e, m)).or_default().push(i);
        }
        let mut kernel = Vec::new();
        let mut decomposable = Echelon::new();
        for (dd, syz) in bases.iter().enumerate().flat_map(|(dd, b)| b.iter().map(move |s| (dd, s))) {
            for x in 0..nv {
                if dd + weights[x] == d {
                    let xm = Monomial::var(nv, x);
                    let shifted: Vec<WPoly> = syz.iter().map(|c| c.mul_monomial(&xm)).collect();
                    decomposable.insert(from_coeffs(&shifted, &src));
                }
            }
        }
        let mut minimal_here = Echelon::new();
        for idxs in by_sector.values() {
            let mut ech = Echelon::new();
            let mut sector_kernel = Echelon::new();
            for &i in idxs {
                let (e, m) = &src.entries[i];
                let row = target.coords(&gens[*e].1.mul_monomial(m)).expect("products stay homogeneous");
                if let Some(rel) = ech.insert_tagged(row, vec![(i, Rational::from_integer(1.into()))]) {
                    sector_kernel.insert(rel);
                }
            }
            for k in sector_kernel.reduced_basis() {
                kernel.push(k.clone());
                let nf = decomposable.normal_form(k);
                if !nf.is_empty() {
                    minimal_here.insert(nf);
                }
            }
        }
        let mut new_minimal: Vec<SparseVec> = minimal_here.reduced_basis();
        for v in &mut new_minimal {
            *v = decomposable.normal_form(std::mem::take(v));
        }
        let kernel_coeffs: Vec<Vec<WPoly>> = kernel.iter().map(|k| to_coeffs(k, &src)).collect();
        degrees.push(SyzygyDegree {
            degree: d,
            total: kernel.len(),
            decomposable: decomposable.rank(),
            minimal: new_minimal.len(),
        });
        for v in &new_minimal {
            let coeffs = to_coeffs(v, &src);
            let (shape, matches) = classify(g, &groups, &coeffs, &split_ribbon_shapes());
            let mut full = vec![WPoly::zero(g); ideal.len()];
            let mut k = 0;
            for (e, (_, p)) in ideal.generators().iter().enumerate() {
                if !p.is_zero() {
                    full[e] = coeffs[k].clone();
                    k += 1;
                }
            }
            minimal.push(SyzygyRecord { degree: d, coeffs: full, shape, matches });
        }
        bases.push(kernel_coeffs);
    }
    SyzygyReport { cap, degrees, minimal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xg::split_ribbon_ideal;

    fn check_records(ideal: &XgIdeal, report: &SyzygyReport) {
        let g = ideal.g();
        for r in &report.minimal {
            let sum = r
                .coeffs
                .iter()
                .zip(ideal.generators())
                .fold(WPoly::zero(g), |acc, (c, (_, p))| acc.add(&c.mul(p)));
            assert!(sum.is_zero(), "not a syzygy: {}", r.shape);
        }
    }

    #[test]
    fn twisted_cubic_has_two_linear_syzygies() {
        let g = 4;
        let quadrics = crate::rnc::ideal_slice(g, 2).unwrap().basis().to_vec();
        let i = XgIdeal::new(g, quadrics, vec![], vec![]).unwrap();
        let r = syzygies_by_degree(&i, 4);
        assert_eq!(r.degrees[3].minimal, 2);
        assert_eq!(r.degrees[4].minimal, 0);
        assert!(r.minimal.iter().all(|s| s.shape == "u(uu)"));
        check_records(&i, &r);
    }

    #[test]
    fn genus_three_split_ribbon_is_a_complete_intersection() {
        let i = split_ribbon_ideal(3).unwrap();
        let r = syzygies_by_degree(&i, 6);
        assert_eq!(r.minimal_degrees(), vec![6]);
        assert_eq!(r.minimal[0].shape, "uu(vv)+vv(uu)");
        check_records(&i, &r);
    }

    #[test]
    fn classification() {
        let g = 4;
        let u = WPoly::u(g, 0);
        let v = WPoly::v(g, 1);
        let shapes = split_ribbon_shapes();
        let (s, m) = classify(g, &[Group::UU, Group::UV], &[v.clone(), u.clone()], &shapes);
        assert_eq!(s, "u(uv)+v(uu)");
        assert_eq!(m, Some(1));
        let (_, m) = classify(g, &[Group::UU], &[u.mul(&u)], &shapes);
        assert_eq!(m, None);
    }
}
