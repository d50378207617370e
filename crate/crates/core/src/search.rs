//! Exhaustive enumeration of weak stabilizer codes and a probe for
//! Clifford codes with `|G| = |L|·|S|` but non-normal `S`.

use std::collections::HashMap;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cocycle::PhaseFunction;
use crate::codes::{self, classify, code_representation, CodeReport, CodeSpace};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{CMat, C64};
use crate::models::ProjectiveErrorModel;
use crate::phase::Phase;
use crate::projrep::hom_space;

const COMMUTANT_SEED: u64 = 0xc0de;
/// Eigenvalues of the random commutant element closer than this are merged.
const EIG_GAP: f64 = 1e-6;

/// A pair `(H, f)` together with the formula dimension of `V^St(H, f)`.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub subgroup: Subgroup,
    pub phase: PhaseFunction,
    pub formula_dim: usize,
}

#[derive(Clone, Debug)]
pub struct EnumeratedCode {
    pub subgroup: Subgroup,
    pub phase: PhaseFunction,
    pub code: CodeSpace,
    pub formula_dim: usize,
}

fn check_caps(model: &ProjectiveErrorModel, caps: &Caps) -> Result<()> {
    let order = model.group().order();
    if order > caps.max_order {
        return Err(Error::CapExceeded {
            what: "group order",
            value: order,
            cap: caps.max_order,
        });
    }
    if model.dim() > caps.max_search_dim {
        return Err(Error::CapExceeded {
            what: "ambient dimension",
            value: model.dim(),
            cap: caps.max_search_dim,
        });
    }
    Ok(())
}

/// Every `(H, f₀·χ)` with `H` a subgroup on which the cocycle trivialises
/// as `δf₀` and `χ` a linear character of `H`. Any `f` with a nonzero code
/// is among these, since `f/f₀` is then a homomorphism.
pub fn candidates(model: &ProjectiveErrorModel, caps: &Caps) -> Result<Vec<Candidate>> {
    check_caps(model, caps)?;
    let g = model.group();
    let mut out = Vec::new();
    for h in g.all_subgroups(caps)? {
        let Some(f0) = model.cocycle().restrict(&h).find_trivializing_phase() else {
            continue;
        };
        for chi in codes::linear_characters(&h.as_group(g)) {
            let values: Vec<Phase> = f0.iter().zip(&chi).map(|(&a, &b)| a * b).collect();
            let phase = PhaseFunction::new(h.clone(), values)?;
            let formula_dim = codes::code_dimension_formula(model, &h, &phase)?;
            out.push(Candidate {
                subgroup: h.clone(),
                phase,
                formula_dim,
            });
        }
    }
    Ok(out)
}

fn projector_key(p: &CMat) -> Vec<(i64, i64)> {
    p.iter()
        .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
        .collect()
}

/// Distinct nonzero weak stabilizer codes, in order of first appearance
/// (subgroups by size then members, characters in enumeration order).
pub fn enumerate_weak_stabilizer_codes(model: &ProjectiveErrorModel, caps: &Caps) -> Result<Vec<EnumeratedCode>> {
    let mut out: Vec<EnumeratedCode> = Vec::new();
    let mut seen: HashMap<Vec<(i64, i64)>, Vec<usize>> = HashMap::new();
    for cand in candidates(model, caps)? {
        if cand.formula_dim == 0 {
            continue;
        }
        let Some(code) = codes::weak_stabilizer_code(model, &cand.subgroup, &cand.phase)? else {
            continue;
        };
        let bucket = seen.entry(projector_key(code.projector())).or_default();
        if bucket.iter().any(|&i| out[i].code.same_space(&code)) {
            continue;
        }
        bucket.push(out.len());
        out.push(EnumeratedCode {
            subgroup: cand.subgroup,
            phase: cand.phase,
            code,
            formula_dim: cand.formula_dim,
        });
    }
    Ok(out)
}

/// Irreducible invariant subspaces of `Res_L π` carrying constituents of
/// multiplicity one, found as eigenspaces of a random hermitian element of
/// the commutant.
fn multiplicity_free_constituents(model: &ProjectiveErrorModel, l: &Subgroup, rng: &mut ChaCha8Rng) -> Result<Vec<CodeSpace>> {
    let res = model.rep().restrict(l);
    let commutant = hom_space(&res, &res)?;
    let d = model.dim();
    let mut herm = CMat::zeros(d, d);
    for t in &commutant {
        let r: f64 = rng.random_range(-1.0..1.0);
        herm += (t + t.adjoint()) * C64::from(r);
    }
    let eig = herm.symmetric_eigen();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut spaces = Vec::new();
    let mut start = 0;
    while start < d {
        let mut end = start + 1;
        while end < d && eig.eigenvalues[order[end]] - eig.eigenvalues[order[end - 1]] < EIG_GAP {
            end += 1;
        }
        let mut basis = CMat::zeros(d, end - start);
        for (j, &i) in order[start..end].iter().enumerate() {
            basis.set_column(j, &eig.eigenvectors.column(i));
        }
        let w = CodeSpace::from_spanning(&basis)?;
        let rho = code_representation(model, l, &w)?;
        if rho.is_irreducible() && hom_space(&rho, &res)?.len() == 1 {
            spaces.push(w);
        }
        start = end;
    }
    Ok(spaces)
}

/// A Clifford code found by the scan, with its subgroup `L` and report.
#[derive(Clone, Debug)]
pub struct CliffordHit {
    pub l: Subgroup,
    pub code: CodeSpace,
    pub report: CodeReport,
}

/// Every Clifford code `T(V_ρ)` over subgroups `L` with `[G:L]·dim ρ = dim V`
/// and `ρ` a constituent of `Res_L π` of multiplicity one, deduplicated by
/// subspace and classified.
pub fn clifford_codes(model: &ProjectiveErrorModel, caps: &Caps) -> Result<Vec<CliffordHit>> {
    check_caps(model, caps)?;
    let g = model.group();
    let d = model.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(COMMUTANT_SEED);
    let mut out: Vec<CliffordHit> = Vec::new();
    for l in g.all_subgroups(caps)? {
        let index = g.order() / l.order();
        if d % index != 0 {
            continue;
        }
        for w in multiplicity_free_constituents(model, &l, &mut rng)? {
            if w.dim() * index != d || out.iter().any(|hit| hit.code.same_space(&w)) {
                continue;
            }
            let report = classify(model, &w, caps)?;
            out.push(CliffordHit { l: l.clone(), code: w, report });
        }
    }
    Ok(out)
}

/// Clifford codes with `|G| = |L|·|S|` whose stabilizer is not normal.
pub fn q3_probe(model: &ProjectiveErrorModel, caps: &Caps) -> Result<Vec<CodeReport>> {
    if !model.is_central_type() {
        return Err(Error::Precondition("the probe needs a model of central type".into()));
    }
    let g = model.group();
    let mut hits = Vec::new();
    for hit in clifford_codes(model, caps)? {
        let r = hit.report;
        if !r.flags.is_clifford {
            return Err(Error::Precondition("scanned code failed the Clifford check".into()));
        }
        if r.logical.len() * r.stabilizer.len() != g.order() {
            continue;
        }
        let s = g.subgroup(r.stabilizer.clone())?;
        if !g.is_normal(&s) {
            hits.push(r);
        }
    }
    Ok(hits)
}

/// One JSON object per report, newline separated.
pub fn write_json_lines<W: Write>(out: &mut W, reports: &[CodeReport]) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    Ok(())
}

/// Fixed-width summary, one row per report.
pub fn summary_table(reports: &[CodeReport]) -> String {
    let mut s = format!(
        "{:>4} {:>5} {:>4} {:>4} {:>5} {:>4} {:>4} {:>4}\n",
        "#", "dim", "|L|", "|S|", "|D|", "stab", "weak", "cliff"
    );
    let yn = |b: bool| if b { "y" } else { "n" };
    for (i, r) in reports.iter().enumerate() {
        s.push_str(&format!(
            "{:>4} {:>5} {:>4} {:>4} {:>5} {:>4} {:>4} {:>4}\n",
            i,
            r.code_dim,
            r.logical.len(),
            r.stabilizer.len(),
            r.detectable.len(),
            yn(r.flags.is_stabilizer),
            yn(r.flags.is_weak_stabilizer),
            yn(r.flags.is_clifford)
        ));
    }
    s
}

/// `|formula − nullspace|` mismatches over all candidates of a model.
pub fn dimension_mismatches(model: &ProjectiveErrorModel, caps: &Caps) -> Result<Vec<Candidate>> {
    let mut bad = Vec::new();
    for cand in candidates(model, caps)? {
        let actual = codes::weak_stabilizer_code(model, &cand.subgroup, &cand.phase)?.map_or(0, |w| w.dim());
        if actual != cand.formula_dim {
            bad.push(cand);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{family_c2_x_d2n, gen_pauli_model, pauli_model};

    #[test]
    fn one_qubit_codes() {
        let m = pauli_model(1, &Caps::default()).unwrap();
        let codes = enumerate_weak_stabilizer_codes(&m, &Caps::default()).unwrap();
        assert_eq!(codes.len(), 7);
        assert_eq!(codes[0].code.dim(), 2);
        assert!(codes[1..].iter().all(|c| c.code.dim() == 1));
    }

    #[test]
    fn trivial_model() {
        let m = gen_pauli_model(1, &Caps::default()).unwrap();
        let codes = enumerate_weak_stabilizer_codes(&m, &Caps::default()).unwrap();
        assert_eq!(codes.len(), 1);
        assert_eq!(codes[0].code.dim(), 1);
    }

    #[test]
    fn qutrit_dimensions() {
        let m = gen_pauli_model(3, &Caps::default()).unwrap();
        for c in enumerate_weak_stabilizer_codes(&m, &Caps::default()).unwrap() {
            assert_eq!(c.code.dim() * c.subgroup.order(), 3);
            assert_eq!(c.code.dim(), c.formula_dim);
        }
        assert!(dimension_mismatches(&m, &Caps::default()).unwrap().is_empty());
    }

    #[test]
    fn caps_are_enforced() {
        let m = gen_pauli_model(3, &Caps::default()).unwrap();
        let caps = Caps {
            max_search_dim: 2,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_weak_stabilizer_codes(&m, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn q3_probe_small_models() {
        let m = gen_pauli_model(2, &Caps::default()).unwrap();
        assert!(q3_probe(&m, &Caps::default()).unwrap().is_empty());
        let fam = family_c2_x_d2n(2, &Caps::default()).unwrap();
        let all = clifford_codes(&fam.model, &Caps::default()).unwrap();
        let hit = all.iter().find(|h| h.l == fam.l).expect("family code is scanned");
        assert_eq!(hit.report.logical.len() * hit.report.stabilizer.len(), 8);
        let hits = q3_probe(&fam.model, &Caps::default()).unwrap();
        assert!(hits.iter().all(|r| r.logical != fam.l.members()));
        // any hit must not be cut out by a normal subgroup with any phase
        let g = fam.model.group();
        let normal_codes: Vec<CodeSpace> = candidates(&fam.model, &Caps::default())
            .unwrap()
            .into_iter()
            .filter(|c| g.is_normal(&c.subgroup))
            .filter_map(|c| codes::weak_stabilizer_code(&fam.model, &c.subgroup, &c.phase).unwrap())
            .collect();
        for r in &hits {
            assert!(!r.flags.is_stabilizer && r.flags.is_weak_stabilizer && r.flags.is_clifford);
        }
        let mut checked = 0;
        for h in &all {
            let s = g.subgroup(h.report.stabilizer.clone()).unwrap();
            if h.report.logical.len() * s.order() == g.order() && !g.is_normal(&s) {
                assert!(normal_codes.iter().all(|w| !w.same_space(&h.code)));
                checked += 1;
            }
        }
        assert_eq!(checked, hits.len());
    }

    #[test]
    fn json_lines_and_table() {
        let m = pauli_model(1, &Caps::default()).unwrap();
        let reports: Vec<CodeReport> = enumerate_weak_stabilizer_codes(&m, &Caps::default())
            .unwrap()
            .iter()
            .map(|c| classify(&m, &c.code, &Caps::default()).unwrap())
            .collect();
        let mut buf = Vec::new();
        write_json_lines(&mut buf, &reports).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 7);
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v["flags"]["is_weak_stabilizer"].as_bool().unwrap());
        }
        assert_eq!(summary_table(&reports).lines().count(), 8);
    }
}
