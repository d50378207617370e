//! Stabilizer, weak stabilizer and Clifford codes, and their classification.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cocycle::PhaseFunction;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{self, CMat, C64, TOL_INT, TOL_SCAN, TOL_STRUCT};
use crate::models::{product_model, ProjectiveErrorModel};
use crate::phase::Phase;
use crate::projrep::{hom_space, inertia_group, ProjectiveRep};

/// A nonzero subspace given by an orthonormal basis (as columns).
#[derive(Clone, Debug)]
pub struct CodeSpace {
    basis: CMat,
    projector: CMat,
}

impl CodeSpace {
    pub fn new(basis: CMat) -> Result<Self> {
        let k = basis.ncols();
        if k == 0 || basis.nrows() == 0 {
            return Err(Error::InvalidCode("empty basis".into()));
        }
        let gram_defect = linalg::frob(&(basis.adjoint() * &basis - linalg::identity(k)));
        if !(gram_defect < TOL_STRUCT) {
            return Err(Error::InvalidCode(format!("columns are not orthonormal ({gram_defect:.3e})")));
        }
        let projector = &basis * basis.adjoint();
        Ok(CodeSpace { basis, projector })
    }

    /// Orthonormalises the column span of `vectors`.
    pub fn from_spanning(vectors: &CMat) -> Result<Self> {
        Self::new(linalg::column_space(vectors))
    }

    pub fn whole(dim: usize) -> Self {
        Self::new(linalg::identity(dim)).expect("identity is orthonormal")
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &CMat {
        &self.basis
    }

    pub fn projector(&self) -> &CMat {
        &self.projector
    }

    /// Projector distance below `TOL_INT`.
    pub fn same_space(&self, other: &CodeSpace) -> bool {
        self.ambient_dim() == other.ambient_dim() && linalg::frob(&(&self.projector - &other.projector)) < TOL_INT
    }

    pub fn tensor(&self, other: &CodeSpace) -> CodeSpace {
        Self::new(linalg::kron(&self.basis, &other.basis)).expect("tensor of orthonormal bases")
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            ambient_dim: self.ambient_dim(),
            basis: self
                .basis
                .column_iter()
                .map(|col| col.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &CodeJson) -> Result<Self> {
        let d = json.ambient_dim;
        if json.basis.is_empty() {
            return Err(Error::InvalidCode("empty basis".into()));
        }
        if let Some(col) = json.basis.iter().find(|col| col.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: col.len() });
        }
        let mut m = CMat::zeros(d, json.basis.len());
        for (j, col) in json.basis.iter().enumerate() {
            for (i, p) in col.iter().enumerate() {
                if !p[0].is_finite() || !p[1].is_finite() {
                    return Err(Error::InvalidCode("entries must be finite".into()));
                }
                m[(i, j)] = linalg::c(p[0], p[1]);
            }
        }
        Self::new(m)
    }
}

/// Code file schema: basis columns as `[re, im]` arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeJson {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<[f64; 2]>>,
}

fn check_domain(f: &PhaseFunction, h: &Subgroup) -> Result<()> {
    if f.domain() != h {
        return Err(Error::Precondition("phase function is not defined on the subgroup".into()));
    }
    Ok(())
}

fn check_code(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<()> {
    if w.ambient_dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            got: w.ambient_dim(),
        });
    }
    Ok(())
}

fn joint_eigenspace(model: &ProjectiveErrorModel, elements: &[usize], f: &PhaseFunction) -> CMat {
    let d = model.dim();
    let mut stacked = CMat::zeros(d * elements.len().max(1), d);
    for (k, &x) in elements.iter().enumerate() {
        let phase = f.at(x).expect("element of domain").to_complex();
        let block = model.matrix(x) - linalg::identity(d) * phase;
        stacked.view_mut((k * d, 0), (d, d)).copy_from(&block);
    }
    linalg::nullspace(&stacked)
}

/// `V^St = {ξ : π(x)ξ = f(x)ξ for all x ∈ H}`, or `None` when zero.
pub fn weak_stabilizer_code(model: &ProjectiveErrorModel, h: &Subgroup, f: &PhaseFunction) -> Result<Option<CodeSpace>> {
    check_domain(f, h)?;
    let g = model.group();
    let gens = g.generators(h);
    let mut basis = joint_eigenspace(model, &gens, f);
    let holds_on_h = |b: &CMat| {
        h.members().iter().all(|&x| {
            let phase = f.at(x).expect("member").to_complex();
            linalg::frob(&(model.matrix(x) * b - b * phase)) < TOL_SCAN * (1.0 + b.ncols() as f64)
        })
    };
    if basis.ncols() > 0 && !holds_on_h(&basis) {
        // f is not multiplicative along the generators; impose every element
        basis = joint_eigenspace(model, h.members(), f);
    }
    if basis.ncols() == 0 {
        return Ok(None);
    }
    if !f.coboundary(g).same_as(&model.cocycle().restrict(h)) {
        return Err(Error::CocycleMismatch);
    }
    Ok(Some(CodeSpace::new(basis)?))
}

/// As [`weak_stabilizer_code`], for a normal subgroup.
pub fn stabilizer_code(model: &ProjectiveErrorModel, n: &Subgroup, f: &PhaseFunction) -> Result<Option<CodeSpace>> {
    if !model.group().is_normal(n) {
        return Err(Error::NotNormal);
    }
    weak_stabilizer_code(model, n, f)
}

/// Every homomorphism `G → T`, as phase tables indexed by element, in a
/// fixed order (lexicographic in the values on a greedy generating set).
pub fn linear_characters(g: &FiniteGroup) -> Vec<Vec<Phase>> {
    let gens = g.generators(&g.whole());
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let vals: Vec<Phase> = choice
            .iter()
            .zip(&orders)
            .map(|(&k, &o)| Phase::root_of_unity(k as i64, o as u64))
            .collect();
        if let Some(chi) = extend_character(g, &gens, &vals) {
            out.push(chi);
        }
        // odometer, last generator fastest
        let mut i = gens.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < orders[i] {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn extend_character(g: &FiniteGroup, gens: &[usize], vals: &[Phase]) -> Option<Vec<Phase>> {
    let mut chi: Vec<Option<Phase>> = vec![None; g.order()];
    chi[g.identity()] = Some(Phase::ONE);
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let cx = chi[x].expect("assigned");
        for (&s, &v) in gens.iter().zip(vals) {
            let y = g.mul(x, s);
            let cy = cx * v;
            match chi[y] {
                None => {
                    chi[y] = Some(cy);
                    queue.push_back(y);
                }
                Some(existing) if existing != cy => return None,
                Some(_) => {}
            }
        }
    }
    chi.into_iter().collect()
}

/// Some `f` on an abelian `H` with `V^St(H, f) ≠ 0`, if one exists.
///
/// Candidates are `f₀·χ` where `δf₀ = Res σ` and `χ` runs over the linear
/// characters of `H` in the order of [`linear_characters`]; the first with
/// positive multiplicity is returned.
pub fn existence_phase(model: &ProjectiveErrorModel, h: &Subgroup) -> Result<Option<PhaseFunction>> {
    let g = model.group();
    if !h.is_abelian(g) {
        return Ok(None);
    }
    let Some(f0) = model.cocycle().restrict(h).find_trivializing_phase() else {
        return Ok(None);
    };
    let sub = h.as_group(g);
    for chi in linear_characters(&sub) {
        let values: Vec<Phase> = f0.iter().zip(&chi).map(|(&a, &b)| a * b).collect();
        let f = PhaseFunction::new(h.clone(), values)?;
        if code_dimension_formula(model, h, &f)? > 0 {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// `(1/|H|) Σ_{x∈H} conj(f(x)) χ_π(x)`, snapped to an integer.
pub fn code_dimension_formula(model: &ProjectiveErrorModel, h: &Subgroup, f: &PhaseFunction) -> Result<usize> {
    check_domain(f, h)?;
    let sum: C64 = h
        .members()
        .iter()
        .zip(f.values())
        .map(|(&x, p)| p.conj().to_complex() * model.matrix(x).trace())
        .sum();
    let value = sum / h.order() as f64;
    if value.im.abs() > TOL_INT {
        return Err(Error::SnapFailure(value.im));
    }
    linalg::snap_count(value.re, TOL_INT)
}

/// `W = T(V_ρ)` for the intertwiner `T ∈ Hom_L(ρ, Res π)`, unique up to
/// scale.
pub fn clifford_code(model: &ProjectiveErrorModel, l: &Subgroup, rho: &ProjectiveRep) -> Result<CodeSpace> {
    let g = model.group();
    let sub = l.as_group(g);
    if rho.group().order() != l.order() || !(Arc::ptr_eq(rho.group(), &sub) || **rho.group() == *sub) {
        return Err(Error::Precondition("ρ is not a representation of L".into()));
    }
    let chi = rho.character();
    let norm = chi.inner_product(&chi)?.re;
    if (norm - 1.0).abs() >= TOL_INT {
        return Err(Error::NotIrreducible(norm));
    }
    let res = model.rep().restrict(l);
    if !rho.cocycle().same_as(res.cocycle()) {
        return Err(Error::CocycleMismatch);
    }
    let index = g.order() / l.order();
    if index * rho.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            got: index * rho.dim(),
        });
    }
    let homs = hom_space(rho, &res)?;
    if homs.len() != 1 {
        return Err(Error::Precondition(format!("dim Hom_L(ρ, Res π) = {}, expected 1", homs.len())));
    }
    let w = CodeSpace::from_spanning(&homs[0])?;
    if w.dim() != rho.dim() {
        return Err(Error::Precondition("intertwiner is not injective".into()));
    }
    Ok(w)
}

/// Per-element data of `P π(x) P` for a code with projector `P`.
#[derive(Clone, Copy, Debug)]
pub struct ElementScan {
    pub logical: bool,
    /// `c` with `P π(x) P = c P`, when such a scalar exists.
    pub detect: Option<C64>,
}

pub fn scan(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<Vec<ElementScan>> {
    check_code(model, w)?;
    let p = w.projector();
    let k = w.dim() as f64;
    Ok(model
        .group()
        .elements()
        .map(|x| {
            let pi = model.matrix(x);
            let pip = p * pi;
            let logical = linalg::frob(&(&pip - pi * p)) < TOL_SCAN;
            let compressed = &pip * p;
            let c = compressed.trace() / k;
            let detect = (linalg::frob(&(compressed - p * c)) < TOL_SCAN).then_some(c);
            ElementScan { logical, detect }
        })
        .collect())
}

/// `L(W) = {x : P π(x) = π(x) P}`.
pub fn logical_group(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<Subgroup> {
    let s = scan(model, w)?;
    model.group().subgroup((0..s.len()).filter(|&x| s[x].logical).collect())
}

/// A stabilizer phase `f̃(x)`, exact when it snaps to a root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilizerPhase {
    pub element: usize,
    pub exact: Option<Phase>,
    pub value: [f64; 2],
}

fn is_stabilizing(c: Option<C64>) -> bool {
    c.is_some_and(|c| (c.norm() - 1.0).abs() < TOL_SCAN)
}

/// `S(W) = {x : P π(x) P = f̃(x) P, |f̃(x)| = 1}` with the phases `f̃`.
pub fn stabilizer_group(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<(Subgroup, Vec<StabilizerPhase>)> {
    let s = scan(model, w)?;
    stabilizer_from_scan(model.group(), &s)
}

fn stabilizer_from_scan(g: &FiniteGroup, s: &[ElementScan]) -> Result<(Subgroup, Vec<StabilizerPhase>)> {
    let members: Vec<usize> = (0..s.len()).filter(|&x| is_stabilizing(s[x].detect)).collect();
    let phases = members
        .iter()
        .map(|&x| {
            let c = s[x].detect.expect("stabilizing");
            StabilizerPhase {
                element: x,
                exact: Phase::snap(c, 4 * g.order() as u64, TOL_SCAN),
                value: [c.re, c.im],
            }
        })
        .collect();
    Ok((g.subgroup(members)?, phases))
}

/// The exact stabilizer phase function, if every phase snapped.
pub fn exact_phase_function(s: &Subgroup, phases: &[StabilizerPhase]) -> Option<PhaseFunction> {
    let values: Option<Vec<Phase>> = phases.iter().map(|p| p.exact).collect();
    PhaseFunction::new(s.clone(), values?).ok()
}

/// `D(W)`: elements with `P π(x) P ∈ C·P`, with their scalars.
pub fn detectable_set(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<Vec<(usize, C64)>> {
    let s = scan(model, w)?;
    Ok(s.iter().enumerate().filter_map(|(x, e)| e.detect.map(|c| (x, c))).collect())
}

/// `None` when every `π(x)` maps `W` into `W` or into `W⊥`; otherwise the
/// first element doing neither.
pub fn partition_violation(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<Option<usize>> {
    check_code(model, w)?;
    let p = w.projector();
    let q = linalg::identity(model.dim()) - p;
    Ok(model.group().elements().find(|&x| {
        let pix = model.matrix(x) * p;
        linalg::frob(&(&q * &pix)) >= TOL_SCAN && linalg::frob(&(p * &pix)) >= TOL_SCAN
    }))
}

pub fn is_partitioning(model: &ProjectiveErrorModel, w: &CodeSpace) -> Result<bool> {
    Ok(partition_violation(model, w)?.is_none())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub is_stabilizer: bool,
    pub is_weak_stabilizer: bool,
    pub is_clifford: bool,
    pub is_partitioning: bool,
}

/// Why a flag is false.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilizer: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_stabilizer: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clifford: Option<String>,
    /// An element mapping `W` neither into `W` nor into `W⊥`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partitioning: Option<usize>,
}

/// The `|G| = |L|·|S|` criterion against the direct reconstruction test,
/// recorded for Clifford codes in models with `|G| = (dim V)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralTypeCheck {
    pub criterion: bool,
    pub direct: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeReport {
    pub group_order: usize,
    pub ambient_dim: usize,
    pub code_dim: usize,
    pub logical: Vec<usize>,
    pub stabilizer: Vec<usize>,
    pub stabilizer_phase: Vec<StabilizerPhase>,
    pub detectable: Vec<usize>,
    pub flags: Flags,
    pub witnesses: Witnesses,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_subgroup: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_type: Option<CentralTypeCheck>,
}

/// The restriction of `π` to `L` acting on `W`, as a representation of
/// `l.as_group(G)`; requires `W` to be `L`-invariant.
pub fn code_representation(model: &ProjectiveErrorModel, l: &Subgroup, w: &CodeSpace) -> Result<ProjectiveRep> {
    let b = w.basis();
    let matrices = l.members().iter().map(|&x| b.adjoint() * model.matrix(x) * b).collect();
    ProjectiveRep::new(l.as_group(model.group()), matrices)
}

fn clifford_test(model: &ProjectiveErrorModel, l: &Subgroup, w: &CodeSpace) -> std::result::Result<(), String> {
    let g = model.group();
    let (lsize, gsize, d, k) = (l.order(), g.order(), model.dim(), w.dim());
    if lsize * d != k * gsize {
        return Err(format!("|L|·dim V = {} but dim W·|G| = {}", lsize * d, k * gsize));
    }
    let rho = code_representation(model, l, w).map_err(|e| format!("L does not act on W: {e}"))?;
    if !rho.is_irreducible() {
        return Err("L acts reducibly on W".into());
    }
    let homs = hom_space(&rho, &model.rep().restrict(l)).map_err(|e| e.to_string())?;
    if homs.len() != 1 {
        return Err(format!("dim Hom_L(W, Res π) = {}", homs.len()));
    }
    if (gsize / lsize) * k != d {
        return Err("[G:L]·dim W differs from dim V".into());
    }
    Ok(())
}

/// Computes `L`, `S`, `f̃`, `D` and every classification flag.
pub fn classify(model: &ProjectiveErrorModel, w: &CodeSpace, caps: &Caps) -> Result<CodeReport> {
    let g = model.group();
    let s = scan(model, w)?;
    let l = g.subgroup((0..s.len()).filter(|&x| s[x].logical).collect())?;
    let (stab, phases) = stabilizer_from_scan(g, &s)?;
    let detectable: Vec<usize> = (0..s.len()).filter(|&x| s[x].detect.is_some()).collect();
    let mut witnesses = Witnesses::default();

    let partition = partition_violation(model, w)?;
    witnesses.partitioning = partition;
    if partition.is_none() {
        let expected: Vec<usize> = g.elements().filter(|&x| !l.contains(x) || stab.contains(x)).collect();
        if expected != detectable {
            return Err(Error::Precondition("detectable set differs from (G∖L) ∪ S on a partitioning code".into()));
        }
    }

    let clifford = clifford_test(model, &l, w);
    if let Err(reason) = &clifford {
        witnesses.clifford = Some(reason.clone());
    }
    let is_clifford = clifford.is_ok();

    let f_tilde = exact_phase_function(&stab, &phases);
    let is_weak_stabilizer = match &f_tilde {
        None => {
            witnesses.weak_stabilizer = Some("stabilizer phases are not exact roots of unity".into());
            false
        }
        Some(f) => match weak_stabilizer_code(model, &stab, f)? {
            Some(v) if v.same_space(w) => true,
            Some(v) => {
                witnesses.weak_stabilizer = Some(format!("V^St(S, f̃) has dimension {} but W has {}", v.dim(), w.dim()));
                false
            }
            None => {
                witnesses.weak_stabilizer = Some("V^St(S, f̃) is zero".into());
                false
            }
        },
    };

    let central_type = (model.is_central_type() && is_clifford).then(|| CentralTypeCheck {
        criterion: g.order() == l.order() * stab.order(),
        direct: is_weak_stabilizer,
    });

    let mut normal_subgroup = None;
    let is_stabilizer = if !is_weak_stabilizer {
        witnesses.stabilizer = Some("not a weak stabilizer code".into());
        false
    } else if central_type.is_some() {
        // for Clifford codes of central type, S itself must be normal
        let normal = g.is_normal(&stab);
        if normal {
            normal_subgroup = Some(stab.members().to_vec());
        } else {
            witnesses.stabilizer = Some("S is not normal in G".into());
        }
        normal
    } else {
        let f = f_tilde.as_ref().expect("weak stabilizer implies exact phases");
        let found = normal_stabilizing_subgroup(model, &stab, f, w, caps)?;
        match found {
            Some(n) => {
                normal_subgroup = Some(n.members().to_vec());
                true
            }
            None => {
                witnesses.stabilizer = Some("no normal subgroup of G inside S reproduces W".into());
                false
            }
        }
    };

    Ok(CodeReport {
        group_order: g.order(),
        ambient_dim: model.dim(),
        code_dim: w.dim(),
        logical: l.members().to_vec(),
        stabilizer: stab.members().to_vec(),
        stabilizer_phase: phases,
        detectable,
        flags: Flags {
            is_stabilizer,
            is_weak_stabilizer,
            is_clifford,
            is_partitioning: partition.is_none(),
        },
        witnesses,
        normal_subgroup,
        central_type,
    })
}

/// Largest normal subgroup `N ⊆ S` of `G` with `V^St(N, f̃|_N) = W`.
fn normal_stabilizing_subgroup(
    model: &ProjectiveErrorModel,
    stab: &Subgroup,
    f: &PhaseFunction,
    w: &CodeSpace,
    caps: &Caps,
) -> Result<Option<Subgroup>> {
    let g = model.group();
    let inner = stab.as_group(g).all_subgroups(caps)?;
    for sub in inner.iter().rev() {
        let n = stab.lift(sub);
        if !g.is_normal(&n) {
            continue;
        }
        let fn_ = f.restrict(&n)?;
        if let Some(v) = weak_stabilizer_code(model, &n, &fn_)? {
            if v.same_space(w) {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}

/// For a nonzero stabilizer code, the inertia group `L = I_G(f)` and the
/// code, which is then a Clifford code for `L`.
pub fn stabilizer_to_clifford(model: &ProjectiveErrorModel, n: &Subgroup, f: &PhaseFunction) -> Result<(Subgroup, CodeSpace)> {
    let w = stabilizer_code(model, n, f)?.ok_or_else(|| Error::Precondition("the stabilizer code is zero".into()))?;
    let g = model.group();
    let matrices = f.values().iter().map(|p| CMat::from_element(1, 1, p.to_complex())).collect();
    let theta = ProjectiveRep::new(n.as_group(g), matrices)?;
    let l = inertia_group(&theta, g, n, model.cocycle())?;
    Ok((l, w))
}

/// `W₁ ⊗ W₂` in the product model, checking `L = L₁ × L₂` and
/// `S = S₁ × S₂` element by element.
pub fn product_code(
    m1: &ProjectiveErrorModel,
    w1: &CodeSpace,
    m2: &ProjectiveErrorModel,
    w2: &CodeSpace,
    caps: &Caps,
) -> Result<(ProjectiveErrorModel, CodeSpace)> {
    check_code(m1, w1)?;
    check_code(m2, w2)?;
    let model = product_model(m1, m2, caps)?;
    let w = w1.tensor(w2);
    let (s1, s2, s) = (scan(m1, w1)?, scan(m2, w2)?, scan(&model, &w)?);
    let n2 = m2.group().order();
    for (x, e) in s.iter().enumerate() {
        let (a, b) = (&s1[x / n2], &s2[x % n2]);
        if e.logical != (a.logical && b.logical) {
            return Err(Error::Precondition(format!("L(W₁⊗W₂) ≠ L₁×L₂ at element {x}")));
        }
        if is_stabilizing(e.detect) != (is_stabilizing(a.detect) && is_stabilizing(b.detect)) {
            return Err(Error::Precondition(format!("S(W₁⊗W₂) ≠ S₁×S₂ at element {x}")));
        }
    }
    Ok((model, w))
}

/// Span of the Dicke states `|Dⁿ_k⟩`, `k = 0..=n`, in `(C²)^{⊗n}`.
pub fn dicke_code(n: usize) -> Result<CodeSpace> {
    let dim = 1usize << n;
    let mut basis = CMat::zeros(dim, n + 1);
    for j in 0..dim {
        basis[(j, j.count_ones() as usize)] = linalg::c(1.0, 0.0);
    }
    for mut col in basis.column_iter_mut() {
        let norm = col.norm();
        col /= C64::new(norm, 0.0);
    }
    CodeSpace::new(basis)
}
