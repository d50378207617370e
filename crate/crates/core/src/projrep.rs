//! Projective representations as one unitary matrix per group element.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cocycle::Cocycle;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{self, CMat, C64, TOL_INT, TOL_STRUCT};
use crate::phase::Phase;

/// `π: G → U(V)` with `π(x)π(y) = σ(x,y)π(xy)`.
#[derive(Clone)]
pub struct ProjectiveRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    matrices: Arc<[CMat]>,
    cocycle: Cocycle,
}

impl fmt::Debug for ProjectiveRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProjectiveRep")
            .field("group", &self.group.label())
            .field("order", &self.group.order())
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl ProjectiveRep {
    /// Validates unitarity and projective multiplicativity and extracts the
    /// cocycle exactly.
    pub fn new(group: Arc<FiniteGroup>, matrices: Vec<CMat>) -> Result<Self> {
        let n = group.order();
        if matrices.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrices.len(),
            });
        }
        let dim = matrices[0].nrows();
        if dim == 0 {
            return Err(Error::Precondition("matrices must be nonempty".into()));
        }
        for (x, m) in matrices.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: m.nrows().max(m.ncols()),
                });
            }
            let deviation = linalg::unitarity_defect(m);
            if !(deviation < TOL_STRUCT) {
                return Err(Error::NotUnitary { element: x, deviation });
            }
        }
        let max_den = 4 * n as u64;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let prod = &matrices[x] * &matrices[y];
                let target = &matrices[group.mul(x, y)];
                let c = prod.dotc(target).conj() / dim as f64;
                let phase = Phase::snap(c, max_den, 1e-6).ok_or_else(|| Error::NotProjective {
                    x,
                    y,
                    reason: format!("scalar {c:.6} is not a root of unity of order <= {max_den}"),
                })?;
                let err = linalg::frob(&(prod - target * phase.to_complex()));
                if !(err < TOL_STRUCT) {
                    return Err(Error::NotProjective {
                        x,
                        y,
                        reason: format!("residual {err:.3e}"),
                    });
                }
                table.push(phase);
            }
        }
        let cocycle = Cocycle::new(group.clone(), table)?;
        if let Some((x, y, z)) = cocycle.identity_violation() {
            return Err(Error::CocycleIdentity(x, y, z));
        }
        Ok(ProjectiveRep {
            group,
            dim,
            matrices: matrices.into(),
            cocycle,
        })
    }

    /// For constructions whose cocycle is known by design. Debug builds
    /// still check a sample of products.
    pub(crate) fn with_known_cocycle(group: Arc<FiniteGroup>, matrices: Vec<CMat>, cocycle: Cocycle) -> Self {
        let dim = matrices[0].nrows();
        debug_assert_eq!(matrices.len(), group.order());
        #[cfg(debug_assertions)]
        {
            let n = group.order();
            for x in (0..n).step_by(1 + n / 8) {
                for y in (0..n).step_by(1 + n / 8) {
                    let lhs = &matrices[x] * &matrices[y];
                    let rhs = &matrices[group.mul(x, y)] * cocycle.get(x, y).to_complex();
                    debug_assert!(linalg::frob(&(lhs - rhs)) < 1e-8, "cocycle mismatch at ({x}, {y})");
                }
            }
        }
        ProjectiveRep {
            group,
            dim,
            matrices: matrices.into(),
            cocycle,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, x: usize) -> &CMat {
        &self.matrices[x]
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.matrices
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn character(&self) -> Character {
        Character {
            group: self.group.clone(),
            values: self.matrices.iter().map(linalg::trace).collect(),
            cocycle: self.cocycle.clone(),
        }
    }

    pub fn is_irreducible(&self) -> bool {
        let chi = self.character();
        let norm = chi.inner_product(&chi).expect("same cocycle").re;
        (norm - 1.0).abs() < TOL_INT
    }

    /// First non-identity element acting as a scalar, if any.
    pub fn scalar_element(&self) -> Option<usize> {
        let id = self.group.identity();
        self.group
            .elements()
            .find(|&x| x != id && linalg::scalar_part(&self.matrices[x], TOL_STRUCT).is_some())
    }

    pub fn is_projectively_faithful(&self) -> bool {
        self.scalar_element().is_none()
    }

    /// First pair of distinct elements with equal matrices.
    pub fn injectivity_violation(&self) -> Option<(usize, usize)> {
        let n = self.group.order();
        for x in 0..n {
            for y in x + 1..n {
                if linalg::frob(&(&self.matrices[x] - &self.matrices[y])) < TOL_STRUCT {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `Res_H π`, a representation of `h.as_group(G)`.
    pub fn restrict(&self, h: &Subgroup) -> ProjectiveRep {
        let matrices = h.members().iter().map(|&x| self.matrices[x].clone()).collect();
        ProjectiveRep {
            group: h.as_group(&self.group),
            dim: self.dim,
            matrices,
            cocycle: self.cocycle.restrict(h),
        }
    }

    /// `x ↦ f(x) π(x)`, with cocycle `σ·δf`.
    pub fn twist(&self, f: &[Phase]) -> Result<ProjectiveRep> {
        if f.len() != self.group.order() {
            return Err(Error::DimensionMismatch {
                expected: self.group.order(),
                got: f.len(),
            });
        }
        let matrices = self.matrices.iter().zip(f).map(|(m, p)| m * p.to_complex()).collect();
        let cocycle = self.cocycle.multiply(&crate::cocycle::coboundary(&self.group, f))?;
        Ok(ProjectiveRep {
            group: self.group.clone(),
            dim: self.dim,
            matrices,
            cocycle,
        })
    }

    /// Multiplies every matrix by the matching matrix of a linear
    /// representation of dimension one, i.e. `ρ·π` for a character `ρ`.
    pub fn twist_by_linear(&self, rho: &ProjectiveRep) -> Result<ProjectiveRep> {
        if rho.dim != 1 || !rho.cocycle.is_trivial() {
            return Err(Error::Precondition("twist needs a linear character".into()));
        }
        let f: Vec<Phase> = rho
            .matrices
            .iter()
            .map(|m| Phase::snap(m[(0, 0)], 4 * self.group.order() as u64, 1e-9).ok_or(Error::SnapFailure(m[(0, 0)].re)))
            .collect::<Result<_>>()?;
        self.twist(&f)
    }

    pub fn direct_sum(&self, other: &ProjectiveRep) -> Result<ProjectiveRep> {
        if !self.cocycle.same_as(&other.cocycle) {
            return Err(Error::CocycleMismatch);
        }
        let d = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(other.matrices.iter())
            .map(|(a, b)| {
                let mut m = CMat::zeros(d, d);
                m.view_mut((0, 0), (self.dim, self.dim)).copy_from(a);
                m.view_mut((self.dim, self.dim), (other.dim, other.dim)).copy_from(b);
                m
            })
            .collect();
        Ok(ProjectiveRep {
            group: self.group.clone(),
            dim: d,
            matrices,
            cocycle: self.cocycle.clone(),
        })
    }

    /// `π₁ ⊗ π₂` on `G₁ × G₂`, element `(x₁, x₂)` at `x₁·|G₂| + x₂`.
    pub fn tensor(&self, other: &ProjectiveRep, caps: &Caps) -> Result<ProjectiveRep> {
        let dim = self.dim.checked_mul(other.dim).unwrap_or(usize::MAX);
        if dim > caps.max_dim {
            return Err(Error::CapExceeded {
                what: "ambient dimension",
                value: dim,
                cap: caps.max_dim,
            });
        }
        let group = Arc::new(FiniteGroup::direct_product(&self.group, &other.group, caps)?);
        let n2 = other.group.order();
        let matrices = group
            .elements()
            .map(|x| linalg::kron(&self.matrices[x / n2], &other.matrices[x % n2]))
            .collect();
        let cocycle = Cocycle::from_fn(group.clone(), |x, y| {
            self.cocycle.get(x / n2, y / n2) * other.cocycle.get(x % n2, y % n2)
        });
        Ok(ProjectiveRep::with_known_cocycle(group, matrices, cocycle))
    }

    /// Equality of characters within `TOL_INT`; decides isomorphism for
    /// representations with the same cocycle.
    pub fn isomorphic(&self, other: &ProjectiveRep) -> Result<bool> {
        if !self.cocycle.same_as(&other.cocycle) {
            return Err(Error::CocycleMismatch);
        }
        Ok(self.dim == other.dim && self.character().approx_eq(&other.character(), TOL_INT))
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            dim: self.dim,
            matrices: self.matrices.iter().map(linalg::to_pairs).collect(),
        }
    }

    pub fn from_json(group: Arc<FiniteGroup>, json: &RepJson) -> Result<Self> {
        let matrices = json
            .matrices
            .iter()
            .map(|m| linalg::from_pairs(json.dim, json.dim, m))
            .collect::<Result<Vec<_>>>()?;
        ProjectiveRep::new(group, matrices)
    }
}

/// Orthonormal (Frobenius) basis of `Hom(ρ₁, ρ₂) = {T : ρ₂(x)T = Tρ₁(x)}`.
///
/// The equations are imposed on a generating set, which suffices because the
/// two cocycles agree.
pub fn hom_space(rho1: &ProjectiveRep, rho2: &ProjectiveRep) -> Result<Vec<CMat>> {
    if !rho1.cocycle.same_as(&rho2.cocycle) {
        return Err(Error::CocycleMismatch);
    }
    let g = &rho1.group;
    let gens = g.generators(&g.whole());
    let (d1, d2) = (rho1.dim, rho2.dim);
    let unknowns = d1 * d2;
    let mut system = CMat::zeros(unknowns * gens.len().max(1), unknowns);
    for (k, &x) in gens.iter().enumerate() {
        // vec(ρ₂ T) − vec(T ρ₁) = (I ⊗ ρ₂ − ρ₁ᵀ ⊗ I) vec T
        let block = linalg::kron(&linalg::identity(d1), &rho2.matrices[x])
            - linalg::kron(&rho1.matrices[x].transpose(), &linalg::identity(d2));
        system.view_mut((k * unknowns, 0), (unknowns, unknowns)).copy_from(&block);
    }
    let null = linalg::nullspace(&system);
    Ok(null
        .column_iter()
        .map(|col| linalg::unvectorize(col.as_slice(), d2, d1))
        .collect())
}

/// `Ind_H^G θ` for `θ` a representation of `h.as_group(G)` with cocycle
/// `Res σ`. The basis is `r ⊗ eᵢ` over the left-coset representatives `r`.
pub fn induce(theta: &ProjectiveRep, parent: &Arc<FiniteGroup>, h: &Subgroup, sigma: &Cocycle) -> Result<ProjectiveRep> {
    if !Arc::ptr_eq(sigma.group(), parent) && **sigma.group() != **parent {
        return Err(Error::CocycleMismatch);
    }
    if !sigma.restrict(h).same_as(&theta.cocycle) {
        return Err(Error::CocycleMismatch);
    }
    let (reps, coset_of) = parent.coset_table(h);
    let d = theta.dim;
    let dim = reps.len() * d;
    let matrices = parent
        .elements()
        .map(|x| {
            let mut m = CMat::zeros(dim, dim);
            for (col, &s) in reps.iter().enumerate() {
                let xs = parent.mul(x, s);
                let row = coset_of[xs];
                let r = reps[row];
                let hh = parent.mul(parent.inv(r), xs);
                let scale = (sigma.get(x, s) * sigma.get(r, hh).conj()).to_complex();
                let block = theta.matrix(h.position(hh).expect("coset decomposition")) * scale;
                m.view_mut((row * d, col * d), (d, d)).copy_from(&block);
            }
            m
        })
        .collect();
    Ok(ProjectiveRep::with_known_cocycle(parent.clone(), matrices, sigma.clone()))
}

fn check_stable(parent: &FiniteGroup, h: &Subgroup, x: usize) -> Result<()> {
    if h.members().iter().all(|&y| h.contains(parent.conjugate_by(y, x))) {
        Ok(())
    } else {
        Err(Error::NotStable(x))
    }
}

/// `θˣ(y) = σ(x⁻¹,y)·conj(σ(x⁻¹yx, x⁻¹))·θ(x⁻¹yx)` for `x⁻¹Hx = H`.
pub fn conjugate_rep(theta: &ProjectiveRep, parent: &FiniteGroup, h: &Subgroup, x: usize, sigma: &Cocycle) -> Result<ProjectiveRep> {
    parent.check_element(x)?;
    check_stable(parent, h, x)?;
    let xi = parent.inv(x);
    let matrices = h
        .members()
        .iter()
        .map(|&y| {
            let z = parent.conjugate_by(y, x);
            let scale = (sigma.get(xi, y) * sigma.get(z, xi).conj()).to_complex();
            theta.matrix(h.position(z).expect("stable")) * scale
        })
        .collect();
    Ok(ProjectiveRep::with_known_cocycle(theta.group.clone(), matrices, theta.cocycle.clone()))
}

/// `I_G(θ) = {x ∈ N_G(H) : θˣ ≅ θ}`.
pub fn inertia_group(theta: &ProjectiveRep, parent: &FiniteGroup, h: &Subgroup, sigma: &Cocycle) -> Result<Subgroup> {
    let normalizer = parent.normalizer(h);
    let chi = theta.character();
    let mut members = Vec::new();
    for &x in normalizer.members() {
        let conj = conjugate_rep(theta, parent, h, x, sigma)?;
        if conj.character().approx_eq(&chi, TOL_INT) {
            members.push(x);
        }
    }
    parent.subgroup(members)
}

/// Traces of a projective representation, tagged with its cocycle.
#[derive(Clone, Debug)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<C64>,
    cocycle: Cocycle,
}

impl Character {
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn at(&self, x: usize) -> C64 {
        self.values[x]
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// `(1/|G|) Σ χ₁(x) conj(χ₂(x))`
    pub fn inner_product(&self, other: &Character) -> Result<C64> {
        if !self.cocycle.same_as(&other.cocycle) {
            return Err(Error::CocycleMismatch);
        }
        let sum: C64 = self.values.iter().zip(&other.values).map(|(a, b)| a * b.conj()).sum();
        Ok(sum / self.values.len() as f64)
    }

    pub fn approx_eq(&self, other: &Character, tol: f64) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).norm() < tol)
    }

    /// CSV export: `element,re,im` per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("element,re,im\n");
        for (x, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", self.group.element_name(x), v.re, v.im));
        }
        out
    }
}

/// JSON rep dump: per-element matrices as row-major `[re, im]` pairs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub dim: usize,
    pub matrices: Vec<Vec<[f64; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    fn caps() -> Caps {
        Caps::default()
    }

    fn klein() -> Arc<FiniteGroup> {
        let z2 = FiniteGroup::cyclic(2, &caps()).unwrap();
        Arc::new(FiniteGroup::direct_product(&z2, &z2, &caps()).unwrap())
    }

    fn pauli_x() -> CMat {
        CMat::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
    }

    fn pauli_z() -> CMat {
        CMat::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
    }

    /// Element `(a, b)` at index `2a + b` maps to `Xᵃ Zᵇ`.
    fn pauli() -> ProjectiveRep {
        let (x, z) = (pauli_x(), pauli_z());
        let mats = vec![linalg::identity(2), z.clone(), x.clone(), &x * &z];
        ProjectiveRep::new(klein(), mats).unwrap()
    }

    #[test]
    fn trivial_rep_of_z2() {
        let g = Arc::new(FiniteGroup::cyclic(2, &caps()).unwrap());
        let rep = ProjectiveRep::new(g, vec![linalg::identity(3); 2]).unwrap();
        assert!(rep.cocycle().is_trivial());
        assert!(!rep.is_irreducible());
    }

    #[test]
    fn pauli_cocycles_depend_on_product_order() {
        let p = pauli();
        assert!(p.cocycle().table().iter().all(|ph| ph.den() <= 2));
        let (x, z) = (pauli_x(), pauli_z());
        let other = ProjectiveRep::new(klein(), vec![linalg::identity(2), z.clone(), x.clone(), &z * &x]).unwrap();
        assert!(!other.cocycle().same_as(p.cocycle()));
        // they differ by the coboundary of f = (1, 1, 1, -1)
        let f = [Phase::ONE, Phase::ONE, Phase::ONE, Phase::root_of_unity(1, 2)];
        let twisted = p.twist(&f).unwrap();
        assert!(twisted.cocycle().same_as(other.cocycle()));
    }

    #[test]
    fn rejects_invalid_inputs() {
        let g = klein();
        let bad = CMat::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let err = ProjectiveRep::new(g.clone(), vec![linalg::identity(2), bad, pauli_x(), pauli_z()]);
        assert!(matches!(err, Err(Error::NotUnitary { element: 1, .. })));
        let err = ProjectiveRep::new(g.clone(), vec![linalg::identity(2), pauli_x(), pauli_x(), pauli_z()]);
        assert!(matches!(err, Err(Error::NotProjective { .. })));
        assert!(ProjectiveRep::new(g, vec![linalg::identity(2)]).is_err());
    }

    #[test]
    fn pauli_is_irreducible_and_faithful() {
        let p = pauli();
        let chi = p.character();
        assert!((chi.inner_product(&chi).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        assert!(p.is_irreducible());
        assert!(p.is_projectively_faithful());
        let doubled = p.direct_sum(&p).unwrap();
        let chi2 = doubled.character();
        assert!((chi2.inner_product(&chi2).unwrap() - c(4.0, 0.0)).norm() < 1e-12);
        assert!(!doubled.is_irreducible());
        assert!(doubled.is_projectively_faithful());
    }

    #[test]
    fn schur_and_eigenvector_hom_spaces() {
        let p = pauli();
        let homs = hom_space(&p, &p).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(linalg::scalar_part(&homs[0], 1e-9).is_some());

        // f(X) = 1 on ⟨X⟩ against Res π
        let g = p.group().clone();
        let hx = g.subgroup_generated(&[2]).unwrap();
        let res = p.restrict(&hx);
        let f = ProjectiveRep::new(hx.as_group(&g), vec![linalg::identity(1); 2]).unwrap();
        let homs = hom_space(&f, &res).unwrap();
        assert_eq!(homs.len(), 1);
        let v = &homs[0];
        assert!((v[(0, 0)] - v[(1, 0)]).norm() < 1e-12);
    }

    #[test]
    fn hom_space_rejects_cocycle_mismatch() {
        let p = pauli();
        let triv = ProjectiveRep::new(klein(), vec![linalg::identity(1); 4]).unwrap();
        assert!(matches!(hom_space(&triv, &p), Err(Error::CocycleMismatch)));
    }

    #[test]
    fn tensor_of_paulis() {
        let p = pauli();
        let pp = p.tensor(&p, &caps()).unwrap();
        assert_eq!((pp.dim(), pp.group().order()), (4, 16));
        let checked = ProjectiveRep::new(pp.group().clone(), pp.matrices().to_vec()).unwrap();
        assert!(checked.cocycle().same_as(pp.cocycle()));
        assert!(pp.is_irreducible() && pp.is_projectively_faithful());
        let (c1, c2, c12) = (p.character(), p.character(), pp.character());
        for x in 0..16 {
            assert!((c12.at(x) - c1.at(x / 4) * c2.at(x % 4)).norm() < 1e-12);
        }
    }

    #[test]
    fn restriction_to_trivial_subgroup() {
        let p = pauli();
        let res = p.restrict(&p.group().trivial());
        assert_eq!(res.group().order(), 1);
        assert_eq!(res.dim(), 2);
    }

    #[test]
    fn regular_representation_by_induction() {
        let g = Arc::new(FiniteGroup::dihedral(3, &caps()).unwrap());
        let h = g.trivial();
        let theta = ProjectiveRep::new(h.as_group(&g), vec![linalg::identity(1)]).unwrap();
        let reg = induce(&theta, &g, &h, &Cocycle::trivial(g.clone())).unwrap();
        assert_eq!(reg.dim(), 6);
        let chi = reg.character();
        assert!((chi.at(0) - c(6.0, 0.0)).norm() < 1e-12);
        assert!(chi.values()[1..].iter().all(|v| v.norm() < 1e-12));
        assert!(ProjectiveRep::new(g, reg.matrices().to_vec()).unwrap().cocycle().is_trivial());
    }

    #[test]
    fn induced_pauli_eigenvector_and_frobenius() {
        let p = pauli();
        let g = p.group().clone();
        let hx = g.subgroup_generated(&[2]).unwrap();
        let f = ProjectiveRep::new(hx.as_group(&g), vec![linalg::identity(1); 2]).unwrap();
        let ind = induce(&f, &g, &hx, p.cocycle()).unwrap();
        let checked = ProjectiveRep::new(g.clone(), ind.matrices().to_vec()).unwrap();
        assert!(checked.cocycle().same_as(p.cocycle()));
        assert_eq!(hom_space(&ind, &p).unwrap().len(), hom_space(&f, &p.restrict(&hx)).unwrap().len());
    }

    #[test]
    fn inertia_of_x_eigenvalue() {
        let p = pauli();
        let g = p.group().clone();
        let hx = g.subgroup_generated(&[2]).unwrap();
        let f = ProjectiveRep::new(hx.as_group(&g), vec![linalg::identity(1); 2]).unwrap();
        let inertia = inertia_group(&f, &g, &hx, p.cocycle()).unwrap();
        assert_eq!(inertia.members(), &[0, 2]);
        let full = inertia_group(&p, &g, &g.whole(), p.cocycle()).unwrap();
        assert_eq!(full.order(), 4);
        // conjugates keep the cocycle
        for x in g.elements() {
            let conj = conjugate_rep(&f, &g, &hx, x, p.cocycle()).unwrap();
            let checked = ProjectiveRep::new(conj.group().clone(), conj.matrices().to_vec()).unwrap();
            assert!(checked.cocycle().same_as(f.cocycle()));
        }
    }

    #[test]
    fn conjugation_needs_stable_subgroup() {
        let g = Arc::new(FiniteGroup::dihedral(3, &caps()).unwrap());
        let h = g.subgroup_generated(&[3]).unwrap();
        let theta = ProjectiveRep::new(h.as_group(&g), vec![linalg::identity(1); 2]).unwrap();
        let sigma = Cocycle::trivial(g.clone());
        assert!(matches!(conjugate_rep(&theta, &g, &h, 1, &sigma), Err(Error::NotStable(1))));
    }

    #[test]
    fn json_round_trip() {
        let p = pauli();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let back = ProjectiveRep::from_json(klein(), &serde_json::from_str(&text).unwrap()).unwrap();
        assert!(back.cocycle().same_as(p.cocycle()));
        assert!(p.character().approx_eq(&back.character(), 1e-12));
        assert!(p.character().to_csv().starts_with("element,re,im\n"));
    }
}
