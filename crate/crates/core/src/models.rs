//! Catalog of error models and projective error models.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::cocycle::{coboundary, Cocycle};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SpecParser, Subgroup};
use crate::linalg::{self, c, CMat, C64};
use crate::phase::Phase;
use crate::projrep::ProjectiveRep;

/// A projectively faithful irreducible projective representation.
#[derive(Clone, Debug)]
pub struct ProjectiveErrorModel {
    rep: ProjectiveRep,
}

impl ProjectiveErrorModel {
    pub fn new(rep: ProjectiveRep) -> Result<Self> {
        let chi = rep.character();
        let norm = chi.inner_product(&chi)?.re;
        if (norm - 1.0).abs() >= linalg::TOL_INT {
            return Err(Error::NotIrreducible(norm));
        }
        if let Some(x) = rep.scalar_element() {
            return Err(Error::NotFaithful(x));
        }
        Ok(ProjectiveErrorModel { rep })
    }

    pub fn rep(&self) -> &ProjectiveRep {
        &self.rep
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.rep.group()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn cocycle(&self) -> &Cocycle {
        self.rep.cocycle()
    }

    pub fn matrix(&self, x: usize) -> &CMat {
        self.rep.matrix(x)
    }

    /// `|G| = (dim V)²`
    pub fn is_central_type(&self) -> bool {
        self.group().order() == self.dim() * self.dim()
    }
}

/// A faithful irreducible linear representation.
#[derive(Clone, Debug)]
pub struct ErrorModel {
    rep: ProjectiveRep,
}

impl ErrorModel {
    pub fn new(rep: ProjectiveRep) -> Result<Self> {
        if !rep.cocycle().is_trivial() {
            return Err(Error::NontrivialCocycle);
        }
        if let Some((x, y)) = rep.injectivity_violation() {
            return Err(Error::NotInjective(x, y));
        }
        let chi = rep.character();
        let norm = chi.inner_product(&chi)?.re;
        if (norm - 1.0).abs() >= linalg::TOL_INT {
            return Err(Error::NotIrreducible(norm));
        }
        Ok(ErrorModel { rep })
    }

    pub fn rep(&self) -> &ProjectiveRep {
        &self.rep
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.rep.group()
    }
}

/// A model together with the subgroup `L` and representation `ρ` of `L`
/// defining its Clifford code.
#[derive(Clone, Debug)]
pub struct CliffordFamily {
    pub model: ProjectiveErrorModel,
    pub l: Subgroup,
    pub rho: ProjectiveRep,
}

fn zeta(n: usize) -> C64 {
    Phase::root_of_unity(1, n as u64).to_complex()
}

fn check_dim(dim: usize, caps: &Caps) -> Result<()> {
    if dim > caps.max_dim {
        return Err(Error::CapExceeded {
            what: "ambient dimension",
            value: dim,
            cap: caps.max_dim,
        });
    }
    Ok(())
}

/// Cyclic shift with ones at `(i, i+1 mod n)`.
pub fn shift(n: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    for i in 0..n {
        m[(i, (i + 1) % n)] = c(1.0, 0.0);
    }
    m
}

/// `diag(1, ζₙ, …, ζₙⁿ⁻¹)`
pub fn clock(n: usize) -> CMat {
    let z = zeta(n);
    CMat::from_diagonal(&nalgebra::DVector::from_iterator(n, (0..n).map(|j| z.powu(j as u32))))
}

/// The anti-diagonal flip.
pub fn flip(n: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    for i in 0..n {
        m[(i, n - 1 - i)] = c(1.0, 0.0);
    }
    m
}

fn mat_pow(m: &CMat, k: usize) -> CMat {
    (0..k).fold(linalg::identity(m.nrows()), |acc, _| acc * m)
}

fn block_diag(a: &CMat, b: &CMat) -> CMat {
    let (p, q) = (a.nrows(), b.nrows());
    let mut m = CMat::zeros(p + q, p + q);
    m.view_mut((0, 0), (p, p)).copy_from(a);
    m.view_mut((p, p), (q, q)).copy_from(b);
    m
}

/// `[[0, I], [I, 0]]`
fn swap_blocks(n: usize) -> CMat {
    let mut m = CMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = c(1.0, 0.0);
        m[(n + i, i)] = c(1.0, 0.0);
    }
    m
}

/// `π(a, b) = Xₙᵃ Zₙᵇ` on `Zₙ × Zₙ`.
pub fn gen_pauli_model(n: usize, caps: &Caps) -> Result<ProjectiveErrorModel> {
    if n == 0 {
        return Err(Error::InvalidSpec("genpauli needs n >= 1".into()));
    }
    check_dim(n, caps)?;
    let zn = FiniteGroup::cyclic(n, caps)?;
    let group = Arc::new(FiniteGroup::direct_product(&zn, &zn, caps)?.with_label(format!("Z{n}xZ{n}")));
    let (x, z) = (shift(n), clock(n));
    let xs: Vec<CMat> = (0..n).map(|a| mat_pow(&x, a)).collect();
    let zs: Vec<CMat> = (0..n).map(|b| mat_pow(&z, b)).collect();
    let matrices = group.elements().map(|e| &xs[e / n] * &zs[e % n]).collect();
    ProjectiveErrorModel::new(ProjectiveRep::new(group, matrices)?)
}

/// The `k`-qubit Pauli model, the `k`-fold product of `gen_pauli_model(2)`.
pub fn pauli_model(k: usize, caps: &Caps) -> Result<ProjectiveErrorModel> {
    if k == 0 {
        return Err(Error::InvalidSpec("pauli needs n >= 1".into()));
    }
    let one = gen_pauli_model(2, caps)?;
    (1..k).try_fold(one.clone(), |acc, _| product_model(&acc, &one, caps))
}

/// `π(bᵏaˡ) = Xᵏ Pˡ` on `D_n` with `P = diag(1, ζₙ)`.
pub fn dihedral_xp_model(n: usize, caps: &Caps) -> Result<ProjectiveErrorModel> {
    let group = Arc::new(FiniteGroup::dihedral(n, caps)?);
    let matrices = xp_matrices(n);
    ProjectiveErrorModel::new(ProjectiveRep::new(group, matrices)?)
}

fn xp_matrices(n: usize) -> Vec<CMat> {
    let x = shift(2);
    let p = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1.0, 0.0), zeta(n)]));
    (0..2 * n).map(|e| mat_pow(&x, e / n) * mat_pow(&p, e % n)).collect()
}

pub fn product_model(m1: &ProjectiveErrorModel, m2: &ProjectiveErrorModel, caps: &Caps) -> Result<ProjectiveErrorModel> {
    let rep = m1.rep().tensor(m2.rep(), caps)?;
    ProjectiveErrorModel::new(rep)
}

/// Index permutation on `(C^d)^{⊗n}` realising `T_τ`, which moves tensor
/// slot `i` to slot `τ(i)`.
fn permutation_operator(d: usize, tau: &[usize]) -> CMat {
    let n = tau.len();
    let dim = d.pow(n as u32);
    let mut m = CMat::zeros(dim, dim);
    let mut digits = vec![0; n];
    let mut out = vec![0; n];
    for j in 0..dim {
        let mut rest = j;
        for slot in digits.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        for i in 0..n {
            out[tau[i]] = digits[i];
        }
        let k = out.iter().fold(0, |acc, &v| acc * d + v);
        m[(k, j)] = c(1.0, 0.0);
    }
    m
}

/// `π(x₁, …, xₙ, τ) = (π(x₁) ⊗ … ⊗ π(xₙ)) T_τ` on `Gⁿ ⋊ Sₙ`.
pub fn perm_product_model(m: &ProjectiveErrorModel, n: usize, caps: &Caps) -> Result<ProjectiveErrorModel> {
    let d = m.dim();
    let dim = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(d)).unwrap_or(usize::MAX);
    check_dim(dim, caps)?;
    let base = m.group();
    let group = Arc::new(FiniteGroup::permutation_semidirect(base, n, caps)?);
    let perms = crate::group::permutations(n);
    let ops: Vec<CMat> = perms.iter().map(|p| permutation_operator(d, p)).collect();
    let nperm = perms.len();
    let matrices: Vec<CMat> = group
        .elements()
        .map(|e| {
            let t = e % nperm;
            let mut rest = e / nperm;
            let mut xs = vec![0; n];
            for slot in xs.iter_mut().rev() {
                *slot = rest % base.order();
                rest /= base.order();
            }
            let tensor = xs
                .iter()
                .fold(linalg::identity(1), |acc, &x| linalg::kron(&acc, m.matrix(x)));
            tensor * &ops[t]
        })
        .collect();
    ProjectiveErrorModel::new(ProjectiveRep::new(group, matrices)?)
}

/// `G = C₂ × D_{2n}`, `π(cᵏbˡaᵐ) = J^k diag(X, X)^l diag(P, −P)^m` on `C⁴`
/// with `P = diag(1, ζ_{2n})`; `L` is the `D_{2n}` factor and `ρ` its XP
/// representation.
pub fn family_c2_x_d2n(n: usize, caps: &Caps) -> Result<CliffordFamily> {
    if n < 2 {
        return Err(Error::InvalidSpec("c2d2n needs n >= 2".into()));
    }
    let c2 = FiniteGroup::cyclic(2, caps)?;
    let d = FiniteGroup::dihedral(2 * n, caps)?;
    let group = Arc::new(FiniteGroup::direct_product(&c2, &d, caps)?.with_label(format!("C2xD{}", 2 * n)));
    let dsize = d.order();
    let x = shift(2);
    let p = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1.0, 0.0), zeta(2 * n)]));
    let j = swap_blocks(2);
    let xx = block_diag(&x, &x);
    let pp = block_diag(&p, &(-&p));
    let matrices = group
        .elements()
        .map(|e| {
            let (k, rest) = (e / dsize, e % dsize);
            let (l, m) = (rest / (2 * n), rest % (2 * n));
            mat_pow(&j, k) * mat_pow(&xx, l) * mat_pow(&pp, m)
        })
        .collect();
    let model = ProjectiveErrorModel::new(ProjectiveRep::new(group.clone(), matrices)?)?;
    let l = group.subgroup((0..dsize).collect())?;
    let rho = ProjectiveRep::new(l.as_group(&group), xp_matrices(2 * n))?;
    Ok(CliffordFamily { model, l, rho })
}

/// `L = (Zₙ × Zₙ) ⋊ Z₂`, `ρ(a, b, c) = Xₙᵃ Zₙᵇ Cᶜ`; `G = L × Z₂` acting on
/// `C²ⁿ` by `diag(X,X)ᵃ diag(Z,Z)ᵇ diag(C,−C)ᶜ Jᵈ`.
pub fn family_odd(n: usize, caps: &Caps) -> Result<CliffordFamily> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidSpec("oddfam needs odd n >= 3".into()));
    }
    check_dim(2 * n, caps)?;
    let lgroup = FiniteGroup::inversion_semidirect(n, caps)?;
    let z2 = FiniteGroup::cyclic(2, caps)?;
    let group = Arc::new(FiniteGroup::direct_product(&lgroup, &z2, caps)?);
    let (x, z, cf) = (shift(n), clock(n), flip(n));
    let coords = |e: usize| (e / (2 * n), (e / 2) % n, e % 2);
    let rho_mats: Vec<CMat> = lgroup
        .elements()
        .map(|e| {
            let (a, b, cc) = coords(e);
            mat_pow(&x, a) * mat_pow(&z, b) * mat_pow(&cf, cc)
        })
        .collect();
    let (xx, zz, ccm, j) = (block_diag(&x, &x), block_diag(&z, &z), block_diag(&cf, &(-&cf)), swap_blocks(n));
    let matrices = group
        .elements()
        .map(|e| {
            let (a, b, cc) = coords(e / 2);
            mat_pow(&xx, a) * mat_pow(&zz, b) * mat_pow(&ccm, cc) * mat_pow(&j, e % 2)
        })
        .collect();
    let model = ProjectiveErrorModel::new(ProjectiveRep::new(group.clone(), matrices)?)?;
    let l = group.subgroup((0..group.order()).step_by(2).collect())?;
    let rho = ProjectiveRep::new(l.as_group(&group), rho_mats)?;
    Ok(CliffordFamily { model, l, rho })
}

/// Rank of `{vec π(x)}`; equals `dim²` exactly when the images span the
/// full matrix algebra.
pub fn span_rank(rep: &ProjectiveRep) -> usize {
    let d = rep.dim();
    let n = rep.group().order();
    let mut m = CMat::zeros(d * d, n);
    for x in 0..n {
        m.set_column(x, &linalg::vectorize(rep.matrix(x)));
    }
    linalg::rank(&m)
}

fn matrix_key(m: &CMat) -> Vec<i64> {
    m.iter()
        .flat_map(|z| [(z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64])
        .collect()
}

/// The finite matrix group generated by unitary `gens`, elements in
/// breadth-first discovery order starting from the identity.
pub fn matrix_group(label: &str, gens: &[CMat], caps: &Caps) -> Result<ErrorModel> {
    let d = gens.first().map(|g| g.nrows()).ok_or_else(|| Error::Precondition("no generators".into()))?;
    let mut elements = vec![linalg::identity(d)];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(matrix_key(&elements[0]), 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let next = &elements[i] * g;
            let key = matrix_key(&next);
            if !index.contains_key(&key) {
                if elements.len() >= caps.max_table_order {
                    return Err(Error::CapExceeded {
                        what: "matrix group order",
                        value: elements.len() + 1,
                        cap: caps.max_table_order,
                    });
                }
                index.insert(key, elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    let mul = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index.get(&matrix_key(&(a * b))).copied().ok_or_else(|| Error::Precondition("generators do not close".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let group = Arc::new(FiniteGroup::from_table(label, mul, 0)?);
    ErrorModel::new(ProjectiveRep::new(group, elements)?)
}

/// The single-qubit Pauli group `⟨X, Z, iI⟩` of order 16.
pub fn pauli_group_p1(caps: &Caps) -> Result<ErrorModel> {
    let i = linalg::identity(2) * c(0.0, 1.0);
    matrix_group("P1", &[shift(2), clock(2), i], caps)
}

/// Quotient by the center, with `π(x) = λ(s_x)` for the minimal coset
/// representative `s_x`.
pub fn pem_from_em(em: &ErrorModel) -> Result<ProjectiveErrorModel> {
    let e = em.group();
    let z = e.center();
    let (q, _) = e.quotient(&z)?;
    let reps = e.coset_representatives(&z);
    let matrices = reps.iter().map(|&s| em.rep().matrix(s).clone()).collect();
    ProjectiveErrorModel::new(ProjectiveRep::new(Arc::new(q), matrices)?)
}

/// `E' = C_n ×_{σ'} G` with `(z₁,x₁)(z₂,x₂) = (z₁+z₂+s'(x₁,x₂), x₁x₂)`,
/// element `(z, x)` at `z·|G| + x`, and `λ'(z, x) = ζₙᶻ f(x) π(x)`.
pub fn em_from_pem(pem: &ProjectiveErrorModel, sigma_prime: &Cocycle, n: usize, f: &[Phase]) -> Result<ErrorModel> {
    let g = pem.group();
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    sigma_prime.check_same_group(pem.cocycle())?;
    if f.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            got: f.len(),
        });
    }
    let s: Vec<u64> = sigma_prime
        .table()
        .iter()
        .map(|p| p.scaled_num(n as u64).ok_or_else(|| Error::Precondition(format!("cocycle value {p} is not an {n}-th root of unity"))))
        .collect::<Result<_>>()?;
    let twisted = coboundary(g, f).multiply(pem.cocycle())?;
    if !twisted.same_as(sigma_prime) {
        return Err(Error::Precondition("δf·σ differs from σ'".into()));
    }
    let order = g.order();
    let total = n * order;
    let cap = Caps::default().max_table_order;
    if total > cap {
        return Err(Error::CapExceeded {
            what: "extension order",
            value: total,
            cap,
        });
    }
    let mul = (0..total)
        .map(|a| {
            let (z1, x1) = (a / order, a % order);
            (0..total)
                .map(|b| {
                    let (z2, x2) = (b / order, b % order);
                    let z = (z1 + z2 + s[x1 * order + x2] as usize) % n;
                    z * order + g.mul(x1, x2)
                })
                .collect()
        })
        .collect();
    let ext = Arc::new(FiniteGroup::from_table(format!("C{n}x{}", g.label()), mul, 0)?);
    let zn = zeta(n);
    let matrices = (0..total)
        .map(|a| {
            let (z, x) = (a / order, a % order);
            pem.matrix(x) * (zn.powu(z as u32) * f[x].to_complex())
        })
        .collect();
    ErrorModel::new(ProjectiveRep::new(ext, matrices)?)
}

/// Model spec grammar: `pauli:n`, `genpauli:n`, `xp:n`, `c2d2n:n`,
/// `oddfam:n`, `prod(<spec>,<spec>)`, `permprod(<spec>,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Pauli(usize),
    GenPauli(usize),
    Xp(usize),
    C2D2n(usize),
    OddFamily(usize),
    Product(Box<ModelSpec>, Box<ModelSpec>),
    PermProduct(Box<ModelSpec>, usize),
}

impl ModelSpec {
    pub fn build(&self, caps: &Caps) -> Result<ProjectiveErrorModel> {
        match self {
            ModelSpec::Pauli(n) => pauli_model(*n, caps),
            ModelSpec::GenPauli(n) => gen_pauli_model(*n, caps),
            ModelSpec::Xp(n) => dihedral_xp_model(*n, caps),
            ModelSpec::C2D2n(n) => Ok(family_c2_x_d2n(*n, caps)?.model),
            ModelSpec::OddFamily(n) => Ok(family_odd(*n, caps)?.model),
            ModelSpec::Product(a, b) => {
                let (a, b) = (a.build(caps)?, b.build(caps)?);
                product_model(&a, &b, caps)
            }
            ModelSpec::PermProduct(m, n) => perm_product_model(&m.build(caps)?, *n, caps),
        }
    }

    /// The Clifford-code data for the two family specs.
    pub fn family(&self, caps: &Caps) -> Result<Option<CliffordFamily>> {
        match self {
            ModelSpec::C2D2n(n) => family_c2_x_d2n(*n, caps).map(Some),
            ModelSpec::OddFamily(n) => family_odd(*n, caps).map(Some),
            _ => Ok(None),
        }
    }
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(p: &mut SpecParser<'_>, depth: usize) -> Result<ModelSpec> {
            p.check_depth(depth)?;
            let name = p.ident()?;
            match name {
                "prod" => {
                    p.eat('(')?;
                    let a = parse(p, depth + 1)?;
                    p.eat(',')?;
                    let b = parse(p, depth + 1)?;
                    p.eat(')')?;
                    Ok(ModelSpec::Product(Box::new(a), Box::new(b)))
                }
                "permprod" => {
                    p.eat('(')?;
                    let m = parse(p, depth + 1)?;
                    p.eat(',')?;
                    let n = p.number()?;
                    p.eat(')')?;
                    Ok(ModelSpec::PermProduct(Box::new(m), n))
                }
                _ => {
                    p.eat(':')?;
                    let n = p.number()?;
                    match name {
                        "pauli" => Ok(ModelSpec::Pauli(n)),
                        "genpauli" => Ok(ModelSpec::GenPauli(n)),
                        "xp" => Ok(ModelSpec::Xp(n)),
                        "c2d2n" => Ok(ModelSpec::C2D2n(n)),
                        "oddfam" => Ok(ModelSpec::OddFamily(n)),
                        _ => Err(p.error()),
                    }
                }
            }
        }
        let mut p = SpecParser::new(s);
        let spec = parse(&mut p, 0)?;
        p.finish()?;
        Ok(spec)
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Pauli(n) => write!(f, "pauli:{n}"),
            ModelSpec::GenPauli(n) => write!(f, "genpauli:{n}"),
            ModelSpec::Xp(n) => write!(f, "xp:{n}"),
            ModelSpec::C2D2n(n) => write!(f, "c2d2n:{n}"),
            ModelSpec::OddFamily(n) => write!(f, "oddfam:{n}"),
            ModelSpec::Product(a, b) => write!(f, "prod({a},{b})"),
            ModelSpec::PermProduct(m, n) => write!(f, "permprod({m},{n})"),
        }
    }
}
