//! Kraus channels generated by error models, Knill–Laflamme tests and
//! recovery synthesis.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::CodeSpace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{self, CMat, C64, TOL_SCAN, TOL_STRUCT};
use crate::models::ProjectiveErrorModel;

/// Probabilities must sum to one within this.
const TOL_PROB: f64 = 1e-12;
/// Gram eigenvalues below this are treated as zero in the recovery.
const TOL_GRAM: f64 = 1e-12;
const RANDOM_STATES: usize = 20;
const STATE_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct KrausChannel {
    ambient_dim: usize,
    kraus: Vec<CMat>,
}

impl KrausChannel {
    pub fn new(kraus: Vec<CMat>) -> Result<Self> {
        let Some(first) = kraus.first() else {
            return Err(Error::Precondition("a channel needs at least one Kraus operator".into()));
        };
        let d = first.nrows();
        for k in &kraus {
            if k.nrows() != d || k.ncols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: if k.nrows() != d { k.nrows() } else { k.ncols() },
                });
            }
        }
        let ch = KrausChannel { ambient_dim: d, kraus };
        let defect = linalg::frob(&(ch.completeness() - linalg::identity(d)));
        if !(defect < TOL_STRUCT) {
            return Err(Error::Precondition(format!("Kraus operators are not trace preserving ({defect:.3e})")));
        }
        Ok(ch)
    }

    pub fn identity(d: usize) -> Self {
        KrausChannel {
            ambient_dim: d,
            kraus: vec![linalg::identity(d)],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn kraus(&self) -> &[CMat] {
        &self.kraus
    }

    /// `Σ K_i* K_i`
    pub fn completeness(&self) -> CMat {
        let d = self.ambient_dim;
        self.kraus.iter().fold(CMat::zeros(d, d), |acc, k| acc + k.adjoint() * k)
    }

    pub fn apply(&self, rho: &CMat) -> CMat {
        let d = self.ambient_dim;
        self.kraus
            .iter()
            .fold(CMat::zeros(d, d), |acc, k| acc + k * rho * k.adjoint())
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &KrausChannel) -> Result<KrausChannel> {
        if self.ambient_dim != first.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: first.ambient_dim,
            });
        }
        let kraus = self
            .kraus
            .iter()
            .flat_map(|a| first.kraus.iter().map(move |b| a * b))
            .collect();
        Ok(KrausChannel {
            ambient_dim: self.ambient_dim,
            kraus,
        })
    }

    pub fn to_json(&self) -> ChannelJson {
        ChannelJson {
            ambient_dim: self.ambient_dim,
            kraus: self.kraus.iter().map(linalg::to_pairs).collect(),
        }
    }

    pub fn from_json(json: &ChannelJson) -> Result<Self> {
        let d = json.ambient_dim;
        let kraus = json
            .kraus
            .iter()
            .map(|m| linalg::from_pairs(d, d, m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kraus)
    }
}

/// Channel file schema: Kraus matrices, row-major `[re, im]` entries.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChannelJson {
    pub ambient_dim: usize,
    pub kraus: Vec<Vec<[f64; 2]>>,
}

/// An error distribution over the group of a model.
#[derive(Clone, Debug, PartialEq)]
pub enum Distribution {
    Uniform,
    Point(usize),
    Explicit(Vec<f64>),
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "uniform" {
            return Ok(Distribution::Uniform);
        }
        if let Some(x) = s.strip_prefix("point:") {
            return x
                .trim()
                .parse()
                .map(Distribution::Point)
                .map_err(|_| Error::InvalidSpec(s.to_string()));
        }
        Err(Error::InvalidSpec(s.to_string()))
    }
}

impl Distribution {
    pub fn probabilities(&self, g: &FiniteGroup) -> Result<Vec<f64>> {
        let n = g.order();
        match self {
            Distribution::Uniform => Ok(vec![1.0 / n as f64; n]),
            Distribution::Point(x) => {
                g.check_element(*x)?;
                let mut p = vec![0.0; n];
                p[*x] = 1.0;
                Ok(p)
            }
            Distribution::Explicit(p) => Ok(p.clone()),
        }
    }
}

fn check_distribution(g: &FiniteGroup, p: &[f64]) -> Result<()> {
    if p.len() != g.order() {
        return Err(Error::BadDistribution(format!("{} weights for a group of order {}", p.len(), g.order())));
    }
    if let Some(x) = p.iter().position(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::BadDistribution(format!("weight of element {x} is {}", p[x])));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > TOL_PROB {
        return Err(Error::BadDistribution(format!("weights sum to {total}")));
    }
    Ok(())
}

/// `N_{π,p}(ρ) = Σ p(x) π(x) ρ π(x)*`; zero-weight elements are dropped.
pub fn channel_from_model(model: &ProjectiveErrorModel, p: &[f64]) -> Result<KrausChannel> {
    check_distribution(model.group(), p)?;
    let kraus = p
        .iter()
        .enumerate()
        .filter(|(_, w)| **w > 0.0)
        .map(|(x, w)| model.matrix(x) * C64::from(w.sqrt()))
        .collect();
    KrausChannel::new(kraus)
}

/// `N_{U,p}`: no error with probability `p`, the error `π(x)` otherwise.
pub fn single_unitary(model: &ProjectiveErrorModel, x: usize, p: f64) -> Result<KrausChannel> {
    let g = model.group();
    g.check_element(x)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadDistribution(format!("probability {p}")));
    }
    let mut weights = vec![0.0; g.order()];
    weights[g.identity()] += p;
    weights[x] += 1.0 - p;
    channel_from_model(model, &weights)
}

fn check_dims(w: &CodeSpace, d: usize) -> Result<()> {
    if w.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            expected: w.ambient_dim(),
            got: d,
        });
    }
    Ok(())
}

fn compressed_scalar(p: &CMat, x: &CMat, k: usize) -> Option<C64> {
    let pxp = p * x * p;
    let c = pxp.trace() / k as f64;
    (linalg::frob(&(pxp - p * c)) < TOL_SCAN).then_some(c)
}

/// `c` with `P X P = c P`, if any.
pub fn kl_detectable(w: &CodeSpace, x: &CMat) -> Result<Option<C64>> {
    check_dims(w, x.nrows())?;
    check_dims(w, x.ncols())?;
    Ok(compressed_scalar(w.projector(), x, w.dim()))
}

/// First pair `(i, j)` with `P K_i* K_j P ∉ C·P`.
pub fn kl_witness(w: &CodeSpace, n: &KrausChannel) -> Result<Option<(usize, usize)>> {
    check_dims(w, n.ambient_dim())?;
    let p = w.projector();
    let ks = n.kraus();
    for i in 0..ks.len() {
        let ki = ks[i].adjoint();
        for j in i..ks.len() {
            if compressed_scalar(p, &(&ki * &ks[j]), w.dim()).is_none() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn kl_correctable(w: &CodeSpace, n: &KrausChannel) -> Result<bool> {
    Ok(kl_witness(w, n)?.is_none())
}

/// Recovery from the Knill–Laflamme conditions: diagonalise the Gram
/// matrix of `P K_i* K_j P`, then map each resulting error subspace back
/// onto the code by the partial isometry `P F_l* / √d_l`.
pub fn build_recovery(w: &CodeSpace, n: &KrausChannel) -> Result<KrausChannel> {
    if let Some((i, j)) = kl_witness(w, n)? {
        return Err(Error::NotCorrectable(i, j));
    }
    let p = w.projector();
    let k = w.dim();
    let d = n.ambient_dim();
    let ks = n.kraus();
    let m = ks.len();
    let mut gram = CMat::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            gram[(i, j)] = (p * ks[i].adjoint() * &ks[j] * p).trace() / k as f64;
        }
    }
    // hermitian up to rounding
    let gram = (&gram + gram.adjoint()) * C64::from(0.5);
    let eig = gram.symmetric_eigen();

    let mut recovery = Vec::new();
    let mut covered = CMat::zeros(d, d);
    for (l, &dl) in eig.eigenvalues.iter().enumerate() {
        if dl <= TOL_GRAM {
            continue;
        }
        let u = eig.eigenvectors.column(l);
        let f = ks
            .iter()
            .zip(u.iter())
            .fold(CMat::zeros(d, d), |acc, (kk, ul)| acc + kk * *ul);
        let r = p * f.adjoint() * C64::from(1.0 / dl.sqrt());
        covered += r.adjoint() * &r;
        recovery.push(r);
    }
    let rest = linalg::identity(d) - covered;
    if linalg::frob(&rest) > TOL_STRUCT {
        // the complement of the error subspaces is sent back into the code
        // through any fixed state; only trace preservation matters there
        let basis = linalg::column_space(&rest);
        let target = w.basis().column(0);
        for c in basis.column_iter() {
            recovery.push(target * c.adjoint());
        }
    }
    KrausChannel::new(recovery)
}

/// Test states supported on `W`: every `|e_i⟩⟨e_j|` over the code basis
/// and a fixed set of random pure code states.
pub fn code_test_states(w: &CodeSpace) -> Vec<CMat> {
    let b = w.basis();
    let k = w.dim();
    let mut states = Vec::with_capacity(k * k + RANDOM_STATES);
    for i in 0..k {
        for j in 0..k {
            states.push(b.column(i) * b.column(j).adjoint());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(STATE_SEED);
    for _ in 0..RANDOM_STATES {
        let v = nalgebra::DVector::<C64>::from_fn(k, |_, _| {
            linalg::c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let v = b * v.normalize();
        states.push(&v * v.adjoint());
    }
    states
}

/// `max ‖(R∘N)(ρ) − ρ‖_F` over [`code_test_states`].
pub fn verify_recovery(w: &CodeSpace, n: &KrausChannel, r: &KrausChannel) -> Result<f64> {
    check_dims(w, n.ambient_dim())?;
    check_dims(w, r.ambient_dim())?;
    Ok(code_test_states(w)
        .iter()
        .map(|rho| linalg::frob(&(r.apply(&n.apply(rho)) - rho)))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{detectable_set, stabilizer_code};
    use crate::cocycle::PhaseFunction;
    use crate::config::Caps;
    use crate::models::pauli_model;

    fn bell() -> (ProjectiveErrorModel, CodeSpace) {
        let m = pauli_model(2, &Caps::default()).unwrap();
        let s = m.group().subgroup_generated(&[10, 5]).unwrap();
        let f = PhaseFunction::constant_one(s.clone());
        let w = stabilizer_code(&m, &s, &f).unwrap().unwrap();
        (m, w)
    }

    #[test]
    fn point_mass_is_identity() {
        let m = pauli_model(1, &Caps::default()).unwrap();
        let p = Distribution::Point(0).probabilities(m.group()).unwrap();
        let ch = channel_from_model(&m, &p).unwrap();
        assert_eq!(ch.kraus().len(), 1);
        assert!(linalg::frob(&(&ch.kraus()[0] - linalg::identity(2))) < 1e-12);
    }

    #[test]
    fn bad_distributions() {
        let m = pauli_model(1, &Caps::default()).unwrap();
        assert!(channel_from_model(&m, &[0.5, 0.5, 0.1, -0.1]).is_err());
        assert!(channel_from_model(&m, &[0.5, 0.5]).is_err());
        assert!(channel_from_model(&m, &[0.3, 0.3, 0.3, 0.3]).is_err());
        assert!("point:x".parse::<Distribution>().is_err());
    }

    #[test]
    fn identity_channel_recovery() {
        let (_, w) = bell();
        let n = KrausChannel::identity(4);
        assert!(kl_correctable(&w, &n).unwrap());
        let r = build_recovery(&w, &n).unwrap();
        assert!(verify_recovery(&w, &n, &r).unwrap() < 1e-12);
    }

    #[test]
    fn bell_code_single_qubit_errors() {
        let (m, w) = bell();
        // uniform over the detectable set, which for this code is all of G
        let det: Vec<usize> = detectable_set(&m, &w).unwrap().into_iter().map(|(x, _)| x).collect();
        assert_eq!(det.len(), 16);
        // bit flip on the first qubit
        let x1 = 8;
        let n = single_unitary(&m, x1, 0.7).unwrap();
        assert!(kl_correctable(&w, &n).unwrap());
        let r = build_recovery(&w, &n).unwrap();
        assert!(verify_recovery(&w, &n, &r).unwrap() < 1e-7);
    }

    #[test]
    fn one_dimensional_code_is_not_protected_against_everything() {
        // the +1 eigenvector of X in the one-qubit model does not detect Z
        let m = pauli_model(1, &Caps::default()).unwrap();
        let x = m.group().subgroup_generated(&[2]).unwrap();
        let w = stabilizer_code(&m, &x, &PhaseFunction::constant_one(x.clone()))
            .unwrap()
            .unwrap();
        let two = CodeSpace::whole(2);
        let n = channel_from_model(&m, &[0.25; 4]).unwrap();
        // every operator is detectable on a one-dimensional code
        assert!(kl_correctable(&w, &n).unwrap());
        let witness = kl_witness(&two, &n).unwrap();
        assert!(witness.is_some());
        assert!(matches!(build_recovery(&two, &n), Err(Error::NotCorrectable(_, _))));
    }

    #[test]
    fn composition_and_json() {
        let m = pauli_model(1, &Caps::default()).unwrap();
        let n = channel_from_model(&m, &[0.4, 0.2, 0.3, 0.1]).unwrap();
        let back = KrausChannel::from_json(&serde_json::from_str(&serde_json::to_string(&n.to_json()).unwrap()).unwrap()).unwrap();
        assert_eq!(back.kraus().len(), n.kraus().len());
        let nn = n.compose(&back).unwrap();
        assert!(linalg::frob(&(nn.completeness() - linalg::identity(2))) < 1e-9);
    }
}
