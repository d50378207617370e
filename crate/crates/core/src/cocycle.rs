//! 2-cocycles and phase functions with exact phase arithmetic.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::phase::Phase;
use crate::zmod::solve_mod;

/// A table `σ: G × G → T` of exact phases, row-major.
#[derive(Clone)]
pub struct Cocycle {
    group: Arc<FiniteGroup>,
    table: Arc<[Phase]>,
}

impl Cocycle {
    pub fn new(group: Arc<FiniteGroup>, table: Vec<Phase>) -> Result<Self> {
        let n = group.order();
        if table.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: table.len(),
            });
        }
        Ok(Cocycle {
            group,
            table: table.into(),
        })
    }

    pub fn from_fn(group: Arc<FiniteGroup>, f: impl Fn(usize, usize) -> Phase) -> Self {
        let n = group.order();
        let table: Vec<Phase> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| f(x, y)).collect();
        Cocycle {
            group,
            table: table.into(),
        }
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        Self::from_fn(group, |_, _| Phase::ONE)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Phase {
        self.table[x * self.group.order() + y]
    }

    pub fn table(&self) -> &[Phase] {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|p| p.is_one())
    }

    /// First triple violating `σ(x,y)σ(xy,z) = σ(x,yz)σ(y,z)`.
    pub fn identity_violation(&self) -> Option<(usize, usize, usize)> {
        let g = &self.group;
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                let sxy = self.get(x, y);
                for z in g.elements() {
                    if sxy * self.get(xy, z) != self.get(x, g.mul(y, z)) * self.get(y, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn verify(&self) -> bool {
        self.identity_violation().is_none()
    }

    /// Restriction to `h`, as a cocycle on `h.as_group(parent)`.
    pub fn restrict(&self, h: &Subgroup) -> Cocycle {
        let sub = h.as_group(&self.group);
        let m = h.members();
        Cocycle::from_fn(sub, |i, j| self.get(m[i], m[j]))
    }

    pub fn multiply(&self, other: &Cocycle) -> Result<Cocycle> {
        self.check_same_group(other)?;
        let table = self.table.iter().zip(other.table.iter()).map(|(&a, &b)| a * b).collect();
        Cocycle::new(self.group.clone(), table)
    }

    pub fn conjugate(&self) -> Cocycle {
        Cocycle {
            group: self.group.clone(),
            table: self.table.iter().map(|p| p.conj()).collect(),
        }
    }

    pub fn check_same_group(&self, other: &Cocycle) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group {
            Ok(())
        } else {
            Err(Error::CocycleMismatch)
        }
    }

    /// Exact equality on the same group table.
    pub fn same_as(&self, other: &Cocycle) -> bool {
        self.check_same_group(other).is_ok()
            && (Arc::ptr_eq(&self.table, &other.table) || self.table == other.table)
    }

    /// Least common multiple of the phase denominators.
    pub fn common_denominator(&self) -> u64 {
        self.table.iter().fold(1, |acc, p| acc.lcm(&p.den()))
    }

    /// Some `f: G → T` with `δf = σ`, or `None` when `σ` is not a
    /// coboundary.
    ///
    /// If `δf = σ` with `σ` valued in `C_m` then `f^m` is a homomorphism,
    /// so `f` takes values in `C_{m·e}` with `e` the exponent of `G`; solving
    /// over `Z_{m·e}` is therefore conclusive.
    pub fn find_trivializing_phase(&self) -> Option<Vec<Phase>> {
        let g = &self.group;
        let n = g.order();
        let modulus = self.common_denominator() * g.exponent() as u64;
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut row = vec![0i64; n];
                row[x] += 1;
                row[y] += 1;
                row[g.mul(x, y)] -= 1;
                rows.push(row);
                let s = self.get(x, y).scaled_num(modulus).expect("denominator divides modulus");
                rhs.push(s as i64);
            }
        }
        let sol = solve_mod(&rows, &rhs, n, modulus)?;
        let f: Vec<Phase> = sol
            .into_iter()
            .map(|v| Phase::new(v as i64, modulus).expect("positive modulus"))
            .collect();
        debug_assert!(coboundary(g, &f).same_as(self));
        Some(f)
    }

    pub fn to_json(&self) -> CocycleJson {
        CocycleJson {
            order: self.group.order(),
            table: self.table.to_vec(),
        }
    }

    pub fn from_json(group: Arc<FiniteGroup>, json: CocycleJson) -> Result<Self> {
        if json.order != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: json.order,
            });
        }
        let c = Cocycle::new(group, json.table)?;
        match c.identity_violation() {
            Some((x, y, z)) => Err(Error::CocycleIdentity(x, y, z)),
            None => Ok(c),
        }
    }
}

impl fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.group.order();
        writeln!(f, "Cocycle on {} [", self.group.label())?;
        for x in 0..n {
            let row: Vec<String> = (0..n).map(|y| self.get(x, y).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `(δf)(x,y) = f(x) f(y) conj(f(xy))` for `f` indexed by elements of `g`.
pub fn coboundary(g: &Arc<FiniteGroup>, f: &[Phase]) -> Cocycle {
    assert_eq!(f.len(), g.order());
    Cocycle::from_fn(g.clone(), |x, y| f[x] * f[y] * f[g.mul(x, y)].conj())
}

/// JSON cocycle dump: `table` holds `[num, den]` pairs, row-major.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleJson {
    pub order: usize,
    pub table: Vec<Phase>,
}

/// A phase per member of a subgroup; `values[i]` belongs to
/// `domain.members()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseFunction {
    domain: Subgroup,
    values: Vec<Phase>,
}

impl PhaseFunction {
    pub fn new(domain: Subgroup, values: Vec<Phase>) -> Result<Self> {
        if values.len() != domain.order() {
            return Err(Error::DimensionMismatch {
                expected: domain.order(),
                got: values.len(),
            });
        }
        Ok(PhaseFunction { domain, values })
    }

    pub fn constant_one(domain: Subgroup) -> Self {
        let values = vec![Phase::ONE; domain.order()];
        PhaseFunction { domain, values }
    }

    /// Builds `f` from `(element, phase)` pairs; unlisted members map to 1.
    pub fn from_pairs(domain: Subgroup, pairs: &[(usize, Phase)]) -> Result<Self> {
        let mut values = vec![Phase::ONE; domain.order()];
        for &(x, p) in pairs {
            let i = domain
                .position(x)
                .ok_or_else(|| Error::Precondition(format!("element {x} is not in the subgroup")))?;
            values[i] = p;
        }
        Ok(PhaseFunction { domain, values })
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    /// Value at a parent-group element of the domain.
    pub fn at(&self, x: usize) -> Option<Phase> {
        self.domain.position(x).map(|i| self.values[i])
    }

    /// `δf` on the domain, as a cocycle on `domain.as_group(parent)`.
    pub fn coboundary(&self, parent: &FiniteGroup) -> Cocycle {
        coboundary(&self.domain.as_group(parent), &self.values)
    }

    pub fn restrict(&self, sub: &Subgroup) -> Result<Self> {
        let values = sub
            .members()
            .iter()
            .map(|&x| self.at(x).ok_or_else(|| Error::Precondition("not a subgroup of the domain".into())))
            .collect::<Result<_>>()?;
        Ok(PhaseFunction {
            domain: sub.clone(),
            values,
        })
    }

    /// Pointwise product on the same domain.
    pub fn times(&self, other: &PhaseFunction) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::Precondition("phase functions have different domains".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| a * b).collect();
        Ok(PhaseFunction {
            domain: self.domain.clone(),
            values,
        })
    }

    /// Phase file form: element index → `[num, den]`.
    pub fn to_map(&self) -> std::collections::BTreeMap<usize, Phase> {
        self.domain.members().iter().copied().zip(self.values.iter().copied()).collect()
    }
}
