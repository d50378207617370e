//! Finite groups as explicit multiplication tables.
//!
//! Elements are the indices `0..order`. Every constructor in this module
//! enumerates elements lexicographically in their natural coordinates, so the
//! identity is always index `0` and tables are reproducible run to run.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};

/// Above this order associativity is checked on a random sample of triples.
const FULL_ASSOCIATIVITY_SCAN: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 50_000;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    element_names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, validating the
    /// group axioms.
    pub fn from_table(label: impl Into<String>, mul: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if identity >= order {
            return Err(Error::ElementOutOfRange(identity, order));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &mul {
            if row.len() != order {
                return Err(Error::InvalidTable("table is not square".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::ElementOutOfRange(v, order));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(label.into(), order, flat, identity)
    }

    fn from_flat(label: String, order: usize, mul: Vec<u32>, identity: usize) -> Result<Self> {
        let at = |x: usize, y: usize| mul[x * order + y] as usize;
        for x in 0..order {
            if at(identity, x) != x || at(x, identity) != x {
                return Err(Error::InvalidTable(format!("{identity} is not an identity")));
            }
        }
        // Latin-square check: every row and column is a permutation.
        let mut seen = vec![usize::MAX; order];
        for x in 0..order {
            for y in 0..order {
                let v = at(x, y);
                if seen[v] == x {
                    return Err(Error::InvalidTable(format!("row {x} repeats {v}")));
                }
                seen[v] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..order {
            for x in 0..order {
                let v = at(x, y);
                if seen[v] == y {
                    return Err(Error::InvalidTable(format!("column {y} repeats {v}")));
                }
                seen[v] = y;
            }
        }
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let y = (0..order).find(|&y| at(x, y) == identity).expect("latin square");
            inv[x] = y as u32;
        }
        let group = FiniteGroup {
            label,
            order,
            mul,
            identity,
            inv,
            element_names: None,
        };
        if let Some((x, y, z)) = group.associativity_violation() {
            return Err(Error::InvalidTable(format!("not associative at ({x}, {y}, {z})")));
        }
        Ok(group)
    }

    /// Builds a group from a table produced by one of the trusted
    /// constructors below. Inverses are derived; axioms are not rechecked.
    fn from_trusted(label: String, order: usize, mul: Vec<u32>, names: Option<Vec<String>>) -> Self {
        let mut inv = vec![0u32; order];
        for x in 0..order {
            for y in 0..order {
                if mul[x * order + y] == 0 {
                    inv[x] = y as u32;
                    break;
                }
            }
        }
        FiniteGroup {
            label,
            order,
            mul,
            identity: 0,
            inv,
            element_names: names,
        }
    }

    /// Full scan for small groups, seeded random sampling above.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        let check = |x, y, z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z));
        if n <= FULL_ASSOCIATIVITY_SCAN {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !check(x, y, z) {
                            return Some((x, y, z));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (x, y, z) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if !check(x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `x⁻¹ y x`
    pub fn conjugate_by(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), y), x)
    }

    pub fn element_name(&self, x: usize) -> String {
        match &self.element_names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements().fold(1, |acc, x| acc.lcm(&self.element_order(x)))
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(x, self.order))
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(vec![self.identity])
    }

    /// Smallest subgroup containing `gens`, by closure iteration.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            self.check_element(g)?;
        }
        Ok(Subgroup::from_sorted(self.closure(gens)))
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// A small generating set of `h`, chosen greedily in index order.
    pub fn generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for &x in h.members() {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
                if span.len() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Every subgroup, sorted by order and then by member list.
    ///
    /// Starts from the trivial subgroup and repeatedly adjoins single
    /// elements; every subgroup is reached since it is generated by adding
    /// its elements one at a time.
    pub fn all_subgroups(&self, caps: &Caps) -> Result<Vec<Subgroup>> {
        if self.order > caps.max_order {
            return Err(Error::CapExceeded {
                what: "group order for subgroup enumeration",
                value: self.order,
                cap: caps.max_order,
            });
        }
        let mut found: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        let trivial = vec![self.identity];
        found.insert(trivial.clone(), Vec::new());
        let mut queue = VecDeque::from([(trivial, Vec::<usize>::new())]);
        while let Some((members, gens)) = queue.pop_front() {
            for g in 0..self.order {
                if members.binary_search(&g).is_ok() {
                    continue;
                }
                let mut next_gens = gens.clone();
                next_gens.push(g);
                let next = self.closure(&next_gens);
                if !found.contains_key(&next) {
                    found.insert(next.clone(), next_gens.clone());
                    queue.push_back((next, next_gens));
                }
            }
        }
        let mut all: Vec<Vec<usize>> = found.into_keys().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(all.into_iter().map(Subgroup::from_sorted).collect())
    }

    /// Validates that `members` form a subgroup.
    pub fn subgroup(&self, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        for &x in &members {
            self.check_element(x)?;
        }
        let contains = |x: usize| members.binary_search(&x).is_ok();
        if !contains(self.identity) {
            return Err(Error::Precondition("subgroup must contain the identity".into()));
        }
        for &x in &members {
            if !contains(self.inv(x)) || !members.iter().all(|&y| contains(self.mul(x, y))) {
                return Err(Error::Precondition("member list is not closed".into()));
            }
        }
        Ok(Subgroup::from_sorted(members))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements()
            .all(|x| h.members().iter().all(|&y| h.contains(self.conjugate_by(y, x))))
    }

    /// Elements `x` with `x⁻¹ H x = H`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = self
            .elements()
            .filter(|&x| h.members().iter().all(|&y| h.contains(self.conjugate_by(y, x))))
            .collect();
        Subgroup::from_sorted(members)
    }

    pub fn center(&self) -> Subgroup {
        let members = self
            .elements()
            .filter(|&x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect();
        Subgroup::from_sorted(members)
    }

    /// One representative per left coset `xH`: the smallest index in each
    /// coset, listed in increasing order (so the identity represents `H`).
    pub fn coset_representatives(&self, h: &Subgroup) -> Vec<usize> {
        self.coset_table(h).0
    }

    /// Representatives, plus for each element the index of its coset.
    pub fn coset_table(&self, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &y in h.members() {
                coset_of[self.mul(x, y)] = idx;
            }
        }
        (reps, coset_of)
    }

    /// `G/N` on cosets (ordered by representative) and the projection map.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let (reps, coset_of) = self.coset_table(n);
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &r in &reps {
            for &s in &reps {
                mul.push(coset_of[self.mul(r, s)] as u32);
            }
        }
        let names = self
            .element_names
            .as_ref()
            .map(|names| reps.iter().map(|&r| format!("{}N", names[r])).collect());
        let label = format!("{}/N{}", self.label, n.order());
        Ok((FiniteGroup::from_trusted(label, k, mul, names), coset_of))
    }

    /// The subgroup `h` as a group in its own right; element `i` of the
    /// result is `h.members()[i]`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let k = h.order();
        let mut mul = Vec::with_capacity(k * k);
        for &x in h.members() {
            for &y in h.members() {
                mul.push(h.position(self.mul(x, y)).expect("closed") as u32);
            }
        }
        let names = self
            .element_names
            .as_ref()
            .map(|names| h.members().iter().map(|&x| names[x].clone()).collect());
        let label = format!("{}[{}]", self.label, k);
        let identity = h.position(self.identity).expect("contains identity");
        if identity == 0 {
            FiniteGroup::from_trusted(label, k, mul, names)
        } else {
            let inv = (0..k)
                .map(|i| h.position(self.inv(h.members()[i])).expect("closed") as u32)
                .collect();
            FiniteGroup {
                label,
                order: k,
                mul,
                identity,
                inv,
                element_names: names,
            }
        }
    }

    // ---- constructors ----

    pub fn cyclic(n: usize, caps: &Caps) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("cyclic group needs n >= 1".into()));
        }
        check_order(n, caps)?;
        let mul = (0..n).flat_map(|x| (0..n).map(move |y| ((x + y) % n) as u32)).collect();
        let names = (0..n).map(|x| x.to_string()).collect();
        Ok(Self::from_trusted(format!("Z{n}"), n, mul, Some(names)))
    }

    /// `D_n = ⟨a, b | aⁿ = b² = 1, bab = a⁻¹⟩` of order `2n`; element
    /// `bᵏaˡ` has index `k·n + l`.
    pub fn dihedral(n: usize, caps: &Caps) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec("dihedral group needs n >= 2".into()));
        }
        let order = 2 * n;
        check_order(order, caps)?;
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (k1, l1) = (x / n, x % n);
            for y in 0..order {
                let (k2, l2) = (y / n, y % n);
                // aˡ¹ bᵏ² = bᵏ² a^{±l₁}
                let l1 = if k2 == 1 { (n - l1) % n } else { l1 };
                let k = (k1 + k2) % 2;
                let l = (l1 + l2) % n;
                mul.push((k * n + l) as u32);
            }
        }
        let names = (0..order)
            .map(|x| {
                let (k, l) = (x / n, x % n);
                let b = if k == 1 { "b" } else { "" };
                match (k, l) {
                    (0, 0) => "1".to_string(),
                    (_, 0) => b.to_string(),
                    (_, 1) => format!("{b}a"),
                    _ => format!("{b}a^{l}"),
                }
            })
            .collect();
        Ok(Self::from_trusted(format!("D{n}"), order, mul, Some(names)))
    }

    /// `G₁ × G₂`, element `(g₁, g₂)` at index `g₁·|G₂| + g₂`.
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup, caps: &Caps) -> Result<Self> {
        let (n1, n2) = (g1.order, g2.order);
        let order = checked_order(n1.checked_mul(n2), caps)?;
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (x1, x2) = (x / n2, x % n2);
            for y in 0..order {
                let (y1, y2) = (y / n2, y % n2);
                mul.push((g1.mul(x1, y1) * n2 + g2.mul(x2, y2)) as u32);
            }
        }
        let names = (0..order)
            .map(|x| format!("({},{})", g1.element_name(x / n2), g2.element_name(x % n2)))
            .collect();
        let label = format!("{}x{}", g1.label, g2.label);
        Self::reindexed(label, order, mul, names, g1.identity * n2 + g2.identity)
    }

    /// `(Zₙ × Zₙ) ⋊ Z₂` with `Z₂` acting by inversion; element `(a, b, c)`
    /// at index `(a·n + b)·2 + c`.
    pub fn inversion_semidirect(n: usize, caps: &Caps) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::InvalidSpec("inversion semidirect product needs odd n >= 3".into()));
        }
        let order = checked_order(n.checked_mul(n).and_then(|v| v.checked_mul(2)), caps)?;
        let coords = |x: usize| (x / (2 * n), (x / 2) % n, x % 2);
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a1, b1, c1) = coords(x);
            for y in 0..order {
                let (a2, b2, c2) = coords(y);
                let (a2, b2) = if c1 == 1 { ((n - a2) % n, (n - b2) % n) } else { (a2, b2) };
                let (a, b, c) = ((a1 + a2) % n, (b1 + b2) % n, (c1 + c2) % 2);
                mul.push(((a * n + b) * 2 + c) as u32);
            }
        }
        let names = (0..order)
            .map(|x| {
                let (a, b, c) = coords(x);
                format!("({a},{b},{c})")
            })
            .collect();
        Ok(Self::from_trusted(format!("(Z{n}xZ{n})xiZ2"), order, mul, Some(names)))
    }

    /// `Gⁿ ⋊ Sₙ` with `Sₙ` permuting the copies. Elements are
    /// `(x₁, …, xₙ, τ)`, lexicographic with `τ` listed in lexicographic
    /// order of its image tuple. The product is
    /// `(x, τ)(y, τ') = ((x_i · y_{τ⁻¹(i)})_i, ττ')`.
    pub fn permutation_semidirect(g: &FiniteGroup, n: usize, caps: &Caps) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("permutation semidirect product needs n >= 1".into()));
        }
        let base = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(g.order));
        let order = base.and_then(|b| (1..=n).try_fold(b, |acc, k| acc.checked_mul(k)));
        let order = match order {
            Some(o) if o <= caps.max_perm_product => o,
            _ => {
                return Err(Error::CapExceeded {
                    what: "|G|^n * n!",
                    value: order.unwrap_or(usize::MAX),
                    cap: caps.max_perm_product,
                })
            }
        };
        check_order(order, caps)?;
        let perms = permutations(n);
        let nperm = perms.len();
        let perm_index: HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let perm_inv: Vec<Vec<usize>> = perms.iter().map(|p| invert_perm(p)).collect();
        let perm_mul: Vec<usize> = (0..nperm)
            .flat_map(|i| {
                let perms = &perms;
                let perm_index = &perm_index;
                (0..nperm).map(move |j| {
                    let prod: Vec<usize> = (0..n).map(|k| perms[i][perms[j][k]]).collect();
                    perm_index[prod.as_slice()]
                })
            })
            .collect();
        let decode = |x: usize| -> (Vec<usize>, usize) {
            let t = x % nperm;
            let mut rest = x / nperm;
            let mut xs = vec![0; n];
            for slot in xs.iter_mut().rev() {
                *slot = rest % g.order;
                rest /= g.order;
            }
            (xs, t)
        };
        let encode = |xs: &[usize], t: usize| xs.iter().fold(0, |acc, &v| acc * g.order + v) * nperm + t;
        let decoded: Vec<(Vec<usize>, usize)> = (0..order).map(decode).collect();
        let mut mul = Vec::with_capacity(order * order);
        let mut buf = vec![0; n];
        for (xs, t) in &decoded {
            let tinv = &perm_inv[*t];
            for (ys, u) in &decoded {
                for i in 0..n {
                    buf[i] = g.mul(xs[i], ys[tinv[i]]);
                }
                mul.push(encode(&buf, perm_mul[t * nperm + u]) as u32);
            }
        }
        let names = decoded
            .iter()
            .map(|(xs, t)| {
                let parts: Vec<String> = xs.iter().map(|&x| g.element_name(x)).collect();
                let perm: Vec<String> = perms[*t].iter().map(|v| (v + 1).to_string()).collect();
                format!("({};[{}])", parts.join(","), perm.join(""))
            })
            .collect();
        let identity = encode(&vec![g.identity; n], 0);
        let label = format!("{}^{n}xS{n}", g.label);
        Self::reindexed(label, order, mul, names, identity)
    }

    /// `Sₙ` on permutations in lexicographic order, `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize, caps: &Caps) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::InvalidSpec("symmetric group needs 1 <= n <= 6".into()));
        }
        let perms = permutations(n);
        let order = perms.len();
        check_order(order, caps)?;
        let index: HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut mul = Vec::with_capacity(order * order);
        for s in &perms {
            for t in &perms {
                let prod: Vec<usize> = (0..n).map(|k| s[t[k]]).collect();
                mul.push(index[prod.as_slice()] as u32);
            }
        }
        let names = perms
            .iter()
            .map(|p| p.iter().map(|v| (v + 1).to_string()).collect::<String>())
            .collect();
        Ok(Self::from_trusted(format!("S{n}"), order, mul, Some(names)))
    }

    /// Handles constructors whose identity might not sit at index 0 (for
    /// instance a product with a user-supplied table).
    fn reindexed(label: String, order: usize, mul: Vec<u32>, names: Vec<String>, identity: usize) -> Result<Self> {
        if identity == 0 {
            return Ok(Self::from_trusted(label, order, mul, Some(names)));
        }
        let mut g = Self::from_flat(label, order, mul, identity)?;
        g.element_names = Some(names);
        Ok(g)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                got: names.len(),
            });
        }
        self.element_names = Some(names);
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            order: self.order,
            mul: (0..self.order)
                .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
                .collect(),
            identity: self.identity,
            label: self.label.clone(),
            element_names: self.element_names.clone(),
        }
    }

    pub fn from_json(json: GroupJson) -> Result<Self> {
        if json.order != json.mul.len() {
            return Err(Error::InvalidTable(format!(
                "order {} but table has {} rows",
                json.order,
                json.mul.len()
            )));
        }
        let g = Self::from_table(json.label, json.mul, json.identity)?;
        match json.element_names {
            Some(names) => g.with_names(names),
            None => Ok(g),
        }
    }
}

fn check_order(order: usize, caps: &Caps) -> Result<()> {
    if order > caps.max_table_order {
        return Err(Error::CapExceeded {
            what: "group order",
            value: order,
            cap: caps.max_table_order,
        });
    }
    Ok(())
}

fn checked_order(order: Option<usize>, caps: &Caps) -> Result<usize> {
    let order = order.unwrap_or(usize::MAX);
    check_order(order, caps)?;
    Ok(order)
}

/// All permutations of `0..n` as image tuples, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// A subgroup, stored as the strictly increasing list of its members.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<usize>,
    as_group: OnceLock<Arc<FiniteGroup>>,
}

impl Subgroup {
    fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            members,
            as_group: OnceLock::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Index of `x` within `members()`.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&x| self.members.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    /// The subgroup as a standalone group, built once and cached.
    pub fn as_group(&self, parent: &FiniteGroup) -> Arc<FiniteGroup> {
        self.as_group
            .get_or_init(|| Arc::new(parent.subgroup_as_group(self)))
            .clone()
    }

    /// Maps a subgroup of `self.as_group()` back to the parent's indices.
    pub fn lift(&self, inner: &Subgroup) -> Subgroup {
        Subgroup::from_sorted(inner.members.iter().map(|&i| self.members[i]).collect())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Subgroup").field(&self.members).finish()
    }
}

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

/// JSON form of a multiplication table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_names: Option<Vec<String>>,
}

/// Group-spec grammar: `cyclic:4`, `dihedral:6`, `prod(<spec>,<spec>)`,
/// `invsd:3`, `permsd(<spec>,2)`, `sym:3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    InversionSemidirect(usize),
    PermutationSemidirect(Box<GroupSpec>, usize),
    Symmetric(usize),
}

const MAX_SPEC_DEPTH: usize = 16;

impl GroupSpec {
    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n, caps),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n, caps),
            GroupSpec::Product(a, b) => {
                let (a, b) = (a.build(caps)?, b.build(caps)?);
                FiniteGroup::direct_product(&a, &b, caps)
            }
            GroupSpec::InversionSemidirect(n) => FiniteGroup::inversion_semidirect(*n, caps),
            GroupSpec::PermutationSemidirect(g, n) => {
                let g = g.build(caps)?;
                FiniteGroup::permutation_semidirect(&g, *n, caps)
            }
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n, caps),
        }
    }

    /// Order implied by the spec, without building anything.
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Product(a, b) => a.order()?.checked_mul(b.order()?),
            GroupSpec::InversionSemidirect(n) => n.checked_mul(*n)?.checked_mul(2),
            GroupSpec::PermutationSemidirect(g, n) => {
                let base = g.order()?.checked_pow(u32::try_from(*n).ok()?)?;
                (1..=*n).try_fold(base, |acc, k| acc.checked_mul(k))
            }
            GroupSpec::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser::new(s);
        let spec = p.group(0)?;
        p.finish()?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Product(a, b) => write!(f, "prod({a},{b})"),
            GroupSpec::InversionSemidirect(n) => write!(f, "invsd:{n}"),
            GroupSpec::PermutationSemidirect(g, n) => write!(f, "permsd({g},{n})"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
        }
    }
}

/// Small recursive-descent helper shared by the group and model grammars.
pub(crate) struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        SpecParser { src, pos: 0 }
    }

    pub(crate) fn error(&self) -> Error {
        Error::InvalidSpec(self.src.to_string())
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    pub(crate) fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_' && c != '.')
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error());
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    pub(crate) fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error())
        }
    }

    pub(crate) fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let n = rest[..len].parse().map_err(|_| self.error())?;
        self.pos += len;
        Ok(n)
    }

    pub(crate) fn check_depth(&self, depth: usize) -> Result<()> {
        if depth > MAX_SPEC_DEPTH {
            Err(self.error())
        } else {
            Ok(())
        }
    }

    fn group(&mut self, depth: usize) -> Result<GroupSpec> {
        self.check_depth(depth)?;
        let name = self.ident()?;
        match name {
            "prod" => {
                self.eat('(')?;
                let a = self.group(depth + 1)?;
                self.eat(',')?;
                let b = self.group(depth + 1)?;
                self.eat(')')?;
                Ok(GroupSpec::Product(Box::new(a), Box::new(b)))
            }
            "permsd" => {
                self.eat('(')?;
                let g = self.group(depth + 1)?;
                self.eat(',')?;
                let n = self.number()?;
                self.eat(')')?;
                Ok(GroupSpec::PermutationSemidirect(Box::new(g), n))
            }
            _ => {
                self.eat(':')?;
                let n = self.number()?;
                match name {
                    "cyclic" => Ok(GroupSpec::Cyclic(n)),
                    "dihedral" => Ok(GroupSpec::Dihedral(n)),
                    "invsd" => Ok(GroupSpec::InversionSemidirect(n)),
                    "sym" => Ok(GroupSpec::Symmetric(n)),
                    _ => Err(self.error()),
                }
            }
        }
    }
}

/// Parses a comma-separated list of element indices, e.g. `1,4,7`.
pub fn parse_element_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::InvalidSpec(s.to_string())))
        .collect()
}

/// Distinct members as a set, for quick membership tests on arbitrary lists.
pub fn element_set(xs: &[usize]) -> HashSet<usize> {
    xs.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn assert_axioms(g: &FiniteGroup) {
        assert_eq!(g.associativity_violation(), None, "{}", g.label());
        for x in g.elements() {
            assert_eq!(g.mul(g.identity(), x), x);
            assert_eq!(g.mul(x, g.identity()), x);
            assert_eq!(g.mul(x, g.inv(x)), g.identity());
        }
    }

    #[test]
    fn cyclic_elements_have_order_dividing_n() {
        let g = FiniteGroup::cyclic(4, &caps()).unwrap();
        assert_eq!(g.order(), 4);
        assert_axioms(&g);
        for x in g.elements() {
            let x4 = g.mul(g.mul(x, x), g.mul(x, x));
            assert_eq!(x4, g.identity());
        }
        assert!(FiniteGroup::cyclic(0, &caps()).is_err());
    }

    #[test]
    fn dihedral_two_is_klein_four() {
        let g = FiniteGroup::dihedral(2, &caps()).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 2);
        assert!(FiniteGroup::dihedral(1, &caps()).is_err());
    }

    #[test]
    fn dihedral_relations() {
        let n = 5;
        let g = FiniteGroup::dihedral(n, &caps()).unwrap();
        assert_axioms(&g);
        let (a, b) = (1, n);
        assert_eq!(g.element_order(a), n);
        assert_eq!(g.element_order(b), 2);
        // bab = a⁻¹
        assert_eq!(g.mul(g.mul(b, a), b), g.inv(a));
        assert_eq!(g.element_name(n + 2), "ba^2");
    }

    #[test]
    fn inversion_semidirect_three_has_trivial_center() {
        let g = FiniteGroup::inversion_semidirect(3, &caps()).unwrap();
        assert_eq!(g.order(), 18);
        assert!(!g.is_abelian());
        assert_axioms(&g);
        // brute force: no nonidentity element commutes with everything
        let central: Vec<usize> = g
            .elements()
            .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
            .collect();
        assert_eq!(central, vec![0]);
        assert_eq!(g.center().order(), 1);
        assert!(FiniteGroup::inversion_semidirect(4, &caps()).is_err());
        assert!(FiniteGroup::inversion_semidirect(1, &caps()).is_err());
    }

    #[test]
    fn permutation_semidirect_orders_and_axioms() {
        let k4 = FiniteGroup::dihedral(2, &caps()).unwrap();
        let g = FiniteGroup::permutation_semidirect(&k4, 2, &caps()).unwrap();
        assert_eq!(g.order(), 32);
        assert_axioms(&g);
        let g1 = FiniteGroup::permutation_semidirect(&k4, 1, &caps()).unwrap();
        assert_eq!(g1.order(), 4);
        assert_eq!(g1.mul, k4.mul);
        let g3 = FiniteGroup::permutation_semidirect(&k4, 3, &caps()).unwrap();
        assert_eq!(g3.order(), 384);
        assert_eq!(g3.associativity_violation(), None);
        let tight = Caps {
            max_perm_product: 100,
            ..caps()
        };
        assert!(matches!(
            FiniteGroup::permutation_semidirect(&k4, 3, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn symmetric_groups() {
        for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            let g = FiniteGroup::symmetric(n, &caps()).unwrap();
            assert_eq!(g.order(), order);
            assert_axioms(&g);
        }
        assert!(!FiniteGroup::symmetric(3, &caps()).unwrap().is_abelian());
        assert!(FiniteGroup::symmetric(7, &caps()).is_err());
    }

    #[test]
    fn generated_subgroups() {
        let d4 = FiniteGroup::dihedral(4, &caps()).unwrap();
        assert_eq!(d4.subgroup_generated(&[1]).unwrap().order(), 4);
        assert_eq!(d4.subgroup_generated(&[]).unwrap().members(), &[0]);
        let k4 = FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2, &caps()).unwrap(),
            &FiniteGroup::cyclic(2, &caps()).unwrap(),
            &caps(),
        )
        .unwrap();
        // (1,0) and (0,1)
        assert_eq!(k4.subgroup_generated(&[2, 1]).unwrap().order(), 4);
        assert!(d4.subgroup_generated(&[8]).is_err());
    }

    #[test]
    fn subgroup_counts() {
        let z4 = FiniteGroup::cyclic(4, &caps()).unwrap();
        let subs = z4.all_subgroups(&caps()).unwrap();
        assert_eq!(subs.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 4]);
        let k4 = FiniteGroup::dihedral(2, &caps()).unwrap();
        assert_eq!(k4.all_subgroups(&caps()).unwrap().len(), 5);
        let d4 = FiniteGroup::dihedral(4, &caps()).unwrap();
        assert_eq!(d4.all_subgroups(&caps()).unwrap().len(), brute_force_subgroup_count(&d4));
        assert_eq!(d4.all_subgroups(&caps()).unwrap().len(), 10);
        let big = FiniteGroup::cyclic(65, &caps()).unwrap();
        assert!(big.all_subgroups(&caps()).is_err());
    }

    /// Every subset closed under multiplication, found by brute force.
    fn brute_force_subgroup_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..(1 << n))
            .filter(|mask| {
                let has = |x: usize| mask & (1 << x) != 0;
                has(g.identity())
                    && (0..n).all(|x| !has(x) || (0..n).all(|y| !has(y) || has(g.mul(x, y))))
            })
            .count()
    }

    #[test]
    fn subgroups_sorted_and_valid() {
        let s3 = FiniteGroup::symmetric(3, &caps()).unwrap();
        let subs = s3.all_subgroups(&caps()).unwrap();
        assert_eq!(subs.len(), 6);
        for w in subs.windows(2) {
            assert!((w[0].order(), w[0].members()) < (w[1].order(), w[1].members()));
        }
        for h in &subs {
            assert!(s3.subgroup(h.members().to_vec()).is_ok());
            assert_eq!(s3.order() % h.order(), 0);
            assert_eq!(h.order() * s3.coset_representatives(h).len(), s3.order());
        }
        assert_eq!(subs.iter().filter(|h| s3.is_normal(h)).count(), 3);
    }

    #[test]
    fn center_and_quotient_of_d4() {
        let d4 = FiniteGroup::dihedral(4, &caps()).unwrap();
        let z = d4.center();
        assert_eq!(z.members(), &[0, 2]); // {1, a²}
        let (q, proj) = d4.quotient(&z).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        for x in d4.elements() {
            for y in d4.elements() {
                assert_eq!(proj[d4.mul(x, y)], q.mul(proj[x], proj[y]));
            }
        }
        let not_normal = d4.subgroup_generated(&[4]).unwrap();
        assert!(matches!(d4.quotient(&not_normal), Err(Error::NotNormal)));
    }

    #[test]
    fn coset_representatives_of_whole_group() {
        let g = FiniteGroup::dihedral(3, &caps()).unwrap();
        assert_eq!(g.coset_representatives(&g.whole()), vec![0]);
        assert_eq!(g.coset_representatives(&g.trivial()).len(), 6);
    }

    #[test]
    fn from_table_rejects_bad_tables() {
        assert!(FiniteGroup::from_table("x", vec![], 0).is_err());
        assert!(FiniteGroup::from_table("x", vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(FiniteGroup::from_table("x", vec![vec![0, 1], vec![1, 0]], 1).is_err());
        assert!(FiniteGroup::from_table("x", vec![vec![0, 2], vec![1, 0]], 0).is_err());
        // latin square that is not associative
        let quasi = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table("loop", quasi, 0).is_err());
        let z3 = FiniteGroup::cyclic(3, &caps()).unwrap();
        let back = FiniteGroup::from_json(z3.to_json()).unwrap();
        assert_eq!(back, z3);
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["cyclic:4", "dihedral:6", "prod(cyclic:2,dihedral:4)", "invsd:3", "permsd(dihedral:2,2)", "sym:3"] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let g = spec.build(&caps()).unwrap();
            assert_eq!(Some(g.order()), spec.order());
        }
        for bad in ["", "cyclic", "cyclic:", "cyclic:x", "prod(cyclic:2)", "foo:3", "cyclic:2)", "sym:9"] {
            let parsed = bad.parse::<GroupSpec>();
            assert!(parsed.is_err() || parsed.unwrap().build(&caps()).is_err(), "{bad}");
        }
        let deep = "prod(".repeat(40) + "cyclic:1" + &",cyclic:1)".repeat(40);
        assert!(deep.parse::<GroupSpec>().is_err());
        assert!("cyclic:100000".parse::<GroupSpec>().unwrap().build(&caps()).is_err());
    }
}
