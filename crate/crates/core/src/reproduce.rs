//! End-to-end reproductions of the worked examples, each reported as a
//! list of named checks.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::codes::{self, classify, clifford_code, dicke_code, product_code, CodeReport};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{self, c, CMat, C64, TOL_STRUCT};
use crate::models::{dihedral_xp_model, family_c2_x_d2n, family_odd, gen_pauli_model, perm_product_model};
use crate::projrep::ProjectiveRep;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reproduction {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Reproduction {
    fn new(title: impl Into<String>) -> Self {
        Reproduction {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for Reproduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for ch in &self.checks {
            writeln!(f, "{}: {} ({})", if ch.pass { "PASS" } else { "FAIL" }, ch.name, ch.detail)?;
        }
        Ok(())
    }
}

/// Column order of the D₄ table: `1, a, a³, a², b, a²b, ab, a³b`, as
/// indices of [`FiniteGroup::dihedral`] (`bᵏaˡ` at `4k + l`).
pub const D4_COLUMNS: [usize; 8] = [0, 1, 3, 2, 4, 6, 7, 5];
pub const D4_COLUMN_NAMES: [&str; 8] = ["1", "a", "a^3", "a^2", "b", "a^2b", "ab", "a^3b"];
pub const D4_ROW_NAMES: [&str; 7] = ["rho1", "rho2", "rho3", "rho4", "rho5", "chi1", "chi2"];

/// Reference values of the D₄ table, `[re, im]` per column.
pub fn d4_reference() -> [[C64; 8]; 7] {
    let r = |v: [f64; 8]| v.map(|x| c(x, 0.0));
    [
        r([1., 1., 1., 1., 1., 1., 1., 1.]),
        r([1., 1., 1., 1., -1., -1., -1., -1.]),
        r([1., -1., -1., 1., 1., 1., -1., -1.]),
        r([1., -1., -1., 1., -1., -1., 1., 1.]),
        r([2., 0., 0., -2., 0., 0., 0., 0.]),
        [c(2., 0.), c(1., 1.), c(1., -1.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.)],
        [c(2., 0.), c(-1., -1.), c(-1., 1.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.)],
    ]
}

/// The computed table: linear characters ordered by their values on
/// `(a, b)`, the two-dimensional ordinary irreducible, the XP character and
/// its twist by the linear character that is `−1` on `a` and `1` on `b`.
pub fn d4_table(caps: &Caps) -> Result<Vec<[C64; 8]>> {
    let d4 = Arc::new(FiniteGroup::dihedral(4, caps)?);
    let (a, b) = (1, 4);
    let mut linear = codes::linear_characters(&d4);
    if linear.len() != 4 {
        return Err(Error::Precondition(format!("D4 has {} linear characters", linear.len())));
    }
    let sign = |p: crate::phase::Phase| p.to_complex().re < 0.0;
    linear.sort_by_key(|chi| (sign(chi[a]), sign(chi[b])));
    let row = |values: &dyn Fn(usize) -> C64| D4_COLUMNS.map(values);
    let mut rows: Vec<[C64; 8]> = linear.iter().map(|chi| row(&|x| chi[x].to_complex())).collect();

    let rot = CMat::from_row_slice(2, 2, &[c(0., 0.), c(-1., 0.), c(1., 0.), c(0., 0.)]);
    let refl = CMat::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]);
    let matrices = d4
        .elements()
        .map(|x| {
            let (k, l) = (x / 4, x % 4);
            (0..k).fold(linalg::identity(2), |m, _| m * &refl) * (0..l).fold(linalg::identity(2), |m, _| m * &rot)
        })
        .collect();
    let rho5 = ProjectiveRep::new(d4.clone(), matrices)?;
    if !rho5.cocycle().is_trivial() || !rho5.is_irreducible() {
        return Err(Error::Precondition("rho5 is not an ordinary irreducible".into()));
    }
    let ch5 = rho5.character();
    rows.push(row(&|x| ch5.at(x)));

    let pi1 = dihedral_xp_model(4, caps)?;
    let chi1 = pi1.rep().character();
    rows.push(row(&|x| chi1.at(x)));
    let rho3 = ProjectiveRep::new(
        d4.clone(),
        linear[2].iter().map(|p| CMat::from_element(1, 1, p.to_complex())).collect(),
    )?;
    let pi2 = pi1.rep().twist_by_linear(&rho3)?;
    let chi2 = pi2.character();
    rows.push(row(&|x| chi2.at(x)));
    Ok(rows)
}

/// Compares [`d4_table`] with [`d4_reference`] entry by entry.
pub fn d4_check(caps: &Caps) -> Result<Reproduction> {
    let computed = d4_table(caps)?;
    let reference = d4_reference();
    let mut rep = Reproduction::new("D4 character table");
    for (i, name) in D4_ROW_NAMES.iter().enumerate() {
        let dev = computed[i]
            .iter()
            .zip(&reference[i])
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        rep.check(name, dev < TOL_STRUCT, format!("max deviation {dev:.1e}"));
    }
    Ok(rep)
}

pub fn format_d4_table(rows: &[[C64; 8]]) -> String {
    let num = |x: f64| {
        if (x - x.round()).abs() < 1e-9 {
            format!("{}", x.round() as i64)
        } else {
            format!("{x:.4}")
        }
    };
    let fmt_entry = |z: &C64| {
        let im = match num(z.im.abs()).as_str() {
            "0" => None,
            "1" => Some("i".to_string()),
            m => Some(format!("{m}i")),
        };
        let re = num(z.re);
        match im {
            None if re == "-0" => "0".to_string(),
            None => re,
            Some(i) if re == "0" || re == "-0" => format!("{}{i}", if z.im < 0.0 { "-" } else { "" }),
            Some(i) => format!("{re}{}{i}", if z.im < 0.0 { "-" } else { "+" }),
        }
    };
    let mut s = format!("{:<6}", "");
    for name in D4_COLUMN_NAMES {
        s.push_str(&format!("{name:>7}"));
    }
    s.push('\n');
    for (name, row) in D4_ROW_NAMES.iter().zip(rows) {
        s.push_str(&format!("{name:<6}"));
        for z in row {
            s.push_str(&format!("{:>7}", fmt_entry(z)));
        }
        s.push('\n');
    }
    s
}

fn detail(r: &CodeReport) -> String {
    format!(
        "clifford={}, weak_stabilizer={}, stabilizer={}, |L|={}, |S|={}",
        r.flags.is_clifford,
        r.flags.is_weak_stabilizer,
        r.flags.is_stabilizer,
        r.logical.len(),
        r.stabilizer.len()
    )
}

/// The dimension-2 Clifford code in `C₂ × D_{2n}` with logical group the
/// `D_{2n}` factor and trivial stabilizer.
pub fn prop_c2_x_d2n(n: usize, caps: &Caps) -> Result<(Reproduction, CodeReport)> {
    let fam = family_c2_x_d2n(n, caps)?;
    let w = clifford_code(&fam.model, &fam.l, &fam.rho)?;
    let r = classify(&fam.model, &w, caps)?;
    let g = fam.model.group();
    let mut rep = Reproduction::new(format!("C2 x D_{{2n}} family, n = {n}"));
    rep.check("dim W = 2", w.dim() == 2, format!("dim W = {}", w.dim()));
    rep.check("classification", r.flags.is_clifford && !r.flags.is_weak_stabilizer && !r.flags.is_stabilizer, detail(&r));
    rep.check(
        "L is the dihedral factor",
        r.logical == fam.l.members() && r.logical.len() == 4 * n,
        format!("|L| = {}", r.logical.len()),
    );
    rep.check("S is trivial", r.stabilizer == [g.identity()], format!("|S| = {}", r.stabilizer.len()));
    let expected: Vec<usize> = g.elements().filter(|&x| !fam.l.contains(x) || x == g.identity()).collect();
    rep.check(
        "D = (G \\ L) u {1}",
        r.detectable == expected && expected.len() == 4 * n + 1,
        format!("|D| = {}", r.detectable.len()),
    );
    Ok((rep, r))
}

/// The dimension-`n` Clifford code in ambient dimension `2n` for odd `n`,
/// which is not a weak stabilizer code.
pub fn prop_odd_family(n: usize, caps: &Caps) -> Result<(Reproduction, CodeReport)> {
    let fam = family_odd(n, caps)?;
    let w = clifford_code(&fam.model, &fam.l, &fam.rho)?;
    let r = classify(&fam.model, &w, caps)?;
    let order = fam.model.group().order();
    let mut rep = Reproduction::new(format!("odd family, n = {n}"));
    rep.check(
        "dim W = n in dim V = 2n",
        w.dim() == n && fam.model.dim() == 2 * n,
        format!("dim W = {}, dim V = {}", w.dim(), fam.model.dim()),
    );
    rep.check("clifford", r.flags.is_clifford, detail(&r));
    let prod = r.logical.len() * r.stabilizer.len();
    rep.check(
        "|L|·|S| = 2n² < 4n² = |G|",
        prod == 2 * n * n && order == 4 * n * n,
        format!("|L|·|S| = {prod}, |G| = {order}"),
    );
    rep.check("not weak stabilizer", !r.flags.is_weak_stabilizer, detail(&r));
    let agrees = r.central_type.is_some_and(|ct| !ct.criterion && ct.criterion == ct.direct);
    rep.check("order criterion agrees with direct test", agrees, format!("{:?}", r.central_type));
    Ok((rep, r))
}

/// The Dicke code in `permprod(genpauli:2, n)`: a weak stabilizer code
/// that is not a Clifford code.
pub fn prop_dicke(n: usize, caps: &Caps) -> Result<(Reproduction, CodeReport)> {
    let base = gen_pauli_model(2, caps)?;
    let model = perm_product_model(&base, n, caps)?;
    let w = dicke_code(n)?;
    let r = classify(&model, &w, caps)?;
    let g = model.group();
    let nperm = (1..=n).product::<usize>();
    let mut rep = Reproduction::new(format!("Dicke code, n = {n}"));
    rep.check("dim W = n + 1", w.dim() == n + 1, format!("dim W = {}", w.dim()));
    rep.check("weak stabilizer", r.flags.is_weak_stabilizer, detail(&r));
    let contains_sn = (0..nperm).all(|t| r.stabilizer.binary_search(&t).is_ok());
    rep.check("S contains the permutations", contains_sn, format!("|S| = {}", r.stabilizer.len()));
    // |L| < (dim W / dim V)·|G| rules out the Clifford property
    let bound_num = w.dim() * g.order();
    let certified = r.logical.len() * model.dim() < bound_num;
    rep.check(
        "not clifford",
        !r.flags.is_clifford && certified,
        format!("|L| = {}, (dim W/dim V)·|G| = {}", r.logical.len(), bound_num as f64 / model.dim() as f64),
    );
    if n == 2 {
        rep.check(
            "not partitioning",
            !r.flags.is_partitioning && r.witnesses.partitioning.is_some(),
            format!("witness {:?}", r.witnesses.partitioning.map(|x| g.element_name(x))),
        );
    }
    Ok((rep, r))
}

/// The tensor square of the `n = 2` member of the `C₂ × D_{2n}` family.
pub fn prod_example(caps: &Caps) -> Result<(Reproduction, CodeReport)> {
    let fam = family_c2_x_d2n(2, caps)?;
    let w1 = clifford_code(&fam.model, &fam.l, &fam.rho)?;
    let (model, w) = product_code(&fam.model, &w1, &fam.model, &w1, caps)?;
    let r = classify(&model, &w, caps)?;
    let n1 = fam.model.group().order();
    let mut rep = Reproduction::new("product of two C2 x D4 codes");
    let r1 = classify(&fam.model, &w1, caps)?;
    let pairs = |a: &[usize]| {
        let mut v: Vec<usize> = a.iter().flat_map(|&x| a.iter().map(move |&y| x * n1 + y)).collect();
        v.sort_unstable();
        v
    };
    let expected_l = pairs(&r1.logical);
    rep.check(
        "S = S1 x S2",
        r.stabilizer == pairs(&r1.stabilizer),
        format!("|S1| = {}, |S| = {}", r1.stabilizer.len(), r.stabilizer.len()),
    );
    rep.check(
        "L = L1 x L2",
        r.logical == expected_l && r1.logical == fam.l.members() && r.logical.len() == 64,
        format!("|L| = {}", r.logical.len()),
    );
    rep.check("S is trivial", r.stabilizer.len() == 1, format!("|S| = {}", r.stabilizer.len()));
    rep.check(
        "non-stabilizer clifford",
        r.flags.is_clifford && !r.flags.is_stabilizer && !r.flags.is_weak_stabilizer,
        detail(&r),
    );
    rep.check("dim W = 4 in dim V = 16", w.dim() == 4 && model.dim() == 16, format!("dim W = {}", w.dim()));
    Ok((rep, r))
}
