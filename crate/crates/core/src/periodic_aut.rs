//! Automorphism groups of shifts made of finitely many periodic orbits.
//!
//! Such a group is a product of generalized symmetric groups `Z_n ≀ S_m`, one
//! factor per period `n` occurring `m` times.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::block_code::BlockCode;
use crate::error::{Error, Result};
use crate::models::PeriodicShift;
use crate::words::{LanguageTable, Sym};

/// Point limit for [`brute_force_aut`] and [`full_group_intersection`].
pub const BRUTE_FORCE_POINTS: usize = 12;
const GROUP_LIMIT: usize = 5_000_000;

/// `perm[i]` is the image of point `i` (indices from [`PeriodicShift::point_index`]).
pub type PointPermutation = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    /// `(period, multiplicity)` with strictly increasing periods.
    pub factors: Vec<(usize, usize)>,
    pub order: BigUint,
}

impl GroupDescriptor {
    /// `{"factors": [[n, m], ...], "order": ...}`; the order is a number when
    /// it fits in `u64` and a decimal string otherwise.
    pub fn to_json(&self) -> Value {
        let order = match u64::try_from(&self.order) {
            Ok(v) => json!(v),
            Err(_) => json!(self.order.to_string()),
        };
        json!({
            "factors": self.factors.iter().map(|&(n, m)| json!([n, m])).collect::<Vec<_>>(),
            "order": order,
        })
    }
}

/// Orbits fixed setwise, inside the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullGroupReport {
    pub group_order: usize,
    pub order: usize,
    pub abelian: bool,
    pub normal: bool,
    pub quotient_order: usize,
}

impl FullGroupReport {
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "abelian": self.abelian,
            "normal": self.normal,
            "quotient_order": self.quotient_order,
        })
    }
}

pub fn classify(ps: &PeriodicShift) -> Result<GroupDescriptor> {
    ps.to_spec().validate()?;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for p in ps.periods() {
        *counts.entry(p).or_default() += 1;
    }
    let mut order = BigUint::from(1u32);
    for (&n, &m) in &counts {
        order *= BigUint::from(n).pow(m as u32);
        for i in 2..=m {
            order *= BigUint::from(i);
        }
    }
    Ok(GroupDescriptor { factors: counts.into_iter().collect(), order })
}

/// One rotation per orbit, then for each period a phase-wise swap of each
/// pair of consecutive orbits with that period.
pub fn generators(ps: &PeriodicShift) -> Vec<PointPermutation> {
    let n = ps.num_points();
    let identity: PointPermutation = (0..n).collect();
    let mut gens = Vec::new();
    for (i, seed) in ps.orbits.iter().enumerate() {
        let mut g = identity.clone();
        for p in 0..seed.len() {
            g[ps.point_index(i, p)] = ps.point_index(i, (p + 1) % seed.len());
        }
        gens.push(g);
    }
    let mut by_period: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, seed) in ps.orbits.iter().enumerate() {
        by_period.entry(seed.len()).or_default().push(i);
    }
    for (period, orbits) in by_period {
        for pair in orbits.windows(2) {
            let mut g = identity.clone();
            for p in 0..period {
                g[ps.point_index(pair[0], p)] = ps.point_index(pair[1], p);
                g[ps.point_index(pair[1], p)] = ps.point_index(pair[0], p);
            }
            gens.push(g);
        }
    }
    gens
}

pub fn compose_perm(a: &[usize], b: &[usize]) -> PointPermutation {
    b.iter().map(|&i| a[i]).collect()
}

pub fn invert_perm(a: &[usize]) -> PointPermutation {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// The group generated by `gens` on `n` points.
pub fn closure(gens: &[PointPermutation], n: usize) -> Result<BTreeSet<PointPermutation>> {
    let identity: PointPermutation = (0..n).collect();
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose_perm(s, &g);
            if seen.insert(h.clone()) {
                if seen.len() > GROUP_LIMIT {
                    return Err(group_limit());
                }
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

fn group_limit() -> Error {
    Error::SearchBudgetExceeded {
        candidates: format!("more than {GROUP_LIMIT} group elements"),
        budget: GROUP_LIMIT as u64,
    }
}

fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    (0..perm.len())
        .map(|i| {
            let mut j = perm[i];
            let mut len = 1;
            while j != i {
                j = perm[j];
                len += 1;
            }
            len
        })
        .collect()
}

struct Oracle<'a> {
    shift: &'a [usize],
    cycle: Vec<usize>,
}

impl Oracle<'_> {
    /// `f` commutes with the shift wherever both sides are assigned.
    fn consistent(&self, f: &[Option<usize>], x: usize) -> bool {
        let fx = f[x].expect("assigned");
        let forward = f[self.shift[x]].is_none_or(|y| y == self.shift[fx]);
        let pre = self.shift.iter().position(|&s| s == x).expect("bijection");
        let backward = f[pre].is_none_or(|y| self.shift[y] == fx);
        forward && backward
    }

    fn extend(
        &self,
        f: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        x: usize,
        out: &mut Vec<PointPermutation>,
    ) -> bool {
        let n = f.len();
        if x == n {
            out.push(f.iter().map(|v| v.expect("assigned")).collect());
            return out.len() <= GROUP_LIMIT;
        }
        for y in 0..n {
            if used[y] || self.cycle[y] != self.cycle[x] {
                continue;
            }
            f[x] = Some(y);
            used[y] = true;
            let keep_going = !self.consistent(f, x) || self.extend(f, used, x + 1, out);
            used[y] = false;
            f[x] = None;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Every bijection of the point set that commutes with the shift, found by
/// search over point images with period-based pruning. Sorted.
pub fn brute_force_aut(ps: &PeriodicShift) -> Result<Vec<PointPermutation>> {
    let n = ps.num_points();
    if n > BRUTE_FORCE_POINTS {
        return Err(Error::BudgetExceeded { points: n, limit: BRUTE_FORCE_POINTS });
    }
    let shift = ps.shift_permutation();
    let oracle = Oracle { cycle: cycle_lengths(&shift), shift: &shift };
    let firsts: Vec<usize> = (0..n).filter(|&y| oracle.cycle[y] == oracle.cycle[0]).collect();
    let parts: Vec<Option<Vec<PointPermutation>>> = firsts
        .par_iter()
        .map(|&y| {
            let mut f = vec![None; n];
            let mut used = vec![false; n];
            f[0] = Some(y);
            used[y] = true;
            let mut out = Vec::new();
            if oracle.consistent(&f, 0) && !oracle.extend(&mut f, &mut used, 1, &mut out) {
                return None;
            }
            Some(out)
        })
        .collect();
    let mut all = Vec::new();
    for part in parts {
        all.extend(part.ok_or_else(group_limit)?);
        if all.len() > GROUP_LIMIT {
            return Err(group_limit());
        }
    }
    all.sort();
    Ok(all)
}

/// The orbit-preserving automorphisms: order, commutativity, normality and index.
pub fn full_group_intersection(ps: &PeriodicShift) -> Result<FullGroupReport> {
    let group = brute_force_aut(ps)?;
    let orbit_of: Vec<usize> = ps.points().into_iter().map(|(i, _)| i).collect();
    let sub: Vec<&PointPermutation> =
        group.iter().filter(|g| g.iter().enumerate().all(|(x, &y)| orbit_of[x] == orbit_of[y])).collect();
    let members: BTreeSet<&PointPermutation> = sub.iter().copied().collect();
    let abelian = sub.iter().all(|a| sub.iter().all(|b| compose_perm(a, b) == compose_perm(b, a)));
    let normal = group.iter().all(|g| {
        let gi = invert_perm(g);
        sub.iter().all(|h| members.contains(&compose_perm(g, &compose_perm(h, &gi))))
    });
    Ok(FullGroupReport {
        group_order: group.len(),
        order: sub.len(),
        abelian,
        normal,
        quotient_order: group.len() / sub.len(),
    })
}

/// The smallest-range block code on `table` acting on points as `perm`.
pub fn as_block_code(ps: &PeriodicShift, perm: &[usize], table: &LanguageTable) -> Result<BlockCode> {
    if table.alphabet() != &ps.alphabet {
        return Err(Error::TableMismatch);
    }
    let points = ps.points();
    for r in 0..=(table.max_n().saturating_sub(1) / 2) {
        let mut rule: BTreeMap<Vec<Sym>, Sym> = BTreeMap::new();
        let mut ok = true;
        for (x, &(i, p)) in points.iter().enumerate() {
            let window: Vec<Sym> = (-(r as i64)..=r as i64).map(|k| ps.symbol_at(i, p, k)).collect();
            let (ti, tp) = points[perm[x]];
            let out = ps.symbol_at(ti, tp, 0);
            if *rule.entry(window).or_insert(out) != out {
                ok = false;
                break;
            }
        }
        if ok {
            let outputs = table
                .level(2 * r + 1)
                .iter()
                .map(|w| rule.get(w.as_slice()).copied().ok_or(Error::TableMismatch))
                .collect::<Result<Vec<_>>>()?;
            return BlockCode::from_outputs(table, r, outputs);
        }
    }
    Err(Error::DepthExceeded { needed: 2 * ps.lcm_period() + 1, max_n: table.max_n() })
}

/// The point permutation a code induces, or `None` if some image is not a point.
pub fn code_to_permutation(ps: &PeriodicShift, code: &BlockCode) -> Option<PointPermutation> {
    let r = code.range() as i64;
    let l = ps.lcm_period() as i64;
    let points = ps.points();
    let images: Vec<Vec<Sym>> = points.iter().map(|&(i, p)| (0..l).map(|k| ps.symbol_at(i, p, k)).collect()).collect();
    points
        .iter()
        .map(|&(i, p)| {
            let window: Vec<Sym> = (-r..l + r).map(|k| ps.symbol_at(i, p, k)).collect();
            let image = code.apply_to_word(&window).ok()?;
            images.iter().position(|w| *w == image.0)
        })
        .collect()
}

/// The involution of the `doubling-pair` shift that exchanges the two copies
/// of the orbit of period `2^m` and fixes every other point. Its range is `2^m`:
/// a window is swapped exactly when it holds two consecutive `1`-symbols
/// `2^m` apart.
pub fn doubling_swap_code(table: &LanguageTable, m: usize) -> Result<BlockCode> {
    let half = table.alphabet().len() / 2;
    let is_one = |s: Sym| s as usize % half == 1;
    let gap = 1usize << m;
    BlockCode::from_fn(table, gap, |w| {
        let ones: Vec<usize> = (0..w.len()).filter(|&i| is_one(w[i])).collect();
        let swap = ones.windows(2).any(|p| p[1] - p[0] == gap);
        let c = w[gap];
        if swap {
            ((c as usize + half) % (2 * half)) as Sym
        } else {
            c
        }
    })
}
