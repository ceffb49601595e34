//! Basic subsets, the finite torus subgroups `T(σ)`, bases without broken
//! circuits, and the chamber fan of a matrix.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cone::{ConeH, Fan};
use crate::error::{Error, Result};
use crate::exact::matrix::{rank_of, IntMat, RatMat};
use crate::exact::rat::{dot, frac, fmt_rat, primitive_from_rat, IntVec, Rat};

/// `n` column indices of `A` whose columns form a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicSubset {
    /// Strictly increasing, zero-based.
    pub indices: Vec<usize>,
    /// `|det(a_i : i ∈ σ)|`.
    pub volume: u64,
}

impl BasicSubset {
    pub fn columns(&self, a: &IntMat) -> IntMat {
        a.select_columns(&self.indices)
    }

    /// `A_σ^{-1}`.
    pub fn inverse(&self, a: &IntMat) -> RatMat {
        self.columns(a).to_rat().invert().expect("basic subsets are nonsingular")
    }

    /// The basic cone generated by the columns of `σ`, i.e. `{x : A_σ^{-1} x ≥ 0}`.
    pub fn cone(&self, a: &IntMat) -> ConeH {
        let inv = self.inverse(a);
        let normals: Vec<IntVec> = (0..inv.rows()).map(|i| primitive_from_rat(inv.row(i))).collect();
        ConeH::from_inequalities(a.rows(), &normals).expect("dimensions match")
    }
}

impl fmt::Display for BasicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", one_based.join(","))
    }
}

/// A point of the torus `(R^n)^* / (Z^n)^⊥`, stored with coordinates in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusElement(Vec<Rat>);

impl TorusElement {
    pub fn new(coords: Vec<Rat>) -> Self {
        TorusElement(coords.iter().map(frac).collect())
    }

    pub fn zero(n: usize) -> Self {
        TorusElement(vec![Rat::zero(); n])
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        TorusElement(self.0.iter().zip(&other.0).map(|(a, b)| frac(&(a + b))).collect())
    }

    /// `⟨g, v⟩ mod 1`, in `[0, 1)`.
    pub fn pairing(&self, v: &[BigInt]) -> Rat {
        let s: Rat = self.0.iter().zip(v).map(|(g, x)| g * x).sum();
        frac(&s)
    }

    /// Order in the torus group: the lcm of the coordinate denominators.
    pub fn order(&self) -> u64 {
        self.0
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()))
            .to_u64()
            .expect("torus element order fits in u64")
    }

    /// Image under the transpose of an integer matrix: `x ↦ ⟨g, M x⟩` as a
    /// covector on the source of `M`.
    pub fn pullback(&self, m: &IntMat) -> TorusElement {
        assert_eq!(m.rows(), self.0.len());
        let coords = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .map(|i| &self.0[i] * m.get(i, j))
                    .fold(Rat::zero(), |a, b| a + b)
            })
            .collect();
        TorusElement::new(coords)
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", c.join(", "))
    }
}

fn check_rank(a: &IntMat) -> Result<()> {
    let rank = a.rank();
    if rank < a.rows() {
        return Err(Error::RankDeficient { rank, rows: a.rows() });
    }
    Ok(())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All basic subsets of `A` in lexicographic order.
pub fn enumerate_basic_subsets(a: &IntMat) -> Result<Vec<BasicSubset>> {
    check_rank(a)?;
    Ok(combinations(a.cols(), a.rows())
        .into_iter()
        .filter_map(|idx| {
            let d = a.select_columns(&idx).det();
            if d.is_zero() {
                None
            } else {
                let volume = d.numer().abs().to_u64().expect("volume fits in u64");
                Some(BasicSubset { indices: idx, volume })
            }
        })
        .collect())
}

/// `T(σ)`: the closure of the row classes of `A_σ^{-1}` under addition.
pub fn torus_subgroup(a: &IntMat, sigma: &BasicSubset) -> Result<BTreeSet<TorusElement>> {
    let inv = sigma.inverse(a);
    let gens: Vec<TorusElement> =
        (0..inv.rows()).map(|i| TorusElement::new(inv.row(i).to_vec())).collect();
    let limit = sigma.volume as usize;
    let zero = TorusElement::zero(a.rows());
    let mut seen: BTreeSet<TorusElement> = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(t) = queue.pop_front() {
        for g in &gens {
            let u = t.add(g);
            if seen.insert(u.clone()) {
                if seen.len() > limit {
                    return Err(Error::ClosureOverflow { volume: limit });
                }
                queue.push_back(u);
            }
        }
    }
    Ok(seen)
}

/// `Γ`: the union of all `T(σ)`.
pub fn torus_points(a: &IntMat, subsets: &[BasicSubset]) -> Result<BTreeSet<TorusElement>> {
    let mut gamma = BTreeSet::new();
    for s in subsets {
        let t = torus_subgroup(a, s)?;
        if t.len() != s.volume as usize {
            return Err(Error::ClosureOverflow { volume: s.volume as usize });
        }
        gamma.extend(t);
    }
    Ok(gamma)
}

/// Basic subsets without broken circuits: no prefix `a_{i_1}, …, a_{i_j}`
/// of `σ` has a later column `a_k` (`k > i_j`) in its span.
pub fn enumerate_nbc(a: &IntMat) -> Result<Vec<BasicSubset>> {
    check_rank(a)?;
    let cols = a.columns();
    let n = a.rows();
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(n);

    fn go(cols: &[IntVec], n: usize, prefix: &mut Vec<usize>, a: &IntMat, out: &mut Vec<BasicSubset>) {
        if prefix.len() == n {
            let d = a.select_columns(prefix).det();
            let volume = d.numer().abs().to_u64().expect("volume fits in u64");
            out.push(BasicSubset { indices: prefix.clone(), volume });
            return;
        }
        let start = prefix.last().map_or(0, |&i| i + 1);
        for i in start..cols.len() {
            let mut span: Vec<IntVec> = prefix.iter().map(|&p| cols[p].clone()).collect();
            span.push(cols[i].clone());
            let r = span.len();
            if rank_of(&span) < r {
                continue;
            }
            let broken = (i + 1..cols.len()).any(|k| {
                span.push(cols[k].clone());
                let dependent = rank_of(&span) <= r;
                span.pop();
                dependent
            });
            if broken {
                continue;
            }
            prefix.push(i);
            go(cols, n, prefix, a, out);
            prefix.pop();
        }
    }

    go(&cols, n, &mut prefix, a, &mut out);
    Ok(out)
}

/// The chamber fan of `A` with the basic-subset data attached to each cone.
#[derive(Clone, Debug)]
pub struct ChamberFan {
    pub fan: Fan,
    pub subsets: Vec<BasicSubset>,
    pub basic_cones: Vec<ConeH>,
    /// Per maximal cone: indices into `subsets` of the basic cones containing it.
    pub containing: Vec<Vec<usize>>,
    /// Per maximal cone: `B_nb(C)`, as indices into `subsets`.
    pub nbc: Vec<Vec<usize>>,
}

impl ChamberFan {
    pub fn cones(&self) -> &[ConeH] {
        &self.fan.cones
    }

    pub fn b_nb(&self, cone: usize) -> Vec<&BasicSubset> {
        self.nbc[cone].iter().map(|&i| &self.subsets[i]).collect()
    }
}

fn in_cone(c: &ConeH, p: &[BigInt]) -> bool {
    c.contains_int_point(p)
}

fn on_boundary(c: &ConeH, p: &[BigInt]) -> bool {
    c.normals().iter().any(|n| dot(n, p).is_zero())
}

fn intersection_of(ambient: usize, cones: &[&ConeH]) -> ConeH {
    let normals: Vec<IntVec> = cones.iter().flat_map(|c| c.normals().iter().cloned()).collect();
    ConeH::from_inequalities(ambient, &normals).expect("dimensions match")
}

const SEED: u64 = 0x0005_eed0_f0a5;
const SEED_ATTEMPTS: usize = 64;

/// A point `A w` with `w` strictly positive that lies on no basic-cone hyperplane.
fn generic_point(a: &IntMat, basic: &[ConeH]) -> Result<IntVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..SEED_ATTEMPTS {
        let w: IntVec = (0..a.cols()).map(|_| BigInt::from(rng.gen_range(1..=1_000_000i64))).collect();
        let x = a.mul_vec(&w);
        if basic.iter().all(|c| !on_boundary(c, &x)) {
            return Ok(x);
        }
    }
    Err(Error::DegenerateSeed { attempts: SEED_ATTEMPTS })
}

/// Builds `fan(A)` by breadth-first traversal of the facet-neighbor graph.
///
/// The neighbor of a maximal cone `C` across a facet `f` is the
/// intersection of all basic cones `cone(σ)` with `f ⊆ cone(σ)` that do not
/// have `f` on their boundary whenever they contain `C`. Facets on the
/// boundary of the support have no such basic cones. All membership tests
/// use a relative interior point of `f`.
pub fn build_fan(a: &IntMat, subsets: &[BasicSubset]) -> Result<ChamberFan> {
    check_rank(a)?;
    if subsets.is_empty() {
        return Err(Error::RankDeficient { rank: 0, rows: a.rows() });
    }
    let n = a.rows();
    let basic: Vec<ConeH> = subsets.par_iter().map(|s| s.cone(a)).collect();

    let seed = generic_point(a, &basic)?;
    let seed_cones: Vec<&ConeH> = basic.iter().filter(|c| in_cone(c, &seed)).collect();
    let first = intersection_of(n, &seed_cones);

    let mut cones: Vec<ConeH> = vec![first.clone()];
    let mut index: HashMap<ConeH, usize> = HashMap::from([(first, 0)]);
    let mut adjacency: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut frontier: Vec<usize> = vec![0];

    while !frontier.is_empty() {
        let found: Vec<Vec<ConeH>> = frontier
            .par_iter()
            .map(|&ci| neighbors(&cones[ci], &basic, n))
            .collect();
        let mut next = Vec::new();
        for (&ci, nbrs) in frontier.iter().zip(found) {
            for c in nbrs {
                let j = match index.get(&c) {
                    Some(&j) => j,
                    None => {
                        let j = cones.len();
                        index.insert(c.clone(), j);
                        cones.push(c);
                        next.push(j);
                        j
                    }
                };
                adjacency.insert((ci.min(j), ci.max(j)));
            }
        }
        frontier = next;
    }

    // canonical order
    let mut order: Vec<usize> = (0..cones.len()).collect();
    order.sort_by(|&i, &j| cones[i].cmp(&cones[j]));
    let mut rank = vec![0; cones.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let cones: Vec<ConeH> = order.iter().map(|&i| cones[i].clone()).collect();
    let adjacency = adjacency
        .into_iter()
        .map(|(i, j)| (rank[i].min(rank[j]), rank[i].max(rank[j])))
        .collect();

    let nbc_all = enumerate_nbc(a)?;
    let nbc_index: Vec<usize> = nbc_all
        .iter()
        .map(|s| subsets.iter().position(|t| t.indices == s.indices).expect("NBC sets are basic"))
        .collect();

    let containing: Vec<Vec<usize>> = cones
        .par_iter()
        .map(|c| {
            let p = c.interior_point();
            (0..basic.len()).filter(|&k| in_cone(&basic[k], &p)).collect()
        })
        .collect();

    let mut nbc = Vec::with_capacity(cones.len());
    for (ci, cont) in containing.iter().enumerate() {
        let b: Vec<usize> = nbc_index.iter().copied().filter(|k| cont.contains(k)).collect();
        if b.is_empty() {
            return Err(Error::EmptyNbc { cone: ci });
        }
        nbc.push(b);
    }

    Ok(ChamberFan {
        fan: Fan { cones, adjacency },
        subsets: subsets.to_vec(),
        basic_cones: basic,
        containing,
        nbc,
    })
}

fn neighbors(c: &ConeH, basic: &[ConeH], n: usize) -> Vec<ConeH> {
    let interior = c.interior_point();
    let mut out = Vec::new();
    for normal in c.facet_normals() {
        let p = c.facet_interior_point(normal);
        let selected: Vec<&ConeH> = basic
            .iter()
            .filter(|b| in_cone(b, &p) && !(in_cone(b, &interior) && on_boundary(b, &p)))
            .collect();
        if selected.is_empty() {
            continue;
        }
        let nb = intersection_of(n, &selected);
        debug_assert!(nb.is_full_dimensional());
        out.push(nb);
    }
    out
}

/// `B_nb(C)`: the bases without broken circuits whose cone contains `C`.
pub fn b_nb_for_cone(a: &IntMat, c: &ConeH, nbc: &[BasicSubset]) -> Result<Vec<BasicSubset>> {
    let p = c.interior_point();
    let out: Vec<BasicSubset> = nbc.iter().filter(|s| in_cone(&s.cone(a), &p)).cloned().collect();
    if out.is_empty() {
        return Err(Error::EmptyNbc { cone: 0 });
    }
    Ok(out)
}

/// Whether the cone lies inside `cone(σ)`, decided at an interior point.
pub fn cone_contained_in_basic(c: &ConeH, basic: &ConeH) -> bool {
    in_cone(basic, &c.interior_point())
}

/// Order of the largest element of `Γ`, i.e. the exponent of the group.
pub fn exponent(gamma: &BTreeSet<TorusElement>) -> u64 {
    gamma.iter().fold(1u64, |l, g| l.lcm(&g.order()))
}
