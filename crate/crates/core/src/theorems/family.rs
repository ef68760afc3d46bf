//! Laplacian-equienergetic families built from joins with `K̄_p` and from
//! cartesian products with `K_p`.
//!
//! Every generator builds the composite graphs, computes their Laplacian
//! energy directly and compares it with the closed form. The closed forms are
//! evaluated with the composite's actual average degree `2m'/n'`. Hypothesis
//! arithmetic is done in exact integers.

use serde::Serialize;

use super::report::{ReportBuilder, TheoremReport};
use super::{CheckConfig, TheoremError, TheoremId};
use crate::construct::{
    cartesian_product, double_graph, extended_double_cover, iterated_edc, iterated_edc_order, join, k_fold,
};
use crate::graph::{complete, Graph};
use crate::scalar::Real;
use crate::spectra::{laplacian_energy, laplacian_spectrum, signless_laplacian_spectrum, spectra_equal};

/// Parameters and closed-form value for one composite graph of a family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySpec<T> {
    pub family: TheoremId,
    pub base_order: usize,
    pub base_edges: usize,
    /// Order of the empty join partner `K̄_p`, or of `K_p` for products.
    pub p: usize,
    /// Slack, or the fold count for `D^k[G]` families.
    pub k: Option<usize>,
    /// Iteration depth, or the slack for `D^k[G]` families.
    pub t: Option<usize>,
    pub composite_order: usize,
    pub composite_edges: usize,
    /// `2m'/n'` of the composite.
    pub avg_degree_prime: T,
    pub closed_form_le: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyOutcome<T> {
    pub specs: Vec<FamilySpec<T>>,
    pub report: TheoremReport<T>,
}

/// The two-graph join families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MixedFamily {
    /// `D(G1*) ∨ K̄_p` against `D(G2)* ∨ K̄_p`, `4m2 = 4m1 + n`.
    DoubleCover,
    /// `D(G1*) ∨ K̄_p` against `G2** ∨ K̄_p`, `m2 = 2m1`.
    SecondCover,
    /// `D[G1] ∨ K̄_p` against `G2* ∨ K̄_p`, `4m1 = 2m2 + n`.
    Cross,
}

impl MixedFamily {
    pub fn theorem(self) -> TheoremId {
        match self {
            MixedFamily::DoubleCover => TheoremId::MixedDoubleCover,
            MixedFamily::SecondCover => TheoremId::MixedSecondCover,
            MixedFamily::Cross => TheoremId::CrossFamily,
        }
    }

    pub fn from_theorem(id: TheoremId) -> Option<Self> {
        match id {
            TheoremId::MixedDoubleCover => Some(MixedFamily::DoubleCover),
            TheoremId::MixedSecondCover => Some(MixedFamily::SecondCover),
            TheoremId::CrossFamily => Some(MixedFamily::Cross),
            _ => None,
        }
    }

    /// Smallest partner order `p` allowed for slack `k` and base order `n`.
    fn min_join_size(self, n: usize, k: usize) -> usize {
        match self {
            MixedFamily::DoubleCover | MixedFamily::SecondCover => 4 * n + k,
            MixedFamily::Cross => 2 * n + k,
        }
    }
}

/// Arguments for [`family`]; omitted parameters are filled with the smallest
/// feasible values.
#[derive(Debug, Clone, Copy)]
pub struct FamilyInput<'a> {
    pub graph: &'a Graph,
    pub other: Option<&'a Graph>,
    pub p: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<usize>,
}

impl<'a> FamilyInput<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Self { graph, other: None, p: None, k: None, t: None }
    }
}

/// A confirmed instance of a two-graph family.
#[derive(Debug, Clone)]
pub struct MixedWitness<T> {
    pub first: Graph,
    pub second: Graph,
    pub outcome: FamilyOutcome<T>,
}

fn i(x: usize) -> i128 {
    x as i128
}

fn pow2(t: usize) -> Result<usize, TheoremError> {
    1usize
        .checked_shl(t as u32)
        .filter(|_| t < 40)
        .ok_or_else(|| TheoremError::Parameter(format!("depth {t} is too large")))
}

fn with_empty<T: Real>(g: &Graph, p: usize, cfg: &CheckConfig<T>) -> Result<Graph, TheoremError> {
    cfg.ensure_order(g.n().checked_add(p))?;
    Ok(join(g, &Graph::empty(p)))
}

fn avg_degree<T: Real>(g: &Graph) -> T {
    T::of_usize(2 * g.m()) / T::of_usize(g.n().max(1))
}

fn le<T: Real>(g: &Graph) -> Result<T, TheoremError> {
    Ok(laplacian_energy::<T>(g)?.value)
}

struct Composite<T> {
    graph_order: usize,
    graph_edges: usize,
    avg: T,
    le: T,
}

fn measure<T: Real>(composite: &Graph) -> Result<Composite<T>, TheoremError> {
    Ok(Composite {
        graph_order: composite.n(),
        graph_edges: composite.m(),
        avg: avg_degree(composite),
        le: le(composite)?,
    })
}

#[allow(clippy::too_many_arguments)]
fn spec<T: Real>(
    family: TheoremId,
    base: &Graph,
    p: usize,
    k: Option<usize>,
    t: Option<usize>,
    c: &Composite<T>,
    closed_form_le: T,
) -> FamilySpec<T> {
    FamilySpec {
        family,
        base_order: base.n(),
        base_edges: base.m(),
        p,
        k,
        t,
        composite_order: c.graph_order,
        composite_edges: c.graph_edges,
        avg_degree_prime: c.avg,
        closed_form_le,
    }
}

fn single_outcome<T: Real>(builder: ReportBuilder<T>, s: FamilySpec<T>, computed: T) -> FamilyOutcome<T> {
    let report = builder.predicted([s.closed_form_le]).computed([computed]).finish();
    FamilyOutcome { specs: vec![s], report }
}

/// `G^{t*} ∨ K̄_p` with `LE = 2^t n(t + 2) + (p - 2^t n)2m'/n' + 2^{t+1} m`.
pub fn family_join_edc<T: Real>(
    g: &Graph,
    p: usize,
    t: usize,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    join_edc(TheoremId::JoinIteratedEdcFamily, g, p, t, k, cfg)
}

fn join_edc<T: Real>(
    id: TheoremId,
    g: &Graph,
    p: usize,
    t: usize,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    let (n, m) = (g.n(), g.m());
    let scale = pow2(t)?;
    cfg.ensure_order(iterated_edc_order(n, t).and_then(|v| v.checked_add(p)))?;
    let composite = measure::<T>(&with_empty(&iterated_edc(g, t), p, cfg)?)?;
    let cover_n = scale * n;
    let closed = T::of_usize(cover_n * (t + 2))
        + (T::of_usize(p) - T::of_usize(cover_n)) * composite.avg
        + T::of_usize(2 * scale * m);
    let builder = TheoremReport::builder(id, cfg.eps)
        .condition("t >= 1", t >= 1)
        .condition("k >= t + 2", k >= t + 2)
        .condition("p >= 2^t n + k", p >= cover_n + k)
        .condition(
            "2^(t+1) m <= 2^t (k - t) n + k^2",
            2 * i(scale) * i(m) <= i(scale) * (i(k) - i(t)) * i(n) + i(k) * i(k),
        );
    let s = spec(id, g, p, Some(k), Some(t), &composite, closed);
    Ok(single_outcome(builder, s, composite.le))
}

/// `D^k[G] ∨ K̄_p` with `LE = 2kn + (p - kn)2m'/n' + 2k²m`; `t` is the slack.
pub fn family_join_kfold<T: Real>(
    g: &Graph,
    p: usize,
    k: usize,
    t: usize,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    let (n, m) = (g.n(), g.m());
    if k == 0 {
        return Err(TheoremError::Parameter("k must be at least 1".into()));
    }
    cfg.ensure_order(n.checked_mul(k).and_then(|v| v.checked_add(p)))?;
    let composite = measure::<T>(&with_empty(&k_fold(g, k), p, cfg)?)?;
    let id = TheoremId::JoinKFoldFamily;
    let builder = TheoremReport::builder(id, cfg.eps)
        .condition("k >= 2", k >= 2)
        .condition("t >= 2k", t >= 2 * k)
        .condition("p >= kn + t", p >= k * n + t)
        .condition("2k^2 m <= t(kn + t)", 2 * i(k) * i(k) * i(m) <= i(t) * (i(k) * i(n) + i(t)));
    let closed = kfold_closed_form(n, m, p, k, composite.avg);
    let s = spec(id, g, p, Some(k), Some(t), &composite, closed);
    Ok(single_outcome(builder, s, composite.le))
}

fn kfold_closed_form<T: Real>(n: usize, m: usize, p: usize, k: usize, avg: T) -> T {
    T::of_usize(2 * k * n) + (T::of_usize(p) - T::of_usize(k * n)) * avg + T::of_usize(2 * m * k * k)
}

/// `D[G] ∨ K̄_p` with `LE = 4n + (p - 2n)2m'/n' + 8m`; `k` is the slack.
pub fn family_join_double<T: Real>(
    g: &Graph,
    p: usize,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    let (n, m) = (g.n(), g.m());
    cfg.ensure_order((2 * n).checked_add(p))?;
    let composite = measure::<T>(&with_empty(&double_graph(g), p, cfg)?)?;
    let id = TheoremId::JoinDoubleFamily;
    let builder = TheoremReport::builder(id, cfg.eps)
        .condition("k >= 4", k >= 4)
        .condition("p >= 2n + k", p >= 2 * n + k)
        .condition("8m <= k(2n + k)", 8 * i(m) <= i(k) * (2 * i(n) + i(k)));
    let closed = kfold_closed_form(n, m, p, 2, composite.avg);
    let s = spec(id, g, p, Some(k), None, &composite, closed);
    Ok(single_outcome(builder, s, composite.le))
}

/// Edge count `m2` the second graph must have, given the first graph's
/// order `n` and size `m1`; `None` when the relation has no integer
/// solution.
pub fn partner_edge_count(family: MixedFamily, n: usize, m1: usize) -> Option<usize> {
    match family {
        MixedFamily::DoubleCover => n.is_multiple_of(4).then(|| m1 + n / 4),
        MixedFamily::SecondCover => Some(2 * m1),
        MixedFamily::Cross => {
            let twice = (4 * m1).checked_sub(n)?;
            (twice % 2 == 0).then_some(twice / 2)
        }
    }
}

fn mixed_conditions(
    family: MixedFamily,
    n1: usize,
    n2: usize,
    m1: usize,
    m2: usize,
    p: usize,
    k: usize,
) -> Vec<(&'static str, bool)> {
    let (n, m1, m2, p, k) = (i(n1), i(m1), i(m2), i(p), i(k));
    let mut c = vec![("n1 == n2", n1 == n2)];
    match family {
        MixedFamily::DoubleCover => {
            c.push(("n % 4 == 0", n % 4 == 0));
            c.push(("4 m2 == 4 m1 + n", 4 * m2 == 4 * m1 + n));
            c.push(("p >= 4n + k", p >= 4 * n + k));
            c.push(("16 m2 <= 4n(k - 2) + k^2", 16 * m2 <= 4 * n * (k - 2) + k * k));
        }
        MixedFamily::SecondCover => {
            c.push(("m2 == 2 m1", m2 == 2 * m1));
            c.push(("p >= 4n + k", p >= 4 * n + k));
            c.push(("8 m2 <= k(4n + k) - 8n", 8 * m2 <= k * (4 * n + k) - 8 * n));
        }
        MixedFamily::Cross => {
            c.push(("4 m1 == 2 m2 + n", 4 * m1 == 2 * m2 + n));
            c.push(("p >= 2n + k", p >= 2 * n + k));
            c.push(("8 m1 <= k(2n + k)", 8 * m1 <= k * (2 * n + k)));
            c.push(("4 m2 <= 2n(k - 1) + k^2", 4 * m2 <= 2 * n * (k - 1) + k * k));
        }
    }
    c.push(("k >= 4", k >= 4));
    c
}

/// Builds both composites of a two-graph family and compares each directly
/// computed `LE` with its closed form and with the other.
///
/// `predicted` is `[closed_1, closed_2, LE_1]`, `computed` is
/// `[LE_1, LE_2, LE_2]`, so the last entry certifies equienergeticity.
pub fn family_mixed<T: Real>(
    family: MixedFamily,
    g1: &Graph,
    g2: &Graph,
    p: usize,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    let id = family.theorem();
    let (n1, n2, m1, m2) = (g1.n(), g2.n(), g1.m(), g2.m());
    let inner = match family {
        MixedFamily::Cross => 2,
        _ => 4,
    };
    cfg.ensure_order(n1.max(n2).checked_mul(inner).and_then(|v| v.checked_add(p)))?;
    let (first, second) = match family {
        MixedFamily::DoubleCover => {
            (double_graph(&extended_double_cover(g1)), extended_double_cover(&double_graph(g2)))
        }
        MixedFamily::SecondCover => (double_graph(&extended_double_cover(g1)), iterated_edc(g2, 2)),
        MixedFamily::Cross => (double_graph(g1), extended_double_cover(g2)),
    };
    let h1 = with_empty(&first, p, cfg)?;
    let h2 = with_empty(&second, p, cfg)?;
    let c1 = measure::<T>(&h1)?;
    let c2 = measure::<T>(&h2)?;
    let of = T::of_usize;
    let (closed1, closed2) = match family {
        MixedFamily::DoubleCover => (
            of(16 * n1 + 16 * m1) + (of(p) - of(4 * n1)) * c1.avg,
            of(12 * n2 + 16 * m2) + (of(p) - of(4 * n2)) * c2.avg,
        ),
        MixedFamily::SecondCover => (
            of(16 * n1 + 16 * m1) + (of(p) - of(4 * n1)) * c1.avg,
            of(16 * n2 + 8 * m2) + (of(p) - of(4 * n2)) * c2.avg,
        ),
        MixedFamily::Cross => {
            (of(4 * n1 + 8 * m1) + (of(p) - of(2 * n1)) * c1.avg, of(6 * n2 + 4 * m2) + (of(p) - of(2 * n2)) * c2.avg)
        }
    };
    let cospectral = spectra_equal(&laplacian_spectrum::<T>(&h1), &laplacian_spectrum(&h2), cfg.eps);
    let mut builder = TheoremReport::builder(id, cfg.eps);
    for (name, met) in mixed_conditions(family, n1, n2, m1, m2, p, k) {
        builder = builder.condition(name, met);
    }
    let report = builder
        .predicted([closed1, closed2, c1.le])
        .computed([c1.le, c2.le, c2.le])
        .flag("equienergetic", (c1.le - c2.le).abs() <= cfg.eps)
        .flag("cospectral", cospectral)
        .finish();
    let specs = vec![spec(id, g1, p, Some(k), None, &c1, closed1), spec(id, g2, p, Some(k), None, &c2, closed2)];
    Ok(FamilyOutcome { specs, report })
}

/// `G* × K_p` with `LE = (p - 1)LE(G) + 4pn - 4n`, for both graphs.
///
/// `predicted` is the pair of closed forms and `computed` the pair of direct
/// energies; the flags record both sides of the equivalence
/// `LE(G1) = LE(G2) ⇔ LE(G1* × K_p) = LE(G2* × K_p)`.
pub fn family_cartesian<T: Real>(
    g1: &Graph,
    g2: &Graph,
    p: usize,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    let id = TheoremId::CartesianFamily;
    let (n, m) = (g1.n(), g1.m());
    cfg.ensure_order(n.max(g2.n()).checked_mul(2).and_then(|v| v.checked_mul(p)))?;
    let kp = complete(p);
    let mut specs = Vec::new();
    let mut base_le = Vec::new();
    let mut min_q = T::infinity();
    for g in [g1, g2] {
        let composite = measure::<T>(&cartesian_product(&extended_double_cover(g), &kp))?;
        let base = le::<T>(g)?;
        let gn = g.n();
        let closed = (T::of_usize(p) - T::one()) * base + T::of_usize(4 * p * gn) - T::of_usize(4 * gn);
        min_q = signless_laplacian_spectrum::<T>(g).min().unwrap_or_else(T::zero).min(min_q);
        base_le.push(base);
        specs.push((spec(id, g, p, None, None, &composite, closed), composite.le));
    }
    let avg = T::of_usize(2 * m) / T::of_usize(n.max(1));
    let eps = cfg.eps;
    let report = TheoremReport::builder(id, eps)
        .condition("n1 == n2", n == g2.n())
        .condition("m1 == m2", m == g2.m())
        .condition("connected", g1.is_connected() && g2.is_connected())
        .condition("non-bipartite", !g1.is_bipartite() && !g2.is_bipartite())
        .condition("p >= n + 2", p >= n + 2)
        .condition("min signless eigenvalue >= 2m/n - 2", min_q >= avg - T::two() - eps)
        .predicted(specs.iter().map(|(s, _)| s.closed_form_le))
        .computed(specs.iter().map(|(_, le)| *le))
        .flag("base_le_equal", (base_le[0] - base_le[1]).abs() <= eps)
        .flag("product_le_equal", (specs[0].1 - specs[1].1).abs() <= eps)
        .finish();
    Ok(FamilyOutcome { specs: specs.into_iter().map(|(s, _)| s).collect(), report })
}

/// Smallest slack `k` (and the matching `p = 2^t n + k`) meeting the
/// hypotheses of [`family_join_edc`].
pub fn smallest_join_edc_params(n: usize, m: usize, t: usize) -> Option<(usize, usize)> {
    let scale = 1usize.checked_shl(t as u32).filter(|_| t < 40)?;
    (t + 2..t + 2 + 100_000)
        .find(|&k| 2 * i(scale) * i(m) <= i(scale) * (i(k) - i(t)) * i(n) + i(k) * i(k))
        .map(|k| (k, scale * n + k))
}

/// Smallest slack `t` (and the matching `p = kn + t`) meeting the hypotheses
/// of [`family_join_kfold`] with `k` folds.
pub fn smallest_join_kfold_params(n: usize, m: usize, k: usize) -> Option<(usize, usize)> {
    (2 * k..2 * k + 100_000).find(|&t| 2 * i(k) * i(k) * i(m) <= i(t) * (i(k) * i(n) + i(t))).map(|t| (t, k * n + t))
}

/// Smallest slack `k` and partner order `p` meeting the inequality
/// hypotheses of a two-graph family.
pub fn smallest_mixed_params(family: MixedFamily, n: usize, m1: usize, m2: usize) -> Option<(usize, usize)> {
    (4..100_000)
        .find(|&k| {
            let p = family.min_join_size(n, k);
            mixed_conditions(family, n, n, m1, m2, p, k)
                .iter()
                .filter(|(name, _)| !name.contains("=="))
                .all(|&(_, met)| met)
        })
        .map(|k| (k, family.min_join_size(n, k)))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    Graph::new(n, pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e))
        .expect("pairs are distinct and in range")
}

/// Searches labeled graphs on up to `max_n` vertices (at most 8) for a
/// first graph with at least one edge, pairs it with the lexicographically
/// first graph of the required size, and returns the first confirmed pair
/// of distinct graphs.
pub fn find_mixed_witness<T: Real>(
    family: MixedFamily,
    max_n: usize,
    cfg: &CheckConfig<T>,
) -> Result<Option<MixedWitness<T>>, TheoremError> {
    for n in 1..=max_n.min(8) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 1u64..(1u64 << pairs.len()) {
            let m1 = mask.count_ones() as usize;
            let Some(m2) = partner_edge_count(family, n, m1) else { continue };
            if m2 > pairs.len() {
                continue;
            }
            let Some((k, p)) = smallest_mixed_params(family, n, m1, m2) else { continue };
            if cfg.ensure_order(Some(4 * n + p)).is_err() {
                continue;
            }
            let first = graph_from_mask(n, &pairs, mask);
            let second = Graph::new(n, pairs[..m2].iter().copied()).expect("prefix of distinct pairs");
            if first == second {
                continue;
            }
            let outcome = family_mixed(family, &first, &second, p, k, cfg)?;
            if outcome.report.is_confirmed() {
                return Ok(Some(MixedWitness { first, second, outcome }));
            }
        }
    }
    Ok(None)
}

/// Runs the family generator named by `id`, filling omitted parameters with
/// the smallest feasible values (`t` defaults to 1 for the iterated cover
/// family and the fold count to 2 for the k-fold family).
pub fn family<T: Real>(
    id: TheoremId,
    input: &FamilyInput<'_>,
    cfg: &CheckConfig<T>,
) -> Result<FamilyOutcome<T>, TheoremError> {
    let g = input.graph;
    let (n, m) = (g.n(), g.m());
    let infeasible = || TheoremError::Parameter(format!("no feasible parameters for `{id}` on this graph"));
    match id {
        TheoremId::JoinEdcFamily | TheoremId::JoinIteratedEdcFamily => {
            let t = if id == TheoremId::JoinEdcFamily { 1 } else { input.t.unwrap_or(1) };
            let k = match input.k {
                Some(k) => k,
                None => smallest_join_edc_params(n, m, t).ok_or_else(infeasible)?.0,
            };
            let p = input.p.unwrap_or(pow2(t)? * n + k);
            join_edc(id, g, p, t, k, cfg)
        }
        TheoremId::JoinDoubleFamily => {
            let k = match input.k {
                Some(k) => k,
                None => smallest_join_kfold_params(n, m, 2).ok_or_else(infeasible)?.0,
            };
            family_join_double(g, input.p.unwrap_or(2 * n + k), k, cfg)
        }
        TheoremId::JoinKFoldFamily => {
            let k = input.k.unwrap_or(2);
            let t = match input.t {
                Some(t) => t,
                None => smallest_join_kfold_params(n, m, k).ok_or_else(infeasible)?.0,
            };
            family_join_kfold(g, input.p.unwrap_or(k * n + t), k, t, cfg)
        }
        TheoremId::MixedDoubleCover | TheoremId::MixedSecondCover | TheoremId::CrossFamily => {
            let mixed = MixedFamily::from_theorem(id).expect("mixed family id");
            let other = input.other.ok_or_else(|| TheoremError::Parameter(format!("`{id}` needs a second graph")))?;
            let k = match input.k {
                Some(k) => k,
                None => smallest_mixed_params(mixed, n, m, other.m()).ok_or_else(infeasible)?.0,
            };
            family_mixed(mixed, g, other, input.p.unwrap_or(mixed.min_join_size(n, k)), k, cfg)
        }
        TheoremId::CartesianFamily => family_cartesian(g, input.other.unwrap_or(g), input.p.unwrap_or(n + 2), cfg),
        other => Err(TheoremError::Parameter(format!("`{other}` is not a family generator"))),
    }
}
